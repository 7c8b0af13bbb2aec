//! The ring R = Hom(G, Z(G)).
//!
//! Every homomorphism from G into its center kills the derived subgroup,
//! so R ≅ Hom(G/G′, Z(G)) and an element is a d₁×d integer matrix sending
//! source coordinates (a basis of G/G′, orders p^{a₁..a_d}) to target
//! coordinates (a basis of Z(G), orders p^{b₁..b_{d₁}}). Entry (j,i) is
//! reduced mod p^{b_j} and must be divisible by p^{max(0, b_j − a_i)} —
//! exactly the condition for the basis images to have legal orders.
//!
//! Addition is pointwise in Z(G); multiplication is composition in the
//! order (xy)(g) = y(x(g)). The only place the embedding Z(G) ↪ G enters
//! is the connecting matrix C, which records the G/G′-coordinates of each
//! target basis element; composition is mat(y)·C·mat(x) with row-wise
//! reduction.

use crate::abelian::{decompose, hom_shape, AbelianDecomp};
use crate::error::{Error, Result};
use crate::group::{center, derived_subgroup, quotient, CayleyGroup, Subgroup};
use crate::ring::{FiniteRing, RING_ENUM_CAP};
use std::sync::atomic::{AtomicU32, Ordering};

static NEXT_RING_ID: AtomicU32 = AtomicU32::new(1);

#[derive(Debug, Clone)]
pub struct HomRing {
    ring_id: u32,
    prime: Option<u64>,
    d: usize,
    d1: usize,
    source_exps: Vec<u32>,
    target_exps: Vec<u32>,
    source_orders: Vec<u64>,
    target_orders: Vec<u64>,
    /// Required divisor of entry (j,i): p^{max(0, b_j − a_i)}.
    mask_step: Vec<u64>,
    /// connect[i*d1 + j] = source coordinate i of the j-th target basis
    /// element, reduced mod p^{a_i}.
    connect: Vec<u64>,
    /// Source coordinates of every group element (index by element).
    proj_coords: Vec<Vec<u64>>,
    /// A preimage in G of each source basis element.
    source_reps: Vec<u16>,
    source: AbelianDecomp,
    target: AbelianDecomp,
    group_order: usize,
    size: u128,
}

/// One homomorphism G → Z(G), as its reduced coordinate matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem {
    ring_id: u32,
    mat: Vec<u64>,
}

impl RingElem {
    pub fn matrix(&self) -> &[u64] {
        &self.mat
    }
}

/// Builds Hom(G, Z(G)) for a group whose abelianization and center are
/// p-primary over a common prime (any p-group qualifies; either side may
/// be trivial).
pub fn build_hom_ring(group: &CayleyGroup) -> Result<HomRing> {
    let as_mixed = |e: Error| match e {
        Error::NotPGroup(..) => Error::MixedPrimes("build_hom_ring"),
        other => other,
    };
    let z = center(group);
    let target = decompose(group, &z).map_err(as_mixed)?;
    let derived = derived_subgroup(group);
    let (q, proj) = quotient(group, &derived)?;
    let source = decompose(&q, &Subgroup::whole(&q)).map_err(as_mixed)?;

    let prime = match (source.prime(), target.prime()) {
        (Some(p), Some(r)) if p != r => return Err(Error::MixedPrimes("build_hom_ring")),
        (p, r) => p.or(r).map(|x| x as u64),
    };

    let d = source.rank();
    let d1 = target.rank();
    let source_exps = source.exps().to_vec();
    let target_exps = target.exps().to_vec();
    let source_orders = source.orders().to_vec();
    let target_orders = target.orders().to_vec();

    let p = prime.unwrap_or(2);
    let mut mask_step = vec![1u64; d1 * d];
    for j in 0..d1 {
        for i in 0..d {
            let gap = target_exps[j].saturating_sub(source_exps[i]);
            mask_step[j * d + i] = p.pow(gap);
        }
    }

    let mut connect = vec![0u64; d * d1];
    for (j, &zb) in target.basis().iter().enumerate() {
        let qc = source.coords(proj[zb as usize]);
        for i in 0..d {
            connect[i * d1 + j] = qc[i];
        }
    }

    let proj_coords: Vec<Vec<u64>> = (0..group.order())
        .map(|g| source.coords(proj[g]).to_vec())
        .collect();

    let mut source_reps = vec![0u16; d];
    for (i, &qb) in source.basis().iter().enumerate() {
        source_reps[i] = group
            .elements()
            .find(|&g| proj[g as usize] == qb)
            .expect("projection is surjective");
    }

    let (_, _, size) = hom_shape(&source, &target)?;

    Ok(HomRing {
        ring_id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
        prime,
        d,
        d1,
        source_exps,
        target_exps,
        source_orders,
        target_orders,
        mask_step,
        connect,
        proj_coords,
        source_reps,
        source,
        target,
        group_order: group.order(),
        size,
    })
}

impl HomRing {
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn source_dim(&self) -> usize {
        self.d
    }

    pub fn target_dim(&self) -> usize {
        self.d1
    }

    pub fn source_exps(&self) -> &[u32] {
        &self.source_exps
    }

    pub fn target_exps(&self) -> &[u32] {
        &self.target_exps
    }

    pub fn source_orders(&self) -> &[u64] {
        &self.source_orders
    }

    pub fn target_orders(&self) -> &[u64] {
        &self.target_orders
    }

    pub fn connect(&self) -> &[u64] {
        &self.connect
    }

    pub fn source(&self) -> &AbelianDecomp {
        &self.source
    }

    pub fn target(&self) -> &AbelianDecomp {
        &self.target
    }

    pub fn source_reps(&self) -> &[u16] {
        &self.source_reps
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn belongs(&self, x: &RingElem) -> bool {
        x.ring_id == self.ring_id
    }

    /// exp(R⁺) as a power of p: p^{min(a₁, b₁)}.
    pub fn additive_exponent_exp(&self) -> u32 {
        match (self.source_exps.first(), self.target_exps.first()) {
            (Some(&a), Some(&b)) => a.min(b),
            _ => 0,
        }
    }

    /// Validates range and divisibility mask and wraps a matrix.
    pub fn elem_from_mat(&self, mat: Vec<u64>) -> Result<RingElem> {
        if mat.len() != self.d1 * self.d {
            return Err(Error::Precondition(format!(
                "matrix has {} entries, expected {}",
                mat.len(),
                self.d1 * self.d
            )));
        }
        for j in 0..self.d1 {
            for i in 0..self.d {
                let v = mat[j * self.d + i];
                if v >= self.target_orders[j] {
                    return Err(Error::Precondition(format!(
                        "entry ({},{}) = {} not reduced mod {}",
                        j, i, v, self.target_orders[j]
                    )));
                }
                if !v.is_multiple_of(self.mask_step[j * self.d + i]) {
                    return Err(Error::Precondition(format!(
                        "entry ({},{}) = {} violates the divisibility constraint (must be ≡ 0 mod {})",
                        j, i, v, self.mask_step[j * self.d + i]
                    )));
                }
            }
        }
        Ok(RingElem {
            ring_id: self.ring_id,
            mat,
        })
    }

    pub fn satisfies_mask(&self, mat: &[u64]) -> bool {
        (0..self.d1 * self.d).all(|t| {
            mat[t].is_multiple_of(self.mask_step[t]) && mat[t] < self.target_orders[t / self.d]
        })
    }

    /// Evaluates the homomorphism at a group element, returning an
    /// element of Z(G).
    pub fn apply(&self, h: &RingElem, g: u16) -> u16 {
        assert!(self.belongs(h), "elements belong to different rings");
        let c = &self.proj_coords[g as usize];
        let t: Vec<u64> = (0..self.d1)
            .map(|j| {
                let acc: u64 = c
                    .iter()
                    .enumerate()
                    .map(|(i, &ci)| {
                        h.mat[j * self.d + i] % self.target_orders[j] * (ci % self.source_orders[i])
                    })
                    .sum();
                acc % self.target_orders[j]
            })
            .collect();
        self.target.elem_of_coords(&t)
    }

    /// Raw composition of (possibly non-canonical) lift matrices:
    /// mat(y)·C·mat(x), reduced row-wise at the end. The divisibility
    /// constraints make the result independent of the lift choice.
    pub fn compose_mats(&self, xmat: &[u64], ymat: &[u64]) -> Vec<u64> {
        let (d, d1) = (self.d, self.d1);
        // yc[j][l] = Σ_k y[j,k]·C[k,l], reduced mod the j-th target order.
        let mut yc = vec![0u64; d1 * d1];
        for j in 0..d1 {
            for l in 0..d1 {
                let mut acc = 0u64;
                for k in 0..d {
                    acc += ymat[j * d + k] % self.target_orders[j]
                        * (self.connect[k * d1 + l] % self.source_orders[k]);
                }
                yc[j * d1 + l] = acc % self.target_orders[j];
            }
        }
        let mut out = vec![0u64; d1 * d];
        for j in 0..d1 {
            for i in 0..d {
                let mut acc = 0u64;
                for l in 0..d1 {
                    acc += yc[j * d1 + l] * (xmat[l * d + i] % self.target_orders[l]);
                }
                out[j * d + i] = acc % self.target_orders[j];
            }
        }
        out
    }
}

impl FiniteRing for HomRing {
    type Elem = RingElem;

    fn size(&self) -> u128 {
        self.size
    }

    fn elements(&self) -> Vec<RingElem> {
        assert!(
            self.size <= RING_ENUM_CAP as u128,
            "ring of size {} exceeds the enumeration cap",
            self.size
        );
        let cells = self.d1 * self.d;
        let counts: Vec<u64> = (0..cells)
            .map(|t| self.target_orders[t / self.d] / self.mask_step[t])
            .collect();
        let mut out = Vec::with_capacity(self.size as usize);
        let mut digits = vec![0u64; cells];
        loop {
            let mat: Vec<u64> = (0..cells).map(|t| digits[t] * self.mask_step[t]).collect();
            out.push(RingElem {
                ring_id: self.ring_id,
                mat,
            });
            let mut t = cells;
            loop {
                if t == 0 {
                    return out;
                }
                t -= 1;
                digits[t] += 1;
                if digits[t] < counts[t] {
                    break;
                }
                digits[t] = 0;
            }
        }
    }

    fn zero(&self) -> RingElem {
        RingElem {
            ring_id: self.ring_id,
            mat: vec![0; self.d1 * self.d],
        }
    }

    fn add(&self, x: &RingElem, y: &RingElem) -> RingElem {
        assert!(
            self.belongs(x) && self.belongs(y),
            "elements belong to different rings"
        );
        let mat = (0..self.d1 * self.d)
            .map(|t| (x.mat[t] + y.mat[t]) % self.target_orders[t / self.d])
            .collect();
        RingElem {
            ring_id: self.ring_id,
            mat,
        }
    }

    fn neg(&self, x: &RingElem) -> RingElem {
        assert!(self.belongs(x), "elements belong to different rings");
        let mat = (0..self.d1 * self.d)
            .map(|t| {
                let m = self.target_orders[t / self.d];
                (m - x.mat[t] % m) % m
            })
            .collect();
        RingElem {
            ring_id: self.ring_id,
            mat,
        }
    }

    fn mul(&self, x: &RingElem, y: &RingElem) -> RingElem {
        assert!(
            self.belongs(x) && self.belongs(y),
            "elements belong to different rings"
        );
        let mat = self.compose_mats(&x.mat, &y.mat);
        debug_assert!(self.satisfies_mask(&mat));
        RingElem {
            ring_id: self.ring_id,
            mat,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::ring::{is_radical, nilpotency_class, power_subring};

    fn whole_identity_hom(ring: &HomRing, group: &CayleyGroup) -> RingElem {
        // For abelian G (Z = G) the identity map is a ring element.
        let mut mat = vec![0u64; ring.target_dim() * ring.source_dim()];
        for (i, &rep) in ring.source_reps().iter().enumerate() {
            let c = ring.target().coords(rep);
            for j in 0..ring.target_dim() {
                mat[j * ring.source_dim() + i] = c[j];
            }
        }
        let _ = group;
        ring.elem_from_mat(mat).unwrap()
    }

    #[test]
    fn end_of_z3_is_the_field() {
        let g = make_group("abelian:3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(r.size(), 3);
        let one = whole_identity_hom(&r, &g);
        // one is a multiplicative identity.
        for x in r.elements() {
            assert_eq!(r.mul(&one, &x), x);
            assert_eq!(r.mul(&x, &one), x);
        }
        let (rad, wit) = is_radical(&r, 4096, RING_ENUM_CAP).unwrap();
        assert!(!rad);
        assert_eq!(wit.unwrap(), one);
        // 1 has additive order 3 and 1·1 ≠ 0.
        assert!(!crate::ring::is_left_p_nil(&r, 3, RING_ENUM_CAP).unwrap());
        assert!(!crate::ring::is_right_p_nil(&r, 3, RING_ENUM_CAP).unwrap());
    }

    #[test]
    fn heisenberg_ring_is_nine_with_zero_products() {
        let g = make_group("heisenberg:3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(r.size(), 9);
        assert!(r.connect().iter().all(|&c| c == 0));
        for x in r.elements() {
            for y in r.elements() {
                assert!(r.is_zero(&r.mul(&x, &y)));
            }
        }
        assert_eq!(nilpotency_class(&r, RING_ENUM_CAP).unwrap(), Some(1));
        assert_eq!(power_subring(&r, 2, RING_ENUM_CAP).unwrap().len(), 1);
        let (rad, _) = is_radical(&r, 4096, RING_ENUM_CAP).unwrap();
        assert!(rad);
    }

    #[test]
    fn product_ring_has_size_729() {
        let g = make_group("product(cyclic:3,heisenberg:3)").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(r.size(), 729);
        let (rad, wit) = is_radical(&r, 4096, RING_ENUM_CAP).unwrap();
        assert!(!rad);
        let e = wit.unwrap();
        assert_eq!(r.mul(&e, &e), e);
        assert!(!r.is_zero(&e));
    }

    #[test]
    fn zero_ring_for_trivial_group() {
        let g = make_group("cyclic:1").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(r.size(), 1);
        assert_eq!(nilpotency_class(&r, RING_ENUM_CAP).unwrap(), Some(0));
    }

    #[test]
    fn add_neg_and_zero() {
        let g = make_group("dihedral:8").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(r.size(), 4);
        for x in r.elements() {
            assert!(r.is_zero(&r.add(&x, &r.neg(&x))));
            assert_eq!(r.add(&x, &r.zero()), x);
        }
    }

    #[test]
    fn apply_is_a_homomorphism_constant_on_derived_cosets() {
        for spec in ["heisenberg:3", "modular:3", "dihedral:8", "abelian:9,3"] {
            let g = make_group(spec).unwrap();
            let r = build_hom_ring(&g).unwrap();
            let derived = derived_subgroup(&g);
            let z = center(&g);
            for h in r.elements() {
                for x in g.elements() {
                    let hx = r.apply(&h, x);
                    assert!(z.contains(hx), "{spec}: image must be central");
                    for &dd in derived.members() {
                        assert_eq!(r.apply(&h, g.mul(x, dd)), hx, "{spec}: factors through G′");
                    }
                    for y in g.elements() {
                        assert_eq!(
                            r.apply(&h, g.mul(x, y)),
                            g.mul(hx, r.apply(&h, y)),
                            "{spec}: homomorphism law"
                        );
                    }
                }
                assert_eq!(r.apply(&r.zero(), g.identity()), g.identity());
            }
        }
    }

    #[test]
    fn multiplication_matches_pointwise_composition() {
        for spec in ["heisenberg:3", "abelian:9,3", "dihedral:8", "abelian:3,3"] {
            let g = make_group(spec).unwrap();
            let r = build_hom_ring(&g).unwrap();
            let elems = r.elements();
            for x in &elems {
                for y in &elems {
                    let xy = r.mul(x, y);
                    for gg in g.elements() {
                        // (xy)(g) = y(x(g)).
                        assert_eq!(r.apply(&xy, gg), r.apply(y, r.apply(x, gg)), "{spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn addition_is_pointwise_product_in_center() {
        let g = make_group("modular:3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        for x in r.elements() {
            for y in r.elements() {
                let s = r.add(&x, &y);
                for gg in g.elements() {
                    assert_eq!(r.apply(&s, gg), g.mul(r.apply(&x, gg), r.apply(&y, gg)));
                }
            }
        }
    }

    #[test]
    fn matrix_representation_is_faithful() {
        let g = make_group("abelian:9,3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        assert_eq!(elems.len() as u128, r.size());
        for (a, x) in elems.iter().enumerate() {
            for y in elems.iter().skip(a + 1) {
                assert!(
                    g.elements().any(|gg| r.apply(x, gg) != r.apply(y, gg)),
                    "distinct matrices must give distinct maps"
                );
            }
        }
    }

    #[test]
    fn lift_perturbation_does_not_change_products() {
        let g = make_group("abelian:9,3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        let d = r.source_dim();
        for (s, x) in elems.iter().enumerate() {
            let y = &elems[(7 * s + 3) % elems.len()];
            let reference = r.compose_mats(x.matrix(), y.matrix());
            // Lift every entry by a row-modulus multiple.
            let lift = |mat: &[u64], salt: u64| -> Vec<u64> {
                mat.iter()
                    .enumerate()
                    .map(|(t, &v)| v + r.target_orders()[t / d] * ((salt + t as u64) % 5))
                    .collect()
            };
            assert_eq!(
                r.compose_mats(&lift(x.matrix(), s as u64), y.matrix()),
                reference
            );
            assert_eq!(
                r.compose_mats(x.matrix(), &lift(y.matrix(), s as u64 + 1)),
                reference
            );
        }
    }

    #[test]
    fn ring_axioms_hold_on_sampled_triples() {
        let g = make_group("product(cyclic:3,heisenberg:3)").unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        let n = elems.len();
        let pick = |k: usize| &elems[(k * 131 + 17) % n];
        for t in 0..200 {
            let (x, y, z) = (pick(t), pick(3 * t + 1), pick(5 * t + 2));
            assert_eq!(r.mul(&r.mul(x, y), z), r.mul(x, &r.mul(y, z)));
            assert_eq!(r.add(&r.add(x, y), z), r.add(x, &r.add(y, z)));
            assert_eq!(r.add(x, y), r.add(y, x));
            assert_eq!(r.mul(&r.add(x, y), z), r.add(&r.mul(x, z), &r.mul(y, z)));
            assert_eq!(r.mul(x, &r.add(y, z)), r.add(&r.mul(x, y), &r.mul(x, z)));
        }
    }

    #[test]
    fn elements_respect_mask_and_count() {
        for spec in ["abelian:9,3", "modular:3", "product(cyclic:2,dihedral:8)"] {
            let g = make_group(spec).unwrap();
            let r = build_hom_ring(&g).unwrap();
            let elems = r.elements();
            assert_eq!(elems.len() as u128, r.size(), "{spec}");
            for e in &elems {
                assert!(r.satisfies_mask(e.matrix()), "{spec}");
            }
        }
    }

    #[test]
    fn omega_torsion_size_matches_mask_arithmetic() {
        // End(Z₉×Z₃): entry (j,i) contributes p^{min(n, a_i, b_j)}
        // elements to Ω_n.
        let g = make_group("abelian:9,3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(r.source_orders(), &[9, 3]);
        assert_eq!(r.target_orders(), &[9, 3]);
        let by_scan = crate::ring::omega_ideal(&r, 3, 1, RING_ENUM_CAP)
            .unwrap()
            .len();
        let by_mask: u64 = r
            .target_exps()
            .iter()
            .flat_map(|&b| {
                r.source_exps()
                    .iter()
                    .map(move |&a| 3u64.pow(1.min(a).min(b)))
            })
            .product();
        assert_eq!(by_scan as u64, by_mask);
        assert_eq!(by_scan, 81);
    }

    #[test]
    fn representation_is_faithful_and_respects_ops_exhaustively() {
        // The largest corpus ring (729 elements): the map from matrices
        // to functions G → Z(G) is injective and turns add into
        // pointwise product and mul into composition, on all pairs.
        let g = make_group("product(cyclic:3,heisenberg:3)").unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        let n = g.order();
        let tables: Vec<Vec<u16>> = elems
            .iter()
            .map(|h| g.elements().map(|x| r.apply(h, x)).collect())
            .collect();
        let distinct: std::collections::HashSet<&Vec<u16>> = tables.iter().collect();
        assert_eq!(distinct.len(), elems.len());
        let index: std::collections::HashMap<&RingElem, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                let prod = index[&r.mul(x, y)];
                let sum = index[&r.add(x, y)];
                for gi in 0..n {
                    assert_eq!(tables[prod][gi], tables[b][tables[a][gi] as usize] as u16);
                    assert_eq!(tables[sum][gi], g.mul(tables[a][gi], tables[b][gi]));
                }
            }
        }
    }

    #[test]
    fn elem_from_mat_validates() {
        let g = make_group("cyclic:9").unwrap();
        // End(Z₉): source [9], target [9]; no constraint beyond range.
        let r = build_hom_ring(&g).unwrap();
        assert!(r.elem_from_mat(vec![4]).is_ok());
        assert!(r.elem_from_mat(vec![9]).is_err());
        assert!(r.elem_from_mat(vec![1, 2]).is_err());
    }

    #[test]
    fn ring_mismatch_detected() {
        let g1 = make_group("cyclic:3").unwrap();
        let g2 = make_group("cyclic:3").unwrap();
        let r1 = build_hom_ring(&g1).unwrap();
        let r2 = build_hom_ring(&g2).unwrap();
        let x = r2.zero();
        assert!(!r1.belongs(&x));
    }

    #[test]
    fn mixed_prime_abelianization_rejected() {
        let g = make_group("cyclic:6").unwrap();
        assert!(matches!(build_hom_ring(&g), Err(Error::MixedPrimes(_))));
    }
}
