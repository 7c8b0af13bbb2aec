//! Primary decomposition of finite abelian p-groups.
//!
//! A decomposition fixes a basis b₁,…,b_r of orders p^{a₁} ≥ … ≥ p^{a_r}
//! and the coordinate bijection A ≅ ∏ Z_{p^{a_i}}. Coordinates are
//! precomputed for every member at decomposition time, so later
//! homomorphism evaluation is a few modular dot products.

use crate::error::{Error, Result};
use crate::group::{log_exact, prime_power_base, CayleyGroup, Subgroup};
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct AbelianDecomp {
    parent: Subgroup,
    prime: Option<u32>,
    /// Exponents a₁ ≥ … ≥ a_r (orders are p^{a_i}).
    exps: Vec<u32>,
    /// Cyclic orders p^{a_i}, descending.
    orders: Vec<u64>,
    basis: Vec<u16>,
    coords: HashMap<u16, Vec<u64>>,
    elem_of: HashMap<Vec<u64>, u16>,
}

impl AbelianDecomp {
    pub fn parent(&self) -> &Subgroup {
        &self.parent
    }

    /// The prime, or `None` for the trivial (empty) decomposition.
    pub fn prime(&self) -> Option<u32> {
        self.prime
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn basis(&self) -> &[u16] {
        &self.basis
    }

    pub fn group_order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// exp(A) = p^{a₁}, or 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.orders.first().copied().unwrap_or(1)
    }

    pub fn coords(&self, x: u16) -> &[u64] {
        &self.coords[&x]
    }

    pub fn elem_of_coords(&self, v: &[u64]) -> u16 {
        let reduced: Vec<u64> = v.iter().zip(&self.orders).map(|(c, o)| c % o).collect();
        self.elem_of[&reduced]
    }
}

/// Decomposes an abelian p-subgroup into cyclic factors of descending
/// order.
///
/// The invariant type is read off the element-order statistics; a basis
/// realizing it is then found by depth-first search over elements of the
/// exact target orders, accepting a candidate only when the closure size
/// certifies independence.
pub fn decompose(group: &CayleyGroup, sub: &Subgroup) -> Result<AbelianDecomp> {
    if sub.parent_order() != group.order() {
        return Err(Error::Precondition(
            "subgroup does not belong to this group".into(),
        ));
    }
    if !sub.is_abelian(group) {
        return Err(Error::NotAbelian("decompose"));
    }
    if sub.is_trivial() {
        let mut elem_of = HashMap::new();
        elem_of.insert(Vec::new(), group.identity());
        let mut coords = HashMap::new();
        coords.insert(group.identity(), Vec::new());
        return Ok(AbelianDecomp {
            parent: sub.clone(),
            prime: None,
            exps: Vec::new(),
            orders: Vec::new(),
            basis: Vec::new(),
            coords,
            elem_of,
        });
    }
    let p = prime_power_base(sub.len()).ok_or(Error::NotPGroup("decompose", sub.len()))? as usize;

    // Invariant type from order statistics: the number of a_i ≥ k is
    // log_p of #{x : x^{p^k} = e} / #{x : x^{p^{k-1}} = e}.
    let ord_of: HashMap<u16, usize> = sub
        .members()
        .iter()
        .map(|&x| (x, group.element_order(x)))
        .collect();
    let max_exp = {
        let m = *ord_of.values().max().unwrap();
        log_exact(m, p).expect("element order divides the p-power group order")
    };
    // m_k = #{i : a_i ≥ k} = log_p (n_k / n_{k−1}) with n_k = #{x : x^{p^k} = e};
    // the number of factors with a_i exactly k is m_k − m_{k+1}.
    let mut layer = vec![0u32; max_exp as usize + 2];
    let mut prev = 1usize;
    for k in 1..=max_exp {
        let pk = (p as u64).pow(k) as usize;
        let cur = ord_of.values().filter(|&&o| pk.is_multiple_of(o)).count();
        layer[k as usize] = log_exact(cur / prev, p).expect("torsion layer is a p-power");
        prev = cur;
    }
    let mut exps: Vec<u32> = Vec::new();
    for k in (1..=max_exp).rev() {
        for _ in 0..layer[k as usize].saturating_sub(layer[k as usize + 1]) {
            exps.push(k);
        }
    }

    // Depth-first basis search with closure-size certification.
    let target_sizes: Vec<usize> = {
        let mut acc = 1usize;
        exps.iter()
            .map(|&a| {
                acc *= p.pow(a);
                acc
            })
            .collect()
    };
    let mut basis: Vec<u16> = Vec::new();
    if !search_basis(group, sub, &ord_of, p, &exps, &target_sizes, &mut basis) {
        return Err(Error::Precondition(
            "no basis realizes the invariant type".into(),
        ));
    }

    // Discrete logarithms by exhaustive enumeration of coordinate tuples.
    let orders: Vec<u64> = exps.iter().map(|&a| (p as u64).pow(a)).collect();
    let mut coords = HashMap::with_capacity(sub.len());
    let mut elem_of = HashMap::with_capacity(sub.len());
    let r = basis.len();
    let mut tuple = vec![0u64; r];
    loop {
        let mut x = group.identity();
        for (i, &b) in basis.iter().enumerate() {
            x = group.mul(x, group.pow(b, tuple[i] as usize));
        }
        let prev = elem_of.insert(tuple.clone(), x);
        debug_assert!(prev.is_none(), "coordinate map must be injective");
        coords.insert(x, tuple.clone());
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(AbelianDecomp {
                    parent: sub.clone(),
                    prime: Some(p as u32),
                    exps,
                    orders,
                    basis,
                    coords,
                    elem_of,
                });
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < orders[i] {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn search_basis(
    group: &CayleyGroup,
    sub: &Subgroup,
    ord_of: &HashMap<u16, usize>,
    p: usize,
    exps: &[u32],
    target_sizes: &[usize],
    basis: &mut Vec<u16>,
) -> bool {
    let k = basis.len();
    if k == exps.len() {
        return true;
    }
    let want_order = p.pow(exps[k]);
    for &x in sub.members() {
        if ord_of[&x] != want_order {
            continue;
        }
        basis.push(x);
        if group.closure(basis).len() == target_sizes[k]
            && search_basis(group, sub, ord_of, p, exps, target_sizes, basis)
        {
            return true;
        }
        basis.pop();
    }
    false
}

/// Rank, exponent, and size of Hom(M, N) for abelian p-groups over the
/// same prime: rank r(M)·r(N), exponent min{exp M, exp N}, size
/// ∏_{i,j} p^{min(a_i, b_j)}.
pub fn hom_shape(m: &AbelianDecomp, n: &AbelianDecomp) -> Result<(u64, u64, u128)> {
    match (m.prime(), n.prime()) {
        (Some(p), Some(q)) if p != q => return Err(Error::MixedPrimes("hom_shape")),
        _ => {}
    }
    let rank = (m.rank() * n.rank()) as u64;
    let exponent = m.exponent().min(n.exponent());
    let p = m.prime().or(n.prime()).unwrap_or(2) as u128;
    let mut size = 1u128;
    for &a in m.exps() {
        for &b in n.exps() {
            size *= p.pow(a.min(b));
        }
    }
    Ok((rank, exponent, size))
}

/// Ω_n(A): the subgroup of elements killed by pⁿ.
pub fn omega(group: &CayleyGroup, decomp: &AbelianDecomp, n: u32) -> Result<Subgroup> {
    if n == 0 {
        return Err(Error::Precondition("omega requires n ≥ 1".into()));
    }
    let Some(p) = decomp.prime() else {
        return Ok(Subgroup::from_sorted_unchecked_parent(
            decomp.parent().parent_order(),
            vec![group.identity()],
        ));
    };
    let pn = (p as usize).pow(n.min(30));
    let members: Vec<u16> = decomp
        .parent()
        .members()
        .iter()
        .copied()
        .filter(|&x| pn.is_multiple_of(group.element_order(x)))
        .collect();
    // Order must match ∏ p^{min(n, a_i)}.
    let expected: u64 = decomp
        .exps()
        .iter()
        .map(|&a| (p as u64).pow(a.min(n)))
        .product();
    debug_assert_eq!(members.len() as u64, expected);
    Ok(Subgroup::from_sorted_unchecked_parent(
        decomp.parent().parent_order(),
        members,
    ))
}

impl Subgroup {
    pub(crate) fn from_sorted_unchecked_parent(parent_order: usize, members: Vec<u16>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self::raw(parent_order, members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, make_group};

    #[test]
    fn trivial_decomposition_is_empty() {
        let g = make_group("cyclic:5").unwrap();
        let d = decompose(&g, &Subgroup::trivial(&g)).unwrap();
        assert!(d.orders().is_empty());
        assert_eq!(d.group_order(), 1);
        assert_eq!(d.exponent(), 1);
    }

    #[test]
    fn cyclic8_decomposes_as_single_factor() {
        let g = make_group("cyclic:8").unwrap();
        let d = decompose(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(d.orders(), &[8]);
    }

    #[test]
    fn center_of_c3_times_heisenberg_is_3_3() {
        let g = make_group("product(cyclic:3,heisenberg:3)").unwrap();
        let z = center(&g);
        let d = decompose(&g, &z).unwrap();
        assert_eq!(d.orders(), &[3, 3]);
    }

    #[test]
    fn mixed_type_descending() {
        let g = make_group("abelian:2,8,4").unwrap();
        let d = decompose(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(d.orders(), &[8, 4, 2]);
        // Reconstruction: every element round-trips through coordinates.
        for x in g.elements() {
            let c = d.coords(x).to_vec();
            assert_eq!(d.elem_of_coords(&c), x);
        }
        // Coordinate addition matches group multiplication.
        for x in g.elements() {
            for y in g.elements() {
                let sum: Vec<u64> = d
                    .coords(x)
                    .iter()
                    .zip(d.coords(y))
                    .map(|(a, b)| a + b)
                    .collect();
                assert_eq!(d.elem_of_coords(&sum), g.mul(x, y));
            }
        }
    }

    #[test]
    fn decompose_rejects_nonabelian_and_mixed() {
        let g = make_group("dihedral:8").unwrap();
        assert!(decompose(&g, &Subgroup::whole(&g)).is_err());
        let m = make_group("cyclic:6").unwrap();
        assert!(decompose(&m, &Subgroup::whole(&m)).is_err());
    }

    #[test]
    fn hom_shape_examples() {
        let g1 = make_group("abelian:4,2").unwrap();
        let g2 = make_group("abelian:8,2").unwrap();
        let m = decompose(&g1, &Subgroup::whole(&g1)).unwrap();
        let n = decompose(&g2, &Subgroup::whole(&g2)).unwrap();
        let (rank, exp, size) = hom_shape(&m, &n).unwrap();
        assert_eq!((rank, exp), (4, 4));
        assert_eq!(size, 32);

        let c9 = make_group("cyclic:9").unwrap();
        let c3 = make_group("cyclic:3").unwrap();
        let m9 = decompose(&c9, &Subgroup::whole(&c9)).unwrap();
        let n3 = decompose(&c3, &Subgroup::whole(&c3)).unwrap();
        assert_eq!(hom_shape(&m9, &n3).unwrap(), (1, 3, 3));

        let triv = decompose(&c9, &Subgroup::trivial(&c9)).unwrap();
        assert_eq!(hom_shape(&triv, &n3).unwrap(), (0, 1, 1));
    }

    #[test]
    fn hom_shape_rejects_mixed_primes() {
        let c4 = make_group("cyclic:4").unwrap();
        let c3 = make_group("cyclic:3").unwrap();
        let m = decompose(&c4, &Subgroup::whole(&c4)).unwrap();
        let n = decompose(&c3, &Subgroup::whole(&c3)).unwrap();
        assert!(hom_shape(&m, &n).is_err());
    }

    #[test]
    fn omega_examples() {
        let c9 = make_group("cyclic:9").unwrap();
        let d = decompose(&c9, &Subgroup::whole(&c9)).unwrap();
        assert_eq!(omega(&c9, &d, 1).unwrap().len(), 3);
        assert_eq!(omega(&c9, &d, 2).unwrap().len(), 9);

        let g33 = make_group("abelian:3,3").unwrap();
        let d33 = decompose(&g33, &Subgroup::whole(&g33)).unwrap();
        assert_eq!(omega(&g33, &d33, 1).unwrap().len(), 9);

        let g82 = make_group("abelian:8,2").unwrap();
        let d82 = decompose(&g82, &Subgroup::whole(&g82)).unwrap();
        assert_eq!(omega(&g82, &d82, 2).unwrap().len(), 8);
    }

    #[test]
    fn omega_chain_is_increasing_and_stabilizes() {
        let g = make_group("abelian:9,3").unwrap();
        let d = decompose(&g, &Subgroup::whole(&g)).unwrap();
        let o1 = omega(&g, &d, 1).unwrap();
        let o2 = omega(&g, &d, 2).unwrap();
        let o3 = omega(&g, &d, 3).unwrap();
        assert!(o1.is_subset_of(&o2));
        assert_eq!(o2.len(), 27);
        assert_eq!(o3.len(), 27);
    }
}
