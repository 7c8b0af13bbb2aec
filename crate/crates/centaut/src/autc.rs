//! Central automorphisms of G through the ring Hom(G, Z(G)).
//!
//! The map h ↦ (x ↦ x·h(x)) sends a ring element to an endomorphism of G,
//! which is an automorphism exactly when h is quasi-invertible, and then
//! x⁻¹σ(x) ∈ Z(G) for all x. Its inverse σ ↦ h_σ, h_σ(x) = x⁻¹σ(x),
//! recovers the ring element from any central automorphism. Under this
//! bijection the circle composition corresponds to composing maps with
//! the left factor applied first: σ_{h∘k}(x) = σ_k(σ_h(x)). That
//! convention is forced by the ring multiplication (hk)(x) = k(h(x)) and
//! is fixed globally here.
//!
//! The order-p machinery lives at the bottom: the d-invariants
//! (d, d₁, d₂), the criterion d₂ ≠ d·d₁ for a non-inner central
//! automorphism of order p (p odd), and the two witness constructions —
//! the coordinate-shift map on a direct factor for decomposable groups,
//! and an Ω₁-valued homomorphism outside the image of the inner ones for
//! purely non-abelian groups.

use crate::abelian::{decompose, omega};
use crate::adjoint::AdjointGroup;
use crate::error::{Error, Result};
use crate::group::{center, quotient, second_center, CayleyGroup, Subgroup};
use crate::grouptable::{GroupTable, MulTable};
use crate::homring::{HomRing, RingElem};
use crate::oracle::direct_decomposition;
use crate::ring::FiniteRing;
use std::collections::HashMap;

/// How an automorphism was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    AdneyYen(RingElem),
    Inner(u16),
    Composed,
}

/// An automorphism of G as a permutation of element indices.
#[derive(Debug, Clone)]
pub struct AutMap {
    perm: Vec<u16>,
    pub source: Provenance,
}

impl AutMap {
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn apply(&self, x: u16) -> u16 {
        self.perm[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Order as a permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        perm_order(&self.perm)
    }

    /// Applies `self` first, then `other`.
    pub fn compose(&self, other: &AutMap) -> AutMap {
        let perm = self.perm.iter().map(|&x| other.perm[x as usize]).collect();
        AutMap {
            perm,
            source: Provenance::Composed,
        }
    }
}

/// Order of a raw permutation: lcm of its cycle lengths.
pub fn perm_order(perm: &[u16]) -> usize {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut ord = 1usize;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0usize;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        ord = crate::group::lcm(ord, len);
    }
    ord
}

/// Checks that a permutation is a bijective homomorphism.
pub fn is_automorphism(group: &CayleyGroup, perm: &[u16]) -> bool {
    let n = group.order();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if (v as usize) >= n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    for x in group.elements() {
        for y in group.elements() {
            if perm[group.mul(x, y) as usize] != group.mul(perm[x as usize], perm[y as usize]) {
                return false;
            }
        }
    }
    true
}

/// First element x with x⁻¹σ(x) ∉ Z(G), if any.
pub fn centrality_witness(group: &CayleyGroup, z: &Subgroup, perm: &[u16]) -> Option<u16> {
    group
        .elements()
        .find(|&x| !z.contains(group.mul(group.inv(x), perm[x as usize])))
}

/// The endomorphism x ↦ x·h(x); `None` when it is not bijective.
pub fn to_aut(group: &CayleyGroup, ring: &HomRing, h: &RingElem) -> Option<AutMap> {
    if !ring.belongs(h) || ring.group_order() != group.order() {
        return None;
    }
    let n = group.order();
    let mut perm = vec![0u16; n];
    let mut seen = vec![false; n];
    for x in group.elements() {
        let y = group.mul(x, ring.apply(h, x));
        if seen[y as usize] {
            return None;
        }
        seen[y as usize] = true;
        perm[x as usize] = y;
    }
    Some(AutMap {
        perm,
        source: Provenance::AdneyYen(h.clone()),
    })
}

/// The ring element h_σ(x) = x⁻¹σ(x) of a central automorphism.
pub fn adney_yen(group: &CayleyGroup, ring: &HomRing, sigma: &AutMap) -> Result<RingElem> {
    let z = center(group);
    if let Some(w) = centrality_witness(group, &z, sigma.perm()) {
        return Err(Error::NotCentral(w as usize));
    }
    let d = ring.source_dim();
    let d1 = ring.target_dim();
    let mut mat = vec![0u64; d1 * d];
    for (i, &rep) in ring.source_reps().iter().enumerate() {
        let v = group.mul(group.inv(rep), sigma.apply(rep));
        let coords = ring.target().coords(v);
        for j in 0..d1 {
            mat[j * d + i] = coords[j];
        }
    }
    ring.elem_from_mat(mat)
}

/// Aut_c(G): the central automorphisms, indexed in step with the adjoint
/// group members so that index k of `maps` is the image of ring element
/// k under h ↦ 1+h.
#[derive(Debug, Clone)]
pub struct AutCGroup {
    maps: Vec<AutMap>,
    ring_elems: Vec<RingElem>,
    table: MulTable,
    index: HashMap<Vec<u16>, usize>,
}

/// Builds Aut_c(G) from the adjoint group of Hom(G, Z(G)).
///
/// Every quasi-invertible ring element must induce a bijection; a
/// failure contradicts the correspondence and is surfaced as an error.
pub fn aut_c(
    group: &CayleyGroup,
    ring: &HomRing,
    adjoint: &AdjointGroup<RingElem>,
) -> Result<AutCGroup> {
    let mut maps = Vec::with_capacity(adjoint.len());
    for h in adjoint.members() {
        let m = to_aut(group, ring, h).ok_or_else(|| {
            Error::Precondition(
                "quasi-invertible ring element induced a non-bijective endomorphism".into(),
            )
        })?;
        maps.push(m);
    }
    let index: HashMap<Vec<u16>, usize> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.perm.clone(), i))
        .collect();
    let n = maps.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let composed = maps[a].compose(&maps[b]);
            let idx = index.get(&composed.perm).ok_or_else(|| {
                Error::Precondition("central automorphisms not closed under composition".into())
            })?;
            table[a * n + b] = *idx as u32;
        }
    }
    let id_idx = index
        .get(&group.elements().collect::<Vec<u16>>())
        .copied()
        .ok_or_else(|| Error::Precondition("identity automorphism missing".into()))?;
    Ok(AutCGroup {
        maps,
        ring_elems: adjoint.members().to_vec(),
        table: MulTable::new(n, id_idx, table),
        index,
    })
}

impl AutCGroup {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[AutMap] {
        &self.maps
    }

    pub fn ring_elem(&self, i: usize) -> &RingElem {
        &self.ring_elems[i]
    }

    pub fn index_of_perm(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Composition table (left factor applied first).
    pub fn table(&self) -> &MulTable {
        &self.table
    }

    /// Nilpotency class of Aut_c(G), or `None` when not nilpotent.
    pub fn class(&self) -> Option<u32> {
        crate::grouptable::nilpotency_class_table(&self.table)
    }

    /// Ω_{{n}} and Ω_n of Aut_c(G) for the prime p, as index lists.
    pub fn omega_set(&self, p: u64, n: u32) -> (Vec<usize>, Vec<usize>) {
        let pn = p.pow(n);
        let set: Vec<usize> = (0..self.len())
            .filter(|&i| pn.is_multiple_of(self.table.element_order(i) as u64))
            .collect();
        let subgroup = crate::grouptable::closure(&self.table, &set);
        (set, subgroup)
    }
}

/// Conjugation by g as an [`AutMap`].
pub fn inner_aut(group: &CayleyGroup, g: u16) -> AutMap {
    AutMap {
        perm: group.conjugation(g),
        source: Provenance::Inner(g),
    }
}

/// Whether σ is conjugation by some element; scans one candidate per
/// coset of the center.
pub fn is_inner(group: &CayleyGroup, sigma: &AutMap) -> Option<u16> {
    let z = center(group);
    let mut seen = vec![false; group.order()];
    for g in group.elements() {
        if seen[g as usize] {
            continue;
        }
        for &zz in z.members() {
            seen[group.mul(g, zz) as usize] = true;
        }
        if group.conjugation(g) == sigma.perm {
            return Some(g);
        }
    }
    None
}

/// All homomorphisms G → Ω₁(Z(G)) as ring elements: the F_p-vector space
/// of matrices whose entries are multiples of p^{b_j − 1}.
pub fn omega1_homs(ring: &HomRing) -> Vec<RingElem> {
    let d = ring.source_dim();
    let d1 = ring.target_dim();
    if d * d1 == 0 {
        return vec![ring.zero()];
    }
    let p = ring.prime().expect("nontrivial ring has a prime");
    let cells = d1 * d;
    let steps: Vec<u64> = (0..cells)
        .map(|t| ring.target_orders()[t / d] / p)
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![0u64; cells];
    loop {
        let mat: Vec<u64> = (0..cells).map(|t| digits[t] * steps[t]).collect();
        out.push(
            ring.elem_from_mat(mat)
                .expect("Ω₁-valued matrices satisfy the mask"),
        );
        let mut t = cells;
        loop {
            if t == 0 {
                out.sort_unstable();
                return out;
            }
            t -= 1;
            digits[t] += 1;
            if digits[t] < p {
                break;
            }
            digits[t] = 0;
        }
    }
}

/// The image I of the order-≤p part of Z(Inn(G)) under σ ↦ h_σ: one ring
/// element per coset gZ with g ∈ Z₂(G) and gᵖ ∈ Z(G).
pub fn inner_central_image(group: &CayleyGroup, ring: &HomRing) -> Result<Vec<RingElem>> {
    let p = group
        .prime()
        .ok_or(Error::NotPGroup("inner_central_image", group.order()))? as usize;
    let z = center(group);
    let z2 = second_center(group);
    let mut out: Vec<RingElem> = Vec::new();
    for &g in z2.members() {
        if !z.contains(group.pow(g, p)) {
            continue;
        }
        let h = adney_yen(group, ring, &inner_aut(group, g))?;
        out.push(h);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The d-invariants (d(G), d(Z(G)), d(Z(Inn(G)))). For abelian G the
/// third is undefined (Inn is trivial) and reported as 0 with the flag
/// cleared.
pub fn d_invariants(group: &CayleyGroup) -> Result<(u32, u32, u32, bool)> {
    if group.order() > 1 && group.prime().is_none() {
        return Err(Error::NotPGroup("d_invariants", group.order()));
    }
    let d = crate::group::min_generators(group)?;
    let z = center(group);
    let d1 = decompose(group, &z)?.rank() as u32;
    if group.is_abelian() {
        return Ok((d, d1, 0, false));
    }
    let (q, _) = quotient(group, &z)?;
    let zq = center(&q);
    let d2 = decompose(&q, &zq)?.rank() as u32;
    Ok((d, d1, d2, true))
}

/// The criterion for a non-inner central automorphism of order p:
/// d₂ ≠ d·d₁, proved for odd p and non-abelian G.
pub fn has_noninner_central_order_p(group: &CayleyGroup) -> Result<bool> {
    if group.is_abelian() {
        return Err(Error::CriterionInapplicableAbelian);
    }
    let p = group.prime().ok_or(Error::NotPGroup(
        "has_noninner_central_order_p",
        group.order(),
    ))?;
    if p == 2 {
        return Err(Error::CriterionInapplicableP2);
    }
    let (d, d1, d2, _) = d_invariants(group)?;
    Ok(d2 != d * d1)
}

/// Builds a verified non-inner central automorphism of order exactly p.
///
/// Decomposable groups get the direct construction: for G = G₁ × G₂ with
/// M maximal in G₁, g ∈ G₁ − M and z a central order-p element of G₂,
/// the map x·gⁱ ↦ x·gⁱ·zⁱ (x ∈ M·G₂) qualifies. Purely non-abelian
/// groups instead take 1+h for an Ω₁-valued homomorphism h outside the
/// image of the inner central automorphisms. A failed verification would
/// contradict the criterion and is reported loudly.
pub fn construct_noninner_central_order_p(
    group: &CayleyGroup,
    ring: &HomRing,
    decomposition_budget: u64,
) -> Result<AutMap> {
    let p = group.prime().ok_or(Error::NotPGroup(
        "construct_noninner_central_order_p",
        group.order(),
    ))?;
    if group.is_abelian() {
        return Err(Error::CriterionInapplicableAbelian);
    }
    let violation = |what: &str| {
        Error::Precondition(format!(
            "criterion violation: constructed map is not {what} — this contradicts the order-p theorem"
        ))
    };
    let decomposition = match direct_decomposition(group, decomposition_budget) {
        crate::grouptable::Budgeted::Done(d) => d,
        crate::grouptable::Budgeted::Skipped(why) => {
            return Err(Error::Precondition(format!(
                "decomposition search skipped: {why}"
            )))
        }
    };
    let sigma = match decomposition {
        Some((g1, g2)) => decomposable_witness(group, &g1, &g2, p as usize)?,
        None => {
            if p == 2 {
                return Err(Error::CriterionInapplicableP2);
            }
            if !has_noninner_central_order_p(group)? {
                return Err(Error::Precondition(
                    "criterion is false: every central automorphism of order p is inner".into(),
                ));
            }
            let inner_image = inner_central_image(group, ring)?;
            let h = omega1_homs(ring)
                .into_iter()
                .find(|h| inner_image.binary_search(h).is_err())
                .ok_or_else(|| violation("outside the inner image"))?;
            to_aut(group, ring, &h).ok_or_else(|| violation("bijective"))?
        }
    };
    let z = center(group);
    if !is_automorphism(group, sigma.perm()) {
        return Err(violation("an automorphism"));
    }
    if centrality_witness(group, &z, sigma.perm()).is_some() {
        return Err(violation("central"));
    }
    if is_inner(group, &sigma).is_some() {
        return Err(violation("non-inner"));
    }
    if sigma.order() != p as usize {
        return Err(violation("of order exactly p"));
    }
    Ok(sigma)
}

fn decomposable_witness(
    group: &CayleyGroup,
    g1: &Subgroup,
    g2: &Subgroup,
    p: usize,
) -> Result<AutMap> {
    let z = center(group);
    // A central order-p element inside the untouched factor.
    let zc = g2
        .members()
        .iter()
        .copied()
        .find(|&x| z.contains(x) && group.element_order(x) == p)
        .ok_or_else(|| {
            Error::Precondition("no central order-p element in the second factor".into())
        })?;
    // A maximal (index p) subgroup of the moved factor.
    let local = sub_table(group, g1.members());
    let m_local = crate::grouptable::all_subgroups(&local, 1 << 22)
        .done()
        .ok_or_else(|| Error::Precondition("maximal-subgroup search exceeded budget".into()))?
        .into_iter()
        .find(|s| s.len() * p == g1.len())
        .ok_or_else(|| Error::Precondition("no index-p subgroup in the factor".into()))?;
    let m: Vec<u16> = m_local.iter().map(|&i| g1.members()[i]).collect();
    let g = g1
        .members()
        .iter()
        .copied()
        .find(|x| !m.contains(x))
        .expect("proper subgroup misses some element");
    // K = M·G₂ has index p; r(w) = the power of g in w's coset.
    let mut in_k = vec![false; group.order()];
    for &a in &m {
        for &b in g2.members() {
            in_k[group.mul(a, b) as usize] = true;
        }
    }
    let ginv = group.inv(g);
    let mut perm = vec![0u16; group.order()];
    for w in group.elements() {
        let mut i = 0usize;
        let mut probe = w;
        while !in_k[probe as usize] {
            probe = group.mul(probe, ginv);
            i += 1;
            assert!(i < p, "cosets of M·G₂ are exhausted by powers of g");
        }
        perm[w as usize] = group.mul(w, group.pow(zc, i));
    }
    Ok(AutMap {
        perm,
        source: Provenance::Composed,
    })
}

fn sub_table(group: &CayleyGroup, members: &[u16]) -> MulTable {
    let mut local = vec![usize::MAX; group.order()];
    for (i, &m) in members.iter().enumerate() {
        local[m as usize] = i;
    }
    let k = members.len();
    let mut table = vec![0u32; k * k];
    for (a, &x) in members.iter().enumerate() {
        for (b, &y) in members.iter().enumerate() {
            table[a * k + b] = local[group.mul(x, y) as usize] as u32;
        }
    }
    MulTable::new(k, local[group.identity() as usize], table)
}

/// Aut_{Z_n}(G): the central automorphisms whose Adney-Yen image lands in
/// Ω_n(Z(G)), as indices into the Aut_c listing.
pub fn aut_omega_n(
    group: &CayleyGroup,
    ring: &HomRing,
    autc: &AutCGroup,
    n: u32,
) -> Result<Vec<usize>> {
    let zn = omega(group, ring.target(), n)?;
    let mut out = Vec::new();
    for i in 0..autc.len() {
        let h = autc.ring_elem(i);
        let ok = ring
            .source_reps()
            .iter()
            .all(|&rep| zn.contains(ring.apply(h, rep)));
        if ok {
            out.push(i);
        }
    }
    Ok(out)
}
