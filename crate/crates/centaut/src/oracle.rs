//! Brute-force ground truth, deliberately naive.
//!
//! Automorphisms are found by generator-image search: a greedy generating
//! set, candidate images filtered by element order and by the orders of
//! pair products, commutators, and partial closures, then a full
//! extension check over every Cayley-graph edge. Direct-factor searches
//! walk the whole subgroup lattice. Every search carries a budget and
//! reports a typed skip when it would exceed it.

use crate::error::Result;
use crate::group::{center, CayleyGroup, Subgroup};
use crate::grouptable::{all_subgroups, Budgeted};
use crate::ring::{circle, FiniteRing};
use std::collections::HashSet;

/// Caps for the brute-force searches.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest group order for full automorphism enumeration.
    pub aut_order_cap: usize,
    /// Largest group order for direct-factor searches.
    pub factor_order_cap: usize,
    /// Largest ring size for adjoint scans.
    pub adjoint_scan_cap: usize,
    /// Largest adjoint-group order for rank enumeration.
    pub rank_order_cap: usize,
    /// Generic work-unit cap for lattice and generator searches.
    pub work_cap: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            aut_order_cap: 128,
            factor_order_cap: 81,
            adjoint_scan_cap: 4096,
            rank_order_cap: 729,
            work_cap: 1 << 26,
        }
    }
}

impl Budget {
    /// One knob for all order caps, as used by the CLI `--budget` flag.
    pub fn with_order_cap(n: usize) -> Self {
        let d = Budget::default();
        Budget {
            aut_order_cap: n,
            factor_order_cap: n,
            adjoint_scan_cap: d.adjoint_scan_cap.max(n),
            rank_order_cap: n.min(729),
            work_cap: d.work_cap,
        }
    }
}

/// A set of automorphisms as sorted permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutSet {
    perms: Vec<Vec<u16>>,
}

impl AutSet {
    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Vec<u16>] {
        &self.perms
    }

    pub fn contains(&self, perm: &[u16]) -> bool {
        self.perms
            .binary_search_by(|p| p.as_slice().cmp(perm))
            .is_ok()
    }

    /// Identity membership, closure under composition, multiplicativity.
    pub fn validate(&self, group: &CayleyGroup) -> Result<()> {
        let n = group.order();
        let id: Vec<u16> = (0..n as u16).collect();
        if !self.contains(&id) {
            return Err(crate::error::Error::Precondition("identity missing".into()));
        }
        for p in &self.perms {
            if !crate::autc::is_automorphism(group, p) {
                return Err(crate::error::Error::Precondition(
                    "non-automorphism member".into(),
                ));
            }
        }
        for a in &self.perms {
            for b in &self.perms {
                let c: Vec<u16> = a.iter().map(|&x| b[x as usize]).collect();
                if !self.contains(&c) {
                    return Err(crate::error::Error::Precondition(
                        "not closed under composition".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A small generating set, grown greedily by maximal closure gain.
pub fn greedy_generators(group: &CayleyGroup) -> Vec<u16> {
    let n = group.order();
    let mut gens: Vec<u16> = Vec::new();
    let mut cur = vec![group.identity()];
    while cur.len() < n {
        let mut in_cur = vec![false; n];
        for &c in &cur {
            in_cur[c as usize] = true;
        }
        let mut best: Option<(usize, u16)> = None;
        for x in group.elements() {
            if in_cur[x as usize] {
                continue;
            }
            let mut cand = gens.clone();
            cand.push(x);
            let size = group.closure(&cand).len();
            if best.is_none_or(|(bs, _)| size > bs) {
                best = Some((size, x));
            }
        }
        let (_, x) = best.expect("proper closure always extends");
        gens.push(x);
        cur = group.closure(&gens);
    }
    gens
}

/// Enumerates Aut(G) by generator-image search.
pub fn enumerate_automorphisms(group: &CayleyGroup, budget: &Budget) -> Budgeted<AutSet> {
    let n = group.order();
    if n > budget.aut_order_cap {
        return Budgeted::Skipped(format!(
            "group order {} exceeds the automorphism budget {}",
            n, budget.aut_order_cap
        ));
    }
    if n == 1 {
        return Budgeted::Done(AutSet {
            perms: vec![vec![0]],
        });
    }
    let gens = greedy_generators(group);
    let k = gens.len();
    let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();

    // BFS spanning tree: visit order with (parent, generator) edges.
    let mut parent: Vec<(u16, usize)> = vec![(0, 0); n];
    let mut bfs: Vec<u16> = vec![group.identity()];
    let mut seen = vec![false; n];
    seen[group.identity() as usize] = true;
    let mut head = 0;
    while head < bfs.len() {
        let x = bfs[head];
        head += 1;
        for (gi, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = (x, gi);
                bfs.push(y);
            }
        }
    }

    // Invariants of the generator tuple for pruning.
    let pair_ord: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| orders[group.mul(gens[i], gens[j]) as usize])
                .collect()
        })
        .collect();
    let comm_ord: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| orders[group.commutator(gens[i], gens[j]) as usize])
                .collect()
        })
        .collect();
    let partial_sizes: Vec<usize> = (1..=k).map(|t| group.closure(&gens[..t]).len()).collect();

    let mut perms: Vec<Vec<u16>> = Vec::new();
    let mut images: Vec<u16> = Vec::with_capacity(k);
    search(
        group,
        &gens,
        &orders,
        &pair_ord,
        &comm_ord,
        &partial_sizes,
        &bfs,
        &parent,
        &mut images,
        &mut perms,
    );
    perms.sort_unstable();
    Budgeted::Done(AutSet { perms })
}

#[allow(clippy::too_many_arguments)]
fn search(
    group: &CayleyGroup,
    gens: &[u16],
    orders: &[usize],
    pair_ord: &[Vec<usize>],
    comm_ord: &[Vec<usize>],
    partial_sizes: &[usize],
    bfs: &[u16],
    parent: &[(u16, usize)],
    images: &mut Vec<u16>,
    out: &mut Vec<Vec<u16>>,
) {
    let depth = images.len();
    if depth == gens.len() {
        if let Some(perm) = extend(group, gens, bfs, parent, images) {
            out.push(perm);
        }
        return;
    }
    let want = orders[gens[depth] as usize];
    'cand: for m in group.elements() {
        if orders[m as usize] != want {
            continue;
        }
        for (j, &mj) in images.iter().enumerate() {
            if orders[group.mul(mj, m) as usize] != pair_ord[j][depth]
                || orders[group.mul(m, mj) as usize] != pair_ord[depth][j]
                || orders[group.commutator(mj, m) as usize] != comm_ord[j][depth]
            {
                continue 'cand;
            }
        }
        images.push(m);
        if group.closure(images).len() == partial_sizes[depth] {
            search(
                group,
                gens,
                orders,
                pair_ord,
                comm_ord,
                partial_sizes,
                bfs,
                parent,
                images,
                out,
            );
        }
        images.pop();
    }
}

/// Extends generator images along the spanning tree, then checks every
/// edge φ(x·g) = φ(x)·φ(g) and bijectivity.
fn extend(
    group: &CayleyGroup,
    gens: &[u16],
    bfs: &[u16],
    parent: &[(u16, usize)],
    images: &[u16],
) -> Option<Vec<u16>> {
    let n = group.order();
    let mut phi = vec![0u16; n];
    let mut hit = vec![false; n];
    phi[group.identity() as usize] = group.identity();
    hit[group.identity() as usize] = true;
    for &x in bfs.iter().skip(1) {
        let (p, gi) = parent[x as usize];
        let v = group.mul(phi[p as usize], images[gi]);
        if hit[v as usize] {
            return None;
        }
        hit[v as usize] = true;
        phi[x as usize] = v;
    }
    for x in group.elements() {
        for (gi, &g) in gens.iter().enumerate() {
            if phi[group.mul(x, g) as usize] != group.mul(phi[x as usize], images[gi]) {
                return None;
            }
        }
    }
    Some(phi)
}

/// Filters the central automorphisms: x⁻¹σ(x) ∈ Z(G) for all x. The
/// equivalent characterization — commuting with conjugation by every
/// generator — is recomputed independently and must agree.
pub fn central_automorphisms(group: &CayleyGroup, auts: &AutSet) -> AutSet {
    let z = center(group);
    let gens = greedy_generators(group);
    let conj: Vec<Vec<u16>> = gens.iter().map(|&g| group.conjugation(g)).collect();
    let mut perms = Vec::new();
    for p in auts.perms() {
        let by_center = group
            .elements()
            .all(|x| z.contains(group.mul(group.inv(x), p[x as usize])));
        let by_commuting = conj.iter().all(|c| {
            group
                .elements()
                .all(|x| p[c[x as usize] as usize] == c[p[x as usize] as usize])
        });
        assert_eq!(
            by_center, by_commuting,
            "the two centrality characterizations must coincide"
        );
        if by_center {
            perms.push(p.clone());
        }
    }
    AutSet { perms }
}

/// All normal subgroups, via the full lattice.
fn normal_subgroups(group: &CayleyGroup, work_cap: u64) -> Budgeted<Vec<Subgroup>> {
    let subs = match all_subgroups(group, work_cap) {
        Budgeted::Done(s) => s,
        Budgeted::Skipped(why) => return Budgeted::Skipped(why),
    };
    let out = subs
        .into_iter()
        .map(|members| {
            Subgroup::from_sorted_unchecked_parent(
                group.order(),
                members.into_iter().map(|x| x as u16).collect(),
            )
        })
        .filter(|s| s.is_normal(group))
        .collect();
    Budgeted::Done(out)
}

fn complements(group: &CayleyGroup, normals: &[Subgroup], a: &Subgroup) -> Option<Subgroup> {
    let n = group.order();
    normals
        .iter()
        .find(|b| {
            a.len() * b.len() == n && a.members().iter().filter(|x| b.contains(**x)).count() == 1
        })
        .cloned()
}

/// Whether G = A × B with A a nontrivial abelian normal subgroup, with
/// the witness pair.
pub fn has_abelian_direct_factor(
    group: &CayleyGroup,
    budget: &Budget,
) -> Budgeted<(bool, Option<(Subgroup, Subgroup)>)> {
    if group.order() > budget.factor_order_cap {
        return Budgeted::Skipped(format!(
            "group order {} exceeds the factor-search budget {}",
            group.order(),
            budget.factor_order_cap
        ));
    }
    let normals = match normal_subgroups(group, budget.work_cap) {
        Budgeted::Done(s) => s,
        Budgeted::Skipped(why) => return Budgeted::Skipped(why),
    };
    for a in &normals {
        if a.is_trivial() || !a.is_abelian(group) {
            continue;
        }
        if let Some(b) = complements(group, &normals, a) {
            return Budgeted::Done((true, Some((a.clone(), b))));
        }
    }
    Budgeted::Done((false, None))
}

/// A direct decomposition G = N₁ × N₂ with both factors nontrivial, if
/// one exists.
pub fn direct_decomposition(
    group: &CayleyGroup,
    work_cap: u64,
) -> Budgeted<Option<(Subgroup, Subgroup)>> {
    let normals = match normal_subgroups(group, work_cap) {
        Budgeted::Done(s) => s,
        Budgeted::Skipped(why) => return Budgeted::Skipped(why),
    };
    for a in &normals {
        if a.is_trivial() || a.len() == group.order() {
            continue;
        }
        if let Some(b) = complements(group, &normals, a) {
            if !b.is_trivial() {
                return Budgeted::Done(Some((a.clone(), b)));
            }
        }
    }
    Budgeted::Done(None)
}

/// Φ(G) recomputed as the intersection of all index-p subgroups.
pub fn frattini_bruteforce(group: &CayleyGroup, budget: &Budget) -> Budgeted<Subgroup> {
    if group.order() == 1 {
        return Budgeted::Done(Subgroup::trivial(group));
    }
    let Some(p) = group.prime() else {
        return Budgeted::Skipped("not a p-group".into());
    };
    let subs = match all_subgroups(group, budget.work_cap) {
        Budgeted::Done(s) => s,
        Budgeted::Skipped(why) => return Budgeted::Skipped(why),
    };
    let index_p: Vec<&Vec<usize>> = subs
        .iter()
        .filter(|s| s.len() * p as usize == group.order())
        .collect();
    let mut members: Vec<u16> = group.elements().collect();
    for s in index_p {
        let set: HashSet<usize> = s.iter().copied().collect();
        members.retain(|&x| set.contains(&(x as usize)));
    }
    Budgeted::Done(Subgroup::from_sorted_unchecked_parent(
        group.order(),
        members,
    ))
}

/// The quasi-invertible elements found by exhaustive two-sided pair
/// search, with no recourse to the series construction.
pub fn adjoint_bruteforce<R: FiniteRing>(ring: &R, budget: &Budget) -> Budgeted<Vec<R::Elem>> {
    if ring.size() > budget.adjoint_scan_cap as u128 {
        return Budgeted::Skipped(format!(
            "ring size {} exceeds the adjoint-scan budget {}",
            ring.size(),
            budget.adjoint_scan_cap
        ));
    }
    let elems = ring.elements();
    let mut out: Vec<R::Elem> = Vec::new();
    for x in &elems {
        let invertible = elems
            .iter()
            .any(|y| ring.is_zero(&circle(ring, x, y)) && ring.is_zero(&circle(ring, y, x)));
        if invertible {
            out.push(x.clone());
        }
    }
    out.sort_unstable();
    Budgeted::Done(out)
}

/// All homomorphisms M → N between abelian subgroups, by exhaustive
/// generator-image enumeration with a full extension check. Each map is
/// returned as the image list aligned with `m_sub.members()`.
pub fn enumerate_homs(
    gm: &CayleyGroup,
    m_sub: &Subgroup,
    gn: &CayleyGroup,
    n_sub: &Subgroup,
) -> Vec<Vec<u16>> {
    let m = m_sub.members();
    let mut local = vec![usize::MAX; gm.order()];
    for (i, &x) in m.iter().enumerate() {
        local[x as usize] = i;
    }
    // Greedy generating set of M inside its parent.
    let mut gens: Vec<u16> = Vec::new();
    let mut cur = vec![gm.identity()];
    while cur.len() < m.len() {
        let in_cur: HashSet<u16> = cur.iter().copied().collect();
        let x = m
            .iter()
            .copied()
            .filter(|x| !in_cur.contains(x))
            .max_by_key(|&x| {
                let mut cand = gens.clone();
                cand.push(x);
                gm.closure(&cand).len()
            })
            .expect("proper closure extends");
        gens.push(x);
        cur = gm.closure(&gens);
    }
    let k = gens.len();
    // Spanning tree of M.
    let mut parent: Vec<(usize, usize)> = vec![(0, 0); m.len()];
    let mut bfs = vec![local[gm.identity() as usize]];
    let mut seen = vec![false; m.len()];
    seen[bfs[0]] = true;
    let mut head = 0;
    while head < bfs.len() {
        let xi = bfs[head];
        head += 1;
        for (gi, &g) in gens.iter().enumerate() {
            let yi = local[gm.mul(m[xi], g) as usize];
            if !seen[yi] {
                seen[yi] = true;
                parent[yi] = (xi, gi);
                bfs.push(yi);
            }
        }
    }
    let mut out: Vec<Vec<u16>> = Vec::new();
    let nm = n_sub.members();
    let mut images = vec![0u16; k];
    enumerate_hom_images(
        gm,
        gn,
        m,
        nm,
        &gens,
        &bfs,
        &parent,
        &mut images,
        0,
        &mut out,
    );
    out.sort_unstable();
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_hom_images(
    gm: &CayleyGroup,
    gn: &CayleyGroup,
    m: &[u16],
    nm: &[u16],
    gens: &[u16],
    bfs: &[usize],
    parent: &[(usize, usize)],
    images: &mut Vec<u16>,
    depth: usize,
    out: &mut Vec<Vec<u16>>,
) {
    if depth == gens.len() {
        // Extend along the tree and check all edges.
        let mut phi = vec![0u16; m.len()];
        phi[bfs[0]] = gn.identity();
        for &xi in bfs.iter().skip(1) {
            let (p, gi) = parent[xi];
            phi[xi] = gn.mul(phi[p], images[gi]);
        }
        let mut local = std::collections::HashMap::new();
        for (i, &x) in m.iter().enumerate() {
            local.insert(x, i);
        }
        for (xi, &x) in m.iter().enumerate() {
            for (gi, &g) in gens.iter().enumerate() {
                let yi = local[&gm.mul(x, g)];
                if phi[yi] != gn.mul(phi[xi], images[gi]) {
                    return;
                }
            }
        }
        out.push(phi);
        return;
    }
    let ord = gm.element_order(gens[depth]);
    for &cand in nm {
        // The image order must divide the generator order.
        if !ord.is_multiple_of(gn.element_order(cand)) {
            continue;
        }
        images[depth] = cand;
        enumerate_hom_images(gm, gn, m, nm, gens, bfs, parent, images, depth + 1, out);
    }
}

/// |Hom(M, N)| by exhaustive search.
pub fn hom_count_bruteforce(
    gm: &CayleyGroup,
    m_sub: &Subgroup,
    gn: &CayleyGroup,
    n_sub: &Subgroup,
) -> usize {
    enumerate_homs(gm, m_sub, gn, n_sub).len()
}

/// (rank, exponent) of the hom group under pointwise multiplication in N,
/// computed directly from the enumerated maps.
pub fn hom_group_shape_bruteforce(
    gm: &CayleyGroup,
    m_sub: &Subgroup,
    gn: &CayleyGroup,
    n_sub: &Subgroup,
) -> (u64, u64) {
    let homs = enumerate_homs(gm, m_sub, gn, n_sub);
    let zero: Vec<u16> = vec![gn.identity(); m_sub.len()];
    let add = |a: &Vec<u16>, b: &Vec<u16>| -> Vec<u16> {
        a.iter().zip(b).map(|(&x, &y)| gn.mul(x, y)).collect()
    };
    let order_of = |h: &Vec<u16>| -> u64 {
        let mut acc = h.clone();
        let mut k = 1u64;
        while acc != zero {
            acc = add(&acc, h);
            k += 1;
        }
        k
    };
    let exponent = homs.iter().map(order_of).fold(1u64, |l, o| {
        crate::group::lcm(l as usize, o as usize) as u64
    });
    let mut rank = 0u64;
    if homs.len() > 1 {
        let p = crate::group::prime_divisors(homs.len())[0] as u64;
        let killed = homs
            .iter()
            .filter(|h| {
                let mut acc = (*h).clone();
                for _ in 1..p {
                    acc = add(&acc, h);
                }
                acc == zero
            })
            .count();
        rank = crate::group::log_exact(killed, p as usize).expect("p-torsion is a p-power") as u64;
    }
    (rank, exponent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::homring::build_hom_ring;
    use crate::ring::zmod::ZmodRing;

    #[test]
    fn automorphism_counts_of_known_groups() {
        let budget = Budget::default();
        let count = |s: &str| {
            enumerate_automorphisms(&make_group(s).unwrap(), &budget)
                .done()
                .unwrap()
                .len()
        };
        assert_eq!(count("cyclic:4"), 2);
        assert_eq!(count("cyclic:9"), 6);
        assert_eq!(count("abelian:2,2"), 6);
        assert_eq!(count("abelian:3,3"), 48);
        assert_eq!(count("quaternion:8"), 24);
        assert_eq!(count("dihedral:8"), 8);
    }

    #[test]
    fn aut_sets_validate() {
        let budget = Budget::default();
        for s in ["cyclic:6", "dihedral:8", "heisenberg:3"] {
            let g = make_group(s).unwrap();
            let auts = enumerate_automorphisms(&g, &budget).done().unwrap();
            auts.validate(&g).unwrap();
        }
    }

    #[test]
    fn budget_exceeded_is_a_typed_skip() {
        let g = make_group("cyclic:129").unwrap();
        assert!(matches!(
            enumerate_automorphisms(&g, &Budget::default()),
            Budgeted::Skipped(_)
        ));
    }

    #[test]
    fn central_counts() {
        let budget = Budget::default();
        let central = |s: &str| {
            let g = make_group(s).unwrap();
            let auts = enumerate_automorphisms(&g, &budget).done().unwrap();
            central_automorphisms(&g, &auts).len()
        };
        // Abelian: everything is central.
        assert_eq!(central("abelian:3,3"), 48);
        assert_eq!(central("heisenberg:3"), 9);
        assert_eq!(central("dihedral:8"), 4);
    }

    #[test]
    fn abelian_factor_detection() {
        let budget = Budget::default();
        let g = make_group("heisenberg:3").unwrap();
        let (has, _) = has_abelian_direct_factor(&g, &budget).done().unwrap();
        assert!(!has);

        let g = make_group("product(cyclic:3,heisenberg:3)").unwrap();
        let (has, wit) = has_abelian_direct_factor(&g, &budget).done().unwrap();
        assert!(has);
        let (a, b) = wit.unwrap();
        assert!(a.is_abelian(&g));
        assert_eq!(a.len() * b.len(), 81);

        let g = make_group("abelian:9").unwrap();
        let (has, _) = has_abelian_direct_factor(&g, &budget).done().unwrap();
        assert!(has);
    }

    #[test]
    fn decomposition_search() {
        let g = make_group("wreath:3").unwrap();
        assert_eq!(direct_decomposition(&g, 1 << 26).done().unwrap(), None);
        let g = make_group("product(cyclic:2,dihedral:8)").unwrap();
        let (a, b) = direct_decomposition(&g, 1 << 26).done().unwrap().unwrap();
        assert_eq!(a.len() * b.len(), 16);
    }

    #[test]
    fn frattini_cross_check() {
        let budget = Budget::default();
        for s in [
            "cyclic:9",
            "dihedral:8",
            "quaternion:8",
            "heisenberg:3",
            "modular:3",
            "wreath:3",
            "abelian:9,3",
        ] {
            let g = make_group(s).unwrap();
            let by_def = crate::group::frattini(&g).unwrap();
            let by_lattice = frattini_bruteforce(&g, &budget).done().unwrap();
            assert_eq!(by_def, by_lattice, "{s}");
        }
    }

    #[test]
    fn adjoint_bruteforce_on_test_rings() {
        let budget = Budget::default();
        // End(Z₃) ≅ Z/3: two quasi-invertible elements.
        let g = make_group("abelian:3").unwrap();
        let r = build_hom_ring(&g).unwrap();
        assert_eq!(adjoint_bruteforce(&r, &budget).done().unwrap().len(), 2);
        // The zero ring.
        let t = make_group("cyclic:1").unwrap();
        let rt = build_hom_ring(&t).unwrap();
        assert_eq!(adjoint_bruteforce(&rt, &budget).done().unwrap().len(), 1);
        // Z/12: x∘y = 0 means (1+x)(1+y) = 1, so units-1: {0, 4, 6, 10}.
        let z12 = ZmodRing::new(12);
        assert_eq!(
            adjoint_bruteforce(&z12, &budget).done().unwrap(),
            vec![0, 4, 6, 10]
        );
    }

    #[test]
    fn hom_counts() {
        let c3 = make_group("cyclic:3").unwrap();
        let c9 = make_group("cyclic:9").unwrap();
        let g33 = make_group("abelian:3,3").unwrap();
        let whole = Subgroup::whole;
        assert_eq!(hom_count_bruteforce(&c3, &whole(&c3), &c3, &whole(&c3)), 3);
        assert_eq!(hom_count_bruteforce(&c9, &whole(&c9), &c3, &whole(&c3)), 3);
        assert_eq!(
            hom_count_bruteforce(&g33, &whole(&g33), &c3, &whole(&c3)),
            9
        );
        assert_eq!(hom_count_bruteforce(&c3, &whole(&c3), &c9, &whole(&c9)), 3);
    }

    #[test]
    fn hom_shape_bruteforce_matches_structure() {
        let g93 = make_group("abelian:9,3").unwrap();
        let c9 = make_group("cyclic:9").unwrap();
        let (rank, exp) =
            hom_group_shape_bruteforce(&g93, &Subgroup::whole(&g93), &c9, &Subgroup::whole(&c9));
        // Hom(Z₉×Z₃, Z₉) ≅ Z₉ × Z₃: rank 2, exponent 9.
        assert_eq!((rank, exp), (2, 9));
    }
}
