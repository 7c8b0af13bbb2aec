//! Generic algorithms over finite multiplication tables.
//!
//! The adjoint group of a ring, Aut_c(G) under composition, and plain
//! Cayley groups all expose the same shape — a finite set with an
//! associative table — so closures, the lower central series, subgroup
//! enumeration, minimal generator counts, and rank live here once.
//!
//! Rank enumeration carries an explicit work budget: when it is exceeded
//! the result is a typed skip, never a silently truncated answer.

use crate::group::{log_exact, prime_divisors, CayleyGroup};

pub trait GroupTable {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;

    fn inv(&self, a: usize) -> usize {
        let mut y = a;
        loop {
            let next = self.mul(y, a);
            if next == self.identity() {
                return y;
            }
            y = next;
        }
    }

    fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(a, self.mul(x, y))
    }

    fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity() {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }
}

impl GroupTable for CayleyGroup {
    fn order(&self) -> usize {
        CayleyGroup::order(self)
    }

    fn identity(&self) -> usize {
        CayleyGroup::identity(self) as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        CayleyGroup::mul(self, a as u16, b as u16) as usize
    }

    fn inv(&self, a: usize) -> usize {
        CayleyGroup::inv(self, a as u16) as usize
    }
}

/// An explicit table for a group materialized from some other structure
/// (adjoint groups, automorphism groups).
#[derive(Debug, Clone)]
pub struct MulTable {
    n: usize,
    identity: usize,
    table: Vec<u32>,
}

impl MulTable {
    pub fn new(n: usize, identity: usize, table: Vec<u32>) -> Self {
        assert_eq!(table.len(), n * n);
        MulTable { n, identity, table }
    }
}

impl GroupTable for MulTable {
    fn order(&self) -> usize {
        self.n
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }
}

/// Closure of a generating set, sorted ascending.
pub fn closure<T: GroupTable>(t: &T, gens: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; t.order()];
    in_set[t.identity()] = true;
    let mut out = vec![t.identity()];
    let mut queue = vec![t.identity()];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = t.mul(x, g);
            if !in_set[y] {
                in_set[y] = true;
                out.push(y);
                queue.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_abelian_table<T: GroupTable>(t: &T) -> bool {
    let n = t.order();
    (0..n).all(|i| (i + 1..n).all(|j| t.mul(i, j) == t.mul(j, i)))
}

/// Nilpotency class via the lower central series, or `None` when the
/// series stabilizes above the identity. The trivial group has class 0.
pub fn nilpotency_class_table<T: GroupTable>(t: &T) -> Option<u32> {
    let n = t.order();
    if n == 1 {
        return Some(0);
    }
    let mut gamma: Vec<usize> = (0..n).collect();
    let mut class = 0u32;
    loop {
        let mut comms: Vec<usize> = Vec::new();
        for &x in &gamma {
            for g in 0..n {
                let c = t.commutator(x, g);
                if c != t.identity() {
                    comms.push(c);
                }
            }
        }
        comms.sort_unstable();
        comms.dedup();
        let next = closure(t, &comms);
        class += 1;
        if next.len() == 1 {
            return Some(class);
        }
        if next.len() == gamma.len() {
            return None;
        }
        gamma = next;
    }
}

/// Outcome of a budgeted computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Budgeted<T> {
    Done(T),
    Skipped(String),
}

impl<T> Budgeted<T> {
    pub fn done(self) -> Option<T> {
        match self {
            Budgeted::Done(v) => Some(v),
            Budgeted::Skipped(_) => None,
        }
    }
}

struct WorkMeter {
    left: i64,
}

impl WorkMeter {
    fn spend(&mut self, units: usize) -> bool {
        self.left -= units as i64;
        self.left >= 0
    }
}

/// Every subgroup, found by breadth-first closure extension. Extensions
/// are attempted once per coset of the current subgroup, since ⟨H, x⟩
/// only depends on Hx.
pub fn all_subgroups<T: GroupTable>(t: &T, work_cap: u64) -> Budgeted<Vec<Vec<usize>>> {
    let n = t.order();
    let mut meter = WorkMeter {
        left: work_cap as i64,
    };
    let mut found: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    let mut subgroups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (members, gens)
    let trivial = vec![t.identity()];
    found.insert(trivial.clone());
    subgroups.push((trivial, Vec::new()));
    let mut next = 0;
    while next < subgroups.len() {
        let (members, gens) = subgroups[next].clone();
        next += 1;
        if members.len() == n {
            continue;
        }
        let mut covered = vec![false; n];
        for &m in &members {
            covered[m] = true;
        }
        for x in 0..n {
            if covered[x] {
                continue;
            }
            for &m in &members {
                covered[t.mul(m, x)] = true;
            }
            let mut k_gens = gens.clone();
            k_gens.push(x);
            let k = closure(t, &k_gens);
            if !meter.spend(k.len() + members.len()) {
                return Budgeted::Skipped(format!(
                    "subgroup enumeration exceeded the work budget ({} found so far)",
                    subgroups.len()
                ));
            }
            if found.insert(k.clone()) {
                subgroups.push((k, k_gens));
            }
        }
    }
    let mut out: Vec<Vec<usize>> = subgroups.into_iter().map(|(m, _)| m).collect();
    out.sort_unstable_by(|a, b| (a.len(), &a[..]).cmp(&(b.len(), &b[..])));
    Budgeted::Done(out)
}

/// Exact minimal number of generators of the subgroup `h` of `t`.
///
/// Cyclic, p-group (Burnside basis), abelian, and nilpotent cases are
/// closed-form; otherwise a generating set is searched with the
/// abelianization rank as the lower bound.
pub fn min_generators_table<T: GroupTable>(t: &T, h: &[usize], work_cap: u64) -> Budgeted<u32> {
    let mut meter = WorkMeter {
        left: work_cap as i64,
    };
    min_gens_inner(t, h, None, &mut meter)
}

/// The quotient of the subgroup `h` by a normal subgroup, as a fresh
/// table over cosets (named by smallest member).
fn quotient_table<T: GroupTable>(t: &T, h: &[usize], normal: &[usize]) -> MulTable {
    let m = h.len() / normal.len();
    let mut coset_of = vec![usize::MAX; t.order()];
    let mut reps: Vec<usize> = Vec::with_capacity(m);
    for &g in h {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        for &w in normal {
            coset_of[t.mul(g, w)] = idx;
        }
    }
    let mut table = vec![0u32; m * m];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            table[a * m + b] = coset_of[t.mul(ra, rb)] as u32;
        }
    }
    MulTable::new(m, coset_of[t.identity()], table)
}

fn min_gens_inner<T: GroupTable>(
    t: &T,
    h: &[usize],
    frattini_hint: Option<&[usize]>,
    meter: &mut WorkMeter,
) -> Budgeted<u32> {
    let n = h.len();
    if n == 1 {
        return Budgeted::Done(0);
    }
    let orders: Vec<usize> = h.iter().map(|&x| t.element_order(x)).collect();
    if orders.contains(&n) {
        return Budgeted::Done(1);
    }
    let primes = prime_divisors(n);
    if primes.len() == 1 {
        return Budgeted::Done(burnside_rank(t, h, primes[0]));
    }
    let abelian = h
        .iter()
        .all(|&x| h.iter().all(|&y| t.mul(x, y) == t.mul(y, x)));
    if abelian {
        let mut d = 0;
        for &p in &primes {
            let cnt = h.iter().filter(|&&x| t.pow(x, p) == t.identity()).count();
            d = d.max(log_exact(cnt, p).expect("p-torsion of an abelian group is a p-power"));
        }
        return Budgeted::Done(d);
    }
    // Nilpotent = direct product of its Sylow subgroups: the p-power-order
    // elements must form subgroups of the right sizes.
    let mut sylows: Vec<Vec<usize>> = Vec::new();
    let mut nilpotent = true;
    'outer: for &p in &primes {
        let sp: Vec<usize> = h
            .iter()
            .copied()
            .zip(&orders)
            .filter(|&(_, &o)| is_power_of(o, p))
            .map(|(x, _)| x)
            .collect();
        let p_part = p_part_of(n, p);
        if sp.len() != p_part {
            nilpotent = false;
            break 'outer;
        }
        for &x in &sp {
            for &y in &sp {
                let m = t.mul(x, y);
                if !is_power_of(t.element_order(m), p) {
                    nilpotent = false;
                    break 'outer;
                }
            }
        }
        sylows.push(sp);
    }
    if nilpotent {
        let mut d = 0;
        for (sp, &p) in sylows.iter().zip(&primes) {
            d = d.max(burnside_rank(t, sp, p));
        }
        return Budgeted::Done(d);
    }
    // Generating sets of H correspond to generating sets of H/Φ(H), and
    // the Frattini quotient is much smaller for the groups that land
    // here, so reduce before scanning.
    if let Some(phi) = frattini_hint {
        if phi.len() > 1 {
            let q = quotient_table(t, h, phi);
            let whole: Vec<usize> = (0..q.order()).collect();
            return min_gens_inner(&q, &whole, None, meter);
        }
    }
    min_gens_general(t, h, meter)
}

fn min_gens_general<T: GroupTable>(t: &T, h: &[usize], meter: &mut WorkMeter) -> Budgeted<u32> {
    let n = h.len();
    // Lower bound: rank of the abelianization H/H′.
    let mut comms: Vec<usize> = Vec::new();
    for &x in h {
        for &y in h {
            let c = t.commutator(x, y);
            if c != t.identity() {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    comms.dedup();
    let derived = closure(t, &comms);
    let in_derived = member_set(t.order(), &derived);
    let mut lower = 2u32;
    for p in prime_divisors(n / derived.len()) {
        let cnt = h.iter().filter(|&&x| in_derived[t.pow(x, p)]).count();
        if let Some(r) = log_exact(cnt / derived.len(), p) {
            lower = lower.max(r);
        }
    }
    // Probe strided pairs for an early 2-generator witness.
    if lower == 2 {
        let stride = (n / 37).max(1);
        for xi in (0..n).step_by(stride) {
            for yi in (0..n).step_by(stride.max(2) - 1) {
                if !meter.spend(n) {
                    return Budgeted::Skipped(format!(
                        "generator search exceeded the work budget (|H| = {})",
                        n
                    ));
                }
                if closure(t, &[h[xi], h[yi]]).len() == n {
                    return Budgeted::Done(2);
                }
            }
        }
        // Exhaustive pair scan, skipping y inside ⟨x⟩-saturated cosets.
        for &x in h {
            let cx = closure(t, &[x]);
            let mut covered = member_set(t.order(), &cx);
            for &y in h {
                if covered[y] {
                    continue;
                }
                let k = closure(t, &[x, y]);
                if !meter.spend(k.len()) {
                    return Budgeted::Skipped(format!(
                        "generator search exceeded the work budget (|H| = {})",
                        n
                    ));
                }
                if k.len() == n {
                    return Budgeted::Done(2);
                }
                for &c in &cx {
                    covered[t.mul(c, y)] = true;
                }
            }
        }
        lower = 3;
    }
    if lower == 3 {
        // Strided triple probes, then the exhaustive scan with the same
        // coset skipping per generated pair.
        let stride = (n / 17).max(1);
        for xi in (0..n).step_by(stride) {
            for yi in (0..n).step_by((stride + 1).max(2) - 1) {
                for zi in (0..n).step_by(stride) {
                    if !meter.spend(n) {
                        return Budgeted::Skipped(format!(
                            "generator search exceeded the work budget (|H| = {})",
                            n
                        ));
                    }
                    if closure(t, &[h[xi], h[yi], h[zi]]).len() == n {
                        return Budgeted::Done(3);
                    }
                }
            }
        }
        for &x in h {
            for &y in h {
                let cxy = closure(t, &[x, y]);
                if !meter.spend(cxy.len()) {
                    return Budgeted::Skipped(format!(
                        "generator search exceeded the work budget (|H| = {})",
                        n
                    ));
                }
                let mut covered = member_set(t.order(), &cxy);
                for &z in h {
                    if covered[z] {
                        continue;
                    }
                    let k = closure(t, &[x, y, z]);
                    if !meter.spend(k.len()) {
                        return Budgeted::Skipped(format!(
                            "generator search exceeded the work budget (|H| = {})",
                            n
                        ));
                    }
                    if k.len() == n {
                        return Budgeted::Done(3);
                    }
                    for &c in &cxy {
                        covered[t.mul(c, z)] = true;
                    }
                }
            }
        }
        lower = 4;
    }
    // Greedy upper bound, then accept if it meets the proven lower bound.
    let mut gens: Vec<usize> = Vec::new();
    let mut cur = vec![t.identity()];
    while cur.len() < n {
        let in_cur = member_set(t.order(), &cur);
        let mut best: Option<(usize, usize)> = None;
        for &x in h {
            if in_cur[x] {
                continue;
            }
            let mut cand = gens.clone();
            cand.push(x);
            let size = closure(t, &cand).len();
            if !meter.spend(size) {
                return Budgeted::Skipped(format!(
                    "generator search exceeded the work budget (|H| = {})",
                    n
                ));
            }
            if best.is_none_or(|(bs, _)| size > bs) {
                best = Some((size, x));
            }
        }
        let (_, x) = best.expect("proper subgroup always extends");
        gens.push(x);
        cur = closure(t, &gens);
    }
    if gens.len() as u32 == lower {
        return Budgeted::Done(lower);
    }
    Budgeted::Skipped(format!(
        "minimal generators between {} and {} unresolved (|H| = {})",
        lower,
        gens.len(),
        n
    ))
}

fn burnside_rank<T: GroupTable>(t: &T, h: &[usize], p: usize) -> u32 {
    let mut gens: Vec<usize> = Vec::new();
    for &x in h {
        for &y in h {
            let c = t.commutator(x, y);
            if c != t.identity() {
                gens.push(c);
            }
        }
    }
    for &x in h {
        let xp = t.pow(x, p);
        if xp != t.identity() {
            gens.push(xp);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let phi = closure(t, &gens);
    log_exact(h.len() / phi.len(), p).expect("Frattini index is a p-power")
}

fn member_set(order: usize, members: &[usize]) -> Vec<bool> {
    let mut set = vec![false; order];
    for &m in members {
        set[m] = true;
    }
    set
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n > 1 {
        if !n.is_multiple_of(p) {
            return false;
        }
        n /= p;
    }
    true
}

fn p_part_of(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n.is_multiple_of(p) {
        part *= p;
        n /= p;
    }
    part
}

/// r(G) = sup of d(H) over all subgroups, by exhaustive enumeration.
///
/// The lattice also yields each subgroup's Frattini subgroup (the
/// intersection of its maximal subgroups), which shrinks the generator
/// searches to Frattini quotients.
pub fn rank_table<T: GroupTable>(t: &T, order_cap: usize, work_cap: u64) -> Budgeted<u32> {
    if t.order() > order_cap {
        return Budgeted::Skipped(format!(
            "group order {} exceeds the rank budget {}",
            t.order(),
            order_cap
        ));
    }
    let subs = match all_subgroups(t, work_cap) {
        Budgeted::Done(s) => s,
        Budgeted::Skipped(why) => return Budgeted::Skipped(why),
    };
    let words = t.order().div_ceil(64);
    let bitsets: Vec<Vec<u64>> = subs
        .iter()
        .map(|h| {
            let mut b = vec![0u64; words];
            for &x in h {
                b[x / 64] |= 1 << (x % 64);
            }
            b
        })
        .collect();
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut rank = 0u32;
    let mut meter = WorkMeter {
        left: work_cap as i64,
    };
    for (hi, h) in subs.iter().enumerate() {
        // Maximal proper subgroups of h, from the lattice.
        let proper: Vec<usize> = (0..subs.len())
            .filter(|&j| {
                subs[j].len() < h.len()
                    && h.len() % subs[j].len() == 0
                    && subset(&bitsets[j], &bitsets[hi])
            })
            .collect();
        let maximal: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&j| {
                !proper.iter().any(|&k| {
                    k != j && subs[k].len() > subs[j].len() && subset(&bitsets[j], &bitsets[k])
                })
            })
            .collect();
        let phi: Vec<usize> = match maximal.split_first() {
            None => h.clone(),
            Some((&first, rest)) => {
                let mut acc = bitsets[first].clone();
                for &j in rest {
                    for (w, m) in acc.iter_mut().zip(&bitsets[j]) {
                        *w &= m;
                    }
                }
                (0..t.order())
                    .filter(|&x| acc[x / 64] >> (x % 64) & 1 == 1)
                    .collect()
            }
        };
        match min_gens_inner(t, h, Some(&phi), &mut meter) {
            Budgeted::Done(d) => rank = rank.max(d),
            Budgeted::Skipped(why) => return Budgeted::Skipped(why),
        }
    }
    Budgeted::Done(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    #[test]
    fn class_of_small_groups() {
        assert_eq!(
            nilpotency_class_table(&make_group("cyclic:1").unwrap()),
            Some(0)
        );
        assert_eq!(
            nilpotency_class_table(&make_group("abelian:3,3").unwrap()),
            Some(1)
        );
        assert_eq!(
            nilpotency_class_table(&make_group("heisenberg:3").unwrap()),
            Some(2)
        );
        assert_eq!(
            nilpotency_class_table(&make_group("dihedral:16").unwrap()),
            Some(3)
        );
        assert_eq!(
            nilpotency_class_table(&make_group("wreath:3").unwrap()),
            Some(3)
        );
    }

    #[test]
    fn subgroup_counts_of_known_groups() {
        // Z₆ has one subgroup per divisor.
        let subs = all_subgroups(&make_group("cyclic:6").unwrap(), 1 << 20)
            .done()
            .unwrap();
        assert_eq!(subs.len(), 4);
        // Klein four-group: trivial + three order-2 + whole = 5.
        let subs = all_subgroups(&make_group("abelian:2,2").unwrap(), 1 << 20)
            .done()
            .unwrap();
        assert_eq!(subs.len(), 5);
        // Q₈: trivial, center, three cyclic of order 4, whole = 6.
        let subs = all_subgroups(&make_group("quaternion:8").unwrap(), 1 << 20)
            .done()
            .unwrap();
        assert_eq!(subs.len(), 6);
        // D₄: 10 subgroups.
        let subs = all_subgroups(&make_group("dihedral:8").unwrap(), 1 << 20)
            .done()
            .unwrap();
        assert_eq!(subs.len(), 10);
        // Z₃ × Z₃: trivial + four order-3 + whole = 6.
        let subs = all_subgroups(&make_group("abelian:3,3").unwrap(), 1 << 20)
            .done()
            .unwrap();
        assert_eq!(subs.len(), 6);
    }

    #[test]
    fn min_generator_counts_on_tables() {
        let g = make_group("dihedral:8").unwrap();
        let whole: Vec<usize> = (0..8).collect();
        assert_eq!(min_generators_table(&g, &whole, 1 << 20), Budgeted::Done(2));
        let h = make_group("heisenberg:3").unwrap();
        let whole: Vec<usize> = (0..27).collect();
        assert_eq!(min_generators_table(&h, &whole, 1 << 20), Budgeted::Done(2));
        // A cyclic non-prime-power group.
        let c = make_group("cyclic:12").unwrap();
        let whole: Vec<usize> = (0..12).collect();
        assert_eq!(min_generators_table(&c, &whole, 1 << 20), Budgeted::Done(1));
        // A nilpotent non-cyclic mixed-order group: Z₂² × Z₃ needs 2.
        let m = make_group("product(abelian:2,2,cyclic:3)").unwrap();
        let whole: Vec<usize> = (0..12).collect();
        assert_eq!(min_generators_table(&m, &whole, 1 << 20), Budgeted::Done(2));
    }

    #[test]
    fn rank_of_small_groups() {
        assert_eq!(
            rank_table(&make_group("abelian:3,3").unwrap(), 729, 1 << 24),
            Budgeted::Done(2)
        );
        assert_eq!(
            rank_table(&make_group("cyclic:27").unwrap(), 729, 1 << 24),
            Budgeted::Done(1)
        );
        // Q₈ is 2-generated and all proper subgroups are cyclic.
        assert_eq!(
            rank_table(&make_group("quaternion:8").unwrap(), 729, 1 << 24),
            Budgeted::Done(2)
        );
        // Elementary abelian 2³ has rank 3.
        assert_eq!(
            rank_table(&make_group("abelian:2,2,2").unwrap(), 729, 1 << 24),
            Budgeted::Done(3)
        );
    }

    #[test]
    fn rank_budget_produces_typed_skip() {
        let g = make_group("wreath:3").unwrap();
        assert!(matches!(rank_table(&g, 10, 1 << 24), Budgeted::Skipped(_)));
        assert!(matches!(rank_table(&g, 729, 1), Budgeted::Skipped(_)));
    }
}
