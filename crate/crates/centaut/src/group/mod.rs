//! Finite groups as explicit multiplication tables, together with the
//! characteristic subgroups (center, derived subgroup, Frattini subgroup,
//! second center) that the ring-theoretic machinery consumes.
//!
//! Groups are immutable after construction and every operation here is a
//! pure scan or closure over the table, so values can be shared freely.

mod cayley_json;
mod spec;

pub use cayley_json::{group_from_json, group_to_json};
pub use spec::make_group;

use crate::error::{Error, Result};

/// Hard cap on group order: construction validates associativity in full,
/// which is O(n³), and stays fast only at desk scale.
pub const MAX_ORDER: usize = 512;

/// A finite group given by its full multiplication table.
///
/// `table[i * order + j]` holds the index of the product `i·j`.
#[derive(Debug, Clone)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<u16>,
    identity: u16,
    inverse: Vec<u16>,
    labels: Option<Vec<String>>,
    prime: Option<u32>,
}

/// A subgroup of a [`CayleyGroup`], stored as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<u16>,
}

impl CayleyGroup {
    /// Validates a raw table and builds the group.
    ///
    /// Checks, in order: order cap, Latin-square rows and columns, the
    /// identity law, existence of two-sided inverses, and full
    /// associativity. The first violation is reported with its indices.
    pub fn new(
        order: usize,
        table: Vec<u16>,
        identity: u16,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidCayley("order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderCap(order, MAX_ORDER));
        }
        if table.len() != order * order {
            return Err(Error::InvalidCayley(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(Error::InvalidCayley(
                    "label list length differs from order".into(),
                ));
            }
        }
        let n = order;
        for (pos, &v) in table.iter().enumerate() {
            if (v as usize) >= n {
                return Err(Error::InvalidCayley(format!(
                    "entry ({},{}) = {} is out of range",
                    pos / n,
                    pos % n,
                    v
                )));
            }
        }
        // Latin square: each row and column is a permutation of 0..n.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] {
                    return Err(Error::InvalidCayley(format!(
                        "row {} repeats element {} (at column {})",
                        i, v, j
                    )));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] {
                    return Err(Error::InvalidCayley(format!(
                        "column {} repeats element {} (at row {})",
                        j, v, i
                    )));
                }
                seen[v] = true;
            }
        }
        let e = identity as usize;
        if e >= n {
            return Err(Error::InvalidCayley(format!(
                "identity index {} out of range",
                e
            )));
        }
        for i in 0..n {
            if table[e * n + i] as usize != i || table[i * n + e] as usize != i {
                return Err(Error::InvalidCayley(format!(
                    "element {} violates the identity law",
                    i
                )));
            }
        }
        let mut inverse = vec![0u16; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if table[i * n + j] as usize == e && table[j * n + i] as usize == e {
                    found = Some(j as u16);
                    break;
                }
            }
            match found {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(Error::InvalidCayley(format!(
                        "element {} has no two-sided inverse",
                        i
                    )))
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j] as usize;
                for k in 0..n {
                    let jk = table[j * n + k] as usize;
                    if table[ij * n + k] != table[i * n + jk] {
                        return Err(Error::InvalidCayley(format!(
                            "associativity fails at triple ({},{},{}): ({}·{})·{} = {} but {}·({}·{}) = {}",
                            i, j, k, i, j, k, table[ij * n + k], i, j, k, table[i * n + jk]
                        )));
                    }
                }
            }
        }
        let prime = prime_power_base(order);
        Ok(CayleyGroup {
            order,
            table,
            identity,
            inverse,
            labels,
            prime,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    /// The prime p when the group order is a power of p, else `None`.
    pub fn prime(&self) -> Option<u32> {
        self.prime
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: u16) -> String {
        match &self.labels {
            Some(l) => l[i as usize].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn mul(&self, i: u16, j: u16) -> u16 {
        self.table[i as usize * self.order + j as usize]
    }

    #[inline]
    pub fn inv(&self, i: u16) -> u16 {
        self.inverse[i as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.order as u16
    }

    /// x^k for k ≥ 0.
    pub fn pow(&self, x: u16, k: usize) -> u16 {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: u16) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// exp(G): least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        let mut l = 1usize;
        for x in self.elements() {
            l = lcm(l, self.element_order(x));
        }
        l
    }

    /// Commutator x⁻¹y⁻¹xy.
    pub fn commutator(&self, x: u16, y: u16) -> u16 {
        let a = self.mul(self.inv(x), self.inv(y));
        let b = self.mul(x, y);
        self.mul(a, b)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        for i in 0..n as u16 {
            for j in (i + 1)..n as u16 {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Closure of a generating set, as a sorted member list.
    pub fn closure(&self, gens: &[u16]) -> Vec<u16> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity as usize] = true;
        let mut stack: Vec<u16> = vec![self.identity];
        let mut queue = stack.clone();
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    stack.push(y);
                    queue.push(y);
                }
            }
        }
        stack.sort_unstable();
        stack
    }

    /// Conjugation by g as a permutation: x ↦ g⁻¹xg.
    pub fn conjugation(&self, g: u16) -> Vec<u16> {
        let gi = self.inv(g);
        self.elements()
            .map(|x| self.mul(self.mul(gi, x), g))
            .collect()
    }
}

impl Subgroup {
    /// Builds a subgroup from a member list, verifying the closure
    /// invariants (identity, inverses, products).
    pub fn new(group: &CayleyGroup, mut members: Vec<u16>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let sg = Subgroup {
            parent_order: group.order(),
            members,
        };
        sg.validate(group)?;
        Ok(sg)
    }

    pub(crate) fn from_sorted_unchecked(group: &CayleyGroup, members: Vec<u16>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            parent_order: group.order(),
            members,
        }
    }

    pub(crate) fn raw(parent_order: usize, members: Vec<u16>) -> Self {
        Subgroup {
            parent_order,
            members,
        }
    }

    fn validate(&self, group: &CayleyGroup) -> Result<()> {
        if self.parent_order != group.order() {
            return Err(Error::Precondition(
                "subgroup does not belong to this group".into(),
            ));
        }
        if !self.contains(group.identity()) {
            return Err(Error::Precondition("subgroup misses the identity".into()));
        }
        if !group.order().is_multiple_of(self.members.len()) {
            return Err(Error::Precondition(
                "subgroup size does not divide the group order".into(),
            ));
        }
        for &x in &self.members {
            if !self.contains(group.inv(x)) {
                return Err(Error::Precondition(format!(
                    "subgroup not closed under inverse of {}",
                    x
                )));
            }
            for &y in &self.members {
                if !self.contains(group.mul(x, y)) {
                    return Err(Error::Precondition(format!(
                        "subgroup not closed under product {}·{}",
                        x, y
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn members(&self) -> &[u16] {
        &self.members
    }

    pub fn contains(&self, x: u16) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self, group: &CayleyGroup) -> bool {
        for g in group.elements() {
            let gi = group.inv(g);
            for &h in &self.members {
                if !self.contains(group.mul(group.mul(gi, h), g)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self, group: &CayleyGroup) -> bool {
        for &x in &self.members {
            for &y in &self.members {
                if group.mul(x, y) != group.mul(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(group: &CayleyGroup) -> Self {
        Subgroup {
            parent_order: group.order(),
            members: group.elements().collect(),
        }
    }

    pub fn trivial(group: &CayleyGroup) -> Self {
        Subgroup {
            parent_order: group.order(),
            members: vec![group.identity()],
        }
    }
}

/// Z(G): all elements commuting with everything.
pub fn center(group: &CayleyGroup) -> Subgroup {
    let members = group
        .elements()
        .filter(|&z| group.elements().all(|x| group.mul(z, x) == group.mul(x, z)))
        .collect();
    Subgroup::from_sorted_unchecked(group, members)
}

/// G′: the subgroup generated by all commutators.
pub fn derived_subgroup(group: &CayleyGroup) -> Subgroup {
    let mut gens: Vec<u16> = Vec::new();
    for x in group.elements() {
        for y in group.elements() {
            let c = group.commutator(x, y);
            if c != group.identity() {
                gens.push(c);
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Subgroup::from_sorted_unchecked(group, group.closure(&gens))
}

/// Φ(G) for a p-group, computed as the closure of commutators and p-th
/// powers. The trivial group is allowed and yields the trivial subgroup.
pub fn frattini(group: &CayleyGroup) -> Result<Subgroup> {
    if group.order() == 1 {
        return Ok(Subgroup::trivial(group));
    }
    let p = group
        .prime()
        .ok_or(Error::NotPGroup("frattini", group.order()))? as usize;
    let mut gens: Vec<u16> = Vec::new();
    for x in group.elements() {
        for y in group.elements() {
            gens.push(group.commutator(x, y));
        }
    }
    for x in group.elements() {
        gens.push(group.pow(x, p));
    }
    gens.retain(|&g| g != group.identity());
    gens.sort_unstable();
    gens.dedup();
    Ok(Subgroup::from_sorted_unchecked(group, group.closure(&gens)))
}

/// Z₂(G): the preimage in G of the center of G/Z(G).
pub fn second_center(group: &CayleyGroup) -> Subgroup {
    // z ∈ Z₂ iff every commutator [z, x] is central.
    let z = center(group);
    let members = group
        .elements()
        .filter(|&g| group.elements().all(|x| z.contains(group.commutator(g, x))))
        .collect();
    Subgroup::from_sorted_unchecked(group, members)
}

/// The quotient G/N together with the canonical projection (element index
/// in G → coset index in the quotient).
pub fn quotient(group: &CayleyGroup, normal: &Subgroup) -> Result<(CayleyGroup, Vec<u16>)> {
    if normal.parent_order() != group.order() {
        return Err(Error::Precondition(
            "subgroup does not belong to this group".into(),
        ));
    }
    for g in group.elements() {
        let gi = group.inv(g);
        for &h in normal.members() {
            if !normal.contains(group.mul(group.mul(gi, h), g)) {
                return Err(Error::NotNormal(g as usize, h as usize));
            }
        }
    }
    let n = group.order();
    let m = n / normal.len();
    // Name each coset by its smallest member.
    let mut coset_of = vec![u16::MAX; n];
    let mut reps: Vec<u16> = Vec::with_capacity(m);
    for g in group.elements() {
        if coset_of[g as usize] != u16::MAX {
            continue;
        }
        let idx = reps.len() as u16;
        reps.push(g);
        for &h in normal.members() {
            coset_of[group.mul(g, h) as usize] = idx;
        }
    }
    let mut table = vec![0u16; m * m];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            table[a * m + b] = coset_of[group.mul(ra, rb) as usize];
        }
    }
    let labels = reps
        .iter()
        .map(|&r| format!("[{}]", group.label(r)))
        .collect();
    let q = CayleyGroup::new(m, table, coset_of[group.identity() as usize], Some(labels))?;
    Ok((q, coset_of))
}

/// d(G): minimal number of generators.
///
/// For p-groups this is the Burnside basis count log_p |G/Φ(G)|; for
/// abelian groups it is the largest p-rank over the primes dividing |G|.
pub fn min_generators(group: &CayleyGroup) -> Result<u32> {
    if group.order() == 1 {
        return Ok(0);
    }
    if let Some(p) = group.prime() {
        let phi = frattini(group)?;
        let index = group.order() / phi.len();
        return Ok(log_exact(index, p as usize).expect("Frattini index is a p-power"));
    }
    if group.is_abelian() {
        // p-rank of an abelian group = log_p #{x : x^p = e}.
        let mut d = 0u32;
        for p in prime_divisors(group.order()) {
            let count = group
                .elements()
                .filter(|&x| group.pow(x, p) == group.identity())
                .count();
            d = d.max(log_exact(count, p).expect("p-torsion count is a p-power"));
        }
        return Ok(d);
    }
    Err(Error::Precondition(
        "min_generators supports p-groups and abelian groups only".into(),
    ))
}

/// Prime divisors of n, ascending.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If n = p^k for a prime p and k ≥ 1, returns p.
pub fn prime_power_base(n: usize) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let ps = prime_divisors(n);
    if ps.len() == 1 {
        Some(ps[0] as u32)
    } else {
        None
    }
}

/// log_p(n) when n is an exact power of p.
pub fn log_exact(mut n: usize, p: usize) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
