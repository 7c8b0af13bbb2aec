//! Finite associative rings and the ring-theoretic predicates shared by
//! the homomorphism rings and the small reference rings used in tests.
//!
//! Everything here is phrased against the [`FiniteRing`] trait: the circle
//! composition x∘y = x + y + xy, quasi-inverses, power subrings and
//! nilpotency class, the idempotent walk through the power sequence of an
//! element, radicality, left/right p-nil, and the Ω_n torsion ideals.

pub mod zmod;

use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

/// Default cap on full ring enumeration: scans above this size are
/// refused rather than silently truncated.
pub const RING_ENUM_CAP: usize = 65536;

/// A finite associative ring whose elements can be enumerated.
pub trait FiniteRing {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn size(&self) -> u128;
    fn elements(&self) -> Vec<Self::Elem>;
    fn zero(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    /// n·x for n ≥ 0.
    fn scale(&self, n: u64, x: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.add(&acc, x);
        }
        acc
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn enumerable(&self, cap: usize) -> Result<Vec<Self::Elem>> {
        if self.size() > cap as u128 {
            return Err(Error::RingCap(self.size(), cap));
        }
        Ok(self.elements())
    }
}

/// The circle composition x∘y = x + y + xy.
pub fn circle<R: FiniteRing>(ring: &R, x: &R::Elem, y: &R::Elem) -> R::Elem {
    let sum = ring.add(x, y);
    ring.add(&sum, &ring.mul(x, y))
}

/// k-th circle power of x, computed iteratively.
pub fn circle_pow<R: FiniteRing>(ring: &R, x: &R::Elem, k: u64) -> R::Elem {
    let mut acc = ring.zero();
    for _ in 0..k {
        acc = circle(ring, &acc, x);
    }
    acc
}

/// Order of x in the adjoint monoid, assuming x is quasi-invertible.
pub fn circle_order<R: FiniteRing>(ring: &R, x: &R::Elem) -> u64 {
    let mut acc = x.clone();
    let mut k = 1;
    while !ring.is_zero(&acc) {
        acc = circle(ring, &acc, x);
        k += 1;
    }
    k
}

/// Additive order of x.
pub fn additive_order<R: FiniteRing>(ring: &R, x: &R::Elem) -> u64 {
    let mut acc = x.clone();
    let mut k = 1;
    while !ring.is_zero(&acc) {
        acc = ring.add(&acc, x);
        k += 1;
    }
    k
}

/// The quasi-inverse of x, if it exists.
///
/// For nilpotent x the alternating series −x + x² − x³ + … terminates and
/// is the inverse; otherwise the ring is scanned for a two-sided circle
/// inverse and `None` is returned when there is none.
pub fn quasi_inverse<R: FiniteRing>(ring: &R, x: &R::Elem) -> Option<R::Elem> {
    // Power walk: either reach 0 (nilpotent) or detect a cycle.
    let mut seen: HashSet<R::Elem> = HashSet::new();
    let mut pw = x.clone();
    let mut nilpotent = false;
    loop {
        if ring.is_zero(&pw) {
            nilpotent = true;
            break;
        }
        if !seen.insert(pw.clone()) {
            break;
        }
        pw = ring.mul(&pw, x);
    }
    if nilpotent {
        let mut inv = ring.zero();
        let mut pw = x.clone();
        let mut sign_neg = true;
        while !ring.is_zero(&pw) {
            inv = if sign_neg {
                ring.sub(&inv, &pw)
            } else {
                ring.add(&inv, &pw)
            };
            sign_neg = !sign_neg;
            pw = ring.mul(&pw, x);
        }
        debug_assert!(ring.is_zero(&circle(ring, x, &inv)));
        debug_assert!(ring.is_zero(&circle(ring, &inv, x)));
        return Some(inv);
    }
    ring.elements()
        .into_iter()
        .find(|y| ring.is_zero(&circle(ring, x, y)) && ring.is_zero(&circle(ring, y, x)))
}

/// Additive closure of a set of elements.
pub fn additive_closure<R: FiniteRing>(ring: &R, gens: &[R::Elem]) -> Vec<R::Elem> {
    let mut set: HashSet<R::Elem> = HashSet::new();
    set.insert(ring.zero());
    let mut queue: Vec<R::Elem> = vec![ring.zero()];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = ring.add(&x, g);
            if set.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    let mut out: Vec<R::Elem> = set.into_iter().collect();
    out.sort_unstable();
    out
}

/// Rⁿ: the additive group generated by all n-fold products.
pub fn power_subring<R: FiniteRing>(ring: &R, n: u32, cap: usize) -> Result<Vec<R::Elem>> {
    assert!(n >= 1);
    let elems = ring.enumerable(cap)?;
    let mut current: Vec<R::Elem> = elems.clone();
    for _ in 1..n {
        let mut prods: HashSet<R::Elem> = HashSet::new();
        for x in &current {
            for y in &elems {
                prods.insert(ring.mul(x, y));
            }
        }
        let gens: Vec<R::Elem> = prods.into_iter().collect();
        current = additive_closure(ring, &gens);
        if current.len() == 1 {
            break;
        }
    }
    if n == 1 {
        current.sort_unstable();
    }
    Ok(current)
}

/// The nilpotency class of the ring: least n with Rⁿ⁺¹ = 0, or `None`
/// when the power chain stabilizes away from zero. The zero ring has
/// class 0.
pub fn nilpotency_class<R: FiniteRing>(ring: &R, cap: usize) -> Result<Option<u32>> {
    let elems = ring.enumerable(cap)?;
    if elems.len() == 1 {
        return Ok(Some(0));
    }
    let mut current = elems.clone();
    let mut n = 1u32;
    loop {
        let mut prods: HashSet<R::Elem> = HashSet::new();
        for x in &current {
            for y in &elems {
                prods.insert(ring.mul(x, y));
            }
        }
        let gens: Vec<R::Elem> = prods.into_iter().collect();
        let next = additive_closure(ring, &gens);
        if next.len() == 1 {
            return Ok(Some(n));
        }
        if next.len() == current.len() && next.iter().all(|x| current.binary_search(x).is_ok()) {
            return Ok(None);
        }
        current = next;
        n += 1;
    }
}

/// Walks the powers of x until the sequence cycles and returns the
/// idempotent power x^k (k a multiple of the cycle length at or past the
/// tail). Always succeeds in a finite ring; nilpotent x yields 0.
pub fn idempotent_in_powers<R: FiniteRing>(ring: &R, x: &R::Elem) -> R::Elem {
    let mut first_seen: HashMap<R::Elem, u64> = HashMap::new();
    let mut pw = x.clone();
    let mut k = 1u64;
    loop {
        if let Some(&start) = first_seen.get(&pw) {
            let tail = start;
            let cycle = k - start;
            let mut idx = cycle;
            while idx < tail {
                idx += cycle;
            }
            let result = ring_pow(ring, x, idx);
            debug_assert_eq!(ring.mul(&result, &result), result);
            return result;
        }
        first_seen.insert(pw.clone(), k);
        pw = ring.mul(&pw, x);
        k += 1;
    }
}

/// x^k for k ≥ 1.
pub fn ring_pow<R: FiniteRing>(ring: &R, x: &R::Elem, k: u64) -> R::Elem {
    assert!(k >= 1);
    let mut acc = x.clone();
    for _ in 1..k {
        acc = ring.mul(&acc, x);
    }
    acc
}

/// Whether R is radical, with a nonzero idempotent witness when it is
/// not.
///
/// Up to `scan_cap` elements the idempotents are scanned directly; above
/// that the power walk of each element is used instead (the scan is the
/// oracle for the walk in tests).
pub fn is_radical<R: FiniteRing>(
    ring: &R,
    scan_cap: usize,
    cap: usize,
) -> Result<(bool, Option<R::Elem>)> {
    let elems = ring.enumerable(cap)?;
    if elems.len() <= scan_cap {
        for x in &elems {
            if !ring.is_zero(x) && ring.mul(x, x) == *x {
                return Ok((false, Some(x.clone())));
            }
        }
        Ok((true, None))
    } else {
        for x in &elems {
            let e = idempotent_in_powers(ring, x);
            if !ring.is_zero(&e) {
                return Ok((false, Some(e)));
            }
        }
        Ok((true, None))
    }
}

/// Ω_n(R) = {x : pⁿ·x = 0}.
pub fn omega_ideal<R: FiniteRing>(ring: &R, p: u64, n: u32, cap: usize) -> Result<Vec<R::Elem>> {
    assert!(n >= 1);
    let pn = p.pow(n);
    let mut out: Vec<R::Elem> = ring
        .enumerable(cap)?
        .into_iter()
        .filter(|x| pn.is_multiple_of(additive_order(ring, x)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Left p-nil: every x with p·x = 0 has x·y = 0 for all y.
pub fn is_left_p_nil<R: FiniteRing>(ring: &R, p: u64, cap: usize) -> Result<bool> {
    let torsion = omega_ideal(ring, p, 1, cap)?;
    let elems = ring.elements();
    for x in &torsion {
        for y in &elems {
            if !ring.is_zero(&ring.mul(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Right p-nil: every x with p·x = 0 has y·x = 0 for all y.
pub fn is_right_p_nil<R: FiniteRing>(ring: &R, p: u64, cap: usize) -> Result<bool> {
    let torsion = omega_ideal(ring, p, 1, cap)?;
    let elems = ring.elements();
    for x in &torsion {
        for y in &elems {
            if !ring.is_zero(&ring.mul(y, x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The factor ring R/I for a two-sided ideal I, with cosets named by
/// their smallest member.
pub struct QuotientRing<'a, R: FiniteRing> {
    base: &'a R,
    reps: Vec<R::Elem>,
    rep_of: HashMap<R::Elem, R::Elem>,
}

impl<'a, R: FiniteRing> QuotientRing<'a, R> {
    pub fn new(base: &'a R, ideal: &[R::Elem], cap: usize) -> Result<Self> {
        let elems = base.enumerable(cap)?;
        let mut rep_of: HashMap<R::Elem, R::Elem> = HashMap::with_capacity(elems.len());
        let mut reps = Vec::new();
        let mut sorted = elems;
        sorted.sort_unstable();
        for x in &sorted {
            if rep_of.contains_key(x) {
                continue;
            }
            reps.push(x.clone());
            for w in ideal {
                rep_of.insert(base.add(x, w), x.clone());
            }
        }
        Ok(QuotientRing { base, reps, rep_of })
    }
}

impl<R: FiniteRing> FiniteRing for QuotientRing<'_, R> {
    type Elem = R::Elem;

    fn size(&self) -> u128 {
        self.reps.len() as u128
    }

    fn elements(&self) -> Vec<Self::Elem> {
        self.reps.clone()
    }

    fn zero(&self) -> Self::Elem {
        self.rep_of[&self.base.zero()].clone()
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.rep_of[&self.base.add(x, y)].clone()
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        self.rep_of[&self.base.neg(x)].clone()
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.rep_of[&self.base.mul(x, y)].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::zmod::ZmodRing;
    use super::*;

    #[test]
    fn circle_identity_and_z4() {
        let r = ZmodRing::new(4);
        for x in r.elements() {
            assert_eq!(circle(&r, &x, &0), x);
            assert_eq!(circle(&r, &0, &x), x);
        }
        assert_eq!(circle(&r, &2, &2), 0);
    }

    #[test]
    fn circle_is_associative_on_z12() {
        let r = ZmodRing::new(12);
        for x in r.elements() {
            for y in r.elements() {
                for z in r.elements() {
                    assert_eq!(
                        circle(&r, &circle(&r, &x, &y), &z),
                        circle(&r, &x, &circle(&r, &y, &z))
                    );
                }
            }
        }
    }

    #[test]
    fn quasi_inverse_examples() {
        let r4 = ZmodRing::new(4);
        assert_eq!(quasi_inverse(&r4, &0), Some(0));
        assert_eq!(quasi_inverse(&r4, &2), Some(2));
        // In Z/3 (≅ End(Z₃)) the element 2 = −1 has no quasi-inverse:
        // 1 + 2 = 0 is not a unit.
        let r3 = ZmodRing::new(3);
        assert_eq!(quasi_inverse(&r3, &2), None);
        assert!(quasi_inverse(&r3, &1).is_some());
    }

    #[test]
    fn idempotent_walk_on_z12() {
        let r = ZmodRing::new(12);
        assert_eq!(idempotent_in_powers(&r, &2), 4);
        assert_eq!(idempotent_in_powers(&r, &4), 4);
        assert_eq!(idempotent_in_powers(&r, &9), 9);
        assert_eq!(idempotent_in_powers(&r, &6), 0);
        for x in r.elements() {
            let e = idempotent_in_powers(&r, &x);
            assert_eq!(r.mul(&e, &e), e);
        }
    }

    #[test]
    fn nilpotent_x_walks_to_zero() {
        let r = ZmodRing::new(8);
        assert_eq!(idempotent_in_powers(&r, &2), 0);
        assert_eq!(idempotent_in_powers(&r, &4), 0);
    }

    #[test]
    fn radical_examples() {
        // Z/4 is not radical (1 is a nonzero idempotent).
        let (rad, wit) = is_radical(&ZmodRing::new(4), 4096, RING_ENUM_CAP).unwrap();
        assert!(!rad);
        assert_eq!(wit, Some(1));
        // The zero ring is radical.
        let (rad, _) = is_radical(&ZmodRing::new(1), 4096, RING_ENUM_CAP).unwrap();
        assert!(rad);
        // Scan and walk agree on Z/12.
        let r = ZmodRing::new(12);
        let (a, _) = is_radical(&r, 4096, RING_ENUM_CAP).unwrap();
        let (b, _) = is_radical(&r, 0, RING_ENUM_CAP).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn power_subring_and_class() {
        let r = ZmodRing::new(3);
        // Unital ring: R² = R, not nilpotent.
        assert_eq!(power_subring(&r, 2, RING_ENUM_CAP).unwrap().len(), 3);
        assert_eq!(nilpotency_class(&r, RING_ENUM_CAP).unwrap(), None);
        assert_eq!(
            nilpotency_class(&ZmodRing::new(1), RING_ENUM_CAP).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn omega_and_p_nil_on_zmod() {
        let r = ZmodRing::new(9);
        assert_eq!(omega_ideal(&r, 3, 1, RING_ENUM_CAP).unwrap(), vec![0, 3, 6]);
        assert_eq!(omega_ideal(&r, 3, 2, RING_ENUM_CAP).unwrap().len(), 9);
        // 3·3 = 0 yet 3·1 ≠ 0, so Z/9 is not p-nil.
        assert!(!is_left_p_nil(&r, 3, RING_ENUM_CAP).unwrap());
        assert!(!is_right_p_nil(&r, 3, RING_ENUM_CAP).unwrap());
    }

    #[test]
    fn quotient_ring_of_z12_by_omega() {
        let r = ZmodRing::new(12);
        let ideal = omega_ideal(&r, 2, 1, RING_ENUM_CAP).unwrap();
        assert_eq!(ideal, vec![0, 6]);
        let q = QuotientRing::new(&r, &ideal, RING_ENUM_CAP).unwrap();
        assert_eq!(q.size(), 6);
        // Ring axioms spot-check on the quotient.
        for x in q.elements() {
            for y in q.elements() {
                assert_eq!(q.add(&x, &y), q.add(&y, &x));
                for z in q.elements() {
                    assert_eq!(q.mul(&q.mul(&x, &y), &z), q.mul(&x, &q.mul(&y, &z)));
                    assert_eq!(
                        q.mul(&x, &q.add(&y, &z)),
                        q.add(&q.mul(&x, &y), &q.mul(&x, &z))
                    );
                }
            }
        }
    }

    #[test]
    fn circle_power_matches_binomial_expansion() {
        // x^{(k)} = Σ_{i≥1} C(k,i) xⁱ in any associative ring.
        let r = ZmodRing::new(12);
        for x in r.elements() {
            for k in 1..=6u64 {
                let lhs = circle_pow(&r, &x, k);
                let mut rhs = r.zero();
                let mut binom = 1u64;
                for i in 1..=k {
                    binom = binom * (k - i + 1) / i;
                    rhs = r.add(&rhs, &r.scale(binom, &ring_pow(&r, &x, i)));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}
