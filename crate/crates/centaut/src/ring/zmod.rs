//! The ring Z/n, used as a small reference ring for exercising the
//! generic ring algorithms (idempotent walks, circle composition,
//! radicality) against values computable by hand.

use super::FiniteRing;

#[derive(Debug, Clone)]
pub struct ZmodRing {
    n: u64,
}

impl ZmodRing {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1);
        ZmodRing { n }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }
}

impl FiniteRing for ZmodRing {
    type Elem = u64;

    fn size(&self) -> u128 {
        self.n as u128
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.n).collect()
    }

    fn zero(&self) -> u64 {
        0
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        (x + y) % self.n
    }

    fn neg(&self, x: &u64) -> u64 {
        (self.n - x % self.n) % self.n
    }

    fn mul(&self, x: &u64, y: &u64) -> u64 {
        x * y % self.n
    }
}
