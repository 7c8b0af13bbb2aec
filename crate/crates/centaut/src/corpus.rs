//! The default corpus of groups the verification matrix runs over, plus
//! loading of user corpora from JSON files (an array of spec strings).

use crate::error::{Error, Result};
use crate::group::{make_group, CayleyGroup};

/// Orders stay oracle-friendly: every default entry is ≤ 128 so the
/// brute-force automorphism search always applies.
pub const CORPUS_ORDER_CAP: usize = 128;

pub const DEFAULT_CORPUS: &[&str] = &[
    "cyclic:3",
    "cyclic:9",
    "cyclic:27",
    "abelian:3,3",
    "abelian:9,3",
    "abelian:2,2",
    "dihedral:8",
    "dihedral:16",
    "quaternion:8",
    "heisenberg:3",
    "modular:3",
    "wreath:3",
    "product(cyclic:3,heisenberg:3)",
    "product(cyclic:2,dihedral:8)",
    "product(cyclic:9,cyclic:3)",
];

#[derive(Debug)]
pub struct Corpus {
    entries: Vec<(String, CayleyGroup)>,
}

impl Corpus {
    /// Parses and validates every spec; orders above the cap are input
    /// errors, not silent skips.
    pub fn from_specs<S: AsRef<str>>(specs: &[S]) -> Result<Self> {
        let mut entries = Vec::with_capacity(specs.len());
        for s in specs {
            let spec = s.as_ref().trim().to_string();
            if spec.is_empty() {
                continue;
            }
            let g = make_group(&spec)?;
            if g.order() > CORPUS_ORDER_CAP {
                return Err(Error::Precondition(format!(
                    "corpus entry `{}` has order {} > {}",
                    spec,
                    g.order(),
                    CORPUS_ORDER_CAP
                )));
            }
            entries.push((spec, g));
        }
        Ok(Corpus { entries })
    }

    pub fn default_corpus() -> Self {
        Self::from_specs(DEFAULT_CORPUS).expect("default corpus is valid")
    }

    /// Loads a JSON array of spec strings.
    pub fn from_json_file(path: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let specs: Vec<String> = serde_json::from_str(&text)?;
        Self::from_specs(&specs)
    }

    /// Keeps only the p-groups for the given prime.
    pub fn filter_prime(self, p: u32) -> Self {
        let entries = self
            .entries
            .into_iter()
            .filter(|(_, g)| g.prime() == Some(p))
            .collect();
        Corpus { entries }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(String, CayleyGroup)] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_parses_and_fits_cap() {
        let c = Corpus::default_corpus();
        assert_eq!(c.len(), DEFAULT_CORPUS.len());
        for (spec, g) in c.entries() {
            assert!(g.order() <= CORPUS_ORDER_CAP, "{spec}");
        }
    }

    #[test]
    fn oversized_entry_rejected() {
        assert!(Corpus::from_specs(&["cyclic:256"]).is_err());
    }

    #[test]
    fn prime_filter() {
        let c = Corpus::default_corpus().filter_prime(2);
        assert!(c.entries().iter().all(|(_, g)| g.prime() == Some(2)));
        assert_eq!(c.len(), 5);
    }
}
