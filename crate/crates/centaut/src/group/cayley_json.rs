//! JSON serialization of Cayley tables.
//!
//! Format: { "order": n, "identity": i, "table": [[...], ...], "labels": [...]? }
//! with 0-based element indices. Loading revalidates every group invariant
//! and reports the first violation found.

use super::CayleyGroup;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct CayleyFile {
    order: usize,
    identity: u16,
    table: Vec<Vec<u16>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn group_from_json(text: &str) -> Result<CayleyGroup> {
    let file: CayleyFile = serde_json::from_str(text)?;
    if file.table.len() != file.order {
        return Err(Error::InvalidCayley(format!(
            "table has {} rows, expected {}",
            file.table.len(),
            file.order
        )));
    }
    let mut flat = Vec::with_capacity(file.order * file.order);
    for (i, row) in file.table.iter().enumerate() {
        if row.len() != file.order {
            return Err(Error::InvalidCayley(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                file.order
            )));
        }
        flat.extend_from_slice(row);
    }
    CayleyGroup::new(file.order, flat, file.identity, file.labels)
}

pub fn group_to_json(group: &CayleyGroup) -> String {
    let n = group.order();
    let table: Vec<Vec<u16>> = (0..n)
        .map(|i| (0..n).map(|j| group.mul(i as u16, j as u16)).collect())
        .collect();
    let file = CayleyFile {
        order: n,
        identity: group.identity(),
        table,
        labels: group.labels().map(|l| l.to_vec()),
    };
    serde_json::to_string_pretty(&file).expect("cayley file serializes")
}
