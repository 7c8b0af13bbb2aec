//! The adjoint group R∘ of a finite ring: all quasi-invertible elements
//! under the circle composition x∘y = x + y + xy, with 0 as identity.
//!
//! For a radical ring the members are the whole ring. The group is
//! materialized with an explicit circle table so the generic machinery
//! (nilpotency class, Ω sets, subgroup rank) applies directly.

use crate::error::{Error, Result};
use crate::grouptable::{
    closure, is_abelian_table, nilpotency_class_table, rank_table, Budgeted, GroupTable, MulTable,
};
use crate::ring::{circle, quasi_inverse, FiniteRing};
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

/// Cap on materializing the circle table (|A|² entries).
pub const ADJOINT_TABLE_CAP: usize = 2048;

#[derive(Debug, Clone)]
pub struct AdjointGroup<E: Clone + Eq + Ord + Hash + Debug> {
    members: Vec<E>,
    index: HashMap<E, usize>,
    inverse: Vec<usize>,
    table: MulTable,
}

/// Collects the quasi-invertible elements and their circle table.
///
/// Nilpotent elements get their inverse from the alternating power
/// series; the rest fall back to a scan over the ring.
pub fn adjoint_group<R: FiniteRing>(ring: &R, cap: usize) -> Result<AdjointGroup<R::Elem>> {
    let elems = ring.enumerable(cap)?;
    let mut members: Vec<R::Elem> = Vec::new();
    let mut inv_of: HashMap<R::Elem, R::Elem> = HashMap::new();
    for x in &elems {
        if let Some(inv) = quasi_inverse(ring, x) {
            inv_of.insert(x.clone(), inv);
            members.push(x.clone());
        }
    }
    members.sort_unstable();
    if members.len() > ADJOINT_TABLE_CAP {
        return Err(Error::RingCap(members.len() as u128, ADJOINT_TABLE_CAP));
    }
    let index: HashMap<R::Elem, usize> = members
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    let n = members.len();
    let mut table = vec![0u32; n * n];
    for (a, x) in members.iter().enumerate() {
        for (b, y) in members.iter().enumerate() {
            let z = circle(ring, x, y);
            table[a * n + b] = *index.get(&z).expect("adjoint group is closed under circle") as u32;
        }
    }
    let zero_idx = index[&ring.zero()];
    let inverse: Vec<usize> = members.iter().map(|x| index[&inv_of[x]]).collect();
    Ok(AdjointGroup {
        members,
        index,
        inverse,
        table: MulTable::new(n, zero_idx, table),
    })
}

impl<E: Clone + Eq + Ord + Hash + Debug> AdjointGroup<E> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[E] {
        &self.members
    }

    pub fn contains(&self, x: &E) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// The circle table over member indices.
    pub fn table(&self) -> &MulTable {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        is_abelian_table(&self.table)
    }

    /// Nilpotency class via the lower central series (`None` when not
    /// nilpotent; class 0 is the trivial group).
    pub fn group_class(&self) -> Option<u32> {
        nilpotency_class_table(&self.table)
    }

    /// Circle order of a member.
    pub fn member_order(&self, i: usize) -> usize {
        self.table.element_order(i)
    }

    /// Ω_{{n}} — the members of circle order dividing pⁿ — together with
    /// Ω_n, the subgroup they generate. Both as sorted member indices.
    pub fn omega_set(&self, p: u64, n: u32) -> (Vec<usize>, Vec<usize>) {
        let pn = p.pow(n);
        let set: Vec<usize> = (0..self.len())
            .filter(|&i| pn.is_multiple_of(self.member_order(i) as u64))
            .collect();
        let subgroup = closure(&self.table, &set);
        (set, subgroup)
    }

    /// Rank by exhaustive subgroup enumeration, within explicit budgets.
    pub fn group_rank(&self, order_cap: usize, work_cap: u64) -> Budgeted<u32> {
        rank_table(&self.table, order_cap, work_cap)
    }
}
