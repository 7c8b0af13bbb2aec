//! JSON records for the `analyze` and `verify` commands.
//!
//! Reports are deterministic byte-for-byte: records are sorted by group
//! order then spec string, and serialization goes through
//! `serde_json::Value`, whose map keeps keys sorted.

use crate::error::Result;
use crate::grouptable::Budgeted;
use crate::oracle::Budget;
use crate::ring::FiniteRing;
use crate::verify::{GroupAnalysis, Matrix, Row};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum RankValue {
    Value(u32),
    Skipped(String),
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CriterionValue {
    Decided(bool),
    Inapplicable(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct HomRingReport {
    pub size: u128,
    pub source_orders: Vec<u64>,
    pub target_orders: Vec<u64>,
    /// Row i = the G/G′-coordinate i of each Z(G) basis element.
    pub connect: Vec<Vec<u64>>,
    pub radical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<u32>,
    pub left_p_nil: Option<bool>,
    pub right_p_nil: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdjointReport {
    pub adjoint_order: usize,
    pub class: Option<u32>,
    pub abelian: bool,
    pub rank: RankValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub perm: Vec<u16>,
    pub order: usize,
    pub inner: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupRecord {
    pub group: String,
    pub order: usize,
    pub prime: Option<u32>,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: Option<usize>,
    pub second_center_order: usize,
    pub d: Option<u32>,
    pub d1: Option<u32>,
    pub d2: Option<u32>,
    pub d2_defined: bool,
    pub purely_non_abelian: Option<bool>,
    pub hom_ring: HomRingReport,
    pub adjoint: AdjointReport,
    pub autc_order: usize,
    pub autc_class: Option<u32>,
    pub criterion: CriterionValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

impl GroupRecord {
    pub fn from_analysis(a: &GroupAnalysis, budget: &Budget) -> GroupRecord {
        let ring = &a.ring;
        let d = ring.source_dim();
        let d1 = ring.target_dim();
        let connect: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d1).map(|j| ring.connect()[i * d1 + j]).collect())
            .collect();
        let rank = match a.adjoint.group_rank(budget.rank_order_cap, budget.work_cap) {
            Budgeted::Done(r) => RankValue::Value(r),
            Budgeted::Skipped(_) => RankValue::Skipped("skipped".into()),
        };
        let (criterion, witness) = criterion_and_witness(a, budget);
        GroupRecord {
            group: a.spec.clone(),
            order: a.group.order(),
            prime: a.group.prime(),
            center_order: a.z.len(),
            derived_order: a.derived.len(),
            frattini_order: a.phi.as_ref().map(|s| s.len()),
            second_center_order: a.z2.len(),
            d: a.d_inv.map(|t| t.0),
            d1: a.d_inv.map(|t| t.1),
            d2: a.d_inv.map(|t| t.2),
            d2_defined: a.d_inv.map(|t| t.3).unwrap_or(false),
            purely_non_abelian: match &a.abelian_factor {
                Budgeted::Done((has, _)) => Some(!has),
                Budgeted::Skipped(_) => None,
            },
            hom_ring: HomRingReport {
                size: ring.size(),
                source_orders: ring.source_orders().to_vec(),
                target_orders: ring.target_orders().to_vec(),
                connect,
                radical: a.radical,
                witness: a.radical_witness.as_ref().map(|w| w.matrix().to_vec()),
                class: a.ring_class,
                left_p_nil: a.left_p_nil,
                right_p_nil: a.right_p_nil,
            },
            adjoint: AdjointReport {
                adjoint_order: a.adjoint.len(),
                class: a.adjoint.group_class(),
                abelian: a.adjoint.is_abelian(),
                rank,
            },
            autc_order: a.autc.len(),
            autc_class: a.autc.class(),
            criterion,
            witness,
        }
    }
}

fn criterion_and_witness(
    a: &GroupAnalysis,
    budget: &Budget,
) -> (CriterionValue, Option<WitnessReport>) {
    use crate::error::Error;
    match crate::autc::has_noninner_central_order_p(&a.group) {
        Ok(true) => {
            let witness =
                crate::autc::construct_noninner_central_order_p(&a.group, &a.ring, budget.work_cap)
                    .ok()
                    .map(|m| WitnessReport {
                        perm: m.perm().to_vec(),
                        order: m.order(),
                        inner: false,
                    });
            (CriterionValue::Decided(true), witness)
        }
        Ok(false) => (CriterionValue::Decided(false), None),
        Err(Error::CriterionInapplicableP2) => {
            (CriterionValue::Inapplicable("inapplicable_p2".into()), None)
        }
        Err(Error::CriterionInapplicableAbelian) => (
            CriterionValue::Inapplicable("inapplicable_abelian".into()),
            None,
        ),
        Err(_) => (CriterionValue::Inapplicable("inapplicable".into()), None),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<Row>,
    pub records: Vec<GroupRecord>,
}

impl VerifyReport {
    pub fn from_matrix(matrix: &Matrix, budget: &Budget) -> VerifyReport {
        let records = matrix
            .analyses
            .iter()
            .map(|a| GroupRecord::from_analysis(a, budget))
            .collect();
        VerifyReport {
            rows: matrix.rows.clone(),
            records,
        }
    }
}

/// Serializes with sorted keys (via `Value`'s ordered map).
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String> {
    let v: Value = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}
