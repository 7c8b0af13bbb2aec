//! The statement-by-statement verification matrix.
//!
//! Every theorem the library embodies is checked over a corpus of groups
//! against the brute-force oracles, one row per statement. A row ends in
//! exactly one of: pass, fail (with diagnostics), skip (budget), or
//! inapplicable (no corpus group meets the hypotheses).

use crate::abelian::{decompose, hom_shape, omega};
use crate::adjoint::{adjoint_group, AdjointGroup};
use crate::autc::{
    adney_yen, aut_c, aut_omega_n, centrality_witness, construct_noninner_central_order_p,
    inner_aut, is_automorphism, omega1_homs, to_aut, AutCGroup, AutMap,
};
use crate::corpus::Corpus;
use crate::error::Result;
use crate::group::{
    center, derived_subgroup, frattini, log_exact, make_group, second_center, CayleyGroup, Subgroup,
};
use crate::grouptable::{Budgeted, GroupTable};
use crate::homring::{build_hom_ring, HomRing, RingElem};
use crate::oracle::{
    adjoint_bruteforce, central_automorphisms, direct_decomposition, enumerate_automorphisms,
    has_abelian_direct_factor, AutSet, Budget,
};
use crate::ring::zmod::ZmodRing;
use crate::ring::{
    additive_order, idempotent_in_powers, is_left_p_nil, is_radical, is_right_p_nil,
    nilpotency_class, omega_ideal, power_subring, ring_pow, FiniteRing, QuotientRing,
    RING_ENUM_CAP,
};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Inapplicable,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Row {
    pub name: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub checked: usize,
    pub skipped: Vec<String>,
    pub failures: Vec<String>,
}

impl Row {
    fn finish(
        name: &'static str,
        statement: &'static str,
        checked: usize,
        skipped: Vec<String>,
        failures: Vec<String>,
    ) -> Row {
        let status = if !failures.is_empty() {
            Status::Fail
        } else if checked > 0 {
            Status::Pass
        } else if !skipped.is_empty() {
            Status::Skip
        } else {
            Status::Inapplicable
        };
        Row {
            name,
            statement,
            status,
            checked,
            skipped,
            failures,
        }
    }
}

/// Everything computed once per corpus group and shared by the rows.
pub struct GroupAnalysis {
    pub spec: String,
    pub group: CayleyGroup,
    pub z: Subgroup,
    pub derived: Subgroup,
    pub phi: Option<Subgroup>,
    pub z2: Subgroup,
    pub ring: HomRing,
    pub radical: bool,
    pub radical_witness: Option<RingElem>,
    pub ring_class: Option<u32>,
    pub left_p_nil: Option<bool>,
    pub right_p_nil: Option<bool>,
    pub adjoint: AdjointGroup<RingElem>,
    pub autc: AutCGroup,
    pub d_inv: Option<(u32, u32, u32, bool)>,
    pub oracle_auts: Budgeted<AutSet>,
    pub oracle_central: Budgeted<AutSet>,
    pub inner_perms: HashSet<Vec<u16>>,
    pub abelian_factor: Budgeted<(bool, Option<(Subgroup, Subgroup)>)>,
    pub decomposition: Budgeted<Option<(Subgroup, Subgroup)>>,
}

impl GroupAnalysis {
    pub fn build(spec: &str, group: CayleyGroup, budget: &Budget) -> Result<GroupAnalysis> {
        let z = center(&group);
        let derived = derived_subgroup(&group);
        let phi = frattini(&group).ok();
        let z2 = second_center(&group);
        let ring = build_hom_ring(&group)?;
        let (radical, radical_witness) = is_radical(&ring, 4096, RING_ENUM_CAP)?;
        let ring_class = nilpotency_class(&ring, RING_ENUM_CAP)?;
        let (left_p_nil, right_p_nil) = match ring.prime() {
            Some(p) => (
                Some(is_left_p_nil(&ring, p, RING_ENUM_CAP)?),
                Some(is_right_p_nil(&ring, p, RING_ENUM_CAP)?),
            ),
            None => (None, None),
        };
        let adjoint = adjoint_group(&ring, budget.adjoint_scan_cap)?;
        let autc = aut_c(&group, &ring, &adjoint)?;
        let d_inv = crate::autc::d_invariants(&group).ok();
        let oracle_auts = enumerate_automorphisms(&group, budget);
        let oracle_central = match &oracle_auts {
            Budgeted::Done(a) => Budgeted::Done(central_automorphisms(&group, a)),
            Budgeted::Skipped(why) => Budgeted::Skipped(why.clone()),
        };
        let inner_perms: HashSet<Vec<u16>> =
            group.elements().map(|g| group.conjugation(g)).collect();
        let abelian_factor = has_abelian_direct_factor(&group, budget);
        let decomposition = direct_decomposition(&group, budget.work_cap);
        Ok(GroupAnalysis {
            spec: spec.to_string(),
            group,
            z,
            derived,
            phi,
            z2,
            ring,
            radical,
            radical_witness,
            ring_class,
            left_p_nil,
            right_p_nil,
            adjoint,
            autc,
            d_inv,
            oracle_auts,
            oracle_central,
            inner_perms,
            abelian_factor,
            decomposition,
        })
    }

    /// Purely non-abelian, from the oracle when available.
    fn purely_non_abelian(&self) -> Budgeted<bool> {
        match &self.abelian_factor {
            Budgeted::Done((has, _)) => Budgeted::Done(!*has),
            Budgeted::Skipped(why) => Budgeted::Skipped(why.clone()),
        }
    }

    /// p^m = exp(R⁺), by scanning additive orders.
    fn additive_exponent_exp(&self) -> u32 {
        let Some(p) = self.ring.prime() else { return 0 };
        let max = self
            .ring
            .elements()
            .iter()
            .map(|x| additive_order(&self.ring, x))
            .max()
            .unwrap_or(1);
        log_exact(max as usize, p as usize).expect("additive order is a p-power")
    }

    fn z_le_phi(&self) -> bool {
        match &self.phi {
            Some(phi) => self.z.is_subset_of(phi),
            None => false,
        }
    }
}

pub struct Matrix {
    pub rows: Vec<Row>,
    pub analyses: Vec<GroupAnalysis>,
}

impl Matrix {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }
}

/// Runs the whole matrix over a corpus.
pub fn verify_corpus(corpus: &Corpus, budget: &Budget) -> Result<Matrix> {
    let mut analyses = Vec::with_capacity(corpus.len());
    for (spec, group) in corpus.entries() {
        analyses.push(GroupAnalysis::build(spec, group.clone(), budget)?);
    }
    analyses.sort_by(|a, b| (a.group.order(), &a.spec).cmp(&(b.group.order(), &b.spec)));
    let rows = vec![
        row_hom_rank_exponent_size(&analyses),
        row_adjoint_class_le_ring_class(&analyses),
        row_adjoint_rank_bound(&analyses, budget),
        row_adney_yen_isomorphism(&analyses, budget),
        row_radical_iff_purely_nonabelian(&analyses),
        row_radical_iff_no_nonzero_idempotent(&analyses, budget),
        row_power_walk_reaches_idempotent(&analyses),
        row_hom_ring_nilpotent_when_pna(&analyses),
        row_autc_nilpotent_when_pna(&analyses),
        row_autc_rank_bound(&analyses, budget),
        row_p_nil_nilpotency_bound(&analyses),
        row_omega_quotient_stays_p_nil(&analyses),
        row_omega_circle_matches_additive(&analyses),
        row_p_central_adjoint(&analyses),
        row_center_under_frattini_right_p_nil(&analyses),
        row_autc_class_bound(&analyses),
        row_omega_autc_equals_aut_zn(&analyses),
        row_decomposable_construction(&analyses, budget),
        row_noninner_order_p_criterion(&analyses, budget),
        row_omega1_center_under_frattini(&analyses),
        row_order_p_inner_image(&analyses),
    ];
    Ok(Matrix { rows, analyses })
}

/// Abelian p-group types used for the hom-group shape cross-check.
const HOM_PAIR_TYPES_P3: &[&str] = &[
    "cyclic:3",
    "cyclic:9",
    "cyclic:27",
    "abelian:3,3",
    "abelian:9,3",
    "abelian:27,3",
    "abelian:3,3,3",
];
const HOM_PAIR_TYPES_P2: &[&str] = &["cyclic:4", "abelian:4,2", "abelian:2,2", "abelian:8,2"];

fn row_hom_rank_exponent_size(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    // The corpus sections themselves: |Hom(G, Z(G))| counted directly on
    // G (not through the abelianization) must equal the ring size.
    for a in analyses {
        checked += 1;
        let count = crate::oracle::hom_count_bruteforce(
            &a.group,
            &Subgroup::whole(&a.group),
            &a.group,
            &a.z,
        );
        if count as u128 != a.ring.size() {
            failures.push(format!(
                "{}: |Hom(G,Z(G))| = {} by direct count, ring size {}",
                a.spec,
                count,
                a.ring.size()
            ));
        }
    }
    for family in [HOM_PAIR_TYPES_P3, HOM_PAIR_TYPES_P2] {
        let groups: Vec<(String, CayleyGroup)> = family
            .iter()
            .map(|s| {
                (
                    s.to_string(),
                    make_group(s).expect("pair-list specs are valid"),
                )
            })
            .collect();
        for (sm, gm) in &groups {
            for (sn, gn) in &groups {
                let m = decompose(gm, &Subgroup::whole(gm)).expect("abelian p-group");
                let n = decompose(gn, &Subgroup::whole(gn)).expect("abelian p-group");
                let (rank, exp, size) = hom_shape(&m, &n).expect("same prime");
                let count = crate::oracle::hom_count_bruteforce(
                    gm,
                    &Subgroup::whole(gm),
                    gn,
                    &Subgroup::whole(gn),
                );
                let (orank, oexp) = crate::oracle::hom_group_shape_bruteforce(
                    gm,
                    &Subgroup::whole(gm),
                    gn,
                    &Subgroup::whole(gn),
                );
                checked += 1;
                if count as u128 != size || orank != rank || oexp != exp {
                    failures.push(format!(
                        "Hom({sm},{sn}): structural (rank {rank}, exp {exp}, size {size}) vs oracle (rank {orank}, exp {oexp}, size {count})"
                    ));
                }
            }
        }
    }
    assert!(checked >= 20);
    Row::finish(
        "hom_rank_exponent_size",
        "rank, exponent, and size of Hom(M,N) for abelian p-groups match exhaustive enumeration",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_adjoint_class_le_ring_class(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        if !a.radical {
            continue;
        }
        checked += 1;
        match (a.adjoint.group_class(), a.ring_class) {
            (Some(gc), Some(rc)) if gc <= rc => {}
            (gc, rc) => failures.push(format!(
                "{}: adjoint class {:?} vs ring class {:?}",
                a.spec, gc, rc
            )),
        }
    }
    Row::finish(
        "adjoint_class_le_ring_class",
        "the adjoint group of a nilpotent ring is nilpotent of class at most the ring class",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_adjoint_rank_bound(analyses: &[GroupAnalysis], budget: &Budget) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        if !a.radical || a.adjoint.len() % 2 == 0 {
            continue;
        }
        let Some(p) = a.ring.prime() else { continue };
        let torsion = omega_ideal(&a.ring, p, 1, RING_ENUM_CAP)
            .expect("within cap")
            .len();
        let r_plus = log_exact(torsion, p as usize).expect("p-torsion count") as u32;
        match a.adjoint.group_rank(budget.rank_order_cap, budget.work_cap) {
            Budgeted::Done(r) => {
                checked += 1;
                if r > 2 * r_plus {
                    failures.push(format!(
                        "{}: r(R∘) = {} > 2·r(R⁺) = {}",
                        a.spec,
                        r,
                        2 * r_plus
                    ));
                }
            }
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "adjoint_rank_bound",
        "for a finite radical ring of odd order, r(R∘) ≤ 2·r(R⁺)",
        checked,
        skipped,
        failures,
    )
}

fn row_adney_yen_isomorphism(analyses: &[GroupAnalysis], budget: &Budget) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        // Constructive side: bijectivity ⟺ quasi-invertibility, and the
        // brute-force adjoint scan agrees with the series construction.
        for h in a.ring.elements() {
            let bij = to_aut(&a.group, &a.ring, &h).is_some();
            if bij != a.adjoint.contains(&h) {
                failures.push(format!(
                    "{}: bijectivity disagrees with quasi-invertibility",
                    a.spec
                ));
            }
        }
        match adjoint_bruteforce(&a.ring, budget) {
            Budgeted::Done(members) => {
                if members != a.adjoint.members() {
                    failures.push(format!(
                        "{}: adjoint scan differs from construction",
                        a.spec
                    ));
                }
            }
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
        // Composition matches circle under the index alignment.
        let n = a.autc.len();
        let mut comp_ok = true;
        for i in 0..n {
            for j in 0..n {
                if a.autc.table().mul(i, j) != a.adjoint.table().mul(i, j) {
                    comp_ok = false;
                }
            }
        }
        if !comp_ok {
            failures.push(format!("{}: composition does not match circle", a.spec));
        }
        // Oracle side: the permutation sets coincide.
        match &a.oracle_central {
            Budgeted::Done(cents) => {
                checked += 1;
                if cents.len() != a.autc.len() {
                    failures.push(format!(
                        "{}: |Aut_c| = {} from the ring but {} from the oracle",
                        a.spec,
                        a.autc.len(),
                        cents.len()
                    ));
                    continue;
                }
                let mut ours: Vec<Vec<u16>> =
                    a.autc.maps().iter().map(|m| m.perm().to_vec()).collect();
                ours.sort_unstable();
                if ours != cents.perms() {
                    failures.push(format!("{}: permutation sets differ", a.spec));
                }
            }
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "adney_yen_isomorphism",
        "h ↦ 1+h is an isomorphism from the adjoint group of Hom(G,Z(G)) onto Aut_c(G)",
        checked,
        skipped,
        failures,
    )
}

fn row_radical_iff_purely_nonabelian(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        match &a.abelian_factor {
            Budgeted::Done((has_factor, _)) => {
                checked += 1;
                if a.radical != !has_factor {
                    failures.push(format!(
                        "{}: radical = {} but abelian direct factor = {}",
                        a.spec, a.radical, has_factor
                    ));
                }
            }
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "radical_iff_purely_nonabelian",
        "Hom(G,Z(G)) is radical exactly when G has no nontrivial abelian direct factor",
        checked,
        skipped,
        failures,
    )
}

fn row_radical_iff_no_nonzero_idempotent(analyses: &[GroupAnalysis], budget: &Budget) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    // Corpus hom rings.
    for a in analyses {
        checked += 1;
        let idem = a
            .ring
            .elements()
            .into_iter()
            .find(|x| !a.ring.is_zero(x) && a.ring.mul(x, x) == *x);
        let whole = a.adjoint.len() as u128 == a.ring.size();
        if a.radical != idem.is_none() || a.radical != whole {
            failures.push(format!(
                "{}: radical = {}, nonzero idempotent = {}, R∘ = R: {}",
                a.spec,
                a.radical,
                idem.is_some(),
                whole
            ));
        }
        if let Some(e) = &a.radical_witness {
            // The proof's key step: −e is not quasi-invertible.
            if a.adjoint.contains(&a.ring.neg(e)) {
                failures.push(format!(
                    "{}: −e is quasi-invertible for idempotent e",
                    a.spec
                ));
            }
        }
    }
    // Reference rings exercise both decision paths (direct scan and
    // power walk).
    for n in [4u64, 6, 8, 9, 12] {
        let r = ZmodRing::new(n);
        checked += 1;
        let (scan, _) = is_radical(&r, 4096, RING_ENUM_CAP).expect("small");
        let (walk, _) = is_radical(&r, 0, RING_ENUM_CAP).expect("small");
        let whole = adjoint_bruteforce(&r, budget).done().expect("small").len() as u128 == r.size();
        if scan != walk || scan != whole {
            failures.push(format!("Z/{n}: scan {scan}, walk {walk}, R∘ = R: {whole}"));
        }
    }
    Row::finish(
        "radical_iff_no_nonzero_idempotent",
        "a finite ring is radical exactly when 0 is its only idempotent",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_power_walk_reaches_idempotent(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        for x in a.ring.elements() {
            checked += 1;
            let e = idempotent_in_powers(&a.ring, &x);
            if a.ring.mul(&e, &e) != e {
                failures.push(format!("{}: walk returned a non-idempotent", a.spec));
            }
        }
    }
    let z12 = ZmodRing::new(12);
    for x in z12.elements() {
        checked += 1;
        let e = idempotent_in_powers(&z12, &x);
        if z12.mul(&e, &e) != e {
            failures.push(format!("Z/12: walk failed on {x}"));
        }
    }
    if idempotent_in_powers(&z12, &2) != 4 {
        failures.push("Z/12: the walk from 2 must return 4".into());
    }
    Row::finish(
        "power_walk_reaches_idempotent",
        "the power sequence of any element of a finite ring contains an idempotent",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_hom_ring_nilpotent_when_pna(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        match a.purely_non_abelian() {
            Budgeted::Done(true) => {
                checked += 1;
                let Some(class) = a.ring_class else {
                    failures.push(format!("{}: ring not nilpotent", a.spec));
                    continue;
                };
                for h in a.ring.elements() {
                    if a.ring.is_zero(&h) {
                        continue;
                    }
                    let nilpotent_by =
                        (1..=class as u64 + 1).any(|k| a.ring.is_zero(&ring_pow(&a.ring, &h, k)));
                    if !nilpotent_by {
                        failures.push(format!(
                            "{}: element not nilpotent within class+1 steps",
                            a.spec
                        ));
                        break;
                    }
                }
            }
            Budgeted::Done(false) => {}
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "hom_ring_nilpotent_when_pna",
        "for purely non-abelian G the ring Hom(G,Z(G)) is nilpotent, elementwise within class+1",
        checked,
        skipped,
        failures,
    )
}

fn row_autc_nilpotent_when_pna(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        match a.purely_non_abelian() {
            Budgeted::Done(true) => {
                checked += 1;
                if a.autc.class().is_none() {
                    failures.push(format!("{}: Aut_c is not nilpotent", a.spec));
                }
            }
            Budgeted::Done(false) => {}
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "autc_nilpotent_when_pna",
        "the central automorphism group of a purely non-abelian finite group is nilpotent",
        checked,
        skipped,
        failures,
    )
}

fn row_autc_rank_bound(analyses: &[GroupAnalysis], budget: &Budget) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.group.prime() else { continue };
        if p == 2 {
            continue;
        }
        let Some((d, d1, _, _)) = a.d_inv else {
            continue;
        };
        match crate::grouptable::rank_table(a.autc.table(), budget.rank_order_cap, budget.work_cap)
        {
            Budgeted::Done(r) => {
                checked += 1;
                if r > 2 * d * d1 {
                    failures.push(format!(
                        "{}: r(Aut_c) = {} > 2·d·d₁ = {}",
                        a.spec,
                        r,
                        2 * d * d1
                    ));
                }
            }
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "autc_rank_bound",
        "for p-groups with p > 2, r(Aut_c(G)) ≤ 2·d(G)·d(Z(G))",
        checked,
        skipped,
        failures,
    )
}

fn row_p_nil_nilpotency_bound(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.ring.prime() else { continue };
        if a.left_p_nil != Some(true) && a.right_p_nil != Some(true) {
            continue;
        }
        checked += 1;
        let m = a.additive_exponent_exp();
        match a.ring_class {
            Some(c) if c <= m => {}
            other => {
                failures.push(format!("{}: class {:?} exceeds m = {}", a.spec, other, m));
                continue;
            }
        }
        match a.adjoint.group_class() {
            Some(c) if c <= m => {}
            other => failures.push(format!(
                "{}: adjoint class {:?} exceeds m = {}",
                a.spec, other, m
            )),
        }
        // The induction step of the proof: p^{m−n+1}·Rⁿ = 0 for every n
        // (at n = m+1 this is Rⁿ = 0 itself).
        for n in 1..=m + 1 {
            let pw = power_subring(&a.ring, n, RING_ENUM_CAP).expect("within cap");
            let scale = p.pow((m + 1).saturating_sub(n));
            for x in &pw {
                if !a.ring.is_zero(&a.ring.scale(scale, x)) {
                    failures.push(format!("{}: p^{{m−{}+1}}·R^{} ≠ 0", a.spec, n, n));
                    break;
                }
            }
        }
    }
    Row::finish(
        "p_nil_nilpotency_bound",
        "a left or right p-nil ring with exp(R⁺) = p^m is nilpotent of class ≤ m",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_omega_quotient_stays_p_nil(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.ring.prime() else { continue };
        let left = a.left_p_nil == Some(true);
        let right = a.right_p_nil == Some(true);
        if !left && !right {
            continue;
        }
        checked += 1;
        let m = a.additive_exponent_exp();
        let elems = a.ring.elements();
        for n in 1..=m {
            let ideal = omega_ideal(&a.ring, p, n, RING_ENUM_CAP).expect("within cap");
            for x in &ideal {
                for y in &elems {
                    if ideal.binary_search(&a.ring.mul(x, y)).is_err()
                        || ideal.binary_search(&a.ring.mul(y, x)).is_err()
                    {
                        failures.push(format!("{}: Ω_{} is not a two-sided ideal", a.spec, n));
                        break;
                    }
                }
            }
            let q = QuotientRing::new(&a.ring, &ideal, RING_ENUM_CAP).expect("within cap");
            if left && !is_left_p_nil(&q, p, RING_ENUM_CAP).expect("within cap") {
                failures.push(format!("{}: R/Ω_{} lost left p-nil", a.spec, n));
            }
            if right && !is_right_p_nil(&q, p, RING_ENUM_CAP).expect("within cap") {
                failures.push(format!("{}: R/Ω_{} lost right p-nil", a.spec, n));
            }
        }
    }
    Row::finish(
        "omega_quotient_stays_p_nil",
        "for a left (right) p-nil ring, R/Ω_n(R) stays left (right) p-nil",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_omega_circle_matches_additive(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.ring.prime() else { continue };
        if p == 2 || (a.left_p_nil != Some(true) && a.right_p_nil != Some(true)) {
            continue;
        }
        checked += 1;
        let m = a.additive_exponent_exp();
        for n in 1..=m {
            let additive = omega_ideal(&a.ring, p, n, RING_ENUM_CAP).expect("within cap");
            let (set, subgroup) = a.adjoint.omega_set(p, n);
            let set_elems: Vec<RingElem> = set
                .iter()
                .map(|&i| a.adjoint.members()[i].clone())
                .collect();
            if set_elems != additive {
                failures.push(format!("{}: Ω_{{{{{n}}}}}(R∘) ≠ Ω_{n}(R) as sets", a.spec));
            }
            if subgroup != set {
                failures.push(format!(
                    "{}: Ω_{n}(R∘) strictly exceeds the set of pⁿ-torsion members",
                    a.spec
                ));
            }
        }
    }
    Row::finish(
        "omega_circle_matches_additive",
        "for odd p and a left or right p-nil p-ring, circle-order pⁿ-torsion equals additive pⁿ-torsion",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_p_central_adjoint(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.ring.prime() else { continue };
        if p == 2 || a.left_p_nil != Some(true) || a.right_p_nil != Some(true) {
            continue;
        }
        checked += 1;
        let (set, _) = a.adjoint.omega_set(p, 1);
        let t = a.adjoint.table();
        for &i in &set {
            for j in 0..a.adjoint.len() {
                if t.mul(i, j) != t.mul(j, i) {
                    failures.push(format!(
                        "{}: an order-p member is not central in R∘",
                        a.spec
                    ));
                    break;
                }
            }
        }
    }
    Row::finish(
        "p_central_adjoint",
        "for odd p and a p-nil p-ring, every order-p member of R∘ is central (R∘ is p-central)",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_center_under_frattini_right_p_nil(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        if a.group.prime().is_none() || !a.z_le_phi() {
            continue;
        }
        checked += 1;
        if a.right_p_nil != Some(true) {
            failures.push(format!("{}: Z ≤ Φ but the ring is not right p-nil", a.spec));
        }
    }
    Row::finish(
        "center_under_frattini_right_p_nil",
        "for a finite p-group with Z(G) ≤ Φ(G), Hom(G,Z(G)) is right p-nil",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_autc_class_bound(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        if a.group.prime().is_none() || !a.z_le_phi() {
            continue;
        }
        checked += 1;
        let r = a.ring.source_exps().first().copied().unwrap_or(0);
        let s = a.ring.target_exps().first().copied().unwrap_or(0);
        match a.autc.class() {
            Some(c) if c <= r.min(s) => {}
            other => failures.push(format!(
                "{}: class(Aut_c) = {:?} exceeds min{{{},{}}}",
                a.spec, other, r, s
            )),
        }
    }
    Row::finish(
        "autc_class_bound",
        "for Z(G) ≤ Φ(G), Aut_c(G) is nilpotent of class ≤ min{r,s} with exp(G/G′)=p^r, exp(Z(G))=p^s",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_omega_autc_equals_aut_zn(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.group.prime() else { continue };
        if p == 2 || !a.z_le_phi() {
            continue;
        }
        checked += 1;
        let s = a.ring.target_exps().first().copied().unwrap_or(0);
        for n in 1..=s {
            let (set, subgroup) = a.autc.omega_set(p as u64, n);
            let by_image = aut_omega_n(&a.group, &a.ring, &a.autc, n).expect("within range");
            if set != by_image {
                failures.push(format!(
                    "{}: Ω_{{{{{n}}}}}(Aut_c) differs from the maps into Ω_{n}(Z(G))",
                    a.spec
                ));
            }
            if subgroup != set {
                failures.push(format!(
                    "{}: Ω_{n}(Aut_c) strictly exceeds Ω_{{{{{n}}}}}(Aut_c)",
                    a.spec
                ));
            }
        }
    }
    Row::finish(
        "omega_autc_equals_aut_zn",
        "for odd p and Z(G) ≤ Φ(G): Ω_n(Aut_c) = Ω_{{n}}(Aut_c) = the maps with image in Ω_n(Z(G))",
        checked,
        Vec::new(),
        failures,
    )
}

fn row_decomposable_construction(analyses: &[GroupAnalysis], budget: &Budget) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        if a.group.is_abelian() || a.group.prime().is_none() {
            continue;
        }
        match &a.decomposition {
            Budgeted::Done(Some(_)) => {
                checked += 1;
                match construct_noninner_central_order_p(&a.group, &a.ring, budget.work_cap) {
                    Ok(sigma) => {
                        if let Some(msg) = witness_defect(a, &sigma) {
                            failures.push(format!("{}: {}", a.spec, msg));
                        }
                    }
                    Err(e) => failures.push(format!("{}: construction failed: {}", a.spec, e)),
                }
            }
            Budgeted::Done(None) => {}
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "decomposable_construction",
        "every decomposable non-abelian finite p-group has a non-inner central automorphism of order p",
        checked,
        skipped,
        failures,
    )
}

/// Re-verifies a witness independently of the construction path.
fn witness_defect(a: &GroupAnalysis, sigma: &AutMap) -> Option<String> {
    let p = a.group.prime().expect("p-group") as usize;
    if !is_automorphism(&a.group, sigma.perm()) {
        return Some("witness is not an automorphism".into());
    }
    if centrality_witness(&a.group, &a.z, sigma.perm()).is_some() {
        return Some("witness is not central".into());
    }
    if a.inner_perms.contains(sigma.perm()) {
        return Some("witness is inner".into());
    }
    if sigma.order() != p {
        return Some(format!("witness has order {} ≠ p", sigma.order()));
    }
    None
}

fn row_noninner_order_p_criterion(analyses: &[GroupAnalysis], budget: &Budget) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.group.prime() else { continue };
        if p == 2 || a.group.is_abelian() {
            continue;
        }
        let criterion = match crate::autc::has_noninner_central_order_p(&a.group) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("{}: criterion errored: {}", a.spec, e));
                continue;
            }
        };
        match &a.oracle_central {
            Budgeted::Done(cents) => {
                checked += 1;
                let oracle_found = cents.perms().iter().any(|perm| {
                    !a.inner_perms.contains(perm) && crate::autc::perm_order(perm) == p as usize
                });
                if criterion != oracle_found {
                    failures.push(format!(
                        "{}: criterion = {} but oracle found = {}",
                        a.spec, criterion, oracle_found
                    ));
                }
                if criterion {
                    match construct_noninner_central_order_p(&a.group, &a.ring, budget.work_cap) {
                        Ok(sigma) => {
                            if let Some(msg) = witness_defect(a, &sigma) {
                                failures.push(format!("{}: {}", a.spec, msg));
                            }
                        }
                        Err(e) => {
                            failures.push(format!("{}: witness construction failed: {}", a.spec, e))
                        }
                    }
                }
            }
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "noninner_order_p_criterion",
        "for odd p and non-abelian G: a non-inner central automorphism of order p exists iff d₂ ≠ d·d₁",
        checked,
        skipped,
        failures,
    )
}

fn row_omega1_center_under_frattini(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        if a.group.prime().is_none() {
            continue;
        }
        match a.purely_non_abelian() {
            Budgeted::Done(true) => {
                checked += 1;
                let zd = decompose(&a.group, &a.z).expect("center of a p-group");
                let om = omega(&a.group, &zd, 1).expect("n ≥ 1");
                let Some(phi) = &a.phi else {
                    failures.push(format!("{}: Frattini unavailable", a.spec));
                    continue;
                };
                if !om.is_subset_of(phi) {
                    failures.push(format!("{}: Ω₁(Z(G)) ⊄ Φ(G)", a.spec));
                }
            }
            Budgeted::Done(false) => {}
            Budgeted::Skipped(why) => skipped.push(format!("{}: {}", a.spec, why)),
        }
    }
    Row::finish(
        "omega1_center_under_frattini",
        "for purely non-abelian finite p-groups, Ω₁(Z(G)) ≤ Φ(G)",
        checked,
        skipped,
        failures,
    )
}

fn row_order_p_inner_image(analyses: &[GroupAnalysis]) -> Row {
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for a in analyses {
        let Some(p) = a.group.prime() else { continue };
        if a.group.is_abelian() {
            continue;
        }
        checked += 1;
        // Inner central automorphisms of order p come from Ω₁-valued maps.
        for &g in a.z2.members() {
            let sigma = inner_aut(&a.group, g);
            if sigma.order() != p as usize {
                continue;
            }
            let h = match adney_yen(&a.group, &a.ring, &sigma) {
                Ok(h) => h,
                Err(e) => {
                    failures.push(format!("{}: inner map not central: {}", a.spec, e));
                    continue;
                }
            };
            if !a.ring.is_zero(&a.ring.scale(p as u64, &h)) {
                failures.push(format!(
                    "{}: h of an order-p inner map is not killed by p",
                    a.spec
                ));
            }
        }
        // For purely non-abelian G, 1+h has order exactly p for every
        // nontrivial Ω₁-valued h.
        if let Budgeted::Done(true) = a.purely_non_abelian() {
            for h in omega1_homs(&a.ring) {
                if a.ring.is_zero(&h) {
                    continue;
                }
                match to_aut(&a.group, &a.ring, &h) {
                    Some(sigma) => {
                        if sigma.order() != p as usize {
                            failures.push(format!(
                                "{}: 1+h has order {} ≠ p",
                                a.spec,
                                sigma.order()
                            ));
                        }
                    }
                    None => failures.push(format!("{}: 1+h is not bijective", a.spec)),
                }
            }
        } else if let Budgeted::Skipped(why) = a.purely_non_abelian() {
            skipped.push(format!("{}: {}", a.spec, why));
        }
    }
    Row::finish(
        "order_p_inner_image",
        "inner central automorphisms of order p come from Ω₁-valued maps; for purely non-abelian G those maps give order exactly p",
        checked,
        skipped,
        failures,
    )
}

/// Corpus search for the closing question: odd-p non-abelian groups with
/// d₂ = d·d₁ and a non-cyclic center. Expected empty at this scale.
pub fn search_question(corpus: &Corpus) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (spec, group) in corpus.entries() {
        let Some(p) = group.prime() else { continue };
        if p == 2 || group.is_abelian() {
            continue;
        }
        let (d, d1, d2, _) = crate::autc::d_invariants(group)?;
        if d2 == d * d1 && d1 > 1 {
            out.push(spec.clone());
        }
    }
    Ok(out)
}
