//! Element-order criteria and their structural counterparts.
//!
//! Each `check_*` function scans pairs of elements `a`, `b` of coprime
//! orders drawn from a class (primary commutators, primary elements, or all
//! elements), tests an order or commutation condition on the product, and
//! compares the verdict with the structural property it characterizes:
//!
//! | criterion | pairs                                   | condition        | structure            |
//! |-----------|-----------------------------------------|------------------|----------------------|
//! | `t2`      | primary commutators                     | `\|ab\| ≥ \|a\|\|b\|` | `G′` nilpotent       |
//! | `c21`     | primary commutators                     | `ab = ba`        | `G′` nilpotent       |
//! | `bw`      | all elements                            | `\|ab\| = \|a\|\|b\|` | `G` nilpotent        |
//! | `t5`      | `p`-element × primary `p′`-element      | `\|ab\| ≥ \|a\|\|b\|` | `G` `p`-decomposable |
//! | `c51`     | primary elements                        | `\|ab\| ≥ \|a\|\|b\|` | `G` nilpotent        |
//!
//! Pairs are scanned with `a` outer and `b` inner, both in canonical element
//! order; pairs involving the identity always satisfy the conditions and are
//! skipped. The first failing pair is the witness.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::{gcd, Permutation};
use crate::primes::{is_power_of, prime_of_power};
use crate::structure::{
    self, derived_subgroup, is_nilpotent, is_p_closed, is_p_decomposable, is_p_nilpotent,
    SubgroupLattice,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    /// Primary commutators of coprime orders: `|ab| ≥ |a||b|` iff `G′` is nilpotent.
    T2,
    /// Primary commutators of coprime orders commute iff `G′` is nilpotent.
    C21,
    /// All coprime-order pairs: `|ab| = |a||b|` iff `G` is nilpotent.
    Bw,
    /// `p`-elements against primary `p′`-elements iff `G` is `p`-decomposable.
    T5,
    /// Primary elements of coprime orders: `|ab| ≥ |a||b|` iff `G` is nilpotent.
    C51,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::T2,
        Criterion::C21,
        Criterion::Bw,
        Criterion::T5,
        Criterion::C51,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::T2 => "t2",
            Criterion::C21 => "c21",
            Criterion::Bw => "bw",
            Criterion::T5 => "t5",
            Criterion::C51 => "c51",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn witness_kind(self) -> WitnessKind {
        match self {
            Criterion::C21 => WitnessKind::Permutability,
            Criterion::Bw => WitnessKind::Equality,
            _ => WitnessKind::Inequality,
        }
    }

    pub fn structure_name(self) -> &'static str {
        match self {
            Criterion::T2 | Criterion::C21 => "derived subgroup nilpotent",
            Criterion::Bw | Criterion::C51 => "group nilpotent",
            Criterion::T5 => "p-decomposable",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    /// `|ab| < |a||b|`.
    Inequality,
    /// `|ab| ≠ |a||b|`.
    Equality,
    /// `ab ≠ ba`.
    Permutability,
}

/// A pair of coprime-order elements violating a criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub a: Permutation,
    pub order_a: u64,
    pub b: Permutation,
    pub order_b: u64,
    pub product_order: u64,
    pub kind: WitnessKind,
}

impl Witness {
    fn from_pair(g: &FiniteGroup, a: Elem, b: Elem, kind: WitnessKind) -> Self {
        Witness {
            a: g.element(a).clone(),
            order_a: g.element_order(a),
            b: g.element(b).clone(),
            order_b: g.element_order(b),
            product_order: g.element_order(g.mul(a, b)),
            kind,
        }
    }

    /// Recomputes orders and the violated condition from the permutations
    /// alone.
    pub fn check_arithmetic(&self) -> bool {
        if self.a.degree() != self.b.degree() {
            return false;
        }
        let (oa, ob) = (self.a.order(), self.b.order());
        let ab = self.a.then(&self.b);
        let oab = ab.order();
        let violated = match self.kind {
            WitnessKind::Inequality => oab < oa * ob,
            WitnessKind::Equality => oab != oa * ob,
            WitnessKind::Permutability => ab != self.b.then(&self.a),
        };
        oa == self.order_a
            && ob == self.order_b
            && oab == self.product_order
            && gcd(oa, ob) == 1
            && violated
    }

    /// Full re-verification: arithmetic plus membership of `a` and `b` in
    /// the classes the criterion ranges over.
    pub fn verify(&self, g: &FiniteGroup, criterion: Criterion, prime: Option<u64>) -> bool {
        if !self.check_arithmetic() || self.kind != criterion.witness_kind() {
            return false;
        }
        let (Some(a), Some(b)) = (g.index_of(&self.a), g.index_of(&self.b)) else {
            return false;
        };
        let primary = |x: Elem| prime_of_power(g.element_order(x)).is_some();
        match criterion {
            Criterion::T2 | Criterion::C21 => {
                let comms = commutator_set(g);
                comms.contains(a) && comms.contains(b) && primary(a) && primary(b)
            }
            Criterion::Bw => true,
            Criterion::C51 => primary(a) && primary(b),
            Criterion::T5 => {
                let Some(p) = prime else { return false };
                is_power_of(self.order_a, p) && !self.order_b.is_multiple_of(p) && primary(b)
            }
        }
    }
}

/// Verdict of one criterion on one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub prime: Option<u64>,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// The structural side of the equivalence.
    pub structural_verdict: bool,
    /// `holds == structural_verdict`.
    pub consistent: bool,
}

impl CriterionReport {
    fn new(
        criterion: Criterion,
        prime: Option<u64>,
        witness: Option<Witness>,
        structural_verdict: bool,
    ) -> Self {
        let holds = witness.is_none();
        CriterionReport {
            criterion,
            prime,
            holds,
            witness,
            structural_verdict,
            consistent: holds == structural_verdict,
        }
    }
}

/// `{[g, h] : g, h ∈ G}`, the commutators themselves (not their closure).
///
/// Uses `[g, h] = g⁻¹·g^h`: the commutators with first entry `g` are
/// `g⁻¹y` for `y` in the conjugacy class of `g`.
pub fn commutator_set(g: &FiniteGroup) -> ElementSet {
    let mut set = ElementSet::new(g.order());
    for class in g.conjugacy_classes() {
        for &x in &class {
            let xi = g.inv(x);
            for &y in &class {
                set.insert(g.mul(xi, y));
            }
        }
    }
    set
}

/// `X_p(G)`: commutators of `p`-power order, identity included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryCommutatorSet {
    pub p: u64,
    pub members: Vec<Elem>,
}

impl PrimaryCommutatorSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

pub fn primary_commutators(g: &FiniteGroup, p: u64) -> PrimaryCommutatorSet {
    primary_commutators_from(g, &commutator_set(g), p)
}

fn primary_commutators_from(g: &FiniteGroup, comms: &ElementSet, p: u64) -> PrimaryCommutatorSet {
    PrimaryCommutatorSet {
        p,
        members: comms
            .iter()
            .filter(|&x| is_power_of(g.element_order(x), p))
            .collect(),
    }
}

/// Elements of `p`-power order, identity included.
pub fn primary_elements(g: &FiniteGroup, p: u64) -> Vec<Elem> {
    (0..g.order())
        .filter(|&x| is_power_of(g.element_order(x), p))
        .collect()
}

/// Elements of order coprime to `p`.
pub fn p_prime_elements(g: &FiniteGroup, p: u64) -> Vec<Elem> {
    (0..g.order())
        .filter(|&x| !g.element_order(x).is_multiple_of(p))
        .collect()
}

/// Nonidentity elements of prime-power order, canonical order.
fn nontrivial_primary(g: &FiniteGroup) -> Vec<Elem> {
    (1..g.order())
        .filter(|&x| prime_of_power(g.element_order(x)).is_some())
        .collect()
}

/// Nonidentity primary commutators, canonical order.
fn nontrivial_primary_commutators(g: &FiniteGroup) -> Vec<Elem> {
    commutator_set(g)
        .iter()
        .filter(|&x| x != g.identity() && prime_of_power(g.element_order(x)).is_some())
        .collect()
}

/// First pair `(a, b)` of coprime orders failing `ok`.
fn scan(
    g: &FiniteGroup,
    left: &[Elem],
    right: &[Elem],
    ok: impl Fn(Elem, Elem) -> bool,
) -> Option<(Elem, Elem)> {
    for &a in left {
        let oa = g.element_order(a);
        for &b in right {
            if gcd(oa, g.element_order(b)) == 1 && !ok(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn product_at_least(g: &FiniteGroup) -> impl Fn(Elem, Elem) -> bool + '_ {
    move |a, b| g.element_order(g.mul(a, b)) >= g.element_order(a) * g.element_order(b)
}

fn product_exact(g: &FiniteGroup) -> impl Fn(Elem, Elem) -> bool + '_ {
    move |a, b| g.element_order(g.mul(a, b)) == g.element_order(a) * g.element_order(b)
}

fn witness(g: &FiniteGroup, pair: Option<(Elem, Elem)>, criterion: Criterion) -> Option<Witness> {
    pair.map(|(a, b)| Witness::from_pair(g, a, b, criterion.witness_kind()))
}

pub fn derived_is_nilpotent(g: &FiniteGroup) -> bool {
    is_nilpotent(&derived_subgroup(g).to_group())
}

pub fn check_t2(g: &FiniteGroup) -> CriterionReport {
    let pcs = nontrivial_primary_commutators(g);
    let pair = scan(g, &pcs, &pcs, product_at_least(g));
    CriterionReport::new(
        Criterion::T2,
        None,
        witness(g, pair, Criterion::T2),
        derived_is_nilpotent(g),
    )
}

pub fn check_c21(g: &FiniteGroup) -> CriterionReport {
    let pcs = nontrivial_primary_commutators(g);
    let pair = scan(g, &pcs, &pcs, |a, b| g.commutes(a, b));
    CriterionReport::new(
        Criterion::C21,
        None,
        witness(g, pair, Criterion::C21),
        derived_is_nilpotent(g),
    )
}

pub fn check_bw(g: &FiniteGroup) -> CriterionReport {
    let all: Vec<Elem> = (1..g.order()).collect();
    let pair = scan(g, &all, &all, product_exact(g));
    CriterionReport::new(
        Criterion::Bw,
        None,
        witness(g, pair, Criterion::Bw),
        is_nilpotent(g),
    )
}

pub fn check_c51(g: &FiniteGroup) -> CriterionReport {
    let primary = nontrivial_primary(g);
    let pair = scan(g, &primary, &primary, product_at_least(g));
    CriterionReport::new(
        Criterion::C51,
        None,
        witness(g, pair, Criterion::C51),
        is_nilpotent(g),
    )
}

/// Requires `p` to divide `|G|`.
pub fn check_t5(g: &FiniteGroup, p: u64) -> Result<CriterionReport> {
    if !g.prime_spectrum().contains(&p) {
        return Err(GroupError::PrimeNotInSpectrum {
            p,
            order: g.order(),
        });
    }
    let p_elems: Vec<Elem> = primary_elements(g, p).into_iter().skip(1).collect();
    let others: Vec<Elem> = nontrivial_primary(g)
        .into_iter()
        .filter(|&x| !g.element_order(x).is_multiple_of(p))
        .collect();
    let pair = scan(g, &p_elems, &others, product_at_least(g));
    Ok(CriterionReport::new(
        Criterion::T5,
        Some(p),
        witness(g, pair, Criterion::T5),
        is_p_decomposable(g, p),
    ))
}

/// Dispatches on `criterion`; `t5` needs a prime in `π(G)`.
pub fn check(g: &FiniteGroup, criterion: Criterion, prime: Option<u64>) -> Result<CriterionReport> {
    match criterion {
        Criterion::T2 => Ok(check_t2(g)),
        Criterion::C21 => Ok(check_c21(g)),
        Criterion::Bw => Ok(check_bw(g)),
        Criterion::C51 => Ok(check_c51(g)),
        Criterion::T5 => {
            let p = prime.ok_or(GroupError::PrimeNotInSpectrum { p: 0, order: g.order() })?;
            check_t5(g, p)
        }
    }
}

/// For nilpotent `G′`, coprime-order primary commutators multiply their
/// orders exactly. Returns the first pair where `|ab| ≠ |a||b|`.
pub fn t2_exact_product_violation(g: &FiniteGroup) -> Option<Witness> {
    let pcs = nontrivial_primary_commutators(g);
    scan(g, &pcs, &pcs, product_exact(g))
        .map(|(a, b)| Witness::from_pair(g, a, b, WitnessKind::Equality))
}

/// One `(H, x)` pair examined by [`normalizer_audit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerAuditRecord {
    pub subgroup_order: usize,
    pub subgroup_generators: Vec<String>,
    pub x: Permutation,
    pub normalizes: bool,
    pub centralizes: bool,
}

/// For every nontrivial subgroup `H` of prime-power order and every
/// nonidentity primary commutator `x` with `gcd(|x|, |H|) = 1`: when `x`
/// normalizes `H` it must centralize `H`.
///
/// Only meaningful when [`check_t2`] holds; otherwise the hypothesis error
/// is returned. A normalizing but non-centralizing pair is a structural
/// violation.
pub fn normalizer_audit(g: &FiniteGroup) -> Result<Vec<NormalizerAuditRecord>> {
    let lattice = SubgroupLattice::new(g)?;
    normalizer_audit_with(&lattice)
}

pub fn normalizer_audit_with(lattice: &SubgroupLattice<'_>) -> Result<Vec<NormalizerAuditRecord>> {
    let g = lattice.group();
    if !check_t2(g).holds {
        return Err(GroupError::HypothesisNotSatisfied);
    }
    let pcs = nontrivial_primary_commutators(g);
    let mut records = Vec::new();
    for h in lattice.primary_subgroups() {
        let h_order = h.order() as u64;
        for &x in &pcs {
            if gcd(g.element_order(x), h_order) != 1 {
                continue;
            }
            let normalizes = h.generators().iter().all(|&y| h.contains_elem(g.conj(y, x)));
            let centralizes = h.generators().iter().all(|&y| g.commutes(x, y));
            if normalizes && !centralizes {
                return Err(GroupError::StructuralViolation(format!(
                    "{} normalizes but does not centralize a subgroup of order {}",
                    g.element(x),
                    h.order()
                )));
            }
            records.push(NormalizerAuditRecord {
                subgroup_order: h.order(),
                subgroup_generators: h.generator_strings(),
                x: g.element(x).clone(),
                normalizes,
                centralizes,
            });
        }
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FocalCheck {
    pub p: u64,
    pub sylow_order: usize,
    pub focal_order: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizerAuditSummary {
    pub pairs: usize,
    pub normalizing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchmidtSummary {
    pub count: usize,
    pub orders: Vec<usize>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowCount {
    pub p: u64,
    pub count: usize,
    pub valid: bool,
}

/// Every criterion and audit for one group.
#[derive(Debug, Clone)]
pub struct TheoremVerdicts {
    pub order: usize,
    pub reports: Vec<CriterionReport>,
    pub focal: Vec<FocalCheck>,
    /// `None` when the hypothesis fails or the lattice is over the cap.
    pub normalizer_audit: Option<NormalizerAuditSummary>,
    /// `None` when the lattice is over the cap.
    pub schmidt: Option<SchmidtSummary>,
    pub sylow_counts: Vec<SylowCount>,
    /// Structural violations found while auditing.
    pub problems: Vec<String>,
}

impl TheoremVerdicts {
    pub fn all_consistent(&self) -> bool {
        self.problems.is_empty()
            && self.reports.iter().all(|r| r.consistent)
            && self.focal.iter().all(|f| f.matches)
            && self.schmidt.as_ref().is_none_or(|s| s.all_pass)
            && self.sylow_counts.iter().all(|s| s.valid)
    }

    pub fn report(&self, criterion: Criterion, prime: Option<u64>) -> Option<&CriterionReport> {
        self.reports
            .iter()
            .find(|r| r.criterion == criterion && r.prime == prime)
    }
}

/// Runs every criterion (`t5` once per prime of `π(G)`), the focal subgroup
/// check for each Sylow subgroup, Sylow counts, and, within the lattice cap,
/// the normalizer audit and the Schmidt subgroup audit.
pub fn verify_group(g: &FiniteGroup) -> TheoremVerdicts {
    let mut reports = vec![check_t2(g), check_c21(g), check_bw(g), check_c51(g)];
    for &p in g.prime_spectrum() {
        reports.push(check_t5(g, p).expect("p is in the spectrum"));
    }
    let mut problems = Vec::new();

    let derived = derived_subgroup(g);
    let mut focal = Vec::new();
    let mut sylow_counts = Vec::new();
    for &p in g.prime_spectrum() {
        let q = structure::sylow_subgroup(g, p);
        let expected = q.intersection(&derived);
        match structure::focal_subgroup(g, &q) {
            Ok(f) => focal.push(FocalCheck {
                p,
                sylow_order: q.order(),
                focal_order: f.order(),
                matches: f == expected,
            }),
            Err(e) => {
                problems.push(e.to_string());
                focal.push(FocalCheck {
                    p,
                    sylow_order: q.order(),
                    focal_order: 0,
                    matches: false,
                });
            }
        }
        let count = g.subgroup_conjugates(&q).len();
        sylow_counts.push(SylowCount {
            p,
            count,
            valid: count as u64 % p == 1 && g.order().is_multiple_of(count),
        });
        debug_assert_eq!(is_p_decomposable(g, p), is_p_closed(g, p) && is_p_nilpotent(g, p));
    }

    let mut normalizer_audit = None;
    let mut schmidt = None;
    if let Ok(lattice) = SubgroupLattice::new(g) {
        for h in lattice.subgroups() {
            if !g.order().is_multiple_of(h.order()) {
                problems.push(format!("subgroup of order {} breaks Lagrange", h.order()));
            }
        }
        match normalizer_audit_with(&lattice) {
            Ok(records) => {
                normalizer_audit = Some(NormalizerAuditSummary {
                    pairs: records.len(),
                    normalizing: records.iter().filter(|r| r.normalizes).count(),
                })
            }
            Err(GroupError::HypothesisNotSatisfied) => {}
            Err(e) => problems.push(e.to_string()),
        }
        match lattice.schmidt_subgroups() {
            Ok(found) => {
                let mut orders: Vec<usize> = found.iter().map(|s| s.s.order()).collect();
                orders.sort_unstable();
                schmidt = Some(SchmidtSummary {
                    count: found.len(),
                    orders,
                    all_pass: found.iter().all(|s| s.audits.passes()),
                })
            }
            Err(e) => {
                problems.push(e.to_string());
                schmidt = Some(SchmidtSummary {
                    count: 0,
                    orders: Vec::new(),
                    all_pass: false,
                });
            }
        }
    }

    TheoremVerdicts {
        order: g.order(),
        reports,
        focal,
        normalizer_audit,
        schmidt,
        sylow_counts,
        problems,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn sym(n: usize) -> FiniteGroup {
        let cyc: Vec<usize> = (1..=n).collect();
        FiniteGroup::generate(
            n,
            &[
                Permutation::from_cycles(n, &[vec![1, 2]]).unwrap(),
                Permutation::from_cycles(n, &[cyc]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let cyc: Vec<usize> = (1..=n).collect();
        FiniteGroup::generate(n, &[Permutation::from_cycles(n, &[cyc]).unwrap()]).unwrap()
    }

    /// `C6` as `⟨(1 2 3)(4 5)⟩`.
    fn c6() -> FiniteGroup {
        FiniteGroup::generate(5, &[p("(1 2 3)(4 5)", 5)]).unwrap()
    }

    fn dihedral8() -> FiniteGroup {
        FiniteGroup::generate(4, &[p("(1 2 3 4)", 4), p("(1 3)", 4)]).unwrap()
    }

    fn strings(g: &FiniteGroup, xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
        let mut v: Vec<String> = xs.into_iter().map(|x| g.element(x).to_string()).collect();
        v.sort();
        v
    }

    /// Brute-force commutator set over all ordered pairs.
    fn brute_commutators(g: &FiniteGroup) -> ElementSet {
        let mut s = ElementSet::new(g.order());
        for a in 0..g.order() {
            for b in 0..g.order() {
                s.insert(g.comm(a, b));
            }
        }
        s
    }

    #[test]
    fn commutator_sets() {
        let c = c6();
        assert_eq!(commutator_set(&c).count(), 1);
        let s3 = sym(3);
        assert_eq!(
            strings(&s3, commutator_set(&s3).iter()),
            vec!["()", "(1 2 3)", "(1 3 2)"]
        );
        let s4 = sym(4);
        let cs = commutator_set(&s4);
        assert_eq!(cs.count(), 12);
        assert_eq!(&cs, derived_subgroup(&s4).members());
        for g in [s3, s4, sym(5), dihedral8()] {
            assert_eq!(commutator_set(&g), brute_commutators(&g));
        }
    }

    #[test]
    fn primary_commutator_sets() {
        let s4 = sym(4);
        let x2 = primary_commutators(&s4, 2);
        assert_eq!(
            strings(&s4, x2.members.iter().copied()),
            vec!["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
        );
        assert_eq!(primary_commutators(&sym(3), 3).len(), 3);
        for prime in [2, 3, 5] {
            assert_eq!(primary_commutators(&c6(), prime).members, vec![0]);
        }
    }

    #[test]
    fn primary_and_p_prime_elements() {
        let s3 = sym(3);
        assert_eq!(
            strings(&s3, primary_elements(&s3, 2)),
            vec!["()", "(1 2)", "(1 3)", "(2 3)"]
        );
        assert_eq!(
            strings(&s3, p_prime_elements(&s3, 3)),
            vec!["()", "(1 2)", "(1 3)", "(2 3)"]
        );
        let s4 = sym(4);
        for prime in [2, 3] {
            let a = primary_elements(&s4, prime);
            let b = p_prime_elements(&s4, prime);
            let both: Vec<_> = a.iter().filter(|x| b.contains(x)).collect();
            assert_eq!(both, vec![&0]);
        }
    }

    #[test]
    fn t2_examples() {
        let r = check_t2(&sym(3));
        assert!(r.holds && r.structural_verdict && r.consistent);

        let s4 = sym(4);
        let r = check_t2(&s4);
        assert!(!r.holds && !r.structural_verdict && r.consistent);
        let w = r.witness.unwrap();
        assert_eq!((w.order_a, w.order_b, w.product_order), (3, 2, 3));
        assert_eq!(w.a.to_string(), "(2 3 4)");
        assert_eq!(w.b.to_string(), "(1 2)(3 4)");
        assert!(w.verify(&s4, Criterion::T2, None));

        // the pair named in the docs is also a violation
        let a = p("(1 2 3)", 4);
        let b = p("(1 2)(3 4)", 4);
        assert_eq!(a.then(&b), p("(2 4 3)", 4));

        let r = check_t2(&c6());
        assert!(r.holds && r.structural_verdict);
    }

    #[test]
    fn c21_examples() {
        let s4 = sym(4);
        let r = check_c21(&s4);
        assert!(!r.holds && r.consistent);
        let w = r.witness.unwrap();
        assert_eq!(w.kind, WitnessKind::Permutability);
        assert_ne!(w.a.then(&w.b), w.b.then(&w.a));
        assert_eq!(Some(w.a.clone()), check_t2(&s4).witness.map(|w| w.a));
        assert!(check_c21(&sym(3)).holds);
        assert!(check_c21(&c6()).holds);
    }

    #[test]
    fn bw_examples() {
        let s3 = sym(3);
        let r = check_bw(&s3);
        assert!(!r.holds && !r.structural_verdict);
        let w = r.witness.unwrap();
        assert_eq!((w.order_a, w.order_b, w.product_order), (2, 3, 2));
        assert!(w.verify(&s3, Criterion::Bw, None));
        // the textbook pair gives the same product order
        assert_eq!(p("(1 2)", 3).then(&p("(1 2 3)", 3)), p("(1 3)", 3));

        let r = check_bw(&dihedral8());
        assert!(r.holds && r.structural_verdict);
        let r = check_bw(&c6());
        assert!(r.holds && r.structural_verdict && r.consistent);
    }

    #[test]
    fn t5_examples() {
        let s3 = sym(3);
        let r = check_t5(&s3, 2).unwrap();
        assert!(!r.holds && !r.structural_verdict);
        let w = r.witness.unwrap();
        assert_eq!((w.order_a, w.order_b, w.product_order), (2, 3, 2));
        assert!(w.verify(&s3, Criterion::T5, Some(2)));

        let r = check_t5(&c6(), 2).unwrap();
        assert!(r.holds && r.structural_verdict);
        let r = check_t5(&dihedral8(), 2).unwrap();
        assert!(r.holds && r.structural_verdict);
        assert!(matches!(
            check_t5(&s3, 5),
            Err(GroupError::PrimeNotInSpectrum { p: 5, order: 6 })
        ));
    }

    #[test]
    fn c51_examples() {
        let r = check_c51(&sym(3));
        assert!(!r.holds && !r.structural_verdict);
        let w = r.witness.unwrap();
        assert_eq!((w.order_a, w.order_b, w.product_order), (2, 3, 2));
        assert!(check_c51(&c6()).holds);
        assert!(check_c51(&dihedral8()).holds);
    }

    #[test]
    fn normalizer_audit_examples() {
        let recs = normalizer_audit(&c6()).unwrap();
        assert!(recs.is_empty(), "no nonidentity commutators in an abelian group");
        let recs = normalizer_audit(&sym(3)).unwrap();
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|r| !r.normalizes));
        assert!(normalizer_audit(&dihedral8()).unwrap().is_empty());
        assert!(matches!(
            normalizer_audit(&sym(4)),
            Err(GroupError::HypothesisNotSatisfied)
        ));
        assert!(normalizer_audit(&cyclic(6)).unwrap().is_empty());
    }

    #[test]
    fn verify_examples() {
        let v = verify_group(&FiniteGroup::trivial(1));
        assert!(v.reports.iter().all(|r| r.holds && r.consistent));
        assert!(v.all_consistent());

        let v = verify_group(&sym(4));
        assert!(v.all_consistent());
        assert!(!v.report(Criterion::T2, None).unwrap().holds);
        assert!(!v.report(Criterion::C51, None).unwrap().holds);
        assert!(!v.report(Criterion::T5, Some(2)).unwrap().holds);
        assert!(!v.report(Criterion::T5, Some(3)).unwrap().holds);
        assert_eq!(v.schmidt.as_ref().unwrap().count, 5);

        let c30 = FiniteGroup::generate(10, &[p("(1 2)(3 4 5)(6 7 8 9 10)", 10)]).unwrap();
        assert_eq!(c30.order(), 30);
        let v = verify_group(&c30);
        assert!(v.reports.iter().all(|r| r.holds && r.consistent));
        assert!(v.all_consistent());
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(Criterion::parse(c.name()), Some(c));
        }
        assert_eq!(Criterion::parse("t3"), None);
    }
}
