//! Subgroup structure: series, nilpotency, Sylow theory, the subgroup
//! lattice and what is derived from it (maximal subgroups, Frattini
//! subgroup, minimal non-nilpotent subgroups), and focal subgroups.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::perm::Permutation;
use crate::primes::{is_power_of, is_prime, p_part, prime_divisors};

/// Default cap on the group order for lattice-based queries.
pub const DEFAULT_LATTICE_CAP: usize = 400;

/// `G′`: normal closure of the commutators of generator pairs, which equals
/// the subgroup generated by all commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup<'_> {
    let gens = g.generator_indices();
    let mut seed = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = g.comm(a, b);
            if c != g.identity() {
                seed.push(c);
            }
        }
    }
    g.normal_closure(&seed)
}

/// `[G, H]` for a normal subgroup `H`.
fn commutator_with_whole<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> Subgroup<'g> {
    let mut seed = Vec::new();
    for &a in g.generator_indices() {
        for &b in h.generators() {
            let c = g.comm(a, b);
            if c != g.identity() {
                seed.push(c);
            }
        }
    }
    g.normal_closure(&seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending subgroup series computed until it stabilizes.
#[derive(Debug, Clone)]
pub struct SeriesReport<'g> {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup<'g>>,
    /// True when the last term is trivial.
    pub terminated: bool,
}

impl SeriesReport<'_> {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// `γ₁ = G`, `γᵢ₊₁ = [G, γᵢ]`.
pub fn lower_central_series(g: &FiniteGroup) -> SeriesReport<'_> {
    let mut terms = vec![g.whole()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = commutator_with_whole(g, last);
        if next == *last {
            break;
        }
        terms.push(next);
    }
    let terminated = terms.last().unwrap().is_trivial();
    SeriesReport {
        kind: SeriesKind::LowerCentral,
        terms,
        terminated,
    }
}

/// `G ≥ G′ ≥ G″ ≥ …` until it stabilizes.
///
/// Later terms are computed inside the previous term viewed as a group, then
/// mapped back into `g`.
pub fn derived_series(g: &FiniteGroup) -> SeriesReport<'_> {
    let mut terms = vec![g.whole()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let as_group = last.to_group();
        let d = derived_subgroup(&as_group);
        let perms: Vec<Permutation> = d.elements().cloned().collect();
        let next = g.closure_of(&perms).expect("derived subgroup lies in g");
        if next == *last {
            break;
        }
        terms.push(next);
    }
    let terminated = terms.last().unwrap().is_trivial();
    SeriesReport {
        kind: SeriesKind::Derived,
        terms,
        terminated,
    }
}

pub fn is_nilpotent_by_series(g: &FiniteGroup) -> bool {
    lower_central_series(g).terminated
}

pub fn is_nilpotent_by_sylows(g: &FiniteGroup) -> bool {
    g.prime_spectrum()
        .iter()
        .all(|&p| g.is_normal(&sylow_subgroup(g, p)))
}

/// Nilpotency, computed from the lower central series and from Sylow
/// normality; the two must agree.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    let by_series = is_nilpotent_by_series(g);
    let by_sylows = is_nilpotent_by_sylows(g);
    assert_eq!(
        by_series, by_sylows,
        "nilpotency by series and by Sylow normality disagree on a group of order {}",
        g.order()
    );
    by_series
}

pub fn is_soluble(g: &FiniteGroup) -> bool {
    derived_series(g).terminated
}

/// A Sylow `p`-subgroup, chosen deterministically.
///
/// Starts from the cyclic subgroup of the first `p`-element of maximal order
/// and repeatedly adjoins the first `p`-element of the normalizer lying
/// outside the current subgroup. Returns the trivial subgroup when `p` does
/// not divide `|G|`.
///
/// # Panics
/// If `p` is not prime.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup<'_> {
    assert!(is_prime(p), "{p} is not prime");
    let target = p_part(g.order() as u64, p) as usize;
    if target == 1 {
        return g.trivial_subgroup();
    }
    let is_p_elem = |x: Elem| is_power_of(g.element_order(x), p);
    let start = (0..g.order())
        .filter(|&x| is_p_elem(x))
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .expect("identity is a p-element");
    let mut sylow = g.cyclic_subgroup(start);
    while sylow.order() < target {
        let norm = g.normalizer(&sylow);
        let ext = norm
            .indices()
            .find(|&x| is_p_elem(x) && !sylow.contains_elem(x))
            .expect("a p-subgroup below Sylow order has a p-element in its normalizer outside it");
        sylow = sylow.extend(&[ext]);
    }
    sylow
}

/// All Sylow `p`-subgroups (the conjugates of one of them).
pub fn sylow_subgroups(g: &FiniteGroup, p: u64) -> Vec<Subgroup<'_>> {
    g.subgroup_conjugates(&sylow_subgroup(g, p))
}

/// `O_p(G)`: intersection of the Sylow `p`-subgroups.
pub fn p_core(g: &FiniteGroup, p: u64) -> Subgroup<'_> {
    let sylows = sylow_subgroups(g, p);
    let mut members = sylows[0].members().clone();
    for s in &sylows[1..] {
        members.intersect_with(s.members());
    }
    g.subgroup_from_members(members)
}

/// The Sylow `p`-subgroup is normal.
pub fn is_p_closed(g: &FiniteGroup, p: u64) -> bool {
    g.is_normal(&sylow_subgroup(g, p))
}

/// Elements of order coprime to `p`.
pub fn p_prime_element_set(g: &FiniteGroup, p: u64) -> ElementSet {
    let mut set = ElementSet::new(g.order());
    for x in 0..g.order() {
        if !g.element_order(x).is_multiple_of(p) {
            set.insert(x);
        }
    }
    set
}

/// The normal `p`-complement, when the `p′`-elements form a subgroup.
pub fn normal_p_complement(g: &FiniteGroup, p: u64) -> Option<Subgroup<'_>> {
    let set = p_prime_element_set(g, p);
    let size = set.count();
    let mut sub = g.trivial_subgroup();
    for x in set.iter() {
        if !sub.contains_elem(x) {
            sub = sub.extend(&[x]);
            if sub.order() > size {
                return None;
            }
        }
    }
    (sub.members() == &set).then_some(sub)
}

pub fn is_p_nilpotent(g: &FiniteGroup, p: u64) -> bool {
    normal_p_complement(g, p).is_some()
}

/// `p`-closed and `p`-nilpotent: `G = P × K` with `K` a `p′`-group.
pub fn is_p_decomposable(g: &FiniteGroup, p: u64) -> bool {
    is_p_closed(g, p) && is_p_nilpotent(g, p)
}

/// Every subgroup of a group whose order is within the lattice cap.
#[derive(Debug, Clone)]
pub struct SubgroupLattice<'g> {
    group: &'g FiniteGroup,
    subgroups: Vec<Subgroup<'g>>,
}

impl<'g> SubgroupLattice<'g> {
    pub fn new(g: &'g FiniteGroup) -> Result<Self> {
        Self::with_cap(g, DEFAULT_LATTICE_CAP)
    }

    /// Layered closure: seed with the cyclic subgroups, then join every
    /// known subgroup with every cyclic subgroup until nothing new appears.
    pub fn with_cap(g: &'g FiniteGroup, cap: usize) -> Result<Self> {
        if g.order() > cap {
            return Err(GroupError::LatticeCapExceeded {
                order: g.order(),
                cap,
            });
        }
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut cyclic_gens: Vec<Elem> = Vec::new();
        let mut found: Vec<Subgroup<'g>> = Vec::new();
        for x in 0..g.order() {
            let c = g.cyclic_subgroup(x);
            if seen.insert(c.members().clone()) {
                if x != g.identity() {
                    cyclic_gens.push(x);
                }
                found.push(c);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for &x in &cyclic_gens {
                if found[i].contains_elem(x) {
                    continue;
                }
                let joined = found[i].extend(&[x]);
                if seen.insert(joined.members().clone()) {
                    found.push(joined);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        Ok(SubgroupLattice {
            group: g,
            subgroups: found,
        })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Subgroups in ascending order.
    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Proper subgroups not properly contained in another proper subgroup.
    pub fn maximal(&self) -> Vec<Subgroup<'g>> {
        let n = self.group.order();
        let proper: Vec<&Subgroup<'g>> =
            self.subgroups.iter().filter(|s| s.order() < n).collect();
        proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
            })
            .map(|h| (*h).clone())
            .collect()
    }

    /// Intersection of the maximal subgroups; the whole group if there are none.
    pub fn frattini(&self) -> Subgroup<'g> {
        let maximal = self.maximal();
        let Some(first) = maximal.first() else {
            return self.group.whole();
        };
        let mut members = first.members().clone();
        for m in &maximal[1..] {
            members.intersect_with(m.members());
        }
        self.group.subgroup_from_members(members)
    }

    /// Subgroups of prime-power order greater than one.
    pub fn primary_subgroups(&self) -> impl Iterator<Item = &Subgroup<'g>> {
        self.subgroups
            .iter()
            .filter(|s| prime_divisors(s.order() as u64).len() == 1)
    }

    /// Minimal non-nilpotent subgroups, each decomposed and audited.
    pub fn schmidt_subgroups(&self) -> Result<Vec<SchmidtStructure<'g>>> {
        let nilpotent: Vec<bool> = self
            .subgroups
            .iter()
            .map(|s| is_nilpotent(&s.to_group()))
            .collect();
        let mut out = Vec::new();
        for (i, s) in self.subgroups.iter().enumerate() {
            if nilpotent[i] {
                continue;
            }
            let minimal = self
                .subgroups
                .iter()
                .enumerate()
                .filter(|(_, h)| h.order() < s.order() && h.is_subgroup_of(s))
                .all(|(j, _)| nilpotent[j]);
            if minimal {
                out.push(SchmidtStructure::decompose(self.group, s)?);
            }
        }
        Ok(out)
    }
}

pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup<'_>>> {
    Ok(SubgroupLattice::new(g)?.subgroups)
}

pub fn maximal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup<'_>>> {
    Ok(SubgroupLattice::new(g)?.maximal())
}

/// `Φ(G)`.
pub fn frattini(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    Ok(SubgroupLattice::new(g)?.frattini())
}

pub fn schmidt_subgroups(g: &FiniteGroup) -> Result<Vec<SchmidtStructure<'_>>> {
    SubgroupLattice::new(g)?.schmidt_subgroups()
}

/// Structural checks on the normal Sylow 2-subgroup `P` of a Schmidt group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoGroupAudit {
    pub p_abelian: bool,
    /// `Z(P) = P′`.
    pub center_eq_derived: bool,
    /// `P′ = Φ(P)`.
    pub derived_eq_frattini: bool,
    /// `P′ ≤ Z(P)`.
    pub derived_in_center: bool,
    pub frattini_elementary_abelian: bool,
    pub exponent: u64,
}

impl TwoGroupAudit {
    /// `P′ = Φ(P) ≤ Z(P)` is elementary abelian, the exponent is at most 4,
    /// and `Z(P) = P′` whenever `P` is nonabelian. When `P` is abelian it is
    /// elementary abelian, so `P′ = Φ(P) = 1` while `Z(P) = P`.
    pub fn passes(&self) -> bool {
        self.derived_eq_frattini
            && self.derived_in_center
            && self.frattini_elementary_abelian
            && self.exponent <= 4
            && (self.p_abelian || self.center_eq_derived)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SchmidtAudit {
    /// `S′ = P`.
    pub derived_is_p: bool,
    pub p_normal: bool,
    pub q_cyclic: bool,
    pub q_nonnormal: bool,
    /// `|S| = |P|·q^t`.
    pub order_splits: bool,
    /// Present when `p = 2`.
    pub two_group: Option<TwoGroupAudit>,
}

impl SchmidtAudit {
    pub fn passes(&self) -> bool {
        self.derived_is_p
            && self.p_normal
            && self.q_cyclic
            && self.q_nonnormal
            && self.order_splits
            && self.two_group.is_none_or(|a| a.passes())
    }
}

/// A Schmidt subgroup `S = P ⋊ ⟨y⟩`.
#[derive(Debug, Clone)]
pub struct SchmidtStructure<'g> {
    pub s: Subgroup<'g>,
    pub p: u64,
    pub q: u64,
    pub normal_sylow: Subgroup<'g>,
    pub complement_generator: Permutation,
    pub audits: SchmidtAudit,
}

impl<'g> SchmidtStructure<'g> {
    /// Decomposes a minimal non-nilpotent subgroup `s` of `g`.
    ///
    /// A failed audit is returned as a structural violation: these are
    /// classical facts about Schmidt groups, so a failure means a bug.
    pub fn decompose(g: &'g FiniteGroup, s: &Subgroup<'g>) -> Result<Self> {
        let sg = s.to_group();
        let primes = sg.prime_spectrum().to_vec();
        if primes.len() != 2 {
            return Err(GroupError::StructuralViolation(format!(
                "Schmidt subgroup of order {} has {} prime divisors",
                sg.order(),
                primes.len()
            )));
        }
        let normal_prime = primes
            .iter()
            .copied()
            .find(|&p| is_p_closed(&sg, p))
            .ok_or_else(|| {
                GroupError::StructuralViolation(format!(
                    "Schmidt subgroup of order {} has no normal Sylow subgroup",
                    sg.order()
                ))
            })?;
        let p = normal_prime;
        let q = if primes[0] == p { primes[1] } else { primes[0] };

        let big_p = sylow_subgroup(&sg, p);
        let big_q = sylow_subgroup(&sg, q);
        let generator = big_q
            .indices()
            .find(|&x| sg.element_order(x) as usize == big_q.order());
        let derived = derived_subgroup(&sg);

        let two_group = (p == 2).then(|| audit_two_group(&big_p));
        let audits = SchmidtAudit {
            derived_is_p: derived == big_p,
            p_normal: sg.is_normal(&big_p),
            q_cyclic: generator.is_some(),
            q_nonnormal: !sg.is_normal(&big_q),
            order_splits: big_p.order() * big_q.order() == sg.order()
                && is_power_of(big_q.order() as u64, q),
            two_group,
        };
        let complement_generator = sg
            .element(generator.unwrap_or_else(|| sg.identity()))
            .clone();
        let p_perms: Vec<Permutation> = big_p.elements().cloned().collect();
        let structure = SchmidtStructure {
            s: s.clone(),
            p,
            q,
            normal_sylow: g.closure_of(&p_perms)?,
            complement_generator,
            audits,
        };
        if !audits.passes() {
            return Err(GroupError::StructuralViolation(format!(
                "Schmidt subgroup of order {} failed its audit: {audits:?}",
                sg.order()
            )));
        }
        Ok(structure)
    }
}

fn audit_two_group(p_sub: &Subgroup<'_>) -> TwoGroupAudit {
    let pg = p_sub.to_group();
    let center = pg.center();
    let derived = derived_subgroup(&pg);
    let frattini = SubgroupLattice::with_cap(&pg, usize::MAX)
        .expect("no cap")
        .frattini();
    TwoGroupAudit {
        p_abelian: pg.is_abelian(),
        center_eq_derived: center == derived,
        derived_eq_frattini: derived == frattini,
        derived_in_center: derived.is_subgroup_of(&center),
        frattini_elementary_abelian: frattini.is_abelian() && frattini.exponent() <= 2,
        exponent: pg.whole().exponent(),
    }
}

/// Whether `q` is a Sylow subgroup of `g`, returning its prime (or `None`
/// for the trivial subgroup, which is Sylow for every prime not dividing
/// `|G|`).
fn sylow_prime(g: &FiniteGroup, q: &Subgroup<'_>) -> Result<Option<u64>> {
    let order = q.order() as u64;
    if order == 1 {
        return Ok(None);
    }
    match prime_divisors(order).as_slice() {
        [p] if p_part(g.order() as u64, *p) == order => Ok(Some(*p)),
        _ => Err(GroupError::NotSylow {
            p: prime_divisors(order).first().copied().unwrap_or(1),
            order: q.order(),
        }),
    }
}

/// `⟨x⁻¹y : x, y ∈ Q, y = g⁻¹xg for some g ∈ G⟩` for a Sylow subgroup `Q`.
///
/// The result is checked against `Q ∩ G′`; a mismatch is reported as a
/// structural violation.
pub fn focal_subgroup<'g>(g: &'g FiniteGroup, q: &Subgroup<'g>) -> Result<Subgroup<'g>> {
    sylow_prime(g, q)?;
    let mut seed = Vec::new();
    let mut done = ElementSet::new(g.order());
    for x in q.indices() {
        if done.contains(x) {
            continue;
        }
        let fused: Vec<Elem> = g
            .conjugacy_class(x)
            .into_iter()
            .filter(|&y| q.contains_elem(y))
            .collect();
        for &a in &fused {
            done.insert(a);
            for &b in &fused {
                let c = g.mul(g.inv(a), b);
                if c != g.identity() {
                    seed.push(c);
                }
            }
        }
    }
    let mut focal = g.trivial_subgroup();
    for c in seed {
        if !focal.contains_elem(c) {
            focal = focal.extend(&[c]);
        }
    }
    let expected = q.intersection(&derived_subgroup(g));
    if focal != expected {
        return Err(GroupError::StructuralViolation(format!(
            "focal subgroup of order {} differs from Q ∩ G′ of order {}",
            focal.order(),
            expected.order()
        )));
    }
    Ok(focal)
}
