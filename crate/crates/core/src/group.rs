//! Fully enumerated permutation groups and their subgroups.
//!
//! A [`FiniteGroup`] stores every element in canonical (lexicographic image)
//! order, so an element is identified by its index. A [`Subgroup`] is a
//! bitmask over those indices plus a small generating set, borrowed from its
//! parent group.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;
use crate::primes;

/// Default cap on the number of elements a closure may reach.
pub const DEFAULT_ORDER_CAP: usize = 10080;

/// Groups up to this order get a precomputed multiplication table.
const TABLE_LIMIT: usize = 1500;

/// Index of an element in its group's canonical order.
pub type Elem = usize;

pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_idx: Vec<Elem>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    inverses: Vec<Elem>,
    orders: Vec<u64>,
    prime_spectrum: Vec<u64>,
    table: OnceLock<Option<Box<[u32]>>>,
}

impl FiniteGroup {
    /// Enumerates `⟨gens⟩` on `degree` points with the default order cap.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::generate_capped(degree, gens, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure of `gens` under right multiplication.
    pub fn generate_capped(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(crate::perm::PermError::ZeroDegree.into());
        }
        for (index, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(GroupError::GeneratorDegree {
                    index,
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        let mut found = Vec::new();
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::OrderCapExceeded {
                            cap,
                            reached: seen.len() + 1,
                        });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
            found.push(x);
        }
        Ok(Self::from_parts(degree, gens.to_vec(), found))
    }

    /// Builds a group from a complete, closed element list.
    fn from_parts(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<Permutation, Elem> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        let generator_idx = generators.iter().map(|g| index[g]).collect();
        let prime_spectrum = primes::prime_divisors(elements.len() as u64);
        FiniteGroup {
            degree,
            generators,
            generator_idx,
            elements,
            index,
            inverses,
            orders,
            prime_spectrum,
            table: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[Elem] {
        &self.generator_idx
    }

    /// All elements in canonical order; index 0 is the identity.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// The primes dividing the order, ascending.
    pub fn prime_spectrum(&self) -> &[u64] {
        &self.prime_spectrum
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn element(&self, i: Elem) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_order(&self, i: Elem) -> u64 {
        self.orders[i]
    }

    pub fn inv(&self, i: Elem) -> Elem {
        self.inverses[i]
    }

    fn table(&self) -> Option<&[u32]> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                if n > TABLE_LIMIT {
                    return None;
                }
                let mut t = vec![0u32; n * n];
                for (i, a) in self.elements.iter().enumerate() {
                    for (j, b) in self.elements.iter().enumerate() {
                        t[i * n + j] = self.index[&a.then(b)] as u32;
                    }
                }
                Some(t.into_boxed_slice())
            })
            .as_deref()
    }

    /// Product `a·b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.table() {
            Some(t) => t[a * self.order() + b] as Elem,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    /// `g⁻¹·x·g`.
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[g, h] = g⁻¹h⁻¹gh`.
    pub fn comm(&self, g: Elem, h: Elem) -> Elem {
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        self.mul(self.inv(hg), gh)
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Powers `x^0, x^1, …, x^(|x|-1)`.
    pub fn powers(&self, x: Elem) -> Vec<Elem> {
        let mut out = vec![self.identity()];
        let mut y = x;
        while y != self.identity() {
            out.push(y);
            y = self.mul(y, x);
        }
        out
    }

    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        let ord = self.element_order(x);
        let k = (k % ord) as usize;
        let mut y = self.identity();
        for _ in 0..k {
            y = self.mul(y, x);
        }
        y
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup {
            group: self,
            members: ElementSet::full(self.order()),
            gens: self.generator_idx.clone(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        let mut members = ElementSet::new(self.order());
        members.insert(self.identity());
        Subgroup {
            group: self,
            members,
            gens: Vec::new(),
        }
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &[Elem]) -> Subgroup<'_> {
        self.trivial_subgroup().extend(seed)
    }

    /// Closure of a set of permutations, which must all lie in the group.
    pub fn closure_of(&self, seed: &[Permutation]) -> Result<Subgroup<'_>> {
        let idx = seed
            .iter()
            .map(|p| self.index_of(p).ok_or(GroupError::NotAnElement))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&idx))
    }

    pub fn cyclic_subgroup(&self, x: Elem) -> Subgroup<'_> {
        self.closure(&[x])
    }

    /// Subgroup from a member set already known to be closed.
    pub fn subgroup_from_members(&self, members: ElementSet) -> Subgroup<'_> {
        debug_assert_eq!(members.universe(), self.order());
        let mut gens: Vec<Elem> = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in members.iter() {
            if !current.contains_elem(x) {
                current = current.extend(&[x]);
                gens.push(x);
            }
        }
        debug_assert_eq!(current.members, members, "member set is not closed");
        Subgroup {
            group: self,
            members,
            gens,
        }
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[Elem]) -> Subgroup<'_> {
        let mut h = self.closure(seed);
        loop {
            let mut extra = Vec::new();
            for &x in &h.gens {
                for &g in &self.generator_idx {
                    let c = self.conj(x, g);
                    if !h.contains_elem(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return h;
            }
            h = h.extend(&extra);
        }
    }

    /// `C_G(x)`.
    pub fn centralizer_of(&self, x: Elem) -> Subgroup<'_> {
        let mut members = ElementSet::new(self.order());
        for g in 0..self.order() {
            if self.commutes(g, x) {
                members.insert(g);
            }
        }
        self.subgroup_from_members(members)
    }

    /// `C_G(H)`.
    pub fn centralizer(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let mut members = ElementSet::new(self.order());
        for g in 0..self.order() {
            if h.gens.iter().all(|&x| self.commutes(g, x)) {
                members.insert(g);
            }
        }
        self.subgroup_from_members(members)
    }

    /// `N_G(H) = {g : g⁻¹Hg = H}`.
    pub fn normalizer(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let mut members = ElementSet::new(self.order());
        for g in 0..self.order() {
            if h.gens.iter().all(|&x| h.contains_elem(self.conj(x, g))) {
                members.insert(g);
            }
        }
        self.subgroup_from_members(members)
    }

    /// `Z(G)`.
    pub fn center(&self) -> Subgroup<'_> {
        self.centralizer(&self.whole())
    }

    pub fn is_normal(&self, h: &Subgroup<'_>) -> bool {
        self.generator_idx
            .iter()
            .all(|&g| h.gens.iter().all(|&x| h.contains_elem(self.conj(x, g))))
    }

    /// `g⁻¹Hg`.
    pub fn conjugate_subgroup(&self, h: &Subgroup<'_>, g: Elem) -> Subgroup<'_> {
        let mut members = ElementSet::new(self.order());
        for x in h.members.iter() {
            members.insert(self.conj(x, g));
        }
        Subgroup {
            group: self,
            members,
            gens: h.gens.iter().map(|&x| self.conj(x, g)).collect(),
        }
    }

    /// Distinct conjugates of `H`, in order of first discovery.
    pub fn subgroup_conjugates<'g>(&'g self, h: &Subgroup<'g>) -> Vec<Subgroup<'g>> {
        let mut out: Vec<Subgroup<'g>> = vec![h.clone()];
        let mut i = 0;
        while i < out.len() {
            for &g in &self.generator_idx {
                let c = self.conjugate_subgroup(&out[i], g);
                if !out.iter().any(|k| k.members == c.members) {
                    out.push(c);
                }
            }
            i += 1;
        }
        out
    }

    /// Conjugacy class of `x`, sorted.
    pub fn conjugacy_class(&self, x: Elem) -> Vec<Elem> {
        let mut seen = ElementSet::new(self.order());
        seen.insert(x);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &g in &self.generator_idx {
                let z = self.conj(y, g);
                if seen.insert(z) {
                    stack.push(z);
                }
            }
        }
        seen.iter().collect()
    }

    /// Orbits of the group acting on itself by conjugation, ordered by
    /// their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let mut assigned = ElementSet::new(self.order());
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if assigned.contains(x) {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &y in &class {
                assigned.insert(y);
            }
            classes.push(class);
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_idx;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// `[g, h] = g⁻¹h⁻¹gh` on permutations of equal degree.
pub fn commutator(g: &Permutation, h: &Permutation) -> Result<Permutation> {
    if g.degree() != h.degree() {
        return Err(crate::perm::PermError::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        }
        .into());
    }
    Ok(g.inverse().then(&h.inverse()).then(g).then(h))
}

/// A subgroup of a borrowed parent group.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: ElementSet,
    gens: Vec<Elem>,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn indices(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter()
    }

    pub fn elements(&self) -> impl Iterator<Item = &'g Permutation> + '_ {
        let g = self.group;
        self.members.iter().map(move |i| g.element(i))
    }

    #[inline]
    pub fn contains_elem(&self, i: Elem) -> bool {
        self.members.contains(i)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.group
            .index_of(p)
            .is_some_and(|i| self.members.contains(i))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        self.group.subgroup_from_members(members)
    }

    /// `⟨self, extra⟩`.
    pub fn extend(&self, extra: &[Elem]) -> Subgroup<'g> {
        let g = self.group;
        let mut members = self.members.clone();
        let mut list: Vec<Elem> = members.iter().collect();
        let mut gens = self.gens.clone();
        for &s in extra {
            if members.contains(s) {
                continue;
            }
            gens.push(s);
            let old_len = list.len();
            let mut i = 0;
            while i < list.len() {
                let x = list[i];
                let new_gens: &[Elem] = if i < old_len { &gens[gens.len() - 1..] } else { &gens };
                for &t in new_gens {
                    let y = g.mul(x, t);
                    if members.insert(y) {
                        list.push(y);
                    }
                }
                i += 1;
            }
        }
        Subgroup {
            group: g,
            members,
            gens,
        }
    }

    /// The subgroup as a group in its own right, on the same points.
    pub fn to_group(&self) -> FiniteGroup {
        let gens = self.gens.iter().map(|&i| self.group.element(i).clone()).collect();
        let elems = self.elements().cloned().collect();
        FiniteGroup::from_parts(self.group.degree(), gens, elems)
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.indices()
            .map(|i| self.group.element_order(i))
            .fold(1, crate::perm::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.group;
        self.gens
            .iter()
            .enumerate()
            .all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    /// Canonical cycle strings of a generating set.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|&i| self.group.element(i).to_string()).collect()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl Hash for Subgroup<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.generator_strings())
            .finish()
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
        let gens = if n < 2 {
            vec![]
        } else {
            vec![
                Permutation::from_cycles(n, &[vec![1, 2]]).unwrap(),
                Permutation::from_cycles(n, &[cyc]).unwrap(),
            ]
        };
        FiniteGroup::generate(n, &gens).unwrap()
    }

    /// Naive closure on raw permutations, independent of the index engine.
    fn brute_closure(n: usize, seed: &[Permutation]) -> Vec<Permutation> {
        let mut set = vec![Permutation::identity(n)];
        loop {
            let mut grew = false;
            let snapshot = set.clone();
            for a in &snapshot {
                for b in seed {
                    let c = a.then(b);
                    if !set.contains(&c) {
                        set.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                set.sort();
                return set;
            }
        }
    }

    #[test]
    fn generation_examples() {
        let t = FiniteGroup::generate(3, &[]).unwrap();
        assert_eq!(t.order(), 1);
        let s3 = FiniteGroup::generate(3, &[p("(1 2)", 3), p("(1 2 3)", 3)]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(
            s3.elements().to_vec(),
            brute_closure(3, &[p("(1 2)", 3), p("(1 2 3)", 3)])
        );
        let c4 = FiniteGroup::generate(4, &[p("(1 2 3 4)", 4)]).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(s3.prime_spectrum(), &[2, 3]);
        assert!(s3.element(0).is_identity());
    }

    #[test]
    fn generation_errors() {
        let err = FiniteGroup::generate_capped(5, &[p("(1 2)", 5), p("(1 2 3 4 5)", 5)], 100);
        assert!(matches!(
            err,
            Err(GroupError::OrderCapExceeded { cap: 100, reached: 101 })
        ));
        let err = FiniteGroup::generate(4, &[p("(1 2)", 3)]);
        assert!(matches!(err, Err(GroupError::GeneratorDegree { .. })));
    }

    #[test]
    fn commutator_convention() {
        let g = p("(1 2)", 3);
        let h = p("(1 3)", 3);
        let c = commutator(&g, &h).unwrap();
        assert_eq!(c, p("(1 3 2)", 3));
        // g⁻¹ · (g conjugated by h)
        assert_eq!(c, g.inverse().then(&g.conjugate_by(&h)));
        assert!(commutator(&g, &Permutation::identity(3)).unwrap().is_identity());
        assert!(commutator(&g, &g).unwrap().is_identity());
        assert!(commutator(&g, &Permutation::identity(4)).is_err());

        let s3 = sym(3);
        for a in 0..6 {
            for b in 0..6 {
                let expect = commutator(s3.element(a), s3.element(b)).unwrap();
                assert_eq!(s3.element(s3.comm(a, b)), &expect);
                assert_eq!(s3.comm(a, b) == 0, s3.commutes(a, b));
            }
        }
    }

    #[test]
    fn closures() {
        let s3 = sym(3);
        assert!(s3.closure(&[]).is_trivial());
        let c3 = s3.closure_of(&[p("(1 2 3)", 3)]).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(s3.closure(s3.generator_indices()).is_whole());
    }

    #[test]
    fn centralizers_and_normalizers() {
        let s3 = sym(3);
        assert!(s3.centralizer(&s3.trivial_subgroup()).is_whole());
        let c3 = s3.closure_of(&[p("(1 2 3)", 3)]).unwrap();
        assert_eq!(s3.centralizer(&c3), c3);
        let c6 = FiniteGroup::generate(5, &[p("(1 2 3)(4 5)", 5)]).unwrap();
        let any = c6.cyclic_subgroup(1);
        assert!(c6.centralizer(&any).is_whole());

        let s4 = sym(4);
        let t = s4.closure_of(&[p("(1 2 3)", 4)]).unwrap();
        assert_eq!(s4.normalizer(&t).order(), 6);
        assert!(s4.normalizer(&s4.whole()).is_whole());
        let v4 = s4
            .closure_of(&[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)])
            .unwrap();
        assert!(s4.normalizer(&v4).is_whole());
    }

    #[test]
    fn centers() {
        let c4 = FiniteGroup::generate(4, &[p("(1 2 3 4)", 4)]).unwrap();
        assert!(c4.center().is_whole());
        assert!(sym(3).center().is_trivial());
    }

    #[test]
    fn normality() {
        let s3 = sym(3);
        assert!(s3.is_normal(&s3.trivial_subgroup()));
        assert!(s3.is_normal(&s3.closure_of(&[p("(1 2 3)", 3)]).unwrap()));
        assert!(!s3.is_normal(&s3.closure_of(&[p("(1 2)", 3)]).unwrap()));
    }

    #[test]
    fn class_sizes() {
        let c5 = FiniteGroup::generate(5, &[p("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(c5.conjugacy_classes().len(), 5);
        let mut sizes: Vec<usize> = sym(3).conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let mut sizes: Vec<usize> = sym(4).conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn engine_invariants_on_s4() {
        let g = sym(4);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 24);
        for c in &classes {
            assert_eq!(24 % c.len(), 0);
        }
        for x in 0..g.order() {
            let h = g.cyclic_subgroup(x);
            let c = g.centralizer(&h);
            let n = g.normalizer(&h);
            assert!(c.is_subgroup_of(&n));
            assert_eq!(24 % c.order(), 0);
            assert_eq!(24 % n.order(), 0);
            assert_eq!(c, g.centralizer_of(x));
        }
    }

    #[test]
    fn table_and_direct_products_agree() {
        // degree 7 symmetric group is above the table limit
        let big = sym(7);
        assert_eq!(big.order(), 5040);
        let a = big.index_of(&p("(1 2 3)(4 5)", 7)).unwrap();
        let b = big.index_of(&p("(1 7)(2 6 5)", 7)).unwrap();
        assert_eq!(big.element(big.mul(a, b)), &big.element(a).then(big.element(b)));
        let small = sym(4);
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(
                    small.element(small.mul(a, b)),
                    &small.element(a).then(small.element(b))
                );
            }
        }
    }

    #[test]
    fn normal_closure_and_to_group() {
        let s4 = sym(4);
        let n = s4.normal_closure(&[s4.index_of(&p("(1 2)(3 4)", 4)).unwrap()]);
        assert_eq!(n.order(), 4);
        let v = n.to_group();
        assert_eq!(v.order(), 4);
        assert!(v.is_abelian());
    }
}
