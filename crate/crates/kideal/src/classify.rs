//! Classification of ideals: prime, semiprime, maximal, irreducible, and
//! strongly irreducible predicates in both the plain and k-flavors, the
//! k-radical in its two modes, the k-spectrum, and the constructive lemmas
//! (maximal disjoint ideals, separators, decompositions).
//!
//! Each k-predicate quantifies over k-ideals and uses the k-product
//! `IJ = C_k(⟨{xy}⟩)`; each plain predicate quantifies over all ideals and
//! uses the ordinary product `⟨{xy}⟩`.  The two families are computed
//! independently so that the exchange principles — `k-X ⟺ X ∧ k-ideal` —
//! stay meaningful, testable statements rather than definitions.
//!
//! Conventions for [`ClassTags`], which must be total: the whole ring is
//! never prime, semiprime, or maximal (properness is part of those
//! notions) but is vacuously irreducible and strongly irreducible; a
//! non-k-ideal never carries a k-flag.  The `is_*` operations, by
//! contrast, enforce their stated preconditions as errors.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{
    enumerate_ideals, generated, ideal_violation, is_k_ideal, k_closure_set, k_product_set,
    principal_k, product_ideal, subtractive_violation, sum_ideals,
};
use crate::lattice::{all_ideal_lattice_flags, KIdealLattice};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalMode {
    /// Intersection of all k-primes above the input (empty intersection is
    /// the whole ring).
    Intersection,
    /// `{ r : rⁿ ∈ I for some n ≥ 1 }`.
    Powers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    /// The k-ideal lattice is distributive.
    pub arithmetic: bool,
    /// The k-ideal lattice is a chain.
    pub k_chain: bool,
}

/// The full classification of one ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassTags {
    pub prime: bool,
    pub k_prime: bool,
    pub semiprime: bool,
    pub k_semiprime: bool,
    pub maximal: bool,
    pub k_maximal: bool,
    pub irreducible: bool,
    pub k_irreducible: bool,
    pub strongly_irreducible: bool,
    pub k_strongly_irreducible: bool,
    pub k_radical_fixed: bool,
}

impl ClassTags {
    /// `flag=0/1` pairs in the fixed field order.
    pub fn flags_string(&self) -> String {
        let bit = |b: bool| if b { "1" } else { "0" };
        format!(
            "prime={} k_prime={} semiprime={} k_semiprime={} maximal={} k_maximal={} \
             irreducible={} k_irreducible={} strongly_irreducible={} k_strongly_irreducible={} \
             k_radical_fixed={}",
            bit(self.prime),
            bit(self.k_prime),
            bit(self.semiprime),
            bit(self.k_semiprime),
            bit(self.maximal),
            bit(self.k_maximal),
            bit(self.irreducible),
            bit(self.k_irreducible),
            bit(self.strongly_irreducible),
            bit(self.k_strongly_irreducible),
            bit(self.k_radical_fixed),
        )
    }

    /// The report line `IDEAL <names> FLAGS <flag=0/1 ...>`.
    pub fn render(&self, names: &str) -> String {
        format!("IDEAL {names} FLAGS {}", self.flags_string())
    }
}

/// The k-spectrum: k-primes, their closed-set topology, and its
/// irreducible components.
#[derive(Debug, Clone)]
pub struct SpectrumK {
    pub ring: FiniteSemiring,
    /// All k-ideals, sorted; parallel to `closed_sets`.
    pub k_ideals: Vec<BitSet>,
    /// All k-prime ideals, sorted.
    pub primes: Vec<BitSet>,
    /// `V(I) = { P ∈ primes : I ⊆ P }` per k-ideal, as masks over prime
    /// indices.
    pub closed_sets: Vec<BitSet>,
    pub minimal_primes: Vec<BitSet>,
    /// Irreducible components of the whole space: `V(P)` for each minimal
    /// prime, as masks over prime indices.
    pub components: Vec<BitSet>,
}

/// Precomputed ideal data for one semiring, hosting every classification
/// operation.
pub struct Classifier {
    ring: FiniteSemiring,
    ideals: Vec<BitSet>,
    k_ideals: Vec<BitSet>,
    full: BitSet,
}

impl Classifier {
    pub fn new(ring: &FiniteSemiring) -> Result<Self> {
        let ideals = enumerate_ideals(ring, false)?;
        let k_ideals = ideals
            .iter()
            .filter(|s| subtractive_violation(ring, s).is_none())
            .cloned()
            .collect();
        Ok(Classifier {
            ring: ring.clone(),
            ideals,
            k_ideals,
            full: BitSet::full(ring.order()),
        })
    }

    pub fn ring(&self) -> &FiniteSemiring {
        &self.ring
    }

    pub fn ideals(&self) -> &[BitSet] {
        &self.ideals
    }

    pub fn k_ideals(&self) -> &[BitSet] {
        &self.k_ideals
    }

    pub fn is_proper(&self, set: &BitSet) -> bool {
        *set != self.full
    }

    fn require_ideal(&self, set: &BitSet) -> Result<()> {
        if set.universe() != self.ring.order() {
            return Err(Error::ParentMismatch);
        }
        match ideal_violation(&self.ring, set) {
            None => Ok(()),
            Some(v) => Err(Error::Precondition(format!("not an ideal: {v}"))),
        }
    }

    fn require_k_ideal(&self, set: &BitSet) -> Result<()> {
        self.require_ideal(set)?;
        match subtractive_violation(&self.ring, set) {
            None => Ok(()),
            Some((x, y)) => Err(Error::Precondition(format!(
                "not a k-ideal: subtractivity fails at ({x},{y})"
            ))),
        }
    }

    fn require_proper_k_ideal(&self, set: &BitSet) -> Result<()> {
        self.require_k_ideal(set)?;
        if !self.is_proper(set) {
            return Err(Error::Precondition("ideal must be proper".into()));
        }
        Ok(())
    }

    // ----- total predicate internals -------------------------------------

    /// `xy ∈ p ⟹ x ∈ p or y ∈ p` over all carrier pairs, plus properness.
    pub fn prime_elementwise(&self, p: &BitSet) -> bool {
        if !self.is_proper(p) {
            return false;
        }
        let n = self.ring.order();
        for x in 0..n {
            for y in 0..n {
                if p.contains(self.ring.mul(x, y)) && !p.contains(x) && !p.contains(y) {
                    return false;
                }
            }
        }
        true
    }

    /// `AB ⊆ p ⟹ A ⊆ p or B ⊆ p` over all ideal pairs with the ordinary
    /// product, plus properness.
    pub fn prime_among_ideals(&self, p: &BitSet) -> bool {
        if !self.is_proper(p) {
            return false;
        }
        for a in &self.ideals {
            for b in &self.ideals {
                if product_ideal(&self.ring, a, b).is_subset(p)
                    && !a.is_subset(p)
                    && !b.is_subset(p)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `AB ⊆ p ⟹ A ⊆ p or B ⊆ p` over all k-ideal pairs with the
    /// k-product, plus properness.
    pub fn prime_among_k_ideals(&self, p: &BitSet) -> bool {
        if !self.is_proper(p) {
            return false;
        }
        for a in &self.k_ideals {
            for b in &self.k_ideals {
                if k_product_set(&self.ring, a, b).is_subset(p)
                    && !a.is_subset(p)
                    && !b.is_subset(p)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `x² ∈ q ⟹ x ∈ q`, plus properness.
    pub fn semiprime_elementwise(&self, q: &BitSet) -> bool {
        if !self.is_proper(q) {
            return false;
        }
        (0..self.ring.order()).all(|x| !q.contains(self.ring.mul(x, x)) || q.contains(x))
    }

    /// `A² ⊆ q ⟹ A ⊆ q` over all ideals with the ordinary product.
    pub fn semiprime_among_ideals(&self, q: &BitSet) -> bool {
        if !self.is_proper(q) {
            return false;
        }
        self.ideals
            .iter()
            .all(|a| !product_ideal(&self.ring, a, a).is_subset(q) || a.is_subset(q))
    }

    /// `A² ⊆ q ⟹ A ⊆ q` over all k-ideals with the k-product.
    pub fn semiprime_among_k_ideals(&self, q: &BitSet) -> bool {
        if !self.is_proper(q) {
            return false;
        }
        self.k_ideals
            .iter()
            .all(|a| !k_product_set(&self.ring, a, a).is_subset(q) || a.is_subset(q))
    }

    /// No ideal lies strictly between `m` and the ring.
    pub fn maximal_among_ideals(&self, m: &BitSet) -> bool {
        self.is_proper(m)
            && !self
                .ideals
                .iter()
                .any(|j| self.is_proper(j) && m.is_proper_subset(j))
    }

    /// No k-ideal lies strictly between `m` and the ring.
    pub fn maximal_among_k_ideals(&self, m: &BitSet) -> bool {
        self.is_proper(m)
            && !self
                .k_ideals
                .iter()
                .any(|j| self.is_proper(j) && m.is_proper_subset(j))
    }

    fn irreducible_over(&self, i: &BitSet, members: &[BitSet]) -> bool {
        for a in members {
            for b in members {
                if a.intersection(b) == *i && *a != *i && *b != *i {
                    return false;
                }
            }
        }
        true
    }

    fn strongly_irreducible_over(&self, i: &BitSet, members: &[BitSet]) -> bool {
        for a in members {
            for b in members {
                if a.intersection(b).is_subset(i) && !a.is_subset(i) && !b.is_subset(i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn irreducible_among_ideals(&self, i: &BitSet) -> bool {
        self.irreducible_over(i, &self.ideals)
    }

    pub fn irreducible_among_k_ideals(&self, i: &BitSet) -> bool {
        self.irreducible_over(i, &self.k_ideals)
    }

    pub fn strongly_irreducible_among_ideals(&self, i: &BitSet) -> bool {
        self.strongly_irreducible_over(i, &self.ideals)
    }

    pub fn strongly_irreducible_among_k_ideals(&self, i: &BitSet) -> bool {
        self.strongly_irreducible_over(i, &self.k_ideals)
    }

    /// `C_k(⟨a⟩) ∩ C_k(⟨b⟩) ⊆ i ⟹ a ∈ i or b ∈ i` over all carrier pairs.
    pub fn strongly_irreducible_elementwise(&self, i: &BitSet) -> bool {
        let n = self.ring.order();
        let principals: Vec<BitSet> = (0..n).map(|x| principal_k(&self.ring, x)).collect();
        for a in 0..n {
            for b in 0..n {
                if principals[a].intersection(&principals[b]).is_subset(i)
                    && !i.contains(a)
                    && !i.contains(b)
                {
                    return false;
                }
            }
        }
        true
    }

    // ----- spec operations ------------------------------------------------

    /// k-primality of a proper k-ideal, computed two independent ways
    /// (elementwise and over k-ideal pairs) and compared.
    pub fn is_k_prime(&self, p: &BitSet) -> Result<bool> {
        self.require_proper_k_ideal(p)?;
        let elementwise = self.prime_elementwise(p);
        let definitional = self.prime_among_k_ideals(p);
        if elementwise != definitional {
            return Err(Error::Inconsistent(format!(
                "k-prime routes disagree on {}: elementwise={elementwise}, definitional={definitional}",
                self.ring.set_to_string(p)
            )));
        }
        Ok(definitional)
    }

    /// k-semiprimality of a proper k-ideal, definitional route cross-checked
    /// against the elementwise square criterion.
    pub fn is_k_semiprime(&self, q: &BitSet) -> Result<bool> {
        self.require_proper_k_ideal(q)?;
        let definitional = self.semiprime_among_k_ideals(q);
        let elementwise = self.semiprime_elementwise(q);
        if elementwise != definitional {
            return Err(Error::Inconsistent(format!(
                "k-semiprime routes disagree on {}: elementwise={elementwise}, definitional={definitional}",
                self.ring.set_to_string(q)
            )));
        }
        Ok(definitional)
    }

    /// k-maximality of a proper k-ideal: no proper k-ideal strictly above.
    pub fn is_k_maximal(&self, m: &BitSet) -> Result<bool> {
        self.require_proper_k_ideal(m)?;
        Ok(self.maximal_among_k_ideals(m))
    }

    /// k-irreducibility of a k-ideal; `strong` asks the absorbing form
    /// `J ∩ J' ⊆ I ⟹ J ⊆ I or J' ⊆ I`, cross-checked elementwise.
    pub fn is_k_irreducible(&self, i: &BitSet, strong: bool) -> Result<bool> {
        self.require_k_ideal(i)?;
        if strong {
            let definitional = self.strongly_irreducible_among_k_ideals(i);
            let elementwise = self.strongly_irreducible_elementwise(i);
            if elementwise != definitional {
                return Err(Error::Inconsistent(format!(
                    "strong irreducibility routes disagree on {}: elementwise={elementwise}, definitional={definitional}",
                    self.ring.set_to_string(i)
                )));
            }
            Ok(definitional)
        } else {
            Ok(self.irreducible_among_k_ideals(i))
        }
    }

    /// The k-radical of a k-ideal in the requested mode.
    pub fn k_radical(&self, i: &BitSet, mode: RadicalMode) -> Result<BitSet> {
        self.require_k_ideal(i)?;
        Ok(self.k_radical_unchecked(i, mode))
    }

    fn k_radical_unchecked(&self, i: &BitSet, mode: RadicalMode) -> BitSet {
        match mode {
            RadicalMode::Intersection => {
                let mut out = self.full.clone();
                for p in &self.k_ideals {
                    if i.is_subset(p) && self.prime_elementwise(p) {
                        out = out.intersection(p);
                    }
                }
                out
            }
            RadicalMode::Powers => {
                let mut out = BitSet::empty(self.ring.order());
                for r in 0..self.ring.order() {
                    if !self.square_chain(r).intersection(i).is_empty() {
                        out.insert(r);
                    }
                }
                out
            }
        }
    }

    /// The k-spectrum with its closed sets and irreducible components.
    pub fn spectrum(&self) -> SpectrumK {
        let primes: Vec<BitSet> = self
            .k_ideals
            .iter()
            .filter(|p| self.prime_elementwise(p))
            .cloned()
            .collect();
        debug_assert!(primes
            .iter()
            .all(|p| self.prime_among_k_ideals(p)));
        let closed_sets: Vec<BitSet> = self
            .k_ideals
            .iter()
            .map(|i| {
                let mut v = BitSet::empty(primes.len());
                for (idx, p) in primes.iter().enumerate() {
                    if i.is_subset(p) {
                        v.insert(idx);
                    }
                }
                v
            })
            .collect();
        let minimal_primes: Vec<BitSet> = primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q.is_proper_subset(p)))
            .cloned()
            .collect();
        let mut components: Vec<BitSet> = minimal_primes
            .iter()
            .map(|m| {
                let mut v = BitSet::empty(primes.len());
                for (idx, p) in primes.iter().enumerate() {
                    if m.is_subset(p) {
                        v.insert(idx);
                    }
                }
                v
            })
            .collect();
        components.sort();
        SpectrumK {
            ring: self.ring.clone(),
            k_ideals: self.k_ideals.clone(),
            primes,
            closed_sets,
            minimal_primes,
            components,
        }
    }

    /// Greatest k-ideals containing `i` and disjoint from the
    /// multiplicatively closed set `s`; first by `(cardinality, mask)` when
    /// several are maximal.
    pub fn maximal_disjoint_ideal(&self, i: &BitSet, s: &BitSet) -> Result<BitSet> {
        self.require_k_ideal(i)?;
        if s.is_empty() {
            return Err(Error::Precondition("the avoided set must be nonempty".into()));
        }
        if !self.multiplicatively_closed(s) {
            return Err(Error::Precondition(
                "the avoided set must be closed under multiplication".into(),
            ));
        }
        if !i.intersection(s).is_empty() {
            return Err(Error::Precondition(
                "the ideal must be disjoint from the avoided set".into(),
            ));
        }
        let candidates: Vec<&BitSet> = self
            .k_ideals
            .iter()
            .filter(|j| i.is_subset(j) && j.intersection(s).is_empty())
            .collect();
        let maximal = candidates
            .iter()
            .filter(|j| !candidates.iter().any(|k| j.is_proper_subset(k)))
            .min()
            .expect("the input ideal itself is a candidate");
        Ok((*maximal).clone())
    }

    fn multiplicatively_closed(&self, s: &BitSet) -> bool {
        s.iter().all(|x| s.iter().all(|y| s.contains(self.ring.mul(x, y))))
    }

    /// Closure of `{x}` under multiplication — the finite set of powers
    /// `{xⁿ : n ≥ 1}`.
    pub fn square_chain(&self, x: usize) -> BitSet {
        let mut out = BitSet::singleton(self.ring.order(), x);
        loop {
            let mut next = out.clone();
            for a in out.iter() {
                for b in out.iter() {
                    next.insert(self.ring.mul(a, b));
                }
            }
            if next == out {
                return out;
            }
            out = next;
        }
    }

    /// Smallest element of `i` avoiding every listed ideal, or `None` when
    /// `i` is contained in one of them.
    ///
    /// `i` must be closed under addition and multiplication; entries of
    /// `ps` past the second must be k-prime, the first two need only be
    /// k-ideals.
    pub fn prime_avoidance_witness(&self, i: &BitSet, ps: &[BitSet]) -> Result<Option<usize>> {
        for x in i.iter() {
            for y in i.iter() {
                if !i.contains(self.ring.add(x, y)) || !i.contains(self.ring.mul(x, y)) {
                    return Err(Error::Precondition(
                        "the searched set must be closed under addition and multiplication".into(),
                    ));
                }
            }
        }
        for (idx, p) in ps.iter().enumerate() {
            self.require_k_ideal(p)?;
            if idx >= 2 && !self.is_k_prime(p)? {
                return Err(Error::Precondition(format!(
                    "ideal {} in position {idx} must be k-prime",
                    self.ring.set_to_string(p)
                )));
            }
        }
        if ps.iter().any(|p| i.is_subset(p)) {
            return Ok(None);
        }
        Ok(i.iter().find(|&x| !ps.iter().any(|p| p.contains(x))))
    }

    /// Greatest k-ideal containing `i` but avoiding `x`; always
    /// k-irreducible.
    pub fn separator_ideal(&self, i: &BitSet, x: usize) -> Result<BitSet> {
        self.require_proper_k_ideal(i)?;
        if x >= self.ring.order() || x == self.ring.zero() {
            return Err(Error::Precondition("the avoided element must be nonzero".into()));
        }
        if i.contains(x) {
            return Err(Error::Precondition(
                "the avoided element must lie outside the ideal".into(),
            ));
        }
        let candidates: Vec<&BitSet> = self
            .k_ideals
            .iter()
            .filter(|j| i.is_subset(j) && !j.contains(x))
            .collect();
        let maximal = candidates
            .iter()
            .filter(|j| !candidates.iter().any(|k| j.is_proper_subset(k)))
            .min()
            .expect("the input ideal itself is a candidate");
        // A maximal avoider is k-irreducible: any pair of strictly larger
        // k-ideals must both contain x, hence so does their intersection.
        debug_assert!(self.irreducible_among_k_ideals(maximal));
        Ok((*maximal).clone())
    }

    /// Finite decomposition of a proper k-ideal into k-irreducible factors
    /// whose intersection is exactly the input, with no redundant factor.
    pub fn k_irreducible_decomposition(&self, i: &BitSet) -> Result<Vec<BitSet>> {
        self.require_proper_k_ideal(i)?;
        let mut factors = Vec::new();
        self.split_irreducible(i, &mut factors);
        factors.sort();
        factors.dedup();
        // Drop factors containing the intersection of the others until none
        // remains.
        loop {
            let redundant = (0..factors.len()).find(|&idx| {
                let mut rest = self.full.clone();
                for (j, f) in factors.iter().enumerate() {
                    if j != idx {
                        rest = rest.intersection(f);
                    }
                }
                rest.is_subset(&factors[idx])
            });
            match redundant {
                Some(idx) if factors.len() > 1 => {
                    factors.remove(idx);
                }
                _ => break,
            }
        }
        debug_assert_eq!(
            factors
                .iter()
                .fold(self.full.clone(), |acc, f| acc.intersection(f)),
            *i
        );
        Ok(factors)
    }

    fn split_irreducible(&self, i: &BitSet, out: &mut Vec<BitSet>) {
        if self.irreducible_among_k_ideals(i) {
            out.push(i.clone());
            return;
        }
        // Witness pair with the smallest combined footprint, then smallest
        // first member; both components are strictly larger, so the
        // recursion climbs the finite lattice.
        let mut best: Option<(BitSet, BitSet, BitSet)> = None;
        for a in &self.k_ideals {
            for b in &self.k_ideals {
                if a > b {
                    continue;
                }
                if a.intersection(b) == *i && *a != *i && *b != *i {
                    let key = a.union(b);
                    if best
                        .as_ref()
                        .map(|(k, ba, _)| (&key, a) < (k, ba))
                        .unwrap_or(true)
                    {
                        best = Some((key, a.clone(), b.clone()));
                    }
                }
            }
        }
        let (_, a, b) = best.expect("a reducible ideal has a witness pair");
        self.split_irreducible(&a, out);
        self.split_irreducible(&b, out);
    }

    /// An inclusion-minimal k-strongly-irreducible k-ideal containing `i`.
    pub fn minimal_strongly_irreducible_above(&self, i: &BitSet) -> Result<BitSet> {
        self.require_proper_k_ideal(i)?;
        let candidates: Vec<&BitSet> = self
            .k_ideals
            .iter()
            .filter(|j| i.is_subset(j) && self.strongly_irreducible_among_k_ideals(j))
            .collect();
        let minimal = candidates
            .iter()
            .filter(|j| !candidates.iter().any(|k| k.is_proper_subset(j)))
            .min()
            .expect("the whole ring absorbs every intersection");
        Ok((*minimal).clone())
    }

    /// Distributivity and chain flags of the k-ideal lattice.
    pub fn structure_flags(&self) -> Result<StructureFlags> {
        let flags = KIdealLattice::new(&self.ring)?.flags();
        Ok(StructureFlags {
            arithmetic: flags.distributive,
            k_chain: flags.totally_ordered,
        })
    }

    /// Distributivity of the lattice of all ideals, for comparison with the
    /// k-ideal reading of `arithmetic`.
    pub fn all_ideal_distributive(&self) -> Result<bool> {
        Ok(all_ideal_lattice_flags(&self.ring)?.distributive)
    }

    /// Total classification of an ideal: every flag, no properness errors.
    pub fn tags(&self, set: &BitSet) -> Result<ClassTags> {
        self.require_ideal(set)?;
        let k = subtractive_violation(&self.ring, set).is_none();
        let k_radical_fixed = k && self.k_radical_unchecked(set, RadicalMode::Intersection) == *set;
        Ok(ClassTags {
            prime: self.prime_among_ideals(set),
            k_prime: k && self.prime_among_k_ideals(set),
            semiprime: self.semiprime_among_ideals(set),
            k_semiprime: k && self.semiprime_among_k_ideals(set),
            maximal: self.maximal_among_ideals(set),
            k_maximal: k && self.maximal_among_k_ideals(set),
            irreducible: self.irreducible_among_ideals(set),
            k_irreducible: k && self.irreducible_among_k_ideals(set),
            strongly_irreducible: self.strongly_irreducible_among_ideals(set),
            k_strongly_irreducible: k && self.strongly_irreducible_among_k_ideals(set),
            k_radical_fixed,
        })
    }

    /// Greedy finite generating set: repeatedly adjoin the smallest element
    /// not yet generated.
    pub fn finite_generating_set(&self, i: &BitSet) -> Result<Vec<usize>> {
        self.require_ideal(i)?;
        let mut gens = Vec::new();
        let mut span = generated(&self.ring, &BitSet::empty(self.ring.order()));
        while span != *i {
            let next = i
                .iter()
                .find(|&x| !span.contains(x))
                .expect("span is contained in the ideal");
            gens.push(next);
            let mut gen_set = BitSet::empty(self.ring.order());
            for &g in &gens {
                gen_set.insert(g);
            }
            span = generated(&self.ring, &gen_set);
        }
        Ok(gens)
    }

    /// Least k-ideal above: convenience re-export used by callers holding a
    /// classifier.
    pub fn k_closure(&self, i: &BitSet) -> BitSet {
        k_closure_set(&self.ring, i)
    }

    /// Join in the k-ideal lattice.
    pub fn k_join(&self, a: &BitSet, b: &BitSet) -> BitSet {
        k_closure_set(&self.ring, &sum_ideals(&self.ring, a, b))
    }

    pub fn is_k(&self, set: &BitSet) -> bool {
        is_k_ideal(&self.ring, set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::by_name;
    use crate::ideal::IdealSet;

    fn set(ring: &FiniteSemiring, names: &[&str]) -> BitSet {
        IdealSet::from_names(ring, names).unwrap().members().clone()
    }

    fn classifier(name: &str) -> (FiniteSemiring, Classifier) {
        let ring = by_name(name).unwrap();
        let c = Classifier::new(&ring).unwrap();
        (ring, c)
    }

    #[test]
    fn k_primality() {
        let (z4, c) = classifier("Z4");
        assert!(c.is_k_prime(&set(&z4, &["0", "2"])).unwrap());
        assert!(!c.is_k_prime(&set(&z4, &["0"])).unwrap());
        let (c3, cc) = classifier("C3");
        assert!(cc.is_k_prime(&set(&c3, &["0"])).unwrap());
    }

    #[test]
    fn k_primality_preconditions() {
        let (z4, c) = classifier("Z4");
        assert!(matches!(
            c.is_k_prime(&BitSet::full(4)),
            Err(Error::Precondition(_))
        ));
        let (n3, cn) = classifier("N3");
        assert!(matches!(
            cn.is_k_prime(&set(&n3, &["0", "3"])),
            Err(Error::Precondition(_))
        ));
        let _ = z4;
    }

    #[test]
    fn k_semiprimality() {
        let (z4, c) = classifier("Z4");
        assert!(!c.is_k_semiprime(&set(&z4, &["0"])).unwrap());
        assert!(c.is_k_semiprime(&set(&z4, &["0", "2"])).unwrap());
        let (bb, cb) = classifier("BxB");
        assert!(cb.is_k_semiprime(&set(&bb, &["(0,0)"])).unwrap());
    }

    #[test]
    fn k_maximality() {
        let (z4, c) = classifier("Z4");
        assert!(c.is_k_maximal(&set(&z4, &["0", "2"])).unwrap());
        let (n3, cn) = classifier("N3");
        assert!(cn.is_k_maximal(&set(&n3, &["0"])).unwrap());
        let (bb, cb) = classifier("BxB");
        assert!(!cb.is_k_maximal(&set(&bb, &["(0,0)"])).unwrap());
    }

    #[test]
    fn k_irreducibility() {
        let (bb, cb) = classifier("BxB");
        assert!(!cb.is_k_irreducible(&set(&bb, &["(0,0)"]), false).unwrap());
        let (z4, c) = classifier("Z4");
        assert!(c.is_k_irreducible(&set(&z4, &["0"]), true).unwrap());
        let (c3, cc) = classifier("C3");
        assert!(cc.is_k_irreducible(&set(&c3, &["0", "a"]), true).unwrap());
    }

    #[test]
    fn radicals() {
        let (z4, c) = classifier("Z4");
        let even = set(&z4, &["0", "2"]);
        assert_eq!(c.k_radical(&set(&z4, &["0"]), RadicalMode::Intersection).unwrap(), even);
        assert_eq!(c.k_radical(&set(&z4, &["0"]), RadicalMode::Powers).unwrap(), even);
        assert_eq!(c.k_radical(&even, RadicalMode::Intersection).unwrap(), even);
        let (n3, cn) = classifier("N3");
        let zero = set(&n3, &["0"]);
        assert_eq!(cn.k_radical(&zero, RadicalMode::Intersection).unwrap(), zero);
        assert_eq!(cn.k_radical(&zero, RadicalMode::Powers).unwrap(), zero);
    }

    #[test]
    fn spectra() {
        let (z4, c) = classifier("Z4");
        let spec = c.spectrum();
        assert_eq!(spec.primes, vec![set(&z4, &["0", "2"])]);
        assert_eq!(spec.minimal_primes, spec.primes);
        assert_eq!(spec.components.len(), 1);

        let (c3, cc) = classifier("C3");
        let spec = cc.spectrum();
        assert_eq!(spec.primes, vec![set(&c3, &["0"]), set(&c3, &["0", "a"])]);
        assert_eq!(spec.minimal_primes, vec![set(&c3, &["0"])]);
        assert_eq!(spec.components.len(), 1);
        assert_eq!(spec.components[0].len(), 2);

        let (bb, cb) = classifier("BxB");
        let spec = cb.spectrum();
        assert_eq!(
            spec.primes,
            vec![set(&bb, &["(0,0)", "(1,0)"]), set(&bb, &["(0,0)", "(0,1)"])]
        );
        assert_eq!(spec.minimal_primes.len(), 2);
        assert_eq!(spec.components.len(), 2);
    }

    #[test]
    fn maximal_disjoint_ideals() {
        let (z4, c) = classifier("Z4");
        assert_eq!(
            c.maximal_disjoint_ideal(&set(&z4, &["0"]), &set(&z4, &["1", "3"])).unwrap(),
            set(&z4, &["0", "2"])
        );
        let (c3, cc) = classifier("C3");
        assert_eq!(
            cc.maximal_disjoint_ideal(&set(&c3, &["0"]), &set(&c3, &["1"])).unwrap(),
            set(&c3, &["0", "a"])
        );
        let (b, cb) = classifier("B");
        assert_eq!(
            cb.maximal_disjoint_ideal(&set(&b, &["0"]), &set(&b, &["1"])).unwrap(),
            set(&b, &["0"])
        );
    }

    #[test]
    fn maximal_disjoint_preconditions() {
        let (z4, c) = classifier("Z4");
        // {2} is not multiplicatively closed in Z4 (2·2 = 0).
        assert!(c
            .maximal_disjoint_ideal(&set(&z4, &["0"]), &set(&z4, &["2"]))
            .is_err());
        assert!(c
            .maximal_disjoint_ideal(&set(&z4, &["0"]), &BitSet::empty(4))
            .is_err());
        assert!(c
            .maximal_disjoint_ideal(&set(&z4, &["0", "2"]), &set(&z4, &["1", "2", "3"]))
            .is_err());
    }

    #[test]
    fn square_chains() {
        let (z4, c) = classifier("Z4");
        assert_eq!(c.square_chain(2), set(&z4, &["0", "2"]));
        let (b, cb) = classifier("B");
        assert_eq!(cb.square_chain(1), set(&b, &["1"]));
        let (n3, cn) = classifier("N3");
        assert_eq!(cn.square_chain(2), set(&n3, &["2", "3"]));
    }

    #[test]
    fn prime_avoidance() {
        let (z4, c) = classifier("Z4");
        assert_eq!(
            c.prime_avoidance_witness(&BitSet::full(4), &[set(&z4, &["0", "2"])]).unwrap(),
            Some(1)
        );
        let (bb, cb) = classifier("BxB");
        assert_eq!(
            cb.prime_avoidance_witness(
                &BitSet::full(4),
                &[set(&bb, &["(0,0)", "(1,0)"]), set(&bb, &["(0,0)", "(0,1)"])]
            )
            .unwrap(),
            Some(1)
        );
        let (c3, cc) = classifier("C3");
        let witness = cc
            .prime_avoidance_witness(&set(&c3, &["0", "a"]), &[set(&c3, &["0"])])
            .unwrap();
        assert_eq!(witness, Some(c3.element_index("a").unwrap()));
    }

    #[test]
    fn separators() {
        let (bb, cb) = classifier("BxB");
        let x = bb.element_index("(1,0)").unwrap();
        assert_eq!(
            cb.separator_ideal(&set(&bb, &["(0,0)"]), x).unwrap(),
            set(&bb, &["(0,0)", "(0,1)"])
        );
        let (z4, c) = classifier("Z4");
        assert_eq!(c.separator_ideal(&set(&z4, &["0"]), 2).unwrap(), set(&z4, &["0"]));
        let (c3, cc) = classifier("C3");
        assert_eq!(
            cc.separator_ideal(&set(&c3, &["0"]), 1).unwrap(),
            set(&c3, &["0", "a"])
        );
    }

    #[test]
    fn decompositions() {
        let (bb, cb) = classifier("BxB");
        assert_eq!(
            cb.k_irreducible_decomposition(&set(&bb, &["(0,0)"])).unwrap(),
            vec![set(&bb, &["(0,0)", "(1,0)"]), set(&bb, &["(0,0)", "(0,1)"])]
        );
        let (z4, c) = classifier("Z4");
        assert_eq!(
            c.k_irreducible_decomposition(&set(&z4, &["0"])).unwrap(),
            vec![set(&z4, &["0"])]
        );
        let (c3, cc) = classifier("C3");
        assert_eq!(
            cc.k_irreducible_decomposition(&set(&c3, &["0", "a"])).unwrap(),
            vec![set(&c3, &["0", "a"])]
        );
    }

    #[test]
    fn minimal_strongly_irreducible() {
        let (z4, c) = classifier("Z4");
        assert_eq!(
            c.minimal_strongly_irreducible_above(&set(&z4, &["0"])).unwrap(),
            set(&z4, &["0"])
        );
        let (bb, cb) = classifier("BxB");
        assert_eq!(
            cb.minimal_strongly_irreducible_above(&set(&bb, &["(0,0)"])).unwrap(),
            set(&bb, &["(0,0)", "(1,0)"])
        );
        let (c3, cc) = classifier("C3");
        assert_eq!(
            cc.minimal_strongly_irreducible_above(&set(&c3, &["0"])).unwrap(),
            set(&c3, &["0"])
        );
    }

    #[test]
    fn structure_flag_examples() {
        let (_, cc) = classifier("C3");
        assert_eq!(
            cc.structure_flags().unwrap(),
            StructureFlags { arithmetic: true, k_chain: true }
        );
        let (_, cb) = classifier("BxB");
        assert_eq!(
            cb.structure_flags().unwrap(),
            StructureFlags { arithmetic: true, k_chain: false }
        );
        let (_, c) = classifier("Z4");
        assert_eq!(
            c.structure_flags().unwrap(),
            StructureFlags { arithmetic: true, k_chain: true }
        );
    }

    #[test]
    fn tags_on_the_even_ideal_of_z4() {
        let (z4, c) = classifier("Z4");
        let tags = c.tags(&set(&z4, &["0", "2"])).unwrap();
        assert!(
            tags.prime
                && tags.k_prime
                && tags.semiprime
                && tags.k_semiprime
                && tags.maximal
                && tags.k_maximal
                && tags.irreducible
                && tags.k_irreducible
                && tags.strongly_irreducible
                && tags.k_strongly_irreducible
                && tags.k_radical_fixed
        );
        assert_eq!(
            tags.render("{0,2}"),
            "IDEAL {0,2} FLAGS prime=1 k_prime=1 semiprime=1 k_semiprime=1 maximal=1 \
             k_maximal=1 irreducible=1 k_irreducible=1 strongly_irreducible=1 \
             k_strongly_irreducible=1 k_radical_fixed=1"
        );
    }

    #[test]
    fn zero_in_truncated_naturals_separates_the_maximality_notions() {
        let (n3, cn) = classifier("N3");
        let zero = set(&n3, &["0"]);
        let tags = cn.tags(&zero).unwrap();
        assert!(tags.k_maximal, "{{0}} has no proper k-ideal above it");
        assert!(!tags.maximal, "{{0}} sits below the proper ideal {{0,3}}");
    }

    #[test]
    fn generating_sets_are_recovered_greedily() {
        for ring in crate::corpus::corpus() {
            let c = Classifier::new(&ring).unwrap();
            for ideal in c.ideals() {
                let gens = c.finite_generating_set(ideal).unwrap();
                let mut gen_set = BitSet::empty(ring.order());
                for &g in &gens {
                    gen_set.insert(g);
                }
                assert_eq!(&generated(&ring, &gen_set), ideal);
            }
        }
    }
}
