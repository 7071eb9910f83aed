//! The theorem-verification suites: every law about k-closures, k-primes,
//! k-radicals, irreducible k-ideals, and ideal transfer, checked
//! exhaustively over the ideals of one finite semiring.
//!
//! Each law has a stable check id.  Asserted laws report `PASS` or `FAIL`
//! with a witness; observational records (strictness sightings, structure
//! summaries) report `WITNESS` and never fail the run.  Every id is
//! emitted on every input — a law with no applicable instances passes
//! vacuously — so reports from different semirings stay line-for-line
//! comparable.

use std::str::FromStr;

use crate::bitset::BitSet;
use crate::cep::{cep_verify, contraction, extension, ItemStatus};
use crate::classify::{Classifier, RadicalMode};
use crate::error::{Error, Result};
use crate::hom::enumerate_homomorphisms;
use crate::ideal::{
    annihilator, ideal_quotient, is_ideal, is_k_ideal, k_closure_set, k_product_set, product_ideal,
    product_raw, sum_ideals,
};
use crate::lattice::KIdealLattice;
use crate::report::{Report, Status};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Closure,
    Prime,
    Radical,
    Irreducible,
    Cep,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "closure" => Ok(Suite::Closure),
            "prime" => Ok(Suite::Prime),
            "radical" => Ok(Suite::Radical),
            "irreducible" => Ok(Suite::Irreducible),
            "cep" => Ok(Suite::Cep),
            other => Err(Error::InvalidParameter(format!("unknown suite `{other}`"))),
        }
    }
}

/// Run the requested suite and collect one record per check id.
pub fn verify_semiring(ring: &FiniteSemiring, suite: Suite) -> Result<Report> {
    let cls = Classifier::new(ring)?;
    let ctx = Ctx { ring, cls: &cls };
    let mut report = Report::new();
    if matches!(suite, Suite::All | Suite::Closure) {
        ctx.closure_suite(&mut report)?;
    }
    if matches!(suite, Suite::All | Suite::Prime) {
        ctx.prime_suite(&mut report);
    }
    if matches!(suite, Suite::All | Suite::Radical) {
        ctx.radical_suite(&mut report);
    }
    if matches!(suite, Suite::All | Suite::Irreducible) {
        ctx.irreducible_suite(&mut report)?;
    }
    if matches!(suite, Suite::All | Suite::Cep) {
        ctx.cep_suite(&mut report)?;
    }
    Ok(report)
}

struct Ctx<'a> {
    ring: &'a FiniteSemiring,
    cls: &'a Classifier,
}

impl<'a> Ctx<'a> {
    fn name(&self, s: &BitSet) -> String {
        self.ring.set_to_string(s)
    }

    fn ideals(&self) -> &[BitSet] {
        self.cls.ideals()
    }

    fn k_ideals(&self) -> &[BitSet] {
        self.cls.k_ideals()
    }

    fn proper_k_ideals(&self) -> impl Iterator<Item = &BitSet> {
        self.k_ideals().iter().filter(|i| self.cls.is_proper(i))
    }

    fn full(&self) -> BitSet {
        BitSet::full(self.ring.order())
    }

    fn closure(&self, s: &BitSet) -> BitSet {
        k_closure_set(self.ring, s)
    }

    /// All nonempty subsets of the carrier closed under multiplication, in
    /// ascending mask order.
    fn mult_closed_subsets(&self) -> Vec<BitSet> {
        let n = self.ring.order();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let set = BitSet::from_indices(n, &members);
            let closed = set
                .iter()
                .all(|x| set.iter().all(|y| set.contains(self.ring.mul(x, y))));
            if closed {
                out.push(set);
            }
        }
        out
    }

    // ----- closure suite --------------------------------------------------

    fn closure_suite(&self, report: &mut Report) -> Result<()> {
        report.assert_check("CLOSURE-LEAST", self.closure_least());
        let zero = BitSet::singleton(self.ring.order(), self.ring.zero());
        report.assert_check(
            "CLOSURE-ZERO",
            (self.closure(&zero) != zero).then(|| format!("closure={}", self.name(&self.closure(&zero)))),
        );
        report.assert_check(
            "CLOSURE-WHOLE",
            (self.closure(&self.full()) != self.full()).then(|| "closure of the whole ring shrank".into()),
        );
        report.assert_check("CLOSURE-IDEMPOTENT", self.first_ideal_violation(|i| {
            let c = self.closure(i);
            (self.closure(&c) != c).then(|| format!("I={}", self.name(i)))
        }));
        report.assert_check("CLOSURE-MONOTONE", self.first_pair_violation(|i, j| {
            (i.is_subset(j) && !self.closure(i).is_subset(&self.closure(j)))
                .then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.assert_check("CLOSURE-UNION", self.first_pair_violation(|i, j| {
            let lhs = self.closure(&sum_ideals(self.ring, i, j));
            let rhs = self.closure(i).union(&self.closure(j));
            (!rhs.is_subset(&lhs)).then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.push_record(
            "CLOSURE-UNION-STRICT",
            Status::Witness,
            self.first_pair_sighting(|i, j| {
                let lhs = self.closure(&sum_ideals(self.ring, i, j));
                let rhs = self.closure(i).union(&self.closure(j));
                (rhs.is_proper_subset(&lhs)).then(|| {
                    format!(
                        "I={} J={} closure={} union={}",
                        self.name(i), self.name(j), self.name(&lhs), self.name(&rhs),
                    )
                })
            }),
        );
        report.assert_check("CLOSURE-MEET", self.closure_meet());
        report.assert_check("CLOSURE-FIXED", self.first_ideal_violation(|i| {
            (is_k_ideal(self.ring, i) != (self.closure(i) == *i)).then(|| format!("I={}", self.name(i)))
        }));
        report.assert_check("CLOSURE-PRODUCT", self.first_pair_violation(|i, j| {
            let lhs = self.closure(&product_ideal(self.ring, i, j));
            let rhs = product_raw(self.ring, &self.closure(i), &self.closure(j));
            (!rhs.is_subset(&lhs)).then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.push_record(
            "CLOSURE-PRODUCT-STRICT",
            Status::Witness,
            self.first_pair_sighting(|i, j| {
                let lhs = self.closure(&product_ideal(self.ring, i, j));
                let rhs = product_raw(self.ring, &self.closure(i), &self.closure(j));
                rhs.is_proper_subset(&lhs).then(|| {
                    format!(
                        "I={} J={} closure={} product={}",
                        self.name(i), self.name(j), self.name(&lhs), self.name(&rhs),
                    )
                })
            }),
        );
        report.assert_check("KIDEAL-MEET", self.first_k_pair_violation(|i, j| {
            (!is_k_ideal(self.ring, &i.intersection(j)))
                .then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.assert_check("KPRODUCT-CAP", self.first_k_pair_violation(|i, j| {
            (!k_product_set(self.ring, i, j).is_subset(&i.intersection(j)))
                .then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.assert_check("ANN-KIDEAL", self.annihilators_are_k());
        report.assert_check("QUOT-KIDEAL", self.quotients_are_k());
        report.assert_check("QUOT-ASSOC", self.quotient_associativity());
        report.assert_check("QUOT-MEET", self.quotient_over_meets());
        report.assert_check("QUOT-SUM", self.quotient_over_sums());
        let flags = KIdealLattice::new(self.ring)?.flags();
        report.push_record(
            "LAT-MODULAR",
            if flags.modular { Status::Pass } else { Status::Witness },
            format!("modular={}", u8::from(flags.modular)),
        );
        report.assert_check("SUM-ELEMENTWISE", self.sum_is_join());
        Ok(())
    }

    fn closure_least(&self) -> Option<String> {
        for i in self.ideals() {
            let c = self.closure(i);
            if !i.is_subset(&c) || !is_k_ideal(self.ring, &c) {
                return Some(format!("I={} closure={}", self.name(i), self.name(&c)));
            }
            for k in self.k_ideals() {
                if i.is_subset(k) && !c.is_subset(k) {
                    return Some(format!(
                        "I={} closure={} escapes {}",
                        self.name(i), self.name(&c), self.name(k),
                    ));
                }
            }
        }
        None
    }

    fn closure_meet(&self) -> Option<String> {
        for i in self.ideals() {
            for j in self.ideals() {
                let meet = i.intersection(j);
                if self.closure(&meet) != self.closure(i).intersection(&self.closure(j)) {
                    return Some(format!("I={} J={}", self.name(i), self.name(j)));
                }
                for k in self.ideals() {
                    let triple = meet.intersection(k);
                    let rhs = self
                        .closure(i)
                        .intersection(&self.closure(j))
                        .intersection(&self.closure(k));
                    if self.closure(&triple) != rhs {
                        return Some(format!(
                            "I={} J={} K={}",
                            self.name(i), self.name(j), self.name(k),
                        ));
                    }
                }
            }
        }
        None
    }

    fn annihilators_are_k(&self) -> Option<String> {
        let n = self.ring.order();
        for mask in 1u64..(1u64 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let x = BitSet::from_indices(n, &members);
            let ann = annihilator(self.ring, &x);
            if !is_k_ideal(self.ring, &ann) {
                return Some(format!("X={} ann={}", self.name(&x), self.name(&ann)));
            }
        }
        None
    }

    fn quotients_are_k(&self) -> Option<String> {
        for i in self.k_ideals() {
            for j in self.ideals() {
                if !is_k_ideal(self.ring, &ideal_quotient(self.ring, i, j)) {
                    return Some(format!("I={} J={}", self.name(i), self.name(j)));
                }
            }
        }
        None
    }

    fn quotient_associativity(&self) -> Option<String> {
        for i in self.k_ideals() {
            for j in self.ideals() {
                for k in self.ideals() {
                    let a = ideal_quotient(self.ring, &ideal_quotient(self.ring, i, j), k);
                    let b = ideal_quotient(self.ring, i, &product_ideal(self.ring, j, k));
                    let c = ideal_quotient(self.ring, &ideal_quotient(self.ring, i, k), j);
                    if a != b || b != c {
                        return Some(format!(
                            "I={} J={} K={}",
                            self.name(i), self.name(j), self.name(k),
                        ));
                    }
                }
            }
        }
        None
    }

    fn quotient_over_meets(&self) -> Option<String> {
        for i1 in self.k_ideals() {
            for i2 in self.k_ideals() {
                for j in self.ideals() {
                    let pair = ideal_quotient(self.ring, &i1.intersection(i2), j);
                    let rhs = ideal_quotient(self.ring, i1, j)
                        .intersection(&ideal_quotient(self.ring, i2, j));
                    if pair != rhs {
                        return Some(format!(
                            "I1={} I2={} J={}",
                            self.name(i1), self.name(i2), self.name(j),
                        ));
                    }
                    for i3 in self.k_ideals() {
                        let triple = ideal_quotient(
                            self.ring,
                            &i1.intersection(i2).intersection(i3),
                            j,
                        );
                        if triple != rhs.intersection(&ideal_quotient(self.ring, i3, j)) {
                            return Some(format!(
                                "I1={} I2={} I3={} J={}",
                                self.name(i1), self.name(i2), self.name(i3), self.name(j),
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    fn quotient_over_sums(&self) -> Option<String> {
        for i in self.k_ideals() {
            for j1 in self.ideals() {
                for j2 in self.ideals() {
                    let pair = ideal_quotient(self.ring, i, &sum_ideals(self.ring, j1, j2));
                    let rhs = ideal_quotient(self.ring, i, j1)
                        .intersection(&ideal_quotient(self.ring, i, j2));
                    if pair != rhs {
                        return Some(format!(
                            "I={} J1={} J2={}",
                            self.name(i), self.name(j1), self.name(j2),
                        ));
                    }
                    for j3 in self.ideals() {
                        let sum3 = sum_ideals(self.ring, &sum_ideals(self.ring, j1, j2), j3);
                        let triple = ideal_quotient(self.ring, i, &sum3);
                        if triple != rhs.intersection(&ideal_quotient(self.ring, i, j3)) {
                            return Some(format!(
                                "I={} J1={} J2={} J3={}",
                                self.name(i), self.name(j1), self.name(j2), self.name(j3),
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    fn sum_is_join(&self) -> Option<String> {
        for i in self.ideals() {
            for j in self.ideals() {
                let s = sum_ideals(self.ring, i, j);
                if !is_ideal(self.ring, &s) || !i.is_subset(&s) || !j.is_subset(&s) {
                    return Some(format!("I={} J={}", self.name(i), self.name(j)));
                }
                for k in self.ideals() {
                    if i.is_subset(k) && j.is_subset(k) && !s.is_subset(k) {
                        return Some(format!(
                            "I={} J={} K={}",
                            self.name(i), self.name(j), self.name(k),
                        ));
                    }
                }
            }
        }
        None
    }

    // ----- prime suite ----------------------------------------------------

    fn prime_suite(&self, report: &mut Report) {
        report.assert_check("EXCH-PRIME", self.exchange(
            |i| self.cls.prime_among_k_ideals(i),
            |i| self.cls.prime_among_ideals(i),
            "k_prime", "prime",
        ));
        report.assert_check("EXCH-SEMIPRIME", self.exchange(
            |i| self.cls.semiprime_among_k_ideals(i),
            |i| self.cls.semiprime_among_ideals(i),
            "k_semiprime", "semiprime",
        ));
        report.assert_check("EXCH-MAXIMAL", self.exchange(
            |i| self.cls.maximal_among_k_ideals(i),
            |i| self.cls.maximal_among_ideals(i),
            "k_maximal", "maximal",
        ));
        report.assert_check("KMAX-EXISTS", self.kmax_exists());
        report.assert_check("KMAX-PRIME", self.first_k_violation(|m| {
            if !self.cls.maximal_among_k_ideals(m) {
                return None;
            }
            match self.cls.is_k_prime(m) {
                Ok(true) => None,
                Ok(false) => Some(format!("M={} is not k-prime", self.name(m))),
                Err(e) => Some(format!("M={}: {e}", self.name(m))),
            }
        }));
        report.assert_check("PRIME-ELEMENTWISE", self.first_k_violation(|p| {
            if !self.cls.is_proper(p) {
                return None;
            }
            let e = self.cls.prime_elementwise(p);
            let d = self.cls.prime_among_k_ideals(p);
            (e != d).then(|| format!("P={} elementwise={e} definitional={d}", self.name(p)))
        }));
        report.assert_check("PRIME-COMPLEMENT", self.first_k_violation(|p| {
            if !self.cls.is_proper(p) {
                return None;
            }
            let complement = p.complement();
            let closed = !complement.is_empty()
                && complement
                    .iter()
                    .all(|x| complement.iter().all(|y| complement.contains(self.ring.mul(x, y))));
            (self.cls.prime_among_k_ideals(p) != closed)
                .then(|| format!("P={} complement_closed={closed}", self.name(p)))
        }));
        report.assert_check("PRIME-MAXDISJ", self.maxdisj_results_are_prime());
        report.assert_check("PRIME-AVOID", self.prime_avoidance_holds());
        report.assert_check("PRIME-SQCHAIN", self.square_chains_avoid_semiprimes());
        report.assert_check("PRIME-FINGEN", self.first_ideal_violation(|i| {
            let gens = match self.cls.finite_generating_set(i) {
                Ok(g) => g,
                Err(e) => return Some(format!("I={}: {e}", self.name(i))),
            };
            let set = BitSet::from_indices(self.ring.order(), &gens);
            (crate::ideal::generated(self.ring, &set) != *i)
                .then(|| format!("I={} gens={:?}", self.name(i), gens))
        }));
    }

    fn exchange(
        &self,
        k_version: impl Fn(&BitSet) -> bool,
        plain_version: impl Fn(&BitSet) -> bool,
        k_label: &str,
        plain_label: &str,
    ) -> Option<String> {
        for i in self.ideals() {
            let k_flag = is_k_ideal(self.ring, i);
            let lhs = k_flag && k_version(i);
            let rhs = k_flag && plain_version(i);
            if lhs != rhs {
                return Some(format!(
                    "I={} {k_label}={} {plain_label}={} k_ideal={}",
                    self.name(i),
                    u8::from(lhs),
                    u8::from(plain_version(i)),
                    u8::from(k_flag),
                ));
            }
        }
        None
    }

    fn kmax_exists(&self) -> Option<String> {
        for i in self.proper_k_ideals() {
            let covered = self
                .k_ideals()
                .iter()
                .any(|m| self.cls.maximal_among_k_ideals(m) && i.is_subset(m));
            if !covered {
                return Some(format!("I={} has no k-maximal ideal above it", self.name(i)));
            }
        }
        None
    }

    fn maxdisj_results_are_prime(&self) -> Option<String> {
        let closed_sets = self.mult_closed_subsets();
        for i in self.k_ideals() {
            for s in &closed_sets {
                if !i.intersection(s).is_empty() {
                    continue;
                }
                let m = match self.cls.maximal_disjoint_ideal(i, s) {
                    Ok(m) => m,
                    Err(e) => return Some(format!("I={} S={}: {e}", self.name(i), self.name(s))),
                };
                match self.cls.is_k_prime(&m) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Some(format!(
                            "I={} S={} maximal={} is not k-prime",
                            self.name(i), self.name(s), self.name(&m),
                        ))
                    }
                    Err(e) => return Some(format!("I={} S={}: {e}", self.name(i), self.name(s))),
                }
            }
        }
        None
    }

    fn prime_avoidance_holds(&self) -> Option<String> {
        let primes: Vec<&BitSet> = self
            .k_ideals()
            .iter()
            .filter(|p| self.cls.is_proper(p) && self.cls.prime_elementwise(p))
            .collect();
        let mut lists: Vec<Vec<BitSet>> = Vec::new();
        for p in self.k_ideals() {
            lists.push(vec![p.clone()]);
            for q in self.k_ideals() {
                lists.push(vec![p.clone(), q.clone()]);
                for r in &primes {
                    lists.push(vec![p.clone(), q.clone(), (*r).clone()]);
                }
            }
        }
        for i in self.ideals() {
            for ps in &lists {
                if ps.iter().any(|p| i.is_subset(p)) {
                    continue;
                }
                let witness = match self.cls.prime_avoidance_witness(i, ps) {
                    Ok(w) => w,
                    Err(e) => return Some(format!("I={}: {e}", self.name(i))),
                };
                match witness {
                    Some(x) if i.contains(x) && !ps.iter().any(|p| p.contains(x)) => {}
                    Some(x) => {
                        return Some(format!(
                            "I={} produced an invalid witness {}",
                            self.name(i),
                            self.ring.element_name(x),
                        ))
                    }
                    None => {
                        let names: Vec<String> = ps.iter().map(|p| self.name(p)).collect();
                        return Some(format!(
                            "I={} lies in no listed ideal yet has no witness against [{}]",
                            self.name(i),
                            names.join(","),
                        ));
                    }
                }
            }
        }
        None
    }

    fn square_chains_avoid_semiprimes(&self) -> Option<String> {
        for q in self.proper_k_ideals() {
            if !self.cls.semiprime_among_k_ideals(q) {
                continue;
            }
            for x in 0..self.ring.order() {
                if q.contains(x) {
                    continue;
                }
                let chain = self.cls.square_chain(x);
                if !chain.intersection(q).is_empty() {
                    return Some(format!(
                        "Q={} x={} chain={}",
                        self.name(q),
                        self.ring.element_name(x),
                        self.name(&chain),
                    ));
                }
            }
        }
        None
    }

    // ----- radical suite --------------------------------------------------

    fn radical_suite(&self, report: &mut Report) {
        let rad = |i: &BitSet| {
            self.cls
                .k_radical(i, RadicalMode::Intersection)
                .expect("radical of a k-ideal")
        };
        report.assert_check("RAD-SUPSET", self.first_k_violation(|i| {
            let r = rad(i);
            (!i.is_subset(&r) || !is_k_ideal(self.ring, &r))
                .then(|| format!("I={} radical={}", self.name(i), self.name(&r)))
        }));
        report.assert_check("RAD-IDEMPOTENT", self.first_k_violation(|i| {
            let r = rad(i);
            (rad(&r) != r).then(|| format!("I={}", self.name(i)))
        }));
        report.assert_check("RAD-PRODMEET", self.first_k_pair_violation(|i, j| {
            let a = rad(&k_product_set(self.ring, i, j));
            let b = rad(&i.intersection(j));
            let c = rad(i).intersection(&rad(j));
            (a != b || b != c).then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.assert_check("RAD-WHOLE", self.first_k_violation(|i| {
            ((rad(i) == self.full()) != (*i == self.full())).then(|| format!("I={}", self.name(i)))
        }));
        report.assert_check("RAD-MODES", self.first_k_violation(|i| {
            let powers = self
                .cls
                .k_radical(i, RadicalMode::Powers)
                .expect("radical of a k-ideal");
            (rad(i) != powers).then(|| {
                format!(
                    "I={} intersection={} powers={}",
                    self.name(i), self.name(&rad(i)), self.name(&powers),
                )
            })
        }));
        report.assert_check("RAD-TSET", self.radical_matches_multiplicative_sets());
        report.assert_check("RAD-EQUIV", self.first_k_violation(|i| {
            if !self.cls.is_proper(i) {
                return None;
            }
            let semiprime = self.cls.semiprime_among_k_ideals(i);
            let meet_of_primes = {
                let mut out = self.full();
                for p in self.k_ideals() {
                    if i.is_subset(p) && self.cls.prime_elementwise(p) {
                        out = out.intersection(p);
                    }
                }
                out == *i
            };
            let fixed = rad(i) == *i;
            (semiprime != meet_of_primes || meet_of_primes != fixed).then(|| {
                format!(
                    "I={} semiprime={semiprime} meet_of_primes={meet_of_primes} radical_fixed={fixed}",
                    self.name(i),
                )
            })
        }));
        report.assert_check("RAD-LEAST", self.first_k_violation(|i| {
            if !self.cls.is_proper(i) {
                return None;
            }
            let r = rad(i);
            if !self.cls.semiprime_among_k_ideals(&r) {
                return Some(format!("I={} radical={} is not k-semiprime", self.name(i), self.name(&r)));
            }
            for s in self.proper_k_ideals() {
                if i.is_subset(s) && self.cls.semiprime_among_k_ideals(s) && !r.is_subset(s) {
                    return Some(format!(
                        "I={} radical={} escapes {}",
                        self.name(i), self.name(&r), self.name(s),
                    ));
                }
            }
            None
        }));
        let spectrum = self.cls.spectrum();
        report.assert_check(
            "SPEC-NONEMPTY",
            (self.ring.order() >= 2 && spectrum.primes.is_empty())
                .then(|| "no k-prime ideal".to_string()),
        );
        report.assert_check("SPEC-COMPONENTS", self.spectrum_components());
        report.assert_check("SPEC-V-MEET", self.first_k_pair_violation(|i, j| {
            let join = self.cls.k_join(i, j);
            let lhs = self.vanishing(&spectrum.primes, &join);
            let rhs = self
                .vanishing(&spectrum.primes, i)
                .intersection(&self.vanishing(&spectrum.primes, j));
            (lhs != rhs).then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
        report.assert_check("SPEC-V-JOIN", self.first_k_pair_violation(|i, j| {
            let lhs = self.vanishing(&spectrum.primes, &i.intersection(j));
            let rhs = self
                .vanishing(&spectrum.primes, i)
                .union(&self.vanishing(&spectrum.primes, j));
            (lhs != rhs).then(|| format!("I={} J={}", self.name(i), self.name(j)))
        }));
    }

    fn vanishing(&self, primes: &[BitSet], i: &BitSet) -> BitSet {
        let above: Vec<usize> = primes
            .iter()
            .enumerate()
            .filter(|(_, p)| i.is_subset(p))
            .map(|(idx, _)| idx)
            .collect();
        BitSet::from_indices(primes.len(), &above)
    }

    fn radical_matches_multiplicative_sets(&self) -> Option<String> {
        let closed_sets = self.mult_closed_subsets();
        for i in self.k_ideals() {
            let r = self
                .cls
                .k_radical(i, RadicalMode::Powers)
                .expect("radical of a k-ideal");
            for x in 0..self.ring.order() {
                let every_set_meets = closed_sets
                    .iter()
                    .filter(|s| s.contains(x))
                    .all(|s| !s.intersection(i).is_empty());
                if r.contains(x) != every_set_meets {
                    return Some(format!(
                        "I={} x={} radical={} multiplicative-set test={}",
                        self.name(i),
                        self.ring.element_name(x),
                        r.contains(x),
                        every_set_meets,
                    ));
                }
            }
        }
        None
    }

    fn spectrum_components(&self) -> Option<String> {
        let spectrum = self.cls.spectrum();
        let mut closed: Vec<BitSet> = spectrum.closed_sets.clone();
        closed.sort();
        closed.dedup();
        let irreducible: Vec<&BitSet> = closed
            .iter()
            .filter(|c| {
                !c.is_empty()
                    && !closed.iter().any(|a| {
                        closed.iter().any(|b| {
                            a.is_proper_subset(c) && b.is_proper_subset(c) && a.union(b) == **c
                        })
                    })
            })
            .collect();
        let mut expected: Vec<BitSet> = irreducible
            .iter()
            .filter(|c| !irreducible.iter().any(|d| c.is_proper_subset(d)))
            .map(|c| (*c).clone())
            .collect();
        expected.sort();
        if spectrum.components != expected {
            return Some(format!(
                "components={:?} maximal irreducible closed sets={:?}",
                spectrum.components, expected
            ));
        }
        if spectrum.components.len() != spectrum.minimal_primes.len() {
            return Some(format!(
                "{} components for {} minimal primes",
                spectrum.components.len(),
                spectrum.minimal_primes.len()
            ));
        }
        None
    }

    // ----- irreducible suite ----------------------------------------------

    fn irreducible_suite(&self, report: &mut Report) -> Result<()> {
        report.assert_check("EXCH-IRR", self.exchange(
            |i| self.cls.irreducible_among_k_ideals(i),
            |i| self.cls.irreducible_among_ideals(i),
            "k_irreducible", "irreducible",
        ));
        report.assert_check("EXCH-STRIRR", self.exchange(
            |i| self.cls.strongly_irreducible_among_k_ideals(i),
            |i| self.cls.strongly_irreducible_among_ideals(i),
            "k_strongly_irreducible", "strongly_irreducible",
        ));
        report.assert_check("IRR-ELEMENTWISE", self.first_k_violation(|i| {
            let d = self.cls.strongly_irreducible_among_k_ideals(i);
            let e = self.cls.strongly_irreducible_elementwise(i);
            (d != e).then(|| format!("I={} definitional={d} elementwise={e}", self.name(i)))
        }));
        report.assert_check("IRR-SEPARATOR", self.separators_are_irreducible());
        report.assert_check("IRR-REPRESENT", self.first_k_violation(|i| {
            if !self.cls.is_proper(i) {
                return None;
            }
            let mut meet = self.full();
            for j in self.k_ideals() {
                if i.is_subset(j) && self.cls.irreducible_among_k_ideals(j) {
                    meet = meet.intersection(j);
                }
            }
            (meet != *i).then(|| format!("I={} meet={}", self.name(i), self.name(&meet)))
        }));
        report.assert_check("IRR-DECOMP", self.decompositions_are_sound());
        report.assert_check("IRR-MINSTRIRR", self.first_k_violation(|i| {
            if !self.cls.is_proper(i) {
                return None;
            }
            let m = match self.cls.minimal_strongly_irreducible_above(i) {
                Ok(m) => m,
                Err(e) => return Some(format!("I={}: {e}", self.name(i))),
            };
            if !i.is_subset(&m) || !self.cls.strongly_irreducible_among_k_ideals(&m) {
                return Some(format!("I={} result={}", self.name(i), self.name(&m)));
            }
            for k in self.k_ideals() {
                if i.is_subset(k)
                    && k.is_proper_subset(&m)
                    && self.cls.strongly_irreducible_among_k_ideals(k)
                {
                    return Some(format!(
                        "I={} result={} is not minimal: {}",
                        self.name(i), self.name(&m), self.name(k),
                    ));
                }
            }
            None
        }));
        report.assert_check("IRR-PRIMEFACTOR", self.first_k_violation(|i| {
            if !self.cls.is_proper(i) {
                return None;
            }
            let prime = self.cls.prime_among_k_ideals(i);
            let factored = self.cls.semiprime_among_k_ideals(i)
                && self.cls.strongly_irreducible_among_k_ideals(i);
            (prime != factored).then(|| format!("I={} prime={prime} factored={factored}", self.name(i)))
        }));
        let flags = self.cls.structure_flags()?;
        report.assert_check("IRR-CHAIN", {
            let all_strongly = self
                .k_ideals()
                .iter()
                .all(|i| self.cls.strongly_irreducible_among_k_ideals(i));
            (flags.k_chain != all_strongly).then(|| {
                format!("k_chain={} all_strongly_irreducible={all_strongly}", flags.k_chain)
            })
        });
        report.assert_check("IRR-ARITH", {
            if flags.arithmetic {
                self.first_k_violation(|i| {
                    (self.cls.irreducible_among_k_ideals(i)
                        && !self.cls.strongly_irreducible_among_k_ideals(i))
                    .then(|| format!("I={} is irreducible but not strongly so", self.name(i)))
                })
            } else {
                None
            }
        });
        let coincide = self.k_ideals().iter().all(|i| {
            self.cls.irreducible_among_k_ideals(i) == self.cls.strongly_irreducible_among_k_ideals(i)
        });
        report.push_record(
            "IRR-ARITH-INFO",
            Status::Witness,
            format!(
                "kdistributive={} idistributive={} coincide={}",
                u8::from(flags.arithmetic),
                u8::from(self.cls.all_ideal_distributive()?),
                u8::from(coincide),
            ),
        );
        Ok(())
    }

    fn separators_are_irreducible(&self) -> Option<String> {
        for i in self.proper_k_ideals() {
            for x in 0..self.ring.order() {
                if x == self.ring.zero() || i.contains(x) {
                    continue;
                }
                let sep = match self.cls.separator_ideal(i, x) {
                    Ok(s) => s,
                    Err(e) => {
                        return Some(format!("I={} x={}: {e}", self.name(i), self.ring.element_name(x)))
                    }
                };
                if !i.is_subset(&sep) || sep.contains(x) || !self.cls.irreducible_among_k_ideals(&sep)
                {
                    return Some(format!(
                        "I={} x={} separator={}",
                        self.name(i), self.ring.element_name(x), self.name(&sep),
                    ));
                }
                for j in self.k_ideals() {
                    if sep.is_proper_subset(j) && i.is_subset(j) && !j.contains(x) {
                        return Some(format!(
                            "I={} x={} separator={} is not maximal: {}",
                            self.name(i), self.ring.element_name(x), self.name(&sep), self.name(j),
                        ));
                    }
                }
            }
        }
        None
    }

    fn decompositions_are_sound(&self) -> Option<String> {
        for i in self.proper_k_ideals() {
            let factors = match self.cls.k_irreducible_decomposition(i) {
                Ok(f) => f,
                Err(e) => return Some(format!("I={}: {e}", self.name(i))),
            };
            let meet = factors
                .iter()
                .fold(self.full(), |acc, f| acc.intersection(f));
            if meet != *i || factors.is_empty() {
                return Some(format!("I={} factors do not intersect to it", self.name(i)));
            }
            for f in &factors {
                if !self.cls.irreducible_among_k_ideals(f) {
                    return Some(format!(
                        "I={} factor={} is reducible",
                        self.name(i), self.name(f),
                    ));
                }
            }
            if factors.len() > 1 {
                for idx in 0..factors.len() {
                    let rest = factors
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != idx)
                        .fold(self.full(), |acc, (_, f)| acc.intersection(f));
                    if rest.is_subset(&factors[idx]) {
                        return Some(format!(
                            "I={} factor={} is redundant",
                            self.name(i), self.name(&factors[idx]),
                        ));
                    }
                }
            }
        }
        None
    }

    // ----- transfer suite -------------------------------------------------

    fn cep_suite(&self, report: &mut Report) -> Result<()> {
        let endos = enumerate_homomorphisms(self.ring, self.ring);
        let asserted = [
            ("1", "CEP-CONTRACT"),
            ("2", "CEP-KERNEL"),
            ("3", "CEP-EXTEND"),
            ("4a", "CEP-GALOIS-A"),
            ("4b", "CEP-GALOIS-B"),
            ("4c", "CEP-GALOIS-C"),
            ("4d", "CEP-GALOIS-D"),
            ("5", "CEP-BIJECTION"),
            ("6a", "CEP-EXT-MEET"),
            ("6b", "CEP-EXT-PROD"),
            ("6c", "CEP-EXT-QUOT"),
            ("6d", "CEP-EXT-RAD"),
            ("7a", "CEP-CON-MEET"),
            ("7b", "CEP-CON-PROD"),
            ("7c", "CEP-CON-QUOT"),
            ("8", "CEP-CON-RAD"),
        ];
        let probes = [
            ("L7a", "CEP-LITERAL-MEET"),
            ("L7b", "CEP-LITERAL-PROD"),
            ("L7c", "CEP-LITERAL-QUOT"),
            ("L7d", "CEP-LITERAL-RAD"),
        ];
        let mut failures: Vec<Option<String>> = vec![None; asserted.len()];
        let mut strict_6a: Option<String> = None;
        let mut probe_strict: Vec<Option<String>> = vec![None; probes.len()];
        let mut probe_fail: Vec<Option<String>> = vec![None; probes.len()];
        let mut monotone: Option<String> = None;
        let name = self.ring.name();
        for (idx, hom) in endos.iter().enumerate() {
            let label = format!("{name}->{name}#{idx}");
            let cep = cep_verify(hom)?;
            for line in cep.render_lines(&label) {
                report.push_detail(line);
            }
            for (pos, (tag, _)) in asserted.iter().enumerate() {
                let record = cep.item(tag);
                if record.status == ItemStatus::Fail && failures[pos].is_none() {
                    failures[pos] = Some(format!(
                        "{label} {}",
                        record.witness.clone().unwrap_or_default()
                    ));
                }
            }
            let meet = cep.item("6a");
            if meet.status == ItemStatus::Strict && strict_6a.is_none() {
                strict_6a = Some(format!("{label} {}", meet.witness.clone().unwrap_or_default()));
            }
            for (pos, (tag, _)) in probes.iter().enumerate() {
                let record = cep.item(tag);
                match record.status {
                    ItemStatus::Fail if probe_fail[pos].is_none() => {
                        probe_fail[pos] = Some(format!(
                            "{label} {}",
                            record.witness.clone().unwrap_or_default()
                        ));
                    }
                    ItemStatus::Strict if probe_strict[pos].is_none() => {
                        probe_strict[pos] = Some(format!(
                            "{label} {}",
                            record.witness.clone().unwrap_or_default()
                        ));
                    }
                    _ => {}
                }
            }
            if monotone.is_none() {
                monotone = self.transfer_monotone(hom, &label);
            }
        }
        for (pos, (_, id)) in asserted.iter().enumerate() {
            report.assert_check(*id, failures[pos].clone());
        }
        report.push_record(
            "CEP-EXT-MEET-STRICT",
            Status::Witness,
            strict_6a.unwrap_or_else(|| "absent".into()),
        );
        report.assert_check("CEP-MONOTONE", monotone);
        for (pos, (_, id)) in probes.iter().enumerate() {
            let payload = if let Some(f) = &probe_fail[pos] {
                format!("fail {f}")
            } else if let Some(s) = &probe_strict[pos] {
                format!("strict {s}")
            } else {
                "equal".into()
            };
            report.push_record(*id, Status::Witness, payload);
        }
        Ok(())
    }

    fn transfer_monotone(&self, hom: &crate::hom::Homomorphism, label: &str) -> Option<String> {
        for i in self.k_ideals() {
            for j in self.k_ideals() {
                if !i.is_subset(j) {
                    continue;
                }
                let (ei, ej) = match (extension(hom, i), extension(hom, j)) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => return Some(format!("{label} extension failed")),
                };
                if !ei.is_subset(&ej) {
                    return Some(format!(
                        "{label} extension not monotone at I={} J={}",
                        self.name(i), self.name(j),
                    ));
                }
                let (ci, cj) = match (contraction(hom, i), contraction(hom, j)) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => return Some(format!("{label} contraction failed")),
                };
                if !ci.is_subset(&cj) {
                    return Some(format!(
                        "{label} contraction not monotone at I={} J={}",
                        self.name(i), self.name(j),
                    ));
                }
            }
        }
        None
    }

    // ----- iteration helpers ----------------------------------------------

    fn first_ideal_violation(&self, f: impl Fn(&BitSet) -> Option<String>) -> Option<String> {
        self.ideals().iter().find_map(|i| f(i))
    }

    fn first_k_violation(&self, f: impl Fn(&BitSet) -> Option<String>) -> Option<String> {
        self.k_ideals().iter().find_map(|i| f(i))
    }

    fn first_pair_violation(
        &self,
        f: impl Fn(&BitSet, &BitSet) -> Option<String>,
    ) -> Option<String> {
        for i in self.ideals() {
            for j in self.ideals() {
                if let Some(w) = f(i, j) {
                    return Some(w);
                }
            }
        }
        None
    }

    fn first_k_pair_violation(
        &self,
        f: impl Fn(&BitSet, &BitSet) -> Option<String>,
    ) -> Option<String> {
        for i in self.k_ideals() {
            for j in self.k_ideals() {
                if let Some(w) = f(i, j) {
                    return Some(w);
                }
            }
        }
        None
    }

    fn first_pair_sighting(&self, f: impl Fn(&BitSet, &BitSet) -> Option<String>) -> String {
        self.first_pair_violation(f).unwrap_or_else(|| "absent".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{by_name, corpus};
    use crate::report::OutputFormat;

    fn ids(report: &Report) -> Vec<String> {
        let mut out: Vec<String> = report.records().iter().map(|r| r.id.clone()).collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn the_full_catalog_is_emitted_on_every_corpus_member() {
        let mut expected: Vec<&str> = vec![
            "CLOSURE-LEAST", "CLOSURE-ZERO", "CLOSURE-WHOLE", "CLOSURE-IDEMPOTENT",
            "CLOSURE-MONOTONE", "CLOSURE-UNION", "CLOSURE-UNION-STRICT", "CLOSURE-MEET",
            "CLOSURE-FIXED", "CLOSURE-PRODUCT", "CLOSURE-PRODUCT-STRICT", "KIDEAL-MEET",
            "KPRODUCT-CAP", "ANN-KIDEAL", "QUOT-KIDEAL", "QUOT-ASSOC", "QUOT-MEET", "QUOT-SUM",
            "LAT-MODULAR", "SUM-ELEMENTWISE",
            "EXCH-PRIME", "EXCH-SEMIPRIME", "EXCH-MAXIMAL", "KMAX-EXISTS", "KMAX-PRIME",
            "PRIME-ELEMENTWISE", "PRIME-COMPLEMENT", "PRIME-MAXDISJ", "PRIME-AVOID",
            "PRIME-SQCHAIN", "PRIME-FINGEN",
            "RAD-SUPSET", "RAD-IDEMPOTENT", "RAD-PRODMEET", "RAD-WHOLE", "RAD-MODES", "RAD-TSET",
            "RAD-EQUIV", "RAD-LEAST", "SPEC-NONEMPTY", "SPEC-COMPONENTS", "SPEC-V-MEET",
            "SPEC-V-JOIN",
            "EXCH-IRR", "EXCH-STRIRR", "IRR-ELEMENTWISE", "IRR-SEPARATOR", "IRR-REPRESENT",
            "IRR-DECOMP", "IRR-MINSTRIRR", "IRR-PRIMEFACTOR", "IRR-CHAIN", "IRR-ARITH",
            "IRR-ARITH-INFO",
            "CEP-CONTRACT", "CEP-KERNEL", "CEP-EXTEND", "CEP-GALOIS-A", "CEP-GALOIS-B",
            "CEP-GALOIS-C", "CEP-GALOIS-D", "CEP-BIJECTION", "CEP-EXT-MEET",
            "CEP-EXT-MEET-STRICT", "CEP-EXT-PROD", "CEP-EXT-QUOT", "CEP-EXT-RAD", "CEP-CON-MEET",
            "CEP-CON-PROD", "CEP-CON-QUOT", "CEP-CON-RAD", "CEP-MONOTONE", "CEP-LITERAL-MEET",
            "CEP-LITERAL-PROD", "CEP-LITERAL-QUOT", "CEP-LITERAL-RAD",
        ];
        expected.sort();
        for ring in corpus() {
            let report = verify_semiring(&ring, Suite::All).unwrap();
            assert_eq!(ids(&report), expected, "{}", ring.name());
        }
    }

    #[test]
    fn z4_passes_every_suite() {
        let z4 = by_name("Z4").unwrap();
        let report = verify_semiring(&z4, Suite::All).unwrap();
        assert!(!report.has_failures(), "{}", report.render(OutputFormat::Text));
    }

    #[test]
    fn boolean_passes_every_suite() {
        let b = by_name("B").unwrap();
        let report = verify_semiring(&b, Suite::All).unwrap();
        assert!(!report.has_failures(), "{}", report.render(OutputFormat::Text));
    }

    #[test]
    fn truncated_naturals_refute_the_maximality_exchange() {
        let n3 = by_name("N3").unwrap();
        let report = verify_semiring(&n3, Suite::Prime).unwrap();
        let failing: Vec<&str> = report
            .records()
            .iter()
            .filter(|r| r.status == Status::Fail)
            .map(|r| r.id.as_str())
            .collect();
        assert_eq!(failing, vec!["EXCH-MAXIMAL"]);
        let record = report
            .records()
            .iter()
            .find(|r| r.id == "EXCH-MAXIMAL")
            .unwrap();
        assert!(record.payload.contains("I={0}"), "{}", record.payload);
        assert!(record.payload.contains("k_maximal=1"), "{}", record.payload);
        assert!(record.payload.contains("maximal=0"), "{}", record.payload);
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("closure".parse::<Suite>().unwrap(), Suite::Closure);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let c3 = by_name("C3").unwrap();
        let a = verify_semiring(&c3, Suite::All).unwrap().render(OutputFormat::Text);
        let b = verify_semiring(&c3, Suite::All).unwrap().render(OutputFormat::Text);
        assert_eq!(a, b);
    }

    #[test]
    fn trivial_semiring_passes_vacuously() {
        let trivial = by_name("trivial").unwrap();
        let report = verify_semiring(&trivial, Suite::All).unwrap();
        assert!(!report.has_failures(), "{}", report.render(OutputFormat::Text));
    }

    #[test]
    fn cep_suite_renders_detail_lines() {
        let z4 = by_name("Z4").unwrap();
        let report = verify_semiring(&z4, Suite::Cep).unwrap();
        assert!(!report.details().is_empty());
        assert!(report.details()[0].starts_with("CEP Z4->Z4#0 ITEM 1 "));
        assert!(!report.has_failures());
    }
}
