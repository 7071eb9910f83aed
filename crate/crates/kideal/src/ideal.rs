//! Ideals of a finite semiring and the k-closure operator.
//!
//! An *ideal* is an additive submonoid closed under multiplication by
//! arbitrary elements.  A *k-ideal* (subtractive ideal) additionally
//! satisfies: `x ∈ I` and `x + y ∈ I` imply `y ∈ I`.  Without subtraction
//! the two notions genuinely differ — in the truncated naturals `N3`, the
//! set `{0, 2, 3}` is an ideal but `2 ∈ I` and `2 + 1 = 3 ∈ I` while
//! `1 ∉ I`.
//!
//! The *k-closure* of an ideal `I` is
//!
//! ```text
//! C_k(I) = { r ∈ R : r + x ∈ I for some x ∈ I }
//! ```
//!
//! and is the least k-ideal containing `I`.  All the derived products live
//! here too: sums, the k-product `C_k(⟨{xy : x ∈ I, y ∈ J}⟩)`, annihilators,
//! and ideal quotients `(I : J) = { r : rJ ⊆ I }`.
//!
//! Free functions operate on raw [`BitSet`] subsets and assume their
//! preconditions (debug-checked); the [`IdealSet`] wrapper enforces them
//! with errors.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// Carriers above this order are refused by [`enumerate_ideals`]; the full
/// subset scan would be pointless at desk scale beyond it.
pub const MAX_ENUMERATION_ORDER: usize = 20;

/// First reason a subset fails to be an ideal, in the fixed check order:
/// zero membership, then addition closure over pairs `x ≤ y` in
/// lexicographic order, then absorption over `(r, x)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealViolation {
    MissingZero,
    /// Members `x`, `y` whose sum escapes the set.
    NotAddClosed(usize, usize),
    /// Ring element `r` and member `x` with `r·x` outside the set.
    NotAbsorbing(usize, usize),
}

impl std::fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealViolation::MissingZero => write!(f, "zero is missing"),
            IdealViolation::NotAddClosed(x, y) => write!(f, "not closed under addition at ({x},{y})"),
            IdealViolation::NotAbsorbing(r, x) => write!(f, "not absorbing at ({r},{x})"),
        }
    }
}

/// Checks the ideal axioms, returning the first violation.
pub fn ideal_violation(ring: &FiniteSemiring, set: &BitSet) -> Option<IdealViolation> {
    debug_assert_eq!(set.universe(), ring.order());
    if !set.contains(ring.zero()) {
        return Some(IdealViolation::MissingZero);
    }
    for x in set.iter() {
        for y in set.iter() {
            if y < x {
                continue;
            }
            if !set.contains(ring.add(x, y)) {
                return Some(IdealViolation::NotAddClosed(x, y));
            }
        }
    }
    for r in 0..ring.order() {
        for x in set.iter() {
            if !set.contains(ring.mul(r, x)) {
                return Some(IdealViolation::NotAbsorbing(r, x));
            }
        }
    }
    None
}

pub fn is_ideal(ring: &FiniteSemiring, set: &BitSet) -> bool {
    ideal_violation(ring, set).is_none()
}

/// First subtractivity failure `(x, y)`: `x ∈ I`, `x + y ∈ I`, `y ∉ I`.
///
/// The scan runs over `x ∈ I` ascending, then `y` over the whole carrier
/// ascending.  Input should be an ideal; the result is meaningful for any
/// subset but the is-k-ideal reading requires ideality.
pub fn subtractive_violation(ring: &FiniteSemiring, set: &BitSet) -> Option<(usize, usize)> {
    debug_assert_eq!(set.universe(), ring.order());
    for x in set.iter() {
        for y in 0..ring.order() {
            if !set.contains(y) && set.contains(ring.add(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// True when the subset is an ideal with no subtractivity failure.
pub fn is_k_ideal(ring: &FiniteSemiring, set: &BitSet) -> bool {
    is_ideal(ring, set) && subtractive_violation(ring, set).is_none()
}

/// Least ideal containing the given generators.
pub fn generated(ring: &FiniteSemiring, gens: &BitSet) -> BitSet {
    debug_assert_eq!(gens.universe(), ring.order());
    let mut out = gens.clone();
    out.insert(ring.zero());
    loop {
        let mut next = out.clone();
        for x in out.iter() {
            for y in out.iter() {
                next.insert(ring.add(x, y));
            }
            for r in 0..ring.order() {
                next.insert(ring.mul(r, x));
            }
        }
        if next == out {
            return out;
        }
        out = next;
    }
}

/// k-closure of an ideal: `{ r : r + x ∈ I for some x ∈ I }`.
///
/// For an ideal input one application suffices and yields the least k-ideal
/// containing it.  Debug builds cross-check against the rule-based fixpoint
/// (`x ∈ J, x + y ∈ J ⟹ y ∈ J` iterated from `I`), which reaches the same
/// set.
pub fn k_closure_set(ring: &FiniteSemiring, ideal: &BitSet) -> BitSet {
    debug_assert_eq!(ideal.universe(), ring.order());
    debug_assert!(is_ideal(ring, ideal), "k-closure input must be an ideal");
    let mut out = BitSet::empty(ring.order());
    for r in 0..ring.order() {
        if ideal.iter().any(|x| ideal.contains(ring.add(r, x))) {
            out.insert(r);
        }
    }
    debug_assert_eq!(out, subtractive_rule_fixpoint(ring, ideal));
    debug_assert!(is_k_ideal(ring, &out));
    out
}

#[allow(dead_code)]
fn subtractive_rule_fixpoint(ring: &FiniteSemiring, start: &BitSet) -> BitSet {
    let mut out = start.clone();
    loop {
        let mut next = out.clone();
        for x in out.iter() {
            for y in 0..ring.order() {
                if out.contains(ring.add(x, y)) {
                    next.insert(y);
                }
            }
        }
        if next == out {
            return out;
        }
        out = next;
    }
}

/// All ideals of the semiring in ascending `(cardinality, mask)` order,
/// optionally restricted to k-ideals.
pub fn enumerate_ideals(ring: &FiniteSemiring, k_only: bool) -> Result<Vec<BitSet>> {
    let n = ring.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::CarrierTooLarge(n));
    }
    let mut out = Vec::new();
    // Every ideal contains 0 = index 0, so only odd masks can qualify.
    for mask in (1u64..1u64 << n).step_by(2) {
        let set = BitSet::from_indices(n, &(0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>());
        if is_ideal(ring, &set) && (!k_only || subtractive_violation(ring, &set).is_none()) {
            out.push(set);
        }
    }
    out.sort();
    Ok(out)
}

/// Elementwise sum `{ x + y : x ∈ a, y ∈ b }`; an ideal whenever both
/// arguments are, though not necessarily a k-ideal.
pub fn sum_ideals(ring: &FiniteSemiring, a: &BitSet, b: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Raw elementwise product set `{ xy : x ∈ a, y ∈ b }` — generally not an
/// ideal.
pub fn product_raw(ring: &FiniteSemiring, a: &BitSet, b: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.mul(x, y));
        }
    }
    out
}

/// Ordinary ideal product: the ideal generated by the elementwise products.
pub fn product_ideal(ring: &FiniteSemiring, a: &BitSet, b: &BitSet) -> BitSet {
    generated(ring, &product_raw(ring, a, b))
}

/// k-product of two k-ideals: `C_k(⟨{xy}⟩)`.  Always contained in `a ∩ b`.
pub fn k_product_set(ring: &FiniteSemiring, a: &BitSet, b: &BitSet) -> BitSet {
    debug_assert!(is_k_ideal(ring, a) && is_k_ideal(ring, b));
    k_closure_set(ring, &product_ideal(ring, a, b))
}

/// Annihilator `{ r : r·s = 0 for every s ∈ set }`; always a k-ideal.
pub fn annihilator(ring: &FiniteSemiring, set: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for r in 0..ring.order() {
        if set.iter().all(|s| ring.mul(r, s) == ring.zero()) {
            out.insert(r);
        }
    }
    out
}

/// Ideal quotient `(i : j) = { r : r·j ⊆ i }`; a k-ideal whenever `i` is.
pub fn ideal_quotient(ring: &FiniteSemiring, i: &BitSet, j: &BitSet) -> BitSet {
    let mut out = BitSet::empty(ring.order());
    for r in 0..ring.order() {
        if j.iter().all(|x| i.contains(ring.mul(r, x))) {
            out.insert(r);
        }
    }
    out
}

/// Principal k-ideal `C_k(⟨x⟩)`.
pub fn principal_k(ring: &FiniteSemiring, x: usize) -> BitSet {
    k_closure_set(ring, &generated(ring, &BitSet::singleton(ring.order(), x)))
}

/// A subset of a semiring's carrier, tracked together with its parent ring.
///
/// This is the error-checked entry point used by the command-line front end
/// and the guide examples; the free functions in this module are the
/// internal workhorses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSet {
    ring: FiniteSemiring,
    members: BitSet,
}

impl IdealSet {
    pub fn from_names(ring: &FiniteSemiring, names: &[&str]) -> Result<Self> {
        let mut members = BitSet::empty(ring.order());
        for name in names {
            let idx = ring
                .element_index(name)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown element name `{name}`")))?;
            members.insert(idx);
        }
        Ok(IdealSet {
            ring: ring.clone(),
            members,
        })
    }

    pub fn from_indices(ring: &FiniteSemiring, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= ring.order() {
                return Err(Error::InvalidParameter(format!(
                    "element index {i} outside carrier of order {}",
                    ring.order()
                )));
            }
        }
        Ok(IdealSet {
            ring: ring.clone(),
            members: BitSet::from_indices(ring.order(), indices),
        })
    }

    pub fn from_bitset(ring: &FiniteSemiring, members: BitSet) -> Result<Self> {
        if members.universe() != ring.order() {
            return Err(Error::ParentMismatch);
        }
        Ok(IdealSet {
            ring: ring.clone(),
            members,
        })
    }

    pub fn ring(&self) -> &FiniteSemiring {
        &self.ring
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn ideal_violation(&self) -> Option<IdealViolation> {
        ideal_violation(&self.ring, &self.members)
    }

    pub fn is_ideal(&self) -> bool {
        self.ideal_violation().is_none()
    }

    /// First subtractivity failure, or `None` for a k-ideal.
    ///
    /// Errors when the members do not even form an ideal.
    pub fn subtractive_violation(&self) -> Result<Option<(usize, usize)>> {
        if let Some(v) = self.ideal_violation() {
            return Err(Error::Precondition(format!("not an ideal: {v}")));
        }
        Ok(subtractive_violation(&self.ring, &self.members))
    }

    /// Least k-ideal containing this ideal.
    pub fn k_closure(&self) -> Result<IdealSet> {
        if let Some(v) = self.ideal_violation() {
            return Err(Error::Precondition(format!("not an ideal: {v}")));
        }
        Ok(IdealSet {
            ring: self.ring.clone(),
            members: k_closure_set(&self.ring, &self.members),
        })
    }

    pub fn names_string(&self) -> String {
        self.ring.set_to_string(&self.members)
    }
}
