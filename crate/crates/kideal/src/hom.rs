//! Semiring homomorphisms.
//!
//! A homomorphism `φ : R → R'` preserves both operations and both constants:
//! `φ(x+y) = φ(x)+φ(y)`, `φ(xy) = φ(x)φ(y)`, `φ(0) = 0`, `φ(1) = 1`.
//! Maps are stored as index vectors over the source carrier.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// First reason a candidate map fails, in the fixed check order:
/// constants first, then each unordered pair `(x, y)` with `x ≤ y` in
/// lexicographic order, addition before multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomViolation {
    Zero,
    One,
    Add(usize, usize),
    Mul(usize, usize),
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomViolation::Zero => write!(f, "zero not preserved"),
            HomViolation::One => write!(f, "one not preserved"),
            HomViolation::Add(x, y) => write!(f, "addition not preserved at ({x},{y})"),
            HomViolation::Mul(x, y) => write!(f, "multiplication not preserved at ({x},{y})"),
        }
    }
}

/// Checks the four preservation conditions, returning the first violation.
///
/// The map must have `source.order()` entries, all below `target.order()`;
/// anything else is a structural error rather than a violation.
pub fn hom_violation(
    source: &FiniteSemiring,
    target: &FiniteSemiring,
    map: &[usize],
) -> Result<Option<HomViolation>> {
    if map.len() != source.order() {
        return Err(Error::Structural(format!(
            "map has {} entries, expected {}",
            map.len(),
            source.order()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= target.order()) {
        return Err(Error::Structural(format!(
            "map entry {bad} outside target carrier of order {}",
            target.order()
        )));
    }
    if map[source.zero()] != target.zero() {
        return Ok(Some(HomViolation::Zero));
    }
    if map[source.one()] != target.one() {
        return Ok(Some(HomViolation::One));
    }
    for x in 0..source.order() {
        for y in x..source.order() {
            if map[source.add(x, y)] != target.add(map[x], map[y]) {
                return Ok(Some(HomViolation::Add(x, y)));
            }
            if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                return Ok(Some(HomViolation::Mul(x, y)));
            }
        }
    }
    Ok(None)
}

/// A verified homomorphism between two finite semirings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: FiniteSemiring,
    target: FiniteSemiring,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Wraps a map after checking it really is a homomorphism.
    pub fn new(source: FiniteSemiring, target: FiniteSemiring, map: Vec<usize>) -> Result<Self> {
        match hom_violation(&source, &target, &map)? {
            None => Ok(Homomorphism { source, target, map }),
            Some(v) => Err(Error::Precondition(format!("not a homomorphism: {v}"))),
        }
    }

    pub fn identity(ring: &FiniteSemiring) -> Self {
        Homomorphism {
            source: ring.clone(),
            target: ring.clone(),
            map: (0..ring.order()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteSemiring {
        &self.source
    }

    pub fn target(&self) -> &FiniteSemiring {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.iter().all(|&h| h)
    }

    /// Direct image `φ(S)` as a subset of the target carrier.
    pub fn image_of(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.target.order());
        for x in set.iter() {
            out.insert(self.map[x]);
        }
        out
    }

    /// Preimage `φ⁻¹(S)` as a subset of the source carrier.
    pub fn preimage_of(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.source.order());
        for x in 0..self.source.order() {
            if set.contains(self.map[x]) {
                out.insert(x);
            }
        }
        out
    }

    /// Composition `self ∘ first`, applying `first` and then `self`.
    pub fn compose(&self, first: &Homomorphism) -> Result<Homomorphism> {
        if first.target != self.source {
            return Err(Error::ParentMismatch);
        }
        let map = first.map.iter().map(|&x| self.map[x]).collect();
        Ok(Homomorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            map,
        })
    }

    /// Renders the map as `a->x b->y …` over element names.
    pub fn describe(&self) -> String {
        let mut parts = Vec::with_capacity(self.map.len());
        for (x, &v) in self.map.iter().enumerate() {
            parts.push(format!(
                "{}->{}",
                self.source.element_name(x),
                self.target.element_name(v)
            ));
        }
        parts.join(" ")
    }
}

/// All homomorphisms from `source` to `target`, in ascending lexicographic
/// order of their map vectors.
///
/// The constants pin `map[0]` and `map[1]`, so only the remaining entries
/// are searched; a full check runs at each leaf.  Carriers this small need
/// no pruning.
pub fn enumerate_homomorphisms(
    source: &FiniteSemiring,
    target: &FiniteSemiring,
) -> Vec<Homomorphism> {
    let n = source.order();
    let m = target.order();
    let mut map = vec![0usize; n];
    map[source.zero()] = target.zero();
    if source.one() == source.zero() && target.one() != target.zero() {
        // A trivial source forces φ(0) = φ(1); a nontrivial target separates
        // the constants, so no homomorphism exists.
        return Vec::new();
    }
    map[source.one()] = target.one();

    let free: Vec<usize> = (0..n).filter(|&i| i != source.zero() && i != source.one()).collect();
    let mut out = Vec::new();
    let mut stack = vec![0usize; free.len()];
    let mut depth = 0usize;
    loop {
        if depth == free.len() {
            for (slot, &i) in free.iter().enumerate() {
                map[i] = stack[slot];
            }
            if hom_violation(source, target, &map).expect("map is well-formed").is_none() {
                out.push(Homomorphism {
                    source: source.clone(),
                    target: target.clone(),
                    map: map.clone(),
                });
            }
            if free.is_empty() {
                break;
            }
            depth -= 1;
            stack[depth] += 1;
        } else if stack[depth] >= m {
            stack[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            stack[depth] += 1;
        } else {
            depth += 1;
        }
    }
    out
}
