//! Subsets of a fixed finite carrier, stored as bit vectors.
//!
//! Every subset manipulated by this crate lives inside the carrier
//! `{0, …, n-1}` of some semiring, so a packed bit representation is both the
//! fastest and the most convenient encoding: the lattice operations are word
//! operations, and the ordering used for deterministic output — first by
//! cardinality, then by numeric value of the mask — is cheap to compute.

/// A subset of `{0, …, universe-1}`.
///
/// The ordering is `(cardinality, mask value)`: smaller sets sort first, and
/// sets of equal size sort by their mask interpreted as an integer (so the
/// set containing only low indices precedes the set containing high ones).
/// This is the tie-break order used everywhere a canonical representative of
/// several equally good answers must be chosen.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    universe: usize,
    limbs: Vec<u64>,
}

fn limb_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl BitSet {
    /// The empty subset of a carrier with `universe` elements.
    pub fn empty(universe: usize) -> Self {
        BitSet {
            universe,
            limbs: vec![0; limb_count(universe)],
        }
    }

    /// The full carrier `{0, …, universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    /// `{index}` as a subset of the given carrier.
    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(index);
        s
    }

    /// Builds a set from explicit member indices.
    pub fn from_indices(universe: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(universe);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe, "index {index} outside universe {}", self.universe);
        self.limbs[index / 64] |= 1u64 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.universe);
        self.limbs[index / 64] &= !(1u64 << (index % 64));
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.limbs[index / 64] >> (index % 64) & 1 == 1
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Iterates over member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(|&i| self.contains(i))
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & b)
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &BitSet) -> BitSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> BitSet {
        let mut out = self.clone();
        for (i, limb) in out.limbs.iter_mut().enumerate() {
            *limb = !*limb;
            // Clear the padding bits of the final limb.
            let low = i * 64;
            if low + 64 > self.universe {
                let used = self.universe - low;
                *limb &= if used == 0 { 0 } else { u64::MAX >> (64 - used) };
            }
        }
        out
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.limbs.iter().zip(&other.limbs).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &BitSet) -> bool {
        other.is_subset(self)
    }

    /// Strict inclusion `self ⊊ other`.
    pub fn is_proper_subset(&self, other: &BitSet) -> bool {
        self.is_subset(other) && self != other
    }

    fn zip_with(&self, other: &BitSet, f: impl Fn(u64, u64) -> u64) -> BitSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        BitSet {
            universe: self.universe,
            limbs: self
                .limbs
                .iter()
                .zip(&other.limbs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.len()
            .cmp(&other.len())
            // Mask-value comparison: most significant limb decides first.
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
