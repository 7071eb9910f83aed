//! The lattice of k-ideals under inclusion.
//!
//! Meets are plain intersections (the intersection of k-ideals is a
//! k-ideal); joins take the k-closure of the elementwise sum, the least
//! k-ideal containing both arguments.  The lattice is always modular;
//! distributivity and total orderedness vary by semiring and are computed
//! as flags.
//!
//! The lattice of *all* ideals — meet intersection, join elementwise sum —
//! is exposed through [`all_ideal_lattice_flags`] for comparisons between
//! the two notions.

use crate::bitset::BitSet;
use crate::error::Result;
use crate::ideal::{enumerate_ideals, k_closure_set, sum_ideals};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeFlags {
    pub modular: bool,
    pub distributive: bool,
    pub totally_ordered: bool,
}

/// The complete lattice of k-ideals of one finite semiring.
#[derive(Debug, Clone)]
pub struct KIdealLattice {
    ring: FiniteSemiring,
    members: Vec<BitSet>,
    meet: Vec<usize>,
    join: Vec<usize>,
    flags: LatticeFlags,
}

impl KIdealLattice {
    pub fn new(ring: &FiniteSemiring) -> Result<Self> {
        let members = enumerate_ideals(ring, true)?;
        let index_of = |set: &BitSet| -> usize {
            members
                .binary_search(set)
                .expect("meets and joins of k-ideals are k-ideals")
        };
        let len = members.len();
        let mut meet = vec![0usize; len * len];
        let mut join = vec![0usize; len * len];
        for i in 0..len {
            for j in 0..len {
                meet[i * len + j] = index_of(&members[i].intersection(&members[j]));
                join[i * len + j] =
                    index_of(&k_closure_set(ring, &sum_ideals(ring, &members[i], &members[j])));
            }
        }
        let flags = compute_flags(&members, &meet, &join);
        Ok(KIdealLattice {
            ring: ring.clone(),
            members,
            meet,
            join,
            flags,
        })
    }

    pub fn ring(&self) -> &FiniteSemiring {
        &self.ring
    }

    pub fn members(&self) -> &[BitSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, set: &BitSet) -> Option<usize> {
        self.members.binary_search(set).ok()
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.members.len() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.members.len() + j]
    }

    /// Index of `{0}`, the least k-ideal.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole semiring.
    pub fn top(&self) -> usize {
        self.members.len() - 1
    }

    pub fn flags(&self) -> LatticeFlags {
        self.flags
    }
}

fn compute_flags(members: &[BitSet], meet: &[usize], join: &[usize]) -> LatticeFlags {
    let len = members.len();
    let meet_at = |i: usize, j: usize| meet[i * len + j];
    let join_at = |i: usize, j: usize| join[i * len + j];

    let mut modular = true;
    'mod_scan: for i in 0..len {
        for k in 0..len {
            if !members[i].is_subset(&members[k]) {
                continue;
            }
            for j in 0..len {
                if join_at(i, meet_at(j, k)) != meet_at(join_at(i, j), k) {
                    modular = false;
                    break 'mod_scan;
                }
            }
        }
    }

    let mut distributive = true;
    'dist_scan: for i in 0..len {
        for j in 0..len {
            for k in 0..len {
                if meet_at(i, join_at(j, k)) != join_at(meet_at(i, j), meet_at(i, k)) {
                    distributive = false;
                    break 'dist_scan;
                }
            }
        }
    }

    let totally_ordered = (0..len).all(|i| {
        (0..len).all(|j| members[i].is_subset(&members[j]) || members[j].is_subset(&members[i]))
    });

    LatticeFlags {
        modular,
        distributive,
        totally_ordered,
    }
}

/// Flags of the lattice of *all* ideals, where the join of two ideals is
/// their elementwise sum.
pub fn all_ideal_lattice_flags(ring: &FiniteSemiring) -> Result<LatticeFlags> {
    let members = enumerate_ideals(ring, false)?;
    let index_of = |set: &BitSet| -> usize {
        members
            .binary_search(set)
            .expect("meets and sums of ideals are ideals")
    };
    let len = members.len();
    let mut meet = vec![0usize; len * len];
    let mut join = vec![0usize; len * len];
    for i in 0..len {
        for j in 0..len {
            meet[i * len + j] = index_of(&members[i].intersection(&members[j]));
            join[i * len + j] = index_of(&sum_ideals(ring, &members[i], &members[j]));
        }
    }
    Ok(compute_flags(&members, &meet, &join))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{by_name, corpus};

    #[test]
    fn z4_is_a_three_element_chain() {
        let lat = KIdealLattice::new(&by_name("Z4").unwrap()).unwrap();
        assert_eq!(lat.len(), 3);
        assert_eq!(
            lat.flags(),
            LatticeFlags {
                modular: true,
                distributive: true,
                totally_ordered: true
            }
        );
    }

    #[test]
    fn product_of_booleans_is_a_square() {
        let lat = KIdealLattice::new(&by_name("BxB").unwrap()).unwrap();
        assert_eq!(lat.len(), 4);
        let flags = lat.flags();
        assert!(flags.modular);
        assert!(flags.distributive);
        assert!(!flags.totally_ordered);
    }

    #[test]
    fn trivial_semiring_is_a_point() {
        let lat = KIdealLattice::new(&by_name("trivial").unwrap()).unwrap();
        assert_eq!(lat.len(), 1);
        assert_eq!(lat.bottom(), lat.top());
        assert!(lat.flags().totally_ordered);
    }

    #[test]
    fn lattice_identities_hold_on_corpus() {
        for ring in corpus() {
            let lat = KIdealLattice::new(&ring).unwrap();
            let n = lat.len();
            for i in 0..n {
                assert_eq!(lat.meet(i, lat.top()), i);
                assert_eq!(lat.join(i, lat.bottom()), i);
                for j in 0..n {
                    assert_eq!(lat.meet(i, j), lat.meet(j, i));
                    assert_eq!(lat.join(i, j), lat.join(j, i));
                    assert_eq!(lat.meet(i, lat.join(i, j)), i, "absorption in {}", ring.name());
                    assert_eq!(lat.join(i, lat.meet(i, j)), i, "absorption in {}", ring.name());
                }
            }
        }
    }

    #[test]
    fn every_corpus_k_lattice_is_modular() {
        for ring in corpus() {
            assert!(
                KIdealLattice::new(&ring).unwrap().flags().modular,
                "{} should be modular",
                ring.name()
            );
        }
    }

    #[test]
    fn all_ideal_flags_on_chains_and_truncations() {
        let flags = all_ideal_lattice_flags(&by_name("C4").unwrap()).unwrap();
        assert!(flags.distributive && flags.totally_ordered);
        let flags = all_ideal_lattice_flags(&by_name("N3").unwrap()).unwrap();
        assert!(flags.distributive && flags.totally_ordered);
    }
}
