//! Finite commutative semirings and their **k-ideals** (subtractive ideals).
//!
//! A semiring `(R, +, 0, ·, 1)` is a commutative additive monoid and a
//! commutative multiplicative monoid with `0` absorbing and `·` distributing
//! over `+`.  Unlike a ring, addition need not be cancellative, so the class
//! of ideals splits: an ideal `I` is a *k-ideal* when it is subtractive,
//! i.e. `x ∈ I` and `x + y ∈ I` force `y ∈ I`.  The k-closure
//! `C_k(I) = { r | r + x ∈ I for some x ∈ I }` is the least k-ideal above `I`.
//!
//! This crate represents semirings by explicit operation tables and makes the
//! whole k-ideal theory executable on them:
//!
//! * [`semiring`] — table validation, standard families, direct products,
//!   and a line-oriented text format;
//! * [`ideal`] — ideal generation, subtractivity checks, k-closure, sums,
//!   products, annihilators, and quotients over bitset-encoded subsets;
//! * [`lattice`] — the lattice of all k-ideals with meet `∩` and join
//!   `C_k(I + J)`;
//! * [`classify`] — k-prime / k-semiprime / k-maximal / k-irreducible
//!   predicates, radicals, spectra, and irreducible decompositions;
//! * [`cep`] — contraction and extension of ideals along homomorphisms and
//!   the transfer laws relating them;
//! * [`nat`] — k-ideals of the infinite semiring `ℕ` modelled as eventually
//!   periodic sets;
//! * [`suites`] — deterministic verification suites that re-check every law
//!   on a given semiring and report pass/fail records.
//!
//! ```
//! use kideal::semiring::FiniteSemiring;
//! use kideal::ideal::IdealSet;
//!
//! let z4 = FiniteSemiring::ring_mod(4).unwrap();
//! let even = IdealSet::from_names(&z4, &["0", "2"]).unwrap();
//! assert!(even.subtractive_violation().unwrap().is_none()); // {0,2} is a k-ideal
//!
//! let n3 = FiniteSemiring::truncated_nat(3).unwrap();
//! let top = IdealSet::from_names(&n3, &["0", "2", "3"]).unwrap();
//! // 2 ∈ I and 2 ⊕ 1 = 3 ∈ I, yet 1 ∉ I: not subtractive.
//! assert_eq!(top.subtractive_violation().unwrap(), Some((2, 1)));
//! assert_eq!(top.k_closure().unwrap().names_string(), "{0,1,2,3}");
//! ```

pub mod bitset;
pub mod canonical;
pub mod cep;
pub mod classify;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod hom;
pub mod ideal;
pub mod lattice;
pub mod nat;
pub mod report;
pub mod search;
pub mod semiring;
pub mod suites;

pub use bitset::BitSet;
pub use error::Error;
pub use hom::Homomorphism;
pub use ideal::IdealSet;
pub use semiring::FiniteSemiring;

/// Keeps every Rust block in the README and the guide compiling against
/// the current API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semirings.md")]
    mod semirings {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/closure.md")]
    mod closure {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/primes.md")]
    mod primes {}
    #[doc = include_str!("../../../book/src/radicals.md")]
    mod radicals {}
    #[doc = include_str!("../../../book/src/irreducible.md")]
    mod irreducible {}
    #[doc = include_str!("../../../book/src/transfer.md")]
    mod transfer {}
    #[doc = include_str!("../../../book/src/naturals.md")]
    mod naturals {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
}
