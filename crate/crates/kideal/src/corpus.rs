//! The fixed corpus of small semirings exercised by every verification
//! suite: standard families up to order 5 plus two direct products.

use crate::semiring::FiniteSemiring;

/// Builds the corpus in its fixed order:
/// `trivial, B, Z2, Z4, C3, C4, N3, N4, BxB, Z2xB`.
pub fn corpus() -> Vec<FiniteSemiring> {
    let b = FiniteSemiring::boolean();
    let z2 = FiniteSemiring::ring_mod(2).unwrap();
    vec![
        FiniteSemiring::trivial(),
        b.clone(),
        z2.clone(),
        FiniteSemiring::ring_mod(4).unwrap(),
        FiniteSemiring::chain(3).unwrap(),
        FiniteSemiring::chain(4).unwrap(),
        FiniteSemiring::truncated_nat(3).unwrap(),
        FiniteSemiring::truncated_nat(4).unwrap(),
        b.direct_product(&b, "BxB"),
        z2.direct_product(&b, "Z2xB"),
    ]
}

/// Looks up a corpus member by its display title.
pub fn by_name(name: &str) -> Option<FiniteSemiring> {
    corpus().into_iter().find(|r| r.name() == name)
}
