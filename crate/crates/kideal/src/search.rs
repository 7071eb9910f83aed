//! Witness hunting over exhaustively enumerated small semirings.
//!
//! Each property below asks for a finite counterexample or strictness
//! instance whose existence is not settled by the corpus alone.  The search
//! walks one canonical representative per isomorphism class in ascending
//! order — every property here is invariant under isomorphism, so skipping
//! the other members of a class loses nothing — and reports the first hit
//! in enumeration order, which makes the outcome reproducible.

use std::str::FromStr;

use crate::cep::{cep_verify, ItemStatus};
use crate::enumerate::enumerate_semirings;
use crate::error::{Error, Result};
use crate::hom::enumerate_homomorphisms;
use crate::ideal::{
    enumerate_ideals, is_k_ideal, k_closure_set, product_ideal, product_raw, sum_ideals,
};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchProperty {
    /// A pair of k-ideals whose elementwise sum is not a k-ideal.
    SumNotK,
    /// A homomorphism and a pair of k-ideals whose meet extends to a proper
    /// subset of the meet of the extensions.
    StrictExtensionMeet,
    /// A pair of ideals where the k-closure of the product ideal strictly
    /// contains the elementwise product of the k-closures.
    StrictClosureProduct,
    /// A homomorphism on which some literal extension-form probe of the
    /// contraction laws fails outright.
    LiteralProbeFail,
}

impl FromStr for SearchProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum-not-k" => Ok(SearchProperty::SumNotK),
            "strict-6" => Ok(SearchProperty::StrictExtensionMeet),
            "strict-9" => Ok(SearchProperty::StrictClosureProduct),
            "cep7-literal-fail" => Ok(SearchProperty::LiteralProbeFail),
            other => Err(Error::InvalidParameter(format!(
                "unknown search property `{other}`"
            ))),
        }
    }
}

/// Scan all semirings of order 2 through `max_order` (one per isomorphism
/// class) and return the first witness description, or `None` if the
/// property has no instance in that range.
pub fn search_property(property: SearchProperty, max_order: usize) -> Result<Option<String>> {
    if max_order < 2 {
        return Err(Error::InvalidParameter(
            "search needs --max-order at least 2".into(),
        ));
    }
    for order in 2..=max_order {
        let rings = enumerate_semirings(order, true, max_order)?;
        match property {
            SearchProperty::SumNotK => {
                for ring in &rings {
                    if let Some(w) = sum_not_k(ring)? {
                        return Ok(Some(w));
                    }
                }
            }
            SearchProperty::StrictClosureProduct => {
                for ring in &rings {
                    if let Some(w) = strict_closure_product(ring)? {
                        return Ok(Some(w));
                    }
                }
            }
            SearchProperty::StrictExtensionMeet | SearchProperty::LiteralProbeFail => {
                // Homomorphism targets range over every order up to the cap,
                // so pair each source of this order with all smaller-or-equal
                // orders seen so far plus its own order.
                for target_order in 2..=order {
                    let targets = if target_order == order {
                        rings.clone()
                    } else {
                        enumerate_semirings(target_order, true, max_order)?
                    };
                    for source in &rings {
                        for target in &targets {
                            let hit = match property {
                                SearchProperty::StrictExtensionMeet => {
                                    strict_extension_meet(source, target)?
                                }
                                _ => literal_probe_fail(source, target)?,
                            };
                            if let Some(w) = hit {
                                return Ok(Some(w));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn sum_not_k(ring: &FiniteSemiring) -> Result<Option<String>> {
    let k_ideals = enumerate_ideals(ring, true)?;
    for i in &k_ideals {
        for j in &k_ideals {
            let s = sum_ideals(ring, i, j);
            if !is_k_ideal(ring, &s) {
                return Ok(Some(format!(
                    "{}: I={} J={} sum={} is not a k-ideal",
                    ring.name(),
                    ring.set_to_string(i),
                    ring.set_to_string(j),
                    ring.set_to_string(&s),
                )));
            }
        }
    }
    Ok(None)
}

fn strict_closure_product(ring: &FiniteSemiring) -> Result<Option<String>> {
    let ideals = enumerate_ideals(ring, false)?;
    for i in &ideals {
        for j in &ideals {
            let lhs = k_closure_set(ring, &product_ideal(ring, i, j));
            let rhs = product_raw(ring, &k_closure_set(ring, i), &k_closure_set(ring, j));
            if rhs.is_proper_subset(&lhs) {
                return Ok(Some(format!(
                    "{}: I={} J={} closure of product={} product of closures={}",
                    ring.name(),
                    ring.set_to_string(i),
                    ring.set_to_string(j),
                    ring.set_to_string(&lhs),
                    ring.set_to_string(&rhs),
                )));
            }
        }
    }
    Ok(None)
}

fn strict_extension_meet(source: &FiniteSemiring, target: &FiniteSemiring) -> Result<Option<String>> {
    for (idx, hom) in enumerate_homomorphisms(source, target).iter().enumerate() {
        let cep = cep_verify(hom)?;
        let item = cep.item("6a");
        if item.status == ItemStatus::Strict {
            return Ok(Some(format!(
                "{}->{}#{idx}: {}",
                source.name(),
                target.name(),
                item.witness.clone().unwrap_or_default(),
            )));
        }
    }
    Ok(None)
}

fn literal_probe_fail(source: &FiniteSemiring, target: &FiniteSemiring) -> Result<Option<String>> {
    for (idx, hom) in enumerate_homomorphisms(source, target).iter().enumerate() {
        let cep = cep_verify(hom)?;
        for tag in ["L7a", "L7b", "L7c", "L7d"] {
            let item = cep.item(tag);
            if item.status == ItemStatus::Fail {
                return Ok(Some(format!(
                    "{}->{}#{idx} item {tag}: {}",
                    source.name(),
                    target.name(),
                    item.witness.clone().unwrap_or_default(),
                )));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_parse() {
        assert_eq!(
            "sum-not-k".parse::<SearchProperty>().unwrap(),
            SearchProperty::SumNotK
        );
        assert_eq!(
            "strict-6".parse::<SearchProperty>().unwrap(),
            SearchProperty::StrictExtensionMeet
        );
        assert_eq!(
            "strict-9".parse::<SearchProperty>().unwrap(),
            SearchProperty::StrictClosureProduct
        );
        assert_eq!(
            "cep7-literal-fail".parse::<SearchProperty>().unwrap(),
            SearchProperty::LiteralProbeFail
        );
        assert!("bogus".parse::<SearchProperty>().is_err());
    }

    #[test]
    fn order_two_finds_no_sum_witness() {
        assert_eq!(search_property(SearchProperty::SumNotK, 2).unwrap(), None);
    }

    #[test]
    fn searches_are_deterministic_at_order_three() {
        for property in [
            SearchProperty::SumNotK,
            SearchProperty::StrictExtensionMeet,
            SearchProperty::StrictClosureProduct,
            SearchProperty::LiteralProbeFail,
        ] {
            let a = search_property(property, 3).unwrap();
            let b = search_property(property, 3).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn max_order_below_two_is_rejected() {
        assert!(search_property(SearchProperty::SumNotK, 1).is_err());
    }
}
