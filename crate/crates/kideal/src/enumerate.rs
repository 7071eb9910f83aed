//! Exhaustive enumeration of finite commutative semirings of a given order.
//!
//! The search fills in normalized operation tables cell by cell: addition
//! first (row 0 forced by the identity law), then multiplication (row 0
//! forced by absorption, row 1 by the identity).  Commutativity is built in
//! by storing only unordered pairs; associativity and distributivity prune
//! partial tables as soon as every operand of a violated instance is
//! determined.  Each completed table pair still runs through the full
//! validator before being accepted.

use std::collections::BTreeMap;

use crate::canonical::{canonical_form, canonical_representative};
use crate::error::{Error, Result};
use crate::semiring::{validate_tables, FiniteSemiring};

/// Default refusal threshold for [`enumerate_semirings`]; the CLI lets the
/// `KIDEAL_MAX_ORDER` environment variable raise it.
pub const DEFAULT_MAX_ORDER: usize = 4;

/// All commutative unital semirings of the given order, either every
/// normalized table pair (`up_to_iso = false`) or one canonical
/// representative per isomorphism class.
///
/// Output is sorted by canonical string (table pairs within one class are
/// tie-broken by their tables) and titled `o<order>_<index>`.
pub fn enumerate_semirings(
    order: usize,
    up_to_iso: bool,
    max_order: usize,
) -> Result<Vec<FiniteSemiring>> {
    if order == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if order > max_order {
        return Err(Error::OrderCap {
            requested: order,
            cap: max_order,
        });
    }

    let names: Vec<String> = (0..order).map(|i| i.to_string()).collect();
    let mut raw: Vec<FiniteSemiring> = Vec::new();
    for (add, mul) in table_pairs(order) {
        debug_assert!(validate_tables(order, &names, &add, &mul, 0, order.min(2) - 1)
            .map(|r| r.ok())
            .unwrap_or(false));
        raw.push(FiniteSemiring::from_tables("candidate", names.clone(), add, mul)?);
    }

    let mut out: Vec<FiniteSemiring> = if up_to_iso {
        let mut classes: BTreeMap<String, FiniteSemiring> = BTreeMap::new();
        for ring in raw {
            classes
                .entry(canonical_form(&ring))
                .or_insert_with(|| canonical_representative(&ring, "candidate"));
        }
        classes.into_values().collect()
    } else {
        raw.sort_by_key(|r| {
            (
                canonical_form(r),
                r.add_table().to_vec(),
                r.mul_table().to_vec(),
            )
        });
        raw
    };

    for (i, ring) in out.iter_mut().enumerate() {
        *ring = ring.renamed(&format!("o{order}_{i}"));
    }
    Ok(out)
}

/// Generates every valid normalized `(add, mul)` table pair of the order.
fn table_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    if n == 1 {
        return vec![(vec![0], vec![0])];
    }
    let mut out = Vec::new();
    for add in complete_tables(n, add_seed(n), &add_cells(n), |t| add_consistent(n, t)) {
        for mul in complete_tables(n, mul_seed(n), &mul_cells(n), |t| mul_consistent(n, t, &add)) {
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            if validate_tables(n, &names, &add, &mul, 0, 1)
                .map(|r| r.ok())
                .unwrap_or(false)
            {
                out.push((add.clone(), mul));
            }
        }
    }
    out
}

type PartialTable = Vec<Option<usize>>;

fn add_seed(n: usize) -> PartialTable {
    let mut t = vec![None; n * n];
    for y in 0..n {
        t[y] = Some(y); // 0 + y = y
        t[y * n] = Some(y);
    }
    t
}

fn add_cells(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect()
}

fn mul_seed(n: usize) -> PartialTable {
    let mut t = vec![None; n * n];
    for y in 0..n {
        t[y] = Some(0); // 0 · y = 0
        t[y * n] = Some(0);
        t[n + y] = Some(y); // 1 · y = y
        t[y * n + 1] = Some(y);
    }
    t
}

fn mul_cells(n: usize) -> Vec<(usize, usize)> {
    (2..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect()
}

/// Depth-first completion of a symmetric partial table, keeping only
/// assignments the consistency predicate accepts.  Values are tried in
/// ascending order, so completions come out lexicographically.
fn complete_tables(
    n: usize,
    seed: PartialTable,
    cells: &[(usize, usize)],
    consistent: impl Fn(&PartialTable) -> bool,
) -> Vec<Vec<usize>> {
    struct Search<'a, F> {
        n: usize,
        cells: &'a [(usize, usize)],
        consistent: F,
        out: Vec<Vec<usize>>,
    }

    impl<F: Fn(&PartialTable) -> bool> Search<'_, F> {
        fn run(&mut self, table: &mut PartialTable, depth: usize) {
            if depth == self.cells.len() {
                self.out.push(table.iter().map(|e| e.expect("table complete")).collect());
                return;
            }
            let (x, y) = self.cells[depth];
            for v in 0..self.n {
                table[x * self.n + y] = Some(v);
                table[y * self.n + x] = Some(v);
                if (self.consistent)(table) {
                    self.run(table, depth + 1);
                }
            }
            table[x * self.n + y] = None;
            table[y * self.n + x] = None;
        }
    }

    let mut search = Search {
        n,
        cells,
        consistent,
        out: Vec::new(),
    };
    let mut table = seed;
    search.run(&mut table, 0);
    search.out
}

fn get(t: &PartialTable, n: usize, x: usize, y: usize) -> Option<usize> {
    t[x * n + y]
}

/// Associativity holds on every fully determined triple.
fn add_consistent(n: usize, t: &PartialTable) -> bool {
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = get(t, n, x, y) else { continue };
            for z in 0..n {
                let (Some(l), Some(yz)) = (get(t, n, xy, z), get(t, n, y, z)) else {
                    continue;
                };
                let Some(r) = get(t, n, x, yz) else { continue };
                if l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Multiplication associativity plus distributivity over the (complete)
/// addition table, on every determined triple.
fn mul_consistent(n: usize, t: &PartialTable, add: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = get(t, n, x, y) else { continue };
            for z in 0..n {
                if let (Some(l), Some(yz)) = (get(t, n, xy, z), get(t, n, y, z)) {
                    if let Some(r) = get(t, n, x, yz) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = get(t, n, x, y) else { continue };
            for z in 0..n {
                let Some(xz) = get(t, n, x, z) else { continue };
                let Some(x_yz) = get(t, n, x, add[y * n + z]) else {
                    continue;
                };
                if x_yz != add[xy * n + xz] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_is_unique() {
        let rings = enumerate_semirings(1, true, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(rings.len(), 1);
        assert_eq!(rings[0].order(), 1);
    }

    #[test]
    fn order_two_classes_are_boolean_and_z2() {
        let rings = enumerate_semirings(2, true, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(rings.len(), 2);
        let mut found: Vec<String> = rings.iter().map(canonical_form).collect();
        found.sort();
        let mut expected = vec![
            canonical_form(&FiniteSemiring::boolean()),
            canonical_form(&FiniteSemiring::ring_mod(2).unwrap()),
        ];
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn order_two_matches_unpruned_brute_force() {
        // Oracle: run every 2×2 table pair through the validator directly.
        let names = vec!["0".to_string(), "1".to_string()];
        let mut valid = Vec::new();
        for a in 0..16usize {
            for m in 0..16usize {
                let dec = |bits: usize| (0..4).map(|i| bits >> i & 1).collect::<Vec<usize>>();
                let add = dec(a);
                let mul = dec(m);
                if let Ok(report) = validate_tables(2, &names, &add, &mul, 0, 1) {
                    if report.ok() {
                        valid.push((add, mul));
                    }
                }
            }
        }
        let full = enumerate_semirings(2, false, DEFAULT_MAX_ORDER).unwrap();
        let mut generated: Vec<(Vec<usize>, Vec<usize>)> = full
            .iter()
            .map(|r| (r.add_table().to_vec(), r.mul_table().to_vec()))
            .collect();
        generated.sort();
        valid.sort();
        valid.dedup();
        assert_eq!(generated, valid);
    }

    #[test]
    fn order_three_representatives_partition_the_full_set() {
        let full = enumerate_semirings(3, false, DEFAULT_MAX_ORDER).unwrap();
        let reps = enumerate_semirings(3, true, DEFAULT_MAX_ORDER).unwrap();
        let rep_forms: Vec<String> = reps.iter().map(canonical_form).collect();
        for w in rep_forms.windows(2) {
            assert!(w[0] < w[1], "representatives not sorted or not distinct");
        }
        for ring in &full {
            assert!(ring.self_check().ok());
            let form = canonical_form(ring);
            assert_eq!(rep_forms.iter().filter(|f| **f == form).count(), 1);
        }
        assert!(reps.len() >= 2);
    }

    #[test]
    fn cap_is_enforced() {
        match enumerate_semirings(5, false, 4) {
            Err(Error::OrderCap { requested, cap }) => {
                assert_eq!((requested, cap), (5, 4));
            }
            other => panic!("expected order-cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn titles_are_positional() {
        let rings = enumerate_semirings(2, true, DEFAULT_MAX_ORDER).unwrap();
        let titles: Vec<&str> = rings.iter().map(|r| r.name()).collect();
        assert_eq!(titles, vec!["o2_0", "o2_1"]);
    }
}
