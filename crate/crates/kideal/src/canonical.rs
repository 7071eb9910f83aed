//! Canonical forms under constant-fixing isomorphism.
//!
//! Two normalized semirings of the same order are isomorphic exactly when
//! some permutation of the carrier that fixes `0` and `1` transports one
//! pair of tables onto the other.  The canonical form is the
//! lexicographically least `(add, mul)` table pair over all such
//! permutations, rendered as a string; equal strings mean isomorphic
//! structures.

use crate::semiring::FiniteSemiring;

/// All permutations of `0..n` fixing `0` and (when present) `1`, in
/// lexicographic order.  Each entry maps old index to new index.
fn constant_fixing_permutations(n: usize) -> Vec<Vec<usize>> {
    let first_free = n.min(2);
    let free: Vec<usize> = (first_free..n).collect();
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..first_free).collect();
    permute(&free, &mut current, &mut out);
    out
}

fn permute(remaining: &[usize], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining.is_empty() {
        out.push(current.clone());
        return;
    }
    for (i, &v) in remaining.iter().enumerate() {
        let mut rest = remaining.to_vec();
        rest.remove(i);
        current.push(v);
        permute(&rest, current, out);
        current.pop();
    }
}

fn apply_perm(n: usize, table: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut out = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = perm[table[inv[i] * n + inv[j]]];
        }
    }
    out
}

/// Lexicographically least `(add, mul)` pair over constant-fixing
/// relabelings.
pub fn canonical_tables(ring: &FiniteSemiring) -> (Vec<usize>, Vec<usize>) {
    let n = ring.order();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for perm in constant_fixing_permutations(n) {
        let candidate = (
            apply_perm(n, ring.add_table(), &perm),
            apply_perm(n, ring.mul_table(), &perm),
        );
        match &best {
            Some(b) if *b <= candidate => {}
            _ => best = Some(candidate),
        }
    }
    best.expect("at least the identity permutation")
}

/// String key equal for isomorphic semirings and distinct otherwise.
pub fn canonical_form(ring: &FiniteSemiring) -> String {
    let (add, mul) = canonical_tables(ring);
    let render = |t: &[usize]| {
        t.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("o{}:add={}:mul={}", ring.order(), render(&add), render(&mul))
}

/// Rebuilds the semiring on its canonical tables, with elements named by
/// their indices.
pub fn canonical_representative(ring: &FiniteSemiring, title: &str) -> FiniteSemiring {
    let (add, mul) = canonical_tables(ring);
    let names = (0..ring.order()).map(|i| i.to_string()).collect();
    FiniteSemiring::from_tables(title, names, add, mul)
        .expect("canonical relabeling preserves the axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus;

    fn relabel(ring: &FiniteSemiring, perm: &[usize]) -> FiniteSemiring {
        let n = ring.order();
        let mut names = vec![String::new(); n];
        for old in 0..n {
            names[perm[old]] = ring.element_name(old).to_string();
        }
        FiniteSemiring::from_tables(
            "relabeled",
            names,
            apply_perm(n, ring.add_table(), perm),
            apply_perm(n, ring.mul_table(), perm),
        )
        .unwrap()
    }

    #[test]
    fn boolean_and_z2_differ() {
        assert_ne!(
            canonical_form(&FiniteSemiring::boolean()),
            canonical_form(&FiniteSemiring::ring_mod(2).unwrap())
        );
    }

    #[test]
    fn invariant_under_constant_fixing_relabeling() {
        for ring in corpus() {
            let reference = canonical_form(&ring);
            for perm in constant_fixing_permutations(ring.order()) {
                assert_eq!(
                    canonical_form(&relabel(&ring, &perm)),
                    reference,
                    "canonical form moved under relabeling of {}",
                    ring.name()
                );
            }
        }
    }

    #[test]
    fn order_four_corpus_members_are_pairwise_distinct() {
        let forms: Vec<String> = ["Z4", "C4", "N3", "BxB", "Z2xB"]
            .iter()
            .map(|n| canonical_form(&crate::corpus::by_name(n).unwrap()))
            .collect();
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                assert_ne!(forms[i], forms[j]);
            }
        }
    }

    #[test]
    fn representative_is_valid_and_equivalent() {
        for ring in corpus() {
            let rep = canonical_representative(&ring, "rep");
            assert!(rep.self_check().ok());
            assert_eq!(canonical_form(&rep), canonical_form(&ring));
        }
    }
}
