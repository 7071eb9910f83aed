//! Finite commutative semirings presented by operation tables.
//!
//! A semiring `(R, +, 0, ·, 1)` consists of two commutative monoids on the
//! same carrier with `0` multiplicatively absorbing and `·` distributing over
//! `+`.  A finite instance is completely described by its order `n`, two
//! `n × n` tables of element indices, and the positions of the two constants.
//!
//! Everything downstream relies on the normalization convention: after
//! construction, `0` is always index `0` and (when `n ≥ 2`) `1` is index `1`.
//! The table validator works on raw, un-normalized data so that broken input
//! can be diagnosed; all public constructors return normalized semirings.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// The eight axiom families checked by [`validate_tables`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    Absorption,
    Distributivity,
}

impl Axiom {
    /// Stable identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "add-comm",
            Axiom::AddAssociative => "add-assoc",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulCommutative => "mul-comm",
            Axiom::MulAssociative => "mul-assoc",
            Axiom::MulIdentity => "mul-identity",
            Axiom::Absorption => "absorb",
            Axiom::Distributivity => "distrib",
        }
    }
}

/// One violated axiom family together with the lexicographically first
/// witness tuple of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

/// Outcome of validating a pair of operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the eight semiring axiom families on raw tables.
///
/// Tables are flat row-major `n × n` index arrays.  Structural problems
/// (wrong dimensions, out-of-range entries, bad constants, malformed names)
/// are reported as [`Error::Structural`], distinct from axiom violations.
/// For each violated family the report carries the lexicographically first
/// witness: a single element for identity laws, a pair for commutativity,
/// and a triple for associativity and distributivity.
pub fn validate_tables(
    order: usize,
    names: &[String],
    add: &[usize],
    mul: &[usize],
    zero: usize,
    one: usize,
) -> Result<ValidationReport> {
    if order == 0 {
        return Err(Error::Structural("order must be at least 1".into()));
    }
    if names.len() != order {
        return Err(Error::Structural(format!(
            "expected {order} element names, found {}",
            names.len()
        )));
    }
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::Structural(format!(
                "element name {i} ({name:?}) must be a nonempty whitespace-free token"
            )));
        }
        if names[..i].contains(name) {
            return Err(Error::Structural(format!("duplicate element name {name:?}")));
        }
    }
    for (label, table) in [("add", add), ("mul", mul)] {
        if table.len() != order * order {
            return Err(Error::Structural(format!(
                "{label} table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&e| e >= order) {
            return Err(Error::Structural(format!(
                "{label} table entry {bad} outside carrier of order {order}"
            )));
        }
    }
    if zero >= order || one >= order {
        return Err(Error::Structural(
            "zero and one must be carrier indices".into(),
        ));
    }

    let at = |t: &[usize], x: usize, y: usize| t[x * order + y];
    let mut violations = Vec::new();
    let mut record = |axiom: Axiom, witness: Vec<usize>| violations.push(AxiomViolation { axiom, witness });

    'comm_add: for x in 0..order {
        for y in x + 1..order {
            if at(add, x, y) != at(add, y, x) {
                record(Axiom::AddCommutative, vec![x, y]);
                break 'comm_add;
            }
        }
    }
    'assoc_add: for x in 0..order {
        for y in 0..order {
            for z in 0..order {
                if at(add, at(add, x, y), z) != at(add, x, at(add, y, z)) {
                    record(Axiom::AddAssociative, vec![x, y, z]);
                    break 'assoc_add;
                }
            }
        }
    }
    if let Some(x) = (0..order).find(|&x| at(add, zero, x) != x || at(add, x, zero) != x) {
        record(Axiom::AddIdentity, vec![x]);
    }
    'comm_mul: for x in 0..order {
        for y in x + 1..order {
            if at(mul, x, y) != at(mul, y, x) {
                record(Axiom::MulCommutative, vec![x, y]);
                break 'comm_mul;
            }
        }
    }
    'assoc_mul: for x in 0..order {
        for y in 0..order {
            for z in 0..order {
                if at(mul, at(mul, x, y), z) != at(mul, x, at(mul, y, z)) {
                    record(Axiom::MulAssociative, vec![x, y, z]);
                    break 'assoc_mul;
                }
            }
        }
    }
    if let Some(x) = (0..order).find(|&x| at(mul, one, x) != x || at(mul, x, one) != x) {
        record(Axiom::MulIdentity, vec![x]);
    }
    if let Some(x) = (0..order).find(|&x| at(mul, zero, x) != zero || at(mul, x, zero) != zero) {
        record(Axiom::Absorption, vec![x]);
    }
    'distrib: for x in 0..order {
        for y in 0..order {
            for z in 0..order {
                if at(mul, x, at(add, y, z)) != at(add, at(mul, x, y), at(mul, x, z)) {
                    record(Axiom::Distributivity, vec![x, y, z]);
                    break 'distrib;
                }
            }
        }
    }

    Ok(ValidationReport { violations })
}

/// Built-in construction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `{0, 1}` with `1 + 1 = 1` and the usual multiplication.
    Boolean,
    /// A totally ordered set of `m` elements with `+ = max` and `· = min`.
    Chain(usize),
    /// Integers modulo `m`.
    RingMod(usize),
    /// `{0, …, k}` with both operations capped at `k`:
    /// `a ⊕ b = min(a+b, k)` and `a ⊗ b = min(ab, k)`.
    TruncatedNat(usize),
}

struct Inner {
    name: String,
    names: Vec<String>,
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

/// An immutable finite commutative semiring.
///
/// Cloning is cheap (shared data).  Equality compares structure — order,
/// element names, and both tables — but not the display title, so two parses
/// of the same file agree even if the header names differ.
#[derive(Clone)]
pub struct FiniteSemiring {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.order == other.inner.order
                && self.inner.names == other.inner.names
                && self.inner.add == other.inner.add
                && self.inner.mul == other.inner.mul)
    }
}

impl Eq for FiniteSemiring {}

impl std::fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSemiring({}, order {})", self.inner.name, self.inner.order)
    }
}

impl FiniteSemiring {
    /// Builds a semiring from raw tables, validating the axioms and then
    /// normalizing so that `zero` lands on index 0 and `one` on index 1.
    ///
    /// Returns the semiring together with a flag saying whether a relabeling
    /// permutation was applied.
    pub fn from_raw(
        name: &str,
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<(Self, bool)> {
        let order = names.len();
        let report = validate_tables(order, &names, &add, &mul, zero, one)?;
        if let Some(v) = report.violations.first() {
            let witness: Vec<&str> = v.witness.iter().map(|&i| names[i].as_str()).collect();
            return Err(Error::Axioms(format!(
                "{} fails with witness ({})",
                v.axiom.id(),
                witness.join(", ")
            )));
        }
        if order >= 2 && zero == one {
            // Unreachable: 0 = 1 forces x = x·1 = x·0 = 0, so the identity
            // axioms already failed above for any second element.
            return Err(Error::Axioms("zero and one coincide in a nontrivial carrier".into()));
        }

        // Normalizing permutation: old index -> new index.  Zero and one move
        // to the front; everything else keeps its relative order.
        let mut new_order_of = vec![usize::MAX; order];
        new_order_of[zero] = 0;
        if order >= 2 {
            new_order_of[one] = 1;
        }
        let mut next = if order >= 2 { 2 } else { 1 };
        for i in 0..order {
            if new_order_of[i] == usize::MAX {
                new_order_of[i] = next;
                next += 1;
            }
        }
        let relabeled = new_order_of.iter().enumerate().any(|(i, &v)| i != v);

        let mut new_names = vec![String::new(); order];
        let mut new_add = vec![0usize; order * order];
        let mut new_mul = vec![0usize; order * order];
        for x in 0..order {
            new_names[new_order_of[x]] = names[x].clone();
            for y in 0..order {
                new_add[new_order_of[x] * order + new_order_of[y]] = new_order_of[add[x * order + y]];
                new_mul[new_order_of[x] * order + new_order_of[y]] = new_order_of[mul[x * order + y]];
            }
        }

        Ok((
            FiniteSemiring {
                inner: Arc::new(Inner {
                    name: name.to_string(),
                    names: new_names,
                    order,
                    add: new_add,
                    mul: new_mul,
                }),
            },
            relabeled,
        ))
    }

    /// Builds from already-normalized tables (zero at 0, one at 1).
    pub fn from_tables(
        name: &str,
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<Self> {
        let one = if names.len() >= 2 { 1 } else { 0 };
        let (ring, relabeled) = Self::from_raw(name, names, add, mul, 0, one)?;
        debug_assert!(!relabeled);
        Ok(ring)
    }

    /// Constructs a member of one of the standard families.
    pub fn build_standard(family: Family) -> Result<Self> {
        match family {
            Family::Boolean => {
                Self::from_tables("B", labels(&["0", "1"]), vec![0, 1, 1, 1], vec![0, 0, 0, 1])
            }
            Family::Chain(m) => {
                if m < 1 {
                    return Err(Error::InvalidParameter("chain length must be at least 1".into()));
                }
                // Chain positions bottom..top; index 0 is the bottom, index 1
                // the top, middles ascend from index 2.
                let pos_of_index = |i: usize| match i {
                    0 => 0,
                    1 => m - 1,
                    _ => i - 1,
                };
                let index_of_pos = |p: usize| {
                    if p == 0 {
                        0
                    } else if p == m - 1 {
                        1
                    } else {
                        p + 1
                    }
                };
                let mut names = Vec::with_capacity(m);
                for i in 0..m {
                    let p = pos_of_index(i);
                    names.push(if p == 0 {
                        "0".to_string()
                    } else if p == m - 1 {
                        "1".to_string()
                    } else {
                        middle_label(p - 1)
                    });
                }
                let mut add = vec![0; m * m];
                let mut mul = vec![0; m * m];
                for x in 0..m {
                    for y in 0..m {
                        let (px, py) = (pos_of_index(x), pos_of_index(y));
                        add[x * m + y] = index_of_pos(px.max(py));
                        mul[x * m + y] = index_of_pos(px.min(py));
                    }
                }
                let name = format!("C{m}");
                Self::from_tables(&name, names, add, mul)
            }
            Family::RingMod(m) => {
                if m < 1 {
                    return Err(Error::InvalidParameter("modulus must be at least 1".into()));
                }
                let names = (0..m).map(|i| i.to_string()).collect();
                let mut add = vec![0; m * m];
                let mut mul = vec![0; m * m];
                for x in 0..m {
                    for y in 0..m {
                        add[x * m + y] = (x + y) % m;
                        mul[x * m + y] = (x * y) % m;
                    }
                }
                let name = format!("Z{m}");
                Self::from_tables(&name, names, add, mul)
            }
            Family::TruncatedNat(k) => {
                if k < 1 {
                    return Err(Error::InvalidParameter("truncation point must be at least 1".into()));
                }
                let m = k + 1;
                let names = (0..m).map(|i| i.to_string()).collect();
                let mut add = vec![0; m * m];
                let mut mul = vec![0; m * m];
                for x in 0..m {
                    for y in 0..m {
                        add[x * m + y] = (x + y).min(k);
                        mul[x * m + y] = (x * y).min(k);
                    }
                }
                let name = format!("N{k}");
                Self::from_tables(&name, names, add, mul)
            }
        }
    }

    /// The two-element Boolean semiring.
    pub fn boolean() -> Self {
        Self::build_standard(Family::Boolean).expect("fixed tables")
    }

    /// Totally ordered `m`-element semiring with `+ = max`, `· = min`.
    pub fn chain(m: usize) -> Result<Self> {
        Self::build_standard(Family::Chain(m))
    }

    /// Integers modulo `m`.
    pub fn ring_mod(m: usize) -> Result<Self> {
        Self::build_standard(Family::RingMod(m))
    }

    /// `{0, …, k}` with addition and multiplication capped at `k`.
    pub fn truncated_nat(k: usize) -> Result<Self> {
        Self::build_standard(Family::TruncatedNat(k))
    }

    /// The one-element semiring (0 = 1).
    pub fn trivial() -> Self {
        Self::build_standard(Family::RingMod(1))
            .expect("fixed tables")
            .renamed("trivial")
    }

    /// Componentwise product of two semirings.
    ///
    /// The pair carrier is ordered with `(0,0)` first, `(1,1)` second (when
    /// both factors are nontrivial), and the remaining pairs `(i, j)` in the
    /// base order that advances the first component fastest.  Element names
    /// are `(a,b)` built from the factor names.
    pub fn direct_product(&self, other: &FiniteSemiring, name: &str) -> Self {
        let (n1, n2) = (self.order(), other.order());
        let base: Vec<(usize, usize)> = (0..n2).flat_map(|j| (0..n1).map(move |i| (i, j))).collect();
        let zero_pair = (0usize, 0usize);
        let one_pair = (self.one(), other.one());
        let mut pairs = Vec::with_capacity(n1 * n2);
        pairs.push(zero_pair);
        if one_pair != zero_pair {
            pairs.push(one_pair);
        }
        for p in base {
            if p != zero_pair && p != one_pair {
                pairs.push(p);
            }
        }
        let index_of = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();

        let m = n1 * n2;
        let names = pairs
            .iter()
            .map(|&(i, j)| format!("({},{})", self.element_name(i), other.element_name(j)))
            .collect();
        let mut add = vec![0; m * m];
        let mut mul = vec![0; m * m];
        for (x, &(a1, a2)) in pairs.iter().enumerate() {
            for (y, &(b1, b2)) in pairs.iter().enumerate() {
                add[x * m + y] = index_of((self.add(a1, b1), other.add(a2, b2)));
                mul[x * m + y] = index_of((self.mul(a1, b1), other.mul(a2, b2)));
            }
        }
        let ring = FiniteSemiring {
            inner: Arc::new(Inner {
                name: name.to_string(),
                names,
                order: m,
                add,
                mul,
            }),
        };
        debug_assert!(ring.self_check().ok());
        ring
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    /// Display title (for example `Z4`).  Not part of structural equality.
    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn element_names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn element_name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.inner.add[x * self.inner.order + y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.inner.mul[x * self.inner.order + y]
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        if self.inner.order >= 2 {
            1
        } else {
            0
        }
    }

    pub fn add_table(&self) -> &[usize] {
        &self.inner.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.inner.mul
    }

    /// Re-runs the validator on this semiring's own tables.
    pub fn self_check(&self) -> ValidationReport {
        validate_tables(
            self.inner.order,
            &self.inner.names,
            &self.inner.add,
            &self.inner.mul,
            self.zero(),
            self.one(),
        )
        .expect("constructed semirings are structurally sound")
    }

    /// Renders a subset as `{name,name,…}` in index order.
    pub fn set_to_string(&self, set: &BitSet) -> String {
        let mut out = String::from("{");
        for (k, i) in set.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.element_name(i));
        }
        out.push('}');
        out
    }

    /// Returns a copy sharing no structure, with a new display title.
    pub fn renamed(&self, name: &str) -> Self {
        FiniteSemiring {
            inner: Arc::new(Inner {
                name: name.to_string(),
                names: self.inner.names.clone(),
                order: self.inner.order,
                add: self.inner.add.clone(),
                mul: self.inner.mul.clone(),
            }),
        }
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Names for the interior elements of a chain: `a`, `b`, … then `m24`, `m25`, …
fn middle_label(i: usize) -> String {
    if i < 24 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("m{i}")
    }
}
