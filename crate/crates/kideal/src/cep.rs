//! Transfer of k-ideals along homomorphisms: contraction `J^c = φ⁻¹(J)`,
//! extension `I^e = C_k(⟨φ(I)⟩)`, and the verification of the calculus
//! relating them.
//!
//! [`cep_verify`] checks, for one homomorphism, the full list of
//! contraction/extension laws over every k-ideal (or pair of k-ideals) of
//! the source and target:
//!
//! * `J^c`, `ker φ`, and `I^e` are k-ideals;
//! * `I ⊆ I^{ec}`, `J ⊇ J^{ce}`, `J^c = J^{cec}`, `I^e = I^{ece}`;
//! * extension and contraction restrict to mutually inverse bijections
//!   between `{I : I^{ec} = I}` and `{J : J^{ce} = J}`;
//! * `(I₁∩I₂)^e ⊆ I₁^e∩I₂^e`, `(I₁I₂)^e = I₁^eI₂^e`,
//!   `(I₁:I₂)^e ⊆ (I₁^e:I₂^e)`, `(R_k(I))^e ⊆ R_k(I^e)`;
//! * `(J₁∩J₂)^c = J₁^c∩J₂^c`, `(J₁J₂)^c ⊇ J₁^cJ₂^c`,
//!   `(J₁:J₂)^c ⊆ (J₁^c:J₂^c)`;
//! * `R_k(J)^c ⊆ R_k(J^c)`.
//!
//! Four additional probe records (tags `L7a`–`L7d`) evaluate the
//! source-side counterparts of the contraction laws with the strongest
//! direction one might hope for — equality for intersections and
//! radicals — without asserting them; their outcomes are reported so
//! strictness can be observed where it occurs.

use crate::bitset::BitSet;
use crate::classify::{Classifier, RadicalMode};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::ideal::{
    generated, ideal_quotient, is_k_ideal, k_closure_set, k_product_set, subtractive_violation,
};

/// Status of one verified law, aggregated over all instances for one
/// homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemStatus {
    /// Holds with equality in every instance.
    Equal,
    /// The stated inclusion holds everywhere and is strict somewhere.
    Strict,
    /// Violated somewhere.
    Fail,
}

impl ItemStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ItemStatus::Equal => "EQUAL",
            ItemStatus::Strict => "STRICT",
            ItemStatus::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ItemRecord {
    /// Stable tag: `"1"`–`"8"` with letters, or `"L7a"`–`"L7d"` for the
    /// unasserted probes.
    pub item: &'static str,
    pub status: ItemStatus,
    /// First strict or failing instance, in carrier names.
    pub witness: Option<String>,
}

/// Outcome of [`cep_verify`] for a single homomorphism.
#[derive(Debug, Clone)]
pub struct CepReport {
    pub hom: Homomorphism,
    /// Records in a fixed order: the asserted items first, then the four
    /// probes.
    pub items: Vec<ItemRecord>,
}

impl CepReport {
    /// True when no asserted item failed.  Probe records never count.
    pub fn asserted_ok(&self) -> bool {
        self.items
            .iter()
            .all(|r| r.item.starts_with('L') || r.status != ItemStatus::Fail)
    }

    pub fn item(&self, tag: &str) -> &ItemRecord {
        self.items
            .iter()
            .find(|r| r.item == tag)
            .expect("every report carries the full item list")
    }

    /// One `CEP <label> ITEM <tag> <STATUS> [witness]` line per record.
    pub fn render_lines(&self, label: &str) -> Vec<String> {
        self.items
            .iter()
            .map(|r| {
                let mut line = format!("CEP {label} ITEM {} {}", r.item, r.status.as_str());
                if let Some(w) = &r.witness {
                    line.push(' ');
                    line.push_str(w);
                }
                line
            })
            .collect()
    }
}

fn require_k_ideal_of(
    ring: &crate::semiring::FiniteSemiring,
    set: &BitSet,
) -> Result<()> {
    if set.universe() != ring.order() {
        return Err(Error::ParentMismatch);
    }
    if crate::ideal::ideal_violation(ring, set).is_some()
        || subtractive_violation(ring, set).is_some()
    {
        return Err(Error::Precondition("expected a k-ideal".into()));
    }
    Ok(())
}

/// `J^c = φ⁻¹(J)` for a k-ideal `J` of the target.
pub fn contraction(hom: &Homomorphism, j: &BitSet) -> Result<BitSet> {
    require_k_ideal_of(hom.target(), j)?;
    Ok(contraction_unchecked(hom, j))
}

fn contraction_unchecked(hom: &Homomorphism, j: &BitSet) -> BitSet {
    let mut out = BitSet::empty(hom.source().order());
    for x in 0..hom.source().order() {
        if j.contains(hom.apply(x)) {
            out.insert(x);
        }
    }
    out
}

/// `I^e = C_k(⟨φ(I)⟩)` for a k-ideal `I` of the source.
pub fn extension(hom: &Homomorphism, i: &BitSet) -> Result<BitSet> {
    require_k_ideal_of(hom.source(), i)?;
    Ok(extension_unchecked(hom, i))
}

fn extension_unchecked(hom: &Homomorphism, i: &BitSet) -> BitSet {
    let mut image = BitSet::empty(hom.target().order());
    for x in i.iter() {
        image.insert(hom.apply(x));
    }
    k_closure_set(hom.target(), &generated(hom.target(), &image))
}

/// `ker φ = φ⁻¹({0})`.
pub fn kernel_ideal(hom: &Homomorphism) -> BitSet {
    let zero = BitSet::singleton(hom.target().order(), hom.target().zero());
    contraction_unchecked(hom, &zero)
}

struct Verifier<'a> {
    hom: &'a Homomorphism,
    source_k: Vec<BitSet>,
    target_k: Vec<BitSet>,
    source_cls: Classifier,
    target_cls: Classifier,
}

impl<'a> Verifier<'a> {
    fn sname(&self, s: &BitSet) -> String {
        self.hom.source().set_to_string(s)
    }

    fn tname(&self, s: &BitSet) -> String {
        self.hom.target().set_to_string(s)
    }

    fn ext(&self, i: &BitSet) -> BitSet {
        extension_unchecked(self.hom, i)
    }

    fn con(&self, j: &BitSet) -> BitSet {
        contraction_unchecked(self.hom, j)
    }

    fn srad(&self, i: &BitSet) -> BitSet {
        self.source_cls
            .k_radical(i, RadicalMode::Intersection)
            .expect("radical of a k-ideal")
    }

    fn trad(&self, j: &BitSet) -> BitSet {
        self.target_cls
            .k_radical(j, RadicalMode::Intersection)
            .expect("radical of a k-ideal")
    }

    fn property(
        &self,
        item: &'static str,
        mut instances: impl Iterator<Item = (bool, String)>,
    ) -> ItemRecord {
        match instances.find(|(ok, _)| !ok) {
            None => ItemRecord { item, status: ItemStatus::Equal, witness: None },
            Some((_, w)) => ItemRecord { item, status: ItemStatus::Fail, witness: Some(w) },
        }
    }

    /// Aggregate an inclusion law: fail beats strict beats equal, first
    /// witness in scan order.
    fn inclusion(
        &self,
        item: &'static str,
        instances: impl Iterator<Item = (BitSet, BitSet, String)>,
    ) -> ItemRecord {
        let mut strict: Option<String> = None;
        for (lhs, rhs, label) in instances {
            if !lhs.is_subset(&rhs) {
                return ItemRecord {
                    item,
                    status: ItemStatus::Fail,
                    witness: Some(label),
                };
            }
            if strict.is_none() && lhs != rhs {
                strict = Some(label);
            }
        }
        match strict {
            None => ItemRecord { item, status: ItemStatus::Equal, witness: None },
            Some(w) => ItemRecord { item, status: ItemStatus::Strict, witness: Some(w) },
        }
    }

    fn equality(
        &self,
        item: &'static str,
        instances: impl Iterator<Item = (BitSet, BitSet, String)>,
    ) -> ItemRecord {
        self.property(
            item,
            instances.map(|(lhs, rhs, label)| (lhs == rhs, label)),
        )
    }

    fn source_pairs(&self) -> impl Iterator<Item = (&BitSet, &BitSet)> {
        self.source_k
            .iter()
            .flat_map(|a| self.source_k.iter().map(move |b| (a, b)))
    }

    fn target_pairs(&self) -> impl Iterator<Item = (&BitSet, &BitSet)> {
        self.target_k
            .iter()
            .flat_map(|a| self.target_k.iter().map(move |b| (a, b)))
    }

    fn run(&self) -> Vec<ItemRecord> {
        let source = self.hom.source();
        let target = self.hom.target();
        let mut items = Vec::new();

        items.push(self.property(
            "1",
            self.target_k.iter().map(|j| {
                (is_k_ideal(source, &self.con(j)), format!("J={}", self.tname(j)))
            }),
        ));
        let kernel = kernel_ideal(self.hom);
        items.push(self.property(
            "2",
            std::iter::once((
                is_k_ideal(source, &kernel),
                format!("ker={}", self.sname(&kernel)),
            )),
        ));
        items.push(self.property(
            "3",
            self.source_k.iter().map(|i| {
                (is_k_ideal(target, &self.ext(i)), format!("I={}", self.sname(i)))
            }),
        ));

        items.push(self.inclusion(
            "4a",
            self.source_k.iter().map(|i| {
                let ec = self.con(&self.ext(i));
                let label = format!("I={} ec={}", self.sname(i), self.sname(&ec));
                (i.clone(), ec, label)
            }),
        ));
        items.push(self.inclusion(
            "4b",
            self.target_k.iter().map(|j| {
                let ce = self.ext(&self.con(j));
                let label = format!("J={} ce={}", self.tname(j), self.tname(&ce));
                (ce, j.clone(), label)
            }),
        ));
        items.push(self.equality(
            "4c",
            self.target_k.iter().map(|j| {
                let c = self.con(j);
                let cec = self.con(&self.ext(&c));
                let label = format!("J={} c={} cec={}", self.tname(j), self.sname(&c), self.sname(&cec));
                (c, cec, label)
            }),
        ));
        items.push(self.equality(
            "4d",
            self.source_k.iter().map(|i| {
                let e = self.ext(i);
                let ece = self.ext(&self.con(&e));
                let label = format!("I={} e={} ece={}", self.sname(i), self.tname(&e), self.tname(&ece));
                (e, ece, label)
            }),
        ));

        items.push(self.bijection_item());

        items.push(self.inclusion(
            "6a",
            self.source_pairs().map(|(a, b)| {
                let lhs = self.ext(&a.intersection(b));
                let rhs = self.ext(a).intersection(&self.ext(b));
                let label = format!(
                    "I1={} I2={} lhs={} rhs={}",
                    self.sname(a), self.sname(b), self.tname(&lhs), self.tname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));
        items.push(self.equality(
            "6b",
            self.source_pairs().map(|(a, b)| {
                let lhs = self.ext(&k_product_set(source, a, b));
                let rhs = k_product_set(target, &self.ext(a), &self.ext(b));
                let label = format!(
                    "I1={} I2={} lhs={} rhs={}",
                    self.sname(a), self.sname(b), self.tname(&lhs), self.tname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));
        items.push(self.inclusion(
            "6c",
            self.source_pairs().map(|(a, b)| {
                let lhs = self.ext(&ideal_quotient(source, a, b));
                let rhs = ideal_quotient(target, &self.ext(a), &self.ext(b));
                let label = format!(
                    "I1={} I2={} lhs={} rhs={}",
                    self.sname(a), self.sname(b), self.tname(&lhs), self.tname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));
        items.push(self.inclusion(
            "6d",
            self.source_k.iter().map(|i| {
                let lhs = self.ext(&self.srad(i));
                let rhs = self.trad(&self.ext(i));
                let label = format!("I={} lhs={} rhs={}", self.sname(i), self.tname(&lhs), self.tname(&rhs));
                (lhs, rhs, label)
            }),
        ));

        items.push(self.equality(
            "7a",
            self.target_pairs().map(|(a, b)| {
                let lhs = self.con(&a.intersection(b));
                let rhs = self.con(a).intersection(&self.con(b));
                let label = format!(
                    "J1={} J2={} lhs={} rhs={}",
                    self.tname(a), self.tname(b), self.sname(&lhs), self.sname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));
        items.push(self.inclusion(
            "7b",
            self.target_pairs().map(|(a, b)| {
                let big = self.con(&k_product_set(target, a, b));
                let small = k_product_set(source, &self.con(a), &self.con(b));
                let label = format!(
                    "J1={} J2={} lhs={} rhs={}",
                    self.tname(a), self.tname(b), self.sname(&big), self.sname(&small),
                );
                (small, big, label)
            }),
        ));
        items.push(self.inclusion(
            "7c",
            self.target_pairs().map(|(a, b)| {
                let lhs = self.con(&ideal_quotient(target, a, b));
                let rhs = ideal_quotient(source, &self.con(a), &self.con(b));
                let label = format!(
                    "J1={} J2={} lhs={} rhs={}",
                    self.tname(a), self.tname(b), self.sname(&lhs), self.sname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));

        items.push(self.inclusion(
            "8",
            self.target_k.iter().map(|j| {
                let lhs = self.con(&self.trad(j));
                let rhs = self.srad(&self.con(j));
                let label = format!("J={} lhs={} rhs={}", self.tname(j), self.sname(&lhs), self.sname(&rhs));
                (lhs, rhs, label)
            }),
        ));

        items.push(self.equality(
            "L7a",
            self.source_pairs().map(|(a, b)| {
                let lhs = self.ext(&a.intersection(b));
                let rhs = self.ext(a).intersection(&self.ext(b));
                let label = format!(
                    "I1={} I2={} lhs={} rhs={}",
                    self.sname(a), self.sname(b), self.tname(&lhs), self.tname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));
        items.push(self.inclusion(
            "L7b",
            self.source_pairs().map(|(a, b)| {
                let big = self.ext(&k_product_set(source, a, b));
                let small = k_product_set(target, &self.ext(a), &self.ext(b));
                let label = format!(
                    "I1={} I2={} lhs={} rhs={}",
                    self.sname(a), self.sname(b), self.tname(&big), self.tname(&small),
                );
                (small, big, label)
            }),
        ));
        items.push(self.inclusion(
            "L7c",
            self.source_pairs().map(|(a, b)| {
                let lhs = self.ext(&ideal_quotient(source, a, b));
                let rhs = ideal_quotient(target, &self.ext(a), &self.ext(b));
                let label = format!(
                    "I1={} I2={} lhs={} rhs={}",
                    self.sname(a), self.sname(b), self.tname(&lhs), self.tname(&rhs),
                );
                (lhs, rhs, label)
            }),
        ));
        items.push(self.equality(
            "L7d",
            self.source_k.iter().map(|i| {
                let lhs = self.ext(&self.srad(i));
                let rhs = self.trad(&self.ext(i));
                let label = format!("I={} lhs={} rhs={}", self.sname(i), self.tname(&lhs), self.tname(&rhs));
                (lhs, rhs, label)
            }),
        ));

        items
    }

    fn bijection_item(&self) -> ItemRecord {
        let fixed_i: Vec<&BitSet> = self
            .source_k
            .iter()
            .filter(|i| self.con(&self.ext(i)) == **i)
            .collect();
        let fixed_j: Vec<&BitSet> = self
            .target_k
            .iter()
            .filter(|j| self.ext(&self.con(j)) == **j)
            .collect();
        for i in &fixed_i {
            let e = self.ext(i);
            if self.ext(&self.con(&e)) != e {
                return ItemRecord {
                    item: "5",
                    status: ItemStatus::Fail,
                    witness: Some(format!("I={} escapes the fixed target set", self.sname(i))),
                };
            }
        }
        for j in &fixed_j {
            let c = self.con(j);
            if self.con(&self.ext(&c)) != c {
                return ItemRecord {
                    item: "5",
                    status: ItemStatus::Fail,
                    witness: Some(format!("J={} escapes the fixed source set", self.tname(j))),
                };
            }
        }
        if fixed_i.len() != fixed_j.len() {
            return ItemRecord {
                item: "5",
                status: ItemStatus::Fail,
                witness: Some(format!(
                    "fixed sets have sizes {} and {}",
                    fixed_i.len(),
                    fixed_j.len()
                )),
            };
        }
        ItemRecord { item: "5", status: ItemStatus::Equal, witness: None }
    }
}

/// Verify the whole contraction/extension calculus for one homomorphism.
pub fn cep_verify(hom: &Homomorphism) -> Result<CepReport> {
    let source_cls = Classifier::new(hom.source())?;
    let target_cls = Classifier::new(hom.target())?;
    let verifier = Verifier {
        hom,
        source_k: source_cls.k_ideals().to_vec(),
        target_k: target_cls.k_ideals().to_vec(),
        source_cls,
        target_cls,
    };
    Ok(CepReport { hom: hom.clone(), items: verifier.run() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::by_name;
    use crate::hom::enumerate_homomorphisms;
    use crate::ideal::{enumerate_ideals, IdealSet};
    use crate::semiring::FiniteSemiring;

    fn set(ring: &FiniteSemiring, names: &[&str]) -> BitSet {
        IdealSet::from_names(ring, names).unwrap().members().clone()
    }

    fn mod_two() -> Homomorphism {
        let z4 = by_name("Z4").unwrap();
        let z2 = by_name("Z2").unwrap();
        enumerate_homomorphisms(&z4, &z2).remove(0)
    }

    #[test]
    fn contraction_examples() {
        let hom = mod_two();
        let z4 = hom.source().clone();
        let z2 = hom.target().clone();
        assert_eq!(contraction(&hom, &set(&z2, &["0"])).unwrap(), set(&z4, &["0", "2"]));
        assert_eq!(contraction(&hom, &BitSet::full(2)).unwrap(), BitSet::full(4));
        let b = by_name("B").unwrap();
        let id = Homomorphism::identity(&b);
        assert_eq!(contraction(&id, &set(&b, &["0"])).unwrap(), set(&b, &["0"]));
    }

    #[test]
    fn extension_examples() {
        let hom = mod_two();
        let z4 = hom.source().clone();
        let z2 = hom.target().clone();
        assert_eq!(extension(&hom, &set(&z4, &["0", "2"])).unwrap(), set(&z2, &["0"]));
        assert_eq!(extension(&hom, &set(&z4, &["0"])).unwrap(), set(&z2, &["0"]));
    }

    #[test]
    fn extension_along_identity_fixes_every_k_ideal() {
        for ring in crate::corpus::corpus() {
            let id = Homomorphism::identity(&ring);
            for i in enumerate_ideals(&ring, true).unwrap() {
                assert_eq!(extension(&id, &i).unwrap(), i);
            }
        }
    }

    #[test]
    fn kernels() {
        let hom = mod_two();
        assert_eq!(kernel_ideal(&hom), set(hom.source(), &["0", "2"]));
        let c3 = by_name("C3").unwrap();
        assert_eq!(
            kernel_ideal(&Homomorphism::identity(&c3)),
            set(&c3, &["0"])
        );
        let z2 = by_name("Z2").unwrap();
        assert_eq!(
            kernel_ideal(&Homomorphism::identity(&z2)),
            set(&z2, &["0"])
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        let hom = mod_two();
        let z4 = hom.source().clone();
        // {0,3} is an ideal of N3 but belongs to the wrong ring entirely.
        assert!(matches!(
            contraction(&hom, &BitSet::full(4)),
            Err(Error::ParentMismatch)
        ));
        // {0} is not a k-ideal requirement violation on the source side.
        assert!(extension(&hom, &set(&z4, &["0"])).is_ok());
        assert!(matches!(
            extension(&hom, &BitSet::full(2)),
            Err(Error::ParentMismatch)
        ));
    }

    #[test]
    fn mod_two_report() {
        let report = cep_verify(&mod_two()).unwrap();
        assert!(report.asserted_ok());
        assert_eq!(report.item("4a").status, ItemStatus::Strict);
        assert!(report.item("4a").witness.as_deref().unwrap().contains("I={0}"));
        assert_eq!(report.item("4b").status, ItemStatus::Equal);
        assert_eq!(report.item("4c").status, ItemStatus::Equal);
        assert_eq!(report.item("4d").status, ItemStatus::Equal);
        assert_eq!(report.item("5").status, ItemStatus::Equal);
        assert_eq!(report.item("8").status, ItemStatus::Equal);
        assert_eq!(report.item("L7a").status, ItemStatus::Equal);
    }

    #[test]
    fn whole_source_extends_to_whole_target() {
        for (a, b) in [("Z4", "Z2"), ("C3", "B"), ("Z2xB", "B")] {
            let src = by_name(a).unwrap();
            let tgt = by_name(b).unwrap();
            for hom in enumerate_homomorphisms(&src, &tgt) {
                let whole = BitSet::full(src.order());
                assert_eq!(extension(&hom, &whole).unwrap(), BitSet::full(tgt.order()));
                let report = cep_verify(&hom).unwrap();
                assert!(report.asserted_ok(), "{a}->{b}: {:?}", report.items);
            }
        }
    }

    #[test]
    fn report_lines_are_labeled() {
        let report = cep_verify(&mod_two()).unwrap();
        let lines = report.render_lines("Z4->Z2#0");
        assert_eq!(lines.len(), 20);
        assert!(lines[0].starts_with("CEP Z4->Z2#0 ITEM 1 "));
        assert!(lines.iter().any(|l| l.starts_with("CEP Z4->Z2#0 ITEM 4a STRICT ")));
    }
}
