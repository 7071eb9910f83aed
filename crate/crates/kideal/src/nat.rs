//! Ideals of the infinite semiring (ℕ, +, ·), modeled exactly as
//! eventually periodic subsets.
//!
//! A finitely generated ideal of ℕ is an additive numerical set
//! `{Σ aᵢgᵢ}`; past a finite conductor its membership depends only on the
//! residue mod gcd of the generators.  Every operation here (subtractivity
//! checking, k-closure, sums, intersections) therefore terminates by
//! scanning a finite window whose sufficiency is argued at each use site.
//!
//! The motivating example: 2ℕ and 3ℕ are k-ideals, but their sum
//! 2ℕ + 3ℕ = ℕ∖{1} is not — the witness is x = 2, y = 1 with
//! 2 ∈ I, 2 + 1 ∈ I, 1 ∉ I — and its k-closure is all of ℕ.

use crate::error::{Error, Result};

/// A subset of ℕ with membership `low[n]` below `threshold` and
/// `residues[n mod period]` from `threshold` on, kept in canonical form
/// (minimal period, then minimal threshold).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventuallyPeriodicSet {
    threshold: usize,
    period: usize,
    low: Vec<bool>,
    residues: Vec<bool>,
}

impl EventuallyPeriodicSet {
    pub fn new(
        threshold: usize,
        period: usize,
        low: Vec<bool>,
        residues: Vec<bool>,
    ) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidParameter("period must be positive".into()));
        }
        if low.len() != threshold || residues.len() != period {
            return Err(Error::InvalidParameter(
                "membership bits must match the threshold and period".into(),
            ));
        }
        let mut set = EventuallyPeriodicSet { threshold, period, low, residues };
        set.canonicalize();
        Ok(set)
    }

    /// Build from a membership function sampled on `[0, threshold + period)`.
    fn from_window(threshold: usize, period: usize, member: impl Fn(usize) -> bool) -> Self {
        let low = (0..threshold).map(&member).collect();
        let mut residues = vec![false; period];
        for n in threshold..threshold + period {
            residues[n % period] = member(n);
        }
        let mut set = EventuallyPeriodicSet { threshold, period, low, residues };
        set.canonicalize();
        set
    }

    fn canonicalize(&mut self) {
        let divisor = (1..=self.period)
            .find(|d| {
                self.period % d == 0
                    && (0..self.period).all(|i| self.residues[i] == self.residues[i % d])
            })
            .expect("the full period always qualifies");
        self.residues.truncate(divisor);
        self.period = divisor;
        while self.threshold > 0 && self.low[self.threshold - 1] == self.residues[(self.threshold - 1) % self.period]
        {
            self.low.pop();
            self.threshold -= 1;
        }
    }

    pub fn contains(&self, n: usize) -> bool {
        if n < self.threshold {
            self.low[n]
        } else {
            self.residues[n % self.period]
        }
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn low(&self) -> &[bool] {
        &self.low
    }

    pub fn residues(&self) -> &[bool] {
        &self.residues
    }

    pub fn is_finite(&self) -> bool {
        self.residues.iter().all(|&r| !r)
    }

    pub fn members_below(&self, limit: usize) -> Vec<usize> {
        (0..limit).filter(|&n| self.contains(n)).collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let threshold = self.threshold.max(other.threshold);
        let period = lcm(self.period, other.period);
        Self::from_window(threshold, period, |n| self.contains(n) && other.contains(n))
    }

    /// `T=.. p=.. low=.. residues=..` with bits rendered 0/1 and `-` for an
    /// empty low window.
    pub fn summary(&self) -> String {
        let bits = |v: &[bool]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|&b| if b { '1' } else { '0' }).collect()
            }
        };
        format!(
            "T={} p={} low={} residues={}",
            self.threshold,
            self.period,
            bits(&self.low),
            bits(&self.residues)
        )
    }

    /// Human-readable description: `N`, `2N`, `N \ {1}`, a finite listing,
    /// or a generic periodicity note.
    pub fn describe(&self) -> String {
        if self.is_finite() {
            let members: Vec<String> = self
                .members_below(self.threshold)
                .into_iter()
                .map(|n| n.to_string())
                .collect();
            return format!("{{{}}}", members.join(","));
        }
        if self.threshold == 0 && self.period == 1 {
            return "N".to_string();
        }
        if self.threshold == 0 && self.residues[0] && self.residues[1..].iter().all(|&r| !r) {
            return format!("{}N", self.period);
        }
        if self.period == 1 && self.residues[0] {
            let missing: Vec<String> = (0..self.threshold)
                .filter(|&n| !self.low[n])
                .map(|n| n.to_string())
                .collect();
            return format!("N \\ {{{}}}", missing.join(","));
        }
        format!(
            "eventually periodic with period {} from {}",
            self.period, self.threshold
        )
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// An ideal of ℕ: contains 0, closed under addition, closed under
/// multiplication by every natural.  Values of this type only arise from
/// [`NatIdeal::from_generators`], [`NatIdeal::zero`], and the
/// ideal-preserving operations, so the invariants hold by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatIdeal {
    set: EventuallyPeriodicSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Intersect,
}

impl NatIdeal {
    /// The ideal `{0}`.
    pub fn zero() -> Self {
        NatIdeal {
            set: EventuallyPeriodicSet::new(1, 1, vec![true], vec![false]).unwrap(),
        }
    }

    /// `⟨g₁,…,gₘ⟩ = {Σ aᵢgᵢ}` — the additive monoid generated, which in ℕ
    /// is automatically closed under multiplication by naturals.
    pub fn from_generators(generators: &[usize]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidParameter("at least one generator is required".into()));
        }
        if generators.contains(&0) {
            return Err(Error::InvalidParameter("generators must be positive".into()));
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        let max = *generators.iter().max().unwrap();
        // Dividing by g maps the set onto a numerical semigroup with gcd 1
        // and largest generator max/g, whose complement is bounded by the
        // square of that generator; scaling back, membership beyond
        // max²/g + max is exactly "divisible by g", so this threshold is a
        // safe over-approximation and canonicalization shrinks it after.
        let threshold = max * max / g + max;
        let mut reachable = vec![false; threshold + g];
        reachable[0] = true;
        for n in 1..reachable.len() {
            reachable[n] = generators.iter().any(|&gi| n >= gi && reachable[n - gi]);
        }
        Ok(NatIdeal {
            set: EventuallyPeriodicSet::from_window(threshold, g, |n| reachable[n]),
        })
    }

    pub fn set(&self) -> &EventuallyPeriodicSet {
        &self.set
    }

    pub fn contains(&self, n: usize) -> bool {
        self.set.contains(n)
    }

    /// First subtractivity violation `(x, y)` — `x ∈ I`, `x + y ∈ I`,
    /// `y ∉ I` — or `None` when the ideal is a k-ideal.
    ///
    /// Scanning `x, y < T + 2p` decides this exactly: given any violation,
    /// y can be lowered by p while y ≥ T + p (y and y − p share a residue,
    /// and x + y ≥ T + p keeps x + y − p ≥ T in the same residue class, so
    /// both memberships survive), and then x can be lowered by p the same
    /// way while x ≥ T + p.
    pub fn subtractive_violation(&self) -> Option<(usize, usize)> {
        let window = self.set.threshold + 2 * self.set.period;
        for x in 0..window {
            if !self.contains(x) {
                continue;
            }
            for y in 0..window {
                if self.contains(x + y) && !self.contains(y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_k_ideal(&self) -> bool {
        self.subtractive_violation().is_none()
    }

    /// `C_k(I) = { r : r + x ∈ I for some x ∈ I }`.
    ///
    /// For each r a witness x < T + p suffices: while x ≥ T + p both x and
    /// r + x sit at least p above the threshold, so subtracting p from x
    /// preserves both memberships.  The result is (T, p)-periodic: for
    /// r ≥ T, a witness x for r + p with x ≥ T transfers to r via x + p,
    /// and with x < T the sum r + x ≥ T shares its residue with
    /// r + p + x ∈ I, so x itself witnesses r.
    pub fn k_closure(&self) -> NatIdeal {
        let t = self.set.threshold;
        let p = self.set.period;
        let member = |r: usize| (0..t + p).any(|x| self.contains(x) && self.contains(r + x));
        NatIdeal {
            set: EventuallyPeriodicSet::from_window(t, p, member),
        }
    }

    /// Sum `{x + y}` or intersection of two ideals.
    ///
    /// For the sum, threshold T₁+T₂+L and period L = lcm(p₁, p₂) are
    /// sufficient: in any decomposition n = x + y of n ≥ T₁+T₂+L, one part
    /// sits at least L above its threshold and can absorb a shift of ±L
    /// without changing residue, so membership of n and n + L agree.
    pub fn combine(&self, other: &NatIdeal, op: CombineOp) -> NatIdeal {
        match op {
            CombineOp::Intersect => NatIdeal {
                set: self.set.intersection(&other.set),
            },
            CombineOp::Sum => {
                let period = lcm(self.set.period, other.set.period);
                let threshold = self.set.threshold + other.set.threshold + period;
                let member = |n: usize| {
                    (0..=n).any(|x| self.contains(x) && other.contains(n - x))
                };
                NatIdeal {
                    set: EventuallyPeriodicSet::from_window(threshold, period, member),
                }
            }
        }
    }
}
