//! Sparse multivariate polynomials with exact integer coefficients, divided
//! differences, and Schubert polynomials computed from the longest element.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

/// An exponent vector; `exponents()[i-1]` is the power of `x_i`.
///
/// Trailing zeros are never stored, so equal monomials compare equal.
/// Ordering is graded lexicographic: total degree first, then the exponent
/// vectors lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn with_pair(&self, i: usize, a: u32, b: u32) -> Monomial {
        let mut exps = self.0.clone();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        exps[i - 1] = a;
        exps[i] = b;
        Monomial::new(exps)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut exps = long.0.clone();
        for (e, s) in exps.iter_mut().zip(&short.0) {
            *e += s;
        }
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join(" "))
        }
    }
}

/// A polynomial in `x_1, x_2, ...` with `i64` coefficients.
///
/// Arithmetic is checked; any coefficient overflow panics rather than wrap.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(Monomial::one(), 1)
    }

    pub fn var(i: usize) -> Self {
        Polynomial::monomial(Monomial::var(i), 1)
    }

    pub fn monomial(m: Monomial, coeff: i64) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in canonical order: descending graded lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(coeff).expect("coefficient overflow");
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Largest total degree among the terms, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// `S_w(1, 1, ..., 1)`, the sum of the coefficients.
    pub fn evaluate_all_ones(&self) -> i64 {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .expect("coefficient overflow")
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.with_pair(i, m.exponent(i + 1), m.exponent(i)), c);
        }
        out
    }

    /// `(f - s_i f) / (x_i - x_{i+1})`, evaluated term by term: a monomial
    /// `x_i^a x_{i+1}^b m` maps to `m * sum_{t=b}^{a-1} x_i^t x_{i+1}^{a+b-1-t}`
    /// when `a > b`, to the negated mirror image when `a < b`, and to zero
    /// when `a == b`.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        assert!(i >= 1, "divided differences are indexed from 1");
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let (a, b) = (m.exponent(i), m.exponent(i + 1));
            let (lo, hi, sign) = match a.cmp(&b) {
                Ordering::Equal => continue,
                Ordering::Greater => (b, a, 1),
                Ordering::Less => (a, b, -1),
            };
            for t in lo..hi {
                out.add_term(m.with_pair(i, t, a + b - 1 - t), sign * c);
            }
        }
        out
    }

    /// The text form, e.g. `x1^2 x2 - 3 * x3 + 1`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_term_list(&self) -> Vec<Term> {
        self.terms()
            .map(|(m, c)| Term { coefficient: c, exponents: m.exponents().to_vec() })
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.unsigned_abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} * {m}")?;
            }
        }
        Ok(())
    }
}

/// One entry of the JSON term array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: i64,
    pub exponents: Vec<u32>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_term_list().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let mut p = Polynomial::zero();
        for t in terms {
            p.add_term(Monomial::new(t.exponents), t.coefficient);
        }
        Ok(p)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| (m.clone(), c.checked_neg().expect("coefficient overflow")))
            .collect();
        Polynomial { terms }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl FromIterator<(Monomial, i64)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Monomial, i64)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

/// Memo table of Schubert polynomials computed by divided differences.
///
/// `S_{w0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}`, and `S_w = d_i S_{w s_i}`
/// whenever `w(i) < w(i+1)`. The table is keyed by the full word, so one
/// memo can hold several `S_n` at once.
#[derive(Debug, Default)]
pub struct SchubertMemo {
    table: HashMap<Permutation, Polynomial>,
}

impl SchubertMemo {
    pub fn new() -> Self {
        SchubertMemo::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&mut self, w: &Permutation) -> Polynomial {
        if let Some(p) = self.table.get(w) {
            return p.clone();
        }
        let p = match w.ascents().next() {
            None => staircase_monomial(w.size()),
            Some(i) => self.get(&w.swap_positions(i)).divided_difference(i),
        };
        self.table.insert(w.clone(), p.clone());
        p
    }

    /// Like [`SchubertMemo::get`] but descends through the given ascent first.
    pub fn get_via(&mut self, w: &Permutation, ascent: usize) -> Polynomial {
        assert!(w.at(ascent) < w.at(ascent + 1), "{ascent} is not an ascent of {w}");
        self.get(&w.swap_positions(ascent)).divided_difference(ascent)
    }
}

fn staircase_monomial(n: usize) -> Polynomial {
    let exps = (1..n).rev().map(|e| e as u32).collect();
    Polynomial::monomial(Monomial::new(exps), 1)
}

/// `S_w` by divided differences, with a fresh memo table.
pub fn schubert_divdiff(w: &Permutation) -> Polynomial {
    SchubertMemo::new().get(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    fn mono(exps: &[u32]) -> Polynomial {
        Polynomial::monomial(Monomial::new(exps.to_vec()), 1)
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        let f = &x(1) + &x(2);
        assert_eq!(&f + &Polynomial::zero(), f);
        let g = &x(1) - &x(2);
        assert_eq!(&f * &g, &mono(&[2]) - &mono(&[0, 2]));
        assert_eq!(&x(1) * &x(1), mono(&[2]));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn canonical_form_drops_zeros_and_trailing_exponents() {
        assert_eq!(Monomial::new(vec![1, 0, 0]), Monomial::var(1));
        let mut q = Polynomial::zero();
        q.add_term(Monomial::var(2), 3);
        q.add_term(Monomial::var(2), -3);
        assert!(q.is_zero());
        assert_eq!(q, Polynomial::zero());
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(x(1).divided_difference(1), Polynomial::one());
        assert!((&x(1) * &x(2)).divided_difference(1).is_zero());
        assert_eq!(mono(&[2]).divided_difference(1), &x(1) + &x(2));
        assert_eq!(x(2).divided_difference(1), -&Polynomial::one());
        assert!(x(3).divided_difference(1).is_zero());
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert_divdiff(&p("321")), mono(&[2, 1]));
        assert_eq!(schubert_divdiff(&p("132")), &x(1) + &x(2));
        assert_eq!(schubert_divdiff(&p("312")), mono(&[2]));
        assert_eq!(schubert_divdiff(&p("1234")), Polynomial::one());
        assert_eq!(schubert_divdiff(&p("21")), x(1));
        let s1432: Polynomial = [[2, 1, 0], [2, 0, 1], [1, 2, 0], [1, 1, 1], [0, 2, 1]]
            .into_iter()
            .map(|e| (Monomial::new(e.to_vec()), 1))
            .collect();
        assert_eq!(schubert_divdiff(&p("1432")), s1432);
        assert_eq!(schubert_divdiff(&p("2143")), &(&mono(&[2]) + &mono(&[1, 1])) + &mono(&[1, 0, 1]));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(Polynomial::one().evaluate_all_ones(), 1);
        assert_eq!((&x(1) + &x(2)).evaluate_all_ones(), 2);
        assert_eq!(schubert_divdiff(&p("1432")).evaluate_all_ones(), 5);
    }

    #[test]
    fn text_form_is_canonical() {
        assert_eq!((&x(2) + &x(1)).to_text(), "x1 + x2");
        assert_eq!(schubert_divdiff(&p("1432")).to_text(), "x1^2 x2 + x1^2 x3 + x1 x2^2 + x1 x2 x3 + x2^2 x3");
        let f = &(&(&mono(&[2]) * &Polynomial::monomial(Monomial::one(), 3)) - &x(3)) - &Polynomial::one();
        assert_eq!(f.to_text(), "3 * x1^2 - x3 - 1");
        assert_eq!((-&x(1)).to_text(), "-x1");
        assert_eq!(Polynomial::zero().to_text(), "0");
        assert_eq!(Polynomial::one().to_text(), "1");
    }

    #[test]
    fn json_term_array() {
        let f = &x(1) + &mono(&[0, 2]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"[{"coefficient":1,"exponents":[0,2]},{"coefficient":1,"exponents":[1]}]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), f);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_detected() {
        let big = Polynomial::monomial(Monomial::one(), i64::MAX);
        let _ = &big + &Polynomial::one();
    }

    #[test]
    fn memo_is_shared_across_permutations() {
        let mut memo = SchubertMemo::new();
        for w in Permutation::all(4) {
            memo.get(&w);
        }
        assert_eq!(memo.len(), 24);
    }

    #[test]
    fn ascent_choice_does_not_matter() {
        let mut memo = SchubertMemo::new();
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let canonical = memo.get(&w);
                let ascents: Vec<_> = w.ascents().collect();
                for i in ascents {
                    assert_eq!(memo.get_via(&w, i), canonical, "{w} via {i}");
                }
            }
        }
    }

    #[test]
    fn schubert_is_positive_and_homogeneous() {
        let mut memo = SchubertMemo::new();
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let s = memo.get(&w);
                assert!(s.terms().all(|(_, c)| c > 0), "{w}: {s}");
                assert!(s.is_homogeneous_of_degree(w.length() as u32), "{w}: {s}");
                assert!(!s.is_zero());
            }
        }
    }
}
