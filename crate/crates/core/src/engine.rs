//! Generic sum identities for sequences obeying a second- or third-order
//! linear rule `X_m = f1 X_{m-a} + f2 X_{m-b} (+ f3 X_{m-c})`.
//!
//! Nothing here knows about Fibonacci numbers. Each identity is expressed as
//! two linear combinations of terms `X_i`; the touched index window is
//! computed up front and checked against the accessor's domain before a
//! single term is read.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_traits::{One, Zero};

use crate::exact::{powers, powi, Integer, LazySum, Rational};
use crate::seq::binom_row;
use crate::{Error, Result};

/// A deterministic map from integer index to an exact term value.
pub trait TermAccessor: Sync {
    fn term(&self, m: i64) -> Rational;

    /// Inclusive index window on which the accessor is defined; `None` means
    /// every integer.
    fn domain(&self) -> Option<(i64, i64)> {
        None
    }
}

impl<F> TermAccessor for F
where
    F: Fn(i64) -> Rational + Sync,
{
    fn term(&self, m: i64) -> Rational {
        self(m)
    }
}

/// Both evaluated sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumComparison {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl SumComparison {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        SumComparison { lhs, rhs, equal }
    }

    /// Multiplies both sides by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        SumComparison::new(&self.lhs * factor, &self.rhs * factor)
    }
}

/// A linear recurrence `X_m = sum_i coef_i X_{m - offset_i}`.
pub trait Recurrence {
    /// `(coefficient, offset)` pairs of the right-hand side.
    fn terms(&self) -> Vec<(Rational, i64)>;
}

/// `X_m = f1 X_{m-a} + f2 X_{m-b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondOrderRule {
    pub f1: Rational,
    pub f2: Rational,
    pub a: i64,
    pub b: i64,
}

impl SecondOrderRule {
    pub fn new(f1: Rational, f2: Rational, a: i64, b: i64) -> Result<Self> {
        if f1.is_zero() {
            return Err(Error::ZeroCoefficient("f1"));
        }
        if f2.is_zero() {
            return Err(Error::ZeroCoefficient("f2"));
        }
        if a == b {
            return Err(Error::DegenerateOffsets(vec![a, b]));
        }
        Ok(SecondOrderRule { f1, f2, a, b })
    }
}

impl Recurrence for SecondOrderRule {
    fn terms(&self) -> Vec<(Rational, i64)> {
        vec![(self.f1.clone(), self.a), (self.f2.clone(), self.b)]
    }
}

/// `X_m = f1 X_{m-a} + f2 X_{m-b} + f3 X_{m-c}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThirdOrderRule {
    pub f1: Rational,
    pub f2: Rational,
    pub f3: Rational,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ThirdOrderRule {
    pub fn new(f1: Rational, f2: Rational, f3: Rational, a: i64, b: i64, c: i64) -> Result<Self> {
        for (name, f) in [("f1", &f1), ("f2", &f2), ("f3", &f3)] {
            if f.is_zero() {
                return Err(Error::ZeroCoefficient(name));
            }
        }
        if a == b || b == c || a == c {
            return Err(Error::DegenerateOffsets(vec![a, b, c]));
        }
        Ok(ThirdOrderRule { f1, f2, f3, a, b, c })
    }
}

impl Recurrence for ThirdOrderRule {
    fn terms(&self) -> Vec<(Rational, i64)> {
        vec![(self.f1.clone(), self.a), (self.f2.clone(), self.b), (self.f3.clone(), self.c)]
    }
}

/// True iff `x` obeys `rule` at every `m` in `range`.
pub fn rule_satisfied<R, X>(rule: &R, x: &X, range: RangeInclusive<i64>) -> bool
where
    R: Recurrence + ?Sized,
    X: TermAccessor + ?Sized,
{
    let terms = rule.terms();
    range.into_iter().all(|m| {
        let rhs = terms.iter().fold(Rational::zero(), |acc, (f, d)| acc + f * x.term(m - d));
        x.term(m) == rhs
    })
}

/// A sequence produced by unrolling a rule from consecutive seed values,
/// stored over a finite window.
#[derive(Debug, Clone)]
pub struct RuleSequence {
    lo: i64,
    values: Vec<Rational>,
}

impl RuleSequence {
    /// Places `seeds` at indices `0..seeds.len()` and extends in both
    /// directions until `window` is covered.
    ///
    /// The relation is `X_m - sum f_i X_{m-d_i} = 0`; the number of seeds
    /// must equal the spread between its smallest and largest shift, and the
    /// combined coefficients at both extreme shifts must be non-zero.
    pub fn unroll<R>(rule: &R, seeds: &[Rational], window: RangeInclusive<i64>) -> Result<Self>
    where
        R: Recurrence + ?Sized,
    {
        let mut rel: BTreeMap<i64, Rational> = BTreeMap::new();
        rel.insert(0, Rational::one());
        for (f, d) in rule.terms() {
            *rel.entry(d).or_insert_with(Rational::zero) -= f;
        }
        rel.retain(|_, c| !c.is_zero());
        let (lo_shift, hi_shift) = match (rel.keys().next(), rel.keys().next_back()) {
            (Some(&l), Some(&h)) if l != h => (l, h),
            _ => return Err(Error::DegenerateOffsets(rel.keys().copied().collect())),
        };
        let span = hi_shift - lo_shift;
        if seeds.len() as i64 != span {
            return Err(Error::SeedCount { expected: span as usize, got: seeds.len() });
        }
        let lo = (*window.start()).min(0);
        let hi = (*window.end()).max(span - 1);
        let mut values = vec![Rational::zero(); (hi - lo + 1) as usize];
        let at = |p: i64| (p - lo) as usize;
        for (i, s) in seeds.iter().enumerate() {
            values[at(i as i64)] = s.clone();
        }
        let lead = rel[&lo_shift].clone();
        for p in span..=hi {
            let m = p + lo_shift;
            let mut acc = Rational::zero();
            for (d, c) in rel.range((lo_shift + 1)..) {
                acc -= c * &values[at(m - d)];
            }
            values[at(p)] = acc / &lead;
        }
        let trail = rel[&hi_shift].clone();
        for p in (lo..0).rev() {
            let m = p + hi_shift;
            let mut acc = Rational::zero();
            for (d, c) in rel.range(..hi_shift) {
                acc -= c * &values[at(m - d)];
            }
            values[at(p)] = acc / &trail;
        }
        Ok(RuleSequence { lo, values })
    }
}

impl TermAccessor for RuleSequence {
    fn term(&self, m: i64) -> Rational {
        self.values[(m - self.lo) as usize].clone()
    }

    fn domain(&self) -> Option<(i64, i64)> {
        Some((self.lo, self.lo + self.values.len() as i64 - 1))
    }
}

/// `sum coef * X_index`.
type Linear = Vec<(Rational, i64)>;

fn check_window<X: TermAccessor + ?Sized>(x: &X, sides: &[&Linear]) -> Result<()> {
    let Some((lo, hi)) = x.domain() else {
        return Ok(());
    };
    for side in sides {
        for &(_, i) in side.iter() {
            if i < lo || i > hi {
                return Err(Error::OutsideDomain { index: i, lo, hi });
            }
        }
    }
    Ok(())
}

fn eval_linear<X: TermAccessor + ?Sized>(x: &X, side: &Linear) -> Rational {
    let one = Integer::one();
    let mut acc = LazySum::new();
    for (c, i) in side {
        if !c.is_zero() {
            acc.add_product(&one, &[c, &x.term(*i)]);
        }
    }
    acc.finish()
}

fn compare<X: TermAccessor + ?Sized>(x: &X, lhs: Linear, rhs: Linear) -> Result<SumComparison> {
    check_window(x, &[&lhs, &rhs])?;
    Ok(SumComparison::new(eval_linear(x, &lhs), eval_linear(x, &rhs)))
}

fn bound(k: i64) -> Result<usize> {
    if k < 0 {
        Err(Error::NegativeBound(k))
    } else {
        Ok(k as usize)
    }
}

/// The four telescoping weighted sums for a second-order rule.
///
/// | form | sum                                             | closed form                                   |
/// |------|-------------------------------------------------|-----------------------------------------------|
/// | 1    | `f2 Σ f1^j X_{m-b-aj}`                          | `X_m - f1^{k+1} X_{m-(k+1)a}`                 |
/// | 2    | `f1 Σ f2^j X_{m-a-bj}`                          | `X_m - f2^{k+1} X_{m-(k+1)b}`                 |
/// | 3    | `Σ X_{m+a-(b-a)j} / (-f1/f2)^j`                 | `f1 X_m + f2 (-f1/f2)^{-k} X_{m-(k+1)(b-a)}`  |
/// | 4    | `Σ X_{m+b-(a-b)j} / (-f2/f1)^j`                 | `f2 X_m + f1 (-f2/f1)^{-k} X_{m-(k+1)(a-b)}`  |
///
/// Only `k >= 0` is accepted.
pub fn lemma2_sum<X>(form: u8, rule: &SecondOrderRule, x: &X, m: i64, k: i64) -> Result<SumComparison>
where
    X: TermAccessor + ?Sized,
{
    let ku = bound(k)?;
    let SecondOrderRule { f1, f2, a, b } = rule;
    let (a, b) = (*a, *b);
    let (lhs, rhs): (Linear, Linear) = match form {
        1 => {
            let p = powers(f1, ku + 1);
            let lhs = (0..=ku).map(|j| (f2 * &p[j], m - b - a * j as i64)).collect();
            (lhs, vec![(Rational::one(), m), (-&p[ku + 1], m - (k + 1) * a)])
        }
        2 => {
            let p = powers(f2, ku + 1);
            let lhs = (0..=ku).map(|j| (f1 * &p[j], m - a - b * j as i64)).collect();
            (lhs, vec![(Rational::one(), m), (-&p[ku + 1], m - (k + 1) * b)])
        }
        3 => {
            let q = -(f1 / f2);
            let p = powers(&q.recip(), ku);
            let lhs = (0..=ku).map(|j| (p[j].clone(), m + a - (b - a) * j as i64)).collect();
            (lhs, vec![(f1.clone(), m), (f2 * &p[ku], m - (k + 1) * (b - a))])
        }
        4 => {
            let q = -(f2 / f1);
            let p = powers(&q.recip(), ku);
            let lhs = (0..=ku).map(|j| (p[j].clone(), m + b - (a - b) * j as i64)).collect();
            (lhs, vec![(f2.clone(), m), (f1 * &p[ku], m - (k + 1) * (a - b))])
        }
        _ => return Err(Error::UnknownForm { form, max: 4 }),
    };
    compare(x, lhs, rhs)
}

/// The three binomial sums for a second-order rule.
///
/// 1. `Σ C(k,j) (f2/f1)^j X_{m-ak+(a-b)j} = X_m / f1^k`
/// 2. `Σ (-f2)^j C(k,j) X_{m+ak-bj} = f1^k X_m`
/// 3. `Σ (-f1)^j C(k,j) X_{m+bk-aj} = f2^k X_m`
pub fn binomial_sum<X>(form: u8, rule: &SecondOrderRule, x: &X, m: i64, k: i64) -> Result<SumComparison>
where
    X: TermAccessor + ?Sized,
{
    let ku = bound(k)?;
    let SecondOrderRule { f1, f2, a, b } = rule;
    let (a, b) = (*a, *b);
    let (w, base, step, rhs_coef) = match form {
        1 => (f2 / f1, m - a * k, a - b, powi(f1, -k)),
        2 => (-f2.clone(), m + a * k, -b, powi(f1, k)),
        3 => (-f1.clone(), m + b * k, -a, powi(f2, k)),
        _ => return Err(Error::UnknownForm { form, max: 3 }),
    };
    let p = powers(&w, ku);
    let row = binom_row(ku);
    let lhs =
        (0..=ku).map(|j| (&p[j] * Rational::from_integer(row[j].clone()), base + step * j as i64)).collect();
    compare(x, lhs, vec![(rhs_coef, m)])
}

/// Which binomial pair weights a double sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Inner {
    /// `Σ_{j=0}^k Σ_{s=0}^j C(k,j) C(j,s)`
    UpToJ,
    /// `Σ_{j=0}^k Σ_{s=0}^{k-j} C(k,j) C(k-j,s)`
    UpToKMinusJ,
}

/// `Σ C·C w1^j w2^s X_{m + alpha k + beta j + gamma s}` against
/// `rhs_coef X_m`.
struct DoubleSum {
    inner: Inner,
    w1: Rational,
    w2: Rational,
    alpha: i64,
    beta: i64,
    gamma: i64,
    rhs_coef: Rational,
}

impl DoubleSum {
    fn linear(&self, m: i64, k: usize) -> Linear {
        let p1 = powers(&self.w1, k);
        let p2 = powers(&self.w2, k);
        let rows: Vec<Vec<_>> = (0..=k).map(binom_row).collect();
        let base = m + self.alpha * k as i64;
        let mut out = Vec::with_capacity((k + 1) * (k + 2) / 2);
        for j in 0..=k {
            let top = match self.inner {
                Inner::UpToJ => j,
                Inner::UpToKMinusJ => k - j,
            };
            let outer = &p1[j] * Rational::from_integer(rows[k][j].clone());
            for s in 0..=top {
                let coef = &outer * &p2[s] * Rational::from_integer(rows[top][s].clone());
                out.push((coef, base + self.beta * j as i64 + self.gamma * s as i64));
            }
        }
        out
    }
}

fn lemma5_table(form: u8, rule: &ThirdOrderRule, k: i64) -> Result<DoubleSum> {
    let ThirdOrderRule { f1, f2, f3, a, b, c } = rule;
    let (a, b, c) = (*a, *b, *c);
    let neg_inv = |f: &Rational| -f.recip();
    let (w1, w2, alpha, beta, gamma, rhs_coef) = match form {
        1 => (f2 / f3, f1 / f2, -c, c - b, b - a, powi(f3, -k)),
        2 => (f3 / f2, f1 / f3, -b, b - c, c - a, powi(f2, -k)),
        3 => (f3 / f1, f2 / f3, -a, a - c, c - b, powi(f1, -k)),
        4 => (f2 / f3, neg_inv(f2), a - c, c - b, b, powi(&-(f1 / f3), k)),
        5 => (f1 / f3, neg_inv(f1), b - c, c - a, a, powi(&-(f2 / f3), k)),
        6 => (f1 / f2, neg_inv(f1), c - b, b - a, a, powi(&-(f3 / f2), k)),
        _ => return Err(Error::UnknownForm { form, max: 6 }),
    };
    Ok(DoubleSum { inner: Inner::UpToJ, w1, w2, alpha, beta, gamma, rhs_coef })
}

fn lemma5_equiv_table(form: u8, rule: &ThirdOrderRule, k: i64) -> Result<DoubleSum> {
    let ThirdOrderRule { f1, f2, f3, a, b, c } = rule;
    let (a, b, c) = (*a, *b, *c);
    let (w1, w2, alpha, beta, gamma, rhs_coef) = match form {
        1 => (f3 / f1, f2 / f1, -a, a - c, a - b, powi(f1, -k)),
        2 => (f2 / f1, f3 / f1, -a, a - b, a - c, powi(f1, -k)),
        3 => (f1 / f2, f3 / f2, -b, b - a, b - c, powi(f2, -k)),
        4 => (-f3.clone(), -f2.clone(), a, -c, -b, powi(f1, k)),
        5 => (-f3.clone(), -f1.clone(), b, -c, -a, powi(f2, k)),
        6 => (-f2.clone(), -f1.clone(), c, -b, -a, powi(f3, k)),
        _ => return Err(Error::UnknownForm { form, max: 6 }),
    };
    Ok(DoubleSum { inner: Inner::UpToKMinusJ, w1, w2, alpha, beta, gamma, rhs_coef })
}

fn run_double<X: TermAccessor + ?Sized>(t: DoubleSum, x: &X, m: i64, k: usize) -> Result<SumComparison> {
    let lhs = t.linear(m, k);
    compare(x, lhs, vec![(t.rhs_coef, m)])
}

/// The six double binomial sums for a third-order rule, inner index bounded
/// by `j`:
///
/// 1. `Σ C(k,j)C(j,s) (f2/f3)^j (f1/f2)^s X_{m-ck+(c-b)j+(b-a)s} = X_m / f3^k`
/// 2. `Σ C(k,j)C(j,s) (f3/f2)^j (f1/f3)^s X_{m-bk+(b-c)j+(c-a)s} = X_m / f2^k`
/// 3. `Σ C(k,j)C(j,s) (f3/f1)^j (f2/f3)^s X_{m-ak+(a-c)j+(c-b)s} = X_m / f1^k`
/// 4. `Σ C(k,j)C(j,s) (f2/f3)^j (-1/f2)^s X_{m-(c-a)k+(c-b)j+bs} = (-f1/f3)^k X_m`
/// 5. `Σ C(k,j)C(j,s) (f1/f3)^j (-1/f1)^s X_{m-(c-b)k+(c-a)j+as} = (-f2/f3)^k X_m`
/// 6. `Σ C(k,j)C(j,s) (f1/f2)^j (-1/f1)^s X_{m-(b-c)k+(b-a)j+as} = (-f3/f2)^k X_m`
pub fn lemma5_sum<X>(form: u8, rule: &ThirdOrderRule, x: &X, m: i64, k: i64) -> Result<SumComparison>
where
    X: TermAccessor + ?Sized,
{
    let ku = bound(k)?;
    run_double(lemma5_table(form, rule, k)?, x, m, ku)
}

/// The six rewrites with inner index bounded by `k - j`:
///
/// 1. `Σ C(k,j)C(k-j,s) (f3/f1)^j (f2/f1)^s X_{m-ak-(c-a)j-(b-a)s} = X_m / f1^k`
/// 2. `Σ C(k,j)C(k-j,s) (f2/f1)^j (f3/f1)^s X_{m-ak-(b-a)j-(c-a)s} = X_m / f1^k`
/// 3. `Σ C(k,j)C(k-j,s) (f1/f2)^j (f3/f2)^s X_{m-bk-(a-b)j-(c-b)s} = X_m / f2^k`
/// 4. `Σ C(k,j)C(k-j,s) (-1)^{j+s} f3^j f2^s X_{m+ak-cj-bs} = f1^k X_m`
/// 5. `Σ C(k,j)C(k-j,s) (-1)^{j+s} f3^j f1^s X_{m+bk-cj-as} = f2^k X_m`
/// 6. `Σ C(k,j)C(k-j,s) (-1)^{j+s} f2^j f1^s X_{m+ck-bj-as} = f3^k X_m`
pub fn lemma5_equiv_sum<X>(form: u8, rule: &ThirdOrderRule, x: &X, m: i64, k: i64) -> Result<SumComparison>
where
    X: TermAccessor + ?Sized,
{
    let ku = bound(k)?;
    run_double(lemma5_equiv_table(form, rule, k)?, x, m, ku)
}

/// Checks the two presentations of form `form` against each other: after
/// dividing each left side by its own right-side coefficient both must
/// reduce to the same value, `X_m`.
pub fn lemma5_presentations_agree<X>(form: u8, rule: &ThirdOrderRule, x: &X, m: i64, k: i64) -> Result<bool>
where
    X: TermAccessor + ?Sized,
{
    let ku = bound(k)?;
    let direct = lemma5_table(form, rule, k)?;
    let rewrite = lemma5_equiv_table(form, rule, k)?;
    let dc = direct.rhs_coef.clone();
    let rc = rewrite.rhs_coef.clone();
    let lhs_direct = run_double(direct, x, m, ku)?.lhs / dc;
    let lhs_rewrite = run_double(rewrite, x, m, ku)?.lhs / rc;
    Ok(lhs_direct == lhs_rewrite && lhs_direct == x.term(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{from_int, rat, ratio};
    use crate::seq::{fib, SequenceSpec};

    fn fib_x() -> impl TermAccessor {
        |m: i64| from_int(fib(m))
    }

    fn fib_rule() -> SecondOrderRule {
        SecondOrderRule::new(rat(1), rat(1), 1, 2).unwrap()
    }

    fn shift_rule() -> ThirdOrderRule {
        ThirdOrderRule::new(rat(1), rat(1), rat(1), 4, 3, 1).unwrap()
    }

    #[test]
    fn rule_satisfied_examples() {
        let x = fib_x();
        assert!(rule_satisfied(&fib_rule(), &x, -10..=10));
        let wrong = SecondOrderRule::new(rat(1), rat(1), 1, 3).unwrap();
        assert!(!rule_satisfied(&wrong, &x, 0..=10));
        assert!(rule_satisfied(&shift_rule(), &x, 2..=20));
    }

    #[test]
    fn rule_constructors_reject_degenerate_input() {
        assert_eq!(SecondOrderRule::new(rat(0), rat(1), 1, 2), Err(Error::ZeroCoefficient("f1")));
        assert_eq!(SecondOrderRule::new(rat(1), rat(1), 2, 2), Err(Error::DegenerateOffsets(vec![2, 2])));
        assert_eq!(ThirdOrderRule::new(rat(1), rat(0), rat(1), 1, 2, 3), Err(Error::ZeroCoefficient("f2")));
        assert!(ThirdOrderRule::new(rat(1), rat(1), rat(1), 1, 2, 1).is_err());
    }

    #[test]
    fn lemma2_examples() {
        let x = fib_x();
        let r = fib_rule();
        let c = lemma2_sum(1, &r, &x, 10, 2).unwrap();
        assert_eq!(c.lhs, rat(42));
        assert_eq!(c.rhs, rat(42));
        assert!(c.equal);

        let c = lemma2_sum(2, &r, &x, 10, 0).unwrap();
        assert_eq!(c.lhs, from_int(fib(9)));
        assert_eq!(c.rhs, from_int(fib(10) - fib(8)));
        assert!(c.equal);

        assert!(lemma2_sum(3, &r, &x, 0, 3).unwrap().equal);
        assert!(lemma2_sum(4, &r, &x, 0, 3).unwrap().equal);
    }

    #[test]
    fn lemma2_form3_direct_summation() {
        // -f1/f2 = -1, b - a = 1: Σ_{j=0}^3 (-1)^j X_{1-j} = F_1 - F_0 + F_{-1} - F_{-2}
        let c = lemma2_sum(3, &fib_rule(), &fib_x(), 0, 3).unwrap();
        assert_eq!(c.lhs, rat(3));
        // f1 X_0 + f2 (-1)^{-3} X_{-4} = 0 - (-3)
        assert_eq!(c.rhs, rat(3));
    }

    #[test]
    fn errors_are_reported() {
        let x = fib_x();
        assert_eq!(lemma2_sum(1, &fib_rule(), &x, 0, -1), Err(Error::NegativeBound(-1)));
        assert_eq!(lemma2_sum(5, &fib_rule(), &x, 0, 1), Err(Error::UnknownForm { form: 5, max: 4 }));
        assert_eq!(lemma5_sum(7, &shift_rule(), &x, 0, 1), Err(Error::UnknownForm { form: 7, max: 6 }));
        assert_eq!(binomial_sum(0, &fib_rule(), &x, 0, 1), Err(Error::UnknownForm { form: 0, max: 3 }));
        assert_eq!(lemma5_equiv_sum(1, &shift_rule(), &x, 0, -2), Err(Error::NegativeBound(-2)));
    }

    #[test]
    fn binomial_forms_on_fibonacci() {
        let x = fib_x();
        for form in 1..=3 {
            for m in -10..=10 {
                for k in 0..=6 {
                    assert!(binomial_sum(form, &fib_rule(), &x, m, k).unwrap().equal);
                }
            }
        }
        // form 2 with f1 = f2 = 1, a = 1, b = 2: Σ (-1)^j C(k,j) F_{m+k-2j} = F_m
        let c = binomial_sum(2, &fib_rule(), &x, 5, 2).unwrap();
        assert_eq!(c.lhs, from_int(fib(7) - fib(5) * 2 + fib(3)));
    }

    #[test]
    fn lemma5_examples() {
        let x = fib_x();
        let r = shift_rule();
        assert!(lemma5_sum(1, &r, &x, 12, 2).unwrap().equal);
        assert!(lemma5_sum(4, &r, &x, 10, 1).unwrap().equal);
        assert!(lemma5_equiv_sum(6, &r, &x, 8, 1).unwrap().equal);
        for form in 1..=6 {
            let c = lemma5_sum(form, &r, &x, 7, 0).unwrap();
            assert_eq!(c.lhs, from_int(fib(7)));
            assert!(c.equal);
            let e = lemma5_equiv_sum(form, &r, &x, 7, 0).unwrap();
            assert_eq!(e.lhs, from_int(fib(7)));
        }
        let a = lemma5_sum(3, &r, &x, 6, 2).unwrap();
        let b = lemma5_equiv_sum(3, &r, &x, 6, 2).unwrap();
        assert_eq!(a.rhs, b.rhs);
        assert!(lemma5_presentations_agree(3, &r, &x, 6, 2).unwrap());
    }

    #[test]
    fn lemma5_form1_direct_double_sum() {
        // f = 1, (a,b,c) = (4,3,1), k = 1: terms X_{m-c}, X_{m-b}, X_{m-a}
        let c = lemma5_sum(1, &shift_rule(), &fib_x(), 12, 1).unwrap();
        assert_eq!(c.lhs, from_int(fib(11) + fib(9) + fib(8)));
        assert_eq!(c.rhs, from_int(fib(12)));
    }

    #[test]
    fn rule_sequence_respects_rule_and_domain() {
        let rule = SecondOrderRule::new(ratio(2, 3), ratio(-1, 2), 2, -1).unwrap();
        let seq = RuleSequence::unroll(&rule, &[rat(1), rat(-2), rat(3)], -30..=30).unwrap();
        assert_eq!(seq.domain(), Some((-30, 30)));
        assert!(rule_satisfied(&rule, &seq, -28..=28));
        for form in 1..=4 {
            assert!(lemma2_sum(form, &rule, &seq, 0, 3).unwrap().equal);
        }
        assert!(matches!(lemma2_sum(1, &rule, &seq, 0, 40), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn rule_sequence_reproduces_fibonacci() {
        let seq = RuleSequence::unroll(&fib_rule(), &[rat(0), rat(1)], -50..=50).unwrap();
        let spec = SequenceSpec::fibonacci();
        for m in -50..=50 {
            assert_eq!(seq.term(m), spec.term(m).into());
        }
    }

    #[test]
    fn rule_sequence_rejects_wrong_seed_count() {
        assert_eq!(
            RuleSequence::unroll(&fib_rule(), &[rat(0)], 0..=5).unwrap_err(),
            Error::SeedCount { expected: 2, got: 1 }
        );
    }

    #[test]
    fn k_zero_is_the_rule() {
        // Form 3 at k = 0 reads X_{m+a} = f1 X_m + f2 X_{m+a-b}.
        let rule = SecondOrderRule::new(ratio(3, 5), ratio(7, 2), -1, 3).unwrap();
        let seq = RuleSequence::unroll(&rule, &[rat(2), rat(0), rat(-1), rat(4)], -20..=20).unwrap();
        for m in -10..=10 {
            assert!(lemma2_sum(3, &rule, &seq, m, 0).unwrap().equal);
        }
        assert!(rule_satisfied(&rule, &seq, -10..=10));
    }
}
