//! Fibonacci-specialized weighted sums, binomial sums and their corollaries,
//! plus the double binomial sums in [`double`].
//!
//! Every function evaluates the displayed left and right sides term by term
//! in exact rationals. Side conditions are checked first and reported as
//! [`Error::Guard`] naming the vanishing factor.

mod double;
pub mod specialize;

pub use double::{
    theorem3_double, theorem3_guard, theorem3_on, theorem4_double, theorem4_guard, theorem4_on,
};

use num_traits::Zero;

use crate::engine::{SumComparison, TermAccessor};
use crate::exact::{from_int, powers, rat, sign, sign_rat, Rational};
use crate::seq::{binom_row, fib, lucas, SequenceSpec};
use crate::{Error, Result};

/// Parameters shared by the theorem families. Unused fields are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremParams {
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub k: i64,
    pub g: SequenceSpec,
    pub h: SequenceSpec,
}

impl TheoremParams {
    pub fn new(m: i64, n: i64, r: i64, k: i64, g: SequenceSpec) -> Self {
        TheoremParams { m, n, r, k, h: g.clone(), g }
    }

    pub fn with_h(mut self, h: SequenceSpec) -> Self {
        self.h = h;
        self
    }
}

pub(crate) fn need_n(n: i64) -> Result<()> {
    if n == 0 {
        Err(Error::Guard("F_n = 0 (n = 0)".into()))
    } else {
        Ok(())
    }
}

pub(crate) fn need_n_plus_r(n: i64, r: i64) -> Result<()> {
    if n + r == 0 {
        Err(Error::Guard("F_{n+r} = 0 (n + r = 0)".into()))
    } else {
        Ok(())
    }
}

pub(crate) fn need_term(name: &str, v: &Rational) -> Result<()> {
    if v.is_zero() {
        Err(Error::Guard(format!("{name} = 0")))
    } else {
        Ok(())
    }
}

pub(crate) fn k_index(k: i64) -> Result<usize> {
    if k < 0 {
        Err(Error::NegativeBound(k))
    } else {
        Ok(k as usize)
    }
}

pub(crate) fn f(n: i64) -> Rational {
    from_int(fib(n))
}

/// `Σ_{j=0}^k weight(j) X_{index(j)}`.
fn single_sum<X, W>(x: &X, k: usize, mut term: W) -> Rational
where
    X: TermAccessor + ?Sized,
    W: FnMut(usize) -> (Rational, i64),
{
    (0..=k).fold(Rational::zero(), |acc, j| {
        let (w, i) = term(j);
        if w.is_zero() {
            acc
        } else {
            acc + w * x.term(i)
        }
    })
}

/// Weighted sums with a geometric Fibonacci ratio.
///
/// 1. `F_r Σ (-1)^{rj} (F_{n+r}/F_n)^j G_{m+n+r+rj}
///     = (-1)^{kr} F_n (F_{n+r}/F_n)^{k+1} G_{m+(k+1)r} - (-1)^r F_n G_m`, `n ≠ 0`
/// 2. `F_{n+r} Σ (-1)^{(r+1)j} (F_r/F_n)^j G_{m+r+(n+r)j}
///     = (-1)^r F_n G_m + (-1)^{(r+1)k} F_n (F_r/F_n)^{k+1} G_{m+(k+1)(n+r)}`, `n ≠ 0`
/// 3. `Σ (F_r/F_{n+r})^j G_{m-r+nj}
///     = (-1)^r (F_{n+r}/F_n) G_m - (-1)^r (F_r/F_n) (F_r/F_{n+r})^k G_{m+(k+1)n}`,
///    `n + r ≠ 0` and `n ≠ 0`
pub fn theorem1_sum(form: u8, p: &TheoremParams) -> Result<SumComparison> {
    theorem1_on(form, p.m, p.n, p.r, p.k, &p.g)
}

pub fn theorem1_guard(form: u8, n: i64, r: i64) -> Result<()> {
    match form {
        1 | 2 => need_n(n),
        3 => need_n_plus_r(n, r).and_then(|_| need_n(n)),
        _ => Err(Error::UnknownForm { form, max: 3 }),
    }
}

pub fn theorem1_on<G>(form: u8, m: i64, n: i64, r: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    theorem1_guard(form, n, r)?;
    let ku = k_index(k)?;
    let (fn_, fr, fnr) = (f(n), f(r), f(n + r));
    let (lhs, rhs) = match form {
        1 => {
            let w = &fnr / &fn_;
            let pw = powers(&w, ku + 1);
            let lhs =
                &fr * single_sum(g, ku, |j| (sign_rat(r * j as i64) * &pw[j], m + n + r + r * j as i64));
            let rhs = sign_rat(k * r) * &fn_ * &pw[ku + 1] * g.term(m + (k + 1) * r)
                - sign_rat(r) * &fn_ * g.term(m);
            (lhs, rhs)
        }
        2 => {
            let w = &fr / &fn_;
            let pw = powers(&w, ku + 1);
            let lhs = &fnr
                * single_sum(g, ku, |j| (sign_rat((r + 1) * j as i64) * &pw[j], m + r + (n + r) * j as i64));
            let rhs = sign_rat(r) * &fn_ * g.term(m)
                + sign_rat((r + 1) * k) * &fn_ * &pw[ku + 1] * g.term(m + (k + 1) * (n + r));
            (lhs, rhs)
        }
        3 => {
            let w = &fr / &fnr;
            let pw = powers(&w, ku);
            let lhs = single_sum(g, ku, |j| (pw[j].clone(), m - r + n * j as i64));
            let rhs = sign_rat(r) * (&fnr / &fn_) * g.term(m)
                - sign_rat(r) * (&fr / &fn_) * &pw[ku] * g.term(m + (k + 1) * n);
            (lhs, rhs)
        }
        _ => unreachable!(),
    };
    Ok(SumComparison::new(lhs, rhs))
}

/// Binomial sums.
///
/// 1. `Σ (-1)^j C(k,j) (F_r/F_{r+n})^j G_{m+rk+nj} = (-1)^{rk} (F_n/F_{r+n})^k G_m`, `n + r ≠ 0`
/// 2. `Σ (-1)^{rj} C(k,j) (F_r/F_n)^j G_{m-rk+(n+r)j} = (-1)^{rk} (F_{n+r}/F_n)^k G_m`, `n ≠ 0`
/// 3. `Σ (-1)^j (-1)^{rj} C(k,j) (F_{n+r}/F_n)^j G_{m-(n+r)k+rj}
///     = (-1)^k (-1)^{rk} (F_r/F_n)^k G_m`, `n ≠ 0`
pub fn theorem2_binomial(form: u8, p: &TheoremParams) -> Result<SumComparison> {
    theorem2_on(form, p.m, p.n, p.r, p.k, &p.g)
}

pub fn theorem2_guard(form: u8, n: i64, r: i64) -> Result<()> {
    match form {
        1 => need_n_plus_r(n, r),
        2 | 3 => need_n(n),
        _ => Err(Error::UnknownForm { form, max: 3 }),
    }
}

pub fn theorem2_on<G>(form: u8, m: i64, n: i64, r: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    theorem2_guard(form, n, r)?;
    let ku = k_index(k)?;
    let row = binom_row(ku);
    let c = |j: usize| from_int(row[j].clone());
    let (fn_, fr, fnr) = (f(n), f(r), f(n + r));
    let (lhs, rhs) = match form {
        1 => {
            let pw = powers(&(&fr / &fnr), ku);
            let lhs = single_sum(g, ku, |j| (sign_rat(j as i64) * c(j) * &pw[j], m + r * k + n * j as i64));
            let rhs = sign_rat(r * k) * powers(&(&fn_ / &fnr), ku)[ku].clone() * g.term(m);
            (lhs, rhs)
        }
        2 => {
            let pw = powers(&(&fr / &fn_), ku);
            let lhs = single_sum(g, ku, |j| {
                (sign_rat(r * j as i64) * c(j) * &pw[j], m - r * k + (n + r) * j as i64)
            });
            let rhs = sign_rat(r * k) * powers(&(&fnr / &fn_), ku)[ku].clone() * g.term(m);
            (lhs, rhs)
        }
        3 => {
            let pw = powers(&(&fnr / &fn_), ku);
            let lhs = single_sum(g, ku, |j| {
                let j = j as i64;
                (sign_rat(j + r * j) * c(j as usize) * &pw[j as usize], m - (n + r) * k + r * j)
            });
            let rhs = sign_rat(k + r * k) * powers(&(&fr / &fn_), ku)[ku].clone() * g.term(m);
            (lhs, rhs)
        }
        _ => unreachable!(),
    };
    Ok(SumComparison::new(lhs, rhs))
}

/// The specializations of the binomial sums.
///
/// | id | identity                                                                  | guard     |
/// |----|---------------------------------------------------------------------------|-----------|
/// | C1 | `Σ (-1)^j C(k,j) (F_r/F_{r+n})^j G_{nj} = (F_n/F_{r+n})^k (F_{rk+1}G_0 - F_{rk}G_1)` | `n+r ≠ 0` |
/// | C2 | `Σ (-1)^j C(k,j) G_{nj} / L_n^j = (F_{nk+1}G_0 - F_{nk}G_1) / L_n^k`       | `n ≠ 0`   |
/// | C3 | `Σ (-1)^j C(k,j) G_j = F_{k+1}G_0 - F_k G_1`                              |           |
/// | C4 | `Σ (-1)^{rj} C(k,j) (F_r/F_n)^j G_{(n+r)j} = (-1)^{rk} (F_{n+r}/F_n)^k G_{rk}` | `n ≠ 0` |
/// | C5 | `Σ (-1)^j (-1)^{rj} C(k,j) (F_{n+r}/F_n)^j G_{rj} = (-1)^k (-1)^{rk} (F_r/F_n)^k G_{(n+r)k}` | `n ≠ 0` |
/// | C6 | `Σ (-1)^{nj} C(k,j) G_{2nj} = (-1)^{nk} L_n^k G_{nk}`                     | `n ≠ 0`   |
/// | C7 | `Σ (-1)^j C(k,j) G_{2j} = (-1)^k G_k`                                     |           |
/// | C8 | `Σ C(k,j) G_j = G_{2k}`                                                   |           |
pub fn theorem2_corollary(id: u8, p: &TheoremParams) -> Result<SumComparison> {
    corollary_on(id, p.n, p.r, p.k, &p.g)
}

pub fn corollary_guard(id: u8, n: i64, r: i64) -> Result<()> {
    match id {
        1 => need_n_plus_r(n, r),
        2 | 4 | 5 | 6 => need_n(n),
        3 | 7 | 8 => Ok(()),
        _ => Err(Error::UnknownForm { form: id, max: 8 }),
    }
}

pub fn corollary_on<G>(id: u8, n: i64, r: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    corollary_guard(id, n, r)?;
    let ku = k_index(k)?;
    let row = binom_row(ku);
    let c = |j: usize| from_int(row[j].clone());
    let alt = |j: usize| sign_rat(j as i64);
    let (g0, g1) = (g.term(0), g.term(1));
    let (lhs, rhs) = match id {
        1 => {
            let pw = powers(&(f(r) / f(r + n)), ku);
            let lhs = single_sum(g, ku, |j| (alt(j) * c(j) * &pw[j], n * j as i64));
            let scale = powers(&(f(n) / f(r + n)), ku)[ku].clone();
            (lhs, scale * (f(r * k + 1) * &g0 - f(r * k) * &g1))
        }
        2 => {
            let ln = from_int(lucas(n));
            let pw = powers(&ln.recip(), ku);
            let lhs = single_sum(g, ku, |j| (alt(j) * c(j) * &pw[j], n * j as i64));
            (lhs, (f(n * k + 1) * &g0 - f(n * k) * &g1) * &pw[ku])
        }
        3 => {
            let lhs = single_sum(g, ku, |j| (alt(j) * c(j), j as i64));
            (lhs, f(k + 1) * &g0 - f(k) * &g1)
        }
        4 => {
            let pw = powers(&(f(r) / f(n)), ku);
            let lhs = single_sum(g, ku, |j| (sign_rat(r * j as i64) * c(j) * &pw[j], (n + r) * j as i64));
            let rhs = sign_rat(r * k) * powers(&(f(n + r) / f(n)), ku)[ku].clone() * g.term(r * k);
            (lhs, rhs)
        }
        5 => {
            let pw = powers(&(f(n + r) / f(n)), ku);
            let lhs = single_sum(g, ku, |j| {
                let js = j as i64;
                (sign_rat(js) * sign_rat(r * js) * c(j) * &pw[j], r * js)
            });
            let rhs =
                sign_rat(k) * sign_rat(r * k) * powers(&(f(r) / f(n)), ku)[ku].clone() * g.term((n + r) * k);
            (lhs, rhs)
        }
        6 => {
            let lhs = single_sum(g, ku, |j| (sign_rat(n * j as i64) * c(j), 2 * n * j as i64));
            let ln = from_int(lucas(n));
            let rhs = sign_rat(n * k) * powers(&ln, ku)[ku].clone() * g.term(n * k);
            (lhs, rhs)
        }
        7 => {
            let lhs = single_sum(g, ku, |j| (alt(j) * c(j), 2 * j as i64));
            (lhs, rat(sign(k)) * g.term(k))
        }
        8 => {
            let lhs = single_sum(g, ku, |j| (c(j), j as i64));
            (lhs, g.term(2 * k))
        }
        _ => unreachable!(),
    };
    Ok(SumComparison::new(lhs, rhs))
}
