//! The concrete recurrence rules behind the theorems, and evaluation of each
//! theorem form through the generic engine instead of its displayed formula.
//!
//! The `*_via_engine` functions return the engine's comparison rescaled to
//! the theorem's normalization, so a correct pair agrees on both sides
//! exactly.

use super::{f, need_n, need_n_plus_r, need_term};
use crate::engine::{
    binomial_sum, lemma2_sum, lemma5_equiv_sum, lemma5_sum, SecondOrderRule, SumComparison, TermAccessor,
    ThirdOrderRule,
};
use crate::exact::{rat, sign_rat};
use crate::{Error, Result};

/// `G_m = f1 G_{m+r} + f2 G_{m+n+r}` with `f1 = (-1)^r F_{n+r}/F_n` and
/// `f2 = -(-1)^r F_r/F_n`, i.e. `a = -r`, `b = -n-r`.
pub fn ratio_rule(n: i64, r: i64) -> Result<SecondOrderRule> {
    need_n(n)?;
    need_n_plus_r(n, r)?;
    if r == 0 {
        return Err(Error::Guard("F_r = 0 (r = 0)".into()));
    }
    let fnv = f(n);
    SecondOrderRule::new(sign_rat(r) * f(n + r) / &fnv, -sign_rat(r) * f(r) / &fnv, -r, -n - r)
}

/// `G_m = (-1)^n G_{m-2n} + F_n G_{m-n-1} + F_n G_{m-n+1}`.
pub fn shift_rule(n: i64) -> Result<ThirdOrderRule> {
    need_n(n)?;
    let fnv = f(n);
    ThirdOrderRule::new(sign_rat(n), fnv.clone(), fnv, 2 * n, n + 1, n - 1)
}

/// `H_m = f1 H_{m+n+r} + f2 H_{m+n} + f3 H_{m+r}` with
/// `f1 = -(-1)^n G_n/G_r`, `f2 = (-1)^n G_{n+r}/G_r`, `f3 = G_0/G_r`.
pub fn cross_rule<G>(n: i64, r: i64, g: &G) -> Result<ThirdOrderRule>
where
    G: TermAccessor + ?Sized,
{
    let gr = g.term(r);
    need_term("G_r", &gr)?;
    for (name, v) in [("G_n", g.term(n)), ("G_{n+r}", g.term(n + r)), ("G_0", g.term(0))] {
        need_term(name, &v)?;
    }
    let sn = sign_rat(n);
    ThirdOrderRule::new(-&sn * g.term(n) / &gr, sn * g.term(n + r) / &gr, g.term(0) / &gr, -n - r, -n, -r)
}

/// `T1.x` form through [`lemma2_sum`] under [`ratio_rule`].
pub fn theorem1_via_engine<G>(form: u8, m: i64, n: i64, r: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    let rule = ratio_rule(n, r)?;
    let scale = match form {
        1 => -sign_rat(r) * f(n),
        2 => sign_rat(r) * f(n),
        3 => rat(1),
        _ => return Err(Error::UnknownForm { form, max: 3 }),
    };
    Ok(lemma2_sum(form, &rule, g, m, k)?.scaled(&scale))
}

/// `T2.x` form through [`binomial_sum`] under [`ratio_rule`]; the forms
/// correspond one to one with no rescaling.
pub fn theorem2_via_engine<G>(form: u8, m: i64, n: i64, r: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    binomial_sum(form, &ratio_rule(n, r)?, g, m, k)
}

/// `T3.x` form through the engine under [`shift_rule`]: forms 1 to 3 are
/// the `k - j` rewrites 1 to 3, forms 4 to 6 the direct sums 4 to 6.
pub fn theorem3_via_engine<G>(form: u8, m: i64, n: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    let rule = shift_rule(n)?;
    match form {
        1..=3 => lemma5_equiv_sum(form, &rule, g, m, k),
        4..=6 => lemma5_sum(form, &rule, g, m, k),
        _ => Err(Error::UnknownForm { form, max: 6 }),
    }
}

/// `T4.x` form through the engine under [`cross_rule`]: forms 1 to 3 are
/// the direct sums 1 to 3, forms 4 to 6 the `k - j` rewrites 4 to 6.
pub fn theorem4_via_engine<G, H>(
    form: u8,
    m: i64,
    n: i64,
    r: i64,
    k: i64,
    g: &G,
    h: &H,
) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
    H: TermAccessor + ?Sized,
{
    let rule = cross_rule(n, r, g)?;
    match form {
        1..=3 => lemma5_sum(form, &rule, h, m, k),
        4..=6 => lemma5_equiv_sum(form, &rule, h, m, k),
        _ => Err(Error::UnknownForm { form, max: 6 }),
    }
}
