use num_traits::One;

use super::{f, k_index, need_n, need_term, TheoremParams};
use crate::engine::{SumComparison, TermAccessor};
use crate::exact::{powers, powi, sign, sign_rat, Integer, LazySum, Rational};
use crate::seq::binom_row;
use crate::{Error, Result};

#[derive(Clone, Copy)]
enum Inner {
    UpToJ,
    UpToKMinusJ,
}

/// `Σ_j Σ_s C(k,j) C(top,s) (-1)^e w1 w2 w3 X_{index(j,s)}` where `top` is `j`
/// or `k - j` and `term(j, s)` yields `(e, [w1, w2, w3], index)`.
fn double_sum<'a, X, W>(x: &X, k: usize, inner: Inner, mut term: W) -> Rational
where
    X: TermAccessor + ?Sized,
    W: FnMut(usize, usize) -> (i64, [&'a Rational; 3], i64),
{
    let rows: Vec<Vec<Integer>> = (0..=k).map(binom_row).collect();
    let mut acc = LazySum::new();
    for j in 0..=k {
        let top = match inner {
            Inner::UpToJ => j,
            Inner::UpToKMinusJ => k - j,
        };
        for s in 0..=top {
            let (e, w, i) = term(j, s);
            let c = &rows[k][j] * &rows[top][s] * sign(e);
            acc.add_product(&c, &[w[0], w[1], w[2], &x.term(i)]);
        }
    }
    acc.finish()
}

/// Double binomial sums generated by `G_m = (-1)^n G_{m-2n} + F_n G_{m-n-1} +
/// F_n G_{m-n+1}`.
///
/// 1. `Σ_j Σ_{s≤k-j} (-1)^{n(j+s)} C(k,j)C(k-j,s) F_n^{j+s} G_{m-2nk+(n+1)j+(n-1)s} = (-1)^{nk} G_m`
/// 2. as 1 with `G_{m-2nk+(n-1)j+(n+1)s}`
/// 3. `Σ_j Σ_{s≤k-j} (-1)^{nj} C(k,j)C(k-j,s) G_{m-(n+1)k-(n-1)j+2s} / F_n^j = G_m / F_n^k`
/// 4. `Σ_j Σ_{s≤j} (-1)^s C(k,j)C(j,s) G_{m+(n+1)k-2j+(n+1)s} / F_n^s = (-1)^{(n+1)k} G_m / F_n^k`
/// 5. `Σ_j Σ_{s≤j} (-1)^{n(j+s)+s} C(k,j)C(j,s) G_{m+2k-(n+1)j+2ns} / F_n^j = (-1)^k G_m`
/// 6. `Σ_j Σ_{s≤j} (-1)^{n(j+s)+s} C(k,j)C(j,s) G_{m-2k-(n-1)j+2ns} / F_n^j = (-1)^k G_m`
///
/// Every form requires `n ≠ 0`: at `n = 0` the generating rule loses two of
/// its three terms.
pub fn theorem3_double(form: u8, p: &TheoremParams) -> Result<SumComparison> {
    theorem3_on(form, p.m, p.n, p.k, &p.g)
}

pub fn theorem3_guard(form: u8, n: i64) -> Result<()> {
    if !(1..=6).contains(&form) {
        return Err(Error::UnknownForm { form, max: 6 });
    }
    need_n(n)
}

pub fn theorem3_on<G>(form: u8, m: i64, n: i64, k: i64, g: &G) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
{
    theorem3_guard(form, n)?;
    let ku = k_index(k)?;
    let fn_ = f(n);
    let pf = powers(&fn_, 2 * ku);
    let pinv = powers(&fn_.recip(), ku);
    let one = Rational::one();
    let (lhs, rhs) = match form {
        1 | 2 => {
            let (cj, cs) = if form == 1 { (n + 1, n - 1) } else { (n - 1, n + 1) };
            let lhs = double_sum(g, ku, Inner::UpToKMinusJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                (n * (ji + si), [&pf[j + s], &one, &one], m - 2 * n * k + cj * ji + cs * si)
            });
            (lhs, sign_rat(n * k) * g.term(m))
        }
        3 => {
            let lhs = double_sum(g, ku, Inner::UpToKMinusJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                (n * ji, [&pinv[j], &one, &one], m - (n + 1) * k - (n - 1) * ji + 2 * si)
            });
            (lhs, g.term(m) * &pinv[ku])
        }
        4 => {
            let lhs = double_sum(g, ku, Inner::UpToJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                (si, [&pinv[s], &one, &one], m + (n + 1) * k - 2 * ji + (n + 1) * si)
            });
            (lhs, sign_rat((n + 1) * k) * g.term(m) * &pinv[ku])
        }
        5 | 6 => {
            let lhs = double_sum(g, ku, Inner::UpToJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                let idx = if form == 5 {
                    m + 2 * k - (n + 1) * ji + 2 * n * si
                } else {
                    m - 2 * k - (n - 1) * ji + 2 * n * si
                };
                (n * (ji + si) + si, [&pinv[j], &one, &one], idx)
            });
            (lhs, sign_rat(k) * g.term(m))
        }
        _ => unreachable!(),
    };
    Ok(SumComparison::new(lhs, rhs))
}

/// Double binomial sums over `H` with `G`-ratio weights, generated by
/// `G_r H_m = -(-1)^n G_n H_{m+n+r} + (-1)^n G_{n+r} H_{m+n} + G_0 H_{m+r}`.
///
/// 1. `Σ_{s≤j} (-1)^{nj+s} C C G_{n+r}^{j-s} G_n^s / G_0^j H_{m+rk+(n-r)j+rs} = (G_r/G_0)^k H_m`, `G_0 ≠ 0`
/// 2. `Σ_{s≤j} (-1)^{n(j+s)+s} C C G_0^{j-s} G_n^s / G_{n+r}^j H_{m+nk+(r-n)j+ns} = (-1)^{nk} (G_r/G_{n+r})^k H_m`, `G_{n+r} ≠ 0`
/// 3. `Σ_{s≤j} (-1)^{n(j+s)+j} C C G_0^{j-s} G_{n+r}^s / G_n^j H_{m+(n+r)k-nj+(n-r)s} = (-1)^{(n+1)k} (G_r/G_n)^k H_m`, `G_n ≠ 0`
/// 4. `Σ_{s≤k-j} (-1)^{ns+j+s} C C G_0^j G_{n+r}^s / G_r^{j+s} H_{m-(n+r)k+rj+ns} = (-1)^{(n+1)k} (G_n/G_r)^k H_m`, `G_r ≠ 0`
/// 5. `Σ_{s≤k-j} (-1)^{ns+j} C C G_0^j G_n^s / G_r^{j+s} H_{m-nk+rj+(n+r)s} = (-1)^{nk} (G_{n+r}/G_r)^k H_m`, `G_r ≠ 0`
/// 6. `Σ_{s≤k-j} (-1)^{n(j+s)+j} C C G_{n+r}^j G_n^s / G_r^{j+s} H_{m-rk+nj+(n+r)s} = (G_0/G_r)^k H_m`, `G_r ≠ 0`
pub fn theorem4_double(form: u8, p: &TheoremParams) -> Result<SumComparison> {
    theorem4_on(form, p.m, p.n, p.r, p.k, &p.g, &p.h)
}

pub fn theorem4_guard<G>(form: u8, n: i64, r: i64, g: &G) -> Result<()>
where
    G: TermAccessor + ?Sized,
{
    match form {
        1 => need_term("G_0", &g.term(0)),
        2 => need_term("G_{n+r}", &g.term(n + r)),
        3 => need_term("G_n", &g.term(n)),
        4..=6 => need_term("G_r", &g.term(r)),
        _ => Err(Error::UnknownForm { form, max: 6 }),
    }
}

pub fn theorem4_on<G, H>(form: u8, m: i64, n: i64, r: i64, k: i64, g: &G, h: &H) -> Result<SumComparison>
where
    G: TermAccessor + ?Sized,
    H: TermAccessor + ?Sized,
{
    theorem4_guard(form, n, r, g)?;
    let ku = k_index(k)?;
    let (g0, gn, gr, gnr) = (g.term(0), g.term(n), g.term(r), g.term(n + r));
    let p0 = powers(&g0, ku);
    let pn = powers(&gn, ku);
    let pnr = powers(&gnr, ku);
    let ratio_k = |num: &Rational, den: &Rational| powi(&(num / den), k);
    let (lhs, rhs) = match form {
        1 => {
            let inv = powers(&g0.recip(), ku);
            let lhs = double_sum(h, ku, Inner::UpToJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                (n * ji + si, [&pnr[j - s], &pn[s], &inv[j]], m + r * k + (n - r) * ji + r * si)
            });
            (lhs, ratio_k(&gr, &g0) * h.term(m))
        }
        2 => {
            let inv = powers(&gnr.recip(), ku);
            let lhs = double_sum(h, ku, Inner::UpToJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                (n * (ji + si) + si, [&p0[j - s], &pn[s], &inv[j]], m + n * k + (r - n) * ji + n * si)
            });
            (lhs, sign_rat(n * k) * ratio_k(&gr, &gnr) * h.term(m))
        }
        3 => {
            let inv = powers(&gn.recip(), ku);
            let lhs = double_sum(h, ku, Inner::UpToJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                (n * (ji + si) + ji, [&p0[j - s], &pnr[s], &inv[j]], m + (n + r) * k - n * ji + (n - r) * si)
            });
            (lhs, sign_rat((n + 1) * k) * ratio_k(&gr, &gn) * h.term(m))
        }
        4..=6 => {
            let inv = powers(&gr.recip(), ku);
            let lhs = double_sum(h, ku, Inner::UpToKMinusJ, |j, s| {
                let (ji, si) = (j as i64, s as i64);
                match form {
                    4 => {
                        (n * si + ji + si, [&p0[j], &pnr[s], &inv[j + s]], m - (n + r) * k + r * ji + n * si)
                    }
                    5 => (n * si + ji, [&p0[j], &pn[s], &inv[j + s]], m - n * k + r * ji + (n + r) * si),
                    _ => (
                        n * (ji + si) + ji,
                        [&pnr[j], &pn[s], &inv[j + s]],
                        m - r * k + n * ji + (n + r) * si,
                    ),
                }
            });
            let rhs = match form {
                4 => sign_rat((n + 1) * k) * ratio_k(&gn, &gr),
                5 => sign_rat(n * k) * ratio_k(&gnr, &gr),
                _ => ratio_k(&g0, &gr),
            } * h.term(m);
            (lhs, rhs)
        }
        _ => unreachable!(),
    };
    Ok(SumComparison::new(lhs, rhs))
}
