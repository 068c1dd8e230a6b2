use std::fmt;

use crate::engine::{binomial_sum, lemma2_sum, lemma5_equiv_sum, lemma5_sum, SumComparison, TermAccessor};
use crate::identities::{eq1_from_eq5_on, fundamental_on, Fundamental};
use crate::sums::specialize::{cross_rule, ratio_rule};
use crate::sums::{self, theorem3_on, theorem4_on};
use crate::{Error, Result};

/// A grid parameter an identity depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    M,
    N,
    R,
    K,
    /// Seeds of `G`.
    G,
    /// Seeds of `H`.
    H,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::M => "m",
            Param::N => "n",
            Param::R => "r",
            Param::K => "k",
            Param::G => "g",
            Param::H => "h",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which evaluator backs a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Fundamental(Fundamental),
    /// I1 recovered from I5 by substitution.
    Transform,
    /// Telescoping sums of a second-order rule, instantiated with the
    /// Fibonacci-ratio rule in `n`, `r`.
    Telescoping(u8),
    /// Binomial sums of a second-order rule, same instantiation.
    Binomial(u8),
    /// Double binomial sums of a third-order rule, instantiated with the
    /// two-sequence rule in `n`, `r`, `G` over `H`.
    Double(u8),
    /// The `k - j` rewrites of [`Kind::Double`].
    DoubleRewrite(u8),
    WeightedSum(u8),
    BinomialSum(u8),
    Corollary(u8),
    DoubleBinomial(u8),
    TwoSequenceDouble(u8),
}

/// One concrete identity instance.
pub struct Instance<'a> {
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub k: i64,
    pub g: &'a dyn TermAccessor,
    pub h: &'a dyn TermAccessor,
}

/// A registry entry: a stable id, the parameters it ranges over, a short
/// statement and its side condition.
#[derive(Debug, Clone)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub params: &'static [Param],
    pub citation: &'static str,
    pub guard_text: &'static str,
    pub kind: Kind,
}

fn as_guard(e: Error) -> Error {
    match e {
        Error::DegenerateOffsets(o) => Error::Guard(format!("rule offsets coincide {o:?}")),
        Error::ZeroCoefficient(c) => Error::Guard(format!("rule coefficient {c} = 0")),
        other => other,
    }
}

impl IdentityDescriptor {
    /// `Err(Error::Guard(..))` when the printed side condition rejects the
    /// instance.
    pub fn guard(&self, x: &Instance<'_>) -> Result<()> {
        match self.kind {
            Kind::Fundamental(_) | Kind::Transform => Ok(()),
            Kind::Telescoping(_) | Kind::Binomial(_) => ratio_rule(x.n, x.r).map(|_| ()).map_err(as_guard),
            Kind::Double(_) | Kind::DoubleRewrite(_) => {
                cross_rule(x.n, x.r, x.g).map(|_| ()).map_err(as_guard)
            }
            Kind::WeightedSum(f) => sums::theorem1_guard(f, x.n, x.r),
            Kind::BinomialSum(f) => sums::theorem2_guard(f, x.n, x.r),
            Kind::Corollary(c) => sums::corollary_guard(c, x.n, x.r),
            Kind::DoubleBinomial(f) => sums::theorem3_guard(f, x.n),
            Kind::TwoSequenceDouble(f) => sums::theorem4_guard(f, x.n, x.r, x.g),
        }
    }

    /// Evaluates both sides. Assumes [`guard`](Self::guard) passed.
    pub fn eval(&self, x: &Instance<'_>) -> Result<SumComparison> {
        let Instance { m, n, r, k, g, h } = *x;
        match self.kind {
            Kind::Fundamental(id) => Ok(fundamental_on(id, m, n, r, g, h)),
            Kind::Transform => Ok(eq1_from_eq5_on(m, n, g)),
            Kind::Telescoping(f) => lemma2_sum(f, &ratio_rule(n, r)?, g, m, k),
            Kind::Binomial(f) => binomial_sum(f, &ratio_rule(n, r)?, g, m, k),
            Kind::Double(f) => lemma5_sum(f, &cross_rule(n, r, g)?, h, m, k),
            Kind::DoubleRewrite(f) => lemma5_equiv_sum(f, &cross_rule(n, r, g)?, h, m, k),
            Kind::WeightedSum(f) => sums::theorem1_on(f, m, n, r, k, g),
            Kind::BinomialSum(f) => sums::theorem2_on(f, m, n, r, k, g),
            Kind::Corollary(c) => sums::corollary_on(c, n, r, k, g),
            Kind::DoubleBinomial(f) => theorem3_on(f, m, n, k, g),
            Kind::TwoSequenceDouble(f) => theorem4_on(f, m, n, r, k, g, h),
        }
    }

    pub fn uses(&self, p: Param) -> bool {
        self.params.contains(&p)
    }
}

use Param::*;

const MN: &[Param] = &[M, N, G];
const MNR: &[Param] = &[M, N, R, G];
const MNR_H: &[Param] = &[M, N, R, G, H];
const MNRK: &[Param] = &[M, N, R, K, G];
const MNRK_H: &[Param] = &[M, N, R, K, G, H];
const MNK: &[Param] = &[M, N, K, G];
const NRK: &[Param] = &[N, R, K, G];
const NK: &[Param] = &[N, K, G];
const KG: &[Param] = &[K, G];

const NONE: &str = "none";
const RULE5: &str = "n != 0, r != 0, n+r != 0";
const RULE4: &str = "G_0, G_n, G_r, G_{n+r} != 0; n != 0, r != 0, n != r";

macro_rules! d {
    ($id:literal, $params:expr, $kind:expr, $guard:expr, $cite:literal) => {
        IdentityDescriptor { id: $id, params: $params, citation: $cite, guard_text: $guard, kind: $kind }
    };
}

/// Every identity, sorted by id.
pub fn registry() -> Vec<IdentityDescriptor> {
    use Kind::*;
    let mut all = vec![
        d!("I1", MN, Fundamental(self::Fundamental::I1), NONE, "G_{m+n} = F_{n-1}G_m + F_nG_{m+1}"),
        d!("I2", MN, Fundamental(self::Fundamental::I2), NONE, "G_{m+n} + (-1)^n G_{m-n} = L_nG_m"),
        d!("I3", MN, Fundamental(self::Fundamental::I3), NONE, "G_{m+n} - (-1)^n G_{m-n} = F_n(G_{m-1} + G_{m+1})"),
        d!("I4", MNR_H, Fundamental(self::Fundamental::I4), NONE, "G_{n+r}H_{m+n} - G_nH_{m+n+r} = (-1)^n(G_rH_m - G_0H_{m+r})"),
        d!("I5", MNR, Fundamental(self::Fundamental::I5), NONE, "(-1)^r F_nG_m = F_{n+r}G_{m+r} - F_rG_{m+n+r}"),
        d!("R1", MN, Transform, NONE, "I5 at (m+1, -n, n-1) reduces to I1 at (m, n)"),
        d!("L2.1", MNRK, Telescoping(1), RULE5, "f2 sum f1^j X_{m-b-aj} = X_m - f1^{k+1} X_{m-(k+1)a}"),
        d!("L2.2", MNRK, Telescoping(2), RULE5, "f1 sum f2^j X_{m-a-bj} = X_m - f2^{k+1} X_{m-(k+1)b}"),
        d!("L2.3", MNRK, Telescoping(3), RULE5, "sum X_{m+a-(b-a)j}/(-f1/f2)^j = f1 X_m + f2 (-f1/f2)^{-k} X_{m-(k+1)(b-a)}"),
        d!("L2.4", MNRK, Telescoping(4), RULE5, "sum X_{m+b-(a-b)j}/(-f2/f1)^j = f2 X_m + f1 (-f2/f1)^{-k} X_{m-(k+1)(a-b)}"),
        d!("L3.1", MNRK, Binomial(1), RULE5, "sum C(k,j) (f2/f1)^j X_{m-ak+(a-b)j} = X_m / f1^k"),
        d!("L3.2", MNRK, Binomial(2), RULE5, "sum (-f2)^j C(k,j) X_{m+ak-bj} = f1^k X_m"),
        d!("L3.3", MNRK, Binomial(3), RULE5, "sum (-f1)^j C(k,j) X_{m+bk-aj} = f2^k X_m"),
        d!("L5.1", MNRK_H, Double(1), RULE4, "sum C(k,j)C(j,s) (f2/f3)^j (f1/f2)^s X_{m-ck+(c-b)j+(b-a)s} = X_m / f3^k"),
        d!("L5.2", MNRK_H, Double(2), RULE4, "sum C(k,j)C(j,s) (f3/f2)^j (f1/f3)^s X_{m-bk+(b-c)j+(c-a)s} = X_m / f2^k"),
        d!("L5.3", MNRK_H, Double(3), RULE4, "sum C(k,j)C(j,s) (f3/f1)^j (f2/f3)^s X_{m-ak+(a-c)j+(c-b)s} = X_m / f1^k"),
        d!("L5.4", MNRK_H, Double(4), RULE4, "sum C(k,j)C(j,s) (f2/f3)^j (-1/f2)^s X_{m-(c-a)k+(c-b)j+bs} = (-f1/f3)^k X_m"),
        d!("L5.5", MNRK_H, Double(5), RULE4, "sum C(k,j)C(j,s) (f1/f3)^j (-1/f1)^s X_{m-(c-b)k+(c-a)j+as} = (-f2/f3)^k X_m"),
        d!("L5.6", MNRK_H, Double(6), RULE4, "sum C(k,j)C(j,s) (f1/f2)^j (-1/f1)^s X_{m-(b-c)k+(b-a)j+as} = (-f3/f2)^k X_m"),
        d!("L5E.1", MNRK_H, DoubleRewrite(1), RULE4, "sum C(k,j)C(k-j,s) (f3/f1)^j (f2/f1)^s X_{m-ak-(c-a)j-(b-a)s} = X_m / f1^k"),
        d!("L5E.2", MNRK_H, DoubleRewrite(2), RULE4, "sum C(k,j)C(k-j,s) (f2/f1)^j (f3/f1)^s X_{m-ak-(b-a)j-(c-a)s} = X_m / f1^k"),
        d!("L5E.3", MNRK_H, DoubleRewrite(3), RULE4, "sum C(k,j)C(k-j,s) (f1/f2)^j (f3/f2)^s X_{m-bk-(a-b)j-(c-b)s} = X_m / f2^k"),
        d!("L5E.4", MNRK_H, DoubleRewrite(4), RULE4, "sum C(k,j)C(k-j,s) (-1)^{j+s} f3^j f2^s X_{m+ak-cj-bs} = f1^k X_m"),
        d!("L5E.5", MNRK_H, DoubleRewrite(5), RULE4, "sum C(k,j)C(k-j,s) (-1)^{j+s} f3^j f1^s X_{m+bk-cj-as} = f2^k X_m"),
        d!("L5E.6", MNRK_H, DoubleRewrite(6), RULE4, "sum C(k,j)C(k-j,s) (-1)^{j+s} f2^j f1^s X_{m+ck-bj-as} = f3^k X_m"),
        d!("T1.1", MNRK, WeightedSum(1), "n != 0", "F_r sum (-1)^{rj} (F_{n+r}/F_n)^j G_{m+n+r+rj} = (-1)^{kr} F_n (F_{n+r}/F_n)^{k+1} G_{m+(k+1)r} - (-1)^r F_nG_m"),
        d!("T1.2", MNRK, WeightedSum(2), "n != 0", "F_{n+r} sum (-1)^{(r+1)j} (F_r/F_n)^j G_{m+r+(n+r)j} = (-1)^r F_nG_m + (-1)^{(r+1)k} F_n (F_r/F_n)^{k+1} G_{m+(k+1)(n+r)}"),
        d!("T1.3", MNRK, WeightedSum(3), "n+r != 0, n != 0", "sum (F_r/F_{n+r})^j G_{m-r+nj} = (-1)^r (F_{n+r}/F_n) G_m - (-1)^r (F_r/F_n)(F_r/F_{n+r})^k G_{m+(k+1)n}"),
        d!("T2.1", MNRK, BinomialSum(1), "n+r != 0", "sum (-1)^j C(k,j) (F_r/F_{r+n})^j G_{m+rk+nj} = (-1)^{rk} (F_n/F_{r+n})^k G_m"),
        d!("T2.2", MNRK, BinomialSum(2), "n != 0", "sum (-1)^{rj} C(k,j) (F_r/F_n)^j G_{m-rk+(n+r)j} = (-1)^{rk} (F_{n+r}/F_n)^k G_m"),
        d!("T2.3", MNRK, BinomialSum(3), "n != 0", "sum (-1)^j (-1)^{rj} C(k,j) (F_{n+r}/F_n)^j G_{m-(n+r)k+rj} = (-1)^k (-1)^{rk} (F_r/F_n)^k G_m"),
        d!("C1", NRK, Corollary(1), "n+r != 0", "sum (-1)^j C(k,j) (F_r/F_{r+n})^j G_{nj} = (F_n/F_{r+n})^k (F_{rk+1}G_0 - F_{rk}G_1)"),
        d!("C2", NK, Corollary(2), "n != 0", "sum (-1)^j C(k,j) G_{nj}/L_n^j = (F_{nk+1}G_0 - F_{nk}G_1)/L_n^k"),
        d!("C3", KG, Corollary(3), NONE, "sum (-1)^j C(k,j) G_j = F_{k+1}G_0 - F_kG_1"),
        d!("C4", NRK, Corollary(4), "n != 0", "sum (-1)^{rj} C(k,j) (F_r/F_n)^j G_{(n+r)j} = (-1)^{rk} (F_{n+r}/F_n)^k G_{rk}"),
        d!("C5", NRK, Corollary(5), "n != 0", "sum (-1)^j (-1)^{rj} C(k,j) (F_{n+r}/F_n)^j G_{rj} = (-1)^k (-1)^{rk} (F_r/F_n)^k G_{(n+r)k}"),
        d!("C6", NK, Corollary(6), "n != 0", "sum (-1)^{nj} C(k,j) G_{2nj} = (-1)^{nk} L_n^k G_{nk}"),
        d!("C7", KG, Corollary(7), NONE, "sum (-1)^j C(k,j) G_{2j} = (-1)^k G_k"),
        d!("C8", KG, Corollary(8), NONE, "sum C(k,j) G_j = G_{2k}"),
        d!("T3.1", MNK, DoubleBinomial(1), "n != 0", "sum_{s<=k-j} (-1)^{n(j+s)} C(k,j)C(k-j,s) F_n^{j+s} G_{m-2nk+(n+1)j+(n-1)s} = (-1)^{nk} G_m"),
        d!("T3.2", MNK, DoubleBinomial(2), "n != 0", "sum_{s<=k-j} (-1)^{n(j+s)} C(k,j)C(k-j,s) F_n^{j+s} G_{m-2nk+(n-1)j+(n+1)s} = (-1)^{nk} G_m"),
        d!("T3.3", MNK, DoubleBinomial(3), "n != 0", "sum_{s<=k-j} (-1)^{nj} C(k,j)C(k-j,s) G_{m-(n+1)k-(n-1)j+2s}/F_n^j = G_m/F_n^k"),
        d!("T3.4", MNK, DoubleBinomial(4), "n != 0", "sum_{s<=j} (-1)^s C(k,j)C(j,s) G_{m+(n+1)k-2j+(n+1)s}/F_n^s = (-1)^{(n+1)k} G_m/F_n^k"),
        d!("T3.5", MNK, DoubleBinomial(5), "n != 0", "sum_{s<=j} (-1)^{n(j+s)+s} C(k,j)C(j,s) G_{m+2k-(n+1)j+2ns}/F_n^j = (-1)^k G_m"),
        d!("T3.6", MNK, DoubleBinomial(6), "n != 0", "sum_{s<=j} (-1)^{n(j+s)+s} C(k,j)C(j,s) G_{m-2k-(n-1)j+2ns}/F_n^j = (-1)^k G_m"),
        d!("T4.1", MNRK_H, TwoSequenceDouble(1), "G_0 != 0", "sum_{s<=j} (-1)^{nj+s} C(k,j)C(j,s) G_{n+r}^{j-s}G_n^s/G_0^j H_{m+rk+(n-r)j+rs} = (G_r/G_0)^k H_m"),
        d!("T4.2", MNRK_H, TwoSequenceDouble(2), "G_{n+r} != 0", "sum_{s<=j} (-1)^{n(j+s)+s} C(k,j)C(j,s) G_0^{j-s}G_n^s/G_{n+r}^j H_{m+nk+(r-n)j+ns} = (-1)^{nk} (G_r/G_{n+r})^k H_m"),
        d!("T4.3", MNRK_H, TwoSequenceDouble(3), "G_n != 0", "sum_{s<=j} (-1)^{n(j+s)+j} C(k,j)C(j,s) G_0^{j-s}G_{n+r}^s/G_n^j H_{m+(n+r)k-nj+(n-r)s} = (-1)^{(n+1)k} (G_r/G_n)^k H_m"),
        d!("T4.4", MNRK_H, TwoSequenceDouble(4), "G_r != 0", "sum_{s<=k-j} (-1)^{ns+j+s} C(k,j)C(k-j,s) G_0^jG_{n+r}^s/G_r^{j+s} H_{m-(n+r)k+rj+ns} = (-1)^{(n+1)k} (G_n/G_r)^k H_m"),
        d!("T4.5", MNRK_H, TwoSequenceDouble(5), "G_r != 0", "sum_{s<=k-j} (-1)^{ns+j} C(k,j)C(k-j,s) G_0^jG_n^s/G_r^{j+s} H_{m-nk+rj+(n+r)s} = (-1)^{nk} (G_{n+r}/G_r)^k H_m"),
        d!("T4.6", MNRK_H, TwoSequenceDouble(6), "G_r != 0", "sum_{s<=k-j} (-1)^{n(j+s)+j} C(k,j)C(k-j,s) G_{n+r}^jG_n^s/G_r^{j+s} H_{m-rk+nj+(n+r)s} = (G_0/G_r)^k H_m"),
    ];
    all.sort_by(|a, b| a.id.cmp(b.id));
    all
}

/// Descriptors whose id starts with `filter`, sorted by id.
pub fn list_identities(filter: Option<&str>) -> Vec<IdentityDescriptor> {
    registry().into_iter().filter(|d| filter.is_none_or(|f| d.id.starts_with(f))).collect()
}

/// Resolves one selector: `all`, an exact id, or an id prefix.
pub fn select(selector: &str) -> Result<Vec<IdentityDescriptor>> {
    let reg = registry();
    if selector.eq_ignore_ascii_case("all") {
        return Ok(reg);
    }
    if let Some(d) = reg.iter().find(|d| d.id == selector) {
        return Ok(vec![d.clone()]);
    }
    let hits: Vec<_> = reg.into_iter().filter(|d| d.id.starts_with(selector)).collect();
    if hits.is_empty() {
        Err(Error::UnknownIdentity(selector.to_string()))
    } else {
        Ok(hits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_counts() {
        let all = list_identities(None);
        assert_eq!(all.len(), 51);
        let ids: HashSet<_> = all.iter().map(|d| d.id).collect();
        assert_eq!(ids.len(), 51);
        assert!(all.windows(2).all(|w| w[0].id < w[1].id));
        assert_eq!(list_identities(Some("I")).len(), 5);
        assert_eq!(list_identities(Some("T4")).len(), 6);
        assert_eq!(list_identities(Some("L5")).len(), 12);
        assert_eq!(list_identities(Some("C")).len(), 8);
        assert_eq!(list_identities(Some("ZZZ")).len(), 0);
    }

    #[test]
    fn select_by_exact_prefix_or_all() {
        assert_eq!(select("T2.2").unwrap().len(), 1);
        // exact match wins over prefix
        assert_eq!(select("L5.1").unwrap().len(), 1);
        assert_eq!(select("T1").unwrap().len(), 3);
        assert_eq!(select("all").unwrap().len(), 51);
        assert_eq!(select("Q9").unwrap_err(), Error::UnknownIdentity("Q9".into()));
    }

    #[test]
    fn params_are_canonically_ordered() {
        for d in registry() {
            assert!(d.params.windows(2).all(|w| w[0] < w[1]), "{}", d.id);
            assert!(d.uses(Param::G), "{}", d.id);
        }
    }
}
