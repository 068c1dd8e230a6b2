//! The five fundamental identities linking Fibonacci, Lucas and generalized
//! Fibonacci numbers, and the substitution that turns the fifth into the
//! first.

use std::fmt;
use std::str::FromStr;

use crate::engine::{SumComparison, TermAccessor};
use crate::exact::{from_int, sign_rat, Rational};
use crate::seq::{fib, lucas, SequenceSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fundamental {
    /// `G_{m+n} = F_{n-1} G_m + F_n G_{m+1}`
    I1,
    /// `G_{m+n} + (-1)^n G_{m-n} = L_n G_m`
    I2,
    /// `G_{m+n} - (-1)^n G_{m-n} = F_n (G_{m-1} + G_{m+1})`
    I3,
    /// `G_{n+r} H_{m+n} - G_n H_{m+n+r} = (-1)^n (G_r H_m - G_0 H_{m+r})`
    I4,
    /// `(-1)^r F_n G_m = F_{n+r} G_{m+r} - F_r G_{m+n+r}`
    I5,
}

impl Fundamental {
    pub const ALL: [Fundamental; 5] = [Self::I1, Self::I2, Self::I3, Self::I4, Self::I5];

    pub fn id(self) -> &'static str {
        match self {
            Self::I1 => "I1",
            Self::I2 => "I2",
            Self::I3 => "I3",
            Self::I4 => "I4",
            Self::I5 => "I5",
        }
    }
}

impl fmt::Display for Fundamental {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Fundamental {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|f| f.id() == s).ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parameters of one fundamental identity instance. `r` and `h` are ignored
/// by identities that do not mention them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalParams {
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub g: SequenceSpec,
    pub h: SequenceSpec,
}

impl FundamentalParams {
    /// Single-sequence parameters; `h` defaults to `g`.
    pub fn new(m: i64, n: i64, r: i64, g: SequenceSpec) -> Self {
        FundamentalParams { m, n, r, h: g.clone(), g }
    }
}

fn f(n: i64) -> Rational {
    from_int(fib(n))
}

pub fn check_fundamental(id: Fundamental, p: &FundamentalParams) -> SumComparison {
    fundamental_on(id, p.m, p.n, p.r, &p.g, &p.h)
}

/// [`check_fundamental`] over arbitrary accessors for `G` and `H`.
pub fn fundamental_on<G, H>(id: Fundamental, m: i64, n: i64, r: i64, g: &G, h: &H) -> SumComparison
where
    G: TermAccessor + ?Sized,
    H: TermAccessor + ?Sized,
{
    let sn = sign_rat(n);
    let (lhs, rhs) = match id {
        Fundamental::I1 => (g.term(m + n), f(n - 1) * g.term(m) + f(n) * g.term(m + 1)),
        Fundamental::I2 => (g.term(m + n) + &sn * g.term(m - n), from_int(lucas(n)) * g.term(m)),
        Fundamental::I3 => (g.term(m + n) - &sn * g.term(m - n), f(n) * (g.term(m - 1) + g.term(m + 1))),
        Fundamental::I4 => (
            g.term(n + r) * h.term(m + n) - g.term(n) * h.term(m + n + r),
            sn * (g.term(r) * h.term(m) - g.term(0) * h.term(m + r)),
        ),
        Fundamental::I5 => {
            (sign_rat(r) * f(n) * g.term(m), f(n + r) * g.term(m + r) - f(r) * g.term(m + n + r))
        }
    };
    SumComparison::new(lhs, rhs)
}

/// Instantiates I5 at `(m+1, -n, n-1)` and compares its isolated
/// `F_{n'+r'} G_{m'+r'}` term (which is `G_{m+n}`) against the right side of
/// I1 at `(m, n)`.
pub fn check_eq1_from_eq5(m: i64, n: i64, spec: &SequenceSpec) -> SumComparison {
    eq1_from_eq5_on(m, n, spec)
}

pub fn eq1_from_eq5_on<G: TermAccessor + ?Sized>(m: i64, n: i64, g: &G) -> SumComparison {
    let (m5, n5, r5) = (m + 1, -n, n - 1);
    let isolated = f(n5 + r5) * g.term(m5 + r5);
    let eq1 = fundamental_on(Fundamental::I1, m, n, 0, g, g);
    SumComparison::new(isolated, eq1.rhs)
}

/// The remaining terms of the transformed I5, `(-1)^{r'} F_{n'} G_{m'} +
/// F_{r'} G_{m'+n'+r'}`, which must equal the isolated term.
pub fn i5_transformed_remainder<G: TermAccessor + ?Sized>(m: i64, n: i64, g: &G) -> Rational {
    let (m5, n5, r5) = (m + 1, -n, n - 1);
    sign_rat(r5) * f(n5) * g.term(m5) + f(r5) * g.term(m5 + n5 + r5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn seeds() -> Vec<SequenceSpec> {
        vec![
            SequenceSpec::fibonacci(),
            SequenceSpec::lucas(),
            SequenceSpec::new(3, 7),
            SequenceSpec::new(-2, 5),
        ]
    }

    #[test]
    fn i2_example() {
        let c =
            check_fundamental(Fundamental::I2, &FundamentalParams::new(5, 2, 0, SequenceSpec::fibonacci()));
        assert_eq!(c.lhs, rat(15));
        assert_eq!(c.rhs, rat(15));
        assert!(c.equal);
    }

    #[test]
    fn i5_example() {
        let c =
            check_fundamental(Fundamental::I5, &FundamentalParams::new(3, 2, 1, SequenceSpec::fibonacci()));
        assert_eq!(c.lhs, rat(-2));
        assert_eq!(c.rhs, rat(-2));
    }

    #[test]
    fn i4_with_n_zero_is_syntactic() {
        let mut p = FundamentalParams::new(4, 0, 3, SequenceSpec::lucas());
        p.h = SequenceSpec::fibonacci();
        let c = check_fundamental(Fundamental::I4, &p);
        let g = &p.g;
        let h = &p.h;
        let expect = from_int(g.term(3) * h.term(4) - g.term(0) * h.term(7));
        assert_eq!(c.lhs, expect);
        assert_eq!(c.rhs, expect);
    }

    #[test]
    fn small_cube_all_pass() {
        for g in seeds() {
            for h in seeds() {
                for m in -6..=6 {
                    for n in -6..=6 {
                        for r in -6..=6 {
                            let p = FundamentalParams { m, n, r, g: g.clone(), h: h.clone() };
                            for id in Fundamental::ALL {
                                assert!(check_fundamental(id, &p).equal, "{id} {m} {n} {r}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn i4_swapped_roles_match_direct_evaluation() {
        let g = SequenceSpec::new(3, 7);
        for (n, r) in [(2, 5), (5, 2), (-3, 4), (4, -3)] {
            let c = fundamental_on(Fundamental::I4, 1, n, r, &g, &g);
            let lhs = from_int(g.term(n + r) * g.term(1 + n) - g.term(n) * g.term(1 + n + r));
            assert_eq!(c.lhs, lhs);
            assert!(c.equal);
        }
    }

    #[test]
    fn eq1_from_eq5_examples() {
        let c = check_eq1_from_eq5(4, 3, &SequenceSpec::fibonacci());
        assert_eq!(c.lhs, rat(13));
        assert_eq!(c.rhs, rat(13));
        let l = SequenceSpec::lucas();
        let c = check_eq1_from_eq5(0, 0, &l);
        assert_eq!(c.lhs, rat(2));
        assert!(c.equal);
        let c = check_eq1_from_eq5(-2, 5, &l);
        assert!(c.equal);
        assert_eq!(i5_transformed_remainder(-2, 5, &l), c.lhs);
    }

    #[test]
    fn parse_ids() {
        assert_eq!("I3".parse::<Fundamental>().unwrap(), Fundamental::I3);
        assert!("I6".parse::<Fundamental>().is_err());
    }
}
