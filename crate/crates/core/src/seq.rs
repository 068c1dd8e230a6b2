//! Term evaluation for Fibonacci, Lucas and arbitrary-seed generalized
//! Fibonacci sequences at every integer index.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::engine::TermAccessor;
use crate::exact::{from_int, Integer, Rational};
use crate::{Error, Result};

/// Largest `|m|` the stepping oracle will unroll.
pub const ORACLE_BOUND: i64 = 10_000;

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair(n: u64) -> (Integer, Integer) {
    let mut a = Integer::zero();
    let mut b = Integer::one();
    if n == 0 {
        return (a, b);
    }
    let top = 63 - n.leading_zeros();
    for bit in (0..=top).rev() {
        // F_{2i} = F_i (2F_{i+1} - F_i), F_{2i+1} = F_i^2 + F_{i+1}^2
        let two_b = &b << 1usize;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// `(F_{n-1}, F_n)` for any integer `n`.
fn fib_prev_pair(n: i64) -> (Integer, Integer) {
    if n >= 1 {
        let (prev, cur) = fib_pair((n - 1) as u64);
        (prev, cur)
    } else {
        // F_{-p-1} = (-1)^p F_{p+1}, F_{-p} = (-1)^{p+1} F_p with p = -n.
        let p = n.unsigned_abs();
        let (fp, fp1) = fib_pair(p);
        if p & 1 == 0 {
            (fp1, -fp)
        } else {
            (-fp1, fp)
        }
    }
}

/// The Fibonacci number `F_n` for any integer `n`.
pub fn fib(n: i64) -> Integer {
    let (f, _) = fib_pair(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// The Lucas number `L_n` for any integer `n`.
pub fn lucas(n: i64) -> Integer {
    let p = n.unsigned_abs();
    let (f, f1) = fib_pair(p);
    let l = (f1 << 1usize) - f;
    if n < 0 && p % 2 == 1 {
        -l
    } else {
        l
    }
}

/// Binomial coefficient `C(k, j)`; zero when `j` falls outside `0..=k`.
pub fn binom(k: i64, j: i64) -> Result<Integer> {
    if k < 0 {
        return Err(Error::NegativeBinomialTop(k));
    }
    if j < 0 || j > k {
        return Ok(Integer::zero());
    }
    let j = j.min(k - j);
    let mut acc = Integer::one();
    for i in 0..j {
        acc *= k - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Row `[C(k,0), ..., C(k,k)]`.
pub fn binom_row(k: usize) -> Vec<Integer> {
    let mut row = Vec::with_capacity(k + 1);
    let mut cur = Integer::one();
    row.push(cur.clone());
    for i in 0..k {
        cur = cur * (k - i) / (i + 1);
        row.push(cur.clone());
    }
    row
}

/// Seeds `(G_0, G_1)` of a generalized Fibonacci sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    pub g0: Integer,
    pub g1: Integer,
    pub label: String,
}

impl SequenceSpec {
    pub fn new(g0: impl Into<Integer>, g1: impl Into<Integer>) -> Self {
        let (g0, g1) = (g0.into(), g1.into());
        let label = format!("{},{}", g0, g1);
        SequenceSpec { g0, g1, label }
    }

    pub fn fibonacci() -> Self {
        SequenceSpec { label: "fibonacci".into(), ..Self::new(0, 1) }
    }

    pub fn lucas() -> Self {
        SequenceSpec { label: "lucas".into(), ..Self::new(2, 1) }
    }

    pub fn term(&self, m: i64) -> Integer {
        gen_term(self, m)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl FromStr for SequenceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "fibonacci" | "fib" => return Ok(Self::fibonacci()),
            "lucas" => return Ok(Self::lucas()),
            _ => {}
        }
        let bad = || Error::BadSequence(s.to_string());
        let (a, b) = t.split_once(',').ok_or_else(bad)?;
        let g0 = a.trim().parse::<Integer>().map_err(|_| bad())?;
        let g1 = b.trim().parse::<Integer>().map_err(|_| bad())?;
        Ok(Self::new(g0, g1))
    }
}

impl TermAccessor for SequenceSpec {
    fn term(&self, m: i64) -> Rational {
        from_int(gen_term(self, m))
    }
}

/// `G_m` for any integer `m`.
///
/// Non-negative indices use `G_m = F_{m-1} G_0 + F_m G_1`; negative indices
/// use `G_{-p} = (-1)^p (F_{p+1} G_0 - F_p G_1)`.
pub fn gen_term(spec: &SequenceSpec, m: i64) -> Integer {
    if m >= 0 {
        let (prev, cur) = fib_prev_pair(m);
        prev * &spec.g0 + cur * &spec.g1
    } else {
        let p = m.unsigned_abs();
        let (fp, fp1) = fib_pair(p);
        let v = fp1 * &spec.g0 - fp * &spec.g1;
        if p & 1 == 0 {
            v
        } else {
            -v
        }
    }
}

/// `G_m` by stepping the recurrence one index at a time. Independent of the
/// fast path and bounded by [`ORACLE_BOUND`].
pub fn gen_term_oracle(spec: &SequenceSpec, m: i64) -> Result<Integer> {
    if m.abs() > ORACLE_BOUND {
        return Err(Error::IndexOutOfBounds { index: m, bound: ORACLE_BOUND });
    }
    // (x, y) = (G_i, G_{i+1})
    let mut x = spec.g0.clone();
    let mut y = spec.g1.clone();
    if m >= 0 {
        for _ in 0..m {
            let next = &x + &y;
            x = std::mem::replace(&mut y, next);
        }
    } else {
        for _ in 0..(-m) {
            let prev = &y - &x;
            y = std::mem::replace(&mut x, prev);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn iterate_fib(n: i64) -> Integer {
        gen_term_oracle(&SequenceSpec::fibonacci(), n).unwrap()
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib(0), int(0));
        assert_eq!(fib(10), int(55));
        assert_eq!(fib(-4), int(-3));
        assert_eq!(fib(-1), int(1));
        assert_eq!(fib(93), "12200160415121876738".parse::<Integer>().unwrap());
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(0), int(2));
        assert_eq!(lucas(4), int(7));
        assert_eq!(lucas(-3), int(-4));
        assert_eq!(lucas(-2), int(3));
    }

    #[test]
    fn gen_term_examples() {
        let l = SequenceSpec::new(2, 1);
        assert_eq!(gen_term(&l, 4), int(7));
        assert_eq!(gen_term(&l, -3), int(-4));
        let f = SequenceSpec::new(0, 1);
        for m in -40..=40 {
            assert_eq!(gen_term(&f, m), fib(m));
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(gen_term_oracle(&SequenceSpec::new(0, 1), 10).unwrap(), int(55));
        assert_eq!(gen_term_oracle(&SequenceSpec::new(3, 7), 0).unwrap(), int(3));
        assert_eq!(gen_term_oracle(&SequenceSpec::new(3, 7), -1).unwrap(), int(4));
        assert_eq!(
            gen_term_oracle(&SequenceSpec::fibonacci(), 10_001),
            Err(Error::IndexOutOfBounds { index: 10_001, bound: ORACLE_BOUND })
        );
        assert!(gen_term_oracle(&SequenceSpec::fibonacci(), -10_000).is_ok());
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2).unwrap(), int(10));
        assert_eq!(binom(4, 0).unwrap(), int(1));
        assert_eq!(binom(3, 5).unwrap(), int(0));
        assert_eq!(binom(3, -1).unwrap(), int(0));
        assert_eq!(binom(-1, 0), Err(Error::NegativeBinomialTop(-1)));
    }

    #[test]
    fn binom_matches_pascal() {
        let mut row = vec![int(1)];
        for k in 1..=40i64 {
            let mut next = vec![int(1)];
            next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
            next.push(int(1));
            row = next;
            for j in 0..=k {
                assert_eq!(binom(k, j).unwrap(), row[j as usize]);
            }
            assert_eq!(binom_row(k as usize), row);
        }
    }

    #[test]
    fn fib_zero_only_at_zero() {
        for n in -300..=300 {
            assert_eq!(fib(n).is_zero(), n == 0, "n = {n}");
        }
    }

    #[test]
    fn fast_paths_match_iteration() {
        let l = SequenceSpec::lucas();
        for n in -300..=300 {
            assert_eq!(fib(n), iterate_fib(n), "fib {n}");
            assert_eq!(lucas(n), gen_term_oracle(&l, n).unwrap(), "lucas {n}");
        }
    }

    #[test]
    fn negation_parity() {
        for n in 0..=200i64 {
            let s = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(fib(-n), fib(n) * s);
            assert_eq!(lucas(-n), lucas(n) * -s);
        }
    }

    #[test]
    fn parse_sequence() {
        assert_eq!("fibonacci".parse::<SequenceSpec>().unwrap(), SequenceSpec::fibonacci());
        assert_eq!("Lucas".parse::<SequenceSpec>().unwrap(), SequenceSpec::lucas());
        let s: SequenceSpec = "-2, 5".parse().unwrap();
        assert_eq!((s.g0, s.g1), (int(-2), int(5)));
        assert!("fibonaci".parse::<SequenceSpec>().is_err());
        assert!("1,x".parse::<SequenceSpec>().is_err());
        assert!("1".parse::<SequenceSpec>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn recurrence_holds(g0 in -100i64..=100, g1 in -100i64..=100, m in -200i64..=200) {
                let s = SequenceSpec::new(g0, g1);
                prop_assert_eq!(gen_term(&s, m), gen_term(&s, m - 1) + gen_term(&s, m - 2));
            }

            #[test]
            fn agrees_with_oracle(g0 in -100i64..=100, g1 in -100i64..=100, m in -300i64..=300) {
                let s = SequenceSpec::new(g0, g1);
                prop_assert_eq!(gen_term(&s, m), gen_term_oracle(&s, m).unwrap());
            }
        }
    }
}
