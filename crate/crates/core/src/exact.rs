//! Integer and rational number types shared by every module, plus the few
//! helpers the identity evaluators lean on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact fraction of [`Integer`]s. Always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn from_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^e` as a rational.
pub fn sign_rat(e: i64) -> Rational {
    rat(sign(e))
}

/// `base^e` for any integer exponent. Panics on a zero base with a negative
/// exponent; callers guard against that.
pub fn powi(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow_u(base, e as u64)
    } else {
        assert!(!base.is_zero(), "zero raised to a negative power");
        pow_u(&base.recip(), e.unsigned_abs())
    }
}

fn pow_u(base: &Rational, mut e: u64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// `[1, w, w^2, ..., w^k]`.
pub fn powers(w: &Rational, k: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = Rational::one();
    for _ in 0..k {
        let next = &cur * w;
        out.push(cur);
        cur = next;
    }
    out.push(cur);
    out
}

/// Running sum of products of rationals kept over a common denominator
/// without reducing at every step. Denominators that divide one another are
/// merged by scaling, so sums whose weights share a base stay small.
#[derive(Clone, Debug)]
pub struct LazySum {
    num: Integer,
    den: Integer,
}

impl Default for LazySum {
    fn default() -> Self {
        Self::new()
    }
}

impl LazySum {
    pub fn new() -> Self {
        LazySum { num: Integer::zero(), den: Integer::one() }
    }

    /// Adds `coef * factors[0] * factors[1] * ...`.
    pub fn add_product(&mut self, coef: &Integer, factors: &[&Rational]) {
        if coef.is_zero() || factors.iter().any(|f| f.is_zero()) {
            return;
        }
        let mut tn = coef.clone();
        let mut td = Integer::one();
        for f in factors {
            if !f.numer().is_one() {
                tn *= f.numer();
            }
            if !f.denom().is_one() {
                td *= f.denom();
            }
        }
        self.add_raw(tn, td);
    }

    pub fn add(&mut self, q: &Rational) {
        self.add_product(&Integer::one(), &[q]);
    }

    fn add_raw(&mut self, tn: Integer, td: Integer) {
        use num_integer::Integer as _;
        if td == self.den {
            self.num += tn;
        } else if td.is_one() {
            self.num += tn * &self.den;
        } else {
            let (q, r) = self.den.div_rem(&td);
            if r.is_zero() {
                self.num += tn * q;
                return;
            }
            let (q, r) = td.div_rem(&self.den);
            if r.is_zero() {
                self.num = &self.num * q + tn;
                self.den = td;
                return;
            }
            let g = self.den.gcd(&td);
            let (a, b) = (&td / &g, &self.den / &g);
            self.num = &self.num * &a + tn * b;
            self.den *= a;
        }
    }

    pub fn finish(self) -> Rational {
        Rational::new(self.num, self.den)
    }
}

/// Canonical `num/den` text; integers keep the explicit `/1`.
pub fn fraction_text(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<Integer>().ok()?, d.trim().parse::<Integer>().ok()?),
        None => (s.trim().parse::<Integer>().ok()?, Integer::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// True when the fraction is in lowest terms with a positive denominator.
pub fn is_canonical(q: &Rational) -> bool {
    use num_integer::Integer as _;
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}
