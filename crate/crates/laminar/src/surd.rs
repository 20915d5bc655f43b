//! Exact arithmetic in real quadratic extensions of the rationals.
//!
//! A [`QuadExt`] value is `a + b*sqrt(d)` with `a`, `b` rational and `d` a
//! square-free positive integer.  Rational numbers are the special case
//! `b == 0` (canonically stored with `d == 1`).  These numbers arise as
//! fixed points of integer Moebius maps; the only operations needed are
//! field arithmetic within one extension, application of rational Moebius
//! maps, and exact comparison (which must work across two different
//! radicands).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Splits `n` into `(m, d)` with `n == m*m*d` and `d` square-free.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n > 0, "radicand must be positive");
    let mut m = 1u64;
    let mut d = n;
    let mut p = 2u64;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            m *= p;
        }
        p += 1;
    }
    (m, d)
}

/// `a + b*sqrt(d)` in canonical form: `d` square-free, and `d == 1`
/// exactly when `b == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: u64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> QuadExt {
        if b.is_zero() {
            return QuadExt { a, b, d: 1 };
        }
        let (m, d) = squarefree_decompose(d);
        if d == 1 {
            // the radical was actually rational
            return QuadExt {
                a: a + b * BigRational::from_integer(BigInt::from(m)),
                b: BigRational::zero(),
                d: 1,
            };
        }
        QuadExt {
            a,
            b: b * BigRational::from_integer(BigInt::from(m)),
            d,
        }
    }

    pub fn from_rational(a: BigRational) -> QuadExt {
        QuadExt {
            a,
            b: BigRational::zero(),
            d: 1,
        }
    }

    pub fn from_int(n: i64) -> QuadExt {
        QuadExt::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn sqrt(d: u64) -> QuadExt {
        QuadExt::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: `-1`, `0` or `1`.
    pub fn sign(&self) -> i32 {
        sign_rat_plus_radical(&self.a, &self.b, self.d)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Addition; the operands must be rational or share the radicand.
    pub fn add(&self, other: &QuadExt) -> QuadExt {
        let d = common_radicand(self, other);
        QuadExt::new(&self.a + &other.a, &self.b + &other.b, d)
    }

    pub fn sub(&self, other: &QuadExt) -> QuadExt {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        let d = common_radicand(self, other);
        let rad = BigRational::from_integer(BigInt::from(d));
        QuadExt::new(
            &self.a * &other.a + &self.b * &other.b * rad,
            &self.a * &other.b + &self.b * &other.a,
            d,
        )
    }

    pub fn scale(&self, q: &BigRational) -> QuadExt {
        QuadExt::new(&self.a * q, &self.b * q, self.d)
    }

    pub fn add_rational(&self, q: &BigRational) -> QuadExt {
        QuadExt::new(&self.a + q, self.b.clone(), self.d)
    }

    /// Multiplicative inverse via the conjugate.
    pub fn recip(&self) -> QuadExt {
        assert!(!self.is_zero(), "division by zero");
        let rad = BigRational::from_integer(BigInt::from(self.d));
        // norm = (a + b sqrt d)(a - b sqrt d)
        let norm = &self.a * &self.a - &self.b * &self.b * rad;
        assert!(!norm.is_zero(), "quadratic integer with zero norm");
        QuadExt::new(&self.a / &norm, -&self.b / &norm, self.d)
    }

    pub fn div(&self, other: &QuadExt) -> QuadExt {
        self.mul(&other.recip())
    }

    /// Float approximation, for rendering only.
    pub fn to_f64(&self) -> f64 {
        let a = rat_to_f64(&self.a);
        let b = rat_to_f64(&self.b);
        a + b * (self.d as f64).sqrt()
    }
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    let numer = bigint_to_f64(q.numer());
    let denom = bigint_to_f64(q.denom());
    numer / denom
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    use num::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

fn common_radicand(x: &QuadExt, y: &QuadExt) -> u64 {
    match (x.b.is_zero(), y.b.is_zero()) {
        (true, true) => 1,
        (true, false) => y.d,
        (false, true) => x.d,
        (false, false) => {
            assert_eq!(
                x.d, y.d,
                "arithmetic across distinct quadratic extensions is not defined"
            );
            x.d
        }
    }
}

fn rat_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `q + r*sqrt(d)` where `d` is square-free; exact.
fn sign_rat_plus_radical(q: &BigRational, r: &BigRational, d: u64) -> i32 {
    if r.is_zero() {
        return rat_sign(q);
    }
    debug_assert!(d > 1);
    if q.is_zero() {
        return rat_sign(r);
    }
    let sq = rat_sign(q);
    let sr = rat_sign(r);
    if sq == sr {
        return sq;
    }
    // opposite signs: compare q^2 with r^2 d; equality would make d a
    // rational square, impossible for square-free d > 1
    let rad = BigRational::from_integer(BigInt::from(d));
    match (q * q).cmp(&(r * r * rad)) {
        Ordering::Greater => sq,
        Ordering::Less => sr,
        Ordering::Equal => unreachable!("square-free radicand cannot be a rational square"),
    }
}

/// Sign of `q + r1*sqrt(d1) + r2*sqrt(d2)`, exact for square-free radicands.
fn sign_with_two_radicals(
    q: &BigRational,
    r1: &BigRational,
    d1: u64,
    r2: &BigRational,
    d2: u64,
) -> i32 {
    if r1.is_zero() {
        return sign_rat_plus_radical(q, r2, d2);
    }
    if r2.is_zero() {
        return sign_rat_plus_radical(q, r1, d1);
    }
    if d1 == d2 {
        return sign_rat_plus_radical(q, &(r1 + r2), d1);
    }
    // t = r1 sqrt(d1) + r2 sqrt(d2); distinct square-free radicands make
    // t irrational and nonzero
    let rad1 = BigRational::from_integer(BigInt::from(d1));
    let rad2 = BigRational::from_integer(BigInt::from(d2));
    let t_sign = if rat_sign(r1) == rat_sign(r2) {
        rat_sign(r1)
    } else {
        match (r1 * r1 * &rad1).cmp(&(r2 * r2 * &rad2)) {
            Ordering::Greater => rat_sign(r1),
            Ordering::Less => rat_sign(r2),
            Ordering::Equal => unreachable!("distinct square-free radicands"),
        }
    };
    if q.is_zero() {
        return t_sign;
    }
    let q_sign = rat_sign(q);
    if q_sign == t_sign {
        return q_sign;
    }
    // |q| vs |t|: compare q^2 with t^2 = r1^2 d1 + r2^2 d2 + 2 r1 r2 sqrt(d1 d2)
    let (m, dd) = squarefree_decompose(d1 * d2);
    let m_rat = BigRational::from_integer(BigInt::from(m));
    let rational_part = q * q - r1 * r1 * rad1 - r2 * r2 * rad2;
    let radical_coeff = -(BigRational::from_integer(BigInt::from(2)) * r1 * r2 * m_rat);
    let diff_sign = if dd == 1 {
        rat_sign(&(rational_part + radical_coeff))
    } else {
        sign_rat_plus_radical(&rational_part, &radical_coeff, dd)
    };
    match diff_sign {
        1 => q_sign,  // |q| > |t|
        -1 => t_sign, // |q| < |t|
        _ => unreachable!("sum of two distinct radicals cannot equal a nonzero rational"),
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &QuadExt) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &QuadExt) -> Ordering {
        let q = &self.a - &other.a;
        match sign_with_two_radicals(&q, &self.b, self.d, &-other.b.clone(), other.d) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            1 => Ordering::Greater,
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}
