//! Exact arithmetic on real quadratic surds `a + b*sqrt(r)`.
//!
//! Values are kept exact: `a`, `b` are rationals and `r` is a nonnegative
//! integer radicand. Comparisons across different radicands are decided
//! exactly by sign analysis and squaring, never by floating point.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b*sqrt(r)` with `r >= 0`. Normalized so that a rational value has
/// `b = 0, r = 0`, and small square factors of `r` are folded into `b`.
#[derive(Clone, Debug)]
pub struct QuadSurd {
    a: BigRational,
    b: BigRational,
    r: BigInt,
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Splits `n >= 0` as `s^2 * d` with `d` free of square factors up to the
/// trial bound. Exactness of comparisons does not depend on the bound; it
/// only canonicalizes the printed form.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!n.is_negative());
    if n.is_zero() || n.is_one() {
        return (BigInt::one(), n.clone());
    }
    let root = n.sqrt();
    if &root * &root == *n {
        return (root, BigInt::one());
    }
    let mut s = BigInt::one();
    let mut d = n.clone();
    let mut p = big(2);
    while &p * &p <= d && p <= big(257) {
        let sq = &p * &p;
        while (&d % &sq).is_zero() {
            d /= &sq;
            s *= &p;
        }
        p = if p == big(2) { big(3) } else { p + 2 };
    }
    let root = d.sqrt();
    if &root * &root == d {
        return (s * root, BigInt::one());
    }
    (s, d)
}

impl QuadSurd {
    pub fn new(a: BigRational, b: BigRational, r: BigInt) -> Self {
        assert!(!r.is_negative(), "negative radicand");
        if b.is_zero() || r.is_zero() {
            return QuadSurd { a, b: BigRational::zero(), r: BigInt::zero() };
        }
        let (s, d) = extract_square(&r);
        if d.is_one() {
            // sqrt(r) is the integer s
            let a = a + &b * BigRational::from(s);
            return QuadSurd { a, b: BigRational::zero(), r: BigInt::zero() };
        }
        QuadSurd { a, b: b * BigRational::from(s), r: d }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadSurd { a, b: BigRational::zero(), r: BigInt::zero() }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from(big(n)))
    }

    /// Exact `sqrt(x)` of a nonnegative rational, as `sqrt(p*q)/q` for `x = p/q`.
    pub fn sqrt_of_rational(x: &BigRational) -> Self {
        assert!(!x.is_negative(), "negative rational under sqrt");
        let radicand = x.numer() * x.denom();
        QuadSurd::new(
            BigRational::zero(),
            BigRational::new(BigInt::one(), x.denom().clone()),
            radicand,
        )
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.r
    }

    /// Exact sign of the value.
    pub fn sign(&self) -> Ordering {
        sign_pair(&self.a, &self.b, &self.r)
    }

    pub fn neg(&self) -> Self {
        QuadSurd { a: -&self.a, b: -&self.b, r: self.r.clone() }
    }

    pub fn add_rational(&self, q: &BigRational) -> Self {
        QuadSurd { a: &self.a + q, b: self.b.clone(), r: self.r.clone() }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return QuadSurd::zero();
        }
        QuadSurd { a: &self.a * q, b: &self.b * q, r: self.r.clone() }
    }

    fn same_field(&self, other: &Self) -> bool {
        self.b.is_zero() || other.b.is_zero() || self.r == other.r
    }

    /// Sum within a common field `Q(sqrt(r))`. Panics if the radicands are
    /// distinct and both parts are irrational; callers compare across fields
    /// with [`QuadSurd::cmp_exact`] instead.
    pub fn add(&self, other: &Self) -> Self {
        assert!(self.same_field(other), "surd addition across different radicands");
        let r = if self.b.is_zero() { other.r.clone() } else { self.r.clone() };
        QuadSurd::new(&self.a + &other.a, &self.b + &other.b, r)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product within a common field.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.same_field(other), "surd product across different radicands");
        let r = if self.b.is_zero() { other.r.clone() } else { self.r.clone() };
        let rr = BigRational::from(r.clone());
        let a = &self.a * &other.a + &self.b * &other.b * &rr;
        let b = &self.a * &other.b + &self.b * &other.a;
        QuadSurd::new(a, b, r)
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut result = QuadSurd::one();
        let mut base = self.clone();
        let mut e = e;
        if e == 0 {
            return result;
        }
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result
    }

    /// Exact three-way comparison, valid across different radicands.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if self.same_field(other) {
            return self.sub(other).sign();
        }
        // (a1 - a2) + b1*sqrt(r1)  vs  b2*sqrt(r2)
        let u = &self.a - &other.a;
        let lhs_sign = sign_pair(&u, &self.b, &self.r);
        let rhs_sign = other.b.sign_ordering();
        match (lhs_sign, rhs_sign) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (Ordering::Equal, s) => s.reverse(),
            (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Less) => Ordering::Greater,
            (Ordering::Less, Ordering::Greater) => Ordering::Less,
            (s, _) => {
                // both sides share the sign s; compare squares
                let r_rat = BigRational::from(self.r.clone());
                let lhs_sq_rat = &u * &u + &self.b * &self.b * &r_rat;
                let lhs_sq_coeff = BigRational::from(big(2)) * &u * &self.b;
                let rhs_sq =
                    &other.b * &other.b * BigRational::from(other.r.clone());
                let diff = sign_pair(&(lhs_sq_rat - rhs_sq), &lhs_sq_coeff, &self.r);
                if s == Ordering::Greater {
                    diff
                } else {
                    diff.reverse()
                }
            }
        }
    }

    /// Exact square root within the same field `Q(sqrt(r))`, when one
    /// exists: the nonnegative `s` with `s * s = self`. Rational values are
    /// not given radical roots here (that changes the field).
    pub fn sqrt_in_field(&self) -> Option<QuadSurd> {
        if self.b.is_zero() || self.sign() == Ordering::Less {
            return None;
        }
        // s = u + v sqrt(r) solves u^2 + v^2 r = a, 2uv = b, which forces
        // u^2 = (a +- sqrt(a^2 - b^2 r)) / 2
        let norm = &self.a * &self.a - &self.b * &self.b * BigRational::from(self.r.clone());
        let n = rational_sqrt(&norm)?;
        let two = BigRational::from(big(2));
        for u2 in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            let u = match rational_sqrt(&u2) {
                Some(u) if !u.is_zero() => u,
                _ => continue,
            };
            let v = &self.b / (&u * &two);
            let s = QuadSurd::new(u, v, self.r.clone());
            if s.sign() != Ordering::Less && s.mul(&s).cmp_exact(self) == Ordering::Equal {
                return Some(s);
            }
            let s = s.neg();
            if s.sign() != Ordering::Less && s.mul(&s).cmp_exact(self) == Ordering::Equal {
                return Some(s);
            }
        }
        None
    }

    /// Rational enclosure `[lo, hi]` with `hi - lo <= eps`.
    pub fn enclosure(&self, eps: &BigRational) -> (BigRational, BigRational) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        // enclose sqrt(r) to within eps / (|b| * 2), then combine outward
        let scale = self.b.abs() * BigRational::from(big(2));
        let target = eps / scale;
        let (slo, shi) = sqrt_enclosure(&self.r, &target);
        let (t1, t2) = (&self.a + &self.b * slo, &self.a + &self.b * shi);
        if t1 <= t2 {
            (t1, t2)
        } else {
            (t2, t1)
        }
    }

    /// f64 estimate; only ever used to order candidate shortlists, never to
    /// decide a comparison.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        a + b * r.sqrt()
    }
}

impl PartialEq for QuadSurd {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}
impl Eq for QuadSurd {}
impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl std::fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        // render (p + q*sqrt(r))/d over a common denominator d
        let d = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&d / self.a.denom());
        let q = self.b.numer() * (&d / self.b.denom());
        let radical = if q.is_one() {
            format!("sqrt({})", self.r)
        } else if q == big(-1) {
            format!("-sqrt({})", self.r)
        } else {
            format!("{}*sqrt({})", q, self.r)
        };
        let body = if p.is_zero() {
            radical
        } else if q.is_negative() {
            format!("{}{}", p, radical)
        } else {
            format!("{}+{}", p, radical)
        };
        if d.is_one() {
            if p.is_zero() {
                write!(f, "{}", body)
            } else {
                write!(f, "({})", body)
            }
        } else {
            write!(f, "({})/{}", body, d)
        }
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}
impl SignOrdering for BigRational {
    fn sign_ordering(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Exact square root of a nonnegative rational, when rational.
fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &ns * &ns == *x.numer() && &ds * &ds == *x.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Exact sign of `a + b*sqrt(r)`.
fn sign_pair(a: &BigRational, b: &BigRational, r: &BigInt) -> Ordering {
    if b.is_zero() || r.is_zero() {
        return a.sign_ordering();
    }
    if a.is_zero() {
        return b.sign_ordering();
    }
    match (a.is_positive(), b.is_positive()) {
        (true, true) => Ordering::Greater,
        (false, false) => Ordering::Less,
        (true, false) => {
            // positive iff a^2 > b^2 r
            let lhs = a * a;
            let rhs = b * b * BigRational::from(r.clone());
            lhs.cmp(&rhs)
        }
        (false, true) => {
            let lhs = b * b * BigRational::from(r.clone());
            let rhs = a * a;
            lhs.cmp(&rhs)
        }
    }
}

/// Bits of dyadic precision needed for a width-`eps` enclosure.
fn precision_bits(eps: &BigRational) -> u32 {
    let inv = eps.recip();
    let bits = (inv.numer().abs() / inv.denom().abs()).bits() as u32;
    bits + 2
}

/// Dyadic enclosure of `sqrt(n)` for integer `n >= 0`, width `<= eps`,
/// from one integer square root at scaled precision.
pub fn sqrt_enclosure(n: &BigInt, eps: &BigRational) -> (BigRational, BigRational) {
    if n.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let root = n.sqrt();
    if &root * &root == *n {
        let v = BigRational::from(root);
        return (v.clone(), v);
    }
    let k = precision_bits(eps);
    let scaled = n << (2 * k);
    let r = scaled.sqrt();
    let denom = BigInt::one() << k;
    (
        BigRational::new(r.clone(), denom.clone()),
        BigRational::new(r + 1, denom),
    )
}

/// Dyadic enclosure of `x^(1/t)` for rational `x >= 0`, width `<= eps`,
/// from one integer t-th root at scaled precision.
pub fn nth_root_enclosure(x: &BigRational, t: u32, eps: &BigRational) -> (BigRational, BigRational) {
    assert!(t >= 1);
    assert!(!x.is_negative());
    if t == 1 || x.is_zero() || x.is_one() {
        return (x.clone(), x.clone());
    }
    let k = precision_bits(eps);
    // floor((x * 2^(k t))^(1/t)) brackets x^(1/t) within 2^-k
    let scaled = (x.numer() << (k as usize * t as usize)) / x.denom();
    let r = scaled.nth_root(t);
    let denom = BigInt::one() << k;
    (
        BigRational::new(r.clone(), denom.clone()),
        BigRational::new(r + 1, denom),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(big(p), big(q))
    }

    fn surd(a_n: i64, a_d: i64, b_n: i64, b_d: i64, r: i64) -> QuadSurd {
        QuadSurd::new(rat(a_n, a_d), rat(b_n, b_d), big(r))
    }

    #[test]
    fn normalizes_perfect_squares() {
        // 1 + 2*sqrt(9) = 7
        let s = surd(1, 1, 2, 1, 9);
        assert_eq!(s.as_rational(), Some(&rat(7, 1)));
        // sqrt(8) = 2*sqrt(2)
        let s = surd(0, 1, 1, 1, 8);
        assert_eq!(s.radicand(), &big(2));
        assert_eq!(s.radical_coeff(), &rat(2, 1));
    }

    #[test]
    fn signs() {
        // 2 - sqrt(2) > 0
        assert_eq!(surd(2, 1, -1, 1, 2).sign(), Ordering::Greater);
        // 1 - sqrt(2) < 0
        assert_eq!(surd(1, 1, -1, 1, 2).sign(), Ordering::Less);
        // sqrt(4) - 2 = 0
        assert_eq!(surd(-2, 1, 1, 1, 4).sign(), Ordering::Equal);
        // -3 + sqrt(10) > 0
        assert_eq!(surd(-3, 1, 1, 1, 10).sign(), Ordering::Greater);
    }

    #[test]
    fn cross_field_comparison() {
        // sqrt(2) < sqrt(3)
        let s2 = surd(0, 1, 1, 1, 2);
        let s3 = surd(0, 1, 1, 1, 3);
        assert_eq!(s2.cmp_exact(&s3), Ordering::Less);
        // (1+sqrt(5))/2 vs sqrt(3): phi ~ 1.618 < 1.732
        let phi = surd(1, 2, 1, 2, 5);
        assert_eq!(phi.cmp_exact(&s3), Ordering::Less);
        // 17+12*sqrt(2) < 18+5*sqrt(13)  (33.97.. vs 36.02..)
        let x = surd(17, 1, 12, 1, 2);
        let y = surd(18, 1, 5, 1, 13);
        assert_eq!(x.cmp_exact(&y), Ordering::Less);
        // equality across representations: sqrt(8) = 2*sqrt(2)
        let a = QuadSurd::new(rat(0, 1), rat(1, 1), big(8));
        let b = QuadSurd::new(rat(0, 1), rat(2, 1), big(2));
        assert_eq!(a.cmp_exact(&b), Ordering::Equal);
    }

    #[test]
    fn powers() {
        let phi = surd(1, 2, 1, 2, 5);
        // phi^2 = phi + 1
        let sq = phi.powi(2);
        assert_eq!(sq.cmp_exact(&phi.add_rational(&rat(1, 1))), Ordering::Equal);
        // ((3+sqrt(13))/2)^2 = (11+3*sqrt(13))/2
        let s = surd(3, 2, 1, 2, 13);
        assert_eq!(s.powi(2), surd(11, 2, 3, 2, 13));
    }

    #[test]
    fn enclosures_bracket_the_value() {
        let eps = rat(1, 1_000_000_000_000);
        let s = surd(3, 2, 1, 2, 13); // (3+sqrt(13))/2 ~ 3.302775637
        let (lo, hi) = s.enclosure(&eps);
        assert!(&hi - &lo <= eps);
        assert_eq!(QuadSurd::from_rational(lo).cmp_exact(&s), Ordering::Less);
        assert_eq!(QuadSurd::from_rational(hi).cmp_exact(&s), Ordering::Greater);
    }

    #[test]
    fn nth_root_enclosures() {
        let eps = rat(1, 1_000_000_000);
        let (lo, hi) = nth_root_enclosure(&rat(4, 1), 5, &eps);
        // 4^(1/5) = 1.31950791...
        assert!(lo <= rat(1_319_507_911, 1_000_000_000));
        assert!(hi >= rat(1_319_507_910, 1_000_000_000));
        assert!(&hi - &lo <= eps);
        // roots of values below one stay below one
        let (lo, hi) = nth_root_enclosure(&rat(1, 32), 5, &eps);
        assert!(lo <= rat(1, 2) && rat(1, 2) <= hi);
    }

    #[test]
    fn sqrt_of_rational_is_exact() {
        let s = QuadSurd::sqrt_of_rational(&rat(9, 4));
        assert_eq!(s.as_rational(), Some(&rat(3, 2)));
        let s = QuadSurd::sqrt_of_rational(&rat(1, 2));
        // sqrt(1/2) = sqrt(2)/2
        assert_eq!(s, QuadSurd::new(rat(0, 1), rat(1, 2), big(2)));
    }

    #[test]
    fn in_field_square_roots() {
        // (3+sqrt(5))/2 = ((1+sqrt(5))/2)^2
        let base = surd(3, 2, 1, 2, 5);
        let root = base.sqrt_in_field().unwrap();
        assert_eq!(root, surd(1, 2, 1, 2, 5));
        // (3+sqrt(13))/2 has no square root in its own field
        assert!(surd(3, 2, 1, 2, 13).sqrt_in_field().is_none());
        // rational values are left alone
        assert!(surd(4, 1, 0, 1, 0).sqrt_in_field().is_none());
        // 7 + 4*sqrt(3) = (2 + sqrt(3))^2
        let s = surd(7, 1, 4, 1, 3).sqrt_in_field().unwrap();
        assert_eq!(s, surd(2, 1, 1, 1, 3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(surd(3, 2, 1, 2, 13).to_string(), "(3+sqrt(13))/2");
        assert_eq!(surd(0, 1, 1, 1, 2).to_string(), "sqrt(2)");
        assert_eq!(surd(5, 1, 0, 1, 0).to_string(), "5");
        assert_eq!(surd(1, 2, 1, 2, 5).to_string(), "(1+sqrt(5))/2");
    }
}
