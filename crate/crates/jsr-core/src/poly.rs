//! Dense polynomials over the rationals, with Sturm chains for exact real
//! root counting at rational or quadratic-surd evaluation points.
//!
//! This is the exactness backbone for comparing Perron roots of nonnegative
//! matrices without floating point: the spectral radius of a nonnegative
//! matrix is a real root of its characteristic polynomial, so questions like
//! "is rho(M) greater than this surd" reduce to signed root counts.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::surd::QuadSurd;

/// Polynomial with rational coefficients, ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a quadratic surd; exact within `Q(sqrt(r))`.
    pub fn eval_surd(&self, x: &QuadSurd) -> QuadSurd {
        let mut acc = QuadSurd::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_rational(c);
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i as i64)))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    fn scale(&self, s: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Division with remainder; divisor must be nonzero.
    pub fn divrem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - c * &factor;
                    rem[k + i] = v;
                }
            }
            quo[k] = factor;
            rem.pop();
        }
        (RatPoly::from_coeffs(quo), RatPoly::from_coeffs(rem))
    }

    /// Monic gcd via the Euclidean algorithm, with per-step normalization to
    /// keep coefficient growth in check.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.normalized();
        let mut b = other.normalized();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.normalized();
        }
        a
    }

    fn normalized(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&(BigRational::one() / l)),
        }
    }

    /// `p / gcd(p, p')`: same real roots, all simple.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().is_none_or(|d| d <= 1) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.divrem(&g).0
    }

    /// Rational `B` with every real root of the polynomial strictly below it.
    pub fn root_upper_bound(&self) -> BigRational {
        let lead = match self.leading() {
            None => return BigRational::one(),
            Some(l) => l.abs(),
        };
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = c.abs() / &lead;
            if q > m {
                m = q;
            }
        }
        m + BigRational::from(BigInt::from(2))
    }
}

/// Evaluation point for Sturm queries.
#[derive(Clone, Debug)]
pub enum AlgPoint {
    Rat(BigRational),
    Surd(QuadSurd),
}

impl AlgPoint {
    fn sign_of(&self, p: &RatPoly) -> Ordering {
        match self {
            AlgPoint::Rat(x) => {
                let v = p.eval(x);
                if v.is_zero() {
                    Ordering::Equal
                } else if v.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            AlgPoint::Surd(x) => p.eval_surd(x).sign(),
        }
    }

    fn cmp_rational(&self, q: &BigRational) -> Ordering {
        match self {
            AlgPoint::Rat(x) => x.cmp(q),
            AlgPoint::Surd(x) => x.cmp_exact(&QuadSurd::from_rational(q.clone())),
        }
    }
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Builds the chain. `p` must be squarefree (use [`RatPoly::squarefree_part`]).
    pub fn new(p: &RatPoly) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.clone());
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // negate and rescale by |leading| to curb coefficient growth;
            // positive scaling preserves all signs
            let neg = r.scale(&(-BigRational::one() / r.leading().unwrap().abs()));
            chain.push(neg);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &AlgPoint) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = x.sign_of(p);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`. Requires `p(a) != 0`.
    pub fn count_in(&self, a: &AlgPoint, b: &BigRational) -> usize {
        let va = self.variations_at(a);
        let vb = self.variations_at(&AlgPoint::Rat(b.clone()));
        va.saturating_sub(vb)
    }
}

/// Number of real roots of squarefree `p` strictly greater than `x`.
/// Handles `p(x) = 0` exactly by deflating the known root first.
pub fn count_roots_above(p: &RatPoly, x: &AlgPoint) -> usize {
    if p.degree().is_none() {
        return 0;
    }
    if p.degree() == Some(0) {
        return 0;
    }
    match x.sign_of(p) {
        Ordering::Equal => match x {
            AlgPoint::Rat(q) => {
                // p = (X - q) * rest, count roots of rest above q
                let lin = RatPoly::from_coeffs(vec![-q.clone(), BigRational::one()]);
                let (quo, rem) = p.divrem(&lin);
                debug_assert!(rem.is_zero());
                count_roots_above(&quo, x)
            }
            AlgPoint::Surd(s) => {
                if let Some(q) = s.as_rational() {
                    return count_roots_above(p, &AlgPoint::Rat(q.clone()));
                }
                // minimal polynomial X^2 - 2a X + (a^2 - b^2 r) divides p;
                // its other root is the conjugate a - b*sqrt(r)
                let a = s.rational_part();
                let b = s.radical_coeff();
                let r = BigRational::from(s.radicand().clone());
                let min_poly = RatPoly::from_coeffs(vec![
                    a * a - b * b * &r,
                    -(a + a),
                    BigRational::one(),
                ]);
                let (quo, rem) = p.divrem(&min_poly);
                debug_assert!(rem.is_zero());
                let conj = QuadSurd::new(a.clone(), -b.clone(), s.radicand().clone());
                let extra = usize::from(conj.cmp_exact(s) == Ordering::Greater);
                extra + count_roots_above(&quo, x)
            }
        },
        _ => {
            let bound = p.root_upper_bound();
            if x.cmp_rational(&bound) != Ordering::Less {
                return 0;
            }
            SturmChain::new(p).count_in(x, &bound)
        }
    }
}

/// Largest real root of squarefree `p` within `[0, upper]`, enclosed to
/// width `<= eps` by Sturm bisection. Returns None when `p` has no real
/// root `>= 0`. The enclosure is exact when the root is hit by a bisection
/// point.
pub fn largest_root_enclosure(
    p: &RatPoly,
    eps: &BigRational,
) -> Option<(BigRational, BigRational)> {
    let deg = p.degree()?;
    if deg == 0 {
        return None;
    }
    let zero = BigRational::zero();
    let zero_pt = AlgPoint::Rat(zero.clone());
    let above_zero = count_roots_above(p, &zero_pt);
    if above_zero == 0 {
        return if p.eval(&zero).is_zero() {
            Some((zero.clone(), zero))
        } else {
            None
        };
    }
    let mut lo = zero;
    let mut hi = p.root_upper_bound();
    let two = BigRational::from(BigInt::from(2));
    // invariant: largest root in (lo, hi], count_roots_above(lo) >= 1
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_zero() {
            if count_roots_above(p, &AlgPoint::Rat(mid.clone())) == 0 {
                return Some((mid.clone(), mid));
            }
            lo = mid;
            continue;
        }
        if count_roots_above(p, &AlgPoint::Rat(mid.clone())) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo, hi))
}
