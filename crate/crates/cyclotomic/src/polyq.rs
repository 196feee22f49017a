//! Polynomials over Q: monic gcd and lcm, extended gcd with Bézout
//! certificates, and exact conversion back to Z[Y].
//!
//! `monic_gcd` normalizes its inputs to primitive integer polynomials and runs
//! a primitive remainder sequence over Z (content stripped every step, i128
//! fast path with BigInt fallback); only the final normalization returns to Q.
//! `extended_gcd` keeps the textbook rational Euclid so the Bézout cofactors
//! come out directly, and verifies its certificate before returning.

use crate::polyz::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact rational scalar: lowest terms, positive denominator.
pub type Rational = BigRational;

/// A coefficient expected to be an integer has a nontrivial denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonIntegerCoefficient;

impl fmt::Display for NonIntegerCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial has a non-integer coefficient")
    }
}

impl std::error::Error for NonIntegerCoefficient {}

/// Dense polynomial over Q, same normalization as `IntPoly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

/// Monic gcd g with cofactors satisfying u·f1 + v·f2 = g exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: RatPoly,
    pub u: RatPoly,
    pub v: RatPoly,
}

impl RatPoly {
    /// Builds a polynomial, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Convenience constructor from integer coefficients, ascending degree.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        RatPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_int(f: &IntPoly) -> Self {
        RatPoly {
            coeffs: f
                .coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::from_i64s(&[1])
    }

    /// The binomial Y^n − 1.
    pub fn y_pow_minus_one(n: u64) -> Self {
        RatPoly::from_int(&IntPoly::y_pow_minus_one(n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of Y^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// The monic normalization f / lc(f).
    pub fn monic(&self) -> RatPoly {
        let lead = self.leading().expect("monic: zero polynomial").clone();
        self.scale(&lead.recip())
    }

    /// Scalar multiple c·f.
    pub fn scale(&self, c: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    /// Exact product; skips zero coefficients on both sides.
    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RatPoly::new(out)
    }

    /// Euclidean quotient and remainder; the divisor's nonzero coefficients
    /// drive the inner loop.
    pub fn divrem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "divrem: divisor is zero");
        let dlen = d.coeffs.len();
        if self.coeffs.len() < dlen {
            return (RatPoly::zero(), self.clone());
        }
        let dlead = d.coeffs[dlen - 1].clone();
        let dnz: Vec<(usize, &Rational)> = d.coeffs[..dlen - 1]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut q = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            if rem[k + dlen - 1].is_zero() {
                continue;
            }
            let qk = &rem[k + dlen - 1] / &dlead;
            for &(j, dj) in &dnz {
                let t = &qk * dj;
                rem[k + j] -= t;
            }
            rem[k + dlen - 1] = Rational::zero();
            q[k] = qk;
        }
        (RatPoly::new(q), RatPoly::new(rem))
    }

    /// Coefficients ascending, space-separated, rationals as "num/den" with
    /// "/1" suppressed; zero is "0".
    pub fn to_coeffs_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The unique monic gcd; gcd(f, 0) is the monic normalization of f.
pub fn monic_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    assert!(
        !(f.is_zero() && g.is_zero()),
        "monic_gcd: both inputs are zero"
    );
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let a = primitive_int_coeffs(f);
    let b = primitive_int_coeffs(g);
    let small = |v: &[BigInt]| -> Option<Vec<i128>> { v.iter().map(|c| c.to_i128()).collect() };
    let d = match (small(&a), small(&b)) {
        (Some(x), Some(y)) => {
            prs_gcd_i128(x, y).unwrap_or_else(|| prs_gcd_big(a, b))
        }
        _ => prs_gcd_big(a, b),
    };
    RatPoly::new(
        d.into_iter()
            .map(Rational::from_integer)
            .collect::<Vec<_>>(),
    )
    .monic()
}

/// Extended Euclid over Q; the returned certificate is verified before return.
pub fn extended_gcd(f: &RatPoly, g: &RatPoly) -> BezoutCertificate {
    assert!(
        !(f.is_zero() && g.is_zero()),
        "extended_gcd: both inputs are zero"
    );
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut u0, mut u1) = (RatPoly::one(), RatPoly::zero());
    let (mut v0, mut v1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let un = u0.sub(&q.mul(&u1));
        let vn = v0.sub(&q.mul(&v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = un;
        v0 = v1;
        v1 = vn;
    }
    let lead = r0.leading().expect("gcd of nonzero inputs is nonzero").clone();
    let inv = lead.recip();
    let cert = BezoutCertificate {
        g: r0.scale(&inv),
        u: u0.scale(&inv),
        v: v0.scale(&inv),
    };
    let check = cert.u.mul(f).add(&cert.v.mul(g));
    assert!(
        check == cert.g,
        "extended_gcd: Bézout certificate failed verification"
    );
    cert
}

/// Monic lcm via (f·g)/gcd(f, g).
pub fn monic_lcm(f: &RatPoly, g: &RatPoly) -> RatPoly {
    assert!(!f.is_zero() && !g.is_zero(), "monic_lcm: zero input");
    let d = monic_gcd(f, g);
    let (q, r) = f.mul(g).divrem(&d);
    assert!(r.is_zero(), "monic_lcm: gcd failed to divide the product");
    q.monic()
}

/// Left fold of `monic_lcm` over a nonempty list of nonzero polynomials.
pub fn lcm_many(fs: &[RatPoly]) -> RatPoly {
    assert!(!fs.is_empty(), "lcm_many: empty list");
    assert!(
        fs.iter().all(|f| !f.is_zero()),
        "lcm_many: zero entry"
    );
    let mut acc = fs[0].monic();
    for f in &fs[1..] {
        acc = monic_lcm(&acc, f);
    }
    acc
}

/// Exact conversion to Z[Y]; every denominator must be 1.
pub fn to_int_poly(f: &RatPoly) -> Result<IntPoly, NonIntegerCoefficient> {
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for c in &f.coeffs {
        if !c.is_integer() {
            return Err(NonIntegerCoefficient);
        }
        coeffs.push(c.numer().clone());
    }
    Ok(IntPoly::new(coeffs))
}

// ---- primitive remainder sequence over Z -------------------------------------

/// Clears denominators and strips content: the primitive integer polynomial
/// generating the same ideal in Q[Y].
fn primitive_int_coeffs(f: &RatPoly) -> Vec<BigInt> {
    let mut den_lcm = BigInt::one();
    for c in &f.coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    strip_content_big(ints)
}

fn strip_content_big(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut cont = BigInt::zero();
    for c in &v {
        cont = cont.gcd(c);
        if cont.is_one() {
            return v;
        }
    }
    if cont.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &cont).collect()
}

fn prs_gcd_big(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    while !b.is_empty() {
        let r = strip_content_big(prem_big(&a, &b));
        a = b;
        b = r;
    }
    // positive leading coefficient keeps the representative canonical
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -c.clone();
        }
    }
    a
}

/// Remainder of a by b up to a constant factor: whenever the leading
/// coefficient does not divide, the remainder is rescaled by lc(b) first
/// (lazy pseudo-division; gcd is unchanged up to units). Divisor nonzeros
/// drive the subtraction.
fn prem_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let blen = b.len();
    let blead = &b[blen - 1];
    let bnz: Vec<(usize, &BigInt)> = b[..blen - 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut r = a.to_vec();
    while r.len() >= blen {
        let rl = r.last().unwrap().clone();
        if rl.is_zero() {
            r.pop();
            continue;
        }
        let (q, rem) = rl.div_rem(blead);
        let q = if rem.is_zero() {
            q
        } else {
            // scale r by lc(b); the new leading term rl·lc(b) divides exactly
            for c in r.iter_mut() {
                *c *= blead;
            }
            rl
        };
        let shift = r.len() - blen;
        for &(j, bj) in &bnz {
            let t = &q * bj;
            r[shift + j] -= t;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn strip_content_i128(mut v: Vec<i128>) -> Option<Vec<i128>> {
    let mut cont: u128 = 0;
    for c in &v {
        cont = gcd_u128(cont, c.unsigned_abs());
        if cont == 1 {
            return Some(v);
        }
    }
    if cont == 0 {
        return Some(v);
    }
    let cont = i128::try_from(cont).ok()?;
    for c in v.iter_mut() {
        *c /= cont;
    }
    Some(v)
}

/// i128 twin of `prs_gcd_big`; None on any overflow (caller falls back).
fn prs_gcd_i128(mut a: Vec<i128>, mut b: Vec<i128>) -> Option<Vec<BigInt>> {
    while !b.is_empty() {
        let r = strip_content_i128(prem_i128(&a, &b)?)?;
        a = b;
        b = r;
    }
    if a.last().is_some_and(|&c| c < 0) {
        for c in a.iter_mut() {
            *c = c.checked_neg()?;
        }
    }
    Some(a.into_iter().map(BigInt::from).collect())
}

fn prem_i128(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let blen = b.len();
    let blead = b[blen - 1];
    let bnz: Vec<(usize, i128)> = b[..blen - 1]
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect();
    let mut r = a.to_vec();
    while r.len() >= blen {
        let rl = *r.last().unwrap();
        if rl == 0 {
            r.pop();
            continue;
        }
        let q = if rl % blead == 0 {
            rl.checked_div(blead)?
        } else {
            for c in r.iter_mut() {
                *c = c.checked_mul(blead)?;
            }
            rl
        };
        let shift = r.len() - blen;
        for &(j, bj) in &bnz {
            let t = q.checked_mul(bj)?;
            let slot = &mut r[shift + j];
            *slot = slot.checked_sub(t)?;
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ypm1(n: u64) -> RatPoly {
        RatPoly::y_pow_minus_one(n)
    }

    #[test]
    fn gcd_of_binomials_is_binomial_of_gcd() {
        assert_eq!(monic_gcd(&ypm1(6), &ypm1(4)), ypm1(2));
        // exhaustive over 1..=60
        let gcd = |a: u64, b: u64| {
            let (mut a, mut b) = (a, b);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        for m in 1..=60 {
            for n in 1..=60 {
                assert_eq!(
                    monic_gcd(&ypm1(m), &ypm1(n)),
                    ypm1(gcd(m, n)),
                    "m = {m}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn gcd_is_idempotent_and_monic() {
        let f = RatPoly::from_i64s(&[-2, 0, 2]); // 2Y^2 − 2
        assert_eq!(monic_gcd(&f, &f), RatPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_of_coprime_quartics_is_one() {
        // Y^2 + 1 and Y^4 + 1 share no factor
        let a = RatPoly::from_i64s(&[1, 0, 1]);
        let b = RatPoly::from_i64s(&[1, 0, 0, 0, 1]);
        assert_eq!(monic_gcd(&a, &b), RatPoly::one());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let f = RatPoly::from_i64s(&[3, 3]);
        assert_eq!(monic_gcd(&f, &RatPoly::zero()), RatPoly::from_i64s(&[1, 1]));
        assert_eq!(monic_gcd(&RatPoly::zero(), &f), RatPoly::from_i64s(&[1, 1]));
    }

    #[test]
    #[should_panic(expected = "both inputs are zero")]
    fn gcd_rejects_double_zero() {
        monic_gcd(&RatPoly::zero(), &RatPoly::zero());
    }

    #[test]
    fn gcd_survives_huge_coefficients() {
        // coefficients past i128 exercise the BigInt remainder sequence
        let huge = BigInt::from(10).pow(45);
        let f = RatPoly::new(vec![
            Rational::from_integer(huge.clone()),
            Rational::from_integer(BigInt::from(1)),
            Rational::from_integer(huge.clone()),
        ]);
        let g = f.mul(&RatPoly::from_i64s(&[1, 1]));
        let d = monic_gcd(&f, &g);
        assert_eq!(d, f.monic());
    }

    #[test]
    fn extended_gcd_linear_pair() {
        let f = RatPoly::from_i64s(&[-1, 1]);
        let g = RatPoly::from_i64s(&[1, 1]);
        let cert = extended_gcd(&f, &g);
        assert_eq!(cert.g, RatPoly::one());
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(cert.u, RatPoly::new(vec![-half.clone()]));
        assert_eq!(cert.v, RatPoly::new(vec![half]));
    }

    #[test]
    fn extended_gcd_degenerate_zero() {
        let f = RatPoly::from_i64s(&[-2, 4]); // lc = 4
        let cert = extended_gcd(&f, &RatPoly::zero());
        assert_eq!(cert.g, f.monic());
        assert_eq!(
            cert.u,
            RatPoly::new(vec![Rational::new(BigInt::from(1), BigInt::from(4))])
        );
        assert_eq!(cert.v, RatPoly::zero());
    }

    #[test]
    fn extended_gcd_cubic_pair() {
        let f = ypm1(2);
        let g = ypm1(3);
        let cert = extended_gcd(&f, &g);
        assert_eq!(cert.g, RatPoly::from_i64s(&[-1, 1]));
        assert_eq!(cert.u.mul(&f).add(&cert.v.mul(&g)), cert.g);
    }

    #[test]
    fn lcm_golden() {
        assert_eq!(
            monic_lcm(&RatPoly::from_i64s(&[-1, 1]), &RatPoly::from_i64s(&[1, 1])),
            ypm1(2)
        );
        assert_eq!(monic_lcm(&ypm1(2), &ypm1(2)), ypm1(2));
        assert_eq!(monic_lcm(&ypm1(2), &ypm1(4)), ypm1(4));
    }

    #[test]
    fn lcm_many_golden() {
        assert_eq!(lcm_many(&[RatPoly::from_i64s(&[-1, 1])]), ypm1(1));
        assert_eq!(lcm_many(&[ypm1(1), ypm1(2), ypm1(4)]), ypm1(4));
        // lcm(Y−1, Y^2−1, Y^3−1) = Y^4 + Y^3 − Y − 1, and the complementary
        // factor of Y^6 − 1 is Y^2 − Y + 1
        let l = lcm_many(&[ypm1(1), ypm1(2), ypm1(3)]);
        assert_eq!(l, RatPoly::from_i64s(&[-1, -1, 0, 1, 1]));
        let (q, r) = ypm1(6).divrem(&l);
        assert!(r.is_zero());
        assert_eq!(q, RatPoly::from_i64s(&[1, -1, 1]));
    }

    #[test]
    #[should_panic(expected = "empty list")]
    fn lcm_many_rejects_empty() {
        lcm_many(&[]);
    }

    #[test]
    fn to_int_poly_golden() {
        let f = RatPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(to_int_poly(&f).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
        let bad = RatPoly::new(vec![Rational::new(BigInt::from(1), BigInt::from(2))]);
        assert_eq!(to_int_poly(&bad), Err(NonIntegerCoefficient));
        assert_eq!(to_int_poly(&RatPoly::zero()).unwrap(), IntPoly::zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let f = RatPoly::from_i64s(&[3, -5, 0, 7, 2]);
        let d = RatPoly::from_i64s(&[1, 0, 2]);
        let (q, r) = f.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn coeffs_string_suppresses_unit_denominators() {
        let f = RatPoly::new(vec![
            Rational::new(BigInt::from(1), BigInt::from(2)),
            Rational::from_integer(BigInt::from(-3)),
        ]);
        assert_eq!(f.to_coeffs_string(), "1/2 -3");
        assert_eq!(RatPoly::zero().to_coeffs_string(), "0");
    }
}
