//! Dense univariate polynomials over Z: ring arithmetic, exact division,
//! content and divisibility, and the substitutions Y ↦ Y^k and Y ↦ −Y.
//!
//! Coefficients are unbounded integers, but every hot operation first tries an
//! i128 kernel (with overflow checks) and only falls back to `BigInt`; long
//! division walks the divisor's nonzero coefficients only, so division by the
//! sparse polynomials this crate lives on (Y^n − 1 and friends) stays cheap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

/// Minimum operand length before multiplication switches to Karatsuba.
const KARATSUBA_THRESHOLD: usize = 64;

/// A division expected to be exact left a remainder; the divisibility
/// precondition was violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonExactDivision;

impl fmt::Display for NonExactDivision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial division left a remainder")
    }
}

impl std::error::Error for NonExactDivision {}

/// Dense polynomial over Z. Index i holds the coefficient of Y^i; the zero
/// polynomial is the empty vector, and there are never trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from small coefficients, ascending degree.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64s(&[1])
    }

    /// The binomial Y^n − 1.
    pub fn y_pow_minus_one(n: u64) -> Self {
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of Y^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Height: maximum |coefficient|; 0 for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Space-separated decimal coefficients, ascending degree; zero is "0".
    pub fn to_coeffs_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human-readable form, descending degree, e.g. "Y^4 + 1" or "Y − 1".
    /// Unit coefficients are suppressed on nonconstant terms; the minus sign
    /// is U+2212.
    pub fn to_pretty_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if s.is_empty() {
                if c.is_negative() {
                    s.push('−');
                }
            } else {
                s.push_str(if c.is_negative() { " − " } else { " + " });
            }
            let mag = c.abs();
            match i {
                0 => s.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        s.push_str(&mag.to_string());
                    }
                    s.push('Y');
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        s
    }
}

impl FromStr for IntPoly {
    type Err = num_bigint::ParseBigIntError;

    /// Parses the `to_coeffs_string` form (whitespace-separated decimals).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split_whitespace()
            .map(|t| t.parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Exact product of two polynomials.
pub fn mul(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() || g.is_zero() {
        return IntPoly::zero();
    }
    if let (Some(a), Some(b)) = (as_i128(f), as_i128(g)) {
        if let Some(out) = mul_i128(&a, &b) {
            return from_i128(out);
        }
    }
    IntPoly::new(mul_big(&f.coeffs, &g.coeffs))
}

/// Quotient f/g for exact divisions; `NonExactDivision` if g does not divide
/// f in Z[Y]. Fails fast on the first non-divisible leading step.
pub fn exact_div(f: &IntPoly, g: &IntPoly) -> Result<IntPoly, NonExactDivision> {
    assert!(!g.is_zero(), "exact_div: divisor is zero");
    if f.is_zero() {
        return Ok(IntPoly::zero());
    }
    if f.coeffs.len() < g.coeffs.len() {
        return Err(NonExactDivision);
    }
    if let (Some(a), Some(b)) = (as_i128(f), as_i128(g)) {
        if let Some(result) = div_i128(&a, &b) {
            return result.map(from_i128);
        }
    }
    div_big(&f.coeffs, &g.coeffs).map(IntPoly::new)
}

/// Gcd of all coefficients; content(0) = 0, primitive polynomials have 1.
pub fn content(f: &IntPoly) -> BigInt {
    let mut acc = BigInt::zero();
    for c in &f.coeffs {
        acc = acc.gcd(c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Whether f divides g in Z[Y] (true for g = 0).
pub fn divides(f: &IntPoly, g: &IntPoly) -> bool {
    assert!(!f.is_zero(), "divides: divisor is zero");
    if g.is_zero() {
        return true;
    }
    if g.coeffs.len() < f.coeffs.len() {
        return false;
    }
    exact_div(g, f).is_ok()
}

/// The substitution f(Y^k).
pub fn substitute_power(f: &IntPoly, k: u64) -> IntPoly {
    assert!(k >= 1, "substitute_power: k must be positive");
    if f.is_zero() {
        return IntPoly::zero();
    }
    let k = k as usize;
    let deg = f.coeffs.len() - 1;
    let mut coeffs = vec![BigInt::zero(); deg * k + 1];
    for (i, c) in f.coeffs.iter().enumerate() {
        if !c.is_zero() {
            coeffs[i * k] = c.clone();
        }
    }
    IntPoly { coeffs }
}

/// The substitution f(−Y): flips the sign of every odd-degree coefficient.
pub fn substitute_neg(f: &IntPoly) -> IntPoly {
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    IntPoly { coeffs }
}

// ---- i128 fast-path kernels -------------------------------------------------

fn as_i128(f: &IntPoly) -> Option<Vec<i128>> {
    f.coeffs.iter().map(|c| c.to_i128()).collect()
}

fn from_i128(v: Vec<i128>) -> IntPoly {
    IntPoly::new(v.into_iter().map(BigInt::from).collect())
}

fn count_nonzero(v: &[i128]) -> usize {
    v.iter().filter(|c| **c != 0).count()
}

/// Schoolbook product in i128, or None when the result could overflow.
/// The outer loop walks the operand whose nonzero pattern makes it cheaper,
/// so multiplying by a sparse polynomial costs nnz·len.
fn mul_i128(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let max_a = a.iter().map(|c| c.unsigned_abs()).max()?;
    let max_b = b.iter().map(|c| c.unsigned_abs()).max()?;
    let k = a.len().min(b.len()) as u128;
    // every output coefficient is a sum of ≤ k products, each ≤ max_a · max_b
    let bound = max_a.checked_mul(max_b)?.checked_mul(k)?;
    if bound > i128::MAX as u128 {
        return None;
    }
    let (outer, inner) = if count_nonzero(a) * b.len() <= count_nonzero(b) * a.len() {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &ai) in outer.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in inner.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    Some(out)
}

/// Top-down long division in i128 iterating only the divisor's nonzero
/// coefficients. None = arithmetic overflow (caller retries in BigInt);
/// Some(Err) = division is genuinely not exact.
fn div_i128(f: &[i128], g: &[i128]) -> Option<Result<Vec<i128>, NonExactDivision>> {
    let glen = g.len();
    let glead = g[glen - 1];
    let gnz: Vec<(usize, i128)> = g[..glen - 1]
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect();
    let mut rem = f.to_vec();
    let qlen = f.len() - glen + 1;
    let mut q = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + glen - 1];
        if c == 0 {
            continue;
        }
        if c % glead != 0 {
            return Some(Err(NonExactDivision));
        }
        let qk = c.checked_div(glead)?;
        q[k] = qk;
        for &(j, gj) in &gnz {
            let t = qk.checked_mul(gj)?;
            rem[k + j] = rem[k + j].checked_sub(t)?;
        }
        rem[k + glen - 1] = 0;
    }
    if rem.iter().any(|&c| c != 0) {
        return Some(Err(NonExactDivision));
    }
    Some(Ok(q))
}

// ---- BigInt fallback kernels ------------------------------------------------

fn mul_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) <= KARATSUBA_THRESHOLD {
        return schoolbook_big(a, b);
    }
    karatsuba_big(a, b)
}

fn schoolbook_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let nz = |v: &[BigInt]| v.iter().filter(|c| !c.is_zero()).count();
    let (outer, inner) = if nz(a) * b.len() <= nz(b) * a.len() {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in outer.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in inner.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn karatsuba_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let m = a.len().min(b.len()) / 2;
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let z0 = mul_big(a0, b0);
    let z2 = mul_big(a1, b1);
    let sa = add_slices(a0, a1);
    let sb = add_slices(b0, b1);
    let mut z1 = mul_big(&sa, &sb);
    sub_assign(&mut z1, &z0);
    sub_assign(&mut z1, &z2);
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        out[i + m] += c;
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[i + 2 * m] += c;
    }
    out
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn sub_assign(a: &mut [BigInt], b: &[BigInt]) {
    for (i, c) in b.iter().enumerate() {
        a[i] -= c;
    }
}

fn div_big(f: &[BigInt], g: &[BigInt]) -> Result<Vec<BigInt>, NonExactDivision> {
    let glen = g.len();
    let glead = &g[glen - 1];
    let gnz: Vec<(usize, &BigInt)> = g[..glen - 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut rem = f.to_vec();
    let qlen = f.len() - glen + 1;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        if rem[k + glen - 1].is_zero() {
            continue;
        }
        let (qk, r) = rem[k + glen - 1].div_rem(glead);
        if !r.is_zero() {
            return Err(NonExactDivision);
        }
        for &(j, gj) in &gnz {
            let t = &qk * gj;
            rem[k + j] -= t;
        }
        rem[k + glen - 1] = BigInt::zero();
        q[k] = qk;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(NonExactDivision);
    }
    Ok(q)
}
