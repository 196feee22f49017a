//! Arithmetic in Q_n = Q[Y]/⟨Φ_n⟩: canonical residues, Bézout inversion,
//! multiplicative orders, and the product expansions over powers of the
//! residue class y_n that recover Y^n − 1 and Φ_n itself.

use crate::cyclo::phi_radical;
use crate::numth::euler_phi;
use crate::polyq::{self, RatPoly, Rational};
use crate::polyz::IntPoly;
use num_integer::Integer;
use std::fmt;
use std::sync::Arc;

/// Default bound on dim Q_n = φ(n) for the whole-ring checks.
pub const DEFAULT_DIM_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QnError {
    /// φ(n) exceeds the requested cap; the check was refused, not failed.
    CapExceeded { n: u64, dim: usize, cap: usize },
    /// Zero has no inverse.
    ZeroInverse,
    /// The element shares a factor with Φ_n and is not invertible.
    NonUnit,
}

impl fmt::Display for QnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QnError::CapExceeded { n, dim, cap } => write!(
                f,
                "refusing n = {n}: dim Q_n = {dim} exceeds the cap {cap}"
            ),
            QnError::ZeroInverse => write!(f, "zero is not invertible"),
            QnError::NonUnit => write!(f, "element is not a unit"),
        }
    }
}

impl std::error::Error for QnError {}

/// The ring Q_n: modulus Φ_n and dimension φ(n) over Q.
#[derive(Debug)]
pub struct QnContext {
    pub n: u64,
    pub modulus: IntPoly,
    pub dim: usize,
    modulus_rat: RatPoly,
}

impl QnContext {
    pub fn new(n: u64) -> Arc<QnContext> {
        assert!(n >= 1, "QnContext: n must be positive");
        let modulus = phi_radical(n);
        let dim = euler_phi(n) as usize;
        debug_assert_eq!(modulus.degree(), Some(dim));
        let modulus_rat = RatPoly::from_int(&modulus);
        Arc::new(QnContext {
            n,
            modulus,
            dim,
            modulus_rat,
        })
    }
}

/// An element of Q_n: the unique representative of degree < dim.
#[derive(Clone, Debug)]
pub struct QnElement {
    ctx: Arc<QnContext>,
    rep: RatPoly,
}

impl PartialEq for QnElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.rep == other.rep
    }
}

impl Eq for QnElement {}

impl QnElement {
    pub fn zero(ctx: &Arc<QnContext>) -> QnElement {
        QnElement {
            ctx: ctx.clone(),
            rep: RatPoly::zero(),
        }
    }

    pub fn one(ctx: &Arc<QnContext>) -> QnElement {
        QnElement::scalar(ctx, Rational::from_integer(1.into()))
    }

    /// The residue class y_n of Y itself.
    pub fn generator(ctx: &Arc<QnContext>) -> QnElement {
        qn_reduce(ctx, &RatPoly::from_i64s(&[0, 1]))
    }

    pub fn scalar(ctx: &Arc<QnContext>, c: Rational) -> QnElement {
        qn_reduce(ctx, &RatPoly::new(vec![c]))
    }

    pub fn n(&self) -> u64 {
        self.ctx.n
    }

    pub fn rep(&self) -> &RatPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, other: &QnElement) -> QnElement {
        assert_eq!(self.ctx.n, other.ctx.n, "add: context mismatch");
        QnElement {
            ctx: self.ctx.clone(),
            rep: self.rep.add(&other.rep),
        }
    }

    pub fn sub(&self, other: &QnElement) -> QnElement {
        assert_eq!(self.ctx.n, other.ctx.n, "sub: context mismatch");
        QnElement {
            ctx: self.ctx.clone(),
            rep: self.rep.sub(&other.rep),
        }
    }

    pub fn neg(&self) -> QnElement {
        QnElement {
            ctx: self.ctx.clone(),
            rep: self.rep.neg(),
        }
    }

    /// a^k by repeated squaring; a^0 = 1.
    pub fn pow(&self, k: u64) -> QnElement {
        let mut acc = QnElement::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = qn_mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = qn_mul(&base, &base);
            }
        }
        acc
    }
}

/// Canonical residue of an arbitrary polynomial: remainder mod Φ_n.
pub fn qn_reduce(ctx: &Arc<QnContext>, f: &RatPoly) -> QnElement {
    let (_, rep) = f.divrem(&ctx.modulus_rat);
    QnElement {
        ctx: ctx.clone(),
        rep,
    }
}

/// Product in Q_n; both elements must live in the same ring.
pub fn qn_mul(a: &QnElement, b: &QnElement) -> QnElement {
    assert_eq!(a.ctx.n, b.ctx.n, "qn_mul: context mismatch");
    qn_reduce(&a.ctx, &a.rep.mul(&b.rep))
}

/// Inverse via the Bézout identity u·a + v·Φ_n = 1.
pub fn qn_inv(a: &QnElement) -> Result<QnElement, QnError> {
    if a.is_zero() {
        return Err(QnError::ZeroInverse);
    }
    let cert = polyq::extended_gcd(&a.rep, &a.ctx.modulus_rat);
    if cert.g != RatPoly::one() {
        return Err(QnError::NonUnit);
    }
    Ok(qn_reduce(&a.ctx, &cert.u))
}

/// Least k in 1..=bound with a^k = 1, or None if no such k exists.
pub fn qn_order(a: &QnElement, bound: u64) -> Option<u64> {
    assert!(!a.is_zero(), "qn_order: zero element has no order");
    let one = QnElement::one(&a.ctx);
    let mut acc = a.clone();
    for k in 1..=bound {
        if acc == one {
            return Some(k);
        }
        acc = qn_mul(&acc, a);
    }
    None
}

/// Splits Y^n − 1 over Q_n: the n powers y^0, …, y^{n−1} must have invertible
/// pairwise differences, and Π_{r=0}^{n−1} (Y − y^r) must equal Y^n − 1.
/// Refuses with CapExceeded when φ(n) > cap.
pub fn check_lemma34(n: u64, cap: usize) -> Result<bool, QnError> {
    assert!(n >= 1, "check_lemma34: n must be positive");
    let ctx = cap_checked_context(n, cap)?;
    let pows = generator_powers(&ctx, n);
    for r in 1..pows.len() {
        for s in 0..r {
            if qn_inv(&pows[r].sub(&pows[s])).is_err() {
                return Ok(false);
            }
        }
    }
    let prod = expand_linear_factors(&ctx, &pows);
    let mut expected = vec![QnElement::zero(&ctx); n as usize + 1];
    expected[0] = QnElement::one(&ctx).neg();
    expected[n as usize] = QnElement::one(&ctx);
    Ok(prod == expected)
}

/// Recovers Φ_n inside Q_n[Y]: Π (Y − y^r) over 0 ≤ r < n with gcd(r, n) = 1
/// must have scalar coefficients equal to those of Φ_n.
/// Refuses with CapExceeded when φ(n) > cap.
pub fn check_theorem33_product(n: u64, cap: usize) -> Result<bool, QnError> {
    assert!(n >= 1, "check_theorem33_product: n must be positive");
    let ctx = cap_checked_context(n, cap)?;
    let pows = generator_powers(&ctx, n);
    let roots: Vec<QnElement> = (0..n)
        .filter(|r| r.gcd(&n) == 1)
        .map(|r| pows[r as usize].clone())
        .collect();
    let prod = expand_linear_factors(&ctx, &roots);
    if prod.len() != ctx.dim + 1 {
        return Ok(false);
    }
    let holds = prod.iter().enumerate().all(|(i, c)| {
        *c == QnElement::scalar(&ctx, Rational::from_integer(ctx.modulus.coeff(i)))
    });
    Ok(holds)
}

/// Outcome of the generator-order check: the measured order of the canonical
/// generator against its expected value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cor37Report {
    pub generator_order: Option<u64>,
    pub expected: u64,
    pub holds: bool,
}

/// Order of the canonical root of unity in Q_n: y_n itself for even n (order
/// n), −y_n for odd n (order 2n); every ±y^r must in turn have order dividing
/// that value. Requires n ≥ 2; refuses with CapExceeded when φ(n) > cap.
pub fn check_cor37(n: u64, cap: usize) -> Result<Cor37Report, QnError> {
    assert!(n >= 2, "check_cor37: n must be at least 2");
    let ctx = cap_checked_context(n, cap)?;
    let y = QnElement::generator(&ctx);
    let (gen, expected) = if n % 2 == 0 {
        (y.clone(), n)
    } else {
        (y.neg(), 2 * n)
    };
    let generator_order = qn_order(&gen, expected);
    let mut holds = generator_order == Some(expected);
    if holds {
        for p in generator_powers(&ctx, n) {
            for candidate in [p.clone(), p.neg()] {
                match qn_order(&candidate, expected) {
                    Some(k) => holds &= expected % k == 0,
                    None => holds = false,
                }
            }
        }
    }
    Ok(Cor37Report {
        generator_order,
        expected,
        holds,
    })
}

/// For even n, Q_n contains a copy of Q_d exactly when d divides n.
pub fn has_subfield(n: u64, d: u64) -> bool {
    assert!(n >= 2 && n % 2 == 0, "has_subfield: n must be even");
    assert!(d >= 1, "has_subfield: d must be positive");
    n % d == 0
}

fn cap_checked_context(n: u64, cap: usize) -> Result<Arc<QnContext>, QnError> {
    let dim = euler_phi(n) as usize;
    if dim > cap {
        return Err(QnError::CapExceeded { n, dim, cap });
    }
    Ok(QnContext::new(n))
}

/// y^0, y^1, …, y^{n−1}.
fn generator_powers(ctx: &Arc<QnContext>, n: u64) -> Vec<QnElement> {
    let y = QnElement::generator(ctx);
    let mut pows = Vec::with_capacity(n as usize);
    let mut acc = QnElement::one(ctx);
    for _ in 0..n {
        pows.push(acc.clone());
        acc = qn_mul(&acc, &y);
    }
    pows
}

/// Π (Y − root) as coefficients in Q_n, ascending in Y.
fn expand_linear_factors(ctx: &Arc<QnContext>, roots: &[QnElement]) -> Vec<QnElement> {
    let mut poly = vec![QnElement::one(ctx)];
    for root in roots {
        let mut next = vec![QnElement::zero(ctx); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&qn_mul(c, root));
        }
        poly = next;
    }
    poly
}
