//! Cyclotomic polynomials Φ_n, their inverse companions Ψ_n, and the all-ones
//! polynomials Γ_n, built from gcd/lcm arithmetic alone — no roots of unity,
//! no Möbius inversion. Five interchangeable constructions of Φ_n are exposed
//! so they can be cross-checked against each other.

use crate::numth::{divisors, prime_factors, radical};
use crate::polyq::{self, RatPoly};
use crate::polyz::{self, IntPoly};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;

/// Which construction of Φ_n to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycloAlgo {
    /// Ψ_n as the lcm of Y^d − 1 over all proper divisors d of n.
    DefLcm,
    /// Ψ_n as the lcm of Y^{n/p} − 1 over the primes p dividing n.
    PrimeLcm,
    /// Φ_n = (Y^n − 1) / Π_{d | n, d < n} Φ_d, memoized.
    Recursive,
    /// Φ_n(Y) = Φ_m(Y^{n/m}) with m = rad(n), base case via PrimeLcm.
    Radical,
    /// Φ_n(Y) = Φ_{n/2}(−Y), only for n ≡ 2 (mod 4), n ≥ 6.
    NegOdd,
    /// Resolves to Radical.
    Auto,
}

impl CycloAlgo {
    /// Stable uppercase tag, as emitted in benchmark CSV.
    pub fn tag(&self) -> &'static str {
        match self {
            CycloAlgo::DefLcm => "DEF_LCM",
            CycloAlgo::PrimeLcm => "PRIME_LCM",
            CycloAlgo::Recursive => "RECURSIVE",
            CycloAlgo::Radical => "RADICAL",
            CycloAlgo::NegOdd => "NEG_ODD",
            CycloAlgo::Auto => "AUTO",
        }
    }
}

impl fmt::Display for CycloAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The requested identity does not hold at this index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutOfApplicability {
    pub n: u64,
}

impl fmt::Display for OutOfApplicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the negation identity applies only for n ≡ 2 (mod 4) with n ≥ 6; n = {} is outside that range",
            self.n
        )
    }
}

impl std::error::Error for OutOfApplicability {}

/// Y^n − 1 split into its cyclotomic factors, one per divisor of n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    /// (d, Φ_d) for every divisor d of n, ascending.
    pub parts: Vec<(u64, IntPoly)>,
}

/// One clause of the coprimality law, evaluated on a concrete pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma31Report {
    /// 1: d | e, gcd(Φ_d, Y^e − 1) = Φ_d; 2: d ∤ e, that gcd is 1;
    /// 3: d ≠ e, gcd(Φ_d, Φ_e) = 1.
    pub case: u8,
    pub holds: bool,
}

/// Ψ_n = (Y^n − 1)/Φ_n, computed as lcm_{p | n}(Y^{n/p} − 1); Ψ_1 = 1.
pub fn psi(n: u64) -> IntPoly {
    assert!(n >= 1, "psi: n must be positive");
    to_int(&psi_prime_lcm(n), "Ψ_n")
}

/// Φ_n by the requested construction. Only `NegOdd` can refuse.
pub fn phi(n: u64, algo: CycloAlgo) -> Result<IntPoly, OutOfApplicability> {
    assert!(n >= 1, "phi: n must be positive");
    match algo {
        CycloAlgo::DefLcm => Ok(phi_from_psi(n, &psi_def_lcm(n))),
        CycloAlgo::PrimeLcm => Ok(phi_from_psi(n, &psi_prime_lcm(n))),
        CycloAlgo::Recursive => Ok(phi_recursive(n)),
        CycloAlgo::Radical | CycloAlgo::Auto => Ok(phi_radical(n)),
        CycloAlgo::NegOdd => phi_neg_odd(n),
    }
}

/// Γ_n = (Y^n − 1)/(Y − 1): the all-ones polynomial of degree n − 1.
pub fn gamma(n: u64) -> IntPoly {
    assert!(n >= 1, "gamma: n must be positive");
    IntPoly::from_i64s(&vec![1; n as usize])
}

/// Φ_n = (Y^n − 1) / Π_{d | n, d < n} Φ_d, with the divisor recursion
/// memoized for the duration of the call.
pub fn phi_recursive(n: u64) -> IntPoly {
    assert!(n >= 1, "phi_recursive: n must be positive");
    fn go(n: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
        if let Some(f) = memo.get(&n) {
            return f.clone();
        }
        let mut prod = IntPoly::one();
        for d in divisors(n) {
            if d < n {
                let f = go(d, memo);
                prod = polyz::mul(&prod, &f);
            }
        }
        let q = polyz::exact_div(&IntPoly::y_pow_minus_one(n), &prod)
            .expect("the proper-divisor product must divide Y^n − 1");
        memo.insert(n, q.clone());
        q
    }
    go(n, &mut HashMap::new())
}

/// Φ_n(Y) = Φ_m(Y^{n/m}) where m = rad(n) is square-free; the base case runs
/// the prime-indexed lcm.
pub fn phi_radical(n: u64) -> IntPoly {
    assert!(n >= 1, "phi_radical: n must be positive");
    let m = radical(n);
    let base = phi_from_psi(m, &psi_prime_lcm(m));
    polyz::substitute_power(&base, n / m)
}

/// Φ_n(Y) = Φ_{n/2}(−Y), valid exactly when n ≡ 2 (mod 4) and n/2 ≥ 3.
pub fn phi_neg_odd(n: u64) -> Result<IntPoly, OutOfApplicability> {
    if n % 4 == 2 && n >= 6 {
        Ok(polyz::substitute_neg(&phi_radical(n / 2)))
    } else {
        Err(OutOfApplicability { n })
    }
}

/// Y^n − 1 = Π_{d | n} Φ_d; the product is re-verified before returning.
pub fn factor_unity(n: u64) -> Factorization {
    assert!(n >= 1, "factor_unity: n must be positive");
    let parts: Vec<(u64, IntPoly)> = divisors(n)
        .into_iter()
        .map(|d| (d, phi_radical(d)))
        .collect();
    let mut prod = IntPoly::one();
    for (_, f) in &parts {
        prod = polyz::mul(&prod, f);
    }
    assert!(
        prod == IntPoly::y_pow_minus_one(n),
        "factor_unity: factors do not multiply back to Y^n − 1"
    );
    Factorization { n, parts }
}

/// Evaluates every clause of the coprimality law that applies to (d, e):
/// when d | e the gcd of Φ_d with Y^e − 1 is Φ_d itself (case 1), when d ∤ e
/// it is 1 (case 2), and distinct cyclotomics are always coprime (case 3).
pub fn check_lemma31(d: u64, e: u64) -> Vec<Lemma31Report> {
    assert!(d >= 2 && e >= 2, "check_lemma31: indices must be at least 2");
    let phi_d = RatPoly::from_int(&phi_radical(d));
    let g = polyq::monic_gcd(&phi_d, &RatPoly::y_pow_minus_one(e));
    let mut reports = Vec::new();
    if e % d == 0 {
        reports.push(Lemma31Report {
            case: 1,
            holds: g == phi_d,
        });
    } else {
        reports.push(Lemma31Report {
            case: 2,
            holds: g == RatPoly::one(),
        });
    }
    if d != e {
        let phi_e = RatPoly::from_int(&phi_radical(e));
        reports.push(Lemma31Report {
            case: 3,
            holds: polyq::monic_gcd(&phi_d, &phi_e) == RatPoly::one(),
        });
    }
    reports
}

/// True iff Φ_n(Y) divides Φ_n(Y^r) in Z[Y]. Requires gcd(r, n) = 1.
pub fn check_lemma35(n: u64, r: u64) -> bool {
    assert!(n >= 2, "check_lemma35: n must be at least 2");
    assert!(r >= 1, "check_lemma35: r must be positive");
    assert!(
        r.gcd(&n) == 1,
        "check_lemma35: r and n must be coprime"
    );
    let f = phi_radical(n);
    polyz::divides(&f, &polyz::substitute_power(&f, r))
}

/// Ψ_n over Q via the prime-indexed lcm; Ψ_1 = 1.
fn psi_prime_lcm(n: u64) -> RatPoly {
    if n == 1 {
        return RatPoly::one();
    }
    let fs: Vec<RatPoly> = prime_factors(n)
        .factors
        .iter()
        .map(|&(p, _)| RatPoly::y_pow_minus_one(n / p))
        .collect();
    polyq::lcm_many(&fs)
}

/// Ψ_n over Q via the lcm over all proper divisors, ascending; Ψ_1 = 1.
fn psi_def_lcm(n: u64) -> RatPoly {
    if n == 1 {
        return RatPoly::one();
    }
    let fs: Vec<RatPoly> = divisors(n)
        .into_iter()
        .filter(|&d| d < n)
        .map(RatPoly::y_pow_minus_one)
        .collect();
    polyq::lcm_many(&fs)
}

/// Φ_n = (Y^n − 1)/Ψ_n, performed exactly in Z[Y].
fn phi_from_psi(n: u64, psi: &RatPoly) -> IntPoly {
    let psi = to_int(psi, "Ψ_n");
    polyz::exact_div(&IntPoly::y_pow_minus_one(n), &psi)
        .expect("Ψ_n must divide Y^n − 1 exactly")
}

fn to_int(f: &RatPoly, what: &str) -> IntPoly {
    polyq::to_int_poly(f)
        .unwrap_or_else(|_| panic!("{what} must have integer coefficients"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_auto(n: u64) -> IntPoly {
        phi(n, CycloAlgo::Auto).unwrap()
    }

    #[test]
    fn phi_golden_small_indices() {
        let expected: &[(u64, &[i64])] = &[
            (1, &[-1, 1]),
            (2, &[1, 1]),
            (3, &[1, 1, 1]),
            (4, &[1, 0, 1]),
            (5, &[1, 1, 1, 1, 1]),
            (6, &[1, -1, 1]),
            (7, &[1, 1, 1, 1, 1, 1, 1]),
            (8, &[1, 0, 0, 0, 1]),
            (9, &[1, 0, 0, 1, 0, 0, 1]),
            (10, &[1, -1, 1, -1, 1]),
            (12, &[1, 0, -1, 0, 1]),
        ];
        for &(n, coeffs) in expected {
            assert_eq!(phi_auto(n), IntPoly::from_i64s(coeffs), "n = {n}");
        }
    }

    #[test]
    fn psi_golden_small_indices() {
        assert_eq!(psi(1), IntPoly::one());
        assert_eq!(psi(2), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(psi(4), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(psi(6), IntPoly::from_i64s(&[-1, -1, 0, 1, 1]));
        // Ψ_p = Y − 1 for primes
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(psi(p), IntPoly::from_i64s(&[-1, 1]), "p = {p}");
        }
    }

    #[test]
    fn psi_times_phi_is_binomial() {
        for n in 1..=200 {
            assert_eq!(
                polyz::mul(&psi(n), &phi_auto(n)),
                IntPoly::y_pow_minus_one(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn all_algorithms_agree_on_small_indices() {
        for n in 1..=60 {
            let reference = phi(n, CycloAlgo::DefLcm).unwrap();
            for algo in [
                CycloAlgo::PrimeLcm,
                CycloAlgo::Recursive,
                CycloAlgo::Radical,
                CycloAlgo::Auto,
            ] {
                assert_eq!(phi(n, algo).unwrap(), reference, "n = {n}, {algo}");
            }
            if let Ok(f) = phi(n, CycloAlgo::NegOdd) {
                assert_eq!(f, reference, "n = {n}, NEG_ODD");
            }
        }
    }

    #[test]
    fn gamma_is_all_ones() {
        assert_eq!(gamma(1), IntPoly::one());
        assert_eq!(gamma(3), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(gamma(6), IntPoly::from_i64s(&[1, 1, 1, 1, 1, 1]));
        // Γ_p = Φ_p at primes
        assert_eq!(gamma(7), phi_auto(7));
    }

    #[test]
    fn negation_identity_window() {
        assert_eq!(
            phi_neg_odd(6).unwrap(),
            IntPoly::from_i64s(&[1, -1, 1])
        );
        assert_eq!(
            phi_neg_odd(10).unwrap(),
            IntPoly::from_i64s(&[1, -1, 1, -1, 1])
        );
        assert_eq!(phi_neg_odd(2), Err(OutOfApplicability { n: 2 }));
        assert_eq!(phi_neg_odd(4), Err(OutOfApplicability { n: 4 }));
        assert_eq!(phi_neg_odd(12), Err(OutOfApplicability { n: 12 }));
        assert_eq!(phi_neg_odd(9), Err(OutOfApplicability { n: 9 }));
    }

    #[test]
    fn recursive_golden() {
        assert_eq!(phi_recursive(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(phi_recursive(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(phi_recursive(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn radical_reduction_matches_recursion() {
        for n in [8u64, 9, 16, 36, 100, 360] {
            assert_eq!(phi_radical(n), phi_recursive(n), "n = {n}");
        }
        // Φ_360(Y) = Φ_30(Y^12)
        assert_eq!(
            phi_radical(360),
            polyz::substitute_power(&phi_auto(30), 12)
        );
    }

    #[test]
    fn phi_105_has_coefficient_minus_two() {
        let f = phi_recursive(105);
        assert_eq!(f.degree(), Some(48));
        assert_eq!(f.coeff(7), num_bigint::BigInt::from(-2));
        assert_eq!(f.coeff(41), num_bigint::BigInt::from(-2));
    }

    #[test]
    fn factor_unity_golden() {
        let f = factor_unity(6);
        assert_eq!(f.n, 6);
        assert_eq!(
            f.parts,
            vec![
                (1, IntPoly::from_i64s(&[-1, 1])),
                (2, IntPoly::from_i64s(&[1, 1])),
                (3, IntPoly::from_i64s(&[1, 1, 1])),
                (6, IntPoly::from_i64s(&[1, -1, 1])),
            ]
        );
        assert_eq!(
            factor_unity(1).parts,
            vec![(1, IntPoly::from_i64s(&[-1, 1]))]
        );
        // primes split as Φ_1 · Γ_p
        let p7 = factor_unity(7);
        assert_eq!(
            p7.parts,
            vec![(1, IntPoly::from_i64s(&[-1, 1])), (7, gamma(7))]
        );
    }

    #[test]
    fn coprimality_reports() {
        assert_eq!(
            check_lemma31(2, 6),
            vec![
                Lemma31Report { case: 1, holds: true },
                Lemma31Report { case: 3, holds: true },
            ]
        );
        assert_eq!(
            check_lemma31(4, 6),
            vec![
                Lemma31Report { case: 2, holds: true },
                Lemma31Report { case: 3, holds: true },
            ]
        );
        assert_eq!(
            check_lemma31(4, 8),
            vec![
                Lemma31Report { case: 1, holds: true },
                Lemma31Report { case: 3, holds: true },
            ]
        );
        // d = e: only the divisibility clause applies
        assert_eq!(
            check_lemma31(5, 5),
            vec![Lemma31Report { case: 1, holds: true }]
        );
    }

    #[test]
    fn substitution_divisibility_examples() {
        assert!(check_lemma35(4, 3));
        assert!(check_lemma35(5, 2));
        assert!(check_lemma35(12, 7));
        assert!(check_lemma35(7, 1));
    }

    #[test]
    #[should_panic(expected = "coprime")]
    fn substitution_divisibility_rejects_common_factor() {
        check_lemma35(6, 2);
    }

    #[test]
    fn psi_equals_gamma_lcm_form() {
        // Ψ_n = (Y − 1) · lcm of Γ_d over divisors 1 < d < n
        for n in 2..=40u64 {
            let gammas: Vec<RatPoly> = divisors(n)
                .into_iter()
                .filter(|&d| d > 1 && d < n)
                .map(|d| RatPoly::from_int(&gamma(d)))
                .collect();
            let l = if gammas.is_empty() {
                RatPoly::one()
            } else {
                polyq::lcm_many(&gammas)
            };
            let lhs = RatPoly::from_int(&psi(n));
            assert_eq!(lhs, l.mul(&RatPoly::from_i64s(&[-1, 1])), "n = {n}");
        }
    }
}
