//! Schur P- and Q-polynomials, expansion in the P-basis, and the shifted
//! Littlewood–Richardson numbers.

mod poly;

pub use poly::SymPoly;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::insertion::Word;
use crate::sagan_worley::pow2;
use crate::shapes::{SkewShape, StrictPartition};
use crate::tableau::{content, enumerate_tableaux, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("remainder has leading monomial {0:?}, which is not a strict partition")]
    NotInSpan(Vec<u32>),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the two computations of Q for {0} disagree")]
    Mismatch(SkewShape),
    #[error("coefficient of {0} is not divisible by the required power of two")]
    NonIntegral(StrictPartition),
}

/// Coefficients indexed by strict partitions; zeros are never stored.
pub type CoeffMap = BTreeMap<StrictPartition, BigInt>;

/// Sum of `x^content(T)` over tableaux of `mode` on `shape`.
fn generating_function(shape: &SkewShape, n: usize, mode: Mode) -> SymPoly {
    let mut p = SymPoly::zero(n);
    for t in enumerate_tableaux(shape, n as u32, mode) {
        let e = content(&t).exponents(n).expect("values bounded by n");
        p.add_term(e, BigInt::one());
    }
    p
}

pub fn schur_p_poly(shape: &SkewShape, n: usize) -> SymPoly {
    generating_function(shape, n, Mode::Semistandard)
}

/// `Q = 2^diag · P`, also computed as the Q-tableau generating function;
/// the two must agree.
pub fn schur_q_poly(shape: &SkewShape, n: usize) -> Result<SymPoly, SymError> {
    let scaled = schur_p_poly(shape, n).scale(&(pow2(shape.diag() as u32)));
    let direct = generating_function(shape, n, Mode::QTableau);
    if scaled == direct {
        Ok(direct)
    } else {
        Err(SymError::Mismatch(shape.clone()))
    }
}

fn as_strict(e: &[u32]) -> Option<StrictPartition> {
    let parts: Vec<u32> = e.iter().copied().take_while(|&k| k > 0).collect();
    if e[parts.len()..].iter().any(|&k| k > 0) {
        return None;
    }
    StrictPartition::new(parts).ok()
}

/// Writes a homogeneous symmetric polynomial as `Σ c_λ P_λ(x₁..xₙ)` by
/// repeatedly cancelling the lexicographically greatest monomial.
pub fn expand_in_p(f: &SymPoly) -> Result<CoeffMap, SymError> {
    if f.homogeneous_degree().is_none() {
        return Err(SymError::NotHomogeneous);
    }
    if !f.is_symmetric() {
        return Err(SymError::NotSymmetric);
    }
    let n = f.nvars();
    let mut cache: HashMap<StrictPartition, SymPoly> = HashMap::new();
    let mut rest = f.clone();
    let mut out = CoeffMap::new();
    while let Some((e, c)) = rest.leading() {
        let lambda = as_strict(e).ok_or_else(|| SymError::NotInSpan(e.clone()))?;
        let c = c.clone();
        let p = cache
            .entry(lambda.clone())
            .or_insert_with(|| schur_p_poly(&SkewShape::straight(lambda.clone()), n));
        rest = &rest - &p.scale(&c);
        out.insert(lambda, c);
    }
    Ok(out)
}

/// Coefficients of `P_{ν/μ}` in the P-basis, in `ℓ(ν)` variables.
pub fn skew_expansion(nu: &StrictPartition, mu: &StrictPartition) -> Result<CoeffMap, crate::Error> {
    let shape = SkewShape::new(nu.clone(), mu.clone())?;
    let n = nu.len().max(1);
    Ok(expand_in_p(&schur_p_poly(&shape, n))?)
}

/// The shifted Littlewood–Richardson numbers `b_{λμ}^ν`, keyed by `λ`.
///
/// `P_{ν/μ} = Σ_λ 2^{ℓ(λ) − diag(ν/μ)} b_{λμ}^ν P_λ`, so each P-coefficient
/// is rescaled by `2^{diag − ℓ(λ)}`.
pub fn b_coeffs(nu: &StrictPartition, mu: &StrictPartition) -> Result<CoeffMap, crate::Error> {
    let diag = nu.len() as i64 - mu.len() as i64;
    let mut out = CoeffMap::new();
    for (lambda, c) in skew_expansion(nu, mu)? {
        let shift = diag - lambda.len() as i64;
        let b = if shift >= 0 {
            c << shift as u32
        } else {
            let d = pow2((-shift) as u32);
            if !(&c % &d).is_zero() {
                return Err(SymError::NonIntegral(lambda).into());
            }
            c / d
        };
        out.insert(lambda, b);
    }
    Ok(out)
}

/// Coefficients of `P_λ · P_μ` in the P-basis, keyed by `ν`.
pub fn product_coeffs(lambda: &StrictPartition, mu: &StrictPartition) -> Result<CoeffMap, SymError> {
    let n = (lambda.len() + mu.len()).max(1);
    let a = schur_p_poly(&SkewShape::straight(lambda.clone()), n);
    let b = schur_p_poly(&SkewShape::straight(mu.clone()), n);
    expand_in_p(&(&a * &b))
}

/// `Σ_w x^{content(w)}` over words with letters at most `n`.
pub fn commutative_image(words: &[Word], n: usize) -> SymPoly {
    let mut p = SymPoly::zero(n);
    for w in words {
        let mut e = vec![0u32; n];
        for &v in w.letters() {
            e[v as usize - 1] += 1;
        }
        p.add_term(e, BigInt::one());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn straight(p: &[u32]) -> SkewShape {
        SkewShape::straight(sp(p))
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SymPoly {
        let mut p = SymPoly::zero(n);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn p_polynomials() {
        assert_eq!(schur_p_poly(&straight(&[1]), 2), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(
            schur_p_poly(&straight(&[2]), 2),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
        assert_eq!(schur_p_poly(&straight(&[2, 1]), 2), poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
    }

    #[test]
    fn q_polynomials() {
        assert_eq!(schur_q_poly(&straight(&[1]), 2).unwrap(), poly(2, &[(&[1, 0], 2), (&[0, 1], 2)]));
        assert_eq!(
            schur_q_poly(&straight(&[2, 1]), 2).unwrap(),
            poly(2, &[(&[2, 1], 4), (&[1, 2], 4)])
        );
        for shape in ["3,1/1", "4,2/1", "3,2/2"] {
            assert!(schur_q_poly(&shape.parse().unwrap(), 3).is_ok());
        }
    }

    #[test]
    fn leading_terms_are_unitriangular() {
        for size in 1..=6 {
            for lambda in StrictPartition::all_of_size(size) {
                for n in lambda.len().max(1)..=3 {
                    let p = schur_p_poly(&SkewShape::straight(lambda.clone()), n);
                    let (e, c) = p.leading().unwrap();
                    let mut want = lambda.parts().to_vec();
                    want.resize(n, 0);
                    assert_eq!((e, c), (&want, &BigInt::one()), "{lambda} n={n}");
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let p21 = schur_p_poly(&straight(&[2, 1]), 2);
        assert_eq!(expand_in_p(&p21).unwrap(), CoeffMap::from([(sp(&[2, 1]), BigInt::one())]));
        let prod = &schur_p_poly(&straight(&[1]), 2) * &schur_p_poly(&straight(&[2]), 2);
        assert_eq!(
            expand_in_p(&prod).unwrap(),
            CoeffMap::from([(sp(&[3]), BigInt::one()), (sp(&[2, 1]), BigInt::one())])
        );
        let diff = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(expand_in_p(&diff), Err(SymError::NotSymmetric));
        let mixed = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(expand_in_p(&mixed), Err(SymError::NotHomogeneous));
        // x1 x2 is symmetric but has no P-expansion in two variables
        assert_eq!(expand_in_p(&poly(2, &[(&[1, 1], 1)])), Err(SymError::NotInSpan(vec![1, 1])));
    }

    #[test]
    fn basis_fidelity() {
        for size in 1..=6 {
            for lambda in StrictPartition::all_of_size(size) {
                let n = lambda.len();
                let p = schur_p_poly(&SkewShape::straight(lambda.clone()), n);
                assert_eq!(expand_in_p(&p).unwrap(), CoeffMap::from([(lambda, BigInt::one())]));
            }
        }
    }

    #[test]
    fn b_examples() {
        let nu = sp(&[3, 1]);
        assert_eq!(b_coeffs(&nu, &StrictPartition::empty()).unwrap(), CoeffMap::from([(nu, BigInt::one())]));
        assert_eq!(
            b_coeffs(&sp(&[2, 1]), &sp(&[1])).unwrap(),
            CoeffMap::from([(sp(&[2]), BigInt::one())])
        );
        // one box off the diagonal: P_{(2)/(1)} = 2 P_{(1)}, one preimage
        assert_eq!(skew_expansion(&sp(&[2]), &sp(&[1])).unwrap()[&sp(&[1])], BigInt::from(2));
        assert_eq!(b_coeffs(&sp(&[2]), &sp(&[1])).unwrap()[&sp(&[1])], BigInt::one());
    }

    #[test]
    fn b_matches_products() {
        for size in 1..=6 {
            for nu in StrictPartition::all_of_size(size) {
                for mu in nu.subpartitions() {
                    let b = b_coeffs(&nu, &mu).unwrap();
                    assert!(b.values().all(|v| v > &BigInt::zero()));
                    for (lambda, v) in &b {
                        let prod = product_coeffs(lambda, &mu).unwrap();
                        assert_eq!(prod.get(&nu), Some(v), "ν={nu} μ={mu} λ={lambda}");
                    }
                    for lambda in StrictPartition::all_of_size(nu.size() - mu.size()) {
                        let prod = product_coeffs(&lambda, &mu).unwrap();
                        let want = prod.get(&nu).cloned().unwrap_or_default();
                        assert_eq!(b.get(&lambda).cloned().unwrap_or_default(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn hook_words_give_p_functions() {
        use crate::insertion::enumerate_hook_set;
        for size in 1..=4 {
            for lambda in StrictPartition::all_of_size(size) {
                for n in 1..=3 {
                    let words = enumerate_hook_set(&lambda, n as u32);
                    let p = schur_p_poly(&SkewShape::straight(lambda.clone()), n);
                    assert_eq!(commutative_image(&words, n), p, "{lambda} n={n}");
                }
            }
        }
    }
}
