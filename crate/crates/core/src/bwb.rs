//! Borel–Weil–Bott cohomology of line bundles `L_λ` on `SL_{r+1}/B`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_system::{dominant_conjugate, Conjugate, Weight, WeylElement};

/// Cohomology of a single line bundle: at most one degree is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyResult {
    AllVanish,
    Nonvanishing {
        degree: usize,
        /// Dominant weight `w(λ+ρ) - ρ`; `H^degree` is the irreducible module of this highest weight.
        highest_weight: Weight,
        dimension: BigUint,
    },
}

impl CohomologyResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::AllVanish => None,
            CohomologyResult::Nonvanishing { degree, .. } => Some(*degree),
        }
    }

    /// `h^i`, zero for every degree except the nonvanishing one.
    pub fn h(&self, i: usize) -> BigUint {
        match self {
            CohomologyResult::Nonvanishing {
                degree, dimension, ..
            } if *degree == i => dimension.clone(),
            _ => BigUint::zero(),
        }
    }

    /// `Σ (-1)^i h^i`.
    pub fn signed_dimension(&self) -> BigInt {
        match self {
            CohomologyResult::AllVanish => BigInt::zero(),
            CohomologyResult::Nonvanishing {
                degree, dimension, ..
            } => {
                let d = BigInt::from(dimension.clone());
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

/// Full cohomology of `L_λ`.
pub fn bwb_cohomology(weight: &Weight) -> CohomologyResult {
    let shifted = weight + &Weight::rho(weight.rank());
    match dominant_conjugate(&shifted) {
        Conjugate::Singular => CohomologyResult::AllVanish,
        Conjugate::Regular { element, dominant } => {
            let highest_weight = &dominant - &Weight::rho(weight.rank());
            let dimension = weyl_product(&dominant)
                .to_biguint()
                .expect("Weyl product of a strictly dominant weight is positive");
            CohomologyResult::Nonvanishing {
                degree: element.length(),
                highest_weight,
                dimension,
            }
        }
    }
}

/// The element `w` of Bott's theorem together with the cohomology, for callers that need both.
pub fn bwb_with_element(weight: &Weight) -> (Option<WeylElement>, CohomologyResult) {
    let shifted = weight + &Weight::rho(weight.rank());
    let element = match dominant_conjugate(&shifted) {
        Conjugate::Regular { element, .. } => Some(element),
        Conjugate::Singular => None,
    };
    (element, bwb_cohomology(weight))
}

/// Nonvanishing degree only: the number of positive roots with `<λ+ρ, α^∨> < 0`,
/// or `None` when some pairing vanishes.
pub fn cohomology_degree(weight: &Weight) -> Option<usize> {
    let rank = weight.rank();
    // epsilon coordinates of λ+ρ
    let mut eps = weight.epsilon();
    for (k, e) in eps.iter_mut().enumerate() {
        *e += (rank - k) as i64;
    }
    let mut degree = 0;
    for i in 0..eps.len() {
        for j in i + 1..eps.len() {
            match eps[i] - eps[j] {
                0 => return None,
                p if p < 0 => degree += 1,
                _ => {}
            }
        }
    }
    Some(degree)
}

/// Dimension of the irreducible `SL_{r+1}` module with dominant highest weight `μ`.
pub fn weyl_dimension(mu: &Weight) -> Result<BigUint> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.coords().to_vec()));
    }
    let shifted = mu + &Weight::rho(mu.rank());
    Ok(weyl_product(&shifted)
        .to_biguint()
        .expect("positive for dominant weights"))
}

/// `χ(L_λ) = Π <λ+ρ, α^∨> / Π <ρ, α^∨>`, computed directly from the product.
pub fn euler_characteristic(weight: &Weight) -> BigInt {
    weyl_product(&(weight + &Weight::rho(weight.rank())))
}

/// `Π_{α>0} <ν, α^∨> / Π_{α>0} <ρ, α^∨>` with exact division after full accumulation.
fn weyl_product(nu: &Weight) -> BigInt {
    let eps = nu.epsilon();
    let n = eps.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let p = eps[i] - eps[j];
            if p == 0 {
                return BigInt::zero();
            }
            num *= p;
            den *= (j - i) as i64;
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}
