//! Line bundles `O(d)` on projective space `P^n`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qample::QAmpleIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistSpec {
    n: usize,
    d: i64,
}

impl TwistSpec {
    pub fn new(n: i64, d: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidAmbient(n));
        }
        Ok(TwistSpec { n: n as usize, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The Serre-dual twist `O(-d-n-1)`.
    pub fn dual(&self) -> TwistSpec {
        TwistSpec {
            n: self.n,
            d: -self.d - self.n as i64 - 1,
        }
    }
}

/// `C(a, k)` for `a >= 0`; zero when `a < k`.
pub fn binomial(a: i64, k: usize) -> BigUint {
    if a < 0 || (a as u64) < k as u64 {
        return BigUint::zero();
    }
    let a = a as u64;
    let mut acc = BigUint::one();
    for t in 0..k as u64 {
        acc *= a - t;
    }
    let fact: BigUint = (1..=k as u64).product();
    acc / fact
}

/// `h^i(P^n, O(d))` by Bott's formula.
pub fn bott_h(spec: TwistSpec, i: i64) -> Result<BigUint> {
    let n = spec.n;
    if i < 0 || i as u64 > n as u64 {
        return Err(Error::DegreeOutOfRange { degree: i, max: n });
    }
    let d = spec.d;
    let value = if i == 0 && d >= 0 {
        binomial(d + n as i64, n)
    } else if i as usize == n && d < -(n as i64) {
        binomial(-d - 1, n)
    } else {
        BigUint::zero()
    };
    Ok(value)
}

/// All `h^0, ..., h^n`.
pub fn bott_all(spec: TwistSpec) -> Vec<BigUint> {
    (0..=spec.n as i64)
        .map(|i| bott_h(spec, i).expect("degree in range"))
        .collect()
}

/// `(d+1)(d+2)...(d+n)/n!`, the Hilbert polynomial of `P^n` evaluated at any integer `d`.
pub fn hilbert_polynomial(spec: TwistSpec) -> BigInt {
    let n = spec.n as i64;
    let num: BigInt = (1..=n).map(|k| BigInt::from(spec.d + k)).product();
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    num / fact
}

/// `O(d)` is ample for `d > 0`; otherwise `H^n` of negative twists never dies and the index is `n`.
pub fn pn_q_ample_index(spec: TwistSpec) -> QAmpleIndex {
    if spec.d > 0 {
        QAmpleIndex(0)
    } else {
        QAmpleIndex(spec.n)
    }
}
