//! Ampleness of smooth subvarieties of `P^n` from rational Betti numbers.
//!
//! `Y ⊂ P^n` smooth is ample exactly when restriction `H^i(P^n, Q) -> H^i(Y, Q)`
//! is an isomorphism for `i < dim Y`. In even degrees the source is spanned by a
//! power of the hyperplane class, which restricts to a nonzero class on `Y`, so
//! the map is an isomorphism iff `b_i(Y) = 1`; in odd degrees it is one iff
//! `b_i(Y) = 0`. Numeric equality of Betti numbers therefore decides the question.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    ambient_n: usize,
    dim_y: usize,
    betti: Vec<u64>,
}

impl BettiProfile {
    /// `betti` lists `b_0, ..., b_{dim_y - 1}`, no more and no fewer.
    pub fn new(ambient_n: i64, dim_y: i64, betti: Vec<u64>) -> Result<Self> {
        if ambient_n < 2 {
            return Err(Error::MalformedProfile(format!(
                "ambient dimension {ambient_n} leaves no room for a proper subvariety"
            )));
        }
        if dim_y < 1 || dim_y >= ambient_n {
            return Err(Error::MalformedProfile(format!(
                "dim Y = {dim_y} must lie in 1..={}",
                ambient_n - 1
            )));
        }
        if betti.len() as i64 != dim_y {
            return Err(Error::MalformedProfile(format!(
                "expected {dim_y} Betti numbers b_0..b_{}, got {}",
                dim_y - 1,
                betti.len()
            )));
        }
        if betti[0] == 0 {
            return Err(Error::MalformedProfile("b_0 must be at least 1".into()));
        }
        Ok(BettiProfile {
            ambient_n: ambient_n as usize,
            dim_y: dim_y as usize,
            betti,
        })
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn dim_y(&self) -> usize {
        self.dim_y
    }

    pub fn betti(&self) -> &[u64] {
        &self.betti
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {} in P^{}, b = [{}]",
            self.dim_y,
            self.ambient_n,
            self.betti.iter().join(", ")
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ample,
    NotAmple { first_failing_degree: usize },
}

/// `b_i(P^n)` for `i <= 2n`.
fn projective_betti(i: usize) -> u64 {
    u64::from(i.is_multiple_of(2))
}

pub fn ampleness_verdict(profile: &BettiProfile) -> Verdict {
    match profile
        .betti
        .iter()
        .enumerate()
        .find(|&(i, &b)| b != projective_betti(i))
    {
        Some((i, _)) => Verdict::NotAmple {
            first_failing_degree: i,
        },
        None => Verdict::Ample,
    }
}

/// Reference profiles of smooth subvarieties of projective space.
pub mod corpus {
    use super::{BettiProfile, Verdict};

    pub struct Example {
        pub name: &'static str,
        pub profile: BettiProfile,
        pub expected: Verdict,
    }

    fn example(name: &'static str, n: i64, dim: i64, betti: &[u64], expected: Verdict) -> Example {
        Example {
            name,
            profile: BettiProfile::new(n, dim, betti.to_vec()).expect("valid corpus profile"),
            expected,
        }
    }

    pub fn examples() -> Vec<Example> {
        vec![
            example("connected curve in P^3", 3, 1, &[1], Verdict::Ample),
            example("Enriques surface in P^5", 5, 2, &[1, 0], Verdict::Ample),
            example(
                "two skew lines in P^3",
                3,
                1,
                &[2],
                Verdict::NotAmple {
                    first_failing_degree: 0,
                },
            ),
            example(
                "Segre P^1 x P^2 in P^5",
                5,
                3,
                &[1, 0, 2],
                Verdict::NotAmple {
                    first_failing_degree: 2,
                },
            ),
        ]
    }
}
