//! q-ampleness of line bundles on the flag variety and the chamber picture of the weight lattice.

use std::fmt;

use itertools::Itertools;

use crate::bwb::cohomology_degree;
use crate::error::{Error, Result};
use crate::root_system::{check_rank, dominant_conjugate, Conjugate, Weight, MAX_ENUMERATION_RANK};

/// The least `q` for which a line bundle is `q`-ample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QAmpleIndex(pub usize);

impl QAmpleIndex {
    pub fn value(self) -> usize {
        self.0
    }

    pub fn is_ample(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for QAmpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Closed form: the number of positive roots with `<λ, α^∨> <= 0`.
///
/// A root pairing to zero counts against `λ`: twisting by any `ν` with
/// `<ν+ρ, α^∨> < 0` keeps that pairing negative for every power of `L_λ`.
pub fn q_ample_index(weight: &Weight) -> QAmpleIndex {
    QAmpleIndex(weight.pairings().into_iter().filter(|&p| p <= 0).count())
}

/// Parameters of the brute-force q-ampleness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleWindow {
    /// Twists `ν` range over `[-box_radius, box_radius]^r`.
    pub box_radius: i64,
    pub m_min: i64,
    pub m_max: i64,
}

impl Default for OracleWindow {
    fn default() -> Self {
        OracleWindow {
            box_radius: 3,
            m_min: 10,
            m_max: 30,
        }
    }
}

impl OracleWindow {
    pub fn new(box_radius: i64, m_min: i64, m_max: i64) -> Result<Self> {
        let window = OracleWindow {
            box_radius,
            m_min,
            m_max,
        };
        window.validate()?;
        Ok(window)
    }

    fn validate(&self) -> Result<()> {
        if self.box_radius < 1 || self.m_min < 1 || self.m_min >= self.m_max {
            return Err(Error::InvalidWindow {
                box_radius: self.box_radius,
                m_min: self.m_min,
                m_max: self.m_max,
            });
        }
        Ok(())
    }
}

/// Brute-force q-ampleness straight from the definition.
///
/// Pic of the flag variety is the weight lattice, so it is enough to twist by
/// line bundles `L_ν`. Returns the largest degree in which `H^i(L_{mλ+ν})` is
/// nonzero for some `ν` in the box and some `m` in the window.
pub fn q_ample_index_oracle(weight: &Weight, window: OracleWindow) -> Result<QAmpleIndex> {
    window.validate()?;
    let rank = weight.rank();
    let powers = (window.m_min..=window.m_max)
        .map(|m| weight.checked_scale(m))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0;
    for twist in lattice_box(rank, window.box_radius) {
        for power in &powers {
            let bundle = power.checked_add(&twist)?;
            if let Some(d) = cohomology_degree(&bundle) {
                worst = worst.max(d);
            }
        }
    }
    Ok(QAmpleIndex(worst))
}

/// One lattice point of the chamber picture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberRecord {
    pub weight: Weight,
    pub qmin: QAmpleIndex,
    /// No positive root pairs to zero with the weight.
    pub regular: bool,
    /// Length of `w` with `w^{-1}λ` strictly dominant; `None` off the chamber interiors.
    pub weyl_length: Option<usize>,
}

impl ChamberRecord {
    pub fn classify(weight: Weight) -> Self {
        let qmin = q_ample_index(&weight);
        let weyl_length = match dominant_conjugate(&weight) {
            Conjugate::Regular { element, .. } => Some(element.length()),
            Conjugate::Singular => None,
        };
        ChamberRecord {
            weight,
            qmin,
            regular: weyl_length.is_some(),
            weyl_length,
        }
    }
}

/// Classify every weight in `[-range, range]^r`, lexicographically ordered.
pub fn chamber_map(rank: usize, range: i64) -> Result<Vec<ChamberRecord>> {
    check_rank(rank)?;
    if rank > MAX_ENUMERATION_RANK {
        return Err(Error::EnumerationCap {
            rank,
            cap: MAX_ENUMERATION_RANK,
        });
    }
    if range < 1 {
        return Err(Error::InvalidRange(range));
    }
    Ok(lattice_box(rank, range)
        .map(ChamberRecord::classify)
        .collect())
}

/// Lattice points of `[-radius, radius]^rank` in lexicographic order.
pub(crate) fn lattice_box(rank: usize, radius: i64) -> impl Iterator<Item = Weight> {
    (0..rank)
        .map(|_| -radius..=radius)
        .multi_cartesian_product()
        .map(|c| Weight::new(c).expect("rank already validated"))
}
