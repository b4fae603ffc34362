//! Exact cohomology of line bundles on full flag varieties of `SL_{r+1}` and
//! the q-ampleness questions it answers.
//!
//! * [`root_system`]: weights, roots and the Weyl group of type `A_r`.
//! * [`bwb`]: Borel–Weil–Bott cohomology, Weyl dimensions, Euler characteristics.
//! * [`qample`]: the least `q` making `L_λ` q-ample, by closed form and by brute force.
//! * [`projective`]: Bott's formula on `P^n`.
//! * [`lefschetz`]: ampleness of smooth subvarieties of `P^n` from Betti numbers.

pub mod bwb;
pub mod error;
pub mod lefschetz;
pub mod projective;
pub mod qample;
pub mod root_system;

pub use bwb::{bwb_cohomology, euler_characteristic, weyl_dimension, CohomologyResult};
pub use error::{Error, Result};
pub use lefschetz::{ampleness_verdict, BettiProfile, Verdict};
pub use projective::{bott_h, pn_q_ample_index, TwistSpec};
pub use qample::{
    chamber_map, q_ample_index, q_ample_index_oracle, ChamberRecord, OracleWindow, QAmpleIndex,
};
pub use root_system::{
    dominant_conjugate, enumerate_weyl_group, pairing, Conjugate, PositiveRoot, RootSystem, Weight,
    WeylElement,
};
