//! Hyperderivative Reed-Solomon (HRS) codes over prime fields, measured in
//! the NRT metric, with a Welch-Berlekamp unique decoder.
//!
//! A message polynomial `f` of degree below `t` is sent as the `s x r` matrix
//! of its hyperderivatives `∂^(i) f(alpha_j)`. The NRT weight of a column is
//! `s - i` where `i` is the (0-based) index of its topmost nonzero entry;
//! these codes meet the Singleton bound `rs - t + 1` in that metric, and
//! [`decoder::decode`] corrects any error of NRT weight up to
//! `floor((rs - t) / 2)`.
//!
//! ```
//! use hrs_core::{decode, CodeParams, NrtMatrix, Polynomial};
//!
//! let params = CodeParams::from_values(7, 2, 4, &[1, 2, 3, 4]).unwrap();
//! let m = params.modulus();
//! let msg = Polynomial::from_values(m, &[5, 2, 3, 1]);
//! let sent = params.encode(&msg).unwrap();
//! let noise = NrtMatrix::from_rows(m, &[vec![0, 0, 0, 0], vec![1, 0, 1, 0]]).unwrap();
//! let received = sent.try_add(&noise).unwrap();
//! assert_eq!(decode(&params, &received, None).unwrap().message(), Some(&msg));
//! ```

pub mod channel;
pub mod decoder;
pub mod error;
pub mod field;
pub mod hrs;
pub mod linalg;
pub mod nrt;
pub mod poly;

pub use channel::{run_trials, sample_error, ChannelSpec, ErrorSampler, TrialReport};
pub use decoder::{
    build_wb_system, decode, decoding_radius, existence_witness, DecodeFailure, DecodeOutcome,
    Decoded, WbSystem,
};
pub use error::{Error, Result};
pub use field::{binomial_mod_p, FieldElement, PrimeModulus};
pub use hrs::{
    brute_force_min_distance, brute_force_nearest_codeword, codeword_weight_formula,
    hermite_interpolate, CodeParams, DEFAULT_BUDGET,
};
pub use linalg::{FieldMatrix, LinearSolution, SolveOutcome};
pub use nrt::{column_weight, nrt_distance, nrt_weight, NrtMatrix};
pub use poly::Polynomial;
