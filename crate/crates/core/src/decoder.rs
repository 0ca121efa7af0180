//! Welch-Berlekamp unique decoding for HRS codes under the NRT metric.
//!
//! For a received word `y` and error budget `e`, find an error locator `E`
//! (monic, degree exactly `e`) and an evaluator `N` (degree at most
//! `e + t - 1`) such that for every point `alpha_i` and order `l < s`
//!
//! ```text
//! ∂^(l) N(alpha_i) = sum_{j=0}^{l} y[j][i] * ∂^(l-j) E(alpha_i)
//! ```
//!
//! then return `N / E` if the division is exact and the result lies within
//! NRT distance `e` of `y`.

use crate::error::{Error, Result};
use crate::field::{binomial_mod_p, FieldElement};
use crate::hrs::{hermite_interpolate, CodeParams};
use crate::linalg::{FieldMatrix, SolveOutcome};
use crate::nrt::{nrt_distance, NrtMatrix};
use crate::poly::Polynomial;

/// `floor((rs - t) / 2)`.
pub fn decoding_radius(params: &CodeParams) -> usize {
    (params.length() - params.t()) / 2
}

/// Column and row layout of the key-equation system.
///
/// Columns: the `e + t` coefficients `a_0..a_{e+t-1}` of `N`, then the `e`
/// non-leading coefficients `b_0..b_{e-1}` of `E`. The leading `b_e = 1` lives
/// on the right-hand side.
///
/// Rows: order-major, so row `l * r + i` is the order-`l` constraint at
/// point `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WbLayout {
    pub r: usize,
    pub s: usize,
    pub e: usize,
    pub t: usize,
}

impl WbLayout {
    pub fn evaluator_len(&self) -> usize {
        self.e + self.t
    }

    pub fn evaluator_column(&self, k: usize) -> usize {
        assert!(k < self.evaluator_len());
        k
    }

    pub fn locator_column(&self, k: usize) -> usize {
        assert!(k < self.e, "the leading locator coefficient is fixed to 1");
        self.evaluator_len() + k
    }

    pub fn columns(&self) -> usize {
        2 * self.e + self.t
    }

    pub fn rows(&self) -> usize {
        self.r * self.s
    }

    pub fn row(&self, point: usize, order: usize) -> usize {
        assert!(point < self.r && order < self.s);
        order * self.r + point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WbSystem {
    pub matrix: FieldMatrix,
    pub rhs: Vec<FieldElement>,
    pub layout: WbLayout,
}

impl WbSystem {
    pub fn e(&self) -> usize {
        self.layout.e
    }

    /// Reads `(N, E)` off a solution vector; `E` gets its monic leading term.
    pub fn split_solution(&self, x: &[FieldElement]) -> Result<(Polynomial, Polynomial)> {
        let m = self.matrix.modulus();
        if x.len() != self.layout.columns() {
            return Err(Error::DimensionMismatch(format!(
                "solution of length {} for {} unknowns",
                x.len(),
                self.layout.columns()
            )));
        }
        let (a, b) = x.split_at(self.layout.evaluator_len());
        let n = Polynomial::new(m, a.to_vec())?;
        let mut e_coeffs = b.to_vec();
        e_coeffs.push(m.one());
        Ok((n, Polynomial::new(m, e_coeffs)?))
    }

    /// Packs `(N, E)` into a solution vector. `E` must be monic of degree
    /// `e` and `N` of degree below `e + t`.
    pub fn pack(&self, n: &Polynomial, e: &Polynomial) -> Result<Vec<FieldElement>> {
        let l = self.layout;
        if e.degree() != Some(l.e) || !e.is_monic() {
            return Err(Error::Precondition(format!("locator must be monic of degree {}", l.e)));
        }
        if n.degree().is_some_and(|d| d >= l.evaluator_len()) {
            return Err(Error::Precondition(format!(
                "evaluator must have degree below {}",
                l.evaluator_len()
            )));
        }
        let mut x: Vec<_> = (0..l.evaluator_len()).map(|k| n.coefficient(k)).collect();
        x.extend((0..l.e).map(|k| e.coefficient(k)));
        Ok(x)
    }

    /// Whether `(N, E)` satisfies every row of the system.
    pub fn is_satisfied_by(&self, n: &Polynomial, e: &Polynomial) -> Result<bool> {
        let x = self.pack(n, e)?;
        Ok(self.matrix.mat_vec(&x)? == self.rhs)
    }
}

/// Assembles the key-equation system for `y` (divided by the multipliers
/// first when they are not all ones).
pub fn build_wb_system(params: &CodeParams, y: &NrtMatrix, e: usize) -> Result<WbSystem> {
    check_budget(params, e)?;
    let y = params.normalize_received(y)?;
    Ok(assemble(params, &y, e))
}

fn check_budget(params: &CodeParams, e: usize) -> Result<()> {
    let radius = decoding_radius(params);
    if e > radius {
        return Err(Error::Precondition(format!(
            "error budget e = {e} exceeds the decoding radius {radius}"
        )));
    }
    Ok(())
}

fn assemble(params: &CodeParams, y: &NrtMatrix, e: usize) -> WbSystem {
    let m = params.modulus();
    let (r, s, t) = (params.r(), params.s(), params.t());
    let layout = WbLayout { r, s, e, t };
    let top = e + t; // exponents 0..top cover every unknown
    let binom: Vec<Vec<FieldElement>> = (0..top)
        .map(|k| (0..s).map(|d| binomial_mod_p(k as u64, d as u64, m)).collect())
        .collect();

    let mut matrix = FieldMatrix::zeros(m, layout.rows(), layout.columns());
    let mut rhs = vec![m.zero(); layout.rows()];
    for (i, &alpha) in params.alphas().iter().enumerate() {
        let mut powers = Vec::with_capacity(top);
        let mut acc = m.one();
        for _ in 0..top {
            powers.push(acc);
            acc *= alpha;
        }
        // Coefficient of b_k in sum_{j<=l} y[j][i] ∂^(l-j) E(alpha_i):
        // sum_j y[j][i] C(k, l-j) alpha^(k-l+j).
        let locator_term = |k: usize, l: usize| {
            (0..=l.min(s - 1)).fold(m.zero(), |acc, j| {
                let d = l - j;
                if k < d {
                    acc
                } else {
                    acc + y.get(j, i) * binom[k][d] * powers[k - d]
                }
            })
        };
        for l in 0..s {
            let row = layout.row(i, l);
            for k in l..layout.evaluator_len() {
                matrix.set(row, layout.evaluator_column(k), binom[k][l] * powers[k - l]);
            }
            for k in 0..e {
                matrix.set(row, layout.locator_column(k), -locator_term(k, l));
            }
            rhs[row] = locator_term(e, l);
        }
    }
    WbSystem { matrix, rhs, layout }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecodeFailure {
    /// The key-equation system is inconsistent.
    NoSolution,
    /// The locator does not divide the evaluator.
    NonDivisible,
    /// The candidate lies farther than `e` from the received word.
    DistanceExceeded,
}

impl DecodeFailure {
    pub fn as_str(self) -> &'static str {
        match self {
            DecodeFailure::NoSolution => "no_solution",
            DecodeFailure::NonDivisible => "non_divisible",
            DecodeFailure::DistanceExceeded => "distance_exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub message: Polynomial,
    /// NRT distance between the codeword of `message` and the received word.
    pub error_weight: usize,
    pub locator: Polynomial,
    pub evaluator: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Success(Decoded),
    Failure(DecodeFailure),
}

impl DecodeOutcome {
    pub fn message(&self) -> Option<&Polynomial> {
        match self {
            DecodeOutcome::Success(d) => Some(&d.message),
            DecodeOutcome::Failure(_) => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, DecodeOutcome::Success(_))
    }
}

/// Decodes `y` with error budget `e`, defaulting to the decoding radius.
///
/// Returns `Err` only for malformed input. A received word that cannot be
/// decoded yields `Ok(DecodeOutcome::Failure(_))`.
pub fn decode(params: &CodeParams, y: &NrtMatrix, e: Option<usize>) -> Result<DecodeOutcome> {
    let e = e.unwrap_or_else(|| decoding_radius(params));
    check_budget(params, e)?;
    let y = params.normalize_received(y)?;
    let system = assemble(params, &y, e);

    let solution = match system.matrix.solve(&system.rhs)? {
        SolveOutcome::Solved(sol) => sol,
        SolveOutcome::Inconsistent => return Ok(DecodeOutcome::Failure(DecodeFailure::NoSolution)),
    };
    let (evaluator, locator) = system.split_solution(&solution.particular)?;
    assert!(
        locator.degree() == Some(e) && locator.is_monic(),
        "locator lost its monic leading term"
    );

    let (message, remainder) = evaluator.div_rem(&locator)?;
    if !remainder.is_zero() {
        return Ok(DecodeOutcome::Failure(DecodeFailure::NonDivisible));
    }
    if message.degree().is_some_and(|d| d >= params.t()) {
        return Ok(DecodeOutcome::Failure(DecodeFailure::DistanceExceeded));
    }
    let error_weight = nrt_distance(&params.evaluate(&message)?, &y)?;
    if error_weight > e {
        return Ok(DecodeOutcome::Failure(DecodeFailure::DistanceExceeded));
    }
    Ok(DecodeOutcome::Success(Decoded { message, error_weight, locator, evaluator }))
}

/// Explicit solution `(E, N)` of the key-equation system built from the
/// transmitted message `p` and received word `y`.
///
/// With `H` the Hermite interpolant of `y`, `Q = p - H` and `Δ` the NRT
/// weight of the evaluation of `Q`,
/// `E = X^(e - Δ) * prod_i (X - alpha_i)^(s - min(ν_Q(alpha_i), s))` and
/// `N = E * p`. Requires `Δ <= e`.
pub fn existence_witness(
    params: &CodeParams,
    p: &Polynomial,
    y: &NrtMatrix,
    e: usize,
) -> Result<(Polynomial, Polynomial)> {
    let m = params.modulus();
    let s = params.s();
    // Validates the degree of p.
    params.encode(p)?;
    let y = params.normalize_received(y)?;
    let h = hermite_interpolate(params.alphas(), &y)?;
    let q = p.try_sub(&h)?;
    let delta = params.evaluate(&q)?.weight();
    if delta > e {
        return Err(Error::Precondition(format!(
            "transmitted word lies at distance {delta} > e = {e}"
        )));
    }
    let locator = params
        .alphas()
        .iter()
        .map(|&a| Polynomial::linear_power(a, s - q.vanishing_order(a, s)))
        .fold(Polynomial::monomial(m.one(), e - delta), |acc, f| &acc * &f);
    let evaluator = &locator * p;
    Ok((locator, evaluator))
}
