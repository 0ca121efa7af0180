//! Hyperderivative Reed-Solomon codes: parameters, the evaluation-map
//! encoder, Hermite interpolation and exhaustive-search oracles.
//!
//! A message `f` with `deg f < t` maps to the `s x r` matrix whose entry
//! `(i, j)` is `v[i][j] * ∂^(i) f(alpha_j)` (0-based rows).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};
use crate::nrt::{nrt_distance, nrt_weight, NrtMatrix};
use crate::poly::Polynomial;

/// Default cap on the number of messages an exhaustive search may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    modulus: PrimeModulus,
    s: usize,
    t: usize,
    alphas: Vec<FieldElement>,
    multipliers: NrtMatrix,
    unit_multipliers: bool,
}

impl CodeParams {
    /// Validates and builds a parameter set. `multipliers` defaults to the
    /// all-ones matrix.
    pub fn new(
        modulus: PrimeModulus,
        s: usize,
        t: usize,
        alphas: Vec<FieldElement>,
        multipliers: Option<NrtMatrix>,
    ) -> Result<Self> {
        let p = modulus.value();
        let r = alphas.len();
        let invalid = |msg: String| Err(Error::InvalidParams(msg));
        if r == 0 {
            return invalid("at least one evaluation point is required".into());
        }
        if s == 0 {
            return invalid("s must be positive".into());
        }
        if s as u128 > p as u128 {
            return invalid(format!("s = {s} exceeds p = {p}"));
        }
        if t == 0 || t > r * s {
            return invalid(format!("t = {t} must lie in [1, rs] = [1, {}]", r * s));
        }
        check_points(modulus, &alphas)?;
        let multipliers = match multipliers {
            None => ones(modulus, s, r),
            Some(v) => {
                if v.modulus() != modulus {
                    return Err(Error::ModulusMismatch(p, v.modulus().value()));
                }
                if (v.s(), v.r()) != (s, r) {
                    return invalid(format!(
                        "multiplier matrix is {}x{}, expected {s}x{r}",
                        v.s(),
                        v.r()
                    ));
                }
                if v.columns().flatten().any(|e| e.is_zero()) {
                    return invalid("multiplier entries must be nonzero".into());
                }
                v
            }
        };
        let unit_multipliers = multipliers.columns().flatten().all(|&e| e == modulus.one());
        Ok(Self { modulus, s, t, alphas, multipliers, unit_multipliers })
    }

    /// Convenience constructor from integers with all-ones multipliers.
    pub fn from_values(p: u64, s: usize, t: usize, alphas: &[u64]) -> Result<Self> {
        let modulus = PrimeModulus::new(p)?;
        if let Some(&a) = alphas.iter().find(|&&a| a >= p) {
            return Err(Error::InvalidParams(format!("evaluation point {a} is not below p = {p}")));
        }
        Self::new(modulus, s, t, alphas.iter().map(|&a| modulus.element(a)).collect(), None)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn r(&self) -> usize {
        self.alphas.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Code dimension: messages have degree at most `t - 1`.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Code length `rs`.
    pub fn length(&self) -> usize {
        self.r() * self.s
    }

    pub fn alphas(&self) -> &[FieldElement] {
        &self.alphas
    }

    pub fn multipliers(&self) -> &NrtMatrix {
        &self.multipliers
    }

    pub fn has_unit_multipliers(&self) -> bool {
        self.unit_multipliers
    }

    /// Singleton bound `rs - t + 1`, attained by every HRS code.
    pub fn singleton_bound(&self) -> usize {
        self.length() - self.t + 1
    }

    /// The codeword of `f`.
    pub fn encode(&self, f: &Polynomial) -> Result<NrtMatrix> {
        self.check_message(f)?;
        let unscaled = self.evaluate(f)?;
        if self.unit_multipliers {
            Ok(unscaled)
        } else {
            unscaled.hadamard(&self.multipliers)
        }
    }

    /// `[∂^(i) f(alpha_j)]` for any `f`, ignoring the multipliers and the
    /// degree bound.
    pub fn evaluate(&self, f: &Polynomial) -> Result<NrtMatrix> {
        if f.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), f.modulus().value()));
        }
        let columns = self.alphas.iter().map(|&a| f.taylor_coefficients(a, self.s)).collect();
        NrtMatrix::from_columns(self.modulus, columns)
    }

    /// Divides `y` entrywise by the multipliers, mapping received words of
    /// this code onto the all-ones variant. NRT weights are unchanged.
    pub fn normalize_received(&self, y: &NrtMatrix) -> Result<NrtMatrix> {
        self.check_shape(y)?;
        if self.unit_multipliers {
            return Ok(y.clone());
        }
        let columns = y
            .columns()
            .zip(self.multipliers.columns())
            .map(|(yc, vc)| yc.iter().zip(vc).map(|(&a, &v)| a / v).collect())
            .collect();
        NrtMatrix::from_columns(self.modulus, columns)
    }

    pub(crate) fn check_shape(&self, y: &NrtMatrix) -> Result<()> {
        if y.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), y.modulus().value()));
        }
        if (y.s(), y.r()) != (self.s, self.r()) {
            return Err(Error::DimensionMismatch(format!(
                "received {}x{} matrix, code is {}x{}",
                y.s(),
                y.r(),
                self.s,
                self.r()
            )));
        }
        Ok(())
    }

    fn check_message(&self, f: &Polynomial) -> Result<()> {
        if f.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), f.modulus().value()));
        }
        match f.degree() {
            Some(d) if d >= self.t => Err(Error::DegreeTooHigh { degree: d, max: self.t - 1 }),
            _ => Ok(()),
        }
    }

    /// Number of messages `p^t`, or `None` if it does not fit in a `u128`.
    pub fn message_count(&self) -> Option<u128> {
        (self.modulus.value() as u128).checked_pow(u32::try_from(self.t).ok()?)
    }

    /// The message with lexicographic rank `index`, where the constant
    /// coefficient is the most significant digit.
    pub fn message_at(&self, mut index: u128) -> Polynomial {
        let p = self.modulus.value() as u128;
        let mut digits = vec![0u64; self.t];
        for d in digits.iter_mut().rev() {
            *d = (index % p) as u64;
            index /= p;
        }
        Polynomial::from_values(self.modulus, &digits)
    }

    fn enumeration_size(&self, budget: u128) -> Result<u128> {
        match self.message_count() {
            Some(n) if n <= budget => Ok(n),
            n => Err(Error::BudgetExceeded { required: n.unwrap_or(u128::MAX), budget }),
        }
    }
}

fn ones(modulus: PrimeModulus, s: usize, r: usize) -> NrtMatrix {
    NrtMatrix::from_columns(modulus, vec![vec![modulus.one(); s]; r]).expect("nonempty shape")
}

fn check_points(modulus: PrimeModulus, alphas: &[FieldElement]) -> Result<()> {
    if let Some(a) = alphas.iter().find(|a| a.modulus() != modulus) {
        return Err(Error::ModulusMismatch(modulus.value(), a.modulus().value()));
    }
    let mut seen: Vec<u64> = alphas.iter().map(|a| a.value()).collect();
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidParams(format!("evaluation point {} repeated", w[0])));
    }
    Ok(())
}

/// The unique `H` with `deg H < rs` and `∂^(i) H(alpha_j) = y[i][j]`.
///
/// Each column prescribes the first `s` Taylor coefficients of `H` at its
/// point, i.e. the residue of `H` modulo `(X - alpha_j)^s`. The residues are
/// combined one point at a time by the Chinese remainder theorem.
pub fn hermite_interpolate(alphas: &[FieldElement], y: &NrtMatrix) -> Result<Polynomial> {
    let m = y.modulus();
    let s = y.s();
    if alphas.len() != y.r() {
        return Err(Error::DimensionMismatch(format!(
            "{} points for a matrix with {} columns",
            alphas.len(),
            y.r()
        )));
    }
    if s as u128 > m.value() as u128 {
        return Err(Error::InvalidParams(format!("s = {s} exceeds p = {m}")));
    }
    check_points(m, alphas)?;

    let mut h = Polynomial::zero(m);
    // Product of (X - alpha_k)^s over the points already merged.
    let mut modulus_poly = Polynomial::one(m);
    for (j, &alpha) in alphas.iter().enumerate() {
        let target = y.column(j);
        let current = h.taylor_coefficients(alpha, s);
        let mod_taylor = modulus_poly.taylor_coefficients(alpha, s);
        let diff: Vec<_> = target.iter().zip(&current).map(|(&a, &b)| a - b).collect();
        let c = series_divide(&diff, &mod_taylor)?;
        let correction = from_taylor(&c, alpha);
        h = &h + &(&modulus_poly * &correction);
        modulus_poly = &modulus_poly * &Polynomial::linear_power(alpha, s);
    }
    Ok(h)
}

/// `num / den` as truncated power series; `den[0]` must be a unit.
fn series_divide(num: &[FieldElement], den: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let lead_inv = den[0].inv()?;
    let mut out: Vec<FieldElement> = Vec::with_capacity(num.len());
    for k in 0..num.len() {
        let mut acc = num[k];
        for i in 1..=k {
            acc -= den[i] * out[k - i];
        }
        out.push(acc * lead_inv);
    }
    Ok(out)
}

/// `sum_k c[k] (X - alpha)^k`.
fn from_taylor(c: &[FieldElement], alpha: FieldElement) -> Polynomial {
    let m = alpha.modulus();
    let shift = Polynomial::linear_power(alpha, 1);
    c.iter()
        .rev()
        .fold(Polynomial::zero(m), |acc, &ck| &(&acc * &shift) + &Polynomial::constant(ck))
}

/// NRT weight of the codeword of `f` predicted from vanishing orders:
/// `rs - sum_j min(ν_f(alpha_j), s)`.
pub fn codeword_weight_formula(params: &CodeParams, f: &Polynomial) -> Result<usize> {
    params.check_message(f)?;
    let s = params.s();
    let vanishing: usize = params.alphas().iter().map(|&a| f.vanishing_order(a, s)).sum();
    Ok(params.length() - vanishing)
}

/// Minimum NRT weight over all nonzero codewords, by exhaustive enumeration
/// of the `p^t` messages. Fails if `p^t > budget`.
pub fn brute_force_min_distance(params: &CodeParams, budget: u128) -> Result<usize> {
    let n = params.enumeration_size(budget)?;
    let min = (1..n)
        .into_par_iter()
        .map(|idx| {
            let f = params.message_at(idx);
            nrt_weight(&params.encode(&f).expect("enumerated message fits the code"))
        })
        .min();
    Ok(min.unwrap_or(0))
}

/// A message whose codeword is NRT-closest to `y`, with that distance. Ties
/// go to the lexicographically smallest coefficient sequence (constant term
/// first).
pub fn brute_force_nearest_codeword(
    params: &CodeParams,
    y: &NrtMatrix,
    budget: u128,
) -> Result<(Polynomial, usize)> {
    params.check_shape(y)?;
    let n = params.enumeration_size(budget)?;
    let (dist, idx) = (0..n)
        .into_par_iter()
        .map(|idx| {
            let c = params.encode(&params.message_at(idx)).expect("enumerated message fits the code");
            (nrt_distance(&c, y).expect("shapes checked"), idx)
        })
        .min()
        .expect("at least one message");
    Ok((params.message_at(idx), dist))
}
