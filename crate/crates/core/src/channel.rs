//! Seeded NRT-error channel and a Monte Carlo decoding harness.

use std::time::{Duration, Instant};

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::decoder::{decode, DecodeFailure, DecodeOutcome};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};
use crate::hrs::CodeParams;
use crate::nrt::NrtMatrix;
use crate::poly::Polynomial;

/// Number of length-`s` columns over GF(p) with NRT weight exactly `w_col`:
/// `1` for `w_col = 0`, otherwise `(p - 1) p^(w_col - 1)`.
pub fn count_matrices_of_weight(s: usize, p: PrimeModulus, w_col: usize) -> BigUint {
    assert!(w_col <= s, "column weight {w_col} exceeds height {s}");
    if w_col == 0 {
        return BigUint::one();
    }
    let p = BigUint::from(p.value());
    (&p - 1u32) * p.pow(w_col as u32 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChannelSpec {
    pub s: usize,
    pub r: usize,
    pub modulus: PrimeModulus,
    pub weight: usize,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(s: usize, r: usize, modulus: PrimeModulus, weight: usize, seed: u64) -> Result<Self> {
        if s == 0 || r == 0 {
            return Err(Error::InvalidParams("channel shape must be nonempty".into()));
        }
        if weight > s * r {
            return Err(Error::InvalidParams(format!(
                "error weight {weight} exceeds the maximum {}",
                s * r
            )));
        }
        Ok(Self { s, r, modulus, weight, seed })
    }

    /// Independent generator for stream `index`; streams never overlap.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        trial_rng(self.seed, index)
    }
}

fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform sampler over all `s x r` matrices of one exact NRT weight.
///
/// `ways[n][w]` counts the matrices with `n` columns and weight `w`. A
/// uniform rank below `ways[r][weight]` is unranked column by column, so
/// every matrix of the target weight is equally likely.
#[derive(Clone, Debug)]
pub struct ErrorSampler {
    s: usize,
    r: usize,
    modulus: PrimeModulus,
    weight: usize,
    column_counts: Vec<BigUint>,
    ways: Vec<Vec<BigUint>>,
}

impl ErrorSampler {
    pub fn new(spec: &ChannelSpec) -> Self {
        let ChannelSpec { s, r, modulus, weight, .. } = *spec;
        let column_counts: Vec<_> = (0..=s).map(|c| count_matrices_of_weight(s, modulus, c)).collect();
        let mut ways = vec![vec![BigUint::zero(); weight + 1]];
        ways[0][0] = BigUint::one();
        for n in 1..=r {
            let prev = &ways[n - 1];
            let row = (0..=weight)
                .map(|w| {
                    (0..=s.min(w)).fold(BigUint::zero(), |acc, c| acc + &column_counts[c] * &prev[w - c])
                })
                .collect();
            ways.push(row);
        }
        Self { s, r, modulus, weight, column_counts, ways }
    }

    /// Number of matrices of the target weight.
    pub fn population(&self) -> &BigUint {
        &self.ways[self.r][self.weight]
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> NrtMatrix {
        let rank = rng.gen_biguint_below(self.population());
        self.unrank(rank)
    }

    /// The matrix with the given rank in `[0, population)`.
    pub fn unrank(&self, mut rank: BigUint) -> NrtMatrix {
        assert!(&rank < self.population(), "rank out of range");
        let m = self.modulus;
        let mut remaining = self.weight;
        let mut columns = Vec::with_capacity(self.r);
        for col in 0..self.r {
            let tail = &self.ways[self.r - col - 1];
            for c in 0..=self.s.min(remaining) {
                let block = &self.column_counts[c] * &tail[remaining - c];
                if rank < block {
                    let within = &rank / &tail[remaining - c];
                    rank %= &tail[remaining - c];
                    columns.push(self.column_of_weight(c, within));
                    remaining -= c;
                    break;
                }
                rank -= block;
            }
        }
        debug_assert_eq!(remaining, 0);
        NrtMatrix::from_columns(m, columns).expect("shape is nonempty")
    }

    // Column with weight c, indexed by `index` in [0, (p-1) p^(c-1)).
    fn column_of_weight(&self, c: usize, mut index: BigUint) -> Vec<FieldElement> {
        let m = self.modulus;
        let mut col = vec![m.zero(); self.s];
        if c == 0 {
            return col;
        }
        let top = self.s - c;
        let p = BigUint::from(m.value());
        let units = &p - 1u32;
        col[top] = m.element(1 + (&index % &units).to_u64().expect("digit below p"));
        index /= &units;
        for entry in col.iter_mut().skip(top + 1) {
            *entry = m.element((&index % &p).to_u64().expect("digit below p"));
            index /= &p;
        }
        col
    }
}

/// One error matrix of exact NRT weight `spec.weight`, uniform over all such
/// matrices.
pub fn sample_error<R: Rng + ?Sized>(spec: &ChannelSpec, rng: &mut R) -> NrtMatrix {
    ErrorSampler::new(spec).sample(rng)
}

/// Outcome counts of a batch of trials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrialCounts {
    pub trials: usize,
    /// Decoded to the transmitted message.
    pub successes: usize,
    pub no_solution: usize,
    pub non_divisible: usize,
    pub distance_exceeded: usize,
    /// Decoded to a different message within distance `e` of the received
    /// word. Only possible beyond the decoding radius.
    pub miscorrected: usize,
}

impl TrialCounts {
    pub fn failures(&self) -> usize {
        self.no_solution + self.non_divisible + self.distance_exceeded + self.miscorrected
    }

    fn merge(mut self, other: Self) -> Self {
        self.trials += other.trials;
        self.successes += other.successes;
        self.no_solution += other.no_solution;
        self.non_divisible += other.non_divisible;
        self.distance_exceeded += other.distance_exceeded;
        self.miscorrected += other.miscorrected;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialReport {
    pub weight: usize,
    pub counts: TrialCounts,
    pub total_decode_time: Duration,
}

pub const CSV_HEADER: &str =
    "weight,trials,successes,fail_nosolution,fail_nondivisible,fail_distance,mean_decode_us";

impl TrialReport {
    pub fn mean_decode_us(&self) -> f64 {
        if self.counts.trials == 0 {
            0.0
        } else {
            self.total_decode_time.as_secs_f64() * 1e6 / self.counts.trials as f64
        }
    }

    pub fn success_rate(&self) -> f64 {
        if self.counts.trials == 0 {
            1.0
        } else {
            self.counts.successes as f64 / self.counts.trials as f64
        }
    }

    /// One CSV line matching [`CSV_HEADER`], without a trailing newline.
    pub fn csv_row(&self) -> String {
        let c = &self.counts;
        format!(
            "{},{},{},{},{},{},{:.3}",
            self.weight,
            c.trials,
            c.successes,
            c.no_solution,
            c.non_divisible,
            c.distance_exceeded,
            self.mean_decode_us()
        )
    }
}

/// Runs `n` independent trials of: random message, encode, add an error of
/// exact NRT weight `weight`, decode at the full radius, compare.
///
/// Trial `i` draws from stream `i` of the generator seeded with `seed`, so the
/// counts do not depend on scheduling.
pub fn run_trials(params: &CodeParams, weight: usize, n: usize, seed: u64) -> Result<TrialReport> {
    let spec = ChannelSpec::new(params.s(), params.r(), params.modulus(), weight, seed)?;
    let sampler = ErrorSampler::new(&spec);
    let m = params.modulus();

    let (counts, elapsed) = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = spec.rng(i);
            let coeffs: Vec<u64> = (0..params.t()).map(|_| rng.gen_range(0..m.value())).collect();
            let message = Polynomial::from_values(m, &coeffs);
            let error = sampler.sample(&mut rng);
            assert_eq!(error.weight(), weight, "sampled error has the wrong weight");
            let received = params.encode(&message)?.try_add(&error)?;

            let start = Instant::now();
            let outcome = decode(params, &received, None)?;
            let elapsed = start.elapsed();

            let mut c = TrialCounts { trials: 1, ..Default::default() };
            match outcome {
                DecodeOutcome::Success(d) if d.message == message => c.successes = 1,
                DecodeOutcome::Success(_) => c.miscorrected = 1,
                DecodeOutcome::Failure(DecodeFailure::NoSolution) => c.no_solution = 1,
                DecodeOutcome::Failure(DecodeFailure::NonDivisible) => c.non_divisible = 1,
                DecodeOutcome::Failure(DecodeFailure::DistanceExceeded) => c.distance_exceeded = 1,
            }
            Ok((c, elapsed))
        })
        .try_reduce(
            || (TrialCounts::default(), Duration::ZERO),
            |(a, ta), (b, tb)| Ok((a.merge(b), ta + tb)),
        )?;

    Ok(TrialReport { weight, counts, total_decode_time: elapsed })
}
