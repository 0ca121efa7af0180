#![allow(dead_code)]

use hrs_core::{ChannelSpec, CodeParams, ErrorSampler, NrtMatrix, Polynomial, PrimeModulus};
use rand::seq::index::sample;
use rand::Rng;

/// Random code over GF(p) with `s <= s_max`, `r <= min(p, r_max)` and
/// `1 <= t <= rs`. Multipliers are all ones unless `random_v`.
pub fn random_params<R: Rng>(
    rng: &mut R,
    p: u64,
    s_max: usize,
    r_max: usize,
    random_v: bool,
) -> CodeParams {
    let m = PrimeModulus::new(p).unwrap();
    let s = rng.gen_range(1..=s_max.min(p as usize));
    let r = rng.gen_range(1..=r_max.min(p as usize));
    let t = rng.gen_range(1..=r * s);
    let alphas = random_points(rng, m, r);
    let v = random_v.then(|| random_multipliers(rng, m, s, r));
    CodeParams::new(m, s, t, alphas, v).unwrap()
}

pub fn random_points<R: Rng>(rng: &mut R, m: PrimeModulus, r: usize) -> Vec<hrs_core::FieldElement> {
    sample(rng, m.value() as usize, r).into_iter().map(|a| m.element(a as u64)).collect()
}

pub fn random_multipliers<R: Rng>(rng: &mut R, m: PrimeModulus, s: usize, r: usize) -> NrtMatrix {
    let rows: Vec<Vec<u64>> =
        (0..s).map(|_| (0..r).map(|_| rng.gen_range(1..m.value())).collect()).collect();
    NrtMatrix::from_rows(m, &rows).unwrap()
}

/// Uniform polynomial of degree below `len`.
pub fn random_poly<R: Rng>(rng: &mut R, m: PrimeModulus, len: usize) -> Polynomial {
    let c: Vec<u64> = (0..len).map(|_| rng.gen_range(0..m.value())).collect();
    Polynomial::from_values(m, &c)
}

pub fn random_matrix<R: Rng>(rng: &mut R, m: PrimeModulus, s: usize, r: usize) -> NrtMatrix {
    let rows: Vec<Vec<u64>> =
        (0..s).map(|_| (0..r).map(|_| rng.gen_range(0..m.value())).collect()).collect();
    NrtMatrix::from_rows(m, &rows).unwrap()
}

/// Error of exact NRT weight `w` for the shape of `params`.
pub fn random_error<R: Rng>(rng: &mut R, params: &CodeParams, w: usize) -> NrtMatrix {
    let spec = ChannelSpec::new(params.s(), params.r(), params.modulus(), w, 0).unwrap();
    ErrorSampler::new(&spec).sample(rng)
}

/// Every `(p, r, s, t)` with `s <= p`, `r <= p`, `rs <= 8` and `p^t <= limit`,
/// for p in `primes`. Points are `0..r`.
pub fn small_grid(primes: &[u64], limit: u128) -> Vec<CodeParams> {
    let mut out = Vec::new();
    for &p in primes {
        for r in 1..=p as usize {
            for s in 1..=p as usize {
                if r * s > 8 {
                    continue;
                }
                for t in 1..=r * s {
                    if (p as u128).pow(t as u32) > limit {
                        break;
                    }
                    let alphas: Vec<u64> = (0..r as u64).collect();
                    out.push(CodeParams::from_values(p, s, t, &alphas).unwrap());
                }
            }
        }
    }
    out
}
