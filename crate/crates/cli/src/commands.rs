use hrs_core::channel::CSV_HEADER;
use hrs_core::{
    brute_force_min_distance, decode, decoding_radius, hermite_interpolate, run_trials,
    sample_error, ChannelSpec, CodeParams, DecodeOutcome, DEFAULT_BUDGET,
};
use serde_json::{json, Value};

use crate::job::{matrix_json, poly_json, CliError, CliResult, Job};

const DEFAULT_TRIALS: usize = 1000;

fn required_matrix(job: &Job, params: &CodeParams) -> CliResult<hrs_core::NrtMatrix> {
    let y = job
        .matrix("matrix", params.modulus())?
        .ok_or_else(|| CliError::Invalid("missing `matrix`".into()))?;
    if (y.s(), y.r()) != (params.s(), params.r()) {
        return Err(CliError::Invalid(format!(
            "`matrix` is {}x{}, the code needs {}x{}",
            y.s(),
            y.r(),
            params.s(),
            params.r()
        )));
    }
    Ok(y)
}

pub fn encode(job: &Job) -> CliResult<String> {
    let params = job.code_params(None)?;
    let f = job.polynomial(params.modulus())?;
    Ok(matrix_json(&params.encode(&f)?).to_string())
}

pub fn decode_cmd(job: &Job) -> CliResult<String> {
    let params = job.code_params(None)?;
    let y = required_matrix(job, &params)?;
    let e = job.opt_usize("e")?;
    let out = match decode(&params, &y, e)? {
        DecodeOutcome::Success(d) => json!({
            "status": "ok",
            "poly": poly_json(&d.message),
            "error_weight": d.error_weight,
        }),
        DecodeOutcome::Failure(reason) => json!({"status": "fail", "reason": reason.as_str()}),
    };
    Ok(out.to_string())
}

/// `s` and `r` come from the matrix; the code parameters are not needed.
pub fn corrupt(job: &Job, seed: u64) -> CliResult<String> {
    let m = job.modulus()?;
    let y = job.matrix("matrix", m)?.ok_or_else(|| CliError::Invalid("missing `matrix`".into()))?;
    let weight = job.usize("weight")?;
    let spec = ChannelSpec::new(y.s(), y.r(), m, weight, seed)?;
    let error = sample_error(&spec, &mut spec.rng(0));
    let received = y.try_add(&error)?;
    Ok(json!({"error": matrix_json(&error), "received": matrix_json(&received)}).to_string())
}

/// Recovers the unique polynomial of degree below `rs` with the given
/// derivative data; `t` is not used.
pub fn interpolate(job: &Job) -> CliResult<String> {
    let s = job.usize("s")?;
    let r = match job.opt_usize("r")? {
        Some(r) => r,
        None => job.elements("alphas", job.modulus()?)?.map_or(0, |a| a.len()),
    };
    let params = job.code_params(Some((r * s).max(1)))?;
    let y = params.normalize_received(&required_matrix(job, &params)?)?;
    let f = hermite_interpolate(params.alphas(), &y)?;
    Ok(json!({"poly": poly_json(&f)}).to_string())
}

pub fn simulate(job: &Job, seed: u64) -> CliResult<String> {
    let params = job.code_params(None)?;
    let trials = job.opt_usize("trials")?.unwrap_or(DEFAULT_TRIALS);
    let weights: Vec<usize> = match job.opt_usize("weight")? {
        Some(w) => vec![w],
        None => (0..=decoding_radius(&params)).collect(),
    };
    let mut out = String::from(CSV_HEADER);
    for w in weights {
        let report = run_trials(&params, w, trials, seed)?;
        if report.counts.miscorrected > 0 {
            eprintln!(
                "note: weight {w}: {} trials decoded to a different codeword",
                report.counts.miscorrected
            );
        }
        out.push('\n');
        out.push_str(&report.csv_row());
    }
    Ok(out)
}

pub fn mindist(job: &Job) -> CliResult<String> {
    let params = job.code_params(None)?;
    let budget = job.opt_u64("budget")?.map_or(DEFAULT_BUDGET, u128::from);
    let d = brute_force_min_distance(&params, budget)?;
    let bound = params.singleton_bound();
    let out: Value = json!({"min_distance": d, "singleton_bound": bound, "mds": d == bound});
    Ok(out.to_string())
}
