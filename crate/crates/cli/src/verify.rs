//! `mzv verify`: run an identity check or sweep and emit a report.

use anyhow::Result;
use serde_json::{json, Value};

use mzv_core::fmzv_engine::{primes_in, PrimeSweepReport};
use mzv_core::identity_checker::{self, LemmaCheckResult};
use mzv_core::index_algebra::indices_up_to_weight;
use mzv_core::smzv_numeric::verify_smzv_weighted_sum;
use mzv_core::Index;

use crate::envelope::RunReport;
use crate::{usage, UsageError, VerifyArgs};

pub const TARGETS: &[&str] = &[
    "key-lemma",
    "lemma1",
    "lemma2",
    "fmzv-wsf",
    "phi",
    "oyama",
    "antipode",
    "symsum",
    "smzv-wsf",
];

/// Runs the target's checks; returns the assembled report and whether every
/// check passed.
pub fn run(args: &VerifyArgs) -> Result<(RunReport, bool), UsageError> {
    let report = match args.target.as_str() {
        "key-lemma" => lemma_target(args, "key-lemma")?,
        "lemma1" => lemma_target(args, "lemma1")?,
        "lemma2" => lemma_target(args, "lemma2")?,
        "fmzv-wsf" => fmzv_wsf(args)?,
        "phi" => index_sweep(args, "phi")?,
        "oyama" => index_sweep(args, "oyama")?,
        "antipode" => index_sweep(args, "antipode")?,
        "symsum" => index_sweep(args, "symsum")?,
        "smzv-wsf" => smzv_wsf(args)?,
        other => {
            return Err(usage(format!(
                "unknown verify target {other:?} (expected one of {})",
                TARGETS.join("|")
            )))
        }
    };
    let all_pass = report.summary.all_pass;
    Ok((report, all_pass))
}

fn explicit_triple(args: &VerifyArgs) -> Result<Option<(u32, u32, u32)>, UsageError> {
    match (args.k, args.r, args.i) {
        (Some(k), Some(r), Some(i)) => Ok(Some((k, r, i))),
        (Some(_), None, None) | (None, None, None) => Ok(None),
        _ => Err(usage("give all of --k, --r, --i, or none of them")),
    }
}

fn lemma_target(args: &VerifyArgs, target: &str) -> Result<RunReport, UsageError> {
    let check = |k: u32, r: u32, i: u32| -> mzv_core::Result<LemmaCheckResult> {
        match target {
            "key-lemma" => identity_checker::check_key_lemma(k, r, i),
            "lemma1" => identity_checker::check_lemma1(k, r, i),
            _ => identity_checker::check_lemma2(k, r, i),
        }
    };
    let results: Vec<LemmaCheckResult> = match explicit_triple(args)? {
        Some((k, r, i)) => vec![check(k, r, i).map_err(|e| usage(e.to_string()))?],
        None => {
            let max_k = args.max_k.unwrap_or(12);
            match target {
                "key-lemma" => identity_checker::key_lemma_grid(max_k),
                "lemma1" => identity_checker::lemma1_grid(max_k),
                _ => identity_checker::lemma2_grid(max_k),
            }
        }
    };
    let passed: Vec<bool> = results.iter().map(|r| r.pass).collect();
    let config = json!({
        "max_k": args.max_k.unwrap_or(12),
        "k": args.k, "r": args.r, "i": args.i,
    });
    envelope(target, config, &results, &passed)
}

fn primes_for(args: &VerifyArgs) -> Result<Vec<u64>, UsageError> {
    let lo = args.pmin.unwrap_or(2);
    let hi = args.pmax.unwrap_or(200);
    primes_in(lo, hi).map_err(|e| usage(e.to_string()))
}

fn fmzv_wsf(args: &VerifyArgs) -> Result<RunReport, UsageError> {
    let k = args.k.ok_or_else(|| usage("fmzv-wsf needs --k"))?;
    let primes = primes_for(args)?;
    let mut reports: Vec<PrimeSweepReport> = Vec::new();
    if args.all_ri {
        for r in (1..=k).step_by(2) {
            for i in 1..=r {
                for star in [false, true] {
                    reports.push(
                        mzv_core::fmzv_engine::verify_weighted_sum(k, r, i, &primes, star)
                            .map_err(|e| usage(e.to_string()))?,
                    );
                }
            }
        }
    } else {
        let (_, r, i) = explicit_triple(args)?
            .ok_or_else(|| usage("fmzv-wsf needs --r and --i, or --all-ri"))?;
        reports.push(
            mzv_core::fmzv_engine::verify_weighted_sum(k, r, i, &primes, args.star)
                .map_err(|e| usage(e.to_string()))?,
        );
    }
    let passed: Vec<bool> = reports.iter().map(|r| r.summary.all_pass).collect();
    let config = json!({
        "k": k, "r": args.r, "i": args.i, "all_ri": args.all_ri, "star": args.star,
        "pmin": args.pmin.unwrap_or(2), "pmax": args.pmax.unwrap_or(200),
    });
    envelope("fmzv-wsf", config, &reports, &passed)
}

fn index_sweep(args: &VerifyArgs, target: &str) -> Result<RunReport, UsageError> {
    let primes = primes_for(args)?;
    let indices: Vec<Index> = match &args.index {
        Some(s) => vec![s.parse().map_err(|e| usage(format!("bad --index: {e}")))?],
        None => indices_up_to_weight(args.max_weight.unwrap_or(6)),
    };
    let mut reports: Vec<PrimeSweepReport> = Vec::new();
    for idx in &indices {
        match target {
            "phi" => reports.push(
                mzv_core::fmzv_engine::verify_phi_duality(idx, &primes)
                    .map_err(|e| usage(e.to_string()))?,
            ),
            "oyama" => {
                let ls: Vec<u32> = match args.l {
                    Some(l) => vec![l],
                    None => (0..=args.lmax.unwrap_or(3)).collect(),
                };
                for l in ls {
                    reports.push(
                        mzv_core::fmzv_engine::verify_oyama(idx, l, &primes)
                            .map_err(|e| usage(e.to_string()))?,
                    );
                }
            }
            "antipode" => reports.push(
                mzv_core::fmzv_engine::verify_antipode(idx, &primes)
                    .map_err(|e| usage(e.to_string()))?,
            ),
            _ => {
                if idx.depth() > args.max_depth.unwrap_or(4) as usize && args.index.is_none() {
                    continue;
                }
                let stars: &[bool] = if args.index.is_some() {
                    if args.star {
                        &[true]
                    } else {
                        &[false]
                    }
                } else {
                    &[false, true]
                };
                for &star in stars {
                    reports.push(
                        mzv_core::fmzv_engine::verify_symmetric_sum(idx, &primes, star)
                            .map_err(|e| usage(e.to_string()))?,
                    );
                }
            }
        }
    }
    let passed: Vec<bool> = reports.iter().map(|r| r.summary.all_pass).collect();
    let config = json!({
        "index": args.index,
        "max_weight": args.max_weight.unwrap_or(6),
        "max_depth": if target == "symsum" { Some(args.max_depth.unwrap_or(4)) } else { None },
        "l": args.l,
        "lmax": if target == "oyama" { Some(args.lmax.unwrap_or(3)) } else { None },
        "star": args.star,
        "pmin": args.pmin.unwrap_or(2), "pmax": args.pmax.unwrap_or(200),
    });
    envelope(target, config, &reports, &passed)
}

fn smzv_wsf(args: &VerifyArgs) -> Result<RunReport, UsageError> {
    let k = args.k.ok_or_else(|| usage("smzv-wsf needs --k"))?;
    let cutoff = args.m.unwrap_or(100_000);
    let max_den = args.max_den.unwrap_or(64);
    let tol = args.tol.unwrap_or(1e-3);
    let mut reports = Vec::new();
    if args.all_ri {
        for r in (1..=k).step_by(2) {
            for i in 1..=r {
                for star in [false, true] {
                    reports.push(
                        verify_smzv_weighted_sum(k, r, i, cutoff, max_den, tol, star)
                            .map_err(|e| usage(e.to_string()))?,
                    );
                }
            }
        }
    } else {
        let (_, r, i) = explicit_triple(args)?
            .ok_or_else(|| usage("smzv-wsf needs --r and --i, or --all-ri"))?;
        reports.push(
            verify_smzv_weighted_sum(k, r, i, cutoff, max_den, tol, args.star)
                .map_err(|e| usage(e.to_string()))?,
        );
    }
    let passed: Vec<bool> = reports.iter().map(|r| r.pass).collect();
    let config = json!({
        "k": k, "r": args.r, "i": args.i, "all_ri": args.all_ri, "star": args.star,
        "M": cutoff, "max_den": max_den, "tol": tol,
    });
    envelope("smzv-wsf", config, &reports, &passed)
}

fn envelope<R: serde::Serialize>(
    target: &str,
    config: Value,
    reports: &[R],
    passed: &[bool],
) -> Result<RunReport, UsageError> {
    RunReport::new(target, &config, reports, passed)
        .map_err(|e| usage(format!("failed to assemble report: {e}")))
}
