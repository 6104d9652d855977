//! `mzv compute`: single values with provenance, through the optional cache.

use std::path::PathBuf;

use serde_json::json;

use mzv_core::fmzv_engine::{harmonic_mod_p, ValueCache};
use mzv_core::smzv_numeric::{smzsv_approx, smzv_star_approx, truncated_mzv};
use mzv_core::Index;

use crate::{usage, ComputeArgs, UsageError};

pub fn run(args: &ComputeArgs, cache_dir: Option<&PathBuf>, json: bool) -> Result<(), UsageError> {
    let index: Index = args
        .index
        .parse()
        .map_err(|e| usage(format!("bad --index: {e}")))?;

    match args.value.as_str() {
        "fmzv" | "fmzsv" => {
            let star = args.value == "fmzsv";
            let p = args.prime.ok_or_else(|| usage("this value needs --prime"))?;
            if !is_prime(p) {
                return Err(usage(format!("{p} is not prime")));
            }
            let residue = match cache_dir {
                Some(dir) => ValueCache::open(dir)
                    .and_then(|mut cache| cache.residue(&index, p, star))
                    .map_err(|e| usage(e.to_string()))?,
                None => harmonic_mod_p(&index, p, star).residue(),
            };
            if json {
                print_json(json!({
                    "value": args.value, "index": index.to_string(), "p": p,
                    "star": star, "residue": residue,
                }));
            } else {
                println!("{}({}) mod {} = {}", args.value, index, p, residue);
            }
        }
        "mzv-trunc" => {
            let m = args.m.unwrap_or(100_000);
            let v = truncated_mzv(&index, m, args.star);
            if json {
                print_json(json!({
                    "value": "mzv-trunc", "index": index.to_string(), "M": m,
                    "star": args.star, "result": v.value(),
                }));
            } else {
                let star = if args.star { "*" } else { "" };
                println!("zeta{}_M({}) at M = {} = {:.15}", star, index, m, v.value());
            }
        }
        "smzv" => {
            let m = args.m.unwrap_or(100_000);
            let a = if args.star {
                smzsv_approx(&index, m)
            } else {
                smzv_star_approx(&index, m)
            }
            .map_err(|e| usage(e.to_string()))?;
            if json {
                print_json(json!({
                    "value": "smzv", "index": index.to_string(), "M": m,
                    "star": args.star, "result": a.value(), "cauchy_gap": a.cauchy_gap,
                }));
            } else {
                let star = if args.star { "-star" } else { "" };
                println!(
                    "zeta_S{}({}) at M = {} = {:.8} (cauchy gap {:.2e})",
                    star,
                    index,
                    m,
                    a.value(),
                    a.cauchy_gap
                );
            }
        }
        other => {
            return Err(usage(format!(
                "unknown value {other:?} (expected fmzv|fmzsv|mzv-trunc|smzv)"
            )))
        }
    }
    Ok(())
}

fn print_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
