//! `mzv bench`: throughput of the mod-p evaluator over a standard grid.

use std::time::Instant;

use serde_json::json;

use mzv_core::fmzv_engine::{harmonic_mod_p, primes_in};
use mzv_core::index_algebra::indices_up_to_weight;
use mzv_core::parallel::{map_collect, map_collect_seq};
use mzv_core::Index;

use crate::{usage, BenchArgs, UsageError};

pub fn run(args: &BenchArgs, json: bool) -> Result<(), UsageError> {
    let max_weight = args.max_weight.unwrap_or(6);
    let pmax = args.pmax.unwrap_or(200);
    let primes = primes_in(2, pmax).map_err(|e| usage(e.to_string()))?;
    let indices = indices_up_to_weight(max_weight);
    let pairs: Vec<(Index, u64)> = indices
        .iter()
        .flat_map(|k| primes.iter().map(move |&p| (k.clone(), p)))
        .collect();
    let total = pairs.len();

    let t0 = Instant::now();
    let seq = map_collect_seq(pairs.clone(), |(k, p)| harmonic_mod_p(&k, p, false).residue());
    let seq_secs = t0.elapsed().as_secs_f64();

    let t1 = Instant::now();
    let par = map_collect(pairs, |(k, p)| harmonic_mod_p(&k, p, false).residue());
    let par_secs = t1.elapsed().as_secs_f64();
    assert_eq!(seq, par, "parallel sweep must reproduce sequential results");

    let seq_rate = total as f64 / seq_secs;
    let par_rate = total as f64 / par_secs;
    let workers = current_workers();

    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "grid": {"max_weight": max_weight, "pmax": pmax, "pairs": total},
                "sequential": {"seconds": seq_secs, "pairs_per_sec": seq_rate},
                "parallel": {"seconds": par_secs, "pairs_per_sec": par_rate, "workers": workers},
            }))
            .expect("serializes")
        );
    } else {
        println!("grid: {total} (index, prime) pairs (weight <= {max_weight}, p <= {pmax})");
        println!("sequential: {seq_secs:.3} s, {seq_rate:.0} pairs/s");
        println!("parallel ({workers} workers): {par_secs:.3} s, {par_rate:.0} pairs/s");
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn current_workers() -> usize {
    rayon::current_num_threads()
}

#[cfg(not(feature = "parallel"))]
fn current_workers() -> usize {
    1
}
