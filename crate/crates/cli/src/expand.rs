//! `mzv expand`: print an operator applied to an index.

use anyhow::Result;
use serde::Serialize;
use serde_json::json;

use mzv_core::index_algebra::{
    build_f, build_g, build_g1, build_g2, build_h, hoffman_dual, phi, star_expand,
};
use mzv_core::{Index, IndexCombination};

use crate::{usage, ExpandArgs, UsageError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandKind {
    Phi,
    Dual,
    Star,
    F,
    G1,
    G2,
    G,
    H,
}

impl ExpandKind {
    pub fn parse(s: &str) -> Result<Self, UsageError> {
        match s.to_ascii_lowercase().as_str() {
            "phi" => Ok(ExpandKind::Phi),
            "dual" => Ok(ExpandKind::Dual),
            "star" => Ok(ExpandKind::Star),
            "f" => Ok(ExpandKind::F),
            "g1" => Ok(ExpandKind::G1),
            "g2" => Ok(ExpandKind::G2),
            "g" => Ok(ExpandKind::G),
            "h" => Ok(ExpandKind::H),
            other => Err(usage(format!(
                "unknown expand kind {other:?} (expected phi|dual|star|F|G1|G2|G|H)"
            ))),
        }
    }
}

#[derive(Debug, Serialize)]
struct ExpandOutput {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    result: String,
    terms: Vec<serde_json::Value>,
}

pub fn run(args: &ExpandArgs, json: bool) -> Result<(), UsageError> {
    let kind = ExpandKind::parse(&args.kind)?;

    let need_index = || -> Result<Index, UsageError> {
        let s = args
            .index
            .as_deref()
            .ok_or_else(|| usage("this kind needs --index"))?;
        s.parse()
            .map_err(|e| usage(format!("bad --index: {e}")))
    };
    let need_l = || args.l.ok_or_else(|| usage("this kind needs --l"));
    let need_kri = || -> Result<(u32, u32, u32), UsageError> {
        match (args.k, args.r, args.i) {
            (Some(k), Some(r), Some(i)) => Ok((k, r, i)),
            _ => Err(usage("this kind needs --k, --r and --i")),
        }
    };
    let comb = |c: mzv_core::Result<IndexCombination>| -> Result<IndexCombination, UsageError> {
        c.map_err(|e| usage(e.to_string()))
    };

    let (result_text, terms): (String, Vec<serde_json::Value>) = match kind {
        ExpandKind::Dual => {
            let d = hoffman_dual(&need_index()?).map_err(|e| usage(e.to_string()))?;
            (d.to_string(), vec![json!({"coeff": "1", "index": d.to_string()})])
        }
        ExpandKind::Phi => combination_output(comb(phi(&need_index()?))?),
        ExpandKind::Star => combination_output(comb(star_expand(&need_index()?))?),
        ExpandKind::G1 => combination_output(comb(build_g1(&need_index()?, need_l()?))?),
        ExpandKind::G2 => combination_output(comb(build_g2(&need_index()?, need_l()?))?),
        ExpandKind::G => combination_output(comb(build_g(&need_index()?, need_l()?))?),
        ExpandKind::F => {
            let (k, r, i) = need_kri()?;
            combination_output(comb(build_f(k, r, i))?)
        }
        ExpandKind::H => {
            let (k, r, i) = need_kri()?;
            combination_output(comb(build_h(k, r, i))?)
        }
    };

    if json {
        let out = ExpandOutput {
            kind: args.kind.to_ascii_lowercase(),
            index: args.index.clone(),
            l: args.l,
            k: args.k,
            r: args.r,
            i: args.i,
            result: result_text,
            terms,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
    } else {
        println!("{result_text}");
    }
    Ok(())
}

fn combination_output(c: IndexCombination) -> (String, Vec<serde_json::Value>) {
    let terms = c
        .iter()
        .map(|(idx, coeff)| json!({"coeff": coeff.to_string(), "index": idx.to_string()}))
        .collect();
    (c.to_string(), terms)
}
