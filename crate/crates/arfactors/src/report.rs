//! CSV views of the census and formula profiles. Output is byte-stable:
//! fixed headers, one row per length, LF endings, no timestamps.

use crate::arformula::{closed_complexity, ReturnTable};
use crate::error::Result;
use crate::factorlab::FactorCensus;

/// One formula row: `n, p, f_closed, f_open` with `p = (t−1)n + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FormulaRow {
    pub n: u64,
    pub p: u64,
    pub f_closed: u64,
    pub f_open: u64,
}

pub fn formula_rows(rt: &mut ReturnTable, n_max: u64) -> Result<Vec<FormulaRow>> {
    let t = rt.alphabet_size() as u64;
    (1..=n_max)
        .map(|n| {
            let f_closed = closed_complexity(rt, n)?;
            let p = (t - 1) * n + 1;
            Ok(FormulaRow { n, p, f_closed, f_open: p - f_closed })
        })
        .collect()
}

pub fn formula_csv(rows: &[FormulaRow]) -> String {
    let mut out = String::from("n,p,f_closed,f_open\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.p, r.f_closed, r.f_open));
    }
    out
}

pub fn census_csv(census: &FactorCensus) -> String {
    let mut out = String::from("n,p,f_closed,f_open,complete\n");
    for r in &census.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            r.p,
            r.f_closed,
            r.f_open,
            u8::from(r.complete)
        ));
    }
    out
}
