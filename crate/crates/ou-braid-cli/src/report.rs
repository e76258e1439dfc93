//! Stable text and JSON renderings of invariant reports. Big integers are
//! serialized as decimal strings so 64-bit JSON consumers cannot truncate
//! them; OU entries are plain crossing counts and stay numeric.

use num_traits::ToPrimitive;
use serde::Serialize;

use ou_braid::{InvariantReport, WdResult};

#[derive(Serialize)]
struct JsonReport<'a> {
    n: usize,
    word: &'a str,
    rho: &'a [usize],
    ou_matrix: Vec<Vec<u64>>,
    det: String,
    rank: usize,
    charpoly: Vec<String>,
    over_set: &'a [Vec<u64>],
    under_set: &'a [Vec<u64>],
    wd: Option<JsonWd>,
}

#[derive(Serialize)]
struct JsonWd {
    value: u64,
    order: Vec<usize>,
    exact: bool,
}

fn ou_rows(report: &InvariantReport) -> Vec<Vec<u64>> {
    let n = report.ou.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| report.ou.entry(i, j).to_u64().expect("OU entries are counts"))
                .collect()
        })
        .collect()
}

fn json_wd(wd: &WdResult) -> JsonWd {
    JsonWd {
        value: wd.value,
        order: wd.order.image().to_vec(),
        exact: wd.exact,
    }
}

pub fn to_json(report: &InvariantReport) -> String {
    let json = JsonReport {
        n: report.n,
        word: &report.word,
        rho: report.rho.image(),
        ou_matrix: ou_rows(report),
        det: report.det.to_string(),
        rank: report.rank,
        charpoly: report
            .charpoly
            .coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        over_set: report.over.rows(),
        under_set: report.under.rows(),
        wd: report.wd.as_ref().map(json_wd),
    };
    serde_json::to_string_pretty(&json).expect("report serializes")
}

pub fn to_text(report: &InvariantReport) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "word: {}", report.word);
    let _ = writeln!(out, "rho: {}", report.rho);
    let _ = writeln!(out, "ou matrix:");
    let _ = writeln!(out, "{}", report.ou);
    let _ = writeln!(out, "det: {}", report.det);
    let _ = writeln!(out, "rank: {}", report.rank);
    let _ = writeln!(out, "charpoly: {}", report.charpoly);
    let _ = writeln!(out, "over set: {}", render_multiset(report.over.rows()));
    let _ = writeln!(out, "under set: {}", render_multiset(report.under.rows()));
    if let Some(wd) = &report.wd {
        let _ = writeln!(out, "wd: {}", wd.value);
        let _ = writeln!(out, "wd order: {}", wd.order);
        let _ = writeln!(out, "wd exact: {}", wd.exact);
    }
    out
}

fn render_multiset(rows: &[Vec<u64>]) -> String {
    rows.iter()
        .map(|row| {
            let inner = row
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}
