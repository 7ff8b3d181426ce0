use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{Global, TableId};
use crate::cache::{Cache, CachedOp};
use crate::golden::{self, GoldenRow};
use crate::render::Output;
use crate::verify::exceptional_survey;
use crate::{Failure, Outcome};

struct RowSpec {
    golden: GoldenRow,
    op: fn(u64) -> CachedOp,
}

fn rows_for(which: TableId) -> Vec<RowSpec> {
    let o = RowSpec { golden: golden::O_SEQUENCES, op: |k| CachedOp::OSequenceCount { k } };
    let n3 = vec![
        RowSpec { golden: golden::N3_MONOMIAL, op: |k| CachedOp::MonomialCount { n: 3, k } },
        RowSpec { golden: golden::N3_BOREL, op: |k| CachedOp::BorelCount { n: 3, k } },
        RowSpec { golden: golden::N3_THRESHOLD, op: |k| CachedOp::ThresholdCount { n: 3, k } },
    ];
    let nk = vec![
        RowSpec { golden: golden::NK_BOREL, op: |k| CachedOp::BorelCount { n: k as usize, k } },
        RowSpec { golden: golden::NK_THRESHOLD, op: |k| CachedOp::ThresholdCount { n: k as usize, k } },
    ];
    match which {
        TableId::OSequences => vec![o],
        TableId::N3Counts => n3,
        TableId::NkCounts => nk,
        TableId::ExceptionalIdeals => vec![],
        TableId::All => std::iter::once(o).chain(n3).chain(nk).collect(),
    }
}

struct RowResult {
    id: &'static str,
    label: &'static str,
    citation: &'static str,
    computed: Vec<u64>,
    golden: Vec<u64>,
}

impl RowResult {
    fn diffs(&self) -> Vec<(u64, u64, u64)> {
        self.golden
            .iter()
            .zip(&self.computed)
            .enumerate()
            .filter(|(_, (g, c))| g != c)
            .map(|(i, (g, c))| (i as u64 + 1, *c, *g))
            .collect()
    }
}

pub fn run(g: &Global, which: TableId, kmax: u64) -> Result<Outcome, Failure> {
    if kmax == 0 {
        return Err(Failure::Usage("--kmax must be positive".into()));
    }
    let cache = Cache::new(g.cache_dir.clone(), g.cap.unwrap_or(punctual_core::ideal::DEFAULT_NODE_CAP));
    let specs = rows_for(which);
    let cells: Vec<(usize, u64)> = (0..specs.len()).flat_map(|r| (1..=kmax).map(move |k| (r, k))).collect();
    let values: Vec<u64> =
        cells.par_iter().map(|&(r, k)| cache.get(&(specs[r].op)(k))).collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<RowResult> = specs
        .iter()
        .enumerate()
        .map(|(r, s)| RowResult {
            id: s.golden.id,
            label: s.golden.label,
            citation: s.golden.citation,
            computed: values[r * kmax as usize..(r + 1) * kmax as usize].to_vec(),
            golden: s.golden.values.iter().take(kmax as usize).copied().collect(),
        })
        .collect();
    cache.spot_check(g.seed.unwrap_or(0))?;

    let mut ok = rows.iter().all(|r| r.diffs().is_empty());
    let mut json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "label": r.label,
                "citation": r.citation,
                "computed": r.computed,
                "reference": r.golden,
                "diffs": r.diffs().iter().map(|(k, c, g)| json!({"k": k, "computed": c, "reference": g})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut csv_rows: Vec<Vec<String>> = Vec::new();
    for r in &rows {
        for (i, c) in r.computed.iter().enumerate() {
            let g = r.golden.get(i).map_or(String::new(), u64::to_string);
            let status = match r.golden.get(i) {
                None => "unchecked",
                Some(v) if v == c => "ok",
                Some(_) => "DIFF",
            };
            csv_rows.push(vec![r.id.into(), (i + 1).to_string(), c.to_string(), g, status.into()]);
        }
    }
    let mut ascii = ascii_counts(&rows, kmax);

    if matches!(which, TableId::ExceptionalIdeals | TableId::All) {
        let (json, table, exc_ok) = exceptional_table(kmax.min(11))?;
        ok &= exc_ok;
        json_rows.push(json);
        for r in &table {
            csv_rows.push(vec!["exceptional_ideals".into(), r[1].clone(), r[3].clone(), r[4].clone(), r[5].clone()]);
        }
        if !ascii.is_empty() {
            ascii.push('\n');
        }
        ascii.push_str("exceptional Borel-fixed ideals, n=3 (D >= 0)\n");
        ascii.push_str(&crate::render::aligned(
            &["ideal", "k", "H", "D", "listed D", "status"].map(String::from),
            &table,
        ));
    }

    let json = json!({ "tables": json_rows, "match": ok });
    let output = Output::new(json, &["table", "k", "computed", "reference", "status"], csv_rows).with_ascii(ascii);
    Ok(Outcome { output, ok })
}

fn ascii_counts(rows: &[RowResult], kmax: u64) -> String {
    if rows.is_empty() {
        return String::new();
    }
    let mut headers = vec!["k =".to_string()];
    headers.extend((1..=kmax).map(|k| k.to_string()));
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| std::iter::once(r.label.to_string()).chain(r.computed.iter().map(u64::to_string)).collect())
        .collect();
    let mut out = crate::render::aligned(&headers, &body);
    let diffs: Vec<String> = rows
        .iter()
        .flat_map(|r| r.diffs().into_iter().map(move |(k, c, g)| format!("  {} k={k}: computed {c}, reference {g}", r.id)))
        .collect();
    if diffs.is_empty() {
        out.push_str("diff: none\n");
    } else {
        out.push_str("diff:\n");
        for d in diffs {
            out.push_str(&d);
            out.push('\n');
        }
    }
    out
}

/// Rows: ideal, k, H, D, listed D, status.
fn exceptional_table(kmax: u64) -> Result<(Value, Vec<Vec<String>>, bool), Failure> {
    let survey = exceptional_survey(kmax)?;
    let check = crate::verify::compare_exceptional(&survey, kmax)?;
    let rows: Vec<Vec<String>> = check
        .rows
        .iter()
        .map(|r| {
            vec![
                r.ideal.clone(),
                r.k.to_string(),
                r.hilbert.clone(),
                r.d.map_or("-".into(), |d| d.to_string()),
                r.listed_d.map_or("-".into(), |d| d.to_string()),
                r.status.to_string(),
            ]
        })
        .collect();
    let json = json!({
        "id": "exceptional_ideals",
        "citation": golden::EXCEPTIONAL_CITATION,
        "rows": check.rows,
        "match": check.ok,
    });
    Ok((json, rows, check.ok))
}
