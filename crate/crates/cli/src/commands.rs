use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use punctual_core::apolarity::{apolar_ideal, apolar_local_invariants, random_inverse_system, InverseSystem};
use punctual_core::exact::parse_polynomial_list;
use punctual_core::hilbert::{
    enumerate_o_sequences, expected_dimension, is_o_sequence_values, macaulay_growth_bound, HFConstraints,
    HilbertFunction,
};
use punctual_core::ideal::{
    enumerate_monomial_ideals_capped, enumerate_strongly_stable, lex_segment_ideal, MonomialIdeal, DEFAULT_NODE_CAP,
};
use punctual_core::loci;
use punctual_core::regular::{
    check_k_regular, monomial_regular_map, project_until_regular, tau_power, RegularityVerdict,
};
use punctual_core::tangent::{
    nonnegative_tangent_dim, GradedIdeal, TangentReport, TangentSource, DEFAULT_DEGREE_CAP,
};

use crate::args::{
    ApolarArgs, Backend, BoundsCommand, CacheAction, EnumerateArgs, Global, IdealKind, OseqArgs, RegularArgs,
    TangentArgs,
};
use crate::render::Output;
use crate::{cache, Failure, Outcome};

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, Failure> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| usage(format!("cannot parse {s:?} in {text:?}"))))
        .collect()
}

fn require_seed(g: &Global, what: &str) -> Result<u64, Failure> {
    g.seed.ok_or_else(|| usage(format!("{what} is randomized and needs --seed")))
}

pub fn enumerate(g: &Global, a: &EnumerateArgs) -> Result<Outcome, Failure> {
    let ideals: Vec<MonomialIdeal> = match a.kind {
        IdealKind::Monomial => {
            let k = a.k.ok_or_else(|| usage("--k is required"))?;
            enumerate_monomial_ideals_capped(a.n, k, g.cap.unwrap_or(DEFAULT_NODE_CAP))?
        }
        IdealKind::Borel => enumerate_strongly_stable(a.n, a.k.ok_or_else(|| usage("--k is required"))?),
        IdealKind::Lex => {
            let h = HilbertFunction::new(parse_list(a.hilbert.as_deref().ok_or_else(|| usage("--hilbert is required"))?)?)?;
            vec![lex_segment_ideal(&h, a.n)?]
        }
    };
    let tangents: Vec<Option<(u64, i64)>> = ideals
        .par_iter()
        .map(|i| {
            a.tangent.then(|| {
                let k = i.hilbert_function().unwrap().sum();
                let t = nonnegative_tangent_dim(i);
                (t, t as i64 - expected_dimension(a.n as u64, k) as i64)
            })
        })
        .collect();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (idx, (i, t)) in ideals.iter().zip(&tangents).enumerate() {
        let hf = i.hilbert_function()?.to_string();
        let mut row = vec![idx.to_string(), i.generator_list(), hf.clone()];
        let mut item = json!({ "generators": i.generators().iter().map(|m| m.to_string()).collect::<Vec<_>>(), "hilbert": hf });
        if let Some((tn, d)) = t {
            row.push(tn.to_string());
            row.push(d.to_string());
            item["T_nonneg"] = json!(tn);
            item["D"] = json!(d);
        }
        rows.push(row);
        items.push(item);
    }
    let headers: &[&str] = if a.tangent { &["index", "ideal", "H", "T_nonneg", "D"] } else { &["index", "ideal", "H"] };
    let json = json!({ "n": a.n, "count": ideals.len(), "ideals": items });
    Ok(Outcome::ok(Output::new(json, headers, rows)))
}

enum Source {
    Monomial(MonomialIdeal),
    Graded(GradedIdeal),
}

fn parse_window(text: &str) -> Result<(i64, i64), Failure> {
    let (lo, hi) = text.split_once(':').ok_or_else(|| usage("window must be lo:hi"))?;
    let lo = lo.trim().parse().map_err(|_| usage(format!("bad window start {lo:?}")))?;
    let hi = hi.trim().parse().map_err(|_| usage(format!("bad window end {hi:?}")))?;
    if lo > hi {
        return Err(usage("window start exceeds end"));
    }
    Ok((lo, hi))
}

pub fn tangent(a: &TangentArgs) -> Result<Outcome, Failure> {
    let source = match (&a.ideal, &a.dual) {
        (_, Some(dual)) => Source::Graded(apolar_ideal(&InverseSystem::parse(dual, a.n)?)?),
        (Some(text), None) => {
            let polys = parse_polynomial_list(text, a.n)?;
            let n = a.n.unwrap_or_else(|| polys.first().map_or(1, |p| p.n()));
            if polys.iter().all(|p| p.len() == 1) {
                Source::Monomial(MonomialIdeal::parse(text, Some(n))?)
            } else {
                Source::Graded(GradedIdeal::from_generators(&polys, n, DEFAULT_DEGREE_CAP)?)
            }
        }
        (None, None) => return Err(usage("give an ideal or --dual")),
    };
    let graded_from_mono;
    let src: &dyn TangentSource = match (&source, a.backend) {
        (Source::Monomial(m), Backend::Auto | Backend::Syzygy) => m,
        (Source::Monomial(m), Backend::Kernel) => {
            graded_from_mono = GradedIdeal::from_monomial(m)?;
            &graded_from_mono
        }
        (Source::Graded(g), Backend::Syzygy) => {
            return Err(usage(format!(
                "the syzygy backend needs a monomial ideal; {} is not",
                g.generator_strings('x').join(", ")
            )))
        }
        (Source::Graded(g), _) => g,
    };
    let s = src.socle_degree() as i64;
    let (lo, hi) = match &a.window {
        Some(w) => parse_window(w)?,
        None => (-(s + 1), s),
    };
    let k = src.colength();
    let n = src.summary().n as u64;
    let expected = a.expected.unwrap_or_else(|| expected_dimension(n, k));
    let series: BTreeMap<i64, u64> = (lo..=hi).zip(src.hom_dims(lo, hi)).collect();
    let report = TangentReport::from_series(src.summary(), k, series, expected);
    let rows = report.series.iter().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect();
    let mut json = serde_json::to_value(&report).unwrap();
    json["positive_series"] = json!(report.positive_series_string());
    let mut ascii = format!(
        "ideal: ({})\nk = {}  T_nonneg = {}  T_pos = {}  T_zero = {}  expected = {}  D = {}\npositive series: {}\n",
        report.ideal.gens.join(", "),
        report.k,
        report.t_nonneg,
        report.t_pos,
        report.t_zero,
        report.expected,
        report.d,
        report.positive_series_string()
    );
    let headers = ["d", "dim Hom_d"].map(String::from);
    let body: Vec<Vec<String>> = report.series.iter().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect();
    ascii.push_str(&crate::render::aligned(&headers, &body));
    Ok(Outcome::ok(Output::new(json, &["d", "dim"], rows).with_ascii(ascii)))
}

pub fn apolar(g: &Global, a: &ApolarArgs) -> Result<Outcome, Failure> {
    let mut extra = json!({});
    let fs = match (&a.system, &a.random) {
        (Some(text), None) => InverseSystem::parse(text, a.n)?,
        (None, Some(shape)) => {
            let seed = require_seed(g, "apolar --random")?;
            let n = a.n.ok_or_else(|| usage("--random needs --n"))?;
            let shape: Vec<u32> = parse_list(shape)?;
            extra["seed"] = json!(seed);
            random_inverse_system(&shape, n, seed)
        }
        _ => return Err(usage("give an inverse system or --random")),
    };
    let report = apolar_local_invariants(&fs);
    let mut json = serde_json::to_value(&report).unwrap();
    json["system"] = json!(fs.generator_strings());
    if let Some(seed) = extra.get("seed") {
        json["seed"] = seed.clone();
    }
    let mut rows = vec![
        vec!["k".into(), report.k.to_string()],
        vec!["hilbert".into(), report.hilbert.to_string()],
        vec!["tau".into(), report.tau.to_string()],
        vec!["graded".into(), report.graded.to_string()],
    ];
    if a.ideal {
        if !fs.is_homogeneous() {
            return Err(usage("--ideal needs a homogeneous inverse system"));
        }
        let gens = apolar_ideal(&fs)?.generator_strings('x');
        rows.push(vec!["ideal".into(), gens.join(", ")]);
        json["ideal"] = json!(gens);
    }
    Ok(Outcome::ok(Output::new(json, &["field", "value"], rows)))
}

pub fn oseq(a: &OseqArgs) -> Result<Outcome, Failure> {
    if let Some(text) = &a.check {
        let h: Vec<u64> = parse_list(text)?;
        let ok = is_o_sequence_values(&h);
        let bounds: Vec<Value> = (1..h.len().saturating_sub(1))
            .map(|i| json!({"degree": i + 1, "value": h[i + 1], "bound": macaulay_growth_bound(h[i], i as u32)}))
            .collect();
        let rows = bounds
            .iter()
            .map(|b| vec![b["degree"].to_string(), b["value"].to_string(), b["bound"].to_string()])
            .collect();
        let json = json!({ "sequence": h, "o_sequence": ok, "growth": bounds });
        return Ok(Outcome::ok(Output::new(json, &["degree", "value", "bound"], rows)));
    }
    let k = a.k.ok_or_else(|| usage("give --k or --check"))?;
    let mut c = HFConstraints::none();
    if let Some(h1) = a.h1 {
        c = c.with_h1(h1);
    }
    let list = enumerate_o_sequences(k, &c);
    let rows = list.iter().map(|h| vec![h.to_string()]).collect();
    let json = json!({ "k": k, "count": list.len(), "sequences": list });
    Ok(Outcome::ok(Output::new(json, &["hilbert"], rows)))
}

fn shown(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}

fn scalar(name: &str, value: Value) -> Output {
    let row = vec![shown(&value)];
    Output::new(json!({ name: value }), &[name], vec![row])
}

fn object(value: Value) -> Output {
    let rows = value
        .as_object()
        .map(|m| m.iter().map(|(k, v)| vec![k.clone(), shown(v)]).collect())
        .unwrap_or_default();
    Output::new(value, &["field", "value"], rows)
}

pub fn bounds(which: &BoundsCommand) -> Result<Outcome, Failure> {
    let out = match which {
        BoundsCommand::Gorenstein { n, b, s } => scalar("dimension", json!(loci::gorenstein_locus_dim(*n, *b, *s)?)),
        BoundsCommand::H3eq1 { hilbert } => {
            let h = HilbertFunction::new(parse_list(hilbert)?)?;
            let n = h.get(1) as i64;
            let bound = loci::h3eq1_bound(&h, n)?;
            let k = h.sum() as i64;
            object(serde_json::to_value(loci::MarginReport::new(h.to_string(), bound, (k - 1) * (n - 1))).unwrap())
        }
        BoundsCommand::H3eq1Check { sum_cap } => {
            let reports = loci::check_h3eq1_negligible(*sum_cap);
            let ok = reports.iter().all(|r| !r.is_violating());
            let rows = reports
                .iter()
                .map(|r| vec![r.subject.clone(), r.locus.to_string(), r.expected.to_string(), r.margin.to_string()])
                .collect();
            let json = json!({ "sum_cap": sum_cap, "all_negligible": ok, "reports": reports });
            Output::new(json, &["H", "bound", "expected", "margin"], rows)
        }
        BoundsCommand::H2eq2 { n, s, t } => {
            let series = loci::h2eq2_tangent_series(*n, *s, *t)?;
            let k = loci::h2eq2_hilbert(*n, *s, *t)?.sum();
            let rows = series.iter().enumerate().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect();
            let json = json!({ "k": k, "series": series, "total": series.iter().sum::<u64>() });
            Output::new(json, &["d", "dim"], rows)
        }
        BoundsCommand::Fiber { n, a, b } => scalar("dimension", json!(loci::fiber_dim(*n, *a, *b)?)),
        BoundsCommand::NBound { tau, k, n } => scalar("N", json!(loci::N_bound(*tau, *k, *n)?)),
        BoundsCommand::Areole { tau, dims } => {
            let dims: Vec<u64> = parse_list(dims)?;
            scalar("bound", json!(loci::areole_bound(*tau, dims.len(), &dims)?))
        }
        BoundsCommand::Margin { kind, n } => {
            let kind: loci::CounterexampleKind = kind.parse()?;
            object(serde_json::to_value(loci::counterexample_margin(kind, *n)?).unwrap())
        }
        BoundsCommand::Estimate { t0, tpos, base, fiber } => {
            object(serde_json::to_value(loci::dimension_estimates(*t0, *tpos, *base, *fiber)).unwrap())
        }
    };
    Ok(Outcome::ok(out))
}

pub fn regular(g: &Global, a: &RegularArgs) -> Result<Outcome, Failure> {
    let seed = require_seed(g, "regular")?;
    let f = monomial_regular_map(a.n, a.map_k.unwrap_or(a.k as u32))?;
    let block = tau_power(f, a.tau)?;
    let (report, extra) = match a.project {
        Some(m) => {
            let (r, s, draws) = project_until_regular(&block, m, a.k, a.trials, seed, a.max_draws)?;
            (r, json!({ "projection_dim": m, "projection_seed": s, "draws": draws }))
        }
        None => (check_k_regular(&block, a.k, a.trials, seed), json!({})),
    };
    let ok = report.verdict == RegularityVerdict::Pass;
    let mut json = serde_json::to_value(&report).unwrap();
    if let (Some(obj), Some(extra)) = (json.as_object_mut(), extra.as_object()) {
        obj.extend(extra.clone());
    }
    Ok(Outcome { output: object(json), ok })
}

pub fn cache(g: &Global, action: CacheAction) -> Result<Outcome, Failure> {
    let dir = g.cache_dir.as_deref().ok_or_else(|| usage("cache needs --cache-dir"))?;
    match action {
        CacheAction::Status => Ok(Outcome::ok(cache::status(dir)?)),
        CacheAction::Clear => Ok(Outcome::ok(cache::clear(dir)?)),
        CacheAction::Rebuild => {
            let (out, ok) = cache::rebuild(dir, g.cap.unwrap_or(DEFAULT_NODE_CAP))?;
            Ok(Outcome { output: out, ok })
        }
    }
}
