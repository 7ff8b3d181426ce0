use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use punctual_core::apolarity::{apolar_ideal, InverseSystem};
use punctual_core::exact::Monomial;
use punctual_core::hilbert::HilbertFunction;
use punctual_core::ideal::{enumerate_strongly_stable, MonomialIdeal};
use punctual_core::loci::{
    check_h3eq1_negligible, counterexample_margin, h13421_locus_dims, h14321_budget, h2eq2_hilbert,
    h2eq2_inverse_system, h2eq2_tangent_series, quoted_tau_1_intermediate, quoted_tau_geq_3_margin, tau_1_cubic,
    CounterexampleKind, H14321Tangents, N_bound,
};
use punctual_core::exact::Rational;
use punctual_core::tangent::{
    hom_dim_kernel, hom_dim_syzygy, nonnegative_tangent_dim, tangent_report, GradedIdeal, KernelTangent,
};

use crate::args::CheckName;
use crate::golden;
use crate::render::Output;
use crate::{Failure, Outcome};

#[derive(Serialize, Clone, Debug)]
pub struct Item {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Item {
    fn eq(name: impl Into<String>, expected: impl Serialize, computed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).unwrap();
        let computed = serde_json::to_value(computed).unwrap();
        Item { name: name.into(), passed: expected == computed, expected, computed, note: None }
    }

    fn claim(name: impl Into<String>, expected: impl Serialize, computed: impl Serialize, passed: bool) -> Self {
        Item {
            name: name.into(),
            expected: serde_json::to_value(expected).unwrap(),
            computed: serde_json::to_value(computed).unwrap(),
            passed,
            note: None,
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub items: Vec<Item>,
}

impl CheckReport {
    fn new(check: &str, items: Vec<Item>) -> Self {
        CheckReport { check: check.into(), passed: items.iter().all(|i| i.passed), items }
    }
}

const ALL_CHECKS: [CheckName; 7] = [
    CheckName::WorkedExample,
    CheckName::ExceptionalIdeals,
    CheckName::H2eq2Series,
    CheckName::H3eq1Negligible,
    CheckName::Counterexamples,
    CheckName::ClassifiedLoci,
    CheckName::NBound,
];

pub fn run(check: CheckName) -> Result<Outcome, Failure> {
    let names: Vec<CheckName> = if check == CheckName::All { ALL_CHECKS.to_vec() } else { vec![check] };
    let reports = names.iter().map(|&c| run_one(c)).collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r.passed);
    let mut rows = Vec::new();
    for r in &reports {
        for i in &r.items {
            rows.push(vec![
                r.check.clone(),
                i.name.clone(),
                i.expected.to_string(),
                i.computed.to_string(),
                if i.passed { "pass".into() } else { "FAIL".into() },
            ]);
        }
    }
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).unwrap()
    } else {
        json!({ "checks": reports, "passed": ok })
    };
    let mut ascii = crate::render::aligned(&["check", "item", "expected", "computed", "status"].map(String::from), &rows);
    ascii.push_str(if ok { "result: pass\n" } else { "result: FAIL\n" });
    Ok(Outcome { output: Output::new(json, &["check", "item", "expected", "computed", "status"], rows).with_ascii(ascii), ok })
}

fn check_id(c: CheckName) -> &'static str {
    match c {
        CheckName::WorkedExample => "worked-example",
        CheckName::ExceptionalIdeals => "exceptional-ideals",
        CheckName::H2eq2Series => "h2eq2-series",
        CheckName::H3eq1Negligible => "h3eq1-negligible",
        CheckName::Counterexamples => "counterexamples",
        CheckName::ClassifiedLoci => "classified-loci",
        CheckName::NBound => "n-bound",
        CheckName::All => "all",
    }
}

fn run_one(c: CheckName) -> Result<CheckReport, Failure> {
    let items = match c {
        CheckName::WorkedExample => worked_example()?,
        CheckName::ExceptionalIdeals => {
            let survey = exceptional_survey(11)?;
            compare_exceptional(&survey, 11)?
                .rows
                .into_iter()
                .map(|r| {
                    let passed = r.status == "ok" || r.status == "curvilinear";
                    Item::claim(
                        format!("{} (k={})", r.ideal, r.k),
                        json!({"D": r.listed_d, "H": r.listed_hilbert}),
                        json!({"D": r.d, "H": r.hilbert}),
                        passed,
                    )
                    .note(r.status)
                })
                .collect()
        }
        CheckName::H2eq2Series => h2eq2_series()?,
        CheckName::H3eq1Negligible => h3eq1_negligible(),
        CheckName::Counterexamples => counterexamples()?,
        CheckName::ClassifiedLoci => classified_loci()?,
        CheckName::NBound => golden::N_BOUND_VALUES
            .iter()
            .map(|&(tau, k, n, v)| Ok(Item::eq(format!("N({tau},{k},{n})"), v, N_bound(tau, k, n)?)))
            .collect::<Result<Vec<_>, Failure>>()?,
        CheckName::All => unreachable!("expanded by the caller"),
    };
    Ok(CheckReport::new(check_id(c), items))
}

fn worked_example() -> Result<Vec<Item>, Failure> {
    let m = MonomialIdeal::parse(golden::WORKED_IDEAL, Some(3))?;
    let g = GradedIdeal::from_monomial(&m)?;
    let mut items = Vec::new();
    for &(d, v) in golden::WORKED_HOM {
        items.push(Item::eq(format!("syzygy Hom_{d}"), v, hom_dim_syzygy(&m, d)?));
        items.push(Item::eq(format!("kernel Hom_{d}"), v, hom_dim_kernel(&g, d)));
    }
    items.push(Item::eq("syzygy positive series", golden::WORKED_SERIES, tangent_report(&m, 0).positive_series_string()));
    items.push(Item::eq("kernel positive series", golden::WORKED_SERIES, tangent_report(&g, 0).positive_series_string()));
    Ok(items)
}

#[derive(Clone, Debug)]
pub struct SurveyEntry {
    pub ideal: MonomialIdeal,
    pub k: u64,
    pub hilbert: HilbertFunction,
    pub d: i64,
}

/// Borel ideals in three variables of colength at most `kmax` whose
/// nonnegative tangent dimension reaches `2(k-1)`.
pub fn exceptional_survey(kmax: u64) -> Result<Vec<SurveyEntry>, Failure> {
    let per_k: Vec<Vec<SurveyEntry>> = (1..=kmax)
        .into_par_iter()
        .map(|k| {
            enumerate_strongly_stable(3, k)
                .into_iter()
                .filter_map(|ideal| {
                    let d = nonnegative_tangent_dim(&ideal) as i64 - 2 * (k as i64 - 1);
                    (d >= 0).then(|| SurveyEntry { hilbert: ideal.hilbert_function().unwrap().clone(), ideal, k, d })
                })
                .collect()
        })
        .collect();
    Ok(per_k.into_iter().flatten().collect())
}

#[derive(Serialize, Clone, Debug)]
pub struct ExceptionalRow {
    pub ideal: String,
    pub k: u64,
    pub hilbert: String,
    pub d: Option<i64>,
    pub listed_hilbert: Option<String>,
    pub listed_d: Option<i64>,
    pub status: &'static str,
}

pub struct ExceptionalCheck {
    pub rows: Vec<ExceptionalRow>,
    pub ok: bool,
}

fn curvilinear(k: u64) -> MonomialIdeal {
    MonomialIdeal::new(3, vec![Monomial::var(3, 0), Monomial::var(3, 1), Monomial::new(vec![0, 0, k as u32])])
        .expect("curvilinear ideal")
}

/// Matches the survey against the reference list and the curvilinear
/// ideal of each length.
pub fn compare_exceptional(survey: &[SurveyEntry], kmax: u64) -> Result<ExceptionalCheck, Failure> {
    let mut listed: BTreeMap<MonomialIdeal, (i64, HilbertFunction)> = BTreeMap::new();
    for &(gens, d, h) in golden::EXCEPTIONAL_IDEALS {
        let ideal = MonomialIdeal::parse(gens, Some(3))?;
        let hf = HilbertFunction::new(h.to_vec())?;
        if hf.sum() <= kmax {
            listed.insert(ideal, (d, hf));
        }
    }
    let mut rows = Vec::new();
    let mut seen_curvilinear = vec![false; kmax as usize + 1];
    for e in survey {
        let mut row = ExceptionalRow {
            ideal: e.ideal.to_string(),
            k: e.k,
            hilbert: e.hilbert.to_string(),
            d: Some(e.d),
            listed_hilbert: None,
            listed_d: None,
            status: "unlisted",
        };
        if e.ideal == curvilinear(e.k) {
            seen_curvilinear[e.k as usize] = true;
            row.listed_d = Some(0);
            row.listed_hilbert = Some(e.hilbert.to_string());
            row.status = if e.d == 0 { "curvilinear" } else { "D differs" };
        } else if let Some((d, hf)) = listed.remove(&e.ideal) {
            row.listed_d = Some(d);
            row.listed_hilbert = Some(hf.to_string());
            row.status = if d != e.d {
                "D differs"
            } else if hf != e.hilbert {
                "H differs"
            } else {
                "ok"
            };
        }
        rows.push(row);
    }
    for k in 1..=kmax {
        if !seen_curvilinear[k as usize] {
            rows.push(ExceptionalRow {
                ideal: curvilinear(k).to_string(),
                k,
                hilbert: "-".into(),
                d: None,
                listed_hilbert: None,
                listed_d: Some(0),
                status: "missing",
            });
        }
    }
    for (ideal, (d, hf)) in listed {
        rows.push(ExceptionalRow {
            ideal: ideal.to_string(),
            k: hf.sum(),
            hilbert: "-".into(),
            d: None,
            listed_hilbert: Some(hf.to_string()),
            listed_d: Some(d),
            status: "missing",
        });
    }
    let ok = rows.iter().all(|r| r.status == "ok" || r.status == "curvilinear");
    Ok(ExceptionalCheck { rows, ok })
}

/// Compares the closed-form series with direct computation on the grid
/// `2 <= n <= 5`, `2 <= t <= s <= 6`, and checks the total against
/// `(k-1)(n-1) - 1`.
fn h2eq2_series() -> Result<Vec<Item>, Failure> {
    let mut cases = Vec::new();
    for n in 2..=5usize {
        for s in 2..=6usize {
            for t in 2..=s {
                cases.push((n, s, t));
            }
        }
    }
    cases
        .par_iter()
        .map(|&(n, s, t)| {
            let mut formula = h2eq2_tangent_series(n, s, t)?;
            formula.resize(s + 1, 0);
            let ideal = apolar_ideal(&h2eq2_inverse_system(n, s, t)?)?;
            let mut kt = KernelTangent::new(&ideal);
            let computed: Vec<u64> = (0..=s as i64).map(|d| kt.hom_dim(d)).collect();
            let k = h2eq2_hilbert(n, s, t)?.sum();
            let bound = (k - 1) * (n as u64 - 1) - 1;
            let total: u64 = computed.iter().sum();
            let passed = formula == computed && total <= bound;
            let note = if total == bound { "total equals the bound" } else { "total below the bound" };
            Ok(Item::claim(
                format!("n={n} s={s} t={t}"),
                json!({"series": formula, "total_at_most": bound}),
                json!({"series": computed, "total": total}),
                passed,
            )
            .note(note))
        })
        .collect()
}

fn h3eq1_negligible() -> Vec<Item> {
    let mut items: Vec<Item> = check_h3eq1_negligible(12)
        .into_iter()
        .map(|r| {
            Item::claim(
                format!("H={}", r.subject),
                json!({"at_most": r.expected}),
                json!({"bound": r.locus, "margin": r.margin}),
                !r.is_violating(),
            )
        })
        .collect();
    let violating: Vec<Value> = check_h3eq1_negligible(13)
        .into_iter()
        .filter(|r| r.is_violating())
        .map(|r| json!([r.subject, r.locus, r.expected]))
        .collect();
    let (h, locus, expected) = golden::H3EQ1_SHARP;
    items.push(Item::eq("violations at length 13", vec![json!([h, locus, expected])], violating));
    items
}

fn counterexamples() -> Result<Vec<Item>, Failure> {
    let mut items = Vec::new();
    for n in 3..=20 {
        let r = counterexample_margin(CounterexampleKind::TauGeq3, n)?;
        items.push(
            Item::claim(format!("tau_geq_3 n={n}"), json!({"positive": n >= 5}), json!({"margin": r.margin}), (r.margin > 0) == (n >= 5))
                .note(format!("quoted closed form gives {}", quoted_tau_geq_3_margin(n))),
        );
    }
    for n in 3..=20 {
        let r = counterexample_margin(CounterexampleKind::Tau1, n)?;
        let cubic = tau_1_cubic(n);
        let passed = Rational::from_integer(r.margin) == cubic && (r.margin > 0) == (n >= 6);
        items.push(
            Item::claim(format!("tau_1 n={n}"), json!({"cubic": cubic.to_string(), "positive": n >= 6}), json!({"margin": r.margin}), passed)
                .note(format!("quoted intermediate gives {}", quoted_tau_1_intermediate(n))),
        );
    }
    let r = counterexample_margin(CounterexampleKind::Tau2, 5)?;
    let (graded, locus, expected) = golden::TAU2_LOCUS;
    let fiber = punctual_core::loci::fiber_dim(5, 6, 1)?;
    items.push(Item::eq("tau_2 n=5", json!([graded, locus, expected]), json!([r.locus - fiber, r.locus, r.expected])));
    Ok(items)
}

fn t_pos_of(system: &str) -> Result<u64, Failure> {
    let fs = InverseSystem::parse(system, None)?;
    Ok(tangent_report(&apolar_ideal(&fs)?, 0).t_pos)
}

fn classified_loci() -> Result<Vec<Item>, Failure> {
    let mut items = vec![Item::eq("loci for H=(1,3,4,2,1)", golden::LOCI_13421, h13421_locus_dims())];
    let mut t = BTreeMap::new();
    for &(sys, v) in golden::WITNESS_TANGENTS {
        let c = t_pos_of(sys)?;
        t.insert(sys, c);
        items.push(Item::eq(format!("T_pos at {{{sys}}}"), v, c));
    }
    for &(gens, v) in golden::WITNESS_T_ZERO {
        let m = MonomialIdeal::parse(gens, Some(3))?;
        items.push(Item::eq(format!("T_0 at ({gens})"), v, hom_dim_syzygy(&m, 0)?));
    }
    let tangents = H14321Tangents {
        quartic_and_cubic: t["y1^4, y2^3 + y3^3, y4"].max(t["y1^4, y2^2*y3, y4"]),
        quartic_sum: t["y1^4 + y2^4, y3^2, y4"],
        quartic_mixed: t["y1^3*y2, y3^2, y4"],
        powers_square: t["y1^4, y2^3, y3^2, y4"],
        powers_product: t["y1^4, y2^3, y3*y4"],
    };
    for line in h14321_budget(&tangents).lines {
        items.push(Item::claim(
            format!("(1,4,3,2,1) {}", line.case),
            json!({"at_most": golden::H14321_BOUND}),
            json!({"base": line.base, "fiber": line.fiber, "total": line.total}),
            line.total <= golden::H14321_BOUND,
        ));
    }
    Ok(items)
}
