//! Acceptance suite: one PASS/FAIL line per criterion, each with a time
//! bound. Criteria listed in `KNOWN_FAILURES` are expected to print FAIL;
//! the process exits nonzero only if the set of failures differs.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use punctual_core::apolarity::{
    apolar_ideal, apolar_local_invariants, inverse_system_of, random_inverse_system, InverseSystem,
};
use punctual_core::exact::{Polynomial, Rational};
use punctual_core::hilbert::{enumerate_o_sequences, HFConstraints};
use punctual_core::ideal::{enumerate_monomial_ideals, enumerate_strongly_stable, MonomialIdeal};
use punctual_core::loci::{
    check_h3eq1_negligible, counterexample_margin, fiber_dim, gorenstein_locus_dim, h2eq2_hilbert,
    h2eq2_inverse_system, h2eq2_tangent_series, quoted_tau_geq_3_margin, tau_1_cubic, CounterexampleKind,
    N_bound,
};
use punctual_core::regular::{
    check_k_regular, curvilinear_span_dim, monomial_regular_map, socle_reduction_example, tau_power,
    RegularityVerdict,
};
use punctual_core::tangent::{
    graded_socle_dimension, hom_dim_kernel, hom_dim_syzygy, nonnegative_tangent_dim, tangent_report, GradedIdeal,
    KernelTangent, TangentSource,
};

/// The total `(k-1)(n-1) - 1` is only an upper bound: when `t = s` the
/// `T^(s-t-1)` term vanishes and the total is one less.
const KNOWN_FAILURES: &[u32] = &[9];

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn counts(f: impl Fn(u64) -> Result<u64, String>, expected: &[u64], label: &str) -> Result<(), String> {
    let got = (1..=expected.len() as u64).map(f).collect::<Result<Vec<_>, _>>()?;
    ensure(got == expected, || format!("{label}: got {got:?}, want {expected:?}"))
}

fn o_sequences() -> Result<String, String> {
    let want = [1, 1, 2, 3, 5, 8, 12, 18, 27, 40, 57];
    counts(|k| Ok(enumerate_o_sequences(k, &HFConstraints::none()).len() as u64), &want, "O-sequences")?;
    Ok("k=1..11 match".into())
}

fn macmahon() -> Result<String, String> {
    let want = [1, 3, 6, 13, 24, 48, 86, 160, 282, 500, 859];
    counts(|k| enumerate_monomial_ideals(3, k).map(|v| v.len() as u64).map_err(err), &want, "n=3")?;
    Ok("k=1..11 match".into())
}

fn borel_counts() -> Result<String, String> {
    let n3 = [1, 1, 2, 3, 4, 6, 9, 12, 17, 24, 32];
    let nk = [1, 1, 2, 3, 5, 8, 13, 20, 32, 50, 77];
    counts(|k| Ok(enumerate_strongly_stable(3, k).len() as u64), &n3, "n=3")?;
    counts(|k| Ok(enumerate_strongly_stable(k as usize, k).len() as u64), &nk, "n=k")?;
    Ok("n=3 and n=k rows match".into())
}

fn threshold_count(n: usize, k: u64) -> u64 {
    let expected = (n as u64 - 1) * (k - 1);
    enumerate_strongly_stable(n, k).iter().filter(|i| nonnegative_tangent_dim(*i) >= expected).count() as u64
}

fn tangent_thresholds() -> Result<String, String> {
    let n3 = [1, 1, 1, 1, 1, 1, 1, 2, 2, 4, 6];
    let nk = [1, 1, 1, 1, 1, 1, 1, 4, 8, 16, 33];
    counts(|k| Ok(threshold_count(3, k)), &n3, "n=3")?;
    counts(|k| Ok(threshold_count(k as usize, k)), &nk, "n=k")?;
    Ok("n=3 and n=k rows match".into())
}

const LISTED: &[(&str, i64, &[u64])] = &[
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^4", 0, &[1, 3, 3, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^5", 0, &[1, 3, 3, 1, 1]),
    ("x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 0, &[1, 3, 3, 2, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^6", 0, &[1, 3, 3, 1, 1, 1]),
    ("x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^5", 2, &[1, 3, 3, 2, 1]),
    ("x1*x3, x1*x2, x1^2, x2^2*x3, x2^3, x2*x3^3, x3^6", 0, &[1, 3, 3, 2, 1, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^7", 0, &[1, 3, 3, 1, 1, 1, 1]),
    ("x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^6", 2, &[1, 3, 3, 2, 1, 1]),
    ("x2^2, x1*x2, x1^2, x2*x3^3, x1*x3^3, x3^5", 0, &[1, 3, 3, 3, 1]),
    ("x1*x2, x1^2, x1*x3^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 1, &[1, 3, 4, 2, 1]),
];

fn exceptional_set() -> Result<String, String> {
    let mut found: Vec<(MonomialIdeal, i64)> = Vec::new();
    for k in 1..=11u64 {
        for ideal in enumerate_strongly_stable(3, k) {
            let d = nonnegative_tangent_dim(&ideal) as i64 - 2 * (k as i64 - 1);
            if d >= 0 {
                found.push((ideal, d));
            }
        }
    }
    let mut want: Vec<(MonomialIdeal, i64)> = (1..=11)
        .map(|k| Ok((MonomialIdeal::parse(&format!("x1, x2, x3^{k}"), Some(3)).map_err(err)?, 0)))
        .collect::<Result<_, String>>()?;
    for (gens, d, hf) in LISTED {
        let ideal = MonomialIdeal::parse(gens, Some(3)).map_err(err)?;
        let got = ideal.hilbert_function().map_err(err)?.values().to_vec();
        ensure(got == *hf, || format!("{gens}: H {got:?}, listed {hf:?}"))?;
        want.push((ideal, *d));
    }
    for (ideal, d) in &found {
        ensure(want.contains(&(ideal.clone(), *d)), || format!("unlisted ({}) with D={d}", ideal.generator_list()))?;
    }
    for (ideal, d) in &want {
        ensure(found.contains(&(ideal.clone(), *d)), || format!("missing ({}) with D={d}", ideal.generator_list()))?;
    }
    Ok(format!("{} ideals with D >= 0, all listed", found.len()))
}

fn worked_example() -> Result<String, String> {
    let ideal = MonomialIdeal::parse("x1^3, x2^2, x1*x3, x1*x2, x3^4", Some(3)).map_err(err)?;
    let graded = GradedIdeal::from_monomial(&ideal).map_err(err)?;
    for (d, want) in [(1, 5), (2, 3), (3, 0), (4, 0)] {
        let syz = hom_dim_syzygy(&ideal, d).map_err(err)?;
        let ker = hom_dim_kernel(&graded, d);
        ensure(syz == want && ker == want, || format!("Hom_{d}: syzygy {syz}, kernel {ker}, want {want}"))?;
    }
    let a = tangent_report(&ideal, 18).positive_series_string();
    let b = tangent_report(&graded, 18).positive_series_string();
    ensure(a == "5T+3T^2" && b == a, || format!("series {a} / {b}"))?;
    Ok("5T+3T^2 on both backends".into())
}

fn backend_equivalence() -> Result<String, String> {
    let mut checked = 0;
    for k in 1..=8 {
        for ideal in enumerate_monomial_ideals(3, k).map_err(err)? {
            let s = ideal.socle_degree().map_err(err)? as i64;
            let syz = ideal.hom_dims(-(s + 1), s);
            let ker = GradedIdeal::from_monomial(&ideal).map_err(err)?.hom_dims(-(s + 1), s);
            ensure(syz == ker, || format!("({}): syzygy {syz:?}, kernel {ker:?}", ideal.generator_list()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals agree in every degree"))
}

fn witness_tangents() -> Result<String, String> {
    for (system, want) in [
        ("y1^4, y2^3, y3*y4", 17),
        ("y1^4, y2^3, y3^2, y4", 18),
        ("y1^4 + y2^4, y3^2, y4", 14),
        ("y1^3*y2, y3^2, y4", 14),
    ] {
        let ideal = apolar_ideal(&InverseSystem::parse(system, Some(4)).map_err(err)?).map_err(err)?;
        let got = tangent_report(&ideal, 0).t_pos;
        ensure(got == want, || format!("T_pos at {system}: {got}, want {want}"))?;
    }
    for (gens, want) in [
        ("x2^2, x1*x2, x1^2, x1*x3^2, x2*x3^3, x3^5", 10),
        ("x1*x2, x1^2, x1*x3^2, x2^2*x3, x2^3, x2*x3^3, x3^5", 12),
    ] {
        let got = tangent_report(&MonomialIdeal::parse(gens, Some(3)).map_err(err)?, 0).t_zero;
        ensure(got == want, || format!("T_zero at ({gens}): {got}, want {want}"))?;
    }
    Ok("17, 18, 14, 14 and T_zero 10, 12".into())
}

fn h2eq2_cross_check() -> Result<String, String> {
    let mut below = Vec::new();
    let mut cases = 0;
    for n in 2..=5usize {
        for s in 2..=6usize {
            for t in 2..=s {
                let mut formula = h2eq2_tangent_series(n, s, t).map_err(err)?;
                formula.resize(s + 1, 0);
                let ideal = apolar_ideal(&h2eq2_inverse_system(n, s, t).map_err(err)?).map_err(err)?;
                let mut kt = KernelTangent::new(&ideal);
                let computed: Vec<u64> = (0..=s as i64).map(|d| kt.hom_dim(d)).collect();
                ensure(formula == computed, || format!("n={n} s={s} t={t}: formula {formula:?}, kernel {computed:?}"))?;
                let k = h2eq2_hilbert(n, s, t).map_err(err)?.sum();
                let bound = (k - 1) * (n as u64 - 1) - 1;
                let total: u64 = computed.iter().sum();
                ensure(total <= bound, || format!("n={n} s={s} t={t}: total {total} exceeds {bound}"))?;
                if total != bound {
                    below.push(format!("({n},{s},{t}) {total}<{bound}"));
                }
                cases += 1;
            }
        }
    }
    ensure(below.is_empty(), || {
        format!(
            "series agree in all {cases} cases, but the total equals (k-1)(n-1)-1 only for t<s; {} cases with t=s fall one short, e.g. {}",
            below.len(),
            below[..3.min(below.len())].join(", ")
        )
    })?;
    Ok(format!("{cases} cases"))
}

fn formula_checks() -> Result<String, String> {
    let g = gorenstein_locus_dim(3, 2, 4).map_err(err)?;
    ensure(g == 11, || format!("gorenstein_locus_dim(3,2,4) = {g}"))?;
    let at12 = check_h3eq1_negligible(12);
    ensure(at12.iter().all(|r| !r.is_violating()), || "violation with k <= 12".into())?;
    let at13 = check_h3eq1_negligible(13);
    let violating: Vec<&str> = at13.iter().filter(|r| r.is_violating()).map(|r| r.subject.as_str()).collect();
    ensure(violating == ["(1,5,6,1)"], || format!("violations at 13: {violating:?}"))?;
    for n in 3..=20 {
        let m = counterexample_margin(CounterexampleKind::Tau1, n).map_err(err)?.margin;
        ensure(q(m) == tau_1_cubic(n), || format!("tau_1 margin at n={n}: {m}, cubic {}", tau_1_cubic(n)))?;
    }
    let graded = 35 - 1 + 15 - 5 - 1;
    let tau2 = counterexample_margin(CounterexampleKind::Tau2, 5).map_err(err)?;
    let fiber = fiber_dim(5, 6, 1).map_err(err)?;
    ensure(graded == 43 && graded + fiber == tau2.locus && tau2.locus == 52 && tau2.expected == 48, || {
        format!("tau_2: graded {graded}, fiber {fiber}, locus {} vs {}", tau2.locus, tau2.expected)
    })?;
    let mut quoted_differs = 0;
    for n in 5..=20 {
        let m = counterexample_margin(CounterexampleKind::TauGeq3, n).map_err(err)?.margin;
        ensure(m > 0, || format!("tau_geq_3 margin at n={n}: {m}"))?;
        quoted_differs += usize::from(m != quoted_tau_geq_3_margin(n));
    }
    Ok(format!("tau_geq_3 quoted binomial form differs from direct subtraction for {quoted_differs} of 16 n"))
}

const WITNESS_SYSTEMS: &[&str] = &[
    "y1^4, y2^3, y3*y4",
    "y1^4 + y2^4, y3^2, y4",
    "y1^3*y2, y3^2, y4",
    "y1^4, y2^3, y3^2, y4",
    "y1^4, y2^3 + y3^3, y4",
    "y1^4, y2^2*y3, y4",
];

fn same_ideal(a: &GradedIdeal, b: &GradedIdeal) -> bool {
    a.hilbert_function() == b.hilbert_function()
        && a.minimal_generators().iter().all(|p| b.contains(p))
        && b.minimal_generators().iter().all(|p| a.contains(p))
}

fn apolar_invariants() -> Result<String, String> {
    for seed in 0..10 {
        let fs = random_inverse_system(&[3, 2], 5, seed);
        let r = apolar_local_invariants(&fs);
        ensure(r.hilbert.values() == [1, 5, 6, 1] && r.tau == 2, || {
            format!("seed {seed}: H {} tau {}", r.hilbert, r.tau)
        })?;
    }
    for system in WITNESS_SYSTEMS {
        let fs = InverseSystem::parse(system, Some(4)).map_err(err)?;
        let ideal = apolar_ideal(&fs).map_err(err)?;
        let back = apolar_ideal(&inverse_system_of(&ideal)).map_err(err)?;
        ensure(same_ideal(&ideal, &back), || format!("{system}: round trip changes the ideal"))?;
        let r = apolar_local_invariants(&fs);
        let socle = graded_socle_dimension(&ideal);
        ensure(r.tau == socle && r.tau == fs.generators().len() as u64, || {
            format!("{system}: tau {} socle {socle} generators {}", r.tau, fs.generators().len())
        })?;
        ensure(r.hilbert == *ideal.hilbert_function(), || format!("{system}: Hilbert functions differ"))?;
    }
    Ok("(1,5,6,1), tau 2 on 10 seeds; 6 witness systems round-trip".into())
}

fn regular_maps() -> Result<String, String> {
    for (n, k) in [(1, 3), (2, 3), (2, 4), (3, 3)] {
        for tau in 1..=3 {
            let f = tau_power(monomial_regular_map(n, k).map_err(err)?, tau).map_err(err)?;
            let r = check_k_regular(&f, k as usize, 100, 1000 + tau as u64);
            ensure(r.verdict == RegularityVerdict::Pass, || format!("(n,k)=({n},{k}) tau={tau}: {:?}", r.witness))?;
        }
    }
    let line = tau_power(monomial_regular_map(1, 2).map_err(err)?, 1).map_err(err)?;
    let r = check_k_regular(&line, 3, 100, 1);
    ensure(r.verdict == RegularityVerdict::Fail && r.witness.is_some(), || "(1,t) is not rejected for k=3".into())?;
    let t = Polynomial::var(1, 0);
    for (n, k) in [(1, 3), (2, 3), (2, 4), (3, 3)] {
        let f = monomial_regular_map(n, k).map_err(err)?;
        let gamma: Vec<Polynomial> = (1..=n as u32).map(|e| (0..e).fold(Polynomial::constant(1, q(1)), |p, _| &p * &t)).collect();
        for p in [-2, 0, 3] {
            let dim = curvilinear_span_dim(&f, &gamma, &q(p), k as usize).map_err(err)?;
            ensure(dim == k as usize, || format!("jet span for (n,k)=({n},{k}) at {p}: {dim}"))?;
        }
    }
    let s = socle_reduction_example(&[q(1), q(0), q(0)], &[q(0), q(1), q(0)]).map_err(err)?;
    ensure(s.verified && s.span_dim == 4, || format!("socle reduction: {s:?}"))?;
    Ok("all maps regular, (1,t) rejected, jets span k, socle reduction verified".into())
}

fn n_bound_values() -> Result<String, String> {
    for (tau, k, n, want) in [(1, 8, 3, 22), (2, 11, 4, 52), (3, 9, 5, 71)] {
        let got = N_bound(tau, k, n).map_err(err)?;
        ensure(got == want, || format!("N({tau},{k},{n}) = {got}, want {want}"))?;
    }
    Ok("22, 52, 71".into())
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "O-sequence counts", limit: secs(1), run: o_sequences },
        Criterion { id: 2, name: "monomial ideal counts, n=3", limit: secs(30), run: macmahon },
        Criterion { id: 3, name: "Borel-fixed counts", limit: secs(60), run: borel_counts },
        Criterion { id: 4, name: "tangent threshold counts", limit: secs(300), run: tangent_thresholds },
        Criterion { id: 5, name: "exceptional Borel-fixed ideals", limit: secs(300), run: exceptional_set },
        Criterion { id: 6, name: "worked tangent example", limit: secs(10), run: worked_example },
        Criterion { id: 7, name: "backend equivalence, n=3, k<=8", limit: secs(300), run: backend_equivalence },
        Criterion { id: 8, name: "witness tangent dimensions", limit: secs(60), run: witness_tangents },
        Criterion { id: 9, name: "H(2)=2 series cross-check", limit: secs(120), run: h2eq2_cross_check },
        Criterion { id: 10, name: "locus formulas", limit: secs(1), run: formula_checks },
        Criterion { id: 11, name: "apolar invariants", limit: secs(10), run: apolar_invariants },
        Criterion { id: 12, name: "regular maps", limit: secs(30), run: regular_maps },
        Criterion { id: 13, name: "N bound values", limit: secs(1), run: n_bound_values },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; took longer than {:?}", c.limit)),
            r => r,
        };
        let time = format!("{:.2}s/{}s", elapsed.as_secs_f64(), c.limit.as_secs());
        match result {
            Ok(detail) => println!("criterion {:>2} {}: PASS [{time}] {detail}", c.id, c.name),
            Err(detail) => {
                let known = if KNOWN_FAILURES.contains(&c.id) { " (known)" } else { "" };
                println!("criterion {:>2} {}: FAIL{known} [{time}] {detail}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    if failed == KNOWN_FAILURES {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome: failed {failed:?}, known {KNOWN_FAILURES:?}");
        ExitCode::FAILURE
    }
}
