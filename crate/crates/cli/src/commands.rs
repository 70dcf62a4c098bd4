use rayon::prelude::*;
use rexspec::exactpoly::rational::to_f64;
use rexspec::exactpoly::Polynomial;
use rexspec::extension::{validate, Extension, ExtensionSpec, Kind};
use rexspec::ladder::{build_table, chain_starts, pha_check, q_polynomial};
use rexspec::numverify::{compare_spectrum, sample_potential, sample_wavefunction, GridParams};
use rexspec::super2d::{
    commutator_check, degeneracy_closed, energy, k_eigenvalue, make_system, mu_decompose, states, unirreps,
    zero_modes, Family, System2D,
};
use rexspec::{Error, Result};
use serde_json::{json, Value};

use crate::args::{parse_range, OneDim, PlotData, Series, TwoDim, Verify};
use crate::report::{float, float_str, join, rat, rats, Report, Table};

fn spec_json(spec: &ExtensionSpec) -> Value {
    json!({
        "kind": spec.kind.to_string(),
        "m": spec.m,
        "alpha": spec.alpha.as_ref().map(rat),
    })
}

fn poly_json(p: &Polynomial) -> Value {
    json!({ "variable": p.var().symbol(), "coefficients": rats(p.coeffs()) })
}

fn system_json(sys: &System2D) -> Value {
    json!({
        "family": sys.family.to_string(),
        "x": spec_json(sys.x.spec()),
        "y": spec_json(sys.y.spec()),
        "gamma": rat(&sys.gamma),
        "period": sys.period(),
        "lambda_bar": sys.lambda_bar(),
    })
}

pub fn build(a: &OneDim) -> Result<Report> {
    let spec = a.spec.spec()?;
    let report = validate(&spec);
    if !report.is_ok() {
        return Err(Error::Admissibility(report.violations));
    }
    let ext = Extension::new(spec.clone())?;
    let pot = ext.potential();
    let mut table = Table::new(&["field", "value"]);
    table.push(vec!["spec".into(), spec.to_string()]);
    table.push(vec!["admissible".into(), "true".into()]);
    table.push(vec!["seed_wronskian".into(), ext.seed_wronskian().to_string()]);
    table.push(vec!["shift".into(), pot.shift.to_string()]);
    table.push(vec!["numerator".into(), pot.numerator.to_string()]);
    table.push(vec!["denominator".into(), pot.denominator.to_string()]);
    table.push(vec!["centrifugal".into(), pot.centrifugal().to_string()]);
    let json = json!({
        "spec": spec_json(&spec),
        "admissibility": { "admissible": true, "violations": Vec::<String>::new() },
        "seed_wronskian": poly_json(ext.seed_wronskian()),
        "potential": {
            "shift": rat(&pot.shift),
            "centrifugal": rat(&pot.centrifugal()),
            "numerator": poly_json(&pot.numerator),
            "denominator": poly_json(&pot.denominator),
        },
    });
    Ok(Report { title: format!("potential of {spec}"), json, table })
}

pub fn spectrum(a: &OneDim) -> Result<Report> {
    let ext = a.spec.extension()?;
    let levels = ext.spectrum(a.nu_max);
    let mut table = Table::new(&["nu", "E"]);
    for l in &levels {
        table.push(vec![l.nu.to_string(), l.energy.to_string()]);
    }
    let json = json!({
        "spec": spec_json(ext.spec()),
        "levels": levels.iter().map(|l| json!({"nu": l.nu, "E": rat(&l.energy)})).collect::<Vec<_>>(),
    });
    Ok(Report { title: format!("spectrum of {}", ext.spec()), json, table })
}

pub fn ladder(a: &OneDim) -> Result<Report> {
    let ext = a.spec.extension()?;
    let t = build_table(&ext, a.nu_max)?;
    let pha = q_polynomial(&ext);
    let mut table = Table::new(&["nu", "E", "down_sq", "zero_mode"]);
    let mut elements = Vec::new();
    for (nu, v) in &t.squared_elements {
        let e = ext.energy(*nu)?;
        table.push(vec![nu.to_string(), e.to_string(), v.to_string(), t.zero_modes.contains(nu).to_string()]);
        elements.push(json!({"nu": nu, "E": rat(&e), "down_sq": rat(v)}));
    }
    let json = json!({
        "spec": spec_json(ext.spec()),
        "q_polynomial": poly_json(&pha.q_poly),
        "step": rat(&pha.step),
        "period": pha.period,
        "order": pha.order,
        "chain_starts": t.chain_starts,
        "zero_modes": t.zero_modes,
        "elements": elements,
    });
    let title = format!("ladder of {}: chain starts {}, Q(H) = {}", ext.spec(), join(&t.chain_starts), pha.q_poly);
    Ok(Report { title, json, table })
}

fn level_range(sys: &System2D, arg: &Option<String>) -> Result<Vec<i64>> {
    Ok(match arg {
        Some(s) => parse_range(s)?.collect(),
        None => (sys.min_level()..=10).collect(),
    })
}

/// Closed-form degeneracy, `None` where no closed form is known.
fn closed_degeneracy(sys: &System2D, n: i64) -> Result<Option<u64>> {
    match degeneracy_closed(sys, n) {
        Ok(d) => Ok(Some(d)),
        Err(Error::Unsupported(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn system(a: &TwoDim) -> Result<Report> {
    let sys = a.system.system()?;
    let mut table = Table::new(&["N", "E", "nu_x", "nu_y", "K"]);
    let mut levels = Vec::new();
    for n in level_range(&sys, &a.levels)? {
        let e = energy(&sys, n);
        let basis = states(&sys, n);
        let mut rows = Vec::new();
        for s in &basis {
            let k = k_eigenvalue(&sys, s)?;
            table.push(vec![n.to_string(), e.to_string(), s.nu_x.to_string(), s.nu_y.to_string(), k.to_string()]);
            rows.push(json!({"nu_x": s.nu_x, "nu_y": s.nu_y, "K": rat(&k)}));
        }
        levels.push(json!({
            "N": n,
            "E": rat(&e),
            "degeneracy": basis.len(),
            "degeneracy_closed": closed_degeneracy(&sys, n)?,
            "states": rows,
        }));
    }
    let json = json!({ "system": system_json(&sys), "levels": levels });
    Ok(Report { title: format!("family {} levels (E = 2N + {})", sys.family, sys.gamma), json, table })
}

pub fn unirrep_report(a: &TwoDim) -> Result<Report> {
    let sys = a.system.system()?;
    let ns = level_range(&sys, &a.levels)?;
    let records: Vec<_> = ns.par_iter().map(|&n| unirreps(&sys, n)).collect::<Result<_>>()?;
    let mut table = Table::new(&["N", "lambda", "mu", "s", "count", "degeneracy"]);
    let mut rows = Vec::new();
    for r in &records {
        let s = r.s_multiset();
        table.push(vec![
            r.n.to_string(),
            r.lambda.to_string(),
            r.mu.to_string(),
            join(&s),
            r.unirrep_count.to_string(),
            r.degeneracy.to_string(),
        ]);
        let chains: Vec<Value> = r
            .chains
            .iter()
            .enumerate()
            .map(|(tau, c)| {
                json!({
                    "tau": tau,
                    "start_nu_x": c.start_nu_x,
                    "end_nu_x": c.end_nu_x,
                    "s": rat(&c.s()),
                    "p": c.two_s,
                })
            })
            .collect();
        let mu = mu_decompose(&sys, r.n);
        rows.push(json!({
            "N": r.n,
            "lambda": r.lambda,
            "mu": r.mu,
            "rho_sigma": mu.rho_sigma.map(|(rho, sigma)| json!([rho, sigma])),
            "s": rats(&s),
            "count": r.unirrep_count,
            "degeneracy": r.degeneracy,
            "chains": chains,
        }));
    }
    let json = json!({ "system": system_json(&sys), "unirreps": rows });
    Ok(Report { title: format!("family {} unirreps (N = lambda*{} + mu)", sys.family, sys.period()), json, table })
}

pub fn zeromode_report(a: &TwoDim) -> Result<Report> {
    let sys = a.system.system()?;
    let mut table = Table::new(&["N", "plus", "minus"]);
    let mut rows = Vec::new();
    for n in level_range(&sys, &a.levels)? {
        let (plus, minus) = zero_modes(&sys, n)?;
        table.push(vec![n.to_string(), join(&plus), join(&minus)]);
        rows.push(json!({"N": n, "plus": plus, "minus": minus}));
    }
    let json = json!({ "system": system_json(&sys), "zero_modes": rows });
    Ok(Report { title: format!("family {} zero modes of I+ and I- (nu_x values)", sys.family), json, table })
}

struct Check {
    name: &'static str,
    outcome: std::result::Result<String, String>,
}

type Runner<'a> = Box<dyn Fn() -> Result<String> + Send + Sync + 'a>;

fn failed(e: Error) -> std::result::Result<String, String> {
    Err(e.to_string())
}

/// Runs every applicable identity check. The report carries failures; the
/// caller turns them into exit code 1.
pub fn verify(a: &Verify) -> Result<(Report, bool)> {
    let ext = a.spec.extension()?;
    let spec = ext.spec().clone();
    let mut runners: Vec<(&'static str, Runner)> = Vec::new();
    if !spec.is_plain() {
        runners.push((
            "equivalence",
            Box::new(|| {
                let r = ext.check_equivalence()?;
                Ok(format!("deleted = {} x seed, energy shift {}", r.ratio, r.energy_shift))
            }),
        ));
        if spec.kind == Kind::Radial {
            runners.push((
                "appendix_a",
                Box::new(|| {
                    if ext.appendix_a_check()? {
                        Ok("gauged Wronskian identity holds".into())
                    } else {
                        Err(Error::consistency("gauged Wronskian identity fails"))
                    }
                }),
            ));
        }
    }
    runners.push((
        "pha",
        Box::new(|| {
            let r = pha_check(&ext, a.nu_max)?;
            Ok(format!("{} levels: c, c+ elements equal Q(E) and satisfy the commutator", r.levels_checked))
        }),
    ));
    runners.push((
        "commutator",
        Box::new(|| {
            let family = if spec.kind == Kind::Linear { Family::A } else { Family::B };
            let y = Extension::new(ExtensionSpec::plain_linear())?;
            let sys = make_system(family, ext.clone(), y)?;
            let r = commutator_check(&sys, a.n_max)?;
            Ok(format!(
                "family {family}: {} states up to N = {}; product identity {}",
                r.states_checked,
                a.n_max,
                if r.product_identity { "holds" } else { "fails" }
            ))
        }),
    ));
    runners.push((
        "numeric_spectrum",
        Box::new(|| {
            let (count, tol) = match spec.kind {
                Kind::Linear => (spec.k() + 4, 2e-3),
                Kind::Radial => (spec.k() + 3, 5e-3),
            };
            let r = compare_spectrum(&ext, count, tol, &GridParams::default())?;
            let worst = r.levels.iter().fold(0.0f64, |w, l| w.max(l.residual));
            if r.pass {
                Ok(format!("{count} levels within {tol:e}, max residual {worst:.3e}"))
            } else {
                Err(Error::consistency(format!("max residual {worst:.3e} exceeds {tol:e}")))
            }
        }),
    ));
    let checks: Vec<Check> = runners
        .par_iter()
        .map(|(name, run)| Check { name, outcome: run().or_else(failed) })
        .collect();
    let all = checks.iter().all(|c| c.outcome.is_ok());
    let mut table = Table::new(&["check", "result", "detail"]);
    let mut rows = Vec::new();
    for c in &checks {
        let (ok, detail) = match &c.outcome {
            Ok(d) => (true, d.clone()),
            Err(d) => (false, d.clone()),
        };
        table.push(vec![c.name.into(), if ok { "PASS" } else { "FAIL" }.into(), detail.clone()]);
        rows.push(json!({"name": c.name, "pass": ok, "detail": detail}));
    }
    let json = json!({ "spec": spec_json(&spec), "checks": rows, "pass": all });
    let title = format!("verification of {spec}: {}", if all { "all checks pass" } else { "FAILURES" });
    Ok((Report { title, json, table }, all))
}

pub fn plot_data(a: &PlotData) -> Result<Report> {
    let ext = a.spec.extension()?;
    let spec = ext.spec().clone();
    let params = GridParams { points: a.points, length: a.length, potential_shift: 0.0 };
    let (title, table, json) = match a.series {
        Series::Levels => {
            let p = spec.period() as i64;
            let mut table = Table::new(&["chain_id", "step", "E"]);
            let mut rows = Vec::new();
            for (id, start) in chain_starts(&spec).into_iter().enumerate() {
                let mut nu = start;
                let mut step = 0;
                while nu <= a.nu_max {
                    let e = spec.energy(nu);
                    table.push(vec![id.to_string(), step.to_string(), e.to_string()]);
                    rows.push(json!([id, step, rat(&e)]));
                    nu += p;
                    step += 1;
                }
            }
            ("level diagram".to_string(), table, rows)
        }
        Series::Potential => {
            let e_max = to_f64(&spec.energy(a.nu_max));
            let (xs, vs) = sample_potential(&ext, &params, e_max)?;
            xy_series("potential", xs, vs)
        }
        Series::Wavefunction => {
            let nu = a.nu.unwrap_or_else(|| spec.m_k().map_or(0, |m| -(m as i64) - 1));
            let (xs, ys) = sample_wavefunction(&ext, nu, &params)?;
            xy_series(&format!("normalized wavefunction nu = {nu}"), xs, ys)
        }
    };
    let json = json!({
        "spec": spec_json(&spec),
        "series": format!("{:?}", a.series).to_lowercase(),
        "columns": table.headers,
        "rows": json,
    });
    Ok(Report { title: format!("{title} of {spec}"), json, table })
}

fn xy_series(name: &str, xs: Vec<f64>, ys: Vec<f64>) -> (String, Table, Vec<Value>) {
    let mut table = Table::new(&["x", "value"]);
    let mut rows = Vec::new();
    for (x, y) in xs.into_iter().zip(ys) {
        table.push(vec![float_str(x), float_str(y)]);
        rows.push(json!([float(x), float(y)]));
    }
    (name.to_string(), table, rows)
}
