use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use virasoro::acceptance;
use virasoro::combinatorics::Signature;
use virasoro::density::{ad_symbolic, evaluate_ad, ff_product, p_d, FfCase};
use virasoro::fock;
use virasoro::jantzen::{
    character_formula, character_sum_closed, det_order_identity, filtration_character_sum, gram_family_in,
    jantzen_filtration, rank_character, CharacterCase,
};
use virasoro::oscillator::{binom_det, goldstone_params, goldstone_signature, goldstone_vector, is_singular, l0_eigenvalue, l1_power_pairing, Sector};
use virasoro::scalars::{parse_rational, BiPoly, ExactDiv, RatFunc, Rational, Ring, UniPoly, Var};
use virasoro::singular::{bdiz_singular, check_singular, curve_module, curve_singular, singular_kernel};
use virasoro::verma::{c_curve, gram_matrix, h_pq_curve, kac_det_direct, kac_det_product, VermaModule, VermaParams};

use crate::{CaseArgs, CharMethod, Cli, Command, KacMode, SectorArg, SingMethod};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] virasoro::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use virasoro::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Lib(E::InvalidArgument(_) | E::Truncation { .. } | E::NonPolynomialPath(_) | E::DegenerateFamily { .. }) => 2,
            CliError::Lib(_) => 1,
        }
    }
}

/// A finished computation; `verified` is false when an identity it checks fails.
pub struct Report {
    pub command: &'static str,
    pub value: Value,
    pub verified: bool,
    /// Preferred rendering for `--format text`, if the generic one is poor.
    pub text: Option<String>,
}

impl Report {
    fn new(command: &'static str, value: Value, verified: bool) -> Self {
        Report { command, value, verified, text: None }
    }
}

type Out = Result<Report, CliError>;

fn rational(name: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| CliError::Usage(format!("--{name}: expected a rational like 3/2, got {s:?}")))
}

fn required<T: Clone>(name: &str, v: &Option<T>) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::Usage(format!("--{name} is required here")))
}

fn case_of(a: &CaseArgs) -> Result<CharacterCase, CliError> {
    if a.c1 {
        let j = rational("j", &required("j", &a.j)?)?;
        if j < Rational::zero() {
            return Err(CliError::Usage("--j must be non-negative".into()));
        }
        return Ok(CharacterCase::C1 { j });
    }
    match (a.m, a.r, a.s) {
        (Some(m), Some(r), Some(s)) => {
            if m < 2 || r < 1 || s < 1 || r > m - 1 || s > m {
                return Err(CliError::Usage(format!("need m ≥ 2, 1 ≤ r < m, 1 ≤ s ≤ m; got ({m},{r},{s})")));
            }
            Ok(CharacterCase::Discrete { m, r, s })
        }
        _ => Err(CliError::Usage("give --c1 --j J, or --m M --r R --s S".into())),
    }
}

fn symbol_or_rational(name: &str, s: &str) -> Result<BiPoly, CliError> {
    match s {
        "c" => Ok(BiPoly::c()),
        "h" => Ok(BiPoly::h()),
        _ => Ok(BiPoly::from_rational(&rational(name, s)?)),
    }
}

pub fn dispatch(cli: &Cli) -> Out {
    match &cli.command {
        Command::Gram { c, h, level } => gram(c, h, *level),
        Command::Kacdet { level, mode } => kacdet(*level, *mode),
        Command::Singvec { method, j, r, s, c, h, level } => singvec(*method, j, *r, *s, c, h, *level),
        Command::Ffpoly { j, lambda, mu } => ffpoly(j, lambda, mu),
        Command::Jantzen { case, level } => jantzen(case, *level),
        Command::Character { case, n, method, check } => character(case, *n, *method, *check),
        Command::Goldstone { k2, m, sector } => goldstone(*k2, *m, *sector),
        Command::Binomdet { f, mu, two_p } => binomdet(f, mu, *two_p),
        Command::FockCheck { emax, suite, .. } => fock_check(*emax, suite),
        Command::Acceptance { suite, level_cap, emax } => acceptance_run(suite, *level_cap, *emax, cli.seed),
    }
}

fn gram(c: &str, h: &str, level: u32) -> Out {
    let (cb, hb) = (symbol_or_rational("c", c)?, symbol_or_rational("h", h)?);
    let mut value = json!({ "c": cb.to_string(), "h": hb.to_string(), "level": level });
    if let (Some(c0), Some(h0)) = (cb.constant_value(), hb.constant_value()) {
        let params = VermaParams::rational(c0, h0);
        let g = gram_matrix(level, &params);
        value["gram"] = g.to_json();
        value["det"] = json!(kac_det_direct(level, &params).to_string());
        value["rank"] = json!(g.entries.rank());
    } else {
        let params = VermaParams::new(cb, hb);
        value["gram"] = gram_matrix(level, &params).to_json();
        value["det"] = json!(kac_det_direct(level, &params).to_string());
    }
    Ok(Report::new("gram", value, true))
}

fn kacdet(level: u32, mode: KacMode) -> Out {
    if level == 0 {
        return Err(CliError::Usage("--level must be at least 1".into()));
    }
    let sym = VermaParams::<BiPoly>::symbolic();
    let value = match mode {
        KacMode::Direct => json!({ "level": level, "direct": kac_det_direct(level, &sym).to_string() }),
        KacMode::Product => json!({ "level": level, "product": kac_det_product(level).to_string() }),
        KacMode::Ratio => {
            let ratio = kac_det_direct(level, &sym).exact_div(&kac_det_product(level));
            let constant = ratio.as_ref().and_then(BiPoly::constant_value).filter(|k| !k.is_zero());
            let verified = constant.is_some();
            let shown = ratio.map(|r| r.to_string()).unwrap_or_else(|| "not divisible".into());
            return Ok(Report::new("kacdet", json!({ "level": level, "ratio": shown, "constant": verified }), verified));
        }
    };
    Ok(Report::new("kacdet", value, true))
}

#[allow(clippy::too_many_arguments)]
fn singvec(method: SingMethod, j: &Option<String>, r: Option<i64>, s: Option<i64>, c: &Option<String>, h: &Option<String>, level: Option<u32>) -> Out {
    match method {
        SingMethod::Bdiz => {
            let j = rational("j", &required("j", j)?)?;
            let v = bdiz_singular(&j)?;
            let r = v.level() as i64;
            let over_t = v.map_coeffs(|p| RatFunc::from_poly(p.clone()));
            let singular = check_singular(&over_t, &curve_module(r, 1)).singular;
            let value = json!({
                "method": "bdiz", "j": j.to_string(), "level": v.level(),
                "c": c_curve().to_string(), "h": h_pq_curve(r, 1).to_string(),
                "vector": v.terms_json(), "singular": singular,
            });
            Ok(Report::new("singvec", value, singular))
        }
        SingMethod::Curve => {
            let (r, s) = (required("r", &r)?, required("s", &s)?);
            if r < 1 || s < 1 {
                return Err(CliError::Usage("--r and --s must be positive".into()));
            }
            let v = curve_singular(r, s)?;
            let singular = check_singular(&v, &curve_module(r, s)).singular;
            let value = json!({
                "method": "curve", "r": r, "s": s, "level": v.level(),
                "c": c_curve().to_string(), "h": h_pq_curve(r, s).to_string(),
                "vector": v.terms_json(), "singular": singular,
            });
            Ok(Report::new("singvec", value, singular))
        }
        SingMethod::Kernel => {
            let c0 = rational("c", &required("c", c)?)?;
            let h0 = rational("h", &required("h", h)?)?;
            let d = required("level", &level)?;
            let params = VermaParams::rational(c0.clone(), h0.clone());
            let module = VermaModule::new(params.clone());
            let kernel = singular_kernel(&params, d);
            let singular = kernel.iter().all(|v| check_singular(v, &module).singular);
            let vectors: Vec<Value> = kernel.iter().map(|v| v.terms_json()).collect();
            let value = json!({ "method": "kernel", "c": c0.to_string(), "h": h0.to_string(), "level": d, "dimension": kernel.len(), "vectors": vectors });
            Ok(Report::new("singvec", value, singular))
        }
    }
}

fn ffpoly(j: &str, lambda: &Option<String>, mu: &Option<String>) -> Out {
    let j = rational("j", j)?;
    let p = p_d(&j)?;
    let m = UniPoly::var(Var::Mu);
    let mut cases = Vec::new();
    let mut ok = true;
    for (name, case, lam) in [("a", FfCase::A, UniPoly::zero()), ("b", FfCase::B, UniPoly::one())]
        .into_iter()
        .chain((0..4u32).map(|q| (["c0", "c1", "c2", "c3"][q as usize], FfCase::C(q), UniPoly::from_int(i64::from(q * q)))))
    {
        let direct = evaluate_ad(&p, &lam, &m)?;
        let product = ff_product(&case, &j, &m)?;
        ok &= direct == product;
        cases.push(json!({ "case": name, "lambda": lam.to_string(), "a_d": direct.to_string(), "product": product.to_string(), "equal": direct == product }));
    }
    let mut value = json!({ "j": j.to_string(), "degree": p.level(), "a_d": ad_symbolic(&j)?.to_string(), "cases": cases });
    match (lambda, mu) {
        (Some(l), Some(u)) => {
            let (l, u) = (rational("lambda", l)?, rational("mu", u)?);
            let a: Rational = evaluate_ad(&p, &l, &u)?;
            let d = ff_product(&FfCase::D(l.clone()), &j, &u)?;
            ok &= &a * &a == d;
            value["at"] = json!({ "lambda": l.to_string(), "mu": u.to_string(), "a_d": a.to_string(), "square_product": d.to_string() });
        }
        (Some(l), None) => {
            let l = rational("lambda", l)?;
            value["at"] = json!({ "lambda": l.to_string(), "a_d": evaluate_ad(&p, &UniPoly::from_rational(&l), &m)?.to_string() });
        }
        (None, Some(_)) => return Err(CliError::Usage("--mu needs --lambda".into())),
        (None, None) => {}
    }
    Ok(Report::new("ffpoly", value, ok))
}

fn jantzen(case: &CaseArgs, level: u32) -> Out {
    let case = case_of(case)?;
    let path = case.path();
    let module = path.module();
    let fam = gram_family_in(&module, &path, level);
    let filt = jantzen_filtration(&fam)?;
    let (order, sum) = det_order_identity(&fam)?;
    let value = json!({
        "path": path.label, "level": level, "det": fam.det().to_string(),
        "det_order": order, "dims": filt.dims(), "dim_sum": sum, "identity": order == sum,
    });
    Ok(Report::new("jantzen", value, order == sum))
}

fn character(case: &CaseArgs, n: u32, method: CharMethod, check: bool) -> Out {
    let case = case_of(case)?;
    let mut value = json!({
        "c": case.central_charge().to_string(), "h": case.weight().to_string(), "N": n,
    });
    let mut verified = true;
    match method {
        CharMethod::Formula | CharMethod::Rank => {
            let series = match method {
                CharMethod::Formula => character_formula(&case, n),
                _ => rank_character(&case, n),
            };
            if check {
                let other = rank_character(&case, n);
                verified = series == other;
                value["matches_rank_oracle"] = json!(verified);
            }
            value["character"] = series.to_json();
        }
        CharMethod::Filtration => {
            let (sum, reports) = filtration_character_sum(&case, n)?;
            verified = sum == character_sum_closed(&case, n) && reports.iter().all(|r| r.det_order == r.dim_sum);
            value["jantzen_sum"] = sum.to_json();
            value["matches_closed_form"] = json!(verified);
            value["levels"] = reports.iter().map(|r| json!({ "level": r.level, "dims": r.dims, "det_order": r.det_order })).collect();
        }
    }
    Ok(Report::new("character", value, verified))
}

fn goldstone(k2: u32, m: u32, sector: SectorArg) -> Out {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    let sector = match sector {
        SectorArg::Minus => Sector::Minus,
        SectorArg::Plus => Sector::Plus,
    };
    let params = goldstone_params(k2, sector);
    let v = goldstone_vector(k2, m, sector);
    let singular = is_singular(&v, &params);
    let value = json!({
        "two_k": k2, "m": m, "sector": format!("{sector:?}").to_lowercase(),
        "signature": goldstone_signature(k2, m, sector).to_string(),
        "b0": params.mu0.to_string(), "level": v.homogeneous_degree(),
        "l0": l0_eigenvalue(&v, &params)?.to_string(),
        "vector": v.to_string(), "singular": singular,
    });
    Ok(Report::new("goldstone", value, singular))
}

fn binomdet(f: &str, mu: &Option<String>, two_p: Option<i64>) -> Out {
    let rows: Result<Vec<u32>, _> = f.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse::<u32>()).collect();
    let rows = rows.map_err(|_| CliError::Usage(format!("--f: expected rows like 3,2,1, got {f:?}")))?;
    let sig = Signature::new(rows)?;
    let mut value = json!({ "f": sig.to_string() });
    let mu = mu.as_ref().map(|u| rational("mu", u)).transpose()?;
    value["det"] = match &mu {
        Some(u) => json!(binom_det(&sig, u).to_string()),
        None => json!(binom_det(&sig, &UniPoly::var(Var::Mu)).to_string()),
    };
    let mut verified = true;
    if let Some(tp) = two_p {
        let pairing = l1_power_pairing(&sig, tp)?;
        let det: Rational = binom_det(&sig, mu.as_ref().unwrap_or(&Rational::from_int(tp)));
        verified = pairing == det;
        value["pairing"] = json!({ "two_p": tp, "value": pairing.to_string(), "equals_det": verified });
    }
    Ok(Report::new("binomdet", value, verified))
}

fn fock_check(emax: i64, suite: &str) -> Out {
    let names: Vec<&str> = if suite == "all" { fock::SUITES.to_vec() } else { suite.split(',').map(str::trim).collect() };
    if let Some(bad) = names.iter().find(|n| !fock::SUITES.contains(n)) {
        return Err(CliError::Usage(format!("unknown suite {bad:?}; expected all or some of {}", fock::SUITES.join(","))));
    }
    let reports: Vec<_> = names.par_iter().map(|n| fock::run_suite(n, emax)).collect::<Result<_, _>>()?;
    let verified = reports.iter().all(|r| r.passed());
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "suite": r.name, "checked": r.checked, "mismatches": r.mismatches.len(), "first": r.mismatches.iter().take(5).collect::<Vec<_>>() }))
        .collect();
    let text = reports
        .iter()
        .map(|r| format!("{} {} ({} checks, {} mismatches)", if r.passed() { "PASS" } else { "FAIL" }, r.name, r.checked, r.mismatches.len()))
        .collect::<Vec<_>>()
        .join("\n");
    let mut rep = Report::new("fock-check", json!({ "emax": emax, "suites": rows, "passed": verified }), verified);
    rep.text = Some(text);
    Ok(rep)
}

fn acceptance_run(suite: &str, level_cap: u32, emax: i64, seed: u64) -> Out {
    let ids: Vec<u8> = if suite == "all" {
        (1..=10).collect()
    } else {
        suite
            .split(',')
            .map(|s| s.trim().parse::<u8>().ok().filter(|i| (1..=10).contains(i)))
            .collect::<Option<_>>()
            .ok_or_else(|| CliError::Usage(format!("--suite: expected all or numbers in 1..=10, got {suite:?}")))?
    };
    if level_cap == 0 {
        return Err(CliError::Usage("--level-cap must be at least 1".into()));
    }
    let cfg = acceptance::Config { seed, level_cap, fock_e_max: emax };
    let outcomes: Vec<_> = ids.par_iter().map(|&i| acceptance::run(i, &cfg)).collect::<Result<_, _>>()?;
    let verified = outcomes.iter().all(|o| o.passed);
    let rows: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail, "seconds": o.elapsed.as_secs_f64() }))
        .collect();
    let mut rep = Report::new("acceptance", json!({ "criteria": rows, "passed": verified }), verified);
    rep.text = Some(outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n"));
    Ok(rep)
}
