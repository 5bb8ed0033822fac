use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use gl11_vacuum::acceptance;
use gl11_vacuum::gl11::Gl11;
use gl11_vacuum::invariant_basis::{
    basis_degree, basis_element, coefficients_invariant, decompose, factorization_check,
    leading_component_check, series_coefficients, A_series, SeriesCaps,
};
use gl11_vacuum::qseries::{
    chi_mn, count_hook_diagrams, enumerate_pp, enumerate_pp_list, f_mn, fermionic_series,
    hp_from_basis, planep_series,
};
use gl11_vacuum::schur::Partition;
use gl11_vacuum::ss_vectors::{series, symbol, Family};
use gl11_vacuum::susy::{
    affine_generators_ac, cancellation_check, chevalley, conjecture_probe, injectivity_spotcheck,
    products_of_degree, ConjectureKind, D_apply, ProbeParams, SusyAlphabet,
};

#[derive(Parser)]
#[command(name = "gl11", version, about = "Invariants of the gl(1|1) vacuum module, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Degree cap (internal degree, z-degree or q-order depending on the command)
    #[arg(long, global = true)]
    deg: Option<u32>,
    #[arg(long, global = true)]
    k: Option<u32>,
    #[arg(long, global = true)]
    n: Option<u32>,
    #[arg(long, global = true)]
    m: Option<u32>,
    /// h, b or s
    #[arg(long, global = true)]
    family: Option<Family>,
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = acceptance::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Symbols and z-series of the h/b/s families with invariance verdicts
    Ssvec,
    /// Check whether a polynomial is annihilated by all E_ij[r], r >= 0
    Invariance { poly: String },
    /// Basis elements of degree <= --deg built from Y(n, lambda), or the
    /// decomposition of a given polynomial over the Y(n, lambda)
    Basis { poly: Option<String> },
    /// The generating series A(z_1..z_n; t_0..t_{n-1}) and its checks
    Aseries,
    /// The four Hilbert-Poincare series side by side
    Hp,
    /// Plane partitions over the (m,n)-hook
    Pp,
    /// chi_{m,n} against a direct count of hook diagrams
    Chi,
    /// f_{m,n} against plane-partition counts
    Fmn,
    /// Projection to the u/v polynomial algebra
    Chevalley { poly: Option<String> },
    /// The cancellation operator D
    Cancel { poly: Option<String> },
    /// Exploratory evidence for canc_3_4, hp_3_2 or chev_4_4
    Probe { kind: String },
    /// Run acceptance criteria: all, ssvec, basis, qseries, susy, a name or a number
    Accept {
        #[arg(default_value = "all")]
        suite: String,
    },
}

// Writes to stdout, ignoring a closed pipe.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

enum Failure {
    Check(String),
    Usage(String),
}

type Outcome = Result<bool, Failure>;

impl From<gl11_vacuum::Error> for Failure {
    fn from(e: gl11_vacuum::Error) -> Self {
        match e {
            gl11_vacuum::Error::Parse(_)
            | gl11_vacuum::Error::InvalidArgument(_)
            | gl11_vacuum::Error::UnknownVariable(_)
            | gl11_vacuum::Error::ModeOutOfRange { .. } => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn emit(cli: &Cli, value: Value, text: impl FnOnce() -> String) {
    if cli.json {
        say!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        say!("{}", text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = Gl11::standard();
    let result = match &cli.command {
        Command::Ssvec => ssvec(&cli, g),
        Command::Invariance { poly } => invariance(&cli, g, poly),
        Command::Basis { poly } => basis(&cli, g, poly.as_deref()),
        Command::Aseries => aseries(&cli, g),
        Command::Hp => hp(&cli),
        Command::Pp => pp(&cli),
        Command::Chi => chi(&cli),
        Command::Fmn => fmn(&cli),
        Command::Chevalley { poly } => chevalley_cmd(&cli, g, poly.as_deref()),
        Command::Cancel { poly } => cancel(&cli, g, poly.as_deref()),
        Command::Probe { kind } => probe(&cli, g, kind),
        Command::Accept { suite } => accept(&cli, g, suite),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn ssvec(cli: &Cli, g: &Gl11) -> Outcome {
    let k = cli.k.unwrap_or(2);
    if k == 0 {
        return Err(Failure::Usage("--k must be at least 1".into()));
    }
    let cap = cli.deg.unwrap_or(3);
    let families = cli.family.map(|f| vec![f]).unwrap_or(Family::ALL.to_vec());
    let mut rows = Vec::new();
    let mut all = true;
    for family in families {
        let sym = symbol(g, family, k)?;
        let ser = series(g, family, k, cap)?;
        let mut coeffs = Vec::new();
        for (e, c) in ser.collect_in(&[g.z(1)]) {
            let inv = g.is_invariant(&c).invariant;
            all &= inv;
            coeffs.push((e[0], c, inv));
        }
        let inv = g.is_invariant(&sym).invariant;
        all &= inv;
        rows.push((family, sym, inv, coeffs));
    }
    let value = json!(rows
        .iter()
        .map(|(f, s, inv, cs)| json!({
            "family": f.to_string(),
            "k": k,
            "symbol": s.to_string(),
            "invariant": inv,
            "series": cs.iter().map(|(r, c, i)| json!({"z": r, "coefficient": c.to_string(), "invariant": i})).collect::<Vec<_>>(),
        }))
        .collect::<Vec<_>>());
    emit(cli, value, || {
        let mut out = String::new();
        for (f, s, inv, cs) in &rows {
            out += &format!("{f}_{k} = {s}    invariant: {inv}\n");
            for (r, c, i) in cs {
                out += &format!("  z^{r}: {c}    invariant: {i}\n");
            }
        }
        out.trim_end().to_string()
    });
    Ok(all)
}

fn invariance(cli: &Cli, g: &Gl11, poly: &str) -> Outcome {
    let p = g.parse(poly)?;
    let rep = g.is_invariant(&p);
    let witness = rep.witness.as_ref().map(|(op, img)| (op.to_string(), img.to_string()));
    emit(
        cli,
        json!({"poly": p.to_string(), "invariant": rep.invariant, "witness": witness}),
        || match &witness {
            None => "invariant".into(),
            Some((op, img)) => format!("not invariant: {op} gives {img}"),
        },
    );
    Ok(rep.invariant)
}

fn basis(cli: &Cli, g: &Gl11, poly: Option<&str>) -> Outcome {
    if let Some(text) = poly {
        let p = g.parse(text)?;
        let dec = decompose(g, &p)?;
        emit(cli, dec.to_json(), || {
            dec.terms
                .iter()
                .map(|(y, c)| format!("Y({}, {}) * ({c})", y.n, y.lambda))
                .collect::<Vec<_>>()
                .join("\n")
        });
        return Ok(true);
    }
    let n = cli.n.unwrap_or(1);
    let deg = cli.deg.unwrap_or(6);
    if n * (n + 1) > deg {
        return Err(Failure::Usage(format!("n = {n} needs --deg >= {}", n * (n + 1))));
    }
    let mut rows = Vec::new();
    let mut ok = true;
    let room = deg - n * (n + 1);
    for lw in 0..=room {
        for lambda in Partition::all(lw, Some(n as usize), None) {
            for k in exponent_vectors(n, room - lw) {
                let e = basis_element(g, n, &lambda, &k)?;
                let lead = leading_component_check(g, n, &lambda, &e)?;
                let inv = g.is_invariant(&e).invariant;
                ok &= lead && inv;
                rows.push((lambda.clone(), k.clone(), basis_degree(n, &lambda, &k), e, inv && lead));
            }
        }
    }
    let value = json!(rows
        .iter()
        .map(|(l, k, d, e, v)| json!({"n": n, "lambda": l, "k": k, "degree": d, "element": e.to_string(), "verified": v}))
        .collect::<Vec<_>>());
    emit(cli, value, || {
        rows.iter()
            .map(|(l, k, d, e, v)| format!("n={n} lambda={l} k={k:?} degree {d} verified {v}: {e}"))
            .collect::<Vec<_>>()
            .join("\n")
    });
    Ok(ok)
}

/// `k` with `sum (i+1) k_i <= budget`, `n` entries.
fn exponent_vectors(n: u32, budget: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|k| {
                let used: u32 = k.iter().enumerate().map(|(j, &e)| (j as u32 + 1) * e).sum();
                (0..=(budget - used) / (i + 1)).map(move |e| {
                    let mut k2 = k.clone();
                    k2.push(e);
                    k2
                })
            })
            .collect();
    }
    out
}

fn aseries(cli: &Cli, g: &Gl11) -> Outcome {
    let n = cli.n.unwrap_or(1);
    let deg = cli.deg.unwrap_or(6);
    if deg < n {
        return Err(Failure::Usage(format!("--deg must be at least n = {n}")));
    }
    let caps = SeriesCaps::for_internal_degree(n, deg);
    let a = A_series(g, n, &caps)?;
    let bad = coefficients_invariant(g, n, &a);
    let fact_caps = SeriesCaps::new(caps.z.min(4), caps.t.min(2));
    let fact = factorization_check(g, n, &fact_caps)?;
    let coeffs = series_coefficients(g, n, &a);
    let value = json!({
        "n": n,
        "internal_degree": deg,
        "terms": a.len(),
        "coefficients": coeffs.iter().map(|(e, c)| json!({"exponents": e, "coefficient": c.to_string()})).collect::<Vec<_>>(),
        "invariant": bad.is_none(),
        "factorization": fact.holds,
    });
    emit(cli, value, || {
        let mut out = format!("A(n={n}) to internal degree {deg}: {} terms\n", a.len());
        for (e, c) in coeffs.iter().take(12) {
            out += &format!("  {e:?}: {c}\n");
        }
        if coeffs.len() > 12 {
            out += &format!("  ... {} more coefficients\n", coeffs.len() - 12);
        }
        out += &format!("all coefficients invariant: {}\n", bad.is_none());
        out += &format!("factorization (z <= {}, t <= {}): {}", fact_caps.z, fact_caps.t, fact.holds);
        out
    });
    Ok(bad.is_none() && fact.holds)
}

fn hp(cli: &Cli) -> Outcome {
    let d = cli.deg.unwrap_or(10);
    let planep = planep_series(d);
    let ferm = fermionic_series(d);
    let basis = hp_from_basis(d);
    let brute: Vec<u128> = (0..=d).map(|v| enumerate_pp(1, 1, v)).collect();
    let equal = (0..=d).all(|v| {
        let b = num_bigint::BigInt::from(brute[v as usize]);
        &b == planep.coeff(v) && &b == ferm.coeff(v) && &b == basis.coeff(v)
    });
    let value = json!({
        "order": d,
        "product": planep.to_json()["coefficients"],
        "fermionic": ferm.to_json()["coefficients"],
        "basis": basis.to_json()["coefficients"],
        "plane_partitions": brute.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "equal": equal,
    });
    emit(cli, value, || {
        let mut out = format!("{:>4} {:>10} {:>10} {:>10} {:>10}\n", "N", "product", "fermionic", "basis", "count");
        for v in 0..=d {
            out += &format!(
                "{v:>4} {:>10} {:>10} {:>10} {:>10}\n",
                planep.coeff(v),
                ferm.coeff(v),
                basis.coeff(v),
                brute[v as usize]
            );
        }
        out += &format!("equal: {equal}");
        out
    });
    Ok(equal)
}

fn hook_params(cli: &Cli) -> (u32, u32, u32) {
    (cli.m.unwrap_or(1), cli.n.unwrap_or(1), cli.deg.unwrap_or(8))
}

fn pp(cli: &Cli) -> Outcome {
    let (m, n, d) = hook_params(cli);
    let counts: Vec<u128> = (0..=d).map(|v| enumerate_pp(m, n, v)).collect();
    let value = json!({"m": m, "n": n, "counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>()});
    emit(cli, value, || {
        let mut out = format!("plane partitions over the ({m},{n})-hook: {counts:?}");
        if d <= 4 {
            for p in enumerate_pp_list(m, n, d) {
                out += &format!("\n  {:?}", p.layers.iter().map(|l| l.to_string()).collect::<Vec<_>>());
            }
        }
        out
    });
    Ok(true)
}

fn chi(cli: &Cli) -> Outcome {
    let (m, n, d) = hook_params(cli);
    let series = chi_mn(m, n, d);
    let counts: Vec<u64> = (0..=d).map(|v| count_hook_diagrams(m, n, v)).collect();
    let equal = (0..=d).all(|v| *series.coeff(v) == num_bigint::BigInt::from(counts[v as usize]));
    let value = json!({"m": m, "n": n, "chi": series.to_json(), "counts": counts, "equal": equal});
    emit(cli, value, || format!("chi_{{{m},{n}}} = {series}\ncounts: {counts:?}\nequal: {equal}"));
    Ok(equal)
}

fn fmn(cli: &Cli) -> Outcome {
    let (m, n, d) = hook_params(cli);
    let f = f_mn(m, n, d)?;
    let counts: Vec<u128> = (0..=d).map(|v| enumerate_pp(m, n, v)).collect();
    let equal = (0..=d).all(|v| *f.coeff(v) == num_bigint::BigInt::from(counts[v as usize]));
    let value = json!({"m": m, "n": n, "f": f.to_json(), "counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "equal": equal});
    emit(cli, value, || format!("f_{{{m},{n}}} = {f}\ncounts: {counts:?}\nequal: {equal}"));
    Ok(equal)
}

fn chevalley_cmd(cli: &Cli, g: &Gl11, poly: Option<&str>) -> Outcome {
    let s = SusyAlphabet::for_gl11(g);
    if let Some(text) = poly {
        let img = chevalley(g, &s, &g.parse(text)?)?;
        emit(cli, json!({"image": img.to_string(), "terms": img.to_json()}), || img.to_string());
        return Ok(true);
    }
    let k_max = cli.k.unwrap_or(5);
    let deg = cli.deg.unwrap_or(6);
    let mut images = Vec::new();
    for k in 1..=k_max {
        images.push((k, chevalley(g, &s, &symbol(g, Family::H, k)?)?));
    }
    let rep = injectivity_spotcheck(g, deg)?;
    let value = json!({
        "h_images": images.iter().map(|(k, p)| json!({"k": k, "image": p.to_string()})).collect::<Vec<_>>(),
        "injectivity": rep,
    });
    emit(cli, value, || {
        let mut out = String::new();
        for (k, p) in &images {
            out += &format!("h_{k} -> {p}\n");
        }
        for (d, count, rank) in &rep.per_degree {
            out += &format!("degree {d}: {count} basis elements, image rank {rank}\n");
        }
        out += &format!("full rank: {}", rep.full_rank);
        out
    });
    Ok(rep.full_rank)
}

fn cancel(cli: &Cli, g: &Gl11, poly: Option<&str>) -> Outcome {
    if let Some(text) = poly {
        let p = g.parse(text)?;
        let d = D_apply(g, &p)?;
        let ok = cancellation_check(g, &p)?;
        emit(
            cli,
            json!({"D": d.to_string(), "lowest_c0_exponent": d.lowest_c0_exponent(), "cancellation": ok}),
            || format!("D p = {d}\ncancellation: {ok}"),
        );
        return Ok(ok);
    }
    let deg = cli.deg.unwrap_or(6);
    let gens = affine_generators_ac(g, deg)?;
    let mut per_degree = Vec::new();
    let mut ok = true;
    for d in 0..=deg {
        let products = products_of_degree(&gens, d, &g.one());
        let mut pass = 0;
        for p in &products {
            if cancellation_check(g, p)? {
                pass += 1;
            }
        }
        ok &= pass == products.len();
        per_degree.push((d, products.len(), pass));
    }
    let value = json!({"per_degree": per_degree, "all_pass": ok});
    emit(cli, value, || {
        let mut out = String::new();
        for (d, n, p) in &per_degree {
            out += &format!("degree {d}: {p}/{n} generator products pass\n");
        }
        out.trim_end().to_string()
    });
    Ok(ok)
}

fn probe(cli: &Cli, g: &Gl11, kind: &str) -> Outcome {
    let kind: ConjectureKind = kind.parse().map_err(|e: gl11_vacuum::Error| Failure::Usage(e.to_string()))?;
    let params = ProbeParams {
        m: cli.m.unwrap_or(1),
        n: cli.n.unwrap_or(1),
        max_degree: cli.deg.unwrap_or(4),
    };
    let rep = conjecture_probe(g, kind, params)?;
    // a report, not a verdict: always print JSON
    say!("{}", serde_json::to_string_pretty(&rep).expect("serializable"));
    Ok(true)
}

fn accept(cli: &Cli, g: &Gl11, suite: &str) -> Outcome {
    let ids = acceptance::suite(suite).ok_or_else(|| Failure::Usage(format!("unknown suite `{suite}`")))?;
    let mut outcomes = Vec::new();
    for id in ids {
        let o = acceptance::run_criterion(g, id, cli.seed);
        if !cli.json {
            say!("{o}");
        }
        outcomes.push(o);
    }
    let ok = outcomes.iter().all(|o| o.passed);
    if cli.json {
        say!("{}", serde_json::to_string_pretty(&json!({"criteria": outcomes, "passed": ok})).expect("serializable"));
    } else {
        say!("{}", if ok { "all passed" } else { "FAILED" });
    }
    Ok(ok)
}
