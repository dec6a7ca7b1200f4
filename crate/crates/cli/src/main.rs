mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use charp_core::bsr::{
    bsr_ideal, bsr_principal, bsr_wh_monomial_route, verify_certificates, verify_ts, wh_filter,
    BsrError,
};
use charp_core::cfun::{ideal_roots, nullstellensatz_check, parse_cfun, Basis, CfunError};
use charp_core::corpus::{render_plain, run_all, run_criterion};
use charp_core::invariants::{
    default_e_max, f_jumping_exponents, f_threshold, nu_report, test_ideal, InvariantError,
};
use charp_core::poly::{max_var_index, parse_poly_with_prefix};
use charp_core::zp::parse_q;
use charp_core::{Ideal, MonomialIdeal, PAdicRational, Polynomial, Prime};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use config::JobFile;
use render::{csv, csv_flat, plain_flat, str_of, Format};

#[derive(Parser, Debug)]
#[command(
    name = "charp",
    version,
    about = "Exact invariants of singularities in characteristic p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// The prime p.
    #[arg(short = 'p', long = "prime", global = true)]
    prime: Option<u64>,

    /// Number of variables (inferred from the input when omitted).
    #[arg(short = 'n', long = "nvars", global = true)]
    nvars: Option<usize>,

    /// Comma-separated positive weights.
    #[arg(short = 'w', long = "weights", global = true, value_delimiter = ',')]
    weights: Option<Vec<u64>>,

    /// Comma-separated exponents of the reference ideal (x1^a1, ..., xn^an).
    #[arg(short = 'a', global = true, value_delimiter = ',')]
    a: Option<Vec<u32>>,

    #[arg(long, global = true)]
    emax: Option<u32>,

    #[arg(long, global = true)]
    nmax: Option<u64>,

    #[arg(long = "denom-bound", global = true)]
    denom_bound: Option<u64>,

    #[arg(long, global = true)]
    echeck: Option<u32>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Job file of key = value lines; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ν-invariants of an ideal with respect to m(a) at levels 1..emax.
    Nu {
        /// Generators, as separate arguments or comma-separated.
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// F-threshold bracket and certified value.
    Fthreshold {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Test ideal τ(f^c).
    Testideal {
        f: String,
        /// The exponent c, e.g. 5/6.
        #[arg(short = 'c', long = "exponent")]
        c: String,
        /// First level tried.
        #[arg(long, default_value_t = 1)]
        estart: u32,
    },
    /// F-jumping exponents of a polynomial in (0, 1].
    Fjump { f: String },
    /// Bernstein-Sato roots of a polynomial or ideal.
    Bsr {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Weighted homogeneous route: roots, congruence filter and certificates.
    WhAnalyze { f: String },
    /// Thom-Sebastiani laws for an ideal in x-variables and one in y-variables.
    TsVerify {
        #[arg(long, required = true)]
        left: Vec<String>,
        #[arg(long, required = true)]
        right: Vec<String>,
    },
    /// Locally constant functions on Z_p^r built from B and L atoms.
    Cfun {
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Level e of the functions.
        #[arg(short = 'e', long = "level", default_value_t = 1)]
        level: u32,
        /// Number of p-adic arguments.
        #[arg(short = 'r', long = "arity", default_value_t = 1)]
        arity: usize,
        /// Evaluation point, comma-separated rationals for arity above one.
        #[arg(long = "at")]
        at: Vec<String>,
        #[arg(long)]
        vanishing: bool,
        /// Also print coordinates in the B or L basis.
        #[arg(long, value_parser = ["B", "L"])]
        coords: Option<String>,
    },
    /// Runs the bundled corpus through every acceptance check.
    Corpus {
        #[arg(long)]
        criterion: Option<u32>,
    },
}

enum Failure {
    Input(String),
    Math(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Math(_) => 1,
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Unstabilized { .. } => Failure::Math(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<BsrError> for Failure {
    fn from(e: BsrError) -> Self {
        match e {
            BsrError::HypothesisFailure { .. } => Failure::Math(e.to_string()),
            BsrError::Invariant(inner) => inner.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<CfunError> for Failure {
    fn from(e: CfunError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Job {
    prime: Option<Prime>,
    nvars: Option<usize>,
    weights: Option<Vec<u64>>,
    a: Option<Vec<u32>>,
    emax: Option<u32>,
    nmax: Option<u64>,
    denom_bound: Option<u64>,
    echeck: Option<u32>,
    format: Format,
}

impl Job {
    fn resolve(cli: &Cli) -> Result<Job, Failure> {
        let file = match &cli.config {
            Some(path) => JobFile::load(path).map_err(Failure::Input)?,
            None => JobFile::default(),
        };
        let prime_raw = match cli.prime {
            Some(p) => Some(p),
            None => file.number("prime").map_err(Failure::Input)?,
        };
        let prime = prime_raw
            .map(|p| Prime::new(p).map_err(|e| Failure::Input(e.to_string())))
            .transpose()?;
        let format = match cli.format {
            Some(f) => f,
            None => file
                .string("format")
                .map(|s| s.parse())
                .transpose()
                .map_err(Failure::Input)?
                .unwrap_or(Format::Json),
        };
        let or = |flag: Option<u64>, key: &str| -> Result<Option<u64>, Failure> {
            match flag {
                Some(v) => Ok(Some(v)),
                None => file.number(key).map_err(Failure::Input),
            }
        };
        let job = Job {
            prime,
            nvars: match cli.nvars {
                Some(n) => Some(n),
                None => file.number("nvars").map_err(Failure::Input)?,
            },
            weights: match &cli.weights {
                Some(w) => Some(w.clone()),
                None => file.list("weights").map_err(Failure::Input)?,
            },
            a: match &cli.a {
                Some(a) => Some(a.clone()),
                None => file.list("a").map_err(Failure::Input)?,
            },
            emax: or(cli.emax.map(u64::from), "emax")?.map(|v| v as u32),
            nmax: or(cli.nmax, "nmax")?,
            denom_bound: or(cli.denom_bound, "denom_bound")?,
            echeck: or(cli.echeck.map(u64::from), "echeck")?.map(|v| v as u32),
            format,
        };
        if job.emax == Some(0) {
            return Err(Failure::Input("--emax must be at least 1".into()));
        }
        if job.denom_bound == Some(0) {
            return Err(Failure::Input("--denom-bound must be at least 1".into()));
        }
        if job.weights.as_ref().is_some_and(|w| w.contains(&0)) {
            return Err(Failure::Input("weights must be positive".into()));
        }
        Ok(job)
    }

    fn prime(&self) -> Result<Prime, Failure> {
        self.prime
            .ok_or_else(|| Failure::Input("a prime is required (-p)".into()))
    }

    fn emax(&self) -> Result<u32, Failure> {
        Ok(self.emax.unwrap_or(default_e_max(self.prime()?)))
    }
}

fn split_gens(args: &[String]) -> Vec<String> {
    args.iter()
        .flat_map(|a| a.split(','))
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_polys(
    args: &[String],
    prime: Prime,
    nvars: Option<usize>,
    prefix: &str,
) -> Result<(Vec<Polynomial>, usize), Failure> {
    let gens = split_gens(args);
    if gens.is_empty() {
        return Err(Failure::Input("no polynomial given".into()));
    }
    let n = nvars.unwrap_or_else(|| {
        gens.iter()
            .map(|g| max_var_index(g, prefix))
            .max()
            .unwrap_or(0)
            .max(1)
    });
    if n == 0 {
        return Err(Failure::Input(
            "the number of variables must be positive".into(),
        ));
    }
    let polys = gens
        .iter()
        .map(|g| {
            parse_poly_with_prefix(g, n, prime, prefix)
                .map_err(|e| Failure::Input(format!("'{g}': {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((polys, n))
}

fn parse_ideal(
    args: &[String],
    prime: Prime,
    nvars: Option<usize>,
    prefix: &str,
) -> Result<Ideal, Failure> {
    let (polys, n) = parse_polys(args, prime, nvars, prefix)?;
    Ok(Ideal::from_generators(prime, n, polys))
}

fn parse_single(arg: &str, job: &Job) -> Result<Polynomial, Failure> {
    let (mut polys, _) = parse_polys(&[arg.to_string()], job.prime()?, job.nvars, "x")?;
    if polys.len() != 1 {
        return Err(Failure::Input("expected a single polynomial".into()));
    }
    Ok(polys.remove(0))
}

fn reference_ideal(job: &Job, ideal: &Ideal) -> Result<Ideal, Failure> {
    let n = ideal.nvars();
    let a = job.a.clone().unwrap_or_else(|| vec![1; n]);
    if a.len() != n {
        return Err(Failure::Input(format!(
            "-a needs {n} exponents, got {}",
            a.len()
        )));
    }
    if a.contains(&0) {
        return Err(Failure::Input("-a exponents must be positive".into()));
    }
    Ok(Ideal::monomial(
        ideal.prime(),
        MonomialIdeal::pure_powers(&a),
    ))
}

fn weights_for(job: &Job, n: usize) -> Result<Option<Vec<u64>>, Failure> {
    match &job.weights {
        Some(w) if w.len() != n => Err(Failure::Input(format!(
            "-w needs {n} weights, got {}",
            w.len()
        ))),
        other => Ok(other.clone()),
    }
}

/// A finished computation: the JSON value plus its tabular forms.
struct Report {
    value: Value,
    csv: Option<String>,
    plain: Option<String>,
    status: u8,
}

impl Report {
    fn new(value: Value) -> Self {
        Report {
            value,
            csv: None,
            plain: None,
            status: 0,
        }
    }

    fn render(mut self, format: Format) -> (String, u8) {
        if let Value::Object(m) = &mut self.value {
            m.entry("warnings").or_insert_with(|| json!([]));
        }
        let text = match format {
            Format::Json => render::json(&self.value),
            Format::Csv => self.csv.take().unwrap_or_else(|| csv_flat(&self.value)),
            Format::Plain => self.plain.take().unwrap_or_else(|| plain_flat(&self.value)),
        };
        (text, self.status)
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn cmd_nu(job: &Job, gens: &[String]) -> Result<Report, Failure> {
    let ideal = parse_ideal(gens, job.prime()?, job.nvars, "x")?;
    let a = reference_ideal(job, &ideal)?;
    let report = nu_report(&ideal, &a, job.emax()?)?;
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            let v = to_value(r);
            vec![
                r.e.to_string(),
                r.nu.to_string(),
                str_of(&v["lower"]),
                str_of(&v["upper"]),
            ]
        })
        .collect();
    let mut plain = String::new();
    for r in &rows {
        plain.push_str(&format!(
            "e={} nu={} bracket=({}, {}]\n",
            r[0], r[1], r[2], r[3]
        ));
    }
    Ok(Report {
        csv: Some(csv(&["e", "nu", "lower", "upper"], &rows)),
        plain: Some(plain),
        ..Report::new(to_value(&report))
    })
}

fn cmd_fthreshold(job: &Job, gens: &[String]) -> Result<Report, Failure> {
    let ideal = parse_ideal(gens, job.prime()?, job.nvars, "x")?;
    let a = reference_ideal(job, &ideal)?;
    let w = weights_for(job, ideal.nvars())?;
    let est = f_threshold(&ideal, &a, job.emax()?, job.denom_bound, w.as_deref())?;
    let v = to_value(&est);
    let mut plain = format!(
        "bracket: ({}, {}]\n",
        str_of(&v["lower"]),
        str_of(&v["upper"])
    );
    match est.certification {
        Some(_) => plain.push_str(&format!(
            "threshold: {} ({})\n",
            str_of(&v["certified"]),
            str_of(&v["certification"])
        )),
        None => plain.push_str("threshold: uncertified\n"),
    }
    for w in &est.warnings {
        plain.push_str(&format!("warning: {w}\n"));
    }
    Ok(Report {
        plain: Some(plain),
        ..Report::new(v)
    })
}

fn cmd_testideal(job: &Job, f: &str, c: &str, estart: u32) -> Result<Report, Failure> {
    let f = parse_single(f, job)?;
    let c = parse_q(c).map_err(|e| Failure::Input(e.to_string()))?;
    if estart == 0 {
        return Err(Failure::Input("--estart must be at least 1".into()));
    }
    let t = test_ideal(&f, &c, estart)?;
    let mut v = to_value(&t);
    v["exponent"] = json!(charp_core::zp::fmt_q(&c));
    let plain = format!(
        "tau = <{}> (stable at e = {})\n",
        t.ideal.to_strings().join(", "),
        t.stable_at
    );
    Ok(Report {
        plain: Some(plain),
        ..Report::new(v)
    })
}

fn cmd_fjump(job: &Job, f: &str) -> Result<Report, Failure> {
    let f = parse_single(f, job)?;
    let rep = f_jumping_exponents(&f, job.emax()?, job.denom_bound)?;
    let v = to_value(&rep);
    let exps: Vec<String> = v["exponents"]
        .as_array()
        .into_iter()
        .flatten()
        .map(str_of)
        .collect();
    let mut plain = format!("certified: {}\n", exps.join(", "));
    for w in &rep.warnings {
        plain.push_str(&format!("warning: {w}\n"));
    }
    let rows: Vec<Vec<String>> = v["windows"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|w| {
            vec![
                str_of(&w["n"]),
                str_of(&w["lower"]),
                str_of(&w["upper"]),
                if w["certified"].is_null() {
                    String::new()
                } else {
                    str_of(&w["certified"])
                },
            ]
        })
        .collect();
    Ok(Report {
        csv: Some(csv(&["n", "lower", "upper", "certified"], &rows)),
        plain: Some(plain),
        ..Report::new(v)
    })
}

fn roots_tables(v: &Value) -> (String, String) {
    let rows: Vec<Vec<String>> = v["roots"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| {
            let (num, den) = (str_of(&r["num"]), str_of(&r["den"]));
            let value = if den == "1" {
                num.clone()
            } else {
                format!("{num}/{den}")
            };
            vec![value, num, den]
        })
        .collect();
    let values: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    let mut plain = format!("roots: {}\n", values.join(", "));
    plain.push_str(&format!("method: {}\n", str_of(&v["method"])));
    for w in v["warnings"].as_array().into_iter().flatten() {
        plain.push_str(&format!("warning: {}\n", str_of(w)));
    }
    (csv(&["value", "num", "den"], &rows), plain)
}

fn cmd_bsr(job: &Job, gens: &[String]) -> Result<Report, Failure> {
    let ideal = parse_ideal(gens, job.prime()?, job.nvars, "x")?;
    let e = job.emax()?;
    let set = match ideal.generators().as_slice() {
        [f] => bsr_principal(f, e, job.denom_bound)?,
        _ => bsr_ideal(&ideal, e, job.nmax, job.denom_bound)?,
    };
    let v = to_value(&set);
    let (c, plain) = roots_tables(&v);
    Ok(Report {
        csv: Some(c),
        plain: Some(plain),
        ..Report::new(v)
    })
}

fn cmd_wh(job: &Job, f: &str) -> Result<Report, Failure> {
    let f = parse_single(f, job)?;
    let w = weights_for(job, f.nvars())?
        .ok_or_else(|| Failure::Input("wh-analyze needs weights (-w)".into()))?;
    let e_check = job.echeck.unwrap_or(2);
    let e_max = job.emax()?;
    let route = bsr_wh_monomial_route(&f, &w, e_check, Some(e_max))?;
    let roots: Vec<PAdicRational> = route.roots.roots.iter().map(|r| r.value.clone()).collect();
    let mut warnings = route.roots.warnings.clone();
    let mut filter = Vec::new();
    for r in &roots {
        let (ok, why) = wh_filter(r, &route.profile);
        if !ok {
            warnings.push(format!("{r} rejected by the congruence filter: {why}"));
        }
        filter.push(json!({"root": r.to_string(), "pass": ok, "reason": why}));
    }
    let certs = verify_certificates(&route.profile, &roots, e_max)?;
    for c in certs.checks.iter().filter(|c| c.value != 0) {
        warnings.push(format!(
            "certificate at e={} is {} at {}",
            c.e, c.value, c.root
        ));
    }
    let consistent = certs.pass && filter.iter().all(|x| x["pass"] == json!(true));
    let v = json!({
        "profile": to_value(&route.profile),
        "justification": to_value(&route.justification),
        "roots": to_value(&route.roots.roots),
        "method": to_value(&route.roots.method),
        "filter": filter,
        "certificates": to_value(&certs),
        "consistent": consistent,
        "warnings": warnings,
    });
    let (c, mut plain) = roots_tables(&v);
    plain.push_str(&format!(
        "filter and certificates: {}\n",
        if consistent { "PASS" } else { "FAIL" }
    ));
    Ok(Report {
        csv: Some(c),
        plain: Some(plain),
        status: if consistent { 0 } else { 1 },
        value: v,
    })
}

fn cmd_ts(job: &Job, left: &[String], right: &[String]) -> Result<Report, Failure> {
    let p = job.prime()?;
    let i = parse_ideal(left, p, None, "x")?;
    let j = parse_ideal(right, p, None, "y")?;
    let e = job.emax.unwrap_or(2);
    let n_max = job.nmax.unwrap_or(2 * p.pow(e));
    let rep = verify_ts(&i, &j, e, n_max)?;
    let mut v = to_value(&rep);
    let mut warnings = Vec::new();
    for (side, set) in [
        ("left", &rep.left_roots),
        ("right", &rep.right_roots),
        ("sum", &rep.sum_roots),
        ("product", &rep.product_roots),
    ] {
        warnings.extend(set.warnings.iter().map(|w| format!("{side}: {w}")));
    }
    v["warnings"] = json!(warnings);
    let mut plain = format!("{}\n", if rep.pass { "PASS" } else { "FAIL" });
    for l in &rep.levels {
        plain.push_str(&format!(
            "e={}: sumset {}, union {}\n",
            l.e,
            if l.sumset_holds { "holds" } else { "fails" },
            if l.union_holds { "holds" } else { "fails" }
        ));
    }
    plain.push_str(&format!(
        "roots: sum law {}, union law {}\n",
        if rep.root_sum_holds { "holds" } else { "fails" },
        if rep.root_union_holds {
            "holds"
        } else {
            "fails"
        }
    ));
    for f in &rep.failures {
        plain.push_str(&format!("failed: {f}\n"));
    }
    Ok(Report {
        plain: Some(plain),
        status: if rep.pass { 0 } else { 1 },
        ..Report::new(v)
    })
}

fn cmd_cfun(
    job: &Job,
    exprs: &[String],
    level: u32,
    arity: usize,
    at: &[String],
    vanishing: bool,
    coords: Option<&str>,
) -> Result<Report, Failure> {
    let p = job.prime()?;
    if level == 0 || arity == 0 {
        return Err(Failure::Input("level and arity must be positive".into()));
    }
    let fs = exprs
        .iter()
        .map(|t| parse_cfun(t, p, level, arity))
        .collect::<Result<Vec<_>, _>>()?;
    let points = at
        .iter()
        .map(|s| {
            let xs = s
                .split(',')
                .map(|x| {
                    PAdicRational::parse(p, x.trim())
                        .map_err(|e| Failure::Input(format!("'{x}': {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if xs.len() != arity {
                return Err(Failure::Input(format!(
                    "point '{s}' needs {arity} coordinates"
                )));
            }
            Ok(xs)
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let mut out = Vec::new();
    let mut plain = String::new();
    for (text, f) in exprs.iter().zip(&fs) {
        let mut entry = json!({"expr": text, "function": to_value(f)});
        plain.push_str(&format!("{text}: {:?}\n", f.values()));
        let mut vals = Vec::new();
        for x in &points {
            let y = f.eval(x)?;
            let shown: Vec<String> = x.iter().map(|c| c.to_string()).collect();
            plain.push_str(&format!("  at ({}) = {y}\n", shown.join(", ")));
            vals.push(json!({"point": shown, "value": y}));
        }
        entry["at"] = json!(vals);
        if vanishing {
            let z = f.vanishing_set();
            plain.push_str(&format!("  vanishing: {z:?}\n"));
            entry["vanishing"] = json!(z);
        }
        if let Some(b) = coords {
            let basis = if b == "B" { Basis::B } else { Basis::L };
            let c = f.coordinates(basis);
            plain.push_str(&format!("  {b}-coordinates: {c:?}\n"));
            entry["coordinates"] = json!({"basis": b, "values": c});
        }
        out.push(entry);
    }
    let mut v = json!({"functions": out});
    if fs.len() > 1 {
        let zeros = ideal_roots(&fs)?;
        let exact = nullstellensatz_check(&fs)?;
        plain.push_str(&format!(
            "common zeros: {zeros:?}\nnullstellensatz: {exact}\n"
        ));
        v["common_zeros"] = json!(zeros);
        v["nullstellensatz"] = json!(exact);
    }
    Ok(Report {
        plain: Some(plain),
        ..Report::new(v)
    })
}

fn cmd_corpus(criterion: Option<u32>) -> Result<Report, Failure> {
    let results = match criterion {
        Some(id) => vec![run_criterion(id)
            .ok_or_else(|| Failure::Input(format!("no criterion {id} in the corpus")))?],
        None => run_all(),
    };
    let pass = results.iter().all(|r| r.pass);
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            vec![
                r.id.to_string(),
                r.name.clone(),
                if r.pass { "PASS".into() } else { "FAIL".into() },
                r.checks.to_string(),
            ]
        })
        .collect();
    Ok(Report {
        csv: Some(csv(&["id", "name", "result", "checks"], &rows)),
        plain: Some(render_plain(&results)),
        status: if pass { 0 } else { 1 },
        value: json!({"criteria": to_value(&results), "pass": pass}),
    })
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let job = Job::resolve(cli)?;
    let report = match &cli.command {
        Command::Nu { gens } => cmd_nu(&job, gens)?,
        Command::Fthreshold { gens } => cmd_fthreshold(&job, gens)?,
        Command::Testideal { f, c, estart } => cmd_testideal(&job, f, c, *estart)?,
        Command::Fjump { f } => cmd_fjump(&job, f)?,
        Command::Bsr { gens } => cmd_bsr(&job, gens)?,
        Command::WhAnalyze { f } => cmd_wh(&job, f)?,
        Command::TsVerify { left, right } => cmd_ts(&job, left, right)?,
        Command::Cfun {
            exprs,
            level,
            arity,
            at,
            vanishing,
            coords,
        } => cmd_cfun(
            &job,
            exprs,
            *level,
            *arity,
            at,
            *vanishing,
            coords.as_deref(),
        )?,
        Command::Corpus { criterion } => cmd_corpus(*criterion)?,
    };
    Ok(report.render(job.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, status)) => {
            print!("{text}");
            ExitCode::from(status)
        }
        Err(f) => {
            let (Failure::Input(msg) | Failure::Math(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
