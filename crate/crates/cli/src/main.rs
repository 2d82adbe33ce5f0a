use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csm_core::chernaffine::{affine_ssm_loc, AffineLocCache};
use csm_core::chernfinite::{
    projrich_ssm_recursive, pushforward_gp, richardson_csm, LocTable, SchubertTables,
};
use csm_core::positroid::{enumerate_pd, f_tilde};
use csm_core::symra::Format as ValueFormat;
use csm_core::verify::{verify_suite, Suite, VerifyRange};
use csm_core::weylperm::{
    bruhat_leq, ext_p_bruhat, poset_export, AffinePerm, ExtAlgorithm, FinitePerm, ParabolicData, TieBreak,
};
use csm_core::{CsmError, Limits};

#[derive(Parser)]
#[command(name = "csm", version, about = "Equivariant CSM and Segre-MacPherson classes in type A")]
struct Cli {
    /// Allow guards above the built-in limits.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    /// Override a guard, e.g. `--guard pipe_cells=16`. Repeatable.
    #[arg(long = "guard", value_name = "NAME=VALUE", global = true)]
    guards: Vec<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print F̃_f for a bounded affine permutation.
    Ffunc(PositroidArgs),
    /// List the pipe dreams of a bounded affine permutation.
    Pipedreams(PositroidArgs),
    /// Extended parabolic Bruhat order, or affine Bruhat order with --f/--g.
    Bruhat(BruhatArgs),
    /// Print localizations.
    Localize(LocalizeArgs),
    /// Run a named identity suite.
    Verify(VerifyArgs),
    /// DOT digraph of the single-step relations.
    Poset(PosetArgs),
}

#[derive(Args)]
struct PositroidArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Window, 1-based and comma separated.
    #[arg(long)]
    window: String,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct ParabolicArgs {
    /// Simple reflections generating W_P, comma separated.
    #[arg(long, conflicts_with = "lambda")]
    parabolic: Option<String>,
    /// Dominant cocharacter, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Cover,
    Coset,
    Affine,
}

#[derive(Args)]
struct BruhatArgs {
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    par: ParabolicArgs,
    #[arg(long)]
    u: Option<String>,
    #[arg(long)]
    w: Option<String>,
    /// Affine elements, compared in the Bruhat order of the extended affine group.
    #[arg(long, allow_hyphen_values = true, requires = "g")]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, value_enum, default_value = "cover")]
    algorithm: Algorithm,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Csm,
    Ssm,
    CsmOpp,
    SsmOpp,
    Richardson,
    Projected,
    Affine,
}

#[derive(Args)]
struct LocalizeArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    u: Option<String>,
    #[arg(long)]
    w: Option<String>,
    #[command(flatten)]
    par: ParabolicArgs,
    /// Affine element f (projected and affine kinds).
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Affine fixed points g, separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Translation weights μ for g = t_μ, separated by `;`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "g")]
    mu: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// ybe, thm41, cor43, thm36, thm62, thm75 or duality.
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Run the single instance with this id.
    #[arg(long)]
    only: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct PosetArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    par: ParabolicArgs,
}

enum Failure {
    Usage(String),
    Verification,
    Compute(CsmError),
}

impl From<CsmError> for Failure {
    fn from(e: CsmError) -> Failure {
        match e {
            CsmError::InvalidWindow(_)
            | CsmError::InvalidPermutation(_)
            | CsmError::InvalidCocharacter(_)
            | CsmError::Parse(_)
            | CsmError::SizeGuard { .. }
            | CsmError::UnknownSuite(_)
            | CsmError::AmbientMismatch(..)
            | CsmError::IndexOutOfRange { .. }
            | CsmError::NoReadingPermutation(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other),
        }
    }
}

type Out = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn limits_from(cli: &Cli) -> Result<Limits, Failure> {
    let mut l = Limits::DEFAULT;
    for g in &cli.guards {
        let (name, value) = g
            .split_once('=')
            .ok_or_else(|| usage(format!("guard `{g}` is not NAME=VALUE")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("guard `{g}`: bad value")))?;
        let slot = match name.trim() {
            "schubert_n" => &mut l.schubert_n,
            "projrich_n" => &mut l.projrich_n,
            "poset_n" => &mut l.poset_n,
            "pipe_cells" => &mut l.pipe_cells,
            "specialize_n" => &mut l.specialize_n,
            "coloring_len" => &mut l.coloring_len,
            other => return Err(usage(format!("unknown guard `{other}`"))),
        };
        if value > *slot && !cli.unsafe_limits {
            return Err(usage(format!(
                "guard {name}={value} exceeds the built-in limit {}; pass --unsafe-limits to raise it",
                *slot
            )));
        }
        *slot = value;
    }
    Ok(l)
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| usage(format!("{what}: `{t}` is not an integer")))
        })
        .collect()
}

fn window(s: &str, n: Option<usize>) -> Result<AffinePerm, Failure> {
    let w = parse_ints(s, "window")?;
    if let Some(n) = n {
        if w.len() != n {
            return Err(usage(format!("window {s} has {} entries, expected n = {n}", w.len())));
        }
    }
    Ok(AffinePerm::from_window(w)?)
}

fn perm(s: &str, n: Option<usize>) -> Result<FinitePerm, Failure> {
    let p = FinitePerm::parse(s)?;
    if let Some(n) = n {
        if p.n() != n {
            return Err(usage(format!("permutation {p} is not in S_{n}")));
        }
    }
    Ok(p)
}

fn parabolic(args: &ParabolicArgs, n: Option<usize>) -> Result<Option<ParabolicData>, Failure> {
    if let Some(l) = &args.lambda {
        let p = ParabolicData::from_lambda(parse_ints(l, "lambda")?)?;
        if n.is_some_and(|n| n != p.n()) {
            return Err(usage("lambda length differs from n"));
        }
        return Ok(Some(p));
    }
    if let Some(s) = &args.parabolic {
        let n = n.ok_or_else(|| usage("--parabolic needs --n"))?;
        let set: Vec<usize> = parse_ints(s, "parabolic")?
            .into_iter()
            .map(|i| usize::try_from(i).map_err(|_| usage("simple indices are positive")))
            .collect::<Result<_, _>>()?;
        return Ok(Some(ParabolicData::from_simple_set(n, set)?));
    }
    Ok(None)
}

fn value_format(f: Format) -> Result<ValueFormat, Failure> {
    match f {
        Format::Plain => Ok(ValueFormat::Plain),
        Format::Latex => Ok(ValueFormat::Latex),
        Format::Json => Ok(ValueFormat::Json),
        Format::Dot => Err(usage("dot output is only available for bruhat and poset")),
    }
}

fn show_table(t: &LocTable, f: Format) -> Out {
    let vf = value_format(f)?;
    Ok(match f {
        Format::Json => t.to_json().to_string(),
        Format::Latex => t
            .iter()
            .map(|(p, v)| format!("{} & {} \\\\", p.key(), v.serialize(vf)))
            .collect::<Vec<_>>()
            .join("\n"),
        _ => t
            .iter()
            .map(|(p, v)| format!("{}: {}", p.key(), v.serialize(vf)))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn ffunc(a: &PositroidArgs, limits: &Limits) -> Out {
    let f = window(&a.window, Some(a.n))?;
    let ft = f_tilde(&f, a.k, limits)?;
    Ok(match a.format {
        Format::Plain => ft.factored_plain(),
        Format::Latex => ft.factored_latex(),
        Format::Json => ft.to_json().to_string(),
        Format::Dot => return Err(usage("ffunc has no dot output")),
    })
}

fn pipedreams(a: &PositroidArgs, limits: &Limits) -> Out {
    let f = window(&a.window, Some(a.n))?;
    let pds = enumerate_pd(&f, a.k, limits)?;
    Ok(match a.format {
        Format::Json => serde_json::Value::Array(pds.iter().map(|p| p.to_json()).collect()).to_string(),
        Format::Plain => pds.iter().map(|p| p.to_ascii()).collect::<Vec<_>>().join("\n\n"),
        _ => return Err(usage("pipedreams prints plain or json")),
    })
}

fn bruhat(a: &BruhatArgs, limits: &Limits) -> Out {
    if let (Some(f), Some(g)) = (&a.f, &a.g) {
        let f = window(f, a.n)?;
        let g = window(g, Some(f.n()))?;
        return Ok(bruhat_leq(&f, &g).to_string());
    }
    let p = match parabolic(&a.par, a.n)? {
        Some(p) => p,
        None => {
            let n = a.n.ok_or_else(|| usage("bruhat needs --n, --lambda or --f/--g"))?;
            ParabolicData::from_simple_set(n, [])?
        }
    };
    if a.format == Format::Dot {
        return Ok(poset_export(&p, limits)?.trim_end().to_string());
    }
    let (Some(u), Some(w)) = (&a.u, &a.w) else {
        return Err(usage("bruhat needs --u and --w, or --format dot"));
    };
    let u = perm(u, Some(p.n()))?;
    let w = perm(w, Some(p.n()))?;
    let alg = match a.algorithm {
        Algorithm::Cover => ExtAlgorithm::CoverBfs,
        Algorithm::Coset => ExtAlgorithm::CosetReduce,
        Algorithm::Affine => ExtAlgorithm::Affine,
    };
    let ans = ext_p_bruhat(&u, &w, &p, alg);
    Ok(match a.format {
        Format::Json => serde_json::json!({"u": u.to_string(), "w": w.to_string(), "leq": ans}).to_string(),
        _ => ans.to_string(),
    })
}

fn localize(a: &LocalizeArgs, limits: &Limits) -> Out {
    match a.kind {
        Kind::Csm | Kind::Ssm | Kind::CsmOpp | Kind::SsmOpp => {
            let w = a
                .w
                .as_deref()
                .or(a.u.as_deref())
                .ok_or_else(|| usage("this kind needs --w"))?;
            let w = perm(w, a.n)?;
            let t = SchubertTables::compute(w.n(), limits)?;
            let table = match a.kind {
                Kind::Csm => t.csm_cell(&w),
                Kind::Ssm => t.ssm_cell(&w),
                Kind::CsmOpp => t.csm_opp(&w),
                _ => t.ssm_opp(&w),
            };
            show_table(table, a.format)
        }
        Kind::Richardson => {
            let (Some(u), Some(w)) = (&a.u, &a.w) else {
                return Err(usage("richardson needs --u and --w"));
            };
            let u = perm(u, a.n)?;
            let w = perm(w, Some(u.n()))?;
            let t = SchubertTables::compute(u.n(), limits)?;
            let r = richardson_csm(&t, &u, &w);
            match parabolic(&a.par, Some(u.n()))? {
                Some(p) => show_table(&pushforward_gp(&r, &p)?, a.format),
                None => show_table(&r, a.format),
            }
        }
        Kind::Projected => {
            let p = parabolic(&a.par, a.n)?.ok_or_else(|| usage("projected needs --lambda"))?;
            let f = match (&a.window, &a.u, &a.w) {
                (Some(s), None, None) => window(s, Some(p.n()))?,
                (None, Some(u), Some(w)) => {
                    AffinePerm::from_uw(&perm(u, Some(p.n()))?, &perm(w, Some(p.n()))?, p.lambda())?
                }
                _ => return Err(usage("projected needs either --window or both --u and --w")),
            };
            let table = projrich_ssm_recursive(&p, TieBreak::Smallest, limits)?;
            let t = table
                .get(&f)
                .ok_or_else(|| usage(format!("{f} is not of the form u t_λ w^-1 for this λ")))?;
            show_table(t, a.format)
        }
        Kind::Affine => {
            let f = window(a.window.as_deref().ok_or_else(|| usage("affine needs --window"))?, a.n)?;
            let gs: Vec<AffinePerm> = match (&a.g, &a.mu) {
                (Some(g), _) => g.split(';').map(|s| window(s, Some(f.n()))).collect::<Result<_, _>>()?,
                (None, Some(mu)) => mu
                    .split(';')
                    .map(|s| {
                        let m = parse_ints(s, "mu")?;
                        if m.len() != f.n() {
                            return Err(usage(format!("mu {s} has the wrong length")));
                        }
                        Ok(AffinePerm::translation(&m))
                    })
                    .collect::<Result<_, _>>()?,
                (None, None) => return Err(usage("affine needs --g or --mu")),
            };
            let vf = value_format(a.format)?;
            let cache = AffineLocCache::new(f.n());
            let vals = gs
                .iter()
                .map(|g| Ok((g, affine_ssm_loc(&f, g, &cache)?)))
                .collect::<Result<Vec<_>, CsmError>>()?;
            Ok(match a.format {
                Format::Json => {
                    let entries: serde_json::Map<String, serde_json::Value> =
                        vals.iter().map(|(g, v)| (g.to_string(), v.to_json())).collect();
                    serde_json::json!({"f": f.to_string(), "entries": entries}).to_string()
                }
                _ => vals
                    .iter()
                    .map(|(g, v)| format!("{g}: {}", v.serialize(vf)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
    }
}

fn verify(a: &VerifyArgs, limits: &Limits, out: &mut Vec<String>) -> Result<bool, Failure> {
    let suite: Suite = a.suite.parse()?;
    let range = VerifyRange {
        n: a.n,
        k: a.k,
        lambda: a.lambda.as_deref().map(|l| parse_ints(l, "lambda")).transpose()?,
        only: a.only.clone(),
    };
    let report = verify_suite(suite, &range, limits)?;
    match a.format {
        Format::Json => out.push(report.to_json().to_string()),
        Format::Plain => {
            for o in &report.outcomes {
                match &o.failure {
                    None => out.push(format!("PASS {suite} {}", o.id)),
                    Some(d) => {
                        out.push(format!("FAIL {suite} {}: {d}", o.id));
                        out.push(format!("  replay: {}", report.replay(&o.id)));
                    }
                }
            }
            let bad = report.failures().count();
            out.push(format!(
                "{suite}: {} instances, {} passed, {bad} failed",
                report.outcomes.len(),
                report.outcomes.len() - bad
            ));
        }
        _ => return Err(usage("verify prints plain or json")),
    }
    Ok(report.passed())
}

fn run(cli: &Cli) -> Result<Vec<String>, Failure> {
    let limits = limits_from(cli)?;
    let mut out = Vec::new();
    match &cli.cmd {
        Cmd::Ffunc(a) => out.push(ffunc(a, &limits)?),
        Cmd::Pipedreams(a) => out.push(pipedreams(a, &limits)?),
        Cmd::Bruhat(a) => out.push(bruhat(a, &limits)?),
        Cmd::Localize(a) => out.push(localize(a, &limits)?),
        Cmd::Poset(a) => {
            let p = parabolic(&a.par, Some(a.n))?.map_or_else(|| ParabolicData::from_simple_set(a.n, []), Ok)?;
            out.push(poset_export(&p, &limits)?.trim_end().to_string());
        }
        Cmd::Verify(a) => {
            if !verify(a, &limits, &mut out)? {
                print_lines(&out);
                return Err(Failure::Verification);
            }
        }
    }
    Ok(out)
}

fn print_lines(lines: &[String]) {
    let mut stdout = std::io::stdout().lock();
    for l in lines {
        let _ = writeln!(stdout, "{l}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = std::env::var("CSM_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match run(&cli) {
        Ok(lines) => {
            print_lines(&lines);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
