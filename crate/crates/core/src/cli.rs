//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::identitylab::{run_all, IdentityOutcome};
use crate::linalg::degree_cap_from_env;
use crate::localfield::{scalar_parse, LocalScalar, PrimeConfig, Valuation};
use crate::orders::{
    build_dual, build_primal, check_conditions, discriminant_valuation, dualize, koch_matrix, orders_equal,
    pairing_matrix, params_equivalent, parse_theta, pth_power_witness, verify_hopf_order, AxiomStatus, ConditionReport,
    DualFamilyParams, Family, OrderFile, OrderPresentation, OrdersError, ThetaMatrix, VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hopforge",
    version,
    about = "Hopf orders in K[C_p^n] and its dual over F_p(t)"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Bound on polynomial degrees during elimination (default: HOPFORGE_DEGREE_CAP or 4096)
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an order file for a named family and report its parameter conditions
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated `key=value` list: i1, i2, i3, mu, alpha, beta
        #[arg(long, default_value = "")]
        params: String,
        /// `identity`, or rows separated by `;` with entries separated by `,`
        #[arg(long)]
        theta: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the Hopf order axioms for an order file
    Verify { file: PathBuf },
    /// Write the linear dual of an order as an explicit basis
    Dualize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a dual-side order and a group-side order are dual to each other
    DualizePair { dual: PathBuf, primal: PathBuf },
    /// Survey a parameter grid
    Enumerate {
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest exponent i_k in the grid
        #[arg(long, default_value_t = 1)]
        grid_bound: i64,
        /// Comma-separated scalar literals used for mu, alpha and beta
        #[arg(long, default_value = "0,1,1/t")]
        pool: String,
        /// Run full verification where it is expensive (p >= 3 with n = 3)
        #[arg(long)]
        deep: bool,
    },
    /// Run the truncated-exponential identity suite
    Identities {
        /// Prime to test; all of 2, 3, 5 when omitted
        #[arg(long)]
        p: Option<u32>,
    },
}

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let ctx = Ctx {
        format: cli.global.format,
        cap: cli.global.degree_cap.unwrap_or_else(degree_cap_from_env),
    };
    let result = match cli.command {
        Command::Construct {
            family,
            p,
            n,
            params,
            theta,
            output,
        } => cmd_construct(&ctx, &family, p, n, &params, theta.as_deref(), output.as_deref(), out),
        Command::Verify { file } => cmd_verify(&ctx, &file, out),
        Command::Dualize { file, output } => cmd_dualize(&ctx, &file, output.as_deref(), out),
        Command::DualizePair { dual, primal } => cmd_dualize_pair(&ctx, &dual, &primal, out),
        Command::Enumerate {
            p,
            n,
            grid_bound,
            pool,
            deep,
        } => cmd_enumerate(&ctx, p, n, grid_bound, &pool, deep, out),
        Command::Identities { p } => cmd_identities(&ctx, p, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

struct Ctx {
    format: Format,
    cap: usize,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

impl From<OrdersError> for CliError {
    fn from(e: OrdersError) -> Self {
        input_error(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        input_error(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("output types always serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn read_order(path: &Path, ctx: &Ctx) -> Result<(OrderFile, OrderPresentation), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let file = OrderFile::parse(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let pres = file
        .to_presentation()
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?
        .with_degree_cap(ctx.cap);
    Ok((file, pres))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Parses `i1=2,mu=1/t,...`; absent keys are zero.
pub fn parse_params(text: &str, cfg: PrimeConfig) -> Result<DualFamilyParams, String> {
    let mut params = DualFamilyParams::zero(cfg);
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| format!("parameter `{item}` is not of the form key=value"))?;
        let (key, value) = (key.trim(), value.trim());
        let int = || {
            value
                .parse::<i64>()
                .map_err(|_| format!("`{key}` needs an integer, got `{value}`"))
        };
        let scalar = || scalar_parse(value, cfg).map_err(|e| e.to_string());
        match key {
            "i1" => params.i1 = int()?,
            "i2" => params.i2 = int()?,
            "i3" => params.i3 = int()?,
            "mu" => params.mu = scalar()?,
            "alpha" => params.alpha = scalar()?,
            "beta" => params.beta = scalar()?,
            other => return Err(format!("unknown parameter `{other}`")),
        }
    }
    Ok(params)
}

fn parse_theta_arg(text: &str, cfg: PrimeConfig, n: Option<usize>) -> Result<ThetaMatrix, CliError> {
    if text.trim() == "identity" {
        let n = n.unwrap_or(3);
        if !(1..=crate::groupalg::MAX_RANK).contains(&n) {
            return Err(input_error(format!("rank {n} is out of range")));
        }
        return Ok(ThetaMatrix::identity(cfg, n));
    }
    let rows: Vec<Vec<String>> = text
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().to_string()).collect())
        .collect();
    let theta = parse_theta(&rows, cfg)?;
    if let Some(n) = n {
        if n != theta.rank() {
            return Err(input_error(format!("theta is {0}x{0} but --n is {n}", theta.rank())));
        }
    }
    Ok(theta)
}

#[derive(Serialize)]
struct KochReport {
    integral: bool,
    a: Vec<Vec<LocalScalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    offending: Option<(usize, usize, Valuation)>,
}

#[derive(Serialize)]
struct ConstructOutput {
    order: OrderFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    conditions: Option<ConditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    koch: Option<KochReport>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    ctx: &Ctx,
    family: &str,
    p: u32,
    n: Option<usize>,
    params: &str,
    theta: Option<&str>,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult {
    let family = Family::parse(family).ok_or_else(|| input_error(format!("unknown family `{family}`")))?;
    let cfg = PrimeConfig::new(p).map_err(|e| input_error(e.to_string()))?;
    let result = if family == Family::Koch {
        let theta = theta.ok_or_else(|| input_error("--family koch needs --theta"))?;
        let theta = parse_theta_arg(theta, cfg, n)?;
        let km = koch_matrix(&theta)?;
        if let Some((row, col, v)) = km.offending {
            return Err(input_error(format!(
                "Koch matrix is not integral: entry ({row}, {col}) has valuation {v}"
            )));
        }
        ConstructOutput {
            order: OrderFile::koch(&theta),
            conditions: None,
            koch: Some(KochReport {
                integral: true,
                a: km.a.to_rows(),
                offending: None,
            }),
        }
    } else {
        let rank = family.rank().expect("named families have a fixed rank");
        if n.is_some_and(|n| n != rank) {
            return Err(input_error(format!("family {} has rank {rank}", family.name())));
        }
        let params = parse_params(params, cfg).map_err(input_error)?;
        ConstructOutput {
            order: OrderFile::family(family, cfg, rank, &params),
            conditions: Some(check_conditions(&params, rank)),
            koch: None,
        }
    };
    // the file must load back before it is handed out
    result.order.to_presentation()?.with_degree_cap(ctx.cap);
    if let Some(path) = output {
        write_file(path, &result.order.to_json())?;
    }
    match ctx.format {
        Format::Json => emit_json(out, &result)?,
        Format::Table => {
            if let Some(c) = &result.conditions {
                writeln!(out, "{:<44} {:>6} {:>6}  holds", "condition", "v", "bound")?;
                writeln!(out, "{:<44} {:>6} {:>6}  {}", "i's >= 0", "", "", c.nonnegative)?;
                for check in c.main.iter().chain(&c.mild) {
                    writeln!(
                        out,
                        "{:<44} {:>6} {:>6}  {}",
                        check.name,
                        check.valuation.to_string(),
                        check.bound,
                        check.holds
                    )?;
                }
            }
            if let Some(k) = &result.koch {
                writeln!(out, "Koch matrix integral: {}", k.integral)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PthPower {
    generator: usize,
    integral: bool,
    /// Nonzero coordinates `(monomial exponent, value, valuation)`.
    coords: Vec<(String, LocalScalar, Valuation)>,
}

#[derive(Serialize)]
struct VerifyOutput {
    all_pass: bool,
    report: VerificationReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pth_powers: Vec<PthPower>,
}

fn pth_powers(pres: &OrderPresentation) -> Result<Vec<PthPower>, OrdersError> {
    let Some(gens) = pres.generators() else {
        return Ok(vec![]);
    };
    let Ok(basis) = pres.basis() else {
        return Ok(vec![]);
    };
    (1..=gens.len())
        .map(|k| {
            let coords = pth_power_witness(pres, k)?;
            Ok(PthPower {
                generator: k,
                integral: coords.iter().all(LocalScalar::is_integral),
                coords: coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (basis.label(m), c.clone(), c.valuation()))
                    .collect(),
            })
        })
        .collect()
}

fn cmd_verify(ctx: &Ctx, path: &Path, out: &mut dyn Write) -> CliResult {
    let (_, pres) = read_order(path, ctx)?;
    let report = verify_hopf_order(&pres)?;
    let result = VerifyOutput {
        all_pass: report.all_pass(),
        pth_powers: pth_powers(&pres)?,
        report,
    };
    match ctx.format {
        Format::Json => emit_json(out, &result)?,
        Format::Table => {
            let r = &result.report;
            for (name, status) in [
                ("algebra_closed", r.algebra_closed),
                ("comult_closed", r.comult_closed),
                ("counit_integral", r.counit_integral),
                ("antipode_closed", r.antipode_closed),
                ("generically_full", r.generically_full),
            ] {
                writeln!(out, "{name:<18} {}", status_name(status))?;
            }
            for w in &r.witnesses {
                writeln!(
                    out,
                    "witness: {} -> {} = {} (v = {})",
                    w.source, w.coordinate, w.value, w.valuation
                )?;
            }
            for pp in result.pth_powers.iter().filter(|pp| !pp.integral) {
                writeln!(out, "generator {} to the p has non-integral coordinates", pp.generator)?;
            }
        }
    }
    Ok(if result.all_pass { EXIT_OK } else { EXIT_FAILURE })
}

fn status_name(s: AxiomStatus) -> &'static str {
    match s {
        AxiomStatus::Pass => "pass",
        AxiomStatus::Fail => "fail",
        AxiomStatus::Skipped => "skipped",
    }
}

fn cmd_dualize(ctx: &Ctx, path: &Path, output: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let (_, pres) = read_order(path, ctx)?;
    let dual = dualize(&pres)?;
    let file = OrderFile::explicit(&dual);
    let text = file.to_json();
    match output {
        Some(path) => write_file(path, &text)?,
        None => writeln!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DualizePairOutput {
    /// Every basis element of the dual-side order lies in the dual of the group-side order.
    contained: bool,
    equal: bool,
    disc_dual: Option<i64>,
    disc_group_dual: Option<i64>,
    unimodular: bool,
    confirmed: bool,
}

fn cmd_dualize_pair(ctx: &Ctx, dual_path: &Path, primal_path: &Path, out: &mut dyn Write) -> CliResult {
    use crate::groupalg::Ambient;
    let (_, dual) = read_order(dual_path, ctx)?;
    let (_, primal) = read_order(primal_path, ctx)?;
    if dual.ambient() != Ambient::Dual || primal.ambient() != Ambient::Group {
        return Err(input_error("expected a dual-side order followed by a group-side order"));
    }
    if dual.shape() != primal.shape() {
        return Err(input_error("orders have different p or n"));
    }
    let primal_dual = dualize(&primal)?;
    let mut contained = true;
    for m in &dual.basis()?.elements {
        contained &= primal_dual.contains(m)?.inside;
    }
    let equal = contained && orders_equal(&dual, &primal_dual)?;
    let disc = |pres: &OrderPresentation| match discriminant_valuation(pres) {
        Ok(v) => Ok(Some(v)),
        Err(OrdersError::DegenerateTraceForm) => Ok(None),
        Err(e) => Err(e),
    };
    let disc_dual = disc(&dual)?;
    let disc_group_dual = disc(&primal_dual)?;
    let unimodular = pairing_matrix(&dual, &primal)?.is_unimodular();
    let confirmed = contained && unimodular && disc_dual.is_some() && disc_dual == disc_group_dual;
    let result = DualizePairOutput {
        contained,
        equal,
        disc_dual,
        disc_group_dual,
        unimodular,
        confirmed,
    };
    match ctx.format {
        Format::Json => emit_json(out, &result)?,
        Format::Table => {
            let d = |v: Option<i64>| v.map_or("degenerate".to_string(), |v| v.to_string());
            writeln!(out, "contained        {}", result.contained)?;
            writeln!(out, "equal            {}", result.equal)?;
            writeln!(out, "disc(dual)       {}", d(result.disc_dual))?;
            writeln!(out, "disc(group^*)    {}", d(result.disc_group_dual))?;
            writeln!(out, "unimodular       {}", result.unimodular)?;
            writeln!(out, "confirmed        {}", result.confirmed)?;
        }
    }
    Ok(if confirmed { EXIT_OK } else { EXIT_FAILURE })
}

/// One grid point of `enumerate`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EnumerateRow {
    pub i: Vec<i64>,
    pub mu: Option<String>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub conditions: u32,
    pub main: bool,
    pub mild: bool,
    pub dual: &'static str,
    pub primal: &'static str,
    pub disc: Option<i64>,
    pub class: usize,
}

struct GridPoint {
    i: Vec<i64>,
    params: DualFamilyParams,
}

fn grid(n: usize, bound: i64, pool: &[LocalScalar], cfg: PrimeConfig) -> Vec<GridPoint> {
    let zero = LocalScalar::zero(cfg);
    let one_or_pool = |used: bool| if used { pool.to_vec() } else { vec![zero.clone()] };
    let mut points = Vec::new();
    let exps = |used: bool| if used { (0..=bound).collect::<Vec<_>>() } else { vec![0] };
    for i1 in 0..=bound {
        for i2 in exps(n >= 2) {
            for i3 in exps(n >= 3) {
                for mu in one_or_pool(n >= 2) {
                    for alpha in one_or_pool(n >= 3) {
                        for beta in one_or_pool(n >= 3) {
                            let i = [i1, i2, i3];
                            points.push(GridPoint {
                                i: i[..n].to_vec(),
                                params: DualFamilyParams::new(i, mu.clone(), alpha.clone(), beta),
                            });
                        }
                    }
                }
            }
        }
    }
    points
}

fn verify_status(pres: Result<OrderPresentation, OrdersError>, cap: usize) -> Result<&'static str, OrdersError> {
    let report = verify_hopf_order(&pres?.with_degree_cap(cap))?;
    Ok(if report.all_pass() { "pass" } else { "fail" })
}

/// Evaluates the grid; the row order is the grid order.
pub fn enumerate_rows(
    p: u32,
    n: usize,
    bound: i64,
    pool: &[LocalScalar],
    deep: bool,
    cap: usize,
) -> Result<Vec<EnumerateRow>, OrdersError> {
    let cfg = PrimeConfig::new(p)?;
    let points = grid(n, bound, pool, cfg);
    let full = deep || p == 2 || n < 3;
    let mut rows: Vec<EnumerateRow> = points
        .par_iter()
        .map(|pt| {
            let report = check_conditions(&pt.params, n);
            let (dual, primal) = if full {
                (
                    verify_status(build_dual(&pt.params, n), cap)?,
                    verify_status(build_primal(&pt.params, n), cap)?,
                )
            } else {
                ("skipped", "skipped")
            };
            let disc = discriminant_valuation(&build_dual(&pt.params, n)?.with_degree_cap(cap)).ok();
            let s = |x: &LocalScalar, used: bool| used.then(|| x.to_string());
            Ok(EnumerateRow {
                i: pt.i.clone(),
                mu: s(&pt.params.mu, n >= 2),
                alpha: s(&pt.params.alpha, n >= 3),
                beta: s(&pt.params.beta, n >= 3),
                conditions: report.bitmask(),
                main: report.main_holds(),
                mild: report.mild_holds(),
                dual,
                primal,
                disc,
                class: 0,
            })
        })
        .collect::<Result<_, OrdersError>>()?;
    let classes = equivalence_classes(&points, n);
    for (row, class) in rows.iter_mut().zip(classes) {
        row.class = class;
    }
    Ok(rows)
}

/// Union-find over rows sharing exponents and `mu` whose `(alpha, beta)`
/// are equivalent; each row gets the smallest index in its class.
fn equivalence_classes(points: &[GridPoint], n: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    if n == 3 {
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                let (pa, pb) = (&points[a].params, &points[b].params);
                if points[a].i != points[b].i || pa.mu != pb.mu {
                    continue;
                }
                if params_equivalent(
                    (&pa.alpha, &pa.beta),
                    (&pb.alpha, &pb.beta),
                    &pa.mu,
                    [pa.i1, pa.i2, pa.i3],
                ) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    (0..points.len()).map(|x| find(&mut parent, x)).collect()
}

fn cmd_enumerate(ctx: &Ctx, p: u32, n: usize, bound: i64, pool: &str, deep: bool, out: &mut dyn Write) -> CliResult {
    let cfg = PrimeConfig::new(p).map_err(|e| input_error(e.to_string()))?;
    if !(1..=3).contains(&n) {
        return Err(input_error(format!("families are defined for n = 1, 2, 3, not {n}")));
    }
    if bound < 0 {
        return Err(input_error("--grid-bound must be nonnegative"));
    }
    let pool: Vec<LocalScalar> = pool
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| scalar_parse(s, cfg))
        .collect::<Result<_, _>>()
        .map_err(|e| input_error(e.to_string()))?;
    if pool.is_empty() {
        return Err(input_error("parameter pool is empty"));
    }
    let rows = enumerate_rows(p, n, bound, &pool, deep, ctx.cap)?;
    match ctx.format {
        Format::Json => emit_json(out, &rows)?,
        Format::Table => {
            writeln!(
                out,
                "{:<10} {:<10} {:<10} {:<10} {:>5} {:<8} {:<8} {:>5} {:>5}",
                "i", "mu", "alpha", "beta", "cond", "dual", "primal", "disc", "class"
            )?;
            for r in &rows {
                let i: Vec<String> = r.i.iter().map(|x| x.to_string()).collect();
                let o = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "{:<10} {:<10} {:<10} {:<10} {:>5} {:<8} {:<8} {:>5} {:>5}",
                    i.join(","),
                    o(&r.mu),
                    o(&r.alpha),
                    o(&r.beta),
                    format!("{:b}", r.conditions),
                    r.dual,
                    r.primal,
                    r.disc.map_or("-".into(), |d| d.to_string()),
                    r.class
                )?;
            }
        }
    }
    let broken = rows
        .iter()
        .any(|r| (r.main && r.dual == "fail") || (r.main && r.mild && r.primal == "fail"));
    Ok(if broken { EXIT_FAILURE } else { EXIT_OK })
}

fn cmd_identities(ctx: &Ctx, p: Option<u32>, out: &mut dyn Write) -> CliResult {
    let primes = match p {
        Some(p) => vec![p],
        None => vec![2, 3, 5],
    };
    let mut outcomes: Vec<IdentityOutcome> = Vec::new();
    for p in primes {
        let cfg = PrimeConfig::new(p).map_err(|e| input_error(e.to_string()))?;
        outcomes.extend(run_all(cfg).map_err(|e| CliError {
            code: EXIT_FAILURE,
            message: e.to_string(),
        })?);
    }
    match ctx.format {
        Format::Json => emit_json(out, &outcomes)?,
        Format::Table => {
            for o in &outcomes {
                writeln!(
                    out,
                    "p={} {:<42} {}",
                    o.p,
                    o.name,
                    if o.holds { "pass" } else { "fail" }
                )?;
            }
        }
    }
    Ok(if outcomes.iter().all(|o| o.holds) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}
