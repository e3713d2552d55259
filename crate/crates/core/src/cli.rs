//! Command-line front end: `compute`, `verify`, `oracle` and `table`.
//!
//! Exit codes: 0 success, 1 theorem failure or computation error, 2 conjecture
//! falsified, 3 resource guard exceeded, 64 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    poch, qbinom, AlgebraError, FactorRecord, FractionRecord, Monomial, Partition, QTFraction, QTLaurent, TermRecord,
    VarConvention,
};
use crate::oracle::{
    dvr_module, enumerate_submodules, hall_table, module_cotype, moebius_oracle, quot_zeta_oracle_inert_m1,
    saturating_subspace_count_oracle, saturation_zeta_oracle, write_csv, FieldSpec, Guard, CSV_VERSION, OracleError, OracleRecord,
};
use crate::qseries::{
    ag_multisum, br_multisum, g_skew, hall_g, infinite_sum, product_side, singlesum, SumFamily, SumKind, TSign,
};
use crate::verify::{counts_at, run_suite, suite, Ranges, CheckError, SUITES};
use crate::zeta::{
    closed_form_coh, coh_finitized, inert_m1_count, normalize_nuhat, nuhat_zero, reflection_check, rtilde_zeta,
    saturation_zeta, solomon_zeta, CountForm, NuhatForm, OrderFamily, OrderKind, Status, ZetaError,
};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qzeta", version, about = "Exact zeta functions of quadratic orders, q-series identities and submodule oracles")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Print `q`-exponents of records in `q` or in `q^-1`. Defaults to each formula's native variable.
    #[arg(long, value_enum, global = true)]
    var: Option<Var>,
    /// Omit wall-clock fields so identical invocations give identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Maximum number of candidate subspaces an enumeration may examine.
    #[arg(long, global = true, env = "QZETA_GUARD")]
    guard: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one formula exactly.
    Compute {
        #[arg(value_enum)]
        target: ComputeTarget,
        #[command(flatten)]
        params: Params,
    },
    /// Run a named identity suite.
    Verify {
        /// Suite name; omit together with --list to print the registry.
        suite: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        q: Option<Vec<u64>>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Brute-force enumeration over a small finite field.
    Oracle {
        #[arg(value_enum)]
        target: OracleTarget,
        #[command(flatten)]
        params: Params,
    },
    /// Evaluate a formula over a parameter grid.
    Table {
        #[arg(value_enum)]
        target: TableTarget,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Var {
    Q,
    Qinv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ComputeTarget {
    GSkew,
    HallG,
    AgMultisum,
    BrMultisum,
    Singlesum,
    InfiniteSum,
    ProductSide,
    SaturationZeta,
    RtildeZeta,
    SolomonZeta,
    CohInertM1,
    ClosedFormCoh,
    Nuhat0,
    Nuhat,
    Reflection,
    InertM1Count,
    Qbinom,
    Poch,
    Partition,
}

impl ComputeTarget {
    fn native_var(self) -> VarConvention {
        match self {
            ComputeTarget::CohInertM1
            | ComputeTarget::ClosedFormCoh
            | ComputeTarget::Nuhat0
            | ComputeTarget::Nuhat
            | ComputeTarget::Reflection => VarConvention::Qinv,
            _ => VarConvention::Q,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OracleTarget {
    /// Saturating `F_q`-subspaces of `F_{q^2}^n` of codimension r.
    SatCount,
    /// Saturation zeta coefficients of an order family.
    SatZeta,
    /// Low coefficients of the m = 1 inert lattice zeta.
    QuotZeta,
    /// Submodules of type mu in M(lambda).
    HallCount,
    /// Submodule counts of M(lambda) by (type, cotype).
    HallTable,
    /// Moebius value mu(W, M) for each cotype of W in M(lambda).
    Moebius,
    /// Number of submodules of M(lambda).
    Submodules,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableTarget {
    /// s = 0 values of one order family, both forms.
    Nuhat0,
    /// Saturating subspace counts, n and r.
    InertCounts,
    /// Lattice zeta coefficients of the m = 1 inert order at numeric q.
    CohSeries,
    /// Saturation zeta coefficients at numeric q.
    SatZeta,
}

#[derive(Args, Debug, Default, Clone, Serialize)]
struct Params {
    /// ramified | split | inert, or AG | Br for sum targets.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    /// Field size; a prime for most oracles.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    /// An integer, or a comma-separated tuple for g-skew.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    /// theorem | alternative (nuhat0), closed | alternating (inert-m1-count).
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    form: Option<String>,
    /// plus | minus: the sign of t in br-multisum.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<String>,
    /// Residue exponents for solomon-zeta, e.g. `1,1`.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    exponents: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    base_exp: Option<i64>,
    /// Pochhammer base `coeff,e_q,e_t`.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    step: Option<i64>,
    /// conjugate | complement | concat | duplicate | half-split.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    op: Option<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Algebra(AlgebraError::InvalidParameter(_)) => EXIT_USAGE,
            CliError::Oracle(OracleError::GuardExceeded { .. }) => EXIT_GUARD,
            CliError::Check(CheckError::Oracle(OracleError::GuardExceeded { .. })) => EXIT_GUARD,
            CliError::Oracle(
                OracleError::NotPrime(_)
                | OracleError::NotPrimePower(_)
                | OracleError::FieldTooLarge(_)
                | OracleError::RequiresPrimeField(_)
                | OracleError::RequiresQuadraticField(_),
            ) => EXIT_USAGE,
            _ => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl Params {
    fn need<T: Clone>(v: &Option<T>, flag: &str, target: &str) -> Result<T, CliError> {
        v.clone().ok_or_else(|| usage(format!("{target} requires --{flag}")))
    }

    fn n(&self, target: &str) -> Result<u32, CliError> {
        Self::need(&self.n, "n", target)
    }

    fn m(&self) -> u32 {
        self.m.unwrap_or(1)
    }

    fn order_family(&self, target: &str) -> Result<OrderFamily, CliError> {
        let kind: OrderKind = Self::need(&self.family, "family", target)?.parse()?;
        Ok(OrderFamily::new(kind, self.m())?)
    }

    fn sum_family(&self, target: &str) -> Result<SumFamily, CliError> {
        let kind: SumKind = Self::need(&self.family, "family", target)?.parse()?;
        Ok(SumFamily::new(kind, self.m())?)
    }

    fn partition(v: &Option<String>, flag: &str, target: &str) -> Result<Partition, CliError> {
        Ok(Self::need(v, flag, target)?.parse()?)
    }

    fn int(v: &Option<String>, flag: &str, target: &str) -> Result<i64, CliError> {
        let s = Self::need(v, flag, target)?;
        s.trim().parse().map_err(|_| usage(format!("--{flag} must be an integer, got '{s}'")))
    }

    fn tuple(v: &Option<String>, flag: &str, target: &str) -> Result<Vec<i64>, CliError> {
        Self::need(v, flag, target)?
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| usage(format!("--{flag}: bad entry '{x}'"))))
            .collect()
    }

    fn field(&self, target: &str) -> Result<FieldSpec, CliError> {
        let q = Self::need(&self.q, "q", target)?;
        Ok(FieldSpec::prime(u32::try_from(q).map_err(|_| usage("--q is too large"))?)?)
    }
}

/// Parses `args` and runs the command, writing to `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let guard = cli.guard.map(Guard).unwrap_or_default();
    match &cli.command {
        Command::Compute { target, params } => {
            compute(cli, *target, params, out)?;
            Ok(0)
        }
        Command::Verify { suite: name, list, m_max, n_max, order, q, k } => {
            if *list || name.is_none() {
                for s in SUITES {
                    writeln!(out, "{:14} {}", s.name, s.description)?;
                }
                return Ok(0);
            }
            let name = name.as_deref().expect("checked above");
            let s = suite(name).ok_or_else(|| usage(format!("unknown suite '{name}'")))?;
            let mut r: Ranges = s.defaults();
            r.guard = guard;
            if let Some(v) = m_max {
                r.m_max = *v;
            }
            if let Some(v) = n_max {
                r.n_max = *v;
            }
            if let Some(v) = order {
                r.order = *v;
            }
            if let Some(v) = q {
                r.q = v.clone();
            }
            if let Some(v) = k {
                r.k = *v;
            }
            let report = run_suite(s, &r, !cli.no_timing);
            match cli.format {
                Format::Json => writeln!(out, "{}", report.to_json())?,
                Format::Text => write!(out, "{}", report.to_text())?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["version", "check", "point", "status", "outcome", "witness", "value"])?;
                    for p in &report.results {
                        w.write_record([
                            CSV_VERSION.to_string(),
                            p.check.clone(),
                            p.point.to_string(),
                            p.status.to_string(),
                            serde_json::to_value(p.outcome).expect("enum").as_str().unwrap_or_default().to_string(),
                            p.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                            p.value.clone().unwrap_or_default(),
                        ])?;
                    }
                    w.flush()?;
                }
            }
            Ok(report.exit_code())
        }
        Command::Oracle { target, params } => {
            oracle(cli, *target, params, guard, out)?;
            Ok(0)
        }
        Command::Table { target, family, m_max, n_max, q, order } => {
            table(cli, *target, family.as_deref(), *m_max, *n_max, *q, *order, out)?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Computed {
    Laurent { terms: Vec<TermRecord> },
    Fraction(FractionRecord),
    Series { coeffs: Vec<String> },
    Reflection { holds: bool, witness: Option<TermRecord> },
    Partition { parts: Vec<u32> },
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    target: String,
    params: &'a Params,
    var: VarConvention,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<Status>,
    value: Computed,
    display: String,
}

fn target_name<T: ValueEnum>(t: T) -> String {
    t.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn series_display(coeffs: &[BigInt], var: &str) -> String {
    let p = QTLaurent::from_terms(coeffs.iter().enumerate().map(|(j, c)| match var {
        "q" => (j as i64, 0, c.clone()),
        _ => (0, j as i64, c.clone()),
    }));
    p.to_string()
}

fn compute(cli: &Cli, target: ComputeTarget, p: &Params, out: &mut dyn Write) -> Result<(), CliError> {
    let name = target_name(target);
    let var = match cli.var {
        Some(Var::Q) => VarConvention::Q,
        Some(Var::Qinv) => VarConvention::Qinv,
        None => target.native_var(),
    };
    let t = name.as_str();
    let mut status = None;
    let laurent = |x: QTLaurent| (Computed::Laurent { terms: x.to_records(var) }, x.to_string());
    let fraction = |x: QTFraction| (Computed::Fraction(x.to_record(var)), x.to_string());
    let (value, display) = match target {
        ComputeTarget::GSkew => laurent(g_skew(&Params::tuple(&p.r, "r", t)?, &Params::tuple(&p.s, "s", t)?)?),
        ComputeTarget::HallG => {
            laurent(hall_g(&Params::partition(&p.lambda, "lambda", t)?, &Params::partition(&p.mu, "mu", t)?))
        }
        ComputeTarget::AgMultisum => laurent(ag_multisum(p.m(), p.n(t)?)),
        ComputeTarget::BrMultisum => {
            let sign = match p.sign.as_deref().unwrap_or("plus") {
                "plus" | "+" => TSign::Plus,
                "minus" | "-" => TSign::Minus,
                other => return Err(usage(format!("--sign must be plus or minus, got '{other}'"))),
            };
            fraction(br_multisum(p.m(), p.n(t)?, sign))
        }
        ComputeTarget::Singlesum => fraction(singlesum(p.sum_family(t)?, p.n(t)?)),
        ComputeTarget::InfiniteSum | ComputeTarget::ProductSide => {
            let f = p.sum_family(t)?;
            let order = Params::need(&p.order, "order", t)?;
            let s = if target == ComputeTarget::InfiniteSum { infinite_sum(f, order) } else { product_side(f, order) };
            let coeffs = s.coeffs().to_vec();
            let display = series_display(&coeffs, "q");
            (Computed::Series { coeffs: coeffs.iter().map(|c| c.to_string()).collect() }, display)
        }
        ComputeTarget::SaturationZeta => laurent(saturation_zeta(p.order_family(t)?, p.n(t)?)),
        ComputeTarget::RtildeZeta => fraction(rtilde_zeta(p.order_family(t)?, p.n(t)?)),
        ComputeTarget::SolomonZeta => {
            let exps = match &p.exponents {
                None => p.order_family(t)?.residue_exponents(),
                Some(s) if s.trim().is_empty() => vec![],
                Some(_) => Params::tuple(&p.exponents, "exponents", t)?,
            };
            if exps.iter().any(|&e| e < 1) {
                return Err(usage("--exponents must be positive"));
            }
            fraction(solomon_zeta(&exps, p.n(t)?))
        }
        ComputeTarget::CohInertM1 => {
            if p.m() != 1 {
                return Err(ZetaError::NoClosedForm(OrderFamily::inert(p.m())).into());
            }
            fraction(coh_finitized(OrderFamily::inert(1), p.n(t)?)?)
        }
        ComputeTarget::ClosedFormCoh => {
            let c = closed_form_coh(p.order_family(t)?, p.n(t)?);
            status = Some(c.status);
            fraction(c.value)
        }
        ComputeTarget::Nuhat0 => {
            let form = match p.form.as_deref().unwrap_or("theorem") {
                "theorem" => NuhatForm::Theorem,
                "alternative" => NuhatForm::Alternative,
                other => return Err(usage(format!("--form must be theorem or alternative, got '{other}'"))),
            };
            laurent(nuhat_zero(p.order_family(t)?, p.n(t)?, form))
        }
        ComputeTarget::Nuhat | ComputeTarget::Reflection => {
            let f = p.order_family(t)?;
            let n = p.n(t)?;
            let z = if f == OrderFamily::inert(1) {
                coh_finitized(f, n)?
            } else {
                let c = closed_form_coh(f, n);
                status = Some(c.status);
                c.value
            };
            let nu = normalize_nuhat(&z, f, n)?;
            if target == ComputeTarget::Nuhat {
                laurent(nu)
            } else {
                let r = reflection_check(&nu, n, f.d());
                let witness = r.witness.as_ref().map(|(e, c)| {
                    let q = if var == VarConvention::Qinv { -e.q } else { e.q };
                    TermRecord { e_q: q, e_t: e.t, coeff: c.to_string() }
                });
                let display = if r.holds { "holds".to_string() } else { "fails".to_string() };
                (Computed::Reflection { holds: r.holds, witness }, display)
            }
        }
        ComputeTarget::InertM1Count => {
            let form = match p.form.as_deref().unwrap_or("closed") {
                "closed" => CountForm::Closed,
                "alternating" => CountForm::Alternating,
                other => return Err(usage(format!("--form must be closed or alternating, got '{other}'"))),
            };
            laurent(inert_m1_count(p.n(t)?, Params::int(&p.r, "r", t)?, form))
        }
        ComputeTarget::Qbinom => {
            let k = Params::need(&p.k, "k", t)? as i64;
            let base = p.base_exp.unwrap_or(1);
            if base == 0 {
                return Err(AlgebraError::ZeroStep.into());
            }
            laurent(qbinom(p.n(t)? as i64, k, base))
        }
        ComputeTarget::Poch => {
            let b = Params::tuple(&p.base, "base", t)?;
            let [c, eq, et] = b[..] else {
                return Err(usage("--base must be coeff,e_q,e_t"));
            };
            let step = Params::need(&p.step, "step", t)?;
            laurent(poch(Monomial::new(c, eq, et), step, p.n(t)? as i64)?)
        }
        ComputeTarget::Partition => {
            let lambda = Params::partition(&p.lambda, "lambda", t)?;
            let res = match p.op.as_deref().unwrap_or("conjugate") {
                "conjugate" => lambda.conjugate(),
                "complement" => lambda.complement(p.m(), p.n(t)?)?,
                "concat" => lambda.concat(&Params::partition(&p.mu, "mu", t)?),
                "duplicate" => lambda.duplicate(),
                "half-split" => lambda.half_split(),
                other => return Err(usage(format!("unknown partition op '{other}'"))),
            };
            (Computed::Partition { parts: res.parts().to_vec() }, res.to_string())
        }
    };
    match cli.format {
        Format::Text => writeln!(out, "{display}")?,
        Format::Json => {
            let o = ComputeOutput { target: name.clone(), params: p, var, status, value, display };
            writeln!(out, "{}", serde_json::to_string_pretty(&o).expect("serializable"))?;
        }
        Format::Csv => write_compute_csv(&value, out)?,
    }
    Ok(())
}

/// Columns `version,part,e_q,e_t,coeff,step,len`; `part` is `num`, `den`, `q` (series) or `part`.
fn write_compute_csv(value: &Computed, out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["version", "part", "e_q", "e_t", "coeff", "step", "len"])?;
    let v = CSV_VERSION.to_string();
    let term = |part: &str, t: &TermRecord| [v.clone(), part.to_string(), t.e_q.to_string(), t.e_t.to_string(), t.coeff.clone(), String::new(), String::new()];
    match value {
        Computed::Laurent { terms } => {
            for t in terms {
                w.write_record(term("num", t))?;
            }
        }
        Computed::Fraction(FractionRecord { num, den }) => {
            for t in num {
                w.write_record(term("num", t))?;
            }
            for FactorRecord { base, step, len } in den {
                w.write_record([v.clone(), "den".into(), base.e_q.to_string(), base.e_t.to_string(), base.coeff.clone(), step.to_string(), len.to_string()])?;
            }
        }
        Computed::Series { coeffs } => {
            for (j, c) in coeffs.iter().enumerate() {
                w.write_record([v.clone(), "q".into(), j.to_string(), "0".into(), c.clone(), String::new(), String::new()])?;
            }
        }
        Computed::Reflection { holds, witness } => {
            w.write_record([v.clone(), "holds".into(), String::new(), String::new(), holds.to_string(), String::new(), String::new()])?;
            if let Some(t) = witness {
                w.write_record(term("witness", t))?;
            }
        }
        Computed::Partition { parts } => {
            for (i, p) in parts.iter().enumerate() {
                w.write_record([v.clone(), "part".into(), String::new(), i.to_string(), p.to_string(), String::new(), String::new()])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn oracle(cli: &Cli, target: OracleTarget, p: &Params, guard: Guard, out: &mut dyn Write) -> Result<(), CliError> {
    let name = target_name(target);
    let t = name.as_str();
    let start = Instant::now();
    let mut records = Vec::new();
    let mut text = Vec::new();
    match target {
        OracleTarget::SatCount => {
            let q = Params::need(&p.q, "q", t)?;
            let field = FieldSpec::quadratic(u32::try_from(q).map_err(|_| usage("--q is too large"))?)?;
            let (n, r) = (p.n(t)?, Params::int(&p.r, "r", t)?);
            let r = u32::try_from(r).map_err(|_| usage("--r must be nonnegative"))?;
            let c = saturating_subspace_count_oracle(field, n, r, guard)?;
            let mut rec = OracleRecord::new(t, q, &[c]);
            (rec.n, rec.r) = (Some(n), Some(r));
            records.push(rec);
            text.push(c.to_string());
        }
        OracleTarget::SatZeta => {
            let f = p.order_family(t)?;
            let n = p.n(t)?;
            let field = p.field(t)?;
            let c = saturation_zeta_oracle(f, n, field, guard)?;
            let mut rec = OracleRecord::new(t, field.q(), &c);
            (rec.family, rec.m, rec.n) = (Some(f.kind.to_string()), Some(f.m), Some(n));
            records.push(rec);
            text.push(series_display(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), "t"));
        }
        OracleTarget::QuotZeta => {
            let (n, k) = (p.n(t)?, Params::need(&p.k, "k", t)?);
            let field = p.field(t)?;
            let c = quot_zeta_oracle_inert_m1(field, n, k, guard)?;
            let mut rec = OracleRecord::new(t, field.q(), &c);
            (rec.family, rec.m, rec.n, rec.k) = (Some("inert".into()), Some(1), Some(n), Some(k));
            records.push(rec);
            text.push(c.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
        }
        OracleTarget::HallCount | OracleTarget::HallTable | OracleTarget::Submodules => {
            let lambda = Params::partition(&p.lambda, "lambda", t)?;
            let field = p.field(t)?;
            let table = hall_table(&lambda, field, guard)?;
            match target {
                OracleTarget::HallCount => {
                    let mu = Params::partition(&p.mu, "mu", t)?;
                    let c: u64 = table.iter().filter(|((ty, _), _)| *ty == mu).map(|(_, c)| c).sum();
                    let mut rec = OracleRecord::new(t, field.q(), &[c]);
                    (rec.lambda, rec.mu) = (Some(lambda.to_string()), Some(mu.to_string()));
                    records.push(rec);
                    text.push(c.to_string());
                }
                OracleTarget::Submodules => {
                    let c: u64 = table.values().sum();
                    let mut rec = OracleRecord::new(t, field.q(), &[c]);
                    rec.lambda = Some(lambda.to_string());
                    records.push(rec);
                    text.push(c.to_string());
                }
                _ => {
                    for ((ty, cot), c) in &table {
                        let mut rec = OracleRecord::new(t, field.q(), &[*c]);
                        (rec.lambda, rec.mu) = (Some(lambda.to_string()), Some(format!("{ty}/{cot}")));
                        records.push(rec);
                        text.push(format!("type {ty} cotype {cot}: {c}"));
                    }
                }
            }
        }
        OracleTarget::Moebius => {
            let lambda = Params::partition(&p.lambda, "lambda", t)?;
            let field = p.field(t)?;
            let m = dvr_module(&lambda, field)?;
            let mut by_cotype: BTreeMap<Partition, Vec<i64>> = BTreeMap::new();
            for w in enumerate_submodules(&m, guard)? {
                let v = moebius_oracle(&m, &w, guard)?;
                let vals = by_cotype.entry(module_cotype(&w, &m, "T")?).or_default();
                if !vals.contains(&v) {
                    vals.push(v);
                }
            }
            for (cot, vals) in by_cotype {
                let shown: Vec<String> = vals.iter().map(i64::to_string).collect();
                let mut rec = OracleRecord::new(t, field.q(), &[]);
                rec.values = shown.join(";");
                (rec.lambda, rec.mu) = (Some(lambda.to_string()), Some(cot.to_string()));
                records.push(rec);
                text.push(format!("cotype {cot}: {}", shown.join(", ")));
            }
        }
    }
    if !cli.no_timing {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut records {
            r.wall_ms = Some(ms);
        }
    }
    match cli.format {
        Format::Text => {
            for line in text {
                writeln!(out, "{line}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&records).expect("serializable"))?,
        Format::Csv => write_csv(&records, &mut *out)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    form: Option<String>,
    value: String,
}

#[allow(clippy::too_many_arguments)]
fn table(
    cli: &Cli,
    target: TableTarget,
    family: Option<&str>,
    m_max: u32,
    n_max: u32,
    q: u64,
    order: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let name = target_name(target);
    let row = |n: u32| TableRow { target: name.clone(), family: None, m: None, n, q: None, r: None, form: None, value: String::new() };
    let kinds: Vec<OrderKind> = match family {
        Some(f) => vec![f.parse()?],
        None => vec![OrderKind::Ramified, OrderKind::Split, OrderKind::Inert],
    };
    let mut rows = Vec::new();
    match target {
        TableTarget::Nuhat0 => {
            for &kind in &kinds {
                for m in 1..=m_max {
                    let f = OrderFamily::new(kind, m)?;
                    for n in 0..=n_max {
                        for (form, tag) in [(NuhatForm::Theorem, "theorem"), (NuhatForm::Alternative, "alternative")] {
                            rows.push(TableRow {
                                family: Some(kind.to_string()),
                                m: Some(m),
                                form: Some(tag.into()),
                                value: nuhat_zero(f, n, form).to_string(),
                                ..row(n)
                            });
                        }
                    }
                }
            }
        }
        TableTarget::InertCounts => {
            for n in 0..=n_max {
                for r in 0..=2 * n as i64 {
                    rows.push(TableRow { r: Some(r), value: inert_m1_count(n, r, CountForm::Closed).to_string(), ..row(n) });
                }
            }
        }
        TableTarget::CohSeries => {
            for n in 0..=n_max {
                let z = coh_finitized(OrderFamily::inert(1), n)?.substitute(crate::algebra::Var::T, Monomial::new(1, n as i64, 1))?;
                let ts = z.to_tseries(order)?;
                let mut coeffs = Vec::new();
                for c in ts.coeffs() {
                    coeffs.push(c.eval_q(q as i64).remove(&0).unwrap_or_default().to_string());
                }
                rows.push(TableRow {
                    family: Some("inert".into()),
                    m: Some(1),
                    q: Some(q),
                    value: coeffs.join(";"),
                    ..row(n)
                });
            }
        }
        TableTarget::SatZeta => {
            for &kind in &kinds {
                for m in 1..=m_max {
                    let f = OrderFamily::new(kind, m)?;
                    for n in 0..=n_max {
                        let c = counts_at(&saturation_zeta(f, n), q as i64)?;
                        rows.push(TableRow {
                            family: Some(kind.to_string()),
                            m: Some(m),
                            q: Some(q),
                            value: c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"),
                            ..row(n)
                        });
                    }
                }
            }
        }
    }
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("serializable"))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["version", "target", "family", "m", "n", "q", "r", "form", "value"])?;
            for r in &rows {
                let opt = |v: Option<String>| v.unwrap_or_default();
                w.write_record([
                    CSV_VERSION.to_string(),
                    r.target.clone(),
                    opt(r.family.clone()),
                    opt(r.m.map(|x| x.to_string())),
                    r.n.to_string(),
                    opt(r.q.map(|x| x.to_string())),
                    opt(r.r.map(|x| x.to_string())),
                    opt(r.form.clone()),
                    r.value.clone(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &rows {
                let mut key = Vec::new();
                if let Some(f) = &r.family {
                    key.push(f.clone());
                }
                if let Some(m) = r.m {
                    key.push(format!("m={m}"));
                }
                key.push(format!("n={}", r.n));
                if let Some(q) = r.q {
                    key.push(format!("q={q}"));
                }
                if let Some(x) = r.r {
                    key.push(format!("r={x}"));
                }
                if let Some(f) = &r.form {
                    key.push(f.clone());
                }
                writeln!(out, "{}: {}", key.join(" "), r.value)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("qzeta").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn target_names_are_kebab_case() {
        assert_eq!(target_name(ComputeTarget::CohInertM1), "coh-inert-m1");
        assert_eq!(target_name(ComputeTarget::Nuhat0), "nuhat0");
        assert_eq!(target_name(ComputeTarget::GSkew), "g-skew");
        assert_eq!(target_name(OracleTarget::SatCount), "sat-count");
    }

    #[test]
    fn compute_examples() {
        assert_eq!(call(&["compute", "nuhat0", "--family", "split", "--m", "2", "--n", "3"]).1, "1\n");
        assert_eq!(call(&["compute", "g-skew", "--r", "2", "--s", "1"]).1, "1 + q\n");
        let (code, out, _) = call(&["compute", "coh-inert-m1", "--n", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["var"], "qinv");
        let rec: FractionRecord = serde_json::from_value(v["value"].clone()).unwrap();
        let z = QTFraction::from_record(&rec, VarConvention::Qinv).unwrap();
        assert!(z.cross_eq(&coh_finitized(OrderFamily::inert(1), 1).unwrap()));
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["compute", "nuhat0", "--family", "split"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--n"));
        assert_eq!(call(&["compute", "no-such-target"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "no-such-suite"]).0, EXIT_USAGE);
        assert_eq!(call(&["oracle", "sat-zeta", "--family", "inert", "--n", "1", "--q", "4"]).0, EXIT_USAGE);
    }

    #[test]
    fn guard_exit_code() {
        let (code, _, err) = call(&["oracle", "sat-count", "--q", "2", "--n", "2", "--r", "1", "--guard", "2"]);
        assert_eq!(code, EXIT_GUARD, "{err}");
    }
}
