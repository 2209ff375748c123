//! Command-line front end.
//!
//! Every command produces a text rendering and a JSON value; `--json`
//! selects the latter. Output is deterministic: maps are ordered, numbers
//! are exact integers or fractions, and `sweep` collects worker results in
//! degree order.

mod variety;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand};
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Value};

pub use variety::{parse_list, parse_range, parse_variety, render_variety};

use crate::chern_fano::{fano_class, line_count};
use crate::error::{Error, Result};
use crate::genus_bound::{
    basic_bound, canonical_dot_curve, hyperbolicity_certificate, method1_margin,
    mukai_degree_bound, CurveDegrees, GenusBoundReport, SurjectionProfile,
};
use crate::grassmann_chow::{
    complement, multiply_all, transpose_dual, ChowElement, Partition, RingContext,
};
use crate::section_dominating::{check_product, check_projective_space, SectionDomination};
use crate::variety_catalog::{
    classify, describe, hyperbolicity_threshold, known_counterexamples, lines_threshold,
    Classification, DegreeVector, Discrepancy, VarietyDescriptor,
};

#[derive(Parser, Debug)]
#[command(
    name = "hypercert",
    version,
    about = "Degree thresholds, Schubert calculus and hyperbolicity certificates for hypersurfaces in homogeneous varieties"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, canonical class, thresholds and discrepancy flags.
    Info { variety: String },
    /// Hyperbolicity and lines thresholds per hyperplane class.
    Threshold { variety: String },
    /// Classify a very general hypersurface of the given multidegree.
    Classify {
        variety: String,
        #[arg(long, value_name = "d1,d2,...")]
        deg: String,
    },
    /// Expand the class of the Fano scheme of lines in G(2,N).
    FanoClass {
        #[arg(long)]
        d: u32,
        /// Defaults to d+3.
        #[arg(long = "N", value_name = "N")]
        big_n: Option<u32>,
    },
    /// Number of lines on a general hypersurface of degree 2n-3 in P^n.
    LineCount {
        #[arg(long)]
        n: u32,
    },
    /// Schubert calculus in G(k,n).
    Schubert {
        #[command(subcommand)]
        op: SchubertOp,
    },
    /// Basic genus bound 2g-2 >= sum (a_i + d_i - s_i) e_i.
    GenusBound {
        variety: String,
        #[arg(long, value_name = "d1,d2,...")]
        deg: String,
        /// Surjection profile s_1,..,s_m with sum at most D-2.
        #[arg(long, value_name = "s1,s2,...")]
        s: String,
        /// Curve degrees e_i = H_i.C; evaluates the bound when given.
        #[arg(long, value_name = "e1,e2,...")]
        e: Option<String>,
    },
    /// Three-case hyperbolicity certificate.
    Certify {
        variety: String,
        #[arg(long, value_name = "d1,d2,...")]
        deg: String,
    },
    /// Section-domination rank checks on P^n and products.
    ///
    /// With a variety (a product of projective spaces) and --deg, checks each
    /// factor; with --n and --d, checks one P^n; otherwise prints the grid
    /// n <= max-n, d <= max-d.
    SectionDom {
        variety: Option<String>,
        #[arg(long, value_name = "d1,d2,...")]
        deg: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 6)]
        max_d: u32,
    },
    /// One row per uniform degree d in the range: classification, epsilon,
    /// Fano positivity at N=d+3, section domination and counterexamples.
    Sweep {
        variety: String,
        #[arg(long, value_name = "lo..hi")]
        range: String,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SchubertOp {
    /// Product of two or more elements, e.g. "s[1]" "s[2,1] + 2*s[3]".
    Mul {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(required = true, num_args = 1..)]
        factors: Vec<String>,
    },
    /// Degree of the top-class coefficient.
    Integrate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        element: String,
    },
    /// Complement in the box and the conjugate in G(n-k,n).
    Dual {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        /// Parts, e.g. "2,1" or "[2,1]".
        partition: String,
    },
}

/// Rendered result of one command.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn degrees(v: &VarietyDescriptor, text: &str) -> Result<DegreeVector> {
    let d = DegreeVector::new(parse_list(text)?)?;
    v.check_degrees(&d)?;
    Ok(d)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn discrepancy_line(d: &Discrepancy) -> String {
    match d {
        Discrepancy::SymplecticThresholdSign {
            factor,
            printed_hyperbolic,
            derived_hyperbolic,
            printed_lines,
            derived_lines,
        } => format!(
            "discrepancy {factor}: printed hyperbolic bound {printed_hyperbolic} vs D-a-2 = {derived_hyperbolic}; printed lines bound {printed_lines} vs D-a-4 = {derived_lines}"
        ),
        Discrepancy::FlagDimensionDisplay {
            factor,
            displayed,
            standard,
        } => format!("discrepancy {factor}: displayed dimension formula gives {displayed}, true dimension {standard}"),
        Discrepancy::FlagLinesInequality { factor } => {
            format!("discrepancy {factor}: lines clause printed with >=, classified with d_i <= D-a_i-4")
        }
        Discrepancy::CanonicalIndex {
            factor,
            printed_a,
            standard_a,
        } => format!("discrepancy {factor}: printed canonical coefficient {printed_a}, standard index gives {standard_a}; thresholds use the printed value"),
    }
}

fn parse_partition(text: &str) -> Result<Partition> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    Partition::new(parse_list(inner)?)
}

/// Executes a parsed command.
pub fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Info { variety } => info(&parse_variety(variety)?),
        Command::Threshold { variety } => threshold(&parse_variety(variety)?),
        Command::Classify { variety, deg } => {
            let v = parse_variety(variety)?;
            let d = degrees(&v, deg)?;
            classify_cmd(&v, &d)
        }
        Command::FanoClass { d, big_n } => fano_cmd(*d, big_n.unwrap_or(d + 3)),
        Command::LineCount { n } => {
            let count = line_count(*n)?;
            Ok(Output {
                text: format!("{count}\n"),
                json: json!({ "n": n, "degree": 2 * n - 3, "line_count": count.to_string() }),
            })
        }
        Command::Schubert { op } => schubert(op),
        Command::GenusBound { variety, deg, s, e } => {
            let v = parse_variety(variety)?;
            let d = degrees(&v, deg)?;
            let s = SurjectionProfile::new(&v, parse_list(s)?)?;
            let e = e.as_deref().map(|e| CurveDegrees::new(parse_list(e)?)).transpose()?;
            genus_cmd(&v, &d, &s, e.as_ref())
        }
        Command::Certify { variety, deg } => {
            let v = parse_variety(variety)?;
            let d = degrees(&v, deg)?;
            certify_cmd(&hyperbolicity_certificate(&v, &d)?)
        }
        Command::SectionDom {
            variety,
            deg,
            n,
            d,
            max_n,
            max_d,
        } => section_cmd(variety.as_deref(), deg.as_deref(), *n, *d, *max_n, *max_d),
        Command::Sweep {
            variety,
            range,
            jobs,
        } => {
            let v = parse_variety(variety)?;
            let (lo, hi) = parse_range(range)?;
            sweep_cmd(&v, lo, hi, jobs.unwrap_or_else(default_jobs))
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn info(v: &VarietyDescriptor) -> Result<Output> {
    let r = describe(v);
    let mut t = String::new();
    writeln!(t, "variety: {}", r.name).ok();
    writeln!(t, "D = {}, m = {}", r.dim, r.m).ok();
    writeln!(t, "a = [{}]", join(&r.a)).ok();
    writeln!(t, "hyperbolic for d_i >= {}", join(&r.hyperbolicity_threshold)).ok();
    writeln!(t, "contains lines for some d_i <= {}", join(&r.lines_threshold)).ok();
    writeln!(t, "dim F(H_i-lines) = D-a_i-3 = {}", join(&r.fano_lines_dimension)).ok();
    for d in &r.discrepancies {
        writeln!(t, "{}", discrepancy_line(d)).ok();
    }
    Ok(Output {
        text: t,
        json: to_json(&r),
    })
}

fn threshold(v: &VarietyDescriptor) -> Result<Output> {
    let hyp = hyperbolicity_threshold(v);
    let lines = lines_threshold(v);
    let mut t = String::new();
    writeln!(t, "{}: D = {}", v.name(), v.dim()).ok();
    for i in 0..v.picard_rank() {
        writeln!(
            t,
            "H{}: a = {}, hyperbolic d >= {}, lines d <= {}, open d = {}",
            i + 1,
            v.canonical()[i],
            hyp[i],
            lines[i],
            hyp[i] - 1
        )
        .ok();
    }
    for d in v.discrepancies() {
        writeln!(t, "{}", discrepancy_line(&d)).ok();
    }
    Ok(Output {
        text: t,
        json: json!({
            "variety": v.name(),
            "D": v.dim(),
            "a": v.canonical(),
            "hyperbolicity_threshold": hyp,
            "lines_threshold": lines,
            "discrepancies": to_json(&v.discrepancies()),
        }),
    })
}

fn classify_cmd(v: &VarietyDescriptor, d: &DegreeVector) -> Result<Output> {
    let c = classify(v, d)?;
    let cert = hyperbolicity_certificate(v, d)?;
    let counter = known_counterexamples(v, d);
    let hyp = hyperbolicity_threshold(v);
    let eps = cert.epsilon.as_ref().map(|e| e.to_string());
    let mut t = format!(
        "{c}, threshold={}, epsilon={}\n",
        join(&hyp),
        eps.as_deref().unwrap_or("none")
    );
    for x in &counter {
        writeln!(t, "known counterexample {}: {} [{}]", x.id, x.description, x.citation).ok();
    }
    for x in v.discrepancies() {
        writeln!(t, "{}", discrepancy_line(&x)).ok();
    }
    Ok(Output {
        text: t,
        json: json!({
            "variety": v.name(),
            "degrees": d.as_slice(),
            "classification": to_json(&c),
            "hyperbolicity_threshold": hyp,
            "lines_threshold": lines_threshold(v),
            "epsilon": eps,
            "counterexamples": to_json(&counter),
            "discrepancies": to_json(&v.discrepancies()),
        }),
    })
}

fn fano_cmd(d: u32, big_n: u32) -> Result<Output> {
    let r = fano_class(d, big_n)?;
    let mut t = String::new();
    writeln!(t, "[F_1(X)] = c_{}(Sym^{d} S*) in G(2,{big_n}):", d + 1).ok();
    writeln!(t, "  {}", r.expansion).ok();
    writeln!(
        t,
        "s[{}] absent and every s[i,j] with j >= 1 positive: {}",
        d + 1,
        if r.missing_class_ok { "yes" } else { "no" }
    )
    .ok();
    Ok(Output {
        text: t,
        json: to_json(&r),
    })
}

fn schubert(op: &SchubertOp) -> Result<Output> {
    match op {
        SchubertOp::Mul { k, n, factors } => {
            let ctx = RingContext::new(*k, *n)?;
            let xs = factors
                .iter()
                .map(|f| ChowElement::parse(ctx, f))
                .collect::<Result<Vec<_>>>()?;
            let p = multiply_all(ctx, xs.iter())?;
            Ok(Output {
                text: format!("{p}\n"),
                json: to_json(&p),
            })
        }
        SchubertOp::Integrate { k, n, element } => {
            let ctx = RingContext::new(*k, *n)?;
            let x = ChowElement::parse(ctx, element)?;
            let value = x.integrate();
            Ok(Output {
                text: format!("{value}\n"),
                json: json!({ "k": k, "n": n, "element": to_json(&x), "integral": value.to_string() }),
            })
        }
        SchubertOp::Dual { k, n, partition } => {
            let ctx = RingContext::new(*k, *n)?;
            let lambda = parse_partition(partition)?;
            let comp = complement(ctx, &lambda)?;
            let (dual_ctx, conj) = transpose_dual(ctx, &lambda)?;
            Ok(Output {
                text: format!("complement in {ctx}: {comp}\nconjugate in {dual_ctx}: {conj}\n"),
                json: json!({
                    "k": k,
                    "n": n,
                    "partition": lambda.parts(),
                    "complement": comp.parts(),
                    "transpose_dual": { "k": dual_ctx.k(), "n": dual_ctx.n(), "partition": conj.parts() },
                }),
            })
        }
    }
}

fn genus_cmd(
    v: &VarietyDescriptor,
    d: &DegreeVector,
    s: &SurjectionProfile,
    e: Option<&CurveDegrees>,
) -> Result<Output> {
    let b = basic_bound(v, d, s)?;
    let coeffs: Vec<String> = b.coefficients().iter().map(|c| c.to_string()).collect();
    let min = b.min_coefficient();
    let margin = method1_margin(v, d)?;
    let mut t = format!("2g-2 >= {}\n", linear_text(&coeffs));
    writeln!(t, "min coefficient: {min}").ok();
    writeln!(t, "method1 margin min(d_i+a_i-D+2): {margin}").ok();
    let at = match e {
        Some(e) => {
            let kc = canonical_dot_curve(v, d, e)?;
            let mukai = mukai_degree_bound(v, d, e)?;
            let value = b.at(e)?;
            writeln!(t, "at e = ({}): K.C = {kc}, deg N >= {mukai}, 2g-2 >= {value}", join(e.as_slice())).ok();
            json!({
                "e": e.as_slice(),
                "canonical_dot_curve": kc,
                "mukai_degree_bound": mukai,
                "lower_bound": value.to_string(),
            })
        }
        None => Value::Null,
    };
    Ok(Output {
        text: t,
        json: json!({
            "variety": v.name(),
            "degrees": d.as_slice(),
            "s": s.as_slice(),
            "coefficients": coeffs,
            "minimum": min.to_string(),
            "epsilon": min.is_positive().then(|| min.to_string()),
            "method1_margin": margin,
            "at": at,
        }),
    })
}

fn linear_text(coeffs: &[String]) -> String {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| format!("({c})e{}", i + 1))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn certify_cmd(r: &GenusBoundReport) -> Result<Output> {
    let mut t = String::new();
    writeln!(t, "{} degrees ({}), D = {}", r.variety, r.degrees, r.dim).ok();
    for c in &r.cases {
        let coeffs: Vec<String> = c.bound.coefficients().iter().map(|x| x.to_string()).collect();
        let j = c.j.map_or(String::new(), |j| format!(" j={}", j + 1));
        writeln!(t, "case {}{j}: 2g-2 >= {}", c.case, linear_text(&coeffs)).ok();
    }
    match &r.epsilon {
        Some(e) => {
            let j = r.binding_j.map_or(String::new(), |j| format!(" j={}", j + 1));
            writeln!(t, "epsilon = {e} (binding case {}{j})", r.binding_case).ok()
        }
        None => writeln!(t, "no certificate: minimum coefficient {}", r.minimum).ok(),
    };
    for f in &r.ledger_flags {
        writeln!(t, "flag {f}").ok();
    }
    Ok(Output {
        text: t,
        json: to_json(r),
    })
}

fn section_line(t: &mut String, c: &SectionDomination) {
    writeln!(
        t,
        "P({}) d={}: rank {} of {} ({})",
        c.n,
        c.d,
        c.rank,
        c.target_dimension,
        if c.passes { "pass" } else { "fail" }
    )
    .ok();
}

fn projective_dims(v: &VarietyDescriptor) -> Result<Vec<u32>> {
    let dims: Option<Vec<u32>> = v.factors().iter().map(|f| f.projective_dim()).collect();
    match dims {
        Some(d) if d.len() == v.picard_rank() => Ok(d),
        _ => Err(Error::InvalidArgument(format!(
            "{} is not a product of projective spaces",
            v.name()
        ))),
    }
}

fn section_cmd(
    variety: Option<&str>,
    deg: Option<&str>,
    n: Option<u32>,
    d: Option<u32>,
    max_n: u32,
    max_d: u32,
) -> Result<Output> {
    let checks: Vec<SectionDomination> = match (variety, n, d) {
        (Some(spec), None, None) => {
            let v = parse_variety(spec)?;
            let deg = deg.ok_or_else(|| {
                Error::InvalidArgument("section-dom with a variety needs --deg".into())
            })?;
            let d = degrees(&v, deg)?;
            let pairs: Vec<(u32, u32)> = projective_dims(&v)?
                .into_iter()
                .zip(d.as_slice().iter().copied())
                .collect();
            check_product(&pairs)?.factors
        }
        (None, Some(n), Some(d)) => vec![check_projective_space(n, d)?],
        (None, None, None) => {
            let mut out = Vec::new();
            for n in 1..=max_n {
                for d in 1..=max_d {
                    out.push(check_projective_space(n, d)?);
                }
            }
            out
        }
        _ => {
            return Err(Error::InvalidArgument(
                "section-dom takes either VARIETY --deg, or --n and --d together".into(),
            ))
        }
    };
    let passes = checks.iter().all(|c| c.passes);
    let mut t = String::new();
    for c in &checks {
        section_line(&mut t, c);
    }
    writeln!(t, "{}", if passes { "all pass" } else { "FAILED" }).ok();
    Ok(Output {
        text: t,
        json: json!({ "checks": to_json(&checks), "passes": passes }),
    })
}

/// One row of a degree sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub d: u32,
    pub classification: Classification,
    pub epsilon: Option<String>,
    pub binding_case: Option<String>,
    /// Fano positivity at `N = d+3`; absent for `d < 2`.
    pub fano_positive: Option<bool>,
    /// Section domination of `O(d)` on each projective factor; absent
    /// unless the variety is a product of projective spaces.
    pub section_dominating: Option<bool>,
    pub counterexamples: Vec<String>,
}

fn sweep_row(v: &VarietyDescriptor, d: u32) -> Result<SweepRow> {
    let degs = DegreeVector::uniform(d, v.picard_rank())?;
    let classification = classify(v, &degs)?;
    let cert = hyperbolicity_certificate(v, &degs)?;
    let fano_positive = if d >= 2 {
        Some(fano_class(d, d + 3)?.missing_class_ok)
    } else {
        None
    };
    let section_dominating = match projective_dims(v) {
        Ok(dims) => {
            let pairs: Vec<(u32, u32)> = dims.into_iter().map(|n| (n, d)).collect();
            Some(check_product(&pairs)?.passes)
        }
        Err(_) => None,
    };
    Ok(SweepRow {
        d,
        classification,
        binding_case: cert.epsilon.as_ref().map(|_| cert.binding_case.to_string()),
        epsilon: cert.epsilon.map(|e| e.to_string()),
        fano_positive,
        section_dominating,
        counterexamples: known_counterexamples(v, &degs).into_iter().map(|c| c.id).collect(),
    })
}

/// Computes sweep rows for `lo..=hi` on up to `jobs` threads; rows come
/// back in degree order regardless of scheduling.
pub fn sweep(v: &VarietyDescriptor, lo: u32, hi: u32, jobs: usize) -> Result<Vec<SweepRow>> {
    let ds: Vec<u32> = (lo..=hi).collect();
    let slots: Mutex<Vec<Option<Result<SweepRow>>>> = Mutex::new(vec![None; ds.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, ds.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&d) = ds.get(i) else { break };
                let row = sweep_row(v, d);
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(row);
            });
        }
    });
    slots
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

fn sweep_cmd(v: &VarietyDescriptor, lo: u32, hi: u32, jobs: usize) -> Result<Output> {
    let rows = sweep(v, lo, hi, jobs)?;
    let opt = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    };
    let mut t = format!("sweep {} d={lo}..{hi}\n", v.name());
    writeln!(
        t,
        "{:>4}  {:<14}  {:<8}  {:<4}  {:<5}  {:<11}  counterexamples",
        "d", "class", "epsilon", "case", "fano", "section-dom"
    )
    .ok();
    for r in &rows {
        writeln!(
            t,
            "{:>4}  {:<14}  {:<8}  {:<4}  {:<5}  {:<11}  {}",
            r.d,
            r.classification.label(),
            r.epsilon.as_deref().unwrap_or("-"),
            r.binding_case.as_deref().unwrap_or("-"),
            opt(r.fano_positive),
            opt(r.section_dominating),
            if r.counterexamples.is_empty() {
                "-".to_string()
            } else {
                r.counterexamples.join(",")
            }
        )
        .ok();
    }
    Ok(Output {
        text: t,
        json: json!({
            "variety": v.name(),
            "range": [lo, hi],
            "rows": to_json(&rows),
            "discrepancies": to_json(&v.discrepancies()),
        }),
    })
}

/// Exit status for an error: 2 for broken invariants, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => 2,
        _ => 1,
    }
}

/// Parses arguments, runs the command and writes its output. Returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    use std::io::Write;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            e.print().ok();
            return code;
        }
    };
    let rendered = match execute(&cli.command) {
        Ok(out) => out.render(cli.json),
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush())
        }
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            1
        }
    }
}
