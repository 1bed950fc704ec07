//! Batch front-end: load or generate algebras, compute and certify their
//! canonical filtrations, and emit deterministic JSON reports.
//!
//! Every subcommand accepts `-` for stdin. Exit codes: 0 on success, 2 on
//! algebra validation failure (with the violation list), 1 on usage errors
//! or malformed input (JSON errors carry line/column positions).

use std::io::Read;
use std::process::ExitCode;

use num_traits::{Signed, Zero};
use serde::Serialize;

use canfilt::algebra::Algebra;
use canfilt::builders::{self, BuilderSpec};
use canfilt::canonical::{self, CanonicalResult, CertifyPath, Method};
use canfilt::filtration::{self, AdaptedFiltration};
use canfilt::grade;
use canfilt::qp::{self, Grouping, QpCertificate};
use canfilt::radical;
use canfilt::rational::{format_rat, parse_rat, Rat};

const USAGE: &str = "\
canfilt: canonical filtrations of finite-dimensional algebras over exact rationals

USAGE:
  canfilt validate <algebra>
  canfilt gen <family> <params..> [-o FILE] [--grouping-out FILE]
  canfilt canonical <algebra> [--grouping auto|degree|blocks|FILE] [--certify]
  canfilt nu <algebra> <filtration>
  canfilt radical <algebra>
  canfilt semistable <algebra>
  canfilt gr <algebra> <filtration>
  canfilt graded-ss <algebra> [--grouping ...]
  canfilt gr-structure <algebra>
  canfilt oracle <algebra> [--grouping ...]
  canfilt certify <algebra> <filtration> [--grouping ...]

<algebra> and <filtration> are JSON files, or '-' for stdin.

Families for gen:
  truncated-poly N R        S_{N,R} = k[x1..xN]/m^R
  monomial-quotient N GENS  e.g. GENS = x^4,x^2*y,x*y^2,y^4
  block-triangular N1,N2,.. block upper triangular matrices
  full-matrix N             Mat_N
  model-filiform N          the model filiform Lie algebra M_N
  sl-nilpotent N            nilpotent part of sl_{N+1}
  heisenberg                three-dimensional Heisenberg
  abelian N                 abelian Lie algebra
  spec FILE                 a builder-spec JSON (extensions, direct sums)

Environment: CANFILT_MAX_ORACLE_ROWS bounds the exhaustive oracle (default 20).
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

type CliResult<T> = std::result::Result<T, String>;

fn run(args: &[String]) -> CliResult<ExitCode> {
    let Some(cmd) = args.first() else {
        eprint!("{USAGE}");
        return Ok(ExitCode::from(1));
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "validate" => cmd_validate(rest),
        "gen" => cmd_gen(rest),
        "canonical" => cmd_canonical(rest),
        "nu" => cmd_nu(rest),
        "radical" => cmd_radical(rest),
        "semistable" => cmd_semistable(rest),
        "gr" => cmd_gr(rest),
        "graded-ss" => cmd_graded_ss(rest),
        "gr-structure" => cmd_gr_structure(rest),
        "oracle" => cmd_oracle(rest),
        "certify" => cmd_certify(rest),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown subcommand {other:?}; try `canfilt help`")),
    }
}

// ---------------------------------------------------------------------------
// I/O helpers
// ---------------------------------------------------------------------------

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_algebra(path: &str) -> CliResult<Algebra> {
    Algebra::from_json(&read_input(path)?).map_err(|e| format!("{path}: {e}"))
}

#[derive(serde::Deserialize)]
struct FiltrationFile {
    weights: Vec<String>,
}

fn load_filtration(path: &str, dim: usize) -> CliResult<AdaptedFiltration> {
    let file: FiltrationFile = serde_json::from_str(&read_input(path)?)
        .map_err(|e| format!("{path}: {e}"))?;
    if file.weights.len() != dim {
        return Err(format!(
            "{path}: {} weights for an algebra of dimension {dim}",
            file.weights.len()
        ));
    }
    let weights: Result<Vec<Rat>, _> = file.weights.iter().map(|s| parse_rat(s)).collect();
    Ok(AdaptedFiltration::new(weights.map_err(|e| e.to_string())?))
}

fn emit<T: Serialize>(value: &T) -> CliResult<ExitCode> {
    println!(
        "{}",
        serde_json::to_string_pretty(value).map_err(|e| e.to_string())?
    );
    Ok(ExitCode::SUCCESS)
}

fn max_oracle_rows() -> usize {
    std::env::var("CANFILT_MAX_ORACLE_ROWS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(20)
}

fn parse_grouping_flag(args: &[String], a: &Algebra) -> CliResult<Grouping> {
    let mut mode = "auto".to_string();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        if arg == "--grouping" {
            mode = it
                .next()
                .ok_or_else(|| "--grouping needs a value".to_string())?
                .clone();
        }
    }
    match mode.as_str() {
        "auto" => Ok(Grouping::identity(a.dim())),
        "degree" => Grouping::by_total_degree(a).map_err(|e| e.to_string()),
        "blocks" => Grouping::by_degree_vector(a).map_err(|e| e.to_string()),
        path => {
            let grouping: Grouping = serde_json::from_str(&read_input(path)?)
                .map_err(|e| format!("{path}: {e}"))?;
            grouping.check(a.dim()).map_err(|e| e.to_string())?;
            Ok(grouping)
        }
    }
}

fn require_valid(a: &Algebra) -> CliResult<Option<ExitCode>> {
    let violations = a.validate();
    if violations.is_empty() {
        return Ok(None);
    }
    #[derive(Serialize)]
    struct Out {
        valid: bool,
        violations: Vec<String>,
    }
    let out = Out {
        valid: false,
        violations: violations.iter().map(ToString::to_string).collect(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(Some(ExitCode::from(2)))
}

// ---------------------------------------------------------------------------
// Serialization of results
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CertificateOut {
    w: Vec<String>,
    lambda: Vec<String>,
    active: Vec<usize>,
    objective: String,
    kkt_ok: bool,
}

impl CertificateOut {
    fn of(cert: &QpCertificate) -> CertificateOut {
        CertificateOut {
            w: cert.w_star.iter().map(format_rat).collect(),
            lambda: cert.lambda.iter().map(format_rat).collect(),
            active: cert.active_set.clone(),
            objective: format_rat(&cert.objective),
            kkt_ok: cert.kkt_ok,
        }
    }
}

#[derive(Serialize)]
struct CanonicalOut {
    weights: Vec<String>,
    labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    adapted_basis: Option<Vec<Vec<String>>>,
    wt: String,
    norm_sq: String,
    nu_sign: i32,
    nu_squared: String,
    method: &'static str,
    certificate: CertificateOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    certified_canonical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certify_path: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Semistable => "semistable",
        Method::GradedQp => "graded-qp",
        Method::DirectSum => "direct-sum",
        Method::ClosedForm => "closed-form",
        Method::RadicalReduction => "radical-reduction",
    }
}

fn canonical_out(a: &Algebra, res: &CanonicalResult) -> CanonicalOut {
    let weights: Vec<String> = res.weights.iter().map(ToString::to_string).collect();
    let (wt, norm_sq, nu_sign, nu_squared) = match &res.nu {
        None => ("0".into(), "0".into(), 0, "0".into()),
        Some(nu) => {
            let sq = &nu.wt * &nu.wt / &nu.norm_sq;
            (
                format_rat(&nu.wt),
                format_rat(&nu.norm_sq),
                -sign_of(&nu.wt),
                format_rat(&sq),
            )
        }
    };
    CanonicalOut {
        weights,
        labels: a.labels().to_vec(),
        adapted_basis: res
            .adapted_basis
            .as_ref()
            .map(|rows| rows.iter().map(|r| r.iter().map(format_rat).collect()).collect()),
        wt,
        norm_sq,
        nu_sign,
        nu_squared,
        method: method_name(res.method),
        certificate: CertificateOut::of(&res.certificate),
        certified_canonical: None,
        certify_path: None,
        oracle_agrees: None,
    }
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_validate(args: &[String]) -> CliResult<ExitCode> {
    let [path] = args else {
        return Err("usage: canfilt validate <algebra>".into());
    };
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    #[derive(Serialize)]
    struct Out {
        valid: bool,
        dim: usize,
    }
    emit(&Out { valid: true, dim: a.dim() })
}

fn cmd_gen(args: &[String]) -> CliResult<ExitCode> {
    let mut positional: Vec<&String> = Vec::new();
    let mut out_path: Option<String> = None;
    let mut grouping_out: Option<String> = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "-o" | "--output" => {
                out_path = Some(it.next().ok_or("missing value for -o")?.clone())
            }
            "--grouping-out" => {
                grouping_out = Some(it.next().ok_or("missing value for --grouping-out")?.clone())
            }
            _ => positional.push(arg),
        }
    }
    let Some(family) = positional.first() else {
        return Err("usage: canfilt gen <family> <params..>".into());
    };
    let params = &positional[1..];
    let built = build_family(family, params)?;
    let json = built.algebra.to_json();
    match &out_path {
        None => println!("{json}"),
        Some(p) => std::fs::write(p, json + "\n").map_err(|e| format!("writing {p}: {e}"))?,
    }
    if let Some(p) = grouping_out {
        let gj = serde_json::to_string_pretty(&built.grouping).map_err(|e| e.to_string())?;
        std::fs::write(&p, gj + "\n").map_err(|e| format!("writing {p}: {e}"))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_usize(s: &str, what: &str) -> CliResult<usize> {
    s.parse().map_err(|_| format!("{what}: expected an integer, got {s:?}"))
}

fn build_family(family: &str, params: &[&String]) -> CliResult<builders::Built> {
    let err = |e: canfilt::Error| e.to_string();
    match family {
        "truncated-poly" => {
            let [n, r] = params else {
                return Err("usage: gen truncated-poly N R".into());
            };
            builders::truncated_poly(parse_usize(n, "N")?, parse_usize(r, "R")? as u32)
                .map_err(err)
        }
        "monomial-quotient" => {
            let [n, gens] = params else {
                return Err("usage: gen monomial-quotient N GEN,GEN,..".into());
            };
            let n = parse_usize(n, "N")?;
            let generators = parse_monomial_list(gens, n)?;
            builders::monomial_quotient(n, &generators).map_err(err)
        }
        "block-triangular" => {
            let [blocks] = params else {
                return Err("usage: gen block-triangular N1,N2,..".into());
            };
            let sizes: CliResult<Vec<usize>> = blocks
                .split(',')
                .map(|s| parse_usize(s.trim(), "block size"))
                .collect();
            builders::block_triangular(&sizes?).map_err(err)
        }
        "full-matrix" => {
            let [n] = params else {
                return Err("usage: gen full-matrix N".into());
            };
            builders::full_matrix(parse_usize(n, "N")?).map_err(err)
        }
        "model-filiform" => {
            let [n] = params else {
                return Err("usage: gen model-filiform N".into());
            };
            builders::model_filiform(parse_usize(n, "N")?).map_err(err)
        }
        "sl-nilpotent" => {
            let [n] = params else {
                return Err("usage: gen sl-nilpotent N".into());
            };
            builders::sl_nilpotent(parse_usize(n, "N")?).map_err(err)
        }
        "heisenberg" => Ok(builders::heisenberg()),
        "abelian" => {
            let [n] = params else {
                return Err("usage: gen abelian N".into());
            };
            builders::abelian(parse_usize(n, "N")?).map_err(err)
        }
        "spec" => {
            let [path] = params else {
                return Err("usage: gen spec <builderspec.json>".into());
            };
            let spec: BuilderSpec = serde_json::from_str(&read_input(path)?)
                .map_err(|e| format!("{path}: {e}"))?;
            spec.build().map_err(err)
        }
        other => Err(format!("unknown family {other:?}; try `canfilt help`")),
    }
}

/// Parse `"x^4,x^2*y,y^4"` into exponent vectors for `n` variables named
/// as the builders name them.
fn parse_monomial_list(s: &str, n: usize) -> CliResult<Vec<Vec<u32>>> {
    let names: Vec<String> = match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    };
    let mut out = Vec::new();
    for mono in s.split(',') {
        let mut exps = vec![0u32; n];
        for factor in mono.trim().split('*') {
            let (name, e) = match factor.split_once('^') {
                Some((name, e)) => {
                    (name.trim(), e.trim().parse::<u32>().map_err(|_| {
                        format!("bad exponent in {factor:?}")
                    })?)
                }
                None => (factor.trim(), 1),
            };
            let idx = names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| format!("unknown variable {name:?} (have {names:?})"))?;
            exps[idx] += e;
        }
        out.push(exps);
    }
    Ok(out)
}

fn cmd_canonical(args: &[String]) -> CliResult<ExitCode> {
    let Some(path) = args.first() else {
        return Err("usage: canfilt canonical <algebra> [--grouping ..] [--certify]".into());
    };
    let certify = args.iter().any(|a| a == "--certify");
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let grouping = parse_grouping_flag(&args[1..], &a)?;
    let res = compute_canonical(&a, &grouping).map_err(|e| e.to_string())?;
    let mut out = canonical_out(&a, &res);
    if certify {
        if res.is_trivial() {
            // Trivial = semistable; certification means the radical vanishes.
            out.certified_canonical =
                Some(radical::is_semistable(&a).map_err(|e| e.to_string())?);
        } else if res.adapted_basis.is_none() {
            let path = canonical::certify_canonical(&a, &res.filtration(), Some(&grouping))
                .map_err(|e| e.to_string())?;
            out.certified_canonical = Some(path.is_some());
            out.certify_path = path.map(|p| match p {
                CertifyPath::ConeKkt => "cone-kkt",
                CertifyPath::Recognition => "recognition",
            });
        }
        let cs = qp::build_constraints(&a, &grouping).map_err(|e| e.to_string())?;
        if cs.rows.len() <= max_oracle_rows() {
            let oracle = qp::enumerate_active_sets_oracle(&cs, max_oracle_rows())
                .map_err(|e| e.to_string())?;
            out.oracle_agrees = Some(oracle.w_star == res.certificate.w_star);
        }
    }
    emit(&out)
}

/// Dispatch: graded cone optimization where the grouping is usable, else
/// a grading derived from the table's own grading lattice, else the
/// semisimple and abelian-radical closed forms.
fn compute_canonical(a: &Algebra, grouping: &Grouping) -> canfilt::Result<CanonicalResult> {
    match canonical::canonical_graded(a, grouping) {
        Ok(res) => Ok(res),
        Err(e @ (canfilt::Error::InvalidGrouping(_) | canfilt::Error::MissingGrading)) => {
            if a.grading().is_none() {
                if let Some(derived) = grade::lattice_grading(a) {
                    let regraded = a.clone().with_grading(Some(derived));
                    if let Ok(res) = canonical::canonical_graded(&regraded, grouping) {
                        return Ok(res);
                    }
                }
            }
            if radical::is_semistable(a)? {
                return canonical::canonical_semisimple(a);
            }
            if a.kind() == canfilt::Kind::Lie {
                let rad = radical::lie_radical(a)?;
                let sub = rad.subalgebra(a)?;
                if sub.table().is_empty() {
                    // Abelian radical: canonical weights are all ones.
                    let sub = sub.with_grading(Some(vec![vec![0]; rad.dim()]));
                    let rad_res = canonical::canonical_graded(
                        &sub,
                        &Grouping::identity(rad.dim()),
                    )?;
                    return canonical::canonical_lie_via_radical(a, &rad_res);
                }
            }
            Err(e)
        }
        Err(e) => Err(e),
    }
}

fn cmd_nu(args: &[String]) -> CliResult<ExitCode> {
    let [apath, fpath] = args else {
        return Err("usage: canfilt nu <algebra> <filtration>".into());
    };
    let a = load_algebra(apath)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let f = load_filtration(fpath, a.dim())?;
    let wt = filtration::weight_of(&a, &f).map_err(|e| e.to_string())?;
    let norm_sq = filtration::norm_sq_of(&a, &f).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        weights_primitive: Vec<String>,
        wt: String,
        norm_sq: String,
        nu_sign: i32,
        nu_squared: String,
    }
    let nu_squared = if norm_sq.is_zero() {
        "0".to_string()
    } else {
        format_rat(&(&wt * &wt / &norm_sq))
    };
    emit(&Out {
        weights_primitive: f.primitive().iter().map(ToString::to_string).collect(),
        wt: format_rat(&wt),
        norm_sq: format_rat(&norm_sq),
        nu_sign: -sign_of(&wt),
        nu_squared,
    })
}

fn cmd_radical(args: &[String]) -> CliResult<ExitCode> {
    let [path] = args else {
        return Err("usage: canfilt radical <algebra>".into());
    };
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let rad = radical::radical(&a).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        kind: &'static str,
        dim: usize,
        basis: Vec<Vec<String>>,
    }
    emit(&Out {
        kind: match a.kind() {
            canfilt::Kind::Associative => "jacobson",
            canfilt::Kind::Lie => "solvable",
        },
        dim: rad.dim(),
        basis: rad
            .basis()
            .iter()
            .map(|r| r.iter().map(format_rat).collect())
            .collect(),
    })
}

fn cmd_semistable(args: &[String]) -> CliResult<ExitCode> {
    let [path] = args else {
        return Err("usage: canfilt semistable <algebra>".into());
    };
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    #[derive(Serialize)]
    struct Witness {
        basis: Vec<Vec<String>>,
        weights: Vec<String>,
    }
    #[derive(Serialize)]
    struct Out {
        semistable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
    }
    let witness = radical::destabilizing_witness(&a).map_err(|e| e.to_string())?;
    let out = match witness {
        None => Out { semistable: true, witness: None },
        Some(flag) => {
            let (rows, adapted) = filtration::from_flag(&flag);
            Out {
                semistable: false,
                witness: Some(Witness {
                    basis: rows
                        .iter()
                        .map(|r| r.iter().map(format_rat).collect())
                        .collect(),
                    weights: adapted.primitive().iter().map(ToString::to_string).collect(),
                }),
            }
        }
    };
    emit(&out)
}

fn cmd_gr(args: &[String]) -> CliResult<ExitCode> {
    let [apath, fpath] = args else {
        return Err("usage: canfilt gr <algebra> <filtration>".into());
    };
    let a = load_algebra(apath)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let f = load_filtration(fpath, a.dim())?;
    let prim = AdaptedFiltration::from_integers(&f.primitive());
    let gr = filtration::associated_graded(&a, &prim).map_err(|e| e.to_string())?;
    println!("{}", gr.to_json());
    Ok(ExitCode::SUCCESS)
}

fn cmd_graded_ss(args: &[String]) -> CliResult<ExitCode> {
    let Some(path) = args.first() else {
        return Err("usage: canfilt graded-ss <algebra> [--grouping ..]".into());
    };
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let grouping = parse_grouping_flag(&args[1..], &a)?;
    let split = filtration::split_filtration(&a).map_err(|e| e.to_string())?;
    let can = canonical::canonical_graded(&a, &grouping).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        graded_semistable: bool,
        split: Vec<String>,
        canonical: Vec<String>,
    }
    emit(&Out {
        graded_semistable: can.weights == split.primitive(),
        split: split.primitive().iter().map(ToString::to_string).collect(),
        canonical: can.weights.iter().map(ToString::to_string).collect(),
    })
}

fn cmd_gr_structure(args: &[String]) -> CliResult<ExitCode> {
    let [path] = args else {
        return Err("usage: canfilt gr-structure <algebra>".into());
    };
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let report = grade::structural_checks(&a).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        negative_part_in_radical_and_center: bool,
        positive_part_in_radical: bool,
        negative_annihilator_zero: bool,
        all: bool,
    }
    emit(&Out {
        negative_part_in_radical_and_center: report.negative_in_radical_and_center,
        positive_part_in_radical: report.positive_in_radical,
        negative_annihilator_zero: report.negative_annihilator_zero,
        all: report.all(),
    })
}

fn cmd_oracle(args: &[String]) -> CliResult<ExitCode> {
    let Some(path) = args.first() else {
        return Err("usage: canfilt oracle <algebra> [--grouping ..]".into());
    };
    let a = load_algebra(path)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let grouping = parse_grouping_flag(&args[1..], &a)?;
    let cs = qp::build_constraints(&a, &grouping).map_err(|e| e.to_string())?;
    let cert =
        qp::enumerate_active_sets_oracle(&cs, max_oracle_rows()).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        note: &'static str,
        weights_primitive: Vec<String>,
        certificate: CertificateOut,
    }
    let weights: Vec<Rat> = grouping
        .classes
        .iter()
        .map(|&g| cert.w_star[g].clone())
        .collect();
    emit(&Out {
        note: "adapted-basis-relative optimum, not certified canonical",
        weights_primitive: canfilt::rational::primitive_integer_form(&weights)
            .iter()
            .map(ToString::to_string)
            .collect(),
        certificate: CertificateOut::of(&cert),
    })
}

fn cmd_certify(args: &[String]) -> CliResult<ExitCode> {
    let (Some(apath), Some(fpath)) = (args.first(), args.get(1)) else {
        return Err("usage: canfilt certify <algebra> <filtration> [--grouping ..]".into());
    };
    let a = load_algebra(apath)?;
    if let Some(code) = require_valid(&a)? {
        return Ok(code);
    }
    let f = load_filtration(fpath, a.dim())?;
    let grouping = parse_grouping_flag(&args[2..], &a)?;
    let path = canonical::certify_canonical(&a, &f, Some(&grouping))
        .map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        certified: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        path: Option<&'static str>,
    }
    emit(&Out {
        certified: path.is_some(),
        path: path.map(|p| match p {
            CertifyPath::ConeKkt => "cone-kkt",
            CertifyPath::Recognition => "recognition",
        }),
    })
}

