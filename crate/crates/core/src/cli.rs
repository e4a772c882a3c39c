//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parse or usage error,
//! 3 infeasible for the requested method (overlaps beyond two, heuristic
//! timeout, no unit pivot with the SNF fallback disabled).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::binmat::{check_orthogonal_f2, nullspace_f2, overlap_histogram, overlap_sets, BinaryMatrix, CssPair};
use crate::congruence::{build_system, build_var_index, CongruenceError};
use crate::extend::{
    assemble, csa, verify_orthogonal_fq, verify_support, CsaParams, ExponentAssignment, ExtendError, FieldMatrix,
};
use crate::field::{make_field, FieldSpec};
use crate::formats::{
    paper_hex_assignment, parse_binary, parse_hex_grid, parse_paper_hex, write_binary, write_hex_grid, MatrixFormat,
};
use crate::hgp::hgp;
use crate::modsolve::{solve, SolveError, SolveOptions, Strategy};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {msg}")]
    Io { path: PathBuf, msg: String },
    #[error("{path}: {msg}")]
    Parse { path: PathBuf, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Infeasible(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub status: Status,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "nbcss", version, about = "Non-binary extension of binary CSS parity-check pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F_2 orthogonality, overlap histogram and applicability of the congruence method.
    Check(PairArgs),
    /// Hypergraph product of two classical seeds.
    Hgp(HgpArgs),
    /// Solve the exponent congruences and emit (H_Gamma, H_Delta).
    Extend(ExtendArgs),
    /// Canonical separable assignment with seeded random parameters.
    Csa(CsaArgs),
    /// Check support and GF(2^m) orthogonality of a field-matrix pair.
    Verify(VerifyArgs),
    /// F_2 kernel basis of a binary matrix.
    Kernel(KernelArgs),
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub hc: PathBuf,
    #[arg(long)]
    pub hd: PathBuf,
    /// dense | alist (default: by extension, `.alist` or dense)
    #[arg(long)]
    pub format: Option<MatrixFormat>,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long = "field-degree", default_value_t = 8)]
    pub field_degree: u32,
    /// Primitive polynomial bitmask, hex (`0x11d`) or decimal.
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct HgpArgs {
    #[arg(long)]
    pub h1: PathBuf,
    #[arg(long)]
    pub h2: PathBuf,
    #[arg(long = "out-x")]
    pub out_x: PathBuf,
    #[arg(long = "out-z")]
    pub out_z: PathBuf,
    #[arg(long)]
    pub format: Option<MatrixFormat>,
}

#[derive(Debug, Clone, Args)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, default_value = "eliminate")]
    pub solver: Strategy,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "out-dir")]
    pub out_dir: PathBuf,
    /// Fail with NoUnitPivot instead of falling back to SNF.
    #[arg(long = "no-snf-fallback")]
    pub no_snf_fallback: bool,
    /// Heuristic budget in sweeps over the rows.
    #[arg(long = "max-sweeps", default_value_t = 1000)]
    pub max_sweeps: usize,
    /// Also print the congruence system in the report.
    #[arg(long = "dump-congruences")]
    pub dump_congruences: bool,
    /// Write the elimination row operations to `elimination_trace.txt`.
    #[arg(long = "trace-elimination")]
    pub trace_elimination: bool,
    /// Skip the congruences and use the separable assignment (any even overlap).
    #[arg(long, conflicts_with_all = ["solver", "dump_congruences", "trace_elimination"])]
    pub csa: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CsaArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "out-dir")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub gamma: PathBuf,
    #[arg(long)]
    pub delta: PathBuf,
    /// Read the field matrices as bytes `h` meaning `alpha^(h-1)` in GF(256).
    #[arg(long = "paper-hex")]
    pub paper_hex: bool,
    /// Field used to evaluate paper-hex input.
    #[command(flatten)]
    pub field: FieldArgs,
}

#[derive(Debug, Clone, Args)]
pub struct KernelArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub format: Option<MatrixFormat>,
    /// Write the basis here (dense format) instead of only reporting it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Written as `manifest.json` next to the outputs of `extend` and `csa`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub field_degree: u32,
    pub poly: String,
    pub solver: String,
    pub seed: u64,
    pub outputs: Vec<String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_owned(), msg: e.to_string() })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io { path: path.to_owned(), msg: e.to_string() })
}

fn format_for(path: &Path, explicit: Option<MatrixFormat>) -> MatrixFormat {
    explicit.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("alist") => MatrixFormat::Alist,
        _ => MatrixFormat::Dense,
    })
}

fn read_binary(path: &Path, format: Option<MatrixFormat>) -> Result<BinaryMatrix, CliError> {
    parse_binary(&read(path)?, format_for(path, format))
        .map_err(|e| CliError::Parse { path: path.to_owned(), msg: e.to_string() })
}

fn read_pair(args: &PairArgs) -> Result<CssPair, CliError> {
    let hc = read_binary(&args.hc, args.format)?;
    let hd = read_binary(&args.hd, args.format)?;
    CssPair::new(hc, hd).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_poly(s: &str) -> Result<u32, CliError> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u32::from_str_radix(h, 16),
        None => s.parse(),
    }
    .map_err(|_| CliError::Usage(format!("bad polynomial bitmask '{s}'")))
}

fn field_from(args: &FieldArgs) -> Result<Arc<FieldSpec>, CliError> {
    let poly = args.poly.as_deref().map(parse_poly).transpose()?;
    make_field(args.field_degree, poly).map(Arc::new).map_err(|e| CliError::Usage(e.to_string()))
}

fn manifest_json(m: &RunManifest) -> String {
    let mut s = serde_json::to_string_pretty(m).expect("manifest serializes");
    s.push('\n');
    s
}

fn out_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io { path: dir.to_owned(), msg: e.to_string() })
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check(a) => cmd_check(a),
        Command::Hgp(a) => cmd_hgp(a),
        Command::Extend(a) => cmd_extend(a),
        Command::Csa(a) => cmd_csa(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Kernel(a) => cmd_kernel(a),
    }
}

/// Parses `args` (including the program name), runs, prints, and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            print!("{}", out.report);
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn describe(name: &str, m: &BinaryMatrix) -> String {
    format!("{name}: {}x{} (nnz {})", m.rows(), m.cols(), m.nnz())
}

pub fn cmd_check(args: &PairArgs) -> Result<Outcome, CliError> {
    let pair = read_pair(args)?;
    let mut r = String::new();
    let _ = writeln!(r, "{}", describe("H_C", pair.hc()));
    let _ = writeln!(r, "{}", describe("H_D", pair.hd()));
    let odd = check_orthogonal_f2(&pair);
    if odd.is_empty() {
        let _ = writeln!(r, "F2 orthogonality: ok");
    } else {
        let _ = writeln!(r, "F2 orthogonality: FAILED ({} odd overlaps)", odd.len());
        for o in &odd {
            let _ = writeln!(r, "  odd overlap at ({}, {}): size {}", o.i, o.i_prime, o.size);
        }
    }
    let hist = overlap_histogram(&overlap_sets(&pair));
    let parts: Vec<String> = hist.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    let _ = writeln!(r, "overlap histogram: {}", if parts.is_empty() { "(none)".into() } else { parts.join(" ") });
    let applicable = odd.is_empty() && hist.keys().all(|&k| k == 2);
    if applicable {
        let _ = writeln!(r, "applicable (all overlaps 0 or 2): yes");
    } else if odd.is_empty() {
        let _ = writeln!(r, "applicable (all overlaps 0 or 2): no; overlaps above 2 present, use `csa`");
    } else {
        let _ = writeln!(r, "applicable (all overlaps 0 or 2): no");
    }
    let status = if odd.is_empty() { Status::Ok } else { Status::VerificationFailed };
    Ok(Outcome { report: r, status })
}

pub fn cmd_hgp(args: &HgpArgs) -> Result<Outcome, CliError> {
    let h1 = read_binary(&args.h1, args.format)?;
    let h2 = read_binary(&args.h2, args.format)?;
    let pair = hgp(&h1, &h2).map_err(|e| CliError::Usage(e.to_string()))?;
    write(&args.out_x, &write_binary(pair.hc(), format_for(&args.out_x, args.format)))?;
    write(&args.out_z, &write_binary(pair.hd(), format_for(&args.out_z, args.format)))?;
    let mut r = String::new();
    let _ = writeln!(r, "{}", describe("H_X", pair.hc()));
    let _ = writeln!(r, "{}", describe("H_Z", pair.hd()));
    let ok = check_orthogonal_f2(&pair).is_empty();
    let _ = writeln!(r, "F2 orthogonality: {}", if ok { "ok" } else { "FAILED" });
    Ok(Outcome { report: r, status: if ok { Status::Ok } else { Status::VerificationFailed } })
}

/// Support on both sides and full pairwise orthogonality.
fn verify_report(pair: &CssPair, hg: &FieldMatrix, hd: &FieldMatrix, r: &mut String) -> Result<bool, CliError> {
    let ext = |e: ExtendError| CliError::Usage(e.to_string());
    let mut ok = true;
    for (name, f, b) in [("H_Gamma", hg, pair.hc()), ("H_Delta", hd, pair.hd())] {
        let rep = verify_support(f, b).map_err(ext)?;
        if rep.is_ok() {
            let _ = writeln!(r, "support {name}: ok");
        } else {
            ok = false;
            let _ = writeln!(r, "support {name}: FAILED missing {:?} extra {:?}", rep.missing, rep.extra);
        }
    }
    let bad = verify_orthogonal_fq(hg, hd).map_err(ext)?;
    if bad.is_empty() {
        let _ = writeln!(r, "GF(2^{}) orthogonality: ok", hg.field().degree());
    } else {
        ok = false;
        let _ = writeln!(r, "GF(2^{}) orthogonality: FAILED at {} row pairs", hg.field().degree(), bad.len());
        for (i, k) in bad {
            let _ = writeln!(r, "  nonzero inner product at ({i}, {k})");
        }
    }
    Ok(ok)
}

pub fn cmd_extend(args: &ExtendArgs) -> Result<Outcome, CliError> {
    if args.csa {
        return cmd_csa(&CsaArgs {
            pair: args.pair.clone(),
            field: args.field.clone(),
            seed: args.seed,
            out_dir: args.out_dir.clone(),
        });
    }
    let pair = read_pair(&args.pair)?;
    let field = field_from(&args.field)?;
    let modulus = field.group_order() as u64;
    let table = overlap_sets(&pair);
    let sys = build_system(&pair, &table, modulus).map_err(|e| match e {
        CongruenceError::OverlapTooLarge { .. } | CongruenceError::OddOverlap { .. } => {
            CliError::Infeasible(e.to_string())
        }
        other => CliError::Usage(other.to_string()),
    })?;
    let index = build_var_index(&pair);
    let opts = SolveOptions { strategy: args.solver, snf_fallback: !args.no_snf_fallback, max_sweeps: args.max_sweeps };
    let solved = solve(&sys, &opts, args.seed).map_err(|e| match e {
        SolveError::Timeout { .. } | SolveError::NoUnitPivot { .. } => CliError::Infeasible(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    let asg = ExponentAssignment::from_vector(&index, &solved.exponents, modulus)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let (hg, hd) = assemble(&pair, &asg, &field).map_err(|e| CliError::Usage(e.to_string()))?;

    ensure_dir(&args.out_dir)?;
    let tag = vec![format!("seed={} solver={}", args.seed, solved.used)];
    let mut outputs = Vec::new();
    let mut emit = |name: &str, text: &str| -> Result<(), CliError> {
        let p = out_path(&args.out_dir, name);
        write(&p, text)?;
        outputs.push(p.display().to_string());
        Ok(())
    };
    emit("gamma.hex", &write_hex_grid(&hg, &tag))?;
    emit("delta.hex", &write_hex_grid(&hd, &tag))?;
    let dump = sys.dump(&index);
    emit("congruences.txt", &format!("# {}\n{dump}", tag[0]))?;
    if args.trace_elimination {
        let trace = solved.trace.clone().unwrap_or_default();
        emit("elimination_trace.txt", &format!("# {}\n{trace}", tag[0]))?;
    }
    let manifest = RunManifest {
        command: "extend".into(),
        inputs: vec![args.pair.hc.display().to_string(), args.pair.hd.display().to_string()],
        field_degree: field.degree(),
        poly: format!("{:#x}", field.poly()),
        solver: solved.used.to_string(),
        seed: args.seed,
        outputs: outputs.clone(),
    };
    write(&out_path(&args.out_dir, "manifest.json"), &manifest_json(&manifest))?;

    let mut r = String::new();
    let _ = writeln!(r, "variables: {}, congruences: {} (mod {modulus})", index.len(), sys.n_rows());
    let _ = writeln!(r, "solver: {} (requested {})", solved.used, args.solver);
    if args.dump_congruences {
        r.push_str(&dump);
    }
    let ok = verify_report(&pair, &hg, &hd, &mut r)?;
    for o in &outputs {
        let _ = writeln!(r, "wrote {o}");
    }
    Ok(Outcome { report: r, status: if ok { Status::Ok } else { Status::VerificationFailed } })
}

pub fn cmd_csa(args: &CsaArgs) -> Result<Outcome, CliError> {
    let pair = read_pair(&args.pair)?;
    let field = field_from(&args.field)?;
    let params = CsaParams::random(&pair, field.group_order() as u64, args.seed);
    let (hg, hd) = csa(&pair, &params, &field).map_err(|e| match e {
        ExtendError::OddOverlap { .. } => CliError::Infeasible(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    ensure_dir(&args.out_dir)?;
    let tag = vec![format!("seed={} solver=csa", args.seed)];
    let mut outputs = Vec::new();
    for (name, m) in [("gamma.hex", &hg), ("delta.hex", &hd)] {
        let p = out_path(&args.out_dir, name);
        write(&p, &write_hex_grid(m, &tag))?;
        outputs.push(p.display().to_string());
    }
    #[derive(Serialize)]
    struct ParamsFile<'a> {
        seed: u64,
        #[serde(flatten)]
        params: &'a CsaParams,
    }
    let p = out_path(&args.out_dir, "csa_params.json");
    let mut json =
        serde_json::to_string_pretty(&ParamsFile { seed: args.seed, params: &params }).expect("params serialize");
    json.push('\n');
    write(&p, &json)?;
    outputs.push(p.display().to_string());
    let manifest = RunManifest {
        command: "csa".into(),
        inputs: vec![args.pair.hc.display().to_string(), args.pair.hd.display().to_string()],
        field_degree: field.degree(),
        poly: format!("{:#x}", field.poly()),
        solver: "csa".into(),
        seed: args.seed,
        outputs: outputs.clone(),
    };
    write(&out_path(&args.out_dir, "manifest.json"), &manifest_json(&manifest))?;
    let mut r = String::new();
    let _ = writeln!(r, "CSA parameters drawn with seed {}", args.seed);
    let ok = verify_report(&pair, &hg, &hd, &mut r)?;
    for o in &outputs {
        let _ = writeln!(r, "wrote {o}");
    }
    Ok(Outcome { report: r, status: if ok { Status::Ok } else { Status::VerificationFailed } })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let pair = read_pair(&args.pair)?;
    let parse_err = |p: &Path| {
        let p = p.to_owned();
        move |e: crate::formats::FormatError| CliError::Parse { path: p.clone(), msg: e.to_string() }
    };
    let mut r = String::new();
    let (hg, hd) = if args.paper_hex {
        let field = field_from(&args.field)?;
        if field.degree() != 8 {
            return Err(CliError::Usage("--paper-hex entries are GF(256) bytes; use --field-degree 8".into()));
        }
        let g = parse_paper_hex(&read(&args.gamma)?).map_err(parse_err(&args.gamma))?;
        let d = parse_paper_hex(&read(&args.delta)?).map_err(parse_err(&args.delta))?;
        for (name, grid, b) in [("H_Gamma", &g, pair.hc()), ("H_Delta", &d, pair.hd())] {
            if grid.support() != *b {
                let _ = writeln!(r, "support {name}: FAILED (pattern differs from binary matrix)");
                return Ok(Outcome { report: r, status: Status::VerificationFailed });
            }
        }
        let asg = paper_hex_assignment(&g, &d);
        let mut congruences_ok = true;
        match build_system(&pair, &overlap_sets(&pair), 255) {
            Ok(sys) => {
                let index = build_var_index(&pair);
                let v = asg.to_vector(&index).map_err(|e| CliError::Usage(e.to_string()))?;
                let res = sys.residual(&v).map_err(|e| CliError::Usage(e.to_string()))?;
                let bad: Vec<_> = sys.labels().zip(&res).filter(|(_, &x)| x != 0).collect();
                congruences_ok = bad.is_empty();
                let _ = writeln!(
                    r,
                    "exponent congruences (mod 255): {} of {} satisfied",
                    sys.n_rows() - bad.len(),
                    sys.n_rows()
                );
                for (l, x) in bad {
                    let _ = writeln!(r, "  ({},{},{},{}) residual {x}", l.i, l.i_prime, l.j, l.j_prime);
                }
            }
            Err(e) => {
                let _ = writeln!(r, "exponent congruences: not applicable ({e})");
            }
        }
        let _ = writeln!(r, "evaluating alpha^(h-1) in {:?}", field);
        let (hg, hd) = assemble(&pair, &asg, &field).map_err(|e| CliError::Usage(e.to_string()))?;
        if !congruences_ok {
            let ok = verify_report(&pair, &hg, &hd, &mut r)?;
            let _ = ok;
            return Ok(Outcome { report: r, status: Status::VerificationFailed });
        }
        (hg, hd)
    } else {
        let hg = parse_hex_grid(&read(&args.gamma)?).map_err(parse_err(&args.gamma))?;
        let hd = parse_hex_grid(&read(&args.delta)?).map_err(parse_err(&args.delta))?;
        (hg, hd)
    };
    let ok = verify_report(&pair, &hg, &hd, &mut r)?;
    Ok(Outcome { report: r, status: if ok { Status::Ok } else { Status::VerificationFailed } })
}

pub fn cmd_kernel(args: &KernelArgs) -> Result<Outcome, CliError> {
    let m = read_binary(&args.matrix, args.format)?;
    let basis = nullspace_f2(&m);
    let mut r = String::new();
    let _ = writeln!(r, "{}", describe("matrix", &m));
    let _ = writeln!(r, "kernel dimension: {} (rank {})", basis.len(), m.cols() - basis.len());
    let kernel = BinaryMatrix::from_dense(m.cols(), &basis).expect("basis vectors have the column length");
    let text = crate::formats::write_dense(&kernel);
    match &args.out {
        Some(p) => {
            write(p, &text)?;
            let _ = writeln!(r, "wrote {}", p.display());
        }
        None => r.push_str(&text),
    }
    Ok(Outcome { report: r, status: Status::Ok })
}
