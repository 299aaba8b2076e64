//! The `orthoplex` command line.
//!
//! Exit codes: 0 on success, 2 on invalid input or a failed check, 3 when the node budget runs
//! out before the search finishes. `--json` output carries `"schema_version": 1` and follows
//! `schemas/orthoplex.schema.json`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::arithmetic::{
    discriminant, enumerate_mod8, epsilon_of, is_isotropic_at, is_positive_definite,
    is_positive_semidefinite, local_classes, primes_below, qform_from_bend_vector,
};
use crate::config::{
    self, bend_vector, check_dgm, check_gramian, FMatrix, FMatrixJson, BUILTIN_NAMES,
};
use crate::groups::{
    apply, bring_to_front, generators, is_orthogonal, verify_apollonian_relations,
    verify_dual_involutions, verify_platonic_relations, RelationReport, TableName,
};
use crate::packing::{
    export_scene, export_spheres, generate, missing_admissible, scene_from_configuration, Mode,
    PackingError, PackingReport, PackingSpec, SceneFormat, DEFAULT_BUDGET,
};
use crate::QSqrt2;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "orthoplex",
    version,
    about = "Orthoplicial Apollonian sphere packings in exact arithmetic"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate a packing up to a bend cap and print the full report.
    Gen(GenArgs),
    /// Print the bends of a packing up to a bend cap.
    Bends(SearchArgs),
    /// List admissible integers that are missing from the bend set.
    Scan(ScanArgs),
    /// Print the mod-4 obstruction of a seed.
    Obstruct(SeedArgs),
    /// Print the mod-8 filtration of bend vectors.
    Mod8,
    /// Print the quaternary form of a seed, its discriminant, definiteness and isotropy.
    Qform(QformArgs),
    /// Check configuration identities and group relations.
    Verify(VerifyArgs),
    /// Inspect generator tables.
    #[command(subcommand)]
    Groups(GroupsCommand),
    /// Export spheres for external renderers.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
struct SeedArgs {
    /// `builtin:F0`, `builtin:F1`, `builtin:F7d`, or a path to an F-matrix JSON file.
    #[arg(long)]
    seed: String,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    seed: SeedArgs,
    /// Largest bend to enumerate.
    #[arg(long)]
    cap: i64,
    /// Maximum number of configurations to visit.
    #[arg(long, env = "ORTHOPLEX_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Expand each frontier level on all cores.
    #[arg(long)]
    parallel: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ModeArg {
    Bend,
    Geom,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Bend)]
    mode: ModeArg,
    /// Half-width of the bounding box for geometric mode, as `p/q+r/s*sqrt2`.
    #[arg(long)]
    bbox: Option<String>,
    /// Write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[command(flatten)]
    search: SearchArgs,
    /// Smallest integer to check.
    #[arg(long, default_value_t = 1)]
    from: i64,
}

#[derive(Args, Debug)]
struct QformArgs {
    #[command(flatten)]
    seed: SeedArgs,
    /// Sphere (1–8) whose bend plays the role of `b`.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=8))]
    ordering: u8,
    /// Test isotropy at every prime below this bound.
    #[arg(long, default_value_t = 100)]
    primes_below: u64,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyArgs {
    /// Check F0, F1 and F7d and every group table.
    #[arg(long)]
    all_builtin: bool,
    /// Check one F-matrix file or builtin seed.
    #[arg(long)]
    seed: Option<String>,
}

#[derive(Subcommand, Debug)]
enum GroupsCommand {
    /// Check orthogonality of every generator and all listed relations.
    Verify,
    /// Print a generator table as JSON integer arrays.
    Show {
        /// One of Platonic, PlatonicOriented, Apollonian, ApollonianOriented, Stabilizer1,
        /// Stabilizer1Oriented, DualApollonian.
        table: String,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[command(flatten)]
    seed: SeedArgs,
    /// Largest bend to export; omit to export only the seed configuration.
    #[arg(long)]
    cap: Option<i64>,
    #[arg(long, env = "ORTHOPLEX_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long)]
    bbox: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code and, for budget exhaustion, the partial report.
struct Failure {
    code: i32,
    message: String,
    partial: Option<Box<PackingReport>>,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
            partial: None,
        }
    }
}

impl From<PackingError> for Failure {
    fn from(e: PackingError) -> Self {
        match e {
            PackingError::BudgetExceeded { ref partial, .. } => Self {
                code: 3,
                message: e.to_string(),
                partial: Some(partial.clone()),
            },
            other => Self::invalid(other.to_string()),
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Packing(p) => p.into(),
            other => Self::invalid(other.to_string()),
        }
    }
}

macro_rules! fail_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Self::invalid(e.to_string())
            }
        }
    )*};
}
fail_from!(
    config::ConfigError,
    crate::arithmetic::ArithmeticError,
    crate::groups::GroupError
);

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed stdout (e.g. piped into `head`) is not an error.
        let code = if e.kind() == std::io::ErrorKind::BrokenPipe {
            0
        } else {
            2
        };
        Self {
            code,
            message: e.to_string(),
            partial: None,
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the command line with process stdout and stderr.
pub fn run(argv: Vec<String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with(argv: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let json = cli.json;
    let result = dispatch(cli, out);
    match result {
        Ok(()) => 0,
        Err(f) if f.code == 0 => 0,
        Err(f) => {
            if let (true, Some(partial)) = (json, &f.partial) {
                let _ = emit_json(out, "gen", json!({ "error": f.message, "report": partial }));
            }
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Gen(a) => cmd_gen(a, json, out),
        Command::Bends(a) => cmd_bends(a, json, out),
        Command::Scan(a) => cmd_scan(a, json, out),
        Command::Obstruct(a) => cmd_obstruct(a, json, out),
        Command::Mod8 => cmd_mod8(json, out),
        Command::Qform(a) => cmd_qform(a, json, out),
        Command::Verify(a) => cmd_verify(a, json, out),
        Command::Groups(GroupsCommand::Verify) => cmd_groups_verify(json, out),
        Command::Groups(GroupsCommand::Show { table }) => cmd_groups_show(&table, out),
        Command::Export(a) => cmd_export(a, out),
    }
}

/// Resolves a builtin name or reads and validates an F-matrix JSON file.
pub fn load_seed(spec: &str) -> Result<FMatrix, String> {
    if spec.starts_with("builtin:") || BUILTIN_NAMES.contains(&spec) {
        return config::builtin(spec).map_err(|e| e.to_string());
    }
    let text =
        fs::read_to_string(spec).map_err(|e| format!("cannot read seed file {spec:?}: {e}"))?;
    let parsed: FMatrixJson = serde_json::from_str(&text)
        .map_err(|e| format!("seed file {spec:?} is not F-matrix JSON: {e}"))?;
    let f = FMatrix::from_json(&parsed).map_err(|e| format!("seed file {spec:?}: {e}"))?;
    f.validate()
        .map_err(|e| format!("seed file {spec:?}: {e}"))?;
    Ok(f)
}

fn seed(args: &SeedArgs) -> Result<FMatrix, Failure> {
    load_seed(&args.seed).map_err(Failure::invalid)
}

fn parse_bbox(s: &Option<String>) -> Result<Option<QSqrt2>, Failure> {
    s.as_deref()
        .map(|t| {
            t.parse::<QSqrt2>()
                .map_err(|e| Failure::invalid(format!("--bbox: {e}")))
        })
        .transpose()
}

fn emit_json(out: &mut dyn Write, command: &str, body: Value) -> std::io::Result<()> {
    let mut obj = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Value::Object(o), Value::Object(b)) = (&mut obj, body) {
        o.extend(b);
    }
    serde_json::to_writer_pretty(&mut *out, &obj)?;
    writeln!(out)
}

fn big(n: &BigInt) -> Value {
    n.to_i64()
        .map(Value::from)
        .unwrap_or_else(|| Value::from(n.to_string()))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn search(a: &SearchArgs, mode: Mode, bbox: Option<QSqrt2>) -> Result<PackingReport, Failure> {
    let mut spec = PackingSpec::new(seed(&a.seed)?, a.cap, mode)
        .with_budget(a.budget)
        .parallel(a.parallel);
    spec.bbox = bbox;
    Ok(generate(&spec)?)
}

fn cmd_gen(a: GenArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let mode = match a.mode {
        ModeArg::Bend => Mode::BendOnly,
        ModeArg::Geom => Mode::Geometric,
    };
    let report = search(&a.search, mode, parse_bbox(&a.bbox)?)?;
    if let Some(path) = &a.out {
        let mut f = fs::File::create(path)?;
        emit_json(
            &mut f,
            "gen",
            json!({ "seed": a.search.seed.seed, "report": report }),
        )?;
    }
    if json {
        emit_json(
            out,
            "gen",
            json!({ "seed": a.search.seed.seed, "report": report }),
        )?;
    } else {
        writeln!(out, "seed: {}", a.search.seed.seed)?;
        writeln!(out, "mode: {:?}, cap: {}", report.mode, report.bend_cap)?;
        writeln!(out, "configurations: {}", report.configurations)?;
        if report.mode == Mode::Geometric {
            writeln!(out, "spheres: {}", report.spheres.len())?;
        }
        writeln!(out, "classification: {:?}", report.classification)?;
        match report.obstruction {
            Some(o) => writeln!(
                out,
                "epsilon: {:+}, forbidden residue: {} (mod 4)",
                o.epsilon, o.forbidden_residue
            )?,
            None => writeln!(out, "epsilon: none (seed not primitive)")?,
        }
        writeln!(
            out,
            "obstruction violations: {}",
            report.obstruction_violations.len()
        )?;
        writeln!(out, "bends: {}", join(&report.bends))?;
    }
    Ok(())
}

fn cmd_bends(a: SearchArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let report = search(&a, Mode::BendOnly, None)?;
    if json {
        emit_json(
            out,
            "bends",
            json!({
                "seed": a.seed.seed,
                "cap": a.cap,
                "bends": report.bends,
                "frontier_exhausted": report.frontier_exhausted,
            }),
        )?;
    } else {
        writeln!(out, "{}", join(&report.bends))?;
    }
    Ok(())
}

fn cmd_scan(a: ScanArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let report = search(&a.search, Mode::BendOnly, None)?;
    let missing = missing_admissible(&report, a.from, a.search.cap)?;
    let class = report
        .obstruction
        .expect("missing_admissible requires an obstruction");
    let complete_from = missing.last().map_or(a.from, |m| m + 1);
    if json {
        emit_json(
            out,
            "scan",
            json!({
                "seed": a.search.seed.seed,
                "from": a.from,
                "cap": a.search.cap,
                "epsilon": class.epsilon,
                "forbidden_residue": class.forbidden_residue,
                "missing_admissible": missing,
                "complete_from": complete_from,
                "frontier_exhausted": report.frontier_exhausted,
            }),
        )?;
    } else {
        writeln!(
            out,
            "forbidden residue: {} (mod 4)",
            class.forbidden_residue
        )?;
        writeln!(
            out,
            "missing admissible in [{}, {}]: {}",
            a.from,
            a.search.cap,
            missing.len()
        )?;
        if !missing.is_empty() {
            writeln!(out, "  {}", join(&missing))?;
        }
        writeln!(
            out,
            "every admissible integer in [{}, {}] is a bend",
            complete_from, a.search.cap
        )?;
    }
    Ok(())
}

fn cmd_obstruct(a: SeedArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let f = seed(&a)?;
    let bv = bend_vector(&f);
    let int = bv
        .to_integral()
        .ok_or_else(|| Failure::invalid(format!("seed bends {bv} are not integral")))?;
    let eight = int.eight();
    let class = epsilon_of(&eight)?;
    if json {
        emit_json(
            out,
            "obstruct",
            json!({
                "seed": a.seed,
                "bends": eight.iter().map(big).collect::<Vec<_>>(),
                "epsilon": class.epsilon,
                "forbidden_residue": class.forbidden_residue,
            }),
        )?;
    } else {
        writeln!(out, "bends: {}", join(&eight))?;
        writeln!(out, "epsilon: {:+}", class.epsilon)?;
        writeln!(
            out,
            "forbidden residue: {} (mod 4)",
            class.forbidden_residue
        )?;
    }
    Ok(())
}

fn cmd_mod8(json: bool, out: &mut dyn Write) -> CmdResult {
    let r = enumerate_mod8();
    if json {
        emit_json(out, "mod8", json!({ "filtration": r }))?;
    } else {
        writeln!(out, "five-vectors with F(b) = 0 mod 8: {}", r.solutions)?;
        writeln!(out, "distinct eight-tuples:           {}", r.eight_tuples)?;
        writeln!(out, "with an odd entry:               {}", r.with_odd_entry)?;
        writeln!(out, "pairs ordered:                   {}", r.pair_ordered)?;
        writeln!(
            out,
            "representatives:                 {}",
            r.representatives.len()
        )?;
        for t in &r.representatives {
            writeln!(out, "  ({})", join(t))?;
        }
        writeln!(out, "classes mod 4:")?;
        for t in &r.mod4_classes {
            writeln!(out, "  ({})", join(t))?;
        }
    }
    Ok(())
}

fn cmd_qform(a: QformArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let f = apply(&bring_to_front(a.ordering as usize), &seed(&a.seed)?);
    let bv = bend_vector(&f);
    let int = bv
        .to_integral()
        .ok_or_else(|| Failure::invalid(format!("seed bends {bv} are not integral")))?;
    let q = qform_from_bend_vector(&int)?;
    let delta = discriminant(&q);
    let pd = is_positive_definite(&q);
    let psd = is_positive_semidefinite(&q);
    let isotropy = primes_below(a.primes_below)
        .into_iter()
        .map(|p| is_isotropic_at(&q, p))
        .collect::<Result<Vec<_>, _>>()?;
    let classes: Vec<u8> = local_classes(&q).into_iter().collect();
    if json {
        emit_json(
            out,
            "qform",
            json!({
                "seed": a.seed.seed,
                "ordering": a.ordering,
                "bend_vector": int.entries().iter().map(big).collect::<Vec<_>>(),
                "form": { "A": big(&q.a), "B": big(&q.b), "C": big(&q.c), "D": big(&q.d), "b": big(&q.shift_b) },
                "discriminant": big(&delta),
                "positive_definite": pd,
                "positive_semidefinite": psd,
                "isotropy": isotropy,
                "local_classes": classes,
            }),
        )?;
    } else {
        writeln!(out, "bend vector: {int}")?;
        writeln!(out, "{q}")?;
        writeln!(out, "discriminant: {delta}")?;
        writeln!(out, "positive definite: {pd}, positive semidefinite: {psd}")?;
        writeln!(
            out,
            "values mod 4 on the congruence lattice: {{{}}}",
            join(&classes)
        )?;
        writeln!(out, "prime  isotropic  witness")?;
        for i in &isotropy {
            let w = i
                .witness
                .map_or("-".to_string(), |w| format!("({})", join(&w)));
            writeln!(out, "{:>5}  {:<9}  {}", i.prime, i.isotropic, w)?;
        }
    }
    Ok(())
}

struct Check {
    name: String,
    holds: bool,
}

fn seed_checks(name: &str, f: &FMatrix) -> Vec<Check> {
    vec![
        Check {
            name: format!("{name}: F·Q_Σ·Fᵀ = G"),
            holds: check_gramian(f),
        },
        Check {
            name: format!("{name}: Fᵀ·Q_F·F = Q_W"),
            holds: check_dgm(f),
        },
    ]
}

fn group_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for t in TableName::ALL {
        let bad: Vec<&str> = generators(t)
            .generators
            .iter()
            .filter(|g| !is_orthogonal(&g.matrix))
            .map(|g| g.label.as_str())
            .collect();
        checks.push(Check {
            name: format!("{t}: every generator preserves Q_F with det ±1"),
            holds: bad.is_empty(),
        });
    }
    let reports: [RelationReport; 3] = [
        verify_platonic_relations(),
        verify_apollonian_relations(),
        verify_dual_involutions(),
    ];
    for r in reports {
        for c in r.checks {
            checks.push(Check {
                name: format!("{}: {} = I", r.table, c.relation),
                holds: c.holds,
            });
        }
    }
    checks
}

fn emit_checks(command: &str, checks: &[Check], json: bool, out: &mut dyn Write) -> CmdResult {
    let passed = checks.iter().filter(|c| c.holds).count();
    if json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "holds": c.holds }))
            .collect();
        emit_json(
            out,
            command,
            json!({ "checks": list, "passed": passed, "total": checks.len() }),
        )?;
    } else {
        for c in checks {
            writeln!(out, "{}  {}", if c.holds { "ok  " } else { "FAIL" }, c.name)?;
        }
        writeln!(out, "{passed}/{} checks hold", checks.len())?;
    }
    if passed == checks.len() {
        Ok(())
    } else {
        Err(Failure::invalid(format!(
            "{} of {} checks failed",
            checks.len() - passed,
            checks.len()
        )))
    }
}

fn cmd_verify(a: VerifyArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let mut checks = Vec::new();
    if a.all_builtin {
        for name in BUILTIN_NAMES {
            checks.extend(seed_checks(name, &config::builtin(name)?));
        }
        checks.extend(group_checks());
    } else if let Some(s) = &a.seed {
        checks.extend(seed_checks(s, &load_seed(s).map_err(Failure::invalid)?));
    }
    emit_checks("verify", &checks, json, out)
}

fn cmd_groups_verify(json: bool, out: &mut dyn Write) -> CmdResult {
    emit_checks("groups-verify", &group_checks(), json, out)
}

fn cmd_groups_show(table: &str, out: &mut dyn Write) -> CmdResult {
    let t: TableName = table.parse()?;
    let body = generators(t).to_json();
    emit_json(
        out,
        "groups-show",
        json!({ "table": body["table"], "generators": body["generators"] }),
    )?;
    Ok(())
}

fn cmd_export(a: ExportArgs, out: &mut dyn Write) -> CmdResult {
    let f = seed(&a.seed)?;
    let format = match a.format {
        FormatArg::Csv => SceneFormat::Csv,
        FormatArg::Json => SceneFormat::Json,
    };
    let bytes = match a.cap {
        None => export_spheres(&scene_from_configuration(&f), format),
        Some(cap) => {
            let mut spec = PackingSpec::new(f, cap, Mode::Geometric).with_budget(a.budget);
            spec.bbox = parse_bbox(&a.bbox)?;
            export_scene(&generate(&spec)?, format)?
        }
    };
    match &a.out {
        Some(path) => fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    Ok(())
}
