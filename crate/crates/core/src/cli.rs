//! Command surface of the `hopfcat` binary.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails or
//! the structure lacks what the command needs, 2 for unreadable input or bad
//! arguments.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frobenius::{check_frobenius_system, with_frobenius};
use crate::gallery::{group_algebra, groupoid_category, monoid_bialgebra, sweedler_hopf_algebra, FiniteGroupoid, MonoidTable};
use crate::hopf::{check_weak_hopf, pack, pack_frobenius_data, solve_antipode, PackedAlgebra};
use crate::integrals::{generic_integral, integral_space, nonsingularity_report, IntegralFamily, Side};
use crate::io::{
    axiom_report_json, integral_family_json, ls_report_json, parse_structure, to_json_text, write_structure, CandidateFamilies,
    Structure,
};
use crate::larson_sweedler::{frobenius_from_hopf_integral, ls_report, synthesize_antipode};
use crate::vcat::{dual_category, dual_semi_hopf, verify_axioms, AxiomSet, VCatData};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hopfcat", version, about = "Exact checks and synthesis for Hopf and Frobenius linear categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify axiom sets on a structure file.
    Check {
        file: PathBuf,
        /// Comma-separated axiom sets, e.g. `hopf,frobenius` or `weak-hopf`.
        #[arg(long, value_delimiter = ',', default_value = "hopf", value_parser = parse_check)]
        axioms: Vec<CheckTarget>,
    },
    /// Compute integral spaces with the ranks of their `p` and `q` maps.
    Integrals {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        /// Restrict to one anchor object.
        #[arg(long)]
        anchor: Option<usize>,
    },
    /// Add synthesized layers and write the new structure file.
    Synthesize {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Run the Larson-Sweedler equivalence battery.
    LsReport { file: PathBuf },
    /// Emit a structure file for a built-in example.
    Gallery {
        #[command(subcommand)]
        which: GalleryCmd,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckTarget {
    Axioms(AxiomSet),
    WeakHopf,
}

impl CheckTarget {
    fn name(self) -> &'static str {
        match self {
            CheckTarget::Axioms(a) => a.name(),
            CheckTarget::WeakHopf => "weak-hopf",
        }
    }
}

fn parse_check(s: &str) -> std::result::Result<CheckTarget, String> {
    if s == "weak-hopf" {
        return Ok(CheckTarget::WeakHopf);
    }
    s.parse().map(CheckTarget::Axioms).map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Antipode,
    Frobenius,
    Dual,
    Pack,
}

#[derive(Debug, Subcommand)]
pub enum GalleryCmd {
    /// Group algebra of a named group table.
    Group {
        /// `c<n>`, `klein4` or `trivial`.
        #[arg(long)]
        table: String,
    },
    /// Groupoid category of a named groupoid.
    Groupoid {
        /// Pair groupoid on this many objects.
        #[arg(long, conflicts_with = "swap")]
        pair: Option<usize>,
        /// The cyclic group of order two acting on two points by swapping.
        #[arg(long)]
        swap: bool,
    },
    /// Monoid bialgebra of a named monoid table.
    Monoid {
        /// `idempotent2`, `idempotent3`, or any group table name.
        #[arg(long)]
        table: String,
    },
    /// The four-dimensional Hopf algebra with a nilpotent skew-primitive.
    Sweedler,
}

/// Exit code plus the text destined for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses arguments and runs the command. Usage errors exit with 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

enum Failure {
    Input(Error),
    Command(Error),
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check { file, axioms } => load(file).and_then(|s| Ok(cmd_check(&s, axioms))),
        Command::Integrals { file, side, anchor } => {
            load(file).and_then(|s| cmd_integrals(&s.data, (*side).into(), *anchor).map_err(Failure::Command))
        }
        Command::Synthesize { file, target } => {
            load(file).and_then(|s| cmd_synthesize(&s, *target).map_err(Failure::Command))
        }
        Command::LsReport { file } => load(file).and_then(|s| cmd_ls_report(&s.data).map_err(Failure::Command)),
        Command::Gallery { which } => cmd_gallery(which).map_err(Failure::Input),
    };
    match result {
        Ok((ok, text)) => emit(cli.output.as_deref(), if ok { EXIT_OK } else { EXIT_FAILED }, text),
        Err(Failure::Input(e)) => Outcome::input_error(e),
        Err(Failure::Command(e)) => Outcome { code: EXIT_FAILED, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn emit(path: Option<&Path>, code: i32, text: String) -> Outcome {
    match path {
        None => Outcome { code, stdout: text, stderr: String::new() },
        Some(p) => match std::fs::write(p, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome::input_error(format!("{}: {e}", p.display())),
        },
    }
}

fn load(path: &Path) -> std::result::Result<Structure, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(Error::Format(format!("{}: {e}", path.display()))))?;
    parse_structure(&text).map_err(Failure::Input)
}

/// Short machine-readable name of an error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Linalg(_) => "Linalg",
        Error::MissingLayer(_) => "MissingLayer",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NoAntipode { .. } => "NoAntipode",
        Error::NotInvertibleAntipode { .. } => "NotInvertibleAntipode",
        Error::SingularIntegral { .. } => "SingularIntegral",
        Error::AxiomsFailed(_) => "AxiomsFailed",
        Error::NotHopf(_) => "NotHopf",
        Error::NotCasimir => "NotCasimir",
        Error::InvalidFrobeniusSystem(_) => "InvalidFrobeniusSystem",
        Error::InvalidTable(_) => "InvalidTable",
        Error::InvalidGroupoid(_) => "InvalidGroupoid",
        Error::InvalidGAlgebra(_) => "InvalidGAlgebra",
        Error::InvalidForm(_) => "InvalidForm",
        Error::Format(_) => "Format",
    }
}

fn error_json(e: &Error) -> Value {
    json!({"passed": false, "error": e.to_string(), "error_kind": error_kind(e)})
}

/// The data with its antipode solved for when the file declares none.
fn with_antipode(data: &VCatData) -> Result<(VCatData, bool)> {
    if data.antipode.is_some() {
        return Ok((data.clone(), false));
    }
    let mut out = data.clone();
    out.antipode = Some(solve_antipode(data)?);
    Ok((out, true))
}

fn check_one(s: &Structure, target: CheckTarget) -> Result<Value> {
    let data = &s.data;
    let report = match target {
        CheckTarget::Axioms(AxiomSet::Hopf) => {
            let (full, solved) = with_antipode(data)?;
            let mut v = axiom_report_json(&verify_axioms(&full, AxiomSet::Hopf)?);
            v["antipode_solved"] = json!(solved);
            return Ok(v);
        }
        CheckTarget::Axioms(AxiomSet::Frobenius) if data.opcategory.is_none() => {
            let (Some(casimir), Some(trace)) = (&s.families.casimir, &s.families.trace) else {
                return Err(Error::MissingLayer(crate::error::Layer::Opcategory));
            };
            let sys = crate::frobenius::FrobeniusSystem { casimir: casimir.clone(), trace: trace.clone() };
            check_frobenius_system(data, &sys)?
        }
        CheckTarget::Axioms(set) => verify_axioms(data, set)?,
        CheckTarget::WeakHopf => {
            let packed = if data.n() == 1 { PackedAlgebra::from_one_object(data)? } else { pack(&with_antipode(data)?.0)? };
            let mut v = axiom_report_json(&check_weak_hopf(&packed));
            v["unit_grouplike"] = json!(packed.unit_is_grouplike());
            return Ok(v);
        }
    };
    Ok(axiom_report_json(&report))
}

fn cmd_check(s: &Structure, targets: &[CheckTarget]) -> (bool, String) {
    let mut results = serde_json::Map::new();
    let mut all = true;
    for &t in targets {
        let v = check_one(s, t).unwrap_or_else(|e| error_json(&e));
        all &= v["passed"].as_bool().unwrap_or(false);
        results.insert(t.name().into(), v);
    }
    (all, to_json_text(&json!({"passed": all, "checks": results})))
}

fn cmd_integrals(data: &VCatData, side: Side, anchor: Option<usize>) -> Result<(bool, String)> {
    let anchors: Vec<usize> = match anchor {
        Some(a) if a >= data.n() => return Err(Error::Format(format!("anchor {a} out of range"))),
        Some(a) => vec![a],
        None => (0..data.n()).collect(),
    };
    let mut spaces = Vec::new();
    for a in anchors {
        let space = integral_space(data, a, side)?;
        let basis: Vec<Value> = space
            .basis
            .iter()
            .map(|t| {
                let ns = nonsingularity_report(data, t)?;
                let mut v = integral_family_json(t);
                v["p_rank"] = json!(ns.p_ranks[(a, a)]);
                v["q_rank"] = json!(ns.q_ranks[(a, a)]);
                v["hom_dim"] = json!(data.dim(a, a));
                Ok(v)
            })
            .collect::<Result<_>>()?;
        spaces.push(json!({"anchor": a, "dim": space.dim(), "basis": basis}));
    }
    let mut out = json!({"side": side, "spaces": spaces});
    if let Some(t) = generic_integral(data, side)? {
        let ns = nonsingularity_report(data, &t)?;
        out["generic"] = json!({
            "p_ranks": pair_table(&ns.p_ranks),
            "q_ranks": pair_table(&ns.q_ranks),
            "left_nonsingular": ns.left_nonsingular,
            "right_nonsingular": ns.right_nonsingular,
        });
    }
    Ok((true, to_json_text(&out)))
}

fn pair_table(p: &crate::vcat::PairMap<usize>) -> Value {
    let n = p.objects();
    json!((0..n).map(|x| (0..n).map(|y| p[(x, y)]).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn family_or_generic(data: &VCatData, given: &Option<IntegralFamily>, side: Side) -> Result<IntegralFamily> {
    match given {
        Some(t) => Ok(t.clone()),
        None => generic_integral(data, side)?
            .ok_or_else(|| Error::SingularIntegral { map: if side == Side::Left { "p" } else { "q" }, object: 0 }),
    }
}

fn synthesize(s: &Structure, target: Target) -> Result<Structure> {
    let data = &s.data;
    match target {
        Target::Antipode => {
            let tl = family_or_generic(data, &s.families.left_integral, Side::Left)?;
            let tr = family_or_generic(data, &s.families.right_integral, Side::Right)?;
            let (antipode, report) = synthesize_antipode(data, &tl, &tr)?;
            if let Some(e) = report.first_failure() {
                return Err(Error::AxiomsFailed(format!("synthesized antipode: {} at {:?}", e.axiom, e.indices)));
            }
            let mut out = s.clone();
            out.data.antipode = Some(antipode);
            Ok(out)
        }
        Target::Frobenius => {
            let (full, _) = with_antipode(data)?;
            let t = family_or_generic(&full, &s.families.left_integral, Side::Left)?;
            let synth = frobenius_from_hopf_integral(&full, &t)?;
            if let Some(e) = synth.report.first_failure() {
                return Err(Error::AxiomsFailed(format!("synthesized Frobenius system: {} at {:?}", e.axiom, e.indices)));
            }
            let mut families = s.families.clone();
            families.casimir = Some(synth.system.casimir.clone());
            families.trace = Some(synth.system.trace.clone());
            Ok(Structure { data: with_frobenius(&full, &synth.system)?, families })
        }
        Target::Dual => {
            let dual = if data.category.is_some() && data.local_comonoid.is_some() {
                dual_semi_hopf(data)?
            } else {
                dual_category(data)?
            };
            Ok(Structure::new(dual))
        }
        Target::Pack => {
            let packed = if data.local_comonoid.is_some() {
                match with_antipode(data) {
                    Ok((full, _)) => pack(&full)?,
                    Err(Error::NoAntipode { .. }) => pack(data)?,
                    Err(e) => return Err(e),
                }
            } else {
                let p = pack_frobenius_data(data)?;
                return Ok(Structure::new(p.as_frobenius_data()));
            };
            Ok(Structure::new(packed.as_bialgebra_data()))
        }
    }
}

fn cmd_synthesize(s: &Structure, target: Target) -> Result<(bool, String)> {
    Ok((true, write_structure(&synthesize(s, target)?)))
}

fn cmd_ls_report(data: &VCatData) -> Result<(bool, String)> {
    let r = ls_report(data)?;
    Ok((r.consistent, to_json_text(&ls_report_json(&r))))
}

/// Group tables by name: `c<n>`, `klein4`, `trivial`, `idempotent2`, `idempotent3`.
pub fn named_table(name: &str) -> Result<MonoidTable> {
    match name {
        "trivial" => Ok(MonoidTable::trivial()),
        "klein4" => Ok(MonoidTable::klein_four()),
        "idempotent2" => Ok(MonoidTable::idempotent2()),
        "idempotent3" => Ok(MonoidTable::idempotent3()),
        _ => name
            .strip_prefix('c')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .map(MonoidTable::cyclic)
            .ok_or_else(|| Error::InvalidTable(format!("unknown table `{name}`"))),
    }
}

pub fn gallery_structure(which: &GalleryCmd) -> Result<Structure> {
    let data = match which {
        GalleryCmd::Group { table } => group_algebra(&named_table(table)?)?,
        GalleryCmd::Monoid { table } => monoid_bialgebra(&named_table(table)?),
        GalleryCmd::Groupoid { pair: Some(k), .. } if *k >= 1 => groupoid_category(&FiniteGroupoid::pair(*k)),
        GalleryCmd::Groupoid { swap: true, .. } => groupoid_category(&FiniteGroupoid::c2_swap()),
        GalleryCmd::Groupoid { .. } => {
            return Err(Error::InvalidGroupoid("choose --pair <n> with n >= 1 or --swap".into()))
        }
        GalleryCmd::Sweedler => sweedler_hopf_algebra(),
    };
    Ok(Structure { data, families: CandidateFamilies::default() })
}

fn cmd_gallery(which: &GalleryCmd) -> Result<(bool, String)> {
    Ok((true, write_structure(&gallery_structure(which)?)))
}
