//! Batch command-line front end: parse JSON code descriptions, run the
//! computations, verify the identities, and emit JSON or text.
//!
//! Exit codes: 0 on success (and for `verify` commands, only when the
//! identity holds exactly), 1 when a verified identity fails, 2 on usage
//! errors, unreadable input, or exceeded size caps.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::averaging::{
    avg_intersection_code_induced, avg_intersection_codes, avg_lr_cjwe, verify_average_identity,
    AverageMode, AverageReport,
};
use crate::codes::{CodeSpec, JointCode, JointCodeSpec, LinearCode};
use crate::cycleindex::{joint_cycle_index, t_substitution};
use crate::enumerators::{cjwe, cwe_genus, lr_cjwe};
use crate::error::{Error, Result};
use crate::macwilliams::{verify_duality, DualPattern, VerifyReport};
use crate::polynomial::SparsePoly;

#[derive(Parser, Debug)]
#[command(
    name = "jointenum",
    about = "Exact weight enumerators, cycle indices and MacWilliams transforms for codes over F_q and Z_k",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Mode {
    Distinct,
    Uniform,
}

impl From<Mode> for AverageMode {
    fn from(mode: Mode) -> AverageMode {
        match mode {
            Mode::Distinct => AverageMode::Distinct,
            Mode::Uniform => AverageMode::Uniform,
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cap on explicit codeword lists.
    #[arg(long, global = true, default_value_t = crate::codes::MAX_CODE_WORDS)]
    max_words: usize,
    /// Cap on the exhaustive dual search space.
    #[arg(long, global = true, default_value_t = crate::codes::MAX_DUAL_SEARCH)]
    max_search: u128,
    /// Cap on enumerated element tuples.
    #[arg(long, global = true, default_value_t = crate::enumerators::MAX_ENUM_TUPLES)]
    max_tuples: u128,
    /// Cap on the permutation point set n * |A|^l.
    #[arg(long, global = true, default_value_t = crate::cycleindex::MAX_POINTS)]
    max_points: usize,
    /// Cap on the code length for orbit enumeration.
    #[arg(long, global = true, default_value_t = crate::codes::MAX_ORBIT_N)]
    max_orbit_n: usize,
    /// Cap on the joint-code height for orbit enumeration.
    #[arg(long, global = true, default_value_t = crate::codes::MAX_ORBIT_L)]
    max_orbit_l: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complete weight enumerator of genus g of one code.
    EnumCwe {
        /// Genus (number of codeword slots).
        #[arg(long, default_value_t = 1)]
        genus: usize,
        code: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Complete joint weight enumerator of two codes.
    EnumCjwe {
        c: PathBuf,
        d: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// (l,r)-fold complete joint weight enumerator of joint codes.
    EnumLr {
        /// Expected number of component codes per input (checked).
        #[arg(long)]
        l: Option<usize>,
        /// Expected number of inputs (checked).
        #[arg(long)]
        r: Option<usize>,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// r-fold complete joint cycle index of joint codes.
    CycleIndex {
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Cycle index followed by the substitution to the weight enumerator.
    Tmap {
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Genus: a single plain code input is raised to this power first.
        #[arg(long)]
        genus: Option<usize>,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// MacWilliams transform report: both sides and an exact verdict.
    Macwilliams {
        /// Dual flags, one per input, e.g. "0,1".
        #[arg(long)]
        pattern: String,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Average (l,r)-fold joint weight enumerator over the first input's
    /// equivalence class.
    Average {
        #[arg(long, value_enum, default_value_t = Mode::Distinct)]
        mode: Mode,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Average intersection number of two codes.
    Intersect {
        #[arg(long, value_enum, default_value_t = Mode::Distinct)]
        mode: Mode,
        /// Average |G(C') n H(D)| over induced permutation groups instead
        /// of |C' n D| over codes.
        #[arg(long)]
        groups: bool,
        c: PathBuf,
        d: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check an identity exactly; exits 0 only if it holds.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyWhat {
    /// Substituted cycle index against the directly enumerated (l,r)-fold
    /// joint weight enumerator.
    Tmap {
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Genus: a single plain code input is raised to this power first.
        #[arg(long)]
        genus: Option<usize>,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Transform of the enumerator against the enumerator of the duals.
    Macwilliams {
        #[arg(long)]
        pattern: String,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Direct average enumerator against the substituted average cycle
    /// index.
    Average {
        #[arg(long, value_enum, default_value_t = Mode::Distinct)]
        mode: Mode,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Code-level average intersection number against the induced-group
    /// reading.
    Intersection {
        #[arg(long, value_enum, default_value_t = Mode::Distinct)]
        mode: Mode,
        c: PathBuf,
        d: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

/// Entry point used by the binary; parses argv and runs one command.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut stdout = std::io::stdout();
    run_to(args, &mut stdout)
}

/// Like [`run`], but with the output stream supplied by the caller.
pub fn run_to<I>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own message; help/version land on stdout
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn load_json(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn code_from_spec(spec: &CodeSpec, max_words: usize) -> Result<Arc<LinearCode>> {
    let alphabet = crate::algebra::Alphabet::from_spec(&spec.alphabet)?;
    let generators = spec
        .generators
        .iter()
        .map(|row| row.iter().map(|&v| alphabet.elem(v)).collect())
        .collect::<Result<Vec<_>>>()?;
    LinearCode::span(alphabet, spec.length, &generators, max_words)
}

fn load_code(path: &Path, max_words: usize) -> Result<Arc<LinearCode>> {
    let value = load_json(path)?;
    let spec: CodeSpec = serde_json::from_value(value)
        .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    code_from_spec(&spec, max_words)
}

/// A joint-code file is either `{"components": [code, ...]}` or a bare code
/// (read as a 1-fold joint code).
fn load_joint(path: &Path, max_words: usize) -> Result<Arc<JointCode>> {
    let value = load_json(path)?;
    if value.get("components").is_some() {
        let spec: JointCodeSpec = serde_json::from_value(value)
            .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
        let components = spec
            .components
            .iter()
            .map(|c| code_from_spec(c, max_words))
            .collect::<Result<Vec<_>>>()?;
        JointCode::new(components)
    } else {
        Ok(JointCode::single(load_code(path, max_words)?))
    }
}

fn load_joints(
    inputs: &[PathBuf],
    l: Option<usize>,
    r: Option<usize>,
    max_words: usize,
) -> Result<Vec<Arc<JointCode>>> {
    if let Some(expected) = r {
        if inputs.len() != expected {
            return Err(Error::Json(format!(
                "expected r = {expected} inputs, got {}",
                inputs.len()
            )));
        }
    }
    let joints = inputs
        .iter()
        .map(|p| load_joint(p, max_words))
        .collect::<Result<Vec<_>>>()?;
    if let Some(expected) = l {
        for (joint, path) in joints.iter().zip(inputs) {
            if joint.l() != expected {
                return Err(Error::Json(format!(
                    "{}: expected l = {expected} components, got {}",
                    path.display(),
                    joint.l()
                )));
            }
        }
    }
    Ok(joints)
}

fn emit(
    common: &Common,
    out: &mut dyn Write,
    json: serde_json::Value,
    text: String,
) -> Result<i32> {
    let body = match common.format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&json).map_err(|e| Error::Json(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = text;
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    };
    match &common.out {
        Some(path) => std::fs::write(path, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(0)
}

fn poly_report(common: &Common, out: &mut dyn Write, poly: &SparsePoly) -> Result<i32> {
    emit(common, out, poly.to_json()?, poly.to_string())
}

fn verify_report_output(
    common: &Common,
    out: &mut dyn Write,
    identity: &str,
    report: &VerifyReport,
) -> Result<i32> {
    let mut json = report.to_json()?;
    json["identity"] = serde_json::Value::String(identity.to_string());
    let text = format!(
        "identity: {identity}\nlhs: {}\nrhs: {}\nequal: {}",
        report.lhs, report.rhs, report.equal
    );
    emit(common, out, json, text)?;
    Ok(if report.equal { 0 } else { 1 })
}

fn average_poly_json(report: &AverageReport<SparsePoly>) -> Result<serde_json::Value> {
    Ok(serde_json::json!({
        "mode": report.mode.to_string(),
        "orbit_size": report.orbit_size,
        "group_order": report.group_order,
        "value": report.value.to_json()?,
    }))
}

/// Build the joint codes a tmap-style command works on, honouring --genus.
fn tmap_inputs(
    inputs: &[PathBuf],
    l: Option<usize>,
    r: Option<usize>,
    genus: Option<usize>,
    max_words: usize,
) -> Result<Vec<Arc<JointCode>>> {
    match genus {
        None => load_joints(inputs, l, r, max_words),
        Some(g) => {
            if inputs.len() != 1 {
                return Err(Error::Json(
                    "--genus expects exactly one plain code input".into(),
                ));
            }
            if g == 0 {
                return Err(Error::Json("--genus must be at least 1".into()));
            }
            let code = load_code(&inputs[0], max_words)?;
            if let Some(expected) = l {
                if expected != g {
                    return Err(Error::Json(format!(
                        "--l {expected} disagrees with --genus {g}"
                    )));
                }
            }
            if let Some(expected) = r {
                if expected != 1 {
                    return Err(Error::Json("--genus implies r = 1".into()));
                }
            }
            Ok(vec![JointCode::power(code, g)])
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::EnumCwe {
            genus,
            code,
            common,
        } => {
            if genus == 0 {
                return Err(Error::Json("--genus must be at least 1".into()));
            }
            let code = load_code(&code, common.max_words)?;
            let poly = cwe_genus(&code, genus, common.max_tuples)?;
            poly_report(&common, out, &poly)
        }
        Command::EnumCjwe { c, d, common } => {
            let c = load_code(&c, common.max_words)?;
            let d = load_code(&d, common.max_words)?;
            let poly = cjwe(&c, &d, common.max_tuples)?;
            poly_report(&common, out, &poly)
        }
        Command::EnumLr {
            l,
            r,
            inputs,
            common,
        } => {
            let joints = load_joints(&inputs, l, r, common.max_words)?;
            let poly = lr_cjwe(&joints, common.max_tuples)?;
            poly_report(&common, out, &poly)
        }
        Command::CycleIndex {
            l,
            r,
            inputs,
            common,
        } => {
            let joints = load_joints(&inputs, l, r, common.max_words)?;
            let z = joint_cycle_index(&joints, common.max_tuples, common.max_points)?;
            emit(&common, out, z.to_json()?, z.to_string())
        }
        Command::Tmap {
            l,
            r,
            genus,
            inputs,
            common,
        } => {
            let joints = tmap_inputs(&inputs, l, r, genus, common.max_words)?;
            let z = joint_cycle_index(&joints, common.max_tuples, common.max_points)?;
            let poly = t_substitution(&z)?;
            poly_report(&common, out, &poly)
        }
        Command::Macwilliams {
            pattern,
            inputs,
            common,
        } => {
            let joints = load_joints(&inputs, None, None, common.max_words)?;
            let pattern = DualPattern::parse(&pattern, joints.len())?;
            let report = verify_duality(&joints, &pattern, common.max_tuples, common.max_search)?;
            // report command: emit both sides, succeed either way
            verify_report_output(&common, out, "macwilliams", &report)?;
            Ok(0)
        }
        Command::Average {
            mode,
            inputs,
            common,
        } => {
            let joints = load_joints(&inputs, None, None, common.max_words)?;
            let report = avg_lr_cjwe(
                &joints,
                mode.into(),
                common.max_tuples,
                common.max_orbit_n,
                common.max_orbit_l,
            )?;
            let json = average_poly_json(&report)?;
            let text = format!(
                "mode: {}\norbit size: {}\ngroup order: {}\naverage: {}",
                report.mode, report.orbit_size, report.group_order, report.value
            );
            emit(&common, out, json, text)
        }
        Command::Intersect {
            mode,
            groups,
            c,
            d,
            common,
        } => {
            let c = load_code(&c, common.max_words)?;
            let d = load_code(&d, common.max_words)?;
            let report = if groups {
                avg_intersection_code_induced(
                    &c,
                    &d,
                    mode.into(),
                    common.max_orbit_n,
                    common.max_points,
                )?
            } else {
                avg_intersection_codes(&c, &d, mode.into(), common.max_orbit_n)?
            };
            let json = serde_json::json!({
                "mode": report.mode.to_string(),
                "reading": if groups { "induced-groups" } else { "codes" },
                "orbit_size": report.orbit_size,
                "group_order": report.group_order,
                "value": report.value.to_string(),
            });
            let text = format!(
                "mode: {}\norbit size: {}\naverage intersection: {}",
                report.mode, report.orbit_size, report.value
            );
            emit(&common, out, json, text)
        }
        Command::Verify { what } => match what {
            VerifyWhat::Tmap {
                l,
                r,
                genus,
                inputs,
                common,
            } => {
                let joints = tmap_inputs(&inputs, l, r, genus, common.max_words)?;
                let z = joint_cycle_index(&joints, common.max_tuples, common.max_points)?;
                let substituted = t_substitution(&z)?;
                let direct = lr_cjwe(&joints, common.max_tuples)?;
                let report = VerifyReport::new(direct, substituted);
                verify_report_output(&common, out, "tmap", &report)
            }
            VerifyWhat::Macwilliams {
                pattern,
                inputs,
                common,
            } => {
                let joints = load_joints(&inputs, None, None, common.max_words)?;
                let pattern = DualPattern::parse(&pattern, joints.len())?;
                let report =
                    verify_duality(&joints, &pattern, common.max_tuples, common.max_search)?;
                verify_report_output(&common, out, "macwilliams", &report)
            }
            VerifyWhat::Average {
                mode,
                inputs,
                common,
            } => {
                let joints = load_joints(&inputs, None, None, common.max_words)?;
                let report = verify_average_identity(
                    &joints,
                    mode.into(),
                    common.max_tuples,
                    common.max_points,
                    common.max_orbit_n,
                    common.max_orbit_l,
                )?;
                verify_report_output(&common, out, "average", &report)
            }
            VerifyWhat::Intersection { mode, c, d, common } => {
                let c = load_code(&c, common.max_words)?;
                let d = load_code(&d, common.max_words)?;
                let code_side = avg_intersection_codes(&c, &d, mode.into(), common.max_orbit_n)?;
                let group_side = avg_intersection_code_induced(
                    &c,
                    &d,
                    mode.into(),
                    common.max_orbit_n,
                    common.max_points,
                )?;
                let equal = code_side.value == group_side.value;
                let json = serde_json::json!({
                    "identity": "intersection",
                    "equal": equal,
                    "codes": code_side.value.to_string(),
                    "induced_groups": group_side.value.to_string(),
                });
                let text = format!(
                    "identity: intersection\ncodes: {}\ninduced groups: {}\nequal: {equal}",
                    code_side.value, group_side.value
                );
                emit(&common, out, json, text)?;
                Ok(if equal { 0 } else { 1 })
            }
        },
    }
}
