//! Command-line front end. Conformations are read as JSON from a file or
//! stdin and written as JSON to stdout.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{
    catalog, compose_auto, from_arc_presentation, insertable_sign, satellite, torus_knot, two_braid_link,
    ArcPresentation, PermutationWord,
};
use crate::diagram::{crossing_count, linking_number, pd_code, project_auto};
use crate::error::{Error, Result};
use crate::invariants::{check_bounds, jones_of, record};
use crate::lattice::{from_json, stick_count, to_json, torsion_sticks, validate, Axis, Conformation};
use crate::search::{enumerate_polygons, jones_class, sweep, EnumerationSpec};

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_IO: i32 = 5;
pub const EXIT_UNKNOWN_NAME: i32 = 6;

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) => EXIT_INVALID,
        Error::Parse(_) | Error::Json(_) | Error::BadPd(_) => EXIT_PARSE,
        Error::Io(_) => EXIT_IO,
        Error::UnknownName { .. } => EXIT_UNKNOWN_NAME,
        _ => EXIT_PRECONDITION,
    }
}

#[derive(Debug, Parser)]
#[command(name = "latstick", version, about = "Cubic-lattice stick conformations of knots and links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AxisArg {
    X,
    Y,
    Z,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::X => Axis::X,
            AxisArg::Y => Axis::Y,
            AxisArg::Z => Axis::Z,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a conformation and print it as JSON.
    Generate {
        #[command(subcommand)]
        what: Generator,
    },
    /// Check a conformation; exits 1 if it is not a valid lattice link.
    Validate {
        input: Option<PathBuf>,
        /// Print the conformation back after a successful check.
        #[arg(long)]
        echo: bool,
    },
    /// Stick counts, crossings, Jones polynomial and linking numbers.
    Invariants {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "z")]
        axis: AxisArg,
    },
    /// Project along an axis (after leveling).
    Project {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "z")]
        axis: AxisArg,
        /// Print the PD code instead of the diagram as JSON.
        #[arg(long)]
        pd: bool,
    },
    /// Compare a conformation against the bounds for a table record. Without
    /// an input the catalog conformation of that name is used.
    Bounds {
        #[arg(long)]
        record: String,
        input: Option<PathBuf>,
    },
    /// Enumerate properly leveled polygons with a given stick budget.
    Search {
        #[arg(long)]
        budget: usize,
        /// A single split, e.g. `4,4,4`.
        #[arg(long, value_parser = parse_triple)]
        split: Option<[usize; 3]>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Stream every polygon as one JSON line before the summary
        /// (single worker, no checkpoint).
        #[arg(long)]
        emit: bool,
    },
    /// Export for viewing.
    Export {
        input: Option<PathBuf>,
        /// Wavefront OBJ polylines.
        #[arg(long)]
        obj: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Generator {
    /// The torus knot T(p, p+1) with 6p sticks.
    Torus {
        #[arg(long)]
        p: u32,
    },
    /// A cataloged minimal conformation.
    Catalog { name: String },
    /// Connected sum of two knots, each a catalog name or a JSON file.
    Compose {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Braid satellite at the first torsion stick.
    Satellite {
        /// Companion: a catalog name or a JSON file.
        #[arg(long)]
        of: String,
        #[arg(long)]
        strands: usize,
        /// Generators `k` of the word (`σ_k` swaps strands k and k+1);
        /// defaults to `1,2,..,strands-1`. The crossing sign is fixed by
        /// the site.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// Two-component link with linking number n and 4n+4 sticks (n ≠ 2, 3).
    Link {
        #[arg(long)]
        n: u32,
    },
    /// Conversion of a grid diagram, given as `col,row;col,row;...` marker
    /// pairs (1-based, two per column).
    Arc {
        #[arg(long)]
        grid: String,
    },
}

fn parse_triple(s: &str) -> std::result::Result<[usize; 3], String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    parts.try_into().map_err(|_| "expected three comma-separated integers".to_string())
}

fn parse_grid(s: &str) -> Result<Vec<[u32; 2]>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let v: Vec<u32> = p
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|e| Error::Parse(format!("grid entry {p:?}: {e}"))))
                .collect::<Result<_>>()?;
            v.try_into().map_err(|_| Error::Parse(format!("grid entry {p:?}: expected col,row")))
        })
        .collect()
}

fn read_text(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    match input {
        Some(p) if p.as_os_str() != "-" => s = std::fs::read_to_string(p)?,
        _ => {
            stdin.read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn read_conformation(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Conformation> {
    from_json(&read_text(input, stdin)?)
}

/// A catalog name, or else a path to a JSON conformation.
fn knot_arg(s: &str) -> Result<Conformation> {
    match catalog(s) {
        Ok((c, _)) => Ok(c),
        Err(e @ Error::UnknownName { .. }) => {
            let path = std::path::Path::new(s);
            if path.exists() {
                let c = from_json(&std::fs::read_to_string(path)?)?;
                c.ensure_valid()?;
                Ok(c)
            } else {
                Err(e)
            }
        }
        Err(e) => Err(e),
    }
}

fn generate(g: &Generator) -> Result<Conformation> {
    match g {
        Generator::Torus { p } => torus_knot(*p),
        Generator::Catalog { name } => catalog(name).map(|(c, _)| c),
        Generator::Compose { a, b } => compose_auto(&knot_arg(a)?, &knot_arg(b)?),
        Generator::Satellite { of, strands, word } => {
            let j = knot_arg(of)?;
            let t = *torsion_sticks(&j)
                .first()
                .ok_or_else(|| Error::Precondition("companion has no torsion stick".into()))?;
            let sign = insertable_sign(&j, &t)?;
            let generators = word.clone().unwrap_or_else(|| (1..*strands).collect());
            let w = PermutationWord::new(*strands, generators, sign)?;
            satellite(&j, *strands, &w, &t)
        }
        Generator::Link { n } => two_braid_link(*n),
        Generator::Arc { grid } => from_arc_presentation(&ArcPresentation::from_grid(&parse_grid(grid)?)?),
    }
}

fn invariants(c: &Conformation, axis: Axis, out: &mut dyn Write) -> Result<()> {
    let n = stick_count(c)?;
    writeln!(out, "components={}", c.components.len())?;
    writeln!(out, "total={} x={} y={} z={}", n.total(), n.px, n.py, n.pz)?;
    let d = project_auto(c, axis)?;
    writeln!(out, "crossings={} (projection along {axis})", crossing_count(&d))?;
    writeln!(out, "jones={}", jones_of(c)?)?;
    for a in 0..c.components.len() {
        for b in a + 1..c.components.len() {
            writeln!(out, "linking {a}-{b}={}", linking_number(&d, a, b)?)?;
        }
    }
    Ok(())
}

fn obj(c: &Conformation) -> String {
    let mut s = String::from("# latstick polyline export v1\n");
    let mut base = 1;
    for (i, comp) in c.components.iter().enumerate() {
        s.push_str(&format!("o component{i}\n"));
        for p in &comp.corners {
            s.push_str(&format!("v {} {} {}\n", p.x, p.y, p.z));
        }
        let idx: Vec<String> = (0..comp.corners.len()).map(|k| (base + k).to_string()).collect();
        s.push_str(&format!("l {} {}\n", idx.join(" "), base));
        base += comp.corners.len();
    }
    s
}

fn search(
    spec: &EnumerationSpec,
    workers: usize,
    checkpoint: &Option<PathBuf>,
    emit: bool,
    out: &mut dyn Write,
) -> Result<()> {
    if emit {
        let mut io_err = None;
        let mut classes: Vec<(String, u64)> = Vec::new();
        let mut class_err = None;
        enumerate_polygons(spec, |c| {
            if io_err.is_some() || class_err.is_some() {
                return;
            }
            if let Err(e) = writeln!(out, "{}", to_json(&c)) {
                io_err = Some(e);
            }
            match jones_class(&c) {
                Ok(j) => {
                    let key = j.to_string();
                    match classes.iter_mut().find(|(k, _)| *k == key) {
                        Some((_, n)) => *n += 1,
                        None => classes.push((key, 1)),
                    }
                }
                Err(e) => class_err = Some(e),
            }
        })?;
        if let Some(e) = io_err {
            return Err(e.into());
        }
        if let Some(e) = class_err {
            return Err(e);
        }
        let summary: Vec<_> = classes
            .iter()
            .map(|(j, n)| serde_json::json!({"jones": j, "count": n}))
            .collect();
        writeln!(out, "{}", serde_json::json!({"summary": {"budget": spec.budget, "classes": summary}}))?;
        return Ok(());
    }
    let report = sweep(spec, workers, checkpoint.as_deref())?;
    let classes: Vec<_> = report
        .classes
        .iter()
        .map(|c| serde_json::json!({"jones": c.jones.to_string(), "count": c.count, "example": c.example}))
        .collect();
    writeln!(
        out,
        "{}",
        serde_json::json!({"summary": {
            "budget": report.budget,
            "polygons": report.polygons,
            "splits": report.splits,
            "classes": classes,
        }})
    )?;
    Ok(())
}

/// Runs one command, reading conformations from `stdin` when no input file
/// is given.
pub fn run(cmd: &Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Generate { what } => writeln!(out, "{}", to_json(&generate(what)?))?,
        Command::Validate { input, echo } => {
            let c = read_conformation(input, stdin)?;
            let report = validate(&c);
            if !report.is_ok() {
                return Err(Error::Invalid(report));
            }
            if *echo {
                writeln!(out, "{}", to_json(&c))?;
            } else {
                writeln!(out, "ok: {} components, {} sticks", c.components.len(), c.stick_total())?;
            }
        }
        Command::Invariants { input, axis } => {
            let c = read_conformation(input, stdin)?;
            c.ensure_valid()?;
            invariants(&c, (*axis).into(), out)?;
        }
        Command::Project { input, axis, pd } => {
            let c = read_conformation(input, stdin)?;
            let d = project_auto(&c, (*axis).into())?;
            if *pd {
                writeln!(out, "{}", pd_code(&d).to_text())?;
            } else {
                writeln!(out, "{}", serde_json::to_string(&d)?)?;
            }
        }
        Command::Bounds { record: name, input } => {
            let r = record(name)?;
            let c = match input {
                Some(_) => read_conformation(input, stdin)?,
                None => catalog(name)?.0,
            };
            c.ensure_valid()?;
            writeln!(out, "{}", check_bounds(&r, &c)?)?;
        }
        Command::Search {
            budget,
            split,
            workers,
            checkpoint,
            emit,
        } => {
            let spec = match split {
                Some(s) => EnumerationSpec::with_split(*budget, *s),
                None => EnumerationSpec::new(*budget),
            };
            if *emit && checkpoint.is_some() {
                return Err(Error::Precondition("--emit cannot be combined with --checkpoint".into()));
            }
            search(&spec, *workers, checkpoint, *emit, out)?;
        }
        Command::Export { input, obj: as_obj } => {
            if !as_obj {
                return Err(Error::Precondition("choose an export format (--obj)".into()));
            }
            let c = read_conformation(input, stdin)?;
            c.ensure_valid()?;
            out.write_all(obj(&c).as_bytes())?;
        }
    }
    Ok(())
}
