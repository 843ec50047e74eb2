//! Command implementations for the `ch2rep` binary.
//!
//! Every command reads JSON files in the formats documented in the README,
//! appends a short plain-text report to an output buffer, and maps outcomes
//! to exit codes uniformly: `0` when the input is valid and the operation
//! succeeded, `1` when a file is well-formed but violates an axiom or the
//! operation does not apply to it, and `2` when the input cannot be parsed.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use ch2rep::ch2::normalize;
use ch2rep::cohom::{averaging_contraction, is_cocycle};
use ch2rep::error::{Error, Violation};
use ch2rep::io::{
    cochain_to_value, intertwiner_to_value, load_file, matrix_to_value, one_cell_to_value,
    representation_to_value, save_value, two_cell_to_value, two_vect_to_value, LoadedFile,
};
use ch2rep::rep1::verify_equivalence;
use ch2rep::rep2::{expand_unchecked, hom_classes, strictify, validate_inter1};
use ch2rep::sample::covering_inventory;
use ch2rep::{Rat, Result};

/// `writeln!` into the output buffer; writing to a `String` cannot fail.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("string formatting is infallible")
    };
}

#[derive(Parser)]
#[command(
    name = "ch2rep",
    version,
    about = "Exact rational tools for 2-term complexes and 2-group representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check a file against the axioms of its kind and list every violation.
    Validate {
        /// Input file of any supported kind.
        path: PathBuf,
    },
    /// Replace a complex by an equivalent one with zero differential.
    Normalize {
        /// A `complex` file.
        path: PathBuf,
        /// Write the normalized complex and the four equivalence witnesses here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Inspect a bar cochain and contract it when it is a cocycle.
    Cohomology {
        /// A `cochain` file.
        path: PathBuf,
        /// Require this degree; a mismatch fails the command.
        #[arg(long)]
        degree: Option<usize>,
        /// Write a primitive of the cocycle here (degree 1 and up).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build an equivalent strict representation with witnesses both ways.
    Strictify {
        /// A `representation` file.
        path: PathBuf,
        /// Write the strict representation and the two intertwiners here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count 2-isomorphism classes of 1-intertwiners between strict representations.
    Classify {
        /// Source `representation` file; must be strict.
        src: PathBuf,
        /// Target `representation` file; must be strict.
        dst: PathBuf,
        /// Write bases of the two class spaces here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify the classification equivalence over a 2-group by randomized trials.
    VerifyTheorem {
        /// A `two_group` file.
        group: PathBuf,
        /// Largest level dimension in the generated inventory.
        #[arg(long, default_value_t = 3)]
        dim_max: usize,
        /// Number of random intertwiner-pair trials.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Seed for all sampling; equal seeds give byte-identical reports.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Run a parsed command line, appending all output to `out`, and return the
/// process exit code.
pub fn run(cli: &Cli, out: &mut String) -> i32 {
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            say!(out, "error: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn execute(cmd: &Command, out: &mut String) -> Result<i32> {
    match cmd {
        Command::Validate { path } => cmd_validate(path, out),
        Command::Normalize { path, out: dest } => cmd_normalize(path, dest.as_deref(), out),
        Command::Cohomology {
            path,
            degree,
            out: dest,
        } => cmd_cohomology(path, *degree, dest.as_deref(), out),
        Command::Strictify { path, out: dest } => cmd_strictify(path, dest.as_deref(), out),
        Command::Classify {
            src,
            dst,
            out: dest,
        } => cmd_classify(src, dst, dest.as_deref(), out),
        Command::VerifyTheorem {
            group,
            dim_max,
            trials,
            seed,
        } => cmd_verify_theorem(group, *dim_max, *trials, *seed, out),
    }
}

/// Tag a serialized object with its file kind so it can be reloaded.
fn kinded(kind: &str, mut v: Value) -> Value {
    if let Some(o) = v.as_object_mut() {
        o.insert("kind".into(), Value::String(kind.into()));
    }
    v
}

fn cmd_validate(path: &Path, out: &mut String) -> Result<i32> {
    let loaded = load_file(path)?;
    let violations = collect_violations(&loaded);
    if violations.is_empty() {
        say!(out, "{}: valid {}", path.display(), loaded.kind());
        Ok(0)
    } else {
        for v in &violations {
            say!(out, "{v}");
        }
        say!(out, "{}: {} violation(s)", path.display(), violations.len());
        Ok(1)
    }
}

fn collect_violations(loaded: &LoadedFile) -> Vec<Violation> {
    match loaded {
        // Cells and cochains are checked against their defining equations by
        // the constructors that loading runs, so reaching here means valid.
        LoadedFile::Complex(_)
        | LoadedFile::OneCell(_)
        | LoadedFile::TwoCell(_)
        | LoadedFile::Cochain(..) => Vec::new(),
        LoadedFile::TwoGroup(tg) => tg.validate(),
        LoadedFile::Representation(r) => {
            // Report both the reduced-form rules and the unpacked axioms, so
            // a broken cochain shows up under its coherence name as well.
            let mut violations = r.validate();
            match expand_unchecked(r) {
                Ok(full) => violations.extend(full.validate()),
                Err(e) => violations.push(Violation::new("shape", e.to_string())),
            }
            violations
        }
        LoadedFile::Intertwiner(t) => {
            let mut violations = Vec::new();
            for (label, rep) in [("src", t.src()), ("dst", t.dst())] {
                violations.extend(
                    rep.validate()
                        .into_iter()
                        .map(|v| Violation::new(format!("{label}.{}", v.rule), v.witness)),
                );
            }
            violations.extend(validate_inter1(t));
            violations
        }
    }
}

fn cmd_normalize(path: &Path, dest: Option<&Path>, out: &mut String) -> Result<i32> {
    let LoadedFile::Complex(v) = load_file(path)? else {
        return Err(Error::Invalid(format!(
            "{}: expected a complex file",
            path.display()
        )));
    };
    let n = normalize(&v);
    say!(out, "kernel dim = {}", n.kernel_dim);
    say!(out, "cokernel dim = {}", n.coker_dim);
    if let Some(dest) = dest {
        let mut o = Map::new();
        o.insert("kind".into(), Value::String("normalization".into()));
        o.insert("n".into(), kinded("complex", two_vect_to_value(&n.n)));
        o.insert(
            "to_n".into(),
            kinded("one_cell", one_cell_to_value(&n.to_n)),
        );
        o.insert(
            "from_n".into(),
            kinded("one_cell", one_cell_to_value(&n.from_n)),
        );
        o.insert(
            "unit".into(),
            kinded("two_cell", two_cell_to_value(&n.unit)),
        );
        o.insert(
            "counit".into(),
            kinded("two_cell", two_cell_to_value(&n.counit)),
        );
        save_value(dest, &Value::Object(o))?;
        say!(out, "wrote {}", dest.display());
    }
    Ok(0)
}

fn cmd_cohomology(
    path: &Path,
    degree: Option<usize>,
    dest: Option<&Path>,
    out: &mut String,
) -> Result<i32> {
    let LoadedFile::Cochain(c, tg) = load_file(path)? else {
        return Err(Error::Invalid(format!(
            "{}: expected a cochain file",
            path.display()
        )));
    };
    say!(out, "degree = {}", c.degree());
    if let Some(want) = degree {
        if c.degree() != want {
            say!(out, "expected degree {want}");
            return Ok(1);
        }
    }
    say!(out, "normalized = {}", c.is_normalized());
    let cocycle = is_cocycle(&c);
    say!(out, "cocycle = {cocycle}");
    if !cocycle {
        return Ok(1);
    }
    if let Some(dest) = dest {
        let primitive = averaging_contraction(&c)?;
        save_value(dest, &cochain_to_value(&primitive, &tg))?;
        say!(
            out,
            "wrote degree-{} primitive to {}",
            primitive.degree(),
            dest.display()
        );
    }
    Ok(0)
}

fn cmd_strictify(path: &Path, dest: Option<&Path>, out: &mut String) -> Result<i32> {
    let LoadedFile::Representation(r) = load_file(path)? else {
        return Err(Error::Invalid(format!(
            "{}: expected a representation file",
            path.display()
        )));
    };
    let was_strict = r.is_strict();
    let s = strictify(&r)?;
    say!(out, "dims = ({}, {})", r.dim1(), r.dim0());
    say!(
        out,
        "input was {}",
        if was_strict {
            "already strict"
        } else {
            "not strict; cochain contracted away"
        }
    );
    if let Some(dest) = dest {
        let mut o = Map::new();
        o.insert("kind".into(), Value::String("strictification".into()));
        o.insert("strict".into(), representation_to_value(&s.strict));
        o.insert("to_strict".into(), intertwiner_to_value(&s.to_strict));
        o.insert("from_strict".into(), intertwiner_to_value(&s.from_strict));
        save_value(dest, &Value::Object(o))?;
        say!(out, "wrote {}", dest.display());
    }
    Ok(0)
}

fn cmd_classify(
    src_path: &Path,
    dst_path: &Path,
    dest: Option<&Path>,
    out: &mut String,
) -> Result<i32> {
    let LoadedFile::Representation(src) = load_file(src_path)? else {
        return Err(Error::Invalid(format!(
            "{}: expected a representation file",
            src_path.display()
        )));
    };
    let LoadedFile::Representation(dst) = load_file(dst_path)? else {
        return Err(Error::Invalid(format!(
            "{}: expected a representation file",
            dst_path.display()
        )));
    };
    let classes = hom_classes(&src, &dst)?;
    let (d1, d0) = classes.dims();
    say!(out, "level-1 class space dim = {d1}");
    say!(out, "level-0 class space dim = {d0}");
    say!(
        out,
        "2-isomorphism classes of 1-intertwiners are pairs in that product"
    );
    if let Some(dest) = dest {
        let mut o = Map::new();
        o.insert("kind".into(), Value::String("hom_classes".into()));
        o.insert(
            "basis1".into(),
            Value::Array(classes.basis1.iter().map(matrix_to_value).collect()),
        );
        o.insert(
            "basis0".into(),
            Value::Array(classes.basis0.iter().map(matrix_to_value).collect()),
        );
        save_value(dest, &Value::Object(o))?;
        say!(out, "wrote {}", dest.display());
    }
    Ok(0)
}

fn cmd_verify_theorem(
    group: &Path,
    dim_max: usize,
    trials: usize,
    seed: u64,
    out: &mut String,
) -> Result<i32> {
    if dim_max == 0 {
        return Err(Error::Parse("--dim-max must be at least 1".into()));
    }
    let LoadedFile::TwoGroup(tg) = load_file(group)? else {
        return Err(Error::Invalid(format!(
            "{}: expected a two_group file",
            group.display()
        )));
    };
    let violations = tg.validate();
    if !violations.is_empty() {
        for v in &violations {
            say!(out, "{v}");
        }
        say!(
            out,
            "{}: {} violation(s)",
            group.display(),
            violations.len()
        );
        return Ok(1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inventory = covering_inventory::<Rat>(&tg, dim_max, &mut rng)?;
    let report = verify_equivalence(&tg, &inventory, trials, seed);
    out.push_str(&report.render());
    Ok(if report.passed() { 0 } else { 1 })
}
