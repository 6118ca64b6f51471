//! The `pjj` command line.
//!
//! Every command prints a human-readable report followed by machine lines of
//! the form `RESULT key=value`. Exit status is 0 when the computation
//! succeeded and the checked property holds, 1 when a checked property is
//! false, and 2 for usage, I/O and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::algebra::Algebra;
use crate::cohomology::{cohomology, verify_zigzag};
use crate::deformation::{
    check_deformation, check_equivalence, deformed_algebra, deformed_product_n, nijenhuis_check,
    nijenhuis_trivial_deformation, rota_baxter_check,
};
use crate::derivation::{antiderivation_space, derivation_space, inner_antiderivation_space};
use crate::error::{Error, Result};
use crate::io::{
    read_algebra, read_cochain, read_map, read_rep, serialize_algebra, serialize_cochain, serialize_rep,
    RepFile,
};
use crate::ratlinalg::{fmt_scalar, fmt_vec, parse_scalar, Matrix, Scalar};
use crate::representation::{semidirect_product, Representation};

#[derive(Parser, Debug)]
#[command(name = "pjj", version, about = "Exact computations for left pre-Jacobi-Jordan algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra axioms and print witnesses for failures.
    Check {
        alg: PathBuf,
        /// Print every witness instead of the first few.
        #[arg(long)]
        verbose: bool,
    },
    /// Build a new algebra or representation file.
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Derivations, antiderivations or inner antiderivations.
    Derivations {
        alg: PathBuf,
        #[arg(long, default_value = "regular")]
        rep: String,
        #[arg(long, conflicts_with = "inner")]
        anti: bool,
        #[arg(long)]
        inner: bool,
    },
    /// Cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        alg: PathBuf,
        #[arg(long, default_value = "regular")]
        rep: String,
        #[arg(long)]
        degree: usize,
        /// Print coset representatives of a basis of the cohomology.
        #[arg(long)]
        basis: bool,
        /// Also check that d∘δ vanishes in this degree.
        #[arg(long)]
        verify_zigzag: bool,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Linear deformations.
    Deform {
        #[command(subcommand)]
        what: Deform,
    },
    /// Check the Nijenhuis identity for a linear map.
    Nijenhuis {
        alg: PathBuf,
        map: PathBuf,
        /// Print the algebra with the N-deformed product.
        #[arg(long)]
        emit_deformed: bool,
        /// Print the trivial deformation generated by N.
        #[arg(long)]
        trivial_deformation: bool,
    },
    /// Check the Rota-Baxter identity of a given weight.
    RotaBaxter {
        alg: PathBuf,
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Build {
    Subadjacent {
        alg: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    Opposite {
        alg: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    Semidirect {
        alg: PathBuf,
        rep: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    Tensor {
        alg: PathBuf,
        alg2: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    Dual {
        alg: PathBuf,
        rep: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand, Debug)]
enum Deform {
    Check {
        alg: PathBuf,
        cochain: PathBuf,
    },
    Instantiate {
        alg: PathBuf,
        cochain: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[command(flatten)]
        out: OutArg,
    },
    Equiv {
        alg: PathBuf,
        cochain: PathBuf,
        cochain2: PathBuf,
        map: PathBuf,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut report = Report::default();
    match execute(cli.command, &mut report) {
        Ok(holds) => {
            let _ = out.write_all(report.render().as_bytes());
            if holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = out.write_all(report.render().as_bytes());
            let _ = writeln!(err, "error: {e}");
            if e.is_property_failure() {
                1
            } else {
                2
            }
        }
    }
}

#[derive(Default)]
struct Report {
    body: String,
    results: Vec<(String, String)>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.body.push_str(s.as_ref());
        self.body.push('\n');
    }

    fn raw(&mut self, s: &str) {
        self.body.push_str(s);
    }

    fn result(&mut self, key: &str, value: impl ToString) {
        self.results.push((key.to_string(), value.to_string()));
    }

    fn render(&self) -> String {
        let mut s = self.body.clone();
        for (k, v) in &self.results {
            s.push_str(&format!("RESULT {k}={v}\n"));
        }
        s
    }
}

fn rational(text: &str, what: &str) -> Result<Scalar> {
    parse_scalar(text).map_err(|_| Error::Usage(format!("{what}: `{text}` is not a rational")))
}

fn load_rep(alg: &Algebra, which: &str) -> Result<Representation> {
    match which {
        "regular" => Representation::regular(alg),
        "scalar" => Ok(Representation::scalar(alg)),
        path => {
            let r = read_rep(path)?.into_representation(alg)?;
            r.require_valid()?;
            Ok(r)
        }
    }
}

fn emit(report: &mut Report, text: &str, out: &OutArg) -> Result<()> {
    match &out.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            report.line(format!("# written to {}", path.display()));
        }
        None => report.raw(text),
    }
    Ok(())
}

fn fmt_map(report: &mut Report, m: &Matrix) {
    for r in 0..m.rows() {
        report.line(format!("  {}", fmt_vec(m.row(r))));
    }
}

fn execute(cmd: Command, report: &mut Report) -> Result<bool> {
    match cmd {
        Command::Check { alg, verbose } => check(&alg, verbose, report),
        Command::Build { what } => build(what, report),
        Command::Derivations { alg, rep, anti, inner } => {
            let a = read_algebra(&alg)?;
            let r = load_rep(&a, &rep)?;
            let space = if inner {
                inner_antiderivation_space(&r)?
            } else if anti {
                antiderivation_space(&r)?
            } else {
                derivation_space(&r)?
            };
            report.line(format!(
                "{} of {} with values in a {}-dimensional representation",
                space.kind(),
                a.name(),
                r.vdim()
            ));
            for (n, m) in space.basis_maps().iter().enumerate() {
                report.line(format!("basis map {}:", n + 1));
                fmt_map(report, m);
            }
            report.result("kind", space.kind());
            report.result("dim", space.dim());
            Ok(true)
        }
        Command::Cohomology {
            alg,
            rep,
            degree,
            basis,
            verify_zigzag: zigzag,
            max_degree,
        } => {
            if degree > max_degree {
                return Err(Error::Usage(format!(
                    "degree {degree} exceeds --max-degree {max_degree}"
                )));
            }
            let a = read_algebra(&alg)?;
            let r = load_rep(&a, &rep)?;
            let h = cohomology(&r, degree)?;
            report.line(format!("H^{degree} of {} with values in a {}-dimensional representation", a.name(), r.vdim()));
            if basis {
                for (n, c) in h.representatives.iter().enumerate() {
                    report.line(format!("# representative {}", n + 1));
                    report.raw(&serialize_cochain(c));
                }
            }
            report.result("dimZ", h.dim_z);
            report.result("dimB", h.dim_b);
            report.result("dimH", h.dim_h);
            if zigzag {
                let z = verify_zigzag(&r, degree.max(1));
                if let Some((i, j, x)) = &z.max_defect {
                    report.line(format!("zigzag defect {} at ({}, {})", fmt_scalar(x), i + 1, j + 1));
                }
                report.result("zigzag", z.holds);
                return Ok(z.holds);
            }
            Ok(true)
        }
        Command::Deform { what } => deform(what, report),
        Command::Nijenhuis {
            alg,
            map,
            emit_deformed,
            trivial_deformation,
        } => {
            let a = read_algebra(&alg)?;
            let n = read_map(&map)?.matrix;
            let c = nijenhuis_check(&a, &n)?;
            for (i, j, d) in &c.witnesses {
                report.line(format!("fails at (e{}, e{}): defect {}", i + 1, j + 1, fmt_vec(d)));
            }
            report.result("nijenhuis", c.holds);
            if c.holds && emit_deformed {
                report.raw(&serialize_algebra(&deformed_product_n(&a, &n)?));
            }
            if c.holds && trivial_deformation {
                let t = nijenhuis_trivial_deformation(&a, &n)?;
                report.raw(&serialize_cochain(&t.w));
                report.result("generates", t.check.generates);
                let ts: Vec<String> = t.trivial_at.iter().filter(|(_, ok)| *ok).map(|(t, _)| fmt_scalar(t)).collect();
                report.result("trivial_t", ts.join(","));
            }
            Ok(c.holds)
        }
        Command::RotaBaxter { alg, map, weight } => {
            let a = read_algebra(&alg)?;
            let p = read_map(&map)?.matrix;
            let w = rational(&weight, "--weight")?;
            let c = rota_baxter_check(&a, &p, &w)?;
            for (i, j, d) in &c.witnesses {
                report.line(format!("fails at (e{}, e{}): defect {}", i + 1, j + 1, fmt_vec(d)));
            }
            report.result("weight", fmt_scalar(&w));
            report.result("rota_baxter", c.holds);
            Ok(c.holds)
        }
    }
}

fn check(path: &Path, verbose: bool, report: &mut Report) -> Result<bool> {
    let a = read_algebra(path)?;
    let r = a.check_axioms_capped(if verbose { None } else { Some(crate::algebra::WITNESS_CAP) });
    report.line(format!("algebra {} of dimension {}", a.name(), a.dim()));
    for w in &r.witnesses {
        report.line(format!("witness {w}"));
    }
    report.result("commutative", r.commutative);
    report.result("anti_associative", r.anti_associative);
    report.result("left_prejj", r.left_prejj);
    report.result("right_prejj", r.right_prejj);
    report.result("jacobi_jordan", r.jacobi_jordan);
    report.result("jacobian_product", r.jacobian_product);
    Ok(r.left_prejj)
}

fn build(what: Build, report: &mut Report) -> Result<bool> {
    let (alg, out) = match what {
        Build::Subadjacent { alg, out } => {
            let c = read_algebra(&alg)?.sub_adjacent()?;
            let jj = c.is_jacobi_jordan();
            emit(report, &serialize_algebra(&c), &out)?;
            report.result("jacobi_jordan", jj);
            return Ok(jj);
        }
        Build::Opposite { alg, out } => (read_algebra(&alg)?.opposite(), out),
        Build::Semidirect { alg, rep, out } => {
            let a = read_algebra(&alg)?;
            let r = read_rep(&rep)?.into_representation(&a)?;
            (semidirect_product(&a, &r)?, out)
        }
        Build::Tensor { alg, alg2, out } => {
            let a = read_algebra(&alg)?;
            let b = read_algebra(&alg2)?;
            (a.tensor_with_comm_assoc(&b)?, out)
        }
        Build::Dual { alg, rep, out } => {
            let a = read_algebra(&alg)?;
            let f = read_rep(&rep)?;
            let name = format!("{}_dual", f.name);
            let dual = f.into_representation(&a)?.dual()?;
            emit(report, &serialize_rep(&RepFile::from_representation(name, &dual)), &out)?;
            report.result("repdim", dual.vdim());
            report.result("representation", true);
            return Ok(true);
        }
    };
    let prejj = alg.is_left_prejj();
    emit(report, &serialize_algebra(&alg), &out)?;
    report.result("dim", alg.dim());
    report.result("left_prejj", prejj);
    Ok(prejj)
}

fn deform(what: Deform, report: &mut Report) -> Result<bool> {
    match what {
        Deform::Check { alg, cochain } => {
            let a = read_algebra(&alg)?;
            let w = read_cochain(&cochain)?;
            let c = check_deformation(&a, &w)?;
            for (x, y, z, d) in c.cocycle_witnesses.iter().take(crate::algebra::WITNESS_CAP) {
                report.line(format!("cocycle fails at (e{}, e{}, e{}): {}", x + 1, y + 1, z + 1, fmt_vec(d)));
            }
            for (x, y, z, d) in c.prejj_witnesses.iter().take(crate::algebra::WITNESS_CAP) {
                report.line(format!("pre-JJ square fails at (e{}, e{}, e{}): {}", x + 1, y + 1, z + 1, fmt_vec(d)));
            }
            report.result("two_cocycle", c.is_two_cocycle);
            report.result("prejj_square", c.is_prejj_square);
            report.result("generates", c.generates);
            Ok(c.generates)
        }
        Deform::Instantiate { alg, cochain, t, out } => {
            let a = read_algebra(&alg)?;
            let w = read_cochain(&cochain)?;
            let t = rational(&t, "--t")?;
            let at = deformed_algebra(&a, &w, &t)?;
            let prejj = at.is_left_prejj();
            emit(report, &serialize_algebra(&at), &out)?;
            report.result("t", fmt_scalar(&t));
            report.result("left_prejj", prejj);
            Ok(prejj)
        }
        Deform::Equiv {
            alg,
            cochain,
            cochain2,
            map,
        } => {
            let a = read_algebra(&alg)?;
            let w = read_cochain(&cochain)?;
            let w2 = read_cochain(&cochain2)?;
            let n = read_map(&map)?.matrix;
            let e = check_equivalence(&a, &w, &w2, &n)?;
            report.result("linear_term", e.linear_term);
            report.result("quadratic_term", e.quadratic_term);
            report.result("cubic_term", e.cubic_term);
            report.result("equivalent", e.equivalent);
            Ok(e.equivalent)
        }
    }
}
