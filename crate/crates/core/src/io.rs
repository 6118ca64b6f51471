//! Line-based text formats for algebras, linear maps, representations and
//! cochains.
//!
//! Every format is a header, a body of index/value lines and a terminating
//! `end`. `#` starts a comment, blank lines are skipped, indices are 1-based,
//! rationals are `p` or `p/q` with `q > 0`, unlisted entries are zero and
//! anything after `end` is ignored.
//!
//! ```text
//! algebra A1          map N            rep R          cochain 2
//! dim 2               rows 2           algdim 2       algdim 2
//! 1 1 2 1             cols 2           repdim 2       repdim 2
//! end                 2 1 1            rho 1 2 1 1    1 1 2 1
//!                     end              mu 1 2 1 1     end
//!                                      end
//! ```
//!
//! Algebra lines `i j k c` set `c_{ij}^k`; map lines `r c x` set the
//! coefficient of target basis vector `r` in the image of source basis vector
//! `c`; cochain lines `i₁ … i_n v x` set coordinate `v` of `f(e_{i₁},…,e_{i_n})`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::cohomology::{cochain_dim, Cochain};
use crate::error::{Error, Result};
use crate::ratlinalg::{fmt_scalar, parse_scalar, Matrix, Scalar, ScalarSyntax};
use crate::representation::Representation;

/// Significant lines as `(1-based line number, tokens)`, stopping at `end`.
struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut items = Vec::new();
        let mut last_line = 0;
        let mut ended = false;
        for (n, raw) in text.lines().enumerate() {
            last_line = n + 1;
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            if toks == ["end"] {
                ended = true;
                break;
            }
            items.push((n + 1, toks));
        }
        if !ended {
            return Err(Error::Parse {
                line: last_line.max(1),
                message: "missing `end`".into(),
            });
        }
        Ok(Lines {
            items,
            pos: 0,
            last_line,
        })
    }

    fn header(&mut self, keyword: &str) -> Result<(usize, &'a str)> {
        let Some((line, toks)) = self.items.get(self.pos) else {
            return Err(Error::Parse {
                line: self.last_line.max(1),
                message: format!("expected `{keyword} <value>`"),
            });
        };
        if toks.len() != 2 || toks[0] != keyword {
            return Err(Error::Parse {
                line: *line,
                message: format!("expected `{keyword} <value>`"),
            });
        }
        self.pos += 1;
        Ok((*line, toks[1]))
    }

    fn header_usize(&mut self, keyword: &str) -> Result<usize> {
        let (line, v) = self.header(keyword)?;
        v.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{keyword}` needs a non-negative integer"),
        })
    }

    fn body(&self) -> &[(usize, Vec<&'a str>)] {
        &self.items[self.pos..]
    }
}

fn index(tok: &str, bound: usize, line: usize) -> Result<usize> {
    let i: usize = tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("`{tok}` is not an index"),
    })?;
    if i == 0 || i > bound {
        return Err(Error::IndexOutOfRange { line });
    }
    Ok(i - 1)
}

fn scalar(tok: &str, line: usize) -> Result<Scalar> {
    parse_scalar(tok).map_err(|e| match e {
        ScalarSyntax::ZeroDenominator => Error::ZeroDenominator { line },
        ScalarSyntax::Malformed => Error::Parse {
            line,
            message: format!("`{tok}` is not a rational"),
        },
    })
}

fn arity(toks: &[&str], expected: usize, line: usize) -> Result<()> {
    if toks.len() != expected {
        return Err(Error::Parse {
            line,
            message: format!("expected {expected} fields, found {}", toks.len()),
        });
    }
    Ok(())
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut lines = Lines::new(text)?;
    let (_, name) = lines.header("algebra")?;
    let dim = lines.header_usize("dim")?;
    let mut out = Algebra::zero(dim).with_name(name);
    let mut seen = HashSet::new();
    for (line, toks) in lines.body() {
        let line = *line;
        arity(toks, 4, line)?;
        let i = index(toks[0], dim, line)?;
        let j = index(toks[1], dim, line)?;
        let k = index(toks[2], dim, line)?;
        let c = scalar(toks[3], line)?;
        if !seen.insert((i, j, k)) {
            return Err(Error::DuplicateEntry { line });
        }
        out.set_constant(i, j, k, c);
    }
    Ok(out)
}

pub fn serialize_algebra(a: &Algebra) -> String {
    let mut s = format!("algebra {}\ndim {}\n", a.name(), a.dim());
    for (i, j, k, c) in a.nonzero_constants() {
        let _ = writeln!(s, "{} {} {} {}", i + 1, j + 1, k + 1, fmt_scalar(&c));
    }
    s.push_str("end\n");
    s
}

/// A linear map with the name from its file header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub matrix: Matrix,
}

pub fn parse_map(text: &str) -> Result<NamedMap> {
    let mut lines = Lines::new(text)?;
    let (_, name) = lines.header("map")?;
    let rows = lines.header_usize("rows")?;
    let cols = lines.header_usize("cols")?;
    let mut m = Matrix::zeros(rows, cols);
    let mut seen = HashSet::new();
    for (line, toks) in lines.body() {
        let line = *line;
        arity(toks, 3, line)?;
        let r = index(toks[0], rows, line)?;
        let c = index(toks[1], cols, line)?;
        let x = scalar(toks[2], line)?;
        if !seen.insert((r, c)) {
            return Err(Error::DuplicateEntry { line });
        }
        m[(r, c)] = x;
    }
    Ok(NamedMap {
        name: name.to_string(),
        matrix: m,
    })
}

pub fn serialize_map(name: &str, m: &Matrix) -> String {
    let mut s = format!("map {name}\nrows {}\ncols {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() {
                let _ = writeln!(s, "{} {} {}", r + 1, c + 1, fmt_scalar(&m[(r, c)]));
            }
        }
    }
    s.push_str("end\n");
    s
}

/// Contents of a representation file, before it is attached to an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFile {
    pub name: String,
    pub algdim: usize,
    pub repdim: usize,
    pub rho: Vec<Matrix>,
    pub mu: Vec<Matrix>,
}

impl RepFile {
    pub fn from_representation(name: impl Into<String>, r: &Representation) -> Self {
        RepFile {
            name: name.into(),
            algdim: r.alg().dim(),
            repdim: r.vdim(),
            rho: r.rho().to_vec(),
            mu: r.mu().to_vec(),
        }
    }

    /// Attaches the action to `alg`, whose dimension must be `algdim`.
    pub fn into_representation(self, alg: &Algebra) -> Result<Representation> {
        if alg.dim() != self.algdim {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: self.algdim,
            });
        }
        Representation::new(alg.clone(), self.repdim, self.rho, self.mu)
    }
}

pub fn parse_rep(text: &str) -> Result<RepFile> {
    let mut lines = Lines::new(text)?;
    let (_, name) = lines.header("rep")?;
    let algdim = lines.header_usize("algdim")?;
    let repdim = lines.header_usize("repdim")?;
    let mut rho = vec![Matrix::zeros(repdim, repdim); algdim];
    let mut mu = rho.clone();
    let mut seen = HashSet::new();
    for (line, toks) in lines.body() {
        let line = *line;
        arity(toks, 5, line)?;
        let target = match toks[0] {
            "rho" => &mut rho,
            "mu" => &mut mu,
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `rho` or `mu`, found `{other}`"),
                })
            }
        };
        let i = index(toks[1], algdim, line)?;
        let r = index(toks[2], repdim, line)?;
        let c = index(toks[3], repdim, line)?;
        let x = scalar(toks[4], line)?;
        if !seen.insert((toks[0], i, r, c)) {
            return Err(Error::DuplicateEntry { line });
        }
        target[i][(r, c)] = x;
    }
    Ok(RepFile {
        name: name.to_string(),
        algdim,
        repdim,
        rho,
        mu,
    })
}

pub fn serialize_rep(rep: &RepFile) -> String {
    let mut s = format!("rep {}\nalgdim {}\nrepdim {}\n", rep.name, rep.algdim, rep.repdim);
    for (key, family) in [("rho", &rep.rho), ("mu", &rep.mu)] {
        for (i, m) in family.iter().enumerate() {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !m[(r, c)].is_zero() {
                        let _ = writeln!(s, "{key} {} {} {} {}", i + 1, r + 1, c + 1, fmt_scalar(&m[(r, c)]));
                    }
                }
            }
        }
    }
    s.push_str("end\n");
    s
}

pub fn parse_cochain(text: &str) -> Result<Cochain> {
    let mut lines = Lines::new(text)?;
    let degree = lines.header_usize("cochain")?;
    let algdim = lines.header_usize("algdim")?;
    let repdim = lines.header_usize("repdim")?;
    let size = cochain_dim(algdim, repdim, degree).filter(|&n| n <= 1 << 24).ok_or(Error::Parse {
        line: 1,
        message: "cochain space too large".into(),
    })?;
    let mut values = vec![Scalar::zero(); size];
    let mut seen = HashSet::new();
    for (line, toks) in lines.body() {
        let line = *line;
        arity(toks, degree + 2, line)?;
        let mut pos = 0usize;
        for t in &toks[..degree] {
            pos = pos * algdim + index(t, algdim, line)?;
        }
        pos = pos * repdim + index(toks[degree], repdim, line)?;
        let x = scalar(toks[degree + 1], line)?;
        if !seen.insert(pos) {
            return Err(Error::DuplicateEntry { line });
        }
        values[pos] = x;
    }
    Cochain::new(degree, algdim, repdim, values)
}

pub fn serialize_cochain(c: &Cochain) -> String {
    let (d, vd, n) = (c.alg_dim(), c.vdim(), c.degree());
    let mut s = format!("cochain {n}\nalgdim {d}\nrepdim {vd}\n");
    for (pos, x) in c.values().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let mut rest = pos / vd.max(1);
        let mut idx = vec![0; n];
        for slot in idx.iter_mut().rev() {
            *slot = rest % d;
            rest /= d;
        }
        for i in idx {
            let _ = write!(s, "{} ", i + 1);
        }
        let _ = writeln!(s, "{} {}", pos % vd + 1, fmt_scalar(x));
    }
    s.push_str("end\n");
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<Algebra> {
    parse_algebra(&read(path.as_ref())?)
}

pub fn read_map(path: impl AsRef<Path>) -> Result<NamedMap> {
    parse_map(&read(path.as_ref())?)
}

pub fn read_rep(path: impl AsRef<Path>) -> Result<RepFile> {
    parse_rep(&read(path.as_ref())?)
}

pub fn read_cochain(path: impl AsRef<Path>) -> Result<Cochain> {
    parse_cochain(&read(path.as_ref())?)
}
