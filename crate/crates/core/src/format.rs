//! Line-oriented text format for systems, solutions and black-box samples.
//!
//! ```text
//! # comment
//! FIELD GF(16; 1,1,0,0,1)
//! DIMS 3 3
//! A 0 0 : 1,0,3
//! B 2 : 5,1
//! SOLUTION F 0 : 4,1
//! SOLUTION G : 2,0,1
//! SAMPLE 0 : 7 | 1,0,0,0,1,0,0,0,1 | 3,4,5
//! ERRORS 4 9
//! ```
//!
//! `DIMS` is `m n`. Indices are 0-based, coefficients are comma-separated ascending field
//! element encodings and an empty list is the zero polynomial. Unlisted `A`
//! and `B` entries are zero. A `SAMPLE` holds the point, then `A(α)` in
//! row-major order, then `b(α)`. `ERRORS` lists the indices of corrupted
//! samples when the ground truth is known.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Fe, Gf};
use crate::matrix::Matrix;
use crate::oracle::Evaluation;
use crate::poly::Poly;
use crate::system::{PolyMatrix, PolySystem, ReducedRationalSolution};

#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub field: Gf,
    pub m: usize,
    pub n: usize,
    pub system: Option<PolySystem<Fe>>,
    pub solution: Option<ReducedRationalSolution<Fe>>,
    pub samples: Vec<Evaluation<Fe>>,
    pub errors: Option<Vec<usize>>,
}

impl InstanceFile {
    pub fn new(field: Gf, m: usize, n: usize) -> Self {
        Self { field, m, n, system: None, solution: None, samples: Vec::new(), errors: None }
    }

    pub fn with_system(field: Gf, system: PolySystem<Fe>) -> Self {
        let (m, n) = (system.m(), system.n());
        Self { system: Some(system), ..Self::new(field, m, n) }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "FIELD {}", self.field);
        let _ = writeln!(out, "DIMS {} {}", self.m, self.n);
        if let Some(sys) = &self.system {
            for i in 0..sys.m() {
                for j in 0..sys.n() {
                    let p = sys.matrix().get(i, j);
                    if !p.is_zero() {
                        let _ = writeln!(out, "A {i} {j} : {}", join(p.coeffs()));
                    }
                }
            }
            for (i, p) in sys.rhs().iter().enumerate() {
                if !p.is_zero() {
                    let _ = writeln!(out, "B {i} : {}", join(p.coeffs()));
                }
            }
        }
        if let Some(sol) = &self.solution {
            for (i, p) in sol.numerators().iter().enumerate() {
                let _ = writeln!(out, "SOLUTION F {i} : {}", join(p.coeffs()));
            }
            let _ = writeln!(out, "SOLUTION G : {}", join(sol.denominator().coeffs()));
        }
        for (l, s) in self.samples.iter().enumerate() {
            let _ = writeln!(out, "SAMPLE {l} : {} | {} | {}", s.point.value(), join(s.a.data()), join(&s.b));
        }
        if let Some(errors) = &self.errors {
            let list: Vec<_> = errors.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "ERRORS {}", list.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }
}

fn join(values: &[Fe]) -> String {
    values.iter().map(|v| v.value().to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Default)]
struct Parser {
    field: Option<Gf>,
    dims: Option<(usize, usize)>,
    a: Vec<Vec<Option<Poly<Fe>>>>,
    b: Vec<Option<Poly<Fe>>>,
    has_system: bool,
    f: Vec<Option<Poly<Fe>>>,
    g: Option<Poly<Fe>>,
    samples: Vec<Evaluation<Fe>>,
    errors: Option<Vec<usize>>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn index(line: usize, tok: Option<&str>, bound: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what} index")))?;
    let v: usize = tok.parse().map_err(|_| err(line, format!("bad {what} index `{tok}`")))?;
    if v >= bound {
        return Err(err(line, format!("{what} index {v} out of range (< {bound})")));
    }
    Ok(v)
}

impl Parser {
    fn field(&self, line: usize) -> Result<&Gf> {
        self.field.as_ref().ok_or_else(|| err(line, "FIELD must come first"))
    }

    fn dims(&self, line: usize) -> Result<(usize, usize)> {
        self.dims.ok_or_else(|| err(line, "DIMS must precede data lines"))
    }

    fn elems(&self, line: usize, text: &str) -> Result<Vec<Fe>> {
        let field = self.field(line)?;
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                let v: u64 = tok.parse().map_err(|_| err(line, format!("bad field element `{tok}`")))?;
                field.elem(v).map_err(|e| err(line, e.to_string()))
            })
            .collect()
    }

    fn poly(&self, line: usize, text: &str) -> Result<Poly<Fe>> {
        let field = self.field(line)?;
        Ok(Poly::from_coeffs(field, self.elems(line, text)?))
    }

    fn run(mut self, text: &str) -> Result<InstanceFile> {
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, body) = match content.split_once(':') {
                Some((h, b)) => (h.trim(), Some(b)),
                None => (content, None),
            };
            let mut toks = head.split_whitespace();
            let keyword = toks.next().unwrap_or_default();
            match keyword {
                "FIELD" => {
                    if self.field.is_some() {
                        return Err(err(line, "duplicate FIELD"));
                    }
                    let spec = content["FIELD".len()..].trim();
                    self.field = Some(spec.parse().map_err(|e: Error| err(line, e.to_string()))?);
                    continue;
                }
                "DIMS" => {
                    self.field(line)?;
                    if self.dims.is_some() {
                        return Err(err(line, "duplicate DIMS"));
                    }
                    let m = index(line, toks.next(), usize::MAX, "m")?;
                    let n = index(line, toks.next(), usize::MAX, "n")?;
                    if n == 0 || m < n {
                        return Err(err(line, format!("need m >= n >= 1, got m={m}, n={n}")));
                    }
                    self.dims = Some((m, n));
                    self.a = vec![vec![None; n]; m];
                    self.b = vec![None; m];
                    self.f = vec![None; n];
                }
                "A" => {
                    let (m, n) = self.dims(line)?;
                    let r = index(line, toks.next(), m, "row")?;
                    let c = index(line, toks.next(), n, "column")?;
                    let body = body.ok_or_else(|| err(line, "missing `:`"))?;
                    if self.a[r][c].is_some() {
                        return Err(err(line, format!("duplicate entry A {r} {c}")));
                    }
                    self.a[r][c] = Some(self.poly(line, body)?);
                    self.has_system = true;
                }
                "B" => {
                    let (m, _) = self.dims(line)?;
                    let r = index(line, toks.next(), m, "row")?;
                    let body = body.ok_or_else(|| err(line, "missing `:`"))?;
                    if self.b[r].is_some() {
                        return Err(err(line, format!("duplicate entry B {r}")));
                    }
                    self.b[r] = Some(self.poly(line, body)?);
                    self.has_system = true;
                }
                "SOLUTION" => {
                    let (_, n) = self.dims(line)?;
                    let body = body.ok_or_else(|| err(line, "missing `:`"))?;
                    match toks.next() {
                        Some("F") => {
                            let i = index(line, toks.next(), n, "numerator")?;
                            if self.f[i].is_some() {
                                return Err(err(line, format!("duplicate numerator {i}")));
                            }
                            self.f[i] = Some(self.poly(line, body)?);
                        }
                        Some("G") => {
                            if self.g.is_some() {
                                return Err(err(line, "duplicate denominator"));
                            }
                            self.g = Some(self.poly(line, body)?);
                        }
                        _ => return Err(err(line, "expected SOLUTION F <i> or SOLUTION G")),
                    }
                }
                "SAMPLE" => {
                    let (m, n) = self.dims(line)?;
                    let l = index(line, toks.next(), usize::MAX, "sample")?;
                    if l != self.samples.len() {
                        return Err(err(line, format!("expected sample {}, found {l}", self.samples.len())));
                    }
                    let body = body.ok_or_else(|| err(line, "missing `:`"))?;
                    let parts: Vec<_> = body.split('|').collect();
                    if parts.len() != 3 {
                        return Err(err(line, "a sample needs `alpha | A | b`"));
                    }
                    let point = match self.elems(line, parts[0])?.as_slice() {
                        [p] => *p,
                        _ => return Err(err(line, "expected a single point")),
                    };
                    let a = self.elems(line, parts[1])?;
                    let b = self.elems(line, parts[2])?;
                    if a.len() != m * n || b.len() != m {
                        return Err(err(line, format!("expected {} matrix and {m} vector entries", m * n)));
                    }
                    let a = Matrix::from_vec(m, n, a).map_err(|e| err(line, e.to_string()))?;
                    self.samples.push(Evaluation { point, a, b });
                }
                "ERRORS" => {
                    if self.errors.is_some() {
                        return Err(err(line, "duplicate ERRORS"));
                    }
                    let list = toks
                        .map(|t| t.parse().map_err(|_| err(line, format!("bad error index `{t}`"))))
                        .collect::<Result<Vec<usize>>>()?;
                    self.errors = Some(list);
                }
                other => return Err(err(line, format!("unknown keyword `{other}`"))),
            }
        }
        self.finish(text.lines().count())
    }

    fn finish(self, last: usize) -> Result<InstanceFile> {
        let field = self.field.ok_or_else(|| err(last, "missing FIELD"))?;
        let (m, n) = self.dims.ok_or_else(|| err(last, "missing DIMS"))?;
        let system = if self.has_system {
            let rows =
                self.a.into_iter().map(|r| r.into_iter().map(|p| p.unwrap_or_else(Poly::zero)).collect()).collect();
            let matrix = PolyMatrix::from_rows(rows).map_err(|e| err(last, e.to_string()))?;
            let rhs = self.b.into_iter().map(|p| p.unwrap_or_else(Poly::zero)).collect();
            Some(PolySystem::new(matrix, rhs).map_err(|e| err(last, e.to_string()))?)
        } else {
            None
        };
        let any_f = self.f.iter().any(Option::is_some);
        let solution = match (any_f, self.g) {
            (false, None) => None,
            (true, Some(g)) => {
                let f = self.f.into_iter().map(|p| p.unwrap_or_else(Poly::zero)).collect();
                Some(ReducedRationalSolution::new(&field, f, g).map_err(|e| err(last, e.to_string()))?)
            }
            (false, Some(g)) => Some(
                ReducedRationalSolution::new(&field, vec![Poly::zero(); n], g).map_err(|e| err(last, e.to_string()))?,
            ),
            (true, None) => return Err(err(last, "a solution needs SOLUTION G")),
        };
        if let Some(errors) = &self.errors {
            if let Some(&bad) = errors.iter().find(|&&e| e >= self.samples.len()) {
                return Err(err(last, format!("error index {bad} has no sample")));
            }
        }
        Ok(InstanceFile { field, m, n, system, solution, samples: self.samples, errors: self.errors })
    }
}
