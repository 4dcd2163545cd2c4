//! JSON documents for triples, morphisms and moment-angle data.
//!
//! Gaussian rationals are written as integer quadruples
//! `[re_num, re_den, im_num, im_den]`; simplices use 1-based ray indices and
//! may list maximal faces only.

use std::fmt;

use maxtorus::exact::{GVector, IntMatrix, Matrix, Rational, ZVector};
use maxtorus::polyhedral::{Fan, Simplex, SimplicialComplex};
use maxtorus::triple::TripleError;
use maxtorus::{GaussianRational, Morphism, Triple};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

/// A parse or shape error, located by file and field path (or line and column).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{file}: {location}: {message}")]
pub struct DocumentError {
    pub file: String,
    pub location: String,
    pub message: String,
}

impl DocumentError {
    fn at(file: &str, location: impl Into<String>, message: impl fmt::Display) -> Self {
        DocumentError { file: file.to_string(), location: location.into(), message: message.to_string() }
    }

    fn from_json(file: &str, e: &serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the position in the location
        let message = match message.rfind(" at line ") {
            Some(cut) => message[..cut].to_string(),
            None => message,
        };
        DocumentError::at(file, format!("line {} column {}", e.line(), e.column()), message)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDocument {
    pub torus_rank: usize,
    pub rays: Vec<Vec<Number>>,
    pub simplices: Vec<Vec<usize>>,
    pub h_basis: Vec<Vec<Vec<Number>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    pub source: TripleDocument,
    pub target: TripleDocument,
    pub matrix: Vec<Vec<Number>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdmissibilityDocument {
    /// Number of vertices `m`; vertices absent from every simplex are ghosts.
    pub vertex_count: usize,
    pub dim: usize,
    pub simplices: Vec<Vec<usize>>,
    /// One ray per non-ghost vertex, in increasing vertex order.
    pub rays: Vec<Vec<Number>>,
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(file: &str, text: &str) -> Result<T, DocumentError> {
    serde_json::from_str(text).map_err(|e| DocumentError::from_json(file, &e))
}

pub fn integer(n: &Number, file: &str, path: &str) -> Result<BigInt, DocumentError> {
    n.to_string().parse().map_err(|_| DocumentError::at(file, path, format!("expected an integer, found {n}")))
}

pub fn number(v: &BigInt) -> Number {
    v.to_string().parse().expect("integers are valid JSON numbers")
}

fn int_vector(v: &[Number], file: &str, path: &str) -> Result<ZVector, DocumentError> {
    v.iter().enumerate().map(|(i, n)| integer(n, file, &format!("{path}[{i}]"))).collect()
}

fn gaussian(q: &[Number], file: &str, path: &str) -> Result<GaussianRational, DocumentError> {
    if q.len() != 4 {
        return Err(DocumentError::at(
            file,
            path,
            format!("expected [re_num, re_den, im_num, im_den], found {} numbers", q.len()),
        ));
    }
    let ints: Vec<BigInt> = int_vector(q, file, path)?;
    for d in [1, 3] {
        if ints[d] == BigInt::from(0) {
            return Err(DocumentError::at(file, format!("{path}[{d}]"), "denominator is zero"));
        }
    }
    Ok(GaussianRational::new(
        Rational::new(ints[0].clone(), ints[1].clone()),
        Rational::new(ints[2].clone(), ints[3].clone()),
    ))
}

pub fn quadruple(z: &GaussianRational) -> Vec<Number> {
    [z.re.numer(), z.re.denom(), z.im.numer(), z.im.denom()].into_iter().map(number).collect()
}

fn simplices(raw: &[Vec<usize>], vertices: usize, file: &str, path: &str) -> Result<Vec<Simplex>, DocumentError> {
    let mut out = Vec::with_capacity(raw.len());
    for (i, s) in raw.iter().enumerate() {
        let mut face = Vec::with_capacity(s.len());
        for (j, &v) in s.iter().enumerate() {
            if v == 0 || v > vertices {
                return Err(DocumentError::at(
                    file,
                    format!("{path}[{i}][{j}]"),
                    format!("index {v} is outside 1..={vertices}"),
                ));
            }
            face.push(v - 1);
        }
        out.push(face);
    }
    Ok(out)
}

impl TripleDocument {
    pub fn to_triple(&self, file: &str) -> Result<Triple, DocumentError> {
        self.to_triple_at(file, "")
    }

    fn to_triple_at(&self, file: &str, prefix: &str) -> Result<Triple, DocumentError> {
        let m = self.torus_rank;
        let mut rays = Vec::with_capacity(self.rays.len());
        for (i, r) in self.rays.iter().enumerate() {
            let path = format!("{prefix}rays[{i}]");
            if r.len() != m {
                return Err(DocumentError::at(file, path, format!("expected {m} entries, found {}", r.len())));
            }
            rays.push(int_vector(r, file, &path)?);
        }
        let faces = simplices(&self.simplices, rays.len(), file, &format!("{prefix}simplices"))?;
        let fan = Fan::from_maximal(m, rays, faces).map_err(|e| DocumentError::at(file, format!("{prefix}rays"), e))?;

        let mut h_basis: Vec<GVector> = Vec::with_capacity(self.h_basis.len());
        for (i, w) in self.h_basis.iter().enumerate() {
            let path = format!("{prefix}h_basis[{i}]");
            if w.len() != m {
                return Err(DocumentError::at(file, path, format!("expected {m} entries, found {}", w.len())));
            }
            let v: Result<GVector, _> =
                w.iter().enumerate().map(|(j, q)| gaussian(q, file, &format!("{path}[{j}]"))).collect();
            h_basis.push(v?);
        }
        Triple::new(fan, h_basis).map_err(|e: TripleError| DocumentError::at(file, format!("{prefix}h_basis"), e))
    }

    pub fn from_triple(t: &Triple) -> Self {
        let fan = t.fan();
        TripleDocument {
            torus_rank: t.torus_rank(),
            rays: fan.rays().iter().map(|r| r.iter().map(number).collect()).collect(),
            simplices: fan.complex().maximal_faces().into_iter().map(|s| s.iter().map(|v| v + 1).collect()).collect(),
            h_basis: t.h_basis().iter().map(|w| w.iter().map(quadruple).collect()).collect(),
        }
    }
}

pub fn parse_triple(file: &str, text: &str) -> Result<Triple, DocumentError> {
    parse_json::<TripleDocument>(file, text)?.to_triple(file)
}

impl MorphismDocument {
    pub fn to_morphism(&self, file: &str) -> Result<Morphism, DocumentError> {
        let source = self.source.to_triple_at(file, "source.")?;
        let target = self.target.to_triple_at(file, "target.")?;
        let (rows, cols) = (target.torus_rank(), source.torus_rank());
        if self.matrix.len() != rows {
            return Err(DocumentError::at(
                file,
                "matrix",
                format!("expected {rows} rows, found {}", self.matrix.len()),
            ));
        }
        let mut entries = Vec::with_capacity(rows);
        for (i, row) in self.matrix.iter().enumerate() {
            let path = format!("matrix[{i}]");
            if row.len() != cols {
                return Err(DocumentError::at(file, path, format!("expected {cols} entries, found {}", row.len())));
            }
            entries.push(int_vector(row, file, &path)?);
        }
        let matrix: IntMatrix = Matrix::from_rows(cols, &entries);
        Morphism::new(source, target, matrix).map_err(|e| DocumentError::at(file, "matrix", e))
    }

    pub fn from_morphism(f: &Morphism) -> Self {
        MorphismDocument {
            source: TripleDocument::from_triple(f.source()),
            target: TripleDocument::from_triple(f.target()),
            matrix: f.matrix().row_vecs().iter().map(|r| r.iter().map(number).collect()).collect(),
        }
    }
}

/// Parsed moment-angle input: complex on `0..m`, target dimension and rays.
pub struct AdmissibilityInput {
    pub sigma: SimplicialComplex,
    pub m: usize,
    pub d: usize,
    pub rays: Vec<ZVector>,
}

impl AdmissibilityDocument {
    pub fn to_input(&self, file: &str) -> Result<AdmissibilityInput, DocumentError> {
        let faces = simplices(&self.simplices, self.vertex_count, file, "simplices")?;
        let mut rays = Vec::with_capacity(self.rays.len());
        for (i, r) in self.rays.iter().enumerate() {
            let path = format!("rays[{i}]");
            if r.len() != self.dim {
                return Err(DocumentError::at(file, path, format!("expected {} entries, found {}", self.dim, r.len())));
            }
            rays.push(int_vector(r, file, &path)?);
        }
        let sigma = SimplicialComplex::from_maximal(faces);
        if sigma.vertices().len() != rays.len() {
            return Err(DocumentError::at(
                file,
                "rays",
                format!("expected one ray per vertex ({}), found {}", sigma.vertices().len(), rays.len()),
            ));
        }
        Ok(AdmissibilityInput { sigma, m: self.vertex_count, d: self.dim, rays })
    }
}

pub fn to_value<T: Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}
