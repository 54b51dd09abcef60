//! Nondegenerate quadratic spaces over `F_q` in the bases used for the
//! unipotent radical of the maximal parabolic.

// Matrix code reads clearer with explicit indices.
#![allow(clippy::needless_range_loop)]

use serde::Serialize;

use super::field::{Elem, Fq};
use crate::error::{Error, Result};
use crate::symbols::Family;

/// The three vector classes tracked by the counts: nonzero singular vectors,
/// and the two nonzero-value classes (see [`QuadSpace::class_value`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitClass {
    Singular,
    Square,
    Nonsquare,
}

impl OrbitClass {
    pub fn all() -> [OrbitClass; 3] {
        [OrbitClass::Singular, OrbitClass::Square, OrbitClass::Nonsquare]
    }
}

impl std::str::FromStr for OrbitClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "singular" | "zero" | "0" => Ok(OrbitClass::Singular),
            "square" | "plus" | "+" | "nonzero" => Ok(OrbitClass::Square),
            "nonsquare" | "minus" | "-" => Ok(OrbitClass::Nonsquare),
            _ => Err(Error::Parse(format!("unknown orbit class {s:?}"))),
        }
    }
}

impl std::fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OrbitClass::Singular => "singular",
            OrbitClass::Square => "square",
            OrbitClass::Nonsquare => "nonsquare",
        })
    }
}

/// `(V, F)` with `F(v) = v G v^T / 2`.
#[derive(Clone, Debug)]
pub struct QuadSpace {
    family: Family,
    n: u32,
    field: Fq,
    gram: Vec<Vec<Elem>>,
    /// `F(v) = sum coef * v_i * v_j` over `i <= j`.
    terms: Vec<(usize, usize, Elem)>,
}

impl QuadSpace {
    /// The standard space for `family` at rank `n`: dimension `2n - 1` with
    /// anti-diagonal Gram matrix for B, dimension `2n - 2` for D, where the
    /// minus type replaces the middle 2x2 block by `diag(2, -2 delta)`.
    pub fn standard(family: Family, n: u32, q: u64) -> Result<Self> {
        let field = Fq::new(q)?;
        Self::standard_over(family, n, field)
    }

    pub fn standard_over(family: Family, n: u32, field: Fq) -> Result<Self> {
        let dim = match family {
            Family::BC if n >= 2 => 2 * n as usize - 1,
            Family::DPlus | Family::DMinus if n >= 3 => 2 * n as usize - 2,
            _ => return Err(Error::OutOfRange(format!("rank {n} too small for {family} quadratic space"))),
        };
        let mut gram = vec![vec![0; dim]; dim];
        for (i, row) in gram.iter_mut().enumerate() {
            row[dim - 1 - i] = 1;
        }
        if family == Family::BC {
            // F(e_mid) = 1/2.
            gram[dim / 2][dim / 2] = 1;
        } else if family == Family::DMinus {
            let (a, b) = (dim / 2 - 1, dim / 2);
            gram[a][b] = 0;
            gram[b][a] = 0;
            gram[a][a] = field.from_int(2);
            gram[b][b] = field.neg(field.mul(field.from_int(2), field.nonsquare()));
        }
        Self::from_gram(family, n, field, gram)
    }

    /// A space with an arbitrary symmetric nondegenerate Gram matrix.
    pub fn from_gram(family: Family, n: u32, field: Fq, gram: Vec<Vec<Elem>>) -> Result<Self> {
        let dim = gram.len();
        if gram.iter().any(|r| r.len() != dim) {
            return Err(Error::BadInput("Gram matrix is not square".into()));
        }
        for i in 0..dim {
            for j in 0..dim {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::BadInput("Gram matrix is not symmetric".into()));
                }
            }
        }
        if invert(&field, &gram).is_none() {
            return Err(Error::BadInput("Gram matrix is degenerate".into()));
        }
        let half = field.half();
        let mut terms = Vec::new();
        for i in 0..dim {
            if gram[i][i] != 0 {
                terms.push((i, i, field.mul(half, gram[i][i])));
            }
            for j in i + 1..dim {
                if gram[i][j] != 0 {
                    terms.push((i, j, gram[i][j]));
                }
            }
        }
        Ok(QuadSpace { family, n, field, gram, terms })
    }

    /// The dual space `V*`, with the form induced by `G^{-1}`; the map
    /// `v -> G v` is an isometry onto it.
    pub fn dual(&self) -> QuadSpace {
        let inv = invert(&self.field, &self.gram).expect("nondegenerate");
        Self::from_gram(self.family, self.n, self.field.clone(), inv).expect("inverse of a nondegenerate form")
    }

    /// The same form written in the reversed basis.
    pub fn reversed(&self) -> QuadSpace {
        let d = self.dim();
        let gram = (0..d).map(|i| (0..d).map(|j| self.gram[d - 1 - i][d - 1 - j]).collect()).collect();
        Self::from_gram(self.family, self.n, self.field.clone(), gram).expect("reordering preserves nondegeneracy")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.size() as u64
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Elem>] {
        &self.gram
    }

    pub fn form(&self, v: &[Elem]) -> Elem {
        let f = &self.field;
        self.terms.iter().fold(0, |acc, &(i, j, c)| f.add(acc, f.mul(c, f.mul(v[i], v[j]))))
    }

    pub fn bilinear(&self, u: &[Elem], v: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if u[i] == 0 {
                continue;
            }
            for (j, &g) in row.iter().enumerate() {
                if g != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(g, f.mul(u[i], v[j])));
                }
            }
        }
        acc
    }

    /// Representative form value of a class: 0 for singular vectors, and for
    /// the nonzero classes `1, delta` (type D) or `1/2, delta/2` (type B, so
    /// that the square class is the one containing the anisotropic basis
    /// vector).
    pub fn class_value(&self, class: OrbitClass) -> Elem {
        let f = &self.field;
        let scale = if self.family == Family::BC { f.half() } else { 1 };
        match class {
            OrbitClass::Singular => 0,
            OrbitClass::Square => scale,
            OrbitClass::Nonsquare => f.mul(scale, f.nonsquare()),
        }
    }

    /// Whether the first coordinate pairs only with the last one, through
    /// the term `v_0 * v_last`: the shape needed by the stratified count.
    pub(crate) fn hyperbolic_ends(&self) -> bool {
        let last = self.dim() - 1;
        let ends: Vec<_> = self.terms.iter().filter(|(i, j, _)| *i == 0 || *j == last).collect();
        ends.len() == 1 && ends[0].0 == 0 && ends[0].1 == last && ends[0].2 == 1
    }
}

/// Inverse over `F_q` by Gauss-Jordan elimination.
pub fn invert(f: &Fq, m: &[Vec<Elem>]) -> Option<Vec<Vec<Elem>>> {
    let d = m.len();
    let mut a: Vec<Vec<Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| Elem::from(i == j)));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let s = f.inv(a[col][col]).expect("nonzero pivot");
        a[col].iter_mut().for_each(|x| *x = f.mul(*x, s));
        for r in 0..d {
            if r != col && a[r][col] != 0 {
                let c = a[r][col];
                for k in 0..2 * d {
                    let t = f.mul(c, a[col][k]);
                    a[r][k] = f.sub(a[r][k], t);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[d..].to_vec()).collect())
}

/// Basis of the solution space of `rows * v = 0`.
pub fn nullspace(f: &Fq, rows: &[Vec<Elem>], dim: usize) -> Vec<Vec<Elem>> {
    let mut a: Vec<Vec<Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..a.len()).find(|&i| a[i][col] != 0) else { continue };
        a.swap(r, p);
        let s = f.inv(a[r][col]).expect("nonzero pivot");
        a[r].iter_mut().for_each(|x| *x = f.mul(*x, s));
        for i in 0..a.len() {
            if i != r && a[i][col] != 0 {
                let c = a[i][col];
                for k in 0..dim {
                    let t = f.mul(c, a[r][k]);
                    a[i][k] = f.sub(a[i][k], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; dim];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[i][free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_spaces() {
        let s = QuadSpace::standard(Family::BC, 3, 3).unwrap();
        assert_eq!(s.dim(), 5);
        let mut e = vec![0; 5];
        e[2] = 1;
        assert_eq!(s.form(&e), s.class_value(OrbitClass::Square));
        let m = QuadSpace::standard(Family::DMinus, 3, 5).unwrap();
        // Anisotropic middle plane.
        for x in 0..5 {
            for y in 0..5 {
                if (x, y) != (0, 0) {
                    assert_ne!(m.form(&[0, x, y, 0]), 0);
                }
            }
        }
        assert!(m.hyperbolic_ends() && m.dual().hyperbolic_ends() && m.reversed().hyperbolic_ends());
        assert!(QuadSpace::standard(Family::DPlus, 2, 3).is_err());
    }

    #[test]
    fn inverse_and_nullspace() {
        let f = Fq::new(5).unwrap();
        let m = vec![vec![2, 1], vec![1, 1]];
        let inv = invert(&f, &m).unwrap();
        assert_eq!(inv, vec![vec![1, 4], vec![4, 2]]);
        let ns = nullspace(&f, &[vec![1, 2, 3]], 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(f.add(f.add(v[0], f.mul(2, v[1])), f.mul(3, v[2])), 0);
        }
    }
}
