//! Reduced simplicial homology ranks over ℚ or GF(p).
//!
//! Ranks come from boundary-matrix ranks by rank-nullity. Over ℚ the rank is
//! computed with integer-preserving elimination (each row is kept primitive),
//! so no fractions or floating point are involved.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Coefficient field: characteristic 0 means ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn from_characteristic(c: u64) -> Result<Self> {
        match c {
            0 => Ok(FieldSpec::Rationals),
            p if is_prime(p) && p < (1 << 31) => Ok(FieldSpec::Prime(p)),
            p => Err(Error::BadCharacteristic(p)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn rank(&self, field: FieldSpec) -> Result<usize> {
        match field {
            FieldSpec::Rationals => rank_rational(self),
            FieldSpec::Prime(p) => Ok(rank_mod_p(self, p)),
        }
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn make_primitive(row: &mut [i128]) {
    let g = row.iter().fold(0, |g, &v| gcd(g, v));
    if g > 1 {
        row.iter_mut().for_each(|v| *v /= g);
    }
}

fn rank_rational(m: &IntMatrix) -> Result<usize> {
    let mut rows: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| m.row(r).iter().map(|&v| v as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&v| v != 0))
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let p = &top[rank];
        let a = p[col];
        for row in rest.iter_mut() {
            let b = row[col];
            if b == 0 {
                continue;
            }
            let g = gcd(a, b);
            let (fa, fb) = (a / g, b / g);
            for c in col..m.cols {
                let v = row[c]
                    .checked_mul(fa)
                    .zip(p[c].checked_mul(fb))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::ArithmeticOverflow)?;
                row[c] = v;
            }
            make_primitive(row);
        }
        rank += 1;
    }
    Ok(rank)
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let modp = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| m.row(r).iter().map(|&v| modp(v)).collect())
        .collect();
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][col]);
        for v in rows[rank][col..].iter_mut() {
            *v = *v * scale % p;
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for c in col..m.cols {
                row[c] = (row[c] + p - f * prow[c] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A finite abstract simplicial complex on vertices `0..n`.
///
/// Faces are sorted index vectors grouped by size. The void complex has no
/// faces at all; the complex `{∅}` has only the empty face.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    /// `by_size[k]` holds the faces with `k` vertices, sorted.
    by_size: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        Self::default()
    }

    /// Downward closure of the given faces.
    pub fn from_facets<I>(facets: I) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut all = std::collections::BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            assert!(f.len() < 64, "facet too large");
            for mask in 0..(1u64 << f.len()) {
                let sub: Vec<usize> = (0..f.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                all.insert(sub);
            }
        }
        Self::from_closed_faces(all)
    }

    /// Builds from a face family that is already downward closed.
    pub(crate) fn from_closed_faces<I>(faces: I) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut by_size: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in faces {
            if by_size.len() <= f.len() {
                by_size.resize(f.len() + 1, Vec::new());
            }
            by_size[f.len()].push(f);
        }
        for level in by_size.iter_mut() {
            level.sort();
            level.dedup();
        }
        Self { by_size }
    }

    pub fn is_void(&self) -> bool {
        self.by_size.is_empty()
    }

    /// True when there is no vertex (void, or only the empty face).
    pub fn has_no_vertices(&self) -> bool {
        self.num_faces_of_size(1) == 0
    }

    /// Dimension, `-1` for `{∅}` and the void complex.
    pub fn dim(&self) -> isize {
        self.by_size.len() as isize - 2
    }

    pub fn num_faces_of_size(&self, k: usize) -> usize {
        self.by_size.get(k).map_or(0, Vec::len)
    }

    /// Faces of dimension `i` (size `i + 1`); `i = -1` is the empty face.
    pub fn faces_of_dim(&self, i: isize) -> &[Vec<usize>] {
        let k = (i + 1) as usize;
        self.by_size.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.by_size.iter().flatten()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.faces_of_dim(0).iter().map(|f| f[0]).collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        let present: std::collections::HashSet<&Vec<usize>> = self.faces().collect();
        self.faces().all(|f| {
            (0..f.len()).all(|j| {
                let mut sub = f.clone();
                sub.remove(j);
                present.contains(&sub)
            })
        })
    }

    /// Euler characteristic including the empty face (`Σ (-1)^i f_i` for `i ≥ -1`).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.by_size
            .iter()
            .enumerate()
            .map(|(k, fs)| {
                let s = if k % 2 == 1 { 1 } else { -1 };
                s * fs.len() as i64
            })
            .sum()
    }

    /// Matrix of the `i`-th boundary map: rows are `(i-1)`-faces, columns are
    /// `i`-faces, and removing the `j`-th vertex carries sign `(-1)^j`.
    /// For `i = 0` the single row is the empty face.
    pub fn boundary_matrix(&self, i: usize) -> IntMatrix {
        let lower = self.faces_of_dim(i as isize - 1);
        let upper = self.faces_of_dim(i as isize);
        let index: HashMap<&[usize], usize> = lower
            .iter()
            .enumerate()
            .map(|(r, f)| (f.as_slice(), r))
            .collect();
        let mut m = IntMatrix::zeros(lower.len(), upper.len());
        let mut sub = Vec::with_capacity(i + 1);
        for (c, face) in upper.iter().enumerate() {
            for j in 0..face.len() {
                sub.clear();
                sub.extend(face.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v));
                let r = index[sub.as_slice()];
                m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }

    /// Ranks of reduced homology in dimensions `0..=dim` over `field`.
    pub fn reduced_homology_ranks(&self, field: FieldSpec) -> Result<Vec<usize>> {
        if self.dim() < 0 {
            return Ok(Vec::new());
        }
        let top = self.dim() as usize;
        let ranks = (0..=top + 1)
            .map(|i| {
                if i > top {
                    Ok(0)
                } else {
                    self.boundary_matrix(i).rank(field)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((0..=top)
            .map(|i| self.faces_of_dim(i as isize).len() - ranks[i] - ranks[i + 1])
            .collect())
    }

    /// Non-empty, connected, and no reduced homology in any dimension.
    pub fn is_acyclic(&self, field: FieldSpec) -> Result<bool> {
        if self.has_no_vertices() {
            return Ok(false);
        }
        if !self.is_connected() {
            return Ok(false);
        }
        Ok(self.reduced_homology_ranks(field)?.iter().all(|&r| r == 0))
    }

    pub fn is_connected(&self) -> bool {
        let verts = self.vertices();
        if verts.is_empty() {
            return true;
        }
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = verts.len();
        for e in self.faces_of_dim(1) {
            let (a, b) = (find(&mut parent, pos[&e[0]]), find(&mut parent, pos[&e[1]]));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps == 1
    }
}
