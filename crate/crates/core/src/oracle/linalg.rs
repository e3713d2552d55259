//! Dense linear algebra over a small prime field `F_p`.

use std::cmp::Ordering;

pub(crate) fn reduce_mod(a: i64, p: u32) -> u8 {
    a.rem_euclid(p as i64) as u8
}

pub(crate) fn inv(a: u8, p: u32) -> u8 {
    debug_assert!(a != 0);
    let mut base = a as u32;
    let mut e = p - 2;
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u8
}

/// `dst += c * src` entrywise mod `p`.
fn axpy(dst: &mut [u8], c: u8, src: &[u8], p: u32) {
    if c == 0 {
        return;
    }
    let c = c as u32;
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((*d as u32 + c * s as u32) % p) as u8;
    }
}

/// Square matrix acting on column vectors: `A e_j = sum_i A[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: Vec<Vec<u8>>,
}

impl Matrix {
    pub fn zero(p: u32, n: usize) -> Self {
        Matrix { p, rows: vec![vec![0; n]; n] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zero(p, n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    /// Builds the matrix column by column from the images of the basis vectors.
    pub fn from_images(p: u32, n: usize, mut image: impl FnMut(usize) -> Vec<(usize, i64)>) -> Self {
        let mut m = Matrix::zero(p, n);
        for j in 0..n {
            for (i, c) in image(j) {
                let cur = m.rows[i][j] as i64;
                m.rows[i][j] = reduce_mod(cur + c, p);
            }
        }
        m
    }

    pub fn from_rows(p: u32, rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), n, "matrix must be square");
                r.into_iter().map(|c| reduce_mod(c, p)).collect()
            })
            .collect();
        Matrix { p, rows }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        self.rows
            .iter()
            .map(|row| {
                let s: u32 = row.iter().zip(v).map(|(&a, &b)| a as u32 * b as u32).sum();
                (s % self.p) as u8
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size();
        let mut out = Matrix::zero(self.p, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.rows[i][k];
                if a != 0 {
                    axpy(&mut out.rows[i], a, &other.rows[k], self.p);
                }
            }
        }
        out
    }

    pub fn add_scaled(&self, c: i64, other: &Matrix) -> Matrix {
        let c = reduce_mod(c, self.p);
        let mut out = self.clone();
        for (dst, src) in out.rows.iter_mut().zip(&other.rows) {
            axpy(dst, c, src, self.p);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&c| c == 0))
    }

    pub fn is_nilpotent(&self) -> bool {
        let mut pow = self.clone();
        for _ in 0..self.size() {
            if pow.is_zero() {
                return true;
            }
            pow = pow.mul(self);
        }
        pow.is_zero()
    }

    /// `n` copies of `self` along the diagonal.
    pub fn block_diag(&self, n: usize) -> Matrix {
        let k = self.size();
        Matrix::from_images(self.p, k * n, |j| {
            let (blk, col) = (j / k, j % k);
            (0..k)
                .filter(|&i| self.rows[i][col] != 0)
                .map(|i| (blk * k + i, self.rows[i][col] as i64))
                .collect()
        })
    }
}

/// A subspace of `F_p^d`, held as its reduced row echelon basis, so equal subspaces
/// have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.rows.len(), &self.rows).cmp(&(other.ambient, other.rows.len(), &other.rows))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { p, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![0; ambient];
                r[i] = 1;
                r
            })
            .collect();
        Subspace { p, ambient, rows, pivots: (0..ambient).collect() }
    }

    /// Row-reduces the span of `vectors`.
    pub fn span(p: u32, ambient: usize, vectors: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut rows: Vec<Vec<u8>> = vectors.into_iter().filter(|v| v.iter().any(|&c| c != 0)).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ambient {
            if rank == rows.len() {
                break;
            }
            let Some(r) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, r);
            let s = inv(rows[rank][col], p) as u32;
            for c in rows[rank].iter_mut() {
                *c = ((*c as u32 * s) % p) as u8;
            }
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[col] != 0 {
                    let c = (p - row[col] as u32) as u8;
                    axpy(row, c, &pivot_row, p);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Subspace { p, ambient, rows, pivots }
    }

    pub(crate) fn from_rref_unchecked(p: u32, ambient: usize, rows: Vec<Vec<u8>>, pivots: Vec<usize>) -> Self {
        Subspace { p, ambient, rows, pivots }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut out = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = out[piv];
            if c != 0 {
                axpy(&mut out, (self.p - c as u32) as u8, row, self.p);
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.rows.iter().all(|r| self.contains_vec(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.p, self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    pub fn image(&self, op: &Matrix) -> Subspace {
        Subspace::span(self.p, self.ambient, self.rows.iter().map(|r| op.apply(r)))
    }

    pub fn is_invariant(&self, op: &Matrix) -> bool {
        self.rows.iter().all(|r| self.contains_vec(&op.apply(r)))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let free = (0..self.ambient).filter(|c| !self.pivots.contains(c));
        let vectors: Vec<Vec<u8>> = free
            .map(|f| {
                let mut v = vec![0u8; self.ambient];
                v[f] = 1;
                for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                    v[piv] = reduce_mod(-(row[f] as i64), self.p);
                }
                v
            })
            .collect();
        Subspace::span(self.p, self.ambient, vectors)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Coordinates in the quotient `F_p^d / self`, read off at the non-pivot columns.
    pub fn quotient_coords(&self, v: &[u8]) -> Vec<u8> {
        let r = self.reduce(v);
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).map(|c| r[c]).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Basis of `{x in F_p^k : f(x) = 0 for every row f}`.
pub(crate) fn nullspace(p: u32, k: usize, functionals: &[Vec<u8>]) -> Vec<Vec<u8>> {
    Subspace::span(p, k, functionals.iter().cloned()).annihilator().rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv(a as u8, p) as u32 % p, 1);
            }
        }
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, 3, [vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(3, 3, [vec![1, 2, 1], vec![2, 0, 1], vec![0, 0, 0]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.rows(), &[vec![1, 0, 2], vec![0, 1, 1]]);
    }

    #[test]
    fn annihilator_and_intersection() {
        let p = 5;
        let u = Subspace::span(p, 4, [vec![1, 2, 0, 0], vec![0, 0, 1, 3]]);
        let perp = u.annihilator();
        assert_eq!(perp.dim(), 2);
        for a in u.rows() {
            for b in perp.rows() {
                let dot: u32 = a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum();
                assert_eq!(dot % p, 0);
            }
        }
        assert_eq!(perp.annihilator(), u);
        let v = Subspace::span(p, 4, [vec![1, 2, 1, 3], vec![0, 1, 0, 0]]);
        let w = u.intersect(&v);
        assert_eq!(w, Subspace::span(p, 4, [vec![1, 2, 1, 3]]));
        assert_eq!(u.sum(&v).dim() + w.dim(), u.dim() + v.dim());
    }

    #[test]
    fn nilpotent_shift() {
        let shift = Matrix::from_images(2, 3, |j| if j + 1 < 3 { vec![(j + 1, 1)] } else { vec![] });
        assert!(shift.is_nilpotent());
        assert!(!Matrix::identity(2, 3).is_nilpotent());
        assert_eq!(shift.apply(&[1, 0, 0]), vec![0, 1, 0]);
        assert_eq!(shift.block_diag(2).size(), 6);
    }

    #[test]
    fn quotient_coordinates() {
        let w = Subspace::span(2, 3, [vec![1, 1, 0]]);
        assert_eq!(w.quotient_coords(&[1, 1, 0]), vec![0, 0]);
        assert_eq!(w.quotient_coords(&[0, 1, 0]), vec![1, 0]);
        assert_eq!(nullspace(2, 2, &[vec![1, 1]]), vec![vec![1, 1]]);
    }
}
