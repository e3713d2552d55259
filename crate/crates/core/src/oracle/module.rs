use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use super::linalg::{nullspace, Matrix, Subspace};
use super::{Guard, OracleError};
use crate::algebra::Partition;

/// A finite module over a local ring with residue field `field`, presented as an
/// `F_p`-vector space with commuting nilpotent generator actions. Over `F_{p^2}` the
/// field generator acts through `scalar`.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    field: FieldSpec,
    dim: usize,
    ops: Vec<Matrix>,
    labels: Vec<String>,
    scalar: Option<Matrix>,
}

impl ModuleSpec {
    pub fn new(
        field: FieldSpec,
        dim: usize,
        ops: Vec<(String, Matrix)>,
        scalar: Option<Matrix>,
    ) -> Result<Self, OracleError> {
        let p = field.p();
        let (labels, ops): (Vec<String>, Vec<Matrix>) = ops.into_iter().unzip();
        for (label, op) in labels.iter().zip(&ops) {
            if op.size() != dim || op.p() != p {
                return Err(OracleError::ShapeMismatch(label.clone()));
            }
            if !op.is_nilpotent() {
                return Err(OracleError::NotNilpotent(label.clone()));
            }
        }
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                if ops[i].mul(&ops[j]) != ops[j].mul(&ops[i]) {
                    return Err(OracleError::NonCommuting(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        match (field.modulus(), &scalar) {
            (None, None) => {}
            (Some((a, b)), Some(x)) => {
                if x.size() != dim || x.p() != p {
                    return Err(OracleError::ShapeMismatch("scalar".into()));
                }
                let poly = x.mul(x).add_scaled(a as i64, x).add_scaled(b as i64, &Matrix::identity(p, dim));
                if !poly.is_zero() {
                    return Err(OracleError::ScalarMismatch);
                }
                for (label, op) in labels.iter().zip(&ops) {
                    if op.mul(x) != x.mul(op) {
                        return Err(OracleError::NonCommuting(label.clone(), "scalar".into()));
                    }
                }
            }
            _ => return Err(OracleError::ScalarMismatch),
        }
        Ok(ModuleSpec { field, dim, ops, labels, scalar })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[Matrix] {
        &self.ops
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn scalar(&self) -> Option<&Matrix> {
        self.scalar.as_ref()
    }

    pub fn op(&self, label: &str) -> Result<&Matrix, OracleError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.ops[i])
            .ok_or_else(|| OracleError::UnknownGenerator(label.to_string()))
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field.p(), self.dim)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field.p(), self.dim)
    }

    pub fn is_submodule(&self, w: &Subspace) -> bool {
        w.ambient() == self.dim
            && self.ops.iter().chain(&self.scalar).all(|op| w.is_invariant(op))
    }

    /// `M / W` with the induced actions, in the coordinates of [`Subspace::quotient_coords`].
    pub fn quotient(&self, w: &Subspace) -> Result<ModuleSpec, OracleError> {
        if !self.is_submodule(w) {
            return Err(OracleError::NotInvariant);
        }
        let p = self.field.p();
        let free = w.free_columns();
        let induce = |op: &Matrix| {
            Matrix::from_images(p, free.len(), |j| {
                let mut e = vec![0u8; self.dim];
                e[free[j]] = 1;
                w.quotient_coords(&op.apply(&e))
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .map(|(i, c)| (i, c as i64))
                    .collect()
            })
        };
        let ops = self.labels.iter().cloned().zip(self.ops.iter().map(&induce)).collect();
        let scalar = self.scalar.as_ref().map(&induce);
        ModuleSpec::new(self.field, free.len(), ops, scalar)
    }

    /// `rad W = sum_i op_i(W)`.
    pub fn radical(&self, w: &Subspace) -> Subspace {
        let p = self.field.p();
        Subspace::span(p, self.dim, self.ops.iter().flat_map(|op| w.rows().iter().map(move |r| op.apply(r))))
    }

    /// All maximal submodules of the submodule `w`.
    pub fn maximal_submodules(&self, w: &Subspace) -> Vec<Subspace> {
        let p = self.field.p();
        let rad = self.radical(w);
        // complement basis of W / rad W in reduced coordinates
        let top = Subspace::span(p, self.dim, w.rows().iter().map(|r| rad.reduce(r)));
        let k = top.dim();
        if k == 0 {
            return Vec::new();
        }
        let coords = |v: &[u8]| -> Vec<u8> {
            let r = rad.reduce(v);
            top.pivots().iter().map(|&c| r[c]).collect()
        };
        // the field generator on W / rad W, as the images of the basis
        let scalar_cols: Option<Vec<Vec<u8>>> =
            self.scalar.as_ref().map(|x| top.rows().iter().map(|r| coords(&x.apply(r))).collect());
        let mut out = BTreeSet::new();
        for f in normalized_vectors(p, k) {
            let mut functionals = vec![f.clone()];
            if let Some(cols) = &scalar_cols {
                // (f o x)_j = f(x w_j)
                let fx = cols
                    .iter()
                    .map(|col| (col.iter().zip(&f).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % p) as u8)
                    .collect();
                functionals.push(fx);
            }
            let kernel = nullspace(p, k, &functionals);
            let lifts = kernel.iter().map(|c| {
                let mut v = vec![0u8; self.dim];
                for (coef, row) in c.iter().zip(top.rows()) {
                    for (d, &s) in v.iter_mut().zip(row) {
                        *d = ((*d as u32 + *coef as u32 * s as u32) % p) as u8;
                    }
                }
                v
            });
            out.insert(Subspace::span(p, self.dim, rad.rows().iter().cloned().chain(lifts)));
        }
        out.into_iter().collect()
    }

    fn residue_deg(&self) -> usize {
        self.field.deg() as usize
    }
}

/// Nonzero vectors of `F_p^k` whose first nonzero entry is 1.
fn normalized_vectors(p: u32, k: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..k).flat_map(move |lead| {
        let tail = k - lead - 1;
        let count = (p as u64).pow(tail as u32);
        (0..count).map(move |mut idx| {
            let mut v = vec![0u8; k];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (idx % p as u64) as u8;
                idx /= p as u64;
            }
            v
        })
    })
}

fn projective_count(p: u32, k: usize) -> u128 {
    ((p as u128).pow(k as u32) - 1) / (p as u128 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Breadth-first descent through maximal submodules, one composition length at a time.
    Layered,
    /// Every row echelon basis of the ambient space, filtered by invariance.
    Echelon,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub guard: Guard,
    pub strategy: Strategy,
    /// Only submodules of colength at most this many composition factors.
    pub max_colength: Option<usize>,
}

impl EnumOptions {
    pub fn new(guard: Guard) -> Self {
        EnumOptions { guard, strategy: Strategy::Layered, max_colength: None }
    }

    pub fn strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    pub fn max_colength(mut self, k: usize) -> Self {
        self.max_colength = Some(k);
        self
    }
}

/// Every submodule of `m`, once each, in canonical order.
pub fn enumerate_submodules(m: &ModuleSpec, guard: Guard) -> Result<Vec<Subspace>, OracleError> {
    enumerate_with(m, EnumOptions::new(guard))
}

pub fn enumerate_with(m: &ModuleSpec, opts: EnumOptions) -> Result<Vec<Subspace>, OracleError> {
    let mut out = match opts.strategy {
        Strategy::Layered => layered(m, &opts)?,
        Strategy::Echelon => echelon(m, &opts)?,
    };
    out.sort();
    Ok(out)
}

fn layered(m: &ModuleSpec, opts: &EnumOptions) -> Result<Vec<Subspace>, OracleError> {
    let p = m.field.p();
    let mut level = vec![m.whole()];
    let mut all = Vec::new();
    let mut examined: u128 = 0;
    let mut depth = 0;
    while !level.is_empty() {
        if opts.max_colength.is_some_and(|k| depth >= k) {
            all.extend(level);
            break;
        }
        let estimate: u128 = level
            .iter()
            .map(|w| projective_count(p, m.radical(w).dim().abs_diff(w.dim())))
            .sum();
        examined += estimate;
        if examined > opts.guard.0 as u128 {
            return Err(OracleError::GuardExceeded { estimate: examined, guard: opts.guard.0 });
        }
        let mut next: Vec<Subspace> = level.par_iter().flat_map_iter(|w| m.maximal_submodules(w)).collect();
        next.par_sort_unstable();
        next.dedup();
        all.extend(level);
        level = next;
        depth += 1;
    }
    Ok(all)
}

/// Gaussian binomial `[d, k]_p` as an integer.
fn gaussian(d: usize, k: usize, p: u32) -> u128 {
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(p.pow((d - i) as u32) - 1);
        den = den.saturating_mul(p.pow((i + 1) as u32) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..d {
            if d - c < k - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, &mut Vec::new(), &mut out);
    out
}

fn echelon(m: &ModuleSpec, opts: &EnumOptions) -> Result<Vec<Subspace>, OracleError> {
    let p = m.field.p();
    let d = m.dim;
    let min_dim = opts.max_colength.map_or(0, |k| d.saturating_sub(k * m.residue_deg()));
    let estimate = (min_dim..=d).fold(0u128, |acc, k| acc.saturating_add(gaussian(d, k, p)));
    if estimate > opts.guard.0 as u128 {
        return Err(OracleError::GuardExceeded { estimate, guard: opts.guard.0 });
    }
    let patterns: Vec<Vec<usize>> = (min_dim..=d).flat_map(|k| combinations(d, k)).collect();
    let found = patterns
        .par_iter()
        .flat_map_iter(|pivots| {
            // free slots: row i, columns right of its pivot that are not pivots
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| ((c + 1)..d).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
                .collect();
            let total = (p as u64).pow(slots.len() as u32);
            (0..total).filter_map(move |mut idx| {
                let mut rows: Vec<Vec<u8>> = pivots
                    .iter()
                    .map(|&c| {
                        let mut r = vec![0u8; d];
                        r[c] = 1;
                        r
                    })
                    .collect();
                for &(i, j) in &slots {
                    rows[i][j] = (idx % p as u64) as u8;
                    idx /= p as u64;
                }
                let w = Subspace::from_rref_unchecked(p, d, rows, pivots.clone());
                m.is_submodule(&w).then_some(w)
            })
        })
        .collect();
    Ok(found)
}

/// `F_q`-dimensions `dim u^i W`, `i = 0, 1, ...` until zero.
fn power_dims(w: &Subspace, u: &Matrix, deg: usize) -> Vec<usize> {
    let mut dims = vec![w.dim() / deg];
    let mut cur = w.clone();
    while cur.dim() > 0 {
        cur = cur.image(u);
        dims.push(cur.dim() / deg);
    }
    dims
}

fn from_conjugate_drops(dims: &[usize]) -> Partition {
    let conj: Vec<u32> = dims.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
    Partition::from_unsorted(conj).conjugate()
}

/// The type of the submodule `w` over the DVR quotient generated by `generator`.
pub fn module_type(w: &Subspace, m: &ModuleSpec, generator: &str) -> Result<Partition, OracleError> {
    let u = m.op(generator)?;
    if !m.is_submodule(w) {
        return Err(OracleError::NotInvariant);
    }
    Ok(from_conjugate_drops(&power_dims(w, u, m.residue_deg())))
}

/// The type of `M / w`.
pub fn module_cotype(w: &Subspace, m: &ModuleSpec, generator: &str) -> Result<Partition, OracleError> {
    let u = m.op(generator)?;
    if !m.is_submodule(w) {
        return Err(OracleError::NotInvariant);
    }
    let deg = m.residue_deg();
    let mut dims = Vec::new();
    let mut pow = m.whole();
    loop {
        let d = pow.sum(w).dim() - w.dim();
        dims.push(d / deg);
        if d == 0 {
            break;
        }
        pow = pow.image(u);
    }
    Ok(from_conjugate_drops(&dims))
}
