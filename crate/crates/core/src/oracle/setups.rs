//! Concrete finite modules: DVR quotients, the `B^n` of each order family, and the
//! truncated free module of the `m = 1` inert order.

use super::field::FieldSpec;
use super::linalg::Matrix;
use super::module::ModuleSpec;
use super::OracleError;
use crate::algebra::Partition;
use crate::zeta::{OrderFamily, OrderKind};

fn direct_sum(p: u32, blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(Matrix::size).sum();
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for b in blocks {
        offsets.push(acc);
        acc += b.size();
    }
    Matrix::from_images(p, n, |j| {
        let blk = offsets.iter().rposition(|&o| o <= j).expect("offset 0 exists");
        let (b, off) = (&blocks[blk], offsets[blk]);
        (0..b.size())
            .filter(|&i| b.get(i, j - off) != 0)
            .map(|i| (off + i, b.get(i, j - off) as i64))
            .collect()
    })
}

/// `T` on `F[T]/T^k`, with basis `1, T, ..., T^{k-1}`.
fn shift(p: u32, k: usize, by: usize) -> Matrix {
    Matrix::from_images(p, k, |j| if j + by < k { vec![(j + by, 1)] } else { vec![] })
}

/// `M_V(λ) = ⊕ V/T^{λ_i}` over `V = F_q[[T]]`, generator `"T"`. Over `F_{p^2}` the basis
/// of each summand is `T^i, T^i x` interleaved.
pub fn dvr_module(lambda: &Partition, field: FieldSpec) -> Result<ModuleSpec, OracleError> {
    let p = field.p();
    let deg = field.deg() as usize;
    let blocks: Vec<Matrix> = lambda.parts().iter().map(|&k| shift(p, deg * k as usize, deg)).collect();
    let t = direct_sum(p, &blocks);
    let dim = t.size();
    let scalar = field.generator_matrix().map(|x| x.block_diag(dim / 2));
    ModuleSpec::new(field, dim, vec![("T".into(), t)], scalar)
}

/// `B^n` as a module over `A ⊆ B`, with the maps whose images generate `B W` from `W`.
#[derive(Clone, Debug)]
pub struct SaturationSetup {
    pub module: ModuleSpec,
    /// `B W = W + sum_i s_i(W)`.
    pub saturators: Vec<Matrix>,
    /// Label of the generator of `A`.
    pub generator: String,
}

/// - Ramified: `A = F_q[u^2]` acting on `B = F_q[u]/(u^{2m})`; `B = A + uA`.
/// - Split: the diagonal `F_q[u]` in `B = (F_q[u]/(u^m))^2`; `B = A + e_1 A`.
/// - Inert: `A = F_q[u]` inside `B = F_{q^2}[u]/(u^m)`; `B = A + xA`.
pub fn saturation_setup(family: OrderFamily, n: u32, field: FieldSpec) -> Result<SaturationSetup, OracleError> {
    let p = field.require_prime()?;
    let m = family.m as usize;
    let n = n as usize;
    let (a_gen, label, sat) = match family.kind {
        OrderKind::Ramified => {
            let u = shift(p, 2 * m, 1);
            (u.mul(&u), "u^2", u)
        }
        OrderKind::Split => {
            let u = shift(p, m, 1);
            let both = direct_sum(p, &[u.clone(), u]);
            let proj = direct_sum(p, &[Matrix::identity(p, m), Matrix::zero(p, m)]);
            (both, "u", proj)
        }
        OrderKind::Inert => {
            let ext = field.extension()?;
            let x = ext.generator_matrix().expect("quadratic field").block_diag(m);
            (shift(p, 2 * m, 2), "u", x)
        }
    };
    let module = ModuleSpec::new(field, a_gen.size() * n, vec![(label.into(), a_gen.block_diag(n))], None)?;
    Ok(SaturationSetup { module, saturators: vec![sat.block_diag(n)], generator: label.into() })
}

/// `R^n / 𝔪^K R^n` for `R = F_q[[T]] + T F_{q^2}[[T]]`, `𝔪 = T F_{q^2}[[T]]`, acted on by
/// `T` and `T x`. Per copy the basis is `1, T, T x, T^2, T^2 x, ..., T^{K-1} x`.
pub fn inert_m1_quotient(field: FieldSpec, n: u32, k: u32) -> Result<ModuleSpec, OracleError> {
    let p = field.require_prime()?;
    let (a, b) = field.extension()?.modulus().expect("quadratic field");
    let k = k.max(1) as usize;
    let dim = 2 * k - 1;
    // index of T^j (x = false) or T^j x (x = true), j >= 1
    let idx = |j: usize, x: bool| if j >= k { None } else { Some(2 * j - 1 + x as usize) };
    let t = Matrix::from_images(p, dim, |col| {
        let (j, x) = if col == 0 { (0, false) } else { ((col + 1) / 2, col % 2 == 0) };
        idx(j + 1, x).map(|i| vec![(i, 1)]).unwrap_or_default()
    });
    let tx = Matrix::from_images(p, dim, |col| {
        if col == 0 {
            return idx(1, true).map(|i| vec![(i, 1)]).unwrap_or_default();
        }
        let j = (col + 1) / 2;
        if col % 2 == 1 {
            idx(j + 1, true).map(|i| vec![(i, 1)]).unwrap_or_default()
        } else {
            // T^j x * T x = T^{j+1} x^2 = -b T^{j+1} - a T^{j+1} x
            match (idx(j + 1, false), idx(j + 1, true)) {
                (Some(i0), Some(i1)) => vec![(i0, -(b as i64)), (i1, -(a as i64))],
                _ => vec![],
            }
        }
    });
    let n = n as usize;
    ModuleSpec::new(
        field,
        dim * n,
        vec![("T".into(), t.block_diag(n)), ("Tx".into(), tx.block_diag(n))],
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::module::module_type;

    #[test]
    fn dvr_module_types() {
        for f in [FieldSpec::prime(2).unwrap(), FieldSpec::quadratic(2).unwrap()] {
            let lam: Partition = "2,1".parse().unwrap();
            let m = dvr_module(&lam, f).unwrap();
            assert_eq!(m.dim(), 3 * f.deg() as usize);
            assert_eq!(module_type(&m.whole(), &m, "T").unwrap(), lam);
        }
    }

    #[test]
    fn setups_have_expected_shapes() {
        let f = FieldSpec::prime(3).unwrap();
        for fam in [OrderFamily::ramified(2), OrderFamily::split(2), OrderFamily::inert(2)] {
            let s = saturation_setup(fam, 2, f).unwrap();
            assert_eq!(s.module.dim(), 8, "{fam}");
            let whole = s.module.whole();
            assert_eq!(module_type(&whole, &s.module, &s.generator).unwrap().to_string(), "(2,2,2,2)");
        }
        assert!(saturation_setup(OrderFamily::inert(1), 1, FieldSpec::quadratic(2).unwrap()).is_err());
    }

    #[test]
    fn quotient_ring_ops() {
        let f = FieldSpec::prime(2).unwrap();
        let m = inert_m1_quotient(f, 1, 3).unwrap();
        assert_eq!(m.dim(), 5);
        let rad = m.radical(&m.whole());
        assert_eq!(rad.dim(), 4);
        assert_eq!(m.radical(&rad).dim(), 2);
    }
}
