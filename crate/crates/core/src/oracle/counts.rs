use std::collections::BTreeMap;

use rayon::prelude::*;

use super::field::FieldSpec;
use super::linalg::Subspace;
use super::module::{enumerate_submodules, enumerate_with, module_cotype, module_type, EnumOptions, ModuleSpec};
use super::setups::{dvr_module, inert_m1_quotient, saturation_setup};
use super::{Guard, OracleError};
use crate::algebra::Partition;
use crate::zeta::OrderFamily;

/// Number of submodules of each `(type, cotype)` in `M_V(λ)`.
pub fn hall_table(
    lambda: &Partition,
    field: FieldSpec,
    guard: Guard,
) -> Result<BTreeMap<(Partition, Partition), u64>, OracleError> {
    let m = dvr_module(lambda, field)?;
    let subs = enumerate_submodules(&m, guard)?;
    let pairs: Vec<(Partition, Partition)> = subs
        .par_iter()
        .map(|w| Ok((module_type(w, &m, "T")?, module_cotype(w, &m, "T")?)))
        .collect::<Result<_, OracleError>>()?;
    let mut table = BTreeMap::new();
    for key in pairs {
        *table.entry(key).or_insert(0) += 1;
    }
    Ok(table)
}

/// Number of submodules of `M_V(λ)` of type `μ`.
pub fn hall_count_oracle(lambda: &Partition, mu: &Partition, field: FieldSpec, guard: Guard) -> Result<u64, OracleError> {
    let table = hall_table(lambda, field, guard)?;
    Ok(table.iter().filter(|((ty, _), _)| ty == mu).map(|(_, c)| c).sum())
}

/// `μ(W, M)` in the submodule lattice, from `μ(x, x) = 1` and `sum_{x <= z <= y} μ(x, z) = 0`.
pub fn moebius_oracle(m: &ModuleSpec, w: &Subspace, guard: Guard) -> Result<i64, OracleError> {
    let quotient = m.quotient(w)?;
    // canonical order lists smaller dimensions first
    let subs = enumerate_submodules(&quotient, guard)?;
    let mut mu: Vec<i64> = Vec::with_capacity(subs.len());
    for (i, z) in subs.iter().enumerate() {
        let v = if i == 0 {
            1
        } else {
            -(0..i)
                .filter(|&j| subs[j].dim() < z.dim() && z.contains(&subs[j]))
                .map(|j| mu[j])
                .sum::<i64>()
        };
        mu.push(v);
    }
    Ok(*mu.last().expect("the zero submodule is always present"))
}

/// `t`-coefficients of the saturation zeta function: `A`-submodules `W ⊆ B^n` with
/// `B W = B^n`, counted by `log_q [B^n : W]`.
pub fn saturation_zeta_oracle(family: OrderFamily, n: u32, field: FieldSpec, guard: Guard) -> Result<Vec<u64>, OracleError> {
    let setup = saturation_setup(family, n, field)?;
    let m = &setup.module;
    let subs = enumerate_submodules(m, guard)?;
    let mut counts = vec![0u64; m.dim() + 1];
    for w in &subs {
        let closure = setup.saturators.iter().fold(w.clone(), |acc, s| acc.sum(&w.image(s)));
        if closure.dim() == m.dim() {
            counts[m.dim() - w.dim()] += 1;
        }
    }
    trim(&mut counts);
    Ok(counts)
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
}

/// Number of `r`-codimensional `F_q`-subspaces `W ⊆ F_{q^2}^n` with `F_{q^2} W = F_{q^2}^n`.
///
/// Every enumerated `W` is also checked against
/// `dim_l(W + xW) + dim_l(W ∩ xW) = dim_k W`.
pub fn saturating_subspace_count_oracle(field: FieldSpec, n: u32, r: u32, guard: Guard) -> Result<u64, OracleError> {
    if field.deg() != 2 {
        return Err(OracleError::RequiresQuadraticField(field.q()));
    }
    let base = field.prime_field();
    let x = field.generator_matrix().expect("quadratic field").block_diag(n as usize);
    let dim = 2 * n as usize;
    let v = ModuleSpec::new(base, dim, vec![], None)?;
    let subs = enumerate_with(&v, EnumOptions::new(guard).max_colength(r as usize))?;
    let mut count = 0;
    for w in &subs {
        let xw = w.image(&x);
        let closure = w.sum(&xw);
        let interior = w.intersect(&xw);
        if closure.dim() / 2 + interior.dim() / 2 != w.dim() {
            return Err(OracleError::InvariantViolated(format!(
                "closure/interior dimensions fail on a {}-dimensional subspace",
                w.dim()
            )));
        }
        if w.dim() + r as usize == dim && closure.dim() == dim {
            count += 1;
        }
    }
    Ok(count)
}

/// Coefficients of `t^0..t^K` of `ζ_{R^n}^R` for the `m = 1` inert order, counted on
/// `R^n / 𝔪^K R^n` and confirmed against a second count at level `K + 1`.
pub fn quot_zeta_oracle_inert_m1(field: FieldSpec, n: u32, k: u32, guard: Guard) -> Result<Vec<u64>, OracleError> {
    let at = quot_counts(field, n, k, guard)?;
    let again = quot_counts(field, n, k + 1, guard)?;
    if let Some(j) = (0..=k as usize).find(|&j| at[j] != again[j]) {
        return Err(OracleError::TruncationMismatch { level: k, degree: j as u32 });
    }
    Ok(at)
}

fn quot_counts(field: FieldSpec, n: u32, k: u32, guard: Guard) -> Result<Vec<u64>, OracleError> {
    let m = inert_m1_quotient(field, n, k)?;
    let subs = enumerate_with(&m, EnumOptions::new(guard).max_colength(k as usize))?;
    let mut counts = vec![0u64; k as usize + 1];
    for w in subs {
        let j = m.dim() - w.dim();
        if j <= k as usize {
            counts[j] += 1;
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Partition;
    use crate::oracle::module::module_cotype;

    fn g() -> Guard {
        Guard(1_000_000)
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hall_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(hall_count_oracle(&part("1,1"), &part("1"), f2, g()).unwrap(), 3);
        assert_eq!(hall_count_oracle(&part("2,1"), &part("2,1"), f2, g()).unwrap(), 1);
        // (1^r) inside (2^2) at q = 3: [2, r]_3
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(hall_count_oracle(&part("2,2"), &part("1"), f3, g()).unwrap(), 4);
        assert_eq!(hall_count_oracle(&part("2,2"), &part("1,1"), f3, g()).unwrap(), 1);
    }

    #[test]
    fn moebius_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let m = dvr_module(&part("1,1"), f2).unwrap();
        assert_eq!(moebius_oracle(&m, &m.whole(), g()).unwrap(), 1);
        assert_eq!(moebius_oracle(&m, &m.zero_subspace(), g()).unwrap(), 2);
        let chain = dvr_module(&part("2"), f2).unwrap();
        let w = chain.zero_subspace();
        assert_eq!(module_cotype(&w, &chain, "T").unwrap(), part("2"));
        assert_eq!(moebius_oracle(&chain, &w, g()).unwrap(), 0);
    }

    #[test]
    fn saturation_small() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(saturation_zeta_oracle(OrderFamily::inert(1), 1, f2, g()).unwrap(), vec![1, 3]);
        assert_eq!(saturation_zeta_oracle(OrderFamily::inert(1), 0, f2, g()).unwrap(), vec![1]);
    }

    #[test]
    fn subspace_counts() {
        let f4 = FieldSpec::quadratic(2).unwrap();
        assert_eq!(saturating_subspace_count_oracle(f4, 1, 1, g()).unwrap(), 3);
        assert_eq!(saturating_subspace_count_oracle(f4, 2, 0, g()).unwrap(), 1);
        assert_eq!(saturating_subspace_count_oracle(f4, 2, 1, g()).unwrap(), 15);
        assert!(saturating_subspace_count_oracle(FieldSpec::prime(2).unwrap(), 1, 1, g()).is_err());
    }

    #[test]
    fn quot_prefixes() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(quot_zeta_oracle_inert_m1(f2, 1, 2, g()).unwrap(), vec![1, 1, 3]);
        assert_eq!(quot_zeta_oracle_inert_m1(f2, 0, 2, g()).unwrap(), vec![1, 0, 0]);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(quot_zeta_oracle_inert_m1(f3, 1, 2, g()).unwrap(), vec![1, 1, 4]);
    }
}
