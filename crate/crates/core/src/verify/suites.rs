use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{counts_at, is_nonnegative, stabilization_check, Check, CheckError, Point, Report, StabilityMode, Value, Witness};
use crate::algebra::{poch, AlgebraError, Monomial, Partition, PochFactor, QTFraction, QTLaurent, Var};
use crate::oracle::{
    dvr_module, enumerate_submodules, hall_table, module_cotype, module_type, moebius_oracle,
    quot_zeta_oracle_inert_m1, saturating_subspace_count_oracle, saturation_zeta_oracle, FieldSpec, Guard,
    OracleError,
};
use crate::qseries::{ag_multisum, br_multisum, g_skew, hall_g, infinite_sum, product_side, singlesum, SumFamily, TSign};
use crate::zeta::{
    closed_form_coh, coh_finitized, inert_m1_count, nakayama_compose, normalize_nuhat, nuhat_zero,
    reflection_check, rtilde_zeta, saturation_zeta, solomon_zeta, CountForm, NuhatForm, OrderFamily, Status,
};

/// Every formula-level operation of `qseries` and `zeta`; the suites together must touch all of them.
pub const FORMULA_OPS: &[&str] = &[
    "g_skew",
    "hall_g",
    "ag_multisum",
    "br_multisum",
    "singlesum",
    "infinite_sum",
    "product_side",
    "saturation_zeta",
    "rtilde_zeta",
    "solomon_zeta",
    "nakayama_compose",
    "coh_finitized",
    "closed_form_coh",
    "nuhat_zero",
    "normalize_nuhat",
    "reflection_check",
    "inert_m1_count",
];

/// Parameter bounds for a suite run. Each suite reads only the fields it needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranges {
    pub m_max: u32,
    pub n_max: u32,
    /// Truncation order of `q`- or `t`-series.
    pub order: usize,
    /// Numeric field sizes for oracle and evaluation checks.
    pub q: Vec<u64>,
    /// `t`-degree bound of the Quot oracle.
    pub k: u32,
    pub guard: Guard,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges { m_max: 3, n_max: 5, order: 50, q: vec![2, 3], k: 3, guard: Guard::from_env() }
    }
}

fn ranges(m_max: u32, n_max: u32) -> Ranges {
    Ranges { m_max, n_max, ..Ranges::default() }
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    /// Formula operations exercised, by name.
    pub ops: &'static [&'static str],
    defaults: fn() -> Ranges,
    build: fn(&Ranges) -> Vec<Check>,
}

impl Suite {
    pub fn defaults(&self) -> Ranges {
        (self.defaults)()
    }

    pub fn checks(&self, r: &Ranges) -> Vec<Check> {
        (self.build)(r)
    }
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "split-s0",
        description: "normalized split value at s = 0 is 1",
        ops: &["nuhat_zero"],
        defaults: || ranges(3, 5),
        build: split_s0,
    },
    Suite {
        name: "ramified-s0",
        description: "normalized ramified value at s = 0 equals the AG single sum in q^-1",
        ops: &["nuhat_zero", "singlesum"],
        defaults: || ranges(3, 5),
        build: ramified_s0,
    },
    Suite {
        name: "conj-s0",
        description: "normalized inert value at s = 0 equals (-q^-1;q^-1)_n times the Br single sum in q^-1",
        ops: &["nuhat_zero", "singlesum"],
        defaults: || ranges(3, 5),
        build: conj_s0,
    },
    Suite {
        name: "prop42",
        description: "the two s = 0 evaluation formulas agree",
        ops: &["nuhat_zero", "g_skew"],
        defaults: || ranges(3, 4),
        build: prop42,
    },
    Suite {
        name: "conj-m1",
        description: "m = 1 inert double sum equals the t-deformed Bressoud sum",
        ops: &["coh_finitized", "closed_form_coh", "br_multisum"],
        defaults: || ranges(1, 6),
        build: conj_m1,
    },
    Suite {
        name: "corollary-rr",
        description: "Andrews-Gordon and Bressoud sum sides equal product sides as q-series",
        ops: &["infinite_sum", "product_side"],
        defaults: || ranges(3, 0),
        build: corollary_rr,
    },
    Suite {
        name: "singlesum",
        description: "multisums at t = 1 equal the single-sum forms",
        ops: &["ag_multisum", "br_multisum", "singlesum"],
        defaults: || ranges(3, 6),
        build: singlesum_suite,
    },
    Suite {
        name: "br-minus-one",
        description: "Br_n(q, -1) (q;q)_n = 1",
        ops: &["br_multisum"],
        defaults: || ranges(3, 8),
        build: br_minus_one,
    },
    Suite {
        name: "tlrn",
        description: "normalization zeta equals the Solomon factor times the saturation zeta",
        ops: &["rtilde_zeta", "solomon_zeta", "saturation_zeta", "hall_g"],
        defaults: || ranges(3, 4),
        build: tlrn,
    },
    Suite {
        name: "nakayama",
        description: "Nakayama composition of normalization zetas gives the m = 1 inert double sum",
        ops: &["nakayama_compose", "rtilde_zeta", "coh_finitized"],
        defaults: || ranges(1, 4),
        build: nakayama,
    },
    Suite {
        name: "normalize",
        description: "normalized closed forms at t = 1 match the s = 0 evaluations",
        ops: &["normalize_nuhat", "closed_form_coh", "coh_finitized", "nuhat_zero"],
        defaults: || ranges(2, 4),
        build: normalize,
    },
    Suite {
        name: "reflection",
        description: "functional equation of the normalized zetas with D = q^m",
        ops: &["reflection_check", "normalize_nuhat", "coh_finitized", "closed_form_coh"],
        defaults: || ranges(2, 4),
        build: reflection,
    },
    Suite {
        name: "stabilize",
        description: "t-coefficients of the m = 1 inert finitized zeta converge q-adically in n",
        ops: &["coh_finitized"],
        defaults: || ranges(1, 6),
        build: stabilize,
    },
    Suite {
        name: "finitized",
        description: "de-shifted zeta coefficients at numeric q are nonnegative integers",
        ops: &["coh_finitized", "closed_form_coh", "saturation_zeta", "rtilde_zeta"],
        defaults: || Ranges { order: 8, ..ranges(2, 3) },
        build: finitized,
    },
    Suite {
        name: "prop51",
        description: "saturating subspace counts: closed form, alternating form, enumeration",
        ops: &["inert_m1_count"],
        defaults: || ranges(1, 6),
        build: prop51,
    },
    Suite {
        name: "hall",
        description: "Hall polynomials, Moebius values and rectangular complements against enumeration",
        ops: &["hall_g", "g_skew"],
        defaults: || ranges(3, 3),
        build: hall,
    },
    Suite {
        name: "sat-oracle",
        description: "saturation zeta against enumeration of saturating submodules",
        ops: &["saturation_zeta"],
        defaults: || ranges(2, 2),
        build: sat_oracle,
    },
    Suite {
        name: "quot-oracle",
        description: "de-shifted m = 1 inert zeta against enumeration of finite-index submodules",
        ops: &["coh_finitized"],
        defaults: || ranges(1, 1),
        build: quot_oracle,
    },
    Suite {
        name: "oracle-all",
        description: "every oracle-versus-formula pairing at its default ranges",
        ops: &["hall_g", "g_skew", "inert_m1_count", "saturation_zeta", "coh_finitized"],
        defaults: Ranges::default,
        build: oracle_all,
    },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs every check of `suite` in parallel. The report is sorted, so it does not depend
/// on the number of workers.
pub fn run_suite(suite: &Suite, ranges: &Ranges, timing: bool) -> Report {
    let start = Instant::now();
    let checks = suite.checks(ranges);
    let results = checks.par_iter().map(Check::run).collect();
    let wall = timing.then(|| start.elapsed().as_millis() as u64);
    Report::new(suite.name, results, wall)
}

fn fam(f: OrderFamily) -> Point {
    Point::default().family(f.kind).m(f.m)
}

fn families(m_max: u32) -> Vec<OrderFamily> {
    (1..=m_max).flat_map(|m| [OrderFamily::ramified(m), OrderFamily::split(m), OrderFamily::inert(m)]).collect()
}

/// `t -> q^n t`: from `ζ_{R^n}(s + n)` back to `ζ_{R^n}(s)`.
fn deshift(z: &QTFraction, n: u32) -> Result<QTFraction, AlgebraError> {
    z.substitute(Var::T, Monomial::new(1, n as i64, 1))
}

/// `t`-coefficients up to `order` at numeric `q`. A non-integer coefficient becomes a witness.
fn series_at(z: &QTFraction, order: usize, q: u64) -> Result<Result<Vec<BigInt>, Witness>, CheckError> {
    let ts = z.to_tseries(order)?;
    let mut out = Vec::with_capacity(order + 1);
    for (j, c) in ts.coeffs().iter().enumerate() {
        let v = c.eval_q(q as i64).remove(&0).unwrap_or_default();
        if !v.is_integer() {
            return Ok(Err(Witness { e_q: 0, e_t: j as i64, coeff: v.to_string() }));
        }
        out.push(v.to_integer());
    }
    Ok(Ok(out))
}

fn prime_field(q: u64) -> Result<FieldSpec, CheckError> {
    Ok(FieldSpec::prime(q as u32)?)
}

fn split_s0(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=r.m_max {
        for n in 0..=r.n_max {
            let f = OrderFamily::split(m);
            out.push(Check::identity(
                "nuhat0-split",
                fam(f).n(n),
                Status::Theorem,
                move || Ok(nuhat_zero(f, n, NuhatForm::Theorem).into()),
                || Ok(QTLaurent::one().into()),
            ));
        }
    }
    out
}

fn ramified_s0(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=r.m_max {
        for n in 0..=r.n_max {
            let f = OrderFamily::ramified(m);
            out.push(Check::identity(
                "nuhat0-ramified",
                fam(f).n(n),
                Status::Theorem,
                move || Ok(nuhat_zero(f, n, NuhatForm::Theorem).into()),
                move || Ok(singlesum(SumFamily::ag(m), n).invert_q().into()),
            ));
        }
    }
    out
}

fn conj_s0(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=r.m_max {
        for n in 0..=r.n_max {
            let f = OrderFamily::inert(m);
            out.push(Check::identity(
                "nuhat0-inert",
                fam(f).n(n),
                Status::Conjectural,
                move || Ok(nuhat_zero(f, n, NuhatForm::Theorem).into()),
                move || {
                    let lift = poch(Monomial::new(-1, -1, 0), -1, n as i64)?;
                    Ok(singlesum(SumFamily::br(m), n).invert_q().mul_laurent(&lift).into())
                },
            ));
        }
    }
    out
}

fn prop42(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for f in families(r.m_max) {
        for n in 0..=r.n_max {
            out.push(Check::identity(
                "nuhat0-forms",
                fam(f).n(n),
                Status::Theorem,
                move || Ok(nuhat_zero(f, n, NuhatForm::Theorem).into()),
                move || Ok(nuhat_zero(f, n, NuhatForm::Alternative).into()),
            ));
        }
    }
    out
}

fn conj_m1(r: &Ranges) -> Vec<Check> {
    let f = OrderFamily::inert(1);
    (0..=r.n_max)
        .map(|n| {
            Check::identity(
                "coh-inert-m1",
                fam(f).n(n),
                closed_form_coh(f, 0).status,
                move || Ok(coh_finitized(f, n)?.into()),
                move || Ok(closed_form_coh(f, n).value.into()),
            )
        })
        .collect()
}

fn corollary_rr(r: &Ranges) -> Vec<Check> {
    let order = r.order;
    let mut out = Vec::new();
    for m in 1..=r.m_max {
        for family in [SumFamily::ag(m), SumFamily::br(m)] {
            out.push(Check::predicate(
                "sum-product",
                Point::default().family(family).m(m).label(format!("order={order}")),
                Status::Theorem,
                move || {
                    let (a, b) = (infinite_sum(family, order), product_side(family, order));
                    Ok(a.coeffs()
                        .iter()
                        .zip(b.coeffs())
                        .enumerate()
                        .find(|(_, (x, y))| x != y)
                        .map(|(j, (x, y))| Witness::new(j as i64, 0, &(x - y))))
                },
            ));
        }
    }
    out
}

fn singlesum_suite(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=r.m_max {
        for n in 0..=r.n_max {
            let family = SumFamily::ag(m);
            out.push(Check::identity(
                "multisum-at-one",
                Point::default().family(family).m(m).n(n),
                Status::Theorem,
                move || Ok(ag_multisum(m, n).at_t_one().into()),
                move || Ok(singlesum(family, n).into()),
            ));
            let family = SumFamily::br(m);
            out.push(Check::identity(
                "multisum-at-one",
                Point::default().family(family).m(m).n(n),
                Status::Theorem,
                move || Ok(br_multisum(m, n, TSign::Plus).at_t_one()?.into()),
                move || Ok(singlesum(family, n).into()),
            ));
        }
    }
    out
}

fn br_minus_one(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=r.m_max {
        for n in 0..=r.n_max {
            out.push(Check::identity(
                "br-at-minus-one",
                Point::default().family(SumFamily::br(m)).m(m).n(n),
                Status::Theorem,
                move || Ok(br_multisum(m, n, TSign::Minus).at_t_one()?.into()),
                move || Ok(QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::q_pow(1), 1, n)]).into()),
            ));
        }
    }
    out
}

fn tlrn(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for f in families(r.m_max) {
        for n in 0..=r.n_max {
            out.push(Check::identity(
                "rtilde-factorization",
                fam(f).n(n),
                Status::Theorem,
                move || Ok(rtilde_zeta(f, n).into()),
                move || Ok(solomon_zeta(&f.residue_exponents(), n).mul_laurent(&saturation_zeta(f, n)).into()),
            ));
        }
    }
    out
}

fn nakayama(r: &Ranges) -> Vec<Check> {
    let f = OrderFamily::inert(1);
    let mut out: Vec<Check> = (0..=r.n_max)
        .map(|n| {
            Check::identity(
                "nakayama-inert-m1",
                fam(f).n(n),
                Status::Theorem,
                move || {
                    let subs: BTreeMap<usize, QTFraction> =
                        (0..=n).map(|r| (r as usize, rtilde_zeta(f, r))).collect();
                    let z = nakayama_compose(&subs, n as usize)?;
                    Ok(z.substitute(Var::T, Monomial::new(1, -(n as i64), 1))?.into())
                },
                move || Ok(coh_finitized(f, n)?.into()),
            )
        })
        .collect();
    out.push(Check::identity(
        "nakayama-units",
        Point::default().n(1),
        Status::Theorem,
        || {
            let subs: BTreeMap<usize, QTFraction> = (0..=1).map(|r| (r, QTFraction::one())).collect();
            Ok(nakayama_compose(&subs, 1)?.into())
        },
        || Ok((QTLaurent::one() + QTLaurent::t_pow(1)).into()),
    ));
    out
}

fn normalize(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for f in families(r.m_max) {
        for n in 0..=r.n_max {
            let closed = closed_form_coh(f, 0).status;
            out.push(Check::identity(
                "normalized-closed-at-one",
                fam(f).n(n),
                closed,
                move || Ok(normalize_nuhat(&closed_form_coh(f, n).value, f, n)?.at_t_one().into()),
                move || Ok(nuhat_zero(f, n, NuhatForm::Theorem).into()),
            ));
        }
    }
    let f = OrderFamily::inert(1);
    for n in 0..=r.n_max {
        out.push(Check::identity(
            "normalized-double-sum-at-one",
            fam(f).n(n),
            Status::Theorem,
            move || Ok(normalize_nuhat(&coh_finitized(f, n)?, f, n)?.at_t_one().into()),
            move || Ok(nuhat_zero(f, n, NuhatForm::Theorem).into()),
        ));
    }
    out
}

fn reflection_witness(nu: &QTLaurent, n: u32, d: i64) -> Option<Witness> {
    reflection_check(nu, n, d).witness.map(|(e, c)| Witness::new(e.q, e.t, &c))
}

fn reflection(r: &Ranges) -> Vec<Check> {
    let f = OrderFamily::inert(1);
    let mut out: Vec<Check> = (0..=r.n_max)
        .map(|n| {
            Check::predicate("reflection-inert-m1", fam(f).n(n).label("d=1"), Status::Theorem, move || {
                Ok(reflection_witness(&normalize_nuhat(&coh_finitized(f, n)?, f, n)?, n, f.d()))
            })
        })
        .collect();
    for f in families(r.m_max) {
        for n in 0..=r.n_max {
            let label = format!("d={}", f.d());
            out.push(Check::predicate("reflection-closed", fam(f).n(n).label(label), closed_form_coh(f, 0).status, move || {
                Ok(reflection_witness(&normalize_nuhat(&closed_form_coh(f, n).value, f, n)?, n, f.d()))
            }));
        }
    }
    out
}

fn stabilize(r: &Ranges) -> Vec<Check> {
    let f = OrderFamily::inert(1);
    (0..=r.n_max)
        .map(|n| {
            Check::predicate("stabilize-inert-m1", fam(f).n(n), Status::Theorem, move || {
                let series: BTreeMap<u32, QTFraction> =
                    [n, n + 1].into_iter().map(|k| Ok((k, coh_finitized(f, k)?))).collect::<Result<_, CheckError>>()?;
                let points = stabilization_check(&series, |k| k as usize, StabilityMode::QAdic)?;
                Ok(points.into_iter().find_map(|p| p.witness))
            })
        })
        .collect()
}

fn nonnegative_counts(z: &QTFraction, order: usize, q: u64) -> Result<Option<Witness>, CheckError> {
    Ok(match series_at(z, order, q)? {
        Err(w) => Some(w),
        Ok(counts) => counts
            .iter()
            .enumerate()
            .find(|(_, c)| !is_nonnegative(c))
            .map(|(j, c)| Witness::new(0, j as i64, c)),
    })
}

fn finitized(r: &Ranges) -> Vec<Check> {
    let order = r.order;
    let mut out = Vec::new();
    for &q in &r.q {
        for n in 0..=r.n_max {
            let f = OrderFamily::inert(1);
            out.push(Check::predicate("coh-double-sum-counts", fam(f).n(n).q(q), Status::Theorem, move || {
                nonnegative_counts(&deshift(&coh_finitized(f, n)?, n)?, order, q)
            }));
            for f in families(r.m_max) {
                let closed = closed_form_coh(f, 0).status;
                out.push(Check::predicate("coh-closed-counts", fam(f).n(n).q(q), closed, move || {
                    nonnegative_counts(&deshift(&closed_form_coh(f, n).value, n)?, order, q)
                }));
                out.push(Check::predicate("rtilde-counts", fam(f).n(n).q(q), Status::Theorem, move || {
                    nonnegative_counts(&rtilde_zeta(f, n), order, q)
                }));
                out.push(Check::predicate("saturation-counts", fam(f).n(n).q(q), Status::Theorem, move || {
                    nonnegative_counts(&QTFraction::from_laurent(saturation_zeta(f, n)), order, q)
                }));
            }
        }
    }
    out
}

fn prop51_formulas(r: &Ranges) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=r.n_max {
        for k in 0..=2 * n as i64 {
            out.push(Check::identity(
                "count-forms",
                Point::default().n(n).r(k),
                Status::Theorem,
                move || Ok(inert_m1_count(n, k, CountForm::Closed).into()),
                move || Ok(inert_m1_count(n, k, CountForm::Alternating).into()),
            ));
        }
    }
    out
}

fn prop51_oracle(r: &Ranges, n_max: u32) -> Vec<Check> {
    let guard = r.guard;
    let mut out = Vec::new();
    for &q in &r.q {
        for n in 0..=n_max {
            for k in 0..=2 * n {
                out.push(Check::identity(
                    "count-oracle",
                    Point::default().n(n).q(q).r(k as i64),
                    Status::Theorem,
                    move || {
                        let field = FieldSpec::quadratic(q as u32)?;
                        Ok(vec![saturating_subspace_count_oracle(field, n, k, guard)?].into())
                    },
                    move || Ok(Value::Counts(counts_at(&inert_m1_count(n, k as i64, CountForm::Closed), q as i64)?)),
                ));
            }
        }
    }
    out
}

fn prop51(r: &Ranges) -> Vec<Check> {
    let mut out = prop51_formulas(r);
    out.extend(prop51_oracle(r, r.n_max.min(2)));
    out
}

type HallTable = BTreeMap<(Partition, Partition), u64>;

fn hall_counts(r: &Ranges) -> Vec<Check> {
    let guard = r.guard;
    let mut out = Vec::new();
    for &q in &r.q {
        for lambda in Partition::rectangle(3, 3).sub_partitions() {
            // one enumeration of M_V(λ) shared by all μ
            let table: Arc<OnceLock<Result<HallTable, OracleError>>> = Arc::new(OnceLock::new());
            for mu in lambda.sub_partitions() {
                let (lambda, mu, table) = (lambda.clone(), mu.clone(), Arc::clone(&table));
                let lhs_mu = mu.clone();
                let lhs_lambda = lambda.clone();
                out.push(Check::identity(
                    "hall-count",
                    Point::default().q(q).label(format!("lambda={lambda} mu={mu}")),
                    Status::Theorem,
                    move || {
                        let t = table
                            .get_or_init(|| hall_table(&lhs_lambda, prime_field(q).map_err(to_oracle)?, guard))
                            .as_ref()
                            .map_err(|e| CheckError::Oracle(e.clone()))?;
                        let c: u64 = t.iter().filter(|((ty, _), _)| *ty == lhs_mu).map(|(_, c)| c).sum();
                        Ok(vec![c].into())
                    },
                    move || Ok(Value::Counts(counts_at(&hall_g(&lambda, &mu), q as i64)?)),
                ));
            }
        }
    }
    out
}

fn to_oracle(e: CheckError) -> OracleError {
    match e {
        CheckError::Oracle(o) => o,
        other => OracleError::InvariantViolated(other.to_string()),
    }
}

fn hall_formulas() -> Vec<Check> {
    let mut out = vec![
        Check::identity(
            "g-skew-line",
            Point::default().label("r=(2) s=(1)"),
            Status::Theorem,
            || Ok(g_skew(&[2], &[1])?.into()),
            || Ok((QTLaurent::q_pow(1) + QTLaurent::one()).into()),
        ),
        Check::identity(
            "g-skew-vanishing",
            Point::default().label("r=(1,2) s=(1,1)"),
            Status::Theorem,
            || Ok(g_skew(&[1, 2], &[1, 1])?.into()),
            || Ok(QTLaurent::zero().into()),
        ),
    ];
    for n in 0..=3u32 {
        for k in 0..=n {
            out.push(Check::identity(
                "hall-columns",
                Point::default().n(n).r(k as i64).label("lambda=(3^n)"),
                Status::Theorem,
                move || Ok(hall_g(&Partition::rectangle(3, n), &Partition::column(k)).into()),
                move || Ok(crate::algebra::qbinom(n as i64, k as i64, 1).into()),
            ));
        }
    }
    out
}

/// `(-1)^r q^{binom(r,2)}` on cotype `(1^r)`, zero otherwise.
fn expected_moebius(cotype: &Partition, q: i64) -> i64 {
    if cotype.parts().iter().any(|&p| p != 1) {
        return 0;
    }
    let r = cotype.len() as u32;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    sign * q.pow(r * r.saturating_sub(1) / 2)
}

fn moebius_checks(r: &Ranges) -> Vec<Check> {
    let guard = r.guard;
    let mut out = Vec::new();
    for &q in r.q.iter().filter(|&&q| q == 2) {
        for lambda in Partition::rectangle(4, 4).sub_partitions().into_iter().filter(|l| l.size() <= 4) {
            out.push(Check::predicate(
                "moebius",
                Point::default().q(q).label(format!("lambda={lambda}")),
                Status::Theorem,
                move || {
                    let m = dvr_module(&lambda, prime_field(q)?)?;
                    for w in enumerate_submodules(&m, guard)? {
                        let got = moebius_oracle(&m, &w, guard)?;
                        let want = expected_moebius(&module_cotype(&w, &m, "T")?, q as i64);
                        if got != want {
                            return Ok(Some(Witness::new(0, w.dim() as i64, &BigInt::from(got - want))));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
    out
}

fn rectangular_checks(r: &Ranges) -> Vec<Check> {
    let guard = r.guard;
    let mut out = Vec::new();
    for &q in r.q.iter().filter(|&&q| q == 2) {
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                out.push(Check::predicate(
                    "rectangular-complement",
                    Point::default().q(q).m(a).n(b),
                    Status::Theorem,
                    move || {
                        let m = dvr_module(&Partition::rectangle(a, b), prime_field(q)?)?;
                        for w in enumerate_submodules(&m, guard)? {
                            let ty = module_type(&w, &m, "T")?;
                            let cot = module_cotype(&w, &m, "T")?;
                            if ty.complement(a, b)? != cot {
                                return Ok(Some(Witness {
                                    e_q: 0,
                                    e_t: w.dim() as i64,
                                    coeff: format!("type {ty} cotype {cot}"),
                                }));
                            }
                        }
                        Ok(None)
                    },
                ));
            }
        }
    }
    out
}

fn hall(r: &Ranges) -> Vec<Check> {
    let mut out = hall_formulas();
    out.extend(hall_counts(r));
    out.extend(moebius_checks(r));
    out.extend(rectangular_checks(r));
    out
}

fn sat_oracle(r: &Ranges) -> Vec<Check> {
    let guard = r.guard;
    let cases = [OrderFamily::ramified(1), OrderFamily::split(1), OrderFamily::inert(1), OrderFamily::inert(2)];
    let mut out = Vec::new();
    for &q in &r.q {
        for f in cases.into_iter().filter(|f| f.m <= r.m_max) {
            for n in 0..=r.n_max {
                out.push(Check::identity(
                    "saturation-oracle",
                    fam(f).n(n).q(q),
                    Status::Theorem,
                    move || Ok(saturation_zeta_oracle(f, n, prime_field(q)?, guard)?.into()),
                    move || Ok(Value::Counts(counts_at(&saturation_zeta(f, n), q as i64)?)),
                ));
            }
        }
    }
    out
}

fn quot_oracle(r: &Ranges) -> Vec<Check> {
    let (guard, k) = (r.guard, r.k);
    let f = OrderFamily::inert(1);
    let mut out = Vec::new();
    for &q in &r.q {
        for n in 0..=r.n_max {
            out.push(Check::identity(
                "quot-oracle",
                fam(f).n(n).q(q).k(k),
                Status::Theorem,
                move || Ok(quot_zeta_oracle_inert_m1(prime_field(q)?, n, k, guard)?.into()),
                move || match series_at(&deshift(&coh_finitized(f, n)?, n)?, k as usize, q)? {
                    Ok(c) => Ok(Value::Counts(c)),
                    Err(w) => Err(CheckError::Mismatch(format!("non-integer coefficient {w}"))),
                },
            ));
        }
    }
    out
}

fn oracle_all(r: &Ranges) -> Vec<Check> {
    let with_guard = |name: &str| Ranges { guard: r.guard, ..suite(name).expect("registered").defaults() };
    let mut out = hall(&with_guard("hall"));
    let p = with_guard("prop51");
    out.extend(prop51_oracle(&p, 2));
    out.extend(sat_oracle(&with_guard("sat-oracle")));
    out.extend(quot_oracle(&with_guard("quot-oracle")));
    out
}
