//! Registry of transformation and harmonic-number identities plus the
//! engine that checks each one exactly over a parameter grid.
//!
//! Every check is an equality of rationals (or of series coefficients,
//! which is the same thing degree by degree). A failing case carries a
//! witness: the first index where the two sides differ and both exact
//! values. Parameter points that land on a digamma pole are recorded as
//! skipped, never as failures, since the identities hypothesize away
//! those points.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactnum::{binomial_int, binomial_rat, factorial, harmonic, harmonic_diff,
    harmonic_symm, stirling2, Rat};
use crate::fps::{Poly, Series};
use crate::polyfamilies::{hsum_closed_form_sides, laguerre, laguerre_log_integral,
    nbinom_power_series_sides};
use crate::transforms::{binomial_transform, euler_transform_sides, exponential_euler_sides,
    generalized_euler_sides, log_euler_sides, prop4_sides, prop5_alt_sides, prop5_sides,
    SequenceSpec};

/// Verification bounds: index/order caps and the parameter grids.
#[derive(Debug, Clone)]
pub struct Bounds {
    pub n_max: usize,
    pub order: usize,
    pub alpha_grid: Vec<Rat>,
    pub p_grid: Vec<Rat>,
    pub seed: u64,
    pub trials: usize,
}

fn default_grid() -> Vec<Rat> {
    [
        (-3, 1),
        (-2, 1),
        (2, 1),
        (3, 1),
        (0, 1),
        (1, 1),
        (1, 2),
        (-1, 2),
        (3, 7),
        (-3, 7),
    ]
    .into_iter()
    .map(|(n, d)| Rat::new(n, d))
    .collect()
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n_max: 24,
            order: 24,
            alpha_grid: default_grid(),
            p_grid: default_grid(),
            seed: 0x5eed,
            trials: 20,
        }
    }
}

impl Bounds {
    pub fn with_limits(n_max: usize, order: usize) -> Self {
        Bounds {
            n_max,
            order,
            ..Bounds::default()
        }
    }

    /// Grid entries usable where the hypothesis requires p > -1.
    fn p_grid_gt_minus_one(&self) -> Vec<Rat> {
        self.p_grid
            .iter()
            .filter(|p| **p > Rat::from(-1))
            .cloned()
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseStatus {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "failed")]
    Failed,
    #[serde(rename = "skipped-pole")]
    SkippedPole,
}

/// First-failure detail: index (summation index or coefficient degree)
/// and both exact values.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCase {
    pub params: BTreeMap<String, String>,
    pub status: CaseStatus,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub anchor: String,
    pub cases: Vec<IdentityCase>,
    pub summary: Summary,
}

impl IdentityReport {
    fn new(identity: &str, anchor: &str, mut cases: Vec<IdentityCase>) -> Self {
        cases.sort_by(|a, b| a.params.cmp(&b.params));
        let summary = Summary {
            verified: cases.iter().filter(|c| c.status == CaseStatus::Verified).count(),
            failed: cases.iter().filter(|c| c.status == CaseStatus::Failed).count(),
            skipped: cases.iter().filter(|c| c.status == CaseStatus::SkippedPole).count(),
        };
        IdentityReport {
            identity: identity.to_string(),
            anchor: anchor.to_string(),
            cases,
            summary,
        }
    }

    pub fn all_verified(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown identity {id:?}")]
pub struct UnknownIdentity {
    pub id: String,
}

fn params(kv: &[(&str, String)]) -> BTreeMap<String, String> {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn case_from_pairs(
    params: BTreeMap<String, String>,
    pairs: impl Iterator<Item = (usize, Rat, Rat)>,
) -> IdentityCase {
    for (index, lhs, rhs) in pairs {
        if lhs != rhs {
            return IdentityCase {
                params,
                status: CaseStatus::Failed,
                witness: Some(Witness {
                    index,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            };
        }
    }
    IdentityCase {
        params,
        status: CaseStatus::Verified,
        witness: None,
    }
}

fn series_case(params: BTreeMap<String, String>, lhs: &Series, rhs: &Series) -> IdentityCase {
    let order = lhs.order().min(rhs.order());
    case_from_pairs(
        params,
        (0..=order).map(|n| (n, lhs.coeff(n).clone(), rhs.coeff(n).clone())),
    )
}

fn poly_case(params: BTreeMap<String, String>, lhs: &Poly, rhs: &Poly) -> IdentityCase {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    case_from_pairs(params, (0..len).map(|k| (k, lhs.coeff(k), rhs.coeff(k))))
}

fn skipped(params: BTreeMap<String, String>) -> IdentityCase {
    IdentityCase {
        params,
        status: CaseStatus::SkippedPole,
        witness: None,
    }
}

/// The full built-in sequence set used by the series transformation
/// identities.
fn builtin_sequences(bounds: &Bounds) -> Vec<SequenceSpec> {
    let mut seqs = vec![
        SequenceSpec::Ones,
        SequenceSpec::AltHarmonic,
        SequenceSpec::LaguerreExp { x: Rat::one() },
        SequenceSpec::LaguerreExp { x: Rat::new(1, 2) },
    ];
    for m in 0..=3 {
        seqs.push(SequenceSpec::Power { m });
    }
    for alpha in &bounds.alpha_grid {
        seqs.push(SequenceSpec::BinomAlpha {
            alpha: alpha.clone(),
        });
    }
    seqs
}

/// Smaller sequence set for identities that also range over a parameter
/// grid, to keep the case count proportionate.
fn small_sequences() -> Vec<SequenceSpec> {
    vec![
        SequenceSpec::Ones,
        SequenceSpec::AltHarmonic,
        SequenceSpec::Power { m: 2 },
        SequenceSpec::LaguerreExp { x: Rat::one() },
    ]
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-20i64..=20);
    let den = rng.gen_range(1i64..=12);
    Rat::new(num, den)
}

fn rand_rats(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| rand_rat(rng)).collect()
}

fn r_euler_1_2(b: &Bounds) -> Vec<IdentityCase> {
    builtin_sequences(b)
        .iter()
        .map(|seq| {
            let (lhs, rhs) = euler_transform_sides(seq, b.order);
            series_case(
                params(&[("seq", seq.to_string()), ("order", b.order.to_string())]),
                &lhs,
                &rhs,
            )
        })
        .collect()
}

fn r_prop1_2_4(b: &Bounds) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for alpha in &b.alpha_grid {
        for seq in small_sequences() {
            let (lhs, rhs) = generalized_euler_sides(alpha, &seq, b.order);
            cases.push(series_case(
                params(&[
                    ("alpha", alpha.to_string()),
                    ("seq", seq.to_string()),
                    ("order", b.order.to_string()),
                ]),
                &lhs,
                &rhs,
            ));
        }
    }
    cases
}

fn r_prop2_2_9(b: &Bounds) -> Vec<IdentityCase> {
    builtin_sequences(b)
        .iter()
        .map(|seq| {
            let (lhs, rhs) = exponential_euler_sides(seq, b.order);
            series_case(
                params(&[("seq", seq.to_string()), ("order", b.order.to_string())]),
                &lhs,
                &rhs,
            )
        })
        .collect()
}

fn r_prop3_2_11(b: &Bounds) -> Vec<IdentityCase> {
    builtin_sequences(b)
        .iter()
        .map(|seq| {
            let (lhs, rhs) = log_euler_sides(seq, b.order);
            series_case(
                params(&[("seq", seq.to_string()), ("order", b.order.to_string())]),
                &lhs,
                &rhs,
            )
        })
        .collect()
}

fn r_eq_2_15(b: &Bounds) -> Vec<IdentityCase> {
    b.p_grid_gt_minus_one()
        .iter()
        .map(|p| {
            let pm = params(&[("p", p.to_string()), ("order", b.order.to_string())]);
            let lhs = Series::neg_log1m(b.order).mul(&Series::nbinom(p, b.order));
            match (0..=b.order)
                .map(|n| harmonic_diff(p, n))
                .collect::<Result<Vec<_>, _>>()
            {
                Ok(hd) => {
                    let rhs = Series::from_fn(b.order, |n| {
                        &hd[n] * &binomial_rat(&(p + &Rat::from(n)), n)
                    });
                    series_case(pm, &lhs, &rhs)
                }
                Err(_) => skipped(pm),
            }
        })
        .collect()
}

fn prop4_cases(b: &Bounds, p_values: &[Rat], seqs: &[SequenceSpec]) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for p in p_values {
        for seq in seqs {
            let pm = params(&[
                ("p", p.to_string()),
                ("seq", seq.to_string()),
                ("order", b.order.to_string()),
            ]);
            match prop4_sides(p, seq, b.order) {
                Ok((lhs, rhs)) => cases.push(series_case(pm, &lhs, &rhs)),
                Err(_) => cases.push(skipped(pm)),
            }
        }
    }
    cases
}

fn r_prop4_2_17(b: &Bounds) -> Vec<IdentityCase> {
    prop4_cases(b, &b.p_grid_gt_minus_one(), &small_sequences())
}

fn r_cor1_2_23(b: &Bounds) -> Vec<IdentityCase> {
    prop4_cases(b, &[Rat::zero()], &builtin_sequences(b))
}

fn r_eq_2_25(b: &Bounds) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for m in 0..=6usize {
        for p in b.p_grid_gt_minus_one() {
            let (lhs, rhs) = nbinom_power_series_sides(m, &p, b.order);
            cases.push(series_case(
                params(&[
                    ("m", m.to_string()),
                    ("p", p.to_string()),
                    ("order", b.order.to_string()),
                ]),
                &lhs,
                &rhs,
            ));
        }
    }
    cases
}

fn r_eq_2_27(b: &Bounds) -> Vec<IdentityCase> {
    (0..=b.n_max.min(16))
        .map(|m| {
            let pm = params(&[("m", m.to_string()), ("n_max", b.n_max.to_string())]);
            case_from_pairs(
                pm,
                (0..=b.n_max).map(move |n| {
                    let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
                    let lhs = sign * Rat::from_bigint(factorial(n) * stirling2(m, n));
                    let mut rhs = Rat::zero();
                    for k in 0..=n {
                        let pow = if k == 0 && m == 0 {
                            Rat::one()
                        } else {
                            Rat::from(k).pow(m)
                        };
                        let term = binomial_int(n, k as i64) * pow;
                        rhs = if k % 2 == 0 { rhs + term } else { rhs - term };
                    }
                    (n, lhs, rhs)
                }),
            )
        })
        .collect()
}

fn hsum_cases(b: &Bounds, p_values: &[Rat]) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for m in 0..=5usize {
        for p in p_values {
            let pm = params(&[
                ("m", m.to_string()),
                ("p", p.to_string()),
                ("order", b.order.to_string()),
            ]);
            match hsum_closed_form_sides(m, p, b.order) {
                Ok((lhs, rhs)) => cases.push(series_case(pm, &lhs, &rhs)),
                Err(_) => cases.push(skipped(pm)),
            }
        }
    }
    cases
}

fn r_cor2_2_28(b: &Bounds) -> Vec<IdentityCase> {
    hsum_cases(b, &b.p_grid_gt_minus_one())
}

fn r_eq_2_29(b: &Bounds) -> Vec<IdentityCase> {
    hsum_cases(b, &[Rat::zero()])
}

fn r_prop5_2_31(b: &Bounds) -> Vec<IdentityCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    let mut cases = Vec::new();
    for trial in 0..b.trials {
        let deg = rng.gen_range(0usize..=8);
        let g = Poly::new(rand_rats(&mut rng, deg + 1));
        let a = SequenceSpec::explicit(format!("random-{trial}"), rand_rats(&mut rng, deg + 1));
        let t = rand_rat(&mut rng);
        let pm = params(&[
            ("trial", format!("{trial:02}")),
            ("deg", deg.to_string()),
            ("t", t.to_string()),
        ]);
        let (lhs, rhs) = prop5_sides(&g, &a, &t);
        let (alt_lhs, alt_rhs) = prop5_alt_sides(&g, &a, &t);
        cases.push(case_from_pairs(
            pm,
            [(0, lhs, rhs), (1, alt_lhs, alt_rhs)].into_iter(),
        ));
    }
    cases
}

fn r_laguerre_3_1(b: &Bounds) -> Vec<IdentityCase> {
    (1..=b.n_max.min(12))
        .map(|n| {
            let lhs = laguerre_log_integral(n);
            let mut rhs = Poly::zero();
            for k in 1..=n {
                let term = laguerre(k)
                    .sub(&Poly::constant(Rat::one()))
                    .scale(&Rat::from(k).recip());
                rhs = rhs.add(&term);
            }
            poly_case(params(&[("n", format!("{n:02}"))]), &lhs, &rhs)
        })
        .collect()
}

fn r_eq_3_10(b: &Bounds) -> Vec<IdentityCase> {
    let lhs = Series::neg_log1m(b.order).mul(&Series::geometric(b.order));
    let rhs = Series::from_fn(b.order, harmonic);
    vec![series_case(
        params(&[("order", b.order.to_string())]),
        &lhs,
        &rhs,
    )]
}

fn r_cor4_4_1(b: &Bounds) -> Vec<IdentityCase> {
    b.alpha_grid
        .iter()
        .map(|alpha| {
            let lhs = Series::neg_log1m(b.order).mul(&Series::nbinom(alpha, b.order));
            let rhs = Series::from_fn(b.order, |n| {
                let mut acc = binomial_rat(&(alpha + &Rat::from(n)), n) * harmonic(n);
                for k in 1..=n {
                    acc = acc
                        - binomial_int(n, k as i64) * binomial_rat(alpha, k) * harmonic(k);
                }
                acc
            });
            series_case(
                params(&[("alpha", alpha.to_string()), ("order", b.order.to_string())]),
                &lhs,
                &rhs,
            )
        })
        .collect()
}

fn r_vandermonde_4_4(b: &Bounds) -> Vec<IdentityCase> {
    b.alpha_grid
        .iter()
        .map(|alpha| {
            case_from_pairs(
                params(&[("alpha", alpha.to_string()), ("n_max", b.n_max.to_string())]),
                (0..=b.n_max).map(|n| {
                    let mut lhs = Rat::zero();
                    for k in 0..=n {
                        lhs = lhs + binomial_int(n, k as i64) * binomial_rat(alpha, k);
                    }
                    (n, lhs, binomial_rat(&(alpha + &Rat::from(n)), n))
                }),
            )
        })
        .collect()
}

fn r_cor5_4_7(b: &Bounds) -> Vec<IdentityCase> {
    let mut cases = Vec::new();
    for alpha in &b.alpha_grid {
        for n in 0..=b.n_max {
            let pm = params(&[("alpha", alpha.to_string()), ("n", format!("{n:02}"))]);
            match harmonic_symm(alpha, n) {
                Ok(symm) => {
                    let mut lhs = Rat::zero();
                    for k in 0..=n {
                        lhs = lhs
                            + binomial_int(n, k as i64) * binomial_rat(alpha, k) * harmonic(k);
                    }
                    let rhs = binomial_rat(&(alpha + &Rat::from(n)), n) * symm;
                    cases.push(case_from_pairs(pm, std::iter::once((n, lhs, rhs))));
                }
                Err(_) => cases.push(skipped(pm)),
            }
        }
    }
    cases
}

fn sum_5x_lhs(top: &Rat, alpha: &Rat, n: usize) -> Rat {
    // sum_k C(top, n-k) C(alpha+k, k) (-1)^{n-k} H_k
    let mut acc = Rat::zero();
    for k in 0..=n {
        let term = binomial_rat(top, n - k)
            * binomial_rat(&(alpha + &Rat::from(k)), k)
            * harmonic(k);
        acc = if (n - k) % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn r_eq_5_1(b: &Bounds) -> Vec<IdentityCase> {
    b.alpha_grid
        .iter()
        .map(|alpha| {
            case_from_pairs(
                params(&[("alpha", alpha.to_string()), ("n_max", b.n_max.to_string())]),
                (1..=b.n_max).map(|n| {
                    let lhs = sum_5x_lhs(&(alpha + &Rat::one()), alpha, n);
                    let sign = if n % 2 == 1 { Rat::one() } else { -Rat::one() };
                    let rhs =
                        (Rat::one() + sign * binomial_rat(alpha, n)) / Rat::from(n);
                    (n, lhs, rhs)
                }),
            )
        })
        .collect()
}

fn r_eq_5_2(b: &Bounds) -> Vec<IdentityCase> {
    b.alpha_grid
        .iter()
        .map(|alpha| {
            case_from_pairs(
                params(&[("alpha", alpha.to_string()), ("n_max", b.n_max.to_string())]),
                (0..=b.n_max).map(|n| {
                    let lhs = sum_5x_lhs(alpha, alpha, n);
                    let mut rhs = harmonic(n);
                    for k in 1..=n {
                        let term = binomial_rat(alpha, k) / Rat::from(k);
                        rhs = if k % 2 == 1 { rhs + term } else { rhs - term };
                    }
                    (n, lhs, rhs)
                }),
            )
        })
        .collect()
}

fn r_eq_5_3(b: &Bounds) -> Vec<IdentityCase> {
    vec![case_from_pairs(
        params(&[("n_max", b.n_max.to_string())]),
        (1..=b.n_max).map(|n| {
            let alpha = Rat::from(n);
            let lhs = sum_5x_lhs(&(&alpha + &Rat::one()), &alpha, n);
            let rhs = if n % 2 == 0 {
                Rat::zero()
            } else {
                Rat::from(2) / Rat::from(n)
            };
            (n, lhs, rhs)
        }),
    )]
}

fn r_eq_5_4(b: &Bounds) -> Vec<IdentityCase> {
    vec![case_from_pairs(
        params(&[("n_max", b.n_max.to_string())]),
        (0..=b.n_max).map(|n| {
            let alpha = Rat::from(n);
            let lhs = sum_5x_lhs(&alpha, &alpha, n);
            (n, lhs, Rat::from(2) * harmonic(n))
        }),
    )]
}

fn r_eq_5_8(b: &Bounds) -> Vec<IdentityCase> {
    let bt = binomial_transform(&SequenceSpec::AltHarmonic.terms(b.n_max));
    vec![case_from_pairs(
        params(&[("n_max", b.n_max.to_string())]),
        bt.into_iter().enumerate().map(|(n, c)| {
            let expect = if n == 0 {
                Rat::zero()
            } else {
                Rat::from(n).recip()
            };
            (n, c, expect)
        }),
    )]
}

fn r_lemma2_5_5(b: &Bounds) -> Vec<IdentityCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 0x55);
    (0..b.trials)
        .map(|trial| {
            let a = Series::new(rand_rats(&mut rng, b.order + 1));
            let lhs = a.partial_sums();
            let rhs = Series::geometric(b.order).mul(&a);
            series_case(
                params(&[("trial", format!("{trial:02}")), ("order", b.order.to_string())]),
                &lhs,
                &rhs,
            )
        })
        .collect()
}

fn r_lemma2_5_6(b: &Bounds) -> Vec<IdentityCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 0x56);
    (0..b.trials)
        .map(|trial| {
            let a = Series::new(rand_rats(&mut rng, b.order + 1));
            let alpha = rand_rat(&mut rng);
            let lambda = rand_rat(&mut rng);
            let lhs = a.binom_shift_mul(&alpha, &lambda);
            let rhs = Series::binom_pow_scaled(&alpha, &lambda, b.order).mul(&a);
            series_case(
                params(&[
                    ("trial", format!("{trial:02}")),
                    ("alpha", alpha.to_string()),
                    ("lambda", lambda.to_string()),
                    ("order", b.order.to_string()),
                ]),
                &lhs,
                &rhs,
            )
        })
        .collect()
}

type Runner = fn(&Bounds) -> Vec<IdentityCase>;

/// (identity id, source anchor, runner), in report order.
const REGISTRY: &[(&str, &str, Runner)] = &[
    ("euler-1.2", "Eq. (1.2)", r_euler_1_2),
    ("prop1-2.4", "Eq. (2.4)", r_prop1_2_4),
    ("prop2-2.9", "Eq. (2.9)", r_prop2_2_9),
    ("prop3-2.11", "Eq. (2.11)", r_prop3_2_11),
    ("eq-2.15", "Eq. (2.15)", r_eq_2_15),
    ("prop4-2.17", "Eq. (2.17)", r_prop4_2_17),
    ("cor1-2.23", "Eq. (2.23)", r_cor1_2_23),
    ("eq-2.25", "Eq. (2.25)", r_eq_2_25),
    ("eq-2.27", "Eq. (2.27)", r_eq_2_27),
    ("cor2-2.28", "Eq. (2.28)", r_cor2_2_28),
    ("eq-2.29", "Eq. (2.29)", r_eq_2_29),
    ("prop5-2.31", "Eq. (2.31)", r_prop5_2_31),
    ("laguerre-3.1", "Eq. (3.1)", r_laguerre_3_1),
    ("eq-3.10", "Eq. (3.10)", r_eq_3_10),
    ("cor4-4.1", "Eq. (4.1)", r_cor4_4_1),
    ("vandermonde-4.4", "Eq. (4.4)", r_vandermonde_4_4),
    ("cor5-4.7", "Eq. (4.7)", r_cor5_4_7),
    ("eq-5.1", "Eq. (5.1)", r_eq_5_1),
    ("eq-5.2", "Eq. (5.2)", r_eq_5_2),
    ("eq-5.3", "Eq. (5.3)", r_eq_5_3),
    ("eq-5.4", "Eq. (5.4)", r_eq_5_4),
    ("lemma2-5.5", "Eq. (5.5)", r_lemma2_5_5),
    ("lemma2-5.6", "Eq. (5.6)", r_lemma2_5_6),
    ("eq-5.8", "Eq. (5.8)", r_eq_5_8),
];

/// Registered identity ids with their source anchors.
pub fn registry_ids() -> Vec<(&'static str, &'static str)> {
    REGISTRY.iter().map(|(id, anchor, _)| (*id, *anchor)).collect()
}

/// Runs one registry entry over the given bounds.
pub fn verify(id: &str, bounds: &Bounds) -> Result<IdentityReport, UnknownIdentity> {
    let (id, anchor, runner) = REGISTRY
        .iter()
        .find(|(rid, _, _)| *rid == id)
        .ok_or_else(|| UnknownIdentity { id: id.to_string() })?;
    Ok(IdentityReport::new(id, anchor, runner(bounds)))
}

/// Runs the whole registry over the given bounds.
pub fn verify_all(bounds: &Bounds) -> Vec<IdentityReport> {
    REGISTRY
        .iter()
        .map(|(id, anchor, runner)| IdentityReport::new(id, anchor, runner(bounds)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_identity() {
        let err = verify("nope", &Bounds::default()).unwrap_err();
        assert_eq!(err.id, "nope");
    }

    #[test]
    fn full_registry_default_grid() {
        let bounds = Bounds::default();
        for report in verify_all(&bounds) {
            assert!(
                report.all_verified(),
                "{} failed: {:?}",
                report.identity,
                report
                    .cases
                    .iter()
                    .find(|c| c.status == CaseStatus::Failed)
            );
        }
    }

    #[test]
    fn poles_are_skipped_not_failed() {
        let report = verify("cor5-4.7", &Bounds::default()).unwrap();
        assert!(report.summary.skipped > 0);
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn trivial_bounds() {
        let bounds = Bounds::with_limits(0, 0);
        for report in verify_all(&bounds) {
            assert!(report.all_verified(), "{}", report.identity);
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let bounds = Bounds::with_limits(8, 8);
        let a = serde_json::to_string(&verify_all(&bounds)).unwrap();
        let b = serde_json::to_string(&verify_all(&bounds)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn summary_counts_match_cases() {
        let report = verify("cor5-4.7", &Bounds::with_limits(10, 10)).unwrap();
        let total = report.summary.verified + report.summary.failed + report.summary.skipped;
        assert_eq!(total, report.cases.len());
    }

    #[test]
    fn eq_5_1_n1_closed_form() {
        // n = 1: lhs = alpha + 1 on both sides
        let alpha = Rat::new(3, 7);
        let lhs = sum_5x_lhs(&(&alpha + &Rat::one()), &alpha, 1);
        assert_eq!(lhs, &alpha + &Rat::one());
    }
}
