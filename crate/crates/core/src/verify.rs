//! Exhaustive verification suites: every identity and closed form is
//! compared against its oracle over all partitions up to a size bound.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{
    c_number, check_arith_identity, choose, falling_factorial, phi, stirling2, ArithIdentity,
};
use crate::characters::{
    audit_six_cycle, chi_mn, chi_small, chi_small_qform, frobenius_skew, inner_product, SmallSupport,
};
use crate::closed_forms::{kostka_hook, skew_count_m2, skew_count_m3, skew_count_m4, M2Variant, M3Variant};
use crate::content::{
    conjugate_identity_holds, content_power_sum, p_via_q, q_value, q_via_conjugate, rejection_grid, QIndex,
};
use crate::oracles::{aitken_count, enumerate_skew_syt, kostka_enumerate, WeightVector, DEFAULT_ENUM_CAP};
use crate::partition::{generate_partitions, Partition, SkewShape};
use crate::report::VerificationReport;
use crate::{Error, ExactRational, Result};

/// Largest `n` for checks backed by exhaustive enumeration.
pub const ENUMERATION_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Arith,
    Conjugate,
    Prop1,
    Characters,
    ClosedForms,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Arith,
        Suite::Conjugate,
        Suite::Prop1,
        Suite::Characters,
        Suite::ClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Conjugate => "conjugate",
            Suite::Prop1 => "prop1",
            Suite::Characters => "characters",
            Suite::ClosedForms => "closed-forms",
            Suite::All => "all",
        }
    }

    /// Size bound used when none is given. The arithmetic suite runs on
    /// fixed grids and ignores it.
    pub fn default_max_n(self) -> usize {
        12
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: Option<usize>,
    pub enum_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: None,
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl VerifyConfig {
    fn max_n(&self, suite: Suite) -> usize {
        self.max_n.unwrap_or_else(|| suite.default_max_n())
    }

    fn enumeration_max_n(&self, suite: Suite) -> usize {
        self.max_n(suite).min(ENUMERATION_MAX_N).min(self.enum_cap)
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    match suite {
        Suite::Arith => Ok(arith_suite()),
        Suite::Conjugate => conjugate_suite(config),
        Suite::Prop1 => Ok(prop1_suite(config)),
        Suite::Characters => characters_suite(config),
        Suite::ClosedForms => closed_forms_suite(config),
        Suite::All => {
            let mut total = VerificationReport::new("all");
            for each in Suite::EACH {
                let report = run_suite(each, config)?;
                total.elapsed_ms += report.elapsed_ms;
                total.absorb(report);
            }
            Ok(total)
        }
    }
}

fn partitions_up_to(lo: usize, hi: usize) -> Vec<Partition> {
    (lo..=hi).flat_map(generate_partitions).collect()
}

/// Runs `check` on every partition in parallel and merges the results in
/// input order.
fn sweep<F>(report: &mut VerificationReport, shapes: &[Partition], check: F) -> Result<()>
where
    F: Fn(&Partition, &mut VerificationReport) -> Result<()> + Sync,
{
    let parts: Vec<Result<VerificationReport>> = shapes
        .par_iter()
        .map(|mu| {
            let mut local = VerificationReport::new(report.suite.clone());
            check(mu, &mut local)?;
            Ok(local)
        })
        .collect();
    for part in parts {
        report.absorb(part?);
    }
    Ok(())
}

fn try_timed<F>(suite: Suite, body: F) -> Result<VerificationReport>
where
    F: FnOnce(&mut VerificationReport) -> Result<()>,
{
    let mut outcome = Ok(());
    let report = VerificationReport::timed(suite.name(), |r| outcome = body(r));
    outcome.map(|_| report)
}

/// Every identity of the arithmetic module on its default grid, plus the
/// Stirling/falling-factorial expansion and the `φ` symmetry.
pub fn arith_suite() -> VerificationReport {
    VerificationReport::timed(Suite::Arith.name(), |report| {
        for id in ArithIdentity::ALL {
            report.absorb(check_arith_identity(id, &id.default_bounds()));
        }
        for n in 0..=20usize {
            for x in 0..=10i64 {
                let x = ExactRational::from_integer(x.into());
                let lhs: ExactRational = (0..=n)
                    .map(|k| ExactRational::from_integer(stirling2(n, k)) * falling_factorial(&x, k as u32))
                    .sum();
                report.check("stirling-falling-expansion", || format!("n={n}, x={x}"), &lhs, &num_traits::Pow::pow(&x, n as i32));
            }
        }
        for r in 0..=10 {
            for t in r + 1..=10 {
                report.check("C-vanishes-above-diagonal", || format!("r={r}, t={t}"), &c_number(r, t), &BigInt::zero());
            }
        }
        for l in 0..=8 {
            for h in 0..=l {
                for r in 0..=l {
                    for t in 0..=l {
                        let a = phi(l, h, r, t).expect("h <= l");
                        let b = phi(l, l - h, t, r).expect("h <= l");
                        report.check("phi-symmetry", || format!("l={l}, h={h}, r={r}, t={t}"), &a, &b);
                    }
                }
            }
        }
    })
}

/// Conjugate forms of the `q` statistics and both directions of the
/// partition/conjugate characterization.
pub fn conjugate_suite(config: &VerifyConfig) -> Result<VerificationReport> {
    let max_n = config.max_n(Suite::Conjugate);
    let if_max_n = max_n.min(ENUMERATION_MAX_N);
    try_timed(Suite::Conjugate, |report| {
        sweep(report, &partitions_up_to(1, max_n), |mu, local| {
            let n = mu.size();
            for r in 0..=6 {
                for t in 0..=6 {
                    for idx in [QIndex::plus(r, t), QIndex::minus(r, t)] {
                        local.check(
                            "q-conjugate-form",
                            || format!("mu=({mu}), {idx:?}"),
                            &q_via_conjugate(mu, idx),
                            &q_value(mu, idx),
                        );
                    }
                    let sum = q_value(mu, QIndex::minus(r, t)) + q_value(mu, QIndex::minus(t, r));
                    local.check("q-minus-antisymmetric", || format!("mu=({mu}), r={r}, t={t}"), &sum, &BigInt::zero());
                    local.check(
                        "q-plus-symmetric",
                        || format!("mu=({mu}), r={r}, t={t}"),
                        &q_value(mu, QIndex::plus(r, t)),
                        &q_value(mu, QIndex::plus(t, r)),
                    );
                }
            }
            let weighted: BigInt = mu.parts().iter().enumerate().map(|(i, &p)| BigInt::from(p * i)).sum();
            let column_pairs: BigInt = mu.conjugate().parts().iter().map(|&c| choose(c, 2)).sum();
            local.check("row-weight-column-pairs", || format!("mu=({mu})"), &weighted, &column_pairs);
            local.check(
                "half-q-plus-00",
                || format!("mu=({mu})"),
                &q_value(mu, QIndex::plus(0, 0)),
                &BigInt::from(2 * n),
            );
            local.absorb(conjugate_identity_holds(mu, &mu.conjugate(), 6, 6));
            Ok(())
        })?;
        sweep(report, &partitions_up_to(1, if_max_n), |mu, local| {
            let conj = mu.conjugate();
            for cand in generate_partitions(mu.size()) {
                if cand == conj {
                    continue;
                }
                let g = rejection_grid(mu, &cand);
                let outcome = conjugate_identity_holds(mu, &cand, g, g);
                local.check_that(
                    "conjugate-rejects-non-conjugate",
                    || format!("mu=({mu}), candidate=({cand}), grid={g}"),
                    !outcome.passed(),
                );
            }
            Ok(())
        })
    })
}

/// Content power sums through their `q` expansion, `l <= 8`.
pub fn prop1_suite(config: &VerifyConfig) -> VerificationReport {
    let max_n = config.max_n(Suite::Prop1);
    let mut report = try_timed(Suite::Prop1, |report| {
        sweep(report, &partitions_up_to(1, max_n), |mu, local| {
            for l in 0..=8 {
                local.check(
                    "power-sum-via-q",
                    || format!("mu=({mu}), l={l}"),
                    &p_via_q(mu, l),
                    &content_power_sum(mu, l as u32),
                );
            }
            Ok(())
        })
    })
    .expect("prop1 checks are infallible");
    report.suite = Suite::Prop1.name().to_string();
    report
}

/// Closed character values against Murnaghan–Nakayama, the 6-cycle
/// coefficient audit, the Frobenius skew expansion, and orthogonality.
pub fn characters_suite(config: &VerifyConfig) -> Result<VerificationReport> {
    let max_n = config.max_n(Suite::Characters);
    let enum_n = config.enumeration_max_n(Suite::Characters);
    try_timed(Suite::Characters, |report| {
        sweep(report, &partitions_up_to(2, max_n), |mu, local| {
            let n = mu.size();
            for support in SmallSupport::ALL {
                if n < support.size() {
                    continue;
                }
                let truth = chi_mn(mu, &support.cycle_type(n)?)?;
                let closed = chi_small(mu, support)?;
                local.check("chi-closed-vs-mn", || format!("mu=({mu}), cls=({support})"), &closed, &truth);
                if SmallSupport::QFORM.contains(&support) {
                    local.check(
                        "chi-qform-vs-closed",
                        || format!("mu=({mu}), cls=({support})"),
                        &chi_small_qform(mu, support)?,
                        &closed,
                    );
                }
            }
            Ok(())
        })?;
        for n in 6..=max_n.min(10) {
            let audit = audit_six_cycle(n)?;
            report.check("six-cycle-corrected", || format!("n={n}"), &audit.corrected_mismatches, &0);
            report.check_that(
                "six-cycle-uncorrected-detected",
                || format!("n={n}, mismatches={}", audit.uncorrected_mismatches),
                audit.uncorrected_mismatches >= 1,
            );
        }
        sweep(report, &partitions_up_to(1, enum_n), |mu, local| {
            for m in 1..=4.min(mu.size()) {
                for lam in generate_partitions(m) {
                    let expected = match SkewShape::new(mu.clone(), lam.clone()) {
                        Ok(shape) => aitken_count(&shape),
                        Err(_) => BigInt::zero(),
                    };
                    local.check(
                        "frobenius-skew",
                        || format!("mu=({mu}), lambda=({lam})"),
                        &frobenius_skew(mu, &lam)?,
                        &expected,
                    );
                }
            }
            Ok(())
        })?;
        for n in 1..=max_n.min(7) {
            let all = generate_partitions(n);
            for a in &all {
                for b in &all {
                    let expected = if a == b { ExactRational::one() } else { ExactRational::zero() };
                    report.check("orthogonality", || format!("({a}), ({b})"), &inner_product(a, b)?, &expected);
                }
            }
        }
        Ok(())
    })
}

/// Every closed-form variant against the determinant and the Frobenius
/// expansion, against enumeration at small `n`, and the Kostka reduction.
pub fn closed_forms_suite(config: &VerifyConfig) -> Result<VerificationReport> {
    let max_n = config.max_n(Suite::ClosedForms);
    let enum_n = config.enumeration_max_n(Suite::ClosedForms);
    let cap = config.enum_cap;
    try_timed(Suite::ClosedForms, |report| {
        sweep(report, &partitions_up_to(2, max_n), |mu, local| {
            for m in 2..=4 {
                if mu.first_row() < m {
                    continue;
                }
                let shape = SkewShape::new(mu.clone(), Partition::row(m))?;
                let truth = aitken_count(&shape);
                let input = || format!("mu=({mu}), m={m}");
                let mut closed = Vec::new();
                match m {
                    2 => {
                        for v in M2Variant::ALL {
                            closed.push((format!("m2-{v:?}"), skew_count_m2(mu, v)?));
                        }
                    }
                    3 => {
                        for v in M3Variant::ALL {
                            closed.push((format!("m3-{v:?}"), skew_count_m3(mu, v)?));
                        }
                    }
                    _ => closed.push(("m4".to_string(), skew_count_m4(mu)?)),
                }
                for (name, value) in &closed {
                    local.check(&format!("{name}-vs-determinant"), input, value, &truth);
                }
                local.check("frobenius-vs-determinant", input, &frobenius_skew(mu, &Partition::row(m))?, &truth);
                if mu.size() <= enum_n {
                    local.check("enumeration-vs-determinant", input, &enumerate_skew_syt(&shape, cap)?, &truth);
                }
            }
            Ok(())
        })?;
        sweep(report, &partitions_up_to(1, enum_n), |mu, local| {
            let n = mu.size();
            for m in 1..=n {
                let weight = WeightVector::hook(m, n)?;
                local.check(
                    "kostka-hook-vs-enumeration",
                    || format!("mu=({mu}), m={m}"),
                    &kostka_hook(mu, m)?,
                    &kostka_enumerate(mu, &weight, cap)?,
                );
            }
            Ok(())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("bogus".parse::<Suite>(), Err(Error::UnknownSuite("bogus".into())));
    }

    #[test]
    fn small_suites_pass() {
        let config = VerifyConfig {
            max_n: Some(7),
            ..VerifyConfig::default()
        };
        for s in Suite::EACH {
            let report = run_suite(s, &config).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.cases_run > 0);
        }
    }
}
