//! Content power sums `p_l[C(μ)]` and the row statistics `q±_{r,t}` they
//! expand into, plus the partition/conjugate characterization built on the
//! same sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::arith::{choose, phi};
use crate::partition::Partition;
use crate::report::VerificationReport;
use crate::ExactInteger;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Index of a row statistic `q^{sign}_{r,t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QIndex {
    pub sign: Sign,
    pub r: usize,
    pub t: usize,
}

impl QIndex {
    pub fn plus(r: usize, t: usize) -> Self {
        Self { sign: Sign::Plus, r, t }
    }

    pub fn minus(r: usize, t: usize) -> Self {
        Self { sign: Sign::Minus, r, t }
    }
}

/// `p_l[C(μ)] = Σ_{(i,j) ∈ D_μ} (j − i)^l`
pub fn content_power_sum(mu: &Partition, l: u32) -> ExactInteger {
    mu.contents().into_iter().map(|c| BigInt::from(c).pow(l)).sum()
}

/// Power sums `p_0 … p_L` of one partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentPowerSums {
    pub mu: Partition,
    pub values: Vec<ExactInteger>,
}

impl ContentPowerSums {
    pub fn new(mu: &Partition, max_l: u32) -> Self {
        let contents: Vec<BigInt> = mu.contents().into_iter().map(BigInt::from).collect();
        let values = (0..=max_l)
            .map(|l| contents.iter().map(|c| c.pow(l)).sum())
            .collect();
        Self {
            mu: mu.clone(),
            values,
        }
    }

    pub fn get(&self, l: usize) -> &ExactInteger {
        &self.values[l]
    }
}

fn combine(sign: Sign, a: ExactInteger, b: ExactInteger) -> ExactInteger {
    match sign {
        Sign::Plus => a + b,
        Sign::Minus => a - b,
    }
}

/// `Σ_i C(μ_i, r+1)·C(i−1, t)` over the rows of `mu`.
fn row_sum(mu: &Partition, r: usize, t: usize) -> ExactInteger {
    mu.parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| choose(len, r + 1) * choose(i, t))
        .sum()
}

/// `q^±_{r,t} = Σ_i [C(μ_i, r+1)C(i−1, t) ± C(μ_i, t+1)C(i−1, r)]`
pub fn q_value(mu: &Partition, idx: QIndex) -> ExactInteger {
    combine(idx.sign, row_sum(mu, idx.r, idx.t), row_sum(mu, idx.t, idx.r))
}

/// `q^±_{r,t}` with the second row sum replaced by the matching column sum
/// `Σ_j C(μ'_j, r+1)·C(j−1, t)` over the conjugate.
pub fn q_via_conjugate(mu: &Partition, idx: QIndex) -> ExactInteger {
    combine(
        idx.sign,
        row_sum(mu, idx.r, idx.t),
        row_sum(&mu.conjugate(), idx.r, idx.t),
    )
}

/// `p_l[C(μ)]` written as a combination of the `q` statistics.
///
/// For odd `l = 2L+1`:
/// `Σ_{h≤L} Σ_{r≤h} Σ_{t≤l−h} (−1)^h φ_l(h,r,t) q^-_{t,r}`.
///
/// For even `l = 2L`:
/// `Σ_{h<L} Σ_{r≤h} Σ_{t≤l−h} (−1)^h φ_l(h,r,t) q^+_{r,t}
///  + ½(−1)^L Σ_{r≤L} Σ_{t≤L} φ_l(L,r,t) q^+_{r,t}`.
///
/// # Panics
///
/// If the bracket multiplied by ½ is odd, which would mean a bug.
pub fn p_via_q(mu: &Partition, l: usize) -> ExactInteger {
    let half = l / 2;
    let sign = |h: usize| if h.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    let phi = |h, r, t| phi(l, h, r, t).expect("h <= l by construction");
    if l % 2 == 1 {
        let mut acc = BigInt::zero();
        for h in 0..=half {
            for r in 0..=h {
                for t in 0..=l - h {
                    let coeff = phi(h, r, t);
                    if coeff.is_zero() {
                        continue;
                    }
                    acc += sign(h) * coeff * q_value(mu, QIndex::minus(t, r));
                }
            }
        }
        acc
    } else {
        let mut acc = BigInt::zero();
        for h in 0..half {
            for r in 0..=h {
                for t in 0..=l - h {
                    let coeff = phi(h, r, t);
                    if coeff.is_zero() {
                        continue;
                    }
                    acc += sign(h) * coeff * q_value(mu, QIndex::plus(r, t));
                }
            }
        }
        let mut middle = BigInt::zero();
        for r in 0..=half {
            for t in 0..=half {
                middle += phi(half, r, t) * q_value(mu, QIndex::plus(r, t));
            }
        }
        let (quot, rem) = middle.div_rem(&BigInt::from(2));
        assert!(rem.is_zero(), "half-weighted middle term is odd for ({mu}), l = {l}");
        acc + sign(half) * quot
    }
}

/// Checks `Σ_i C(μ_i, t+1)C(i−1, r) = Σ_j C(λ_j, r+1)C(j−1, t)` with
/// `λ = candidate`, for all `r <= r_max`, `t <= t_max`.
///
/// The identity holds on every grid exactly when `candidate` is the
/// conjugate of `mu`; see [`rejection_grid`] for a grid that suffices.
pub fn conjugate_identity_holds(
    mu: &Partition,
    candidate: &Partition,
    r_max: usize,
    t_max: usize,
) -> VerificationReport {
    VerificationReport::timed("conjugate-identity", |report| {
        for r in 0..=r_max {
            for t in 0..=t_max {
                let lhs = row_sum(mu, t, r);
                let rhs = row_sum(candidate, r, t);
                report.check(
                    "conjugate-identity",
                    || format!("mu=({mu}), candidate=({candidate}), r={r}, t={t}"),
                    &lhs,
                    &rhs,
                );
            }
        }
    })
}

/// Square grid bound `r, t <= G` on which [`conjugate_identity_holds`]
/// passing forces `candidate = mu'`.
///
/// Setting `r = 0` turns both sides into `Σ λ_j C(j−1, t)` against
/// `Σ μ'_j C(j−1, t)`, which is unitriangular in `t` once `t` reaches
/// `max(h(λ), h(μ'))`.
pub fn rejection_grid(mu: &Partition, candidate: &Partition) -> usize {
    mu.height()
        .max(candidate.height())
        .max(mu.first_row())
        .saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::generate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(content_power_sum(&p("2,1"), 1), int(0));
        assert_eq!(content_power_sum(&p("3,2,1"), 2), int(10));
        assert_eq!(content_power_sum(&p("4,2"), 0), int(6));
        let sums = ContentPowerSums::new(&p("3,2,1"), 3);
        assert_eq!(sums.get(0), &int(6));
        assert_eq!(sums.get(2), &int(10));
        assert_eq!(sums.get(3), &int(0));
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_value(&p("3,2,1"), QIndex::minus(1, 0)), int(0));
        assert_eq!(q_value(&p("3,2,1"), QIndex::plus(0, 1)), int(8));
        assert_eq!(q_value(&p("4"), QIndex::minus(1, 0)), int(6));
    }

    #[test]
    fn q_conjugate_examples() {
        assert_eq!(q_via_conjugate(&p("3,1"), QIndex::plus(1, 0)), int(4));
        assert_eq!(q_value(&p("3,1"), QIndex::plus(1, 0)), int(4));
        assert_eq!(q_via_conjugate(&p("5,2,2"), QIndex::minus(3, 3)), int(0));
        assert_eq!(q_via_conjugate(&p("3,2,1"), QIndex::plus(0, 1)), int(8));
    }

    // The expanded low-order forms, kept as fixtures separate from p_via_q.
    fn p1_fixture(mu: &Partition) -> BigInt {
        q_value(mu, QIndex::minus(1, 0))
    }

    fn p2_fixture(mu: &Partition) -> BigInt {
        q_value(mu, QIndex::plus(0, 1)) + q_value(mu, QIndex::plus(0, 2)) * 2
            - q_value(mu, QIndex::plus(1, 1))
    }

    fn p3_fixture(mu: &Partition) -> BigInt {
        q_value(mu, QIndex::minus(1, 0))
            + q_value(mu, QIndex::minus(2, 0)) * 6
            + q_value(mu, QIndex::minus(3, 0)) * 6
            - q_value(mu, QIndex::minus(2, 1)) * 6
    }

    #[test]
    fn p_via_q_examples() {
        let mu = p("3,2,1");
        assert_eq!(p_via_q(&mu, 2), int(10));
        assert_eq!(p2_fixture(&mu), int(10));
        assert_eq!(p_via_q(&mu, 3), int(0));
        assert_eq!(p_via_q(&p("5"), 0), int(5));
        assert_eq!(q_value(&p("5"), QIndex::plus(0, 0)), int(10));
    }

    #[test]
    fn low_order_expansions_match() {
        for n in 1..=10 {
            for mu in generate_partitions(n) {
                assert_eq!(p1_fixture(&mu), content_power_sum(&mu, 1));
                assert_eq!(p2_fixture(&mu), content_power_sum(&mu, 2));
                assert_eq!(p3_fixture(&mu), content_power_sum(&mu, 3));
            }
        }
    }

    #[test]
    fn p_via_q_matches_direct_sum() {
        for n in 1..=10 {
            for mu in generate_partitions(n) {
                for l in 0..=8 {
                    assert_eq!(p_via_q(&mu, l), content_power_sum(&mu, l as u32), "({mu}), l={l}");
                }
            }
        }
    }

    #[test]
    fn q_symmetries_and_conjugate_form() {
        for n in 1..=10 {
            for mu in generate_partitions(n) {
                for r in 0..=6 {
                    for t in 0..=6 {
                        let minus = q_value(&mu, QIndex::minus(r, t));
                        assert_eq!(&minus, &-q_value(&mu, QIndex::minus(t, r)));
                        assert_eq!(q_value(&mu, QIndex::plus(r, t)), q_value(&mu, QIndex::plus(t, r)));
                        assert_eq!(q_via_conjugate(&mu, QIndex::minus(r, t)), minus);
                        assert_eq!(
                            q_via_conjugate(&mu, QIndex::plus(r, t)),
                            q_value(&mu, QIndex::plus(r, t))
                        );
                    }
                    assert!(q_value(&mu, QIndex::minus(r, r)).is_zero());
                }
            }
        }
    }

    #[test]
    fn weighted_row_sum_equals_column_pairs() {
        for n in 1..=14 {
            for mu in generate_partitions(n) {
                let lhs: BigInt = mu.parts().iter().enumerate().map(|(i, &m)| BigInt::from(m * i)).sum();
                let rhs: BigInt = mu.conjugate().parts().iter().map(|&c| choose(c, 2)).sum();
                assert_eq!(lhs, rhs);
                assert_eq!(q_value(&mu, QIndex::plus(0, 0)), int(2 * n as i64));
            }
        }
    }

    #[test]
    fn conjugate_identity_examples() {
        assert!(conjugate_identity_holds(&p("3,1"), &p("2,1,1"), 6, 6).passed());
        let rejected = conjugate_identity_holds(&p("3,1"), &p("3,1"), 6, 6);
        assert!(!rejected.passed());
        assert!(rejected.first_failure().is_some());
        assert!(conjugate_identity_holds(&p("2,1"), &p("2,1"), 6, 6).passed());
    }

    #[test]
    fn conjugate_identity_both_directions() {
        for n in 1..=8 {
            let all = generate_partitions(n);
            for mu in &all {
                let conj = mu.conjugate();
                assert!(conjugate_identity_holds(mu, &conj, 6, 6).passed());
                for cand in &all {
                    if *cand == conj {
                        continue;
                    }
                    let g = rejection_grid(mu, cand);
                    assert!(!conjugate_identity_holds(mu, cand, g, g).passed(), "{mu} vs {cand}");
                }
            }
        }
    }
}
