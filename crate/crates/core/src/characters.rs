//! Irreducible characters of the symmetric group.
//!
//! [`chi_small`] and [`chi_small_qform`] evaluate closed expressions for
//! cycle types `(m, 1^{n-m})`, `2 <= m <= 6`, and `(2, 2, 1^{n-4})` in terms
//! of content power sums or `q` statistics. [`chi_mn`] is the general
//! Murnaghan–Nakayama recursion they are checked against, and
//! [`frobenius_skew`] expands `f^{μ/λ}` as a class-weighted sum of
//! character products.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{choose, falling_nat};
use crate::content::{content_power_sum, q_value, QIndex};
use crate::oracles::hook_count;
use crate::partition::{generate_partitions, CycleType, Partition};
use crate::{Error, ExactInteger, ExactRational, Result};

/// Cycle types with a closed character expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmallSupport {
    Two,
    Three,
    Four,
    Five,
    Six,
    TwoTwo,
}

impl SmallSupport {
    pub const ALL: [SmallSupport; 6] = [
        SmallSupport::Two,
        SmallSupport::Three,
        SmallSupport::Four,
        SmallSupport::Five,
        SmallSupport::Six,
        SmallSupport::TwoTwo,
    ];

    /// Supports that also have a `q`-statistic form.
    pub const QFORM: [SmallSupport; 4] = [
        SmallSupport::Two,
        SmallSupport::Three,
        SmallSupport::Four,
        SmallSupport::TwoTwo,
    ];

    pub fn cycles(self) -> &'static [usize] {
        match self {
            SmallSupport::Two => &[2],
            SmallSupport::Three => &[3],
            SmallSupport::Four => &[4],
            SmallSupport::Five => &[5],
            SmallSupport::Six => &[6],
            SmallSupport::TwoTwo => &[2, 2],
        }
    }

    /// Number of points moved.
    pub fn size(self) -> usize {
        self.cycles().iter().sum()
    }

    /// Matches the non-fixed cycles of a cycle type.
    pub fn from_cycles(cycles: &[usize]) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.cycles() == cycles)
    }

    pub fn cycle_type(self, n: usize) -> Result<CycleType> {
        let partition = Partition::new(self.cycles().to_vec())?;
        CycleType::new(partition, n)
    }
}

impl fmt::Display for SmallSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycles().iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SmallSupport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = crate::partition::parse_parts(s)?;
        let big: Vec<usize> = parts.into_iter().filter(|&p| p > 1).collect();
        Self::from_cycles(&big).ok_or_else(|| Error::UnsupportedSupport(s.to_string()))
    }
}

fn rat(v: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn n_term(n: usize, offset: i64) -> BigInt {
    BigInt::from(n as i64 + offset)
}

fn integral(value: ExactRational, what: impl FnOnce() -> String) -> ExactInteger {
    assert!(value.is_integer(), "non-integral value {value} for {}", what());
    value.to_integer()
}

fn check_degree(mu: &Partition, support: SmallSupport) -> Result<()> {
    if mu.size() < support.size() {
        return Err(Error::TooSmall {
            n: mu.size(),
            min: support.size(),
        });
    }
    Ok(())
}

/// `f^μ / [n]_m` as a rational.
fn scale(mu: &Partition, m: usize) -> ExactRational {
    ExactRational::new(hook_count(mu), falling_nat(mu.size(), m))
}

/// Total coefficient of `p_3` in the 6-cycle numerator.
#[derive(Clone, Copy)]
enum SixCycleP3 {
    /// `6(25 − 4n)`
    Corrected,
    /// `24(7 − n)`, the older published value
    Uncorrected,
}

fn six_cycle(mu: &Partition, p3_coefficient: SixCycleP3) -> ExactRational {
    let n = mu.size();
    let p1 = content_power_sum(mu, 1);
    let p2 = content_power_sum(mu, 2);
    let p3 = content_power_sum(mu, 3);
    let p5 = content_power_sum(mu, 5);
    let p3_term = match p3_coefficient {
        SixCycleP3::Corrected => BigInt::from(6) * n_term(0, 25 - 4 * n as i64) * &p3,
        SixCycleP3::Uncorrected => BigInt::from(24) * n_term(0, 7 - n as i64) * &p3,
    };
    let numerator = BigInt::from(6) * p5
        + p3_term
        + BigInt::from(6) * BigInt::from(2) * n_term(3 * n, -4) * n_term(n, -5) * &p1
        - BigInt::from(36) * &p1 * &p2;
    scale(mu, 6) * rat(numerator)
}

/// `χ^μ(support, 1^{n−|support|})` from content power sums.
pub fn chi_small(mu: &Partition, support: SmallSupport) -> Result<ExactInteger> {
    check_degree(mu, support)?;
    let n = mu.size();
    let p = |l| content_power_sum(mu, l);
    let value = match support {
        SmallSupport::Two => scale(mu, 2) * rat(BigInt::from(2) * p(1)),
        SmallSupport::Three => scale(mu, 3) * rat(BigInt::from(3) * (p(2) - choose(n, 2))),
        SmallSupport::Four => scale(mu, 4) * rat(BigInt::from(4) * (p(3) - n_term(2 * n, -3) * p(1))),
        SmallSupport::Five => {
            let p1 = p(1);
            let bracket = p(4) - n_term(3 * n, -10) * p(2) - BigInt::from(2) * &p1 * &p1
                + BigInt::from(5) * choose(n, 3)
                - BigInt::from(3) * choose(n, 2);
            scale(mu, 5) * rat(BigInt::from(5) * bracket)
        }
        SmallSupport::Six => six_cycle(mu, SixCycleP3::Corrected),
        SmallSupport::TwoTwo => {
            let p1 = p(1);
            let bracket = &p1 * &p1 - BigInt::from(3) * p(2) + BigInt::from(2) * choose(n, 2);
            scale(mu, 4) * rat(BigInt::from(4) * bracket)
        }
    };
    Ok(integral(value, || format!("chi^({mu})({support})")))
}

/// Same values as [`chi_small`], written in the `q` statistics. Only the
/// supports in [`SmallSupport::QFORM`] have this form.
pub fn chi_small_qform(mu: &Partition, support: SmallSupport) -> Result<ExactInteger> {
    if !SmallSupport::QFORM.contains(&support) {
        return Err(Error::UnsupportedSupport(support.to_string()));
    }
    check_degree(mu, support)?;
    let n = mu.size();
    let qm = |r, t| q_value(mu, QIndex::minus(r, t));
    let qp = |r, t| q_value(mu, QIndex::plus(r, t));
    let value = match support {
        SmallSupport::Two => scale(mu, 2) * rat(BigInt::from(2) * qm(1, 0)),
        SmallSupport::Three => {
            let bracket = qp(0, 1) + BigInt::from(2) * qp(0, 2) - qp(1, 1) - choose(n, 2);
            scale(mu, 3) * rat(BigInt::from(3) * bracket)
        }
        SmallSupport::Four => {
            let bracket = n_term(0, 4 - 2 * n as i64) * qm(1, 0)
                + BigInt::from(6) * qm(2, 0)
                + BigInt::from(6) * qm(3, 0)
                - BigInt::from(6) * qm(2, 1);
            scale(mu, 4) * rat(BigInt::from(4) * bracket)
        }
        SmallSupport::TwoTwo => {
            let q10 = qm(1, 0);
            let bracket = &q10 * &q10 - BigInt::from(3) * qp(0, 1) - BigInt::from(6) * qp(0, 2)
                + BigInt::from(3) * qp(1, 1)
                + BigInt::from(2) * choose(n, 2);
            scale(mu, 4) * rat(BigInt::from(4) * bracket)
        }
        SmallSupport::Five | SmallSupport::Six => unreachable!(),
    };
    Ok(integral(value, || format!("q-form chi^({mu})({support})")))
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_memo() -> &'static Mutex<HashMap<MnKey, ExactInteger>> {
    static MEMO: OnceLock<Mutex<HashMap<MnKey, ExactInteger>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shapes left after removing one border strip of length `len`, with the
/// strip's sign `(−1)^{height−1}`.
fn remove_border_strips(shape: &[usize], len: usize) -> Vec<(Vec<usize>, bool)> {
    let k = shape.len();
    // beta numbers, strictly decreasing
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (k - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, crossed % 2 == 1));
    }
    out
}

fn mn(shape: &[usize], cycles: &[usize]) -> ExactInteger {
    let Some((&first, rest)) = cycles.split_first() else {
        let p = Partition::new(shape.to_vec()).expect("border strip removal keeps a partition");
        return hook_count(&p);
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = mn_memo().lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (smaller, negative) in remove_border_strips(shape, first) {
        let v = mn(&smaller, rest);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    mn_memo().lock().unwrap().insert(key, total.clone());
    total
}

/// `χ^μ(cls)` by the Murnaghan–Nakayama rule.
///
/// Cycles are stripped longest first; once only fixed points remain the
/// value is the hook-length count of what is left.
pub fn chi_mn(mu: &Partition, cls: &CycleType) -> Result<ExactInteger> {
    if cls.degree() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: mu.size(),
            actual: cls.degree(),
        });
    }
    let mut cycles = cls.nontrivial();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mn(mu.parts(), &cycles))
}

/// `f^{μ/λ} = Σ_{ν ⊢ |λ|} z_ν^{-1} χ^μ(ν, 1^{n−|λ|}) χ^λ(ν)`.
///
/// When `λ` does not fit inside `μ` the sum is 0.
pub fn frobenius_skew(mu: &Partition, lam: &Partition) -> Result<ExactInteger> {
    let n = mu.size();
    let m = lam.size();
    if m > n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: m,
        });
    }
    let mut total = ExactRational::zero();
    for nu in generate_partitions(m) {
        let outer = chi_mn(mu, &CycleType::new(nu.clone(), n)?)?;
        let inner = chi_mn(lam, &CycleType::new(nu.clone(), m)?)?;
        total += ExactRational::new(outer * inner, nu.z_factor());
    }
    let value = integral(total, || format!("f^({mu})/({lam})"));
    assert!(!value.is_negative(), "negative skew count for ({mu})/({lam})");
    Ok(value)
}

/// Mismatch counts of the 6-cycle expression against [`chi_mn`] over all
/// `μ ⊢ n`, for the current `p_3` coefficient and the older one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixCycleAudit {
    pub n: usize,
    pub partitions: usize,
    /// Partitions with `p_3[C(μ)] != 0`; only these can tell the two apart.
    pub nonzero_p3: usize,
    pub corrected_mismatches: usize,
    pub uncorrected_mismatches: usize,
}

pub fn audit_six_cycle(n: usize) -> Result<SixCycleAudit> {
    if n < 6 {
        return Err(Error::TooSmall { n, min: 6 });
    }
    let cls = SmallSupport::Six.cycle_type(n)?;
    let mut audit = SixCycleAudit {
        n,
        partitions: 0,
        nonzero_p3: 0,
        corrected_mismatches: 0,
        uncorrected_mismatches: 0,
    };
    for mu in generate_partitions(n) {
        let truth = rat(chi_mn(&mu, &cls)?);
        audit.partitions += 1;
        if !content_power_sum(&mu, 3).is_zero() {
            audit.nonzero_p3 += 1;
        }
        if six_cycle(&mu, SixCycleP3::Corrected) != truth {
            audit.corrected_mismatches += 1;
        }
        if six_cycle(&mu, SixCycleP3::Uncorrected) != truth {
            audit.uncorrected_mismatches += 1;
        }
    }
    Ok(audit)
}

/// `Σ_{λ ⊢ n} z_λ^{-1} χ^μ(λ) χ^ν(λ)`; 1 when `μ = ν`, else 0.
pub fn inner_product(mu: &Partition, nu: &Partition) -> Result<ExactRational> {
    let n = mu.size();
    let mut total = ExactRational::zero();
    for lam in generate_partitions(n) {
        let cls = CycleType::new(lam.clone(), n)?;
        total += ExactRational::new(chi_mn(mu, &cls)? * chi_mn(nu, &cls)?, lam.z_factor());
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ct(s: &str, n: usize) -> CycleType {
        CycleType::new(p(s), n).unwrap()
    }

    #[test]
    fn chi_small_examples() {
        assert_eq!(chi_small(&p("2,1"), SmallSupport::Two).unwrap(), int(0));
        assert_eq!(chi_small(&p("2,1"), SmallSupport::Three).unwrap(), int(-1));
        assert_eq!(chi_small(&p("3,2,1"), SmallSupport::Three).unwrap(), int(-2));
        assert_eq!(
            chi_small(&p("2,1"), SmallSupport::Four),
            Err(Error::TooSmall { n: 3, min: 4 })
        );
    }

    #[test]
    fn chi_mn_examples() {
        assert_eq!(chi_mn(&p("2,1"), &ct("1,1,1", 3)).unwrap(), int(2));
        assert_eq!(chi_mn(&p("1,1,1"), &ct("2,1", 3)).unwrap(), int(-1));
        assert_eq!(chi_mn(&p("2,1"), &ct("3", 3)).unwrap(), int(-1));
        for cls in ["5", "3,2", "2,2,1", "4,1", "1^5"] {
            assert_eq!(chi_mn(&p("5"), &ct(cls, 5)).unwrap(), int(1));
        }
        assert!(matches!(chi_mn(&p("2,1"), &ct("2", 4)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn s4_character_table() {
        // rows: (4),(3,1),(2,2),(2,1,1),(1^4); columns: 1^4, 2, 2^2, 3, 4
        let table = [
            [1, 1, 1, 1, 1],
            [3, 1, -1, 0, -1],
            [2, 0, 2, -1, 0],
            [3, -1, -1, 0, 1],
            [1, -1, 1, 1, -1],
        ];
        let classes = ["1", "2", "2,2", "3", "4"];
        for (mu, row) in generate_partitions(4).iter().zip(table) {
            for (cls, expected) in classes.iter().zip(row) {
                assert_eq!(chi_mn(mu, &ct(cls, 4)).unwrap(), int(expected), "{mu} at {cls}");
            }
        }
    }

    #[test]
    fn qform_examples() {
        assert_eq!(chi_small_qform(&p("3,2,1"), SmallSupport::Two).unwrap(), int(0));
        assert_eq!(chi_small_qform(&p("3,2,1"), SmallSupport::Three).unwrap(), int(-2));
        assert_eq!(chi_small_qform(&p("4"), SmallSupport::Two).unwrap(), int(1));
        assert!(matches!(
            chi_small_qform(&p("6"), SmallSupport::Five),
            Err(Error::UnsupportedSupport(_))
        ));
    }

    #[test]
    fn closed_characters_match_mn() {
        for n in 2..=10 {
            for mu in generate_partitions(n) {
                for support in SmallSupport::ALL {
                    if n < support.size() {
                        continue;
                    }
                    let truth = chi_mn(&mu, &support.cycle_type(n).unwrap()).unwrap();
                    assert_eq!(chi_small(&mu, support).unwrap(), truth, "({mu}) at {support}");
                    if SmallSupport::QFORM.contains(&support) {
                        assert_eq!(chi_small_qform(&mu, support).unwrap(), truth);
                    }
                }
            }
        }
    }

    #[test]
    fn six_cycle_audit() {
        for n in 6..=9 {
            let audit = audit_six_cycle(n).unwrap();
            assert_eq!(audit.corrected_mismatches, 0);
            assert!(audit.uncorrected_mismatches >= 1);
            assert_eq!(audit.uncorrected_mismatches, audit.nonzero_p3);
        }
        assert!(audit_six_cycle(5).is_err());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_skew(&p("3,2,1"), &p("3")).unwrap(), int(2));
        assert_eq!(frobenius_skew(&p("3,2,1"), &p("2")).unwrap(), int(8));
        assert_eq!(frobenius_skew(&p("2,2"), &p("3")).unwrap(), int(0));
        assert_eq!(frobenius_skew(&p("3,2,1"), &Partition::empty()).unwrap(), int(16));
        assert!(frobenius_skew(&p("2"), &p("3")).is_err());
    }

    #[test]
    fn orthogonality() {
        for n in 1..=6 {
            let all = generate_partitions(n);
            for a in &all {
                for b in &all {
                    let expected = if a == b { ExactRational::one() } else { ExactRational::zero() };
                    assert_eq!(inner_product(a, b).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn support_parsing() {
        assert_eq!("3,1^3".parse::<SmallSupport>().unwrap(), SmallSupport::Three);
        assert_eq!("2,2,1".parse::<SmallSupport>().unwrap(), SmallSupport::TwoTwo);
        assert!("3,2".parse::<SmallSupport>().is_err());
    }
}
