//! Exact scalar combinatorics: binomials, falling factorials, Stirling
//! numbers of the second kind, `𝒞(r,t) = t!·S(r+1,t+1)`, the product
//! `φ_l(h,r,t)`, power sums `R_l(t)`, and checkers for the identities that
//! tie them together.

use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::report::VerificationReport;
use crate::{Error, ExactInteger, ExactRational, Result};

/// Binomial coefficient with the zero-outside-range convention.
///
/// Returns 0 for `b < 0` and for `0 <= a < b`. For negative `a` the
/// generalized value `a(a-1)…(a-b+1)/b!` is returned.
pub fn binomial(a: i64, b: i64) -> ExactInteger {
    if b < 0 || (a >= 0 && b > a) {
        return BigInt::zero();
    }
    // symmetric shortcut only valid for a >= 0
    let b = if a >= 0 && b > a - b { a - b } else { b };
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `C(a, b)` for unsigned arguments; the common case in row statistics.
pub(crate) fn choose(a: usize, b: usize) -> ExactInteger {
    binomial(a as i64, b as i64)
}

/// `[z]_n = z(z-1)…(z-n+1)`, with `[z]_0 = 1`.
pub fn falling_factorial(z: &ExactRational, n: u32) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut term = z.clone();
    for _ in 0..n {
        acc *= &term;
        term -= ExactRational::one();
    }
    acc
}

/// `[n]_m` for a natural number `n`, as an integer.
pub(crate) fn falling_nat(n: usize, m: usize) -> ExactInteger {
    (0..m).fold(BigInt::one(), |acc, i| acc * (n as i64 - i as i64))
}

/// Binomial with rational upper index: `[z]_k / k!`.
pub fn binomial_rational(z: &ExactRational, k: u32) -> ExactRational {
    falling_factorial(z, k) / ExactRational::from_integer(factorial(k as usize))
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

pub fn factorial(n: usize) -> ExactInteger {
    let mut table = FACTORIALS.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * k;
        table.push(next);
    }
    table[n].clone()
}

// Row `n` holds S(n, 0..=n).
static STIRLING2: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());

/// Stirling number of the second kind `S(n, k)`.
///
/// Built row by row from `S(n+1,k+1) = S(n,k) + (k+1)S(n,k+1)` and cached
/// for the lifetime of the process.
pub fn stirling2(n: usize, k: usize) -> ExactInteger {
    if k > n {
        return BigInt::zero();
    }
    let mut rows = STIRLING2.lock().unwrap();
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut row = vec![BigInt::zero(); m + 1];
        for j in 0..m {
            // S(m, j+1) = S(m-1, j) + (j+1) S(m-1, j+1)
            let mut v = prev[j].clone();
            if j + 1 < m {
                v += &prev[j + 1] * (j + 1);
            }
            row[j + 1] = v;
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `𝒞(r, t) = t!·S(r+1, t+1)`; zero when `t > r`.
pub fn c_number(r: usize, t: usize) -> ExactInteger {
    if t > r {
        return BigInt::zero();
    }
    factorial(t) * stirling2(r + 1, t + 1)
}

/// `φ_l(h, r, t) = C(l, h)·𝒞(h, r)·𝒞(l-h, t)`.
pub fn phi(l: usize, h: usize, r: usize, t: usize) -> Result<ExactInteger> {
    if h > l {
        return Err(Error::IndexOutOfRange {
            h: h as u32,
            l: l as u32,
        });
    }
    Ok(choose(l, h) * c_number(h, r) * c_number(l - h, t))
}

/// `R_l(t) = 1^l + 2^l + … + t^l`.
pub fn power_sum_range(l: u32, t: u64) -> ExactInteger {
    (1..=t).map(|i| BigInt::from(i).pow(l)).sum()
}

/// The identities of this module that can be checked exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithIdentity {
    /// `R_{l+1}(t) = (t+1)R_l(t) - Σ_{i=1}^t R_l(i)`
    RRecurrence,
    /// `R_l(t) = Σ_{i=0}^l 𝒞(l,i)·C(t, i+1)`
    RClosedForm,
    /// `z^l = Σ_{i=0}^l 𝒞(l,i)·C(z-1, i)`
    MonomialExpansion,
    /// `Σ_{k=0}^l C(k,m) = C(l+1, m+1)`
    HockeyStick,
    /// `𝒞(r,t) = t·𝒞(r-1,t-1) + (t+1)·𝒞(r-1,t)`
    CRecurrence,
}

impl ArithIdentity {
    pub const ALL: [ArithIdentity; 5] = [
        ArithIdentity::RRecurrence,
        ArithIdentity::RClosedForm,
        ArithIdentity::MonomialExpansion,
        ArithIdentity::HockeyStick,
        ArithIdentity::CRecurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArithIdentity::RRecurrence => "R-recurrence",
            ArithIdentity::RClosedForm => "R-closed-form",
            ArithIdentity::MonomialExpansion => "monomial-expansion",
            ArithIdentity::HockeyStick => "hockey-stick",
            ArithIdentity::CRecurrence => "C-recurrence",
        }
    }

    /// Grid each identity is checked on when no bounds are given.
    pub fn default_bounds(self) -> ArithBounds {
        match self {
            ArithIdentity::RRecurrence | ArithIdentity::RClosedForm => ArithBounds {
                l_max: 8,
                t_max: 30,
                z_points: Vec::new(),
            },
            ArithIdentity::MonomialExpansion => {
                let mut z_points: Vec<ExactRational> =
                    (-5..=20).map(|z| ExactRational::from_integer(z.into())).collect();
                for (num, den) in [(7, 2), (1, 2), (-5, 3), (22, 7)] {
                    z_points.push(ExactRational::new(num.into(), den.into()));
                }
                ArithBounds {
                    l_max: 8,
                    t_max: 0,
                    z_points,
                }
            }
            ArithIdentity::HockeyStick => ArithBounds {
                l_max: 30,
                t_max: 30,
                z_points: Vec::new(),
            },
            ArithIdentity::CRecurrence => ArithBounds {
                l_max: 10,
                t_max: 10,
                z_points: Vec::new(),
            },
        }
    }
}

impl FromStr for ArithIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Exhaustive test grid.
///
/// `l_max` bounds the exponent (`r` for the 𝒞 recurrence), `t_max` the
/// second integer index (`m` for the hockey stick), and `z_points` lists the
/// evaluation points of the monomial expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithBounds {
    pub l_max: u32,
    pub t_max: u32,
    pub z_points: Vec<ExactRational>,
}

/// Evaluates both sides of `identity` at every point of `bounds`.
pub fn check_arith_identity(identity: ArithIdentity, bounds: &ArithBounds) -> VerificationReport {
    let name = identity.name();
    VerificationReport::timed(name, |report| match identity {
        ArithIdentity::RRecurrence => {
            for l in 0..=bounds.l_max {
                for t in 0..=bounds.t_max as u64 {
                    let lhs = power_sum_range(l + 1, t);
                    let tail: BigInt = (1..=t).map(|i| power_sum_range(l, i)).sum();
                    let rhs = BigInt::from(t + 1) * power_sum_range(l, t) - tail;
                    report.check(name, || format!("l={l}, t={t}"), &lhs, &rhs);
                }
            }
        }
        ArithIdentity::RClosedForm => {
            for l in 0..=bounds.l_max as usize {
                for t in 0..=bounds.t_max as usize {
                    let lhs = power_sum_range(l as u32, t as u64);
                    let rhs: BigInt = (0..=l).map(|i| c_number(l, i) * choose(t, i + 1)).sum();
                    report.check(name, || format!("l={l}, t={t}"), &lhs, &rhs);
                }
            }
        }
        ArithIdentity::MonomialExpansion => {
            for l in 0..=bounds.l_max as usize {
                for z in &bounds.z_points {
                    let lhs = z.pow(l as i32);
                    let shifted = z - ExactRational::one();
                    let rhs: ExactRational = (0..=l)
                        .map(|i| {
                            ExactRational::from_integer(c_number(l, i))
                                * binomial_rational(&shifted, i as u32)
                        })
                        .sum();
                    report.check(name, || format!("l={l}, z={z}"), &lhs, &rhs);
                }
            }
        }
        ArithIdentity::HockeyStick => {
            for l in 0..=bounds.l_max as i64 {
                for m in 0..=bounds.t_max as i64 {
                    let lhs: BigInt = (0..=l).map(|k| binomial(k, m)).sum();
                    let rhs = binomial(l + 1, m + 1);
                    report.check(name, || format!("l={l}, m={m}"), &lhs, &rhs);
                }
            }
        }
        ArithIdentity::CRecurrence => {
            for r in 0..=bounds.l_max as usize {
                for t in 0..=bounds.t_max as usize {
                    let lhs = c_number(r, t);
                    let rhs = if r == 0 {
                        if t == 0 { BigInt::one() } else { BigInt::zero() }
                    } else {
                        let down = if t == 0 { BigInt::zero() } else { c_number(r - 1, t - 1) * t };
                        down + c_number(r - 1, t) * (t + 1)
                    };
                    report.check(name, || format!("r={r}, t={t}"), &lhs, &rhs);
                }
            }
        }
    })
}

/// Name-based entry point used by the CLI.
pub fn check_arith_identity_named(name: &str, bounds: Option<&ArithBounds>) -> Result<VerificationReport> {
    let id: ArithIdentity = name.parse()?;
    let default = id.default_bounds();
    Ok(check_arith_identity(id, bounds.unwrap_or(&default)))
}
