//! Closed forms for `f^{μ/(m)}`, `m = 2, 3, 4`, and the hook-weight Kostka
//! numbers `K(μ, (m, 1^{n−m})) = f^{μ/(m)}`.
//!
//! Each variant is written out independently from its own expression so
//! that the variants cross-check one another.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{choose, falling_nat};
use crate::characters::frobenius_skew;
use crate::content::{q_value, QIndex};
use crate::oracles::hook_count;
use crate::partition::Partition;
use crate::{Error, ExactInteger, ExactRational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum M2Variant {
    /// Row and column pair counts: `Σ C(μ_i,2) − Σ C(μ'_j,2) + C(n,2)`.
    Knuth,
    /// Rows only: `Σ (C(μ_i,2) − μ_i(i−1)) + C(n,2)`.
    Schur,
    /// `q^-_{1,0} + C(n,2)`.
    QForm,
}

impl M2Variant {
    pub const ALL: [M2Variant; 3] = [M2Variant::Knuth, M2Variant::Schur, M2Variant::QForm];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum M3Variant {
    /// Row sums of binomials in `μ_i` and `i`.
    Expanded,
    /// In terms of `q^±`.
    QForm,
    /// Row sums over `μ` paired with column sums over `μ'`.
    ConjugateForm,
}

impl M3Variant {
    pub const ALL: [M3Variant; 3] = [M3Variant::Expanded, M3Variant::QForm, M3Variant::ConjugateForm];
}

fn require_domain(mu: &Partition, m: usize) -> Result<()> {
    if mu.size() < m {
        return Err(Error::TooSmall { n: mu.size(), min: m });
    }
    if mu.first_row() < m {
        return Err(Error::FirstRowTooShort {
            mu: mu.to_string(),
            m,
        });
    }
    Ok(())
}

/// `f^μ · bracket / [n]_m`, which must be an integer.
fn finish(mu: &Partition, m: usize, bracket: ExactRational) -> ExactInteger {
    let value = bracket * hook_count(mu) / ExactRational::from_integer(falling_nat(mu.size(), m));
    assert!(value.is_integer(), "f^({mu})/({m}) is not integral: {value}");
    value.to_integer()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rows<F: Fn(usize, usize) -> BigInt>(mu: &Partition, term: F) -> BigInt {
    // term(μ_i, i − 1)
    mu.parts().iter().enumerate().map(|(i, &len)| term(len, i)).sum()
}

/// `f^{μ/(2)}`.
pub fn skew_count_m2(mu: &Partition, variant: M2Variant) -> Result<ExactInteger> {
    require_domain(mu, 2)?;
    let n = mu.size();
    let bracket = match variant {
        M2Variant::Knuth => {
            rows(mu, |len, _| choose(len, 2)) - rows(&mu.conjugate(), |len, _| choose(len, 2)) + choose(n, 2)
        }
        M2Variant::Schur => rows(mu, |len, i| choose(len, 2) - int((len * i) as i64)) + choose(n, 2),
        M2Variant::QForm => q_value(mu, QIndex::minus(1, 0)) + choose(n, 2),
    };
    Ok(finish(mu, 2, bracket.into()))
}

/// `f^{μ/(3)}`.
pub fn skew_count_m3(mu: &Partition, variant: M3Variant) -> Result<ExactInteger> {
    require_domain(mu, 3)?;
    let n = mu.size();
    let tail = choose(n, 3) - choose(n, 2);
    let bracket = match variant {
        M3Variant::Expanded => {
            let first = rows(mu, |len, i| int((len * i) as i64) + choose(len, 2));
            let second = rows(mu, |len, i| choose(len, 2) - int((len * i) as i64));
            let third = rows(mu, |len, i| int(len as i64) * choose(i, 2) + choose(len, 3));
            let fourth = rows(mu, |len, i| choose(len, 2) * int(i as i64));
            first + int(n as i64 - 2) * second + int(2) * third - int(2) * fourth + tail
        }
        M3Variant::QForm => {
            let qp = |r, t| q_value(mu, QIndex::plus(r, t));
            qp(0, 1) + int(2) * qp(0, 2) - qp(1, 1)
                + int(n as i64 - 2) * q_value(mu, QIndex::minus(1, 0))
                + tail
        }
        M3Variant::ConjugateForm => {
            let conj = mu.conjugate();
            let pairs_rows = rows(mu, |len, _| choose(len, 2));
            let pairs_cols = rows(&conj, |len, _| choose(len, 2));
            let triples = rows(mu, |len, _| choose(len, 3)) + rows(&conj, |len, _| choose(len, 3));
            let weighted = rows(mu, |len, i| choose(len, 2) * int(i as i64))
                + rows(&conj, |len, j| choose(len, 2) * int(j as i64));
            (&pairs_rows + &pairs_cols) + int(2) * triples - weighted
                + int(n as i64 - 2) * (pairs_rows - pairs_cols)
                + tail
        }
    };
    Ok(finish(mu, 3, bracket.into()))
}

/// `f^{μ/(4)}`. Several coefficients are half-integers; the bracket is
/// summed as a rational and only the final quotient must be integral.
pub fn skew_count_m4(mu: &Partition) -> Result<ExactInteger> {
    require_domain(mu, 4)?;
    let n = mu.size() as i64;
    let half = |v: BigInt| ExactRational::new(v, int(2));
    let whole = ExactRational::from_integer;
    let qm = |r, t| q_value(mu, QIndex::minus(r, t));
    let qp = |r, t| q_value(mu, QIndex::plus(r, t));
    let q10 = qm(1, 0);

    let minus_part = half(int((n - 2) * (n - 7)) * &q10)
        + whole(int(6) * qm(2, 0) + int(6) * qm(3, 0) - int(6) * qm(2, 1))
        + half(&q10 * &q10);
    // n − 9/2 = (2n − 9)/2
    let plus_part = half(int(2 * n - 9) * qp(0, 1)) + whole(int(2 * n - 9) * qp(0, 2))
        - half(int(2 * n - 9) * qp(1, 1));
    let nu = n as usize;
    let constant = whole(choose(nu, 4) - int(3) * choose(nu, 3) + int(2) * choose(nu, 2));
    Ok(finish(mu, 4, minus_part + plus_part + constant))
}

/// `K(μ, (m, 1^{n−m}))`.
///
/// Zero when the first row is shorter than `m`. Otherwise `m = 1` is the
/// hook-length count, `m = 2, 3, 4` use the closed forms, and larger `m`
/// falls back to [`frobenius_skew`].
pub fn kostka_hook(mu: &Partition, m: usize) -> Result<ExactInteger> {
    let n = mu.size();
    if m < 1 || m > n {
        return Err(Error::MOutOfRange { m, n });
    }
    if mu.first_row() < m {
        return Ok(BigInt::zero());
    }
    if m == n {
        // only (n) has a first row of length n
        return Ok(BigInt::from(1));
    }
    match m {
        1 => Ok(hook_count(mu)),
        2 => skew_count_m2(mu, M2Variant::Knuth),
        3 => skew_count_m3(mu, M3Variant::QForm),
        4 => skew_count_m4(mu),
        _ => frobenius_skew(mu, &Partition::row(m)),
    }
}

/// Dispatches to the closed form for `m ∈ {1, 2, 3, 4}`, `m = 1` being
/// the hook-length formula. Refuses shapes whose first row is shorter than
/// `m`.
pub fn skew_count_closed(mu: &Partition, m: usize) -> Result<ExactInteger> {
    match m {
        1 => {
            require_domain(mu, 1)?;
            Ok(hook_count(mu))
        }
        2 => skew_count_m2(mu, M2Variant::Knuth),
        3 => skew_count_m3(mu, M3Variant::QForm),
        4 => skew_count_m4(mu),
        _ => Err(Error::NoClosedForm(m)),
    }
}
