//! Ground-truth counts that the closed forms are checked against: the hook
//! length formula, exhaustive enumeration of (skew) standard and
//! semistandard tableaux, and a determinant for skew shapes.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::factorial;
use crate::partition::{parse_parts, Partition, SkewShape};
use crate::{Error, ExactInteger, ExactRational, Result};

/// Default cell limit for the enumeration oracles.
pub const DEFAULT_ENUM_CAP: usize = 14;

/// `f^μ = n! / ∏ hook lengths`.
pub fn hook_count(mu: &Partition) -> ExactInteger {
    let conj = mu.conjugate();
    let hooks = mu.cells().fold(BigInt::one(), |acc, (i, j)| {
        let arm = mu.part(i - 1) - j;
        let leg = conj.part(j - 1) - i;
        acc * (arm + leg + 1)
    });
    let n_fact = factorial(mu.size());
    assert!(
        (&n_fact % &hooks).is_zero(),
        "hook product does not divide n! for ({mu})"
    );
    n_fact / hooks
}

/// Counts skew SYT of `shape` by placing `1, 2, …, N` one at a time.
///
/// Entry `k+1` may go at the end of row `i` when that row still has room in
/// the outer shape and the cell above it is already filled. Cells of the
/// inner shape count as filled from the start, so disconnected shapes need
/// no special handling.
pub fn enumerate_skew_syt(shape: &SkewShape, cap: usize) -> Result<ExactInteger> {
    let cells = shape.cell_count();
    if cells > cap {
        return Err(Error::CapExceeded { cells, cap });
    }
    let outer = shape.outer().parts().to_vec();
    let mut filled: Vec<usize> = (0..outer.len()).map(|i| shape.inner().part(i)).collect();

    fn place(outer: &[usize], filled: &mut [usize], left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..outer.len() {
            let col = filled[i];
            if col < outer[i] && (i == 0 || filled[i - 1] > col) {
                filled[i] += 1;
                total += place(outer, filled, left - 1);
                filled[i] -= 1;
            }
        }
        total
    }

    Ok(BigInt::from(place(&outer, &mut filled, cells)))
}

/// `N!·det[1/(μ_i − ν_j − i + j)!]`, with `1/(negative)! = 0`.
pub fn aitken_count(shape: &SkewShape) -> ExactInteger {
    let outer = shape.outer();
    let inner = shape.inner();
    let k = outer.height();
    let matrix: Vec<Vec<ExactRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                    if d < 0 {
                        ExactRational::zero()
                    } else {
                        ExactRational::new(BigInt::one(), factorial(d as usize))
                    }
                })
                .collect()
        })
        .collect();
    let value = determinant(matrix) * ExactRational::from_integer(factorial(shape.cell_count()));
    assert!(value.is_integer(), "non-integral determinant count for {shape}");
    let value = value.to_integer();
    assert!(!value.is_negative(), "negative determinant count for {shape}");
    value
}

/// Gaussian elimination over the rationals.
pub(crate) fn determinant(mut m: Vec<Vec<ExactRational>>) -> ExactRational {
    let k = m.len();
    let mut det = ExactRational::one();
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return ExactRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..k {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Weight of a semistandard tableau: entry `i` appears `entries[i-1]`
/// times. Need not be decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<usize>,
    total: usize,
}

impl WeightVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        if entries.contains(&0) {
            return Err(Error::ZeroPart);
        }
        let total = entries.iter().sum();
        Ok(Self { entries, total })
    }

    /// Accepts the same syntax as partitions, including `m,1^k`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_parts(text)?)
    }

    /// The weight `(m, 1^{n-m})`.
    pub fn hook(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::MOutOfRange { m, n });
        }
        let mut entries = vec![m];
        entries.extend(std::iter::repeat_n(1, n - m));
        Self::new(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// `Some(m)` when the weight has the shape `(m, 1, …, 1)`.
    pub fn as_hook(&self) -> Option<usize> {
        self.entries[1..].iter().all(|&e| e == 1).then_some(self.entries[0])
    }
}

/// Counts SSYT of shape `mu` and weight `weight`.
///
/// The cells holding each value form a horizontal strip, so a tableau is a
/// chain of shapes growing by one horizontal strip per value. Every such
/// chain is visited.
pub fn kostka_enumerate(mu: &Partition, weight: &WeightVector, cap: usize) -> Result<ExactInteger> {
    if weight.total() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: mu.size(),
            actual: weight.total(),
        });
    }
    if mu.size() > cap {
        return Err(Error::CapExceeded {
            cells: mu.size(),
            cap,
        });
    }
    let outer = mu.parts().to_vec();
    let mut shape = vec![0usize; outer.len()];

    // Adds `left` cells of the current value, rows `row..`, without putting
    // two of them in one column.
    fn strip(
        outer: &[usize],
        before: &[usize],
        shape: &mut [usize],
        row: usize,
        left: usize,
        rest: &[usize],
    ) -> u128 {
        if left == 0 {
            return fill(outer, shape, rest);
        }
        if row == outer.len() {
            return 0;
        }
        let ceiling = if row == 0 { outer[0] } else { outer[row].min(before[row - 1]) };
        let room = ceiling.saturating_sub(before[row]).min(left);
        let mut total = 0;
        for add in 0..=room {
            shape[row] = before[row] + add;
            total += strip(outer, before, shape, row + 1, left - add, rest);
        }
        shape[row] = before[row];
        total
    }

    fn fill(outer: &[usize], shape: &mut [usize], weights: &[usize]) -> u128 {
        match weights.split_first() {
            None => 1,
            Some((&w, rest)) => {
                let before = shape.to_vec();
                strip(outer, &before, shape, 0, w, rest)
            }
        }
    }

    Ok(BigInt::from(fill(&outer, &mut shape, weight.entries())))
}
