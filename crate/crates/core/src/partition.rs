//! Partitions, skew shapes and cycle types.
//!
//! Cells are addressed as `(row, column)` starting at 1, so the content of
//! cell `(i, j)` is `j - i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::arith::factorial;
use crate::{Error, ExactInteger, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition exists so that `μ/∅` can be written; it is never
/// produced by the parser.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotMonotone(join(&parts)));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The hook `(m, 1^k)`.
    pub fn hook(m: usize, k: usize) -> Result<Self> {
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, k));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|μ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `h(μ)`, the number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `μ_1`, or 0 for the empty partition.
    pub fn first_row(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `i` (0-based); 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first_row())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `m_i(μ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `z_μ = ∏ i^{m_i} m_i!`; `n!/z_μ` is the size of the conjugacy class
    /// of cycle type `μ`.
    pub fn z_factor(&self) -> ExactInteger {
        let mut z = BigInt::one();
        let mut rest = &self.parts[..];
        while let Some(&p) = rest.first() {
            let m = rest.iter().take_while(|&&q| q == p).count();
            z *= BigInt::from(p).pow(m as u32) * factorial(m);
            rest = &rest[m..];
        }
        z
    }

    /// Cells `(i, j)` of the Young diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// The multiset of contents `j - i`, one entry per cell.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// Whether the diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.height() <= self.height()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// Splits `"a,b^k,…"` into positive integers, expanding `b^k` into `k`
/// copies of `b`. No ordering is enforced.
pub fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut parts = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let bad = || Error::InvalidToken(token.to_string());
        let (base, reps) = match token.split_once('^') {
            Some((b, k)) => (b.trim(), k.trim().parse::<usize>().map_err(|_| bad())?),
            None => (token, 1),
        };
        let base: usize = base.parse().map_err(|_| bad())?;
        if base == 0 {
            return Err(Error::ZeroPart);
        }
        parts.extend(std::iter::repeat_n(base, reps));
    }
    if parts.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(parts)
}

/// Parses `"3,2,1"` (or the exponent form `"3,1^3"`) into a partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    Partition::new(parse_parts(text)?)
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1^n)` last. `n = 0` yields the single empty partition.
pub fn generate_partitions(n: usize) -> Vec<Partition> {
    PartitionsOf::new(n).collect()
}

/// Iterator behind [`generate_partitions`].
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl PartitionsOf {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self { next: Some(first) }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Rightmost part above 1 gets decremented; everything after it is
        // refilled greedily with parts no larger than the new value.
        if let Some(pos) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..pos].to_vec();
            let v = current[pos] - 1;
            let mut rest = current[pos..].iter().sum::<usize>() - v;
            succ.push(v);
            while rest > 0 {
                let take = rest.min(v);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// `μ/ν` with `D_ν ⊆ D_μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    /// The straight shape `μ/∅`.
    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// Shorthand for [`SkewShape::new`].
pub fn skew(outer: Partition, inner: Partition) -> Result<SkewShape> {
    SkewShape::new(outer, inner)
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// A conjugacy class of `S_degree`, stored as `λ` with `|λ| <= degree` and
/// read as `(λ, 1^{degree - |λ|})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    partition: Partition,
    degree: usize,
}

impl CycleType {
    pub fn new(partition: Partition, degree: usize) -> Result<Self> {
        if partition.size() > degree {
            return Err(Error::SizeMismatch {
                expected: degree,
                actual: partition.size(),
            });
        }
        Ok(Self { partition, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The full cycle type with fixed points written out.
    pub fn padded(&self) -> Partition {
        let mut parts = self.partition.parts.clone();
        parts.extend(std::iter::repeat_n(1, self.degree - self.partition.size()));
        Partition { parts }
    }

    /// Cycle lengths greater than one.
    pub fn nontrivial(&self) -> Vec<usize> {
        self.partition.parts.iter().copied().filter(|&p| p > 1).collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fixed = self.degree - self.partition.size() + self.partition.multiplicity(1);
        let big = self.nontrivial();
        let mut tokens: Vec<String> = big.iter().map(|p| p.to_string()).collect();
        if fixed > 0 {
            tokens.push(if fixed == 1 { "1".into() } else { format!("1^{fixed}") });
        }
        f.write_str(&tokens.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Partition numbers from Euler's pentagonal recurrence.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut out = vec![0i64; max + 1];
        out[0] = 1;
        for n in 1..=max {
            let mut acc = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * out[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    acc += sign * out[n - g2];
                }
            }
            out[n] = acc;
        }
        out.into_iter().map(|v| v as u64).collect()
    }

    #[test]
    fn parse_examples() {
        let mu = p("3,2,1");
        assert_eq!(mu.parts(), &[3, 2, 1]);
        assert_eq!(mu.size(), 6);
        assert_eq!(mu.height(), 3);
        assert_eq!(p("5").parts(), &[5]);
        assert_eq!(parse_partition("2,3"), Err(Error::NotMonotone("2,3".into())));
        assert_eq!(parse_partition(""), Err(Error::EmptyInput));
        assert_eq!(parse_partition("3,x"), Err(Error::InvalidToken("x".into())));
        assert_eq!(parse_partition("3,0"), Err(Error::ZeroPart));
        assert_eq!(parse_partition("3,-1"), Err(Error::InvalidToken("-1".into())));
    }

    #[test]
    fn exponent_sugar() {
        assert_eq!(p("3,1^3").parts(), &[3, 1, 1, 1]);
        assert_eq!(p("2^2,1^0").parts(), &[2, 2]);
        assert_eq!(p(" 4 , 1^2 ").parts(), &[4, 1, 1]);
        assert!(parse_partition("1^x").is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,2,1").conjugate(), p("3,2,1"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("6").conjugate(), p("1^6"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugation_invariants() {
        for n in 1..=14 {
            for mu in generate_partitions(n) {
                let c = mu.conjugate();
                assert_eq!(c.conjugate(), mu);
                assert_eq!(c.size(), n);
                assert_eq!(c.height(), mu.first_row());
            }
        }
    }

    #[test]
    fn generation_order_and_count() {
        let four: Vec<String> = generate_partitions(4).iter().map(|m| m.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let counts = partition_numbers(20);
        assert_eq!(generate_partitions(6).len(), 11);
        assert_eq!(generate_partitions(12).len(), 77);
        for n in 0..=20 {
            let all = generate_partitions(n);
            assert_eq!(all.len() as u64, counts[n], "p({n})");
            assert!(all.windows(2).all(|w| w[0] > w[1]), "strictly decreasing lex order");
            assert!(all.iter().all(|m| m.size() == n));
        }
    }

    #[test]
    fn multiplicities_and_z() {
        assert_eq!(p("2,2,1").multiplicity(2), 2);
        assert_eq!(p("2,2,1").multiplicity(3), 0);
        assert_eq!(p("1,1,1").multiplicity(1), 3);
        assert_eq!(p("2,1").z_factor(), BigInt::from(2));
        assert_eq!(p("1,1,1").z_factor(), BigInt::from(6));
        assert_eq!(p("2,2").z_factor(), BigInt::from(8));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=12 {
            let total: BigInt = generate_partitions(n)
                .iter()
                .map(|mu| factorial(n) / mu.z_factor())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn contents_examples() {
        let sorted = |mut v: Vec<i64>| {
            v.sort();
            v
        };
        assert_eq!(sorted(p("2,1").contents()), vec![-1, 0, 1]);
        assert_eq!(sorted(p("3,2,1").contents()), vec![-2, -1, 0, 0, 1, 2]);
        assert_eq!(p("1").contents(), vec![0]);
    }

    #[test]
    fn skew_examples() {
        let s = skew(p("3,2,1"), p("3")).unwrap();
        assert_eq!(s.cell_count(), 3);
        assert!(matches!(skew(p("3,2,1"), p("4")), Err(Error::NotContained { .. })));
        assert!(skew(p("2"), p("1,1")).is_err());
        let straight = skew(p("2,1"), Partition::empty()).unwrap();
        assert_eq!(straight.cell_count(), 3);
        assert_eq!(straight, SkewShape::straight(p("2,1")));
    }

    #[test]
    fn cycle_type_padding() {
        let ct = CycleType::new(p("3"), 6).unwrap();
        assert_eq!(ct.padded(), p("3,1,1,1"));
        assert_eq!(ct.to_string(), "3,1^3");
        assert_eq!(ct.nontrivial(), vec![3]);
        assert!(CycleType::new(p("4,3"), 6).is_err());
    }
}
