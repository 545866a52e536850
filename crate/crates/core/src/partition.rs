//! Integer partitions, Young-diagram hook lengths and the hook length
//! formula for irreducible character degrees of symmetric groups.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{factorial, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("parts must be positive")]
    ZeroPart,
    #[error("cannot parse partition `{0}`")]
    Parse(String),
    #[error("hook product {hook_product} does not divide {n}!")]
    HookDivisibility { n: usize, hook_product: Natural },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from `(part, multiplicity)` blocks; blocks with
    /// zero part or zero multiplicity are skipped.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Result<Self, PartitionError> {
        let parts = blocks
            .iter()
            .filter(|(part, _)| *part > 0)
            .flat_map(|&(part, mult)| std::iter::repeat_n(part, mult))
            .collect();
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            cols.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Partition { parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// True iff `other` fits inside `self`: `other_i <= self_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn hooks(&self) -> HookData {
        let conj = self.conjugate();
        let grid: Vec<Vec<usize>> = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect();
        let mut product = Natural::one();
        let mut chunk: u64 = 1;
        for &h in grid.iter().flatten() {
            match chunk.checked_mul(h as u64) {
                Some(c) => chunk = c,
                None => {
                    product *= chunk;
                    chunk = h as u64;
                }
            }
        }
        product *= chunk;
        HookData { grid, product }
    }

    /// `chi_lambda(1) = n!/H_lambda`, divided exactly.
    pub fn degree(&self) -> Result<Natural, PartitionError> {
        let hook_product = self.hooks().product;
        degree_from_hook_product(self.size(), &hook_product)
    }

    /// Display form with exponents for repeated parts, e.g. `5,4^3,3^2,1`.
    pub fn exponential_form(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if run == 1 {
                out.push(p.to_string());
            } else {
                out.push(format!("{p}^{run}"));
            }
            i += run;
        }
        out.join(",")
    }
}

/// `n!/H`, failing if the division is not exact.
pub fn degree_from_hook_product(
    n: usize,
    hook_product: &Natural,
) -> Result<Natural, PartitionError> {
    let (q, r) = factorial(n as u64).div_rem(hook_product);
    if !r.is_zero() {
        return Err(PartitionError::HookDivisibility {
            n,
            hook_product: hook_product.clone(),
        });
    }
    Ok(q)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts comma-separated parts with optional `part^multiplicity`
    /// blocks; surrounding parentheses and spaces are ignored. The empty
    /// string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(s.to_string());
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut blocks = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim()),
                None => (token, "1"),
            };
            let part: usize = part.parse().map_err(|_| err())?;
            let mult: usize = mult.parse().map_err(|_| err())?;
            if part == 0 || mult == 0 {
                return Err(err());
            }
            blocks.push((part, mult));
        }
        Partition::from_blocks(&blocks).map_err(|e| match e {
            PartitionError::NotDecreasing => PartitionError::NotDecreasing,
            _ => err(),
        })
    }
}

/// Hook lengths of every node, row by row, and their product `H_lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookData {
    pub grid: Vec<Vec<usize>>,
    pub product: Natural,
}

/// Members of `Gamma_m` (exactly `m` parts, each in `[m, m+2]`) of size `n`,
/// largest first. Empty when `n` is outside `[m^2, m^2 + 2m]`.
pub fn gamma_of_size(m: usize, n: usize) -> Vec<Partition> {
    if m == 0 || n < m * m || n > m * m + 2 * m {
        return Vec::new();
    }
    // a parts equal to m+2, b equal to m+1, the rest equal to m
    let excess = n - m * m;
    let mut out = Vec::new();
    for a in (0..=excess / 2).rev() {
        let b = excess - 2 * a;
        if a + b > m {
            continue;
        }
        let blocks = [(m + 2, a), (m + 1, b), (m, m - a - b)];
        out.push(Partition::from_blocks(&blocks).expect("blocks are decreasing"));
    }
    out
}

/// All of `Gamma_m`, grouped by size in increasing order.
pub fn enumerate_gamma(m: usize) -> impl Iterator<Item = Partition> {
    let sizes = if m == 0 {
        0..0
    } else {
        m * m..m * m + 2 * m + 1
    };
    sizes.flat_map(move |n| gamma_of_size(m, n))
}

/// Every partition of `n` exactly once, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> PartitionsOf {
    PartitionsOf {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Debug, Clone)]
pub struct PartitionsOf {
    current: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        // next in reverse lexicographic order: strip trailing ones, decrement
        // the last part > 1, refill greedily with the freed amount
        let mut parts = cur;
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                parts.push(take);
                freed -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}
