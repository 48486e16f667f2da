use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_n ≥ 0`, stored zero-padded to its rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Pads `parts` with zeros to length `rank`.
    pub fn new(parts: &[u32], rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidPartition("rank must be at least 1".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let len = parts.iter().filter(|&&p| p > 0).count();
        if len > rank {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has more than {rank} nonzero parts"
            )));
        }
        let mut v: Vec<u32> = parts.iter().copied().take(rank).collect();
        v.resize(rank, 0);
        Ok(Partition(v))
    }

    pub fn empty(rank: usize) -> Self {
        Partition(vec![0; rank])
    }

    /// Parses a comma-separated list such as `2,1` and pads it to `rank`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(&[], rank);
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts, rank)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i`, one-based; zero beyond the rank.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Every partition of rank `n` with `λ_1 ≤ max_part`, in lexicographic order.
    pub fn all_bounded(n: usize, max_part: u32) -> Vec<Partition> {
        fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 0..=cap {
                cur.push(p);
                rec(n, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        let rank = v.len();
        Self::new(&v, rank)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Parses without padding: the rank is the number of listed parts.
    fn from_str(s: &str) -> Result<Self> {
        let n = s.split(',').count();
        Self::parse(s, n)
    }
}
