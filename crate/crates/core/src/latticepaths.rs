//! Non-intersecting lattice paths for the GL case.
//!
//! Points are `(k, l)` in matrix coordinates: row `k` from the top, column
//! `l` from the left. Path `i` starts at `P_i = (i, n-i+1)` and ends at
//! `Q_j = (n, n-j+1+λ_j)`; a horizontal step into `(k, l)` carries
//! `x_k + a_{k+l-n-1}`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Poly, VarId};
use crate::tableaux::{Entry, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Column `l → l+1`.
    H,
    /// Row `k → k+1`.
    V,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: (u32, u32),
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: (u32, u32), steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a step word such as `"HHVH"`.
    pub fn from_word(start: (u32, u32), word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'H' => Ok(Step::H),
                'V' => Ok(Step::V),
                _ => Err(Error::Parse(format!("bad step `{c}`"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self::new(start, steps))
    }

    pub fn start(&self) -> (u32, u32) {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Every lattice point visited, start and end included.
    pub fn points(&self) -> Vec<(u32, u32)> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::H => p.1 += 1,
                Step::V => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (u32, u32) {
        *self.points().last().unwrap()
    }

    /// `(row, column)` reached by each horizontal step, in order.
    fn horizontal_targets(&self) -> Vec<(u32, u32)> {
        self.steps
            .iter()
            .zip(self.points().into_iter().skip(1))
            .filter(|(s, _)| **s == Step::H)
            .map(|(_, p)| p)
            .collect()
    }

    /// Product of horizontal edge weights on a grid of rank `n`.
    pub fn weight(&self, n: u32) -> Poly {
        self.horizontal_targets()
            .into_iter()
            .map(|(k, l)| {
                Poly::var(VarId::X(k)) + Poly::var(VarId::A(k as i32 + l as i32 - n as i32 - 1))
            })
            .product()
    }
}

pub fn start_point(n: u32, i: u32) -> (u32, u32) {
    (i, n - i + 1)
}

/// `Q_j`.
pub fn end_point(n: u32, lambda: &Partition, j: u32) -> (u32, u32) {
    (n, n - j + 1 + lambda.part(j as usize))
}

/// All monotone paths between two points.
pub fn paths_between(from: (u32, u32), to: (u32, u32)) -> Vec<LatticePath> {
    if to.0 < from.0 || to.1 < from.1 {
        return Vec::new();
    }
    let (v, h) = (to.0 - from.0, to.1 - from.1);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity((v + h) as usize);
    fn rec(h: u32, v: u32, word: &mut Vec<Step>, from: (u32, u32), out: &mut Vec<LatticePath>) {
        if h == 0 && v == 0 {
            out.push(LatticePath::new(from, word.clone()));
            return;
        }
        if h > 0 {
            word.push(Step::H);
            rec(h - 1, v, word, from, out);
            word.pop();
        }
        if v > 0 {
            word.push(Step::V);
            rec(h, v - 1, word, from, out);
            word.pop();
        }
    }
    rec(h, v, &mut word, from, &mut out);
    out
}

/// Every tuple with path `i` running `P_i → Q_{σ(i)}` (`sigma` is 1-based).
pub fn enumerate_gl_tuples(n: u32, lambda: &Partition, sigma: &[u32]) -> Vec<Vec<LatticePath>> {
    let per_path: Vec<Vec<LatticePath>> = (1..=n)
        .map(|i| paths_between(start_point(n, i), end_point(n, lambda, sigma[i as usize - 1])))
        .collect();
    let mut tuples: Vec<Vec<LatticePath>> = vec![Vec::new()];
    for options in per_path {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    tuples
}

/// True when no two paths share a lattice point.
pub fn is_non_intersecting(tuple: &[LatticePath]) -> bool {
    let mut seen = HashSet::new();
    tuple
        .iter()
        .flat_map(|p| p.points())
        .all(|pt| seen.insert(pt))
}

/// All permutations of `1..=n` with their signs, in lexicographic order.
pub fn permutations(n: u32) -> Vec<(Vec<u32>, i64)> {
    fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..p.len())
                .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

fn tuple_weight(tuple: &[LatticePath], n: u32) -> Poly {
    tuple.iter().map(|p| p.weight(n)).product()
}

/// `Σ_σ sgn(σ) Σ_{tuples} ∏ weights`, over all tuples, intersecting or not.
pub fn lgv_signed_sum(n: u32, lambda: &Partition) -> Poly {
    permutations(n)
        .into_par_iter()
        .map(|(sigma, sign)| {
            let s: Poly = enumerate_gl_tuples(n, lambda, &sigma)
                .iter()
                .map(|t| tuple_weight(t, n))
                .sum();
            s.scale(&sign.into())
        })
        .reduce(Poly::zero, |p, q| p + q)
}

/// The non-intersecting tuples for `sigma`.
pub fn non_intersecting_tuples(n: u32, lambda: &Partition, sigma: &[u32]) -> Vec<Vec<LatticePath>> {
    enumerate_gl_tuples(n, lambda, sigma)
        .into_iter()
        .filter(|t| is_non_intersecting(t))
        .collect()
}

/// Reads off `T_{ij} = k` from the `j`-th horizontal step of path `i`,
/// taken at level `k`.
pub fn tuple_to_tableau(n: u32, tuple: &[LatticePath]) -> Result<Tableau> {
    for (i, p) in tuple.iter().enumerate() {
        if p.start() != start_point(n, i as u32 + 1) || p.end().0 != n {
            return Err(Error::Unsupported(
                "tuple does not run P_i to the bottom row in order".into(),
            ));
        }
    }
    if !is_non_intersecting(tuple) {
        return Err(Error::IntersectingTuple);
    }
    Ok(Tableau::from_rows(
        tuple
            .iter()
            .map(|p| {
                p.horizontal_targets()
                    .into_iter()
                    .map(|(k, _)| Entry::Unbarred(k))
                    .collect()
            })
            .collect(),
    ))
}
