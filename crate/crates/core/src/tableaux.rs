//! Group-specific tableaux and their weighted sums.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characters::{CharSpec, Group};
use crate::error::{Error, Result};
use crate::hfuncs::HKind;
use crate::partition::Partition;
use crate::poly::{Poly, VarId};

/// A tableau entry: `k`, `k̄` or (odd orthogonal only) `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Unbarred(u32),
    Barred(u32),
    Zero,
}

impl Entry {
    /// Position in `1 < 1̄ < 2 < 2̄ < … < n < n̄ < 0`.
    fn key(self) -> u32 {
        match self {
            Entry::Unbarred(k) => 2 * k,
            Entry::Barred(k) => 2 * k + 1,
            Entry::Zero => u32::MAX,
        }
    }

    /// The index `k`; `None` for `0`.
    pub fn index(self) -> Option<u32> {
        match self {
            Entry::Unbarred(k) | Entry::Barred(k) => Some(k),
            Entry::Zero => None,
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Entry::Barred(_))
    }

    pub fn to_json(self) -> Value {
        match self {
            Entry::Unbarred(k) => json!({ "k": k, "barred": false }),
            Entry::Barred(k) => json!({ "k": k, "barred": true }),
            Entry::Zero => json!("zero"),
        }
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Unbarred(k) => write!(f, "{k}"),
            Entry::Barred(k) => write!(f, "{k}~"),
            Entry::Zero => f.write_str("0"),
        }
    }
}

/// A filling of a Young diagram (English convention, rows top to bottom).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Entry>>,
}

/// Derived statistics of a tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TabStats {
    /// Number of `k ≥ 2` with `T_{k-1,1} = k` and `T_{k,1} = k̄`.
    pub zeta: u32,
    /// Barred entries in the first column.
    pub bar: u32,
}

impl Tableau {
    /// Builds a tableau from its rows; empty rows are dropped.
    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Self {
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// The shape, zero-padded to `rank`.
    pub fn shape(&self, rank: usize) -> Result<Partition> {
        let parts: Vec<u32> = self.rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(&parts, rank)
    }

    /// `T_{ij}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Option<Entry> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }

    fn first_column(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().map(|r| r[0])
    }

    /// `ζ` is only non-trivial for even orthogonal tableaux.
    pub fn stats(&self, kind: HKind) -> TabStats {
        let bar = self.first_column().filter(|e| e.is_barred()).count() as u32;
        let zeta = if matches!(kind, HKind::Eo | HKind::Eod) {
            (2..=self.rows.len())
                .filter(|&k| {
                    self.get(k - 1, 1) == Some(Entry::Unbarred(k as u32))
                        && self.get(k, 1) == Some(Entry::Barred(k as u32))
                })
                .count() as u32
        } else {
            0
        };
        TabStats { zeta, bar }
    }

    /// Whether row `k` has first entry `k` or `k̄` for every row `k`.
    fn in_difference_subset(&self) -> bool {
        self.first_column()
            .enumerate()
            .all(|(r, e)| e.index() == Some(r as u32 + 1))
    }

    /// One row per line, entries separated by spaces.
    pub fn render_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Compact single-line form, e.g. `[1 1~; 2]`.
    pub fn render_inline(&self) -> String {
        let body = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("; ");
        format!("[{body}]")
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Array(r.iter().map(|e| e.to_json()).collect()))
                .collect(),
        )
    }

    /// Checks the defining conditions of `kind` tableaux of rank `n`.
    pub fn is_valid(&self, kind: HKind, n: u32) -> bool {
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return false;
        }
        let alphabet = alphabet(kind, n);
        let mut t = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let mut r: Vec<Entry> = Vec::with_capacity(row.len());
            for (j, &e) in row.iter().enumerate() {
                if !alphabet.contains(&e) || !admissible(kind, &t, &r, i, j, e) {
                    return false;
                }
                r.push(e);
            }
            t.push(r);
        }
        true
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

fn check_kind(kind: HKind) -> Result<HKind> {
    match kind {
        HKind::Eod => Ok(HKind::Eo),
        k => Ok(k),
    }
}

fn alphabet(kind: HKind, n: u32) -> Vec<Entry> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.push(Entry::Unbarred(k));
        if kind != HKind::Gl {
            out.push(Entry::Barred(k));
        }
    }
    if kind == HKind::Oo {
        out.push(Entry::Zero);
    }
    out
}

/// Can `e` go in cell `(i, j)` (0-based) given the rows filled so far and
/// the current partial row?
fn admissible(kind: HKind, done: &[Vec<Entry>], row: &[Entry], i: usize, j: usize, e: Entry) -> bool {
    // T1
    if let Some(&left) = row.last() {
        if e < left {
            return false;
        }
        // T5: with rows weakly increasing, a second 0 would sit next to the first
        if kind == HKind::Oo && e == Entry::Zero && left == Entry::Zero {
            return false;
        }
    }
    // T2, T3
    if i > 0 {
        let above = done[i - 1][j];
        if e < above || (e == above && e != Entry::Zero) {
            return false;
        }
    }
    if kind == HKind::Gl {
        return true;
    }
    // T4
    if let Some(k) = e.index() {
        if (k as usize) < i + 1 {
            return false;
        }
    }
    // T6: in row k containing k, each k̄ sits under a k
    if kind == HKind::Eo {
        let k = i as u32 + 1;
        if e == Entry::Barred(k) && row.contains(&Entry::Unbarred(k)) {
            let covered = i > 0 && done[i - 1][j] == Entry::Unbarred(k);
            if !covered {
                return false;
            }
        }
        // a k placed after k̄'s in row k is impossible since k < k̄
    }
    true
}

/// Every `kind` tableau of shape `lambda`, in row-major lexicographic order.
pub fn enumerate(kind: HKind, lambda: &Partition) -> Result<Vec<Tableau>> {
    let kind = check_kind(kind)?;
    let n = lambda.rank() as u32;
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).filter(|&p| p > 0).collect();
    let alphabet = alphabet(kind, n);
    let mut out = Vec::new();
    let mut done: Vec<Vec<Entry>> = Vec::with_capacity(shape.len());
    let mut row: Vec<Entry> = Vec::new();
    fill(kind, &shape, &alphabet, &mut done, &mut row, &mut out);
    Ok(out)
}

fn fill(
    kind: HKind,
    shape: &[usize],
    alphabet: &[Entry],
    done: &mut Vec<Vec<Entry>>,
    row: &mut Vec<Entry>,
    out: &mut Vec<Tableau>,
) {
    let i = done.len();
    if i == shape.len() {
        out.push(Tableau { rows: done.clone() });
        return;
    }
    let j = row.len();
    for &e in alphabet {
        if !admissible(kind, done, row, i, j, e) {
            continue;
        }
        row.push(e);
        if row.len() == shape[i] {
            done.push(std::mem::take(row));
            fill(kind, shape, alphabet, done, row, out);
            *row = done.pop().unwrap();
        } else {
            fill(kind, shape, alphabet, done, row, out);
        }
        row.pop();
    }
}

fn a(j: i32) -> Poly {
    Poly::var(VarId::A(j))
}

/// Weight of entry `e` in cell `(i, j)` (1-based) of a rank-`n` tableau;
/// `fault` is added to the unbarred parameter index (zero in normal use).
pub(crate) fn cell_weight_with(kind: HKind, n: u32, i: usize, j: usize, e: Entry, fault: i32) -> Poly {
    let (n, i, j) = (n as i32, i as i32, j as i32);
    let x = |k: u32| Poly::var(VarId::X(k));
    let xb = |k: u32| Poly::var(VarId::XBar(k));
    match (kind, e) {
        (HKind::Gl, Entry::Unbarred(k)) => x(k) + a(k as i32 + j - i + fault),
        (HKind::Sp, Entry::Unbarred(k)) => x(k) + a(2 * k as i32 - 1 - n + j - i + fault),
        (HKind::Sp, Entry::Barred(k)) => xb(k) + a(2 * k as i32 - n + j - i),
        (HKind::Oo, Entry::Unbarred(k)) => x(k) + a(2 * k as i32 - n + j - i + fault),
        (HKind::Oo, Entry::Barred(k)) => xb(k) + a(2 * k as i32 + 1 - n + j - i),
        (HKind::Oo, Entry::Zero) => Poly::one() - a(n + 1 + j - i),
        (HKind::Eo | HKind::Eod, Entry::Unbarred(k)) => {
            let delta = i32::from(i == k as i32);
            x(k) + a(2 * k as i32 - 1 - n + j - i + delta + fault)
        }
        (HKind::Eo | HKind::Eod, Entry::Barred(k)) => xb(k) + a(2 * k as i32 - n + j - i),
        _ => panic!("entry {e} is not in the {kind} alphabet"),
    }
}

pub fn cell_weight(kind: HKind, n: u32, i: usize, j: usize, e: Entry) -> Poly {
    cell_weight_with(kind, n, i, j, e, 0)
}

/// The factor attached to each cell, row by row.
pub fn weight_factors(t: &Tableau, kind: HKind, n: u32) -> Vec<Vec<Poly>> {
    t.rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &e)| cell_weight(kind, n, i + 1, j + 1, e))
                .collect()
        })
        .collect()
}

fn weight_with(t: &Tableau, kind: HKind, n: u32, fault: i32) -> Poly {
    t.rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(move |(j, &e)| cell_weight_with(kind, n, i + 1, j + 1, e, fault))
        })
        .product()
}

/// `∏_{(i,j)} wgt(T_{ij})`, without any multiplicity factor.
pub fn weight(t: &Tableau, kind: HKind, n: u32) -> Poly {
    weight_with(t, kind, n, 0)
}

/// A tableau together with its contribution to a character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTableau {
    pub tableau: Tableau,
    pub stats: TabStats,
    /// The integer multiplicity: `2^ζ`, a sign, or the so(2n)± coefficient.
    pub coeff: i64,
    pub weight: Poly,
}

/// The multiplicity of each tableau in the character of `group`.
fn coefficient(group: Group, splits: bool, t: &Tableau, stats: TabStats) -> i64 {
    let pow2 = |e: u32| 1i64 << e;
    match group {
        Group::OEvenDiff => {
            if splits && t.in_difference_subset() {
                if stats.bar.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            } else {
                0
            }
        }
        Group::SoEvenPlus | Group::SoEvenMinus if splits => {
            if stats.zeta >= 1 {
                pow2(stats.zeta - 1)
            } else {
                let even = stats.bar.is_multiple_of(2);
                let plus = group == Group::SoEvenPlus;
                i64::from(even == plus)
            }
        }
        _ => pow2(stats.zeta),
    }
}

fn weighted_with(spec: &CharSpec, fault: i32) -> Result<Vec<WeightedTableau>> {
    let kind = spec.group.hkind().unwrap_or(HKind::Eo);
    let kind = check_kind(kind)?;
    let n = spec.rank;
    let splits = spec.splits();
    if spec.group == Group::OEvenDiff && !splits {
        return Ok(Vec::new());
    }
    let all = enumerate(kind, &spec.lambda)?;
    Ok(all
        .into_par_iter()
        .filter_map(|t| {
            let stats = t.stats(kind);
            let coeff = coefficient(spec.group, splits, &t, stats);
            (coeff != 0).then(|| {
                let weight = weight_with(&t, kind, n, fault);
                WeightedTableau {
                    tableau: t,
                    stats,
                    coeff,
                    weight,
                }
            })
        })
        .collect())
}

/// Tableaux contributing to the character `spec`, with multiplicities and
/// weights, in canonical order.
pub fn weighted_tableaux(spec: &CharSpec) -> Result<Vec<WeightedTableau>> {
    weighted_with(spec, 0)
}

pub(crate) fn character_by_tableaux_with(spec: &CharSpec, fault: i32) -> Result<Poly> {
    Ok(weighted_with(spec, fault)?
        .into_par_iter()
        .map(|w| w.weight.scale(&BigInt::from(w.coeff)))
        .reduce(Poly::zero, |p, q| p + q))
}

/// The character `spec` as a weighted tableau sum.
pub fn character_by_tableaux(spec: &CharSpec) -> Result<Poly> {
    character_by_tableaux_with(spec, 0)
}

fn basic_group(kind: HKind) -> Result<Group> {
    Ok(match kind {
        HKind::Gl => Group::Gl,
        HKind::Sp => Group::Sp,
        HKind::Oo => Group::SoOdd,
        HKind::Eo => Group::OEven,
        HKind::Eod => {
            return Err(Error::Unsupported(
                "use diff_tableau_sum for the difference character".into(),
            ))
        }
    })
}

/// `Σ_T 2^{ζ(T)} wgt(T)` over `kind` tableaux.
pub fn tableau_sum(kind: HKind, lambda: &Partition) -> Result<Poly> {
    character_by_tableaux(&CharSpec::new(basic_group(kind)?, lambda.clone()))
}

fn require_full_length(lambda: &Partition) -> Result<()> {
    if lambda.length() < lambda.rank() {
        return Err(Error::InvalidShape(format!(
            "{lambda} has fewer than {} nonzero parts",
            lambda.rank()
        )));
    }
    Ok(())
}

/// Signed sum over even orthogonal tableaux with `T_{k1} ∈ {k, k̄}`.
pub fn diff_tableau_sum(lambda: &Partition) -> Result<Poly> {
    require_full_length(lambda)?;
    character_by_tableaux(&CharSpec::new(Group::OEvenDiff, lambda.clone()))
}

/// The so(2n) `+` (`plus = true`) or `-` character as a tableau sum.
pub fn so_even_tableau_sum(lambda: &Partition, plus: bool) -> Result<Poly> {
    require_full_length(lambda)?;
    let group = if plus {
        Group::SoEvenPlus
    } else {
        Group::SoEvenMinus
    };
    character_by_tableaux(&CharSpec::new(group, lambda.clone()))
}

#[cfg(test)]
mod tests {
    use super::Entry::{Barred as B, Unbarred as U};
    use super::*;

    fn lam(s: &str, n: usize) -> Partition {
        Partition::parse(s, n).unwrap()
    }

    #[test]
    fn small_enumerations() {
        let t = enumerate(HKind::Gl, &lam("1", 2)).unwrap();
        assert_eq!(t, vec![
            Tableau::from_rows(vec![vec![U(1)]]),
            Tableau::from_rows(vec![vec![U(2)]]),
        ]);
        assert_eq!(enumerate(HKind::Gl, &lam("2,1", 2)).unwrap().len(), 2);
        assert_eq!(enumerate(HKind::Gl, &lam("2,1", 3)).unwrap().len(), 8);
        let sp = enumerate(HKind::Sp, &lam("1", 1)).unwrap();
        assert_eq!(sp, vec![
            Tableau::from_rows(vec![vec![U(1)]]),
            Tableau::from_rows(vec![vec![B(1)]]),
        ]);
        assert_eq!(enumerate(HKind::Oo, &lam("2", 1)).unwrap().len(), 5);
        assert_eq!(enumerate(HKind::Oo, &lam("1,1", 2)).unwrap().len(), 10);
        assert_eq!(enumerate(HKind::Eo, &lam("2", 1)).unwrap().len(), 2);
        assert_eq!(enumerate(HKind::Gl, &lam("", 2)).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_is_valid_and_sorted() {
        for kind in [HKind::Gl, HKind::Sp, HKind::Oo, HKind::Eo] {
            let all = enumerate(kind, &lam("2,1", 2)).unwrap();
            assert!(all.iter().all(|t| t.is_valid(kind, 2)));
            let keys: Vec<Vec<u32>> = all
                .iter()
                .map(|t| t.rows().iter().flatten().map(|e| e.key()).collect())
                .collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn sums() {
        let x = |k| Poly::var(VarId::X(k));
        let xb = |k| Poly::var(VarId::XBar(k));
        assert_eq!(
            tableau_sum(HKind::Gl, &lam("1", 2)).unwrap(),
            x(1) + a(1) + x(2) + a(2)
        );
        assert_eq!(tableau_sum(HKind::Sp, &lam("", 3)).unwrap(), Poly::one());
        assert_eq!(
            tableau_sum(HKind::Eo, &lam("1", 1)).unwrap(),
            x(1) + xb(1) + Poly::constant(2) * a(1)
        );
        assert_eq!(diff_tableau_sum(&lam("1", 1)).unwrap(), x(1) - xb(1));
        assert_eq!(so_even_tableau_sum(&lam("1", 1), true).unwrap(), x(1) + a(1));
        assert!(matches!(
            diff_tableau_sum(&lam("1", 2)),
            Err(Error::InvalidShape(_))
        ));
    }

    #[test]
    fn rendering() {
        let t = Tableau::from_rows(vec![vec![U(1), B(2)], vec![Entry::Zero]]);
        assert_eq!(t.render_text(), "1 2~\n0");
        assert_eq!(t.render_inline(), "[1 2~; 0]");
        assert_eq!(
            t.to_json(),
            json!([[{"k":1,"barred":false},{"k":2,"barred":true}],["zero"]])
        );
    }
}
