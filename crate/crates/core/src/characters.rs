//! Factorial characters by alternant ratio, flagged Jacobi-Trudi
//! determinant and the raw determinantal definition.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hfuncs::{self, factorial_power, factorial_power_of, HKind, VarSpec};
use crate::partition::Partition;
use crate::poly::{determinant, Poly, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    Gl,
    Sp,
    SoOdd,
    OEven,
    /// The difference character `so_{λ+} - so_{λ-}`.
    OEvenDiff,
    SoEvenPlus,
    SoEvenMinus,
}

impl Group {
    pub const ALL: [Group; 7] = [
        Group::Gl,
        Group::Sp,
        Group::SoOdd,
        Group::OEven,
        Group::OEvenDiff,
        Group::SoEvenPlus,
        Group::SoEvenMinus,
    ];

    /// The four families with a single character per partition.
    pub const BASIC: [Group; 4] = [Group::Gl, Group::Sp, Group::SoOdd, Group::OEven];

    pub fn name(self) -> &'static str {
        match self {
            Group::Gl => "gl",
            Group::Sp => "sp",
            Group::SoOdd => "so-odd",
            Group::OEven => "o-even",
            Group::OEvenDiff => "o-even-diff",
            Group::SoEvenPlus => "so-even-plus",
            Group::SoEvenMinus => "so-even-minus",
        }
    }

    /// The h-function family; `None` for the ± combinations.
    pub fn hkind(self) -> Option<HKind> {
        match self {
            Group::Gl => Some(HKind::Gl),
            Group::Sp => Some(HKind::Sp),
            Group::SoOdd => Some(HKind::Oo),
            Group::OEven => Some(HKind::Eo),
            Group::OEvenDiff => Some(HKind::Eod),
            Group::SoEvenPlus | Group::SoEvenMinus => None,
        }
    }

    /// `+1` / `-1` for the so(2n) halves.
    pub fn so_even_sign(self) -> Option<i64> {
        match self {
            Group::SoEvenPlus => Some(1),
            Group::SoEvenMinus => Some(-1),
            _ => None,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Group> {
        Ok(match s {
            "gl" => Group::Gl,
            "sp" => Group::Sp,
            "so-odd" | "oo" => Group::SoOdd,
            "o-even" | "eo" => Group::OEven,
            "o-even-diff" | "eod" => Group::OEvenDiff,
            "so-even-plus" => Group::SoEvenPlus,
            "so-even-minus" => Group::SoEvenMinus,
            _ => return Err(Error::Parse(format!("unknown group `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Alternant,
    JacobiTrudi,
    Tableaux,
    Raw,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Alternant,
        Method::JacobiTrudi,
        Method::Tableaux,
        Method::Raw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Alternant => "alternant",
            Method::JacobiTrudi => "jacobi-trudi",
            Method::Tableaux => "tableaux",
            Method::Raw => "raw",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        Ok(match s {
            "alternant" => Method::Alternant,
            "jacobi-trudi" | "jt" => Method::JacobiTrudi,
            "tableaux" => Method::Tableaux,
            "raw" => Method::Raw,
            _ => return Err(Error::Parse(format!("unknown method `{s}`"))),
        })
    }
}

/// One character: group, rank and highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharSpec {
    pub group: Group,
    pub rank: u32,
    pub lambda: Partition,
}

impl CharSpec {
    pub fn new(group: Group, lambda: Partition) -> Self {
        CharSpec {
            group,
            rank: lambda.rank() as u32,
            lambda,
        }
    }

    pub fn parse(group: Group, rank: u32, lambda: &str) -> Result<Self> {
        Ok(Self::new(group, Partition::parse(lambda, rank as usize)?))
    }

    fn with_group(&self, group: Group) -> CharSpec {
        CharSpec {
            group,
            ..self.clone()
        }
    }

    /// True when the so(2n) ± characters genuinely differ.
    pub fn splits(&self) -> bool {
        self.lambda.length() == self.rank as usize
    }
}

fn build_matrix<F>(n: usize, f: F) -> Vec<Vec<Poly>>
where
    F: Fn(usize, usize) -> Poly + Sync,
{
    (0..n * n)
        .into_par_iter()
        .map(|k| f(k / n + 1, k % n + 1))
        .collect::<Vec<_>>()
        .chunks(n)
        .map(<[Poly]>::to_vec)
        .collect()
}

fn det_of<F>(n: usize, f: F) -> Result<Poly>
where
    F: Fn(usize, usize) -> Poly + Sync,
{
    determinant(&build_matrix(n, f))
}

/// `λ_j + n - j`, 1-based `j`.
fn shifted_part(lambda: &Partition, j: usize) -> u32 {
    lambda.part(j) + (lambda.rank() - j) as u32
}

/// Computes `spec` by `method`.
pub fn character(spec: &CharSpec, method: Method) -> Result<Poly> {
    match method {
        Method::Alternant => char_alternant(spec),
        Method::JacobiTrudi => char_jacobi_trudi(spec),
        Method::Tableaux => crate::tableaux::character_by_tableaux(spec),
        Method::Raw => match spec.group {
            Group::OEvenDiff => char_raw_diff(&spec.lambda),
            Group::SoEvenPlus | Group::SoEvenMinus => char_so_even(spec, Method::Raw),
            _ => char_raw(spec),
        },
    }
}

/// Ratio of one-pair h-function determinants.
///
/// Apart from GL this is a Laurent polynomial in `x_i` with `xb_i = x_i^-1`;
/// the result is the representative reduced by
/// [`Poly::cancel_inverse_pairs`].
pub fn char_alternant(spec: &CharSpec) -> Result<Poly> {
    let n = spec.rank as usize;
    let lambda = &spec.lambda;
    let kind = match spec.group.hkind() {
        Some(k) => k,
        None => return char_so_even(spec, Method::Alternant),
    };
    let one_pair = |k: HKind, i: usize| VarSpec::pairs(k, vec![i as u32], 0);
    let num = det_of(n, |i, j| {
        hfuncs::h(&one_pair(kind, i), shifted_part(lambda, j) as i64)
    })?;
    let den_kind = if kind == HKind::Eod { HKind::Eo } else { kind };
    let den = det_of(n, |i, j| hfuncs::h(&one_pair(den_kind, i), (n - j) as i64))?;
    ratio(kind, &num, &den)
}

/// GL ratios are polynomial; the others only under `x_i xb_i = 1`, so
/// they are divided in the Laurent ring and returned reduced.
fn ratio(kind: HKind, num: &Poly, den: &Poly) -> Result<Poly> {
    if kind == HKind::Gl {
        num.exact_div(den)
    } else {
        num.laurent_exact_div(den)
    }
}

/// Determinant of `h_{λ_j - j + i}` over the flags `x^{(i)}`.
pub fn char_jacobi_trudi(spec: &CharSpec) -> Result<Poly> {
    let n = spec.rank;
    let lambda = &spec.lambda;
    let kind = match spec.group.hkind() {
        Some(k) => k,
        None => return char_so_even(spec, Method::JacobiTrudi),
    };
    det_of(n as usize, |i, j| {
        let m = lambda.part(j) as i64 - j as i64 + i as i64;
        hfuncs::h(&VarSpec::flag(kind, i as u32, n), m)
    })
}

/// Row entry of the raw alternant for `group`, exponent `l`, row `i`.
fn raw_entry(group: Group, i: u32, l: u32) -> Poly {
    let (x, xb) = (VarId::X(i), VarId::XBar(i));
    match group {
        Group::Gl => factorial_power(x, l, 0),
        Group::Sp => Poly::var(x) * factorial_power(x, l, 0) - Poly::var(xb) * factorial_power(xb, l, 0),
        Group::SoOdd => {
            let (s, sb) = (Poly::var(VarId::S(i)), Poly::var(VarId::SBar(i)));
            let fs = factorial_power_of(&s.pow(2), l, 0);
            let fsb = factorial_power_of(&sb.pow(2), l, 0);
            s * fs - sb * fsb
        }
        Group::OEven => factorial_power(x, l, 0) + factorial_power(xb, l, 0),
        Group::OEvenDiff => factorial_power(x, l, 0) - factorial_power(xb, l, 0),
        Group::SoEvenPlus | Group::SoEvenMinus => unreachable!("no raw alternant entry"),
    }
}

/// The λ = 0 raw alternant of `group` (halved for the even orthogonal
/// family; in the half-power variables for so-odd).
pub fn raw_denominator(group: Group, n: u32) -> Result<Poly> {
    let group = match group {
        Group::OEvenDiff | Group::SoEvenPlus | Group::SoEvenMinus => Group::OEven,
        g => g,
    };
    let d = det_of(n as usize, |i, j| raw_entry(group, i as u32, n - j as u32))?;
    if group == Group::OEven {
        d.halve()
    } else {
        Ok(d)
    }
}

/// The defining ratio of factorial-power alternants.
///
/// As with [`char_alternant`], everything but GL is returned as the reduced
/// Laurent representative; for so-odd the division happens in the
/// half-power variables before mapping back.
pub fn char_raw(spec: &CharSpec) -> Result<Poly> {
    let n = spec.rank;
    let lambda = &spec.lambda;
    let group = spec.group;
    match group {
        Group::OEvenDiff => return char_raw_diff(lambda),
        Group::SoEvenPlus | Group::SoEvenMinus => return char_so_even(spec, Method::Raw),
        _ => {}
    }
    let num = det_of(n as usize, |i, j| {
        raw_entry(group, i as u32, shifted_part(lambda, j))
    })?;
    let den = raw_denominator(group, n)?;
    match group {
        Group::SoOdd => num.laurent_exact_div(&den)?.map_s_to_x(),
        Group::OEven => {
            let num = if lambda.part(n as usize) == 0 {
                num.halve()?
            } else {
                num
            };
            num.laurent_exact_div(&den)
        }
        Group::Sp => num.laurent_exact_div(&den),
        _ => num.exact_div(&den),
    }
}

/// The defining ratio of the difference character.
pub fn char_raw_diff(lambda: &Partition) -> Result<Poly> {
    let n = lambda.rank() as u32;
    let num = det_of(n as usize, |i, j| {
        raw_entry(Group::OEvenDiff, i as u32, shifted_part(lambda, j))
    })?;
    if lambda.part(n as usize) == 0 {
        assert!(num.is_zero(), "difference numerator must vanish when λ_n = 0");
        return Ok(Poly::zero());
    }
    num.laurent_exact_div(&raw_denominator(Group::OEven, n)?)
}

/// `½(o_λ ± o'_λ)`, each constituent computed by `method`, as a reduced
/// Laurent representative; the even orthogonal character itself when
/// `ℓ(λ) < n`.
pub fn char_so_even(spec: &CharSpec, method: Method) -> Result<Poly> {
    let sign = spec
        .group
        .so_even_sign()
        .ok_or_else(|| Error::Unsupported(format!("{} is not an so(2n) half", spec.group)))?;
    let o = character(&spec.with_group(Group::OEven), method)?;
    if !spec.splits() {
        return Ok(o);
    }
    // The formal lifts of o and o' need not have the same parity; their
    // reduced Laurent forms do.
    let o = o.cancel_inverse_pairs();
    let d = character(&spec.with_group(Group::OEvenDiff), method)?.cancel_inverse_pairs();
    let total = if sign > 0 { o + d } else { o - d };
    total.halve()
}

/// Product form of the Weyl denominator (in `s`-variables for so-odd).
pub fn weyl_denominator_product(group: Group, n: u32) -> Poly {
    let x = |i: u32| Poly::var(VarId::X(i));
    let xb = |i: u32| Poly::var(VarId::XBar(i));
    let pair_diff = |i: u32, j: u32| x(i) + xb(i) - x(j) - xb(j);
    let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    match group {
        Group::Gl => pairs().map(|(i, j)| x(i) - x(j)).product(),
        Group::Sp => {
            let single: Poly = (1..=n).map(|i| x(i) - xb(i)).product();
            single * pairs().map(|(i, j)| pair_diff(i, j)).product::<Poly>()
        }
        Group::SoOdd => {
            let single: Poly = (1..=n)
                .map(|i| Poly::var(VarId::S(i)) - Poly::var(VarId::SBar(i)))
                .product();
            let rest: Poly = pairs().map(|(i, j)| pair_diff(i, j)).product();
            let to_s = (1..=n)
                .flat_map(|i| {
                    [
                        (VarId::X(i), Poly::var(VarId::S(i)).pow(2)),
                        (VarId::XBar(i), Poly::var(VarId::SBar(i)).pow(2)),
                    ]
                })
                .collect();
            single * rest.substitute(&to_s)
        }
        _ => pairs().map(|(i, j)| pair_diff(i, j)).product(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VarId::*;

    fn x(i: u32) -> Poly {
        Poly::var(X(i))
    }
    fn xb(i: u32) -> Poly {
        Poly::var(XBar(i))
    }
    fn a(j: i32) -> Poly {
        Poly::var(A(j))
    }
    fn spec(g: Group, n: u32, l: &str) -> CharSpec {
        CharSpec::parse(g, n, l).unwrap()
    }

    #[test]
    fn alternant_examples() {
        assert_eq!(
            char_alternant(&spec(Group::Gl, 2, "1")).unwrap(),
            x(1) + x(2) + a(1) + a(2)
        );
        for g in Group::ALL {
            assert_eq!(char_alternant(&spec(g, 2, "")).unwrap(), if g == Group::OEvenDiff {
                Poly::zero()
            } else {
                Poly::one()
            });
        }
        assert_eq!(
            char_alternant(&spec(Group::Sp, 1, "1")).unwrap(),
            x(1) + xb(1) + a(1)
        );
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(
            char_jacobi_trudi(&spec(Group::Gl, 2, "1")).unwrap(),
            hfuncs::h(&VarSpec::full(HKind::Gl, 2), 1)
        );
        let d = char_jacobi_trudi(&spec(Group::OEvenDiff, 2, "1,1")).unwrap();
        assert_eq!(d.zero_a(), (x(1) - xb(1)) * (x(2) - xb(2)));
        assert!(char_jacobi_trudi(&spec(Group::OEvenDiff, 3, "2,1")).unwrap().is_zero());
    }

    #[test]
    fn raw_examples() {
        assert_eq!(
            char_raw(&spec(Group::Gl, 1, "3")).unwrap(),
            factorial_power(X(1), 3, 0)
        );
        assert_eq!(
            char_raw(&spec(Group::SoOdd, 1, "1")).unwrap(),
            x(1) + xb(1) + Poly::one() + a(1)
        );
        assert_eq!(
            char_raw(&spec(Group::OEven, 1, "1")).unwrap(),
            x(1) + xb(1) + Poly::constant(2) * a(1)
        );
        let one = Partition::parse("1", 1).unwrap();
        assert_eq!(char_raw_diff(&one).unwrap(), x(1) - xb(1));
        assert!(char_raw_diff(&Partition::parse("1", 2).unwrap()).unwrap().is_zero());
        let d = char_raw_diff(&Partition::parse("1,1", 2).unwrap()).unwrap();
        assert_eq!(d.zero_a(), (x(1) - xb(1)) * (x(2) - xb(2)));
    }

    #[test]
    fn so_even_examples() {
        let plus = char_so_even(&spec(Group::SoEvenPlus, 1, "1"), Method::JacobiTrudi).unwrap();
        assert_eq!(plus, x(1) + a(1));
        let minus = char_so_even(&spec(Group::SoEvenMinus, 1, "1"), Method::JacobiTrudi).unwrap();
        assert_eq!(minus, xb(1) + a(1));
        let degenerate =
            char_so_even(&spec(Group::SoEvenPlus, 2, "1"), Method::JacobiTrudi).unwrap();
        assert_eq!(
            degenerate,
            char_jacobi_trudi(&spec(Group::OEven, 2, "1")).unwrap()
        );
    }

    #[test]
    fn denominator_products() {
        assert_eq!(weyl_denominator_product(Group::Gl, 2), x(1) - x(2));
        assert_eq!(weyl_denominator_product(Group::OEven, 1), Poly::one());
        assert_eq!(weyl_denominator_product(Group::Sp, 1), x(1) - xb(1));
    }

    #[test]
    fn group_names_round_trip() {
        for g in Group::ALL {
            assert_eq!(g.name().parse::<Group>().unwrap(), g);
        }
        assert_eq!("eod".parse::<Group>().unwrap(), Group::OEvenDiff);
        assert!("so".parse::<Group>().is_err());
    }
}
