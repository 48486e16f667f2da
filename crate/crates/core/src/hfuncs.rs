//! Factorial complete homogeneous functions `h_m` for each group family.
//!
//! Each `h_m` is the coefficient of `t^m` in a truncated generating function
//! built from geometric factors `1/(1 - t v)`, a family-specific prefactor
//! and the parameter product `∏_{j=1}^{L+m-1} (1 + t a_{j+r})`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{Poly, VarId};
use crate::series::TruncSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HKind {
    Gl,
    Sp,
    Oo,
    Eo,
    /// Difference kind for the even orthogonal ± split.
    Eod,
}

impl HKind {
    pub const ALL: [HKind; 5] = [HKind::Gl, HKind::Sp, HKind::Oo, HKind::Eo, HKind::Eod];
}

impl fmt::Display for HKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HKind::Gl => "gl",
            HKind::Sp => "sp",
            HKind::Oo => "oo",
            HKind::Eo => "eo",
            HKind::Eod => "eod",
        })
    }
}

/// The variables an `h_m` is taken over, plus the parameter shift `r`
/// (`a_j ↦ a_{j+r}`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSpec {
    kind: HKind,
    /// GL: the scalar variables, in order. Others: `x_i, xb_i` per pair.
    singles: Vec<VarId>,
    pairs: Vec<u32>,
    shift: i32,
}

impl VarSpec {
    /// A GL spec over arbitrary scalar variables.
    pub fn gl(vars: Vec<VarId>, shift: i32) -> Self {
        assert!(!vars.is_empty(), "variable list must be non-empty");
        VarSpec {
            kind: HKind::Gl,
            singles: vars,
            pairs: Vec::new(),
            shift,
        }
    }

    /// A paired spec; for `HKind::Gl` this means `x_i` for each listed `i`.
    pub fn pairs(kind: HKind, pairs: Vec<u32>, shift: i32) -> Self {
        assert!(!pairs.is_empty(), "pair list must be non-empty");
        if kind == HKind::Gl {
            return Self::gl(pairs.into_iter().map(VarId::X).collect(), shift);
        }
        VarSpec {
            kind,
            singles: Vec::new(),
            pairs,
            shift,
        }
    }

    /// The flag `x^{(i)} = (x_i, …, x_n)` (with barred partners where
    /// applicable), unshifted.
    pub fn flag(kind: HKind, i: u32, n: u32) -> Self {
        Self::pairs(kind, (i..=n).collect(), 0)
    }

    /// All variables of rank `n`, unshifted.
    pub fn full(kind: HKind, n: u32) -> Self {
        Self::flag(kind, 1, n)
    }

    pub fn kind(&self) -> HKind {
        self.kind
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// `L`: scalar variables for GL, pairs otherwise.
    pub fn len(&self) -> usize {
        match self.kind {
            HKind::Gl => self.singles.len(),
            _ => self.pairs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every scalar variable, pairs expanded as `x_i, xb_i`.
    pub fn scalar_vars(&self) -> Vec<VarId> {
        match self.kind {
            HKind::Gl => self.singles.clone(),
            _ => self
                .pairs
                .iter()
                .flat_map(|&i| [VarId::X(i), VarId::XBar(i)])
                .collect(),
        }
    }

    pub fn pair_indices(&self) -> &[u32] {
        &self.pairs
    }
}

/// `a_{j}` as a polynomial (zero for `j <= 0`).
pub fn a(j: i32) -> Poly {
    Poly::var(VarId::A(j))
}

/// `(v | τ^r a)^m = ∏_{k=1}^m (v + a_{k+r})` for a polynomial `v`.
pub fn factorial_power_of(v: &Poly, m: u32, shift: i32) -> Poly {
    (1..=m as i32).map(|k| v + &a(k + shift)).product()
}

/// `(v | τ^r a)^m` for a single variable.
pub fn factorial_power(v: VarId, m: u32, shift: i32) -> Poly {
    factorial_power_of(&Poly::var(v), m, shift)
}

/// `h_m` over `spec`.
pub fn h(spec: &VarSpec, m: i64) -> Poly {
    if m < 0 || (spec.kind == HKind::Eod && m == 0) {
        return Poly::zero();
    }
    if m == 0 {
        return Poly::one();
    }
    let cap = m as usize;
    let l = spec.len() as i64;
    let xv = |i: u32| Poly::var(VarId::X(i));
    let xbv = |i: u32| Poly::var(VarId::XBar(i));
    let mut s = match spec.kind {
        HKind::Gl => {
            let mut s = TruncSeries::one(cap);
            for &v in &spec.singles {
                s.times_geometric(&Poly::var(v));
            }
            s
        }
        HKind::Sp | HKind::Oo => {
            let mut s = TruncSeries::one(cap);
            if spec.kind == HKind::Oo {
                s.times_linear(&Poly::one());
            }
            for &i in &spec.pairs {
                s.times_geometric(&xv(i));
                s.times_geometric(&xbv(i));
            }
            s
        }
        HKind::Eo if spec.pairs.len() == 1 => {
            // δ_{m0} vanishes here since m > 0
            let i = spec.pairs[0];
            let g = TruncSeries::geometric(&xv(i), cap);
            let gb = TruncSeries::geometric(&xbv(i), cap);
            let coeffs = g
                .coeffs()
                .iter()
                .zip(gb.coeffs())
                .map(|(p, q)| p + q)
                .collect();
            TruncSeries::from_coeffs(coeffs, cap)
        }
        HKind::Eo => {
            let mut s = TruncSeries::one(cap);
            s.times_one_minus_t2();
            for &i in &spec.pairs {
                s.times_geometric(&xv(i));
                s.times_geometric(&xbv(i));
            }
            s
        }
        HKind::Eod => {
            let first = spec.pairs[0];
            let g = TruncSeries::geometric(&xv(first), cap);
            let gb = TruncSeries::geometric(&xbv(first), cap);
            let coeffs = g
                .coeffs()
                .iter()
                .zip(gb.coeffs())
                .map(|(p, q)| p - q)
                .collect();
            let mut s = TruncSeries::from_coeffs(coeffs, cap);
            for &i in &spec.pairs[1..] {
                s.times_geometric(&xv(i));
                s.times_geometric(&xbv(i));
            }
            s
        }
    };
    for j in 1..=(l + m - 1) {
        s.times_linear(&a(j as i32 + spec.shift));
    }
    s.coeffs()[cap].clone()
}

/// The closed form of `h_m` on the single pair `i` (single variable `x_i`
/// for GL).
///
/// For OO the closed form is a ratio in the half-power variables and is
/// only meaningful under `x_i xb_i = 1`; the result is returned reduced by
/// [`Poly::cancel_inverse_pairs`], and must be compared against the reduced
/// series value.
pub fn h_closed_one_pair(kind: HKind, i: u32, m: u32, shift: i32) -> Result<Poly> {
    let x = VarId::X(i);
    let xb = VarId::XBar(i);
    let fx = factorial_power(x, m, shift);
    let fxb = factorial_power(xb, m, shift);
    Ok(match kind {
        HKind::Gl => fx,
        HKind::Sp => {
            let num = Poly::var(x) * fx - Poly::var(xb) * fxb;
            num.exact_div(&(Poly::var(x) - Poly::var(xb)))?
        }
        HKind::Oo => {
            let (s, sb) = (Poly::var(VarId::S(i)), Poly::var(VarId::SBar(i)));
            let fs = factorial_power_of(&s.pow(2), m, shift);
            let fsb = factorial_power_of(&sb.pow(2), m, shift);
            let num = &s * &fs - &sb * &fsb;
            num.exact_div(&(&s - &sb))?
                .cancel_inverse_pairs()
                .map_s_to_x()?
        }
        HKind::Eo => {
            let delta = if m == 0 { Poly::one() } else { Poly::zero() };
            fx + fxb - delta
        }
        HKind::Eod => fx - fxb,
    })
}

/// Σ over `lo ≤ i_1 ≤ … ≤ i_len ≤ hi` of `∏_j w(i_j, j)`, with positions
/// `j = first, first+1, …`. An empty sequence contributes 1.
fn chain_sum(lo: u32, hi: u32, first: i32, len: u32, w: &dyn Fn(u32, i32) -> Poly) -> Poly {
    if len == 0 {
        return Poly::one();
    }
    if lo > hi {
        return Poly::zero();
    }
    let width = (hi - lo + 1) as usize;
    // prefix sums of this seed are 1 everywhere: a sequence may start at any index
    let mut dp: Vec<Poly> = vec![Poly::zero(); width];
    dp[0] = Poly::one();
    for step in 0..len {
        let j = first + step as i32;
        let mut acc = Poly::zero();
        let mut next = Vec::with_capacity(width);
        for (k, prev) in dp.iter().enumerate() {
            acc += prev;
            next.push(&acc * &w(lo + k as u32, j));
        }
        dp = next;
    }
    dp.into_iter().sum()
}

/// `z_{2k-1} = x_k`, `z_{2k} = xb_k`.
fn z(idx: u32) -> Poly {
    let k = idx.div_ceil(2);
    Poly::var(if idx % 2 == 1 {
        VarId::X(k)
    } else {
        VarId::XBar(k)
    })
}

/// The monomial expansion of `h_m` over all variables of rank `n`, as a sum
/// over weakly increasing index sequences.
pub fn explicit_h(kind: HKind, n: u32, m: u32) -> Poly {
    let ni = n as i32;
    match kind {
        HKind::Gl => chain_sum(1, n, 1, m, &|i, j| {
            Poly::var(VarId::X(i)) + a(i as i32 + j - 1)
        }),
        HKind::Sp => chain_sum(1, 2 * n, 1, m, &|i, j| z(i) + a(i as i32 - ni + j - 1)),
        HKind::Oo => {
            let w = |i: u32, j: i32| z(i) + a(i as i32 - ni + j);
            let head = chain_sum(1, 2 * n, 1, m, &w);
            if m == 0 {
                return head;
            }
            let tail = chain_sum(1, 2 * n, 1, m - 1, &w);
            head + tail * (Poly::one() - a(m as i32 + ni))
        }
        HKind::Eo => {
            let w = |i: u32, j: i32| z(i) + a(i as i32 - ni + j - 1);
            let mut total = chain_sum(3, 2 * n, 1, m, &w);
            for first in [VarId::X(1), VarId::XBar(1)] {
                let v = Poly::var(first);
                for k in 1..=m {
                    let prefix: Poly = (2..=k as i32 + 1).map(|l| &v + &a(l - ni)).product();
                    total += prefix * chain_sum(3, 2 * n, k as i32 + 1, m - k, &w);
                }
            }
            total
        }
        HKind::Eod => {
            // not an expansion the theory provides; fall back to the series
            h(&VarSpec::full(HKind::Eod, n), m as i64)
        }
    }
}
