//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! The variable universe is fixed: `x_i` and `xb_i` (the barred partner,
//! treated as an independent indeterminate), the half-power symbols `s_i`,
//! `sb_i`, and the factorial parameters `a_j`. Parameters `a_j` with `j <= 0`
//! are zero by convention and never appear in a stored monomial.

pub mod det;
mod monomial;
mod text;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

pub use det::{det_bareiss, det_cofactor, determinant};
pub use monomial::Monomial;

use crate::error::{Error, Result};

const FAMILY_SHIFT: u32 = 24;
const FAMILY_X: u32 = 0;
const FAMILY_S: u32 = 1;
const FAMILY_A: u32 = 2;

/// A variable of the polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarId {
    X(u32),
    XBar(u32),
    /// Half-power symbol with `s_i^2 = x_i`.
    S(u32),
    SBar(u32),
    /// Factorial parameter `a_j`; zero when `j <= 0`.
    A(i32),
}

impl VarId {
    /// Dense code whose natural order is the canonical variable order.
    /// `None` for the vanishing parameters `a_j`, `j <= 0`.
    pub(crate) fn code(self) -> Option<u32> {
        let pair = |family: u32, i: u32, bar: u32| {
            assert!(i >= 1, "variable index must be positive");
            (family << FAMILY_SHIFT) | (2 * (i - 1) + bar)
        };
        match self {
            VarId::X(i) => Some(pair(FAMILY_X, i, 0)),
            VarId::XBar(i) => Some(pair(FAMILY_X, i, 1)),
            VarId::S(i) => Some(pair(FAMILY_S, i, 0)),
            VarId::SBar(i) => Some(pair(FAMILY_S, i, 1)),
            VarId::A(j) if j >= 1 => Some((FAMILY_A << FAMILY_SHIFT) | j as u32),
            VarId::A(_) => None,
        }
    }

    pub(crate) fn from_code(code: u32) -> VarId {
        let family = code >> FAMILY_SHIFT;
        let idx = code & ((1 << FAMILY_SHIFT) - 1);
        let (i, bar) = (idx / 2 + 1, idx % 2 == 1);
        match (family, bar) {
            (FAMILY_X, false) => VarId::X(i),
            (FAMILY_X, true) => VarId::XBar(i),
            (FAMILY_S, false) => VarId::S(i),
            (FAMILY_S, true) => VarId::SBar(i),
            _ => VarId::A(idx as i32),
        }
    }

    /// The partner under `x_i xb_i = 1` (resp. `s_i sb_i = 1`).
    pub fn inverse_partner(self) -> Option<VarId> {
        match self {
            VarId::X(i) => Some(VarId::XBar(i)),
            VarId::XBar(i) => Some(VarId::X(i)),
            VarId::S(i) => Some(VarId::SBar(i)),
            VarId::SBar(i) => Some(VarId::S(i)),
            VarId::A(_) => None,
        }
    }

    pub fn is_a(self) -> bool {
        matches!(self, VarId::A(_))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::X(i) => write!(f, "x{i}"),
            VarId::XBar(i) => write!(f, "xb{i}"),
            VarId::S(i) => write!(f, "s{i}"),
            VarId::SBar(i) => write!(f, "sb{i}"),
            VarId::A(j) => write!(f, "a{j}"),
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |v: &VarId| match (v.code(), v) {
            (Some(c), _) => c as i64,
            (None, VarId::A(j)) => ((FAMILY_A << FAMILY_SHIFT) as i64) + *j as i64,
            (None, _) => unreachable!(),
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in canonical form: no zero coefficients are stored, so
/// structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    /// The polynomial `v`; zero for `a_j` with `j <= 0`.
    pub fn var(v: VarId) -> Self {
        Self::term(BigInt::one(), &[(v, 1)])
    }

    /// A single term `c * prod v^e`, annihilated if it contains a vanishing
    /// parameter.
    pub fn term(c: BigInt, pairs: &[(VarId, u32)]) -> Self {
        match Monomial::from_pairs(pairs) {
            Some(m) => Self::from_monomial(c, m),
            None => Self::zero(),
        }
    }

    pub fn from_monomial(c: BigInt, m: Monomial) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn from_hash(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Self {
            terms: v.into_iter().collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading_term().map_or(0, |(m, _)| m.degree())
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// True if some stored monomial involves a factorial parameter.
    pub fn involves_a(&self) -> bool {
        self.terms.keys().any(|m| m.iter().any(|(v, _)| v.is_a()))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return other.mul_monomial(m, c);
        }
        if other.len() == 1 {
            let (m, c) = other.terms.iter().next().unwrap();
            return self.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 20));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_hash(acc)
    }

    /// Exact quotient `self / divisor` in the polynomial ring.
    ///
    /// Uses leading-term division under the graded lexicographic order; a
    /// nonzero remainder means `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if divisor.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.div(lm).ok_or(Error::DivisionNotExact)?;
                let (qc, r) = c.div_rem(lc);
                if !r.is_zero() {
                    return Err(Error::DivisionNotExact);
                }
                terms.insert(q, qc);
            }
            return Ok(Poly { terms });
        }
        let (lm, lc) = (lm.clone(), lc.clone());
        let tail: Vec<(Monomial, BigInt)> = divisor
            .terms
            .iter()
            .rev()
            .skip(1)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let mut rem = self.terms.clone();
        let mut quotient: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lm).ok_or(Error::DivisionNotExact)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact);
            }
            for (tm, tc) in &tail {
                let pm = tm.mul(&qm);
                let delta = tc * &qc;
                use std::collections::btree_map::Entry;
                match rem.entry(pm) {
                    Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Poly {
            terms: quotient.into_iter().collect(),
        })
    }

    /// Divides every coefficient by two.
    pub fn halve(&self) -> Result<Poly> {
        let two = BigInt::from(2);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(&two);
            if !r.is_zero() {
                return Err(Error::OddCoefficient);
            }
            terms.insert(m.clone(), q);
        }
        Ok(Poly { terms })
    }

    /// Simultaneous substitution; unmapped variables pass through.
    pub fn substitute(&self, map: &HashMap<VarId, Poly>) -> Poly {
        let mut powers: HashMap<(VarId, u32), Poly> = HashMap::new();
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept: SmallVec<[(u32, u32); 6]> = SmallVec::new();
            let mut factor = Poly::from_bigint(c.clone());
            for (&(code, e), (v, _)) in m.codes().iter().zip(m.iter()) {
                match map.get(&v) {
                    Some(image) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| image.pow(e))
                            .clone();
                        factor = &factor * &pw;
                    }
                    None => kept.push((code, e)),
                }
            }
            let rest = Monomial::from_codes(kept);
            acc += factor.mul_monomial(&rest, &BigInt::one());
        }
        acc
    }

    /// Substitutes integer values; variables without a value pass through.
    pub fn substitute_integers(&self, point: &HashMap<VarId, BigInt>) -> Poly {
        let map: HashMap<VarId, Poly> = point
            .iter()
            .map(|(v, c)| (*v, Poly::from_bigint(c.clone())))
            .collect();
        self.substitute(&map)
    }

    /// Sets every `a_j` to zero.
    pub fn zero_a(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| !m.iter().any(|(v, _)| v.is_a()))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Rewrites `s_i^(2e)` to `x_i^e` and `sb_i^(2e)` to `xb_i^e`.
    pub fn map_s_to_x(&self) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut codes: SmallVec<[(u32, u32); 6]> = SmallVec::new();
            for (v, e) in m.iter() {
                let target = match v {
                    VarId::S(i) => Some(VarId::X(i)),
                    VarId::SBar(i) => Some(VarId::XBar(i)),
                    _ => None,
                };
                match target {
                    Some(t) => {
                        if e % 2 != 0 {
                            return Err(Error::OddHalfPower);
                        }
                        codes.push((t.code().unwrap(), e / 2));
                    }
                    None => codes.push((v.code().unwrap(), e)),
                }
            }
            out.add_term(Monomial::from_codes(codes), c.clone());
        }
        Ok(out)
    }

    /// Exact value at an integer point covering every variable of `self`.
    pub fn eval_integer(&self, point: &HashMap<VarId, BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let val = point.get(&v).ok_or(Error::MissingAssignment(v))?;
                t *= num_traits::pow(val.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Canonical representative modulo `x_i xb_i = 1` and `s_i sb_i = 1`:
    /// in every monomial the common power of each inverse pair is cancelled.
    pub fn cancel_inverse_pairs(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(cancel_monomial(m), c.clone());
        }
        out
    }

    /// Equality under `x_i xb_i = 1` and `s_i sb_i = 1`.
    pub fn eq_mod_inverse_pairs(&self, other: &Poly) -> bool {
        self.cancel_inverse_pairs() == other.cancel_inverse_pairs()
    }

    /// Exact division in the Laurent ring where `xb_i = x_i^-1` and
    /// `sb_i = s_i^-1`. The result is returned in the reduced form of
    /// [`Poly::cancel_inverse_pairs`].
    pub fn laurent_exact_div(&self, divisor: &Poly) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let (p, p_shift) = to_one_sided(&self.cancel_inverse_pairs());
        let (q, q_shift) = to_one_sided(&divisor.cancel_inverse_pairs());
        let quotient = p.exact_div(&q)?;
        let mut offset: BTreeMap<u32, i64> = BTreeMap::new();
        for (code, s) in p_shift {
            *offset.entry(code).or_default() += s;
        }
        for (code, s) in q_shift {
            *offset.entry(code).or_default() -= s;
        }
        Ok(from_one_sided(&quotient, &offset))
    }

    /// Largest `j` such that `a_j` occurs.
    pub fn max_a_index(&self) -> Option<i32> {
        self.variables()
            .into_iter()
            .filter_map(|v| match v {
                VarId::A(j) => Some(j),
                _ => None,
            })
            .max()
    }

    /// Sum of absolute values of coefficients; handy as a size measure.
    pub fn coefficient_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }
}

fn cancel_monomial(m: &Monomial) -> Monomial {
    let mut signed: BTreeMap<u32, i64> = BTreeMap::new();
    let mut rest: SmallVec<[(u32, u32); 6]> = SmallVec::new();
    for &(code, e) in m.codes() {
        let family = code >> FAMILY_SHIFT;
        if family == FAMILY_A {
            rest.push((code, e));
        } else {
            let base = code & !1;
            let sign = if code & 1 == 1 { -1 } else { 1 };
            *signed.entry(base).or_default() += sign * e as i64;
        }
    }
    for (base, s) in signed {
        match s.cmp(&0) {
            std::cmp::Ordering::Greater => rest.push((base, s as u32)),
            std::cmp::Ordering::Less => rest.push((base | 1, (-s) as u32)),
            std::cmp::Ordering::Equal => {}
        }
    }
    Monomial::from_codes(rest)
}

/// Signed exponents per base code, the `a` part, and the coefficient.
type SignedTerm<'a> = (BTreeMap<u32, i64>, Vec<(u32, u32)>, &'a BigInt);

/// Maps a reduced Laurent polynomial to an ordinary polynomial in the
/// unbarred variables, multiplying by the Laurent monomial that makes the
/// lowest exponent of each `x_i` (or `s_i`) exactly zero. Returns the applied
/// shift per base code.
fn to_one_sided(p: &Poly) -> (Poly, BTreeMap<u32, i64>) {
    let mut min_exp: BTreeMap<u32, i64> = BTreeMap::new();
    let signed_terms: Vec<SignedTerm<'_>> = p
        .terms
        .iter()
        .map(|(m, c)| {
            let mut signed = BTreeMap::new();
            let mut a_part = Vec::new();
            for &(code, e) in m.codes() {
                if code >> FAMILY_SHIFT == FAMILY_A {
                    a_part.push((code, e));
                } else {
                    let sign = if code & 1 == 1 { -1 } else { 1 };
                    *signed.entry(code & !1).or_insert(0) += sign * e as i64;
                }
            }
            (signed, a_part, c)
        })
        .collect();
    // true minimum per base, a term without the base counting as exponent 0,
    // so that the whole monomial content is divided out
    let bases: BTreeSet<u32> = signed_terms
        .iter()
        .flat_map(|(signed, _, _)| signed.keys().copied())
        .collect();
    for base in bases {
        let lowest = signed_terms
            .iter()
            .map(|(signed, _, _)| signed.get(&base).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        min_exp.insert(base, lowest);
    }
    let shift: BTreeMap<u32, i64> = min_exp.iter().map(|(&b, &s)| (b, -s)).collect();
    let mut out = Poly::zero();
    for (signed, a_part, c) in signed_terms {
        let mut codes: SmallVec<[(u32, u32); 6]> = a_part.into_iter().collect();
        for (&base, &sh) in &shift {
            let e = signed.get(&base).copied().unwrap_or(0) + sh;
            codes.push((base, e as u32));
        }
        out.add_term(Monomial::from_codes(codes), c.clone());
    }
    (out, shift)
}

fn from_one_sided(p: &Poly, offset: &BTreeMap<u32, i64>) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        let mut signed: BTreeMap<u32, i64> = offset.iter().map(|(&b, &s)| (b, -s)).collect();
        let mut codes: SmallVec<[(u32, u32); 6]> = SmallVec::new();
        for &(code, e) in m.codes() {
            if code >> FAMILY_SHIFT == FAMILY_A {
                codes.push((code, e));
            } else {
                *signed.entry(code).or_insert(0) += e as i64;
            }
        }
        for (base, s) in signed {
            if s > 0 {
                codes.push((base, s as u32));
            } else if s < 0 {
                codes.push((base | 1, (-s) as u32));
            }
        }
        out.add_term(Monomial::from_codes(codes), c.clone());
    }
    out
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        if self.len() < rhs.len() {
            let lhs = std::mem::replace(self, rhs);
            for (m, c) in lhs.terms {
                self.add_term(m, c);
            }
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(mut self, rhs: Poly) -> Poly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(mut self, rhs: &Poly) -> Poly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
    };
}

binop!(Add, add, add_assign);
binop!(Sub, sub, sub_assign);

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_impl(rhs)
    }
}

impl Mul<Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_impl(&rhs)
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_impl(rhs)
    }
}

impl Mul<Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_impl(&rhs)
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = Poly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = Poly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}
