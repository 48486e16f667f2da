use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use super::VarId;

type ExpVec = SmallVec<[(u32, u32); 6]>;

/// A power product of variables with positive exponents.
///
/// Exponents are stored sparsely, sorted by the canonical variable code, so
/// the empty product is the unit monomial. Ordering is graded lexicographic
/// over the canonical variable sequence `x1, xb1, x2, xb2, ..., s1, sb1, ...,
/// a1, a2, ...`.
#[derive(Clone, Default)]
pub struct Monomial {
    deg: u32,
    exps: ExpVec,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds `v^e`. Returns `None` for an `a_j` with `j <= 0` and `e > 0`,
    /// since those parameters are identically zero.
    pub fn var_pow(v: VarId, e: u32) -> Option<Self> {
        if e == 0 {
            return Some(Self::one());
        }
        let code = v.code()?;
        let mut exps = ExpVec::new();
        exps.push((code, e));
        Some(Self { deg: e, exps })
    }

    /// Builds a monomial from `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs(pairs: &[(VarId, u32)]) -> Option<Self> {
        let mut m = Self::one();
        for &(v, e) in pairs {
            m = m.mul(&Self::var_pow(v, e)?);
        }
        Some(m)
    }

    pub(crate) fn from_codes(mut exps: ExpVec) -> Self {
        exps.retain(|(_, e)| *e > 0);
        exps.sort_unstable_by_key(|(c, _)| *c);
        let mut merged = ExpVec::new();
        for (c, e) in exps {
            match merged.last_mut() {
                Some((lc, le)) if *lc == c => *le += e,
                _ => merged.push((c, e)),
            }
        }
        let deg = merged.iter().map(|(_, e)| e).sum();
        Self { deg, exps: merged }
    }

    pub(crate) fn codes(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        let Some(code) = v.code() else { return 0 };
        self.exps
            .binary_search_by_key(&code, |(c, _)| *c)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    /// Iterates `(variable, exponent)` in canonical variable order.
    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().map(|&(c, e)| (VarId::from_code(c), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = ExpVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            deg: self.deg + other.deg,
            exps: out,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.deg > self.deg {
            return None;
        }
        let mut out = ExpVec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(c, e) in &self.exps {
            if j < other.exps.len() && other.exps[j].0 < c {
                return None;
            }
            if j < other.exps.len() && other.exps[j].0 == c {
                let oe = other.exps[j].1;
                j += 1;
                match e.cmp(&oe) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((c, e - oe)),
                }
            } else {
                out.push((c, e));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            exps: out,
        })
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (&(ca, ea), &(cb, eb)) in self.exps.iter().zip(other.exps.iter()) {
            if ca != cb {
                // the side holding the earlier variable has the larger exponent there
                return if ca < cb {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
