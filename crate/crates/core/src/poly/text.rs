//! Text and JSON forms of [`Poly`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::{Monomial, Poly, VarId};
use crate::error::{Error, Result};

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<VarId> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        let split = s
            .find(|c: char| c == '-' || c.is_ascii_digit())
            .ok_or_else(bad)?;
        let (name, idx) = s.split_at(split);
        if name == "a" {
            return idx.parse().map(VarId::A).map_err(|_| bad());
        }
        let i: u32 = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match name {
            "x" => Ok(VarId::X(i)),
            "xb" => Ok(VarId::XBar(i)),
            "s" => Ok(VarId::S(i)),
            "sb" => Ok(VarId::SBar(i)),
            _ => Err(bad()),
        }
    }
}

/// A factor is either a coefficient or a variable power.
type Factor = (Option<BigInt>, Option<(VarId, u32)>);

fn parse_factor(tok: &str) -> Result<Factor> {
    let tok = tok.trim();
    if tok.is_empty() {
        return Err(Error::Parse("empty factor".into()));
    }
    if tok.chars().all(|c| c.is_ascii_digit()) {
        let n = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{tok}`")))?;
        return Ok((Some(n), None));
    }
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => (
            n.trim(),
            e.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
        ),
        None => (tok, 1),
    };
    Ok((None, Some((name.parse()?, exp))))
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the canonical rendering (and any reordering of it).
    fn from_str(s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly::zero();
        let mut rest = s;
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let cut = rest.find([' ', '+', '-']).map(|p| {
                // a leading minus inside a variable index, e.g. `a-1`, belongs to the factor
                if rest[..p].ends_with('a') && rest[p..].starts_with('-') {
                    rest[p + 1..]
                        .find([' ', '+', '-'])
                        .map_or(rest.len(), |q| p + 1 + q)
                } else {
                    p
                }
            });
            let (term, tail) = match cut {
                Some(p) => rest.split_at(p),
                None => (rest, ""),
            };
            let mut coeff = BigInt::from(sign);
            let mut pairs = Vec::new();
            for f in term.split('*') {
                match parse_factor(f)? {
                    (Some(c), _) => coeff *= c,
                    (_, Some(p)) => pairs.push(p),
                    _ => unreachable!(),
                }
            }
            if let Some(m) = Monomial::from_pairs(&pairs) {
                out.add_term(m, coeff);
            }
            let tail = tail.trim_start();
            if tail.is_empty() {
                break;
            }
            sign = match tail.as_bytes()[0] {
                b'+' => 1,
                b'-' => -1,
                _ => return Err(Error::Parse(format!("expected operator near `{tail}`"))),
            };
            rest = tail[1..].trim_start();
            if rest.is_empty() {
                return Err(Error::Parse("dangling operator".into()));
            }
        }
        Ok(out)
    }
}

fn coeff_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => Value::String(c.to_string()),
    }
}

impl Poly {
    /// `{"terms":[{"coeff":…, "monomial":{"x1":e,…}}, …]}` in descending
    /// order. Coefficients beyond 64 bits are emitted as decimal strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let mono: Map<String, Value> =
                    m.iter().map(|(v, e)| (v.to_string(), json!(e))).collect();
                json!({ "coeff": coeff_value(c), "monomial": mono })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Poly> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = Poly::zero();
        for t in terms {
            let coeff: BigInt = match t.get("coeff") {
                Some(Value::Number(n)) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("non-integer coefficient"))?,
                Some(Value::String(s)) => s.parse().map_err(|_| bad("bad coefficient string"))?,
                _ => return Err(bad("missing coefficient")),
            };
            let mono = t
                .get("monomial")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing monomial"))?;
            let mut pairs = Vec::with_capacity(mono.len());
            for (name, e) in mono {
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("bad exponent"))?;
                pairs.push((name.parse()?, e));
            }
            if let Some(m) = Monomial::from_pairs(&pairs) {
                out.add_term(m, coeff);
            }
        }
        Ok(out)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        let v = Value::deserialize(d)?;
        Poly::from_json(&v).map_err(D::Error::custom)
    }
}
