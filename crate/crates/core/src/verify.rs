//! Identity checks shared by the command-line `verify` command and the test
//! suites.
//!
//! Identities that hold for independent `x_i, xb_i` are compared
//! structurally. Ratio definitions and everything derived from the
//! `(1 - t^2)` and paired geometric factors only hold under `x_i xb_i = 1`;
//! those are compared through [`Poly::eq_mod_inverse_pairs`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{self, CharSpec, Group, Method};
use crate::hfuncs::{self, explicit_h, h, h_closed_one_pair, HKind, VarSpec};
use crate::latticepaths;
use crate::partition::Partition;
use crate::poly::{Poly, VarId};
use crate::tableaux::{self, weight};

/// Outcome of one check: `Err` carries a description of the first failure.
pub type Check = std::result::Result<(), String>;

/// Perturbation used as a negative control: shifts the parameter index of
/// every unbarred tableau weight.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Fault(pub i32);

fn fail(what: impl fmt::Display) -> Check {
    Err(what.to_string())
}

fn expect_eq(label: &str, left: &Poly, right: &Poly) -> Check {
    if left == right {
        Ok(())
    } else {
        fail(format!("{label}: {left} != {right}"))
    }
}

fn expect_eq_reduced(label: &str, left: &Poly, right: &Poly) -> Check {
    if left.eq_mod_inverse_pairs(right) {
        Ok(())
    } else {
        fail(format!("{label}: {left} != {right} (mod x*xb = 1)"))
    }
}

fn lift<T>(label: &str, r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{label}: {e}"))
}

/// Whether the JT determinant and the tableau sum agree without reduction.
fn tableaux_formal(group: Group) -> bool {
    matches!(group, Group::Gl | Group::Sp | Group::SoOdd | Group::OEvenDiff)
}

/// Alternant, Jacobi-Trudi, tableau and raw routes for one character.
pub fn check_routes(spec: &CharSpec, fault: Fault) -> Check {
    let label = format!("{} {}", spec.group, spec.lambda);
    let jt = lift(&label, characters::char_jacobi_trudi(spec))?;
    let tab = lift(&label, tableaux::character_by_tableaux_with(spec, fault.0))?;
    let alt = lift(&label, characters::char_alternant(spec))?;
    let raw = lift(&label, characters::character(spec, Method::Raw))?;
    if spec.group == Group::Gl {
        expect_eq(&format!("{label} alternant"), &alt, &jt)?;
        expect_eq(&format!("{label} raw"), &raw, &jt)?;
    } else {
        expect_eq_reduced(&format!("{label} alternant"), &alt, &jt)?;
        expect_eq_reduced(&format!("{label} raw"), &raw, &jt)?;
    }
    if tableaux_formal(spec.group) {
        expect_eq(&format!("{label} tableaux"), &tab, &jt)
    } else {
        expect_eq_reduced(&format!("{label} tableaux"), &tab, &jt)
    }
}

/// The so(2n) identities for one `λ` of full length.
pub fn check_so_even(lambda: &Partition, fault: Fault) -> Check {
    let label = format!("so-even {lambda}");
    let diff = CharSpec::new(Group::OEvenDiff, lambda.clone());
    let eo = CharSpec::new(Group::OEven, lambda.clone());
    let jt_d = lift(&label, characters::char_jacobi_trudi(&diff))?;
    let raw_d = lift(&label, characters::char_raw_diff(lambda))?;
    let tab_d = lift(&label, tableaux::character_by_tableaux_with(&diff, fault.0))?;
    expect_eq_reduced(&format!("{label} raw difference"), &raw_d, &jt_d)?;
    expect_eq(&format!("{label} difference tableaux"), &tab_d, &jt_d)?;
    let jt_o = lift(&label, characters::char_jacobi_trudi(&eo))?;
    let mut halves = Vec::new();
    for group in [Group::SoEvenPlus, Group::SoEvenMinus] {
        let spec = CharSpec::new(group, lambda.clone());
        let alg = lift(&label, characters::char_so_even(&spec, Method::JacobiTrudi))?;
        let tab = lift(&label, tableaux::character_by_tableaux_with(&spec, fault.0))?;
        expect_eq_reduced(&format!("{label} {group} tableaux"), &tab, &alg)?;
        halves.push(alg);
    }
    expect_eq_reduced(&format!("{label} sum"), &(&halves[0] + &halves[1]), &jt_o)?;
    expect_eq_reduced(&format!("{label} difference"), &(&halves[0] - &halves[1]), &jt_d)
}

/// Numerical values of the `a_j` used for the independence checks.
fn a_specialisations(p: &Poly) -> [HashMap<VarId, BigInt>; 2] {
    let vars: Vec<i32> = p
        .variables()
        .into_iter()
        .filter_map(|v| match v {
            VarId::A(j) => Some(j),
            _ => None,
        })
        .collect();
    [
        vars.iter().map(|&j| (VarId::A(j), BigInt::from(0))).collect(),
        vars.iter().map(|&j| (VarId::A(j), BigInt::from(3 * j - 7))).collect(),
    ]
}

/// Raw denominator equals the product formula and is free of `a`.
pub fn check_denominator(group: Group, n: u32) -> Check {
    let label = format!("{group} denominator n={n}");
    let raw = lift(&label, characters::raw_denominator(group, n))?;
    let product = characters::weyl_denominator_product(group, n);
    if group == Group::Gl {
        expect_eq(&label, &raw, &product)?;
    } else {
        expect_eq_reduced(&label, &raw, &product)?;
    }
    if raw.involves_a() {
        return fail(format!("{label}: depends on a"));
    }
    let [zero, other] = a_specialisations(&raw);
    expect_eq(
        &format!("{label} a-specialisation"),
        &raw.substitute_integers(&zero),
        &raw.substitute_integers(&other),
    )
}

fn pair_range(kind: HKind, from: u32, to: u32) -> VarSpec {
    VarSpec::pairs(kind, (from..=to).collect(), 0)
}

/// `h_m(i..j-1) - h_m(i+1..j) = (x_i + xb_i - x_j - xb_j) h_{m-1}(i..j)`
/// (`x_i - x_j` for GL).
pub fn check_recurrence(kind: HKind, m: i64, i: u32, j: u32) -> Check {
    let label = format!("{kind} recurrence m={m} i={i} j={j}");
    let x = |k| Poly::var(VarId::X(k));
    let xb = |k| Poly::var(VarId::XBar(k));
    let lhs = h(&pair_range(kind, i, j - 1), m) - h(&pair_range(kind, i + 1, j), m);
    let factor = match kind {
        HKind::Gl => x(i) - x(j),
        _ => x(i) + xb(i) - x(j) - xb(j),
    };
    let rhs = factor * h(&pair_range(kind, i, j), m - 1);
    if kind == HKind::Gl {
        expect_eq(&label, &lhs, &rhs)
    } else {
        expect_eq_reduced(&label, &lhs, &rhs)
    }
}

/// Invariance of `h_m` under permutations and bar swaps of its variables.
pub fn check_symmetry(kind: HKind, n: u32, m: i64) -> Check {
    let label = format!("{kind} symmetry n={n} m={m}");
    if kind == HKind::Gl {
        // mixed alphabet x_1, xb_2, x_3, …
        let vars: Vec<VarId> = (1..=n)
            .map(|i| if i % 2 == 0 { VarId::XBar(i) } else { VarId::X(i) })
            .collect();
        let base = h(&VarSpec::gl(vars.clone(), 0), m);
        let mut reversed = vars.clone();
        reversed.reverse();
        expect_eq(&label, &h(&VarSpec::gl(reversed, 0), m), &base)?;
        let swap: HashMap<VarId, Poly> = vars
            .iter()
            .map(|&v| (v, Poly::var(v.inverse_partner().unwrap())))
            .collect();
        let swapped = h(
            &VarSpec::gl(vars.iter().map(|v| v.inverse_partner().unwrap()).collect(), 0),
            m,
        );
        return expect_eq(&label, &base.substitute(&swap), &swapped);
    }
    let base = h(&VarSpec::full(kind, n), m);
    let mut order: Vec<u32> = (1..=n).collect();
    order.rotate_left(1);
    if kind != HKind::Eod {
        expect_eq(&label, &h(&VarSpec::pairs(kind, order, 0), m), &base)?;
    } else if n > 1 {
        // only the pairs after the first are interchangeable
        let mut tail: Vec<u32> = (2..=n).collect();
        tail.reverse();
        let mut order = vec![1];
        order.extend(tail);
        expect_eq(&label, &h(&VarSpec::pairs(kind, order, 0), m), &base)?;
    }
    for i in 1..=n {
        let swap: HashMap<VarId, Poly> = HashMap::from([
            (VarId::X(i), Poly::var(VarId::XBar(i))),
            (VarId::XBar(i), Poly::var(VarId::X(i))),
        ]);
        let expected = if kind == HKind::Eod && i == 1 {
            -base.clone()
        } else {
            base.clone()
        };
        expect_eq(&format!("{label} bar swap {i}"), &base.substitute(&swap), &expected)?;
    }
    Ok(())
}

/// Closed one-pair forms against the series.
pub fn check_closed_form(kind: HKind, m: u32) -> Check {
    let label = format!("{kind} closed form m={m}");
    let closed = lift(&label, h_closed_one_pair(kind, 1, m, 0))?;
    let series = h(&VarSpec::pairs(kind, vec![1], 0), m as i64);
    match kind {
        HKind::Oo => expect_eq_reduced(&label, &closed, &series),
        _ => expect_eq(&label, &closed, &series),
    }
}

/// Monomial expansions against the series; the odd orthogonal expansion
/// must not mention `a_{m+n}`.
pub fn check_explicit(kind: HKind, n: u32, m: u32) -> Check {
    let label = format!("{kind} expansion n={n} m={m}");
    let e = explicit_h(kind, n, m);
    let s = h(&VarSpec::full(kind, n), m as i64);
    if kind == HKind::Eo {
        expect_eq_reduced(&label, &e, &s)?;
    } else {
        expect_eq(&label, &e, &s)?;
    }
    if kind == HKind::Oo && e.contains_var(VarId::A((m + n) as i32)) {
        return fail(format!("{label}: mentions a{}", m + n));
    }
    Ok(())
}

/// The shifted-GL reductions of the paired families.
pub fn check_reductions(n: u32, m: i64) -> Check {
    let label = format!("reductions n={n} m={m}");
    let ni = n as i32;
    let interleaved: Vec<VarId> = (1..=n).flat_map(|i| [VarId::X(i), VarId::XBar(i)]).collect();
    let gl = |vars: &[VarId], m: i64, shift: i32| h(&VarSpec::gl(vars.to_vec(), shift), m);
    expect_eq(
        &format!("{label} sp"),
        &h(&VarSpec::full(HKind::Sp, n), m),
        &gl(&interleaved, m, -ni),
    )?;
    let oo = gl(&interleaved, m, 1 - ni)
        + (Poly::one() - hfuncs::a(m as i32 + ni)) * gl(&interleaved, m - 1, 1 - ni);
    expect_eq(&format!("{label} oo"), &h(&VarSpec::full(HKind::Oo, n), m), &oo)?;
    if m > 0 {
        let rest = &interleaved[2..];
        let with = |first: VarId| {
            let mut v = vec![first];
            v.extend_from_slice(rest);
            (Poly::var(first) + hfuncs::a(2 - ni)) * gl(&v, m - 1, 2 - ni)
        };
        let tail = if rest.is_empty() {
            Poly::zero()
        } else {
            gl(rest, m, 2 - ni)
        };
        let eo = with(VarId::X(1)) + with(VarId::XBar(1)) + tail;
        expect_eq_reduced(&format!("{label} eo"), &h(&VarSpec::full(HKind::Eo, n), m), &eo)?;
        let eod = with(VarId::X(1)) - with(VarId::XBar(1));
        expect_eq(&format!("{label} eod"), &h(&VarSpec::full(HKind::Eod, n), m), &eod)?;
    }
    Ok(())
}

/// Signed path sum, bijection with tableaux, and absence of crossing-free
/// non-identity tuples.
pub fn check_lgv(lambda: &Partition) -> Check {
    let n = lambda.rank() as u32;
    let label = format!("lgv {lambda}");
    let jt = lift(&label, characters::char_jacobi_trudi(&CharSpec::new(Group::Gl, lambda.clone())))?;
    expect_eq(&label, &latticepaths::lgv_signed_sum(n, lambda), &jt)?;
    for (sigma, _) in latticepaths::permutations(n).into_iter().skip(1) {
        if !latticepaths::non_intersecting_tuples(n, lambda, &sigma).is_empty() {
            return fail(format!("{label}: non-intersecting tuple for {sigma:?}"));
        }
    }
    let identity: Vec<u32> = (1..=n).collect();
    let mut from_paths = Vec::new();
    for tuple in latticepaths::non_intersecting_tuples(n, lambda, &identity) {
        let t = lift(&label, latticepaths::tuple_to_tableau(n, &tuple))?;
        let w: Poly = tuple.iter().map(|p| p.weight(n)).product();
        if weight(&t, HKind::Gl, n) != w {
            return fail(format!("{label}: weight mismatch for\n{t}"));
        }
        from_paths.push(t);
    }
    let mut tableaux = lift(&label, tableaux::enumerate(HKind::Gl, lambda))?;
    let key = |t: &tableaux::Tableau| t.render_inline();
    from_paths.sort_by_key(key);
    tableaux.sort_by_key(key);
    if from_paths != tableaux {
        return fail(format!(
            "{label}: {} path tuples vs {} tableaux",
            from_paths.len(),
            tableaux.len()
        ));
    }
    Ok(())
}

/// `h_m = 0` for `m < 0`, `h_0 = 1`, `λ = 0` gives 1 and the difference
/// character vanishes when `λ_n = 0`.
pub fn check_degenerate(n: u32) -> Check {
    let label = format!("degenerate n={n}");
    for kind in HKind::ALL {
        let spec = VarSpec::full(kind, n);
        for m in [-3, -1] {
            if !h(&spec, m).is_zero() {
                return fail(format!("{label}: {kind} h_{m} != 0"));
            }
        }
        let h0 = h(&spec, 0);
        let expected = if kind == HKind::Eod { Poly::zero() } else { Poly::one() };
        expect_eq(&format!("{label} {kind} h_0"), &h0, &expected)?;
    }
    let empty = Partition::empty(n as usize);
    for group in Group::ALL {
        if group == Group::OEvenDiff {
            continue;
        }
        for method in Method::ALL {
            let c = lift(&label, characters::character(&CharSpec::new(group, empty.clone()), method))?;
            expect_eq(&format!("{label} {group} {method} λ=0"), &c, &Poly::one())?;
        }
    }
    for lambda in Partition::all_bounded(n as usize, 2) {
        if lambda.part(n as usize) != 0 {
            continue;
        }
        let spec = CharSpec::new(Group::OEvenDiff, lambda.clone());
        for method in Method::ALL {
            let c = lift(&label, characters::character(&spec, method))?;
            if !c.is_zero() {
                return fail(format!("{label}: difference {lambda} by {method} is {c}"));
            }
        }
    }
    Ok(())
}

/// What to run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_rank: u32,
    pub max_part: u32,
    /// `None` means every group.
    pub groups: Option<Vec<Group>>,
    pub fault: Fault,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_rank: 3,
            max_part: 3,
            groups: None,
            fault: Fault::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {} ({} cases)", c.name, c.cases)?;
            if let Some(msg) = &c.failure {
                write!(f, ": {msg}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Job = Box<dyn Fn() -> Check + Send + Sync>;

struct Suite {
    name: String,
    jobs: Vec<Job>,
}

impl Suite {
    fn new(name: impl Into<String>) -> Self {
        Suite {
            name: name.into(),
            jobs: Vec::new(),
        }
    }

    fn push(&mut self, job: impl Fn() -> Check + Send + Sync + 'static) {
        self.jobs.push(Box::new(job));
    }

    fn run(&self) -> CheckResult {
        let outcomes: Vec<Check> = self.jobs.par_iter().map(|j| j()).collect();
        let failure = outcomes.into_iter().find_map(|r| r.err());
        CheckResult {
            name: self.name.clone(),
            cases: self.jobs.len(),
            passed: failure.is_none(),
            failure,
        }
    }
}

fn hkinds_for(groups: &[Group]) -> Vec<HKind> {
    let mut kinds: Vec<HKind> = groups.iter().filter_map(|g| g.hkind()).collect();
    if groups.iter().any(|g| g.so_even_sign().is_some()) {
        kinds.extend([HKind::Eo, HKind::Eod]);
    }
    kinds.sort_by_key(|k| HKind::ALL.iter().position(|x| x == k));
    kinds.dedup();
    kinds
}

/// Runs every suite selected by `opts`; report order is fixed.
pub fn run(opts: &VerifyOptions) -> Report {
    let groups: Vec<Group> = opts.groups.clone().unwrap_or_else(|| Group::ALL.to_vec());
    let kinds = hkinds_for(&groups);
    let fault = opts.fault;
    let ranks = 1..=opts.max_rank;
    let mut suites = Vec::new();

    for &group in &groups {
        if !Group::BASIC.contains(&group) {
            continue;
        }
        let mut s = Suite::new(format!("route agreement {group}"));
        for n in ranks.clone() {
            for lambda in Partition::all_bounded(n as usize, opts.max_part) {
                let spec = CharSpec::new(group, lambda);
                s.push(move || check_routes(&spec, fault));
            }
        }
        suites.push(s);
    }

    if groups
        .iter()
        .any(|g| matches!(g, Group::OEvenDiff | Group::SoEvenPlus | Group::SoEvenMinus))
    {
        let mut s = Suite::new("so(2n) decomposition");
        for n in ranks.clone() {
            for lambda in Partition::all_bounded(n as usize, opts.max_part) {
                if lambda.length() == n as usize {
                    s.push(move || check_so_even(&lambda, fault));
                }
            }
        }
        suites.push(s);
    }

    for &group in &groups {
        if !Group::BASIC.contains(&group) {
            continue;
        }
        let mut s = Suite::new(format!("denominator {group}"));
        for n in 1..=opts.max_rank + 1 {
            s.push(move || check_denominator(group, n));
        }
        suites.push(s);
    }

    let max_m = (opts.max_part + 1) as i64;
    for &kind in &kinds {
        if kind == HKind::Eod {
            continue;
        }
        let mut s = Suite::new(format!("recurrence {kind}"));
        for j in 2..=opts.max_rank.max(2) {
            for i in 1..j {
                for m in 0..=max_m {
                    s.push(move || check_recurrence(kind, m, i, j));
                }
            }
        }
        suites.push(s);
    }

    for &kind in &kinds {
        let mut s = Suite::new(format!("symmetry {kind}"));
        for n in ranks.clone() {
            for m in 0..=max_m {
                s.push(move || check_symmetry(kind, n, m));
            }
        }
        suites.push(s);
    }

    for &kind in &kinds {
        let mut s = Suite::new(format!("closed forms {kind}"));
        for m in 0..=opts.max_part + 2 {
            s.push(move || check_closed_form(kind, m));
        }
        if kind != HKind::Eod {
            for n in ranks.clone() {
                for m in 0..=opts.max_part + 1 {
                    s.push(move || check_explicit(kind, n, m));
                }
            }
        }
        suites.push(s);
    }

    if kinds.len() > 1 || !groups.contains(&Group::Gl) {
        let mut s = Suite::new("shifted reductions");
        for n in ranks.clone() {
            for m in 0..=max_m {
                s.push(move || check_reductions(n, m));
            }
        }
        suites.push(s);
    }

    if groups.contains(&Group::Gl) {
        let mut s = Suite::new("lattice paths gl");
        for n in ranks.clone() {
            for lambda in Partition::all_bounded(n as usize, opts.max_part) {
                s.push(move || check_lgv(&lambda));
            }
        }
        suites.push(s);
    }

    let mut s = Suite::new("degenerate cases");
    for n in ranks {
        s.push(move || check_degenerate(n));
    }
    suites.push(s);

    Report {
        checks: suites.iter().map(Suite::run).collect(),
    }
}
