//! Acceptance criteria 1–9. Each prints a PASS/FAIL line; run with
//! `cargo test -p flc-core --test acceptance -- --nocapture` to see them.
//!
//! Identities among the paired families (sp, so-odd, o-even) only hold
//! with `xb_i = 1/x_i`; those sides are compared as canonical Laurent
//! representatives (every `x_i xb_i` cancelled), which is exact equality in
//! that ring. Everything that also holds with independent `xb_i` is checked
//! structurally.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use flc_core::characters::{self, char_jacobi_trudi, char_raw_diff, char_so_even};
use flc_core::hfuncs::{explicit_h, h, VarSpec};
use flc_core::latticepaths::{self, LatticePath};
use flc_core::tableaux::{self, diff_tableau_sum, so_even_tableau_sum};
use flc_core::{CharSpec, Entry, Group, HKind, Method, Partition, Poly, Tableau, VarId};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn x(i: u32) -> Poly {
    Poly::var(VarId::X(i))
}
fn xb(i: u32) -> Poly {
    Poly::var(VarId::XBar(i))
}
/// `a_j`, with `a_j = 0` for `j ≤ 0`.
fn a(j: i32) -> Poly {
    if j <= 0 {
        Poly::zero()
    } else {
        Poly::var(VarId::A(j))
    }
}

fn same(label: &str, l: &Poly, r: &Poly) -> Outcome {
    if l == r {
        Ok(())
    } else {
        Err(format!("{label}: {l} != {r}"))
    }
}

fn same_laurent(label: &str, l: &Poly, r: &Poly) -> Outcome {
    if l.cancel_inverse_pairs() == r.cancel_inverse_pairs() {
        Ok(())
    } else {
        Err(format!("{label}: {l} != {r} as Laurent polynomials"))
    }
}

fn ok<T>(label: &str, r: flc_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{label}: {e}"))
}

fn first_failure(results: Vec<Outcome>) -> Outcome {
    results.into_iter().collect::<Result<Vec<()>, String>>().map(|_| ())
}

fn partitions(max_rank: usize, max_part: u32) -> Vec<Partition> {
    (1..=max_rank)
        .flat_map(|n| Partition::all_bounded(n, max_part))
        .collect()
}

// ---------------------------------------------------------------- 1

fn route_agreement() -> Outcome {
    let cases: Vec<(Group, Partition)> = [Group::Gl, Group::Sp, Group::SoOdd, Group::OEven]
        .into_iter()
        .flat_map(|g| partitions(3, 3).into_iter().map(move |l| (g, l)))
        .collect();
    first_failure(
        cases
            .into_par_iter()
            .map(|(g, lambda)| {
                let label = format!("{g} {lambda}");
                let spec = CharSpec::new(g, lambda);
                let raw = ok(&label, characters::character(&spec, Method::Raw))?;
                let alt = ok(&label, characters::character(&spec, Method::Alternant))?;
                let jt = ok(&label, characters::character(&spec, Method::JacobiTrudi))?;
                let tab = ok(&label, characters::character(&spec, Method::Tableaux))?;
                match g {
                    Group::Gl => {
                        same(&label, &raw, &alt)?;
                        same(&label, &alt, &jt)?;
                        same(&label, &jt, &tab)
                    }
                    Group::Sp | Group::SoOdd => {
                        same(&label, &jt, &tab)?;
                        same_laurent(&label, &raw, &alt)?;
                        same_laurent(&label, &alt, &jt)
                    }
                    _ => {
                        same_laurent(&label, &raw, &alt)?;
                        same_laurent(&label, &alt, &jt)?;
                        same_laurent(&label, &jt, &tab)
                    }
                }
            })
            .collect(),
    )
}

// ---------------------------------------------------------------- 2

fn so_even_suite() -> Outcome {
    let cases: Vec<Partition> = partitions(3, 3)
        .into_iter()
        .filter(|l| l.length() == l.rank())
        .collect();
    first_failure(
        cases
            .into_par_iter()
            .map(|lambda| {
                let label = format!("so(2n) {lambda}");
                let diff = CharSpec::new(Group::OEvenDiff, lambda.clone());
                let jt_d = ok(&label, char_jacobi_trudi(&diff))?;
                same_laurent(&label, &jt_d, &ok(&label, char_raw_diff(&lambda))?)?;
                same(&label, &jt_d, &ok(&label, diff_tableau_sum(&lambda))?)?;
                let plus = CharSpec::new(Group::SoEvenPlus, lambda.clone());
                let minus = CharSpec::new(Group::SoEvenMinus, lambda.clone());
                let p = ok(&label, char_so_even(&plus, Method::JacobiTrudi))?;
                let m = ok(&label, char_so_even(&minus, Method::JacobiTrudi))?;
                same_laurent(&label, &p, &ok(&label, so_even_tableau_sum(&lambda, true))?)?;
                same_laurent(&label, &m, &ok(&label, so_even_tableau_sum(&lambda, false))?)?;
                let o = ok(&label, char_jacobi_trudi(&CharSpec::new(Group::OEven, lambda.clone())))?;
                same_laurent(&format!("{label} sum"), &(&p + &m), &o)?;
                same_laurent(&format!("{label} difference"), &(&p - &m), &jt_d)
            })
            .collect(),
    )
}

// ---------------------------------------------------------------- 3

fn u(k: u32) -> Entry {
    Entry::Unbarred(k)
}
fn b(k: u32) -> Entry {
    Entry::Barred(k)
}

fn check_picture(
    label: &str,
    kind: HKind,
    n: u32,
    rows: Vec<Vec<Entry>>,
    expected: Vec<Vec<Poly>>,
) -> Outcome {
    let t = Tableau::from_rows(rows);
    if !t.is_valid(kind, n) {
        return Err(format!("{label}: tableau rejected\n{t}"));
    }
    let shape = ok(label, t.shape(n as usize))?;
    if !ok(label, tableaux::enumerate(kind, &shape))?.contains(&t) {
        return Err(format!("{label}: tableau not enumerated"));
    }
    let got = tableaux::weight_factors(&t, kind, n);
    if got != expected {
        return Err(format!("{label}: weights {got:?}"));
    }
    Ok(())
}

fn golden_gl() -> Outcome {
    let rows = vec![
        vec![u(1), u(1), u(2), u(4)],
        vec![u(2), u(3), u(3)],
        vec![u(4), u(4), u(4)],
    ];
    let expected = vec![
        vec![x(1) + a(1), x(1) + a(2), x(2) + a(4), x(4) + a(7)],
        vec![x(2) + a(1), x(3) + a(3), x(3) + a(4)],
        vec![x(4) + a(2), x(4) + a(3), x(4) + a(4)],
    ];
    check_picture("gl picture", HKind::Gl, 4, rows.clone(), expected)?;
    // the lattice path tuple drawn alongside it
    let tuple = [((1, 4), "HHVHVVH"), ((2, 3), "HVHHV"), ((3, 2), "VHHH"), ((4, 1), "")]
        .into_iter()
        .map(|(s, w)| LatticePath::from_word(s, w).unwrap())
        .collect::<Vec<_>>();
    let lambda = Partition::new(&[4, 3, 3], 4).unwrap();
    for (j, p) in tuple.iter().enumerate() {
        if p.end() != latticepaths::end_point(4, &lambda, j as u32 + 1) {
            return Err(format!("gl picture: path {} ends at {:?}", j + 1, p.end()));
        }
    }
    let t = ok("gl picture", latticepaths::tuple_to_tableau(4, &tuple))?;
    same(
        "gl picture path weight",
        &tuple.iter().map(|p| p.weight(4)).product(),
        &tableaux::weight(&t, HKind::Gl, 4),
    )?;
    if t != Tableau::from_rows(rows) {
        return Err(format!("gl picture: paths read as\n{t}"));
    }
    Ok(())
}

fn golden_sp() -> Outcome {
    let rows = vec![
        vec![u(1), b(1), u(2), b(4)],
        vec![b(3), u(4), u(4)],
        vec![u(4), b(4), b(4)],
    ];
    let expected = vec![
        vec![x(1), xb(1), x(2) + a(1), xb(4) + a(7)],
        vec![xb(3) + a(1), x(4) + a(3), x(4) + a(4)],
        vec![x(4) + a(1), xb(4) + a(3), xb(4) + a(4)],
    ];
    check_picture("sp picture", HKind::Sp, 4, rows, expected)
}

fn golden_oo() -> Outcome {
    let one = Poly::one;
    let rows = vec![
        vec![u(1), b(1), u(2), b(4)],
        vec![u(3), u(4), Entry::Zero],
        vec![u(4), b(4), Entry::Zero],
    ];
    let expected = vec![
        vec![x(1), xb(1), x(2) + a(2), xb(4) + a(8)],
        vec![x(3) + a(1), x(4) + a(4), one() - a(6)],
        vec![x(4) + a(2), xb(4) + a(4), one() - a(5)],
    ];
    check_picture("oo picture", HKind::Oo, 4, rows, expected)
}

fn golden_eo() -> Outcome {
    let rows = vec![
        vec![u(2), u(2), b(2), b(2), u(4)],
        vec![b(2), u(3), u(3), b(3), b(4)],
        vec![b(3), u(4), u(4), b(4)],
        vec![u(4), b(4), b(4)],
    ];
    let expected = vec![
        vec![x(2) + a(-1), x(2) + a(0), xb(2) + a(2), xb(2) + a(3), x(4) + a(7)],
        vec![xb(2) + a(-1), x(3) + a(1), x(3) + a(2), xb(3) + a(4), xb(4) + a(7)],
        vec![xb(3) + a(0), x(4) + a(2), x(4) + a(3), xb(4) + a(5)],
        vec![x(4) + a(1), xb(4) + a(2), xb(4) + a(3)],
    ];
    check_picture("eo picture", HKind::Eo, 4, rows.clone(), expected)?;
    let zeta = Tableau::from_rows(rows).stats(HKind::Eo).zeta;
    if zeta != 1 {
        return Err(format!("eo picture: ζ = {zeta}"));
    }
    Ok(())
}

fn golden_so4() -> Outcome {
    let w = |r1: [Poly; 2], r2: [Poly; 2]| vec![r1.to_vec(), r2.to_vec()];
    let plus = vec![
        w([x(1) + a(0), x(1) + a(1)], [x(2) + a(1), x(2) + a(2)]),
        w([x(1) + a(0), x(2) + a(2)], [x(2) + a(1), xb(2) + a(2)]),
        w([xb(1) + a(0), x(2) + a(2)], [xb(2) + a(1), xb(2) + a(2)]),
        w([xb(1) + a(0), xb(1) + a(1)], [xb(2) + a(1), xb(2) + a(2)]),
        w([x(2) + a(1), x(2) + a(2)], [xb(2) + a(1), xb(2) + a(2)]),
    ];
    let minus = vec![
        w([x(1) + a(0), x(1) + a(1)], [xb(2) + a(1), xb(2) + a(2)]),
        w([x(1) + a(0), x(2) + a(2)], [xb(2) + a(1), xb(2) + a(2)]),
        w([xb(1) + a(0), x(2) + a(2)], [x(2) + a(1), xb(2) + a(2)]),
        w([xb(1) + a(0), xb(1) + a(1)], [x(2) + a(1), x(2) + a(2)]),
        w([x(2) + a(1), x(2) + a(2)], [xb(2) + a(1), xb(2) + a(2)]),
    ];
    let lambda = Partition::new(&[2, 2], 2).unwrap();
    for (group, expected) in [(Group::SoEvenPlus, plus), (Group::SoEvenMinus, minus)] {
        let label = format!("so(4) {group}");
        let got = ok(&label, tableaux::weighted_tableaux(&CharSpec::new(group, lambda.clone())))?;
        let mut got_weights: Vec<String> = got
            .iter()
            .map(|wt| {
                if wt.coeff != 1 {
                    return format!("coefficient {}", wt.coeff);
                }
                format!("{:?}", tableaux::weight_factors(&wt.tableau, HKind::Eo, 2))
            })
            .collect();
        let mut want: Vec<String> = expected.iter().map(|p| format!("{p:?}")).collect();
        got_weights.sort();
        want.sort();
        if got_weights != want {
            return Err(format!("{label}: got {got_weights:?}"));
        }
        let sum: Poly = expected.iter().map(|rows| rows.iter().flatten().cloned().product::<Poly>()).sum();
        same(&label, &ok(&label, so_even_tableau_sum(&lambda, group == Group::SoEvenPlus))?, &sum)?;
    }
    Ok(())
}

fn golden_examples() -> Outcome {
    golden_gl()?;
    golden_sp()?;
    golden_oo()?;
    golden_eo()?;
    golden_so4()
}

// ---------------------------------------------------------------- 4

fn product_denominator(group: Group, n: u32) -> Poly {
    let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mixed: Poly = pairs.iter().map(|&(i, j)| x(i) + xb(i) - x(j) - xb(j)).product();
    match group {
        Group::Gl => pairs.iter().map(|&(i, j)| x(i) - x(j)).product(),
        Group::Sp => (1..=n).map(|i| x(i) - xb(i)).product::<Poly>() * mixed,
        Group::SoOdd => {
            // x_i = s_i^2, xb_i = sb_i^2
            let s = |i| Poly::var(VarId::S(i));
            let sb = |i| Poly::var(VarId::SBar(i));
            let single: Poly = (1..=n).map(|i| s(i) - sb(i)).product();
            let mixed: Poly = pairs
                .iter()
                .map(|&(i, j)| s(i).pow(2) + sb(i).pow(2) - s(j).pow(2) - sb(j).pow(2))
                .product();
            single * mixed
        }
        _ => mixed,
    }
}

fn denominators() -> Outcome {
    let groups = [Group::Gl, Group::Sp, Group::SoOdd, Group::OEven];
    for g in groups {
        for n in 1..=4 {
            let label = format!("{g} denominator n={n}");
            let raw = ok(&label, characters::raw_denominator(g, n))?;
            let product = product_denominator(g, n);
            if g == Group::Gl {
                same(&label, &raw, &product)?;
            } else {
                same_laurent(&label, &raw, &product)?;
            }
            if raw.involves_a() {
                return Err(format!("{label}: involves a"));
            }
            let at = |f: fn(i32) -> i64| -> Poly {
                let point: HashMap<VarId, BigInt> =
                    (-8..=16).map(|j| (VarId::A(j), BigInt::from(f(j)))).collect();
                raw.substitute_integers(&point)
            };
            same(&label, &at(|_| 0), &at(|j| 5 * i64::from(j) + 2))?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- 5

fn range(kind: HKind, from: u32, to: u32) -> VarSpec {
    VarSpec::pairs(kind, (from..=to).collect(), 0)
}

fn recurrences() -> Outcome {
    for kind in [HKind::Gl, HKind::Sp, HKind::Oo, HKind::Eo] {
        for j in 2..=3 {
            for i in 1..j {
                for m in 0..=4 {
                    let label = format!("{kind} recurrence m={m} i={i} j={j}");
                    let lhs = h(&range(kind, i, j - 1), m) - h(&range(kind, i + 1, j), m);
                    let factor = if kind == HKind::Gl {
                        x(i) - x(j)
                    } else {
                        x(i) + xb(i) - x(j) - xb(j)
                    };
                    let rhs = factor * h(&range(kind, i, j), m - 1);
                    if kind == HKind::Gl {
                        same(&label, &lhs, &rhs)?;
                    } else {
                        same_laurent(&label, &lhs, &rhs)?;
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- 6

fn explicit_expansions() -> Outcome {
    for kind in [HKind::Gl, HKind::Sp, HKind::Oo, HKind::Eo] {
        for n in 1..=3 {
            for m in 0..=4u32 {
                let label = format!("{kind} expansion n={n} m={m}");
                let e = explicit_h(kind, n, m);
                let s = h(&VarSpec::full(kind, n), m as i64);
                if kind == HKind::Eo {
                    same_laurent(&label, &e, &s)?;
                } else {
                    same(&label, &e, &s)?;
                }
                if kind == HKind::Oo && e.contains_var(VarId::A((m + n) as i32)) {
                    return Err(format!("{label}: depends on a{}", m + n));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- 7

fn lattice_paths() -> Outcome {
    first_failure(
        partitions(3, 3)
            .into_par_iter()
            .map(|lambda| {
                let n = lambda.rank() as u32;
                let label = format!("lgv {lambda}");
                let jt = ok(&label, char_jacobi_trudi(&CharSpec::new(Group::Gl, lambda.clone())))?;
                same(&label, &latticepaths::lgv_signed_sum(n, &lambda), &jt)?;
                let identity: Vec<u32> = (1..=n).collect();
                for (sigma, _) in latticepaths::permutations(n) {
                    let tuples = latticepaths::non_intersecting_tuples(n, &lambda, &sigma);
                    if sigma != identity && !tuples.is_empty() {
                        return Err(format!("{label}: non-intersecting tuple for {sigma:?}"));
                    }
                }
                let mut from_paths = Vec::new();
                for tuple in latticepaths::non_intersecting_tuples(n, &lambda, &identity) {
                    let t = ok(&label, latticepaths::tuple_to_tableau(n, &tuple))?;
                    same(
                        &label,
                        &tuple.iter().map(|p| p.weight(n)).product(),
                        &tableaux::weight(&t, HKind::Gl, n),
                    )?;
                    from_paths.push(t.render_inline());
                }
                let mut all: Vec<String> = ok(&label, tableaux::enumerate(HKind::Gl, &lambda))?
                    .iter()
                    .map(Tableau::render_inline)
                    .collect();
                from_paths.sort();
                all.sort();
                if from_paths != all {
                    return Err(format!("{label}: paths give {from_paths:?}, tableaux {all:?}"));
                }
                Ok(())
            })
            .collect(),
    )
}

// ---------------------------------------------------------------- 8

/// Positive roots in the `e_i` basis.
fn positive_roots(group: Group, n: usize) -> Vec<Vec<i64>> {
    let unit = |i: usize, c: i64| {
        let mut v = vec![0; n];
        v[i] = c;
        v
    };
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = unit(i, 1);
            minus[j] = -1;
            roots.push(minus);
            if group != Group::Gl {
                let mut plus = unit(i, 1);
                plus[j] = 1;
                roots.push(plus);
            }
        }
        match group {
            Group::Sp => roots.push(unit(i, 2)),
            Group::SoOdd => roots.push(unit(i, 1)),
            _ => {}
        }
    }
    roots
}

/// `∏ ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` over positive roots, with `2ρ = Σ α`.
fn weyl_dimension(group: Group, highest: &[i64]) -> i64 {
    let n = highest.len();
    let roots = positive_roots(group, n);
    let two_rho: Vec<i64> = (0..n).map(|i| roots.iter().map(|r| r[i]).sum()).collect();
    let dot = |v: &[i64], r: &[i64]| v.iter().zip(r).map(|(p, q)| p * q).sum::<i64>();
    let shifted: Vec<i64> = highest.iter().zip(&two_rho).map(|(l, r)| 2 * l + r).collect();
    let (num, den) = roots.iter().fold((1i64, 1i64), |(p, q), r| {
        (p * dot(&shifted, r), q * dot(&two_rho, r))
    });
    assert_eq!(num % den, 0);
    num / den
}

/// Dimension of the `o(2n)` module: both so(2n) constituents when `λ_n > 0`.
fn o_even_dimension(lambda: &[i64]) -> i64 {
    let n = lambda.len();
    let d = weyl_dimension(Group::OEven, lambda);
    if lambda[n - 1] > 0 {
        let mut other = lambda.to_vec();
        other[n - 1] = -other[n - 1];
        d + weyl_dimension(Group::OEven, &other)
    } else {
        d
    }
}

fn oracle_dimension(group: Group, lambda: &Partition) -> i64 {
    let parts: Vec<i64> = lambda.parts().iter().map(|&p| i64::from(p)).collect();
    match group {
        Group::OEven => o_even_dimension(&parts),
        Group::SoEvenPlus => weyl_dimension(Group::OEven, &parts),
        Group::SoEvenMinus => {
            let mut p = parts;
            let last = p.len() - 1;
            p[last] = -p[last];
            weyl_dimension(Group::OEven, &p)
        }
        g => weyl_dimension(g, &parts),
    }
}

/// The character at `a = 0`, `x = xb = 1`.
fn classical_value(spec: &CharSpec, method: Method) -> Result<i64, String> {
    let label = format!("{} {}", spec.group, spec.lambda);
    let c = ok(&label, characters::character(spec, method))?;
    let point: HashMap<VarId, BigInt> = c
        .variables()
        .into_iter()
        .map(|v| (v, BigInt::from(i64::from(!v.is_a()))))
        .collect();
    let v = ok(&label, c.eval_integer(&point))?;
    i64::try_from(v).map_err(|e| format!("{label}: {e}"))
}

fn classical_reduction() -> Outcome {
    let spec = |g, n, l: &str| CharSpec::parse(g, n, l).unwrap();
    let mut table = vec![
        (spec(Group::Gl, 3, "2,1"), 8),
        (spec(Group::Sp, 2, "1,1"), 5),
        (spec(Group::SoOdd, 2, "1"), 5),
        (spec(Group::SoOdd, 3, "1"), 7),
    ];
    for n in 1..=3 {
        table.push((spec(Group::OEven, n, "1"), 2 * n as i64));
    }
    for (s, expected) in &table {
        let oracle = oracle_dimension(s.group, &s.lambda);
        if oracle != *expected {
            return Err(format!("oracle gives {oracle} for {} {}", s.group, s.lambda));
        }
    }
    let so4 = Partition::new(&[2, 2], 2).unwrap();
    let (p, m) = (
        oracle_dimension(Group::SoEvenPlus, &so4),
        oracle_dimension(Group::SoEvenMinus, &so4),
    );
    if p != m || p + m != oracle_dimension(Group::OEven, &so4) {
        return Err(format!("so(4) oracle: {p} + {m}"));
    }
    // beyond the table: every small λ in every group
    for g in Group::ALL {
        if g == Group::OEvenDiff {
            continue;
        }
        for lambda in partitions(3, 2) {
            table.push((CharSpec::new(g, lambda.clone()), oracle_dimension(g, &lambda)));
        }
    }
    first_failure(
        table
            .into_par_iter()
            .flat_map(|(s, expected)| {
                Method::ALL.into_par_iter().map(move |method| {
                    let got = classical_value(&s, method)?;
                    if got == expected {
                        Ok(())
                    } else {
                        Err(format!("{} {} by {method}: {got} != {expected}", s.group, s.lambda))
                    }
                })
            })
            .collect(),
    )
}

// ---------------------------------------------------------------- 9

fn degenerate_contracts() -> Outcome {
    for n in 1..=3 {
        for kind in [HKind::Gl, HKind::Sp, HKind::Oo, HKind::Eo] {
            let spec = VarSpec::full(kind, n);
            for m in -4..0 {
                if !h(&spec, m).is_zero() {
                    return Err(format!("{kind} h_{m} is nonzero for n={n}"));
                }
            }
            same(&format!("{kind} h_0 n={n}"), &h(&spec, 0), &Poly::one())?;
        }
        for method in Method::ALL {
            for g in Group::ALL {
                if g == Group::OEvenDiff {
                    continue;
                }
                let c = ok("λ=0", characters::character(&CharSpec::new(g, Partition::empty(n as usize)), method))?;
                same(&format!("{g} λ=0 by {method}"), &c, &Poly::one())?;
            }
            for lambda in Partition::all_bounded(n as usize, 3) {
                if lambda.part(n as usize) != 0 {
                    continue;
                }
                let c = ok(
                    "difference",
                    characters::character(&CharSpec::new(Group::OEvenDiff, lambda.clone()), method),
                )?;
                if !c.is_zero() {
                    return Err(format!("difference {lambda} by {method} is {c}"));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("route agreement", route_agreement),
        ("so(2n) suite", so_even_suite),
        ("golden examples", golden_examples),
        ("denominator identities", denominators),
        ("recurrence suite", recurrences),
        ("explicit expansions", explicit_expansions),
        ("lattice path oracle", lattice_paths),
        ("classical reduction", classical_reduction),
        ("degenerate contracts", degenerate_contracts),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = std::time::Instant::now();
        match check() {
            Ok(()) => println!("PASS {} {name} ({:.1?})", i + 1, started.elapsed()),
            Err(e) => {
                println!("FAIL {} {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

/// Why the paired families are compared as Laurent polynomials: with
/// independent `xb_i` the defining ratio is not a polynomial, and the
/// recurrence leaves an `x_i xb_i - x_j xb_j` remainder.
#[test]
fn paired_identities_need_inverse_pairs() {
    let spec = CharSpec::parse(Group::Sp, 3, "1").unwrap();
    let num = flc_core::poly::det::determinant(
        &(0..3u32)
            .map(|i| {
                (0..3u32)
                    .map(|j| {
                        let l = spec.lambda.part(j as usize + 1) + 2 - j;
                        let fp = |v: Poly| flc_core::hfuncs::factorial_power_of(&v, l, 0);
                        x(i + 1) * fp(x(i + 1)) - xb(i + 1) * fp(xb(i + 1))
                    })
                    .collect()
            })
            .collect::<Vec<Vec<Poly>>>(),
    )
    .unwrap();
    let den = characters::raw_denominator(Group::Sp, 3).unwrap();
    assert!(num.exact_div(&den).is_err());
    assert!(num.laurent_exact_div(&den).is_ok());

    let lhs = h(&range(HKind::Sp, 1, 1), 2) - h(&range(HKind::Sp, 2, 2), 2);
    let rhs = (x(1) + xb(1) - x(2) - xb(2)) * h(&range(HKind::Sp, 1, 2), 1);
    assert_ne!(lhs, rhs);
    same_laurent("sp recurrence", &lhs, &rhs).unwrap();
}
