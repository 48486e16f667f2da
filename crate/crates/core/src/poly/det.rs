use super::Poly;
use crate::error::{Error, Result};

const COFACTOR_LIMIT: usize = 5;

fn check_square(m: &[Vec<Poly>]) -> Result<usize> {
    let k = m.len();
    if k == 0 {
        return Err(Error::NonSquare { rows: 0, cols: 0 });
    }
    for row in m {
        if row.len() != k {
            return Err(Error::NonSquare {
                rows: k,
                cols: row.len(),
            });
        }
    }
    Ok(k)
}

/// Exact determinant: cofactor expansion up to 5×5, Bareiss beyond.
pub fn determinant(m: &[Vec<Poly>]) -> Result<Poly> {
    let k = check_square(m)?;
    if k <= COFACTOR_LIMIT {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Laplace expansion along the first row, skipping zero entries.
pub fn det_cofactor(m: &[Vec<Poly>]) -> Result<Poly> {
    let k = check_square(m)?;
    let cols: Vec<usize> = (0..k).collect();
    Ok(cofactor(m, 0, &cols))
}

fn cofactor(m: &[Vec<Poly>], row: usize, cols: &[usize]) -> Poly {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    if cols.len() == 2 {
        let (a, b) = (cols[0], cols[1]);
        return &m[row][a] * &m[row + 1][b] - &m[row][b] * &m[row + 1][a];
    }
    let mut acc = Poly::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor(m, row + 1, &rest);
        if minor.is_zero() {
            continue;
        }
        let term = entry * &minor;
        if pos % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn det_bareiss(m: &[Vec<Poly>]) -> Result<Poly> {
    let k = check_square(m)?;
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut sign = false;
    let mut prev = Poly::one();
    for p in 0..k - 1 {
        if a[p][p].is_zero() {
            match (p + 1..k).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = !sign;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[p][p].clone();
    }
    let d = a[k - 1][k - 1].clone();
    Ok(if sign { -d } else { d })
}
