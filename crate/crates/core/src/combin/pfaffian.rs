use super::matching::{enumerate_matchings, Matching};
use super::signature::tau_matrix;
use crate::arith::{int, rat, Coeff, Field};
use crate::error::{Error, Result};

/// Largest matrix accepted by [`pfaffian_by_definition`].
pub const MAX_DEFINITION_SIZE: usize = 12;

/// Skew-symmetric matrix, stored densely. Indices are 0-based.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Coeff> SkewMatrix<C> {
    /// Build from `upper(i, j)` for `i < j`.
    pub fn from_upper(n: usize, mut upper: impl FnMut(usize, usize) -> C) -> Self {
        let mut rows = vec![vec![C::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let a = upper(i, j);
                rows[j][i] = a.neg_ref();
                rows[i][j] = a;
            }
        }
        SkewMatrix { rows }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::SizeMismatch(format!("row {i} has length {}, expected {n}", r.len())));
            }
            if !r[i].is_zero() {
                return Err(Error::InvalidParams(format!("nonzero diagonal at {i}")));
            }
            for j in i + 1..n {
                if rows[j][i] != r[j].neg_ref() {
                    return Err(Error::InvalidParams(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
                }
            }
        }
        Ok(SkewMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// `U^T A U`.
    pub fn congruent(&self, u: &[Vec<C>]) -> Result<Self> {
        let n = self.size();
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch("transform has the wrong shape".into()));
        }
        let au: Vec<Vec<C>> = (0..n)
            .map(|i| (0..n).map(|j| dot((0..n).map(|k| (&self.rows[i][k], &u[k][j])))).collect())
            .collect();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| dot((0..n).map(|k| (&u[k][i], &au[k][j])))).collect())
            .collect();
        Ok(SkewMatrix { rows })
    }
}

fn dot<'a, C: Coeff + 'a>(it: impl Iterator<Item = (&'a C, &'a C)>) -> C {
    let mut acc = C::zero();
    for (a, b) in it {
        if !a.is_zero() && !b.is_zero() {
            acc.add_assign_ref(&a.mul_ref(b));
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfaffianMethod {
    Definition,
    Elimination,
}

pub fn pfaffian<C: Field>(a: &SkewMatrix<C>, method: PfaffianMethod) -> Result<C> {
    match method {
        PfaffianMethod::Definition => pfaffian_by_definition(a),
        PfaffianMethod::Elimination => pfaffian_by_elimination(a),
    }
}

/// Signed contribution `(-1)^{c(pi)} prod A_ij` of one matching (1-based pairs).
pub fn summand<C: Coeff>(a: &SkewMatrix<C>, pi: &Matching) -> C {
    let mut term = C::one();
    for &(i, j) in pi.pairs() {
        term = term.mul_ref(a.get(i - 1, j - 1));
    }
    if pi.crossing_number() % 2 == 1 {
        term.neg_ref()
    } else {
        term
    }
}

/// Sum over all perfect matchings. Works over any coefficient ring.
pub fn pfaffian_by_definition<C: Coeff>(a: &SkewMatrix<C>) -> Result<C> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::InvalidParams(format!("Pfaffian of odd size {n}")));
    }
    if n > MAX_DEFINITION_SIZE {
        return Err(Error::Guard(format!("definition method limited to size {MAX_DEFINITION_SIZE}")));
    }
    if n == 0 {
        return Ok(C::one());
    }
    let mut acc = C::zero();
    for pi in enumerate_matchings(n)? {
        acc.add_assign_ref(&summand(a, &pi));
    }
    Ok(acc)
}

/// Skew Gaussian elimination into 2x2 blocks.
pub fn pfaffian_by_elimination<C: Field>(a: &SkewMatrix<C>) -> Result<C> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::InvalidParams(format!("Pfaffian of odd size {n}")));
    }
    let mut m = a.rows.clone();
    let mut pf = C::one();
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return Ok(C::zero());
        };
        if p != k + 1 {
            m.swap(p, k + 1);
            for row in m.iter_mut() {
                row.swap(p, k + 1);
            }
            pf = pf.neg_ref();
        }
        let pivot = m[k][k + 1].clone();
        pf = pf.mul_ref(&pivot);
        let inv = pivot.inv().expect("nonzero pivot");
        for i in k + 2..n {
            let c1 = m[k][i].mul_ref(&inv);
            let c2 = m[k + 1][i].mul_ref(&inv);
            // row_i <- row_i - c1 row_{k+1} + c2 row_k, then the same on columns
            for j in 0..n {
                let mut v = m[i][j].sub_ref(&c1.mul_ref(&m[k + 1][j]));
                v.add_assign_ref(&c2.mul_ref(&m[k][j]));
                m[i][j] = v;
            }
            for row in m.iter_mut() {
                let mut v = row[i].sub_ref(&c1.mul_ref(&row[k + 1]));
                v.add_assign_ref(&c2.mul_ref(&row[k]));
                row[i] = v;
            }
        }
    }
    Ok(pf)
}

/// Determinant by Gaussian elimination over a field.
pub fn det<C: Field>(rows: &[Vec<C>]) -> Result<C> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::SizeMismatch("determinant of a non-square matrix".into()));
    }
    let mut m = rows.to_vec();
    let mut d = C::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(C::zero());
        };
        if p != k {
            m.swap(p, k);
            d = d.neg_ref();
        }
        d = d.mul_ref(&m[k][k]);
        let inv = m[k][k].inv().expect("nonzero pivot");
        for i in k + 1..n {
            let f = m[i][k].mul_ref(&inv);
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = m[i][j].sub_ref(&f.mul_ref(&m[k][j]));
                m[i][j] = v;
            }
        }
    }
    Ok(d)
}

/// The `(n+1) x (n+1)` matrix with `Q_ij = tau_ij a_i a_j` (times `x_i + x_j`
/// when `x` is given) and last column `a_i a_{n+1} b_i`.
pub fn q_matrix<C: Coeff>(a: &[C], b: &[C], x: Option<&[C]>) -> Result<SkewMatrix<C>> {
    let n = b.len();
    if a.len() != n + 1 {
        return Err(Error::SizeMismatch(format!("{} weights for {n} b-values", a.len())));
    }
    if x.is_some_and(|x| x.len() != n) {
        return Err(Error::SizeMismatch("x must have length n".into()));
    }
    let tau = tau_matrix(n)?;
    Ok(SkewMatrix::from_upper(n + 1, |i, j| {
        let aa = a[i].mul_ref(&a[j]);
        if j == n {
            aa.mul_ref(&b[i])
        } else {
            let mut e = if tau.get(i, j) > 0 { aa } else { aa.neg_ref() };
            if let Some(x) = x {
                let mut s = x[i].clone();
                s.add_assign_ref(&x[j]);
                e = e.mul_ref(&s);
            }
            e
        }
    }))
}

/// Closed form of `Pf(q_matrix(a, b, x))`.
pub fn pf_closed_q<C: Coeff>(a: &[C], b: &[C], x: Option<&[C]>) -> Result<C> {
    let n = b.len();
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("n must be odd, got {n}")));
    }
    if a.len() != n + 1 || x.is_some_and(|x| x.len() != n) {
        return Err(Error::SizeMismatch("parameter lengths".into()));
    }
    let m = (n - 1) / 2;
    let mut prod = C::one();
    for ai in a {
        prod = prod.mul_ref(ai);
    }
    let mut sum = C::zero();
    match x {
        None => b.iter().for_each(|bi| sum.add_assign_ref(bi)),
        Some(x) => {
            let cyc = |start: usize, len: usize| {
                let mut p = C::one();
                for t in 0..len {
                    p = p.mul_ref(&x[(start + t) % n]);
                }
                p
            };
            for (i, bi) in b.iter().enumerate() {
                let mut s = cyc(i + 1, m);
                s.add_assign_ref(&cyc(i + 1 + m, n - 1 - m));
                sum.add_assign_ref(&bi.mul_ref(&s));
            }
            // 2^{m-1}
            prod = prod.scale(&if m == 0 { rat(1, 2) } else { int(1i64 << (m - 1)) });
        }
    }
    let value = prod.mul_ref(&sum);
    Ok(if (m * m.saturating_sub(1) / 2) % 2 == 1 { value.neg_ref() } else { value })
}

/// Image of a matching on `[n+1]` under `1 -> n`, `i -> i-1` for `2 <= i <= n`,
/// `n+1` fixed.
pub fn rotate_matching(pi: &Matching) -> Result<Matching> {
    let nv = pi.vertices();
    let n = nv - 1;
    let perm: Vec<usize> = (1..=nv).map(|v| if v == 1 { n } else if v <= n { v - 1 } else { v }).collect();
    pi.relabel(&perm)
}
