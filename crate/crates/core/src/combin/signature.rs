use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignatureKind {
    Tau,
    Sigma1Mod4,
    Sigma0Mod4,
    Custom,
}

/// Skew-symmetric matrix with ±1 entries off the diagonal. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureMatrix {
    kind: SignatureKind,
    rows: Vec<Vec<i8>>,
}

impl Serialize for SignatureMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl SignatureMatrix {
    /// Build from the entries above the diagonal, `upper(i, j)` for `i < j`.
    pub fn from_upper(n: usize, kind: SignatureKind, upper: impl Fn(usize, usize) -> i8) -> Result<Self> {
        let mut rows = vec![vec![0i8; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let s = upper(i, j);
                if s != 1 && s != -1 {
                    return Err(Error::InvalidParams(format!("signature entry {s} at ({i},{j})")));
                }
                rows[i][j] = s;
                rows[j][i] = -s;
            }
        }
        Ok(SignatureMatrix { kind, rows })
    }

    pub fn kind(&self) -> SignatureKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().map(|&s| s as i64).sum()).collect()
    }

    /// `s_{i+1,j+1} = s_{ij}` with indices taken cyclically.
    pub fn is_circulant(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.rows[(i + 1) % n][(j + 1) % n] == self.rows[i][j]))
    }

    /// Entries depend on `j - i` only.
    pub fn is_toeplitz(&self) -> bool {
        let n = self.size();
        (1..n).all(|i| (1..n).all(|j| self.rows[i][j] == self.rows[i - 1][j - 1]))
    }
}

/// `tau_ij = 1` if `j <= m + i` else `-1` (1-based, `i < j`), with `m = (n-1)/2`.
pub fn tau_matrix(n: usize) -> Result<SignatureMatrix> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("tau needs odd n, got {n}")));
    }
    SignatureMatrix::from_upper(n, SignatureKind::Tau, tau_rule((n - 1) / 2))
}

/// Even-size variant of [`tau_matrix`] with `m = (n-2)/2`.
pub fn tau_even(n: usize) -> Result<SignatureMatrix> {
    if n % 2 == 1 || n < 2 {
        return Err(Error::InvalidParams(format!("even tau needs even n >= 2, got {n}")));
    }
    SignatureMatrix::from_upper(n, SignatureKind::Custom, tau_rule((n - 2) / 2))
}

fn tau_rule(m: usize) -> impl Fn(usize, usize) -> i8 {
    move |i, j| if j <= m + i { 1 } else { -1 }
}

/// The sigma matrix for `n = 1 (mod 4)` or `n = 0 (mod 4)`.
pub fn sigma_matrix(n: usize, kind: SignatureKind) -> Result<SignatureMatrix> {
    match kind {
        SignatureKind::Sigma1Mod4 if n % 4 == 1 => {
            let p = (n - 1) / 4;
            SignatureMatrix::from_upper(n, kind, move |i, j| if p < j - i && j - i <= 3 * p { -1 } else { 1 })
        }
        SignatureKind::Sigma0Mod4 if n.is_multiple_of(4) && n > 0 => {
            let m = (n - 2) / 2;
            // 1-based i + j = (i0 + 1) + (j0 + 1)
            SignatureMatrix::from_upper(n, kind, move |i, j| {
                let s = i + j + 2;
                if s % 2 == 0 || s == m + 2 { 1 } else { -1 }
            })
        }
        SignatureKind::Sigma1Mod4 | SignatureKind::Sigma0Mod4 => {
            Err(Error::InvalidParams(format!("{kind:?} is not defined for n = {n}")))
        }
        _ => Err(Error::InvalidParams(format!("{kind:?} is not a sigma kind"))),
    }
}

/// For every `i`: `sum_{j>i} (sigma_ij + tau_ij) + sum_{j<i} (sigma_ji - tau_ji) = 0`.
pub fn signature_condition(sigma: &SignatureMatrix, tau: &SignatureMatrix) -> Result<bool> {
    let n = sigma.size();
    if tau.size() != n {
        return Err(Error::SizeMismatch(format!("sigma is {n}x{n}, tau is {0}x{0}", tau.size())));
    }
    Ok((0..n).all(|i| {
        let above: i64 = (i + 1..n).map(|j| (sigma.get(i, j) + tau.get(i, j)) as i64).sum();
        let below: i64 = (0..i).map(|j| (sigma.get(j, i) - tau.get(j, i)) as i64).sum();
        above + below == 0
    }))
}

/// Exhaustive search for any pair satisfying [`signature_condition`]. Small `n` only.
pub fn exists_signature_pair(n: usize) -> Result<bool> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if pairs.len() > 10 {
        return Err(Error::Guard(format!("exhaustive signature search at n = {n}")));
    }
    let from_bits = |bits: u32| {
        SignatureMatrix::from_upper(n, SignatureKind::Custom, |i, j| {
            let idx = pairs.iter().position(|&p| p == (i, j)).expect("pair");
            if bits >> idx & 1 == 1 { 1 } else { -1 }
        })
    };
    let all = 1u32 << pairs.len();
    for sb in 0..all {
        let sigma = from_bits(sb)?;
        for tb in 0..all {
            if signature_condition(&sigma, &from_bits(tb)?)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_examples() {
        let t5 = tau_matrix(5).unwrap();
        assert_eq!(t5.rows()[0], vec![0, 1, 1, -1, -1]);
        assert_eq!(t5.rows()[3], vec![1, -1, -1, 0, 1]);
        assert_eq!(tau_matrix(1).unwrap().rows(), &[vec![0]]);
        assert_eq!(tau_matrix(3).unwrap().rows()[0], vec![0, 1, -1]);
        assert!(tau_matrix(4).is_err());
    }

    #[test]
    fn tau_is_circulant_with_zero_row_sums() {
        for n in (1..=101).step_by(2) {
            let t = tau_matrix(n).unwrap();
            assert!(t.is_circulant(), "n = {n}");
            assert!(t.row_sums().iter().all(|&s| s == 0), "n = {n}");
        }
    }

    #[test]
    fn sigma_examples() {
        let s5 = sigma_matrix(5, SignatureKind::Sigma1Mod4).unwrap();
        assert_eq!(s5.rows()[0], vec![0, 1, -1, -1, 1]);
        assert_eq!(s5.rows()[2], vec![1, -1, 0, 1, -1]);
        assert!(s5.is_toeplitz());
        let s4 = sigma_matrix(4, SignatureKind::Sigma0Mod4).unwrap();
        assert_eq!(s4.get(0, 1), 1);
        assert!(signature_condition(&s4, &tau_even(4).unwrap()).unwrap());
        assert!(signature_condition(&s5, &tau_matrix(5).unwrap()).unwrap());
        let s9 = sigma_matrix(9, SignatureKind::Sigma1Mod4).unwrap();
        assert!(signature_condition(&s9, &tau_matrix(9).unwrap()).unwrap());
        assert!(sigma_matrix(6, SignatureKind::Sigma1Mod4).is_err());
        assert!(sigma_matrix(5, SignatureKind::Sigma0Mod4).is_err());
    }

    #[test]
    fn lemma_pairs_up_to_100() {
        for n in 1..=100 {
            let ok = match n % 4 {
                1 => signature_condition(&sigma_matrix(n, SignatureKind::Sigma1Mod4).unwrap(), &tau_matrix(n).unwrap()),
                0 => signature_condition(&sigma_matrix(n, SignatureKind::Sigma0Mod4).unwrap(), &tau_even(n).unwrap()),
                _ => continue,
            };
            assert!(ok.unwrap(), "n = {n}");
        }
    }

    #[test]
    fn no_pairs_for_two_and_three() {
        assert!(!exists_signature_pair(2).unwrap());
        assert!(!exists_signature_pair(3).unwrap());
        assert!(exists_signature_pair(4).unwrap());
    }

    #[test]
    fn size_mismatch() {
        assert!(signature_condition(&tau_matrix(3).unwrap(), &tau_matrix(5).unwrap()).is_err());
    }

    #[test]
    fn serializes_as_rows() {
        assert_eq!(serde_json::to_string(&tau_matrix(3).unwrap()).unwrap(), "[[0,1,-1],[-1,0,1],[1,-1,0]]");
    }
}
