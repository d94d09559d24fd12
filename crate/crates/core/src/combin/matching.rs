use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Enumeration guard on the number of vertices.
pub const MAX_MATCHING_VERTICES: usize = 16;

/// Perfect matching of `{1, ..., 2N}` as sorted pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        pairs.sort_unstable();
        let nv = 2 * pairs.len();
        let mut seen = vec![false; nv + 1];
        for &(i, j) in &pairs {
            for v in [i, j] {
                if v == 0 || v > nv || seen[v] {
                    return Err(Error::InvalidParams(format!("not a perfect matching of 1..={nv}: {pairs:?}")));
                }
                seen[v] = true;
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn vertices(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Number of edges crossed by each edge, in the order of [`Matching::pairs`].
    pub fn edge_crossings(&self) -> Vec<usize> {
        let crosses = |(i, j): (usize, usize), (k, l): (usize, usize)| (i < k && k < j && j < l) || (k < i && i < l && l < j);
        self.pairs
            .iter()
            .map(|&e| self.pairs.iter().filter(|&&f| crosses(e, f)).count())
            .collect()
    }

    /// Total number of crossing pairs of edges.
    pub fn crossing_number(&self) -> usize {
        self.edge_crossings().iter().sum::<usize>() / 2
    }

    /// Image under a vertex relabelling `v -> perm[v - 1]` (1-based values).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertices() {
            return Err(Error::SizeMismatch(format!("permutation of length {} for {} vertices", perm.len(), self.vertices())));
        }
        Matching::new(self.pairs.iter().map(|&(i, j)| (perm[i - 1], perm[j - 1])))
    }
}

impl TryFrom<Vec<(usize, usize)>> for Matching {
    type Error = Error;
    fn try_from(pairs: Vec<(usize, usize)>) -> Result<Self> {
        Matching::new(pairs)
    }
}

impl From<Matching> for Vec<(usize, usize)> {
    fn from(m: Matching) -> Self {
        m.pairs
    }
}

/// All `(2N-1)!!` perfect matchings of `{1, ..., vertices}`.
pub fn enumerate_matchings(vertices: usize) -> Result<Vec<Matching>> {
    if vertices == 0 || vertices % 2 == 1 {
        return Err(Error::InvalidParams(format!("need a positive even vertex count, got {vertices}")));
    }
    if vertices > MAX_MATCHING_VERTICES {
        return Err(Error::Guard(format!("{vertices} vertices exceeds {MAX_MATCHING_VERTICES}")));
    }
    let mut out = Vec::new();
    let mut free: Vec<usize> = (1..=vertices).collect();
    let mut current = Vec::with_capacity(vertices / 2);
    extend(&mut free, &mut current, &mut out);
    Ok(out)
}

fn extend(free: &mut Vec<usize>, current: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
    if free.is_empty() {
        out.push(Matching { pairs: { let mut p = current.clone(); p.sort_unstable(); p } });
        return;
    }
    let first = free.remove(0);
    for idx in 0..free.len() {
        let partner = free.remove(idx);
        current.push((first, partner));
        extend(free, current, out);
        current.pop();
        free.insert(idx, partner);
    }
    free.insert(0, first);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_matchings(2).unwrap(), vec![Matching::new([(1, 2)]).unwrap()]);
        assert_eq!(enumerate_matchings(4).unwrap().len(), 3);
        assert_eq!(enumerate_matchings(8).unwrap().len(), 105);
        assert!(enumerate_matchings(3).is_err());
        assert!(matches!(enumerate_matchings(18), Err(Error::Guard(_))));
    }

    #[test]
    fn crossing_example() {
        let m = Matching::new([(1, 3), (2, 7), (4, 5), (6, 8)]).unwrap();
        assert_eq!(m.crossing_number(), 2);
        assert_eq!(m.edge_crossings(), vec![1, 2, 0, 1]);
        assert_eq!(Matching::new([(1, 2), (3, 4)]).unwrap().crossing_number(), 0);
        assert_eq!(Matching::new([(1, 3), (2, 4)]).unwrap().crossing_number(), 1);
    }

    #[test]
    fn invalid_matchings() {
        assert!(Matching::new([(1, 2), (2, 3)]).is_err());
        assert!(Matching::new([(1, 5), (2, 3)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = Matching::new([(2, 7), (1, 3), (4, 5), (6, 8)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[1,3],[2,7],[4,5],[6,8]]");
        assert_eq!(serde_json::from_str::<Matching>(&s).unwrap(), m);
        assert!(serde_json::from_str::<Matching>("[[1,2],[1,3]]").is_err());
    }
}
