use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::perm::Permutation;
use crate::error::{domain, Error, Result};
use crate::ring::Monomial;

/// A standard tableau: rows and columns strictly increase and the entries
/// are exactly `1..r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StdTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StdTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let r = shape.size();
        let mut seen = vec![false; r];
        for &x in rows.iter().flatten() {
            if x == 0 || x > r || seen[x - 1] {
                return domain(format!("{rows:?} is not a filling by 1..{r}"));
            }
            seen[x - 1] = true;
        }
        let rows_ok = rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        if !rows_ok || !cols_ok {
            return domain(format!("{rows:?} is not standard"));
        }
        Ok(StdTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row-by-row reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `(row, column)` of entry `x`, 1-based.
    pub fn position(&self, x: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|&y| y == x).map(|j| (i + 1, j + 1)))
    }
}

impl TryFrom<Vec<Vec<usize>>> for StdTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StdTableau::new(rows)
    }
}

impl From<StdTableau> for Vec<Vec<usize>> {
    fn from(t: StdTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// `t^lambda`: `1..r` filled left to right along successive rows.
pub fn superstandard_tableau(lambda: &Partition) -> StdTableau {
    let mut next = 1;
    let rows = lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    StdTableau { shape: lambda.clone(), rows }
}

/// All standard tableaux of shape `lambda`. Entries are placed in order
/// `1, 2, ...`, trying rows top to bottom, so `t^lambda` comes first.
pub fn std_tableaux(lambda: &Partition) -> Vec<StdTableau> {
    fn rec(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, r: usize, out: &mut Vec<StdTableau>, lambda: &Partition) {
        if next > r {
            out.push(StdTableau { shape: lambda.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                rec(shape, rows, next + 1, r, out, lambda);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.num_parts()];
    rec(lambda.parts(), &mut rows, 1, lambda.size(), &mut out, lambda);
    out
}

/// `d(t)`: the permutation carrying `t^lambda` to `t`, so `d(t)(x)` is the
/// entry of `t` in the cell holding `x` in `t^lambda`.
pub fn d_of(t: &StdTableau) -> Permutation {
    Permutation::from_one_line(&t.reading_word()).expect("tableau entries are 1..r")
}

/// `res(s) = a q^{2(j-i)}` for the cell `(i, j)` holding `s` in `t^lambda`.
pub fn residue(lambda: &Partition, s: usize) -> Result<Monomial> {
    if s == 0 || s > lambda.size() {
        return domain(format!("residue position {s} outside 1..{}", lambda.size()));
    }
    let (i, j) = superstandard_tableau(lambda).position(s).expect("in range");
    Ok(Monomial::unit(1, 2 * (j as i32 - i as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn superstandard() {
        assert_eq!(superstandard_tableau(&p(&[2, 1])).rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(superstandard_tableau(&p(&[3])).rows(), &[vec![1, 2, 3]]);
        assert_eq!(superstandard_tableau(&p(&[1, 1])).rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn residues() {
        let l = p(&[2, 1]);
        assert_eq!(residue(&l, 2).unwrap(), Monomial::unit(1, 2));
        assert_eq!(residue(&l, 3).unwrap(), Monomial::unit(1, -2));
        assert_eq!(residue(&p(&[4, 2]), 1).unwrap(), Monomial::unit(1, 0));
        assert!(residue(&l, 4).is_err());
        assert!(residue(&l, 0).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(std_tableaux(&p(&[1, 1, 1])).len(), 1);
        let ts = std_tableaux(&p(&[2, 1]));
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0], superstandard_tableau(&p(&[2, 1])));
        assert_eq!(std_tableaux(&p(&[3, 2])).len(), 5);
    }

    #[test]
    fn d_of_carries_superstandard() {
        let l = p(&[3, 2]);
        let base = superstandard_tableau(&l);
        assert!(d_of(&base).is_identity());
        for t in std_tableaux(&l) {
            let d = d_of(&t);
            let mapped: Vec<Vec<usize>> = base.rows().iter().map(|row| row.iter().map(|&x| d.apply(x)).collect()).collect();
            assert_eq!(mapped, t.rows());
        }
    }

    #[test]
    fn validation() {
        assert!(StdTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StdTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StdTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StdTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }
}
