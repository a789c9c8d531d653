use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{parse_parts, Composition};
use crate::error::{domain, Error, Result};

/// A permutation of `{1..r}`, stored in 0-based one-line notation.
///
/// Products read left to right: `w * v` is "first `w`, then `v`", i.e. the
/// function `x -> v(w(x))`. With this convention `T_w T_s = T_{ws}` whenever
/// `ws` is longer than `w`, and reduced words multiply in reading order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation((0..r as u8).collect())
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 <= i < r`.
    pub fn simple(i: usize, r: usize) -> Result<Self> {
        if i == 0 || i >= r {
            return domain(format!("s_{i} is not a simple reflection of S_{r}"));
        }
        let mut w = Self::identity(r);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let r = images.len();
        if r > u8::MAX as usize {
            return domain(format!("rank {r} too large"));
        }
        let mut seen = vec![false; r];
        for &x in images {
            if x == 0 || x > r || seen[x - 1] {
                return domain(format!("{images:?} is not a permutation of 1..{r}"));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `w(x)` for 1-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Self> {
        if self.rank() != other.rank() {
            return domain(format!("cannot multiply permutations of ranks {} and {}", self.rank(), other.rank()));
        }
        Ok(Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect()))
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Whether `l(w s_i) < l(w)`: the value `i+1` precedes `i` in one-line
    /// notation.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).unwrap();
        pos(i as u8 - 1) > pos(i as u8)
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `w s_i`: swaps the values `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8 - 1, i as u8);
        Permutation(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// `s_i w`: swaps the positions `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// A reduced word `[i_1, ..., i_l]` with `w = s_{i_1} s_{i_2} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    /// Place permutation of a tuple: `(x . w)_j = x_{w^-1(j)}`.
    pub fn act_on<T: Clone>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for (k, &wk) in self.0.iter().enumerate() {
            out[wk as usize] = x[k].clone();
        }
        out
    }

    /// All of `S_r`, in lexicographic order of one-line notation.
    pub fn all(r: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(r);
        let mut used = vec![false; r];
        fill(&mut cur, &mut used, &mut |p| out.push(Permutation(p.to_vec())), &|_, _| true);
        out
    }
}

fn fill(cur: &mut Vec<u8>, used: &mut [bool], emit: &mut dyn FnMut(&[u8]), ok: &dyn Fn(usize, usize) -> bool) {
    let r = used.len();
    if cur.len() == r {
        emit(cur);
        return;
    }
    let pos = cur.len();
    for v in 0..r {
        if !used[v] && ok(pos, v) {
            used[v] = true;
            cur.push(v as u8);
            fill(cur, used, emit, ok);
            cur.pop();
            used[v] = false;
        }
    }
}

/// The row blocks of a composition: `block[x]` for 0-based `x`.
fn blocks(lambda: &Composition) -> Vec<usize> {
    lambda.parts().iter().enumerate().flat_map(|(b, &len)| std::iter::repeat(b).take(len)).collect()
}

/// The Young subgroup `S_lambda` permuting each block of consecutive
/// positions, in lexicographic order.
pub fn young_subgroup(lambda: &Composition) -> Vec<Permutation> {
    let block = blocks(lambda);
    let r = block.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    let mut used = vec![false; r];
    fill(&mut cur, &mut used, &mut |p| out.push(Permutation(p.to_vec())), &|pos, v| block[pos] == block[v]);
    out
}

/// The longest element of `S_lambda`: each block reversed.
pub fn longest_element(lambda: &Composition) -> Permutation {
    let mut w = Vec::with_capacity(lambda.size());
    let mut start = 0u8;
    for &len in lambda.parts() {
        let len = len as u8;
        w.extend((start..start + len).rev());
        start += len;
    }
    Permutation(w)
}

impl Mul for &Permutation {
    type Output = Permutation;
    /// Panics on a rank mismatch; use [`Permutation::then`] for a checked
    /// product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs).expect("permutation ranks differ")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{self}")
    }
}

/// Accepts `"w[3,1,2]"`, `"[3,1,2]"` or `"3,1,2"`.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('w').trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body);
        Permutation::from_one_line(&parse_parts(body)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn products_read_left_to_right() {
        let s1 = Permutation::simple(1, 3).unwrap();
        let s2 = Permutation::simple(2, 3).unwrap();
        // s1 then s2 sends 1 -> 2 -> 3.
        let p = &s1 * &s2;
        assert_eq!(p.apply(1), 3);
        assert_eq!(p, s1.times_simple(2));
        assert_eq!(p, s2.simple_times(1));
        assert_eq!(p.reduced_word(), vec![1, 2]);
    }

    #[test]
    fn reduced_words_rebuild() {
        for p in Permutation::all(4) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            let rebuilt = word.iter().fold(Permutation::identity(4), |acc, &i| acc.times_simple(i));
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn young_subgroups() {
        let g = young_subgroup(&Composition::new(vec![2, 1]));
        assert_eq!(g, vec![Permutation::identity(3), Permutation::simple(1, 3).unwrap()]);
        assert_eq!(young_subgroup(&Composition::new(vec![2, 2])).len(), 4);
        assert_eq!(young_subgroup(&Composition::new(vec![0, 3])).len(), 6);
    }

    #[test]
    fn longest_elements() {
        let w0 = longest_element(&Composition::new(vec![2, 2]));
        assert_eq!(w0, &Permutation::simple(1, 4).unwrap() * &Permutation::simple(3, 4).unwrap());
        assert_eq!(w0.length(), 2);
        assert!(longest_element(&Composition::new(vec![1, 1, 1])).is_identity());
        assert_eq!(longest_element(&Composition::new(vec![3, 2])).length(), 4);
    }

    #[test]
    fn place_action() {
        let x = ['a', 'b', 'c'];
        let s1 = Permutation::simple(1, 3).unwrap();
        assert_eq!(s1.act_on(&x), vec!['b', 'a', 'c']);
        // a right action: x.(w v) = (x.w).v
        let (u, v) = (w(&[2, 3, 1]), w(&[3, 2, 1]));
        assert_eq!((&u * &v).act_on(&x), v.act_on(&u.act_on(&x)));
    }

    #[test]
    fn parsing() {
        assert_eq!("w[3,1,2]".parse::<Permutation>().unwrap(), w(&[3, 1, 2]));
        assert_eq!("2,1".parse::<Permutation>().unwrap(), w(&[2, 1]));
        assert!("w[1,1]".parse::<Permutation>().is_err());
        assert!(Permutation::simple(3, 3).is_err());
    }
}
