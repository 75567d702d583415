//! Words over `{N, E}`, lattice paths, and partitions in a box.
//!
//! A word is read left to right as a lattice path from `(0, 0)`: `N` is a
//! unit north step and `E` a unit east step. The partition of a word with `m`
//! north steps and `n` east steps sits in the top-left corner of the `m x n`
//! box: row `r` (counted from the top) holds the cells strictly west of the
//! path in that row.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    N,
    E,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::N => Letter::E,
            Letter::E => Letter::N,
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `letter^count`.
    pub fn power(letter: Letter, count: usize) -> Self {
        Word(vec![letter; count])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of north steps.
    pub fn m(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::N).count()
    }

    /// Number of east steps.
    pub fn n(&self) -> usize {
        self.0.len() - self.m()
    }

    pub fn grade(&self) -> (usize, usize) {
        (self.m(), self.n())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The involution η: reverse the word and swap `N <-> E`.
    pub fn eta(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    /// Sub-word `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Replaces `[start, start + len)` with `replacement`.
    pub fn splice(&self, start: usize, len: usize, replacement: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - len + replacement.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(replacement);
        v.extend_from_slice(&self.0[start + len..]);
        Word(v)
    }

    /// Lattice point reached after the first `i` letters.
    pub fn point(&self, i: usize) -> (usize, usize) {
        let m = self.0[..i].iter().filter(|&&l| l == Letter::N).count();
        (i - m, m)
    }

    /// Whether every prefix has at least as many `N` as `E` and `m = n`.
    pub fn is_dyck(&self) -> bool {
        let mut height = 0i64;
        for &l in &self.0 {
            height += if l == Letter::N { 1 } else { -1 };
            if height < 0 {
                return false;
            }
        }
        height == 0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::N => "n",
                Letter::E => "e",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Case-insensitive string over `{n, e}`.
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_ascii_lowercase() {
                'n' => Ok(Letter::N),
                'e' => Ok(Letter::E),
                other => Err(Error::Parse(format!(
                    "invalid letter {other:?} in word {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// A weakly decreasing partition inside an `m x n` box, zero-padded to `m` parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPartition {
    parts: Vec<usize>,
    width: usize,
}

impl BoxPartition {
    /// `parts` may be shorter than `m`; missing rows are zero.
    pub fn new(parts: &[usize], m: usize, n: usize) -> Result<Self> {
        let trimmed: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if trimmed.len() != parts.iter().take_while(|&&p| p > 0).count() {
            return Err(Error::Invalid(format!(
                "{parts:?} has a nonzero part after a zero"
            )));
        }
        if trimmed.len() > m {
            return Err(Error::Invalid(format!(
                "{parts:?} does not fit in {m} rows"
            )));
        }
        if trimmed.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if trimmed.first().is_some_and(|&p| p > n) {
            return Err(Error::Invalid(format!(
                "{parts:?} does not fit in {n} columns"
            )));
        }
        let mut padded = trimmed;
        padded.resize(m, 0);
        Ok(Self {
            parts: padded,
            width: n,
        })
    }

    pub fn empty(m: usize, n: usize) -> Self {
        Self {
            parts: vec![0; m],
            width: n,
        }
    }

    /// Parts `λ_1 >= ... >= λ_m`, zero-padded.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based index; zero beyond the box.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn cols(&self) -> usize {
        self.width
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Conjugate partition in the transposed `n x m` box.
    pub fn transpose(&self) -> BoxPartition {
        let parts = (1..=self.width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        BoxPartition {
            parts,
            width: self.parts.len(),
        }
    }

    /// Same shape in a different box.
    pub fn rebox(&self, m: usize, n: usize) -> Result<BoxPartition> {
        BoxPartition::new(&self.parts, m, n)
    }

    /// Componentwise containment of shapes.
    pub fn contains(&self, other: &BoxPartition) -> bool {
        (1..=self.rows().max(other.rows())).all(|i| self.part(i) >= other.part(i))
    }

    /// Nonzero parts, comma separated.
    pub fn shape_string(&self) -> String {
        let nz: Vec<String> = self
            .parts
            .iter()
            .filter(|&&p| p > 0)
            .map(|p| p.to_string())
            .collect();
        if nz.is_empty() {
            "0".into()
        } else {
            nz.join(",")
        }
    }
}

impl fmt::Display for BoxPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) in {}x{}",
            self.shape_string(),
            self.rows(),
            self.width
        )
    }
}

/// Parses `--shape 1,1,0`.
pub fn parse_shape(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in shape {s:?}")))
        })
        .collect()
}

/// Parses `--box 3x2` into `(m, n)`.
pub fn parse_box(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .trim()
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::Parse(format!("box must look like MxN, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad box {s:?}")))
    };
    Ok((parse(a)?, parse(b)?))
}

pub fn word_to_partition(w: &Word) -> BoxPartition {
    let m = w.m();
    let mut parts = vec![0; m];
    let mut easts = 0;
    let mut norths = 0;
    for &l in w.letters() {
        match l {
            Letter::E => easts += 1,
            Letter::N => {
                norths += 1;
                // the i-th north step fills row m + 1 - i from the top
                parts[m - norths] = easts;
            }
        }
    }
    BoxPartition {
        parts,
        width: w.n(),
    }
}

pub fn partition_to_word(lambda: &BoxPartition) -> Word {
    let m = lambda.rows();
    let mut letters = Vec::with_capacity(m + lambda.cols());
    let mut easts = 0;
    for i in 1..=m {
        let target = lambda.part(m + 1 - i);
        letters.extend(std::iter::repeat_n(Letter::E, target - easts));
        easts = target;
        letters.push(Letter::N);
    }
    letters.extend(std::iter::repeat_n(Letter::E, lambda.cols() - easts));
    Word(letters)
}

/// The involution η on words.
pub fn eta(w: &Word) -> Word {
    w.eta()
}

/// `a_i = i - λ_{m+1-i}` for a partition in a square box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaSeq(pub Vec<i64>);

impl AreaSeq {
    /// Sorted values.
    pub fn multiset(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

pub fn area_sequence(lambda: &BoxPartition) -> Result<AreaSeq> {
    let m = lambda.rows();
    if lambda.cols() != m {
        return Err(Error::NotSquare {
            m,
            n: lambda.cols(),
        });
    }
    Ok(AreaSeq(
        (1..=m)
            .map(|i| i as i64 - lambda.part(m + 1 - i) as i64)
            .collect(),
    ))
}

/// Distance-from-diagonal sequence `(b_1, ..., b_n)` for `m >= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeq(pub Vec<i64>);

pub fn b_sequence(lambda: &BoxPartition) -> Result<BSeq> {
    let (m, n) = (lambda.rows(), lambda.cols());
    if m < n {
        return Err(Error::TallBoxRequired { m, n });
    }
    let conj = lambda.transpose();
    let b = (1..=n)
        .map(|i| {
            let row = lambda.part(m + 1 - i);
            if row < i {
                (m + 1 - i) as i64 - conj.part(i) as i64
            } else {
                i as i64 - row as i64
            }
        })
        .collect();
    Ok(BSeq(b))
}

fn check_index(k: usize, m: usize, n: usize) -> Result<()> {
    let max = m.min(n);
    if k > max {
        Err(Error::OutOfRange { index: k, max })
    } else {
        Ok(())
    }
}

/// `δ_{k,m,n} = E^{n-k} (NE)^k N^{m-k}`; the staircase basis of grade `(m, n)`.
pub fn staircase_word(k: usize, m: usize, n: usize) -> Result<Word> {
    check_index(k, m, n)?;
    let mut v = vec![Letter::E; n - k];
    for _ in 0..k {
        v.extend([Letter::N, Letter::E]);
    }
    v.extend(std::iter::repeat_n(Letter::N, m - k));
    Ok(Word(v))
}

/// `E^k N^m E^{n-k}` for `m >= n`; the η-image of the transposed word otherwise.
pub fn rectangular_word(k: usize, m: usize, n: usize) -> Result<Word> {
    check_index(k, m, n)?;
    if m < n {
        return Ok(rectangular_word(k, n, m)?.eta());
    }
    let mut v = vec![Letter::E; k];
    v.extend(std::iter::repeat_n(Letter::N, m));
    v.extend(std::iter::repeat_n(Letter::E, n - k));
    Ok(Word(v))
}

/// `s^a t^{n-a} N^{m-n}` with `s = EN`, `t = NE` for `m >= n`; the η-image of
/// the transposed word otherwise.
pub fn zigzag_word(a: usize, m: usize, n: usize) -> Result<Word> {
    check_index(a, m, n)?;
    if m < n {
        return Ok(zigzag_word(a, n, m)?.eta());
    }
    let mut v = Vec::with_capacity(m + n);
    for _ in 0..a {
        v.extend([Letter::E, Letter::N]);
    }
    for _ in a..n {
        v.extend([Letter::N, Letter::E]);
    }
    v.extend(std::iter::repeat_n(Letter::N, m - n));
    Ok(Word(v))
}

/// `m_w`: the largest `k` such that the path of `δ_k` lies weakly below the
/// path of `w`. A lower path has a larger partition, so this is the largest
/// `k` with `λ(δ_k) ⊇ λ(w)`.
pub fn max_staircase_index(w: &Word) -> usize {
    let (m, n) = w.grade();
    let lambda = word_to_partition(w);
    (0..=m.min(n))
        .rev()
        .find(|&k| word_to_partition(&staircase_word(k, m, n).unwrap()).contains(&lambda))
        .expect("δ_0 lies below every path")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `N^i E`
    NorthRun,
    /// `N E^i`
    EastRun,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalFactor {
    /// 0-based index of the first letter.
    pub start: usize,
    pub kind: FactorKind,
    pub i: usize,
}

impl CriticalFactor {
    pub fn len(&self) -> usize {
        self.i + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// All maximal factors `N^i E` or `N E^i` (`i >= 2`), in left-to-right order.
pub fn rewritable_factors(w: &Word) -> Vec<CriticalFactor> {
    let l = w.letters();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < l.len() {
        let run_end = (pos..l.len()).find(|&j| l[j] != l[pos]).unwrap_or(l.len());
        let run = run_end - pos;
        match l[pos] {
            Letter::N if run >= 2 && run_end < l.len() => {
                out.push(CriticalFactor {
                    start: pos,
                    kind: FactorKind::NorthRun,
                    i: run,
                });
            }
            Letter::E if run >= 2 && pos > 0 => {
                out.push(CriticalFactor {
                    start: pos - 1,
                    kind: FactorKind::EastRun,
                    i: run,
                });
            }
            _ => {}
        }
        pos = run_end;
    }
    out.sort_by_key(|f| f.start);
    out
}

/// Letters of `w` whose unit step coincides with a step of `δ_{m_w}`.
pub fn shared_steps(w: &Word) -> Vec<bool> {
    let (m, n) = w.grade();
    let delta = staircase_word(max_staircase_index(w), m, n).unwrap();
    let (mut pw, mut pd) = ((0, 0), (0, 0));
    let step = |p: (usize, usize), l: Letter| match l {
        Letter::N => (p.0, p.1 + 1),
        Letter::E => (p.0 + 1, p.1),
    };
    w.letters()
        .iter()
        .zip(delta.letters())
        .map(|(&a, &b)| {
            let shared = pw == pd && a == b;
            pw = step(pw, a);
            pd = step(pd, b);
            shared
        })
        .collect()
}

/// Maximal factors `N^i E` / `N E^i` (`i >= 2`) touching `δ_{m_w}` along an edge.
/// Empty exactly for staircase monomials.
pub fn critical_factors(w: &Word) -> Vec<CriticalFactor> {
    let shared = shared_steps(w);
    rewritable_factors(w)
        .into_iter()
        .filter(|f| shared[f.start..f.start + f.len()].iter().any(|&s| s))
        .collect()
}

/// All words of grade `(m, n)` in lexicographic order (`N < E`).
pub fn words_of_grade(m: usize, n: usize) -> Vec<Word> {
    fn rec(m: usize, n: usize, prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if m == 0 && n == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        if m > 0 {
            prefix.push(Letter::N);
            rec(m - 1, n, prefix, out);
            prefix.pop();
        }
        if n > 0 {
            prefix.push(Letter::E);
            rec(m, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

/// Every word of length `1..=max_len`, ordered by length, then grade, then lexicographically.
pub fn words_up_to(max_len: usize) -> Vec<Word> {
    (1..=max_len)
        .flat_map(|len| {
            (0..=len)
                .rev()
                .flat_map(move |m| words_of_grade(m, len - m))
        })
        .collect()
}

/// Dyck words of semilength `n` in lexicographic order.
pub fn dyck_words(n: usize) -> Vec<Word> {
    words_of_grade(n, n)
        .into_iter()
        .filter(Word::is_dyck)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn bp(parts: &[usize], m: usize, n: usize) -> BoxPartition {
        BoxPartition::new(parts, m, n).unwrap()
    }

    #[test]
    fn word_parsing_is_case_insensitive() {
        assert_eq!(w("NeNnE"), w("nenne"));
        assert!("nex".parse::<Word>().is_err());
        assert_eq!(w("nenne").to_string(), "nenne");
    }

    #[test]
    fn partition_examples() {
        assert_eq!(word_to_partition(&w("nnnee")), BoxPartition::empty(3, 2));
        assert_eq!(word_to_partition(&w("nenne")), bp(&[1, 1, 0], 3, 2));
        let fig = w("nneeeennnnnnennen");
        assert_eq!(
            word_to_partition(&fig),
            bp(&[6, 5, 5, 4, 4, 4, 4, 4, 4], 11, 6)
        );
        assert_eq!(partition_to_word(&BoxPartition::empty(2, 2)), w("nnee"));
        assert_eq!(partition_to_word(&bp(&[1, 1, 0], 3, 2)), w("nenne"));
        assert_eq!(partition_to_word(&bp(&[2, 2, 2], 3, 2)), w("eennn"));
    }

    #[test]
    fn partition_validation() {
        assert!(BoxPartition::new(&[1, 2], 2, 2).is_err());
        assert!(BoxPartition::new(&[3], 2, 2).is_err());
        assert!(BoxPartition::new(&[1, 1, 1], 2, 2).is_err());
        assert!(BoxPartition::new(&[1, 0, 1], 3, 2).is_err());
        assert_eq!(parse_shape("1,1,0").unwrap(), vec![1, 1, 0]);
        assert_eq!(parse_box("3x2").unwrap(), (3, 2));
        assert!(parse_box("3by2").is_err());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&w("ne")), w("ne"));
        // reverse "nenne" -> "ennen", then swap letters
        assert_eq!(eta(&w("nenne")), w("neene"));
        assert_eq!(
            word_to_partition(&eta(&w("nenne"))),
            bp(&[1, 1, 0], 3, 2).transpose()
        );
    }

    #[test]
    fn area_sequence_examples() {
        let lam = bp(&[5, 5, 3, 3, 3, 0], 6, 6);
        assert_eq!(area_sequence(&lam).unwrap().0, vec![1, -1, 0, 1, 0, 1]);
        assert_eq!(
            area_sequence(&lam.transpose()).unwrap().0,
            vec![1, 0, 1, -1, 0, 1]
        );
        assert_eq!(
            area_sequence(&BoxPartition::empty(4, 4)).unwrap().0,
            vec![1, 2, 3, 4]
        );
        assert_eq!(area_sequence(&bp(&[1, 1], 3, 3)).unwrap().0, vec![1, 1, 2]);
        assert!(matches!(
            area_sequence(&bp(&[1], 3, 2)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn b_sequence_examples() {
        let fig = word_to_partition(&w("nneeeennnnnnennen"));
        assert_eq!(b_sequence(&fig).unwrap().0, vec![2, 1, -1, 0, 4, 5]);
        assert_eq!(b_sequence(&bp(&[1, 1, 0], 3, 2)).unwrap().0, vec![1, 2]);
        assert_eq!(
            b_sequence(&BoxPartition::empty(5, 3)).unwrap().0,
            vec![5, 4, 3]
        );
        assert!(b_sequence(&BoxPartition::empty(2, 3)).is_err());
    }

    #[test]
    fn basis_words() {
        assert_eq!(rectangular_word(0, 3, 2).unwrap(), w("nnnee"));
        assert_eq!(staircase_word(1, 3, 2).unwrap(), w("enenn"));
        assert_eq!(zigzag_word(1, 3, 2).unwrap(), w("ennen"));
        assert_eq!(
            rectangular_word(1, 2, 3).unwrap(),
            rectangular_word(1, 3, 2).unwrap().eta()
        );
        assert!(staircase_word(3, 3, 2).is_err());
        for k in 0..=2 {
            assert_eq!(
                staircase_word(k, 2, 3).unwrap(),
                staircase_word(k, 3, 2).unwrap().eta()
            );
        }
    }

    #[test]
    fn max_staircase_index_examples() {
        for k in 0..=3 {
            assert_eq!(max_staircase_index(&staircase_word(k, 3, 4).unwrap()), k);
        }
        assert_eq!(max_staircase_index(&w("nnnee")), 2);
        // δ_3 = enenenen lies weakly below nneeenen and shares its last four steps
        assert_eq!(max_staircase_index(&w("nneeenen")), 3);
    }

    #[test]
    fn critical_factor_examples() {
        assert!(critical_factors(&staircase_word(2, 4, 3).unwrap()).is_empty());
        assert_eq!(
            critical_factors(&w("nnnee")),
            vec![CriticalFactor {
                start: 0,
                kind: FactorKind::NorthRun,
                i: 3
            }]
        );
        assert_eq!(
            critical_factors(&w("nneeenen")),
            vec![CriticalFactor {
                start: 1,
                kind: FactorKind::EastRun,
                i: 3
            }]
        );
    }

    #[test]
    fn critical_factors_characterize_staircases() {
        for len in 0..=10 {
            for m in 0..=len {
                let n = len - m;
                let stairs: Vec<Word> = (0..=m.min(n))
                    .map(|k| staircase_word(k, m, n).unwrap())
                    .collect();
                for word in words_of_grade(m, n) {
                    assert_eq!(
                        critical_factors(&word).is_empty(),
                        stairs.contains(&word),
                        "{word}"
                    );
                }
            }
        }
    }

    #[test]
    fn dyck_enumeration_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(dyck_words(n).len(), c);
        }
        assert_eq!(words_up_to(10).len(), (1 << 11) - 2);
    }
}
