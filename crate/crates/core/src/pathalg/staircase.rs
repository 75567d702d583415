//! Expansion into the staircase basis by rewriting critical factors.
//!
//! Each step replaces a factor `N^i E` or `N E^i` (`i >= 2`) by
//!
//! ```text
//! N^i E = [i] N E N^{i-1} - q[i-1] E N^i
//! N E^i = [i] E^{i-1} N E - q[i-1] E^i N
//! ```
//!
//! Both words on the right have strictly larger partitions, so processing
//! words in order of partition size visits every word once.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::lattice::{
    critical_factors, max_staircase_index, rewritable_factors, staircase_word, word_to_partition,
    CriticalFactor, FactorKind, Letter, Word,
};
use crate::qalg::{qint, QPoly};

/// Which factor to rewrite next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Leftmost critical factor.
    #[default]
    Leftmost,
    /// Rightmost critical factor.
    Rightmost,
    /// Leftmost rewritable factor, critical or not.
    Unrestricted,
}

impl FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leftmost" => Ok(Policy::Leftmost),
            "rightmost" => Ok(Policy::Rightmost),
            "unrestricted" => Ok(Policy::Unrestricted),
            _ => Err(Error::Parse(format!("unknown rewriting policy {s:?}"))),
        }
    }
}

fn pick(w: &Word, policy: Policy) -> Option<CriticalFactor> {
    match policy {
        Policy::Leftmost => critical_factors(w).into_iter().next(),
        Policy::Rightmost => critical_factors(w).into_iter().next_back(),
        Policy::Unrestricted => rewritable_factors(w).into_iter().next(),
    }
}

/// `(w_V, [i])` and `(w_H, -q[i-1])` for a factor of `w`.
pub fn split(w: &Word, f: &CriticalFactor) -> [(Word, QPoly); 2] {
    use Letter::{E, N};
    let i = f.i;
    let (v, h): (Vec<Letter>, Vec<Letter>) = match f.kind {
        FactorKind::NorthRun => {
            let mut v = vec![N, E];
            v.extend(std::iter::repeat_n(N, i - 1));
            let mut h = vec![E];
            h.extend(std::iter::repeat_n(N, i));
            (v, h)
        }
        FactorKind::EastRun => {
            let mut v = vec![E; i - 1];
            v.extend([N, E]);
            let mut h = vec![E; i];
            h.push(N);
            (v, h)
        }
    };
    [
        (w.splice(f.start, i + 1, &v), qint(i)),
        (w.splice(f.start, i + 1, &h), -qint(i - 1).shift(1)),
    ]
}

/// Staircase coefficients `k = 0..=min(m, n)` of a single word.
pub fn expand_word_with(w: &Word, policy: Policy) -> Vec<QPoly> {
    let (m, n) = w.grade();
    let mut out = vec![QPoly::zero(); m.min(n) + 1];
    let mut queue: BTreeMap<(usize, Word), QPoly> = BTreeMap::new();
    queue.insert((word_to_partition(w).size(), w.clone()), QPoly::one());
    while let Some(((_, word), c)) = queue.pop_first() {
        if c.is_zero() {
            continue;
        }
        match pick(&word, policy) {
            None => {
                debug_assert!(critical_factors(&word).is_empty());
                let k = max_staircase_index(&word);
                out[k] += &c;
            }
            Some(f) => {
                for (next, weight) in split(&word, &f) {
                    let key = (word_to_partition(&next).size(), next);
                    let entry = queue.entry(key).or_default();
                    *entry += &(&c * &weight);
                }
            }
        }
    }
    out
}

type Cache = RwLock<HashMap<Word, Arc<Vec<QPoly>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Staircase coefficients of a word with the default policy; memoized.
pub fn expand_word(w: &Word) -> Arc<Vec<QPoly>> {
    if let Some(hit) = cache().read().unwrap().get(w) {
        return hit.clone();
    }
    let v = Arc::new(expand_word_with(w, Policy::Leftmost));
    cache().write().unwrap().insert(w.clone(), v.clone());
    v
}

/// `N^{m-k} (EN)^k E^{n-k}`: the staircase hugging the top-left corner.
pub fn top_left_staircase(k: usize, m: usize, n: usize) -> Result<Word> {
    let max = m.min(n);
    if k > max {
        return Err(Error::OutOfRange { index: k, max });
    }
    let mut v = vec![Letter::N; m - k];
    for _ in 0..k {
        v.extend([Letter::E, Letter::N]);
    }
    v.extend(std::iter::repeat_n(Letter::E, n - k));
    Ok(Word::new(v))
}

/// Coefficients `k = 0..=min(m, n)` of `w` on the top-left staircases,
/// computed with the reverse rules
///
/// ```text
/// E^i N = q^{1-i}[i] E N E^{i-1} - q^{1-i}[i-1] N E^i
/// E N^i = q^{1-i}[i] N^{i-1} E N - q^{1-i}[i-1] N^i E
/// ```
///
/// applied to the leftmost such factor until none is left.
pub fn expand_word_reverse(w: &Word) -> Vec<QPoly> {
    use Letter::{E, N};
    let (m, n) = w.grade();
    let mut out = vec![QPoly::zero(); m.min(n) + 1];
    // the reverse rules shrink the partition
    let mut queue: BTreeMap<(std::cmp::Reverse<usize>, Word), QPoly> = BTreeMap::new();
    queue.insert(
        (std::cmp::Reverse(word_to_partition(w).size()), w.clone()),
        QPoly::one(),
    );
    while let Some(((_, word), c)) = queue.pop_first() {
        if c.is_zero() {
            continue;
        }
        let l = word.letters();
        let mut found = None;
        let mut pos = 0;
        while pos < l.len() && found.is_none() {
            let end = (pos..l.len()).find(|&j| l[j] != l[pos]).unwrap_or(l.len());
            let run = end - pos;
            match l[pos] {
                E if run >= 2 && end < l.len() => found = Some((pos, E, run)),
                N if run >= 2 && pos > 0 => found = Some((pos - 1, N, run)),
                _ => {}
            }
            pos = end;
        }
        let Some((start, kind, i)) = found else {
            let k = (0..=m.min(n)).find(|&k| top_left_staircase(k, m, n).unwrap() == word);
            out[k.expect("terminal words are top-left staircases")] += &c;
            continue;
        };
        let (v, h) = if kind == E {
            let mut v = vec![E, N];
            v.extend(std::iter::repeat_n(E, i - 1));
            let mut h = vec![N];
            h.extend(std::iter::repeat_n(E, i));
            (v, h)
        } else {
            let mut v = vec![N; i - 1];
            v.extend([E, N]);
            let mut h = vec![N; i];
            h.push(E);
            (v, h)
        };
        let scale = 1 - i as i64;
        let wv = qint(i).shift(scale);
        let wh = -qint(i - 1).shift(scale);
        for (rep, weight) in [(v, wv), (h, wh)] {
            let next = word.splice(start, i + 1, &rep);
            let key = (std::cmp::Reverse(word_to_partition(&next).size()), next);
            *queue.entry(key).or_default() += &(&c * &weight);
        }
    }
    out
}

/// Sizes `i` of the factors rewritten along the chain of `[i]`-weighted
/// moves from `w` to `δ_{m_w}`; `c_{w,m_w}` is the product of the `[i]`.
pub fn top_chain(w: &Word) -> Vec<usize> {
    let mut word = w.clone();
    let mut out = Vec::new();
    while let Some(f) = pick(&word, Policy::Leftmost) {
        out.push(f.i);
        let [(next, _), _] = split(&word, &f);
        word = next;
    }
    out
}

/// Strips signs: `(m_w, c_{w,k})` with `coeff(δ_k) = (-1)^{m_w-k} c_{w,k}`.
/// Fails unless every `c_{w,k}` lies in `N[q]`, vanishes for `k > m_w`, and,
/// when `w` is not itself a staircase, is nonzero for `k <= m_w`.
pub fn signed_coeffs(w: &Word) -> Result<(usize, Vec<QPoly>)> {
    let mw = max_staircase_index(w);
    let (m, n) = w.grade();
    let is_staircase = staircase_word(mw, m, n)? == *w;
    let coeffs = expand_word(w);
    let mut out = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs.iter().enumerate() {
        let c = if (mw + k).is_multiple_of(2) {
            c.clone()
        } else {
            -c
        };
        let ok = if k <= mw {
            (is_staircase || !c.is_zero()) && c.is_nonneg_poly()
        } else {
            c.is_zero()
        };
        if !ok {
            return Err(Error::Positivity(format!(
                "c_{{{w},{k}}} = {c} with m_w = {mw}"
            )));
        }
        out.push(c);
    }
    Ok((mw, out))
}
