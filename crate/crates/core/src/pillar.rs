//! String primitives over a family of strings: Extract, LCP, reverse LCP,
//! Access and Length.
//!
//! [`PillarIndex`] answers LCP in constant time from a suffix array, an LCP
//! array and a sparse table, and counts every primitive call.
//! [`PlainText`] answers the same queries by direct comparison and keeps no
//! counters; it is the cheaper choice when no preprocessing budget exists.

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::types::Sym;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fragment {
    pub string_id: usize,
    pub start: usize,
    pub end: usize,
}

impl Fragment {
    pub fn new(string_id: usize, start: usize, end: usize) -> Fragment {
        debug_assert!(start <= end);
        Fragment { string_id, start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    /// Sub-fragment `[s, e)` relative to this fragment.
    pub fn sub(&self, s: usize, e: usize) -> Fragment {
        debug_assert!(s <= e && e <= self.len());
        Fragment { string_id: self.string_id, start: self.start + s, end: self.start + e }
    }

    pub fn suffix(&self, s: usize) -> Fragment {
        self.sub(s, self.len())
    }

    pub fn prefix(&self, e: usize) -> Fragment {
        self.sub(0, e)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PillarError {
    #[error("unknown string id {0}")]
    UnknownString(usize),
    #[error("fragment [{start}, {end}) out of bounds for string {id} of length {len}")]
    Bounds { id: usize, start: usize, end: usize, len: usize },
    #[error("the family has no strings")]
    EmptyFamily,
}

/// The primitive interface every algorithm is written against.
pub trait Pillar {
    /// Number of registered strings.
    fn family_size(&self) -> usize;
    fn length(&self, string_id: usize) -> usize;
    fn access(&self, f: Fragment, i: usize) -> Sym;
    /// Contents of a fragment; one primitive call regardless of length.
    fn extract(&self, f: Fragment) -> &[Sym];
    /// Longest common prefix.
    fn lcp(&self, a: Fragment, b: Fragment) -> usize;
    /// Longest common suffix.
    fn lcs(&self, a: Fragment, b: Fragment) -> usize;

    /// Direct access to a string's symbols for unindexed backends, so hot
    /// loops can scan without going through the primitives.
    fn plain(&self, _string_id: usize) -> Option<&[Sym]> {
        None
    }

    fn whole(&self, string_id: usize) -> Fragment {
        Fragment::new(string_id, 0, self.length(string_id))
    }

    fn check(&self, f: Fragment) -> Result<Fragment, PillarError> {
        if f.string_id >= self.family_size() {
            return Err(PillarError::UnknownString(f.string_id));
        }
        let len = self.length(f.string_id);
        if f.start > f.end || f.end > len {
            return Err(PillarError::Bounds { id: f.string_id, start: f.start, end: f.end, len });
        }
        Ok(f)
    }
}

/// Per-primitive call counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PillarCounts {
    pub lcp: u64,
    pub lcs: u64,
    pub access: u64,
    pub extract: u64,
    pub length: u64,
}

impl PillarCounts {
    pub fn total(&self) -> u64 {
        self.lcp + self.lcs + self.access + self.extract + self.length
    }
}

#[derive(Debug, Default)]
struct Counters {
    lcp: AtomicU64,
    lcs: AtomicU64,
    access: AtomicU64,
    extract: AtomicU64,
    length: AtomicU64,
}

fn bump(c: &AtomicU64) {
    c.fetch_add(1, Ordering::Relaxed);
}

/// Suffix array by induced sorting over rank-compressed symbols.
fn suffix_array(t: &[u64]) -> Vec<u32> {
    let mut alphabet = t.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let s: Vec<usize> = t.iter().map(|c| alphabet.binary_search(c).unwrap()).collect();
    sa_is(&s, alphabet.len().saturating_sub(1)).into_iter().map(|i| i as u32).collect()
}

const NIL: usize = usize::MAX;

/// SA-IS over symbols in `0..=upper`.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return vec![],
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }
    // ls[i]: suffix i is S-type
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] { ls[i + 1] } else { s[i] < s[i + 1] };
    }
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if ls[i] {
            sum_l[s[i] + 1] += 1;
        } else {
            sum_s[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        sum_l[c + 1] += sum_s[c];
    }
    let induce = |sa: &mut Vec<usize>, lms: &[usize]| {
        sa.iter_mut().for_each(|v| *v = NIL);
        let mut buf = sum_s.clone();
        for &d in lms {
            if d == n {
                continue;
            }
            sa[buf[s[d]]] = d;
            buf[s[d]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NIL && v >= 1 && !ls[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NIL && v >= 1 && ls[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };
    let mut lms_map = vec![NIL; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();
    let mut sa = vec![NIL; n];
    induce(&mut sa, &lms);
    if m > 0 {
        let mut sorted: Vec<usize> = sa.iter().copied().filter(|&v| lms_map[v] != NIL).collect();
        let mut rec = vec![0usize; m];
        let mut rec_upper = 0;
        rec[lms_map[sorted[0]]] = 0;
        for i in 1..m {
            let (mut l, mut r) = (sorted[i - 1], sorted[i]);
            let end_l = if lms_map[l] + 1 < m { lms[lms_map[l] + 1] } else { n };
            let end_r = if lms_map[r] + 1 < m { lms[lms_map[r] + 1] } else { n };
            let mut same = end_l - l == end_r - r;
            if same {
                while l < end_l && s[l] == s[r] {
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec[lms_map[sorted[i]]] = rec_upper;
        }
        let rec_sa = sa_is(&rec, rec_upper);
        for (slot, &r) in sorted.iter_mut().zip(&rec_sa) {
            *slot = lms[r];
        }
        induce(&mut sa, &sorted);
    }
    sa
}

/// LCE structure over one text: rank, Kasai LCP and a sparse table.
struct LceText {
    rank: Vec<u32>,
    table: Vec<Vec<u32>>,
}

impl LceText {
    fn new(t: &[u64]) -> LceText {
        let n = t.len();
        let sa = suffix_array(t);
        let mut rank = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let mut lcp = vec![0u32; n];
        let mut h = 0usize;
        for i in 0..n {
            let r = rank[i] as usize;
            if r == 0 {
                h = 0;
                continue;
            }
            let j = sa[r - 1] as usize;
            while i + h < n && j + h < n && t[i + h] == t[j + h] {
                h += 1;
            }
            lcp[r] = h as u32;
            h = h.saturating_sub(1);
        }
        let mut table = vec![lcp];
        let mut span = 1;
        while 2 * span <= n {
            let last = table.last().unwrap();
            let next = (0..n + 1 - 2 * span).map(|i| last[i].min(last[i + span])).collect();
            table.push(next);
            span *= 2;
        }
        LceText { rank, table }
    }

    /// LCE of the suffixes at `i` and `j` of the text.
    fn lce(&self, i: usize, j: usize) -> usize {
        if i == j {
            return usize::MAX;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a + 1, b) } else { (b + 1, a) };
        let level = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.table[level];
        row[lo].min(row[hi + 1 - (1 << level)]) as usize
    }
}

/// Preprocessed family with constant-time LCP and counted primitives.
pub struct PillarIndex {
    strings: Vec<Vec<Sym>>,
    offsets: Vec<usize>,
    total: usize,
    forward: LceText,
    backward: LceText,
    counters: Counters,
}

impl PillarIndex {
    pub fn build(strings: &[&[Sym]]) -> Result<PillarIndex, PillarError> {
        if strings.is_empty() {
            return Err(PillarError::EmptyFamily);
        }
        let sep_base = 1u64 << 32;
        let mut text = Vec::new();
        let mut offsets = Vec::new();
        for (i, s) in strings.iter().enumerate() {
            offsets.push(text.len());
            text.extend(s.iter().map(|&c| c as u64));
            text.push(sep_base + i as u64);
        }
        let total = text.len();
        let forward = LceText::new(&text);
        text.reverse();
        let backward = LceText::new(&text);
        Ok(PillarIndex {
            strings: strings.iter().map(|s| s.to_vec()).collect(),
            offsets,
            total,
            forward,
            backward,
            counters: Counters::default(),
        })
    }

    pub fn stats(&self) -> PillarCounts {
        let c = &self.counters;
        PillarCounts {
            lcp: c.lcp.load(Ordering::Relaxed),
            lcs: c.lcs.load(Ordering::Relaxed),
            access: c.access.load(Ordering::Relaxed),
            extract: c.extract.load(Ordering::Relaxed),
            length: c.length.load(Ordering::Relaxed),
        }
    }

    pub fn reset_stats(&self) {
        let c = &self.counters;
        for a in [&c.lcp, &c.lcs, &c.access, &c.extract, &c.length] {
            a.store(0, Ordering::Relaxed);
        }
    }
}

impl Pillar for PillarIndex {
    fn family_size(&self) -> usize {
        self.strings.len()
    }

    fn length(&self, string_id: usize) -> usize {
        bump(&self.counters.length);
        self.strings[string_id].len()
    }

    fn access(&self, f: Fragment, i: usize) -> Sym {
        bump(&self.counters.access);
        assert!(i < f.len(), "access out of fragment");
        self.strings[f.string_id][f.start + i]
    }

    fn extract(&self, f: Fragment) -> &[Sym] {
        bump(&self.counters.extract);
        &self.strings[f.string_id][f.start..f.end]
    }

    fn lcp(&self, a: Fragment, b: Fragment) -> usize {
        bump(&self.counters.lcp);
        let cap = a.len().min(b.len());
        if cap == 0 {
            return 0;
        }
        let (i, j) = (self.offsets[a.string_id] + a.start, self.offsets[b.string_id] + b.start);
        self.forward.lce(i, j).min(cap)
    }

    fn lcs(&self, a: Fragment, b: Fragment) -> usize {
        bump(&self.counters.lcs);
        let cap = a.len().min(b.len());
        if cap == 0 {
            return 0;
        }
        let ga = self.offsets[a.string_id] + a.end - 1;
        let gb = self.offsets[b.string_id] + b.end - 1;
        self.backward.lce(self.total - 1 - ga, self.total - 1 - gb).min(cap)
    }
}

/// Unindexed family; queries scan.
pub struct PlainText<'a> {
    strings: Vec<&'a [Sym]>,
}

impl<'a> PlainText<'a> {
    pub fn new(strings: &[&'a [Sym]]) -> PlainText<'a> {
        PlainText { strings: strings.to_vec() }
    }
}

impl Pillar for PlainText<'_> {
    fn family_size(&self) -> usize {
        self.strings.len()
    }

    fn length(&self, string_id: usize) -> usize {
        self.strings[string_id].len()
    }

    fn access(&self, f: Fragment, i: usize) -> Sym {
        self.strings[f.string_id][f.start + i]
    }

    fn extract(&self, f: Fragment) -> &[Sym] {
        &self.strings[f.string_id][f.start..f.end]
    }

    fn lcp(&self, a: Fragment, b: Fragment) -> usize {
        let (s, t) = (self.extract(a), self.extract(b));
        s.iter().zip(t).take_while(|(p, q)| p == q).count()
    }

    fn plain(&self, string_id: usize) -> Option<&[Sym]> {
        Some(self.strings[string_id])
    }

    fn lcs(&self, a: Fragment, b: Fragment) -> usize {
        let (s, t) = (self.extract(a), self.extract(b));
        s.iter().rev().zip(t.iter().rev()).take_while(|(p, q)| p == q).count()
    }
}

/// Builds an index over `strings`.
pub fn build_index(strings: &[&[Sym]]) -> Result<PillarIndex, PillarError> {
    PillarIndex::build(strings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Vec<Sym> {
        text.bytes().map(|b| b as Sym).collect()
    }

    #[test]
    fn suffix_array_matches_sorting() {
        let mut state = 7u64;
        for n in 0..200 {
            let sigma = 1 + n % 5;
            let t: Vec<u64> = (0..n)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 33) % sigma as u64
                })
                .collect();
            let mut naive: Vec<u32> = (0..n as u32).collect();
            naive.sort_by(|&a, &b| t[a as usize..].cmp(&t[b as usize..]));
            assert_eq!(suffix_array(&t), naive, "{t:?}");
        }
    }

    #[test]
    fn small_examples() {
        let a = s("a");
        let ix = build_index(&[&a]).unwrap();
        assert_eq!(ix.lcp(ix.whole(0), ix.whole(0)), 1);
        let (p, q) = (s("abab"), s("ab"));
        let ix = build_index(&[&p, &q]).unwrap();
        assert_eq!(ix.lcp(Fragment::new(0, 0, 4), Fragment::new(1, 0, 2)), 2);
        assert_eq!(ix.lcp(Fragment::new(0, 2, 4), Fragment::new(0, 0, 4)), 2);
        assert_eq!(ix.lcs(Fragment::new(0, 0, 4), Fragment::new(1, 0, 2)), 2);
        assert_eq!(ix.lcs(Fragment::new(0, 0, 3), Fragment::new(0, 0, 1)), 1);
    }

    #[test]
    fn lcp_and_lcs_examples() {
        let (a, b, c, d) = (s("abc"), s("abd"), s("xab"), s("yab"));
        let ix = build_index(&[&a, &b, &c, &d]).unwrap();
        assert_eq!(ix.lcp(ix.whole(0), ix.whole(0)), 3);
        assert_eq!(ix.lcp(ix.whole(0), ix.whole(1)), 2);
        assert_eq!(ix.lcs(ix.whole(2), ix.whole(2)), 3);
        assert_eq!(ix.lcs(ix.whole(2), ix.whole(3)), 2);
    }

    #[test]
    fn counters_are_exact() {
        let a = s("banana");
        let ix = build_index(&[&a]).unwrap();
        let f = ix.whole(0);
        ix.reset_stats();
        ix.lcp(f, f.suffix(2));
        ix.lcp(f, f.suffix(4));
        ix.lcs(f, f.prefix(3));
        ix.extract(f);
        ix.access(f, 0);
        let c = ix.stats();
        assert_eq!((c.lcp, c.lcs, c.extract, c.access, c.total()), (2, 1, 1, 1, 5));
    }

    #[test]
    fn check_rejects_bad_fragments() {
        let a = s("ab");
        let ix = build_index(&[&a]).unwrap();
        assert!(ix.check(Fragment { string_id: 0, start: 1, end: 3 }).is_err());
        assert!(ix.check(Fragment { string_id: 1, start: 0, end: 0 }).is_err());
    }
}
