//! Bounded unit-cost edit distance and self edit distance by diagonal
//! waves in the style of Landau and Vishkin.
//!
//! Wave `j` stores, for each diagonal `h = y - x`, the furthest `x` reachable
//! with at most `j` edits. Self mode keeps only `h <= 0` and never slides or
//! substitutes along `h = 0`, which is exactly the alignment graph of `X`
//! against itself with the main-diagonal edges removed.
//!
//! Alignments returned here use coordinates local to the given fragments.

use crate::pillar::{Fragment, Pillar};
use crate::types::Alignment;

const NONE: i64 = i64::MIN / 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounded {
    /// The distance if it is at most the bound.
    pub value: Option<usize>,
    pub alignment: Option<Alignment>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Prefixes `X[0..L)`.
    Forward,
    /// Suffixes `X[n-L..n)`.
    Backward,
}

struct Wave {
    lo: i64,
    vals: Vec<i64>,
}

impl Wave {
    #[inline]
    fn get(&self, h: i64) -> i64 {
        let i = h - self.lo;
        if i < 0 || i >= self.vals.len() as i64 {
            NONE
        } else {
            self.vals[i as usize]
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Move {
    Stay,
    Sub,
    Del,
    Ins,
}

struct Lv<E> {
    nx: i64,
    ny: i64,
    self_mode: bool,
    ext: E,
}

impl<E: FnMut(usize, usize) -> usize> Lv<E> {
    /// Pre-slide candidates in preference order.
    #[inline]
    fn candidates(&self, prev: &Wave, h: i64) -> [(Move, i64); 4] {
        let (nx, ny) = (self.nx, self.ny);
        let here = prev.get(h);
        let stay = here;
        let sub = if here >= 0 && !(self.self_mode && h == 0) && here + 1 <= nx && here + 1 + h <= ny {
            here + 1
        } else {
            NONE
        };
        let up = prev.get(h + 1);
        let del = if up >= 0 && up + 1 <= nx { up + 1 } else { NONE };
        let down = prev.get(h - 1);
        let ins = if down >= 0 && down + h <= ny && down + h >= 0 { down } else { NONE };
        [(Move::Stay, stay), (Move::Sub, sub), (Move::Del, del), (Move::Ins, ins)]
    }

    #[inline]
    fn slide(&mut self, x: i64, h: i64) -> i64 {
        if self.self_mode && h == 0 {
            return x;
        }
        x + (self.ext)(x as usize, (x + h) as usize) as i64
    }

    fn first(&mut self) -> Wave {
        let v = if self.self_mode { 0 } else { self.slide(0, 0) };
        Wave { lo: 0, vals: vec![v] }
    }

    fn next(&mut self, prev: &Wave, j: i64) -> Wave {
        let lo = (-j).max(-self.nx);
        let hi = if self.self_mode { 0 } else { j.min(self.ny) };
        let mut vals = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        for h in lo..=hi {
            let best = self.candidates(prev, h).iter().map(|c| c.1).max().unwrap();
            vals.push(if best >= 0 { self.slide(best, h) } else { NONE });
        }
        Wave { lo, vals }
    }

    /// Runs waves until `(nx, ny)` is reached or `k` is exhausted.
    fn to_corner(&mut self, k: usize, keep: bool) -> (Option<usize>, Vec<Wave>) {
        let target = self.ny - self.nx;
        let mut waves = Vec::new();
        let mut cur = self.first();
        for j in 0..=k as i64 {
            if j > 0 {
                let next = self.next(&cur, j);
                if keep {
                    waves.push(std::mem::replace(&mut cur, next));
                } else {
                    cur = next;
                }
            }
            if cur.get(target) == self.nx {
                waves.push(cur);
                return (Some(j as usize), waves);
            }
        }
        (None, Vec::new())
    }
}

fn pick_order(m: Move) -> u8 {
    match m {
        Move::Stay => 0,
        Move::Sub => 1,
        Move::Del => 2,
        Move::Ins => 3,
    }
}

impl<E: FnMut(usize, usize) -> usize> Lv<E> {
    fn trace_best(&self, prev: &Wave, h: i64) -> (Move, i64) {
        let mut best = (Move::Stay, NONE);
        for c in self.candidates(prev, h) {
            if c.1 > best.1 || (c.1 == best.1 && pick_order(c.0) < pick_order(best.0)) {
                best = c;
            }
        }
        best
    }
}

fn run_corner<E: FnMut(usize, usize) -> usize>(
    nx: usize,
    ny: usize,
    k: usize,
    self_mode: bool,
    ext: E,
) -> Bounded {
    if nx.abs_diff(ny) > k {
        return Bounded { value: None, alignment: None };
    }
    let mut lv = Lv { nx: nx as i64, ny: ny as i64, self_mode, ext };
    let (value, waves) = lv.to_corner(k, true);
    match value {
        None => Bounded { value: None, alignment: None },
        Some(v) => Bounded { value: Some(v), alignment: Some(trace_path(&lv, &waves)) },
    }
}

fn trace_path<E: FnMut(usize, usize) -> usize>(lv: &Lv<E>, waves: &[Wave]) -> Alignment {
    let mut h = lv.ny - lv.nx;
    let mut starts = Vec::new();
    for j in (1..waves.len()).rev() {
        let (mv, s) = lv.trace_best(&waves[j - 1], h);
        match mv {
            Move::Stay => {}
            Move::Sub => starts.push((s - 1, s - 1 + h)),
            Move::Del => {
                starts.push((s - 1, s + h));
                h += 1;
            }
            Move::Ins => {
                starts.push((s, s + h - 1));
                h -= 1;
            }
        }
    }
    debug_assert_eq!(h, 0);
    let mut bps = vec![(0usize, 0usize)];
    for &(a, b) in starts.iter().rev() {
        let p = (a as usize, b as usize);
        if *bps.last().unwrap() != p {
            bps.push(p);
        }
    }
    let end = (lv.nx as usize, lv.ny as usize);
    if *bps.last().unwrap() != end {
        bps.push(end);
    }
    Alignment::new(bps).expect("wave traceback produced an invalid path")
}

/// `ed(X, Y)` with a witness if it is at most `k`.
pub fn ed_bounded<P: Pillar>(p: &P, x: Fragment, y: Fragment, k: usize) -> Bounded {
    run_corner(x.len(), y.len(), k, false, |a, b| p.lcp(x.suffix(a), y.suffix(b)))
}

/// `selfed(X)` with a witness self-alignment if it is at most `k`. The
/// witness stays on the side `y <= x` of the main diagonal.
pub fn selfed_bounded<P: Pillar>(p: &P, x: Fragment, k: usize) -> Bounded {
    run_corner(x.len(), x.len(), k, true, |a, b| p.lcp(x.suffix(a), x.suffix(b)))
}

/// Largest `L` with `selfed(X[0..L)) <= k` (forward) or
/// `selfed(X[n-L..n)) <= k` (backward), from a single run of `k` waves.
pub fn selfed_prefix_reach<P: Pillar>(p: &P, x: Fragment, k: usize, dir: Direction) -> usize {
    let n = x.len();
    if let Some(text) = p.plain(x.string_id) {
        let s = &text[x.start..x.end];
        return match dir {
            Direction::Forward => reach(n, k, |a, b| s[a..].iter().zip(&s[b..]).take_while(|(u, v)| u == v).count()),
            Direction::Backward => {
                reach(n, k, |a, b| s[..n - a].iter().rev().zip(s[..n - b].iter().rev()).take_while(|(u, v)| u == v).count())
            }
        };
    }
    match dir {
        Direction::Forward => reach(n, k, |a, b| p.lcp(x.suffix(a), x.suffix(b))),
        Direction::Backward => reach(n, k, |a, b| p.lcs(x.prefix(n - a), x.prefix(n - b))),
    }
}

fn reach<E: FnMut(usize, usize) -> usize>(n: usize, k: usize, mut ext: E) -> usize {
    // prev[t] holds the furthest x on diagonal h = -t.
    let n = n as i64;
    let width = k.min(n as usize) + 2;
    let mut prev = vec![NONE; width + 1];
    let mut cur = vec![NONE; width + 1];
    prev[0] = 0;
    for j in 1..=k {
        if prev[0] == n {
            break;
        }
        // diagonal t needs t more insertions to return to the main diagonal
        let top = j.min(k - j).min(n as usize).min(width - 1);
        for t in 0..=top {
            let here = prev[t];
            let mut best = here;
            if t > 0 && here >= 0 && here < n {
                best = best.max(here + 1);
            }
            if t > 0 {
                let up = prev[t - 1];
                if up >= 0 && up < n {
                    best = best.max(up + 1);
                }
            }
            let down = prev[t + 1];
            if down >= t as i64 {
                best = best.max(down);
            }
            cur[t] = if best >= 0 && t > 0 { best + ext(best as usize, (best - t as i64) as usize) as i64 } else { best };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[0].max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::selfed_brute;
    use crate::pillar::{build_index, PlainText};
    use crate::types::Sym;

    fn s(text: &str) -> Vec<Sym> {
        text.bytes().map(|b| b as Sym).collect()
    }

    #[test]
    fn ed_examples() {
        let (a, b) = (s("kitten"), s("sitting"));
        let p = PlainText::new(&[&a, &b]);
        let r = ed_bounded(&p, p.whole(0), p.whole(1), 3);
        assert_eq!(r.value, Some(3));
        assert_eq!(r.alignment.unwrap().unit_cost(&a, &b).unwrap(), 3);
        assert_eq!(ed_bounded(&p, p.whole(0), p.whole(0), 0).value, Some(0));
        let (c, d) = (s("aaaa"), s("bbbb"));
        let p = PlainText::new(&[&c, &d]);
        assert_eq!(ed_bounded(&p, p.whole(0), p.whole(1), 3).value, None);
    }

    #[test]
    fn selfed_examples() {
        let e: Vec<Sym> = Vec::new();
        let p = PlainText::new(&[&e]);
        assert_eq!(selfed_bounded(&p, p.whole(0), 0).value, Some(0));
        let a = s("aaaaaaaa");
        let ix = build_index(&[&a]).unwrap();
        let r = selfed_bounded(&ix, ix.whole(0), 2);
        assert_eq!(r.value, Some(2));
        let b = s("abcdefgh");
        let ix = build_index(&[&b]).unwrap();
        assert_eq!(selfed_bounded(&ix, ix.whole(0), 4).value, None);
        assert_eq!(selfed_brute(&b), 9);
    }

    #[test]
    fn witness_avoids_main_diagonal() {
        let a = s("abaababaabaab");
        let p = PlainText::new(&[&a]);
        let r = selfed_bounded(&p, p.whole(0), 20);
        assert_eq!(r.value, Some(selfed_brute(&a)));
        let pts = r.alignment.unwrap().expand();
        for w in pts.windows(2) {
            assert!(!(w[0].0 == w[0].1 && w[1].0 == w[0].0 + 1 && w[1].1 == w[0].1 + 1));
            assert!(w[1].1 <= w[1].0);
        }
    }

    #[test]
    fn prefix_reach_matches_brute() {
        let a = s("abcabcabdabcabcxyabab");
        let p = PlainText::new(&[&a]);
        for k in 0..12 {
            let fwd = (0..=a.len()).filter(|&l| selfed_brute(&a[..l]) <= k).max().unwrap();
            assert_eq!(selfed_prefix_reach(&p, p.whole(0), k, Direction::Forward), fwd);
            let n = a.len();
            let bwd = (0..=n).filter(|&l| selfed_brute(&a[n - l..]) <= k).max().unwrap();
            assert_eq!(selfed_prefix_reach(&p, p.whole(0), k, Direction::Backward), bwd);
        }
    }
}
