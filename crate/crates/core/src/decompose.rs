//! Phrase decompositions driven by a cheap self-alignment.
//!
//! Both scans walk `X` left to right, looking at where the self-alignment
//! sends the current boundary. Long perfectly matched stretches become
//! copies of earlier phrases; everything else is marked fresh.

use thiserror::Error;

use crate::pillar::{Fragment, Pillar};
use crate::selfed::selfed_bounded;
use crate::types::{Alignment, Sym};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("self edit distance exceeds {0}")]
    SelfEdExceeded(usize),
    #[error("self-alignment shift {shift} at position {at} exceeds the budget {k}")]
    ShiftTooLarge { at: usize, shift: usize, k: usize },
    #[error("parameters must be positive")]
    BadParameter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhraseDecomposition {
    /// `x_0 = 0 <= x_1 <= ... <= x_m = n`, local to the decomposed fragment.
    pub boundaries: Vec<usize>,
    pub fresh: Vec<bool>,
    /// Source phrase of every non-fresh phrase.
    pub sources: Vec<Option<usize>>,
    /// Phrase lengths lie in `[lo, hi)` unless there is a single phrase.
    pub lo: usize,
    pub hi: usize,
}

impl PhraseDecomposition {
    fn single(n: usize, lo: usize, hi: usize) -> PhraseDecomposition {
        if n == 0 {
            return PhraseDecomposition { boundaries: vec![0], fresh: vec![], sources: vec![], lo, hi };
        }
        PhraseDecomposition { boundaries: vec![0, n], fresh: vec![true], sources: vec![None], lo, hi }
    }

    pub fn len(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn phrase(&self, i: usize) -> (usize, usize) {
        (self.boundaries[i], self.boundaries[i + 1])
    }

    pub fn fresh_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.fresh[i]).collect()
    }

    /// Checks every structural promise against the string itself.
    pub fn validate(
        &self,
        x: &[Sym],
        max_fresh: usize,
        max_source_dist: usize,
        predecessor_only: bool,
    ) -> Result<(), String> {
        let b = &self.boundaries;
        if b[0] != 0 || *b.last().unwrap() != x.len() {
            return Err(format!("boundaries {:?}..{:?} do not cover 0..{}", b.first(), b.last(), x.len()));
        }
        let m = self.len();
        if self.fresh.len() != m || self.sources.len() != m {
            return Err("per-phrase tables have the wrong length".into());
        }
        for i in 0..m {
            let (s, e) = self.phrase(i);
            if e < s {
                return Err(format!("phrase {i} is reversed"));
            }
            if m > 1 && !(self.lo <= e - s && e - s < self.hi) {
                return Err(format!("phrase {i} has length {} outside [{}, {})", e - s, self.lo, self.hi));
            }
        }
        let fresh = self.fresh.iter().filter(|&&f| f).count();
        if fresh > max_fresh {
            return Err(format!("{fresh} fresh phrases, allowed {max_fresh}"));
        }
        for i in 0..m {
            if self.fresh[i] {
                continue;
            }
            let src = self.sources[i].ok_or(format!("phrase {i} is not fresh but has no source"))?;
            if src >= i || (predecessor_only && src + 1 != i) {
                return Err(format!("phrase {i} has source {src}"));
            }
            let (s, e) = self.phrase(i);
            let (t, f) = self.phrase(src);
            if x[s..e] != x[t..f] {
                return Err(format!("phrase {i} differs from its source {src}"));
            }
            if s - t > max_source_dist {
                return Err(format!("phrase {i} is {} away from its source", s - t));
            }
        }
        Ok(())
    }
}

/// Where a canonical self-alignment sends column `x`, and how many matches
/// follow from there.
fn image_and_run(a: &[(usize, usize)], x: usize) -> (usize, usize) {
    let t = a.partition_point(|b| b.0 < x);
    let b = a[t];
    if b.0 == x {
        (b.1, 0)
    } else {
        (b.1 - (b.0 - x), b.0 - x)
    }
}

fn self_alignment<P: Pillar>(p: &P, x: Fragment, k: usize) -> Result<Alignment, DecomposeError> {
    selfed_bounded(p, x, k).alignment.ok_or(DecomposeError::SelfEdExceeded(k))
}

/// Phrases of length `[k, 2k)`, at most `2k` fresh, every other phrase equal
/// to its predecessor.
pub fn decompose_pillar<P: Pillar>(
    p: &P,
    x: Fragment,
    k: usize,
) -> Result<PhraseDecomposition, DecomposeError> {
    if k == 0 {
        return Err(DecomposeError::BadParameter);
    }
    let n = x.len();
    if n < 2 * k {
        return Ok(PhraseDecomposition::single(n, k, 2 * k));
    }
    let a = self_alignment(p, x, k)?;
    decompose_pillar_with(p, x, k, &a)
}

/// [`decompose_pillar`] with a given canonical self-alignment of cost at most `k`
/// that stays on the side `y <= x`.
pub fn decompose_pillar_with<P: Pillar>(
    p: &P,
    x: Fragment,
    k: usize,
    a: &Alignment,
) -> Result<PhraseDecomposition, DecomposeError> {
    let n = x.len();
    if n < 2 * k {
        return Ok(PhraseDecomposition::single(n, k, 2 * k));
    }
    let bps = a.breakpoints();
    let mut b = vec![0usize];
    let mut fresh: Vec<bool> = Vec::new();
    loop {
        let i = b.len() - 1;
        let xi = b[i];
        if xi >= n {
            break;
        }
        if i > 0 && n - b[i - 1] < 2 * k {
            b[i] = n;
            fresh[i - 1] = true;
            break;
        }
        if n - xi < 2 * k {
            b.push(n);
            fresh.push(true);
            if i > 0 {
                b[i] = (b[i - 1] + n) / 2;
                fresh[i - 1] = true;
            }
            break;
        }
        let (img, run) = image_and_run(bps, xi);
        if run < 2 * k - 1 {
            b.push(xi + 2 * k - 1);
            fresh.push(true);
            continue;
        }
        let shift = xi - img;
        if shift == 0 || shift > k {
            return Err(DecomposeError::ShiftTooLarge { at: xi, shift, k });
        }
        let period = shift * k.div_ceil(shift);
        let lcp = p.lcp(x.suffix(xi), x.suffix(img));
        let r = lcp.min(run).min(n - xi) / period;
        for q in 1..=r {
            b.push(xi + period * q);
            fresh.push(q == 1);
        }
    }
    let m = b.len() - 1;
    let sources = (0..m).map(|i| if fresh[i] { None } else { Some(i - 1) }).collect();
    Ok(PhraseDecomposition { boundaries: b, fresh, sources, lo: k, hi: 2 * k })
}

/// Phrases of length `[l, 2l)`, at most `3k` fresh, every other phrase a
/// copy of a source at distance at most `max(2l - 1, k)`.
pub fn decompose_std<P: Pillar>(
    p: &P,
    x: Fragment,
    k: usize,
    l: usize,
) -> Result<PhraseDecomposition, DecomposeError> {
    if l == 0 {
        return Err(DecomposeError::BadParameter);
    }
    let n = x.len();
    if n < 2 * l {
        return Ok(PhraseDecomposition::single(n, l, 2 * l));
    }
    let a = self_alignment(p, x, k)?;
    decompose_std_with(p, x, k, l, &a)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Origin {
    Fresh,
    From(usize),
}

/// [`decompose_std`] with a given canonical self-alignment.
pub fn decompose_std_with<P: Pillar>(
    p: &P,
    x: Fragment,
    k: usize,
    l: usize,
    a: &Alignment,
) -> Result<PhraseDecomposition, DecomposeError> {
    let n = x.len();
    if n < 2 * l {
        return Ok(PhraseDecomposition::single(n, l, 2 * l));
    }
    let bps = a.breakpoints();
    let mut b = vec![0usize];
    let mut origin: Vec<Origin> = Vec::new();
    loop {
        let i = b.len() - 1;
        let xi = b[i];
        if xi >= n {
            break;
        }
        if i > 0 && n - b[i - 1] < 2 * l {
            b[i] = n;
            origin[i - 1] = Origin::Fresh;
            break;
        }
        if n - xi < 2 * l {
            b.push(n);
            origin.push(Origin::Fresh);
            if i > 0 {
                b[i] = (b[i - 1] + n) / 2;
                origin[i - 1] = Origin::Fresh;
            }
            break;
        }
        let (img, run) = image_and_run(bps, xi);
        if run < 2 * l - 1 {
            b.push(xi + 2 * l - 1);
            origin.push(Origin::Fresh);
            continue;
        }
        let shift = xi - img;
        if shift == 0 || shift > k {
            return Err(DecomposeError::ShiftTooLarge { at: xi, shift, k });
        }
        if shift < 2 * l {
            b.push(xi + shift * l.div_ceil(shift));
            origin.push(if i > 0 { Origin::From(i - 1) } else { Origin::Fresh });
            continue;
        }
        // img lies in an earlier phrase i2 with i2 + 1 < i
        let i2 = b.partition_point(|&v| v <= img) - 1;
        let (s2, e2) = (b[i2], b[i2 + 1]);
        if s2 == img {
            b.push(xi + e2 - s2);
            origin.push(Origin::From(i2));
        } else if e2 + shift - b[i - 1] < 2 * l {
            b[i] = e2 + shift;
            origin[i - 1] = Origin::Fresh;
        } else {
            let next = e2 + shift;
            b.push(next);
            b[i] = (b[i - 1] + next) / 2;
            origin[i - 1] = Origin::Fresh;
            origin.push(Origin::Fresh);
        }
    }
    let m = b.len() - 1;
    let bound = (2 * l - 1).max(k);
    let mut fresh = vec![true; m];
    let mut sources = vec![None; m];
    for i in 0..m {
        if let Origin::From(src) = origin[i] {
            let (s, e) = (b[i], b[i + 1]);
            let (t, f) = (b[src], b[src + 1]);
            let same = e - s == f - t
                && s - t <= bound
                && p.lcp(x.sub(s, e), x.sub(t, f)) == e - s;
            if same {
                fresh[i] = false;
                sources[i] = Some(src);
            }
        }
    }
    Ok(PhraseDecomposition { boundaries: b, fresh, sources, lo: l, hi: 2 * l })
}
