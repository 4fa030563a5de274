//! Strings, exact costs, weight functions and alignments.
//!
//! Costs are integer numerators over the denominator carried by the
//! [`WeightFn`] they were computed with. The alignment graph is never built;
//! every consumer walks it implicitly through [`WeightFn::sub`],
//! [`WeightFn::ins`] and [`WeightFn::del`].

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Symbol id. Valid ids are `0..alphabet_size`.
pub type Sym = u32;

/// Exact cost numerator, or infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost(u64);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const INF: Cost = Cost(u64::MAX);

    pub fn new(num: u64) -> Cost {
        assert!(num != u64::MAX, "cost numerator collides with the infinity sentinel");
        Cost(num)
    }

    pub fn is_inf(self) -> bool {
        self.0 == u64::MAX
    }

    pub fn is_finite(self) -> bool {
        !self.is_inf()
    }

    /// Numerator; `None` for infinity.
    pub fn num(self) -> Option<u64> {
        if self.is_inf() {
            None
        } else {
            Some(self.0)
        }
    }

    /// Raw value with infinity mapped to `u64::MAX`.
    pub fn raw(self) -> u64 {
        self.0
    }

    /// `self` if it does not exceed `bound`, else infinity.
    pub fn cap(self, bound: u64) -> Cost {
        if self.0 <= bound {
            self
        } else {
            Cost::INF
        }
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        if self.is_inf() || rhs.is_inf() {
            return Cost::INF;
        }
        match self.0.checked_add(rhs.0) {
            Some(v) if v != u64::MAX => Cost(v),
            _ => panic!("cost overflow: {} + {}", self.0, rhs.0),
        }
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.num() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("INF"),
        }
    }
}

/// Diagonal window `lo <= y - x <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Band {
    pub lo: i64,
    pub hi: i64,
}

impl Band {
    pub fn new(lo: i64, hi: i64) -> Band {
        assert!(lo <= hi, "empty band");
        Band { lo, hi }
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        let h = y as i64 - x as i64;
        self.lo <= h && h <= self.hi
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("alphabet size must be positive")]
    EmptyAlphabet,
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("table `{0}` has wrong shape")]
    Shape(&'static str),
    #[error("negative weight {0} (only -1 is allowed, meaning infinity)")]
    Negative(i64),
    #[error("malformed weight file: {0}")]
    Parse(String),
}

/// Weight function over `Σ ∪ {ε}`; ε is the id `alphabet_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFn {
    alphabet_size: usize,
    denominator: u64,
    sub: Vec<Cost>,
    ins: Vec<Cost>,
    del: Vec<Cost>,
    symmetric: bool,
    normalized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormReport {
    pub normalized: bool,
    /// Pairs `(a, b)` breaking normalization; ε appears as `alphabet_size`.
    pub violations: Vec<(Sym, Sym)>,
}

#[derive(Serialize, Deserialize)]
struct WeightFile {
    alphabet_size: usize,
    denominator: u64,
    sub: Vec<Vec<i64>>,
    ins: Vec<i64>,
    del: Vec<i64>,
}

fn decode(v: i64) -> Result<Cost, WeightError> {
    match v {
        -1 => Ok(Cost::INF),
        v if v < 0 => Err(WeightError::Negative(v)),
        v => Ok(Cost::new(v as u64)),
    }
}

fn encode(c: Cost) -> i64 {
    match c.num() {
        Some(v) => v as i64,
        None => -1,
    }
}

impl WeightFn {
    /// Builds a weight function from numerator tables. `sub` is row-major `A×A`.
    pub fn new(
        alphabet_size: usize,
        denominator: u64,
        sub: Vec<Cost>,
        ins: Vec<Cost>,
        del: Vec<Cost>,
    ) -> Result<WeightFn, WeightError> {
        if alphabet_size == 0 {
            return Err(WeightError::EmptyAlphabet);
        }
        if denominator == 0 {
            return Err(WeightError::ZeroDenominator);
        }
        if sub.len() != alphabet_size * alphabet_size {
            return Err(WeightError::Shape("sub"));
        }
        if ins.len() != alphabet_size {
            return Err(WeightError::Shape("ins"));
        }
        if del.len() != alphabet_size {
            return Err(WeightError::Shape("del"));
        }
        let mut w = WeightFn {
            alphabet_size,
            denominator,
            sub,
            ins,
            del,
            symmetric: false,
            normalized: false,
        };
        w.symmetric = w.check_symmetric();
        w.normalized = w.normalize_check().normalized;
        Ok(w)
    }

    /// Levenshtein weights.
    pub fn unit(alphabet_size: usize) -> WeightFn {
        let a = alphabet_size;
        let sub = (0..a * a)
            .map(|i| if i / a == i % a { Cost::ZERO } else { Cost::new(1) })
            .collect();
        WeightFn::new(a, 1, sub, vec![Cost::new(1); a], vec![Cost::new(1); a]).unwrap()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn epsilon(&self) -> Sym {
        self.alphabet_size as Sym
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    #[inline]
    pub fn sub(&self, a: Sym, b: Sym) -> Cost {
        self.sub[a as usize * self.alphabet_size + b as usize]
    }

    #[inline]
    pub fn ins(&self, b: Sym) -> Cost {
        self.ins[b as usize]
    }

    #[inline]
    pub fn del(&self, a: Sym) -> Cost {
        self.del[a as usize]
    }

    /// `w(a, b)` with ε encoded as `alphabet_size`.
    pub fn get(&self, a: Sym, b: Sym) -> Cost {
        let e = self.epsilon();
        match (a == e, b == e) {
            (true, true) => Cost::ZERO,
            (true, false) => self.ins(b),
            (false, true) => self.del(a),
            (false, false) => self.sub(a, b),
        }
    }

    /// Largest finite weight numerator (0 if none).
    pub fn max_finite(&self) -> u64 {
        self.sub
            .iter()
            .chain(&self.ins)
            .chain(&self.del)
            .filter_map(|c| c.num())
            .max()
            .unwrap_or(0)
    }

    /// Copy with every infinite entry replaced by `cap`.
    pub fn with_inf_capped(&self, cap: u64) -> WeightFn {
        let f = |c: &Cost| if c.is_inf() { Cost::new(cap) } else { *c };
        WeightFn {
            sub: self.sub.iter().map(f).collect(),
            ins: self.ins.iter().map(f).collect(),
            del: self.del.iter().map(f).collect(),
            ..self.clone()
        }
    }

    fn check_symmetric(&self) -> bool {
        let a = self.alphabet_size as Sym;
        (0..a).all(|x| (0..a).all(|y| self.sub(x, y) == self.sub(y, x)))
            && self.ins == self.del
    }

    pub fn normalize_check(&self) -> NormReport {
        let a = self.alphabet_size as Sym;
        let one = self.denominator;
        let mut violations = Vec::new();
        for x in 0..=a {
            for y in 0..=a {
                if x == a && y == a {
                    continue;
                }
                let c = self.get(x, y);
                let ok = if x == y { c == Cost::ZERO } else { c.is_inf() || c.raw() >= one };
                if !ok {
                    violations.push((x, y));
                }
            }
        }
        NormReport { normalized: violations.is_empty(), violations }
    }

    pub fn from_json(text: &str) -> Result<WeightFn, WeightError> {
        let f: WeightFile =
            serde_json::from_str(text).map_err(|e| WeightError::Parse(e.to_string()))?;
        if f.sub.len() != f.alphabet_size || f.sub.iter().any(|r| r.len() != f.alphabet_size) {
            return Err(WeightError::Shape("sub"));
        }
        let sub = f.sub.iter().flatten().map(|&v| decode(v)).collect::<Result<_, _>>()?;
        let ins = f.ins.iter().map(|&v| decode(v)).collect::<Result<_, _>>()?;
        let del = f.del.iter().map(|&v| decode(v)).collect::<Result<_, _>>()?;
        WeightFn::new(f.alphabet_size, f.denominator, sub, ins, del)
    }

    pub fn to_json(&self) -> String {
        let a = self.alphabet_size;
        let f = WeightFile {
            alphabet_size: a,
            denominator: self.denominator,
            sub: self.sub.chunks(a).map(|r| r.iter().map(|&c| encode(c)).collect()).collect(),
            ins: self.ins.iter().map(|&c| encode(c)).collect(),
            del: self.del.iter().map(|&c| encode(c)).collect(),
        };
        serde_json::to_string(&f).unwrap()
    }
}

/// Unit step of an expanded alignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(x, y) -> (x+1, y+1)`.
    Diag,
    /// `(x, y) -> (x+1, y)`, deletes `X[x]`.
    Del,
    /// `(x, y) -> (x, y+1)`, inserts `Y[y]`.
    Ins,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlignmentError {
    #[error("alignment has no points")]
    Empty,
    #[error("invalid segment {from:?} -> {to:?}")]
    Segment { from: (usize, usize), to: (usize, usize) },
    #[error("alignment leaves the strings: end {end:?}, lengths ({nx}, {ny})")]
    OutOfBounds { end: (usize, usize), nx: usize, ny: usize },
    #[error("domain mismatch: {0:?} vs {1:?}")]
    Domain((usize, usize), (usize, usize)),
    #[error("point {0:?} is not on the alignment")]
    NotOnPath((usize, usize)),
    #[error("malformed cigar: {0}")]
    Cigar(String),
}

/// Alignment in breakpoint representation, absolute coordinates.
///
/// Between consecutive breakpoints `(x', y')`, `(x, y)` the path takes at
/// most one indel step first and then diagonal steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alignment {
    bps: Vec<(usize, usize)>,
}

fn segment_ok(a: (usize, usize), b: (usize, usize)) -> bool {
    if b.0 < a.0 || b.1 < a.1 || a == b {
        return false;
    }
    (b.0 - a.0).abs_diff(b.1 - a.1) <= 1
}

impl Alignment {
    pub fn new(bps: Vec<(usize, usize)>) -> Result<Alignment, AlignmentError> {
        if bps.is_empty() {
            return Err(AlignmentError::Empty);
        }
        for w in bps.windows(2) {
            if !segment_ok(w[0], w[1]) {
                return Err(AlignmentError::Segment { from: w[0], to: w[1] });
            }
        }
        Ok(Alignment { bps })
    }

    /// Empty alignment sitting at one point.
    pub fn point(x: usize, y: usize) -> Alignment {
        Alignment { bps: vec![(x, y)] }
    }

    /// All-diagonal alignment of length `len` starting at `(x, y)`.
    pub fn diagonal(x: usize, y: usize, len: usize) -> Alignment {
        if len == 0 {
            Alignment::point(x, y)
        } else {
            Alignment { bps: vec![(x, y), (x + len, y + len)] }
        }
    }

    pub fn breakpoints(&self) -> &[(usize, usize)] {
        &self.bps
    }

    pub fn start(&self) -> (usize, usize) {
        self.bps[0]
    }

    pub fn end(&self) -> (usize, usize) {
        *self.bps.last().unwrap()
    }

    /// `(x_start, x_end, y_start, y_end)`.
    pub fn domain(&self) -> (usize, usize, usize, usize) {
        let (s, e) = (self.start(), self.end());
        (s.0, e.0, s.1, e.1)
    }

    pub fn check_bounds(&self, nx: usize, ny: usize) -> Result<(), AlignmentError> {
        let end = self.end();
        if end.0 > nx || end.1 > ny {
            return Err(AlignmentError::OutOfBounds { end, nx, ny });
        }
        Ok(())
    }

    pub fn expand(&self) -> Vec<(usize, usize)> {
        let mut out = vec![self.bps[0]];
        for w in self.bps.windows(2) {
            let (a, b) = (w[0], w[1]);
            let len = (b.0 - a.0).max(b.1 - a.1);
            for delta in (0..len).rev() {
                out.push((b.0 - delta, b.1 - delta));
            }
        }
        out
    }

    pub fn steps(&self) -> Vec<Step> {
        let mut out = Vec::new();
        for w in self.bps.windows(2) {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            if dx > dy {
                out.push(Step::Del);
            } else if dy > dx {
                out.push(Step::Ins);
            }
            out.extend(std::iter::repeat(Step::Diag).take(dx.min(dy)));
        }
        out
    }

    /// Builds an alignment from unit steps; diagonal runs are kept whole.
    pub fn from_steps(start: (usize, usize), steps: &[Step]) -> Alignment {
        Alignment::from_steps_by(start, steps, |_, _| true)
    }

    /// Like [`Alignment::from_steps`] but also breaks before every diagonal
    /// step that aligns different symbols, giving the canonical form where
    /// each segment is one edit followed by matches only.
    pub fn from_steps_canonical(
        start: (usize, usize),
        steps: &[Step],
        x: &[Sym],
        y: &[Sym],
    ) -> Alignment {
        Alignment::from_steps_by(start, steps, |cx, cy| x[cx] == y[cy])
    }

    fn from_steps_by(
        start: (usize, usize),
        steps: &[Step],
        is_match: impl Fn(usize, usize) -> bool,
    ) -> Alignment {
        let mut bps = vec![start];
        let mut cur = start;
        for &s in steps {
            let breaks = match s {
                Step::Diag => !is_match(cur.0, cur.1),
                _ => true,
            };
            if breaks && cur != *bps.last().unwrap() {
                bps.push(cur);
            }
            cur = match s {
                Step::Diag => (cur.0 + 1, cur.1 + 1),
                Step::Del => (cur.0 + 1, cur.1),
                Step::Ins => (cur.0, cur.1 + 1),
            };
        }
        if cur != *bps.last().unwrap() {
            bps.push(cur);
        }
        Alignment { bps }
    }

    /// Builds an alignment through an explicit staircase of points.
    pub fn from_points(points: &[(usize, usize)]) -> Result<Alignment, AlignmentError> {
        if points.is_empty() {
            return Err(AlignmentError::Empty);
        }
        let mut steps = Vec::with_capacity(points.len());
        for w in points.windows(2) {
            let s = match (w[1].0.wrapping_sub(w[0].0), w[1].1.wrapping_sub(w[0].1)) {
                (1, 1) => Step::Diag,
                (1, 0) => Step::Del,
                (0, 1) => Step::Ins,
                _ => return Err(AlignmentError::Segment { from: w[0], to: w[1] }),
            };
            steps.push(s);
        }
        Ok(Alignment::from_steps(points[0], &steps))
    }

    /// Canonical breakpoints relative to the strings `x`, `y`.
    pub fn canonical(&self, x: &[Sym], y: &[Sym]) -> Alignment {
        Alignment::from_steps_canonical(self.start(), &self.steps(), x, y)
    }

    /// Total weight of all steps.
    pub fn cost(&self, x: &[Sym], y: &[Sym], w: &WeightFn) -> Result<Cost, AlignmentError> {
        self.check_bounds(x.len(), y.len())?;
        let mut total = Cost::ZERO;
        for seg in self.bps.windows(2) {
            let (a, b) = (seg[0], seg[1]);
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let (mut cx, mut cy) = a;
            if dx > dy {
                total = total + w.del(x[cx]);
                cx += 1;
            } else if dy > dx {
                total = total + w.ins(y[cy]);
                cy += 1;
            }
            for d in 0..dx.min(dy) {
                let (p, q) = (x[cx + d], y[cy + d]);
                if p != q {
                    total = total + w.sub(p, q);
                }
            }
        }
        Ok(total)
    }

    /// Number of non-match steps.
    pub fn unit_cost(&self, x: &[Sym], y: &[Sym]) -> Result<usize, AlignmentError> {
        self.check_bounds(x.len(), y.len())?;
        let mut total = 0;
        let mut cur = self.start();
        for s in self.steps() {
            match s {
                Step::Diag => {
                    total += usize::from(x[cur.0] != y[cur.1]);
                    cur = (cur.0 + 1, cur.1 + 1);
                }
                Step::Del => {
                    total += 1;
                    cur.0 += 1;
                }
                Step::Ins => {
                    total += 1;
                    cur.1 += 1;
                }
            }
        }
        Ok(total)
    }

    /// Translates every breakpoint by `(dx, dy)`.
    pub fn shifted(&self, dx: usize, dy: usize) -> Alignment {
        Alignment { bps: self.bps.iter().map(|&(x, y)| (x + dx, y + dy)).collect() }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn concat(&self, other: &Alignment) -> Result<Alignment, AlignmentError> {
        if self.end() != other.start() {
            return Err(AlignmentError::Domain(self.end(), other.start()));
        }
        let mut bps = self.bps.clone();
        bps.extend_from_slice(&other.bps[1..]);
        Ok(Alignment { bps })
    }

    /// Smallest `y` with `(x, y)` on the path, if column `x` is crossed.
    pub fn y_at(&self, x: usize) -> Option<usize> {
        let (x0, x1) = (self.start().0, self.end().0);
        if x < x0 || x > x1 {
            return None;
        }
        let t = self.bps.partition_point(|b| b.0 < x);
        let b = self.bps[t];
        if b.0 == x {
            return Some(b.1);
        }
        Some(b.1 - (b.0 - x))
    }

    /// True if `(x, y)` is one of the expanded points.
    pub fn contains_point(&self, p: (usize, usize)) -> bool {
        if self.bps.len() == 1 {
            return self.bps[0] == p;
        }
        self.bps.windows(2).any(|w| {
            let (a, b) = (w[0], w[1]);
            if p == a {
                return true;
            }
            if p.0 < a.0 || p.0 > b.0 || p.1 < a.1 || p.1 > b.1 {
                return false;
            }
            // points of a segment are b - (δ, δ) plus the start a
            b.0 - p.0 == b.1 - p.1 && b.0 - p.0 < (b.0 - a.0).max(b.1 - a.1)
        })
    }

    /// Splits at an on-path point into the parts before and after it.
    pub fn split_at(&self, p: (usize, usize)) -> Result<(Alignment, Alignment), AlignmentError> {
        let pts = self.expand();
        let idx = pts.iter().position(|&q| q == p).ok_or(AlignmentError::NotOnPath(p))?;
        Ok((Alignment::from_points(&pts[..=idx])?, Alignment::from_points(&pts[idx..])?))
    }

    /// Composition of `self: X -> Y` with `other: Y -> Z`.
    pub fn compose(&self, other: &Alignment) -> Result<Alignment, AlignmentError> {
        let (_, _, ya, yb) = self.domain();
        let (xa, xb, _, _) = other.domain();
        if (ya, yb) != (xa, xb) {
            return Err(AlignmentError::Domain((ya, yb), (xa, xb)));
        }
        let (a, b) = (self.steps(), other.steps());
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        loop {
            if i < a.len() && a[i] == Step::Del {
                out.push(Step::Del);
                i += 1;
            } else if j < b.len() && b[j] == Step::Ins {
                out.push(Step::Ins);
                j += 1;
            } else if i == a.len() && j == b.len() {
                break;
            } else {
                match (a[i], b[j]) {
                    (Step::Diag, Step::Diag) => out.push(Step::Diag),
                    (Step::Diag, Step::Del) => out.push(Step::Del),
                    (Step::Ins, Step::Diag) => out.push(Step::Ins),
                    _ => {}
                }
                i += 1;
                j += 1;
            }
        }
        Ok(Alignment::from_steps((self.start().0, other.start().1), &out))
    }

    /// Run-length string over `=`, `X`, `I`, `D`.
    pub fn cigar(&self, x: &[Sym], y: &[Sym]) -> String {
        let mut out = String::new();
        let mut last: Option<(char, usize)> = None;
        let mut cur = self.start();
        let mut push = |c: char, last: &mut Option<(char, usize)>| match last {
            Some((p, n)) if *p == c => *n += 1,
            _ => {
                if let Some((p, n)) = last.take() {
                    out.push_str(&format!("{n}{p}"));
                }
                *last = Some((c, 1));
            }
        };
        for s in self.steps() {
            match s {
                Step::Diag => {
                    push(if x[cur.0] == y[cur.1] { '=' } else { 'X' }, &mut last);
                    cur = (cur.0 + 1, cur.1 + 1);
                }
                Step::Del => {
                    push('D', &mut last);
                    cur.0 += 1;
                }
                Step::Ins => {
                    push('I', &mut last);
                    cur.1 += 1;
                }
            }
        }
        if let Some((p, n)) = last {
            out.push_str(&format!("{n}{p}"));
        }
        out
    }

    pub fn from_cigar(start: (usize, usize), cigar: &str) -> Result<Alignment, AlignmentError> {
        let mut steps = Vec::new();
        let mut n = String::new();
        for c in cigar.chars() {
            if c.is_ascii_digit() {
                n.push(c);
                continue;
            }
            let count: usize = n.parse().map_err(|_| AlignmentError::Cigar(cigar.into()))?;
            n.clear();
            let s = match c {
                '=' | 'X' | 'M' => Step::Diag,
                'D' => Step::Del,
                'I' => Step::Ins,
                _ => return Err(AlignmentError::Cigar(cigar.into())),
            };
            steps.extend(std::iter::repeat(s).take(count));
        }
        if !n.is_empty() {
            return Err(AlignmentError::Cigar(cigar.into()));
        }
        Ok(Alignment::from_steps(start, &steps))
    }
}

/// `normalize_check` as a free function.
pub fn normalize_check(w: &WeightFn) -> NormReport {
    w.normalize_check()
}

/// `alignment_cost` as a free function.
pub fn alignment_cost(
    x: &[Sym],
    y: &[Sym],
    a: &Alignment,
    w: &WeightFn,
) -> Result<Cost, AlignmentError> {
    a.cost(x, y, w)
}

/// Parses whitespace separated decimal symbol ids.
pub fn parse_symbols(text: &str) -> Result<Vec<Sym>, std::num::ParseIntError> {
    text.split_whitespace().map(str::parse).collect()
}

/// Maps bytes to ids `0..256`.
pub fn bytes_to_symbols(bytes: &[u8]) -> Vec<Sym> {
    bytes.iter().map(|&b| b as Sym).collect()
}

pub fn format_symbols(s: &[Sym]) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Vec<Sym> {
        text.bytes().map(|b| (b - b'a') as Sym).collect()
    }

    #[test]
    fn unit_weights_are_normalized() {
        let w = WeightFn::unit(4);
        assert!(w.normalize_check().normalized);
        assert!(w.is_symmetric());
    }

    #[test]
    fn half_weight_is_a_violation() {
        let mut sub = WeightFn::unit(2).sub.clone();
        sub[1] = Cost::new(1);
        let w = WeightFn::new(2, 2, sub, vec![Cost::new(2); 2], vec![Cost::new(2); 2]).unwrap();
        let r = w.normalize_check();
        assert!(!r.normalized);
        assert_eq!(r.violations, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn json_round_trip_keeps_infinity() {
        let text = r#"{"alphabet_size":2,"denominator":3,"sub":[[0,-1],[4,0]],"ins":[3,5],"del":[-1,3]}"#;
        let w = WeightFn::from_json(text).unwrap();
        assert!(w.sub(0, 1).is_inf());
        assert!(w.del(0).is_inf());
        assert_eq!(WeightFn::from_json(&w.to_json()).unwrap(), w);
    }

    #[test]
    fn expand_examples() {
        let a = Alignment::new(vec![(0, 0), (3, 3)]).unwrap();
        assert_eq!(a.expand(), vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        let b = Alignment::new(vec![(0, 0), (1, 0)]).unwrap();
        assert_eq!(b.expand(), vec![(0, 0), (1, 0)]);
        assert!(Alignment::new(vec![(0, 0), (2, 0)]).is_err());
    }

    #[test]
    fn cost_examples() {
        let w = WeightFn::unit(26);
        let x = s("ab");
        let a = Alignment::diagonal(0, 0, 2);
        assert_eq!(a.cost(&x, &x, &w).unwrap(), Cost::ZERO);
        let del = Alignment::new(vec![(0, 0), (2, 1)]).unwrap();
        assert_eq!(del.cost(&x, &s("b"), &w).unwrap(), Cost::new(1));
        assert_eq!(del.cigar(&x, &s("b")), "1D1=");
    }

    #[test]
    fn compose_example() {
        let a = Alignment::new(vec![(0, 0), (2, 1)]).unwrap();
        let b = Alignment::new(vec![(0, 0), (1, 1), (1, 2)]).unwrap();
        let c = a.compose(&b).unwrap();
        assert_eq!(c.steps(), vec![Step::Del, Step::Diag, Step::Ins]);
        let id = Alignment::diagonal(0, 0, 1);
        assert_eq!(a.compose(&id).unwrap().steps(), a.steps());
    }

    #[test]
    fn split_examples() {
        let a = Alignment::diagonal(0, 0, 4);
        let (l, r) = a.split_at((2, 2)).unwrap();
        assert_eq!(l, Alignment::diagonal(0, 0, 2));
        assert_eq!(r, Alignment::diagonal(2, 2, 2));
        let (l, r) = a.split_at((0, 0)).unwrap();
        assert_eq!(l, Alignment::point(0, 0));
        assert_eq!(r, a);
        assert!(a.split_at((1, 2)).is_err());
    }

    #[test]
    fn y_at_takes_lowest_point() {
        // (0,0) -> ins -> (0,1) -> diag -> (1,2) -> ins (1,3)
        let a = Alignment::new(vec![(0, 0), (1, 2), (1, 3)]).unwrap();
        assert_eq!(a.y_at(0), Some(0));
        assert_eq!(a.y_at(1), Some(2));
        let b = Alignment::new(vec![(0, 0), (2, 1), (4, 3)]).unwrap();
        assert_eq!(b.y_at(1), Some(0));
        assert_eq!(b.y_at(2), Some(1));
        assert_eq!(b.y_at(3), Some(2));
    }

    #[test]
    fn cigar_round_trip() {
        let x = s("abcd");
        let y = s("bxdd");
        let a = Alignment::new(vec![(0, 0), (2, 1), (3, 2), (3, 3), (4, 4)]).unwrap();
        let c = a.cigar(&x, &y);
        assert_eq!(c, "1D1=1X1I1=");
        let b = Alignment::from_cigar((0, 0), &c).unwrap();
        assert_eq!(b.expand(), a.expand());
    }
}
