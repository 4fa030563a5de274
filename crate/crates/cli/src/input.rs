use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use wedit::types::{format_symbols, parse_symbols};
use wedit::{Sym, WeightFn};

/// Reads a string file: whitespace-separated symbol indices.
pub fn read_string(path: &Path) -> Result<Vec<Sym>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_string(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_string(text: &str) -> Result<Vec<Sym>> {
    parse_symbols(text).context("bad symbol")
}

pub fn format_string(s: &[Sym]) -> String {
    let mut out = format_symbols(s);
    out.push('\n');
    out
}

pub fn read_weights(path: &Path) -> Result<WeightFn> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    WeightFn::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn check_symbols(s: &[Sym], w: &WeightFn, name: &str) -> Result<()> {
    if let Some(&c) = s.iter().find(|&&c| c as usize >= w.alphabet_size()) {
        bail!("{name} uses symbol {c} outside the alphabet of size {}", w.alphabet_size());
    }
    Ok(())
}

/// Parses `1,2,3` or `2^18,2^20`.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    let items: Result<Vec<u64>> = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let t = t.trim();
            match t.split_once('^') {
                Some((b, e)) => {
                    let (b, e): (u64, u32) = (b.parse()?, e.parse()?);
                    b.checked_pow(e).context("overflow")
                }
                None => Ok(t.parse()?),
            }
            .with_context(|| format!("bad list item {t:?}"))
        })
        .collect();
    let items = items?;
    if items.is_empty() {
        bail!("empty list");
    }
    Ok(items)
}
