use std::cmp::Ordering;

use super::DualVec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TropicalMode {
    Min,
    Max,
}

/// Lexicographic comparison of finite points: `u` first, then `v`.
fn lex_cmp(w1: &DualVec, w2: &DualVec) -> Result<Ordering> {
    let (u1, v1) = w1.coords().ok_or(Error::IdealPoint)?;
    let (u2, v2) = w2.coords().ok_or(Error::IdealPoint)?;
    Ok(u1.approx_cmp(u2).then_with(|| v1.approx_cmp(v2)))
}

pub(super) fn add_tropical(w1: &DualVec, w2: &DualVec, mode: TropicalMode) -> Result<DualVec> {
    w1.check_tag(w2)?;
    let ord = lex_cmp(w1, w2)?;
    let first = match mode {
        TropicalMode::Min => ord != Ordering::Greater,
        TropicalMode::Max => ord != Ordering::Less,
    };
    Ok(if first { w1.clone() } else { w2.clone() })
}
