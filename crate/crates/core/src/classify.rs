//! Deciding which classes contain a smooth irreducible rational curve.
//!
//! The rule: `β` qualifies iff it is a (−1)-class, or it is non-zero with
//! `p_a(β) = 0`, `β² ≥ 0` and `β·E ≥ 0` for every (−1)-class `E`.
//! It has been checked against the published list for the cubic surface; for
//! `r = 8` it has no reference list and must be requested explicitly.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface};
use crate::search::{self, Order};
use crate::weyl;

/// Which surfaces the classifier agrees to answer for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coverage {
    /// `1 <= r <= 7` only.
    #[default]
    Validated,
    /// Also answer for `r = 8`.
    AllowUnvalidated,
}

impl Coverage {
    pub(crate) fn check(self, s: &Surface) -> Result<()> {
        if s.r() == 8 && self == Coverage::Validated {
            Err(Error::UnvalidatedRange)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    MinusOneClass,
    GenusNonzero,
    NegativeOnExceptional,
    NotEffectiveFamily,
    PassesAllChecks,
    ZeroClass,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::MinusOneClass => "minus-one-class",
            Reason::GenusNonzero => "genus-nonzero",
            Reason::NegativeOnExceptional => "negative-on-exceptional",
            Reason::NotEffectiveFamily => "not-effective-family",
            Reason::PassesAllChecks => "passes-all-checks",
            Reason::ZeroClass => "zero-class",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub smooth_rational: bool,
    pub reason: Reason,
}

impl Verdict {
    fn yes(reason: Reason) -> Self {
        Self {
            smooth_rational: true,
            reason,
        }
    }

    fn no(reason: Reason) -> Self {
        Self {
            smooth_rational: false,
            reason,
        }
    }
}

pub fn has_smooth_rational_representative(s: &Surface, beta: &DivisorClass) -> Result<Verdict> {
    verdict(s, beta, Coverage::Validated)
}

pub fn verdict(s: &Surface, beta: &DivisorClass, coverage: Coverage) -> Result<Verdict> {
    coverage.check(s)?;
    let self_int = s.self_intersection(beta)?;
    if beta.is_zero() {
        return Ok(Verdict::no(Reason::ZeroClass));
    }
    if self_int == -1 && s.anticanonical_degree(beta)? == 1 {
        return Ok(Verdict::yes(Reason::MinusOneClass));
    }
    if s.arithmetic_genus(beta)? != 0 {
        return Ok(Verdict::no(Reason::GenusNonzero));
    }
    for e in weyl::minus_one_classes(s) {
        if s.intersect(beta, e)? < 0 {
            return Ok(Verdict::no(Reason::NegativeOnExceptional));
        }
    }
    if self_int < 0 {
        return Ok(Verdict::no(Reason::NotEffectiveFamily));
    }
    Ok(Verdict::yes(Reason::PassesAllChecks))
}

/// Margin added to the Cauchy–Schwarz degree window.
const DEGREE_MARGIN: i64 = 2;

/// Permutation representatives (non-increasing multiplicities) of every class
/// with `β² = target` that passes the classifier, sorted by `(d, tuple)`.
pub fn enumerate_by_self_intersection(s: &Surface, target: i64) -> Result<Vec<DivisorClass>> {
    enumerate_with(s, target, Coverage::Validated)
}

pub fn enumerate_with(s: &Surface, target: i64, coverage: Coverage) -> Result<Vec<DivisorClass>> {
    coverage.check(s)?;
    if target < -1 {
        return Ok(Vec::new());
    }
    let mut out: Vec<DivisorClass> = if target == -1 {
        // Only (−1)-classes qualify with negative square.
        weyl::minus_one_classes(s).iter().map(DivisorClass::sorted).collect()
    } else {
        // Any other qualifying class meets each εᵢ non-negatively, so mᵢ ≥ 0;
        // p_a = 0 then fixes −K·β = β² + 2.
        let anticanonical = target + 2;
        let Some(degrees) = search::degree_window(s.r(), target, anticanonical, DEGREE_MARGIN) else {
            return Ok(Vec::new());
        };
        let degrees = (*degrees.start()).max(0)..=*degrees.end();
        let candidates = search::solve(s, target, anticanonical, degrees, |d| 0..=d.max(0), Order::NonIncreasing);
        let mut keep = Vec::with_capacity(candidates.len());
        for c in candidates {
            if verdict(s, &c, coverage)?.smooth_rational {
                keep.push(c);
            }
        }
        keep
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
