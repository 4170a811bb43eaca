//! Dimensions of `|β|` and of the space of maps `P¹ → X` with image class `β`,
//! for classes containing a smooth rational curve.
//!
//! Such a space is irreducible; its dimension is `3` when `β² < 0` (the
//! linear system is a single point and only `Aut(P¹)` moves the map) and
//! `−K·β + 2` when `β² ≥ 0`. In the second case `dim|β| = β² + 1 = −K·β − 1`
//! and the map space fibres over an open part of `|β|` with 3-dimensional
//! fibres.

use serde::Serialize;

use crate::classify::{verdict, Coverage, Reason};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface};

/// Dimension of the automorphism group of the projective line.
pub const AUT_P1_DIM: i64 = 3;

fn require_smooth_rational(s: &Surface, beta: &DivisorClass, coverage: Coverage) -> Result<i64> {
    if !verdict(s, beta, coverage)?.smooth_rational {
        return Err(Error::NotSmoothRational(beta.to_string()));
    }
    s.self_intersection(beta)
}

/// `dim|β|` for a class with a smooth rational member; `0` when `β² < 0`.
pub fn dim_linear_system(s: &Surface, beta: &DivisorClass) -> Result<i64> {
    dim_linear_system_with(s, beta, Coverage::Validated)
}

pub fn dim_linear_system_with(s: &Surface, beta: &DivisorClass, coverage: Coverage) -> Result<i64> {
    let self_int = require_smooth_rational(s, beta, coverage)?;
    if self_int < 0 {
        return Ok(0);
    }
    let dim = self_int + 1;
    debug_assert_eq!(dim, s.anticanonical_degree(beta)? - 1);
    Ok(dim)
}

/// Dimension of the space of maps from `P¹` with image class `β`.
pub fn dim_mor(s: &Surface, beta: &DivisorClass) -> Result<i64> {
    dim_mor_with(s, beta, Coverage::Validated)
}

pub fn dim_mor_with(s: &Surface, beta: &DivisorClass, coverage: Coverage) -> Result<i64> {
    let self_int = require_smooth_rational(s, beta, coverage)?;
    if self_int < 0 {
        Ok(AUT_P1_DIM)
    } else {
        Ok(s.anticanonical_degree(beta)? + 2)
    }
}

/// Every numerical invariant of a class in one place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub beta: DivisorClass,
    pub self_int: i64,
    pub anticanonical_degree: i64,
    pub arithmetic_genus: i64,
    pub smooth_rational: bool,
    pub reason: Reason,
    /// `None` when the class has no smooth rational member.
    pub dim_linear_system: Option<i64>,
    pub dim_mor: Option<i64>,
}

pub fn report(s: &Surface, beta: &DivisorClass) -> Result<ClassReport> {
    report_with(s, beta, Coverage::Validated)
}

pub fn report_with(s: &Surface, beta: &DivisorClass, coverage: Coverage) -> Result<ClassReport> {
    let v = verdict(s, beta, coverage)?;
    let (dim_linear_system, dim_mor) = if v.smooth_rational {
        (
            Some(dim_linear_system_with(s, beta, coverage)?),
            Some(dim_mor_with(s, beta, coverage)?),
        )
    } else {
        (None, None)
    };
    Ok(ClassReport {
        beta: *beta,
        self_int: s.self_intersection(beta)?,
        anticanonical_degree: s.anticanonical_degree(beta)?,
        arithmetic_genus: s.arithmetic_genus(beta)?,
        smooth_rational: v.smooth_rational,
        reason: v.reason,
        dim_linear_system,
        dim_mor,
    })
}
