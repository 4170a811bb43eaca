//! Regenerates the classification table of smooth rational classes, grouped by
//! self-intersection, with recurring classes folded into families that are
//! affine in a parameter `t ≥ 0`.
//!
//! Families are discovered, not hard-coded: for `β² = b + 2t` (`b` = 1 or 2)
//! every pair of permutation representatives at `t = 1` and `t = 2` proposes
//! the line through them, and the proposal is kept iff it lands on an
//! enumerated representative at every `t` in `0..=horizon`. Whatever a family
//! does not cover is reported as a standalone row.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::classify::{enumerate_by_self_intersection, Coverage};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface};
use crate::moduli::dim_mor;

/// Default `t` horizon.
pub const DEFAULT_T_MAX: i64 = 5;

/// Families are fitted on at least `0..=MIN_FIT_HORIZON` even when fewer rows
/// are printed; several families collide at `t = 0`.
const MIN_FIT_HORIZON: i64 = 3;

/// `constant + slope·t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Affine {
    pub constant: i64,
    pub slope: i64,
}

impl Affine {
    pub const fn new(constant: i64, slope: i64) -> Self {
        Self { constant, slope }
    }

    pub const fn fixed(constant: i64) -> Self {
        Self::new(constant, 0)
    }

    pub fn at(&self, t: i64) -> i64 {
        self.constant + self.slope * t
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Self { constant, slope } = *self;
        let term = match slope.abs() {
            0 => return write!(f, "{constant}"),
            1 => "t".to_string(),
            k => format!("{k}t"),
        };
        match (constant, slope < 0) {
            (0, false) => write!(f, "{term}"),
            (0, true) => write!(f, "-{term}"),
            (c, false) => write!(f, "{c}+{term}"),
            (c, true) => write!(f, "{c}-{term}"),
        }
    }
}

/// One row of the table: a class whose degree and multiplicities are affine in
/// `t`, together with `β²(t)` and `dim M_β(t)`. Standalone rows have zero slopes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub self_int: Affine,
    pub degree: Affine,
    pub multiplicities: Vec<Affine>,
    pub dim: Affine,
}

impl TableRow {
    pub fn is_family(&self) -> bool {
        self.degree.slope != 0 || self.multiplicities.iter().any(|a| a.slope != 0)
    }

    pub fn instantiate(&self, t: i64) -> DivisorClass {
        let m: Vec<i64> = self.multiplicities.iter().map(|a| a.at(t)).collect();
        DivisorClass::from_parts(self.degree.at(t), &m)
    }

    fn sort_key(&self) -> (i64, Vec<Affine>, i64) {
        (self.degree.constant, self.multiplicities.clone(), self.degree.slope)
    }
}

/// Rows sharing one `β²` form (and therefore one `dim M_β` form).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableBlock {
    pub self_int: Affine,
    pub dim: Affine,
    pub rows: Vec<TableRow>,
}

/// An instantiated row: a single class with its invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub self_int: i64,
    pub class: DivisorClass,
    pub dim_mor: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub r: usize,
    pub t_max: i64,
    pub blocks: Vec<TableBlock>,
}

impl Table {
    pub fn families(&self) -> impl Iterator<Item = &TableRow> {
        self.rows().filter(|row| row.is_family())
    }

    pub fn standalone(&self) -> impl Iterator<Item = &TableRow> {
        self.rows().filter(|row| !row.is_family())
    }

    pub fn rows(&self) -> impl Iterator<Item = &TableRow> {
        self.blocks.iter().flat_map(|b| b.rows.iter())
    }

    /// Every row instantiated at each `t` in `0..=t_max`, deduplicated,
    /// sorted by `(β², d, multiplicities)`.
    pub fn instances(&self) -> Vec<Instance> {
        let mut seen = BTreeSet::new();
        for row in self.rows() {
            let ts = if row.is_family() { 0..=self.t_max } else { 0..=0 };
            for t in ts {
                seen.insert(Instance {
                    self_int: row.self_int.at(t),
                    class: row.instantiate(t),
                    dim_mor: row.dim.at(t),
                });
            }
        }
        seen.into_iter().collect()
    }

    /// Four-column markdown table with symbolic `t` forms.
    pub fn to_markdown(&self) -> String {
        let mut out = format!("| β² | d | (m1, ..., m{}) | dim M_β |\n|---|---|---|---|\n", self.r);
        for block in &self.blocks {
            for row in &block.rows {
                let tuple: Vec<String> = row.multiplicities.iter().map(Affine::to_string).collect();
                out.push_str(&format!(
                    "| {} | {} | ({}) | {} |\n",
                    block.self_int,
                    row.degree,
                    tuple.join(","),
                    block.dim
                ));
            }
        }
        out
    }

    /// Instantiated rows as CSV with header `self_int,degree,m1,...,mr,dim_mor`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("self_int,degree");
        for i in 1..=self.r {
            out.push_str(&format!(",m{i}"));
        }
        out.push_str(",dim_mor\n");
        for inst in self.instances() {
            out.push_str(&format!("{},{}", inst.self_int, inst.class.degree()));
            for m in inst.class.multiplicities() {
                out.push_str(&format!(",{m}"));
            }
            out.push_str(&format!(",{}\n", inst.dim_mor));
        }
        out
    }
}

/// Builds the table for `t` in `0..=t_max` (`t_max ≥ 1`).
pub fn generate_table(s: &Surface, t_max: i64) -> Result<Table> {
    if t_max < 1 {
        return Err(Error::TableHorizon(t_max));
    }
    Coverage::Validated.check(s)?;
    let horizon = t_max.max(MIN_FIT_HORIZON);

    let mut blocks = Vec::new();
    for n in [-1, 0] {
        let rows = standalone_rows(s, n, enumerate_by_self_intersection(s, n)?)?;
        blocks.push(block_for(Affine::fixed(n), rows));
    }

    let mut leftovers = Vec::new();
    for base in [1, 2] {
        let sets: Vec<BTreeSet<DivisorClass>> = (0..=horizon)
            .map(|t| Ok(enumerate_by_self_intersection(s, base + 2 * t)?.into_iter().collect()))
            .collect::<Result<_>>()?;
        let families = fit_families(s, base, &sets, horizon)?;
        for (t, set) in sets.iter().enumerate().take(t_max as usize + 1) {
            let covered: BTreeSet<_> = families.iter().map(|f| f.instantiate(t as i64)).collect();
            leftovers.extend(set.difference(&covered).map(|c| (base + 2 * t as i64, *c)));
        }
        blocks.push(block_for(Affine::new(base, 2), families));
    }

    // Anything no family accounts for, grouped by β².
    let mut by_square: Vec<i64> = leftovers.iter().map(|(n, _)| *n).collect();
    by_square.sort_unstable();
    by_square.dedup();
    for n in by_square {
        let classes = leftovers.iter().filter(|(m, _)| *m == n).map(|(_, c)| *c).collect();
        blocks.push(block_for(Affine::fixed(n), standalone_rows(s, n, classes)?));
    }

    blocks.retain(|b| !b.rows.is_empty());
    Ok(Table {
        r: s.r(),
        t_max,
        blocks,
    })
}

fn block_for(self_int: Affine, mut rows: Vec<TableRow>) -> TableBlock {
    rows.sort_by_key(TableRow::sort_key);
    let dim = rows.first().map(|r| r.dim).unwrap_or(Affine::fixed(0));
    debug_assert!(rows.iter().all(|r| r.dim == dim && r.self_int == self_int));
    TableBlock { self_int, dim, rows }
}

fn standalone_rows(s: &Surface, n: i64, classes: Vec<DivisorClass>) -> Result<Vec<TableRow>> {
    classes
        .into_iter()
        .map(|c| {
            Ok(TableRow {
                self_int: Affine::fixed(n),
                degree: Affine::fixed(c.degree()),
                multiplicities: c.multiplicities().iter().map(|&m| Affine::fixed(m)).collect(),
                dim: Affine::fixed(dim_mor(s, &c)?),
            })
        })
        .collect()
}

fn fit_families(s: &Surface, base: i64, sets: &[BTreeSet<DivisorClass>], horizon: i64) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for first in &sets[1] {
        for second in &sets[2] {
            let step = second.add_scaled(-1, first)?;
            let start = first.add_scaled(-1, &step)?;
            let on_line = (0..=horizon).all(|t| {
                start
                    .add_scaled(t, &step)
                    .is_ok_and(|c| sets[t as usize].contains(&c))
            });
            if !on_line {
                continue;
            }
            let dim0 = dim_mor(s, &start)?;
            let dim1 = dim_mor(s, first)?;
            let dim = Affine::new(dim0, dim1 - dim0);
            let mut consistent = true;
            for t in 0..=horizon {
                consistent &= dim_mor(s, &start.add_scaled(t, &step)?)? == dim.at(t);
            }
            if !consistent {
                continue;
            }
            rows.push(TableRow {
                self_int: Affine::new(base, 2),
                degree: Affine::new(start.degree(), step.degree()),
                multiplicities: start
                    .multiplicities()
                    .iter()
                    .zip(step.multiplicities())
                    .map(|(&c, &k)| Affine::new(c, k))
                    .collect(),
                dim,
            });
        }
    }
    Ok(rows)
}
