//! The reflection group of type E_r acting on the Picard lattice, and
//! exhaustive lists of exceptional and conic classes.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface, MAX_POINTS};
use crate::search::{self, Order};

/// Default bound on orbit size.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// A class `ρ` with `ρ² = −2` and `K·ρ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Root(DivisorClass);

impl Root {
    pub fn new(s: &Surface, class: DivisorClass) -> Result<Self> {
        let self_int = s.self_intersection(&class)?;
        let k_degree = s.intersect(&s.canonical_class(), &class)?;
        if self_int != -2 || k_degree != 0 {
            return Err(Error::InvalidRoot {
                class: class.to_string(),
                self_int,
                k_degree,
            });
        }
        Ok(Self(class))
    }

    pub fn class(&self) -> &DivisorClass {
        &self.0
    }
}

/// `α − ε₁ − ε₂ − ε₃` (for `r ≥ 3`) followed by the `r − 1` differences of
/// consecutive exceptional classes, written `(0; …, 1, −1, …)`.
pub fn simple_roots(s: &Surface) -> Vec<Root> {
    let r = s.r();
    let mut roots = Vec::with_capacity(r);
    if r >= 3 {
        let mut m = [0; MAX_POINTS];
        m[..3].fill(1);
        roots.push(Root(DivisorClass::from_parts(1, &m[..r])));
    }
    for i in 0..r.saturating_sub(1) {
        let mut m = [0; MAX_POINTS];
        m[i] = 1;
        m[i + 1] = -1;
        roots.push(Root(DivisorClass::from_parts(0, &m[..r])));
    }
    roots
}

/// `s_ρ(β) = β + (β·ρ)ρ`.
pub fn reflect(s: &Surface, root: &Root, beta: &DivisorClass) -> Result<DivisorClass> {
    let k = s.intersect(beta, root.class())?;
    beta.add_scaled(k, root.class())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitResult {
    /// Orbit members in lexicographic order.
    pub representatives: Vec<DivisorClass>,
    pub size: usize,
    pub generator_count: usize,
}

/// Breadth-first closure of `seed` under the simple reflections.
pub fn orbit(s: &Surface, seed: &DivisorClass, cap: usize) -> Result<OrbitResult> {
    let roots = simple_roots(s);
    s.intersect(seed, seed)?;
    let mut seen = HashSet::from([*seed]);
    let mut queue = VecDeque::from([*seed]);
    while let Some(current) = queue.pop_front() {
        for root in &roots {
            let image = reflect(s, root, &current)?;
            if seen.insert(image) {
                if seen.len() > cap {
                    return Err(Error::OrbitCap {
                        cap,
                        count: seen.len(),
                    });
                }
                queue.push_back(image);
            }
        }
    }
    let mut representatives: Vec<_> = seen.into_iter().collect();
    representatives.sort_unstable();
    Ok(OrbitResult {
        size: representatives.len(),
        representatives,
        generator_count: roots.len(),
    })
}

/// All classes with `E² = −1` and `−K·E = 1`, by exhaustive search over
/// `d, mᵢ ∈ [−3, 8]`.
pub fn enumerate_minus_one_classes(s: &Surface) -> Vec<DivisorClass> {
    search::solve(s, -1, 1, -3..=8, |_| -3..=8, Order::All)
}

/// Cached copy of [`enumerate_minus_one_classes`].
pub fn minus_one_classes(s: &Surface) -> &'static [DivisorClass] {
    static CACHE: [OnceLock<Vec<DivisorClass>>; MAX_POINTS] = [const { OnceLock::new() }; MAX_POINTS];
    CACHE[s.r() - 1].get_or_init(|| enumerate_minus_one_classes(s))
}

/// All classes with `β² = 0` and `−K·β = 2`.
pub fn enumerate_conic_classes(s: &Surface) -> Vec<DivisorClass> {
    // |mᵢ| ≤ sqrt(Σ mⱼ²) = |d|, and d is pinned by Cauchy–Schwarz.
    let Some(degrees) = search::degree_window(s.r(), 0, 2, 2) else {
        return Vec::new();
    };
    search::solve(s, 0, 2, degrees, |d| -d.abs()..=d.abs(), Order::All)
}
