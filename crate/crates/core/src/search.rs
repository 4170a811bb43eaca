//! Exhaustive search for lattice classes with prescribed `β²` and `−K·β`.
//!
//! Fixing `β² = n` and `−K·β = k` pins both `Σ mᵢ = 3d − k` and
//! `Σ mᵢ² = d² − n`, so for each degree the multiplicities are integer points
//! on a sphere cut by a hyperplane. The search walks the coordinates one at a
//! time and prunes with Cauchy–Schwarz on the remaining slots.

use std::ops::RangeInclusive;

use crate::lattice::{DivisorClass, Surface, MAX_POINTS};

/// Which tuples to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// Every integer vector in the box.
    All,
    /// Only non-increasing tuples (one representative per permutation class).
    NonIncreasing,
}

/// Degree window from `(3d − k)² ≤ r(d² − n)`, widened by `margin` on both
/// sides. `None` when the quadratic has no real roots.
pub fn degree_window(r: usize, self_int: i64, anticanonical: i64, margin: i64) -> Option<RangeInclusive<i64>> {
    let a = (9 - r as i64) as f64;
    let k = anticanonical as f64;
    let b = -6.0 * k;
    let c = k * k + (r as i64 * self_int) as f64;
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    let lo = ((-b - root) / (2.0 * a)).floor() as i64 - margin;
    let hi = ((-b + root) / (2.0 * a)).ceil() as i64 + margin;
    Some(lo..=hi)
}

/// All classes with the given `β²` and `−K·β` whose degree lies in `degrees`
/// and whose multiplicities lie in `mult(d)`.
pub fn solve<F>(
    s: &Surface,
    self_int: i64,
    anticanonical: i64,
    degrees: RangeInclusive<i64>,
    mult: F,
    order: Order,
) -> Vec<DivisorClass>
where
    F: Fn(i64) -> RangeInclusive<i64>,
{
    let r = s.r();
    let mut out = Vec::new();
    for d in degrees {
        let sum = 3 * d - anticanonical;
        let sq = d * d - self_int;
        if sq < 0 {
            continue;
        }
        let range = mult(d);
        let mut walker = Walker {
            r,
            lo: *range.start(),
            hi: *range.end(),
            order,
            buf: [0; MAX_POINTS],
            d,
            out: &mut out,
        };
        walker.descend(0, sum, sq, *range.end());
    }
    out.sort_unstable();
    out
}

struct Walker<'a> {
    r: usize,
    lo: i64,
    hi: i64,
    order: Order,
    buf: [i64; MAX_POINTS],
    d: i64,
    out: &'a mut Vec<DivisorClass>,
}

impl Walker<'_> {
    fn descend(&mut self, pos: usize, sum: i64, sq: i64, cap: i64) {
        let left = (self.r - pos) as i64;
        if left == 0 {
            if sum == 0 && sq == 0 {
                self.out
                    .push(DivisorClass::from_parts(self.d, &self.buf[..self.r]));
            }
            return;
        }
        // Cauchy–Schwarz on the remaining slots.
        if sum * sum > left * sq {
            return;
        }
        let hi = match self.order {
            Order::All => self.hi,
            Order::NonIncreasing => self.hi.min(cap),
        };
        for v in self.lo..=hi {
            let rest_sq = sq - v * v;
            if rest_sq < 0 {
                continue;
            }
            let rest_sum = sum - v;
            let rest = left - 1;
            if rest == 0 && (rest_sum != 0 || rest_sq != 0) {
                continue;
            }
            if self.order == Order::NonIncreasing {
                // Remaining entries are each at most v and at least lo.
                if rest_sum > rest * v || rest_sum < rest * self.lo {
                    continue;
                }
            }
            self.buf[pos] = v;
            self.descend(pos + 1, rest_sum, rest_sq, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(s: &Surface, n: i64, k: i64, d: RangeInclusive<i64>, m: RangeInclusive<i64>) -> Vec<DivisorClass> {
        let r = s.r();
        let mut out = Vec::new();
        let width = (m.end() - m.start() + 1) as usize;
        for deg in d {
            let total = width.pow(r as u32);
            for code in 0..total {
                let mut c = code;
                let mut v = vec![0; r];
                for slot in v.iter_mut() {
                    *slot = *m.start() + (c % width) as i64;
                    c /= width;
                }
                let cls = s.class(deg, &v).unwrap();
                if s.self_intersection(&cls).unwrap() == n && s.anticanonical_degree(&cls).unwrap() == k {
                    out.push(cls);
                }
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn pruned_search_matches_naive_box() {
        for r in 1..=4 {
            let s = Surface::new(r).unwrap();
            for (n, k) in [(-1, 1), (0, 2), (1, 3), (-2, 0), (2, 4)] {
                let fast = solve(&s, n, k, -3..=6, |_| -3..=6, Order::All);
                let slow = naive(&s, n, k, -3..=6, -3..=6);
                assert_eq!(fast, slow, "r={r} n={n} k={k}");
            }
        }
    }

    #[test]
    fn non_increasing_is_sorted_subset() {
        let s = Surface::new(5).unwrap();
        let all = solve(&s, 1, 3, 0..=6, |d| 0..=d, Order::All);
        let reps = solve(&s, 1, 3, 0..=6, |d| 0..=d, Order::NonIncreasing);
        let mut sorted: Vec<_> = all.iter().map(|c| c.sorted()).collect();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(reps, sorted);
    }

    #[test]
    fn window_contains_known_classes() {
        // (5;2,2,2,2,2,2) has β² = 1, −K·β = 3 on the cubic surface.
        let w = degree_window(6, 1, 3, 0).unwrap();
        assert!(w.contains(&5));
        assert!(degree_window(6, 1, 3, 2).unwrap().contains(&7));
    }
}
