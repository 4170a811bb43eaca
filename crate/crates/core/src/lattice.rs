//! Exact arithmetic on the Picard lattice of the plane blown up at `r` points.
//!
//! A class is written `β = dα − Σ mᵢεᵢ`, where `α` is the pullback of a line and
//! `εᵢ` is the i-th exceptional class. The intersection form is
//! `diag(1, −1, …, −1)` in the basis `(α, ε₁, …, ε_r)`, so in the stored
//! coordinates `(d; m₁, …, m_r)` the pairing reads `a·b = d_a d_b − Σ m_{a,i} m_{b,i}`.
//! The multiplicities are stored exactly as written in tables of plane curves,
//! i.e. the lattice vector of `(d; m)` is `(d, −m₁, …, −m_r)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest number of blown-up points handled (the del Pezzo range).
pub const MAX_POINTS: usize = 8;

/// The plane blown up at `r` points in general position, `1 <= r <= 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surface {
    r: usize,
}

impl Surface {
    pub fn new(r: i64) -> Result<Self> {
        if (1..=MAX_POINTS as i64).contains(&r) {
            Ok(Self { r: r as usize })
        } else {
            Err(Error::UnsupportedSurface(r))
        }
    }

    /// The smooth cubic surface in projective 3-space.
    pub fn cubic() -> Self {
        Self { r: 6 }
    }

    /// Number of blown-up points.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Degree `K² = 9 − r`.
    pub fn degree(&self) -> i64 {
        9 - self.r as i64
    }

    pub fn class(&self, d: i64, m: &[i64]) -> Result<DivisorClass> {
        self.check_len(m.len())?;
        Ok(DivisorClass::from_parts(d, m))
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass::from_parts(0, &[0; MAX_POINTS][..self.r])
    }

    /// `α`, the pullback of a line.
    pub fn hyperplane(&self) -> DivisorClass {
        DivisorClass::from_parts(1, &[0; MAX_POINTS][..self.r])
    }

    /// `εᵢ` for `i` in `0..r` (zero-based). Its multiplicity entry is `−1`.
    pub fn exceptional(&self, i: usize) -> DivisorClass {
        assert!(i < self.r, "exceptional index {i} out of range for r = {}", self.r);
        let mut m = [0; MAX_POINTS];
        m[i] = -1;
        DivisorClass::from_parts(0, &m[..self.r])
    }

    /// `K = −3α + Σ εᵢ`, i.e. `(−3; −1, …, −1)`.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::from_parts(-3, &[-1; MAX_POINTS][..self.r])
    }

    /// The symmetric bilinear pairing `a·b`.
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        self.check(a)?;
        self.check(b)?;
        // Padding entries are zero, so the full array can be summed.
        // Nine i64 products cannot overflow i128; check the range once at the end.
        let mut acc = i128::from(a.d) * i128::from(b.d);
        for i in 0..MAX_POINTS {
            acc -= i128::from(a.m[i]) * i128::from(b.m[i]);
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }

    pub fn self_intersection(&self, beta: &DivisorClass) -> Result<i64> {
        self.intersect(beta, beta)
    }

    /// `−K·β = 3d − Σ mᵢ`.
    pub fn anticanonical_degree(&self, beta: &DivisorClass) -> Result<i64> {
        self.check(beta)?;
        let mut acc = 3 * i128::from(beta.d);
        for x in beta.m {
            acc -= i128::from(x);
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }

    /// Arithmetic genus from adjunction, `p_a = (β² + K·β)/2 + 1`.
    pub fn arithmetic_genus(&self, beta: &DivisorClass) -> Result<i64> {
        let sq = self.self_intersection(beta)?;
        let sum = sq.checked_sub(self.anticanonical_degree(beta)?).ok_or(Error::Overflow)?;
        if sum % 2 != 0 {
            return Err(Error::Parity(beta.to_string()));
        }
        Ok(sum / 2 + 1)
    }

    /// Parses `"d;m1,m2,...,mr"`. A single space may follow each comma; no
    /// other whitespace is accepted.
    pub fn parse_class(&self, text: &str) -> Result<DivisorClass> {
        if text.is_empty() {
            return Err(parse_error("", "empty class text"));
        }
        let (d_text, m_text) = text
            .split_once(';')
            .ok_or_else(|| parse_error(text, "expected `d;m1,...,mr`"))?;
        let d = parse_int(d_text)?;
        let mut m = Vec::with_capacity(self.r);
        for (i, token) in m_text.split(',').enumerate() {
            let token = if i > 0 { token.trim_start_matches(' ') } else { token };
            m.push(parse_int(token)?);
        }
        if m.len() != self.r {
            return Err(parse_error(
                m_text,
                &format!("expected {} multiplicities, found {}", self.r, m.len()),
            ));
        }
        Ok(DivisorClass::from_parts(d, &m))
    }

    fn check(&self, beta: &DivisorClass) -> Result<()> {
        self.check_len(beta.r())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.r {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.r,
                found: len,
            })
        }
    }
}

fn parse_error(token: &str, reason: &str) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_int(token: &str) -> Result<i64> {
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(token, "not an integer"));
    }
    token
        .parse()
        .map_err(|_| parse_error(token, "integer out of range"))
}

/// A divisor class `(d; m₁, …, m_r)` meaning `dα − Σ mᵢεᵢ`.
///
/// Ordering is lexicographic on `(r, d, m₁, …, m_r)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    r: u8,
    d: i64,
    m: [i64; MAX_POINTS],
}

impl DivisorClass {
    /// Builds a class with `1..=8` multiplicities. Prefer [`Surface::class`],
    /// which also checks the length against a surface.
    pub fn new(d: i64, m: &[i64]) -> Result<Self> {
        if m.is_empty() || m.len() > MAX_POINTS {
            return Err(Error::UnsupportedSurface(m.len() as i64));
        }
        Ok(Self::from_parts(d, m))
    }

    pub(crate) fn from_parts(d: i64, m: &[i64]) -> Self {
        debug_assert!(m.len() <= MAX_POINTS);
        let mut buf = [0; MAX_POINTS];
        buf[..m.len()].copy_from_slice(m);
        Self {
            r: m.len() as u8,
            d,
            m: buf,
        }
    }

    pub fn r(&self) -> usize {
        self.r as usize
    }

    /// Coefficient of `α`.
    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.m[..self.r()]
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.multiplicities().iter().all(|&x| x == 0)
    }

    /// The permutation representative: multiplicities ordered by decreasing
    /// absolute value, larger value first on ties. For non-negative tuples this
    /// is plain non-increasing order; `(0;0,…,0,−1)` becomes `(0;−1,0,…,0)`.
    pub fn sorted(&self) -> Self {
        let mut out = *self;
        out.m[..self.r()].sort_unstable_by(|a, b| b.abs().cmp(&a.abs()).then(b.cmp(a)));
        out
    }

    /// Applies a permutation of the points: entry `i` of the result is entry
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.r(), "permutation length mismatch");
        let mut out = *self;
        for (slot, &src) in perm.iter().enumerate() {
            out.m[slot] = self.m[src];
        }
        out
    }

    /// `self + k·other`, checked.
    pub fn add_scaled(&self, k: i64, other: &Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::DimensionMismatch {
                expected: self.r(),
                found: other.r(),
            });
        }
        // Accumulate overflow flags instead of branching per entry; padding
        // entries stay zero.
        let mut overflow = false;
        let mut step = |x: i64, y: i64| {
            let (p, o1) = y.overflowing_mul(k);
            let (v, o2) = x.overflowing_add(p);
            overflow |= o1 | o2;
            v
        };
        let mut out = *self;
        out.d = step(self.d, other.d);
        for i in 0..MAX_POINTS {
            out.m[i] = step(self.m[i], other.m[i]);
        }
        if overflow {
            Err(Error::Overflow)
        } else {
            Ok(out)
        }
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let zero = Self::from_parts(0, &[0; MAX_POINTS][..self.r()]);
        zero.add_scaled(k, self)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.d)?;
        for (i, x) in self.multiplicities().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
