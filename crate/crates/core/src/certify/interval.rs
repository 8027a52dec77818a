//! Exact interval algebra for the cone-angle parameter.
//!
//! Every constraint the certifier meets is affine in the scaling parameter
//! `delta`, so its solution set is a closed half-line (or everything, or
//! nothing).  Feasible sets are therefore intersections of half-lines with
//! the ambient window `[1, delta_sup)` — always an interval.  This module
//! keeps the endpoint bookkeeping (open versus closed) exact.

use crate::rational::format_rational;
use num::rational::BigRational;
use num::Signed;
use std::fmt;

/// A nonempty rational interval; `hi = None` means unbounded above.
///
/// Emptiness is ruled out at construction: [`DeltaInterval::new`] returns
/// `None` for an empty endpoint configuration, so a held value is always a
/// nonempty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaInterval {
    lo: BigRational,
    lo_closed: bool,
    hi: Option<BigRational>,
    hi_closed: bool,
}

impl DeltaInterval {
    /// Builds an interval, returning `None` when the endpoints describe the
    /// empty set (`lo > hi`, or `lo = hi` without both endpoints closed).
    pub fn new(
        lo: BigRational,
        lo_closed: bool,
        hi: Option<BigRational>,
        hi_closed: bool,
    ) -> Option<Self> {
        if let Some(ref h) = hi {
            if lo > *h || (lo == *h && !(lo_closed && hi_closed)) {
                return None;
            }
        }
        Some(Self {
            lo,
            lo_closed,
            hi,
            hi_closed,
        })
    }

    /// `[lo, +inf)`.
    pub fn at_least(lo: BigRational) -> Self {
        Self {
            lo,
            lo_closed: true,
            hi: None,
            hi_closed: false,
        }
    }

    /// `[lo, hi)`; `None` if empty.
    pub fn half_open(lo: BigRational, hi: BigRational) -> Option<Self> {
        Self::new(lo, true, Some(hi), false)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi(&self) -> Option<&BigRational> {
        self.hi.as_ref()
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let above = if self.lo_closed {
            *x >= self.lo
        } else {
            *x > self.lo
        };
        let below = match &self.hi {
            None => true,
            Some(h) => {
                if self.hi_closed {
                    *x <= *h
                } else {
                    *x < *h
                }
            }
        };
        above && below
    }

    /// Exact intersection; `None` when the sets are disjoint.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let (lo, lo_closed) = if self.lo > other.lo {
            (self.lo.clone(), self.lo_closed)
        } else if other.lo > self.lo {
            (other.lo.clone(), other.lo_closed)
        } else {
            (self.lo.clone(), self.lo_closed && other.lo_closed)
        };
        let (hi, hi_closed) = match (&self.hi, &other.hi) {
            (None, None) => (None, false),
            (Some(h), None) => (Some(h.clone()), self.hi_closed),
            (None, Some(h)) => (Some(h.clone()), other.hi_closed),
            (Some(a), Some(b)) => {
                if a < b {
                    (Some(a.clone()), self.hi_closed)
                } else if b < a {
                    (Some(b.clone()), other.hi_closed)
                } else {
                    (Some(a.clone()), self.hi_closed && other.hi_closed)
                }
            }
        };
        Self::new(lo, lo_closed, hi, hi_closed)
    }
}

impl fmt::Display for DeltaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left = if self.lo_closed { '[' } else { '(' };
        match &self.hi {
            None => write!(f, "{}{}, inf)", left, format_rational(&self.lo)),
            Some(h) => {
                let right = if self.hi_closed { ']' } else { ')' };
                write!(
                    f,
                    "{}{}, {}{}",
                    left,
                    format_rational(&self.lo),
                    format_rational(h),
                    right
                )
            }
        }
    }
}

/// Solution set of `a + b·delta >= 0` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HalfLine {
    /// `b = 0, a >= 0`: every delta works.
    All,
    /// `b = 0, a < 0`: no delta works.
    Empty,
    /// `b > 0`: `delta >= -a/b` (closed).
    AtLeast(BigRational),
    /// `b < 0`: `delta <= -a/b` (closed).
    AtMost(BigRational),
}

/// Solves `a + b·delta >= 0` exactly.
pub fn solve_affine_nonneg(a: &BigRational, b: &BigRational) -> HalfLine {
    use num::Zero;
    if b.is_zero() {
        if a.is_negative() {
            HalfLine::Empty
        } else {
            HalfLine::All
        }
    } else {
        let bound = -a / b;
        if b.is_positive() {
            HalfLine::AtLeast(bound)
        } else {
            HalfLine::AtMost(bound)
        }
    }
}

/// Intersects an interval with a half-line; `None` when disjoint.
pub fn clip(interval: &DeltaInterval, half: &HalfLine) -> Option<DeltaInterval> {
    match half {
        HalfLine::All => Some(interval.clone()),
        HalfLine::Empty => None,
        HalfLine::AtLeast(lo) => interval.intersect(&DeltaInterval::at_least(lo.clone())),
        HalfLine::AtMost(hi) => interval.intersect(&DeltaInterval {
            lo: interval.lo.clone(),
            lo_closed: interval.lo_closed,
            hi: Some(hi.clone()),
            hi_closed: true,
        }),
    }
}
