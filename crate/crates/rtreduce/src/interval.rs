//! Exact rational intervals with per-end openness.

use crate::rat::{self, Rat};
use std::fmt;

/// A subinterval of the parameter line with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            rat::format_rat(&self.lo),
            rat::format_rat(&self.hi),
            if self.hi_open { ')' } else { ']' },
        )
    }
}

impl Interval {
    pub fn closed(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    pub fn open(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo < hi);
        Interval {
            lo,
            hi,
            lo_open: true,
            hi_open: true,
        }
    }

    pub fn new(lo: Rat, hi: Rat, lo_open: bool, hi_open: bool) -> Self {
        debug_assert!(if lo_open || hi_open { lo < hi } else { lo <= hi });
        Interval {
            lo,
            hi,
            lo_open,
            hi_open,
        }
    }

    pub fn unit() -> Self {
        Interval::closed(rat::zero(), rat::one())
    }

    pub fn length(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        rat::midpoint(&self.lo, &self.hi)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &Rat) -> bool {
        let lo_ok = if self.lo_open {
            *t > self.lo
        } else {
            *t >= self.lo
        };
        let hi_ok = if self.hi_open {
            *t < self.hi
        } else {
            *t <= self.hi
        };
        lo_ok && hi_ok
    }

    /// Exact set containment `self ⊆ other`, honoring openness flags.
    pub fn contained_in(&self, other: &Interval) -> bool {
        let lo_ok = match (other.lo_open, self.lo_open) {
            (true, true) => self.lo >= other.lo,
            (true, false) => self.lo > other.lo,
            (false, _) => self.lo >= other.lo,
        };
        let hi_ok = match (other.hi_open, self.hi_open) {
            (true, true) => self.hi <= other.hi,
            (true, false) => self.hi < other.hi,
            (false, _) => self.hi <= other.hi,
        };
        lo_ok && hi_ok
    }

    pub fn closure(&self) -> Interval {
        Interval::closed(self.lo.clone(), self.hi.clone())
    }

    pub fn interior(&self) -> Option<Interval> {
        if self.lo < self.hi {
            Some(Interval::open(self.lo.clone(), self.hi.clone()))
        } else {
            None
        }
    }

    /// Exact intersection; `None` when the intersection is empty.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_open) = if self.lo > other.lo {
            (self.lo.clone(), self.lo_open)
        } else if other.lo > self.lo {
            (other.lo.clone(), other.lo_open)
        } else {
            (self.lo.clone(), self.lo_open || other.lo_open)
        };
        let (hi, hi_open) = if self.hi < other.hi {
            (self.hi.clone(), self.hi_open)
        } else if other.hi < self.hi {
            (other.hi.clone(), other.hi_open)
        } else {
            (self.hi.clone(), self.hi_open || other.hi_open)
        };
        if lo > hi || (lo == hi && (lo_open || hi_open)) {
            None
        } else {
            Some(Interval::new(lo, hi, lo_open, hi_open))
        }
    }

    /// True when the closures of the two intervals are disjoint.
    pub fn closure_disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}
