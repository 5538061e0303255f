//! Core windows: finite truncation of bi-infinite interval families.
//!
//! All staggering and insertion work happens inside a window `[u, v]` whose
//! complementary tails carry a certified image-diameter budget; the tails
//! then contribute at most twice the budget to any sup-distance bound.

use crate::interval::Interval;
use crate::metric::diameter_on;
use crate::path::{PathError, SymbolicPath};
use crate::rat::{self, Rat};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WindowError {
    #[error("endpoint budget must be positive")]
    BadBudget,
    #[error("no dyadic window of depth <= {depth} satisfies the budget {budget}")]
    Unrefinable { depth: u32, budget: f64 },
    #[error("paths must share endpoints within 1e-12 to be windowed together")]
    EndpointMismatch,
    #[error("path: {0}")]
    Path(#[from] PathError),
}

/// A window `[u, v] ⊂ (0,1)` with a tail budget: every managed path has
/// image diameter at most `budget` on `[0,u]` and on `[v,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreWindow {
    pub window: Interval,
    pub budget: f64,
}

impl CoreWindow {
    /// Re-checks the tail-diameter invariant for a path.
    pub fn check(&self, path: &SymbolicPath) -> Result<bool, PathError> {
        let left = diameter_on(
            path,
            &Interval::closed(rat::zero(), self.window.lo.clone()),
        )?;
        let right = diameter_on(path, &Interval::closed(self.window.hi.clone(), rat::one()))?;
        Ok(left <= self.budget && right <= self.budget)
    }
}

/// The largest dyadic window (to `depth` levels of bisection) on which every
/// path has tail diameters at most `budget`.
pub fn refine_window(
    paths: &[&SymbolicPath],
    budget: f64,
    depth: u32,
) -> Result<CoreWindow, WindowError> {
    if budget <= 0.0 {
        return Err(WindowError::BadBudget);
    }
    for w in paths.windows(2) {
        if w[0].start().dist(&w[1].start()) > crate::JUNCTION_TOL
            || w[0].end().dist(&w[1].end()) > crate::JUNCTION_TOL
        {
            return Err(WindowError::EndpointMismatch);
        }
    }
    let all_within = |lo: &Rat, hi: &Rat| -> Result<bool, WindowError> {
        for p in paths {
            if diameter_on(p, &Interval::closed(lo.clone(), hi.clone()))? > budget {
                return Ok(false);
            }
        }
        Ok(true)
    };
    // greatest dyadic u with diameters on [0,u] within budget
    let mut u = rat::zero();
    let mut step = rat::half();
    for _ in 0..depth {
        let cand = &u + &step;
        if cand < rat::one() && all_within(&rat::zero(), &cand)? {
            u = cand;
        }
        step /= rat::rat_int(2);
    }
    // least dyadic v with diameters on [v,1] within budget
    let mut v = rat::one();
    let mut step = rat::half();
    for _ in 0..depth {
        let cand = &v - &step;
        if cand > rat::zero() && all_within(&cand, &rat::one())? {
            v = cand;
        }
        step /= rat::rat_int(2);
    }
    if u == rat::zero() || v == rat::one() || u >= v {
        return Err(WindowError::Unrefinable { depth, budget });
    }
    Ok(CoreWindow {
        window: Interval::closed(u, v),
        budget,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use crate::path::{make_l_path, SymbolicPath};
    use crate::rat::{one, rat, zero};

    fn pt(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn constant_margins_are_excluded_exactly() {
        // constant on [0,1/2], then a moving tail
        let head = SymbolicPath::constant(pt(0.0, 0.0));
        let tail = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let p = head.concat(&tail).unwrap();
        // same image, different timing
        let f = crate::pl::PlMap::unit(vec![
            (zero(), zero()),
            (rat(1, 3), rat(2, 3)),
            (one(), one()),
        ])
        .unwrap();
        let q = p.reparameterize(&f).unwrap();
        let w = refine_window(&[&p, &q], 0.1, 24).unwrap();
        // q's constant margin ends at 1/4 (p's at 1/2); the joint window
        // starts at or past the shorter margin
        assert!(w.window.lo >= rat(1, 4), "lo = {}", w.window.lo);
        assert!(w.check(&p).unwrap() && w.check(&q).unwrap());
        let wp = refine_window(&[&p], 0.1, 24).unwrap();
        assert!(wp.window.lo >= rat(1, 2), "lo = {}", wp.window.lo);
        // shrinking the budget shrinks the tails monotonically
        let w2 = refine_window(&[&p, &q], 0.05, 24).unwrap();
        assert!(w2.window.lo <= w.window.lo);
        assert!(w2.window.hi >= w.window.hi);
    }

    #[test]
    fn zero_budget_is_rejected() {
        let l = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        assert_eq!(
            refine_window(&[&l], 0.0, 16),
            Err(WindowError::BadBudget)
        );
    }

    #[test]
    fn unrefinable_when_budget_is_tiny() {
        let l = make_l_path(pt(-1.0, 0.0), pt(1.0, 0.0));
        // the path moves immediately, so a 1e-9 budget fails at depth 4
        match refine_window(&[&l], 1e-9, 4) {
            Err(WindowError::Unrefinable { depth: 4, .. }) => {}
            other => panic!("expected Unrefinable, got {other:?}"),
        }
    }

    #[test]
    fn window_edges_stay_dyadic() {
        let l = make_l_path(pt(-0.9, 0.0), pt(0.9, 0.0));
        let w = refine_window(&[&l], 0.2, 20).unwrap();
        assert!(w.window.lo > zero() && w.window.hi < one());
        // dyadic denominators
        use num_traits::ToPrimitive;
        let d = w.window.lo.denom().to_u64().unwrap();
        assert_eq!(d & (d - 1), 0, "denominator {d} is not a power of two");
    }
}
