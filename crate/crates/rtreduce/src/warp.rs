//! Monotone time-warp chains and piecewise warp surjections.

use crate::interval::Interval;
use crate::pl::PlMap;
use crate::rat::{self, Rat};
use crate::tau::{self, TauError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WarpError {
    #[error("tau step: {0}")]
    Tau(#[from] TauError),
    #[error("pl step: {0}")]
    Pl(#[from] crate::pl::PlError),
    #[error("warp chain exceeds the configured length cap ({0})")]
    ChainTooLong(usize),
    #[error("warp value {0} escapes [0,1]")]
    ValueEscapes(String),
    #[error("piecewise warp pieces must abut exactly and span [0,1]")]
    BadPieces,
    #[error("a warp chain may carry at most one tau step")]
    MultipleTau,
}

pub const CHAIN_CAP: usize = 8;

/// One step of a monotone warp chain.
///
/// A `Pl` step with two breakpoints is an affine map; `Tau` is the ternary
/// Cantor function.
#[derive(Debug, Clone, PartialEq)]
pub enum WarpStep {
    Pl(PlMap),
    Tau,
}

impl WarpStep {
    pub fn eval(&self, t: &Rat, depth: u32) -> Result<Rat, WarpError> {
        match self {
            WarpStep::Pl(f) => Ok(f.eval(t)?),
            WarpStep::Tau => Ok(tau::tau_eval(t, depth)?),
        }
    }

    fn mirror(&self) -> WarpStep {
        match self {
            // tau(1-t) = 1 - tau(t), so tau is self-mirrored
            WarpStep::Tau => WarpStep::Tau,
            WarpStep::Pl(f) => WarpStep::Pl(f.mirror_unit()),
        }
    }
}

/// An ordered chain of warp steps, applied first-to-last.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WarpChain {
    pub steps: Vec<WarpStep>,
}

impl WarpChain {
    pub fn new(steps: Vec<WarpStep>) -> Result<Self, WarpError> {
        if steps.len() > CHAIN_CAP {
            return Err(WarpError::ChainTooLong(CHAIN_CAP));
        }
        if steps.iter().filter(|s| matches!(s, WarpStep::Tau)).count() > 1 {
            return Err(WarpError::MultipleTau);
        }
        let mut c = WarpChain { steps };
        c.canonicalize();
        Ok(c)
    }

    /// The normalizing chain for an atom domain: the affine map `[a,b] -> [0,1]`.
    pub fn normalizer(a: &Rat, b: &Rat) -> Self {
        WarpChain {
            steps: vec![WarpStep::Pl(PlMap::affine(
                a.clone(),
                b.clone(),
                rat::zero(),
                rat::one(),
            ))],
        }
    }

    pub fn eval(&self, t: &Rat, depth: u32) -> Result<Rat, WarpError> {
        let mut u = t.clone();
        for s in &self.steps {
            u = s.eval(&u, depth)?;
        }
        Ok(u)
    }

    /// Merges adjacent PL steps (exact composition) and drops identities.
    pub fn canonicalize(&mut self) {
        let mut out: Vec<WarpStep> = Vec::with_capacity(self.steps.len());
        for step in self.steps.drain(..) {
            match (&step, out.last()) {
                (WarpStep::Pl(g), Some(WarpStep::Pl(_))) => {
                    if let Some(WarpStep::Pl(f)) = out.pop() {
                        // composite applies f then g
                        let merged = g.compose(&f).expect("chain ranges must nest");
                        out.push(WarpStep::Pl(merged));
                    }
                }
                _ => out.push(step),
            }
        }
        // drop identity PL steps that are no-ops
        out.retain(|s| match s {
            WarpStep::Pl(f) => *f != PlMap::identity(),
            WarpStep::Tau => true,
        });
        self.steps = out;
    }

    /// Prepends `step` (applied before the existing chain).
    pub fn prepend(&self, step: WarpStep) -> Result<WarpChain, WarpError> {
        let mut steps = Vec::with_capacity(self.steps.len() + 1);
        steps.push(step);
        steps.extend(self.steps.iter().cloned());
        WarpChain::new(steps)
    }

    /// The chain evaluating to `1 - self(lo+hi-t)` on the mirrored domain;
    /// mirrors each step in place.
    pub fn mirror(&self) -> WarpChain {
        WarpChain {
            steps: self.steps.iter().map(|s| s.mirror()).collect(),
        }
    }

    pub fn tau_position(&self) -> Option<usize> {
        self.steps.iter().position(|s| matches!(s, WarpStep::Tau))
    }

    /// The composed PL map of the steps before the tau step (or the whole
    /// chain when no tau is present). `dom` bounds the inputs.
    pub fn pre_tau_pl(&self, dom_lo: &Rat, dom_hi: &Rat) -> Result<PlMap, WarpError> {
        let upto = self.tau_position().unwrap_or(self.steps.len());
        let mut acc = PlMap::affine(
            dom_lo.clone(),
            dom_hi.clone(),
            dom_lo.clone(),
            dom_hi.clone(),
        );
        for s in &self.steps[..upto] {
            match s {
                WarpStep::Pl(f) => acc = f.compose(&acc)?,
                WarpStep::Tau => unreachable!(),
            }
        }
        Ok(acc)
    }
}

/// A continuous monotone surjection of `[0,1]` assembled from warp-chain
/// pieces; used for collapsing maps, which are generally not piecewise
/// linear.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneWarp {
    pub pieces: Vec<WarpPiece>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WarpPiece {
    /// Closed parameter span of the piece.
    pub dom: Interval,
    /// Chain mapping `dom` onto the piece's output span.
    pub chain: WarpChain,
}

impl MonotoneWarp {
    pub fn new(pieces: Vec<WarpPiece>) -> Result<Self, WarpError> {
        if pieces.is_empty() {
            return Err(WarpError::BadPieces);
        }
        if pieces[0].dom.lo != rat::zero() || pieces.last().unwrap().dom.hi != rat::one() {
            return Err(WarpError::BadPieces);
        }
        for w in pieces.windows(2) {
            if w[0].dom.hi != w[1].dom.lo {
                return Err(WarpError::BadPieces);
            }
        }
        Ok(MonotoneWarp { pieces })
    }

    pub fn identity() -> Self {
        MonotoneWarp {
            pieces: vec![WarpPiece {
                dom: Interval::unit(),
                chain: WarpChain::default(),
            }],
        }
    }

    pub fn eval(&self, t: &Rat, depth: u32) -> Result<Rat, WarpError> {
        let idx = self
            .pieces
            .partition_point(|p| p.dom.hi < *t)
            .min(self.pieces.len() - 1);
        self.pieces[idx].chain.eval(t, depth)
    }

    /// Every piece-boundary parameter, ascending.
    pub fn breakpoints(&self) -> Vec<Rat> {
        let mut out: Vec<Rat> = self.pieces.iter().map(|p| p.dom.lo.clone()).collect();
        out.push(rat::one());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{one, rat, zero};

    #[test]
    fn chain_eval_and_canonical_merge() {
        let chain = WarpChain::new(vec![
            WarpStep::Pl(PlMap::affine(rat(1, 4), rat(3, 4), zero(), one())),
            WarpStep::Pl(PlMap::affine(zero(), one(), zero(), rat(1, 2))),
            WarpStep::Tau,
        ])
        .unwrap();
        // two PL steps merged into one
        assert_eq!(chain.steps.len(), 2);
        let v = chain.eval(&rat(1, 2), 64).unwrap();
        // affine: 1/2 -> 1/2 -> 1/4; tau(1/4) = 1/3
        assert_eq!(v, rat(1, 3));
    }

    #[test]
    fn mirror_matches_pointwise() {
        let chain = WarpChain::new(vec![
            WarpStep::Pl(PlMap::affine(zero(), rat(1, 2), zero(), one())),
            WarpStep::Tau,
        ])
        .unwrap();
        let m = chain.mirror();
        for i in 0..=40 {
            let t = rat(i, 80); // t in [0, 1/2]
            let v = chain.eval(&t, 128).unwrap();
            let w = m.eval(&(one() - &t), 128).unwrap();
            assert_eq!(&v + w, one(), "at {i}");
        }
    }

    #[test]
    fn monotone_warp_pieces() {
        let w = MonotoneWarp::new(vec![
            WarpPiece {
                dom: Interval::closed(zero(), rat(1, 2)),
                chain: WarpChain::new(vec![WarpStep::Pl(PlMap::affine(
                    zero(),
                    rat(1, 2),
                    zero(),
                    rat(1, 4),
                ))])
                .unwrap(),
            },
            WarpPiece {
                dom: Interval::closed(rat(1, 2), one()),
                chain: WarpChain::new(vec![WarpStep::Pl(PlMap::affine(
                    rat(1, 2),
                    one(),
                    rat(1, 4),
                    one(),
                ))])
                .unwrap(),
            },
        ])
        .unwrap();
        assert_eq!(w.eval(&rat(1, 2), 8).unwrap(), rat(1, 4));
        assert_eq!(w.eval(&rat(3, 4), 8).unwrap(), rat(5, 8));
        assert_eq!(w.eval(&one(), 8).unwrap(), one());
    }
}
