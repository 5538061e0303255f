//! Piecewise-linear monotone maps with exact rational breakpoints.

use crate::rat::{self, Rat};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlError {
    #[error("a piecewise-linear map needs at least two breakpoints")]
    TooFewPoints,
    #[error("breakpoint inputs must be strictly increasing (at index {0})")]
    InputsNotIncreasing(usize),
    #[error("breakpoint outputs must be non-decreasing (at index {0})")]
    OutputsDecreasing(usize),
    #[error("map must run from (0,0) to (1,1); got ({0}, {1}) .. ({2}, {3})")]
    NotUnit(String, String, String, String),
    #[error("map is not invertible: flat on [{0}, {1}]")]
    NotInvertible(String, String),
    #[error("argument {0} outside the map domain [{1}, {2}]")]
    OutsideDomain(String, String, String),
    #[error("deviation of map {index} exceeds its certified bound a*r^{index}")]
    BoundViolation { index: usize },
    #[error("geometric ratio must satisfy 0 < r < 1")]
    BadRatio,
}

/// A monotone non-decreasing piecewise-linear map given by its breakpoints.
///
/// Inputs are strictly increasing and outputs non-decreasing; collinear
/// interior breakpoints are removed so structural equality is meaningful.
/// The domain and range are arbitrary rational intervals; [`PlMap::unit`]
/// checks the `(0,0)..(1,1)` special case used for reparameterizations of
/// `[0,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlMap {
    points: Vec<(Rat, Rat)>,
}

impl PlMap {
    pub fn new(points: Vec<(Rat, Rat)>) -> Result<Self, PlError> {
        if points.len() < 2 {
            return Err(PlError::TooFewPoints);
        }
        for i in 1..points.len() {
            if points[i].0 <= points[i - 1].0 {
                return Err(PlError::InputsNotIncreasing(i));
            }
            if points[i].1 < points[i - 1].1 {
                return Err(PlError::OutputsDecreasing(i));
            }
        }
        let mut m = PlMap { points };
        m.canonicalize();
        Ok(m)
    }

    /// A map on `[0,1]` fixing both endpoints.
    pub fn unit(points: Vec<(Rat, Rat)>) -> Result<Self, PlError> {
        let m = Self::new(points)?;
        if !m.is_unit() {
            let (a, b) = (&m.points[0], m.points.last().unwrap());
            return Err(PlError::NotUnit(
                rat::format_rat(&a.0),
                rat::format_rat(&a.1),
                rat::format_rat(&b.0),
                rat::format_rat(&b.1),
            ));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        PlMap {
            points: vec![(rat::zero(), rat::zero()), (rat::one(), rat::one())],
        }
    }

    /// The affine map sending `[a,b]` onto `[c,d]`.
    pub fn affine(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        debug_assert!(a < b && c <= d);
        PlMap {
            points: vec![(a, c), (b, d)],
        }
    }

    pub fn points(&self) -> &[(Rat, Rat)] {
        &self.points
    }

    pub fn dom_lo(&self) -> &Rat {
        &self.points[0].0
    }

    pub fn dom_hi(&self) -> &Rat {
        &self.points.last().unwrap().0
    }

    pub fn range_lo(&self) -> &Rat {
        &self.points[0].1
    }

    pub fn range_hi(&self) -> &Rat {
        &self.points.last().unwrap().1
    }

    pub fn is_unit(&self) -> bool {
        self.points[0] == (rat::zero(), rat::zero())
            && *self.points.last().unwrap() == (rat::one(), rat::one())
    }

    /// True iff outputs are strictly increasing.
    pub fn is_homeomorphism(&self) -> bool {
        self.points.windows(2).all(|w| w[0].1 < w[1].1)
    }

    fn canonicalize(&mut self) {
        let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(self.points.len());
        for p in self.points.drain(..) {
            while out.len() >= 2 {
                let a = &out[out.len() - 2];
                let b = &out[out.len() - 1];
                // drop b when a, b, p are collinear
                let lhs = (&b.1 - &a.1) * (&p.0 - &b.0);
                let rhs = (&p.1 - &b.1) * (&b.0 - &a.0);
                if lhs == rhs {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        self.points = out;
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat, PlError> {
        if t < self.dom_lo() || t > self.dom_hi() {
            return Err(PlError::OutsideDomain(
                rat::format_rat(t),
                rat::format_rat(self.dom_lo()),
                rat::format_rat(self.dom_hi()),
            ));
        }
        // binary search for the segment containing t
        let idx = match self.points.binary_search_by(|(x, _)| x.cmp(t)) {
            Ok(i) => return Ok(self.points[i].1.clone()),
            Err(i) => i, // points[i-1].0 < t < points[i].0
        };
        let (x0, y0) = &self.points[idx - 1];
        let (x1, y1) = &self.points[idx];
        Ok(y0 + (y1 - y0) * (t - x0) / (x1 - x0))
    }

    /// Exact composition `self ∘ g` (first `g`, then `self`).
    ///
    /// Requires the range of `g` to lie inside the domain of `self`.
    pub fn compose(&self, g: &PlMap) -> Result<PlMap, PlError> {
        if g.range_lo() < self.dom_lo() || g.range_hi() > self.dom_hi() {
            return Err(PlError::OutsideDomain(
                format!("[{}, {}]", rat::format_rat(g.range_lo()), rat::format_rat(g.range_hi())),
                rat::format_rat(self.dom_lo()),
                rat::format_rat(self.dom_hi()),
            ));
        }
        let mut xs: Vec<Rat> = g.points.iter().map(|(x, _)| x.clone()).collect();
        for (u, _) in &self.points {
            if u < g.range_lo() || u > g.range_hi() {
                continue;
            }
            if let Some(lo) = g.preimage_min(u) {
                xs.push(lo);
            }
            if let Some(hi) = g.preimage_max(u) {
                xs.push(hi);
            }
        }
        xs.sort();
        xs.dedup();
        let mut pts = Vec::with_capacity(xs.len());
        for x in xs {
            let y = self.eval(&g.eval(&x)?)?;
            pts.push((x, y));
        }
        PlMap::new(pts)
    }

    /// Exact inverse; errors when any segment is flat.
    pub fn invert(&self) -> Result<PlMap, PlError> {
        for w in self.points.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(PlError::NotInvertible(
                    rat::format_rat(&w[0].0),
                    rat::format_rat(&w[1].0),
                ));
            }
        }
        PlMap::new(self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect())
    }

    /// Exact `sup |f(t) - t|`; attained at a breakpoint of a PL map.
    pub fn deviation_from_identity(&self) -> Rat {
        self.points
            .iter()
            .map(|(x, y)| {
                let d = y - x;
                if d.is_negative() {
                    -d
                } else {
                    d
                }
            })
            .max()
            .unwrap()
    }

    /// Exact `sup |f - g|` over the common domain (both maps must share it).
    pub fn sup_diff(&self, other: &PlMap) -> Result<Rat, PlError> {
        let mut xs: Vec<Rat> = self.points.iter().map(|(x, _)| x.clone()).collect();
        xs.extend(other.points.iter().map(|(x, _)| x.clone()));
        xs.sort();
        xs.dedup();
        let mut best = Rat::zero();
        for x in &xs {
            let d = self.eval(x)? - other.eval(x)?;
            let d = if d.is_negative() { -d } else { d };
            if d > best {
                best = d;
            }
        }
        Ok(best)
    }

    /// Smallest `x` with `f(x) = y`.
    pub fn preimage_min(&self, y: &Rat) -> Option<Rat> {
        if y < self.range_lo() || y > self.range_hi() {
            return None;
        }
        for w in self.points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if y > y1 {
                continue;
            }
            // first window with y0 <= y <= y1
            if y == y0 {
                return Some(x0.clone());
            }
            return Some(x0 + (x1 - x0) * (y - y0) / (y1 - y0));
        }
        None
    }

    /// Largest `x` with `f(x) = y`.
    pub fn preimage_max(&self, y: &Rat) -> Option<Rat> {
        if y < self.range_lo() || y > self.range_hi() {
            return None;
        }
        for w in self.points.windows(2).rev() {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if y < y0 {
                continue;
            }
            // rightmost window with y0 <= y <= y1
            if y == y1 {
                return Some(x1.clone());
            }
            return Some(x0 + (x1 - x0) * (y - y0) / (y1 - y0));
        }
        None
    }

    /// Exact preimage of the open interval `(ylo, yhi)`, clipped to the
    /// domain; empty when the interval misses the range.
    pub fn preimage_open(&self, ylo: &Rat, yhi: &Rat) -> Option<(Rat, Rat)> {
        debug_assert!(ylo < yhi);
        if yhi <= self.range_lo() || ylo >= self.range_hi() {
            return None;
        }
        let lo = if ylo < self.range_lo() {
            self.dom_lo().clone()
        } else {
            self.preimage_max(ylo)?
        };
        let hi = if yhi > self.range_hi() {
            self.dom_hi().clone()
        } else {
            self.preimage_min(yhi)?
        };
        if lo < hi {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// Maximal intervals on which the map is constant.
    pub fn flat_spans(&self) -> Vec<(Rat, Rat)> {
        let mut out: Vec<(Rat, Rat)> = Vec::new();
        for w in self.points.windows(2) {
            if w[0].1 == w[1].1 {
                if let Some(last) = out.last_mut() {
                    if last.1 == w[0].0 {
                        last.1 = w[1].0.clone();
                        continue;
                    }
                }
                out.push((w[0].0.clone(), w[1].0.clone()));
            }
        }
        out
    }

    /// The reflection `t -> 1 - f(1 - t)`; mirroring a warp step around the
    /// midpoint of `[0,1]` on both axes.
    pub fn mirror_unit(&self) -> PlMap {
        PlMap {
            points: self
                .points
                .iter()
                .rev()
                .map(|(x, y)| (rat::one() - x, rat::one() - y))
                .collect(),
        }
    }

    /// Restriction to `[a,b] ⊆ dom`, renormalized to map `[a,b]` exactly.
    pub fn restrict(&self, a: &Rat, b: &Rat) -> Result<PlMap, PlError> {
        debug_assert!(a < b);
        let ya = self.eval(a)?;
        let yb = self.eval(b)?;
        let mut pts = vec![(a.clone(), ya)];
        for (x, y) in &self.points {
            if x > a && x < b {
                pts.push((x.clone(), y.clone()));
            }
        }
        pts.push((b.clone(), yb));
        PlMap::new(pts)
    }
}

/// Composes the inverse chain `g_n = f_n^{-1} ∘ ... ∘ f_1^{-1}` for a family
/// of increasing unit homeomorphisms whose deviations obey `dev(f_n) <= a r^n`
/// (1-based), returning every `g_n` together with the certified Cauchy bound
/// `sup |g_m - g_n| <= a r^{min(m,n)+1} / (1 - r)`.
pub fn compose_tail(fs: &[PlMap], a: &Rat, r: &Rat) -> Result<(Vec<PlMap>, Vec<Rat>), PlError> {
    if r <= &rat::zero() || r >= &rat::one() {
        return Err(PlError::BadRatio);
    }
    let geom = rat::one() - r;
    let mut gs: Vec<PlMap> = Vec::with_capacity(fs.len());
    let mut tails: Vec<Rat> = Vec::with_capacity(fs.len());
    let mut prev = PlMap::identity();
    let mut rpow = r.clone(); // r^n for the 1-based index n = i+1
    for (i, f) in fs.iter().enumerate() {
        if !f.is_unit() || !f.is_homeomorphism() {
            return Err(PlError::NotInvertible(
                rat::format_rat(f.dom_lo()),
                rat::format_rat(f.dom_hi()),
            ));
        }
        if f.deviation_from_identity() > a * &rpow {
            return Err(PlError::BoundViolation { index: i + 1 });
        }
        let g = f.invert()?.compose(&prev)?;
        prev = g.clone();
        gs.push(g);
        // sup |g_m - g_n| <= sum_{k>n} a r^k = a r^{n+1}/(1-r) for m > n
        tails.push(a * &rpow * r / &geom);
        rpow *= r;
    }
    Ok((gs, tails))
}

#[cfg(test)]
fn bound_pow(r: &Rat, e: u32) -> Rat {
    let mut out = rat::one();
    for _ in 0..e {
        out *= r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{one, rat, zero};

    fn unit(pts: Vec<(Rat, Rat)>) -> PlMap {
        PlMap::unit(pts).unwrap()
    }

    #[test]
    fn eval_and_canonical_form() {
        let f = unit(vec![
            (zero(), zero()),
            (rat(1, 2), rat(1, 4)),
            (rat(3, 4), rat(5, 8)), // collinear with neighbors, dropped
            (one(), one()),
        ]);
        assert_eq!(f.points().len(), 3);
        assert_eq!(f.eval(&rat(1, 4)).unwrap(), rat(1, 8));
        assert_eq!(f.eval(&rat(3, 4)).unwrap(), rat(5, 8));
        assert!(f.eval(&rat(3, 2)).is_err());
    }

    #[test]
    fn compose_identity_and_inverse() {
        let f = unit(vec![(zero(), zero()), (rat(1, 2), rat(1, 4)), (one(), one())]);
        assert_eq!(PlMap::identity().compose(&f).unwrap(), f);
        assert_eq!(f.compose(&PlMap::identity()).unwrap(), f);
        let finv = f.invert().unwrap();
        assert_eq!(
            finv.points(),
            &[(zero(), zero()), (rat(1, 4), rat(1, 2)), (one(), one())]
        );
        assert_eq!(f.compose(&finv).unwrap(), PlMap::identity());
        assert_eq!(finv.compose(&f).unwrap(), PlMap::identity());
    }

    #[test]
    fn compose_matches_pointwise_oracle() {
        let f = unit(vec![(zero(), zero()), (rat(1, 3), rat(1, 2)), (one(), one())]);
        let g = unit(vec![(zero(), zero()), (rat(1, 2), rat(1, 5)), (one(), one())]);
        let fg = f.compose(&g).unwrap();
        for i in 0..=1000 {
            let t = rat(i, 1000);
            assert_eq!(
                fg.eval(&t).unwrap(),
                f.eval(&g.eval(&t).unwrap()).unwrap(),
                "at {i}/1000"
            );
        }
    }

    #[test]
    fn flat_maps_are_not_invertible() {
        let k = unit(vec![
            (zero(), zero()),
            (rat(1, 3), rat(1, 2)),
            (rat(2, 3), rat(1, 2)),
            (one(), one()),
        ]);
        assert!(!k.is_homeomorphism());
        assert!(matches!(k.invert(), Err(PlError::NotInvertible(..))));
        assert_eq!(k.flat_spans(), vec![(rat(1, 3), rat(2, 3))]);
    }

    #[test]
    fn deviation_examples() {
        assert_eq!(PlMap::identity().deviation_from_identity(), zero());
        let f = unit(vec![(zero(), zero()), (rat(1, 2), rat(1, 4)), (one(), one())]);
        assert_eq!(f.deviation_from_identity(), rat(1, 4));
    }

    #[test]
    fn preimages_handle_plateaus() {
        let k = unit(vec![
            (zero(), zero()),
            (rat(1, 3), rat(1, 2)),
            (rat(2, 3), rat(1, 2)),
            (one(), one()),
        ]);
        assert_eq!(k.preimage_min(&rat(1, 2)).unwrap(), rat(1, 3));
        assert_eq!(k.preimage_max(&rat(1, 2)).unwrap(), rat(2, 3));
        assert_eq!(k.preimage_min(&zero()).unwrap(), zero());
        assert_eq!(k.preimage_max(&one()).unwrap(), one());
        assert_eq!(
            k.preimage_open(&rat(1, 4), &rat(1, 2)).unwrap(),
            (rat(1, 6), rat(1, 3))
        );
        assert_eq!(k.preimage_open(&rat(2, 5), &rat(3, 5)), Some((rat(4, 15), rat(11, 15))));
    }

    #[test]
    fn mirror_is_an_involution() {
        let f = unit(vec![(zero(), zero()), (rat(1, 3), rat(3, 4)), (one(), one())]);
        let m = f.mirror_unit();
        assert_eq!(m.mirror_unit(), f);
        for i in 0..=100 {
            let t = rat(i, 100);
            assert_eq!(
                m.eval(&t).unwrap(),
                one() - f.eval(&(one() - &t)).unwrap()
            );
        }
        // non-unit domains reflect into the complementary span
        let g = PlMap::affine(zero(), rat(1, 2), zero(), one());
        let mg = g.mirror_unit();
        assert_eq!(mg.dom_lo(), &rat(1, 2));
        assert_eq!(mg.eval(&rat(3, 4)).unwrap(), rat(1, 2));
    }

    #[test]
    fn compose_tail_identity_and_single() {
        let fs = vec![PlMap::identity(), PlMap::identity()];
        let (gs, tails) = compose_tail(&fs, &one(), &rat(1, 2)).unwrap();
        assert!(gs.iter().all(|g| *g == PlMap::identity()));
        assert_eq!(tails.len(), 2);

        let f = unit(vec![(zero(), zero()), (rat(1, 2), rat(3, 8)), (one(), one())]);
        let (gs, _) = compose_tail(&[f.clone()], &one(), &rat(1, 2)).unwrap();
        assert_eq!(gs[0], f.invert().unwrap());
    }

    #[test]
    fn compose_tail_cauchy_bounds() {
        // synthetic maps with deviation exactly (1/2)*(1/2)^n at position n
        let mut fs = Vec::new();
        for n in 1..=10u32 {
            let d = rat(1, 2) * crate::pl::bound_pow(&rat(1, 2), n);
            fs.push(unit(vec![
                (zero(), zero()),
                (rat(1, 2), rat(1, 2) + d),
                (one(), one()),
            ]));
        }
        let (gs, tails) = compose_tail(&fs, &rat(1, 2), &rat(1, 2)).unwrap();
        for n in 0..gs.len() {
            for m in n + 1..gs.len() {
                let d = gs[m].sup_diff(&gs[n]).unwrap();
                assert!(
                    d <= tails[n],
                    "pair ({},{}) exceeds certified bound: {} > {}",
                    n,
                    m,
                    rat::format_rat(&d),
                    rat::format_rat(&tails[n])
                );
            }
        }
    }

    #[test]
    fn compose_tail_rejects_bound_violation() {
        let f = unit(vec![(zero(), zero()), (rat(1, 2), rat(7, 8)), (one(), one())]);
        assert!(matches!(
            compose_tail(&[f], &rat(1, 4), &rat(1, 2)),
            Err(PlError::BoundViolation { index: 1 })
        ));
    }
}
