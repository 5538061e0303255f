//! Symbolic paths in the closed unit disk.

use crate::geom::{self, Point2};
use crate::interval::Interval;
use crate::pl::PlMap;
use crate::rat::{self, Rat};
use crate::warp::{WarpChain, WarpError, WarpStep};
use crate::{DISK_SLACK, JUNCTION_TOL};
use thiserror::Error;

/// Digit cap used when warp chains evaluate the Cantor function.
pub const TAU_DEPTH: u32 = 4096;

#[derive(Debug, Error, PartialEq)]
pub enum PathError {
    #[error("warp: {0}")]
    Warp(#[from] WarpError),
    #[error("pl: {0}")]
    Pl(#[from] crate::pl::PlError),
    #[error("a path needs at least one atom")]
    Empty,
    #[error("atom domains must abut exactly and span [0,1] (atom {0})")]
    BadDomains(usize),
    #[error("junction discontinuity of {gap:.3e} at atom {index}")]
    Discontinuity { index: usize, gap: f64 },
    #[error("point ({0}, {1}) leaves the closed unit disk")]
    OutsideDisk(f64, f64),
    #[error("argument {0} outside [0,1]")]
    Domain(String),
    #[error("warp must map the atom domain into [0,1] (atom {0})")]
    WarpRange(usize),
    #[error("endpoint mismatch of {0:.3e} in concatenation")]
    EndpointMismatch(f64),
    #[error("reparameterization map must be a monotone surjection of [0,1]")]
    BadReparam,
    #[error("arc sweep must be nonzero and at most a full turn")]
    BadArc,
}

/// Geometric support of one atom.
#[derive(Debug, Clone, PartialEq)]
pub enum Carrier {
    Const(Point2),
    Segment { from: Point2, to: Point2 },
    Arc {
        center: Point2,
        radius: f64,
        angle_from: f64,
        angle_to: f64,
    },
}

impl Carrier {
    pub fn segment(from: Point2, to: Point2) -> Carrier {
        if from == to {
            Carrier::Const(from)
        } else {
            Carrier::Segment { from, to }
        }
    }

    pub fn point_at(&self, u: f64) -> Point2 {
        match self {
            Carrier::Const(p) => *p,
            Carrier::Segment { from, to } => from.lerp(to, u),
            Carrier::Arc {
                center,
                radius,
                angle_from,
                angle_to,
            } => {
                let theta = angle_from + u * (angle_to - angle_from);
                Point2::new(
                    center.x + radius * theta.cos(),
                    center.y + radius * theta.sin(),
                )
            }
        }
    }

    /// True when evaluation is an affine function of the warp value.
    pub fn is_affine(&self) -> bool {
        !matches!(self, Carrier::Arc { .. })
    }

    fn check_in_disk(&self) -> Result<(), PathError> {
        let bad = |p: &Point2| -> Result<(), PathError> {
            if p.in_unit_disk(DISK_SLACK) {
                Ok(())
            } else {
                Err(PathError::OutsideDisk(p.x, p.y))
            }
        };
        match self {
            Carrier::Const(p) => bad(p),
            Carrier::Segment { from, to } => {
                bad(from)?;
                bad(to)
            }
            Carrier::Arc { center, radius, .. } => {
                if center.norm() + radius <= 1.0 + DISK_SLACK {
                    Ok(())
                } else {
                    Err(PathError::OutsideDisk(center.x + radius, center.y))
                }
            }
        }
    }
}

/// A subinterval of `[0,1]` carrying a geometric primitive traversed through
/// a monotone warp chain, optionally backwards.
#[derive(Debug, Clone, PartialEq)]
pub struct PathAtom {
    /// Closed domain `[lo, hi]` with `lo < hi`.
    pub dom: Interval,
    pub carrier: Carrier,
    /// Chain mapping `dom` monotonically into `[0,1]`.
    pub warp: WarpChain,
    pub reversed: bool,
}

impl PathAtom {
    /// Builds an atom whose warp is the domain normalizer followed by
    /// `extra` steps acting on `[0,1]`.
    pub fn new(
        dom: Interval,
        carrier: Carrier,
        extra: Vec<WarpStep>,
        reversed: bool,
    ) -> Result<Self, PathError> {
        let mut steps = vec![WarpStep::Pl(PlMap::affine(
            dom.lo.clone(),
            dom.hi.clone(),
            rat::zero(),
            rat::one(),
        ))];
        steps.extend(extra);
        let warp = WarpChain::new(steps)?;
        let atom = PathAtom {
            dom,
            carrier,
            warp,
            reversed,
        };
        atom.validate(0)?;
        Ok(atom)
    }

    pub fn validate(&self, index: usize) -> Result<(), PathError> {
        if self.dom.lo >= self.dom.hi {
            return Err(PathError::BadDomains(index));
        }
        self.carrier.check_in_disk()?;
        if let Carrier::Arc {
            angle_from,
            angle_to,
            radius,
            ..
        } = &self.carrier
        {
            let sweep = (angle_to - angle_from).abs();
            if !(sweep > 0.0 && sweep <= std::f64::consts::TAU && *radius > 0.0) {
                return Err(PathError::BadArc);
            }
        }
        let lo = self.warp_at(&self.dom.lo)?;
        let hi = self.warp_at(&self.dom.hi)?;
        if !(rat::in_unit(&lo) && rat::in_unit(&hi) && lo <= hi) {
            return Err(PathError::WarpRange(index));
        }
        Ok(())
    }

    /// Exact warp value before the reversal flag is applied.
    pub fn warp_at(&self, t: &Rat) -> Result<Rat, PathError> {
        Ok(self.warp.eval(t, TAU_DEPTH)?)
    }

    /// Exact carrier parameter at `t` (reversal applied).
    pub fn param_at(&self, t: &Rat) -> Result<Rat, PathError> {
        let u = self.warp_at(t)?;
        Ok(if self.reversed { rat::one() - u } else { u })
    }

    pub fn eval(&self, t: &Rat) -> Result<Point2, PathError> {
        let u = self.param_at(t)?;
        Ok(self.carrier.point_at(rat::to_f64(&u)))
    }

    /// Carrier-parameter span over `[s, e] ⊆ dom`, reversal applied, sorted.
    pub fn param_range(&self, s: &Rat, e: &Rat) -> Result<(Rat, Rat), PathError> {
        let a = self.param_at(s)?;
        let b = self.param_at(e)?;
        Ok(if a <= b { (a, b) } else { (b, a) })
    }

    /// True when the atom takes a single value on `[s, e]`.
    pub fn is_const_on(&self, s: &Rat, e: &Rat) -> Result<bool, PathError> {
        if matches!(self.carrier, Carrier::Const(_)) {
            return Ok(true);
        }
        let (a, b) = self.param_range(s, e)?;
        Ok(a == b)
    }

    /// Same carrier, warp and flag on a subdomain; exact.
    pub fn restrict(&self, lo: Rat, hi: Rat) -> PathAtom {
        debug_assert!(lo >= self.dom.lo && hi <= self.dom.hi && lo < hi);
        PathAtom {
            dom: Interval::closed(lo, hi),
            carrier: self.carrier.clone(),
            warp: self.warp.clone(),
            reversed: self.reversed,
        }
    }

    /// Rescales the domain by an affine change of parameter; the warp chain
    /// is adjusted so values are unchanged.
    pub fn with_dom(&self, new_dom: Interval) -> PathAtom {
        let bridge = PlMap::affine(
            new_dom.lo.clone(),
            new_dom.hi.clone(),
            self.dom.lo.clone(),
            self.dom.hi.clone(),
        );
        let warp = self
            .warp
            .prepend(WarpStep::Pl(bridge))
            .expect("chain cap cannot be hit by a single prepend");
        PathAtom {
            dom: new_dom,
            carrier: self.carrier.clone(),
            warp,
            reversed: self.reversed,
        }
    }

    fn reversed_copy(&self) -> PathAtom {
        PathAtom {
            dom: Interval::closed(
                rat::one() - &self.dom.hi,
                rat::one() - &self.dom.lo,
            ),
            carrier: self.carrier.clone(),
            warp: self.warp.mirror(),
            reversed: !self.reversed,
        }
    }
}

/// A path `[0,1] -> D^2` as a finite list of abutting atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicPath {
    pub atoms: Vec<PathAtom>,
}

impl SymbolicPath {
    pub fn new(atoms: Vec<PathAtom>) -> Result<Self, PathError> {
        let p = SymbolicPath { atoms };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), PathError> {
        if self.atoms.is_empty() {
            return Err(PathError::Empty);
        }
        if self.atoms[0].dom.lo != rat::zero()
            || self.atoms.last().unwrap().dom.hi != rat::one()
        {
            return Err(PathError::BadDomains(0));
        }
        for (i, atom) in self.atoms.iter().enumerate() {
            atom.validate(i)?;
            if i > 0 {
                if self.atoms[i - 1].dom.hi != atom.dom.lo {
                    return Err(PathError::BadDomains(i));
                }
                let left = self.atoms[i - 1].eval(&atom.dom.lo)?;
                let right = atom.eval(&atom.dom.lo)?;
                let gap = left.dist(&right);
                if gap > JUNCTION_TOL {
                    return Err(PathError::Discontinuity { index: i, gap });
                }
            }
        }
        Ok(())
    }

    pub fn constant(p: Point2) -> SymbolicPath {
        SymbolicPath {
            atoms: vec![PathAtom::new(Interval::unit(), Carrier::Const(p), vec![], false)
                .expect("constant atom is valid")],
        }
    }

    /// Index of the atom whose closed domain contains `t` (leftmost).
    pub fn atom_index_at(&self, t: &Rat) -> Result<usize, PathError> {
        if !rat::in_unit(t) {
            return Err(PathError::Domain(rat::format_rat(t)));
        }
        let idx = self.atoms.partition_point(|a| a.dom.hi < *t);
        Ok(idx.min(self.atoms.len() - 1))
    }

    pub fn eval(&self, t: &Rat) -> Result<Point2, PathError> {
        let idx = self.atom_index_at(t)?;
        self.atoms[idx].eval(t)
    }

    pub fn start(&self) -> Point2 {
        self.atoms[0]
            .eval(&self.atoms[0].dom.lo)
            .expect("validated path evaluates at 0")
    }

    pub fn end(&self) -> Point2 {
        let last = self.atoms.last().unwrap();
        last.eval(&last.dom.hi).expect("validated path evaluates at 1")
    }

    pub fn reverse(&self) -> SymbolicPath {
        SymbolicPath {
            atoms: self.atoms.iter().rev().map(|a| a.reversed_copy()).collect(),
        }
    }

    /// Concatenation on `[0,1]` with the junction at `1/2`.
    pub fn concat(&self, other: &SymbolicPath) -> Result<SymbolicPath, PathError> {
        let gap = self.end().dist(&other.start());
        if gap > JUNCTION_TOL {
            return Err(PathError::EndpointMismatch(gap));
        }
        let mut atoms = rescale(&self.atoms, &rat::zero(), &rat::half());
        atoms.extend(rescale(&other.atoms, &rat::half(), &rat::one()));
        SymbolicPath::new(atoms)
    }

    /// Exact pullback of the path along a monotone unit surjection:
    /// `result(t) = self(f(t))`.
    pub fn reparameterize(&self, f: &PlMap) -> Result<SymbolicPath, PathError> {
        if !f.is_unit() {
            return Err(PathError::BadReparam);
        }
        let mut cuts: Vec<Rat> = Vec::with_capacity(self.atoms.len() + 1);
        cuts.push(rat::zero());
        for atom in &self.atoms[..self.atoms.len() - 1] {
            let x = &atom.dom.hi;
            let t = f.preimage_max(x).ok_or(PathError::BadReparam)?;
            cuts.push(t);
        }
        cuts.push(rat::one());
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (i, atom) in self.atoms.iter().enumerate() {
            let (lo, hi) = (&cuts[i], &cuts[i + 1]);
            debug_assert!(lo < hi);
            let piece = f.restrict(lo, hi).map_err(WarpError::from)?;
            let warp = atom.warp.prepend(WarpStep::Pl(piece))?;
            atoms.push(PathAtom {
                dom: Interval::closed(lo.clone(), hi.clone()),
                carrier: atom.carrier.clone(),
                warp,
                reversed: atom.reversed,
            });
        }
        SymbolicPath::new(atoms)
    }

    /// Atom list sliced exactly to `[lo, hi]`.
    pub fn restrict_atoms(&self, lo: &Rat, hi: &Rat) -> Vec<PathAtom> {
        let mut out = Vec::new();
        for atom in &self.atoms {
            let a = rat::max_rat(atom.dom.lo.clone(), lo.clone());
            let b = rat::min_rat(atom.dom.hi.clone(), hi.clone());
            if a < b {
                out.push(atom.restrict(a, b));
            }
        }
        out
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }
}

fn rescale(atoms: &[PathAtom], lo: &Rat, hi: &Rat) -> Vec<PathAtom> {
    let width = hi - lo;
    atoms
        .iter()
        .map(|a| {
            let nlo = lo + &a.dom.lo * &width;
            let nhi = lo + &a.dom.hi * &width;
            a.with_dom(Interval::closed(nlo, nhi))
        })
        .collect()
}

/// The Cantor-timed straight-line path from `x` halfway toward `y`:
/// a segment from `x` to `(x+y)/2` traversed through the Cantor function,
/// or the constant path at `x` when `x = y`.
pub fn make_l_path(x: Point2, y: Point2) -> SymbolicPath {
    if x == y {
        return SymbolicPath::constant(x);
    }
    let mid = x.midpoint(&y);
    SymbolicPath {
        atoms: vec![PathAtom::new(
            Interval::unit(),
            Carrier::segment(x, mid),
            vec![WarpStep::Tau],
            false,
        )
        .expect("l-path atom is valid")],
    }
}

/// Injectivity certification: true when every atom is injective (strictly
/// monotone PL warp, no Cantor step, non-constant carrier) and atom images
/// meet only at shared junction endpoints. On failure returns the indices of
/// a witness pair (or the single offending atom as `(i, i)`).
pub fn check_injective(path: &SymbolicPath) -> Result<(), (usize, usize)> {
    for (i, atom) in path.atoms.iter().enumerate() {
        if matches!(atom.carrier, Carrier::Const(_)) {
            return Err((i, i));
        }
        if atom.warp.tau_position().is_some() {
            return Err((i, i));
        }
        let pl = atom
            .warp
            .pre_tau_pl(&atom.dom.lo, &atom.dom.hi)
            .map_err(|_| (i, i))?;
        if !pl.is_homeomorphism() {
            return Err((i, i));
        }
        if let Carrier::Arc {
            angle_from,
            angle_to,
            ..
        } = atom.carrier
        {
            if (angle_to - angle_from).abs() >= std::f64::consts::TAU {
                return Err((i, i));
            }
        }
    }
    // pairwise image checks
    for i in 0..path.atoms.len() {
        for j in i + 1..path.atoms.len() {
            let adjacent = j == i + 1;
            if images_overlap(&path.atoms[i], &path.atoms[j], adjacent) {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

fn images_overlap(a: &PathAtom, b: &PathAtom, adjacent: bool) -> bool {
    let pa = atom_image_endpoints(a);
    let pb = atom_image_endpoints(b);
    match (&a.carrier, &b.carrier) {
        (Carrier::Segment { .. }, Carrier::Segment { .. }) => {
            if !geom::segments_intersect(pa.0, pa.1, pb.0, pb.1) {
                return false;
            }
            if !adjacent {
                return true;
            }
            // adjacent segments may share exactly the junction point
            !intersection_is_single_shared_point(pa, pb)
        }
        (
            Carrier::Arc {
                center: c1,
                radius: r1,
                ..
            },
            Carrier::Arc {
                center: c2,
                radius: r2,
                ..
            },
        ) => {
            if c1 == c2 && r1 == r2 {
                let s1 = atom_angle_span(a);
                let s2 = atom_angle_span(b);
                let overlap = s1.0.max(s2.0) < s1.1.min(s2.1) - 1e-15;
                if overlap {
                    return true;
                }
                if adjacent {
                    false
                } else {
                    // disjoint spans on the same circle may still share an endpoint
                    s1.0.max(s2.0) <= s1.1.min(s2.1) + 1e-15
                }
            } else {
                // distinct circles: conservative sampled distance
                sampled_min_distance(a, b) < 1e-12 && !adjacent
            }
        }
        _ => {
            let d = sampled_min_distance(a, b);
            if adjacent {
                // allow contact at the shared junction only
                d < 1e-12 && sampled_min_distance_excluding_junction(a, b) < 1e-9
            } else {
                d < 1e-12
            }
        }
    }
}

fn atom_image_endpoints(a: &PathAtom) -> (Point2, Point2) {
    (
        a.eval(&a.dom.lo).expect("validated atom"),
        a.eval(&a.dom.hi).expect("validated atom"),
    )
}

fn atom_angle_span(a: &PathAtom) -> (f64, f64) {
    if let Carrier::Arc {
        angle_from,
        angle_to,
        ..
    } = a.carrier
    {
        let (ulo, uhi) = a
            .param_range(&a.dom.lo, &a.dom.hi)
            .expect("validated atom");
        let t0 = angle_from + rat::to_f64(&ulo) * (angle_to - angle_from);
        let t1 = angle_from + rat::to_f64(&uhi) * (angle_to - angle_from);
        (t0.min(t1), t0.max(t1))
    } else {
        unreachable!()
    }
}

fn intersection_is_single_shared_point(pa: (Point2, Point2), pb: (Point2, Point2)) -> bool {
    let shared = [pa.0, pa.1]
        .iter()
        .any(|p| [pb.0, pb.1].iter().any(|q| p.dist(q) <= JUNCTION_TOL));
    if !shared {
        return false;
    }
    // reject collinear overlap of positive length
    let dir_a = Point2::new(pa.1.x - pa.0.x, pa.1.y - pa.0.y);
    let dir_b = Point2::new(pb.1.x - pb.0.x, pb.1.y - pb.0.y);
    let cross = dir_a.x * dir_b.y - dir_a.y * dir_b.x;
    if cross.abs() > 1e-12 {
        return true;
    }
    // collinear: overlap length beyond the shared point
    let mid_b = pb.0.midpoint(&pb.1);
    geom::point_segment_distance(mid_b, pa.0, pa.1) > 1e-12
        || geom::point_segment_distance(pa.0.midpoint(&pa.1), pb.0, pb.1) > 1e-12
}

fn sampled_min_distance(a: &PathAtom, b: &PathAtom) -> f64 {
    let sa = sample_atom(a, 64);
    let sb = sample_atom(b, 64);
    let mut best = f64::INFINITY;
    for p in &sa {
        for q in &sb {
            best = best.min(p.dist(q));
        }
    }
    best
}

fn sampled_min_distance_excluding_junction(a: &PathAtom, b: &PathAtom) -> f64 {
    let sa = sample_atom(a, 64);
    let sb = sample_atom(b, 64);
    let junction = a.eval(&a.dom.hi).expect("validated atom");
    let mut best = f64::INFINITY;
    for p in &sa {
        for q in &sb {
            if p.dist(&junction) < 1e-6 && q.dist(&junction) < 1e-6 {
                continue;
            }
            best = best.min(p.dist(q));
        }
    }
    best
}

fn sample_atom(a: &PathAtom, n: usize) -> Vec<Point2> {
    let mut out = Vec::with_capacity(n + 1);
    let w = a.dom.length();
    for i in 0..=n {
        let t = &a.dom.lo + &w * rat::rat(i as i64, n as i64);
        out.push(a.eval(&t).expect("validated atom"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{one, rat, zero};

    fn pt(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn constant_path_and_l_path_eval() {
        let p = pt(0.25, -0.5);
        let c = SymbolicPath::constant(p);
        assert_eq!(c.eval(&rat(1, 3)).unwrap(), p);

        let x = pt(0.0, 0.0);
        let y = pt(1.0, 0.0);
        let l = make_l_path(x, y);
        assert_eq!(l.eval(&zero()).unwrap(), x);
        // endpoint: tau(1) = 1 gives the midpoint (x+y)/2
        assert_eq!(l.eval(&one()).unwrap(), pt(0.5, 0.0));
        // tau(1/2) = 1/2 gives the quarter point
        assert_eq!(l.eval(&rat(1, 2)).unwrap(), pt(0.25, 0.0));
        // x = y degenerates to a constant path
        assert!(matches!(
            make_l_path(p, p).atoms[0].carrier,
            Carrier::Const(_)
        ));
    }

    #[test]
    fn reverse_is_exact_involution() {
        let l = make_l_path(pt(0.2, 0.1), pt(-0.6, 0.4));
        let r = l.reverse();
        assert_eq!(r.reverse(), l);
        for i in 0..=32 {
            let t = rat(i, 32);
            let a = l.eval(&t).unwrap();
            let b = r.eval(&(one() - &t)).unwrap();
            assert!(a.dist(&b) < 1e-15);
        }
        assert_eq!(r.start(), l.end());
    }

    #[test]
    fn concat_requires_matching_endpoints() {
        let l1 = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let l2 = make_l_path(pt(0.9, 0.0), pt(0.0, 0.0));
        assert!(l1.concat(&l2).is_err());
        let l3 = make_l_path(pt(0.5, 0.0), pt(-0.5, 0.0));
        let both = l1.concat(&l3).unwrap();
        assert_eq!(both.atom_count(), 2);
        assert_eq!(both.eval(&rat(1, 2)).unwrap(), pt(0.5, 0.0));
        assert_eq!(both.eval(&one()).unwrap(), pt(0.0, 0.0));
        // first half agrees with l1 at halved parameters
        for i in 0..=16 {
            let t = rat(i, 16);
            let half_t = rat(i, 32);
            assert!(both
                .eval(&half_t)
                .unwrap()
                .dist(&l1.eval(&t).unwrap())
                < 1e-15);
        }
    }

    #[test]
    fn reparameterize_matches_eval_oracle() {
        let l = make_l_path(pt(1.0, 0.0), pt(-1.0, 0.0));
        let c = l.concat(&make_l_path(pt(0.0, 0.0), pt(0.8, 0.6))).unwrap();
        let f = PlMap::unit(vec![
            (zero(), zero()),
            (rat(1, 3), rat(2, 3)),
            (one(), one()),
        ])
        .unwrap();
        let r = c.reparameterize(&f).unwrap();
        assert_eq!(c.reparameterize(&PlMap::identity()).unwrap(), c);
        for i in 0..=1000 {
            let t = rat(i, 1000);
            let lhs = r.eval(&t).unwrap();
            let rhs = c.eval(&f.eval(&t).unwrap()).unwrap();
            assert!(lhs.dist(&rhs) < 1e-12, "at {i}/1000");
        }
    }

    #[test]
    fn reparameterize_by_collapse_keeps_continuity() {
        // a monotone surjection with a plateau straddling the junction
        let c = make_l_path(pt(1.0, 0.0), pt(-1.0, 0.0))
            .concat(&make_l_path(pt(0.0, 0.0), pt(0.8, 0.6)))
            .unwrap();
        let f = PlMap::unit(vec![
            (zero(), zero()),
            (rat(2, 5), rat(1, 2)),
            (rat(3, 5), rat(1, 2)),
            (one(), one()),
        ])
        .unwrap();
        let r = c.reparameterize(&f).unwrap();
        r.validate().unwrap();
        for i in 0..=500 {
            let t = rat(i, 500);
            let lhs = r.eval(&t).unwrap();
            let rhs = c.eval(&f.eval(&t).unwrap()).unwrap();
            assert!(lhs.dist(&rhs) < 1e-12, "at {i}/500");
        }
    }

    #[test]
    fn injectivity_examples() {
        // upper semicircle: injective
        let a = SymbolicPath::new(vec![PathAtom::new(
            Interval::unit(),
            Carrier::Arc {
                center: Point2::origin(),
                radius: 1.0,
                angle_from: 0.0,
                angle_to: std::f64::consts::PI,
            },
            vec![],
            false,
        )
        .unwrap()])
        .unwrap();
        assert!(check_injective(&a).is_ok());

        // Cantor-timed paths are constant on gap closures
        let l = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        assert_eq!(check_injective(&l), Err((0, 0)));

        // an injective two-segment bend
        let bend = SymbolicPath::new(vec![
            PathAtom::new(
                Interval::closed(zero(), rat(1, 2)),
                Carrier::segment(pt(-0.5, -0.5), pt(0.5, 0.5)),
                vec![],
                false,
            )
            .unwrap(),
            PathAtom::new(
                Interval::closed(rat(1, 2), one()),
                Carrier::segment(pt(0.5, 0.5), pt(-0.5, 0.5)),
                vec![],
                false,
            )
            .unwrap(),
        ])
        .unwrap();
        assert!(check_injective(&bend).is_ok());

        // a path whose last segment crosses its first
        let z = SymbolicPath::new(vec![
            PathAtom::new(
                Interval::closed(zero(), rat(1, 3)),
                Carrier::segment(pt(-0.6, 0.0), pt(0.6, 0.0)),
                vec![],
                false,
            )
            .unwrap(),
            PathAtom::new(
                Interval::closed(rat(1, 3), rat(2, 3)),
                Carrier::segment(pt(0.6, 0.0), pt(0.6, 0.4)),
                vec![],
                false,
            )
            .unwrap(),
            PathAtom::new(
                Interval::closed(rat(2, 3), one()),
                Carrier::segment(pt(0.6, 0.4), pt(0.0, -0.4)),
                vec![],
                false,
            )
            .unwrap(),
        ])
        .unwrap();
        assert_eq!(check_injective(&z), Err((0, 2)));
    }
}
