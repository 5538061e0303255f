//! Diameter bounds and the sup-metric on symbolic paths.
//!
//! Distances come out as `(lower, upper)` sandwiches. Cells where both paths
//! are affine in a shared warp value, or one side is constant against a
//! segment sweep, are resolved exactly (the pointwise distance is convex in
//! the warp value there, so the sup sits at a cell endpoint); everything else
//! is bounded by endpoint distances plus image diameters and can be refined.

use crate::geom::Point2;
use crate::interval::Interval;
use crate::path::{Carrier, PathAtom, PathError, SymbolicPath};
use crate::rat::{self, Rat};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Angular sampling step for arc pieces inside multi-piece diameters.
const ARC_STEP: f64 = std::f64::consts::PI / 1024.0;

/// Image summary of one atom slice: points covering the piece within `pad`.
struct PieceCover {
    points: Vec<Point2>,
    pad: f64,
}

fn piece_cover(atom: &PathAtom, s: &Rat, e: &Rat) -> Result<PieceCover, PathError> {
    match &atom.carrier {
        Carrier::Const(p) => Ok(PieceCover {
            points: vec![*p],
            pad: 0.0,
        }),
        Carrier::Segment { .. } => Ok(PieceCover {
            points: vec![atom.eval(s)?, atom.eval(e)?],
            pad: 0.0,
        }),
        Carrier::Arc {
            center,
            radius,
            angle_from,
            angle_to,
        } => {
            let (u0, u1) = atom.param_range(s, e)?;
            let t0 = angle_from + rat::to_f64(&u0) * (angle_to - angle_from);
            let t1 = angle_from + rat::to_f64(&u1) * (angle_to - angle_from);
            let (a, b) = (t0.min(t1), t0.max(t1));
            let n = ((b - a) / ARC_STEP).ceil().max(1.0) as usize;
            let mut points = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let th = a + (b - a) * (k as f64) / (n as f64);
                points.push(Point2::new(
                    center.x + radius * th.cos(),
                    center.y + radius * th.sin(),
                ));
            }
            // Hausdorff distance from the arc to the sample set
            let spacing = (b - a) / (n as f64);
            let pad = 2.0 * radius * (spacing / 4.0).sin();
            Ok(PieceCover { points, pad })
        }
    }
}

/// Exact image diameter of a single atom slice.
fn piece_diameter(atom: &PathAtom, s: &Rat, e: &Rat) -> Result<f64, PathError> {
    match &atom.carrier {
        Carrier::Const(_) => Ok(0.0),
        Carrier::Segment { from, to } => {
            let (u0, u1) = atom.param_range(s, e)?;
            let du = rat::to_f64(&(&u1 - &u0));
            Ok(from.dist(to) * du)
        }
        Carrier::Arc {
            radius,
            angle_from,
            angle_to,
            ..
        } => {
            let (u0, u1) = atom.param_range(s, e)?;
            let sweep = rat::to_f64(&(&u1 - &u0)) * (angle_to - angle_from).abs();
            if sweep >= std::f64::consts::PI {
                Ok(2.0 * radius)
            } else {
                Ok(2.0 * radius * (sweep / 2.0).sin())
            }
        }
    }
}

/// Upper bound on the diameter of `path(I)`, exact for constant and segment
/// pieces and within an explicit sampling pad for arcs.
pub fn diameter_on(path: &SymbolicPath, span: &Interval) -> Result<f64, PathError> {
    let lo = rat::max_rat(span.lo.clone(), rat::zero());
    let hi = rat::min_rat(span.hi.clone(), rat::one());
    if lo >= hi {
        return Ok(0.0);
    }
    let mut covers: Vec<PieceCover> = Vec::new();
    let mut best: f64 = 0.0;
    for atom in &path.atoms {
        let s = rat::max_rat(atom.dom.lo.clone(), lo.clone());
        let e = rat::min_rat(atom.dom.hi.clone(), hi.clone());
        if s >= e {
            continue;
        }
        best = best.max(piece_diameter(atom, &s, &e)?);
        covers.push(piece_cover(atom, &s, &e)?);
    }
    for i in 0..covers.len() {
        for j in i + 1..covers.len() {
            let mut cross: f64 = 0.0;
            for p in &covers[i].points {
                for q in &covers[j].points {
                    cross = cross.max(p.dist(q));
                }
            }
            best = best.max(cross + covers[i].pad + covers[j].pad);
        }
    }
    Ok(best)
}

struct Cell {
    t0: Rat,
    t1: Rat,
    d0: f64,
    d1: f64,
    ai: usize,
    bi: usize,
    exact: bool,
    upper: f64,
}

struct HeapCell(Cell);

impl PartialEq for HeapCell {
    fn eq(&self, other: &Self) -> bool {
        self.0.upper == other.0.upper
    }
}
impl Eq for HeapCell {}
impl PartialOrd for HeapCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapCell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .upper
            .partial_cmp(&other.0.upper)
            .unwrap_or(Ordering::Equal)
    }
}

fn affine_in_shared_warp(a: &PathAtom, b: &PathAtom) -> bool {
    a.carrier.is_affine() && b.carrier.is_affine() && a.warp == b.warp
}

/// Exact sup of `d(p, arc(θ))` over the arc slice: the distance is monotone
/// in `cos(θ - φ)`, so the sup sits at an endpoint or at the angle `φ + π`
/// pointing away from `p`.
fn const_vs_arc_sup(p: Point2, atom: &PathAtom, t0: &Rat, t1: &Rat) -> Result<f64, PathError> {
    if let Carrier::Arc {
        center,
        radius,
        angle_from,
        angle_to,
    } = &atom.carrier
    {
        let (u0, u1) = atom.param_range(t0, t1)?;
        let a0 = angle_from + rat::to_f64(&u0) * (angle_to - angle_from);
        let a1 = angle_from + rat::to_f64(&u1) * (angle_to - angle_from);
        let (lo, hi) = (a0.min(a1), a0.max(a1));
        let mut best = p
            .dist(&atom.eval(t0)?)
            .max(p.dist(&atom.eval(t1)?));
        let rvec = p.dist(center);
        if rvec > 0.0 {
            let phi = (p.y - center.y).atan2(p.x - center.x);
            let far = phi + std::f64::consts::PI;
            // bring far into [lo, hi] modulo full turns
            for k in [-2.0, -1.0, 0.0, 1.0, 2.0] {
                let cand = far + k * std::f64::consts::TAU;
                if cand >= lo && cand <= hi {
                    best = best.max(rvec + radius);
                }
            }
        } else {
            best = best.max(*radius);
        }
        Ok(best)
    } else {
        unreachable!("caller checks the carrier")
    }
}

fn make_cell(
    p: &SymbolicPath,
    q: &SymbolicPath,
    t0: Rat,
    t1: Rat,
    ai: usize,
    bi: usize,
    d0: f64,
    d1: f64,
) -> Result<Cell, PathError> {
    let a = &p.atoms[ai];
    let b = &q.atoms[bi];
    let a_const = a.is_const_on(&t0, &t1)?;
    let b_const = b.is_const_on(&t0, &t1)?;
    let mut arc_sup = None;
    if a_const && matches!(b.carrier, Carrier::Arc { .. }) {
        arc_sup = Some(const_vs_arc_sup(p.eval(&t0)?, b, &t0, &t1)?);
    } else if b_const && matches!(a.carrier, Carrier::Arc { .. }) {
        arc_sup = Some(const_vs_arc_sup(q.eval(&t0)?, a, &t0, &t1)?);
    }
    let exact = arc_sup.is_some()
        || affine_in_shared_warp(a, b)
        || (a_const && b.carrier.is_affine())
        || (b_const && a.carrier.is_affine())
        || (a_const && b_const);
    let upper = if let Some(s) = arc_sup {
        s.max(d0).max(d1)
    } else if exact {
        d0.max(d1)
    } else {
        d0.min(d1) + piece_diameter(a, &t0, &t1)? + piece_diameter(b, &t0, &t1)?
    };
    Ok(Cell {
        t0,
        t1,
        d0,
        d1,
        ai,
        bi,
        exact,
        upper,
    })
}

fn base_grid(p: &SymbolicPath, q: &SymbolicPath, samples: usize) -> Vec<Rat> {
    let mut grid: Vec<Rat> = Vec::new();
    for a in &p.atoms {
        grid.push(a.dom.lo.clone());
    }
    for b in &q.atoms {
        grid.push(b.dom.lo.clone());
    }
    grid.push(rat::one());
    grid.sort();
    grid.dedup();
    if samples > 0 {
        let mut extra = Vec::new();
        for w in grid.windows(2) {
            let width = &w[1] - &w[0];
            for k in 1..=samples {
                extra.push(&w[0] + &width * rat::rat(k as i64, samples as i64 + 1));
            }
        }
        grid.extend(extra);
        grid.sort();
        grid.dedup();
    }
    grid
}

/// `(lower, upper)` sandwich of the sup-distance using a fixed refinement
/// grid of all atom endpoints plus `samples` interior points per cell.
pub fn sup_distance(
    p: &SymbolicPath,
    q: &SymbolicPath,
    samples: usize,
) -> Result<(f64, f64), PathError> {
    sup_distance_impl(p, q, samples, 0.0, 0)
}

/// Like [`sup_distance`] but keeps bisecting the worst inexact cells until
/// `upper - lower <= pad_goal` or the cell budget is spent.
pub fn sup_distance_refined(
    p: &SymbolicPath,
    q: &SymbolicPath,
    pad_goal: f64,
    max_extra_cells: usize,
) -> Result<(f64, f64), PathError> {
    sup_distance_impl(p, q, 1, pad_goal, max_extra_cells)
}

fn sup_distance_impl(
    p: &SymbolicPath,
    q: &SymbolicPath,
    samples: usize,
    pad_goal: f64,
    max_extra_cells: usize,
) -> Result<(f64, f64), PathError> {
    let grid = base_grid(p, q, samples);
    let mut lower: f64 = 0.0;
    let mut heap: BinaryHeap<HeapCell> = BinaryHeap::new();
    let mut prev_t: Option<(Rat, f64)> = None;
    for t in &grid {
        let d = p.eval(t)?.dist(&q.eval(t)?);
        lower = lower.max(d);
        if let Some((t0, d0)) = prev_t.take() {
            let ai = p.atom_index_at(&t0)?;
            let bi = q.atom_index_at(&t0)?;
            // atom_index_at finds the leftmost atom; step past a shared boundary
            let ai = if p.atoms[ai].dom.hi == t0 { ai + 1 } else { ai };
            let bi = if q.atoms[bi].dom.hi == t0 { bi + 1 } else { bi };
            heap.push(HeapCell(make_cell(
                p,
                q,
                t0,
                t.clone(),
                ai.min(p.atoms.len() - 1),
                bi.min(q.atoms.len() - 1),
                d0,
                d,
            )?));
        }
        prev_t = Some((t.clone(), d));
    }
    let mut budget = max_extra_cells;
    let mut parked: Vec<f64> = Vec::new();
    while let Some(HeapCell(cell)) = heap.pop() {
        if cell.exact || cell.upper <= lower + pad_goal || budget == 0 {
            parked.push(cell.upper);
            continue;
        }
        budget -= 1;
        let mid = rat::midpoint(&cell.t0, &cell.t1);
        let dm = p.eval(&mid)?.dist(&q.eval(&mid)?);
        lower = lower.max(dm);
        heap.push(HeapCell(make_cell(
            p,
            q,
            cell.t0.clone(),
            mid.clone(),
            cell.ai,
            cell.bi,
            cell.d0,
            dm,
        )?));
        heap.push(HeapCell(make_cell(
            p, q, mid, cell.t1, cell.ai, cell.bi, dm, cell.d1,
        )?));
    }
    let mut upper = lower;
    for u in parked {
        upper = upper.max(u);
    }
    Ok((lower, upper))
}
