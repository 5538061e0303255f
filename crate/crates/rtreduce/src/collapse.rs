//! Collapsing maps and light parts.
//!
//! A collapsing map squashes the closure of each locally-constant component
//! to a point and is injective elsewhere; composing the induced light path
//! with it reproduces the original path. Two constructions are provided:
//!
//! * [`collapse_on`] / [`collapse_to_light`] — the canonical depth-truncated
//!   collapse: plateau outputs are dyadic rationals assigned by enumerating
//!   components by non-increasing length (ties leftmost) and splitting the
//!   dyadic slot between already-assigned neighbors; the result is piecewise
//!   linear.
//! * [`collapse_full`] — the exact symbolic collapse flat on *every* flat of
//!   the path; the collapse reuses the atom warps themselves and the light
//!   part is affine-only. Used by the dendrite tower, where bonding maps
//!   between two full collapses become exactly piecewise linear.

use crate::interval::Interval;
use crate::lc::{self, LcError};
use crate::path::{Carrier, PathAtom, PathError, SymbolicPath};
use crate::pl::PlMap;
use crate::rat::{self, Rat};
use crate::warp::{MonotoneWarp, WarpChain, WarpError, WarpPiece, WarpStep};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CollapseError {
    #[error("cannot collapse a constant path")]
    ConstantPath,
    #[error("component {0} is not flat on its closure")]
    NotFlat(usize),
    #[error("components must be sorted with pairwise disjoint closures")]
    BadComponents,
    #[error("path: {0}")]
    Path(#[from] PathError),
    #[error("lc: {0}")]
    Lc(#[from] LcError),
    #[error("warp: {0}")]
    Warp(#[from] WarpError),
}

/// A path together with a collapsing map onto its light part.
#[derive(Debug, Clone, PartialEq)]
pub struct CollapsedPath {
    pub collapse: MonotoneWarp,
    pub light: SymbolicPath,
}

/// Canonical dyadic plateau values: components enumerated by non-increasing
/// length (leftmost first on ties), each assigned the midpoint of the dyadic
/// slot between its already-assigned neighbors.
pub fn canonical_plateau_values(components: &[Interval]) -> Vec<Rat> {
    let mut order: Vec<usize> = (0..components.len()).collect();
    order.sort_by(|&i, &j| {
        components[j]
            .length()
            .cmp(&components[i].length())
            .then(components[i].lo.cmp(&components[j].lo))
    });
    // assigned: left endpoint -> (index, value)
    let mut assigned: BTreeMap<Rat, (usize, Rat)> = BTreeMap::new();
    let mut values = vec![rat::zero(); components.len()];
    for &i in &order {
        let c = &components[i];
        let below = assigned
            .range(..c.lo.clone())
            .next_back()
            .map(|(_, (_, v))| v.clone());
        let above = assigned
            .range(c.lo.clone()..)
            .next()
            .map(|(_, (_, v))| v.clone());
        let v = if c.lo == rat::zero() {
            rat::zero()
        } else if c.hi == rat::one() {
            rat::one()
        } else {
            rat::midpoint(
                &below.unwrap_or_else(rat::zero),
                &above.unwrap_or_else(rat::one),
            )
        };
        values[i] = v.clone();
        assigned.insert(c.lo.clone(), (i, v));
    }
    values
}

/// Collapses the given flat components (sorted, disjoint closures) with the
/// canonical dyadic plateau values; the collapse is piecewise linear and the
/// light part keeps the original warp structure on the surviving blocks.
pub fn collapse_on(
    path: &SymbolicPath,
    components: &[Interval],
) -> Result<CollapsedPath, CollapseError> {
    for w in components.windows(2) {
        if w[0].hi >= w[1].lo {
            return Err(CollapseError::BadComponents);
        }
    }
    for (i, c) in components.iter().enumerate() {
        if !flat_on(path, &c.lo, &c.hi)? {
            return Err(CollapseError::NotFlat(i));
        }
    }
    if components.len() == 1
        && components[0].lo == rat::zero()
        && components[0].hi == rat::one()
    {
        return Err(CollapseError::ConstantPath);
    }
    let values = canonical_plateau_values(components);

    // breakpoints of the PL collapse
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    if components.first().map(|c| c.lo.clone()) != Some(rat::zero()) {
        pts.push((rat::zero(), rat::zero()));
    }
    for (c, v) in components.iter().zip(values.iter()) {
        pts.push((c.lo.clone(), v.clone()));
        pts.push((c.hi.clone(), v.clone()));
    }
    if components.last().map(|c| c.hi.clone()) != Some(rat::one()) {
        pts.push((rat::one(), rat::one()));
    }
    let k = PlMap::new(pts).map_err(WarpError::from)?;

    // light path: surviving blocks re-based to collapsed coordinates
    let mut light_atoms: Vec<PathAtom> = Vec::new();
    let mut cursor = rat::zero();
    let mut kcursor = rat::zero();
    for (c, v) in components.iter().zip(values.iter()) {
        if cursor < c.lo {
            light_atoms.extend(rebased_block(path, &cursor, &c.lo, &kcursor, v));
        }
        cursor = c.hi.clone();
        kcursor = v.clone();
    }
    if cursor < rat::one() {
        light_atoms.extend(rebased_block(path, &cursor, &rat::one(), &kcursor, &rat::one()));
    }
    let light = SymbolicPath::new(light_atoms)?;
    let collapse = MonotoneWarp::new(vec![WarpPiece {
        dom: Interval::unit(),
        chain: WarpChain::new(vec![WarpStep::Pl(k)])?,
    }])?;
    Ok(CollapsedPath { collapse, light })
}

fn rebased_block(
    path: &SymbolicPath,
    lo: &Rat,
    hi: &Rat,
    klo: &Rat,
    khi: &Rat,
) -> Vec<PathAtom> {
    debug_assert!(lo < hi && klo < khi);
    let slices = path.restrict_atoms(lo, hi);
    let span = hi - lo;
    slices
        .into_iter()
        .map(|a| {
            let nlo = klo + (&a.dom.lo - lo) / &span * (khi - klo);
            let nhi = klo + (&a.dom.hi - lo) / &span * (khi - klo);
            a.with_dom(Interval::closed(nlo, nhi))
        })
        .collect()
}

fn flat_on(path: &SymbolicPath, lo: &Rat, hi: &Rat) -> Result<bool, PathError> {
    let mut value: Option<crate::geom::Point2> = None;
    for atom in &path.atoms {
        let a = rat::max_rat(atom.dom.lo.clone(), lo.clone());
        let b = rat::min_rat(atom.dom.hi.clone(), hi.clone());
        if a >= b {
            continue;
        }
        if !atom.is_const_on(&a, &b)? {
            return Ok(false);
        }
        let v = atom.eval(&a)?;
        match value {
            Some(w) if w.dist(&v) > crate::JUNCTION_TOL => return Ok(false),
            _ => value = Some(v),
        }
    }
    Ok(true)
}

/// The canonical depth-truncated collapse over the enumerated components.
pub fn collapse_to_light(path: &SymbolicPath, depth: u32) -> Result<CollapsedPath, CollapseError> {
    let dec = lc::lc_components(path, depth, &Interval::unit())?;
    let spans: Vec<Interval> = dec.components.iter().map(|c| c.span.clone()).collect();
    if spans.len() == 1 && spans[0].lo == rat::zero() && spans[0].hi == rat::one() {
        return Err(CollapseError::ConstantPath);
    }
    collapse_on(path, &spans)
}

/// The exact symbolic collapse: flat on every locally-constant component at
/// every depth. Each atom's own warp becomes the collapse on its span, and
/// the light part is a pure affine re-sweep of each carrier.
pub fn collapse_full(path: &SymbolicPath) -> Result<CollapsedPath, CollapseError> {
    // output spans proportional to domain length over non-constant atoms
    let total: Rat = path
        .atoms
        .iter()
        .filter(|a| !matches!(a.carrier, Carrier::Const(_)))
        .map(|a| a.dom.length())
        .fold(rat::zero(), |acc, l| acc + l);
    if total == rat::zero() {
        return Err(CollapseError::ConstantPath);
    }
    let mut pieces: Vec<WarpPiece> = Vec::new();
    let mut light_atoms: Vec<PathAtom> = Vec::new();
    let mut out_cursor = rat::zero();
    for atom in &path.atoms {
        if matches!(atom.carrier, Carrier::Const(_)) {
            // collapsed to a point: constant piece
            let v = out_cursor.clone();
            pieces.push(WarpPiece {
                dom: atom.dom.clone(),
                chain: WarpChain::new(vec![WarpStep::Pl(PlMap::affine(
                    atom.dom.lo.clone(),
                    atom.dom.hi.clone(),
                    v.clone(),
                    v,
                ))])?,
            });
            continue;
        }
        let o0 = out_cursor.clone();
        let o1 = &o0 + atom.dom.length() / &total;
        let (w0, w1) = (atom.warp_at(&atom.dom.lo)?, atom.warp_at(&atom.dom.hi)?);
        debug_assert!(w0 < w1, "non-constant atom must sweep its carrier");
        // collapse piece: the atom's own warp rescaled onto [o0, o1]
        let mut steps = atom.warp.steps.clone();
        steps.push(WarpStep::Pl(PlMap::affine(
            w0.clone(),
            w1.clone(),
            o0.clone(),
            o1.clone(),
        )));
        pieces.push(WarpPiece {
            dom: atom.dom.clone(),
            chain: WarpChain::new(steps)?,
        });
        // light atom: affine re-sweep of the carrier over [o0, o1]
        light_atoms.push(PathAtom {
            dom: Interval::closed(o0.clone(), o1.clone()),
            carrier: atom.carrier.clone(),
            warp: WarpChain::new(vec![WarpStep::Pl(PlMap::affine(
                o0,
                o1.clone(),
                w0,
                w1,
            ))])?,
            reversed: atom.reversed,
        });
        out_cursor = o1;
    }
    let collapse = MonotoneWarp::new(pieces)?;
    let light = SymbolicPath::new(light_atoms)?;
    Ok(CollapsedPath { collapse, light })
}

/// Grid check that `light(collapse(t))` reproduces the path within `tol`.
pub fn verify_collapse(
    path: &SymbolicPath,
    cp: &CollapsedPath,
    grid: usize,
    tol: f64,
) -> Result<f64, CollapseError> {
    let mut worst: f64 = 0.0;
    for i in 0..=grid {
        let t = rat::rat(i as i64, grid as i64);
        let s = cp.collapse.eval(&t, crate::path::TAU_DEPTH)?;
        let lhs = cp.light.eval(&s)?;
        let rhs = path.eval(&t)?;
        worst = worst.max(lhs.dist(&rhs));
    }
    if worst > tol {
        return Err(CollapseError::NotFlat(usize::MAX));
    }
    Ok(worst)
}
