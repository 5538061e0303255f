//! Locally-constant structure of symbolic paths.
//!
//! A path is locally constant exactly where its warp is flat: on pullbacks of
//! the Cantor-function gaps, on plateaus of PL warp prefixes, and on constant
//! atoms. Enumeration is truncated by gap generation (`depth`) and optionally
//! by a minimum pulled-back length; flats touching atom boundaries are always
//! included so merging across junctions stays exact.

use crate::geom::Point2;
use crate::interval::Interval;
use crate::path::{Carrier, PathAtom, PathError, SymbolicPath};
use crate::pl::PlMap;
use crate::rat::{self, Rat};
use crate::tau;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LcError {
    #[error("path: {0}")]
    Path(#[from] PathError),
    #[error("depth must be at least 1")]
    BadDepth,
}

/// One maximal interval of local constancy (at the enumerated depth).
#[derive(Debug, Clone, PartialEq)]
pub struct LcComponent {
    pub span: Interval,
    pub value: Point2,
}

/// Enumerated locally-constant components inside a window.
#[derive(Debug, Clone, PartialEq)]
pub struct LcDecomposition {
    pub components: Vec<LcComponent>,
    pub depth: u32,
    pub window: Interval,
}

/// Closed flat spans of one atom, truncated at `depth`, pruned below
/// `min_len` and outside `clip`, with boundary-touching flats always
/// reported.
fn atom_flat_spans(
    atom: &PathAtom,
    depth: u32,
    min_len: Option<&Rat>,
    clip: Option<(&Rat, &Rat)>,
) -> Result<Vec<(Rat, Rat)>, PathError> {
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    if matches!(atom.carrier, Carrier::Const(_)) {
        out.push((atom.dom.lo.clone(), atom.dom.hi.clone()));
        return Ok(out);
    }
    let prefix = atom
        .warp
        .pre_tau_pl(&atom.dom.lo, &atom.dom.hi)
        .map_err(PathError::from)?;
    // plateaus of the PL prefix are flats regardless of a tau step
    for (a, b) in prefix.flat_spans() {
        out.push((a, b));
    }
    if atom.warp.tau_position().is_some() {
        let w_lo = prefix.eval(&atom.dom.lo)?;
        let w_hi = prefix.eval(&atom.dom.hi)?;
        // boundary-touching gaps, reported regardless of size
        for w in [&w_lo, &w_hi] {
            if let Some(cell) = tau::gap_containing(w, depth) {
                if let Some((a, b)) = prefix.preimage_open(&cell.span.lo, &cell.span.hi) {
                    out.push((a, b));
                }
            }
        }
        // recursive descent over the gap tree with pruning
        let mut stack = vec![(rat::zero(), rat::one(), 1u32)];
        while let Some((lo, hi, generation)) = stack.pop() {
            if generation > depth {
                continue;
            }
            if hi <= w_lo || lo >= w_hi {
                continue;
            }
            let node = match prefix.preimage_open(&lo, &hi) {
                Some(p) => p,
                None => continue,
            };
            if let Some(min) = min_len {
                if &(&node.1 - &node.0) < min {
                    continue;
                }
            }
            if let Some((clo, chi)) = clip {
                if &node.1 <= clo || &node.0 >= chi {
                    continue;
                }
            }
            let third = (&hi - &lo) / rat::rat_int(3);
            let ga = &lo + &third;
            let gb = &hi - &third;
            if let Some((a, b)) = prefix.preimage_open(&ga, &gb) {
                let keep = match min_len {
                    Some(min) => &(&b - &a) >= min,
                    None => true,
                };
                if keep {
                    out.push((a, b));
                }
            }
            stack.push((lo, ga, generation + 1));
            stack.push((gb, hi, generation + 1));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// All locally-constant components of generation `<= depth` meeting the
/// window, merged across atom junctions, in increasing order.
pub fn lc_components(
    path: &SymbolicPath,
    depth: u32,
    window: &Interval,
) -> Result<LcDecomposition, LcError> {
    lc_components_filtered(path, depth, window, None)
}

/// Like [`lc_components`] with a minimum-length prune; flats shorter than
/// `min_len` are skipped unless they touch an atom boundary.
pub fn lc_components_filtered(
    path: &SymbolicPath,
    depth: u32,
    window: &Interval,
    min_len: Option<&Rat>,
) -> Result<LcDecomposition, LcError> {
    if depth == 0 {
        return Err(LcError::BadDepth);
    }
    let mut spans: Vec<(Rat, Rat)> = Vec::new();
    for atom in &path.atoms {
        spans.extend(atom_flat_spans(
            atom,
            depth,
            min_len,
            Some((&window.lo, &window.hi)),
        )?);
    }
    spans.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(Rat, Rat)> = Vec::new();
    for (a, b) in spans {
        match merged.last_mut() {
            Some(last) if last.1 >= a => {
                if b > last.1 {
                    last.1 = b;
                }
            }
            _ => merged.push((a, b)),
        }
    }
    let mut components = Vec::new();
    for (a, b) in merged {
        if b <= window.lo || a >= window.hi {
            continue;
        }
        let lo_open = a != rat::zero();
        let hi_open = b != rat::one();
        let span = Interval::new(a.clone(), b.clone(), lo_open, hi_open);
        let value = path.eval(&span.midpoint())?;
        components.push(LcComponent { span, value });
    }
    Ok(LcDecomposition {
        components,
        depth,
        window: window.clone(),
    })
}

/// The component containing `t` (up to generation `depth`), extended across
/// junctions, or `None` when the path moves at `t`.
pub fn component_containing(
    path: &SymbolicPath,
    t: &Rat,
    depth: u32,
) -> Result<Option<LcComponent>, LcError> {
    let idx = path.atom_index_at(t)?;
    let base = match atom_flat_containing(&path.atoms[idx], t, depth)? {
        Some(span) => span,
        None => {
            // at a shared junction the other atom may own the flat
            if *t == path.atoms[idx].dom.lo && idx > 0 {
                match atom_flat_containing(&path.atoms[idx - 1], t, depth)? {
                    Some(span) => span,
                    None => return Ok(None),
                }
            } else {
                return Ok(None);
            }
        }
    };
    let (mut a, mut b) = base;
    // extend to the left across junctions
    loop {
        let i = path.atom_index_at(&a)?;
        if path.atoms[i].dom.lo < a || a == rat::zero() {
            break;
        }
        let left = if i > 0 && path.atoms[i].dom.lo == a {
            i - 1
        } else {
            break;
        };
        match atom_flat_containing_end(&path.atoms[left], &a, depth, true)? {
            Some((na, _)) if na < a => a = na,
            _ => break,
        }
    }
    // extend to the right
    loop {
        let i = path.atom_index_at(&b)?;
        let right = if path.atoms[i].dom.hi == b && i + 1 < path.atoms.len() {
            i + 1
        } else if path.atoms[i].dom.lo == b && path.atoms[i].dom.hi > b {
            i
        } else {
            break;
        };
        match atom_flat_containing_end(&path.atoms[right], &b, depth, false)? {
            Some((_, nb)) if nb > b => b = nb,
            _ => break,
        }
    }
    let lo_open = a != rat::zero();
    let hi_open = b != rat::one();
    if a >= b {
        return Ok(None);
    }
    let span = Interval::new(a, b, lo_open, hi_open);
    let value = path.eval(&span.midpoint())?;
    Ok(Some(LcComponent { span, value }))
}

/// The closed flat span of `atom` containing `t`, if any (interior query).
fn atom_flat_containing(
    atom: &PathAtom,
    t: &Rat,
    depth: u32,
) -> Result<Option<(Rat, Rat)>, LcError> {
    if *t < atom.dom.lo || *t > atom.dom.hi {
        return Ok(None);
    }
    if matches!(atom.carrier, Carrier::Const(_)) {
        return Ok(Some((atom.dom.lo.clone(), atom.dom.hi.clone())));
    }
    let prefix = atom
        .warp
        .pre_tau_pl(&atom.dom.lo, &atom.dom.hi)
        .map_err(PathError::from)?;
    for (a, b) in prefix.flat_spans() {
        if &a <= t && t <= &b {
            return Ok(Some(flat_hull(atom, &prefix, (a, b), depth)?));
        }
    }
    if atom.warp.tau_position().is_some() {
        let w = prefix.eval(t).map_err(PathError::from)?;
        if let Some(cell) = tau::gap_containing(&w, depth) {
            if let Some((a, b)) = prefix.preimage_open(&cell.span.lo, &cell.span.hi) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Extends a flat hull when a PL plateau maps into a gap interior.
fn flat_hull(
    atom: &PathAtom,
    prefix: &PlMap,
    span: (Rat, Rat),
    depth: u32,
) -> Result<(Rat, Rat), LcError> {
    if atom.warp.tau_position().is_some() {
        let w = prefix.eval(&span.0).map_err(PathError::from)?;
        if let Some(cell) = tau::gap_containing(&w, depth) {
            if let Some((a, b)) = prefix.preimage_open(&cell.span.lo, &cell.span.hi) {
                return Ok((rat::min_rat(a, span.0), rat::max_rat(b, span.1)));
            }
        }
    }
    Ok(span)
}

/// The flat span of `atom` touching the given end (`left_end = true` means
/// the flat must end at `t`, i.e. extend leftward from it).
fn atom_flat_containing_end(
    atom: &PathAtom,
    t: &Rat,
    depth: u32,
    left_end: bool,
) -> Result<Option<(Rat, Rat)>, LcError> {
    if matches!(atom.carrier, Carrier::Const(_)) {
        return Ok(Some((atom.dom.lo.clone(), atom.dom.hi.clone())));
    }
    let prefix = atom
        .warp
        .pre_tau_pl(&atom.dom.lo, &atom.dom.hi)
        .map_err(PathError::from)?;
    for (a, b) in prefix.flat_spans() {
        if (left_end && b == *t) || (!left_end && a == *t) {
            return Ok(Some(flat_hull(atom, &prefix, (a, b), depth)?));
        }
    }
    if atom.warp.tau_position().is_some() {
        let w = prefix.eval(t).map_err(PathError::from)?;
        if let Some(cell) = tau::gap_containing(&w, depth) {
            if let Some((a, b)) = prefix.preimage_open(&cell.span.lo, &cell.span.hi) {
                if (left_end && b >= *t) || (!left_end && a <= *t) {
                    return Ok(Some((a, b)));
                }
            }
        }
    }
    Ok(None)
}

/// The longest component whose closure lies inside the open interval
/// `(lo, hi)`, at the given depth.
pub fn largest_component_within(
    path: &SymbolicPath,
    lo: &Rat,
    hi: &Rat,
    depth: u32,
) -> Result<Option<LcComponent>, LcError> {
    if lo >= hi {
        return Ok(None);
    }
    let window = Interval::open(lo.clone(), hi.clone());
    let dec = lc_components(path, depth, &window)?;
    let mut best: Option<LcComponent> = None;
    for c in dec.components {
        if &c.span.lo > lo && &c.span.hi < hi {
            let better = match &best {
                Some(b) => c.span.length() > b.span.length(),
                None => true,
            };
            if better {
                best = Some(c);
            }
        }
    }
    Ok(best)
}

/// Why an atom passes Cantor-path certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomReason {
    ConstantAtom,
    CantorTimed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CantorCertificate {
    pub reasons: Vec<AtomReason>,
    pub depth: u32,
}

#[derive(Debug, Error, PartialEq)]
pub enum CantorRejection {
    #[error("constant paths are not Cantor paths")]
    ConstantPath,
    #[error("atom {0} has no Cantor time step, so its flat set is not dense")]
    NoCantorStep(usize),
    #[error("atom {0} has a warp prefix that is not strictly increasing")]
    FlatWarpPrefix(usize),
    #[error("path is locally constant at endpoint {0}")]
    LocallyConstantAtEndpoint(u8),
    #[error("path error: {0}")]
    Path(String),
}

/// Accepts iff every atom is constant or Cantor-timed with an injective
/// prefix, the path is non-constant, and no flat reaches an endpoint of
/// `[0,1]`; the certificate records the per-atom reasons.
pub fn certify_cantor_path(
    path: &SymbolicPath,
    depth: u32,
) -> Result<CantorCertificate, CantorRejection> {
    let wrap = |e: PathError| CantorRejection::Path(e.to_string());
    let mut reasons = Vec::with_capacity(path.atoms.len());
    let mut seen_nonconst = false;
    for (i, atom) in path.atoms.iter().enumerate() {
        if matches!(atom.carrier, Carrier::Const(_)) {
            reasons.push(AtomReason::ConstantAtom);
            continue;
        }
        seen_nonconst = true;
        if atom.warp.tau_position().is_none() {
            return Err(CantorRejection::NoCantorStep(i));
        }
        let prefix = atom
            .warp
            .pre_tau_pl(&atom.dom.lo, &atom.dom.hi)
            .map_err(PathError::from)
            .map_err(wrap)?;
        if !prefix.is_homeomorphism() {
            return Err(CantorRejection::FlatWarpPrefix(i));
        }
        reasons.push(AtomReason::CantorTimed);
    }
    if !seen_nonconst {
        return Err(CantorRejection::ConstantPath);
    }
    let lc_err = |e: LcError| CantorRejection::Path(e.to_string());
    if component_containing(path, &rat::zero(), depth)
        .map_err(lc_err)?
        .is_some()
    {
        return Err(CantorRejection::LocallyConstantAtEndpoint(0));
    }
    if component_containing(path, &rat::one(), depth)
        .map_err(lc_err)?
        .is_some()
    {
        return Err(CantorRejection::LocallyConstantAtEndpoint(1));
    }
    Ok(CantorCertificate { reasons, depth })
}

/// Exact intersection of two sorted component lists (open spans).
pub fn intersect_components(a: &[LcComponent], b: &[LcComponent]) -> Vec<Interval> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if let Some(x) = a[i].span.intersect(&b[j].span) {
            if !x.is_degenerate() {
                out.push(x);
            }
        }
        if a[i].span.hi <= b[j].span.hi {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}
