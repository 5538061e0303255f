//! Staggering of Cantor-style paths.
//!
//! Two paths are staggered on a window when their locally-constant sets
//! jointly cover it. This module selects interleaved component families,
//! builds the small piecewise-linear homeomorphism that staggers a family
//! against its own image, perturbs one path of a pair so the pair becomes
//! staggered, and emits covering certificates that an independent checker
//! re-verifies by exact interval arithmetic.

use crate::interval::Interval;
use crate::lc::{self, LcComponent, LcError};
use crate::metric::{diameter_on, sup_distance_refined};
use crate::path::{PathError, SymbolicPath};
use crate::pl::PlMap;
use crate::rat::{self, Rat};
use crate::window::CoreWindow;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StaggerError {
    #[error("no interleaving exists at depth {depth}; refine and retry")]
    DepthInsufficient { depth: u32 },
    #[error("families are not staggered on the window (uncovered near {0})")]
    NotStaggered(String),
    #[error("epsilon must be positive")]
    BadEpsilon,
    #[error("perturbation failed to reach the required closeness: {got} >= {want}")]
    PerturbationTooLarge { got: f64, want: f64 },
    #[error("path: {0}")]
    Path(#[from] PathError),
    #[error("lc: {0}")]
    Lc(#[from] LcError),
    #[error("pl: {0}")]
    Pl(#[from] crate::pl::PlError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Owner {
    First,
    Second,
}

/// One certificate entry: a closed block contained in an open interval on
/// which the owner path is constant.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverEntry {
    pub block: Interval,
    pub component: Interval,
    pub owner: Owner,
}

/// Finite witness that the flat sets of two paths jointly cover a window.
#[derive(Debug, Clone, PartialEq)]
pub struct StaggeringCertificate {
    pub window: Interval,
    /// Open intervals on which the owner is constant.
    pub opens: Vec<(Interval, Owner)>,
    /// Closed blocks covered through an enclosing flat of the owner.
    pub blocks: Vec<CoverEntry>,
}

#[derive(Debug, Error, PartialEq)]
pub enum CertificateError {
    #[error("entry {0}: owner path is not constant on the stated interval")]
    NotFlat(usize),
    #[error("entry {0}: block is not contained in its covering component")]
    NotContained(usize),
    #[error("window not covered: gap at {0}")]
    Uncovered(String),
    #[error("path: {0}")]
    Path(#[from] PathError),
}

fn path_flat_on(path: &SymbolicPath, span: &Interval) -> Result<bool, PathError> {
    let lo = rat::max_rat(span.lo.clone(), rat::zero());
    let hi = rat::min_rat(span.hi.clone(), rat::one());
    if lo >= hi {
        return Ok(true);
    }
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

/// Construction-blind re-verification of a staggering certificate: exact
/// flatness of every stated interval for its owner, exact containment of
/// blocks, and an exact sweep showing the window is covered.
pub fn check_certificate(
    first: &SymbolicPath,
    second: &SymbolicPath,
    cert: &StaggeringCertificate,
) -> Result<(), CertificateError> {
    let owner_path = |o: Owner| match o {
        Owner::First => first,
        Owner::Second => second,
    };
    let mut pieces: Vec<(Interval, bool)> = Vec::new(); // (span, closed_block)
    for (i, (span, owner)) in cert.opens.iter().enumerate() {
        if !path_flat_on(owner_path(*owner), &span.closure())? {
            return Err(CertificateError::NotFlat(i));
        }
        pieces.push((span.clone(), false));
    }
    for (i, entry) in cert.blocks.iter().enumerate() {
        let idx = cert.opens.len() + i;
        if !path_flat_on(owner_path(entry.owner), &entry.component.closure())? {
            return Err(CertificateError::NotFlat(idx));
        }
        if !entry.block.contained_in(&entry.component) {
            return Err(CertificateError::NotContained(idx));
        }
        pieces.push((entry.block.clone(), true));
    }
    // exact sweep over [window.lo, window.hi]
    pieces.sort_by(|a, b| a.0.lo.cmp(&b.0.lo));
    let mut x = cert.window.lo.clone();
    let mut incl = false; // whether x itself is covered
    for (span, closed) in &pieces {
        if span.hi < x || (span.hi == x && span.hi_open && !closed) {
            continue;
        }
        let starts_before = span.lo < x
            || (span.lo == x && (*closed || !span.lo_open || incl));
        if !starts_before {
            return Err(CertificateError::Uncovered(rat::format_rat(&x)));
        }
        if span.hi > x {
            x = span.hi.clone();
            incl = *closed || !span.hi_open;
        } else {
            incl = incl || (span.hi == x && (*closed || !span.hi_open));
        }
        if x > cert.window.hi || (x == cert.window.hi && incl) {
            return Ok(());
        }
    }
    Err(CertificateError::Uncovered(rat::format_rat(&x)))
}

/// Interleaved component families: `a[0..K]` from the first path, `c[0..=K]`
/// from the second, with `c[n]` containing the right endpoint of `a[n]` and
/// its left endpoint inside `a[n]`; `a[0]` sits in the left tail of the
/// window and `a[K-1]` starts at or beyond its right edge.
#[derive(Debug, Clone, PartialEq)]
pub struct InterleavedFamilies {
    pub a: Vec<LcComponent>,
    pub c: Vec<LcComponent>,
}

/// Selects interleaved families spanning the window by alternately bridging
/// component boundaries: the flat of the second path covering the current
/// first-path component end, then the flat of the first path covering that
/// one's end, and so on.
pub fn select_interleaved(
    first: &SymbolicPath,
    second: &SymbolicPath,
    window: &CoreWindow,
    depth: u32,
) -> Result<InterleavedFamilies, StaggerError> {
    let fail = || StaggerError::DepthInsufficient { depth };
    let u = &window.window.lo;
    let v = &window.window.hi;

    // first component: wholly inside the left tail (0, u)
    let mut a0 = lc::largest_component_within(first, &rat::zero(), u, depth)?.ok_or_else(fail)?;
    // its bridging flat of the second path must end inside it; push right
    // past any flat that swallows it
    let mut c0;
    loop {
        c0 = lc::component_containing(second, &a0.span.lo, depth)?.ok_or_else(fail)?;
        if c0.span.hi < a0.span.hi {
            break;
        }
        // the second path is flat across all of a0: restart from a first-path
        // component containing the end of that flat
        a0 = lc::component_containing(first, &c0.span.hi, depth)?.ok_or_else(fail)?;
        if a0.span.hi > *u {
            return Err(fail());
        }
    }
    let mut fam = InterleavedFamilies {
        a: vec![a0],
        c: vec![c0],
    };
    loop {
        let a_cur = fam.a.last().unwrap().clone();
        // bridge of the second path over the current first-component's end
        let c_next = lc::component_containing(second, &a_cur.span.hi, depth)?.ok_or_else(fail)?;
        if c_next.span.lo <= fam.c.last().unwrap().span.hi {
            // merged flats would break disjointness of the selection
            return Err(fail());
        }
        fam.c.push(c_next.clone());
        if fam.a.last().unwrap().span.lo >= *v {
            break;
        }
        let a_next = lc::component_containing(first, &c_next.span.hi, depth)?.ok_or_else(fail)?;
        if a_next.span.lo <= a_cur.span.hi {
            return Err(fail());
        }
        fam.a.push(a_next);
        if fam.a.len() > 4096 {
            return Err(fail());
        }
    }
    Ok(fam)
}

/// The staggering homeomorphism built on a family of disjoint open intervals
/// (a truncated gap family): returns the map plus the selection data needed
/// for certificates. Deviation from the identity is strictly below `eps`.
#[derive(Debug, Clone)]
pub struct StaggeredHomeo {
    pub f: PlMap,
    /// Selected carrier intervals `(a_n, b_n)` with their images
    /// `(A_n, B_n)`.
    pub carriers: Vec<(Interval, Interval)>,
    /// Selected straddle intervals `(c_n, d_n)` with images `(C_n, D_n)`.
    pub straddles: Vec<(Interval, Interval)>,
}

/// Builds the staggering homeomorphism from `family` (sorted open intervals
/// with disjoint closures). `find_straddle(lo, hi)` must return an interval
/// of the same flat family with closure strictly inside `(lo, hi)` when one
/// exists; by default the family itself is searched.
pub fn build_staggering_homeomorphism_with(
    family: &[Interval],
    eps: &Rat,
    window: &Interval,
    mut find_straddle: impl FnMut(&Rat, &Rat) -> Result<Option<Interval>, StaggerError>,
) -> Result<StaggeredHomeo, StaggerError> {
    if *eps <= rat::zero() {
        return Err(StaggerError::BadEpsilon);
    }
    let fail = || StaggerError::DepthInsufficient { depth: 0 };
    // structural margin keeps the strict inequality checkable downstream
    let eps_m = eps * rat::rat(15, 16);
    let gap_cap = &eps_m / rat::rat_int(3);

    // choose the spanning sequence I_1 < I_2 < ... with inter-gaps shorter
    // than gap_cap, each containing a straddle interval
    let first_idx = family
        .iter()
        .rposition(|c| c.lo < window.lo)
        .ok_or_else(fail)?;
    let mut selected: Vec<usize> = vec![first_idx];
    let mut straddle: Vec<Interval> = Vec::new();
    while family[*selected.last().unwrap()].hi <= window.hi {
        let last = *selected.last().unwrap();
        let cur_hi = family[last].hi.clone();
        let hi_bound = &cur_hi + &gap_cap;
        // walk candidates from the farthest admissible start backwards
        let mut chosen: Option<(usize, Interval)> = None;
        let upper = family.partition_point(|c| c.lo < hi_bound);
        for j in (last + 1..upper).rev() {
            if family[j].lo <= cur_hi {
                continue;
            }
            if let Some(s) = find_straddle(&cur_hi, &family[j].lo)? {
                chosen = Some((j, s));
                break;
            }
        }
        match chosen {
            Some((j, s)) => {
                straddle.push(s);
                selected.push(j);
            }
            None => return Err(fail()),
        }
    }
    if selected.len() < 2 {
        return Err(fail());
    }

    // subdivision offsets per selected interval
    let offsets: Vec<Rat> = selected
        .iter()
        .map(|&i| {
            let len = family[i].length();
            let third = &len / rat::rat_int(3);
            rat::min_rat((&eps_m / rat::rat_int(3)).clone(), third)
        })
        .collect();

    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    let a1 = &family[selected[0]].lo;
    let anchor_lo = a1 / rat::rat_int(2);
    if anchor_lo > rat::zero() {
        pts.push((rat::zero(), rat::zero()));
    }
    pts.push((anchor_lo.clone(), anchor_lo.clone()));
    for (pos, &i) in selected.iter().enumerate() {
        let iv = &family[i];
        let s = &offsets[pos];
        let cap_a = &iv.lo + s; // image of the interval start
        let cap_b = &iv.hi - s;
        pts.push((iv.lo.clone(), cap_a.clone()));
        pts.push((iv.hi.clone(), cap_b.clone()));
        if pos < straddle.len() {
            let j = &straddle[pos];
            let cap_c = &iv.hi - s / rat::rat_int(2);
            let next = &family[selected[pos + 1]];
            let s_next = &offsets[pos + 1];
            let cap_d = &next.lo + s_next / rat::rat_int(2);
            pts.push((j.lo.clone(), cap_c));
            pts.push((j.hi.clone(), cap_d));
        }
    }
    let b_last = &family[*selected.last().unwrap()].hi;
    let anchor_hi = b_last + (rat::one() - b_last) / rat::rat_int(2);
    pts.push((anchor_hi.clone(), anchor_hi.clone()));
    if anchor_hi < rat::one() {
        pts.push((rat::one(), rat::one()));
    }
    let f = PlMap::unit(pts)?;
    debug_assert!(f.is_homeomorphism());
    let dev = f.deviation_from_identity();
    if dev >= *eps {
        return Err(StaggerError::PerturbationTooLarge {
            got: rat::to_f64(&dev),
            want: rat::to_f64(eps),
        });
    }

    let mut carriers = Vec::new();
    for (pos, &i) in selected.iter().enumerate() {
        let iv = &family[i];
        let s = &offsets[pos];
        carriers.push((
            iv.clone(),
            Interval::open(&iv.lo + s, &iv.hi - s),
        ));
    }
    let mut straddles = Vec::new();
    for (pos, j) in straddle.iter().enumerate() {
        let c = &family[selected[pos]].hi - &offsets[pos] / rat::rat_int(2);
        let d = &family[selected[pos + 1]].lo + &offsets[pos + 1] / rat::rat_int(2);
        straddles.push((j.clone(), Interval::open(c, d)));
    }
    Ok(StaggeredHomeo {
        f,
        carriers,
        straddles,
    })
}

/// [`build_staggering_homeomorphism_with`] searching the family itself for
/// straddle intervals.
pub fn build_staggering_homeomorphism(
    family: &[Interval],
    eps: &Rat,
    window: &Interval,
) -> Result<StaggeredHomeo, StaggerError> {
    let fam: Vec<Interval> = family.to_vec();
    build_staggering_homeomorphism_with(family, eps, window, move |lo, hi| {
        Ok(fam
            .iter()
            .filter(|s| s.lo > *lo && s.hi < *hi)
            .max_by(|s1, s2| s1.length().cmp(&s2.length()))
            .cloned())
    })
}

/// Outcome of staggering a pair: the reparameterization, the moved first
/// path, and a covering certificate for `(moved, second)` on the window.
#[derive(Debug, Clone)]
pub struct StaggerOutcome {
    pub f: PlMap,
    pub moved: SymbolicPath,
    pub certificate: StaggeringCertificate,
}

/// Perturbs `first` by a homeomorphism `f` with deviation below `delta` so
/// that `first ∘ f` and `second` are staggered on the window, with
/// `sup-distance(first, first ∘ f) < eps`.
pub fn stagger_pair(
    first: &SymbolicPath,
    second: &SymbolicPath,
    eps: &Rat,
    delta: &Rat,
    window: &CoreWindow,
    depth: u32,
) -> Result<StaggerOutcome, StaggerError> {
    if *eps <= rat::zero() || *delta <= rat::zero() {
        return Err(StaggerError::BadEpsilon);
    }
    // modulus bound: find h with image diameters below eps/2 on all
    // 2h-blocks, so |s-t| <= h forces d(first(s), first(t)) < eps/2
    let eps_f = rat::to_f64(eps);
    let mut h = rat::half();
    let mut ok = false;
    for _ in 0..60 {
        if blocks_within(first, &h, eps_f * 0.4375)? {
            ok = true;
            break;
        }
        h /= rat::rat_int(2);
    }
    if !ok {
        return Err(StaggerError::DepthInsufficient { depth });
    }
    let dev_cap = rat::min_rat(h, delta * rat::rat(15, 16));

    // joint flat family at selection scale
    let fa = lc::lc_components_filtered(
        first,
        depth,
        &Interval::unit(),
        Some(&(&dev_cap / rat::rat_int(32))),
    )?;
    let fb = lc::lc_components_filtered(
        second,
        depth,
        &Interval::unit(),
        Some(&(&dev_cap / rat::rat_int(32))),
    )?;
    let joint = lc::intersect_components(&fa.components, &fb.components);
    // straddles may be arbitrarily small: query them locally and exactly
    let straddle_depth = depth.max(crate::depth_cap().min(depth + 12));
    let find = |lo: &Rat, hi: &Rat| -> Result<Option<Interval>, StaggerError> {
        let span = hi - lo;
        let min = &span / rat::rat_int(64);
        let ca = lc::lc_components_filtered(
            first,
            straddle_depth,
            &Interval::open(lo.clone(), hi.clone()),
            Some(&min),
        )?;
        let cb = lc::lc_components_filtered(
            second,
            straddle_depth,
            &Interval::open(lo.clone(), hi.clone()),
            Some(&min),
        )?;
        let joint = lc::intersect_components(&ca.components, &cb.components);
        Ok(joint
            .into_iter()
            .filter(|s| s.lo > *lo && s.hi < *hi)
            .max_by(|s1, s2| s1.length().cmp(&s2.length())))
    };
    let homeo = build_staggering_homeomorphism_with(&joint, &dev_cap, &window.window, find)?;
    let moved = first.reparameterize(&homeo.f)?;

    // verify the perturbation size against the requested bound
    let (_, upper) = sup_distance_refined(first, &moved, eps_f / 64.0, 4096)
        .map_err(StaggerError::from)?;
    if upper >= eps_f {
        return Err(StaggerError::PerturbationTooLarge {
            got: upper,
            want: eps_f,
        });
    }

    // certificate: the moved path is flat on preimages of selected carriers,
    // the second path on the joint members themselves
    let mut opens: Vec<(Interval, Owner)> = Vec::new();
    let mut blocks: Vec<CoverEntry> = Vec::new();
    let finv = homeo.f.invert()?;
    for (iv, _) in &homeo.carriers {
        opens.push((iv.clone(), Owner::Second));
    }
    for (j, _) in &homeo.straddles {
        opens.push((j.clone(), Owner::Second));
    }
    for (pos, (j, _)) in homeo.straddles.iter().enumerate() {
        let cur = &homeo.carriers[pos].0;
        let next = &homeo.carriers[pos + 1].0;
        // f maps [cur.hi, j.lo] into cur and [j.hi, next.lo] into next,
        // so the moved path is flat there
        let pre_cur = Interval::open(
            finv.eval(&cur.lo).map_err(StaggerError::from)?,
            finv.eval(&cur.hi).map_err(StaggerError::from)?,
        );
        let pre_next = Interval::open(
            finv.eval(&next.lo).map_err(StaggerError::from)?,
            finv.eval(&next.hi).map_err(StaggerError::from)?,
        );
        blocks.push(CoverEntry {
            block: Interval::closed(cur.hi.clone(), j.lo.clone()),
            component: pre_cur,
            owner: Owner::First,
        });
        blocks.push(CoverEntry {
            block: Interval::closed(j.hi.clone(), next.lo.clone()),
            component: pre_next,
            owner: Owner::First,
        });
    }
    let certificate = StaggeringCertificate {
        window: window.window.clone(),
        opens,
        blocks,
    };
    check_certificate(&moved, second, &certificate)
        .map_err(|e| StaggerError::NotStaggered(e.to_string()))?;
    Ok(StaggerOutcome {
        f: homeo.f,
        moved,
        certificate,
    })
}

/// True when every window of width `2h` has image diameter at most `cap`.
fn blocks_within(path: &SymbolicPath, h: &Rat, cap: f64) -> Result<bool, StaggerError> {
    let mut lo = rat::zero();
    while lo < rat::one() {
        let hi = rat::min_rat(&lo + h * rat::rat_int(2), rat::one());
        if diameter_on(path, &Interval::closed(lo.clone(), hi.clone()))? > cap {
            return Ok(false);
        }
        lo += h.clone();
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use crate::path::make_l_path;
    use crate::rat::{one, rat, zero};
    use crate::tau;
    use crate::window::refine_window;

    fn pt(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn homeomorphism_staggers_the_ternary_gaps() {
        // family: generation <= 3 gaps; a unit-scale epsilon
        let family = tau::tau_gaps(3);
        let window = Interval::closed(rat(1, 8), rat(7, 8));
        let homeo = build_staggering_homeomorphism(&family, &one(), &window).unwrap();
        assert!(homeo.f.is_homeomorphism());
        assert!(homeo.f.deviation_from_identity() < one());
        // grid cover oracle: every non-flat point of the window lies in a
        // selected gap, a straddle, or a block mapped into a gap by f
        let l = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let moved = l.reparameterize(&homeo.f).unwrap();
        for i in 0..=10_000 {
            let t = rat(i, 10_000);
            if t < window.lo || t > window.hi {
                continue;
            }
            let in_gap = family.iter().any(|g| g.contains(&t));
            let ft = homeo.f.eval(&t).unwrap();
            let moved_flat = family.iter().any(|g| g.contains(&ft));
            assert!(
                in_gap || moved_flat,
                "t = {i}/10000 not covered (f(t) = {})",
                rat::format_rat(&ft)
            );
        }
        drop(moved);
    }

    #[test]
    fn deviation_stays_below_eps_for_random_inputs() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for case in 0..50 {
            let depth = 3 + (next() % 3) as u32;
            let family = tau::tau_gaps(depth);
            let eps = rat(1 + (next() % 40) as i64, 40);
            let window = Interval::closed(rat(1, 10), rat(9, 10));
            match build_staggering_homeomorphism(&family, &eps, &window) {
                Ok(h) => {
                    assert!(
                        h.f.deviation_from_identity() < eps,
                        "case {case}: deviation >= eps"
                    );
                }
                Err(StaggerError::DepthInsufficient { .. }) => {
                    // admissible for coarse families against small eps
                }
                Err(e) => panic!("case {case}: {e}"),
            }
        }
    }

    #[test]
    fn pair_staggering_produces_valid_certificate() {
        let alpha = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let beta = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let w = refine_window(&[&alpha, &beta], 0.05, 24).unwrap();
        let out = stagger_pair(&alpha, &beta, &rat(1, 4), &rat(1, 4), &w, 8).unwrap();
        assert!(out.f.deviation_from_identity() < rat(1, 4));
        check_certificate(&out.moved, &beta, &out.certificate).unwrap();
        let (_, up) = sup_distance_refined(&alpha, &out.moved, 1e-4, 20_000).unwrap();
        assert!(up < 0.25, "perturbation {up} too large");
    }

    #[test]
    fn interleaved_selection_from_staggered_pair() {
        let alpha = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let beta = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let w = refine_window(&[&alpha, &beta], 0.05, 24).unwrap();
        let out = stagger_pair(&alpha, &beta, &rat(1, 4), &rat(1, 4), &w, 8).unwrap();
        let fam = select_interleaved(&out.moved, &beta, &w, 10).unwrap();
        assert!(fam.a.len() >= 2);
        assert_eq!(fam.c.len(), fam.a.len() + 1);
        // layout: c[n] contains the right end of a[n], left end inside a[n]
        for n in 0..fam.a.len() {
            let a = &fam.a[n];
            let c = &fam.c[n + 1];
            assert!(c.span.contains(&a.span.hi));
            assert!(c.span.lo > a.span.lo);
            if n > 0 {
                assert!(fam.c[n].span.hi > fam.a[n].span.lo);
                assert!(fam.c[n].span.hi < fam.a[n].span.hi);
            }
        }
        // boundary conditions relative to the window
        assert!(fam.a[0].span.hi <= w.window.lo);
        assert!(fam.a.last().unwrap().span.lo >= w.window.hi);
    }

    #[test]
    fn identical_families_cannot_stagger() {
        // a window shrunk to a single component: alternation impossible
        let family = vec![Interval::open(rat(1, 3), rat(2, 3))];
        let window = Interval::closed(rat(2, 5), rat(3, 5));
        assert!(matches!(
            build_staggering_homeomorphism(&family, &one(), &window),
            Err(StaggerError::DepthInsufficient { .. })
        ));
    }

    #[test]
    fn certificate_checker_rejects_corruption() {
        let alpha = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let beta = make_l_path(pt(0.0, 0.0), pt(1.0, 0.0));
        let w = refine_window(&[&alpha, &beta], 0.05, 24).unwrap();
        let out = stagger_pair(&alpha, &beta, &rat(1, 4), &rat(1, 4), &w, 8).unwrap();
        // corrupt: claim flatness on a moving interval
        let mut bad = out.certificate.clone();
        bad.opens[0].0 = Interval::open(zero(), one());
        assert!(matches!(
            check_certificate(&out.moved, &beta, &bad),
            Err(CertificateError::NotFlat(0))
        ));
        // corrupt: shift a block outside its component
        let mut bad = out.certificate.clone();
        if !bad.blocks.is_empty() {
            bad.blocks[0].block = Interval::closed(zero(), one());
            assert!(check_certificate(&out.moved, &beta, &bad).is_err());
        }
    }
}
