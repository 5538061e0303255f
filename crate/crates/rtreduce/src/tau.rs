//! The ternary Cantor function, evaluated exactly on rationals.

use crate::interval::Interval;
use crate::rat::{self, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TauError {
    #[error("argument {0} outside [0,1]")]
    Domain(String),
    #[error("ternary expansion did not resolve within {0} digits")]
    DepthExhausted(u32),
}

/// Evaluates the Cantor function at a rational exactly.
///
/// Ternary digits are extracted until either a digit 1 appears (the value is
/// then a dyadic rational), the remainder terminates, or the remainder state
/// repeats; a repeating state closes an eventually-periodic expansion whose
/// value is summed exactly as a geometric series. `depth` caps the number of
/// digits examined; every rational resolves once `depth` exceeds its
/// pre-period plus period.
pub fn tau_eval(t: &Rat, depth: u32) -> Result<Rat, TauError> {
    if t.is_negative() || *t > rat::one() {
        return Err(TauError::Domain(rat::format_rat(t)));
    }
    let three = rat::rat_int(3);
    // seen: remainder -> (digit index, partial binary value at that index)
    let mut seen: HashMap<Rat, (u32, Rat)> = HashMap::new();
    let mut r = t.clone();
    let mut value = rat::zero();
    let mut weight = rat::half();
    for k in 0..depth {
        if r.is_zero() {
            return Ok(value);
        }
        if r == rat::one() {
            // all-2 tail halves to an all-1 binary tail, contributing 2^-k
            return Ok(value + weight * rat::rat_int(2));
        }
        if let Some((j, vj)) = seen.get(&r) {
            // digits j..k repeat forever
            let p = k - j;
            let cycle = &value - vj;
            let denom = rat::one() - rat::dyadic(1, p);
            return Ok(vj + cycle / denom);
        }
        seen.insert(r.clone(), (k, value.clone()));
        let scaled = &r * &three;
        let digit = scaled.floor();
        let d = digit.numer().clone();
        r = scaled - Rat::from_integer(digit.numer().clone());
        if d == BigInt::one() {
            return Ok(value + weight);
        }
        if d == BigInt::from(2) {
            value += &weight;
        }
        weight /= rat::rat_int(2);
    }
    if r.is_zero() {
        Ok(value)
    } else {
        Err(TauError::DepthExhausted(depth))
    }
}

/// One removed middle third together with the constant value the Cantor
/// function takes on its closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCell {
    pub span: Interval,
    pub value: Rat,
    pub generation: u32,
}

/// The `2^depth - 1` middle-third gaps of generation at most `depth`, in
/// increasing order with exact endpoints.
pub fn tau_gaps(depth: u32) -> Vec<Interval> {
    tau_gap_cells(depth).into_iter().map(|g| g.span).collect()
}

/// Like [`tau_gaps`] but keeping plateau values and generations.
pub fn tau_gap_cells(depth: u32) -> Vec<GapCell> {
    let mut out = Vec::with_capacity((1usize << depth) - 1);
    // In-order traversal of the gap tree keeps the list sorted.
    fn rec(
        out: &mut Vec<GapCell>,
        lo: Rat,
        hi: Rat,
        vlo: Rat,
        vhi: Rat,
        generation: u32,
        depth: u32,
    ) {
        if generation > depth {
            return;
        }
        let third = (&hi - &lo) / rat::rat_int(3);
        let a = &lo + &third;
        let b = &hi - &third;
        let value = rat::midpoint(&vlo, &vhi);
        rec(
            out,
            lo.clone(),
            a.clone(),
            vlo,
            value.clone(),
            generation + 1,
            depth,
        );
        out.push(GapCell {
            span: Interval::open(a, b.clone()),
            value: value.clone(),
            generation,
        });
        rec(out, b, hi, value, vhi, generation + 1, depth);
    }
    rec(
        &mut out,
        rat::zero(),
        rat::one(),
        rat::zero(),
        rat::one(),
        1,
        depth,
    );
    out
}

/// The gap of generation `<= depth` whose open span contains `t`, if any.
///
/// Walks one ternary subdivision per generation, so the cost is `O(depth)`
/// regardless of how many gaps exist.
pub fn gap_containing(t: &Rat, depth: u32) -> Option<GapCell> {
    if t.is_negative() || *t > rat::one() {
        return None;
    }
    let mut lo = rat::zero();
    let mut hi = rat::one();
    let mut vlo = rat::zero();
    let mut vhi = rat::one();
    for generation in 1..=depth {
        let third = (&hi - &lo) / rat::rat_int(3);
        let a = &lo + &third;
        let b = &hi - &third;
        let value = rat::midpoint(&vlo, &vhi);
        if *t > a && *t < b {
            return Some(GapCell {
                span: Interval::open(a, b),
                value,
                generation,
            });
        }
        if *t <= a {
            hi = a;
            vhi = value;
        } else {
            lo = b;
            vlo = value;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{one, rat, zero};

    /// Independent oracle: the self-similar recurrence
    /// `tau(t) = tau(3t)/2` on `[0,1/3]`, `1/2` on `[1/3,2/3]`,
    /// `1/2 + tau(3t-2)/2` on `[2/3,1]`, with revisits solved as the affine
    /// fixed point `tau(t) = a + b*tau(t)`.
    fn tau_oracle(t: &Rat) -> Rat {
        let mut a = zero();
        let mut b = one();
        let mut cur = t.clone();
        let mut seen: Vec<(Rat, Rat, Rat)> = Vec::new();
        loop {
            if cur.is_zero() {
                return a;
            }
            if cur == one() {
                return a + b;
            }
            if cur >= rat(1, 3) && cur <= rat(2, 3) {
                return a + b * rat(1, 2);
            }
            if let Some((_, aj, bj)) = seen.iter().find(|(s, _, _)| *s == cur) {
                // tau(cur) = a' + b'*tau(cur) with the affine map accumulated
                // since the first visit: solve exactly.
                let rel_b = &b / bj;
                let rel_a = (&a - aj) / bj;
                let fixed = rel_a / (one() - rel_b);
                return aj + bj.clone() * fixed;
            }
            seen.push((cur.clone(), a.clone(), b.clone()));
            if cur < rat(1, 3) {
                b *= rat(1, 2);
                cur *= rat(3, 1);
            } else {
                a += &b * rat(1, 2);
                b *= rat(1, 2);
                cur = cur * rat(3, 1) - rat(2, 1);
            }
        }
    }

    #[test]
    fn endpoint_and_gap_values() {
        assert_eq!(tau_eval(&zero(), 64).unwrap(), zero());
        assert_eq!(tau_eval(&one(), 64).unwrap(), one());
        assert_eq!(tau_eval(&rat(1, 2), 64).unwrap(), rat(1, 2));
        // periodic expansion 0.020202..._3 -> 0.0101..._2 = 1/3
        assert_eq!(tau_eval(&rat(1, 4), 64).unwrap(), rat(1, 3));
        assert_eq!(tau_eval(&rat(1, 3), 64).unwrap(), rat(1, 2));
        assert_eq!(tau_eval(&rat(2, 3), 64).unwrap(), rat(1, 2));
        assert_eq!(tau_eval(&rat(1, 9), 64).unwrap(), rat(1, 4));
    }

    #[test]
    fn domain_errors() {
        assert!(tau_eval(&rat(-1, 2), 8).is_err());
        assert!(tau_eval(&rat(3, 2), 8).is_err());
    }

    #[test]
    fn agrees_with_recurrence_oracle() {
        let mut k: i64 = 1;
        for den in [7i64, 12, 13, 81, 100, 243, 255] {
            for num in 0..=den {
                k += 1;
                let t = rat(num, den);
                assert_eq!(
                    tau_eval(&t, 4096).unwrap(),
                    tau_oracle(&t),
                    "t = {num}/{den} (case {k})"
                );
            }
        }
    }

    #[test]
    fn monotone_and_symmetric() {
        let mut prev_v = zero();
        for i in 0..=300 {
            let t = rat(i, 300);
            let v = tau_eval(&t, 256).unwrap();
            assert!(v >= prev_v, "monotone at {}", i);
            // symmetry tau(1-t) = 1 - tau(t)
            let w = tau_eval(&(one() - &t), 256).unwrap();
            assert_eq!(&v + w, one());
            prev_v = v;
        }
    }

    #[test]
    fn gaps_depth_one_and_two() {
        assert_eq!(tau_gaps(1), vec![Interval::open(rat(1, 3), rat(2, 3))]);
        assert_eq!(
            tau_gaps(2),
            vec![
                Interval::open(rat(1, 9), rat(2, 9)),
                Interval::open(rat(1, 3), rat(2, 3)),
                Interval::open(rat(7, 9), rat(8, 9)),
            ]
        );
        for d in 1..=8 {
            assert_eq!(tau_gaps(d).len(), (1 << d) - 1);
        }
    }

    #[test]
    fn gap_constancy() {
        for cell in tau_gap_cells(8) {
            assert_eq!(tau_eval(&cell.span.lo, 256).unwrap(), cell.value);
            assert_eq!(tau_eval(&cell.span.hi, 256).unwrap(), cell.value);
            assert_eq!(tau_eval(&cell.span.midpoint(), 256).unwrap(), cell.value);
        }
    }

    #[test]
    fn gap_lookup_matches_enumeration() {
        let cells = tau_gap_cells(6);
        for cell in &cells {
            let mid = cell.span.midpoint();
            assert_eq!(gap_containing(&mid, 6).as_ref(), Some(cell));
        }
        // Cantor points have no gap.
        assert_eq!(gap_containing(&rat(1, 4), 12), None);
        assert_eq!(gap_containing(&zero(), 12), None);
    }
}
