//! Ledger of integer inequality chains, checked exhaustively over explicit
//! parameter grids.
//!
//! Every case is a universally quantified implication that a proof step
//! relies on. The grids extend the stated hypotheses by a +20 margin on
//! the strand and label counts, so an off-by-one in transcription shows up
//! as a violation with a witness tuple. All arithmetic is exact (`i128`
//! internally); a violation in any case is a transcription bug, never a
//! rounding artifact.
//!
//! Case inventory:
//!
//! * `A1` — the component-type gate `k² - k > 6g + 6` follows from
//!   `n ≥ 26`, `g ≤ n - 3`, `k = ⌊n/2⌋`.
//! * `A2` — torsion bound: `g < 2^(k-3) - 1` forces `2^(k-1) > 4g + 4`,
//!   and `n ≥ 14`, `g ≤ n - 3` lands in that range for `k = ⌊n/2⌋`.
//! * `A3` — same gate for the difference set, `k = ⌊n/2⌋ - 1`, `n ≥ 16`.
//! * `A4` — invariant-multicurve counts: complement components
//!   `r ≤ 2g - 2 ≤ 2n - 8 < 2n`, pants surplus `m = 2g - 2 - n ≤ n - 8`,
//!   and the Euler characteristic pinch `n·χ ≥ 8 - 2n ∧ χ < 0 ⟹ χ = -1`.
//! * `A5` — big-component bound: `χ(R₁) ≤ 2 - n` forces
//!   `χ(R₁ᶜ) ≥ 6 - n > χ(R₁)`.
//! * `A6` — the singleton-label cap `g + 1` against `n ≥ g + 3` (the
//!   pairwise-homologous cap `g - 1` is recorded alongside).
//! * `A7` — big/small dichotomy: `C(k,2) > 2g - 2` and `k(3-k) < 2 - 2g`
//!   in range `n ≥ 24`, `g ≤ n - 3`, `k = ⌊n/2⌋`.
//! * `A8` — the chain Euler inequality `2 - 2g ≥ 6 - 4k` with its case
//!   bounds `4 - 4k`, `6 - 5k`, `2r - 2lk`, `2m + (2-2m)k`, the equality
//!   locus `{n = 2k+1, g = n-3}`, and the component caps `r ≤ 4`, `l ≤ 2`,
//!   `m = 3`.
//! * `A9` — dimension clash: `g ≤ n - 3` excludes `2(n-2) ≤ 2g`.

use serde::Serialize;

use crate::error::{Error, Result};

/// A named integer range, inclusive on both ends.
pub type NamedRange = (&'static str, i64, i64);

/// One audited implication: a grid of tuples and a predicate that must
/// hold on every tuple satisfying the case hypothesis.
pub struct InequalityCase {
    pub id: &'static str,
    /// Stable human-readable location key.
    pub citation: &'static str,
    /// The inequality chain being transcribed, in ASCII math.
    pub anchor: &'static str,
    pub ranges: &'static [NamedRange],
    /// `None` when the tuple misses the hypothesis (not counted),
    /// otherwise whether the implication holds.
    pub predicate: fn(&[i64]) -> Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: String,
    /// Number of tuples satisfying the case hypothesis.
    pub tuples: u64,
    /// Witness tuples for any failures (the grids are proofs, so this
    /// must stay empty).
    pub violations: Vec<Vec<i64>>,
}

fn pow2(e: i128) -> i128 {
    1i128 << e
}

fn a1(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    let k = n / 2;
    Some(
        k * (k - 1) >= 6 * n - 6
            && 6 * n - 6 >= 6 * g + 12
            && 6 * g + 12 > 6 * g + 6
            && k * k - k > 6 * g + 6,
    )
}

fn a2(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    let k = n / 2;
    Some(g < pow2(k - 3) - 1 && pow2(k - 1) > 4 * g + 4)
}

fn a3(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    let k = n / 2 - 1;
    Some(g < pow2(k - 3) - 1 && pow2(k - 1) > 4 * g + 4)
}

fn a4(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    let component_bounds = 2 * g - 2 <= 2 * n - 8 && 2 * n - 8 < 2 * n;
    let pants = 2 * g - 2 - n;
    let pants_bound = pants < 0 || (pants <= n - 8 && n - 8 < n);
    let euler_pinch = (-10..=-1i128).all(|chi| {
        if n * chi >= 2 - 2 * g {
            chi == -1
        } else {
            true
        }
    });
    Some(component_bounds && pants_bound && euler_pinch)
}

fn a5(v: &[i64]) -> Option<bool> {
    let (n, g, x) = (v[0] as i128, v[1] as i128, v[2] as i128);
    if g > n - 3 || x > 2 - n {
        return None;
    }
    let complement = (2 - 2 * g) - x;
    Some(complement >= 6 - n && 6 - n > x)
}

fn a6(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    let singleton_cap = g + 1;
    Some(n >= g + 3 && g + 3 > singleton_cap)
}

fn a7(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    let k = n / 2;
    let choose2 = k * (k - 1) / 2;
    Some(choose2 > 2 * g - 2 && k * (3 - k) < 2 - 2 * g && 2 - (k - 1) == 3 - k)
}

fn a8(v: &[i64]) -> Option<bool> {
    let (k, offset, g) = (v[0] as i128, v[1] as i128, v[2] as i128);
    let n = 2 * k + offset;
    if g > n - 3 {
        return None;
    }
    let chi = 2 - 2 * g;
    let chain = chi >= 2 - 2 * (n - 3) && 2 - 2 * (n - 3) >= 6 - 4 * k;
    let case_bounds = 4 - 4 * k < 6 - 4 * k && 6 - 5 * k < 6 - 4 * k;
    let equality_locus = if chi == 6 - 4 * k {
        n == 2 * k + 1 && g == n - 3
    } else {
        true
    };
    let r_cap = (1..=12i128).all(|r| {
        if r * (2 - k) >= 6 - 4 * k {
            r <= 4
        } else {
            true
        }
    });
    let l_cap = (1..=4i128).all(|r| {
        (1..=12i128).all(|l| {
            if 2 * r - 2 * l * k >= 6 - 4 * k {
                l <= 2
            } else {
                true
            }
        })
    });
    let m_cap = (3..=12i128).all(|m| {
        if 2 * m + (2 - 2 * m) * k >= 6 - 4 * k {
            m == 3
        } else {
            true
        }
    });
    Some(chain && case_bounds && equality_locus && r_cap && l_cap && m_cap)
}

fn a9(v: &[i64]) -> Option<bool> {
    let (n, g) = (v[0] as i128, v[1] as i128);
    if g > n - 3 {
        return None;
    }
    Some(!(2 * (n - 2) <= 2 * g))
}

/// The full case ledger. Ranges carry the +20 margin on strand and label
/// counts past the stated hypotheses.
pub fn ledger() -> &'static [InequalityCase] {
    &[
        InequalityCase {
            id: "A1",
            citation: "component-type gate for the odd-generator set",
            anchor: "k(k-1) >= 6n-6 >= 6(g+3)-6 = 6g+12 > 6g+6, k = floor(n/2)",
            ranges: &[("n", 26, 80), ("g", 0, 77)],
            predicate: a1,
        },
        InequalityCase {
            id: "A2",
            citation: "torsion order bound and its strand-count gate",
            anchor: "g < 2^(k-3)-1 => 2^(k-1) > 4g+4, k = floor(n/2), n >= 14, g <= n-3",
            ranges: &[("n", 14, 54), ("g", 0, 51)],
            predicate: a2,
        },
        InequalityCase {
            id: "A3",
            citation: "torsion gate for the difference set",
            anchor: "g < 2^(k-3)-1 => 2^(k-1) > 4g+4, k = floor(n/2)-1, n >= 16, g <= n-3",
            ranges: &[("n", 16, 56), ("g", 0, 53)],
            predicate: a3,
        },
        InequalityCase {
            id: "A4",
            citation: "invariant-multicurve component counts",
            anchor: "r <= 2g-2 <= 2n-8 < 2n; m = 2g-2-n <= n-8 < n; n*chi >= 8-2n, chi < 0 => chi = -1",
            ranges: &[("n", 7, 46), ("g", 0, 43)],
            predicate: a4,
        },
        InequalityCase {
            id: "A5",
            citation: "big-component Euler characteristic bound",
            anchor: "chi(R1) <= 2-n => (2-2g) - chi(R1) >= 6-n > chi(R1)",
            ranges: &[("n", 7, 46), ("g", 0, 43), ("chi_r1", -200, 0)],
            predicate: a5,
        },
        InequalityCase {
            id: "A6",
            citation: "singleton-label cap clash (g+1 cap vs n >= g+3; homologous cap g-1 recorded)",
            anchor: "g <= n-3 => n >= g+3 > g+1",
            ranges: &[("n", 7, 46), ("g", 0, 43)],
            predicate: a6,
        },
        InequalityCase {
            id: "A7",
            citation: "big/small label dichotomy range",
            anchor: "C(k,2) > 2g-2; k(3-k) < 2-2g; 2-(k-1) = 3-k; k = floor(n/2), n >= 24",
            ranges: &[("n", 24, 64), ("g", 0, 61)],
            predicate: a7,
        },
        InequalityCase {
            id: "A8",
            citation: "chain Euler inequality with its case bounds",
            anchor: "2-2g >= 2-2(n-3) >= 6-4k; 4-4k < 6-4k; 6-5k < 6-4k; equality only at n=2k+1, g=n-3; r(2-k) >= 6-4k => r <= 4; 2r-2lk >= 6-4k => l <= 2; 2m+(2-2m)k >= 6-4k => m = 3",
            ranges: &[("k", 13, 60), ("n_offset", 0, 1), ("g", 0, 118)],
            predicate: a8,
        },
        InequalityCase {
            id: "A9",
            citation: "homology dimension clash",
            anchor: "g <= n-3 excludes 2(n-2) <= 2g",
            ranges: &[("n", 7, 46), ("g", 0, 43)],
            predicate: a9,
        },
    ]
}

fn case_by_id(case_id: &str) -> Result<&'static InequalityCase> {
    ledger()
        .iter()
        .find(|c| c.id == case_id)
        .ok_or_else(|| Error::UnknownCase(case_id.to_string()))
}

/// Evaluate one case over its full grid.
pub fn run_case(case_id: &str) -> Result<CaseReport> {
    let case = case_by_id(case_id)?;
    let mut tuples = 0u64;
    let mut violations = Vec::new();
    let mut point: Vec<i64> = case.ranges.iter().map(|&(_, lo, _)| lo).collect();
    'grid: loop {
        if let Some(ok) = (case.predicate)(&point) {
            tuples += 1;
            if !ok {
                violations.push(point.clone());
            }
        }
        // advance odometer
        for pos in (0..point.len()).rev() {
            point[pos] += 1;
            if point[pos] <= case.ranges[pos].2 {
                continue 'grid;
            }
            point[pos] = case.ranges[pos].1;
        }
        break;
    }
    Ok(CaseReport {
        case: case.id.to_string(),
        tuples,
        violations,
    })
}

/// Evaluate a single tuple against a case predicate; `None` when the
/// hypothesis is not met.
pub fn evaluate_case_tuple(case_id: &str, tuple: &[i64]) -> Result<Option<bool>> {
    let case = case_by_id(case_id)?;
    if tuple.len() != case.ranges.len() {
        return Err(Error::Precondition(format!(
            "case {case_id} takes {} variables, got {}",
            case.ranges.len(),
            tuple.len()
        )));
    }
    Ok((case.predicate)(tuple))
}

/// Run the whole ledger in order.
pub fn run_all() -> Result<Vec<CaseReport>> {
    ledger().iter().map(|c| run_case(c.id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_covers_a1_through_a9_with_no_orphans() {
        let ids: Vec<&str> = ledger().iter().map(|c| c.id).collect();
        let expected: Vec<String> = (1..=9).map(|i| format!("A{i}")).collect();
        assert_eq!(ids, expected.iter().map(String::as_str).collect::<Vec<_>>());
        for case in ledger() {
            assert!(!case.citation.is_empty(), "{} missing citation", case.id);
            assert!(!case.anchor.is_empty(), "{} missing anchor", case.id);
            assert!(!case.ranges.is_empty(), "{} missing ranges", case.id);
        }
    }

    #[test]
    fn every_case_has_zero_violations() {
        for report in run_all().unwrap() {
            assert!(
                report.violations.is_empty(),
                "case {} violated at {:?}",
                report.case,
                report.violations.first()
            );
            assert!(report.tuples > 0, "case {} checked nothing", report.case);
        }
    }

    #[test]
    fn unknown_case_is_rejected() {
        assert!(matches!(run_case("A10"), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn a2_gate_example() {
        // (n, g) = (14, 11): 11 < 2^4 - 1 = 15, so the hypothesis range
        // applies and the bound 2^6 = 64 > 48 holds.
        assert_eq!(evaluate_case_tuple("A2", &[14, 11]).unwrap(), Some(true));
        // g = n - 2 misses the hypothesis entirely.
        assert_eq!(evaluate_case_tuple("A2", &[14, 12]).unwrap(), None);
    }

    #[test]
    fn a8_equality_locus() {
        // 2 - 2g = 6 - 4k exactly at g = 2k - 2; with g <= n - 3 this
        // needs n = 2k + 1 and g = n - 3.
        for k in [13i64, 20, 40] {
            let g = 2 * k - 2;
            assert_eq!(2 - 2 * g, 6 - 4 * k);
            // n = 2k: unattainable since g = 2k - 2 > n - 3 = 2k - 3.
            assert_eq!(evaluate_case_tuple("A8", &[k, 0, g]).unwrap(), None);
            // n = 2k + 1: attained at the boundary and the locus check passes.
            assert_eq!(evaluate_case_tuple("A8", &[k, 1, g]).unwrap(), Some(true));
        }
    }

    #[test]
    fn a4_euler_pinch_is_the_interesting_part() {
        // At n = 7, g = 4: n*chi >= 2 - 2g = -6 admits only chi = -1
        // among negative integers multiplied by 7.
        assert_eq!(evaluate_case_tuple("A4", &[7, 4]).unwrap(), Some(true));
    }

    #[test]
    fn tuple_arity_is_checked() {
        assert!(evaluate_case_tuple("A5", &[7, 4]).is_err());
    }
}
