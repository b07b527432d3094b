//! Fixed relator checks in F, all decided by exact comparison of PL maps.

use crate::plmap::PLMap;
use crate::report::Report;
use crate::word::GenWord;

pub const DEFAULT_DEPTH: u32 = 8;

/// The two relators of the balanced two-generator presentation of F,
/// `[x1^-1 x0, x0 x1 x0^-1]` and `[x1^-1 x0, x0^2 x1 x0^-2]`, written in the
/// images `g0`, `g1` of `x0`, `x1`.
pub fn finite_presentation_relators(g0: &GenWord, g1: &GenWord) -> [GenWord; 2] {
    let u = g1.inverse().then(g0);
    [u.commutator(&g1.conjugate(g0)), u.commutator(&g1.conjugate(&g0.pow(2)))]
}

fn xs(depth: u32) -> Vec<PLMap> {
    // index 0 holds x0, index n holds x_n
    let mut v = vec![PLMap::x0()];
    v.extend((1..=depth + 1).map(|n| PLMap::build_xn(n.into()).expect("n >= 1")));
    v
}

fn ys(depth: u32) -> Vec<PLMap> {
    let mut v = vec![PLMap::identity()];
    v.extend((1..=depth + 1).map(|n| PLMap::build_yn(n.into()).expect("n >= 1")));
    v
}

/// Checks the presentation relators of F up to index `depth`:
/// the two finite-presentation relators, `x_k x_n x_k^-1 = x_{n+1}` for
/// `0 <= k < n <= depth`, `y_k y_n y_k^-1 = y_{n+1}` for `1 <= k < n <= depth`
/// and `[x_i, y_j] = 1` for `1 <= i, j <= depth`.
pub fn check_relators(depth: u32) -> Report {
    let mut report = Report::new(format!("relators (depth {depth})"));
    for (i, r) in finite_presentation_relators(&GenWord::x0(), &GenWord::x1()).iter().enumerate() {
        report.record(format!("finite presentation relator {}", i + 1), r.to_plmap().is_identity());
    }
    let x = xs(depth);
    let y = ys(depth);
    for n in 1..=depth as usize {
        for k in 0..n {
            report.record(format!("x{k} x{n} x{k}^-1 = x{}", n + 1), x[n].conjugate_by(&x[k]) == x[n + 1]);
        }
    }
    for n in 2..=depth as usize {
        for k in 1..n {
            report.record(format!("y{k} y{n} y{k}^-1 = y{}", n + 1), y[n].conjugate_by(&y[k]) == y[n + 1]);
        }
    }
    for (i, xi) in x.iter().enumerate().skip(1).take(depth as usize) {
        for (j, yj) in y.iter().enumerate().skip(1).take(depth as usize) {
            report.record(format!("[x{i}, y{j}] = 1"), xi.commutator(yj).is_identity());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relators_hold_at_depth_three() {
        let r = check_relators(3);
        assert!(r.all_passed(), "{r}");
        assert!(r.checks.iter().any(|c| c.name == "x1 x2 x1^-1 = x3"));
        assert!(r.checks.iter().any(|c| c.name == "[x2, y1] = 1"));
    }

    #[test]
    fn detects_a_false_identity() {
        // x1 x2 x1^-1 is x3, not x2
        let x1 = PLMap::x1();
        let x2 = PLMap::build_xn(2).unwrap();
        assert_ne!(x2.conjugate_by(&x1), x2);
        assert_eq!(x2.conjugate_by(&x1), PLMap::build_xn(3).unwrap());
    }
}
