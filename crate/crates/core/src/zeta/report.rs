use serde::Serialize;
use std::fmt::Write as _;

use crate::motive::{MotiveClass, MotiveRational, MotiveSeries};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiffRow {
    pub exponent: usize,
    pub computed: MotiveClass,
    pub expanded: MotiveClass,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub computed: MotiveSeries,
    pub closed_form: Option<MotiveRational>,
    /// One row per exponent `0 ..= T`.
    pub diff: Vec<DiffRow>,
}

impl SeriesReport {
    pub fn all_match(&self) -> bool {
        self.diff.iter().all(|r| r.matches)
    }

    /// Plain table: exponent, computed class, closed-form class, verdict.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:>3}  {:<40} {:<40} verdict", "n", "computed", "closed form");
        for r in &self.diff {
            let _ = writeln!(
                out,
                "{:>3}  {:<40} {:<40} {}",
                r.exponent,
                r.computed.to_string(),
                r.expanded.to_string(),
                if r.matches { "match" } else { "MISMATCH" }
            );
        }
        out
    }
}

/// Expands `closed` to the order of `series` and compares coefficientwise.
pub fn compare(series: &MotiveSeries, closed: &MotiveRational) -> SeriesReport {
    let e = closed.expand(series.order());
    let diff = series
        .coeffs()
        .iter()
        .zip(e.coeffs())
        .enumerate()
        .map(|(n, (c, x))| DiffRow {
            exponent: n,
            computed: c.clone(),
            expanded: x.clone(),
            matches: c == x,
        })
        .collect();
    SeriesReport {
        computed: series.clone(),
        closed_form: Some(closed.clone()),
        diff,
    }
}

/// The closed form's coefficient of `t^n` equals `L^a` times the computed
/// coefficient of `t^(n-b)`, for every compared `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftFit {
    pub a: i64,
    pub b: i64,
    /// Exponents of the closed form that were compared.
    pub compared: Vec<usize>,
}

/// All shifts `(a, b)` with `|b| <= max_b` under which the closed form's
/// coefficients of `t^n`, `n >= tail_from`, agree with the computed series.
/// A fit must compare at least `min_compared` exponents.
pub fn fit_shifts(
    series: &MotiveSeries,
    closed: &MotiveRational,
    tail_from: usize,
    max_b: i64,
    min_compared: usize,
) -> Vec<ShiftFit> {
    let t = series.order() as i64;
    let expanded = closed.expand((t + max_b.max(0)) as usize);
    let mut fits = Vec::new();
    for b in -max_b..=max_b {
        let pairs: Vec<(usize, &MotiveClass, &MotiveClass)> = (tail_from as i64..=t + b)
            .filter(|&n| n - b >= 0 && n - b <= t)
            .map(|n| (n as usize, expanded.coeff(n as usize), series.coeff((n - b) as usize)))
            .collect();
        if pairs.len() < min_compared {
            continue;
        }
        let a = pairs
            .iter()
            .find(|(_, x, c)| !x.is_zero() && !c.is_zero())
            .map(|(_, x, c)| x.dim().unwrap() - c.dim().unwrap())
            .unwrap_or(0);
        if pairs.iter().all(|(_, x, c)| *x == &c.shift(a)) {
            fits.push(ShiftFit {
                a,
                b,
                compared: pairs.iter().map(|p| p.0).collect(),
            });
        }
    }
    fits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<MotiveClass> {
        v.iter().map(|&x| MotiveClass::from_integer(x)).collect()
    }

    #[test]
    fn line_against_geometric() {
        let s = MotiveSeries::geometric(4, &MotiveClass::l_pow(-1));
        let r = MotiveRational::new(vec![MotiveClass::l_pow(-1)], ints(&[1, -1])).unwrap();
        assert!(compare(&s, &r).all_match());
    }

    #[test]
    fn short_truncation() {
        let s = MotiveSeries::new(1, ints(&[1, 1]));
        let r = MotiveRational::new(ints(&[1]), ints(&[1, -1])).unwrap();
        let rep = compare(&s, &r);
        assert_eq!(rep.diff.len(), 2);
        assert!(rep.all_match());
    }

    #[test]
    fn detects_shift() {
        // closed form t * L * 1/(1-t)^2, series 1/(1-t)^2
        let s = MotiveSeries::new(6, (1..=7).map(MotiveClass::from_integer).collect());
        let r = MotiveRational::new(vec![MotiveClass::zero(), MotiveClass::lefschetz()], ints(&[1, -2, 1])).unwrap();
        let fits = fit_shifts(&s, &r, 2, 3, 3);
        assert_eq!(fits.len(), 1);
        assert_eq!((fits[0].a, fits[0].b), (1, 1));
        assert!(!compare(&s, &r).all_match());
    }
}
