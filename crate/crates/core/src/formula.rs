//! Closed-form induced matching numbers and bounds.
//!
//! Each value carries a [`FormulaKind`] so callers can never mistake a bound
//! or a conjectured value for a proved one. Formulas are evaluated exactly as
//! stated, including branches that are known to disagree with exhaustive
//! search; reconciling them is the harness's job.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaKind {
    Exact,
    LowerBound,
    ConjecturedExact,
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaKind::Exact => "exact",
            FormulaKind::LowerBound => "lower_bound",
            FormulaKind::ConjecturedExact => "conjectured_exact",
        })
    }
}

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaSource {
    Path,
    Cycle,
    Grid3,
    Star,
    /// Exact stacked-book value for a fixed number of columns, 1..=5.
    BookColumns(u8),
    BookEvenBound,
    BookOddBound,
    BookEvenConjecture,
    BookOddConjecture,
}

impl FormulaSource {
    pub fn tag(&self) -> &'static str {
        match self {
            FormulaSource::Path => "im(P_n)",
            FormulaSource::Cycle => "im(C_n)",
            FormulaSource::Grid3 => "im(P_3 x P_n)",
            FormulaSource::Star => "im(S_m)",
            FormulaSource::BookColumns(1) => "im(G_m,1)",
            FormulaSource::BookColumns(2) => "im(G_m,2)",
            FormulaSource::BookColumns(3) => "im(G_m,3)",
            FormulaSource::BookColumns(4) => "im(G_m,4)",
            FormulaSource::BookColumns(_) => "im(G_m,5)",
            FormulaSource::BookEvenBound => "even-n lower bound",
            FormulaSource::BookOddBound => "odd-n lower bound",
            FormulaSource::BookEvenConjecture => "even-n conjecture",
            FormulaSource::BookOddConjecture => "odd-n conjecture",
        }
    }
}

impl fmt::Display for FormulaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormulaValue {
    pub value: u64,
    pub kind: FormulaKind,
    pub source: FormulaSource,
}

fn not_applicable(source: FormulaSource, reason: impl ToString) -> Error {
    Error::NotApplicable {
        formula: source.tag(),
        reason: reason.to_string(),
    }
}

fn exact(value: u64, source: FormulaSource) -> FormulaValue {
    FormulaValue {
        value,
        kind: FormulaKind::Exact,
        source,
    }
}

/// `⌈(n − 1)/3⌉` for the path on `n ≥ 1` vertices.
pub fn im_path_formula(n: u64) -> Result<FormulaValue> {
    if n == 0 {
        return Err(not_applicable(FormulaSource::Path, "n must be at least 1"));
    }
    Ok(exact((n - 1).div_ceil(3), FormulaSource::Path))
}

/// `⌊n/3⌋` for the cycle on `n ≥ 3` vertices.
pub fn im_cycle_formula(n: u64) -> Result<FormulaValue> {
    if n < 3 {
        return Err(not_applicable(FormulaSource::Cycle, "n must be at least 3"));
    }
    Ok(exact(n / 3, FormulaSource::Cycle))
}

/// `P_3 □ P_n`: `⌈3n/4⌉` for even `n`, `3(n − 1)/4` for `n = 4k + 1` and
/// `(3(n − 1) + 2)/4` for `n = 4k + 3`.
///
/// The `4k + 1` branch is evaluated as printed even though exhaustive search
/// disagrees with it (n = 1, 5, 9 give 0, 3, 6 here against 1, 4, 7).
pub fn im_grid3_formula(n: u64) -> Result<FormulaValue> {
    if n == 0 {
        return Err(not_applicable(FormulaSource::Grid3, "n must be at least 1"));
    }
    let value = match n % 4 {
        0 | 2 => (3 * n).div_ceil(4),
        1 => 3 * (n - 1) / 4,
        _ => (3 * (n - 1) + 2) / 4,
    };
    Ok(exact(value, FormulaSource::Grid3))
}

/// Always 1 for a star with `m ≥ 2` vertices.
pub fn im_star_formula(m: u64) -> Result<FormulaValue> {
    if m < 2 {
        return Err(not_applicable(FormulaSource::Star, "m must be at least 2"));
    }
    Ok(exact(1, FormulaSource::Star))
}

/// Proved values for stacked books with `m ≥ 3` and `n ∈ [1, 5]`:
/// 1, m − 1, m − 1, m, 2(m − 1).
pub fn im_book_exact(m: u64, n: u64) -> Result<FormulaValue> {
    if !(1..=5).contains(&n) {
        return Err(not_applicable(
            FormulaSource::BookColumns(5),
            format!("n = {n} is outside [1, 5]: use the general bounds"),
        ));
    }
    let source = FormulaSource::BookColumns(n as u8);
    if m < 3 {
        return Err(not_applicable(source, "m must be at least 3"));
    }
    let value = match n {
        1 => 1,
        2 | 3 => m - 1,
        4 => m,
        _ => 2 * (m - 1),
    };
    Ok(exact(value, source))
}

/// Evaluates the general stacked-book formula selected by `n mod 4` with no
/// range check:
///
/// - `n ≡ 0`: `mn/4`
/// - `n ≡ 1`: `(mn + 3m − 8)/4`
/// - `n ≡ 2`: `m⌈n/4⌉ − 1`
/// - `n ≡ 3`: `m⌊n/4⌋ + 2`
///
/// Used to report what the formula says at small `n`, where it conflicts with
/// proved values. Returns the raw value as a signed integer because the
/// `n ≡ 1` branch can go negative for tiny inputs.
pub fn book_general_formula(m: u64, n: u64) -> Result<i64> {
    let (m, n) = (m as i64, n as i64);
    match n % 4 {
        0 => {
            // mn/4 with 4 | n.
            Ok(m * n / 4)
        }
        1 => {
            let numerator = m * n + 3 * m - 8;
            if numerator.rem_euclid(4) != 0 {
                return Err(Error::NonIntegral {
                    formula: FormulaSource::BookOddBound.tag(),
                    numerator,
                    denominator: 4,
                });
            }
            Ok(numerator.div_euclid(4))
        }
        2 => Ok(m * ((n + 3) / 4) - 1),
        _ => Ok(m * (n / 4) + 2),
    }
}

fn general(m: u64, n: u64, kind: FormulaKind) -> Result<FormulaValue> {
    let even = n.is_multiple_of(2);
    let source = match (kind, even) {
        (FormulaKind::ConjecturedExact, true) => FormulaSource::BookEvenConjecture,
        (FormulaKind::ConjecturedExact, false) => FormulaSource::BookOddConjecture,
        (_, true) => FormulaSource::BookEvenBound,
        (_, false) => FormulaSource::BookOddBound,
    };
    if m < 3 {
        return Err(not_applicable(source, "m must be at least 3"));
    }
    if n < 6 {
        return Err(not_applicable(
            source,
            format!("n = {n} <= 5 has proved exact values"),
        ));
    }
    let value = book_general_formula(m, n)?;
    Ok(FormulaValue {
        value: u64::try_from(value).expect("positive for m >= 3, n >= 6"),
        kind,
        source,
    })
}

/// General lower bound for stacked books, `m ≥ 3` and `n ≥ 6`.
pub fn im_book_lower_bound(m: u64, n: u64) -> Result<FormulaValue> {
    general(m, n, FormulaKind::LowerBound)
}

/// Same expressions as [`im_book_lower_bound`], tagged as conjectured exact.
pub fn im_book_conjecture(m: u64, n: u64) -> Result<FormulaValue> {
    general(m, n, FormulaKind::ConjecturedExact)
}
