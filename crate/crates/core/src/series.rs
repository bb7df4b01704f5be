//! Data series for the count sequences: exact decimal tables, `.dat` file
//! export, and the growth-ratio trend of the maximally extendable counts.
//!
//! `.dat` files hold one record per line, `n` and a value separated by a
//! single space, no header, `n` ascending from 0. Ratios are printed with
//! exactly twelve significant digits computed by scaled integer division,
//! so the files are reproducible byte for byte.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting::{schroder_row, CountTables, Family};

/// The exported data series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// Liftable totals, `L.dat`.
    L,
    /// General totals, `T.dat`.
    T,
    /// Maximally extendable liftable counts, `Lmax.dat`.
    Lmax,
    /// Maximally extendable general counts, `Tmax.dat`.
    Tmax,
    /// Liftable-to-general ratio, `ratio_LT.dat`.
    Ratio,
}

impl Series {
    pub const ALL: [Series; 5] = [Series::L, Series::T, Series::Lmax, Series::Tmax, Series::Ratio];

    pub fn file_name(self) -> &'static str {
        match self {
            Series::L => "L.dat",
            Series::T => "T.dat",
            Series::Lmax => "Lmax.dat",
            Series::Tmax => "Tmax.dat",
            Series::Ratio => "ratio_LT.dat",
        }
    }
}

/// An ordered table `n -> value`, `n` contiguous from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub name: &'static str,
    pub rows: Vec<(usize, String)>,
}

impl SeriesTable {
    fn new(name: &'static str, rows: Vec<(usize, String)>) -> Self {
        for (i, (n, _)) in rows.iter().enumerate() {
            assert_eq!(*n, i, "rows must be contiguous from 0");
        }
        SeriesTable { name, rows }
    }

    /// The `.dat` file body.
    pub fn to_dat(&self) -> String {
        let mut out = String::new();
        for (n, v) in &self.rows {
            out.push_str(&format!("{n} {v}\n"));
        }
        out
    }
}

/// Computes one series for `0 <= n <= max_n`.
pub fn series_table(tables: &mut CountTables, series: Series, max_n: usize) -> SeriesTable {
    let rows = (0..=max_n)
        .map(|n| {
            let v = match series {
                Series::L => tables.total(Family::Liftable, n).to_string(),
                Series::T => tables.total(Family::All, n).to_string(),
                Series::Lmax => tables.max_extendable(Family::Liftable, n).to_string(),
                Series::Tmax => tables.max_extendable(Family::All, n).to_string(),
                Series::Ratio => {
                    let num = tables.total(Family::Liftable, n);
                    let den = tables.total(Family::All, n);
                    decimal_12_significant(&num, &den)
                }
            };
            (n, v)
        })
        .collect();
    SeriesTable::new(series.file_name(), rows)
}

/// Writes the requested series under `dir`, one `.dat` file each, and
/// returns the paths written.
pub fn export_series(
    tables: &mut CountTables,
    series: &[Series],
    max_n: usize,
    dir: &Path,
) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut paths = Vec::new();
    for &s in series {
        let table = series_table(tables, s, max_n);
        let path = dir.join(s.file_name());
        fs::write(&path, table.to_dat())?;
        paths.push(path);
    }
    Ok(paths)
}

/// Exactly twelve significant digits of `num / den` as a plain decimal,
/// rounded half away from zero on the thirteenth digit.
pub fn decimal_12_significant(num: &BigUint, den: &BigUint) -> String {
    assert!(!num.is_zero() && !den.is_zero(), "ratio of positive integers");
    const DIGITS: u32 = 12;
    let ten = BigUint::from(10u32);
    let mut a = num.clone();
    let mut d = den.clone();
    let mut exp: i64 = 0;
    while a < d {
        a *= &ten;
        exp -= 1;
    }
    loop {
        let bound = &d * &ten;
        if a < bound {
            break;
        }
        d = bound;
        exp += 1;
    }
    // 1 <= a/d < 10; round to 12 digits
    let scaled = a * ten.pow(DIGITS - 1) + (&d >> 1);
    let rounded: BigUint = scaled / &d;
    let mut digits = rounded.to_string();
    if digits.len() > DIGITS as usize {
        // rounding carried 9.99... over to 10.0...
        digits.truncate(DIGITS as usize);
        exp += 1;
    }
    debug_assert_eq!(digits.len(), DIGITS as usize);
    if exp >= 0 {
        let point = exp as usize + 1;
        format!("{}.{}", &digits[..point], &digits[point..])
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("0.{zeros}{digits}")
    }
}

/// Working scale for the growth-ratio computation: sixty decimal digits.
fn scale() -> BigUint {
    BigUint::from(10u32).pow(60)
}

/// The conjectured growth constant, in billionths: 4.720408926.
pub const GROWTH_CONSTANT_NANOS: u64 = 4_720_408_926;

/// The growth constant at the working scale.
pub fn growth_constant_scaled() -> BigUint {
    BigUint::from(GROWTH_CONSTANT_NANOS) * BigUint::from(10u32).pow(51)
}

/// Scaled ratios `Lmax(n) * n^(3/2) / (3 + sqrt 8)^n` for `n = 1..=max_n`,
/// each multiplied by the working scale. The maximally extendable liftable
/// count is taken through its Schroder identity, which the counting tables
/// assert independently.
pub fn asymptotic_ratios_scaled(max_n: usize) -> Vec<BigUint> {
    assert!(max_n >= 1);
    let s = scale();
    let s2 = &s * &s;
    let lmax = schroder_row(max_n + 1);
    let base = BigUint::from(3u32) * &s + (BigUint::from(8u32) * &s2).sqrt();
    let mut power = s.clone(); // (3 + sqrt 8)^n at scale
    let mut out = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        power = power * &base / &s;
        let n_to_3_2 = (BigUint::from(n).pow(3) * &s2).sqrt();
        out.push(&lmax[n + 1] * n_to_3_2 * &s / &power);
    }
    out
}

/// The same ratios rendered as decimals with fifty fractional digits.
pub fn asymptotic_ratio_trend(max_n: usize) -> Vec<(usize, String)> {
    asymptotic_ratios_scaled(max_n)
        .into_iter()
        .enumerate()
        .map(|(i, r)| (i + 1, scaled_to_decimal(&r, 50)))
        .collect()
}

/// Renders a value at the working scale with the given number of
/// fractional digits (truncated).
pub fn scaled_to_decimal(value: &BigUint, frac_digits: usize) -> String {
    let s = scale();
    let int = value / &s;
    let frac = value % &s;
    let frac_str = format!("{frac:060}");
    format!("{int}.{}", &frac_str[..frac_digits.min(60)])
}

/// True if `value` is within `percent` percent of `target` (both at the
/// same scale), compared exactly.
pub fn within_percent(value: &BigUint, target: &BigUint, percent: u32) -> bool {
    let diff = if value >= target { value - target } else { target - value };
    diff * 100u32 <= target * percent
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(decimal_12_significant(&big(1), &big(1)), "1.00000000000");
        assert_eq!(decimal_12_significant(&big(9), &big(10)), "0.900000000000");
        assert_eq!(decimal_12_significant(&big(56), &big(68)), "0.823529411765");
        assert_eq!(decimal_12_significant(&big(2), &big(2)), "1.00000000000");
        assert_eq!(decimal_12_significant(&big(1), &big(3)), "0.333333333333");
        assert_eq!(decimal_12_significant(&big(2), &big(3)), "0.666666666667");
        assert_eq!(decimal_12_significant(&big(1), &big(400)), "0.00250000000000");
        assert_eq!(decimal_12_significant(&big(425), &big(1)), "425.000000000");
        assert_eq!(
            decimal_12_significant(&big(3_546_142_551), &big(7_019_272_236)),
            "0.505200885757"
        );
        // rounding carries across a power of ten
        assert_eq!(decimal_12_significant(&big(999999999999999), &big(1000000000000000)), "1.00000000000");
    }

    #[test]
    fn ratio_series_rows() {
        let mut t = CountTables::new();
        let table = series_table(&mut t, Series::Ratio, 3);
        assert_eq!(
            table.rows,
            vec![
                (0, "1.00000000000".to_string()),
                (1, "0.900000000000".to_string()),
                (2, "0.823529411765".to_string()),
                (3, "0.764705882353".to_string()),
            ]
        );
    }

    #[test]
    fn count_series_rows() {
        let mut t = CountTables::new();
        assert_eq!(series_table(&mut t, Series::L, 3).rows[3], (3, "416".to_string()));
        assert_eq!(series_table(&mut t, Series::T, 4).rows[4], (4, "4828".to_string()));
        assert_eq!(series_table(&mut t, Series::Lmax, 2).rows[2], (2, "22".to_string()));
        assert_eq!(series_table(&mut t, Series::Tmax, 3).rows[3], (3, "131".to_string()));
    }

    #[test]
    fn dat_format_is_line_per_record() {
        let mut t = CountTables::new();
        let dat = series_table(&mut t, Series::L, 2).to_dat();
        assert_eq!(dat, "0 2\n1 9\n2 56\n");
    }

    #[test]
    fn first_growth_ratio_is_six_over_the_base() {
        // 6 / (3 + sqrt 8) = 18 - 12 sqrt 2
        let r = asymptotic_ratio_trend(1);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].0, 1);
        assert!(
            r[0].1.starts_with("1.029437251522859"),
            "got {}",
            r[0].1
        );
    }

    #[test]
    fn growth_ratio_trend_has_fifty_digits() {
        let rows = asymptotic_ratio_trend(3);
        for (_, v) in rows {
            let frac = v.split('.').nth(1).unwrap();
            assert_eq!(frac.len(), 50);
        }
    }

    #[test]
    fn within_percent_is_exact() {
        assert!(within_percent(&big(105), &big(100), 5));
        assert!(!within_percent(&big(106), &big(100), 5));
        assert!(within_percent(&big(95), &big(100), 5));
        assert!(!within_percent(&big(94), &big(100), 5));
    }
}
