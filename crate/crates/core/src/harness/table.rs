use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{floor_r, h2_bound, largest_root_r, Chi};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub chi: i64,
    pub r: f64,
    pub floor_r: i64,
    /// `ceil(sqrt(12 - 6χ) - 1/2)`.
    pub h2_excess: u64,
    pub residual: f64,
}

/// One row per `χ = 0, -1, …, chi_min`.
pub fn cmd_table(chi_min: i64) -> Result<Vec<TableRow>> {
    if chi_min > 0 {
        return Err(Error::ChiOutOfRange {
            chi: chi_min,
            allowed: "chi <= 0",
        });
    }
    (chi_min..=0)
        .rev()
        .map(|x| {
            let chi = Chi::new(x)?;
            let root = largest_root_r(chi)?;
            Ok(TableRow {
                chi: x,
                r: root.r,
                floor_r: floor_r(chi)?,
                h2_excess: h2_bound(0, chi)?,
                residual: root.residual,
            })
        })
        .collect()
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = String::from("chi\tr\tfloor_r\tceil_sqrt\tresidual\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{}\t{:.12}\t{}\t{}\t{:.1e}",
            row.chi, row.r, row.floor_r, row.h2_excess, row.residual
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row() {
        let rows = cmd_table(0).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(
            (rows[0].chi, rows[0].r, rows[0].floor_r, rows[0].h2_excess),
            (0, 3.0, 3, 3)
        );
    }

    #[test]
    fn positive_rejected() {
        assert!(cmd_table(1).is_err());
    }

    #[test]
    fn rendering() {
        let text = render_table(&cmd_table(-1).unwrap());
        assert_eq!(text.lines().count(), 3);
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("0\t3.000000000000\t3\t3"));
    }

    #[test]
    fn floor_column_is_monotone() {
        let rows = cmd_table(-1000).unwrap();
        assert_eq!(rows.len(), 1001);
        assert!(rows.windows(2).all(|w| w[0].floor_r <= w[1].floor_r));
        assert!(rows.iter().all(|r| r.residual <= 1e-9));
    }
}
