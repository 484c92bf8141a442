//! Matrices and period-polynomial bases as CSV or JSON cells of `"p/q"` strings.

use clap::ValueEnum;

use mdz_core::exactalg::format_rational;
use mdz_core::periodpoly::{d_matrix, wk_plus0};
use mdz_core::sumodd::{e_depth2_closed, m_tilde, WordPipeline};
use mdz_core::{higherdepth, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// E on T_{N,r}; r = 2 gives M̃B.
    #[value(name = "matrix-E")]
    MatrixE,
    /// F, the ∂-matrix of the depth-two tuples with an even part.
    #[value(name = "matrix-F")]
    MatrixF,
    #[value(name = "matrix-Mtilde")]
    MatrixMtilde,
    /// W_N^{+,0}, one row of coefficients of X^0 … X^{N-2} per basis element.
    #[value(name = "period-basis")]
    PeriodBasis,
    #[value(name = "D-matrix")]
    DMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Row-major cells of the requested object.
pub fn cells(object: Object, weight: u32, depth: usize) -> Result<Vec<Vec<String>>> {
    match object {
        Object::MatrixE if depth == 2 => Ok(e_depth2_closed(weight)?.to_cells()),
        Object::MatrixE => Ok(higherdepth::e_matrix(weight, depth)?.matrix.to_cells()),
        Object::MatrixF => Ok(WordPipeline::new().f_matrix(weight)?.to_cells()),
        Object::MatrixMtilde => Ok(m_tilde(weight)?.to_cells()),
        Object::PeriodBasis => Ok(wk_plus0(weight)?
            .basis
            .iter()
            .map(|p| p.coeffs().iter().map(format_rational).collect())
            .collect()),
        Object::DMatrix => Ok(d_matrix(weight)?.to_cells()),
    }
}

pub fn render(cells: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for row in cells {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string(cells).expect("cells serialize");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let e = cells(Object::MatrixE, 9, 3).unwrap();
        assert_eq!((e.len(), e[0].len()), (10, 10));
        let p = cells(Object::PeriodBasis, 8, 0).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].len(), 7);
        assert!(cells(Object::MatrixE, 8, 3).is_err());
    }

    #[test]
    fn rendering() {
        let c = vec![vec!["1/2".to_string(), "-3/1".to_string()]];
        assert_eq!(render(&c, Format::Csv), "1/2,-3/1\n");
        assert_eq!(render(&c, Format::Json), "[[\"1/2\",\"-3/1\"]]\n");
    }
}
