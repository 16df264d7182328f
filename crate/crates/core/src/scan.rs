//! Corpus scan of monomial algebras against `dim Der(A) ≥ n − 1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{enumerate_staircases, Staircase};
use crate::catalog::EXAMPLES;
use crate::error::ArtinderError;
use crate::nullindex::NullIndexConfig;
use crate::poly::Presentation;
use crate::report::{analyze, Analysis};

pub const MAX_SCAN_DIM: usize = 10;
pub const MAX_SCAN_VARS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_dim: usize,
    pub max_vars: usize,
    /// Append rows for the five catalog algebras.
    pub include_catalog: bool,
    pub null_index: NullIndexConfig,
}

impl ScanConfig {
    pub fn new(max_dim: usize, max_vars: usize) -> Self {
        ScanConfig { max_dim, max_vars, include_catalog: false, null_index: NullIndexConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub staircase: String,
    pub n: usize,
    pub hilbert_samuel: String,
    pub dim_soc: usize,
    pub gorenstein: bool,
    pub dim_der: usize,
    pub solvable: bool,
    pub null_index_verdict: String,
    pub perepechko_lhs: usize,
    pub perepechko_rhs: usize,
    pub perepechko_holds: bool,
    pub yau_applicable: bool,
    pub yau_lhs: usize,
    pub yau_rhs: usize,
    pub schulze_hypothesis: bool,
    pub christophersen_equality: bool,
    pub is_chain: bool,
}

impl ScanRow {
    pub fn new(label: String, a: &Analysis) -> Self {
        let hs: Vec<String> = a.algebra.hilbert_samuel().iter().map(usize::to_string).collect();
        ScanRow {
            staircase: label,
            n: a.algebra.dim(),
            hilbert_samuel: format!("({})", hs.join(",")),
            dim_soc: a.algebra.socle().dim(),
            gorenstein: a.algebra.is_gorenstein(),
            dim_der: a.derivations.dim(),
            solvable: a.solvable(),
            null_index_verdict: a.null_index.as_ref().map_or("not-gorenstein", |v| v.label()).to_string(),
            perepechko_lhs: a.perepechko.lhs,
            perepechko_rhs: a.perepechko.rhs,
            perepechko_holds: a.perepechko.holds == Some(true),
            yau_applicable: a.yau.applicable,
            yau_lhs: a.yau.lhs,
            yau_rhs: a.yau.rhs,
            schulze_hypothesis: a.schulze.hypothesis,
            christophersen_equality: a.christophersen.equality,
            is_chain: a.christophersen.is_chain,
        }
    }

    /// `dim Der(A) − (n − 1)`.
    pub fn margin(&self) -> i64 {
        self.dim_der as i64 - (self.n as i64 - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanFooter {
    pub rows: usize,
    pub min_margin: Option<i64>,
    pub equality_cases: Vec<String>,
    /// Every equality case is a chain algebra and every chain algebra is an equality case.
    pub equality_exactly_at_chains: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub max_dim: usize,
    pub max_vars: usize,
    pub rows: Vec<ScanRow>,
    pub footer: ScanFooter,
}

/// A labelled algebra in the corpus: a staircase or a catalog entry.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub staircase: Option<Staircase>,
    pub presentation: Presentation,
}

/// Staircases of size `2..=max_dim` in key order, then the catalog if asked.
pub fn corpus(config: &ScanConfig) -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = enumerate_staircases(config.max_dim, config.max_vars)
        .into_iter()
        .filter_map(|s| {
            let presentation = s.presentation()?;
            Some(CorpusEntry { label: s.encoding(), staircase: Some(s), presentation })
        })
        .collect();
    if config.include_catalog {
        for (name, _) in EXAMPLES {
            let presentation = crate::catalog::example(name).expect("catalog entries parse");
            out.push(CorpusEntry { label: format!("catalog:{name}"), staircase: None, presentation });
        }
    }
    out
}

/// Analyzes every corpus entry in parallel; row order is corpus order.
pub fn analyze_corpus(config: &ScanConfig) -> Result<Vec<(CorpusEntry, Analysis)>, ArtinderError> {
    if config.max_dim > MAX_SCAN_DIM || config.max_vars > MAX_SCAN_VARS {
        return Err(ArtinderError::Usage(format!(
            "scan limits are max_dim <= {MAX_SCAN_DIM} and max_vars <= {MAX_SCAN_VARS}"
        )));
    }
    corpus(config)
        .into_par_iter()
        .map(|e| {
            let a = analyze(&e.presentation, &config.null_index)
                .map_err(|err| ArtinderError::Internal(format!("{}: {err}", e.label)))?;
            Ok((e, a))
        })
        .collect()
}

pub fn scan(config: &ScanConfig) -> Result<ScanReport, ArtinderError> {
    let rows: Vec<ScanRow> = analyze_corpus(config)?.iter().map(|(e, a)| ScanRow::new(e.label.clone(), a)).collect();
    let equality_cases: Vec<String> =
        rows.iter().filter(|r| r.christophersen_equality).map(|r| r.staircase.clone()).collect();
    let footer = ScanFooter {
        rows: rows.len(),
        min_margin: rows.iter().map(ScanRow::margin).min(),
        equality_exactly_at_chains: rows.iter().all(|r| r.christophersen_equality == r.is_chain),
        equality_cases,
    };
    Ok(ScanReport { max_dim: config.max_dim, max_vars: config.max_vars, rows, footer })
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scan reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_four_two_vars_has_six_rows() {
        let r = scan(&ScanConfig::new(4, 2)).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert!(r.rows.iter().all(|row| row.perepechko_holds));
    }

    #[test]
    fn dim_two_is_the_smallest_chain() {
        let r = scan(&ScanConfig::new(2, 3)).unwrap();
        assert_eq!(r.rows.len(), 1);
        let row = &r.rows[0];
        assert_eq!((row.staircase.as_str(), row.n, row.dim_der), ("{1,t}", 2, 1));
        assert!(row.christophersen_equality);
        assert_eq!(r.footer.min_margin, Some(0));
        assert_eq!(r.footer.equality_cases, ["{1,t}"]);
    }

    #[test]
    fn catalog_rows_are_appended() {
        let mut c = ScanConfig::new(3, 2);
        c.include_catalog = true;
        let r = scan(&c).unwrap();
        assert_eq!(r.rows.len(), 3 + 5);
        assert_eq!(r.rows.last().unwrap().staircase, "catalog:example5");
    }

    #[test]
    fn limits_are_enforced() {
        assert!(scan(&ScanConfig::new(11, 2)).is_err());
        assert!(scan(&ScanConfig::new(4, 4)).is_err());
    }
}
