//! The full pipeline on one presentation, and its JSON and text reports.

use serde::Serialize;

use crate::algebra::{IndexPolynomial, LocalAlgebra};
use crate::bounds::{
    check_perepechko, check_yau, christophersen_check, schulze_criterion, BoundReport, ChristophersenRecord,
    SchulzeReport,
};
use crate::derivations::DerivationSpace;
use crate::error::ArtinderError;
use crate::lie::{cartan_solvable, MatrixLieAlgebra};
use crate::linalg::{render_rational, QMatrix};
use crate::nullindex::{verdict, Certificate, NullIndexConfig, NullIndexVerdict};
use crate::poly::Presentation;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub presentation: Presentation,
    pub algebra: LocalAlgebra,
    pub derivations: DerivationSpace,
    pub der: MatrixLieAlgebra,
    pub index_polynomial: Option<IndexPolynomial>,
    /// Present exactly for Gorenstein algebras.
    pub null_index: Option<NullIndexVerdict>,
    pub perepechko: BoundReport,
    pub yau: BoundReport,
    pub schulze: SchulzeReport,
    pub christophersen: ChristophersenRecord,
}

/// Runs every stage and cross-checks the results that theorems guarantee.
pub fn analyze(p: &Presentation, config: &NullIndexConfig) -> Result<Analysis, ArtinderError> {
    let algebra = LocalAlgebra::from_presentation(p)?;
    let derivations = DerivationSpace::new(&algebra);
    let der = MatrixLieAlgebra::new(derivations.ambient(), derivations.basis())
        .map_err(|e| ArtinderError::Internal(format!("derivations: {e}")))?;
    let (index_polynomial, null_index) = if algebra.is_gorenstein() {
        let ip = algebra.index_polynomial()?;
        let v = verdict(&derivations, &ip, config);
        if !v.verify(&derivations, &ip) {
            return Err(ArtinderError::Internal(format!("null-index {} failed re-verification", v.label())));
        }
        (Some(ip), Some(v))
    } else {
        (None, None)
    };
    let perepechko = check_perepechko(&algebra, &derivations);
    let yau = check_yau(&algebra, &derivations);
    let schulze = schulze_criterion(p, algebra.nilpotency_index());
    let christophersen = christophersen_check(&algebra, &derivations);
    for b in [&perepechko, &yau] {
        if b.holds == Some(false) {
            return Err(ArtinderError::Internal(format!("{} bound violated: {} < {}", b.bound, b.lhs, b.rhs)));
        }
    }
    if schulze.hypothesis && !der.is_solvable() {
        return Err(ArtinderError::Internal("Schulze hypothesis holds but Der(A) is not solvable".into()));
    }
    Ok(Analysis {
        presentation: p.clone(),
        algebra,
        derivations,
        der,
        index_polynomial,
        null_index,
        perepechko,
        yau,
        schulze,
        christophersen,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    pub n: usize,
    pub basis: Vec<String>,
    pub graded: bool,
    pub hilbert_samuel: Vec<usize>,
    pub nilpotency_index: usize,
    pub dim_soc: usize,
    pub gorenstein: bool,
    pub socle_generator: Option<String>,
    pub index_polynomial: Option<String>,
    pub dim_der: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation_basis: Option<DerivationBasis>,
    pub solvable: bool,
    pub derived_series: Vec<usize>,
    pub cartan_solvable: bool,
    pub nilpotent: bool,
    pub lower_central_series: Vec<usize>,
    pub null_index: NullIndexReport,
    pub bounds: Bounds,
    pub christophersen: ChristophersenRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationBasis {
    /// Basis of `m` the matrices act on, columns as images.
    pub frame: Vec<String>,
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub perepechko: BoundReport,
    pub yau: BoundReport,
    pub schulze: SchulzeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchulzeJson {
    pub k: usize,
    pub l: u32,
    pub dim_i_mod_pi: usize,
    #[serde(flatten)]
    pub report: BoundReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullIndexReport {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalars: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenspaces: Option<Vec<EigenspaceJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenspaceJson {
    pub minimal_polynomial: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub coefficients: Vec<String>,
    pub rho: Vec<Vec<String>>,
    pub minimal_polynomial: String,
    pub eigenvalue: String,
    pub eigenbasis: Vec<Vec<String>>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchJson {
    pub samples: usize,
    pub combinations: usize,
    pub unfactored: usize,
}

fn render_all<'a>(xs: impl IntoIterator<Item = &'a crate::linalg::Rational>) -> Vec<String> {
    xs.into_iter().map(render_rational).collect()
}

impl NullIndexReport {
    fn new(v: Option<&NullIndexVerdict>, analysis: &Analysis) -> Self {
        let mut out = NullIndexReport {
            verdict: v.map_or("not-gorenstein", NullIndexVerdict::label).to_string(),
            scalars: None,
            pencil: None,
            eigenspaces: None,
            witness: None,
            search: None,
        };
        match v {
            Some(NullIndexVerdict::Full { certificate: Certificate::ScalarImage { scalars } }) => {
                out.scalars = Some(render_all(scalars));
            }
            Some(NullIndexVerdict::Full { certificate: Certificate::ExhaustiveEigen { pencil, eigenspaces } }) => {
                out.pencil = Some(pencil.render_rows());
                out.eigenspaces = Some(
                    eigenspaces
                        .iter()
                        .map(|(f, dim)| EigenspaceJson { minimal_polynomial: f.render("θ"), dim: *dim })
                        .collect(),
                );
            }
            Some(NullIndexVerdict::NotFull { witness }) => {
                let field = witness.field();
                let ip = analysis.index_polynomial.as_ref().expect("verdicts come with an index polynomial");
                out.witness = Some(WitnessJson {
                    coefficients: render_all(&witness.coefficients),
                    rho: witness.rho.render_rows(),
                    minimal_polynomial: witness.minimal_polynomial.render("θ"),
                    eigenvalue: witness.rational_eigenvalue().map_or_else(|| "θ".to_string(), |l| render_rational(&l)),
                    eigenbasis: witness.eigenbasis.iter().map(|v| v.iter().map(|x| field.render(x)).collect()).collect(),
                    verified: witness.verify(&analysis.derivations, ip),
                });
            }
            Some(NullIndexVerdict::Unknown { samples, combinations, unfactored }) => {
                out.search = Some(SearchJson { samples: *samples, combinations: *combinations, unfactored: *unfactored });
            }
            Some(NullIndexVerdict::Full { certificate: Certificate::TrivialV }) | None => {}
        }
        out
    }
}

impl Analysis {
    pub fn solvable(&self) -> bool {
        self.der.is_solvable()
    }

    pub fn report(&self, with_basis: bool) -> AlgebraReport {
        let a = &self.algebra;
        let p = &self.presentation;
        let names = p.variables();
        let derivation_basis = with_basis.then(|| {
            let adapted = self.derivations.algebra();
            DerivationBasis {
                frame: adapted.labels()[1..].to_vec(),
                matrices: self.derivations.basis().iter().map(QMatrix::render_rows).collect(),
            }
        });
        AlgebraReport {
            variables: names.to_vec(),
            relations: p.relations().iter().map(|r| r.render(names)).collect(),
            n: a.dim(),
            basis: a.labels().to_vec(),
            graded: a.is_graded(),
            hilbert_samuel: a.hilbert_samuel(),
            nilpotency_index: a.nilpotency_index(),
            dim_soc: a.socle().dim(),
            gorenstein: a.is_gorenstein(),
            socle_generator: self.index_polynomial.as_ref().map(|ip| ip.socle_label.clone()),
            index_polynomial: self.index_polynomial.as_ref().map(IndexPolynomial::render),
            dim_der: self.derivations.dim(),
            derivation_basis,
            solvable: self.der.is_solvable(),
            derived_series: self.der.derived_series(),
            cartan_solvable: cartan_solvable(&self.der),
            nilpotent: self.der.is_nilpotent(),
            lower_central_series: self.der.lower_central_series(),
            null_index: NullIndexReport::new(self.null_index.as_ref(), self),
            bounds: Bounds {
                perepechko: self.perepechko.clone(),
                yau: self.yau.clone(),
                schulze: SchulzeJson {
                    k: self.schulze.k,
                    l: self.schulze.l,
                    dim_i_mod_pi: self.schulze.dim_i_mod_pi,
                    report: self.schulze.bound_report(),
                },
            },
            christophersen: self.christophersen.clone(),
        }
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", parts.join(", "))
}

fn bound_line(b: &BoundReport) -> String {
    let verdict = match b.holds {
        Some(true) => "holds",
        Some(false) => "fails",
        None => "not applicable",
    };
    let mut line = format!("{}: {} >= {} {}", b.bound, b.lhs, b.rhs, verdict);
    if let Some(note) = &b.note {
        line.push_str(&format!(" ({note})"));
    }
    line
}

impl AlgebraReport {
    /// Pretty JSON with a trailing newline; keys in declaration order.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("presentation: Q[{}]/({})", self.variables.join(", "), self.relations.join(", ")));
        out.push(format!("n: {}", self.n));
        out.push(format!("basis: {}", self.basis.join(", ")));
        out.push(format!("graded: {}", self.graded));
        out.push(format!("hilbert_samuel: {}", list(&self.hilbert_samuel)));
        out.push(format!("dim_soc: {}", self.dim_soc));
        out.push(format!("gorenstein: {}", self.gorenstein));
        if let (Some(s), Some(p)) = (&self.socle_generator, &self.index_polynomial) {
            out.push(format!("socle_generator: {s}"));
            out.push(format!("P_A: {p}"));
        }
        out.push(format!("dim_der: {}", self.dim_der));
        if let Some(b) = &self.derivation_basis {
            out.push(format!("derivation basis on ({}):", b.frame.join(", ")));
            for m in &b.matrices {
                let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                out.push(format!("  [{}]", rows.join(", ")));
            }
        }
        out.push(format!("solvable: {} (derived series {})", self.solvable, list(&self.derived_series)));
        out.push(format!("cartan_solvable: {}", self.cartan_solvable));
        out.push(format!("nilpotent: {} (lower central series {})", self.nilpotent, list(&self.lower_central_series)));
        out.push(format!("null_index: {}", self.null_index.verdict));
        if let Some(w) = &self.null_index.witness {
            out.push(format!("  eigenvalue {} with minimal polynomial {}", w.eigenvalue, w.minimal_polynomial));
            for v in &w.eigenbasis {
                out.push(format!("  eigenvector ({})", v.join(", ")));
            }
            out.push(format!("  verified: {}", w.verified));
        }
        out.push(bound_line(&self.bounds.perepechko));
        out.push(bound_line(&self.bounds.yau));
        out.push(format!(
            "schulze: k = {}, l = {}, dim I/pI = {}; {}",
            self.bounds.schulze.k,
            self.bounds.schulze.l,
            self.bounds.schulze.dim_i_mod_pi,
            if self.bounds.schulze.report.holds == Some(true) { "predicts solvable" } else { "silent" }
        ));
        let c = &self.christophersen;
        out.push(format!(
            "christophersen: dim_der = {} vs n - 1 = {}, {}{}",
            c.dim_der,
            c.n - 1,
            if c.equality { "equality" } else if c.bound_holds { "strict" } else { "violated" },
            if c.is_chain { ", chain" } else { "" }
        ));
        out.join("\n") + "\n"
    }
}
