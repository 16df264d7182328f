use std::collections::HashSet;

use super::{parse_poly, MultiPoly, PolyError};

pub const MAX_VARIABLES: usize = 4;
pub const DEFAULT_DEGREE_CAP: u32 = 24;

/// `Q[x_1..x_m]/I` given by generators of `I`. Every generator has zero
/// constant term and zero linear part, which is what makes the quotient
/// (when finite-dimensional and local) have maximal ideal `(x_1..x_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    variables: Vec<String>,
    relations: Vec<MultiPoly>,
    degree_cap: u32,
}

impl Presentation {
    pub fn new(variables: Vec<String>, relations: Vec<MultiPoly>) -> Result<Self, PolyError> {
        if variables.is_empty() {
            return Err(PolyError::BadVariables("no variables declared".into()));
        }
        if variables.len() > MAX_VARIABLES {
            return Err(PolyError::TooManyVariables { max: MAX_VARIABLES, got: variables.len() });
        }
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v) {
                return Err(PolyError::BadVariables(format!("duplicate variable '{v}'")));
            }
        }
        for (index, r) in relations.iter().enumerate() {
            assert_eq!(r.nvars(), variables.len(), "relation ring mismatch");
            match r.order() {
                Some(0) => return Err(PolyError::LocalityViolation { index, part: "constant" }),
                Some(1) => return Err(PolyError::LocalityViolation { index, part: "linear" }),
                _ => {}
            }
        }
        Ok(Presentation { variables, relations, degree_cap: DEFAULT_DEGREE_CAP })
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    /// Every relation homogeneous in total degree.
    pub fn is_standard_graded(&self) -> bool {
        self.relations.iter().all(MultiPoly::is_homogeneous)
    }

    /// Parses the line-oriented presentation format:
    ///
    /// ```text
    /// # comment
    /// vars t s
    /// rel t*s
    /// rel t^3 - s^2
    /// ```
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut vars: Option<Vec<String>> = None;
        let mut rels = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = content.len() - trimmed.len();
            let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest_col = indent + keyword.len() + 2;
            match keyword {
                "vars" => {
                    if vars.is_some() {
                        return Err(syntax(line, indent + 1, "duplicate 'vars' line"));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(syntax(line, rest_col, "expected at least one variable name"));
                    }
                    if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                        return Err(syntax(line, rest_col, &format!("invalid variable name '{bad}'")));
                    }
                    vars = Some(names);
                }
                "rel" => {
                    let Some(vs) = &vars else {
                        return Err(syntax(line, indent + 1, "'rel' before 'vars'"));
                    };
                    let p = parse_poly(rest, vs).map_err(|e| match e {
                        PolyError::Parse { col, message } => PolyError::Syntax { line, col: col + rest_col - 1, message },
                        other => other,
                    })?;
                    if p.is_zero() {
                        return Err(syntax(line, rest_col, "relation is the zero polynomial"));
                    }
                    rels.push(p);
                }
                other => return Err(syntax(line, indent + 1, &format!("unknown keyword '{other}'"))),
            }
        }
        let Some(vars) = vars else {
            return Err(syntax(1, 1, "missing 'vars' line"));
        };
        if rels.is_empty() {
            return Err(syntax(1, 1, "at least one 'rel' line is required"));
        }
        Self::new(vars, rels)
    }

    /// Inverse of [`Presentation::parse`]; re-parses to an equal presentation.
    pub fn to_text(&self) -> String {
        let mut out = format!("vars {}\n", self.variables.join(" "));
        for r in &self.relations {
            out.push_str(&format!("rel {}\n", r.render(&self.variables)));
        }
        out
    }
}

fn syntax(line: usize, col: usize, message: &str) -> PolyError {
    PolyError::Syntax { line, col, message: message.to_string() }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_example_files() {
        let p = Presentation::parse("vars t\nrel t^4").unwrap();
        assert_eq!(p.nvars(), 1);
        assert_eq!(p.relations().len(), 1);

        let p = Presentation::parse("# two variables\nvars t s\nrel t*s\nrel t^3 - s^2\n").unwrap();
        assert_eq!(p.variables(), &["t".to_string(), "s".to_string()]);
        assert!(!p.is_standard_graded());
    }

    #[test]
    fn rejects_linear_part() {
        assert_eq!(
            Presentation::parse("vars t\nrel t^2 - t"),
            Err(PolyError::LocalityViolation { index: 0, part: "linear" })
        );
        assert_eq!(
            Presentation::parse("vars t\nrel t^2 + 1"),
            Err(PolyError::LocalityViolation { index: 0, part: "constant" })
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        match Presentation::parse("vars t s\nrel t*s\nrel t^3 - q") {
            Err(PolyError::Syntax { line, col, .. }) => assert_eq!((line, col), (3, 11)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Presentation::parse("rel t^2"), Err(PolyError::Syntax { line: 1, .. })));
        assert!(matches!(Presentation::parse("vars a b c d e\nrel a^2"), Err(PolyError::TooManyVariables { .. })));
    }

    proptest! {
        #[test]
        fn text_round_trip(coeffs in prop::collection::vec((-5i64..=5, 1i64..=4, 0u32..4, 0u32..4), 1..5)) {
            let vars = vec!["t".to_string(), "s".to_string()];
            let mut rel = MultiPoly::zero(2);
            for (n, d, a, b) in coeffs {
                if a + b >= 2 {
                    rel.add_term(super::super::Monomial::from_exponents(vec![a, b]), crate::linalg::frac(n, d));
                }
            }
            prop_assume!(!rel.is_zero());
            let p = Presentation::new(vars, vec![rel]).unwrap();
            prop_assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
        }
    }
}
