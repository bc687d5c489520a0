//! Code specification files.
//!
//! A config is TOML with the tables `[field]`, `[geometry]`, `[sections]`,
//! `[gamma]` and an optional `[options]`. Field elements are written as
//! log-indices of the primitive element, `-1` standing for zero.
//!
//! ```toml
//! [field]
//! p = 2
//! s = 3
//! modulus = [1, 0, 1, 1]
//!
//! [geometry]
//! m = 2
//! r = 2
//!
//! [sections]
//! # one [alpha_log, beta_log] pair per affine coordinate
//! points = [[[1, 2], [2, 4]], [[2, 4], [4, 1]], [[4, 1], [1, 2]]]
//!
//! [gamma]
//! # t + s^2
//! generators = [[{ exponents = [1, 0], coefficient = [0] },
//!                { exponents = [0, 2], coefficient = [0] }]]
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldSpec};
use crate::goppa::{
    BuildOptions, Construction, GammaGenerator, GammaTerm, Section, SectionSet,
};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid value at {path}: {reason}")]
    Invariant { path: String, reason: String },
}

impl ConfigError {
    fn invariant(path: impl Into<String>, reason: impl ToString) -> ConfigError {
        ConfigError::Invariant {
            path: path.into(),
            reason: reason.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldBlock {
    pub p: u32,
    pub s: u32,
    /// Coefficients of the defining polynomial, low to high, monic.
    pub modulus: Vec<u32>,
    /// Coefficients of the primitive element; the class of `x` if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryBlock {
    /// Fiber dimension.
    pub m: usize,
    /// Twist degree.
    pub r: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionsBlock {
    /// `points[j][i] = [alpha_log, beta_log]` for coordinate `i` of section `j`.
    pub points: Vec<Vec<[i64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: Vec<u32>,
    /// Coefficient polynomial in `z`, as log-indices low to high.
    pub coefficient: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaBlock {
    pub generators: Vec<Vec<TermSpec>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OptionsBlock {
    pub compute_distance: bool,
    pub bruteforce_crosscheck: bool,
    pub output_format: OutputFormat,
}

impl Default for OptionsBlock {
    fn default() -> Self {
        OptionsBlock {
            compute_distance: true,
            bruteforce_crosscheck: false,
            output_format: OutputFormat::Human,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    pub field: FieldBlock,
    pub geometry: GeometryBlock,
    pub sections: SectionsBlock,
    pub gamma: GammaBlock,
    #[serde(default)]
    pub options: OptionsBlock,
}

fn located(err: &toml::de::Error, text: &str) -> String {
    let msg = err.message().trim_end().to_string();
    match err.span() {
        Some(span) => {
            let line = text[..span.start.min(text.len())].matches('\n').count() + 1;
            format!("line {line}: {msg}")
        }
        None => msg,
    }
}

impl CodeConfig {
    /// Parses and validates a config; see [`CodeConfig::validate`].
    pub fn parse(text: &str) -> Result<CodeConfig, ConfigError> {
        text.parse::<toml::Table>()
            .map_err(|e| ConfigError::Syntax(located(&e, text)))?;
        let cfg: CodeConfig =
            toml::from_str(text).map_err(|e| ConfigError::Schema(located(&e, text)))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn render(&self) -> String {
        toml::to_string(self).expect("configs always serialize")
    }

    /// Checks every invariant that does not need the field tables, then
    /// builds the field to check the rest.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.field_and_construction().map(|_| ())
    }

    pub fn build_field(&self) -> Result<Field, ConfigError> {
        let mut spec = FieldSpec::new(self.field.p, self.field.s, self.field.modulus.clone());
        if let Some(g) = &self.field.generator {
            spec = spec.with_generator(g.clone());
        }
        Field::new(spec).map_err(|e| ConfigError::invariant("field", e))
    }

    pub fn build_options(&self) -> BuildOptions {
        BuildOptions {
            compute_distance: self.options.compute_distance,
            bruteforce: self.options.bruteforce_crosscheck,
        }
    }

    /// The field and the construction described by this config.
    pub fn field_and_construction(&self) -> Result<(Field, Construction), ConfigError> {
        if self.sections.points.is_empty() {
            return Err(ConfigError::Schema("sections.points is empty".into()));
        }
        if self.gamma.generators.is_empty() {
            return Err(ConfigError::Schema("gamma.generators is empty".into()));
        }
        let field = self.build_field()?;
        let (m, r) = (self.geometry.m, self.geometry.r);
        if m == 0 {
            return Err(ConfigError::invariant("geometry.m", "must be at least 1"));
        }
        let q = field.order() as i64;
        let elem = |path: String, k: i64| {
            if (-1..=q - 2).contains(&k) {
                Ok(field.from_log_index(k).expect("log in range"))
            } else {
                Err(ConfigError::invariant(
                    path,
                    format!("log-index {k} outside [-1, {}]", q - 2),
                ))
            }
        };

        let mut sections = Vec::with_capacity(self.sections.points.len());
        for (j, point) in self.sections.points.iter().enumerate() {
            if point.len() != m {
                return Err(ConfigError::invariant(
                    format!("sections.points[{j}]"),
                    format!("has {} coordinates, geometry.m = {m}", point.len()),
                ));
            }
            let coords = point
                .iter()
                .enumerate()
                .map(|(i, [a, b])| {
                    Ok((
                        elem(format!("sections.points[{j}][{i}][0]"), *a)?,
                        elem(format!("sections.points[{j}][{i}][1]"), *b)?,
                    ))
                })
                .collect::<Result<Vec<_>, ConfigError>>()?;
            sections.push(Section::new(coords));
        }
        let sections = SectionSet::new(&field, sections)
            .map_err(|e| ConfigError::invariant("sections.points", e))?;

        let mut gamma = Vec::with_capacity(self.gamma.generators.len());
        for (g, terms) in self.gamma.generators.iter().enumerate() {
            let path = |t: usize| format!("gamma.generators[{g}][{t}]");
            let mut built = Vec::with_capacity(terms.len());
            for (t, term) in terms.iter().enumerate() {
                if term.exponents.len() != m {
                    return Err(ConfigError::invariant(
                        format!("{}.exponents", path(t)),
                        format!("has length {}, geometry.m = {m}", term.exponents.len()),
                    ));
                }
                let total: u32 = term.exponents.iter().sum();
                if total > r {
                    return Err(ConfigError::invariant(
                        format!("{}.exponents", path(t)),
                        format!("total degree {total} exceeds geometry.r = {r}"),
                    ));
                }
                let coeffs = term
                    .coefficient
                    .iter()
                    .enumerate()
                    .map(|(d, &k)| elem(format!("{}.coefficient[{d}]", path(t)), k))
                    .collect::<Result<Vec<_>, _>>()?;
                built.push(GammaTerm {
                    exponents: term.exponents.clone(),
                    coefficient: Poly::from_coeffs(&field, coeffs),
                });
            }
            let generator = GammaGenerator::new(built).map_err(|e| {
                ConfigError::invariant(format!("gamma.generators[{g}]"), e)
            })?;
            gamma.push(generator);
        }
        Ok((field, Construction { r, gamma, sections }))
    }
}
