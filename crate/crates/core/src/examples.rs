//! Four reference codes over GF(8) (`a^3 = a^2 + 1`) with their published
//! generator and control matrices and parameters, and a checker that
//! rebuilds each code from its config and compares.

use std::fmt;

use crate::config::CodeConfig;
use crate::goppa::{build_code, BuildOptions, CodeReport};
use crate::polymat::{to_canonical, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleFixture {
    pub id: String,
    pub config: String,
    /// Published generator matrix in the text format of [`PolyMatrix`].
    pub generator: String,
    /// Published control matrix; any control matrix of the code, not
    /// necessarily the computed one.
    pub control: String,
    pub n: usize,
    pub k: usize,
    pub degree: usize,
    pub memory: usize,
    pub forney_indices: Vec<usize>,
    pub free_distance: u32,
    /// The published generator is stated to be canonical.
    pub canonical: bool,
}

pub const RATE_1_3_CONFIG: &str = include_str!("../configs/rate_1_3.cfg");
pub const RATE_2_3_CONFIG: &str = include_str!("../configs/rate_2_3.cfg");
pub const RATE_1_4_CONFIG: &str = include_str!("../configs/rate_1_4.cfg");
pub const RATE_2_4_CONFIG: &str = include_str!("../configs/rate_2_4.cfg");
pub const COLLINEAR_CONFIG: &str = include_str!("../configs/collinear.cfg");

pub fn fixtures() -> Vec<ExampleFixture> {
    let fx = |id: &str,
              config: &str,
              generator: &str,
              control: &str,
              (n, k, degree, memory): (usize, usize, usize, usize),
              forney: &[usize],
              free_distance: u32,
              canonical: bool| ExampleFixture {
        id: id.to_string(),
        config: config.to_string(),
        generator: generator.to_string(),
        control: control.to_string(),
        n,
        k,
        degree,
        memory,
        forney_indices: forney.to_vec(),
        free_distance,
        canonical,
    };
    vec![
        fx(
            "rate-1/3",
            RATE_1_3_CONFIG,
            "a^6 + az + a^4z^2; a^5 + a^2z + az^2; a^3 + a^4z + a^2z^2",
            "a^5 + a^2z + az^2; a^6 + az + a^4z^2; 0\n\
             a^3 + a^4z + a^2z^2; 0; a^6 + az + a^4z^2",
            (3, 1, 2, 2),
            &[2],
            9,
            true,
        ),
        fx(
            "rate-2/3",
            RATE_2_3_CONFIG,
            "a^2 + az; a^4 + a^2z; a + a^4z\n\
             a + a^4z^2; a^2 + az^2; a^4 + a^2z^2",
            "a^4 + az^2 + a^2z^3; a + a^2z^2 + a^4z^3; a^2 + a^4z^2 + az^3",
            (3, 2, 3, 2),
            &[1, 2],
            6,
            true,
        ),
        fx(
            "rate-1/4",
            RATE_1_4_CONFIG,
            "a^3 + a^3z + z^2; a^6 + a^6z + z^2; a^6 + a^2z + z^2; a^5 + a^5z + z^2",
            "a^6 + a^6z + z^2; a^3 + a^3z + z^2; 0; 0\n\
             a^6 + a^2z + z^2; 0; a^3 + a^3z + z^2; 0\n\
             a^5 + a^5z + z^2; 0; 0; a^3 + a^3z + z^2",
            (4, 1, 2, 2),
            &[2],
            12,
            false,
        ),
        fx(
            "rate-2/4",
            RATE_2_4_CONFIG,
            "a + a^3z; a^2 + a^6z; a^3 + a^2z; a^4 + a^5z\n\
             a^4 + z^2; a + z^2; a^5 + z^2; a^2 + z^2",
            "a^6 + az + z^2 + az^3; a^4 + a^2z + a^4z^2 + z^3; a + az + a^6z^2 + a^5z^3; 0\n\
             a^2 + a^2z + a^5z^2 + a^3z^3; a^4 + a^4z + a^3z^2 + a^6z^3; 0; a + az + a^6z^2 + a^5z^3",
            (4, 2, 3, 2),
            &[1, 2],
            8,
            false,
        ),
    ]
}

/// One disagreement between a rebuilt code and its fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub example: String,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "example {} {}", self.example, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct ExampleOutcome {
    pub id: String,
    pub report: Option<CodeReport>,
    pub mismatches: Vec<Mismatch>,
}

/// Whether each row of `b` is a nonzero constant multiple of the same row
/// of `a`.
pub fn equal_up_to_row_scaling(a: &PolyMatrix, b: &PolyMatrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let f = a.field();
    (0..a.rows()).all(|i| {
        let Some(j) = (0..a.cols()).find(|&j| !a.get(i, j).is_zero()) else {
            return b.row(i).iter().all(|p| p.is_zero());
        };
        let (Some(la), Some(lb)) = (a.get(i, j).leading_coeff(), b.get(i, j).leading_coeff())
        else {
            return false;
        };
        let c = f.div(lb, la).expect("leading coefficient is nonzero");
        (0..a.cols()).all(|j| a.get(i, j).scale(c) == *b.get(i, j))
    })
}

/// Rebuilds one code and lists every disagreement with its fixture.
pub fn verify_example(fx: &ExampleFixture, bruteforce: bool) -> ExampleOutcome {
    let mut mismatches = Vec::new();
    let mut miss = |detail: String| {
        mismatches.push(Mismatch {
            example: fx.id.clone(),
            detail,
        })
    };
    let built = CodeConfig::parse(&fx.config)
        .map_err(|e| e.to_string())
        .and_then(|cfg| {
            let (field, c) = cfg.field_and_construction().map_err(|e| e.to_string())?;
            let opts = BuildOptions {
                compute_distance: true,
                bruteforce,
            };
            let report = build_code(&c, &opts).map_err(|e| e.to_string())?;
            Ok((field, report))
        });
    let (field, report) = match built {
        Ok(ok) => ok,
        Err(e) => {
            miss(format!("does not build: {e}"));
            return ExampleOutcome {
                id: fx.id.clone(),
                report: None,
                mismatches,
            };
        }
    };

    match PolyMatrix::parse_text(&field, &fx.generator) {
        Err(e) => miss(format!("fixture generator unreadable: {e}")),
        Ok(g) => {
            let built = &report.generator_matrix;
            if (g.rows(), g.cols()) != (built.rows(), built.cols()) {
                miss(format!(
                    "generator shape {}x{}, expected {}x{}",
                    built.rows(),
                    built.cols(),
                    g.rows(),
                    g.cols()
                ));
            } else {
                for i in 0..g.rows() {
                    for j in 0..g.cols() {
                        if g.get(i, j) != built.get(i, j) {
                            miss(format!("entry ({},{})", i + 1, j + 1));
                        }
                    }
                }
            }
            // The remaining checks concern the rebuilt generator, so a bad
            // fixture entry is reported once.
            if fx.canonical {
                match to_canonical(built) {
                    Ok((c, _)) if equal_up_to_row_scaling(built, &c) => {}
                    Ok(_) => miss("generator is not canonical".to_string()),
                    Err(e) => miss(format!("generator is not canonical: {e}")),
                }
            }
            match PolyMatrix::parse_text(&field, &fx.control) {
                Err(e) => miss(format!("fixture control matrix unreadable: {e}")),
                Ok(h) if h.cols() != built.cols() => miss("control matrix width".to_string()),
                Ok(h) => {
                    if !built.mul(&h.transpose()).is_zero() {
                        miss("G H^T != 0".to_string());
                    }
                    let rank = h.rank_rational();
                    if rank != fx.n - fx.k {
                        miss(format!("control matrix rank {rank}, expected {}", fx.n - fx.k));
                    }
                }
            }
        }
    }

    let mut param = |name: &str, got: String, want: String| {
        if got != want {
            miss(format!("{name}={got}, expected {want}"));
        }
    };
    param("n", report.n.to_string(), fx.n.to_string());
    param("k", report.k.to_string(), fx.k.to_string());
    param("degree", report.degree.to_string(), fx.degree.to_string());
    param("memory", report.memory.to_string(), fx.memory.to_string());
    param(
        "forney",
        format!("{:?}", report.forney_indices),
        format!("{:?}", fx.forney_indices),
    );
    if let Some(d) = &report.free_distance {
        param("d_free", d.value.to_string(), fx.free_distance.to_string());
        if let Some(bf) = &d.bruteforce {
            param(
                "d_free(bruteforce)",
                bf.value.to_string(),
                fx.free_distance.to_string(),
            );
        }
    }
    param(
        "S",
        report.singleton_bound.to_string(),
        fx.free_distance.to_string(),
    );
    param(
        "MDS",
        format!("{:?}", report.is_mds),
        "Some(true)".to_string(),
    );

    ExampleOutcome {
        id: fx.id.clone(),
        report: Some(report),
        mismatches,
    }
}

/// `4/4 examples verified`, or the mismatch count followed by each mismatch.
pub fn summary(outcomes: &[ExampleOutcome]) -> String {
    let mismatches: Vec<&Mismatch> = outcomes.iter().flat_map(|o| &o.mismatches).collect();
    match mismatches.len() {
        0 => format!("{0}/{0} examples verified", outcomes.len()),
        1 => format!("1 mismatch: {}", mismatches[0]),
        n => {
            let lines: Vec<String> = mismatches.iter().map(|m| format!("  {m}")).collect();
            format!("{n} mismatches:\n{}", lines.join("\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_verify() {
        let outcomes: Vec<_> = fixtures().iter().map(|fx| verify_example(fx, false)).collect();
        assert_eq!(summary(&outcomes), "4/4 examples verified");
    }

    #[test]
    fn perturbed_entry_is_located() {
        let mut fx = fixtures().remove(0);
        fx.generator = fx.generator.replacen("a^5 + a^2z", "a^5 + a^3z", 1);
        let out = verify_example(&fx, false);
        assert_eq!(summary(&[out]), "1 mismatch: example rate-1/3 entry (1,2)");
    }

    #[test]
    fn perturbed_control_matrix_is_caught() {
        let mut fx = fixtures().remove(1);
        fx.control = fx.control.replacen("a^4 + az^2", "a^4 + a^2z^2", 1);
        let out = verify_example(&fx, false);
        assert_eq!(out.mismatches.len(), 1);
        assert_eq!(out.mismatches[0].detail, "G H^T != 0");
    }

    #[test]
    fn row_scaling_comparison() {
        let f = crate::Field::gf8();
        let a = PolyMatrix::parse_text(&f, "a + z; 1\n0; z").unwrap();
        let b = PolyMatrix::parse_text(&f, "a^2 + az; a\n0; a^6z").unwrap();
        assert!(equal_up_to_row_scaling(&a, &b));
        let c = PolyMatrix::parse_text(&f, "a^2 + az; a^2\n0; z").unwrap();
        assert!(!equal_up_to_row_scaling(&a, &c));
    }
}
