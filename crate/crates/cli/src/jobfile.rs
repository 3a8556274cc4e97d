//! Job files: JSON documents describing a family, a divisor and its data.

use limitcyc::cycles::{make_closed_point, ClosedPoint, ZeroCycle};
use limitcyc::factor::UniPoly;
use limitcyc::intersect::plane_intersection_cycle;
use limitcyc::limits::{Certificate, Component, FamilyJob, JobOptions};
use limitcyc::poly::{parse_poly, MultiPoly, Var, USER_VARS};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub g: String,
    #[serde(default = "one")]
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateSpec {
    pub component: usize,
    pub a: String,
    pub p: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OptionsSpec {
    pub run_oracle: bool,
    pub assume_irreducible: bool,
    pub search_certificates: bool,
}

impl Default for OptionsSpec {
    fn default() -> Self {
        let o = JobOptions::default();
        OptionsSpec {
            run_oracle: o.run_oracle,
            assume_irreducible: o.assume_irreducible,
            search_certificates: o.search_certificates,
        }
    }
}

/// A term of an expected cycle: `coeff * [p . q]`, or `coeff` times a closed
/// point given by coordinates over `Q[u]/(minpoly)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpectedTerm {
    Intersection {
        p: String,
        q: String,
        #[serde(default = "one_i64")]
        coeff: i64,
    },
    Point {
        point: [String; 3],
        #[serde(default)]
        minpoly: Option<String>,
        #[serde(default = "one_i64")]
        coeff: i64,
    },
}

fn one() -> u32 {
    1
}

fn one_i64() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    #[serde(default)]
    pub kind: Option<String>,
    #[serde(default)]
    pub name: Option<String>,
    pub family: String,
    pub divisor: String,
    #[serde(default = "one")]
    pub multiplier: u32,
    pub components: Vec<ComponentSpec>,
    #[serde(default)]
    pub certificates: Option<Vec<CertificateSpec>>,
    #[serde(default)]
    pub options: OptionsSpec,
    #[serde(default)]
    pub expected: Option<Vec<ExpectedTerm>>,
}

pub fn poly(text: &str, field: &str) -> Result<MultiPoly, CliError> {
    parse_poly(text, USER_VARS).map_err(|e| CliError::Input(format!("{field}: {e}")))
}

impl JobFile {
    pub fn from_json(text: &str) -> Result<JobFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("job file: {e}")))
    }

    pub fn to_job(&self) -> Result<FamilyJob, CliError> {
        if self.multiplier == 0 {
            return Err(CliError::Input("multiplier must be at least 1".into()));
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.m == 0 {
                    return Err(CliError::Input(format!("components[{i}].m must be at least 1")));
                }
                Ok(Component {
                    g: poly(&c.g, &format!("components[{i}].g"))?,
                    m: c.m,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let certificates = match &self.certificates {
            None => Vec::new(),
            Some(cs) => cs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if c.component >= components.len() {
                        return Err(CliError::Input(format!(
                            "certificates[{i}].component = {} is out of range",
                            c.component
                        )));
                    }
                    Ok(Certificate::new(c.component, poly(&c.a, &format!("certificates[{i}].a"))?, c.p))
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        let mut job = FamilyJob::new(poly(&self.family, "family")?, poly(&self.divisor, "divisor")?, components)
            .with_multiplier(self.multiplier)
            .with_certificates(certificates);
        job.options = JobOptions {
            run_oracle: self.options.run_oracle,
            assume_irreducible: self.options.assume_irreducible,
            search_certificates: self.options.search_certificates,
        };
        Ok(job)
    }

    /// The theorem path needs certificates or permission to search.
    pub fn check_theorem_inputs(&self) -> Result<(), CliError> {
        let given = self.certificates.as_ref().is_some_and(|c| !c.is_empty());
        match (given, self.options.search_certificates) {
            (true, true) => Err(CliError::Input(
                "give either certificates or search_certificates, not both".into(),
            )),
            (false, false) => Err(CliError::Input(
                "no certificates given and search_certificates is false".into(),
            )),
            _ => Ok(()),
        }
    }
}

fn point_of(coords: &[String; 3], minpoly: Option<&str>) -> Result<ClosedPoint, CliError> {
    let ring = [Var::U];
    let uni = |s: &str| -> Result<UniPoly, CliError> {
        let p = parse_poly(s, &ring).map_err(|e| CliError::Input(format!("expected point: {e}")))?;
        UniPoly::from_multi(&p, Var::U).ok_or_else(|| CliError::Input(format!("`{s}` is not univariate in u")))
    };
    let modulus = match minpoly {
        Some(m) => uni(m)?,
        None => uni("u")?,
    };
    let [x, y, z] = coords;
    make_closed_point(&modulus, [uni(x)?, uni(y)?, uni(z)?]).map_err(|e| CliError::Input(format!("expected point: {e}")))
}

/// Evaluates the expected terms to a cycle.
pub fn expected_cycle(terms: &[ExpectedTerm]) -> Result<ZeroCycle, CliError> {
    let mut total = ZeroCycle::new();
    for term in terms {
        let c = match term {
            ExpectedTerm::Intersection { p, q, coeff } => plane_intersection_cycle(&poly(p, "expected.p")?, &poly(q, "expected.q")?)
                .map_err(|e| CliError::Input(format!("expected term: {e}")))?
                .scale(*coeff),
            ExpectedTerm::Point { point, minpoly, coeff } => ZeroCycle::point(point_of(point, minpoly.as_deref())?, *coeff),
        };
        total = total.add(&c);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_rejections() {
        let j = JobFile::from_json(r#"{"family":"x*y + t*z^2","divisor":"x + y + z","components":[{"g":"x"},{"g":"y"}]}"#).unwrap();
        assert_eq!(j.multiplier, 1);
        assert!(j.options.run_oracle && !j.options.search_certificates);
        assert!(j.check_theorem_inputs().is_err());
        assert_eq!(j.to_job().unwrap().components[1].m, 1);
        assert!(JobFile::from_json(r#"{"family":"x","divisor":"y","components":[],"bogus":1}"#).is_err());
        let bad = JobFile::from_json(r#"{"family":"x*y +","divisor":"y","components":[]}"#).unwrap();
        assert!(matches!(bad.to_job(), Err(CliError::Input(_))));
        let out = JobFile::from_json(
            r#"{"family":"x*y","divisor":"z","components":[{"g":"x"}],"certificates":[{"component":3,"a":"1","p":0}]}"#,
        )
        .unwrap();
        assert!(out.to_job().is_err());
    }

    #[test]
    fn expected_terms() {
        let terms: Vec<ExpectedTerm> = serde_json::from_str(
            r#"[{"p":"z","q":"x","coeff":3},{"point":["1","0","-1"]},{"point":["1","0","-u"],"minpoly":"u^2 + u + 1"}]"#,
        )
        .unwrap();
        let c = expected_cycle(&terms).unwrap();
        assert_eq!(c.degree(), 3 + 1 + 2);
        assert_eq!(c.len(), 3);
    }
}
