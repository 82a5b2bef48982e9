//! JSON input formats: dimer tilings and bare monomial models.
//!
//! A tiling file carries the quiver, its faces, and a catalog of named
//! contractions. A model file carries semigroup generators and a
//! distinguished monomial directly, for centers of the shape `k + sigma*S`
//! that are studied without a tiling behind them. The two are told apart by
//! their keys: tilings have `arrows`, models have `algebra_gens`.

use std::collections::{BTreeMap, BTreeSet};

use dimerlab_core::center::MonomialModel;
use dimerlab_core::monomial::Monomial;
use dimerlab_core::tiling::{Arrow, DimerQuiver, Face, FaceColor};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub tail: usize,
    pub head: usize,
    /// Winding numbers around the two torus directions.
    pub winding: (i64, i64),
    #[serde(default)]
    pub label: Option<String>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ColorSpec {
    Plus,
    Minus,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceSpec {
    /// Arrow ids in traversal order around the face.
    pub boundary: Vec<usize>,
    pub color: ColorSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingFile {
    pub name: String,
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
    pub faces: Vec<FaceSpec>,
    /// Named arrow sets available to `--contract`.
    #[serde(default)]
    pub contractions: BTreeMap<String, Vec<usize>>,
}

impl TilingFile {
    pub fn to_quiver(&self) -> DimerQuiver {
        DimerQuiver {
            vertices: self.vertices,
            arrows: self
                .arrows
                .iter()
                .map(|a| match &a.label {
                    Some(l) => Arrow::labeled(a.tail, a.head, a.winding, l),
                    None => Arrow::new(a.tail, a.head, a.winding),
                })
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|f| Face {
                    boundary: f.boundary.clone(),
                    color: match f.color {
                        ColorSpec::Plus => FaceColor::Plus,
                        ColorSpec::Minus => FaceColor::Minus,
                    },
                })
                .collect(),
        }
    }

    pub fn contraction_arrows(&self, name: &str) -> Option<BTreeSet<usize>> {
        self.contractions
            .get(name)
            .map(|v| v.iter().copied().collect())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub name: String,
    /// One name per exponent coordinate.
    pub coords: Vec<String>,
    pub algebra_gens: Vec<Vec<u32>>,
    pub sigma: Vec<u32>,
}

impl ModelFile {
    /// Consistency problems that make the model unusable, each as one line.
    pub fn problems(&self) -> Vec<String> {
        let width = self.coords.len();
        let mut out = Vec::new();
        if width == 0 {
            out.push(String::from("the model has no coordinates"));
        }
        for (i, g) in self.algebra_gens.iter().enumerate() {
            if g.len() != width {
                out.push(format!(
                    "generator {i} has {} entries but there are {width} coordinates",
                    g.len()
                ));
            }
        }
        if self.sigma.len() != width {
            out.push(format!(
                "sigma has {} entries but there are {width} coordinates",
                self.sigma.len()
            ));
        }
        if self.sigma.iter().all(|&e| e == 0) {
            out.push(String::from("sigma is the trivial monomial"));
        }
        if out.is_empty() {
            let gens = self.algebra_gens.iter().map(|g| Monomial::new(g.clone()));
            match MonomialModel::new(width, gens.collect(), Monomial::new(self.sigma.clone())) {
                Ok(model) => match model.algebra.contains(&model.sigma) {
                    Ok(true) => {}
                    Ok(false) => out.push(String::from("sigma is not in the algebra")),
                    Err(e) => out.push(format!("sigma membership check failed: {e}")),
                },
                Err(e) => out.push(format!("the generators do not form an algebra: {e}")),
            }
        }
        out
    }

    /// Builds the model after [`problems`](Self::problems) came back empty.
    pub fn to_model(&self) -> MonomialModel {
        let gens = self
            .algebra_gens
            .iter()
            .map(|g| Monomial::new(g.clone()))
            .collect();
        MonomialModel::new(self.coords.len(), gens, Monomial::new(self.sigma.clone()))
            .expect("checked by problems()")
    }
}

/// A parsed input file of either kind.
#[derive(Clone, Debug)]
pub enum InputFile {
    Tiling(TilingFile),
    Model(ModelFile),
}

impl InputFile {
    /// Parses JSON text, deciding the kind by its keys.
    pub fn parse(text: &str) -> Result<InputFile, String> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
        let Some(obj) = value.as_object() else {
            return Err(String::from("input must be a JSON object"));
        };
        if obj.contains_key("arrows") {
            serde_json::from_value::<TilingFile>(value.clone())
                .map(InputFile::Tiling)
                .map_err(|e| format!("bad tiling file: {e}"))
        } else if obj.contains_key("algebra_gens") {
            serde_json::from_value::<ModelFile>(value.clone())
                .map(InputFile::Model)
                .map_err(|e| format!("bad model file: {e}"))
        } else {
            Err(String::from(
                "input is neither a tiling (needs \"arrows\") nor a model (needs \"algebra_gens\")",
            ))
        }
    }

    pub fn name(&self) -> &str {
        match self {
            InputFile::Tiling(t) => &t.name,
            InputFile::Model(m) => &m.name,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_tiling_file_round_trips_into_a_quiver() {
        let text = r#"{
            "name": "loop",
            "vertices": 1,
            "arrows": [{"tail": 0, "head": 0, "winding": [1, 0]}],
            "faces": []
        }"#;
        let InputFile::Tiling(t) = InputFile::parse(text).unwrap() else {
            panic!("expected a tiling");
        };
        let q = t.to_quiver();
        assert_eq!(q.vertices, 1);
        assert_eq!(q.arrows[0].winding, (1, 0));
        assert!(q.arrows[0].label.is_none());
        assert!(t.contractions.is_empty());
    }

    #[test]
    fn key_dispatch_and_unknown_keys() {
        assert!(InputFile::parse("[1, 2]")
            .unwrap_err()
            .contains("JSON object"));
        assert!(InputFile::parse("{\"name\": \"empty\"}")
            .unwrap_err()
            .contains("neither"));
        let typo = r#"{
            "name": "m", "coords": ["x"], "algebra_gens": [[1]], "sigma": [1], "extra": 0
        }"#;
        assert!(InputFile::parse(typo)
            .unwrap_err()
            .contains("bad model file"));
    }

    #[test]
    fn model_problems_are_reported_one_per_line() {
        let m = ModelFile {
            name: String::from("broken"),
            coords: vec![String::from("x"), String::from("y")],
            algebra_gens: vec![vec![1], vec![0, 1]],
            sigma: vec![0, 0],
        };
        let problems = m.problems();
        assert_eq!(problems.len(), 2);
        assert!(problems[0].contains("generator 0"));
        assert!(problems[1].contains("trivial"));

        let off_algebra = ModelFile {
            name: String::from("off"),
            coords: vec![String::from("x"), String::from("y")],
            algebra_gens: vec![vec![2, 0], vec![0, 1]],
            sigma: vec![1, 0],
        };
        assert_eq!(
            off_algebra.problems(),
            vec![String::from("sigma is not in the algebra")]
        );
    }
}
