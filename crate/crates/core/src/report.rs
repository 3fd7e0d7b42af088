use serde::{Deserialize, Serialize};

/// One failed condition, with enough data to re-check it against the input.
///
/// `clause` is a short tag: `"(i)"`, `"(ii)"`, `"structural"`, `"mixed-heights"`,
/// `"reisner"` or `"serre"`. Pair indices in `indices` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub clause: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<u32>,
    /// Variable sets: the two primes of different height, or the face `F`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<Vec<String>>,
    /// Homological degree `i` of a nonvanishing `H̃_i(lk F)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(clause: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            clause: clause.into(),
            indices: Vec::new(),
            vertices: Vec::new(),
            weights: Vec::new(),
            sets: Vec::new(),
            degree: None,
            rank: None,
            detail: detail.into(),
        }
    }

    pub fn with_indices(mut self, indices: impl IntoIterator<Item = usize>) -> Self {
        self.indices = indices.into_iter().collect();
        self
    }

    pub fn with_vertices<S: Into<String>>(mut self, vertices: impl IntoIterator<Item = S>) -> Self {
        self.vertices = vertices.into_iter().map(Into::into).collect();
        self
    }

    pub fn with_weights(mut self, weights: impl IntoIterator<Item = u32>) -> Self {
        self.weights = weights.into_iter().collect();
        self
    }

    pub fn with_sets(mut self, sets: Vec<Vec<String>>) -> Self {
        self.sets = sets;
        self
    }

    pub fn with_homology(mut self, degree: i32, rank: usize) -> Self {
        self.degree = Some(degree);
        self.rank = Some(rank);
        self
    }
}

/// Verdict plus witnesses. The verdict is true exactly when there are no
/// violations; the constructor is the only way to build one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    verdict: bool,
    violations: Vec<Violation>,
}

impl CriterionReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        Self { verdict: violations.is_empty(), violations }
    }

    pub fn pass() -> Self {
        Self::from_violations(Vec::new())
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}
