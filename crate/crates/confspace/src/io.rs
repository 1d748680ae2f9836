//! JSON and CSV serialization for forests, cohomology classes,
//! configurations, pairing matrices, and balance reports.

use crate::balance::{BalanceResult, StressGraph};
use crate::forests::{CohomClass, ForestError, OrderedForest};
use crate::geometry::{DiskConfig, SegConfig};
use crate::pairing::PairingMatrix;
use crate::plane::Point;
use serde::{Deserialize, Serialize};

/// `{"n": int, "edges": [[i, j], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ForestJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&OrderedForest> for ForestJson {
    fn from(f: &OrderedForest) -> Self {
        ForestJson {
            n: f.n(),
            edges: f.edges().to_vec(),
        }
    }
}

impl TryFrom<ForestJson> for OrderedForest {
    type Error = ForestError;
    fn try_from(j: ForestJson) -> Result<Self, ForestError> {
        OrderedForest::new(j.n, j.edges)
    }
}

/// `{"degree": int, "terms": [{"forest": ..., "coeff": int}]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassJson {
    pub degree: usize,
    pub terms: Vec<ClassTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassTermJson {
    pub forest: ForestJson,
    pub coeff: i64,
}

impl From<&CohomClass> for ClassJson {
    fn from(c: &CohomClass) -> Self {
        ClassJson {
            degree: c.degree,
            terms: c
                .terms()
                .map(|(f, coeff)| ClassTermJson {
                    forest: f.into(),
                    coeff,
                })
                .collect(),
        }
    }
}

/// `{"kind": "disk"|"segment", "radius_or_length": float,
///   "items": [{"center": [x, y], "angle": float|null}]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigJson {
    pub kind: String,
    pub radius_or_length: f64,
    pub items: Vec<ConfigItemJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigItemJson {
    pub center: (f64, f64),
    pub angle: Option<f64>,
}

impl From<&DiskConfig> for ConfigJson {
    fn from(c: &DiskConfig) -> Self {
        ConfigJson {
            kind: "disk".into(),
            radius_or_length: c.radius,
            items: c
                .centers
                .iter()
                .map(|p| ConfigItemJson {
                    center: (p.x, p.y),
                    angle: None,
                })
                .collect(),
        }
    }
}

impl From<&SegConfig> for ConfigJson {
    fn from(c: &SegConfig) -> Self {
        ConfigJson {
            kind: "segment".into(),
            radius_or_length: c.length,
            items: c
                .centers
                .iter()
                .zip(&c.directions)
                .map(|(p, &t)| ConfigItemJson {
                    center: (p.x, p.y),
                    angle: Some(t),
                })
                .collect(),
        }
    }
}

impl ConfigJson {
    pub fn to_disk_config(&self) -> Option<DiskConfig> {
        if self.kind != "disk" {
            return None;
        }
        Some(DiskConfig::new(
            self.items
                .iter()
                .map(|i| Point::new(i.center.0, i.center.1))
                .collect(),
            self.radius_or_length,
        ))
    }

    pub fn to_seg_config(&self) -> Option<SegConfig> {
        if self.kind != "segment" {
            return None;
        }
        let mut centers = Vec::new();
        let mut dirs = Vec::new();
        for item in &self.items {
            centers.push(Point::new(item.center.0, item.center.1));
            dirs.push(item.angle?);
        }
        Some(SegConfig::new(centers, dirs, self.radius_or_length))
    }
}

/// Matrix export with explicit row and column labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<ForestJson>,
    pub cols: Vec<Vec<usize>>,
    pub entries: Vec<Vec<i64>>,
    pub det: String,
}

impl From<&PairingMatrix> for MatrixJson {
    fn from(m: &PairingMatrix) -> Self {
        MatrixJson {
            n: m.n,
            rows: m.forests.iter().map(ForestJson::from).collect(),
            cols: m.perms.iter().map(|p| p.images().to_vec()).collect(),
            entries: m.entries.clone(),
            det: m.det().to_string(),
        }
    }
}

/// CSV with a header row of permutation labels and one labeled row per
/// forest.
pub fn matrix_to_csv(m: &PairingMatrix) -> String {
    let mut out = String::new();
    out.push_str("forest");
    for p in &m.perms {
        let label: String = p.images().iter().map(|v| v.to_string()).collect();
        out.push(',');
        out.push_str(&label);
    }
    out.push('\n');
    for (f, row) in m.forests.iter().zip(&m.entries) {
        out.push_str(&f.to_string());
        for e in row {
            out.push(',');
            out.push_str(&e.to_string());
        }
        out.push('\n');
    }
    out
}

/// Balance report: `{config, edges, balanced, weights, residual}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BalanceReportJson {
    pub config: ConfigJson,
    pub edges: Vec<(usize, usize)>,
    pub boundary: Vec<(usize, (f64, f64))>,
    pub balanced: bool,
    pub weights: Option<Vec<f64>>,
    pub residual: f64,
}

pub fn balance_report(
    config: &DiskConfig,
    graph: &StressGraph,
    result: &BalanceResult,
) -> BalanceReportJson {
    BalanceReportJson {
        config: config.into(),
        edges: graph.edges.clone(),
        boundary: graph
            .boundary
            .iter()
            .map(|&(i, p)| (i, (p.x, p.y)))
            .collect(),
        balanced: result.balanced,
        weights: result.weights.clone(),
        residual: result.residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forests::enumerate_forests;
    use crate::pairing::dual_basis_matrix;

    #[test]
    fn forest_json_roundtrip() {
        for f in enumerate_forests(4, 2).unwrap() {
            let j = ForestJson::from(&f);
            let text = serde_json::to_string(&j).unwrap();
            let back: ForestJson = serde_json::from_str(&text).unwrap();
            let f2 = OrderedForest::try_from(back).unwrap();
            assert_eq!(f, f2);
        }
    }

    #[test]
    fn config_json_roundtrip() {
        let cfg = crate::geometry::build_qn(&[0.1, 0.35, 0.8]);
        let j = ConfigJson::from(&cfg);
        let text = serde_json::to_string(&j).unwrap();
        let back: ConfigJson = serde_json::from_str(&text).unwrap();
        let cfg2 = back.to_disk_config().unwrap();
        assert_eq!(cfg, cfg2);

        let seg = crate::geometry::build_kn(&[0.2, 0.6]);
        let j = ConfigJson::from(&seg);
        let back: ConfigJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back.to_seg_config().unwrap(), seg);
        assert!(back.to_disk_config().is_none());
    }

    #[test]
    fn class_json_schema() {
        let tree = OrderedForest::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        let class = crate::forests::top_kernel_element(&tree).unwrap();
        let j = ClassJson::from(&class);
        assert_eq!(j.degree, 2);
        assert_eq!(j.terms.len(), 3);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"degree\":2"));
        assert!(text.contains("\"coeff\":-1"));
    }

    #[test]
    fn matrix_csv_shape() {
        let m = dual_basis_matrix(3).unwrap();
        let csv = matrix_to_csv(&m);
        let lines: Vec<&str> = csv.trim().lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("forest,"));
        assert_eq!(lines[1].split(',').count(), 3);
    }
}
