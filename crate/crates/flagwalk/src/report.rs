//! Serializable views of the library results, as printed by the CLI with
//! `--json`. Field order is the serialization order.

use flagwalk_core::autgroup::{AutGroup, SymmetryClass};
use flagwalk_core::classify::{EdgeSetClassification, Label, Parity, ProofCase, Return, Sign};
use flagwalk_core::cyclets::CycletReport;
use flagwalk_core::flagmap::{MapSummary, ValidationReport};
use flagwalk_core::walks::{WalkOrbitReport, WalkOrbitRow, WalkTag};
use flagwalk_core::{FaceStructure, FlagSystem, Surface};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

impl ValidateReport {
    pub fn new(report: &ValidationReport) -> Self {
        ValidateReport {
            valid: report.is_valid(),
            violations: report.violations.iter().map(|v| v.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InfoReport {
    pub name: Option<String>,
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crosscaps: Option<u64>,
    pub valences: Vec<usize>,
}

impl InfoReport {
    pub fn new(m: &FlagSystem, s: &MapSummary) -> Self {
        let (genus, crosscaps) = match s.surface {
            Surface::Orientable { genus } => (Some(genus), None),
            Surface::NonOrientable { crosscaps } => (None, Some(crosscaps)),
        };
        InfoReport {
            name: m.name().map(String::from),
            flags: s.flags,
            vertices: s.vertices,
            edges: s.edges,
            faces: s.faces,
            euler_characteristic: s.euler_characteristic,
            orientable: s.orientable,
            genus,
            crosscaps,
            valences: s.valences.clone(),
        }
    }

    pub fn text(&self) -> String {
        let surface = match (self.genus, self.crosscaps) {
            (Some(g), _) => format!("orientable genus={g}"),
            (_, Some(c)) => format!("non-orientable crosscaps={c}"),
            _ => String::new(),
        };
        let valences: Vec<String> = self.valences.iter().map(|v| v.to_string()).collect();
        format!(
            "{}V={} E={} F={} chi={} {} valence={}",
            self.name
                .as_ref()
                .map(|n| format!("{n}: "))
                .unwrap_or_default(),
            self.vertices,
            self.edges,
            self.faces,
            self.euler_characteristic,
            surface,
            valences.join(",")
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SymReport {
    pub name: Option<String>,
    pub group: String,
    pub class: &'static str,
    pub group_order: usize,
    pub flag_orbits: usize,
    pub dart_transitive: bool,
}

impl SymReport {
    pub fn new(
        m: &FlagSystem,
        group: &str,
        g: &AutGroup,
        class: SymmetryClass,
        flag_orbits: usize,
    ) -> Self {
        SymReport {
            name: m.name().map(String::from),
            group: group.to_string(),
            class: class.tag(),
            group_order: g.len(),
            flag_orbits,
            dart_transitive: class.is_dart_transitive(),
        }
    }
}

fn tag_str(tag: WalkTag) -> &'static str {
    tag.as_str()
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkRow {
    pub flag_orbit: usize,
    pub kind: &'static str,
    pub j: usize,
    pub length: usize,
    pub gamma_order: usize,
    pub symmetric: bool,
    pub dart_symmetric: bool,
    pub is_line: bool,
    pub orbit_size: usize,
    pub edge_sets: usize,
    pub base: usize,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl WalkRow {
    pub fn new(fs: &FaceStructure, row: &WalkOrbitRow) -> Self {
        WalkRow {
            flag_orbit: row.flag_orbit,
            kind: tag_str(row.kind.tag),
            j: row.kind.j,
            length: row.length,
            gamma_order: row.gamma_order,
            symmetric: row.symmetric,
            dart_symmetric: row.dart_symmetric,
            is_line: row.is_line,
            orbit_size: row.orbit_size,
            edge_sets: row.edge_sets,
            base: row.representative.base,
            edges: row.representative.edges(fs),
            vertices: row.representative.vertices(fs),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WalksReport {
    pub name: Option<String>,
    pub group: String,
    pub valence: usize,
    pub group_order: usize,
    pub flag_orbits: usize,
    pub expected_rows: usize,
    pub rows: Vec<WalkRow>,
}

impl WalksReport {
    pub fn new(m: &FlagSystem, fs: &FaceStructure, group: &str, r: &WalkOrbitReport) -> Self {
        WalksReport {
            name: m.name().map(String::from),
            group: group.to_string(),
            valence: r.valence,
            group_order: r.group_order,
            flag_orbits: r.flag_orbits,
            expected_rows: r.expected_rows(),
            rows: r.rows.iter().map(|row| WalkRow::new(fs, row)).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "q={} |G|={} flag orbits={} rows={} (expected {})\n",
            self.valence,
            self.group_order,
            self.flag_orbits,
            self.rows.len(),
            self.expected_rows
        );
        out.push_str("orbit kind    j  length  symmetric  line  edges\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<5} {:<6} {:>2}  {:>6}  {:<9}  {:<4}  {:?}\n",
                r.flag_orbit,
                r.kind,
                r.j,
                r.length,
                if r.symmetric { "yes" } else { "no" },
                if r.is_line { "yes" } else { "no" },
                r.edges
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LabelView {
    Cycle,
    Bead {
        d: usize,
        edges: usize,
        parity: &'static str,
    },
    Bracelet {
        d: usize,
        beads: usize,
    },
    Twining {
        d: usize,
        d_prime: usize,
        sign: &'static str,
    },
}

impl From<&Label> for LabelView {
    fn from(l: &Label) -> Self {
        match *l {
            Label::Cycle => LabelView::Cycle,
            Label::Bead { d, edges, parity } => LabelView::Bead {
                d,
                edges,
                parity: match parity {
                    Parity::Odd => "odd",
                    Parity::Even => "even",
                },
            },
            Label::Bracelet { d, beads } => LabelView::Bracelet { d, beads },
            Label::Twining { d, d_prime, sign } => LabelView::Twining {
                d,
                d_prime,
                sign: match sign {
                    Sign::Plus => "+",
                    Sign::Minus => "-",
                    Sign::Both => "+-",
                    Sign::Neither => "none",
                },
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyRow {
    pub flag_orbit: usize,
    pub kind: &'static str,
    pub j: usize,
    pub length: usize,
    pub primary: Option<LabelView>,
    pub labels: Vec<LabelView>,
    pub is_line: bool,
    pub one_vertex_map: bool,
    pub case: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuit_return: Option<String>,
    pub distinct_edges: usize,
    pub distinct_vertices: usize,
    pub edges: Vec<usize>,
}

impl ClassifyRow {
    pub fn new(row: &WalkOrbitRow, c: &EdgeSetClassification) -> Self {
        ClassifyRow {
            flag_orbit: row.flag_orbit,
            kind: tag_str(row.kind.tag),
            j: row.kind.j,
            length: row.length,
            primary: c.primary.as_ref().map(LabelView::from),
            labels: c.labels.iter().map(LabelView::from).collect(),
            is_line: c.is_line,
            one_vertex_map: c.one_vertex_map,
            case: case_str(c.trace.case),
            circuit_return: c.trace.circuit_return.map(|r| match r {
                Return::Rotation { k, d } => format!("rotation k={k} d={d}"),
                Return::Reflection { k, d } => format!("reflection k={k} d={d}"),
            }),
            distinct_edges: c.trace.distinct_edges,
            distinct_vertices: c.trace.distinct_vertices,
            edges: c.trace.edges.clone(),
        }
    }

    pub fn text(&self, c: &EdgeSetClassification) -> String {
        let labels: Vec<String> = c.labels.iter().map(|l| l.to_string()).collect();
        format!(
            "{:<5} {:<6} {:>2}  {:<9}  {}{}",
            self.flag_orbit,
            self.kind,
            self.j,
            self.case,
            if labels.is_empty() {
                "(one-vertex map)".to_string()
            } else {
                labels.join(", ")
            },
            if self.is_line { "  [line]" } else { "" }
        )
    }
}

fn case_str(c: ProofCase) -> &'static str {
    c.as_str()
}

#[derive(Debug, Clone, Serialize)]
pub struct CycletOrbitView {
    pub length: usize,
    pub size: usize,
    pub darts: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycletsReport {
    pub name: Option<String>,
    pub group: String,
    pub valence: usize,
    pub expected: usize,
    pub orbits: Vec<CycletOrbitView>,
}

impl CycletsReport {
    pub fn new(m: &FlagSystem, group: &str, r: &CycletReport) -> Self {
        CycletsReport {
            name: m.name().map(String::from),
            group: group.to_string(),
            valence: r.valence,
            expected: r.expected(),
            orbits: r
                .orbits
                .iter()
                .map(|o| CycletOrbitView {
                    length: o.length,
                    size: o.size,
                    darts: o.representative.darts.clone(),
                })
                .collect(),
        }
    }

    pub fn matches(&self) -> bool {
        self.orbits.len() == self.expected
    }
}
