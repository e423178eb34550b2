//! Mukai models of BN-general K3 surfaces and the GIT parameter spaces built on them.
//!
//! Each record is static data; the dimensions that can be recomputed from standard formulas
//! (Grassmannians, classical groups) are stored structurally and evaluated on demand, so the
//! catalog can be checked rather than trusted. The record for `g = 6` uses the quadric-in-`F₅`
//! presentation (`F₅` a codimension-three linear section of `Gr(2,5)`), with the
//! parameter space `ℙ(H⁰(F₅, O(2))) = ℙ²²`; `h⁰ = 23` is the value forced by the moduli count.

use serde::{Deserialize, Serialize};

use crate::divisor::{Check, MUKAI_GENERA};
use crate::error::{Error, Result};

pub const MODULI_DIM: u64 = 19;
pub const CATALOG_VERSION: &str = "1";

/// Dimension of `Gr(k, m)`.
pub fn grassmannian_dim(k: u64, m: u64) -> u64 {
    k * (m - k)
}

/// Degree of `Gr(k, m)` in its Plücker embedding:
/// `(k(m−k))! · Π_{i<k} i! / (m−k+i)!`.
pub fn grassmannian_degree(k: u64, m: u64) -> u128 {
    fn factorial(n: u64) -> u128 {
        (1..=u128::from(n)).product()
    }
    // Accumulate as a ratio to stay exact.
    let mut num = factorial(grassmannian_dim(k, m));
    let mut den: u128 = 1;
    for i in 0..k {
        num *= factorial(i);
        den *= factorial(m - k + i);
    }
    debug_assert_eq!(num % den, 0);
    num / den
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LieGroup {
    SpecialLinear { n: u64 },
    ProjectiveLinear { n: u64 },
    ProjectiveSpecialLinear { n: u64 },
    Symplectic { n: u64 },
    Spin { n: u64 },
    /// Exceptional; dimension stored.
    G2,
}

impl LieGroup {
    pub fn dim(&self) -> u64 {
        match *self {
            LieGroup::SpecialLinear { n }
            | LieGroup::ProjectiveLinear { n }
            | LieGroup::ProjectiveSpecialLinear { n } => n * n - 1,
            // Sp(2m) has dimension m(2m+1)
            LieGroup::Symplectic { n } => (n / 2) * (n + 1),
            LieGroup::Spin { n } => n * (n - 1) / 2,
            LieGroup::G2 => 14,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            LieGroup::SpecialLinear { n } => format!("SL({n})"),
            LieGroup::ProjectiveLinear { n } => format!("PGL({n})"),
            LieGroup::ProjectiveSpecialLinear { n } => format!("PSL({n})"),
            LieGroup::Symplectic { n } => format!("Sp({n})"),
            LieGroup::Spin { n } => format!("Spin({n})"),
            LieGroup::G2 => "G2".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParameterSpace {
    Grassmannian { k: u64, m: u64 },
    Projective { dim: u64, description: String },
}

impl ParameterSpace {
    pub fn dim(&self) -> u64 {
        match self {
            ParameterSpace::Grassmannian { k, m } => grassmannian_dim(*k, *m),
            ParameterSpace::Projective { dim, .. } => *dim,
        }
    }

    pub fn name(&self) -> String {
        match self {
            ParameterSpace::Grassmannian { k, m } => format!("Gr({k},{m})"),
            ParameterSpace::Projective { description, .. } => description.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ambient {
    Grassmannian { k: u64, m: u64 },
    /// Orthogonal Grassmannian `OGr(n, 2n)` (one component), dimension `n(n−1)/2`.
    OrthogonalGrassmannian { n: u64, degree: u64 },
    /// Lagrangian Grassmannian `LGr(n, 2n)`, dimension `n(n+1)/2`.
    LagrangianGrassmannian { n: u64, degree: u64 },
    /// `G₂`-adjoint variety, five-dimensional in `ℙ¹³`.
    G2Adjoint { degree: u64 },
}

impl Ambient {
    pub fn dim(&self) -> u64 {
        match *self {
            Ambient::Grassmannian { k, m } => grassmannian_dim(k, m),
            Ambient::OrthogonalGrassmannian { n, .. } => n * (n - 1) / 2,
            Ambient::LagrangianGrassmannian { n, .. } => n * (n + 1) / 2,
            Ambient::G2Adjoint { .. } => 5,
        }
    }

    pub fn degree(&self) -> u128 {
        match *self {
            Ambient::Grassmannian { k, m } => grassmannian_degree(k, m),
            Ambient::OrthogonalGrassmannian { degree, .. }
            | Ambient::LagrangianGrassmannian { degree, .. }
            | Ambient::G2Adjoint { degree } => u128::from(degree),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Ambient::Grassmannian { k, m } => format!("Gr({k},{m})"),
            Ambient::OrthogonalGrassmannian { n, .. } => format!("OGr({n},{})", 2 * n),
            Ambient::LagrangianGrassmannian { n, .. } => format!("LGr({n},{})", 2 * n),
            Ambient::G2Adjoint { .. } => "G2/P".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MukaiModel {
    pub g: u32,
    pub ambient: Ambient,
    /// `E_g` as text.
    pub bundle_desc: String,
    /// `dim V_g`, the space of hyperplane sections cutting the surface.
    pub section_space_dim: u64,
    /// Number of hyperplane sections taken in `V_g`.
    pub linear_cuts: u64,
    /// Codimension of the surface in the ambient space.
    pub codimension: u64,
    /// Product of the degrees of non-linear cuts (2 for the quadric at `g = 6`).
    pub nonlinear_degree: u64,
    /// Degree of the variety the last linear cuts are applied to, when it is not the ambient.
    pub host_degree: Option<u64>,
    pub parameter_space: ParameterSpace,
    pub group: LieGroup,
    /// Extra projective-bundle fiber over the parameter space.
    pub fiber_dim: u64,
    pub expected_moduli_dim: u64,
    pub rs_factorization: Option<(u64, u64)>,
    pub notes: Vec<String>,
}

impl MukaiModel {
    pub fn parameter_dim(&self) -> u64 {
        self.parameter_space.dim()
    }

    pub fn group_dim(&self) -> u64 {
        self.group.dim()
    }

    /// `dim W − dim G + fiber`.
    pub fn moduli_dim(&self) -> i64 {
        self.parameter_dim() as i64 - self.group_dim() as i64 + self.fiber_dim as i64
    }

    /// Degree of the surface in `ℙ^g`.
    pub fn surface_degree(&self) -> u128 {
        let base = match self.host_degree {
            Some(d) => u128::from(d),
            None => self.ambient.degree(),
        };
        base * u128::from(self.nonlinear_degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MukaiCatalog {
    pub version: String,
    pub models: Vec<MukaiModel>,
}

fn grass(k: u64, m: u64) -> ParameterSpace {
    ParameterSpace::Grassmannian { k, m }
}

impl Default for MukaiCatalog {
    fn default() -> Self {
        let models = vec![
            MukaiModel {
                g: 6,
                ambient: Ambient::Grassmannian { k: 2, m: 5 },
                bundle_desc: "O(1)^3 + O(2)".into(),
                section_space_dim: 10,
                linear_cuts: 3,
                codimension: 4,
                nonlinear_degree: 2,
                host_degree: None,
                parameter_space: ParameterSpace::Projective {
                    dim: 22,
                    description: "P(H^0(F5, O(2)))".into(),
                },
                group: LieGroup::ProjectiveSpecialLinear { n: 2 },
                fiber_dim: 0,
                expected_moduli_dim: MODULI_DIM,
                rs_factorization: Some((2, 3)),
                notes: vec![
                    "quadric section of the Fano threefold F5 = Gr(2,5) cut by three hyperplanes".into(),
                    "h^0(F5, O(2)) = 23 inferred from the moduli dimension".into(),
                    "surfaces on a singular linear section lie in D_{4,0}".into(),
                ],
            },
            MukaiModel {
                g: 7,
                ambient: Ambient::OrthogonalGrassmannian { n: 5, degree: 12 },
                bundle_desc: "O(1)^8".into(),
                section_space_dim: 16,
                linear_cuts: 8,
                codimension: 8,
                nonlinear_degree: 1,
                host_degree: None,
                parameter_space: grass(8, 16),
                group: LieGroup::Spin { n: 10 },
                fiber_dim: 0,
                expected_moduli_dim: MODULI_DIM,
                rs_factorization: None,
                notes: vec!["rank-5 bundle with determinant L^2 instead of an r*s split".into()],
            },
            MukaiModel {
                g: 8,
                ambient: Ambient::Grassmannian { k: 2, m: 6 },
                bundle_desc: "O(1)^6".into(),
                section_space_dim: 15,
                linear_cuts: 6,
                codimension: 6,
                nonlinear_degree: 1,
                host_degree: None,
                parameter_space: grass(6, 15),
                group: LieGroup::SpecialLinear { n: 6 },
                fiber_dim: 0,
                expected_moduli_dim: MODULI_DIM,
                rs_factorization: Some((2, 4)),
                notes: vec![],
            },
            MukaiModel {
                g: 9,
                ambient: Ambient::LagrangianGrassmannian { n: 3, degree: 16 },
                bundle_desc: "O(1)^4".into(),
                section_space_dim: 14,
                linear_cuts: 4,
                codimension: 4,
                nonlinear_degree: 1,
                host_degree: None,
                parameter_space: grass(4, 14),
                group: LieGroup::Symplectic { n: 6 },
                fiber_dim: 0,
                expected_moduli_dim: MODULI_DIM,
                rs_factorization: Some((3, 3)),
                notes: vec![],
            },
            MukaiModel {
                g: 10,
                ambient: Ambient::G2Adjoint { degree: 18 },
                bundle_desc: "O(1)^3".into(),
                section_space_dim: 14,
                linear_cuts: 3,
                codimension: 3,
                nonlinear_degree: 1,
                host_degree: None,
                parameter_space: grass(3, 14),
                group: LieGroup::G2,
                fiber_dim: 0,
                expected_moduli_dim: MODULI_DIM,
                rs_factorization: Some((2, 5)),
                notes: vec!["group described as the quotient of G2 by its center".into()],
            },
            MukaiModel {
                g: 12,
                ambient: Ambient::Grassmannian { k: 3, m: 7 },
                bundle_desc: "(wedge^2 F)^3, then O(1)".into(),
                section_space_dim: 14,
                linear_cuts: 1,
                codimension: 10,
                nonlinear_degree: 1,
                host_degree: Some(22),
                parameter_space: grass(3, 21),
                group: LieGroup::ProjectiveLinear { n: 7 },
                fiber_dim: 13,
                expected_moduli_dim: MODULI_DIM,
                rs_factorization: Some((3, 4)),
                notes: vec![
                    "hyperplane section of the Fano threefold Gr(3,V,N) in P^13".into(),
                    "parameter space Gr(3, wedge^2 V^*) with dim V = 7".into(),
                ],
            },
        ];
        MukaiCatalog {
            version: CATALOG_VERSION.to_string(),
            models,
        }
    }
}

fn unsupported(g: u32) -> Error {
    Error::UnsupportedGenus {
        g,
        supported: MUKAI_GENERA,
    }
}

impl MukaiCatalog {
    pub fn model(&self, g: u32) -> Result<&MukaiModel> {
        self.models.iter().find(|m| m.g == g).ok_or_else(|| unsupported(g))
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    /// Dimension and linear-section bookkeeping for one model.
    pub fn check_dimensions(&self, g: u32) -> Result<Vec<Check>> {
        let m = self.model(g)?;
        let mut checks = vec![
            Check::new(
                "moduli_dimension",
                m.moduli_dim() == m.expected_moduli_dim as i64,
                format!(
                    "dim {} - dim {} + {} = {} (expected {})",
                    m.parameter_space.name(),
                    m.group.name(),
                    m.fiber_dim,
                    m.moduli_dim(),
                    m.expected_moduli_dim
                ),
            ),
            Check::new(
                "surface_dimension",
                m.ambient.dim() == m.codimension + 2,
                format!("dim {} = {} with codimension {}", m.ambient.name(), m.ambient.dim(), m.codimension),
            ),
            Check::new(
                "linear_span",
                m.section_space_dim == u64::from(g) + 1 + m.linear_cuts,
                format!(
                    "dim V = {} cut by {} hyperplanes leaves P^{}",
                    m.section_space_dim,
                    m.linear_cuts,
                    m.section_space_dim as i64 - m.linear_cuts as i64 - 1
                ),
            ),
        ];
        if let Some((r, s)) = m.rs_factorization {
            checks.push(Check::new("rs_factorization", r * s == u64::from(g), format!("{r}*{s}")));
        }
        if (7..=10).contains(&g) {
            let expected = grass(m.linear_cuts, m.section_space_dim);
            checks.push(Check::new(
                "parameter_space_is_gr_cuts",
                m.parameter_space == expected,
                format!("{} vs {}", m.parameter_space.name(), expected.name()),
            ));
        }
        if m.fiber_dim > 0 {
            checks.push(Check::new(
                "fiber_is_hyperplane_system",
                m.fiber_dim + 1 == m.section_space_dim,
                format!("P^{} over the parameter space, h^0(O(1)) = {}", m.fiber_dim, m.section_space_dim),
            ));
        }
        Ok(checks)
    }

    /// Surface degree against `2g − 2`.
    pub fn check_degrees(&self, g: u32) -> Result<Check> {
        let m = self.model(g)?;
        let deg = m.surface_degree();
        let target = 2 * u128::from(g) - 2;
        Ok(Check::new(
            "surface_degree",
            deg == target,
            format!("degree {deg}, 2g-2 = {target}"),
        ))
    }
}

pub fn model(g: u32) -> Result<MukaiModel> {
    MukaiCatalog::default().model(g).cloned()
}

pub fn check_degrees(g: u32) -> Result<Check> {
    MukaiCatalog::default().check_degrees(g)
}

/// Dimension data behind the stability of genus-12 parameter points.
///
/// `Ω ⊂ Gr(3, ∧²V^∨) × ℙ(V^∨)` is the incidence of planes `N` with a form `ω ∈ N` such that
/// `ω ∧ v` is decomposable; its image `Δ` is the degenerate locus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitFacts {
    pub wedge_dim: u64,
    pub boundary_dim: u64,
    pub incidence_dim: u64,
    pub generic_fiber_dim: u64,
    pub base_dim: u64,
    pub fiber_over_point_dim: u64,
    pub decomposable_locus_dim: u64,
}

impl Default for GitFacts {
    fn default() -> Self {
        GitFacts {
            wedge_dim: 21,
            boundary_dim: 53,
            incidence_dim: 56,
            generic_fiber_dim: 3,
            base_dim: 6,
            fiber_over_point_dim: 50,
            decomposable_locus_dim: 14,
        }
    }
}

impl GitFacts {
    pub fn checks(&self) -> Vec<Check> {
        let gr = grassmannian_dim(3, self.wedge_dim);
        // Planes through a fixed ω: Gr(2, ∧²V^∨/ω).
        let through_omega = grassmannian_dim(2, self.wedge_dim - 1);
        vec![
            Check::new(
                "boundary_is_divisor",
                gr == self.boundary_dim + 1,
                format!("dim Gr(3,{}) = {gr}, boundary {}", self.wedge_dim, self.boundary_dim),
            ),
            Check::new(
                "incidence_fiber",
                self.incidence_dim == self.boundary_dim + self.generic_fiber_dim,
                format!(
                    "{} - {} = {}",
                    self.incidence_dim, self.generic_fiber_dim, self.boundary_dim
                ),
            ),
            Check::new(
                "incidence_over_base",
                self.incidence_dim == self.fiber_over_point_dim + self.base_dim,
                format!(
                    "{} + {} = {}",
                    self.fiber_over_point_dim, self.base_dim, self.incidence_dim
                ),
            ),
            Check::new(
                "correspondence_dimension",
                self.fiber_over_point_dim == self.decomposable_locus_dim + through_omega,
                format!(
                    "{} + {through_omega} = {}",
                    self.decomposable_locus_dim, self.fiber_over_point_dim
                ),
            ),
        ]
    }
}

/// Recorded GIT dimension checks; empty for every genus but 12.
pub fn git_facts(g: u32) -> Vec<Check> {
    if g == 12 {
        GitFacts::default().checks()
    } else {
        Vec::new()
    }
}
