//! Bakry-Émery curvature and related functional inequalities on finite
//! simple graphs.
//!
//! The graph Laplacian is `Δf(x) = Σ_{y∼x} (f(y) − f(x))` (non-normalised),
//! `Γ(f, g)(x) = ½ Σ_{y∼x} (f(x) − f(y))(g(x) − g(y))` and
//! `Γ₂(f) = ½ ΔΓ(f) − Γ(f, Δf)`. A graph satisfies CD(K, ∞) when
//! `Γ₂(f) ≥ K Γ(f)` pointwise for every `f`.

pub mod curvature;
pub mod error;
pub mod families;
pub mod graph;
pub mod isoperimetry;
pub mod linalg;
pub mod report;
pub mod spectral;
pub mod verify;

pub use curvature::{curvature, local_curvature, CurvatureReport, LocalCurvature, VertexSelection};
pub use error::{Error, Result};
pub use graph::Graph;
