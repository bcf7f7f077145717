//! The f-vector report for a single construction expression.

use polyface::error::Result;
use polyface::expr::ConstructionExpr;
use polyface::{enumerate_faces, vertex_profile};

/// Builds the polytope named by `input`, enumerates its lattice and
/// summarizes counts and vertex profile.
pub struct FVectorReport {
    pub expr: String,
    pub dim: usize,
    pub vertices: usize,
    pub facets: usize,
    pub f_vector: Vec<String>,
    pub euler_residual: String,
    pub simple_vertices: usize,
    pub pyramidal_vertices: usize,
    pub degree_min: usize,
    pub degree_max: usize,
    pub missing_edges: usize,
}

pub fn fvector_report(input: &str) -> Result<FVectorReport> {
    let expr = ConstructionExpr::parse(input)?;
    let p = expr.eval()?;
    let lattice = enumerate_faces(&p)?;
    let f = lattice.f_vector();
    let profile = vertex_profile(&p, &lattice);
    Ok(FVectorReport {
        expr: expr.to_string(),
        dim: p.dim(),
        vertices: p.vertex_count(),
        facets: p.facet_count(),
        f_vector: f.counts().iter().map(|c| c.to_string()).collect(),
        euler_residual: f.euler_residual().to_string(),
        simple_vertices: profile.simple_count(),
        pyramidal_vertices: profile.pyramidal_flags.iter().filter(|&&b| b).count(),
        degree_min: profile.degrees.iter().copied().min().unwrap_or(0),
        degree_max: profile.degrees.iter().copied().max().unwrap_or(0),
        missing_edges: profile.missing_edges.len(),
    })
}

impl FVectorReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "expr": self.expr,
            "dim": self.dim,
            "vertices": self.vertices,
            "facets": self.facets,
            "f_vector": self.f_vector,
            "euler_residual": self.euler_residual,
            "simple_vertices": self.simple_vertices,
            "pyramidal_vertices": self.pyramidal_vertices,
            "degree_min": self.degree_min,
            "degree_max": self.degree_max,
            "missing_edges": self.missing_edges,
        }))
        .expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        format!(
            "expr,dim,vertices,facets,f_vector,euler_residual,simple_vertices,pyramidal_vertices,degree_min,degree_max,missing_edges\n\
             \"{}\",{},{},{},\"{}\",{},{},{},{},{},{}\n",
            self.expr,
            self.dim,
            self.vertices,
            self.facets,
            self.f_vector.join(" "),
            self.euler_residual,
            self.simple_vertices,
            self.pyramidal_vertices,
            self.degree_min,
            self.degree_max,
            self.missing_edges,
        )
    }
}
