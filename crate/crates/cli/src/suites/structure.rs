//! Counting identities, connectivity, and the double-wheel conjecture.

use super::{op, Skip, SuiteResult};
use crate::report::{Checks, Sample};
use hamforge::corpus::double_wheel;
use hamforge::ham::{count_ham_cycles, Constraints};
use hamforge::plane_graph::{is_k_connected, same_up_to_mirror, vertex_connectivity};
use serde_json::json;

pub fn euler(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let pg = &s.graph;
    let (n, e, f) = (pg.n() as i64, pg.edge_count() as i64, pg.faces().len() as i64);
    checks.check("euler_formula", n - e + f == 2, || json!({ "n": n, "edges": e, "faces": f }));
    checks.check("edges_3n_minus_6", e == 3 * n - 6, || json!({ "n": n, "edges": e }));
    checks.check("faces_2n_minus_4", f == 2 * n - 4, || json!({ "n": n, "faces": f }));
    checks.check("faces_are_triangles", pg.is_triangulation(), || json!({ "faces": pg.faces() }));
    checks.check("connected", pg.graph().is_connected(), || json!({}));
    Ok(json!({ "n": n, "edges": e, "faces": f }))
}

pub fn connectivity(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let g = s.graph.graph();
    let k = vertex_connectivity(g);
    checks.check("k_connected_at_k", is_k_connected(g, k), || json!({ "k": k }));
    checks.check("not_k_plus_1_connected", !is_k_connected(g, k + 1), || json!({ "k": k }));
    // planar triangulations on at least 4 vertices are 3-connected and at most 5-connected
    checks.check("between_3_and_5", (3..=5).contains(&k) || g.n() < 4, || json!({ "k": k }));
    checks.check("at_most_min_degree", k <= g.min_degree(), || json!({ "k": k, "min_degree": g.min_degree() }));
    Ok(json!({ "connectivity": k, "min_degree": g.min_degree() }))
}

/// `2(n-2)(n-4)`, the double-wheel count.
pub fn double_wheel_count(n: usize) -> u64 {
    2 * (n as u64 - 2) * (n as u64 - 4)
}

pub fn conjecture(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let g = s.graph.graph();
    let n = g.n();
    if n < 6 || !is_k_connected(g, 4) {
        return Err(Skip::NotApplicable("the conjecture concerns 4-connected triangulations".into()));
    }
    let count = op(count_ham_cycles(g, &Constraints::none()))?;
    let bound = double_wheel_count(n);
    let is_dw = same_up_to_mirror(&s.graph, &double_wheel(n).expect("n >= 6"));
    checks.check("count_at_least_bound", count >= bound, || json!({ "count": count, "bound": bound }));
    checks.check("equality_only_on_double_wheel", (count == bound) == is_dw, || json!({ "count": count, "bound": bound, "double_wheel": is_dw }));
    Ok(json!({ "count": count, "bound": bound, "double_wheel": is_dw }))
}
