//! Edge-deletion families: one edge removed at every vertex of a special set, and
//! the Hamiltonian cycles that survive.

use super::cert::{IndSetCert, SaturationIndex, SetFlags};
use super::IndSetError;
use crate::ham::{find_ham_cycle, Constraints, HamCycle, HamFamily};
use crate::plane_graph::{edge, is_k_connected, Edge, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The hypothesis of the edge-family construction that a cert fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Independent,
    MaxDegree6,
    NoSat4cycle,
    NoSat5cycle,
    NoSatDiamond6,
    /// Minimum degree 5, or no member on a separating 4-cycle.
    MinDegree5OrNoSep4,
    NoVertex3adjSep4cycle,
    AtLeastSixVertices,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap_or("?"))
    }
}

/// One edge at each member of `set`, in the same order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeFamily {
    pub set: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// Checks every hypothesis against a fresh scan of `g`.
pub fn check_hypotheses(g: &Graph, set: &[usize]) -> Result<(), IndSetError> {
    let fail = |h| Err(IndSetError::HypothesisViolated(h));
    let s = set.iter().fold(0, |a, &v| a | crate::plane_graph::bit(v));
    if g.n() < 6 {
        return fail(Hypothesis::AtLeastSixVertices);
    }
    if !g.is_independent(s) || s.count_ones() as usize != set.len() {
        return fail(Hypothesis::Independent);
    }
    if set.iter().any(|&v| g.degree(v) > 6) {
        return fail(Hypothesis::MaxDegree6);
    }
    let flags = SetFlags::scan(&SaturationIndex::new(g), s);
    if !flags.no_sat_4cycle {
        return fail(Hypothesis::NoSat4cycle);
    }
    if !flags.no_sat_5cycle {
        return fail(Hypothesis::NoSat5cycle);
    }
    if !flags.no_sat_diamond6 {
        return fail(Hypothesis::NoSatDiamond6);
    }
    if g.min_degree() < 5 && !flags.no_vertex_on_sep4cycle {
        return fail(Hypothesis::MinDegree5OrNoSep4);
    }
    if !flags.no_vertex_3adj_sep4cycle {
        return fail(Hypothesis::NoVertex3adjSep4cycle);
    }
    Ok(())
}

/// Mixed-radix walk over the neighbour choices, the last member varying fastest.
#[derive(Clone, Debug)]
pub struct EdgeFamilies {
    set: Vec<usize>,
    choices: Vec<Vec<usize>>,
    digits: Vec<usize>,
    done: bool,
}

impl EdgeFamilies {
    pub fn new(g: &Graph, cert: &IndSetCert) -> Result<Self, IndSetError> {
        check_hypotheses(g, &cert.set)?;
        let choices: Vec<Vec<usize>> = cert.set.iter().map(|&v| g.neighbors(v).collect()).collect();
        Ok(EdgeFamilies { set: cert.set.clone(), digits: vec![0; choices.len()], choices, done: false })
    }

    /// Product of the member degrees.
    pub fn total(&self) -> u128 {
        self.choices.iter().map(|c| c.len() as u128).product()
    }
}

impl Iterator for EdgeFamilies {
    type Item = EdgeFamily;

    fn next(&mut self) -> Option<EdgeFamily> {
        if self.done {
            return None;
        }
        let edges = self.set.iter().zip(&self.digits).zip(&self.choices).map(|((&v, &d), c)| edge(v, c[d])).collect();
        let out = EdgeFamily { set: self.set.clone(), edges };
        self.done = true;
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.choices[i].len() {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

pub fn edge_families(g: &Graph, cert: &IndSetCert) -> Result<EdgeFamilies, IndSetError> {
    EdgeFamilies::new(g, cert)
}

/// `ceil(1.5^k)`, exactly.
pub fn three_halves_bound(k: usize) -> u128 {
    let (num, den) = (3u128.pow(k as u32), 2u128.pow(k as u32));
    num.div_ceil(den)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: HamFamily,
    pub families_tried: u64,
    pub capped: bool,
    /// Most families mapping to one cycle.
    pub max_multiplicity: u64,
    /// Product of `deg(v) - 2` over the set: the number of families a fixed cycle avoids.
    pub multiplicity_bound: u64,
    pub lower_bound: u128,
}

/// For each family `F` (at most `cap`), checks `G - F` is 4-connected and records one
/// Hamiltonian cycle of it. Uncapped runs must reach `ceil(1.5^|S|)` distinct cycles.
pub fn ham_family_from_edge_families(g: &Graph, cert: &IndSetCert, cap: Option<u64>) -> Result<FamilyReport, IndSetError> {
    let fams = edge_families(g, cert)?;
    let total = fams.total();
    let multiplicity_bound: u64 = cert.set.iter().map(|&v| g.degree(v) as u64 - 2).product();
    let mut family = HamFamily::new("edge_families");
    let mut hits: BTreeMap<HamCycle, u64> = BTreeMap::new();
    let mut tried = 0u64;
    for f in fams {
        if cap.is_some_and(|c| tried >= c) {
            break;
        }
        tried += 1;
        let h = g.without_edges(&f.edges);
        if !is_k_connected(&h, 4) {
            return Err(IndSetError::FourConnectivityLost(f.edges));
        }
        let c = find_ham_cycle(&h, &Constraints::none())?.ok_or_else(|| IndSetError::NoHamiltonianCycle(f.edges.clone()))?;
        let tag = f.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",");
        family.insert(c.clone(), format!("F=[{tag}]"));
        *hits.entry(c).or_default() += 1;
    }
    let max_multiplicity = hits.values().copied().max().unwrap_or(0);
    if max_multiplicity > multiplicity_bound {
        return Err(IndSetError::MultiplicityExceeded { got: max_multiplicity, bound: multiplicity_bound });
    }
    let lower_bound = three_halves_bound(cert.len());
    let capped = (tried as u128) < total;
    if !capped && (family.len() as u128) < lower_bound {
        return Err(IndSetError::FamilyTooSmall { got: family.len(), bound: lower_bound });
    }
    Ok(FamilyReport { family, families_tried: tried, capped, max_multiplicity, multiplicity_bound, lower_bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::icosahedron;
    use crate::indset::cert::SaturationIndex;
    use crate::plane_graph::set_of;

    fn cert(g: &Graph, s: &[usize]) -> IndSetCert {
        IndSetCert::certify(g, &SaturationIndex::new(g), set_of(s.iter().copied()), vec![])
    }

    #[test]
    fn product_counts() {
        let pg = icosahedron();
        let g = pg.graph();
        assert_eq!(edge_families(g, &cert(g, &[0])).unwrap().count(), 5);
        // 0 and 11 are antipodal
        let two = edge_families(g, &cert(g, &[0, 11])).unwrap();
        assert_eq!(two.total(), 25);
        assert_eq!(two.count(), 25);
        assert_eq!(edge_families(g, &cert(g, &[])).unwrap().count(), 1);
    }

    #[test]
    fn saturated_four_cycle_rejected() {
        let pg = icosahedron();
        let g = pg.graph();
        // 1 and 3 sit on the upper ring at distance two: a 4-cycle through both
        assert_eq!(
            edge_families(g, &cert(g, &[1, 3])).err(),
            Some(IndSetError::HypothesisViolated(Hypothesis::NoSat4cycle))
        );
    }

    #[test]
    fn bound_rounding() {
        assert_eq!(three_halves_bound(0), 1);
        assert_eq!(three_halves_bound(1), 2);
        assert_eq!(three_halves_bound(2), 3);
        assert_eq!(three_halves_bound(3), 4);
    }

    #[test]
    fn icosahedron_antipodal_family() {
        let pg = icosahedron();
        let g = pg.graph();
        let r = ham_family_from_edge_families(g, &cert(g, &[0, 11]), None).unwrap();
        assert_eq!(r.families_tried, 25);
        assert!(r.family.len() >= 3);
        assert!(r.family.all_hamiltonian_in(g));
        assert_eq!(r.multiplicity_bound, 9);
    }
}
