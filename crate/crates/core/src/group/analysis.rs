//! Structural checks on enumerated groups: prime graph, commuting-graph
//! components, CC-tori and centralizer identities for commuting pairs.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, prime_divisors};
use crate::divgraphs::Dsu;
use crate::error::{Error, Result};

use super::classes::{conjugacy_classes, ClassProfile};
use super::FiniteGroup;

pub fn element_order<G: FiniteGroup>(g: &G, x: usize) -> u64 {
    let id = g.identity();
    let mut y = x;
    let mut k = 1;
    while y != id {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

pub fn elements_of_order<G: FiniteGroup>(g: &G, m: u64) -> Vec<usize> {
    (0..g.order())
        .filter(|&x| element_order(g, x) == m)
        .collect()
}

/// `⟨x⟩`, ascending.
pub fn cyclic_subgroup<G: FiniteGroup>(g: &G, x: usize) -> Vec<usize> {
    let mut out = vec![g.identity()];
    let mut y = x;
    while y != g.identity() {
        out.push(y);
        y = g.mul(y, x);
    }
    out.sort_unstable();
    out
}

/// `C_G(x)`, ascending.
pub fn centralizer<G: FiniteGroup>(g: &G, x: usize) -> Vec<usize> {
    (0..g.order()).filter(|&y| g.commutes(x, y)).collect()
}

fn centralizer_bits<G: FiniteGroup>(g: &G, x: usize) -> Vec<u64> {
    let mut bits = vec![0u64; g.order().div_ceil(64)];
    for y in 0..g.order() {
        if g.commutes(x, y) {
            bits[y / 64] |= 1 << (y % 64);
        }
    }
    bits
}

/// Gruenberg–Kegel graph: primes dividing `|G|`, `r ~ s` iff some element
/// has order divisible by `rs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeGraph {
    pub vertices: Vec<u128>,
    pub edges: Vec<(u128, u128)>,
    pub components: Vec<Vec<u128>>,
}

impl PrimeGraph {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// Prime graph from the group order and the set of element orders.
pub fn prime_graph_from_orders(group_order: u128, element_orders: &[u64]) -> PrimeGraph {
    let vertices = prime_divisors(group_order);
    let mut orders: Vec<u128> = element_orders.iter().map(|&o| o as u128).collect();
    orders.sort_unstable();
    orders.dedup();
    let mut edges = Vec::new();
    let mut dsu = Dsu::new(vertices.len());
    for (i, &r) in vertices.iter().enumerate() {
        for (j, &s) in vertices.iter().enumerate().skip(i + 1) {
            if orders.iter().any(|&o| o % (r * s) == 0) {
                edges.push((r, s));
                dsu.union(i, j);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<u128>> = HashMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        groups.entry(dsu.find(i)).or_default().push(v);
    }
    let mut components: Vec<Vec<u128>> = groups.into_values().collect();
    components.sort();
    PrimeGraph {
        vertices,
        edges,
        components,
    }
}

pub fn prime_graph<G: FiniteGroup>(g: &G) -> PrimeGraph {
    let classes = conjugacy_classes(g, false);
    prime_graph_from_orders(g.order() as u128, &classes.rep_orders)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutingComponents {
    /// Connected components of the commuting graph on non-central elements.
    pub component_count: usize,
    /// Orbits of the conjugation action on those components.
    pub orbit_class_count: usize,
}

/// Components of the commuting graph of a centreless group.
pub fn commuting_components<G: FiniteGroup>(g: &G) -> Result<CommutingComponents> {
    let classes = conjugacy_classes(g, true);
    let central = classes.sizes.iter().filter(|&&s| s == 1).count();
    if central == g.order() {
        return Err(Error::Precondition(
            "abelian group has no non-central elements".into(),
        ));
    }
    if central != 1 {
        return Err(Error::Precondition(format!(
            "centre has order {central}; the commuting-graph count needs a trivial centre"
        )));
    }
    let n = g.order();
    let transversal = classes.transversal.as_ref().expect("requested");
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
    for x in 0..n {
        members[classes.class_of[x] as usize].push(x);
    }
    let mut dsu = Dsu::new(n);
    for (c, &rep) in classes.reps.iter().enumerate() {
        if classes.sizes[c] == 1 {
            continue;
        }
        let cent: Vec<usize> = (0..n)
            .filter(|&y| y != g.identity() && g.commutes(rep, y))
            .collect();
        // C(rep^t) = C(rep)^t
        for &y in &members[c] {
            let t = transversal[y] as usize;
            let ti = g.inv(t);
            for &z in &cent {
                dsu.union(y, g.mul(g.mul(ti, z), t));
            }
        }
    }
    let noncentral: Vec<usize> = (0..n).filter(|&x| !classes.is_central(x)).collect();
    let mut comp_id: HashMap<usize, usize> = HashMap::new();
    let mut sample: Vec<usize> = Vec::new();
    for &x in &noncentral {
        let root = dsu.find(x);
        comp_id.entry(root).or_insert_with(|| {
            sample.push(x);
            sample.len() - 1
        });
    }
    let component_count = sample.len();
    let mut orbits = Dsu::new(component_count);
    for (c, &x) in sample.iter().enumerate() {
        for k in 0..g.generators().len() {
            let y = g.conjugate_by_generator(x, k);
            let d = comp_id[&dsu.find(y)];
            orbits.union(c, d);
        }
    }
    let orbit_class_count = (0..component_count)
        .filter(|&c| orbits.find(c) == c)
        .count();
    Ok(CommutingComponents {
        component_count,
        orbit_class_count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcTorusReport {
    /// `C_G(t) ≤ T·Z(G)` for every non-central `t ∈ T`.
    pub is_cc: bool,
    pub torus_order: usize,
    pub tz_order: usize,
    /// `|G| / |T·Z(G)|`.
    pub predicted_vertex: u128,
    /// Whether the predicted value is an isolated vertex of the class-size graph.
    pub isolated: bool,
}

pub fn verify_cc_torus<G: FiniteGroup>(
    g: &G,
    torus: &[usize],
    profile: &ClassProfile,
) -> Result<CcTorusReport> {
    let mut t: Vec<usize> = torus.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.binary_search(&g.identity()).is_err() {
        return Err(Error::InvalidInput("torus lacks the identity".into()));
    }
    for &a in &t {
        for &b in &t {
            if t.binary_search(&g.mul(a, b)).is_err() {
                return Err(Error::InvalidInput("torus is not a subgroup".into()));
            }
            if !g.commutes(a, b) {
                return Err(Error::InvalidInput("torus is not abelian".into()));
            }
        }
    }
    let center = g.center();
    let noncentral: Vec<usize> = t
        .iter()
        .copied()
        .filter(|x| center.binary_search(x).is_err())
        .collect();
    if noncentral.is_empty() {
        return Err(Error::Precondition("every torus element is central".into()));
    }
    let mut tz: Vec<usize> = t
        .iter()
        .flat_map(|&a| center.iter().map(move |&z| (a, z)))
        .map(|(a, z)| g.mul(a, z))
        .collect();
    tz.sort_unstable();
    tz.dedup();
    let is_cc = noncentral
        .iter()
        .all(|&x| (0..g.order()).all(|y| !g.commutes(x, y) || tz.binary_search(&y).is_ok()));
    let predicted_vertex = g.order() as u128 / tz.len() as u128;
    let isolated = profile.divgraph().is_isolated(predicted_vertex);
    Ok(CcTorusReport {
        is_cc,
        torus_order: t.len(),
        tz_order: tz.len(),
        predicted_vertex,
        isolated,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    /// Commuting non-central pairs of coprime order, rep × centralizer.
    pub coprime_pairs: usize,
    /// `(x, m)` with `x^m` non-central.
    pub power_pairs: usize,
    pub violations: Vec<String>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For non-central `x, y` commuting with coprime orders, checks
/// `C(xy) = C(x) ∩ C(y)`; for non-central `x^m`, checks `|C(x)|` divides
/// `|C(x^m)|`.
///
/// Both statements are invariant under simultaneous conjugation, so `x`
/// runs over class representatives and `y` over all of `C(x)`; this covers
/// every pair up to conjugacy.
pub fn check_centralizer_identities<G: FiniteGroup>(g: &G) -> IdentityReport {
    let classes = conjugacy_classes(g, false);
    let n = g.order() as u128;
    let mut cache: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut report = IdentityReport::default();
    let mut bits = |x: usize| -> Vec<u64> {
        cache
            .entry(x)
            .or_insert_with(|| centralizer_bits(g, x))
            .clone()
    };
    for (c, &x) in classes.reps.iter().enumerate() {
        if classes.sizes[c] == 1 {
            continue;
        }
        let ox = classes.rep_orders[c] as u128;
        let cx = bits(x);
        for y in 0..g.order() {
            if cx[y / 64] >> (y % 64) & 1 == 0 || classes.is_central(y) {
                continue;
            }
            if gcd(ox, classes.order_of(y) as u128) != 1 {
                continue;
            }
            report.coprime_pairs += 1;
            let cy = bits(y);
            let cxy = bits(g.mul(x, y));
            let meet: Vec<u64> = cx.iter().zip(&cy).map(|(a, b)| a & b).collect();
            if meet != cxy {
                report
                    .violations
                    .push(format!("C(xy) != C(x) ∩ C(y) for x={x}, y={y}"));
            }
        }
        let mut xm = g.mul(x, x);
        for m in 2..ox {
            if !classes.is_central(xm) {
                report.power_pairs += 1;
                let cent_x = n / classes.sizes[c] as u128;
                let cent_xm = n / classes.class_size_of(xm) as u128;
                if !cent_xm.is_multiple_of(cent_x) {
                    report.violations.push(format!(
                        "|C(x)| = {cent_x} does not divide |C(x^{m})| = {cent_xm}"
                    ));
                }
            }
            xm = g.mul(xm, x);
        }
    }
    report
}
