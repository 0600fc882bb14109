//! Report values behind the `divclass` command line. Each report serializes
//! to the JSON the binary prints with `--json`; the text rendering is derived
//! from the same value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::p_part;
use crate::divgraphs::{divisibility_graph, DivGraphJson};
use crate::error::{Error, Result};
use crate::generic::{group_order, psl3_data, psl3_divgraph, psl3_vertex_counts, GenericClassData};
use crate::group::{
    commutant_centralizer_order, commutant_dimension, commuting_components, conjugacy_classes,
    generate, prime_graph_from_orders, profile_of, ClassProfile, ClassicalSetting,
    CommutingComponents, Family, FiniteGroup, GroupSpec, GroupTable, PrimeGraph, QuotientGroup,
    DEFAULT_ORACLE_CAP, DEFAULT_ORDER_CAP,
};
use crate::unipotent::{
    exponent_table, jordan_type_of, verify_unipotent_bound, JordanFamily, JordanType,
    UnipotentBoundReport,
};

/// Resource caps shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_order: u128,
    pub max_oracle: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: DEFAULT_ORDER_CAP,
            max_oracle: DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivGraphReport {
    pub notation: String,
    #[serde(flatten)]
    pub graph: DivGraphJson,
}

pub fn divgraph_report(values: &[u128]) -> Result<DivGraphReport> {
    let g = crate::divgraphs::try_divisibility_graph(values)?;
    Ok(DivGraphReport {
        notation: g.shape().to_string(),
        graph: g.to_json(),
    })
}

/// Brute-force class data of `(P)SLε(3,q)` against the generic orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericComparison {
    pub q: u64,
    pub epsilon: i32,
    pub generic_cent_orders: Vec<u128>,
    pub bruteforce_cent_orders: Vec<u128>,
    /// Generic orders realised by no class of the enumerated group.
    pub missing_from_bruteforce: Vec<u128>,
    /// Enumerated orders absent from the generic list.
    pub extra_in_bruteforce: Vec<u128>,
    pub graphs_equal: bool,
    pub agreement: bool,
}

fn compare_with_generic(
    q: u64,
    epsilon: i32,
    quotient: &ClassProfile,
) -> Result<GenericComparison> {
    let data = psl3_data(q, epsilon)?;
    let generic_graph = psl3_divgraph(q, epsilon)?;
    let brute = quotient.cent_orders();
    let generic = data.distinct_cent_orders();
    let graphs_equal = quotient.order == data.group_order && quotient.divgraph() == generic_graph;
    let missing = generic
        .iter()
        .copied()
        .filter(|c| !brute.contains(c))
        .collect();
    let extra = brute
        .iter()
        .copied()
        .filter(|c| !generic.contains(c))
        .collect();
    Ok(GenericComparison {
        q,
        epsilon,
        missing_from_bruteforce: missing,
        extra_in_bruteforce: extra,
        agreement: graphs_equal && brute == generic,
        generic_cent_orders: generic,
        bruteforce_cent_orders: brute,
        graphs_equal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: GroupSpec,
    pub name: String,
    pub order: u128,
    pub center_order: u128,
    pub profile: ClassProfile,
    pub graph: DivGraphJson,
    pub notation: String,
    /// Rank conditions under which one non-singleton component is claimed.
    pub theorem_in_scope: bool,
    pub theorem_main_ok: bool,
    /// The multi-vertex components, listed when there is more than one.
    pub offending_components: Vec<Vec<u128>>,
    pub unipotent_in_main: Option<bool>,
    pub involutions_in_main: Option<bool>,
    pub prime_graph: PrimeGraph,
    pub divgraph_components: usize,
    pub prime_graph_components: usize,
    pub component_count_match: bool,
    pub commuting: Option<CommutingComponents>,
    pub generic_comparison: Option<GenericComparison>,
    pub notes: Vec<String>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub commuting: bool,
    pub caps: Caps,
}

/// Whether the Lie rank is at least 2 (at least 3 for `Ω^±(2ℓ)`).
pub fn theorem_in_scope(spec: &GroupSpec) -> bool {
    let n = spec.n;
    match spec.family {
        Family::GL | Family::SL | Family::GU | Family::SU => n >= 3,
        Family::Sp => n >= 4,
        Family::GO | Family::SO | Family::Omega => {
            if n % 2 == 1 {
                n >= 5
            } else {
                n >= 6
            }
        }
    }
}

fn analyze_group<G: FiniteGroup>(
    g: &G,
    spec: &GroupSpec,
    options: &AnalyzeOptions,
    quotient_for_generic: Option<&ClassProfile>,
) -> Result<AnalysisReport> {
    let p = spec.characteristic();
    let (profile, classes) = profile_of(g, p);
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    if let Err(e) = profile.check_invariants() {
        violations.push(e.to_string());
    }
    let graph = profile.divgraph();
    let comps = graph.connected_components();
    let multi = graph.non_singleton_components();
    let theorem_main_ok = multi.len() <= 1;
    let in_scope = theorem_in_scope(spec);
    let offending_components = if theorem_main_ok {
        Vec::new()
    } else {
        multi.clone()
    };
    let contained = |sizes: Vec<u128>| -> Option<bool> {
        match multi.as_slice() {
            [main] => Some(sizes.iter().all(|s| main.binary_search(s).is_ok())),
            _ => None,
        }
    };
    let unipotent_in_main = contained(profile.unipotent_sizes());
    let involutions_in_main = contained(profile.involution_sizes());
    if in_scope {
        if !theorem_main_ok {
            violations.push(format!(
                "more than one non-singleton component: {:?}",
                offending_components
            ));
        }
        if unipotent_in_main == Some(false) {
            violations.push("a unipotent class size lies outside the main component".into());
        }
        if involutions_in_main == Some(false) {
            violations.push("an involution class size lies outside the main component".into());
        }
    }
    let prime_graph = prime_graph_from_orders(profile.order, &classes.rep_orders);
    let component_count_match = comps.len() == prime_graph.component_count();
    let commuting = if options.commuting {
        match commuting_components(g) {
            Ok(c) => Some(c),
            Err(e) => {
                notes.push(format!("commuting graph skipped: {e}"));
                None
            }
        }
    } else {
        None
    };
    let generic_comparison = match (spec.family, spec.n, quotient_for_generic) {
        (Family::SL | Family::SU, 3, Some(qp)) => {
            let eps = if spec.family == Family::SL { 1 } else { -1 };
            let cmp = compare_with_generic(spec.q, eps, qp)?;
            if !cmp.agreement {
                notes.push(format!(
                    "generic centralizer orders {:?} differ from the enumerated {:?}",
                    cmp.generic_cent_orders, cmp.bruteforce_cent_orders
                ));
            }
            Some(cmp)
        }
        _ => None,
    };
    Ok(AnalysisReport {
        spec: *spec,
        name: spec.to_string(),
        order: profile.order,
        center_order: profile.center,
        notation: graph.shape().to_string(),
        graph: graph.to_json(),
        profile,
        theorem_in_scope: in_scope,
        theorem_main_ok,
        offending_components,
        unipotent_in_main,
        involutions_in_main,
        divgraph_components: comps.len(),
        prime_graph_components: prime_graph.component_count(),
        prime_graph,
        component_count_match,
        commuting,
        generic_comparison,
        notes,
        violations,
    })
}

/// Enumerates the group and builds the full report.
pub fn analyze(spec: &GroupSpec, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let table = generate(spec, options.caps.max_order)?;
    analyze_table(&table, spec.projective, options)
}

/// Report for an already enumerated matrix group, or its central quotient.
pub fn analyze_table(
    table: &GroupTable,
    projective: bool,
    options: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let mut spec = *table.spec();
    spec.projective = projective;
    let p = spec.characteristic();
    let wants_generic = matches!(spec.family, Family::SL | Family::SU) && spec.n == 3;
    let quotient = QuotientGroup::by_center(table);
    let qp = wants_generic.then(|| profile_of(&quotient, p).0);
    if projective {
        analyze_group(&quotient, &spec, options, qp.as_ref())
    } else {
        analyze_group(table, &spec, options, qp.as_ref())
    }
}

impl AnalysisReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.name)?;
        writeln!(f, "order: {}  centre: {}", self.order, self.center_order)?;
        writeln!(f, "class sizes: {:?}", self.graph.vertices)?;
        writeln!(f, "components: {:?}", self.graph.components)?;
        writeln!(f, "shape: {}", self.notation)?;
        writeln!(
            f,
            "at most one non-singleton component: {}{}",
            self.theorem_main_ok,
            if self.theorem_in_scope {
                ""
            } else {
                " (rank outside scope)"
            }
        )?;
        if !self.offending_components.is_empty() {
            writeln!(f, "offending components: {:?}", self.offending_components)?;
        }
        let show = |x: Option<bool>| x.map_or("n/a".to_string(), |b| b.to_string());
        writeln!(
            f,
            "unipotent classes in main component: {}",
            show(self.unipotent_in_main)
        )?;
        writeln!(
            f,
            "involution classes in main component: {}",
            show(self.involutions_in_main)
        )?;
        writeln!(
            f,
            "prime graph: vertices {:?}, edges {:?}, {} component(s)",
            self.prime_graph.vertices, self.prime_graph.edges, self.prime_graph_components
        )?;
        writeln!(
            f,
            "component counts: divisibility {} / prime {} (match: {})",
            self.divgraph_components, self.prime_graph_components, self.component_count_match
        )?;
        if let Some(c) = &self.commuting {
            writeln!(
                f,
                "commuting graph: {} component(s) in {} conjugation orbit(s)",
                c.component_count, c.orbit_class_count
            )?;
        }
        if let Some(c) = &self.generic_comparison {
            writeln!(
                f,
                "generic comparison (q={}, ε={:+}): agreement {}",
                c.q, c.epsilon, c.agreement
            )?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        for v in &self.violations {
            writeln!(f, "VIOLATION: {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl3Report {
    #[serde(flatten)]
    pub data: GenericClassData,
    pub graph: DivGraphJson,
    pub shape: crate::divgraphs::ShapeDescriptor,
    pub notation: String,
    pub predicted_vertex_counts: Vec<usize>,
    pub coxeter_vertex: u128,
    pub comparison: Option<GenericComparison>,
}

pub fn psl3_report(q: u64, epsilon: i32, compare: bool, caps: Caps) -> Result<Psl3Report> {
    let data = psl3_data(q, epsilon)?;
    let graph = psl3_divgraph(q, epsilon)?;
    let comparison = if compare {
        Some(psl3_bruteforce_comparison(q, epsilon, caps)?)
    } else {
        None
    };
    Ok(Psl3Report {
        coxeter_vertex: data.coxeter_vertex(),
        predicted_vertex_counts: psl3_vertex_counts(q, epsilon)?,
        data,
        shape: graph.shape(),
        notation: graph.shape().to_string(),
        graph: graph.to_json(),
        comparison,
    })
}

/// Enumerates `SLε(3,q)`, passes to the quotient by the centre and compares.
pub fn psl3_bruteforce_comparison(q: u64, epsilon: i32, caps: Caps) -> Result<GenericComparison> {
    let family = if epsilon == 1 { Family::SL } else { Family::SU };
    let spec = GroupSpec::new(family, 3, q)?.projective();
    let table = generate(&spec, caps.max_order)?;
    let quotient = QuotientGroup::by_center(&table);
    let profile = profile_of(&quotient, spec.characteristic()).0;
    debug_assert_eq!(Some(profile.order), group_order(&spec).ok());
    compare_with_generic(q, epsilon, &profile)
}

impl fmt::Display for Psl3Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.data.params;
        let name = if self.data.epsilon == 1 { "PSL" } else { "PSU" };
        writeln!(
            f,
            "{name}(3,{}) order {}",
            self.data.q, self.data.group_order
        )?;
        writeln!(
            f,
            "r={} s={} t={} a={} r'={} t'={}",
            p.r, p.s, p.t, p.a, p.r_prime, p.t_prime
        )?;
        writeln!(f, "centralizer orders: {:?}", self.data.cent_orders)?;
        writeln!(f, "class sizes: {:?}", self.graph.vertices)?;
        writeln!(f, "components: {:?}", self.graph.components)?;
        writeln!(f, "shape: {}", self.notation)?;
        writeln!(f, "isolated Coxeter vertex: {}", self.coxeter_vertex)?;
        if let Some(c) = &self.comparison {
            writeln!(f, "brute-force agreement: {}", c.agreement)?;
        }
        Ok(())
    }
}

/// One unipotent class checked against the commutant oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub parts: Vec<(usize, usize)>,
    pub a: u64,
    pub centralizer_order: u128,
    pub q_part: u128,
    pub expected_q_part: u128,
    pub ok: bool,
}

fn jordan_family(f: Family) -> JordanFamily {
    match f {
        Family::GL | Family::SL | Family::GU | Family::SU => JordanFamily::Linear,
        Family::Sp => JordanFamily::Symplectic,
        Family::GO | Family::SO | Family::Omega => JordanFamily::Orthogonal,
    }
}

/// Unipotent representatives of `spec` paired with their Jordan types.
///
/// `GL`/`SL` use block-diagonal Jordan matrices, one per non-identity type;
/// other families enumerate the group and take every non-identity unipotent
/// class representative.
pub fn unipotent_representatives(
    spec: &GroupSpec,
    caps: Caps,
) -> Result<Vec<(Vec<u8>, JordanType)>> {
    let setting = ClassicalSetting::new(spec)?;
    let fam = jordan_family(spec.family);
    let mut out = Vec::new();
    if matches!(spec.family, Family::GL | Family::SL) {
        for jt in crate::unipotent::enumerate_types(fam, spec.n) {
            if jt.is_identity() {
                continue;
            }
            let u = setting.ring().jordan_unipotent(&jt.blocks())?;
            out.push((u, jt));
        }
        return Ok(out);
    }
    let mut plain = *spec;
    plain.projective = false;
    let table = generate(&plain, caps.max_order)?;
    let classes = conjugacy_classes(&table, false);
    let p = spec.characteristic() as u128;
    for (c, &rep) in classes.reps.iter().enumerate() {
        let o = classes.rep_orders[c] as u128;
        if o == 1 || !crate::arith::is_power_of(o, p) {
            continue;
        }
        let m = table.matrix(rep).to_vec();
        let jt = jordan_type_of(table.ring(), &m, fam)?;
        out.push((m, jt));
    }
    Ok(out)
}

/// Compares `|C(u)|_q` from the oracle with `q^{a_u}` for every representative.
pub fn oracle_crosscheck(spec: &GroupSpec, caps: Caps) -> Result<Vec<OracleCheck>> {
    let setting = ClassicalSetting::new(spec)?;
    let (p, f) = spec.char_and_degree();
    let mut out = Vec::new();
    for (u, jt) in unipotent_representatives(spec, caps)? {
        let a = jt.q_exponent()?;
        let cent = commutant_centralizer_order(&setting, &u, caps.max_oracle)?;
        let q_part = p_part(cent, p as u128);
        let expected = (p as u128).pow(f * a as u32);
        out.push(OracleCheck {
            parts: jt.parts.clone(),
            a,
            centralizer_order: cent,
            q_part,
            expected_q_part: expected,
            ok: q_part == expected,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentReport {
    #[serde(flatten)]
    pub table: UnipotentBoundReport,
    pub bound_checked: bool,
    pub oracle: Option<Vec<OracleCheck>>,
}

impl UnipotentReport {
    pub fn ok(&self) -> bool {
        (!self.bound_checked || self.table.bound_ok)
            && self.oracle.as_ref().is_none_or(|o| o.iter().all(|c| c.ok))
    }
}

/// Exponent table for `family`/`n`, optionally with the bound verdict and an
/// oracle cross-check in the concrete group `oracle_spec`.
pub fn unipotent_report(
    family: JordanFamily,
    n: usize,
    check_bound: bool,
    oracle_spec: Option<GroupSpec>,
    caps: Caps,
) -> Result<UnipotentReport> {
    let table = if check_bound {
        verify_unipotent_bound(family, n)?
    } else {
        exponent_table(family, n)?
    };
    let oracle = match oracle_spec {
        Some(spec) => {
            if jordan_family(spec.family) != family || spec.n != n {
                return Err(Error::InvalidInput(format!(
                    "oracle group {spec} does not match {family}({n})"
                )));
            }
            Some(oracle_crosscheck(&spec, caps)?)
        }
        None => None,
    };
    Ok(UnipotentReport {
        table,
        bound_checked: check_bound,
        oracle,
    })
}

impl fmt::Display for UnipotentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.table;
        writeln!(f, "{}({}), rank {}", t.family, t.n, t.rank)?;
        for ty in &t.types {
            let jt = JordanType::new(t.family, t.n, ty.parts.clone());
            writeln!(
                f,
                "  {:<24} a = {}{}",
                jt.to_string(),
                ty.a,
                if ty.regular { "  (regular)" } else { "" }
            )?;
        }
        if self.bound_checked {
            writeln!(
                f,
                "bound a >= rank, equality only at regular: {}",
                if t.bound_ok { "pass" } else { "FAIL" }
            )?;
        }
        if let Some(o) = &self.oracle {
            for c in o {
                writeln!(
                    f,
                    "  oracle {:?}: |C| = {}, q-part {} vs q^{} = {} {}",
                    c.parts,
                    c.centralizer_order,
                    c.q_part,
                    c.a,
                    c.expected_q_part,
                    if c.ok { "ok" } else { "MISMATCH" }
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub spec: GroupSpec,
    pub commutant_dimension: usize,
    pub centralizer_order: u128,
    pub q_part: u128,
    pub jordan_type: Option<JordanType>,
    pub predicted_q_part: Option<u128>,
}

/// Centralizer order of one matrix through the commutant oracle.
pub fn oracle_report(spec: &GroupSpec, u: &[u8], caps: Caps) -> Result<OracleReport> {
    let setting = ClassicalSetting::new(spec)?;
    let cent = commutant_centralizer_order(&setting, u, caps.max_oracle)?;
    let (p, f) = spec.char_and_degree();
    let ring = setting.ring();
    let unipotent = {
        let nil = ring.sub(u, &ring.identity());
        ring.pow(&nil, spec.n as u64) == ring.zero()
    };
    let jordan_type = if unipotent {
        Some(jordan_type_of(ring, u, jordan_family(spec.family))?)
    } else {
        None
    };
    let predicted_q_part = match &jordan_type {
        Some(jt) => Some((p as u128).pow(f * jt.q_exponent()? as u32)),
        None => None,
    };
    Ok(OracleReport {
        spec: *spec,
        commutant_dimension: commutant_dimension(&setting, u),
        centralizer_order: cent,
        q_part: p_part(cent, p as u128),
        jordan_type,
        predicted_q_part,
    })
}

/// Parses `"a,b,c;d,e,f;…"` (field codes) into a row-major matrix.
pub fn parse_matrix(text: &str, n: usize) -> Result<Vec<u8>> {
    let rows: Vec<&str> = text.split(';').map(str::trim).collect();
    if rows.len() != n {
        return Err(Error::InvalidInput(format!(
            "expected {n} rows, got {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for row in rows {
        let entries: Vec<&str> = row.split(',').map(str::trim).collect();
        if entries.len() != n {
            return Err(Error::InvalidInput(format!(
                "row {row:?} needs {n} entries"
            )));
        }
        for e in entries {
            out.push(
                e.parse::<u8>()
                    .map_err(|_| Error::InvalidInput(format!("bad entry {e:?}")))?,
            );
        }
    }
    Ok(out)
}

/// Shape notation of the graph on `values`, e.g. `3K1`.
pub fn notation(values: &[u128]) -> String {
    divisibility_graph(values).shape().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_rules() {
        let s = |f, n| GroupSpec::new(f, n, 3).unwrap();
        assert!(theorem_in_scope(&s(Family::SL, 3)));
        assert!(!theorem_in_scope(&s(Family::SL, 2)));
        assert!(theorem_in_scope(&s(Family::Sp, 4)));
        assert!(theorem_in_scope(&s(Family::GO, 5)));
        let d2 = GroupSpec::with_sign(Family::Omega, Some(crate::group::Sign::Plus), 4, 3).unwrap();
        assert!(!theorem_in_scope(&d2));
    }

    #[test]
    fn divgraph_notation() {
        assert_eq!(divgraph_report(&[15, 20, 12]).unwrap().notation, "3K1");
        assert_eq!(notation(&[2, 4]), "K2");
        assert!(divgraph_report(&[0]).is_err());
    }

    #[test]
    fn matrix_parsing() {
        assert_eq!(parse_matrix("1,1;0,1", 2).unwrap(), vec![1, 1, 0, 1]);
        assert!(parse_matrix("1,1;0", 2).is_err());
        assert!(parse_matrix("1,x;0,1", 2).is_err());
    }
}
