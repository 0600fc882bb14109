//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use divclass::generic::{psl3_divgraph, psl3_vertex_counts};
use divclass::group::{
    check_centralizer_identities, commuting_components, cyclic_subgroup, elements_of_order,
    generate, profile_of, quotient_profile, verify_cc_torus, Family, FiniteGroup, GroupSpec,
    QuotientGroup, DEFAULT_ORDER_CAP,
};
use divclass::report::{analyze, oracle_crosscheck, AnalyzeOptions, Caps};
use divclass::unipotent::{
    bound_min_dimension, enumerate_types, exponent_table, verify_unipotent_bound, JordanFamily,
};

type Outcome = Result<String, String>;

fn spec(f: Family, n: usize, q: u64) -> GroupSpec {
    GroupSpec::new(f, n, q).unwrap()
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    if e > limit {
        Err(format!("{what} took {e:.2?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn psl2_shapes() -> Outcome {
    let mut seen = Vec::new();
    for q in [5, 7, 9, 11, 13] {
        let t0 = Instant::now();
        let table =
            generate(&spec(Family::SL, 2, q), DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let shape = quotient_profile(&table).divgraph().shape().to_string();
        within(t0, Duration::from_secs(5), &format!("PSL(2,{q})"))?;
        if shape != "3K1" && shape != "K2+2K1" {
            return Err(format!("PSL(2,{q}) has shape {shape}"));
        }
        seen.push(format!("q={q}:{shape} {:.2?}", t0.elapsed()));
    }
    Ok(seen.join(", "))
}

fn psl3_graphs() -> Outcome {
    let t0 = Instant::now();
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for (q, eps) in [(3u64, 1i32), (5, 1), (3, -1), (5, -1)] {
        let fam = if eps == 1 { Family::SL } else { Family::SU };
        let table = generate(&spec(fam, 3, q), DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let brute = quotient_profile(&table).divgraph();
        let generic = psl3_divgraph(q, eps).map_err(|e| e.to_string())?;
        let counts = psl3_vertex_counts(q, eps).map_err(|e| e.to_string())?;
        let brute_counts = brute.shape().vertex_counts();
        let label = format!("({q},{eps:+})");
        if brute != generic {
            let missing: Vec<u128> = generic
                .vertices()
                .iter()
                .copied()
                .filter(|v| !brute.contains(*v))
                .collect();
            failures.push(format!(
                "{label}: enumerated graph {} differs from generic {} (generic-only vertices {missing:?})",
                brute.shape(),
                generic.shape()
            ));
        } else if brute_counts != counts {
            failures.push(format!(
                "{label}: vertex counts {brute_counts:?}, predicted {counts:?}"
            ));
        } else {
            notes.push(format!("{label}:{}", brute.shape()));
        }
    }
    within(t0, Duration::from_secs(300), "PSL3/PSU3 runs")?;
    if failures.is_empty() {
        Ok(format!("{} in {:.2?}", notes.join(", "), t0.elapsed()))
    } else {
        Err(failures.join("; "))
    }
}

fn oracle_agreement() -> Outcome {
    let t0 = Instant::now();
    let mut checked = 0;
    for s in [
        spec(Family::GL, 2, 3),
        spec(Family::GL, 3, 3),
        spec(Family::GL, 4, 3),
        spec(Family::SL, 3, 3),
        spec(Family::Sp, 4, 3),
        spec(Family::SU, 3, 3),
    ] {
        for c in oracle_crosscheck(&s, Caps::default()).map_err(|e| format!("{s}: {e}"))? {
            if !c.ok {
                return Err(format!(
                    "{s} type {:?}: q-part {} vs predicted {}",
                    c.parts, c.q_part, c.expected_q_part
                ));
            }
            checked += 1;
        }
    }
    within(t0, Duration::from_secs(120), "oracle checks")?;
    Ok(format!("{checked} classes in {:.2?}", t0.elapsed()))
}

fn unipotent_bound() -> Outcome {
    let t0 = Instant::now();
    let mut types = 0;
    let mut cases = 0;
    for fam in [
        JordanFamily::Linear,
        JordanFamily::Symplectic,
        JordanFamily::Orthogonal,
    ] {
        for n in 1..=12 {
            if n < bound_min_dimension(fam, n) || (fam == JordanFamily::Symplectic && n % 2 == 1) {
                continue;
            }
            let r = verify_unipotent_bound(fam, n).map_err(|e| format!("{fam}({n}): {e}"))?;
            if !r.bound_ok {
                return Err(format!("{fam}({n}) violates the bound"));
            }
            cases += 1;
        }
        for n in 1..=20 {
            if fam == JordanFamily::Symplectic && n % 2 == 1 {
                continue;
            }
            if fam == JordanFamily::Orthogonal && n < 3 {
                continue;
            }
            exponent_table(fam, n).map_err(|e| format!("{fam}({n}): {e}"))?;
            types += enumerate_types(fam, n).len();
        }
    }
    within(t0, Duration::from_secs(1), "bound checks")?;
    Ok(format!(
        "{cases} (family, n) bound cases, {types} types integral, {:.2?}",
        t0.elapsed()
    ))
}

fn theorem_groups() -> Vec<GroupSpec> {
    vec![
        spec(Family::SL, 3, 3),
        spec(Family::SU, 3, 3),
        spec(Family::Sp, 4, 3).projective(),
    ]
}

fn theorem_structure() -> Outcome {
    let mut notes = Vec::new();
    for s in theorem_groups() {
        let r = analyze(&s, &AnalyzeOptions::default()).map_err(|e| e.to_string())?;
        if !r.theorem_main_ok {
            return Err(format!(
                "{s}: offending components {:?}",
                r.offending_components
            ));
        }
        if r.unipotent_in_main != Some(true) || r.involutions_in_main != Some(true) {
            return Err(format!(
                "{s}: unipotent in main {:?}, involutions in main {:?}",
                r.unipotent_in_main, r.involutions_in_main
            ));
        }
        notes.push(format!("{s}:{}", r.notation));
    }
    Ok(notes.join(", "))
}

fn component_counts() -> Outcome {
    let mut notes = Vec::new();
    for s in theorem_groups() {
        let r = analyze(&s, &AnalyzeOptions::default()).map_err(|e| e.to_string())?;
        if !r.component_count_match {
            return Err(format!(
                "{s}: {} divisibility components, {} prime-graph components",
                r.divgraph_components, r.prime_graph_components
            ));
        }
        notes.push(format!(
            "{s}: {}={}",
            r.divgraph_components, r.prime_graph_components
        ));
    }
    Ok(notes.join(", "))
}

fn cc_tori() -> Outcome {
    let mut notes = Vec::new();
    for (fam, order, vertex) in [(Family::SL, 13u64, 432u128), (Family::SU, 7, 864)] {
        let s = spec(fam, 3, 3);
        let g = generate(&s, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let profile = profile_of(&g, 3).0;
        let x = *elements_of_order(&g, order)
            .first()
            .ok_or(format!("{s} has no element of order {order}"))?;
        let torus = cyclic_subgroup(&g, x);
        let r = verify_cc_torus(&g, &torus, &profile).map_err(|e| e.to_string())?;
        if !r.is_cc || r.predicted_vertex != vertex || !r.isolated {
            return Err(format!("{s}: {r:?}"));
        }
        notes.push(format!("{s}: {vertex} isolated"));
    }
    Ok(notes.join(", "))
}

fn centralizer_identities() -> Outcome {
    let mut notes = Vec::new();
    for s in [
        spec(Family::SL, 2, 3),
        spec(Family::SL, 2, 5),
        spec(Family::SL, 3, 3),
    ] {
        let g = generate(&s, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let r = check_centralizer_identities(&g);
        if !r.ok() {
            return Err(format!("{s}: {}", r.violations[0]));
        }
        notes.push(format!(
            "{s}: {} coprime pairs, {} powers",
            r.coprime_pairs, r.power_pairs
        ));
    }
    Ok(notes.join(", "))
}

fn commuting_correspondence() -> Outcome {
    let sl33 = generate(&spec(Family::SL, 3, 3), DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
    let sl25 = generate(&spec(Family::SL, 2, 5), DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
    let psl25 = QuotientGroup::by_center(&sl25);
    let mut notes = Vec::new();
    let mut check = |name: &str, g: &dyn Fn() -> (usize, usize)| -> Result<(), String> {
        let (orbits, comps) = g();
        if orbits != comps {
            return Err(format!(
                "{name}: {orbits} orbit classes vs {comps} components"
            ));
        }
        notes.push(format!("{name}: {orbits}={comps}"));
        Ok(())
    };
    check("SL(3,3)", &|| counts(&sl33, 3))?;
    check("PSL(2,5)", &|| counts(&psl25, 5))?;
    Ok(notes.join(", "))
}

fn counts<G: FiniteGroup>(g: &G, p: u64) -> (usize, usize) {
    let c = commuting_components(g).expect("centreless");
    let d = profile_of(g, p).0.divgraph().connected_components().len();
    (c.orbit_class_count, d)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("PSL(2,q) shapes", psl2_shapes),
        ("PSL3/PSU3 graphs", psl3_graphs),
        ("oracle q-parts", oracle_agreement),
        ("unipotent bound", unipotent_bound),
        ("main component", theorem_structure),
        ("component counts", component_counts),
        ("CC-torus isolation", cc_tori),
        ("centralizer identities", centralizer_identities),
        ("commuting orbits", commuting_correspondence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
