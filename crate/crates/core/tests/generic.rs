use divclass::arith::prime_power;
use divclass::generic::{psl3_data, psl3_divgraph};
use divclass::unipotent::{enumerate_types, JordanFamily, JordanType};

fn odd_prime_powers(limit: u64) -> impl Iterator<Item = u64> {
    (3..=limit)
        .step_by(2)
        .filter(|&q| prime_power(q).is_some())
}

#[test]
fn parameter_identities() {
    for q in odd_prime_powers(10_000) {
        for eps in [1, -1] {
            let d = psl3_data(q, eps).unwrap();
            let p = d.params;
            let q = q as u128;
            assert_eq!(p.r * p.s, q * q - 1);
            assert_eq!(p.r_prime * p.a, p.r);
            assert_eq!(p.t_prime * p.a, p.t);
            assert_eq!(p.t % 3 == 0, p.r % 3 == 0, "q={q} eps={eps}");
        }
    }
}

#[test]
fn coxeter_vertex_is_isolated() {
    for q in odd_prime_powers(1000) {
        for eps in [1, -1] {
            let d = psl3_data(q, eps).unwrap();
            let g = psl3_divgraph(q, eps).unwrap();
            assert!(g.is_isolated(d.coxeter_vertex()), "q={q} eps={eps}");
            assert_eq!(g.non_singleton_components().len(), 1, "q={q} eps={eps}");
        }
    }
}

#[test]
fn extra_trivial_block_never_lowers_the_exponent() {
    for n in 1..12 {
        for t in enumerate_types(JordanFamily::Linear, n) {
            let mut blocks = t.blocks();
            blocks.push(1);
            let bigger = JordanType::from_blocks(JordanFamily::Linear, &blocks);
            assert!(
                bigger.q_exponent().unwrap() >= t.q_exponent().unwrap(),
                "{t} -> {bigger}"
            );
        }
    }
}
