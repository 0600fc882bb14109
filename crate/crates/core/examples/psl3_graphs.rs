//! Generic centralizer orders of PSL(3,q) and PSU(3,q), the predicted graph
//! shape, and a brute-force comparison for small q.

use divclass::generic::{psl3_divgraph, psl3_vertex_counts};
use divclass::report::{psl3_bruteforce_comparison, Caps};

fn main() -> divclass::Result<()> {
    for (q, eps) in [(3, 1), (5, 1), (7, 1), (3, -1), (5, -1), (11, -1)] {
        let g = psl3_divgraph(q, eps)?;
        println!(
            "q={q:>2} eps={eps:+}  shape {:<12} predicted counts {:?}",
            g.shape().to_string(),
            psl3_vertex_counts(q, eps)?
        );
    }
    for (q, eps) in [(3, 1), (3, -1), (5, 1)] {
        let c = psl3_bruteforce_comparison(q, eps, Caps::default())?;
        println!(
            "brute force q={q} eps={eps:+}: agreement {} (generic-only orders {:?})",
            c.agreement, c.missing_from_bruteforce
        );
    }
    Ok(())
}
