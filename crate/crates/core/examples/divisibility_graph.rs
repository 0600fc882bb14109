//! Divisibility graph of a set of integers, with components, shape and DOT.
//!
//! `cargo run --example divisibility_graph -- 104 117 432 624 702 936`

use divclass::divisibility_graph;

fn main() {
    let args: Vec<u128> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("positive integer"))
        .collect();
    let values = if args.is_empty() {
        vec![104, 117, 432, 624, 702, 936]
    } else {
        args
    };
    let g = divisibility_graph(&values);
    println!("vertices:   {:?}", g.vertices());
    println!("edges:      {:?}", g.edges());
    println!("components: {:?}", g.connected_components());
    println!("shape:      {}", g.shape());
    print!("{}", g.to_dot());
}
