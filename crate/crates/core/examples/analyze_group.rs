//! Enumerate a classical group, build its class profile and check that the
//! class-size graph has one main component holding every unipotent class.
//!
//! `cargo run --example analyze_group -- Sp 4 3 projective`

use divclass::group::{Family, GroupSpec};
use divclass::report::{analyze, AnalyzeOptions};

fn main() -> divclass::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec = if args.len() >= 3 {
        let family: Family = args[0].parse()?;
        let n = args[1].parse().expect("n");
        let q = args[2].parse().expect("q");
        let s = GroupSpec::new(family, n, q)?;
        if args.get(3).map(String::as_str) == Some("projective") {
            s.projective()
        } else {
            s
        }
    } else {
        GroupSpec::new(Family::SU, 3, 3)?
    };
    let report = analyze(
        &spec,
        &AnalyzeOptions {
            commuting: true,
            ..Default::default()
        },
    )?;
    print!("{report}");
    for c in &report.profile.classes {
        println!(
            "  size {:>6}  |C| {:>6}  order {:>3}  x{}{}",
            c.size,
            c.cent,
            c.rep_order,
            c.mult,
            if c.unipotent { "  unipotent" } else { "" }
        );
    }
    Ok(())
}
