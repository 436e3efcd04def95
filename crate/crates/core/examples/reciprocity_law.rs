//! Checks the reciprocity law `(a/G) = (d/a)` on a few groups and prints the
//! symbol next to the Kronecker symbol of the discriminant.

use quadsym::ntheory::kronecker_factored;
use quadsym::reciprocity::verify_group_with;
use quadsym::{conjugacy_classes, make_group, parse_group_spec};

fn main() -> quadsym::Result<()> {
    for text in ["cyclic:8", "dihedral:5", "q8", "abelian:2,4", "cyclic:3*dihedral:4"] {
        let g = make_group(&parse_group_spec(text)?)?;
        let s = conjugacy_classes(&g);
        let report = verify_group_with(&g, &s);
        let d = &report.discriminant.value;

        println!("{} (d = {})", report.label, d.value());
        let a_range = 0..(report.order as i64).min(24);
        let symbol: Vec<String> = a_range.clone().map(|a| format!("{:>2}", report.symbol.at(a))).collect();
        let kron: Vec<String> = a_range.map(|a| format!("{:>2}", kronecker_factored(d, a).unwrap())).collect();
        println!("  (a/G)  {}", symbol.join(" "));
        println!("  (d/a)  {}", kron.join(" "));

        for c in &report.checks {
            println!("  {:<32} {}", c.name, if c.passed { "pass" } else { "FAIL" });
        }
        if let Err(failure) = report.into_result() {
            eprintln!("{failure}");
            std::process::exit(1);
        }
    }
    Ok(())
}
