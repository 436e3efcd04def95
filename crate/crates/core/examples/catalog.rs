//! Verifies every group in the shipped catalog and prints a one-line summary
//! per group.

use quadsym::cli::default_catalog;
use quadsym::reciprocity::verify_group;
use quadsym::make_group;

fn main() -> quadsym::Result<()> {
    let mut failures = 0;
    for entry in default_catalog() {
        let g = make_group(&entry.spec)?;
        let report = verify_group(&g);
        let d = report.discriminant.to_bigint().to_string();
        let shown = if d.len() > 24 { format!("{}... ({} digits)", &d[..12], d.len()) } else { d };
        println!(
            "{:<40} n = {:<5} m = {:<3} d = {:<32} {}",
            report.label,
            report.order,
            report.num_classes,
            shown,
            if report.passed() { "ok" } else { "FAIL" }
        );
        failures += usize::from(!report.passed());
    }
    if failures > 0 {
        eprintln!("{failures} group(s) failed");
        std::process::exit(1);
    }
    Ok(())
}
