//! Exact character table over Z[zeta_e] and the determinant identities.
//!
//!     cargo run --example character_table -- dihedral:5

use quadsym::chartab::{character_table, det_identities, export_table, verify_orthogonality};
use quadsym::reciprocity::{discriminant, real_complex_split};
use quadsym::{conjugacy_classes, make_group, parse_group_spec};

fn main() -> quadsym::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "cyclic:3".into());
    let g = make_group(&parse_group_spec(&text)?)?;
    let s = conjugacy_classes(&g);
    let split = real_complex_split(&s);
    let t = character_table(&g, &s, &split)?;

    // Entries are coefficient lists in powers of zeta_e.
    print!("{}", export_table(&t));

    let ortho = verify_orthogonality(&t, &s);
    println!("centralizer orders from the table: {:?}", ortho.diagonal.iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let d = discriminant(&g, &s, &split);
    let det = det_identities(&t, &d, &s, &g)?;
    println!("d = {}", d.to_bigint());
    if let (Some(sq), Some(ell)) = (&det.det_squared, &det.ell) {
        println!("(det M)^2 = {sq} = {ell}^2 * d");
    }
    for c in &det.checks {
        println!("{:<22} {}", c.name, if c.passed { "pass" } else { "FAIL" });
    }
    Ok(())
}
