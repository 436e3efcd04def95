//! Groups of odd order: d = n*, one real class, and n = m (mod 16).

use quadsym::ntheory::{jacobi, n_star};
use quadsym::reciprocity::verify_group;
use quadsym::{make_group, parse_group_spec};

fn main() -> quadsym::Result<()> {
    let specs = ["cyclic:9", "cyclic:15", "abelian:3,9", "perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]", "cyclic:3*cyclic:7"];
    for text in specs {
        let g = make_group(&parse_group_spec(text)?)?;
        let r = verify_group(&g);
        let n = r.order as i64;
        let jacobi_agrees = (0..n).all(|a| r.symbol.at(a) == jacobi(a, n).unwrap());
        println!(
            "{:<40} n = {:<3} m = {:<3} r1 = {}  d = {:<5} n* = {:<5} (a/G) = (a/n): {}",
            r.label,
            n,
            r.num_classes,
            r.discriminant.r1,
            r.discriminant.to_bigint(),
            n_star(n)?,
            jacobi_agrees
        );
    }
    Ok(())
}
