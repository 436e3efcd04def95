//! Classical symbols: quadratic reciprocity for odd primes and its compact
//! form `(a/n) = (n*/a)`.

use quadsym::ntheory::{is_discriminant, jacobi, kronecker, n_star};

fn main() -> quadsym::Result<()> {
    let primes = [3i64, 5, 7, 11, 13];
    println!("(p/q) for odd primes p (rows), q (columns)");
    for &p in &primes {
        let row: Vec<String> = primes.iter().map(|&q| format!("{:>3}", jacobi(p, q).unwrap())).collect();
        println!("{p:>3} {}", row.join(""));
    }

    for n in [15i64, 21, 35] {
        let star = n_star(n)?;
        let agree = (-50..=50).all(|a| jacobi(a, n).unwrap() == kronecker(star.clone(), a).unwrap());
        println!("n = {n}: n* = {star}, jacobi(., n) = kronecker(n*, .) on [-50, 50]: {agree}");
    }

    for d in [-4i64, 5, 8, 12, 13, -3] {
        let values: Vec<String> = (0..12).map(|a| format!("{:>2}", kronecker(d, a).unwrap())).collect();
        println!("({d:>2}/a), a = 0..12: {}  discriminant: {}", values.join(" "), is_discriminant(&d.into()));
    }
    Ok(())
}
