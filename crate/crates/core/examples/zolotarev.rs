//! Zolotarev's lemma: on the cyclic group of prime order p the group symbol
//! is the Legendre symbol.
//!
//!     cargo run --example zolotarev -- 31

use quadsym::groups::conjugacy_classes;
use quadsym::ntheory::{is_prime_u64, jacobi};
use quadsym::reciprocity::symbol_character;
use quadsym::{make_group, GroupSpec};

fn main() -> quadsym::Result<()> {
    let bound: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(23);

    for p in (3..=bound).filter(|&p| is_prime_u64(p as u64)) {
        let g = make_group(&GroupSpec::Cyclic(p))?;
        let chi = symbol_character(&g, &conjugacy_classes(&g));
        let legendre: Vec<i8> = (0..p as i64).map(|a| jacobi(a, p).unwrap()).collect();

        let row: String = chi.values.iter().map(|&v| match v {
            1 => '+',
            -1 => '-',
            _ => '0',
        }).collect();
        let agree = if chi.values == legendre { "ok" } else { "MISMATCH" };
        println!("p = {p:>3}  {row:<40} {agree}");
    }
    Ok(())
}
