//! The closed-form discriminant of SL(2, F_q), q = 2^r, without building the
//! group. Only r = 3 gives a square, and r = 16 has d_K = 65537.

use quadsym::reciprocity::sl2_formula_check;

fn main() -> quadsym::Result<()> {
    println!("{:>3} {:>7} {:>8} {:>7} {:>8}  conductor", "r", "q", "digits", "square", "d_K");
    for r in 2..=16 {
        let f = sl2_formula_check(r)?;
        let digits = f.d.value().to_string().trim_start_matches('-').len();
        println!(
            "{:>3} {:>7} {:>8} {:>7} {:>8}  {}",
            r,
            f.q,
            digits,
            f.d.is_square(),
            f.fundamental.d_k,
            f.fundamental.conductor
        );
    }
    Ok(())
}
