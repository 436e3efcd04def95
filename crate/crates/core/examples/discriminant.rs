//! Discriminant of a finite group, its factorization and its fundamental part.
//!
//!     cargo run --example discriminant -- 'sl2:4' 'q8' 'perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]'

use quadsym::reciprocity::{discriminant, real_complex_split};
use quadsym::{conjugacy_classes, make_group, parse_group_spec};

fn main() -> quadsym::Result<()> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["cyclic:7", "sym:3", "q8", "alt:4", "sl2:4", "sl2:8"].map(String::from).to_vec();
    }

    for text in &specs {
        let g = make_group(&parse_group_spec(text)?)?;
        let s = conjugacy_classes(&g);
        let split = real_complex_split(&s);
        let d = discriminant(&g, &s, &split);
        let f = d.fundamental()?;

        println!("{}", g.label());
        println!("  order {}, {} classes ({} real, {} complex pairs)", g.order(), s.num_classes(), d.r1, d.r2);
        println!("  d   = {} = {}", d.to_bigint(), d.value);
        println!("  d_K = {}, conductor {}", f.d_k, f.conductor);
    }
    Ok(())
}
