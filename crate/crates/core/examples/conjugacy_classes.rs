//! Conjugacy classes in canonical order and the permutation `g -> g^a`
//! induced on them.

use quadsym::groups::{class_power_map, permutation_parity};
use quadsym::{conjugacy_classes, make_group, parse_group_spec};

fn main() -> quadsym::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "alt:5".into());
    let g = make_group(&parse_group_spec(&text)?)?;
    let s = conjugacy_classes(&g);

    println!("{}: order {}, exponent {}", g.label(), g.order(), g.exponent());
    for (k, c) in s.classes.iter().enumerate() {
        let kind = if s.is_real(k) { "real".to_string() } else { format!("inverse of {}", s.inverse_class(k)) };
        println!(
            "  C{k:<2} size {:>4}  centralizer {:>4}  order {:>3}  rep {:?}  {kind}",
            c.size,
            c.centralizer_order,
            g.element_order(c.representative),
            g.encoding(c.representative)
        );
    }

    let n = g.order() as i64;
    for a in (2..n).filter(|a| num_integer::gcd(*a, n) == 1).take(6) {
        let map = class_power_map(&g, &s, a)?;
        println!("  a = {a:<3} classes -> {map:?}  sign {:+}", permutation_parity(&map)?);
    }
    Ok(())
}
