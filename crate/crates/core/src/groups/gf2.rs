//! Arithmetic in `F_{2^r}` for small `r`, elements as bit polynomials.

/// `F_{2^r}` modulo a fixed irreducible polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2m {
    degree: u32,
    modulus: u32,
}

impl Gf2m {
    /// Supported degrees: 2 (x^2+x+1), 3 (x^3+x+1), 4 (x^4+x+1).
    pub fn new(degree: u32) -> Option<Gf2m> {
        let modulus = match degree {
            2 => 0b111,
            3 => 0b1011,
            4 => 0b10011,
            _ => return None,
        };
        Some(Gf2m { degree, modulus })
    }

    pub fn from_size(q: u32) -> Option<Gf2m> {
        if !q.is_power_of_two() {
            return None;
        }
        Gf2m::new(q.trailing_zeros())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u32 {
        1 << self.degree
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1 << self.degree;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    /// The monomials `1, x, ..., x^(r-1)`.
    pub fn basis(&self) -> impl Iterator<Item = u32> {
        (0..self.degree).map(|i| 1 << i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicative_group_is_a_field() {
        for r in 2..=4 {
            let f = Gf2m::new(r).unwrap();
            let q = f.size();
            for a in 1..q {
                let inverses = (1..q).filter(|&b| f.mul(a, b) == 1).count();
                assert_eq!(inverses, 1, "r={r}, a={a}");
            }
            // x generates the multiplicative group for these moduli
            let mut x = 1;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..q - 1 {
                x = f.mul(x, 2);
                seen.insert(x);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn distributive() {
        let f = Gf2m::new(4).unwrap();
        for a in 0..16 {
            for b in 0..16 {
                for c in 0..16 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn unsupported_sizes() {
        assert!(Gf2m::new(5).is_none());
        assert!(Gf2m::from_size(6).is_none());
        assert_eq!(Gf2m::from_size(8).unwrap().degree(), 3);
    }
}
