//! The textual group-spec language.
//!
//! ```text
//! spec   := factor ("*" factor)*          (left-associative product)
//! factor := family ":" args | "perm:" cycles | "q8"
//! family := cyclic | abelian | dihedral | sym | alt | q8 | sl2
//! cycles := "[" cycle+ ("," cycle+)* "]"
//! cycle  := "(" int+ ")"
//! ```
//!
//! Whitespace is ignored everywhere except inside integers, where it separates
//! cycle entries.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_SYMMETRIC_DEGREE: u32 = 7;
pub const SL2_FIELD_SIZES: [u32; 3] = [4, 8, 16];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    /// Direct sum of cyclic groups with these orders.
    Abelian(Vec<u32>),
    /// Dihedral group of order `2k`.
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Quaternion8,
    /// `SL(2, F_q)` for `q` a power of two.
    Sl2(u32),
    /// Permutation generators, each a list of cycles over 1-based points.
    Perm(Vec<Vec<Vec<u32>>>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn product(left: GroupSpec, right: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(left), Box::new(right))
    }

    /// Order of the group when it is known without enumeration.
    pub fn expected_order(&self) -> Option<u128> {
        let fact = |k: u32| (1..=k as u128).product::<u128>();
        Some(match self {
            GroupSpec::Cyclic(k) => *k as u128,
            GroupSpec::Abelian(ks) => ks.iter().map(|&k| k as u128).product(),
            GroupSpec::Dihedral(k) => 2 * *k as u128,
            GroupSpec::Symmetric(k) => fact(*k),
            GroupSpec::Alternating(k) => (fact(*k) / 2).max(1),
            GroupSpec::Quaternion8 => 8,
            GroupSpec::Sl2(q) => {
                let q = *q as u128;
                q * (q * q - 1)
            }
            GroupSpec::Perm(_) => return None,
            GroupSpec::Product(a, b) => a.expected_order()? * b.expected_order()?,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(k) => write!(f, "cyclic:{k}"),
            GroupSpec::Abelian(ks) => {
                let parts: Vec<String> = ks.iter().map(u32::to_string).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            GroupSpec::Dihedral(k) => write!(f, "dihedral:{k}"),
            GroupSpec::Symmetric(k) => write!(f, "sym:{k}"),
            GroupSpec::Alternating(k) => write!(f, "alt:{k}"),
            GroupSpec::Quaternion8 => write!(f, "q8"),
            GroupSpec::Sl2(q) => write!(f, "sl2:{q}"),
            GroupSpec::Perm(gens) => {
                write!(f, "perm:[")?;
                for (g, cycles) in gens.iter().enumerate() {
                    if g > 0 {
                        write!(f, ",")?;
                    }
                    for cycle in cycles {
                        let pts: Vec<String> = cycle.iter().map(u32::to_string).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                write!(f, "]")
            }
            GroupSpec::Product(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Parses a group spec; see the module docs for the grammar.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected("`*` or end of input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self, expected: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("`{}`", c as char),
            None => "end of input".to_string(),
        };
        Error::Syntax { position: self.pos, expected: expected.to_string(), found }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", c as char)))
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = GroupSpec::product(acc, rhs);
        }
        Ok(acc)
    }

    fn word(&mut self) -> (usize, String) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let w = String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_lowercase();
        (start, w)
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits
            .parse()
            .map_err(|_| Error::ParameterOutOfRange(format!("{digits} does not fit in 32 bits")))
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        let (start, family) = self.word();
        if family.is_empty() {
            return Err(self.unexpected("a group family"));
        }
        if family == "q8" {
            // `q8` takes no arguments; a bare trailing colon is tolerated.
            if self.peek() == Some(b':') {
                self.pos += 1;
            }
            return Ok(GroupSpec::Quaternion8);
        }
        let known = ["cyclic", "abelian", "dihedral", "sym", "alt", "sl2", "perm"];
        if !known.contains(&family.as_str()) {
            self.pos = start;
            return Err(Error::UnsupportedFamily(family));
        }
        self.expect(b':')?;
        let spec = match family.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.uint()?),
            "dihedral" => GroupSpec::Dihedral(self.uint()?),
            "sym" => GroupSpec::Symmetric(self.uint()?),
            "alt" => GroupSpec::Alternating(self.uint()?),
            "sl2" => GroupSpec::Sl2(self.uint()?),
            "abelian" => {
                let mut ks = vec![self.uint()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    ks.push(self.uint()?);
                }
                GroupSpec::Abelian(ks)
            }
            "perm" => GroupSpec::Perm(self.generators()?),
            _ => unreachable!(),
        };
        validate(&spec)?;
        Ok(spec)
    }

    fn generators(&mut self) -> Result<Vec<Vec<Vec<u32>>>> {
        self.expect(b'[')?;
        let mut gens = vec![self.cycles()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    gens.push(self.cycles()?);
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(gens);
                }
                _ => return Err(self.unexpected("`,` or `]`")),
            }
        }
    }

    fn cycles(&mut self) -> Result<Vec<Vec<u32>>> {
        let mut cycles = Vec::new();
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut cycle = vec![self.uint()?];
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                cycle.push(self.uint()?);
            }
            self.expect(b')')?;
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return Err(self.unexpected("`(`"));
        }
        Ok(cycles)
    }
}

fn validate(spec: &GroupSpec) -> Result<()> {
    let bad = |what: String| Err(Error::ParameterOutOfRange(what));
    match spec {
        GroupSpec::Cyclic(0) => bad("cyclic order must be at least 1".into()),
        GroupSpec::Dihedral(0) => bad("dihedral parameter must be at least 1".into()),
        GroupSpec::Abelian(ks) if ks.contains(&0) => bad("abelian factors must be at least 1".into()),
        GroupSpec::Symmetric(k) | GroupSpec::Alternating(k)
            if *k == 0 || *k > MAX_SYMMETRIC_DEGREE =>
        {
            bad(format!("degree {k} outside 1..={MAX_SYMMETRIC_DEGREE}"))
        }
        GroupSpec::Sl2(q) if !SL2_FIELD_SIZES.contains(q) => {
            bad(format!("sl2 field size {q} not in {SL2_FIELD_SIZES:?}"))
        }
        GroupSpec::Perm(gens) => {
            for cycle in gens.iter().flatten() {
                if cycle.contains(&0) {
                    return bad("permutation points are 1-based".into());
                }
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!(parse_group_spec("sl2:8"), Ok(GroupSpec::Sl2(8)));
        assert_eq!(parse_group_spec("cyclic:15"), Ok(GroupSpec::Cyclic(15)));
        assert_eq!(parse_group_spec(" abelian : 2 , 4 "), Ok(GroupSpec::Abelian(vec![2, 4])));
        assert_eq!(parse_group_spec("q8"), Ok(GroupSpec::Quaternion8));
        assert_eq!(parse_group_spec("sym:5"), Ok(GroupSpec::Symmetric(5)));
    }

    #[test]
    fn product_is_left_associative() {
        let s = parse_group_spec("cyclic:2*cyclic:3*q8").unwrap();
        let expect = GroupSpec::product(
            GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Cyclic(3)),
            GroupSpec::Quaternion8,
        );
        assert_eq!(s, expect);
        let s = parse_group_spec("cyclic:3*dihedral:4").unwrap();
        assert_eq!(s.expected_order(), Some(24));
    }

    #[test]
    fn parses_permutations() {
        let s = parse_group_spec("perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]").unwrap();
        assert_eq!(
            s,
            GroupSpec::Perm(vec![vec![vec![1, 2, 3, 4, 5, 6, 7]], vec![vec![2, 3, 5], vec![4, 7, 6]]])
        );
        assert_eq!(s.to_string(), "perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]");
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_group_spec("cyclic 5") {
            Err(Error::Syntax { position, expected, .. }) => {
                assert_eq!(position, 7);
                assert_eq!(expected, "`:`");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group_spec("perm:[(1 2]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("perm:[]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("cyclic:5*"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_spec("cyclic:5 x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rejects_unknown_and_out_of_range() {
        assert_eq!(parse_group_spec("mathieu:11"), Err(Error::UnsupportedFamily("mathieu".into())));
        assert!(matches!(parse_group_spec("sym:8"), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(parse_group_spec("sl2:32"), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(parse_group_spec("cyclic:0"), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(parse_group_spec("perm:[(0 1)]"), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn sl2_orders() {
        assert_eq!(GroupSpec::Sl2(4).expected_order(), Some(60));
        assert_eq!(GroupSpec::Sl2(16).expected_order(), Some(4080));
    }
}
