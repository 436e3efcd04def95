//! Finite groups as enumerated element tables.
//!
//! A [`GroupTable`] is built by closing a set of generators under right
//! multiplication. Elements keep a canonical encoding (image sequences for
//! permutations, four field coordinates for 2x2 matrices, residue tuples for
//! abelian groups) and small groups also materialize their Cayley table.

mod classes;
pub mod gf2;

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use classes::{class_power_map, conjugacy_classes, permutation_parity, ClassSet, ConjugacyClass};
use gf2::Gf2m;

use crate::error::{Error, Result};
use crate::spec::GroupSpec;

pub const DEFAULT_MAX_ORDER: usize = 5040;
const TABLE_LIMIT: usize = 1024;
const EXHAUSTIVE_ASSOCIATIVITY: usize = 512;
const RANDOM_TRIPLES: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_order: DEFAULT_MAX_ORDER }
    }
}

/// Multiplication rule on encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Law {
    /// Image sequences on `0..degree`, composed left to right.
    Perm { degree: usize },
    Abelian { moduli: Vec<u32> },
    /// `(r, s)` meaning `rot^r refl^s`.
    Dihedral { k: u32 },
    Sl2(Gf2m),
    Product { left: Box<Law>, right: Box<Law> },
}

impl Law {
    fn width(&self) -> usize {
        match self {
            Law::Perm { degree } => *degree,
            Law::Abelian { moduli } => moduli.len(),
            Law::Dihedral { .. } => 2,
            Law::Sl2(_) => 4,
            Law::Product { left, right } => left.width() + right.width(),
        }
    }

    fn identity(&self) -> Vec<u32> {
        match self {
            Law::Perm { degree } => (0..*degree as u32).collect(),
            Law::Abelian { moduli } => vec![0; moduli.len()],
            Law::Dihedral { .. } => vec![0, 0],
            Law::Sl2(_) => vec![1, 0, 0, 1],
            Law::Product { left, right } => {
                let mut id = left.identity();
                id.extend(right.identity());
                id
            }
        }
    }

    fn mul_into(&self, a: &[u32], b: &[u32], out: &mut Vec<u32>) {
        match self {
            Law::Perm { .. } => out.extend(a.iter().map(|&i| b[i as usize])),
            Law::Abelian { moduli } => {
                out.extend(a.iter().zip(b).zip(moduli).map(|((&x, &y), &k)| (x + y) % k))
            }
            Law::Dihedral { k } => {
                let r = if a[1] == 0 { a[0] + b[0] } else { a[0] + k - b[0] };
                out.push(r % k);
                out.push(a[1] ^ b[1]);
            }
            Law::Sl2(f) => {
                let m = |x, y| f.mul(x, y);
                out.push(m(a[0], b[0]) ^ m(a[1], b[2]));
                out.push(m(a[0], b[1]) ^ m(a[1], b[3]));
                out.push(m(a[2], b[0]) ^ m(a[3], b[2]));
                out.push(m(a[2], b[1]) ^ m(a[3], b[3]));
            }
            Law::Product { left, right } => {
                let w = left.width();
                left.mul_into(&a[..w], &b[..w], out);
                right.mul_into(&a[w..], &b[w..], out);
            }
        }
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = Vec::with_capacity(a.len());
        self.mul_into(a, b, &mut out);
        out
    }
}

/// A finite group with indexed elements; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct GroupTable {
    label: String,
    spec: Option<GroupSpec>,
    law: Law,
    elements: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    generators: Vec<usize>,
    table: Option<Vec<u32>>,
    inverse: Vec<usize>,
    element_order: Vec<u64>,
    exponent: u64,
}

impl GroupTable {
    fn close(label: String, law: Law, gens: Vec<Vec<u32>>, opts: &BuildOptions) -> Result<Self> {
        let identity = law.identity();
        let width = law.width();
        if let Some(g) = gens.iter().find(|g| g.len() != width) {
            return Err(Error::InvalidGenerators(format!("{g:?} has the wrong width")));
        }
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        let mut buf = Vec::with_capacity(width);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                buf.clear();
                law.mul_into(&elements[x], g, &mut buf);
                if index.contains_key(&buf) {
                    continue;
                }
                if elements.len() >= opts.max_order {
                    return Err(Error::CapExceeded { cap: opts.max_order });
                }
                index.insert(buf.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(buf.clone());
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();

        let mut group = GroupTable {
            label,
            spec: None,
            law,
            elements,
            index,
            generators,
            table: None,
            inverse: Vec::new(),
            element_order: Vec::new(),
            exponent: 1,
        };
        group.fill_table();
        group.fill_orders();
        Ok(group)
    }

    fn fill_table(&mut self) {
        let n = self.order();
        if n > TABLE_LIMIT {
            return;
        }
        let mut table = Vec::with_capacity(n * n);
        let mut buf = Vec::with_capacity(self.law.width());
        for a in &self.elements {
            for b in &self.elements {
                buf.clear();
                self.law.mul_into(a, b, &mut buf);
                table.push(self.index[&buf] as u32);
            }
        }
        self.table = Some(table);
    }

    // Walks the cyclic subgroup of each unvisited element; every power g^k
    // gets order o/gcd(k, o) and inverse g^(o-k).
    fn fill_orders(&mut self) {
        let n = self.order();
        let mut order = vec![0u64; n];
        let mut inverse = vec![usize::MAX; n];
        order[0] = 1;
        inverse[0] = 0;
        for g in 1..n {
            if order[g] != 0 && inverse[g] != usize::MAX {
                continue;
            }
            let mut powers = vec![g];
            let mut cur = g;
            while cur != 0 {
                cur = self.multiply(cur, g);
                powers.push(cur);
            }
            let o = powers.len() as u64;
            for (k, &x) in powers.iter().enumerate() {
                let k = k as u64 + 1;
                if order[x] == 0 {
                    order[x] = o / k.gcd(&o);
                }
                if inverse[x] == usize::MAX {
                    inverse[x] = if k == o { 0 } else { powers[(o - k - 1) as usize] };
                }
            }
        }
        self.exponent = order.iter().fold(1u64, |acc, &o| acc.lcm(&o));
        self.element_order = order;
        self.inverse = inverse;
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The spec this table was built from, when there is one.
    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn encoding(&self, i: usize) -> &[u32] {
        &self.elements[i]
    }

    pub fn lookup(&self, encoding: &[u32]) -> Option<usize> {
        self.index.get(encoding).copied()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.law.mul(&self.elements[a], &self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_order[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.element_order[a] as i64;
        let mut e = k.rem_euclid(o) as u64;
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            e >>= 1;
        }
        acc
    }

    /// `h^-1 g h`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.multiply(self.multiply(self.inverse(h), g), h)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.multiply(a, b) == self.multiply(b, a)))
    }

    /// Number of `g` with `g^2 = 1`.
    pub fn involution_count(&self) -> usize {
        self.element_order.iter().filter(|&&o| o <= 2).count()
    }

    /// Each row and column of the Cayley table is a permutation.
    pub fn check_latin_square(&self) -> std::result::Result<(), String> {
        let n = self.order();
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let row = self.multiply(a, b);
                if seen[row] == 2 * a {
                    return Err(format!("row {a} repeats {row}"));
                }
                seen[row] = 2 * a;
            }
            for b in 0..n {
                let col = self.multiply(b, a);
                if seen[col] == 2 * a + 1 {
                    return Err(format!("column {a} repeats {col}"));
                }
                seen[col] = 2 * a + 1;
            }
        }
        Ok(())
    }

    /// Identity, inverse and order bookkeeping.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        if self.element_order[0] != 1 {
            return Err("identity has order != 1".into());
        }
        if self.order() as u64 % self.exponent != 0 {
            return Err(format!("exponent {} does not divide {}", self.exponent, self.order()));
        }
        for a in 0..self.order() {
            if self.multiply(0, a) != a || self.multiply(a, 0) != a {
                return Err(format!("identity fails at {a}"));
            }
            let inv = self.inverse(a);
            if self.multiply(a, inv) != 0 || self.multiply(inv, a) != 0 {
                return Err(format!("inverse fails at {a}"));
            }
            if self.pow(a, self.element_order[a] as i64) != 0 {
                return Err(format!("order of {a} is wrong"));
            }
        }
        Ok(())
    }

    /// Exhaustive up to 512 elements, otherwise 10^5 seeded random triples.
    pub fn check_associativity(&self, seed: u64) -> std::result::Result<(), String> {
        let n = self.order();
        let check = |a, b, c| {
            let left = self.multiply(self.multiply(a, b), c);
            let right = self.multiply(a, self.multiply(b, c));
            if left == right {
                Ok(())
            } else {
                Err(format!("({a} {b}) {c} != {a} ({b} {c})"))
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.multiply(a, b);
                    for c in 0..n {
                        if self.multiply(ab, c) != self.multiply(a, self.multiply(b, c)) {
                            return check(a, b, c);
                        }
                    }
                }
            }
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRIPLES {
            check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
        Ok(())
    }
}

fn cycles_to_images(cycles: &[Vec<u32>], degree: usize) -> Result<Vec<u32>> {
    let mut img: Vec<u32> = (0..degree as u32).collect();
    let mut moved = vec![false; degree];
    for cycle in cycles {
        for (k, &p) in cycle.iter().enumerate() {
            let from = p as usize - 1;
            if moved[from] {
                return Err(Error::InvalidGenerators(format!(
                    "point {p} appears twice in one generator"
                )));
            }
            moved[from] = true;
            img[from] = cycle[(k + 1) % cycle.len()] - 1;
        }
    }
    Ok(img)
}

fn perm_gens(degree: usize, gens: &[Vec<Vec<u32>>]) -> Result<Vec<Vec<u32>>> {
    gens.iter().map(|g| cycles_to_images(g, degree)).collect()
}

fn check_expected_order(spec: &GroupSpec, opts: &BuildOptions) -> Result<()> {
    match spec.expected_order() {
        Some(n) if n > opts.max_order as u128 => Err(Error::CapExceeded { cap: opts.max_order }),
        _ => Ok(()),
    }
}

/// Builds the group described by `spec` with the default order cap.
pub fn make_group(spec: &GroupSpec) -> Result<GroupTable> {
    make_group_with(spec, &BuildOptions::default())
}

pub fn make_group_with(spec: &GroupSpec, opts: &BuildOptions) -> Result<GroupTable> {
    check_expected_order(spec, opts)?;
    let label = spec.to_string();
    let mut group = match spec {
        GroupSpec::Cyclic(k) => GroupTable::close(
            label,
            Law::Abelian { moduli: vec![*k] },
            if *k > 1 { vec![vec![1]] } else { vec![] },
            opts,
        )?,
        GroupSpec::Abelian(ks) => {
            let gens = (0..ks.len())
                .filter(|&i| ks[i] > 1)
                .map(|i| (0..ks.len()).map(|j| u32::from(i == j)).collect())
                .collect();
            GroupTable::close(label, Law::Abelian { moduli: ks.clone() }, gens, opts)?
        }
        GroupSpec::Dihedral(k) => {
            let mut gens = vec![vec![0, 1]];
            if *k > 1 {
                gens.insert(0, vec![1, 0]);
            }
            GroupTable::close(label, Law::Dihedral { k: *k }, gens, opts)?
        }
        GroupSpec::Symmetric(k) => {
            let k = *k as usize;
            let mut gens = Vec::new();
            if k >= 2 {
                gens.push(vec![vec![1, 2]]);
                gens.push(vec![(1..=k as u32).collect()]);
            }
            GroupTable::close(label, Law::Perm { degree: k }, perm_gens(k, &gens)?, opts)?
        }
        GroupSpec::Alternating(k) => {
            let k = *k as usize;
            let gens: Vec<_> = (3..=k as u32).map(|i| vec![vec![1, 2, i]]).collect();
            GroupTable::close(label, Law::Perm { degree: k }, perm_gens(k, &gens)?, opts)?
        }
        GroupSpec::Quaternion8 => {
            let gens = vec![
                vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]],
                vec![vec![1, 5, 3, 7], vec![2, 8, 4, 6]],
            ];
            GroupTable::close(label, Law::Perm { degree: 8 }, perm_gens(8, &gens)?, opts)?
        }
        GroupSpec::Sl2(q) => {
            let field = Gf2m::from_size(*q)
                .ok_or_else(|| Error::ParameterOutOfRange(format!("sl2 field size {q}")))?;
            // Elementary transvections over an additive basis generate SL(2, q).
            let gens = field
                .basis()
                .flat_map(|x| [vec![1, x, 0, 1], vec![1, 0, x, 1]])
                .collect();
            GroupTable::close(label, Law::Sl2(field), gens, opts)?
        }
        GroupSpec::Perm(gens) => {
            let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1) as usize;
            GroupTable::close(label, Law::Perm { degree }, perm_gens(degree, gens)?, opts)?
        }
        GroupSpec::Product(a, b) => {
            let left = make_group_with(a, opts)?;
            let right = make_group_with(b, opts)?;
            direct_product_with(&left, &right, opts)?
        }
    };
    group.spec = Some(spec.clone());
    Ok(group)
}

/// `G x H` with componentwise multiplication, under the default cap.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    direct_product_with(g, h, &BuildOptions::default())
}

pub fn direct_product_with(g: &GroupTable, h: &GroupTable, opts: &BuildOptions) -> Result<GroupTable> {
    if g.order().saturating_mul(h.order()) > opts.max_order {
        return Err(Error::CapExceeded { cap: opts.max_order });
    }
    let law = Law::Product { left: Box::new(g.law.clone()), right: Box::new(h.law.clone()) };
    let gid = g.law.identity();
    let hid = h.law.identity();
    let mut gens = Vec::new();
    for &x in g.generators() {
        let mut e = g.encoding(x).to_vec();
        e.extend(&hid);
        gens.push(e);
    }
    for &y in h.generators() {
        let mut e = gid.clone();
        e.extend(h.encoding(y));
        gens.push(e);
    }
    let mut group = GroupTable::close(format!("{}*{}", g.label(), h.label()), law, gens, opts)?;
    if let (Some(a), Some(b)) = (g.spec(), h.spec()) {
        group.spec = Some(GroupSpec::product(a.clone(), b.clone()));
    }
    Ok(group)
}
