//! Character tables by simultaneous diagonalization of class matrices mod P.
//!
//! The class sums span a commutative algebra whose structure constants
//! `a_ijk = #{(x, y) in C_i x C_j : xy = z_k}` are computed by counting. Every
//! irreducible character gives a common eigenvector of the matrices
//! `(M_i)_jk = a_ijk`, namely its central character. Over `F_P` with
//! `P = 1 mod e` all eigenvalues are rational, so the common eigenspaces can
//! be split by random linear combinations. Each mod-P character is then lifted
//! to `Z[zeta_e]` through eigenvalue multiplicities on cyclic subgroups.

use num_bigint::BigInt;
use num_integer::Roots;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cyclo::{CycInt, CyclotomicRing};
use crate::error::{Error, Result};
use crate::groups::{ClassSet, GroupTable};
use crate::ntheory::{factorize_u64, is_prime_u64};
use crate::reciprocity::RealComplexSplit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableOptions {
    pub max_classes: usize,
    pub max_conductor: u64,
    pub seed: u64,
    /// Random combinations tried on a subspace before giving up.
    pub max_attempts: u32,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions { max_classes: 16, max_conductor: 256, seed: 0, max_attempts: 64 }
    }
}

/// Irreducible characters (rows) on conjugacy classes (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub ring: CyclotomicRing,
    /// Class index of each column.
    pub columns: Vec<usize>,
    pub entries: Vec<Vec<CycInt>>,
    /// The prime used for the modular computation.
    pub prime: u64,
}

impl CharacterTable {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn conductor(&self) -> u32 {
        self.ring.conductor()
    }

    pub fn entry(&self, row: usize, col: usize) -> &CycInt {
        &self.entries[row][col]
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|row| row[0].as_integer().cloned().unwrap_or_default())
            .collect()
    }

    /// Column holding class `c`.
    pub fn column_of(&self, class: usize) -> usize {
        self.columns.iter().position(|&k| k == class).expect("every class has a column")
    }

    /// Row 0 trivial, column 0 positive degrees whose squares sum to `n`.
    pub fn check_structure(&self, order: usize) -> std::result::Result<(), String> {
        let one = self.ring.one();
        if let Some(j) = self.entries[0].iter().position(|x| *x != one) {
            return Err(format!("row 0 is not trivial at column {j}"));
        }
        if let Some(i) = self.entries.iter().position(|row| !row[0].is_positive_integer()) {
            return Err(format!("degree of row {i} is not a positive integer"));
        }
        let sum: BigInt = self.degrees().iter().map(|d| d * d).sum();
        if sum != BigInt::from(order) {
            return Err(format!("squared degrees sum to {sum}, not {order}"));
        }
        Ok(())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Smallest prime `P = 1 mod e` with `P > 2 sqrt(n)`.
pub fn choose_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if is_prime_u64(p) && p * p > 4 * n {
            return p;
        }
        p += e;
    }
}

fn primitive_root(p: u64) -> u64 {
    let primes: Vec<u64> = factorize_u64(p - 1).primes().collect();
    (2..p)
        .find(|&g| primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

fn fnv1a(text: &str) -> u64 {
    text.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// `M_i` as dense `m x m` matrices mod `p`.
fn class_matrices(g: &GroupTable, s: &ClassSet, p: u64) -> Vec<Vec<Vec<u64>>> {
    let m = s.num_classes();
    let mut mats = vec![vec![vec![0u64; m]; m]; m];
    for k in 0..m {
        let z = s.classes[k].representative;
        for (i, class) in s.classes.iter().enumerate() {
            for &x in &class.members {
                let j = s.class_of(g.multiply(g.inverse(x), z));
                mats[i][j][k] += 1;
            }
        }
    }
    for v in mats.iter_mut().flatten().flatten() {
        *v %= p;
    }
    mats
}

/// Null space of an `m x k` matrix over `F_p`, as column vectors of length `k`.
fn kernel(mut a: Vec<Vec<u64>>, k: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for v in a[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..k {
                    a[i][j] = (a[i][j] + p - mul_mod(f, a[r][j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; k];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

/// Splits `basis` (vectors in `F_p^m`) into eigenspaces of `a`; `None` when
/// `a` acts as a scalar or the eigenspaces do not fill the space.
fn split_space(a: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let m = a.len();
    let k = basis.len();
    // image[r][c] = (A * basis_c)_r
    let image: Vec<Vec<u64>> = (0..m)
        .map(|r| {
            (0..k)
                .map(|c| (0..m).fold(0, |acc, t| (acc + mul_mod(a[r][t], basis[c][t], p)) % p))
                .collect()
        })
        .collect();
    let mut spaces = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..m)
            .map(|r| (0..k).map(|c| (image[r][c] + p - mul_mod(lambda, basis[c][r], p)) % p).collect())
            .collect();
        let ker = kernel(shifted, k, p);
        if ker.is_empty() {
            continue;
        }
        total += ker.len();
        let vectors = ker
            .iter()
            .map(|u| {
                (0..m)
                    .map(|r| (0..k).fold(0, |acc, c| (acc + mul_mod(u[c], basis[c][r], p)) % p))
                    .collect()
            })
            .collect();
        spaces.push(vectors);
        if total == k {
            break;
        }
    }
    (total == k && spaces.len() > 1).then_some(spaces)
}

/// Common eigenvectors of the class matrices, one per irreducible character.
fn central_characters(
    mats: &[Vec<Vec<u64>>],
    p: u64,
    label: &str,
    opts: &TableOptions,
) -> Result<Vec<Vec<u64>>> {
    let m = mats.len();
    let identity: Vec<Vec<u64>> = (0..m).map(|i| (0..m).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![identity];
    let mut done = Vec::new();
    let mut attempt = 0u64;
    let base_seed = opts.seed ^ fnv1a(label);
    while let Some(space) = pending.pop() {
        if space.len() == 1 {
            done.push(space.into_iter().next().unwrap());
            continue;
        }
        let mut split = None;
        for _ in 0..opts.max_attempts {
            let mut rng = ChaCha8Rng::seed_from_u64(base_seed.wrapping_add(attempt));
            attempt += 1;
            let coeffs: Vec<u64> = (0..m).map(|_| rng.gen_range(0..p)).collect();
            let combo: Vec<Vec<u64>> = (0..m)
                .map(|r| {
                    (0..m)
                        .map(|c| (0..m).fold(0, |acc, i| (acc + mul_mod(coeffs[i], mats[i][r][c], p)) % p))
                        .collect()
                })
                .collect();
            if let Some(parts) = split_space(&combo, &space, p) {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => pending.extend(parts),
            None => return Err(Error::SplittingFailed { attempts: opts.max_attempts }),
        }
    }
    Ok(done)
}

pub fn character_table(g: &GroupTable, s: &ClassSet, split: &RealComplexSplit) -> Result<CharacterTable> {
    character_table_with(g, s, split, &TableOptions::default())
}

pub fn character_table_with(
    g: &GroupTable,
    s: &ClassSet,
    split: &RealComplexSplit,
    opts: &TableOptions,
) -> Result<CharacterTable> {
    let m = s.num_classes();
    let n = g.order() as u64;
    let e = g.exponent();
    if m > opts.max_classes {
        return Err(Error::TableBound(format!("{m} classes, limit {}", opts.max_classes)));
    }
    if e > opts.max_conductor {
        return Err(Error::TableBound(format!("exponent {e}, limit {}", opts.max_conductor)));
    }
    let p = choose_prime(e, n);
    let root = pow_mod(primitive_root(p), (p - 1) / e, p);
    let mats = class_matrices(g, s, p);
    let vectors = central_characters(&mats, p, g.label(), opts)?;
    let ring = CyclotomicRing::new(e as u32);
    let id_class = s.class_of(g.identity());
    let sizes: Vec<u64> = s.classes.iter().map(|c| c.size as u64).collect();

    let mut rows = Vec::with_capacity(m);
    for v in vectors {
        let norm = inv_mod(v[id_class], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, norm, p)).collect();
        let degree = lift_degree(&omega, s, &sizes, n, p)?;
        let chi: Vec<u64> = (0..m)
            .map(|j| mul_mod(mul_mod(omega[j], degree, p), inv_mod(sizes[j] % p, p), p))
            .collect();
        let lifted: Vec<CycInt> = (0..m)
            .map(|j| lift_value(g, s, &ring, &chi, j, degree, root, e, p))
            .collect::<Result<_>>()?;
        rows.push((degree, split.order.iter().map(|&c| lifted[c].clone()).collect::<Vec<_>>()));
    }

    let one = ring.one();
    rows.sort_by(|(da, ra), (db, rb)| {
        let trivial_a = ra.iter().all(|x| *x == one);
        let trivial_b = rb.iter().all(|x| *x == one);
        trivial_b
            .cmp(&trivial_a)
            .then(da.cmp(db))
            .then_with(|| {
                let ka = ra.iter().flat_map(|x| x.coeffs.iter());
                let kb = rb.iter().flat_map(|x| x.coeffs.iter());
                ka.cmp(kb)
            })
    });
    Ok(CharacterTable {
        ring,
        columns: split.order.clone(),
        entries: rows.into_iter().map(|(_, row)| row).collect(),
        prime: p,
    })
}

// chi(1)^2 * sum_j omega_j omega_j' / |C_j| = n, with 0 < chi(1) <= sqrt(n) < P/2.
fn lift_degree(omega: &[u64], s: &ClassSet, sizes: &[u64], n: u64, p: u64) -> Result<u64> {
    let sum = (0..omega.len()).fold(0, |acc, j| {
        let term = mul_mod(mul_mod(omega[j], omega[s.inverse_class(j)], p), inv_mod(sizes[j] % p, p), p);
        (acc + term) % p
    });
    if sum == 0 {
        return Err(Error::InexactDivision("vanishing degree sum".into()));
    }
    let target = mul_mod(n % p, inv_mod(sum, p), p);
    (1..=n.sqrt())
        .find(|&d| d * d % p == target)
        .ok_or_else(|| Error::InexactDivision(format!("no degree with square {target} mod {p}")))
}

// Eigenvalue multiplicities of rho(g) on <g>, recovered mod P, give chi(g)
// as a sum of roots of unity.
#[allow(clippy::too_many_arguments)]
fn lift_value(
    g: &GroupTable,
    s: &ClassSet,
    ring: &CyclotomicRing,
    chi: &[u64],
    class: usize,
    degree: u64,
    root: u64,
    e: u64,
    p: u64,
) -> Result<CycInt> {
    let rep = s.classes[class].representative;
    let o = g.element_order(rep);
    let step = e / o;
    let root_o = pow_mod(root, step, p);
    let inv_o = inv_mod(o % p, p);
    let power_values: Vec<u64> = (0..o).map(|l| chi[s.class_of(g.pow(rep, l as i64))]).collect();
    let mut poly = vec![BigInt::from(0); e as usize];
    let mut total = 0;
    for t in 0..o {
        let inv_root_t = inv_mod(pow_mod(root_o, t, p), p);
        let mut acc = 0u64;
        let mut w = 1u64;
        for &v in &power_values {
            acc = (acc + mul_mod(v, w, p)) % p;
            w = mul_mod(w, inv_root_t, p);
        }
        let mult = mul_mod(acc, inv_o, p);
        if mult > degree {
            return Err(Error::InexactDivision(format!("multiplicity {mult} exceeds degree {degree}")));
        }
        total += mult;
        poly[(t * step) as usize] += mult;
    }
    if total != degree {
        return Err(Error::InexactDivision(format!("multiplicities sum to {total}, not {degree}")));
    }
    let value = ring.reduce(poly);
    if ring.eval_mod(&value, root, p) != chi[class] {
        return Err(Error::InexactDivision("lifted value disagrees mod P".into()));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{conjugacy_classes, make_group};
    use crate::reciprocity::real_complex_split;
    use crate::spec::parse_group_spec;

    fn table(spec: &str) -> (GroupTable, ClassSet, CharacterTable) {
        let g = make_group(&parse_group_spec(spec).unwrap()).unwrap();
        let s = conjugacy_classes(&g);
        let t = character_table(&g, &s, &real_complex_split(&s)).unwrap();
        (g, s, t)
    }

    fn ints(t: &CharacterTable) -> Vec<Vec<i64>> {
        t.entries
            .iter()
            .map(|row| row.iter().map(|x| x.as_integer().unwrap().try_into().unwrap()).collect())
            .collect()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(choose_prime(6, 6), 7);
        assert_eq!(choose_prime(60, 720), 61);
        assert_eq!(choose_prime(126, 504), 127);
        assert_eq!(choose_prime(1, 1), 3);
        assert_eq!(choose_prime(2, 16), 11);
    }

    #[test]
    fn kernel_basics() {
        // x + y = 0 over F_7
        let k = kernel(vec![vec![1, 1]], 2, 7);
        assert_eq!(k, vec![vec![6, 1]]);
        assert!(kernel(vec![vec![1, 0], vec![0, 1]], 2, 7).is_empty());
    }

    #[test]
    fn symmetric_three() {
        let (_, _, t) = table("sym:3");
        assert_eq!(ints(&t), vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]]);
    }

    #[test]
    fn cyclic_three() {
        let (_, _, t) = table("cyclic:3");
        let r = &t.ring;
        let z = r.zeta_pow(1);
        let z2 = r.zeta_pow(2);
        let mut rows = t.entries.clone();
        rows.sort_by(|a, b| a[1].coeffs.cmp(&b[1].coeffs));
        let expect = [
            vec![r.one(), z2.clone(), z.clone()],
            vec![r.one(), r.one(), r.one()],
            vec![r.one(), z.clone(), z2.clone()],
        ];
        let mut expect = expect.to_vec();
        expect.sort_by(|a, b| a[1].coeffs.cmp(&b[1].coeffs));
        assert_eq!(rows, expect);
        assert_eq!(t.entries[0], vec![r.one(), r.one(), r.one()]);
    }

    #[test]
    fn trivial_group() {
        let (_, _, t) = table("cyclic:1");
        assert_eq!(t.size(), 1);
        assert_eq!(t.entries[0][0], t.ring.one());
    }

    #[test]
    fn structure_of_small_tables() {
        for spec in ["q8", "dihedral:5", "alt:4", "sym:4", "sl2:4", "cyclic:3*dihedral:4", "abelian:2,2,2"] {
            let (g, _, t) = table(spec);
            t.check_structure(g.order()).unwrap_or_else(|e| panic!("{spec}: {e}"));
        }
    }

    #[test]
    fn reproducible_and_seed_independent() {
        let g = make_group(&parse_group_spec("sym:5").unwrap()).unwrap();
        let s = conjugacy_classes(&g);
        let split = real_complex_split(&s);
        let a = character_table(&g, &s, &split).unwrap();
        let b = character_table(&g, &s, &split).unwrap();
        let opts = TableOptions { seed: 99, ..TableOptions::default() };
        let c = character_table_with(&g, &s, &split, &opts).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn bounds() {
        let g = make_group(&parse_group_spec("cyclic:17").unwrap()).unwrap();
        let s = conjugacy_classes(&g);
        let err = character_table(&g, &s, &real_complex_split(&s)).unwrap_err();
        assert!(matches!(err, Error::TableBound(_)));
    }
}
