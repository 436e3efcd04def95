use std::cmp::Ordering;
use std::collections::VecDeque;

use num_integer::Integer;

use super::GroupTable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// The member with the smallest canonical encoding.
    pub representative: usize,
    /// Member indices, increasing.
    pub members: Vec<usize>,
    pub size: usize,
    pub centralizer_order: usize,
}

/// Conjugacy classes in canonical order: identity first, then the remaining
/// real classes, then complex classes with each one followed by its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSet {
    pub classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ClassSet {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn is_real(&self, class: usize) -> bool {
        self.inverse_class[class] == class
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

/// Sort key shared by real classes and complex pairs.
fn class_key<'a>(g: &'a GroupTable, c: &ConjugacyClass) -> (u64, usize, &'a [u32]) {
    (g.element_order(c.representative), c.size, g.encoding(c.representative))
}

pub fn conjugacy_classes(g: &GroupTable) -> ClassSet {
    let n = g.order();
    let mut raw_of = vec![usize::MAX; n];
    let mut raw: Vec<ConjugacyClass> = Vec::new();
    for start in 0..n {
        if raw_of[start] != usize::MAX {
            continue;
        }
        let id = raw.len();
        raw_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &h in g.generators() {
                let y = g.conjugate(x, h);
                if raw_of[y] == usize::MAX {
                    raw_of[y] = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        let representative = *members
            .iter()
            .min_by(|&&a, &&b| g.encoding(a).cmp(g.encoding(b)))
            .unwrap();
        let size = members.len();
        raw.push(ConjugacyClass { representative, members, size, centralizer_order: n / size });
    }

    let raw_inverse: Vec<usize> =
        raw.iter().map(|c| raw_of[g.inverse(c.representative)]).collect();

    let cmp = |a: usize, b: usize| -> Ordering { class_key(g, &raw[a]).cmp(&class_key(g, &raw[b])) };
    let mut real: Vec<usize> = (0..raw.len()).filter(|&c| raw_inverse[c] == c).collect();
    real.sort_by(|&a, &b| cmp(a, b));
    let mut pairs: Vec<(usize, usize)> = (0..raw.len())
        .filter(|&c| raw_inverse[c] != c && cmp(c, raw_inverse[c]) == Ordering::Less)
        .map(|c| (c, raw_inverse[c]))
        .collect();
    pairs.sort_by(|a, b| cmp(a.0, b.0));

    let order: Vec<usize> = real
        .into_iter()
        .chain(pairs.into_iter().flat_map(|(a, b)| [a, b]))
        .collect();
    let mut new_id = vec![0; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        new_id[old] = new;
    }
    let class_of = raw_of.iter().map(|&c| new_id[c]).collect();
    let inverse_class = order.iter().map(|&old| new_id[raw_inverse[old]]).collect();
    let mut slots: Vec<Option<ConjugacyClass>> = raw.into_iter().map(Some).collect();
    let classes = order.iter().map(|&old| slots[old].take().unwrap()).collect();
    ClassSet { classes, class_of, inverse_class }
}

/// The permutation of classes induced by `g -> g^a`, for `a` prime to `|G|`.
pub fn class_power_map(g: &GroupTable, s: &ClassSet, a: i64) -> Result<Vec<usize>> {
    let n = g.order() as i64;
    let a = a.rem_euclid(n);
    if a.gcd(&n) != 1 {
        return Err(Error::NotCoprime { a, modulus: n as u64 });
    }
    Ok(s.classes
        .iter()
        .map(|c| s.class_of(g.pow(c.representative, a)))
        .collect())
}

/// Sign of a permutation of `0..m`, via its cycle count.
pub fn permutation_parity(p: &[usize]) -> Result<i8> {
    let m = p.len();
    let mut seen = vec![false; m];
    let mut cycles = 0;
    for start in 0..m {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = *p.get(x).filter(|&&y| y < m).ok_or(Error::NotBijection(m))?;
        }
        if x != start {
            return Err(Error::NotBijection(m));
        }
    }
    Ok(if (m - cycles) % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::make_group;
    use crate::spec::parse_group_spec;

    fn classes_of(spec: &str) -> (GroupTable, ClassSet) {
        let g = make_group(&parse_group_spec(spec).unwrap()).unwrap();
        let s = conjugacy_classes(&g);
        (g, s)
    }

    #[test]
    fn symmetric_three() {
        let (g, s) = classes_of("sym:3");
        assert_eq!(s.sizes(), vec![1, 3, 2]);
        assert_eq!(g.element_order(s.classes[1].representative), 2);
        assert!((0..3).all(|c| s.is_real(c)));
    }

    #[test]
    fn class_counts() {
        assert_eq!(classes_of("sl2:4").1.num_classes(), 5);
        assert_eq!(classes_of("dihedral:4").1.num_classes(), 5);
        let (_, s) = classes_of("cyclic:7");
        assert_eq!(s.num_classes(), 7);
        assert!(s.sizes().iter().all(|&k| k == 1));
    }

    #[test]
    fn canonical_layout() {
        for spec in ["cyclic:12", "perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]", "q8", "alt:4"] {
            let (g, s) = classes_of(spec);
            assert_eq!(s.classes[0].members, vec![g.identity()]);
            let m = s.num_classes();
            let r1 = (0..m).filter(|&c| s.is_real(c)).count();
            assert!((0..r1).all(|c| s.is_real(c)));
            for c in (r1..m).step_by(2) {
                assert_eq!(s.inverse_class(c), c + 1);
                assert_eq!(s.inverse_class(c + 1), c);
            }
            for (c, class) in s.classes.iter().enumerate() {
                assert_eq!(class.size * class.centralizer_order, g.order());
                assert!(class.members.iter().all(|&x| s.class_of(x) == c));
            }
            assert_eq!(s.sizes().iter().sum::<usize>(), g.order());
        }
    }

    #[test]
    fn power_maps() {
        let (g, s) = classes_of("cyclic:5");
        // classes: {0}, {1}, {4}, {2}, {3}
        let p = class_power_map(&g, &s, 2).unwrap();
        let labels: Vec<u32> = s.classes.iter().map(|c| g.encoding(c.representative)[0]).collect();
        assert_eq!(labels, vec![0, 1, 4, 2, 3]);
        for (j, &img) in p.iter().enumerate() {
            assert_eq!(labels[img], labels[j] * 2 % 5);
        }
        assert_eq!(permutation_parity(&p), Ok(-1));

        let (g, s) = classes_of("cyclic:4");
        assert_eq!(class_power_map(&g, &s, 3).unwrap(), vec![0, 1, 3, 2]);
        assert_eq!(class_power_map(&g, &s, 1).unwrap(), vec![0, 1, 2, 3]);
        assert!(class_power_map(&g, &s, 2).is_err());
        assert_eq!(class_power_map(&g, &s, -1).unwrap(), vec![0, 1, 3, 2]);
    }

    #[test]
    fn parity() {
        assert_eq!(permutation_parity(&[0, 1, 2, 3]), Ok(1));
        assert_eq!(permutation_parity(&[]), Ok(1));
        assert_eq!(permutation_parity(&[1, 2, 3, 0]), Ok(-1));
        assert_eq!(permutation_parity(&[1, 0, 3, 2]), Ok(1));
        // (p-1)-cycle with p = 7
        assert_eq!(permutation_parity(&[1, 2, 3, 4, 5, 0]), Ok(-1));
        assert_eq!(permutation_parity(&[0, 0, 1]), Err(Error::NotBijection(3)));
        assert_eq!(permutation_parity(&[0, 5]), Err(Error::NotBijection(2)));
    }
}
