//! Finite groups given by validated multiplication tables.
//!
//! Elements are indices `0..order`. `table[a][b]` is the product `a·b`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table exhaustively and builds the group.
    /// Names default to `g0, g1, ...` when `names` is `None`.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Group("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Group(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Group(format!("row {i} contains out-of-range entry {bad}")));
            }
        }
        let names = match names {
            Some(v) if v.len() != n => {
                return Err(Error::Group(format!("{} names for {n} elements", v.len())))
            }
            Some(v) => v,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Group("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Group(format!("no inverse for element {a}")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::Group(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverse,
        })
    }

    /// Cyclic group ℤ/n with elements `e, a, a2, ...` (index k is `a^k`).
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Group("cyclic group of order 0".into()));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let names = (0..n).map(|k| power_name("a", k)).collect();
        Self::from_table(table, Some(names))
    }

    /// Dihedral group of order 2n: indices `0..n` are `r^k`, indices `n..2n`
    /// are `s r^k`, with `r s = s r^{-1}`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Group("dihedral group with n = 0".into()));
        }
        let decode = |x: usize| (x / n, x % n);
        let table = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (a, b) = decode(x);
                        let (c, d) = decode(y);
                        let b2 = if c == 1 { (n - b) % n } else { b };
                        ((a + c) % 2) * n + (b2 + d) % n
                    })
                    .collect()
            })
            .collect();
        let names = (0..2 * n)
            .map(|x| {
                let (a, b) = decode(x);
                match (a, b) {
                    (0, _) => power_name("r", b),
                    (_, 0) => "s".to_string(),
                    _ => format!("s{}", power_name("r", b)),
                }
            })
            .collect();
        Self::from_table(table, Some(names))
    }

    /// Symmetric group on `n <= 5` letters. Elements are permutations in
    /// lexicographic order of one-line notation; `(σ·τ)(k) = σ(τ(k))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::Group(format!("symmetric group on {n} letters not supported")));
        }
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&k| s[k]).collect()))
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        Self::from_table(table, Some(names))
    }

    /// ℤ/2 × ℤ/2 with elements `e, a, b, ab`.
    pub fn klein_four() -> Result<Self> {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let names = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        Self::from_table(table, Some(names))
    }

    /// Direct product with lexicographically ordered pairs `(g, h)`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let (m, n) = (g.order(), h.order());
        let table = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n))
                    .collect()
            })
            .collect();
        let names = (0..m * n)
            .map(|x| format!("({},{})", g.name(x / n), h.name(x % n)))
            .collect();
        Self::from_table(table, Some(names))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
    /// `x g x^{-1}`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inverse[x])
    }
    /// Ordered product of a word, the identity for the empty word.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }
    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}{k}"),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            out.push_str(&(k + 1).to_string());
            k = p[k];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_tables() {
        let g = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(g.table(), &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn missing_inverse_is_reported() {
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert_eq!(err, Error::Group("no inverse for element 1".into()));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A Latin square with identity 0 that is not a group table.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(t, None).unwrap_err();
        assert!(matches!(err, Error::Group(m) if m.starts_with("not associative")));
    }

    #[test]
    fn symmetric_three_conjugation() {
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        let t12 = g.index_of("(12)").unwrap();
        let t13 = g.index_of("(13)").unwrap();
        let t23 = g.index_of("(23)").unwrap();
        assert_eq!(g.conjugate(t12, t13), t23);
        let involutions = (0..6).filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(involutions, 3);
    }

    #[test]
    fn dihedral_relations() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let (r, s) = (g.index_of("r").unwrap(), g.index_of("s").unwrap());
        assert_eq!(g.element_order(r), 3);
        assert_eq!(g.element_order(s), 2);
        assert_eq!(g.mul(r, s), g.mul(s, g.inv(r)));
    }

    #[test]
    fn klein_and_products() {
        let v = FiniteGroup::klein_four().unwrap();
        assert!((1..4).all(|a| v.element_order(a) == 2));
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let p = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(p.table(), v.table());
    }
}
