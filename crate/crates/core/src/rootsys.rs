//! Root systems of complex simple Lie algebras.
//!
//! Roots are integer vectors in the basis of simple roots. Cartan matrix
//! entries follow `a_ij = 2(α_i, α_j) / (α_j, α_j)`, so a double or triple
//! bond `i - j` has `|a_ij| > 1` exactly when `α_i` is the long root; arrows
//! point from the long root toward the short one. Node numbering is Bourbaki's.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A complex simple Lie algebra, identified by family and rank.
///
/// `D` needs rank at least 3 (`D2` is `A1+A1`, callers normalize it); `B1` and
/// `C1` are rejected in favour of `A1`. `D3` and `C2` are accepted, but diagram
/// classification always reports them as `A3` and `B2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// All valid types of rank at most `max_rank`, in family order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        use Family::*;
        let mut out = Vec::new();
        for family in [A, B, C, D, E, F, G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // α_n short
                link(n - 2, n - 1, -2, -1);
            }
            Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // α_n long
                link(n - 2, n - 1, -1, -2);
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                // 1-3-4-5-...-n, with 2 attached to 4
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::G => {
                // α_1 short, α_2 long
                link(0, 1, -1, -3);
            }
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Positive roots of a simple type, simple roots first, sorted by height.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn contains(&self, root: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r.as_slice() == root)
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots
            .iter()
            .max_by_key(|r| height(r))
            .expect("root system has at least one root")
    }

    /// Number of positive roots at each height `1, 2, ...`.
    pub fn height_counts(&self) -> Vec<usize> {
        let max = self
            .positive_roots
            .iter()
            .map(|r| height(r))
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; max as usize];
        for r in &self.positive_roots {
            counts[height(r) as usize - 1] += 1;
        }
        counts
    }

    /// Twice the invariant inner product of two roots given in the simple-root
    /// basis, normalized so every root length is a positive integer.
    pub fn doubled_inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let lens = simple_root_lengths(&self.cartan_matrix);
        x.iter()
            .zip(&self.cartan_matrix)
            .map(|(xi, row)| {
                let inner: i64 = row
                    .iter()
                    .zip(y)
                    .zip(&lens)
                    .map(|((a, yj), l)| a * yj * l)
                    .sum();
                xi * inner
            })
            .sum()
    }
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// Squared lengths of the simple roots up to a common scale, from the ratios
/// `(α_i, α_i) / (α_j, α_j) = a_ij / a_ji`. The shortest root gets the smallest value.
fn simple_root_lengths(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // 6 absorbs both factor-2 and factor-3 ratios
    let mut lens = vec![0i64; n];
    if n == 0 {
        return lens;
    }
    lens[0] = 6;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && lens[j] == 0 {
                // len_j = len_i * a_ji / a_ij
                lens[j] = lens[i] * cartan[j][i] / cartan[i][j];
                stack.push(j);
            }
        }
    }
    let g = lens.iter().fold(0, |g, &x| gcd(g, x));
    lens.iter().map(|&x| x / g).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Generates all positive roots from the Cartan matrix.
///
/// Works height by height: for a root β and simple root α_i, the α_i-string
/// through β is `β - pα_i, ..., β + qα_i` with `p - q = <β, α_i^∨>`, and
/// `β + α_i` is a root iff `q > 0`.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    let cartan = t.cartan_matrix();
    let positive_roots = close_roots(&cartan);
    RootSystem {
        simple_type: t,
        cartan_matrix: cartan,
        positive_roots,
    }
}

fn close_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut layer_start = 0;
    loop {
        let layer_end = roots.len();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for k in layer_start..layer_end {
            let beta = roots[k].clone();
            for i in 0..n {
                // p: how far the string extends downward
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !roots[..layer_end].contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        layer_start = layer_end;
        roots.extend(next);
    }
    roots
}

pub fn dimension(t: SimpleType) -> usize {
    t.rank() + 2 * build_root_system(t).positive_roots.len()
}

/// Degrees of the fundamental Weyl-group invariants, ascending.
///
/// The exponents are the parts of the partition conjugate to the sequence of
/// root counts per height; each degree is an exponent plus one.
pub fn degrees(t: SimpleType) -> Vec<u32> {
    let counts = build_root_system(t).height_counts();
    let mut out: Vec<u32> = (1..=t.rank())
        .map(|k| counts.iter().filter(|&&c| c >= k).count() as u32 + 1)
        .collect();
    out.sort_unstable();
    out
}

/// A bond between two diagram nodes (indices into `DynkinDiagram::nodes`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    /// `a_ij * a_ji`: 1, 2, 3, or 4 for the affine `A1` diagram.
    pub multiplicity: u8,
    /// `(long, short)` for multiple bonds; `None` for simple and symmetric bonds.
    pub arrow: Option<(usize, usize)>,
}

/// A (possibly affine) Dynkin diagram backed by its generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    /// Node labels; simple roots are `1..=rank`, the affine node is `0`.
    pub nodes: Vec<usize>,
    pub cartan: Vec<Vec<i64>>,
    /// Index into `nodes` of the node added for the lowest root.
    pub affine_node: Option<usize>,
}

impl DynkinDiagram {
    pub fn of(t: SimpleType) -> Self {
        DynkinDiagram {
            nodes: (1..=t.rank()).collect(),
            cartan: t.cartan_matrix(),
            affine_node: None,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (aij, aji) = (self.cartan[i][j], self.cartan[j][i]);
                if aij == 0 {
                    continue;
                }
                let arrow = match aij.cmp(&aji) {
                    std::cmp::Ordering::Less => Some((i, j)),
                    std::cmp::Ordering::Greater => Some((j, i)),
                    std::cmp::Ordering::Equal => None,
                };
                out.push(Edge {
                    i,
                    j,
                    multiplicity: (aij * aji) as u8,
                    arrow,
                });
            }
        }
        out
    }

    /// The full subdiagram on the nodes at `keep` (indices, in order).
    pub fn induced(&self, keep: &[usize]) -> DynkinDiagram {
        DynkinDiagram {
            nodes: keep.iter().map(|&i| self.nodes[i]).collect(),
            cartan: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.cartan[i][j]).collect())
                .collect(),
            affine_node: self
                .affine_node
                .and_then(|a| keep.iter().position(|&i| i == a)),
        }
    }

    pub fn remove_nodes(&self, removed: &[usize]) -> DynkinDiagram {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !removed.contains(i)).collect();
        self.induced(&keep)
    }

    pub fn components(&self) -> Vec<DynkinDiagram> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for (j, s) in seen.iter_mut().enumerate() {
                    if !*s && self.cartan[i][j] != 0 {
                        *s = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(self.induced(&comp));
        }
        out
    }

    /// Identifies a connected diagram of finite type. `B2` is returned for the
    /// rank-2 double bond regardless of orientation.
    pub fn classify(&self) -> Option<SimpleType> {
        let n = self.len();
        if n == 0 || self.components().len() != 1 {
            return None;
        }
        if n == 1 {
            return SimpleType::new(Family::A, 1).ok();
        }
        let edges = self.edges();
        if edges.len() != n - 1 {
            return None;
        }
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.i] += 1;
            degree[e.j] += 1;
        }
        let multiple: Vec<&Edge> = edges.iter().filter(|e| e.multiplicity > 1).collect();
        let build = |f, r| SimpleType::new(f, r).ok();
        if multiple.iter().any(|e| e.multiplicity >= 4) || multiple.len() > 1 {
            return None;
        }
        if let Some(e) = multiple.first() {
            if degree.iter().any(|&d| d > 2) {
                return None;
            }
            if e.multiplicity == 3 {
                return if n == 2 { build(Family::G, 2) } else { None };
            }
            if n == 2 {
                return build(Family::B, 2);
            }
            let (long, short) = e.arrow.expect("double bond has an arrow");
            let leaf_short = degree[short] == 1;
            let leaf_long = degree[long] == 1;
            if leaf_short {
                return build(Family::B, n);
            }
            if leaf_long {
                return build(Family::C, n);
            }
            return if n == 4 { build(Family::F, 4) } else { None };
        }
        let branches: Vec<usize> = (0..n).filter(|&i| degree[i] >= 3).collect();
        match branches.as_slice() {
            [] => build(Family::A, n),
            [b] if degree[*b] == 3 => {
                let mut arms: Vec<usize> = (0..n)
                    .filter(|&j| j != *b && self.cartan[*b][j] != 0)
                    .map(|j| self.arm_length(*b, j))
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, k] => build(Family::D, k + 3),
                    [1, 2, 2] => build(Family::E, 6),
                    [1, 2, 3] => build(Family::E, 7),
                    [1, 2, 4] => build(Family::E, 8),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn arm_length(&self, from: usize, first: usize) -> usize {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        loop {
            let next = (0..self.len()).find(|&j| j != prev && j != cur && self.cartan[cur][j] != 0);
            match next {
                Some(j) => {
                    prev = cur;
                    cur = j;
                    len += 1;
                }
                None => return len,
            }
        }
    }
}

/// The affine Dynkin diagram: the diagram of `t` plus a node for the lowest
/// root `-θ`, attached according to its pairings with the simple roots.
pub fn extended_diagram(t: SimpleType) -> DynkinDiagram {
    let rs = build_root_system(t);
    let n = t.rank();
    let theta = rs.highest_root().to_vec();
    let lens = simple_root_lengths(&rs.cartan_matrix);
    let theta_len = rs.doubled_inner(&theta, &theta) / 2;
    let mut cartan = vec![vec![0i64; n + 1]; n + 1];
    cartan[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            cartan[i + 1][j + 1] = rs.cartan_matrix[i][j];
        }
        let mut e = vec![0; n];
        e[i] = 1;
        // doubled inner product of α_i with -θ
        let b = -rs.doubled_inner(&e, &theta);
        cartan[0][i + 1] = b / lens[i];
        cartan[i + 1][0] = b / theta_len;
    }
    DynkinDiagram {
        nodes: (0..=n).collect(),
        cartan,
        affine_node: Some(0),
    }
}
