//! Generators for the graph families used throughout the crate: cubes,
//! complete graphs, cycles, Cayley graphs of abelian and permutation groups,
//! slices of the cube, balanced-path graphs and truncated trees.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite piece of an infinite graph together with the vertices whose
/// radius-two ball is identical to the one in the infinite graph.
#[derive(Debug, Clone)]
pub struct Truncated {
    pub graph: Graph,
    pub interior: Vec<usize>,
}

fn param(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `{0,1}^n` under Hamming distance one; vertex `v` is the bit pattern of `v`.
pub fn hypercube(n: usize) -> Result<Graph> {
    param((1..=24).contains(&n), || {
        format!("hypercube dimension {n} not in 1..=24")
    })?;
    let adj = (0..1usize << n)
        .map(|v| {
            let mut nb: Vec<usize> = (0..n).map(|i| v ^ (1 << i)).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    Ok(Graph::from_adjacency(adj)?.with_name(format!("hypercube({n})")))
}

pub fn complete(n: usize) -> Result<Graph> {
    param(n >= 2, || format!("complete graph needs n >= 2, got {n}"))?;
    let adj = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
    Ok(Graph::from_adjacency(adj)?.with_name(format!("complete({n})")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    param(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    let adj = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
    Ok(Graph::from_adjacency(adj)?.with_name(format!("cycle({n})")))
}

/// Path on `n` vertices `0 − 1 − … − (n−1)`.
pub fn path(n: usize) -> Result<Graph> {
    param(n >= 2, || format!("path needs n >= 2, got {n}"))?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_name(format!("path({n})")))
}

/// Path as a truncation of the two-sided infinite path.
pub fn path_truncated(n: usize) -> Result<Truncated> {
    let graph = path(n)?;
    let interior = (2..n.saturating_sub(2)).collect();
    Ok(Truncated { graph, interior })
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("petersen").with_name("petersen")
}

/// Cayley graph data for `Z_{m_1} × … × Z_{m_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCayleySpec {
    pub orders: Vec<usize>,
    pub generators: Vec<Vec<i64>>,
}

impl AbelianCayleySpec {
    pub fn new(orders: Vec<usize>, generators: Vec<Vec<i64>>) -> Self {
        Self { orders, generators }
    }

    pub fn group_order(&self) -> usize {
        self.orders.iter().product()
    }

    /// Reduced, symmetrised, identity-free, deduplicated generator set.
    pub fn normalized_generators(&self) -> Result<Vec<Vec<usize>>> {
        param(!self.orders.is_empty() && self.orders.iter().all(|&m| m >= 1), || {
            format!("bad cyclic orders {:?}", self.orders)
        })?;
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in &self.generators {
            param(s.len() == self.orders.len(), || {
                format!("generator {s:?} has wrong arity for orders {:?}", self.orders)
            })?;
            let red: Vec<usize> = s
                .iter()
                .zip(&self.orders)
                .map(|(&a, &m)| a.rem_euclid(m as i64) as usize)
                .collect();
            if red.iter().all(|&a| a == 0) {
                continue;
            }
            let neg: Vec<usize> = red.iter().zip(&self.orders).map(|(&a, &m)| (m - a) % m).collect();
            for t in [red, neg] {
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Mixed-radix index, first coordinate least significant.
    fn encode(&self, elt: &[usize]) -> usize {
        elt.iter().zip(&self.orders).rev().fold(0, |acc, (&a, &m)| acc * m + a)
    }

    fn decode(&self, mut idx: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&m| {
                let a = idx % m;
                idx /= m;
                a
            })
            .collect()
    }
}

/// Cayley graph of a finite abelian group. Vertices are group elements in
/// mixed-radix order, so the unit-vector generators of `(Z_2)^n` reproduce
/// [`hypercube`] exactly.
pub fn abelian_cayley(spec: &AbelianCayleySpec) -> Result<Graph> {
    let gens = spec.normalized_generators()?;
    let order = spec.group_order();
    let adj: Vec<Vec<usize>> = (0..order)
        .map(|v| {
            let a = spec.decode(v);
            gens.iter()
                .map(|s| {
                    let b: Vec<usize> = a
                        .iter()
                        .zip(s)
                        .zip(&spec.orders)
                        .map(|((&x, &y), &m)| (x + y) % m)
                        .collect();
                    spec.encode(&b)
                })
                .collect()
        })
        .collect();
    if gens.is_empty() {
        return Err(Error::NotGenerating {
            reached: 1,
            expected: order,
        });
    }
    let g = Graph::from_adjacency(adj)?;
    let (label, _) = g.components();
    let reached = label.iter().filter(|&&c| c == label[0]).count();
    if reached != order {
        return Err(Error::NotGenerating {
            reached,
            expected: order,
        });
    }
    Ok(g.with_name(format!("abelian_cayley({:?}; {:?})", spec.orders, spec.generators)))
}

/// A permutation in one-line notation: `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermCayleySpec {
    pub n: usize,
    pub generators: Vec<Perm>,
    /// Order of the group the generators are claimed to produce; `None` means `n!`.
    pub expected_order: Option<usize>,
}

impl PermCayleySpec {
    pub fn new(n: usize, generators: Vec<Perm>) -> Self {
        Self {
            n,
            generators,
            expected_order: None,
        }
    }

    pub fn all_transpositions(n: usize) -> Self {
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                gens.push(transposition(n, i, j));
            }
        }
        Self::new(n, gens)
    }
}

pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
    let mut p: Perm = (0..n).collect();
    p.swap(i, j);
    p
}

/// The cycle `i ↦ i + 1 mod n`.
pub fn rotation(n: usize) -> Perm {
    (0..n).map(|i| (i + 1) % n).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// `s ∘ p`: apply `p` first, then `s`.
pub fn compose(s: &[usize], p: &[usize]) -> Perm {
    p.iter().map(|&i| s[i]).collect()
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Left Cayley graph of a permutation group: `φ ∼ s∘φ` for each generator `s`.
/// Returns the graph with its elements in breadth-first order from the identity.
pub fn perm_cayley_labeled(spec: &PermCayleySpec) -> Result<(Graph, Vec<Perm>)> {
    let n = spec.n;
    param(n >= 2, || format!("permutation degree {n} < 2"))?;
    let identity: Perm = (0..n).collect();
    let mut gens: Vec<Perm> = Vec::new();
    for s in &spec.generators {
        param(is_permutation(s, n), || format!("{s:?} is not a permutation of 0..{n}"))?;
        if *s == identity {
            continue;
        }
        for t in [s.clone(), inverse(s)] {
            if !gens.contains(&t) {
                gens.push(t);
            }
        }
    }
    let expected = spec.expected_order.unwrap_or_else(|| factorial(n));
    if gens.is_empty() {
        return Err(Error::NotGenerating { reached: 1, expected });
    }

    let mut index: HashMap<Perm, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut nb = Vec::with_capacity(gens.len());
        for s in &gens {
            let q = compose(s, &elements[i]);
            let j = *index.entry(q.clone()).or_insert_with(|| {
                elements.push(q);
                queue.push_back(elements.len() - 1);
                elements.len() - 1
            });
            nb.push(j);
        }
        if adj.len() <= i {
            adj.resize(i + 1, Vec::new());
        }
        adj[i] = nb;
    }
    if elements.len() != expected {
        return Err(Error::NotGenerating {
            reached: elements.len(),
            expected,
        });
    }
    let g = Graph::from_adjacency(adj)?;
    Ok((g, elements))
}

pub fn perm_cayley(spec: &PermCayleySpec) -> Result<Graph> {
    Ok(perm_cayley_labeled(spec)?
        .0
        .with_name(format!("perm_cayley(S_{})", spec.n)))
}

/// Cayley graph of `S_n` generated by the transposition of the first two
/// symbols and the full rotation and its inverse.
pub fn sn_special_labeled(n: usize) -> Result<(Graph, Vec<Perm>)> {
    param(n >= 3, || format!("sn_special needs n >= 3, got {n}"))?;
    let spec = PermCayleySpec::new(n, vec![transposition(n, 0, 1), rotation(n)]);
    perm_cayley_labeled(&spec)
}

pub fn sn_special(n: usize) -> Result<Graph> {
    Ok(sn_special_labeled(n)?.0.with_name(format!("sn_special({n})")))
}

/// Bit patterns of weight `k` in `{0,1}^n`, ascending.
pub fn slice_vertices(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|v| v.count_ones() as usize == k).collect()
}

/// Weight-`k` slice of the cube with an edge whenever two patterns differ in
/// exactly two coordinates.
pub fn slice(n: usize, k: usize) -> Result<Graph> {
    param(n <= 30 && 1 <= k && k < n, || {
        format!("slice needs 1 <= k < n <= 30, got n={n}, k={k}")
    })?;
    let verts = slice_vertices(n, k);
    let index: HashMap<u64, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj = verts
        .iter()
        .map(|&v| {
            let mut nb = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if v >> i & 1 == 1 && v >> j & 1 == 0 {
                        nb.push(index[&(v ^ (1 << i) ^ (1 << j))]);
                    }
                }
            }
            nb
        })
        .collect();
    Ok(Graph::from_adjacency(adj)?.with_name(format!("slice({n},{k})")))
}

/// Balanced `±1` sequences of length `2n`, lexicographic with `+1` first.
pub fn balanced_sequences(n: usize) -> Vec<Vec<i8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(2 * n);
    fn rec(cur: &mut Vec<i8>, plus: usize, minus: usize, out: &mut Vec<Vec<i8>>) {
        if plus == 0 && minus == 0 {
            out.push(cur.clone());
            return;
        }
        if plus > 0 {
            cur.push(1);
            rec(cur, plus - 1, minus, out);
            cur.pop();
        }
        if minus > 0 {
            cur.push(-1);
            rec(cur, plus, minus - 1, out);
            cur.pop();
        }
    }
    rec(&mut cur, n, n, &mut out);
    out
}

pub fn is_dyck(seq: &[i8]) -> bool {
    let mut h = 0i32;
    seq.iter().all(|&s| {
        h += s as i32;
        h >= 0
    }) && h == 0
}

fn adjacent_transposition_graph(verts: &[Vec<i8>]) -> Result<Graph> {
    let index: HashMap<&[i8], usize> = verts.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let adj = verts
        .iter()
        .map(|v| {
            let mut nb = Vec::new();
            for i in 0..v.len().saturating_sub(1) {
                if v[i] != v[i + 1] {
                    let mut w = v.clone();
                    w.swap(i, i + 1);
                    if let Some(&j) = index.get(w.as_slice()) {
                        nb.push(j);
                    }
                }
            }
            nb
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// Middle slice of `{±1}^{2n}` with adjacent transpositions; vertex labels
/// are [`balanced_sequences`]`(n)`.
pub fn middle_slice_adjacent(n: usize) -> Result<Graph> {
    param((1..=12).contains(&n), || {
        format!("middle slice needs 1 <= n <= 12, got {n}")
    })?;
    Ok(adjacent_transposition_graph(&balanced_sequences(n))?.with_name(format!("middle_slice_adjacent({n})")))
}

/// Dyck paths of semilength `n`, ascending in the same order as
/// [`balanced_sequences`].
pub fn dyck_paths(n: usize) -> Vec<Vec<i8>> {
    balanced_sequences(n).into_iter().filter(|s| is_dyck(s)).collect()
}

/// Subgraph of [`middle_slice_adjacent`] induced on Dyck paths. `n = 1` has a
/// single vertex and is rejected as an isolated vertex.
pub fn dyck(n: usize) -> Result<Graph> {
    param((1..=12).contains(&n), || format!("dyck needs 1 <= n <= 12, got {n}"))?;
    Ok(adjacent_transposition_graph(&dyck_paths(n))?.with_name(format!("dyck({n})")))
}

/// `d`-regular tree truncated at `depth`: the root has `d` children, every
/// other internal vertex `d − 1`. Vertices are in breadth-first order; the
/// interior is every vertex at depth `≤ depth − 2`.
pub fn tree(d: usize, depth: usize) -> Result<Truncated> {
    param(d >= 2 && depth >= 1, || {
        format!("tree needs d >= 2 and depth >= 1, got d={d}, depth={depth}")
    })?;
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next_id = 1;
    let mut interior = Vec::new();
    for lvl in 0..depth {
        if lvl + 2 <= depth {
            interior.extend(&level);
        }
        let mut next = Vec::new();
        for &v in &level {
            let kids = if lvl == 0 { d } else { d - 1 };
            for _ in 0..kids {
                edges.push((v, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        level = next;
    }
    let graph = Graph::from_edges(next_id, &edges)?.with_name(format!("tree({d},{depth})"));
    Ok(Truncated { graph, interior })
}
