//! Layered structure of braid diagrams.
//!
//! A diagram is layered when its strands split into ordered groups such
//! that no strand of an earlier group ever passes under a strand of a later
//! group. The finest such decomposition comes from the strongly connected
//! components of the "under" digraph (edge i → j when s_i passes under s_j
//! somewhere), ordered against the direction of the cross-component edges.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::perm::Permutation;
use crate::word::BraidWord;

/// Directed graph on strand labels: edge i → j when wd(s_i, s_j) > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderDigraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl UnderDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i - 1].binary_search(&j).is_ok()
    }

    /// Successors of strand `i`, ascending.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.adj[i - 1]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, targets) in self.adj.iter().enumerate() {
            for &j in targets {
                edges.push((i + 1, j));
            }
        }
        edges
    }
}

/// An ordered partition of the strands into layers, with each layer
/// extracted as its own braid word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    /// Disjoint nonempty label sets covering 1..=n, each sorted ascending.
    pub layers: Vec<Vec<usize>>,
    /// One word per layer, on as many strands as the layer has.
    pub layer_words: Vec<BraidWord>,
}

impl LayerDecomposition {
    pub fn k(&self) -> usize {
        self.layers.len()
    }

    pub fn is_layered(&self) -> bool {
        self.layers.len() >= 2
    }

    pub fn is_completely_layered(&self) -> bool {
        self.is_layered() && self.layers.iter().all(|layer| layer.len() == 1)
    }
}

/// The upper-triangular block structure of a two-layer decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    pub m1: IntMatrix,
    /// The |S1| × |S2| upper-right coupling block.
    pub coupling: Vec<Vec<BigInt>>,
    pub m2: IntMatrix,
}

pub fn under_digraph(word: &BraidWord) -> UnderDigraph {
    let n = word.n();
    let counts = word.over_counts();
    let adj = (0..n)
        .map(|i| {
            (1..=n)
                .filter(|&j| j != i + 1 && counts[j - 1][i] > 0)
                .collect()
        })
        .collect();
    UnderDigraph { n, adj }
}

/// The finest layering: strongly connected components of the under
/// digraph, ordered so every cross-component under-edge points from a
/// later layer to an earlier one; incomparable components are ordered by
/// smallest contained label. A single layer means the diagram is not
/// layered.
pub fn finest_layering(word: &BraidWord) -> LayerDecomposition {
    let graph = under_digraph(word);
    let n = graph.n;
    let components = tarjan_scc(&graph);
    let comp_count = components.len();
    let mut comp_of = vec![0usize; n];
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }

    // Kahn's algorithm on the reversed condensation: a component becomes
    // ready once every component it has an under-edge into is placed.
    let mut out_degree = vec![0usize; comp_count];
    let mut rev_adj: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
    for (i, targets) in graph.adj.iter().enumerate() {
        for &j in targets {
            let (cu, cv) = (comp_of[i], comp_of[j - 1]);
            if cu != cv {
                rev_adj[cv].push(cu);
                out_degree[cu] += 1;
            }
        }
    }
    let min_label: Vec<usize> = components
        .iter()
        .map(|members| members.iter().min().expect("components are nonempty") + 1)
        .collect();
    let mut ready = std::collections::BinaryHeap::new();
    for c in 0..comp_count {
        if out_degree[c] == 0 {
            ready.push(std::cmp::Reverse((min_label[c], c)));
        }
    }
    let mut order = Vec::with_capacity(comp_count);
    while let Some(std::cmp::Reverse((_, c))) = ready.pop() {
        order.push(c);
        for &p in &rev_adj[c] {
            out_degree[p] -= 1;
            if out_degree[p] == 0 {
                ready.push(std::cmp::Reverse((min_label[p], p)));
            }
        }
    }
    debug_assert_eq!(order.len(), comp_count, "condensation must be acyclic");

    let layers: Vec<Vec<usize>> = order
        .into_iter()
        .map(|c| {
            let mut labels: Vec<usize> = components[c].iter().map(|&v| v + 1).collect();
            labels.sort_unstable();
            labels
        })
        .collect();
    let layer_words = layers
        .iter()
        .map(|layer| extract_layer(word, layer).expect("layers are valid strand sets"))
        .collect();
    LayerDecomposition {
        layers,
        layer_words,
    }
}

fn tarjan_scc(graph: &UnderDigraph) -> Vec<Vec<usize>> {
    struct State<'g> {
        graph: &'g UnderDigraph,
        index: usize,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        components: Vec<Vec<usize>>,
    }

    fn connect(v: usize, state: &mut State<'_>) {
        state.idx[v] = Some(state.index);
        state.low[v] = state.index;
        state.index += 1;
        state.stack.push(v);
        state.on_stack[v] = true;
        for &target in state.graph.successors(v + 1) {
            let w = target - 1;
            if state.idx[w].is_none() {
                connect(w, state);
                state.low[v] = state.low[v].min(state.low[w]);
            } else if state.on_stack[w] {
                state.low[v] = state.low[v].min(state.idx[w].expect("visited"));
            }
        }
        if state.low[v] == state.idx[v].expect("visited") {
            let mut component = Vec::new();
            loop {
                let w = state.stack.pop().expect("stack holds the component");
                state.on_stack[w] = false;
                component.push(w);
                if w == v {
                    break;
                }
            }
            state.components.push(component);
        }
    }

    let n = graph.n;
    let mut state = State {
        graph,
        index: 0,
        idx: vec![None; n],
        low: vec![0; n],
        stack: Vec::new(),
        on_stack: vec![false; n],
        components: Vec::new(),
    };
    for v in 0..n {
        if state.idx[v].is_none() {
            connect(v, &mut state);
        }
    }
    state.components
}

/// Restricts the diagram to the strands in `labels` (treated as a set):
/// crossings between two member strands survive, with generator indices
/// re-derived from the members' live positions.
pub fn extract_layer(word: &BraidWord, labels: &[usize]) -> Result<BraidWord> {
    let n = word.n();
    let mut member = vec![false; n + 1];
    let mut count = 0;
    for &s in labels {
        if s < 1 || s > n {
            return Err(Error::StrandOutOfRange { strand: s, n });
        }
        if !member[s] {
            member[s] = true;
            count += 1;
        }
    }
    if count == 0 {
        return Err(Error::EmptyStrandSet);
    }

    let mut positions: Vec<usize> = (1..=n).collect();
    let mut letters = Vec::new();
    for &g in word.letters() {
        let p = g.unsigned_abs() as usize;
        let left = positions[p - 1];
        let right = positions[p];
        if member[left] && member[right] {
            let rank = positions[..p - 1].iter().filter(|&&s| member[s]).count() + 1;
            letters.push(if g > 0 { rank as i32 } else { -(rank as i32) });
        }
        positions.swap(p - 1, p);
    }
    BraidWord::new(count, letters)
}

/// Stacks `first` beside `second` (its generators shifted right by
/// `first.n()`) and appends a shuffle block of negative letters that moves
/// each second-layer strand leftward to its assigned bottom slot; negative
/// letters keep the stationary first-layer strand on top, so every
/// cross-layer crossing has the second layer under. `slots2` lists the
/// bottom positions assigned to the second layer, strictly increasing.
pub fn layered_compose(
    first: &BraidWord,
    second: &BraidWord,
    slots2: &[usize],
) -> Result<BraidWord> {
    let n1 = first.n();
    let n2 = second.n();
    let n = n1 + n2;
    if slots2.len() != n2 {
        return Err(Error::BadInterleave(format!(
            "{} slots assigned to a {}-strand layer",
            slots2.len(),
            n2
        )));
    }
    for (k, &slot) in slots2.iter().enumerate() {
        if slot < 1 || slot > n {
            return Err(Error::BadInterleave(format!("slot {slot} out of range 1..={n}")));
        }
        if k > 0 && slots2[k - 1] >= slot {
            return Err(Error::BadInterleave(
                "slots must be strictly increasing".to_string(),
            ));
        }
    }

    let mut letters: Vec<i32> = first.letters().to_vec();
    for &g in second.letters() {
        let shifted = (g.unsigned_abs() as usize + n1) as i32;
        letters.push(if g > 0 { shifted } else { -shifted });
    }
    for (k, &slot) in slots2.iter().enumerate() {
        let from = n1 + k + 1;
        for p in (slot..from).rev() {
            letters.push(-(p as i32));
        }
    }
    BraidWord::new(n, letters)
}

/// Blocks of the OU matrix under the order that lists `s1`'s strands
/// (ascending) and then `s2`'s. Fails unless `s1`, `s2` partition the
/// strands and the lower-left block vanishes, i.e. (S1, S2) really is a
/// layering.
pub fn block_view(word: &BraidWord, s1: &[usize], s2: &[usize]) -> Result<BlockView> {
    let n = word.n();
    let mut assigned = vec![0u8; n + 1];
    for &s in s1 {
        if s < 1 || s > n {
            return Err(Error::StrandOutOfRange { strand: s, n });
        }
        assigned[s] |= 1;
    }
    for &s in s2 {
        if s < 1 || s > n {
            return Err(Error::StrandOutOfRange { strand: s, n });
        }
        assigned[s] |= 2;
    }
    if assigned[1..].iter().any(|&a| a == 0 || a == 3) {
        return Err(Error::BadParameter(
            "the two strand sets must partition 1..=n".to_string(),
        ));
    }
    let mut first: Vec<usize> = s1.to_vec();
    let mut second: Vec<usize> = s2.to_vec();
    first.sort_unstable();
    first.dedup();
    second.sort_unstable();
    second.dedup();
    if first.is_empty() || second.is_empty() {
        return Err(Error::EmptyStrandSet);
    }

    let mut image = first.clone();
    image.extend_from_slice(&second);
    let pi = Permutation::from_image(image).expect("partition orders are permutations");
    let m = word.ou_matrix(&pi)?;
    let k1 = first.len();
    for i in k1..n {
        for j in 0..k1 {
            if !num_traits::Zero::is_zero(m.entry(i, j)) {
                return Err(Error::NotALayering);
            }
        }
    }
    let m1 = IntMatrix::from_fn(k1, |i, j| m.entry(i, j).clone());
    let m2 = IntMatrix::from_fn(n - k1, |i, j| m.entry(k1 + i, k1 + j).clone());
    let coupling = (0..k1)
        .map(|i| (k1..n).map(|j| m.entry(i, j).clone()).collect())
        .collect();
    debug_assert_eq!(
        m1,
        extract_layer(word, &first)
            .and_then(|w| w.ou_matrix(&Permutation::identity(k1)))
            .expect("first layer extracts")
    );
    debug_assert_eq!(
        m2,
        extract_layer(word, &second)
            .and_then(|w| w.ou_matrix(&Permutation::identity(n - k1)))
            .expect("second layer extracts")
    );
    Ok(BlockView { m1, coupling, m2 })
}
