//! Warping degree as a linear ordering problem.
//!
//! For a strand order π the objective f_B(π) sums the OU-matrix entries
//! below the main diagonal; wd(B) is its minimum over all π. The exact
//! solver runs branch and bound over prefixes of strand orders: the
//! committed cost of a prefix counts every under-crossing already decided
//! (placed strand under any strand ordered after it), and the remainder is
//! bounded below by the pairwise minima of the unplaced strands.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::BraidWord;

/// A warping-degree value together with a witness order. `exact` is set
/// only when the search provably minimized over all orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WdResult {
    pub value: u64,
    pub order: Permutation,
    pub exact: bool,
}

/// f_B(π): the sum of the OU-matrix entries below the main diagonal, which
/// equals wd(B_s) for the strand sequence s associated to π.
pub fn objective(word: &BraidWord, pi: &Permutation) -> Result<u64> {
    if pi.n() != word.n() {
        return Err(Error::SizeMismatch(pi.n(), word.n()));
    }
    let counts = word.over_counts();
    let order: Vec<usize> = pi.image().iter().map(|&v| v - 1).collect();
    Ok(objective_from_counts(&counts, &order))
}

fn objective_from_counts(counts: &[Vec<u64>], order: &[usize]) -> u64 {
    let mut total = 0;
    for i in 0..order.len() {
        for j in 0..i {
            total += counts[order[i]][order[j]];
        }
    }
    total
}

/// Σ_{i<j} min(m_ij, m_ji) at the identity order: every unordered pair
/// contributes at least its smaller side under any order, so this bounds
/// wd(B) from below.
pub fn pair_lower_bound(word: &BraidWord) -> u64 {
    let counts = word.over_counts();
    pair_min_sum(&counts, &(0..word.n()).collect::<Vec<_>>())
}

fn pair_min_sum(counts: &[Vec<u64>], strands: &[usize]) -> u64 {
    let mut total = 0;
    for (a, &u) in strands.iter().enumerate() {
        for &v in &strands[a + 1..] {
            total += counts[u][v].min(counts[v][u]);
        }
    }
    total
}

struct Search<'a> {
    counts: &'a [Vec<u64>],
    n: usize,
    prefix: Vec<usize>,
    unplaced: Vec<bool>,
    best_value: u64,
    best_order: Vec<usize>,
    nodes_left: Option<u64>,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(counts: &'a [Vec<u64>], budget: Option<u64>, seed_value: u64, seed_order: Vec<usize>) -> Self {
        let n = counts.len();
        Search {
            counts,
            n,
            prefix: Vec::with_capacity(n),
            unplaced: vec![true; n],
            best_value: seed_value,
            best_order: seed_order,
            nodes_left: budget,
            exhausted: false,
        }
    }

    fn charge_node(&mut self) -> bool {
        match &mut self.nodes_left {
            Some(0) => {
                self.exhausted = true;
                false
            }
            Some(left) => {
                *left -= 1;
                true
            }
            None => true,
        }
    }

    /// `committed` counts all decided under-crossings of the prefix;
    /// `remainder_bound` is the pairwise-min bound over unplaced strands.
    fn descend(&mut self, committed: u64, remainder_bound: u64) {
        if committed + remainder_bound >= self.best_value {
            return;
        }
        if self.prefix.len() == self.n {
            self.best_value = committed;
            self.best_order = self.prefix.clone();
            return;
        }
        for v in 0..self.n {
            if !self.unplaced[v] {
                continue;
            }
            if !self.charge_node() {
                return;
            }
            self.unplaced[v] = false;
            let mut added = 0;
            let mut bound_drop = 0;
            for w in 0..self.n {
                if self.unplaced[w] {
                    // v now precedes w: v's under-crossings against w are decided.
                    added += self.counts[w][v];
                    bound_drop += self.counts[v][w].min(self.counts[w][v]);
                }
            }
            self.prefix.push(v);
            self.descend(committed + added, remainder_bound - bound_drop);
            self.prefix.pop();
            self.unplaced[v] = true;
            if self.exhausted {
                return;
            }
        }
    }
}

fn run_search(
    counts: &[Vec<u64>],
    budget: Option<u64>,
    seed_value: u64,
    seed_order: Vec<usize>,
    first: Option<usize>,
) -> (u64, Vec<usize>, bool) {
    let mut search = Search::new(counts, budget, seed_value, seed_order);
    let root_bound = pair_min_sum(counts, &(0..counts.len()).collect::<Vec<_>>());
    match first {
        Some(v) => {
            search.unplaced[v] = false;
            let mut added = 0;
            let mut bound_drop = 0;
            for w in 0..search.n {
                if search.unplaced[w] {
                    added += counts[w][v];
                    bound_drop += counts[v][w].min(counts[w][v]);
                }
            }
            search.prefix.push(v);
            search.descend(added, root_bound - bound_drop);
        }
        None => search.descend(0, root_bound),
    }
    (search.best_value, search.best_order, !search.exhausted)
}

/// Exact warping degree by branch and bound. With a `node_budget`, the
/// search stops once that many nodes have been expanded and returns the
/// best order seen with `exact = false`.
pub fn wd_exact(word: &BraidWord, node_budget: Option<u64>) -> WdResult {
    wd_exact_with_threads(word, node_budget, 1)
}

/// Like [`wd_exact`], optionally distributing the first-level branches over
/// up to `threads` worker threads. The result is identical to the
/// sequential search: branches are solved independently and merged in
/// branch order, so tie-breaking cannot depend on scheduling. A budgeted
/// search always runs sequentially to keep its semantics exact.
pub fn wd_exact_with_threads(word: &BraidWord, node_budget: Option<u64>, threads: usize) -> WdResult {
    let n = word.n();
    let counts = word.over_counts();
    let id_order: Vec<usize> = (0..n).collect();
    let seed_value = objective_from_counts(&counts, &id_order);

    if threads <= 1 || node_budget.is_some() || n <= 2 {
        let (value, order, complete) = run_search(&counts, node_budget, seed_value, id_order, None);
        return wd_result(value, order, complete);
    }

    let mut results: Vec<Option<(u64, Vec<usize>)>> = vec![None; n];
    let workers = threads.min(n);
    std::thread::scope(|scope| {
        let counts = &counts;
        let mut handles = Vec::new();
        for worker in 0..workers {
            let id_order = id_order.clone();
            handles.push(scope.spawn(move || {
                let mut local = Vec::new();
                let mut branch = worker;
                while branch < n {
                    let (value, order, complete) =
                        run_search(counts, None, seed_value, id_order.clone(), Some(branch));
                    debug_assert!(complete);
                    local.push((branch, value, order));
                    branch += workers;
                }
                local
            }));
        }
        for handle in handles {
            for (branch, value, order) in handle.join().expect("search worker panicked") {
                results[branch] = Some((value, order));
            }
        }
    });

    let mut best_value = seed_value;
    let mut best_order = id_order;
    for (value, order) in results.into_iter().flatten() {
        if value < best_value {
            best_value = value;
            best_order = order;
        }
    }
    wd_result(best_value, best_order, true)
}

fn wd_result(value: u64, order: Vec<usize>, exact: bool) -> WdResult {
    let image = order.into_iter().map(|v| v + 1).collect();
    WdResult {
        value,
        order: Permutation::from_image(image).expect("search orders are permutations"),
        exact,
    }
}

/// Greedy construction plus first-improvement insertion local search, with
/// three seeded random restarts through the same local search; ties prefer
/// the earlier pass, so the result is deterministic per seed.
pub fn wd_heuristic(word: &BraidWord, seed: u64) -> WdResult {
    let n = word.n();
    let counts = word.over_counts();

    // Greedy: append the strand whose remaining under-crossings against the
    // unplaced strands are fewest, smallest label on ties.
    let mut order = Vec::with_capacity(n);
    let mut unplaced = vec![true; n];
    for _ in 0..n {
        let mut pick = None;
        for v in 0..n {
            if !unplaced[v] {
                continue;
            }
            let cost: u64 = (0..n)
                .filter(|&w| unplaced[w] && w != v)
                .map(|w| counts[w][v])
                .sum();
            match pick {
                Some((best_cost, _)) if cost >= best_cost => {}
                _ => pick = Some((cost, v)),
            }
        }
        let (_, v) = pick.expect("some strand is unplaced");
        unplaced[v] = false;
        order.push(v);
    }
    local_search(&counts, &mut order);
    let mut best_value = objective_from_counts(&counts, &order);
    let mut best_order = order;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let mut candidate: Vec<usize> = (0..n).collect();
        candidate.shuffle(&mut rng);
        local_search(&counts, &mut candidate);
        let value = objective_from_counts(&counts, &candidate);
        if value < best_value {
            best_value = value;
            best_order = candidate;
        }
    }

    wd_result(best_value, best_order, false)
}

/// First-improvement relocation: move one strand to another position; the
/// scan restarts after every improving move until none applies.
fn local_search(counts: &[Vec<u64>], order: &mut Vec<usize>) {
    let n = order.len();
    'improved: loop {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let x = order[i];
                // Relocating x across the segment between i and j flips its
                // relative order with exactly the segment's strands.
                let mut delta: i64 = 0;
                if j > i {
                    for &y in &order[i + 1..=j] {
                        delta += counts[x][y] as i64 - counts[y][x] as i64;
                    }
                } else {
                    for &y in &order[j..i] {
                        delta += counts[y][x] as i64 - counts[x][y] as i64;
                    }
                }
                if delta < 0 {
                    let x = order.remove(i);
                    order.insert(j, x);
                    continue 'improved;
                }
            }
        }
        return;
    }
}
