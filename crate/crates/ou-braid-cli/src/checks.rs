//! Seeded randomized property suites behind `ou-braid check`. Each suite
//! derives per-case seeds from the base seed, so a failure is reproducible
//! from the printed counterexample.

use num_traits::Zero;

use ou_braid::families;
use ou_braid::invariants::{det_of, random_rewrite};
use ou_braid::layers::layered_compose;
use ou_braid::warping;
use ou_braid::{IntMatrix, Permutation};

type SuiteResult = Result<(), String>;

/// Runs the named suite; `None` means the suite does not exist.
pub fn run_suite(suite: &str, seed: u64, cases: u64) -> Option<SuiteResult> {
    let runner: fn(u64) -> SuiteResult = match suite {
        "positive-invariance" => positive_invariance,
        "similarity" => similarity,
        "product-formula" => product_formula,
        "theorem1" => layered_determinant_product,
        "theorem2" => det_forces_warping,
        "pure-symmetry" => pure_symmetry,
        _ => return None,
    };
    for case in 0..cases {
        let case_seed = seed
            .wrapping_mul(0x9e3779b97f4a7c15)
            .wrapping_add(case.wrapping_mul(0x100000001b3));
        if let Err(detail) = runner(case_seed) {
            return Some(Err(format!("case {case} (seed {seed}): {detail}")));
        }
    }
    Some(Ok(()))
}

fn pick(seed: u64, lo: usize, hi: usize) -> usize {
    lo + (seed % (hi - lo + 1) as u64) as usize
}

fn positive_invariance(seed: u64) -> SuiteResult {
    let n = pick(seed, 2, 6);
    let word = families::random_positive(n, pick(seed >> 8, 2, 12), seed).map_err(fmt_err)?;
    let rewritten = random_rewrite(&word, 50, seed ^ 0x5bd1e995).map_err(fmt_err)?;
    for k in 0..3u64 {
        let pi = families::random_permutation(n, seed.wrapping_add(k));
        if word.ou_matrix(&pi) != rewritten.ou_matrix(&pi) {
            return Err(format!(
                "word `{word}` and rewrite `{rewritten}` differ at order {pi}"
            ));
        }
    }
    Ok(())
}

fn similarity(seed: u64) -> SuiteResult {
    let n = pick(seed, 2, 6);
    let word = families::random_braid(n, pick(seed >> 8, 0, 14), seed).map_err(fmt_err)?;
    let at_id = word.ou_matrix(&Permutation::identity(n)).map_err(fmt_err)?;
    let reference = (
        at_id.det(),
        at_id.rank(),
        at_id.charpoly(),
        canonical_lines(&at_id, false),
        canonical_lines(&at_id, true),
    );
    for k in 0..5u64 {
        let pi = families::random_permutation(n, seed.wrapping_add(k));
        let at_pi = word.ou_matrix(&pi).map_err(fmt_err)?;
        let probe = (
            at_pi.det(),
            at_pi.rank(),
            at_pi.charpoly(),
            canonical_lines(&at_pi, false),
            canonical_lines(&at_pi, true),
        );
        if probe != reference {
            return Err(format!("word `{word}` changes invariants at order {pi}"));
        }
    }
    Ok(())
}

fn product_formula(seed: u64) -> SuiteResult {
    let n = pick(seed, 2, 6);
    let first = families::random_braid(n, pick(seed >> 8, 0, 10), seed).map_err(fmt_err)?;
    let second =
        families::random_braid(n, pick(seed >> 16, 0, 10), seed ^ 0xdeadbeef).map_err(fmt_err)?;
    let pi = families::random_permutation(n, seed >> 4);
    let lhs = first
        .product(&second)
        .and_then(|p| p.ou_matrix(&pi))
        .map_err(fmt_err)?;
    let rho = first.braid_permutation();
    let rhs = first
        .ou_matrix(&pi)
        .and_then(|m| m.add(&second.ou_matrix(&pi.then(&rho)).map_err(fmt_err).unwrap()))
        .map_err(fmt_err)?;
    if lhs != rhs {
        return Err(format!("words `{first}` and `{second}` break the product formula"));
    }
    Ok(())
}

fn layered_determinant_product(seed: u64) -> SuiteResult {
    let n1 = pick(seed, 2, 4);
    let n2 = pick(seed >> 8, 2, 4);
    let first = families::random_braid(n1, pick(seed >> 16, 1, 8), seed).map_err(fmt_err)?;
    let second =
        families::random_braid(n2, pick(seed >> 24, 1, 8), seed ^ 0xabcdef).map_err(fmt_err)?;
    let order = families::random_permutation(n1 + n2, seed >> 4);
    let mut slots: Vec<usize> = order.image()[..n2].to_vec();
    slots.sort_unstable();
    let composite = layered_compose(&first, &second, &slots).map_err(fmt_err)?;
    if det_of(&composite) != det_of(&first) * det_of(&second) {
        return Err(format!(
            "composite of `{first}` and `{second}` at slots {slots:?} breaks determinant multiplicativity"
        ));
    }
    Ok(())
}

fn det_forces_warping(seed: u64) -> SuiteResult {
    let n = pick(seed, 2, 7);
    let word = families::random_braid(n, pick(seed >> 8, 0, 14), seed).map_err(fmt_err)?;
    if !det_of(&word).is_zero() && warping::wd_exact(&word, None).value == 0 {
        return Err(format!("word `{word}` has nonzero det but wd = 0"));
    }
    Ok(())
}

fn pure_symmetry(seed: u64) -> SuiteResult {
    let n = pick(seed, 2, 5);
    let word = families::random_positive_pure(n, pick(seed >> 8, 0, 10), seed).map_err(fmt_err)?;
    for k in 0..10u64 {
        let pi = families::random_permutation(n, seed.wrapping_add(k));
        if !word.ou_matrix(&pi).map_err(fmt_err)?.is_symmetric() {
            return Err(format!("pure word `{word}` has asymmetric matrix at order {pi}"));
        }
        if warping::objective(&word, &pi).map_err(fmt_err)? != word.len() as u64 / 2 {
            return Err(format!("pure word `{word}` has order-dependent objective at {pi}"));
        }
    }
    Ok(())
}

fn canonical_lines(m: &IntMatrix, columns: bool) -> Vec<Vec<num_bigint::BigInt>> {
    let n = m.n();
    let mut lines: Vec<Vec<num_bigint::BigInt>> = (0..n)
        .map(|i| {
            let mut line: Vec<num_bigint::BigInt> = (0..n)
                .map(|j| {
                    if columns {
                        m.entry(j, i).clone()
                    } else {
                        m.entry(i, j).clone()
                    }
                })
                .collect();
            line.sort();
            line
        })
        .collect();
    lines.sort();
    lines
}

fn fmt_err(e: ou_braid::Error) -> String {
    e.to_string()
}
