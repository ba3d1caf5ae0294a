//! k-subsets of `0..n` in lexicographic order, and a deterministic parallel
//! first-match search over them.

use rayon::prelude::*;

const CHUNK: usize = 4096;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Lexicographic k-combinations of `0..n`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// The first k-combination (in lexicographic order) accepted by `accept`,
/// with its 0-based rank. The result does not depend on thread scheduling.
pub fn find_first_combination<F>(n: usize, k: usize, accept: F) -> Option<(u128, Vec<usize>)>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let mut combos = Combinations::new(n, k);
    let mut offset: u128 = 0;
    loop {
        let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return None;
        }
        let hit = if chunk.len() < 64 {
            chunk.iter().position(|c| accept(c))
        } else {
            chunk.par_iter().position_first(|c| accept(c))
        };
        if let Some(pos) = hit {
            return Some((offset + pos as u128, chunk[pos].clone()));
        }
        offset += chunk.len() as u128;
    }
}
