use super::{check_rank_limit, ParabolicSet, Permutation};
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// Whether `w` lies in `W^J`, i.e. has no right descent in `J`.
pub fn is_min_coset_rep(w: &Permutation, j: &ParabolicSet) -> bool {
    j.iter().all(|i| w.at(i) < w.at(i + 1))
}

pub fn require_min_coset_rep(w: &Permutation, j: &ParabolicSet) -> Result<()> {
    if w.rank() != j.rank() {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: j.rank(),
        });
    }
    if !is_min_coset_rep(w, j) {
        return Err(Error::NotMinimal {
            w: w.to_string(),
            j: j.to_string(),
        });
    }
    Ok(())
}

/// Whether `w ∈ W_J`, i.e. its support lies in `J`.
pub fn in_parabolic_subgroup(w: &Permutation, j: &ParabolicSet) -> bool {
    w.support().is_subset(j)
}

/// The minimal-length element of the left coset `w W_J`: entries sorted
/// increasingly within each block of positions joined by `J`.
pub fn min_coset_rep(w: &Permutation, j: &ParabolicSet) -> Permutation {
    debug_assert_eq!(w.rank(), j.rank());
    let mut e = w.raw().to_vec();
    for (lo, hi) in j.position_blocks() {
        e[lo - 1..hi].sort_unstable();
    }
    Permutation::from_raw(e)
}

/// The longest element `w_{0,J}` of `W_J`: each block of positions reversed.
pub fn longest_element(j: &ParabolicSet) -> Permutation {
    let mut e: Vec<u8> = (1..=j.rank() as u8).collect();
    for (lo, hi) in j.position_blocks() {
        e[lo - 1..hi].reverse();
    }
    Permutation::from_raw(e)
}

/// All of `W^J`, in lexicographic order of one-line notation.
pub fn quotient(j: &ParabolicSet) -> Result<Vec<Permutation>> {
    let n = j.rank();
    check_rank_limit(n)?;
    let blocks = j.position_blocks();
    let mut out = Vec::new();
    let mut entries = vec![0u8; n];
    fill_blocks(&blocks, 0, u64::MAX >> (64 - n), n, &mut entries, &mut out);
    Ok(out)
}

// Assigns increasing value sets to each remaining position block.
fn fill_blocks(
    blocks: &[(usize, usize)],
    idx: usize,
    available: u64,
    n: usize,
    entries: &mut [u8],
    out: &mut Vec<Permutation>,
) {
    let Some(&(lo, hi)) = blocks.get(idx) else {
        out.push(Permutation::from_raw(entries.to_vec()));
        return;
    };
    let size = hi - lo + 1;
    let values: Vec<u8> = (1..=n as u8)
        .filter(|&v| available & (1 << (v - 1)) != 0)
        .collect();
    let mut chosen = Vec::with_capacity(size);
    choose(&values, size, 0, &mut chosen, &mut |combo| {
        let mut rest = available;
        for (k, &v) in combo.iter().enumerate() {
            entries[lo - 1 + k] = v;
            rest &= !(1 << (v - 1));
        }
        fill_blocks(blocks, idx + 1, rest, n, entries, out);
    });
}

fn choose(values: &[u8], size: usize, start: usize, chosen: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
    if chosen.len() == size {
        f(chosen);
        return;
    }
    let need = size - chosen.len();
    for k in start..=values.len() - need {
        chosen.push(values[k]);
        choose(values, size, k + 1, chosen, f);
        chosen.pop();
    }
}

/// `{x ∈ W^J : x ≤ w}`, lexicographically ordered.
pub fn lower_interval(w: &Permutation, j: &ParabolicSet) -> Result<Vec<Permutation>> {
    lower_interval_with(w, j, Execution::default())
}

pub fn lower_interval_with(
    w: &Permutation,
    j: &ParabolicSet,
    mode: Execution,
) -> Result<Vec<Permutation>> {
    require_min_coset_rep(w, j)?;
    let all = quotient(j)?;
    let target = w.raw();
    Ok(par::filter(mode, &all, |x| super::bruhat_leq_raw(x.raw(), target)))
}

/// Lower covers of `w` in the Bruhat order of `W^J`. These index the
/// Schubert divisors of `X_{wQ_J}`.
///
/// A cover of `w` in `W^J` has length `ℓ(w) - 1` and differs from `w` by a
/// reflection, so it is `w` with two positions `a < b` swapped where
/// `w_a > w_b` and no entry strictly between them positionally lies strictly
/// between them in value.
pub fn lower_covers(w: &Permutation, j: &ParabolicSet) -> Result<Vec<Permutation>> {
    require_min_coset_rep(w, j)?;
    let n = w.rank();
    let mut covers = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let (hi, lo) = (w.at(a), w.at(b));
            if hi < lo {
                continue;
            }
            if (a + 1..b).any(|c| w.at(c) > lo && w.at(c) < hi) {
                continue;
            }
            let tau = w.swap_positions(a, b);
            if is_min_coset_rep(&tau, j) {
                covers.push(tau);
            }
        }
    }
    covers.sort();
    Ok(covers)
}
