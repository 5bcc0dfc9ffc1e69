//! Standard Levi subgroups acting on Schubert varieties.
//!
//! A Levi `L_I` is given by its simple roots `I ⊆ Δ`. In `GL_n` it is block
//! diagonal, with blocks cut after every index in `I^c`. A Schubert variety
//! `X_{θQ_J}` is `L_I`-stable when every simple reflection `s_i`, `i ∈ I`,
//! maps its cell into it; the `L_I`-stable Schubert subvarieties of a fixed
//! `X_{τQ_J}` are its degree-1 heads, and `X_{τQ_J}` contains an `L_I`-orbit
//! exactly when it contains a head.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::GrassmannSchubert;
use crate::par::{self, Execution};
use crate::weyl::{self, ParabolicSet, Permutation};

/// Block structure of the standard Levi `L_I ⊆ GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviDescriptor {
    pub n: usize,
    pub levi: ParabolicSet,
    pub blocks: Vec<Vec<usize>>,
}

impl LeviDescriptor {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// Cuts `{1..n}` after each element of `I^c`.
pub fn blocks(levi: &ParabolicSet) -> LeviDescriptor {
    LeviDescriptor {
        n: levi.rank(),
        levi: *levi,
        blocks: levi
            .position_blocks()
            .into_iter()
            .map(|(lo, hi)| (lo..=hi).collect())
            .collect(),
    }
}

/// Whether `X_{θQ_J}` is stable under `L_I`: for each `i ∈ I`, the coset of
/// `s_i θ` is no longer than `θ`.
pub fn is_stable(theta: &Permutation, j: &ParabolicSet, levi: &ParabolicSet) -> Result<bool> {
    weyl::require_min_coset_rep(theta, j)?;
    check_levi_rank(theta, levi)?;
    Ok(is_stable_unchecked(theta, j, levi))
}

fn is_stable_unchecked(theta: &Permutation, j: &ParabolicSet, levi: &ParabolicSet) -> bool {
    let len = theta.length();
    levi.iter()
        .all(|i| weyl::min_coset_rep(&theta.left_simple(i), j).length() <= len)
}

fn check_levi_rank(w: &Permutation, levi: &ParabolicSet) -> Result<()> {
    if w.rank() != levi.rank() {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: levi.rank(),
        });
    }
    Ok(())
}

/// Whether `columns ∩ Block_k` is the top `|columns ∩ Block_k|` elements of
/// `Block_k` for every block of `L_I`.
pub fn top_of_every_block(columns: &[usize], levi: &ParabolicSet) -> bool {
    levi.position_blocks().into_iter().all(|(lo, hi)| {
        let inside: Vec<usize> = columns
            .iter()
            .copied()
            .filter(|v| (lo..=hi).contains(v))
            .collect();
        let c = inside.len();
        inside.iter().all(|&v| v > hi - c)
    })
}

/// Block criterion for Grassmannian heads: `θ ∈ S_n^d` indexes an
/// `L_I`-stable Schubert variety iff its column set is top-heavy in every
/// block of `L_I`.
pub fn is_degree1_head(theta: &Permutation, d: usize, levi: &ParabolicSet) -> Result<bool> {
    check_levi_rank(theta, levi)?;
    let x = GrassmannSchubert::new(theta.clone(), d)?;
    Ok(top_of_every_block(&x.column_set(), levi))
}

/// Degree-1 heads below a fixed element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeadReport {
    pub heads: Vec<Permutation>,
    pub minimal_head: Option<Permutation>,
    pub maximal_proper_heads: Vec<Permutation>,
}

impl HeadReport {
    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }
}

pub fn heads_below(tau: &Permutation, j: &ParabolicSet, levi: &ParabolicSet) -> Result<HeadReport> {
    heads_below_with(tau, j, levi, Execution::default())
}

/// Exhaustively enumerates `{θ ∈ W^J : θ ≤ τ, X_{θQ_J} is L_I-stable}`.
pub fn heads_below_with(
    tau: &Permutation,
    j: &ParabolicSet,
    levi: &ParabolicSet,
    mode: Execution,
) -> Result<HeadReport> {
    check_levi_rank(tau, levi)?;
    let below = weyl::lower_interval_with(tau, j, mode)?;
    let heads = par::filter(mode, &below, |theta| is_stable_unchecked(theta, j, levi));
    let minimal_head = heads
        .iter()
        .find(|m| heads.iter().all(|h| m.bruhat_leq(h).unwrap_or(false)))
        .cloned();
    let proper: Vec<Permutation> = heads.iter().filter(|h| *h != tau).cloned().collect();
    let maximal_proper_heads = maximal_elements(&proper);
    Ok(HeadReport {
        heads,
        minimal_head,
        maximal_proper_heads,
    })
}

/// Bruhat-maximal elements of `items`, in input order.
pub fn maximal_elements(items: &[Permutation]) -> Vec<Permutation> {
    let lengths: Vec<usize> = items.iter().map(Permutation::length).collect();
    items
        .iter()
        .enumerate()
        .filter(|&(k, x)| {
            !items.iter().enumerate().any(|(m, y)| {
                lengths[m] > lengths[k] && weyl::bruhat_leq_raw(x.raw(), y.raw())
            })
        })
        .map(|(_, x)| x.clone())
        .collect()
}

/// Whether `X_{τQ_J}` contains an `L_I`-orbit, i.e. some head lies below `τ`.
pub fn contains_l_orbit(tau: &Permutation, j: &ParabolicSet, levi: &ParabolicSet) -> Result<bool> {
    check_levi_rank(tau, levi)?;
    let below = weyl::lower_interval_with(tau, j, Execution::Sequential)?;
    Ok(below.iter().any(|theta| is_stable_unchecked(theta, j, levi)))
}

/// The `L_I`-orbit of the base point: `min_coset_rep(w_{0,I}, J)`.
pub fn minimal_head(j: &ParabolicSet, levi: &ParabolicSet) -> Result<Permutation> {
    if j.rank() != levi.rank() {
        return Err(Error::RankMismatch {
            left: j.rank(),
            right: levi.rank(),
        });
    }
    Ok(weyl::min_coset_rep(&weyl::longest_element(levi), j))
}

/// Simple roots of the Levi factor of the stabilizer of `X_{wQ_J}`.
pub fn l_max(w: &Permutation, j: &ParabolicSet) -> Result<ParabolicSet> {
    weyl::require_min_coset_rep(w, j)?;
    let n = w.rank();
    let mut set = ParabolicSet::empty(n);
    for i in 1..n {
        if is_stable_unchecked(w, j, &ParabolicSet::new(n, [i])?) {
            set.insert(i);
        }
    }
    Ok(set)
}

/// Maximal `L_I`-stable proper Schubert subvarieties of an `L_I`-stable
/// `X_{wQ_J}`; together they make up the complement of the open orbit of
/// the stabilizer.
pub fn boundary(w: &Permutation, j: &ParabolicSet, levi: &ParabolicSet) -> Result<Vec<Permutation>> {
    boundary_with(w, j, levi, Execution::default())
}

pub fn boundary_with(
    w: &Permutation,
    j: &ParabolicSet,
    levi: &ParabolicSet,
    mode: Execution,
) -> Result<Vec<Permutation>> {
    if !is_stable(w, j, levi)? {
        return Err(Error::NotStable {
            w: w.to_string(),
            levi: levi.to_string(),
        });
    }
    Ok(heads_below_with(w, j, levi, mode)?.maximal_proper_heads)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(n: usize, s: &str) -> ParabolicSet {
        ParabolicSet::parse(n, s).unwrap()
    }

    #[test]
    fn block_examples() {
        let b = blocks(&set(8, "1,3,4,7"));
        assert_eq!(b.blocks, vec![vec![1, 2], vec![3, 4, 5], vec![6], vec![7, 8]]);
        assert_eq!(b.block_count(), set(8, "1,3,4,7").complement().len() + 1);
        assert_eq!(blocks(&ParabolicSet::empty(3)).blocks, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(blocks(&set(3, "1,2")).blocks, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn stability_examples() {
        let full = ParabolicSet::empty(4);
        assert!(is_stable(&p("3,4,1,2"), &full, &set(4, "2")).unwrap());
        assert!(!is_stable(&p("2,4,1,3"), &full, &set(4, "2")).unwrap());
        assert!(is_stable(&p("2,1,3"), &set(3, "1"), &ParabolicSet::empty(3)).is_err());
    }

    #[test]
    fn identity_is_stable_iff_levi_inside_parabolic() {
        for n in 2..=5 {
            let id = Permutation::identity(n);
            for j in ParabolicSet::all_subsets(n) {
                for i in ParabolicSet::all_subsets(n) {
                    assert_eq!(is_stable(&id, &j, &i).unwrap(), i.is_subset(&j), "{j:?} {i:?}");
                }
            }
        }
    }

    #[test]
    fn head_criterion_examples() {
        let i = set(4, "1");
        assert!(is_degree1_head(&p("2,4,1,3"), 2, &i).unwrap());
        assert!(!is_degree1_head(&p("1,4,2,3"), 2, &i).unwrap());
        assert!(is_degree1_head(&p("3,4,1,2"), 2, &i).unwrap());
        assert!(is_degree1_head(&p("3,1,4,2"), 2, &i).is_err());
    }

    #[test]
    fn heads_of_3412() {
        let r = heads_below(&p("3,4,1,2"), &ParabolicSet::empty(4), &set(4, "2")).unwrap();
        for h in ["1,3,2,4", "1,4,3,2", "3,1,4,2", "3,2,1,4", "3,4,1,2"] {
            assert!(r.heads.contains(&p(h)), "missing {h}");
        }
        assert_eq!(r.minimal_head, Some(p("1,3,2,4")));
        let mut maximal = r.maximal_proper_heads.clone();
        maximal.sort();
        assert_eq!(maximal, vec![p("1,4,3,2"), p("3,1,4,2"), p("3,2,1,4")]);
    }

    #[test]
    fn heads_with_only_identity() {
        let j = ParabolicSet::maximal(6, 2).unwrap();
        let r = heads_below(&p("1,6,2,3,4,5"), &j, &set(6, "1,3,4,5")).unwrap();
        assert_eq!(r.heads, vec![Permutation::identity(6)]);
        assert_eq!(r.minimal_head, Some(Permutation::identity(6)));
    }

    #[test]
    fn heads_of_identity() {
        let j = set(4, "1,3");
        let r = heads_below(&Permutation::identity(4), &j, &set(4, "3")).unwrap();
        assert_eq!(r.heads, vec![Permutation::identity(4)]);
        assert!(r.maximal_proper_heads.is_empty());
    }

    #[test]
    fn orbit_containment_small() {
        let j = ParabolicSet::maximal(4, 2).unwrap();
        let i = set(4, "2,3");
        // heads in S_4^2 for I = {2,3} have column sets {1,4} and {3,4} and above
        assert!(!contains_l_orbit(&p("1,3,2,4"), &j, &i).unwrap());
        assert!(contains_l_orbit(&p("1,4,2,3"), &j, &i).unwrap());
        assert!(contains_l_orbit(&p("3,4,1,2"), &j, &i).unwrap());
    }

    #[test]
    fn minimal_head_examples() {
        let j = set(5, "1,3,4");
        assert!(minimal_head(&j, &set(5, "3,4")).unwrap().is_identity());
        let j6 = ParabolicSet::maximal(6, 2).unwrap();
        assert!(minimal_head(&j6, &set(6, "1,3,4,5")).unwrap().is_identity());
        assert_eq!(
            minimal_head(&ParabolicSet::empty(4), &set(4, "2")).unwrap(),
            p("1,3,2,4")
        );
    }

    #[test]
    fn l_max_examples() {
        assert_eq!(l_max(&p("3,4,1,2"), &ParabolicSet::empty(4)).unwrap(), set(4, "2"));
        assert_eq!(
            l_max(&Permutation::longest(5), &ParabolicSet::empty(5)).unwrap(),
            ParabolicSet::full(5)
        );
        let j = ParabolicSet::maximal(5, 2).unwrap();
        assert_eq!(l_max(&p("3,4,1,2,5"), &j).unwrap(), set(5, "1,2,3"));
    }

    #[test]
    fn boundary_examples() {
        let full = ParabolicSet::empty(4);
        let mut b = boundary(&p("3,4,1,2"), &full, &set(4, "2")).unwrap();
        b.sort();
        assert_eq!(b, vec![p("1,4,3,2"), p("3,1,4,2"), p("3,2,1,4")]);

        let m = minimal_head(&full, &set(4, "2")).unwrap();
        assert!(boundary(&m, &full, &set(4, "2")).unwrap().is_empty());

        let j = ParabolicSet::maximal(5, 2).unwrap();
        let w = p("3,4,1,2,5");
        let lm = l_max(&w, &j).unwrap();
        assert!(boundary(&w, &j, &lm).unwrap().is_empty());

        assert!(matches!(
            boundary(&p("2,4,1,3"), &full, &set(4, "2")),
            Err(Error::NotStable { .. })
        ));
    }
}
