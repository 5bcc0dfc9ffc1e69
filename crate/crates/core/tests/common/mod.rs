//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library; everything is recomputed from definitions.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Perm = Vec<usize>;
pub type Cols = Vec<usize>;

pub fn permutations(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Perm, left: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..left.len() {
            let x = left.remove(k);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

pub fn length(w: &[usize]) -> usize {
    let mut inv = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                inv += 1;
            }
        }
    }
    inv
}

pub fn inverse(w: &[usize]) -> Perm {
    let mut inv = vec![0; w.len()];
    for (pos, &v) in w.iter().enumerate() {
        inv[v - 1] = pos + 1;
    }
    inv
}

/// `(a∘b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x - 1]).collect()
}

/// Tableau criterion: every sorted prefix of `u` is dominated by that of `w`.
pub fn bruhat(u: &[usize], w: &[usize]) -> bool {
    (1..=u.len()).all(|k| {
        let mut a = u[..k].to_vec();
        let mut b = w[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

/// Bruhat order as subword containment, from a reduced word of `w`.
pub fn bruhat_subword(u: &[usize], w: &[usize]) -> bool {
    let n = w.len();
    let mut word = Vec::new();
    let mut x = w.to_vec();
    // bubble sort records a reduced word for w acting on positions
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| x[i] > x[i + 1]) {
        x.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    let mut reach: BTreeSet<Perm> = BTreeSet::new();
    reach.insert((1..=n).collect());
    for &i in &word {
        let next: Vec<Perm> = reach
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.swap(i, i + 1);
                q
            })
            .collect();
        reach.extend(next);
    }
    reach.contains(u)
}

/// Position blocks of `W_J`: `i` and `i+1` share a block iff `i ∈ J`.
pub fn blocks(n: usize, j: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![1]];
    for p in 2..=n {
        if j.contains(&(p - 1)) {
            out.last_mut().unwrap().push(p);
        } else {
            out.push(vec![p]);
        }
    }
    out
}

pub fn is_min_rep(w: &[usize], j: &[usize]) -> bool {
    j.iter().all(|&i| w[i - 1] < w[i])
}

pub fn min_rep(w: &[usize], j: &[usize]) -> Perm {
    let mut x = w.to_vec();
    for b in blocks(w.len(), j) {
        let mut vals: Vec<usize> = b.iter().map(|&p| w[p - 1]).collect();
        vals.sort_unstable();
        for (p, v) in b.iter().zip(vals) {
            x[p - 1] = v;
        }
    }
    x
}

/// Minimum-length element of `w W_J` by exhausting the coset.
pub fn min_rep_brute(w: &[usize], j: &[usize]) -> Perm {
    let n = w.len();
    let bl = blocks(n, j);
    permutations(n)
        .into_iter()
        .filter(|y| {
            bl.iter().all(|b| {
                let mut s: Vec<usize> = b.iter().map(|&p| y[p - 1]).collect();
                s.sort_unstable();
                s == b.to_vec()
            })
        })
        .map(|y| compose(w, &y))
        .min_by_key(|x| length(x))
        .unwrap()
}

pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << (n - 1))
        .map(|m| (1..n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

pub fn quotient(n: usize, j: &[usize]) -> Vec<Perm> {
    permutations(n)
        .into_iter()
        .filter(|w| is_min_rep(w, j))
        .collect()
}

/// Rank generating function of `[id, w] ∩ W^J`.
pub fn poincare(w: &[usize], j: &[usize]) -> Vec<u64> {
    let mut c = vec![0u64; length(w) + 1];
    for x in quotient(w.len(), j) {
        if bruhat(&x, w) {
            c[length(&x)] += 1;
        }
    }
    c
}

pub fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            c[i + k] += x * y;
        }
    }
    c
}

pub fn palindromic(c: &[u64]) -> bool {
    c.iter().eq(c.iter().rev())
}

/// Elements of `W^J` covered by `w`.
pub fn covers(w: &[usize], j: &[usize]) -> Vec<Perm> {
    let l = length(w);
    quotient(w.len(), j)
        .into_iter()
        .filter(|x| length(x) + 1 == l && bruhat(x, w))
        .collect()
}

// Grassmannian side: a coset of the maximal parabolic omitting d is a
// d-subset of {1..n}, ordered componentwise (Gale order).

pub fn col_subsets(n: usize, d: usize) -> Vec<Cols> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Cols, out: &mut Vec<Cols>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, d, &mut Vec::new(), &mut out);
    out
}

pub fn gale(s: &[usize], t: &[usize]) -> bool {
    s.iter().zip(t).all(|(a, b)| a <= b)
}

pub fn dim(s: &[usize]) -> usize {
    s.iter().enumerate().map(|(k, c)| c - (k + 1)).sum()
}

/// `s_i` acting on the set: exchange the labels `i` and `i+1`.
pub fn act(s: &[usize], i: usize) -> Cols {
    let mut t: Cols = s
        .iter()
        .map(|&c| if c == i { i + 1 } else if c == i + 1 { i } else { c })
        .collect();
    t.sort_unstable();
    t
}

/// `X_S` is stable under the minimal parabolic of every `i ∈ I`.
pub fn stable(s: &[usize], levi: &[usize]) -> bool {
    levi.iter().all(|&i| gale(&act(s, i), s))
}

pub fn l_max(s: &[usize], n: usize) -> Vec<usize> {
    (1..n).filter(|&i| stable(s, &[i])).collect()
}

pub fn below(s: &[usize], n: usize) -> Vec<Cols> {
    col_subsets(n, s.len())
        .into_iter()
        .filter(|t| gale(t, s))
        .collect()
}

pub fn divisors(s: &[usize], n: usize) -> Vec<Cols> {
    let k = dim(s);
    below(s, n)
        .into_iter()
        .filter(|t| dim(t) + 1 == k)
        .collect()
}

pub fn heads(s: &[usize], n: usize, levi: &[usize]) -> Vec<Cols> {
    below(s, n)
        .into_iter()
        .filter(|t| stable(t, levi))
        .collect()
}

pub fn maximal(items: &[Cols]) -> Vec<Cols> {
    items
        .iter()
        .filter(|a| !items.iter().any(|b| b != *a && gale(a, b)))
        .cloned()
        .collect()
}

pub fn minimal(items: &[Cols]) -> Vec<Cols> {
    items
        .iter()
        .filter(|a| !items.iter().any(|b| b != *a && gale(b, a)))
        .cloned()
        .collect()
}

/// `{1..p} ∪ {m..m+d-p-1}`: after removing the longest initial segment, what
/// remains is empty or a single interval.
pub fn smooth_form(s: &[usize]) -> bool {
    let p = s.iter().enumerate().take_while(|(k, &c)| c == k + 1).count();
    s[p..].windows(2).all(|w| w[1] == w[0] + 1)
}

/// The Grassmannian permutation with column set `s`.
pub fn grassmann_perm(n: usize, s: &[usize]) -> Perm {
    let mut w = s.to_vec();
    w.extend((1..=n).filter(|x| !s.contains(x)));
    w
}

pub fn poincare_cols(s: &[usize], n: usize) -> Vec<u64> {
    let mut c = vec![0u64; dim(s) + 1];
    for t in below(s, n) {
        c[dim(&t)] += 1;
    }
    c
}
