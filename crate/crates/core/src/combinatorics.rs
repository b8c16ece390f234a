//! Index-tuple helpers: permutation signs, canonical sorting, subsets and shuffles.

use itertools::Itertools;

/// Sorts `t` ascending and returns the sign of the sorting permutation,
/// or `None` if an index repeats.
pub fn sort_with_sign(t: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = t.to_vec();
    let mut sign = 1;
    // insertion sort: each adjacent swap flips the sign
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Sign of the arrangement `t` relative to its sorted order; 0 on repeats.
pub fn perm_sign(t: &[usize]) -> i32 {
    sort_with_sign(t).map_or(0, |(_, s)| s)
}

/// Strictly increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// All permutations of `0..n` with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let s = perm_sign(&p);
            (p, s)
        })
        .collect()
}

/// All tuples in `0..d` of length `k` (row-major order).
pub fn all_tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..k).map(|_| 0..d).multi_cartesian_product().collect()
}

/// Splits the sorted tuple `t` into the entries at `positions` (sorted) and
/// the rest, with the sign of the shuffle `(chosen, rest)`.
pub fn split_by_positions(t: &[usize], positions: &[usize]) -> (Vec<usize>, Vec<usize>, i32) {
    let mut chosen = Vec::with_capacity(positions.len());
    let mut rest = Vec::with_capacity(t.len() - positions.len());
    let mut inversions = 0usize;
    let mut pi = 0;
    for (i, x) in t.iter().enumerate() {
        if pi < positions.len() && positions[pi] == i {
            // every unchosen entry already passed must hop over this one
            inversions += i - pi;
            chosen.push(*x);
            pi += 1;
        } else {
            rest.push(*x);
        }
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    (chosen, rest, sign)
}

/// Every split of `t` into a `k`-subset and the rest, with the shuffle sign.
pub fn splits(t: &[usize], k: usize) -> Vec<(Vec<usize>, Vec<usize>, i32)> {
    combinations(t.len(), k).into_iter().map(|pos| split_by_positions(t, &pos)).collect()
}

/// Merges two disjoint sorted tuples; returns the sorted union and the sign
/// of the concatenation `a ++ b` relative to it, or `None` when they overlap.
pub fn merge_sorted(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, if inversions % 2 == 0 { 1 } else { -1 }))
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Position of a sorted `k`-subset of `0..n` in the lexicographic list of
/// [`combinations`]`(n, k)`.
pub fn combination_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &x) in subset.iter().enumerate() {
        for v in prev..x {
            rank += binomial(n - v - 1, k - i - 1);
        }
        prev = x + 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 3, 1]), None);
    }

    #[test]
    fn shuffle_signs_match_brute_force() {
        let t = vec![0, 1, 2, 3, 4];
        for (chosen, rest, s) in splits(&t, 2) {
            let cat: Vec<usize> = chosen.iter().chain(rest.iter()).copied().collect();
            assert_eq!(perm_sign(&cat), s);
        }
    }

    #[test]
    fn merge_signs() {
        assert_eq!(merge_sorted(&[1, 4], &[0, 2]), Some((vec![0, 1, 2, 4], -1)));
        assert_eq!(merge_sorted(&[1], &[1]), None);
    }

    #[test]
    fn ranks_are_positions() {
        for (i, c) in combinations(6, 3).iter().enumerate() {
            assert_eq!(combination_rank(6, c), i);
        }
    }
}
