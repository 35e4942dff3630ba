//! Permutations, subsets and sign bookkeeping.

use alloc::vec::Vec;

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    loop {
        out.push((p.clone(), sign));
        // next lexicographic permutation, tracking the parity of the swaps
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        sign = -sign;
        p[i..].reverse();
        let len = n - i;
        if (len / 2) % 2 == 1 {
            sign = -sign;
        }
    }
    out
}

/// All `k`-subsets of `0..n` as increasing index lists, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// `(-1)^m` where `m` counts pairs `x < y` with `x` outside and `y` inside
/// the subset; this is the sign relating the Vandermonde product to the
/// block product `Delta_I * Delta_complement * prod_{i in I, j not in I}(z_i - z_j)`.
pub fn subset_sign(subset: &[usize], n: usize) -> i64 {
    let mut inside = alloc::vec![false; n];
    for &i in subset {
        inside[i] = true;
    }
    let mut count = 0usize;
    let mut outside_seen = 0usize;
    for &b in &inside {
        if b {
            count += outside_seen;
        } else {
            outside_seen += 1;
        }
    }
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Distinct rearrangements of a multiset of integers.
pub fn distinct_permutations(v: &[i32]) -> Vec<Vec<i32>> {
    let mut p = v.to_vec();
    p.sort_unstable();
    let n = p.len();
    let mut out = Vec::new();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Sorts into strictly decreasing order and returns the permutation sign,
/// or `None` when two entries coincide.
pub fn sort_strict_desc(v: &mut [i32]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] <= v[j] {
            if v[j - 1] == v[j] {
                return None;
            }
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some(sign)
}

pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}
