//! Independent oracles for the integration and acceptance tests. Nothing
//! here calls into the library except for the plain data types.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_integer::Integer;
use omsignal_core::{Arrangement, SymmetricCycle, Tope, TopeSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn tope(signs: &[i8]) -> Tope {
    Tope::new(signs.iter().map(|&s| s as i64)).unwrap()
}

/// Fourier-Motzkin test for `{x : <r, x> > 0 for every row r}` on integer rows.
pub fn fm_strictly_feasible(rows: &[Vec<i128>]) -> bool {
    let mut rows: Vec<Vec<i128>> = rows.to_vec();
    let d = rows.first().map_or(0, |r| r.len());
    for var in (0..d).rev() {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r[var].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => zero.push(r),
            }
        }
        for p in &pos {
            for n in &neg {
                let (a, b) = (p[var], -n[var]);
                let mut c: Vec<i128> = p.iter().zip(n).map(|(x, y)| b * x + a * y).collect();
                let g = c.iter().fold(0i128, |g, x| g.gcd(x));
                if g > 1 {
                    c.iter_mut().for_each(|x| *x /= g);
                }
                zero.push(c);
            }
        }
        zero.sort();
        zero.dedup();
        rows = zero;
    }
    rows.is_empty()
}

/// Topes of an integer arrangement by exhaustive sign enumeration and
/// Fourier-Motzkin elimination.
pub fn fm_topes(vectors: &[Vec<i64>]) -> BTreeSet<Tope> {
    let t = vectors.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << t {
        let signs: Vec<i8> = (0..t)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        let rows: Vec<Vec<i128>> = vectors
            .iter()
            .zip(&signs)
            .map(|(v, &s)| v.iter().map(|&x| (s as i64 * x) as i128).collect())
            .collect();
        if fm_strictly_feasible(&rows) {
            out.insert(tope(&signs));
        }
    }
    out
}

/// Integer code of a tope whose numeric order is the tope order: position 0
/// is the most significant bit and `-` is 1.
pub fn tope_code(x: &Tope) -> u32 {
    x.signs()
        .iter()
        .fold(0, |acc, &s| acc << 1 | (s < 0) as u32)
}

pub fn walk_codes(walk: &[Tope]) -> Vec<u32> {
    walk.iter().map(tope_code).collect()
}

/// Smallest rotation or reflection of a closed walk of codes.
pub fn canonical_walk(walk: &[u32]) -> Vec<u32> {
    let n = walk.len() as isize;
    let at = |start: isize, dir: isize, k: isize| walk[(start + dir * k).rem_euclid(n) as usize];
    let (mut bs, mut bd) = (0isize, 1isize);
    for start in 0..n {
        for dir in [1isize, -1] {
            let smaller = (0..n)
                .map(|k| at(start, dir, k).cmp(&at(bs, bd, k)))
                .find(|o| o.is_ne())
                .is_some_and(|o| o.is_lt());
            if smaller {
                (bs, bd) = (start, dir);
            }
        }
    }
    (0..n).map(|k| at(bs, bd, k)).collect()
}

/// Every symmetric cycle of the `t`-cube, canonicalized: in `t` steps from
/// `R^0` to `-R^0` each element is flipped exactly once, so a cycle is a
/// start vertex and a permutation of the ground set, repeated once.
pub fn hypercube_cycles_oracle(t: usize) -> BTreeSet<Vec<u32>> {
    let mut perms = Vec::new();
    permutations(&mut (0..t).collect(), 0, &mut perms);
    let mut out = BTreeSet::new();
    let mut walk = vec![0u32; 2 * t];
    for start in 0u32..1 << t {
        for p in &perms {
            let mut cur = start;
            for (k, slot) in walk.iter_mut().enumerate() {
                *slot = cur;
                cur ^= 1 << (t - 1 - p[k % t]);
            }
            out.insert(canonical_walk(&walk));
        }
    }
    out
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Breadth-first distances over single-element flips inside `topes`.
pub fn graph_distances(topes: &[Tope], source: usize) -> Vec<Option<usize>> {
    let index: HashMap<&Tope, usize> = topes.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut dist = vec![None; topes.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for e in 0..topes[u].len() {
            let signs: Vec<i8> = topes[u]
                .signs()
                .iter()
                .enumerate()
                .map(|(i, &s)| if i == e { -s } else { s })
                .collect();
            if let Some(&v) = index.get(&tope(&signs)) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    dist
}

/// All inclusion-minimal subsets of the `2t` cycle vertices (as bit masks)
/// whose entrywise sum is `target`.
pub fn minimal_summing_subsets(cycle: &SymmetricCycle, target: &Tope) -> Vec<u32> {
    let vs = cycle.vertices();
    let n = vs.len();
    let t = target.len();
    let goal: Vec<i64> = target.signs().iter().map(|&s| s as i64).collect();
    let mut hits = Vec::new();
    for mask in 0u32..1 << n {
        let mut sum = vec![0i64; t];
        for (j, v) in vs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for (acc, &s) in sum.iter_mut().zip(v.signs()) {
                    *acc += s as i64;
                }
            }
        }
        if sum == goal {
            hits.push(mask);
        }
    }
    hits.iter()
        .copied()
        .filter(|&m| !hits.iter().any(|&o| o != m && o & m == o))
        .collect()
}

/// A seeded random arrangement with its dimension.
pub struct RandomOm {
    pub d: usize,
    pub arrangement: Arrangement,
}

/// `count` seeded simple acyclic arrangements with `d <= 4` and `t <= 8`.
pub fn random_arrangements(seed: u64, count: usize) -> Vec<RandomOm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(2..=4);
            let t = rng.gen_range(3.max(d)..=8);
            RandomOm {
                d,
                arrangement: Arrangement::random(&mut rng, t, d, 4),
            }
        })
        .collect()
}

/// Integer coordinates of a library arrangement built from integers.
pub fn integer_vectors(a: &Arrangement) -> Vec<Vec<i64>> {
    a.vectors()
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    assert!(x.is_integer());
                    x.to_integer().try_into().unwrap()
                })
                .collect()
        })
        .collect()
}

pub fn as_set(s: &TopeSet) -> BTreeSet<Tope> {
    s.iter().cloned().collect()
}
