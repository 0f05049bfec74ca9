#![allow(dead_code)]

use std::collections::BTreeSet;

use monass_core::MonomialIdeal;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Raw = Vec<Vec<u32>>;

/// `r <= 3` variables, `s <= 4` nonzero generators, entries `<= 3`.
pub fn random_raw(rng: &mut ChaCha8Rng) -> (usize, Raw) {
    let r = rng.gen_range(1..=3);
    let s = rng.gen_range(1..=4);
    let gens = (0..s)
        .map(|_| loop {
            let g: Vec<u32> = (0..r).map(|_| rng.gen_range(0..=3)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    (r, gens)
}

pub fn to_ideal(r: usize, raw: &Raw) -> MonomialIdeal {
    let refs: Vec<&[u32]> = raw.iter().map(|g| g.as_slice()).collect();
    MonomialIdeal::from_exponents(r, &refs).unwrap()
}

pub fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let (r, raw) = random_raw(rng);
    to_ideal(r, &raw)
}

pub fn raw_of(ideal: &MonomialIdeal) -> Raw {
    ideal
        .generators()
        .iter()
        .map(|g| g.entries().to_vec())
        .collect()
}

/// All products of `n` generators, without any reduction.
pub fn raw_power(r: usize, gens: &Raw, n: u32) -> Raw {
    let mut acc = vec![vec![0u32; r]];
    for _ in 0..n {
        let mut next = Vec::new();
        for a in &acc {
            for g in gens {
                next.push(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        next.sort();
        next.dedup();
        acc = next;
    }
    acc
}

pub fn raw_contains(gens: &Raw, u: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(u).all(|(a, b)| a <= b))
}

/// Supports `M` (zero-based, sorted) with `p(M)` associated to the ideal
/// generated by `gens`, by direct search for a witness.
///
/// With every variable outside `M` raised past all generator exponents to
/// `b`, `I : X^b = p(M)` holds exactly when `b` is outside `I` and each
/// `b + e_i` with `i` in `M` is inside.
pub fn brute_ass(r: usize, gens: &Raw) -> BTreeSet<Vec<usize>> {
    let top = gens.iter().flatten().copied().max().unwrap_or(0);
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << r) {
        let inside = |i: usize| mask >> i & 1 == 1;
        let m: Vec<usize> = (0..r).filter(|&i| inside(i)).collect();
        let mut found = false;
        each_point(r, top, |a| {
            if found || (0..r).any(|i| !inside(i) && a[i] != 0) {
                return;
            }
            let b: Vec<u32> = (0..r)
                .map(|i| if inside(i) { a[i] } else { top + 1 })
                .collect();
            if raw_contains(gens, &b) {
                return;
            }
            found = m.iter().all(|&i| {
                let mut up = b.clone();
                up[i] += 1;
                raw_contains(gens, &up)
            });
        });
        if found {
            out.insert(m);
        }
    }
    out
}

pub fn each_point(r: usize, side: u32, mut f: impl FnMut(&[u32])) {
    let mut cur = vec![0u32; r];
    loop {
        f(&cur);
        let mut k = 0;
        while k < r && cur[k] == side {
            cur[k] = 0;
            k += 1;
        }
        if k == r {
            return;
        }
        cur[k] += 1;
    }
}

pub fn supports_of(set: &monass_core::AssSet) -> BTreeSet<Vec<usize>> {
    set.iter().map(|p| p.members().to_vec()).collect()
}
