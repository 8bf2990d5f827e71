//! Shared oracle for the integration suites: symmetric-group character
//! values through the Jacobi-Trudi determinant over induced-trivial
//! characters. No border strips and no recursion on shapes, so it is
//! independent of the engine under test.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use saxl_core::Partition;

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Value of the induced character psi^alpha (blocks of sizes `alpha`)
/// on the class with the given cycle type: the number of ways to deal
/// the cycles into the blocks so that block i receives total size
/// alpha_i. Cycles are distinguishable, so equal lengths contribute
/// binomially.
pub fn psi_value(alpha: &[u64], cycles: &Partition) -> BigInt {
    let mut counts: Vec<(u64, u32)> = Vec::new();
    for &part in cycles.parts() {
        let len = u64::from(part);
        match counts.last_mut() {
            Some((l, m)) if *l == len => *m += 1,
            _ => counts.push((len, 1)),
        }
    }

    fn fill_block(
        blocks: &[u64],
        counts: &mut Vec<(u64, u32)>,
        from: usize,
        remaining: u64,
        factor: BigInt,
    ) -> BigInt {
        if remaining == 0 {
            return factor * deal(&blocks[1..], counts);
        }
        if from >= counts.len() {
            return BigInt::zero();
        }
        let (len, avail) = counts[from];
        let cap = (remaining / len).min(u64::from(avail)) as u32;
        let mut total = BigInt::zero();
        for take in 0..=cap {
            counts[from].1 = avail - take;
            total += fill_block(
                blocks,
                counts,
                from + 1,
                remaining - u64::from(take) * len,
                &factor * binomial(avail, take),
            );
            counts[from].1 = avail;
        }
        total
    }

    fn deal(blocks: &[u64], counts: &mut Vec<(u64, u32)>) -> BigInt {
        match blocks.first() {
            None => {
                if counts.iter().all(|&(_, m)| m == 0) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some(&first) => fill_block(blocks, counts, 0, first, BigInt::one()),
        }
    }

    deal(alpha, &mut counts)
}

fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        n: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<(Vec<usize>, bool)>,
    ) {
        if current.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| current[i] > current[j])
                .count();
            out.push((current.clone(), inversions % 2 == 0));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// chi^lambda on the class with the given cycle type, as the signed sum
/// over the symmetric group of psi values at the shifted row lengths.
pub fn jt_character(lambda: &Partition, cycles: &Partition) -> BigInt {
    assert_eq!(lambda.size(), cycles.size(), "degree mismatch in the oracle");
    let rows = lambda.len();
    if rows == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for (perm, even) in permutations_with_sign(rows) {
        let mut blocks = Vec::with_capacity(rows);
        let mut vanishes = false;
        for (i, &target) in perm.iter().enumerate() {
            let entry = i64::from(lambda.parts()[i]) - i as i64 + target as i64;
            if entry < 0 {
                vanishes = true;
                break;
            }
            if entry > 0 {
                blocks.push(entry as u64);
            }
        }
        if vanishes {
            continue;
        }
        let value = psi_value(&blocks, cycles);
        if even {
            total += value;
        } else {
            total -= value;
        }
    }
    total
}
