//! Irreducible characters of symmetric groups, exactly. Single values
//! come from the border-strip (Murnaghan-Nakayama) recursion on
//! beta-numbers; whole table columns come from expanding products of
//! power sums by iterated border-strip addition, which yields every row
//! of one class at once and parallelizes cleanly over classes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::class::{class_data, factorial, ClassData, CycleType};
use crate::error::{Error, Result};
use crate::partition::{beta_set, enumerate_partitions, partition_from_beta, Partition};
use crate::schur::{h_to_schur, SchurExpansion};

/// Memoizing evaluator for single character values. Cycle parts are
/// consumed largest-first; the memo is keyed on the remaining shape and
/// the remaining cycle parts, so it is shared across evaluations and
/// grows monotonically (no eviction; all workloads here fit in memory).
#[derive(Default)]
pub struct CharacterEvaluator {
    memo: HashMap<(Partition, Vec<u32>), BigInt>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// χ^λ(c) by recursive border-strip removal. On the beta-set side a
    /// strip of size k is the move of one bead from b to b − k; its sign
    /// is (−1)^{number of beads strictly between the two positions}.
    pub fn value(&mut self, lambda: &Partition, cycle: &CycleType) -> Result<BigInt> {
        if lambda.size() != cycle.size() {
            return Err(Error::SizeMismatch {
                left: lambda.size(),
                right: cycle.size(),
            });
        }
        Ok(self.eval(lambda.clone(), cycle.parts()))
    }

    fn eval(&mut self, shape: Partition, cycles: &[u32]) -> BigInt {
        if cycles.is_empty() {
            debug_assert!(shape.is_empty());
            return BigInt::one();
        }
        let key = (shape, cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let k = u64::from(cycles[0]);
        let beta = beta_set(&key.0, key.0.len());
        let mut acc = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < k {
                continue;
            }
            let target = b - k;
            if beta.contains(&target) {
                continue;
            }
            let crossed = beta.iter().filter(|&&x| target < x && x < b).count();
            let mut sub = beta.clone();
            sub[i] = target;
            sub.sort_unstable_by(|a, b| b.cmp(a));
            let term = self.eval(partition_from_beta(&sub), &cycles[1..]);
            if crossed % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    /// χ^λ on every class of `classes`, in class order.
    pub fn row(&mut self, lambda: &Partition, classes: &ClassData) -> Result<Vec<BigInt>> {
        classes
            .classes()
            .iter()
            .map(|c| self.value(lambda, c))
            .collect()
    }
}

/// One full table column: χ^λ(cycle) for every λ ⊢ |cycle|, computed by
/// expanding the power-sum product p_cycle in the Schur basis. Starting
/// from the empty shape on |cycle| beads, each factor p_k moves one bead
/// up by k in all possible ways (a border-strip addition); the signed
/// counts on the final shapes are the character values. Only nonzero
/// values are returned.
pub fn character_column(cycle: &CycleType) -> BTreeMap<Partition, BigInt> {
    let n = cycle.size();
    let beads = usize::try_from(n).expect("degree exceeds the addressable bead count");
    let start: Vec<u64> = (0..beads as u64).rev().collect();
    let mut state: HashMap<Vec<u64>, BigInt> = HashMap::new();
    state.insert(start, BigInt::one());

    for &k in cycle.parts() {
        let k = u64::from(k);
        let mut next: HashMap<Vec<u64>, BigInt> = HashMap::with_capacity(state.len() * 2);
        for (beta, coeff) in &state {
            for i in 0..beads {
                let to = beta[i] + k;
                if beta.contains(&to) {
                    continue;
                }
                let crossed = beta.iter().filter(|&&x| beta[i] < x && x < to).count();
                let mut moved = beta.clone();
                moved[i] = to;
                moved.sort_unstable_by(|a, b| b.cmp(a));
                let entry = next.entry(moved).or_insert_with(BigInt::zero);
                if crossed % 2 == 0 {
                    *entry += coeff;
                } else {
                    *entry -= coeff;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }

    state
        .into_iter()
        .map(|(beta, coeff)| (partition_from_beta(&beta), coeff))
        .collect()
}

/// The hook-length-formula dimension n!/Π hooks of S^λ.
pub fn hook_dimension(lambda: &Partition) -> BigUint {
    let numerator = factorial(lambda.size());
    let denominator: BigUint = lambda
        .hook_lengths()
        .iter()
        .flatten()
        .map(|&h| BigUint::from(h))
        .product();
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

/// The complete character table of S_n: rows are labelled by partitions
/// in canonical order ((n) first), columns by the classes of
/// [`ClassData`] (identity first). All values are exact integers.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u64,
    rows: Vec<Partition>,
    row_index: HashMap<Partition, usize>,
    classes: ClassData,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    /// Builds the table, one class column at a time, in parallel across
    /// classes. The result is identical for every thread count.
    pub fn build(n: u64) -> Self {
        let rows = enumerate_partitions(n);
        let classes = class_data(n);
        let row_index: HashMap<Partition, usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let columns: Vec<BTreeMap<Partition, BigInt>> = classes
            .classes()
            .par_iter()
            .map(character_column)
            .collect();

        let mut values = vec![vec![BigInt::zero(); classes.class_count()]; rows.len()];
        for (j, column) in columns.into_iter().enumerate() {
            for (lam, v) in column {
                values[row_index[&lam]][j] = v;
            }
        }

        CharacterTable {
            n,
            rows,
            row_index,
            classes,
            values,
        }
    }

    /// Reassembles a table from parsed values; used by the cache layer.
    pub(crate) fn from_values(n: u64, values: Vec<Vec<BigInt>>) -> Result<Self> {
        let rows = enumerate_partitions(n);
        let classes = class_data(n);
        if values.len() != rows.len() || values.iter().any(|r| r.len() != classes.class_count()) {
            return Err(Error::Internal(format!(
                "character table for n={n} must be {0}x{0}",
                rows.len()
            )));
        }
        let row_index = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(CharacterTable {
            n,
            rows,
            row_index,
            classes,
            values,
        })
    }

    pub fn degree(&self) -> u64 {
        self.n
    }

    /// Row labels in canonical order.
    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn row_index(&self, lambda: &Partition) -> Option<usize> {
        self.row_index.get(lambda).copied()
    }

    pub fn value_at(&self, row: usize, class: usize) -> &BigInt {
        &self.values[row][class]
    }

    pub fn row_values(&self, lambda: &Partition) -> Option<&[BigInt]> {
        self.row_index(lambda).map(|i| self.values[i].as_slice())
    }

    /// χ^λ at the identity class.
    pub fn dimension(&self, lambda: &Partition) -> Option<&BigInt> {
        self.row_values(lambda).map(|row| &row[0])
    }

    /// The class function Σ coeff_λ · χ^λ of an expansion.
    pub fn class_function(&self, v: &SchurExpansion) -> Result<Vec<BigInt>> {
        if v.degree() != self.n {
            return Err(Error::SizeMismatch {
                left: v.degree(),
                right: self.n,
            });
        }
        let mut out = vec![BigInt::zero(); self.classes.class_count()];
        for (lam, coeff) in v.terms() {
            let row = &self.values[self.row_index[lam]];
            for (o, x) in out.iter_mut().zip(row) {
                *o += coeff * x;
            }
        }
        Ok(out)
    }

    /// Expands a virtual character into the Schur basis by taking the
    /// inner product with every row.
    pub fn decompose(&self, f: &[BigInt]) -> SchurExpansion {
        assert_eq!(f.len(), self.classes.class_count(), "class-function length");
        let mut out = SchurExpansion::zero(self.n);
        for (i, lam) in self.rows.iter().enumerate() {
            let c = self.classes.inner_product(f, &self.values[i]);
            out.add_term(lam.clone(), c);
        }
        out
    }

    /// The character ψ^μ of the permutation module M^μ, assembled from
    /// the Kostka expansion h_μ = Σ K_{λμ} s_λ.
    pub fn permutation_character(&self, mu: &Partition) -> Result<Vec<BigInt>> {
        self.class_function(&h_to_schur(mu))
    }
}
