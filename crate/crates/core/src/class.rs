//! Conjugacy-class data for a symmetric group: cycle types, centralizer
//! orders, class sizes, and the inner product of integer class functions.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partition::{enumerate_partitions, Partition};

/// A conjugacy class of S_n is labelled by the partition listing its
/// cycle lengths.
pub type CycleType = Partition;

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// z_c for a cycle type c: the product over part values i of
/// i^{m_i} · m_i!, where m_i is the multiplicity of i.
pub fn centralizer_order(cycle: &CycleType) -> BigUint {
    let parts = cycle.parts();
    let mut z = BigUint::one();
    let mut i = 0;
    while i < parts.len() {
        let value = parts[i];
        let mut mult = 0u64;
        while i < parts.len() && parts[i] == value {
            mult += 1;
            i += 1;
        }
        z *= BigUint::from(value).pow(mult as u32) * factorial(mult);
    }
    z
}

/// The classes of S_n with their centralizer orders and sizes. Classes
/// are indexed with the identity class (1^n) first and (n) last, the
/// reverse of the canonical partition order; index 0 is always the
/// identity, so dimension columns sit at a fixed position.
#[derive(Clone, Debug)]
pub struct ClassData {
    n: u64,
    classes: Vec<CycleType>,
    centralizer_orders: Vec<BigUint>,
    class_sizes: Vec<BigUint>,
    group_order: BigUint,
    index: HashMap<Partition, usize>,
}

/// Builds the class data of S_n.
pub fn class_data(n: u64) -> ClassData {
    let mut classes = enumerate_partitions(n);
    classes.reverse();
    let group_order = factorial(n);
    let centralizer_orders: Vec<BigUint> = classes.iter().map(centralizer_order).collect();
    let class_sizes: Vec<BigUint> = centralizer_orders
        .iter()
        .map(|z| {
            debug_assert!((&group_order % z).is_zero());
            &group_order / z
        })
        .collect();
    let index = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    ClassData {
        n,
        classes,
        centralizer_orders,
        class_sizes,
        group_order,
        index,
    }
}

impl ClassData {
    pub fn degree(&self) -> u64 {
        self.n
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, cycle: &CycleType) -> Option<usize> {
        self.index.get(cycle).copied()
    }

    pub fn centralizer(&self, class: usize) -> &BigUint {
        &self.centralizer_orders[class]
    }

    pub fn class_size(&self, class: usize) -> &BigUint {
        &self.class_sizes[class]
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// (1/n!) Σ_c |c| f(c) g(c). The sum is always exactly divisible by
    /// n! for products of genuine characters; the division is asserted
    /// exact.
    pub fn inner_product(&self, f: &[BigInt], g: &[BigInt]) -> BigInt {
        assert_eq!(f.len(), self.classes.len(), "class-function length");
        assert_eq!(g.len(), self.classes.len(), "class-function length");
        let mut acc = BigInt::zero();
        for (i, size) in self.class_sizes.iter().enumerate() {
            acc += BigInt::from(size.clone()) * &f[i] * &g[i];
        }
        let order = BigInt::from(self.group_order.clone());
        assert!(
            (&acc % &order).is_zero(),
            "inner product is not integral: {acc} not divisible by {order}"
        );
        acc / order
    }
}
