//! Symmetric functions in the Schur basis with exact integer
//! coefficients: Pieri multiplication, complete-homogeneous expansions,
//! skew Schur functions by Littlewood-Richardson tableau enumeration,
//! connected components of skew diagrams, and the nested-chain expansion
//! of h_mu * s_mu.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, subpartitions_of_size, Partition};

/// Default bound on |mu| for the chain enumeration in
/// [`nested_family_expansion`]; the chain count grows exponentially.
pub const NESTED_GATE_DEFAULT: u64 = 12;

/// A homogeneous integer linear combination of Schur functions. Keys all
/// have size `degree`; zero coefficients are never stored; iteration is
/// in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: u64,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero(degree: u64) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit: the empty Schur function in degree 0.
    pub fn one() -> Self {
        SchurExpansion::single(Partition::empty())
    }

    /// s_lambda with coefficient 1.
    pub fn single(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = lambda.size();
        terms.insert(lambda, BigInt::one());
        SchurExpansion { degree, terms }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.terms.contains_key(lambda)
    }

    /// Adds `delta * s_lambda`, dropping the term if it cancels.
    pub fn add_term(&mut self, lambda: Partition, delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        assert_eq!(lambda.size(), self.degree, "degree mismatch in add_term");
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SchurExpansion) {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        for (lam, c) in &other.terms {
            self.add_term(lam.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SchurExpansion) {
        assert_eq!(self.degree, other.degree, "degree mismatch in sub");
        for (lam, c) in &other.terms {
            self.add_term(lam.clone(), -c.clone());
        }
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, k: &BigInt) -> SchurExpansion {
        if k.is_zero() {
            return SchurExpansion::zero(self.degree);
        }
        SchurExpansion {
            degree: self.degree,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// JSON rendering with arbitrary-precision coefficients as decimal
    /// strings: {"degree": N, "terms": [{"partition": [...], "coeff": "..."}]}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "terms": self
                .terms
                .iter()
                .map(|(lam, c)| serde_json::json!({
                    "partition": lam,
                    "coeff": c.to_string(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SchurExpansion {
    /// One term per line, "<coefficient> <partition>", canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (lam, c) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{c} {lam}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions obtained from `nu` by adding a horizontal strip of
/// `r` cells (no two added cells in the same column).
fn horizontal_strip_additions(nu: &Partition, r: u32) -> Vec<Partition> {
    fn go(nu: &[u32], row: usize, remaining: u32, built: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == nu.len() {
            if remaining == 0 {
                out.push(Partition::new(built.clone()).unwrap());
            } else if row == 0 || remaining <= nu[row - 1] {
                built.push(remaining);
                out.push(Partition::new(built.clone()).unwrap());
                built.pop();
            }
            return;
        }
        // the strip condition pins row i below the previous outer row
        let cap = if row == 0 {
            remaining
        } else {
            remaining.min(nu[row - 1] - nu[row])
        };
        for add in 0..=cap {
            built.push(nu[row] + add);
            go(nu, row + 1, remaining - add, built, out);
            built.pop();
        }
    }
    let mut out = Vec::new();
    go(nu.parts(), 0, r, &mut Vec::new(), &mut out);
    out
}

/// Multiplies by the complete homogeneous function h_r via the Pieri
/// rule: each s_nu becomes the sum of s_lambda over horizontal-strip
/// additions of size r.
pub fn pieri_multiply(v: &SchurExpansion, r: u32) -> SchurExpansion {
    let mut out = SchurExpansion::zero(v.degree() + u64::from(r));
    for (nu, c) in v.terms() {
        for lam in horizontal_strip_additions(nu, r) {
            out.add_term(lam, c.clone());
        }
    }
    out
}

/// Schur expansion of h_mu by iterated Pieri multiplication; the
/// coefficient of s_lambda is the Kostka number K_{lambda,mu}.
pub fn h_to_schur(mu: &Partition) -> SchurExpansion {
    let mut v = SchurExpansion::one();
    for &k in mu.parts() {
        v = pieri_multiply(&v, k);
    }
    v
}

/// A skew diagram outer/inner with inner contained in outer cell-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Littlewood-Richardson expansion of the skew Schur function: the
/// coefficient of s_nu counts semistandard fillings of the shape with
/// content nu whose reverse reading word (rows top to bottom, each row
/// right to left) is a lattice word. All coefficients are nonnegative.
pub fn skew_schur_expand(shape: &SkewShape) -> SchurExpansion {
    let outer = shape.outer();
    let inner = shape.inner();
    let rows = outer.len();
    // cells in reverse reading order
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for i in 0..rows {
        for j in (inner.part(i)..outer.part(i)).rev() {
            cells.push((i, j));
        }
    }

    let mut out = SchurExpansion::zero(shape.size());
    if cells.is_empty() {
        out.add_term(Partition::empty(), BigInt::one());
        return out;
    }

    let mut grid: Vec<Vec<u32>> = (0..rows).map(|i| vec![0; outer.part(i) as usize]).collect();
    let mut counts: Vec<u64> = vec![0; rows + 1];

    fn place(
        cells: &[(usize, u32)],
        at: usize,
        inner: &Partition,
        outer: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u64>,
        out: &mut SchurExpansion,
    ) {
        if at == cells.len() {
            let content: Vec<u32> = counts[1..]
                .iter()
                .take_while(|&&c| c > 0)
                .map(|&c| c as u32)
                .collect();
            out.add_term(Partition::new(content).unwrap(), BigInt::one());
            return;
        }
        let (i, j) = cells[at];
        // semistandard: weakly increasing along rows, strict down columns
        let right_bound = if j + 1 < outer.part(i) {
            grid[i][(j + 1) as usize]
        } else {
            u32::MAX
        };
        let above = if i > 0 && j >= inner.part(i - 1) && j < outer.part(i - 1) {
            grid[i - 1][j as usize]
        } else {
            0
        };
        let hi = right_bound.min(i as u32 + 1);
        for v in (above + 1)..=hi {
            // lattice condition on the reverse reading word
            if v > 1 && counts[(v - 1) as usize] <= counts[v as usize] {
                continue;
            }
            grid[i][j as usize] = v;
            counts[v as usize] += 1;
            place(cells, at + 1, inner, outer, grid, counts, out);
            counts[v as usize] -= 1;
            grid[i][j as usize] = 0;
        }
    }

    place(&cells, 0, inner, outer, &mut grid, &mut counts, &mut out);
    out
}

/// Maximal edge-connected pieces of the skew diagram, top to bottom,
/// each translated to a skew shape in its own right. The skew Schur
/// function of the whole is the product over the components.
pub fn connected_components(shape: &SkewShape) -> Vec<SkewShape> {
    let outer = shape.outer();
    let inner = shape.inner();
    let nonempty: Vec<usize> = (0..outer.len())
        .filter(|&i| inner.part(i) < outer.part(i))
        .collect();

    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &i in &nonempty {
        match groups.last_mut() {
            // rows connect iff consecutive and overlapping in columns
            Some((_, end)) if *end + 1 == i && inner.part(*end) < outer.part(i) => *end = i,
            _ => groups.push((i, i)),
        }
    }

    groups
        .into_iter()
        .map(|(a, b)| {
            let offset = inner.part(b);
            let new_outer: Vec<u32> = (a..=b).map(|i| outer.part(i) - offset).collect();
            let new_inner: Vec<u32> = (a..=b)
                .map(|i| inner.part(i) - offset)
                .take_while(|&p| p > 0)
                .collect();
            SkewShape::new(
                Partition::new(new_outer).unwrap(),
                Partition::new(new_inner).unwrap(),
            )
            .unwrap()
        })
        .collect()
}

/// Ordinary (outer) product of two Schur expansions via the
/// Littlewood-Richardson rule: the coefficient of s_nu in
/// s_lambda · s_mu is the coefficient of s_mu in the expansion of
/// nu/lambda.
pub fn schur_multiply(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    let degree = a.degree() + b.degree();
    let mut out = SchurExpansion::zero(degree);
    if a.is_zero() || b.is_zero() {
        return out;
    }
    // run the skew expansions against the side with fewer terms
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let candidates = enumerate_partitions(degree);
    for (lam, ca) in small.terms() {
        for nu in &candidates {
            if !nu.contains(lam) {
                continue;
            }
            let skew = skew_schur_expand(&SkewShape::new(nu.clone(), lam.clone()).unwrap());
            let mut dot = BigInt::zero();
            for (mu, cb) in large.terms() {
                let c = skew.coeff(mu);
                if !c.is_zero() {
                    dot += c * cb;
                }
            }
            out.add_term(nu.clone(), ca * dot);
        }
    }
    out
}

/// The chain of suffixes of mu: the i-th skew shape is
/// (mu_i, mu_{i+1}, ...)/(mu_{i+1}, ...), so its rows have the sizes
/// mu_i - mu_{i+1}, mu_{i+1} - mu_{i+2}, ... and the product of the
/// skew expansions over the chain equals h_{C(mu)} in the Schur basis.
pub fn row_removal_chain(mu: &Partition) -> Vec<SkewShape> {
    let suffix = |from: usize| -> Partition {
        Partition::new(mu.parts()[from.min(mu.len())..].to_vec()).unwrap()
    };
    (0..mu.len())
        .map(|i| SkewShape::new(suffix(i), suffix(i + 1)).unwrap())
        .collect()
}

/// Expansion of h_mu * s_mu as the sum over nested chains
/// mu = lam(1) ⊇ lam(2) ⊇ ... ⊇ ∅ with |lam(i)| − |lam(i+1)| = mu_i of
/// the ordinary product of the skew Schur functions lam(i)/lam(i+1).
/// Chain enumeration is exponential, so sizes above
/// [`NESTED_GATE_DEFAULT`] are rejected; use
/// [`nested_family_expansion_ungated`] to override.
pub fn nested_family_expansion(mu: &Partition) -> Result<SchurExpansion> {
    if mu.size() > NESTED_GATE_DEFAULT {
        return Err(Error::GateExceeded {
            size: mu.size(),
            gate: NESTED_GATE_DEFAULT,
        });
    }
    Ok(nested_family_expansion_ungated(mu))
}

/// [`nested_family_expansion`] without the size gate.
pub fn nested_family_expansion_ungated(mu: &Partition) -> SchurExpansion {
    fn descend(
        current: &Partition,
        drops: &[u32],
        partial: &SchurExpansion,
        skew_cache: &mut HashMap<SkewShape, SchurExpansion>,
        acc: &mut SchurExpansion,
    ) {
        if drops.is_empty() {
            debug_assert!(current.is_empty());
            acc.add_assign(partial);
            return;
        }
        let next_size = current.size() - u64::from(drops[0]);
        for next in subpartitions_of_size(current, next_size) {
            let shape = SkewShape::new(current.clone(), next.clone()).unwrap();
            let skew = skew_cache
                .entry(shape.clone())
                .or_insert_with(|| skew_schur_expand(&shape))
                .clone();
            let product = schur_multiply(partial, &skew);
            descend(&next, &drops[1..], &product, skew_cache, acc);
        }
    }

    let mut acc = SchurExpansion::zero(mu.size());
    let mut skew_cache = HashMap::new();
    descend(
        mu,
        mu.parts(),
        &SchurExpansion::one(),
        &mut skew_cache,
        &mut acc,
    );
    acc
}
