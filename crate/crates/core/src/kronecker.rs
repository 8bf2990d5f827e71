//! The internal (Kronecker) product on the Schur basis, realized through
//! exact character arithmetic: pointwise products of class functions
//! decomposed against a character table.

use num_bigint::BigInt;

use crate::character::{CharacterEvaluator, CharacterTable};
use crate::class::class_data;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SchurExpansion;

fn pointwise(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

/// Bilinear extension of s_λ * s_μ = Σ_ν g(λ,μ,ν) s_ν to expansions of
/// a common degree, which must match the table's.
pub fn kronecker_product(
    a: &SchurExpansion,
    b: &SchurExpansion,
    table: &CharacterTable,
) -> Result<SchurExpansion> {
    if a.degree() != b.degree() {
        return Err(Error::SizeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let fa = table.class_function(a)?;
    let fb = table.class_function(b)?;
    Ok(table.decompose(&pointwise(&fa, &fb)))
}

/// A single Kronecker coefficient g(λ,μ,ν) = ⟨χ^λ · χ^μ, χ^ν⟩, from
/// three character rows; no full table is built.
pub fn kronecker_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: nu.size(),
        });
    }
    let classes = class_data(lambda.size());
    let mut ev = CharacterEvaluator::new();
    let row_l = ev.row(lambda, &classes)?;
    let row_m = ev.row(mu, &classes)?;
    let row_n = ev.row(nu, &classes)?;
    Ok(classes.inner_product(&pointwise(&row_l, &row_m), &row_n))
}

/// Schur expansion of h_μ * s_μ: the class function ψ^μ · χ^μ decomposed
/// against the table. This is the production route; the nested-chain
/// expansion is its cross-check.
pub fn internal_product_hs(mu: &Partition, table: &CharacterTable) -> Result<SchurExpansion> {
    if mu.size() != table.degree() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: table.degree(),
        });
    }
    let psi = table.permutation_character(mu)?;
    let chi = table
        .row_values(mu)
        .expect("mu is a partition of the table degree");
    Ok(table.decompose(&pointwise(&psi, chi)))
}

/// Kronecker product of s_mu with itself `power` times, all coefficients
/// at once: decomposes the pointwise power of one character row.
pub fn power_decomposition(
    mu: &Partition,
    power: u32,
    table: &CharacterTable,
) -> Result<SchurExpansion> {
    let row = table.row_values(mu).ok_or_else(|| Error::SizeMismatch {
        left: mu.size(),
        right: table.degree(),
    })?;
    let mut f = vec![BigInt::from(1); row.len()];
    for _ in 0..power {
        f = pointwise(&f, row);
    }
    Ok(table.decompose(&f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::h_to_schur;
    use num_traits::{One, Zero};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn expansion(terms: &[(&[u32], i64)]) -> SchurExpansion {
        let degree = terms
            .first()
            .map(|(parts, _)| parts.iter().map(|&x| u64::from(x)).sum())
            .unwrap_or(0);
        let mut v = SchurExpansion::zero(degree);
        for (parts, c) in terms {
            v.add_term(p(parts), BigInt::from(*c));
        }
        v
    }

    #[test]
    fn square_of_s21() {
        let t = CharacterTable::build(3);
        let s21 = SchurExpansion::single(p(&[2, 1]));
        let sq = kronecker_product(&s21, &s21, &t).unwrap();
        assert_eq!(sq, expansion(&[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)]));
    }

    #[test]
    fn trivial_is_the_identity() {
        let t = CharacterTable::build(4);
        let v = h_to_schur(&p(&[2, 1, 1]));
        let triv = SchurExpansion::single(p(&[4]));
        assert_eq!(kronecker_product(&triv, &v, &t).unwrap(), v);
    }

    #[test]
    fn sign_twist_conjugates() {
        for n in 1..=5u64 {
            let t = CharacterTable::build(n);
            let sign = SchurExpansion::single(Partition::new(vec![1; n as usize]).unwrap());
            for lam in t.rows() {
                let v = SchurExpansion::single(lam.clone());
                let twisted = kronecker_product(&sign, &v, &t).unwrap();
                assert_eq!(twisted, SchurExpansion::single(lam.conjugate()), "twist of {lam}");
            }
        }
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let t = CharacterTable::build(3);
        let a = SchurExpansion::single(p(&[2, 1]));
        let b = SchurExpansion::single(p(&[3, 1]));
        assert!(matches!(
            kronecker_product(&a, &b, &t),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn single_coefficients() {
        assert_eq!(
            kronecker_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            kronecker_coefficient(&p(&[3]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            kronecker_coefficient(&p(&[3]), &p(&[2, 1]), &p(&[3])).unwrap(),
            BigInt::zero()
        );
        assert!(kronecker_coefficient(&p(&[2, 1]), &p(&[3, 1]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn hs_products() {
        let t3 = CharacterTable::build(3);
        assert_eq!(
            internal_product_hs(&p(&[2, 1]), &t3).unwrap(),
            expansion(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        assert_eq!(
            internal_product_hs(&p(&[3]), &t3).unwrap(),
            SchurExpansion::single(p(&[3]))
        );

        let t2 = CharacterTable::build(2);
        assert_eq!(
            internal_product_hs(&p(&[1, 1]), &t2).unwrap(),
            expansion(&[(&[2], 1), (&[1, 1], 1)])
        );
    }

    #[test]
    fn hs_equals_kronecker_of_h_expansion() {
        for m in 0..=6u64 {
            let t = CharacterTable::build(m);
            for mu in crate::partition::enumerate_partitions(m) {
                let direct = internal_product_hs(&mu, &t).unwrap();
                let via_product =
                    kronecker_product(&h_to_schur(&mu), &SchurExpansion::single(mu.clone()), &t)
                        .unwrap();
                assert_eq!(direct, via_product, "h_mu * s_mu for {mu}");
            }
        }
    }

    #[test]
    fn powers() {
        let t = CharacterTable::build(3);
        let cube = power_decomposition(&p(&[2, 1]), 3, &t).unwrap();
        assert_eq!(cube, expansion(&[(&[3], 1), (&[2, 1], 3), (&[1, 1, 1], 1)]));
        let square = power_decomposition(&p(&[2, 1]), 2, &t).unwrap();
        assert_eq!(square, expansion(&[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)]));
    }
}
