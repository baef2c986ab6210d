//! Exact rank of a family of invariant vectors.
//!
//! Rank is first computed modulo the prime `2^61 - 1`. Reduction mod p can
//! only lose rank, so a full modular rank is already a proof. Otherwise the
//! rank is recomputed exactly by fraction-free elimination over the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::tensor::Subset;
use super::InvariantVector;
use crate::error::{input, Result};

const P: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Full rank modulo `2^61 - 1`.
    Modular,
    /// Fraction-free elimination over the integers.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub vectors: usize,
    pub columns: usize,
    pub method: RankMethod,
}

impl RankCertificate {
    pub fn is_independent(&self) -> bool {
        self.rank == self.vectors
    }
}

pub fn rank(vectors: &[InvariantVector]) -> Result<usize> {
    Ok(certify_rank(vectors)?.rank)
}

/// Rank of the span, with the method that proved it. All vectors must live
/// in the same tensor product.
pub fn certify_rank(vectors: &[InvariantVector]) -> Result<RankCertificate> {
    if let Some(first) = vectors.first() {
        if let Some(v) = vectors
            .iter()
            .find(|v| v.n() != first.n() || v.boundary() != first.boundary())
        {
            return input(format!(
                "vectors live in different spaces: SL({}) {:?} and SL({}) {:?}",
                first.n(),
                first.boundary(),
                v.n(),
                v.boundary()
            ));
        }
    }
    let mut columns: BTreeMap<&Vec<Subset>, usize> = BTreeMap::new();
    for v in vectors {
        for (k, _) in v.iter() {
            let next = columns.len();
            columns.entry(k).or_insert(next);
        }
    }
    let rows: Vec<Vec<(usize, BigInt)>> = vectors
        .iter()
        .map(|v| {
            v.primitive()
                .into_iter()
                .map(|(k, c)| (columns[&k], c))
                .collect()
        })
        .collect();
    let width = columns.len();
    let modular = modular_rank(&rows, width);
    if modular == vectors.len() {
        return Ok(RankCertificate {
            rank: modular,
            vectors: vectors.len(),
            columns: width,
            method: RankMethod::Modular,
        });
    }
    Ok(RankCertificate {
        rank: bareiss_rank(&rows, width),
        vectors: vectors.len(),
        columns: width,
        method: RankMethod::Exact,
    })
}

fn reduce(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(P))
        .to_u64()
        .expect("reduced below p")
}

fn mul(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let r = (x as u64 & P) + (x >> 61) as u64;
    if r >= P {
        r - P
    } else {
        r
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn modular_rank(rows: &[Vec<(usize, BigInt)>], width: usize) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut dense = vec![0u64; width];
            for (c, v) in row {
                dense[*c] = reduce(v);
            }
            dense
        })
        .collect();
    let mut r = 0;
    for c in 0..width {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = pow(m[r][c], P - 2);
        let pivot_row: Vec<u64> = m[r].iter().map(|&x| mul(x, inv)).collect();
        for row in m.iter_mut().skip(r + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..width {
                if pivot_row[j] != 0 {
                    let t = row[j] + P - mul(f, pivot_row[j]);
                    row[j] = if t >= P { t - P } else { t };
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn bareiss_rank(rows: &[Vec<(usize, BigInt)>], width: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); width];
            for (c, v) in row {
                dense[*c] = v.clone();
            }
            dense
        })
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..width {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let (top, rest) = m.split_at_mut(r + 1);
        let p = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..width {
                let v = &p[c] * &row[j] - &f * &p[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = top[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn vector(boundary: Vec<usize>, terms: &[(Vec<Subset>, i64)]) -> InvariantVector {
        InvariantVector::from_terms(
            2,
            boundary,
            terms
                .iter()
                .map(|(k, c)| (k.clone(), BigRational::from_integer(BigInt::from(*c)))),
        )
        .unwrap()
    }

    #[test]
    fn duplicates_and_combinations_do_not_add_rank() {
        let a = vector(vec![1, 1], &[(vec![1, 2], 1), (vec![2, 1], -1)]);
        let b = vector(vec![1, 1], &[(vec![1, 1], 3)]);
        let c = vector(
            vec![1, 1],
            &[(vec![1, 2], 2), (vec![2, 1], -2), (vec![1, 1], 3)],
        );
        let cert = certify_rank(&[a.clone(), b.clone()]).unwrap();
        assert_eq!((cert.rank, cert.method), (2, RankMethod::Modular));
        let cert = certify_rank(&[a.clone(), b.clone(), c, a]).unwrap();
        assert_eq!((cert.rank, cert.method), (2, RankMethod::Exact));
    }

    #[test]
    fn mixed_spaces_are_rejected() {
        let a = vector(vec![1, 1], &[(vec![1, 2], 1)]);
        let b = vector(vec![1], &[(vec![1], 1)]);
        assert!(rank(&[a, b]).is_err());
    }

    #[test]
    fn modular_and_exact_agree_on_random_integer_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (h, w) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let rows: Vec<Vec<(usize, BigInt)>> = (0..h)
                .map(|_| {
                    (0..w)
                        .filter_map(|j| {
                            let v: i64 = rng.gen_range(-2..=2);
                            (v != 0).then(|| (j, BigInt::from(v)))
                        })
                        .collect()
                })
                .collect();
            assert_eq!(modular_rank(&rows, w), bareiss_rank(&rows, w));
        }
    }
}
