//! The simple Lie algebras used throughout: sl2 in its canonical basis and
//! sl_n on the standard basis of traceless matrices.


use super::RepsError;
use crate::algebra::AlgebraStructure;
use crate::field::Field;

/// sl2 with the canonical basis `{e, h, f}`:
/// `[e,h] = 2e`, `[h,f] = 2f`, `[e,f] = h`, antisymmetrized.
pub fn sl2_canonical<F: Field>() -> AlgebraStructure<F> {
    let mut a = AlgebraStructure::new(vec!["e".into(), "h".into(), "f".into()])
        .expect("distinct labels");
    let two = F::int(2);
    // indices: e = 0, h = 1, f = 2
    a.set_antisymmetric(0, 1, vec![(0, two.clone())]);
    a.set_antisymmetric(1, 2, vec![(2, two)]);
    a.set_antisymmetric(0, 2, vec![(1, F::one())]);
    a
}

/// sl_n on the basis `h_1..h_{n-1}, e_{ij} (i != j)` with
/// `h_k = E_kk - E_nn`, ordered `h`'s first, then `e_{ij}` lexicographically.
///
/// Structure constants come from expanding matrix commutators of the unit
/// matrices, which reproduces the usual table
/// (`[e_{ij},e_{jk}] = e_{ik}`, `[h_i,e_{in}] = 2e_{in}`, ...).
pub fn sln<F: Field>(n: usize) -> Result<AlgebraStructure<F>, RepsError> {
    if !(2..=9).contains(&n) {
        return Err(RepsError::BadDimension(n));
    }
    // Each basis element as a dense n x n integer matrix.
    let mut mats: Vec<Vec<i64>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for k in 0..n - 1 {
        let mut m = vec![0i64; n * n];
        m[k * n + k] = 1;
        m[(n - 1) * n + (n - 1)] = -1;
        mats.push(m);
        labels.push(format!("h{}", k + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut m = vec![0i64; n * n];
            m[i * n + j] = 1;
            mats.push(m);
            labels.push(format!("e{}{}", i + 1, j + 1));
        }
    }

    // Expands a traceless matrix in the basis: diagonal part over the h's
    // (coefficient of h_k is the (k,k) entry), off-diagonal over the e's.
    let expand = |m: &[i64]| -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for k in 0..n - 1 {
            if m[k * n + k] != 0 {
                out.push((k, m[k * n + k]));
            }
        }
        let mut idx = n - 1;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if m[i * n + j] != 0 {
                    out.push((idx, m[i * n + j]));
                }
                idx += 1;
            }
        }
        out
    };

    let dim = mats.len();
    let mut alg = AlgebraStructure::new(labels)?;
    for a in 0..dim {
        for b in 0..dim {
            let mut comm = vec![0i64; n * n];
            for r in 0..n {
                for c in 0..n {
                    let mut v = 0i64;
                    for t in 0..n {
                        v += mats[a][r * n + t] * mats[b][t * n + c];
                        v -= mats[b][r * n + t] * mats[a][t * n + c];
                    }
                    comm[r * n + c] = v;
                }
            }
            let entries: Vec<(usize, F)> = expand(&comm)
                .into_iter()
                .map(|(k, c)| (k, F::int(c)))
                .filter(|(_, c): &(usize, F)| !c.is_zero())
                .collect();
            alg.set_product(a, b, entries);
        }
    }
    Ok(alg)
}
