//! Stabilizer dimensions against an independent integer elimination.

use nilreal::twostep::{catalog, stabilizer_lie, SkewTensor};

/// Dense integer action matrix of `(A, B) ↦ B∘e − e(A·,·) − e(·,A·)`, built
/// straight from the (antisymmetrized) coefficient cube.
fn naive_action(e: &SkewTensor) -> Vec<Vec<i128>> {
    let (m, n) = e.signature();
    let mut c = vec![vec![vec![0i128; n]; m]; m];
    for (&(i, j, k), v) in e.terms() {
        assert!(v.is_integer());
        let v: i128 = v.to_integer().try_into().unwrap();
        c[i - 1][j - 1][k - m - 1] = v;
        c[j - 1][i - 1][k - m - 1] = -v;
    }
    let mut rows = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..n {
                let mut row = vec![0i128; m * m + n * n];
                // A_{pq}: −(c[p][j][k] if q==i) − (c[i][p][k] if q==j)
                for p in 0..m {
                    row[p * m + i] -= c[p][j][k];
                    row[p * m + j] -= c[i][p][k];
                }
                for q in 0..n {
                    row[m * m + k * n + q] += c[i][j][q];
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Fraction-free Bareiss rank.
fn bareiss_rank(mut a: Vec<Vec<i128>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = a[rank][col].checked_mul(a[r][c]).unwrap() - a[r][col].checked_mul(a[rank][c]).unwrap();
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

const GOLDEN: [(&str, usize); 27] = [
    ("1:1", 10),
    ("1:1-bis", 10),
    ("1:2", 11),
    ("1:3", 12),
    ("1:4", 14),
    ("1:5", 15),
    ("1:6", 16),
    ("2:1", 4),
    ("2:1-bis", 4),
    ("2:2", 5),
    ("2:2-bis", 5),
    ("2:3", 6),
    ("2:3-bis", 6),
    ("2:4", 7),
    ("2:5", 7),
    ("2:5-bis", 7),
    ("2:6", 8),
    ("2:7", 9),
    ("2:8", 10),
    ("2:9", 11),
    ("2:10", 11),
    ("2:11", 11),
    ("2:12", 12),
    ("3:1", 8),
    ("3:1-bis", 8),
    ("3:2", 9),
    ("3:3", 11),
];

#[test]
fn oracle_matches_library() {
    for e in catalog() {
        let (m, n) = e.tensor.signature();
        let oracle = m * m + n * n - bareiss_rank(naive_action(&e.tensor));
        assert_eq!(stabilizer_lie(&e.tensor).dim(), oracle, "{}", e.id());
    }
}

#[test]
fn frozen_stabilizer_dims() {
    let got: Vec<(String, usize)> = catalog().iter().map(|e| (e.id(), stabilizer_lie(&e.tensor).dim())).collect();
    let want: Vec<(String, usize)> = GOLDEN.iter().map(|&(id, d)| (id.to_string(), d)).collect();
    assert_eq!(got, want);
}

#[test]
fn bareiss_sanity() {
    assert_eq!(bareiss_rank(vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(bareiss_rank(vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]), 2);
}
