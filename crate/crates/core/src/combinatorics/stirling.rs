use std::sync::Mutex;

use crate::numerics::{Integer, Rat};

// Triangular tables, grown on demand. Rows are only ever appended, so every
// caller sees the same values regardless of interleaving.
static FIRST_KIND: Mutex<Vec<Vec<Integer>>> = Mutex::new(Vec::new());
static SECOND_KIND: Mutex<Vec<Vec<Integer>>> = Mutex::new(Vec::new());

fn lookup(
    table: &Mutex<Vec<Vec<Integer>>>,
    n: usize,
    k: usize,
    next_row: impl Fn(&[Integer], usize) -> Vec<Integer>,
) -> Integer {
    if k > n {
        return Integer::new();
    }
    let mut rows = table.lock().expect("stirling table poisoned");
    if rows.is_empty() {
        rows.push(vec![Integer::from(1)]);
    }
    while rows.len() <= n {
        let m = rows.len() - 1;
        let row = next_row(&rows[m], m);
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Signed Stirling number of the first kind `s(n, k)`: `(x)_n = Σ s(n,k) x^k`.
pub fn stirling1_int(n: usize, k: usize) -> Integer {
    lookup(&FIRST_KIND, n, k, |prev, m| {
        // s(m+1, j) = s(m, j-1) - m s(m, j)
        (0..=m + 1)
            .map(|j| {
                let left = if j >= 1 { prev[j - 1].clone() } else { Integer::new() };
                let right = prev.get(j).map_or(Integer::new(), |v| Integer::from(v * m as u64));
                left - right
            })
            .collect()
    })
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2_int(n: usize, k: usize) -> Integer {
    lookup(&SECOND_KIND, n, k, |prev, m| {
        // S(m+1, j) = j S(m, j) + S(m, j-1)
        (0..=m + 1)
            .map(|j| {
                let left = if j >= 1 { prev[j - 1].clone() } else { Integer::new() };
                let right = prev.get(j).map_or(Integer::new(), |v| Integer::from(v * j as u64));
                left + right
            })
            .collect()
    })
}

pub fn stirling1(n: usize, k: usize) -> Rat {
    Rat::from(stirling1_int(n, k))
}

pub fn stirling2(n: usize, k: usize) -> Rat {
    Rat::from(stirling2_int(n, k))
}
