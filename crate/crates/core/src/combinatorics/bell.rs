use crate::error::{contract, Result};
use crate::numerics::{binomial, factorial, Rat, Ring};

/// Partial Bell polynomial `B_{n,k}(x_1, ..., x_{n-k+1})` by direct
/// enumeration of the index sequences `(i_1, ..., i_{n-k+1})` with
/// `Σ i_j = k` and `Σ j i_j = n`. `xs[0]` is `x_1`.
///
/// Exponential in `n`; use [`BellTable`] for whole triangles.
pub fn bell_partial<R: Ring>(n: usize, k: usize, xs: &[R]) -> Result<R> {
    if k > n {
        return contract(format!("B_{{{n},{k}}} needs k <= n"));
    }
    if k == 0 {
        // no blocks: only the empty set has a partition
        return match xs.first() {
            Some(x) if n == 0 => Ok(x.one_like()),
            Some(x) => Ok(x.zero_like()),
            None => contract("B_{n,0} needs one argument to fix the ring"),
        };
    }
    let len = n - k + 1;
    if xs.len() < len {
        return contract(format!("B_{{{n},{k}}} needs {len} arguments, got {}", xs.len()));
    }
    let mut total = xs[0].zero_like();
    let mut counts = vec![0usize; len];
    enumerate(len, k, n, &mut counts, &mut |counts| {
        let mut weight = Rat::from(factorial(n));
        let mut term = xs[0].one_like();
        for (j, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let jf = factorial(j + 1);
            let mut denom = factorial(c);
            for _ in 0..c {
                denom *= &jf;
                term = term.times(&xs[j]);
            }
            weight /= Rat::from(denom);
        }
        total = total.plus(&term.scaled(&weight));
    });
    Ok(total)
}

// Fills counts[j] (multiplicity of part size j+1) from the largest part down.
fn enumerate(
    part: usize,
    blocks_left: usize,
    size_left: usize,
    counts: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if part == 0 {
        if blocks_left == 0 && size_left == 0 {
            visit(counts);
        }
        return;
    }
    let max_c = (size_left / part).min(blocks_left);
    for c in 0..=max_c {
        counts[part - 1] = c;
        enumerate(part - 1, blocks_left - c, size_left - c * part, counts, visit);
    }
    counts[part - 1] = 0;
}

/// Triangle of `B_{n,k}` for `0 <= k <= n <= n_max`, filled with the
/// recurrence `B_{n,k} = Σ_i C(n-1, i-1) x_i B_{n-i,k-1}`.
#[derive(Clone, Debug)]
pub struct BellTable<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> BellTable<R> {
    /// `xs[0]` is `x_1`; needs at least `n_max` values. `unit` fixes the
    /// ring (and precision, for reals) of the empty-partition value.
    pub fn new(xs: &[R], n_max: usize, unit: &R) -> Result<Self> {
        if xs.len() < n_max {
            return contract(format!("Bell table to {n_max} needs {n_max} arguments, got {}", xs.len()));
        }
        let zero = unit.zero_like();
        let mut rows: Vec<Vec<R>> = vec![vec![unit.one_like()]];
        for n in 1..=n_max {
            let mut row = vec![zero.clone(); n + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                let mut acc = zero.clone();
                for i in 1..=n - k + 1 {
                    let prev = &rows[n - i];
                    if k > prev.len() || prev[k - 1].is_zero() {
                        continue;
                    }
                    let c = Rat::from(binomial(n - 1, i - 1));
                    acc = acc.plus(&xs[i - 1].times(&prev[k - 1]).scaled(&c));
                }
                *slot = acc;
            }
            rows.push(row);
        }
        Ok(BellTable { rows })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &R {
        &self.rows[n][k]
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }
}

/// n-th derivative of `φ∘ψ` at a point by Faà di Bruno:
/// `Σ_k φ^{(k)}(ψ(t0)) B_{n,k}(ψ'(t0), ..., ψ^{(n-k+1)}(t0))`.
///
/// `outer[k] = φ^{(k)}(ψ(t0))` and `inner[j] = ψ^{(j)}(t0)`; both need
/// entries through index `n` (`inner[0]` is not used).
pub fn faa_derivative<R: Ring>(outer: &[R], inner: &[R], n: usize) -> Result<R> {
    if outer.len() <= n || inner.len() <= n {
        return contract(format!("Faà di Bruno at order {n} needs {} derivatives of each function", n + 1));
    }
    let table = BellTable::new(&inner[1..=n], n, &outer[0])?;
    let mut acc = outer[0].zero_like();
    for (k, b) in table.row(n).iter().enumerate() {
        acc = acc.plus(&outer[k].times(b));
    }
    Ok(acc)
}
