/// An ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }
}

/// Iterator over the compositions of `n` into exactly `m` parts, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    n: usize,
    current: Option<Vec<usize>>,
}

/// Every ordered `m`-tuple of positive integers summing to `n`, once each.
/// `compositions(0, 0)` yields the empty tuple; when `m > n` (or `m = 0 < n`)
/// the stream is empty.
pub fn compositions(n: usize, m: usize) -> Compositions {
    let current = if m == 0 {
        (n == 0).then(Vec::new)
    } else if m > n {
        None
    } else {
        let mut first = vec![1; m];
        first[m - 1] = n - m + 1;
        Some(first)
    };
    Compositions { n, current }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.take()?;
        let m = out.len();
        if m >= 2 {
            // rightmost position whose suffix can give up one unit
            let mut suffix = out[m - 1];
            for i in (0..m - 1).rev() {
                if suffix > m - i - 1 {
                    let mut next = out.clone();
                    next[i] += 1;
                    let prefix: usize = next[..=i].iter().sum();
                    for slot in next.iter_mut().take(m - 1).skip(i + 1) {
                        *slot = 1;
                    }
                    next[m - 1] = self.n - prefix - (m - i - 2);
                    self.current = Some(next);
                    break;
                }
                suffix += out[i];
            }
        }
        Some(Composition(out))
    }
}
