use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows beyond this index are computed on the fly and not cached.
const CACHE_ROWS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    FirstUnsigned,
    Second,
}

/// Memoized triangle; row `n` holds entries `k = 0..=n`.
///
/// Rows are published as immutable `Arc<[BigInt]>` and only appended under
/// the write lock, so readers see either a complete row or none.
#[derive(Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: RwLock<Vec<Arc<[BigInt]>>>,
}

impl StirlingTriangle {
    pub fn new(kind: StirlingKind) -> Self {
        let first: Arc<[BigInt]> = Arc::from(vec![BigInt::one()]);
        StirlingTriangle {
            kind,
            rows: RwLock::new(vec![first]),
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Number of rows built so far.
    pub fn len(&self) -> usize {
        self.rows.read().expect("stirling lock").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn row(&self, n: usize) -> Arc<[BigInt]> {
        if let Some(r) = self.rows.read().expect("stirling lock").get(n) {
            return Arc::clone(r);
        }
        let mut rows = self.rows.write().expect("stirling lock");
        while rows.len() <= n {
            let next = next_row(self.kind, rows.last().expect("row 0"));
            rows.push(Arc::from(next));
        }
        Arc::clone(&rows[n])
    }

    pub fn entry(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.row(n)[k].clone()
    }
}

fn next_row(kind: StirlingKind, prev: &[BigInt]) -> Vec<BigInt> {
    let n = prev.len() - 1;
    let mut row = vec![BigInt::zero(); n + 2];
    for k in 1..=n + 1 {
        let carry = &prev[k - 1];
        let stay = if k <= n {
            let mult = match kind {
                StirlingKind::FirstUnsigned => n,
                StirlingKind::Second => k,
            };
            &prev[k] * mult
        } else {
            BigInt::zero()
        };
        row[k] = stay + carry;
    }
    row
}

fn first() -> &'static StirlingTriangle {
    static T: OnceLock<StirlingTriangle> = OnceLock::new();
    T.get_or_init(|| StirlingTriangle::new(StirlingKind::FirstUnsigned))
}

fn second() -> &'static StirlingTriangle {
    static T: OnceLock<StirlingTriangle> = OnceLock::new();
    T.get_or_init(|| StirlingTriangle::new(StirlingKind::Second))
}

fn table(kind: StirlingKind) -> &'static StirlingTriangle {
    match kind {
        StirlingKind::FirstUnsigned => first(),
        StirlingKind::Second => second(),
    }
}

fn lookup(kind: StirlingKind, n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n < CACHE_ROWS {
        return table(kind).entry(n, k);
    }
    column(kind, n, k).swap_remove(n)
}

/// Column `k` for rows `0..=n_max`, by the recurrence restricted to columns
/// `0..=k`. Costs O(n·k) and never touches the shared cache.
fn column(kind: StirlingKind, n_max: usize, k: usize) -> Vec<BigInt> {
    let mut cur = vec![BigInt::zero(); k + 1];
    cur[0] = BigInt::one();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(cur[k].clone());
    for n in 0..n_max {
        for j in (1..=k.min(n + 1)).rev() {
            let mult = match kind {
                StirlingKind::FirstUnsigned => n,
                StirlingKind::Second => j,
            };
            let stay = &cur[j] * mult;
            cur[j] = stay + &cur[j - 1];
        }
        cur[0] = BigInt::zero();
        out.push(cur[k].clone());
    }
    out
}

/// Unsigned Stirling number of the first kind, the coefficient of `x^k` in
/// `x(x+1)…(x+n−1)`.
///
/// # Example
/// ```
/// use invfac::exact_core::stirling1_unsigned;
/// assert_eq!(stirling1_unsigned(4, 2), 11.into());
/// assert_eq!(stirling1_unsigned(3, 5), 0.into());
/// ```
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    lookup(StirlingKind::FirstUnsigned, n, k)
}

/// Signed variant `(−1)^{n−k}⎡n k⎤`.
pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    let v = stirling1_unsigned(n, k);
    if (n + k) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    lookup(StirlingKind::Second, n, k)
}

/// Row `n` of the unsigned first-kind triangle (`k = 0..=n`).
pub fn stirling1_row(n: usize) -> Arc<[BigInt]> {
    if n < CACHE_ROWS {
        first().row(n)
    } else {
        uncached_row(StirlingKind::FirstUnsigned, n)
    }
}

pub fn stirling2_row(n: usize) -> Arc<[BigInt]> {
    if n < CACHE_ROWS {
        second().row(n)
    } else {
        uncached_row(StirlingKind::Second, n)
    }
}

fn uncached_row(kind: StirlingKind, n: usize) -> Arc<[BigInt]> {
    let mut row = table(kind).row(CACHE_ROWS - 1).to_vec();
    while row.len() <= n {
        row = next_row(kind, &row);
    }
    Arc::from(row)
}

/// `⎡n k⎤` for `n = 0..=n_max`, cheap when `k` is small.
pub fn stirling1_column(k: usize, n_max: usize) -> Vec<BigInt> {
    column(StirlingKind::FirstUnsigned, n_max, k)
}
