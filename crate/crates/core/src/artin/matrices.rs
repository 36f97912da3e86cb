use super::generators::GeneratorSet;
use super::qdet::quasiminors;
use crate::lattice::{integer_kernel, rank, same_column_span_z, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// M with labelled rows and columns, the kernel candidate K, and the companion Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrixBundle {
    pub m: IntMatrix,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Generator index of each column.
    pub col_vars: Vec<usize>,
    /// Arrow index of each row.
    pub row_arrows: Vec<usize>,
    pub k: IntMatrix,
    pub q: IntMatrix,
}

/// Arrow rows: k_ℓ..k_1, a_{01}..a_{n0}, c_{0n}, c_{n,n−1}..c_{10}; for a = 1: k_ℓ..k_1, a2, a1, c1, c2.
fn row_order(s: &GeneratorSet) -> Vec<usize> {
    let q = &s.quiver;
    let idx = |l: &str| q.arrow_index(l).unwrap();
    let ell = q.extra_count();
    let mut rows: Vec<usize> = (1..=ell).rev().map(|h| idx(&format!("k{h}"))).collect();
    if q.is_degenerate() {
        rows.extend(["a2", "a1", "c1", "c2"].iter().map(|l| idx(l)));
    } else {
        rows.extend((0..=q.n).map(|v| q.anticlockwise_from(v)));
        rows.push(q.clockwise_from(0));
        rows.extend((1..=q.n).rev().map(|v| q.clockwise_from(v)));
    }
    rows
}

/// Column order of the generators in M and K.
pub fn column_order(s: &GeneratorSet) -> Vec<usize> {
    let m = s.m();
    let mut cols = Vec::with_capacity(s.len());
    if s.quiver.is_degenerate() {
        cols.push(s.idx(m + 1, 0));
        cols.extend((1..=m).rev().map(|i| s.idx(i, 1)));
        cols.extend((0..=m).map(|i| s.idx(i, 0)));
        return cols;
    }
    cols.extend((1..=m).rev().map(|t| s.idx(t, s.s[t])));
    for t in 1..=m {
        cols.extend((1..s.s[t]).rev().map(|j| s.idx(t, j)));
    }
    cols.push(s.idx(m, 0));
    cols.push(s.idx(0, 0));
    cols.push(s.idx(m + 1, 0));
    cols.extend((1..m).map(|i| s.idx(i, 0)));
    cols
}

pub fn build_m(s: &GeneratorSet) -> (IntMatrix, Vec<usize>, Vec<usize>) {
    let rows = row_order(s);
    let cols = column_order(s);
    let columns: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|&z| rows.iter().map(|&a| BigInt::from(s.vars[z].image.exponent(a))).collect())
        .collect();
    (IntMatrix::from_columns(rows.len(), &columns).unwrap(), rows, cols)
}

/// Exponent vectors of the relations z_{0,0}·b_j − b_1·W_1⋯W_{j−1}·a_j in column order,
/// j = m+1 first and then j = 2..m, with +1 on z_{0,0}.
pub fn build_k(s: &GeneratorSet) -> IntMatrix {
    let cols = column_order(s);
    let m = s.m();
    let minors = quasiminors(s);
    let pick = |j: usize| minors.iter().find(|f| f.i == 1 && f.j == j).unwrap();
    let order = std::iter::once(m + 1).chain(2..=m);
    let columns: Vec<Vec<BigInt>> = order
        .map(|j| {
            let f = pick(j);
            let mut v = vec![BigInt::zero(); cols.len()];
            for (var, e) in f.lhs.iter() {
                v[cols.iter().position(|&k| k == var).unwrap()] += e;
            }
            for (var, e) in f.rhs.iter() {
                v[cols.iter().position(|&k| k == var).unwrap()] -= e;
            }
            v
        })
        .collect();
    IntMatrix::from_columns(cols.len(), &columns).unwrap()
}

/// [Id | K'] where K' permutes and signs the columns of K so that its bottom block is the identity.
/// Returns `None` when K's bottom block is not a signed permutation matrix.
pub fn build_q(k: &IntMatrix) -> Option<IntMatrix> {
    let n = k.rows();
    let c = k.cols();
    let top = n - c;
    let mut placed: Vec<Option<Vec<BigInt>>> = vec![None; c];
    for col in k.columns() {
        let nz: Vec<usize> = (top..n).filter(|&r| !col[r].is_zero()).collect();
        if nz.len() != 1 || !col[nz[0]].abs().is_one() {
            return None;
        }
        let slot = nz[0] - top;
        if placed[slot].is_some() {
            return None;
        }
        let sign = col[nz[0]].clone();
        placed[slot] = Some(col.into_iter().map(|x| x * &sign).collect());
    }
    let kp: Vec<Vec<BigInt>> = placed.into_iter().collect::<Option<_>>()?;
    let kp = IntMatrix::from_columns(n, &kp).ok()?;
    IntMatrix::identity(n).block(0..n, 0..top).hcat(&kp).ok()
}

pub fn exponent_matrices(s: &GeneratorSet) -> ExponentMatrixBundle {
    let (m, rows, cols) = build_m(s);
    let k = build_k(s);
    let q = build_q(&k).unwrap_or_else(|| IntMatrix::zeros(cols.len(), cols.len()));
    ExponentMatrixBundle {
        row_labels: rows.iter().map(|&a| s.quiver.arrows[a].label.clone()).collect(),
        col_labels: cols.iter().map(|&z| s.name(z).to_string()).collect(),
        col_vars: cols,
        row_arrows: rows,
        m,
        k,
        q,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub mk_zero: bool,
    pub spans_equal: bool,
    pub rank_m: usize,
    pub expected_rank: usize,
    pub k_columns: usize,
    pub q_unitriangular: bool,
    pub q_determinant: String,
    pub block_form: bool,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.mk_zero && self.spans_equal && self.rank_m == self.expected_rank && self.q_unitriangular && self.block_form
    }
}

/// Compares the SNF kernel of M with the column span of K, and checks Q and the block shape of M.
pub fn kernel_report(s: &GeneratorSet) -> KernelReport {
    let b = exponent_matrices(s);
    let ell1 = s.m();
    let mk_zero = b.m.mul(&b.k).map(|p| p.is_zero()).unwrap_or(false);
    let ker = integer_kernel(&b.m);
    let q_ok = build_q(&b.k).is_some() && is_unitriangular(&b.q);
    KernelReport {
        mk_zero,
        spans_equal: same_column_span_z(&ker, &b.k),
        rank_m: rank(&b.m),
        expected_rank: s.len() - ell1,
        k_columns: b.k.cols(),
        q_unitriangular: q_ok,
        q_determinant: b.q.determinant().map(|d| d.to_string()).unwrap_or_default(),
        block_form: block_form_holds(s, &b.m),
    }
}

pub fn verify_kernel_spanning(s: &GeneratorSet) -> bool {
    let r = kernel_report(s);
    r.mk_zero && r.spans_equal
}

fn is_unitriangular(q: &IntMatrix) -> bool {
    q.rows() == q.cols()
        && (0..q.rows()).all(|i| {
            (0..q.cols()).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => q[(i, j)].is_one(),
                std::cmp::Ordering::Greater => q[(i, j)].is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
}

fn identity_like(m: &IntMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>, anti: bool) -> bool {
    let b = m.block(rows, cols);
    b.rows() == b.cols()
        && (0..b.rows()).all(|i| {
            (0..b.cols()).all(|j| {
                let on = if anti { i + j + 1 == b.cols() } else { i == j };
                b[(i, j)] == BigInt::from(on as i64)
            })
        })
}

fn constant_block(m: &IntMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>, value: i64) -> bool {
    let b = m.block(rows, cols);
    (0..b.rows()).all(|i| (0..b.cols()).all(|j| b[(i, j)] == BigInt::from(value)))
}

/// The identity, anti-identity and all-ones blocks that M must contain.
pub fn block_form_holds(s: &GeneratorSet, m: &IntMatrix) -> bool {
    let q = &s.quiver;
    if q.is_degenerate() {
        let r = s.group.r() as usize;
        return m.rows() == r + 2
            && m.cols() == 2 * r
            && identity_like(m, 0..r, 0..r, false)
            && identity_like(m, 0..r, r..2 * r, true)
            && constant_block(m, r..r + 1, 0..r, 0)
            && constant_block(m, r..r + 1, r..2 * r, 1)
            && constant_block(m, r + 1..r + 2, 0..r, 1)
            && constant_block(m, r + 1..r + 2, r..2 * r, 0);
    }
    let ell = q.extra_count();
    let n = q.n;
    let (arows, crows) = (ell..ell + n + 1, ell + n + 1..ell + 2 * n + 2);
    let mid = ell..ell + n + 1;
    let (z00, zlast) = (ell + n + 1, ell + n + 2);
    let tail = ell + n + 3..m.cols();
    m.rows() == ell + 2 * n + 2
        && m.cols() == 2 * ell + n + 3
        && identity_like(m, 0..ell, 0..ell, false)
        && constant_block(m, 0..ell, mid.clone(), 0)
        && identity_like(m, arows.clone(), mid.clone(), false)
        && identity_like(m, crows.clone(), mid, true)
        && constant_block(m, crows.clone(), z00..z00 + 1, 1)
        && constant_block(m, 0..crows.start, z00..z00 + 1, 0)
        && constant_block(m, arows.clone(), zlast..zlast + 1, 1)
        && constant_block(m, 0..ell, zlast..zlast + 1, 0)
        && constant_block(m, crows, zlast..zlast + 1, 0)
        && identity_like(m, 0..ell, tail.clone(), true)
        && constant_block(m, arows, tail, 0)
}
