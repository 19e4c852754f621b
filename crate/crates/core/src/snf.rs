//! Smith normal form over a Euclidean scalar and the lattice solver built on
//! it.
//!
//! The reduction keeps all four transforms, so callers can move freely between
//! the original basis and the diagonalized one:
//!
//! ```text
//!   u * m * v == s,   u * u_inv == 1,   v * v_inv == 1
//! ```
//!
//! Over a field every nonzero pivot is a unit, so the same code performs plain
//! Gaussian elimination with a 0/1 diagonal. Pivot choice is deterministic
//! (first entry of minimal Euclidean size), which keeps every downstream
//! representative choice reproducible.

use crate::matrix::Mat;
use crate::scalar::EuclideanScalar;
use crate::Int;
use num_traits::One;


#[derive(Clone)]
pub struct Snf<T> {
    pub s: Mat<T>,
    pub u: Mat<T>,
    pub u_inv: Mat<T>,
    pub v: Mat<T>,
    pub v_inv: Mat<T>,
    /// Number of nonzero diagonal entries of `s`.
    pub rank: usize,
}

impl<T: EuclideanScalar> Snf<T> {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Columns of `v` spanning the kernel lattice of the original matrix.
    pub fn kernel_basis(&self) -> Mat<T> {
        let idx: Vec<usize> = (self.rank..self.v.cols()).collect();
        self.v.select_columns(&idx)
    }
}

/// Euclidean size used for pivot selection; `None` for zero entries.
fn pivot_size<T: EuclideanScalar>(x: &T) -> Option<Int> {
    if x.is_zero() {
        None
    } else {
        Some(x.euclidean_size())
    }
}

pub fn smith_normal_form<T: EuclideanScalar>(m: &Mat<T>) -> Snf<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = Mat::<T>::identity(rows);
    let mut u_inv = Mat::<T>::identity(rows);
    let mut v = Mat::<T>::identity(cols);
    let mut v_inv = Mat::<T>::identity(cols);

    // Row op `r_a += c * r_b` on s corresponds to the same op on u and the
    // inverse column op on u_inv; analogously for columns and v.
    macro_rules! row_op {
        ($a:expr, $b:expr, $c:expr) => {{
            let c = $c;
            s.add_row_multiple($a, $b, &c);
            u.add_row_multiple($a, $b, &c);
            u_inv.add_col_multiple($b, $a, &(-c));
        }};
    }
    macro_rules! col_op {
        ($a:expr, $b:expr, $c:expr) => {{
            let c = $c;
            s.add_col_multiple($a, $b, &c);
            v.add_col_multiple($a, $b, &c);
            v_inv.add_row_multiple($b, $a, &(-c));
        }};
    }

    let mut k = 0;
    let limit = rows.min(cols);
    while k < limit {
        // Deterministic pivot: minimal Euclidean size, then smallest (i, j).
        let mut best: Option<(Int, usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if let Some(sz) = pivot_size(&s[(i, j)]) {
                    let better = match &best {
                        None => true,
                        Some((bsz, _, _)) => sz < *bsz,
                    };
                    if better {
                        let exact_unit = sz == Int::one();
                        best = Some((sz, i, j));
                        if exact_unit {
                            // A unit pivot cannot be improved.
                            break;
                        }
                    }
                }
            }
            if matches!(&best, Some((sz, _, _)) if *sz == Int::one()) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else { break };

        s.swap_rows(k, pi);
        u.swap_rows(k, pi);
        u_inv.swap_cols(k, pi);
        s.swap_cols(k, pj);
        v.swap_cols(k, pj);
        v_inv.swap_rows(k, pj);

        'reduce: loop {
            // Clear the pivot column.
            for i in k + 1..rows {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = s[(i, k)].div_rem_euclid(&s[(k, k)]);
                row_op!(i, k, -q);
                if !r.is_zero() {
                    // Remainder is strictly smaller: promote it to pivot.
                    s.swap_rows(k, i);
                    u.swap_rows(k, i);
                    u_inv.swap_cols(k, i);
                    continue 'reduce;
                }
            }
            // Clear the pivot row.
            for j in k + 1..cols {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = s[(k, j)].div_rem_euclid(&s[(k, k)]);
                col_op!(j, k, -q);
                if !r.is_zero() {
                    s.swap_cols(k, j);
                    v.swap_cols(k, j);
                    v_inv.swap_rows(k, j);
                    continue 'reduce;
                }
            }
            // Column may have been refilled by the row sweep.
            if (k + 1..rows).any(|i| !s[(i, k)].is_zero()) {
                continue 'reduce;
            }
            // Divisibility: the pivot must divide the rest of the submatrix.
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    let (_, r) = s[(i, j)].div_rem_euclid(&s[(k, k)]);
                    if !r.is_zero() {
                        row_op!(k, i, T::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'reduce;
            }
        }

        // Canonical associate: positive pivot over the integers, 1 over fields.
        let unit = s[(k, k)].normalizing_unit();
        if !unit.is_one() {
            let (unit_inv, r) = T::one().div_rem_euclid(&unit);
            debug_assert!(r.is_zero());
            s.scale_row(k, &unit);
            u.scale_row(k, &unit);
            u_inv.scale_col(k, &unit_inv);
        }
        k += 1;
    }

    debug_assert_eq!(u.mul(m).mul(&v), s, "snf transform mismatch");
    debug_assert_eq!(u.mul(&u_inv), Mat::identity(rows));
    debug_assert_eq!(v.mul(&v_inv), Mat::identity(cols));

    Snf { s, u, u_inv, v, v_inv, rank: k }
}

/// Rank of the matrix over its scalar's fraction field (for fields, the rank).
pub fn rank<T: EuclideanScalar>(m: &Mat<T>) -> usize {
    smith_normal_form(m).rank
}

/// Solves `a · x = b` over the scalar ring, together with membership of `b`
/// in the image lattice: `None` when no exact solution exists.
pub fn solve_with_image<T: EuclideanScalar>(a: &Mat<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len(), "dimension mismatch in solve");
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b);
    let mut y = vec![T::zero(); a.cols()];
    for (i, ub_i) in ub.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = ub_i.div_rem_euclid(&snf.s[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub_i.is_zero() {
            return None;
        }
    }
    let x = snf.v.mul_vec(&y);
    debug_assert_eq!(a.mul_vec(&x), b.to_vec());
    Some(x)
}

/// Whether `m` presents the trivial cokernel: full row rank with all
/// invariant factors units. Used for surjectivity checks.
pub fn has_trivial_cokernel<T: EuclideanScalar>(m: &Mat<T>) -> bool {
    let snf = smith_normal_form(m);
    snf.rank == m.rows() && snf.invariant_factors().iter().all(|d| d.is_unit())
}
