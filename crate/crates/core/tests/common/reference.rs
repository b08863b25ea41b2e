//! Closed-form reference expressions for the exponents and f_{1,k}, built
//! with `AssocPoly::bracket` only (no engine or Lie-form code).
//!
//! Index conventions: `i < j` always, the tail indices
//! satisfy `i < k < l < h < m`, and `j` is unrelated to the tail.

#![allow(dead_code)]

use zassenhaus_core::freealg::{rational, AlgebraCtx, AssocPoly, Rational};

pub fn x(ctx: AlgebraCtx, i: usize) -> AssocPoly {
    AssocPoly::generator(ctx, i).unwrap()
}

/// Left-nested `[[[a, b], c], ...]`.
pub fn left(ctx: AlgebraCtx, letters: &[usize]) -> AssocPoly {
    let mut acc = x(ctx, letters[0]);
    for &l in &letters[1..] {
        acc = acc.bracket(&x(ctx, l)).unwrap();
    }
    acc
}

/// Right-nested `[a, [b, [c, d]]]`.
pub fn right(ctx: AlgebraCtx, letters: &[usize]) -> AssocPoly {
    let (last, rest) = letters.split_last().unwrap();
    let mut acc = x(ctx, *last);
    for &l in rest.iter().rev() {
        acc = x(ctx, l).bracket(&acc).unwrap();
    }
    acc
}

fn sum(ctx: AlgebraCtx, items: impl IntoIterator<Item = AssocPoly>) -> AssocPoly {
    items
        .into_iter()
        .fold(AssocPoly::zero(ctx), |acc, p| acc.add(&p).unwrap())
}

/// Strictly increasing index tuples of the given length with first entry
/// greater than `above`.
fn chains(n: usize, above: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (above + 1)..=n {
        for mut rest in chains(n, first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `sum_{i<j, i<k<l<...} [X_j X_i^{m0} X_k^{m1} X_l^{m2} ...]`, the family
/// shape used throughout the displays.
pub fn family(ctx: AlgebraCtx, mults: &[usize]) -> AssocPoly {
    let n = ctx.n();
    let mut terms = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for tail in chains(n, i, mults.len() - 1) {
                let mut letters = vec![j];
                let indices: Vec<usize> = std::iter::once(i).chain(tail).collect();
                for (&index, &mult) in indices.iter().zip(mults) {
                    letters.extend(std::iter::repeat_n(index, mult));
                }
                terms.push(left(ctx, &letters));
            }
        }
    }
    sum(ctx, terms)
}

/// `sum_{i1<j1} [F, [X_{j1}, X_{i1}]]` where `F` runs over `family(mults)`.
pub fn cross_family(ctx: AlgebraCtx, mults: &[usize]) -> AssocPoly {
    let outer = family(ctx, mults);
    let inner = family(ctx, &[1]);
    outer.bracket(&inner).unwrap()
}

pub type Display = Vec<(Rational, AssocPoly, &'static str)>;

pub fn combine(ctx: AlgebraCtx, display: &Display) -> AssocPoly {
    let mut acc = AssocPoly::zero(ctx);
    for (c, p, _) in display {
        acc.add_scaled(c, p).unwrap();
    }
    acc
}

fn fam(
    ctx: AlgebraCtx,
    c: (i64, i64),
    mults: &[usize],
    label: &'static str,
) -> (Rational, AssocPoly, &'static str) {
    (rational(c.0, c.1), family(ctx, mults), label)
}

pub fn f11(ctx: AlgebraCtx) -> AssocPoly {
    family(ctx, &[1])
}

pub fn f12(ctx: AlgebraCtx) -> AssocPoly {
    combine(
        ctx,
        &vec![
            fam(ctx, (1, 1), &[1, 1], "[j i k]"),
            fam(ctx, (1, 2), &[2], "[j i i]"),
        ],
    )
}

pub fn f13(ctx: AlgebraCtx) -> AssocPoly {
    combine(
        ctx,
        &vec![
            fam(ctx, (1, 6), &[3], "[j i i i]"),
            fam(ctx, (1, 2), &[2, 1], "[j i i k]"),
            fam(ctx, (1, 2), &[1, 2], "[j i k k]"),
            fam(ctx, (1, 1), &[1, 1, 1], "[j i k l]"),
        ],
    )
}

/// The first (right-nested) form of the `f_{1,3}` display:
/// `-(sum [X_l,[X_k,[X_i,X_j]]] + 1/2 sum [X_k,[X_k,[X_i,X_j]]]
///   + 1/2 sum [X_k,[X_i,[X_i,X_j]]] + 1/6 sum [X_i,[X_i,[X_i,X_j]]])`.
pub fn f13_right_nested(ctx: AlgebraCtx) -> AssocPoly {
    let n = ctx.n();
    let mut acc = AssocPoly::zero(ctx);
    let mut add = |c: Rational, p: AssocPoly| acc.add_scaled(&c, &p).unwrap();
    for i in 1..=n {
        for j in (i + 1)..=n {
            add(rational(-1, 6), right(ctx, &[i, i, i, j]));
            for k in (i + 1)..=n {
                add(rational(-1, 2), right(ctx, &[k, k, i, j]));
                add(rational(-1, 2), right(ctx, &[k, i, i, j]));
                for l in (k + 1)..=n {
                    add(rational(-1, 1), right(ctx, &[l, k, i, j]));
                }
            }
        }
    }
    acc
}

pub fn f14(ctx: AlgebraCtx) -> AssocPoly {
    combine(
        ctx,
        &vec![
            fam(ctx, (1, 24), &[4], ""),
            fam(ctx, (1, 6), &[3, 1], ""),
            fam(ctx, (1, 6), &[1, 3], ""),
            fam(ctx, (1, 4), &[2, 2], ""),
            fam(ctx, (1, 2), &[1, 1, 2], ""),
            fam(ctx, (1, 2), &[1, 2, 1], ""),
            fam(ctx, (1, 2), &[2, 1, 1], ""),
            fam(ctx, (1, 1), &[1, 1, 1, 1], ""),
        ],
    )
}

pub fn f15(ctx: AlgebraCtx) -> AssocPoly {
    combine(
        ctx,
        &vec![
            fam(ctx, (1, 120), &[5], ""),
            fam(ctx, (1, 24), &[4, 1], ""),
            fam(ctx, (1, 24), &[1, 4], ""),
            fam(ctx, (1, 12), &[3, 2], ""),
            fam(ctx, (1, 12), &[2, 3], ""),
            fam(ctx, (1, 6), &[3, 1, 1], ""),
            fam(ctx, (1, 6), &[1, 3, 1], ""),
            fam(ctx, (1, 6), &[1, 1, 3], ""),
            fam(ctx, (1, 4), &[2, 2, 1], ""),
            fam(ctx, (1, 4), &[1, 2, 2], ""),
            fam(ctx, (1, 4), &[2, 1, 2], ""),
            fam(ctx, (1, 2), &[2, 1, 1, 1], ""),
            fam(ctx, (1, 2), &[1, 2, 1, 1], ""),
            fam(ctx, (1, 2), &[1, 1, 2, 1], ""),
            fam(ctx, (1, 2), &[1, 1, 1, 2], ""),
            fam(ctx, (1, 1), &[1, 1, 1, 1, 1], ""),
        ],
    )
}

pub fn w2(ctx: AlgebraCtx) -> AssocPoly {
    f11(ctx).scale(&rational(1, 2))
}

pub fn w3(ctx: AlgebraCtx) -> AssocPoly {
    combine(
        ctx,
        &vec![fam(ctx, (1, 3), &[1, 1], ""), fam(ctx, (1, 6), &[2], "")],
    )
}

pub fn w4(ctx: AlgebraCtx) -> AssocPoly {
    combine(
        ctx,
        &vec![
            fam(ctx, (1, 24), &[3], ""),
            fam(ctx, (1, 8), &[2, 1], ""),
            fam(ctx, (1, 8), &[1, 2], ""),
            fam(ctx, (1, 4), &[1, 1, 1], ""),
        ],
    )
}

/// Two-variable exponents with `X = X1`, `Y = X2`:
/// `W2 = -1/2 [X,Y]`, `W3 = 1/3 [Y,[X,Y]] + 1/6 [X,[X,Y]]`,
/// `W4 = -1/24 [X,[X,[X,Y]]] - 1/8 ([Y,[X,[X,Y]]] + [Y,[Y,[X,Y]]])`.
pub fn two_variable(ctx: AlgebraCtx) -> [AssocPoly; 3] {
    assert_eq!(ctx.n(), 2);
    let r = |letters: &[usize]| right(ctx, letters);
    let w2 = r(&[1, 2]).scale(&rational(-1, 2));
    let w3 = r(&[2, 1, 2])
        .scale(&rational(1, 3))
        .add(&r(&[1, 1, 2]).scale(&rational(1, 6)))
        .unwrap();
    let w4 = r(&[1, 1, 1, 2])
        .scale(&rational(-1, 24))
        .add(
            &r(&[2, 1, 1, 2])
                .add(&r(&[2, 2, 1, 2]))
                .unwrap()
                .scale(&rational(-1, 8)),
        )
        .unwrap();
    [w2, w3, w4]
}

/// `W_5` as a weighted sum of bracket families.
pub fn w5_display(ctx: AlgebraCtx) -> Display {
    vec![
        fam(ctx, (1, 120), &[4], "[j i i i i]"),
        fam(ctx, (1, 30), &[3, 1], "[j i i i k]"),
        fam(ctx, (1, 30), &[1, 3], "[j i k k k]"),
        fam(ctx, (1, 20), &[2, 2], "[j i i k k]"),
        fam(ctx, (1, 10), &[1, 1, 2], "[j i k l l]"),
        fam(ctx, (1, 10), &[1, 2, 1], "[j i k k l]"),
        fam(ctx, (1, 10), &[2, 1, 1], "[j i i k l]"),
        fam(ctx, (1, 5), &[1, 1, 1, 1], "[j i k l h]"),
        (
            rational(1, 10),
            cross_family(ctx, &[1, 1]),
            "[[j2 i2 k2], [j1 i1]]",
        ),
        (
            rational(1, 20),
            cross_family(ctx, &[2]),
            "[[j3 i3 i3], [j1 i1]]",
        ),
    ]
}

/// `W_6` as a weighted sum of bracket families.
pub fn w6_display(ctx: AlgebraCtx) -> Display {
    vec![
        fam(ctx, (1, 720), &[5], "[j i^5]"),
        fam(ctx, (1, 144), &[4, 1], "[j i^4 k]"),
        fam(ctx, (1, 144), &[1, 4], "[j i k^4]"),
        fam(ctx, (1, 72), &[3, 2], "[j i^3 k^2]"),
        fam(ctx, (1, 72), &[2, 3], "[j i^2 k^3]"),
        fam(ctx, (1, 36), &[3, 1, 1], "[j i^3 k l]"),
        fam(ctx, (1, 36), &[1, 3, 1], "[j i k^3 l]"),
        fam(ctx, (1, 36), &[1, 1, 3], "[j i k l^3]"),
        fam(ctx, (1, 24), &[2, 2, 1], "[j i^2 k^2 l]"),
        fam(ctx, (1, 24), &[1, 2, 2], "[j i k^2 l^2]"),
        fam(ctx, (1, 24), &[2, 1, 2], "[j i^2 k l^2]"),
        fam(ctx, (1, 12), &[2, 1, 1, 1], "[j i^2 k l h]"),
        fam(ctx, (1, 12), &[1, 2, 1, 1], "[j i k^2 l h]"),
        fam(ctx, (1, 12), &[1, 1, 2, 1], "[j i k l^2 h]"),
        fam(ctx, (1, 12), &[1, 1, 1, 2], "[j i k l h^2]"),
        fam(ctx, (1, 6), &[1, 1, 1, 1, 1], "[j i k l h m]"),
        (
            rational(1, 72),
            cross_family(ctx, &[3]),
            "[[j2 i2^3], [j1 i1]]",
        ),
        (
            rational(1, 24),
            cross_family(ctx, &[2, 1]),
            "[[j3 i3^2 k3], [j1 i1]]",
        ),
        (
            rational(1, 24),
            cross_family(ctx, &[1, 2]),
            "[[j3 i3 k3^2], [j1 i1]]",
        ),
        (
            rational(1, 12),
            cross_family(ctx, &[1, 1, 1]),
            "[[j4 i4 k4 l4], [j1 i1]]",
        ),
    ]
}

/// Exact least-squares-free recovery: solves `sum c_i P_i = target` by
/// Gaussian elimination over the rationals. Returns `None` unless the
/// columns are independent and the system is consistent.
pub fn recover_coefficients(target: &AssocPoly, columns: &[AssocPoly]) -> Option<Vec<Rational>> {
    use num_traits::Zero;
    use std::collections::BTreeSet;
    let words: BTreeSet<_> = columns
        .iter()
        .chain(std::iter::once(target))
        .flat_map(|p| p.terms().map(|(w, _)| w.clone()).collect::<Vec<_>>())
        .collect();
    let width = columns.len();
    let mut rows: Vec<Vec<Rational>> = words
        .iter()
        .map(|w| {
            let mut row: Vec<Rational> = columns.iter().map(|p| p.coeff(w)).collect();
            row.push(target.coeff(w));
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..width {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][col].clone();
        for v in rows[pivot_row].iter_mut() {
            *v = &*v / &pivot;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let source = rows[pivot_row].clone();
                for (v, s) in rows[r].iter_mut().zip(source) {
                    *v -= &factor * s;
                }
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[width].is_zero()) {
        return None;
    }
    Some((0..width).map(|c| rows[c][width].clone()).collect())
}
