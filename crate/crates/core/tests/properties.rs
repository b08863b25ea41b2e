use proptest::prelude::*;
use zassenhaus_core::freealg::{rational, AlgebraCtx, AssocPoly, Word};
use zassenhaus_core::lieform::{
    compositions, dsw_project, parse, render, CommTerm, LieExpr, RenderFormat,
};

const N: usize = 3;
const K: usize = 5;

fn ctx() -> AlgebraCtx {
    AlgebraCtx::new(N, K).unwrap()
}

fn word_strategy(min_len: usize, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1..=N as u8, min_len..=max_len)
}

fn coeff_strategy() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

fn poly_strategy(min_len: usize, max_len: usize) -> impl Strategy<Value = AssocPoly> {
    prop::collection::vec((word_strategy(min_len, max_len), coeff_strategy()), 0..6).prop_map(
        |terms| {
            AssocPoly::from_terms(
                ctx(),
                terms
                    .into_iter()
                    .map(|(w, (p, q))| (Word::from_letters(w), rational(p, q))),
            )
            .unwrap()
        },
    )
}

/// Polynomials with zero constant term.
fn nilpotent_strategy() -> impl Strategy<Value = AssocPoly> {
    poly_strategy(1, 3)
}

fn homogeneous_strategy(d: usize) -> impl Strategy<Value = AssocPoly> {
    poly_strategy(d, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(0, 2), b in poly_strategy(0, 2), c in poly_strategy(0, 2)) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().mul(&c).unwrap(),
            a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn bracket_identities(a in poly_strategy(1, 2), b in poly_strategy(1, 2), c in poly_strategy(1, 1)) {
        let ab = a.bracket(&b).unwrap();
        prop_assert!(ab.add(&b.bracket(&a).unwrap()).unwrap().is_zero());
        let jacobi = a.bracket(&b.bracket(&c).unwrap()).unwrap()
            .add(&b.bracket(&c.bracket(&a).unwrap()).unwrap()).unwrap()
            .add(&c.bracket(&a.bracket(&b).unwrap()).unwrap()).unwrap();
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn exp_inverse(a in nilpotent_strategy()) {
        let product = a.exp_trunc().unwrap().mul(&a.neg().exp_trunc().unwrap()).unwrap();
        prop_assert_eq!(product, AssocPoly::one(ctx()));
    }

    #[test]
    fn exp_log_inverse(a in nilpotent_strategy()) {
        prop_assert_eq!(a.exp_trunc().unwrap().log_trunc().unwrap(), a.clone());
        let group_like = AssocPoly::one(ctx()).add(&a).unwrap();
        prop_assert_eq!(group_like.log_trunc().unwrap().exp_trunc().unwrap(), group_like);
    }

    #[test]
    fn truncation_consistency(a in nilpotent_strategy(), b in poly_strategy(0, 3), k_small in 1usize..K) {
        let small = AlgebraCtx::new(N, k_small).unwrap();
        let expr = |a: &AssocPoly, b: &AssocPoly| {
            a.exp_trunc().unwrap().mul(b).unwrap().add(&a.bracket(b).unwrap()).unwrap()
                .add(&a.log_trunc_shifted())
                .unwrap()
        };
        let big = expr(&a, &b).truncate_to(small).unwrap();
        let direct = expr(&a.truncate_to(small).unwrap(), &b.truncate_to(small).unwrap());
        prop_assert_eq!(big, direct);
    }

    #[test]
    fn bracket_homogeneity(a in homogeneous_strategy(2), b in homogeneous_strategy(3)) {
        prop_assert!(a.bracket(&b).unwrap().is_homogeneous_of(5));
    }

    #[test]
    fn json_round_trip(a in poly_strategy(0, 4)) {
        prop_assert_eq!(AssocPoly::from_json_str(&a.to_json_string()).unwrap(), a);
    }

    #[test]
    fn comm_terms_are_lie(head in 1..=N as u8, tail in prop::collection::vec((1..=N as u8, 1usize..=2), 0..3), p in -5i64..=5) {
        let t = CommTerm::new(rational(p, 3), head, &tail).unwrap();
        prop_assume!(t.degree() <= K);
        let expanded = t.expand(ctx()).unwrap();
        prop_assert!(expanded.is_homogeneous_of(t.degree()));
        prop_assert_eq!(dsw_project(&expanded).unwrap(), expanded.clone());
        // independent route: nested AssocPoly::bracket
        let letters = t.letters().letters();
        let mut nested = AssocPoly::generator(ctx(), letters[0] as usize).unwrap();
        for &l in &letters[1..] {
            nested = nested.bracket(&AssocPoly::generator(ctx(), l as usize).unwrap()).unwrap();
        }
        prop_assert_eq!(expanded, nested.scale(&rational(p, 3)));
    }

    #[test]
    fn dsw_idempotent(a in homogeneous_strategy(4)) {
        let once = dsw_project(&a).unwrap();
        prop_assert_eq!(dsw_project(&once).unwrap(), once);
    }

    #[test]
    fn expand_linear_and_render_round_trip(
        e1 in lie_expr_strategy(),
        e2 in lie_expr_strategy(),
    ) {
        let c = ctx();
        prop_assert_eq!(
            e1.merge(&e2).expand(c).unwrap(),
            e1.expand(c).unwrap().add(&e2.expand(c).unwrap()).unwrap()
        );
        let text = render(&e1, RenderFormat::Text);
        let parsed = parse(&text).unwrap();
        prop_assert_eq!(parsed.expand(c).unwrap(), e1.expand(c).unwrap());
        prop_assert_eq!(parsed, e1);
    }
}

fn lie_expr_strategy() -> impl Strategy<Value = LieExpr> {
    prop::collection::vec(
        (
            1..=N as u8,
            prop::collection::vec((1..=N as u8, 1usize..=2), 0..2),
            coeff_strategy(),
        ),
        0..5,
    )
    .prop_map(|terms| {
        LieExpr::from_terms(
            terms
                .into_iter()
                .map(|(h, tail, (p, q))| CommTerm::new(rational(p, q), h, &tail).unwrap()),
        )
    })
}

trait LogShift {
    fn log_trunc_shifted(&self) -> AssocPoly;
}

impl LogShift for AssocPoly {
    /// `log(1 + a)`.
    fn log_trunc_shifted(&self) -> AssocPoly {
        AssocPoly::one(self.ctx())
            .add(self)
            .unwrap()
            .log_trunc()
            .unwrap()
    }
}

/// Compositions of `k` from the binary encoding: bit `b` of a `(k-1)`-bit
/// mask set means "cut after position `b + 1`".
fn compositions_by_bitmask(k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << (k - 1)))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..(k - 1) {
                if mask & (1 << bit) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

#[test]
fn composition_counts_match_bitmask_oracle() {
    for k in 1..=12 {
        let got: Vec<Vec<usize>> = compositions(k)
            .unwrap()
            .into_iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(got.len(), 1 << (k - 1));
        let mut sorted_got = got.clone();
        sorted_got.sort();
        let mut oracle = compositions_by_bitmask(k);
        oracle.sort();
        assert_eq!(sorted_got, oracle, "k = {k}");
        for pair in got.windows(2) {
            assert!((pair[0].len(), &pair[0]) < (pair[1].len(), &pair[1]));
        }
    }
    assert_eq!(compositions(10).unwrap().len(), 512);
}

#[test]
fn four_matches_listing() {
    let mut got: Vec<Vec<usize>> = compositions(4)
        .unwrap()
        .into_iter()
        .map(|c| c.parts().to_vec())
        .collect();
    got.sort();
    let mut listed = vec![
        vec![4],
        vec![3, 1],
        vec![1, 3],
        vec![2, 2],
        vec![2, 1, 1],
        vec![1, 2, 1],
        vec![1, 1, 2],
        vec![1, 1, 1, 1],
    ];
    listed.sort();
    assert_eq!(got, listed);
}

#[test]
fn w3_two_variable_text_round_trip() {
    use zassenhaus_core::zassenhaus::{series, PathChoice};
    let s = series(2, 3, PathChoice::Generic).unwrap();
    let w3 = s.term(3).unwrap();
    let form = w3.lie_form().unwrap();
    let parsed = parse(&render(&form, RenderFormat::Text)).unwrap();
    assert_eq!(parsed, form);
    assert_eq!(parsed.expand(s.ctx()).unwrap(), w3.poly);
}
