//! Grouped formulas for `m W_m` in terms of a single level `f_{M,*}` and
//! ad-operators of lower exponents.

use num_bigint::BigInt;

use crate::freealg::{inverse_factorial, Rational};

/// `coeff * ad_{W_a1}^{p1} ... ad_{W_ar}^{pr} f_{level, k}`; `ads` is
/// listed outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdTerm {
    pub coeff: Rational,
    pub ads: Vec<(usize, usize)>,
    pub f: (usize, usize),
}

impl AdTerm {
    fn new(coeff: Rational, ads: &[(usize, usize)], f: (usize, usize)) -> Self {
        AdTerm {
            coeff,
            ads: ads.to_vec(),
            f,
        }
    }
}

fn one() -> Rational {
    Rational::from_integer(BigInt::from(1))
}

fn minus_one() -> Rational {
    Rational::from_integer(BigInt::from(-1))
}

/// Terms of `m W_m` for `m >= 6`. Panics for `m < 6`.
pub fn expanded_formula(m: usize) -> Vec<AdTerm> {
    assert!(m >= 6, "grouped formulas start at W_6");
    let half = inverse_factorial(2);
    let sixth = inverse_factorial(3);
    let f1 = |k| (1, k);
    match m {
        6 => vec![
            AdTerm::new(one(), &[], f1(5)),
            AdTerm::new(minus_one(), &[(2, 1)], f1(3)),
        ],
        7 => vec![
            AdTerm::new(one(), &[], f1(6)),
            AdTerm::new(minus_one(), &[(2, 1)], f1(4)),
            AdTerm::new(half.clone(), &[(2, 2)], f1(2)),
            AdTerm::new(minus_one(), &[(3, 1)], f1(3)),
        ],
        8 => vec![
            AdTerm::new(one(), &[], f1(7)),
            AdTerm::new(minus_one(), &[(2, 1)], f1(5)),
            AdTerm::new(half.clone(), &[(2, 2)], f1(3)),
            AdTerm::new(minus_one(), &[(3, 1)], f1(4)),
            AdTerm::new(one(), &[(3, 1), (2, 1)], f1(2)),
        ],
        9 => vec![
            AdTerm::new(one(), &[], f1(8)),
            AdTerm::new(minus_one(), &[(2, 1)], f1(6)),
            AdTerm::new(half.clone(), &[(2, 2)], f1(4)),
            AdTerm::new(-sixth.clone(), &[(2, 3)], f1(2)),
            AdTerm::new(minus_one(), &[(3, 1)], f1(5)),
            AdTerm::new(one(), &[(3, 1), (2, 1)], f1(3)),
            AdTerm::new(minus_one(), &[(4, 1)], f1(4)),
            AdTerm::new(one(), &[(4, 1), (2, 1)], f1(2)),
        ],
        10 => vec![
            AdTerm::new(one(), &[], f1(9)),
            AdTerm::new(minus_one(), &[(2, 1)], f1(7)),
            AdTerm::new(half.clone(), &[(2, 2)], f1(5)),
            AdTerm::new(-sixth, &[(2, 3)], f1(3)),
            AdTerm::new(minus_one(), &[(3, 1)], f1(6)),
            AdTerm::new(one(), &[(3, 1), (2, 1)], f1(4)),
            AdTerm::new(-half.clone(), &[(3, 1), (2, 2)], f1(2)),
            AdTerm::new(half, &[(3, 2)], f1(3)),
            AdTerm::new(minus_one(), &[(4, 1)], f1(5)),
            AdTerm::new(one(), &[(4, 1), (2, 1)], f1(3)),
        ],
        _ => residue_class_formula(m / 6, m % 6),
    }
}

/// `m = 6k + i`. Each class is a base term `f_{M, m-1}`, a run of
/// first-order corrections `-ad_{W_r} f_{M, m-1-r}`, and a few second-order
/// corrections.
fn residue_class_formula(k: usize, i: usize) -> Vec<AdTerm> {
    let m = 6 * k + i;
    let half = inverse_factorial(2);
    // (level M, first r, last r, second-order terms)
    let (level, r_first, r_last, second): (usize, usize, usize, Vec<AdTerm>) = match i {
        0 => {
            let lv = 2 * k - 2;
            (
                lv,
                2 * k - 1,
                3 * k - 1,
                vec![
                    AdTerm::new(half, &[(2 * k - 1, 2)], (lv, 2 * k + 1)),
                    AdTerm::new(one(), &[(2 * k, 1), (2 * k - 1, 1)], (lv, 2 * k)),
                    AdTerm::new(one(), &[(2 * k + 1, 1), (2 * k - 1, 1)], (lv, 2 * k - 1)),
                ],
            )
        }
        1 => {
            let lv = 2 * k - 1;
            (
                lv,
                2 * k,
                3 * k,
                vec![AdTerm::new(half, &[(2 * k, 2)], (lv, 2 * k))],
            )
        }
        2 => {
            let lv = 2 * k - 1;
            (
                lv,
                2 * k,
                3 * k,
                vec![
                    AdTerm::new(half, &[(2 * k, 2)], (lv, 2 * k + 1)),
                    AdTerm::new(one(), &[(2 * k + 1, 1), (2 * k, 1)], (lv, 2 * k)),
                ],
            )
        }
        3 => {
            let lv = 2 * k - 1;
            (
                lv,
                2 * k,
                3 * k + 1,
                vec![
                    AdTerm::new(half, &[(2 * k, 2)], (lv, 2 * k + 2)),
                    AdTerm::new(one(), &[(2 * k + 1, 1), (2 * k, 1)], (lv, 2 * k + 1)),
                    AdTerm::new(one(), &[(2 * k + 2, 1), (2 * k, 1)], (lv, 2 * k)),
                ],
            )
        }
        4 => {
            let lv = 2 * k;
            (
                lv,
                2 * k + 1,
                3 * k + 1,
                vec![AdTerm::new(half, &[(2 * k + 1, 2)], (lv, 2 * k + 1))],
            )
        }
        5 => {
            let lv = 2 * k;
            (
                lv,
                2 * k + 1,
                3 * k + 2,
                vec![
                    AdTerm::new(half, &[(2 * k + 1, 2)], (lv, 2 * k + 2)),
                    AdTerm::new(one(), &[(2 * k + 2, 1), (2 * k + 1, 1)], (lv, 2 * k + 1)),
                ],
            )
        }
        _ => unreachable!("residue modulo 6"),
    };
    let mut terms = vec![AdTerm::new(one(), &[], (level, m - 1))];
    for r in r_first..=r_last {
        terms.push(AdTerm::new(minus_one(), &[(r, 1)], (level, m - 1 - r)));
    }
    terms.extend(second);
    terms
}
