//! Left- and right-hand sides of the adelic identities.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Identity;
use crate::adelic::AdelicElement;
use crate::algebra::{bb_shuffle, interleave_blocks, shuffle_sh, Index, IndexCombination};
use crate::bernoulli::{beta_with, Convention};
use crate::combinatorics::binomial;
use crate::engine::{eval, EvalRequest};
use crate::error::{Error, Result};
use crate::modular::PrimeRange;

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn sign(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// `2^{1 - 2l}`.
fn two_pow_one_minus_2l(l: u32) -> BigRational {
    BigRational::new(BigInt::from(2), BigInt::from(4).pow(l))
}

fn twos(n: u32) -> Index {
    Index::new(vec![2; n as usize]).expect("positive entries")
}

struct Ctx<'a> {
    range: &'a PrimeRange,
    convention: Convention,
}

impl Ctx<'_> {
    fn eval(&self, combination: IndexCombination, star: bool, power: u8) -> AdelicElement {
        eval(&EvalRequest::new(
            combination,
            star,
            self.range.clone(),
            power,
        ))
    }

    fn eval_index(&self, index: Index, star: bool, power: u8) -> AdelicElement {
        self.eval(IndexCombination::basis(index), star, power)
    }

    fn constant(&self, power: u8, q: &BigRational) -> AdelicElement {
        AdelicElement::constant(self.range, power, q)
    }

    /// `coeff * beta_k * p`.
    fn beta_p(&self, k: u32, coeff: &BigRational) -> Result<AdelicElement> {
        Ok(beta_with(k, self.range, self.convention)?
            .mul(&AdelicElement::p_element(self.range))
            .scale(coeff))
    }
}

/// Right-hand side of the shuffle relation in `A_2`: sums over `e` with
/// `e_1 + ... + e_s` in `{0, 1}` of
/// `prod_j C(l_j + e_j - 1, e_j) zeta(k, l_s + e_s, ..., l_1 + e_1) p^{|e|}`,
/// times `(-1)^{weight(l)}`.
pub fn shuffle_a2_expansion(k: &Index, l: &Index, range: &PrimeRange) -> AdelicElement {
    let s = l.depth();
    let mut es: Vec<Vec<u32>> = vec![vec![0; s]];
    for j in 0..s {
        let mut e = vec![0; s];
        e[j] = 1;
        es.push(e);
    }
    let mut plain = IndexCombination::zero();
    let mut with_p = IndexCombination::zero();
    for e in es {
        let coeff = l
            .entries()
            .iter()
            .zip(&e)
            .fold(BigInt::one(), |acc, (&lj, &ej)| {
                acc * binomial(i64::from(lj + ej) - 1, i64::from(ej))
            });
        let tail: Vec<u32> = l
            .entries()
            .iter()
            .zip(&e)
            .rev()
            .map(|(&lj, &ej)| lj + ej)
            .collect();
        let index = k.concat(&Index::new(tail).expect("positive entries"));
        if e.iter().sum::<u32>() == 0 {
            plain.add_term(index, int(coeff));
        } else {
            with_p.add_term(index, int(coeff));
        }
    }
    let request = |c| eval(&EvalRequest::new(c, false, range.clone(), 2));
    request(plain)
        .add(&request(with_p).mul(&AdelicElement::p_element(range)))
        .scale(&sign(l.weight() % 2 == 1))
}

/// Rational multiple of `beta_{4l+2m+1} p` on the right of the
/// Bowman-Bradley sum: strict sums when `star` is false.
pub fn main_theorem_coefficient(l: u32, m: u32, star: bool) -> BigRational {
    let head =
        sign(l % 2 == 1) * two_pow_one_minus_2l(l) * int(binomial(i64::from(l + m), i64::from(l)));
    if star {
        head
    } else {
        sign(m % 2 == 1) * (head - int(4) * int(binomial(i64::from(2 * l + m), i64::from(2 * l))))
    }
}

/// Builds both sides of an adelic instance over `range`.
pub fn adelic_sides(
    identity: &Identity,
    range: &PrimeRange,
    convention: Convention,
) -> Result<(AdelicElement, AdelicElement)> {
    identity.validate()?;
    let ctx = Ctx { range, convention };
    let sides = match *identity {
        Identity::Mt1 { l, m } | Identity::Mt2 { l, m } => {
            let star = matches!(identity, Identity::Mt2 { .. });
            let lhs = ctx.eval(bb_shuffle(l as usize, m as usize), star, 2);
            let coeff = main_theorem_coefficient(l, m, star);
            (lhs, ctx.beta_p(4 * l + 2 * m + 1, &coeff)?)
        }
        Identity::Sw { a, b, c, l, m } | Identity::SwStar { a, b, c, l, m } => {
            let star = matches!(identity, Identity::SwStar { .. });
            let pattern = Index::new(vec![a, b]).expect("validated");
            let lhs = ctx.eval(
                interleave_blocks(&pattern, l as usize, c, m as usize),
                star,
                1,
            );
            (lhs, ctx.constant(1, &BigRational::zero()))
        }
        Identity::ShuffleA2 { ref k, ref l } => {
            let lhs = ctx.eval(
                shuffle_sh(
                    &IndexCombination::basis(k.clone()),
                    &IndexCombination::basis(l.clone()),
                ),
                false,
                2,
            );
            (lhs, shuffle_a2_expansion(k, l, range))
        }
        Identity::Zc { r } => (
            ctx.eval_index(twos(r), false, 2),
            ctx.beta_p(2 * r + 1, &(sign(r % 2 == 0) * int(2)))?,
        ),
        Identity::ZcStar { r } => (
            ctx.eval_index(twos(r), true, 2),
            ctx.beta_p(2 * r + 1, &int(2))?,
        ),
        Identity::TwoThree { a, b } => {
            let mut entries = vec![2; a as usize];
            entries.push(3);
            entries.extend(std::iter::repeat_n(2, b as usize));
            let lhs = ctx.eval_index(Index::new(entries).expect("positive"), false, 1);
            let coeff = sign((a + b) % 2 == 1)
                * BigRational::new(
                    BigInt::from(2) * (i64::from(a) - i64::from(b)),
                    BigInt::from(a + 1),
                )
                * int(binomial(i64::from(2 * a + 2 * b + 3), i64::from(2 * b + 2)));
            let rhs = beta_with(2 * a + 2 * b + 3, range, convention)?
                .scale(&coeff)
                .project();
            (lhs, rhs)
        }
        Identity::Aaa { l, m } => {
            let product = shuffle_sh(
                &IndexCombination::basis(twos(l + m)),
                &IndexCombination::basis(twos(l)),
            );
            let coeff = sign(m % 2 == 1)
                * int(2)
                * (int(1) - int(2) * int(binomial(i64::from(4 * l + 2 * m), i64::from(2 * l))));
            (
                ctx.eval(product, false, 2),
                ctx.beta_p(4 * l + 2 * m + 1, &coeff)?,
            )
        }
        Identity::Yam { l, m } => (
            ctx.eval(bb_shuffle(l as usize, m as usize), true, 2),
            yam_rhs(&ctx, l, m),
        ),
        Identity::Wolstenholme => (
            ctx.eval_index(Index::from([1]), false, 2),
            ctx.constant(2, &BigRational::zero()),
        ),
        Identity::Constant { lhs, rhs } => (ctx.constant(2, &int(lhs)), ctx.constant(2, &int(rhs))),
        Identity::Muneta { .. } | Identity::Vdm1 { .. } | Identity::Vdm2 { .. } => {
            return Err(Error::InvalidParams {
                id: identity.id().to_string(),
                reason: "symbolic identity has no adelic sides".to_string(),
            })
        }
    };
    Ok(sides)
}

/// `sum_{2i+k+u=2l, j+n+v=m} (-1)^{j+k} C(k+n, k) C(u+v, u)
///  zeta(bb(i, j)) zeta*({2}^{k+n}) zeta*({2}^{u+v})`.
fn yam_rhs(ctx: &Ctx<'_>, l: u32, m: u32) -> AdelicElement {
    let mut strict: HashMap<(u32, u32), AdelicElement> = HashMap::new();
    let mut star_twos: HashMap<u32, AdelicElement> = HashMap::new();
    let mut total = ctx.constant(2, &BigRational::zero());
    for i in 0..=l {
        let rest = 2 * (l - i);
        for k in 0..=rest {
            let u = rest - k;
            for j in 0..=m {
                for n in 0..=(m - j) {
                    let v = m - j - n;
                    let coeff = sign((j + k) % 2 == 1)
                        * int(binomial(i64::from(k + n), i64::from(k)))
                        * int(binomial(i64::from(u + v), i64::from(u)));
                    let z = strict
                        .entry((i, j))
                        .or_insert_with(|| ctx.eval(bb_shuffle(i as usize, j as usize), false, 2))
                        .clone();
                    for t in [k + n, u + v] {
                        star_twos
                            .entry(t)
                            .or_insert_with(|| ctx.eval_index(twos(t), true, 2));
                    }
                    let term = z
                        .mul(&star_twos[&(k + n)])
                        .mul(&star_twos[&(u + v)])
                        .scale(&coeff);
                    total = total.add(&term);
                }
            }
        }
    }
    total
}
