//! Closed-form invariants of `D_n(G, S)` and the motive of the orbit
//! configuration space.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dowling::{DowlingContext, DowlingElement};
use crate::error::{Error, Result};
use crate::poly::{BiPolynomial, IntPolynomial};
use crate::poset::RankedPoset;
use crate::wreath::{labeled_partitions, LabeledPartition};

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(big).product()
}

/// Roots of the characteristic polynomial: `|S| + |G| i` for `i < n`, or
/// `|G| i` for `0 < i < n` when `S` is empty.
pub fn char_poly_roots(n: usize, size_g: usize, size_s: usize) -> Vec<BigInt> {
    if size_s == 0 {
        (1..n).map(|i| big(size_g * i)).collect()
    } else {
        (0..n).map(|i| big(size_s + size_g * i)).collect()
    }
}

/// `∏ (t - r)` over [`char_poly_roots`].
pub fn char_poly_factored(n: usize, size_g: usize, size_s: usize) -> IntPolynomial {
    let fs: Vec<IntPolynomial> = char_poly_roots(n, size_g, size_s)
        .into_iter()
        .map(|r| IntPolynomial::linear_factor(r, "t"))
        .collect();
    IntPolynomial::product(&fs, "t")
}

/// `∏_{i<n} (1 + (|S| + |G| i) t)`.
pub fn whitney_hilbert(n: usize, size_g: usize, size_s: usize) -> Result<IntPolynomial> {
    if size_s == 0 {
        return Err(Error::Unsupported(
            "no closed Whitney series for empty S; use the Möbius ranks".into(),
        ));
    }
    let fs: Vec<IntPolynomial> = (0..n)
        .map(|i| IntPolynomial::linear(1, big(size_s + size_g * i), "t"))
        .collect();
    Ok(IntPolynomial::product(&fs, "t"))
}

/// Top homology dimension of the Dowling lattice `D_n(G)`:
/// `∏_{j=1}^{n-1} (1 + j|G|)`.
pub fn dowling_homology_dim(n: usize, size_g: usize) -> BigInt {
    (1..n).map(|j| big(1 + j * size_g)).product()
}

/// One induced representation in the decomposition of Whitney homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepSummand {
    pub label: LabeledPartition,
    #[serde(serialize_with = "ser_big")]
    pub stabilizer_order: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub inner_dim: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub induced_dim: BigInt,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// The summands of `WH_r` as a `G ≀ S_n`-module, at the level of dimensions.
pub fn rep_decomposition(ctx: &DowlingContext, r: usize) -> Result<Vec<RepSummand>> {
    if ctx.is_filtered() {
        return Err(Error::Unsupported(
            "representation decomposition is only known for the full poset".into(),
        ));
    }
    let n = ctx.n();
    if r > n {
        return Ok(Vec::new());
    }
    let g = ctx.group().order();
    let stab: Vec<usize> = ctx.orbit_data().stabilizers.iter().map(Vec::len).collect();
    let wreath_order = factorial(n) * num_traits::pow(big(g), n);
    let mut out = Vec::new();
    for label in labeled_partitions(n, stab.len(), &[]) {
        if label.unlabeled.len() != n - r {
            continue;
        }
        let mut stabilizer_order = BigInt::one();
        let mut inner_dim = BigInt::one();
        let mut i = 0;
        while i < label.unlabeled.len() {
            let size = label.unlabeled[i];
            let a = label.unlabeled[i..]
                .iter()
                .take_while(|&&p| p == size)
                .count();
            stabilizer_order *= factorial(a) * num_traits::pow(factorial(size) * big(g), a);
            inner_dim *= num_traits::pow(factorial(size - 1), a);
            i += a;
        }
        for (o, &m) in label.labeled.iter().enumerate() {
            stabilizer_order *= factorial(m) * num_traits::pow(big(stab[o]), m);
            inner_dim *= dowling_homology_dim(m, stab[o]);
        }
        let induced_dim = &wreath_order / &stabilizer_order * &inner_dim;
        out.push(RepSummand {
            label,
            stabilizer_order,
            inner_dim,
            induced_dim,
        });
    }
    Ok(out)
}

/// `∏_{i<n} (P(u) + (|S| + |G| i) t)`.
pub fn e1_hilbert(
    p: &IntPolynomial,
    n: usize,
    size_g: usize,
    size_s: usize,
) -> Result<BiPolynomial> {
    if size_s == 0 {
        return Err(Error::Unsupported(
            "the E1 series needs a nonempty S".into(),
        ));
    }
    let base = BiPolynomial::from_u(p);
    Ok((0..n).fold(BiPolynomial::one(), |acc, i| {
        acc.mul(&base.add(&BiPolynomial::t_monomial(big(size_s + size_g * i), 1)))
    }))
}

/// Roots of the motive as a polynomial in `[X]`: `|S| + |G| i`, or `|G| i`
/// for a free action.
fn motive_roots(n: usize, size_g: usize, size_s: usize) -> Vec<BigInt> {
    (0..n).map(|i| big(size_s + size_g * i)).collect()
}

/// `∏_{i<n} ([X] - |S| - |G| i)` as a polynomial in `[X]`. With `size_s = 0`
/// this is the free-action product.
pub fn motive_poly(n: usize, size_g: usize, size_s: usize) -> IntPolynomial {
    let fs: Vec<IntPolynomial> = motive_roots(n, size_g, size_s)
        .into_iter()
        .map(|r| IntPolynomial::linear_factor(r, "[X]"))
        .collect();
    IntPolynomial::product(&fs, "[X]")
}

/// The motive at an integer, e.g. a point count or a compactly supported
/// Euler characteristic.
pub fn motive_eval(x: &BigInt, n: usize, size_g: usize, size_s: usize) -> BigInt {
    motive_roots(n, size_g, size_s)
        .into_iter()
        .map(|r| x - r)
        .product()
}

/// The motive with `[X]` replaced by a polynomial.
pub fn motive_eval_poly(
    x: &IntPolynomial,
    n: usize,
    size_g: usize,
    size_s: usize,
) -> IntPolynomial {
    motive_poly(n, size_g, size_s).compose(x)
}

/// `Σ μ(0̂, b) [X]^{n - rk b}` over an enumerated poset on `n` points.
pub fn motive_from_poset(poset: &RankedPoset<DowlingElement>, n: usize) -> Result<IntPolynomial> {
    Ok(poset.char_poly_bruteforce(n)?.with_var("[X]"))
}

/// Motive of the context: the closed form for the full poset, otherwise the
/// Möbius sum over the enumerated subposet.
pub fn motive_for(ctx: &DowlingContext) -> Result<IntPolynomial> {
    if ctx.is_filtered() {
        let p = crate::dowling::enumerate_poset(ctx)?;
        motive_from_poset(&p, ctx.n())
    } else {
        Ok(motive_poly(
            ctx.n(),
            ctx.group().order(),
            ctx.action().n_points(),
        ))
    }
}

/// `n! |G|^n binom((xc - |S|) / |G|, n)`, with the binomial taken as a
/// falling factorial over the rationals.
pub fn euler_binomial_form(xc: &BigInt, n: usize, size_g: usize, size_s: usize) -> BigInt {
    let top = BigRational::new(xc - big(size_s), big(size_g));
    let mut falling = BigRational::one();
    for i in 0..n {
        falling *= &top - BigRational::from_integer(big(i));
    }
    let binom = falling / BigRational::from_integer(factorial(n));
    let value = binom * BigRational::from_integer(factorial(n) * num_traits::pow(big(size_g), n));
    debug_assert!(value.is_integer());
    if value.is_integer() {
        value.to_integer()
    } else {
        BigInt::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::trivial_pm;
    use crate::group::FiniteGroup;

    #[test]
    fn reference_char_polys() {
        assert_eq!(char_poly_factored(2, 6, 6).to_string(), "t^2 - 18t + 72");
        assert_eq!(
            char_poly_factored(3, 6, 6).to_string(),
            "t^3 - 36t^2 + 396t - 1296"
        );
        assert_eq!(
            char_poly_factored(4, 4, 4).to_string(),
            "t^4 - 40t^3 + 560t^2 - 3200t + 6144"
        );
        assert_eq!(char_poly_factored(1, 3, 5).to_string(), "t - 5");
        assert_eq!(char_poly_factored(3, 1, 0).to_string(), "t^2 - 3t + 2");
    }

    #[test]
    fn whitney_series() {
        let w = whitney_hilbert(2, 6, 6).unwrap();
        assert_eq!(w, IntPolynomial::from_i64s(&[1, 18, 72], "t"));
        assert_eq!(
            whitney_hilbert(1, 3, 4).unwrap(),
            IntPolynomial::from_i64s(&[1, 4], "t")
        );
        assert!(matches!(
            whitney_hilbert(2, 2, 0),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn homology_dims() {
        assert_eq!(dowling_homology_dim(1, 5), big(1));
        assert_eq!(dowling_homology_dim(2, 4), big(5));
        assert_eq!(dowling_homology_dim(3, 2), big(15));
    }

    #[test]
    fn reps_of_type_c() {
        let ctx = DowlingContext::new(2, trivial_pm(FiniteGroup::cyclic(2).unwrap())).unwrap();
        let r0 = rep_decomposition(&ctx, 0).unwrap();
        assert_eq!(r0.len(), 1);
        assert_eq!(r0[0].induced_dim, big(1));
        let r1 = rep_decomposition(&ctx, 1).unwrap();
        let dims: Vec<BigInt> = r1.iter().map(|s| s.induced_dim.clone()).collect();
        assert_eq!(dims, vec![big(2); 3]);
        assert!(r1.iter().all(|s| s.stabilizer_order == big(4)));
    }

    #[test]
    fn e1_specializes_to_known_product() {
        let p = IntPolynomial::from_i64s(&[1, 1], "u");
        for n in 1..=4 {
            let lhs = e1_hilbert(&p, n, 2, 2).unwrap().diagonal("t");
            let fs: Vec<IntPolynomial> = (1..=n as i64)
                .map(|i| IntPolynomial::from_i64s(&[1, 1 + 2 * i], "t"))
                .collect();
            assert_eq!(lhs, IntPolynomial::product(&fs, "t"));
        }
        let one = IntPolynomial::one("u");
        assert_eq!(
            e1_hilbert(&one, 1, 3, 4).unwrap().diagonal("t"),
            IntPolynomial::from_i64s(&[1, 4], "t")
        );
    }

    #[test]
    fn motive_values() {
        assert_eq!(motive_eval(&big(6), 2, 2, 2), big(8));
        assert_eq!(motive_eval(&BigInt::zero(), 3, 2, 2), BigInt::from(-48));
        assert_eq!(euler_binomial_form(&BigInt::zero(), 2, 2, 4), big(24));
        assert_eq!(euler_binomial_form(&big(5), 3, 3, 5), BigInt::zero());
        let x = IntPolynomial::from_i64s(&[-1, 1], "q");
        assert_eq!(
            motive_eval_poly(&x, 2, 2, 2),
            IntPolynomial::from_i64s(&[15, -8, 1], "q")
        );
    }
}
