//! Exact integer polynomials, truncated power series, and the Eulerian
//! family of polynomials.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::digraph::Digraph;
use crate::error::{domain, invalid};
use crate::permutation::{for_each_images, UndirectedAdjacency};
use crate::{Limits, Result};

/// Univariate polynomial with arbitrary precision integer coefficients.
/// Index `m` holds the coefficient of `x^m`; trailing zeros are stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Polynomial whose `m`-th coefficient is `counts[m]`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Polynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(BigInt::one(), 0)
    }

    pub fn x() -> Self {
        Polynomial::monomial(BigInt::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation; the constant term is returned at `x = 0`, which is
    /// the `0^0 = 1` convention.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x * P(x)`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `P(x) / x`; the constant term must vanish.
    pub fn divide_by_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Polynomial::zero()),
            Some(c) if !c.is_zero() => {
                Err(domain!("constant term {c} is nonzero, not divisible by x"))
            }
            Some(_) => Ok(Polynomial::new(self.coeffs[1..].to_vec())),
        }
    }

    /// `P(-x)`.
    pub fn negate_variable(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Sum of the coefficients, i.e. `P(1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Renders with a chosen variable name, e.g. `"1 + 4*x + 1*x^2"`.
    pub fn display_with(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let _ = match k {
                0 => write!(s, "{}", c.abs()),
                1 => write!(s, "{}*{var}", c.abs()),
                _ => write!(s, "{}*{var}^{k}", c.abs()),
            };
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Coefficients `c_0..=c_M` of a formal power series, as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesPrefix {
    coeffs: Vec<BigRational>,
}

impl SeriesPrefix {
    /// The prefix must have at least one coefficient.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid!("series prefix needs at least one coefficient"));
        }
        Ok(SeriesPrefix { coeffs })
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Result<Self> {
        SeriesPrefix::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// `M`, the index of the last stored coefficient.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// All coefficients as integers, if every denominator is 1.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// First index where the two prefixes disagree (or where one ends).
    pub fn first_difference(&self, other: &SeriesPrefix) -> Option<usize> {
        let common = self.coeffs.len().min(other.coeffs.len());
        (0..common)
            .find(|&m| self.coeffs[m] != other.coeffs[m])
            .or((self.coeffs.len() != other.coeffs.len()).then_some(common))
    }
}

impl fmt::Display for SeriesPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// First `M + 1` coefficients of `P(x) / (1 - x)^k`:
/// `c_m = Σ_j P_j · C(m - j + k - 1, k - 1)`.
pub fn expand_over_one_minus_x(p: &Polynomial, k: usize, m: usize) -> SeriesPrefix {
    let coeffs = (0..=m)
        .map(|idx| {
            let top = idx.min(p.coeffs.len().saturating_sub(1));
            let sum: BigInt = if p.is_zero() {
                BigInt::zero()
            } else if k == 0 {
                p.coeff(idx)
            } else {
                (0..=top)
                    .map(|j| {
                        &p.coeffs[j] * binomial(BigInt::from(idx - j + k - 1), BigInt::from(k - 1))
                    })
                    .sum()
            };
            BigRational::from_integer(sum)
        })
        .collect();
    SeriesPrefix { coeffs }
}

/// Distribution of a statistic over `S_n` as a polynomial.
pub(crate) fn statistic_polynomial(n: usize, mut stat: impl FnMut(&[u32]) -> usize) -> Polynomial {
    let mut counts: Vec<u64> = Vec::new();
    for_each_images(n, |images| {
        let d = stat(images);
        if d >= counts.len() {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    });
    Polynomial::from_counts(&counts)
}

/// Eulerian polynomial `A_n(x)`: coefficient `m` counts permutations with
/// `m` descents.
pub fn eulerian_poly(n: usize, limits: &Limits) -> Result<Polynomial> {
    if n == 0 {
        return Err(invalid!("n must be positive"));
    }
    Limits::check("Eulerian polynomial", n, limits.odp)?;
    Ok(statistic_polynomial(n, |s| {
        s.windows(2).filter(|w| w[0] > w[1]).count()
    }))
}

/// `A_G(x) = Σ x^{des_G(σ)}`, or `C_G(x) = Σ x^{cdes_G(σ)}` when `cyclic`.
pub fn generalized_eulerian_poly(g: &Digraph, cyclic: bool, limits: &Limits) -> Result<Polynomial> {
    let n = g.n();
    if cyclic && n < 2 {
        return Err(invalid!("cyclic descents need n >= 2"));
    }
    Limits::check("generalized Eulerian polynomial", n, limits.odp)?;
    let adj = UndirectedAdjacency::from_digraph(g)?;
    Ok(statistic_polynomial(n, |s| adj.g_descents(s, cyclic)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ints(xs: &[i64]) -> SeriesPrefix {
        SeriesPrefix::from_integers(xs.iter().map(|&v| BigInt::from(v))).unwrap()
    }

    #[test]
    fn eulerian_rows() {
        let lim = Limits::DEFAULT;
        assert_eq!(eulerian_poly(1, &lim).unwrap(), Polynomial::from_i64s(&[1]));
        assert_eq!(
            eulerian_poly(3, &lim).unwrap(),
            Polynomial::from_i64s(&[1, 4, 1])
        );
        assert_eq!(
            eulerian_poly(4, &lim).unwrap(),
            Polynomial::from_i64s(&[1, 11, 11, 1])
        );
        assert!(matches!(
            eulerian_poly(11, &lim),
            Err(crate::Error::Resource { .. })
        ));
    }

    #[test]
    fn generalized_examples() {
        let lim = Limits::DEFAULT;
        let k3 = Digraph::tour(3).unwrap();
        assert_eq!(
            generalized_eulerian_poly(&k3, false, &lim).unwrap(),
            Polynomial::from_i64s(&[1, 4, 1])
        );
        assert_eq!(
            generalized_eulerian_poly(&k3, true, &lim).unwrap(),
            Polynomial::from_i64s(&[0, 3, 3])
        );
        let e3 = Digraph::empty(3).unwrap();
        for cyclic in [false, true] {
            assert_eq!(
                generalized_eulerian_poly(&e3, cyclic, &lim).unwrap(),
                Polynomial::from_i64s(&[6])
            );
        }
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            expand_over_one_minus_x(&Polynomial::one(), 1, 3),
            ints(&[1, 1, 1, 1])
        );
        let a3 = Polynomial::from_i64s(&[1, 4, 1]);
        assert_eq!(expand_over_one_minus_x(&a3, 4, 3), ints(&[1, 8, 27, 64]));
        assert_eq!(
            expand_over_one_minus_x(&Polynomial::from_i64s(&[4, 2]), 4, 2),
            ints(&[4, 18, 48])
        );
        assert_eq!(
            expand_over_one_minus_x(&Polynomial::zero(), 3, 2),
            ints(&[0, 0, 0])
        );
        assert_eq!(expand_over_one_minus_x(&a3, 0, 3), ints(&[1, 4, 1, 0]));
    }

    #[test]
    fn divide_by_x_examples() {
        let p = Polynomial::from_i64s(&[0, 3, 1]);
        assert_eq!(p.divide_by_x().unwrap(), Polynomial::from_i64s(&[3, 1]));
        let k3 = Polynomial::from_i64s(&[0, 2, -3, 1]);
        assert_eq!(
            k3.divide_by_x().unwrap(),
            Polynomial::from_i64s(&[2, -3, 1])
        );
        assert_eq!(
            Polynomial::zero().divide_by_x().unwrap(),
            Polynomial::zero()
        );
        assert!(matches!(
            Polynomial::one().divide_by_x(),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = Polynomial::from_i64s(&[1, 1]);
        let b = Polynomial::from_i64s(&[-1, 1]);
        assert_eq!(&a * &b, Polynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!((&a + &b).degree(), Some(1));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_i64s(&[5, 0, 0]).degree(), Some(0));
        assert_eq!(
            Polynomial::from_i64s(&[0, 0, 1]).eval_i64(0),
            BigInt::zero()
        );
        assert_eq!(Polynomial::one().eval_i64(0), BigInt::one());
        assert_eq!(a.negate_variable(), Polynomial::from_i64s(&[1, -1]));
        assert_eq!(a.mul_x(), Polynomial::from_i64s(&[0, 1, 1]));
    }

    #[test]
    fn display_format() {
        assert_eq!(
            Polynomial::from_i64s(&[1, 4, 1]).to_string(),
            "1 + 4*x + 1*x^2"
        );
        assert_eq!(Polynomial::from_i64s(&[0, 3, 3]).to_string(), "3*x + 3*x^2");
        assert_eq!(
            Polynomial::from_i64s(&[0, 2, -3, 1]).display_with("k"),
            "2*k - 3*k^2 + 1*k^3"
        );
        assert_eq!(Polynomial::from_i64s(&[-2]).to_string(), "-2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn series_difference() {
        assert_eq!(ints(&[1, 2, 3]).first_difference(&ints(&[1, 2, 3])), None);
        assert_eq!(
            ints(&[1, 2, 3]).first_difference(&ints(&[1, 5, 3])),
            Some(1)
        );
        assert_eq!(ints(&[1, 2]).first_difference(&ints(&[1, 2, 3])), Some(2));
        assert_eq!(ints(&[1, 2]).truncation(), 1);
    }
}
