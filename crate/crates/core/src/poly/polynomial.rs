use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::same_ring;
use super::{format_rational, GaussianRational, Monomial, Rational, Ring};
use crate::error::{Error, Result};

/// Polynomial with rational coefficients. Terms are kept strictly descending
/// under the ring's monomial order with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Rational, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Self::monomial(ring, Rational::one(), Monomial::var(ring.nvars(), index))
    }

    pub fn monomial(ring: &Arc<Ring>, c: Rational, m: Monomial) -> Self {
        assert_eq!(m.arity(), ring.nvars(), "monomial arity does not match ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, m)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds the canonical polynomial from an arbitrary term multiset.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.arity(), ring.nvars(), "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<(Rational, Monomial)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Assumes `terms` are already strictly sorted and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Rational, Monomial)>) -> Self {
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Rational, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Rational, Monomial)> {
        self.terms.first()
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        self.terms.iter().all(|(_, m)| m.degree() == d).then_some(d)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].0.clone() } else { b[j].0.clone() };
                    out.push((c, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].0 - &b[j].0 } else { &a[i].0 + &b[j].0 };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (c, m) in &b[j..] {
            out.push((if negate { -c.clone() } else { c.clone() }, m.clone()));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            let (c, m) = &other.terms[0];
            return Ok(self.mul_term(c, m));
        }
        if self.terms.len() == 1 {
            let (c, m) = &self.terms[0];
            return Ok(other.mul_term(c, m));
        }
        let products =
            self.terms.iter().flat_map(|(c1, m1)| other.terms.iter().map(move |(c2, m2)| (c1 * c2, m1.mul(m2))));
        Ok(Polynomial::from_terms(&self.ring, products))
    }

    /// `c * m * self`; the order is multiplicative so sorting is preserved.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(a, n)| (a * c, n.mul(m))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a point of `Q(i)^n`.
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: point.len() });
        }
        let mut powers: Vec<Vec<GaussianRational>> = vec![vec![GaussianRational::one()]; n];
        let mut acc = GaussianRational::zero();
        for (c, m) in &self.terms {
            let mut v = GaussianRational::real(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &point[i];
                    powers[i].push(next);
                }
                v = &v * &powers[i][e as usize];
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Scales to coprime integer coefficients with positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn primitive(&self) -> Polynomial {
        let Some((lead, _)) = self.terms.first() else {
            return self.clone();
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (c, _) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut factor = Rational::new(den, num);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((lead, _)) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / g`; errors when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        let Some((gc, gm)) = g.terms.first() else {
            return Err(Error::ZeroPolynomial);
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rem.terms.first().cloned() {
            let Some(q) = gm.quotient_of(&m) else {
                return Err(Error::NotDivisible(format!("{g} does not divide {self}")));
            };
            let qc = &c / gc;
            rem = rem.merge(&g.mul_term(&qc, &q), true);
            quot.push((qc, q));
        }
        Ok(Polynomial::from_sorted_terms(&self.ring, quot))
    }

    /// Re-expresses the polynomial in `ring`, mapping each monomial through
    /// `f`. Terms are re-sorted under the target order.
    pub(crate) fn map_ring<F>(&self, ring: &Arc<Ring>, f: F) -> Option<Polynomial>
    where
        F: Fn(&Monomial) -> Option<Monomial>,
    {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            terms.push((c.clone(), f(m)?));
        }
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Some(Polynomial { ring: ring.clone(), terms })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(c, m)| (-c.clone(), m.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .zip(self.ring.variables())
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring2() -> Arc<Ring> {
        Ring::new(["x", "y"]).unwrap()
    }

    fn p(s: &str, r: &Arc<Ring>) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let prod = &p("x+y", &r) * &p("x-y", &r);
        assert_eq!(prod, p("x^2-y^2", &r));
        assert_eq!(prod.to_string(), "x^2-y^2");
    }

    #[test]
    fn laplacian_times_wave() {
        let r = ring2();
        assert_eq!(&p("x^2+y^2", &r) * &p("x^2-y^2", &r), p("x^4-y^4", &r));
    }

    #[test]
    fn zero_is_identity() {
        let r = ring2();
        let q = p("3*x*y-1/2", &r);
        assert_eq!(&q + &Polynomial::zero(&r), q);
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn mismatched_rings_error() {
        let r = ring2();
        let s = Ring::new(["x", "z"]).unwrap();
        assert_eq!(p("x", &r).try_add(&p("x", &s)), Err(Error::RingMismatch));
    }

    #[test]
    fn evaluation_examples() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let lap = p("x1^2+x2^2", &r);
        let one_i = [GaussianRational::one(), GaussianRational::i()];
        assert!(lap.evaluate(&one_i).unwrap().is_zero());
        let one_zero = [GaussianRational::one(), GaussianRational::zero()];
        assert_eq!(lap.evaluate(&one_zero).unwrap(), GaussianRational::one());
        let cubic = p("x1*(x1^2+x2^2)", &r);
        let pt = [GaussianRational::from_int(2), GaussianRational::from_int(3)];
        assert_eq!(cubic.evaluate(&pt).unwrap(), GaussianRational::from_int(26));
        assert!(lap.evaluate(&one_i[..1]).is_err());
    }

    #[test]
    fn primitive_normalization() {
        let r = ring2();
        assert_eq!(p("-2/3*x+4/9*y", &r).primitive().to_string(), "3*x-2*y");
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let g = p("x^2+y^2", &r);
        let f = &g * &p("x-3*y+1", &r);
        assert_eq!(f.div_exact(&g).unwrap(), p("x-3*y+1", &r));
        assert!(p("x^3+1", &r).div_exact(&g).is_err());
    }

    #[test]
    fn homogeneous_degree() {
        let r = ring2();
        assert_eq!(p("x^2+x*y", &r).homogeneous_degree(), Some(2));
        assert_eq!(p("x+x^2", &r).homogeneous_degree(), None);
        assert_eq!(Polynomial::zero(&r).homogeneous_degree(), None);
    }
}
