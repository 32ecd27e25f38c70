//! Exact scalars: Laurent polynomials in `q, t` with big-integer
//! coefficients, and unnormalized fractions of them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(power of q, power of t)`.
pub type Exp = (i32, i32);

/// A Laurent polynomial in `q` and `t` over the integers.
///
/// Terms are kept sorted by `(q-exponent, t-exponent)` with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentQT {
    terms: Vec<(Exp, BigInt)>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn monomial(c: BigInt, q: i32, t: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentQT {
                terms: vec![((q, t), c)],
            }
        }
    }

    /// `q^a t^b` with coefficient 1.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::monomial(BigInt::one(), a, b)
    }

    pub fn q() -> Self {
        Self::qt(1, 0)
    }

    pub fn t() -> Self {
        Self::qt(0, 1)
    }

    /// Builds a canonical value from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(iter: I) -> Self {
        let mut v: Vec<(Exp, BigInt)> = iter.into_iter().collect();
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentQT { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(q, t)` exponent order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Exp, &BigInt)> {
        self.terms.iter().map(|(e, c)| (e, c))
    }

    pub fn coeff(&self, q: i32, t: i32) -> BigInt {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(q, t))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Returns `(c, a, b)` when the value is the single term `c q^a t^b`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i32, i32)> {
        match self.terms.as_slice() {
            [((a, b), c)] => Some((c, *a, *b)),
            _ => None,
        }
    }

    /// True when every coefficient is positive (zero counts as positive).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_positive())
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|((a, b), _)| *a >= 0 && *b >= 0)
    }

    /// `(min q, max q, min t, max t)` exponents, or `None` for zero.
    pub fn degree_box(&self) -> Option<(i32, i32, i32, i32)> {
        let first = self.terms.first()?;
        let mut bx = (first.0 .0, first.0 .0, first.0 .1, first.0 .1);
        for ((a, b), _) in &self.terms {
            bx.0 = bx.0.min(*a);
            bx.1 = bx.1.max(*a);
            bx.2 = bx.2.min(*b);
            bx.3 = bx.3.max(*b);
        }
        Some(bx)
    }

    /// Multiplies by `c q^a t^b`.
    pub fn mul_monomial(&self, c: &BigInt, a: i32, b: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQT {
            terms: self
                .terms
                .iter()
                .map(|((x, y), k)| ((x + a, y + b), k * c))
                .collect(),
        }
    }

    /// `self += c q^a t^b * other`, merging in place.
    pub fn add_scaled(&mut self, other: &LaurentQT, c: &BigInt, a: i32, b: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.mul_monomial(c, a, b);
            return;
        }
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + other.terms.len());
        let mut li = lhs.into_iter().peekable();
        let mut ri = other.terms.iter().peekable();
        loop {
            let ord = match (li.peek(), ri.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((le, _)), Some(((x, y), _))) => le.cmp(&(x + a, y + b)),
            };
            match ord {
                Ordering::Less => out.push(li.next().unwrap()),
                Ordering::Greater => {
                    let ((x, y), k) = ri.next().unwrap();
                    out.push(((x + a, y + b), k * c));
                }
                Ordering::Equal => {
                    let (e, mut v) = li.next().unwrap();
                    let (_, k) = ri.next().unwrap();
                    v += k * c;
                    if !v.is_zero() {
                        out.push((e, v));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn pow(&self, k: u32) -> Self {
        if let Some((c, a, b)) = self.as_monomial() {
            return Self::monomial(c.pow(k), a * k as i32, b * k as i32);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_exact_integer(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (qu, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.push((*e, qu));
        }
        Some(LaurentQT { terms })
    }

    /// Exact quotient `self / d` when it is a Laurent polynomial.
    pub fn exact_div(&self, d: &LaurentQT) -> Option<LaurentQT> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, a, b)) = d.as_monomial() {
            return self
                .div_exact_integer(c)
                .map(|p| p.mul_monomial(&BigInt::one(), -a, -b));
        }
        let (sq0, sq1, st0, st1) = self.degree_box().unwrap();
        let (dq0, dq1, dt0, dt1) = d.degree_box().unwrap();
        let qbox = (sq0 - dq0, sq1 - dq1);
        let tbox = (st0 - dt0, st1 - dt1);
        let (lead_e, lead_c) = d.terms.last().cloned().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((e, c)) = rem.terms.last().cloned() {
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1);
            if qe.0 < qbox.0 || qe.0 > qbox.1 || qe.1 < tbox.0 || qe.1 > tbox.1 {
                return None;
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            rem.add_scaled(d, &-qc.clone(), qe.0, qe.1);
            quot.push((qe, qc));
        }
        Some(Self::from_terms(quot))
    }

    /// Exchanges `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())))
    }

    /// Substitutes according to `spec`.
    pub fn specialize(&self, spec: Specialization) -> Result<Self> {
        match spec {
            Specialization::SwapQT => Ok(self.swap_qt()),
            Specialization::Subst { var, coeff, q, t } => {
                let mut out = Vec::with_capacity(self.terms.len());
                for ((a, b), c) in &self.terms {
                    let (e, keep_q, keep_t) = match var {
                        Var::Q => (*a, 0, *b),
                        Var::T => (*b, *a, 0),
                    };
                    let scalar = if coeff == 0 {
                        if e < 0 {
                            return Err(Error::NegativeExponentAtZero {
                                var: var.name(),
                                exp: e,
                            });
                        }
                        if e == 0 {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    } else if e >= 0 {
                        BigInt::from(coeff).pow(e as u32)
                    } else if coeff.abs() == 1 {
                        BigInt::from(coeff).pow(e.unsigned_abs())
                    } else {
                        return Err(Error::NonUnitSubstitution {
                            var: var.name(),
                            coeff,
                            exp: e,
                        });
                    };
                    if scalar.is_zero() {
                        continue;
                    }
                    out.push(((keep_q + q * e, keep_t + t * e), c * scalar));
                }
                Ok(Self::from_terms(out))
            }
        }
    }

    /// `t -> t^{-1}`.
    pub fn invert_t(&self) -> Self {
        self.specialize(Specialization::invert_t())
            .expect("unit substitution")
    }

    /// `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        self.specialize(Specialization::invert_q())
            .expect("unit substitution")
    }

    /// Sum of the coefficients, i.e. the value at `q = t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }
}

/// Variable selector for substitutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Q,
    T,
}

impl Var {
    fn name(self) -> char {
        match self {
            Var::Q => 'q',
            Var::T => 't',
        }
    }
}

/// A substitution that keeps Laurent polynomials Laurent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `var -> coeff * q^q * t^t`; `coeff == 0` means `var -> 0`.
    Subst {
        var: Var,
        coeff: i64,
        q: i32,
        t: i32,
    },
    SwapQT,
}

impl Specialization {
    pub fn zero(var: Var) -> Self {
        Specialization::Subst {
            var,
            coeff: 0,
            q: 0,
            t: 0,
        }
    }

    pub fn one(var: Var) -> Self {
        Specialization::Subst {
            var,
            coeff: 1,
            q: 0,
            t: 0,
        }
    }

    pub fn invert_t() -> Self {
        Specialization::Subst {
            var: Var::T,
            coeff: 1,
            q: 0,
            t: -1,
        }
    }

    pub fn invert_q() -> Self {
        Specialization::Subst {
            var: Var::Q,
            coeff: 1,
            q: -1,
            t: 0,
        }
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (*a == 0 && *b == 0) {
                parts.push(mag.to_string());
            }
            for (name, e) in [("q", *a), ("t", *b)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    e => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQT({self})")
    }
}

impl FromStr for LaurentQT {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split into signed terms; a sign directly after '^' belongs to an exponent
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if cur.is_empty() && prev.is_some() {
                    return Err(Error::Parse(format!("dangling operator in {s:?}")));
                }
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing operator in {s:?}")));
        }
        pieces.push((neg, cur));

        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, body) in pieces {
            let mut coeff = BigInt::one();
            let (mut a, mut b) = (0i32, 0i32);
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((base, e)) => (
                        base,
                        e.parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?,
                    ),
                    None => (factor, 1),
                };
                match base {
                    "q" => a += exp,
                    "t" => b += exp,
                    num => {
                        if factor.contains('^') {
                            return Err(Error::Parse(format!("exponent on constant {factor:?}")));
                        }
                        let n: BigInt = num
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad factor {num:?}")))?;
                        coeff *= n;
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push(((a, b), coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

impl From<i64> for LaurentQT {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(mut self) -> LaurentQT {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -(self.clone())
    }
}

impl AddAssign<&LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &LaurentQT) {
        self.add_scaled(rhs, &BigInt::one(), 0, 0);
    }
}

impl SubAssign<&LaurentQT> for LaurentQT {
    fn sub_assign(&mut self, rhs: &LaurentQT) {
        self.add_scaled(rhs, &-BigInt::one(), 0, 0);
    }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQT {
    type Output = LaurentQT;
    fn add(mut self, rhs: LaurentQT) -> LaurentQT {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentQT {
    type Output = LaurentQT;
    fn sub(mut self, rhs: LaurentQT) -> LaurentQT {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        if let Some((c, a, b)) = rhs.as_monomial() {
            return self.mul_monomial(c, a, b);
        }
        if let Some((c, a, b)) = self.as_monomial() {
            return rhs.mul_monomial(c, a, b);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((a, b), c) in &self.terms {
            for ((x, y), k) in &rhs.terms {
                prods.push(((a + x, b + y), c * k));
            }
        }
        LaurentQT::from_terms(prods)
    }
}

impl Mul for LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: LaurentQT) -> LaurentQT {
        &self * &rhs
    }
}

/// Unnormalized fraction of Laurent polynomials.
///
/// Equality is decided by cross-multiplication; no gcd is ever taken.
#[derive(Clone)]
pub struct FracQT {
    num: LaurentQT,
    den: LaurentQT,
}

impl FracQT {
    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FracQT { num, den }.reduce_content())
    }

    pub fn from_laurent(num: LaurentQT) -> Self {
        FracQT {
            num,
            den: LaurentQT::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentQT::zero())
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    pub fn den(&self) -> &LaurentQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Strips the common integer content (sign normalized to the denominator's
    /// leading coefficient being positive).
    fn reduce_content(self) -> Self {
        let g = self.num.content().gcd(&self.den.content());
        let mut g = if g.is_zero() { BigInt::one() } else { g };
        if self
            .den
            .terms
            .last()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            g = -g;
        }
        if g.is_one() {
            return self;
        }
        FracQT {
            num: self.num.div_exact_integer(&g).unwrap(),
            den: self.den.div_exact_integer(&g).unwrap(),
        }
    }

    /// The value as a Laurent polynomial, if the division is exact.
    pub fn to_laurent(&self) -> Option<LaurentQT> {
        self.num.exact_div(&self.den)
    }

    pub fn try_div(&self, rhs: &FracQT) -> Result<FracQT> {
        FracQT::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn map(&self, f: impl Fn(&LaurentQT) -> LaurentQT) -> FracQT {
        FracQT {
            num: f(&self.num),
            den: f(&self.den),
        }
        .reduce_content()
    }
}

impl PartialEq for FracQT {
    fn eq(&self, other: &FracQT) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FracQT {}

impl fmt::Debug for FracQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for FracQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &FracQT {
    type Output = FracQT;
    fn add(self, rhs: &FracQT) -> FracQT {
        if self.den == rhs.den {
            return FracQT {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .reduce_content();
        }
        FracQT {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduce_content()
    }
}

impl Sub for &FracQT {
    type Output = FracQT;
    fn sub(self, rhs: &FracQT) -> FracQT {
        let neg = FracQT {
            num: -&rhs.num,
            den: rhs.den.clone(),
        };
        self + &neg
    }
}

impl Mul for &FracQT {
    type Output = FracQT;
    fn mul(self, rhs: &FracQT) -> FracQT {
        FracQT {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduce_content()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&LaurentQT::q() + &LaurentQT::t(), p("q + t"));
        assert_eq!(&p("1 - q*t") * &LaurentQT::one(), p("1 - q*t"));
        assert_eq!(&p("1 - q") * &p("1 - t"), p("1 - t - q + q*t"));
        assert!((&p("q - t") - &p("q - t")).is_zero());
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(
            p("q^2*t^-1").specialize(Specialization::SwapQT).unwrap(),
            p("q^-1*t^2")
        );
        assert_eq!(
            p("1 + q*t")
                .specialize(Specialization::zero(Var::Q))
                .unwrap(),
            LaurentQT::one()
        );
        assert_eq!(
            p("q^-1*t").specialize(Specialization::zero(Var::Q)),
            Err(Error::NegativeExponentAtZero { var: 'q', exp: -1 })
        );
        assert_eq!(
            p("2*q^3 - t")
                .specialize(Specialization::one(Var::Q))
                .unwrap(),
            p("2 - t")
        );
        // q -> -t^2
        let s = Specialization::Subst {
            var: Var::Q,
            coeff: -1,
            q: 0,
            t: 2,
        };
        assert_eq!(p("q^3 + q^-1").specialize(s).unwrap(), p("-t^6 - t^-2"));
        let s = Specialization::Subst {
            var: Var::Q,
            coeff: 2,
            q: 0,
            t: 0,
        };
        assert!(p("q^-1").specialize(s).is_err());
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(LaurentQT::zero().to_string(), "0");
        assert_eq!(LaurentQT::one().to_string(), "1");
        assert_eq!(p("t - q").to_string(), "t - q");
        assert_eq!(p("-3*q^2*t^-1 + q + 1").to_string(), "1 + q - 3*q^2*t^-1");
        assert_eq!(p("-1").to_string(), "-1");
        for s in ["q*t - 2*q^-3", "1 - t^2", "7*q^4*t^4 + q^-1"] {
            let v = p(s);
            assert_eq!(p(&v.to_string()), v);
        }
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<LaurentQT>().is_err());
        assert!("q +".parse::<LaurentQT>().is_err());
        assert!("x".parse::<LaurentQT>().is_err());
        assert!("2^3".parse::<LaurentQT>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("1 - q");
        let b = p("1 + q*t - t^-2");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(LaurentQT::one().exact_div(&a), None);
        assert_eq!(p("1 + q").exact_div(&p("1 - q")), None);
        assert_eq!(p("6*q").exact_div(&p("3*t")), Some(p("2*q*t^-1")));
        assert_eq!(p("5").exact_div(&p("3")), None);
    }

    #[test]
    fn frac_equality_by_cross_multiplication() {
        let a = FracQT::new(p("1 - q^2"), p("1 - q")).unwrap();
        let b = FracQT::from_laurent(p("1 + q"));
        assert_eq!(a, b);
        assert_eq!(a.to_laurent(), Some(p("1 + q")));
        assert_eq!(
            FracQT::new(p("1"), LaurentQT::zero()).err(),
            Some(Error::DivisionByZero)
        );
        let c = FracQT::new(p("2"), p("4 - 4*t")).unwrap();
        // sign is carried so that the leading denominator coefficient is positive
        assert_eq!(c.num(), &p("-1"));
        assert_eq!(c.den(), &p("-2 + 2*t"));
        assert_eq!(
            &(&c + &c) * &FracQT::from_laurent(p("1 - t")),
            FracQT::from_laurent(LaurentQT::one())
        );
    }
}
