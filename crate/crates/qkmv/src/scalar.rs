//! Exact multivariate rational functions over the fixed variable set
//! `{v, η, u, z1, z2, z3, ħ, a}`.
//!
//! The deformation parameter is `q := v²`, so every half-integer power of
//! `q` that appears downstream is a plain integer power of `v`. Negative
//! powers live in the denominator; there is no separate Laurent machinery.
//!
//! Fractions are kept reduced only by monomial-content removal, by a full
//! univariate gcd when both sides happen to involve a single variable, and
//! by an exact-division attempt; equality is always decided by
//! cross-multiplication, never by the stored representation and never by
//! evaluation at sample points.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Number of variables in the fixed coefficient field.
pub const NVARS: usize = 8;

/// Variable indices into the monomial exponent array.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    /// `v`, with `q = v²`.
    V = 0,
    /// Rational deformation parameter `η`.
    Eta = 1,
    /// Evaluation/spectral variable `u`.
    U = 2,
    Z1 = 3,
    Z2 = 4,
    Z3 = 5,
    /// Trigonometric deformation parameter `ħ`.
    Hbar = 6,
    /// Scaling-automorphism parameter `a`.
    A = 7,
}

pub const VAR_NAMES: [&str; NVARS] = ["v", "eta", "u", "z1", "z2", "z3", "hbar", "a"];

type Exps = [u16; NVARS];

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ScalarError {
    #[error("division by a scalar that vanishes identically")]
    DivisionByZero,
    #[error("scalar is singular at q=1")]
    Pole,
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are sorted by descending lexicographic exponent order and carry no
/// zero coefficients; the zero polynomial is the empty term list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<(Exps, BigRational)>,
}

fn exps_cmp(a: &Exps, b: &Exps) -> std::cmp::Ordering {
    b.cmp(a) // descending lex
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![([0; NVARS], c)],
            }
        }
    }

    pub fn var(v: Var) -> Self {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, k: u16) -> Self {
        if k == 0 {
            return Poly::one();
        }
        let mut e = [0u16; NVARS];
        e[v as usize] = k;
        Poly {
            terms: vec![(e, BigRational::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    fn from_terms(mut terms: Vec<(Exps, BigRational)>) -> Self {
        terms.sort_by(|a, b| exps_cmp(&a.0, &b.0));
        let mut out: Vec<(Exps, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 += c;
                    continue;
                }
            }
            out.push((e, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Poly::from_terms(terms)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                terms.push((e, ca * cb));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Bitmask of variables that actually occur.
    fn support(&self) -> u16 {
        let mut m = 0u16;
        for (e, _) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    m |= 1 << i;
                }
            }
        }
        m
    }

    /// Elementwise-minimum exponent vector over all terms.
    fn content_exps(&self) -> Exps {
        let mut m = [u16::MAX; NVARS];
        for (e, _) in &self.terms {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            m = [0; NVARS];
        }
        m
    }

    fn shift_down(&self, by: &Exps) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    for i in 0..NVARS {
                        f[i] -= by[i];
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Exact multivariate division; returns `None` when `self` is not a
    /// polynomial multiple of `d`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dlead_e, dlead_c) = &d.terms[0];
        let mut rem = self.clone();
        let mut quo: Vec<(Exps, BigRational)> = Vec::new();
        while !rem.is_zero() {
            let (rl_e, rl_c) = &rem.terms[0];
            let mut qe = [0u16; NVARS];
            for i in 0..NVARS {
                if rl_e[i] < dlead_e[i] {
                    return None;
                }
                qe[i] = rl_e[i] - dlead_e[i];
            }
            let qc = rl_c / dlead_c;
            let mono = Poly {
                terms: vec![(qe, qc.clone())],
            };
            rem = rem.sub(&mono.mul(d));
            quo.push((qe, qc));
            if quo.len() > 4 * (self.terms.len() + d.terms.len() + 4) {
                return None; // runaway division, cannot be exact
            }
        }
        Some(Poly::from_terms(quo))
    }

    /// View as a dense univariate polynomial in `var`; `None` if any other
    /// variable occurs.
    fn to_univariate(&self, var: usize) -> Option<Vec<BigRational>> {
        let mask = self.support();
        if mask & !(1 << var) != 0 {
            return None;
        }
        let deg = self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0) as usize;
        let mut c = vec![BigRational::zero(); deg + 1];
        for (e, k) in &self.terms {
            c[e[var] as usize] += k;
        }
        Some(c)
    }

    fn from_univariate(var: usize, coeffs: &[BigRational]) -> Poly {
        let mut terms = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0u16; NVARS];
                e[var] = d as u16;
                terms.push((e, c.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Group terms by their `v`-exponent: returns (v-degree, coefficient)
    /// pairs where each coefficient is v-free.
    fn by_v_degree(&self) -> Vec<(u16, Poly)> {
        let mut map: std::collections::BTreeMap<u16, Vec<(Exps, BigRational)>> =
            std::collections::BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = *e;
            let d = f[Var::V as usize];
            f[Var::V as usize] = 0;
            map.entry(d).or_default().push((f, c.clone()));
        }
        map.into_iter()
            .map(|(d, t)| (d, Poly::from_terms(t)))
            .collect()
    }

    /// Substitute `v := 1`.
    fn eval_v1(&self) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut f = *e;
            f[Var::V as usize] = 0;
            terms.push((f, c.clone()));
        }
        Poly::from_terms(terms)
    }

    /// Partial derivative with respect to `v`.
    fn d_dv(&self) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            let d = e[Var::V as usize];
            if d > 0 {
                let mut f = *e;
                f[Var::V as usize] = d - 1;
                terms.push((f, c * BigRational::from_integer(BigInt::from(d))));
            }
        }
        Poly::from_terms(terms)
    }

    /// Quotient by `(v − 1)` when the division is exact.
    fn div_v_minus_1(&self) -> Option<Poly> {
        // Synthetic division on the v-graded pieces: write p = Σ c_k v^k,
        // then p/(v−1) has coefficients b_{k} with b_{deg−1} = c_deg and
        // b_{k−1} = c_k + b_k; exact iff c_0 + b_0 = 0.
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let graded = self.by_v_degree();
        let deg = graded.last().unwrap().0;
        if deg == 0 {
            return None;
        }
        let mut dense: Vec<Poly> = vec![Poly::zero(); deg as usize + 1];
        for (d, p) in graded {
            dense[d as usize] = p;
        }
        let mut b = vec![Poly::zero(); deg as usize];
        let mut carry = Poly::zero();
        for k in (1..=deg as usize).rev() {
            let bk = dense[k].add(&carry);
            b[k - 1] = bk.clone();
            carry = bk;
        }
        if !dense[0].add(&carry).is_zero() {
            return None;
        }
        let mut out = Poly::zero();
        let v = Poly::var(Var::V);
        for (k, coeff) in b.iter().enumerate() {
            out = out.add(&coeff.mul(&v.pow(k as u32)));
        }
        Some(out)
    }
}

fn univariate_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lead = b[db].clone();
        while a.len() >= b.len() && !a.is_empty() {
            let da = a.len() - 1;
            let f = &a[da] / &lead;
            let shift = da - db;
            for i in 0..=db {
                let t = &b[i] * &f;
                a[i + shift] -= t;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    // make monic
    if let Some(l) = a.last().cloned() {
        for c in &mut a {
            *c /= l.clone();
        }
    }
    a
}

/// Exact rational function: a fraction of two [`Poly`] values.
///
/// Invariants: the denominator is never the zero polynomial, the zero
/// scalar is stored as `0/1`, and the denominator's leading coefficient is
/// normalized to `1`.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn new(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "scalar denominator vanishes identically");
        let mut s = Scalar { num, den };
        s.normalize();
        s
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn integer(n: i64) -> Scalar {
        Scalar::from_big(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(n: i64, d: i64) -> Scalar {
        assert!(d != 0);
        Scalar::from_big(Ratio::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_big(c: BigRational) -> Scalar {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Scalar {
        Scalar {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    /// `v^k` for any integer `k` (negative powers go to the denominator).
    pub fn vpow(k: i32) -> Scalar {
        if k >= 0 {
            Scalar {
                num: Poly::var_pow(Var::V, k as u16),
                den: Poly::one(),
            }
        } else {
            Scalar {
                num: Poly::one(),
                den: Poly::var_pow(Var::V, (-k) as u16),
            }
        }
    }

    /// `q^x` where `h = 2x`; with `q = v²` this is exactly `v^h`.
    pub fn qpow_halves(h: i32) -> Scalar {
        Scalar::vpow(h)
    }

    /// `q^m` for an integer `m`.
    pub fn qpow(m: i32) -> Scalar {
        Scalar::vpow(2 * m)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        // (a) monomial content common to numerator and denominator
        let cn = self.num.content_exps();
        let cd = self.den.content_exps();
        let mut g = [0u16; NVARS];
        let mut nontrivial = false;
        for i in 0..NVARS {
            g[i] = cn[i].min(cd[i]);
            nontrivial |= g[i] > 0;
        }
        if nontrivial {
            self.num = self.num.shift_down(&g);
            self.den = self.den.shift_down(&g);
        }
        if !self.den.is_one() {
            // (b) exact division shortcut
            if let Some(q) = self.num.exact_div(&self.den) {
                self.num = q;
                self.den = Poly::one();
            } else {
                // (c) univariate gcd when both sides live in one variable
                let s = self.num.support() | self.den.support();
                if s.count_ones() == 1 {
                    let var = s.trailing_zeros() as usize;
                    let a = self.num.to_univariate(var).unwrap();
                    let b = self.den.to_univariate(var).unwrap();
                    let g = univariate_gcd(a.clone(), b.clone());
                    if g.len() > 1 {
                        let gp = Poly::from_univariate(var, &g);
                        self.num = self.num.exact_div(&gp).expect("gcd divides numerator");
                        self.den = self.den.exact_div(&gp).expect("gcd divides denominator");
                    }
                }
            }
        }
        // (d) scale so the denominator's leading coefficient is 1
        let lead = self.den.terms[0].1.clone();
        if !lead.is_one() {
            let inv = BigRational::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Scalar::new(self.num.add(&other.num), self.den.clone());
        }
        Scalar::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        Scalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact equality as rational functions, decided by cross-multiplication.
    pub fn equals(&self, other: &Scalar) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// The q-number `[x] = (q^x − q^{−x})/(q − q^{−1})` with `h = 2x`.
    pub fn q_number_halves(h: i32) -> Scalar {
        let n = Scalar::vpow(h).sub(&Scalar::vpow(-h));
        let d = Scalar::vpow(2).sub(&Scalar::vpow(-2));
        n.div(&d).expect("q - q^{-1} is not zero")
    }

    /// The q-number of an integer.
    pub fn q_number(x: i32) -> Scalar {
        Scalar::q_number_halves(2 * x)
    }

    /// Exact substitution of any subset of variables, renormalized.
    pub fn specialize(&self, map: &[Option<Scalar>; NVARS]) -> Result<Scalar, ScalarError> {
        let eval = |p: &Poly| -> Scalar {
            let mut acc = Scalar::zero();
            for (e, c) in &p.terms {
                let mut term = Scalar::from_big(c.clone());
                for (i, &exp) in e.iter().enumerate() {
                    if exp == 0 {
                        continue;
                    }
                    match &map[i] {
                        None => {
                            let m = Scalar {
                                num: Poly::var_pow(
                                    match i {
                                        0 => Var::V,
                                        1 => Var::Eta,
                                        2 => Var::U,
                                        3 => Var::Z1,
                                        4 => Var::Z2,
                                        5 => Var::Z3,
                                        6 => Var::Hbar,
                                        _ => Var::A,
                                    },
                                    exp,
                                ),
                                den: Poly::one(),
                            };
                            term = term.mul(&m);
                        }
                        Some(s) => {
                            let mut p = Scalar::one();
                            for _ in 0..exp {
                                p = p.mul(s);
                            }
                            term = term.mul(&p);
                        }
                    }
                }
                acc = acc.add(&term);
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        n.div(&d)
    }

    /// Substitute a single variable.
    pub fn specialize_var(&self, var: Var, value: &Scalar) -> Result<Scalar, ScalarError> {
        let mut map: [Option<Scalar>; NVARS] = Default::default();
        map[var as usize] = Some(value.clone());
        self.specialize(&map)
    }

    /// First-order Taylor data at `v = 1` (i.e. `q = 1`), after cancelling
    /// common `(v−1)` powers. Errors when the scalar is genuinely singular
    /// there, e.g. anything containing a bare `τ = η/(q−q^{−1})`.
    pub fn jet_at_v1(&self) -> Result<Jet, ScalarError> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if num.is_zero() {
            return Ok(Jet {
                c0: Scalar::zero(),
                c1: Scalar::zero(),
            });
        }
        loop {
            if !den.eval_v1().is_zero() {
                break;
            }
            let dn = num.div_v_minus_1();
            let dd = den.div_v_minus_1();
            match (dn, dd) {
                (Some(n2), Some(d2)) => {
                    num = n2;
                    den = d2;
                }
                _ => return Err(ScalarError::Pole),
            }
        }
        let n0 = num.eval_v1();
        let d0 = den.eval_v1();
        let n1 = num.d_dv().eval_v1();
        let d1 = den.d_dv().eval_v1();
        let d0s = Scalar::new(d0.clone(), Poly::one());
        let c0 = Scalar::new(n0.clone(), d0.clone());
        // (n/d)' = (n'd − nd')/d²
        let c1 = Scalar::new(n1.mul(&d0).sub(&n0.mul(&d1)), d0.mul(&d0));
        let _ = d0s;
        Ok(Jet { c0, c1 })
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for Scalar {}

/// First-order jet `f = c0 + c1·s + O(s²)` under `v = 1 + s`; both
/// components are v-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    pub c0: Scalar,
    pub c1: Scalar,
}

impl Jet {
    pub fn mul(&self, other: &Jet) -> Jet {
        Jet {
            c0: self.c0.mul(&other.c0),
            c1: self.c0.mul(&other.c1).add(&self.c1.mul(&other.c0)),
        }
    }

    pub fn add(&self, other: &Jet) -> Jet {
        Jet {
            c0: self.c0.add(&other.c0),
            c1: self.c1.add(&other.c1),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            for i in 0..NVARS {
                if e[i] > 0 {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    mono.push_str(VAR_NAMES[i]);
                    if e[i] > 1 {
                        mono.push_str(&format!("^{}", e[i]));
                    }
                }
            }
            let neg = c.is_negative();
            let ac = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{ac}")?;
            } else if ac.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{ac}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// `τ = η/(q − q^{−1})`, the singular scale of the affine-generator shift.
pub fn tau() -> Scalar {
    Scalar::var(Var::Eta)
        .div(&Scalar::qpow(1).sub(&Scalar::qpow(-1)))
        .expect("q - q^{-1} is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::qpow(1)
    }

    #[test]
    fn zero_normalizes_to_canonical_form() {
        let s = Scalar::new(Poly::zero(), Poly::var_pow(Var::V, 7));
        assert!(s.is_zero());
        assert!(s.den.is_one());
    }

    #[test]
    fn equality_q_squared_minus_one_over_q_minus_one() {
        let lhs = q()
            .mul(&q())
            .sub(&Scalar::one())
            .div(&q().sub(&Scalar::one()))
            .unwrap();
        let rhs = q().add(&Scalar::qpow(0));
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn equality_q_number_two() {
        let rhs = q().add(&Scalar::qpow(-1));
        assert!(Scalar::q_number(2).equals(&rhs));
    }

    #[test]
    fn tau_is_not_eta() {
        assert!(!tau().equals(&Scalar::var(Var::Eta)));
    }

    #[test]
    fn q_number_small_values() {
        assert!(Scalar::q_number(0).is_zero());
        assert!(Scalar::q_number(1).equals(&Scalar::one()));
        // independent oracle: exact polynomial division of q² − q^{−2} by q − q^{−1}
        let oracle = Scalar::qpow(2)
            .sub(&Scalar::qpow(-2))
            .div(&Scalar::qpow(1).sub(&Scalar::qpow(-1)))
            .unwrap();
        assert!(Scalar::q_number(2).equals(&oracle));
        // and the frozen explicit form (v⁴+1)/v²
        let frozen = Scalar::new(
            Poly::var_pow(Var::V, 4).add(&Poly::one()),
            Poly::var_pow(Var::V, 2),
        );
        assert!(Scalar::q_number(2).equals(&frozen));
        // negative argument antisymmetry
        assert!(Scalar::q_number(-2).equals(&Scalar::q_number(2).neg()));
        // half-integer: [1/2] = (v − v^{−1})/(v² − v^{−2})
        let half = Scalar::vpow(1)
            .sub(&Scalar::vpow(-1))
            .div(&Scalar::vpow(2).sub(&Scalar::vpow(-2)))
            .unwrap();
        assert!(Scalar::q_number_halves(1).equals(&half));
    }

    /// Binomial-expansion oracle for jets of pure q-powers: q^m = (1+s)^{2m}.
    fn jet_qpow_oracle(m: u32) -> (i64, i64) {
        (1, 2 * m as i64)
    }

    #[test]
    fn jet_of_q_cubed() {
        let j = Scalar::qpow(3).jet_at_v1().unwrap();
        let (c0, c1) = jet_qpow_oracle(3);
        assert!(j.c0.equals(&Scalar::integer(c0)));
        assert!(j.c1.equals(&Scalar::integer(c1)));
    }

    #[test]
    fn jet_of_q_minus_qinv() {
        // (1+s)² − (1+s)^{−2} = 4s + O(s²)
        let j = Scalar::qpow(1).sub(&Scalar::qpow(-1)).jet_at_v1().unwrap();
        assert!(j.c0.is_zero());
        assert!(j.c1.equals(&Scalar::integer(4)));
    }

    #[test]
    fn jet_of_tau_is_a_pole() {
        assert_eq!(tau().jet_at_v1(), Err(ScalarError::Pole));
    }

    #[test]
    fn jet_cancels_common_v_minus_one_powers() {
        // (q−1)/(q−q^{−1}) is regular at v=1 with value 1/2.
        let s = q()
            .sub(&Scalar::one())
            .div(&q().sub(&Scalar::qpow(-1)))
            .unwrap();
        let j = s.jet_at_v1().unwrap();
        assert!(j.c0.equals(&Scalar::rational(1, 2)));
    }

    #[test]
    fn specialize_examples() {
        let one_plus_eta_u = Scalar::one().add(&Scalar::var(Var::Eta).mul(&Scalar::var(Var::U)));
        let r = one_plus_eta_u
            .specialize_var(Var::Eta, &Scalar::zero())
            .unwrap();
        assert!(r.equals(&Scalar::one()));

        let s = q().add(&Scalar::qpow(-1));
        let r = s.specialize_var(Var::V, &Scalar::integer(3)).unwrap();
        assert!(r.equals(&Scalar::rational(82, 9)));

        let s = Scalar::var(Var::U)
            .div(&q().sub(&Scalar::one()))
            .unwrap();
        let r = s.specialize_var(Var::U, &Scalar::zero()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn specialize_detects_vanishing_denominator() {
        let s = Scalar::one().div(&q().sub(&Scalar::one())).unwrap();
        assert_eq!(
            s.specialize_var(Var::V, &Scalar::integer(1)),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn q_number_specializes_to_the_integer_at_v1() {
        for n in -6..=6 {
            let j = Scalar::q_number(n).jet_at_v1().unwrap();
            assert!(j.c0.equals(&Scalar::integer(n as i64)), "n = {n}");
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_scalar() -> impl Strategy<Value = Scalar> {
            // sums of signed monomials in v, η, u with small exponents
            proptest::collection::vec(
                (-3i64..=3, 0u16..3, 0u16..2, 0u16..2),
                0..4,
            )
            .prop_map(|terms| {
                let mut acc = Scalar::zero();
                for (c, ev, ee, eu) in terms {
                    let mono = Scalar::integer(c)
                        .mul(&Scalar::vpow(ev as i32))
                        .mul(&Scalar {
                            num: Poly::var_pow(Var::Eta, ee),
                            den: Poly::one(),
                        })
                        .mul(&Scalar {
                            num: Poly::var_pow(Var::U, eu),
                            den: Poly::one(),
                        });
                    acc = acc.add(&mono);
                }
                acc
            })
        }

        fn small_fraction() -> impl Strategy<Value = Scalar> {
            (small_scalar(), small_scalar()).prop_map(|(a, b)| {
                if b.is_zero() {
                    a
                } else {
                    a.div(&b).unwrap()
                }
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn field_axioms(a in small_fraction(), b in small_fraction(), c in small_fraction()) {
                prop_assert!(a.add(&b).equals(&b.add(&a)));
                prop_assert!(a.mul(&b).equals(&b.mul(&a)));
                prop_assert!(a.add(&b).add(&c).equals(&a.add(&b.add(&c))));
                prop_assert!(a.mul(&b).mul(&c).equals(&a.mul(&b.mul(&c))));
                prop_assert!(a.mul(&b.add(&c)).equals(&a.mul(&b).add(&a.mul(&c))));
                if !a.is_zero() {
                    prop_assert!(a.mul(&a.inv().unwrap()).equals(&Scalar::one()));
                }
            }

            #[test]
            fn equality_agrees_with_subtract_then_zero_test(a in small_fraction(), b in small_fraction()) {
                prop_assert_eq!(a.equals(&b), a.sub(&b).is_zero());
            }

            #[test]
            fn equality_is_an_equivalence(a in small_fraction(), b in small_fraction()) {
                prop_assert!(a.equals(&a));
                prop_assert_eq!(a.equals(&b), b.equals(&a));
            }

            #[test]
            fn jet_of_product_is_product_of_jets(a in small_fraction(), b in small_fraction()) {
                let (ja, jb) = (a.jet_at_v1(), b.jet_at_v1());
                if let (Ok(ja), Ok(jb)) = (ja, jb) {
                    if let Ok(jab) = a.mul(&b).jet_at_v1() {
                        let prod = ja.mul(&jb);
                        prop_assert!(jab.c0.equals(&prod.c0));
                        prop_assert!(jab.c1.equals(&prod.c1));
                    }
                }
            }
        }
    }
}
