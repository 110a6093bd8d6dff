//! Weight-graded free noncommutative algebra over the generator alphabets.
//!
//! Expressions are finite sums of scalar-weighted words in [`GenSym`]
//! atoms. Normal forms sort words by a fixed total order and merge
//! coefficients, so two expressions are equal in the free algebra iff
//! their normal forms are identical. The q-commutator twists by
//! `q^{(wt x, wt y)}` computed from the ε-weights; the affine generator ξ
//! carries finite weight −θ for pairing purposes.
//!
//! Cartan data is stored in half-units: a [`HalfVec`] holds `2λ`, so the
//! q-exponent `q^λ = v^{2λ}` on a weight vector is always an integer power
//! of `v`.

use crate::rootsys::{inner, neg, root_add, Root};
use crate::scalar::{Scalar, ScalarError, Var, NVARS};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("expression is not weight-homogeneous")]
    NonHomogeneous,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A vector over the basis `{ĉ, e_{1,−1}, …, e_{l,−l}}` stored in
/// half-units: the field values are `2·coefficient`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfVec {
    /// Doubled coefficient of the central element ĉ.
    pub c2: i32,
    /// Doubled coefficients of e_{1,−1}..e_{l,−l}.
    pub eps2: Vec<i32>,
}

impl HalfVec {
    pub fn zero(l: usize) -> HalfVec {
        HalfVec {
            c2: 0,
            eps2: vec![0; l],
        }
    }

    /// `Σ coeff_i · e_{i,−i}` with integer coefficients (1-based indices).
    pub fn eps_units(l: usize, entries: &[(usize, i32)]) -> HalfVec {
        let mut v = HalfVec::zero(l);
        for (i, c) in entries {
            v.eps2[i - 1] += 2 * c;
        }
        v
    }

    /// The ε-vector `r` itself, as a Cartan exponent.
    pub fn from_root(r: &Root) -> HalfVec {
        HalfVec {
            c2: 0,
            eps2: r.iter().map(|x| 2 * x).collect(),
        }
    }

    /// `c·ĉ` in half units (`c2 = 2c`).
    pub fn c_halves(l: usize, c2: i32) -> HalfVec {
        let mut v = HalfVec::zero(l);
        v.c2 = c2;
        v
    }

    pub fn add(&self, o: &HalfVec) -> HalfVec {
        HalfVec {
            c2: self.c2 + o.c2,
            eps2: self.eps2.iter().zip(&o.eps2).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn negate(&self) -> HalfVec {
        HalfVec {
            c2: -self.c2,
            eps2: self.eps2.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c2 == 0 && self.eps2.iter().all(|x| *x == 0)
    }

    /// Doubled pairing `2(λ, wt)` against an ε-weight (ĉ contributes via
    /// the provided central value, also doubled).
    pub fn pair2(&self, wt: &Root, c_value2: i32) -> i32 {
        let mut s = self.c2 * c_value2 / 2;
        for (a, w) in self.eps2.iter().zip(wt) {
            s += a * w;
        }
        s
    }
}


impl NcExpr {
    /// The linear Cartan element `h_λ + c` written over the unit basis:
    /// single-unit [`GenSym::CartanLin`] atoms plus a constant. Keeping
    /// linear Cartan data in this shape makes classical normal forms
    /// cancel across catalogs and jets.
    pub fn cartan_combination(lambda: &HalfVec, c2: i32) -> NcExpr {
        let l = lambda.eps2.len();
        let mut out = NcExpr::scalar(Scalar::rational(c2 as i64, 2));
        if lambda.c2 != 0 {
            out = out.add(
                &NcExpr::atom(GenSym::CartanLin(HalfVec::c_halves(l, 2), 0))
                    .scale(&Scalar::rational(lambda.c2 as i64, 2)),
            );
        }
        for (i, h) in lambda.eps2.iter().enumerate() {
            if *h != 0 {
                out = out.add(
                    &NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(l, &[(i + 1, 1)]), 0))
                        .scale(&Scalar::rational(*h as i64, 2)),
                );
            }
        }
        out
    }
}

/// One generator symbol of an algebra alphabet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSym {
    /// Chevalley root vector with the given ε-root (quantum or classical
    /// context is decided by the surrounding catalog).
    Root(Root),
    /// Grouplike Cartan exponential `q^{λ}`.
    CartanExp(HalfVec),
    /// The atom `[λ + c] = (q^{λ+c} − q^{−λ−c})/(q − q^{−1})`; `c` is
    /// stored doubled.
    QBracket(HalfVec, i32),
    /// Classical linear Cartan element `h_λ + c`; `c` is stored doubled.
    CartanLin(HalfVec, i32),
    /// The deformed affine generator ξ (weight −θ).
    Xi,
    /// Classical/Yangian affine generator (weight −θ).
    XiClassical,
}

impl GenSym {
    pub fn cartan_exp_root(r: &Root) -> GenSym {
        GenSym::CartanExp(HalfVec::from_root(r))
    }

    /// The classical central element ĉ.
    pub fn central_c(l: usize) -> GenSym {
        GenSym::CartanLin(HalfVec::c_halves(l, 2), 0)
    }

    pub fn weight(&self, theta: &Root, l: usize) -> Root {
        match self {
            GenSym::Root(r) => r.clone(),
            GenSym::Xi | GenSym::XiClassical => neg(theta),
            _ => vec![0; l],
        }
    }

    pub fn is_xi(&self) -> bool {
        matches!(self, GenSym::Xi | GenSym::XiClassical)
    }
}

fn root_name(r: &Root) -> String {
    let pos: Vec<(usize, i32)> = r
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i + 1, *c))
        .collect();
    match pos.as_slice() {
        [(i, 1), (j, -1)] => format!("e[{i},-{j}]"),
        [(i, -1), (j, 1)] => format!("e[{j},-{i}]"),
        [(i, 1)] => format!("e[{i}]"),
        [(i, -1)] => format!("e[-{i}]"),
        [(i, 2)] => format!("e[{i},{i}]"),
        [(i, -2)] => format!("e[-{i},-{i}]"),
        [(i, 1), (j, 1)] => format!("e[{i},{j}]"),
        [(i, -1), (j, -1)] => format!("e[-{i},-{j}]"),
        _ => format!("e{r:?}"),
    }
}

fn halfvec_name(v: &HalfVec) -> String {
    let mut parts = Vec::new();
    if v.c2 != 0 {
        parts.push(if v.c2 == 2 {
            "c".to_string()
        } else {
            format!("{}/2 c", v.c2)
        });
    }
    for (i, c2) in v.eps2.iter().enumerate() {
        if *c2 != 0 {
            let name = format!("h{}", i + 1);
            parts.push(match c2 {
                2 => name,
                -2 => format!("-{name}"),
                _ => format!("{}/2 {name}", c2),
            });
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSym::Root(r) => write!(f, "{}", root_name(r)),
            GenSym::CartanExp(v) => write!(f, "q^({})", halfvec_name(v)),
            GenSym::QBracket(v, c2) => {
                if *c2 == 0 {
                    write!(f, "[{}]", halfvec_name(v))
                } else {
                    write!(f, "[{}+{}/2]", halfvec_name(v), c2)
                }
            }
            GenSym::CartanLin(v, c2) => {
                if *c2 == 0 {
                    write!(f, "h({})", halfvec_name(v))
                } else {
                    write!(f, "h({})+{}/2", halfvec_name(v), c2)
                }
            }
            GenSym::Xi => write!(f, "xi"),
            GenSym::XiClassical => write!(f, "xi~"),
        }
    }
}

pub type Word = Vec<GenSym>;

/// Normalized sum of scalar-weighted words; the canonical representative
/// has words sorted by the fixed total order, merged coefficients, and no
/// zero terms.
#[derive(Clone, Debug, PartialEq)]
pub struct NcExpr {
    terms: Vec<(Scalar, Word)>,
}

impl NcExpr {
    pub fn zero() -> NcExpr {
        NcExpr { terms: Vec::new() }
    }

    pub fn one() -> NcExpr {
        NcExpr {
            terms: vec![(Scalar::one(), Vec::new())],
        }
    }

    pub fn atom(g: GenSym) -> NcExpr {
        NcExpr {
            terms: vec![(Scalar::one(), vec![g])],
        }
    }

    pub fn word(w: Word) -> NcExpr {
        NcExpr {
            terms: vec![(Scalar::one(), w)],
        }
    }

    pub fn scalar(s: Scalar) -> NcExpr {
        NcExpr {
            terms: vec![(s, Vec::new())],
        }
        .normalized()
    }

    pub fn from_terms(terms: Vec<(Scalar, Word)>) -> NcExpr {
        NcExpr { terms }.normalized()
    }

    pub fn terms(&self) -> &[(Scalar, Word)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalized(mut self) -> NcExpr {
        self.terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut out: Vec<(Scalar, Word)> = Vec::with_capacity(self.terms.len());
        for (c, w) in self.terms {
            if let Some(last) = out.last_mut() {
                if last.1 == w {
                    last.0 = last.0.add(&c);
                    continue;
                }
            }
            out.push((c, w));
        }
        out.retain(|(c, _)| !c.is_zero());
        NcExpr { terms: out }
    }

    /// Canonical expansion: idempotent by construction.
    pub fn expand_normal_form(&self) -> NcExpr {
        self.clone().normalized()
    }

    pub fn add(&self, o: &NcExpr) -> NcExpr {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        NcExpr { terms: t }.normalized()
    }

    pub fn sub(&self, o: &NcExpr) -> NcExpr {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> NcExpr {
        NcExpr {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.neg(), w.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> NcExpr {
        if s.is_zero() {
            return NcExpr::zero();
        }
        NcExpr {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.mul(s), w.clone()))
                .collect(),
        }
        .normalized()
    }

    pub fn mul(&self, o: &NcExpr) -> NcExpr {
        let mut t = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ca, wa) in &self.terms {
            for (cb, wb) in &o.terms {
                let mut w = wa.clone();
                w.extend(wb.iter().cloned());
                t.push((ca.mul(cb), w));
            }
        }
        NcExpr { terms: t }.normalized()
    }

    /// Common weight of all words; errors when the expression mixes
    /// weights. The zero expression reports the zero weight.
    pub fn weight(&self, theta: &Root, l: usize) -> Result<Root, AlgError> {
        let mut wt: Option<Root> = None;
        for (_, w) in &self.terms {
            let mut acc = vec![0; l];
            for g in w {
                acc = root_add(&acc, &g.weight(theta, l));
            }
            match &wt {
                None => wt = Some(acc),
                Some(prev) if *prev == acc => {}
                _ => return Err(AlgError::NonHomogeneous),
            }
        }
        Ok(wt.unwrap_or_else(|| vec![0; l]))
    }

    /// Maximum number of ξ occurrences over all words.
    pub fn xi_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, w)| w.iter().filter(|g| g.is_xi()).count() as u32)
            .max()
            .unwrap_or(0)
    }

    /// Multiplicative substitution: atoms mapped to `None` stay put.
    pub fn substitute(&self, f: &dyn Fn(&GenSym) -> Option<NcExpr>) -> NcExpr {
        let mut out = NcExpr::zero();
        for (c, w) in &self.terms {
            let mut acc = NcExpr::scalar(c.clone());
            for g in w {
                let factor = f(g).unwrap_or_else(|| NcExpr::atom(g.clone()));
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Coefficientwise specialization of scalar variables.
    pub fn specialize(&self, map: &[Option<Scalar>; NVARS]) -> Result<NcExpr, ScalarError> {
        let mut t = Vec::with_capacity(self.terms.len());
        for (c, w) in &self.terms {
            t.push((c.specialize(map)?, w.clone()));
        }
        Ok(NcExpr { terms: t }.normalized())
    }

    pub fn specialize_var(&self, var: Var, value: &Scalar) -> Result<NcExpr, ScalarError> {
        let mut map: [Option<Scalar>; NVARS] = Default::default();
        map[var as usize] = Some(value.clone());
        self.specialize(&map)
    }

    /// First-order expansion at `v = 1 + s` over the classical alphabet.
    ///
    /// Atom rules: `q^λ ↦ 1 + 2s·h_λ`, `[λ+c] ↦ h_λ+c` (its first-order
    /// term vanishes), `ξ ↦ ξ~`, classical atoms pass through. Scalar
    /// coefficients go through their own jets and propagate poles.
    pub fn jet_classical(&self) -> Result<(NcExpr, NcExpr), ScalarError> {
        let mut c0 = NcExpr::zero();
        let mut c1 = NcExpr::zero();
        for (c, w) in &self.terms {
            let jc = c.jet_at_v1()?;
            let mut w0 = NcExpr::one();
            let mut w1 = NcExpr::zero();
            for g in w {
                let (a0, a1) = atom_jet(g);
                // (w0 + s w1)(a0 + s a1) truncated at first order
                let n1 = w0.mul(&a1).add(&w1.mul(&a0));
                w0 = w0.mul(&a0);
                w1 = n1;
            }
            c0 = c0.add(&w0.scale(&jc.c0));
            c1 = c1.add(&w1.scale(&jc.c0)).add(&w0.scale(&jc.c1));
        }
        Ok((c0, c1))
    }

    /// Scale so the first stored term has coefficient one; `None` for zero.
    pub fn monic(&self) -> Option<NcExpr> {
        let lead = self.terms.first()?.0.clone();
        Some(self.scale(&lead.inv().expect("leading coefficient is nonzero")))
    }
}

fn atom_jet(g: &GenSym) -> (NcExpr, NcExpr) {
    match g {
        GenSym::CartanExp(v) => (
            NcExpr::one(),
            NcExpr::cartan_combination(v, 0).scale(&Scalar::integer(2)),
        ),
        GenSym::QBracket(v, c2) => (NcExpr::cartan_combination(v, *c2), NcExpr::zero()),
        GenSym::Xi => (NcExpr::atom(GenSym::XiClassical), NcExpr::zero()),
        other => (NcExpr::atom(other.clone()), NcExpr::zero()),
    }
}

impl fmt::Display for NcExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (c, w)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join("·")
            };
            write!(f, "({c})·{word}")?;
        }
        Ok(())
    }
}

/// `[x, y]_{q^{sign}} = xy − q^{sign·(wt x, wt y)} yx`.
pub fn q_commutator(
    x: &NcExpr,
    y: &NcExpr,
    sign: i32,
    theta: &Root,
    l: usize,
) -> Result<NcExpr, AlgError> {
    if x.is_zero() || y.is_zero() {
        return Ok(NcExpr::zero());
    }
    let wx = x.weight(theta, l)?;
    let wy = y.weight(theta, l)?;
    let e = sign * inner(&wx, &wy) as i32;
    Ok(x.mul(y).sub(&y.mul(x).scale(&Scalar::qpow(e))))
}

/// Plain commutator `xy − yx` (the classical bracket).
pub fn plain_commutator(x: &NcExpr, y: &NcExpr) -> NcExpr {
    x.mul(y).sub(&y.mul(x))
}

/// `(ad_q e)^n y`, re-deriving the pairing from the current target weight
/// at each step.
pub fn ad_q_power(
    e: &NcExpr,
    n: u32,
    y: &NcExpr,
    theta: &Root,
    l: usize,
) -> Result<NcExpr, AlgError> {
    let mut acc = y.clone();
    for _ in 0..n {
        acc = q_commutator(e, &acc, 1, theta, l)?;
    }
    Ok(acc)
}

/// `(ad e)^n y` with the plain bracket.
pub fn ad_plain_power(e: &NcExpr, n: u32, y: &NcExpr) -> NcExpr {
    let mut acc = y.clone();
    for _ in 0..n {
        acc = plain_commutator(e, &acc);
    }
    acc
}

/// Normalized sum of scalar-weighted word pairs (a two-fold tensor).
#[derive(Clone, Debug, PartialEq)]
pub struct TensorExpr2 {
    terms: Vec<(Scalar, Word, Word)>,
}

impl TensorExpr2 {
    pub fn zero() -> TensorExpr2 {
        TensorExpr2 { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(Scalar, Word, Word)>) -> TensorExpr2 {
        TensorExpr2 { terms }.normalized()
    }

    pub fn terms(&self) -> &[(Scalar, Word, Word)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalized(mut self) -> TensorExpr2 {
        self.terms
            .sort_by(|a, b| (&a.1, &a.2).cmp(&(&b.1, &b.2)));
        let mut out: Vec<(Scalar, Word, Word)> = Vec::with_capacity(self.terms.len());
        for (c, w1, w2) in self.terms {
            if let Some(last) = out.last_mut() {
                if last.1 == w1 && last.2 == w2 {
                    last.0 = last.0.add(&c);
                    continue;
                }
            }
            out.push((c, w1, w2));
        }
        out.retain(|(c, _, _)| !c.is_zero());
        TensorExpr2 { terms: out }
    }

    /// `a ⊗ b` of two expressions.
    pub fn outer(a: &NcExpr, b: &NcExpr) -> TensorExpr2 {
        let mut t = Vec::new();
        for (ca, wa) in a.terms() {
            for (cb, wb) in b.terms() {
                t.push((ca.mul(cb), wa.clone(), wb.clone()));
            }
        }
        TensorExpr2 { terms: t }.normalized()
    }

    pub fn add(&self, o: &TensorExpr2) -> TensorExpr2 {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        TensorExpr2 { terms: t }.normalized()
    }

    pub fn sub(&self, o: &TensorExpr2) -> TensorExpr2 {
        self.add(&o.scale(&Scalar::integer(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> TensorExpr2 {
        if s.is_zero() {
            return TensorExpr2::zero();
        }
        TensorExpr2 {
            terms: self
                .terms
                .iter()
                .map(|(c, a, b)| (c.mul(s), a.clone(), b.clone()))
                .collect(),
        }
        .normalized()
    }

    /// Slotwise product.
    pub fn mul(&self, o: &TensorExpr2) -> TensorExpr2 {
        let mut t = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ca, a1, a2) in &self.terms {
            for (cb, b1, b2) in &o.terms {
                let mut w1 = a1.clone();
                w1.extend(b1.iter().cloned());
                let mut w2 = a2.clone();
                w2.extend(b2.iter().cloned());
                t.push((ca.mul(cb), w1, w2));
            }
        }
        TensorExpr2 { terms: t }.normalized()
    }

    pub fn specialize(&self, map: &[Option<Scalar>; NVARS]) -> Result<TensorExpr2, ScalarError> {
        let mut t = Vec::with_capacity(self.terms.len());
        for (c, a, b) in &self.terms {
            t.push((c.specialize(map)?, a.clone(), b.clone()));
        }
        Ok(TensorExpr2 { terms: t }.normalized())
    }

    /// Swap the tensor factors.
    pub fn flip(&self) -> TensorExpr2 {
        TensorExpr2 {
            terms: self
                .terms
                .iter()
                .map(|(c, a, b)| (c.clone(), b.clone(), a.clone()))
                .collect(),
        }
        .normalized()
    }

    /// First-order classical jet, slotwise.
    pub fn jet_classical(&self) -> Result<(TensorExpr2, TensorExpr2), ScalarError> {
        let mut c0 = TensorExpr2::zero();
        let mut c1 = TensorExpr2::zero();
        for (c, w1, w2) in &self.terms {
            let jc = c.jet_at_v1()?;
            let (a0, a1) = word_jet(w1);
            let (b0, b1) = word_jet(w2);
            let t0 = TensorExpr2::outer(&a0, &b0);
            let t1 = TensorExpr2::outer(&a1, &b0).add(&TensorExpr2::outer(&a0, &b1));
            c0 = c0.add(&t0.scale(&jc.c0));
            c1 = c1.add(&t1.scale(&jc.c0)).add(&t0.scale(&jc.c1));
        }
        Ok((c0, c1))
    }
}

fn word_jet(w: &Word) -> (NcExpr, NcExpr) {
    let mut w0 = NcExpr::one();
    let mut w1 = NcExpr::zero();
    for g in w {
        let (a0, a1) = atom_jet(g);
        let n1 = w0.mul(&a1).add(&w1.mul(&a0));
        w0 = w0.mul(&a0);
        w1 = n1;
    }
    (w0, w1)
}

/// Three-fold tensor variant, used for coassociativity checks.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorExpr3 {
    terms: Vec<(Scalar, Word, Word, Word)>,
}

impl TensorExpr3 {
    pub fn zero() -> TensorExpr3 {
        TensorExpr3 { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(Scalar, Word, Word, Word)>) -> TensorExpr3 {
        TensorExpr3 { terms }.normalized()
    }

    pub fn terms(&self) -> &[(Scalar, Word, Word, Word)] {
        &self.terms
    }

    fn normalized(mut self) -> TensorExpr3 {
        self.terms
            .sort_by(|a, b| (&a.1, &a.2, &a.3).cmp(&(&b.1, &b.2, &b.3)));
        let mut out: Vec<(Scalar, Word, Word, Word)> = Vec::with_capacity(self.terms.len());
        for (c, w1, w2, w3) in self.terms {
            if let Some(last) = out.last_mut() {
                if last.1 == w1 && last.2 == w2 && last.3 == w3 {
                    last.0 = last.0.add(&c);
                    continue;
                }
            }
            out.push((c, w1, w2, w3));
        }
        out.retain(|(c, ..)| !c.is_zero());
        TensorExpr3 { terms: out }
    }

    pub fn add(&self, o: &TensorExpr3) -> TensorExpr3 {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        TensorExpr3 { terms: t }.normalized()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{RootSystem, Series, SeriesKind};
    use crate::scalar::tau;

    fn gl3() -> RootSystem {
        RootSystem::build(Series::new(SeriesKind::A, 3).unwrap())
    }

    fn raise(rs: &RootSystem, i: usize) -> NcExpr {
        NcExpr::atom(GenSym::Root(rs.simple[i].clone()))
    }

    #[test]
    fn q_commutator_weight_pairing() {
        let rs = gl3();
        let x = raise(&rs, 0);
        let y = raise(&rs, 1);
        // (α_1, α_2) = −1, sign +1 → xy − q^{−1} yx
        let got = q_commutator(&x, &y, 1, &rs.theta, 3).unwrap();
        let expect = x.mul(&y).sub(&y.mul(&x).scale(&Scalar::qpow(-1)));
        assert_eq!(got, expect);
        // at v = 1 it is the plain commutator
        let at1 = got.specialize_var(Var::V, &Scalar::one()).unwrap();
        let plain = plain_commutator(&x, &y)
            .specialize_var(Var::V, &Scalar::one())
            .unwrap();
        assert_eq!(at1, plain);
    }

    #[test]
    fn q_commutator_of_equal_atoms_with_self_pairing_two() {
        let rs = gl3();
        let theta_vec = rs.theta.clone();
        // any weight-β atom with (β,β) = 2: use a simple root vector
        let x = raise(&rs, 0);
        let got = q_commutator(&x, &x, 1, &theta_vec, 3).unwrap();
        // direct expansion oracle: xx − q² xx = (1 − q²) x²
        let expect = x
            .mul(&x)
            .scale(&Scalar::one().sub(&Scalar::qpow(2)));
        assert_eq!(got, expect);
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        let rs = gl3();
        let mixed = raise(&rs, 0).add(&raise(&rs, 1));
        assert!(matches!(
            q_commutator(&mixed, &raise(&rs, 0), 1, &rs.theta, 3),
            Err(AlgError::NonHomogeneous)
        ));
    }

    #[test]
    fn ad_q_power_basics() {
        let rs = gl3();
        let e = raise(&rs, 0);
        let y = NcExpr::atom(GenSym::Xi);
        let once = ad_q_power(&e, 1, &y, &rs.theta, 3).unwrap();
        assert_eq!(once, q_commutator(&e, &y, 1, &rs.theta, 3).unwrap());
        // classical square: eey − 2eye + yee at v = 1
        let sq = ad_q_power(&e, 2, &y, &rs.theta, 3)
            .unwrap()
            .specialize_var(Var::V, &Scalar::one())
            .unwrap();
        let expect = e
            .mul(&e)
            .mul(&y)
            .sub(&e.mul(&y).mul(&e).scale(&Scalar::integer(2)))
            .add(&y.mul(&e).mul(&e));
        assert_eq!(sq, expect);
    }

    #[test]
    fn normal_form_merges_and_cancels() {
        let rs = gl3();
        let x = raise(&rs, 0);
        assert_eq!(x.add(&x), x.scale(&Scalar::integer(2)));
        let y = raise(&rs, 1);
        let q = Scalar::qpow(-1);
        let expr = x
            .mul(&y)
            .sub(&y.mul(&x).scale(&q))
            .add(&y.mul(&x).scale(&q));
        assert_eq!(expr, x.mul(&y));
        // idempotent and linear
        assert_eq!(expr.expand_normal_form(), expr);
    }

    #[test]
    fn substitution_identity_two_bracket() {
        // The two-bracket deformation relation collapses to 0 = 0 under
        // ξ := τ·w for any weight-(−θ) word w, purely in the free algebra.
        let rs = gl3();
        let e = raise(&rs, 0);
        let tilde = NcExpr::word(vec![
            GenSym::cartan_exp_root(&rs.theta),
            GenSym::Root(neg(&rs.theta)),
        ]);
        let xi = NcExpr::atom(GenSym::Xi);
        let t = NcExpr::scalar(tau());
        let lhs = q_commutator(
            &q_commutator(&e, &xi, 1, &rs.theta, 3).unwrap(),
            &xi,
            1,
            &rs.theta,
            3,
        )
        .unwrap();
        let b_ee = q_commutator(
            &q_commutator(&e, &tilde, 1, &rs.theta, 3).unwrap(),
            &tilde,
            1,
            &rs.theta,
            3,
        )
        .unwrap();
        let b_ex = q_commutator(
            &q_commutator(&e, &tilde, 1, &rs.theta, 3).unwrap(),
            &xi,
            1,
            &rs.theta,
            3,
        )
        .unwrap();
        let b_xe = q_commutator(
            &q_commutator(&e, &xi, 1, &rs.theta, 3).unwrap(),
            &tilde,
            1,
            &rs.theta,
            3,
        )
        .unwrap();
        let rhs = b_ee
            .scale(&tau().mul(&tau()).neg())
            .add(&b_ex.add(&b_xe).scale(&tau()));
        let sub = |g: &GenSym| match g {
            GenSym::Xi => Some(t.mul(&tilde)),
            _ => None,
        };
        let diff = lhs.sub(&rhs).substitute(&sub);
        assert!(diff.is_zero(), "free-algebra identity failed: {diff}");
    }

    #[test]
    fn jet_of_cartan_conjugation_relation() {
        // q^{e_{1,−1}}·ξ − q^{−1}·ξ·q^{e_{1,−1}} → c0 = 0, c1 = 2([h1, ξ] + ξ)
        let _rs = gl3();
        let k = NcExpr::atom(GenSym::CartanExp(HalfVec::eps_units(3, &[(1, 1)])));
        let xi = NcExpr::atom(GenSym::Xi);
        let expr = k.mul(&xi).sub(&xi.mul(&k).scale(&Scalar::qpow(-1)));
        let (c0, c1) = expr.jet_classical().unwrap();
        assert!(c0.is_zero());
        let h1 = NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(3, &[(1, 1)]), 0));
        let xic = NcExpr::atom(GenSym::XiClassical);
        let expect = plain_commutator(&h1, &xic).add(&xic).scale(&Scalar::integer(2));
        assert_eq!(c1, expect);
    }

    #[test]
    fn jet_of_qbracket_is_linear_cartan() {
        let v = HalfVec::eps_units(3, &[(1, 1), (2, -1)]);
        let expr = NcExpr::atom(GenSym::QBracket(v.clone(), 0));
        let (c0, c1) = expr.jet_classical().unwrap();
        assert_eq!(c0, NcExpr::cartan_combination(&v, 0));
        assert!(c1.is_zero());
    }

    #[test]
    fn jet_of_classical_expression_is_itself() {
        let rs = gl3();
        let x = NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(3, &[(2, 1)]), 0))
            .mul(&NcExpr::atom(GenSym::Root(rs.simple[0].clone())));
        let (c0, c1) = x.jet_classical().unwrap();
        assert_eq!(c0, x);
        assert!(c1.is_zero());
    }

    #[test]
    fn jet_pole_propagates() {
        let x = NcExpr::atom(GenSym::Xi).scale(&tau());
        assert!(x.jet_classical().is_err());
    }

    #[test]
    fn specialize_examples() {
        let rs = gl3();
        let w = NcExpr::atom(GenSym::Root(rs.simple[0].clone()));
        let ueta = w.scale(&Scalar::var(Var::U));
        assert!(ueta
            .specialize_var(Var::U, &Scalar::zero())
            .unwrap()
            .is_zero());
        // a := 0 on an affine combination (1 − (q−q^{−1})a)ξ + ηaξ̃ gives ξ back
        let xi = NcExpr::atom(GenSym::Xi);
        let image = xi
            .scale(
                &Scalar::one()
                    .sub(&Scalar::qpow(1).sub(&Scalar::qpow(-1)).mul(&Scalar::var(Var::A))),
            )
            .add(&w.scale(&Scalar::var(Var::Eta).mul(&Scalar::var(Var::A))));
        assert_eq!(
            image.specialize_var(Var::A, &Scalar::zero()).unwrap(),
            xi
        );
    }

    #[test]
    fn weight_additivity_of_q_commutator() {
        let rs = gl3();
        let x = raise(&rs, 0);
        let y = NcExpr::atom(GenSym::Xi);
        let b = q_commutator(&x, &y, 1, &rs.theta, 3).unwrap();
        let expect = root_add(&rs.simple[0], &neg(&rs.theta));
        assert_eq!(b.weight(&rs.theta, 3).unwrap(), expect);
    }

    #[test]
    fn classical_antisymmetry_at_v1() {
        let rs = gl3();
        let x = raise(&rs, 0);
        let y = raise(&rs, 1);
        let a = q_commutator(&x, &y, 1, &rs.theta, 3)
            .unwrap()
            .specialize_var(Var::V, &Scalar::one())
            .unwrap();
        let b = q_commutator(&y, &x, 1, &rs.theta, 3)
            .unwrap()
            .specialize_var(Var::V, &Scalar::one())
            .unwrap();
        assert_eq!(a, b.neg());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_expr() -> impl Strategy<Value = NcExpr> {
            // short words over a fixed mixed alphabet with small integer
            // coefficients
            let atom = prop_oneof![
                Just(GenSym::Root(vec![1, -1, 0])),
                Just(GenSym::Root(vec![0, 1, -1])),
                Just(GenSym::Root(vec![-1, 1, 0])),
                Just(GenSym::CartanExp(HalfVec::eps_units(3, &[(1, 1)]))),
                Just(GenSym::CartanExp(HalfVec::eps_units(3, &[(2, -1)]))),
                Just(GenSym::QBracket(HalfVec::eps_units(3, &[(1, 1), (2, -1)]), 0)),
                Just(GenSym::Xi),
            ];
            proptest::collection::vec(
                (
                    -3i64..=3,
                    proptest::collection::vec(atom, 0..3),
                ),
                0..3,
            )
            .prop_map(|terms| {
                NcExpr::from_terms(
                    terms
                        .into_iter()
                        .map(|(c, w)| (Scalar::integer(c), w))
                        .collect(),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn jet_of_product_obeys_the_product_rule(a in small_expr(), b in small_expr()) {
                let (a0, a1) = a.jet_classical().unwrap();
                let (b0, b1) = b.jet_classical().unwrap();
                let (p0, p1) = a.mul(&b).jet_classical().unwrap();
                prop_assert_eq!(p0, a0.mul(&b0));
                prop_assert_eq!(p1, a0.mul(&b1).add(&a1.mul(&b0)));
            }

            #[test]
            fn normal_form_is_idempotent_and_additive(a in small_expr(), b in small_expr()) {
                prop_assert_eq!(a.expand_normal_form(), a.clone());
                let s = a.add(&b);
                prop_assert_eq!(s.expand_normal_form(), a.add(&b));
            }
        }
    }

    #[test]
    fn tensor_outer_and_flip() {
        let rs = gl3();
        let x = raise(&rs, 0);
        let y = raise(&rs, 1);
        let t = TensorExpr2::outer(&x, &y);
        assert_eq!(t.flip(), TensorExpr2::outer(&y, &x));
        assert!(t.sub(&t).is_zero());
    }
}
