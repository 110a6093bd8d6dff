//! Coproduct, antipode, and counit data for every algebra family, their
//! multiplicative/anti-multiplicative extensions, and exact Hopf-axiom
//! checks in tensor-product representations.
//!
//! Structural atoms extend uniformly: `q^λ` is grouplike, `[λ+c]` splits
//! as `[λ+c]⊗q^{λ+c} + q^{−λ−c}⊗[λ+c]`, classical Cartan elements are
//! primitive. The alphabet-specific data lives in [`HopfData`]: the
//! coproducts and antipodes of the Chevalley vectors and of ξ. For the
//! B, C, D deformations the ξ data is carried in general form (the ẽ word
//! plus `k_{δ−θ}`), and Δ_q(ẽ) is computed by multiplicative extension —
//! no explicit formulas are invented for them.

use crate::freealg::{GenSym, HalfVec, NcExpr, TensorExpr2, Word};
use crate::relations::{
    chevalley_roots, classical_alphabet, composite_root_vectors, quantum_alphabet, tilde_e,
    Catalog,
};
use crate::reps::{evaluate_tensor2, Matrix, RepError, Representation};
use crate::rootsys::{neg, Root, RootSystem, Series, SeriesKind};
use crate::scalar::{tau, Scalar, ScalarError, Var, NVARS};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("no Hopf data for symbol {0}")]
    UnknownSymbol(String),
    #[error("Hopf family is not available for this series")]
    Unsupported,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfFamily {
    Uqg,
    QuantumCurrent,
    Drinfeldian,
    Yangian,
}

/// ξ coproduct data: either a literal display or the general form
/// `ξ⊗1 + k^{−1}⊗ξ + τ(Δ_q(ẽ) − ẽ⊗1 − k^{−1}⊗ẽ)` carried unexpanded.
#[derive(Clone, Debug)]
pub enum XiCoproduct {
    Explicit(TensorExpr2),
    General { tilde: NcExpr },
}

#[derive(Clone, Debug)]
pub enum XiAntipode {
    Explicit(NcExpr),
    /// `−k ξ + τ(S_q(ẽ) + k ẽ)`.
    General { tilde: NcExpr },
}

#[derive(Clone, Debug)]
pub struct HopfData {
    pub family: HopfFamily,
    pub series: Series,
    pub classical: bool,
    pub alphabet: Vec<GenSym>,
    delta_root: BTreeMap<Root, TensorExpr2>,
    s_root: BTreeMap<Root, NcExpr>,
    pub delta_xi: Option<XiCoproduct>,
    pub s_xi: Option<XiAntipode>,
    /// `k_{δ−θ} = k_δ Π k_{α_i}^{−n_i}` as a Cartan exponent, assembled
    /// from the marks.
    pub k_delta_theta: HalfVec,
}

/// Assemble `k_{δ−θ}` from the marks: exponent `ĉ − Σ n_i α_i`.
pub fn k_delta_theta(rs: &RootSystem) -> HalfVec {
    let l = rs.series.l;
    let mut acc = vec![0i32; l];
    for (i, alpha) in rs.simple.iter().enumerate() {
        let n = rs.marks[i] as i32;
        for (a, b) in acc.iter_mut().zip(alpha) {
            *a -= n * b;
        }
    }
    let mut v = HalfVec::from_root(&acc);
    v.c2 = 2;
    v
}

pub fn hopf_data(family: HopfFamily, series: Series) -> Result<HopfData, HopfError> {
    let rs = RootSystem::build(series);
    let l = series.l;
    let kdt = k_delta_theta(&rs);
    match family {
        HopfFamily::Uqg | HopfFamily::QuantumCurrent | HopfFamily::Drinfeldian => {
            let mut delta_root = BTreeMap::new();
            let mut s_root = BTreeMap::new();
            // raising: Δe = e⊗1 + k_α^{−1}⊗e, S(e) = −k_α e;
            // lowering: Δf = f⊗k_α + 1⊗f, S(f) = −f k_α^{−1}
            for beta in chevalley_roots(series) {
                let e = GenSym::Root(beta.clone());
                let positive = beta.iter().find(|x| **x != 0).map(|x| *x > 0).unwrap();
                let alpha = if positive { beta.clone() } else { neg(&beta) };
                let k = GenSym::CartanExp(HalfVec::from_root(&alpha));
                let kinv = GenSym::CartanExp(HalfVec::from_root(&neg(&alpha)));
                if positive {
                    delta_root.insert(
                        beta.clone(),
                        TensorExpr2::from_terms(vec![
                            (Scalar::one(), vec![e.clone()], vec![]),
                            (Scalar::one(), vec![kinv.clone()], vec![e.clone()]),
                        ]),
                    );
                    s_root.insert(
                        beta.clone(),
                        NcExpr::word(vec![k.clone(), e.clone()]).scale(&Scalar::integer(-1)),
                    );
                } else {
                    delta_root.insert(
                        beta.clone(),
                        TensorExpr2::from_terms(vec![
                            (Scalar::one(), vec![e.clone()], vec![k.clone()]),
                            (Scalar::one(), vec![], vec![e.clone()]),
                        ]),
                    );
                    s_root.insert(
                        beta.clone(),
                        NcExpr::word(vec![e.clone(), kinv.clone()]).scale(&Scalar::integer(-1)),
                    );
                }
            }
            let with_xi = family != HopfFamily::Uqg;
            let (delta_xi, s_xi) = match family {
                HopfFamily::Uqg => (None, None),
                HopfFamily::QuantumCurrent => {
                    let kinv = GenSym::CartanExp(kdt.negate());
                    let k = GenSym::CartanExp(kdt.clone());
                    (
                        Some(XiCoproduct::Explicit(TensorExpr2::from_terms(vec![
                            (Scalar::one(), vec![GenSym::Xi], vec![]),
                            (Scalar::one(), vec![kinv], vec![GenSym::Xi]),
                        ]))),
                        Some(XiAntipode::Explicit(
                            NcExpr::word(vec![k, GenSym::Xi]).scale(&Scalar::integer(-1)),
                        )),
                    )
                }
                HopfFamily::Drinfeldian => {
                    let te = tilde_e(&rs);
                    if series.kind == SeriesKind::A {
                        // the displayed coproduct matches the general form
                        // exactly; the displayed antipode is kept for the
                        // recorded comparison only, and the operative
                        // antipode is the general one (the antipode is
                        // unique given the coproduct, and the axiom checks
                        // arbitrate in its favor at rank ≥ 4)
                        (
                            Some(XiCoproduct::Explicit(delta_xi_explicit_a(&rs))),
                            Some(XiAntipode::General { tilde: te }),
                        )
                    } else {
                        (
                            Some(XiCoproduct::General { tilde: te.clone() }),
                            Some(XiAntipode::General { tilde: te }),
                        )
                    }
                }
                HopfFamily::Yangian => unreachable!(),
            };
            Ok(HopfData {
                family,
                series,
                classical: false,
                alphabet: quantum_alphabet(series, with_xi),
                delta_root,
                s_root,
                delta_xi,
                s_xi,
                k_delta_theta: kdt,
            })
        }
        HopfFamily::Yangian => {
            if series.kind != SeriesKind::A {
                return Err(HopfError::Unsupported);
            }
            let mut delta_root = BTreeMap::new();
            let mut s_root = BTreeMap::new();
            for beta in chevalley_roots(series) {
                let e = GenSym::Root(beta.clone());
                delta_root.insert(
                    beta.clone(),
                    TensorExpr2::from_terms(vec![
                        (Scalar::one(), vec![e.clone()], vec![]),
                        (Scalar::one(), vec![], vec![e.clone()]),
                    ]),
                );
                s_root.insert(beta.clone(), NcExpr::atom(e).scale(&Scalar::integer(-1)));
            }
            let comp = composite_root_vectors(&rs, true);
            let eta = Scalar::var(Var::Eta);
            let xi = GenSym::XiClassical;
            let half_c = NcExpr::atom(GenSym::central_c(l)).scale(&Scalar::rational(1, 2));
            let el1 = comp[&diff_root(l, l, 1)].clone();
            // Δ(ξ) = ξ⊗1 + 1⊗ξ + η(½ĉ⊗e_{l,−1} + Σ_{i=1}^{l} e_{l,−i}⊗e_{i,−1}),
            // with the i = 1 and i = l terms hitting the diagonal elements
            let mut extra = TensorExpr2::outer(&half_c, &el1);
            for i in 1..=l {
                let left = if i == l {
                    NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(l, &[(l, 1)]), 0))
                } else {
                    comp[&diff_root(l, l, i)].clone()
                };
                let right = if i == 1 {
                    NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(l, &[(1, 1)]), 0))
                } else {
                    comp[&diff_root(l, i, 1)].clone()
                };
                extra = extra.add(&TensorExpr2::outer(&left, &right));
            }
            let delta_xi = TensorExpr2::from_terms(vec![
                (Scalar::one(), vec![xi.clone()], vec![]),
                (Scalar::one(), vec![], vec![xi.clone()]),
            ])
            .add(&extra.scale(&eta));
            // S(ξ) = −ξ + η(½ĉ e_{l,−1} + Σ e_{l,−i} e_{i,−1})
            let mut s_extra = half_c.mul(&el1);
            for i in 1..=l {
                let left = if i == l {
                    NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(l, &[(l, 1)]), 0))
                } else {
                    comp[&diff_root(l, l, i)].clone()
                };
                let right = if i == 1 {
                    NcExpr::atom(GenSym::CartanLin(HalfVec::eps_units(l, &[(1, 1)]), 0))
                } else {
                    comp[&diff_root(l, i, 1)].clone()
                };
                s_extra = s_extra.add(&left.mul(&right));
            }
            let s_xi = NcExpr::atom(xi)
                .scale(&Scalar::integer(-1))
                .add(&s_extra.scale(&eta));
            Ok(HopfData {
                family,
                series,
                classical: true,
                alphabet: classical_alphabet(series, true),
                delta_root,
                s_root,
                delta_xi: Some(XiCoproduct::Explicit(delta_xi)),
                s_xi: Some(XiAntipode::Explicit(s_xi)),
                k_delta_theta: kdt,
            })
        }
    }
}

fn diff_root(l: usize, i: usize, j: usize) -> Root {
    let mut r = vec![0; l];
    r[i - 1] += 1;
    r[j - 1] -= 1;
    r
}

/// The displayed coproduct of ξ for the A series:
/// `Δ(ξ) = ξ⊗1 + q^{e_{1,−1}−e_{l,−l}−ĉ}⊗ξ + η(e_{l,−1}q^{e_{l,−l}} ⊗
/// [e_{1,−1}] + [½ĉ+e_{l,−l}]q^{−½ĉ} ⊗ e_{l,−1}q^{e_{l,−l}} + Σ e_{l,−i}
/// q^{e_{l,−l}} ⊗ e_{i,−1}q^{e_{i,−i}})(q^{e_{1,−1}}⊗q^{e_{1,−1}})`, with
/// the sum over the interior indices 2 ≤ i ≤ l−1.
fn delta_xi_explicit_a(rs: &RootSystem) -> TensorExpr2 {
    let l = rs.series.l;
    let comp = composite_root_vectors(rs, false);
    let eta = Scalar::var(Var::Eta);
    let kl = NcExpr::atom(GenSym::CartanExp(HalfVec::eps_units(l, &[(l, 1)])));
    let el1 = comp[&diff_root(l, l, 1)].clone();
    let mut mid = TensorExpr2::outer(
        &el1.mul(&kl),
        &NcExpr::atom(GenSym::QBracket(HalfVec::eps_units(l, &[(1, 1)]), 0)),
    );
    let mut half_c_plus_el = HalfVec::eps_units(l, &[(l, 1)]);
    half_c_plus_el.c2 = 1;
    let mut minus_half_c = HalfVec::zero(l);
    minus_half_c.c2 = -1;
    mid = mid.add(&TensorExpr2::outer(
        &NcExpr::word(vec![
            GenSym::QBracket(half_c_plus_el, 0),
            GenSym::CartanExp(minus_half_c),
        ]),
        &el1.mul(&kl),
    ));
    for i in 2..l {
        let ki = NcExpr::atom(GenSym::CartanExp(HalfVec::eps_units(l, &[(i, 1)])));
        mid = mid.add(&TensorExpr2::outer(
            &comp[&diff_root(l, l, i)].mul(&kl),
            &comp[&diff_root(l, i, 1)].mul(&ki),
        ));
    }
    let k1 = NcExpr::atom(GenSym::CartanExp(HalfVec::eps_units(l, &[(1, 1)])));
    let trail = TensorExpr2::outer(&k1, &k1);
    let mut kdt_inv = HalfVec::eps_units(l, &[(1, 1), (l, -1)]);
    kdt_inv.c2 = -2;
    TensorExpr2::from_terms(vec![
        (Scalar::one(), vec![GenSym::Xi], vec![]),
        (
            Scalar::one(),
            vec![GenSym::CartanExp(kdt_inv)],
            vec![GenSym::Xi],
        ),
    ])
    .add(&mid.scale(&eta).mul(&trail))
}

/// The displayed antipode of ξ for the A series (transcription kept for
/// the recorded display comparison; the operative antipode is the general
/// form):
/// `S(ξ) = −q^{ĉ−e_{1,−1}+e_{l,−l}} ξ + η([½ĉ+e_{1,−1}+e_{l,−l}+1]
/// q^{½ĉ−e_{1,−1}+e_{l,−l}−1} e_{l,−1} + Σ_{k=1}^{l−1} q^{−k}(q−q^{−1})^{k−1}
/// Σ_{l−1≥i_k>…>i_1≥2} e_{l,−i_k} e_{i_k,−i_{k−1}} ⋯ e_{i_1,−1} q^{−2e_{1,−1}})`,
/// reading the k-th term as the chains with k interior indices (k+1 root
/// factors, so the sum carries no bare `e_{l,−1}` word); the antipode
/// axiom check against the mechanically derived general form is the
/// arbiter of this reading.
pub fn s_xi_display_a(rs: &RootSystem) -> NcExpr {
    let l = rs.series.l;
    let comp = composite_root_vectors(rs, false);
    let eta = Scalar::var(Var::Eta);
    let mut kdt = HalfVec::eps_units(l, &[(1, -1), (l, 1)]);
    kdt.c2 = 2;
    let lead = NcExpr::word(vec![GenSym::CartanExp(kdt), GenSym::Xi]).scale(&Scalar::integer(-1));
    let mut bracket = HalfVec::eps_units(l, &[(1, 1), (l, 1)]);
    bracket.c2 = 1;
    let mut kexp = HalfVec::eps_units(l, &[(1, -1), (l, 1)]);
    kexp.c2 = 1;
    let el1 = comp[&diff_root(l, l, 1)].clone();
    let mut extra = NcExpr::word(vec![GenSym::QBracket(bracket, 2), GenSym::CartanExp(kexp)])
        .mul(&el1)
        .scale(&Scalar::qpow(-1));
    let km2 = NcExpr::atom(GenSym::CartanExp(HalfVec::eps_units(l, &[(1, -2)])));
    let qdiff = Scalar::qpow(1).sub(&Scalar::qpow(-1));
    for k in 1..l {
        // all decreasing chains l > i_{k−1} > … > i_1 > 1 with interior
        // indices in [2, l−1]
        let mut coef = Scalar::qpow(-(k as i32));
        for _ in 1..k {
            coef = coef.mul(&qdiff);
        }
        for chain in descending_chains(l, k) {
            let mut word = NcExpr::one();
            let mut upper = l;
            for idx in &chain {
                word = word.mul(&comp[&diff_root(l, upper, *idx)]);
                upper = *idx;
            }
            word = word.mul(&comp[&diff_root(l, upper, 1)]);
            extra = extra.add(&word.mul(&km2).scale(&coef));
        }
    }
    lead.add(&extra.scale(&eta))
}

/// Strictly decreasing sequences of the given length from {2, …, l−1}.
fn descending_chains(l: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(from: usize, len: usize, lo: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in (lo..=from).rev() {
            for mut tail in rec(i - 1, len - 1, lo) {
                let mut c = vec![i];
                c.append(&mut tail);
                out.push(c);
            }
        }
        out
    }
    rec(l - 1, len, 2)
}

// ---------------------------------------------------------------------
// Structural extension rules
// ---------------------------------------------------------------------

fn delta_atom(g: &GenSym, hd: &HopfData) -> Result<TensorExpr2, HopfError> {
    match g {
        GenSym::Root(r) => hd
            .delta_root
            .get(r)
            .cloned()
            .ok_or_else(|| HopfError::UnknownSymbol(g.to_string())),
        GenSym::CartanExp(v) => Ok(TensorExpr2::from_terms(vec![(
            Scalar::one(),
            vec![GenSym::CartanExp(v.clone())],
            vec![GenSym::CartanExp(v.clone())],
        )])),
        GenSym::QBracket(v, c2) => {
            let qb = GenSym::QBracket(v.clone(), *c2);
            Ok(TensorExpr2::from_terms(vec![
                (
                    Scalar::vpow(*c2),
                    vec![qb.clone()],
                    vec![GenSym::CartanExp(v.clone())],
                ),
                (
                    Scalar::vpow(-c2),
                    vec![GenSym::CartanExp(v.negate())],
                    vec![qb],
                ),
            ]))
        }
        GenSym::CartanLin(v, c2) => {
            let h = GenSym::CartanLin(v.clone(), 0);
            Ok(TensorExpr2::from_terms(vec![
                (Scalar::one(), vec![h.clone()], vec![]),
                (Scalar::one(), vec![], vec![h]),
                (Scalar::rational(*c2 as i64, 2), vec![], vec![]),
            ]))
        }
        GenSym::Xi | GenSym::XiClassical => match &hd.delta_xi {
            Some(XiCoproduct::Explicit(t)) => Ok(t.clone()),
            Some(XiCoproduct::General { tilde }) => Ok(general_delta_xi(hd, tilde)?),
            None => Err(HopfError::UnknownSymbol(g.to_string())),
        },
    }
}

fn s_atom(g: &GenSym, hd: &HopfData) -> Result<NcExpr, HopfError> {
    match g {
        GenSym::Root(r) => hd
            .s_root
            .get(r)
            .cloned()
            .ok_or_else(|| HopfError::UnknownSymbol(g.to_string())),
        GenSym::CartanExp(v) => Ok(NcExpr::atom(GenSym::CartanExp(v.negate()))),
        GenSym::QBracket(v, c2) => Ok(NcExpr::atom(GenSym::QBracket(v.negate(), *c2))),
        GenSym::CartanLin(v, c2) => Ok(NcExpr::cartan_combination(&v.negate(), *c2)),
        GenSym::Xi | GenSym::XiClassical => match &hd.s_xi {
            Some(XiAntipode::Explicit(e)) => Ok(e.clone()),
            Some(XiAntipode::General { tilde }) => Ok(general_s_xi(hd, tilde)?),
            None => Err(HopfError::UnknownSymbol(g.to_string())),
        },
    }
}

fn counit_atom(g: &GenSym, hd: &HopfData) -> Result<Scalar, HopfError> {
    match g {
        GenSym::Root(_) | GenSym::Xi | GenSym::XiClassical => {
            if matches!(g, GenSym::Root(r) if !hd.delta_root.contains_key(r)) {
                return Err(HopfError::UnknownSymbol(g.to_string()));
            }
            Ok(Scalar::zero())
        }
        GenSym::CartanExp(_) => Ok(Scalar::one()),
        GenSym::QBracket(_, c2) => Ok(Scalar::q_number_halves(*c2)),
        GenSym::CartanLin(_, c2) => Ok(Scalar::rational(*c2 as i64, 2)),
    }
}

/// `Δ(ξ)` from the general form, expanded symbolically.
fn general_delta_xi(hd: &HopfData, tilde: &NcExpr) -> Result<TensorExpr2, HopfError> {
    let kinv = GenSym::CartanExp(hd.k_delta_theta.negate());
    let head = TensorExpr2::from_terms(vec![
        (Scalar::one(), vec![GenSym::Xi], vec![]),
        (Scalar::one(), vec![kinv.clone()], vec![GenSym::Xi]),
    ]);
    let dte = coproduct_no_xi(tilde, hd)?;
    let sub = TensorExpr2::outer(tilde, &NcExpr::one()).add(&TensorExpr2::outer(
        &NcExpr::atom(kinv),
        tilde,
    ));
    Ok(head.add(&dte.sub(&sub).scale(&tau())))
}

/// `S(ξ)` from the general form.
fn general_s_xi(hd: &HopfData, tilde: &NcExpr) -> Result<NcExpr, HopfError> {
    let k = NcExpr::atom(GenSym::CartanExp(hd.k_delta_theta.clone()));
    let head = k.mul(&NcExpr::atom(GenSym::Xi)).scale(&Scalar::integer(-1));
    let ste = antipode(tilde, hd)?;
    Ok(head.add(&ste.add(&k.mul(tilde)).scale(&tau())))
}

fn coproduct_no_xi(e: &NcExpr, hd: &HopfData) -> Result<TensorExpr2, HopfError> {
    let mut out = TensorExpr2::zero();
    for (c, w) in e.terms() {
        let mut acc = TensorExpr2::from_terms(vec![(c.clone(), vec![], vec![])]);
        for g in w {
            assert!(!g.is_xi());
            acc = acc.mul(&delta_atom(g, hd)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Multiplicative extension of the coproduct.
pub fn coproduct(e: &NcExpr, hd: &HopfData) -> Result<TensorExpr2, HopfError> {
    let mut out = TensorExpr2::zero();
    for (c, w) in e.terms() {
        let mut acc = TensorExpr2::from_terms(vec![(c.clone(), vec![], vec![])]);
        for g in w {
            acc = acc.mul(&delta_atom(g, hd)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Anti-multiplicative extension of the antipode.
pub fn antipode(e: &NcExpr, hd: &HopfData) -> Result<NcExpr, HopfError> {
    let mut out = NcExpr::zero();
    for (c, w) in e.terms() {
        let mut acc = NcExpr::scalar(c.clone());
        for g in w.iter().rev() {
            acc = acc.mul(&s_atom(g, hd)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Multiplicative extension of the counit.
pub fn counit(e: &NcExpr, hd: &HopfData) -> Result<Scalar, HopfError> {
    let mut out = Scalar::zero();
    for (c, w) in e.terms() {
        let mut acc = c.clone();
        for g in w {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(&counit_atom(g, hd)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Matrix-level evaluation of coproduct structures
// ---------------------------------------------------------------------

/// Cache of `(ρ⊗ρ)Δ(atom)` matrices.
pub struct DeltaEval<'a> {
    hd: &'a HopfData,
    left: &'a Representation,
    right: &'a Representation,
    cache: BTreeMap<GenSym, Matrix>,
}

impl<'a> DeltaEval<'a> {
    pub fn new(hd: &'a HopfData, left: &'a Representation, right: &'a Representation) -> Self {
        DeltaEval {
            hd,
            left,
            right,
            cache: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.left.dim * self.right.dim
    }

    pub fn atom(&mut self, g: &GenSym) -> Result<Matrix, HopfError> {
        if let Some(m) = self.cache.get(g) {
            return Ok(m.clone());
        }
        let m = match (g, &self.hd.delta_xi) {
            (GenSym::Xi | GenSym::XiClassical, Some(XiCoproduct::General { tilde })) => {
                // evaluate the general form without expanding Δ_q(ẽ)
                // symbolically: (ρ⊗ρ)Δ is multiplicative on ẽ's word
                let tilde = tilde.clone();
                let kinv = GenSym::CartanExp(self.hd.k_delta_theta.negate());
                let xi_l = self.left.xi_matrix()?.clone();
                let xi_r = self.right.xi_matrix()?.clone();
                let id_r = Matrix::identity(self.right.dim);
                let kinv_l = self.left.evaluate_word(std::slice::from_ref(&kinv))?;
                let dte = self.word_no_xi_expr(&tilde)?;
                let te_l = self.left.evaluate(&tilde)?;
                let te_r = self.right.evaluate(&tilde)?;
                xi_l.kron(&id_r)
                    .add(&kinv_l.kron(&xi_r))
                    .add(
                        &dte.sub(&te_l.kron(&id_r))
                            .sub(&kinv_l.kron(&te_r))
                            .scale(&tau()),
                    )
            }
            (GenSym::Xi | GenSym::XiClassical, Some(XiCoproduct::Explicit(t))) => {
                evaluate_tensor2(t, self.left, self.right)?
            }
            _ => {
                let t = delta_atom(g, self.hd)?;
                evaluate_tensor2(&t, self.left, self.right)?
            }
        };
        self.cache.insert(g.clone(), m.clone());
        Ok(m)
    }

    pub fn word(&mut self, w: &Word) -> Result<Matrix, HopfError> {
        let mut m = Matrix::identity(self.dim());
        for g in w {
            m = m.mul(&self.atom(g)?);
        }
        Ok(m)
    }

    fn word_no_xi_expr(&mut self, e: &NcExpr) -> Result<Matrix, HopfError> {
        let mut out = Matrix::zero(self.dim());
        for (c, w) in e.terms() {
            out = out.add(&self.word(w)?.scale(c));
        }
        Ok(out)
    }

    /// `(ρ⊗ρ)Δ` of a full expression.
    pub fn expr(&mut self, e: &NcExpr) -> Result<Matrix, HopfError> {
        self.word_no_xi_expr(e)
    }
}

/// `(ρ⊗ρ⊗ρ)(Δ⊗id)Δ` / `(ρ⊗ρ⊗ρ)(id⊗Δ)Δ` as multiplicative maps, cached
/// per atom.
struct TripleEval<'a> {
    hd: &'a HopfData,
    rep: &'a Representation,
    left_first: bool,
    cache: BTreeMap<GenSym, Matrix>,
}

impl<'a> TripleEval<'a> {
    fn new(hd: &'a HopfData, rep: &'a Representation, left_first: bool) -> Self {
        TripleEval {
            hd,
            rep,
            left_first,
            cache: BTreeMap::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rep.dim * self.rep.dim * self.rep.dim
    }

    fn atom(&mut self, g: &GenSym) -> Result<Matrix, HopfError> {
        if let Some(m) = self.cache.get(g) {
            return Ok(m.clone());
        }
        let rep = self.rep;
        let d1 = delta_atom(g, self.hd)?;
        let mut out = Matrix::zero(self.dim());
        let mut de = DeltaEval::new(self.hd, rep, rep);
        for (c, w1, w2) in d1.terms() {
            let m = if self.left_first {
                de.word(w1)?.kron(&rep.evaluate_word(w2)?)
            } else {
                rep.evaluate_word(w1)?.kron(&de.word(w2)?)
            };
            out = out.add(&m.scale(c));
        }
        self.cache.insert(g.clone(), out.clone());
        Ok(out)
    }

    fn word(&mut self, w: &Word) -> Result<Matrix, HopfError> {
        let mut m = Matrix::identity(self.dim());
        for g in w {
            m = m.mul(&self.atom(g)?);
        }
        Ok(m)
    }

    fn expr(&mut self, e: &NcExpr) -> Result<Matrix, HopfError> {
        let mut out = Matrix::zero(self.dim());
        for (c, w) in e.terms() {
            out = out.add(&self.word(w)?.scale(c));
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------

pub struct AxiomCheck {
    pub generator: String,
    pub axiom: &'static str,
    pub defect: usize,
}

/// Coassociativity, counit, and antipode axioms, checked exactly on every
/// generator in the representation (ξ included when the representation
/// carries an image for it).
pub fn check_hopf_axioms(
    rep: &Representation,
    hd: &HopfData,
) -> Result<Vec<AxiomCheck>, HopfError> {
    let mut out = Vec::new();
    for g in &hd.alphabet {
        if g.is_xi() && !rep.has_xi() {
            continue;
        }
        let name = g.to_string();
        let rho_g = rep.evaluate_word(std::slice::from_ref(g))?;
        // coassociativity
        let la = coassoc_side(rep, hd, g, true)?;
        let ra = coassoc_side(rep, hd, g, false)?;
        out.push(AxiomCheck {
            generator: name.clone(),
            axiom: "coassociativity",
            defect: la.defect(&ra),
        });
        // counit axiom
        let (eps_id, id_eps) = counit_sides(rep, hd, g)?;
        out.push(AxiomCheck {
            generator: name.clone(),
            axiom: "counit-left",
            defect: eps_id.defect(&rho_g),
        });
        out.push(AxiomCheck {
            generator: name.clone(),
            axiom: "counit-right",
            defect: id_eps.defect(&rho_g),
        });
        // antipode axiom
        let eg = counit_atom(g, hd)?;
        let target = Matrix::identity(rep.dim).scale(&eg);
        let (s_id, id_s) = antipode_sides(rep, hd, g)?;
        out.push(AxiomCheck {
            generator: name.clone(),
            axiom: "antipode-left",
            defect: s_id.defect(&target),
        });
        out.push(AxiomCheck {
            generator: name,
            axiom: "antipode-right",
            defect: id_s.defect(&target),
        });
    }
    Ok(out)
}

fn coassoc_side(
    rep: &Representation,
    hd: &HopfData,
    g: &GenSym,
    left_first: bool,
) -> Result<Matrix, HopfError> {
    let mut te = TripleEval::new(hd, rep, left_first);
    if let (GenSym::Xi | GenSym::XiClassical, Some(XiCoproduct::General { tilde })) =
        (g, &hd.delta_xi)
    {
        // evaluate the general formula without symbolic expansion
        let tilde = tilde.clone();
        let kinv = GenSym::CartanExp(hd.k_delta_theta.negate());
        let n = rep.dim;
        let id = Matrix::identity(n);
        let xi = rep.xi_matrix()?.clone();
        let kinv_m = rep.evaluate_word(std::slice::from_ref(&kinv))?;
        let mut de = DeltaEval::new(hd, rep, rep);
        let dxi = de.atom(&GenSym::Xi).or_else(|_| de.atom(&GenSym::XiClassical))?;
        let dk = kinv_m.kron(&kinv_m);
        let dte2 = de.expr(&tilde)?;
        let dte3 = te.expr(&tilde)?;
        let te_m = rep.evaluate(&tilde)?;
        let m = if left_first {
            // (Δ⊗id)Δξ = Δξ⊗1 + Δk^{−1}⊗ξ + τ((Δ⊗id)Δẽ − Δẽ⊗1 − Δk^{−1}⊗ẽ)
            dxi.kron(&id)
                .add(&dk.kron(&xi))
                .add(
                    &dte3
                        .sub(&dte2.kron(&id))
                        .sub(&dk.kron(&te_m))
                        .scale(&tau()),
                )
        } else {
            // (id⊗Δ)Δξ = ξ⊗1⊗1 + k^{−1}⊗Δξ + τ((id⊗Δ)Δẽ − ẽ⊗1⊗1 − k^{−1}⊗Δẽ)
            xi.kron(&id)
                .kron(&id)
                .add(&kinv_m.kron(&dxi))
                .add(
                    &dte3
                        .sub(&te_m.kron(&id).kron(&id))
                        .sub(&kinv_m.kron(&dte2))
                        .scale(&tau()),
                )
        };
        return Ok(m);
    }
    let d = delta_atom(g, hd)?;
    let mut out = Matrix::zero(rep.dim * rep.dim * rep.dim);
    let mut de = DeltaEval::new(hd, rep, rep);
    for (c, w1, w2) in d.terms() {
        let m = if left_first {
            de.word(w1)?.kron(&rep.evaluate_word(w2)?)
        } else {
            rep.evaluate_word(w1)?.kron(&de.word(w2)?)
        };
        out = out.add(&m.scale(c));
    }
    Ok(out)
}

fn counit_sides(
    rep: &Representation,
    hd: &HopfData,
    g: &GenSym,
) -> Result<(Matrix, Matrix), HopfError> {
    if let (GenSym::Xi | GenSym::XiClassical, Some(XiCoproduct::General { tilde })) =
        (g, &hd.delta_xi)
    {
        let tilde = tilde.clone();
        let xi = rep.xi_matrix()?.clone();
        let te_m = rep.evaluate(&tilde)?;
        // (ε⊗id)Δ and (id⊗ε)Δ are algebra maps; on ẽ they evaluate
        // multiplicatively
        let eps_id_te = eps_side_expr(rep, hd, &tilde, true)?;
        let id_eps_te = eps_side_expr(rep, hd, &tilde, false)?;
        // (ε⊗id): ε(ξ)=0, ε(k^{−1})=1 → ξ + τ((ε⊗id)Δẽ − 0 − ẽ)
        let left = xi.add(&eps_id_te.sub(&te_m).scale(&tau()));
        // (id⊗ε): ξ·1 + k^{−1}·0 + τ((id⊗ε)Δẽ − ẽ·1 − 0)
        let right = xi.add(&id_eps_te.sub(&te_m).scale(&tau()));
        return Ok((left, right));
    }
    let d = delta_atom(g, hd)?;
    let mut l = Matrix::zero(rep.dim);
    let mut r = Matrix::zero(rep.dim);
    for (c, w1, w2) in d.terms() {
        let e1 = word_counit(w1, hd)?;
        let e2 = word_counit(w2, hd)?;
        l = l.add(&rep.evaluate_word(w2)?.scale(&c.mul(&e1)));
        r = r.add(&rep.evaluate_word(w1)?.scale(&c.mul(&e2)));
    }
    Ok((l, r))
}

/// `(ε⊗id)Δ` (or `(id⊗ε)Δ`) of a ξ-free expression, evaluated
/// multiplicatively.
fn eps_side_expr(
    rep: &Representation,
    hd: &HopfData,
    e: &NcExpr,
    eps_left: bool,
) -> Result<Matrix, HopfError> {
    let mut out = Matrix::zero(rep.dim);
    for (c, w) in e.terms() {
        let mut m = Matrix::identity(rep.dim);
        for g in w {
            let d = delta_atom(g, hd)?;
            let mut a = Matrix::zero(rep.dim);
            for (s, w1, w2) in d.terms() {
                let (eps_w, mat_w) = if eps_left { (w1, w2) } else { (w2, w1) };
                let e = word_counit(eps_w, hd)?;
                a = a.add(&rep.evaluate_word(mat_w)?.scale(&s.mul(&e)));
            }
            m = m.mul(&a);
        }
        out = out.add(&m.scale(c));
    }
    Ok(out)
}

fn word_counit(w: &Word, hd: &HopfData) -> Result<Scalar, HopfError> {
    let mut acc = Scalar::one();
    for g in w {
        if acc.is_zero() {
            return Ok(acc);
        }
        acc = acc.mul(&counit_atom(g, hd)?);
    }
    Ok(acc)
}

fn antipode_sides(
    rep: &Representation,
    hd: &HopfData,
    g: &GenSym,
) -> Result<(Matrix, Matrix), HopfError> {
    let d: TensorExpr2 = match (g, &hd.delta_xi) {
        (GenSym::Xi | GenSym::XiClassical, Some(XiCoproduct::General { tilde })) => {
            general_delta_xi(hd, tilde)?
        }
        _ => delta_atom(g, hd)?,
    };
    let mut l = Matrix::zero(rep.dim);
    let mut r = Matrix::zero(rep.dim);
    for (c, w1, w2) in d.terms() {
        let s1 = antipode(&NcExpr::word(w1.clone()), hd)?;
        l = l.add(&rep.evaluate(&s1)?.mul(&rep.evaluate_word(w2)?).scale(c));
        let s2 = antipode(&NcExpr::word(w2.clone()), hd)?;
        r = r.add(&rep.evaluate_word(w1)?.mul(&rep.evaluate(&s2)?).scale(c));
    }
    Ok((l, r))
}

/// `(ρ⊗ρ)(Δ(lhs) − Δ(rhs))` for every relation in the catalog.
pub fn check_coproduct_relations(
    left: &Representation,
    right: &Representation,
    hd: &HopfData,
    cat: &Catalog,
) -> Result<Vec<crate::reps::RelationCheck>, HopfError> {
    let mut de = DeltaEval::new(hd, left, right);
    let mut out = Vec::new();
    for rel in &cat.relations {
        let mut m = Matrix::zero(de.dim());
        for (c, w) in rel.difference().terms() {
            let mut acc = Matrix::identity(de.dim());
            for g in w {
                acc = acc.mul(&de.atom(g)?);
            }
            m = m.add(&acc.scale(c));
        }
        out.push(crate::reps::RelationCheck {
            id: rel.id.clone(),
            anchor: rel.anchor.clone(),
            defect: m.nnz(),
        });
    }
    Ok(out)
}

/// `S²` acts on each generator image as conjugation by the Cartan
/// exponential of `2ρ` (trivially for the classical data, where S² = id).
pub fn check_s_squared(
    rep: &Representation,
    hd: &HopfData,
) -> Result<Vec<(String, usize)>, HopfError> {
    let rs = RootSystem::build(hd.series);
    let two_rho = rs.two_rho();
    let mut out = Vec::new();
    for g in &hd.alphabet {
        if g.is_xi() && (!rep.has_xi() || hd.classical) {
            // the classical antipode squares to a spectral shift on the
            // affine generator, not an inner conjugation
            continue;
        }
        let s2 = antipode(&antipode(&NcExpr::atom(g.clone()), hd)?, hd)?;
        let lhs = rep.evaluate(&s2)?;
        let rhs = if hd.classical {
            rep.evaluate_word(std::slice::from_ref(g))?
        } else {
            let k = rep.evaluate_word(&[GenSym::CartanExp(HalfVec::from_root(&two_rho))])?;
            let kinv =
                rep.evaluate_word(&[GenSym::CartanExp(HalfVec::from_root(&neg(&two_rho)))])?;
            k.mul(&rep.evaluate_word(std::slice::from_ref(g))?).mul(&kinv)
        };
        out.push((g.to_string(), lhs.defect(&rhs)));
    }
    Ok(out)
}

/// `ε∘S = ε` on every generator.
pub fn check_counit_of_antipode(hd: &HopfData) -> Result<Vec<(String, bool)>, HopfError> {
    let mut out = Vec::new();
    for g in &hd.alphabet {
        let s = s_atom(g, hd)?;
        let lhs = counit(&s, hd)?;
        let rhs = counit_atom(g, hd)?;
        out.push((g.to_string(), lhs.equals(&rhs)));
    }
    Ok(out)
}

/// `Δ(ξ)` with η := 0 (the undeformed current-algebra form).
pub fn delta_xi_at_eta_zero(hd: &HopfData) -> Result<TensorExpr2, HopfError> {
    match hd.delta_xi.as_ref() {
        None => Err(HopfError::Unsupported),
        Some(XiCoproduct::Explicit(t)) => {
            let mut map: [Option<Scalar>; NVARS] = Default::default();
            map[Var::Eta as usize] = Some(Scalar::zero());
            Ok(t.specialize(&map)?)
        }
        Some(XiCoproduct::General { .. }) => {
            // the τ-term carries one power of η and vanishes identically
            let kinv = GenSym::CartanExp(hd.k_delta_theta.negate());
            Ok(TensorExpr2::from_terms(vec![
                (Scalar::one(), vec![GenSym::Xi], vec![]),
                (Scalar::one(), vec![kinv], vec![GenSym::Xi]),
            ]))
        }
    }
}

/// `S(ξ)` with η := 0.
pub fn s_xi_at_eta_zero(hd: &HopfData) -> Result<NcExpr, HopfError> {
    match hd.s_xi.as_ref() {
        None => Err(HopfError::Unsupported),
        Some(XiAntipode::Explicit(e)) => Ok(e.specialize_var(Var::Eta, &Scalar::zero())?),
        Some(XiAntipode::General { .. }) => Ok(NcExpr::word(vec![
            GenSym::CartanExp(hd.k_delta_theta.clone()),
            GenSym::Xi,
        ])
        .scale(&Scalar::integer(-1))),
    }
}

/// The general-form ξ data for any series (used to cross-check the
/// explicit A displays against the general formulas).
pub fn drinfeldian_general_hopf(series: Series) -> Result<HopfData, HopfError> {
    let mut hd = hopf_data(HopfFamily::Drinfeldian, series)?;
    let rs = RootSystem::build(series);
    let te = tilde_e(&rs);
    hd.delta_xi = Some(XiCoproduct::General { tilde: te.clone() });
    hd.s_xi = Some(XiAntipode::General { tilde: te });
    Ok(hd)
}

pub use crate::relations::sl2_system;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{relation_catalog, sl2_tilde_e, CatalogSeries, Family};
    use crate::reps::{
        build_representation, extend_with_xi, tilde_rep, RepKind, XiMode,
    };

    fn a3() -> Series {
        Series::new(SeriesKind::A, 3).unwrap()
    }

    #[test]
    fn uqg_coproduct_of_raising_generator() {
        let hd = hopf_data(HopfFamily::Uqg, a3()).unwrap();
        let alpha = vec![1, -1, 0];
        let d = coproduct(&NcExpr::atom(GenSym::Root(alpha.clone())), &hd).unwrap();
        let e = GenSym::Root(alpha.clone());
        let kinv = GenSym::CartanExp(HalfVec::from_root(&neg(&alpha)));
        let expect = TensorExpr2::from_terms(vec![
            (Scalar::one(), vec![e.clone()], vec![]),
            (Scalar::one(), vec![kinv], vec![e]),
        ]);
        assert!(d.sub(&expect).is_zero());
    }

    #[test]
    fn coproduct_is_multiplicative() {
        let hd = hopf_data(HopfFamily::Uqg, a3()).unwrap();
        let x = NcExpr::atom(GenSym::Root(vec![1, -1, 0]));
        let y = NcExpr::atom(GenSym::Root(vec![0, 1, -1]));
        let dxy = coproduct(&x.mul(&y), &hd).unwrap();
        let dx_dy = coproduct(&x, &hd).unwrap().mul(&coproduct(&y, &hd).unwrap());
        assert!(dxy.sub(&dx_dy).is_zero());
    }

    #[test]
    fn antipode_is_anti_multiplicative() {
        let hd = hopf_data(HopfFamily::Uqg, a3()).unwrap();
        let x = NcExpr::atom(GenSym::Root(vec![1, -1, 0]));
        let y = NcExpr::atom(GenSym::Root(vec![0, 1, -1]));
        let sxy = antipode(&x.mul(&y), &hd).unwrap();
        let sy_sx = antipode(&y, &hd).unwrap().mul(&antipode(&x, &hd).unwrap());
        assert_eq!(sxy, sy_sx);
    }

    #[test]
    fn counit_of_xi_is_zero() {
        let hd = hopf_data(HopfFamily::Drinfeldian, a3()).unwrap();
        assert!(counit(&NcExpr::atom(GenSym::Xi), &hd).unwrap().is_zero());
    }

    #[test]
    fn uqg_axioms_pass_in_fundamental() {
        let rep = build_representation(RepKind::FundamentalGl, a3()).unwrap();
        let hd = hopf_data(HopfFamily::Uqg, a3()).unwrap();
        for c in check_hopf_axioms(&rep, &hd).unwrap() {
            assert_eq!(c.defect, 0, "{} {}", c.generator, c.axiom);
        }
    }

    #[test]
    fn yangian_antipode_cancels_at_symbol_level() {
        // S(ξ) + ξ − η(½ĉ e_{l,−1} + Σ e_{l,−i} e_{i,−1}) = 0 without any
        // representation
        let hd = hopf_data(HopfFamily::Yangian, a3()).unwrap();
        let d = match hd.delta_xi.as_ref().unwrap() {
            XiCoproduct::Explicit(t) => t.clone(),
            _ => unreachable!(),
        };
        // m(S⊗id)Δξ at the free-algebra level
        let mut acc = NcExpr::zero();
        for (c, w1, w2) in d.terms() {
            let s1 = antipode(&NcExpr::word(w1.clone()), &hd).unwrap();
            acc = acc.add(&s1.mul(&NcExpr::word(w2.clone())).scale(c));
        }
        assert!(acc.is_zero(), "left antipode sum: {acc}");
        let mut acc = NcExpr::zero();
        for (c, w1, w2) in d.terms() {
            let s2 = antipode(&NcExpr::word(w2.clone()), &hd).unwrap();
            acc = acc.add(&NcExpr::word(w1.clone()).mul(&s2).scale(c));
        }
        assert!(acc.is_zero(), "right antipode sum: {acc}");
    }

    #[test]
    fn drinfeldian_a3_axioms_in_evaluation_rep() {
        let rep = build_representation(RepKind::EvaluationGl, a3()).unwrap();
        let hd = hopf_data(HopfFamily::Drinfeldian, a3()).unwrap();
        for c in check_hopf_axioms(&rep, &hd).unwrap() {
            assert_eq!(c.defect, 0, "{} {}", c.generator, c.axiom);
        }
    }

    #[test]
    fn drinfeldian_b3_axioms_via_general_form() {
        let s = Series::new(SeriesKind::B, 3).unwrap();
        let rep = tilde_rep(s).unwrap();
        let hd = hopf_data(HopfFamily::Drinfeldian, s).unwrap();
        for c in check_hopf_axioms(&rep, &hd).unwrap() {
            assert_eq!(c.defect, 0, "{} {}", c.generator, c.axiom);
        }
    }

    #[test]
    fn explicit_a_delta_matches_general_in_rep() {
        let rep = build_representation(RepKind::EvaluationGl, a3()).unwrap();
        let explicit = hopf_data(HopfFamily::Drinfeldian, a3()).unwrap();
        let general = drinfeldian_general_hopf(a3()).unwrap();
        let mut de_e = DeltaEval::new(&explicit, &rep, &rep);
        let mut de_g = DeltaEval::new(&general, &rep, &rep);
        let me = de_e.atom(&GenSym::Xi).unwrap();
        let mg = de_g.atom(&GenSym::Xi).unwrap();
        assert_eq!(me.defect(&mg), 0, "coproduct displays disagree");
        // at rank 3 the displayed antipode agrees with the general form
        // (higher ranks are recorded by the suite)
        let se = s_xi_display_a(&RootSystem::build(a3()));
        let sg = antipode(&NcExpr::atom(GenSym::Xi), &general).unwrap();
        let a = rep.evaluate(&se).unwrap();
        let b = rep.evaluate(&sg).unwrap();
        assert_eq!(a.defect(&b), 0, "antipode display disagrees at rank 3");
    }

    #[test]
    fn coproduct_respects_relations_uqg_c2() {
        let s = Series::new(SeriesKind::C, 2).unwrap();
        let rep = build_representation(RepKind::VectorC, s).unwrap();
        let hd = hopf_data(HopfFamily::Uqg, s).unwrap();
        let cat = relation_catalog(Family::Uqg, CatalogSeries::Classical(s)).unwrap();
        for c in check_coproduct_relations(&rep, &rep, &hd, &cat).unwrap() {
            assert_eq!(c.defect, 0, "{}", c.id);
        }
    }

    #[test]
    fn coproduct_respects_relations_drinfeldian_a3_two_points() {
        let rep = build_representation(RepKind::EvaluationGl, a3()).unwrap();
        let r1 = rep.specialize_var(Var::U, &Scalar::var(Var::Z1)).unwrap();
        let r2 = rep.specialize_var(Var::U, &Scalar::var(Var::Z2)).unwrap();
        let hd = hopf_data(HopfFamily::Drinfeldian, a3()).unwrap();
        let cat =
            relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(a3())).unwrap();
        for c in check_coproduct_relations(&r1, &r2, &hd, &cat).unwrap() {
            assert_eq!(c.defect, 0, "{}", c.id);
        }
    }

    #[test]
    fn jet_of_explicit_delta_xi_is_yangian_delta() {
        let dr = hopf_data(HopfFamily::Drinfeldian, a3()).unwrap();
        let ya = hopf_data(HopfFamily::Yangian, a3()).unwrap();
        let t = match dr.delta_xi.as_ref().unwrap() {
            XiCoproduct::Explicit(t) => t.clone(),
            _ => unreachable!(),
        };
        let (c0, _) = t.jet_classical().unwrap();
        let expect = match ya.delta_xi.as_ref().unwrap() {
            XiCoproduct::Explicit(t) => t.clone(),
            _ => unreachable!(),
        };
        assert!(c0.sub(&expect).is_zero(), "order-0 jet differs");
    }

    #[test]
    fn eta_zero_reduces_drinfeldian_hopf_to_quantum_current() {
        for s in [a3(), Series::new(SeriesKind::B, 3).unwrap()] {
            let dr = hopf_data(HopfFamily::Drinfeldian, s).unwrap();
            let qc = hopf_data(HopfFamily::QuantumCurrent, s).unwrap();
            let d0 = delta_xi_at_eta_zero(&dr).unwrap();
            let dq = match qc.delta_xi.as_ref().unwrap() {
                XiCoproduct::Explicit(t) => t.clone(),
                _ => unreachable!(),
            };
            assert!(d0.sub(&dq).is_zero(), "{}", s.label());
            let s0 = s_xi_at_eta_zero(&dr).unwrap();
            let sq = match qc.s_xi.as_ref().unwrap() {
                XiAntipode::Explicit(e) => e.clone(),
                _ => unreachable!(),
            };
            assert_eq!(s0, sq, "{}", s.label());
        }
    }

    #[test]
    fn k_delta_theta_matches_theta_vector() {
        for s in crate::rootsys::default_grid() {
            let rs = RootSystem::build(s);
            let k = k_delta_theta(&rs);
            let mut expect = HalfVec::from_root(&neg(&rs.theta));
            expect.c2 = 2;
            assert_eq!(k, expect, "{}", s.label());
        }
    }

    #[test]
    fn s_squared_is_cartan_conjugation() {
        let rep = tilde_rep(a3()).unwrap();
        let hd = hopf_data(HopfFamily::Drinfeldian, a3()).unwrap();
        for (g, defect) in check_s_squared(&rep, &hd).unwrap() {
            assert_eq!(defect, 0, "{g}");
        }
    }

    #[test]
    fn counit_of_antipode_is_counit() {
        for fam in [HopfFamily::Uqg, HopfFamily::Drinfeldian] {
            let hd = hopf_data(fam, a3()).unwrap();
            for (g, ok) in check_counit_of_antipode(&hd).unwrap() {
                assert!(ok, "{g}");
            }
        }
    }

    #[test]
    fn yangian_axioms_with_classical_evaluation() {
        let rep = build_representation(RepKind::ClassicalCounterpart, a3()).unwrap();
        let rep = extend_with_xi(&rep, XiMode::Evaluation).unwrap();
        let hd = hopf_data(HopfFamily::Yangian, a3()).unwrap();
        for c in check_hopf_axioms(&rep, &hd).unwrap() {
            assert_eq!(c.defect, 0, "{} {}", c.generator, c.axiom);
        }
    }

    #[test]
    fn yangian_is_a_series_only() {
        assert!(hopf_data(HopfFamily::Yangian, Series::new(SeriesKind::B, 3).unwrap()).is_err());
    }

    #[test]
    fn sl2_helpers_exist() {
        let _ = sl2_system();
        let _ = sl2_tilde_e();
    }
}
