//! Classical Yang-Baxter machinery for sl₂: structure constants, the
//! Casimir two-tensor, the rational/trigonometric/sum r-matrices, and the
//! defect tensors of the equation, the unitarity condition, and the shift
//! identity — all with exact rational-function coefficients in the
//! spectral variables.
//!
//! The trigonometric r-matrix is kept in the multiplicative variables
//! (the `(u+v)/(u−v)` form), so all coefficients stay rational. Brackets
//! on tensor legs are reduced slotwise with the structure constants;
//! nothing ever leaves `g⊗g⊗g`.

use crate::scalar::{Scalar, Var};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CybeError {
    #[error("spectral points coincide")]
    CoincidentPoints,
}

/// Basis order: `h`, `e₊`, `e₋` with `[e₊,e₋] = h`, `[h,e₊] = 2e₊`,
/// `[h,e₋] = −2e₋` (normalized so (α,α) = 2).
pub const DIM: usize = 3;
pub const H: usize = 0;
pub const EP: usize = 1;
pub const EM: usize = 2;

/// `[x_i, x_j]` as a coefficient vector over the basis.
pub fn bracket_basis(i: usize, j: usize) -> [i64; DIM] {
    let mut out = [0i64; DIM];
    match (i, j) {
        (H, EP) => out[EP] = 2,
        (EP, H) => out[EP] = -2,
        (H, EM) => out[EM] = -2,
        (EM, H) => out[EM] = 2,
        (EP, EM) => out[H] = 1,
        (EM, EP) => out[H] = -1,
        _ => {}
    }
    out
}

/// An sl₂ element with scalar coefficients.
#[derive(Clone, Debug)]
pub struct LieElement(pub [Scalar; DIM]);

impl LieElement {
    pub fn basis(i: usize) -> LieElement {
        let mut c = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        c[i] = Scalar::one();
        LieElement(c)
    }

    pub fn bracket(&self, other: &LieElement) -> LieElement {
        let mut out = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        for i in 0..DIM {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if other.0[j].is_zero() {
                    continue;
                }
                let c = self.0[i].mul(&other.0[j]);
                for (k, s) in bracket_basis(i, j).iter().enumerate() {
                    if *s != 0 {
                        out[k] = out[k].add(&c.mul(&Scalar::integer(*s)));
                    }
                }
            }
        }
        LieElement(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

/// Coefficient array over basis⊗basis.
#[derive(Clone, Debug)]
pub struct TwoTensor(pub [[Scalar; DIM]; DIM]);

/// Coefficient array over basis⊗basis⊗basis.
#[derive(Clone, Debug)]
pub struct ThreeTensor(pub [[[Scalar; DIM]; DIM]; DIM]);

impl TwoTensor {
    pub fn zero() -> TwoTensor {
        TwoTensor(std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero())))
    }

    pub fn add(&self, o: &TwoTensor) -> TwoTensor {
        let mut out = self.clone();
        for i in 0..DIM {
            for j in 0..DIM {
                out.0[i][j] = out.0[i][j].add(&o.0[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, o: &TwoTensor) -> TwoTensor {
        self.add(&o.scale(&Scalar::integer(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> TwoTensor {
        let mut out = self.clone();
        for i in 0..DIM {
            for j in 0..DIM {
                out.0[i][j] = out.0[i][j].mul(s);
            }
        }
        out
    }

    pub fn flip(&self) -> TwoTensor {
        let mut out = TwoTensor::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                out.0[j][i] = self.0[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }
}

impl ThreeTensor {
    pub fn zero() -> ThreeTensor {
        ThreeTensor(std::array::from_fn(|_| {
            std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()))
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.0
            .iter()
            .all(|p| p.iter().all(|r| r.iter().all(|c| c.is_zero())))
    }
}

/// The second-order Casimir element `½h² + e₋e₊ + e₊e₋` as an ordered
/// list of quadratic monomials.
pub fn casimir_c2() -> Vec<(Scalar, (usize, usize))> {
    vec![
        (Scalar::rational(1, 2), (H, H)),
        (Scalar::one(), (EM, EP)),
        (Scalar::one(), (EP, EM)),
    ]
}

/// The Casimir two-tensor `Ω₂ = ½(Δ₀(C₂) − C₂⊗1 − 1⊗C₂)`, computed from
/// the defining formula: the mixed part of `Δ₀(xy)` is `x⊗y + y⊗x`.
pub fn omega2() -> TwoTensor {
    let mut out = TwoTensor::zero();
    let half = Scalar::rational(1, 2);
    for (c, (i, j)) in casimir_c2() {
        let w = c.mul(&half);
        out.0[i][j] = out.0[i][j].add(&w);
        out.0[j][i] = out.0[j][i].add(&w);
    }
    out
}

/// Dual-basis form of the Casimir two-tensor: `Σ_a x_a ⊗ x^a` for the
/// invariant form with `(h,h) = 2`, `(e₊,e₋) = 1` (the orthonormal-basis
/// sum, rewritten basis-independently).
pub fn omega2_dual_basis_sum() -> TwoTensor {
    let mut out = TwoTensor::zero();
    // dual of (h, e₊, e₋) is (h/2, e₋, e₊)
    out.0[H][H] = Scalar::rational(1, 2);
    out.0[EP][EM] = Scalar::one();
    out.0[EM][EP] = Scalar::one();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RKind {
    Rational,
    Trigonometric,
    Sum,
}

impl RKind {
    pub fn label(self) -> &'static str {
        match self {
            RKind::Rational => "rational",
            RKind::Trigonometric => "trigonometric",
            RKind::Sum => "sum",
        }
    }
}

/// The r-matrix at two spectral points: `η/(u−v)·Ω₂` (rational),
/// `ħ((u+v)/(u−v)·Ω₂ + e₋⊗e₊ − e₊⊗e₋)` (trigonometric, multiplicative
/// variables), or their sum.
pub fn r_matrix_at(kind: RKind, u: &Scalar, v: &Scalar) -> Result<TwoTensor, CybeError> {
    let diff = u.sub(v);
    if diff.is_zero() {
        return Err(CybeError::CoincidentPoints);
    }
    let omega = omega2();
    let rational = omega.scale(&Scalar::var(Var::Eta).div(&diff).unwrap());
    let trig = {
        let mut anti = TwoTensor::zero();
        anti.0[EM][EP] = Scalar::one();
        anti.0[EP][EM] = Scalar::integer(-1);
        omega
            .scale(&u.add(v).div(&diff).unwrap())
            .add(&anti)
            .scale(&Scalar::var(Var::Hbar))
    };
    Ok(match kind {
        RKind::Rational => rational,
        RKind::Trigonometric => trig,
        RKind::Sum => rational.add(&trig),
    })
}

/// The r-matrix at the symbolic points z1, z2.
pub fn r_matrix(kind: RKind) -> TwoTensor {
    r_matrix_at(kind, &Scalar::var(Var::Z1), &Scalar::var(Var::Z2)).unwrap()
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]` with the brackets reduced
/// slotwise by the structure constants; the zero tensor iff the equation
/// holds.
pub fn cybe_defect(kind: RKind) -> ThreeTensor {
    let z1 = Scalar::var(Var::Z1);
    let z2 = Scalar::var(Var::Z2);
    let z3 = Scalar::var(Var::Z3);
    let r12 = r_matrix_at(kind, &z1, &z2).unwrap();
    let r13 = r_matrix_at(kind, &z1, &z3).unwrap();
    let r23 = r_matrix_at(kind, &z2, &z3).unwrap();
    let mut out = ThreeTensor::zero();
    // [a⊗b⊗1, c⊗1⊗d] = [a,c]⊗b⊗d
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for m in 0..DIM {
                    let c = r12.0[i][j].mul(&r13.0[k][m]);
                    if c.is_zero() {
                        continue;
                    }
                    for (t, s) in bracket_basis(i, k).iter().enumerate() {
                        if *s != 0 {
                            out.0[t][j][m] =
                                out.0[t][j][m].add(&c.mul(&Scalar::integer(*s)));
                        }
                    }
                }
            }
        }
    }
    // [a⊗b⊗1, 1⊗c⊗d] = a⊗[b,c]⊗d
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for m in 0..DIM {
                    let c = r12.0[i][j].mul(&r23.0[k][m]);
                    if c.is_zero() {
                        continue;
                    }
                    for (t, s) in bracket_basis(j, k).iter().enumerate() {
                        if *s != 0 {
                            out.0[i][t][m] =
                                out.0[i][t][m].add(&c.mul(&Scalar::integer(*s)));
                        }
                    }
                }
            }
        }
    }
    // [a⊗1⊗b, 1⊗c⊗d] = a⊗c⊗[b,d]
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for m in 0..DIM {
                    let c = r13.0[i][j].mul(&r23.0[k][m]);
                    if c.is_zero() {
                        continue;
                    }
                    for (t, s) in bracket_basis(j, m).iter().enumerate() {
                        if *s != 0 {
                            out.0[i][k][t] =
                                out.0[i][k][t].add(&c.mul(&Scalar::integer(*s)));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `r_tr(u+a/2, v+a/2) − r_tr(u,v) − (ħa/η) r_rt(u,v)`; zero iff the
/// shift identity holds.
pub fn shift_defect() -> TwoTensor {
    let z1 = Scalar::var(Var::Z1);
    let z2 = Scalar::var(Var::Z2);
    let half_a = Scalar::var(Var::A).mul(&Scalar::rational(1, 2));
    let shifted =
        r_matrix_at(RKind::Trigonometric, &z1.add(&half_a), &z2.add(&half_a)).unwrap();
    let base = r_matrix_at(RKind::Trigonometric, &z1, &z2).unwrap();
    let rat = r_matrix_at(RKind::Rational, &z1, &z2).unwrap();
    let coef = Scalar::var(Var::Hbar)
        .mul(&Scalar::var(Var::A))
        .div(&Scalar::var(Var::Eta))
        .unwrap();
    shifted.sub(&base).sub(&rat.scale(&coef))
}

/// `r¹²(u,v) + P r(v,u)`; zero iff the unitarity condition holds.
pub fn unitarity_defect(kind: RKind) -> TwoTensor {
    let z1 = Scalar::var(Var::Z1);
    let z2 = Scalar::var(Var::Z2);
    let fwd = r_matrix_at(kind, &z1, &z2).unwrap();
    let bwd = r_matrix_at(kind, &z2, &z1).unwrap();
    fwd.add(&bwd.flip())
}

/// The cocommutator `δ(x) = [x⊗1 + 1⊗x, r]`.
pub fn cocommutator(kind: RKind, x: &LieElement) -> TwoTensor {
    let r = r_matrix(kind);
    let mut out = TwoTensor::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            let c = &r.0[i][j];
            if c.is_zero() {
                continue;
            }
            // [x, e_i]⊗e_j
            let xb = x.bracket(&LieElement::basis(i));
            for (t, v) in xb.0.iter().enumerate() {
                if !v.is_zero() {
                    out.0[t][j] = out.0[t][j].add(&c.mul(v));
                }
            }
            // e_i⊗[x, e_j]
            let xb = x.bracket(&LieElement::basis(j));
            for (t, v) in xb.0.iter().enumerate() {
                if !v.is_zero() {
                    out.0[i][t] = out.0[i][t].add(&c.mul(v));
                }
            }
        }
    }
    out
}

/// `[x⊗1 + 1⊗x, t]` for a constant two-tensor (ad-invariance probe).
pub fn ad_action(x: &LieElement, t: &TwoTensor) -> TwoTensor {
    let mut out = TwoTensor::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            let c = &t.0[i][j];
            if c.is_zero() {
                continue;
            }
            let xb = x.bracket(&LieElement::basis(i));
            for (k, v) in xb.0.iter().enumerate() {
                if !v.is_zero() {
                    out.0[k][j] = out.0[k][j].add(&c.mul(v));
                }
            }
            let xb = x.bracket(&LieElement::basis(j));
            for (k, v) in xb.0.iter().enumerate() {
                if !v.is_zero() {
                    out.0[i][k] = out.0[i][k].add(&c.mul(v));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_identity_on_all_basis_triples() {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let (x, y, z) = (
                        LieElement::basis(i),
                        LieElement::basis(j),
                        LieElement::basis(k),
                    );
                    let s = x
                        .bracket(&y.bracket(&z))
                        .0
                        .iter()
                        .zip(&y.bracket(&z.bracket(&x)).0)
                        .zip(&z.bracket(&x.bracket(&y)).0)
                        .map(|((a, b), c)| a.add(b).add(c))
                        .collect::<Vec<_>>();
                    assert!(s.iter().all(|c| c.is_zero()), "({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear() {
        for i in 0..DIM {
            for j in 0..DIM {
                let a = LieElement::basis(i).bracket(&LieElement::basis(j));
                let b = LieElement::basis(j).bracket(&LieElement::basis(i));
                for (x, y) in a.0.iter().zip(&b.0) {
                    assert!(x.add(y).is_zero());
                }
            }
        }
    }

    #[test]
    fn omega2_value_and_flip_symmetry() {
        let o = omega2();
        // ½ h⊗h + e₊⊗e₋ + e₋⊗e₊, derived from the Casimir formula
        assert!(o.0[H][H].equals(&Scalar::rational(1, 2)));
        assert!(o.0[EP][EM].equals(&Scalar::one()));
        assert!(o.0[EM][EP].equals(&Scalar::one()));
        assert!(o.0[H][EP].is_zero());
        assert!(o.sub(&o.flip()).is_zero());
    }

    #[test]
    fn omega2_is_ad_invariant() {
        let o = omega2();
        for i in 0..DIM {
            assert!(ad_action(&LieElement::basis(i), &o).is_zero(), "basis {i}");
        }
    }

    #[test]
    fn omega2_matches_dual_basis_sum() {
        assert!(omega2().sub(&omega2_dual_basis_sum()).is_zero());
    }

    #[test]
    fn r_matrix_forms() {
        let r = r_matrix(RKind::Rational);
        let z12 = Scalar::var(Var::Z1).sub(&Scalar::var(Var::Z2));
        let expect = omega2().scale(&Scalar::var(Var::Eta).div(&z12).unwrap());
        assert!(r.sub(&expect).is_zero());

        let t = r_matrix(RKind::Trigonometric);
        let ratio = Scalar::var(Var::Z1)
            .add(&Scalar::var(Var::Z2))
            .div(&z12)
            .unwrap();
        assert!(t.0[H][H].equals(
            &Scalar::var(Var::Hbar)
                .mul(&ratio)
                .mul(&Scalar::rational(1, 2))
        ));
        assert!(t.0[EM][EP].equals(&Scalar::var(Var::Hbar).mul(&ratio.add(&Scalar::one()))));

        // the sum at η := 0 is the trigonometric tensor
        let s = r_matrix(RKind::Sum);
        let mut all_ok = true;
        for i in 0..DIM {
            for j in 0..DIM {
                let v = s.0[i][j]
                    .specialize_var(Var::Eta, &Scalar::zero())
                    .unwrap();
                all_ok &= v.equals(&t.0[i][j]);
            }
        }
        assert!(all_ok);
    }

    #[test]
    fn coincident_points_are_rejected() {
        let z = Scalar::var(Var::Z1);
        assert_eq!(
            r_matrix_at(RKind::Rational, &z, &z).unwrap_err(),
            CybeError::CoincidentPoints
        );
    }

    #[test]
    fn cybe_defect_vanishes_for_all_three_kinds() {
        for kind in [RKind::Rational, RKind::Trigonometric, RKind::Sum] {
            assert!(cybe_defect(kind).is_zero(), "{}", kind.label());
        }
    }

    #[test]
    fn shift_identity_holds() {
        assert!(shift_defect().is_zero());
        // and trivially at a := 0
        let d = shift_defect();
        for i in 0..DIM {
            for j in 0..DIM {
                assert!(d.0[i][j]
                    .specialize_var(Var::A, &Scalar::zero())
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn unitarity_holds() {
        for kind in [RKind::Rational, RKind::Trigonometric, RKind::Sum] {
            assert!(unitarity_defect(kind).is_zero(), "{}", kind.label());
        }
    }

    #[test]
    fn cocommutator_examples() {
        // ad-invariance of Ω₂ kills δ_rt(h)
        assert!(cocommutator(RKind::Rational, &LieElement::basis(H)).is_zero());
        // δ_tr(h) = ħ[h⊗1+1⊗h, e₋⊗e₊ − e₊⊗e₋], computed via the structure
        // constants
        let got = cocommutator(RKind::Trigonometric, &LieElement::basis(H));
        let mut anti = TwoTensor::zero();
        anti.0[EM][EP] = Scalar::var(Var::Hbar);
        anti.0[EP][EM] = Scalar::var(Var::Hbar).neg();
        let expect = ad_action(&LieElement::basis(H), &anti);
        assert!(got.sub(&expect).is_zero());
    }

    #[test]
    fn cocommutator_is_linear() {
        let x = LieElement([Scalar::integer(2), Scalar::integer(-1), Scalar::integer(3)]);
        let parts = (0..DIM)
            .map(|i| cocommutator(RKind::Sum, &LieElement::basis(i)).scale(&x.0[i]))
            .reduce(|a, b| a.add(&b))
            .unwrap();
        assert!(cocommutator(RKind::Sum, &x).sub(&parts).is_zero());
    }
}
