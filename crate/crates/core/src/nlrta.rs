//! The normal Lie related triple algebra living on the ring.
//!
//! Given a commutative algebra with an S3-action (an order-3 map `phi`, an
//! order-2 map `tau` with `tau phi = phi^2 tau`) and an element `s` with
//! `s phi(s) phi^2(s) = 1 = s tau(s)`, the twisted product
//! `a . b = (tau phi(a)) (tau phi^2(b))` and the involution `a -> s tau(a)`
//! make the algebra a normal Lie related triple algebra whose derivation
//! map vanishes identically. The distinguished instance here is the ring
//! with its own automorphisms and `s = -t'`.

use thiserror::Error;

use crate::loop_alg::{bracket, LoopElem};
use crate::report::Report;
use crate::ring::{phi_a, RingElem};
use crate::s4::{apply, Gen};
use crate::sample::{random_ring_elem, rng};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NlrtaError {
    #[error("invalid S3 action: {0}")]
    InvalidSAction(String),
    #[error("invalid distinguished element: {0}")]
    InvalidS(String),
}

/// A triple-algebra structure on the ring, parameterized by the images of `t`
/// under the two generating automorphisms and by the distinguished element.
#[derive(Clone, Debug)]
pub struct TripleAlgebra {
    phi_image: RingElem,
    tau_image: RingElem,
    s: RingElem,
}

impl TripleAlgebra {
    /// Builds the structure, verifying the S3 relations and both unit
    /// equations for `s`.
    pub fn new(
        phi_image: RingElem,
        tau_image: RingElem,
        s: RingElem,
    ) -> Result<Self, NlrtaError> {
        let t = RingElem::t();
        let apply_phi = |x: &RingElem| x.eval_at(&phi_image);
        let apply_tau = |x: &RingElem| x.eval_at(&tau_image);

        let phi2 = apply_phi(&phi_image)
            .ok_or_else(|| NlrtaError::InvalidSAction("phi image is not invertible".into()))?;
        let phi3 = apply_phi(&phi2)
            .ok_or_else(|| NlrtaError::InvalidSAction("phi image is not invertible".into()))?;
        if phi3 != t {
            return Err(NlrtaError::InvalidSAction("phi does not have order 3".into()));
        }
        let tau2 = apply_tau(&tau_image)
            .ok_or_else(|| NlrtaError::InvalidSAction("tau image is not invertible".into()))?;
        if tau2 != t {
            return Err(NlrtaError::InvalidSAction("tau does not have order 2".into()));
        }
        // tau phi = phi^2 tau, checked on the generator.
        let lhs = apply_tau(&phi_image)
            .ok_or_else(|| NlrtaError::InvalidSAction("tau image is not invertible".into()))?;
        let rhs = apply_phi(&apply_phi(&tau_image).unwrap())
            .ok_or_else(|| NlrtaError::InvalidSAction("phi image is not invertible".into()))?;
        if lhs != rhs {
            return Err(NlrtaError::InvalidSAction(
                "tau phi != phi^2 tau on the generator".into(),
            ));
        }

        let ta = TripleAlgebra { phi_image, tau_image, s };
        let one = RingElem::one();
        if &ta.s * &ta.tau(&ta.s) != one {
            return Err(NlrtaError::InvalidS("s tau(s) != 1".into()));
        }
        let prod = &(&ta.s * &ta.phi(&ta.s)) * &ta.phi(&ta.phi(&ta.s));
        if prod != one {
            return Err(NlrtaError::InvalidS("s phi(s) phi^2(s) != 1".into()));
        }
        // Spot-check the S3 relations beyond the generator.
        let mut r = rng(0x0417);
        for _ in 0..4 {
            let x = random_ring_elem(&mut r, 4, 2);
            if ta.phi(&ta.phi(&ta.phi(&x))) != x || ta.tau(&ta.tau(&x)) != x {
                return Err(NlrtaError::InvalidSAction(
                    "sampled element breaks the order relations".into(),
                ));
            }
        }
        Ok(ta)
    }

    /// The structure associated to the S4-action on the loop algebra:
    /// the ring automorphisms with `s = -t'`.
    pub fn standard() -> Self {
        let one_minus_t = &RingElem::one() - &RingElem::t();
        TripleAlgebra::new(
            RingElem::t_prime(),
            one_minus_t,
            -&RingElem::t_prime(),
        )
        .expect("the standard structure satisfies the axioms")
    }

    pub fn phi(&self, x: &RingElem) -> RingElem {
        x.eval_at(&self.phi_image).expect("validated automorphism")
    }

    pub fn tau(&self, x: &RingElem) -> RingElem {
        x.eval_at(&self.tau_image).expect("validated automorphism")
    }

    pub fn s(&self) -> &RingElem {
        &self.s
    }

    /// The twisted product `a . b = (tau phi(a)) (tau phi^2(b))`.
    pub fn product(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let left = self.tau(&self.phi(a));
        let right = self.tau(&self.phi(&self.phi(b)));
        &left * &right
    }

    /// The involution `a -> s tau(a)`.
    pub fn conj(&self, a: &RingElem) -> RingElem {
        &self.s * &self.tau(a)
    }
}

/// Property checks on random triples: the involution, the anti-homomorphism
/// law, the symmetric form `conj(b) . (a . c) = (tau phi(s)) phi^2(ab) c`,
/// and the vanishing of both derivation maps.
pub fn verify_nlrta(ta: &TripleAlgebra) -> Report {
    let mut rep = Report::new("triple algebra");
    let mut r = rng(0x3177_0003);
    for case in 0..10 {
        let a = random_ring_elem(&mut r, 4, 2);
        let b = random_ring_elem(&mut r, 4, 2);
        let c = random_ring_elem(&mut r, 4, 2);

        let res = &ta.conj(&ta.conj(&a)) - &a;
        rep.check_residual(format!("conj is an involution ({case})"), res.is_zero(), &res);

        let lhs = ta.conj(&ta.product(&a, &b));
        let rhs = ta.product(&ta.conj(&b), &ta.conj(&a));
        let res = &lhs - &rhs;
        rep.check_residual(
            format!("conj(a.b) = conj(b).conj(a) ({case})"),
            res.is_zero(),
            &res,
        );

        // delta_1(a,b)(c) = conj(b).(a.c) - conj(a).(b.c)
        let d1 = &ta.product(&ta.conj(&b), &ta.product(&a, &c))
            - &ta.product(&ta.conj(&a), &ta.product(&b, &c));
        rep.check_residual(format!("delta_1(a,b)(c) = 0 ({case})"), d1.is_zero(), &d1);

        // delta_2(a,b)(c) = (c.a).conj(b) - (c.b).conj(a)
        let d2 = &ta.product(&ta.product(&c, &a), &ta.conj(&b))
            - &ta.product(&ta.product(&c, &b), &ta.conj(&a));
        rep.check_residual(format!("delta_2(a,b)(c) = 0 ({case})"), d2.is_zero(), &d2);

        // conj(b).(a.c) = (tau phi(s)) phi^2(ab) c, with ab the plain product
        let lhs = ta.product(&ta.conj(&b), &ta.product(&a, &c));
        let factor = ta.tau(&ta.phi(ta.s()));
        let rhs = &(&factor * &ta.phi(&ta.phi(&(&a * &b)))) * &c;
        let res = &lhs - &rhs;
        rep.check_residual(
            format!("symmetric form of conj(b).(a.c) ({case})"),
            res.is_zero(),
            &res,
        );
    }
    rep
}

/// Cross-checks the standard structure against the loop algebra: with
/// `iota_i(a) = u_i phi_A^i(a)`, the involution matches `-tau` through
/// `iota_0` and the product matches the bracket `[iota_1(a), iota_2(b)]`.
pub fn verify_nlrta_loop_consistency() -> Report {
    let mut rep = Report::new("triple algebra vs loop algebra");
    let ta = TripleAlgebra::standard();
    let iota = |i: usize, a: &RingElem| -> LoopElem {
        let mut twisted = a.clone();
        for _ in 0..i {
            twisted = phi_a(&twisted);
        }
        LoopElem::basis(i).scale(&twisted)
    };
    let mut r = rng(0x3177_0004);
    for case in 0..8 {
        let a = random_ring_elem(&mut r, 4, 2);
        let b = random_ring_elem(&mut r, 4, 2);

        let lhs = iota(0, &ta.conj(&a));
        let rhs = apply(&Gen::Tau.perm(), &iota(0, &a)).neg();
        let res = lhs.sub(&rhs);
        rep.check_residual(
            format!("iota_0(conj a) = -tau(iota_0 a) ({case})"),
            res.is_zero(),
            &res,
        );

        let lhs = iota(0, &ta.conj(&ta.product(&a, &b)));
        let rhs = bracket(&iota(1, &a), &iota(2, &b));
        let res = lhs.sub(&rhs);
        rep.check_residual(
            format!("iota_0(conj(a.b)) = [iota_1 a, iota_2 b] ({case})"),
            res.is_zero(),
            &res,
        );
    }
    rep
}

/// Aggregate verification: the standard structure's axioms, the distinguished
/// element conditions (including rejection of the wrong sign), and the
/// consistency with the loop algebra.
pub fn verify_all() -> Report {
    let mut rep = Report::new("nlrta");
    let ta = TripleAlgebra::standard();
    rep.merge(verify_nlrta(&ta));
    rep.merge(verify_nlrta_loop_consistency());
    rep.check("s = -t' satisfies both unit equations", {
        let one_minus_t = &RingElem::one() - &RingElem::t();
        TripleAlgebra::new(RingElem::t_prime(), one_minus_t, -&RingElem::t_prime()).is_ok()
    });
    rep.check("s = t' is rejected", {
        let one_minus_t = &RingElem::one() - &RingElem::t();
        matches!(
            TripleAlgebra::new(RingElem::t_prime(), one_minus_t, RingElem::t_prime()),
            Err(NlrtaError::InvalidS(_))
        )
    });
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::rat;

    #[test]
    fn product_examples() {
        let ta = TripleAlgebra::standard();
        let one = RingElem::one();
        assert_eq!(ta.product(&one, &one), one);
        // t . 1 = tau(phi(t)) = tau(t') = t/(t-1)
        let expect = RingElem::new(Poly::t(), 0, 1);
        assert_eq!(ta.product(&RingElem::t(), &one), expect);
    }

    #[test]
    fn conj_examples() {
        let ta = TripleAlgebra::standard();
        assert_eq!(ta.conj(&RingElem::one()), -&RingElem::t_prime());
        let x = RingElem::from_poly(Poly::from_coeffs(vec![rat(2), rat(0), rat(0), rat(1)]));
        assert_eq!(ta.conj(&ta.conj(&x)), x);
    }

    #[test]
    fn wrong_sign_rejected() {
        // s = t' satisfies s tau(s) = 1 but s phi(s) phi^2(s) = -1.
        let one_minus_t = &RingElem::one() - &RingElem::t();
        let err = TripleAlgebra::new(RingElem::t_prime(), one_minus_t, RingElem::t_prime());
        assert!(matches!(err, Err(NlrtaError::InvalidS(_))));
    }

    #[test]
    fn trivial_action() {
        let ta = TripleAlgebra::new(RingElem::t(), RingElem::t(), RingElem::one()).unwrap();
        let mut r = rng(9);
        for _ in 0..4 {
            let a = random_ring_elem(&mut r, 3, 1);
            let b = random_ring_elem(&mut r, 3, 1);
            assert_eq!(ta.product(&a, &b), &a * &b);
            assert_eq!(ta.conj(&a), a);
        }
    }

    #[test]
    fn bad_action_rejected() {
        // t -> t-1 is not even an endomorphism landing in the ring (t-1-1 not a unit... it is not order 3 anyway)
        let err = TripleAlgebra::new(
            RingElem::from_poly(Poly::t_minus_one()),
            &RingElem::one() - &RingElem::t(),
            RingElem::one(),
        );
        assert!(matches!(err, Err(NlrtaError::InvalidSAction(_))));
    }

    #[test]
    fn verification_passes() {
        assert!(verify_nlrta(&TripleAlgebra::standard()).all_pass());
        assert!(verify_nlrta_loop_consistency().all_pass());
    }
}
