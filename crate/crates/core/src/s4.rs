//! The symmetric group on four letters acting by automorphisms on the loop
//! algebra.
//!
//! The action is generated by the two Klein-group involutions `tau1 = (12)(30)`
//! and `tau2 = (23)(10)`, which act linearly over the ring, together with the
//! semilinear `phi = (123)` and `tau = (12)`. An arbitrary permutation acts
//! through its unique factorization into a Klein part and a part of the copy
//! of S3 generated by `phi` and `tau`, exercising the semidirect product
//! structure rather than a precomputed table.

use std::fmt;

use crate::loop_alg::{bracket, psi, u_to_xyz, xyz_to_u, LoopElem, TetGen, XYZElem};
use crate::report::Report;
use crate::ring::{phi_a, tau_a, RingElem};
use crate::sample::{random_loop_elem, rng};

/// A permutation of `{0, 1, 2, 3}` stored as its image tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm4 {
    images: [u8; 4],
}

impl Perm4 {
    pub fn identity() -> Self {
        Perm4 { images: [0, 1, 2, 3] }
    }

    pub fn from_images(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4 { images })
    }

    pub fn apply_index(&self, i: u8) -> u8 {
        self.images[i as usize]
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        let mut images = [0u8; 4];
        for i in 0..4 {
            images[i] = self.images[other.images[i] as usize];
        }
        Perm4 { images }
    }

    pub fn inverse(&self) -> Perm4 {
        let mut images = [0u8; 4];
        for i in 0..4u8 {
            images[self.images[i as usize] as usize] = i;
        }
        Perm4 { images }
    }

    /// Signature, `+1` or `-1`.
    pub fn parity(&self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    /// All 24 permutations in lexicographic order of image tuples.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Some(p) = Perm4::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// Parses disjoint-cycle notation such as `(12)(30)`, `(123)` or `id`.
    pub fn parse_cycles(s: &str) -> Option<Perm4> {
        let s = s.trim();
        if s == "id" || s == "()" {
            return Some(Perm4::identity());
        }
        let mut images = [0u8, 1, 2, 3];
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut any = false;
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return None;
            }
            pos += 1;
            let mut cycle = Vec::new();
            while pos < bytes.len() && bytes[pos] != b')' {
                let c = bytes[pos];
                if !(b'0'..=b'3').contains(&c) {
                    return None;
                }
                cycle.push(c - b'0');
                pos += 1;
            }
            if pos == bytes.len() || cycle.len() < 2 {
                return None;
            }
            pos += 1;
            let mut seen = [false; 4];
            for &x in &cycle {
                if seen[x as usize] {
                    return None;
                }
                seen[x as usize] = true;
            }
            // Right-to-left composition of cycles onto the accumulator.
            let mut step = [0u8, 1, 2, 3];
            for w in 0..cycle.len() {
                step[cycle[w] as usize] = cycle[(w + 1) % cycle.len()];
            }
            let mut next = [0u8; 4];
            for i in 0..4 {
                next[i] = step[images[i] as usize];
            }
            images = next;
            any = true;
        }
        if !any {
            return None;
        }
        Perm4::from_images(images)
    }

    /// Renders in disjoint-cycle form, `id` for the identity.
    pub fn to_cycles(&self) -> String {
        let mut seen = [false; 4];
        let mut out = String::new();
        for start in 0..4u8 {
            if seen[start as usize] || self.images[start as usize] == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut next = self.images[start as usize];
            while next != start {
                cycle.push(next);
                seen[next as usize] = true;
                next = self.images[next as usize];
            }
            out.push('(');
            for c in cycle {
                out.push(char::from(b'0' + c));
            }
            out.push(')');
        }
        if out.is_empty() {
            "id".to_string()
        } else {
            out
        }
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

/// The four distinguished generators of the action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    Tau1,
    Tau2,
    Phi,
    Tau,
}

impl Gen {
    pub fn perm(self) -> Perm4 {
        match self {
            Gen::Tau1 => Perm4::from_images([3, 2, 1, 0]).unwrap(), // (12)(30)
            Gen::Tau2 => Perm4::from_images([1, 0, 3, 2]).unwrap(), // (23)(10)
            Gen::Phi => Perm4::from_images([0, 2, 3, 1]).unwrap(),  // (123)
            Gen::Tau => Perm4::from_images([0, 2, 1, 3]).unwrap(),  // (12)
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Tau1 => "tau1",
            Gen::Tau2 => "tau2",
            Gen::Phi => "phi",
            Gen::Tau => "tau",
        }
    }
}

/// A word over the generator alphabet; rightmost letter acts first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GenWord(pub Vec<Gen>);

impl GenWord {
    pub fn eval(&self) -> Perm4 {
        self.0
            .iter()
            .fold(Perm4::identity(), |acc, g| acc.compose(&g.perm()))
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let names: Vec<&str> = self.0.iter().map(|g| g.name()).collect();
        write!(f, "{}", names.join("*"))
    }
}

/// Factors a permutation as (Klein part) * (S3 part), the S3 part written
/// `phi^a * tau^b`. The factorization is unique since the group is the
/// semidirect product of the Klein group and this copy of S3.
pub fn decompose(p: &Perm4) -> GenWord {
    let klein_words: [(&[Gen], Perm4); 4] = [
        (&[], Perm4::identity()),
        (&[Gen::Tau1], Gen::Tau1.perm()),
        (&[Gen::Tau2], Gen::Tau2.perm()),
        (
            &[Gen::Tau1, Gen::Tau2],
            Gen::Tau1.perm().compose(&Gen::Tau2.perm()),
        ),
    ];
    // The S3 part stabilizes 0, so the Klein factor is pinned by p(0).
    let target = p.apply_index(0);
    let (kw, kp) = klein_words
        .iter()
        .find(|(_, k)| k.apply_index(0) == target)
        .expect("Klein group acts simply transitively on the orbit of 0");
    let s = kp.inverse().compose(p);
    debug_assert_eq!(s.apply_index(0), 0);
    for a in 0..3u32 {
        for b in 0..2u32 {
            let mut cand = Perm4::identity();
            for _ in 0..a {
                cand = cand.compose(&Gen::Phi.perm());
            }
            for _ in 0..b {
                cand = cand.compose(&Gen::Tau.perm());
            }
            if cand == s {
                let mut word: Vec<Gen> = kw.to_vec();
                word.extend(std::iter::repeat(Gen::Phi).take(a as usize));
                word.extend(std::iter::repeat(Gen::Tau).take(b as usize));
                return GenWord(word);
            }
        }
    }
    unreachable!("every stabilizer element is phi^a tau^b")
}

fn apply_tau1(e: &XYZElem) -> XYZElem {
    // tau1(x⊗1) = -x⊗1, tau1(y⊗1) = -(z⊗t' + x⊗(t'-1)), tau1(z⊗1) = x⊗t'' + y⊗(t''-1)
    let tp = RingElem::t_prime();
    let tpp = RingElem::t_second();
    let one = RingElem::one();
    XYZElem {
        x: &(-&e.x) - &(&e.y * &(&tp - &one)) + &(&e.z * &tpp),
        y: &e.z * &(&tpp - &one),
        z: -&(&e.y * &tp),
    }
}

fn apply_tau2(e: &XYZElem) -> XYZElem {
    // tau2(x⊗1) = y⊗t + z⊗(t-1), tau2(y⊗1) = -y⊗1, tau2(z⊗1) = -(x⊗t'' + y⊗(t''-1))
    let t = RingElem::t();
    let tpp = RingElem::t_second();
    let one = RingElem::one();
    XYZElem {
        x: -&(&e.z * &tpp),
        y: &(&e.x * &t) - &e.y - &(&e.z * &(&tpp - &one)),
        z: &e.x * &(&t - &one),
    }
}

fn apply_tau(e: &XYZElem) -> XYZElem {
    // tau = tau_s ⊗ tau_A with tau_s: x -> -x, y -> -z, z -> -y.
    XYZElem {
        x: -&tau_a(&e.x),
        y: -&tau_a(&e.z),
        z: -&tau_a(&e.y),
    }
}

/// Action of one generator.
pub fn apply_gen(g: Gen, x: &LoopElem) -> LoopElem {
    match g {
        // phi cycles the basis with a ring twist: phi(u_i a) = u_{i+1} phi_A(a).
        Gen::Phi => LoopElem::new(phi_a(&x.u2), phi_a(&x.u0), phi_a(&x.u1)),
        Gen::Tau1 => xyz_to_u(&apply_tau1(&u_to_xyz(x))),
        Gen::Tau2 => xyz_to_u(&apply_tau2(&u_to_xyz(x))),
        Gen::Tau => xyz_to_u(&apply_tau(&u_to_xyz(x))),
    }
}

/// Action of an arbitrary permutation, right-to-left along its generator word.
pub fn apply(p: &Perm4, x: &LoopElem) -> LoopElem {
    let word = decompose(p);
    word.0
        .iter()
        .rev()
        .fold(x.clone(), |acc, &g| apply_gen(g, &acc))
}

/// Checks `apply(p, Psi(X_ij)) = Psi(X_{p(i)p(j)})` over all twelve generators.
pub fn verify_equivariance(p: &Perm4) -> Report {
    let mut rep = Report::new(format!("equivariance of {p}"));
    for g in TetGen::all() {
        let (i, j) = g.indices();
        let lhs = apply(p, &psi(g));
        let target = TetGen::new(p.apply_index(i), p.apply_index(j)).unwrap();
        let res = lhs.sub(&psi(target));
        rep.check_residual(
            format!("{p}(Psi(X_{i}{j})) = Psi({target})"),
            res.is_zero(),
            &res,
        );
    }
    rep
}

/// Checks that the action of `p` preserves brackets on random pairs, and the
/// defining relations among the four generator actions on the basis.
pub fn verify_automorphism(p: &Perm4) -> Report {
    let mut rep = Report::new(format!("automorphism property of {p}"));
    let mut r = rng(0x5344_0001);
    for case in 0..8 {
        let x = random_loop_elem(&mut r, 4, 2);
        let y = random_loop_elem(&mut r, 4, 2);
        let lhs = apply(p, &bracket(&x, &y));
        let rhs = bracket(&apply(p, &x), &apply(p, &y));
        let res = lhs.sub(&rhs);
        rep.check_residual(format!("bracket preserved on random pair {case}"), res.is_zero(), &res);
    }
    // phi tau1 = tau2 phi, phi tau2 = tau1 tau2 phi, tau tau1 = tau1 tau, tau tau2 = tau1 tau2 tau
    let relations: [(&str, Vec<Gen>, Vec<Gen>); 4] = [
        ("phi*tau1 = tau2*phi", vec![Gen::Phi, Gen::Tau1], vec![Gen::Tau2, Gen::Phi]),
        (
            "phi*tau2 = tau1*tau2*phi",
            vec![Gen::Phi, Gen::Tau2],
            vec![Gen::Tau1, Gen::Tau2, Gen::Phi],
        ),
        ("tau*tau1 = tau1*tau", vec![Gen::Tau, Gen::Tau1], vec![Gen::Tau1, Gen::Tau]),
        (
            "tau*tau2 = tau1*tau2*tau",
            vec![Gen::Tau, Gen::Tau2],
            vec![Gen::Tau1, Gen::Tau2, Gen::Tau],
        ),
    ];
    let eval_word = |word: &[Gen], x: &LoopElem| -> LoopElem {
        word.iter().rev().fold(x.clone(), |acc, &g| apply_gen(g, &acc))
    };
    for (name, lhs_word, rhs_word) in &relations {
        for i in 0..3 {
            let b = LoopElem::basis(i);
            let res = eval_word(lhs_word, &b).sub(&eval_word(rhs_word, &b));
            rep.check_residual(format!("{name} on u{i}"), res.is_zero(), &res);
        }
    }
    rep
}

/// Aggregate verification over the whole group: equivariance on all twelve
/// generators and the automorphism property, for each of the 24 permutations.
pub fn verify_s4_all() -> Report {
    let mut rep = Report::new("s4 action");
    for p in Perm4::all() {
        rep.merge(verify_equivariance(&p));
        rep.merge(verify_automorphism(&p));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElem;

    #[test]
    fn parse_and_render_cycles() {
        let p = Perm4::parse_cycles("(12)(30)").unwrap();
        assert_eq!(p, Gen::Tau1.perm());
        assert_eq!(Perm4::parse_cycles("(123)").unwrap(), Gen::Phi.perm());
        assert_eq!(Perm4::parse_cycles("id").unwrap(), Perm4::identity());
        assert_eq!(Gen::Tau1.perm().to_cycles(), "(03)(12)");
        assert_eq!(Perm4::identity().to_cycles(), "id");
        for p in Perm4::all() {
            assert_eq!(Perm4::parse_cycles(&p.to_cycles()).unwrap(), p);
        }
    }

    #[test]
    fn decompose_examples() {
        assert!(decompose(&Perm4::identity()).0.is_empty());
        assert_eq!(decompose(&Gen::Tau1.perm()).0, vec![Gen::Tau1]);
        assert_eq!(decompose(&Gen::Phi.perm()).0, vec![Gen::Phi]);
        for p in Perm4::all() {
            assert_eq!(decompose(&p).eval(), p, "decompose fails at {p}");
        }
    }

    #[test]
    fn apply_examples() {
        // phi cycles the basis
        assert_eq!(apply(&Gen::Phi.perm(), &LoopElem::basis(0)), LoopElem::basis(1));
        // Klein signs on u0 a
        let a = RingElem::t_prime();
        let x = LoopElem::basis(0).scale(&a);
        assert_eq!(apply(&Gen::Tau1.perm(), &x), x);
        assert_eq!(apply(&Gen::Tau2.perm(), &x), x.neg());
        // tau(u0) = u0 t'
        assert_eq!(
            apply(&Gen::Tau.perm(), &LoopElem::basis(0)),
            LoopElem::basis(0).scale(&RingElem::t_prime())
        );
        // tau(u1) = u2 t, tau(u2) = u1 t''
        assert_eq!(
            apply(&Gen::Tau.perm(), &LoopElem::basis(1)),
            LoopElem::basis(2).scale(&RingElem::t())
        );
        assert_eq!(
            apply(&Gen::Tau.perm(), &LoopElem::basis(2)),
            LoopElem::basis(1).scale(&RingElem::t_second())
        );
    }

    #[test]
    fn group_action_law() {
        let mut r = rng(7);
        let perms = Perm4::all();
        for _ in 0..6 {
            use rand::Rng;
            let p = perms[r.gen_range(0..24)];
            let q = perms[r.gen_range(0..24)];
            let x = crate::sample::random_loop_elem(&mut r, 3, 2);
            assert_eq!(apply(&p.compose(&q), &x), apply(&p, &apply(&q, &x)));
        }
    }

    #[test]
    fn equivariance_tau1_example() {
        // tau1 = (12)(30) sends (0,2) to (3,1)
        let p = Gen::Tau1.perm();
        let lhs = apply(&p, &psi(TetGen::new(0, 2).unwrap()));
        assert_eq!(lhs, psi(TetGen::new(3, 1).unwrap()));
        assert!(verify_equivariance(&p).all_pass());
        assert!(verify_equivariance(&Perm4::identity()).all_pass());
    }
}
