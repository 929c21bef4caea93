//! A concrete two-dimensional central extension of the loop algebra, realized
//! by the residue cocycle
//!
//! ```text
//! psi(s⊗a, s'⊗b) = trace(s s') * (Res_0(a db), Res_1(a db))
//! ```
//!
//! with the trace form taking the value 2 on each of x, y, z and -2 on every
//! mixed pair. Lifts of the twelve tetrahedron generators are fitted by an
//! exact linear solve so that the central-extension presentation holds: the
//! partition charges `C_p` are central, sum to zero, and satisfy
//! `X~_ij + X~_ji = C_ij`, with the bracket and quartic relations intact.
//! The symmetric group then acts on the extension with a signed permutation
//! of the charges.

use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::linalg::{solve, Mat};
use crate::loop_alg::{bracket, psi, u_to_xyz, LoopElem, TetGen};
use crate::rat::{format_rat, rat, rat_frac, Rat};
use crate::report::Report;
use crate::ring::{residue_at, Point, RingElem};
use crate::s4::{apply as s4_apply, Perm4};
use crate::sample::{random_loop_elem, rng};

/// Element of the extension: a loop part plus central coordinates along the
/// residues at 0 and 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtElem {
    pub loop_part: LoopElem,
    pub c0: Rat,
    pub c1: Rat,
}

impl ExtElem {
    pub fn new(loop_part: LoopElem, c0: Rat, c1: Rat) -> Self {
        ExtElem { loop_part, c0, c1 }
    }

    pub fn from_loop(loop_part: LoopElem) -> Self {
        ExtElem::new(loop_part, rat(0), rat(0))
    }

    pub fn central(c0: Rat, c1: Rat) -> Self {
        ExtElem::new(LoopElem::zero(), c0, c1)
    }

    pub fn zero() -> Self {
        ExtElem::from_loop(LoopElem::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.loop_part.is_zero() && self.c0.is_zero() && self.c1.is_zero()
    }

    /// Projection onto the loop algebra (the quotient by the center).
    pub fn project(&self) -> &LoopElem {
        &self.loop_part
    }

    pub fn add(&self, rhs: &ExtElem) -> ExtElem {
        ExtElem::new(
            self.loop_part.add(&rhs.loop_part),
            &self.c0 + &rhs.c0,
            &self.c1 + &rhs.c1,
        )
    }

    pub fn sub(&self, rhs: &ExtElem) -> ExtElem {
        ExtElem::new(
            self.loop_part.sub(&rhs.loop_part),
            &self.c0 - &rhs.c0,
            &self.c1 - &rhs.c1,
        )
    }

    pub fn neg(&self) -> ExtElem {
        ExtElem::new(self.loop_part.neg(), -self.c0.clone(), -self.c1.clone())
    }

    pub fn scale_rat(&self, c: &Rat) -> ExtElem {
        ExtElem::new(self.loop_part.scale_rat(c), &self.c0 * c, &self.c1 * c)
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.loop_part.is_zero() {
            parts.push(self.loop_part.to_string());
        }
        if !self.c0.is_zero() {
            parts.push(format!("K0*({})", format_rat(&self.c0)));
        }
        if !self.c1.is_zero() {
            parts.push(format!("K1*({})", format_rat(&self.c1)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("lift fitting system is infeasible: {0}")]
    InfeasibleSystem(String),
}

/// The 2-cocycle: both residue coordinates of `sum T(s_a, s_b) a d(b)` after
/// expanding the arguments in x, y, z coordinates.
pub fn cocycle(x: &LoopElem, y: &LoopElem) -> (Rat, Rat) {
    let xc = u_to_xyz(x);
    let yc = u_to_xyz(y);
    let left = [&xc.x, &xc.y, &xc.z];
    let right = [&yc.x, &yc.y, &yc.z];
    let mut r0 = rat(0);
    let mut r1 = rat(0);
    for (i, a) in left.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in right.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let trace = if i == j { rat(2) } else { rat(-2) };
            let form: RingElem = *a * &b.derivative();
            r0 = r0 + &trace * residue_at(&form, Point::Zero);
            r1 = r1 + &trace * residue_at(&form, Point::One);
        }
    }
    (r0, r1)
}

/// Bracket of the extension: loop bracket plus the cocycle in the center.
pub fn ext_bracket(x: &ExtElem, y: &ExtElem) -> ExtElem {
    let (c0, c1) = cocycle(&x.loop_part, &y.loop_part);
    ExtElem::new(bracket(&x.loop_part, &y.loop_part), c0, c1)
}

pub fn ext_ad_power(base: &ExtElem, n: u32, arg: &ExtElem) -> ExtElem {
    let mut acc = arg.clone();
    for _ in 0..n {
        acc = ext_bracket(base, &acc);
    }
    acc
}

/// A 2+2 partition of `{0,1,2,3}`, indexing the central charges.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Partition {
    P01,
    P02,
    P03,
}

impl Partition {
    pub fn all() -> [Partition; 3] {
        [Partition::P01, Partition::P02, Partition::P03]
    }

    /// The partition `{{i,j}, complement}`.
    pub fn from_pair(i: u8, j: u8) -> Partition {
        let pair = if i < j { (i, j) } else { (j, i) };
        match pair {
            (0, 1) | (2, 3) => Partition::P01,
            (0, 2) | (1, 3) => Partition::P02,
            (0, 3) | (1, 2) => Partition::P03,
            _ => panic!("not a pair of distinct indices"),
        }
    }

    pub fn permuted(self, p: &Perm4) -> Partition {
        let (i, j) = match self {
            Partition::P01 => (0, 1),
            Partition::P02 => (0, 2),
            Partition::P03 => (0, 3),
        };
        Partition::from_pair(p.apply_index(i), p.apply_index(j))
    }

    pub fn index(self) -> usize {
        match self {
            Partition::P01 => 0,
            Partition::P02 => 1,
            Partition::P03 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Partition::P01 => "C_01",
            Partition::P02 => "C_02",
            Partition::P03 => "C_03",
        }
    }
}

const ORDERED_PAIRS: [(u8, u8); 12] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 0),
    (1, 2),
    (1, 3),
    (2, 0),
    (2, 1),
    (2, 3),
    (3, 0),
    (3, 1),
    (3, 2),
];

fn pair_index(i: u8, j: u8) -> usize {
    ORDERED_PAIRS
        .iter()
        .position(|&(a, b)| a == i && b == j)
        .expect("distinct indices in range")
}

/// Fitted lifts of the tetrahedron generators and the resulting charges.
#[derive(Clone, Debug)]
pub struct LiftTable {
    /// Central part of the lift of each ordered generator.
    xi: [(Rat, Rat); 12],
    /// Central value of each partition charge.
    c: [(Rat, Rat); 3],
}

impl LiftTable {
    /// The lift of `X_ij`.
    pub fn lift(&self, i: u8, j: u8) -> ExtElem {
        let (a, b) = self.xi[pair_index(i, j)].clone();
        ExtElem::new(psi(TetGen::new(i, j).unwrap()), a, b)
    }

    /// The central charge of a partition.
    pub fn charge(&self, p: Partition) -> ExtElem {
        let (a, b) = self.c[p.index()].clone();
        ExtElem::central(a, b)
    }

    /// `Y_ij = X~_ij - C_ij / 2`.
    pub fn y_gen(&self, i: u8, j: u8) -> ExtElem {
        let c = self.charge(Partition::from_pair(i, j));
        self.lift(i, j).sub(&c.scale_rat(&rat_frac(1, 2)))
    }

    /// The lifted cyclic generators `u^_i`, e.g. `u^_0 = (Y_02 + Y_31)/4`.
    pub fn hat_u(&self) -> (ExtElem, ExtElem, ExtElem) {
        let quarter = rat_frac(1, 4);
        let u0 = self.y_gen(0, 2).add(&self.y_gen(3, 1)).scale_rat(&quarter);
        let u1 = self.y_gen(0, 3).add(&self.y_gen(1, 2)).scale_rat(&quarter);
        let u2 = self.y_gen(0, 1).add(&self.y_gen(2, 3)).scale_rat(&quarter);
        (u0, u1, u2)
    }

    /// Serializes the table: one line per lift, then one per charge.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for &(i, j) in &ORDERED_PAIRS {
            out.push_str(&format!("X~_{i}{j}\t{}\n", self.lift(i, j)));
        }
        for p in Partition::all() {
            out.push_str(&format!("{}\t{}\n", p.name(), self.charge(p)));
        }
        out
    }
}

/// Solves for central corrections making the lifted generators satisfy the
/// presentation: for every even triple the bracket relation fixes the central
/// parts, the partition charges are forced consistent, and the charges sum
/// to zero. The system has full rank, so the result is unique.
pub fn fit_lifts() -> Result<LiftTable, ExtensionError> {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs0: Vec<Rat> = Vec::new();
    let mut rhs1: Vec<Rat> = Vec::new();

    // Bracket relation on even triples: xi_ij + xi_jk = psi(P_ij, P_jk) / 2.
    for p in Perm4::all() {
        if !p.is_even() {
            continue;
        }
        let (i, j, k) = (p.apply_index(0), p.apply_index(1), p.apply_index(2));
        let mut row = vec![rat(0); 12];
        row[pair_index(i, j)] = rat(1);
        row[pair_index(j, k)] = rat(1);
        rows.push(row);
        let (c0, c1) = cocycle(
            &psi(TetGen::new(i, j).unwrap()),
            &psi(TetGen::new(j, k).unwrap()),
        );
        rhs0.push(c0 / rat(2));
        rhs1.push(c1 / rat(2));
    }
    // Charge consistency: both pairs of a partition define the same charge.
    let partitions: [((u8, u8), (u8, u8)); 3] = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
    for &((i, j), (k, l)) in &partitions {
        let mut row = vec![rat(0); 12];
        row[pair_index(i, j)] = rat(1);
        row[pair_index(j, i)] = rat(1);
        row[pair_index(k, l)] = rat(-1);
        row[pair_index(l, k)] = rat(-1);
        rows.push(row);
        rhs0.push(rat(0));
        rhs1.push(rat(0));
    }
    // Zero-sum of the charges.
    let mut row = vec![rat(0); 12];
    for &((i, j), _) in &partitions {
        row[pair_index(i, j)] = rat(1);
        row[pair_index(j, i)] = rat(1);
    }
    rows.push(row);
    rhs0.push(rat(0));
    rhs1.push(rat(0));

    let mat = Mat::from_rows(rows);
    let sol0 = solve(&mat, &rhs0)
        .ok_or_else(|| ExtensionError::InfeasibleSystem("residue-at-0 coordinate".into()))?;
    let sol1 = solve(&mat, &rhs1)
        .ok_or_else(|| ExtensionError::InfeasibleSystem("residue-at-1 coordinate".into()))?;
    if !mat.kernel().is_empty() {
        return Err(ExtensionError::InfeasibleSystem(
            "unexpected degeneracy in the relation system".into(),
        ));
    }

    let mut xi: [(Rat, Rat); 12] = Default::default();
    for (idx, slot) in xi.iter_mut().enumerate() {
        *slot = (sol0[idx].clone(), sol1[idx].clone());
    }
    let mut c: [(Rat, Rat); 3] = Default::default();
    for (pi, &((i, j), _)) in partitions.iter().enumerate() {
        let a = &xi[pair_index(i, j)].0 + &xi[pair_index(j, i)].0;
        let b = &xi[pair_index(i, j)].1 + &xi[pair_index(j, i)].1;
        c[pi] = (a, b);
    }
    Ok(LiftTable { xi, c })
}

/// The 2x2 central matrix of a permutation, determined by
/// `sigma(C_p) = sign(sigma) C_{sigma(p)}` in the residue chart.
fn central_matrix(p: &Perm4, table: &LiftTable) -> Mat {
    let sign = rat(p.parity() as i64);
    // Columns of M are the charges of P01 and P02; A M = M' with signed
    // permuted charges.
    let g01 = &table.c[0];
    let g02 = &table.c[1];
    let m = Mat::from_rows(vec![
        vec![g01.0.clone(), g02.0.clone()],
        vec![g01.1.clone(), g02.1.clone()],
    ]);
    let t01 = &table.c[Partition::P01.permuted(p).index()];
    let t02 = &table.c[Partition::P02.permuted(p).index()];
    let mp = Mat::from_rows(vec![
        vec![&sign * &t01.0, &sign * &t02.0],
        vec![&sign * &t01.1, &sign * &t02.1],
    ]);
    // Solve A * m = mp columnwise via m^T A^T = mp^T.
    let mt = Mat::from_rows(vec![
        vec![m[(0, 0)].clone(), m[(1, 0)].clone()],
        vec![m[(0, 1)].clone(), m[(1, 1)].clone()],
    ]);
    let a_row0 = solve(&mt, &[mp[(0, 0)].clone(), mp[(0, 1)].clone()])
        .expect("fitted charges span the center");
    let a_row1 = solve(&mt, &[mp[(1, 0)].clone(), mp[(1, 1)].clone()])
        .expect("fitted charges span the center");
    Mat::from_rows(vec![a_row0, a_row1])
}

/// Cocycle defect of the permutation action: `psi(p g, p h) - A_p psi(g, h)`.
fn cocycle_defect(p: &Perm4, a: &Mat, g: &LoopElem, h: &LoopElem) -> (Rat, Rat) {
    let (l0, l1) = cocycle(&s4_apply(p, g), &s4_apply(p, h));
    let (r0, r1) = cocycle(g, h);
    let mapped = a.mul_vec(&[r0, r1]);
    (l0 - &mapped[0], l1 - &mapped[1])
}

/// The central twist of the action on a general element, recovered from the
/// coordinate-extraction triple brackets: any `w` equals
/// `-([u2,[u0,[u1,w]]] + [u0,[u1,[u2,w]]] + [u1,[u2,[u0,w]]])`, and the twist
/// on a bracket `[g, h]` is the cocycle defect.
fn central_twist(p: &Perm4, a: &Mat, w: &LoopElem) -> (Rat, Rat) {
    let u = [LoopElem::basis(0), LoopElem::basis(1), LoopElem::basis(2)];
    let mut t0 = rat(0);
    let mut t1 = rat(0);
    for (outer, first, second) in [(2usize, 0usize, 1usize), (0, 1, 2), (1, 2, 0)] {
        let inner = bracket(&u[first], &bracket(&u[second], w));
        let (d0, d1) = cocycle_defect(p, a, &u[outer], &inner);
        t0 = t0 - d0;
        t1 = t1 - d1;
    }
    (t0, t1)
}

/// Action of a permutation on the extension: the loop action plus the signed
/// charge permutation on the center, corrected by the unique central twist
/// that makes the map an automorphism.
pub fn s4_ext_apply(p: &Perm4, x: &ExtElem, table: &LiftTable) -> ExtElem {
    let a = central_matrix(p, table);
    let mapped = a.mul_vec(&[x.c0.clone(), x.c1.clone()]);
    let (t0, t1) = central_twist(p, &a, &x.loop_part);
    ExtElem::new(
        s4_apply(p, &x.loop_part),
        &mapped[0] + &t0,
        &mapped[1] + &t1,
    )
}

/// Full verification of the extension: cocycle laws, the fitted presentation
/// relations, the Y-form relations over all 24 permutations, and the signed
/// S4-action.
pub fn verify_extension() -> Report {
    let mut rep = Report::new("central extension");
    let mut r = rng(0xce11_0702);

    for case in 0..12 {
        let x = random_loop_elem(&mut r, 3, 2);
        let y = random_loop_elem(&mut r, 3, 2);
        let z = random_loop_elem(&mut r, 3, 2);
        let (a0, a1) = cocycle(&x, &y);
        let (b0, b1) = cocycle(&y, &x);
        rep.check(
            format!("cocycle antisymmetry on random pair {case}"),
            a0 == -b0.clone() && a1 == -b1.clone(),
        );
        let (c0, c1) = cocycle(&bracket(&x, &y), &z);
        let (d0, d1) = cocycle(&bracket(&y, &z), &x);
        let (e0, e1) = cocycle(&bracket(&z, &x), &y);
        rep.check(
            format!("2-cocycle identity on random triple {case}"),
            (&c0 + &d0 + &e0).is_zero() && (&c1 + &d1 + &e1).is_zero(),
        );
    }

    let table = match fit_lifts() {
        Ok(t) => t,
        Err(e) => {
            rep.check(format!("fit_lifts succeeds ({e})"), false);
            return rep;
        }
    };
    rep.check("fit_lifts succeeds", true);

    // (ii): charges sum to zero.
    let total = Partition::all()
        .iter()
        .fold(ExtElem::zero(), |acc, &p| acc.add(&table.charge(p)));
    rep.check_residual("sum of charges is zero", total.is_zero(), &total);

    // (iii): X~_ij + X~_ji = C_ij.
    for &(i, j) in ORDERED_PAIRS.iter().take(6) {
        let s = table.lift(i, j).add(&table.lift(j, i));
        let res = s.sub(&table.charge(Partition::from_pair(i, j)));
        rep.check_residual(format!("X~_{i}{j} + X~_{j}{i} = C"), res.is_zero(), &res);
    }

    // (iv): the bracket relation on even triples.
    for p in Perm4::all() {
        if !p.is_even() {
            continue;
        }
        let (i, j, k) = (p.apply_index(0), p.apply_index(1), p.apply_index(2));
        let lhs = ext_bracket(&table.lift(i, j), &table.lift(j, k));
        let rhs = table.lift(i, j).add(&table.lift(j, k)).scale_rat(&rat(2));
        let res = lhs.sub(&rhs);
        rep.check_residual(
            format!("[X~_{i}{j}, X~_{j}{k}] = 2(X~_{i}{j} + X~_{j}{k})"),
            res.is_zero(),
            &res,
        );
    }

    // (v): the quartic relation on all distinct 4-tuples.
    for p in Perm4::all() {
        let (h, i, j, k) = (
            p.apply_index(0),
            p.apply_index(1),
            p.apply_index(2),
            p.apply_index(3),
        );
        let xhi = table.lift(h, i);
        let xjk = table.lift(j, k);
        let lhs = ext_ad_power(&xhi, 3, &xjk);
        let rhs = ext_bracket(&xhi, &xjk).scale_rat(&rat(4));
        let res = lhs.sub(&rhs);
        rep.check_residual(
            format!("(ad X~_{h}{i})^3 X~_{j}{k} = 4 [X~_{h}{i}, X~_{j}{k}]"),
            res.is_zero(),
            &res,
        );
    }

    // (iii)': Y_ij + Y_ji = 0.
    for &(i, j) in ORDERED_PAIRS.iter().take(6) {
        let s = table.y_gen(i, j).add(&table.y_gen(j, i));
        rep.check_residual(format!("Y_{i}{j} + Y_{j}{i} = 0"), s.is_zero(), &s);
    }

    // (iv)': the signed bracket relation over every permutation.
    for p in Perm4::all() {
        let (i, j, k) = (p.apply_index(0), p.apply_index(1), p.apply_index(2));
        let lhs = ext_bracket(&table.y_gen(i, j), &table.y_gen(j, k));
        let charge = table.charge(Partition::from_pair(i, k));
        let mut rhs = table.y_gen(i, j).add(&table.y_gen(j, k)).scale_rat(&rat(2));
        rhs = rhs.sub(&charge.scale_rat(&rat(p.parity() as i64)));
        let res = lhs.sub(&rhs);
        rep.check_residual(
            format!("[Y_{i}{j}, Y_{j}{k}] = 2Y_{i}{j} + 2Y_{j}{k} - sgn C_{i}{k}"),
            res.is_zero(),
            &res,
        );
    }

    // Projections of the hat generators.
    let (h0, h1, h2) = table.hat_u();
    rep.check("u^_0 projects onto u0", h0.project() == &LoopElem::basis(0));
    rep.check("u^_1 projects onto u1", h1.project() == &LoopElem::basis(1));
    rep.check("u^_2 projects onto u2", h2.project() == &LoopElem::basis(2));

    // S4-action: generator mapping and automorphism property.
    for p in Perm4::all() {
        let mut ok = true;
        for &(i, j) in &ORDERED_PAIRS {
            let lhs = s4_ext_apply(&p, &table.lift(i, j), &table);
            let (pi, pj) = (p.apply_index(i), p.apply_index(j));
            let mut rhs = table.lift(pi, pj);
            if !p.is_even() {
                rhs = rhs.sub(&table.charge(Partition::from_pair(pi, pj)));
            }
            if lhs != rhs {
                ok = false;
            }
        }
        rep.check(format!("{p} maps lifts by the signed rule"), ok);
    }
    for case in 0..6 {
        use rand::Rng;
        let perms = Perm4::all();
        let p = perms[r.gen_range(0..24)];
        let x = ExtElem::new(random_loop_elem(&mut r, 3, 1), rat(1), rat(-2));
        let y = ExtElem::new(random_loop_elem(&mut r, 3, 1), rat(0), rat(3));
        let lhs = s4_ext_apply(&p, &ext_bracket(&x, &y), &table);
        let rhs = ext_bracket(&s4_ext_apply(&p, &x, &table), &s4_ext_apply(&p, &y, &table));
        let res = lhs.sub(&rhs);
        rep.check_residual(
            format!("action of {p} preserves brackets on random pair {case}"),
            res.is_zero(),
            &res,
        );
        let q = perms[r.gen_range(0..24)];
        let composed = s4_ext_apply(&p.compose(&q), &x, &table);
        let staged = s4_ext_apply(&p, &s4_ext_apply(&q, &x, &table), &table);
        let res = composed.sub(&staged);
        rep.check_residual(
            format!("group action law for {p}, {q} on random element {case}"),
            res.is_zero(),
            &res,
        );
    }

    rep
}
