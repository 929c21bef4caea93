//! Exact arithmetic in the localized ring `A = k[t, 1/t, 1/(1-t)]` over the
//! rationals.
//!
//! Elements are kept as reduced fractions `p(t) / (t^a * (t-1)^b)`. The ring
//! carries an S3-action generated by the order-3 automorphism `t -> t' = 1 - 1/t`
//! and the order-2 automorphism `t -> 1 - t`, a distinguished k-basis
//! `{1} u {t^n, t'^n, t''^n}`, and three direct-sum decompositions into
//! polynomial subspaces in t, t' and t''. Since t and t-1 are units, A is a
//! principal ideal domain whose ideals are generated by monic polynomials
//! coprime to t(t-1).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::poly::Poly;
use crate::rat::{rat, Rat};

/// An element of `A` as a reduced fraction `num / (t^a * (t-1)^b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElem {
    num: Poly,
    a: usize,
    b: usize,
}

impl RingElem {
    pub fn new(num: Poly, a: usize, b: usize) -> Self {
        let mut e = RingElem { num, a, b };
        e.reduce();
        e
    }

    pub fn zero() -> Self {
        RingElem { num: Poly::zero(), a: 0, b: 0 }
    }

    pub fn one() -> Self {
        RingElem::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RingElem { num, a: 0, b: 0 }
    }

    pub fn from_rat(c: Rat) -> Self {
        RingElem::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RingElem::from_rat(rat(n))
    }

    /// The generator `t`.
    pub fn t() -> Self {
        RingElem::from_poly(Poly::t())
    }

    /// `t' = 1 - 1/t = (t-1)/t`.
    pub fn t_prime() -> Self {
        RingElem::new(Poly::t_minus_one(), 1, 0)
    }

    /// `t'' = 1/(1-t) = -1/(t-1)`.
    pub fn t_second() -> Self {
        RingElem::new(Poly::constant(rat(-1)), 0, 1)
    }

    /// `1/t`.
    pub fn t_inv() -> Self {
        RingElem::new(Poly::one(), 1, 0)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// Exponent of `t` in the denominator.
    pub fn denom_t(&self) -> usize {
        self.a
    }

    /// Exponent of `t-1` in the denominator.
    pub fn denom_t_minus_one(&self) -> usize {
        self.b
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.a = 0;
            self.b = 0;
            return;
        }
        let k = self.num.order_at_zero().min(self.a);
        if k > 0 {
            self.num = self.num.shr_t(k);
            self.a -= k;
        }
        let lin = Poly::t_minus_one();
        while self.b > 0 && self.num.eval(&rat(1)).is_zero() {
            self.num = self.num.div_exact(&lin);
            self.b -= 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a == 0 && self.b == 0 && self.num.is_one()
    }

    /// True when the element is a polynomial in `t`.
    pub fn is_poly(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// The numerator, provided the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.is_poly() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Units of `A` are exactly the elements `c * t^i * (t-1)^j` with `c != 0`.
    pub fn is_unit(&self) -> bool {
        if self.num.is_zero() {
            return false;
        }
        let k = self.num.order_at_zero();
        let l = self.num.shr_t(k).order_at_one();
        self.num.degree() == Some(k + l)
    }

    pub fn inv(&self) -> Option<RingElem> {
        if !self.is_unit() {
            return None;
        }
        let k = self.num.order_at_zero();
        let stripped = self.num.shr_t(k);
        let l = stripped.order_at_one();
        let c = stripped.leading_coeff().unwrap().clone();
        // self = c * t^k * (t-1)^l / (t^a (t-1)^b)
        let mut num = Poly::constant(Rat::one() / c);
        num = num.shl_t(self.a);
        num = &num * &Poly::t_minus_one().pow(self.b as u32);
        Some(RingElem::new(num, k, l))
    }

    pub fn pow(&self, n: i64) -> Option<RingElem> {
        if n >= 0 {
            let mut acc = RingElem::one();
            let mut base = self.clone();
            let mut k = n as u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                base = &base * &base;
                k >>= 1;
            }
            Some(acc)
        } else {
            self.inv().and_then(|i| i.pow(-n))
        }
    }

    /// Substitutes a unit `w` (with `w - 1` also a unit) for `t`.
    ///
    /// This is the generic engine behind the ring automorphisms: any
    /// endomorphism of `A` is determined by the image of `t`, and it lands in
    /// `A` exactly when `w` and `w - 1` are invertible.
    pub fn eval_at(&self, w: &RingElem) -> Option<RingElem> {
        let w_inv = w.inv()?;
        let w_minus_one_inv = (w - &RingElem::one()).inv()?;
        let mut acc = RingElem::zero();
        for c in self.num.coeffs().iter().rev() {
            acc = &(&acc * w) + &RingElem::from_rat(c.clone());
        }
        let mut out = acc;
        if self.a > 0 {
            out = &out * &w_inv.pow(self.a as i64).unwrap();
        }
        if self.b > 0 {
            out = &out * &w_minus_one_inv.pow(self.b as i64).unwrap();
        }
        Some(out)
    }

    pub fn derivative(&self) -> RingElem {
        // (p / (t^a (t-1)^b))' = (p' t(t-1) - p (a(t-1) + bt)) / (t^{a+1} (t-1)^{b+1})
        let t = Poly::t();
        let tm1 = Poly::t_minus_one();
        let corr = &tm1.scale(&rat(self.a as i64)) + &t.scale(&rat(self.b as i64));
        let num = &(&self.num.derivative() * &(&t * &tm1)) - &(&self.num * &corr);
        RingElem::new(num, self.a + 1, self.b + 1)
    }

    /// Evaluates at a rational point other than 0 and 1.
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        if (self.a > 0 && x.is_zero()) || (self.b > 0 && (x - rat(1)).is_zero()) {
            return None;
        }
        let mut v = self.num.eval(x);
        for _ in 0..self.a {
            v = v / x;
        }
        let xm1 = x - rat(1);
        for _ in 0..self.b {
            v = v / &xm1;
        }
        Some(v)
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        let a = self.a.max(rhs.a);
        let b = self.b.max(rhs.b);
        let lift = |x: &RingElem| -> Poly {
            let mut p = x.num.shl_t(a - x.a);
            if b > x.b {
                p = &p * &Poly::t_minus_one().pow((b - x.b) as u32);
            }
            p
        };
        RingElem::new(&lift(self) + &lift(rhs), a, b)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { num: -&self.num, a: self.a, b: self.b }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        RingElem::new(&self.num * &rhs.num, self.a + rhs.a, self.b + rhs.b)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$method(rhs)
            }
        }
        impl $trait<RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == 0 && self.b == 0 {
            return write!(f, "{}", self.num);
        }
        let mut denom = Vec::new();
        match self.a {
            0 => {}
            1 => denom.push("t".to_string()),
            a => denom.push(format!("t^{a}")),
        }
        match self.b {
            0 => {}
            1 => denom.push("(t-1)".to_string()),
            b => denom.push(format!("(t-1)^{b}")),
        }
        write!(f, "({}) / ({})", self.num, denom.join(" * "))
    }
}

/// The order-3 ring automorphism determined by `t -> t'`.
pub fn phi_a(x: &RingElem) -> RingElem {
    x.eval_at(&RingElem::t_prime()).expect("t' is a unit with unit t'-1")
}

/// The order-2 ring automorphism determined by `t -> 1 - t`.
pub fn tau_a(x: &RingElem) -> RingElem {
    let one_minus_t = RingElem::from_poly(&Poly::one() - &Poly::t());
    x.eval_at(&one_minus_t).expect("1-t is a unit with unit -t")
}

/// Coordinates of an element in the k-basis `{1} u {t^n, t'^n, t''^n : n >= 1}`.
///
/// Stored sparsely; absent keys are zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct KBasisCoords {
    pub c0: Rat,
    pub ct: BTreeMap<usize, Rat>,
    pub ctp: BTreeMap<usize, Rat>,
    pub ctpp: BTreeMap<usize, Rat>,
}

impl KBasisCoords {
    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.ct.is_empty() && self.ctp.is_empty() && self.ctpp.is_empty()
    }

    fn insert(map: &mut BTreeMap<usize, Rat>, n: usize, v: Rat) {
        if v.is_zero() {
            return;
        }
        let entry = map.entry(n).or_insert_with(|| rat(0));
        *entry = entry.clone() + v;
        if entry.is_zero() {
            map.remove(&n);
        }
    }
}

/// Partial fraction decomposition `x = poly + sum d_n / t^n + sum e_n / (t-1)^n`.
///
/// `d[i]` holds `d_{i+1}` and `e[i]` holds `e_{i+1}`. The decomposition is
/// unique because t and t-1 are coprime.
pub struct PartialFractions {
    pub poly: Poly,
    pub d: Vec<Rat>,
    pub e: Vec<Rat>,
}

/// Truncated power series of `(t-1)^{-b}` at 0: `(-1)^b * sum C(b-1+k, k) t^k`.
fn series_inv_tm1(b: usize, order: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(order);
    let sign = if b % 2 == 0 { rat(1) } else { rat(-1) };
    let mut c = Rat::one(); // C(b-1+k, k), starting at k = 0
    for k in 0..order {
        out.push(&sign * &c);
        c = c * rat((b + k) as i64) / rat(k as i64 + 1);
    }
    out
}

pub fn partial_fractions(x: &RingElem) -> PartialFractions {
    let a = x.denom_t();
    let b = x.denom_t_minus_one();
    let p = x.num().clone();

    // Principal part at 0: x * t^a = p / (t-1)^b is regular at 0; its series
    // coefficients of order < a are the d's (highest pole first).
    let mut d = vec![rat(0); a];
    if a > 0 {
        let inv = series_inv_tm1(b, a);
        for n in 1..=a {
            // coefficient of t^{a-n} in p * inv
            let mut c = rat(0);
            for j in 0..=(a - n) {
                c = c + p.coeff(j) * inv[a - n - j].clone();
            }
            d[n - 1] = c;
        }
    }

    // Principal part at 1 via the substitution s = t - 1.
    let mut e = vec![rat(0); b];
    if b > 0 {
        let q = p.shift(&rat(1)); // p(1 + s)
        // (1+s)^{-a} = sum (-1)^k C(a-1+k, k) s^k
        let mut inv = Vec::with_capacity(b);
        let mut c = Rat::one();
        for k in 0..b {
            inv.push(if k % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * rat((a + k) as i64) / rat(k as i64 + 1);
        }
        for n in 1..=b {
            let mut cn = rat(0);
            for j in 0..=(b - n) {
                cn = cn + q.coeff(j) * inv[b - n - j].clone();
            }
            e[n - 1] = cn;
        }
    }

    // The remainder must be the polynomial part.
    let mut rest = x.clone();
    for (n, dn) in d.iter().enumerate() {
        rest = &rest - &RingElem::new(Poly::constant(dn.clone()), n + 1, 0);
    }
    for (n, en) in e.iter().enumerate() {
        rest = &rest - &RingElem::new(Poly::constant(en.clone()), 0, n + 1);
    }
    let poly = rest
        .as_poly()
        .expect("principal parts removed all poles")
        .clone();

    PartialFractions { poly, d, e }
}

/// Pole location for [`residue_at`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Point {
    Zero,
    One,
    Infinity,
}

/// Coefficient of `(t - point)^{-1}` in the local expansion; at infinity the
/// residue theorem on the projective line pins it to `-Res_0 - Res_1`.
pub fn residue_at(x: &RingElem, point: Point) -> Rat {
    let pf = partial_fractions(x);
    let r0 = pf.d.first().cloned().unwrap_or_else(|| rat(0));
    let r1 = pf.e.first().cloned().unwrap_or_else(|| rat(0));
    match point {
        Point::Zero => r0,
        Point::One => r1,
        Point::Infinity => -(r0 + r1),
    }
}

/// Expands an element in the k-basis `{1} u {t^n, t'^n, t''^n}`.
pub fn to_k_basis(x: &RingElem) -> KBasisCoords {
    let pf = partial_fractions(x);
    let mut out = KBasisCoords::default();

    out.c0 = pf.poly.coeff(0);
    for (n, c) in pf.poly.coeffs().iter().enumerate().skip(1) {
        KBasisCoords::insert(&mut out.ct, n, c.clone());
    }

    // t^{-n} = (1 - t')^n; expand and fold the constants into c0.
    for (i, dn) in pf.d.iter().enumerate() {
        if dn.is_zero() {
            continue;
        }
        let n = i + 1;
        let mut binom = Rat::one(); // C(n, j)
        for j in 0..=n {
            let signed = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
            let contrib = dn * signed;
            if j == 0 {
                out.c0 = &out.c0 + &contrib;
            } else {
                KBasisCoords::insert(&mut out.ctp, j, contrib);
            }
            binom = binom * rat((n - j) as i64) / rat(j as i64 + 1);
        }
    }

    // (t-1)^{-n} = (-1)^n t''^n.
    for (i, en) in pf.e.iter().enumerate() {
        if en.is_zero() {
            continue;
        }
        let n = i + 1;
        let signed = if n % 2 == 0 { en.clone() } else { -en.clone() };
        KBasisCoords::insert(&mut out.ctpp, n, signed);
    }

    out
}

/// Reassembles an element from its k-basis coordinates.
pub fn from_k_basis(c: &KBasisCoords) -> RingElem {
    let mut acc = RingElem::from_rat(c.c0.clone());
    for (&n, v) in &c.ct {
        acc = &acc + &RingElem::from_poly(Poly::monomial(v.clone(), n));
    }
    let tp = RingElem::t_prime();
    for (&n, v) in &c.ctp {
        let term = tp.pow(n as i64).unwrap();
        acc = &acc + &(&RingElem::from_rat(v.clone()) * &term);
    }
    let tpp = RingElem::t_second();
    for (&n, v) in &c.ctpp {
        let term = tpp.pow(n as i64).unwrap();
        acc = &acc + &(&RingElem::from_rat(v.clone()) * &term);
    }
    acc
}

/// Splits `x` along `A = (t-1)k[t] + t'k[t'] + k[t'']` (direct sum).
pub fn triple_split(x: &RingElem) -> (RingElem, RingElem, RingElem) {
    let c = to_k_basis(x);
    // (t-1)k[t] part: sum ct[n] (t^n - 1)
    let mut p = RingElem::zero();
    let mut shifted_const = c.c0.clone();
    for (&n, v) in &c.ct {
        let mut mono = Poly::monomial(v.clone(), n);
        mono = &mono - &Poly::constant(v.clone());
        p = &p + &RingElem::from_poly(mono);
        shifted_const = shifted_const + v;
    }
    // t'k[t'] part: sum ctp[n] t'^n
    let tp = RingElem::t_prime();
    let mut pp = RingElem::zero();
    for (&n, v) in &c.ctp {
        pp = &pp + &(&RingElem::from_rat(v.clone()) * &tp.pow(n as i64).unwrap());
    }
    // k[t''] part: (c0 + sum ct[n]) + sum ctpp[n] t''^n
    let tpp = RingElem::t_second();
    let mut ppp = RingElem::from_rat(shifted_const);
    for (&n, v) in &c.ctpp {
        ppp = &ppp + &(&RingElem::from_rat(v.clone()) * &tpp.pow(n as i64).unwrap());
    }
    (p, pp, ppp)
}

/// Splits `x` along the rotated decomposition `A = k[t] + (t'-1)k[t'] + t''k[t'']`.
pub fn triple_split_rot1(x: &RingElem) -> (RingElem, RingElem, RingElem) {
    let c = to_k_basis(x);
    let mut const_part = c.c0.clone();
    let mut p = RingElem::zero();
    for (&n, v) in &c.ct {
        p = &p + &RingElem::from_poly(Poly::monomial(v.clone(), n));
    }
    let tp = RingElem::t_prime();
    let mut pp = RingElem::zero();
    for (&n, v) in &c.ctp {
        let term = &tp.pow(n as i64).unwrap() - &RingElem::one();
        pp = &pp + &(&RingElem::from_rat(v.clone()) * &term);
        const_part = const_part + v;
    }
    p = &p + &RingElem::from_rat(const_part);
    let tpp = RingElem::t_second();
    let mut ppp = RingElem::zero();
    for (&n, v) in &c.ctpp {
        ppp = &ppp + &(&RingElem::from_rat(v.clone()) * &tpp.pow(n as i64).unwrap());
    }
    (p, pp, ppp)
}

/// Splits `x` along the rotated decomposition `A = tk[t] + k[t'] + (t''-1)k[t'']`.
pub fn triple_split_rot2(x: &RingElem) -> (RingElem, RingElem, RingElem) {
    let c = to_k_basis(x);
    let mut p = RingElem::zero();
    for (&n, v) in &c.ct {
        p = &p + &RingElem::from_poly(Poly::monomial(v.clone(), n));
    }
    let tp = RingElem::t_prime();
    let mut const_part = c.c0.clone();
    let mut pp = RingElem::zero();
    for (&n, v) in &c.ctp {
        pp = &pp + &(&RingElem::from_rat(v.clone()) * &tp.pow(n as i64).unwrap());
    }
    let tpp = RingElem::t_second();
    let mut ppp = RingElem::zero();
    for (&n, v) in &c.ctpp {
        let term = &tpp.pow(n as i64).unwrap() - &RingElem::one();
        ppp = &ppp + &(&RingElem::from_rat(v.clone()) * &term);
        const_part = const_part + v;
    }
    pp = &pp + &RingElem::from_rat(const_part);
    (p, pp, ppp)
}

/// An ideal of `A` in canonical form: the zero polynomial, or a monic
/// generator coprime to `t(t-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingIdeal {
    gen: Poly,
}

impl RingIdeal {
    pub fn zero() -> Self {
        RingIdeal { gen: Poly::zero() }
    }

    pub fn whole() -> Self {
        RingIdeal { gen: Poly::one() }
    }

    pub fn generator(&self) -> &Poly {
        &self.gen
    }

    pub fn is_zero(&self) -> bool {
        self.gen.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.gen.is_one()
    }
}

/// Strips the unit factors `c * t^i * (t-1)^j` from a generator and returns
/// the canonical monic ideal generator.
pub fn ideal_normalize(x: &RingElem) -> RingIdeal {
    if x.is_zero() {
        return RingIdeal::zero();
    }
    let mut p = x.num().clone();
    p = p.shr_t(p.order_at_zero());
    let lin = Poly::t_minus_one();
    for _ in 0..p.order_at_one() {
        p = p.div_exact(&lin);
    }
    RingIdeal { gen: p.monic() }
}

pub fn ideal_gcd(i: &RingIdeal, j: &RingIdeal) -> RingIdeal {
    if i.is_zero() {
        return j.clone();
    }
    if j.is_zero() {
        return i.clone();
    }
    ideal_normalize(&RingElem::from_poly(i.gen.gcd(&j.gen)))
}

/// Ideal membership: `x` is in `(gen)` iff `gen` divides the numerator of `x`
/// stripped of its unit factors.
pub fn ideal_member(x: &RingElem, i: &RingIdeal) -> bool {
    if x.is_zero() {
        return true;
    }
    if i.is_zero() {
        return false;
    }
    let norm = ideal_normalize(x);
    i.gen.divides(norm.generator())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> RingElem {
        RingElem::t()
    }

    fn tp() -> RingElem {
        RingElem::t_prime()
    }

    fn tpp() -> RingElem {
        RingElem::t_second()
    }

    #[test]
    fn add_examples() {
        assert!((&t() + &(-&t())).is_zero());
        // t' + 1/t = 1
        assert_eq!(&tp() + &RingElem::t_inv(), RingElem::one());
        // 1/t + 1/(1-t) = 1/(t(1-t)), i.e. -1/(t(t-1))
        let lhs = &RingElem::t_inv() + &tpp();
        let rhs = RingElem::new(Poly::constant(rat(-1)), 1, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_examples() {
        // t * t' = t - 1
        assert_eq!(&t() * &tp(), RingElem::from_poly(Poly::t_minus_one()));
        // t'' * (t-1) = -1
        let tm1 = RingElem::from_poly(Poly::t_minus_one());
        assert_eq!(&tpp() * &tm1, RingElem::from_int(-1));
        // t * t' * t'' = -1
        assert_eq!(&(&t() * &tp()) * &tpp(), RingElem::from_int(-1));
    }

    #[test]
    fn phi_orbit() {
        assert_eq!(phi_a(&t()), tp());
        assert_eq!(phi_a(&tp()), tpp());
        assert_eq!(phi_a(&tpp()), t());
        assert_eq!(phi_a(&RingElem::one()), RingElem::one());
    }

    #[test]
    fn tau_action() {
        let one_minus_t = RingElem::from_poly(&Poly::one() - &Poly::t());
        assert_eq!(tau_a(&t()), one_minus_t);
        // tau(t') * t' = 1
        assert_eq!(&tau_a(&tp()) * &tp(), RingElem::one());
        assert_eq!(tau_a(&RingElem::from_int(5)), RingElem::from_int(5));
    }

    #[test]
    fn s3_relations() {
        let samples = [t(), tp(), tpp(), &t() * &tp(), RingElem::new(Poly::from_coeffs(vec![rat(2), rat(0), rat(3)]), 2, 1)];
        for x in &samples {
            assert_eq!(phi_a(&phi_a(&phi_a(x))), *x);
            assert_eq!(tau_a(&tau_a(x)), *x);
            assert_eq!(tau_a(&phi_a(x)), phi_a(&phi_a(&tau_a(x))));
        }
    }

    #[test]
    fn k_basis_examples() {
        // 1/t = 1 - t'
        let c = to_k_basis(&RingElem::t_inv());
        assert_eq!(c.c0, rat(1));
        assert_eq!(c.ctp.get(&1), Some(&rat(-1)));
        assert!(c.ct.is_empty() && c.ctpp.is_empty());

        // 1/(t(1-t)) = 1 - t' + t''
        let x = RingElem::new(Poly::constant(rat(-1)), 1, 1);
        let c = to_k_basis(&x);
        assert_eq!(c.c0, rat(1));
        assert_eq!(c.ctp.get(&1), Some(&rat(-1)));
        assert_eq!(c.ctpp.get(&1), Some(&rat(1)));

        // t^3 is already a basis vector
        let c = to_k_basis(&t().pow(3).unwrap());
        assert!(c.c0.is_zero());
        assert_eq!(c.ct.get(&3), Some(&rat(1)));
        assert!(c.ctp.is_empty() && c.ctpp.is_empty());
    }

    #[test]
    fn from_k_basis_examples() {
        let mut c = KBasisCoords::default();
        c.c0 = rat(1);
        c.ctpp.insert(1, rat(1));
        // 1 + t'' = (t-2)/(t-1)
        let expect = RingElem::new(Poly::from_coeffs(vec![rat(-2), rat(1)]), 0, 1);
        assert_eq!(from_k_basis(&c), expect);

        assert!(from_k_basis(&KBasisCoords::default()).is_zero());

        let mut c = KBasisCoords::default();
        c.ct.insert(1, rat(1));
        assert_eq!(from_k_basis(&c), t());
    }

    #[test]
    fn triple_split_examples() {
        let (p, pp, ppp) = triple_split(&RingElem::one());
        assert!(p.is_zero() && pp.is_zero());
        assert_eq!(ppp, RingElem::one());

        let (p, pp, ppp) = triple_split(&t());
        assert_eq!(p, RingElem::from_poly(Poly::t_minus_one()));
        assert!(pp.is_zero());
        assert_eq!(ppp, RingElem::one());

        let (p, pp, ppp) = triple_split(&tp());
        assert!(p.is_zero() && ppp.is_zero());
        assert_eq!(pp, tp());
    }

    #[test]
    fn ideal_examples() {
        // 3t^2(t-1)(t-2) normalizes to (t-2)
        let gen = &Poly::monomial(rat(3), 2) * &(&Poly::t_minus_one() * &Poly::from_coeffs(vec![rat(-2), rat(1)]));
        let i = ideal_normalize(&RingElem::from_poly(gen));
        assert_eq!(i.generator(), &Poly::from_coeffs(vec![rat(-2), rat(1)]));

        assert!(ideal_normalize(&RingElem::t_inv()).is_whole());
        assert!(ideal_normalize(&RingElem::zero()).is_zero());

        let i2 = ideal_normalize(&RingElem::from_poly(Poly::from_coeffs(vec![rat(-2), rat(1)])));
        let i3 = ideal_normalize(&RingElem::from_poly(Poly::from_coeffs(vec![rat(-3), rat(1)])));
        assert!(ideal_gcd(&i2, &i3).is_whole());

        // t(t-2) is in (t-2); t-3 is not
        let x = RingElem::from_poly(&Poly::t() * &Poly::from_coeffs(vec![rat(-2), rat(1)]));
        assert!(ideal_member(&x, &i2));
        let y = RingElem::from_poly(Poly::from_coeffs(vec![rat(-3), rat(1)]));
        assert!(!ideal_member(&y, &i2));
        assert!(ideal_member(&RingElem::zero(), &i2));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue_at(&RingElem::t_inv(), Point::Zero), rat(1));
        assert_eq!(residue_at(&tpp(), Point::One), rat(-1));
        assert_eq!(residue_at(&t().pow(3).unwrap(), Point::Zero), rat(0));
        // Residue theorem: the three residues sum to zero by construction,
        // and residues of derivatives vanish at finite points.
        let x = RingElem::new(Poly::from_coeffs(vec![rat(1), rat(2), rat(5)]), 3, 2);
        let dx = x.derivative();
        assert_eq!(residue_at(&dx, Point::Zero), rat(0));
        assert_eq!(residue_at(&dx, Point::One), rat(0));
    }

    #[test]
    fn unit_recognition() {
        assert!(t().is_unit());
        assert!(tp().is_unit());
        assert!(tpp().is_unit());
        assert!(!RingElem::from_poly(Poly::from_coeffs(vec![rat(-2), rat(1)])).is_unit());
        assert!(!RingElem::zero().is_unit());
        let u = RingElem::new(Poly::from_coeffs(vec![rat(0), rat(-3), rat(3)]), 2, 0);
        assert!(u.is_unit());
        assert_eq!(&u * &u.inv().unwrap(), RingElem::one());
    }
}
