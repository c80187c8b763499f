//! The Taft Hopf algebra.
//!
//! For odd `m`, the algebra is generated by `x` and `g` with
//! `gx = qxg`, `x^m = 0`, `g^m = 1`; its basis is `{x^i g^j : 0 <= i, j < m}`
//! (dimension m^2). Elements here are kept in that normal order.
//!
//! The same machinery also runs in a generic, untruncated mode over the
//! Laurent ring: there `q` is a formal variable, nothing is truncated, and
//! half powers of `g` (needed by the module coactions) stay symbolic. A
//! `ScalarRing` reports `modulus() == None` for the generic mode and
//! `Some(m)` for the cyclotomic specialization, where `g^(1/2) = g^((m+1)/2)`
//! makes every half power an ordinary basis element.

use std::collections::BTreeMap;

use crate::report::Report;
use crate::scalars::{CycloRing, ScalarRing};

/// A normal-ordered monomial `x^xp * g^(g2/2)` (the `g` exponent is stored
/// in half units).
pub type Mono = (u32, i64);

/// Element of the Taft algebra: a linear combination of normal-ordered
/// monomials. Canonical form stores no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct HElem<R: ScalarRing> {
    pub terms: BTreeMap<Mono, R::Elem>,
}

/// Element of `H (x) H`.
#[derive(Clone, PartialEq, Debug)]
pub struct HTensor2<R: ScalarRing> {
    pub terms: BTreeMap<(Mono, Mono), R::Elem>,
}

/// Element of `H (x) H (x) H`.
#[derive(Clone, PartialEq, Debug)]
pub struct HTensor3<R: ScalarRing> {
    pub terms: BTreeMap<(Mono, Mono, Mono), R::Elem>,
}

/// Reduces a monomial to normal form; `None` when it is annihilated by
/// `x^m = 0`.
pub fn normalize_mono<R: ScalarRing>(ring: &R, mono: Mono) -> Option<Mono> {
    match ring.modulus() {
        None => Some(mono),
        Some(m) => {
            let (xp, g2) = mono;
            if xp >= m {
                return None;
            }
            // g^(1/2) = g^((m+1)/2), so a half exponent g2/2 reduces to the
            // integer exponent g2*(m+1)/2 mod m.
            let half = ((m + 1) / 2) as i64;
            let j = (g2 * half).rem_euclid(m as i64);
            Some((xp, 2 * j))
        }
    }
}

impl<R: ScalarRing> HElem<R> {
    pub fn zero() -> Self {
        HElem { terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &R, mono: Mono, coeff: R::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.is_zero(&coeff) {
            if let Some(m) = normalize_mono(ring, mono) {
                terms.insert(m, coeff);
            }
        }
        HElem { terms }
    }

    pub fn one(ring: &R) -> Self {
        Self::monomial(ring, (0, 0), ring.one())
    }

    pub fn gen_x(ring: &R) -> Self {
        Self::monomial(ring, (1, 0), ring.one())
    }

    pub fn gen_g(ring: &R) -> Self {
        Self::monomial(ring, (0, 2), ring.one())
    }

    /// `g^(g2/2)` for any integer `g2`.
    pub fn g_half_power(ring: &R, g2: i64) -> Self {
        Self::monomial(ring, (0, g2), ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(*m).or_insert_with(|| ring.zero());
            *entry = ring.add(entry, c);
            if ring.is_zero(entry) {
                terms.remove(m);
            }
        }
        HElem { terms }
    }

    pub fn scale(&self, ring: &R, s: &R::Elem) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = ring.mul(c, s);
            if !ring.is_zero(&v) {
                terms.insert(*m, v);
            }
        }
        HElem { terms }
    }

    pub fn neg(&self, ring: &R) -> Self {
        HElem { terms: self.terms.iter().map(|(m, c)| (*m, ring.neg(c))).collect() }
    }

    pub fn mul(&self, ring: &R, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((x1, g1), c1) in &self.terms {
            for ((x2, g2), c2) in &other.terms {
                // g^(g1/2) x^x2 = q^(g1*x2/2) x^x2 g^(g1/2)
                let coeff = ring.mul(&ring.mul(c1, c2), &ring.q_quarter(2 * g1 * *x2 as i64));
                let t = Self::monomial(ring, (x1 + x2, g1 + g2), coeff);
                out = out.add(ring, &t);
            }
        }
        out
    }

    pub fn pow(&self, ring: &R, n: u32) -> Self {
        let mut acc = Self::one(ring);
        for _ in 0..n {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// `epsilon`: 1 on `g` powers, 0 on anything with a positive `x` power.
    pub fn counit(&self, ring: &R) -> R::Elem {
        let mut acc = ring.zero();
        for ((xp, _), c) in &self.terms {
            if *xp == 0 {
                acc = ring.add(&acc, c);
            }
        }
        acc
    }

    /// Antipode, extended from `S(g) = g^-1`, `S(x) = -g^-1 x` as an algebra
    /// anti-morphism.
    pub fn antipode(&self, ring: &R) -> Self {
        let s_x = Self::monomial(ring, (1, -2), ring.q_quarter(-4)).neg(ring);
        self.apply_anti(ring, &s_x, |g2| -g2)
    }

    /// Inverse antipode, from `S^-1(g) = g^-1`, `S^-1(x) = -x g^-1`.
    pub fn antipode_inv(&self, ring: &R) -> Self {
        let sinv_x = Self::monomial(ring, (1, -2), ring.one()).neg(ring);
        self.apply_anti(ring, &sinv_x, |g2| -g2)
    }

    // S(x^a g^(s/2)) = S(g^(s/2)) S(x)^a for an anti-morphism S.
    fn apply_anti(&self, ring: &R, image_x: &Self, g_map: impl Fn(i64) -> i64) -> Self {
        let mut out = Self::zero();
        for ((xp, g2), c) in &self.terms {
            let g_part = Self::g_half_power(ring, g_map(*g2));
            let t = g_part.mul(ring, &image_x.pow(ring, *xp)).scale(ring, c);
            out = out.add(ring, &t);
        }
        out
    }

    /// Coproduct, extended from `Delta(g) = g (x) g`, `Delta(x) = g (x) x + x (x) 1`
    /// as an algebra morphism (half powers of `g` are grouplike).
    pub fn coproduct(&self, ring: &R) -> HTensor2<R> {
        let delta_x = default_delta_x(ring);
        self.coproduct_with(ring, &delta_x)
    }

    /// Coproduct with an explicit generator image for `Delta(x)`; the default
    /// wrapper passes the Taft value. Mutation tests inject corrupted values
    /// here.
    pub fn coproduct_with(&self, ring: &R, delta_x: &HTensor2<R>) -> HTensor2<R> {
        let mut out = HTensor2::zero();
        for ((xp, g2), c) in &self.terms {
            let g_leg = HTensor2::monomial(ring, (0, *g2), (0, *g2), ring.one());
            let t = delta_x.pow(ring, *xp).mul(ring, &g_leg).scale(ring, c);
            out = out.add(ring, &t);
        }
        out
    }
}

/// `Delta(x) = g (x) x + x (x) 1`.
pub fn default_delta_x<R: ScalarRing>(ring: &R) -> HTensor2<R> {
    HTensor2::monomial(ring, (0, 2), (1, 0), ring.one())
        .add(ring, &HTensor2::monomial(ring, (1, 0), (0, 0), ring.one()))
}

impl<R: ScalarRing> HTensor2<R> {
    pub fn zero() -> Self {
        HTensor2 { terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &R, a: Mono, b: Mono, coeff: R::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.is_zero(&coeff) {
            if let (Some(a), Some(b)) = (normalize_mono(ring, a), normalize_mono(ring, b)) {
                terms.insert((a, b), coeff);
            }
        }
        HTensor2 { terms }
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(*m).or_insert_with(|| ring.zero());
            *entry = ring.add(entry, c);
            if ring.is_zero(entry) {
                terms.remove(m);
            }
        }
        HTensor2 { terms }
    }

    pub fn scale(&self, ring: &R, s: &R::Elem) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out = out.add(ring, &Self::monomial(ring, m.0, m.1, ring.mul(c, s)));
        }
        out
    }

    pub fn mul(&self, ring: &R, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let left = HElem::monomial(ring, *a1, ring.one())
                    .mul(ring, &HElem::monomial(ring, *a2, ring.one()));
                let right = HElem::monomial(ring, *b1, ring.one())
                    .mul(ring, &HElem::monomial(ring, *b2, ring.one()));
                let c = ring.mul(c1, c2);
                for (ma, ca) in &left.terms {
                    for (mb, cb) in &right.terms {
                        let coeff = ring.mul(&ring.mul(&c, ca), cb);
                        out = out.add(ring, &Self::monomial(ring, *ma, *mb, coeff));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, ring: &R, n: u32) -> Self {
        let mut acc = Self::monomial(ring, (0, 0), (0, 0), ring.one());
        for _ in 0..n {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// Multiplication map `m: H (x) H -> H`.
    pub fn collapse(&self, ring: &R) -> HElem<R> {
        let mut out = HElem::zero();
        for ((a, b), c) in &self.terms {
            let p = HElem::monomial(ring, *a, ring.one())
                .mul(ring, &HElem::monomial(ring, *b, ring.one()))
                .scale(ring, c);
            out = out.add(ring, &p);
        }
        out
    }

    /// Applies a linear map to the left leg.
    pub fn map_left(&self, ring: &R, f: impl Fn(&HElem<R>) -> HElem<R>) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let fa = f(&HElem::monomial(ring, *a, ring.one()));
            for (ma, ca) in &fa.terms {
                out = out.add(ring, &Self::monomial(ring, *ma, *b, ring.mul(c, ca)));
            }
        }
        out
    }

    /// Applies a linear map to the right leg.
    pub fn map_right(&self, ring: &R, f: impl Fn(&HElem<R>) -> HElem<R>) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let fb = f(&HElem::monomial(ring, *b, ring.one()));
            for (mb, cb) in &fb.terms {
                out = out.add(ring, &Self::monomial(ring, *a, *mb, ring.mul(c, cb)));
            }
        }
        out
    }

    /// `(Delta (x) id)` of this element.
    pub fn coproduct_left(&self, ring: &R) -> HTensor3<R> {
        let mut out = HTensor3::zero();
        for ((a, b), c) in &self.terms {
            let da = HElem::monomial(ring, *a, ring.one()).coproduct(ring);
            for ((a1, a2), ca) in &da.terms {
                out.insert(ring, (*a1, *a2, *b), ring.mul(c, ca));
            }
        }
        out
    }

    /// `(id (x) Delta)` of this element.
    pub fn coproduct_right(&self, ring: &R) -> HTensor3<R> {
        let mut out = HTensor3::zero();
        for ((a, b), c) in &self.terms {
            let db = HElem::monomial(ring, *b, ring.one()).coproduct(ring);
            for ((b1, b2), cb) in &db.terms {
                out.insert(ring, (*a, *b1, *b2), ring.mul(c, cb));
            }
        }
        out
    }
}

impl<R: ScalarRing> HTensor3<R> {
    pub fn zero() -> Self {
        HTensor3 { terms: BTreeMap::new() }
    }

    pub fn insert(&mut self, ring: &R, mono: (Mono, Mono, Mono), coeff: R::Elem) {
        if ring.is_zero(&coeff) {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(|| ring.zero());
        *entry = ring.add(entry, &coeff);
        if ring.is_zero(entry) {
            self.terms.remove(&mono);
        }
    }
}

/// Formats a basis monomial for failure witnesses.
pub fn mono_name(mono: Mono) -> String {
    let (xp, g2) = mono;
    let mut s = String::new();
    match xp {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x^{xp}")),
    }
    if g2 != 0 {
        if g2 % 2 == 0 {
            let j = g2 / 2;
            if j == 1 {
                s.push('g');
            } else {
                s.push_str(&format!("g^{j}"));
            }
        } else {
            s.push_str(&format!("g^({g2}/2)"));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// The Taft algebra for a fixed odd `m`, over its cyclotomic scalar field.
#[derive(Clone, Debug)]
pub struct TaftAlgebra {
    ring: CycloRing,
}

impl TaftAlgebra {
    pub fn new(m: u32) -> Result<Self, crate::error::Error> {
        Ok(TaftAlgebra { ring: CycloRing::new(m)? })
    }

    pub fn m(&self) -> u32 {
        self.ring.m()
    }

    pub fn ring(&self) -> &CycloRing {
        &self.ring
    }

    /// All m^2 basis monomials `x^i g^j`.
    pub fn basis(&self) -> Vec<Mono> {
        let m = self.m();
        let mut out = Vec::with_capacity((m * m) as usize);
        for i in 0..m {
            for j in 0..m {
                out.push((i, 2 * j as i64));
            }
        }
        out
    }

    pub fn basis_elem(&self, mono: Mono) -> HElem<CycloRing> {
        HElem::monomial(&self.ring, mono, self.ring.one())
    }

    /// Checks every Hopf-algebra axiom on the full basis and reports
    /// per-axiom pass/fail with a witness element on failure.
    pub fn verify_hopf(&self) -> Report {
        let ring = &self.ring;
        let mut report = Report::new(format!("hopf m={}", self.m()));
        let basis = self.basis();

        // Defining relations.
        {
            let g = HElem::gen_g(ring);
            let x = HElem::gen_x(ring);
            let gx = g.mul(ring, &x);
            let qxg = x.mul(ring, &g).scale(ring, &ring.q_quarter(4));
            report.push("relation gx = qxg", gx == qxg, None);
            let xm = x.pow(ring, self.m());
            report.push("relation x^m = 0", xm.is_zero(), None);
            let gm = g.pow(ring, self.m());
            report.push("relation g^m = 1", gm == HElem::one(ring), None);
        }

        // Coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta.
        {
            let mut fail = None;
            for &b in &basis {
                let d = self.basis_elem(b).coproduct(ring);
                if d.coproduct_left(ring).terms != d.coproduct_right(ring).terms {
                    fail = Some(b);
                    break;
                }
            }
            report.push("coassociativity", fail.is_none(), fail.map(mono_name));
        }

        // Counit laws: (eps (x) id)Delta = id = (id (x) eps)Delta.
        {
            let mut fail = None;
            for &b in &basis {
                let h = self.basis_elem(b);
                let d = h.coproduct(ring);
                let mut left = HElem::zero();
                let mut right = HElem::zero();
                for ((a, b2), c) in &d.terms {
                    let ea = HElem::<CycloRing>::monomial(ring, *a, ring.one()).counit(ring);
                    left = left.add(ring, &HElem::monomial(ring, *b2, ring.mul(c, &ea)));
                    let eb = HElem::<CycloRing>::monomial(ring, *b2, ring.one()).counit(ring);
                    right = right.add(ring, &HElem::monomial(ring, *a, ring.mul(c, &eb)));
                }
                if left != h || right != h {
                    fail = Some(b);
                    break;
                }
            }
            report.push("counit laws", fail.is_none(), fail.map(mono_name));
        }

        // Delta and eps are algebra morphisms.
        {
            let mut fail = None;
            'outer: for &a in &basis {
                for &b in &basis {
                    let ha = self.basis_elem(a);
                    let hb = self.basis_elem(b);
                    let ab = ha.mul(ring, &hb);
                    if ab.coproduct(ring) != ha.coproduct(ring).mul(ring, &hb.coproduct(ring)) {
                        fail = Some((a, b));
                        break 'outer;
                    }
                    let e_ab = ab.counit(ring);
                    let e_sep = ring.mul(&ha.counit(ring), &hb.counit(ring));
                    if e_ab != e_sep {
                        fail = Some((a, b));
                        break 'outer;
                    }
                }
            }
            report.push(
                "coproduct and counit are algebra morphisms",
                fail.is_none(),
                fail.map(|(a, b)| format!("{} * {}", mono_name(a), mono_name(b))),
            );
        }

        // Antipode axiom: m(S (x) id)Delta = eps(.)1 = m(id (x) S)Delta.
        {
            let mut fail = None;
            for &b in &basis {
                let h = self.basis_elem(b);
                let d = h.coproduct(ring);
                let lhs = d.map_left(ring, |e| e.antipode(ring)).collapse(ring);
                let rhs = d.map_right(ring, |e| e.antipode(ring)).collapse(ring);
                let target = HElem::monomial(ring, (0, 0), h.counit(ring));
                if lhs != target || rhs != target {
                    fail = Some(b);
                    break;
                }
            }
            report.push("antipode axiom", fail.is_none(), fail.map(mono_name));
        }

        // S and S^-1 are mutually inverse.
        {
            let mut fail = None;
            for &b in &basis {
                let h = self.basis_elem(b);
                if h.antipode(ring).antipode_inv(ring) != h
                    || h.antipode_inv(ring).antipode(ring) != h
                {
                    fail = Some(b);
                    break;
                }
            }
            report.push("antipode inverse", fail.is_none(), fail.map(mono_name));
        }

        // S is an algebra anti-morphism.
        {
            let mut fail = None;
            'outer: for &a in &basis {
                for &b in &basis {
                    let ha = self.basis_elem(a);
                    let hb = self.basis_elem(b);
                    let lhs = ha.mul(ring, &hb).antipode(ring);
                    let rhs = hb.antipode(ring).mul(ring, &ha.antipode(ring));
                    if lhs != rhs {
                        fail = Some((a, b));
                        break 'outer;
                    }
                }
            }
            report.push(
                "antipode is an anti-morphism",
                fail.is_none(),
                fail.map(|(a, b)| format!("{} * {}", mono_name(a), mono_name(b))),
            );
        }

        // Finite order of S on the basis; recorded, not asserted.
        {
            let limit = 4 * self.m();
            let mut order = None;
            let mut images: Vec<HElem<CycloRing>> =
                basis.iter().map(|&b| self.basis_elem(b)).collect();
            for t in 1..=limit {
                images = images.iter().map(|h| h.antipode(ring)).collect();
                if images
                    .iter()
                    .zip(&basis)
                    .all(|(h, &b)| *h == self.basis_elem(b))
                {
                    order = Some(t);
                    break;
                }
            }
            match order {
                Some(t) => report.push_note(
                    "antipode has finite order",
                    true,
                    None,
                    format!("order(S) = {t}"),
                ),
                None => report.push(
                    format!("antipode order <= {limit}"),
                    false,
                    Some("no power of S up to the bound is the identity".into()),
                ),
            }
        }

        report
    }
}
