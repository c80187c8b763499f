//! Yetter-Drinfeld modules over the Taft algebra.
//!
//! A module is stored by how the generators act and coact on a fixed basis:
//! the half power `g^(1/2)` acts diagonally (and stays diagonal under duals
//! and tensor products), `x` acts by an arbitrary matrix, and the coaction
//! sends each basis vector to a sum of `monomial (x) basis vector` terms.
//! The simple modules `V_n` (dimension n+1, basis `v_-n, v_-n+2, ..., v_n`),
//! their duals and tensor products are all built in this shape.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::report::Report;
use crate::scalars::ScalarRing;
use crate::taft::{default_delta_x, mono_name, HElem, HTensor2, Mono};

/// One coaction term: `coeff * (x^a g^(g2/2)) (x) basis[row]`.
pub type CoactTerm<R> = (Mono, usize, <R as ScalarRing>::Elem);

#[derive(Clone, Debug)]
pub struct YDModule<R: ScalarRing> {
    pub ring: R,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Diagonal action of `g^(1/2)`.
    pub g_half: Vec<R::Elem>,
    /// Action of `x`, columns indexed by input basis vector.
    pub x_mat: Matrix<R::Elem>,
    /// `coaction[j]` lists the terms of `delta(basis[j])`.
    pub coaction: Vec<Vec<CoactTerm<R>>>,
}

fn elem_pow_i<R: ScalarRing>(ring: &R, w: &R::Elem, e: i64) -> R::Elem {
    let base = if e < 0 {
        ring.inv(w).expect("diagonal weight must be a unit")
    } else {
        w.clone()
    };
    let mut acc = ring.one();
    for _ in 0..e.unsigned_abs() {
        acc = ring.mul(&acc, &base);
    }
    acc
}

impl<R: ScalarRing> YDModule<R> {
    /// Matrix of the action of `x^a g^(g2/2)`.
    pub fn act_mono(&self, mono: Mono) -> Matrix<R::Elem> {
        let (xp, g2) = mono;
        let ring = &self.ring;
        let mut m = Matrix::zero(ring, self.dim, self.dim);
        for i in 0..self.dim {
            m.set(i, i, elem_pow_i(ring, &self.g_half[i], g2));
        }
        for _ in 0..xp {
            m = self.x_mat.mul(ring, &m);
        }
        m
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn act(&self, h: &HElem<R>) -> Matrix<R::Elem> {
        let ring = &self.ring;
        let mut out = Matrix::zero(ring, self.dim, self.dim);
        for (mono, c) in &h.terms {
            out = out.add(ring, &self.act_mono(*mono).scale(ring, c));
        }
        out
    }

    /// Coaction of one basis vector as a cleaned-up term list.
    fn coact_column(&self, j: usize) -> &[CoactTerm<R>] {
        &self.coaction[j]
    }

    /// The left dual module on the dual basis: `h` acts through the
    /// antipode, `H` coacts through the inverse antipode.
    pub fn dual(&self) -> Self {
        let ring = self.ring.clone();
        let dim = self.dim;
        // S(g^(1/2)) = g^(-1/2): inverse diagonal.
        let g_half: Vec<R::Elem> = self
            .g_half
            .iter()
            .map(|w| ring.inv(w).expect("diagonal weight must be a unit"))
            .collect();
        // S(x) = -g^-1 x, and the dual action is f -> f(S(x) . ):
        // transpose of the matrix of S(x).
        let s_x = {
            let mut g_inv = Matrix::zero(&ring, dim, dim);
            for i in 0..dim {
                let w2 = ring.mul(&self.g_half[i], &self.g_half[i]);
                g_inv.set(i, i, ring.inv(&w2).expect("diagonal weight must be a unit"));
            }
            g_inv.mul(&ring, &self.x_mat)
        };
        let x_mat = Matrix::from_fn(&ring, dim, dim, |r, c| ring.neg(s_x.get(c, r)));
        // delta(f_i) = sum_j S^-1(h_ij) (x) f_j for delta(v_j) = sum_i h_ij (x) v_i.
        let mut coaction: Vec<Vec<CoactTerm<R>>> = vec![Vec::new(); dim];
        for j in 0..dim {
            for (mono, i, c) in self.coact_column(j) {
                let s = HElem::monomial(&ring, *mono, c.clone()).antipode_inv(&ring);
                for (m, sc) in &s.terms {
                    push_term(&ring, &mut coaction[*i], *m, j, sc.clone());
                }
            }
        }
        YDModule {
            ring,
            dim,
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            g_half,
            x_mat,
            coaction,
        }
    }

    /// Tensor product module on the basis `e_i (x) e'_j` in row-major order
    /// (matching the Kronecker product convention).
    pub fn tensor(&self, other: &Self) -> Self {
        let ring = self.ring.clone();
        let (dv, dw) = (self.dim, other.dim);
        let dim = dv * dw;
        let mut labels = Vec::with_capacity(dim);
        let mut g_half = Vec::with_capacity(dim);
        for i in 0..dv {
            for j in 0..dw {
                labels.push(format!("{}(x){}", self.labels[i], other.labels[j]));
                g_half.push(ring.mul(&self.g_half[i], &other.g_half[j]));
            }
        }
        // Delta(x) = g (x) x + x (x) 1.
        let g_v = {
            let mut m = Matrix::zero(&ring, dv, dv);
            for i in 0..dv {
                m.set(i, i, ring.mul(&self.g_half[i], &self.g_half[i]));
            }
            m
        };
        let x_mat = g_v
            .kron(&ring, &other.x_mat)
            .add(&ring, &self.x_mat.kron(&ring, &Matrix::identity(&ring, dw)));
        // delta(v (x) w) = v_(-1) w_(-1) (x) (v_0 (x) w_0).
        let mut coaction: Vec<Vec<CoactTerm<R>>> = vec![Vec::new(); dim];
        for jv in 0..dv {
            for jw in 0..dw {
                let col = &mut coaction[jv * dw + jw];
                for (m1, i1, c1) in self.coact_column(jv) {
                    let h1 = HElem::monomial(&ring, *m1, c1.clone());
                    for (m2, i2, c2) in other.coact_column(jw) {
                        let prod = h1.mul(&ring, &HElem::monomial(&ring, *m2, c2.clone()));
                        for (m, c) in &prod.terms {
                            push_term(&ring, col, *m, i1 * dw + i2, c.clone());
                        }
                    }
                }
            }
        }
        YDModule { ring, dim, labels, g_half, x_mat, coaction }
    }

    /// Runs every module, comodule and compatibility axiom over the basis.
    pub fn verify(&self) -> Report {
        let ring = &self.ring;
        let mut report = Report::new(format!("yd dim={}", self.dim));

        // Action respects the defining relations. The generator matrices
        // determine the action of every monomial, so these relations are the
        // whole module axiom.
        {
            let g = self.act_mono((0, 2));
            let x = &self.x_mat;
            let gx = g.mul(ring, x);
            let xg = x.mul(ring, &g).scale(ring, &ring.q_quarter(4));
            report.push("action respects gx = qxg", gx == xg, None);
            if let Some(m) = ring.modulus() {
                let xm = self.act_mono((m, 0));
                report.push(
                    "action respects x^m = 0",
                    xm == Matrix::zero(ring, self.dim, self.dim),
                    None,
                );
                let gm = self.act_mono((0, 2 * m as i64));
                report.push("action respects g^m = 1", gm.is_identity(ring), None);
            }
        }

        // Comodule counit law: (eps (x) id) delta = id.
        {
            let mut fail = None;
            for j in 0..self.dim {
                let mut col = vec![ring.zero(); self.dim];
                for ((xp, _), i, c) in self.coact_column(j) {
                    if *xp == 0 {
                        col[*i] = ring.add(&col[*i], c);
                    }
                }
                let ok = (0..self.dim).all(|i| {
                    if i == j {
                        col[i] == ring.one()
                    } else {
                        ring.is_zero(&col[i])
                    }
                });
                if !ok {
                    fail = Some(j);
                    break;
                }
            }
            report.push(
                "comodule counit law",
                fail.is_none(),
                fail.map(|j| self.labels[j].clone()),
            );
        }

        // Comodule coassociativity: (Delta (x) id) delta = (id (x) delta) delta.
        {
            let mut fail = None;
            for j in 0..self.dim {
                let mut lhs: BTreeMap<(Mono, Mono, usize), R::Elem> = BTreeMap::new();
                for (mono, i, c) in self.coact_column(j) {
                    let d = HElem::monomial(ring, *mono, c.clone()).coproduct(ring);
                    for ((m1, m2), dc) in &d.terms {
                        insert_acc(ring, &mut lhs, (*m1, *m2, *i), dc.clone());
                    }
                }
                let mut rhs: BTreeMap<(Mono, Mono, usize), R::Elem> = BTreeMap::new();
                for (m1, i, c) in self.coact_column(j) {
                    for (m2, r, c2) in self.coact_column(*i) {
                        insert_acc(ring, &mut rhs, (*m1, *m2, *r), ring.mul(c, c2));
                    }
                }
                if lhs != rhs {
                    fail = Some(j);
                    break;
                }
            }
            report.push(
                "comodule coassociativity",
                fail.is_none(),
                fail.map(|j| self.labels[j].clone()),
            );
        }

        // Compatibility: delta(h.v) = h1 v_(-1) S(h3) (x) h2.v0 for the
        // algebra generators (multiplicativity in h extends it to all of H).
        {
            let mut gens: Vec<(&str, HElem<R>)> = vec![
                ("x", HElem::gen_x(ring)),
                ("g^(1/2)", HElem::g_half_power(ring, 1)),
            ];
            gens.push((
                "x g^(1/2)",
                HElem::gen_x(ring).mul(ring, &HElem::g_half_power(ring, 1)),
            ));
            let mut fail = None;
            'outer: for (gname, h) in &gens {
                let act_h = self.act(h);
                let d2 = {
                    let d = h.coproduct(ring);
                    d.coproduct_left(ring)
                };
                for j in 0..self.dim {
                    // Left side: delta applied to h . v_j.
                    let mut lhs: BTreeMap<(Mono, usize), R::Elem> = BTreeMap::new();
                    for i in 0..self.dim {
                        let a = act_h.get(i, j);
                        if ring.is_zero(a) {
                            continue;
                        }
                        for (m, r, c) in self.coact_column(i) {
                            insert_acc(ring, &mut lhs, (*m, *r), ring.mul(a, c));
                        }
                    }
                    // Right side: sum over Delta^2(h) and delta(v_j).
                    let mut rhs: BTreeMap<(Mono, usize), R::Elem> = BTreeMap::new();
                    for ((h1, h2, h3), hc) in &d2.terms {
                        let s_h3 = HElem::monomial(ring, *h3, ring.one()).antipode(ring);
                        let act_h2 = self.act_mono(*h2);
                        for (m, i, c) in self.coact_column(j) {
                            let left = HElem::monomial(ring, *h1, ring.mul(hc, c))
                                .mul(ring, &HElem::monomial(ring, *m, ring.one()))
                                .mul(ring, &s_h3);
                            for r in 0..self.dim {
                                let a = act_h2.get(r, *i);
                                if ring.is_zero(a) {
                                    continue;
                                }
                                for (lm, lc) in &left.terms {
                                    insert_acc(ring, &mut rhs, (*lm, r), ring.mul(lc, a));
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        fail = Some(format!("h = {gname}, v = {}", self.labels[j]));
                        break 'outer;
                    }
                }
            }
            report.push("Yetter-Drinfeld compatibility", fail.is_none(), fail);
        }

        report
    }

    /// Pretty-prints one coaction column, mostly for debugging and witnesses.
    pub fn coaction_string(&self, j: usize) -> String {
        let parts: Vec<String> = self.coact_column(j)
            .iter()
            .map(|(m, i, c)| format!("({c:?}) {} (x) {}", mono_name(*m), self.labels[*i]))
            .collect();
        parts.join(" + ")
    }
}

fn push_term<R: ScalarRing>(
    ring: &R,
    col: &mut Vec<CoactTerm<R>>,
    mono: Mono,
    row: usize,
    coeff: R::Elem,
) {
    let Some(mono) = crate::taft::normalize_mono(ring, mono) else {
        return;
    };
    if let Some(t) = col.iter_mut().find(|(m, r, _)| *m == mono && *r == row) {
        t.2 = ring.add(&t.2, &coeff);
        if ring.is_zero(&t.2) {
            col.retain(|(m, r, c)| !(*m == mono && *r == row && ring.is_zero(c)));
        }
        return;
    }
    if !ring.is_zero(&coeff) {
        col.push((mono, row, coeff));
    }
}

fn insert_acc<K: Ord, R: ScalarRing>(
    ring: &R,
    map: &mut BTreeMap<K, R::Elem>,
    key: K,
    val: R::Elem,
) {
    if ring.is_zero(&val) {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = ring.add(e.get(), &val);
            if ring.is_zero(&v) {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

/// The structure constant `alpha_k` of `V_n`:
/// `q^(-(k+n+2)/2) (q - 1) ((k+n+2)/2)_q ((n-k)/2)_q`.
fn alpha<R: ScalarRing>(ring: &R, n: u32, k: i64) -> R::Elem {
    let n = n as i64;
    debug_assert!((k + n) % 2 == 0);
    let a = ((k + n + 2) / 2) as u32;
    let b = ((n - k) / 2) as u32;
    let q_minus_1 = ring.sub(&ring.q_quarter(4), &ring.one());
    let mut out = ring.mul(&ring.q_quarter(-2 * (k + n + 2)), &q_minus_1);
    out = ring.mul(&out, &ring.q_int(a));
    ring.mul(&out, &ring.q_int(b))
}

/// Builds the simple module `V_n` with basis `v_-n, v_-n+2, ..., v_n`:
/// `g^(1/2) . v_k = q^(-k/4) v_k`, `x . v_k = v_(k-2)` (killing `v_-n`), and
/// `delta(v_k) = sum_i (prod_j alpha_(k+2j) / (i)!_q) x^i g^(-(k+2i)/2) (x) v_(k+2i)`.
pub fn v_n<R: ScalarRing>(ring: &R, n: u32) -> Result<YDModule<R>, Error> {
    if let Some(m) = ring.modulus() {
        if n > m - 1 {
            return Err(Error::ModuleIndexTooLarge { n, max: m - 1 });
        }
    }
    let dim = n as usize + 1;
    let k_of = |idx: usize| 2 * idx as i64 - n as i64;
    let labels: Vec<String> = (0..dim).map(|i| format!("v_{}", k_of(i))).collect();
    let g_half: Vec<R::Elem> = (0..dim).map(|i| ring.q_quarter(-k_of(i))).collect();
    let mut x_mat = Matrix::zero(ring, dim, dim);
    for j in 1..dim {
        x_mat.set(j - 1, j, ring.one());
    }
    let mut coaction: Vec<Vec<CoactTerm<R>>> = Vec::with_capacity(dim);
    for idx in 0..dim {
        let k = k_of(idx);
        let mut col = Vec::new();
        let mut num = ring.one();
        for i in 0..=(n as i64 - k) / 2 {
            if i > 0 {
                num = ring.mul(&num, &alpha(ring, n, k + 2 * (i - 1)));
            }
            let coeff = ring
                .div_exact(&num, &ring.q_factorial(i as u32))
                .ok_or_else(|| {
                    Error::InexactDivision(format!("coaction coefficient of v_{k} in V_{n}"))
                })?;
            push_term(
                ring,
                &mut col,
                (i as u32, -(k + 2 * i)),
                (idx as i64 + i) as usize,
                coeff,
            );
        }
        coaction.push(col);
    }
    Ok(YDModule { ring: ring.clone(), dim, labels, g_half, x_mat, coaction })
}

/// Convenience: `delta(x)` re-exported for tests that need the coproduct.
pub fn coproduct_x<R: ScalarRing>(ring: &R) -> HTensor2<R> {
    default_delta_x(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CycloRing, LaurentRing, LaurentScalar};

    fn q(k: i64, d: i64) -> LaurentScalar {
        LaurentScalar::q_pow(k, d).unwrap()
    }

    #[test]
    fn v1_structure() {
        let r = LaurentRing;
        let v1 = v_n(&r, 1).unwrap();
        assert_eq!(v1.dim, 2);
        assert_eq!(v1.labels, vec!["v_-1", "v_1"]);
        // g^(1/2) weights q^(1/4), q^(-1/4).
        assert_eq!(v1.g_half, vec![q(1, 4), q(-1, 4)]);
        // x sends v_1 to v_-1 and kills v_-1.
        assert_eq!(*v1.x_mat.get(0, 1), LaurentScalar::one());
        assert!(v1.x_mat.get(0, 0).is_zero());
        // delta(v_-1) = g^(1/2) (x) v_-1 + (1 - q^-1) x g^(-1/2) (x) v_1,
        // delta(v_1) = g^(-1/2) (x) v_1.
        let one_minus_qinv = LaurentScalar::one().sub(&q(-1, 1));
        assert_eq!(
            v1.coaction[0],
            vec![((0, 1), 0, LaurentScalar::one()), ((1, -1), 1, one_minus_qinv)]
        );
        assert_eq!(v1.coaction[1], vec![((0, -1), 1, LaurentScalar::one())]);
    }

    #[test]
    fn vn_verify_generic() {
        let r = LaurentRing;
        for n in 0..=3u32 {
            let m = v_n(&r, n).unwrap();
            let rep = m.verify();
            assert!(rep.all_pass(), "V_{n}: {rep}");
        }
    }

    #[test]
    fn vn_verify_specialized() {
        for (m, nmax) in [(3u32, 2u32), (5, 3)] {
            let ring = CycloRing::new(m).unwrap();
            for n in 0..=nmax {
                let module = v_n(&ring, n).unwrap();
                let rep = module.verify();
                assert!(rep.all_pass(), "m={m} V_{n}: {rep}");
            }
            assert!(matches!(
                v_n(&ring, m),
                Err(Error::ModuleIndexTooLarge { .. })
            ));
        }
    }

    #[test]
    fn dual_and_tensor_verify() {
        let r = LaurentRing;
        let v1 = v_n(&r, 1).unwrap();
        let dual = v1.dual();
        assert!(dual.verify().all_pass(), "{}", dual.verify());
        // Dual weights are the inverses.
        assert_eq!(dual.g_half, vec![q(-1, 4), q(1, 4)]);
        let t = v1.tensor(&v1);
        assert_eq!(t.dim, 4);
        assert!(t.verify().all_pass(), "{}", t.verify());
        let td = v1.tensor(&dual);
        assert!(td.verify().all_pass(), "{}", td.verify());
        let v2 = v_n(&r, 2).unwrap();
        assert!(v2.dual().verify().all_pass());
    }

    #[test]
    fn corrupted_coaction_fails_verification() {
        let r = LaurentRing;
        let mut v1 = v_n(&r, 1).unwrap();
        // Scale one coaction coefficient: coassociativity or compatibility
        // must notice.
        v1.coaction[0][1].2 = v1.coaction[0][1].2.mul(&q(1, 1));
        assert!(!v1.verify().all_pass());
    }

    #[test]
    fn corrupted_action_fails_verification() {
        let r = LaurentRing;
        let mut v1 = v_n(&r, 1).unwrap();
        v1.g_half[1] = q(3, 4);
        assert!(!v1.verify().all_pass());
    }

    #[test]
    fn tensor_x_action_uses_coproduct() {
        // x . (v_1 (x) v_1) = g v_1 (x) x v_1 + x v_1 (x) v_1
        //                   = q^(-1/2) v_1 (x) v_-1 + v_-1 (x) v_1.
        let r = LaurentRing;
        let v1 = v_n(&r, 1).unwrap();
        let t = v1.tensor(&v1);
        let col = 3; // v_1 (x) v_1
        assert_eq!(*t.x_mat.get(3, col), LaurentScalar::zero());
        assert_eq!(*t.x_mat.get(2, col), q(-1, 2)); // v_1 (x) v_-1
        assert_eq!(*t.x_mat.get(1, col), LaurentScalar::one()); // v_-1 (x) v_1
    }
}
