//! Braid words: parsing, normal forms, Markov moves and the braid-group
//! representation on tensor powers of a module.
//!
//! Two input grammars are accepted:
//!  - generator form: `B3: s1^-1 s2 s1^-1` (strand count up front, tokens
//!    `s<i>` with optional integer exponents), which is also the canonical
//!    output form;
//!  - index list: `[1, -2, 1]`, where the sign selects the crossing and the
//!    strand count is inferred as `1 + max|i|` unless given explicitly.

use std::fmt;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::ribbon::RibbonData;
use crate::scalars::ScalarRing;

/// A word in the braid group `B_strands`; letter `j > 0` is the positive
/// generator `s_j` (1-based), `-j` its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, Error> {
        if strands == 0 {
            return Err(Error::Parse("strand count must be at least 1".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The underlying permutation: `perm[p]` is where the strand entering at
    /// position `p` exits.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let j = l.unsigned_abs() as usize - 1;
            perm.swap(j, j + 1);
        }
        // perm, as built, tracks positions: invert the construction so the
        // result maps entry position to exit position.
        let mut out = vec![0; self.strands];
        for (exit, &entry) in perm.iter().enumerate() {
            out[entry] = exit;
        }
        out
    }

    /// Number of link components of the braid closure (cycles of the
    /// permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        count
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Markov conjugation: `w -> a w a^-1`, which fixes the closure.
    pub fn conjugate(&self, a: &[i32]) -> Result<Self, Error> {
        let mut letters: Vec<i32> = a.to_vec();
        letters.extend_from_slice(&self.letters);
        letters.extend(a.iter().rev().map(|&l| -l));
        Self::new(self.strands, letters)
    }

    /// Markov stabilization: add a strand and one crossing with it.
    pub fn stabilize(&self, sign: i32) -> Self {
        let mut letters = self.letters.clone();
        letters.push(sign.signum() * self.strands as i32);
        BraidWord { strands: self.strands + 1, letters }
    }

    /// The representation `rho(w)` on `V^((x)strands)`: the first letter of
    /// the word acts first. Refuses to materialize matrices larger than
    /// `cap x cap`.
    pub fn representation<R: ScalarRing>(
        &self,
        rib: &RibbonData<R>,
        cap: u64,
    ) -> Result<Matrix<R::Elem>, Error> {
        let ring = &rib.ring;
        let d = rib.dim();
        let mut total: u64 = 1;
        for _ in 0..self.strands {
            total = total.saturating_mul(d as u64);
            if total > cap {
                return Err(Error::DimensionCap { dim: d, strands: self.strands, cap });
            }
        }
        let dim = total as usize;
        let mut m = Matrix::identity(ring, dim);
        for &l in &self.letters {
            let gate = if l > 0 { &rib.c.mat } else { &rib.c_inv.mat };
            let site = l.unsigned_abs() as usize - 1;
            m = apply_gate_left(ring, &m, gate, d, self.strands, site);
        }
        Ok(m)
    }
}

/// Left-multiplies `m` by `id^((x)site) (x) gate (x) id^(rest)`, where `gate`
/// acts on two adjacent tensor factors of local dimension `d`.
fn apply_gate_left<R: ScalarRing>(
    ring: &R,
    m: &Matrix<R::Elem>,
    gate: &Matrix<R::Elem>,
    d: usize,
    strands: usize,
    site: usize,
) -> Matrix<R::Elem> {
    let dim = m.rows;
    let suffix = d.pow((strands - site - 2) as u32);
    let prefix = dim / (suffix * d * d);
    let mut out = Matrix::zero(ring, dim, dim);
    for col in 0..dim {
        for p in 0..prefix {
            for t in 0..suffix {
                let base = p * d * d * suffix + t;
                for a_out in 0..d {
                    for b_out in 0..d {
                        let mut acc = ring.zero();
                        for a_in in 0..d {
                            for b_in in 0..d {
                                let g = gate.get(a_out * d + b_out, a_in * d + b_in);
                                if ring.is_zero(g) {
                                    continue;
                                }
                                let v = m.get(base + (a_in * d + b_in) * suffix, col);
                                if ring.is_zero(v) {
                                    continue;
                                }
                                acc = ring.add(&acc, &ring.mul(g, v));
                            }
                        }
                        if !ring.is_zero(&acc) {
                            out.set(base + (a_out * d + b_out) * suffix, col, acc);
                        }
                    }
                }
            }
        }
    }
    out
}

impl fmt::Display for BraidWord {
    /// Canonical generator form with runs collapsed, e.g. `B3: s1^-1 s2 s1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        if self.letters.is_empty() {
            return write!(f, " e");
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let exp = run as i64 * l.signum() as i64;
            if exp == 1 {
                write!(f, " s{}", l.abs())?;
            } else {
                write!(f, " s{}^{}", l.abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Parses either grammar; `strands` overrides (grammar B) or must agree with
/// (grammar A) the declared strand count.
pub fn parse(input: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty braid input".into()));
    }
    if s.starts_with('[') {
        parse_index_list(s, strands)
    } else if s.starts_with('B') || s.starts_with('b') {
        let word = parse_generators(s)?;
        if let Some(n) = strands {
            if n != word.strands {
                return Err(Error::Parse(format!(
                    "strand count {n} conflicts with declared B{}",
                    word.strands
                )));
            }
        }
        Ok(word)
    } else {
        Err(Error::Parse(format!(
            "expected 'B<n>: s<i>...' or '[i, j, ...]', got {s:?}"
        )))
    }
}

fn parse_generators(s: &str) -> Result<BraidWord, Error> {
    let rest = &s[1..];
    let colon = rest
        .find(':')
        .ok_or_else(|| Error::Parse("missing ':' after strand count".into()))?;
    let strands: usize = rest[..colon]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad strand count {:?}", &rest[..colon])))?;
    let mut letters = Vec::new();
    for tok in rest[colon + 1..].split_whitespace() {
        if tok == "e" {
            continue; // the empty word
        }
        let body = tok
            .strip_prefix('s')
            .ok_or_else(|| Error::Parse(format!("expected generator token, got {tok:?}")))?;
        let (idx_str, exp) = match body.find('^') {
            Some(p) => {
                let e: i64 = body[p + 1..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                (&body[..p], e)
            }
            None => (body, 1),
        };
        let idx: i32 = idx_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator index in {tok:?}")))?;
        if idx <= 0 {
            return Err(Error::Parse(format!("generator index must be positive in {tok:?}")));
        }
        let letter = if exp >= 0 { idx } else { -idx };
        for _ in 0..exp.unsigned_abs() {
            letters.push(letter);
        }
    }
    BraidWord::new(strands, letters)
}

fn parse_index_list(s: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("index list must be bracketed".into()))?;
    let mut letters = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let l: i32 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad crossing index {tok:?}")))?;
        if l == 0 {
            return Err(Error::Parse("crossing index 0 is not a generator".into()));
        }
        letters.push(l);
    }
    let needed = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
    let strands = match strands {
        Some(n) => n,
        None => needed.max(2),
    };
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::LaurentRing;

    #[test]
    fn parse_generator_grammar() {
        let w = parse("B3: s1^-1 s2 s1^-1", None).unwrap();
        assert_eq!(w.strands, 3);
        assert_eq!(w.letters, vec![-1, 2, -1]);
        let w = parse("B2: s1^3", None).unwrap();
        assert_eq!(w.letters, vec![1, 1, 1]);
        let w = parse("B4: e", None).unwrap();
        assert!(w.letters.is_empty());
        assert!(parse("B3: s3", None).is_err());
        assert!(parse("B3: t1", None).is_err());
        assert!(parse("B3 s1", None).is_err());
        assert!(parse("B3: s1", Some(4)).is_err());
    }

    #[test]
    fn parse_index_grammar() {
        let w = parse("[1, -2, 1]", None).unwrap();
        assert_eq!(w.strands, 3);
        assert_eq!(w.letters, vec![1, -2, 1]);
        let w = parse("[1,1,1]", None).unwrap();
        assert_eq!(w.strands, 2);
        let w = parse("[1]", Some(5)).unwrap();
        assert_eq!(w.strands, 5);
        assert!(parse("[0]", None).is_err());
        assert!(parse("[3]", Some(2)).is_err());
        assert!(parse("[]", None).unwrap().letters.is_empty());
    }

    #[test]
    fn display_canonical() {
        let w = parse("[1, 1, -2, 1, 1, 1]", None).unwrap();
        assert_eq!(w.to_string(), "B3: s1^2 s2^-1 s1^3");
        let e = BraidWord::new(4, vec![]).unwrap();
        assert_eq!(e.to_string(), "B4: e");
        // Round-trip.
        assert_eq!(parse(&w.to_string(), None).unwrap(), w);
    }

    #[test]
    fn writhe_permutation_components() {
        let trefoil = parse("B2: s1^3", None).unwrap();
        assert_eq!(trefoil.writhe(), 3);
        assert_eq!(trefoil.closure_components(), 1);
        let hopf = parse("B2: s1^2", None).unwrap();
        assert_eq!(hopf.closure_components(), 2);
        let id3 = parse("B3: e", None).unwrap();
        assert_eq!(id3.closure_components(), 3);
        let fig8 = parse("B3: s1 s2^-1 s1 s2^-1", None).unwrap();
        assert_eq!(fig8.writhe(), 0);
        assert_eq!(fig8.closure_components(), 1);
    }

    #[test]
    fn free_reduction() {
        let w = parse("[1, -2, 2, -1, 3]", None).unwrap();
        assert_eq!(w.free_reduce().letters, vec![3]);
        let w = parse("[1, 2, -2, -1]", None).unwrap();
        assert!(w.free_reduce().letters.is_empty());
    }

    #[test]
    fn markov_moves_shape() {
        let w = parse("B2: s1^3", None).unwrap();
        let c = w.conjugate(&[1, -1]).unwrap();
        assert_eq!(c.free_reduce().letters, w.letters);
        let s = w.stabilize(-1);
        assert_eq!(s.strands, 3);
        assert_eq!(s.letters, vec![1, 1, 1, -2]);
    }

    #[test]
    fn representation_satisfies_braid_relations() {
        let r = LaurentRing;
        let rib = crate::ribbon::RibbonData::new(&r, 1).unwrap();
        let cap = 1 << 20;
        let lhs = parse("B3: s1 s2 s1", None).unwrap().representation(&rib, cap).unwrap();
        let rhs = parse("B3: s2 s1 s2", None).unwrap().representation(&rib, cap).unwrap();
        assert_eq!(lhs, rhs);
        // Far generators commute.
        let lhs = parse("B4: s1 s3", None).unwrap().representation(&rib, cap).unwrap();
        let rhs = parse("B4: s3 s1", None).unwrap().representation(&rib, cap).unwrap();
        assert_eq!(lhs, rhs);
        // Inverses cancel.
        let m = parse("B3: s2 s1^-1 s1 s2^-1", None)
            .unwrap()
            .representation(&rib, cap)
            .unwrap();
        assert!(m.is_identity(&r));
    }

    #[test]
    fn representation_matches_kronecker_build() {
        // The gate-application path must agree with naive Kronecker products.
        let r = LaurentRing;
        let rib = crate::ribbon::RibbonData::new(&r, 1).unwrap();
        let w = parse("B3: s1^-1 s2 s1^-1", None).unwrap();
        let m = w.representation(&rib, 1 << 20).unwrap();
        let id2 = Matrix::identity(&r, 2);
        let g1 = rib.c_inv.mat.kron(&r, &id2);
        let g2 = id2.kron(&r, &rib.c.mat);
        // First letter acts first.
        let naive = g1.mul(&r, &g2).mul(&r, &g1);
        assert_eq!(m, naive);
    }

    #[test]
    fn dimension_cap_enforced() {
        let r = LaurentRing;
        let rib = crate::ribbon::RibbonData::new(&r, 1).unwrap();
        let w = BraidWord::new(30, vec![1]).unwrap();
        assert!(matches!(
            w.representation(&rib, 1 << 20),
            Err(Error::DimensionCap { .. })
        ));
    }
}
