//! End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`, or on
//! failure) and has a wall-clock budget.

use std::time::{Duration, Instant};

use taftknot::braid::{parse, BraidWord};
use taftknot::invariant::{
    b2_closed_form, evaluate_closure, jones_via_v1, kauffman_jones, Mode,
    DEFAULT_CROSSING_CAP, DEFAULT_DIM_CAP, JONES_SUBSTITUTION_SIGN,
};
use taftknot::ribbon::{braiding, RibbonData};
use taftknot::scalars::{LaurentRing, LaurentScalar, ScalarRing};
use taftknot::taft::TaftAlgebra;
use taftknot::ydmod::v_n;
use taftknot::Matrix;

fn q(k: i64, d: i64) -> LaurentScalar {
    LaurentScalar::q_pow(k, d).unwrap()
}

struct Criterion {
    name: &'static str,
    pass: bool,
    elapsed: Duration,
    budget: Duration,
    note: Option<String>,
}

fn run(
    name: &'static str,
    budget_secs: u64,
    f: impl FnOnce() -> (bool, Option<String>),
) -> Criterion {
    let start = Instant::now();
    let (pass, note) = f();
    Criterion { name, pass, elapsed: start.elapsed(), budget: Duration::from_secs(budget_secs), note }
}

/// The balanced V_1 value of the closure of s1^-3 (left trefoil).
fn left_trefoil_balanced() -> LaurentScalar {
    q(9, 2).neg().add(&q(5, 2)).add(&q(3, 2)).add(&q(1, 2))
}

fn balanced_v1(input: &str) -> LaurentScalar {
    let rib = RibbonData::new(&LaurentRing, 1).unwrap();
    let w = parse(input, None).unwrap();
    evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP).unwrap()
}

fn criterion_1() -> Criterion {
    run("1: balanced V_1 of s1^-3 (left trefoil)", 1, || {
        let got = balanced_v1("B2: s1^-3");
        let want = left_trefoil_balanced();
        (got == want, Some(format!("value = {got}")))
    })
}

fn criterion_2() -> Criterion {
    run("2: right trefoil is the exact mirror", 1, || {
        let got = balanced_v1("B2: s1^3");
        let want = left_trefoil_balanced().mirror();
        // Reported, not asserted: a quoted right-trefoil value with
        // positive half-integer exponents equals the LEFT-handed value
        // here; mirror symmetry forces the negated exponents instead.
        let quoted = left_trefoil_balanced();
        let note = format!(
            "value = {got}; differs from the sometimes-quoted {quoted} \
             (that form is the left-handed value; exponent signs flipped)"
        );
        (got == want, Some(note))
    })
}

fn criterion_3() -> Criterion {
    run("3: Hopf axioms exact for m in {3, 5, 7}", 10, || {
        let mut pass = true;
        let mut notes = Vec::new();
        for m in [3u32, 5, 7] {
            let report = TaftAlgebra::new(m).unwrap().verify_hopf();
            if !report.all_pass() {
                pass = false;
                notes.push(format!("m = {m} failed:\n{report}"));
            }
        }
        (pass, if notes.is_empty() { None } else { Some(notes.join("; ")) })
    })
}

fn criterion_4() -> Criterion {
    run("4: module axioms for all (m, n), duals, V_1 (x) V_1", 30, || {
        let mut pass = true;
        let mut notes = Vec::new();
        for m in [3u32, 5] {
            for n in 0..m {
                match taftknot::cli::verify_suite("yd", m, n, 0, 0) {
                    Ok(reports) => {
                        for r in reports {
                            if !r.all_pass() {
                                pass = false;
                                notes.push(format!("m={m} n={n}:\n{r}"));
                            }
                        }
                    }
                    Err(e) => {
                        pass = false;
                        notes.push(format!("m={m} n={n}: {e}"));
                    }
                }
            }
        }
        (pass, if notes.is_empty() { None } else { Some(notes.join("; ")) })
    })
}

/// Checks c23 c12 c13 ... style Yang-Baxter directly on raw matrices:
/// (c_{V,W} (x) 1_U)(1_V (x) c_{U,W})(c_{U,V} (x) 1_W)
///   = (1_W (x) c_{U,V})(c_{U,W} (x) 1_V)(1_U (x) c_{V,W}).
fn mixed_braid_eq(
    du: usize,
    dv: usize,
    dw: usize,
    c_uv: &Matrix<LaurentScalar>,
    c_uw: &Matrix<LaurentScalar>,
    c_vw: &Matrix<LaurentScalar>,
) -> bool {
    let r = &LaurentRing;
    let idu = Matrix::identity(r, du);
    let idv = Matrix::identity(r, dv);
    let idw = Matrix::identity(r, dw);
    let lhs = c_vw
        .kron(r, &idu)
        .mul(r, &idv.kron(r, c_uw))
        .mul(r, &c_uv.kron(r, &idw));
    let rhs = idw
        .kron(r, c_uv)
        .mul(r, &c_uw.kron(r, &idv))
        .mul(r, &idu.kron(r, c_vw));
    lhs == rhs
}

fn criterion_5() -> Criterion {
    run("5: braid equation for V_1..V_3 and the mixed triple", 30, || {
        let r = &LaurentRing;
        let mut pass = true;
        let mut notes = Vec::new();
        for n in 1..=3u32 {
            let m = v_n(r, n).unwrap();
            let c = braiding(&m, &m);
            if !mixed_braid_eq(m.dim, m.dim, m.dim, &c, &c, &c) {
                pass = false;
                notes.push(format!("braid equation failed for n = {n}"));
            }
        }
        let v1 = v_n(r, 1).unwrap();
        let v2 = v_n(r, 2).unwrap();
        let c11 = braiding(&v1, &v1);
        let c12 = braiding(&v1, &v2);
        if !mixed_braid_eq(2, 2, 3, &c11, &c12, &c12) {
            pass = false;
            notes.push("mixed triple (V_1, V_1, V_2) failed".into());
        }
        // The V_1 braiding matrix, columns indexed by input basis vectors
        // v_-1(x)v_-1, v_-1(x)v_1, v_1(x)v_-1, v_1(x)v_1 (this column/row
        // orientation is the recorded convention).
        let z = LaurentScalar::zero();
        let expect = [
            [q(1, 4), z.clone(), z.clone(), z.clone()],
            [z.clone(), q(1, 4).sub(&q(-3, 4)), q(-1, 4), z.clone()],
            [z.clone(), q(-1, 4), z.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone(), q(1, 4)],
        ];
        for i in 0..4 {
            for j in 0..4 {
                if c11.get(i, j) != &expect[i][j] {
                    pass = false;
                    notes.push(format!("V_1 braiding entry ({i},{j}) mismatch"));
                }
            }
        }
        (pass, if notes.is_empty() { None } else { Some(notes.join("; ")) })
    })
}

fn criterion_6() -> Criterion {
    run("6: twists, zig-zags, single-strand closures (n, m <= 4)", 30, || {
        let r = &LaurentRing;
        let mut pass = true;
        let mut notes = Vec::new();
        for n in 1..=4u32 {
            let rib = RibbonData::new(r, n).unwrap();
            if rib.twist != r.q_quarter((n * n + 2 * n) as i64) {
                pass = false;
                notes.push(format!("theta_{n} != q^((n^2+2n)/4)"));
            }
            // verify() covers the recurrence theta_{a+b} = q^(ab/2)
            // theta_a theta_b for a, b <= 4, both zig-zag pairs, and
            // tr_2(c^{+-1}(1 (x) D)) = theta^{+-1} id.
            let report = rib.verify();
            if !report.all_pass() {
                pass = false;
                notes.push(format!("ribbon checks failed for n = {n}:\n{report}"));
            }
        }
        (pass, if notes.is_empty() { None } else { Some(notes.join("; ")) })
    })
}

fn criterion_7() -> Criterion {
    run("7: 100 conjugations and 100 stabilizations", 60, || {
        match taftknot::cli::verify_suite("markov", 3, 1, 0xBAD5EED, 100) {
            Ok(reports) => {
                let pass = reports.iter().all(|r| r.all_pass());
                let note = if pass {
                    Some("seed 0xBAD5EED, 100 cases of each move".to_string())
                } else {
                    Some(reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"))
                };
                (pass, note)
            }
            Err(e) => (false, Some(e.to_string())),
        }
    })
}

fn all_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let gens: Vec<i32> = (1..strands as i32)
        .flat_map(|j| [j, -j])
        .collect();
    let mut out = vec![BraidWord::new(strands, vec![]).unwrap()];
    let mut layer: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &g in &gens {
                let mut v = w.clone();
                v.push(g);
                out.push(BraidWord::new(strands, v.clone()).unwrap());
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

fn criterion_8() -> Criterion {
    run("8: every knot closure (<= 6 letters, B_2 and B_3) vs oracle", 120, || {
        let rib = RibbonData::new(&LaurentRing, 1).unwrap();
        let mut pass = true;
        let mut note = None;
        let mut checked = 0usize;
        for strands in [2usize, 3] {
            for w in all_words(strands, 6) {
                if w.closure_components() != 1 {
                    continue;
                }
                checked += 1;
                let reduced =
                    evaluate_closure(&rib, &w, Mode::Reduced, DEFAULT_DIM_CAP).unwrap();
                let engine = reduced.substitute_sign(JONES_SUBSTITUTION_SIGN);
                let oracle = kauffman_jones(&w, DEFAULT_CROSSING_CAP).unwrap();
                if engine != oracle {
                    pass = false;
                    note = Some(format!("mismatch at {w}: {engine} vs {oracle}"));
                    break;
                }
            }
        }
        // Pin the figure-eight knot: t^2 - t + 1 - t^-1 + t^-2.
        let fig8 = parse("B3: s1 s2^-1 s1 s2^-1", None).unwrap();
        let want = LaurentScalar::from_pairs([
            (8i64, 1i64.into()),
            (4, (-1i64).into()),
            (0, 1i64.into()),
            (-4, (-1i64).into()),
            (-8, 1i64.into()),
        ]);
        if jones_via_v1(&fig8, DEFAULT_DIM_CAP).unwrap() != want {
            pass = false;
            note = Some("figure-eight value mismatch".into());
        }
        if note.is_none() {
            note = Some(format!("{checked} single-component closures checked"));
        }
        (pass, note)
    })
}

fn criterion_9() -> Criterion {
    run("9: two-strand closures equal the cup/cap composition", 30, || {
        let rib = RibbonData::new(&LaurentRing, 1).unwrap();
        let r = &LaurentRing;
        let mut pass = true;
        let mut note = Some(
            "twist correction uses the strand-module twist theta_1 = q^(3/4)".to_string(),
        );
        for k in -7i64..=7 {
            let letters: Vec<i32> =
                (0..k.unsigned_abs()).map(|_| k.signum() as i32).collect();
            let w = BraidWord::new(2, letters).unwrap();
            let via_trace =
                evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
            // theta^-k (e (x) e^-)(1 (x) c^k (x) 1)(b^- (x) b).
            let mut twist_pow = r.one();
            let base = if k >= 0 { rib.twist_inv.clone() } else { rib.twist.clone() };
            for _ in 0..k.unsigned_abs() {
                twist_pow = r.mul(&twist_pow, &base);
            }
            let via_comp = r.mul(&twist_pow, &b2_closed_form(&rib, k));
            if via_trace != via_comp {
                pass = false;
                note = Some(format!("mismatch at k = {k}"));
                break;
            }
        }
        (pass, note)
    })
}

fn criterion_10() -> Criterion {
    run("10: unknot normalizations", 1, || {
        let rib = RibbonData::new(&LaurentRing, 1).unwrap();
        let w = BraidWord::new(1, vec![]).unwrap();
        let reduced = evaluate_closure(&rib, &w, Mode::Reduced, DEFAULT_DIM_CAP).unwrap();
        let balanced = evaluate_closure(&rib, &w, Mode::Balanced, DEFAULT_DIM_CAP).unwrap();
        let pass = reduced.is_one() && balanced == q(1, 2).add(&q(-1, 2));
        (pass, Some(format!("reduced = {reduced}, balanced = {balanced}")))
    })
}

#[test]
fn acceptance() {
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    let mut all = true;
    for c in &criteria {
        let in_budget = c.elapsed <= c.budget;
        let status = if c.pass && in_budget { "PASS" } else { "FAIL" };
        let mut line = format!(
            "[{status}] criterion {} ({:.2}s / {}s budget)",
            c.name,
            c.elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if let Some(n) = &c.note {
            line.push_str(&format!(" — {n}"));
        }
        println!("{line}");
        all &= c.pass && in_budget;
    }
    assert!(all, "at least one acceptance criterion failed");
}
