//! Built-in verification suites: every fast routine against its slow oracle,
//! plus measured transform costs next to their closed forms.

use std::fmt::Write as _;

use novelpoly::derivative::{derivative_direct, derivative_fast_counted};
use novelpoly::oracles::locator_direct;
use novelpoly::{closed_form_counts, locator_values, Basis, CoeffVec, Elem, ErasurePattern, Field, ReedSolomon};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            let _ = writeln!(out, "[{}] {}", if suite.passed { "PASS" } else { "FAIL" }, suite.name);
            for line in &suite.lines {
                let _ = writeln!(out, "    {line}");
            }
        }
        let _ = writeln!(out, "{}", if self.passed() { "all suites passed" } else { "FAILURES" });
        out
    }
}

fn random_elems(rng: &mut ChaCha8Rng, len: usize, field_size: usize) -> Vec<Elem> {
    (0..len).map(|_| Elem(rng.gen_range(0..field_size) as u16)).collect()
}

fn transform_vs_naive(rng: &mut ChaCha8Rng, bt: &Basis) -> SuiteResult {
    let mut passed = true;
    let mut cases = 0;
    for lg in 0..=8 {
        let h = 1 << lg;
        for _ in 0..8 {
            let d = random_elems(rng, h, 256);
            let l = rng.gen_range(0..256);
            let out = bt.forward(&CoeffVec(d.clone()), l).expect("valid size");
            passed &= out.data.iter().enumerate().all(|(c, &v)| v == bt.eval_poly_naive(&d, Elem((c ^ l) as u16)));
            passed &= bt.inverse(&out).expect("valid size").0 == d;
            cases += 1;
        }
    }
    SuiteResult { name: "transform vs naive evaluation", passed, lines: vec![format!("{cases} cases, h = 1..256")] }
}

fn op_counts(rng: &mut ChaCha8Rng) -> SuiteResult {
    let bt = Basis::new(Field::gf65536(), 4096).expect("valid tables");
    let mut passed = true;
    let mut lines = Vec::new();
    for lg in 1..=12 {
        let h = 1usize << lg;
        let d = CoeffVec(random_elems(rng, h, 1 << 16));
        for (label, shift, zero) in [("l≠0", h, false), ("l=0", 0, true)] {
            let (_, got) = bt.forward_counted(&d, shift).expect("valid size");
            let want = closed_form_counts(h, zero);
            passed &= got == want;
            lines.push(format!("h={h} {label}: adds {}/{} muls {}/{}", got.adds, want.adds, got.muls, want.muls));
        }
    }
    SuiteResult { name: "transform operation counts", passed, lines }
}

fn derivative_methods(rng: &mut ChaCha8Rng, bt: &Basis) -> SuiteResult {
    let mut passed = true;
    let mut worst = 0.0f64;
    for lg in 1..=8 {
        let h = 1 << lg;
        for _ in 0..8 {
            let d = random_elems(rng, h, 256);
            let (fast, ops) = derivative_fast_counted(bt, &d);
            passed &= fast == derivative_direct(bt, &d);
            passed &= ops.muls <= 2 * h as u64;
            worst = worst.max(ops.muls as f64 / h as f64);
        }
    }
    SuiteResult {
        name: "derivative fast vs direct",
        passed,
        lines: vec![format!("max multiplications per coefficient {worst:.2} (budget 2)")],
    }
}

fn locator(rng: &mut ChaCha8Rng, field: &Field) -> SuiteResult {
    let mut passed = true;
    let mut positions: Vec<usize> = (0..256).collect();
    for size in [1, 2, 64, 128, 255] {
        positions.shuffle(rng);
        let e = &positions[..size];
        let loc = locator_values(field, e).expect("valid erasures");
        passed &= (0..256).all(|j| loc.values()[j] == locator_direct(field, e, j));
    }
    SuiteResult { name: "erasure locator vs direct product", passed, lines: vec!["|E| = 1, 2, 64, 128, 255".into()] }
}

fn rs_round_trips(rng: &mut ChaCha8Rng, field: &Field) -> SuiteResult {
    let mut passed = true;
    let mut lines = Vec::new();
    for k in [2usize, 16, 64, 128] {
        let rs = ReedSolomon::new(field.clone(), k).expect("valid code");
        let mut ok = 0;
        for _ in 0..20 {
            let message = random_elems(rng, k, 256);
            let cw = rs.encode(&message).expect("valid message");
            let mut positions: Vec<usize> = (0..256).collect();
            positions.shuffle(rng);
            let pattern = ErasurePattern::from_positions(256, &positions[..256 - k]).expect("distinct");
            if rs.decode(&cw, &pattern).ok() == Some(message) {
                ok += 1;
            }
        }
        passed &= ok == 20;
        lines.push(format!("(256,{k}): {ok}/20 recovered"));
    }
    SuiteResult { name: "Reed-Solomon round trips", passed, lines }
}

pub fn run(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = Field::gf256();
    let bt = Basis::new(field.clone(), 256).expect("valid tables");
    Report {
        suites: vec![
            transform_vs_naive(&mut rng, &bt),
            op_counts(&mut rng),
            derivative_methods(&mut rng, &bt),
            locator(&mut rng, &field),
            rs_round_trips(&mut rng, &field),
        ],
    }
}
