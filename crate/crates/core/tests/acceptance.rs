//! Acceptance gate. Runs every criterion at its pinned tolerance, prints one
//! PASS/FAIL line per criterion, and exits nonzero if any fails.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;
use qudit_braid::braid::{
    braid_matrix, hamiltonian_from_braid, m_matrix, verify_braid_relation, verify_m_algebra,
};
use qudit_braid::entangle::{
    ghz_by_braid, ghz_closed_form, phase_removal_unitary, q_measure, q_measure_ghz_closed_form,
    GhzLabel,
};
use qudit_braid::qpa::{verify_qpa, RootsOfUnity};
use qudit_braid::tensor::{expm_i, matrix_residual, ComplexMatrix, QuditShape, StateVector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn shape(d: usize, n: usize) -> QuditShape {
    QuditShape::new(d, n).unwrap()
}

fn within(label: &str, residual: f64, tol: f64) -> Result<f64, String> {
    if residual <= tol {
        Ok(residual)
    } else {
        Err(format!("{label}: residual {residual:e} > {tol:e}"))
    }
}

fn c1_qpa_relations() -> Outcome {
    const TOL: f64 = 1e-10;
    let names = ["XZ - qZX", "X^d - I", "Z^d - I", "X - F'ZF"];
    let mut worst: f64 = 0.0;
    for d in 2..=8 {
        let report = verify_qpa(d, TOL).map_err(|e| e.to_string())?;
        for name in names {
            let check = report.get(name).ok_or(format!("missing check {name}"))?;
            worst = worst.max(within(&format!("d={d} {name}"), check.residual, TOL)?);
        }
    }
    Ok(format!("d=2..8, max residual {worst:.1e}"))
}

fn eight_vertex() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        &[1.0, 0.0, 0.0, -1.0],
        &[0.0, 1.0, -1.0, 0.0],
        &[0.0, 1.0, 1.0, 0.0],
        &[1.0, 0.0, 0.0, 1.0],
    ])
    .scale(Complex64::new(FRAC_1_SQRT_2, 0.0))
}

fn c2_eight_vertex() -> Outcome {
    let s = braid_matrix(&shape(2, 2)).map_err(|e| e.to_string())?;
    let r = within(
        "S(2,2)",
        matrix_residual(&s, &eight_vertex()).unwrap(),
        1e-12,
    )?;
    Ok(format!("residual {r:.1e}"))
}

fn c3_closed_forms() -> Outcome {
    const TOL: f64 = 1e-12;
    let mut worst: f64 = 0.0;
    let w = RootsOfUnity::new(3).unwrap().omega();
    for n in [2, 3] {
        let m2 = m_matrix(&shape(2, n)).unwrap();
        let id2 = ComplexMatrix::identity(m2.dim());
        let want2 = (&id2 - &m2).scale(Complex64::new(FRAC_1_SQRT_2, 0.0));
        let s2 = braid_matrix(&shape(2, n)).unwrap();
        worst = worst.max(within(
            &format!("d=2 N={n}"),
            matrix_residual(&s2, &want2).unwrap(),
            TOL,
        )?);

        let m3 = m_matrix(&shape(3, n)).unwrap();
        let id3 = ComplexMatrix::identity(m3.dim());
        let sum = &(&id3 + &m3.scale(w * w)) + &(&m3 * &m3);
        let want3 = sum.scale(Complex64::new(1.0 / 3f64.sqrt(), 0.0));
        let s3 = braid_matrix(&shape(3, n)).unwrap();
        worst = worst.max(within(
            &format!("d=3 N={n}"),
            matrix_residual(&s3, &want3).unwrap(),
            TOL,
        )?);
    }
    Ok(format!("d=2,3 N=2,3, max residual {worst:.1e}"))
}

fn grid() -> Vec<QuditShape> {
    let mut out = Vec::new();
    for d in 2..=5 {
        for n in [2, 3] {
            let s = shape(d, n);
            if s.extended().dense_dim().is_ok() {
                out.push(s);
            }
        }
    }
    out
}

fn c4_m_algebra() -> Outcome {
    const TOL: f64 = 1e-10;
    let mut worst: f64 = 0.0;
    let grid = grid();
    for s in &grid {
        let report = verify_m_algebra(s, TOL).map_err(|e| e.to_string())?;
        for check in &report.checks {
            worst = worst.max(within(
                &format!("d={} N={} {}", s.d(), s.sites(), check.name),
                check.residual,
                TOL,
            )?);
        }
    }
    Ok(format!("{} shapes, max residual {worst:.1e}", grid.len()))
}

fn archive_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn c5_braid_relation() -> Outcome {
    const TOL: f64 = 1e-10;
    let mut worst: f64 = 0.0;
    for d in [2, 3] {
        for n in [2, 3] {
            let report = verify_braid_relation(&shape(d, n), TOL).map_err(|e| e.to_string())?;
            let check = report.get("S12 S23 S12 - S23 S12 S23").unwrap();
            worst = worst.max(within(&format!("d={d} N={n}"), check.residual, TOL)?);
        }
    }
    let mut findings = Vec::new();
    for d in [4, 5] {
        let report = verify_braid_relation(&shape(d, 2), TOL).map_err(|e| e.to_string())?;
        if report.checks.is_empty() {
            return Err(format!("d={d}: empty report"));
        }
        let path = archive_dir().join(format!("braid_relation_d{d}_n2.json"));
        std::fs::write(&path, report.to_json()).map_err(|e| e.to_string())?;
        findings.push(format!(
            "d={d}: {} ({:.1e})",
            if report.pass { "holds" } else { "fails" },
            report.get("S12 S23 S12 - S23 S12 S23").unwrap().residual
        ));
    }
    Ok(format!(
        "d=2,3 max residual {worst:.1e}; archived {}",
        findings.join(", ")
    ))
}

fn c6_unitarity() -> Outcome {
    const TOL: f64 = 1e-10;
    let mut worst: f64 = 0.0;
    for s in grid() {
        let u = braid_matrix(&s).unwrap().unitarity_residual();
        worst = worst.max(within(&format!("d={} N={}", s.d(), s.sites()), u, TOL)?);
    }
    Ok(format!("max |S'S - I| {worst:.1e}"))
}

fn basis_sum(d: usize, n: usize, terms: &[(usize, Complex64)]) -> StateVector {
    let s = shape(d, n);
    let mut amps = vec![Complex64::new(0.0, 0.0); s.state_dim().unwrap()];
    for &(digit, coeff) in terms {
        amps[s.basis_index(&vec![digit; n]).unwrap()] = coeff;
    }
    StateVector::new(d, n, amps).unwrap()
}

fn c7_ghz() -> Outcome {
    const TOL: f64 = 1e-12;
    let w = RootsOfUnity::new(3).unwrap().omega();
    let r3 = 1.0 / 3f64.sqrt();
    for n in 2..=5 {
        let got = ghz_closed_form(&GhzLabel::new(shape(2, n), vec![0; n]).unwrap()).unwrap();
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let want = basis_sum(2, n, &[(0, h), (1, h)]);
        within(
            &format!("qubit GHZ N={n}"),
            got.residual(&want).unwrap(),
            TOL,
        )?;

        let got = ghz_closed_form(&GhzLabel::new(shape(3, n), vec![0; n]).unwrap()).unwrap();
        let want = basis_sum(3, n, &[(0, r3.into()), (1, r3.into()), (2, w * r3)]);
        within(
            &format!("qutrit GHZ N={n}"),
            got.residual(&want).unwrap(),
            TOL,
        )?;
    }
    let mut worst: f64 = 0.0;
    let mut labels = 0;
    for s in grid().into_iter().chain([shape(5, 3)]) {
        for label in GhzLabel::all(s).unwrap() {
            let a = ghz_closed_form(&label).unwrap();
            let b = ghz_by_braid(&label).unwrap();
            worst = worst.max(within(
                &format!("label {:?} d={}", label.digits(), s.d()),
                a.residual(&b).unwrap(),
                TOL,
            )?);
            labels += 1;
        }
    }
    Ok(format!(
        "golden states ok; {labels} labels, closed vs braid max {worst:.1e}"
    ))
}

fn c8_q_measure() -> Outcome {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for n in 2..=4 {
            let psi = ghz_closed_form(&GhzLabel::new(shape(d, n), vec![0; n]).unwrap()).unwrap();
            for m in 1..=n / 2 {
                let q = q_measure(&psi, m).unwrap();
                let diff = (q - q_measure_ghz_closed_form(d, m)).abs();
                worst = worst.max(within(&format!("d={d} N={n} m={m}"), diff, 1e-10)?);
                if m == 1 {
                    within(&format!("Q1 d={d} N={n}"), (q - 1.0).abs(), 1e-10)?;
                }
            }
        }
    }
    // Product states: basis states and a non-trivial product.
    for (d, n) in [(2, 2), (3, 4), (4, 3), (2, 5)] {
        let s = shape(d, n);
        let psi = StateVector::basis(&s, &s.digits(s.state_dim().unwrap() / 3)).unwrap();
        for m in 1..=n / 2 {
            within(
                &format!("product d={d} N={n} m={m}"),
                q_measure(&psi, m).unwrap().abs(),
                1e-12,
            )?;
        }
    }
    let plus = |d: usize| vec![Complex64::new(1.0 / (d as f64).sqrt(), 0.0); d];
    let tilted = |d: usize| {
        let mut v: Vec<Complex64> = (0..d)
            .map(|k| Complex64::from_polar(1.0, 0.7 * k as f64))
            .collect();
        let norm = (d as f64).sqrt();
        v.iter_mut().for_each(|z| *z /= norm);
        v
    };
    let psi = StateVector::product(3, &[plus(3), tilted(3), plus(3), tilted(3)]).unwrap();
    for m in 1..=2 {
        within(
            &format!("superposed product m={m}"),
            q_measure(&psi, m).unwrap().abs(),
            1e-12,
        )?;
    }
    // Uniform entanglement across all labels, one (d, N) per d.
    for (d, n) in [(2, 4), (3, 4), (4, 3)] {
        let s = shape(d, n);
        for m in 1..=n / 2 {
            let values: Vec<f64> = GhzLabel::all(s)
                .unwrap()
                .iter()
                .map(|l| q_measure(&ghz_closed_form(l).unwrap(), m).unwrap())
                .collect();
            let spread = values.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b))
                - values.iter().fold(f64::INFINITY, |a, &b| a.min(b));
            within(&format!("spread d={d} N={n} m={m}"), spread, 1e-10)?;
        }
    }
    Ok(format!("max |Q - closed form| {worst:.1e}"))
}

fn c9_phase_removal() -> Outcome {
    let r3 = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
    let mut worst: f64 = 0.0;
    for n in 2..=4 {
        let s = shape(3, n);
        let psi = ghz_closed_form(&GhzLabel::new(s, vec![0; n]).unwrap()).unwrap();
        let u = phase_removal_unitary(&s).unwrap();
        let out = psi.evolve(&u).unwrap();
        let want = basis_sum(3, n, &[(0, r3), (1, r3), (2, r3)]);
        worst = worst.max(within(
            &format!("N={n}"),
            out.residual(&want).unwrap(),
            1e-12,
        )?);
    }
    Ok(format!("N=2..4, max residual {worst:.1e}"))
}

fn c10_hamiltonian() -> Outcome {
    let mut notes = Vec::new();
    for d in [2, 3] {
        let s = braid_matrix(&shape(d, 2)).unwrap();
        let h = hamiltonian_from_braid(&s, 1e-10).map_err(|e| e.to_string())?;
        let herm = within(&format!("d={d} Hermitian"), h.hermiticity_residual(), 1e-12)?;
        let rt = within(
            &format!("d={d} round trip"),
            matrix_residual(&expm_i(&h), &s).unwrap(),
            1e-8,
        )?;
        let max_phase = h.max_abs();
        if max_phase > PI * 4.0 {
            return Err(format!("d={d}: implausible Hamiltonian scale {max_phase}"));
        }
        notes.push(format!("d={d} herm {herm:.1e} e^iH {rt:.1e}"));
    }
    Ok(notes.join("; "))
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qudit-braid"))
        .args(args)
        .output()
        .expect("CLI binary runs")
}

fn c11_cli_contract() -> Outcome {
    let dir = archive_dir();
    let state = dir.join("ghz_d3_n4.json");
    let state_path = state.to_str().unwrap();
    let first = cli(&[
        "ghz", "--d", "3", "--n", "4", "--k", "0,0,0,0", "--out", state_path,
    ]);
    if first.status.code() != Some(0) {
        return Err("ghz --out failed".into());
    }
    let golden: Vec<Vec<&str>> = vec![
        vec!["gen", "braid", "--d", "2", "--n", "2"],
        vec!["gen", "x", "--d", "3"],
        vec!["verify", "braid", "--d", "2", "--n", "2"],
        vec!["verify", "algebra", "--d", "3", "--n", "2"],
        vec!["ghz", "--d", "3", "--n", "3", "--k", "0,0,0"],
        vec!["measure", state_path, "--m", "2"],
        vec!["hamiltonian", "--d", "2", "--n", "2"],
    ];
    for args in &golden {
        let a = cli(args);
        let b = cli(args);
        if a.status.code() != Some(0) || a.stdout.is_empty() || a.stdout != b.stdout {
            return Err(format!("{args:?}: not byte-stable or nonzero exit"));
        }
        let text = String::from_utf8(a.stdout).unwrap();
        serde_json::from_str::<serde_json::Value>(&text)
            .map_err(|e| format!("{args:?}: stdout is not JSON ({e})"))?;
    }
    let corrupt = dir.join("corrupt.json");
    std::fs::write(&corrupt, "[1, 2").unwrap();
    let failures: Vec<(Vec<&str>, i32)> = vec![
        (vec!["verify", "braid", "--d", "5", "--n", "2"], 1),
        (vec!["ghz", "--d", "3", "--n", "2", "--k", "0,5"], 2),
        (vec!["gen", "m", "--d", "9", "--n", "9"], 3),
        (vec!["hamiltonian", "--d", "2", "--n", "20"], 3),
        (vec!["measure", corrupt.to_str().unwrap(), "--m", "1"], 4),
    ];
    for (args, want) in &failures {
        let got = cli(args).status.code();
        if got != Some(*want) {
            return Err(format!("{args:?}: exit {got:?}, expected {want}"));
        }
    }
    Ok(format!(
        "{} golden commands stable, exit codes 1-4 observed",
        golden.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("C1 QPA relations", c1_qpa_relations),
        ("C2 eight-vertex golden matrix", c2_eight_vertex),
        ("C3 closed-form braid matrices", c3_closed_forms),
        ("C4 M-algebra", c4_m_algebra),
        ("C5 generalized braid relation", c5_braid_relation),
        ("C6 unitarity", c6_unitarity),
        ("C7 GHZ states", c7_ghz),
        ("C8 Q-measure", c8_q_measure),
        ("C9 phase removal", c9_phase_removal),
        ("C10 Hamiltonian", c10_hamiltonian),
        ("C11 CLI contract", c11_cli_contract),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, check) in criteria {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {name}: panicked");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
