//! Acceptance matrix: one line per criterion, nonzero exit if any fails.

use std::process::{Command, Output, Stdio};
use std::time::Instant;

use charp_core::corpus::run_criterion;

fn spawn_corpus() -> std::process::Child {
    Command::new(env!("CARGO_BIN_EXE_charp"))
        .arg("corpus")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("the charp binary starts")
}

fn determinism(a: Output, b: Output) -> Result<usize, String> {
    if !a.status.success() || !b.status.success() {
        return Err(format!(
            "exit status {:?} / {:?}",
            a.status.code(),
            b.status.code()
        ));
    }
    if a.stdout.is_empty() {
        return Err("empty output".into());
    }
    if a.stdout != b.stdout {
        let at = a.stdout.iter().zip(&b.stdout).position(|(x, y)| x != y);
        return Err(format!("outputs differ (first difference at byte {at:?})"));
    }
    Ok(a.stdout.len())
}

fn main() {
    // the two CLI runs proceed while the in-process criteria are computed
    let first = spawn_corpus();
    let second = spawn_corpus();
    let mut failed = 0;
    for id in 1..=10 {
        let start = Instant::now();
        let r = run_criterion(id).expect("criteria 1 to 10 exist");
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:2} {verdict} {} ({} checks, {:.2}s)",
            r.name,
            r.checks,
            start.elapsed().as_secs_f64()
        );
        for f in &r.failures {
            println!("    failed: {f}");
        }
        if !r.pass {
            failed += 1;
        }
    }
    let a = first.wait_with_output().expect("first corpus run");
    let b = second.wait_with_output().expect("second corpus run");
    match determinism(a, b) {
        Ok(bytes) => println!("criterion 11 PASS CLI determinism ({bytes} identical bytes)"),
        Err(why) => {
            println!("criterion 11 FAIL CLI determinism");
            println!("    failed: {why}");
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria pass");
}
