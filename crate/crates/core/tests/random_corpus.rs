use kac_core::check::run_checks;
use kac_core::sample::gl_corpus;

#[test]
fn invariant_suite_on_random_weights() {
    let mut failures = Vec::new();
    for (k, w) in gl_corpus(2024, 150, 4).iter().enumerate() {
        for c in run_checks(w, k as u64).unwrap() {
            if !c.passed {
                failures.push(format!("{w}: {} ({})", c.name, c.detail));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
