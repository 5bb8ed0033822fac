use gl11_vacuum::acceptance::{run_criterion, CRITERIA, DEFAULT_SEED};
use gl11_vacuum::gl11::Gl11;

#[test]
fn acceptance_suite() {
    let g = Gl11::standard();
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let outcome = run_criterion(g, id, DEFAULT_SEED);
        println!("{outcome}");
        if !outcome.passed {
            failed.push(outcome.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
