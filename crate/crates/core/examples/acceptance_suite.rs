//! Run the acceptance criteria from code.

use gl11_vacuum::acceptance::{run, DEFAULT_SEED};
use gl11_vacuum::gl11::Gl11;

fn main() {
    let outcomes = run(Gl11::standard(), &(1..=10).collect::<Vec<_>>(), DEFAULT_SEED);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} of {} passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
