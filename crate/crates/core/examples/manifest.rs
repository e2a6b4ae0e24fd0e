//! Loads a shipped fixture as a manifest and runs the small verification
//! profile on it, as `forge verify` does.

use forge::cli::export::fixture_model;
use forge::cli::verify::{select_suites, verify_model, Profile};

fn main() -> forge::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "axb".into());
    let model = fixture_model(&name)?;
    let suites = select_suites(&[], &model)?;
    let checks = verify_model(&model, &suites, Profile::Small)?;
    for c in &checks {
        println!("{}", c.line());
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} passed, {failed} failed", checks.len() - failed);
    Ok(())
}
