// Runs the full scaling study and prints one line per check.

use std::time::Instant;

use skeletal::report;

pub fn run() -> skeletal::Result<()> {
    for (idx, step) in report::STEPS.iter().enumerate() {
        let start = Instant::now();
        let section = step()?;
        println!(
            "{} [{}] {}: {} ({:.1}s)",
            if section.pass { "PASS" } else { "FAIL" },
            idx + 1,
            section.title,
            section.summary,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}
