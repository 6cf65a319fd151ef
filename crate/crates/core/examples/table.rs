//! Summary table: SLOCC class, verdict, three-tangle and concurrence.

use rrqd::monogamy::{q_score, table1};
use rrqd::states::named;

pub(crate) fn run_example() -> rrqd::Result<()> {
    print!("{}", table1()?);

    println!();
    let r = q_score(&named("psi:1.0")?, 0)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}
