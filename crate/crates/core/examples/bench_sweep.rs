//! A small (n, s, k) sweep through the CLI's bench command.

use clap::Parser;
use rtspan::cli::{run, Cli};

fn main() -> rtspan::Result<()> {
    let cli = Cli::parse_from([
        "rtspan", "bench", "--ns", "32,64", "--ss", "1,4,16", "--ks", "2,3", "--verify", "--seed", "3",
    ]);
    let out = run(cli)?;
    print!("{}", out.stdout);
    Ok(())
}
