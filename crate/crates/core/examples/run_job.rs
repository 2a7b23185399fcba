//! Runs a job from a JSON configuration without the command-line tool.

use dycoh::config::JobConfig;
use dycoh::job::{run, sha256_hex, Command, Suite};

fn main() -> dycoh::error::Result<()> {
    let text = r#"{
        "field": "F3",
        "backend": "hopf",
        "hopf": { "preset": "sweedler" },
        "coefficient": { "preset": "upper_triangular" },
        "max_degree": 3,
        "seed": 42,
        "samples": 5
    }"#;
    let config = JobConfig::parse(text)?;
    let out = run(Command::Check { suite: Suite::Dga }, &config, &sha256_hex(text.as_bytes()))?;
    print!("{}", out.summary());

    let broken = text.replace("\"sweedler\"", "\"hopf_of_doom\"");
    println!("error: {}", JobConfig::parse(&broken).unwrap_err());
    Ok(())
}
