use clap::Parser;
use perdoub::cli::{run, Cli};
use perdoub::Config;

fn main() {
    let cli = Cli::parse();
    let code = run(&cli, Config::from_env(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
