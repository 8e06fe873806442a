//! Run part of the registry and print the JSON report the CLI would emit.
//!
//!     cargo run --example json_report -- suz5

use hyperchern::golden::run_checks;
use hyperchern::report::ReportDocument;

fn main() {
    let query = std::env::args().nth(1).unwrap_or_else(|| "w4".into());
    let doc = ReportDocument::new(run_checks(Some(&query)));
    print!("{}", doc.to_json());
    eprintln!("{} entries, exit code {}", doc.entries.len(), doc.exit_code());
}
