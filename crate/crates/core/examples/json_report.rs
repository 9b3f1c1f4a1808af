//! Drives the command-line front end in-process and reads its JSON report
//! back.
//!
//! ```not_rust
//! cargo run --example json_report
//! ```

use hilbcoeff::cli::run;
use hilbcoeff::report::ReportDocument;

fn main() {
    let ring = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/poly2.ring");
    let out = run(["hilbcoeff", "coeffs", "--ring", ring, "--q", "q23", "--json"]);
    let doc = ReportDocument::from_json(&out.stdout).expect("valid report");
    println!("exit code {}", out.code);
    println!("inputs: {:?}", doc.inputs.keys().collect::<Vec<_>>());
    println!("e = {}", doc.results["values"]);

    let out = run(["hilbcoeff", "semigroup", "delta", "--gens", "3,4,5", "--json"]);
    let doc = ReportDocument::from_json(&out.stdout).expect("valid report");
    println!(
        "Delta^m = {}, sup check {}",
        doc.results["delta_k"], doc.results["sup_check"]
    );
}
