//! Runs the theorem suite on a small corpus and prints the CSV summary.

use eternal_domination::harness::{cmd_verify, VerificationReport, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        n_max: 8,
        ..VerifyOptions::default()
    };
    let report = cmd_verify(&opts, None).unwrap();
    print!("{}", report.summary_csv());

    let reloaded = VerificationReport::from_json(&report.to_json()).unwrap();
    reloaded.revalidate().unwrap();
    println!("{} trees, all hold: {}", report.records.len(), report.all_hold());
}
