//! Run a named suite, record a manifest and replay it.

use ltfourier::verify::{emit_report, Format, RunManifest, SuiteName, SuiteRequest};

fn main() -> ltfourier::Result<()> {
    let request = SuiteRequest::new(SuiteName::Lemma32, 3, 2, 1);
    let (manifest, report) = RunManifest::record(request)?;
    emit_report(&report, Format::Table, &mut std::io::stdout()).expect("stdout");
    println!("results sha256 {}", manifest.results_sha256);

    let back = RunManifest::from_json_str(&manifest.to_json_string())?;
    let replay = back.replay()?;
    println!("replay identical: {}", replay.identical);
    Ok(())
}
