//! Regenerates the shipped proof scripts: `cargo run --example write_proofs [dir]`.

use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../proofs"));
    std::fs::create_dir_all(&dir)?;
    for d in zxr_core::derived::shipped()? {
        let name = &d.script.name;
        std::fs::write(dir.join(format!("{name}.json")), d.script.to_json_lines())?;
        std::fs::write(dir.join(format!("{name}.start.zxd")), zxr_core::zxd::serialize(&d.start))?;
        println!("{name}: {} steps", d.script.len());
    }
    Ok(())
}
