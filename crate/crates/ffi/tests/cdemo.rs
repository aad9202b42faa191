//! Compiles and runs the C demo against the generated header and the
//! static library, proving the ABI end to end.

use std::path::PathBuf;
use std::process::Command;

fn target_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("CARGO_TARGET_DIR") {
        return PathBuf::from(dir);
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../target")
}

#[test]
fn c_demo_compiles_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = target_dir().join("debug");
    let staticlib = profile_dir.join("libqudit_ramsey_ffi.a");
    assert!(
        staticlib.exists(),
        "static library not found at {} (built alongside the test)",
        staticlib.display()
    );

    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("demo");
    let compile = Command::new("cc")
        .arg(manifest.join("cdemo/demo.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(staticlib)
        .args(["-lm", "-lpthread", "-ldl"])
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe).output().expect("demo runs");
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(stdout.contains("points=4001"), "unexpected output:\n{stdout}");
    assert!(stdout.contains("resolution=7.16"), "unexpected output:\n{stdout}");
    assert!(stdout.contains("qfi_at_resonance=508."), "unexpected output:\n{stdout}");
}
