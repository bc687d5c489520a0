use std::path::PathBuf;
use std::process::{Command, Output};

fn cgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgc"))
        .args(args)
        .env("CGC_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("configs")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Writes `text` to a fresh file under the target directory.
fn temp_config(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn build_reports_summary_lines() {
    for (file, line) in [
        ("rate_1_3.cfg", "n=3 k=1 δ=2 m=2 d_free=9 S=9 MDS=yes"),
        ("rate_2_3.cfg", "n=3 k=2 δ=3 m=2 d_free=6 S=6 MDS=yes"),
        ("rate_1_4.cfg", "n=4 k=1 δ=2 m=2 d_free=12 S=12 MDS=yes"),
        ("rate_2_4.cfg", "n=4 k=2 δ=3 m=2 d_free=8 S=8 MDS=yes"),
    ] {
        let o = cgc(&["build", &config(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert_eq!(stdout(&o).lines().next(), Some(line), "{file}");
    }
}

#[test]
fn collinear_sections_warn() {
    let o = cgc(&["build", &config("collinear.cfg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .contains("warning: sections collinear: code factors through the P¹ case"));
}

#[test]
fn emitted_matrices_use_text_format() {
    let o = cgc(&["build", &config("rate_1_3.cfg"), "--emit-matrices"]);
    let out = stdout(&o);
    assert!(out.contains("G:\na^6 + az + a^4z^2; a^5 + a^2z + az^2; a^3 + a^4z + a^2z^2\n"));
    assert!(out.contains("H:\n"));
}

#[test]
fn machine_output_is_deterministic_json() {
    let args = ["build", &config("rate_2_4.cfg"), "--machine", "--bruteforce"];
    let (a, b) = (cgc(&args), cgc(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["free_distance"]["value"], 8);
    assert_eq!(v["free_distance"]["method"], "trellis");
    assert_eq!(v["free_distance"]["bruteforce"]["value"], 8);
    assert_eq!(v["forney_indices"], serde_json::json!([1, 2]));
    // a + a^3 z
    assert_eq!(v["matrices"]["generator"][0][0], serde_json::json!([1, 3]));
}

#[test]
fn verify_examples_passes() {
    let o = cgc(&["verify-examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("4/4 examples verified"));
}

#[test]
fn bounds_command() {
    let o = cgc(&["bounds", "--q", "8", "--m", "2", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n_max=4096 k_max=6 m_max=2 δ_max=8\n");
}

#[test]
fn exit_codes_by_error_class() {
    let base = std::fs::read_to_string(config("rate_1_3.cfg")).unwrap();
    let cases = [
        ("usage", None, 2),
        ("missing", Some(None), 3),
        ("syntax", Some(Some(base.replace("[geometry]", "[geometry"))), 4),
        ("schema", Some(Some(base.replace("r = 2", "r = \"two\""))), 5),
        ("invariant", Some(Some(base.replace("[4, 1], [1, 2]]", "[4, 9], [1, 2]]"))), 6),
        (
            // t vanishes along the single section z -> 0
            "construction",
            Some(Some(
                "[field]\np = 2\ns = 3\nmodulus = [1, 0, 1, 1]\n\
                 [geometry]\nm = 1\nr = 1\n\
                 [sections]\npoints = [[[-1, -1]]]\n\
                 [gamma]\ngenerators = [[{ exponents = [1], coefficient = [0] }]]\n"
                    .to_string(),
            )),
            7,
        ),
        (
            "limit",
            Some(Some(
                "[field]\np = 2\ns = 3\nmodulus = [1, 0, 1, 1]\n\
                 [geometry]\nm = 1\nr = 9\n\
                 [sections]\npoints = [[[0, -1]], [[0, 0]]]\n\
                 [gamma]\ngenerators = [[{ exponents = [9], coefficient = [0] }]]\n"
                    .to_string(),
            )),
            8,
        ),
    ];
    for (name, file, code) in cases {
        let o = match file {
            None => cgc(&["build"]),
            Some(None) => cgc(&["build", "/nonexistent/cgc.cfg"]),
            Some(Some(text)) => cgc(&["build", &temp_config(&format!("{name}.cfg"), &text)]),
        };
        assert_eq!(o.status.code(), Some(code), "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn color_is_opt_out() {
    let o = Command::new(env!("CARGO_BIN_EXE_cgc"))
        .args(["build", &config("collinear.cfg")])
        .env("CGC_COLOR", "1")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("\x1b[33mwarning"));
    assert!(!stdout(&cgc(&["build", &config("collinear.cfg")])).contains('\x1b'));
}
