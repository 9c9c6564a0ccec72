use hall2p_cli::run;
use std::path::PathBuf;

const S1: &str = "e1=[0,1];e0=[1,0];d1=[1];d0=[0]";
const S2: &str = "e1=[0,0];e0=[0,1];d1=[];d0=[]";

fn alg(name: &str) -> String {
    format!("{}/../../algebras/{name}.alg", env!("CARGO_MANIFEST_DIR"))
}

fn hall2p(args: &[&str]) -> (i32, String) {
    let mut v = vec!["hall2p".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    run(&v)
}

fn footer(out: &str) -> &str {
    out.lines().last().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("hall2p-cli-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

#[test]
fn info_reports_the_algebra() {
    let (code, out) = hall2p(&["info", &alg("a2")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("hall2p "));
    assert!(out.contains("hash="));
    assert_eq!(footer(&out), "RESULT pass checked=0 skipped=0");
}

#[test]
fn hash_does_not_depend_on_q() {
    let hash = |q: &str| {
        let (_, out) = hall2p(&["congruence", &alg("a1"), "--q", q]);
        out.lines().find(|l| l.starts_with("algebra ")).unwrap().to_string()
    };
    assert_eq!(hash("2"), hash("5"));
}

#[test]
fn congruence_passes() {
    for q in ["2", "3"] {
        let (code, out) = hall2p(&["congruence", &alg("a2"), "--cap", "2", "--q", q]);
        assert_eq!(code, 0, "{out}");
        assert!(footer(&out).starts_with("RESULT pass"));
        assert!(!out.contains("VIOLATION"));
    }
}

#[test]
fn hall_numbers_of_the_projective_cover() {
    let (code, out) = hall2p(&["hall", &alg("a2"), "--q", "3", "--x", S1, "--y", S2]);
    assert_eq!(code, 0, "{out}");
    // C_P1 with a contractible summand: g = q - 1 by both routes
    assert!(out.lines().any(|l| l.contains("g_brute=2 g_rp=2")), "{out}");
}

#[test]
fn usage_and_capacity_errors_exit_2() {
    assert_eq!(hall2p(&["frobnicate"]).0, 2);
    assert_eq!(hall2p(&["info", "/nonexistent.alg"]).0, 2);
    let (code, out) = hall2p(&["congruence", &alg("a2"), "--cap", "2", "--max-enum", "4"]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("ERROR"));
    assert!(footer(&out).starts_with("RESULT fail"));
    let (code, _) = hall2p(&["hall", &alg("a2"), "--x", S1, "--y", "e1=[1];e0=[0];d1=[];d0=[]"]);
    assert_eq!(code, 2);
}

#[test]
fn max_enum_flag_beats_the_environment() {
    let code = |extra: &[&str]| {
        std::process::Command::new(env!("CARGO_BIN_EXE_hall2p"))
            .args(["congruence", &alg("a2"), "--cap", "2"])
            .args(extra)
            .env("HALL2P_MAX_ENUM", "4")
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(code(&[]), Some(2));
    assert_eq!(code(&["--max-enum", "16777216"]), Some(0));
}

#[test]
fn table_files_round_trip() {
    let out_path = scratch("a2");
    let p = out_path.to_str().unwrap();
    let (code, out) = hall2p(&["lie", &alg("a2"), "--cap", "2", "--q", "5", "--side", "both", "--out", p]);
    assert_eq!(code, 0, "{out}");
    let (exact, tri) = (format!("{p}.exact"), format!("{p}.tri"));
    assert_eq!(hall2p(&["compare", &exact, &tri]).0, 0);
    assert_eq!(hall2p(&["jacobi", &tri]).0, 0);
    let (code, out) = hall2p(&["chevalley", &tri, "--type", "A2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(hall2p(&["chevalley", &tri, "--type", "A1"]).0, 1);
    let (code, _) = hall2p(&["lie", &alg("a1"), "--cap", "2", "--q", "0", "--primes", "2,3,5", "--out", p]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("modulus 0\nprovenance tri q=limit window=2,2\n"), "{text}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["congruence", &alg("a3rel"), "--cap", "1", "--q", "3"];
    let (a, b) = (hall2p(&args), hall2p(&args));
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}
