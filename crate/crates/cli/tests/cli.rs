use std::fs;
use std::process::{Command, Output};

fn spp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spp")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exact_four() {
    let o = spp(&["exact", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("SPP(4): 10 pairs\n"), "{out}");
    for p in ["(7,9)", "(10,10)", "(10,7)", "(10,8)"] {
        assert!(out.contains(&format!("\n{p} ")), "{p} missing");
    }
    assert!(out.contains("real-only: 2 pairs"));
}

#[test]
fn prototypes_four() {
    let o = spp(&["prototypes", "--n", "4", "--realizable"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "39 prototypes, 25 realizable\n");
    let o = spp(&["prototypes", "--n", "3", "--list"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(spp(&["exact"]).status.code(), Some(2));
    assert_eq!(spp(&["exact", "--n", "9"]).status.code(), Some(2));
    assert_eq!(spp(&["prototypes", "--n", "8"]).status.code(), Some(2));
    // random strategies need an explicit seed
    let o = spp(&["generate", "--strategy", "random-interval", "--set", "N=20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("seed"));
    assert_eq!(spp(&["generate", "--strategy", "exhaustive-interval", "--set", "bogus"]).status.code(), Some(2));
}

#[test]
fn generate_merge_verify_export() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    fs::write(p("camp.cfg"), "strategy=ExhaustiveInterval\nN=10\nnMax=5\n").unwrap();
    let o = spp(&["generate", "--config", &p("camp.cfg"), "--out", &p("a.csv")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = spp(&["generate", "--strategy", "random-interval", "--seed", "7", "--set", "N=30", "--set", "nMin=3", "--set", "nMax=8", "--out", &p("b.csv")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    // identical flags give byte-identical output
    spp(&["generate", "--strategy", "random-interval", "--seed", "7", "--set", "N=30", "--set", "nMin=3", "--set", "nMax=8", "--out", &p("b2.csv")]);
    assert_eq!(fs::read(p("b.csv")).unwrap(), fs::read(p("b2.csv")).unwrap());
    let o = spp(&["--jobs", "1", "generate", "--strategy", "random-interval", "--seed", "7", "--set", "N=30", "--set", "nMin=3", "--set", "nMax=8", "--out", &p("b3.csv")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read(p("b.csv")).unwrap(), fs::read(p("b3.csv")).unwrap());

    assert_eq!(spp(&["merge", &p("a.csv"), &p("b.csv"), "--out", &p("ab.csv")]).status.code(), Some(0));
    assert_eq!(spp(&["merge", &p("b.csv"), &p("a.csv"), "--out", &p("ba.csv")]).status.code(), Some(0));
    assert_eq!(fs::read(p("ab.csv")).unwrap(), fs::read(p("ba.csv")).unwrap());

    for check in ["all", "sez", "revalidate", "solymosi", "golden", "conjecture"] {
        let o = spp(&["verify", "--dataset", &p("ab.csv"), "--check", check]);
        assert_eq!(o.status.code(), Some(0), "{check}: {}", stdout(&o));
    }
    let o = spp(&["export", "--dataset", &p("ab.csv")]);
    assert!(stdout(&o).starts_with("n,i,j,"));
    let o = spp(&["stats", "--dataset", &p("ab.csv")]);
    assert!(stdout(&o).contains("n=5 pairs="));

    // a tampered record fails verification with exit code 1
    fs::write(p("bad.csv"), "n,sum,prod,max,set,source\n3,6,5,3,1 2 3,x\n").unwrap();
    let o = spp(&["verify", "--dataset", &p("bad.csv")]);
    assert_ne!(o.status.code(), Some(0));
    assert_eq!(spp(&["verify", "--dataset", &p("missing.csv")]).status.code(), Some(1));
}

#[test]
fn sez_check_on_empty_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let ds = dir.path().join("ds.csv");
    fs::write(&ds, "n,sum,prod,max,set,source\n").unwrap();
    let o = spp(&["verify", "--dataset", ds.to_str().unwrap(), "--check", "sez"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tables_and_certificate() {
    let o = spp(&["check-tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(", 0 failed"));
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.csv");
    let o = spp(&["exact", "--n", "3", "--certificate", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&cert).unwrap();
    assert_eq!(text.lines().count(), 1 + 4);
    assert!(text.contains("6,6,witnessed"));
}
