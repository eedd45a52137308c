use diagram_cli::run_with;
use diagram_monoids::structure::{minimal_generating_set, Target};
use diagram_monoids::Diagram;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dmon").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn product_of_eps_with_itself() {
    let (code, out, _) = run(&["mul", "--family", "pb", "-n", "2", "{1},{1'},{2,2'}", "{1},{1'},{2,2'}"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{2,2'}\nloops=0 paths=1 twist=y\n");
}

#[test]
fn product_outside_the_family_is_rejected() {
    let (code, _, err) = run(&["mul", "--family", "m", "-n", "2", "{1,2'},{2,1'}", "{1,1'},{2,2'}"]);
    assert_eq!(code, 2);
    assert!(err.contains("family mismatch"));
}

#[test]
fn counts_and_ranks() {
    assert_eq!(run(&["count", "--kind", "m", "-n", "7", "-r", "3"]).1, "133\n");
    assert_eq!(run(&["count", "--kind", "mprime", "-n", "10", "-r", "2"]).1, "438\n");
    assert_eq!(run(&["count", "--kind", "ideal", "--family", "pb", "-n", "5", "-r", "3"]).1, "8776\n");
    assert_eq!(run(&["rank", "--family", "m", "-n", "5", "-r", "2"]).1, "rank=32 idempotent_generated=false\n");
    assert_eq!(
        run(&["rank", "--family", "pb", "-n", "5", "-r", "2"]).1,
        "rank=55 idempotent_generated=true idrank=55\n"
    );
    assert_eq!(run(&["rank", "--family", "pb", "-n", "20", "--idempotent-generated"]).1, "rank=211\n");
}

#[test]
fn closure_of_the_motzkin_generators() {
    let gens = minimal_generating_set(Target::WholeM, 4).unwrap();
    let json = serde_json::to_string(&gens).unwrap();
    let path = std::env::temp_dir().join(format!("dmon-gens-{}.json", std::process::id()));
    std::fs::write(&path, json).unwrap();
    let (code, out, _) = run(&["closure", "--gens-file", path.to_str().unwrap(), "--limit", "1000000"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(out, "size=323 equals=M_4\n");
}

#[test]
fn closure_with_text_generators_names_an_ideal() {
    let path = std::env::temp_dir().join(format!("dmon-text-{}.json", std::process::id()));
    std::fs::write(&path, r#"["{1,2},{1',2'}", "{}"]"#).unwrap();
    let (code, out, _) = run(&["closure", "--gens-file", path.to_str().unwrap(), "-n", "2"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(out, "size=4 equals=I_0(M_2)\n");
}

#[test]
fn gram_at_one_one() {
    let (code, out, _) = run(&["gram", "--family", "m", "-n", "2", "-r", "0", "--x", "1", "--y", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("{}: [y^2, y]"));
    assert!(out.contains("radical_dim=1"));
    assert_eq!(run(&["semisimple", "-n", "3", "--x", "5", "--y", "1"]).1, "semisimple=true\n");
    assert_eq!(run(&["semisimple", "-n", "3", "--x", "2", "--y", "1"]).1, "semisimple=false\n");
}

#[test]
fn json_outputs_round_trip() {
    let (_, out, _) = run(&["--format", "json", "star", "-n", "3", "{1,2},{3,1'}"]);
    let d = Diagram::parse(out.trim(), None).unwrap();
    assert_eq!(d, Diagram::parse("{1',2'},{1,3'}", Some(3)).unwrap());

    let (_, out, _) = run(&["--format", "json", "enumerate", "--family", "m", "-n", "2", "-r", "1"]);
    let back: Vec<Diagram> =
        out.lines().map(|l| Diagram::parse(&serde_json::from_str::<String>(l).unwrap(), Some(2)).unwrap()).collect();
    assert_eq!(back.len(), 4);

    let (_, out, _) = run(&["normal-form", "--format", "json", "-n", "3", "{1,2},{3,1'},{2',3'}"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let part = |k: &str| Diagram::parse(v[k].as_str().unwrap(), Some(3)).unwrap();
    let rebuilt =
        part("beta").compose(&part("lambda")).compose(&part("gamma")).compose(&part("rho")).compose(&part("delta"));
    assert_eq!(rebuilt, Diagram::parse("{1,2},{3,1'},{2',3'}", Some(3)).unwrap());
}

#[test]
fn generators_by_name() {
    assert_eq!(run(&["gen", "--kind", "tau_ij", "-i", "1", "-j", "3", "-n", "4"]).1, "{1,3},{2,2'},{4,4'},{1',3'}\n");
    assert_eq!(run(&["gen", "--kind", "lambda", "--set", "2,4", "-n", "4"]).1, "{2,1'},{4,2'}\n");
    assert_eq!(run(&["gen", "--kind", "tau", "-i", "1", "-n", "4"]).0, 2);
}

#[test]
fn membership_commands() {
    let a = "{1,2},{3,4},{1',2'},{3',4'}";
    assert_eq!(run(&["member", "--family", "m", "-n", "4", "-r", "2", a]).1, "member=true basis=theorem\n");
    assert_eq!(
        run(&["member", "--family", "m", "-n", "3", "-r", "2", "{1,1'},{2,2'}"]).1,
        "member=true basis=closure\n"
    );
    assert_eq!(run(&["member", "--idempotent-generated", "--family", "m", "-n", "2", "{1,2'}"]).1, "member=false\n");
}

#[test]
fn tables_and_eggbox_exports() {
    let (code, out, _) = run(&["tables", "--kind", "m", "--max-n", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,r,value\n0,0,1\n1,0,1\n1,1,1\n2,0,2\n2,1,2\n2,2,1\n");
    let (code, out, _) = run(&["tables", "--kind", "rank", "--family", "pb", "--max-n", "10", "--expect", "paper"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["eggbox", "--family", "m", "-n", "3", "-r", "1", "--dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("h_").count(), 25);
    assert!(out.contains("style=filled"));
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "--suite", "tables", "--max-n", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("tables: PASS"));
    let (code, out, _) = run(&["verify", "--suite", "gram", "--max-n", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("--- expected\n+++ computed"));
    let (code, _, err) = run(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
}

#[test]
fn bad_diagram_is_a_usage_error() {
    let (code, _, err) = run(&["stats", "-n", "2", "{1,2,3}"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}
