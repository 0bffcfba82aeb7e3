use std::collections::BTreeSet;

use gf2pat_cli::run;

struct Outcome {
    code: i32,
    stdout: Vec<u8>,
    stderr: String,
}

impl Outcome {
    fn text(&self) -> String {
        String::from_utf8(self.stdout.clone()).unwrap()
    }
}

fn invoke_with_stdin(args: &[&str], input: &str) -> Outcome {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("gf2pat").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
    Outcome { code, stdout, stderr: String::from_utf8(stderr).unwrap() }
}

fn invoke(args: &[&str]) -> Outcome {
    invoke_with_stdin(args, "")
}

fn terms(line: &str) -> BTreeSet<String> {
    line.trim_end().split('+').map(String::from).collect()
}

#[test]
fn expand_lists_the_clipped_series() {
    let out = invoke(&["expand", "--expr", "1/(1+x+x*y^2)", "--grid", "4x3", "--format", "terms"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.text().ends_with('\n') && out.text().lines().count() == 1);
    assert_eq!(terms(&out.text()), terms("1+x+x*y^2+x^2+x^3+x^3*y^2+x^4"));
    assert_eq!(out.text(), "1+x+x^2+x^3+x*y^2+x^4+x^3*y^2\n");
}

#[test]
fn size_is_grid_plus_one() {
    let a = invoke(&["render", "--expr", "1/(1+x+y)", "--grid", "7x5"]);
    let b = invoke(&["render", "--expr", "1/(1+x+y)", "--size", "8x6"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.text().lines().count(), 6);
}

#[test]
fn stdin_and_expr_agree() {
    let a = invoke(&["render", "--expr", "1/(1+xy) + x^2/(1+xy)", "--grid", "4x3"]);
    let b = invoke_with_stdin(&["render", "--stdin", "--grid", "4x3"], "1/(1+xy) + x^2/(1+xy)\n");
    assert_eq!(b.code, 0, "{}", b.stderr);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn render_formats() {
    let ascii = invoke(&["render", "--expr", "1/(1+x) + x^2/(1+y) + 1/(1+x+xy^2)", "--grid", "4x3"]);
    assert_eq!(ascii.text(), "..#..\n..#..\n.###.\n..#..\n");
    let pbm = invoke(&["render", "--expr", "1", "--grid", "1x1", "--format", "pbm"]);
    assert_eq!(pbm.stdout, b"P1\n2 2\n1 0\n0 0\n");
    let flipped = invoke(&["render", "--expr", "1", "--grid", "1x1", "--format", "pbm", "--origin", "bottom-left"]);
    assert_eq!(flipped.stdout, b"P1\n2 2\n0 0\n1 0\n");
    let svg = invoke(&["render", "--expr", "1+x", "--grid", "3x3", "--format", "svg", "--rx", "0.5"]);
    assert_eq!(svg.code, 0);
    assert_eq!(svg.text().matches(r#"fill="black""#).count(), 2);
    let glyphs = invoke(&["render", "--expr", "x", "--grid", "1x0", "--on", "1", "--off", "0"]);
    assert_eq!(glyphs.text(), "01\n");
}

#[test]
fn wrap_mode_uses_the_torus() {
    let out = invoke(&["expand", "--expr", "1/x", "--grid", "2x2", "--mode", "wrap"]);
    assert_eq!(out.text(), "x^2\n");
    let bad = invoke(&["expand", "--expr", "1/(1+x)", "--grid", "2x2", "--mode", "wrap"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.is_empty());
    assert!(bad.stderr.contains("not invertible"));
}

#[test]
fn order_and_invert() {
    assert_eq!(invoke(&["order", "--element", "1+x", "--mod", "3,3"]).text(), "4\n");
    assert_eq!(invoke(&["order", "--element", "x*y", "--mod", "3,3"]).text(), "3\n");
    assert_eq!(invoke(&["invert", "--element", "x", "--mod", "3,3"]).text(), "x^2\n");
    let zd = invoke(&["invert", "--element", "1+x", "--mod", "3,3"]);
    assert_eq!(zd.code, 1);
    assert!(zd.stdout.is_empty());
    assert!(zd.stderr.contains("not invertible"), "{}", zd.stderr);
}

#[test]
fn table_header_in_diagonal_order() {
    let out = invoke(&["table", "--mod", "3,3"]);
    assert_eq!(out.code, 0);
    let text = out.text();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0], ["*", "1", "x", "y", "x^2", "x*y", "y^2", "x^2*y", "x*y^2", "x^2*y^2"]);
    assert_eq!(rows[2], ["x", "x", "x^2", "x*y", "1", "x^2*y", "x*y^2", "y", "x^2*y^2", "y^2"]);
    // Column-aligned: every cell of a column starts at the same offset.
    let starts: Vec<usize> = text.lines().next().unwrap().match_indices(|c: char| c != ' ').filter(|&(k, _)| {
        k == 0 || text.lines().next().unwrap().as_bytes()[k - 1] == b' '
    }).map(|(k, _)| k).collect();
    for l in text.lines() {
        for &s in &starts {
            assert!(s == 0 || l.as_bytes()[s - 1] == b' ', "misaligned: {l}");
        }
    }
}

#[test]
fn map_folds_and_rejects_common_factors() {
    let out = invoke(&["map", "--seq", "000100110101111", "--rows", "3", "--cols", "5", "--scheme", "diagonal"]);
    assert_eq!(out.text(), "01111\n00110\n01001\n");
    let rm = invoke(&["map", "--seq", "000100110101111", "--rows", "3", "--cols", "5", "--scheme", "row-major"]);
    assert_eq!(rm.text(), "00010\n01101\n01111\n");
    let bad = invoke(&["map", "--seq", "0101", "--rows", "2", "--cols", "4", "--scheme", "diagonal"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.is_empty());
    assert!(bad.stderr.contains("rows and cols must be coprime"), "{}", bad.stderr);
}

#[test]
fn sequences() {
    assert_eq!(invoke(&["dseq", "--prime", "19"]).text(), "000011010111100101\n");
    assert_eq!(invoke(&["dseq", "--prime", "7", "--count", "6"]).text(), "001001\n");
    assert_eq!(invoke(&["dseq", "--prime", "9"]).code, 1);
    assert_eq!(invoke(&["lfsr", "--poly", "1+x+x^3"]).text(), "1110100\n");
    assert_eq!(invoke(&["lfsr", "--poly", "1+x^2", "--count", "6"]).text(), "101010\n");
    assert_eq!(invoke(&["lfsr", "--poly", "x+x^2"]).code, 1);
}

#[test]
fn codec_round_trip() {
    let enc = invoke(&["encode", "--poly", "x+y+x*y+x*y^2+y^3"]);
    assert_eq!(enc.text(), "0110100011\n");
    let dec = invoke(&["decode", "--bits", "0110100011"]);
    assert_eq!(dec.text(), "x+y+x*y+x*y^2+y^3\n");
    for o in ["diagonal", "boustrophedon", "meander"] {
        let bits = invoke(&["encode", "--poly", "1+x^3*y+y^4", "--ordering", o]).text();
        let back = invoke(&["decode", "--bits", bits.trim(), "--ordering", o]);
        assert_eq!(back.text(), "1+x^3*y+y^4\n", "{o}");
    }
    let short = invoke(&["encode", "--poly", "y^3", "--length", "3"]);
    assert_eq!(short.code, 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand", "--expr", "1"][..],
        &["expand", "--expr", "1", "--grid", "4x3", "--bogus"],
        &["expand", "--expr", "1", "--grid", "4by3"],
        &["expand", "--expr", "1", "--grid", "4x3", "--format", "gif"],
        &["expand", "--expr", "1", "--grid", "4x3", "--size", "5x4"],
        &["map", "--seq", "01", "--rows", "1", "--cols", "2", "--scheme", "spiral"],
        &["encode", "--poly", "1", "--ordering", "spiral"],
        &["nonsense"],
    ] {
        let out = invoke(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn domain_errors_exit_one_with_position() {
    let out = invoke(&["expand", "--expr", "1/(1+x", "--grid", "4x3"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("offset 6"), "{}", out.stderr);
    let nested = invoke(&["expand", "--expr", "1/(1/(1+x))", "--grid", "4x3"]);
    assert_eq!(nested.code, 1);
    assert!(nested.stderr.contains("offset 4"), "{}", nested.stderr);
    let inadmissible = invoke(&["expand", "--expr", "1/(x+y)", "--grid", "4x3"]);
    assert_eq!(inadmissible.code, 1);
}

#[test]
fn deterministic_output() {
    let args = ["render", "--expr", "1/(1+x+y+x^2*y^3)", "--grid", "31x31", "--format", "svg"];
    assert_eq!(invoke(&args).stdout, invoke(&args).stdout);
}

#[test]
fn help_goes_to_stdout() {
    let out = invoke(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.text().contains("expand"));
}
