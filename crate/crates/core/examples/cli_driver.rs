// Driving the command-line interface in-process.

use nilhecke::cli;

pub fn run_example() -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        ["nilhecke", "smooth", "--type", "C2", "--w", "121", "--v", "1"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let text = String::from_utf8(out).expect("utf-8");
    print!("{text}");

    let code = cli::run(["nilhecke", "smooth", "--type", "C2", "--w", "1", "--v", "2"], &mut Vec::new(), &mut err);
    assert_eq!(code, 1);
    eprint!("{}", String::from_utf8_lossy(&err));
    text
}

#[allow(dead_code)]
fn main() {
    run_example();
}
