// Driving the command-line front end from code and reading its JSON.
//
// Run with `cargo run --example scripted_cli`.

use zeropoint::cli::run_with_io;

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with_io(
        ["zeropoint", "pair-rate", "--eps", "1", "--spin", "0.5"],
        &mut out,
        &mut err,
    );
    println!("exit {code}");
    print!("{}", String::from_utf8_lossy(&out));

    let mut out = Vec::new();
    let code = run_with_io(
        ["zeropoint", "single-slit", "--lambda-um", "0.579", "--w-um", "6000", "--D-m", "1", "--points", "3"],
        &mut out,
        &mut err,
    );
    println!("exit {code}");
    print!("{}", String::from_utf8_lossy(&out));

    // validation failures come back as exit status 2
    let code = run_with_io(["zeropoint", "unruh", "--accel", "-1"], &mut Vec::new(), &mut err);
    println!("exit {code}: {}", String::from_utf8_lossy(&err).lines().last().unwrap_or(""));
}
