//! Driving the command-line front end from code, capturing its output.

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["qsym", "table", "qeuler", "--n-max", "3", "--r", "1", "--format", "csv"];
    let code = qsym::cli::run(args, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    println!("exit code {code}");
}
