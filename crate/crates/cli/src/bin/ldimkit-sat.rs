//! Minimal DIMACS front end to the varisat CDCL solver, speaking the SAT
//! competition output format (`s`/`v` lines, exit code 10 or 20).

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::process::ExitCode;

use varisat::Solver;

fn run(path: &str) -> Result<bool, String> {
    let file = File::open(path).map_err(|e| format!("cannot open {path}: {e}"))?;
    let mut solver = Solver::new();
    solver
        .add_dimacs_cnf(BufReader::new(file))
        .map_err(|e| format!("cannot parse {path}: {e}"))?;
    let sat = solver.solve().map_err(|e| format!("solver failed: {e}"))?;

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if sat {
        writeln!(out, "s SATISFIABLE").map_err(|e| e.to_string())?;
        let model = solver.model().unwrap_or_default();
        for chunk in model.chunks(20) {
            let line: Vec<String> = chunk.iter().map(|l| l.to_dimacs().to_string()).collect();
            writeln!(out, "v {}", line.join(" ")).map_err(|e| e.to_string())?;
        }
        writeln!(out, "v 0").map_err(|e| e.to_string())?;
    } else {
        writeln!(out, "s UNSATISFIABLE").map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(sat)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(path) = args.iter().find(|a| !a.starts_with('-')) else {
        eprintln!("usage: ldimkit-sat <file.cnf>");
        return ExitCode::from(1);
    };
    match run(path) {
        Ok(true) => ExitCode::from(10),
        Ok(false) => ExitCode::from(20),
        Err(e) => {
            eprintln!("c error: {e}");
            println!("s UNKNOWN");
            ExitCode::from(0)
        }
    }
}
