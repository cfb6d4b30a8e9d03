use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use qcong::args::{Cli, Command, EvalArgs, OutputArgs, Verify};
use qcong::report::write_records;
use qcong::run::{congruence_tasks, execute, identity_tasks, Task};
use qcong::Record;
use qcong_core::bigmath::format_rational;
use qcong_core::closedform::{evaluate_closed_form, special_q_one};
use qcong_core::sums::double_sum;
use qcong_core::Rational;

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(Verify::Identity(a)) => verify(identity_tasks(&a.ids, a.max_n), &a.output),
        Command::Verify(Verify::Congruence(a)) => {
            verify(congruence_tasks(&a.ids, a.limit), &a.output)
        }
        Command::Eval(a) => eval(&a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn verify(tasks: Vec<Task>, output: &OutputArgs) -> anyhow::Result<u8> {
    let jobs = output.jobs.map(|j| j as usize);
    let records = execute(tasks, jobs)?;
    match &output.out {
        Some(path) => {
            let file = File::create(path)?;
            write_records(BufWriter::new(file), &records, output.format)?;
        }
        None => write_records(io::stdout().lock(), &records, output.format)?,
    }
    report_failures(&records);
    Ok(qcong::exit_code(&records) as u8)
}

fn report_failures(records: &[Record]) {
    let mut err = io::stderr().lock();
    for r in records.iter().filter(|r| !r.holds) {
        let _ = writeln!(
            err,
            "FAIL {} instance {}: lhs = {}, rhs = {}, modulus {}",
            r.claim, r.instance, r.lhs, r.rhs, r.modulus
        );
    }
}

fn eval(args: &EvalArgs) -> anyhow::Result<u8> {
    let weight = &args.q / Rational::from_integer(4.into());
    let direct = double_sum(args.n, &weight);
    let closed = match evaluate_closed_form(args.n, &args.q) {
        Ok(v) => v,
        Err(_) => {
            println!("note: q = 1 is a removable singularity of the closed form; using n(3n^2 - 3n + 2)/2");
            special_q_one(args.n)
        }
    };
    println!("n = {}", args.n);
    println!("q = {}", format_rational(&args.q));
    println!("double_sum = {}", format_rational(&direct));
    println!("closed_form = {}", format_rational(&closed));
    Ok(u8::from(direct != closed))
}
