//! The twelve acceptance criteria, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use abalg::selftest;

type Criterion = fn() -> Result<String, String>;

fn suite(f: fn() -> Result<usize, String>) -> Result<String, String> {
    f().map(|n| format!("{n} cases"))
}

fn c1_ring_axioms() -> Result<String, String> {
    suite(selftest::ring_axioms)
}

fn c2_gamma() -> Result<String, String> {
    suite(selftest::gamma_tables)
}

fn c3_orderings() -> Result<String, String> {
    suite(selftest::ordering_round_trip)
}

fn c4_oracle() -> Result<String, String> {
    suite(selftest::oracle_representation)
}

fn c5_identities() -> Result<String, String> {
    suite(selftest::closed_identities)
}

fn c6_inversion() -> Result<String, String> {
    suite(selftest::inversion)
}

fn c7_division() -> Result<String, String> {
    suite(selftest::division)
}

fn c8_automorphisms() -> Result<String, String> {
    suite(selftest::automorphisms)
}

fn c9_modules() -> Result<String, String> {
    suite(selftest::modules)
}

fn c10_ode2ab() -> Result<String, String> {
    suite(selftest::differential_systems)
}

fn c11_xi() -> Result<String, String> {
    suite(selftest::xi_representation)
}

fn abalg(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_abalg")).args(args).output().map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("terminated by signal")?;
    Ok((code, String::from_utf8(out.stdout).map_err(|e| e.to_string())?))
}

fn c12_cli() -> Result<String, String> {
    let documented: [(&[&str], &str); 3] = [
        (&["normalize", "--order", "4", "--form", "right", "--pretty", "a^2*b"], "b*a^2 + 2*b^2*a + 2*b^3\n"),
        (&["inv", "--order", "4", "--pretty", "1 - a*b"], "1 + a*b + a^2*b^2 - a*b^3\n"),
        (&["div-linear", "--lambda", "1", "--order", "6", "--pretty", "a^2"], "Q = a + b\nR = 2*b^2\n"),
    ];
    for (args, expect) in documented {
        let (code, out) = abalg(args)?;
        if code != 0 || out != expect {
            return Err(format!("{args:?}: exit {code}, output {out:?}"));
        }
    }
    let (code, out) = abalg(&["selftest"])?;
    if code != 0 {
        return Err(format!("selftest exit {code}:\n{out}"));
    }
    let passes = out.lines().filter(|l| l.contains(" PASS ")).count();
    if passes != selftest::SUITES.len() {
        return Err(format!("selftest reported {passes} passing suites"));
    }
    for (args, expect) in [(&["normalize", "a**b"][..], 2), (&["inv", "a"][..], 3), (&["factor", "a + 1"][..], 3)] {
        let (code, _) = abalg(args)?;
        if code != expect {
            return Err(format!("{args:?}: exit {code}, expected {expect}"));
        }
    }
    Ok("3 documented outputs, selftest, exit codes".to_string())
}

const CRITERIA: &[(&str, Criterion)] = &[
    ("1 relation and ring axioms", c1_ring_axioms),
    ("2 gamma tables", c2_gamma),
    ("3 ordering round trip", c3_orderings),
    ("4 oracle equivalence", c4_oracle),
    ("5 closed identities", c5_identities),
    ("6 inversion", c6_inversion),
    ("7 division", c7_division),
    ("8 tau and F", c8_automorphisms),
    ("9 modules", c9_modules),
    ("10 ode2ab", c10_ode2ab),
    ("11 xi representation", c11_xi),
    ("12 cli", c12_cli),
];

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failed = 0;
    for (name, f) in CRITERIA {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("{name:<28} PASS {detail} ({:.1?})", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("{name:<28} FAIL {msg}");
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", CRITERIA.len() - failed, CRITERIA.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
