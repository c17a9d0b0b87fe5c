//! `properdiv`: homology of proper-divisibility posets from the command line.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 size guard exceeded.

mod desc;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use properdiv::complex::order_complex_with;
use properdiv::homology::homology_with;
use properdiv::poset::{dual, make_boolean_lattice_with, proper_product_with};
use properdiv::shellability::{
    dual_lex_certificate_with, falling_chains_with, histogram, search_rao_with, verify_rao, RaoCertificate,
};
use properdiv::sweep::{run_sweep, Check, SweepOptions};
use properdiv::{HomologySummary, Limits, Multidegree, Poset};

use desc::BuildError;

#[derive(Parser)]
#[command(name = "properdiv", version, about = "Order complexes of proper-divisibility posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers (and torsion) of the order complex of a poset.
    ///
    /// Descriptors: `pdiv a1,a2,...`, `bool n`, `chain k`, `dual <desc>`,
    /// `prod <desc> <desc>`, `file <path>`.
    Homology {
        #[arg(required = true, num_args = 1..)]
        desc: Vec<String>,
        /// Reduced homology (default: non-reduced).
        #[arg(long)]
        reduced: bool,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Also print torsion coefficients.
        #[arg(long)]
        torsion: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Check the closed formulas against homology, falling chains, Möbius
    /// numbers and the generating function on 2 ≤ a ≤ b.
    Verify {
        #[arg(long, default_value_t = 6)]
        a_max: u32,
        #[arg(long, default_value_t = 6)]
        b_max: u32,
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Recursive atom orderings: exhaustive search, or the dual-lex
    /// certificate of P(a)*.
    Rao {
        #[arg(num_args = 0.., conflicts_with = "dual_lex")]
        desc: Vec<String>,
        /// Search the poset given by the descriptor.
        #[arg(long, requires = "desc")]
        search: bool,
        /// Search the dual of the described poset instead.
        #[arg(long, requires = "search")]
        dual: bool,
        /// Build and verify the dual-lex certificate of P(a1,...,an)*.
        #[arg(long, value_name = "a1,a2,...", conflicts_with = "search")]
        dual_lex: Option<String>,
    },
    /// Falling chains of P(a,b)*.
    Falling {
        a: u32,
        b: u32,
        /// Only chains of this length.
        #[arg(long)]
        length: Option<usize>,
        /// Print the number of chains per length.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Non-reduced Betti numbers of Δ(B_i ×p B_j) for the four reference rows.
    Table {
        /// Print the reference values and a match column next to the
        /// computed rows.
        #[arg(long)]
        paper_table: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Write a poset in the text format.
    Poset {
        #[arg(required = true, num_args = 1..)]
        desc: Vec<String>,
    },
    /// Write the facets of the order complex of a poset.
    Complex {
        #[arg(required = true, num_args = 1..)]
        desc: Vec<String>,
    },
}

enum Failure {
    Mismatch(String),
    Usage(String),
    Guard(String),
}

impl From<properdiv::Error> for Failure {
    fn from(e: properdiv::Error) -> Self {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::Io(msg) => Failure::Usage(msg),
            BuildError::Core(e) => e.into(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let result = match cli.command {
        Command::Homology {
            desc,
            reduced,
            json,
            torsion,
            csv,
        } => cmd_homology(&desc, reduced, json, torsion, csv, &limits),
        Command::Verify { a_max, b_max, mutate } => cmd_verify(a_max, b_max, mutate, &limits),
        Command::Rao {
            desc,
            search,
            dual,
            dual_lex,
        } => cmd_rao(&desc, search, dual, dual_lex.as_deref(), &limits),
        Command::Falling {
            a,
            b,
            length,
            count_only,
            json,
        } => cmd_falling(a, b, length, count_only, json, &limits),
        Command::Table { paper_table, csv } => cmd_table(paper_table, csv, &limits),
        Command::Poset { desc } => load(&desc, &limits).map(|(_, p)| print!("{}", p.to_text())),
        Command::Complex { desc } => load(&desc, &limits).and_then(|(_, p)| {
            print!("{}", order_complex_with(&p, &limits)?.to_text());
            Ok(())
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("hint: raise the face limit with PROPERDIV_GUARD_FACES");
            ExitCode::from(3)
        }
    }
}

fn load(words: &[String], limits: &Limits) -> Result<(desc::Desc, Poset), Failure> {
    let d = desc::parse(words).map_err(Failure::Usage)?;
    let p = desc::build(&d, limits)?;
    Ok((d, p))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn convention(reduced: bool) -> &'static str {
    if reduced {
        "reduced"
    } else {
        "non-reduced"
    }
}

fn cmd_homology(words: &[String], reduced: bool, json: bool, torsion: bool, csv: bool, limits: &Limits) -> Outcome {
    let (d, p) = load(words, limits)?;
    let k = order_complex_with(&p, limits)?;
    let h = homology_with(&k, reduced, limits)?;
    if json {
        println!("{}", serde_json::to_string(&h).expect("summary serializes"));
        return Ok(());
    }
    if csv {
        println!("degree,betti,torsion,convention");
        for (i, b) in h.betti.iter().enumerate() {
            println!("{i},{b},{},{}", join(&h.torsion[i]), convention(reduced));
        }
        return Ok(());
    }
    println!("poset: {d} ({} elements)", p.len());
    println!("complex: {} vertices, {} facets", k.vertices().len(), k.facets().len());
    println!("convention: {}", convention(reduced));
    print_betti(&h);
    if torsion {
        print_torsion(&h);
    }
    if h.empty_complex {
        println!("empty complex");
    }
    Ok(())
}

fn print_betti(h: &HomologySummary) {
    if h.betti.is_empty() {
        println!("betti: (none)");
    } else {
        println!("betti: {}", join(&h.betti));
    }
}

fn print_torsion(h: &HomologySummary) {
    let parts: Vec<String> = h
        .torsion
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_empty())
        .map(|(i, t)| format!("H{i}: {}", t.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")))
        .collect();
    if parts.is_empty() {
        println!("torsion: none");
    } else {
        println!("torsion: {}", parts.join(", "));
    }
}

fn cmd_verify(a_max: u32, b_max: u32, mutate: bool, limits: &Limits) -> Outcome {
    let mut opts = SweepOptions::new(a_max, b_max);
    opts.mutate = mutate;
    opts.limits = limits.clone();
    let report = run_sweep(&opts)?;
    println!("sweep over 2 <= a <= b, a <= {a_max}, b <= {b_max} (reduced Betti numbers)");
    println!();
    println!("  #  {:<34} {:>6}  result", "check", "cases");
    for (n, o) in report.outcomes.iter().enumerate() {
        let result = if o.first_failure.is_none() { "pass" } else { "FAIL" };
        println!("  {}  {:<34} {:>6}  {result}", n + 1, o.check.name(), o.cases);
    }
    if !report.pairs.is_empty() {
        println!();
        println!("matrix (rows a, columns b; . = all checks pass, digits = failing checks)");
        let bs: Vec<u32> = (2..=b_max).collect();
        let width = Check::ALL.len().max(3);
        print!("{:>5}", "");
        for b in &bs {
            print!(" {:>width$}", format!("b={b}"));
        }
        println!();
        for a in 2..=a_max {
            print!("{:>5}", format!("a={a}"));
            for b in &bs {
                let cell = match report.pairs.iter().find(|p| p.a == a && p.b == *b) {
                    None => String::new(),
                    Some(p) if p.passed.iter().all(|&x| x) => ".".into(),
                    Some(p) => p
                        .passed
                        .iter()
                        .enumerate()
                        .filter(|(_, &ok)| !ok)
                        .map(|(k, _)| (k + 1).to_string())
                        .collect(),
                };
                print!(" {cell:>width$}");
            }
            println!();
        }
    }
    let first = report
        .pairs
        .iter()
        .find_map(|p| {
            let k = p.passed.iter().position(|&ok| !ok)?;
            report.outcomes[k].first_failure.clone().map(|m| (report.outcomes[k].check, m))
        });
    match first {
        None => {
            println!();
            println!("all checks pass");
            Ok(())
        }
        Some((check, m)) => {
            println!();
            println!("first counterexample ({}): {m}", check.name());
            Err(Failure::Mismatch(format!("{}: {m}", check.name())))
        }
    }
}

fn print_certificate(p: &Poset, cert: &RaoCertificate) -> Outcome {
    println!("{}", serde_json::to_string(&cert.json(p)).expect("certificate serializes"));
    let verdict = verify_rao(p, cert)?;
    println!("verified: {}", verdict.is_valid());
    if verdict.is_valid() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("certificate does not verify: {verdict:?}")))
    }
}

fn cmd_rao(words: &[String], search: bool, use_dual: bool, dual_lex: Option<&str>, limits: &Limits) -> Outcome {
    if let Some(exps) = dual_lex {
        let a = Multidegree::new(desc::parse_exponents(exps).map_err(Failure::Usage)?)?;
        let (star, cert) = dual_lex_certificate_with(&a, limits)?;
        return print_certificate(&star, &cert);
    }
    if !search {
        return Err(Failure::Usage("rao needs --search <desc> or --dual-lex a1,a2,...".into()));
    }
    let (_, p) = load(words, limits)?;
    let p = if use_dual { dual(&p) } else { p };
    match search_rao_with(&p, limits)? {
        None => {
            println!("none");
            Ok(())
        }
        Some(cert) => print_certificate(&p, &cert),
    }
}

fn cmd_falling(a: u32, b: u32, length: Option<usize>, count_only: bool, json: bool, limits: &Limits) -> Outcome {
    let chains = falling_chains_with(a, b, length, limits)?;
    if count_only {
        let h = histogram(&chains);
        if json {
            println!("{}", serde_json::to_string(&h).expect("histogram serializes"));
            return Ok(());
        }
        println!("falling chains of P({a},{b})* by length (length i+2 counts reduced rank of H_i)");
        if h.is_empty() {
            println!("none");
        }
        for (len, count) in h {
            println!("length {len}: {count}");
        }
        return Ok(());
    }
    if json {
        println!("{}", serde_json::to_string(&chains).expect("chains serialize"));
        return Ok(());
    }
    for c in &chains {
        println!("{}", c.elements.iter().map(ToString::to_string).collect::<Vec<_>>().join(" > "));
    }
    Ok(())
}

const REFERENCE_ROWS: [(usize, usize, &[usize]); 4] = [
    (2, 6, &[15, 30, 40, 30, 13]),
    (2, 7, &[17, 42, 70, 70, 42, 15]),
    (3, 6, &[1, 1461, 1275, 705, 172]),
    (3, 7, &[1, 3381, 3822, 2940, 1218, 232]),
];

fn cmd_table(reference: bool, csv: bool, limits: &Limits) -> Outcome {
    let mut rows = Vec::new();
    for (i, j, want) in REFERENCE_ROWS {
        let p = proper_product_with(&make_boolean_lattice_with(i, limits)?, &make_boolean_lattice_with(j, limits)?, limits)?;
        let mut got = homology_with(&order_complex_with(&p, limits)?, false, limits)?.betti;
        while got.len() > want.len() && got.last() == Some(&0) {
            got.pop();
        }
        rows.push((format!("B{i}xB{j}"), got, want));
    }
    let bad: Vec<&str> = rows.iter().filter(|(_, g, w)| g != w).map(|(n, _, _)| n.as_str()).collect();
    if csv {
        println!("row,computed{}", if reference { ",expected,match" } else { "" });
        for (name, got, want) in &rows {
            print!("{name},{}", join(got));
            if reference {
                print!(",{},{}", join(want), if got == want { "yes" } else { "no" });
            }
            println!();
        }
    } else {
        println!("non-reduced Betti numbers of the order complex of B_i xp B_j");
        if reference {
            println!("{:<8} {:<30} {:<30} match", "row", "computed", "expected");
        }
        for (name, got, want) in &rows {
            if reference {
                let m = if got == want { "yes" } else { "NO" };
                println!("{name:<8} {:<30} {:<30} {m}", join(got), join(want));
            } else {
                println!("{name:<8} {}", join(got));
            }
        }
    }
    if reference && !bad.is_empty() {
        return Err(Failure::Mismatch(format!("rows differ from the reference: {}", bad.join(", "))));
    }
    Ok(())
}
