use clap::{Args, Parser, Subcommand, ValueEnum};
use congruence_cli::report::SuiteReport;
use congruence_cli::suites::natsuite::{self, NatSuiteConfig};
use congruence_cli::suites::{group, table1};
use congruence_cli::{fixtures, fnspec};
use congruence_core::algebra::{
    enumerate_congruences_with, enumerate_stable_preorders_with, EnumLimits,
};
use congruence_core::arith::{
    check_clause_a, check_clause_b, check_clause_c, check_cp_nat, check_spp_nat,
};
use congruence_core::closure::FamilyElement;
use congruence_core::format::{parse_algebra, parse_subset, parse_upset};
use congruence_core::{
    close, lasso_quotient, latt_suc, preimage_generators, syntactic_cong_up, syntactic_congruence,
    syntactic_preorder, ClosureKind, FiniteAlgebra, LattVariant,
};

#[derive(Parser)]
#[command(name = "congruence", version, about = "Congruence and stable-preorder preservation on finite algebras and the naturals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the congruences and stable preorders of an algebra file.
    Analyze {
        /// Path to an algebra file (see docs/formats.md).
        file: String,
        /// Raise the enumeration carrier bounds.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Syntactic congruence and preorder of a set.
    Syntactic {
        /// `nat` or a path to an algebra file.
        target: String,
        /// The set: an expression like `5+3N` over `nat`, or a comma list
        /// of elements over a finite algebra.
        #[arg(long = "set")]
        set: String,
    },
    /// The closure family generated from a set by preimages.
    Lattice {
        /// `nat` or a path to an algebra file.
        target: String,
        #[arg(long = "set")]
        set: String,
        /// Adjoin the empty set and the universe.
        #[arg(long, conflicts_with = "boolean")]
        bounded: bool,
        /// Close under complement as well.
        #[arg(long)]
        boolean: bool,
        /// Emit the family as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Preservation checks for a function.
    Check {
        /// `nat` or a path to an algebra file.
        target: String,
        /// Over `nat`: `id`, `const:<c>`, `zigzag_g`, `floor_e_fact`,
        /// `poly:<coeffs>` or `@file`. Over an algebra file: a comma list
        /// giving a unary table.
        #[arg(long = "fn")]
        function: String,
        #[arg(long, value_enum, default_value_t = What::Cp)]
        what: What,
        /// Window length for checks over `nat`.
        #[arg(long, default_value_t = 32)]
        window: u64,
        /// Threshold/modulus bound for checks over `nat`, carrier bound
        /// otherwise.
        #[arg(long, default_value_t = 6)]
        bound: u64,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        suite: VerifyArgs,
    },
    /// Print the named example objects.
    Examples,
}

#[derive(Args)]
struct VerifyArgs {
    /// `table1`, `group`, `ring` or `nat`.
    suite: Suite,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// table1: carrier bound (default 4); nat: threshold/modulus bound
    /// (default 6); group/ring: largest cyclic carrier (default 6).
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Table1,
    Group,
    Ring,
    Nat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Cp,
    Spp,
    Arith,
}

fn main() {
    // die quietly when the downstream pager closes the pipe
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Analyze { file, bound } => analyze(&file, bound),
        Command::Syntactic { target, set } => syntactic(&target, &set),
        Command::Lattice { target, set, bounded, boolean, json } => {
            lattice(&target, &set, bounded, boolean, json)
        }
        Command::Check { target, function, what, window, bound } => {
            check(&target, &function, what, window, bound)
        }
        Command::Verify { suite } => verify(suite),
        Command::Examples => {
            examples();
            Ok(0)
        }
    }
}

fn load_algebra(path: &str) -> Result<FiniteAlgebra, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    parse_algebra(&text).map_err(|e| format!("{path}:{e}"))
}

fn analyze(path: &str, bound: Option<usize>) -> Result<i32, String> {
    let alg = load_algebra(path)?;
    let n = alg.carrier_size();
    let mut limits = EnumLimits::default();
    if let Some(b) = bound {
        limits.max_congruence_carrier = b;
        limits.max_preorder_carrier = b;
    }
    println!("carrier size {n}, {} operations", alg.operations().len());
    let congruences = enumerate_congruences_with(&alg, &limits).map_err(|e| e.to_string())?;
    println!("congruences: {}", congruences.len());
    for c in &congruences {
        println!("  index {}: blocks {:?}", c.index(), c.blocks());
    }
    let preorders = enumerate_stable_preorders_with(&alg, &limits).map_err(|e| e.to_string())?;
    println!("stable preorders: {}", preorders.len());
    let congruence_count = preorders.iter().filter(|p| p.is_symmetric()).count();
    println!("  of which congruences: {congruence_count}");
    for p in &preorders {
        println!("  pairs {:?}", p.pairs());
    }
    Ok(0)
}

fn syntactic(target: &str, set: &str) -> Result<i32, String> {
    if target == "nat" {
        let upset = parse_upset(set).map_err(|e| e.to_string())?;
        println!("{}", syntactic_cong_up(&upset));
        return Ok(0);
    }
    let alg = load_algebra(target)?;
    let subset = parse_subset(set, alg.carrier_size()).map_err(|e| e.to_string())?;
    let cong = syntactic_congruence(&alg, &subset);
    let preorder = syntactic_preorder(&alg, &subset);
    println!("syntactic congruence: index {}, blocks {:?}", cong.index(), cong.blocks());
    println!("syntactic preorder pairs: {:?}", preorder.pairs());
    Ok(0)
}

fn lattice(target: &str, set: &str, bounded: bool, boolean: bool, json: bool) -> Result<i32, String> {
    if target == "nat" {
        let upset = parse_upset(set).map_err(|e| e.to_string())?;
        let variant = if boolean {
            LattVariant::Boolean
        } else if bounded {
            LattVariant::Bounded
        } else {
            LattVariant::Plain
        };
        let family = latt_suc(&upset, variant);
        if json {
            println!("{}", serde_json::to_string_pretty(&family.export("nat")).unwrap());
        } else {
            println!("{} members from {} generators", family.len(), family.generator_tags().len());
            for (i, m) in family.members().iter().enumerate() {
                println!("  {m}  ⟵  {}", family.witness(i, 6));
            }
        }
        return Ok(0);
    }
    let alg = load_algebra(target)?;
    let subset = parse_subset(set, alg.carrier_size()).map_err(|e| e.to_string())?;
    let kind = if boolean {
        ClosureKind::Boolean
    } else if bounded {
        ClosureKind::BoundedLattice
    } else {
        ClosureKind::Lattice
    };
    let family = close(preimage_generators(&alg, &subset), kind);
    if json {
        let universe = format!("carrier:{}", alg.carrier_size());
        println!("{}", serde_json::to_string_pretty(&family.export(&universe)).unwrap());
    } else {
        println!("{} members from {} generators", family.len(), family.generator_tags().len());
        for (i, m) in family.members().iter().enumerate() {
            println!("  {}  ⟵  {}", m.render(), family.witness(i, 6));
        }
        // saturated-family comparison, reported as data
        if kind == ClosureKind::Boolean {
            let cong = syntactic_congruence(&alg, &subset);
            let saturated = 1u64 << cong.index();
            println!(
                "boolean closure has {} members of {} saturated sets for the syntactic congruence",
                family.len(),
                saturated
            );
        }
    }
    Ok(0)
}

fn check(target: &str, function: &str, what: What, window: u64, bound: u64) -> Result<i32, String> {
    if target == "nat" {
        let f = fnspec::resolve(function, window).map_err(|e| e.to_string())?;
        return match what {
            What::Cp => match check_cp_nat(&f, bound, bound).map_err(|e| e.to_string())? {
                None => {
                    println!("{}: congruence preserving on [0,{window}) at bounds ({bound},{bound})", f.label());
                    Ok(0)
                }
                Some(ce) => {
                    println!("{}: NOT congruence preserving — {ce}", f.label());
                    Ok(1)
                }
            },
            What::Spp => match check_spp_nat(&f, bound, bound).map_err(|e| e.to_string())? {
                None => {
                    println!("{}: stable-preorder preserving on [0,{window}) at bounds ({bound},{bound})", f.label());
                    Ok(0)
                }
                Some(ce) => {
                    println!("{}: NOT stable-preorder preserving — {ce}", f.label());
                    Ok(1)
                }
            },
            What::Arith => {
                let a = check_clause_a(&f);
                let b_strict = check_clause_b(&f, false);
                let b_flat = check_clause_b(&f, true);
                let c = check_clause_c(&f);
                match a {
                    None => println!("clause (a) divisibility: holds"),
                    Some((x, y)) => println!("clause (a) divisibility: fails at ({x},{y})"),
                }
                println!("clause (b) growth: {}", if b_strict { "holds" } else { "fails" });
                println!("clause (b-flat) constant-or-growth: {}", if b_flat { "holds" } else { "fails" });
                println!("clause (c) monotone: {}", if c { "holds" } else { "fails" });
                Ok(i32::from(!(a.is_none() && b_flat && c)))
            }
        };
    }
    let alg = load_algebra(target)?;
    let n = alg.carrier_size();
    let table: Vec<usize> = function
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad table entry: {e}")))
        .collect::<Result<_, _>>()?;
    let limits = EnumLimits {
        max_congruence_carrier: (bound as usize).max(n),
        max_preorder_carrier: (bound as usize).max(n),
    };
    match what {
        What::Cp => {
            let witness =
                congruence_core::algebra::is_congruence_preserving_with(&alg, 1, &table, &limits)
                    .map_err(|e| e.to_string())?;
            match witness {
                None => {
                    println!("congruence preserving");
                    Ok(0)
                }
                Some(c) => {
                    println!("NOT congruence preserving, violated blocks {:?}", c.blocks());
                    Ok(1)
                }
            }
        }
        What::Spp => {
            let witness = congruence_core::algebra::is_stable_preorder_preserving_with(
                &alg, 1, &table, &limits,
            )
            .map_err(|e| e.to_string())?;
            match witness {
                None => {
                    println!("stable-preorder preserving");
                    Ok(0)
                }
                Some(p) => {
                    println!("NOT stable-preorder preserving, violated pairs {:?}", p.pairs());
                    Ok(1)
                }
            }
        }
        What::Arith => Err("clause checks apply to `nat` only".to_string()),
    }
}

fn verify(args: VerifyArgs) -> Result<i32, String> {
    let report = match args.suite {
        Suite::Table1 => {
            let bound = args.bound.unwrap_or(4) as usize;
            table1::run(args.seed, bound, 200)
        }
        Suite::Group => {
            let bound = args.bound.unwrap_or(6) as usize;
            let mut verdicts = Vec::new();
            let start = std::time::Instant::now();
            for n in 2..=bound {
                let r = group::verify_group_collapse(&fixtures::cyclic_group(n))
                    .map_err(|e| e.to_string())?;
                verdicts.extend(r.verdicts);
            }
            let r = group::verify_group_collapse(&fixtures::symmetric_group_3())
                .map_err(|e| e.to_string())?;
            verdicts.extend(r.verdicts);
            SuiteReport::new("group", Some(args.seed), args.bound, verdicts, start.elapsed())
        }
        Suite::Ring => {
            let bound = args.bound.unwrap_or(6) as usize;
            let mut verdicts = Vec::new();
            let start = std::time::Instant::now();
            for n in 2..=bound {
                let r = group::verify_ring_collapse(&fixtures::modular_ring(n))
                    .map_err(|e| e.to_string())?;
                verdicts.extend(r.verdicts);
            }
            SuiteReport::new("ring", Some(args.seed), args.bound, verdicts, start.elapsed())
        }
        Suite::Nat => {
            let bound = args.bound.unwrap_or(6);
            natsuite::run(NatSuiteConfig {
                a_max: bound,
                k_max: bound,
                seed: args.seed,
                ..NatSuiteConfig::default()
            })
        }
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    Ok(i32::from(!report.passed))
}

fn examples() {
    println!("zigzag source and approximant on [0,24):");
    let f = congruence_core::arith::zigzag_f_window(24);
    let g = congruence_core::arith::zigzag_g(24);
    for x in 0..24u64 {
        println!("  {x:>2}  f={:<30} g={}", f.value(x), g.value(x));
    }
    println!();
    println!("floor of e·x! on [0,14):");
    let e = congruence_core::arith::floor_e_factorial_window(14);
    for x in 0..14u64 {
        println!("  {x:>2}  {}", e.value(x));
    }
    println!();
    println!("lasso quotient with threshold 2 and modulus 3 (carrier 5):");
    let alg = lasso_quotient(2, 3);
    for op in alg.operations() {
        println!("  {} (arity {}): {:?}", op.name, op.arity, op.table);
    }
    println!();
    println!("syntactic congruences of progressions:");
    for (a, k) in [(5u64, 3u64), (1, 3), (0, 4), (7, 2)] {
        let set = congruence_core::UpSet::progression(a, k);
        println!("  {}+{k}N  ⇒  {}", a, syntactic_cong_up(&set));
    }
}
