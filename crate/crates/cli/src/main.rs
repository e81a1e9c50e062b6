use std::path::Path;
use std::process::ExitCode;

use categorify::graph::{
    dichromatic, dichromatic_dg, enhanced_homology, parse_graph, pn_homology, qn_homology, specialize_pn,
    specialize_qn, tutte, Multigraph, Variant,
};
use categorify::homfly::homfly_g;
use categorify::homology::{HomologyTable, Mode};
use categorify::khovanov::{
    jones_polynomial, jones_unnormalized, kauffman_bracket, khovanov_homology_with, stable_poincare, width_report,
    KhOptions,
};
use categorify::link::{braid_closure, parse_braid, parse_pd, Diagram};
use categorify::poly::LaurentPoly;
use categorify::verify::{run_suite, VerifyError, VerifyOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Crossings beyond this need `--slow`.
const FAST_CROSSINGS: usize = 12;

#[derive(Parser)]
#[command(name = "categorify", version, about = "Exact link and graph invariants and their homologies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kauffman bracket of a braid closure or PD code.
    Bracket(LinkArgs),
    /// Jones polynomial (unnormalized by default).
    Jones {
        #[command(flatten)]
        link: LinkArgs,
        /// Divide by q + q^-1.
        #[arg(long)]
        normalized: bool,
    },
    /// Integral Khovanov homology.
    Kh(KhArgs),
    /// HOMFLYPT invariants F, G and the specializations G_n.
    Homfly(HomflyArgs),
    /// Graph polynomials and graph homologies.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Normalized Poincaré polynomials of T(m, n) and their agreement.
    Stable {
        m: usize,
        #[arg(required = true)]
        ns: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct LinkArgs {
    /// A braid word such as "2: 1 1 1", a PD code, or a file holding either.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Allow diagrams beyond twelve crossings.
    #[arg(long)]
    slow: bool,
}

#[derive(Args)]
struct KhArgs {
    #[command(flatten)]
    link: LinkArgs,
    /// Print the homology table (the default view).
    #[arg(long, group = "view")]
    table: bool,
    /// Print the Poincaré polynomial in t and q.
    #[arg(long, group = "view")]
    poincare: bool,
    /// Print the occupied diagonals and the homological width.
    #[arg(long, group = "view")]
    width: bool,
    /// Restrict to quantum degrees a..b.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    jwindow: Option<(i64, i64)>,
    /// Restrict to homological degrees up to this one.
    #[arg(long, allow_hyphen_values = true)]
    imax: Option<i64>,
    /// Ranks only, skipping torsion.
    #[arg(long)]
    rank_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum HomflyVars {
    /// F in q and t.
    Qt,
    /// G in q and a = q√α.
    At,
}

#[derive(Args)]
struct HomflyArgs {
    braid: String,
    #[arg(long, value_enum, default_value_t = HomflyVars::Qt)]
    var: HomflyVars,
    /// Also print G_n for these n.
    #[arg(long)]
    specialize: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Dichromatic, Tutte and specialized polynomials.
    Poly(GraphPolyArgs),
    /// Homology of the P_n, Q_n or enhanced-state complex.
    Kh(GraphKhArgs),
}

#[derive(Args)]
struct GraphPolyArgs {
    /// A graph file or inline text such as "v 3 / e 1 2 / e 2 3 / e 1 3".
    input: String,
    #[arg(long, group = "poly")]
    dichromatic: bool,
    #[arg(long, group = "poly")]
    tutte: bool,
    #[arg(long, group = "poly", value_name = "N")]
    pn: Option<u32>,
    #[arg(long, group = "poly", value_name = "N", requires = "jwindow")]
    qn: Option<i64>,
    #[arg(long, group = "poly")]
    dg: bool,
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    jwindow: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoryArg {
    Pn,
    Qn,
    Enhanced,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Zero,
    Xn,
}

#[derive(Args)]
struct GraphKhArgs {
    input: String,
    #[arg(long, value_enum)]
    theory: TheoryArg,
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long, value_enum, default_value_t = VariantArg::Zero)]
    variant: VariantArg,
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    jwindow: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    /// Include the computations beyond twelve crossings.
    #[arg(long)]
    slow: bool,
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    seed: u64,
    /// Torus knot for the low-degree table (with --q).
    #[arg(long, requires = "q")]
    p: Option<usize>,
    #[arg(long, requires = "p")]
    q: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad lower bound `{a}`"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad upper bound `{b}`"))?;
    if a > b {
        return Err(format!("empty window {a}..{b}"));
    }
    Ok((a, b))
}

/// A failure, with the exit status it maps to.
enum Failure {
    Usage(String),
    Computation(String),
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::UnknownSuite(_) | VerifyError::UnknownCriterion(_) => Failure::Usage(e.to_string()),
            e => Failure::Computation(e.to_string()),
        }
    }
}

fn computation(e: impl std::fmt::Display) -> Failure {
    Failure::Computation(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_input(input: &str) -> Result<String, Failure> {
    if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))
    } else {
        Ok(input.to_string())
    }
}

fn load_diagram(args: &LinkArgs) -> Result<Diagram, Failure> {
    let text = read_input(&args.input)?;
    let d = if text.trim_start().starts_with(['X', 'x']) {
        parse_pd(&text).map_err(usage)?
    } else {
        braid_closure(&parse_braid(text.trim()).map_err(usage)?)
    };
    let n = d.crossing_count();
    if n > FAST_CROSSINGS {
        if !args.slow {
            return Err(usage(format!("{n} crossings: pass --slow to compute beyond {FAST_CROSSINGS}")));
        }
        eprintln!("slow tier: {n} crossings, {} resolutions held in memory", 1u64 << n);
    }
    Ok(d)
}

fn load_graph(input: &str) -> Result<Multigraph, Failure> {
    parse_graph(&read_input(input)?).map_err(usage)
}

fn print_poly(p: &LaurentPoly, format: Format) {
    match format {
        Format::Json => println!("{}", p.to_json()),
        _ => println!("{p}"),
    }
}

fn print_table(t: &HomologyTable, format: Format) {
    match format {
        Format::Json => println!("{}", t.to_json()),
        Format::Csv => print!("{}", t.to_csv()),
        Format::Pretty => print!("{}", t.to_pretty()),
    }
}

fn kh(args: &KhArgs) -> Result<(), Failure> {
    let d = load_diagram(&args.link)?;
    let mode = if args.rank_only { Mode::RankOnly } else { Mode::Integral };
    let opts = KhOptions { jwindow: args.jwindow, imax: args.imax, mode };
    let t = khovanov_homology_with(&d, &opts).map_err(computation)?;
    let format = args.link.format;
    if args.poincare {
        print_poly(&t.poincare(), format);
    } else if args.width {
        let w = width_report(&t).map_err(computation)?;
        match format {
            Format::Json => println!(
                "{}",
                json!({"diagonals": w.diagonals, "a_min": w.a_min, "a_max": w.a_max, "width": w.width, "thin": w.thin})
            ),
            _ => {
                let diags: Vec<String> = w.diagonals.iter().map(|a| a.to_string()).collect();
                println!("diagonals j-2i: {}", diags.join(" "));
                println!("width {} ({})", w.width, if w.thin { "thin" } else { "thick" });
            }
        }
    } else {
        print_table(&t, format);
    }
    Ok(())
}

fn homfly(args: &HomflyArgs) -> Result<(), Failure> {
    let b = parse_braid(read_input(&args.braid)?.trim()).map_err(usage)?;
    let v = homfly_g(&b);
    let main = match args.var {
        HomflyVars::Qt => ("F", v.f.to_string()),
        HomflyVars::At => ("G", v.g().map_err(computation)?.to_string()),
    };
    let mut gn = Vec::new();
    for &n in &args.specialize {
        if n == 0 {
            return Err(usage("G_n needs n ≥ 1"));
        }
        gn.push((n, v.specialize(n).map_err(computation)?));
    }
    match args.format {
        Format::Json => {
            let gs: serde_json::Map<String, serde_json::Value> =
                gn.iter().map(|(n, p)| (n.to_string(), p.to_json())).collect();
            println!("{}", json!({ main.0: main.1, "omega": v.omega, "G_n": gs }));
        }
        _ => {
            println!("{} = {}", main.0, main.1);
            println!("omega = {}", v.omega);
            for (n, p) in gn {
                println!("G_{n} = {p}");
            }
        }
    }
    Ok(())
}

fn graph_poly(args: &GraphPolyArgs) -> Result<(), Failure> {
    let g = load_graph(&args.input)?;
    if args.tutte {
        print_poly(&tutte(&g).map_err(computation)?, args.format);
    } else if let Some(n) = args.pn {
        if n == 0 {
            return Err(usage("--pn needs N ≥ 1"));
        }
        print_poly(&specialize_pn(&g, n), args.format);
    } else if let Some(n) = args.qn {
        let w = args.jwindow.ok_or_else(|| usage("--qn needs --jwindow"))?;
        print_poly(&specialize_qn(&g, n, w).map_err(usage)?, args.format);
    } else if args.dg {
        let d = dichromatic_dg(&g);
        match args.format {
            Format::Json => println!("{}", json!(d.to_string())),
            _ => println!("{d}"),
        }
    } else {
        print_poly(&dichromatic(&g), args.format);
    }
    Ok(())
}

fn graph_kh(args: &GraphKhArgs) -> Result<(), Failure> {
    let g = load_graph(&args.input)?;
    let t = match args.theory {
        TheoryArg::Pn => {
            let variant = match args.variant {
                VariantArg::Zero => Variant::Zero,
                VariantArg::Xn => Variant::XPower,
            };
            if args.n == 0 {
                return Err(usage("P_n needs n ≥ 1"));
            }
            let t = pn_homology(&g, args.n, variant).map_err(computation)?;
            match args.jwindow {
                Some((lo, hi)) => {
                    let mut w = HomologyTable::new();
                    for ((i, j), grp) in t.iter().filter(|((_, j), _)| lo <= *j && *j <= hi) {
                        w.insert(i, j, grp.clone());
                    }
                    w
                }
                None => t,
            }
        }
        theory => {
            let w = args.jwindow.ok_or_else(|| usage("this theory needs --jwindow a..b"))?;
            if theory == TheoryArg::Qn {
                if !(1..=2).contains(&args.n) {
                    return Err(usage(format!("Q_n needs n ∈ {{1, 2}}, got {}", args.n)));
                }
                qn_homology(&g, args.n, w).map_err(computation)?
            } else {
                enhanced_homology(&g, w).map_err(computation)?
            }
        }
    };
    print_table(&t, args.format);
    Ok(())
}

fn stable(m: usize, ns: &[usize], format: Format) -> Result<(), Failure> {
    if m < 2 {
        return Err(usage(format!("stable polynomials need m ≥ 2, got {m}")));
    }
    let rep = stable_poincare(m, ns).map_err(computation)?;
    match format {
        Format::Json => {
            let polys: Vec<_> = rep.polys.iter().map(|(n, p)| json!({"n": n, "poincare": p.to_json()})).collect();
            let agree: Vec<_> = rep
                .agreements
                .iter()
                .map(|(a, b, bound, ok)| json!({"n": a, "next": b, "below_t": bound, "agree": ok}))
                .collect();
            println!("{}", json!({"m": m, "polynomials": polys, "agreements": agree}));
        }
        _ => {
            for (n, p) in &rep.polys {
                println!("P_{{{m},{n}}} = {p}");
            }
            for (a, b, bound, ok) in &rep.agreements {
                println!("P_{{{m},{a}}} vs P_{{{m},{b}}} below t^{bound}: {}", if *ok { "agree" } else { "differ" });
            }
        }
    }
    Ok(())
}

/// Returns whether every check passed.
fn verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let torus = args.p.zip(args.q);
    let opts = VerifyOptions { slow: args.slow, seed: args.seed, torus };
    let reports = run_suite(&args.suite, &opts)?;
    match args.format {
        Format::Json => println!("{}", serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect())),
        _ => {
            for r in &reports {
                print!("{r}");
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("CATEGORIFY_THREADS") else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| usage(format!("CATEGORIFY_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(usage)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Bracket(a) => print_poly(&kauffman_bracket(&load_diagram(a)?), a.format),
        Command::Jones { link, normalized } => {
            let d = load_diagram(link)?;
            let p = if *normalized { jones_polynomial(&d) } else { jones_unnormalized(&d) };
            print_poly(&p, link.format);
        }
        Command::Kh(a) => kh(a)?,
        Command::Homfly(a) => homfly(a)?,
        Command::Graph { command: GraphCommand::Poly(a) } => graph_poly(a)?,
        Command::Graph { command: GraphCommand::Kh(a) } => graph_kh(a)?,
        Command::Stable { m, ns, format } => stable(*m, ns, *format)?,
        Command::Verify(a) => return verify(a),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `categorify --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Computation(msg)) => {
            eprintln!("computation failed: {msg}");
            ExitCode::from(1)
        }
    }
}
