use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use sperner::bigcomb::{parse_bignat, BigNat};
use sperner::bits::Subset;
use sperner::embedding::{min_embedding_dimension, DEFAULT_SOLVER_CAP};
use sperner::error::{Error, Result};
use sperner::genset::{gmin_bruteforce, gmin_power, materialize, parse_lattice_spec, LatticeSpec, DEFAULT_BRUTE_CAP};
use sperner::oracle::{self, GammaReading, OracleConfig};
use sperner::poset::{parse_poset_spec, DEFAULT_LATTICE_CAP};
use sperner::sperner::{Kind, Method, PosetProfile};
use sperner::tables::{self, TableId, TableSpec};
use sperner::witness::{self, certify, dump_line, Certificate, UnrelatedFamily};

#[derive(Parser, Debug)]
#[command(name = "sperner", version, about = "Sperner numbers of posets and generating sets of lattice powers")]
struct Cli {
    /// Emit CSV instead of aligned text.
    #[arg(long, global = true)]
    csv: bool,
    /// Override the size cap of the engine the command uses.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Abort exhaustive searches after this many seconds.
    #[arg(long, global = true, value_name = "SEC")]
    time_budget: Option<f64>,
    /// Write witness families to this file, one copy per line.
    #[arg(long, global = true, value_name = "PATH")]
    dump: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce a reference table: t1, adjoints, chain4, v-small, v-big, w-big, gmin.
    Table {
        id: String,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
    /// Sp(U, n). Posets: v, w, singleton, chain:<t>, antichain:<m>,
    /// powerset:<p>, dual:<spec>, or a poset file.
    Sp { poset: String, n: u64 },
    /// Asp(U, k); k accepts forms like 2023 or 3e606.
    Asp { poset: String, k: String },
    /// Minimum generating-set size. Lattices: dnv, dnw, chain:<m> (m
    /// elements), dn:<poset>, a poset file, or power:<lattice>:<k>.
    Gmin {
        lattice: String,
        /// Search the materialized lattice instead of using the power formula.
        #[arg(long)]
        brute: bool,
    },
    /// Build the explicit family of unrelated copies: w, v, or a bounded poset.
    Witness {
        pattern: String,
        n: usize,
        /// Skip certification (with --dump, copies are streamed).
        #[arg(long)]
        no_certify: bool,
    },
    /// Independent brute-force checks.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Minimal Boolean embedding dimension of a poset.
    Dim { poset: String },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Exact Sp(U, n) by maximum clique over all copies (n <= 5).
    Sp {
        poset: String,
        n: usize,
        /// Allow n = 6.
        #[arg(long)]
        allow_n6: bool,
    },
    /// |Gamma(X)| for X given as e.g. 1,3 or {1,3} (empty for the empty set).
    Gamma {
        set: String,
        n: usize,
        /// Use the "equals" reading of the defining condition.
        #[arg(long)]
        equal: bool,
    },
    /// Disjointness of Gamma classes of incomparable sets (n <= 6).
    GammaCheck { n: usize },
    /// Where g0(x) = (n+2x) x! (n-1-x)! is minimal on [n-1].
    G0 { n: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Table { id, from, to } => {
            let id: TableId = id.parse()?;
            let range = match (from, to) {
                (None, None) => None,
                (Some(a), Some(b)) if a <= b => Some((*a, *b)),
                _ => return Err(Error::BadInput("--from and --to must be given together, from <= to".into())),
            };
            let t = tables::build(&TableSpec { id, range })?;
            print!("{}", if cli.csv { t.render_csv() } else { t.render_plain() });
        }
        Command::Sp { poset, n } => {
            let profile = profile(cli, poset)?;
            let r = profile.sp(*n)?;
            let collapsed = r.kind == Kind::Exact && is_bracket_route(r.method);
            report(cli, &r.lo, &r.hi, r.method, collapsed);
        }
        Command::Asp { poset, k } => {
            let profile = profile(cli, poset)?;
            let (lo, hi, m) = profile.asp(&parse_bignat(k)?)?;
            report(cli, &lo.into(), &hi.into(), m, lo == hi && is_bracket_route(m));
        }
        Command::Gmin { lattice, brute } => gmin(cli, lattice, *brute)?,
        Command::Witness { pattern, n, no_certify } => witness_cmd(cli, pattern, *n, *no_certify)?,
        Command::Oracle { which } => oracle_cmd(cli, which)?,
        Command::Dim { poset } => {
            let u = parse_poset_spec(poset)?;
            let (p, f) = min_embedding_dimension(&u, cli.cap.unwrap_or(DEFAULT_SOLVER_CAP))?;
            let images: Vec<String> = f.images.iter().map(|s| s.to_string()).collect();
            if cli.csv {
                println!("dimension,length,bounded\n{p},{},{}", u.length(), u.is_bounded());
            } else {
                println!("{p}");
                println!("length {}, {}", u.length(), if u.is_bounded() { "bounded" } else { "unbounded" });
                println!("embedding {}", images.join(" "));
            }
        }
    }
    Ok(())
}

fn profile(cli: &Cli, spec: &str) -> Result<PosetProfile> {
    PosetProfile::with_cap(&parse_poset_spec(spec)?, cli.cap.unwrap_or(DEFAULT_SOLVER_CAP))
}

fn is_bracket_route(m: Method) -> bool {
    matches!(m, Method::WBracket | Method::VBracket)
}

fn report(cli: &Cli, lo: &BigNat, hi: &BigNat, route: Method, collapsed: bool) {
    if cli.csv {
        let kind = if lo == hi { "exact" } else { "bracket" };
        println!("lo,hi,kind,route\n{lo},{hi},{kind},{route}");
        return;
    }
    let value = if lo == hi { lo.to_string() } else { format!("{lo}..{hi}") };
    let suffix = if collapsed { ", collapsed" } else { "" };
    println!("{value} (route: {route}{suffix})");
}

fn gmin(cli: &Cli, lattice: &str, brute: bool) -> Result<()> {
    let spec = parse_lattice_spec(lattice)?;
    if !brute {
        if let LatticeSpec::Power(d, k) = &spec {
            let r = gmin_power(d, k)?;
            if cli.csv {
                let kind = if r.kind == Kind::Exact { "exact" } else { "bracket" };
                println!("lo,hi,kind,route\n{},{},{kind},{}", r.lo, r.hi, r.route);
            } else {
                println!("{r}");
            }
            return Ok(());
        }
    }
    let d = materialize(&spec, DEFAULT_LATTICE_CAP)?;
    let (size, set) = gmin_bruteforce(d.lattice(), cli.cap.unwrap_or(DEFAULT_BRUTE_CAP))?;
    let set: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    if cli.csv {
        println!("gmin,route,witness\n{size},{},{}", Method::BruteForce, set.join(" "));
    } else {
        println!("{size} (route: {})", Method::BruteForce);
        println!("generating set: {}", set.join(" "));
    }
    Ok(())
}

fn open_dump(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::BadInput(format!("cannot create {}: {e}", path.display())))
}

fn io_err(e: std::io::Error) -> Error {
    Error::BadInput(format!("write failed: {e}"))
}

fn visit_family(pattern: &str, n: usize, f: &mut dyn FnMut(Vec<Subset>)) -> Result<sperner::poset::Poset> {
    match pattern.to_ascii_lowercase().as_str() {
        "w" => {
            witness::visit_w(n, f)?;
            Ok(sperner::poset::Poset::w())
        }
        "v" => {
            witness::visit_v(n, f)?;
            Ok(sperner::poset::Poset::v())
        }
        _ => {
            let u = parse_poset_spec(pattern)?;
            if !u.is_bounded() {
                return Err(Error::Hypothesis("explicit families are built for w, v, and bounded posets".into()));
            }
            let prof = PosetProfile::new(&u)?;
            witness::visit_bounded(&prof, n, f)?;
            Ok(u)
        }
    }
}

fn witness_cmd(cli: &Cli, pattern: &str, n: usize, no_certify: bool) -> Result<()> {
    if no_certify {
        let mut count = 0u64;
        let mut out = cli.dump.as_deref().map(open_dump).transpose()?;
        let mut failed = None;
        visit_family(pattern, n, &mut |c| {
            count += 1;
            if let Some(w) = out.as_mut() {
                if let Err(e) = writeln!(w, "{}", dump_line(&c)) {
                    failed.get_or_insert(e);
                }
            }
        })?;
        if let Some(e) = failed {
            return Err(io_err(e));
        }
        if let Some(mut w) = out {
            w.flush().map_err(io_err)?;
        }
        println!("copies: {count}");
        return Ok(());
    }
    let mut copies = Vec::new();
    let u = visit_family(pattern, n, &mut |c| copies.push(c))?;
    let fam = UnrelatedFamily { ground_size: n, pattern: u, copies };
    write_dump(cli, &fam)?;
    println!("copies: {}", fam.len());
    print_certificate(&certify(&fam))
}

fn write_dump(cli: &Cli, fam: &UnrelatedFamily) -> Result<()> {
    if let Some(path) = &cli.dump {
        let mut w = open_dump(path)?;
        w.write_all(fam.dump().as_bytes()).map_err(io_err)?;
        w.flush().map_err(io_err)?;
    }
    Ok(())
}

fn print_certificate(c: &Certificate) -> Result<()> {
    match c {
        Certificate::Verified { copies } => println!("certificate: verified ({copies} copies, all pairs)"),
        Certificate::Sampled { copies, pairs } => {
            println!("certificate: sampled ({copies} copies, {pairs} random pairs)")
        }
        Certificate::Failed(v) => {
            println!("certificate: FAILED {v:?}");
            return Err(Error::Hypothesis("family failed certification".into()));
        }
    }
    Ok(())
}

fn parse_subset(s: &str) -> Result<Subset> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    let elems = inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().ok().filter(|&e| (1..=128).contains(&e)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::BadInput(format!("bad subset {s:?}")))?;
    Ok(Subset::from_elements(elems))
}

fn oracle_cmd(cli: &Cli, which: &OracleCommand) -> Result<()> {
    match which {
        OracleCommand::Sp { poset, n, allow_n6 } => {
            let u = parse_poset_spec(poset)?;
            let mut cfg = OracleConfig::default();
            if *allow_n6 {
                cfg = cfg.with_n6();
            }
            if let Some(cap) = cli.cap {
                cfg.max_poset = cap;
            }
            cfg.time_budget = cli.time_budget.map(Duration::from_secs_f64);
            let r = oracle::sp_exhaustive(&u, *n, cfg)?;
            write_dump(cli, &r.witness)?;
            if r.exact {
                println!("{}", r.value);
            } else {
                println!("{} (lower bound only: time budget exhausted)", r.value);
            }
            println!("copies searched: {}", r.copies);
            print_certificate(&certify(&r.witness))?;
        }
        OracleCommand::Gamma { set, n, equal } => {
            let x = parse_subset(set)?;
            let closed = oracle::gamma(x, *n)?;
            println!("{closed}");
            if *n <= 8 {
                let reading = if *equal { GammaReading::Equal } else { GammaReading::Subset };
                println!("enumerated: {}", oracle::gamma_enumerate(x, *n, reading)?);
            }
        }
        OracleCommand::GammaCheck { n } => {
            let ok = oracle::gamma_disjointness_check(*n)?;
            println!("{}", if ok { "disjoint" } else { "NOT disjoint" });
            if !ok {
                return Err(Error::Hypothesis("found overlapping classes".into()));
            }
        }
        OracleCommand::G0 { n } => {
            let c = oracle::g0_argmin_check(*n)?;
            println!("argmin {} holds {} M = {}", c.argmin, c.holds, c.minimum);
        }
    }
    Ok(())
}
