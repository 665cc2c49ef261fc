use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use braceforge::catalogue::{self, named_group};
use braceforge::constructions::{self, ExactFactorization};
use braceforge::enumeration::{self, DEFAULT_ORDER_BOUND, LONG_RUN_ORDER_BOUND};
use braceforge::group::{automorphism_group, homomorphisms, FiniteGroup};
use braceforge::rings::{self, NilpotentAlgebra};
use braceforge::{io, structure, EnumerationError, RingError, SkewBrace};

#[derive(Parser, Debug)]
#[command(name = "braceforge", version, about = "Build, verify and enumerate finite skew braces")]
struct Cli {
    /// Worker threads for the enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a brace file and print a structural summary.
    Verify { path: PathBuf },
    /// Count skew braces of one order by additive and multiplicative type.
    Census {
        order: Option<usize>,
        #[arg(long = "order", conflicts_with = "order")]
        order_flag: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Allow orders up to the full catalogue.
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a brace with one of the constructions and write it as a brace file.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        /// Index into the list of homomorphisms `left → Aut(right)` (semidirect).
        #[arg(long)]
        action: Option<usize>,
        /// Brace file (sysak).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Algebra specification file (circle, poly).
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Use `tF_q[t]/(t^k)` when no algebra file is given.
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Which polynomial-function brace to build.
        #[arg(long, value_enum, default_value_t = PolyVariant::Additive)]
        variant: PolyVariant,
        /// Map tables, one per line, zero map first (nearring).
        #[arg(long)]
        maps: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regular subgroups of the holomorph of the cyclic group of order p^k.
    Cyclic { p: usize, k: u32 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Rows,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Trivial,
    Factorization,
    Semidirect,
    Wreath,
    Sysak,
    Circle,
    Nearring,
    Poly,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolyVariant {
    Additive,
    Circle,
}

/// Failure classes, each with its own exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Validation(String),
    Resource(String),
    Parse(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Parse(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Validation(m) | Failure::Resource(m) | Failure::Parse(m) => m,
        }
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::OrderBoundExceeded { .. } | EnumerationError::CatalogueMissing(_) => Failure::Resource(e.to_string()),
            EnumerationError::BadCatalogue { .. } => Failure::Parse(e.to_string()),
            EnumerationError::Invalid(_) => Failure::Validation(e.to_string()),
        }
    }
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        match e {
            RingError::TooLarge { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

fn validation(e: impl std::fmt::Display) -> Failure {
    Failure::Validation(e.to_string())
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn group_arg(name: &Option<String>, flag: &str) -> Result<FiniteGroup, Failure> {
    let name = name.as_deref().ok_or_else(|| Failure::Usage(format!("--{flag} is required")))?;
    named_group(name).ok_or_else(|| Failure::Usage(format!("unknown group {name:?}")))
}

fn load_brace(path: &PathBuf) -> Result<SkewBrace, Failure> {
    let (add, mul) = io::parse_brace(&read(path)?).map_err(|e| Failure::Parse(e.to_string()))?;
    braceforge::verify_skew_brace(&add, &mul).map_err(validation)
}

fn type_name(g: &FiniteGroup) -> String {
    catalogue::groups_of_order(g.order())
        .ok()
        .and_then(|cat| catalogue::identify(&cat, g).map(|i| cat[i].name.clone()))
        .unwrap_or_else(|| format!("order {}", g.order()))
}

fn lambda_law(b: &SkewBrace) -> Result<(), String> {
    let n = b.order();
    for x in 0..n {
        for y in 0..n {
            let xy = b.circ(x, y);
            if let Some(t) = (0..n).find(|&t| b.lambda(xy, t) != b.lambda(x, b.lambda(y, t))) {
                return Err(format!("λ_(a∘b) != λ_a λ_b at a={x}, b={y}, c={t}"));
            }
        }
    }
    Ok(())
}

fn mu_law(b: &SkewBrace) -> Result<(), String> {
    let n = b.order();
    for x in 0..n {
        for y in 0..n {
            let xy = b.circ(x, y);
            if let Some(t) = (0..n).find(|&t| b.mu(xy, t) != b.mu(y, b.mu(x, t))) {
                return Err(format!("μ_(a∘b) != μ_b μ_a at a={x}, b={y}, c={t}"));
            }
        }
    }
    Ok(())
}

fn report(b: &SkewBrace) -> Result<String, Failure> {
    lambda_law(b).map_err(Failure::Validation)?;
    mu_law(b).map_err(Failure::Validation)?;
    let s = structure::summarize(b);
    let level = s.level.map_or("inf".to_string(), |l| l.to_string());
    let sided = if s.two_sided { "two-sided" } else { "not two-sided" };
    Ok(format!(
        "order {}: add {}, mul {}\nlambda law: ok\nmu law: ok\nvalid, {sided}, |Soc|={}, mpl={level}, ord r={}\n",
        b.order(),
        type_name(b.add_group()),
        type_name(b.mul_group()),
        s.socle,
        s.solution_order
    ))
}

fn cmd_verify(path: &PathBuf) -> Result<(), Failure> {
    let b = load_brace(path)?;
    print!("{}", report(&b)?);
    Ok(())
}

fn cmd_census(n: usize, format: Format, long_run: bool, out: &Option<PathBuf>) -> Result<(), Failure> {
    let bound = if long_run { LONG_RUN_ORDER_BOUND } else { DEFAULT_ORDER_BOUND };
    let table = enumeration::census_with_bound(n, bound)?;
    let text = match format {
        Format::Text => table.format_text(),
        Format::Rows => table.rows_csv(),
    };
    write_out(out, &text)
}

fn nilpotent_algebra(path: &Option<PathBuf>, q: usize, k: usize) -> Result<NilpotentAlgebra, Failure> {
    Ok(match path {
        Some(p) => {
            let spec = io::parse_algebra(&read(p)?).map_err(|e| Failure::Parse(e.to_string()))?;
            NilpotentAlgebra::new(spec.q, spec.dim, &spec.triples)?
        }
        None if k >= 2 => NilpotentAlgebra::truncated_polynomial(q, k - 1)?,
        None => return Err(Failure::Usage("--k must be at least 2".into())),
    })
}

fn semidirect(left: &FiniteGroup, right: &FiniteGroup, action: Option<usize>) -> Result<SkewBrace, Failure> {
    let aut = automorphism_group(right);
    let homs = homomorphisms(left, &aut.as_group());
    let pick = match action {
        Some(i) => i,
        None => homs.iter().position(|h| h.map().iter().any(|&x| x != 0)).unwrap_or(0),
    };
    let h = homs.get(pick).ok_or_else(|| Failure::Usage(format!("only {} actions exist", homs.len())))?;
    let alpha: Vec<Vec<usize>> = h.map().iter().map(|&f| aut.map(f).to_vec()).collect();
    constructions::semidirect_product_braces(&SkewBrace::trivial(left), &SkewBrace::trivial(right), &alpha).map_err(validation)
}

fn factorization(g: &FiniteGroup, left: &FiniteGroup, right: &FiniteGroup) -> Result<SkewBrace, Failure> {
    let ls = catalogue::two_generated_subgroups_isomorphic_to(g, left);
    let rs = catalogue::two_generated_subgroups_isomorphic_to(g, right);
    for l in &ls {
        for r in &rs {
            if l.intersection(r).order() == 1 && l.order() * r.order() == g.order() {
                let f = ExactFactorization::new(g.clone(), l.clone(), r.clone()).map_err(validation)?;
                return constructions::brace_from_exact_factorization(&f).map_err(validation);
            }
        }
    }
    Err(Failure::Validation("no exact factorization with subgroups of the given types".into()))
}

const WREATH_LIMIT: usize = 1 << 12;

fn wreath(left: &FiniteGroup, right: &FiniteGroup) -> Result<SkewBrace, Failure> {
    let m = right.order();
    let size = (0..m).try_fold(m, |acc, _| acc.checked_mul(left.order()).filter(|&s| s <= WREATH_LIMIT));
    let Some(_) = size else {
        return Err(Failure::Resource(format!("wreath product exceeds {WREATH_LIMIT} elements")));
    };
    let rep: Vec<Vec<usize>> = (0..m).map(|b| (0..m).map(|i| right.mul(i, b)).collect()).collect();
    constructions::wreath_product(&SkewBrace::trivial(left), &SkewBrace::trivial(right), &rep).map_err(validation)
}

fn near_ring(g: &FiniteGroup, maps: &Option<PathBuf>) -> Result<SkewBrace, Failure> {
    let n = g.order();
    let maps: Vec<Vec<usize>> = match maps {
        Some(p) => read(p)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|s| s.parse::<usize>().ok().filter(|&v| v < n))
                    .collect::<Option<Vec<usize>>>()
                    .filter(|m| m.len() == n)
                    .ok_or_else(|| Failure::Parse(format!("bad map line {l:?}")))
            })
            .collect::<Result<_, _>>()?,
        // constant maps: 1 + M is the group of right translations
        None => (0..n).map(|a| vec![a; n]).collect(),
    };
    Ok(rings::map_near_ring_brace(g, &maps)?)
}

#[allow(clippy::too_many_arguments)]
fn build(
    kind: Kind,
    group: &Option<String>,
    left: &Option<String>,
    right: &Option<String>,
    action: Option<usize>,
    input: &Option<PathBuf>,
    algebra: &Option<PathBuf>,
    q: usize,
    k: usize,
    variant: PolyVariant,
    maps: &Option<PathBuf>,
) -> Result<SkewBrace, Failure> {
    match kind {
        Kind::Trivial => Ok(SkewBrace::trivial(&group_arg(group, "group")?)),
        Kind::Factorization => factorization(&group_arg(group, "group")?, &group_arg(left, "left")?, &group_arg(right, "right")?),
        Kind::Semidirect => semidirect(&group_arg(left, "left")?, &group_arg(right, "right")?, action),
        Kind::Wreath => wreath(&group_arg(left, "left")?, &group_arg(right, "right")?),
        Kind::Sysak => {
            let path = input.as_ref().ok_or_else(|| Failure::Usage("--input is required".into()))?;
            let b = load_brace(path)?;
            constructions::sysak_brace(&constructions::normal_triple_from_brace(&b)).map_err(validation)
        }
        Kind::Circle => Ok(rings::circle_brace(&nilpotent_algebra(algebra, q, k)?.nil_ring())?),
        Kind::Nearring => near_ring(&group_arg(group, "group")?, maps),
        Kind::Poly => {
            let alg = nilpotent_algebra(algebra, q, k)?;
            let (b, _) = match variant {
                PolyVariant::Additive => rings::poly_brace_additive(&alg)?,
                PolyVariant::Circle => rings::poly_brace_circle(&alg)?,
            };
            Ok(b)
        }
    }
}

fn emit_brace(b: &SkewBrace, out: &Option<PathBuf>) -> Result<(), Failure> {
    let text = io::format_brace(b);
    let (add, mul) = io::parse_brace(&text).map_err(|e| Failure::Parse(e.to_string()))?;
    let back = braceforge::verify_skew_brace(&add, &mul).map_err(validation)?;
    if back != *b {
        return Err(Failure::Validation("brace file does not reproduce the brace".into()));
    }
    let summary = report(b)?;
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            print!("{summary}");
        }
        None => {
            for l in summary.lines() {
                println!("# {l}");
            }
            print!("{text}");
        }
    }
    Ok(())
}

fn cmd_cyclic(p: usize, k: u32) -> Result<(), Failure> {
    let r = enumeration::cyclic_prime_power_report(p, k)?;
    println!("cyclic group of order {}^{}", r.p, r.k);
    println!("hopf-galois structures of cyclic type: {}", r.hgs);
    println!("brace classes: {}", r.brace_classes);
    println!("socle sizes: {:?}", r.socle_sizes);
    println!("orbit sizes: {:?}", r.orbit_sizes);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Verify { path } => cmd_verify(&path),
        Command::Census { order, order_flag, format, long_run, out } => {
            let n = order.or(order_flag).ok_or_else(|| Failure::Usage("an order is required".into()))?;
            cmd_census(n, format, long_run, &out)
        }
        Command::Construct { kind, group, left, right, action, input, algebra, q, k, variant, maps, out } => {
            let b = build(kind, &group, &left, &right, action, &input, &algebra, q, k, variant, &maps)?;
            emit_brace(&b, &out)
        }
        Command::Cyclic { p, k } => cmd_cyclic(p, k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
