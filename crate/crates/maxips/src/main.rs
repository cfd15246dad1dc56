use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maxips::canon::normal_form;
use maxips::cliques::{
    build_graph, constrained_maximal_cliques, maximal_cliques, PositionFilter,
};
use maxips::constructions::{
    circle_scaled, circle_set, circle_tilde, crab, decompose_crab, rectangle, rhombus,
    semi_crab, CrabSpec, PythagoreanPair,
};
use maxips::extension::{
    extension_points_of_set, extension_points_rational, is_maximal, is_strongly_maximal,
    seed_triangle,
};
use maxips::fileio::{parse_pointset, serialize_pointset};
use maxips::geometry::PointSet;
use maxips::heronian::{embeddings, heronian_triangles, HeronTriangle};
use maxips::search::{search_maximal_sets_resumable, search_maximal_triangles, SearchConfig};
use maxips::svg::{render_svg, SvgOptions};
use maxips::{Error, Int, Result};

#[derive(Parser)]
#[command(
    name = "maxips",
    about = "Construct, extend, canonicalize and search maximal integral point sets over Z^2",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List Heronian triangles with longest side up to a bound.
    GenTriangles {
        /// Maximum longest side.
        #[arg(long)]
        diameter: u64,
    },
    /// List the grid embedding classes of a Heronian triangle.
    Embed {
        /// Triangle sides as "a,b,c".
        #[arg(long)]
        triangle: String,
        /// Print raw coordinates instead of canonical forms.
        #[arg(long)]
        raw: bool,
    },
    /// List the extension points of a point set.
    Extend {
        /// Point set file ("x y" per line).
        #[arg(long)]
        points: PathBuf,
        #[arg(long, value_enum, default_value_t = ExtendMode::Integral)]
        mode: ExtendMode,
    },
    /// Decide whether a point set is maximal.
    CheckMaximal {
        #[arg(long)]
        points: PathBuf,
        /// Test strong maximality (no rational extension point) instead.
        #[arg(long)]
        strong: bool,
    },
    /// Print the canonical form of a point set.
    Normalize {
        #[arg(long)]
        points: PathBuf,
    },
    /// Build one of the named point set families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Enumerate the maximal integral point sets containing a triangle.
    Enumerate {
        /// Triangle sides as "a,b,c".
        #[arg(long)]
        triangle: String,
        /// Restrict to semi-general or general position.
        #[arg(long, value_enum)]
        filter: Option<EnumFilter>,
    },
    /// Exhaustive minimum-diameter search.
    Search {
        /// Seed triangles are enumerated up to this longest side.
        #[arg(long)]
        max_diameter: u64,
        #[arg(long, value_enum, default_value_t = SearchFilter::Arbitrary)]
        filter: SearchFilter,
        /// Sweep for strongly maximal triangles instead of building the table.
        #[arg(long)]
        triangles_only: bool,
        /// Checkpoint/record file; rerunning resumes completed diameters.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Render a point set as SVG.
    Render {
        #[arg(long)]
        points: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 640)]
        height: u32,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Rectangle over a Pythagorean pair.
    Rect(PairArgs),
    /// Rhombus (order-1 crab) over a Pythagorean pair.
    Rhombus(PairArgs),
    /// Crab with explicit arms.
    Crab {
        #[arg(long)]
        a: u64,
        /// Comma-separated arm offsets, e.g. "16,40,72,224".
        #[arg(long)]
        arms: String,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Crab of maximum order from the decomposition lemma.
    Decompose {
        #[arg(long)]
        h: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Semi-crab over base (gh)^2 with denominator g.
    Semicrab {
        #[arg(long)]
        gh: u64,
        #[arg(long)]
        g: u64,
        /// Residue class selector; the cardinality-maximizing class when omitted.
        #[arg(long)]
        m: Option<u64>,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Points on the radius-r circle plus its center.
    Circle {
        #[arg(long)]
        r: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Half-coordinate variant of the circle set.
    CircleTilde {
        #[arg(long)]
        r: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Maximal integral subsets of the circle points scaled by 1/t.
    CircleScaled {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        t: u64,
        #[command(flatten)]
        out: ConstructOut,
    },
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[command(flatten)]
    out: ConstructOut,
}

#[derive(Args)]
struct ConstructOut {
    /// Print raw construction coordinates instead of the canonical form.
    #[arg(long)]
    raw: bool,
    /// Also write an SVG rendering to this file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ExtendMode {
    Integral,
    Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFilter {
    Semi,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchFilter {
    Arbitrary,
    Semi,
    General,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

/// Caps the worker pool when MAXIPS_THREADS is set.
fn init_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("MAXIPS_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// True iff the rational point is at a positive integral distance to every
/// point of the set (the seed triangle's own extensions are pre-filtered,
/// but the remaining set points must be checked too).
fn rational_extends_set(set: &PointSet, p: &maxips::geometry::RatPoint) -> bool {
    use maxips::exactmath::perfect_square_root;
    use maxips::geometry::rat_dist2;
    if let Some(g) = p.to_grid() {
        if set.contains(&g) {
            return false;
        }
    }
    set.iter().all(|q| {
        let d2 = rat_dist2(p, &q.to_rat());
        d2.is_integer() && perfect_square_root(&d2.to_integer()).is_some()
    })
}

fn read_points(path: &Path) -> Result<PointSet> {
    parse_pointset(&std::fs::read_to_string(path)?)
}

fn parse_triangle(s: &str) -> Result<HeronTriangle> {
    let sides: Vec<&str> = s.split(',').collect();
    if sides.len() != 3 {
        return Err(Error::domain(format!("expected \"a,b,c\", got {s:?}")));
    }
    let mut parsed = Vec::new();
    for side in sides {
        let v: Int = side
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("malformed side {side:?}")))?;
        parsed.push(v);
    }
    parsed.sort();
    HeronTriangle::new(parsed[2].clone(), parsed[1].clone(), parsed[0].clone())
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::GenTriangles { diameter } => {
            for t in heronian_triangles(&Int::from(diameter))? {
                println!("{} {} {}", t.a(), t.b(), t.c());
            }
            Ok(())
        }
        Command::Embed { triangle, raw } => {
            let t = parse_triangle(&triangle)?;
            for e in embeddings(&t, true)? {
                if raw {
                    let coords: Vec<String> =
                        e.points().iter().map(|p| format!("{},{}", p.x, p.y)).collect();
                    println!("{}", coords.join(";"));
                } else {
                    println!("{}", normal_form(&e.point_set())?);
                }
            }
            Ok(())
        }
        Command::Extend { points, mode } => {
            let set = read_points(&points)?;
            match mode {
                ExtendMode::Integral => {
                    for p in extension_points_of_set(&set)? {
                        println!("{} {}", p.x, p.y);
                    }
                }
                ExtendMode::Rational => {
                    let e = seed_triangle(&set)?;
                    for p in extension_points_rational(&e)? {
                        if rational_extends_set(&set, &p) {
                            println!("{} {}", p.x, p.y);
                        }
                    }
                }
            }
            Ok(())
        }
        Command::CheckMaximal { points, strong } => {
            let set = read_points(&points)?;
            let (verdict, label) = if strong {
                (is_strongly_maximal(&set)?, "strongly maximal")
            } else {
                (is_maximal(&set)?, "maximal")
            };
            if verdict {
                println!("{label}");
            } else {
                println!("not {label}");
            }
            Ok(())
        }
        Command::Normalize { points } => {
            let set = read_points(&points)?;
            println!("{}", normal_form(&set)?);
            Ok(())
        }
        Command::Construct { family } => run_construct(family),
        Command::Enumerate { triangle, filter } => {
            let t = parse_triangle(&triangle)?;
            let mut forms = Vec::new();
            for e in embeddings(&t, true)? {
                let g = build_graph(&e)?;
                match filter {
                    None => {
                        for m in maximal_cliques(&g)? {
                            forms.push(m.canonical);
                        }
                    }
                    Some(f) => {
                        let pf = match f {
                            EnumFilter::Semi => PositionFilter::SemiGeneral,
                            EnumFilter::General => PositionFilter::General,
                        };
                        for m in constrained_maximal_cliques(&g, pf)? {
                            forms.push(m.canonical);
                        }
                    }
                }
            }
            forms.sort();
            forms.dedup();
            for f in forms {
                println!("{f}");
            }
            Ok(())
        }
        Command::Search { max_diameter, filter, triangles_only, resume } => {
            if triangles_only {
                for (t, nf) in search_maximal_triangles(max_diameter)? {
                    println!("{},{},{}\t{}", t.a(), t.b(), t.c(), nf);
                }
                return Ok(());
            }
            let filter = match filter {
                SearchFilter::Arbitrary => maxips::search::Filter::Arbitrary,
                SearchFilter::Semi => maxips::search::Filter::SemiGeneral,
                SearchFilter::General => maxips::search::Filter::General,
            };
            let cfg = SearchConfig::new(max_diameter, filter);
            let table = search_maximal_sets_resumable(&cfg, resume.as_deref())?;
            print!("{}", table.to_tsv());
            Ok(())
        }
        Command::Render { points, out, width, height } => {
            let set = read_points(&points)?;
            let opts = SvgOptions { width, height, ..SvgOptions::default() };
            let fig = render_svg(&set, &opts)?;
            match out {
                Some(path) => std::fs::write(path, fig.markup)?,
                None => print!("{}", fig.markup),
            }
            Ok(())
        }
    }
}

fn emit_set(set: &PointSet, out: &ConstructOut) -> Result<()> {
    if out.raw {
        print!("{}", serialize_pointset(set));
    } else {
        println!("{}", normal_form(set)?);
    }
    if let Some(path) = &out.svg {
        let fig = render_svg(set, &SvgOptions::default())?;
        std::fs::write(path, fig.markup)?;
    }
    Ok(())
}

fn run_construct(family: Family) -> Result<()> {
    match family {
        Family::Rect(args) => {
            let p = PythagoreanPair::new(args.a, args.b)?;
            emit_set(&rectangle(&p), &args.out)
        }
        Family::Rhombus(args) => {
            let p = PythagoreanPair::new(args.a, args.b)?;
            emit_set(&rhombus(&p), &args.out)
        }
        Family::Crab { a, arms, out } => {
            let mut parsed = Vec::new();
            for part in arms.split(',') {
                let v: Int = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::domain(format!("malformed arm {part:?}")))?;
                parsed.push(v);
            }
            let spec = CrabSpec::new(a, parsed)?;
            emit_set(&crab(&spec), &out)
        }
        Family::Decompose { h, out } => emit_set(&decompose_crab(&Int::from(h))?, &out),
        Family::Semicrab { gh, g, m, out } => {
            let set = semi_crab(&Int::from(gh), &Int::from(g), m.map(Int::from))?;
            emit_set(&set, &out)
        }
        Family::Circle { r, out } => emit_set(&circle_set(&Int::from(r))?, &out),
        Family::CircleTilde { r, out } => emit_set(&circle_tilde(&Int::from(r))?, &out),
        Family::CircleScaled { r, t, out } => {
            let sets = circle_scaled(&Int::from(r), &Int::from(t))?;
            for set in &sets {
                if out.raw {
                    let coords: Vec<String> =
                        set.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
                    println!("{}", coords.join(";"));
                } else {
                    println!("{}", normal_form(set)?);
                }
            }
            if let Some(path) = &out.svg {
                if let Some(first) = sets.first() {
                    let fig = render_svg(first, &SvgOptions::default())?;
                    std::fs::write(path, fig.markup)?;
                }
            }
            Ok(())
        }
    }
}
