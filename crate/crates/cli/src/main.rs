use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shelf_core::chain::complex::{
    build_complex_with_cap, preset_complex, CoefficientVector, HomologyKind, DEFAULT_BASIS_CAP,
};
use shelf_core::explore::{
    catalog, scan_boolean, scan_example4, scan_growth, scan_hyperplane, torsion_hunt, HyperplaneParams,
};
use shelf_core::io::{shelf_key, HomologyReport, ShelfDocument, SCHEMA_VERSION};
use shelf_core::orbits::{classify, left_orbits, orbit_quotient};
use shelf_core::simplicial::build_shelf_complex;
use shelf_core::Error;

#[derive(Parser)]
#[command(name = "shelf", version, about = "Homology of finite shelves and multi-shelves")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Shelf JSON file; stdin when omitted or "-".
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Where to write the report; stdout when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Highest homology degree computed.
    #[arg(long, global = true)]
    maxdeg: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Augmented::Default)]
    augmented: Augmented,
    /// Largest number of basis elements a chain complex may hold.
    #[arg(long, global = true, default_value_t = DEFAULT_BASIS_CAP)]
    cap: u128,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Leave out the generated_at field.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Augmented {
    On,
    Off,
    Default,
}

impl Augmented {
    fn resolve(self, default: bool) -> bool {
        match self {
            Augmented::On => true,
            Augmented::Off => false,
            Augmented::Default => default,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Shelf,
    Rack,
    Quandle,
    Multi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Growth,
    Example4,
    Boolean,
    Hyperplane,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the input is a shelf or multi-shelf.
    Validate,
    /// Left orbits, classification and the orbit quotient.
    Orbits {
        /// Which operation of a multi-shelf to use.
        #[arg(long, default_value_t = 0)]
        op: usize,
    },
    /// Integral homology report.
    Homology {
        /// Defaults to shelf for one operation and multi otherwise.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Coefficients for kind multi, comma separated (default all 1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
        #[arg(long, default_value_t = 0)]
        op: usize,
        /// Write every boundary matrix as row,col,value CSV into this directory.
        #[arg(long)]
        export_matrices: Option<PathBuf>,
    },
    /// The shelf complex: components, maximal simplices and homology.
    Simplicial {
        #[arg(long, default_value_t = 0)]
        op: usize,
        /// Write the maximal simplices as a JSON list to this file.
        #[arg(long)]
        export_simplices: Option<PathBuf>,
    },
    /// All shelves of a given size up to isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
    },
    /// Check a conjecture over a grid and record a verdict per point.
    Scan {
        #[arg(value_enum)]
        target: Target,
        /// Carrier sizes for growth and example4.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        sizes: Vec<usize>,
        /// Size of the ground set for boolean.
        #[arg(long, default_value_t = 1)]
        omega: usize,
        /// Coefficient values for each of a0, a1, a2 in the boolean grid.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0,1")]
        values: Vec<i64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 10)]
        range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every class of the given size with torsion in its homology.
    TorsionHunt {
        #[arg(long)]
        size: usize,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let Some(e) = err.downcast_ref::<Error>() else {
        // unreadable files and the like
        return 2;
    };
    match e {
        Error::PracticalSizeLimit { .. } | Error::BoundExceeded { .. } | Error::MemoryCapExceeded { .. } => 3,
        Error::DDNotZero(_) | Error::AugmentationNotZero | Error::ChainMapViolation(_) | Error::Internal(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<ShelfDocument> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    Ok(ShelfDocument::parse(&text)?)
}

fn emit(g: &Global, report: impl serde::Serialize) -> Result<()> {
    let mut value = serde_json::to_value(report)?;
    if let Value::Object(map) = &mut value {
        map.remove("generated_at");
        if !g.no_timestamp {
            let now = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
            map.insert("generated_at".into(), json!(now));
        }
    }
    let mut text = serde_json::to_string_pretty(&value)?;
    text.push('\n');
    match &g.output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pick_shelf(doc: &ShelfDocument, op: usize) -> Result<shelf_core::Shelf> {
    if doc.ops.len() == 1 {
        return Ok(doc.to_shelf()?);
    }
    let ms = doc.to_multishelf()?;
    if op >= ms.len() {
        return Err(Error::OutOfRange(ms.len()).into());
    }
    Ok(ms.shelf(op))
}

fn run(cli: &Cli) -> Result<()> {
    let g = &cli.global;
    if let Some(k) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global()
            .map_err(|e| anyhow!("thread pool: {e}"))?;
    }
    let input = || read_input(g.input.as_deref());
    match &cli.command {
        Command::Validate => {
            let doc = input()?;
            let ms = doc.to_multishelf()?;
            emit(
                g,
                json!({
                    "schema": SCHEMA_VERSION,
                    "valid": true,
                    "size": ms.size(),
                    "ops": ms.len(),
                    "shelf": shelf_key(&ms),
                }),
            )
        }
        Command::Orbits { op } => {
            let s = pick_shelf(&input()?, *op)?;
            let orbits = left_orbits(&s);
            let q = orbit_quotient(&s)?;
            emit(
                g,
                json!({
                    "schema": SCHEMA_VERSION,
                    "shelf": shelf_key(&s.to_multishelf()),
                    "count": orbits.count(),
                    "orbits": orbits.blocks(),
                    "classification": classify(&s),
                    "quotient": q.shelf.table().rows(),
                    "projection": q.projection,
                }),
            )
        }
        Command::Homology { kind, coeffs, op, export_matrices } => {
            let doc = input()?;
            let maxdeg = g.maxdeg.unwrap_or(3);
            let kind = kind.unwrap_or(if doc.ops.len() > 1 { Kind::Multi } else { Kind::Shelf });
            let (report, cx) = match kind {
                Kind::Multi => {
                    let ms = doc.to_multishelf()?;
                    let c = coeffs.clone().unwrap_or_else(|| vec![1; ms.len()]);
                    let augmented = g.augmented.resolve(true);
                    let cx = build_complex_with_cap(&ms, &CoefficientVector::new(c.clone()), maxdeg + 1, augmented, g.cap)?;
                    let groups = cx.homology_all()?;
                    (HomologyReport::new(&ms, None, c, augmented, groups), cx)
                }
                _ => {
                    if coeffs.is_some() {
                        return Err(Error::SpecPreconditionFailed("--coeffs only applies to kind multi".into()).into());
                    }
                    let kind = match kind {
                        Kind::Shelf => HomologyKind::Shelf,
                        Kind::Rack => HomologyKind::Rack,
                        _ => HomologyKind::Quandle,
                    };
                    let s = pick_shelf(&doc, *op)?;
                    let augmented = g.augmented.resolve(kind.default_augmented());
                    let cx = preset_complex(&s, kind, maxdeg, Some(augmented), g.cap)?;
                    let groups = cx.homology_all()?;
                    let c = cx.coefficients().entries().to_vec();
                    (HomologyReport::new(&s.to_multishelf(), Some(kind), c, augmented, groups), cx)
                }
            };
            if let Some(dir) = export_matrices {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for d in 0..=cx.maxdeg() {
                    let path = dir.join(format!("d{d}.csv"));
                    let file = fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?;
                    cx.boundary(d).write_csv(io::BufWriter::new(file))?;
                }
            }
            emit(g, report)
        }
        Command::Simplicial { op, export_simplices } => {
            let s = pick_shelf(&input()?, *op)?;
            let cx = build_shelf_complex(&s, g.maxdeg)?;
            let groups = (0..=cx.maxdim()).map(|d| cx.homology(d)).collect::<shelf_core::Result<Vec<_>>>()?;
            let maximal = cx.maximal_simplices();
            if let Some(p) = export_simplices {
                fs::write(p, serde_json::to_string(&maximal)? + "\n").with_context(|| format!("writing {}", p.display()))?;
            }
            let comps = cx.components();
            emit(
                g,
                json!({
                    "schema": SCHEMA_VERSION,
                    "shelf": shelf_key(&s.to_multishelf()),
                    "dimension": cx.dimension(),
                    "components": comps.count,
                    "component_of": comps.labels,
                    "maximal_simplices": maximal,
                    "groups": groups,
                    "repaired_faces": cx.repaired_faces(),
                }),
            )
        }
        Command::Enumerate { size } => {
            let classes = catalog(*size)?;
            emit(
                g,
                json!({
                    "schema": SCHEMA_VERSION,
                    "size": size,
                    "count": classes.len(),
                    "classes": classes,
                }),
            )
        }
        Command::Scan { target, sizes, omega, values, samples, range, seed } => {
            let report = match target {
                Target::Growth => scan_growth(sizes, g.maxdeg.unwrap_or(3), g.cap)?,
                Target::Example4 => scan_example4(sizes, g.maxdeg.unwrap_or(3), g.cap)?,
                Target::Boolean => {
                    scan_boolean(*omega, values, g.maxdeg.unwrap_or(3), g.augmented.resolve(true), g.cap)?
                }
                Target::Hyperplane => {
                    let ms = input()?.to_multishelf()?;
                    let p = HyperplaneParams {
                        samples: *samples,
                        range: *range,
                        seed: *seed,
                        maxdeg: g.maxdeg.unwrap_or(3),
                        augmented: g.augmented.resolve(false),
                        cap: g.cap,
                    };
                    scan_hyperplane(&ms, &p)?
                }
            };
            emit(g, report)
        }
        Command::TorsionHunt { size } => emit(g, torsion_hunt(*size, g.maxdeg.unwrap_or(1), g.cap)?),
    }
}
