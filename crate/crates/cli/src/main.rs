//! `hurwitz`: count branched covers of the sphere over three points.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz_core::{
    brute_force_counts, check_compatibility_with_genus, count, count_flexible, count_very_flexible,
    emit_dot, emit_json, enumerate_rigid_classes_with_jobs, scan, to_map, BranchDatum, Error,
};

#[derive(Parser, Debug)]
#[command(
    name = "hurwitz",
    version,
    about = "Hurwitz counts for branch data over the sphere with three branching points"
)]
#[command(
    after_help = "A datum is written \"d; pi1; pi2; pi3\", partitions as comma lists, e.g. \"7; 3,2,1,1; 3,2,1,1; 7\".\n\
Exit codes: 1 parse error, 2 incompatible datum, 3 internal invariant violation."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Riemann-Hurwitz compatibility and print the cover genus.
    Check {
        datum: String,
        /// Also require the cover to have this genus.
        #[arg(long)]
        genus: Option<usize>,
    },
    /// Rigid, flexible and very flexible counts, with the twelve-label table.
    Count {
        datum: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// One representative per rigid class, in cycle notation.
    Classes {
        datum: String,
        /// Print the flexible and very flexible orbit maps as JSON afterwards.
        #[arg(long)]
        orbits: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write one dessin file per rigid class into a directory.
    Dessins {
        datum: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = DessinFormat::Dot)]
        format: DessinFormat,
    },
    /// Brute-force counts (degree at most 6).
    Oracle { datum: String },
    /// Counts for every compatible datum of one degree; triples are taken up
    /// to order, since the counts do not depend on it.
    Scan {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DessinFormat {
    Dot,
    Json,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) => match e {
                Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidPermutation { .. } => {
                    1
                }
                Error::DegreeOutOfRange(_)
                | Error::PartitionSum { .. }
                | Error::Parity
                | Error::NegativeGenus { .. }
                | Error::GenusMismatch { .. }
                | Error::NotThreePoints(_)
                | Error::OracleDegree { .. } => 2,
                _ => 3,
            },
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

fn three_point(text: &str) -> Result<BranchDatum, Failure> {
    let datum: BranchDatum = text.parse()?;
    datum.triple()?;
    Ok(datum)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Check { datum, genus } => {
            let datum: BranchDatum = datum.parse()?;
            let datum = match genus {
                Some(g) => {
                    check_compatibility_with_genus(datum.degree(), datum.partitions().to_vec(), g)?
                }
                None => datum,
            };
            out.push_str(&format!("compatible: {datum}\n"));
            out.push_str(&format!("cover genus: {}\n", datum.cover_genus()));
            if datum.is_degenerate() {
                out.push_str("degenerate: some point has the all-ones partition\n");
            }
        }
        Command::Count {
            datum,
            format,
            jobs,
        } => {
            let datum = three_point(&datum)?;
            let report = count(&datum, jobs)?;
            match format {
                ReportFormat::Table => {
                    out.push_str(&format!("datum         {datum}\n"));
                    out.push_str(&report.to_table());
                }
                ReportFormat::Json => {
                    out.push_str(&report.to_json());
                    out.push('\n');
                }
            }
        }
        Command::Classes {
            datum,
            orbits,
            jobs,
        } => {
            let datum = three_point(&datum)?;
            let reps = enumerate_rigid_classes_with_jobs(&datum, jobs)?;
            for r in &reps {
                out.push_str(&format!("{r}\n"));
            }
            if orbits {
                out.push_str(&format!(
                    "flexible: {}\n",
                    count_flexible(&reps, &datum)?.to_json()
                ));
                out.push_str(&format!(
                    "very_flexible: {}\n",
                    count_very_flexible(&reps, &datum)?.to_json()
                ));
            }
        }
        Command::Dessins {
            datum,
            out: dir,
            format,
        } => {
            let datum = three_point(&datum)?;
            let reps = enumerate_rigid_classes_with_jobs(&datum, 1)?;
            fs::create_dir_all(&dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
            for (i, r) in reps.iter().enumerate() {
                let map = to_map(r, &datum)?;
                let (ext, text) = match format {
                    DessinFormat::Dot => ("dot", emit_dot(&map)),
                    DessinFormat::Json => ("json", emit_json(&map) + "\n"),
                };
                let path = dir.join(format!("class_{i}.{ext}"));
                fs::write(&path, text)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            out.push_str(&format!(
                "wrote {} files to {}\n",
                reps.len(),
                dir.display()
            ));
        }
        Command::Oracle { datum } => {
            let datum = three_point(&datum)?;
            let (r, f, v) = brute_force_counts(&datum)?;
            out.push_str(&format!("rigid {r}\nflexible {f}\nvery flexible {v}\n"));
        }
        Command::Scan { degree, jobs } => {
            out.push_str(&scan(degree, jobs)?.render());
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
