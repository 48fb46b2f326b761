use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use wigwell_cli::{run_scenario, Output, Scenario};

#[derive(Parser)]
#[command(
    name = "wigwell",
    version,
    about = "Double-well tunneling and Wigner phase-space datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory receiving all artifacts and the manifest.
    #[arg(long, global = true, default_value = "out")]
    out_dir: PathBuf,

    /// Number of x columns of the Wigner lattice.
    #[arg(long, global = true)]
    grid_nx: Option<usize>,

    /// Number of y samples (power of two) of the Wigner transform.
    #[arg(long, global = true)]
    grid_ny: Option<usize>,

    /// Relative tail threshold that sets the domain half-width L.
    #[arg(long, global = true)]
    tail_rel: Option<f64>,

    /// Worker threads for the Wigner transform; output bytes do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// V, chi and phi sampled on [-L, L].
    Potential(WellArgs),
    /// Normalized psi0 and psi1 sampled on [-L, L].
    States(WellArgs),
    /// Psi(x, t) at the requested times.
    Evolve(WellArgs),
    /// Wigner grids (CSV) and heatmaps (PPM).
    Wigner(WellArgs),
    /// Position and momentum marginals.
    Marginals(WellArgs),
    /// Negative volume and minimum of W.
    Negativity(WellArgs),
    /// Fringe spacing of W(x0, p).
    Fringes(WellArgs),
    /// Finite-difference eigensolver against the exact spectrum.
    Bench(WellArgs),
    /// Run every output requested by a scenario file.
    Scenario { file: PathBuf },
}

/// Well and state selection for the single-artifact verbs.
#[derive(Args)]
struct WellArgs {
    /// `symmetric` or `asymmetric`.
    #[arg(long, default_value = "symmetric")]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    e0: f64,
    /// Excited-state energy (comma list for a sweep).
    #[arg(long, allow_hyphen_values = true)]
    e1: Option<String>,
    /// Splitting E1 - E0 (comma list for a sweep).
    #[arg(long)]
    delta_e: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Weighting angle, e.g. `pi/4` or `0.3`.
    #[arg(long, default_value = "pi/4")]
    theta: String,
    /// Comma list of times, absolute or as fractions of the beat period (`T/8`).
    #[arg(long, default_value = "0")]
    times: String,
    /// Scale the momentum marginal by 1/3.
    #[arg(long)]
    plot_compat: bool,
    /// Dx ladder for `bench`.
    #[arg(long)]
    ladder: Option<String>,
    /// Domain half-width for `bench` (defaults to the tail-threshold L).
    #[arg(long = "bench-l")]
    bench_l: Option<f64>,
}

impl WellArgs {
    fn scenario_text(&self, output: Output) -> String {
        let mut lines = vec![
            format!("well.kind = {}", self.kind),
            format!("well.E0 = {:?}", self.e0),
            format!("theta = {}", self.theta),
            format!("times = {}", self.times),
            format!("outputs = {}", output.name()),
            format!("plot_compat = {}", self.plot_compat),
        ];
        let optional = [
            ("well.E1", self.e1.clone()),
            ("well.deltaE", self.delta_e.clone()),
            ("well.alpha", self.alpha.map(|v| format!("{v:?}"))),
            ("well.beta", self.beta.map(|v| format!("{v:?}"))),
            ("bench.ladder", self.ladder.clone()),
            ("bench.L", self.bench_l.map(|v| format!("{v:?}"))),
        ];
        for (key, value) in optional {
            if let Some(v) = value {
                lines.push(format!("{key} = {v}"));
            }
        }
        lines.join("\n")
    }
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let mut scenario = match &cli.command {
        Command::Scenario { file } => Scenario::from_file(file)
            .with_context(|| format!("loading scenario {}", file.display()))?,
        verb => {
            let (args, output) = match verb {
                Command::Potential(a) => (a, Output::Potential),
                Command::States(a) => (a, Output::States),
                Command::Evolve(a) => (a, Output::Evolve),
                Command::Wigner(a) => (a, Output::Wigner),
                Command::Marginals(a) => (a, Output::Marginals),
                Command::Negativity(a) => (a, Output::Negativity),
                Command::Fringes(a) => (a, Output::Fringes),
                Command::Bench(a) => (a, Output::Bench),
                Command::Scenario { .. } => unreachable!(),
            };
            Scenario::parse(&args.scenario_text(output))?
        }
    };
    if let Some(n) = cli.grid_nx {
        scenario.grid.n_x = n;
    }
    if let Some(n) = cli.grid_ny {
        scenario.grid.n_y = n;
    }
    if let Some(t) = cli.tail_rel {
        scenario.grid.tail_rel = t;
    }

    let run = || run_scenario(&scenario, &cli.out_dir);
    let summary = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .context("building thread pool")?
            .install(run),
        None => run(),
    }?;

    for row in &summary.negativity {
        println!(
            "negativity well={} t={:?}: volume={:?} min={:?} mass={:?}",
            row.well, row.time, row.report.negative_volume, row.report.min_value, row.mass
        );
    }
    for row in &summary.fringes {
        match &row.spacing {
            Ok(s) => println!(
                "fringes well={} deltaE={:?}: spacing={s:?}",
                row.well, row.delta_e
            ),
            Err(e) => println!("fringes well={} deltaE={:?}: {e}", row.well, row.delta_e),
        }
    }
    for (well, ladder) in summary.bench.iter().enumerate() {
        for r in ladder {
            println!(
                "bench well={well} n={}: |dE0|={:?} |dE1|={:?}",
                r.n, r.abs_errors[0], r.abs_errors[1]
            );
        }
    }
    println!(
        "wrote {} files and {}",
        summary.files.len(),
        cli.out_dir
            .join(wigwell_cli::manifest::MANIFEST_NAME)
            .display()
    );
    Ok(())
}
