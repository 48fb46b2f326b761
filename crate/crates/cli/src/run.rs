use std::path::Path;

use wigwell_core::{
    benchmark_on, fringe_spacing, marginal_momentum, marginal_position, negativity, wigner_fft,
    Level, NegativityReport, SpectralBenchReport, SuperpositionState, UniformAxis, WellModel,
    WellParams, WignerError, WignerField,
};

use crate::csvio::{write_columns, write_records, write_wigner};
use crate::manifest::write_manifest;
use crate::scenario::{Output, Scenario};
use crate::{fmt_f64, heatmap, report, CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct NegativityRow {
    pub well: usize,
    pub delta_e: f64,
    pub time: f64,
    pub mass: f64,
    pub report: NegativityReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FringeRow {
    pub well: usize,
    pub delta_e: f64,
    pub time: f64,
    pub x0: f64,
    pub p_band: f64,
    pub spacing: Result<f64, WignerError>,
}

/// What a scenario run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    /// Artifact file names relative to the output directory, sorted.
    pub files: Vec<String>,
    /// Contents of `manifest.txt`.
    pub manifest: String,
    pub negativity: Vec<NegativityRow>,
    pub fringes: Vec<FringeRow>,
    /// One convergence ladder per well.
    pub bench: Vec<Vec<SpectralBenchReport>>,
}

impl Scenario {
    pub fn model(&self, params: WellParams) -> Result<WellModel> {
        Ok(WellModel::with_tail_rel(params, self.grid.tail_rel)?)
    }

    pub fn state(&self, model: WellModel) -> Result<SuperpositionState> {
        Ok(SuperpositionState::new(model, self.theta)?)
    }

    pub fn x_axis(&self, model: &WellModel) -> Result<UniformAxis> {
        let half = self.grid.x_halfwidth.unwrap_or(model.half_width());
        Ok(UniformAxis::symmetric(half, self.grid.n_x)?)
    }

    pub fn y_halfwidth(&self, model: &WellModel) -> f64 {
        self.grid.y_halfwidth.unwrap_or(model.half_width())
    }

    /// Wigner field of the scenario state on its full FFT momentum lattice.
    pub fn field(&self, state: &SuperpositionState, t: f64) -> Result<WignerField> {
        let model = state.model();
        Ok(wigner_fft(
            state,
            &self.x_axis(model)?,
            t,
            self.grid.n_y,
            self.y_halfwidth(model),
        )?)
    }

    pub fn fringe_x0(&self, model: &WellModel) -> f64 {
        self.fringes.x0.unwrap_or(if model.params().is_symmetric() {
            0.0
        } else {
            model.node()
        })
    }

    /// Sampling points `[-L, L]` for the potential and state tables.
    fn samples(&self, model: &WellModel) -> Result<UniformAxis> {
        Ok(UniformAxis::symmetric(model.half_width(), self.samples)?)
    }
}

struct Writer<'a> {
    dir: &'a Path,
    files: Vec<String>,
}

impl Writer<'_> {
    fn path(&mut self, name: String) -> std::path::PathBuf {
        let path = self.dir.join(&name);
        self.files.push(name);
        path
    }
}

pub fn run_scenario(scenario: &Scenario, out_dir: &Path) -> Result<RunSummary> {
    scenario.validate()?;
    std::fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    let mut w = Writer {
        dir: out_dir,
        files: Vec::new(),
    };
    let wants = |o: Output| scenario.outputs.contains(&o);
    let mut negativity_rows = Vec::new();
    let mut fringe_rows = Vec::new();
    let mut bench = Vec::new();

    for (i, &params) in scenario.wells.iter().enumerate() {
        let model = scenario.model(params)?;
        let state = scenario.state(model)?;
        let period = state.beat_period();
        let times: Vec<f64> = scenario.times.iter().map(|t| t.resolve(period)).collect();

        if wants(Output::Potential) {
            let xs: Vec<f64> = scenario.samples(&model)?.values().collect();
            let v: Vec<f64> = xs.iter().map(|&x| model.potential(x)).collect();
            let chi = xs
                .iter()
                .map(|&x| model.chi(x))
                .collect::<Result<Vec<_>, _>>()?;
            let phi: Vec<f64> = xs.iter().map(|&x| model.phi(x)).collect();
            let path = w.path(format!("potential_w{i}.csv"));
            write_columns(&path, &["x", "V", "chi", "phi"], &[&xs, &v, &chi, &phi])?;
        }

        if wants(Output::States) {
            let xs: Vec<f64> = scenario.samples(&model)?.values().collect();
            let psi0: Vec<f64> = xs.iter().map(|&x| model.psi(Level::Ground, x)).collect();
            let psi1: Vec<f64> = xs.iter().map(|&x| model.psi(Level::Excited, x)).collect();
            let path = w.path(format!("states_w{i}.csv"));
            write_columns(&path, &["x", "psi0", "psi1"], &[&xs, &psi0, &psi1])?;
        }

        if wants(Output::Evolve) {
            let xs: Vec<f64> = scenario.samples(&model)?.values().collect();
            let mut cols: [Vec<f64>; 5] = Default::default();
            for &t in &times {
                for &x in &xs {
                    let psi = state.psi_t(x, t);
                    for (col, v) in cols.iter_mut().zip([t, x, psi.re, psi.im, psi.norm_sqr()]) {
                        col.push(v);
                    }
                }
            }
            let path = w.path(format!("evolve_w{i}.csv"));
            let refs: Vec<&[f64]> = cols.iter().map(Vec::as_slice).collect();
            write_columns(&path, &["t", "x", "re", "im", "P"], &refs)?;
        }

        if scenario.outputs.iter().any(|o| o.needs_field()) {
            for (j, &t) in times.iter().enumerate() {
                let field = scenario.field(&state, t)?;
                if wants(Output::Wigner) {
                    let cropped = field.crop_momentum(scenario.grid.p_max)?;
                    write_wigner(&w.path(format!("wigner_w{i}_t{j}.csv")), &cropped)?;
                    heatmap::write(&w.path(format!("wigner_w{i}_t{j}.ppm")), &cropped)?;
                }
                if wants(Output::Marginals) {
                    let px = marginal_position(&field);
                    let path = w.path(format!("marginal_x_w{i}_t{j}.csv"));
                    write_columns(&path, &["x", "P"], &[&px.coords, &px.density])?;
                    let pm = marginal_momentum(&field);
                    let scale = if scenario.plot_compat { 1.0 / 3.0 } else { 1.0 };
                    let density: Vec<f64> = pm.density.iter().map(|d| d * scale).collect();
                    let path = w.path(format!("marginal_p_w{i}_t{j}.csv"));
                    write_columns(&path, &["p", "Ptilde"], &[&pm.coords, &density])?;
                }
                if wants(Output::Negativity) {
                    negativity_rows.push(NegativityRow {
                        well: i,
                        delta_e: model.delta_e(),
                        time: t,
                        mass: field.total_mass(),
                        report: negativity(&field),
                    });
                }
                if wants(Output::Fringes) {
                    let x0 = scenario.fringe_x0(&model);
                    fringe_rows.push(FringeRow {
                        well: i,
                        delta_e: model.delta_e(),
                        time: t,
                        x0,
                        p_band: scenario.fringes.p_band,
                        spacing: fringe_spacing(&field, x0, scenario.fringes.p_band),
                    });
                }
            }
        }

        if wants(Output::Bench) {
            let half = scenario.bench.half_width.unwrap_or(model.half_width());
            let ladder = scenario
                .bench
                .ladder
                .iter()
                .map(|&n| benchmark_on(&model, n, half))
                .collect::<Result<Vec<_>, _>>()?;
            write_bench(&mut w, i, &ladder)?;
            bench.push(ladder);
        }
    }

    if wants(Output::Negativity) {
        let rows: Vec<Vec<String>> = negativity_rows
            .iter()
            .map(|r| {
                vec![
                    r.well.to_string(),
                    fmt_f64(r.delta_e),
                    fmt_f64(r.time),
                    fmt_f64(r.report.negative_volume),
                    fmt_f64(r.report.min_value),
                    fmt_f64(r.report.min_location.0),
                    fmt_f64(r.report.min_location.1),
                    fmt_f64(r.mass),
                ]
            })
            .collect();
        write_records(
            &w.path("negativity.csv".into()),
            &[
                "well",
                "deltaE",
                "t",
                "negative_volume",
                "min_value",
                "min_x",
                "min_p",
                "mass",
            ],
            &rows,
        )?;
    }

    if wants(Output::Fringes) {
        let rows: Vec<Vec<String>> = fringe_rows
            .iter()
            .map(|r| {
                let (spacing, status) = match &r.spacing {
                    Ok(s) => (fmt_f64(*s), "ok".to_string()),
                    Err(e) => (String::new(), e.to_string()),
                };
                vec![
                    r.well.to_string(),
                    fmt_f64(r.delta_e),
                    fmt_f64(r.time),
                    fmt_f64(r.x0),
                    fmt_f64(r.p_band),
                    spacing,
                    status,
                ]
            })
            .collect();
        write_records(
            &w.path("fringes.csv".into()),
            &["well", "deltaE", "t", "x0", "p_band", "spacing", "status"],
            &rows,
        )?;
    }

    let mut files = w.files;
    files.sort();
    let manifest = write_manifest(out_dir, &files)?;
    Ok(RunSummary {
        files,
        manifest,
        negativity: negativity_rows,
        fringes: fringe_rows,
        bench,
    })
}

fn write_bench(w: &mut Writer, well: usize, ladder: &[SpectralBenchReport]) -> Result<()> {
    let finest = ladder.last().expect("ladder validated non-empty");
    let path = w.path(format!("bench_w{well}.txt"));
    std::fs::write(&path, report::to_text(finest)).map_err(|e| CliError::io(&path, e))?;

    let headers = [
        "n",
        "dx",
        "E0",
        "E1",
        "abs_error_E0",
        "abs_error_E1",
        "sup_error_psi0",
        "sup_error_psi1",
        "order_E0",
        "order_E1",
    ];
    let rows: Vec<Vec<String>> = ladder
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let order = |level: usize| match k.checked_sub(1).map(|p| &ladder[p]) {
                Some(prev) => {
                    let ratio = prev.dx / r.dx;
                    fmt_f64((prev.abs_errors[level] / r.abs_errors[level]).ln() / ratio.ln())
                }
                None => String::new(),
            };
            vec![
                r.n.to_string(),
                fmt_f64(r.dx),
                fmt_f64(r.numerical[0]),
                fmt_f64(r.numerical[1]),
                fmt_f64(r.abs_errors[0]),
                fmt_f64(r.abs_errors[1]),
                fmt_f64(r.eigenfunction_sup_errors[0]),
                fmt_f64(r.eigenfunction_sup_errors[1]),
                order(0),
                order(1),
            ]
        })
        .collect();
    write_records(
        &w.path(format!("bench_convergence_w{well}.csv")),
        &headers,
        &rows,
    )
}
