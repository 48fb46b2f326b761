//! Flat `key = value` scenario files.
//!
//! ```text
//! # symmetric tunneling, three snapshots
//! well.kind = symmetric
//! well.E0 = -1
//! well.E1 = -0.999
//! theta = pi/4
//! times = 0, T/8, T/4
//! outputs = wigner, marginals, negativity
//! ```
//!
//! `#` starts a comment. `well.E1` or `well.deltaE` may hold a comma list,
//! which turns the scenario into a sweep with one well per entry.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::path::Path;

use wigwell_core::{AsymmetricWellParams, SymmetricWellParams, WellParams, DEFAULT_TAIL_REL};

use crate::{CliError, Result};

const KNOWN_KEYS: &[&str] = &[
    "name",
    "well.kind",
    "well.E0",
    "well.E1",
    "well.deltaE",
    "well.alpha",
    "well.beta",
    "theta",
    "times",
    "outputs",
    "grid.n_x",
    "grid.n_y",
    "grid.tail_rel",
    "grid.x_halfwidth",
    "grid.y_halfwidth",
    "grid.p_max",
    "fringes.x0",
    "fringes.p_band",
    "plot_compat",
    "bench.ladder",
    "bench.L",
    "samples.n",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Output {
    Potential,
    States,
    Evolve,
    Wigner,
    Marginals,
    Negativity,
    Fringes,
    Bench,
}

impl Output {
    pub const ALL: [Output; 8] = [
        Output::Potential,
        Output::States,
        Output::Evolve,
        Output::Wigner,
        Output::Marginals,
        Output::Negativity,
        Output::Fringes,
        Output::Bench,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Output::Potential => "potential",
            Output::States => "states",
            Output::Evolve => "evolve",
            Output::Wigner => "wigner",
            Output::Marginals => "marginals",
            Output::Negativity => "negativity",
            Output::Fringes => "fringes",
            Output::Bench => "bench",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|o| o.name() == name)
    }

    /// Whether this output needs Wigner fields.
    pub fn needs_field(self) -> bool {
        matches!(
            self,
            Output::Wigner | Output::Marginals | Output::Negativity | Output::Fringes
        )
    }
}

/// A sampling time, absolute or as a fraction of the beat period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeSpec {
    Absolute(f64),
    PeriodFraction(f64),
}

impl TimeSpec {
    pub fn resolve(self, period: f64) -> f64 {
        match self {
            TimeSpec::Absolute(t) => t,
            TimeSpec::PeriodFraction(f) => f * period,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub n_x: usize,
    pub n_y: usize,
    pub tail_rel: f64,
    /// Position half-range of the Wigner lattice; the well's `L` if unset.
    pub x_halfwidth: Option<f64>,
    /// Integration half-range in `y`; the well's `L` if unset.
    pub y_halfwidth: Option<f64>,
    /// Momentum crop applied to written Wigner grids and heatmaps.
    pub p_max: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_x: 256,
            n_y: 1024,
            tail_rel: DEFAULT_TAIL_REL,
            x_halfwidth: None,
            y_halfwidth: None,
            p_max: 8.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeSpec {
    /// Profile position; the barrier top `x = 0` for symmetric wells and
    /// the excited-state node for asymmetric ones if unset.
    pub x0: Option<f64>,
    pub p_band: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub ladder: Vec<usize>,
    pub half_width: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub wells: Vec<WellParams>,
    pub theta: f64,
    pub times: Vec<TimeSpec>,
    pub outputs: Vec<Output>,
    pub grid: GridSpec,
    pub fringes: FringeSpec,
    pub plot_compat: bool,
    pub bench: BenchSpec,
    pub samples: usize,
}

struct Entry {
    line: usize,
    value: String,
}

struct Entries(BTreeMap<String, Entry>);

impl Entries {
    fn parse_error(&self, key: &str, message: impl Into<String>) -> CliError {
        CliError::Parse {
            line: self.0.get(key).map_or(0, |e| e.line),
            key: key.to_string(),
            message: message.into(),
        }
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(|e| e.value.as_str())
    }

    fn required(&self, key: &str) -> Result<&str> {
        self.raw(key).ok_or_else(|| CliError::missing(key))
    }

    fn number(&self, key: &str) -> Result<Option<f64>> {
        self.raw(key)
            .map(|v| {
                parse_f64(v).ok_or_else(|| self.parse_error(key, format!("not a number: `{v}`")))
            })
            .transpose()
    }

    fn required_number(&self, key: &str) -> Result<f64> {
        self.required(key)?;
        Ok(self.number(key)?.expect("checked above"))
    }

    fn count(&self, key: &str) -> Result<Option<usize>> {
        self.raw(key)
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| self.parse_error(key, format!("not a count: `{v}`")))
            })
            .transpose()
    }

    fn number_list(&self, key: &str) -> Result<Option<Vec<f64>>> {
        self.raw(key)
            .map(|v| {
                split_list(v)
                    .map(|item| {
                        parse_f64(item)
                            .ok_or_else(|| self.parse_error(key, format!("not a number: `{item}`")))
                    })
                    .collect()
            })
            .transpose()
    }
}

fn split_list(v: &str) -> impl Iterator<Item = &str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn parse_f64(s: &str) -> Option<f64> {
    s.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}

/// `c * sym / d` in any of the forms `sym`, `sym/d`, `c*sym`, `c sym/d`, `csym/d`;
/// returns `c / d`.
fn parse_multiple(s: &str, sym: &str) -> Option<f64> {
    let (head, tail) = s.split_once(sym)?;
    let head = head.trim().trim_end_matches('*').trim();
    let coef = if head.is_empty() {
        1.0
    } else {
        parse_f64(head)?
    };
    let tail = tail.trim();
    let div = if tail.is_empty() {
        1.0
    } else {
        parse_f64(tail.strip_prefix('/')?)?
    };
    (div != 0.0).then_some(coef / div)
}

fn parse_angle(s: &str) -> Option<f64> {
    parse_f64(s).or_else(|| parse_multiple(s, "pi").map(|c| c * PI))
}

fn parse_time(s: &str) -> Option<TimeSpec> {
    parse_f64(s)
        .map(TimeSpec::Absolute)
        .or_else(|| parse_multiple(s, "T").map(TimeSpec::PeriodFraction))
}

fn validation(message: impl Into<String>) -> CliError {
    CliError::Validation(message.into())
}

impl Scenario {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut scenario = Self::parse(&text)?;
        if scenario.name.is_empty() {
            if let Some(stem) = path.file_stem() {
                scenario.name = stem.to_string_lossy().into_owned();
            }
        }
        Ok(scenario)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(CliError::Parse {
                    line,
                    key: content.to_string(),
                    message: "expected `key = value`".into(),
                });
            };
            let (key, value) = (key.trim(), value.trim());
            if !KNOWN_KEYS.contains(&key) {
                return Err(CliError::Parse {
                    line,
                    key: key.to_string(),
                    message: "unknown key".into(),
                });
            }
            if let Some(previous) = map.insert(
                key.to_string(),
                Entry {
                    line,
                    value: value.to_string(),
                },
            ) {
                return Err(CliError::Parse {
                    line,
                    key: key.to_string(),
                    message: format!("duplicate key (first set on line {})", previous.line),
                });
            }
        }
        Self::from_entries(&Entries(map))
    }

    fn from_entries(e: &Entries) -> Result<Self> {
        let wells = parse_wells(e)?;

        let theta = match e.raw("theta") {
            None => FRAC_PI_4,
            Some(v) => parse_angle(v)
                .ok_or_else(|| e.parse_error("theta", format!("not an angle: `{v}`")))?,
        };
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(validation(format!("theta = {theta} outside [0, pi/2]")));
        }

        let times = match e.raw("times") {
            None => vec![TimeSpec::Absolute(0.0)],
            Some(v) => split_list(v)
                .map(|item| {
                    parse_time(item)
                        .ok_or_else(|| e.parse_error("times", format!("not a time: `{item}`")))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        if times.is_empty() {
            return Err(validation("times is empty"));
        }

        let mut outputs = split_list(e.required("outputs")?)
            .map(|name| {
                Output::from_name(name)
                    .ok_or_else(|| e.parse_error("outputs", format!("unknown output `{name}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        outputs.sort();
        outputs.dedup();
        if outputs.is_empty() {
            return Err(validation("outputs is empty"));
        }

        let defaults = GridSpec::default();
        let grid = GridSpec {
            n_x: e.count("grid.n_x")?.unwrap_or(defaults.n_x),
            n_y: e.count("grid.n_y")?.unwrap_or(defaults.n_y),
            tail_rel: e.number("grid.tail_rel")?.unwrap_or(defaults.tail_rel),
            x_halfwidth: e.number("grid.x_halfwidth")?,
            y_halfwidth: e.number("grid.y_halfwidth")?,
            p_max: e.number("grid.p_max")?.unwrap_or(defaults.p_max),
        };

        let fringes = FringeSpec {
            x0: e.number("fringes.x0")?,
            p_band: e
                .number("fringes.p_band")?
                .unwrap_or(wigwell_core::wigner::DEFAULT_FRINGE_BAND),
        };

        let plot_compat = match e.raw("plot_compat") {
            None => false,
            Some("true") => true,
            Some("false") => false,
            Some(v) => {
                return Err(
                    e.parse_error("plot_compat", format!("expected true or false, got `{v}`"))
                )
            }
        };

        let ladder = match e.raw("bench.ladder") {
            None => vec![751, 1501, 3001],
            Some(v) => split_list(v)
                .map(|item| {
                    item.parse::<usize>().map_err(|_| {
                        e.parse_error("bench.ladder", format!("not a count: `{item}`"))
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let bench = BenchSpec {
            ladder,
            half_width: e.number("bench.L")?,
        };

        let scenario = Scenario {
            name: e.raw("name").unwrap_or("").to_string(),
            wells,
            theta,
            times,
            outputs,
            grid,
            fringes,
            plot_compat,
            bench,
            samples: e.count("samples.n")?.unwrap_or(801),
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// Re-check every invariant that does not depend on parsing.
    pub fn validate(&self) -> Result<()> {
        let g = &self.grid;
        if g.n_x < 2 {
            return Err(validation(format!(
                "grid.n_x = {} must be at least 2",
                g.n_x
            )));
        }
        if g.n_y < 64 || !g.n_y.is_power_of_two() {
            return Err(validation(format!(
                "grid.n_y = {} must be a power of two >= 64",
                g.n_y
            )));
        }
        if !(g.tail_rel > 0.0 && g.tail_rel < 1.0) {
            return Err(validation(format!(
                "grid.tail_rel = {} outside (0, 1)",
                g.tail_rel
            )));
        }
        for (key, value) in [
            ("grid.x_halfwidth", g.x_halfwidth),
            ("grid.y_halfwidth", g.y_halfwidth),
            ("bench.L", self.bench.half_width),
            ("grid.p_max", Some(g.p_max)),
            ("fringes.p_band", Some(self.fringes.p_band)),
        ] {
            if let Some(v) = value {
                if v.is_nan() || v <= 0.0 {
                    return Err(validation(format!("{key} = {v} must be positive")));
                }
            }
        }
        if self.samples < 2 {
            return Err(validation("samples.n must be at least 2"));
        }
        if self.outputs.contains(&Output::Bench) {
            if self.bench.ladder.is_empty() {
                return Err(validation("bench.ladder is empty"));
            }
            if let Some(n) = self.bench.ladder.iter().find(|&&n| n < 16) {
                return Err(validation(format!("bench.ladder entry {n} is below 16")));
            }
        }
        Ok(())
    }

    /// Scenario for a single output, as used by the per-artifact verbs.
    pub fn with_outputs(mut self, outputs: &[Output]) -> Result<Self> {
        let mut outputs = outputs.to_vec();
        outputs.sort();
        outputs.dedup();
        self.outputs = outputs;
        self.validate()?;
        Ok(self)
    }
}

fn parse_wells(e: &Entries) -> Result<Vec<WellParams>> {
    let kind = e.required("well.kind")?;
    let e0 = e.required_number("well.E0")?;
    let levels = match (e.number_list("well.E1")?, e.number_list("well.deltaE")?) {
        (Some(_), Some(_)) => {
            return Err(e.parse_error(
                "well.deltaE",
                "give either well.E1 or well.deltaE, not both",
            ))
        }
        (Some(e1), None) => e1,
        (None, Some(delta)) => delta.iter().map(|d| e0 + d).collect(),
        (None, None) => return Err(CliError::missing("well.E1 or well.deltaE")),
    };
    if levels.is_empty() {
        return Err(validation("no excited-state energy given"));
    }
    let deltas = match e.number_list("well.deltaE")? {
        Some(d) => d,
        None => levels.iter().map(|e1| e1 - e0).collect(),
    };
    match kind {
        "symmetric" => {
            for key in ["well.alpha", "well.beta"] {
                if e.raw(key).is_some() {
                    return Err(e.parse_error(key, "not a parameter of the symmetric well"));
                }
            }
            levels
                .iter()
                .map(|&e1| {
                    SymmetricWellParams::new(e0, e1)
                        .map(WellParams::from)
                        .map_err(|err| validation(err.to_string()))
                })
                .collect()
        }
        "asymmetric" => {
            let alpha = e.required_number("well.alpha")?;
            let beta = e.required_number("well.beta")?;
            deltas
                .iter()
                .map(|&d| {
                    AsymmetricWellParams::new(alpha, beta, e0, d)
                        .map(WellParams::from)
                        .map_err(|err| validation(err.to_string()))
                })
                .collect()
        }
        other => Err(e.parse_error(
            "well.kind",
            format!("expected symmetric or asymmetric, got `{other}`"),
        )),
    }
}
