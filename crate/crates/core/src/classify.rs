//! Census, sweep, per-model reports and verification suites behind the `quadwalk` binary.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::mpsc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::rat::{rat, ratio, Rat};
use crate::enumerate::{check_functional_equation, count_walks};
use crate::error::{Error, Result};
use crate::families::{
    classify_family, d10_guess, table_model, verify_d10_closed_forms, verify_family1b_lambda,
    verify_family1b_substitution, verify_family2b, verify_family2b_substitution, verify_gessel_substitution,
    verify_kernel_roots_1b, verify_kreweras_substitution, verify_orbit_formula,
    verify_reversed_kreweras_substitution, CheckRecord, FamilyTag, Status, TagMatch,
};
use crate::group::{group_order, orbit_sum, GroupStatus, GroupSummary, DEFAULT_BOUND, DEFAULT_DEGREE_CAP};
use crate::guess::{guess_algebraic, guess_ode, guess_recurrence, verify_fit, EquationKind, GuessedEquation};
use crate::model::{enumerate_space, Model};

pub const SCHEMA: &str = "qw/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub max_mult: u32,
    pub raw: u64,
    pub interesting: u64,
    pub classes: usize,
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max-mult {}: raw {}, interesting {}, classes {}",
            self.max_mult, self.raw, self.interesting, self.classes
        )
    }
}

pub fn census(max_mult: u32) -> CensusReport {
    let c = enumerate_space(max_mult);
    CensusReport {
        max_mult,
        raw: c.raw,
        interesting: c.interesting,
        classes: c.class_count(),
    }
}

/// First line of a sweep file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepHeader {
    pub schema: String,
    pub max_mult: u32,
    pub group_bound: u32,
    pub degree_cap: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guess_terms: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub schema: String,
    pub model: String,
    pub group: GroupSummary,
    pub families: Vec<TagMatch>,
    /// Present for finite groups only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_sum_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guess: Option<GuessSummary>,
}

/// Compact description of a guessed equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuessSummary {
    pub series: String,
    pub kind: EquationKind,
    pub order: usize,
    pub degree: usize,
    pub confirmed: bool,
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub max_mult: u32,
    pub group_bound: u32,
    pub degree_cap: u32,
    pub out: Option<PathBuf>,
    pub resume: bool,
    pub jobs: Option<usize>,
    /// Run the recurrence guesser on `f(0,0,t)` of finite-group classes with this many terms.
    pub guess_terms: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_mult: 3,
            group_bound: DEFAULT_BOUND,
            degree_cap: DEFAULT_DEGREE_CAP,
            out: None,
            resume: false,
            jobs: None,
            guess_terms: None,
        }
    }
}

impl SweepOptions {
    fn header(&self) -> SweepHeader {
        SweepHeader {
            schema: SCHEMA.to_string(),
            max_mult: self.max_mult,
            group_bound: self.group_bound,
            degree_cap: self.degree_cap,
            guess_terms: self.guess_terms,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub classes: usize,
    /// Class counts keyed by group order; infinite verdicts under `"none"`.
    pub by_order: BTreeMap<String, usize>,
    pub finite: usize,
    pub family_covered: usize,
    pub zero_orbit_sum: usize,
    pub degree_cap_exceeded: usize,
}

impl SweepSummary {
    pub fn from_records(recs: &[SweepRecord]) -> SweepSummary {
        let mut s = SweepSummary {
            classes: recs.len(),
            ..Default::default()
        };
        for r in recs {
            let key = r.group.order.map_or_else(|| "none".to_string(), |o| o.to_string());
            *s.by_order.entry(key).or_insert(0) += 1;
            if r.group.status == GroupStatus::Finite {
                s.finite += 1;
            }
            if r.group.status == GroupStatus::DegreeCapExceeded {
                s.degree_cap_exceeded += 1;
            }
            if r.families.iter().any(|t| !t.tag.is_d10()) {
                s.family_covered += 1;
            }
            if r.orbit_sum_zero == Some(true) {
                s.zero_orbit_sum += 1;
            }
        }
        s
    }

    pub fn order_count(&self, order: u32) -> usize {
        self.by_order.get(&order.to_string()).copied().unwrap_or(0)
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classes {}", self.classes)?;
        let mut keys: Vec<&String> = self.by_order.keys().collect();
        keys.sort_by_key(|k| k.parse::<u32>().unwrap_or(u32::MAX));
        for k in keys {
            writeln!(f, "  order {:>4}: {}", k, self.by_order[k])?;
        }
        writeln!(f, "finite {}", self.finite)?;
        writeln!(f, "family-covered {}", self.family_covered)?;
        writeln!(f, "zero orbit sum {}", self.zero_orbit_sum)?;
        write!(f, "degree cap exceeded {}", self.degree_cap_exceeded)
    }
}

fn guess_summary(m: &Model, terms: usize) -> Option<GuessSummary> {
    let ext = (5 * terms).div_ceil(4);
    let f = count_walks(m, ext - 1).series_f00();
    let eq = guess_recurrence(&f.coeffs()[..terms], 3, 3).ok()??;
    Some(GuessSummary {
        series: "f(0,0,t)".into(),
        kind: eq.kind,
        order: eq.effective_order(),
        degree: eq.effective_degree(),
        confirmed: verify_fit(&eq, f.coeffs()),
    })
}

/// Group, families and orbit-sum status of one canonical class.
pub fn sweep_record(m: &Model, group_bound: u32, degree_cap: u32, guess_terms: Option<usize>) -> Result<SweepRecord> {
    let g = group_order(m, group_bound, degree_cap)?;
    let orbit_sum_zero = if g.is_finite() {
        Some(orbit_sum(&g)?.is_zero())
    } else {
        None
    };
    let guess = match guess_terms {
        Some(t) if g.is_finite() => guess_summary(m, t),
        _ => None,
    };
    Ok(SweepRecord {
        schema: SCHEMA.to_string(),
        model: m.to_string(),
        group: GroupSummary::from(&g),
        families: classify_family(m).matches,
        orbit_sum_zero,
        guess,
    })
}

fn partial_path(out: &Path) -> PathBuf {
    let mut p = out.as_os_str().to_owned();
    p.push(".partial");
    PathBuf::from(p)
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Cache(e.to_string())
}

/// Records of an existing sweep file; a truncated last line is dropped.
fn read_cache(path: &Path, want: &SweepHeader) -> Result<Vec<SweepRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut lines = BufReader::new(file).lines();
    let head = match lines.next() {
        Some(l) => l?,
        None => return Ok(Vec::new()),
    };
    let header: SweepHeader = serde_json::from_str(&head)
        .map_err(|e| Error::Cache(format!("{}: bad header: {}", path.display(), e)))?;
    if header != *want {
        return Err(Error::Cache(format!(
            "{}: header {} does not match requested {}",
            path.display(),
            head,
            serde_json::to_string(want).map_err(json_err)?
        )));
    }
    let mut recs = Vec::new();
    for l in lines {
        let l = l?;
        match serde_json::from_str::<SweepRecord>(&l) {
            Ok(r) if r.schema == SCHEMA => recs.push(r),
            Ok(r) => return Err(Error::Cache(format!("record schema {} is not {}", r.schema, SCHEMA))),
            Err(_) => break,
        }
    }
    Ok(recs)
}

fn write_sorted(out: &Path, header: &SweepHeader, recs: &[SweepRecord]) -> Result<()> {
    let mut tmp = out.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut w = BufWriter::new(File::create(&tmp)?);
        writeln!(w, "{}", serde_json::to_string(header).map_err(json_err)?)?;
        for r in recs {
            writeln!(w, "{}", serde_json::to_string(r).map_err(json_err)?)?;
        }
        w.flush()?;
    }
    fs::rename(&tmp, out)?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
    /// Classes reused from the cache.
    pub reused: usize,
}

/// Runs the sweep over all canonical classes with multiplicities in `0..=max_mult`.
///
/// With `out`, finished records are appended to `<out>.partial` as they arrive and the
/// final file is written sorted by canonical model string; `resume` reuses both files.
pub fn sweep(opts: &SweepOptions) -> Result<SweepOutcome> {
    let header = opts.header();
    let mut done: BTreeMap<String, SweepRecord> = BTreeMap::new();
    if let (Some(out), true) = (&opts.out, opts.resume) {
        for path in [out.clone(), partial_path(out)] {
            for r in read_cache(&path, &header)? {
                done.insert(r.model.clone(), r);
            }
        }
    }
    let reused = done.len();
    let census = enumerate_space(opts.max_mult);
    let todo: Vec<&Model> = census
        .classes
        .iter()
        .filter(|m| !done.contains_key(&m.to_string()))
        .collect();

    let (tx, rx) = mpsc::channel::<SweepRecord>();
    let writer = {
        let partial = opts.out.as_ref().map(|o| partial_path(o));
        let header = header.clone();
        let fresh = !opts.resume;
        std::thread::spawn(move || -> Result<Vec<SweepRecord>> {
            let mut w = match &partial {
                Some(p) => {
                    let exists = p.exists() && !fresh;
                    let f = OpenOptions::new()
                        .create(true)
                        .append(!fresh)
                        .write(true)
                        .truncate(fresh)
                        .open(p)?;
                    let mut w = BufWriter::new(f);
                    if !exists {
                        writeln!(w, "{}", serde_json::to_string(&header).map_err(json_err)?)?;
                    }
                    Some(w)
                }
                None => None,
            };
            let mut got = Vec::new();
            for r in rx {
                if let Some(w) = w.as_mut() {
                    writeln!(w, "{}", serde_json::to_string(&r).map_err(json_err)?)?;
                    w.flush()?;
                }
                got.push(r);
            }
            Ok(got)
        })
    };

    let work = || -> Result<()> {
        todo.par_iter().try_for_each_with(tx, |tx, m| {
            let r = sweep_record(m, opts.group_bound, opts.degree_cap, opts.guess_terms)?;
            tx.send(r).map_err(|e| Error::Io(e.to_string()))
        })
    };
    let res = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(work),
        None => work(),
    };
    let fresh = writer.join().map_err(|_| Error::Io("writer thread panicked".into()))??;
    res?;
    for r in fresh {
        done.insert(r.model.clone(), r);
    }
    let records: Vec<SweepRecord> = done.into_values().collect();
    if let Some(out) = &opts.out {
        write_sorted(out, &header, &records)?;
        let p = partial_path(out);
        if p.exists() {
            fs::remove_file(p)?;
        }
    }
    let summary = SweepSummary::from_records(&records);
    Ok(SweepOutcome {
        records,
        summary,
        reused,
    })
}

/// Everything the `model` subcommand prints.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelReport {
    pub schema: String,
    pub model: String,
    /// Reason the model is uninteresting, if it is.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uninteresting: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    pub families: Vec<TagMatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_sum_zero: Option<bool>,
    pub terms: usize,
    /// `f_{0,0,n}` for `n ≤ terms`.
    pub excursions: Vec<String>,
    /// Number of walks of length `n ≤ terms`.
    pub totals: Vec<String>,
    pub functional_equation: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub guesses: Vec<GuessedEquation>,
}

#[derive(Clone, Copy, Debug)]
pub struct ModelOptions {
    pub terms: usize,
    pub group_bound: u32,
    pub degree_cap: u32,
    pub guess: bool,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions {
            terms: 12,
            group_bound: DEFAULT_BOUND,
            degree_cap: DEFAULT_DEGREE_CAP,
            guess: false,
        }
    }
}

pub fn model_report(m: &Model, opts: &ModelOptions) -> Result<ModelReport> {
    let ct = count_walks(m, opts.terms);
    let fe = check_functional_equation(m, &ct);
    let mut r = ModelReport {
        schema: SCHEMA.to_string(),
        model: m.to_string(),
        uninteresting: m.degeneracy().map(|d| d.to_string()),
        canonical: None,
        group: None,
        families: Vec::new(),
        orbit_sum_zero: None,
        terms: opts.terms,
        excursions: (0..=opts.terms).map(|n| ct.get(0, 0, n).to_string()).collect(),
        totals: (0..=opts.terms).map(|n| ct.total(n).to_string()).collect(),
        functional_equation: Status::check(fe.is_zero(), || "nonzero residual".into()),
        guesses: Vec::new(),
    };
    if r.uninteresting.is_some() {
        return Ok(r);
    }
    r.canonical = Some(m.canonicalize()?.model.to_string());
    let g = group_order(m, opts.group_bound, opts.degree_cap)?;
    if g.is_finite() {
        r.orbit_sum_zero = Some(orbit_sum(&g)?.is_zero());
    }
    r.group = Some(GroupSummary::from(&g));
    r.families = classify_family(m).matches;
    if opts.guess {
        r.guesses = guess_ladder(&ct.series_f00().coeffs()[..=opts.terms], GuessKind::Auto);
    }
    Ok(r)
}

impl fmt::Display for ModelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {}", self.model)?;
        if let Some(u) = &self.uninteresting {
            writeln!(f, "uninteresting: {}", u)?;
        } else {
            writeln!(f, "canonical {}", self.canonical.as_deref().unwrap_or("?"))?;
        }
        if let Some(g) = &self.group {
            match g.order {
                Some(o) => writeln!(f, "group D{} (order {})", o, o)?,
                None => writeln!(f, "group {}", g.status)?,
            }
        }
        if !self.families.is_empty() {
            let tags: Vec<String> = self
                .families
                .iter()
                .map(|t| {
                    let mut s = t.tag.to_string();
                    if let Some(l) = &t.lambda {
                        s.push_str(&format!(" lambda={}", l));
                    }
                    if t.reflected {
                        s.push_str(" (reflected)");
                    }
                    s
                })
                .collect();
            writeln!(f, "families {}", tags.join(", "))?;
        }
        if let Some(z) = self.orbit_sum_zero {
            writeln!(f, "orbit sum {}", if z { "zero" } else { "nonzero" })?;
        }
        writeln!(f, "f(0,0,n), n <= {}: {}", self.terms, self.excursions.join(", "))?;
        writeln!(f, "walks of length n: {}", self.totals.join(", "))?;
        write!(f, "functional equation to t^{}: {}", self.terms, self.functional_equation)?;
        for g in &self.guesses {
            write!(f, "\nguessed {:?}: {}", g.kind, g)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GuessKind {
    Auto,
    Algebraic,
    Recurrence,
    Ode,
}

impl FromStr for GuessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GuessKind> {
        match s {
            "auto" => Ok(GuessKind::Auto),
            "algebraic" => Ok(GuessKind::Algebraic),
            "recurrence" => Ok(GuessKind::Recurrence),
            "ode" => Ok(GuessKind::Ode),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown equation kind {:?}", s),
            }),
        }
    }
}

/// Bounds tried in order by [`guess_ladder`].
pub const GUESS_LADDER: [(usize, usize); 6] = [(1, 1), (2, 2), (2, 4), (3, 4), (3, 6), (4, 8)];

/// First equation of each requested kind found along [`GUESS_LADDER`].
pub fn guess_ladder(data: &[Rat], kind: GuessKind) -> Vec<GuessedEquation> {
    let kinds: &[EquationKind] = match kind {
        GuessKind::Auto => &[EquationKind::Algebraic, EquationKind::Recurrence, EquationKind::Ode],
        GuessKind::Algebraic => &[EquationKind::Algebraic],
        GuessKind::Recurrence => &[EquationKind::Recurrence],
        GuessKind::Ode => &[EquationKind::Ode],
    };
    let series = crate::algebra::series::TSeries::from_rats(data);
    let mut out = Vec::new();
    for &k in kinds {
        for (o, d) in GUESS_LADDER {
            let r = match k {
                EquationKind::Algebraic => guess_algebraic(&series, o, d),
                EquationKind::Recurrence => guess_recurrence(data, o, d),
                EquationKind::Ode => guess_ode(&series, o, d),
            };
            match r {
                Ok(Some(e)) => {
                    out.push(e);
                    break;
                }
                Ok(None) => {}
                Err(_) => break,
            }
        }
    }
    out
}

/// Guesses for `f(0,0,t)` of a model with `terms` coefficients, each checked on a quarter more.
pub fn guess_model(m: &Model, terms: usize, kind: GuessKind) -> Vec<(GuessedEquation, bool)> {
    let ext = (5 * terms).div_ceil(4);
    let f = count_walks(m, ext - 1).series_f00();
    guess_ladder(&f.coeffs()[..terms], kind)
        .into_iter()
        .map(|e| {
            let ok = verify_fit(&e, f.coeffs());
            (e, ok)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    D4,
    D6,
    D8,
    D10,
    Kernel,
    Funceq,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "d4" => Ok(Suite::D4),
            "d6" => Ok(Suite::D6),
            "d8" => Ok(Suite::D8),
            "d10" => Ok(Suite::D10),
            "kernel" => Ok(Suite::Kernel),
            "funceq" => Ok(Suite::Funceq),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown suite {:?}", s),
            }),
        }
    }
}

fn table(tag: FamilyTag) -> Model {
    table_model(tag).expect("every tag has a table model")
}

fn orbit_check(m: &Model, tag: FamilyTag, n: usize, name: &str) -> CheckRecord {
    let c = verify_orbit_formula(m, tag, n);
    CheckRecord::new(m, tag, name, n, c.status)
}

/// Models of family 1b obtained from Kreweras by scalings with rational cube roots.
pub fn kreweras_scaled_models() -> Vec<Model> {
    let k = Model::kreweras();
    vec![
        k.clone(),
        k.with(0, -1, rat(8)),
        k.with(-1, 0, rat(27)),
        k.with(1, 1, rat(2)).with(-1, 0, rat(4)),
        k.with(1, 1, ratio(1, 2)).with(0, -1, rat(2)),
    ]
}

pub fn reversed_kreweras_scaled_models() -> Vec<Model> {
    let k = Model::reversed_kreweras();
    vec![k.clone(), k.with(-1, -1, rat(8)), k.with(1, 0, rat(4)).with(0, 1, rat(2))]
}

/// Family-1b models with `a_{1,1} a_{-1,-1} ≠ 0`.
pub fn family1b_models() -> Vec<Model> {
    vec![
        table(FamilyTag::F1b),
        Model::from_ints([1, 1, 0, 1, 1, 0, 1, 1]),
        Model::from_ints([2, 1, 0, 2, 1, 0, 2, 1]),
    ]
}

/// Family-2b models with square-friendly `a_{-1,-1} a_{-1,1}`.
pub fn family2b_models() -> Vec<Model> {
    vec![
        table(FamilyTag::F2b),
        Model::from_ints([4, 4, 1, 4, 2, 0, 0, 1]),
        Model::from_ints([1, 3, 4, 1, 8, 0, 0, 4]),
    ]
}

/// Family-4b models with square-friendly `a_{1,0} a_{-1,0}`.
pub fn family4b_models() -> Vec<Model> {
    vec![
        Model::gessel(),
        table(FamilyTag::F4b),
        Model::from_ints([4, 2, 0, 0, 0, 0, 8, 4]),
        Model::from_ints([3, 9, 0, 0, 0, 0, 1, 3]),
    ]
}

/// Pseudo-random interesting models with small signed rational multiplicities.
pub fn random_models(count: usize, seed: u64) -> Vec<Model> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: [Rat; 8] = std::array::from_fn(|_| {
            if rng.gen_range(0..4) == 0 {
                rat(0)
            } else {
                ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
            }
        });
        let m = Model::new(a);
        if !m.is_uninteresting() {
            out.push(m);
        }
    }
    out
}

fn d4(n: usize) -> Vec<CheckRecord> {
    let mut v = vec![orbit_check(&table(FamilyTag::F0), FamilyTag::F0, n, "orbit-formula")];
    v.push(orbit_check(&Model::simple(), FamilyTag::F0, n, "orbit-formula"));
    v
}

fn d6(n: usize) -> Vec<CheckRecord> {
    let mut v = Vec::new();
    v.push(orbit_check(&table(FamilyTag::F1a), FamilyTag::F1a, n, "orbit-formula"));
    v.push(orbit_check(&Model::from_ints([0, 2, 0, 0, 3, 1, 0, 0]), FamilyTag::F1a, n, "orbit-formula-lambda0"));
    v.push(orbit_check(&table(FamilyTag::F2a), FamilyTag::F2a, n, "orbit-formula"));
    v.push(orbit_check(&table(FamilyTag::F3a), FamilyTag::F3a, n, "orbit-formula"));
    for m in kreweras_scaled_models() {
        v.push(CheckRecord::new(&m, FamilyTag::F1b, "kreweras-substitution", n, verify_kreweras_substitution(&m, n)));
    }
    for m in reversed_kreweras_scaled_models() {
        let s = verify_reversed_kreweras_substitution(&m, n);
        v.push(CheckRecord::new(&m, FamilyTag::F1b, "reversed-kreweras-substitution", n, s));
    }
    for m in family1b_models() {
        v.push(CheckRecord::new(&m, FamilyTag::F1b, "family1b-substitution", n, verify_family1b_substitution(&m, n)));
    }
    for l in [rat(1), rat(2), ratio(1, 2)] {
        let m = crate::families::family1b_model(&l);
        v.push(CheckRecord::new(&m, FamilyTag::F1b, &format!("lambda-closed-form[{}]", l), n, verify_family1b_lambda(&l, n)));
    }
    for l in [rat(0), rat(1), rat(2)] {
        let m = crate::families::family2b_model(&l);
        v.push(CheckRecord::new(&m, FamilyTag::F2b, &format!("ztuv-closed-form[{}]", l), n, verify_family2b(&l, n)));
    }
    for m in family2b_models() {
        v.push(CheckRecord::new(&m, FamilyTag::F2b, "family2b-substitution", n, verify_family2b_substitution(&m, n)));
    }
    v
}

fn d8(n: usize) -> Vec<CheckRecord> {
    let mut v = vec![orbit_check(&table(FamilyTag::F4a), FamilyTag::F4a, n, "orbit-formula")];
    for m in family4b_models() {
        v.push(CheckRecord::new(&m, FamilyTag::F4b, "gessel-substitution", n, verify_gessel_substitution(&m, n)));
    }
    v
}

fn d10(n: usize) -> Vec<CheckRecord> {
    let mut v = Vec::new();
    for tag in [FamilyTag::D10Left, FamilyTag::D10Mid] {
        v.push(CheckRecord::new(table(tag), tag, "closed-form", n, verify_d10_closed_forms(tag, n)));
    }
    for tag in [FamilyTag::D10Left, FamilyTag::D10Mid, FamilyTag::D10Right] {
        let terms = (4 * n).max(60);
        let status = match d10_guess(tag, terms) {
            Ok(g) if g.recurrence.is_some() => Status::check(g.confirmed, || "guess not confirmed on extended data".into()),
            Ok(_) => Status::skipped("no recurrence within bounds"),
            Err(e) => Status::fail(e.to_string()),
        };
        v.push(CheckRecord::new(table(tag), tag, "guessed-f00-recurrence", terms, status));
    }
    v
}

fn kernel(n: usize) -> Vec<CheckRecord> {
    let m = crate::families::family1b_model(&rat(1));
    vec![CheckRecord::new(&m, FamilyTag::F1b, "kernel-roots[1]", n, verify_kernel_roots_1b(&rat(1), n))]
}

/// Table models plus the given number of pseudo-random models.
pub fn funceq_models(random: usize) -> Vec<Model> {
    let mut ms: Vec<Model> = FamilyTag::ALL.iter().map(|&t| table(t)).collect();
    ms.extend([Model::kreweras(), Model::gessel(), Model::simple(), Model::all_ones()]);
    ms.extend(random_models(random, 0x00f0_0d5e));
    ms
}

fn funceq(n: usize) -> Vec<CheckRecord> {
    funceq_models(100)
        .par_iter()
        .map(|m| {
            let ct = count_walks(m, n);
            let r = check_functional_equation(m, &ct);
            CheckRecord::new(m, "-", "functional-equation", n, Status::check(r.is_zero(), || "nonzero residual".into()))
        })
        .collect()
}

/// Runs a verification suite at truncation order `n`.
pub fn run_suite(suite: Suite, n: usize) -> Vec<CheckRecord> {
    match suite {
        Suite::D4 => d4(n),
        Suite::D6 => d6(n),
        Suite::D8 => d8(n),
        Suite::D10 => d10(n),
        Suite::Kernel => kernel(n),
        Suite::Funceq => funceq(n),
        Suite::All => {
            let parts = [Suite::D4, Suite::D6, Suite::D8, Suite::D10, Suite::Kernel, Suite::Funceq];
            parts.par_iter().flat_map(|&s| run_suite(s, n)).collect()
        }
    }
}

/// Counts of pass, fail and skipped records.
pub fn tally(recs: &[CheckRecord]) -> (usize, usize, usize) {
    let pass = recs.iter().filter(|r| r.status.is_pass()).count();
    let fail = recs.iter().filter(|r| r.status.is_fail()).count();
    (pass, fail, recs.len() - pass - fail)
}

/// Distinct canonical strings, for consistency checks on sweep files.
pub fn record_models(recs: &[SweepRecord]) -> BTreeSet<&str> {
    recs.iter().map(|r| r.model.as_str()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_small() {
        assert_eq!(census(0).classes, 0);
        let c = census(1);
        assert_eq!((c.raw, c.classes), (256, 79));
    }

    #[test]
    fn kreweras_report() {
        let r = model_report(&Model::kreweras(), &ModelOptions::default()).unwrap();
        assert_eq!(r.group.as_ref().unwrap().order, Some(6));
        assert!(r.families.iter().any(|t| t.tag == FamilyTag::F1b));
        assert_eq!(r.orbit_sum_zero, Some(true));
        assert!(r.functional_equation.is_pass());
        let d4 = model_report(&table(FamilyTag::F0), &ModelOptions::default()).unwrap();
        assert_eq!(d4.group.unwrap().order, Some(4));
        assert_eq!(d4.families[0].lambda, Some(ratio(1, 3)));
        assert_eq!(d4.orbit_sum_zero, Some(false));
    }

    #[test]
    fn uninteresting_report() {
        let m = Model::from_ints([1, 1, 1, 0, 0, 0, 0, 0]);
        let r = model_report(&m, &ModelOptions::default()).unwrap();
        assert!(r.uninteresting.is_some() && r.group.is_none());
    }

    #[test]
    fn sweep_mult1_and_resume() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("s.jsonl");
        let opts = SweepOptions {
            max_mult: 1,
            out: Some(out.clone()),
            ..Default::default()
        };
        let a = sweep(&opts).unwrap();
        assert_eq!(a.summary.classes, 79);
        let fresh = fs::read_to_string(&out).unwrap();
        assert!(fresh.starts_with(r#"{"schema":"qw/1","max_mult":1,"group_bound":15,"degree_cap":200}"#));
        let lines: Vec<&str> = fresh.lines().skip(1).collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);

        let keep: Vec<&str> = fresh.lines().take(30).collect();
        fs::write(&out, keep.join("\n") + "\n{\"schema\":\"qw/1\",\"mod").unwrap();
        let b = sweep(&SweepOptions { resume: true, ..opts.clone() }).unwrap();
        assert_eq!(b.reused, 29);
        assert_eq!(fs::read_to_string(&out).unwrap(), fresh);

        let bad = SweepOptions {
            resume: true,
            group_bound: 7,
            ..opts
        };
        assert!(matches!(sweep(&bad), Err(Error::Cache(_))));
    }

    #[test]
    fn suites_pass_small() {
        for s in [Suite::D4, Suite::D8, Suite::Kernel] {
            let recs = run_suite(s, 6);
            let (_, fail, _) = tally(&recs);
            assert_eq!(fail, 0, "{:?}: {:?}", s, recs);
        }
    }

    #[test]
    fn fixture_models_carry_tags() {
        for m in kreweras_scaled_models().iter().chain(&reversed_kreweras_scaled_models()).chain(&family1b_models()) {
            assert!(classify_family(m).has(FamilyTag::F1b), "{}", m);
        }
        for m in family2b_models() {
            assert!(classify_family(&m).has(FamilyTag::F2b), "{}", m);
        }
        for m in family4b_models() {
            assert!(classify_family(&m).has(FamilyTag::F4b), "{}", m);
        }
    }

    #[test]
    fn guess_kreweras() {
        let g = guess_model(&Model::kreweras(), 60, GuessKind::Algebraic);
        assert_eq!(g.len(), 1);
        assert!(g[0].1);
    }
}
