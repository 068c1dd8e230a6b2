//! Identity registry, guard-aware grid sweeps and reports.
//!
//! A [`GridSpec`] names the identities to check and the ranges of every
//! parameter. Each identity only ranges over the parameters it uses, so a
//! grid over `m, n, r, k` still yields one record per `k` for an identity
//! that depends on `k` alone.

mod registry;
mod report;

pub use registry::{list_identities, registry, select, IdentityDescriptor, Instance, Kind, Param};
pub use report::{GridReport, ParamValue, Status, Summary, VerificationRecord};

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::engine::TermAccessor;
use crate::exact::{fraction_text, from_int, Rational};
use crate::seq::{gen_term, SequenceSpec};
use crate::{Error, Result};

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "GFSUM_JOBS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub m: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
    pub k: RangeInclusive<i64>,
    pub g_seeds: Vec<SequenceSpec>,
    /// Seeds for `H`; empty means "same as `g_seeds`".
    pub h_seeds: Vec<SequenceSpec>,
    /// Selectors: `all`, exact ids or id prefixes.
    pub identities: Vec<String>,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            m: -6..=6,
            n: -6..=6,
            r: -6..=6,
            k: 0..=6,
            g_seeds: vec![SequenceSpec::fibonacci(), SequenceSpec::lucas()],
            h_seeds: Vec::new(),
            identities: vec!["all".into()],
            jobs: 1,
        }
    }
}

impl GridSpec {
    pub fn for_identity(id: &str) -> Self {
        GridSpec { identities: vec![id.into()], ..Default::default() }
    }

    fn validate(&self) -> Result<()> {
        for (name, r) in [("m", &self.m), ("n", &self.n), ("r", &self.r), ("k", &self.k)] {
            if r.start() > r.end() {
                return Err(Error::MalformedRange(format!("{name} = {}..{}", r.start(), r.end())));
            }
        }
        if *self.k.start() < 0 {
            return Err(Error::MalformedRange(format!(
                "k = {}..{} (k must be >= 0)",
                self.k.start(),
                self.k.end()
            )));
        }
        if self.g_seeds.is_empty() {
            return Err(Error::BadSequence("empty seed list".into()));
        }
        for s in self.g_seeds.iter().chain(&self.h_seeds) {
            if s.g0.to_i64().is_none() || s.g1.to_i64().is_none() {
                return Err(Error::BadSequence(s.label.clone()));
            }
        }
        Ok(())
    }

    fn h_list(&self) -> &[SequenceSpec] {
        if self.h_seeds.is_empty() {
            &self.g_seeds
        } else {
            &self.h_seeds
        }
    }

    /// An index window wide enough that every identity in the registry stays
    /// inside it for this grid.
    fn term_window(&self) -> i64 {
        let amax = |r: &RangeInclusive<i64>| r.start().abs().max(r.end().abs());
        amax(&self.m) + 4 * (amax(&self.n) + amax(&self.r) + 2) * (amax(&self.k) + 1)
    }
}

/// Terms of one sequence precomputed over `-w..=w`, computed on demand
/// outside it.
pub struct CachedSequence {
    spec: SequenceSpec,
    w: i64,
    values: Vec<Rational>,
}

impl CachedSequence {
    pub fn new(spec: SequenceSpec, w: i64) -> Self {
        let values = (-w..=w).map(|m| from_int(gen_term(&spec, m))).collect();
        CachedSequence { spec, w, values }
    }
}

impl TermAccessor for CachedSequence {
    fn term(&self, m: i64) -> Rational {
        if m.abs() <= self.w {
            self.values[(m + self.w) as usize].clone()
        } else {
            from_int(gen_term(&self.spec, m))
        }
    }
}

struct Task<'a> {
    desc: &'a IdentityDescriptor,
    m: i64,
    n: i64,
    r: i64,
    k: i64,
    g: usize,
    h: usize,
}

fn axis(used: bool, range: &RangeInclusive<i64>) -> Vec<i64> {
    if used {
        range.clone().collect()
    } else {
        vec![0]
    }
}

fn seed_value(s: &SequenceSpec) -> ParamValue {
    // validated to fit
    ParamValue::Seed([s.g0.to_i64().unwrap_or_default(), s.g1.to_i64().unwrap_or_default()])
}

/// Evaluates every tuple of the grid. The record order depends only on the
/// grid, never on the worker count.
pub fn run_grid(grid: &GridSpec) -> Result<GridReport> {
    grid.validate()?;
    let mut descs: Vec<IdentityDescriptor> = Vec::new();
    for sel in &grid.identities {
        for d in select(sel)? {
            if !descs.iter().any(|e| e.id == d.id) {
                descs.push(d);
            }
        }
    }
    descs.sort_by(|a, b| a.id.cmp(b.id));

    let w = grid.term_window();
    let gs: Vec<CachedSequence> = grid.g_seeds.iter().map(|s| CachedSequence::new(s.clone(), w)).collect();
    let hs: Vec<CachedSequence> = grid.h_list().iter().map(|s| CachedSequence::new(s.clone(), w)).collect();

    let mut tasks = Vec::new();
    for d in &descs {
        let h_axis: Vec<usize> = if d.uses(Param::H) { (0..hs.len()).collect() } else { vec![0] };
        for g in 0..gs.len() {
            for &h in &h_axis {
                for &m in &axis(d.uses(Param::M), &grid.m) {
                    for &n in &axis(d.uses(Param::N), &grid.n) {
                        for &r in &axis(d.uses(Param::R), &grid.r) {
                            for &k in &axis(d.uses(Param::K), &grid.k) {
                                tasks.push(Task { desc: d, m, n, r, k, g, h });
                            }
                        }
                    }
                }
            }
        }
    }

    let g_list = &grid.g_seeds;
    let h_list = grid.h_list();
    let evaluate = |t: &Task<'_>| -> VerificationRecord {
        let x = Instance { m: t.m, n: t.n, r: t.r, k: t.k, g: &gs[t.g], h: &hs[t.h] };
        let mut params = BTreeMap::new();
        for p in t.desc.params {
            let v = match p {
                Param::M => ParamValue::Int(t.m),
                Param::N => ParamValue::Int(t.n),
                Param::R => ParamValue::Int(t.r),
                Param::K => ParamValue::Int(t.k),
                Param::G => seed_value(&g_list[t.g]),
                Param::H => seed_value(&h_list[t.h]),
            };
            params.insert(p.name().to_string(), v);
        }
        let mut rec = VerificationRecord {
            identity: t.desc.id.to_string(),
            params,
            lhs: None,
            rhs: None,
            status: Status::SkippedGuard,
            guard: None,
        };
        if let Err(e) = t.desc.guard(&x) {
            rec.guard = Some(match e {
                Error::Guard(text) => text,
                other => other.to_string(),
            });
            return rec;
        }
        match t.desc.eval(&x) {
            Ok(c) => {
                rec.status = if c.equal { Status::Pass } else { Status::Fail };
                rec.lhs = Some(fraction_text(&c.lhs));
                rec.rhs = Some(fraction_text(&c.rhs));
            }
            Err(e) => {
                // The descriptor guard let through an instance the evaluator
                // refused: report it, never hide it.
                rec.status = Status::Fail;
                rec.guard = Some(format!("evaluation error: {e}"));
            }
        }
        rec
    };

    let records: Vec<VerificationRecord> = if grid.jobs == 1 {
        tasks.iter().map(evaluate).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(grid.jobs)
            .build()
            .map_err(|e| Error::Report(e.to_string()))?;
        pool.install(|| tasks.par_iter().map(evaluate).collect())
    };
    Ok(GridReport::new(records))
}
