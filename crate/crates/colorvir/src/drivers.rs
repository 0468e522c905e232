//! Parallel versions of the core verifiers.
//!
//! Work is split by the index of the first generator (or by window and
//! sector for the classifier) and the partial reports are merged in index
//! order, so results never depend on the number of workers.

use colorvir_core::classifier::{classify_sector, ExtensionReport, StabilizationScan};
use colorvir_core::involution::{
    check_antilinearity, check_bracket_pairs_from, check_generators, involution_generators,
    InvolutionKind, InvolutionReport, DEFAULT_SAMPLES,
};
use colorvir_core::jacobi::{JacobiPlan, JacobiReport};
use colorvir_core::uea::{check_realization_pairs_from, realization_generators, RealizationReport};
use colorvir_core::{AlgebraParams, Degree, Result, Window};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

pub struct Drivers {
    pool: ThreadPool,
}

impl Drivers {
    /// A pool capped at `workers` threads, or one per core.
    pub fn new(workers: Option<usize>) -> Result<Self, ThreadPoolBuildError> {
        let mut b = ThreadPoolBuilder::new();
        if let Some(n) = workers {
            b = b.num_threads(n.max(1));
        }
        Ok(Drivers { pool: b.build()? })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn jacobi(&self, p: &AlgebraParams, w: &Window) -> JacobiReport {
        let plan = JacobiPlan::new(*p, *w);
        let parts: Vec<JacobiReport> = self
            .pool
            .install(|| (0..plan.len()).into_par_iter().map(|i| plan.check_first(i)).collect());
        let mut report = JacobiReport::new(*p, *w);
        for part in parts {
            report.merge(part);
        }
        report
    }

    pub fn realization(&self, p: &AlgebraParams, w: &Window) -> Result<RealizationReport> {
        let gens = realization_generators(p, w);
        let parts: Vec<RealizationReport> = self.pool.install(|| {
            (0..gens.len())
                .into_par_iter()
                .map(|i| check_realization_pairs_from(&gens, i, p, w))
                .collect::<Result<_>>()
        })?;
        let mut report = RealizationReport {
            params: p.extended(false),
            window: *w,
            pairs_checked: 0,
            mismatches: Vec::new(),
        };
        for part in parts {
            report.merge(part);
        }
        Ok(report)
    }

    /// Conditions (i)-(iv). The antilinearity samples are drawn
    /// sequentially from a ChaCha8 stream seeded with `seed`.
    pub fn involution(
        &self,
        kind: InvolutionKind,
        p: &AlgebraParams,
        w: &Window,
        seed: u64,
    ) -> Result<InvolutionReport> {
        let mut report = check_generators(kind, p, w)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        report.merge(check_antilinearity(kind, p, w, &mut rng, DEFAULT_SAMPLES)?);
        let gens = involution_generators(p, w);
        let parts: Vec<InvolutionReport> = self.pool.install(|| {
            (0..gens.len())
                .into_par_iter()
                .map(|i| check_bracket_pairs_from(kind, p, w, &gens, i))
                .collect::<Result<_>>()
        })?;
        for part in parts {
            report.merge(part);
        }
        Ok(report)
    }

    pub fn classify(&self, p: &AlgebraParams, w: &Window) -> ExtensionReport {
        self.classify_windows(p, core::slice::from_ref(w)).remove(0)
    }

    /// One report per window, every (window, sector) pair solved in
    /// parallel.
    pub fn classify_windows(&self, p: &AlgebraParams, windows: &[Window]) -> Vec<ExtensionReport> {
        let jobs: Vec<(Window, Degree)> = windows
            .iter()
            .flat_map(|w| Degree::ALL.map(|d| (*w, d)))
            .collect();
        let solved: Vec<_> = self.pool.install(|| {
            jobs.par_iter()
                .map(|(w, d)| classify_sector(p, w, *d))
                .collect()
        });
        let mut solved = solved.into_iter();
        windows
            .iter()
            .map(|w| {
                let (sectors, theorem) = solved.by_ref().take(Degree::ALL.len()).unzip();
                ExtensionReport {
                    params: p.extended(false),
                    window: *w,
                    sectors,
                    theorem,
                }
            })
            .collect()
    }
}

/// Scan built from per-window reports.
pub fn scan_of(p: &AlgebraParams, reports: &[ExtensionReport]) -> StabilizationScan {
    StabilizationScan {
        params: p.extended(false),
        windows: reports.iter().map(|r| r.window).collect(),
        dims: reports
            .iter()
            .map(|r| {
                let mut d = [0; 4];
                for (slot, s) in d.iter_mut().zip(&r.sectors) {
                    *slot = s.quotient_dim;
                }
                d
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use colorvir_core::classifier::{classify, stabilization_scan};
    use colorvir_core::jacobi::verify_window;
    use colorvir_core::uea::verify_realization;

    fn params(a: i32, b: i32) -> AlgebraParams {
        AlgebraParams::from_twice(a, b).unwrap()
    }

    #[test]
    fn parallel_matches_sequential() {
        let d = Drivers::new(Some(3)).unwrap();
        let w = Window::uniform(3).unwrap();
        let p = params(0, 0).extended(true);
        assert_eq!(d.jacobi(&p, &w), verify_window(&p, &w));
        let p = params(1, 2);
        assert_eq!(d.realization(&p, &w).unwrap(), verify_realization(&p, &w).unwrap());
        assert_eq!(d.classify(&p, &w), classify(&p, &w));
        let ws = [Window::uniform(2).unwrap(), w];
        assert_eq!(scan_of(&p, &d.classify_windows(&p, &ws)), stabilization_scan(&p, &ws));
    }

    #[test]
    fn involution_errors_propagate() {
        let d = Drivers::new(Some(2)).unwrap();
        let w = Window::uniform(2).unwrap();
        assert!(d.involution(InvolutionKind::Superadjoint, &params(0, 0), &w, 1).is_err());
        assert!(d.involution(InvolutionKind::Adjoint, &params(0, 0), &w, 1).unwrap().passed());
    }
}
