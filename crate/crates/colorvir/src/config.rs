//! Run configuration shared by the command line and the test suites.

use std::path::PathBuf;

use colorvir_core::involution::InvolutionKind;
use colorvir_core::{AlgebraParams, Error, HalfInt, RhoMode, Window};

/// Seed used for randomized samples when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Command {
    Jacobi,
    Classify,
    Realize,
    Involutions(InvolutionKind),
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Jacobi => "jacobi",
            Command::Classify => "classify",
            Command::Realize => "realize",
            Command::Involutions(_) => "involutions",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub l1: HalfInt,
    pub l2: HalfInt,
    /// Uniform window sizes. Only `classify` uses more than one; the
    /// others run on the largest.
    pub windows: Vec<i32>,
    pub extended: bool,
    pub rho: RhoMode,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    /// Worker cap; `None` uses every available core.
    pub workers: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command, l1: HalfInt, l2: HalfInt, window: i32) -> Self {
        RunConfig {
            command,
            l1,
            l2,
            windows: vec![window],
            extended: false,
            rho: RhoMode::Corrected,
            format: Format::Json,
            output: None,
            seed: DEFAULT_SEED,
            workers: None,
        }
    }

    pub fn params(&self) -> Result<AlgebraParams, Error> {
        Ok(AlgebraParams::new(self.l1, self.l2)?
            .extended(self.extended)
            .with_rho(self.rho))
    }

    /// Sorted, deduplicated windows.
    pub fn windows(&self) -> Result<Vec<Window>, Error> {
        let mut sizes = self.windows.clone();
        sizes.sort_unstable();
        sizes.dedup();
        if sizes.is_empty() {
            return Err(Error::EmptyWindow);
        }
        sizes.into_iter().map(Window::uniform).collect()
    }

    pub fn largest_window(&self) -> Result<Window, Error> {
        Ok(*self.windows()?.last().expect("nonempty"))
    }
}

/// Parses a spin value such as `3/2` or `1`, rejecting negatives.
pub fn parse_spin(s: &str) -> Result<HalfInt, String> {
    let v: HalfInt = s.parse().map_err(|e: Error| e.to_string())?;
    if v < HalfInt::ZERO {
        return Err(Error::NotASpinValue(v).to_string());
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spins() {
        assert_eq!(parse_spin("3/2"), Ok(HalfInt::from_twice(3)));
        assert_eq!(parse_spin("0"), Ok(HalfInt::ZERO));
        assert!(parse_spin("1/3").is_err());
        assert!(parse_spin("-1/2").is_err());
        assert!(parse_spin("x").is_err());
    }

    #[test]
    fn windows_are_sorted() {
        let mut cfg = RunConfig::new(Command::Classify, HalfInt::ZERO, HalfInt::ZERO, 6);
        cfg.windows = vec![6, 4, 6, 5];
        let w = cfg.windows().unwrap();
        assert_eq!(w.iter().map(|w| w.m_max).collect::<Vec<_>>(), [4, 5, 6]);
        cfg.windows = vec![0];
        assert_eq!(cfg.windows(), Err(Error::EmptyWindow));
    }
}
