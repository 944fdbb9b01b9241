use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rashba_green::{EvalPoint, GreenOptions, PhysicalParams, RepChoice, SeriesConfig};

#[derive(Debug, Parser)]
#[command(name = "rashba-green", version, about = "Green's function of the 3D Rashba-Dresselhaus Hamiltonian")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate G1, G2, D±G1 and the 2×2 matrix at one point.
    Eval(Common),
    /// Report Σ, resolvent membership and convergence-region flags.
    Region(Common),
    /// Sweep one parameter and write one row per value.
    Table(TableArgs),
    /// Compare the series against quadrature, Macdonald sums and closed forms.
    Verify(Common),
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// Spectral parameter, written `a+bi`, `a-bi` or `a`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub zeta: Complex64,
    /// Evaluation point `x1,x2,x3`.
    #[arg(long = "x", value_parser = parse_point, default_value = "0,0,1", allow_hyphen_values = true)]
    pub point: [f64; 3],
    #[arg(long, default_value_t = 1e-12)]
    pub tol_rel: f64,
    /// Cap on terms per single series and shells per double series.
    #[arg(long, default_value_t = 2000)]
    pub max_terms: usize,
    /// Force an X′ representation: a = Xp1, b = Xp2, c = Xp3.
    #[arg(long, value_enum, default_value_t = Rep::Auto)]
    pub rep: Rep,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads for table sweeps.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args, Clone)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub sweep: SweepVar,
    #[arg(long, allow_hyphen_values = true)]
    pub start: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub stop: f64,
    #[arg(long)]
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Auto,
    A,
    B,
    C,
}

impl From<Rep> for RepChoice {
    fn from(r: Rep) -> Self {
        match r {
            Rep::Auto => RepChoice::Auto,
            Rep::A => RepChoice::Xp1,
            Rep::B => RepChoice::Xp2,
            Rep::C => RepChoice::Xp3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVar {
    R,
    Alpha,
    Beta,
    #[value(name = "re-zeta")]
    ReZeta,
}

impl SweepVar {
    pub fn name(self) -> &'static str {
        match self {
            SweepVar::R => "r",
            SweepVar::Alpha => "alpha",
            SweepVar::Beta => "beta",
            SweepVar::ReZeta => "re_zeta",
        }
    }
}

impl Common {
    pub fn params(&self) -> PhysicalParams {
        PhysicalParams::unchecked(self.alpha, self.beta, self.zeta)
    }

    pub fn eval_point(&self) -> EvalPoint {
        EvalPoint::new(self.point[0], self.point[1], self.point[2])
    }

    pub fn options(&self) -> GreenOptions {
        let forced = self.rep != Rep::Auto;
        GreenOptions {
            prefer_closed_form: !forced,
            xprime_rep: self.rep.into(),
            series: SeriesConfig {
                tol_rel: self.tol_rel,
                max_terms: self.max_terms,
                max_shells: self.max_terms,
                ..SeriesConfig::default()
            },
        }
    }
}

/// Parses `a`, `bi`, `a+bi` or `a-bi`, with optional exponents.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    let err = || format!("cannot parse {s:?} as a complex number (expected a+bi)");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| err());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| err())?,
    };
    let re = re_part.parse::<f64>().map_err(|_| err())?;
    Ok(Complex64::new(re, im))
}

pub fn parse_point(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad coordinate in {s:?}: {e}"))?;
    parts.try_into().map_err(|_| format!("expected three coordinates x1,x2,x3, got {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("-4+0i").unwrap(), c(-4.0, 0.0));
        assert_eq!(parse_complex("-2-3.5i").unwrap(), c(-2.0, -3.5));
        assert_eq!(parse_complex("-5").unwrap(), c(-5.0, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-3-2e+1i").unwrap(), c(1e-3, -20.0));
        assert!(parse_complex("4+").is_err());
        assert!(parse_complex("x").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("0,-1.5,2").unwrap(), [0.0, -1.5, 2.0]);
        assert!(parse_point("1,2").is_err());
    }
}
