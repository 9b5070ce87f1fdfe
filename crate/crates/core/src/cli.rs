//! Command-line frontend for the `klrc` binary.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cartan::{CartanDatum, DominantWeight, RootVector};
use crate::classifier::{classify, Characteristic};
use crate::error::{KlrError, Result};
use crate::fock::{expand, hom_dim, FWord};
use crate::maxweights::{beta_of, class_members_capped, defect};
use crate::multiplicity::weight_multiplicity;
use crate::quiver::{build_quiver, export, ExportFormat, DEFAULT_VERTEX_CAP};
use crate::tableaux::{content_of, graded_hom_dim, graded_total_dim, Guards};

pub const MAX_ELL: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "klrc",
    version,
    about = "Cyclotomic KLR algebras of affine type C^(1)_ℓ"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    /// Rank ℓ (nodes 0..=ℓ).
    #[arg(long)]
    pub ell: usize,
    /// Fundamental indices with repetition, in charge order (e.g. 0,0,2).
    #[arg(
        long,
        value_delimiter = ',',
        required_unless_present = "m",
        conflicts_with = "m"
    )]
    pub weight: Vec<usize>,
    /// Multiplicity vector m_0,…,m_ℓ.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub m: Vec<i64>,
}

impl WeightArgs {
    fn resolve(&self) -> Result<(CartanDatum, DominantWeight)> {
        if self.ell > MAX_ELL {
            return Err(KlrError::GuardExceeded {
                what: "ell",
                limit: MAX_ELL,
                got: self.ell,
            });
        }
        let cartan = CartanDatum::new(self.ell)?;
        let lambda = if self.m.is_empty() {
            DominantWeight::from_charges(self.ell, self.weight.clone())?
        } else {
            DominantWeight::from_m(self.ell, self.m.clone())?
        };
        Ok((cartan, lambda))
    }
}

fn root(cartan: &CartanDatum, x: &[i64]) -> Result<RootVector> {
    cartan.check_len(x)?;
    let r = RootVector(x.to_vec());
    if !r.is_nonnegative() {
        return Err(KlrError::Invalid(format!("β = {r} is not in Q_+")));
    }
    Ok(r)
}

fn parse_nu(s: &str) -> Result<Vec<usize>> {
    s.split('-')
        .map(|t| {
            t.trim().parse().map_err(|_| KlrError::Parse {
                what: "residue sequence",
                input: s.into(),
            })
        })
        .collect()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Representation type of R^Λ(β).
    Classify {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            required = true
        )]
        beta: Vec<i64>,
        /// Field characteristic (0 or a prime).
        #[arg(long = "char", default_value = "0")]
        characteristic: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Directed quiver on the dominant maximal weights of V(Λ).
    Quiver {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Level-k weights equivalent to Λ with their minimal solutions.
    Maxweights {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
    },
    /// Graded dimension of e(ν) R^Λ(β) e(ν'), or of R^Λ(β) without --nu.
    Dims {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        beta: Vec<i64>,
        /// Residue sequence i1-i2-….
        #[arg(long)]
        nu: Option<String>,
        /// Second residue sequence (defaults to --nu).
        #[arg(long)]
        nu2: Option<String>,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Expansion of a divided-power word applied to the vacuum of the Fock space.
    Fock {
        #[command(flatten)]
        weight: WeightArgs,
        /// Word in written order, i^r,… (the rightmost letter acts first).
        #[arg(long)]
        word: String,
        /// Second word; prints the Hom dimension between the two projectives.
        #[arg(long)]
        word2: Option<String>,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Number of simple R^Λ(β)-modules, dim V(Λ)_{Λ−β}.
    Simples {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            required = true
        )]
        beta: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// def_Λ(β) = (Λ,β) − (β,β)/2.
    Defect {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            required = true
        )]
        beta: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn unsupported(format: OutputFormat) -> KlrError {
    KlrError::UnknownFormat(
        format!("{format:?} is not available for this subcommand").to_lowercase(),
    )
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json value serializes")
}

/// Runs a parsed command and returns its stdout.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Classify {
            weight,
            beta,
            characteristic,
            format,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let beta = root(&cartan, beta)?;
            let p: Characteristic = characteristic.parse()?;
            let v = classify(&cartan, &lambda, &beta, p)?;
            match format {
                OutputFormat::Text => Ok(v.to_string()),
                OutputFormat::Json => Ok(pretty(json!({
                    "verdict": v.to_string(),
                    "type": v.rep_type,
                    "tag": v.tag.to_string(),
                    "proviso": v.proviso,
                    "dominant_beta": v.dominant_beta.as_ref().map(|b| b.0.clone()),
                    "delta_shift": v.delta_shift,
                    "defect": v.defect,
                    "flipped": v.flipped,
                }))),
                f => Err(unsupported(*f)),
            }
        }
        Command::Quiver {
            weight,
            format,
            max_vertices,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let q = build_quiver(&cartan, &lambda, *max_vertices)?;
            Ok(match format {
                OutputFormat::Text => {
                    let mut s =
                        format!("{} vertices, {} arrows\n", q.vertices.len(), q.arrows.len());
                    s.push_str(&export(&q, ExportFormat::Tsv));
                    s
                }
                OutputFormat::Json => export(&q, ExportFormat::Json),
                OutputFormat::Dot => export(&q, ExportFormat::Dot),
                OutputFormat::Tsv => export(&q, ExportFormat::Tsv),
            })
        }
        Command::Maxweights {
            weight,
            format,
            max_vertices,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let mut rows = Vec::new();
            for lp in class_members_capped(&lambda, *max_vertices)? {
                let d = beta_of(&cartan, &lambda, &lp)?;
                let def = defect(&cartan, &lambda, &d.x);
                rows.push((lp, d.x, d.size, def));
            }
            match format {
                OutputFormat::Text | OutputFormat::Tsv => {
                    let mut s = String::from("weight\tX\tsize\tdefect\n");
                    for (lp, x, size, def) in &rows {
                        s.push_str(&format!("{lp}\t{x}\t{size}\t{def}\n"));
                    }
                    Ok(s)
                }
                OutputFormat::Json => Ok(pretty(json!(rows
                    .iter()
                    .map(|(lp, x, size, def)| json!({ "m": lp.m, "X": x.0, "size": size, "defect": def }))
                    .collect::<Vec<_>>()))),
                f => Err(unsupported(*f)),
            }
        }
        Command::Dims {
            weight,
            beta,
            nu,
            nu2,
            max_n,
            format,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let guards = Guards {
                max_n: *max_n,
                ..Guards::default()
            };
            let dim = match nu {
                Some(nu) => {
                    let nu = parse_nu(nu)?;
                    let nu2 = nu2
                        .as_deref()
                        .map(parse_nu)
                        .transpose()?
                        .unwrap_or_else(|| nu.clone());
                    let beta = if beta.is_empty() {
                        content_of(&cartan, &nu)?
                    } else {
                        root(&cartan, beta)?
                    };
                    graded_hom_dim(&cartan, &lambda, &beta, &nu, &nu2, guards)?
                }
                None => {
                    if beta.is_empty() {
                        return Err(KlrError::Invalid("dims needs --nu or --beta".into()));
                    }
                    graded_total_dim(&cartan, &lambda, &root(&cartan, beta)?, guards)?
                }
            };
            match format {
                OutputFormat::Text => Ok(dim.to_string()),
                OutputFormat::Json => Ok(pretty(dim.to_json())),
                f => Err(unsupported(*f)),
            }
        }
        Command::Fock {
            weight,
            word,
            word2,
            max_n,
            format,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let guards = Guards {
                max_n: *max_n,
                ..Guards::default()
            };
            let w1: FWord = word.parse()?;
            let v1 = expand(&cartan, &lambda, &w1, guards)?;
            let (label, pairing) = match word2 {
                Some(w2) => {
                    let v2 = expand(&cartan, &lambda, &w2.parse()?, guards)?;
                    ("hom", hom_dim(&cartan, &v1, &v2)?)
                }
                None => ("end", hom_dim(&cartan, &v1, &v1)?),
            };
            match format {
                OutputFormat::Text => Ok(format!("{w1} v = {v1}\n{label}: {pairing}")),
                OutputFormat::Json => Ok(pretty(json!({
                    "word": w1.to_string(),
                    "vector": v1.to_json(),
                    label: pairing.to_json(),
                }))),
                f => Err(unsupported(*f)),
            }
        }
        Command::Simples {
            weight,
            beta,
            format,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let n = weight_multiplicity(&cartan, &lambda, &root(&cartan, beta)?)?;
            match format {
                OutputFormat::Text => Ok(n.to_string()),
                OutputFormat::Json => Ok(pretty(json!({ "simples": n }))),
                f => Err(unsupported(*f)),
            }
        }
        Command::Defect {
            weight,
            beta,
            format,
        } => {
            let (cartan, lambda) = weight.resolve()?;
            let d = defect(&cartan, &lambda, &root(&cartan, beta)?);
            match format {
                OutputFormat::Text => Ok(d.to_string()),
                OutputFormat::Json => Ok(pretty(json!({ "defect": d }))),
                f => Err(unsupported(*f)),
            }
        }
    }
}

/// Parses and runs `args`; returns the exit code, stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (code, String::new(), text)
            };
        }
    };
    match execute(&cli) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            (0, out, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
