//! Command-line front end.
//!
//! Subcommands map one-to-one onto library operations: `verify` runs the
//! suite, `xf` prints a contact field, `bracket` a Lagrange bracket, `basis`
//! dumps the `spo` basis, `embed` a single embedded basis element and
//! `table` the full correspondence table. Exit codes: 0 on success or an
//! all-pass suite, 1 when verification fails, 2 on usage or parse errors.
//! All output is deterministic; with `--json` the report timings are the
//! only varying bytes.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::contact::ContactContext;
use crate::dims::Dims;
use crate::embedding::{correspondence_table, embed_spo, CorrespondenceRow};
use crate::error::{Error, Result};
use crate::parse::parse_expr;
use crate::spo::{spo_basis, SpoBasisLabel, SpoFamily};
use crate::verify::{run_suite, SuiteOptions, MAX_L, MAX_N};

#[derive(Parser, Debug)]
#[command(
    name = "supercontact",
    version,
    about = "Exact contact supergeometry of R^{2l+1|n} and its orthosymplectic symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Number of symplectic coordinate pairs (x_i, y_i).
    #[arg(short = 'l', value_name = "INT")]
    l: usize,
    /// Number of odd coordinates th_j (at least 1).
    #[arg(short = 'n', value_name = "INT")]
    n: usize,
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Override the resource caps l <= 6, n <= 8.
    #[arg(long)]
    force: bool,
}

impl Common {
    fn dims(&self) -> Result<Dims> {
        if self.n == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "n must be at least 1".to_string(),
            });
        }
        if !self.force && (self.l > MAX_L || self.n > MAX_N) {
            return Err(Error::ResourceLimit {
                l: self.l,
                n: self.n,
                max_l: MAX_L,
                max_n: MAX_N,
            });
        }
        Ok(Dims::new(self.l, self.n))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full verification suite and report per-check results.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0, value_name = "INT")]
        seed: u64,
        /// Also write the JSON report to this path.
        #[arg(long, value_name = "PATH")]
        report: Option<std::path::PathBuf>,
    },
    /// Print the contact field X_f of a Hamiltonian expression.
    Xf {
        #[command(flatten)]
        common: Common,
        /// Superfunction expression, e.g. "z^2 + 2*x1*th1".
        expr: String,
    },
    /// Print the Lagrange bracket {f, g} of two expressions.
    Bracket {
        #[command(flatten)]
        common: Common,
        f: String,
        g: String,
    },
    /// List the basis of spo(2l+2|n).
    Basis {
        #[command(flatten)]
        common: Common,
    },
    /// Embed one basis element and print its field and Hamiltonian.
    Embed {
        #[command(flatten)]
        common: Common,
        /// Basis family: Sp1, Sp2, Sp3, OddA, OddB or O.
        family: String,
        i: usize,
        j: usize,
    },
    /// Print the full basis-to-contact-field correspondence table.
    Table {
        #[command(flatten)]
        common: Common,
    },
}

/// Entry point taking `argv` (including the program name); returns the
/// process exit code.
pub fn run(argv: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut out = std::io::stdout().lock();
    match dispatch(cli, &mut out) {
        Ok(code) => code,
        // a closed pipe (e.g. `supercontact table ... | head`) is not a
        // failure of ours
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut impl std::io::Write) -> Result<i32> {
    match cli.command {
        Command::Verify {
            common,
            seed,
            report,
        } => {
            let dims = common.dims()?;
            let suite = run_suite(
                dims,
                &SuiteOptions {
                    seed,
                    force: common.force,
                },
            )?;
            if let Some(path) = report {
                std::fs::write(&path, serde_json::to_string_pretty(&suite)? + "\n")?;
            }
            if common.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&suite)?)?;
            } else {
                for check in &suite.checks {
                    if check.passed {
                        writeln!(out, "PASS {} ({} ms)", check.name, check.elapsed_ms)?;
                    } else {
                        writeln!(out, "FAIL {}: {}", check.name, check.details)?;
                    }
                }
                writeln!(
                    out,
                    "dim spo(2l+2|n) = {}, dim quadratic hamiltonians = {}",
                    suite.dim_spo, suite.dim_quadratic
                )?;
                let failed = suite.checks.iter().filter(|c| !c.passed).count();
                if suite.all_passed {
                    writeln!(out, "all {} checks passed", suite.checks.len())?;
                } else {
                    writeln!(out, "{failed} of {} checks FAILED", suite.checks.len())?;
                }
            }
            Ok(if suite.all_passed { 0 } else { 1 })
        }
        Command::Xf { common, expr } => {
            let dims = common.dims()?;
            let ctx = ContactContext::new(dims);
            let f = parse_expr(&expr, dims)?;
            let field = ctx.contact_field(&f);
            if common.json {
                #[derive(Serialize)]
                struct Out {
                    hamiltonian: String,
                    field: String,
                }
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&Out {
                        hamiltonian: f.to_string(),
                        field: field.to_string(),
                    })?
                )?;
            } else {
                writeln!(out, "{field}")?;
            }
            Ok(0)
        }
        Command::Bracket { common, f, g } => {
            let dims = common.dims()?;
            let ctx = ContactContext::new(dims);
            let f = parse_expr(&f, dims)?;
            let g = parse_expr(&g, dims)?;
            let bracket = ctx.lagrange_bracket(&f, &g);
            if common.json {
                #[derive(Serialize)]
                struct Out {
                    f: String,
                    g: String,
                    bracket: String,
                }
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&Out {
                        f: f.to_string(),
                        g: g.to_string(),
                        bracket: bracket.to_string(),
                    })?
                )?;
            } else {
                writeln!(out, "{bracket}")?;
            }
            Ok(0)
        }
        Command::Basis { common } => {
            let dims = common.dims()?;
            let basis = spo_basis(dims);
            if common.json {
                #[derive(Serialize)]
                struct Entry<'a> {
                    family: SpoFamily,
                    i: usize,
                    j: usize,
                    matrix: &'a crate::spo::GradedMatrix,
                }
                let entries: Vec<Entry> = basis
                    .iter()
                    .map(|(label, matrix)| Entry {
                        family: label.family,
                        i: label.i,
                        j: label.j,
                        matrix,
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&entries)?)?;
            } else {
                for (label, matrix) in &basis {
                    let mut rows = String::new();
                    for i in 1..=matrix.size() {
                        if i > 1 {
                            rows.push_str("; ");
                        }
                        let row: Vec<String> = (1..=matrix.size())
                            .map(|j| matrix.entry(i, j).to_string())
                            .collect();
                        let _ = write!(rows, "[{}]", row.join(", "));
                    }
                    writeln!(out, "{label}: {rows}")?;
                }
                writeln!(out, "{} basis elements", basis.len())?;
            }
            Ok(0)
        }
        Command::Embed {
            common,
            family,
            i,
            j,
        } => {
            let dims = common.dims()?;
            let family: SpoFamily = family
                .parse()
                .map_err(|msg: String| Error::Parse { pos: 0, msg })?;
            let label = SpoBasisLabel { family, i, j };
            if !label.in_range(dims) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("basis label {label} out of range for {dims}"),
                });
            }
            let ctx = ContactContext::new(dims);
            let field = embed_spo(&ctx, &label.matrix(dims))?;
            let hamiltonian = ctx.hamiltonian_of(&field)?;
            let row = CorrespondenceRow {
                label,
                field,
                hamiltonian,
            };
            if common.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&row)?)?;
            } else {
                writeln!(out, "field: {}", row.field)?;
                writeln!(out, "hamiltonian: {}", row.hamiltonian)?;
            }
            Ok(0)
        }
        Command::Table { common } => {
            let dims = common.dims()?;
            let ctx = ContactContext::new(dims);
            let table = correspondence_table(&ctx)?;
            if common.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&table)?)?;
            } else {
                for row in &table {
                    writeln!(
                        out,
                        "{}: f = {}  |  X_f = {}",
                        row.label, row.hamiltonian, row.field
                    )?;
                }
            }
            Ok(0)
        }
    }
}
