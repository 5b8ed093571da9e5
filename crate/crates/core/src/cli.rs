//! Command-line front end.
//!
//! Exit codes: 0 on success (or when the checked property holds), 1 when a
//! verification or checked property is false, 2 on usage and format
//! errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{
    bck_order, bck_properties, dualize, verify_axioms, AxiomReport, AxiomSystem, OpTable, TableKind,
};
use crate::codegen::{
    census, cut_code, local_family, local_free_bits, roundtrip_check, semisimple_family,
    CensusMode, CensusReport, CutSpec,
};
use crate::embedding::{direct_algebra, embed_code, tail_set_check, Embedding};
use crate::error::{Error, Result};
use crate::filters::{all_filters, classify, hilbert_view, maximal_filters, ElementSet};
use crate::format::{
    hasse_dot, hasse_text, is_algebra_text, parse_algebra_file, parse_code_file,
    write_algebra_file, write_code_file,
};
use crate::iso::are_isomorphic;
use crate::order::{code_poset, BlockCode, Poset};

/// Filter enumeration above this size prints a cost warning.
const FILTER_WARN_N: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "bck-codes",
    version,
    about = "BCK and Hilbert algebras from binary block codes"
)]
struct Cli {
    /// Emit JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Extend the code matrix and embed the code.
    Embed,
    /// Use the codewords themselves as the carrier.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Bci,
    Bck,
    Hilbert,
}

impl From<SystemArg> for AxiomSystem {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Bci => AxiomSystem::Bci,
            SystemArg::Bck => AxiomSystem::Bck,
            SystemArg::Hilbert => AxiomSystem::Hilbert,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Semisimple,
    Local,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HasseFormat {
    Dot,
    Text,
}

/// An input file: an algebra file, or a code file built with `--mode`.
#[derive(Debug, clap::Args)]
struct Input {
    /// Algebra (.alg) or code (.code) file; `-` reads standard input.
    path: PathBuf,
    /// How a code file is turned into an algebra.
    #[arg(long, value_enum, default_value = "direct")]
    mode: Mode,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the BCK-algebra of a code and print its table.
    Build {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Code file; `-` reads standard input.
        path: PathBuf,
    },
    /// Check the BCI, BCK or Hilbert axioms.
    Verify {
        #[arg(long, value_enum)]
        kind: SystemArg,
        #[command(flatten)]
        input: Input,
    },
    /// Report commutativity, implicativity and positive implicativity.
    Props {
        #[command(flatten)]
        input: Input,
    },
    /// Print the dual table (x·y = y∗x).
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// List filters of the (dual) Hilbert algebra.
    #[command(group(ArgGroup::new("which").required(true).args(["all", "maximal"])))]
    Filters {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        maximal: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Decide whether the Hilbert algebra is semisimple or local.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Read a code out of the algebra through cut functions.
    Cut {
        /// Row elements (labels or indices), comma separated.
        #[arg(long)]
        rows: String,
        /// Column elements (labels or indices), comma separated.
        #[arg(long)]
        cols: String,
        #[command(flatten)]
        input: Input,
    },
    /// Embed a code and recover it from code rows and tail elements.
    Roundtrip {
        /// Code file; `-` reads standard input.
        path: PathBuf,
    },
    /// Check whether θ and the tail elements of an embedding form a filter.
    Tail {
        /// Code file; `-` reads standard input.
        path: PathBuf,
    },
    /// Print a code of the semisimple or local family.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
        /// Free bits of the local family, row by row (default all zero).
        #[arg(long)]
        bits: Option<String>,
    },
    /// Count isomorphism classes of the unitriangular matrix family.
    Census {
        #[arg(long)]
        n: usize,
        /// Sample this many matrices instead of enumerating all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        seed: u64,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// List one representative per class.
        #[arg(long)]
        list: bool,
    },
    /// Print the Hasse diagram of the order.
    Hasse {
        #[arg(long, value_enum, default_value = "dot")]
        format: HasseFormat,
        #[command(flatten)]
        input: Input,
    },
    /// Test two algebras for isomorphism.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "direct")]
        mode: Mode,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        out,
        err,
    };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            2
        }
    }
}

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::usage(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<BlockCode> {
    let text = read_text(path)?;
    if is_algebra_text(&text) {
        return Err(Error::usage(format!(
            "{} is an algebra file, a code file is expected",
            path.display()
        )));
    }
    parse_code_file(&text)
}

fn build(code: &BlockCode, mode: Mode) -> Result<Embedding> {
    match mode {
        Mode::Embed => embed_code(code),
        Mode::Direct => direct_algebra(code),
    }
}

fn load(path: &Path, mode: Mode) -> Result<OpTable> {
    let text = read_text(path)?;
    if is_algebra_text(&text) {
        parse_algebra_file(&text)
    } else {
        Ok(build(&parse_code_file(&text)?, mode)?.algebra)
    }
}

fn star_of(t: &OpTable) -> OpTable {
    match t.kind() {
        TableKind::Star => t.clone(),
        TableKind::Dot => dualize(t),
    }
}

fn set_names(t: &OpTable, s: ElementSet) -> String {
    let names: Vec<String> = s.iter().map(|x| t.label(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(t: &OpTable, w: &[usize]) -> String {
    ["x", "y", "z"]
        .iter()
        .zip(w)
        .map(|(var, &e)| format!("{var}={}", t.label(e)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_element_list(t: &OpTable, list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            t.find_element(name)
                .ok_or_else(|| Error::usage(format!("unknown element {name:?}")))
        })
        .collect()
}

#[derive(Serialize)]
struct FilterListing {
    n: usize,
    filters: Vec<ElementSet>,
}

#[derive(Serialize)]
struct IsoReport {
    isomorphic: bool,
    mapping: Option<Vec<usize>>,
}

impl Ctx<'_> {
    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = serde_json::to_string_pretty(value)
            .map_err(|e| Error::integrity(format!("cannot serialize report: {e}")))?;
        self.line(&text)
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| Error::usage(format!("write failed: {e}")))
    }

    fn text(&mut self, text: &str) -> Result<()> {
        write!(self.out, "{text}").map_err(|e| Error::usage(format!("write failed: {e}")))
    }

    fn dispatch(&mut self, command: Command) -> Result<i32> {
        match command {
            Command::Build { mode, path } => {
                let e = build(&read_code(&path)?, mode)?;
                if self.json {
                    self.emit_json(&e)?;
                } else {
                    self.text(&write_algebra_file(&e.algebra))?;
                }
                Ok(0)
            }
            Command::Verify { kind, input } => {
                let loaded = load(&input.path, input.mode)?;
                let report = verify_axioms(&loaded, kind.into())?;
                self.axiom_report(&loaded, &report)?;
                Ok(if report.passed { 0 } else { 1 })
            }
            Command::Props { input } => {
                let loaded = load(&input.path, input.mode)?;
                let t = star_of(&loaded);
                let flags = bck_properties(&t)?;
                if self.json {
                    self.emit_json(&flags)?;
                } else {
                    let rows = [
                        ("commutative", flags.commutative, &flags.commutative_witness),
                        ("implicative", flags.implicative, &flags.implicative_witness),
                        (
                            "positive implicative",
                            flags.positive_implicative,
                            &flags.positive_implicative_witness,
                        ),
                    ];
                    for (name, holds, witness) in rows {
                        let line = match witness {
                            Some(w) => format!("{name}: no ({})", witness_text(&t, w)),
                            None => format!("{name}: {}", yes_no(holds)),
                        };
                        self.line(&line)?;
                    }
                }
                Ok(0)
            }
            Command::Dual { input } => {
                let loaded = load(&input.path, input.mode)?;
                let d = dualize(&loaded);
                if self.json {
                    self.emit_json(&d)?;
                } else {
                    self.text(&write_algebra_file(&d))?;
                }
                Ok(0)
            }
            Command::Filters { maximal, input, .. } => {
                let loaded = load(&input.path, input.mode)?;
                let h = hilbert_view(&loaded)?;
                self.warn_size(h.n())?;
                let filters: Vec<ElementSet> = if maximal {
                    maximal_filters(&h)?
                } else {
                    all_filters(&h)?
                }
                .into_iter()
                .map(|f| f.members)
                .collect();
                if self.json {
                    self.emit_json(&FilterListing { n: h.n(), filters })?;
                } else {
                    for f in filters {
                        self.line(&set_names(&h, f))?;
                    }
                }
                Ok(0)
            }
            Command::Classify { input } => {
                let loaded = load(&input.path, input.mode)?;
                let t = &loaded;
                self.warn_size(t.n())?;
                let report = classify(t, true)?;
                if self.json {
                    self.emit_json(&report)?;
                    return Ok(0);
                }
                self.line(&format!("elements: {}", report.n))?;
                self.line(&format!("filters: {}", report.all_filter_count))?;
                self.line(&format!(
                    "maximal filters: {}",
                    report.maximal_filters.len()
                ))?;
                for f in &report.maximal_filters {
                    self.line(&format!("  {}", set_names(t, f.members)))?;
                }
                self.line(&format!("radical: {}", set_names(t, report.radical)))?;
                if report.degenerate {
                    self.line("local: n/a, semisimple: n/a (one-element algebra)")?;
                } else {
                    self.line(&format!(
                        "local: {}, semisimple: {}",
                        yes_no(report.is_local),
                        yes_no(report.is_semisimple)
                    ))?;
                }
                Ok(0)
            }
            Command::Cut { rows, cols, input } => {
                let loaded = load(&input.path, input.mode)?;
                let t = star_of(&loaded);
                let spec = CutSpec {
                    row_elements: parse_element_list(&t, &rows)?,
                    col_elements: parse_element_list(&t, &cols)?,
                };
                let cut = cut_code(&t, &spec)?;
                if self.json {
                    self.emit_json(&cut)?;
                } else {
                    for w in &cut.raw_words {
                        self.line(&w.to_string())?;
                    }
                    for (later, earlier) in &cut.collisions {
                        self.line(&format!(
                            "# row {} repeats row {}",
                            t.label(spec.row_elements[*later]),
                            t.label(spec.row_elements[*earlier])
                        ))?;
                    }
                }
                Ok(0)
            }
            Command::Roundtrip { path } => {
                let report = roundtrip_check(&read_code(&path)?)?;
                if self.json {
                    self.emit_json(&report)?;
                } else {
                    let join = |ws: &[crate::order::Codeword]| {
                        ws.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    self.line(&format!("expected: {}", join(&report.expected)))?;
                    self.line(&format!("recovered: {}", join(&report.recovered)))?;
                    match report.first_mismatch {
                        None => self.line("roundtrip: ok")?,
                        Some(i) => self.line(&format!("roundtrip: failed at word {i}"))?,
                    }
                }
                Ok(if report.success { 0 } else { 1 })
            }
            Command::Tail { path } => {
                let e = embed_code(&read_code(&path)?)?;
                let check = tail_set_check(&e)?;
                if self.json {
                    self.emit_json(&check)?;
                } else {
                    let t = &e.algebra;
                    self.line(&format!("tail set: {}", set_names(t, check.set)))?;
                    match check.witness {
                        None => self.line("filter: yes")?,
                        Some((x, y)) => self.line(&format!(
                            "filter: no ({x} · {y} = {v} lies in the set, {y} does not)",
                            x = t.label(x),
                            y = t.label(y),
                            v = t.label(dualize(t).op(x, y)),
                        ))?,
                    }
                }
                Ok(if check.is_filter { 0 } else { 1 })
            }
            Command::Family { kind, n, bits } => {
                let code = match kind {
                    FamilyKind::Semisimple => {
                        if bits.is_some() {
                            return Err(Error::usage("--bits only applies to the local family"));
                        }
                        semisimple_family(n)?
                    }
                    FamilyKind::Local => {
                        let bits = match bits {
                            Some(s) => s
                                .chars()
                                .map(|c| match c {
                                    '0' => Ok(false),
                                    '1' => Ok(true),
                                    other => Err(Error::usage(format!("invalid bit {other:?}"))),
                                })
                                .collect::<Result<Vec<_>>>()?,
                            None => vec![false; local_free_bits(n)],
                        };
                        local_family(n, &bits)?
                    }
                };
                if self.json {
                    self.emit_json(&code)?;
                } else {
                    self.text(&write_code_file(&code))?;
                }
                Ok(0)
            }
            Command::Census {
                n,
                sample,
                seed,
                jobs,
                list,
            } => {
                let mode = match sample {
                    Some(count) => CensusMode::Sample { count, seed },
                    None => CensusMode::Exhaustive,
                };
                if jobs == Some(0) {
                    return Err(Error::usage("--jobs must be positive"));
                }
                let report = census(n, mode, jobs)?;
                if self.json {
                    self.emit_json(&report)?;
                } else {
                    self.census_text(&report, list)?;
                }
                Ok(0)
            }
            Command::Hasse { format, input } => {
                let text = read_text(&input.path)?;
                let poset: Poset = if is_algebra_text(&text) {
                    bck_order(&star_of(&parse_algebra_file(&text)?))?
                } else {
                    code_poset(&parse_code_file(&text)?, true)?
                };
                match format {
                    HasseFormat::Dot => self.text(&hasse_dot(&poset))?,
                    HasseFormat::Text => self.text(&hasse_text(&poset))?,
                }
                Ok(0)
            }
            Command::Iso {
                first,
                second,
                mode,
            } => {
                let a = load(&first, mode)?;
                let b = load(&second, mode)?;
                let r = are_isomorphic(&a, &b);
                if self.json {
                    self.emit_json(&IsoReport {
                        isomorphic: r.isomorphic,
                        mapping: r.mapping.clone(),
                    })?;
                } else {
                    self.line(&format!("isomorphic: {}", yes_no(r.isomorphic)))?;
                    if let Some(m) = &r.mapping {
                        for (x, &y) in m.iter().enumerate() {
                            self.line(&format!("  {} -> {}", a.label(x), b.label(y)))?;
                        }
                    }
                }
                Ok(if r.isomorphic { 0 } else { 1 })
            }
        }
    }

    fn axiom_report(&mut self, t: &OpTable, report: &AxiomReport) -> Result<()> {
        if self.json {
            return self.emit_json(report);
        }
        let system = match report.kind_checked {
            AxiomSystem::Bci => "bci",
            AxiomSystem::Bck => "bck",
            AxiomSystem::Hilbert => "hilbert",
        };
        self.line(&format!(
            "{system} axioms: {}",
            if report.passed { "passed" } else { "failed" }
        ))?;
        for v in &report.violations {
            self.line(&format!(
                "  {} fails at {}",
                v.axiom,
                witness_text(t, &v.witness)
            ))?;
        }
        Ok(())
    }

    fn census_text(&mut self, r: &CensusReport, list: bool) -> Result<()> {
        let summary = match r.mode {
            CensusMode::Exhaustive => format!(
                "{} matrices, {} classes, bound {}, bound met: {}",
                r.total_matrices,
                r.class_count,
                r.bound,
                yes_no(r.bound_met)
            ),
            CensusMode::Sample { count, seed } => format!(
                "sampled {count} of {} matrices (seed {seed}), {} classes, bound {}, bound met: {}",
                r.total_matrices,
                r.class_count,
                r.bound,
                yes_no(r.bound_met)
            ),
        };
        self.line(&summary)?;
        if list {
            for c in &r.class_representatives {
                let rows: Vec<String> = c.matrix.iter().map(ToString::to_string).collect();
                self.line(&format!("  {} ({} matrices)", rows.join(" "), c.size))?;
            }
        }
        Ok(())
    }

    fn warn_size(&mut self, n: usize) -> Result<()> {
        if n > FILTER_WARN_N {
            writeln!(
                self.err,
                "warning: enumerating filters of a {n}-element algebra may be slow"
            )
            .map_err(|e| Error::usage(format!("write failed: {e}")))?;
        }
        Ok(())
    }
}
