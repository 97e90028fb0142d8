//! Command-line surface for the tiling engines: exact counts, counting
//! sequences, recurrence guessing, generating functions, moment statistics.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on computation errors
//! (unreadable files, malformed inputs, widths beyond the cap, failed oracle
//! checks). Identical invocations produce byte-identical output.

mod inputs;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tilings_core::cfinite::{
    cfinite_equal, guess_bivariate_gf, guess_cfinite, guess_rational_gf, verify_cfinite_with_bound,
    GuessConfig,
};
use tilings_core::composite::Engine;
use tilings_core::direct::{count_tilings, count_weighted, TilingMode};
use tilings_core::exact::{Int, MultiPoly, Rat};
use tilings_core::region::{
    build_cross, build_frame, build_rectangle, parse_region_file, CrossSpec, FrameSpec,
};
use tilings_core::stats::{growth_rate, weighted_moments};
use tilings_core::transfer::{seq_rect_in, TmCache};

#[derive(Parser)]
#[command(
    name = "tilings",
    version,
    about = "Exact counting of domino and monomer-dimer tilings of thin grid regions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Dominoes only.
    Dimer,
    /// Dominoes and monomers.
    Md,
}

impl ModeArg {
    fn tiling(self) -> TilingMode {
        match self {
            ModeArg::Dimer => TilingMode::Dimer,
            ModeArg::Md => TilingMode::MonomerDimer,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            ModeArg::Dimer => "dimer",
            ModeArg::Md => "md",
        }
    }

    fn weight_vars(self) -> &'static [&'static str] {
        match self {
            ModeArg::Dimer => &["h", "v"],
            ModeArg::Md => &["h", "v", "m"],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarArg {
    H,
    V,
    M,
}

impl VarArg {
    fn index(self) -> usize {
        match self {
            VarArg::H => 0,
            VarArg::V => 1,
            VarArg::M => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            VarArg::H => "h",
            VarArg::V => "v",
            VarArg::M => "m",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// The raw trace-formula table: degenerate holes count tilings that do
    /// not cross the collapsed seam. Its generating function has the
    /// separable form P(x,y)/(Q1(x)Q2(y)).
    Trace,
    /// True region counts: degenerate holes are solid rectangles.
    Region,
}

impl ConventionArg {
    fn as_str(self) -> &'static str {
        match self {
            ConventionArg::Trace => "trace",
            ConventionArg::Region => "region",
        }
    }
}

#[derive(Args)]
struct Common {
    /// Tile set.
    #[arg(long, value_enum, default_value = "dimer")]
    mode: ModeArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

#[derive(Args)]
struct GuessOpts {
    /// Largest recurrence order attempted when guessing.
    #[arg(long, default_value_t = 12)]
    max_order: u32,
    /// Extra terms beyond the fitting window that must validate.
    #[arg(long, default_value_t = 5)]
    margin: u32,
}

impl GuessOpts {
    fn config(&self) -> GuessConfig {
        GuessConfig::new(self.max_order as usize, self.margin as usize)
    }

    /// Enough terms to certify any order up to `max_order`.
    fn default_terms(&self) -> u32 {
        2 * self.max_order + self.margin
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Count the tilings of a region file.
    Count {
        /// Region file: one "x y" cell per line, '#' comments.
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Weight enumerator of a region file (h, v and m track the tile kinds).
    CountWeighted {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Tiling counts of m x n rectangles for n = 0 .. terms-1.
    RectSeq {
        /// Strip width (cells per column).
        #[arg(value_parser = clap::value_parser!(u32).range(1..=12))]
        m: u32,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        /// Emit weight enumerators instead of counts.
        #[arg(long)]
        weighted: bool,
        /// Re-check leading terms against direct enumeration.
        #[arg(long)]
        verify_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Frame counts for square holes n x n, n = 0 .. terms-1.
    FrameSeq {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a2: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b2: u32,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        verify_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rational generating function of the square-hole frame sequence.
    FrameGf {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a2: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b2: u32,
        /// Number of terms to compute before guessing (default fits max-order).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        terms: Option<u32>,
        #[command(flatten)]
        guess: GuessOpts,
        #[arg(long)]
        verify_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Bivariate generating function P(x,y)/(Q1(x)Q2(y)) of the frame table.
    FrameGfBivariate {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a2: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b2: u32,
        /// Table side length (default fits max-order).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        terms: Option<u32>,
        /// Degenerate-hole convention of the table.
        #[arg(long, value_enum, default_value = "trace")]
        convention: ConventionArg,
        #[command(flatten)]
        guess: GuessOpts,
        #[arg(long)]
        verify_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Cross counts for arm lengths n = 0 .. terms-1.
    CrossSeq {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        verify_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rational generating function of the cross sequence.
    CrossGf {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        terms: Option<u32>,
        #[command(flatten)]
        guess: GuessOpts,
        #[arg(long)]
        verify_oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Guess a C-finite description `[[initial], [coefficients]]` from terms.
    GuessCfinite {
        /// Terms file: whitespace-separated rationals, '#' comments.
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        guess: GuessOpts,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
    },
    /// Decide whether two C-finite descriptions denote the same sequence.
    CfiniteEqual {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
    },
    /// Verify a C-finite identity under an order bound for the data sequence.
    VerifyBound {
        cfinite: PathBuf,
        terms: PathBuf,
        /// Order bound assumed for the data sequence.
        #[arg(long)]
        bound: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
    },
    /// Exact tile-count moments of the weighted frame sequence.
    Moments {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        a2: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b2: u32,
        /// Which tile count to analyse.
        #[arg(long, value_enum, default_value = "h")]
        var: VarArg,
        /// Highest moment order (2..=4).
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..=4))]
        upto: u32,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Approximate dominant growth ratio of a C-finite sequence.
    Growth {
        cfinite: PathBuf,
        /// Sampling index for the consecutive-term ratio.
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(2..=100000))]
        index: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn rats(ints: &[Int]) -> Vec<Rat> {
    ints.iter().map(|v| Rat::from_integer(v.clone())).collect()
}

fn emit_int_seq(format: FormatArg, params: Value, terms: &[Int]) {
    match format {
        FormatArg::Plain => {
            for t in terms {
                println!("{t}");
            }
        }
        FormatArg::Json => {
            let strings: Vec<Value> = terms.iter().map(|t| Value::String(t.to_string())).collect();
            render::print_json(&json!({"params": params, "terms": strings}));
        }
    }
}

fn emit_poly_seq(format: FormatArg, params: Value, polys: &[MultiPoly], vars: &[&str]) {
    match format {
        FormatArg::Plain => {
            for p in polys {
                println!("{}", p.to_string_with(vars));
            }
        }
        FormatArg::Json => {
            let terms: Vec<Value> = polys
                .iter()
                .map(|p| render::multipoly_json(p, vars.len()))
                .collect();
            render::print_json(&json!({"params": params, "terms": terms, "vars": vars}));
        }
    }
}

fn emit_gf(format: FormatArg, gf: Option<&tilings_core::exact::RationalFunction>) {
    match (format, gf) {
        (FormatArg::Plain, Some(rf)) => println!("{}", rf.to_string_with("t")),
        (FormatArg::Plain, None) => println!("none"),
        (FormatArg::Json, Some(rf)) => render::print_json(&render::rf_json(rf)),
        (FormatArg::Json, None) => render::print_json(&Value::Null),
    }
}

/// Fails loudly when an engine sequence disagrees with direct enumeration.
fn check_oracle_int(
    terms: &[Int],
    how_many: usize,
    label: &str,
    region_of: impl Fn(usize) -> tilings_core::region::Region,
    mode: TilingMode,
) -> Result<(), String> {
    for (n, got) in terms.iter().enumerate().take(how_many) {
        let want = count_tilings(&region_of(n), mode);
        if *got != want {
            return Err(format!(
                "oracle mismatch for {label} at n={n}: engine {got}, direct enumeration {want}"
            ));
        }
    }
    Ok(())
}

fn check_oracle_poly(
    polys: &[MultiPoly],
    how_many: usize,
    label: &str,
    region_of: impl Fn(usize) -> tilings_core::region::Region,
    mode: TilingMode,
) -> Result<(), String> {
    for (n, got) in polys.iter().enumerate().take(how_many) {
        let want = count_weighted(&region_of(n), mode);
        if *got != want {
            return Err(format!("oracle mismatch for {label} at n={n}"));
        }
    }
    Ok(())
}

const ORACLE_HEAD: usize = 3;

fn frame_spec(a1: u32, a2: u32, b1: u32, b2: u32) -> Result<FrameSpec, String> {
    FrameSpec::new(a1, a2, b1, b2, 0, 0).map_err(|e| e.to_string())
}

fn run(cmd: Cmd) -> Result<(), String> {
    match cmd {
        Cmd::Count { file, common } => {
            let region = parse_region_file(&inputs::read_file(&file)?)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let n = count_tilings(&region, common.mode.tiling());
            match common.format {
                FormatArg::Plain => println!("{n}"),
                FormatArg::Json => render::print_json(&json!({
                    "count": n.to_string(),
                    "mode": common.mode.as_str(),
                })),
            }
            Ok(())
        }

        Cmd::CountWeighted { file, common } => {
            let region = parse_region_file(&inputs::read_file(&file)?)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let poly = count_weighted(&region, common.mode.tiling());
            let vars = common.mode.weight_vars();
            match common.format {
                FormatArg::Plain => println!("{}", poly.to_string_with(vars)),
                FormatArg::Json => render::print_json(&json!({
                    "mode": common.mode.as_str(),
                    "terms": render::multipoly_json(&poly, vars.len()),
                    "vars": vars,
                })),
            }
            Ok(())
        }

        Cmd::RectSeq {
            m,
            terms,
            weighted,
            verify_oracle,
            common,
        } => {
            let mode = common.mode.tiling();
            let last = terms as usize - 1;
            let params = json!({
                "m": m, "mode": common.mode.as_str(), "terms": terms, "weighted": weighted,
            });
            if weighted {
                let mut cache = TmCache::<MultiPoly>::new();
                let seq =
                    seq_rect_in(&mut cache, m as u8, last, mode).map_err(|e| e.to_string())?;
                if verify_oracle {
                    check_oracle_poly(
                        &seq,
                        ORACLE_HEAD,
                        "rect-seq",
                        |n| build_rectangle(m, n as u32),
                        mode,
                    )?;
                }
                emit_poly_seq(common.format, params, &seq, common.mode.weight_vars());
            } else {
                let mut cache = TmCache::<Int>::new();
                let seq =
                    seq_rect_in(&mut cache, m as u8, last, mode).map_err(|e| e.to_string())?;
                if verify_oracle {
                    check_oracle_int(
                        &seq,
                        ORACLE_HEAD,
                        "rect-seq",
                        |n| build_rectangle(m, n as u32),
                        mode,
                    )?;
                }
                emit_int_seq(common.format, params, &seq);
            }
            Ok(())
        }

        Cmd::FrameSeq {
            a1,
            a2,
            b1,
            b2,
            terms,
            weighted,
            verify_oracle,
            common,
        } => {
            let mode = common.mode.tiling();
            let last = terms as usize - 1;
            let params = json!({
                "a1": a1, "a2": a2, "b1": b1, "b2": b2,
                "mode": common.mode.as_str(), "terms": terms, "weighted": weighted,
            });
            let spec = frame_spec(a1, a2, b1, b2)?;
            let region_of = |n: usize| build_frame(&spec.with_hole(n as u32, n as u32));
            if weighted {
                let mut eng = Engine::<MultiPoly>::new();
                let seq = eng
                    .frame_seq(a1, a2, b1, b2, last, mode)
                    .map_err(|e| e.to_string())?;
                if verify_oracle {
                    check_oracle_poly(&seq, ORACLE_HEAD, "frame-seq", region_of, mode)?;
                }
                emit_poly_seq(common.format, params, &seq, common.mode.weight_vars());
            } else {
                let mut eng = Engine::<Int>::new();
                let seq = eng
                    .frame_seq(a1, a2, b1, b2, last, mode)
                    .map_err(|e| e.to_string())?;
                if verify_oracle {
                    check_oracle_int(&seq, ORACLE_HEAD, "frame-seq", region_of, mode)?;
                }
                emit_int_seq(common.format, params, &seq);
            }
            Ok(())
        }

        Cmd::FrameGf {
            a1,
            a2,
            b1,
            b2,
            terms,
            guess,
            verify_oracle,
            common,
        } => {
            let mode = common.mode.tiling();
            let terms = terms.unwrap_or_else(|| guess.default_terms());
            let mut eng = Engine::<Int>::new();
            let seq = eng
                .frame_seq(a1, a2, b1, b2, terms as usize - 1, mode)
                .map_err(|e| e.to_string())?;
            if verify_oracle {
                let spec = frame_spec(a1, a2, b1, b2)?;
                check_oracle_int(
                    &seq,
                    ORACLE_HEAD,
                    "frame-gf",
                    |n| build_frame(&spec.with_hole(n as u32, n as u32)),
                    mode,
                )?;
            }
            let gf = guess_rational_gf(&rats(&seq), &guess.config());
            emit_gf(common.format, gf.as_ref());
            Ok(())
        }

        Cmd::FrameGfBivariate {
            a1,
            a2,
            b1,
            b2,
            terms,
            convention,
            guess,
            verify_oracle,
            common,
        } => {
            let mode = common.mode.tiling();
            let side = terms.unwrap_or_else(|| guess.default_terms()) as usize;
            let spec = frame_spec(a1, a2, b1, b2)?;
            let mut eng = Engine::<Int>::new();
            let table = match convention {
                ConventionArg::Trace => eng.frame_table_trace(&spec, side - 1, side - 1, mode),
                ConventionArg::Region => eng.frame_table(&spec, side - 1, side - 1, mode),
            }
            .map_err(|e| e.to_string())?;
            if verify_oracle {
                // entries with both hole dimensions positive (and the solid
                // frame) are region counts under either convention
                let head = 3.min(side);
                for (m, row) in table.iter().enumerate().take(head) {
                    for (n, got) in row.iter().enumerate().take(head) {
                        let degenerate = (m == 0) != (n == 0);
                        if degenerate && convention == ConventionArg::Trace {
                            continue;
                        }
                        let region = build_frame(&spec.with_hole(m as u32, n as u32));
                        let want = count_tilings(&region, mode);
                        if *got != want {
                            return Err(format!(
                                "oracle mismatch for frame table at ({m}, {n}): engine {got}, direct enumeration {want}"
                            ));
                        }
                    }
                }
            }
            let table_rats: Vec<Vec<Rat>> = table.iter().map(|row| rats(row)).collect();
            let gf = guess_bivariate_gf(&table_rats, &guess.config());
            match (common.format, gf) {
                (FormatArg::Plain, Some(gf)) => println!("{}", render::bivariate_plain(&gf)),
                (FormatArg::Plain, None) => println!("none"),
                (FormatArg::Json, Some(gf)) => {
                    render::print_json(&render::bivariate_json(&gf, convention.as_str()))
                }
                (FormatArg::Json, None) => render::print_json(&Value::Null),
            }
            Ok(())
        }

        Cmd::CrossSeq {
            a,
            b,
            terms,
            weighted,
            verify_oracle,
            common,
        } => {
            let mode = common.mode.tiling();
            let last = terms as usize - 1;
            let spec = CrossSpec::new(a, b, 0).map_err(|e| e.to_string())?;
            let params = json!({
                "a": a, "b": b, "mode": common.mode.as_str(), "terms": terms, "weighted": weighted,
            });
            let region_of = |n: usize| build_cross(&CrossSpec::new(a, b, n as u32).expect("valid"));
            if weighted {
                let mut eng = Engine::<MultiPoly>::new();
                let seq = eng
                    .cross_seq(&spec, last, mode)
                    .map_err(|e| e.to_string())?;
                if verify_oracle {
                    check_oracle_poly(&seq, ORACLE_HEAD, "cross-seq", region_of, mode)?;
                }
                emit_poly_seq(common.format, params, &seq, common.mode.weight_vars());
            } else {
                let mut eng = Engine::<Int>::new();
                let seq = eng
                    .cross_seq(&spec, last, mode)
                    .map_err(|e| e.to_string())?;
                if verify_oracle {
                    check_oracle_int(&seq, ORACLE_HEAD, "cross-seq", region_of, mode)?;
                }
                emit_int_seq(common.format, params, &seq);
            }
            Ok(())
        }

        Cmd::CrossGf {
            a,
            b,
            terms,
            guess,
            verify_oracle,
            common,
        } => {
            let mode = common.mode.tiling();
            let terms = terms.unwrap_or_else(|| guess.default_terms());
            let spec = CrossSpec::new(a, b, 0).map_err(|e| e.to_string())?;
            let mut eng = Engine::<Int>::new();
            let seq = eng
                .cross_seq(&spec, terms as usize - 1, mode)
                .map_err(|e| e.to_string())?;
            if verify_oracle {
                check_oracle_int(
                    &seq,
                    ORACLE_HEAD,
                    "cross-gf",
                    |n| build_cross(&CrossSpec::new(a, b, n as u32).expect("valid")),
                    mode,
                )?;
            }
            let gf = guess_rational_gf(&rats(&seq), &guess.config());
            emit_gf(common.format, gf.as_ref());
            Ok(())
        }

        Cmd::GuessCfinite {
            file,
            guess,
            format,
        } => {
            let terms = inputs::parse_terms(&inputs::read_file(&file)?)?;
            let result = guess_cfinite(&terms, &guess.config());
            match (format, result) {
                (FormatArg::Plain, Some(cf)) => println!("{}", render::cfinite_plain(&cf)),
                (FormatArg::Plain, None) => println!("none"),
                (FormatArg::Json, Some(cf)) => render::print_json(&render::cfinite_json(&cf)),
                (FormatArg::Json, None) => render::print_json(&Value::Null),
            }
            Ok(())
        }

        Cmd::CfiniteEqual { a, b, format } => {
            let ca = inputs::parse_cfinite_json(&inputs::read_file(&a)?)
                .map_err(|e| format!("{}: {e}", a.display()))?;
            let cb = inputs::parse_cfinite_json(&inputs::read_file(&b)?)
                .map_err(|e| format!("{}: {e}", b.display()))?;
            let equal = cfinite_equal(&ca, &cb);
            match format {
                FormatArg::Plain => println!("{equal}"),
                FormatArg::Json => render::print_json(&json!({ "equal": equal })),
            }
            Ok(())
        }

        Cmd::VerifyBound {
            cfinite,
            terms,
            bound,
            format,
        } => {
            let cf = inputs::parse_cfinite_json(&inputs::read_file(&cfinite)?)
                .map_err(|e| format!("{}: {e}", cfinite.display()))?;
            let seq = inputs::parse_terms(&inputs::read_file(&terms)?)?;
            let status = verify_cfinite_with_bound(&cf, &seq, bound as usize);
            match format {
                FormatArg::Plain => println!("{status}"),
                FormatArg::Json => render::print_json(&json!({ "status": status.to_string() })),
            }
            Ok(())
        }

        Cmd::Moments {
            a1,
            a2,
            b1,
            b2,
            var,
            upto,
            terms,
            common,
        } => {
            let mode = common.mode.tiling();
            let mut eng = Engine::<MultiPoly>::new();
            let polys = eng
                .frame_seq(a1, a2, b1, b2, terms as usize - 1, mode)
                .map_err(|e| e.to_string())?;
            let records =
                weighted_moments(&polys, var.index(), upto as usize).map_err(|e| e.to_string())?;
            let opt = |v: &Option<Rat>| -> Value {
                v.as_ref()
                    .map(|r| Value::String(render::rat_str(r)))
                    .unwrap_or(Value::Null)
            };
            match common.format {
                FormatArg::Plain => {
                    for r in &records {
                        let fmt_opt = |v: &Option<Rat>| {
                            v.as_ref()
                                .map(render::rat_str)
                                .unwrap_or_else(|| "none".into())
                        };
                        println!(
                            "n={} count={} mean={} variance={} skewness_sq={} kurtosis={}",
                            r.index,
                            render::rat_str(&r.count),
                            render::rat_str(&r.mean),
                            render::rat_str(&r.variance),
                            fmt_opt(&r.skewness_squared),
                            fmt_opt(&r.kurtosis),
                        );
                    }
                }
                FormatArg::Json => {
                    let recs: Vec<Value> = records
                        .iter()
                        .map(|r| {
                            json!({
                                "count": render::rat_str(&r.count),
                                "index": r.index,
                                "kurtosis": opt(&r.kurtosis),
                                "mean": render::rat_str(&r.mean),
                                "skewness_squared": opt(&r.skewness_squared),
                                "variance": render::rat_str(&r.variance),
                            })
                        })
                        .collect();
                    render::print_json(&json!({
                        "params": {
                            "a1": a1, "a2": a2, "b1": b1, "b2": b2,
                            "mode": common.mode.as_str(), "terms": terms,
                            "upto": upto, "var": var.as_str(),
                        },
                        "records": recs,
                    }));
                }
            }
            Ok(())
        }

        Cmd::Growth {
            cfinite,
            index,
            format,
        } => {
            let cf = inputs::parse_cfinite_json(&inputs::read_file(&cfinite)?)
                .map_err(|e| format!("{}: {e}", cfinite.display()))?;
            let g = growth_rate(&cf, index as usize).map_err(|e| e.to_string())?;
            match format {
                FormatArg::Plain => {
                    println!(
                        "{:.9} ± {:.3e} (index {})",
                        g.estimate, g.error_bound, g.index
                    )
                }
                FormatArg::Json => render::print_json(&json!({
                    "error_bound": g.error_bound,
                    "estimate": g.estimate,
                    "index": g.index,
                })),
            }
            Ok(())
        }
    }
}
