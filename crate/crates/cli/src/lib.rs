//! The `gf2pat` command line, callable in-process through [`run`].

use std::io::{Read, Write};
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gf2pat::dsl::{self, parse, parse_poly};
use gf2pat::fold::{self, FoldScheme};
use gf2pat::render::{self, Origin, Perspective, RenderConfig};
use gf2pat::ring::{self, RingSpec};
use gf2pat::seq::{self, BitSeq};
use gf2pat::{PatternPoly, TermOrdering, Window, WindowMode};

#[derive(Debug, Parser)]
#[command(name = "gf2pat", version, about = "Binary patterns as polynomials over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a pattern expression on a grid (terms by default).
    Expand(PatternArgs),
    /// Evaluate a pattern expression and draw it (ASCII by default).
    Render(PatternArgs),
    /// Multiplicative order of an element modulo x^M - 1, y^N - 1.
    Order(ElementArgs),
    /// Multiplication table of the monomial basis.
    Table {
        #[arg(long = "mod", value_name = "M,N", value_parser = parse_modulus)]
        modulus: (u32, u32),
    },
    /// Inverse of an element, or a zero-divisor witness.
    Invert(ElementArgs),
    /// Fold a bit sequence into an array.
    Map {
        #[arg(long, value_parser = BitSeq::from_str)]
        seq: BitSeq,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value = "diagonal", value_parser = FoldScheme::from_str)]
        scheme: FoldScheme,
    },
    /// Binary expansion of 1/p for an odd prime p.
    Dseq {
        #[arg(long)]
        prime: u64,
        /// Defaults to one full period.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Series coefficients of 1/q(x).
    Lfsr {
        #[arg(long)]
        poly: String,
        /// Defaults to one full period.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Bit sequence of a polynomial under a term ordering.
    Encode {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "diagonal", value_parser = TermOrdering::from_str)]
        ordering: TermOrdering,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Polynomial of a bit sequence under a term ordering.
    Decode {
        #[arg(long, value_parser = BitSeq::from_str)]
        bits: BitSeq,
        #[arg(long, default_value = "diagonal", value_parser = TermOrdering::from_str)]
        ordering: TermOrdering,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("shape").required(true).args(["grid", "size"])))]
struct PatternArgs {
    #[arg(long, conflicts_with = "stdin", required_unless_present = "stdin")]
    expr: Option<String>,
    /// Read the expression from standard input.
    #[arg(long)]
    stdin: bool,
    /// Inclusive maximum exponents.
    #[arg(long, value_name = "MxN", value_parser = parse_grid)]
    grid: Option<(u32, u32)>,
    /// Cell counts, W = M + 1 and H = N + 1.
    #[arg(long, value_name = "WxH", value_parser = parse_size)]
    size: Option<(u32, u32)>,
    #[arg(long, value_enum, default_value_t = Mode::Window)]
    mode: Mode,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Term order for `--format terms`.
    #[arg(long, value_parser = TermOrdering::from_str)]
    ordering: Option<TermOrdering>,
    #[arg(long, value_enum, default_value_t = OriginArg::TopLeft)]
    origin: OriginArg,
    #[arg(long, default_value_t = '#')]
    on: char,
    #[arg(long, default_value_t = '.')]
    off: char,
    /// SVG cell size of the first row and column.
    #[arg(long, default_value_t = 10.0)]
    cell: f64,
    /// SVG column shrink ratio.
    #[arg(long)]
    rx: Option<f64>,
    /// SVG row shrink ratio.
    #[arg(long)]
    ry: Option<f64>,
}

#[derive(Debug, Args)]
struct ElementArgs {
    #[arg(long)]
    element: String,
    #[arg(long = "mod", value_name = "M,N", value_parser = parse_modulus)]
    modulus: (u32, u32),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Window,
    Wrap,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Terms,
    Ascii,
    Pbm,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OriginArg {
    TopLeft,
    BottomLeft,
}

fn parse_pair(s: &str, sep: char) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(|c: char| c == sep || c == sep.to_ascii_uppercase())
        .ok_or_else(|| format!("expected two integers separated by '{sep}'"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_grid(s: &str) -> Result<(u32, u32), String> {
    parse_pair(s, 'x')
}

fn parse_size(s: &str) -> Result<(u32, u32), String> {
    let (w, h) = parse_pair(s, 'x')?;
    if w == 0 || h == 0 {
        return Err("width and height must be positive".into());
    }
    Ok((w, h))
}

fn parse_modulus(s: &str) -> Result<(u32, u32), String> {
    let (m, n) = parse_pair(s, ',')?;
    if m == 0 || n == 0 {
        return Err("moduli must be positive".into());
    }
    Ok((m, n))
}

type Failure = String;

fn fail(e: impl std::fmt::Display) -> Failure {
    e.to_string()
}

/// Runs one invocation. Output reaches `stdout` only on success; diagnostics
/// go to `stderr`. Returns the exit code: 0 ok, 1 domain error, 2 usage error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(bytes) => match stdout.write_all(&bytes).and_then(|_| stdout.flush()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "error: writing output: {e}");
                1
            }
        },
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    match command {
        Command::Expand(a) => pattern(a, Format::Terms, stdin),
        Command::Render(a) => pattern(a, Format::Ascii, stdin),
        Command::Order(a) => {
            let (spec, e) = element(&a)?;
            Ok(line(ring::order(&e, spec).map_err(fail)?))
        }
        Command::Table { modulus } => table(modulus),
        Command::Invert(a) => {
            let (spec, e) = element(&a)?;
            match ring::inverse(&e, spec) {
                Some(inv) => Ok(line(inv)),
                None => Err(match ring::annihilator(&e, spec) {
                    Some(z) => format!("{e} is not invertible {spec}: ({e})*({z}) = 0"),
                    None => format!("{e} is not invertible {spec}"),
                }),
            }
        }
        Command::Map { seq, rows, cols, scheme } => {
            Ok(fold::fold(&seq, rows, cols, scheme).map_err(fail)?.to_string().into_bytes())
        }
        Command::Dseq { prime, count } => {
            let count = match count {
                Some(c) => c,
                None if seq::is_prime(prime) && prime > 2 => seq::order_of_two(prime) as usize,
                None => return Err(fail(seq::SeqError::NotOddPrime(prime))),
            };
            Ok(line(seq::dseq(prime, count).map_err(fail)?))
        }
        Command::Lfsr { poly, count } => {
            let q = expr_poly(&poly, "--poly")?;
            let s = match count {
                Some(c) => seq::poly_reciprocal_seq(&q, c).map_err(fail)?,
                None => {
                    let probe = seq::poly_reciprocal_seq(&q, 1).map_err(fail)?;
                    let period = probe
                        .period_hint()
                        .ok_or("period unknown for this polynomial; pass --count")?;
                    seq::poly_reciprocal_seq(&q, period).map_err(fail)?
                }
            };
            Ok(line(s))
        }
        Command::Encode { poly, ordering, length } => {
            let p = expr_poly(&poly, "--poly")?;
            Ok(line(ordering.encode(&p, length).map_err(fail)?))
        }
        Command::Decode { bits, ordering } => Ok(line(ordering.decode(&bits))),
    }
}

fn line(v: impl std::fmt::Display) -> Vec<u8> {
    format!("{v}\n").into_bytes()
}

fn expr_poly(text: &str, flag: &str) -> Result<PatternPoly, Failure> {
    parse_poly(text).map_err(|e| format!("{flag} {text:?}: {e}"))
}

fn element(a: &ElementArgs) -> Result<(RingSpec, ring::RingElement), Failure> {
    let spec = RingSpec::new(a.modulus.0, a.modulus.1).map_err(fail)?;
    let p = expr_poly(&a.element, "--element")?;
    Ok((spec, ring::reduce(&p, spec)))
}

fn window(a: &PatternArgs) -> Result<Window, Failure> {
    let (m, n) = match (a.grid, a.size) {
        (Some(g), _) => g,
        (None, Some((w, h))) => (w - 1, h - 1),
        (None, None) => unreachable!("clap requires one of --grid, --size"),
    };
    let mode = match a.mode {
        Mode::Window => WindowMode::Window,
        Mode::Wrap => WindowMode::Wrap,
    };
    Ok(Window::new(m, n).with_mode(mode))
}

fn pattern(a: PatternArgs, default: Format, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let w = window(&a)?;
    let text = match &a.expr {
        Some(t) => t.clone(),
        None => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| format!("reading standard input: {e}"))?;
            buf
        }
    };
    let expr = parse(text.trim()).map_err(|e| format!("expression: {e}"))?;
    let p = dsl::evaluate(&expr, &w).map_err(fail)?;
    let format = a.format.unwrap_or(default);
    if a.ordering.is_some() && format != Format::Terms {
        return Err("--ordering applies only to --format terms".into());
    }
    let origin = match a.origin {
        OriginArg::TopLeft => Origin::TopLeft,
        OriginArg::BottomLeft => Origin::BottomLeft,
    };
    let perspective = match (a.rx, a.ry) {
        (None, None) => None,
        (rx, ry) => Some(Perspective { rx: rx.unwrap_or(1.0), ry: ry.unwrap_or(1.0) }),
    };
    let cfg = RenderConfig {
        glyph_on: a.on,
        glyph_off: a.off,
        origin,
        base_cell: a.cell,
        perspective,
    };
    cfg.validate().map_err(fail)?;
    Ok(match format {
        Format::Terms => match a.ordering {
            None | Some(TermOrdering::Diagonal) => line(&p),
            Some(o) => line(terms_in(&p, o)?),
        },
        Format::Ascii => render::render_ascii(&p, &w, &cfg).into_bytes(),
        Format::Pbm => render::render_pbm_oriented(&p, &w, origin),
        Format::Svg => render::render_svg(&p, &w, &cfg).into_bytes(),
    })
}

/// Terms of `p` joined by `+` in the order given by `o`.
fn terms_in(p: &PatternPoly, o: TermOrdering) -> Result<String, Failure> {
    if p.is_zero() {
        return Ok("0".into());
    }
    let mut keyed = p
        .iter()
        .map(|m| o.index_of(m).map(|k| (k, m)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    keyed.sort();
    let parts: Vec<String> = keyed.iter().map(|&(_, m)| PatternPoly::monomial(m.i, m.j).to_string()).collect();
    Ok(parts.join("+"))
}

fn table(modulus: (u32, u32)) -> Result<Vec<u8>, Failure> {
    let spec = RingSpec::new(modulus.0, modulus.1).map_err(fail)?;
    let t = ring::mul_table(spec).map_err(fail)?;
    let header: Vec<String> = spec
        .basis()
        .iter()
        .map(|m| PatternPoly::monomial(m.i, m.j).to_string())
        .collect();
    let mut rows = vec![std::iter::once("*".to_string()).chain(header.iter().cloned()).collect::<Vec<_>>()];
    for (h, r) in header.iter().zip(&t) {
        rows.push(std::iter::once(h.clone()).chain(r.iter().map(|e| e.to_string())).collect());
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in &rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, &w)| format!("{s:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    Ok(out.into_bytes())
}
