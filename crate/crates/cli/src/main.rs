use bentcodec::bounds::{bent_bound, plateaued_bound, restricted_nearbent_bound, BoundReport};
use bentcodec::boolfn::{algebraic_degree, classify_spectrum, walsh_transform, BooleanFunction};
use bentcodec::codec::{
    bitstream_length_report, decode_bytes, encode_bent_dual, encode_plateaued, CodecBitstream,
    LengthReport,
};
use bentcodec::search::{enumerate_plateaued, Corpus};
use bentcodec::stats::{face_histogram, odd_parity_fraction, per_face_bit_cost, Face, FaceRegion};
use bentcodec::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bentcodec", version, about = "Analyze and compactly store bent and plateaued Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Input file (tt, BPC1 stream or corpus, depending on the command)
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Output file; standard output when absent
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodecMode {
    /// Shorter of the two pipelines (bent-dual only applies to bent input)
    Auto,
    Plateaued,
    BentDual,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, plateau class, spectrum summary and odd-flat census of a tt file
    Analyze(Common),
    /// tt file to BPC1 stream
    Encode {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = CodecMode::Auto)]
        mode: CodecMode,
    },
    /// BPC1 stream to tt file
    Decode(Common),
    /// Write every s-plateaued function on n ≤ 4 variables as a corpus
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, short)]
        n: usize,
        #[arg(long, short, default_value_t = 0)]
        s: usize,
    },
    /// Leading terms of the storage bounds over a range of n
    Bounds {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Odd-flat census at a point and face histograms of a tt file
    Stats {
        #[command(flatten)]
        common: Common,
        /// Point as an integer index
        #[arg(long, default_value_t = 0)]
        x: u32,
        /// Ball radius for the face histogram; all translates when absent
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Encode and decode every function of a corpus and report lengths
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = CodecMode::Auto)]
        mode: CodecMode,
    },
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(common: &Common) -> CliResult<Vec<u8>> {
    match &common.input {
        Some(p) => fs::read(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut buf = Vec::new();
            std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)
                .map_err(|e| CliError::Io(e.to_string()))?;
            Ok(buf)
        }
    }
}

fn read_text(common: &Common) -> CliResult<String> {
    String::from_utf8(read_input(common)?).map_err(|_| Error::Parse("input is not UTF-8".into()).into())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn emit(common: &Common, text: String, value: Value) -> CliResult<()> {
    let out = if common.json {
        let mut v = value;
        v["schema"] = json!(1);
        format!("{v}\n")
    } else {
        text
    };
    write_output(common.output.as_deref(), out.as_bytes())
}

fn encode_with(f: &BooleanFunction, mode: CodecMode, seed: u64) -> CliResult<CodecBitstream> {
    Ok(match mode {
        CodecMode::Plateaued => encode_plateaued(f, seed)?,
        CodecMode::BentDual => encode_bent_dual(f, seed)?,
        CodecMode::Auto => {
            let direct = encode_plateaued(f, seed)?;
            match encode_bent_dual(f, seed) {
                Ok(dual) if dual.total_bits() < direct.total_bits() => dual,
                _ => direct,
            }
        }
    })
}

fn analyze(common: &Common) -> CliResult<()> {
    let f = BooleanFunction::from_tt_str(&read_text(common)?)?;
    let w = walsh_transform(&f);
    let class = classify_spectrum(&w);
    let degree = algebraic_degree(&f);
    let mut values: Vec<i32> = w.values().to_vec();
    values.sort_unstable();
    values.dedup();
    let census = if f.n() >= 2 && class.order().is_some() {
        Some(odd_parity_fraction(&f, 0)?)
    } else {
        None
    };
    let mut text = format!("{class}, degree {degree}\n");
    text += &format!("n = {}, weight = {}\n", f.n(), f.weight());
    text += &format!(
        "spectrum: max |W| = {}, support {} of {}, values {:?}\n",
        w.max_abs(),
        w.support_size(),
        f.len(),
        values
    );
    if let Some(c) = &census {
        text += &format!("odd 2-flats through 0: S/V = {}/{} = {}\n", c.s, c.v, c.fraction);
    }
    emit(
        common,
        text,
        json!({
            "n": f.n(),
            "degree": degree,
            "class": class.to_string(),
            "s": class.order(),
            "weight": f.weight(),
            "spectrum": {
                "max_abs": w.max_abs(),
                "support": w.support_size(),
                "distinct": values,
            },
            "census": census.map(|c| c.to_json(None)),
        }),
    )
}

fn encode(common: &Common, mode: CodecMode) -> CliResult<()> {
    let f = BooleanFunction::from_tt_str(&read_text(common)?)?;
    let stream = encode_with(&f, mode, common.seed)?;
    write_output(common.output.as_deref(), &stream.to_bytes())
}

fn decode(common: &Common) -> CliResult<()> {
    let f = decode_bytes(&read_input(common)?)?;
    write_output(common.output.as_deref(), f.to_tt_string().as_bytes())
}

fn enumerate(common: &Common, n: usize, s: usize) -> CliResult<()> {
    let corpus = enumerate_plateaued(n, s)?;
    write_output(common.output.as_deref(), corpus.to_text().as_bytes())
}

fn report_json(r: &BoundReport) -> Value {
    serde_json::to_value(r).expect("bound reports serialize")
}

fn bounds(common: &Common, n_min: usize, n_max: usize) -> CliResult<()> {
    let mut reports = Vec::new();
    for n in n_min.max(2)..=n_max {
        if n % 2 == 0 {
            reports.push(bent_bound::<f64>(n)?);
        } else if n >= 3 {
            reports.push(restricted_nearbent_bound::<f64>(n)?);
        }
        for s in (1..=n).filter(|s| (n + s) % 2 == 0) {
            reports.push(plateaued_bound::<f64>(n, s)?);
        }
    }
    let mut text = format!("{:<22} {:>3} {:>3} {:>14} {:>10}\n", "bound", "n", "s", "leading bits", "known");
    for r in &reports {
        let known = r.known_log2_count.map_or(String::new(), |k| format!("{k:.1}"));
        text += &format!(
            "{:<22} {:>3} {:>3} {:>14.3} {:>10}\n",
            r.kind, r.n, r.s, r.leading_term_bits, known
        );
        for f in &r.flags {
            text += &format!("{:<22} note: {f}\n", "");
        }
    }
    emit(
        common,
        text,
        json!({ "reports": reports.iter().map(report_json).collect::<Vec<_>>() }),
    )
}

fn stats(common: &Common, x: u32, radius: Option<usize>) -> CliResult<()> {
    let f = BooleanFunction::from_tt_str(&read_text(common)?)?;
    let census = odd_parity_fraction(&f, x)?;
    let region = radius.map_or(FaceRegion::All, FaceRegion::Ball);
    let mut text = format!(
        "odd 2-flats through {x}: S = {}, V = {}, S/V = {}\n",
        census.s, census.v, census.fraction
    );
    let mut faces = Vec::new();
    for face in Face::all(f.n()) {
        let h = face_histogram(&f, face, region)?;
        let cost = per_face_bit_cost(&h)?;
        let (i, j) = face.coords();
        text += &format!(
            "face ({i},{j}): zeros 0..4 = {:?}, bits/face = {:.4}\n",
            h.counts,
            cost.to_f64()
        );
        let mut v = h.to_json();
        v["bits_per_face"] = json!(cost.to_f64());
        faces.push(v);
    }
    emit(
        common,
        text,
        json!({ "census": census.to_json(None), "faces": faces }),
    )
}

fn verify(common: &Common, mode: CodecMode) -> CliResult<()> {
    let corpus = Corpus::from_text(&read_text(common)?)?;
    let seed = common.seed;
    let results: Vec<Result<LengthReport, String>> = corpus
        .functions
        .par_iter()
        .map(|f| {
            let stream = encode_with(f, mode, seed).map_err(|e| format!("{e:?}"))?;
            let back = decode_bytes(&stream.to_bytes()).map_err(|e| e.to_string())?;
            if back != *f {
                return Err(format!("roundtrip changed {f:?}"));
            }
            bitstream_length_report(&stream).map_err(|e| e.to_string())
        })
        .collect();
    let ok: Vec<&LengthReport> = results.iter().filter_map(|r| r.as_ref().ok()).collect();
    let total = corpus.len();
    let mut text = format!("{}/{} roundtrips OK\n", ok.len(), total);
    let summary = if ok.is_empty() {
        Value::Null
    } else {
        let bits: Vec<usize> = ok.iter().map(|r| r.total_bits).collect();
        let payload: Vec<usize> = ok.iter().map(|r| r.payload_bits).collect();
        let mean = |v: &[usize]| v.iter().sum::<usize>() as f64 / v.len() as f64;
        let (lo, hi) = (bits.iter().min().unwrap(), bits.iter().max().unwrap());
        let accounting = ok.iter().all(|r| r.accounting_holds());
        text += &format!(
            "total bits: mean {:.2}, min {lo}, max {hi}; payload bits mean {:.2}; accounting {}\n",
            mean(&bits),
            mean(&payload),
            if accounting { "exact" } else { "MISMATCH" }
        );
        json!({
            "mean_total_bits": mean(&bits),
            "min_total_bits": lo,
            "max_total_bits": hi,
            "mean_payload_bits": mean(&payload),
            "accounting_exact": accounting,
        })
    };
    for e in results.iter().filter_map(|r| r.as_ref().err()).take(5) {
        text += &format!("failure: {e}\n");
    }
    emit(
        common,
        text,
        json!({ "n": corpus.n, "s": corpus.s, "count": total, "ok": ok.len(), "lengths": summary }),
    )?;
    if ok.len() != total {
        return Err(CliError::Domain(Error::MalformedStream(format!(
            "{} of {total} roundtrips failed",
            total - ok.len()
        ))));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(c) => analyze(c),
        Command::Encode { common, mode } => encode(common, *mode),
        Command::Decode(c) => decode(c),
        Command::Enumerate { common, n, s } => enumerate(common, *n, *s),
        Command::Bounds { common, n_min, n_max } => bounds(common, *n_min, *n_max),
        Command::Stats { common, x, radius } => stats(common, *x, *radius),
        Command::Verify { common, mode } => verify(common, *mode),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
