//! Command-line front end. The `defc` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 success, 1 usage, 2 I/O, 3 format, 4 integrity.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    chi_square, chi_square_critical, correlation_report, histogram, key_sensitivity_suite,
    timing_report, WrongKeyOutcome, DEFAULT_SAMPLES,
};
use crate::codec::{self, container};
use crate::error::{Error, Result};
use crate::key::{KeyFormat, SecretKey};
use crate::pipeline::{decrypt_image, encrypt_image, render_cipher, PlainImage};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_FORMAT: i32 = 3;
pub const EXIT_INTEGRITY: i32 = 4;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::Integrity(_) => EXIT_INTEGRITY,
        Error::InvalidKey(_) | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_FORMAT,
    }
}

#[derive(Debug, Parser)]
#[command(name = "defc", version, about = "Frequency-domain image cipher")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encrypt a PGM/PNG image into a cipher container
    Encrypt(CryptArgs),
    /// Decrypt a cipher container into a PGM/PNG image
    Decrypt(CryptArgs),
    /// Write the log-magnitude rendering of a cipher as an image
    Render(RenderArgs),
    /// Run one of the statistical analyses
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
struct KeyArgs {
    /// Secret key (up to 256 bits)
    #[arg(long)]
    key: String,
    #[arg(long, value_enum, default_value_t = KeyFormatArg::Hex)]
    key_format: KeyFormatArg,
}

#[derive(Debug, Args)]
struct CryptArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    /// Mutation passes per pixel; decrypt defaults to the value in the header
    #[arg(long)]
    repeat_factor: Option<u32>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Image (PGM/PNG) or cipher container; ciphers are analyzed through
    /// their rendering
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    key: Option<String>,
    #[arg(long, value_enum, default_value_t = KeyFormatArg::Hex)]
    key_format: KeyFormatArg,
    #[arg(long, default_value_t = 1)]
    repeat_factor: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KeyFormatArg {
    Hex,
    Dec,
}

impl From<KeyFormatArg> for KeyFormat {
    fn from(k: KeyFormatArg) -> Self {
        match k {
            KeyFormatArg::Hex => KeyFormat::Hex,
            KeyFormatArg::Dec => KeyFormat::Decimal,
        }
    }
}

/// Analysis selected by `analyze --mode`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Histogram,
    Correlation,
    Keysens,
    Timing,
}

/// How `analyze` prints its results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Text,
    Kv,
}

/// Ordered `name = value` results of an analysis.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, value: impl ToString) {
        self.entries.push((name.into(), value.to_string()));
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render(&self, format: ReportFormat) -> String {
        let mut out = String::new();
        let width = self.entries.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        for (name, value) in &self.entries {
            match format {
                ReportFormat::Kv => writeln!(out, "{name}={value}"),
                ReportFormat::Text => writeln!(out, "{name:<width$}  {value}"),
            }
            .expect("writing to a String");
        }
        out
    }
}

pub fn cmd_encrypt(input: &Path, output: &Path, key: &SecretKey, repeat_factor: u32) -> Result<()> {
    let img = codec::read_image(input)?;
    let cipher = encrypt_image(&img, key, repeat_factor)?;
    codec::write_cipher(&cipher, output)
}

/// `repeat_factor = None` uses the value recorded in the container.
pub fn cmd_decrypt(
    input: &Path,
    output: &Path,
    key: &SecretKey,
    repeat_factor: Option<u32>,
) -> Result<()> {
    let cipher = codec::read_cipher(input)?;
    let rf = repeat_factor.unwrap_or(cipher.repeat_factor());
    let plain = decrypt_image(&cipher, key, rf)?;
    codec::write_image(&plain, output)
}

pub fn cmd_render(input: &Path, output: &Path) -> Result<()> {
    let cipher = codec::read_cipher(input)?;
    codec::write_image(&render_cipher(&cipher), output)
}

/// Loads an analysis input: an image as is, a cipher as its rendering.
fn load_for_analysis(path: &Path) -> Result<(PlainImage, &'static str)> {
    let bytes = std::fs::read(path)?;
    if bytes.starts_with(&container::MAGIC) {
        Ok((render_cipher(&container::decode(&bytes)?), "cipher-render"))
    } else {
        Ok((codec::decode_image(&bytes)?, "plain"))
    }
}

fn channel_prefix(img: &PlainImage, ch: usize) -> String {
    if img.channel_count() == 1 {
        String::new()
    } else {
        format!("c{ch}.")
    }
}

/// Runs one analysis over the file at `input`. Key-based modes require
/// `key`; histogram mode also reports the plain-vs-cipher chi-square when a
/// key is given.
pub fn cmd_analyze(
    mode: Mode,
    input: &Path,
    key: Option<&SecretKey>,
    repeat_factor: u32,
    seed: u64,
    samples: usize,
) -> Result<Report> {
    let (img, source) = load_for_analysis(input)?;
    let need_key = || {
        key.ok_or_else(|| {
            Error::InvalidArgument(format!("--mode {mode:?} requires --key").to_lowercase())
        })
    };
    let mut report = Report::default();
    report.push("source", source);
    report.push("width", img.width());
    report.push("height", img.height());
    report.push("channels", img.channel_count());
    match mode {
        Mode::Histogram => {
            let cipher_render = match key {
                Some(k) => Some(render_cipher(&encrypt_image(&img, k, repeat_factor)?)),
                None => None,
            };
            let critical = chi_square_critical(0.999, 255);
            for (ch, plane) in img.channels().iter().enumerate() {
                let p = channel_prefix(&img, ch);
                let h = histogram(plane)?;
                report.push(format!("{p}histogram"), h.to_csv());
                if let Some(render) = &cipher_render {
                    let hc = histogram(render.channel(ch))?;
                    report.push(format!("{p}cipher_histogram"), hc.to_csv());
                    report.push(
                        format!("{p}chi_square"),
                        format!("{:.3}", chi_square(&h, &hc)),
                    );
                }
            }
            if cipher_render.is_some() {
                report.push("chi_square_critical_0999", format!("{critical:.3}"));
            }
        }
        Mode::Correlation => {
            report.push("samples", samples);
            report.push("seed", seed);
            for (ch, plane) in img.channels().iter().enumerate() {
                let p = channel_prefix(&img, ch);
                let r = correlation_report(plane, samples, seed)?;
                report.push(format!("{p}horizontal"), format!("{:.4}", r.horizontal));
                report.push(format!("{p}vertical"), format!("{:.4}", r.vertical));
                report.push(format!("{p}diagonal"), format!("{:.4}", r.diagonal));
            }
        }
        Mode::Keysens => {
            let r = key_sensitivity_suite(&img, need_key()?, repeat_factor)?;
            report.push("corr_a_b", format!("{:.4}", r.a_b));
            report.push("corr_b_c", format!("{:.4}", r.b_c));
            report.push("corr_c_a", format!("{:.4}", r.c_a));
            match r.wrong_key {
                WrongKeyOutcome::IntegrityFailure(_) => {
                    report.push("wrong_key", "integrity_failure");
                }
                WrongKeyOutcome::Decrypted { correlation } => {
                    report.push("wrong_key", "decrypted");
                    report.push("wrong_key_corr", format!("{correlation:.4}"));
                }
            }
        }
        Mode::Timing => {
            let t = timing_report(&img, need_key()?, repeat_factor)?;
            report.push("runs", t.runs);
            report.push("encrypt_seconds", format!("{:.6}", t.encrypt_seconds));
            report.push("decrypt_seconds", format!("{:.6}", t.decrypt_seconds));
        }
    }
    Ok(report)
}

fn parse_key(s: &str, format: KeyFormatArg) -> Result<SecretKey> {
    SecretKey::parse(s, format.into())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Encrypt(a) => {
            let key = parse_key(&a.key.key, a.key.key_format)?;
            cmd_encrypt(&a.input, &a.output, &key, a.repeat_factor.unwrap_or(1))
        }
        Command::Decrypt(a) => {
            let key = parse_key(&a.key.key, a.key.key_format)?;
            cmd_decrypt(&a.input, &a.output, &key, a.repeat_factor)
        }
        Command::Render(a) => cmd_render(&a.input, &a.output),
        Command::Analyze(a) => {
            let key = a
                .key
                .as_deref()
                .map(|k| parse_key(k, a.key_format))
                .transpose()?;
            let report = cmd_analyze(
                a.mode,
                &a.input,
                key.as_ref(),
                a.repeat_factor,
                a.seed,
                a.samples,
            )?;
            out.write_all(report.render(a.report).as_bytes())?;
            Ok(())
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code. Diagnostics go to `err` as one line.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "defc: {e}");
            exit_code(&e)
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
