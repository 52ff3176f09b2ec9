use std::ffi::OsString;
use std::path::{Path, PathBuf};

use interval_dft::{
    compare_spectra, spectrum_bounds_with, verify_hull_in_box, verify_mc_enclosure, verify_selective_vs_brute,
    verify_zonogon_bound, FrequencyIndex, IntervalSignal64, Method, MinimumRule, VerificationReport, BRUTE_FORCE_CAP,
};

use crate::error::{CliError, Result};
use crate::output::{comparison_records, render, spectrum_rows, Format, Metadata};
use crate::plot::{render_svg, Series};
use crate::{ingest, Args, MethodArg};

/// Relative slack for the box-contains-selective comparison.
const NESTING_SLACK: f64 = 1e-9;

/// Runs the whole pipeline and returns the paths written. Nothing is left on
/// disk when an error is returned.
pub fn run(args: &Args) -> Result<Vec<PathBuf>> {
    let signal = ingest::load(&args.input, args.schema, args.precision)?;
    let len = signal.len();
    let (k_min, k_max) = k_range(args, len)?;

    let methods: &[Method] = match args.method {
        MethodArg::Selective => &[Method::Selective],
        MethodArg::Box => &[Method::Box],
        MethodArg::Brute => &[Method::Brute],
        MethodArg::Both => &[Method::Selective, Method::Box],
    };
    let rule = if args.paper_compat_min {
        MinimumRule::VertexArgmin
    } else {
        MinimumRule::Exact
    };
    let spectra = methods
        .iter()
        .map(|&m| spectrum_bounds_with(&signal, m, k_min..=k_max, rule))
        .collect::<interval_dft::Result<Vec<_>>>()?;

    let report = if args.mc_samples > 0 {
        let report = verify(&signal, args, k_min, k_max)?;
        if !report.all_passed() {
            return Err(CliError::Invariant(report.to_string()));
        }
        Some(report)
    } else {
        None
    };

    let mut metadata = Metadata {
        tool: "interval-dft",
        version: env!("CARGO_PKG_VERSION"),
        method: String::new(),
        minimum_rule: match rule {
            MinimumRule::Exact => "exact",
            MinimumRule::VertexArgmin => "vertex_argmin",
        },
        precision: signal.precision(),
        n: len,
        k_min,
        k_max,
        seed: args.seed,
        mc_samples: args.mc_samples,
    };
    let stem = stem(&args.output, args.format);
    let ext = args.format.extension();
    let mut artifacts: Vec<(PathBuf, String)> = Vec::new();

    let rows: Vec<_> = spectra.iter().map(spectrum_rows).collect();
    if let [spectrum] = spectra.as_slice() {
        metadata.method = spectrum.method.name().into();
        artifacts.push((with_suffix(&stem, "", ext), render(args.format, &metadata, &rows[0], report.as_ref())?));
    } else {
        for (spectrum, rows) in spectra.iter().zip(&rows) {
            let name = spectrum.method.name();
            metadata.method = name.into();
            let suffix = format!("-{name}");
            artifacts.push((with_suffix(&stem, &suffix, ext), render(args.format, &metadata, rows, report.as_ref())?));
        }
        let comparison = compare_spectra(&spectra[0], &spectra[1], NESTING_SLACK);
        if let Some(bad) = comparison.iter().find(|r| !r.nested) {
            return Err(CliError::Invariant(format!(
                "selective bounds [{}, {}] escape box bounds [{}, {}] at k={}",
                bad.selective_lo, bad.selective_hi, bad.box_lo, bad.box_hi, bad.k
            )));
        }
        metadata.method = "both".into();
        let records = comparison_records(&comparison, len);
        artifacts.push((
            with_suffix(&stem, "-comparison", ext),
            render(args.format, &metadata, &records, report.as_ref())?,
        ));
    }

    if let (Format::Csv, Some(report)) = (args.format, &report) {
        artifacts.push((with_suffix(&stem, "-verification", "txt"), format!("{report}\n")));
    }

    if args.plot {
        let palette = ["#1f5fa8", "#c0392b"];
        let series: Vec<Series<'_>> = spectra
            .iter()
            .zip(&rows)
            .zip(palette)
            .map(|((s, rows), color)| Series {
                label: s.method.name(),
                color,
                rows,
            })
            .collect();
        let title = match signal.precision() {
            Some(xi) => format!("amplitude bounds, N = {len}, precision {xi}"),
            None => format!("amplitude bounds, N = {len}"),
        };
        artifacts.push((with_suffix(&stem, "", "svg"), render_svg(&title, &series)));
    }

    write_all(&artifacts)?;
    Ok(artifacts.into_iter().map(|(p, _)| p).collect())
}

fn k_range(args: &Args, len: usize) -> Result<(usize, usize)> {
    let k_min = args.k_min.unwrap_or(1);
    let k_max = match args.k_max {
        Some(k) => k,
        None if len / 2 > k_min => len / 2 - 1,
        None => {
            return Err(CliError::Usage(format!(
                "default frequency range {k_min}..=N/2-1 is empty for N={len}; pass --k-min/--k-max"
            )))
        }
    };
    if k_min > k_max {
        return Err(CliError::Usage(format!("--k-min {k_min} exceeds --k-max {k_max}")));
    }
    FrequencyIndex::new(k_max, len)?;
    Ok((k_min, k_max))
}

/// Monte-Carlo enclosure over the whole range, per-frequency nesting and
/// vertex-count checks, and the brute-force oracle when it was requested.
fn verify(signal: &IntervalSignal64, args: &Args, k_min: usize, k_max: usize) -> Result<VerificationReport> {
    let len = signal.len();
    let mut report = VerificationReport::new(Some(args.seed));
    report.push(verify_mc_enclosure(signal, k_min..=k_max, args.mc_samples, args.seed)?);
    for k in k_min..=k_max {
        let f = FrequencyIndex::new(k, len)?;
        report.push(verify_hull_in_box(signal, f)?);
        report.push(verify_zonogon_bound(signal, f)?);
        if args.method == MethodArg::Brute && len <= BRUTE_FORCE_CAP {
            report.push(verify_selective_vs_brute(signal, f)?);
        }
    }
    Ok(report)
}

/// Drops an extension equal to the output format's.
fn stem(output: &Path, format: Format) -> PathBuf {
    match output.extension() {
        Some(ext) if ext == format.extension() => output.with_extension(""),
        _ => output.to_owned(),
    }
}

fn with_suffix(stem: &Path, suffix: &str, ext: &str) -> PathBuf {
    let mut name: OsString = stem.as_os_str().to_owned();
    name.push(suffix);
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn write_all(artifacts: &[(PathBuf, String)]) -> Result<()> {
    for (i, (path, text)) in artifacts.iter().enumerate() {
        if let Err(source) = std::fs::write(path, text) {
            for (written, _) in &artifacts[..=i] {
                let _ = std::fs::remove_file(written);
            }
            return Err(CliError::Write {
                path: path.clone(),
                source,
            });
        }
    }
    Ok(())
}
