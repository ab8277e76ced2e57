mod args;
mod manifest;
mod output;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use hdshapes::composer::PRESETS;
use hdshapes::{Dataset, MultiClusterSpec, PresetOptions, ShapeKind};

use args::{Cli, Command, Format, GenerateArgs, HoleBase, OutputArgs};
use manifest::{manifest_path, RunManifest, RunSpec};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

fn flag(name: &str) -> String {
    format!("--{}", name.replace('_', "-"))
}

/// Phrases library errors in terms of command-line flags.
fn usage_error(err: hdshapes::Error) -> CliError {
    use hdshapes::Error;
    CliError::Usage(match err {
        Error::RejectedParameter { param, target } => match target.parse::<ShapeKind>() {
            Ok(kind) => format!(
                "{} is not a valid flag for {target} (accepts {})",
                flag(&param),
                kind.accepted().iter().map(|p| flag(p.as_str())).collect::<Vec<_>>().join(", ")
            ),
            Err(_) => format!("parameter `{param}` is not accepted by {target}"),
        },
        Error::Parameter { name, reason } => format!("{}: {reason}", flag(&name)),
        Error::UnknownShape(name) => format!(
            "unknown shape `{name}`; known kinds: {}",
            ShapeKind::ALL.iter().map(|k| k.name()).collect::<Vec<_>>().join(", ")
        ),
        Error::UnknownPreset(name) => format!("unknown preset `{name}`; known presets: {}", PRESETS.join(", ")),
        other => other.to_string(),
    })
}

fn io_error(path: &Path, err: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{}: {err}", path.display()))
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let seed = rand::random();
        eprintln!("seed: {seed}");
        seed
    })
}

fn emit(spec: RunSpec, seed: u64, output: &OutputArgs, default_format: Format) -> Result<(), CliError> {
    let data = spec.run(seed).map_err(usage_error)?;
    let format = output.format.unwrap_or(default_format);
    match &output.out {
        Some(path) => {
            write_data(&data, format, path)?;
            let manifest = RunManifest::new(seed, spec, path, format, &data);
            let mpath = manifest_path(path);
            let text = serde_json::to_string_pretty(&manifest).map_err(|e| CliError::Io(e.to_string()))?;
            std::fs::write(&mpath, text + "\n").map_err(|e| io_error(&mpath, e))?;
            log::info!("wrote {} rows to {}", data.nrows(), path.display());
        }
        None => {
            let stdout = std::io::stdout();
            output::write(&data, format, BufWriter::new(stdout.lock())).map_err(|e| CliError::Io(e.to_string()))?;
        }
    }
    Ok(())
}

fn write_data(data: &Dataset, format: Format, path: &Path) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| io_error(path, e))?;
    let mut w = BufWriter::new(file);
    output::write(data, format, &mut w).map_err(|e| io_error(path, e))?;
    w.flush().map_err(|e| io_error(path, e))
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    if let Some(mpath) = &args.from_manifest {
        if !args.params.present().is_empty() {
            return Err(CliError::Usage("shape flags cannot be combined with --from-manifest".into()));
        }
        let text = std::fs::read_to_string(mpath).map_err(|e| io_error(mpath, e))?;
        let manifest: RunManifest = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", mpath.display())))?;
        let output = OutputArgs {
            seed: Some(manifest.seed),
            out: args.output.out.or(Some(manifest.output_path)),
            format: args.output.format,
        };
        return emit(manifest.spec, manifest.seed, &output, manifest.format);
    }
    let name = args.shape.expect("clap requires a shape without --from-manifest");
    let shape: ShapeKind = name.parse().map_err(usage_error)?;
    if let Some(bad) = args.params.present().into_iter().find(|p| !shape.accepts(*p)) {
        return Err(usage_error(hdshapes::Error::RejectedParameter {
            param: bad.as_str().into(),
            target: shape.name().into(),
        }));
    }
    let params = args
        .params
        .to_params()
        .map_err(|(name, e)| CliError::Usage(format!("{}: {e}", flag(name.as_str()))))?;
    let seed = resolve_seed(args.output.seed);
    emit(RunSpec::Generate { shape, params }, seed, &args.output, Format::Csv)
}

fn cmd_multicluster(args: args::MulticlusterArgs) -> Result<(), CliError> {
    let path = &args.config;
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let scene: MultiClusterSpec =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    scene
        .validate()
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let seed = resolve_seed(args.output.seed);
    emit(RunSpec::Multicluster { scene }, seed, &args.output, Format::Csv)
}

fn cmd_hole(args: args::HoleArgs) -> Result<(), CliError> {
    if args.base == HoleBase::Scurve && args.p.is_some() {
        return Err(CliError::Usage("--p is not a valid flag for the scurve hole".into()));
    }
    let seed = resolve_seed(args.output.seed);
    let spec = RunSpec::Hole {
        base: args.base,
        n: args.n,
        p: args.p,
        r: args.r,
    };
    emit(spec, seed, &args.output, Format::Csv)
}

fn cmd_preset(args: args::PresetArgs) -> Result<(), CliError> {
    if !PRESETS.contains(&args.name.as_str()) {
        return Err(usage_error(hdshapes::Error::UnknownPreset(args.name)));
    }
    let seed = resolve_seed(args.output.seed);
    let spec = RunSpec::Preset {
        name: args.name,
        options: PresetOptions {
            n: args.n,
            p: args.p,
            k: args.k,
        },
    };
    emit(spec, seed, &args.output, Format::Csv)
}

fn cmd_list(args: args::ListArgs) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    let lines: Vec<String> = if args.presets {
        PRESETS.iter().map(|p| p.to_string()).collect()
    } else {
        ShapeKind::ALL.iter().map(|k| k.signature()).collect()
    };
    for line in lines {
        writeln!(out, "{line}").map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => cmd_generate(*a),
        Command::Multicluster(a) => cmd_multicluster(a),
        Command::Hole(a) => cmd_hole(a),
        Command::Preset(a) => cmd_preset(a),
        Command::List(a) => cmd_list(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
