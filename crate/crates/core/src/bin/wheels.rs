use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use parawheel::orbits::{emit, parse_list, FigureCase, OutputFormat, PlotConfig, PlotRange};
use parawheel::Error;

/// Draw the orbits and spokes of the elliptic, parabolic and hyperbolic wheels.
#[derive(Parser, Debug)]
#[command(name = "wheels", version)]
struct Args {
    /// One of E, P0, P, Pp, H
    #[arg(long)]
    case: String,

    /// Comma-separated modulus levels; omit for the default family
    #[arg(long, allow_hyphen_values = true)]
    levels: Option<String>,

    /// Comma-separated spoke angles
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    spokes: String,

    #[arg(long, default_value_t = 256)]
    samples: usize,

    /// xmin,xmax,ymin,ymax
    #[arg(long, allow_hyphen_values = true, default_value = "-1.5,1.5,-2,2")]
    range: String,

    /// csv or svg
    #[arg(long, default_value = "csv")]
    format: String,

    /// Output path, or - for stdout
    #[arg(long, default_value = "-")]
    out: String,
}

fn config(args: &Args) -> parawheel::Result<PlotConfig> {
    let case: FigureCase = args.case.parse()?;
    let mut cfg = PlotConfig::new(case);
    if let Some(levels) = &args.levels {
        cfg.levels = parse_list(levels)?;
    }
    cfg.spoke_angles = parse_list(&args.spokes)?;
    cfg.samples = args.samples;
    cfg.range = args.range.parse::<PlotRange>()?;
    cfg.format = args.format.parse::<OutputFormat>()?;
    cfg.validate()?;
    Ok(cfg)
}

fn run(args: &Args, cfg: &PlotConfig) -> parawheel::Result<()> {
    let mut sink: Box<dyn Write> = if args.out == "-" {
        Box::new(BufWriter::new(io::stdout().lock()))
    } else {
        Box::new(BufWriter::new(
            File::create(&args.out).map_err(|e| Error::Io(e.to_string()))?,
        ))
    };
    emit(cfg, &mut sink)?;
    sink.flush().map_err(|e| Error::Io(e.to_string()))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("wheels: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&args, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wheels: {e}");
            ExitCode::FAILURE
        }
    }
}
