//! Writes SVG pictures of the five wheels to the current directory.

use std::fs::File;
use std::io::BufWriter;

use parawheel::orbits::{emit, FigureCase, OutputFormat, PlotConfig};
use parawheel::Scalar;

fn main() -> parawheel::Result<()> {
    for case in FigureCase::ALL {
        let mut cfg = PlotConfig::new(case);
        cfg.format = OutputFormat::Svg;
        cfg.spoke_angles = [-2, -1, 1, 2].map(|k| Scalar::ratio(k, 2)).to_vec();
        let name = format!("wheel-{}.svg", case.label());
        let file = File::create(&name).map_err(|e| parawheel::Error::Io(e.to_string()))?;
        emit(&cfg, &mut BufWriter::new(file))?;
        println!(
            "{name}: levels {:?}",
            cfg.levels.iter().map(Scalar::to_f64).collect::<Vec<_>>()
        );
    }
    Ok(())
}
