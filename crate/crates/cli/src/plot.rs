//! SVG rendering of a sampled tableau: cells shaded by entry, with level
//! curves `{entry ≤ t·N}` drawn along cell edges.

use std::collections::HashMap;
use std::fmt::Write;

use staircase_core::io::CsvCell;

pub const DEFAULT_LEVELS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

const WIDTH: f64 = 800.0;

pub fn parse_levels(s: &str) -> anyhow::Result<Vec<f64>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let t: f64 = part.parse().map_err(|_| anyhow::anyhow!("bad level {part:?}"))?;
        if !(0.0..=1.0).contains(&t) {
            anyhow::bail!("level {t} is outside [0, 1]");
        }
        out.push(t);
    }
    if out.is_empty() {
        anyhow::bail!("no levels given");
    }
    Ok(out)
}

/// Edge segments `(x1, y1, x2, y2)` in cell units separating entries at most
/// `threshold` from larger ones.
pub fn level_segments(cells: &[CsvCell], threshold: f64) -> Vec<(usize, usize, usize, usize)> {
    let at: HashMap<(usize, usize), u32> = cells.iter().map(|c| ((c.row, c.col), c.entry)).collect();
    let below = |e: u32| e as f64 <= threshold;
    let mut segs = Vec::new();
    for c in cells {
        if let Some(&e) = at.get(&(c.row, c.col + 1)) {
            if below(c.entry) != below(e) {
                segs.push((c.col, c.row - 1, c.col, c.row));
            }
        }
        if let Some(&e) = at.get(&(c.row + 1, c.col)) {
            if below(c.entry) != below(e) {
                segs.push((c.col - 1, c.row, c.col, c.row));
            }
        }
    }
    segs
}

pub fn render_svg(cells: &[CsvCell], levels: &[f64]) -> String {
    let max_row = cells.iter().map(|c| c.row).max().unwrap_or(1);
    let max_col = cells.iter().map(|c| c.col).max().unwrap_or(1);
    let n = cells.iter().map(|c| c.entry).max().unwrap_or(1).max(1) as f64;
    let s = WIDTH / max_col as f64;
    let (w, h) = (s * max_col as f64, s * max_row as f64);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.3} {h:.3}">"#
    )
    .unwrap();
    writeln!(out, r#"<g shape-rendering="crispEdges" stroke="none">"#).unwrap();
    for c in cells {
        let g = 255.0 - 200.0 * (c.entry as f64 / n);
        writeln!(
            out,
            r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="rgb({g:.0},{g:.0},255)"/>"#,
            (c.col - 1) as f64 * s,
            (c.row - 1) as f64 * s,
            s,
            s
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    let stroke = (s * 0.4).clamp(0.5, 2.0);
    for &t in levels {
        let mut d = String::new();
        for (x1, y1, x2, y2) in level_segments(cells, t * n) {
            write!(d, "M{:.3} {:.3}L{:.3} {:.3}", x1 as f64 * s, y1 as f64 * s, x2 as f64 * s, y2 as f64 * s).unwrap();
        }
        if !d.is_empty() {
            writeln!(out, r#"<path data-level="{t}" d="{d}" stroke="black" stroke-width="{stroke:.2}" fill="none"/>"#).unwrap();
        }
    }
    writeln!(out, "</svg>").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(row: usize, col: usize, entry: u32) -> CsvCell {
        CsvCell { row, col, entry, marked: false }
    }

    #[test]
    fn levels_parse() {
        assert_eq!(parse_levels("0.25, 0.5").unwrap(), vec![0.25, 0.5]);
        assert!(parse_levels("1.5").is_err());
        assert!(parse_levels("").is_err());
        assert!(parse_levels("a").is_err());
    }

    #[test]
    fn segments_split_small_from_large() {
        // 1 2
        // 3
        let cells = [cell(1, 1, 1), cell(1, 2, 2), cell(2, 1, 3)];
        let segs = level_segments(&cells, 1.0);
        assert_eq!(segs.len(), 2);
        assert!(segs.contains(&(1, 0, 1, 1)));
        assert!(segs.contains(&(0, 1, 1, 1)));
        assert!(level_segments(&cells, 3.0).is_empty());
    }

    #[test]
    fn svg_is_well_formed() {
        let cells = [cell(1, 1, 1), cell(1, 2, 2), cell(2, 1, 3)];
        let svg = render_svg(&cells, &[0.5]);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<rect").count(), 3);
        assert_eq!(svg.matches("<path").count(), 1);
    }
}
