//! Text, PBM and SVG renderings of a pattern on its window.
//!
//! Column `i` is the power of `x`, increasing to the right. Row `j` is the
//! power of `y`; with [`Origin::TopLeft`] row 0 is the first line.

use std::fmt::Write as _;

use crate::poly::{Monomial, PatternPoly, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Origin {
    #[default]
    TopLeft,
    BottomLeft,
}

/// Per-axis geometric shrinking of cells: column `k` is `rx^k` times the base
/// width, row `l` is `ry^l` times the base height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Perspective {
    pub rx: f64,
    pub ry: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub glyph_on: char,
    pub glyph_off: char,
    pub origin: Origin,
    /// SVG cell size (user units) of column 0 and row 0.
    pub base_cell: f64,
    pub perspective: Option<Perspective>,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            glyph_on: '#',
            glyph_off: '.',
            origin: Origin::TopLeft,
            base_cell: 10.0,
            perspective: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RenderError {
    #[error("on and off glyphs must differ")]
    SameGlyphs,
    #[error("perspective ratios must lie in (0, 1], got ({0}, {1})")]
    BadRatio(f64, f64),
    #[error("cell size must be positive, got {0}")]
    BadCell(f64),
}

impl RenderConfig {
    pub fn validate(&self) -> Result<(), RenderError> {
        if self.glyph_on == self.glyph_off {
            return Err(RenderError::SameGlyphs);
        }
        if let Some(p) = self.perspective {
            let ok = |r: f64| r > 0.0 && r <= 1.0;
            if !ok(p.rx) || !ok(p.ry) {
                return Err(RenderError::BadRatio(p.rx, p.ry));
            }
        }
        if !(self.base_cell > 0.0 && self.base_cell.is_finite()) {
            return Err(RenderError::BadCell(self.base_cell));
        }
        Ok(())
    }
}

/// Grid rows in display order, top line first.
fn display_rows(w: &Window, origin: Origin) -> Vec<u32> {
    match origin {
        Origin::TopLeft => (0..=w.n).collect(),
        Origin::BottomLeft => (0..=w.n).rev().collect(),
    }
}

fn lit(p: &PatternPoly, i: u32, j: u32) -> bool {
    p.contains(Monomial::new(i as i32, j as i32))
}

/// `n + 1` lines of `m + 1` glyphs, each line ending in `\n`.
pub fn render_ascii(p: &PatternPoly, w: &Window, cfg: &RenderConfig) -> String {
    let mut out = String::with_capacity(w.cells() + w.height());
    for j in display_rows(w, cfg.origin) {
        for i in 0..=w.m {
            out.push(if lit(p, i, j) { cfg.glyph_on } else { cfg.glyph_off });
        }
        out.push('\n');
    }
    out
}

/// Plain PBM (`P1`), top row first.
pub fn render_pbm(p: &PatternPoly, w: &Window) -> Vec<u8> {
    render_pbm_oriented(p, w, Origin::TopLeft)
}

pub fn render_pbm_oriented(p: &PatternPoly, w: &Window, origin: Origin) -> Vec<u8> {
    let mut out = format!("P1\n{} {}\n", w.width(), w.height());
    for j in display_rows(w, origin) {
        let row: Vec<&str> = (0..=w.m).map(|i| if lit(p, i, j) { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

/// Cumulative offsets of `count` cells whose sizes shrink by `ratio`.
fn layout(count: usize, base: f64, ratio: f64) -> (Vec<f64>, Vec<f64>) {
    let mut offsets = Vec::with_capacity(count);
    let mut sizes = Vec::with_capacity(count);
    let (mut at, mut size) = (0.0, base);
    for _ in 0..count {
        offsets.push(at);
        sizes.push(size);
        at += size;
        size *= ratio;
    }
    (offsets, sizes)
}

/// An SVG document with one `rect` per lit cell.
pub fn render_svg(p: &PatternPoly, w: &Window, cfg: &RenderConfig) -> String {
    let (rx, ry) = cfg.perspective.map_or((1.0, 1.0), |q| (q.rx, q.ry));
    let (xs, widths) = layout(w.width(), cfg.base_cell, rx);
    let (ys, heights) = layout(w.height(), cfg.base_cell, ry);
    let total_w: f64 = widths.iter().sum();
    let total_h: f64 = heights.iter().sum();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt_num(total_w),
        fmt_num(total_h),
        fmt_num(total_w),
        fmt_num(total_h)
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        fmt_num(total_w),
        fmt_num(total_h)
    );
    for m in p.iter().filter(|&m| w.contains(m)) {
        let (i, j) = (m.i as usize, m.j as usize);
        let y = match cfg.origin {
            Origin::TopLeft => ys[j],
            Origin::BottomLeft => total_h - ys[j] - heights[j],
        };
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="black"/>"#,
            fmt_num(xs[i]),
            fmt_num(y),
            fmt_num(widths[i]),
            fmt_num(heights[j])
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Fixed six decimals with trailing zeros removed.
fn fmt_num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}
