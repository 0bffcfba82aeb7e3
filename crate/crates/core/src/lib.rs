//! Two-dimensional binary patterns as polynomials over GF(2).
//!
//! A pattern on a grid is the set of cells `(i, j)` that are lit; it is
//! identified with the polynomial whose monomials `x^i y^j` are exactly those
//! cells. Sums cancel in pairs, products convolve, and reciprocals `1/q`
//! expanded as power series produce lines, crosses, checkerboards and
//! pseudo-random textures.
//!
//! - [`poly`]: the polynomial type and the display window.
//! - [`ring`]: arithmetic modulo `x^m - 1, y^n - 1`, element orders and inverses.
//! - [`series`]: reciprocal expansion clipped to a window.
//! - [`seq`]: prime-reciprocal and shift-register bit sequences.
//! - [`fold`]: folding sequences into arrays.
//! - [`ordering`]: monomial enumeration orders and the bit-sequence codec.
//! - [`dsl`]: the pattern expression language.
//! - [`render`]: ASCII, PBM and SVG output.
//!
//! ```
//! use gf2pat::{dsl, render, Window};
//!
//! let expr = dsl::parse("1/(1+x) + x^2/(1+y) + 1/(1+x+x*y^2)").unwrap();
//! let cross = dsl::evaluate(&expr, &Window::new(4, 3)).unwrap();
//! let text = render::render_ascii(&cross, &Window::new(4, 3), &Default::default());
//! assert_eq!(text, "..#..\n..#..\n.###.\n..#..\n");
//! ```

pub mod dsl;
pub mod fold;
pub mod ordering;
pub mod poly;
pub mod render;
pub mod ring;
pub mod seq;
pub mod series;

pub use dsl::{DslError, PatternExpr, Term};
pub use fold::{BitGrid, FoldError, FoldScheme};
pub use ordering::{OrderingError, TermOrdering};
pub use poly::{Monomial, PatternPoly, PolyError, Window, WindowMode};
pub use render::{Origin, Perspective, RenderConfig, RenderError};
pub use ring::{RingElement, RingError, RingSpec};
pub use seq::{BitSeq, SeqError};
pub use series::{RationalTerm, SeriesError};
