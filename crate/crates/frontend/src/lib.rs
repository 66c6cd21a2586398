//! Construction scripts, SVG figures, randomized checking and the command
//! line front end over `parbelos_core`.

pub mod cli;
pub mod dsl;
pub mod eval;
pub mod fuzz;
pub mod scene;
pub mod svg;
pub mod value;

pub use dsl::{parse_script, ParseError, Program};
pub use eval::{evaluate, EvalError, EvalReport};
pub use scene::{Element, ParabolaArc, Scene, SceneError};
pub use svg::{render_svg, RenderOptions};
