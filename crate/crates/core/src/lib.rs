//! Generalized Robinson-Schensted-Knuth correspondence and jeu de taquin on
//! prefixes of infinite Young tableaux.
//!
//! Letters come in row, column and neutral kinds ([`alphabet`]). Feeding an
//! i.i.d. word drawn from a Thoma point through RSK ([`rsk`]) yields a prefix
//! of a Vershik-Kerov random tableau ([`sampler`]). The jeu de taquin
//! transformation ([`jdt`]) on such a prefix acts as the shift on the word,
//! and the asymptotic direction of its path ([`limit_shape`]) recovers the
//! first letter, which gives an estimator of the inverse map ([`inverse_rsk`]).

pub mod alphabet;
pub mod error;
pub mod greene;
pub mod inverse_rsk;
pub mod jdt;
pub mod limit_shape;
pub mod pitman;
pub mod rsk;
pub mod sampler;
pub mod tableaux;

pub use alphabet::{Letter, LetterKind, Orientation, ThomaParams};
pub use error::{Error, Result};
pub use jdt::JdtPath;
pub use limit_shape::{PsiValue, ShapePoint};
pub use rsk::Word;
pub use tableaux::{Cell, SemistandardTableau, StandardTableau, YoungDiagram};
