pub mod config;
pub mod dexter;
pub mod dyck;
pub mod error;
pub mod export;
pub mod hochschild;
pub mod intervals;
pub mod invariants;
pub mod meet;
pub mod monoid;
pub mod poly;
pub mod poset;
pub mod related;
pub mod suites;
pub mod verify;
pub mod word;

pub use dyck::{kappa, kappa_inv, BinaryTree, DyckPath, PseudoDyckPath, Span, Strip};
pub use error::{Error, Result};
pub use intervals::Interval;
pub use poset::{EdgeColor, Poset};
pub use verify::{Check, Report, Status};
pub use word::Word;
