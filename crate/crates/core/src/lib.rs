pub mod characters;
pub mod error;
pub mod hfuncs;
pub mod latticepaths;
pub mod partition;
pub mod poly;
pub mod series;
pub mod tableaux;
pub mod verify;

pub use characters::{CharSpec, Group, Method};
pub use error::{Error, Result};
pub use hfuncs::{HKind, VarSpec};
pub use partition::Partition;
pub use poly::{Monomial, Poly, VarId};
pub use series::TruncSeries;
pub use tableaux::{Entry, TabStats, Tableau, WeightedTableau};
