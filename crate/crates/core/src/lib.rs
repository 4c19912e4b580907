//! Community detection on undirected weighted graphs.
//!
//! Four families of algorithms share one [`Graph`] type and one
//! [`Partition`] output type:
//!
//! * [`agglomerative`]: bottom-up hierarchical clustering over the
//!   network-centric Euclidean distance, with single, complete or average
//!   linkage and optional self-neighboring.
//! * [`girvan_newman`]: divisive clustering by repeated removal of the edge
//!   with the highest betweenness, plus the static variant that ranks edges
//!   once up front.
//! * [`louvain`]: modularity optimisation by local moves and aggregation, in
//!   five variants.
//! * [`fastgreedy`]: greedy modularity agglomeration over a sparse gain store
//!   and a single lazily-pruned max-heap.

pub mod agglomerative;
pub mod datasets;
pub mod dendrogram;
mod error;
pub mod fastgreedy;
pub mod girvan_newman;
mod graph;
pub mod io;
pub mod louvain;
pub mod neighbor;
mod partition;
pub mod unionfind;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, NodeId};
pub use partition::{connected_components, modularity, Partition, PartitionRecord};
