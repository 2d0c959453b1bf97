pub mod crossing;
pub mod limits;
pub mod multigraph;
pub mod reduce;
pub mod tile;
