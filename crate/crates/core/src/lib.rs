pub mod corpus;
pub mod graph;
pub mod homfly;
pub mod homology;
pub mod khovanov;
pub mod link;
pub mod poly;
pub mod verify;
