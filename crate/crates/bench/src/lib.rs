//! Inputs shared by the benchmarks.

use springweb::tableaux::enumerate_tableaux;
use springweb::{TwoColumnShape, TwoColumnTableau};

/// Every tableau of the `(k,k)*` rectangle.
pub fn rectangle_tableaux(k: usize) -> Vec<TwoColumnTableau> {
    TwoColumnShape::rectangle(k)
        .map(enumerate_tableaux)
        .unwrap_or_default()
}

/// The smooth eight row tableau whose web is a tree with a 5-hourglass.
pub fn eight_row_tree() -> TwoColumnTableau {
    TwoColumnTableau::rectangular(vec![2, 9, 10, 12, 13, 14, 15, 16]).expect("valid tableau")
}
