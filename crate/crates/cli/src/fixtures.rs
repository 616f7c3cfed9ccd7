//! Hand-built graphs used by the suites.

use domforce_core::Graph;

/// A 14-vertex tree with 8 leaves and 4 support vertices (3, 6, 8, 11), so
/// its connected dom-forcing number is 14 - 4 = 10.
pub fn support_tree_14() -> Graph {
    Graph::from_edges(
        14,
        [
            (0, 3),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (5, 8),
            (5, 11),
            (6, 7),
            (8, 9),
            (8, 10),
            (11, 12),
            (11, 13),
        ],
    )
    .expect("fixture edges are valid")
}

/// A 7-vertex double spider: centers 2 and 3, with 2 and 3 leaves. Its
/// connected dom-forcing number is 5.
pub fn double_spider_7() -> Graph {
    Graph::from_edges(7, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)])
        .expect("fixture edges are valid")
}

/// The 5-vertex subtree of [`double_spider_7`] keeping one leaf at the second
/// center; its connected dom-forcing number drops to 3.
pub fn double_spider_subtree_5() -> Graph {
    Graph::from_edges(5, [(0, 2), (1, 2), (2, 3), (3, 4)]).expect("fixture edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use domforce_core::tree_formula;

    #[test]
    fn fixture_formulas() {
        assert_eq!(tree_formula(&support_tree_14()).unwrap(), 10);
        assert_eq!(tree_formula(&double_spider_7()).unwrap(), 5);
        assert_eq!(tree_formula(&double_spider_subtree_5()).unwrap(), 3);
    }
}
