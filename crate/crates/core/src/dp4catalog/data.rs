//! Root and line classes of each degree-4 type, one record per type.
//!
//! Roots are the irreducible (-2)-curves, lines the (-1)-curves. Edges list
//! the pairs meeting once; every other pair is disjoint. For `(5,∅,16)` the
//! edges are left empty and derived from the pairing.

pub(super) struct RawType {
    pub label: &'static str,
    pub roots: &'static str,
    pub lines: &'static str,
    pub edges: &'static str,
    pub alpha_hat: (i64, i64),
}

pub(super) const TYPES: [RawType; 30] = [
    RawType {
        label: "(1,D5,1)",
        roots: "E_12 E_23 E_34 E_45 L_123",
        lines: "E_5",
        edges: "E_12-E_23 E_23-E_34 E_34-E_45 E_45-E_5 E_34-L_123",
        alpha_hat: (5, 3),
    },
    RawType {
        label: "(1,A4,3)",
        roots: "E_12 E_23 E_34 E_45",
        lines: "E_5 Q_12345 L_12",
        edges: "E_12-E_23 E_23-E_34 E_34-E_45 E_45-E_5 E_5-Q_12345 E_23-L_12",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(2,2A1A3,2)",
        roots: "E_45 L_145 E_12 E_23 L_123",
        lines: "E_5 E_3",
        edges: "E_45-E_5 E_5-L_145 L_145-E_12 E_12-E_23 E_23-E_3 E_3-L_123",
        alpha_hat: (5, 3),
    },
    RawType {
        label: "(2,D4,2)",
        roots: "L_123 E_34 E_45 E_23",
        lines: "E_1 E_5",
        edges: "E_1-L_123 L_123-E_34 E_34-E_45 E_45-E_5 E_34-E_23",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(2,A4,3)(a)",
        roots: "E_12 E_23 L_124 E_45",
        lines: "E_5 L_45 E_3",
        edges: "E_12-E_23 E_23-L_124 L_124-E_45 E_45-E_5 E_5-L_45 E_23-E_3",
        alpha_hat: (7, 4),
    },
    RawType {
        label: "(2,A4,3)(b)",
        roots: "L_134 E_45 E_34 E_13",
        lines: "L_12 E_2 E_5",
        edges: "L_134-E_45 E_45-E_34 E_34-E_13 E_13-L_12 L_12-E_2 E_45-E_5",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(2,A1A3,3)",
        roots: "E_23 E_12 L_145 E_45",
        lines: "E_3 L_12 E_5",
        edges: "L_12-E_23 E_23-E_12 E_12-L_145 L_145-E_5 E_5-E_45 E_23-E_3",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(2,2A1A2,4)",
        roots: "E_12 E_23 L_123 E_45",
        lines: "E_3 L_45 E_5 L_14",
        edges: "E_12-E_23 E_23-E_3 E_3-L_123 L_123-L_45 L_45-E_5 E_5-E_45 E_45-L_14 E_12-L_14",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(2,A3,5)",
        roots: "E_12 E_23 E_34",
        lines: "E_4 Q_12345 E_5 L_15 L_12",
        edges: "E_12-E_23 E_23-E_34 E_34-E_4 E_4-Q_12345 Q_12345-E_5 E_5-L_15 L_15-E_12 E_23-L_12",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(2,A1A2,6)",
        roots: "E_23 E_12 E_45",
        lines: "L_12 L_45 E_5 Q_12345 E_3 L_14",
        edges: "L_12-L_45 L_45-E_5 E_5-Q_12345 Q_12345-E_3 E_3-E_23 E_23-E_12 E_12-L_14 L_14-E_45 E_23-L_12 E_45-E_5",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A1A3,3)",
        roots: "L_123 E_14 E_45 L_145",
        lines: "E_2 E_3 E_5",
        edges: "E_3-L_123 L_123-E_14 E_14-E_45 E_45-E_5 E_5-L_145 L_123-E_2",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,2A1A2,4)",
        roots: "E_45 L_124 E_12 L_345",
        lines: "E_2 L_13 E_3 E_5",
        edges: "E_45-L_124 L_124-E_2 E_2-E_12 E_12-L_13 L_13-E_3 E_3-L_345 L_345-E_5 E_45-E_5",
        alpha_hat: (9, 5),
    },
    RawType {
        label: "(3,4A1,4)",
        roots: "E_12 E_45 L_345 L_123",
        lines: "E_2 L_14 E_5 E_3",
        edges: "E_2-E_12 E_12-L_14 L_14-E_45 E_45-E_5 E_5-L_345 L_345-E_3 E_3-L_123 E_2-L_123",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A3,4)",
        roots: "L_145 E_12 E_23",
        lines: "E_4 E_5 E_3 L_12",
        edges: "E_5-L_145 L_145-E_12 E_12-E_23 E_23-E_3 L_145-E_4 E_23-L_12",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A3,5)(a)",
        roots: "E_14 L_123 E_25",
        lines: "E_5 L_25 L_14 E_4 E_3",
        edges: "E_14-L_123 L_123-E_25 E_25-E_5 E_5-L_25 L_25-L_14 L_14-E_4 E_4-E_14 L_123-E_3",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A3,5)(b)",
        roots: "E_23 E_34 L_123",
        lines: "E_1 L_15 E_5 L_25 E_4",
        edges: "E_23-E_34 E_34-L_123 L_123-E_1 E_1-L_15 L_15-E_5 E_5-L_25 L_25-E_23 E_34-E_4",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A1A2,6)(a)",
        roots: "E_34 L_123 E_12",
        lines: "L_35 E_5 L_15 L_34 E_4 E_2",
        edges: "L_35-E_5 E_5-L_15 L_15-L_34 L_34-E_4 E_4-E_34 E_34-L_123 L_123-E_2 E_2-E_12 E_34-L_35 E_12-L_15",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A1A2,6)(b)",
        roots: "E_12 E_23 L_123",
        lines: "L_14 E_4 L_45 E_5 L_15 E_3",
        edges: "L_14-E_4 E_4-L_45 L_45-E_5 E_5-L_15 L_15-E_12 E_12-E_23 E_23-E_3 E_3-L_123 E_12-L_14 L_123-L_45",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,3A1,6)",
        roots: "L_345 E_12 E_34",
        lines: "E_2 L_12 E_5 L_15 L_13 E_4",
        edges: "E_2-L_12 L_12-L_345 L_345-E_5 E_5-L_15 L_15-E_12 E_12-L_13 L_13-E_34 E_34-E_4 E_12-E_2 E_4-L_345",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,A2,8)",
        roots: "E_23 E_12",
        lines: "L_15 E_5 L_45 L_12 E_3 Q_12345 E_4 L_14",
        edges: "L_15-E_5 E_5-L_45 L_45-L_12 L_12-E_23 E_23-E_3 E_3-Q_12345 Q_12345-E_4 E_4-L_14 L_14-E_12 E_12-L_15 E_12-E_23 E_5-Q_12345 L_45-E_4",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(3,2A1,9)",
        roots: "E_34 E_12",
        lines: "L_15 L_34 E_4 L_35 L_12 E_2 L_13 E_5 Q_12345",
        edges: "L_15-L_34 L_34-E_4 E_4-E_34 E_34-L_35 L_35-L_12 L_12-E_2 E_2-E_12 E_5-Q_12345 E_12-L_15 L_34-L_12 E_5-L_15 E_5-L_35 Q_12345-E_4 Q_12345-E_2 E_12-L_13 L_13-E_34",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(4,A1A2,6)",
        roots: "L_123 E_14 L_145",
        lines: "E_2 L_25 E_5 L_35 E_3 E_4",
        edges: "E_2-L_25 L_25-E_5 E_5-L_35 L_35-E_3 E_3-L_123 L_123-E_14 E_14-E_4 E_4-L_145 L_123-E_2 L_145-E_5",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(4,3A1,6)",
        roots: "E_23 L_145 L_123",
        lines: "E_4 L_24 L_25 E_5 E_1 E_3",
        edges: "E_4-L_24 L_24-E_23 E_23-L_25 L_25-E_5 E_5-L_145 L_145-E_1 E_1-L_123 L_123-E_3 L_145-E_4 E_3-E_23",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(4,A2,8)",
        roots: "L_145 E_12",
        lines: "L_13 E_3 L_34 E_4 E_5 L_35 L_12 E_2",
        edges: "L_13-E_3 E_3-L_34 L_34-E_4 E_4-L_145 L_145-E_5 E_5-L_35 L_35-L_12 L_12-E_2 E_2-E_12 E_12-L_13 E_12-L_145 E_3-L_35 L_34-L_12",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(4,2A1,8)",
        roots: "E_12 L_345",
        lines: "L_13 E_3 E_2 L_12 L_14 E_4 L_15 E_5",
        edges: "E_12-L_13 L_13-E_3 E_3-L_345 E_2-L_12 L_14-E_4 L_15-E_5 E_12-E_2 E_12-L_14 E_12-L_15 L_345-L_12 L_345-E_4 L_345-E_5",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(4,2A1,9)",
        roots: "L_123 E_12",
        lines: "L_14 L_35 E_3 L_45 E_5 L_15 E_2 E_4 L_34",
        edges: "L_14-L_35 L_35-E_3 E_3-L_123 L_123-L_45 L_45-E_5 E_5-L_15 L_15-E_12 E_4-L_34 E_12-L_14 L_35-E_5 E_4-L_14 E_4-L_45 L_34-E_3 L_34-L_15 E_12-E_2 E_2-L_123",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(4,A1,12)",
        roots: "E_12",
        lines: "E_2 L_12 L_34 E_3 L_13 L_15 E_5 L_35 L_14 E_4 L_45 Q_12345",
        edges: "E_12-E_2 E_2-L_12 L_12-L_34 L_34-E_3 E_3-L_13 L_13-E_12 E_12-L_15 L_15-E_5 E_5-L_35 E_4-L_45 E_12-L_14 L_14-E_4 E_4-Q_12345 L_34-E_4 L_34-L_15 L_35-E_3 L_35-L_12 L_35-L_14 Q_12345-E_3 Q_12345-E_5 Q_12345-E_2 L_45-L_12 L_45-E_5 L_45-L_13",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(5,2A1,9)",
        roots: "L_145 L_123",
        lines: "E_2 L_24 E_4 E_5 L_35 E_3 E_1 L_25 L_34",
        edges: "E_2-L_24 L_24-E_4 E_4-L_145 L_145-E_5 E_5-L_35 L_35-E_3 E_3-L_123 L_25-L_34 L_123-E_2 L_24-L_35 L_25-E_2 L_25-E_5 L_34-E_4 L_34-E_3 L_123-E_1 E_1-L_145",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(5,A1,12)",
        roots: "L_145",
        lines: "E_4 L_34 L_25 L_13 E_1 E_5 L_35 E_3 L_23 E_2 L_12 L_24",
        edges: "L_145-E_4 E_4-L_34 L_34-L_25 L_25-L_13 L_13-E_1 E_1-L_145 L_145-E_5 E_5-L_35 L_35-E_3 E_3-L_34 L_23-L_145 E_2-L_12 L_12-L_35 L_24-L_13 L_23-E_2 E_2-L_24 L_25-E_2 L_25-E_5 E_3-L_13 E_3-L_23 L_24-L_35 L_24-E_4 L_12-L_34 L_12-E_1",
        alpha_hat: (2, 1),
    },
    RawType {
        label: "(5,∅,16)",
        roots: "",
        lines: "E_1 E_2 E_3 E_4 E_5 L_12 L_13 L_14 L_15 L_23 L_24 L_25 L_34 L_35 L_45 Q_12345",
        edges: "",
        alpha_hat: (2, 1),
    },
];

/// `(general, special, flagged)`: the special fiber of a family of the
/// general type has the special type. Flagged edges are reported, never
/// asserted.
pub(super) const DEGENERATIONS: [(&str, &str, bool); 18] = [
    ("(2,A3,5)", "(1,A4,3)", false),
    ("(2,A1A2,6)", "(2,A1A3,3)", false),
    ("(3,A3,4)", "(2,A1A3,3)", false),
    ("(3,A3,5)(b)", "(2,D4,2)", false),
    ("(3,A1A2,6)(a)", "(2,A1A3,3)", false),
    ("(3,A1A2,6)(b)", "(2,2A1A2,4)", false),
    ("(3,3A1,6)", "(2,2A1A2,4)", false),
    ("(3,A2,8)", "(2,A1A2,6)", false),
    ("(3,2A1,9)", "(2,A1A2,6)", false),
    ("(4,A1A2,6)", "(3,A1A3,3)", false),
    ("(4,3A1,6)", "(3,4A1,4)", false),
    ("(4,A2,8)", "(3,A1A2,6)(a)", false),
    ("(4,A2,8)", "(3,A1A2,6)(b)", false),
    ("(4,2A1,8)", "(3,3A1,6)", false),
    ("(4,2A1,9)", "(3,3A1,6)", false),
    ("(4,A1,12)", "(3,2A1,9)", false),
    ("(5,2A1,9)", "(4,3A1,6)", false),
    ("(5,A1,12)", "(4,2A1,9)", true),
];
