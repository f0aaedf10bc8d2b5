//! Edge lists of the worked example graphs used throughout the tests and
//! the CLI documentation.

use crate::graph::{parse_edge_list, Graph};

/// 18-vertex Type I unicyclic graph with cycle v-e-g-f.
pub const TYPE1_EXAMPLE: &str = "\
c a
c b
c v
v d
v e
v f
g e
g f
h f
h i
q r
q g
j v
ℓ d
d o
o m
m n
n p
";

/// 18-vertex unicyclic graph with a 5-cycle and a star hanging off v1.
pub const STAR_EXAMPLE: &str = "\
v1 v2
v1 v3
v3 v4
v4 v5
v5 v2
v1 v6
v6 v9
v6 v7
v6 v8
v1 v10
v3 v11
v12 v11
v12 v13
v17 v15
v14 v15
v2 v14
v15 v16
v17 v18
";

/// 25-vertex Type II unicyclic graph with the 5-cycle a-b-c-d-e.
pub const PENTAGON_EXAMPLE: &str = "\
a b
b c
c d
d e
e a
f b
f g
f h
i a
i j
i ℓ
i m
n o
n c
n p
p q
d r
r s
r t
r v
s u
s w
e x
x y
x z
";

/// 15-vertex Type II unicyclic graph with the 4-cycle u-v-w-z.
pub const SQUARE_EXAMPLE: &str = "\
u v
v w
w z
z u
a b
a z
f c
f d
f e
f w
f g
g h
i u
i j
i ℓ
";

/// 10-vertex Type II graph on a 4-cycle whose support is not independent.
pub const SUPPORT_NOT_INDEPENDENT: &str = "\
u v
v w
w z
z u
a b
a z
f c
f d
f e
f w
";

pub fn type1_example() -> Graph {
    parse_edge_list(TYPE1_EXAMPLE).expect("fixture parses")
}

pub fn star_example() -> Graph {
    parse_edge_list(STAR_EXAMPLE).expect("fixture parses")
}

pub fn pentagon_example() -> Graph {
    parse_edge_list(PENTAGON_EXAMPLE).expect("fixture parses")
}

pub fn square_example() -> Graph {
    parse_edge_list(SQUARE_EXAMPLE).expect("fixture parses")
}
