//! Literal generator matrices.

pub type Raw = [[i64; 5]; 5];

const E1: [i64; 5] = [1, 0, 0, 0, 0];
const E2: [i64; 5] = [0, 1, 0, 0, 0];
const E3: [i64; 5] = [0, 0, 1, 0, 0];
const E4: [i64; 5] = [0, 0, 0, 1, 0];

pub const PLATONIC: [(&str, Raw); 4] = [
    ("R1", [E2, E1, E3, E4, [0, 0, 0, 0, 1]]),
    ("R2", [E1, E3, E2, E4, [0, 0, 0, 0, 1]]),
    ("R3", [E1, E2, E4, E3, [0, 0, 0, 0, 1]]),
    ("R4", [E1, E2, E3, [0, 0, 0, -1, 2], [0, 0, 0, 0, 1]]),
];

pub const APOLLONIAN: [(&str, Raw); 16] = [
    ("S1234", [E1, E2, E3, E4, [1, 1, 1, 1, -1]]),
    ("S5234", [[-1, 2, 2, 2, 0], E2, E3, E4, [-1, 1, 1, 1, 1]]),
    ("S1634", [E1, [2, -1, 2, 2, 0], E3, E4, [1, -1, 1, 1, 1]]),
    ("S1274", [E1, E2, [2, 2, -1, 2, 0], E4, [1, 1, -1, 1, 1]]),
    ("S1238", [E1, E2, E3, [2, 2, 2, -1, 0], [1, 1, 1, -1, 1]]),
    (
        "S5634",
        [
            [-1, -2, 2, 2, 4],
            [-2, -1, 2, 2, 4],
            E3,
            E4,
            [-1, -1, 1, 1, 3],
        ],
    ),
    (
        "S5274",
        [
            [-1, 2, -2, 2, 4],
            E2,
            [-2, 2, -1, 2, 4],
            E4,
            [-1, 1, -1, 1, 3],
        ],
    ),
    (
        "S5238",
        [
            [-1, 2, 2, -2, 4],
            E2,
            E3,
            [-2, 2, 2, -1, 4],
            [-1, 1, 1, -1, 3],
        ],
    ),
    (
        "S1674",
        [
            E1,
            [2, -1, -2, 2, 4],
            [2, -2, -1, 2, 4],
            E4,
            [1, -1, -1, 1, 3],
        ],
    ),
    (
        "S1638",
        [
            E1,
            [2, -1, 2, -2, 4],
            E3,
            [2, -2, 2, -1, 4],
            [1, -1, 1, -1, 3],
        ],
    ),
    (
        "S1278",
        [
            E1,
            E2,
            [2, 2, -1, -2, 4],
            [2, 2, -2, -1, 4],
            [1, 1, -1, -1, 3],
        ],
    ),
    (
        "S5674",
        [
            [-1, -2, -2, 2, 8],
            [-2, -1, -2, 2, 8],
            [-2, -2, -1, 2, 8],
            E4,
            [-1, -1, -1, 1, 5],
        ],
    ),
    (
        "S5638",
        [
            [-1, -2, 2, -2, 8],
            [-2, -1, 2, -2, 8],
            E3,
            [-2, -2, 2, -1, 8],
            [-1, -1, 1, -1, 5],
        ],
    ),
    (
        "S5278",
        [
            [-1, 2, -2, -2, 8],
            E2,
            [-2, 2, -1, -2, 8],
            [-2, 2, -2, -1, 8],
            [-1, 1, -1, -1, 5],
        ],
    ),
    (
        "S1678",
        [
            E1,
            [2, -1, -2, -2, 8],
            [2, -2, -1, -2, 8],
            [2, -2, -2, -1, 8],
            [1, -1, -1, -1, 5],
        ],
    ),
    (
        "S5678",
        [
            [-1, -2, -2, -2, 12],
            [-2, -1, -2, -2, 12],
            [-2, -2, -1, -2, 12],
            [-2, -2, -2, -1, 12],
            [-1, -1, -1, -1, 7],
        ],
    ),
];

pub const STABILIZER1_ORIENTED: [(&str, Raw); 7] = [
    ("S238", [E1, E2, E3, [2, 2, 2, -1, 0], [2, 2, 2, 0, -1]]),
    ("S274", [E1, E2, [2, 2, -1, 2, 0], E4, [2, 2, 0, 2, -1]]),
    ("S634", [E1, [2, -1, 2, 2, 0], E3, E4, [2, 0, 2, 2, -1]]),
    (
        "S278",
        [
            E1,
            E2,
            [2, 2, -1, -2, 4],
            [2, 2, -2, -1, 4],
            [4, 4, -2, -2, 5],
        ],
    ),
    (
        "S638",
        [
            E1,
            [2, -1, 2, -2, 4],
            E3,
            [2, -2, 2, -1, 4],
            [4, -2, 4, -2, 5],
        ],
    ),
    (
        "S674",
        [
            E1,
            [2, -1, -2, 2, 4],
            [2, -2, -1, 2, 4],
            E4,
            [4, -2, -2, 4, 5],
        ],
    ),
    (
        "S678",
        [
            E1,
            [2, -1, -2, -2, 8],
            [2, -2, -1, -2, 8],
            [2, -2, -2, -1, 8],
            [6, -4, -4, -4, 19],
        ],
    ),
];

pub const DUAL: [(&str, Raw); 8] = [
    (
        "S1",
        [
            [-1, 0, 0, 0, 0],
            [2, 1, 0, 0, 0],
            [2, 0, 1, 0, 0],
            [2, 0, 0, 1, 0],
            [2, 0, 0, 0, 1],
        ],
    ),
    (
        "S2",
        [
            [1, 2, 0, 0, 0],
            [0, -1, 0, 0, 0],
            [0, 2, 1, 0, 0],
            [0, 2, 0, 1, 0],
            [0, 2, 0, 0, 1],
        ],
    ),
    (
        "S3",
        [
            [1, 0, 2, 0, 0],
            [0, 1, 2, 0, 0],
            [0, 0, -1, 0, 0],
            [0, 0, 2, 1, 0],
            [0, 0, 2, 0, 1],
        ],
    ),
    (
        "S4",
        [
            [1, 0, 0, 2, 0],
            [0, 1, 0, 2, 0],
            [0, 0, 1, 2, 0],
            [0, 0, 0, -1, 0],
            [0, 0, 0, 2, 1],
        ],
    ),
    (
        "S5",
        [
            [-5, 0, 0, 0, 12],
            [-2, 1, 0, 0, 4],
            [-2, 0, 1, 0, 4],
            [-2, 0, 0, 1, 4],
            [-2, 0, 0, 0, 5],
        ],
    ),
    (
        "S6",
        [
            [1, -2, 0, 0, 4],
            [0, -5, 0, 0, 12],
            [0, -2, 1, 0, 4],
            [0, -2, 0, 1, 4],
            [0, -2, 0, 0, 5],
        ],
    ),
    (
        "S7",
        [
            [1, 0, -2, 0, 4],
            [0, 1, -2, 0, 4],
            [0, 0, -5, 0, 12],
            [0, 0, -2, 1, 4],
            [0, 0, -2, 0, 5],
        ],
    ),
    (
        "S8",
        [
            [1, 0, 0, -2, 4],
            [0, 1, 0, -2, 4],
            [0, 0, 1, -2, 4],
            [0, 0, 0, -5, 12],
            [0, 0, 0, -2, 5],
        ],
    ),
];
