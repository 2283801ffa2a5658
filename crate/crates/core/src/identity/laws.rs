//! Named identities used throughout the crate.

use super::{parse_identity, Identity};

pub const ASSOCIATIVE: &str = "x * (y * z) = (x * y) * z";
pub const GRASSMANN: &str = "x * (y * z) = z * (y * x)";
pub const LEFT_PERMUTABLE: &str = "x * (y * z) = y * (x * z)";
pub const CYCLIC: &str = "x * (y * z) = (z * x) * y";
pub const TARSKI: &str = "x * (z * y) = (x * y) * z";
/// Left invertive law of LA-semigroups.
pub const ABEL_GRASSMANN: &str = "(x * y) * z = (z * y) * x";
/// Right invertive law of RA-semigroups; same text as [`GRASSMANN`].
pub const RIGHT_INVERTIVE: &str = "x * (y * z) = z * (y * x)";
pub const COMMUTATIVE: &str = "x * y = y * x";

pub const EVANS_1: &str = "x * (x \\ y) = y";
pub const EVANS_2: &str = "(y / x) * x = y";
pub const EVANS_3: &str = "x \\ (x * y) = y";
pub const EVANS_4: &str = "(y * x) / x = y";
pub const BIRKHOFF_3: &str = "(x / y) \\ x = y";
pub const BIRKHOFF_6: &str = "y / (x \\ y) = x";

/// Every named law with a short name, in a fixed order.
pub const ALL: [(&str, &str); 14] = [
    ("associative", ASSOCIATIVE),
    ("grassmann", GRASSMANN),
    ("left-permutable", LEFT_PERMUTABLE),
    ("cyclic", CYCLIC),
    ("tarski", TARSKI),
    ("abel-grassmann", ABEL_GRASSMANN),
    ("right-invertive", RIGHT_INVERTIVE),
    ("commutative", COMMUTATIVE),
    ("evans-1", EVANS_1),
    ("evans-2", EVANS_2),
    ("evans-3", EVANS_3),
    ("evans-4", EVANS_4),
    ("birkhoff-q3", BIRKHOFF_3),
    ("birkhoff-q6", BIRKHOFF_6),
];

pub fn by_name(name: &str) -> Option<Identity> {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| law(text))
}

fn law(text: &str) -> Identity {
    parse_identity(text).expect("built-in law parses")
}

pub fn associative() -> Identity {
    law(ASSOCIATIVE)
}

pub fn cyclic() -> Identity {
    law(CYCLIC)
}

pub fn tarski() -> Identity {
    law(TARSKI)
}

pub fn grassmann() -> Identity {
    law(GRASSMANN)
}

pub fn left_permutable() -> Identity {
    law(LEFT_PERMUTABLE)
}

pub fn abel_grassmann() -> Identity {
    law(ABEL_GRASSMANN)
}

pub fn commutative() -> Identity {
    law(COMMUTATIVE)
}

/// `x * (x \ y) = y`, `(y / x) * x = y`, `x \ (x * y) = y`, `(y * x) / x = y`.
pub fn evans() -> [Identity; 4] {
    [law(EVANS_1), law(EVANS_2), law(EVANS_3), law(EVANS_4)]
}

/// `(x / y) \ x = y` and `y / (x \ y) = x`.
pub fn birkhoff() -> [Identity; 2] {
    [law(BIRKHOFF_3), law(BIRKHOFF_6)]
}
