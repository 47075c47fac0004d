//! Reference polynomials, one for each `(G4, G6, G12)` combination.

use crate::classifier::{GroupLabel, TrinomialPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exemplar {
    pub a: i64,
    pub b: i64,
    pub g4: GroupLabel,
    pub g6: GroupLabel,
    pub g12: u16,
}

impl Exemplar {
    pub fn pair(&self) -> TrinomialPair {
        TrinomialPair::from_ints(self.a, self.b).expect("exemplars have b != 0")
    }

    pub fn g12_label(&self) -> GroupLabel {
        GroupLabel::t12(self.g12)
    }
}

const fn ex(a: i64, b: i64, g4: GroupLabel, g6: GroupLabel, g12: u16) -> Exemplar {
    Exemplar { a, b, g4, g6, g12 }
}

use GroupLabel as G;

pub const EXEMPLARS: [Exemplar; 17] = [
    ex(8, 8, G::T4_1, G::T6_3, 11),
    ex(4, 2, G::T4_1, G::T6_9, 39),
    ex(-1, 1, G::T4_2, G::T6_1, 2),
    ex(572, 470596, G::T4_2, G::T6_2, 3),
    ex(2, 4, G::T4_2, G::T6_5, 18),
    ex(5, 1, G::T4_2, G::T6_3, 3),
    ex(3, 1, G::T4_2, G::T6_3, 10),
    ex(-1, 4, G::T4_2, G::T6_9, 16),
    ex(1, 4, G::T4_2, G::T6_9, 37),
    ex(9, 27, G::T4_3, G::T6_1, 14),
    ex(0, 3, G::T4_3, G::T6_2, 15),
    ex(1, 7, G::T4_3, G::T6_5, 42),
    ex(1, -27, G::T4_3, G::T6_3, 12),
    ex(0, -3, G::T4_3, G::T6_3, 13),
    ex(0, 2, G::T4_3, G::T6_3, 28),
    ex(4, -2, G::T4_3, G::T6_9, 38),
    ex(1, 2, G::T4_3, G::T6_9, 81),
];

/// The first exemplar with the given dodecic group.
pub fn exemplar_for(g12: u16) -> Option<&'static Exemplar> {
    EXEMPLARS.iter().find(|e| e.g12 == g12)
}
