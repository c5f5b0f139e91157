//! Structure kinds and their identity tables.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::identity::Identity;
use super::names::*;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Permutative,
    Leibniz,
    Lie,
    CommutativeAssociative,
    Poisson,
    PreLie,
    Zinbiel,
    PrePoisson,
    DualPrePoisson,
    Dialgebra,
    PrePermutative,
    LeibnizDendriform,
    PreDualPrePoisson,
    CompatiblePreLie,
}

use StructureKind::*;

impl StructureKind {
    pub const ALL: [StructureKind; 14] = [
        Permutative,
        Leibniz,
        Lie,
        CommutativeAssociative,
        Poisson,
        PreLie,
        Zinbiel,
        PrePoisson,
        DualPrePoisson,
        Dialgebra,
        PrePermutative,
        LeibnizDendriform,
        PreDualPrePoisson,
        CompatiblePreLie,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Permutative => "permutative",
            Leibniz => "leibniz",
            Lie => "lie",
            CommutativeAssociative => "commutative_associative",
            Poisson => "poisson",
            PreLie => "pre_lie",
            Zinbiel => "zinbiel",
            PrePoisson => "pre_poisson",
            DualPrePoisson => "dual_pre_poisson",
            Dialgebra => "dialgebra",
            PrePermutative => "pre_permutative",
            LeibnizDendriform => "leibniz_dendriform",
            PreDualPrePoisson => "pre_dual_pre_poisson",
            CompatiblePreLie => "compatible_pre_lie",
        }
    }

    /// Products the kind requires, in a fixed order.
    pub fn required_ops(self) -> &'static [&'static str] {
        match self {
            Permutative => &[PERM],
            Leibniz => &[BRACKET],
            Lie => &[LIE],
            CommutativeAssociative => &[ASSOC],
            Poisson => &[ASSOC, LIE],
            PreLie => &[PRELIE],
            Zinbiel => &[ZINBIEL],
            PrePoisson => &[PRELIE, ZINBIEL],
            DualPrePoisson => &[PERM, BRACKET],
            Dialgebra => &[RIGHT, LEFT],
            PrePermutative => &[RTRI, LTRI],
            LeibnizDendriform => &[SUCC, PREC],
            PreDualPrePoisson => &[RTRI, LTRI, SUCC, PREC],
            CompatiblePreLie => &[PRELIE, PRELIE2],
        }
    }

    /// The defining identities in declaration order.
    pub fn identities(self) -> &'static [Identity] {
        static TABLES: OnceLock<Vec<Vec<Identity>>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| {
            StructureKind::ALL
                .iter()
                .map(|k| {
                    k.table()
                        .into_iter()
                        .map(|(l, e)| Identity::parse(l, e).expect("malformed built-in identity"))
                        .collect()
                })
                .collect()
        });
        let pos = StructureKind::ALL.iter().position(|k| *k == self).unwrap();
        &tables[pos]
    }

    fn table(self) -> Vec<(&'static str, &'static str)> {
        match self {
            Permutative => PERMUTATIVE.to_vec(),
            Leibniz => LEIBNIZ.to_vec(),
            Lie => LIE_TABLE.to_vec(),
            CommutativeAssociative => COMM_ASSOC.to_vec(),
            Poisson => [COMM_ASSOC, LIE_TABLE, POISSON_RULE].concat(),
            PreLie => PRE_LIE.to_vec(),
            Zinbiel => ZINBIEL_TABLE.to_vec(),
            PrePoisson => [PRE_LIE, ZINBIEL_TABLE, PRE_POISSON_MIXED].concat(),
            DualPrePoisson => [PERMUTATIVE, LEIBNIZ, DPP_MIXED].concat(),
            Dialgebra => DIALGEBRA.to_vec(),
            PrePermutative => PRE_PERMUTATIVE.to_vec(),
            LeibnizDendriform => LEIBNIZ_DENDRIFORM.to_vec(),
            PreDualPrePoisson => [PRE_PERMUTATIVE, LEIBNIZ_DENDRIFORM, PRE_DPP_MIXED].concat(),
            CompatiblePreLie => [PRE_LIE, PRE_LIE_2, COMPATIBLE].concat(),
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let norm = s.replace('-', "_");
        StructureKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Invalid(format!("unknown structure kind `{s}`")))
    }
}

type Table = [(&'static str, &'static str)];

const PERMUTATIVE: &Table = &[
    ("perm-assoc", "perm(x, perm(y, z)) - perm(perm(x, y), z)"),
    ("perm-left-comm", "perm(perm(x, y), z) - perm(perm(y, x), z)"),
];

const LEIBNIZ: &Table = &[(
    "leibniz",
    "bracket(x, bracket(y, z)) - bracket(bracket(x, y), z) - bracket(y, bracket(x, z))",
)];

const DPP_MIXED: &Table = &[
    (
        "bracket-derives-perm",
        "bracket(x, perm(y, z)) - perm(bracket(x, y), z) - perm(y, bracket(x, z))",
    ),
    (
        "perm-bracket-left",
        "bracket(perm(x, y), z) - perm(x, bracket(y, z)) - perm(y, bracket(x, z))",
    ),
    ("bracket-perm-skew", "perm(bracket(x, y), z) + perm(bracket(y, x), z)"),
];

const LIE_TABLE: &Table = &[
    ("lie-antisym", "lie(x, y) + lie(y, x)"),
    ("jacobi", "lie(x, lie(y, z)) + lie(y, lie(z, x)) + lie(z, lie(x, y))"),
];

const COMM_ASSOC: &Table = &[
    ("comm", "assoc(x, y) - assoc(y, x)"),
    ("assoc", "assoc(assoc(x, y), z) - assoc(x, assoc(y, z))"),
];

const POISSON_RULE: &Table = &[(
    "poisson-leibniz-rule",
    "lie(x, assoc(y, z)) - assoc(lie(x, y), z) - assoc(y, lie(x, z))",
)];

const PRE_LIE: &Table = &[(
    "pre-lie",
    "prelie(prelie(x, y), z) - prelie(x, prelie(y, z)) - prelie(prelie(y, x), z) + prelie(y, prelie(x, z))",
)];

const PRE_LIE_2: &Table = &[(
    "pre-lie-2",
    "prelie2(prelie2(x, y), z) - prelie2(x, prelie2(y, z)) - prelie2(prelie2(y, x), z) + prelie2(y, prelie2(x, z))",
)];

const ZINBIEL_TABLE: &Table = &[(
    "zinbiel",
    "zinbiel(x, zinbiel(y, z)) - zinbiel(zinbiel(x, y), z) - zinbiel(zinbiel(y, x), z)",
)];

const PRE_POISSON_MIXED: &Table = &[
    (
        "pre-poisson-1",
        "zinbiel(prelie(x, y), z) - zinbiel(prelie(y, x), z) - prelie(x, zinbiel(y, z)) + zinbiel(y, prelie(x, z))",
    ),
    (
        "pre-poisson-2",
        "prelie(zinbiel(x, y), z) + prelie(zinbiel(y, x), z) - zinbiel(x, prelie(y, z)) - zinbiel(y, prelie(x, z))",
    ),
];

const DIALGEBRA: &Table = &[
    ("right-assoc", "right(right(x, y), z) - right(x, right(y, z))"),
    ("left-assoc", "left(left(x, y), z) - left(x, left(y, z))"),
    ("left-left-right", "left(left(x, y), z) - left(x, right(y, z))"),
    ("right-left-mixed", "left(right(x, y), z) - right(x, left(y, z))"),
    ("left-right-right", "right(left(x, y), z) - right(x, right(y, z))"),
];

const PRE_PERMUTATIVE: &Table = &[
    ("pre-perm-1", "ltri(x, ltri(y, z)) + ltri(x, rtri(y, z)) - ltri(ltri(x, y), z)"),
    ("pre-perm-2", "ltri(ltri(x, y), z) - ltri(rtri(y, x), z)"),
    ("pre-perm-3", "ltri(rtri(y, x), z) - rtri(y, ltri(x, z))"),
    ("pre-perm-4", "rtri(x, rtri(y, z)) - rtri(ltri(x, y), z) - rtri(rtri(x, y), z)"),
    (
        "pre-perm-5",
        "rtri(ltri(x, y), z) + rtri(rtri(x, y), z) - rtri(ltri(y, x), z) - rtri(rtri(y, x), z)",
    ),
];

const LEIBNIZ_DENDRIFORM: &Table = &[
    (
        "leib-dend-1",
        "succ(prec(x, y), z) + succ(succ(x, y), z) - succ(x, succ(y, z)) + succ(y, succ(x, z))",
    ),
    ("leib-dend-2", "prec(succ(x, y), z) + prec(prec(y, x), z)"),
    (
        "leib-dend-3",
        "prec(x, prec(y, z)) + prec(x, succ(y, z)) - prec(prec(x, y), z) - succ(y, prec(x, z))",
    ),
];

const PRE_DPP_MIXED: &Table = &[
    (
        "pre-dpp-1",
        "prec(x, rtri(y, z)) + prec(x, ltri(y, z)) - ltri(prec(x, y), z) - rtri(y, prec(x, z))",
    ),
    (
        "pre-dpp-2",
        "succ(x, ltri(y, z)) - ltri(succ(x, y), z) - ltri(y, succ(x, z)) - ltri(y, prec(x, z))",
    ),
    (
        "pre-dpp-3",
        "succ(x, rtri(y, z)) - rtri(succ(x, y), z) - rtri(prec(x, y), z) - rtri(y, succ(x, z))",
    ),
    (
        "pre-dpp-4",
        "prec(ltri(x, y), z) - ltri(x, succ(y, z)) - ltri(x, prec(y, z)) - rtri(y, prec(x, z))",
    ),
    (
        "pre-dpp-5",
        "succ(rtri(x, y), z) + succ(ltri(x, y), z) - rtri(x, succ(y, z)) - rtri(y, succ(x, z))",
    ),
    ("pre-dpp-6", "prec(rtri(x, y), z) - prec(ltri(y, x), z)"),
    ("pre-dpp-7", "ltri(succ(x, y), z) + ltri(prec(y, x), z)"),
    (
        "pre-dpp-8",
        "rtri(succ(x, y), z) + rtri(prec(x, y), z) + rtri(succ(y, x), z) + rtri(prec(y, x), z)",
    ),
];

const COMPATIBLE: &Table = &[(
    "compatibility",
    "prelie2(prelie(x, y), z) - prelie2(x, prelie(y, z)) + prelie(prelie2(x, y), z) - prelie(x, prelie2(y, z)) \
     - prelie2(prelie(y, x), z) + prelie2(y, prelie(x, z)) - prelie(prelie2(y, x), z) + prelie(y, prelie2(x, z))",
)];
