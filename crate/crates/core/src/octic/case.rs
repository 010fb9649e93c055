use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::p_adic_valuation;

/// The fifteen congruence classes of reduced `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    V2Odd,
    M28Mod32,
    M12Mod32,
    M4Mod16,
    M48Mod64,
    M80Mod128,
    M144Mod256,
    M16Mod256,
    M448Mod512,
    M192Mod512,
    M64Mod256,
    M3Mod4,
    M5Mod8,
    M9Mod16,
    M1Mod16,
}

impl CaseId {
    pub const ALL: [CaseId; 15] = [
        CaseId::V2Odd,
        CaseId::M28Mod32,
        CaseId::M12Mod32,
        CaseId::M4Mod16,
        CaseId::M48Mod64,
        CaseId::M80Mod128,
        CaseId::M144Mod256,
        CaseId::M16Mod256,
        CaseId::M448Mod512,
        CaseId::M192Mod512,
        CaseId::M64Mod256,
        CaseId::M3Mod4,
        CaseId::M5Mod8,
        CaseId::M9Mod16,
        CaseId::M1Mod16,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseId::V2Odd => "V2ODD",
            CaseId::M28Mod32 => "M28MOD32",
            CaseId::M12Mod32 => "M12MOD32",
            CaseId::M4Mod16 => "M4MOD16",
            CaseId::M48Mod64 => "M48MOD64",
            CaseId::M80Mod128 => "M80MOD128",
            CaseId::M144Mod256 => "M144MOD256",
            CaseId::M16Mod256 => "M16MOD256",
            CaseId::M448Mod512 => "M448MOD512",
            CaseId::M192Mod512 => "M192MOD512",
            CaseId::M64Mod256 => "M64MOD256",
            CaseId::M3Mod4 => "M3MOD4",
            CaseId::M5Mod8 => "M5MOD8",
            CaseId::M9Mod16 => "M9MOD16",
            CaseId::M1Mod16 => "M1MOD16",
        }
    }

    /// `nu_2(ind f) - nu_2(A_2 ... A_7)`, as confirmed by the 2-maximality
    /// check.
    pub fn two_adic_increment(self) -> u32 {
        match self {
            CaseId::M144Mod256 => 8,
            CaseId::M16Mod256 => 9,
            CaseId::M448Mod512 => 6,
            CaseId::M192Mod512 => 5,
            other => other.published_two_adic_increment(),
        }
    }

    /// The increment as published; differs from [`Self::two_adic_increment`]
    /// for `M144MOD256`, `M16MOD256`, `M448MOD512` and `M192MOD512`.
    pub fn published_two_adic_increment(self) -> u32 {
        match self {
            CaseId::V2Odd | CaseId::M3Mod4 => 0,
            CaseId::M28Mod32 => 6,
            CaseId::M12Mod32 => 5,
            CaseId::M4Mod16 => 4,
            CaseId::M48Mod64 => 2,
            CaseId::M80Mod128 => 6,
            CaseId::M144Mod256 => 7,
            CaseId::M16Mod256 => 8,
            CaseId::M448Mod512 => 5,
            CaseId::M192Mod512 => 6,
            CaseId::M64Mod256 => 4,
            CaseId::M5Mod8 => 4,
            CaseId::M9Mod16 => 6,
            CaseId::M1Mod16 => 7,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for CaseId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| format!("unknown case label {s}"))
    }
}

/// Table row of a reduced `m`; congruences use the non-negative residue.
pub fn classify_case(m: &BigInt) -> CaseId {
    assert!(!m.is_zero(), "m must be nonzero");
    let v = p_adic_valuation(m, 2).expect("nonzero");
    let r = m.mod_floor(&BigInt::from(512)).to_u32().unwrap();
    if v % 2 == 1 {
        return CaseId::V2Odd;
    }
    match v {
        0 => match () {
            _ if r % 4 == 3 => CaseId::M3Mod4,
            _ if r % 8 == 5 => CaseId::M5Mod8,
            _ if r % 16 == 9 => CaseId::M9Mod16,
            _ if r % 16 == 1 => CaseId::M1Mod16,
            _ => unreachable!("odd residue {r} not covered"),
        },
        2 => match () {
            _ if r % 32 == 28 => CaseId::M28Mod32,
            _ if r % 32 == 12 => CaseId::M12Mod32,
            _ if r % 16 == 4 => CaseId::M4Mod16,
            _ => unreachable!("residue {r} with nu_2 = 2 not covered"),
        },
        4 => match () {
            _ if r % 64 == 48 => CaseId::M48Mod64,
            _ if r % 128 == 80 => CaseId::M80Mod128,
            _ if r % 256 == 144 => CaseId::M144Mod256,
            _ if r % 256 == 16 => CaseId::M16Mod256,
            _ => unreachable!("residue {r} with nu_2 = 4 not covered"),
        },
        6 => match () {
            _ if r == 448 => CaseId::M448Mod512,
            _ if r == 192 => CaseId::M192Mod512,
            _ if r % 256 == 64 => CaseId::M64Mod256,
            _ => unreachable!("residue {r} with nu_2 = 6 not covered"),
        },
        _ => unreachable!("nu_2(m) = {v} but m should be reduced"),
    }
}
