//! The catalog of verifiable results. Every id maps to exactly one
//! exhaustive verification routine.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Omr1,
    BicatPhiClosure,
    BwProperties,
    AssocSufficient,
    Lemch,
    Pro1212,
    Pro1213,
    PlusClosed,
    ClosedTransfer,
    BoolClosure,
    ClCharacterization,
    Pcj1,
    Pcj2,
    Pcj3,
    Pcj4,
    Lus1,
    Mr1,
    Reflem7,
    Reflem8,
    Refcor8,
    Lemconj,
    Lpow,
    Gg1a,
    Gg1b,
    Palpro1,
    Eqth3,
    Teq1,
    Teq2,
    Teq3,
    Teq4,
    Teq5,
    Lemeq5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 32] = [
        TheoremId::Omr1,
        TheoremId::BicatPhiClosure,
        TheoremId::BwProperties,
        TheoremId::AssocSufficient,
        TheoremId::Lemch,
        TheoremId::Pro1212,
        TheoremId::Pro1213,
        TheoremId::PlusClosed,
        TheoremId::ClosedTransfer,
        TheoremId::BoolClosure,
        TheoremId::ClCharacterization,
        TheoremId::Pcj1,
        TheoremId::Pcj2,
        TheoremId::Pcj3,
        TheoremId::Pcj4,
        TheoremId::Lus1,
        TheoremId::Mr1,
        TheoremId::Reflem7,
        TheoremId::Reflem8,
        TheoremId::Refcor8,
        TheoremId::Lemconj,
        TheoremId::Lpow,
        TheoremId::Gg1a,
        TheoremId::Gg1b,
        TheoremId::Palpro1,
        TheoremId::Eqth3,
        TheoremId::Teq1,
        TheoremId::Teq2,
        TheoremId::Teq3,
        TheoremId::Teq4,
        TheoremId::Teq5,
        TheoremId::Lemeq5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Omr1 => "omr1",
            TheoremId::BicatPhiClosure => "bicat_phi_closure",
            TheoremId::BwProperties => "bw_properties",
            TheoremId::AssocSufficient => "assoc_sufficient",
            TheoremId::Lemch => "lemch",
            TheoremId::Pro1212 => "pro1212",
            TheoremId::Pro1213 => "pro1213",
            TheoremId::PlusClosed => "plus_closed",
            TheoremId::ClosedTransfer => "closed_transfer",
            TheoremId::BoolClosure => "bool_closure",
            TheoremId::ClCharacterization => "cl_characterization",
            TheoremId::Pcj1 => "pcj1",
            TheoremId::Pcj2 => "pcj2",
            TheoremId::Pcj3 => "pcj3",
            TheoremId::Pcj4 => "pcj4",
            TheoremId::Lus1 => "lus1",
            TheoremId::Mr1 => "mr1",
            TheoremId::Reflem7 => "reflem7",
            TheoremId::Reflem8 => "reflem8",
            TheoremId::Refcor8 => "refcor8",
            TheoremId::Lemconj => "lemconj",
            TheoremId::Lpow => "lpow",
            TheoremId::Gg1a => "gg1a",
            TheoremId::Gg1b => "gg1b",
            TheoremId::Palpro1 => "palpro1",
            TheoremId::Eqth3 => "eqth3",
            TheoremId::Teq1 => "teq1",
            TheoremId::Teq2 => "teq2",
            TheoremId::Teq3 => "teq3",
            TheoremId::Teq4 => "teq4",
            TheoremId::Teq5 => "teq5",
            TheoremId::Lemeq5 => "lemeq5",
        }
    }

    pub fn parse(text: &str) -> Option<TheoremId> {
        Self::ALL.into_iter().find(|t| t.id() == text)
    }

    /// Results about θ-conjugacy and the language equations are stated for
    /// antimorphic involutions only.
    pub fn requires_antimorphic(self) -> bool {
        matches!(
            self,
            TheoremId::Omr1
                | TheoremId::Pcj1
                | TheoremId::Pcj2
                | TheoremId::Pcj3
                | TheoremId::Pcj4
                | TheoremId::Lus1
                | TheoremId::Mr1
                | TheoremId::Reflem8
                | TheoremId::Refcor8
                | TheoremId::Gg1a
                | TheoremId::Gg1b
                | TheoremId::Palpro1
                | TheoremId::Eqth3
                | TheoremId::Teq1
                | TheoremId::Teq2
                | TheoremId::Teq3
                | TheoremId::Teq4
                | TheoremId::Teq5
                | TheoremId::Lemeq5
        )
    }

    pub fn summary(self) -> &'static str {
        match self {
            TheoremId::Omr1 => "strong catenation commutes iff equal, image, or common palindromic root",
            TheoremId::BicatPhiClosure => "bi-catenation results are closed under the involution",
            TheoremId::BwProperties => "length-increasing, phi-propagating, commutative; not propagating/associative/inclusive",
            TheoremId::AssocSufficient => "commuting phi-pair products make bi-catenation associative",
            TheoremId::Lemch => "language bi-catenation equals the two-sided pair product",
            TheoremId::Pro1212 => "n-th power is the n-fold product of the phi-closure",
            TheoremId::Pro1213 => "powers add under bi-catenation",
            TheoremId::PlusClosed => "plus-closure of any language is closed under bi-catenation",
            TheoremId::ClosedTransfer => "closure transfers to reversal, image, catenation and pair products",
            TheoremId::BoolClosure => "intersection preserves closure; complement and union do not",
            TheoremId::ClCharacterization => "iterative closure equals the plus-closure of the phi-closure",
            TheoremId::Pcj1 => "conjugate pairs with equal bi-catenations: plain conjugacy form",
            TheoremId::Pcj2 => "conjugate pairs with equal bi-catenations: image-right form",
            TheoremId::Pcj3 => "conjugate pairs with equal bi-catenations: image-left form",
            TheoremId::Pcj4 => "conjugate pairs with equal bi-catenations: double-image form",
            TheoremId::Lus1 => "xx.t(y) = t(y)t(x)x forces a common palindromic root",
            TheoremId::Mr1 => "bi-catenation conjugacy holds iff u = w or u = t(w)",
            TheoremId::Reflem7 => "yxx = xxy forces a common root",
            TheoremId::Reflem8 => "xxy = yx.t(x) or y.t(x)x forces a common palindromic root",
            TheoremId::Refcor8 => "iterated variants of reflem8 force a common palindromic root",
            TheoremId::Lemconj => "uv = vw decomposes as u=xy, v=(xy)^k x, w=yx",
            TheoremId::Lpow => "xy = yx forces powers of a common word",
            TheoremId::Gg1a => "uv = t(v)w splits or certifies u = t(w)",
            TheoremId::Gg1b => "uv = t(v)u decomposes into palindromes",
            TheoremId::Palpro1 => "double palindromic equations force root or skew form",
            TheoremId::Eqth3 => "simultaneous conjugate equations force alternating palindromes",
            TheoremId::Teq1 => "word-language conjugacy with uL = Lv",
            TheoremId::Teq2 => "word-language conjugacy with uL = L.t(v)",
            TheoremId::Teq3 => "word-language conjugacy with uL = t(L)v",
            TheoremId::Teq4 => "word-language conjugacy with uL = t(L)t(v)",
            TheoremId::Teq5 => "word-language conjugacy with one-sided word equations",
            TheoremId::Lemeq5 => "uL = vL cancels to u = v, with image variants",
        }
    }
}
