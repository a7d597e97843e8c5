//! Named fragments: which generators a diagram may use and which semantics
//! interpret it.
//!
//! `swap` and `id(n)` belong to every fragment. A macro generator (`cnot`,
//! `not`, `gcx`) is admitted when it is listed or when every generator of its
//! expansion is admitted.

use std::fmt;
use std::str::FromStr;

use super::{expand_macros, Diagram, GenKind, Generator};
use crate::error::Error;
use crate::semantics::SemanticsKind;

use GenKind::*;
use SemanticsKind::*;

/// Whether the fragment's counting semantics lands in partial functions
/// or partial injections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Partiality {
    Function,
    Injection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FragmentId {
    Mono,
    Epi,
    Cm,
    Cb,
    Cb2,
    IsoCb2,
    MonoCb2,
    ParIsoCb2,
    ParCb2,
    SpanCb2,
    AffCb2,
    IsoAff,
    MonoAff,
    IsoAffPlus1,
    MonoAffPlus1,
    ParIsoAff,
    ParAff,
    SpanAff,
    LF2x,
    F2,
    IsoF2,
    MonoF2,
    Sub2,
    SubIsoF2,
    SubMonoF2,
    ParIsoF2,
    ParF2,
    SpanF2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub id: FragmentId,
    pub name: &'static str,
    pub allowed: &'static [GenKind],
    /// The semantics used to decide equality in this fragment.
    pub designated: SemanticsKind,
    /// Every semantics that interprets this fragment, designated included.
    pub semantics: &'static [SemanticsKind],
    pub partiality: Option<Partiality>,
}

const LINEAR_ALL: &[GenKind] = &[ZCopy, ZDel, ZMerge, ZUnit, XMul, XUnit, XCopy, XDel, Cnot];
const AFFINE_ALL: &[GenKind] =
    &[ZCopy, ZDel, ZMerge, ZUnit, XMul, XUnit, XCopy, XDel, Pi, PiDel, ZeroScalar, Cnot, Not];

const TOTAL_LINEAR: &[SemanticsKind] = &[F2Linear, LinearSpan, AffineSpan, CountingState, BooleanTotal];
const REL_LINEAR: &[SemanticsKind] = &[LinearSpan, AffineSpan, CountingState];
const PART_LINEAR: &[SemanticsKind] = &[LinearSpan, AffineSpan, CountingState, PartialFunction];
const TOTAL_AFFINE: &[SemanticsKind] = &[AffineSpan, CountingState, BooleanTotal];
const PART_AFFINE: &[SemanticsKind] = &[AffineSpan, CountingState, PartialFunction];
const TOTAL_BOOL: &[SemanticsKind] = &[BooleanTotal, CountingState, PartialFunction];
const PART_BOOL: &[SemanticsKind] = &[CountingState, PartialFunction];

const fn frag(
    id: FragmentId,
    name: &'static str,
    allowed: &'static [GenKind],
    designated: SemanticsKind,
    semantics: &'static [SemanticsKind],
    partiality: Option<Partiality>,
) -> Fragment {
    Fragment { id, name, allowed, designated, semantics, partiality }
}

use Partiality::{Function as PF, Injection as PI};

pub const FRAGMENTS: &[Fragment] = &[
    // free (co)monoids and bialgebras, read in Mat(N)
    frag(FragmentId::Mono, "MONO", &[XUnit], PathCounting, &[PathCounting, F2Linear, LinearSpan, CountingState], None),
    frag(FragmentId::Epi, "EPI", &[XMul], PathCounting, &[PathCounting, F2Linear, LinearSpan, CountingState], None),
    frag(
        FragmentId::Cm,
        "CM",
        &[XMul, XUnit],
        PathCounting,
        &[PathCounting, F2Linear, LinearSpan, CountingState],
        None,
    ),
    frag(
        FragmentId::Cb,
        "CB",
        &[ZCopy, ZDel, XMul, XUnit],
        PathCounting,
        &[PathCounting, F2Linear, LinearSpan, CountingState],
        None,
    ),
    // linear tower
    frag(FragmentId::Cb2, "CB2", &[ZCopy, ZDel, XMul, XUnit], F2Linear, TOTAL_LINEAR, None),
    frag(FragmentId::IsoCb2, "ISO_CB2", &[Cnot], LinearSpan, TOTAL_LINEAR, None),
    frag(FragmentId::MonoCb2, "MONO_CB2", &[Cnot, XUnit], LinearSpan, TOTAL_LINEAR, None),
    frag(FragmentId::ParIsoCb2, "PARISO_CB2", &[Cnot, XUnit, XDel], LinearSpan, PART_LINEAR, Some(PI)),
    frag(
        FragmentId::ParCb2,
        "PAR_CB2",
        &[Cnot, XUnit, XDel, ZCopy, ZMerge, ZDel, XMul],
        LinearSpan,
        PART_LINEAR,
        Some(PF),
    ),
    frag(FragmentId::SpanCb2, "SPAN_CB2", LINEAR_ALL, LinearSpan, REL_LINEAR, None),
    // affine tower
    frag(FragmentId::AffCb2, "AFF_CB2", &[ZCopy, ZDel, XMul, XUnit, Pi], AffineSpan, TOTAL_AFFINE, None),
    frag(FragmentId::IsoAff, "ISO_AFF", &[Cnot, Not], AffineSpan, TOTAL_AFFINE, None),
    frag(FragmentId::MonoAff, "MONO_AFF", &[Cnot, Not, XUnit], AffineSpan, TOTAL_AFFINE, None),
    frag(FragmentId::IsoAffPlus1, "ISO_AFF_PLUS1", &[Cnot, Not, ZeroScalar], AffineSpan, PART_AFFINE, Some(PI)),
    frag(
        FragmentId::MonoAffPlus1,
        "MONO_AFF_PLUS1",
        &[Cnot, Not, XUnit, ZeroScalar],
        AffineSpan,
        PART_AFFINE,
        Some(PI),
    ),
    frag(
        FragmentId::ParIsoAff,
        "PARISO_AFF",
        &[Cnot, Not, XUnit, XDel, Pi, PiDel, ZeroScalar],
        AffineSpan,
        PART_AFFINE,
        Some(PI),
    ),
    frag(
        FragmentId::ParAff,
        "PAR_AFF",
        &[Cnot, Not, XUnit, XDel, Pi, PiDel, ZeroScalar, ZCopy, ZMerge, ZDel, XMul],
        AffineSpan,
        PART_AFFINE,
        Some(PF),
    ),
    frag(FragmentId::SpanAff, "SPAN_AFF", AFFINE_ALL, AffineSpan, &[AffineSpan, CountingState], None),
    // Boolean tower
    frag(FragmentId::LF2x, "L_F2X", &[ZCopy, ZDel, And, Pi], BooleanTotal, TOTAL_BOOL, None),
    frag(FragmentId::F2, "F2", &[ZCopy, ZDel, And, Pi, XMul, XUnit], BooleanTotal, TOTAL_BOOL, None),
    frag(FragmentId::IsoF2, "ISO_F2", &[Gcx, Cnot, Not], BooleanTotal, TOTAL_BOOL, None),
    frag(FragmentId::MonoF2, "MONO_F2", &[Gcx, Cnot, Not, XUnit], BooleanTotal, TOTAL_BOOL, None),
    frag(FragmentId::Sub2, "SUB2", &[Poly], CountingState, PART_BOOL, Some(PI)),
    frag(FragmentId::SubIsoF2, "SUBISO_F2", &[Poly, Gcx, Cnot, Not], CountingState, PART_BOOL, Some(PI)),
    frag(FragmentId::SubMonoF2, "SUBMONO_F2", &[Poly, Gcx, Cnot, Not, XUnit], CountingState, PART_BOOL, Some(PI)),
    frag(
        FragmentId::ParIsoF2,
        "PARISO_F2",
        &[Poly, Gcx, Cnot, Not, XUnit, XDel, Pi, PiDel, ZeroScalar],
        CountingState,
        PART_BOOL,
        Some(PI),
    ),
    frag(
        FragmentId::ParF2,
        "PAR_F2",
        &[Poly, Gcx, Cnot, Not, XUnit, XDel, Pi, PiDel, ZeroScalar, ZCopy, ZMerge, ZDel, And, XMul],
        CountingState,
        PART_BOOL,
        Some(PF),
    ),
    frag(FragmentId::SpanF2, "SPAN_F2", &GenKind::ALL, CountingState, &[CountingState], None),
];

impl Fragment {
    pub fn get(id: FragmentId) -> &'static Fragment {
        FRAGMENTS.iter().find(|f| f.id == id).expect("every id has a table entry")
    }

    pub fn by_name(name: &str) -> Option<&'static Fragment> {
        FRAGMENTS.iter().find(|f| f.name.eq_ignore_ascii_case(name))
    }

    pub fn all() -> &'static [Fragment] {
        FRAGMENTS
    }

    pub fn applicable(&self, s: SemanticsKind) -> bool {
        self.semantics.contains(&s)
    }

    /// Whether a single generator may appear in this fragment.
    pub fn admits(&self, g: &Generator) -> bool {
        self.admits_kind(g)
            || (g.is_macro()
                && expand_macros(&Diagram::gen(g.clone())).generators().iter().all(|h| self.admits_kind(h)))
    }

    fn admits_kind(&self, g: &Generator) -> bool {
        self.allowed.contains(&g.kind())
    }
}

impl FragmentId {
    pub fn fragment(self) -> &'static Fragment {
        Fragment::get(self)
    }

    pub fn name(self) -> &'static str {
        self.fragment().name
    }
}

impl fmt::Display for FragmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FragmentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Fragment::by_name(s).map(|f| f.id).ok_or_else(|| Error::Invalid(format!("unknown fragment `{s}`")))
    }
}

impl serde::Serialize for FragmentId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// The first generator of `d` not admitted by `f`, if any.
pub fn first_disallowed<'a>(d: &'a Diagram, f: &Fragment) -> Option<&'a Generator> {
    d.generators().into_iter().find(|g| !f.admits(g))
}

pub fn fragment_check(d: &Diagram, f: &Fragment) -> bool {
    first_disallowed(d, f).is_none()
}
