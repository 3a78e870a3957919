"""Abstract argumentation semantics, expansion classification and principle audits."""

from .errors import (
    ArgauditError,
    CapacityExceeded,
    InvalidPreferences,
    MemberOutOfFramework,
    NoExtensions,
    NotAnScc,
    NotNormalExpansion,
    ParseError,
    UndeclaredArgument,
    UnknownSemantics,
)
from .expansions import (
    ExpansionKind,
    GenParams,
    classify_expansion,
    generate_framework,
    generate_normal_expansion,
    generate_rational_mans_expansion,
)
from .framework import (
    ArgumentationFramework,
    AttackCycle,
    Dpu,
    attack_cycles,
    dpu_partition,
    is_acceptable,
    is_admissible,
    is_conflict_free,
    is_reachable,
    is_strongly_admissible,
    range_of,
    restriction,
    sccs,
    unattacked_sets,
)
from .io import parse_framework, serialize_framework
from .preferences import (
    PafExpansionKind,
    PreferenceBasedFramework,
    check_paf_reference_independence,
    classify_paf_expansion,
    tau_preferred,
)
from .principles import (
    PrincipleId,
    PrincipleVerdict,
    SearchBounds,
    Witness,
    check_cautious_monotony,
    check_decision_reference_independence,
    check_directionality,
    check_monotony,
    check_principle,
    check_rational_monotony,
    check_reference_independence,
    search_counterexamples,
)
from .semantics import Mode, Semantics, aggregate, extensions, uniqueness_guarantee

__version__ = "0.1.0"
