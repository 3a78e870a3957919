"""Extension enumeration for eleven argumentation semantics.

Subsets are handled as integer bitmasks over ``af.order``. Conflict-free sets
are enumerated once by backtracking and every other extension family is a
filter over them; grounded is a plain fixpoint and CF2/stage2 are built
component by component along the SCC condensation.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache, reduce

from .errors import CapacityExceeded, NoExtensions, UnknownSemantics
from .framework import (
    ArgumentationFramework,
    _dpu,
    restriction,
    sccs_in_topological_order,
)

MAX_ARGUMENTS = 24


class Semantics(str, Enum):
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"
    SEMI_STABLE = "semi_stable"
    IDEAL = "ideal"
    EAGER = "eager"
    NAIVE = "naive"
    STAGE = "stage"
    CF2 = "cf2"
    STAGE2 = "stage2"

    @classmethod
    def parse(cls, name) -> "Semantics":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise UnknownSemantics(f"unknown semantics {name!r}") from None

    def __str__(self):
        return self.value


class Mode(str, Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"
    DECIDE_UNION = "decide_union"
    DECIDE_INTERSECTION = "decide_intersection"

    @classmethod
    def parse(cls, name) -> "Mode":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown aggregation mode {name!r}") from None

    def __str__(self):
        return self.value


# (credulous, skeptical); naive is not in the published table and is filled
# in from its definition: several maximal conflict-free sets, always >= 1.
_UNIQUENESS = {
    Semantics.COMPLETE: (False, True),
    Semantics.GROUNDED: (True, True),
    Semantics.PREFERRED: (False, True),
    Semantics.STABLE: (False, False),
    Semantics.IDEAL: (True, True),
    Semantics.SEMI_STABLE: (False, True),
    Semantics.EAGER: (True, True),
    Semantics.STAGE: (False, True),
    Semantics.CF2: (False, True),
    Semantics.STAGE2: (False, True),
    Semantics.NAIVE: (False, True),
}


def uniqueness_guarantee(sem, mode="credulous") -> bool:
    """Whether ``sem`` under ``mode`` always yields exactly one extension."""
    sem = Semantics.parse(sem)
    mode = Mode.parse(mode)
    if mode is Mode.CREDULOUS:
        return _UNIQUENESS[sem][0]
    if mode is Mode.SKEPTICAL:
        return _UNIQUENESS[sem][1]
    raise ValueError("uniqueness is tabulated for credulous and skeptical modes only")


def is_universally_defined(sem) -> bool:
    return Semantics.parse(sem) is not Semantics.STABLE


# -- bitmask engine ---------------------------------------------------------


def _conflict_free(af: ArgumentationFramework) -> list:
    """All conflict-free sets as ``(mask, targets_mask, attackers_mask)``."""
    n = len(af.order)
    att = af.attacker_masks
    tgt = af.target_masks
    out = []

    def rec(i, mask, targets, attackers, blocked):
        if i == n:
            out.append((mask, targets, attackers))
            return
        rec(i + 1, mask, targets, attackers, blocked)
        bit = 1 << i
        if not (blocked & bit) and not (att[i] & bit):
            rec(
                i + 1,
                mask | bit,
                targets | tgt[i],
                attackers | att[i],
                blocked | att[i] | tgt[i],
            )

    rec(0, 0, 0, 0, 0)
    return out


def _defended(af: ArgumentationFramework, targets: int) -> int:
    """Mask of arguments all of whose attackers lie in ``targets``."""
    out = 0
    for i, a in enumerate(af.attacker_masks):
        if a & ~targets == 0:
            out |= 1 << i
    return out


def _maximal(masks) -> list:
    kept = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


def _range_maximal(items) -> list:
    """Keep ``(mask, targets)`` items whose range ``mask | targets`` is maximal."""
    ranges = _maximal(m | t for m, t in items)
    keep = set(ranges)
    return [m for m, t in items if (m | t) in keep]


def _grounded(af: ArgumentationFramework) -> int:
    mask = 0
    while True:
        nxt = _defended(af, af.targets_of_set(mask))
        if nxt == mask:
            return mask
        mask = nxt


def _largest_admissible_subset(af: ArgumentationFramework, mask: int) -> int:
    # mask must be conflict-free; drop undefended members until stable
    while True:
        nxt = mask & _defended(af, af.targets_of_set(mask))
        if nxt == mask:
            return mask
        mask = nxt


def _masks(af: ArgumentationFramework, sem: Semantics) -> list:
    if sem is Semantics.GROUNDED:
        return [_grounded(af)]
    cf = _conflict_free(af)
    if sem is Semantics.NAIVE:
        return _maximal(m for m, _, _ in cf)
    if sem is Semantics.STAGE:
        return _range_maximal([(m, t) for m, t, _ in cf])
    if sem is Semantics.STABLE:
        return [m for m, t, _ in cf if m | t == af.full_mask]
    admissible = [(m, t) for m, t, a in cf if a & ~t == 0]
    if sem is Semantics.PREFERRED:
        return _maximal(m for m, _ in admissible)
    if sem is Semantics.IDEAL:
        common = reduce(lambda x, y: x & y, _maximal(m for m, _ in admissible))
        return [_largest_admissible_subset(af, common)]
    complete = [(m, t) for m, t in admissible if _defended(af, t) == m]
    if sem is Semantics.COMPLETE:
        return [m for m, _ in complete]
    semi_stable = _range_maximal(complete)
    if sem is Semantics.SEMI_STABLE:
        return semi_stable
    if sem is Semantics.EAGER:
        common = reduce(lambda x, y: x & y, semi_stable)
        return [_largest_admissible_subset(af, common)]
    raise UnknownSemantics(str(sem))


@lru_cache(maxsize=65536)
def _scc_recursive(af: ArgumentationFramework, base: Semantics) -> frozenset:
    comps = sccs_in_topological_order(af)
    if not comps:
        return frozenset({frozenset()})
    if len(comps) == 1:
        return frozenset(af.from_mask(m) for m in _masks(af, base))
    partial = [frozenset()]
    for comp in comps:
        grown = []
        for e in partial:
            # e only holds choices from upstream components, which is all the
            # D/P/U split of comp depends on
            up = _dpu(af, comp, e).up
            for sub in _scc_recursive(restriction(af, up), base):
                grown.append(e | sub)
        partial = grown
    return frozenset(partial)


@lru_cache(maxsize=16384)
def _extensions(af: ArgumentationFramework, sem: Semantics) -> frozenset:
    if sem is Semantics.CF2:
        return _scc_recursive(af, Semantics.NAIVE)
    if sem is Semantics.STAGE2:
        return _scc_recursive(af, Semantics.STAGE)
    return frozenset(af.from_mask(m) for m in _masks(af, sem))


def extensions(af: ArgumentationFramework, sem, capacity: int = MAX_ARGUMENTS) -> frozenset:
    """The set of ``sem``-extensions of ``af`` as a frozenset of frozensets."""
    sem = Semantics.parse(sem)
    if len(af) > capacity:
        raise CapacityExceeded(f"{len(af)} arguments exceeds capacity {capacity}")
    return _extensions(af, sem)


def aggregate(af: ArgumentationFramework, sem, mode):
    """Apply a reasoning mode or decision function to ``extensions(af, sem)``.

    ``credulous`` returns the extension family unchanged and ``skeptical``
    the one-element family holding the intersection. The two ``decide_*``
    modes return a single argument set.
    """
    mode = Mode.parse(mode)
    exts = extensions(af, sem)
    if mode is Mode.CREDULOUS:
        return exts
    if mode is Mode.DECIDE_UNION:
        return frozenset().union(*exts)
    if not exts:
        raise NoExtensions(f"{Semantics.parse(sem)} yields no extensions; intersection undefined")
    common = frozenset.intersection(*exts)
    if mode is Mode.SKEPTICAL:
        return frozenset({common})
    return common
