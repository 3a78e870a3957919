"""Preference-based frameworks: an attack graph plus a partial order on arguments."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidPreferences, MemberOutOfFramework, NotNormalExpansion
from .expansions import ExpansionKind, classify_expansion
from .framework import ArgumentationFramework, show_set
from .principles import PrincipleVerdict, Witness


def _transitive_closure(pairs: frozenset) -> frozenset:
    closed = set(pairs)
    while True:
        extra = {(a, d) for a, b in closed for c, d in closed if b == c} - closed
        if not extra:
            return frozenset(closed)
        closed |= extra


@dataclass(frozen=True)
class PreferenceBasedFramework:
    """``(arguments, attacks, prefs)``; ``(x, y)`` in prefs means x is at least as preferred as y.

    ``prefs`` is stored transitively closed with reflexive pairs left
    implicit. A preference cycle between distinct arguments is rejected.
    """

    arguments: frozenset = frozenset()
    attacks: frozenset = frozenset()
    prefs: frozenset = frozenset()

    def __post_init__(self):
        af = ArgumentationFramework(self.arguments, self.attacks)
        prefs = frozenset((a, b) for a, b in self.prefs if a != b)
        stray = {x for pair in prefs for x in pair} - af.arguments
        if stray:
            raise MemberOutOfFramework(stray)
        closed = _transitive_closure(prefs)
        loops = sorted(a for a, b in closed if a == b)
        if loops:
            raise InvalidPreferences(f"preferences are not antisymmetric around {', '.join(loops)}")
        object.__setattr__(self, "arguments", af.arguments)
        object.__setattr__(self, "attacks", af.attacks)
        object.__setattr__(self, "prefs", closed)

    @property
    def framework(self) -> ArgumentationFramework:
        return ArgumentationFramework(self.arguments, self.attacks)

    def prefers(self, a: str, b: str) -> bool:
        return a == b or (a, b) in self.prefs

    def __repr__(self):
        prefs = ", ".join(f"{a}>={b}" for a, b in sorted(self.prefs))
        return f"PreferenceBasedFramework({self.framework!r}, {{{prefs}}})"


def tau_preferred(paf: PreferenceBasedFramework) -> frozenset:
    """Arguments whose every attacker is dominated by them in the preference order."""
    return frozenset(
        a for a in paf.arguments if all(paf.prefers(a, b) for b, t in paf.attacks if t == a)
    )


class PafExpansionKind(str, Enum):
    NORMAL_PAF = "normal_paf"
    RATIONAL_MAN_PAF = "rational_man_paf"

    def __str__(self):
        return self.value


def _is_normal_paf(base, expanded) -> bool:
    old = base.arguments
    if not (old <= expanded.arguments and base.attacks <= expanded.attacks and base.prefs <= expanded.prefs):
        return False
    if any(a in old and b in old for a, b in expanded.attacks - base.attacks):
        return False
    return not any(a in old and b in old for a, b in expanded.prefs - base.prefs)


def classify_paf_expansion(base: PreferenceBasedFramework, expanded: PreferenceBasedFramework) -> frozenset:
    if not _is_normal_paf(base, expanded):
        return frozenset()
    kinds = {PafExpansionKind.NORMAL_PAF}
    if ExpansionKind.RATIONAL_MAN in classify_expansion(base.framework, expanded.framework):
        kinds.add(PafExpansionKind.RATIONAL_MAN_PAF)
    return frozenset(kinds)


def check_paf_reference_independence(base: PreferenceBasedFramework, expanded: PreferenceBasedFramework) -> PrincipleVerdict:
    """If the expanded decision uses only old arguments it must equal the base decision."""
    if PafExpansionKind.NORMAL_PAF not in classify_paf_expansion(base, expanded):
        raise NotNormalExpansion("expanded framework is not a normal preference-based expansion of base")
    chosen, chosen_x = tau_preferred(base), tau_preferred(expanded)
    if chosen_x <= base.arguments and chosen_x != chosen:
        return PrincipleVerdict(
            False,
            Witness(
                f"decision {show_set(chosen_x)} uses only old arguments but differs from {show_set(chosen)}",
                base_extension=chosen,
                expanded_extension=chosen_x,
            ),
        )
    return PrincipleVerdict(True)
