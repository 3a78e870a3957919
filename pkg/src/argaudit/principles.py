"""Pairwise principle checkers and a counterexample search harness.

Every checker takes a semantics, a base framework and a normal expansion of
it, and returns a :class:`PrincipleVerdict`. ``mode`` selects the credulous
family ``sigma(AF)`` or the skeptical family ``{intersection of sigma(AF)}``;
for the skeptical family an empty extension set stays empty, so stable
frameworks without extensions behave like the credulous case.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import CapacityExceeded, NoExtensions, NotNormalExpansion
from .expansions import (
    ExpansionKind,
    GenParams,
    classify_expansion,
    generate_framework,
    generate_normal_expansion,
    generate_rational_mans_expansion,
    is_normal_expansion,
)
from .framework import (
    ArgumentationFramework,
    canonical_family,
    canonical_set,
    show_set,
    restriction,
    unattacked_sets,
)
from .semantics import Mode, Semantics, aggregate, extensions, is_universally_defined

MAX_PRINCIPLE_ARGUMENTS = 12
MAX_EXHAUSTIVE_ARGUMENTS = 5


class PrincipleId(str, Enum):
    WEAK_REF_INDEPENDENCE = "weak_ref_independence"
    STRONG_REF_INDEPENDENCE = "strong_ref_independence"
    WEAK_MONOTONY = "weak_monotony"
    STRONG_MONOTONY = "strong_monotony"
    WEAK_CAUTIOUS_MONOTONY = "weak_cautious_monotony"
    STRONG_CAUTIOUS_MONOTONY = "strong_cautious_monotony"
    WEAK_RATIONAL_MONOTONY = "weak_rational_monotony"
    STRONG_RATIONAL_MONOTONY = "strong_rational_monotony"
    DIRECTIONALITY = "directionality"
    DECISION_REF_INDEPENDENCE = "decision_ref_independence"

    @classmethod
    def parse(cls, name) -> "PrincipleId":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower().replace("-", "_"))
        except ValueError:
            raise ValueError(f"unknown principle {name!r}") from None

    def __str__(self):
        return self.value


def _fam(family):
    return canonical_family(family) if family is not None else None


def _set(s):
    return canonical_set(s) if s is not None else None


@dataclass(frozen=True)
class Witness:
    detail: str
    base_extension: Optional[frozenset] = None
    expanded_extension: Optional[frozenset] = None
    expanded_extensions: Optional[frozenset] = None
    unattacked_set: Optional[frozenset] = None
    restricted_extensions: Optional[frozenset] = None
    projected_extensions: Optional[frozenset] = None

    def to_dict(self) -> dict:
        out = {"detail": self.detail}
        for key in ("base_extension", "expanded_extension", "unattacked_set"):
            value = getattr(self, key)
            if value is not None:
                out[key] = _set(value)
        for key in ("expanded_extensions", "restricted_extensions", "projected_extensions"):
            value = getattr(self, key)
            if value is not None:
                out[key] = _fam(value)
        return out


@dataclass(frozen=True)
class PrincipleVerdict:
    holds: bool
    witness: Optional[Witness] = None
    vacuous: bool = False
    # Only meaningful for strong variants, whose definition also demands a
    # universally defined semantics; one pair cannot establish that.
    universally_defined: Optional[bool] = None
    notes: tuple = field(default=())

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def to_dict(self) -> dict:
        out = {"holds": self.holds, "vacuous": self.vacuous}
        if self.universally_defined is not None:
            out["universally_defined"] = self.universally_defined
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def reasoning_family(af: ArgumentationFramework, sem, mode="credulous") -> frozenset:
    """``sigma(af)`` for credulous mode, ``{intersection}`` for skeptical mode."""
    mode = Mode.parse(mode)
    exts = extensions(af, sem, capacity=MAX_PRINCIPLE_ARGUMENTS)
    if mode is Mode.CREDULOUS:
        return exts
    if mode is Mode.SKEPTICAL:
        return frozenset({frozenset.intersection(*exts)}) if exts else frozenset()
    raise ValueError(f"mode {mode} does not produce an extension family")


def _ordered(family):
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def _require_normal(base, expanded):
    if not is_normal_expansion(base, expanded):
        raise NotNormalExpansion("expanded framework is not a normal expansion of base")


def _families(sem, base, expanded, mode):
    _require_normal(base, expanded)
    return reasoning_family(base, sem, mode), reasoning_family(expanded, sem, mode)


def _strength(strength) -> bool:
    strength = str(strength).lower()
    if strength not in ("weak", "strong"):
        raise ValueError("strength must be 'weak' or 'strong'")
    return strength == "strong"


def _vacuous_ok(base_family, strong, sem, note):
    return PrincipleVerdict(
        True,
        vacuous=not base_family,
        universally_defined=is_universally_defined(sem) if strong else None,
        notes=(note,) if not base_family else (),
    )


_EMPTY_NOTE = "base framework has no extensions; universal condition holds vacuously"


def check_reference_independence(sem, base, expanded, strength="weak", mode="credulous") -> PrincipleVerdict:
    """Does expanding ``base`` keep every base extension, unless something new is accepted?

    weak: each base extension E has some expanded extension E' that equals
    E or contains a new argument. strong: every pair (E, E') satisfies that.
    """
    strong = _strength(strength)
    old = base.arguments
    fam, fam_x = _families(sem, base, expanded, mode)
    for e in _ordered(fam):
        if strong:
            for ex in _ordered(fam_x):
                if ex <= old and ex != e:
                    return PrincipleVerdict(
                        False,
                        Witness(
                            f"{show_set(ex)} uses only old arguments but differs from {show_set(e)}",
                            base_extension=e,
                            expanded_extension=ex,
                            expanded_extensions=fam_x,
                        ),
                        universally_defined=is_universally_defined(sem),
                    )
        elif not any(not ex <= old or ex == e for ex in fam_x):
            return PrincipleVerdict(
                False,
                Witness(
                    f"no expanded extension equals {show_set(e)} or contains a new argument",
                    base_extension=e,
                    expanded_extensions=fam_x,
                ),
            )
    return _vacuous_ok(fam, strong, sem, _EMPTY_NOTE)


def _subset_check(fam, fam_x, strong, guard, sem, label):
    for e in _ordered(fam):
        if not guard(e):
            continue
        if strong:
            for ex in _ordered(fam_x):
                if not e <= ex:
                    return PrincipleVerdict(
                        False,
                        Witness(
                            f"{label}: {show_set(e)} is not contained in {show_set(ex)}",
                            base_extension=e,
                            expanded_extension=ex,
                            expanded_extensions=fam_x,
                        ),
                        universally_defined=is_universally_defined(sem),
                    )
        elif not any(e <= ex for ex in fam_x):
            return PrincipleVerdict(
                False,
                Witness(
                    f"{label}: no expanded extension contains {show_set(e)}",
                    base_extension=e,
                    expanded_extensions=fam_x,
                ),
            )
    return _vacuous_ok(fam, strong, sem, _EMPTY_NOTE)


def check_monotony(sem, base, expanded, strength="weak", mode="credulous") -> PrincipleVerdict:
    strong = _strength(strength)
    fam, fam_x = _families(sem, base, expanded, mode)
    return _subset_check(fam, fam_x, strong, lambda e: True, sem, "monotony")


def _attacked_from(expanded, sources, e):
    return any(a in sources and b in e for a, b in expanded.attacks)


def check_cautious_monotony(sem, base, expanded, strength="weak", mode="credulous") -> PrincipleVerdict:
    """Monotony restricted to base extensions no new argument attacks."""
    strong = _strength(strength)
    fam, fam_x = _families(sem, base, expanded, mode)
    new = expanded.arguments - base.arguments
    return _subset_check(
        fam, fam_x, strong, lambda e: not _attacked_from(expanded, new, e), sem, "cautious monotony"
    )


def check_rational_monotony(sem, base, expanded, strength="weak", mode="credulous") -> PrincipleVerdict:
    """Monotony restricted to base extensions not attacked by any new argument
    that appears in some expanded extension."""
    strong = _strength(strength)
    fam, fam_x = _families(sem, base, expanded, mode)
    accepted_new = frozenset().union(*fam_x) - base.arguments
    return _subset_check(
        fam,
        fam_x,
        strong,
        lambda e: not _attacked_from(expanded, accepted_new, e),
        sem,
        "rational monotony",
    )


def check_directionality(sem, af, mode="credulous") -> PrincipleVerdict:
    """Restricting to any unattacked set commutes with projecting extensions."""
    if len(af) > MAX_PRINCIPLE_ARGUMENTS:
        raise CapacityExceeded(f"{len(af)} arguments exceeds capacity {MAX_PRINCIPLE_ARGUMENTS}")
    fam = reasoning_family(af, sem, mode)
    for u in _ordered(unattacked_sets(af)):
        left = reasoning_family(restriction(af, u), sem, mode)
        right = frozenset(e & u for e in fam)
        if left != right:
            return PrincipleVerdict(
                False,
                Witness(
                    f"restriction to unattacked set {show_set(u)} disagrees with projected extensions",
                    unattacked_set=u,
                    restricted_extensions=left,
                    projected_extensions=right,
                ),
            )
    return PrincipleVerdict(True)


def decision_sets(sem, mode, base, expanded):
    mode = Mode.parse(mode)
    if mode not in (Mode.DECIDE_UNION, Mode.DECIDE_INTERSECTION):
        raise ValueError("decision checks need decide_union or decide_intersection")
    return aggregate(base, sem, mode), aggregate(expanded, sem, mode)


def check_decision_reference_independence(sem, mode, base, expanded) -> PrincipleVerdict:
    """If the expanded decision uses only old arguments it must equal the base decision."""
    _require_normal(base, expanded)
    chosen, chosen_x = decision_sets(sem, mode, base, expanded)
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


_PAIRWISE = {
    PrincipleId.WEAK_REF_INDEPENDENCE: (check_reference_independence, "weak"),
    PrincipleId.STRONG_REF_INDEPENDENCE: (check_reference_independence, "strong"),
    PrincipleId.WEAK_MONOTONY: (check_monotony, "weak"),
    PrincipleId.STRONG_MONOTONY: (check_monotony, "strong"),
    PrincipleId.WEAK_CAUTIOUS_MONOTONY: (check_cautious_monotony, "weak"),
    PrincipleId.STRONG_CAUTIOUS_MONOTONY: (check_cautious_monotony, "strong"),
    PrincipleId.WEAK_RATIONAL_MONOTONY: (check_rational_monotony, "weak"),
    PrincipleId.STRONG_RATIONAL_MONOTONY: (check_rational_monotony, "strong"),
}


def check_principle(principle, sem, base, expanded=None, mode="credulous") -> PrincipleVerdict:
    """Dispatch to the checker for ``principle``.

    Directionality looks at a single framework: ``expanded`` when given,
    else ``base``.
    """
    principle = PrincipleId.parse(principle)
    sem = Semantics.parse(sem)
    if principle is PrincipleId.DIRECTIONALITY:
        return check_directionality(sem, expanded if expanded is not None else base, mode)
    if expanded is None:
        raise ValueError(f"{principle} needs an expanded framework")
    if principle is PrincipleId.DECISION_REF_INDEPENDENCE:
        return check_decision_reference_independence(sem, mode, base, expanded)
    checker, strength = _PAIRWISE[principle]
    return checker(sem, base, expanded, strength, mode)


# -- counterexample search --------------------------------------------------


@dataclass(frozen=True)
class SearchBounds:
    """Search space for :func:`search_counterexamples`.

    Exhaustive mode walks every labelled framework on at most
    ``max_arguments`` arguments together with every base prefix, skipping
    pairs isomorphic under renamings that keep base and new arguments apart.
    Random mode draws ``count`` pairs from ``seed``.
    """

    max_arguments: int = 3
    exhaustive: bool = True
    count: int = 0
    seed: int = 0
    allow_self_attacks: bool = True
    required: ExpansionKind = ExpansionKind.NORMAL

    def __post_init__(self):
        object.__setattr__(self, "required", ExpansionKind.parse(self.required))
        if not 0 <= self.max_arguments <= MAX_PRINCIPLE_ARGUMENTS:
            raise CapacityExceeded(f"max_arguments must be in [0, {MAX_PRINCIPLE_ARGUMENTS}]")
        if self.exhaustive and self.max_arguments > MAX_EXHAUSTIVE_ARGUMENTS:
            raise CapacityExceeded(f"exhaustive search is limited to {MAX_EXHAUSTIVE_ARGUMENTS} arguments")
        if not self.exhaustive and self.count < 0:
            raise ValueError("count must be non-negative")
        if self.required is ExpansionKind.NOT_EXPANSION:
            raise ValueError("search requires an expansion kind")


@dataclass(frozen=True)
class Counterexample:
    base: ArgumentationFramework
    expanded: ArgumentationFramework
    verdict: PrincipleVerdict


def _canonical_key(n, k, attacks):
    best = None
    for p in itertools.permutations(range(k)):
        for q in itertools.permutations(range(k, n)):
            perm = p + q
            key = tuple(sorted((perm[i], perm[j]) for i, j in attacks))
            if best is None or key < best:
                best = key
    return (n, k, best)


def exhaustive_pairs(max_arguments: int, allow_self_attacks: bool = True):
    """Yield ``(base, expanded)`` normal-expansion pairs up to isomorphism.

    A normal expansion never changes attacks among old arguments, so the base
    is the restriction of the expanded framework to its first ``k`` arguments.
    """
    for n in range(max_arguments + 1):
        names = [f"a{i}" for i in range(n)]
        slots = [(i, j) for i in range(n) for j in range(n) if allow_self_attacks or i != j]
        seen = set()
        for bits in range(1 << len(slots)):
            attacks = [slots[t] for t in range(len(slots)) if bits >> t & 1]
            expanded = None
            for k in range(n + 1):
                key = _canonical_key(n, k, attacks)
                if key in seen:
                    continue
                seen.add(key)
                if expanded is None:
                    expanded = ArgumentationFramework(names, {(names[i], names[j]) for i, j in attacks})
                yield restriction(expanded, names[:k]), expanded


def random_pairs(bounds: SearchBounds):
    """Yield ``bounds.count`` seeded pairs of the required expansion kind.

    Normal and rational-man's pairs come straight from the generators; other
    kinds are drawn as normal expansions and kept only if they qualify.
    """
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        total = rng.randint(1, max(1, bounds.max_arguments))
        k = rng.randint(1, total)
        p = rng.choice((0.15, 0.25, 0.35, 0.5))
        base = generate_framework(
            GenParams(k, p, bounds.allow_self_attacks, seed=rng.getrandbits(63))
        )
        params = GenParams(
            k, p, bounds.allow_self_attacks, num_new_arguments=total - k, seed=rng.getrandbits(63)
        )
        if bounds.required is ExpansionKind.RATIONAL_MAN:
            expanded = generate_rational_mans_expansion(base, params)
        else:
            expanded = generate_normal_expansion(base, params)
            if bounds.required not in (ExpansionKind.NORMAL, ExpansionKind.EXPANSION):
                if bounds.required not in classify_expansion(base, expanded):
                    continue
        yield base, expanded


def _pair_key(pair):
    base, expanded = pair
    return (
        len(expanded),
        len(base),
        sorted(base.arguments),
        sorted(expanded.arguments),
        sorted(expanded.attacks),
    )


def search_counterexamples(sem, principle, bounds: SearchBounds, mode="credulous") -> list:
    """All pairs within ``bounds`` on which ``principle`` fails, in canonical order."""
    sem = Semantics.parse(sem)
    principle = PrincipleId.parse(principle)
    if bounds.exhaustive:
        pairs = exhaustive_pairs(bounds.max_arguments, bounds.allow_self_attacks)
        if bounds.required not in (ExpansionKind.NORMAL, ExpansionKind.EXPANSION):
            pairs = (pr for pr in pairs if bounds.required in classify_expansion(*pr))
    else:
        pairs = random_pairs(bounds)
    found = {}
    for base, expanded in pairs:
        try:
            verdict = check_principle(principle, sem, base, expanded, mode)
        except NoExtensions:
            # intersection decision undefined for extension-free stable frameworks
            continue
        if not verdict.holds:
            found.setdefault((base, expanded), verdict)
    return [Counterexample(b, x, found[(b, x)]) for b, x in sorted(found, key=_pair_key)]
