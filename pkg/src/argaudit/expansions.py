"""Expansion classification and seeded random framework generators.

Generators draw from :class:`random.Random` (Mersenne Twister) seeded with
the integer seed only, so a given ``GenParams`` reproduces the same
framework on every platform and Python version that keeps that generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .framework import (
    ArgumentationFramework,
    attack_cycles,
    cycle_arguments,
    reachable_from,
)


class ExpansionKind(str, Enum):
    NOT_EXPANSION = "not_expansion"
    EXPANSION = "expansion"
    NORMAL = "normal"
    NON_CYCLIC = "non_cyclic"
    RATIONAL_MAN = "rational_man"

    @classmethod
    def parse(cls, name) -> "ExpansionKind":
        if isinstance(name, cls):
            return name
        return cls(str(name).strip().lower().replace("-", "_"))

    def __str__(self):
        return self.value


_ORDER = list(ExpansionKind)


def sorted_kinds(kinds) -> list:
    return sorted(kinds, key=_ORDER.index)


def is_expansion(base: ArgumentationFramework, expanded: ArgumentationFramework) -> bool:
    return base.arguments <= expanded.arguments and base.attacks <= expanded.attacks


def is_normal_expansion(base: ArgumentationFramework, expanded: ArgumentationFramework) -> bool:
    if not is_expansion(base, expanded):
        return False
    old = base.arguments
    return not any(a in old and b in old for a, b in expanded.attacks - base.attacks)


def _new_reachable_from_cycles(base, expanded) -> bool:
    """True iff some new argument is reachable from a base argument on a cycle."""
    new = expanded.arguments - base.arguments
    if not new:
        return False
    for a in cycle_arguments(expanded) & base.arguments:
        if reachable_from(expanded, a) & new:
            return True
    return False


def classify_expansion(base: ArgumentationFramework, expanded: ArgumentationFramework) -> frozenset:
    """Every expansion relation that holds from ``base`` to ``expanded``.

    Returns ``{NOT_EXPANSION}`` when ``expanded`` does not contain ``base``.
    """
    if not is_expansion(base, expanded):
        return frozenset({ExpansionKind.NOT_EXPANSION})
    kinds = {ExpansionKind.EXPANSION}
    normal = is_normal_expansion(base, expanded)
    if normal:
        kinds.add(ExpansionKind.NORMAL)
    non_cyclic = attack_cycles(base) == attack_cycles(expanded)
    if non_cyclic:
        kinds.add(ExpansionKind.NON_CYCLIC)
    if normal and non_cyclic and not _new_reachable_from_cycles(base, expanded):
        kinds.add(ExpansionKind.RATIONAL_MAN)
    return frozenset(kinds)


@dataclass(frozen=True)
class GenParams:
    num_arguments: int = 0
    attack_probability: float = 0.3
    allow_self_attacks: bool = True
    num_new_arguments: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.num_arguments < 0 or self.num_new_arguments < 0:
            raise ValueError("argument counts must be non-negative")
        if not 0 <= self.attack_probability <= 1:
            raise ValueError("attack_probability must lie in [0, 1]")
        if not -(2**63) <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def generate_framework(params: GenParams) -> ArgumentationFramework:
    """Random framework over ``a0 .. a{n-1}``; each ordered pair drawn independently."""
    rng = random.Random(params.seed)
    names = [f"a{i}" for i in range(params.num_arguments)]
    attacks = set()
    for x in names:
        for y in names:
            if x == y and not params.allow_self_attacks:
                continue
            if rng.random() < params.attack_probability:
                attacks.add((x, y))
    return ArgumentationFramework(names, attacks)


def _fresh_names(base: ArgumentationFramework, count: int) -> list:
    names = []
    i = 0
    while len(names) < count:
        name = f"b{i}"
        if name not in base.arguments:
            names.append(name)
        i += 1
    return names


def _candidate_attacks(old: list, new: list, allow_self: bool):
    """Ordered pairs with at least one new endpoint, in a fixed order."""
    everyone = old + new
    fresh = set(new)
    for x in everyone:
        for y in everyone:
            if x not in fresh and y not in fresh:
                continue
            if x == y and not allow_self:
                continue
            yield x, y


def generate_normal_expansion(base: ArgumentationFramework, params: GenParams) -> ArgumentationFramework:
    """Add ``num_new_arguments`` fresh arguments; new attacks touch a new argument."""
    rng = random.Random(params.seed)
    new = _fresh_names(base, params.num_new_arguments)
    attacks = set(base.attacks)
    for pair in _candidate_attacks(list(base.order), new, params.allow_self_attacks):
        if rng.random() < params.attack_probability:
            attacks.add(pair)
    return ArgumentationFramework(base.arguments | set(new), attacks)


def _reaches(targets: dict, src: str, dst: str) -> bool:
    seen = set()
    stack = [src]
    while stack:
        x = stack.pop()
        for y in targets[x]:
            if y == dst:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def generate_rational_mans_expansion(base: ArgumentationFramework, params: GenParams) -> ArgumentationFramework:
    """Like :func:`generate_normal_expansion`, but drop any drawn attack that
    would close a new cycle or let a new argument be reached from a base
    argument lying on a cycle.
    """
    attack_cycles(base)  # raises CapacityExceeded for oversized inputs
    rng = random.Random(params.seed)
    new = _fresh_names(base, params.num_new_arguments)
    targets = {a: set() for a in list(base.order) + new}
    for a, b in base.attacks:
        targets[a].add(b)
    fresh = set(new)
    on_cycle = set(cycle_arguments(base))

    def tainted(x):
        # x is on, or reachable from, a cycle of the base framework
        return x in on_cycle or any(_reaches(targets, c, x) for c in on_cycle)

    attacks = set(base.attacks)
    for x, y in _candidate_attacks(list(base.order), new, params.allow_self_attacks):
        if not rng.random() < params.attack_probability:
            continue
        if x == y or _reaches(targets, y, x):
            continue  # would create a cycle
        if tainted(x):
            # y and everything y reaches would become reachable from a cycle
            downstream = {y} | {z for z in targets if _reaches(targets, y, z)}
            if downstream & fresh:
                continue
        targets[x].add(y)
        attacks.add((x, y))
    return ArgumentationFramework(base.arguments | fresh, attacks)
