"""Argumentation framework data model and the graph/set predicates built on it.

Frameworks are immutable values. Argument identity is the string label, and
every set-valued result is a ``frozenset`` so results compare by value. Use
:func:`canonical_set` / :func:`canonical_family` when a deterministic order
is needed (serialization, fixtures).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import networkx as nx

from .errors import CapacityExceeded, MemberOutOfFramework, NotAnScc

LABEL_PATTERN = re.compile(r"[A-Za-z0-9_]+")

# Simple-cycle enumeration is exponential in the worst case; past this many
# cycles the framework is rejected instead of silently truncated.
MAX_CYCLES = 100_000
# Largest framework for which every subset is enumerated (unattacked sets).
MAX_SUBSET_ENUMERATION = 20

ArgumentSet = frozenset  # frozenset[str]
Attack = tuple  # tuple[str, str]


def _validate_label(label) -> str:
    if not isinstance(label, str) or not LABEL_PATTERN.fullmatch(label):
        raise ValueError(f"invalid argument label {label!r}; expected [A-Za-z0-9_]+")
    return label


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite attack graph ``(arguments, attacks)``.

    ``attacks`` holds ordered ``(attacker, target)`` pairs; self-attacks are
    allowed. Any iterable is accepted for either field and normalised to a
    frozenset.
    """

    arguments: frozenset = frozenset()
    attacks: frozenset = frozenset()

    def __post_init__(self):
        args = frozenset(_validate_label(a) for a in self.arguments)
        atts = frozenset((a, b) for a, b in self.attacks)
        stray = {x for pair in atts for x in pair} - args
        if stray:
            raise MemberOutOfFramework(stray)
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", atts)

    def __repr__(self):
        args = ", ".join(self.order)
        atts = ", ".join(f"({a},{b})" for a, b in sorted(self.attacks))
        return f"ArgumentationFramework({{{args}}}, {{{atts}}})"

    def __len__(self):
        return len(self.arguments)

    # -- derived structure, computed once per value ------------------------

    @cached_property
    def order(self) -> tuple:
        """Arguments in lexicographic order; position ``i`` is bit ``1 << i``."""
        return tuple(sorted(self.arguments))

    @cached_property
    def index(self) -> dict:
        return {a: i for i, a in enumerate(self.order)}

    @cached_property
    def attacker_masks(self) -> tuple:
        masks = [0] * len(self.order)
        for a, b in self.attacks:
            masks[self.index[b]] |= 1 << self.index[a]
        return tuple(masks)

    @cached_property
    def target_masks(self) -> tuple:
        masks = [0] * len(self.order)
        for a, b in self.attacks:
            masks[self.index[a]] |= 1 << self.index[b]
        return tuple(masks)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.order)) - 1

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.order)
        g.add_edges_from(self.attacks)
        return g

    def to_mask(self, members: Iterable[str]) -> int:
        mask = 0
        for a in members:
            mask |= 1 << self.index[a]
        return mask

    def from_mask(self, mask: int) -> frozenset:
        order = self.order
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(order[i])
            mask >>= 1
            i += 1
        return frozenset(out)

    def attackers(self, a: str) -> frozenset:
        return self.from_mask(self.attacker_masks[self.index[a]])

    def targets(self, a: str) -> frozenset:
        return self.from_mask(self.target_masks[self.index[a]])

    def targets_of_set(self, mask: int) -> int:
        out = 0
        tm = self.target_masks
        i = 0
        while mask:
            if mask & 1:
                out |= tm[i]
            mask >>= 1
            i += 1
        return out

    def attackers_of_set(self, mask: int) -> int:
        out = 0
        am = self.attacker_masks
        i = 0
        while mask:
            if mask & 1:
                out |= am[i]
            mask >>= 1
            i += 1
        return out


class AttackCycle(NamedTuple):
    """Closed attack sequence ``<a_1, ..., a_n>`` with ``a_1 == a_n``.

    Always built through :meth:`from_path`, which rotates the cycle so that it
    starts at its lexicographically smallest argument.
    """

    sequence: tuple

    @classmethod
    def from_path(cls, path) -> "AttackCycle":
        path = list(path)
        if len(path) > 1 and path[0] == path[-1]:
            path = path[:-1]
        if not path:
            raise ValueError("empty cycle")
        start = path.index(min(path))
        rotated = path[start:] + path[:start]
        return cls(tuple(rotated) + (rotated[0],))

    @property
    def members(self) -> frozenset:
        return frozenset(self.sequence)

    def __str__(self):
        return "<" + ",".join(self.sequence) + ">"


class Dpu(NamedTuple):
    d: frozenset
    p: frozenset
    u: frozenset
    up: frozenset


def canonical_set(s: Iterable[str]) -> list:
    return sorted(s)


def show_set(s: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(s)) + "}"


def canonical_family(family: Iterable[Iterable[str]]) -> list:
    """Sort a family of sets by size, then by sorted member list."""
    return sorted((sorted(s) for s in family), key=lambda m: (len(m), m))


def as_set(af: ArgumentationFramework, s: Iterable[str]) -> frozenset:
    s = frozenset(s)
    stray = s - af.arguments
    if stray:
        raise MemberOutOfFramework(stray)
    return s


def _require_argument(af, a):
    if a not in af.arguments:
        raise MemberOutOfFramework([a])


def is_conflict_free(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = as_set(af, s)
    return not any(a in s and b in s for a, b in af.attacks)


def is_acceptable(af: ArgumentationFramework, a: str, s: Iterable[str]) -> bool:
    """True iff every attacker of ``a`` is attacked by some member of ``s``."""
    _require_argument(af, a)
    mask = af.to_mask(as_set(af, s))
    return af.attacker_masks[af.index[a]] & ~af.targets_of_set(mask) == 0


def is_admissible(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = as_set(af, s)
    if not is_conflict_free(af, s):
        return False
    mask = af.to_mask(s)
    return af.attackers_of_set(mask) & ~af.targets_of_set(mask) == 0


def is_strongly_admissible(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """Strong admissibility via the least fixpoint of defence inside ``s``.

    Starting from the empty set, repeatedly add members of ``s`` that are
    acceptable w.r.t. what has been collected so far. ``s`` is strongly
    admissible iff this reaches ``s`` itself: every member is then defended
    by a strictly earlier (hence strongly admissible) subset excluding it.
    """
    mask = af.to_mask(as_set(af, s))
    grown = 0
    while True:
        defended = af.targets_of_set(grown)
        nxt = grown
        rest = mask & ~grown
        i = 0
        while rest:
            if rest & 1 and af.attacker_masks[i] & ~defended == 0:
                nxt |= 1 << i
            rest >>= 1
            i += 1
        if nxt == grown:
            return grown == mask
        grown = nxt


def range_of(af: ArgumentationFramework, s: Iterable[str]) -> frozenset:
    s = as_set(af, s)
    return s | {b for a, b in af.attacks if a in s}


def restriction(af: ArgumentationFramework, s: Iterable[str]) -> ArgumentationFramework:
    s = frozenset(s) & af.arguments
    if s == af.arguments:
        return af
    return ArgumentationFramework(s, {(a, b) for a, b in af.attacks if a in s and b in s})


def is_reachable(af: ArgumentationFramework, a: str, b: str) -> bool:
    """True iff a non-empty attack sequence leads from ``a`` to ``b``.

    Not reflexive: an argument reaches itself only through an attack cycle.
    """
    _require_argument(af, a)
    _require_argument(af, b)
    return b in reachable_from(af, a)


def reachable_from(af: ArgumentationFramework, a: str) -> frozenset:
    """Arguments reachable from ``a`` by at least one attack."""
    tm = af.target_masks
    seen = 0
    frontier = tm[af.index[a]]
    while frontier:
        seen |= frontier
        nxt = 0
        i = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= tm[i]
            f >>= 1
            i += 1
        frontier = nxt & ~seen
    return af.from_mask(seen)


def attack_cycles(af: ArgumentationFramework, budget: int = MAX_CYCLES) -> frozenset:
    """All simple attack cycles, self-attacks included as ``<a,a>``."""
    out = set()
    for path in nx.simple_cycles(af.graph):
        out.add(AttackCycle.from_path(path))
        if len(out) > budget:
            raise CapacityExceeded(f"framework has more than {budget} attack cycles")
    return frozenset(out)


def cycle_arguments(af: ArgumentationFramework) -> frozenset:
    """Arguments lying on at least one attack cycle.

    Equivalent to the union of :func:`attack_cycles` members but computed from
    the SCCs, so it has no cycle budget.
    """
    out = set()
    for comp in sccs(af):
        if len(comp) > 1:
            out |= comp
    out |= {a for a, b in af.attacks if a == b}
    return frozenset(out)


def sccs(af: ArgumentationFramework) -> frozenset:
    return frozenset(frozenset(c) for c in nx.strongly_connected_components(af.graph))


def sccs_in_topological_order(af: ArgumentationFramework) -> list:
    """SCCs ordered so that every attacking component precedes its targets."""
    cond = nx.condensation(af.graph)
    members = cond.graph["mapping"]
    comps = {n: set() for n in cond.nodes}
    for arg, n in members.items():
        comps[n].add(arg)
    # lexicographic tie-break keeps the order independent of hash seeds
    order = nx.lexicographical_topological_sort(cond, key=lambda n: min(comps[n]))
    return [frozenset(comps[n]) for n in order]


def _dpu(af: ArgumentationFramework, scc: frozenset, e: frozenset) -> Dpu:
    outside_attackers = {a for a, b in af.attacks if b in scc and a not in scc}
    e_targets = {b for a, b in af.attacks if a in e}
    defeated = {b for a, b in af.attacks if a in e and a in outside_attackers and b in scc}
    d = frozenset(defeated)
    p = frozenset(
        x
        for x in scc - d
        if any(a in outside_attackers and a not in e_targets for a, b in af.attacks if b == x)
    )
    u = scc - d - p
    return Dpu(d, p, u, u | p)


def dpu_partition(af: ArgumentationFramework, scc: Iterable[str], e: Iterable[str]) -> Dpu:
    """Split an SCC into defeated / provisionally defeated / undefeated parts.

    ``d``: members attacked by an extension member outside the SCC.
    ``p``: remaining members with an outside attacker the extension leaves
    unattacked. ``u``: the rest. ``up`` is ``u | p``.
    """
    scc = frozenset(scc)
    e = as_set(af, e)
    if scc not in sccs(af):
        raise NotAnScc(f"{sorted(scc)} is not a strongly connected component")
    return _dpu(af, scc, e)


def unattacked_sets(af: ArgumentationFramework) -> frozenset:
    """Every subset receiving no attack from outside itself."""
    n = len(af)
    if n > MAX_SUBSET_ENUMERATION:
        raise CapacityExceeded(f"{n} arguments exceeds subset limit {MAX_SUBSET_ENUMERATION}")
    out = []
    for mask in range(af.full_mask + 1):
        if af.attackers_of_set(mask) & ~mask == 0:
            out.append(af.from_mask(mask))
    return frozenset(out)
