"""Reading and writing the ``arg(x). att(x,y). pref(x,y).`` fact format."""

from __future__ import annotations

import re
from typing import Union

from .errors import ParseError, UndeclaredArgument
from .framework import ArgumentationFramework
from .preferences import PreferenceBasedFramework

Framework = Union[ArgumentationFramework, PreferenceBasedFramework]

_LABEL = r"\s*([A-Za-z0-9_]+)\s*"
_STATEMENT = re.compile(
    rf"\s*(?:arg\({_LABEL}\)|(att|pref)\({_LABEL},{_LABEL}\))\s*\.\s*"
)


def _statements(line: str, lineno: int):
    pos = 0
    while pos < len(line):
        m = _STATEMENT.match(line, pos)
        if m is None:
            bad = line[pos:].strip()
            raise ParseError(lineno, f"malformed statement {bad!r}")
        yield m.groups()
        pos = m.end()


def parse_framework(text: str) -> Framework:
    """Parse a framework document.

    One or more statements per line, ``#`` starts a comment. Every label used
    by ``att`` or ``pref`` must be declared by an ``arg`` statement, earlier or
    later in the document. Any ``pref`` statement makes the result a
    :class:`PreferenceBasedFramework`.
    """
    args = set()
    pending = []  # (kind, x, y, line)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        for label, kind, x, y in _statements(line, lineno):
            if label is not None:
                args.add(label)
            else:
                pending.append((kind, x, y, lineno))
    attacks, prefs = set(), set()
    has_prefs = False
    for kind, x, y, lineno in pending:
        for label in (x, y):
            if label not in args:
                raise UndeclaredArgument(label, lineno)
        if kind == "att":
            attacks.add((x, y))
        else:
            has_prefs = True
            prefs.add((x, y))
    if has_prefs:
        return PreferenceBasedFramework(args, attacks, prefs)
    return ArgumentationFramework(args, attacks)


def serialize_framework(fw: Framework) -> str:
    lines = [f"arg({a})." for a in sorted(fw.arguments)]
    lines += [f"att({a},{b})." for a, b in sorted(fw.attacks)]
    if isinstance(fw, PreferenceBasedFramework):
        lines += [f"pref({a},{b})." for a, b in sorted(fw.prefs)]
    return "".join(line + "\n" for line in lines)
