"""Constituent-order patterns: ``-V-S-O-``, ``OSVX``, ``(X-)(V-)Prim-`` ...

Grammar::

    pattern := item*
    item    := 'S' | 'V' | 'O' | 'X' | 'Prim' | '-' | '(' item+ ')'

A role letter matches one constituent of that role.  ``-`` matches any
sequence of constituents, possibly empty; letters written next to each
other must be adjacent.  A pattern without a leading (trailing) ``-`` is
anchored at the start (end) of the clause.  A parenthesised group is
optional.  The ``-`` closing a group only separates it from what follows:
``(X-)(V-)Prim-`` lets at most an adjunct and a verb precede the primary.
``Prim`` stands for S or O and is bound when the pattern is matched.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

LETTERS = ('S', 'V', 'O', 'X')
PRIM = 'Prim'


class PatternError(ValueError):
    def __init__(self, message, text, column):
        self.text = text
        self.column = column
        super().__init__('%s at column %d in %r' % (message, column, text))


class PatternUsageError(ValueError):
    """A pattern was matched without the binding it needs."""


@dataclass(frozen=True)
class Literal:
    role: str


@dataclass(frozen=True)
class Wildcard:
    pass


@dataclass(frozen=True)
class OptionalGroup:
    body: tuple


Atom = Union[Literal, Wildcard, OptionalGroup]
WILDCARD = Wildcard()


@dataclass(frozen=True)
class OrderPattern:
    atoms: tuple

    @property
    def anchored_start(self) -> bool:
        return not self.atoms or not isinstance(self.atoms[0], Wildcard)

    @property
    def anchored_end(self) -> bool:
        return not self.atoms or not isinstance(self.atoms[-1], Wildcard)

    @property
    def uses_prim(self) -> bool:
        return any(a == Literal(PRIM) for a in _flatten(self.atoms))

    def __str__(self):
        return render(self)


def _flatten(atoms):
    for a in atoms:
        if isinstance(a, OptionalGroup):
            yield from _flatten(a.body)
        else:
            yield a


def _parse_items(text, pos, in_group):
    atoms: list = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in LETTERS:
            atoms.append(Literal(ch))
            pos += 1
        elif text.startswith(PRIM, pos):
            atoms.append(Literal(PRIM))
            pos += len(PRIM)
        elif ch == '-':
            if not atoms or atoms[-1] != WILDCARD:
                atoms.append(WILDCARD)
            pos += 1
        elif ch == '(':
            if in_group:
                raise PatternError('nested optional group', text, pos)
            body, end = _parse_items(text, pos + 1, True)
            if end >= len(text) or text[end] != ')':
                raise PatternError('unbalanced parenthesis', text, pos)
            if not body:
                raise PatternError('empty optional group', text, pos)
            atoms.append(OptionalGroup(tuple(body)))
            pos = end + 1
        elif ch == ')':
            if in_group:
                return atoms, pos
            raise PatternError('unbalanced parenthesis', text, pos)
        else:
            raise PatternError('unknown symbol %r' % ch, text, pos)
    return atoms, pos


def parse_pattern(text: str) -> OrderPattern:
    atoms, _ = _parse_items(text, 0, False)
    return OrderPattern(tuple(atoms))


def _render_atoms(atoms):
    out = []
    for a in atoms:
        if isinstance(a, Literal):
            out.append(a.role)
        elif isinstance(a, Wildcard):
            out.append('-')
        else:
            out.append('(%s)' % _render_atoms(a.body))
    return ''.join(out)


def render(pattern: OrderPattern) -> str:
    return _render_atoms(pattern.atoms)


def as_pattern(p: Union[str, OrderPattern]) -> OrderPattern:
    return p if isinstance(p, OrderPattern) else parse_pattern(p)


def _bind(atoms, prim):
    out = []
    for a in atoms:
        if a == Literal(PRIM):
            if prim is None:
                raise PatternUsageError('pattern uses Prim but no binding was given')
            out.append(Literal(prim))
        elif isinstance(a, OptionalGroup):
            body = list(_bind(a.body, prim))
            # a group's closing '-' is a separator, not a gap
            if body and body[-1] == WILDCARD:
                body.pop()
            out.append(OptionalGroup(tuple(body)))
        else:
            out.append(a)
    return tuple(out)


def _match(atoms, i, order, j, memo):
    key = (i, j)
    if key in memo:
        return memo[key]
    if i == len(atoms):
        result = j == len(order)
    else:
        a = atoms[i]
        if isinstance(a, Wildcard):
            result = any(_match(atoms, i + 1, order, k, memo) for k in range(j, len(order) + 1))
        elif isinstance(a, Literal):
            result = j < len(order) and order[j] == a.role and _match(atoms, i + 1, order, j + 1, memo)
        else:
            # splice the group body in place or skip it
            expanded = atoms[:i] + a.body + atoms[i + 1:]
            result = (_match(atoms, i + 1, order, j, memo)
                      or _match(expanded, i, order, j, {}))
    memo[key] = result
    return result


def matches(p: Union[str, OrderPattern], order: Sequence[str],
            prim_binding: Optional[str] = None) -> bool:
    """True iff ``order`` (a sequence of role letters) is generated by ``p``."""
    atoms = _bind(as_pattern(p).atoms, prim_binding)
    return _match(atoms, 0, tuple(order), 0, {})


def required_roles(p: Union[str, OrderPattern], prim_binding: Optional[str] = None) -> Counter:
    """Roles the pattern needs outside optional groups, with multiplicity."""
    atoms = _bind(as_pattern(p).atoms, prim_binding)
    return Counter(a.role for a in atoms if isinstance(a, Literal))


def is_vacuous(p, prim_binding, roles: Counter) -> bool:
    need = required_roles(p, prim_binding)
    return any(roles[r] < n for r, n in need.items())


Constraint = tuple  # (pattern or tuple of alternative patterns, prim binding)


def _alternatives(constraint):
    pats, prim = constraint
    if isinstance(pats, (str, OrderPattern)):
        pats = (pats,)
    return [as_pattern(p) for p in pats], prim


def effective_constraints(constraints: Iterable[Constraint], roles: Iterable[str]) -> list:
    """Drop alternatives naming roles that are absent; drop emptied constraints."""
    have = Counter(roles)
    kept = []
    for constraint in constraints:
        pats, prim = _alternatives(constraint)
        live = [p for p in pats if not is_vacuous(p, prim, have)]
        if live:
            kept.append((tuple(live), prim))
    return kept


def permutations(roles: Iterable[str]) -> list[tuple[str, ...]]:
    """Distinct orderings of a role multiset, sorted."""
    return sorted(set(itertools.permutations(tuple(roles))))


def satisfying_orders(constraints: Iterable[Constraint], roles: Iterable[str]) -> set:
    """Every ordering of ``roles`` that meets all constraints.

    A constraint is ``(pattern, prim_binding)``; ``pattern`` may also be a
    tuple of alternatives, any one of which suffices.  Constraints naming a
    role missing from ``roles`` are skipped.
    """
    roles = tuple(roles)
    live = effective_constraints(constraints, roles)
    return {order for order in permutations(roles)
            if all(any(matches(p, order, prim) for p in pats) for pats, prim in live)}
