"""Three-stage constituent ordering for the Polish target clause.

Per utterance: the preprocessing table runs once (0-anaphora and special
constructions), the preference table builds candidate orders, and the
discrimination table filters them.  Orders are tuples of role letters
over the realized (non-omitted) constituents.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

from .model import Constituent
from .patterns import effective_constraints, matches, permutations, satisfying_orders
from .scoring import CONTINUING, ScoredUtterance, SequencingError

Order = tuple  # tuple[str, ...]


class ContractError(RuntimeError):
    """An engine stage was invoked in a way the pipeline forbids."""


@dataclass(frozen=True)
class PreprocessingEffect:
    rule: str
    effect: str  # 'omit S' | 'force order' | 'mark focus-binding'
    detail: str = ''


@dataclass(frozen=True)
class FiredPreference:
    rule: str
    constraint: str
    prim: Optional[str] = None
    suppressed: bool = False
    # rules sharing a group are alternatives for the same condition
    group: str = ''


@dataclass(frozen=True)
class Verdict:
    matched: tuple[str, ...]
    failing: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failing

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class OrderPlan:
    utterance_index: int
    preprocessing_effects: tuple[PreprocessingEffect, ...]
    fired_preferences: tuple[FiredPreference, ...]
    candidates: tuple[Order, ...]
    exclusions: tuple[tuple[Order, str], ...]
    final_orders: tuple[Order, ...]
    fallback_stage: int = 0
    source_order: Order = ()
    omitted: tuple[tuple[str, int], ...] = ()
    full_roles: tuple[str, ...] = ()

    @property
    def fallback_used(self) -> bool:
        return self.fallback_stage > 0

    @property
    def forced(self) -> bool:
        return any(e.effect == 'force order' for e in self.preprocessing_effects)

    @property
    def active_preferences(self) -> tuple[FiredPreference, ...]:
        return tuple(f for f in self.fired_preferences if not f.suppressed)

    def render(self, order: Order) -> str:
        """Order with omitted constituents shown in brackets, e.g. ``V[S]X``."""
        cells = list(order)
        constraints = _constraints_of(self.active_preferences, self.preprocessing_effects)
        for role, pos in self.omitted:
            full = effective_constraints(constraints, list(order) + [role])
            slot = None
            for k in range(len(cells) + 1):
                trial = [c.strip('[]') for c in cells[:k]] + [role] + \
                        [c.strip('[]') for c in cells[k:]]
                if full and all(any(matches(p, trial, prim) for p in pats)
                                for pats, prim in full):
                    slot = k
                    break
            if slot is None:
                slot = min(pos, len(cells))
            cells.insert(slot, '[%s]' % role)
        return ''.join(cells)

    @property
    def rendered_orders(self) -> tuple[str, ...]:
        return tuple(self.render(o) for o in self.final_orders)


class Preprocessed(NamedTuple):
    effects: tuple[PreprocessingEffect, ...]
    utterance: ScoredUtterance


# -- clause accessors ------------------------------------------------------

def _constituent(su: ScoredUtterance, role: str, realized_only=False) -> Optional[Constituent]:
    for c in su.utterance.constituents:
        if c.ordering_role == role and not (realized_only and c.omitted):
            return c
    return None


def _realized(su: ScoredUtterance) -> list[Constituent]:
    return sorted((c for c in su.utterance.constituents if not c.omitted),
                  key=lambda c: c.source_position)


def source_order(su: ScoredUtterance) -> Order:
    return tuple(c.ordering_role for c in _realized(su))


def pron(su: ScoredUtterance, role: str) -> bool:
    c = _constituent(su, role)
    return c is not None and c.np is not None and c.np.is_pronoun


def length(su: ScoredUtterance, role: str) -> int:
    c = _constituent(su, role, realized_only=True)
    return c.length if c is not None else 0


def center(su: ScoredUtterance, c: Constituent) -> int:
    sn = su.for_constituent(c)
    return sn.value if sn is not None else 0


def next_center(su: ScoredUtterance, role: str, nxt: Optional[ScoredUtterance]) -> int:
    """Center value, in the next utterance, of the entity filling ``role`` here."""
    if nxt is None:
        return 0
    sn = su.for_role(role)
    if sn is None:
        return 0
    for other in nxt.cf:
        if sn.entity in other.entities:
            return other.value
    return 0


def discrete_center_prim(su: ScoredUtterance) -> Optional[str]:
    """Primary role holding the ordering-relevant discrete center, if any.

    Needs a non-initial utterance with both primaries realized, and a unique
    maximum anchored value of at least 1.
    """
    if su.index == 0:
        return None
    s = su.for_constituent(_constituent(su, 'S', realized_only=True))
    o = su.for_constituent(_constituent(su, 'O', realized_only=True))
    if s is None or o is None:
        return None
    if max(s.anchored_value, o.anchored_value) < 1 or s.anchored_value == o.anchored_value:
        return None
    return 'S' if s.anchored_value > o.anchored_value else 'O'


# -- preprocessing table ---------------------------------------------------

def _subject_is_we(su, prev):
    c = _constituent(su, 'S', realized_only=True)
    return c is not None and c.np is not None and \
        [w.lower() for w in c.np.words] == ['we']


def _both_pronominal(su, prev):
    return pron(su, 'S') and pron(su, 'O')


def _same_subject(su, prev):
    if prev is None or not pron(su, 'S'):
        return False
    here = su.for_role('S', target=False)
    there = prev.for_role('S', target=False)
    return here is not None and there is not None and here.entity == there.entity


def _continuing(su, prev):
    return su.transition == CONTINUING


def _focus_only(su, prev):
    s = _constituent(su, 'S')
    if s is None or not pron(su, 'S'):
        return False
    tokens = [t.strip('.,;:!?"').lower() for t in su.utterance.text.split()]
    first = s.surface[0].lower() if s.surface else None
    return any(a == 'only' and b == first for a, b in zip(tokens, tokens[1:]))


def _no_adjunct_pron_object(su, prev):
    return _constituent(su, 'X') is None and pron(su, 'O')


ZERO_ANAPHORA_ROWS: tuple[tuple[str, str, Callable], ...] = (
    ('Pre.i', "S='we'", _subject_is_we),
    ('Pre.ii', 'pron(O) & pron(S)', _both_pronominal),
    ('Pre.iii', 'Sub(U_n) = Sub(U_n-1) & pron(S)', _same_subject),
    ('Pre.iv', 'center_continuing(U_n)', _continuing),
)

SPECIAL_ROWS: tuple[tuple[str, str, Callable], ...] = (
    ('Pre.v', "- 'only' SV- & pron(S)", _focus_only),
    ('Pre.vi', 'X=[] & pron(O)', _no_adjunct_pron_object),
)

FOCUS_CONSTRAINT = '-SV-'


def _omit(su: ScoredUtterance, role: str) -> ScoredUtterance:
    def swap(c):
        return dataclasses.replace(c, omitted=True) if c.ordering_role == role else c
    utt = dataclasses.replace(su.utterance,
                              constituents=tuple(swap(c) for c in su.utterance.constituents))
    scored = tuple(dataclasses.replace(sn, constituent=swap(sn.constituent)) for sn in su.scored)
    cf = tuple(dataclasses.replace(sn, constituent=swap(sn.constituent)) for sn in su.cf)
    dc = su.discrete_center
    if dc is not None:
        dc = dataclasses.replace(dc, constituent=swap(dc.constituent))
    return dataclasses.replace(su, utterance=utt, scored=scored, cf=cf, discrete_center=dc)


def preprocess(utt: ScoredUtterance, prev: Optional[ScoredUtterance] = None) -> Preprocessed:
    """Apply the preprocessing table once; returns the effects and the updated utterance.

    At most one 0-anaphora row and at most one special-construction row
    apply, each the first that holds.
    """
    if utt.preprocessed:
        raise ContractError('utterance %d has already been preprocessed' % utt.index)
    effects = []
    current = utt
    if _constituent(utt, 'S', realized_only=True) is not None:
        for rule, _, holds in ZERO_ANAPHORA_ROWS:
            if holds(utt, prev):
                effects.append(PreprocessingEffect(rule, 'omit S', 'S=[]'))
                current = _omit(current, 'S')
                break
    for rule, _, holds in SPECIAL_ROWS:
        if holds(utt, prev):
            if rule == 'Pre.v':
                effects.append(PreprocessingEffect(rule, 'mark focus-binding', 'tylko'))
            else:
                realized = set(source_order(current))
                forced = ''.join(r for r in 'SOV' if r in realized)
                effects.append(PreprocessingEffect(rule, 'force order', forced))
            break
    return Preprocessed(tuple(effects), dataclasses.replace(current, preprocessed=True))


# -- preference table ------------------------------------------------------

# Statistical rows: (rule, condition on the incoming order, needs frontal X, preference)
STATISTICAL_ROWS = (
    ('Pref.iv', '-V-S-O-', False, 'XV-S-O-'),
    ('Pref.v', '-O-S-', True, 'XV-O-S-'),
    ('Pref.vi', '-V-O-S-', False, 'XV-O-S-'),
    ('Pref.vii', '-S-V-O-', False, 'XS-V-O-'),
    ('Pref.viii', '-S-V-O-', False, 'S-V-OX'),
    ('Pref.ix', '-O-V-S-', False, 'O-V-SX'),
    ('Pref.x', '-O-V-S-', False, 'O-VXS'),
)
DEFAULT_ROWS = (
    ('Pref.xii', '-V-O-', ('V', 'O')),
    ('Pref.xiii', '-S-O-', ('S', 'O')),
)


def fire_preferences(utt: ScoredUtterance,
                     next: Optional[ScoredUtterance] = None) -> tuple[FiredPreference, ...]:
    fired = []
    realized = _realized(utt)
    nominal = [c for c in realized if c.np is not None]

    for c in nominal:
        if center(utt, c) < 0:
            fired.append(FiredPreference('Pref.i', '-' + c.ordering_role,
                                         group='i:%d' % c.source_position))
    for a in nominal:
        for b in nominal:
            if a is not b and center(utt, a) - center(utt, b) >= 2:
                fired.append(FiredPreference(
                    'Pref.ii', '-%s-%s-' % (a.ordering_role, b.ordering_role),
                    group='ii:%d:%d' % (a.source_position, b.source_position)))
    for c in nominal:
        if c.ordering_role == 'X' and center(utt, c) > 1:
            fired.append(FiredPreference('Pref.iii', 'X-', group='iii:%d' % c.source_position))
    prim = discrete_center_prim(utt)
    if prim is not None:
        fired.append(FiredPreference('Pref.iiib', '(X-)(V-)Prim-', prim, group='iiib'))

    incoming = source_order(utt)
    if 'X' in incoming:
        for rule, condition, frontal, preference in STATISTICAL_ROWS:
            if frontal and incoming[0] != 'X':
                continue
            if matches(condition, incoming):
                fired.append(FiredPreference(rule, preference, group=condition))

    present = {c.ordering_role for c in utt.utterance.constituents}
    if pron(utt, 'S') and 'V' in present:
        fired.append(FiredPreference('Pref.xi', '-VS-', group='xi'))

    realized_roles = {c.ordering_role for c in realized}
    suppressed = bool(fired)
    for rule, pattern, needs in DEFAULT_ROWS:
        if all(r in realized_roles for r in needs):
            fired.append(FiredPreference(rule, pattern, suppressed=suppressed, group=rule))
    return tuple(fired)


# -- discrimination table --------------------------------------------------

DISCRIMINATION_ROWS = (
    ('Discr.i', '-V-S-O-', 'length(S) <= length(O)',
     lambda o, u, n: length(u, 'S') <= length(u, 'O')),
    ('Discr.ii', '-V-S-O-', '-V-S-O',
     lambda o, u, n: matches('-V-S-O', o)),
    ('Discr.iii', '-V-S-O-', 'Pron(S)',
     lambda o, u, n: pron(u, 'S')),
    ('Discr.iv', '-V-O-S-', 'length(O) <= length(S)',
     lambda o, u, n: length(u, 'O') <= length(u, 'S')),
    ('Discr.v', '-V-O-S-', '-X- present',
     lambda o, u, n: matches('-X-', o)),
    ('Discr.vi', '-S-O-V-', 'SOV',
     lambda o, u, n: matches('SOV', o)),
    ('Discr.vii', '-S-O-V-', 'center(S, U_n+1) > 0',
     lambda o, u, n: next_center(u, 'S', n) > 0),
    ('Discr.viii', '-O-S-V-', 'OSVX',
     lambda o, u, n: matches('OSVX', o)),
    ('Discr.ix', '-O-S-V-', 'length(O) >= length(S)',
     lambda o, u, n: length(u, 'O') >= length(u, 'S')),
    ('Discr.x', '-O-V-S', 'length(O) >= length(S)',
     lambda o, u, n: length(u, 'O') >= length(u, 'S')),
)


def discriminate(order: Sequence[str], utt: ScoredUtterance,
                 next: Optional[ScoredUtterance] = None) -> Verdict:
    """Evaluate every discrimination row whose order pattern matches ``order``."""
    order = tuple(order)
    matched, failing = [], []
    for rule, pattern, _, condition in DISCRIMINATION_ROWS:
        if matches(pattern, order):
            matched.append(rule)
            if not condition(order, utt, next):
                failing.append(rule)
    return Verdict(tuple(matched), tuple(failing))


# -- planning --------------------------------------------------------------

def _constraints_of(fired, effects):
    groups: dict[str, list] = {}
    prims: dict[str, Optional[str]] = {}
    for f in fired:
        if f.suppressed:
            continue
        groups.setdefault(f.group, []).append(f.constraint)
        prims[f.group] = f.prim
    constraints = [(tuple(pats), prims[g]) for g, pats in groups.items()]
    for e in effects:
        if e.effect == 'mark focus-binding':
            constraints.append((FOCUS_CONSTRAINT, None))
    return constraints


def _sort_key(order):
    untouched = not any(matches(pattern, order) for _, pattern, _, _ in DISCRIMINATION_ROWS)
    return (0 if untouched else 1, ''.join(order))


def plan_utterance(su: ScoredUtterance, prev: Optional[ScoredUtterance] = None,
                   nxt: Optional[ScoredUtterance] = None) -> OrderPlan:
    effects, current = preprocess(su, prev)
    fired = fire_preferences(current, nxt)
    if any(e.effect == 'mark focus-binding' for e in effects):
        # the focus pattern replaces preference building
        fired = tuple(dataclasses.replace(f, suppressed=True) for f in fired)
    realized = source_order(current)
    omitted = tuple((c.ordering_role, c.source_position)
                    for c in current.utterance.constituents if c.omitted)
    common = dict(utterance_index=su.index, preprocessing_effects=effects,
                  fired_preferences=fired, source_order=realized, omitted=omitted,
                  full_roles=tuple(c.ordering_role for c in su.utterance.constituents))

    forced = next((e for e in effects if e.effect == 'force order'), None)
    if forced is not None:
        # a forced order bypasses preference building and discrimination
        order = tuple(forced.detail)
        return OrderPlan(candidates=(order,), exclusions=(), final_orders=(order,), **common)

    constraints = effective_constraints(_constraints_of(fired, effects), realized)
    stage = 0
    if not constraints:
        candidates = {realized}
    else:
        candidates = satisfying_orders(constraints, realized)
        if not candidates:
            stage = 1
            candidates = set(permutations(realized))
    candidates = sorted(candidates, key=lambda o: ''.join(o))
    exclusions, survivors = [], []
    for order in candidates:
        verdict = discriminate(order, current, nxt)
        if verdict:
            survivors.append(order)
        else:
            exclusions.append((order, verdict.failing[0]))
    if not survivors:
        stage = 2
        survivors = [realized]
    return OrderPlan(candidates=tuple(candidates), exclusions=tuple(exclusions),
                     final_orders=tuple(sorted(survivors, key=_sort_key)),
                     fallback_stage=stage, **common)


def plan_orders(doc: Sequence[ScoredUtterance]) -> tuple[OrderPlan, ...]:
    """Plan every utterance of a scored document in sequence."""
    doc = tuple(doc)
    for i, su in enumerate(doc):
        if not isinstance(su, ScoredUtterance):
            raise SequencingError('item %d is not a scored utterance; score the document first' % i)
        if su.index != i:
            raise SequencingError('scored utterance %d found at position %d' % (su.index, i))
    plans = []
    for i, su in enumerate(doc):
        prev = doc[i - 1] if i > 0 else None
        nxt = doc[i + 1] if i + 1 < len(doc) else None
        plans.append(plan_utterance(su, prev, nxt))
    return tuple(plans)
