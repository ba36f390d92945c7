"""Graded centering: per-NP center values, Cf/Cb and transitions.

Every NP in an utterance receives an integer center value built from the
rule families below; the utterance's discrete center is the NP with the
highest value (Cf rank breaks ties).

    Point.1-3  cleft / fronted / prompted NP           := 3
    Pron.1     resolved personal pronoun               := 3
    Pron.2     resolved demonstrative pronoun          := 2
    Non.1      indefinite (a/an/another/other)         := -1
    Non.2      anything else                           := 0
    Comp.1     reiterated head within reach            +1
    Comp.2     definite or demonstrative determiner    +1
    Comp.3     possessive determiner                   +2
    Comp.4     genitive: sum of possessor and possessed

When several derivations apply the highest value wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .lexicon import Lexicon, same_lexeme
from .model import Config, Constituent, Document, NounPhraseDescriptor, Utterance, cf_rank

INITIAL = 'Initial'
CONTINUING = 'Continuing'
SHIFTING = 'Shifting'

_POINT_RULES = {'cleft': 'Point.1', 'fronted': 'Point.2', 'prompted': 'Point.3'}
# Rules whose credit links the NP back to prior discourse.
_ANCHORING = ('Point.', 'Pron.', 'Comp.1', 'Comp.2')
# speaker/addressee pronouns have no textual antecedent unless annotated
DEICTIC = frozenset(['i', 'me', 'you', 'we', 'us'])


class SequencingError(RuntimeError):
    """Utterances were scored or planned out of order."""


@dataclass(frozen=True)
class Reiteration:
    entity: str
    distance: int
    np_id: str


@dataclass(frozen=True)
class ScoredNP:
    constituent: Constituent
    value: int
    anchored_value: int
    derivation: tuple[tuple[str, int], ...]
    entity: str
    resolved_antecedent: Optional[tuple[str, int]] = None
    # (np id, entity) for the NP and each genitive part
    part_entities: tuple[tuple[str, str], ...] = ()

    @property
    def np(self) -> NounPhraseDescriptor:
        return self.constituent.np

    @property
    def entities(self) -> tuple[str, ...]:
        seen = [self.entity]
        for _, ent in self.part_entities:
            if ent not in seen:
                seen.append(ent)
        return tuple(seen)

    @property
    def rules(self) -> str:
        """Applied rule ids grouped by family, e.g. ``Comp.1,2,4``."""
        ids = [rule for rule, _ in self.derivation]
        if any(not r.startswith('Non.2') for r in ids):
            ids = [r for r in ids if r != 'Non.2']
        families: dict[str, list[str]] = {}
        for rule in ids:
            fam, num = rule.split('.')
            nums = families.setdefault(fam, [])
            if num not in nums:
                nums.append(num)
        return ' '.join('%s.%s' % (fam, ','.join(sorted(nums)))
                        for fam, nums in families.items())

    @property
    def expression(self) -> str:
        """Value with its decomposition, e.g. ``3 = 1+1+1+0+0``."""
        terms = [c for rule, c in self.derivation if rule != 'Comp.4']
        if len(terms) <= 1:
            return str(self.value)
        return '%d = %s' % (self.value, '+'.join(str(t) for t in terms))


@dataclass(frozen=True)
class ScoredUtterance:
    utterance: Utterance
    scored: tuple[ScoredNP, ...]
    cf: tuple[ScoredNP, ...]
    cb: Optional[str]
    discrete_center: Optional[ScoredNP]
    transition: str
    preprocessed: bool = False

    @property
    def index(self) -> int:
        return self.utterance.index

    @property
    def realized_entities(self) -> frozenset:
        return frozenset(e for sn in self.scored for e in sn.entities)

    def entity_of(self, np_id: str) -> Optional[str]:
        for sn in self.scored:
            for pid, ent in sn.part_entities:
                if pid == np_id:
                    return ent
        return None

    def for_constituent(self, constituent: Optional[Constituent]) -> Optional[ScoredNP]:
        if constituent is None:
            return None
        for sn in self.scored:
            if sn.constituent.source_position == constituent.source_position:
                return sn
        return None

    def for_role(self, role: str, *, target: bool = True) -> Optional[ScoredNP]:
        return self.for_constituent(self.utterance.by_role(role, target=target))


def referential_limit(np: NounPhraseDescriptor, cfg: Config,
                      constituent: Optional[Constituent] = None) -> int:
    """Clauses scanned back for an antecedent: factor times the NP's length."""
    if cfg.use_target_lengths and constituent is not None \
            and constituent.target_length is not None:
        length = constituent.target_length
    else:
        length = len(np.words)
    return cfg.distance_factor * length


def _check_history(utt_index, history):
    if len(history) < utt_index:
        raise SequencingError('utterance %d scored with only %d prior utterances'
                              % (utt_index, len(history)))
    for i, h in enumerate(history[:utt_index]):
        if h.index != i:
            raise SequencingError('history out of order at position %d' % i)


def find_reiteration(np: NounPhraseDescriptor, utt_index: int,
                     history: Sequence[ScoredUtterance], lex: Lexicon, cfg: Config,
                     limit: Optional[int] = None) -> Optional[Reiteration]:
    """Nearest prior NP (or genitive part) sharing ``np``'s lexeme, within reach."""
    if limit is None:
        limit = referential_limit(np, cfg)
    for prior in reversed(history[:utt_index]):
        distance = utt_index - prior.index
        if distance > limit:
            break
        for sn in prior.cf:
            for part in sn.np.parts():
                if part.is_pronoun or part.genitive_parts:
                    continue
                if same_lexeme(np.head_lemma, part.head_lemma, lex):
                    return Reiteration(prior.entity_of(part.id) or part.id, distance, part.id)
    return None


def _lookup(np_id, history):
    for prior in history:
        ent = prior.entity_of(np_id)
        if ent is not None:
            return ent, prior.index
    return None


def resolve_pronoun(np: NounPhraseDescriptor, utt_index: int,
                    history: Sequence[ScoredUtterance], cfg: Config,
                    constituent: Optional[Constituent] = None) -> Optional[tuple[str, int]]:
    """Antecedent entity and utterance index for a pronoun, or None.

    Annotation wins.  First and second person pronouns stay unresolved
    without one.  Otherwise take the highest Cf-ranked NP of matching
    number in the previous utterance, looking further back only when the
    previous utterance has no candidate.
    """
    if np.antecedent is not None:
        return _lookup(np.antecedent, history[:utt_index])
    if np.head_lemma.lower() in DEICTIC:
        return None
    limit = referential_limit(np, cfg, constituent)
    for prior in reversed(history[:utt_index]):
        if utt_index - prior.index > limit:
            break
        for sn in prior.cf:
            if sn.np.number == np.number:
                return sn.entity, prior.index
    return None


@dataclass
class _Derivation:
    value: int
    entries: list = field(default_factory=list)
    entity: Optional[str] = None
    antecedent: Optional[tuple[str, int]] = None
    part_entities: list = field(default_factory=list)

    @property
    def anchored(self) -> int:
        return sum(c for rule, c in self.entries if rule.startswith(_ANCHORING))


def _determiner_credit(np):
    # One determiner slot per NP: Comp.2 and Comp.3 never stack.
    if np.determiner in ('definite', 'demonstrative'):
        return [('Comp.2', 1)]
    if np.determiner == 'possessive':
        return [('Comp.3', 2)]
    return []


def _simple_part(np, utt_index, history, lex, cfg, limit):
    """Score a non-genitive, non-pronominal NP; returns (derivation, reiteration)."""
    reit = find_reiteration(np, utt_index, history, lex, cfg, limit)
    increments = []
    if reit is not None:
        increments.append(('Comp.1', 1))
    increments.extend(_determiner_credit(np))
    entity = reit.entity if reit is not None else np.id
    composite = _Derivation(sum(c for _, c in increments), increments + [('Non.2', 0)], entity)
    composite.part_entities.append((np.id, entity))
    if np.determiner != 'indefinite':
        return composite
    non1 = _Derivation(-1, [('Non.1', -1)], entity, part_entities=[(np.id, entity)])
    # Non.1 stands unless some composite credit applies on top of the default 0.
    if increments and composite.value > non1.value:
        return composite
    return non1


def candidate_derivations(np: NounPhraseDescriptor, utt_index: int,
                          history: Sequence[ScoredUtterance], lex: Lexicon, cfg: Config,
                          constituent: Optional[Constituent] = None) -> list[_Derivation]:
    """Every legal derivation for ``np``, in tie-break order."""
    limit = referential_limit(np, cfg, constituent)
    found = []
    own_entity = np.id
    if np.is_pronoun:
        resolved = resolve_pronoun(np, utt_index, history, cfg, constituent)
        if resolved is not None:
            rule, value = ('Pron.1', 3) if np.pronoun == 'personal' else ('Pron.2', 2)
            d = _Derivation(value, [(rule, value)], resolved[0], resolved)
        else:
            d = _Derivation(0, [('Non.2', 0)], own_entity)
        d.part_entities.append((np.id, d.entity))
        found.append(d)
    elif np.genitive_parts:
        possessor, possessed = np.genitive_parts
        a = _simple_part(possessor, utt_index, history, lex, cfg, limit)
        b = _simple_part(possessed, utt_index, history, lex, cfg, limit)
        head = _determiner_credit(np)
        increments = head + [e for e in a.entries + b.entries if e[0] != 'Non.2' and e[0] != 'Non.1']
        bases = [e for e in a.entries + b.entries if e[0] in ('Non.1', 'Non.2')]
        d = _Derivation(a.value + b.value + sum(c for _, c in head),
                        [('Comp.4', 0)] + increments + bases, b.entity)
        d.part_entities = [(np.id, b.entity)] + a.part_entities + b.part_entities
        found.append(d)
        if np.determiner == 'indefinite':
            found.append(_Derivation(-1, [('Non.1', -1)], b.entity,
                                     part_entities=list(d.part_entities)))
    else:
        d = _simple_part(np, utt_index, history, lex, cfg, limit)
        found.append(d)
    if np.construction in _POINT_RULES:
        base = found[0]
        point = _Derivation(3, [(_POINT_RULES[np.construction], 3)], base.entity,
                            base.antecedent, list(base.part_entities))
        found.insert(0, point)
    if np.antecedent is not None and not np.is_pronoun:
        linked = _lookup(np.antecedent, history[:utt_index])
        if linked is not None:
            for d in found:
                d.entity = linked[0]
                if d.part_entities:
                    d.part_entities[0] = (np.id, linked[0])
    return found


def center_value(np: NounPhraseDescriptor, utt_index: int,
                 history: Sequence[ScoredUtterance], lex: Lexicon, cfg: Config,
                 constituent: Optional[Constituent] = None) -> ScoredNP:
    if constituent is None:
        constituent = Constituent('X', 0, np)
    derivations = candidate_derivations(np, utt_index, history, lex, cfg, constituent)
    best = derivations[0]
    for d in derivations[1:]:
        if d.value > best.value:
            best = d
    return ScoredNP(constituent=constituent, value=best.value,
                    anchored_value=max(best.anchored, 0),
                    derivation=tuple(best.entries), entity=best.entity,
                    resolved_antecedent=best.antecedent,
                    part_entities=tuple(best.part_entities))


def _transition(utt_index, cb, prev):
    if utt_index == 0 or prev is None:
        return INITIAL
    if cb is None and prev.cb is None:
        return INITIAL
    if cb is not None and cb == prev.cb:
        return CONTINUING
    return SHIFTING


def score_utterance(utt: Utterance, history: Sequence[ScoredUtterance],
                    lex: Lexicon, cfg: Config) -> ScoredUtterance:
    _check_history(utt.index, history)
    scored = tuple(center_value(c.np, utt.index, history, lex, cfg, c) for c in utt.nominal)
    cf = tuple(sorted(scored, key=lambda sn: cf_rank(sn.constituent)))
    discrete = None
    for sn in cf:
        if discrete is None or sn.value > discrete.value:
            discrete = sn
    prev = history[utt.index - 1] if utt.index > 0 else None
    cb = None
    if prev is not None:
        realized = prev.realized_entities
        for sn in cf:
            hit = next((e for e in sn.entities if e in realized), None)
            if hit is not None:
                cb = hit
                break
    return ScoredUtterance(utterance=utt, scored=scored, cf=cf, cb=cb,
                           discrete_center=discrete,
                           transition=_transition(utt.index, cb, prev))


def score_document(doc: Document, lex: Optional[Lexicon] = None,
                   cfg: Optional[Config] = None) -> tuple[ScoredUtterance, ...]:
    lex = lex or Lexicon()
    cfg = cfg or Config()
    history: list[ScoredUtterance] = []
    for utt in doc.utterances:
        history.append(score_utterance(utt, history, lex, cfg))
    return tuple(history)
