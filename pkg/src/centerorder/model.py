"""Shared data model: documents, utterances, constituents and NP annotations.

All objects are frozen dataclasses.  Grammatical roles come in two flavours:
``role`` is the role in the English source clause (it drives Cf ranking and
subject comparison), ``target_role`` optionally overrides it for the clause
as rendered in Polish (it drives ordering).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

ROLES = ('S', 'V', 'O', 'X')
PRIMARY_ROLES = ('S', 'O')
NUMBERS = ('singular', 'plural')
DETERMINERS = ('definite', 'indefinite', 'demonstrative', 'possessive',
               'quantifier', 'bare')
PRONOUNS = ('personal', 'demonstrative', 'none')
CONSTRUCTIONS = ('cleft', 'fronted', 'prompted', 'none')

# Role class used for Cf ranking: subjects outrank objects outrank adjuncts.
_CF_ROLE_CLASS = {'S': 0, 'O': 1, 'X': 2}


class UndefinedRankError(ValueError):
    """Raised when a constituent without an NP is given a Cf rank."""


@dataclass(frozen=True)
class NounPhraseDescriptor:
    id: str
    words: tuple[str, ...]
    head_lemma: str
    number: str = 'singular'
    determiner: str = 'bare'
    pronoun: str = 'none'
    construction: str = 'none'
    genitive_parts: Optional[tuple['NounPhraseDescriptor', 'NounPhraseDescriptor']] = None
    antecedent: Optional[str] = None

    @property
    def is_pronoun(self) -> bool:
        return self.pronoun != 'none'

    @property
    def possessor(self) -> Optional['NounPhraseDescriptor']:
        return self.genitive_parts[0] if self.genitive_parts else None

    @property
    def possessed(self) -> Optional['NounPhraseDescriptor']:
        return self.genitive_parts[1] if self.genitive_parts else None

    def parts(self):
        """Yield this NP followed by its genitive components, if any."""
        yield self
        if self.genitive_parts:
            yield from self.genitive_parts


@dataclass(frozen=True)
class Constituent:
    role: str
    source_position: int
    np: Optional[NounPhraseDescriptor] = None
    words: tuple[str, ...] = ()
    target_length: Optional[int] = None
    target_role: Optional[str] = None
    omitted: bool = False

    @property
    def ordering_role(self) -> str:
        """Role of the constituent in the target (Polish) clause."""
        return self.target_role or self.role

    @property
    def surface(self) -> tuple[str, ...]:
        return self.np.words if self.np is not None else self.words

    @property
    def length(self) -> int:
        """Word count used by length comparisons."""
        if self.target_length is not None:
            return self.target_length
        return max(len(self.surface), 1)


@dataclass(frozen=True)
class Utterance:
    index: int
    constituents: tuple[Constituent, ...]
    text: str = ''

    def by_role(self, role: str, *, target: bool = True) -> Optional[Constituent]:
        """The first constituent with the given role (target role by default)."""
        for c in self.constituents:
            if (c.ordering_role if target else c.role) == role:
                return c
        return None

    @property
    def nominal(self) -> tuple[Constituent, ...]:
        return tuple(c for c in self.constituents if c.np is not None)


@dataclass(frozen=True)
class Document:
    utterances: tuple[Utterance, ...] = ()
    id: str = 'doc'


@dataclass(frozen=True)
class Config:
    distance_factor: int = 2
    use_target_lengths: bool = False
    lexicon_path: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.distance_factor, int) or self.distance_factor < 1:
            raise ValueError('distance_factor must be a positive integer, '
                             'got %r' % (self.distance_factor,))


@dataclass(frozen=True)
class Violation:
    utterance: int
    position: Optional[int]
    message: str

    def __str__(self):
        where = 'utterance %d' % self.utterance
        if self.position is not None:
            where += ', constituent %d' % self.position
        return '%s: %s' % (where, self.message)


def cf_rank(constituent: Constituent) -> tuple[int, int]:
    """Cf ranking key for an NP-bearing constituent; lower ranks higher.

    Uses the source role, so a passive by-phrase agent ranks as an adjunct
    even when it becomes the Polish subject.
    """
    if constituent.np is None:
        raise UndefinedRankError(
            'constituent at position %d (%s) has no NP and no Cf rank'
            % (constituent.source_position, constituent.role))
    return (_CF_ROLE_CLASS.get(constituent.role, 3), constituent.source_position)


def _np_violations(np, u, pos, nested=False):
    out = []
    if not np.words:
        out.append(Violation(u, pos, 'NP %s has no words' % np.id))
    if np.number not in NUMBERS:
        out.append(Violation(u, pos, 'NP %s: bad number %r' % (np.id, np.number)))
    if np.determiner not in DETERMINERS:
        out.append(Violation(u, pos, 'NP %s: bad determiner %r' % (np.id, np.determiner)))
    if np.pronoun not in PRONOUNS:
        out.append(Violation(u, pos, 'NP %s: bad pronoun class %r' % (np.id, np.pronoun)))
    if np.construction not in CONSTRUCTIONS:
        out.append(Violation(u, pos, 'NP %s: bad construction %r' % (np.id, np.construction)))
    if np.pronoun != 'none' and (np.determiner != 'bare' or np.genitive_parts):
        out.append(Violation(u, pos, 'NP %s: pronoun must be bare and non-genitive' % np.id))
    if np.genitive_parts is not None:
        if nested:
            out.append(Violation(u, pos, 'NP %s: genitive nested more than one level' % np.id))
        elif len(np.genitive_parts) != 2:
            out.append(Violation(u, pos, 'NP %s: genitive needs exactly two parts' % np.id))
        else:
            for part in np.genitive_parts:
                out.extend(_np_violations(part, u, pos, nested=True))
    return out


def validate_document(doc: Document) -> list[Violation]:
    """Check every model invariant; violations are returned, never raised."""
    violations = []
    for i, utt in enumerate(doc.utterances):
        if utt.index != i:
            violations.append(Violation(i, None, 'utterance index %d out of sequence' % utt.index))
        positions = sorted(c.source_position for c in utt.constituents)
        if positions != list(range(len(utt.constituents))):
            violations.append(Violation(i, None, 'source positions are not distinct and contiguous from 0'))
        seen = {'role': Counter(), 'target role': Counter()}
        reported = set()
        for c in utt.constituents:
            for kind, role in (('role', c.role), ('target role', c.ordering_role)):
                seen[kind][role] += 1
                if role in ('S', 'V', 'O') and seen[kind][role] == 2 \
                        and (c.source_position, role) not in reported:
                    reported.add((c.source_position, role))
                    violations.append(Violation(i, c.source_position,
                                                'duplicate %s %s' % (kind, role)))
        for c in utt.constituents:
            pos = c.source_position
            if c.role not in ROLES:
                violations.append(Violation(i, pos, 'unknown role %r' % c.role))
            if c.target_role is not None and c.target_role not in ROLES:
                violations.append(Violation(i, pos, 'unknown target role %r' % c.target_role))
            if (c.role == 'V' or c.target_role == 'V') and c.np is not None:
                violations.append(Violation(i, pos, 'verb constituent carries an NP'))
            if c.target_length is not None and c.target_length < 1:
                violations.append(Violation(i, pos, 'target_length must be positive'))
            if c.np is not None:
                violations.extend(_np_violations(c.np, i, pos))
    return violations
