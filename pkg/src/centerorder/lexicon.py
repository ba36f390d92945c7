"""Closed-class word lists and synonym sets for reiteration detection."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

PERSONAL_PRONOUNS = frozenset(['i', 'you', 'it', 'he', 'she', 'we', 'they'])
DEMONSTRATIVE_PRONOUNS = frozenset(['this', 'that', 'these', 'those'])
DEFINITE_MARKERS = frozenset(['the', 'such', 'this', 'that', 'these', 'those'])
INDEFINITE_MARKERS = frozenset(['a', 'an', 'another', 'other'])
POSSESSIVE_MARKERS = frozenset(['its', 'his', 'her', 'our', 'your', 'their'])
PROMPTS = ('as for', 'concerning', 'with regard to')


class LexiconError(ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ''
        if path is not None:
            where += str(path)
        if line is not None:
            where += ':%d' % line
        super().__init__('%s: %s' % (where, message) if where else message)


@dataclass(frozen=True)
class Lexicon:
    synsets: tuple[frozenset, ...] = ()
    prompts: tuple[str, ...] = PROMPTS
    personal_pronouns: frozenset = PERSONAL_PRONOUNS
    demonstrative_pronouns: frozenset = DEMONSTRATIVE_PRONOUNS
    definite_markers: frozenset = DEFINITE_MARKERS
    indefinite_markers: frozenset = INDEFINITE_MARKERS
    possessive_markers: frozenset = POSSESSIVE_MARKERS
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for n, synset in enumerate(self.synsets):
            for lemma in synset:
                if lemma in index:
                    raise LexiconError('lemma %r appears in more than one synset' % lemma)
                index[lemma] = n
        object.__setattr__(self, '_index', index)

    def synonyms(self, lemma: str) -> frozenset:
        lemma = lemma.lower()
        n = self._index.get(lemma)
        return self.synsets[n] if n is not None else frozenset([lemma])


def merge_synsets(groups: Iterable[Iterable[str]]) -> tuple[frozenset, ...]:
    """Union groups that share a lemma; output order follows first appearance."""
    merged: list[set] = []
    for group in groups:
        group = {g.lower() for g in group}
        hits = [s for s in merged if s & group]
        for s in hits:
            group |= s
            merged.remove(s)
        merged.append(group)
    order = {}
    for group in merged:
        order[min(group)] = frozenset(group)
    return tuple(order[k] for k in sorted(order))


def parse_lexicon_lines(lines: Iterable[str], path=None) -> list[list[str]]:
    groups = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        lemmas = [part.strip() for part in line.split(',')]
        for lemma in lemmas:
            if not lemma:
                raise LexiconError('empty lemma in synset line', lineno, path)
            if len(lemma.split()) != 1 or '#' in lemma:
                raise LexiconError('malformed lemma %r' % lemma, lineno, path)
        groups.append(lemmas)
    return groups


def load_lexicon(path: Optional[str | os.PathLike] = None) -> Lexicon:
    """Build the default lexicon, merged with synsets read from ``path``.

    The file holds one comma-separated synset per line; ``#`` starts a
    comment line.  Synsets sharing a lemma are unioned.
    """
    if path is None:
        return Lexicon()
    try:
        with io.open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise LexiconError('cannot read lexicon: %s' % exc, path=path) from exc
    groups = parse_lexicon_lines(text.splitlines(), path)
    return Lexicon(synsets=merge_synsets(groups))


def same_lexeme(a: str, b: str, lex: Lexicon) -> bool:
    a, b = a.lower(), b.lower()
    return a == b or b in lex.synonyms(a)
