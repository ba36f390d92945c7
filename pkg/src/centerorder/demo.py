"""Best-effort annotator for a small English fragment.

Handles simple clauses (subject NP, one verb group, post-verbal NPs and
prepositional phrases), clefts (``It was John who came``), fronting
(``Apples, Adam likes``) and prompts (``As for Adam, he ...``).  NPs are a
closed-class determiner or a ``'s`` genitive followed by a single head
word, a pronoun, a run of capitalised words, or a bare word.  Words are
whitespace tokens, so hyphenated or multiword names are not recognised.
Hand annotation should replace its output wherever it matters.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

from .lexicon import Lexicon
from .model import Constituent, Document, NounPhraseDescriptor, Utterance

BE = {'am', 'is', 'are', 'was', 'were', 'be', 'been', 'being',
      "isn't", "aren't", "wasn't", "weren't"}
AUX = BE | {'has', 'have', 'had', 'do', 'does', 'did', 'will', 'would', 'shall', 'should',
            'can', 'could', 'may', 'might', 'must', 'cannot',
            "doesn't", "don't", "didn't", "hasn't", "haven't", "hadn't", "won't",
            "wouldn't", "can't", "couldn't", "shouldn't"}
NEGATION = {'not', 'never', "n't"}
PREPOSITIONS = {'by', 'in', 'on', 'at', 'with', 'to', 'for', 'of', 'from', 'into', 'about',
                'after', 'before', 'during', 'under', 'over', 'through', 'without'}
QUANTIFIERS = {'many', 'some', 'several', 'few', 'all', 'every', 'each', 'no', 'any', 'most',
               'both', 'much'}
OBJECT_FORMS = {'me': 'i', 'him': 'he', 'us': 'we', 'them': 'they'}
PLURAL_PRONOUNS = {'we', 'they', 'these', 'those'}
RELATIVES = {'who', 'that'}
FOCUS_PARTICLES = {'only', 'even', 'just'}


class AnnotationError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__('line %d: %s' % (line, message) if line is not None else message)


def _tokenize(text):
    tokens = []
    for raw in text.strip().rstrip('.!?').split():
        if raw.endswith(',') and len(raw) > 1:
            tokens.extend([raw[:-1], ','])
        else:
            tokens.append(raw)
    return tokens


def _lemma(token):
    t = token.lower().strip('.,;:!?"')
    if t.endswith("'s"):
        t = t[:-2]
    return t.rstrip("'")


def _number(lemma):
    if lemma in PLURAL_PRONOUNS:
        return 'plural'
    if lemma in ('this', 'its', 'his'):
        return 'singular'
    return 'plural' if lemma.endswith('s') and not lemma.endswith('ss') else 'singular'


def _is_genitive(token):
    t = token.lower()
    return t.endswith("'s") or (t.endswith("s'") and len(t) > 2)


class _Chunker:
    def __init__(self, lex: Lexicon):
        self.lex = lex

    def closed(self, tok):
        t = tok.lower()
        lex = self.lex
        return (t in AUX or t in NEGATION or t in PREPOSITIONS or t in QUANTIFIERS
                or t in RELATIVES or t == ','
                or t in lex.definite_markers or t in lex.indefinite_markers
                or t in lex.possessive_markers or t in lex.personal_pronouns
                or t in OBJECT_FORMS)

    def nounlike(self, tok):
        return tok is not None and not self.closed(tok) and not tok.lower().endswith('ed')

    def starts_np(self, tokens, i):
        if i >= len(tokens):
            return False
        t = tokens[i].lower()
        if t in AUX or t in NEGATION or t in PREPOSITIONS or t in RELATIVES or t == ',':
            return False
        return True

    def np(self, tokens, i, np_id):
        """Chunk an NP at ``tokens[i]``; returns (descriptor, next index) or None."""
        if not self.starts_np(tokens, i):
            return None
        lex = self.lex
        tok = tokens[i]
        t = tok.lower()
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None

        if t in lex.personal_pronouns or t in OBJECT_FORMS or \
                (t == 'her' and not self.nounlike(nxt)):
            lemma = OBJECT_FORMS.get(t, 'she' if t == 'her' else t)
            return NounPhraseDescriptor(np_id, (tok,), lemma, _number(lemma),
                                        pronoun='personal'), i + 1
        if t in lex.demonstrative_pronouns and not self.nounlike(nxt):
            return NounPhraseDescriptor(np_id, (tok,), t, _number(t),
                                        pronoun='demonstrative'), i + 1

        determiner = None
        if t in lex.possessive_markers:
            determiner = 'possessive'
        elif t in lex.demonstrative_pronouns:
            determiner = 'demonstrative'
        elif t in lex.definite_markers:
            determiner = 'definite'
        elif t in lex.indefinite_markers:
            determiner = 'indefinite'
        elif t in QUANTIFIERS:
            determiner = 'quantifier'
        j = i + 1 if determiner else i
        if j >= len(tokens) or not self.starts_np(tokens, j):
            if determiner:
                return None
        if j < len(tokens) and _is_genitive(tokens[j]) and j + 1 < len(tokens) \
                and self.starts_np(tokens, j + 1):
            owner, head = tokens[j], tokens[j + 1]
            parts = (NounPhraseDescriptor(np_id + '.possessor', (owner,), _lemma(owner),
                                          _number(_lemma(owner))),
                     NounPhraseDescriptor(np_id + '.possessed', (head,), _lemma(head),
                                          _number(_lemma(head))))
            words = tuple(tokens[i:j + 2])
            return NounPhraseDescriptor(np_id, words, _lemma(head), _number(_lemma(head)),
                                        determiner=determiner or 'bare',
                                        genitive_parts=parts), j + 2
        if determiner is None and tok[:1].isupper():
            end = i + 1
            while end < len(tokens) and tokens[end][:1].isupper() and not self.closed(tokens[end]):
                end += 1
            words = tuple(tokens[i:end])
        else:
            end = j + 1
            words = tuple(tokens[i:end])
        head = _lemma(words[-1])
        return NounPhraseDescriptor(np_id, words, head, _number(head),
                                    determiner=determiner or 'bare'), end

    def verb_group(self, tokens, i):
        j = i
        while j < len(tokens) and (tokens[j].lower() in AUX or tokens[j].lower() in NEGATION):
            j += 1
        auxes = [t.lower() for t in tokens[i:j]]
        if not auxes:
            if i >= len(tokens) or self.closed(tokens[i]):
                return None
            return tuple(tokens[i:i + 1]), i + 1, False
        copular = any(a in BE for a in auxes)
        if j < len(tokens) and not self.closed(tokens[j]):
            nxt = tokens[j].lower()
            if not copular or nxt.endswith('ed') or nxt.endswith('en'):
                return tuple(tokens[i:j + 1]), j + 1, copular
        return tuple(tokens[i:j]), j, copular


def _clause(ch, tokens, u, start_pos, taken):
    """Parse subject / verb group / complements; ``taken`` holds roles already used."""
    out = []
    pos = start_pos
    i = 0
    if tokens and tokens[0].lower() in FOCUS_PARTICLES:
        i = 1
    if 'S' not in taken:
        found = ch.np(tokens, i, 'u%dc%d' % (u, pos))
        if found is None:
            raise AnnotationError('no subject noun phrase found')
        subject, i = found
        out.append(Constituent('S', pos, subject))
        pos += 1
    vg = ch.verb_group(tokens, i)
    if vg is None:
        raise AnnotationError('no detectable verb group')
    words, i, copular = vg
    out.append(Constituent('V', pos, words=words))
    pos += 1
    has_object = 'O' in taken
    while i < len(tokens):
        tok = tokens[i]
        if tok == ',':
            i += 1
            continue
        if tok.lower() in PREPOSITIONS:
            found = ch.np(tokens, i + 1, 'u%dc%d' % (u, pos))
            if found is None:
                out.append(Constituent('X', pos, words=(tok,)))
                i += 1
            else:
                np, i = found
                out.append(Constituent('X', pos, np))
            pos += 1
            continue
        if copular and ch.nounlike(tok) and not tok[:1].isupper():
            out.append(Constituent('X', pos, words=(tok,)))
            pos += 1
            i += 1
            continue
        found = ch.np(tokens, i, 'u%dc%d' % (u, pos))
        if found is None:
            out.append(Constituent('X', pos, words=(tok,)))
            i += 1
        else:
            np, i = found
            role = 'X' if (copular or has_object) else 'O'
            has_object = has_object or role == 'O'
            out.append(Constituent(role, pos, np))
        pos += 1
    return out


def _mark(np, construction):
    return dataclasses.replace(np, construction=construction)


def annotate_line(text: str, u: int, lex: Optional[Lexicon] = None) -> Utterance:
    lex = lex or Lexicon()
    ch = _Chunker(lex)
    tokens = _tokenize(text)
    if not tokens:
        raise AnnotationError('empty clause')
    lowered = ' '.join(t.lower() for t in tokens)

    for prompt in sorted(lex.prompts, key=len, reverse=True):
        if lowered.startswith(prompt + ' '):
            n = len(prompt.split())
            found = ch.np(tokens, n, 'u%dc0' % u)
            if found is None:
                raise AnnotationError('prompt %r without a noun phrase' % prompt)
            np, i = found
            rest = tokens[i + 1:] if i < len(tokens) and tokens[i] == ',' else tokens[i:]
            head = Constituent('X', 0, _mark(np, 'prompted'))
            return Utterance(u, tuple([head] + _clause(ch, rest, u, 1, set())), text)

    if len(tokens) > 3 and tokens[0].lower() == 'it' and tokens[1].lower() in BE:
        found = ch.np(tokens, 2, 'u%dc0' % u)
        if found is not None and found[1] < len(tokens) and tokens[found[1]].lower() in RELATIVES:
            focus, i = found
            rest = tokens[i + 1:]
            probe = ch.np(rest, 0, 'probe')
            if probe is not None and rest[0].lower() not in AUX \
                    and ch.verb_group(rest, probe[1]) is not None:
                # "It was the apples that Adam liked": the focus is the object
                body = _clause(ch, rest, u, 1, {'O'})
                head = Constituent('O', 0, _mark(focus, 'cleft'))
            else:
                body = _clause(ch, rest, u, 1, {'S'})
                head = Constituent('S', 0, _mark(focus, 'cleft'))
            return Utterance(u, tuple([head] + body), text)

    if ',' in tokens:
        k = tokens.index(',')
        found = ch.np(tokens, 0, 'u%dc0' % u)
        if found is not None and found[1] == k:
            body = _clause(ch, tokens[k + 1:], u, 1, set())
            role = 'X' if any(c.role == 'O' for c in body) else 'O'
            head = Constituent(role, 0, _mark(found[0], 'fronted'))
            return Utterance(u, tuple([head] + body), text)

    return Utterance(u, tuple(_clause(ch, tokens, u, 0, set())), text)


def annotate_demo(text: str, lex: Optional[Lexicon] = None) -> Document:
    """Annotate clause-per-line plain text; blank lines are skipped."""
    utterances = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            utterances.append(annotate_line(line.strip(), len(utterances), lex))
        except AnnotationError as exc:
            raise AnnotationError(str(exc), lineno) from None
    return Document(tuple(utterances))
