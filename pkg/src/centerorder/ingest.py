"""Line-delimited JSON documents: one utterance per line.

Each line is an object ``{"text": ..., "constituents": [...]}``.  A
constituent record carries ``role`` and ``words``; it is nominal when it
has a ``head_lemma``.  Optional fields: ``id``, ``number``, ``determiner``,
``pronoun``, ``construction``, ``genitive`` (``{"possessor": {...},
"possessed": {...}}``), ``antecedent_id``, ``target_role_override``,
``target_length``.
"""

from __future__ import annotations

import dataclasses
import io
import json
import logging
import os
from typing import IO, Iterable, Optional, Union

from .model import (CONSTRUCTIONS, DETERMINERS, NUMBERS, PRONOUNS, ROLES, Constituent,
                    Document, NounPhraseDescriptor, Utterance, validate_document)

log = logging.getLogger(__name__)

UTTERANCE_FIELDS = {'text', 'constituents'}
CONSTITUENT_FIELDS = {'id', 'role', 'words', 'head_lemma', 'number', 'determiner',
                      'pronoun', 'construction', 'genitive', 'antecedent_id',
                      'target_role_override', 'target_length'}
PART_FIELDS = {'id', 'words', 'head_lemma', 'number', 'determiner'}


class IngestError(ValueError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append('line %d' % line)
        if field:
            where.append(field)
        super().__init__('%s: %s' % (', '.join(where), message) if where else message)


class DanglingReferenceError(IngestError):
    """An antecedent_id names no earlier NP."""


def _check_fields(record, allowed, line, path, strict):
    unknown = sorted(set(record) - allowed)
    if not unknown:
        return
    if strict:
        raise IngestError('unknown field %r' % unknown[0], line,
                          '%s.%s' % (path, unknown[0]) if path else unknown[0])
    log.warning('line %d: ignoring unknown field(s) %s at %s', line, ', '.join(unknown), path or '.')


def _vocab(record, key, vocab, default, line, path):
    value = record.get(key, default)
    if value not in vocab:
        raise IngestError('%r is not one of %s' % (value, '|'.join(vocab)), line, '%s.%s' % (path, key))
    return value


def _words(record, line, path):
    words = record.get('words')
    if not isinstance(words, list) or not words or not all(isinstance(w, str) and w for w in words):
        raise IngestError('words must be a non-empty list of strings', line, path + '.words')
    return tuple(words)


def _part(record, np_id, line, path, strict):
    if not isinstance(record, dict):
        raise IngestError('genitive part must be an object', line, path)
    _check_fields(record, PART_FIELDS, line, path, strict)
    words = _words(record, line, path)
    lemma = record.get('head_lemma')
    if not isinstance(lemma, str) or not lemma:
        raise IngestError('head_lemma is required', line, path + '.head_lemma')
    return NounPhraseDescriptor(
        id=record.get('id', np_id), words=words, head_lemma=lemma,
        number=_vocab(record, 'number', NUMBERS, 'singular', line, path),
        determiner=_vocab(record, 'determiner', DETERMINERS, 'bare', line, path))


def _constituent(record, u, pos, line, known_ids, line_ids, strict):
    path = 'constituents[%d]' % pos
    if not isinstance(record, dict):
        raise IngestError('constituent must be an object', line, path)
    _check_fields(record, CONSTITUENT_FIELDS, line, path, strict)
    role = _vocab(record, 'role', ROLES, None, line, path)
    override = record.get('target_role_override')
    if override is not None and override not in ROLES:
        raise IngestError('%r is not one of %s' % (override, '|'.join(ROLES)), line,
                          path + '.target_role_override')
    target_length = record.get('target_length')
    if target_length is not None and (not isinstance(target_length, int)
                                      or isinstance(target_length, bool) or target_length < 1):
        raise IngestError('target_length must be a positive integer', line, path + '.target_length')
    words = _words(record, line, path)
    np = None
    if 'head_lemma' in record:
        np_id = record.get('id', 'u%dc%d' % (u, pos))
        if not isinstance(np_id, str) or not np_id:
            raise IngestError('id must be a non-empty string', line, path + '.id')
        if np_id in known_ids or np_id in line_ids:
            raise IngestError('duplicate NP id %r' % np_id, line, path + '.id')
        genitive = record.get('genitive')
        parts = None
        if genitive is not None:
            if not isinstance(genitive, dict) or set(genitive) != {'possessor', 'possessed'}:
                raise IngestError('genitive needs exactly possessor and possessed', line,
                                  path + '.genitive')
            parts = (_part(genitive['possessor'], np_id + '.possessor', line,
                           path + '.genitive.possessor', strict),
                     _part(genitive['possessed'], np_id + '.possessed', line,
                           path + '.genitive.possessed', strict))
        antecedent = record.get('antecedent_id')
        if antecedent is not None and antecedent not in known_ids:
            raise DanglingReferenceError('antecedent_id %r names no earlier NP' % antecedent,
                                         line, path + '.antecedent_id')
        np = NounPhraseDescriptor(
            id=np_id, words=words, head_lemma=record['head_lemma'],
            number=_vocab(record, 'number', NUMBERS, 'singular', line, path),
            determiner=_vocab(record, 'determiner', DETERMINERS, 'bare', line, path),
            pronoun=_vocab(record, 'pronoun', PRONOUNS, 'none', line, path),
            construction=_vocab(record, 'construction', CONSTRUCTIONS, 'none', line, path),
            genitive_parts=parts, antecedent=antecedent)
        for part in np.parts():
            line_ids.add(part.id)
    else:
        for key in ('number', 'determiner', 'pronoun', 'construction', 'genitive', 'antecedent_id', 'id'):
            if key in record:
                raise IngestError('%s given without head_lemma' % key, line, '%s.%s' % (path, key))
    return Constituent(role=role, source_position=pos, np=np,
                       words=() if np is not None else words,
                       target_length=target_length, target_role=override)


def record_lines(text: str) -> list[str]:
    """Split on newlines only; U+2028 and friends may occur inside records."""
    return text.split('\n')


def parse_records(lines: Iterable[str], *, strict: bool = True, doc_id: str = 'doc') -> Document:
    utterances = []
    known_ids: set = set()
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise IngestError('malformed record: %s' % exc.msg, lineno) from exc
        if not isinstance(record, dict):
            raise IngestError('record must be an object', lineno)
        _check_fields(record, UTTERANCE_FIELDS, lineno, '', strict)
        text = record.get('text', '')
        if not isinstance(text, str):
            raise IngestError('text must be a string', lineno, 'text')
        cons = record.get('constituents')
        if not isinstance(cons, list):
            raise IngestError('constituents must be a list', lineno, 'constituents')
        u = len(utterances)
        line_ids: set = set()
        constituents = tuple(_constituent(c, u, pos, lineno, known_ids, line_ids, strict)
                             for pos, c in enumerate(cons))
        known_ids |= line_ids
        utt = Utterance(index=u, constituents=constituents, text=text)
        problems = validate_document(Document((dataclasses.replace(utt, index=0),)))
        if problems:
            p = problems[0]
            field = 'constituents[%d]' % p.position if p.position is not None else None
            raise IngestError(p.message, lineno, field)
        utterances.append(utt)
    return Document(tuple(utterances), doc_id)


def read_document(source: Union[str, os.PathLike, IO[str]], *, strict: bool = True) -> Document:
    """Read a document from a path or an open text stream."""
    if hasattr(source, 'read'):
        return parse_records(record_lines(source.read()), strict=strict,
                             doc_id=getattr(source, 'name', 'doc'))
    with io.open(source, 'r', encoding='utf-8') as f:
        return parse_records(record_lines(f.read()), strict=strict, doc_id=os.fspath(source))


def _part_record(np: NounPhraseDescriptor) -> dict:
    rec = {'id': np.id, 'words': list(np.words), 'head_lemma': np.head_lemma}
    if np.number != 'singular':
        rec['number'] = np.number
    if np.determiner != 'bare':
        rec['determiner'] = np.determiner
    return rec


def constituent_record(c: Constituent) -> dict:
    rec: dict = {'role': c.role}
    if c.np is None:
        rec['words'] = list(c.words)
    else:
        np = c.np
        rec.update(_part_record(np))
        if np.pronoun != 'none':
            rec['pronoun'] = np.pronoun
        if np.construction != 'none':
            rec['construction'] = np.construction
        if np.genitive_parts:
            rec['genitive'] = {'possessor': _part_record(np.genitive_parts[0]),
                               'possessed': _part_record(np.genitive_parts[1])}
        if np.antecedent is not None:
            rec['antecedent_id'] = np.antecedent
    if c.target_role is not None:
        rec['target_role_override'] = c.target_role
    if c.target_length is not None:
        rec['target_length'] = c.target_length
    return rec


def utterance_record(utt: Utterance) -> dict:
    ordered = sorted(utt.constituents, key=lambda c: c.source_position)
    return {'text': utt.text, 'constituents': [constituent_record(c) for c in ordered]}


def write_document(doc: Document, stream: Optional[IO[str]] = None) -> str:
    """Serialize ``doc`` as line-delimited records; also returns the text."""
    text = ''.join(json.dumps(utterance_record(u), ensure_ascii=False) + '\n'
                   for u in doc.utterances)
    if stream is not None:
        stream.write(text)
    return text
