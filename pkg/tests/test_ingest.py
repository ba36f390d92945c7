import io
import json
import logging

import pytest
from hypothesis import given, settings, strategies as st

from builders import SCIENTISTS, doc, nom, np, utt
from centerorder.ingest import (DanglingReferenceError, IngestError, parse_records,
                                read_document, record_lines, write_document)
from centerorder.model import Constituent, validate_document

GOOD = {'text': 'Adam came.', 'constituents': [
    {'role': 'S', 'words': ['Adam'], 'head_lemma': 'adam'}, {'role': 'V', 'words': ['came']}]}


def lines(*records):
    return [json.dumps(r) for r in records]


def test_fixture_reads(scientists):
    assert [u.text for u in scientists.utterances][0] == 'The scientists conducted many tests.'
    assert scientists.utterances[2].constituents[2].ordering_role == 'S'
    assert scientists.utterances[2].constituents[2].role == 'X'
    assert scientists.utterances[4].constituents[0].np.possessor.id == 'scientists5'


def test_read_from_stream():
    assert read_document(io.StringIO(SCIENTISTS.read_text())).utterances == \
        read_document(SCIENTISTS).utterances


def test_empty_input():
    assert parse_records([]).utterances == ()
    assert read_document(io.StringIO('\n\n')).utterances == ()


def test_bad_role_names_line_and_field():
    bad = {'text': 'x', 'constituents': [{'role': 'V', 'words': ['ran']}, {'role': 'Q', 'words': ['x']}]}
    with pytest.raises(IngestError) as info:
        parse_records(lines(GOOD, bad))
    assert info.value.line == 2 and info.value.field == 'constituents[1].role'
    assert str(info.value).startswith('line 2, constituents[1].role')


def test_malformed_json():
    with pytest.raises(IngestError) as info:
        parse_records(lines(GOOD) + ['{"text": '])
    assert info.value.line == 2


def test_dangling_antecedent():
    rec = {'text': 'He left.', 'constituents': [
        {'role': 'S', 'words': ['He'], 'head_lemma': 'he', 'pronoun': 'personal', 'antecedent_id': 'nobody'},
        {'role': 'V', 'words': ['left']}]}
    with pytest.raises(DanglingReferenceError) as info:
        parse_records(lines(GOOD, rec))
    assert info.value.field == 'constituents[0].antecedent_id'


def test_antecedent_resolves_forward_only():
    first = dict(GOOD, constituents=[dict(GOOD['constituents'][0], id='adam1'), GOOD['constituents'][1]])
    rec = {'text': 'He left.', 'constituents': [
        {'role': 'S', 'words': ['He'], 'head_lemma': 'he', 'pronoun': 'personal', 'antecedent_id': 'adam1'},
        {'role': 'V', 'words': ['left']}]}
    assert parse_records(lines(first, rec)).utterances[1].constituents[0].np.antecedent == 'adam1'
    with pytest.raises(DanglingReferenceError):
        parse_records(lines(rec, first))


def test_invariant_violation_located():
    rec = {'text': 'x', 'constituents': [{'role': 'S', 'words': ['a'], 'head_lemma': 'a'},
                                         {'role': 'S', 'words': ['b'], 'head_lemma': 'b'}]}
    with pytest.raises(IngestError) as info:
        parse_records(lines(rec))
    assert info.value.field == 'constituents[1]' and 'duplicate' in str(info.value)


def test_unknown_field_strict_and_lenient(caplog):
    rec = dict(GOOD, mood='grumpy')
    with pytest.raises(IngestError) as info:
        parse_records(lines(rec), strict=True)
    assert info.value.field == 'mood'
    with caplog.at_level(logging.WARNING):
        d = parse_records(lines(rec), strict=False)
    assert len(d.utterances) == 1 and 'mood' in caplog.text


def test_round_trip_fixture(scientists):
    again = parse_records(write_document(scientists).splitlines())
    assert again.utterances == scientists.utterances


def test_write_to_stream(scientists):
    out = io.StringIO()
    assert write_document(scientists, out) == out.getvalue()
    written = [json.loads(line) for line in out.getvalue().splitlines()]
    assert written == [json.loads(line) for line in SCIENTISTS.read_text().splitlines()]


words = st.lists(st.sampled_from(['the', 'big', 'dog', 'Adam', 'ran']), min_size=1, max_size=3)


@st.composite
def documents(draw):
    utts = []
    for u in range(draw(st.integers(0, 3))):
        roles = draw(st.lists(st.sampled_from('SVOX'), unique=True, min_size=1))
        cons = []
        for pos, role in enumerate(roles):
            w = tuple(draw(words))
            tl = draw(st.none() | st.integers(1, 4))
            if role == 'V' or draw(st.booleans()):
                cons.append(Constituent(role, pos, words=w, target_length=tl))
            else:
                descriptor = np('u%dc%d' % (u, pos), w, number=draw(st.sampled_from(['singular', 'plural'])),
                                determiner=draw(st.sampled_from(['definite', 'bare', 'possessive'])),
                                construction=draw(st.sampled_from(['none', 'cleft'])))
                cons.append(nom(role, pos, descriptor, target_length=tl))
        utts.append(utt(u, *cons, text=draw(st.text(max_size=10))))
    return doc(*utts)


@given(documents())
@settings(max_examples=100, deadline=None)
def test_round_trip_property(d):
    assert validate_document(d) == []
    assert parse_records(record_lines(write_document(d))).utterances == d.utterances


def test_antecedent_in_same_line_rejected():
    rec = {'text': 'Adam said he left.', 'constituents': [
        {'id': 'adam', 'role': 'S', 'words': ['Adam'], 'head_lemma': 'adam'},
        {'role': 'V', 'words': ['said']},
        {'role': 'O', 'words': ['he'], 'head_lemma': 'he', 'pronoun': 'personal', 'antecedent_id': 'adam'}]}
    with pytest.raises(DanglingReferenceError):
        parse_records(lines(rec))
