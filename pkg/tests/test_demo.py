import pytest

from centerorder.demo import AnnotationError, annotate_demo, annotate_line
from centerorder.model import validate_document
from centerorder.scoring import score_document

FRAGMENT = """The scientists conducted many tests.
The tests were thorough.
The results were examined by their colleagues.
They were judged convincing.
The scientists' colleagues were impressed by the tests.
It was John who came.
It was the apples that Adam liked.
Apples, Adam likes.
As for Adam, he doesn't like apples.
Concerning the plan, we rejected it.
Only he knew the answer.
This is a test.
"""


def test_fragment_is_valid():
    d = annotate_demo(FRAGMENT)
    assert len(d.utterances) == 12
    assert validate_document(d) == []


def test_first_clause_matches_hand_annotation(scientists):
    got = annotate_line('The scientists conducted many tests.', 0)
    s, v, o = got.constituents
    assert (s.role, s.np.words, s.np.determiner) == ('S', ('The', 'scientists'), 'definite')
    assert (o.role, o.np.words, o.np.determiner) == ('O', ('many', 'tests'), 'quantifier')
    hand = scientists.utterances[0].constituents
    assert [(c.role, c.surface) for c in got.constituents] == [(c.role, c.surface) for c in hand]


def test_cleft():
    u = annotate_line('It was John who came.', 0)
    focus = u.constituents[0]
    assert focus.role == 'S' and focus.np.construction == 'cleft' and focus.np.words == ('John',)
    su = score_document(annotate_demo('It was John who came.'))[0]
    assert su.discrete_center.np.words == ('John',) and su.discrete_center.value == 3


def test_object_cleft():
    u = annotate_line('It was the apples that Adam liked.', 0)
    assert [(c.role, c.surface) for c in u.constituents][:2] == [('O', ('the', 'apples')), ('S', ('Adam',))]


def test_prompt():
    u = annotate_line("As for Adam, he doesn't like apples", 0)
    head = u.constituents[0]
    assert head.np.words == ('Adam',) and head.np.construction == 'prompted'
    assert [c.role for c in u.constituents] == ['X', 'S', 'V', 'O']


def test_fronted():
    u = annotate_line('Apples, Adam likes.', 0)
    assert (u.constituents[0].role, u.constituents[0].np.construction) == ('O', 'fronted')


def test_genitive_and_by_phrase():
    u = annotate_line("The scientists' colleagues were impressed by the tests.", 0)
    s = u.constituents[0]
    assert [p.head_lemma for p in s.np.genitive_parts] == ['scientists', 'colleagues']
    assert u.constituents[-1].role == 'X'


def test_error_names_line():
    with pytest.raises(AnnotationError) as info:
        annotate_demo('Adam came.\n\nthe of.\n')
    assert info.value.line == 3


def test_blank_lines_skipped():
    assert [u.index for u in annotate_demo('\nAdam came.\n\nEve left.\n').utterances] == [0, 1]
