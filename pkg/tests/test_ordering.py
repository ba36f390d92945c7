import dataclasses

import pytest
from hypothesis import given, settings, strategies as st

from builders import doc, nom, np, utt, verb
from centerorder.model import Constituent
from centerorder.ordering import (DISCRIMINATION_ROWS, ContractError, discriminate,
                                  fire_preferences, plan_orders, preprocess)
from centerorder.patterns import matches
from centerorder.scoring import SequencingError, score_document


def plan(*utterances):
    return plan_orders(score_document(doc(*utterances)))


def rules(fired, suppressed=False):
    return [f.rule for f in fired if f.suppressed == suppressed]


def test_worked_example_orders(plans):
    assert [p.rendered_orders for p in plans] == [('SVO',), ('SVX',), ('OVS',), ('V[S]X',), ('SVO',)]
    assert not any(p.fallback_used for p in plans)


def test_preprocess_examples(scored):
    effects, after = preprocess(scored[3], scored[2])
    assert [(e.rule, e.effect) for e in effects] == [('Pre.iii', 'omit S')]
    assert after.utterance.by_role('S').omitted
    assert preprocess(scored[0], None).effects == ()
    assert preprocess(scored[4], scored[3]).effects == ()


def test_preprocess_we():
    su = score_document(doc(utt(0, nom('S', 0, np('we', 'we', number='plural', pronoun='personal')),
                                verb(1), nom('O', 2, np('o', 'apples')))))[0]
    assert [e.rule for e in preprocess(su).effects] == ['Pre.i']


def test_preprocess_runs_once(scored):
    _, after = preprocess(scored[3], scored[2])
    with pytest.raises(ContractError):
        preprocess(after, scored[2])


def test_fire_preferences_examples(scored):
    assert rules(fire_preferences(scored[0], scored[1])) == ['Pref.xii', 'Pref.xiii']
    assert fire_preferences(scored[1], scored[2]) == ()
    fired = fire_preferences(scored[2], scored[3])
    assert rules(fired) == ['Pref.iiib'] and fired[0].prim == 'O'
    assert rules(fired, suppressed=True) == ['Pref.xii', 'Pref.xiii']


def test_discriminate_examples(scored):
    verdict = discriminate('VSO', scored[0], scored[1])
    assert not verdict and verdict.failing == ('Discr.iii',)
    assert discriminate('VOS', scored[2], scored[3]).failing[0] == 'Discr.v'
    verdict = discriminate('SOV', scored[4], None)
    assert verdict.matched == ('Discr.vi', 'Discr.vii') and verdict.failing == ('Discr.vii',)
    assert discriminate('VSO', scored[4], None).failing[0] == 'Discr.i'


def test_no_row_matches_svo():
    assert not any(matches(pattern, 'SVO') for _, pattern, _, _ in DISCRIMINATION_ROWS)


def test_single_plain_clause():
    p = plan(utt(0, nom('S', 0, np('s', 'Adam')), verb(1), nom('O', 2, np('o', 'apples'))))[0]
    assert p.final_orders == (tuple('SVO'),)
    assert p.exclusions == ((tuple('VSO'), 'Discr.iii'),)


def test_verb_and_adjunct_keep_source_order():
    p = plan(utt(0, verb(0), Constituent('X', 1, words=('home',))))[0]
    assert p.fired_preferences == () and p.final_orders == (('V', 'X'),)


def _pref_ii_fires(s_det):
    u = utt(0, nom('S', 0, np('s', 'x men', determiner=s_det)), verb(1), nom('O', 2, np('o', 'apples')))
    return 'Pref.ii' in rules(fire_preferences(score_document(doc(u))[0]))


def test_pref_ii_needs_difference_two():
    assert _pref_ii_fires('possessive')      # 2 vs 0
    assert not _pref_ii_fires('definite')    # 1 vs 0


def test_fallback_to_all_permutations():
    p = plan(utt(0, nom('S', 0, np('s', 'a man', determiner='indefinite')), verb(1),
                 nom('O', 2, np('o', 'a dog', determiner='indefinite'))))[0]
    assert rules(p.fired_preferences) == ['Pref.i', 'Pref.i']
    assert p.fallback_stage == 1 and len(p.candidates) == 6
    assert p.rendered_orders == ('SVO', 'OVS')


def test_fallback_to_source_order():
    p = plan(utt(0, verb(0), nom('O', 1, np('o', 'big red apples')), nom('S', 2, np('s', 'Adam')),
                 Constituent('X', 3, words=('today',))))[0]
    assert rules(p.fired_preferences) == ['Pref.vi']
    assert p.exclusions == ((tuple('XVOS'), 'Discr.iv'),)
    assert p.fallback_stage == 2 and p.final_orders == (tuple('VOSX'),)


def test_focus_binding():
    p = plan(utt(0, nom('S', 0, np('s', 'he', pronoun='personal')), verb(1),
                 nom('O', 2, np('o', 'the answer', determiner='definite')),
                 text='Only he knew the answer.'))[0]
    assert [e.rule for e in p.preprocessing_effects] == ['Pre.v']
    assert p.active_preferences == ()
    assert p.rendered_orders == ('SVO',)


def test_forced_order():
    p = plan(utt(0, nom('S', 0, np('s', 'Adam')), verb(1), nom('O', 2, np('o', 'it', pronoun='personal'))))[0]
    assert p.forced and p.final_orders == (tuple('SOV'),) and p.exclusions == ()


def test_sequencing_errors(scored):
    with pytest.raises(SequencingError):
        plan_orders([scored[1]])
    with pytest.raises(SequencingError):
        plan_orders(doc().utterances + (scored[0].utterance,))


def test_replanning_is_identical(scored):
    assert plan_orders(scored) == plan_orders(scored)


# -- randomized clauses -----------------------------------------------------

DETS = ['definite', 'indefinite', 'possessive', 'quantifier', 'bare']


@st.composite
def clauses(draw):
    roles = draw(st.lists(st.sampled_from('SOX'), unique=True, max_size=3))
    order = draw(st.permutations(roles + ['V']))
    cons = []
    for pos, role in enumerate(order):
        if role == 'V':
            cons.append(verb(pos))
        elif draw(st.booleans()) and role != 'X':
            cons.append(nom(role, pos, np('p%d' % pos, 'it', pronoun='personal')))
        else:
            words = ' '.join(['x'] * draw(st.integers(0, 3)) + [draw(st.sampled_from('abc'))])
            cons.append(nom(role, pos, np('n%d' % pos, words, determiner=draw(st.sampled_from(DETS)))))
    return cons


@given(st.lists(clauses(), min_size=1, max_size=3))
@settings(max_examples=150, deadline=None)
def test_engine_invariants(clause_list):
    scored = score_document(doc(*[utt(i, *c) for i, c in enumerate(clause_list)]))
    for k, p in enumerate(plan_orders(scored)):
        assert p.final_orders
        su = dataclasses.replace(scored[k], preprocessed=False)
        current = preprocess(su, scored[k - 1] if k else None).utterance
        nxt = scored[k + 1] if k + 1 < len(scored) else None
        for order, rule in p.exclusions:
            assert rule in discriminate(order, current, nxt).failing
        if sorted(p.source_order) == ['O', 'S', 'V'] and tuple('SVO') in p.candidates:
            assert tuple('SVO') not in [o for o, _ in p.exclusions]
