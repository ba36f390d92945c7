import itertools

import pytest
from hypothesis import given, strategies as st

from centerorder.patterns import (Literal, OptionalGroup, PatternError, PatternUsageError,
                                  Wildcard, matches, parse_pattern, render, required_roles,
                                  satisfying_orders)

TABLE_PATTERNS = [
    '-', '-V-O-', '-S-O-', '-V-S-O-', '-O-S-', '-V-O-S-', '-S-V-O-', '-O-V-S-', '-VS-',
    'XV-S-O-', 'XV-O-S-', 'XS-V-O-', 'S-V-OX', 'O-V-SX', 'O-VXS', 'X-', '(X-)(V-)Prim-',
    '-V-S-O', '-X-', '-S-O-V-', 'SOV', '-O-S-V-', 'OSVX', '-O-V-S', '-SV-',
]


def test_parse_examples():
    p = parse_pattern('-V-S-O-')
    assert not p.anchored_start and not p.anchored_end
    assert [a.role for a in p.atoms if isinstance(a, Literal)] == ['V', 'S', 'O']
    p = parse_pattern('OSVX')
    assert p.anchored_start and p.anchored_end
    assert p.atoms == tuple(Literal(r) for r in 'OSVX')
    p = parse_pattern('(X-)(V-)Prim-')
    assert isinstance(p.atoms[0], OptionalGroup) and isinstance(p.atoms[1], OptionalGroup)
    assert p.uses_prim and isinstance(p.atoms[-1], Wildcard)


@pytest.mark.parametrize('text, column', [
    ('S(V', 1), ('S)V', 1), ('((S))', 1), ('SQV', 1), ('S-Pri', 2)])
def test_parse_errors(text, column):
    with pytest.raises(PatternError) as info:
        parse_pattern(text)
    assert info.value.column == column
    assert 'column %d' % column in str(info.value)


def test_empty_pattern_matches_only_empty_order():
    assert matches('', []) and not matches('', ['S'])


def test_prim_needs_binding():
    with pytest.raises(PatternUsageError):
        matches('(X-)(V-)Prim-', 'OVS')


@pytest.mark.parametrize('pattern, order, prim, expected', [
    ('-V-O-', 'SVO', None, True),
    ('OSVX', 'OSV', None, False),
    ('-', '', None, True),
    ('-', 'XSOV', None, True),
    ('(X-)(V-)Prim-', 'OVS', 'O', True),
    ('(X-)(V-)Prim-', 'VOS', 'O', True),
    ('(X-)(V-)Prim-', 'OSV', 'O', True),
    ('(X-)(V-)Prim-', 'SVO', 'O', False),
    ('-V-S-O', 'VSO', None, True),
    ('-V-S-O', 'VSOX', None, False),
])
def test_matches_examples(pattern, order, prim, expected):
    assert matches(pattern, list(order), prim) is expected


@pytest.mark.parametrize('text', TABLE_PATTERNS)
def test_render_round_trip(text):
    p = parse_pattern(text)
    assert parse_pattern(render(p)) == p


def test_required_roles():
    assert required_roles('-V-S-O-') == {'V': 1, 'S': 1, 'O': 1}
    assert required_roles('(X-)(V-)Prim-', 'S') == {'S': 1}


def _set(orders):
    return {''.join(o) for o in orders}


def test_satisfying_examples():
    assert _set(satisfying_orders([('-V-O-', None), ('-S-O-', None)], 'SVO')) == {'SVO', 'VSO'}
    assert _set(satisfying_orders([], 'SV')) == {'SV', 'VS'}
    assert _set(satisfying_orders([('(X-)(V-)Prim-', 'S')], 'SVO')) == {'SVO', 'SOV', 'VSO'}
    assert _set(satisfying_orders([('(X-)(V-)Prim-', 'O')], 'SVO')) == {'OVS', 'VOS', 'OSV'}


def test_satisfying_skips_absent_roles():
    assert _set(satisfying_orders([('-V-O-', None)], 'SVX')) == _set(itertools.permutations('SVX'))


def test_alternatives_are_disjunctive():
    cons = [(('XS-V-O-', 'S-V-OX'), None)]
    assert _set(satisfying_orders(cons, 'SVOX')) == {'XSVO', 'SVOX'}


constraints = st.lists(st.tuples(st.sampled_from(TABLE_PATTERNS + ['(X-)(V-)Prim-'] * 3),
                                 st.sampled_from(['S', 'O'])), max_size=3)
role_sets = st.lists(st.sampled_from('SVOX'), min_size=1, max_size=4, unique=True)


@given(constraints, constraints, role_sets)
def test_more_constraints_fewer_orders(c1, c2, roles):
    assert satisfying_orders(c1 + c2, roles) <= satisfying_orders(c1, roles)
