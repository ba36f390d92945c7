"""Report records and text tables for analyses and order plans."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .ingest import record_lines
from .ordering import OrderPlan
from .scoring import ScoredNP, ScoredUtterance


def _heads(scored: Sequence[ScoredUtterance]) -> dict:
    heads = {}
    for su in scored:
        for sn in su.scored:
            for part in sn.np.parts():
                heads.setdefault(part.id, part.head_lemma)
    return heads


def center_label(sn: ScoredNP, heads: dict) -> str:
    word = sn.np.head_lemma
    if sn.np.is_pronoun and sn.resolved_antecedent is not None:
        return '%s = %s' % (word, heads.get(sn.resolved_antecedent[0], sn.resolved_antecedent[0]))
    return word


def analysis_records(scored: Sequence[ScoredUtterance], document: str = 'doc') -> list[dict]:
    heads = _heads(scored)
    records = []
    for su in scored:
        nps = []
        for sn in su.scored:
            c = sn.constituent
            nps.append({
                'id': sn.np.id,
                'words': list(sn.np.words),
                'role': c.role,
                'target_role': c.ordering_role,
                'rules': sn.rules,
                'value': sn.value,
                'expression': sn.expression,
                'anchored_value': sn.anchored_value,
                'entity': sn.entity,
                'antecedent': list(sn.resolved_antecedent) if sn.resolved_antecedent else None,
            })
        dc = su.discrete_center
        records.append({
            'document': document,
            'index': su.index,
            'text': su.utterance.text,
            'nps': nps,
            'cf': [sn.np.id for sn in su.cf],
            'cb': su.cb,
            'center': center_label(dc, heads) if dc is not None else None,
            'center_id': dc.np.id if dc is not None else None,
            'transition': su.transition,
        })
    return records


def plan_record(plan: OrderPlan, document: str = 'doc') -> dict:
    return {
        'document': document,
        'index': plan.utterance_index,
        'preprocessing': [{'rule': e.rule, 'effect': e.effect, 'detail': e.detail}
                          for e in plan.preprocessing_effects],
        'preferences': [{'rule': f.rule, 'constraint': f.constraint, 'prim': f.prim,
                         'suppressed': f.suppressed} for f in plan.fired_preferences],
        'candidates': [''.join(o) for o in plan.candidates],
        'exclusions': [{'order': ''.join(o), 'rule': r} for o, r in plan.exclusions],
        'final': list(plan.rendered_orders),
        'fallback_stage': plan.fallback_stage,
    }


def order_record(plan: OrderPlan, document: str = 'doc') -> dict:
    return {'document': document, 'index': plan.utterance_index,
            'orders': list(plan.rendered_orders)}


def dump_records(records: Iterable[dict]) -> str:
    return ''.join(json.dumps(r, sort_keys=True, ensure_ascii=False) + '\n' for r in records)


def load_records(text: str) -> list[dict]:
    return [json.loads(line) for line in record_lines(text) if line.strip()]


def _table(header, rows):
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    fmt = '  '.join('%%-%ds' % w for w in widths)
    lines = [fmt % tuple(header), '  '.join('-' * w for w in widths)]
    lines.extend((fmt % tuple(row)).rstrip() for row in rows)
    return '\n'.join(line.rstrip() for line in lines) + '\n'


def analysis_table(records: Sequence[dict]) -> str:
    rows = []
    for rec in records:
        nps = rec['nps'] or [None]
        for k, np in enumerate(nps):
            first = k == 0
            rows.append([
                str(rec['index'] + 1) if first else '',
                rec['text'] if first else '',
                ' '.join(np['words']) if np else '',
                np['rules'] if np else '',
                np['expression'] if np else '',
                (rec['center'] or '') if first else '',
                rec['transition'] if first else '',
            ])
    return _table(['No.', 'UTTERANCE', 'NP', 'RULES', 'VALUES', 'CENTER', 'TRANSITION'], rows)


def order_table(records: Sequence[dict]) -> str:
    rows = [[str(r['index'] + 1), ' '.join(r['orders'])] for r in records]
    return _table(['No.', 'RESULTING ORDER(S)'], rows)


def trace_table(records: Sequence[dict]) -> str:
    rows = []
    for r in records:
        criteria = [e['rule'] for e in r['preprocessing']]
        for p in r['preferences']:
            label = p['rule'] + ('[Prim=%s]' % p['prim'] if p['prim'] else '')
            criteria.append('(%s)' % label if p['suppressed'] else label)
        partial = [e['detail'] for e in r['preprocessing']]
        partial += [p['constraint'] for p in r['preferences'] if not p['suppressed']]
        partial += r['candidates']
        discr = ['(%s)' % e['rule'] for e in r['exclusions']]
        final = ' '.join(r['final'])
        if r['fallback_stage']:
            final += ' [fallback %d]' % r['fallback_stage']
        rows.append([str(r['index'] + 1), ' '.join(criteria) or 'no rules apply',
                     ' '.join(partial), ' '.join(discr), final])
    return _table(['No.', 'PREFERENCE CRITERIA', 'PARTIAL ORDERINGS',
                   'DISCRIMINATION (FAILING)', 'RESULTING ORDER(S)'], rows)
