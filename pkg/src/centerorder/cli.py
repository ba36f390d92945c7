"""Command-line entry point.

    centerorder analyze  [FILE ...]   center values, Cf/Cb, transitions
    centerorder order    [FILE ...]   resulting constituent orders
    centerorder trace    [FILE ...]   full ordering derivation
    centerorder annotate [FILE ...]   plain text -> annotated records

Input files default to standard input.  Exit status is 0 on success, 1 on
input errors and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import report
from .demo import AnnotationError, annotate_demo
from .ingest import IngestError, parse_records, record_lines, write_document
from .lexicon import LexiconError, load_lexicon
from .model import Config
from .ordering import plan_orders
from .scoring import score_document


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not an integer' % text)
    if value < 1:
        raise argparse.ArgumentTypeError('distance factor must be positive')
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('files', nargs='*', metavar='FILE',
                        help="input files ('-' or none for standard input)")
    common.add_argument('--lexicon', metavar='PATH', help='synonym file, one synset per line')
    common.add_argument('--distance-factor', type=_positive, default=2, metavar='N',
                        help='referential distance per word of NP (default 2)')
    common.add_argument('--use-target-lengths', action='store_true',
                        help='use target_length for referential distance')
    common.add_argument('--format', choices=('table', 'records'), default='table')
    common.add_argument('--strict', action='store_true',
                        help='reject unknown record fields instead of warning')

    parser = argparse.ArgumentParser(prog='centerorder', description=__doc__.split('\n')[0])
    sub = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)
    sub.add_parser('analyze', parents=[common], help='score centers')
    sub.add_parser('order', parents=[common], help='plan constituent orders')
    sub.add_parser('trace', parents=[common], help='plan orders with derivations')
    sub.add_parser('annotate', parents=[common], help='annotate plain clauses (demo fragment)')
    return parser


def _inputs(files, stdin):
    if not files:
        files = ['-']
    for path in files:
        if path == '-':
            yield '<stdin>', stdin.read()
        else:
            with open(path, encoding='utf-8') as f:
                yield path, f.read()


def run(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    cfg = Config(distance_factor=args.distance_factor,
                 use_target_lengths=args.use_target_lengths, lexicon_path=args.lexicon)
    try:
        lex = load_lexicon(args.lexicon)
        records = []
        for name, text in _inputs(args.files, stdin):
            if args.command == 'annotate':
                stdout.write(write_document(annotate_demo(text, lex)))
                continue
            try:
                doc = parse_records(record_lines(text), strict=args.strict, doc_id=name)
            except IngestError as exc:
                raise IngestError('%s: %s' % (name, exc)) from None
            scored = score_document(doc, lex, cfg)
            if args.command == 'analyze':
                records.extend(report.analysis_records(scored, name))
            elif args.command == 'order':
                records.extend(report.order_record(p, name) for p in plan_orders(scored))
            else:
                records.extend(report.plan_record(p, name) for p in plan_orders(scored))
    except (IngestError, LexiconError, AnnotationError, OSError) as exc:
        print('centerorder: error: %s' % exc, file=sys.stderr)
        return 1
    if args.command == 'annotate':
        return 0
    if args.format == 'records':
        stdout.write(report.dump_records(records))
    elif records:
        render = {'analyze': report.analysis_table, 'order': report.order_table,
                  'trace': report.trace_table}[args.command]
        stdout.write(render(records))
    return 0


def main(argv=None):
    logging.basicConfig(format='centerorder: warning: %(message)s', level=logging.WARNING)
    try:
        status = run(argv)
    except SystemExit as exc:
        status = exc.code if isinstance(exc.code, int) else 2
    sys.exit(status)


if __name__ == '__main__':
    main()
