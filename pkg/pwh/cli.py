import argparse
import json
import logging
import sys
from typing import List, Optional

from . import __version__
from .complex import (SimplicialComplex, SimplicialPair, isomorphism, join, union)
from .core import dumps, dumps_relation, dumps_text, loads_any, loads_expr
from .errors import InputError, PwhError
from .folds import Fold, folded_complex, max_folding_complex
from .polyjoin import composition, polyhedral_join, substitution
from .relations import (Partition, Relation, collect, default_leaves, fold_across_relation,
                        fold_within_relation, folded_relation, identity_complex, relation)
from .verify import Budget, check_eta_separation, eta_matrix, run_suite
from .whitehead import Mode, render, triviality
from .writer import Writer

log = logging.getLogger(__name__)


def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    try:
        with open(path, 'r') as f:
            return f.read()
    except OSError as e:
        raise InputError(f'cannot read {path}: {e.strerror}', code='bad-file')


def _complex(path: str) -> SimplicialComplex:
    return loads_any(_read(path))


def _dims(s: Optional[str]) -> Optional[List[int]]:
    if s is None:
        return None
    try:
        return [int(x) for x in s.split(',')]
    except ValueError:
        raise InputError(f'bad dimensions {s!r}, expected e.g. 2,2,3', code='bad-dims')


def _format_complex(k: SimplicialComplex, fmt: str) -> str:
    if fmt == 'text':
        return dumps_text([k])
    if fmt == 'dot':
        return Writer.to_dot(k)
    return dumps(k)


def _need(args, n: int) -> List[SimplicialComplex]:
    if len(args.inputs) != n:
        raise InputError(f'complex {args.op} takes {n} input(s), got {len(args.inputs)}',
                         code='bad-args')
    return [_complex(p) for p in args.inputs]


def cmd_complex(args) -> str:
    op = args.op
    if op in ('subst', 'compose', 'pjoin'):
        if args.outer is None:
            raise InputError(f'complex {op} needs --outer', code='bad-args')
        outer = _complex(args.outer)
        relabel = not args.keep_labels
        if op == 'pjoin':
            pairs = []
            for arg in args.pairs or []:
                big, sep, small = arg.partition(':')
                if not sep:
                    raise InputError(f'bad pair {arg!r}, expected BIG:SMALL', code='bad-args')
                pairs.append(SimplicialPair(_complex(big), _complex(small)))
            k = polyhedral_join(outer, pairs, relabel=relabel)
        else:
            inner = [_complex(p) for p in args.inner or []]
            build = substitution if op == 'subst' else composition
            k = build(outer, inner, relabel=relabel)
        return _format_complex(k, args.format)
    if op in ('join', 'union'):
        a, b = _need(args, 2)
        return _format_complex(join(a, b) if op == 'join' else union(a, b), args.format)
    if op == 'iso':
        a, b = _need(args, 2)
        witness = isomorphism(a, b)
        payload = {'isomorphic': witness is not None,
                   'witness': {str(u): str(v) for u, v in witness.items()} if witness else None}
        return json.dumps(payload, indent=2) + '\n'
    k, = _need(args, 1)
    if op == 'mf':
        missing = k.minimal_missing_faces()
        if args.format == 'text':
            return 'missing:' + ''.join(' ' + Writer.format_face(m) for m in missing) + '\n'
        payload = {'vertices': [str(v) for v in k.vertices],
                   'minimal_missing_faces': [[str(v) for v in sorted(m)] for m in missing]}
        return json.dumps(payload, indent=2) + '\n'
    if op == 'dual':
        return _format_complex(k.alexander_dual(), args.format)
    if op == 'skeleton':
        if args.dim is None:
            raise InputError('complex skeleton needs --dim', code='bad-args')
        return _format_complex(k.skeleton(args.dim), args.format)
    if args.map is None:
        raise InputError(f'complex {op} needs --map', code='bad-args')
    fold = Fold.parse(args.map)
    if op == 'fold':
        return _format_complex(folded_complex(k, fold), args.format)
    return _format_complex(max_folding_complex(k, fold), args.format)


def cmd_identity(args) -> str:
    return _format_complex(identity_complex(Partition.parse(args.partition)), args.format)


def _format_relation(rel: Relation, fmt: str) -> str:
    if fmt == 'json':
        return dumps_relation(rel)
    lines = []
    for s in rel.summands:
        sign = '+' if (s.sign or 1) > 0 else '-'
        coefficient = f'{s.coefficient} ' if s.coefficient != 1 else ''
        verdict = s.triviality.status.value + (f' ({s.triviality.rule})' if s.triviality.rule else '')
        perm = ','.join(str(n) for n in s.permutation.images)
        lines.append(f'{sign} {coefficient}{render(s.expr)} o ({perm})    [{verdict}]')
    lines.append('= 0')
    return '\n'.join(lines) + '\n'


def cmd_relation(args) -> str:
    mode = Mode.DJ if args.dj else Mode.GENERAL
    dims = _dims(args.dims)
    fold = Fold.parse(args.map) if args.map else None
    if args.kind == 'fold-across':
        if args.k1 is None or args.km is None or fold is None or args.m is None:
            raise InputError('fold-across needs --k1, --km, --map and --m', code='bad-args')
        rel = fold_across_relation(args.m, _complex(args.k1), _complex(args.km), fold,
                                   default_leaves(args.m, dims), mode)
    else:
        if args.partition is None:
            raise InputError(f'relation {args.kind} needs --partition', code='bad-args')
        partition = Partition.parse(args.partition)
        leaves = default_leaves(partition.m, dims)
        if args.kind == 'fold':
            if fold is None:
                raise InputError('relation fold needs --map', code='bad-args')
            rel = folded_relation(partition, fold, leaves, mode)
        elif args.kind == 'fold-within':
            inner = [_complex(p) for p in args.inner or []]
            rel = fold_within_relation(partition, inner, fold, leaves, args.null_slot or (), mode)
        else:
            rel = relation(partition, leaves, mode)
    if args.collect:
        rel = collect(rel)
    return _format_relation(rel, args.format)


def cmd_triviality(args) -> str:
    expr = loads_expr(_read(args.inputs))
    verdict = triviality(expr, Mode.DJ if args.dj else Mode.GENERAL)
    return json.dumps({'expr': render(expr), 'verdict': verdict.to_dict()},
                      indent=2, ensure_ascii=False) + '\n'


def cmd_eta(args) -> str:
    out = eta_matrix(args.k).render() + '\n'
    if args.check:
        ok = check_eta_separation(args.k)
        out += 'separation: ' + ('ok' if ok else 'FAILED') + '\n'
        if not ok:
            args.status = 1
    return out


def cmd_verify(args) -> str:
    report = run_suite(args.suite, Budget(args.max_vertices, args.samples, args.seed))
    if not report.ok:
        args.status = 1
    if args.format == 'json':
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + '\n'
    return report.to_text() + '\n'


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='pwh', description='Polyhedral joins, folds and relations '
                                                             'among higher Whitehead maps.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='log to stderr; repeat for debug')
    parser.add_argument('--json-errors', action='store_true', help='report errors as JSON on stderr')
    parser.add_argument('--out', default='-', help='output file, - for stdout')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('complex', help='operations on simplicial complexes')
    p.add_argument('op', choices=['mf', 'dual', 'skeleton', 'fold', 'lpsi', 'join', 'union',
                                  'subst', 'compose', 'pjoin', 'iso'])
    p.add_argument('--in', dest='inputs', nargs='+', default=[], metavar='FILE',
                   help='input complexes, JSON or text, - for stdin')
    p.add_argument('--outer', metavar='FILE')
    p.add_argument('--inner', nargs='+', metavar='FILE')
    p.add_argument('--pairs', nargs='+', metavar='BIG:SMALL')
    p.add_argument('--keep-labels', action='store_true', help='do not relabel inner vertices')
    p.add_argument('--dim', type=int)
    p.add_argument('--map', help='fold, e.g. "4->1;5->2"')
    p.add_argument('--format', choices=['json', 'text', 'dot'], default='json')
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser('identity', help='the identity complex of a partition')
    p.add_argument('--partition', required=True, help='e.g. "1|2,3|4"')
    p.add_argument('--format', choices=['json', 'text', 'dot'], default='json')
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser('relation', help='relations among higher Whitehead maps')
    p.add_argument('kind', nargs='?', default='plain',
                   choices=['plain', 'fold', 'fold-within', 'fold-across'])
    p.add_argument('--partition')
    p.add_argument('--dims', help='sphere dimensions, e.g. 2,2,3')
    p.add_argument('--dj', action='store_true', help='degree 2 maps into one space')
    p.add_argument('--collect', action='store_true', help='merge equal summands')
    p.add_argument('--map')
    p.add_argument('--inner', nargs='+', metavar='FILE')
    p.add_argument('--null-slot', action='append', metavar='VERTEX')
    p.add_argument('--k1', metavar='FILE')
    p.add_argument('--km', metavar='FILE')
    p.add_argument('--m', type=int)
    p.add_argument('--format', choices=['json', 'text'], default='json')
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser('triviality', help='classify an expression')
    p.add_argument('--in', dest='inputs', required=True, metavar='FILE')
    p.add_argument('--dj', action='store_true')
    p.set_defaults(func=cmd_triviality)

    p = sub.add_parser('eta', help='the η-matrix')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--check', action='store_true', help='check the separation property')
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser('verify', help='run brute-force checks')
    p.add_argument('--suite', default='all')
    p.add_argument('--max-vertices', type=int, default=7)
    p.add_argument('--samples', type=int, default=200)
    p.add_argument('--seed', type=int, default=42)
    p.add_argument('--format', choices=['json', 'text'], default='text')
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                            stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    args.status = 0
    log.debug('pwh %s', args.command)
    try:
        out = args.func(args)
        if args.out == '-':
            sys.stdout.write(out)
        else:
            with open(args.out, 'w') as f:
                f.write(out)
    except OSError as e:
        print(f'pwh: cannot write {args.out}: {e.strerror}', file=sys.stderr)
        return 2
    except PwhError as e:
        if args.json_errors:
            print(json.dumps(e.to_dict(), ensure_ascii=False), file=sys.stderr)
        else:
            print(f'pwh: {e}', file=sys.stderr)
        return 2 if isinstance(e, InputError) else 1
    return args.status


if __name__ == '__main__':
    sys.exit(main())
