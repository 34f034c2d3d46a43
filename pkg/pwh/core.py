import io
import json
from typing import Any, Dict, List, Optional

from .complex import SimplicialComplex, as_face
from .errors import InputError
from .folds import Fold
from .reader import Reader
from .relations import Partition, Relation, Summand
from .whitehead import (Folded, Hw, HwExpr, MapLeaf, Permutation, SpaceRef, Status, Sum, Verdict,
                        render)
from .writer import Writer


def load(file_obj) -> SimplicialComplex:
    """Load a complex from a JSON file-like object."""
    return loads(file_obj.read())


def loads(s: str) -> SimplicialComplex:
    """Load a complex from a JSON string."""
    return complex_from_dict(_parse(s))


def dump(k: SimplicialComplex, file_obj):
    """Write a complex as JSON."""
    file_obj.write(dumps(k))
    return file_obj


def dumps(k: SimplicialComplex) -> str:
    """Write a complex as a JSON string."""
    return _emit(k.to_dict())


def loads_any(s: str) -> SimplicialComplex:
    """A complex from JSON or from the text format (its first block)."""
    if s.lstrip().startswith('{'):
        return loads(s)
    Reader.check(s)
    for k in Reader(io.StringIO(s)):
        return k
    raise InputError('no complex found', code='bad-dsl')


def dumps_text(complexes: List[SimplicialComplex]) -> str:
    out = io.StringIO()
    Writer(out).write_complexes(complexes)
    return out.getvalue()


def _parse(s: str) -> Any:
    try:
        return json.loads(s)
    except json.JSONDecodeError as e:
        raise InputError(f'invalid JSON: {e}', code='bad-json')


def _emit(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + '\n'


def _field(d: Any, key: str, kind: type = object):
    if not isinstance(d, dict) or key not in d:
        raise InputError(f'missing field {key!r}', code='bad-json')
    value = d[key]
    if not isinstance(value, kind):
        raise InputError(f'field {key!r} should be a {kind.__name__}', code='bad-json')
    return value


def complex_from_dict(d: Any) -> SimplicialComplex:
    faces = _field(d, 'maximal_faces', list)
    if not all(isinstance(f, list) for f in faces):
        raise InputError('maximal_faces should be a list of lists', code='bad-json')
    vertices = _field(d, 'vertices', list) if 'vertices' in d else None
    return SimplicialComplex(vertices, faces)


def _space_to_dict(space: SpaceRef) -> Dict:
    return {'name': space.name, 'h_space': space.is_h_space, 'associative': space.is_associative}


def _leaf_to_dict(leaf: MapLeaf) -> Dict:
    d = {
        'name': leaf.name,
        'sphere_dim': leaf.sphere_dim,
        'suspension': leaf.domain_is_suspension,
        'null': leaf.is_null,
        'codomain': _space_to_dict(leaf.codomain),
        'vertex': str(leaf.vertex),
    }
    if leaf.shape is not None:
        d['shape'] = leaf.shape.to_dict()
    return {'leaf': d}


def expr_to_dict(e: HwExpr) -> Dict:
    if isinstance(e, MapLeaf):
        return _leaf_to_dict(e)
    if isinstance(e, Sum):
        return {'sum': [_leaf_to_dict(t) for t in e.terms]}
    if isinstance(e, Hw):
        ambient = e.ambient.to_dict() if e.ambient is not None else None
        return {'hw': {'args': [expr_to_dict(a) for a in e.args], 'ambient': ambient}}
    return {'folded': {'inner': expr_to_dict(e.inner), **e.fold.to_dict()}}


def _leaf_from_dict(d: Any) -> MapLeaf:
    body = _field(d, 'leaf', dict)
    space = body.get('codomain') or {}
    shape = body.get('shape')
    return MapLeaf(
        name=_field(body, 'name', str),
        sphere_dim=body.get('sphere_dim'),
        domain_is_suspension=body.get('suspension'),
        codomain=SpaceRef(space.get('name', 'Y'), bool(space.get('h_space', False)),
                          bool(space.get('associative', False))),
        is_null=bool(body.get('null', False)),
        vertex=body.get('vertex'),
        shape=complex_from_dict(shape) if shape is not None else None,
    )


def expr_from_dict(d: Any) -> HwExpr:
    if not isinstance(d, dict) or len(d) != 1:
        raise InputError('an expression is an object with one of leaf, sum, hw, folded',
                         code='bad-json')
    kind, = d
    if kind == 'leaf':
        return _leaf_from_dict(d)
    if kind == 'sum':
        return Sum(tuple(_leaf_from_dict(t) for t in _field(d, 'sum', list)))
    if kind == 'hw':
        body = _field(d, 'hw', dict)
        ambient = body.get('ambient')
        return Hw(tuple(expr_from_dict(a) for a in _field(body, 'args', list)),
                  complex_from_dict(ambient) if ambient is not None else None)
    if kind == 'folded':
        body = _field(d, 'folded', dict)
        inner = expr_from_dict(_field(body, 'inner', dict))
        return Folded(inner, Fold.from_mapping(_field(body, 'map', dict)))
    raise InputError(f'unknown expression kind {kind!r}', code='bad-json')


def loads_expr(s: str) -> HwExpr:
    return expr_from_dict(_parse(s))


def dumps_expr(e: HwExpr) -> str:
    return _emit(expr_to_dict(e))


def verdict_from_dict(d: Any) -> Verdict:
    try:
        status = Status(_field(d, 'status', str))
    except ValueError:
        raise InputError(f'unknown status {d["status"]!r}', code='bad-json')
    certificate = tuple(as_face(f) for f in d.get('certificate', []))
    return Verdict(status, d.get('rule'), certificate)


def relation_to_dict(rel: Relation) -> Dict:
    return {
        'ambient': rel.ambient.to_dict(),
        'partition': str(rel.partition) if rel.partition is not None else None,
        'fold': rel.fold.to_dict() if rel.fold is not None else None,
        'summands': [{
            'render': render(s.expr),
            'expr': expr_to_dict(s.expr),
            'permutation': list(s.permutation.images),
            'sign': s.sign,
            'coefficient': s.coefficient,
            'degree': s.degree,
            'block': s.block,
            'triviality': s.triviality.to_dict(),
        } for s in rel.summands],
    }


def relation_from_dict(d: Any) -> Relation:
    if not isinstance(d, dict):
        raise InputError('a relation is a JSON object', code='bad-json')
    partition: Optional[Partition] = None
    if d.get('partition') is not None:
        partition = Partition.parse(_field(d, 'partition', str))
    fold = Fold.from_mapping(_field(d['fold'], 'map', dict)) if d.get('fold') is not None else None
    summands = tuple(Summand(
        expr=expr_from_dict(_field(s, 'expr', dict)),
        permutation=Permutation(tuple(_field(s, 'permutation', list))),
        sign=s.get('sign'),
        triviality=verdict_from_dict(_field(s, 'triviality', dict)),
        degree=s.get('degree'),
        coefficient=s.get('coefficient', 1),
        block=s.get('block'),
    ) for s in _field(d, 'summands', list))
    return Relation(complex_from_dict(_field(d, 'ambient', dict)), summands, partition, fold)


def loads_relation(s: str) -> Relation:
    return relation_from_dict(_parse(s))


def dumps_relation(rel: Relation) -> str:
    return _emit(relation_to_dict(rel))
