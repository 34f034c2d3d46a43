from typing import Any, Dict, Iterable, Optional


class PwhError(Exception):
    """Root of every error raised by pwh.

    Carries a short `code`, the human `message` and, when one is to blame,
    the offending `face` or `vertex`.
    """

    code = 'pwh-error'

    def __init__(self, message: str, *, code: Optional[str] = None,
                 face: Optional[Iterable[Any]] = None, vertex: Any = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code
        self.face = None if face is None else sorted(face)
        self.vertex = vertex

    def to_dict(self) -> Dict[str, Any]:
        d = {'code': self.code, 'message': self.message}
        if self.face is not None:
            d['face'] = [str(v) for v in self.face]
        if self.vertex is not None:
            d['vertex'] = str(self.vertex)
        return d

    def __str__(self):
        parts = [f'{self.code}: {self.message}']
        if self.face is not None:
            parts.append('{' + ' '.join(str(v) for v in self.face) + '}')
        if self.vertex is not None:
            parts.append(f'at vertex {self.vertex}')
        return ' '.join(parts)


class ComplexError(PwhError):
    code = 'complex'


class FoldError(PwhError):
    code = 'fold'


class ExprError(PwhError):
    code = 'expr'


class RelationError(PwhError):
    code = 'relation'


class VerifyError(PwhError):
    code = 'verify'


class InvariantError(PwhError):
    code = 'invariant'


class InputError(PwhError):
    """Malformed input; the CLI exits with status 2 on these."""
    code = 'input'
