import os

from .errors import InputError

MAX_VERTICES_DEFAULT = 16


def max_vertices() -> int:
    """Vertex cap for a single complex, `PWH_MAX_VERTICES` overrides."""
    raw = os.environ.get('PWH_MAX_VERTICES', '')
    if raw == '':
        return MAX_VERTICES_DEFAULT
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f'PWH_MAX_VERTICES must be an integer, got {raw!r}', code='bad-env')
    if n < 1:
        raise InputError(f'PWH_MAX_VERTICES must be positive, got {n}', code='bad-env')
    return n


def debug_checks() -> bool:
    return os.environ.get('PWH_DEBUG', '0') == '1'
