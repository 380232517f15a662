from .quadext import QuadExt, Scalar, as_fraction, is_rational_scalar, sign, sign_quadext, simplify, sqrt5
from .rational import format_rational, normalize_rational, parse_rational

__all__ = [
    "QuadExt",
    "Scalar",
    "as_fraction",
    "format_rational",
    "is_rational_scalar",
    "normalize_rational",
    "parse_rational",
    "sign",
    "sign_quadext",
    "simplify",
    "sqrt5",
]
