"""Exact constants for |grad^k |x|^s|^2 and |grad^k log|x||^2.

Values come back as fractions.Fraction. Exponents and sample points may be
given as Fraction, int or "p/q" strings.
"""

from fractions import Fraction

from . import _core
from ._core import CapacityError, __version__

__all__ = [
    "CapacityError",
    "__version__",
    "gamma",
    "ell",
    "gamma_special",
    "ell2_special",
    "pochhammer",
    "half_identity_check",
    "rescaled_norm_sq",
    "tilde_norm_sq",
    "dimension_split_check",
    "verify",
    "run_cli",
]


def _q(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _point(point):
    if isinstance(point, str):
        return point
    return ",".join(_q(c) for c in point)


def gamma(n, s, k, method="closed"):
    """gamma_N^{s,k}; method is "closed" or "recursive"."""
    fn = {"closed": _core.gamma_closed, "recursive": _core.gamma_recursive}[method]
    return Fraction(fn(n, _q(s), k))


def ell(n, k, method="closed"):
    """ell_N^k for k >= 1; method is "closed" or "recursive"."""
    fn = {"closed": _core.ell_closed, "recursive": _core.ell_recursive}[method]
    return Fraction(fn(n, k))


def gamma_special(n, k):
    return Fraction(_core.gamma_special(n, k))


def ell2_special(k):
    return Fraction(_core.ell2_special(k))


def pochhammer(nu, k):
    """Falling factorial nu (nu - 1) ... (nu - k + 1)."""
    return Fraction(_core.pochhammer(_q(nu), k))


def half_identity_check(nu, m):
    return _core.half_identity_check(_q(nu), m)


def rescaled_norm_sq(n, kind, k, point, s=0, weighted=True):
    """r^{2(k - s)} |grad^k u|^2 at a point, by symbolic differentiation."""
    return Fraction(_core.rescaled_norm_sq(n, kind, k, _point(point), _q(s), weighted))


def tilde_norm_sq(n, kind, k, point, s=0):
    return Fraction(_core.tilde_norm_sq(n, kind, k, _point(point), _q(s)))


def dimension_split_check(n, kind, k, point, s=0):
    return _core.dimension_split_check(n, kind, k, _point(point), _q(s))


def verify(n, kind, k, points, s=0):
    """Oracle values at each point against the closed-form methods."""
    raw = _core.verify(n, kind, k, [_point(p) for p in points], _q(s))
    return {
        "methods": {name: Fraction(v) for name, v in raw["methods"].items()},
        "oracle": [Fraction(v) for v in raw["oracle"]],
        "constant": raw["constant"],
        "exact_match": raw["exact_match"],
    }


def run_cli(*args):
    """Runs the command-line front end; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
