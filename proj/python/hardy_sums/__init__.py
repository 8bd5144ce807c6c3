"""Hardy sums, theta multipliers, Weyl sums and Eisenstein series numerics.

Rational parameters r are passed as (j, m) pairs, a fractions.Fraction, or a
"j/m" string. Floats are refused.
"""

from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    ResourceError,
    character_sum,
    gamma,
    hardy_S,
    hardy_S4,
    hardy_S4_direct,
    hardy_S_direct,
    phi_theta,
    phi_theta_count,
    ramanujan_direct,
    ramanujan_von_sterneck,
    theta,
    theta4,
    verify_theta_transform,
    whittaker_W,
)

__version__ = _core.__version__


def _pair(r):
    if isinstance(r, Fraction):
        return (r.numerator, r.denominator)
    if isinstance(r, str):
        j, sep, m = r.partition("/")
        if not sep:
            raise ValueError(f"r must be written j/m, got {r!r}")
        return (int(j), int(m))
    if isinstance(r, tuple) and len(r) == 2 and all(isinstance(v, int) for v in r):
        return r
    raise TypeError(f"r must be a (j, m) pair, Fraction or 'j/m' string, got {r!r}")


def dedekind_sum(d, c):
    return Fraction(*_core.dedekind_sum(d, c))


def lambda_split(N):
    l1, l2 = _core.lambda_split(N)
    return Fraction(*l1), Fraction(*l2)


def weyl_sum(N, n, r, checkpoints=(), variant="S", threads=1):
    out = _core.weyl_sum(N, n, _pair(r), list(checkpoints), variant, threads)
    out["r"] = Fraction(*out["r"])
    return out


def distribution_table(N, m, variant="S", bins=1, threads=1):
    return _core.distribution_table(N, m, variant, bins, threads)


def nu_r(g, r):
    a, b, c, d = g
    return _core.nu_r(a, b, c, d, _pair(r))


def z_partial(r, n, s, c_max):
    return _core.z_partial(_pair(r), n, s, c_max)


def eisenstein_direct(r=(1, 8), s=2 + 0.5j, z=0.2 + 1j, c_max=2000, d_span=50, threads=1):
    return _core.eisenstein_direct(_pair(r), s, z, c_max, d_span, threads)


def eisenstein_fourier(r=(1, 8), s=2 + 0.5j, z=0.2 + 1j, c_max=2000, n_max=8):
    return _core.eisenstein_fourier(_pair(r), s, z, c_max, n_max)


def perron_partial(r, n, N, T=200.0, alpha=1.25):
    return _core.perron_partial(_pair(r), n, N, T, alpha)
