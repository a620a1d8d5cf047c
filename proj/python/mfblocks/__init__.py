"""Block Gaussian ensemble laboratory.

Thin wrapper over the native module: exact values come back as strings and
are converted here to ``int``/``fractions.Fraction``; Monte Carlo estimates
stay as ``(complex mean, float standard error)`` pairs.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "catalan",
    "mp_moment",
    "fuss_narayana",
    "fuss_narayana_at",
    "boxtimes_mp_moment",
    "jacobi_moment",
    "meixner_fock_moment",
    "mp_quadrature_moment",
    "limit_moment",
    "wick_moment",
    "estimate_moment",
    "product_moment",
    "render_word",
]


def _rat(x):
    """Accept int, Fraction, or a rational string and return a string."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _profile(profile):
    return {label: [[_rat(cell) for cell in row] for row in rows] for label, rows in profile.items()}


def catalan(k):
    """Catalan number C_k."""
    return int(_core.catalan(k))


def mp_moment(k, t):
    """k-th moment of the Marchenko-Pastur law with ratio t (exact)."""
    return Fraction(_core.mp_moment(k, _rat(t)))


def fuss_narayana(k, p):
    """The multivariate moment polynomial P_k in d0..dp, as text."""
    return _core.fuss_narayana(k, p)


def fuss_narayana_at(k, p, d):
    """P_k evaluated at rational arguments d = [d0, ..., dp] (exact)."""
    return Fraction(_core.fuss_narayana_at(k, p, [_rat(x) for x in d]))


def boxtimes_mp_moment(ts, k):
    """k-th moment of the free multiplicative convolution of MP laws (exact)."""
    return Fraction(_core.boxtimes_mp_moment([_rat(t) for t in ts], k))


def jacobi_moment(a1, a2, b1, b2, k):
    """Moment of the two-periodic Jacobi recurrence (exact)."""
    return Fraction(_core.jacobi_moment(_rat(a1), _rat(a2), _rat(b1), _rat(b2), k))


def meixner_fock_moment(a1, a2, b1, b2, k):
    """The same moment through the two-block operator model (exact)."""
    return Fraction(_core.meixner_fock_moment(_rat(a1), _rat(a2), _rat(b1), _rat(b2), k))


def mp_quadrature_moment(k, t):
    """k-th Marchenko-Pastur moment by quadrature of the density (float)."""
    return _core.mp_quadrature_moment(k, float(t))


def limit_moment(word, q, kind, d, profile):
    """Exact limit of the sector-q partial trace of a block word.

    ``d`` is the list of block ratios (must sum to 1), ``profile`` maps labels
    to r x r variance matrices; entries may be ints, Fractions, or strings.
    """
    return Fraction(_core.limit_moment(word, q, kind, [_rat(x) for x in d], _profile(profile)))


def wick_moment(word, q, kind, dims, profile):
    """Exact finite-n Gaussian pairing value of the partial trace."""
    return Fraction(_core.wick_moment(word, q, kind, list(dims), _profile(profile)))


def estimate_moment(word, q, kind, dims, profile, seed, trials, threads=1):
    """Monte Carlo estimate: returns (complex mean, standard error)."""
    return _core.estimate_moment(word, q, kind, list(dims), _profile(profile), seed, trials, threads)


def product_moment(dims, n, k, trials, seed, threads=1):
    """Monte Carlo estimate of tau_0((B B*)^k) for a rectangular chain."""
    return _core.product_moment(list(dims), n, k, trials, seed, threads)


def render_word(word, q=1):
    """Canonical text form of a block word."""
    return _core.render_word(word, q)
