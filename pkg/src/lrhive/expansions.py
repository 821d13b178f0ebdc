"""Schur product and skew expansions assembled from per-coefficient engines.

Candidate terms are generated inside the weight/length/containment support
envelope first, then the chosen engine (hives or tableaux) counts each
coefficient; the two engines must agree term by term.
"""

from __future__ import annotations

from functools import lru_cache

from .hives import count_lr_hives, lr_coefficient_hive
from .partitions import Partition, bounded_partitions, contains
from .skew import SkewShape
from .tableaux import lr_tableau_count

METHODS = ("hive", "tableau")


class Expansion:
    """A finite map from partitions to positive coefficients, one weight."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        coeffs = dict(coeffs)
        weights = {p.weight for p in coeffs}
        if len(weights) > 1:
            raise ValueError("all terms must share one weight")
        for p, c in coeffs.items():
            if c < 1:
                raise ValueError(f"coefficient of {p} must be positive, got {c}")
        self._coeffs = coeffs

    def terms(self):
        """(partition, coefficient) pairs in decreasing lexicographic order."""
        return sorted(self._coeffs.items(), key=lambda t: t[0].parts, reverse=True)

    def items(self):
        return self.terms()

    def as_dict(self):
        return dict(self._coeffs)

    def max_multiplicity(self):
        return max(self._coeffs.values(), default=0)

    def multiply(self, other, method="hive"):
        """Coefficient-wise product: expand every pairwise Schur product."""
        total = {}
        for p, cp in self._coeffs.items():
            for q, cq in other._coeffs.items():
                for r, c in product_expansion(p, q, method=method).items():
                    total[r] = total.get(r, 0) + cp * cq * c
        return Expansion(total)

    def __getitem__(self, p):
        return self._coeffs.get(p, 0)

    def __contains__(self, p):
        return p in self._coeffs

    def __iter__(self):
        return iter(sorted(self._coeffs, key=lambda p: p.parts, reverse=True))

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, Expansion):
            return self._coeffs == other._coeffs
        if isinstance(other, dict):
            return self._coeffs == other
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{p.parts}: {c}" for p, c in self.terms())
        return f"Expansion({{{inner}}})"


def lr_coefficient(lam, mu, nu, method="hive"):
    """Single coefficient by the chosen engine."""
    if method == "hive":
        return lr_coefficient_hive(lam, mu, nu)
    if method == "tableau":
        return lr_tableau_count(lam, mu, nu)
    raise ValueError(f"unknown method {method!r}")


def _engine(lam, mu, nu, n, method):
    if method == "hive":
        return count_lr_hives(lam, mu, nu, n)
    if method == "tableau":
        return lr_tableau_count(lam, mu, nu)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def product_expansion(mu, nu, method="hive"):
    """Expansion of the product of the two Schur functions indexed by mu, nu.

    Candidates are the partitions of |mu| + |nu| containing both factors,
    with length at most len(mu) + len(nu) and first part at most mu_1 + nu_1;
    hives are enumerated on a triangle of side len(mu) + len(nu).
    """
    weight = mu.weight + nu.weight
    n = mu.length + nu.length
    max_part = (mu.parts[0] if mu else 0) + (nu.parts[0] if nu else 0)
    coeffs = {}
    for lam in bounded_partitions(weight, max_part=max_part, max_length=n):
        if not (contains(mu, lam) and contains(nu, lam)):
            continue
        c = _engine(lam, mu, nu, n, method)
        if c:
            coeffs[lam] = c
    return Expansion(coeffs)


@lru_cache(maxsize=None)
def _skew_expansion(lam, mu, method):
    weight = lam.weight - mu.weight
    n = lam.length
    coeffs = {}
    for nu in bounded_partitions(weight, max_part=lam.parts[0] if lam else 0, max_length=n):
        if not contains(nu, lam):
            continue
        c = _engine(lam, mu, nu, n, method)
        if c:
            coeffs[nu] = c
    return Expansion(coeffs)


def skew_expansion(shape, method="hive"):
    """Expansion of the skew Schur function of the given shape.

    Candidates are the partitions of the cell count contained in the outer
    partition; hives are enumerated on a triangle of side len(outer).
    """
    return _skew_expansion(shape.outer, shape.inner, method)


def max_multiplicity(expansion):
    return expansion.max_multiplicity()


def duality_check(lam, mu, nu, method="hive"):
    """The coefficient of nu in lam/mu equals the coefficient of lam in mu*nu.

    Both sides are read off full expansions, so the two extraction routes are
    genuinely independent; mismatched weights make both sides 0.
    """
    if contains(mu, lam):
        skew_side = skew_expansion(SkewShape(lam, mu), method=method)[nu]
    else:
        skew_side = 0
    product_side = product_expansion(mu, nu, method=method)[lam]
    return skew_side == product_side
