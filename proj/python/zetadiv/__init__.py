"""Zeta functions of varieties over small finite fields, with exact
q-divisibility analysis of their zeros and poles.

The heavy lifting happens in the compiled extension ``zetadiv._core``;
this package adds a small pythonic surface over it. Counts and polynomial
coefficients are exact (arbitrary precision enters and leaves as python
ints via decimal strings).
"""

from __future__ import annotations

from typing import Optional, Sequence

from ._core import (  # noqa: F401
    ZetadivError,
    build_field,
    check_divisibility,
    compute_mu,
    factor_poly,
    newton_slopes,
    run_cli,
    weight_of_factor,
)
from . import _core

__all__ = [
    "ZetadivError",
    "Variety",
    "build_field",
    "check_divisibility",
    "compute_mu",
    "factor_poly",
    "mu_table",
    "newton_slopes",
    "run_cli",
    "weight_of_factor",
]

__version__ = _core.__version__


def mu_table(n: int, degrees: Sequence[int], jmax: Optional[int] = None) -> list[int]:
    """[mu_0(n; degrees), ..., mu_jmax(n; degrees)] (jmax defaults to n)."""
    if jmax is None:
        jmax = n
    return [compute_mu(j, n, list(degrees)) for j in range(jmax + 1)]


class Variety:
    """A variety given by defining polynomials over F_{p^e}.

    >>> hyperbola = Variety(p=3, ambient="affine", n=2, polys=["x1*x2 - 1"])
    >>> hyperbola.count(1)
    2
    >>> hyperbola.zeta()["den"]
    [1, -3]
    """

    def __init__(self, p: int, ambient: str, n: int, polys: Sequence[str],
                 e: int = 1, budget: int = 0):
        self.p = p
        self.e = e
        self.ambient = ambient
        self.n = n
        self.polys = list(polys)
        self.budget = budget

    def count(self, k: int = 1, complement: bool = False) -> int:
        return _core.count(self.p, self.e, self.ambient, self.n, self.polys,
                           k, complement, self.budget)

    def zeta(self, complement: bool = False, bound: int = 32, holdout: int = 2) -> dict:
        raw = _core.zeta(self.p, self.e, self.ambient, self.n, self.polys,
                         complement, self.budget, bound, holdout)
        raw["num"] = [int(x) for x in raw["num"]]
        raw["den"] = [int(x) for x in raw["den"]]
        return raw

    def verify_ax_katz(self, kmax: int = 3) -> dict:
        return _core.verify_ax_katz(self.p, self.e, self.ambient, self.n,
                                    self.polys, kmax, self.budget)

    def verify_projective(self, dim: Optional[int] = None) -> dict:
        return _core.verify_projective(self.p, self.e, self.n, self.polys,
                                       self.budget, dim)

    def verify_polar(self, assert_ci: bool = False) -> dict:
        return _core.verify_polar(self.p, self.e, self.n, self.polys,
                                  assert_ci, self.budget)

    def verify_excision(self, kmax: int = 3) -> dict:
        return _core.verify_excision(self.p, self.e, self.n, self.polys,
                                     kmax, self.budget)

    def probe_affine(self) -> dict:
        return _core.probe_affine(self.p, self.e, self.n, self.polys, self.budget)
