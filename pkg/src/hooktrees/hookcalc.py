"""Hook-weight calculus for weighted ordered-tree families.

Everything here revolves around one triangular relation between three
objects: a degree-weight family phi, a hook weight function rho on the
positive integers, and the counting series

    F(z) = sum_n ( sum over trees of size n of w_deg * w_hook ) z^n.

Splitting a tree of size n at its root shows that

    [z^n] F = rho(n) * [z^{n-1}] phi(F(z)),

which can be read in both directions: :func:`series_from_rho` builds F
coefficient by coefficient, and :func:`rho_from_series` recovers rho as a
quotient of coefficients.  :func:`rho_from_forest` is the same calculus
applied to G = phi(F) via the compositional inverse of phi.

Two classical solvers are included for the unweighted equations:
``T = z*phi(T)`` for simply generated families (ordinary generating
function) and ``T' = phi(T)`` for increasing families (exponential
generating function, stored as plain coefficients ``T_n/n!``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import (
    ConstantMismatch,
    DenominatorVanishes,
    DomainError,
    NotInvertible,
    OrderExceeded,
    RhoRangeExceeded,
)
from .families import DegreeWeightFamily
from .rational import Rational, as_rational, rational_from_string, rational_to_string
from .series import TruncatedSeries

__all__ = [
    "HookWeightFunction",
    "solve_simply_generated",
    "solve_increasing",
    "egf_counts",
    "rho_from_series",
    "series_from_rho",
    "rho_from_forest",
    "binary_rho",
    "alpha_family_series",
    "alpha_family_count",
]


@dataclass(frozen=True)
class HookWeightFunction:
    """A table ``rho(1..N)`` of exact rationals.

    ``origin`` records where the table came from ("given", "named:1",
    "named:1/n", "named:n", "derived-from-F", "derived-from-G"); it is
    bookkeeping only and does not take part in equality.
    """

    values: tuple[Fraction, ...]
    origin: str = field(default="given", compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "values", tuple(as_rational(v) for v in self.values)
        )

    @property
    def size(self) -> int:
        return len(self.values)

    def __call__(self, n: int) -> Fraction:
        if not 1 <= n <= len(self.values):
            raise RhoRangeExceeded(
                f"rho({n}) requested but the table covers 1..{len(self.values)}"
            )
        return self.values[n - 1]

    def to_strings(self) -> list[str]:
        return [rational_to_string(v) for v in self.values]

    @classmethod
    def named(cls, name: str, size: int) -> "HookWeightFunction":
        """The builtin tables ``1``, ``1/n`` and ``n``."""
        if size < 1:
            raise ValueError("table size must be at least 1")
        if name == "1":
            values = [Fraction(1)] * size
        elif name == "1/n":
            values = [Fraction(1, n) for n in range(1, size + 1)]
        elif name == "n":
            values = [Fraction(n) for n in range(1, size + 1)]
        else:
            raise ValueError(f"unknown named weight table {name!r}")
        return cls(tuple(values), origin=f"named:{name}")

    @classmethod
    def from_spec(cls, text: str, size: int) -> "HookWeightFunction":
        """CLI form: a named table or comma-separated explicit values."""
        text = text.strip()
        if text in ("1", "1/n", "n"):
            return cls.named(text, size)
        values = tuple(rational_from_string(v) for v in text.split(","))
        if len(values) < size:
            raise ValueError(
                f"explicit rho table has {len(values)} entries, need {size}"
            )
        return cls(values[:size])


# --- solvers for the two classical equations ----------------------------------


def solve_simply_generated(family: DegreeWeightFamily, order: int) -> TruncatedSeries:
    """The unique series T with ``T(0)=0`` and ``T = z*phi(T)``.

    Triangular: ``T_n = [z^{n-1}] phi(T)`` only involves coefficients of
    index below n, so the series is built one coefficient at a time.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    phi = family.phi_series(order)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        partial = TruncatedSeries(coeffs[:n])
        coeffs[n] = phi.truncate(n - 1).compose(partial).coeff(n - 1)
    return TruncatedSeries(coeffs)


def solve_increasing(family: DegreeWeightFamily, order: int) -> TruncatedSeries:
    """Exponential-generating-function solution of ``T' = phi(T)``, ``T(0)=0``.

    Returned as plain coefficients ``[z^n]T = T_n/n!``; use
    :func:`egf_counts` for the counts ``T_n`` themselves.  Triangular:
    ``n*[z^n]T = [z^{n-1}] phi(T)``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    phi = family.phi_series(order)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        partial = TruncatedSeries(coeffs[:n])
        coeffs[n] = phi.truncate(n - 1).compose(partial).coeff(n - 1) / n
    return TruncatedSeries(coeffs)


def egf_counts(series: TruncatedSeries) -> list[Fraction]:
    """``n! * [z^n]`` for each n: counts behind an EGF's coefficients."""
    return [factorial(n) * c for n, c in enumerate(series.coefficients)]


# --- rho extraction and the inverse recurrence -----------------------------------


def rho_from_series(
    F: TruncatedSeries, family: DegreeWeightFamily, upto: int
) -> HookWeightFunction:
    """Recover ``rho(1..upto)`` from the weighted counting series F.

    ``rho(n) = [z^n]F / [z^{n-1}] phi(F)``, each entry an exact quotient.
    Raises :class:`DenominatorVanishes` where the quotient is undefined.
    """
    _check_tree_series(F, upto)
    phi = family.phi_series(upto)
    phi_of_F = phi.truncate(upto - 1).compose(F.truncate(upto - 1))
    values = []
    for n in range(1, upto + 1):
        den = phi_of_F.coeff(n - 1)
        if den == 0:
            raise DenominatorVanishes(n, "[z^{n-1}] phi(F) = 0")
        values.append(F.coeff(n) / den)
    return HookWeightFunction(tuple(values), origin="derived-from-F")


def series_from_rho(
    rho: HookWeightFunction, family: DegreeWeightFamily, order: int
) -> TruncatedSeries:
    """The unique F with ``F(0)=0`` and ``[z^n]F = rho(n)*[z^{n-1}]phi(F)``.

    The right side only involves coefficients of index below n, so the
    series is built triangularly; in particular ``F_1 = phi_0 * rho(1)``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if rho.size < order:
        raise RhoRangeExceeded(
            f"rho covers 1..{rho.size} but order {order} was requested"
        )
    phi = family.phi_series(order)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        partial = TruncatedSeries(coeffs[:n])
        coeffs[n] = rho(n) * phi.truncate(n - 1).compose(partial).coeff(n - 1)
    return TruncatedSeries(coeffs)


def rho_from_forest(
    G: TruncatedSeries, family: DegreeWeightFamily, upto: int
) -> HookWeightFunction:
    """Recover rho from a forest-side series ``G = phi(F)``.

    ``rho(n) = [z^n] phi_inverse(G) / [z^{n-1}] G`` where ``phi_inverse``
    is the compositional inverse of phi around ``phi_0``, realized as
    ``H = revert(phi - phi_0)`` so that ``phi_inverse(phi_0 + u) = H(u)``.
    Requires ``G(0) = phi_0`` exactly and ``phi_1 != 0``.
    """
    if upto < 1:
        raise ValueError("upto must be at least 1")
    if G.order < upto:
        raise OrderExceeded(
            f"G is known to order {G.order} but rho(1..{upto}) needs order {upto}"
        )
    phi = family.phi_series(upto)
    phi0 = phi.coeff(0)
    if G.coeff(0) != phi0:
        raise ConstantMismatch(
            f"G(0) = {rational_to_string(G.coeff(0))} but the family has "
            f"phi_0 = {rational_to_string(phi0)}"
        )
    if phi.coeff(1) == 0:
        raise NotInvertible(
            "phi_1 = 0: the degree-weight series has no compositional inverse"
        )
    H = (phi - phi0).revert()
    inverse_of_G = H.compose(G.truncate(upto) - phi0)
    values = []
    for n in range(1, upto + 1):
        den = G.coeff(n - 1)
        if den == 0:
            raise DenominatorVanishes(n, "[z^{n-1}] G = 0")
        values.append(inverse_of_G.coeff(n) / den)
    return HookWeightFunction(tuple(values), origin="derived-from-G")


def binary_rho(F: TruncatedSeries, upto: int) -> HookWeightFunction:
    """The binary-tree special case ``rho(n) = [z^n]F / [z^{n-1}](1+F)^2``.

    Implemented directly on the series (no family object) so it can serve
    as an independent cross-check of :func:`rho_from_series` at
    ``phi = (1+t)^2``.
    """
    _check_tree_series(F, upto)
    den_series = (F.truncate(upto - 1) + 1).pow_int(2)
    values = []
    for n in range(1, upto + 1):
        den = den_series.coeff(n - 1)
        if den == 0:
            raise DenominatorVanishes(n, "[z^{n-1}] (1+F)^2 = 0")
        values.append(F.coeff(n) / den)
    return HookWeightFunction(tuple(values), origin="derived-from-F")


def _check_tree_series(F: TruncatedSeries, upto: int) -> None:
    if upto < 1:
        raise ValueError("upto must be at least 1")
    if F.coeff(0) != 0:
        raise ValueError("a tree counting series must have F(0) = 0")
    if F.order < upto:
        raise OrderExceeded(
            f"F is known to order {F.order} but rho(1..{upto}) needs order {upto}"
        )


# --- the 1/(1-t)^alpha closed forms ------------------------------------------------


def alpha_family_series(alpha: Rational, order: int) -> TruncatedSeries:
    """Closed-form EGF coefficients for ``phi(t) = 1/(1-t)^alpha``:

    ``T(z) = 1 - (1 - (alpha+1) z)^(1/(alpha+1))``, expanded exactly.
    """
    alpha = _check_alpha(alpha)
    if order < 1:
        raise ValueError("order must be at least 1")
    a1 = alpha + 1
    base = TruncatedSeries([1, -a1], order=order)
    return 1 - base.pow_rational(Fraction(1) / a1)


def alpha_family_count(alpha: Rational, n: int) -> Fraction:
    """The count ``T_n = (alpha+1)^(n-1) * (n-1)! * C(n-1-1/(alpha+1), n-1)``
    for ``phi(t) = 1/(1-t)^alpha``, with the generalized binomial
    coefficient expanded as a falling factorial.  Equals
    ``n! * [z^n]`` of :func:`alpha_family_series`.
    """
    alpha = _check_alpha(alpha)
    if n < 1:
        raise ValueError("n must be at least 1")
    a1 = alpha + 1
    x = n - 1 - Fraction(1) / a1
    binom = Fraction(1)
    for i in range(n - 1):
        binom *= x - i
    binom /= factorial(n - 1)
    return a1 ** (n - 1) * factorial(n - 1) * binom


def _check_alpha(alpha: Rational) -> Fraction:
    alpha = as_rational(alpha)
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return alpha
