"""Per-order polynomial corrections for the flat-plate boundary-layer system
on a truncated domain.

The coupled similarity equations

    f'''(eta) + (1/2) f(eta) f''(eta) = 0
    eps theta''(eta) + (1/2) f(eta) theta'(eta) = 0

are embedded in a one-parameter family whose linear part is the highest
derivative (d^3/deta^3 for f, eps d^2/deta^2 for theta).  Expanding f and
theta in powers of the embedding parameter p and matching orders gives, for
every j >= 1,

    f_j'''      = -(1/2) sum_{k=0}^{j-1} f_k f''_{j-1-k}
    eps theta_j'' = -(1/2) sum_{k=0}^{j-1} f_k theta'_{j-1-k}

Each right-hand side is a polynomial, so each order is solved exactly:
antidifferentiate with zero constants, then add the one homogeneous term
left free by the conditions at 0 and fit it at eta = L.  The far boundary
is imposed at the finite length L (the "shrunk infinity"), not at infinity:

    f_j(0) = 0,  f_j'(0) = 0,  f_j'(L) = delta_j0
    theta_j(0) = delta_j0,     theta_j(L) = 0

Setting p = 1 turns the correction lists into the usable approximations;
``HpmSeries.partial_sum`` does exactly that.  All arithmetic is exact, so
the boundary and per-order residual identities hold as polynomial
identities, not merely to some tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    RationalPolynomial,
    as_rational,
    rational_from_obj,
    rational_to_obj,
)


@dataclass(frozen=True)
class HpmConfig:
    """Series parameters: highest retained order, domain length L, and eps."""

    order: int
    L: Fraction = Fraction(5)
    epsilon: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "L", as_rational(self.L, flag="L"))
        object.__setattr__(self, "epsilon", as_rational(self.epsilon, flag="epsilon"))
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"order must be a non-negative integer, got {self.order!r}")
        if self.L <= 0:
            raise ValueError(f"domain length must satisfy L > 0, got {self.L}")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must satisfy epsilon > 0, got {self.epsilon}")


@dataclass(frozen=True)
class HpmSeries:
    """Correction lists f_j / theta_j (index = power of the embedding parameter)."""

    f_corrections: tuple[RationalPolynomial, ...]
    theta_corrections: tuple[RationalPolynomial, ...]
    config: HpmConfig

    @property
    def order(self) -> int:
        return self.config.order

    def partial_sum(self, which: str, up_to: int | None = None) -> RationalPolynomial:
        """Exact sum of corrections 0..up_to (embedding parameter set to 1).

        ``which`` selects "f" or "theta"; ``up_to`` defaults to the full order.
        """
        if which == "f":
            corrections = self.f_corrections
        elif which == "theta":
            corrections = self.theta_corrections
        else:
            raise ValueError(f"which must be 'f' or 'theta', got {which!r}")
        if up_to is None:
            up_to = self.order
        if not 0 <= up_to <= self.order:
            raise ValueError(f"up_to must be in 0..{self.order}, got {up_to}")
        total = RationalPolynomial.zero()
        for poly in corrections[: up_to + 1]:
            total = total + poly
        return total


def initial_corrections(config: HpmConfig) -> tuple[RationalPolynomial, RationalPolynomial]:
    """Order-0 pair: the minimal-degree polynomials through the order-0 conditions.

    f_0''' = 0 with f_0(0)=0, f_0'(0)=0, f_0'(L)=1 gives f_0 = eta^2/(2L);
    theta_0'' = 0 with theta_0(0)=1, theta_0(L)=0 gives theta_0 = 1 - eta/L.
    """
    L = config.L
    f0 = RationalPolynomial.monomial(2, Fraction(1, 2) / L)
    theta0 = RationalPolynomial({0: Fraction(1), 1: -1 / L})
    return f0, theta0


def recurrence_step_f(
    j: int, prior_f: Sequence[RationalPolynomial], config: HpmConfig
) -> RationalPolynomial:
    """Order-j momentum correction from corrections 0..j-1.

    Solves f_j''' = -(1/2) sum_{k<j} f_k f''_{j-1-k} exactly: triple
    antiderivative (zero constants) kills nothing at 0, the conditions
    f_j(0)=0 and f_j'(0)=0 exclude the 1 and eta homogeneous terms, and the
    remaining c*eta^2 term is fixed by f_j'(L) = 0.
    """
    if j < 1:
        raise ValueError(f"recurrence order must be >= 1, got {j}")
    if len(prior_f) != j:
        raise ValueError(f"need exactly {j} prior f corrections, got {len(prior_f)}")
    rhs = RationalPolynomial.zero()
    for k in range(j):
        rhs = rhs + prior_f[k] * prior_f[j - 1 - k].derivative(2)
    rhs = rhs.scale(Fraction(-1, 2))
    particular = rhs.antiderivative(3)
    c = -particular.derivative().eval_exact(config.L) / (2 * config.L)
    return particular + RationalPolynomial.monomial(2, c)


def recurrence_step_theta(
    j: int,
    prior_f: Sequence[RationalPolynomial],
    prior_theta: Sequence[RationalPolynomial],
    config: HpmConfig,
) -> RationalPolynomial:
    """Order-j temperature correction from f and theta corrections 0..j-1.

    Solves eps theta_j'' = -(1/2) sum_{k<j} f_k theta'_{j-1-k}: double
    antiderivative, theta_j(0)=0 excludes the constant, and the b*eta term
    is fixed by theta_j(L) = 0.  Division by eps happens here, which is why
    eps = 0 is rejected at config construction.
    """
    if j < 1:
        raise ValueError(f"recurrence order must be >= 1, got {j}")
    if len(prior_f) != j or len(prior_theta) != j:
        raise ValueError(f"need exactly {j} prior corrections of each kind")
    rhs = RationalPolynomial.zero()
    for k in range(j):
        rhs = rhs + prior_f[k] * prior_theta[j - 1 - k].derivative()
    rhs = rhs.scale(Fraction(-1, 2) / config.epsilon)
    particular = rhs.antiderivative(2)
    b = -particular.eval_exact(config.L) / config.L
    return particular + RationalPolynomial.monomial(1, b)


def build_series(config: HpmConfig) -> HpmSeries:
    """Construct all corrections 0..config.order.  Deterministic and exact."""
    f0, theta0 = initial_corrections(config)
    f_list = [f0]
    theta_list = [theta0]
    for j in range(1, config.order + 1):
        f_list.append(recurrence_step_f(j, f_list, config))
        theta_list.append(recurrence_step_theta(j, f_list[:j], theta_list, config))
    return HpmSeries(tuple(f_list), tuple(theta_list), config)


# -- series document (exact JSON round trip) ----------------------------------


def series_to_document(series: HpmSeries) -> dict:
    """JSON-able document with every coefficient as decimal strings."""
    return {
        "order": series.order,
        "L": rational_to_obj(series.config.L),
        "epsilon": rational_to_obj(series.config.epsilon),
        "f": [poly.to_obj() for poly in series.f_corrections],
        "theta": [poly.to_obj() for poly in series.theta_corrections],
    }


def series_from_document(doc: dict) -> HpmSeries:
    """Inverse of :func:`series_to_document`; round-trips bit-exactly."""
    try:
        config = HpmConfig(
            order=int(doc["order"]),
            L=rational_from_obj(doc["L"]),
            epsilon=rational_from_obj(doc["epsilon"]),
        )
        f_list = tuple(RationalPolynomial.from_obj(entry) for entry in doc["f"])
        theta_list = tuple(RationalPolynomial.from_obj(entry) for entry in doc["theta"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"not a series document: missing or bad field ({exc})") from None
    if len(f_list) != config.order + 1 or len(theta_list) != config.order + 1:
        raise ValueError("series document correction lists do not match the stated order")
    return HpmSeries(f_list, theta_list, config)


def save_series(series: HpmSeries, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(series_to_document(series), handle, indent=2)
        handle.write("\n")


def load_series(path) -> HpmSeries:
    with open(path, "r", encoding="utf-8") as handle:
        return series_from_document(json.load(handle))
