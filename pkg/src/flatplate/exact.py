"""Exact rational arithmetic and sparse univariate polynomials in eta.

Coefficients are ``fractions.Fraction`` values, which stay in canonical form
by construction: positive denominator, gcd(numerator, denominator) = 1, and
zero represented uniquely as 0/1.  A polynomial is a sparse map from
non-negative powers of the similarity variable eta to nonzero coefficients;
the zero polynomial stores no terms and has degree ``None``.

Everything here is immutable and side-effect free, so values may be shared
freely across threads.  Float evaluation is provided for plotting and
comparison only; the rational path is the source of truth.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike, flag: str | None = None) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Accepts Fraction, int, or a string literal such as ``"5"``, ``"11/2"``
    or ``"2.5"`` (decimal digits convert exactly).  Raises ValueError for
    anything else; ``flag`` names the offending option in the message.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    where = f" for {flag}" if flag else ""
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(
                f"malformed rational literal {value!r}{where} (use forms like '5' or '11/2')"
            ) from None
    raise ValueError(f"cannot interpret {value!r}{where} as a rational number")


def rational_to_obj(r: Fraction) -> dict:
    """Serialize a rational as decimal strings, {"num": "-4867", "den": "10752000"}.

    Strings rather than machine integers keep the values exact in any host.
    """
    return {"num": str(r.numerator), "den": str(r.denominator)}


def rational_from_obj(obj: Mapping) -> Fraction:
    try:
        num = int(str(obj["num"]))
        den = int(str(obj["den"]))
    except (KeyError, TypeError, ValueError):
        raise ValueError(f"not a serialized rational: {obj!r}") from None
    if den <= 0:
        raise ValueError(f"serialized rational must have positive denominator: {obj!r}")
    return Fraction(num, den)


class RationalPolynomial:
    """Sparse univariate polynomial in eta over the rationals.

    Terms with coefficient zero are never stored, so equality is plain
    dict equality and the zero polynomial is the empty map.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[int, Fraction] = {}
        for power, coeff in items:
            if not isinstance(power, int) or power < 0:
                raise ValueError(f"polynomial power must be a non-negative integer, got {power!r}")
            c = as_rational(coeff)
            if c != 0:
                store[power] = store.get(power, Fraction(0)) + c
        self._coeffs = {p: c for p, c in store.items() if c != 0}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls()

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalPolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "RationalPolynomial":
        return cls({power: coeff})

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | None:
        """Highest stored power; None for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def coefficient(self, power: int) -> Fraction:
        return self._coeffs.get(power, Fraction(0))

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Yield (power, coefficient) pairs in ascending power order."""
        return iter(sorted(self._coeffs.items()))

    def __len__(self) -> int:
        return len(self._coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for p, c in other._coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return RationalPolynomial(out)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for p, c in other._coeffs.items():
            out[p] = out.get(p, Fraction(0)) - c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial({p: -c for p, c in self._coeffs.items()})

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            out: dict[int, Fraction] = {}
            for p, a in self._coeffs.items():
                for q, b in other._coeffs.items():
                    out[p + q] = out.get(p + q, Fraction(0)) + a * b
            return RationalPolynomial(out)
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "RationalPolynomial":
        f = as_rational(factor)
        return RationalPolynomial({p: c * f for p, c in self._coeffs.items()})

    # -- calculus ------------------------------------------------------------

    def derivative(self, order: int = 1) -> "RationalPolynomial":
        """Exact term-wise derivative, applied ``order`` times."""
        coeffs = self._coeffs
        for _ in range(order):
            coeffs = {p - 1: c * p for p, c in coeffs.items() if p >= 1}
        return RationalPolynomial(coeffs)

    def antiderivative(self, order: int = 1) -> "RationalPolynomial":
        """Term-wise antiderivative with zero constant of integration.

        Integration constants are the caller's business (the series engine
        fits them against boundary conditions in a separate step).
        """
        coeffs = self._coeffs
        for _ in range(order):
            coeffs = {p + 1: c / (p + 1) for p, c in coeffs.items()}
        return RationalPolynomial(coeffs)

    # -- evaluation ----------------------------------------------------------

    def eval_exact(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        xr = as_rational(x)
        acc = Fraction(0)
        last: int | None = None
        for power, coeff in sorted(self._coeffs.items(), reverse=True):
            acc = coeff if last is None else acc * xr ** (last - power) + coeff
            last = power
        return acc if last is None else acc * xr**last

    def eval_float(self, x: float) -> float:
        """Horner evaluation in float64.  Approximate: coefficients round
        to the nearest double before any arithmetic happens."""
        xf = float(x)
        acc = 0.0
        last: int | None = None
        for power, coeff in sorted(self._coeffs.items(), reverse=True):
            acc = float(coeff) if last is None else acc * xf ** (last - power) + float(coeff)
            last = power
        return acc if last is None else acc * xf**last

    # -- comparisons / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({dict(sorted(self._coeffs.items()))!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for power, coeff in self.terms():
            body = _format_term(power, abs(coeff))
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(parts)

    # -- serialization ---------------------------------------------------------

    def to_obj(self) -> list[dict]:
        """Serialize as [{"power": p, "num": "...", "den": "..."}] ascending."""
        return [{"power": p, **rational_to_obj(c)} for p, c in self.terms()]

    @classmethod
    def from_obj(cls, obj: Iterable[Mapping]) -> "RationalPolynomial":
        coeffs: dict[int, Fraction] = {}
        for entry in obj:
            try:
                power = int(entry["power"])
            except (KeyError, TypeError, ValueError):
                raise ValueError(f"not a serialized polynomial term: {entry!r}") from None
            coeffs[power] = rational_from_obj(entry)
        return cls(coeffs)


def _format_term(power: int, coeff: Fraction) -> str:
    if power == 0:
        return str(coeff)
    var = "eta" if power == 1 else f"eta^{power}"
    if coeff == 1:
        return var
    if coeff.denominator == 1:
        return f"{coeff}*{var}"
    return f"({coeff})*{var}"
