"""Exact scalar arithmetic: rationals, residues mod m, sparse polynomials.

Every scalar backend is exact; there is no floating point anywhere in the
package.  Three backends are provided:

* rational   -- arbitrary-precision rationals.  Values are plain ``int`` or
  ``fractions.Fraction``; integers are rationals in lowest terms with
  denominator 1, and ``Fraction`` keeps lowest terms with a positive
  denominator by construction.
* mod m      -- residues stored canonically in ``[0, m)`` (:class:`Residue`).
* polynomial -- sparse multivariate commutative polynomials with rational
  coefficients (:class:`Poly`).

A :class:`Ring` descriptor per backend supplies construction, canonical
"cell" values used inside matrices, and the few batched operations that sit
on hot paths.  All values are immutable and all operations are pure, so
everything here is safe to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import MismatchError, NotInvertibleError

RationalLike = (int, Fraction)


def _as_rational(value):
    if isinstance(value, bool) or not isinstance(value, RationalLike):
        raise MismatchError(f"not a rational scalar: {value!r}")
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class Residue:
    """An element of Z/mZ, stored as its canonical representative in [0, m).

    Arithmetic with plain integers coerces them into the same modulus;
    arithmetic between residues requires equal moduli.
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "value", value % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, v):
        raise AttributeError("Residue is immutable")

    def _coerce(self, other) -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise MismatchError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Residue(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(self.value - o.value, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(o.value - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def inverse(self) -> "Residue":
        g = math.gcd(self.value, self.modulus)
        if g != 1:
            raise NotInvertibleError(
                f"{self.value} is not invertible mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise MismatchError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.modulus
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o.value

    def __hash__(self):
        return hash((self.modulus, self.value))

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"


def _monomial_mul(a, b):
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Sparse commutative polynomial with rational coefficients.

    Terms map a monomial (a sorted tuple of ``(variable, exponent)`` pairs
    with positive exponents) to a nonzero rational coefficient.  The stored
    term tuple is sorted, which makes polynomials hashable and gives them a
    strict total order (the order on sorted term lists).
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, v):
        if name == "_hash" and getattr(self, "_hash", None) is None:
            object.__setattr__(self, name, v)
            return
        raise AttributeError("Poly is immutable")

    @classmethod
    def _from_dict(cls, d) -> "Poly":
        items = []
        for mono, coeff in d.items():
            coeff = _as_rational(coeff)
            if coeff != 0:
                items.append((mono, coeff))
        items.sort(key=lambda t: t[0])
        return cls(items)

    @classmethod
    def variable(cls, name: str) -> "Poly":
        return cls((((((name, 1),)), 1),))

    @classmethod
    def constant(cls, value) -> "Poly":
        value = _as_rational(value)
        if value == 0:
            return cls(())
        return cls((((), value),))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, RationalLike) and not isinstance(other, bool):
            return Poly.constant(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for mono, coeff in o.terms:
            acc[mono] = acc.get(mono, 0) + coeff
        return Poly._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in o.terms:
                mono = _monomial_mul(m1, m2)
                acc[mono] = acc.get(mono, 0) + c1 * c2
        return Poly._from_dict(acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms < o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.terms)
            self._hash = h
        return h

    def __repr__(self):
        return self.render()

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.terms:
            factors = [f"{v}^{e}" if e > 1 else v for v, e in mono]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append(str(coeff) + "*" + "*".join(factors))
        return " + ".join(parts)


class Ring:
    """Descriptor of a scalar backend.

    ``cell`` values are the internal representation used for matrix and
    group-algebra entries; for the rational and polynomial backends they are
    the scalars themselves, for the modular backend they are plain canonical
    integers (wrapped into :class:`Residue` only at the scalar boundary).
    """

    kind = "abstract"

    def key(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def inverse_of_factorial(self, d: int):
        """Return (d!)^-1 as a scalar, or raise NotInvertibleError."""
        raise NotImplementedError

    def div(self, a, b):
        """Exact division a/b; raises NotInvertibleError when impossible."""
        raise NotImplementedError

    # matrix-cell protocol ------------------------------------------------
    def cell(self, value):
        raise NotImplementedError

    def cell_to_scalar(self, cell):
        return cell

    def scalar_to_cell(self, scalar):
        return self.cell(scalar)

    def dot(self, row, col):
        return sum(a * b for a, b in zip(row, col))

    def cell_sum(self, cells):
        return sum(cells)

    def cell_neg(self, cell):
        return -cell

    def cell_scale(self, factor_cell, cell):
        return factor_cell * cell

    def reduce(self, value):
        """Canonicalize an integer combination of cells (hot loops only)."""
        return value

    def render(self, scalar) -> str:
        return str(scalar)

    def render_cell(self, cell) -> str:
        return str(cell)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.describe()

    def describe(self) -> str:
        return self.kind


class RationalRing(Ring):
    """Exact rationals: plain ints plus fractions.Fraction."""

    kind = "rational"

    def key(self):
        return ("rational",)

    def from_int(self, n: int):
        return n

    def inverse_of_factorial(self, d: int):
        return Fraction(1, math.factorial(d))

    def div(self, a, b):
        if b == 0:
            raise NotInvertibleError("division by zero")
        return _as_rational(Fraction(a) / Fraction(b))

    def cell(self, value):
        return _as_rational(value)


class ModRing(Ring):
    """Integers mod m; cells are canonical representatives in [0, m)."""

    kind = "mod"

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus

    def key(self):
        return ("mod", self.modulus)

    def from_int(self, n: int):
        return Residue(n, self.modulus)

    def inverse_of_factorial(self, d: int):
        fact = math.factorial(d) % self.modulus
        if math.gcd(fact, self.modulus) != 1:
            raise NotInvertibleError(
                f"{d}! not invertible mod {self.modulus}")
        return Residue(pow(fact, -1, self.modulus), self.modulus)

    def div(self, a, b):
        if not isinstance(b, Residue):
            b = self.from_int(b)
        if not isinstance(a, Residue):
            a = self.from_int(a)
        return a * b.inverse()

    def cell(self, value):
        m = self.modulus
        if isinstance(value, Residue):
            if value.modulus != m:
                raise MismatchError(
                    f"modulus mismatch: {m} vs {value.modulus}")
            return value.value
        if isinstance(value, bool):
            raise MismatchError(f"not a mod-{m} scalar: {value!r}")
        if isinstance(value, int):
            return value % m
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            if math.gcd(den, m) != 1:
                raise NotInvertibleError(f"1/{den} does not exist mod {m}")
            return num * pow(den, -1, m) % m
        raise MismatchError(f"not a mod-{m} scalar: {value!r}")

    def cell_to_scalar(self, cell):
        return Residue(cell, self.modulus)

    def dot(self, row, col):
        return sum(a * b for a, b in zip(row, col)) % self.modulus

    def cell_sum(self, cells):
        return sum(cells) % self.modulus

    def cell_neg(self, cell):
        return -cell % self.modulus

    def cell_scale(self, factor_cell, cell):
        return factor_cell * cell % self.modulus

    def reduce(self, value):
        return value % self.modulus

    def render(self, scalar) -> str:
        if isinstance(scalar, Residue):
            return repr(scalar)
        return f"{scalar % self.modulus} mod {self.modulus}"

    def describe(self) -> str:
        return f"mod {self.modulus}"


class PolyRing(Ring):
    """Sparse multivariate polynomials over the rationals."""

    kind = "poly"

    def key(self):
        return ("poly",)

    def from_int(self, n: int):
        return Poly.constant(n)

    def inverse_of_factorial(self, d: int):
        return Poly.constant(Fraction(1, math.factorial(d)))

    def cell(self, value):
        if isinstance(value, Poly):
            return value
        return Poly.constant(value)

    def dot(self, row, col):
        acc = Poly(())
        for a, b in zip(row, col):
            acc = acc + a * b
        return acc

    def cell_sum(self, cells):
        acc = Poly(())
        for c in cells:
            acc = acc + c
        return acc

    def render(self, scalar) -> str:
        if isinstance(scalar, Poly):
            return scalar.render()
        return str(scalar)


QQ = RationalRing()
QPOLY = PolyRing()


def ring_from_spec(spec: str) -> Ring:
    """Parse a ring spec string: ``rational`` or ``mod:<m>``."""
    if spec == "rational":
        return QQ
    if spec.startswith("mod:"):
        try:
            m = int(spec[4:])
        except ValueError:
            raise ValueError(f"bad modulus in ring spec {spec!r}") from None
        return ModRing(m)
    raise ValueError(f"unknown ring spec {spec!r}")
