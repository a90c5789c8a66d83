"""Algebra and semigroup elements: matrices, free words, group algebras.

Three element backends share a small informal protocol: ``*`` is the
semigroup product, ``==``/``hash`` are value-based, and ``<`` is a strict
total order used to canonicalize multisets.  The orders are:

* words: by (length, then lexicographically on the letter tuple);
* matrices: row-major lexicographic comparison of entries;
* group-algebra elements: lexicographic on the dense coefficient vector.

Matrices and group-algebra elements additionally support ``+``, unary ``-``
and ``.scale(scalar)`` (they live in an algebra, not just a semigroup), and
have a multiplicative unit ``.one()``.  Free words are a semigroup without
unit: ``.one()`` raises.  All values are immutable and safe to share across
threads.
"""

from __future__ import annotations

from .errors import GroupTableError, MismatchError, UnitlessError, UnknownLetterError
from .rings import Ring


class Matrix:
    """Immutable square matrix over a scalar ring."""

    __slots__ = ("ring", "n", "rows", "_hash")

    def __init__(self, ring: Ring, rows):
        rows = tuple(tuple(ring.cell(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, v):
        if name == "_hash" and getattr(self, "_hash", None) is None:
            object.__setattr__(self, name, v)
            return
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _make(cls, ring, n, rows):
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        one, zero = ring.cell(1), ring.cell(0)
        return cls._make(ring, n, tuple(
            tuple(one if i == j else zero for j in range(n))
            for i in range(n)))

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "Matrix":
        z = ring.cell(0)
        return cls._make(ring, n, tuple((z,) * n for _ in range(n)))

    def _check_peer(self, other):
        if not isinstance(other, Matrix):
            raise MismatchError(f"expected a matrix, got {other!r}")
        if self.ring.key() != other.ring.key():
            raise MismatchError(
                f"ring mismatch: {self.ring.describe()} vs {other.ring.describe()}")
        if self.n != other.n:
            raise MismatchError(f"size mismatch: {self.n} vs {other.n}")

    def __mul__(self, other):
        self._check_peer(other)
        ring = self.ring
        cols = tuple(zip(*other.rows))
        rows = tuple(tuple(ring.dot(row, col) for col in cols)
                     for row in self.rows)
        return Matrix._make(ring, self.n, rows)

    def __add__(self, other):
        self._check_peer(other)
        ring = self.ring
        rows = tuple(tuple(ring.cell_sum((a, b)) for a, b in zip(ra, rb))
                     for ra, rb in zip(self.rows, other.rows))
        return Matrix._make(ring, self.n, rows)

    def __neg__(self):
        ring = self.ring
        rows = tuple(tuple(ring.cell_neg(a) for a in row) for row in self.rows)
        return Matrix._make(ring, self.n, rows)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar) -> "Matrix":
        ring = self.ring
        c = ring.scalar_to_cell(scalar)
        rows = tuple(tuple(ring.cell_scale(c, a) for a in row)
                     for row in self.rows)
        return Matrix._make(ring, self.n, rows)

    def one(self) -> "Matrix":
        return Matrix.identity(self.ring, self.n)

    def trace(self):
        ring = self.ring
        return ring.cell_to_scalar(
            ring.cell_sum(tuple(self.rows[i][i] for i in range(self.n))))

    def entry(self, i: int, j: int):
        return self.ring.cell_to_scalar(self.rows[i][j])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.n == other.n and self.ring.key() == other.ring.key()
                and self.rows == other.rows)

    def __lt__(self, other):
        self._check_peer(other)
        return self.rows < other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring.key(), self.rows))
            self._hash = h
        return h

    def render(self) -> str:
        rc = self.ring.render_cell
        return "[" + ",".join(
            "[" + ",".join(rc(v) for v in row) + "]" for row in self.rows) + "]"

    def __repr__(self):
        return f"Matrix({self.ring.describe()}, {self.render()})"


class Word:
    """A nonempty word in a free semigroup; letters are string identifiers.

    The free semigroup has no unit: the empty word is not a valid element.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters or not all(isinstance(l, str) and l for l in letters):
            raise ValueError("a word is a nonempty sequence of letter ids")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, v):
        if name == "_hash" and getattr(self, "_hash", None) is None:
            object.__setattr__(self, name, v)
            return
        raise AttributeError("Word is immutable")

    def __mul__(self, other):
        if not isinstance(other, Word):
            raise MismatchError(f"expected a word, got {other!r}")
        obj = object.__new__(Word)
        object.__setattr__(obj, "letters", self.letters + other.letters)
        object.__setattr__(obj, "_hash", None)
        return obj

    def one(self):
        raise UnitlessError("the free semigroup has no unit element")

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __lt__(self, other):
        if not isinstance(other, Word):
            raise MismatchError(f"expected a word, got {other!r}")
        a, b = self.letters, other.letters
        if len(a) != len(b):
            return len(a) < len(b)
        return a < b

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("word", self.letters))
            self._hash = h
        return h

    def render(self) -> str:
        return "*".join(self.letters)

    def __repr__(self):
        return f"Word({self.render()})"


def word(text: str) -> Word:
    """Build a word from a compact ``a*b*c`` string."""
    return Word(text.split("*"))


class GroupTable:
    """A finite group given by an explicit multiplication table.

    File format: first line ``order n``, then n lines of n whitespace
    separated 0-based indices; row i, column j holds the index of g_i * g_j,
    and index 0 is the identity.  Identity behaviour and associativity are
    validated on construction.
    """

    __slots__ = ("order", "table")

    def __init__(self, table):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupTableError("table must be square and nonempty")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise GroupTableError(f"entry {v!r} out of range [0,{n})")
        for k in range(n):
            if table[0][k] != k or table[k][0] != k:
                raise GroupTableError("index 0 must act as the identity")
        for i in range(n):
            for j in range(n):
                tij = table[i][j]
                for k in range(n):
                    if table[tij][k] != table[i][table[j][k]]:
                        raise GroupTableError(
                            f"associativity fails at ({i},{j},{k})")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, v):
        raise AttributeError("GroupTable is immutable")

    @classmethod
    def parse(cls, text: str) -> "GroupTable":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GroupTableError("empty group table")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "order":
            raise GroupTableError("first line must be 'order n'")
        try:
            n = int(head[1])
        except ValueError:
            raise GroupTableError(f"bad order {head[1]!r}") from None
        if len(lines) != n + 1:
            raise GroupTableError(f"expected {n} table rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            try:
                rows.append([int(tok) for tok in ln.split()])
            except ValueError:
                raise GroupTableError(f"non-integer entry in row {ln!r}") from None
        return cls(rows)

    @classmethod
    def load(cls, path) -> "GroupTable":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh.read())

    @classmethod
    def cyclic(cls, n: int) -> "GroupTable":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def __eq__(self, other):
        return isinstance(other, GroupTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"GroupTable(order={self.order})"


class GroupAlgebraElement:
    """Element of the group algebra of a finite group over a scalar ring.

    Stored as a dense coefficient vector indexed by group element; the
    product is convolution through the multiplication table.  Intended for
    small groups (order <= 24) only.
    """

    __slots__ = ("group", "ring", "coeffs", "_hash")

    def __init__(self, group: GroupTable, ring: Ring, coeffs):
        coeffs = tuple(ring.cell(v) for v in coeffs)
        if len(coeffs) != group.order:
            raise ValueError(
                f"expected {group.order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, v):
        if name == "_hash" and getattr(self, "_hash", None) is None:
            object.__setattr__(self, name, v)
            return
        raise AttributeError("GroupAlgebraElement is immutable")

    @classmethod
    def _make(cls, group, ring, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "group", group)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def basis(cls, group, ring, index: int) -> "GroupAlgebraElement":
        coeffs = [ring.cell(0)] * group.order
        coeffs[index] = ring.cell(1)
        return cls._make(group, ring, tuple(coeffs))

    @classmethod
    def unit(cls, group, ring) -> "GroupAlgebraElement":
        return cls.basis(group, ring, 0)

    def _check_peer(self, other):
        if not isinstance(other, GroupAlgebraElement):
            raise MismatchError(f"expected a group-algebra element, got {other!r}")
        if self.group is not other.group and self.group != other.group:
            raise MismatchError("group mismatch")
        if self.ring.key() != other.ring.key():
            raise MismatchError(
                f"ring mismatch: {self.ring.describe()} vs {other.ring.describe()}")

    def __mul__(self, other):
        self._check_peer(other)
        ring, table = self.ring, self.group.table
        out = [0] * self.group.order
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[row[j]] += a * b
        # re-wrap: the integer 0 seeds above must become proper cells
        return GroupAlgebraElement._make(
            self.group, ring, tuple(ring.cell(ring.reduce(v)) for v in out))

    def __add__(self, other):
        self._check_peer(other)
        ring = self.ring
        return GroupAlgebraElement._make(
            self.group, ring,
            tuple(ring.cell_sum((a, b))
                  for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        ring = self.ring
        return GroupAlgebraElement._make(
            self.group, ring, tuple(ring.cell_neg(a) for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar) -> "GroupAlgebraElement":
        ring = self.ring
        c = ring.scalar_to_cell(scalar)
        return GroupAlgebraElement._make(
            self.group, ring, tuple(ring.cell_scale(c, a) for a in self.coeffs))

    def one(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement.unit(self.group, self.ring)

    def coefficient(self, index: int):
        return self.ring.cell_to_scalar(self.coeffs[index])

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.group == other.group
                and self.ring.key() == other.ring.key()
                and self.coeffs == other.coeffs)

    def __lt__(self, other):
        self._check_peer(other)
        return self.coeffs < other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring.key(), self.group.table, self.coeffs))
            self._hash = h
        return h

    def render(self) -> str:
        rc = self.ring.render_cell
        parts = [f"{rc(c)}*g{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"GroupAlgebraElement({self.render()})"


class LetterHom:
    """Semigroup homomorphism out of a free semigroup, given on letters.

    A word maps to the product of its letters' images, so multiplicativity
    holds by construction.  Images must all live in one backend.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: dict):
        mapping = dict(mapping)
        if not mapping:
            raise ValueError("a letter assignment must be nonempty")
        images = list(mapping.values())
        first = images[0]
        for img in images[1:]:
            if isinstance(first, Matrix):
                first._check_peer(img)
            elif isinstance(first, Word):
                if not isinstance(img, Word):
                    raise MismatchError("mixed image backends")
            elif isinstance(first, GroupAlgebraElement):
                first._check_peer(img)
            else:
                raise MismatchError(f"unsupported image {first!r}")
        self.mapping = mapping

    def __call__(self, w: Word):
        mapping = self.mapping
        try:
            out = mapping[w.letters[0]]
            for letter in w.letters[1:]:
                out = out * mapping[letter]
        except KeyError as exc:
            raise UnknownLetterError(f"letter {exc.args[0]!r} has no image") from None
        return out

    def __repr__(self):
        inside = ", ".join(f"{k}->{v!r}" for k, v in sorted(self.mapping.items()))
        return f"LetterHom({inside})"
