"""The multiset ring of a semigroup.

A finite multiset of semigroup elements is stored canonically as a sorted
tuple.  Integer formal sums of multisets form a ring: the product of two
multisets enumerates all partial bijections between their index sets, and
for each one merges the paired entries (multiplying them in the semigroup)
while keeping unpaired entries.  The empty multiset is the multiplicative
unit.

Partial bijections from [n] to [m] are enumerated deterministically: by
matched size k = 0..min(n,m), then domain subsets of [n] in lexicographic
order, then image subsets of [m] in lexicographic order, then the images as
permutations in lexicographic order.  The total count is
sum_k C(n,k)*C(m,k)*k!.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import BudgetExceededError

#: Default ceiling on the number of intermediate multisets a single formal
#: product may create; the count grows superexponentially in cardinalities.
DEFAULT_BUDGET = 10**7


class Multiset:
    """A canonical finite multiset of semigroup elements.

    Entries are kept sorted ascending under the backend's total order, so
    two multisets are equal exactly when their entry tuples are equal.  The
    empty multiset is valid (and is the unit of the multiset ring).
    """

    __slots__ = ("entries", "_hash")

    def __init__(self, entries):
        entries = sorted(entries)
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, v):
        if name == "_hash" and getattr(self, "_hash", None) is None:
            object.__setattr__(self, name, v)
            return
        raise AttributeError("Multiset is immutable")

    @classmethod
    def _make(cls, sorted_entries: tuple) -> "Multiset":
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", sorted_entries)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def of(cls, *entries) -> "Multiset":
        return cls(entries)

    @classmethod
    def empty(cls) -> "Multiset":
        return _EMPTY

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.entries == other.entries

    def __lt__(self, other):
        a, b = self.entries, other.entries
        if len(a) != len(b):
            return len(a) < len(b)
        return a < b

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.entries)
            self._hash = h
        return h

    def render(self) -> str:
        return "{" + ",".join(_render_entry(e) for e in self.entries) + "}"

    def __repr__(self):
        return f"Multiset({self.render()})"


_EMPTY = Multiset(())


def _render_entry(e) -> str:
    render = getattr(e, "render", None)
    return render() if render is not None else str(e)


@dataclass(frozen=True)
class PartialBijection:
    """A triple (I, J, alpha): I in [1..n], J in [1..m], alpha: I -> J.

    ``pairs`` holds (i, alpha(i)) sorted by i; all i are distinct and all
    alpha(i) are distinct.
    """

    n: int
    m: int
    pairs: tuple

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be >= 0")
        seen_i, seen_j = set(), set()
        prev_i = 0
        for i, j in self.pairs:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise ValueError(f"pair ({i},{j}) out of range")
            if i in seen_i or j in seen_j:
                raise ValueError("pairs must define a bijection")
            if i <= prev_i:
                raise ValueError("pairs must be sorted by domain index")
            seen_i.add(i)
            seen_j.add(j)
            prev_i = i

    @property
    def matched(self) -> int:
        return len(self.pairs)


@lru_cache(maxsize=None)
def partial_bijections(n: int, m: int) -> tuple:
    """Every partial bijection from [n] to [m], exactly once, in the
    documented deterministic order."""
    out = []
    for k in range(min(n, m) + 1):
        for dom in combinations(range(1, n + 1), k):
            for img_set in combinations(range(1, m + 1), k):
                for images in permutations(img_set):
                    out.append(PartialBijection(n, m, tuple(zip(dom, images))))
    return tuple(out)


def partial_bijection_count(n: int, m: int) -> int:
    """sum_k C(n,k)*C(m,k)*k!, the number of partial bijections [n]->[m]."""
    return sum(math.comb(n, k) * math.comb(m, k) * math.factorial(k)
               for k in range(min(n, m) + 1))


def product_along(x: Multiset, y: Multiset, pb: PartialBijection) -> Multiset:
    """Merge x and y along one partial bijection.

    Index i of the bijection refers to the i-th entry of the canonical
    sorted order of x (1-based), likewise j for y.  Matched entries are
    multiplied (x-entry times y-entry), unmatched entries pass through; the
    result has cardinality |x| + |y| - #matched.
    """
    xs, ys = x.entries, y.entries
    if pb.n != len(xs) or pb.m != len(ys):
        raise ValueError(
            f"bijection shape ({pb.n},{pb.m}) does not match multisets "
            f"({len(xs)},{len(ys)})")
    used_i = {i for i, _ in pb.pairs}
    used_j = {j for _, j in pb.pairs}
    out = [xs[i - 1] * ys[j - 1] for i, j in pb.pairs]
    out.extend(xs[i] for i in range(len(xs)) if i + 1 not in used_i)
    out.extend(ys[j] for j in range(len(ys)) if j + 1 not in used_j)
    out.sort()
    return Multiset._make(tuple(out))


def multiset_product(x: Multiset, y: Multiset,
                     budget: int = DEFAULT_BUDGET) -> "FormalSum":
    """The ring product of two multisets: the formal sum of ``product_along``
    over every partial bijection between their index sets."""
    n, m = len(x), len(y)
    count = partial_bijection_count(n, m)
    if count > budget:
        raise BudgetExceededError(
            f"product of cardinalities ({n},{m}) needs {count} intermediate "
            f"multisets, over the budget of {budget}")
    acc: dict = {}
    for pb in partial_bijections(n, m):
        ms = product_along(x, y, pb)
        acc[ms] = acc.get(ms, 0) + 1
    return FormalSum(acc)


class FormalSum:
    """An integer linear combination of multisets (an element of the
    multiset ring).

    Coefficients are arbitrary-precision integers; zero coefficients are
    never stored.  ``+``/``-`` are the module operations, ``int * sum``
    rescales, and ``sum * sum`` is the ring product extended bilinearly.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict):
        clean = {}
        for ms, coeff in terms.items():
            if not isinstance(ms, Multiset):
                raise TypeError(f"key {ms!r} is not a Multiset")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            if coeff != 0:
                clean[ms] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls({})

    @classmethod
    def of(cls, ms: Multiset, coeff: int = 1) -> "FormalSum":
        return cls({ms: coeff})

    @classmethod
    def unit(cls) -> "FormalSum":
        """The multiplicative unit: the empty multiset with coefficient 1."""
        return cls({Multiset.empty(): 1})

    def coefficient(self, ms: Multiset) -> int:
        return self._terms.get(ms, 0)

    def terms(self):
        """Term pairs in the canonical (cardinality, entries) order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def multisets(self):
        return list(self._terms.keys())

    def is_zero(self) -> bool:
        return not self._terms

    def num_terms(self) -> int:
        return len(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        acc = dict(self._terms)
        for ms, coeff in other._terms.items():
            acc[ms] = acc.get(ms, 0) + coeff
        return FormalSum(acc)

    def __sub__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        acc = dict(self._terms)
        for ms, coeff in other._terms.items():
            acc[ms] = acc.get(ms, 0) - coeff
        return FormalSum(acc)

    def __neg__(self):
        return FormalSum({ms: -c for ms, c in self._terms.items()})

    def scale(self, k: int) -> "FormalSum":
        return FormalSum({ms: k * c for ms, c in self._terms.items()})

    def __rmul__(self, k):
        if isinstance(k, int) and not isinstance(k, bool):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, FormalSum):
            return formal_product(self, other)
        return NotImplemented

    def map_elements(self, fn) -> "FormalSum":
        """Apply ``fn`` to every entry of every multiset, re-canonicalize,
        and merge multisets that become equal (their coefficients add)."""
        acc: dict = {}
        for ms, coeff in self._terms.items():
            image = Multiset(fn(e) for e in ms.entries)
            acc[image] = acc.get(image, 0) + coeff
        return FormalSum(acc)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def render(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for ms, coeff in self._terms.items():
            entry_strs = tuple(_render_entry(e) for e in ms.entries)
            rendered.append(((len(ms), entry_strs), coeff))
        rendered.sort(key=lambda t: t[0])
        return " + ".join(f"{coeff}*{{{','.join(key[1])}}}"
                          for key, coeff in rendered)

    def __repr__(self):
        return f"FormalSum({self.render()})"


def formal_product(left: FormalSum, right: FormalSum,
                   budget: int = DEFAULT_BUDGET) -> FormalSum:
    """Bilinear extension of the multiset product.

    Refuses to start when the predicted number of intermediate multisets
    (summed over all term pairs) exceeds ``budget``.
    """
    predicted = 0
    for ms1 in left._terms:
        for ms2 in right._terms:
            predicted += partial_bijection_count(len(ms1), len(ms2))
            if predicted > budget:
                raise BudgetExceededError(
                    f"formal product predicts more than {budget} "
                    f"intermediate multisets")
    acc: dict = {}
    for ms1, c1 in left._terms.items():
        for ms2, c2 in right._terms.items():
            c = c1 * c2
            for pb in partial_bijections(len(ms1), len(ms2)):
                ms = product_along(ms1, ms2, pb)
                acc[ms] = acc.get(ms, 0) + c
    return FormalSum(acc)


def map_formal(hom, s: FormalSum) -> FormalSum:
    """Push a formal sum through a semigroup homomorphism entrywise."""
    return s.map_elements(hom)


def insort_merged(sorted_entries: tuple, drop_index: int, merged) -> tuple:
    """Remove the entry at ``drop_index`` and insert ``merged``, keeping the
    tuple sorted.  Helper for recursion over multisets."""
    out = list(sorted_entries)
    del out[drop_index]
    bisect.insort(out, merged)
    return tuple(out)
