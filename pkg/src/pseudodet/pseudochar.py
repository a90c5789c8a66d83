"""Central functions, their recursive multilinear forms, and determinants.

Let f be a central function (f(xy) = f(yx)) from an algebra into a
commutative scalar ring.  A tower of forms is built from f by recursion on
the argument count n:

    form_1(x) = f(x)
    form_n(x_1,..,x_n) = f(x_n) * form_{n-1}(x_1,..,x_{n-1})
                         - sum_i form_{n-1}(.., x_{i-1}, x_i*x_n, x_{i+1}, ..)

For central f the value only depends on the multiset of arguments, which is
what makes memoization on canonical multisets valid (``recursive_form`` with
``memoized=False`` evaluates the recursion literally on the given sequence,
with no reordering; that variant is what the symmetry tests exercise).

A central f with f(1) = d, (d!)^-1 available, and form_{d+1} identically
zero is a pseudocharacter of dimension d; from such an f one obtains a
multiplicative determinant  det(x) = (1/d!) * form_d(x,..,x)  and a monic
characteristic polynomial whose t^(d-1) coefficient recovers -f(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .elements import GroupAlgebraElement, GroupTable, Matrix
from .errors import CapExceededError, NotInvertibleError, UnitlessError
from .multisets import FormalSum, Multiset, insort_merged, multiset_product
from .rings import Ring

#: Largest argument count the recursion accepts by default (8! leaf terms).
DEFAULT_REC_CAP = 8
#: Largest argument count the permutation cycle-sum accepts by default.
DEFAULT_ORACLE_CAP = 7


class CentralFunction:
    """A central function f: R -> A with a declared dimension.

    ``evaluate`` must be pure.  When ``pseudocharacter=True`` the constructor
    eagerly checks that (dim!)^-1 exists in the scalar ring, which is part of
    the definition of a dimension-d pseudocharacter (and fails, for example,
    for dimension 3 over Z/6Z).
    """

    __slots__ = ("_evaluate", "dim", "ring", "domain", "name",
                 "is_pseudocharacter", "rec_cap", "oracle_cap")

    def __init__(self, evaluate, dim: int, ring: Ring, *, domain: str = "R",
                 name: str = "f", pseudocharacter: bool = False,
                 rec_cap: int = DEFAULT_REC_CAP,
                 oracle_cap: int = DEFAULT_ORACLE_CAP):
        if dim < 1:
            raise ValueError("dimension must be a positive integer")
        if pseudocharacter:
            ring.inverse_of_factorial(dim)
        self._evaluate = evaluate
        self.dim = dim
        self.ring = ring
        self.domain = domain
        self.name = name
        self.is_pseudocharacter = pseudocharacter
        self.rec_cap = rec_cap
        self.oracle_cap = oracle_cap

    def __call__(self, x):
        return self._evaluate(x)

    def __repr__(self):
        return (f"CentralFunction({self.name}, dim={self.dim}, "
                f"ring={self.ring.describe()}, domain={self.domain})")


def matrix_trace(ring: Ring, size: int, dim: int | None = None, *,
                 pseudocharacter: bool = True, **kwargs) -> CentralFunction:
    """The trace on size x size matrices, declared with dimension ``dim``
    (defaults to the matrix size, the honest choice)."""
    return CentralFunction(
        lambda m: m.trace(), dim if dim is not None else size, ring,
        domain=f"M{size}({ring.describe()})", name="trace",
        pseudocharacter=pseudocharacter, **kwargs)


def regular_trace(group: GroupTable, ring: Ring, **kwargs) -> CentralFunction:
    """Trace of the left regular representation of a finite group: n times
    the coefficient of the identity.  A pseudocharacter of dimension n."""
    n = group.order
    return CentralFunction(
        lambda a: n * a.coefficient(0), n, ring,
        domain=f"Q[G], |G|={n}", name="regular-trace", **kwargs)


class _FormEvaluator:
    """Shared per-evaluation state: a memo keyed on canonical multisets and a
    cache of pairwise element products.  Fresh per top-level call, so
    concurrent evaluations never share mutable state."""

    __slots__ = ("f", "memo", "products")

    def __init__(self, f: CentralFunction):
        self.f = f
        self.memo = {}
        self.products = {}

    def value(self, key: tuple):
        """form_n of the sorted argument tuple ``key`` (n = len(key) >= 1)."""
        memo = self.memo
        cached = memo.get(key)
        if cached is not None:
            return cached
        f = self.f
        n = len(key)
        if n == 1:
            result = f(key[0])
        else:
            last = key[-1]
            head = key[:-1]
            result = f(last) * self.value(head)
            products = self.products
            for i in range(n - 1):
                e = head[i]
                merged = products.get((e, last))
                if merged is None:
                    merged = e * last
                    products[(e, last)] = merged
                result = result - self.value(insort_merged(head, i, merged))
        memo[key] = result
        return result


def _recursive_form_plain(f: CentralFunction, seq: tuple):
    if len(seq) == 1:
        return f(seq[0])
    last = seq[-1]
    head = seq[:-1]
    total = f(last) * _recursive_form_plain(f, head)
    for i in range(len(head)):
        merged = head[:i] + (head[i] * last,) + head[i + 1:]
        total = total - _recursive_form_plain(f, merged)
    return total


def recursive_form(f: CentralFunction, args, *, memoized: bool = True):
    """Evaluate form_n(args) by the defining recursion.

    With ``memoized=True`` (the default) arguments are canonicalized to a
    sorted multiset and sub-values are cached per call; this is valid for
    central f, whose forms are symmetric, and is what makes evaluations with
    repeated arguments (determinants) cheap.  ``memoized=False`` runs the
    recursion verbatim on the sequence as given.
    """
    seq = tuple(args)
    n = len(seq)
    if n == 0:
        raise ValueError("form of zero arguments: use form_on_sum on the "
                         "empty multiset, whose value is 1")
    if n > f.rec_cap:
        raise CapExceededError(
            f"{n} arguments exceed the recursion cap of {f.rec_cap}")
    if not memoized:
        return _recursive_form_plain(f, seq)
    return _FormEvaluator(f).value(tuple(sorted(seq)))


def form_on_sum(f: CentralFunction, s: FormalSum, *,
                _evaluator: _FormEvaluator | None = None):
    """Linear extension of the forms to a formal sum of multisets.

    Each multiset contributes its coefficient times form_|ms|(ms); the empty
    multiset contributes its coefficient times 1.
    """
    ev = _evaluator if _evaluator is not None else _FormEvaluator(f)
    ring = f.ring
    total = ring.zero()
    one = ring.one()
    for ms, coeff in s.terms():
        card = len(ms)
        if card == 0:
            total = total + coeff * one
            continue
        if card > f.rec_cap:
            raise CapExceededError(
                f"multiset of cardinality {card} exceeds the recursion cap "
                f"of {f.rec_cap}")
        total = total + coeff * ev.value(ms.entries)
    return total


def _cycles(perm: tuple) -> list:
    """Cycle decomposition; each cycle starts at its smallest element and
    follows i -> perm[i]."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = perm[start]
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(cycle)
    return cycles


def cycle_sum_form(f: CentralFunction, args):
    """Independent oracle for form_n: the signed permutation cycle sum.

    For each permutation, multiply the arguments along every cycle (starting
    at the cycle's smallest index, following the permutation) and apply f to
    each cycle product; the permutation contributes sign * product of those
    values, where sign = (-1)^(n - #cycles).  Shares no code with
    ``recursive_form``; their agreement is a test target, not an assumption.
    """
    seq = tuple(args)
    n = len(seq)
    if n == 0:
        raise ValueError("cycle sum needs at least one argument")
    if n > f.oracle_cap:
        raise CapExceededError(
            f"{n} arguments exceed the cycle-sum cap of {f.oracle_cap} "
            f"({n}! permutations)")
    total = f.ring.zero()
    for perm in permutations(range(n)):
        cycles = _cycles(perm)
        sign = -1 if (n - len(cycles)) % 2 else 1
        term = None
        for cycle in cycles:
            prod = seq[cycle[0]]
            for idx in cycle[1:]:
                prod = prod * seq[idx]
            fv = f(prod)
            term = fv if term is None else term * fv
        total = total + sign * term
    return total


# ---------------------------------------------------------------------------
# checks

@dataclass(frozen=True)
class CheckEntry:
    name: str
    detail: str
    ok: bool


@dataclass(frozen=True)
class CheckReport:
    entries: tuple

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.ok]

    def render(self) -> str:
        lines = [f"[{'ok' if e.ok else 'FAIL'}] {e.name}: {e.detail}"
                 for e in self.entries]
        return "\n".join(lines)


def check_pseudocharacter(f: CentralFunction, samples) -> CheckReport:
    """Verify the pseudocharacter axioms on concrete samples.

    Checks f(1) = dim, invertibility of dim!, centrality and additivity on
    sample pairs (additivity only when the backend has addition), and the
    vanishing of form_{dim+1} on sampled (dim+1)-tuples.  Failures are
    report entries, never exceptions.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one sample element")
    ring, d = f.ring, f.dim
    entries = []

    try:
        one = samples[0].one()
        value = f(one)
        ok = value == ring.from_int(d)
        entries.append(CheckEntry(
            "unit-value", f"f(1) = {ring.render(value)}, declared dim {d}", ok))
    except UnitlessError as exc:
        one = None
        entries.append(CheckEntry("unit-value", f"no unit element: {exc}", False))

    try:
        inv = ring.inverse_of_factorial(d)
        entries.append(CheckEntry(
            "factorial-invertible", f"({d}!)^-1 = {ring.render(inv)}", True))
    except NotInvertibleError as exc:
        entries.append(CheckEntry("factorial-invertible", str(exc), False))

    pairs = [(samples[i], samples[(i + 1) % len(samples)])
             for i in range(len(samples))]
    central_ok = all(f(x * y) == f(y * x) for x, y in pairs)
    entries.append(CheckEntry(
        "central", f"f(xy) = f(yx) on {len(pairs)} sample pairs", central_ok))

    if hasattr(samples[0], "__add__"):
        additive_ok = all(f(x + y) == f(x) + f(y) for x, y in pairs)
        entries.append(CheckEntry(
            "additive", f"f(x+y) = f(x)+f(y) on {len(pairs)} sample pairs",
            additive_ok))
        two = ring.from_int(2)
        homog_ok = all(f(x.scale(two)) == two * f(x) for x in samples)
        entries.append(CheckEntry(
            "homogeneous", "f(2x) = 2 f(x) on all samples", homog_ok))

    zero = ring.zero()
    tuples = [tuple(samples[(i + k) % len(samples)] for k in range(d + 1))
              for i in range(len(samples))]
    if one is not None:
        tuples.append((samples[0],) * (d + 1))
    vanish_ok = all(recursive_form(f, t) == zero for t in tuples)
    entries.append(CheckEntry(
        "vanishing", f"form_{d + 1} = 0 on {len(tuples)} sampled tuples",
        vanish_ok))

    return CheckReport(tuple(entries))


def product_formula_check(f: CentralFunction, x: Multiset, y: Multiset,
                          budget=None):
    """Compare form(x ring-product y) with form(x) * form(y).

    The equality holds for every central f (no pseudocharacter hypothesis);
    both sides are computed through one shared evaluator cache.
    """
    kwargs = {} if budget is None else {"budget": budget}
    ev = _FormEvaluator(f)
    lhs = form_on_sum(f, multiset_product(x, y, **kwargs), _evaluator=ev)
    rhs = (form_on_sum(f, FormalSum.of(x), _evaluator=ev)
           * form_on_sum(f, FormalSum.of(y), _evaluator=ev))
    return lhs, rhs, lhs == rhs


def degree_product_check(f: CentralFunction, xs, ys):
    """For a dimension-d pseudocharacter and d-tuples xs, ys, compare
    form_d(xs) * form_d(ys) with the sum over all permutations s of
    form_d(x_1 y_s(1), .., x_d y_s(d))."""
    xs, ys = tuple(xs), tuple(ys)
    d = f.dim
    if len(xs) != d or len(ys) != d:
        raise ValueError(f"need two tuples of exactly dim={d} elements")
    if d > f.oracle_cap:
        raise CapExceededError(
            f"dimension {d} exceeds the permutation cap of {f.oracle_cap}")
    ev = _FormEvaluator(f)
    lhs = ev.value(tuple(sorted(xs))) * ev.value(tuple(sorted(ys)))
    rhs = f.ring.zero()
    for perm in permutations(range(d)):
        mixed = tuple(xs[i] * ys[perm[i]] for i in range(d))
        rhs = rhs + ev.value(tuple(sorted(mixed)))
    return lhs, rhs, lhs == rhs


def determinant(f: CentralFunction, x):
    """(1/dim!) * form_dim(x, .., x): the multiplicative determinant
    attached to a pseudocharacter."""
    d = f.dim
    inv = f.ring.inverse_of_factorial(d)
    return inv * recursive_form(f, (x,) * d)


def multiplicativity_check(f: CentralFunction, x, y):
    """Compare det(xy) with det(x) * det(y) (exact)."""
    lhs = determinant(f, x * y)
    rhs = determinant(f, x) * determinant(f, y)
    return lhs, rhs, lhs == rhs


def identity_padding_check(f: CentralFunction, x, n: int):
    """Compare form_n(x, 1, .., 1) with the closed form
    f(x) * prod_{i=1..n-1} (f(1) - i); holds for every central f on a
    unital backend."""
    one = x.one()
    lhs = recursive_form(f, (x,) + (one,) * (n - 1))
    f1 = f(one)
    rhs = f(x)
    for i in range(1, n):
        rhs = rhs * (f1 - i)
    return lhs, rhs, lhs == rhs


# ---------------------------------------------------------------------------
# characteristic polynomials

class RPolynomial:
    """A polynomial in one central variable t with algebra-element
    coefficients, e.g. t*1 - x.  Kept in trimmed form: the leading stored
    coefficient is nonzero unless the polynomial is zero (no coefficients).
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = list(coefficients)
        while coeffs and _is_zero_element(coeffs[-1]):
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def t_minus(cls, x) -> "RPolynomial":
        """The pencil t - x (coefficients [-x, 1])."""
        return cls([-x, x.one()])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, t):
        """Horner evaluation at a scalar value of t; returns an element."""
        if not self.coefficients:
            raise ValueError("cannot evaluate the zero pencil "
                             "(no coefficient fixes the backend)")
        acc = self.coefficients[-1]
        for coeff in reversed(self.coefficients[:-1]):
            acc = acc.scale(t) + coeff
        return acc

    def __repr__(self):
        return f"RPolynomial({[c for c in self.coefficients]!r})"


def _is_zero_element(x) -> bool:
    if isinstance(x, Matrix):
        return x == Matrix.zero(x.ring, x.n)
    if isinstance(x, GroupAlgebraElement):
        zero = x.ring.cell(0)
        return all(c == zero for c in x.coeffs)
    return False


@dataclass(frozen=True)
class CharPoly:
    """Scalar coefficients c_0..c_d of det(t - x), lowest degree first."""

    ring: Ring
    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return self.coefficients[-1] == self.ring.one()

    def trace(self):
        """-c_{d-1}: the trace read off the characteristic polynomial."""
        if self.degree < 1:
            raise ValueError("degree-0 polynomial has no trace coefficient")
        return -self.coefficients[-2]

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        if len(self.coefficients) != len(other.coefficients):
            return False
        return all(a == b for a, b in
                   zip(self.coefficients, other.coefficients))

    def render(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.ring.render(self.coefficients[k])
            t_part = "t" if k == 1 else (f"t^{k}" if k > 1 else "")
            parts.append(f"({c})*{t_part}" if t_part else f"({c})")
        return " + ".join(parts)


def char_poly(f: CentralFunction, x) -> CharPoly:
    """Characteristic polynomial det(t - x) of a pseudocharacter.

    By symmetry and multilinearity of the forms, the coefficient of t^k
    collapses to (1/d!) * C(d,k) * form_d(-x, .., -x, 1, .., 1) with d-k
    copies of -x and k copies of the unit; no symbolic computation in the
    algebra is needed.  The result is monic with trace coefficient -f(x).
    """
    d = f.dim
    ring = f.ring
    inv = ring.inverse_of_factorial(d)
    one = x.one()
    neg = -x
    ev = _FormEvaluator(f)
    coeffs = []
    for k in range(d + 1):
        args = (neg,) * (d - k) + (one,) * k
        value = ev.value(tuple(sorted(args)))
        coeffs.append(inv * (math.comb(d, k) * value))
    return CharPoly(ring, tuple(coeffs))


def char_poly_interpolated(f: CentralFunction, x, points=None) -> CharPoly:
    """Cross-check path for ``char_poly``: evaluate det on the pencil t - x
    at d+1 scalar points and Lagrange-interpolate the coefficients.

    Uses scalar division, so the modular backend needs the point
    differences to be invertible (any d+1 distinct points mod a prime).
    """
    d = f.dim
    ring = f.ring
    if points is None:
        points = [ring.from_int(j) for j in range(d + 1)]
    points = list(points)
    if len(points) != d + 1:
        raise ValueError(f"need exactly {d + 1} interpolation points")
    pencil = RPolynomial.t_minus(x)
    values = [determinant(f, pencil.evaluate(t)) for t in points]

    zero, one = ring.zero(), ring.one()
    coeffs = [zero] * (d + 1)
    for j, (tj, vj) in enumerate(zip(points, values)):
        # basis_j(T) = prod_{k != j} (T - t_k) / (t_j - t_k)
        basis = [one]
        denom = one
        for k, tk in enumerate(points):
            if k == j:
                continue
            new = [zero] * (len(basis) + 1)
            for deg, c in enumerate(basis):
                new[deg] = new[deg] + c * (-tk)
                new[deg + 1] = new[deg + 1] + c
            basis = new
            denom = denom * (tj - tk)
        scale = ring.div(vj, denom)
        for deg, c in enumerate(basis):
            coeffs[deg] = coeffs[deg] + scale * c
    return CharPoly(ring, tuple(coeffs))


def trace_roundtrip_check(f: CentralFunction, samples) -> CheckReport:
    """For each sample x, the characteristic polynomial must be monic and
    its trace coefficient must recover f(x) exactly."""
    ring = f.ring
    entries = []
    for idx, x in enumerate(samples):
        cp = char_poly(f, x)
        expected = f(x)
        got = cp.trace()
        ok = cp.is_monic() and got == expected
        entries.append(CheckEntry(
            f"roundtrip[{idx}]",
            f"x={x.render()}: monic={cp.is_monic()}, "
            f"-c[d-1]={ring.render(got)}, f(x)={ring.render(expected)}",
            ok))
    return CheckReport(tuple(entries))
