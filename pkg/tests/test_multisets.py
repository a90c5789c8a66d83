"""The multiset ring: enumeration, products, functoriality, rendering."""

from itertools import chain, combinations, permutations

import pytest

from pseudodet import (BudgetExceededError, FormalSum, LetterHom, Matrix,
                       ModRing, Multiset, PartialBijection, QQ, Word,
                       formal_product, map_formal, multiset_product,
                       partial_bijection_count, partial_bijections,
                       product_along, word)
from pseudodet.verify import random_matrix, random_word, substream


def letters(prefix, n):
    return Multiset(Word([f"{prefix}{i}"]) for i in range(1, n + 1))


def brute_force_partial_bijections(n, m):
    """Independent enumeration: all (I, J, alpha) triples, as frozensets of
    pairs.  Used as the oracle for both the count and the contents."""
    def subsets(universe):
        return chain.from_iterable(
            combinations(universe, k) for k in range(len(universe) + 1))

    found = set()
    for dom in subsets(range(1, n + 1)):
        for img in subsets(range(1, m + 1)):
            if len(dom) != len(img):
                continue
            for images in permutations(img):
                found.add(frozenset(zip(dom, images)))
    return found


class TestPartialBijections:
    def test_degenerate_counts(self):
        assert len(partial_bijections(0, 5)) == 1
        assert partial_bijections(0, 5)[0].pairs == ()
        assert len(partial_bijections(5, 0)) == 1

    @pytest.mark.parametrize("n,m,count", [(2, 1, 3), (2, 2, 7), (3, 3, 34)])
    def test_known_counts(self, n, m, count):
        assert len(partial_bijections(n, m)) == count
        assert partial_bijection_count(n, m) == count

    @pytest.mark.parametrize("n", range(5))
    @pytest.mark.parametrize("m", range(5))
    def test_against_brute_force(self, n, m):
        enumerated = {frozenset(pb.pairs) for pb in partial_bijections(n, m)}
        oracle = brute_force_partial_bijections(n, m)
        assert enumerated == oracle
        assert len(partial_bijections(n, m)) == len(oracle)
        assert partial_bijection_count(n, m) == len(oracle)

    def test_no_duplicates_and_deterministic(self):
        first = partial_bijections(3, 4)
        assert len({pb.pairs for pb in first}) == len(first)
        assert first == partial_bijections(3, 4)

    def test_validation(self):
        with pytest.raises(ValueError):
            PartialBijection(2, 2, ((1, 1), (1, 2)))  # repeated domain index
        with pytest.raises(ValueError):
            PartialBijection(2, 2, ((1, 1), (2, 1)))  # repeated image index
        with pytest.raises(ValueError):
            PartialBijection(2, 2, ((2, 1), (1, 2)))  # unsorted
        with pytest.raises(ValueError):
            PartialBijection(1, 1, ((1, 2),))  # out of range


class TestProductAlong:
    def test_empty_bijection_concatenates(self):
        x, y = letters("x", 2), letters("y", 3)
        pb = PartialBijection(2, 3, ())
        assert product_along(x, y, pb) == Multiset(
            list(x.entries) + list(y.entries))

    def test_single_match(self):
        x, y = letters("x", 2), letters("y", 1)
        got = product_along(x, y, PartialBijection(2, 1, ((1, 1),)))
        assert got == Multiset([word("x1*y1"), word("x2")])

    def test_crossed_match(self):
        x, z = letters("x", 2), letters("z", 2)
        got = product_along(x, z, PartialBijection(2, 2, ((1, 2), (2, 1))))
        assert got == Multiset([word("x1*z2"), word("x2*z1")])

    def test_cardinality_law(self):
        x, y = letters("x", 3), letters("y", 2)
        for pb in partial_bijections(3, 2):
            assert len(product_along(x, y, pb)) == 3 + 2 - pb.matched

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            product_along(letters("x", 1), letters("y", 1),
                          PartialBijection(2, 1, ()))


class TestMultisetProduct:
    def test_two_by_one_expansion(self):
        got = multiset_product(letters("x", 2), letters("y", 1))
        expected = FormalSum({
            Multiset([word("x1"), word("x2"), word("y1")]): 1,
            Multiset([word("x1*y1"), word("x2")]): 1,
            Multiset([word("x1"), word("x2*y1")]): 1,
        })
        assert got == expected

    def test_two_by_one_render_golden(self):
        got = multiset_product(letters("x", 2), letters("y", 1))
        assert got.render() == \
            "1*{x1,x2*y1} + 1*{x2,x1*y1} + 1*{x1,x2,y1}"

    def test_two_by_two_expansion(self):
        x, z = letters("x", 2), letters("z", 2)
        got = multiset_product(x, z)
        expected = FormalSum({
            Multiset([word("x1"), word("x2"), word("z1"), word("z2")]): 1,
            Multiset([word("x1*z1"), word("x2"), word("z2")]): 1,
            Multiset([word("x1"), word("x2*z1"), word("z2")]): 1,
            Multiset([word("x1*z2"), word("x2"), word("z1")]): 1,
            Multiset([word("x1"), word("x2*z2"), word("z1")]): 1,
            Multiset([word("x1*z1"), word("x2*z2")]): 1,
            Multiset([word("x1*z2"), word("x2*z1")]): 1,
        })
        assert got == expected

    def test_empty_is_unit(self):
        x = letters("x", 3)
        empty = Multiset.empty()
        assert multiset_product(x, empty) == FormalSum.of(x)
        assert multiset_product(empty, x) == FormalSum.of(x)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 2), (3, 3)])
    def test_free_letters_have_coefficient_one(self, n, m):
        got = multiset_product(letters("x", n), letters("y", m))
        assert all(c == 1 for _, c in got.terms())
        assert got.num_terms() == partial_bijection_count(n, m)

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (3, 1)])
    def test_cardinality_bounds(self, n, m):
        got = multiset_product(letters("x", n), letters("y", m))
        for ms, _ in got.terms():
            assert max(n, m) <= len(ms) <= n + m

    def test_commutative_when_entries_commute(self):
        # 1x1 matrices are scalars, so the merged products x_i*y_j and
        # y_j*x_i coincide and the ring product commutes
        rng = substream(53, 0)
        for _ in range(25):
            x = Multiset(random_matrix(rng, QQ, 1, 5)
                         for _ in range(rng.randint(0, 3)))
            y = Multiset(random_matrix(rng, QQ, 1, 5)
                         for _ in range(rng.randint(0, 3)))
            assert multiset_product(x, y) == multiset_product(y, x)

    def test_not_commutative_on_free_letters(self):
        # the matched entries multiply in opposite orders, so over a free
        # semigroup the two products differ: {x1*y1} vs {y1*x1}
        x, y = letters("x", 1), letters("y", 1)
        left, right = multiset_product(x, y), multiset_product(y, x)
        assert left != right
        assert left.coefficient(Multiset([word("x1*y1")])) == 1
        assert right.coefficient(Multiset([word("y1*x1")])) == 1
        # the unmatched (empty-bijection) summand is shared
        both = Multiset([word("x1"), word("y1")])
        assert left.coefficient(both) == right.coefficient(both) == 1

    def test_order_independence(self):
        # canonicalization makes entry order irrelevant
        a, b = Matrix(QQ, [[1, 2], [3, 4]]), Matrix(QQ, [[0, 1], [1, 0]])
        c = Matrix(QQ, [[2, 0], [0, 3]])
        x1, x2 = Multiset([a, b]), Multiset([b, a])
        assert x1 == x2
        y1, y2 = Multiset([c, a, b]), Multiset([b, c, a])
        assert multiset_product(x1, y1) == multiset_product(x2, y2)

    def test_singleton_unit_is_not_the_empty_multiset(self):
        # {1} is a genuine one-element multiset, never collapsed into the
        # empty multiset: {1} x {x} = {1,x} + {x}, not {x}
        eye = Matrix.identity(QQ, 2)
        x = Matrix(QQ, [[1, 2], [3, 4]])
        assert Multiset([eye]) != Multiset.empty()
        got = multiset_product(Multiset([eye]), Multiset([x]))
        assert got == FormalSum({Multiset([eye, x]): 1, Multiset([x]): 1})
        assert got != FormalSum.of(Multiset([x]))

    def test_matrix_products_can_collide(self):
        # with matrix entries, distinct bijections can produce equal
        # multisets, so coefficients above 1 appear
        eye = Matrix.identity(QQ, 2)
        x = Multiset([eye, eye])
        got = multiset_product(x, Multiset([eye]))
        assert got.coefficient(Multiset([eye, eye])) == 2
        assert got.coefficient(Multiset([eye, eye, eye])) == 1


class TestFormalSum:
    def test_bilinearity_smallest_case(self):
        s = FormalSum.of(Multiset([word("x")]), 2)
        t = FormalSum.of(Multiset([word("y")]), 3)
        got = formal_product(s, t)
        assert got == FormalSum({
            Multiset([word("x"), word("y")]): 6,
            Multiset([word("x*y")]): 6,
        })

    def test_unit_element(self):
        rng = substream(59, 0)
        for _ in range(10):
            s = FormalSum.zero()
            for _ in range(rng.randint(1, 3)):
                ms = Multiset(random_word(rng, "ab", 2)
                              for _ in range(rng.randint(0, 2)))
                s = s + FormalSum.of(ms, rng.randint(-3, 3))
            assert formal_product(s, FormalSum.unit()) == s
            assert formal_product(FormalSum.unit(), s) == s

    def test_additive_inverse_annihilates(self):
        s = FormalSum.of(letters("x", 2), 3)
        t = FormalSum.of(letters("y", 2), 5) + FormalSum.of(letters("y", 1), 1)
        assert formal_product(s - s, t) == FormalSum.zero()

    def test_zero_coefficients_never_stored(self):
        s = FormalSum({letters("x", 1): 1}) + FormalSum({letters("x", 1): -1})
        assert s.is_zero() and s.num_terms() == 0
        assert s.render() == "0"

    def test_scale_and_neg(self):
        s = FormalSum.of(letters("x", 1), 2)
        assert 3 * s == FormalSum.of(letters("x", 1), 6)
        assert -s == FormalSum.of(letters("x", 1), -2)

    def test_coefficients_must_be_integers(self):
        with pytest.raises(TypeError):
            FormalSum({letters("x", 1): 1.5})  # type: ignore[dict-item]

    def test_budget_guard(self):
        x = letters("x", 8)
        y = letters("y", 8)
        with pytest.raises(BudgetExceededError):
            formal_product(FormalSum.of(x), FormalSum.of(y), budget=1000)
        with pytest.raises(BudgetExceededError):
            multiset_product(x, y, budget=1000)


class TestAssociativity:
    def test_words_2_2_2(self):
        x, y, z = letters("x", 2), letters("y", 2), letters("z", 2)
        lhs = formal_product(multiset_product(x, y), FormalSum.of(z))
        rhs = formal_product(FormalSum.of(x), multiset_product(y, z))
        assert lhs == rhs

    def test_words_small_cases(self):
        for n, m, k in [(1, 1, 1), (2, 1, 2), (3, 2, 1), (0, 2, 2)]:
            x, y, z = letters("x", n), letters("y", m), letters("z", k)
            lhs = formal_product(multiset_product(x, y), FormalSum.of(z))
            rhs = formal_product(FormalSum.of(x), multiset_product(y, z))
            assert lhs == rhs

    def test_matrix_entries(self):
        ring = ModRing(7)
        for trial in range(20):
            rng = substream(61, trial)
            x, y, z = (Multiset(random_matrix(rng, ring, 2, 6)
                                for _ in range(rng.randint(0, 3)))
                       for _ in range(3))
            lhs = formal_product(multiset_product(x, y), FormalSum.of(z))
            rhs = formal_product(FormalSum.of(x), multiset_product(y, z))
            assert lhs == rhs


class TestMapFormal:
    def test_collision_merging(self):
        m = Matrix(QQ, [[1, 1], [0, 1]])
        hom = LetterHom({"x1": m, "x2": m})
        s = FormalSum.of(Multiset([word("x1")])) + \
            FormalSum.of(Multiset([word("x2")]))
        assert map_formal(hom, s) == FormalSum.of(Multiset([m]), 2)

    def test_empty_multiset_maps_to_itself(self):
        hom = LetterHom({"x1": Matrix(QQ, [[1]])})
        s = FormalSum.of(Multiset.empty(), 4)
        assert map_formal(hom, s) == s

    @pytest.mark.parametrize("ring,size", [(QQ, 2), (ModRing(7), 3)])
    def test_functoriality_random(self, ring, size):
        alphabet = ("a", "b", "c")
        for trial in range(30):
            rng = substream(67, trial)
            hom = LetterHom({l: random_matrix(rng, ring, size, 3)
                             for l in alphabet})
            def rand_sum():
                acc = FormalSum.zero()
                for _ in range(rng.randint(1, 3)):
                    ms = Multiset(random_word(rng, alphabet, 2)
                                  for _ in range(rng.randint(0, 2)))
                    coeff = rng.randint(1, 3) * (-1) ** rng.randint(0, 1)
                    acc = acc + FormalSum.of(ms, coeff)
                return acc
            s, t = rand_sum(), rand_sum()
            lhs = map_formal(hom, formal_product(s, t))
            rhs = formal_product(map_formal(hom, s), map_formal(hom, t))
            assert lhs == rhs


class TestRendering:
    def test_term_order_by_cardinality_then_entries(self):
        s = (FormalSum.of(letters("x", 2), 1)
             + FormalSum.of(Multiset([word("a")]), -2)
             + FormalSum.of(Multiset.empty(), 1))
        assert s.render() == "1*{} + -2*{a} + 1*{x1,x2}"

    def test_entries_render_in_canonical_order(self):
        ms = Multiset([word("x2*y1"), word("x1")])
        assert ms.render() == "{x1,x2*y1}"
