"""Subgroup lattice arithmetic checked against exhaustive enumeration.

The oracle works on finite presentations only: it closes a generating set
under addition to get the literal subgroup, counts cosets for the quotient
order, and recovers invariant factors from the multiset of element orders.
"""

import math
import random
from itertools import product

from gwgamma.abelian import (
    GroupPresentation,
    full_subgroup,
    hnf_columns,
    kernel_basis,
    quotient_invariants,
    quotient_presentation,
    project_element,
    relative_quotient_invariants,
    smith_normal_form,
    subgroup_from_generators,
    zero_subgroup,
)


def closure(pres, gens):
    seen = {pres.zero().coeffs}
    frontier = [pres.zero()]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y.coeffs not in seen:
                seen.add(y.coeffs)
                frontier.append(y)
    return seen


def invariant_order_multiset(invs):
    """Multiset of element orders of Z/d_1 + ... (finite input only)."""
    ranges = [range(d) for d in invs]
    out = []
    for coeffs in product(*ranges):
        n = 1
        for c, d in zip(coeffs, invs):
            if c:
                g = d // math.gcd(c, d)
                n = n * g // math.gcd(n, g)
        out.append(n)
    return sorted(out)


FINITE_PRESENTATIONS = [
    (2,),
    (4,),
    (2, 2),
    (2, 4),
    (8, 2),
    (3, 9),
    (2, 2, 2),
    (4, 4, 2),
    (6, 6),
    (2, 2, 2, 2, 2, 2, 2, 2),
    (16, 16),
    (5, 25),
]


def test_subgroup_membership_matches_enumeration():
    rng = random.Random(7)
    for orders in FINITE_PRESENTATIONS:
        pres = GroupPresentation(orders, tuple("g%d" % i for i in range(len(orders))))
        for _ in range(6):
            gens = [
                pres.element([rng.randrange(o) for o in orders])
                for _ in range(rng.randrange(1, 4))
            ]
            sub = subgroup_from_generators(pres, gens)
            literal = closure(pres, gens)
            for coeffs in product(*[range(o) for o in orders]):
                assert sub.contains(pres.element(coeffs)) == (coeffs in literal)


def test_quotient_invariants_match_enumeration():
    rng = random.Random(11)
    for orders in FINITE_PRESENTATIONS:
        pres = GroupPresentation(orders, tuple("g%d" % i for i in range(len(orders))))
        total = 1
        for o in orders:
            total *= o
        for _ in range(6):
            gens = [
                pres.element([rng.randrange(o) for o in orders])
                for _ in range(rng.randrange(0, 4))
            ]
            sub = subgroup_from_generators(pres, gens)
            literal = closure(pres, gens)
            invs = quotient_invariants(pres, sub)
            assert 0 not in invs  # finite group, finite quotient
            size = 1
            for d in invs:
                size *= d
            assert size == total // len(literal)
            # coset orders by literal repeated addition, no normal forms
            cosets = set()
            for coeffs in product(*[range(o) for o in orders]):
                rep = min(
                    tuple(
                        (c + s) % o
                        for c, s, o in zip(coeffs, shift, orders)
                    )
                    for shift in literal
                )
                cosets.add(rep)
            coset_orders = []
            for rep in cosets:
                x = pres.element(rep)
                acc = x
                n = 1
                while acc.coeffs not in literal:
                    acc = acc + x
                    n += 1
                coset_orders.append(n)
            assert sorted(coset_orders) == invariant_order_multiset(invs)
            # quotient_presentation must have kernel exactly `literal`
            qpres, proj = quotient_presentation(pres, sub)
            for coeffs in product(*[range(o) for o in orders]):
                img = project_element(qpres, proj, pres.element(coeffs))
                assert img.is_zero == (coeffs in literal)


def test_subgroup_canonical_under_generator_permutation():
    rng = random.Random(23)
    pres = GroupPresentation((4, 0, 6), ("a", "b", "c"))
    for _ in range(40):
        gens = [
            pres.element([rng.randrange(-9, 10) for _ in range(3)])
            for _ in range(rng.randrange(1, 5))
        ]
        sub = subgroup_from_generators(pres, gens)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert subgroup_from_generators(pres, shuffled + gens) == sub
        doubled = [2 * g for g in gens]
        smaller = subgroup_from_generators(pres, doubled)
        assert smaller <= sub


def test_hnf_frozen_values():
    cols, pivots = hnf_columns([(2, 0), (3, 0)], 2)
    assert cols == ((1, 0),)
    assert pivots == (0,)
    cols, pivots = hnf_columns([(4, 2), (2, 4)], 2)
    # lattice spanned by (4,2),(2,4): index 12 in Z^2
    assert pivots == (0, 1)
    assert cols[0][0] > 0 and cols[1][1] > 0
    det = cols[0][0] * cols[1][1]
    assert det == 12
    assert cols == ((2, 4), (0, 6))


def test_smith_normal_form_transforms():
    rng = random.Random(5)
    for _ in range(30):
        m = rng.randrange(1, 5)
        n = rng.randrange(1, 5)
        a = [[rng.randrange(-20, 21) for _ in range(n)] for _ in range(m)]
        diag, u, v = smith_normal_form(a)
        # check U*A*V is the diagonal claimed
        ua = [
            [sum(u[i][k] * a[k][j] for k in range(m)) for j in range(n)]
            for i in range(m)
        ]
        uav = [
            [sum(ua[i][k] * v[k][j] for k in range(n)) for j in range(n)]
            for i in range(m)
        ]
        for i in range(m):
            for j in range(n):
                expect = diag[i] if i == j and i < len(diag) else 0
                assert uav[i][j] == expect
        for i in range(len(diag) - 1):
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0


def test_relative_quotient_on_nested_chain():
    # F_k = 2^(k-1) * (L - 1) * Z inside Z^2, successive quotients Z/2
    pres = GroupPresentation((0, 0), ("one", "L"))
    chain = [
        subgroup_from_generators(pres, [pres.element((-(2 ** k), 2 ** k))])
        for k in range(0, 5)
    ]
    for big, small in zip(chain, chain[1:]):
        assert relative_quotient_invariants(big, small) == (2,)
    assert quotient_invariants(pres, full_subgroup(pres)) == ()
    assert quotient_invariants(pres, zero_subgroup(pres)) == (0, 0)


def test_kernel_basis_spans_kernel():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randrange(1, 6)
        row = [rng.randrange(-6, 7) for _ in range(n)]
        basis = kernel_basis(row)
        for vec in basis:
            assert sum(r * x for r, x in zip(row, vec)) == 0
        # every small kernel vector must lie in the lattice spanned by basis
        pres = GroupPresentation((0,) * n, tuple("x%d" % i for i in range(n)))
        sub = subgroup_from_generators(pres, [pres.element(v) for v in basis])
        for probe in product(range(-2, 3), repeat=n):
            if sum(r * x for r, x in zip(row, probe)) == 0:
                assert sub.contains(pres.element(probe))
        expected_rank = n - (1 if any(row) else 0)
        assert len(hnf_columns(basis, n)[0]) == expected_rank


def test_quotient_presentation_roundtrip():
    pres = GroupPresentation((0, 0), ("one", "L"))
    sub = subgroup_from_generators(pres, [pres.element((1, 1))])
    qpres, proj = quotient_presentation(pres, sub)
    assert qpres.orders == (0,)
    img = project_element(qpres, proj, pres.element((-1, 1)))
    assert not img.is_zero
    assert project_element(qpres, proj, pres.element((1, 1))).is_zero
    # torsion example: Z^2 / <(2,0),(0,2)> = (Z/2)^2
    sub2 = subgroup_from_generators(
        pres, [pres.element((2, 0)), pres.element((0, 2))]
    )
    qpres2, proj2 = quotient_presentation(pres, sub2)
    assert sorted(qpres2.orders) == [2, 2]
