"""Finitely presented pre-lambda-rings and their operations.

A model is a finitely generated abelian group with a commutative unital
multiplication given by structure constants on basis pairs, an augmentation
(rank) homomorphism to Z, and, for every basis element, the coefficients of
its total lambda-series.  That is enough to evaluate on arbitrary elements:

* ``lambda_total(x, N)`` multiplies basis series according to the additive
  decomposition of x, using series inverses for negative coordinates, so the
  addition law lambda_t(x+y) = lambda_t(x) lambda_t(y) holds by construction;
* ``gamma_total`` / ``gamma_k`` apply the substitution t -> t/(1-t);
* ``psi_k`` evaluates the Newton polynomial p_k at lambda^1(x)..lambda^k(x).

Whether the model is *special* (lambda of a product, lambda of a lambda) is
not an axiom of the data structure; ``verify_special_pair`` checks those
identities on concrete elements through the universal polynomials of
:mod:`gwgamma.symfunc`.

Basis lambda-series are stored as plain group elements in degrees
1..D_b.  Series that genuinely terminate (line elements and their shifts)
are stored in full; non-terminating ones are stored out to the model's
truncation order and all derived operations stay below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .abelian import GroupElement, GroupPresentation
from .series import TruncSeries, gamma_from_lambda
from .symfunc import (
    binomial,
    compose_universal,
    newton_psi,
    product_universal,
)

DEFAULT_TRUNCATION = 16


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    """Outcome of a batch of named identity checks."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            suffix = ": %s" % c.detail if (c.detail and not c.ok) else ""
            out.append("%s %s%s" % (status, c.name, suffix))
        return out


class RingModel:
    """Structure constants + augmentation + basis lambda-series."""

    def __init__(
        self,
        name: str,
        group: GroupPresentation,
        unit: Sequence[int],
        mul: Mapping[tuple[int, int], Sequence[int]],
        aug: Sequence[int],
        lambda_on_basis: Sequence[Sequence[Sequence[int]]],
        hyperbolic: Iterable[Sequence[int]] | None = None,
        trunc: int = DEFAULT_TRUNCATION,
        params: Mapping[str, object] | None = None,
    ):
        self.name = name
        self.group = group
        self.trunc = trunc
        self.params = dict(params) if params else {}
        self.unit = group.element(unit)
        if len(aug) != group.rank:
            raise ValueError("augmentation vector of wrong length")
        self.aug = tuple(aug)
        table: dict[tuple[int, int], GroupElement] = {}
        for (i, j), coeffs in mul.items():
            if not (0 <= i < group.rank and 0 <= j < group.rank):
                raise ValueError("product index out of range")
            key = (i, j) if i <= j else (j, i)
            val = group.element(coeffs)
            if key in table and table[key] != val:
                raise ValueError("conflicting products for basis pair %r" % (key,))
            table[key] = val
        self.mul_table = table
        if len(lambda_on_basis) != group.rank:
            raise ValueError("lambda-series list of wrong length")
        lam = []
        for coeff_list in lambda_on_basis:
            entries = [group.element(c) for c in coeff_list]
            while entries and entries[-1].is_zero:
                entries.pop()
            lam.append(tuple(entries))
        self.lambda_on_basis = tuple(lam)
        self.hyperbolic = (
            None
            if hyperbolic is None
            else tuple(group.element(h) for h in hyperbolic)
        )

    def element(self, coeffs: Sequence[int]) -> "RingElement":
        return RingElement(self, self.group.element(coeffs))

    def wrap(self, g: GroupElement) -> "RingElement":
        if g.pres != self.group:
            raise ValueError("group element from a different presentation")
        return RingElement(self, g)

    @property
    def unit_element(self) -> "RingElement":
        return RingElement(self, self.unit)

    @property
    def zero_element(self) -> "RingElement":
        return RingElement(self, self.group.zero())

    def basis_element(self, i: int) -> "RingElement":
        return RingElement(self, self.group.basis_element(i))

    def basis_elements(self) -> tuple["RingElement", ...]:
        return tuple(self.basis_element(i) for i in range(self.group.rank))

    def _basis_product(self, i: int, j: int) -> GroupElement:
        key = (i, j) if i <= j else (j, i)
        got = self.mul_table.get(key)
        return got if got is not None else self.group.zero()

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        acc = self.group.zero()
        for i, xi in enumerate(x.coeffs):
            if not xi:
                continue
            for j, yj in enumerate(y.coeffs):
                if not yj:
                    continue
                acc = acc + (xi * yj) * self._basis_product(i, j)
        return acc

    def augmentation(self, x: GroupElement) -> int:
        return sum(a * c for a, c in zip(self.aug, x.coeffs))

    def basis_lambda_series(self, i: int, order: int) -> TruncSeries:
        if order > self.trunc:
            raise ValueError(
                "order %d beyond model truncation %d" % (order, self.trunc)
            )
        stored = self.lambda_on_basis[i]
        wrapped = [RingElement(self, g) for g in stored]
        return TruncSeries.from_coeffs(self.unit_element, wrapped, order)


@dataclass(frozen=True)
class RingElement:
    """Group element tagged with its ring model; supports ring arithmetic."""

    model: RingModel
    value: GroupElement

    def _check(self, other: "RingElement") -> None:
        if self.model is not other.model:
            raise ValueError("elements from different models")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.model, self.value + other.value)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.model, self.value - other.value)

    def __neg__(self) -> "RingElement":
        return RingElement(self.model, -self.value)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.model, other * self.value)
        if isinstance(other, RingElement):
            self._check(other)
            return RingElement(
                self.model, self.model.multiply(self.value, other.value)
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return RingElement(self.model, other * self.value)
        return NotImplemented

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            raise ValueError("negative ring power")
        out = self.model.unit_element
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self.model is other.model
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    @property
    def is_unit(self) -> bool:
        return self.value == self.model.unit

    @property
    def rank(self) -> int:
        return self.model.augmentation(self.value)


def lambda_total(x: RingElement, order: int | None = None) -> TruncSeries:
    """Total lambda-series of x, exact through the requested order."""
    m = x.model
    n = m.trunc if order is None else order
    out = TruncSeries.one(m.unit_element, n)
    for i, c in enumerate(x.value.coeffs):
        if c:
            out = out * m.basis_lambda_series(i, n).pow(c)
    return out


def gamma_total(x: RingElement, order: int | None = None) -> TruncSeries:
    return gamma_from_lambda(lambda_total(x, order))


def lambda_k(x: RingElement, k: int) -> RingElement:
    if k == 0:
        return x.model.unit_element
    return lambda_total(x, k).coeffs[k]


def gamma_k(x: RingElement, k: int) -> RingElement:
    if k == 0:
        return x.model.unit_element
    return gamma_total(x, k).coeffs[k]


def psi_k(x: RingElement, k: int) -> RingElement:
    """Adams operation via Newton's recursion on lambda-coefficients."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = lambda_total(x, k)
    values = [lam.coeffs[i] for i in range(1, k + 1)]
    return newton_psi(k).evaluate(values, x.model.unit_element)


def validate_model(m: RingModel) -> Report:
    """Structural sanity of a model: everything finitely checkable."""
    checks = []
    basis = m.basis_elements()
    one = m.unit_element

    checks.append(
        CheckResult(
            "augmentation(unit) == 1",
            m.augmentation(m.unit) == 1,
            "d(1) = %d" % m.augmentation(m.unit),
        )
    )
    ok = all((one * b) == b for b in basis)
    checks.append(CheckResult("unit is multiplicatively neutral", ok))

    ok = True
    detail = ""
    for i in range(m.group.rank):
        for j in range(i, m.group.rank):
            for k in range(j, m.group.rank):
                lhs = (basis[i] * basis[j]) * basis[k]
                rhs = basis[i] * (basis[j] * basis[k])
                if lhs != rhs:
                    ok = False
                    detail = "(b%d*b%d)*b%d != b%d*(b%d*b%d)" % (i, j, k, i, j, k)
    checks.append(CheckResult("multiplication associative on basis", ok, detail))

    ok = True
    detail = ""
    for i, o in enumerate(m.group.orders):
        if not o:
            continue
        if m.aug[i] != 0:
            ok = False
            detail = "torsion basis element %d has nonzero rank" % i
        for j in range(m.group.rank):
            if not (o * (basis[i] * basis[j])).is_zero:
                ok = False
                detail = "order %d of b%d does not kill b%d*b%d" % (o, i, i, j)
    checks.append(CheckResult("products respect torsion orders", ok, detail))

    ok = True
    detail = ""
    for i in range(m.group.rank):
        for j in range(i, m.group.rank):
            lhs = m.augmentation((basis[i] * basis[j]).value)
            rhs = m.aug[i] * m.aug[j]
            if lhs != rhs:
                ok = False
                detail = "d(b%d*b%d) = %d != %d" % (i, j, lhs, rhs)
    checks.append(CheckResult("augmentation is a ring homomorphism", ok, detail))

    ok = True
    detail = ""
    for i in range(m.group.rank):
        stored = m.lambda_on_basis[i]
        first = stored[0] if stored else m.group.zero()
        if first != m.group.basis_element(i):
            ok = False
            detail = "lambda^1(b%d) != b%d" % (i, i)
    checks.append(CheckResult("lambda^1 is the identity on basis", ok, detail))

    ok = True
    detail = ""
    for i in range(m.group.rank):
        for kk, coeff in enumerate(m.lambda_on_basis[i], start=1):
            want = binomial(m.aug[i], kk)
            got = m.augmentation(coeff)
            if got != want:
                ok = False
                detail = "d(lambda^%d(b%d)) = %d != C(%d,%d)" % (
                    kk, i, got, m.aug[i], kk,
                )
    checks.append(
        CheckResult("augmentation compatible with lambda-series", ok, detail)
    )

    ok = True
    detail = ""
    for i, o in enumerate(m.group.orders):
        if not o:
            continue
        series = m.basis_lambda_series(i, m.trunc).pow(o)
        if series != TruncSeries.one(one, m.trunc):
            ok = False
            detail = "lambda_t(b%d)^%d != 1" % (i, o)
    checks.append(
        CheckResult("lambda-series respect torsion orders", ok, detail)
    )

    return Report(tuple(checks))


def verify_special_pair(
    x: RingElement,
    y: RingElement,
    bound: int = 3,
    compose_pairs: Sequence[tuple[int, int]] = ((2, 2), (2, 3), (3, 2)),
) -> Report:
    """Check the special lambda-ring identities on a concrete pair.

    lambda^n(x*y) against the universal product polynomial for n <= bound,
    and lambda^m(lambda^n(x)) against the universal composition polynomial
    for the requested (m, n) pairs.
    """
    if x.model is not y.model:
        raise ValueError("elements from different models")
    one = x.model.unit_element
    need = max(
        [bound] + [m * n for m, n in compose_pairs] if compose_pairs else [bound]
    )
    lam_x = lambda_total(x, max(need, bound))
    lam_y = lambda_total(y, bound)
    checks = []
    xy = x * y
    for n in range(1, bound + 1):
        lhs = lambda_k(xy, n)
        values = [lam_x.coeffs[i] for i in range(1, n + 1)]
        values += [lam_y.coeffs[j] for j in range(1, n + 1)]
        rhs = product_universal(n).evaluate(values, one)
        checks.append(
            CheckResult(
                "lambda^%d(x*y) == P_%d(lambda x, lambda y)" % (n, n),
                lhs == rhs,
                "lhs %r rhs %r" % (lhs.value.coeffs, rhs.value.coeffs),
            )
        )
    for mm, nn in compose_pairs:
        lhs = lambda_k(lambda_k(x, nn), mm)
        values = [lam_x.coeffs[i] for i in range(1, mm * nn + 1)]
        rhs = compose_universal(mm, nn).evaluate(values, one)
        checks.append(
            CheckResult(
                "lambda^%d(lambda^%d(x)) == P_%d,%d(lambda x)" % (mm, nn, mm, nn),
                lhs == rhs,
                "lhs %r rhs %r" % (lhs.value.coeffs, rhs.value.coeffs),
            )
        )
    return Report(tuple(checks))
