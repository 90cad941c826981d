"""Gamma filtration of an augmented lambda-ring model.

F^0 is the whole group, F^1 the kernel of the rank homomorphism, and F^k
for k >= 2 is the subgroup generated by all products

    gamma^{i_1}(e_1) * ... * gamma^{i_m}(e_m),   i_1 + ... + i_m >= k,

over a generating set E of F^1.  Products are enumerated up to a total
weight cap; the result is flagged exact when the cap provably dominates
every deeper product:

* each generator's gamma-series vanishes beyond some weight i_max visible
  inside the model truncation, with cap >= kmax + i_max - 1, and
* the deepest computed piece absorbs the product of every stored monomial
  value of weight in [kmax, cap] with every gamma-value whenever the
  combined weight exceeds the cap.

Peeling one factor off a monomial of weight > cap lands on a stored
monomial of weight in [kmax, cap], so by induction all deeper monomials
stay inside the computed pieces.  This covers both nilpotent augmentation
ideals (all long products die) and the two-adic chains of the real point
and the real punctured line, where gamma-values never vanish but each
extra factor doubles the generator (2^k (L-1) stays in the span).  If no
cap passes the check, the pieces are grown until unchanged for ``window``
consecutive caps and the result is flagged as heuristic.

The Witt-level filtration is the image of the gamma filtration in the
quotient by the declared hyperbolic classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    GroupElement,
    GroupPresentation,
    Subgroup,
    full_subgroup,
    kernel_basis,
    project_element,
    quotient_invariants,
    quotient_presentation,
    relative_quotient_invariants,
    subgroup_from_generators,
)
from .lambdaring import RingElement, RingModel, gamma_total


@dataclass(frozen=True)
class FiltrationResult:
    model: RingModel
    group: GroupPresentation
    kmax: int
    pieces: tuple[Subgroup, ...]
    graded: tuple[tuple[int, ...], ...]
    generators: tuple[GroupElement, ...]
    weight_cap: int
    stabilized_window: int
    exactness_flag: bool
    warnings: tuple[str, ...]

    @property
    def exact(self) -> bool:
        return self.exactness_flag

    def piece(self, k: int) -> Subgroup:
        return self.pieces[k]


def augmentation_kernel(m: RingModel) -> tuple[Subgroup, tuple[RingElement, ...]]:
    """The rank-zero subgroup F^1 together with a finite generating set."""
    gens = tuple(m.element(v) for v in kernel_basis(m.aug))
    sub = subgroup_from_generators(m.group, [e.value for e in gens])
    return sub, gens


def _gamma_value_table(
    gens: tuple[RingElement, ...], cap: int
) -> list[list[tuple[int, RingElement]]]:
    table = []
    for e in gens:
        series = gamma_total(e, cap)
        table.append(
            [(i, series.coeffs[i]) for i in range(1, cap + 1)
             if not series.coeffs[i].is_zero]
        )
    return table


def _monomial_values(
    table: list[list[tuple[int, RingElement]]],
    cap: int,
) -> dict[int, set[GroupElement]]:
    """Nonzero values of weight-bounded monomials, keyed by total weight."""
    symbols = sorted(
        ((i, g, v) for g, row in enumerate(table) for i, v in row),
        key=lambda s: (s[0], s[1]),
    )
    by_weight: dict[int, set[GroupElement]] = {
        w: set() for w in range(1, cap + 1)
    }

    def extend(start: int, weight: int, value: RingElement | None) -> None:
        for idx in range(start, len(symbols)):
            i, _, v = symbols[idx]
            w2 = weight + i
            if w2 > cap:
                break
            val2 = value * v if value is not None else v
            if val2.is_zero:
                continue
            by_weight[w2].add(val2.value)
            extend(idx, w2, val2)

    extend(0, 0, None)
    return by_weight


def _assemble_pieces(
    m: RingModel,
    by_weight: dict[int, set[GroupElement]],
    kmax: int,
    cap: int,
) -> tuple[Subgroup, ...]:
    pieces = [full_subgroup(m.group)]
    for k in range(1, kmax + 1):
        vecs = [
            v
            for w in range(k, cap + 1)
            for v in sorted(by_weight[w], key=lambda g: g.coeffs)
        ]
        pieces.append(subgroup_from_generators(m.group, vecs))
    return tuple(pieces)


def _closure_certified(
    m: RingModel,
    pieces: tuple[Subgroup, ...],
    by_weight: dict[int, set[GroupElement]],
    table: list[list[tuple[int, RingElement]]],
    kmax: int,
    cap: int,
) -> bool:
    deepest = pieces[kmax]
    gamma_values = [(i, v) for row in table for i, v in row]
    for w in range(kmax, cap + 1):
        for stored in by_weight[w]:
            x = m.wrap(stored)
            for i, g in gamma_values:
                if w + i <= cap:
                    continue
                prod = x * g
                if not prod.is_zero and not deepest.contains(prod.value):
                    return False
    return True


def _graded_invariants(
    pieces: tuple[Subgroup, ...]
) -> tuple[tuple[int, ...], ...]:
    return tuple(
        relative_quotient_invariants(pieces[k], pieces[k + 1])
        for k in range(len(pieces) - 1)
    )


def gamma_filtration(
    m: RingModel,
    kmax: int = 8,
    window: int = 2,
    weight_budget: int | None = None,
) -> FiltrationResult:
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    if window < 1:
        raise ValueError("window must be at least 1")
    budget = m.trunc if weight_budget is None else min(weight_budget, m.trunc)
    if kmax > budget:
        raise ValueError("kmax %d exceeds weight budget %d" % (kmax, budget))
    _, gens = augmentation_kernel(m)
    table = _gamma_value_table(gens, budget)
    imax = max((i for row in table for i, _ in row), default=0)
    warnings: list[str] = []

    cap = kmax + max(imax - 1, 0)
    if cap <= budget:
        by_weight = _monomial_values(table, cap)
        pieces = _assemble_pieces(m, by_weight, kmax, cap)
        if _closure_certified(m, pieces, by_weight, table, kmax, cap):
            return FiltrationResult(
                model=m,
                group=m.group,
                kmax=kmax,
                pieces=pieces,
                graded=_graded_invariants(pieces),
                generators=tuple(e.value for e in gens),
                weight_cap=cap,
                stabilized_window=0,
                exactness_flag=True,
                warnings=tuple(warnings),
            )
        warnings.append(
            "closure check failed at weight %d; falling back to "
            "stabilization" % cap
        )
    else:
        warnings.append(
            "gamma-values reach weight %d, certified cap %d exceeds "
            "budget %d; using stabilization heuristic" % (imax, cap, budget)
        )

    prev: tuple[Subgroup, ...] | None = None
    stable = 0
    for cap in range(kmax, budget + 1):
        by_weight = _monomial_values(table, cap)
        pieces = _assemble_pieces(m, by_weight, kmax, cap)
        if pieces == prev:
            stable += 1
            if stable >= window:
                break
        else:
            stable = 0
            prev = pieces
    if stable >= window:
        warnings.append(
            "pieces unchanged for %d consecutive weight caps up to %d"
            % (window, cap)
        )
    else:
        warnings.append(
            "weight budget %d exhausted before stabilization" % budget
        )
    return FiltrationResult(
        model=m,
        group=m.group,
        kmax=kmax,
        pieces=pieces,
        graded=_graded_invariants(pieces),
        generators=tuple(e.value for e in gens),
        weight_cap=cap,
        stabilized_window=stable,
        exactness_flag=False,
        warnings=tuple(warnings),
    )


def witt_quotient(
    m: RingModel,
) -> tuple[GroupPresentation, tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Quotient presentation of the group by the hyperbolic classes."""
    if m.hyperbolic is None:
        raise ValueError("model %s declares no hyperbolic classes" % m.name)
    hyper = subgroup_from_generators(m.group, list(m.hyperbolic))
    qpres, projection = quotient_presentation(m.group, hyper, prefix="w")
    return qpres, projection, quotient_invariants(m.group, hyper)


def witt_filtration(
    m: RingModel,
    f: FiltrationResult | None = None,
    kmax: int = 8,
    window: int = 2,
    weight_budget: int | None = None,
) -> FiltrationResult:
    """Image of the gamma filtration in the quotient by hyperbolic classes."""
    qpres, projection, _ = witt_quotient(m)
    if f is None:
        f = gamma_filtration(m, kmax=kmax, window=window,
                             weight_budget=weight_budget)

    def push(col: tuple[int, ...]) -> GroupElement:
        return project_element(qpres, projection, m.group.element(col))

    pieces = [full_subgroup(qpres)]
    for piece in f.pieces[1:]:
        pieces.append(subgroup_from_generators(
            qpres, [push(col) for col in piece.columns]
        ))
    return FiltrationResult(
        model=m,
        group=qpres,
        kmax=f.kmax,
        pieces=tuple(pieces),
        graded=_graded_invariants(tuple(pieces)),
        generators=tuple(push(e.coeffs) for e in f.generators),
        weight_cap=f.weight_cap,
        stabilized_window=f.stabilized_window,
        exactness_flag=f.exactness_flag,
        warnings=f.warnings,
    )
