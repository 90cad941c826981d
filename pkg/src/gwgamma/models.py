"""Builtin Grothendieck-Witt ring models.

Each constructor assembles a :class:`~gwgamma.lambdaring.RingModel` from a
known additive presentation, multiplication table and basis lambda-series:

* ``gw_point``      -- the base field, C (integers, binomial lambda) or R
                       (Z[L]/(L^2-1) with L the class of <-1>);
* ``gw_projective`` -- projective r-space over either base.  Writing
                       a = H(O(1)) - H(1) and rho = ceil(r/2), the additive
                       group is GW(base) plus one copy of Z per power a^k,
                       where a^rho is free for even r, of order two for
                       r = 1 mod 4, and absent for r = 3 mod 4; higher
                       powers vanish.  phi * a^k = rank(phi) a^k.
* ``gw_punctured_line``  -- the affine line minus a point over R: one extra
                       generator eps^ = eps - 1 with eps a line element,
                       eps^2 = 1, so eps^*eps^ = -2eps^ and L*eps^ = -eps^;
* ``gw_punctured_a5``    -- odd-dimensional affine space minus a point over
                       C, reduced part Z + Z/2*eps^ with eps^2 = 0 and
                       gamma-series coefficients C(2^(f-1), i) * 2^(i-f)
                       taken mod 2;
* ``gw_surface_cxp1``    -- the product of a smooth curve with s two-torsion
                       line bundle classes and the projective line.

The lambda-series of the twisted hyperbolic classes are computed at build
time as exact series quotients

    lambda_t(H(M) - H(1)) = (1 + (x + H(1)) t + e t^2) / (1 + H(1) t + e t^2)

with e the class of <-1>, following the splitting of H(M) into the two line
classes M and -M.  Powers a^k are rewritten as integer combinations of the
classes a_k = H(O(k)) - H(1) through the recursion

    a_0 = 0,  a_1 = a,  a_k = (a + 2) a_{k-1} - a_{k-2} + 2a,

and inherit their series multiplicatively.
"""

from __future__ import annotations

import math

from .abelian import GroupPresentation
from .lambdaring import (
    DEFAULT_TRUNCATION,
    CheckResult,
    Report,
    RingElement,
    RingModel,
    lambda_total,
)
from .series import TruncSeries, lambda_from_gamma


def _series_coeff_vectors(series: TruncSeries) -> list[tuple[int, ...]]:
    """Degree >= 1 coefficient vectors of a unit series, trailing zeros cut."""
    body = [c.value.coeffs for c in series.coeffs[1:]]
    while body and not any(body[-1]):
        body.pop()
    return body


def gw_point(base: str = "C", trunc: int = DEFAULT_TRUNCATION) -> RingModel:
    if base == "C":
        group = GroupPresentation((0,), ("one",))
        return RingModel(
            name="gw_point(base=C)",
            group=group,
            unit=(1,),
            mul={(0, 0): (1,)},
            aug=(1,),
            lambda_on_basis=[[(1,)]],
            hyperbolic=[(2,)],
            trunc=trunc,
            params={"which": "gw_point", "base": "C"},
        )
    if base == "R":
        group = GroupPresentation((0, 0), ("one", "L"))
        return RingModel(
            name="gw_point(base=R)",
            group=group,
            unit=(1, 0),
            mul={(0, 0): (1, 0), (0, 1): (0, 1), (1, 1): (1, 0)},
            aug=(1, 1),
            lambda_on_basis=[[(1, 0)], [(0, 1)]],
            hyperbolic=[(1, 1)],
            trunc=trunc,
            params={"which": "gw_point", "base": "R"},
        )
    raise ValueError("base must be 'C' or 'R'")


def projective_top_power(r: int) -> int:
    """Largest k with a^k != 0 in the projective-space model."""
    rho = (r + 1) // 2
    return rho - 1 if r % 4 == 3 else rho


def _hyperbolic_shift_series(
    x: RingElement, det: RingElement, order: int
) -> TruncSeries:
    """lambda_t(H(M) - H(1)) for x = H(M) - H(1), det the class of <-1>."""
    one = x.model.unit_element
    h1 = one + det
    num = TruncSeries.from_coeffs(one, [x + h1, det], order)
    den = TruncSeries.from_coeffs(one, [h1, det], order)
    return num * den.inverse()


def twisted_hyperbolic_classes(model: RingModel, count: int) -> list[RingElement]:
    """Classes a_k = H(O(k)) - H(1) for k = 0..count via the recursion."""
    a = model.basis_element(list(model.group.names).index("a"))
    one = model.unit_element
    out = [model.zero_element, a]
    while len(out) <= count:
        prev, prev2 = out[-1], out[-2]
        out.append((a + 2 * one) * prev - prev2 + 2 * a)
    return out[: count + 1]


def alternating_h_sum(model: RingModel, r: int) -> RingElement:
    """sum_j (-1)^j C(r+1, rho-j) a_j, the Euler-type combination for odd r."""
    rho = (r + 1) // 2
    a_cls = twisted_hyperbolic_classes(model, rho)
    acc = model.zero_element
    for j in range(1, rho + 1):
        sign = -1 if j % 2 else 1
        acc = acc + sign * math.comb(r + 1, rho - j) * a_cls[j]
    return acc


def check_ak_recursion(model: RingModel, kmax: int | None = None) -> Report:
    """Consistency checks for the twisted classes of a projective model.

    Runs the recursion a_0 = 0, a_1 = a, a_k = (a+2) a_{k-1} - a_{k-2} + 2a
    and checks that every a_k is supported on the powers of a alone, and,
    for odd dimension, that the signed binomial combination of the a_j
    collapses to (-a)^rho.
    """
    if model.params.get("which") != "gw_projective":
        raise ValueError("model was not built by gw_projective")
    r = model.params["r"]
    rho = (r + 1) // 2
    count = kmax if kmax is not None else rho + 2
    names = list(model.group.names)
    a_block = [i for i, n in enumerate(names) if n.startswith("a")]
    a_cls = twisted_hyperbolic_classes(model, count)
    checks = []
    for k in range(1, count + 1):
        outside = [
            c for i, c in enumerate(a_cls[k].value.coeffs) if i not in a_block
        ]
        ok = not any(outside)
        checks.append(CheckResult(
            "a_%d is supported on powers of a" % k,
            ok,
            "" if ok else "stray coefficients %r" % (outside,),
        ))
        ok_rank = model.augmentation(a_cls[k].value) == 0
        checks.append(CheckResult(
            "a_%d has rank zero" % k, ok_rank,
            "" if ok_rank else "rank %d" % model.augmentation(a_cls[k].value),
        ))
    if r % 2 == 1:
        a = model.basis_element(names.index("a"))
        lhs = alternating_h_sum(model, r)
        rhs = (-a) ** rho
        ok = lhs == rhs
        checks.append(CheckResult(
            "signed binomial sum of a_j equals (-a)^%d" % rho,
            ok,
            "" if ok else "%r != %r" % (lhs.value.coeffs, rhs.value.coeffs),
        ))
    return Report(tuple(checks))


def gw_projective(
    base: str = "C", r: int = 1, trunc: int = DEFAULT_TRUNCATION
) -> RingModel:
    if not 1 <= r <= 12:
        raise ValueError("r must lie in 1..12")
    top = projective_top_power(r)
    torsion_top = r % 4 == 1
    if base == "C":
        base_names = ["one"]
        base_orders = [0]
        base_aug = [1]
    elif base == "R":
        base_names = ["one", "L"]
        base_orders = [0, 0]
        base_aug = [1, 1]
    else:
        raise ValueError("base must be 'C' or 'R'")
    nb = len(base_names)
    names = base_names + ["a" if k == 1 else "a%d" % k for k in range(1, top + 1)]
    orders = base_orders + [0] * top
    if torsion_top:
        orders[-1] = 2
    group = GroupPresentation(tuple(orders), tuple(names))
    rank = group.rank

    def vec(**coeffs):
        v = [0] * rank
        for label, c in coeffs.items():
            v[names.index(label)] = c
        return tuple(v)

    unit = vec(one=1)
    mul = {}
    for i in range(rank):
        mul[(0, i)] = tuple(int(j == i) for j in range(rank))
    if base == "R":
        mul[(1, 1)] = unit
        for k in range(1, top + 1):
            mul[(1, nb + k - 1)] = tuple(
                int(j == nb + k - 1) for j in range(rank)
            )
    for i in range(1, top + 1):
        for j in range(i, top + 1):
            key = (nb + i - 1, nb + j - 1)
            if i + j <= top:
                mul[key] = tuple(int(t == nb + i + j - 1) for t in range(rank))
            else:
                mul[key] = (0,) * rank
    aug = tuple(base_aug + [0] * top)

    # phase one: arithmetic-only model to compute the basis lambda-series
    proto_lambda = [[tuple(int(j == i) for j in range(rank))] for i in range(rank)]
    proto = RingModel(
        "proto", group, unit, mul, aug, proto_lambda, None, trunc
    )
    det = proto.basis_element(1) if base == "R" else proto.unit_element
    a_cls = twisted_hyperbolic_classes(proto, top)
    a_series = [
        _hyperbolic_shift_series(a_cls[k], det, trunc) for k in range(top + 1)
    ]
    # rewrite a^k as an integer combination of a_1..a_k by back-substitution
    # (a_k = a^k + lower powers of a with unit leading coefficient)
    power_series = {}
    for k in range(1, top + 1):
        residue = list(proto.basis_element(nb + k - 1).value.coeffs)
        combo = [0] * (top + 1)
        for j in range(k, 0, -1):
            c = residue[nb + j - 1]
            combo[j] = c
            if c:
                for t, v in enumerate(a_cls[j].value.coeffs):
                    residue[t] -= c * v
            residue = list(group.reduce(residue))
        if any(residue):
            raise AssertionError("power of a not spanned by twisted classes")
        series = TruncSeries.one(proto.unit_element, trunc)
        for j in range(1, top + 1):
            if combo[j]:
                series = series * a_series[j].pow(combo[j])
        power_series[k] = series

    lambda_on_basis = [[unit]]
    if base == "R":
        lambda_on_basis.append([vec(L=1)])
    for k in range(1, top + 1):
        lambda_on_basis.append(_series_coeff_vectors(power_series[k]))
    hyper = [vec(one=2) if base == "C" else vec(one=1, L=1)]
    hyper += [vec(**{names[nb + k - 1]: 1}) for k in range(1, top + 1)]
    return RingModel(
        name="gw_projective(r=%d,base=%s)" % (r, base),
        group=group,
        unit=unit,
        mul=mul,
        aug=aug,
        lambda_on_basis=lambda_on_basis,
        hyperbolic=hyper,
        trunc=trunc,
        params={"which": "gw_projective", "base": base, "r": r},
    )


def gw_punctured_line(base: str = "R", trunc: int = DEFAULT_TRUNCATION) -> RingModel:
    if base != "R":
        raise ValueError("only the real punctured line is shipped")
    group = GroupPresentation((0, 0, 0), ("one", "L", "eps"))
    unit = (1, 0, 0)
    mul = {
        (0, 0): unit,
        (0, 1): (0, 1, 0),
        (0, 2): (0, 0, 1),
        (1, 1): unit,
        (1, 2): (0, 0, -1),
        (2, 2): (0, 0, -2),
    }
    aug = (1, 1, 0)
    proto = RingModel(
        "proto", group, unit, mul, aug,
        [[(1, 0, 0)], [(0, 1, 0)], [(0, 0, 1)]], None, trunc,
    )
    one = proto.unit_element
    eps = proto.basis_element(2)
    num = TruncSeries.from_coeffs(one, [eps + one], trunc)
    den = TruncSeries.from_coeffs(one, [one], trunc)
    lam_eps = _series_coeff_vectors(num * den.inverse())
    return RingModel(
        name="gw_punctured_line(base=R)",
        group=group,
        unit=unit,
        mul=mul,
        aug=aug,
        lambda_on_basis=[[(1, 0, 0)], [(0, 1, 0)], lam_eps],
        hyperbolic=[(1, 1, 0)],
        trunc=trunc,
        params={"which": "gw_punctured_line", "base": "R"},
    )


def punctured_gamma_coefficients(f: int, count: int) -> list[int]:
    """Exact integers C(2^(f-1), i) * 2^(i-f) for i = 1..count."""
    if f < 2:
        raise ValueError("f must be at least 2")
    out = []
    for i in range(1, count + 1):
        num = math.comb(2 ** (f - 1), i) * 2 ** i
        den = 2 ** f
        if num % den:
            raise ArithmeticError("gamma coefficient is not an integer")
        out.append(num // den)
    return out


def gw_punctured_a5(f: int = 3, trunc: int = DEFAULT_TRUNCATION) -> RingModel:
    """Reduced part of GW of odd punctured affine space over C.

    The additive group is Z + Z/2 * eps^ with eps^2 = 0; the gamma-series of
    eps^ has coefficients c_i * eps^ with c_i = C(2^(f-1), i) 2^(i-f), which
    are 1, odd, and then all even, so mod 2 the series is 1 + e t + e t^2.
    """
    # the mod-2 pattern (1, odd, even, even, ...) is independent of f; the
    # constructor re-derives it rather than hard-coding the series
    count = 2 ** (f - 1) if f <= 6 else min(2 ** (f - 1), trunc)
    coeffs = punctured_gamma_coefficients(f, count)
    if coeffs[0] != 1 or coeffs[1] % 2 != 1:
        raise AssertionError("unexpected low gamma coefficients")
    if any(c % 2 for c in coeffs[2:]):
        raise AssertionError("higher gamma coefficients must be even")
    group = GroupPresentation((0, 2), ("one", "eps"))
    unit = (1, 0)
    proto = RingModel(
        "proto", group, unit,
        {(0, 0): unit, (0, 1): (0, 1), (1, 1): (0, 0)},
        (1, 0), [[(1, 0)], [(0, 1)]], None, trunc,
    )
    eps = proto.basis_element(1)
    gamma = TruncSeries.from_coeffs(
        proto.unit_element,
        [(c % 2) * eps for c in coeffs],
        trunc,
    )
    lam_eps = _series_coeff_vectors(lambda_from_gamma(gamma))
    return RingModel(
        name="gw_punctured_a5(f=%d)" % f,
        group=group,
        unit=unit,
        mul={(0, 0): unit, (0, 1): (0, 1), (1, 1): (0, 0)},
        aug=(1, 0),
        lambda_on_basis=[[(1, 0)], lam_eps],
        hyperbolic=[],
        trunc=trunc,
        params={"which": "gw_punctured_a5", "f": f},
    )


def gw_surface_cxp1(s: int = 1, trunc: int = DEFAULT_TRUNCATION) -> RingModel:
    """Curve times projective line, with s two-torsion line bundle classes.

    Basis: 1; a_1..a_s (two-torsion line classes minus one); b and c (order
    two hyperbolic shifts); d_0 (free hyperbolic shift); d_1..d_s (order two
    hyperbolic shifts).  The only non-trivial products are
    a_j * c = a_j * d_N = d_j + c.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    names = (
        ["one"]
        + ["a%d" % j for j in range(1, s + 1)]
        + ["b", "c", "d0"]
        + ["d%d" % j for j in range(1, s + 1)]
    )
    orders = [0] + [2] * s + [2, 2, 0] + [2] * s
    group = GroupPresentation(tuple(orders), tuple(names))
    rank = group.rank
    i_b = 1 + s
    i_c = 2 + s
    i_d0 = 3 + s

    def unit_vec(i):
        return tuple(int(j == i) for j in range(rank))

    mul = {}
    for i in range(rank):
        mul[(0, i)] = unit_vec(i)
    d_indices = [i_d0] + [i_d0 + j for j in range(1, s + 1)]
    for j in range(1, s + 1):
        target = [0] * rank
        target[i_d0 + j] = 1
        target[i_c] = 1
        mul[(j, i_c)] = tuple(target)
        for di in d_indices:
            mul[(j, di) if j <= di else (di, j)] = tuple(target)
    # all remaining non-unit products vanish; the sparse table handles that
    aug = tuple([1] + [0] * (rank - 1))

    proto_lambda = [[unit_vec(i)] for i in range(rank)]
    proto = RingModel(
        "proto", group, unit_vec(0), mul, aug, proto_lambda, None, trunc
    )
    one = proto.unit_element
    lambda_on_basis = [[unit_vec(0)]]
    for j in range(1, s + 1):
        aj = proto.basis_element(j)
        num = TruncSeries.from_coeffs(one, [aj + one], trunc)
        den = TruncSeries.from_coeffs(one, [one], trunc)
        lambda_on_basis.append(_series_coeff_vectors(num * den.inverse()))
    for i in [i_b, i_c] + d_indices:
        x = proto.basis_element(i)
        gamma = TruncSeries.from_coeffs(one, [x, -x], trunc)
        lambda_on_basis.append(_series_coeff_vectors(lambda_from_gamma(gamma)))
    hyper = [unit_vec(i) for i in [i_b, i_c] + d_indices]
    return RingModel(
        name="gw_surface_cxp1(s=%d)" % s,
        group=group,
        unit=unit_vec(0),
        mul=mul,
        aug=aug,
        lambda_on_basis=lambda_on_basis,
        hyperbolic=hyper,
        trunc=trunc,
        params={"which": "gw_surface_cxp1", "s": s},
    )


def line_elements(model: RingModel) -> frozenset:
    """The multiplicative group of line elements visible in the model.

    A line element has rank one and total lambda-series 1 + x t.  Candidates
    are the rank-one basis elements and unit + b for rank-zero basis b; the
    set is closed under multiplication and every member is re-verified.
    """
    def is_line(x):
        if model.augmentation(x.value) != 1:
            return False
        lam = lambda_total(x)
        if lam.coeffs[1] != x:
            return False
        return all(c.is_zero for c in lam.coeffs[2:])

    one = model.unit_element
    candidates = [one]
    for i in range(model.group.rank):
        b = model.basis_element(i)
        if model.aug[i] == 1:
            candidates.append(b)
        elif model.aug[i] == 0:
            candidates.append(one + b)
    lines = {x.value: x for x in candidates if is_line(x)}
    frontier = list(lines.values())
    while frontier:
        x = frontier.pop()
        for y in list(lines.values()):
            z = x * y
            if z.value not in lines:
                if not is_line(z):
                    raise AssertionError("product of line elements is not a line")
                lines[z.value] = z
                frontier.append(z)
        if len(lines) > 1024:
            raise AssertionError("line element closure did not terminate")
    return frozenset(lines.values())


def _point_c(trunc: int = DEFAULT_TRUNCATION) -> RingModel:
    return gw_point("C", trunc)


def _point_r(trunc: int = DEFAULT_TRUNCATION) -> RingModel:
    return gw_point("R", trunc)


BUILTINS = {
    "gw_point": gw_point,
    "gw_point_C": _point_c,
    "gw_point_R": _point_r,
    "gw_projective": gw_projective,
    "gw_punctured_line": gw_punctured_line,
    "gw_punctured_a5": gw_punctured_a5,
    "gw_surface_cxp1": gw_surface_cxp1,
}
