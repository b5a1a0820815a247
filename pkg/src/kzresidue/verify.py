"""Machine checks for solution tables and fundamental matrices.

Every check returns a CheckReport carrying a verdict and, on failure, a
small witness pinpointing the first broken identity.  Checks recompute
everything from scratch with exact arithmetic; nothing is trusted from
the solver beyond the data being checked.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import (
    NonDivisibleError,
    PolyFraction,
    SparsePolynomial,
    discriminant_power,
    exact_divide,
)
from .shapes import (
    Numbering,
    Partition,
    Tabloid,
    act_transposition,
    column_expansion,
    diagram_stats,
    raise_row,
    standard_tableaux,
    tabloids,
)
from .solve import (
    DEFAULT_BUDGET,
    FundamentalMatrix,
    SolutionTable,
    SpanError,
    coordinates_in_specht_basis,
    dual_matrix,
    fundamental_solution,
    reflection_dual_solutions,
    reflection_solutions,
    solve_component,
    solve_cycle,
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification; `witness` is set exactly when the
    verdict is fail and names the first broken instance."""

    check: str
    lam: Partition | None
    m: int | None
    passed: bool
    witness: dict | None = None
    info: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "lambda": list(self.lam.parts) if self.lam is not None else None,
            "m": self.m,
            "verdict": self.verdict,
            "witness": self.witness,
            "info": {k: repr(v) if not _jsonable(v) else v for k, v in self.info.items()},
        }

    def one_line(self) -> str:
        shape = str(self.lam) if self.lam is not None else "-"
        return f"[{self.verdict.upper()}] {self.check} shape={shape} m={self.m}"


def _jsonable(v) -> bool:
    return isinstance(v, (str, int, float, bool, type(None), list, dict))


def _clip(obj, limit: int = 300) -> str:
    s = str(obj)
    return s if len(s) <= limit else s[: limit - 3] + "..."


# ----------------------------------------------------------------------
# the differential system


def _kz_polynomial_witness(table: SolutionTable) -> dict | None:
    n = table.lam.size
    m = table.m
    comps = table.components
    for i in range(1, n + 1):
        for u, c_u in comps.items():
            rhs = SparsePolynomial.zero(n)
            for j in range(1, n + 1):
                if j == i:
                    continue
                swapped = comps[act_transposition(u, i, j)]
                try:
                    rhs = rhs + exact_divide(
                        swapped + c_u, SparsePolynomial.z_diff(n, i, j)
                    )
                except NonDivisibleError as exc:
                    return {
                        "i": i,
                        "j": j,
                        "form": str(u),
                        "reason": "numerator not divisible by the pole",
                        "remainder": _clip(exc.remainder),
                    }
            diff = c_u.partial_derivative(i) - rhs * m
            if diff:
                return {"i": i, "form": str(u), "difference": _clip(diff)}
    return None


def _kz_fraction_witness(table: SolutionTable) -> dict | None:
    """Cross-multiplied check for tables with a shared polynomial
    denominator; the transposition action picks up a sign on twisted
    tables."""
    n = table.lam.size
    m = table.m
    swap_sign = -1 if table.twisted else 1
    comps = table.components
    dens = {id(c.den): c.den for c in comps.values()}
    first = next(iter(comps.values())).den
    for den in dens.values():
        if den is not first and den != first:
            return {"reason": "components do not share a denominator"}
    d_den = {i: first.partial_derivative(i) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        prod_i = SparsePolynomial.constant(n, 1)
        for l in range(1, n + 1):
            if l != i:
                prod_i = prod_i * SparsePolynomial.z_diff(n, i, l)
        for u, c_u in comps.items():
            lhs = (
                c_u.num.partial_derivative(i) * first - c_u.num * d_den[i]
            ) * prod_i
            rhs = SparsePolynomial.zero(n)
            for j in range(1, n + 1):
                if j == i:
                    continue
                swapped = comps[act_transposition(u, i, j)].num
                part = swapped * swap_sign + c_u.num
                rhs = rhs + part * exact_divide(
                    prod_i, SparsePolynomial.z_diff(n, i, j)
                )
            diff = lhs - rhs * first * m
            if diff:
                return {"i": i, "form": str(u), "difference": _clip(diff)}
    return None


def check_kz(table: SolutionTable) -> CheckReport:
    """The component table satisfies the full differential system for
    its stated parameter and (possibly twisted) transposition action."""
    sample = next(iter(table.components.values()))
    if isinstance(sample, PolyFraction):
        witness = _kz_fraction_witness(table)
    else:
        witness = _kz_polynomial_witness(table)
    if witness is not None:
        witness = {"cycle": str(table.cycle), **witness}
    return CheckReport(
        "kz_system",
        table.lam,
        table.m,
        witness is None,
        witness,
        {"twisted": table.twisted},
    )


def check_primitive(table: SolutionTable) -> CheckReport:
    """Every simple raising operator kills the solution: for each level,
    the component sums over all ways of reaching a raised tabloid vanish."""
    witness = None
    for s in range(1, len(table.lam.parts)):
        buckets: dict[Tabloid, SparsePolynomial] = {}
        for u, comp in table.components.items():
            for v in raise_row(u, s):
                cur = buckets.get(v)
                buckets[v] = comp if cur is None else cur + comp
        for v, total in buckets.items():
            if total:
                witness = {
                    "cycle": str(table.cycle),
                    "row": s,
                    "raised_tabloid": str(v),
                    "sum": _clip(total),
                }
                break
        if witness:
            break
    return CheckReport("highest_weight", table.lam, table.m, witness is None, witness)


# ----------------------------------------------------------------------
# polynomial shape of the answer


def _expected_leading_exponents(t: Numbering, m: int) -> tuple[int, ...]:
    n = t.size
    exps = [0] * n
    for k in range(1, n + 1):
        r, c = t.box_of(k)
        exps[k - 1] = m * (k - 1 + c - r)
    return tuple(exps)


def check_shape(fm: FundamentalMatrix) -> CheckReport:
    """Components and matrix entries are homogeneous integer polynomials
    of the closed-form degree, and each diagonal matrix entry leads (in
    the reversed-variable order) with the monomial whose exponents are
    read off the content and position of each label in the indexing
    tableau."""
    stats = diagram_stats(fm.lam, fm.m)
    degree = stats.solution_degree
    witness = None
    leading: dict[str, str] = {}

    def bad_poly(p: SparsePolynomial, where: dict) -> dict | None:
        if p.is_zero():
            return None
        if not p.is_homogeneous():
            return {**where, "reason": "not homogeneous"}
        if p.degree() != degree:
            return {**where, "reason": f"degree {p.degree()} != {degree}"}
        if not p.has_integer_coefficients():
            return {**where, "reason": "non-integer coefficient"}
        return None

    for table in fm.tables:
        for u, comp in table.components.items():
            witness = bad_poly(comp, {"cycle": str(table.cycle), "form": str(u)})
            if witness:
                break
        if witness:
            break
    if witness is None:
        for i in range(fm.dimension):
            for j in range(fm.dimension):
                witness = bad_poly(
                    fm.matrix.entry(i, j), {"row": i, "col": j, "where": "matrix"}
                )
                if witness:
                    break
            if witness:
                break
    if witness is None:
        for i, t in enumerate(fm.cycles):
            entry = fm.matrix.entry(i, i)
            if entry.is_zero():
                witness = {"row": i, "reason": "zero diagonal entry"}
                break
            exps, coeff = entry.leading_term()
            expected = _expected_leading_exponents(t, fm.m)
            if exps != expected:
                witness = {
                    "row": i,
                    "tableau": str(t.rows),
                    "leading": list(exps),
                    "expected": list(expected),
                }
                break
            leading[str(t.reading_word())] = str(coeff)
    return CheckReport(
        "polynomial_shape",
        fm.lam,
        fm.m,
        witness is None,
        witness,
        {"degree": degree, "leading_coefficients": leading},
    )


def _numeric_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [list(r) for r in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return det


def check_rank(fm: FundamentalMatrix) -> CheckReport:
    """The matrix over standard tableaux is invertible (full rank).

    A non-zero exact evaluation at an integer point certifies that the
    determinant polynomial is non-zero; only if a few points all vanish
    does the symbolic determinant decide."""
    n = fm.lam.size
    d = fm.dimension
    witness = None
    info: dict = {}
    for base in (1, 2, 3):
        point = tuple(base + k * k * base for k in range(n))
        numeric = [
            [Fraction(fm.matrix.entry(i, j).evaluate(point)) for j in range(d)]
            for i in range(d)
        ]
        value = _numeric_det(numeric)
        if value:
            info["certificate_point"] = list(point)
            break
    else:
        det = fm.determinant()
        info["det_degree"] = det.degree()
        if det.is_zero():
            witness = {"reason": "determinant vanishes identically"}
    return CheckReport("full_rank", fm.lam, fm.m, witness is None, witness, info)


def check_det(fm: FundamentalMatrix) -> CheckReport:
    """The determinant equals a non-zero constant times the squared
    discriminant raised to m times the symmetric fixed-space dimension;
    the constant is reported, not prescribed."""
    stats = diagram_stats(fm.lam, fm.m)
    det = fm.determinant()
    power = 2 * fm.m * stats.d_plus
    witness = None
    constant = None
    try:
        ratio = exact_divide(det, discriminant_power(fm.lam.size, power))
    except NonDivisibleError as exc:
        witness = {
            "reason": f"determinant not divisible by the discriminant power {power}",
            "remainder": _clip(exc.remainder),
        }
    else:
        if not ratio.is_constant():
            witness = {"reason": "quotient is not constant", "quotient": _clip(ratio)}
        elif ratio.is_zero():
            witness = {"reason": "determinant vanishes"}
        else:
            constant = ratio.constant_value()
    return CheckReport(
        "determinant_identity",
        fm.lam,
        fm.m,
        witness is None,
        witness,
        {"power": power, "constant": str(constant) if constant is not None else None},
    )


# ----------------------------------------------------------------------
# symmetry


def _swap_image(n: int, i: int, j: int) -> tuple[int, ...]:
    image = list(range(1, n + 1))
    image[i - 1], image[j - 1] = j, i
    return tuple(image)


def check_equivariance(lam: Partition, m: int) -> CheckReport:
    """Adjacent transpositions act compatibly: relabeling both tabloids
    matches permuting the variables of the component."""
    n = lam.size
    witness = None
    forms = tabloids(lam.parts)
    cycles = [t.tabloid() for t in standard_tableaux(lam)]
    for i in range(1, n):
        image = _swap_image(n, i, i + 1)
        for cyc in cycles:
            gcyc = act_transposition(cyc, i, i + 1)
            for u in forms:
                gu = act_transposition(u, i, i + 1)
                lhs = solve_component(lam, m, gcyc, gu)
                rhs = solve_component(lam, m, cyc, u).permute_variables(image)
                if lhs != rhs:
                    witness = {
                        "transposition": [i, i + 1],
                        "cycle": str(cyc),
                        "form": str(u),
                        "difference": _clip(lhs - rhs),
                    }
                    break
            if witness:
                break
        if witness:
            break
    return CheckReport("equivariance", lam, m, witness is None, witness)


def check_frobenius(lam: Partition) -> CheckReport:
    """The sum of all transpositions acts on every standard polytabloid
    as the content-sum scalar (a pure representation-theory identity,
    no solving involved)."""
    n = lam.size
    stats = diagram_stats(lam, 1)
    witness = None
    for t in standard_tableaux(lam):
        vec: dict[Tabloid, int] = {}
        for sign, u in column_expansion(t):
            vec[u] = vec.get(u, 0) + sign
        image: dict[Tabloid, int] = {}
        for i, j in itertools.combinations(range(1, n + 1), 2):
            for u, c in vec.items():
                v = act_transposition(u, i, j)
                image[v] = image.get(v, 0) + c
        expected = {u: stats.f2 * c for u, c in vec.items() if stats.f2 * c}
        image = {u: c for u, c in image.items() if c}
        if image != expected:
            witness = {"tableau": str(t.rows)}
            break
    return CheckReport("content_sum_action", lam, None, witness is None, witness)


# ----------------------------------------------------------------------
# duality and the straightening of non-standard cycles


def _specht_transposition_matrix(lam: Partition, i: int, j: int) -> list[list[Fraction]]:
    """Matrix M with (i j) . v_col = sum_row M[row][col] v_row, solved
    exactly from the tabloid expansion."""
    stds = standard_tableaux(lam)
    d = len(stds)
    cols = []
    for t in stds:
        vec: dict[Tabloid, int] = {}
        for sign, u in column_expansion(t):
            v = act_transposition(u, i, j)
            vec[v] = vec.get(v, 0) + sign
        cols.append(
            coordinates_in_specht_basis(lam, lambda u: Fraction(vec.get(u, 0)))
        )
    return [[cols[c][r] for c in range(d)] for r in range(d)]


def check_dual(fm: FundamentalMatrix) -> CheckReport:
    """Rows of the transposed-inverse matrix solve the parameter-negated
    system in the coordinates dual to the polytabloid basis."""
    lam, m = fm.lam, fm.m
    n = lam.size
    dm = dual_matrix(fm)
    d = dm.dimension
    den = dm.det
    nums = [[dm.entries.entry(b, j).num for j in range(d)] for b in range(d)]
    specht = {
        (i, j): _specht_transposition_matrix(lam, i, j)
        for i, j in itertools.combinations(range(1, n + 1), 2)
    }
    witness = None
    d_den = {i: den.partial_derivative(i) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        prod_i = SparsePolynomial.constant(n, 1)
        for l in range(1, n + 1):
            if l != i:
                prod_i = prod_i * SparsePolynomial.z_diff(n, i, l)
        for b in range(d):
            for jcol in range(d):
                f = nums[b]
                lhs = (
                    f[jcol].partial_derivative(i) * den - f[jcol] * d_den[i]
                ) * prod_i
                rhs = SparsePolynomial.zero(n)
                for l in range(1, n + 1):
                    if l == i:
                        continue
                    mat = specht[(min(i, l), max(i, l))]
                    acted = SparsePolynomial.zero(n)
                    for k in range(d):
                        if mat[k][jcol]:
                            acted = acted + f[k] * mat[k][jcol]
                    rhs = rhs + (acted + f[jcol]) * exact_divide(
                        prod_i, SparsePolynomial.z_diff(n, i, l)
                    )
                diff = lhs - rhs * den * dm.m
                if diff:
                    witness = {
                        "i": i,
                        "dual_row": b,
                        "coordinate": jcol,
                        "difference": _clip(diff),
                    }
                    break
            if witness:
                break
        if witness:
            break
    return CheckReport(
        "dual_system",
        lam,
        dm.m,
        witness is None,
        witness,
        {"det_degree": den.degree()},
    )


def _distributions(labels: tuple[int, ...], sizes: tuple[int, ...]):
    """All ways to place the labels into ordered rows of the given sizes
    (sizes may contain zeros)."""
    if not sizes:
        if not labels:
            yield ()
        return
    k = sizes[0]
    for combo in itertools.combinations(labels, k):
        rest = tuple(x for x in labels if x not in combo)
        for tail in _distributions(rest, sizes[1:]):
            yield (combo,) + tail


def quotient_coordinates(lam: Partition, cycle: Tabloid) -> list[Fraction]:
    """Coordinates of a tabloid class against the standard-tableau
    classes, modulo the span of all simple lowering images (brute-force
    exact linear algebra over the full tabloid space)."""
    order = tabloids(lam.parts)
    index = {u: r for r, u in enumerate(order)}
    stds = standard_tableaux(lam)
    columns: list[dict[int, Fraction]] = []
    for t in stds:
        columns.append({index[t.tabloid()]: Fraction(1)})
    for s in range(1, lam.nrows):
        sizes = list(lam.parts)
        sizes[s - 1] += 1
        sizes[s] -= 1
        labels = tuple(range(1, lam.size + 1))
        for rows in _distributions(labels, tuple(sizes)):
            col: dict[int, Fraction] = {}
            for k in rows[s - 1]:
                moved = list(rows)
                moved[s - 1] = tuple(x for x in moved[s - 1] if x != k)
                moved[s] = moved[s] + (k,)
                r = index[Tabloid(tuple(moved))]
                col[r] = col.get(r, Fraction(0)) + 1
            if col:
                columns.append(col)
    nrows = len(order)
    ncols = len(columns)
    a = [[Fraction(0)] * ncols for _ in range(nrows)]
    for c, col in enumerate(columns):
        for r, v in col.items():
            a[r][c] = v
    rhs = [Fraction(0)] * nrows
    rhs[index[cycle]] = Fraction(1)
    used: set[int] = set()
    pivots: list[tuple[int, int]] = []
    for c in range(ncols):
        pivot = next((r for r in range(nrows) if r not in used and a[r][c]), None)
        if pivot is None:
            continue
        used.add(pivot)
        pivots.append((pivot, c))
        for r in range(nrows):
            if r == pivot or not a[r][c]:
                continue
            f = a[r][c] / a[pivot][c]
            for cc in range(ncols):
                if a[pivot][cc]:
                    a[r][cc] -= f * a[pivot][cc]
            rhs[r] -= f * rhs[pivot]
    for r in range(nrows):
        if r not in used and rhs[r]:
            raise SpanError(
                "tabloid class is not spanned by standard classes and lowerings",
                str(order[r]),
            )
    coords = [Fraction(0)] * len(stds)
    for pivot, c in pivots:
        if c < len(stds):
            coords[c] = rhs[pivot] / a[pivot][c]
    return coords


def check_straightening(lam: Partition, m: int, cycle: Tabloid) -> CheckReport:
    """A non-standard cycle's table equals the combination of standard
    cycles' tables given by straightening its class in the quotient by
    lowering images."""
    coords = quotient_coordinates(lam, cycle)
    stds = standard_tableaux(lam)
    target = solve_cycle(lam, m, cycle)
    basis = [solve_cycle(lam, m, t.tabloid()) for t in stds]
    witness = None
    for u in tabloids(lam.parts):
        combined = SparsePolynomial.zero(lam.size)
        for y, table in zip(coords, basis):
            if y:
                combined = combined + table.components[u] * y
        if combined != target.components[u]:
            witness = {
                "cycle": str(cycle),
                "form": str(u),
                "difference": _clip(target.components[u] - combined),
            }
            break
    return CheckReport(
        "straightening",
        lam,
        m,
        witness is None,
        witness,
        {"coordinates": [str(c) for c in coords]},
    )


# ----------------------------------------------------------------------
# the reflection representation families


def check_reflection(n: int, m: int) -> CheckReport:
    """The fixed-point residue family sums to zero, each path family
    member has coordinate sum zero, and the two families pair to
    delta_{ab}/m (checked cross-multiplied against the squared
    discriminant power)."""
    lam = Partition((n - 1, 1)) if n > 2 else Partition((1, 1))
    psis = reflection_solutions(n, m)
    phis = reflection_dual_solutions(n, m)
    disc = discriminant_power(n, 2 * m)
    witness = None
    for k in range(n):
        total = SparsePolynomial.zero(n)
        for psi in psis:
            total = total + psi.components[k]
        if total:
            witness = {"reason": "residue family does not sum to zero", "component": k + 1}
            break
    if witness is None:
        for phi in phis:
            total = SparsePolynomial.zero(n)
            for comp in phi.components:
                total = total + comp.num
            if total:
                witness = {
                    "reason": "path family coordinate sum is not zero",
                    "index": phi.index,
                }
                break
    if witness is None:
        # the first n-1 residue solutions form the basis dual to the
        # path family; the last one is minus their sum and pairs to -1/m
        # with everything, so it stays out of the delta identity
        for psi in psis[: n - 1]:
            for phi in phis:
                paired = SparsePolynomial.zero(n)
                for k in range(n):
                    paired = paired + psi.components[k] * phi.components[k].num
                expected = disc if psi.index == phi.index else SparsePolynomial.zero(n)
                if paired * m != expected:
                    witness = {
                        "a": psi.index,
                        "b": phi.index,
                        "difference": _clip(paired * m - expected),
                    }
                    break
            if witness:
                break
    return CheckReport("reflection_families", lam, m, witness is None, witness)


# ----------------------------------------------------------------------
# the whole battery


def run_suite(
    lam: Partition, m: int, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> list[CheckReport]:
    """Solve the full fundamental system for a shape and run every
    applicable check on it."""
    fm = fundamental_solution(lam, m, workers=workers, budget=budget)
    reports: list[CheckReport] = []

    def aggregate(name: str, per_table) -> CheckReport:
        for table in fm.tables:
            rep = per_table(table)
            if not rep.passed:
                return rep
        return CheckReport(name, lam, m, True, None, {"cycles": fm.dimension})

    reports.append(aggregate("kz_system", check_kz))
    reports.append(aggregate("highest_weight", check_primitive))
    reports.append(check_shape(fm))
    reports.append(check_rank(fm))
    reports.append(check_equivariance(lam, m))
    if lam.size <= 6:
        reports.append(check_frobenius(lam))
    reports.append(check_det(fm))
    return reports
