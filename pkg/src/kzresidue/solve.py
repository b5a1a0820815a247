"""Solution tables for the symmetric-group KZ system.

A solution attached to a cycle tabloid is assembled component by
component: the component at a tabloid U is the iterated residue of the
level-interaction form times the (symmetrized) anchor-chain form of U,
evaluated on the residue schedule of the cycle.  Reading the components
at standard tabloids against the polytabloid expansion yields the
square fundamental matrix indexed by standard tableaux.

The symmetrization deserves a comment, since a sign is at stake.  The
cycle is the signed average over the level group G (all permutations of
same-level variables) of pushforwards of one torus.  Pulling each
summand back to the fixed torus turns the pushforward into a relabeling
of the anchor-chain factors *and* a reordering of the volume element,
whose sign exactly cancels the skew-symmetrizing sign.  What remains is
the plain, unsigned sum over relabelings implemented here; the signed
variant would (and in tests does) break row-equivalence invariance and
the differential equations themselves for shapes where the level group
is non-trivial, e.g. (2,2).
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactalg import (
    MAX_VARS,
    FactoredSum,
    PolyFraction,
    PolyMatrix,
    SparsePolynomial,
    det_adjugate,
    determinant,
    discriminant_power,
    normalize_factored,
    t_atom,
    z_atom,
)
from .residues import iterated_residue, residue_plan
from .shapes import (
    Numbering,
    Partition,
    Tabloid,
    column_expansion,
    diagram_stats,
    standard_tableaux,
    tabloids,
)

DEFAULT_BUDGET = 10_000


class ResourceGuardError(RuntimeError):
    """The requested instance exceeds the configured residue budget."""


class SpanError(ArithmeticError):
    """A component vector fell outside the polytabloid span; carries the
    residual witness."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


def level_boxes(lam: Partition, s: int) -> tuple[tuple[int, int], ...]:
    """Boxes owning a level-s variable (those in rows s+1 and below),
    in row-major reading order."""
    return tuple(b for b in lam.boxes() if b[0] >= s + 1)


@lru_cache(maxsize=None)
def interaction_form(lam: Partition, m: int) -> FactoredSum:
    """The G-symmetric interaction factor common to every component.

    Squared differences (power 2m) between all fixed-point pairs and all
    same-level variable pairs; inverse differences (power -m) between
    every adjacent-level variable pair and between every level-1
    variable and every fixed point.
    """
    if m < 1:
        raise ValueError("the interaction form needs a positive integer m")
    n = lam.size
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors.append((z_atom(i), z_atom(j), 2 * m))
    for s in range(1, lam.nrows):
        boxes = level_boxes(lam, s)
        for x in range(len(boxes)):
            for y in range(x + 1, len(boxes)):
                bx, by = boxes[x], boxes[y]
                factors.append((t_atom(*bx, s), t_atom(*by, s), 2 * m))
        if s >= 2:
            for b in boxes:
                for b2 in level_boxes(lam, s - 1):
                    factors.append((t_atom(*b, s), t_atom(*b2, s - 1), -m))
    for b in level_boxes(lam, 1):
        for k in range(1, n + 1):
            factors.append((t_atom(*b, 1), z_atom(k), -m))
    return FactoredSum.term(1, factors)


def tableau_form(t: Numbering) -> FactoredSum:
    """The anchor-chain form of a numbering: every box below row 1
    carries a chain of inverse differences through its levels, anchored
    at the fixed point labeling the box."""
    factors = []
    for r, c in t.shape.boxes():
        if r < 2:
            continue
        factors.append((t_atom(r, c, 1), z_atom(t.label(r, c)), -1))
        for s in range(1, r - 1):
            factors.append((t_atom(r, c, s + 1), t_atom(r, c, s), -1))
    return FactoredSum.term(1, factors)


def level_group_size(lam: Partition) -> int:
    size = 1
    for s in range(1, lam.nrows):
        k = len(level_boxes(lam, s))
        for i in range(2, k + 1):
            size *= i
    return size


def _level_relabelings(lam: Partition):
    """All maps sending each level's variables to a permutation of
    themselves (the level group acting on atoms)."""
    per_level = []
    for s in range(1, lam.nrows):
        boxes = level_boxes(lam, s)
        per_level.append(
            [
                {t_atom(*b, s): t_atom(*img, s) for b, img in zip(boxes, perm)}
                for perm in itertools.permutations(boxes)
            ]
        )
    for combo in itertools.product(*per_level):
        mapping: dict = {}
        for part in combo:
            mapping.update(part)
        yield mapping


@lru_cache(maxsize=None)
def symmetrized_tableau_form(t: Numbering) -> FactoredSum:
    """Plain sum of the anchor-chain form over all level-group
    relabelings of its variables (see the module docstring for why the
    sum is unsigned)."""
    base = tableau_form(t)
    total = FactoredSum()
    for mapping in _level_relabelings(t.shape):
        total = total + base.relabel(mapping)
    return total


@lru_cache(maxsize=None)
def cycle_integral(m: int, cycle: Numbering, form: Numbering) -> SparsePolynomial:
    """One component: the iterated residue of the full integrand for an
    explicit pair of numberings.  Row-equivalent replacements of either
    numbering leave the value unchanged (verified in tests, relied on by
    the tabloid-level API)."""
    integrand = interaction_form(cycle.shape, m) * symmetrized_tableau_form(form)
    collapsed = iterated_residue(integrand, residue_plan(cycle))
    return normalize_factored(collapsed, cycle.shape.size)


def solve_component(
    lam: Partition, m: int, cycle: Tabloid, form: Tabloid
) -> SparsePolynomial:
    """Component of the cycle's solution at the given form tabloid."""
    if Partition(tuple(cycle.shape)) != lam or Partition(tuple(form.shape)) != lam:
        raise ValueError("cycle and form tabloids must have the requested shape")
    return cycle_integral(m, cycle.representative(), form.representative())


@dataclass(frozen=True)
class SolutionTable:
    """All tabloid components of the solution attached to one cycle.

    Components are polynomials (positive parameter) or shared-denominator
    fractions (twisted tables); `m` is the parameter of the system the
    table claims to solve and `twisted` marks the extra sign in the
    transposition action."""

    lam: Partition
    m: int
    cycle: Tabloid
    components: dict
    twisted: bool = False

    def tabloid_order(self) -> tuple[Tabloid, ...]:
        return tuple(tabloids(self.lam.parts))

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "m": self.m,
            "cycle": [list(r) for r in self.cycle.rows],
            "forms": [[list(r) for r in u.rows] for u in self.tabloid_order()],
            "components": [
                self.components[u].to_json() for u in self.tabloid_order()
            ],
        }


def _component_tasks(m, cycle_rep, forms):
    return [(m, cycle_rep, u.representative()) for u in forms]


def solve_cycle(
    lam: Partition, m: int, cycle: Tabloid, workers: int = 1
) -> SolutionTable:
    """Full component table of one cycle over every tabloid of the shape."""
    forms = tuple(tabloids(lam.parts))
    tasks = _component_tasks(m, cycle.representative(), forms)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda a: cycle_integral(*a), tasks))
    else:
        values = [cycle_integral(*a) for a in tasks]
    return SolutionTable(lam, m, cycle, dict(zip(forms, values)))


def polytabloid_columns(lam: Partition) -> tuple[list[list[int]], tuple[Tabloid, ...]]:
    """Integer matrix whose column j holds the tabloid coefficients of
    the j-th standard tableau's signed column expansion, along with the
    row (tabloid) order."""
    order = tuple(tabloids(lam.parts))
    index = {u: i for i, u in enumerate(order)}
    stds = standard_tableaux(lam)
    a = [[0] * len(stds) for _ in order]
    for j, t in enumerate(stds):
        for sign, u in column_expansion(t):
            a[index[u]][j] += sign
    return a, order


def coordinates_in_specht_basis(lam: Partition, component_of) -> list:
    """Solve for the coordinates of a tabloid-component vector against
    the standard polytabloids, exactly.

    `component_of(tabloid)` supplies the entries (polynomials, fractions
    or plain rationals — anything with ring arithmetic and truthiness).
    Raises SpanError when the vector is not in the span, carrying the
    first non-zero residual as witness.
    """
    a, order = polytabloid_columns(lam)
    rows = [[Fraction(v) for v in row] for row in a]
    rhs = [component_of(u) for u in order]
    ncols = len(rows[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    used: set[int] = set()
    for col in range(ncols):
        pivot = next(
            (r for r in range(len(rows)) if r not in used and rows[r][col]), None
        )
        if pivot is None:
            raise SpanError("polytabloid expansion matrix lost rank", col)
        used.add(pivot)
        pivots.append((pivot, col))
        for r in range(len(rows)):
            if r == pivot or not rows[r][col]:
                continue
            f = rows[r][col] / rows[pivot][col]
            for c in range(col, ncols):
                rows[r][c] -= f * rows[pivot][c]
            rhs[r] = rhs[r] - rhs[pivot] * f
    coords = [None] * ncols
    for pivot, col in pivots:
        coords[col] = rhs[pivot] * (1 / rows[pivot][col])
    for r in range(len(rows)):
        if r in used:
            continue
        if rhs[r]:
            raise SpanError(
                "component vector is not a combination of polytabloids", rhs[r]
            )
    return coords


@dataclass(frozen=True)
class FundamentalMatrix:
    """Square solution matrix over standard tableaux, plus the full
    per-tabloid component tables it was read from."""

    lam: Partition
    m: int
    cycles: tuple[Numbering, ...]
    tables: tuple[SolutionTable, ...]
    matrix: PolyMatrix
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.cycles)

    def determinant(self) -> SparsePolynomial:
        if "det" not in self._cache:
            self._cache["det"] = determinant(self.matrix)
        return self._cache["det"]

    def table_for(self, cycle: Tabloid) -> SolutionTable:
        for table in self.tables:
            if table.cycle == cycle:
                return table
        raise KeyError(f"no cycle {cycle} in the fundamental system")

    def to_json(self) -> dict:
        stats = diagram_stats(self.lam, self.m)
        return {
            "lambda": list(self.lam.parts),
            "m": self.m,
            "degree": stats.solution_degree,
            "cycles": [[list(r) for r in t.tabloid().rows] for t in self.cycles],
            "forms": [
                [list(r) for r in u.rows] for u in self.tables[0].tabloid_order()
            ],
            "components": [
                [table.components[u].to_json() for u in table.tabloid_order()]
                for table in self.tables
            ],
            "matrix": [
                [self.matrix.entry(i, j).to_json() for j in range(self.dimension)]
                for i in range(self.dimension)
            ],
        }


def residue_budget(lam: Partition, m: int) -> int:
    """Elementary residue count of the full fundamental table: cycles x
    forms x level-group size x schedule depth."""
    stats = diagram_stats(lam, m)
    n_forms = 1
    seen = 1
    for size in sorted(lam.parts):
        for k in range(1, size + 1):
            n_forms = n_forms * seen // k
            seen += 1
    # n_forms = multinomial(N; parts)
    return stats.specht_dim * n_forms * level_group_size(lam) * max(stats.config_dim, 1)


def check_resources(lam: Partition, m: int, budget: int = DEFAULT_BUDGET) -> None:
    if lam.size > MAX_VARS:
        raise ResourceGuardError(
            f"N={lam.size} exceeds the hard variable limit {MAX_VARS}"
        )
    cost = residue_budget(lam, m)
    if cost > budget:
        raise ResourceGuardError(
            f"shape {lam} at m={m} needs ~{cost} elementary residues, over "
            f"the budget {budget}; raise the budget to force the run"
        )


def fundamental_solution(
    lam: Partition, m: int, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> FundamentalMatrix:
    """Solution tables for every standard-tableau cycle, with the square
    matrix of their coordinates against the standard polytabloids."""
    check_resources(lam, m, budget)
    stds = standard_tableaux(lam)
    tables = tuple(
        solve_cycle(lam, m, t.tabloid(), workers=workers) for t in stds
    )
    rows = []
    for table in tables:
        coords = coordinates_in_specht_basis(lam, table.components.__getitem__)
        rows.append(coords)
    return FundamentalMatrix(lam, m, stds, tables, PolyMatrix(rows))


# ----------------------------------------------------------------------
# companions: duality, twist, reflection representation


@dataclass(frozen=True)
class DualMatrix:
    """Transposed-inverse companion of a fundamental matrix: rows solve
    the parameter-negated system in coordinates dual to the polytabloid
    basis."""

    lam: Partition
    m: int  # the (negative) parameter this matrix solves
    det: SparsePolynomial
    entries: PolyMatrix

    @property
    def dimension(self) -> int:
        return self.entries.nrows

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "m": self.m,
            "det": self.det.to_json(),
            "entries": [
                [self.entries.entry(i, j).to_json() for j in range(self.dimension)]
                for i in range(self.dimension)
            ],
        }


def dual_matrix(fm: FundamentalMatrix) -> DualMatrix:
    det, adj = det_adjugate(fm.matrix)
    if det.is_zero():
        raise ArithmeticError(
            "fundamental matrix is singular; the solver is inconsistent"
        )
    n = fm.dimension
    entries = PolyMatrix(
        [[PolyFraction(adj.entry(j, i), det) for j in range(n)] for i in range(n)]
    )
    return DualMatrix(fm.lam, -fm.m, det, entries)


def alternating_twist(table: SolutionTable) -> SolutionTable:
    """Divide by the squared discriminant power and tensor with the sign
    character: a solution of the parameter-negated system for the
    twisted action, with rational components."""
    if table.twisted:
        raise ValueError("table is already twisted")
    den = discriminant_power(table.lam.size, 2 * table.m)
    components = {
        u: PolyFraction(c, den) for u, c in table.components.items()
    }
    return SolutionTable(table.lam, -table.m, table.cycle, components, twisted=True)


@dataclass(frozen=True)
class ReflectionSolution:
    """A solution with values in the (N-1,1) module written in the
    standard coordinates of C^N (components along the unit vectors)."""

    n: int
    m: int
    index: int
    components: tuple

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "index": self.index,
            "components": [c.to_json() for c in self.components],
        }


def _hook_tabloid(n: int, k: int) -> Tabloid:
    """The tabloid of the two-row hook shape with k alone in row 2."""
    if n == 2:
        return Tabloid(((3 - k,), (k,)))
    return Tabloid((tuple(i for i in range(1, n + 1) if i != k), (k,)))


def reflection_solutions(n: int, m: int) -> tuple[ReflectionSolution, ...]:
    """The residue family for the reflection representation, one solution
    per fixed point; their sum vanishes and the first n-1 form a basis.

    The component along the k-th unit vector of the a-th solution is the
    cycle integral at the fixed point a of the hook-shape form anchored
    at k, so this is a re-indexing of hook-shape solution tables."""
    if n < 2:
        raise ValueError("the reflection representation needs n >= 2")
    lam = Partition((n - 1, 1)) if n > 2 else Partition((1, 1))
    out = []
    for a in range(1, n + 1):
        comps = tuple(
            solve_component(lam, m, _hook_tabloid(n, a), _hook_tabloid(n, k))
            for k in range(1, n + 1)
        )
        out.append(ReflectionSolution(n, m, a, comps))
    return tuple(out)


def reflection_dual_solutions(n: int, m: int) -> tuple[ReflectionSolution, ...]:
    """The path-integral family solving the parameter-negated system on
    the reflection representation: component k of solution a is the
    antiderivative of (t-z_k)^{m-1} prod_{i != k} (t-z_i)^m evaluated
    between the fixed points a and n, over the squared discriminant
    power."""
    if n < 2:
        raise ValueError("the reflection representation needs n >= 2")
    if n + 1 > MAX_VARS:
        raise ResourceGuardError(f"n={n} needs {n+1} variables, over {MAX_VARS}")
    nv = n + 1  # variable n+1 plays the integration variable
    den = discriminant_power(n, 2 * m)
    one = SparsePolynomial.constant(nv, 1)
    t = SparsePolynomial.variable(nv, nv)
    out = []
    for a in range(1, n):
        comps = []
        for k in range(1, n + 1):
            integrand = one
            for i in range(1, n + 1):
                e = m - 1 if i == k else m
                integrand = integrand * (t - SparsePolynomial.variable(nv, i)) ** e
            anti = integrand.antiderivative(nv)
            upper = anti.substitute_variable(nv, n)
            lower = anti.substitute_variable(nv, a)
            num = (upper - lower).drop_last_variable()
            comps.append(PolyFraction(num, den))
        out.append(ReflectionSolution(n, -m, a, tuple(comps)))
    return tuple(out)
