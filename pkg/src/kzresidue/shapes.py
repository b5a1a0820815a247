"""Young diagrams, tableaux and tabloids for the symmetric group S_N.

Partitions index the irreducible S_N-modules.  A numbering labels the
boxes of a diagram bijectively with 1..N; a tabloid is the class of a
numbering up to reordering within rows and indexes the weight basis in
which solution components are written.  Everything here is immutable
and every function is pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations, product
from math import factorial


def perm_sign(indices: tuple[int, ...]) -> int:
    """Sign of the permutation sending position k to position indices[k]."""
    sign = 1
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            if indices[a] > indices[b]:
                sign = -sign
    return sign


@dataclass(frozen=True, order=True)
class Partition:
    """A Young diagram: non-increasing positive row lengths."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one row")
        if any(p <= 0 for p in parts):
            raise ValueError(f"row lengths must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"row lengths must be non-increasing: {parts}")

    @property
    def size(self) -> int:
        """Total number of boxes."""
        return sum(self.parts)

    @property
    def nrows(self) -> int:
        return len(self.parts)

    def boxes(self) -> tuple[tuple[int, int], ...]:
        """(row, column) pairs, 1-based, in row-major reading order."""
        return tuple(
            (r, c)
            for r in range(1, self.nrows + 1)
            for c in range(1, self.parts[r - 1] + 1)
        )

    def transpose(self) -> "Partition":
        """The diagram reflected along its main diagonal."""
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= c)
                for c in range(1, self.parts[0] + 1)
            )
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1,..,1) last."""
    if n < 1:
        raise ValueError("n must be a positive integer")

    def rec(remaining: int, cap: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        out = []
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                out.append((first,) + rest)
        return out

    return [Partition(p) for p in rec(n, n)]


def level_profile(lam: Partition) -> tuple[tuple[int, ...], int]:
    """Level sizes (m_0, .., m_{n-1}) and the number of extra variables.

    m_s counts the boxes in rows strictly below row s, so m_0 = N.  The
    configuration space for the diagram carries m_s variables at level s
    for s >= 1, giving m_1 + .. + m_{n-1} variables in total.
    """
    ms = tuple(
        sum(lam.parts[r] for r in range(s, lam.nrows)) for s in range(lam.nrows)
    )
    return ms, sum(ms[1:])


def hook_length_dim(lam: Partition) -> int:
    """Number of standard tableaux, by the hook-length product."""
    prod = 1
    for r, c in lam.boxes():
        arm = lam.parts[r - 1] - c
        leg = sum(1 for rr in range(r + 1, lam.nrows + 1) if lam.parts[rr - 1] >= c)
        prod *= arm + leg + 1
    return factorial(lam.size) // prod


@dataclass(frozen=True, order=True)
class Numbering:
    """A bijective labeling of diagram boxes by 1..N, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(len(r) == 0 for r in rows):
            raise ValueError("empty rows are not allowed in a numbering")
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be non-increasing: {rows}")
        labels = sorted(x for row in rows for x in row)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"labels must be a bijection onto 1..N: {rows}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def label(self, r: int, c: int) -> int:
        """Label in box (r, c), 1-based."""
        return self.rows[r - 1][c - 1]

    def box_of(self, k: int) -> tuple[int, int]:
        """(row, column) of label k."""
        for r, row in enumerate(self.rows, start=1):
            if k in row:
                return (r, row.index(k) + 1)
        raise ValueError(f"label {k} is not present")

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def is_standard(self) -> bool:
        """True when labels increase along every row and down every column."""
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for r in range(len(self.rows) - 1):
            for c in range(len(self.rows[r + 1])):
                if self.rows[r][c] >= self.rows[r + 1][c]:
                    return False
        return True

    def tabloid(self) -> "Tabloid":
        return Tabloid(self.rows)


def standard_tableaux(lam: Partition) -> list[Numbering]:
    """All standard tableaux of a shape, sorted by reading word."""
    n = lam.size
    results: list[Numbering] = []
    fill: list[list[int]] = [[] for _ in lam.parts]

    def place(k: int) -> None:
        if k > n:
            results.append(Numbering(tuple(tuple(row) for row in fill)))
            return
        for r in range(lam.nrows):
            if len(fill[r]) < lam.parts[r] and (r == 0 or len(fill[r]) < len(fill[r - 1])):
                fill[r].append(k)
                place(k + 1)
                fill[r].pop()

    place(1)
    results.sort(key=lambda t: t.reading_word())
    return results


def identity_tableau(lam: Partition) -> Numbering:
    """The numbering that fills boxes 1..N in reading order."""
    rows = []
    k = 1
    for p in lam.parts:
        rows.append(tuple(range(k, k + p)))
        k += p
    return Numbering(tuple(rows))


@dataclass(frozen=True, order=True)
class Tabloid:
    """A row-equivalence class of numberings: each row kept as a sorted set.

    The shape is a composition; empty rows are legal so the raising maps
    can leave the partition lattice.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(sorted(int(x) for x in row)) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        labels = sorted(x for row in rows for x in row)
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"rows must partition 1..N: {rows}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def representative(self) -> Numbering:
        """Canonical representative numbering (rows ascending); partition shapes only."""
        return Numbering(self.rows)

    def __str__(self) -> str:
        return "|".join("{" + ",".join(map(str, row)) + "}" for row in self.rows)


def tabloids(shape: tuple[int, ...]) -> list[Tabloid]:
    """All tabloids with the given row sizes, in lexicographic row-set order."""
    if any(int(s) != s or s < 0 for s in shape):
        raise ValueError(f"row sizes must be non-negative integers: {shape}")
    n = sum(shape)
    out: list[Tabloid] = []

    def rec(pool: tuple[int, ...], idx: int, acc: list[tuple[int, ...]]) -> None:
        if idx == len(shape):
            out.append(Tabloid(tuple(acc)))
            return
        for row in combinations(pool, shape[idx]):
            rest = tuple(x for x in pool if x not in row)
            acc.append(row)
            rec(rest, idx + 1, acc)
            acc.pop()

    rec(tuple(range(1, n + 1)), 0, [])
    return out


def column_expansion(t: Numbering) -> list[tuple[int, Tabloid]]:
    """Signed tabloids of sigma * T over the column group of T.

    The identity term (+1, tabloid of T) comes first; the remaining order
    follows the per-column permutation product.
    """
    ncols = t.shape.parts[0]
    columns = [
        tuple(row[c] for row in t.rows if len(row) > c) for c in range(ncols)
    ]
    out: list[tuple[int, Tabloid]] = []
    for perms in product(*(permutations(range(len(col))) for col in columns)):
        sign = 1
        mapping: dict[int, int] = {}
        for col, perm in zip(columns, perms):
            sign *= perm_sign(perm)
            for pos, target in enumerate(perm):
                mapping[col[pos]] = col[target]
        rows = tuple(tuple(mapping.get(x, x) for x in row) for row in t.rows)
        out.append((sign, Tabloid(rows)))
    return out


def act_transposition(u: Tabloid, i: int, j: int) -> Tabloid:
    """Relabel a tabloid by the transposition (i j)."""
    if i == j:
        raise ValueError("a transposition needs two distinct labels")

    def swap(x: int) -> int:
        return j if x == i else i if x == j else x

    return Tabloid(tuple(tuple(swap(x) for x in row) for row in u.rows))


def raise_row(u: Tabloid, s: int) -> list[Tabloid]:
    """Move one label from row s+1 up to row s; one output per choice of label.

    Outputs are ordered by the moved label, ascending.  The output shape
    is a composition that in general is not a partition.
    """
    if not 1 <= s <= len(u.rows) - 1:
        raise ValueError(f"level {s} out of range for {len(u.rows)} rows")
    out = []
    for k in u.rows[s]:
        rows = list(u.rows)
        rows[s] = tuple(x for x in rows[s] if x != k)
        rows[s - 1] = rows[s - 1] + (k,)
        out.append(Tabloid(tuple(rows)))
    return out


@dataclass(frozen=True)
class DiagramStats:
    """Closed-form scalars attached to a diagram and a positive integer m."""

    f2: int
    specht_dim: int
    d_plus: int
    transpose: Partition
    m_profile: tuple[int, ...]
    config_dim: int
    m: int
    solution_degree: int


@cache
def _stats_core(parts: tuple[int, ...]) -> tuple[int, int, int]:
    lam = Partition(parts)
    n = lam.size
    f2 = sum(c - r for r, c in lam.boxes())
    dim = hook_length_dim(lam)
    pairs = n * (n - 1) // 2
    if pairs:
        num = f2 * dim
        if num % pairs:
            raise ArithmeticError(f"transposition character of {lam} is not integral")
        chi = num // pairs
    else:
        chi = dim
    if (dim + chi) % 2:
        raise ArithmeticError(f"symmetric fixed-space dimension of {lam} is not integral")
    return f2, dim, (dim + chi) // 2


def diagram_stats(lam: Partition, m: int = 1) -> DiagramStats:
    """Content sum f2, module dimension, transposition fixed-space dimension,
    transposed diagram, level profile, and the solver degree m*(f2 + N(N-1)/2)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    f2, dim, d_plus = _stats_core(lam.parts)
    ms, config_dim = level_profile(lam)
    pairs = lam.size * (lam.size - 1) // 2
    return DiagramStats(
        f2=f2,
        specht_dim=dim,
        d_plus=d_plus,
        transpose=lam.transpose(),
        m_profile=ms,
        config_dim=config_dim,
        m=m,
        solution_degree=m * (f2 + pairs),
    )
