"""Exact arithmetic: sparse multivariate polynomials over Q, factored
Laurent sums over a point-difference alphabet, unreduced polynomial
fractions, and small polynomial matrices.

No floating point is used anywhere; coefficients are Python ints or
fractions.Fraction.  Polynomial fractions are deliberately never reduced
(no multivariate gcd exists in this package): identities between them
are always decided by cross-multiplication, and denominators are cleared
once, globally, when a factored sum is expanded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

MAX_VARS = 8

Coefficient = Fraction  # ints are accepted anywhere a Coefficient is


def _check_nvars(nvars: int) -> None:
    if not 1 <= nvars <= MAX_VARS:
        raise ValueError(f"variable count must be 1..{MAX_VARS}, got {nvars}")


def demote(c):
    """Integral Fractions become plain ints (plain int arithmetic is far
    cheaper, and most coefficients in this package are integers that
    merely passed through a rational step)."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class SparsePolynomial:
    """Polynomial in z_1..z_n: a map from dense exponent tuples to rationals.

    Zero coefficients are never stored, so the zero polynomial has an
    empty term map.  Instances are immutable by convention; arithmetic
    always builds fresh objects.

    >>> z1 = SparsePolynomial.variable(2, 1)
    >>> z2 = SparsePolynomial.variable(2, 2)
    >>> str((z1 - z2) ** 2)
    'z1^2 - 2*z1*z2 + z2^2'
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        _check_nvars(nvars)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms if terms is not None else {})

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("SparsePolynomial is immutable")

    # ------------------------------------------------------------------
    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePolynomial":
        c = demote(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePolynomial":
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def z_diff(cls, nvars: int, i: int, j: int) -> "SparsePolynomial":
        """The linear form z_i - z_j."""
        return cls.variable(nvars, i) - cls.variable(nvars, j)

    @classmethod
    def from_terms(cls, nvars: int, items) -> "SparsePolynomial":
        terms: dict = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            cur = terms.get(exp, 0) + c
            if cur:
                terms[exp] = demote(cur)
            elif exp in terms:
                del terms[exp]
        return cls(nvars, terms)

    # ------------------------------------------------------------------
    # predicates and scalars
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in map(Fraction, self.terms.values()))

    # ------------------------------------------------------------------
    # arithmetic
    def _require_same_ring(self, other: "SparsePolynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.nvars, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            cur = terms.get(exp, 0) + c
            if cur:
                terms[exp] = cur
            elif exp in terms:
                del terms[exp]
        return SparsePolynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.nvars, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SparsePolynomial.zero(self.nvars)
            return SparsePolynomial(
                self.nvars, {e: demote(c * other) for e, c in self.terms.items()}
            )
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._require_same_ring(other)
        if len(self.terms) * len(other.terms) >= 4096:
            return self._mul_packed(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                cur = terms.get(exp, 0) + c1 * c2
                if cur:
                    terms[exp] = cur
                elif exp in terms:
                    del terms[exp]
        return SparsePolynomial(self.nvars, terms)

    _PACK_BITS = 24
    _PACK_MASK = (1 << _PACK_BITS) - 1

    def _mul_packed(self, other: "SparsePolynomial") -> "SparsePolynomial":
        """Product with exponent vectors packed into single integers so
        the inner loop is integer addition; exact as long as per-variable
        exponent sums stay below 2**24, which the degree guard enforces."""
        bits = self._PACK_BITS
        if self.degree() + other.degree() >= self._PACK_MASK:
            raise OverflowError("degrees too large for packed multiplication")

        def pack(items):
            out = {}
            for exp, c in items:
                key = 0
                for e in exp:
                    key = (key << bits) | e
                out[key] = c
            return out

        left = pack(self.terms.items())
        right = pack(other.terms.items())
        packed: dict = {}
        get = packed.get
        for k1, c1 in left.items():
            for k2, c2 in right.items():
                k = k1 + k2
                cur = get(k, 0) + c1 * c2
                if cur:
                    packed[k] = cur
                else:
                    packed.pop(k, None)
        mask = self._PACK_MASK
        n = self.nvars
        terms = {}
        for key, c in packed.items():
            exp = [0] * n
            for slot in range(n - 1, -1, -1):
                exp[slot] = key & mask
                key >>= bits
            terms[tuple(exp)] = c
        return SparsePolynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("polynomial powers must have non-negative exponent")
        result = SparsePolynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # calculus and structure
    def partial_derivative(self, i: int) -> "SparsePolynomial":
        """d/dz_i."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"variable index {i} out of range")
        terms: dict = {}
        for exp, c in self.terms.items():
            e = exp[i - 1]
            if e:
                new = exp[: i - 1] + (e - 1,) + exp[i:]
                cur = terms.get(new, 0) + c * e
                if cur:
                    terms[new] = cur
                elif new in terms:
                    del terms[new]
        return SparsePolynomial(self.nvars, terms)

    def antiderivative(self, i: int) -> "SparsePolynomial":
        """The primitive in z_i with zero constant term."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"variable index {i} out of range")
        terms = {}
        for exp, c in self.terms.items():
            e = exp[i - 1]
            new = exp[: i - 1] + (e + 1,) + exp[i:]
            terms[new] = demote(Fraction(c, e + 1))
        return SparsePolynomial(self.nvars, terms)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Maximal monomial under lexicographic order with z_n most significant."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self.terms, key=lambda e: tuple(reversed(e)))
        return exp, self.terms[exp]

    def evaluate(self, values):
        """Exact value at a point (one number per variable)."""
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        total = 0
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(values, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def permute_variables(self, image: tuple[int, ...]) -> "SparsePolynomial":
        """Substitute z_i -> z_image[i-1]; image must be a permutation of 1..n."""
        if sorted(image) != list(range(1, self.nvars + 1)):
            raise ValueError(f"not a permutation of 1..{self.nvars}: {image}")
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[image[i] - 1] = e
            terms[tuple(new)] = c
        return SparsePolynomial(self.nvars, terms)

    def substitute_variable(self, i: int, j: int) -> "SparsePolynomial":
        """Substitute z_i -> z_j (i and j may collide with other exponents)."""
        if i == j:
            return self
        terms: dict = {}
        for exp, c in self.terms.items():
            new = list(exp)
            new[j - 1] += new[i - 1]
            new[i - 1] = 0
            key = tuple(new)
            cur = terms.get(key, 0) + c
            if cur:
                terms[key] = cur
            elif key in terms:
                del terms[key]
        return SparsePolynomial(self.nvars, terms)

    def drop_last_variable(self) -> "SparsePolynomial":
        """Forget a trailing variable that no term uses."""
        if any(exp[-1] for exp in self.terms):
            raise ValueError("last variable still occurs")
        return SparsePolynomial(self.nvars - 1, {e[:-1]: c for e, c in self.terms.items()})

    # ------------------------------------------------------------------
    # presentation
    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending z_n-major lexicographic order (deterministic)."""
        return sorted(
            self.terms.items(), key=lambda kv: tuple(reversed(kv[0])), reverse=True
        )

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {
                    "exp": list(exp),
                    "num": str(Fraction(c).numerator),
                    "den": str(Fraction(c).denominator),
                }
                for exp, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SparsePolynomial":
        nvars = int(data["vars"])
        items = [
            (tuple(t["exp"]), Fraction(int(t["num"]), int(t["den"])))
            for t in data["terms"]
        ]
        return cls.from_terms(nvars, items)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exp, c in self.sorted_terms():
            c = Fraction(c)
            mono = "*".join(
                f"z{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            mag = abs(c)
            head = "- " if c < 0 else ("+ " if chunks else "")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            chunks.append(head + body)
        return " ".join(chunks).replace("+ -", "- ")

    __repr__ = __str__


class NonDivisibleError(ArithmeticError):
    """Exact polynomial division failed; carries the non-zero remainder."""

    def __init__(self, remainder: SparsePolynomial):
        super().__init__("polynomial division left a non-zero remainder")
        self.remainder = remainder


def _as_variable_difference(q: SparsePolynomial) -> tuple[int, int] | None:
    """(i, j) when q == z_i - z_j, else None."""
    if len(q.terms) != 2:
        return None
    pos = neg = None
    for exp, c in q.terms.items():
        if sum(exp) != 1 or max(exp) != 1:
            return None
        i = exp.index(1) + 1
        if c == 1:
            pos = i
        elif c == -1:
            neg = i
        else:
            return None
    if pos is None or neg is None:
        return None
    return pos, neg


def _bump(exp: tuple[int, ...], slot: int) -> tuple[int, ...]:
    return exp[:slot] + (exp[slot] + 1,) + exp[slot + 1 :]


def _divide_by_z_diff(p: SparsePolynomial, i: int, j: int) -> SparsePolynomial:
    """Exact division by (z_i - z_j) via synthetic division in z_i."""
    if p.is_zero():
        return p
    buckets: dict[int, dict] = {}
    for exp, c in p.terms.items():
        t = exp[i - 1]
        rest = exp[: i - 1] + (0,) + exp[i:]
        level = buckets.setdefault(t, {})
        level[rest] = level.get(rest, 0) + c
    top = max(buckets)
    quo: dict = {}
    carry: dict = {}
    for t in range(top - 1, -1, -1):
        nxt = dict(buckets.get(t + 1, {}))
        for rest, c in carry.items():
            bumped = _bump(rest, j - 1)
            cur = nxt.get(bumped, 0) + c
            if cur:
                nxt[bumped] = cur
            elif bumped in nxt:
                del nxt[bumped]
        for rest, c in nxt.items():
            quo[rest[: i - 1] + (t,) + rest[i:]] = c
        carry = nxt
    rem = dict(buckets.get(0, {}))
    for rest, c in carry.items():
        bumped = _bump(rest, j - 1)
        cur = rem.get(bumped, 0) + c
        if cur:
            rem[bumped] = cur
        elif bumped in rem:
            del rem[bumped]
    if rem:
        raise NonDivisibleError(SparsePolynomial(p.nvars, rem))
    return SparsePolynomial(p.nvars, quo)


def exact_divide(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    """Quotient p / q when the division is exact.

    Raises NonDivisibleError carrying the remainder otherwise; the
    remainder satisfies p == q * quotient + remainder with no remainder
    monomial divisible by the leading monomial of q.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    p._require_same_ring(q)
    if q.is_constant():
        inv = Fraction(1, 1) / Fraction(q.constant_value())
        return p * inv
    ij = _as_variable_difference(q)
    if ij is not None:
        return _divide_by_z_diff(p, *ij)
    qexp, qc = q.leading_term()
    cur = dict(p.terms)
    quo: dict = {}
    rem: dict = {}
    while cur:
        exp = max(cur, key=lambda e: tuple(reversed(e)))
        c = cur.pop(exp)
        diff = tuple(a - b for a, b in zip(exp, qexp))
        if any(d < 0 for d in diff):
            rem[exp] = c
            continue
        f = demote(Fraction(c) / Fraction(qc))
        quo[diff] = demote(quo.get(diff, 0) + f)
        for e2, c2 in q.terms.items():
            if e2 == qexp:
                continue
            key = tuple(a + b for a, b in zip(diff, e2))
            nxt = cur.get(key, 0) - f * c2
            if nxt:
                cur[key] = nxt
            elif key in cur:
                del cur[key]
    if rem:
        raise NonDivisibleError(SparsePolynomial(p.nvars, rem))
    return SparsePolynomial(p.nvars, {e: c for e, c in quo.items() if c})


@cache
def _zdiff_power(nvars: int, i: int, j: int, e: int) -> SparsePolynomial:
    return SparsePolynomial.z_diff(nvars, i, j) ** e


@cache
def discriminant_power(nvars: int, e: int) -> SparsePolynomial:
    """The expanded product of (z_i - z_j)^e over all pairs i < j."""
    out = SparsePolynomial.constant(nvars, 1)
    for i in range(1, nvars + 1):
        for j in range(i + 1, nvars + 1):
            out = out * _zdiff_power(nvars, i, j, e)
    return out


# ----------------------------------------------------------------------
# factored Laurent sums


def z_atom(i: int) -> tuple:
    """Fixed point z_i."""
    return ("z", i)


def t_atom(row: int, col: int, level: int) -> tuple:
    """Level-`level` variable attached to box (row, col)."""
    return ("t", row, col, level)


def is_t_atom(a: tuple) -> bool:
    return a[0] == "t"


def atom_sort_key(a: tuple) -> tuple:
    """Total order on atoms: fixed points first (by index), then variables
    by (level, row, column)."""
    if a[0] == "z":
        return (0, a[1], 0, 0)
    return (1, a[3], a[1], a[2])


def _freeze(fmap: dict) -> tuple:
    return tuple(sorted(fmap.items()))


class FactoredSum:
    """Sum of terms  coefficient * prod (a - b)^e  over distinct atoms a, b.

    Factor orientation is canonical (a before b in the atom order) with
    the sign folded into the coefficient; terms with identical factor
    maps are merged and zero terms dropped, so equality of the maps is
    equality of the sums term by term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "FactoredSum":
        return cls()

    @classmethod
    def term(cls, coeff, factors=()) -> "FactoredSum":
        """One term from (a, b, exponent) triples; orientation is normalized."""
        if not coeff:
            return cls()
        fmap: dict = {}
        sign = 1
        for a, b, e in factors:
            if a == b:
                raise ValueError(f"degenerate difference at atom {a}")
            e = int(e)
            if not e:
                continue
            if atom_sort_key(a) > atom_sort_key(b):
                a, b = b, a
                if e % 2:
                    sign = -sign
            key = (a, b)
            cur = fmap.get(key, 0) + e
            if cur:
                fmap[key] = cur
            elif key in fmap:
                del fmap[key]
        return cls({_freeze(fmap): coeff * sign})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredSum):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "FactoredSum") -> "FactoredSum":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            cur = terms.get(key, 0) + c
            if cur:
                terms[key] = cur
            elif key in terms:
                del terms[key]
        return FactoredSum(terms)

    def __sub__(self, other: "FactoredSum") -> "FactoredSum":
        return self + other.scale(-1)

    def scale(self, c) -> "FactoredSum":
        if not c:
            return FactoredSum()
        return FactoredSum({key: v * c for key, v in self.terms.items()})

    def __mul__(self, other: "FactoredSum") -> "FactoredSum":
        terms: dict = {}
        for k1, c1 in self.terms.items():
            base = dict(k1)
            for k2, c2 in other.terms.items():
                fmap = dict(base)
                for pd, e in k2:
                    cur = fmap.get(pd, 0) + e
                    if cur:
                        fmap[pd] = cur
                    elif pd in fmap:
                        del fmap[pd]
                key = _freeze(fmap)
                cur = terms.get(key, 0) + c1 * c2
                if cur:
                    terms[key] = cur
                elif key in terms:
                    del terms[key]
        return FactoredSum(terms)

    def relabel(self, mapping: dict) -> "FactoredSum":
        """Apply an atom relabeling; orientation signs are re-normalized."""
        out = FactoredSum()
        for key, c in self.terms.items():
            out = out + FactoredSum.term(
                c,
                [
                    (mapping.get(a, a), mapping.get(b, b), e)
                    for (a, b), e in key
                ],
            )
        return out

    def live_variables(self) -> set:
        vs = set()
        for key in self.terms:
            for (a, b), _ in key:
                if is_t_atom(a):
                    vs.add(a)
                if is_t_atom(b):
                    vs.add(b)
        return vs

    def iter_terms(self):
        """(coefficient, factor key) pairs; the key is a sorted tuple of
        ((atom, atom), exponent) entries."""
        return ((coeff, key) for key, coeff in self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in sorted(self.terms.items()):
            fac = "*".join(
                f"({_atom_str(a)}-{_atom_str(b)})^{e}" for (a, b), e in key
            )
            parts.append(f"{c}" + (f"*{fac}" if fac else ""))
        return " + ".join(parts)

    __repr__ = __str__


def _atom_str(a: tuple) -> str:
    if a[0] == "z":
        return f"z{a[1]}"
    return f"t[{a[1]},{a[2]}]_{a[3]}"


class NormalizeError(ArithmeticError):
    """A factored sum expected to be polynomial was not; carries the remainder."""

    def __init__(self, remainder: SparsePolynomial):
        super().__init__("factored sum does not expand to a polynomial")
        self.remainder = remainder


def normalize_factored(fs: FactoredSum, nvars: int) -> SparsePolynomial:
    """Expand a fixed-point-only factored sum into a polynomial.

    All terms are brought over the single common denominator given by
    the most negative power of each difference, the numerator is
    expanded, and the denominator is divided out exactly; failure to
    divide raises NormalizeError with the offending remainder.
    """
    need: dict = {}
    for _, key in fs.iter_terms():
        for (a, b), e in key:
            if is_t_atom(a) or is_t_atom(b):
                raise ValueError("normalize_factored needs fixed-point atoms only")
            if e < 0:
                need[(a, b)] = max(need.get((a, b), 0), -e)
    num = SparsePolynomial.zero(nvars)
    for coeff, key in fs.iter_terms():
        fmap = dict(key)
        for pd, d in need.items():
            fmap[pd] = fmap.get(pd, 0) + d
        poly = SparsePolynomial.constant(nvars, coeff)
        for (a, b), e in fmap.items():
            if e:
                poly = poly * _zdiff_power(nvars, a[1], b[1], e)
        num = num + poly
    quo = num
    for (a, b), d in need.items():
        for _ in range(d):
            try:
                quo = _divide_by_z_diff(quo, a[1], b[1])
            except NonDivisibleError as exc:
                raise NormalizeError(exc.remainder) from None
    return quo


# ----------------------------------------------------------------------
# fractions and matrices


@dataclass(frozen=True, eq=False)
class PolyFraction:
    """Unreduced quotient of two polynomials; equality by cross-multiplication."""

    num: SparsePolynomial
    den: SparsePolynomial

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        self.num._require_same_ring(self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            other = PolyFraction(other, SparsePolynomial.constant(self.num.nvars, 1))
        if not isinstance(other, PolyFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):  # pragma: no cover - fractions are not dict keys here
        return hash(self.num.nvars)

    def __add__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "PolyFraction":
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other: "PolyFraction") -> "PolyFraction":
        return self + (-other)

    def __mul__(self, other) -> "PolyFraction":
        if isinstance(other, (int, Fraction)):
            return PolyFraction(self.num * other, self.den)
        if isinstance(other, SparsePolynomial):
            return PolyFraction(self.num * other, self.den)
        return PolyFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


class PolyMatrix:
    """Rectangular matrix of polynomial (or fraction) entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one entry")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.entries = rows

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.entries)))

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix shapes do not compose")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = None
                for k in range(self.ncols):
                    p = self.entries[i][k] * other.entries[k][j]
                    acc = p if acc is None else acc + p
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries


def _minor(rows, i, j):
    return [
        [row[c] for c in range(len(row)) if c != j]
        for r, row in enumerate(rows)
        if r != i
    ]


def _cofactor_det(rows) -> SparsePolynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        sub = _cofactor_det(_minor(rows, 0, j))
        piece = rows[0][j] * sub
        if j % 2:
            piece = -piece
        acc = piece if acc is None else acc + piece
    if acc is None:
        return SparsePolynomial.zero(rows[0][0].nvars)
    return acc


def _bareiss_det(rows) -> SparsePolynomial:
    """Fraction-free determinant; every division along the way is exact."""
    n = len(rows)
    nvars = rows[0][0].nvars
    a = [list(r) for r in rows]
    sign = 1
    prev = SparsePolynomial.constant(nvars, 1)
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if pivot_row is None:
            return SparsePolynomial.zero(nvars)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_divide(num, prev)
            a[i][k] = SparsePolynomial.zero(nvars)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def determinant(matrix) -> SparsePolynomial:
    """Determinant alone, by division-free cofactor expansion for small
    matrices (sparse polynomial entries make the exact divisions of
    fraction-free elimination the dominant cost, so expansion wins up to
    the sizes that occur here) and fraction-free elimination beyond."""
    rows = matrix.entries if isinstance(matrix, PolyMatrix) else [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    return _cofactor_det(rows) if n <= 5 else _bareiss_det(rows)


def det_adjugate(matrix) -> tuple[SparsePolynomial, PolyMatrix]:
    """Determinant and adjugate of a square polynomial matrix.
    Satisfies M * adj == det * I exactly (asserted)."""
    rows = matrix.entries if isinstance(matrix, PolyMatrix) else [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    nvars = rows[0][0].nvars

    def _det(rs):
        return _cofactor_det(rs) if len(rs) <= 5 else _bareiss_det(rs)

    det = _det(rows)
    if n == 1:
        adj = PolyMatrix([[SparsePolynomial.constant(nvars, 1)]])
    else:
        entries = []
        for i in range(n):
            row = []
            for j in range(n):
                minor_det = _det(_minor(rows, j, i))
                if (i + j) % 2:
                    minor_det = -minor_det
                row.append(minor_det)
            entries.append(row)
        adj = PolyMatrix(entries)
    m = PolyMatrix(rows)
    prod = m.matmul(adj)
    for i in range(n):
        for j in range(n):
            expected = det if i == j else SparsePolynomial.zero(nvars)
            if prod.entry(i, j) != expected:
                raise ArithmeticError("adjugate identity failed; matrix arithmetic bug")
    return det, adj
