"""Iterated residues of factored Laurent forms.

A cycle is encoded purely as an ordered schedule of single-variable
residue extractions; no radius parameter is ever represented.  The
geometry behind the schedule: each integration variable of level s runs
anti-clockwise on a circle of radius proportional to s around its
assigned fixed point.  Extracting residues innermost-first (levels
ascending) is then exact, because at the moment a level-s variable is
integrated

* every factor tying it to a level-(s+1) variable of the same chain has
  its other zero outside the circle (larger radius, same center),
* every factor tying it to a variable of level >= s around a different
  center stays bounded away from zero (centers are distinct fixed
  points, radii are small),
* every lower-level variable has already been eliminated.

Orientation convention: variables are ordered level-ascending, then by
box reading order; the volume element is taken in that order; each
circle is anti-clockwise, so a single extraction is literally "the
coefficient of tau^{-1} after substituting var = center + tau", with no
extra sign anywhere.  This fixes the global sign of every computed
solution.
"""
from __future__ import annotations

from math import comb

from .exactalg import FactoredSum, atom_sort_key, is_t_atom, t_atom, z_atom
from .shapes import Numbering


def binom_int(e: int, k: int) -> int:
    """Generalized binomial coefficient C(e, k) for integer e of any sign.

    Always an integer: for e >= 0 it is the ordinary binomial (zero when
    k > e), for e < 0 it equals (-1)^k C(-e+k-1, k).
    """
    if k < 0:
        return 0
    if e >= 0:
        return comb(e, k) if k <= e else 0
    c = comb(-e + k - 1, k)
    return -c if k % 2 else c


class ScheduleError(ValueError):
    """A residue schedule references variables in an impossible order."""


def residue_at(fs: FactoredSum, var: tuple, center: tuple) -> FactoredSum:
    """Residue of `fs` in the variable `var` on a small anti-clockwise
    circle around `center`.

    Substitutes var = center + tau term by term.  A factor joining var
    directly to the center contributes a pure power of tau; any other
    factor containing var becomes (D +/- tau)^e with D a non-zero point
    difference and is expanded by the generalized binomial series up to
    the needed order.  The result is the coefficient of tau^{-1}; terms
    with no pole at the center contribute nothing.
    """
    if var == center:
        raise ValueError("residue center must differ from the variable")
    if not is_t_atom(var):
        raise ValueError(f"cannot integrate over the fixed point {var}")
    out = FactoredSum()
    for coeff, key in fs.iter_terms():
        spectators = []
        expanders = []  # (a, b, e, tau_sign): factor (a-b)^e with +/- tau
        tau_exp = 0
        sign = 1
        for (a, b), e in key:
            if a != var and b != var:
                spectators.append((a, b, e))
            elif (a, b) == (center, var) or (a, b) == (var, center):
                tau_exp += e
                if b == var and e % 2:
                    sign = -sign  # (center - var)^e = (-tau)^e
            elif a == var:
                expanders.append((center, b, e, 1))  # (center - b + tau)^e
            else:
                expanders.append((a, center, e, -1))  # (a - center - tau)^e
        if tau_exp >= 0:
            continue  # analytic at the center
        order = -tau_exp - 1  # want the coefficient of tau^order
        state = {0: FactoredSum.term(coeff * sign, spectators)}
        for a, b, e, tau_sign in expanders:
            nxt: dict[int, FactoredSum] = {}
            for d, acc in state.items():
                for k in range(order - d + 1):
                    c = binom_int(e, k)
                    if not c:
                        continue
                    if tau_sign < 0 and k % 2:
                        c = -c
                    piece = acc * FactoredSum.term(c, [(a, b, e - k)])
                    if not piece:
                        continue
                    cur = nxt.get(d + k)
                    nxt[d + k] = piece if cur is None else cur + piece
            state = nxt
        res = state.get(order)
        if res:
            out = out + res
    return out


def residue_plan(cycle: Numbering) -> tuple[tuple[tuple, tuple], ...]:
    """The residue schedule realizing the torus cycle of a numbering.

    One step per integration variable t^b_s: levels ascending, boxes in
    row-major reading order within a level, each expanded about the
    fixed point carrying the label of its box.  Same-level steps commute
    (disjoint circles), so the reading order is a determinism choice,
    not a mathematical one.
    """
    lam = cycle.shape
    steps = []
    for s in range(1, lam.nrows):
        for r, c in lam.boxes():
            if r >= s + 1:
                steps.append((t_atom(r, c, s), z_atom(cycle.label(r, c))))
    return tuple(steps)


def iterated_residue(fs: FactoredSum, plan) -> FactoredSum:
    """Fold residue_at over the plan, innermost step first.

    The plan must cover every live variable of the form.  A schedule
    whose step centers on a variable still awaiting integration is
    rejected: the series expansion around such a center would not be
    valid on the nested circles.
    """
    plan = tuple(plan)
    planned = {var for var, _ in plan}
    if len(planned) != len(plan):
        raise ScheduleError("schedule integrates some variable twice")
    live = fs.live_variables()
    if not live <= planned:
        extra = sorted(live - planned, key=atom_sort_key)
        raise ScheduleError(f"form has variables outside the schedule: {extra}")
    for idx, (var, center) in enumerate(plan):
        if any(center == later_var for later_var, _ in plan[idx + 1 :]):
            raise ScheduleError(
                f"step for {var} expands about {center}, which is itself "
                "integrated later"
            )
        fs = residue_at(fs, var, center)
        if not fs:
            break
    return fs
