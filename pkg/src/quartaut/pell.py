"""Complete solver for generalized Pell equations x^2 - r*y^2 = n with r > 0.

Two routes are deliberately kept apart:

* ``has_solution``/``solve`` is a genuine decision procedure. For nonsquare r
  it runs the PQa continued-fraction expansion of sqrt(r) and the classical
  class-by-class search (one PQa run per square root z of r modulo |m|, for
  each factor m = n/f^2). Primitive solutions satisfy gcd(y, m) = 1, so every
  class is hit by some z; imprimitive solutions are f times a primitive
  solution of the m-equation. For square r = t^2 the equation factors as
  (x - t*y)(x + t*y) = n and divisor enumeration is exhaustive.
* ``solutions_up_to`` is a brute-force scan, exhaustive within a |y| bound.
  It exists so tests can compare the decision procedure against an
  independent enumeration; it must stay naive.

All arithmetic is exact; no floats anywhere.
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt

Vec = tuple[int, int]

_PQA_CAP = 1_000_000


def is_square(r: int) -> bool:
    """True iff r is a perfect square (r >= 0 required)."""
    if r < 0:
        raise ValueError("is_square expects a nonnegative integer")
    t = isqrt(r)
    return t * t == r


def _floor_quot(P: int, Q: int, sd: int) -> int:
    # floor((P + sqrt(D))/Q) for irrational sqrt(D), sd = isqrt(D), exactly.
    if Q > 0:
        return (P + sd) // Q
    return (-P - sd - 1) // (-Q)


def _pqa(P0: int, Q0: int, D: int):
    """Yield (i, Q_i, G_{i-1}, B_{i-1}) for i = 1, 2, ... until the state cycles.

    Requires Q0 != 0, D > 0 nonsquare, P0^2 ≡ D (mod Q0). The classical
    identity G_{i-1}^2 - D*B_{i-1}^2 = (-1)^i * Q_i * Q0 holds for every
    yielded tuple.
    """
    sd = isqrt(D)
    P, Q = P0, Q0
    gm2, gm1 = -P0, Q0
    bm2, bm1 = 1, 0
    seen = {(P, Q)}
    for i in range(1, _PQA_CAP):
        a = _floor_quot(P, Q, sd)
        g = a * gm1 + gm2
        b = a * bm1 + bm2
        P = a * Q - P
        Q = (D - P * P) // Q
        yield i, Q, g, b
        if (P, Q) in seen:
            return
        seen.add((P, Q))
        gm2, gm1 = gm1, g
        bm2, bm1 = bm1, b
    raise RuntimeError("PQa expansion did not cycle within the iteration cap")


@lru_cache(maxsize=None)
def _unit_data(D: int) -> tuple[int, int, Vec | None]:
    """(t, u, neg) with t^2 - D*u^2 = 1 fundamental and neg a fundamental
    solution of x^2 - D*y^2 = -1, or None when the period is even."""
    for i, Q, g, b in _pqa(0, 1, D):
        if Q == 1:
            if i % 2 == 0:
                return g, b, None
            # odd period: (g, b) solves x^2 - D y^2 = -1
            return g * g + D * b * b, 2 * g * b, (g, b)
    raise RuntimeError("no unit found; input was not a positive nonsquare")


def fundamental_solution(D: int) -> Vec:
    """Fundamental solution (t, u), t, u > 0 minimal, of x^2 - D*y^2 = 1."""
    if D <= 0 or is_square(D):
        raise ValueError("fundamental solution requires positive nonsquare D")
    t, u, _ = _unit_data(D)
    return t, u


def _lmm_reps(D: int, N: int) -> list[Vec]:
    """Solution representatives of x^2 - D*y^2 = N, at least one per class
    under the automorph group (and negation). D > 0 nonsquare, N != 0."""
    _, _, neg = _unit_data(D)
    reps: list[Vec] = []
    f = 1
    while f * f <= abs(N):
        if N % (f * f) == 0:
            m = N // (f * f)
            am = abs(m)
            for z in range(-((am - 1) // 2), am // 2 + 1):
                if (z * z - D) % am:
                    continue
                for i, Q, g, b in _pqa(z, am, D):
                    if Q not in (1, -1):
                        continue
                    v = Q * am if i % 2 == 0 else -Q * am
                    if v == m:
                        reps.append((f * g, f * b))
                    elif v == -m and neg is not None:
                        a1, b1 = neg
                        reps.append((f * (g * a1 + b * b1 * D), f * (g * b1 + b * a1)))
        f += 1
    return reps


def _square_solutions(t: int, N: int) -> list[Vec]:
    """All solutions of x^2 - t^2*y^2 = N for N != 0, via (x-ty)(x+ty) = N."""
    out = []
    e = 1
    while e * e <= abs(N):
        if N % e == 0:
            for d1 in (e, -e):
                d2 = N // d1
                # x = (d1+d2)/2, t*y = (d2-d1)/2
                if (d1 + d2) % 2:
                    continue
                x = (d1 + d2) // 2
                ty = (d2 - d1) // 2
                if ty % t:
                    continue
                y = ty // t
                out.extend({(x, y), (-x, -y)})
        e += 1
    return sorted(set(out))


def solve(r: int, n: int, nonzero_y: bool = False) -> Vec | None:
    """A witness (x, y) with x^2 - r*y^2 = n, or None when none exists.

    The trivial (0, 0) never counts as a witness for n = 0. With nonzero_y
    the witness must have y != 0 (a nonzero class off the H-axis).
    """
    if r <= 0:
        raise ValueError("r must be a positive integer")
    if n == 0:
        # x = t*y forces y = 0 unless r = t^2 is a square.
        if is_square(r):
            return (isqrt(r), 1)
        return None
    if is_square(r):
        sols = _square_solutions(isqrt(r), n)
        if nonzero_y:
            sols = [s for s in sols if s[1] != 0]
        if not sols:
            return None
        return min(((abs(x), abs(y)) for x, y in sols), key=lambda s: (s[1], s[0]))
    if not nonzero_y and n > 0 and is_square(n):
        return (isqrt(n), 0)
    reps = _lmm_reps(r, n)
    if not reps:
        return None
    # every class representative has y >= 1, so nonzero_y is already satisfied
    return min(((abs(x), abs(y)) for x, y in reps), key=lambda s: (s[1], s[0]))


def has_solution(r: int, n: int, nonzero_y: bool = False) -> bool:
    """Decision procedure for x^2 - r*y^2 = n over the integers."""
    return solve(r, n, nonzero_y=nonzero_y) is not None


def solution_class_reps(r: int, n: int) -> list[Vec]:
    """One representative per automorph-and-negation class of solutions.

    Used by the wall enumeration in the surface module; for square r the
    solution set itself is finite and returned whole.
    """
    if r <= 0:
        raise ValueError("r must be a positive integer")
    if n == 0:
        raise ValueError("class representatives are only defined for n != 0")
    if is_square(r):
        return _square_solutions(isqrt(r), n)
    raw = _lmm_reps(r, n)
    # widen with sign variants (conjugate classes), then dedupe by orbit
    pool = {v for x, y in raw for v in ((x, y), (-x, -y), (x, -y), (-x, y))}
    t, u, _ = _unit_data(r)
    out: list[Vec] = []
    seen: set[Vec] = set()
    for s in sorted(pool):
        c = _orbit_canonical(s, r, t, u)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def _orbit_canonical(s: Vec, D: int, t: int, u: int) -> Vec:
    """Canonical representative of the <automorph, -1>-orbit of a solution."""

    def step(v: Vec) -> Vec:
        return (t * v[0] + D * u * v[1], u * v[0] + t * v[1])

    def back(v: Vec) -> Vec:
        return (t * v[0] - D * u * v[1], -u * v[0] + t * v[1])

    cur = s
    # |y| diverges in both orbit directions; descend to the minimum
    while True:
        f, b = step(cur), back(cur)
        if abs(f[1]) < abs(cur[1]):
            cur = f
        elif abs(b[1]) < abs(cur[1]):
            cur = b
        else:
            break
    cands = {cur, (-cur[0], -cur[1])}
    # a neighbour can tie on |y|
    for v in (step(cur), back(cur)):
        if abs(v[1]) == abs(cur[1]):
            cands.update({v, (-v[0], -v[1])})
    return min(cands)


def solutions_up_to(r: int, n: int, bound: int) -> list[Vec]:
    """Exhaustive brute-force enumeration of solutions with |y| <= bound,
    sign variants included, sorted by (|y|, y, x). This is the test oracle."""
    if r <= 0:
        raise ValueError("r must be a positive integer")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = set()
    for y in range(-bound, bound + 1):
        v = n + r * y * y
        if v < 0:
            continue
        x = isqrt(v)
        if x * x == v:
            out.add((x, y))
            out.add((-x, y))
    return sorted(out, key=lambda s: (abs(s[1]), s[1], s[0]))
