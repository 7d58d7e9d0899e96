"""Isometries of a quartic Picard lattice and generator synthesis.

An isometry is a 2x2 integer matrix m with m^T Q m = Q, acting on coordinate
columns in the (H, W) basis. Two integrality criteria decide whether a Hodge
isometry descends from an actual automorphism of the surface:

* gluing_ok: (m + I) Q^{-1} or (m - I) Q^{-1} is integral (the isometry
  extends over the transcendental lattice);
* torelli_ok: m(H) is ample (so the extended isometry is effective).

Involutions of the lattice that fix no ample class come in the one-parameter
family involution_form; infinite-order isometries are powers of a minimal
hyperbolic element built from the conic c*a^2 - b*a*t + 2*t^2 = c
(minimal_quadeq_solution). aut_generators assembles the generator list that
classify_aut reports.
"""
from __future__ import annotations

from . import surface as surf
from .lattice import Mat, Vec, mat_mul, mat_pow, pairing

_W: Vec = (0, 1)

_H_POWER_CAP = 64
_QUADEQ_HARD_CAP = 1_000_000


def is_isometry(L: surf.QuarticLattice, m: Mat) -> bool:
    """Exact check that m preserves the intersection form."""
    q = L.base
    cols = (mat_col(m, 0), mat_col(m, 1))
    return (
        pairing(q, cols[0], cols[0]) == q.q11
        and pairing(q, cols[0], cols[1]) == q.q12
        and pairing(q, cols[1], cols[1]) == q.q22
    )


def mat_col(m: Mat, j: int) -> Vec:
    return (m[0][j], m[1][j])


def gluing_ok(L: surf.QuarticLattice, m: Mat) -> bool:
    """True iff (m + I) Q^{-1} or (m - I) Q^{-1} has integer entries.

    Q^{-1} = adj(Q)/det(Q), so the test is divisibility of (m ± I)·adj(Q)
    by det(Q); no rational types needed.
    """
    q = L.base
    det = q.det()
    adj = ((q.q22, -q.q12), (-q.q12, q.q11))
    for sign in (1, -1):
        shifted = (
            (m[0][0] + sign, m[0][1]),
            (m[1][0], m[1][1] + sign),
        )
        prod = mat_mul(shifted, adj)
        if all(prod[i][j] % det == 0 for i in range(2) for j in range(2)):
            return True
    return False


def torelli_ok(L: surf.QuarticLattice, m: Mat) -> bool:
    """True iff m sends the polarization H to an ample class."""
    return surf.is_ample(L, mat_col(m, 0))


def involution_form(L: surf.QuarticLattice, alpha: int, beta: int) -> Mat | None:
    """The trace-zero isometry ((alpha, beta), ((-b*alpha + 2*beta)/c, -alpha)),
    or None when the lower-left entry is not an integer.

    (alpha, beta) must satisfy c*alpha^2 - b*alpha*beta + 2*beta^2 = c.
    """
    b, c = L.b, L.c
    if c == 0:
        raise ValueError("the involution family is undefined for c = 0")
    if c * alpha * alpha - b * alpha * beta + 2 * beta * beta != c:
        raise ValueError("(alpha, beta) does not solve the involution conic")
    num = -b * alpha + 2 * beta
    if num % c:
        return None
    return ((alpha, beta), (num // c, -alpha))


def infinite_order_form(L: surf.QuarticLattice, alpha: int, beta: int) -> Mat | None:
    """The determinant-one isometry ((alpha, beta), (-2*beta/c, alpha - b*beta/c)),
    or None when an entry is not an integer."""
    b, c = L.b, L.c
    if c == 0:
        raise ValueError("the infinite-order family is undefined for c = 0")
    if c * alpha * alpha - b * alpha * beta + 2 * beta * beta != c:
        raise ValueError("(alpha, beta) does not solve the conic")
    if (2 * beta) % c or (b * beta) % c:
        return None
    return ((alpha, beta), (-2 * beta // c, alpha - b * beta // c))


def minimal_quadeq_solution(L: surf.QuarticLattice) -> Vec:
    """Smallest positive (alpha, beta) solving c*a^2 - b*a*t + 2*t^2 = c whose
    infinite-order form is integral with positive trace.

    The class-vector automorph of the fundamental Pell solution (t, u) lies in
    the same family with beta = 2|c|u, so the scan below is complete once beta
    reaches that bound; a hard cap guards against misuse.
    """
    from math import isqrt

    from . import pell

    b, c, r = L.b, L.c, L.r
    if c == 0:
        raise ValueError("the conic degenerates for c = 0")
    if pell.is_square(r):
        raise ValueError("no infinite-order isometry exists for square discriminant")
    _, u = pell.fundamental_solution(r)
    bound = min(2 * abs(c) * u, _QUADEQ_HARD_CAP)
    for size in range(1, bound + 1):
        # the expanding solution has beta > 0 when b > 0 and beta < 0 when
        # b < 0 (mirror models swap the sign), so try both
        for beta in (size, -size):
            if (2 * beta) % c or (b * beta) % c:
                continue
            # a = (b*beta ± s) / (2c) with s^2 = r*beta^2 + 4c^2
            s2 = r * beta * beta + 4 * c * c
            s = isqrt(s2)
            if s * s != s2:
                continue
            for root in (b * beta + s, b * beta - s):
                if root % (2 * c):
                    continue
                alpha = root // (2 * c)
                if alpha <= 0:
                    continue
                # positive trace picks the expanding direction
                if c * (2 * alpha * c - b * beta) <= 0:
                    continue
                return (alpha, beta)
    raise RuntimeError(
        "no positive conic solution with |beta| <= %d; lattice outside the "
        "supported range" % bound
    )


def reflection(L: surf.QuarticLattice, A: Vec) -> Mat:
    """Reflection x -> (A.x)A - x along a class with A^2 = 2."""
    if L.dot(A, A) != 2:
        raise ValueError("reflection axis must have self-intersection 2")
    c0 = _reflect(L, A, surf.H)
    c1 = _reflect(L, A, _W)
    return ((c0[0], c1[0]), (c0[1], c1[1]))


def _reflect(L: surf.QuarticLattice, A: Vec, x: Vec) -> Vec:
    p = L.dot(A, x)
    return (p * A[0] - x[0], p * A[1] - x[1])


def generators_for(L: surf.QuarticLattice, tag: str, axes: list[Vec]) -> list[Mat]:
    """Generator matrices for a classify_aut tag; axes are the ample square-2
    classes already sorted by their Pell key."""
    if tag == "Trivial":
        return []
    if tag in ("Z2", "Z2starZ2"):
        expected = 1 if tag == "Z2" else 2
        if len(axes) != expected:
            raise RuntimeError(
                "tag %s expects %d ample square-2 classes, found %d"
                % (tag, expected, len(axes))
            )
        return [reflection(L, A) for A in axes]
    # tag == "Z": minimal power of the minimal hyperbolic element that
    # satisfies both descent criteria
    alpha, beta = minimal_quadeq_solution(L)
    h = infinite_order_form(L, alpha, beta)
    if h is None:
        raise RuntimeError("minimal conic solution lost integrality; scan bug")
    for k in range(1, _H_POWER_CAP + 1):
        hk = mat_pow(h, k)
        if gluing_ok(L, hk) and torelli_ok(L, hk):
            return [hk]
    raise RuntimeError("no power of the minimal isometry glues; cap too low")


def minimal_gluing_exponent(L: surf.QuarticLattice) -> int:
    """The k for which aut_generators returns h^k in the infinite case."""
    alpha, beta = minimal_quadeq_solution(L)
    h = infinite_order_form(L, alpha, beta)
    for k in range(1, _H_POWER_CAP + 1):
        hk = mat_pow(h, k)
        if gluing_ok(L, hk) and torelli_ok(L, hk):
            return k
    raise RuntimeError("no power of the minimal isometry glues; cap too low")


def aut_generators(L: surf.QuarticLattice) -> list[Mat]:
    """Generators of the automorphism group acting on (H, W) coordinates:
    [] / [reflection] / [two reflections] / [h^k] per the classification."""
    return list(surf.classify_aut(L).generators)


def to_json(m: Mat) -> dict:
    """Row-major serialization with the basis convention made explicit."""
    return {"matrix": [list(m[0]), list(m[1])], "basis": "H,W columns"}
