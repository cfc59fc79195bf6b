"""Periodic strips adjacent to an axial wall.

A strip between parallel walls is stored at one g-period as five cyclic
label sequences, all indexed k = 0..n-1:

    a : base-wall edges      v_k   -> v_{k+1}
    s : diagonal edges       v_{k+1} -> w_k
    t : diagonal edges       w_k   -> v_k
    b : opposite-wall edges  w_k   -> w_{k+1}
    u : diagonal edges       w_{k+1} -> v_{k+1}

Lower triangle {v_k, v_{k+1}, w_k} reads (a_k, s_k, t_k); upper triangle
{v_{k+1}, w_k, w_{k+1}} reads (s_k, b_k, u_k); the shared seam edge forces
t_{k+1} = u_k.  Strips are the edges of the tree of axial walls; a strip
that coincides with a shift of its own wall-swapped reading supports a glide
reflection, so its tree edge is inverted and acquires a median vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AmbiguousStrip, InvariantError
from .presentation import TrianglePresentation
from .walls import check_wall_sequence, minimal_period

ORACLE_MAX_LENGTH = 6  # (q+1)^(2n) blowup guard for the brute-force oracle


@dataclass(frozen=True)
class Strip:
    a: tuple[int, ...]
    s: tuple[int, ...]
    t: tuple[int, ...]
    b: tuple[int, ...]
    u: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.a)

    @property
    def period(self) -> int:
        """Minimal p_e with all five sequences invariant under shift by p_e."""
        n = self.length
        for p in range(1, n + 1):
            if n % p == 0 and shift(self, p) == self:
                return p
        raise AssertionError("unreachable")

    def rows(self):
        return tuple(zip(self.a, self.s, self.t, self.b, self.u))

    def lower_triangle(self, k: int):
        return (self.a[k], self.s[k], self.t[k])

    def upper_triangle(self, k: int):
        return (self.s[k], self.b[k], self.u[k])

    def to_json(self):
        return {"a": list(self.a), "s": list(self.s), "t": list(self.t),
                "b": list(self.b), "u": list(self.u)}


def shift(strip: Strip, r: int) -> Strip:
    """Re-read the strip starting r base edges further along."""
    n = strip.length
    r %= n

    def rot(seq):
        return seq[r:] + seq[:r]

    return Strip(rot(strip.a), rot(strip.s), rot(strip.t), rot(strip.b), rot(strip.u))


def swap(strip: Strip) -> Strip:
    """Re-read the strip from the opposite wall (same orientation).

    swap(swap(strip)) == shift(strip, 1).
    """
    n = strip.length
    a = strip.b
    s = strip.u
    t = strip.s
    b = tuple(strip.a[(k + 1) % n] for k in range(n))
    u = tuple(strip.s[(k + 1) % n] for k in range(n))
    return Strip(a, s, t, b, u)


def validate_strip(presentation: TrianglePresentation, strip: Strip) -> None:
    """Assert every Strip invariant; raises InvariantError on failure."""
    n = strip.length
    if not (len(strip.s) == len(strip.t) == len(strip.b) == len(strip.u) == n):
        raise InvariantError("sequence lengths differ")
    rotations = set(presentation.rotations)
    for k in range(n):
        lo = strip.lower_triangle(k)
        up = strip.upper_triangle(k)
        if lo not in rotations:
            raise InvariantError(f"lower triangle {lo} at k={k} is not a relator rotation")
        if up not in rotations:
            raise InvariantError(f"upper triangle {up} at k={k} is not a relator rotation")
        if strip.t[(k + 1) % n] != strip.u[k]:
            raise InvariantError(f"seam mismatch at k={k}: t_{k + 1}={strip.t[(k + 1) % n]} != u_{k}={strip.u[k]}")
        # degenerate fold: upper triangle mirroring the lower one would put
        # w_{k+1} back on the base wall
        if (strip.b[k], strip.u[k]) == (strip.t[k], strip.a[k]):
            raise InvariantError(f"degenerate strip: upper triangle at k={k} folds onto the base wall")
        if not presentation.straight(strip.b[k], strip.b[(k + 1) % n]):
            raise InvariantError(f"opposite wall bends at k={k}")
    check_wall_sequence(presentation, strip.a)
    check_wall_sequence(presentation, strip.b)
    # wall periods refine the strip period
    pe = strip.period
    if pe % minimal_period(strip.a) != 0 or pe % minimal_period(strip.b) != 0:
        raise InvariantError("strip period is not a multiple of its wall periods")


def enumerate_periodic_strips(presentation: TrianglePresentation, wall) -> list[Strip]:
    """All n-periodic strips adjacent to the wall with the given labels.

    ``wall`` is the phase-aligned label sequence (length n = |g| in edges).
    Each of the q+1 initial lower triangles determines at most one strip
    (asserted; AmbiguousStrip otherwise); branching happens only over upper
    triangle choices, the next lower triangle being forced across the seam.
    """
    a = tuple(wall)
    check_wall_sequence(presentation, a)
    n = len(a)
    found = []
    for (s0, t0) in presentation.relators_starting_with(a[0]):
        completions = []
        _extend(presentation, a, n, [s0], [t0], [], [], completions)
        if len(completions) > 1:
            raise AmbiguousStrip((a[0], s0, t0))
        if completions:
            s, t, b, u = completions[0]
            strip = Strip(a, tuple(s), tuple(t), tuple(b), tuple(u))
            validate_strip(presentation, strip)
            found.append(strip)
    return found


def _extend(presentation, a, n, s, t, b, u, completions):
    k = len(b)
    if k == n:
        if u[-1] == t[0]:
            completions.append((list(s), list(t), list(b), list(u)))
        return
    sk, tk = s[k], t[k]
    for (bk, uk) in presentation.relators_starting_with(sk):
        if (bk, uk) == (tk, a[k]):
            continue  # would fold the strip flat onto the base wall
        if k == n - 1:
            # cyclic closure: the forced next lower triangle must be the
            # initial one (uk == t[0] forces s via pair uniqueness)
            if uk == t[0] and presentation.complete(a[0], uk) == s[0]:
                _extend(presentation, a, n, s, t, b + [bk], u + [uk], completions)
        else:
            s_next = presentation.complete(a[k + 1], uk)
            if s_next is None:
                continue
            s.append(s_next)
            t.append(uk)
            _extend(presentation, a, n, s, t, b + [bk], u + [uk], completions)
            s.pop()
            t.pop()


def oracle_enumerate(presentation: TrianglePresentation, wall) -> list[Strip]:
    """Independent brute-force enumeration: try every combination of lower
    and upper triangles and keep those satisfying all Strip invariants."""
    a = tuple(wall)
    n = len(a)
    if n > ORACLE_MAX_LENGTH:
        raise ValueError(f"oracle guarded to length <= {ORACLE_MAX_LENGTH}")
    check_wall_sequence(presentation, a)
    out = []
    lower_choices = [presentation.relators_starting_with(a[k]) for k in range(n)]
    for lowers in itertools.product(*lower_choices):
        s = tuple(jk[0] for jk in lowers)
        t = tuple(jk[1] for jk in lowers)
        upper_choices = [presentation.relators_starting_with(s[k]) for k in range(n)]
        for uppers in itertools.product(*upper_choices):
            b = tuple(jk[0] for jk in uppers)
            u = tuple(jk[1] for jk in uppers)
            strip = Strip(a, s, t, b, u)
            try:
                validate_strip(presentation, strip)
            except Exception:
                continue
            out.append(strip)
    return out


def canonical_edge_key(strip: Strip):
    """Least representative over all shifts of the strip and of its swap.

    Equal keys identify the same quotient edge (strip orbits up to the
    translation and wall-swap symmetries).
    """
    n = strip.length
    candidates = []
    for base in (strip, swap(strip)):
        for r in range(n):
            candidates.append(shift(base, r).rows())
    return min(candidates)


def flip_shifts(strip: Strip) -> list[int]:
    """All d in [0, n) such that shift(swap(strip), d) == strip.

    Nonempty iff the strip carries a glide reflection exchanging its two
    walls; the minimal d gives glide translation d + 1/2 base edges and
    median vertex group order 2n/(2d+1).
    """
    n = strip.length
    sw = swap(strip)
    return [d for d in range(n) if shift(sw, d) == strip]


def median_order(strip: Strip) -> int:
    """Order 2n/(2d+1) of the glide image in the quotient (d = minimal flip shift)."""
    ds = flip_shifts(strip)
    if not ds:
        raise InvariantError("strip is not flip-symmetric")
    d = ds[0]
    n = strip.length
    if (2 * n) % (2 * d + 1) != 0 or n % (2 * d + 1) != 0:
        raise InvariantError(
            f"glide step 2*{d}+1 does not divide 2n=2*{n}; invariant violation")
    return 2 * n // (2 * d + 1)


def group_by_wall_shifts(strips: list[Strip], wall_period: int) -> list[list[Strip]]:
    """Partition anchored strips into wall-stabilizer orbits.

    Two strips at the same wall are identified iff they agree up to a shift
    by a multiple of the wall period (the action of the wall stabilizer).
    Classes are sorted by their least member; so are the members.
    """
    n = strips[0].length if strips else 0
    remaining = sorted(strips, key=lambda st: st.rows())
    classes = []
    while remaining:
        rep = remaining[0]
        orbit = {shift(rep, j) for j in range(0, n, wall_period)}
        members = [st for st in remaining if st in orbit]
        classes.append(members)
        remaining = [st for st in remaining if st not in orbit]
    return classes
