"""The folding order on Weyl orbits, realized two independent ways.

The geometric route folds points across walls of positive roots and takes
reachability; the combinatorial route runs the subword test on minimal coset
representatives. ``cross_validate`` asserts they agree pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import Vector, VerificationError, dot, reflect
from .weylgroup import Orbit, WeylElement, WeylGroup, mat_apply


@dataclass(frozen=True)
class Poset:
    """Dense partial order on orbit indices, stored as down-set bitmasks.

    ``down[p]`` has bit q set iff q <= p. The unique minimum is the orbit
    point in the fundamental chamber; the unique maximum is its image under
    the longest element.
    """

    size: int
    down: tuple[int, ...]
    _covers: list | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        full = (1 << self.size) - 1
        minima = [p for p in range(self.size) if self.down[p] == (1 << p)]
        maxima = [p for p in range(self.size) if self.down[p] == full]
        if len(minima) != 1 or len(maxima) != 1:
            raise VerificationError(
                f"poset must have one minimum and one maximum, got {minima}, {maxima}")
        bottom = minima[0]
        for p in range(self.size):
            if not (self.down[p] >> p) & 1:
                raise VerificationError("down-sets must be reflexive")
            if not (self.down[p] >> bottom) & 1:
                raise VerificationError("minimum is not below every element")

    def leq(self, p: int, q: int) -> bool:
        return bool((self.down[q] >> p) & 1)

    @property
    def minimum(self) -> int:
        return next(p for p in range(self.size) if self.down[p] == (1 << p))

    @property
    def maximum(self) -> int:
        full = (1 << self.size) - 1
        return next(p for p in range(self.size) if self.down[p] == full)

    def up(self, p: int) -> int:
        """Bitmask of q with p <= q."""
        mask = 0
        for q in range(self.size):
            if (self.down[q] >> p) & 1:
                mask |= 1 << q
        return mask

    def up_masks(self) -> tuple[int, ...]:
        out = [0] * self.size
        for q in range(self.size):
            m = self.down[q]
            while m:
                low = m & -m
                out[low.bit_length() - 1] |= 1 << q
                m ^= low
        return tuple(out)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (p, q) with p < q, by transitive reduction."""
        if self._covers is None:
            pairs = []
            for q in range(self.size):
                strict = self.down[q] & ~(1 << q)
                dominated = 0
                m = strict
                while m:
                    low = m & -m
                    r = low.bit_length() - 1
                    dominated |= self.down[r] & ~(1 << r)
                    m ^= low
                cov = strict & ~dominated
                while cov:
                    low = cov & -cov
                    pairs.append((low.bit_length() - 1, q))
                    cov ^= low
            object.__setattr__(self, "_covers", sorted(pairs))
        assert self._covers is not None
        return list(self._covers)

    def closure_of(self, mask: int) -> int:
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= self.down[low.bit_length() - 1]
            m ^= low
        return out

    def is_down_closed(self, mask: int) -> bool:
        return self.closure_of(mask) == mask


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def folding_leq_geometric(orbit: Orbit) -> Poset:
    """Reachability order under single-wall folds toward the chamber.

    A point on the outer side of the wall of a positive root reflects to the
    inner side; repeating such folds from q reaches exactly the points below
    q. Every fold strictly increases the pairing with an interior direction,
    so the move graph is acyclic and memoized DFS closes it.
    """
    if orbit._folding_poset is not None:
        return orbit._folding_poset
    rs = orbit.group.rs
    pts = orbit.points
    n = len(pts)
    moves: list[list[int]] = [[] for _ in range(n)]
    for alpha in rs.positive_roots:
        for p, v in enumerate(pts):
            if dot(v, alpha) < 0:
                q = orbit.point_index[reflect(v, alpha)]
                moves[p].append(q)
    down = [0] * n
    done = [False] * n
    order = sorted(range(n), key=orbit.level)  # targets resolve before sources
    for p in order:
        mask = 1 << p
        for q in moves[p]:
            if not done[q]:
                # level heuristic failed; fall back to explicit DFS
                mask |= _reach(q, moves, down, done)
            else:
                mask |= down[q]
        down[p] = mask
        done[p] = True
    poset = Poset(n, tuple(down))
    orbit._folding_poset = poset
    return poset


def _reach(start: int, moves, down, done) -> int:
    stack = [start]
    while stack:
        p = stack[-1]
        if done[p]:
            stack.pop()
            continue
        pending = [q for q in moves[p] if not done[q]]
        if pending:
            stack.extend(pending)
            continue
        mask = 1 << p
        for q in moves[p]:
            mask |= down[q]
        down[p] = mask
        done[p] = True
        stack.pop()
    return down[start]


def bruhat_leq(g: WeylGroup, u: WeylElement | int, v: WeylElement | int) -> bool:
    """Subword test on one fixed reduced word of v.

    Scans the word right to left, folding u by any matching right descent;
    u is below v exactly when it dissolves to the identity.
    """
    ui = u.index if isinstance(u, WeylElement) else u
    vi = v.index if isinstance(v, WeylElement) else v
    lengths = g.lengths
    cayley = g.cayley
    for s in reversed(g.elements[vi].word):
        if ui == 0:
            return True
        us = cayley[ui][s]
        if lengths[us] < lengths[ui]:
            ui = us
    return ui == 0


def quotient_poset(g: WeylGroup, orbit: Orbit) -> Poset:
    """Bruhat order on the minimal coset representatives, orbit-indexed."""
    n = len(orbit)
    down = []
    for q in range(n):
        mask = 0
        for p in range(n):
            if bruhat_leq(g, orbit.rep[p], orbit.rep[q]):
                mask |= 1 << p
        down.append(mask)
    return Poset(n, tuple(down))


def antipode_pairing(g: WeylGroup, orbit: Orbit) -> tuple[int, ...]:
    """Index involution sending every point to its image under the longest element."""
    if orbit._pairing is None:
        w0m = g.w0.matrix
        pairing = tuple(orbit.point_index[mat_apply(w0m, v)] for v in orbit.points)
        for p, q in enumerate(pairing):
            if pairing[q] != p:
                raise VerificationError("antipode pairing is not an involution")
        orbit._pairing = pairing
    return orbit._pairing


@dataclass(frozen=True)
class CrossValidationReport:
    system: str
    orbit_size: int
    pairs_checked: int
    mismatches: tuple[tuple[int, int, bool, bool], ...]

    @property
    def agree(self) -> bool:
        return not self.mismatches


class CrossValidationError(VerificationError):
    def __init__(self, report: CrossValidationReport):
        self.report = report
        p, q, geo, sub = report.mismatches[0]
        super().__init__(
            f"folding orders disagree on ({p}, {q}): geometric={geo}, subword={sub}")


def cross_validate(orbit: Orbit, strict: bool = True) -> CrossValidationReport:
    """Compare the geometric and subword realizations pair by pair."""
    geo = folding_leq_geometric(orbit)
    sub = quotient_poset(orbit.group, orbit)
    n = len(orbit)
    mismatches = []
    for q in range(n):
        if geo.down[q] != sub.down[q]:
            diff = geo.down[q] ^ sub.down[q]
            for p in _bits(diff):
                mismatches.append((p, q, geo.leq(p, q), sub.leq(p, q)))
    report = CrossValidationReport(
        system=orbit.group.rs.name,
        orbit_size=n,
        pairs_checked=n * n,
        mismatches=tuple(mismatches),
    )
    if strict and mismatches:
        raise CrossValidationError(report)
    return report


def poset_json(orbit: Orbit, poset: Poset) -> dict:
    """Export schema: element words, covering pairs, antipode pairing."""
    pairing = antipode_pairing(orbit.group, orbit)
    return {
        "system": orbit.group.rs.name,
        "size": poset.size,
        "rep_words": [[s + 1 for s in w] for w in orbit.rep_words()],
        "covers": [list(c) for c in poset.covers()],
        "antipode_pairing": list(pairing),
    }
