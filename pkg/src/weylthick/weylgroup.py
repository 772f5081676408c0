"""Finite Weyl group generation, longest element, and orbits of type points.

Elements are identified canonically by the permutation they induce on the
root set; the stored reduced word of every element is the lexicographically
smallest one, so all downstream enumeration output is reproducible.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

from .rootdata import (
    InputError,
    RootSystem,
    TypePoint,
    Vector,
    VerificationError,
    dot,
    neg,
    reflect,
)

Matrix = tuple[tuple[Q, ...], ...]


def _identity_matrix(d: int) -> Matrix:
    return tuple(tuple(Q(1) if i == j else Q(0) for j in range(d)) for i in range(d))


def _reflection_matrix(alpha: Vector) -> Matrix:
    d = len(alpha)
    cols = []
    for j in range(d):
        e_j = tuple(Q(1) if k == j else Q(0) for k in range(d))
        cols.append(reflect(e_j, alpha))
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), Q(0))
              for j in range(len(b[0])))
        for i in range(len(a)))


def mat_apply(a: Matrix, v: Vector) -> Vector:
    return tuple(sum((row[k] * v[k] for k in range(len(v))), Q(0)) for row in a)


class WeylElement:
    """One group element: rational orthogonal matrix plus a reduced word.

    Equality and hashing go through the induced root permutation, so ambient
    directions fixed by the whole group can never split identical elements.
    """

    __slots__ = ("matrix", "word", "length", "perm", "index")

    def __init__(self, matrix: Matrix, word: tuple[int, ...], perm: tuple[int, ...],
                 index: int):
        self.matrix = matrix
        self.word = word
        self.length = len(word)
        self.perm = perm
        self.index = index

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        w = "".join(str(i + 1) for i in self.word) or "e"
        return f"WeylElement({w}, length={self.length})"


def _root_permutation(matrix: Matrix, rs: RootSystem) -> tuple[int, ...]:
    perm = []
    for r in rs.all_roots:
        img = mat_apply(matrix, r)
        j = rs.root_index.get(img)
        if j is None:
            raise VerificationError(f"matrix does not permute the roots: {r} -> {img}")
        perm.append(j)
    return tuple(perm)


class WeylGroup:
    """The full reflection group with Cayley structure and cached order data."""

    def __init__(self, rs: RootSystem, elements: list[WeylElement],
                 cayley: list[tuple[int, ...]]):
        self.rs = rs
        self.elements = tuple(elements)
        self.cayley = tuple(cayley)  # [element][generator] -> element index
        self.index_of = {el.perm: el.index for el in elements}
        self.lengths = tuple(el.length for el in elements)
        max_len = max(self.lengths)
        tops = [el.index for el in elements if el.length == max_len]
        if len(tops) != 1:
            raise VerificationError("longest element is not unique")
        self.w0_index = tops[0]
        w0 = self.elements[self.w0_index]
        if _compose_perm(w0.perm, w0.perm) != self.elements[0].perm:
            raise VerificationError("longest element is not an involution")

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"WeylGroup({self.rs.name}, order={len(self.elements)})"

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def w0(self) -> WeylElement:
        return self.elements[self.w0_index]

    def multiply_gen(self, i: int, s: int) -> int:
        """Index of elements[i] composed with the s-th simple reflection."""
        return self.cayley[i][s]

    def element_by_word(self, word: Sequence[int]) -> WeylElement:
        idx = 0
        for s in word:
            if not 0 <= s < self.rs.rank:
                raise InputError(f"letter {s} out of range for rank {self.rs.rank}")
            idx = self.cayley[idx][s]
        return self.elements[idx]


def _compose_perm(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # permutation of p∘q: (p∘q)[k] = p[q[k]]
    return tuple(p[j] for j in q)


def generate(rs: RootSystem, max_order: int | None = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Elements come out ordered by length, then lexicographically by reduced
    word; the stored word of each element is its lex-smallest reduced word.
    """
    bound = max_order if max_order is not None else rs.weyl_order
    gens = [_reflection_matrix(a) for a in rs.simple_roots]
    gen_perms = [_root_permutation(m, rs) for m in gens]
    d = rs.dim

    identity = WeylElement(_identity_matrix(d), (), tuple(range(len(rs.all_roots))), 0)
    elements = [identity]
    index_of = {identity.perm: 0}
    cayley: list[list[int]] = [[-1] * rs.rank]
    level = [0]
    while level:
        nxt = []
        for i in level:
            el = elements[i]
            for s in range(rs.rank):
                perm = _compose_perm(el.perm, gen_perms[s])
                j = index_of.get(perm)
                if j is None:
                    j = len(elements)
                    if j >= bound + 1:
                        raise InputError(
                            f"group closure exceeded the bound {bound}; "
                            "input does not look finite")
                    new = WeylElement(mat_mul(el.matrix, gens[s]),
                                      el.word + (s,), perm, j)
                    elements.append(new)
                    index_of[perm] = j
                    cayley.append([-1] * rs.rank)
                    nxt.append(j)
                cayley[i][s] = j
        level = nxt
    # fill the shortening edges of the Cayley table
    for i, el in enumerate(elements):
        for s in range(rs.rank):
            if cayley[i][s] == -1:
                cayley[i][s] = index_of[_compose_perm(el.perm, gen_perms[s])]
    if len(elements) != rs.weyl_order:
        raise VerificationError(
            f"generated {len(elements)} elements, classification says {rs.weyl_order}")
    return WeylGroup(rs, elements, [tuple(row) for row in cayley])


def longest_element(g: WeylGroup) -> WeylElement:
    """The unique maximal-length element; sends the chamber to its opposite."""
    w0 = g.w0
    n_pos = len(g.rs.positive_roots)
    if w0.length != n_pos:
        raise VerificationError(
            f"longest length {w0.length} != positive-root count {n_pos}")
    return w0


def inversion_count(g: WeylGroup, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    rs = g.rs
    count = 0
    for r in rs.positive_roots:
        img = rs.all_roots[w.perm[rs.root_index[r]]]
        if not rs.is_positive_root(img):
            count += 1
    return count


def is_minus_identity(w: WeylElement, rs: RootSystem) -> bool:
    """True iff w acts as -1 on the root span (ambient fixed lines ignored)."""
    for a in rs.simple_roots:
        if mat_apply(w.matrix, a) != neg(a):
            return False
    return True


def iota_permutation(g: WeylGroup) -> tuple[int, ...]:
    """Diagram automorphism induced by composing -1 with the longest element."""
    rs = g.rs
    out = []
    for a in rs.simple_roots:
        img = neg(mat_apply(g.w0.matrix, a))
        for j, b in enumerate(rs.simple_roots):
            if img == b:
                out.append(j)
                break
        else:
            raise VerificationError("involution does not permute the simple roots")
    return tuple(out)


class Orbit:
    """The orbit of a chamber direction, indexed in discovery order.

    Index 0 is always the point inside the fundamental chamber. ``rep[p]`` is
    the index of the minimal-length element carrying the base to point p
    (unique, and lex-smallest by the group's element ordering).
    """

    def __init__(self, group: WeylGroup, base: TypePoint):
        self.group = group
        self.base = base
        points: list[Vector] = []
        point_index: dict[Vector, int] = {}
        rep: list[int] = []
        element_to_point: list[int] = []
        for el in group.elements:
            img = mat_apply(el.matrix, base.vector)
            p = point_index.get(img)
            if p is None:
                p = len(points)
                points.append(img)
                point_index[img] = p
                rep.append(el.index)
            element_to_point.append(p)
        self.points = tuple(points)
        self.point_index = point_index
        self.rep = tuple(rep)
        self.element_to_point = tuple(element_to_point)
        if len(group.elements) % len(points) != 0:
            raise VerificationError("orbit size does not divide the group order")
        self.stabilizer_order = len(group.elements) // len(points)
        self._folding_poset = None
        self._pairing: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return (f"Orbit({self.group.rs.name}, size={len(self.points)}, "
                f"stabilizer={self.stabilizer_order})")

    def rep_words(self) -> list[tuple[int, ...]]:
        return [self.group.elements[i].word for i in self.rep]

    def level(self, p: int) -> int:
        return self.group.elements[self.rep[p]].length


def orbit_of(g: WeylGroup, t: TypePoint) -> Orbit:
    """Enumerate the orbit of a closed-chamber direction with stabilizer data."""
    orb = Orbit(g, t)
    # face stabilizer order from the generators fixing the base
    stab = _parabolic_order(g, t.stabilizer_gens)
    if stab != orb.stabilizer_order:
        raise VerificationError(
            f"stabilizer order {orb.stabilizer_order} != parabolic order {stab}")
    return orb


def _parabolic_order(g: WeylGroup, gens: tuple[int, ...]) -> int:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for s in gens:
                j = g.cayley[i][s]
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return len(seen)
