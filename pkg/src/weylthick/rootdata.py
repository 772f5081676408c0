"""Root systems over exact rationals and spherical geometry on the model apartment.

Every vector is a tuple of ``fractions.Fraction``; directions stay
unnormalized and all sphere comparisons are done by sign bookkeeping on
rational inner products, so nothing here ever touches a float except the
explicitly approximate angle mode.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from typing import Iterable, NamedTuple, Sequence

Vector = tuple[Q, ...]


class AngleClass(Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


class Cmp(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class WeylthickError(Exception):
    """Base class for all library errors."""


class InputError(WeylthickError):
    """Bad user input: unknown type name, malformed matrix, invalid point."""


class VerificationError(WeylthickError):
    """A checked invariant failed."""


class AmbiguousAngleError(WeylthickError):
    """An approximate angle comparison landed inside the tolerance band."""


# ---------------------------------------------------------------------------
# exact vectors and small linear algebra


def vec(*coords) -> Vector:
    """Build an exact vector, coercing ints/strings through Fraction."""
    return tuple(Q(c) for c in coords)


def dot(u: Vector, v: Vector) -> Q:
    if len(u) != len(v):
        raise InputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Q(0))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def scale(c, u: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in u)


def is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


def reflect(v: Vector, alpha: Vector) -> Vector:
    """Reflect v in the wall orthogonal to alpha."""
    c = 2 * dot(v, alpha) / dot(alpha, alpha)
    return tuple(a - c * b for a, b in zip(v, alpha))


def _require_nonzero(u: Vector, name: str = "vector") -> None:
    if is_zero(u):
        raise InputError(f"{name} must be nonzero (a direction is required)")


def solve_linear(rows: Sequence[Sequence[Q]], rhs: Sequence[Q]) -> list[Q]:
    """Solve a square rational system by Gaussian elimination."""
    n = len(rows)
    aug = [[Q(x) for x in row] + [Q(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise InputError("singular linear system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def nullspace(rows: Sequence[Sequence[Q]], dim: int) -> list[Vector]:
    """Rational basis of {x : row·x = 0 for every row}."""
    mat = [[Q(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q(0)] * dim
        v[fc] = Q(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Dynkin diagrams


@dataclass(frozen=True)
class DynkinDiagram:
    """Bond graph on simple-root indices; multiplicities are 3, 4 or 6."""

    rank: int
    edges: tuple[tuple[int, int, int], ...]  # (i, j, multiplicity), i < j

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b, _ in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return out

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.rank):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            stack = [start]
            while stack:
                for nb in self.neighbors(stack.pop()):
                    if nb not in seen:
                        seen.add(nb)
                        comp.append(nb)
                        stack.append(nb)
            comps.append(sorted(comp))
        return comps

    @property
    def is_connected(self) -> bool:
        return self.rank > 0 and len(self.components()) == 1

    @property
    def has_simple_edge(self) -> bool:
        """True iff some bond has multiplicity 3."""
        return any(m == 3 for _, _, m in self.edges)


# ---------------------------------------------------------------------------
# type points


@dataclass(frozen=True)
class TypePoint:
    """A direction in the closed fundamental chamber.

    ``stabilizer_gens`` lists the simple reflections fixing the point; the
    point is regular exactly when that list is empty.
    """

    vector: Vector
    stabilizer_gens: tuple[int, ...]
    regular: bool


# ---------------------------------------------------------------------------
# root systems

_NAME_RE = re.compile(r"^([A-G])([0-9]+)$")

_WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: (2**n) * _factorial(n),
    "C": lambda n: (2**n) * _factorial(n),
    "D": lambda n: (2 ** (n - 1)) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class RootSystem:
    """A finite crystallographic root system in explicit rational coordinates.

    The ambient dimension may exceed the rank (A-type sits in the sum-zero
    hyperplane); the model sphere is the unit sphere of the root span.
    """

    def __init__(self, name: str, dim: int, simple_roots: Sequence[Vector],
                 factors: Sequence["RootSystem"] | None = None):
        self.name = name
        self.dim = dim
        self.rank = len(simple_roots)
        self.simple_roots: tuple[Vector, ...] = tuple(simple_roots)
        self.all_roots: tuple[Vector, ...] = tuple(
            sorted(_close_under_reflections(self.simple_roots)))
        self.root_index = {r: i for i, r in enumerate(self.all_roots)}
        self.cartan: tuple[tuple[int, ...], ...] = _cartan_matrix(self.simple_roots)
        self.diagram = diagram_of_cartan(self.cartan)
        self._factors = list(factors) if factors is not None else None
        self._weights: tuple[Vector, ...] | None = None
        self._coeff_cache: dict[Vector, tuple[Q, ...]] = {}
        self._check_counts()

    def __repr__(self) -> str:
        return f"RootSystem({self.name!r}, rank={self.rank}, roots={len(self.all_roots)})"

    def _check_counts(self) -> None:
        expected = sum(_root_count(nm) for nm in self.component_names)
        if len(self.all_roots) != expected:
            raise VerificationError(
                f"{self.name}: built {len(self.all_roots)} roots, classification "
                f"says {expected}")
        for r in self.all_roots:
            if neg(r) not in self.root_index:
                raise VerificationError(f"{self.name}: root set not symmetric at {r}")

    @property
    def component_names(self) -> list[str]:
        return [f.name for f in self.components]

    @property
    def components(self) -> list["RootSystem"]:
        """Irreducible factors as standalone systems ([self] when irreducible)."""
        if self._factors is None:
            return [self]
        return list(self._factors)

    @property
    def is_irreducible(self) -> bool:
        return self._factors is None

    @property
    def weyl_order(self) -> int:
        out = 1
        for nm in self.component_names:
            m = _NAME_RE.match(nm)
            assert m is not None
            out *= _WEYL_ORDERS[m.group(1)](int(m.group(2)))
        return out

    @property
    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(r for r in self.all_roots if self.is_positive_root(r))

    def root_coefficients(self, root: Vector) -> tuple[Q, ...]:
        """Coordinates of a root-span vector in the simple-root basis."""
        if root not in self._coeff_cache:
            gram = [[dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
            rhs = [dot(root, a) for a in self.simple_roots]
            coeffs = tuple(solve_linear(gram, rhs))
            residual = sub(root, _combine(coeffs, self.simple_roots))
            if not is_zero(residual):
                raise InputError(f"vector {root} is not in the root span")
            self._coeff_cache[root] = coeffs
        return self._coeff_cache[root]

    def is_positive_root(self, root: Vector) -> bool:
        coeffs = self.root_coefficients(root)
        return all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs)

    def in_root_span(self, v: Vector) -> bool:
        try:
            self.root_coefficients(v)
        except InputError:
            return False
        return True

    def fundamental_weights(self) -> tuple[Vector, ...]:
        """Solve the dual basis of the simple coroots inside the root span."""
        if self._weights is None:
            gram = [[dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
            ws = []
            for i, alpha in enumerate(self.simple_roots):
                rhs = [Q(0)] * self.rank
                rhs[i] = dot(alpha, alpha) / 2
                coeffs = solve_linear(gram, rhs)
                ws.append(_combine(coeffs, self.simple_roots))
            self._weights = tuple(ws)
        return self._weights

    def type_point(self, v: Vector) -> TypePoint:
        """Validate v as a direction in the closed fundamental chamber."""
        _require_nonzero(v, "type point")
        if len(v) != self.dim:
            raise InputError(f"expected dimension {self.dim}, got {len(v)}")
        if not self.in_root_span(v):
            raise InputError(
                f"{v} is outside the root span and cannot be a chamber direction")
        gens = []
        for i, alpha in enumerate(self.simple_roots):
            p = dot(v, alpha)
            if p < 0:
                raise InputError(
                    f"{v} has negative pairing with simple root {i + 1}; "
                    "not in the closed fundamental chamber")
            if p == 0:
                gens.append(i)
        return TypePoint(vector=tuple(v), stabilizer_gens=tuple(gens),
                         regular=not gens)

    def vertex_type(self, i: int) -> TypePoint:
        """Chamber vertex in the direction of the i-th fundamental weight (1-based)."""
        if not 1 <= i <= self.rank:
            raise InputError(f"vertex index must be in 1..{self.rank}, got {i}")
        w = self.fundamental_weights()[i - 1]
        return self.type_point(_clear_denominators(w))


def _combine(coeffs: Sequence[Q], vectors: Sequence[Vector]) -> Vector:
    out = [Q(0)] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        for k, x in enumerate(v):
            out[k] += c * x
    return tuple(out)


def _clear_denominators(v: Vector) -> Vector:
    lcm = 1
    for x in v:
        d = x.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return tuple(x * lcm for x in v)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _close_under_reflections(simple: Sequence[Vector], cap: int = 10000) -> set[Vector]:
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for alpha in simple:
                img = reflect(r, alpha)
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        if len(roots) > cap:
            raise InputError("root closure does not terminate: not finite type")
        frontier = nxt
    return roots


def _cartan_matrix(simple: Sequence[Vector]) -> tuple[tuple[int, ...], ...]:
    # convention: entry (i, j) is 2(a_i, a_j)/(a_i, a_i), row i = reflecting root
    rows = []
    for a in simple:
        row = []
        for b in simple:
            c = 2 * dot(a, b) / dot(a, a)
            if c.denominator != 1:
                raise InputError(f"non-integral Cartan pairing between {a} and {b}")
            row.append(int(c))
        rows.append(tuple(row))
    for i, row in enumerate(rows):
        if row[i] != 2:
            raise InputError("diagonal Cartan entry is not 2")
        for j, x in enumerate(row):
            if i != j and x not in (0, -1, -2, -3):
                raise InputError(f"off-diagonal Cartan entry {x} out of range")
    return tuple(rows)


def diagram_of_cartan(cartan: Sequence[Sequence[int]]) -> DynkinDiagram:
    n = len(cartan)
    mult = {1: 3, 2: 4, 3: 6}
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            p = cartan[i][j] * cartan[j][i]
            if p == 0:
                continue
            if p not in mult:
                raise InputError(f"bond product {p} between nodes {i},{j} is not finite type")
            edges.append((i, j, mult[p]))
    return DynkinDiagram(rank=n, edges=tuple(edges))


def _root_count(name: str) -> int:
    m = _NAME_RE.match(name)
    assert m is not None
    letter, n = m.group(1), int(m.group(2))
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}[n],
        "F": 48,
        "G": 12,
    }[letter]


# ---------------------------------------------------------------------------
# standard realizations (rational coordinates throughout)


def _simple_roots_named(letter: str, n: int) -> tuple[int, list[Vector]]:
    e = lambda i, d: tuple(Q(1) if k == i else Q(0) for k in range(d))
    if letter == "A":
        if n < 1:
            raise InputError("A-type needs rank >= 1")
        d = n + 1
        return d, [sub(e(i, d), e(i + 1, d)) for i in range(n)]
    if letter == "B":
        if n < 2:
            raise InputError("B-type needs rank >= 2")
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        roots.append(e(n - 1, n))
        return n, roots
    if letter == "C":
        if n < 2:
            raise InputError("C-type needs rank >= 2")
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        roots.append(scale(2, e(n - 1, n)))
        return n, roots
    if letter == "D":
        if n < 3:
            raise InputError("D-type needs rank >= 3")
        roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
        roots.append(add(e(n - 2, n), e(n - 1, n)))
        return n, roots
    if letter == "G":
        if n != 2:
            raise InputError("G-type exists only in rank 2")
        return 3, [vec(1, -1, 0), vec(-2, 1, 1)]
    if letter == "F":
        if n != 4:
            raise InputError("F-type exists only in rank 4")
        return 4, [vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 0, 1),
                   vec(Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2))]
    if letter == "E":
        if n not in (6, 7, 8):
            raise InputError("E-type exists only in ranks 6, 7, 8")
        d = 8
        a1 = vec(Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2),
                 Q(-1, 2), Q(1, 2))
        a2 = vec(1, 1, 0, 0, 0, 0, 0, 0)
        rest = [sub(e(i + 1, d), e(i, d)) for i in range(1, 7)]
        return d, ([a1, a2] + rest)[:n]
    raise InputError(f"unknown type letter {letter!r}")


def _build_named(name: str) -> RootSystem:
    m = _NAME_RE.match(name)
    if m is None:
        raise InputError(f"unrecognized type name {name!r}")
    letter, n = m.group(1), int(m.group(2))
    dim, simple = _simple_roots_named(letter, n)
    return RootSystem(f"{letter}{n}", dim, simple)


def _build_product(names: list[str]) -> RootSystem:
    factors = [_build_named(nm) for nm in names]
    if len(factors) == 1:
        return factors[0]
    total = sum(f.dim for f in factors)
    simple: list[Vector] = []
    offset = 0
    for f in factors:
        for a in f.simple_roots:
            simple.append(tuple(Q(0) for _ in range(offset)) + a
                          + tuple(Q(0) for _ in range(total - offset - f.dim)))
        offset += f.dim
    return RootSystem("x".join(f.name for f in factors), total, simple,
                      factors=factors)


def parse_system(spec: str) -> RootSystem:
    """Build a root system from a type name, a product, or a Cartan-matrix file.

    Names follow Bourbaki numbering ("A2", "B3", "F4", ...); products are
    "x"-separated ("A1xA1"). Anything else is treated as a path to a JSON
    document holding an integer Cartan matrix as an array of rows.
    """
    s = spec.strip()
    parts = [p.strip().upper() for p in s.split("x")] if s else []
    if parts and all(_NAME_RE.match(p) for p in parts):
        return _build_product(parts)
    if os.path.exists(s):
        with open(s) as fh:
            data = json.load(fh)
        return system_from_cartan(data)
    raise InputError(
        f"cannot interpret {spec!r}: not a type name (letter+rank, 'x'-separated) "
        "and not a path to a Cartan-matrix JSON file")


# ---------------------------------------------------------------------------
# Cartan-matrix input: validate by root closure, then classify and realize


def system_from_cartan(rows) -> RootSystem:
    """Realize a finite-type integer Cartan matrix in standard coordinates.

    Validity is detected by running the root closure in simple-root
    coordinates; a non-finite matrix blows past the bound. The matrix is then
    classified up to node permutation and realized by the matching named
    system, with simple roots reordered to the input numbering.
    """
    cartan = _validate_cartan_rows(rows)
    n = len(cartan)
    _coefficient_closure(cartan)  # raises if not finite type
    comp_nodes = diagram_of_cartan(cartan).components()
    blocks: list[tuple[list[int], RootSystem, list[int]]] = []
    for nodes in comp_nodes:
        sub_cartan = [[cartan[i][j] for j in nodes] for i in nodes]
        name, perm = _classify_irreducible(sub_cartan)
        blocks.append((nodes, _build_named(name), perm))
    total_dim = sum(b[1].dim for b in blocks)
    simple: list[Vector | None] = [None] * n
    offset = 0
    for nodes, factor, perm in blocks:
        # perm[k] = standard node realizing component node k
        for k, node in enumerate(nodes):
            a = factor.simple_roots[perm[k]]
            simple[node] = (tuple(Q(0) for _ in range(offset)) + a
                            + tuple(Q(0) for _ in range(total_dim - offset - factor.dim)))
        offset += factor.dim
    assert all(v is not None for v in simple)
    name = "x".join(b[1].name for b in blocks)
    factors = [b[1] for b in blocks] if len(blocks) > 1 else None
    rs = RootSystem(name, total_dim, [v for v in simple if v is not None],
                    factors=factors)
    if rs.cartan != cartan:
        raise VerificationError("realized Cartan matrix does not match the input")
    return rs


def _validate_cartan_rows(rows) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or not rows:
        raise InputError("Cartan document must be a nonempty JSON array of rows")
    n = len(rows)
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise InputError("Cartan matrix must be square")
        if not all(isinstance(x, int) for x in row):
            raise InputError("Cartan entries must be integers")
        out.append(tuple(row))
    for i in range(n):
        if out[i][i] != 2:
            raise InputError(f"diagonal entry ({i},{i}) must be 2")
        for j in range(n):
            if i != j:
                if out[i][j] > 0:
                    raise InputError(f"off-diagonal entry ({i},{j}) must be <= 0")
                if (out[i][j] == 0) != (out[j][i] == 0):
                    raise InputError(f"zero pattern not symmetric at ({i},{j})")
    return tuple(out)


def _coefficient_closure(cartan, cap: int = 600) -> int:
    """Count roots by reflecting coordinate vectors through the Cartan rows."""
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * c[j] for j in range(n))
                img = tuple(x - pairing if k == i else x for k, x in enumerate(c))
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        if len(roots) > cap:
            raise InputError(
                "root closure does not terminate below the bound: "
                "not a finite-type Cartan matrix")
        frontier = nxt
    return len(roots)


def _candidate_names(rank: int) -> list[str]:
    names = [f"A{rank}"]
    if rank >= 2:
        names += [f"B{rank}", f"C{rank}"]
    if rank >= 4:
        names.append(f"D{rank}")
    if rank == 2:
        names.append("G2")
    if rank == 4:
        names.append("F4")
    if rank in (6, 7, 8):
        names.append(f"E{rank}")
    return names


def _classify_irreducible(cartan: list[list[int]]) -> tuple[str, list[int]]:
    """Match a connected Cartan block against the named types.

    Returns (name, perm) with perm[k] = node of the standard matrix
    corresponding to input node k.
    """
    n = len(cartan)
    for name in _candidate_names(n):
        dim, simple = _simple_roots_named(name[0], int(name[1:]))
        std = _cartan_matrix(simple)
        perm = _find_matrix_isomorphism(cartan, std)
        if perm is not None:
            return name, perm
    raise InputError("connected Cartan block matches no finite type")


def _find_matrix_isomorphism(a, b) -> list[int] | None:
    """Backtracking search for perm with a[i][j] == b[perm[i]][perm[j]]."""
    n = len(a)
    perm: list[int] = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for cand in range(n):
            if used[cand]:
                continue
            ok = True
            for j in range(i):
                if a[i][j] != b[cand][perm[j]] or a[j][i] != b[perm[j]][cand]:
                    ok = False
                    break
            if ok:
                perm[i] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                used[cand] = False
        return False

    return perm if extend(0) else None


def diagram_automorphisms(rs: RootSystem) -> list[tuple[int, ...]]:
    """All node permutations preserving the Cartan matrix."""
    n = rs.rank
    autos = []

    def extend(i: int, perm: list[int], used: list[bool]) -> None:
        if i == n:
            autos.append(tuple(perm))
            return
        for cand in range(n):
            if used[cand]:
                continue
            if rs.cartan[i][i] != rs.cartan[cand][cand]:
                continue
            if all(rs.cartan[i][j] == rs.cartan[cand][perm[j]]
                   and rs.cartan[j][i] == rs.cartan[perm[j]][cand]
                   for j in range(i)):
                perm[i] = cand
                used[cand] = True
                extend(i + 1, perm, used)
                used[cand] = False

    extend(0, [-1] * n, [False] * n)
    return autos


# ---------------------------------------------------------------------------
# sphere geometry: sign-exact angle comparisons


def angle_class(u: Vector, v: Vector) -> AngleClass:
    """Classify the angle between two directions by the sign of their pairing."""
    _require_nonzero(u)
    _require_nonzero(v)
    p = dot(u, v)
    if p > 0:
        return AngleClass.ACUTE
    if p == 0:
        return AngleClass.RIGHT
    return AngleClass.OBTUSE


# radius tokens with rational squared cosine: (sign of cos r, cos^2 r)
EXACT_ANGLES: dict[str, tuple[int, Q]] = {
    "pi/6": (1, Q(3, 4)),
    "pi/4": (1, Q(1, 2)),
    "pi/3": (1, Q(1, 4)),
    "pi/2": (0, Q(0)),
    "2pi/3": (-1, Q(1, 4)),
    "3pi/4": (-1, Q(1, 2)),
    "5pi/6": (-1, Q(3, 4)),
}


class AngleComparison(NamedTuple):
    relation: Cmp
    exact: bool
    ambiguous: bool


def compare_angle_to(u: Vector, v: Vector, r, tolerance: float = 1e-12) -> AngleComparison:
    """Three-way comparison of the angle between u and v against a radius.

    Radii from EXACT_ANGLES are decided exactly by comparing (u,v)^2 against
    cos^2(r)·|u|^2|v|^2 with sign bookkeeping. Any other (float) radius uses
    floating point; results inside the tolerance band come back as EQUAL with
    the ambiguous flag set, never silently rounded.
    """
    _require_nonzero(u)
    _require_nonzero(v)
    if isinstance(r, str):
        if r not in EXACT_ANGLES:
            raise InputError(
                f"unknown angle token {r!r}; exact radii are {sorted(EXACT_ANGLES)}")
        sign, cos2 = EXACT_ANGLES[r]
        c = dot(u, v)
        nn = dot(u, u) * dot(v, v)
        if sign == 0:
            if c > 0:
                rel = Cmp.LESS
            elif c == 0:
                rel = Cmp.EQUAL
            else:
                rel = Cmp.GREATER
        elif sign > 0:
            if c <= 0:
                rel = Cmp.GREATER
            else:
                d = c * c - cos2 * nn
                rel = Cmp.LESS if d > 0 else Cmp.EQUAL if d == 0 else Cmp.GREATER
        else:
            if c >= 0:
                rel = Cmp.LESS
            else:
                d = c * c - cos2 * nn
                rel = Cmp.GREATER if d > 0 else Cmp.EQUAL if d == 0 else Cmp.LESS
        return AngleComparison(rel, exact=True, ambiguous=False)
    # approximate mode
    import math
    rf = float(r)
    if not 0 < rf < math.pi:
        raise InputError(f"radius must lie in (0, pi), got {rf}")
    cos_angle = float(dot(u, v)) / math.sqrt(float(dot(u, u)) * float(dot(v, v)))
    diff = cos_angle - math.cos(rf)
    if abs(diff) < tolerance:
        return AngleComparison(Cmp.EQUAL, exact=False, ambiguous=True)
    rel = Cmp.LESS if diff > 0 else Cmp.GREATER
    return AngleComparison(rel, exact=False, ambiguous=False)


def iota_invariant_center(rs: RootSystem) -> TypePoint:
    """Regular chamber direction fixed by the standard involution.

    The sum of the fundamental weights works: the involution permutes the
    weights, so their sum is fixed; it pairs strictly positively with every
    simple root.
    """
    rho = rs.fundamental_weights()[0]
    for w in rs.fundamental_weights()[1:]:
        rho = add(rho, w)
    return rs.type_point(_clear_denominators(rho))


def is_root_type(rs: RootSystem, t: TypePoint) -> bool:
    """True iff the direction is positively proportional to a root."""
    v = t.vector
    for root in rs.all_roots:
        k = next(i for i, x in enumerate(root) if x != 0)
        if v[k] == 0:
            continue
        lam = v[k] / root[k]
        if lam > 0 and all(x == lam * y for x, y in zip(v, root)):
            return True
    return False
