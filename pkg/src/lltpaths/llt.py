"""Colorings and orientations of decorated unit-interval graphs.

Two combinatorial models live here.  The coloring model sums
q^{asc(kappa)} x_kappa over all vertex colorings that strictly increase
along strict edges, giving the vertical-strip polynomial of a path in
the monomial basis.  The orientation model sums q^{asc(theta)}
e_{lambda(theta)} over all orientations whose restriction to the strict
edges points low-to-high; substituting q -> q-1 in that sum recovers the
same symmetric function, which is the identity the verification suites
exercise on exhaustive small instances.

All enumerations tally integer counts first and only then build exact
coefficients, so the hot loops never touch Fraction arithmetic.  The
module-level caches are keyed by path word; inserts are idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffring import CoeffQT
from .errors import BoundExceeded, HasDiagonal, InvalidColoring
from .partitions import partitions_of
from .schroeder import DecoratedGraph, SchroederPath, graph
from .symfunc import SymFunc

SIZE_BOUND = 7
AREA_BOUND = 20

_LLT_CACHE: dict[str, SymFunc] = {}
_ORIENT_CACHE: dict[str, SymFunc] = {}
_CHROMATIC_CACHE: dict[str, SymFunc] = {}


Coloring = tuple[int, ...]


@dataclass(frozen=True)
class Orientation:
    """One directed edge per edge of a decorated graph.

    Strict edges are always directed low-to-high (the natural
    orientation); an ascending edge is a non-strict edge directed
    low-to-high.
    """

    directed: frozenset[tuple[int, int]]

    def to_obj(self) -> dict:
        return {"directed": [list(e) for e in sorted(self.directed)]}


def asc_coloring(g: DecoratedGraph, kappa: Coloring) -> int:
    """Number of ascents of a coloring; validates the strict-edge constraints."""
    if len(kappa) != g.n or any(c < 1 for c in kappa):
        raise InvalidColoring(f"need {g.n} positive colors")
    count = 0
    for (x, y) in g.edges:
        if (x, y) in g.strict:
            if not kappa[x - 1] < kappa[y - 1]:
                raise InvalidColoring(f"strict edge ({x},{y}) needs increasing colors")
        elif kappa[x - 1] < kappa[y - 1]:
            count += 1
    return count


def swap_coloring(g: DecoratedGraph, kappa: Coloring, x: int, y: int) -> Coloring:
    """Exchange the colors of the adjacent vertices x and y = x+1."""
    if y != x + 1:
        raise ValueError("the swap map exchanges adjacent vertices only")
    out = list(kappa)
    out[x - 1], out[y - 1] = out[y - 1], out[x - 1]
    return tuple(out)


def _ascent_tally_by_content(g: DecoratedGraph, content: tuple[int, ...]) -> dict[int, int]:
    """Count colorings with exactly content[i] vertices of color i+1, by ascent number.

    Backtracks over vertices in increasing order; strict-edge violations
    prune immediately, ascents accumulate incrementally.
    """
    lower = g.lower_neighbors()
    remaining = list(content)
    ncolors = len(content)
    tally: dict[int, int] = {}

    def rec(v: int, asc: int) -> None:
        if v > g.n:
            tally[asc] = tally.get(asc, 0) + 1
            return
        for color in range(1, ncolors + 1):
            if remaining[color - 1] == 0:
                continue
            add = 0
            ok = True
            for (u, is_strict) in lower[v]:
                if is_strict:
                    if not colors[u] < color:
                        ok = False
                        break
                elif colors[u] < color:
                    add += 1
            if not ok:
                continue
            colors[v] = color
            remaining[color - 1] -= 1
            rec(v + 1, asc + add)
            remaining[color - 1] += 1

    colors = [0] * (g.n + 1)
    rec(1, 0)
    return tally


def llt(path: SchroederPath, bound: int = SIZE_BOUND) -> SymFunc:
    """The coloring generating function of the path, in the m-basis.

    The m_lam coefficient collects the colorings whose content is the
    canonical arrangement (lam_1 vertices of color 1, lam_2 of color 2,
    and so on); colors beyond [n] never occur since the function is
    homogeneous of degree n.
    """
    cached = _LLT_CACHE.get(path.word)
    if cached is not None:
        return cached
    n = path.size
    if n > bound:
        raise BoundExceeded(f"llt on size {n} exceeds bound {bound}")
    g = graph(path)
    coeffs = {}
    for lam in partitions_of(n):
        tally = _ascent_tally_by_content(g, lam)
        if tally:
            coeffs[lam] = CoeffQT({(a, 0): c for a, c in tally.items()})
    out = SymFunc("m", coeffs)
    _LLT_CACHE[path.word] = out
    return out


def content_coefficient(path: SchroederPath, content: tuple[int, ...]) -> CoeffQT:
    """Coefficient of the monomial x_1^c1 x_2^c2 ... in the coloring sum.

    Accepts arbitrary compositions, which makes the symmetry of the
    coloring sum directly testable.
    """
    tally = _ascent_tally_by_content(graph(path), content)
    return CoeffQT({(a, 0): c for a, c in tally.items()})


def orientations(path: SchroederPath, area_bound: int = AREA_BOUND) -> list[Orientation]:
    """All orientations of the graph of P with strict edges directed upward."""
    g = graph(path)
    free = g.nonstrict_edges()
    if len(free) > area_bound:
        raise BoundExceeded(f"area {len(free)} exceeds bound {area_bound}")
    base = [(x, y) for (x, y) in sorted(g.strict)]
    out = []
    for mask in range(1 << len(free)):
        directed = list(base)
        for i, (x, y) in enumerate(free):
            directed.append((x, y) if (mask >> i) & 1 else (y, x))
        out.append(Orientation(frozenset(directed)))
    return out


def asc_orientation(g: DecoratedGraph, theta: Orientation) -> int:
    """Number of ascending (non-strict, upward) edges of the orientation."""
    return sum(
        1 for (u, v) in theta.directed if u < v and (u, v) not in g.strict
    )


def hrv(g: DecoratedGraph, theta: Orientation, u: int) -> int:
    """Highest vertex reachable from u along strict and ascending edges."""
    up: list[list[int]] = [[] for _ in range(g.n + 1)]
    for (a, b) in theta.directed:
        if a < b:  # strict edges and ascending edges both point upward
            up[a].append(b)
    best = list(range(g.n + 1))
    for v in range(g.n, 0, -1):
        for w in up[v]:
            if best[w] > best[v]:
                best[v] = best[w]
    return best[u]


def lambda_theta(g: DecoratedGraph, theta: Orientation) -> tuple[int, ...]:
    """Block sizes of the highest-reachable-vertex partition, sorted decreasingly."""
    up: list[list[int]] = [[] for _ in range(g.n + 1)]
    for (a, b) in theta.directed:
        if a < b:
            up[a].append(b)
    best = list(range(g.n + 1))
    for v in range(g.n, 0, -1):
        for w in up[v]:
            if best[w] > best[v]:
                best[v] = best[w]
    sizes: dict[int, int] = {}
    for v in range(1, g.n + 1):
        sizes[best[v]] = sizes.get(best[v], 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def _orientation_tally(path: SchroederPath, area_bound: int = AREA_BOUND) -> dict[tuple[int, ...], dict[int, int]]:
    """For each partition lam, count orientations with lambda(theta) = lam by ascent.

    The bitmask enumeration over non-strict edges is the hot loop of the
    whole package; everything here is small ints.
    """
    g = graph(path)
    n = g.n
    free = g.nonstrict_edges()
    if len(free) > area_bound:
        raise BoundExceeded(f"area {len(free)} exceeds bound {area_bound}")
    strict_up = [[] for _ in range(n + 1)]
    for (x, y) in g.strict:
        strict_up[x].append(y)
    free_up = [[] for _ in range(n + 1)]
    for i, (x, y) in enumerate(free):
        free_up[x].append((1 << i, y))
    tally: dict[tuple[int, ...], dict[int, int]] = {}
    vertex_order = list(range(n, 0, -1))
    for mask in range(1 << len(free)):
        best = list(range(n + 1))
        for v in vertex_order:
            b = v
            for w in strict_up[v]:
                if best[w] > b:
                    b = best[w]
            for bit, w in free_up[v]:
                if mask & bit and best[w] > b:
                    b = best[w]
            best[v] = b
        sizes: dict[int, int] = {}
        for v in range(1, n + 1):
            sizes[best[v]] = sizes.get(best[v], 0) + 1
        lam = tuple(sorted(sizes.values(), reverse=True))
        asc = bin(mask).count("1")
        inner = tally.setdefault(lam, {})
        inner[asc] = inner.get(asc, 0) + 1
    return tally


def orientation_e_expansion(path: SchroederPath, area_bound: int = AREA_BOUND) -> SymFunc:
    """Sum of q^{asc(theta)} e_{lambda(theta)} over all orientations.

    This is the e-positive expansion of the coloring sum with q shifted
    by one: it equals llt(path) after the substitution q -> q+1.
    """
    cached = _ORIENT_CACHE.get(path.word)
    if cached is not None:
        return cached
    tally = _orientation_tally(path, area_bound)
    out = SymFunc(
        "e",
        {lam: CoeffQT({(a, 0): c for a, c in inner.items()}) for lam, inner in tally.items()},
    )
    _ORIENT_CACHE[path.word] = out
    return out


def llt_via_orientations(path: SchroederPath, area_bound: int = AREA_BOUND) -> SymFunc:
    """The orientation sum with q -> q-1: contractually equal to llt(path) in e."""
    return orientation_e_expansion(path, area_bound).shift_q(-1)


def chromatic(path: SchroederPath, bound: int = SIZE_BOUND) -> SymFunc:
    """Chromatic quasisymmetric function of the unit-interval graph of a Dyck path.

    Proper colorings (adjacent colors distinct) weighted by the same
    ascent statistic as the coloring sum, returned in the m-basis.
    """
    if not path.is_dyck():
        raise HasDiagonal(f"{path.word!r} has diagonal steps")
    cached = _CHROMATIC_CACHE.get(path.word)
    if cached is not None:
        return cached
    n = path.size
    if n > bound:
        raise BoundExceeded(f"chromatic on size {n} exceeds bound {bound}")
    g = graph(path)
    lower = g.lower_neighbors()
    coeffs = {}
    for lam in partitions_of(n):
        remaining = list(lam)
        ncolors = len(lam)
        tally: dict[int, int] = {}
        colors = [0] * (n + 1)

        def rec(v: int, asc: int) -> None:
            if v > n:
                tally[asc] = tally.get(asc, 0) + 1
                return
            for color in range(1, ncolors + 1):
                if remaining[color - 1] == 0:
                    continue
                add = 0
                ok = True
                for (u, _strict) in lower[v]:
                    if colors[u] == color:
                        ok = False
                        break
                    if colors[u] < color:
                        add += 1
                if not ok:
                    continue
                colors[v] = color
                remaining[color - 1] -= 1
                rec(v + 1, asc + add)
                remaining[color - 1] += 1

        rec(1, 0)
        if tally:
            coeffs[lam] = CoeffQT({(a, 0): c for a, c in tally.items()})
    out = SymFunc("m", coeffs)
    _CHROMATIC_CACHE[path.word] = out
    return out


def coloring_weight_split(path: SchroederPath, x: int):
    """Weight enumerators of colorings split by the comparison at (x, x+1).

    Colors run over [n].  Returns (lower, upper): dicts mapping a content
    vector to the ascent tally of the colorings with kappa(x) < kappa(x+1)
    resp. kappa(x) > kappa(x+1).  Used to check the swap-map identity.
    """
    g = graph(path)
    n = g.n
    lower_nb = g.lower_neighbors()
    y = x + 1
    lower: dict[tuple[int, ...], dict[int, int]] = {}
    upper: dict[tuple[int, ...], dict[int, int]] = {}
    colors = [0] * (n + 1)

    def rec(v: int, asc: int) -> None:
        if v > n:
            if colors[x] == colors[y]:
                return
            content = [0] * n
            for u in range(1, n + 1):
                content[colors[u] - 1] += 1
            target = lower if colors[x] < colors[y] else upper
            inner = target.setdefault(tuple(content), {})
            inner[asc] = inner.get(asc, 0) + 1
            return
        for color in range(1, n + 1):
            add = 0
            ok = True
            for (u, is_strict) in lower_nb[v]:
                if is_strict:
                    if not colors[u] < color:
                        ok = False
                        break
                elif colors[u] < color:
                    add += 1
            if not ok:
                continue
            colors[v] = color
            rec(v + 1, asc + add)
        colors[v] = 0

    rec(1, 0)
    return lower, upper
