"""List colorings of matroids and basis-exchange consequences.

Coloring from lists is covering in disguise: with Q_i the elements whose
lists contain color i, a W-coloring from lists exists exactly when the
ground set has a W-covering by sets independent in the restrictions to Q_i.
The reduction runs the union engine with per-element allowed classes, so a
single matroid object serves every color.

The basis-exchange operations pick lists and weights so that the color
classes of a W-coloring are the exchanged bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .matroids import GraphicMatroid, Matroid, MatroidError
from .union import (
    CoveringError,
    ViolationCertificate,
    normalize_weights,
    w_covering,
)


@dataclass(frozen=True)
class WColoring:
    """Chosen color sets per element; class of any color is independent."""

    chosen: tuple[frozenset[int], ...]

    @property
    def colors(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.chosen:
            out |= s
        return frozenset(out)

    def color_class(self, color: int) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self.chosen) if color in s)

    def verify(
        self,
        matroid: Matroid,
        lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]],
        weights: int | Sequence[int] | Mapping[int, int] = 1,
    ) -> None:
        n = matroid.n
        w = normalize_weights(weights, n)
        ls = _normalize_lists(lists, n)
        for e in range(n):
            if len(self.chosen[e]) != w[e]:
                raise CoveringError(
                    f"element {e} has {len(self.chosen[e])} colors, wants {w[e]}"
                )
            if not self.chosen[e] <= ls[e]:
                raise CoveringError(f"element {e} uses colors outside its list")
        for color in self.colors:
            if not matroid.is_independent(self.color_class(color)):
                raise CoveringError(f"class of color {color} is dependent")


def _normalize_lists(
    lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]], n: int
) -> list[frozenset[int]]:
    if isinstance(lists, Mapping):
        return [frozenset(lists.get(e, ())) for e in range(n)]
    if len(lists) != n:
        raise ValueError("list assignment length does not match ground size")
    return [frozenset(s) for s in lists]


def color_from_lists(
    matroid: Matroid,
    lists: Sequence[Iterable[int]] | Mapping[int, Iterable[int]],
    weights: int | Sequence[int] | Mapping[int, int] = 1,
) -> WColoring | ViolationCertificate:
    """Choose W(e) colors from L(e) per element with independent classes,
    or certify that no such choice exists."""
    n = matroid.n
    w = normalize_weights(weights, n)
    ls = _normalize_lists(lists, n)
    for e in range(n):
        if len(ls[e]) < w[e]:
            raise ValueError(f"list of element {e} is smaller than its demand")
    palette = sorted(set().union(*ls)) if ls else []
    if not palette:
        # all demands are zero, nothing to choose
        return WColoring(tuple(frozenset() for _ in range(n)))
    index = {c: i for i, c in enumerate(palette)}
    allowed = [frozenset(index[c] for c in ls[e]) for e in range(n)]
    result = w_covering([matroid] * len(palette), w, allowed)
    if isinstance(result, ViolationCertificate):
        return result
    chosen = [set() for _ in range(n)]
    for i, cls in enumerate(result.classes):
        for e in cls:
            chosen[e].add(palette[i])
    coloring = WColoring(tuple(frozenset(s) for s in chosen))
    coloring.verify(matroid, ls, w)
    return coloring


def canonical_lists(sizes: Sequence[int]) -> list[frozenset[int]]:
    """The lists {1..l(e)} for a size function l."""
    return [frozenset(range(1, s + 1)) for s in sizes]


def check_condition3(
    matroid: Matroid,
    sizes: Sequence[int] | Mapping[int, int],
    weights: int | Sequence[int] | Mapping[int, int] = 1,
) -> tuple[bool, WColoring | ViolationCertificate]:
    """Is the matroid W-colorable from every list assignment of these sizes?

    Equivalent to W-colorability from the canonical lists {1..l(e)}, decided
    constructively; the second component is the coloring or a certificate
    subset A with sum_i r({e in A : l(e) >= i}) < sum_{e in A} W(e).
    """
    n = matroid.n
    s = normalize_weights(sizes, n)
    w = normalize_weights(weights, n)
    for e in range(n):
        if s[e] < w[e]:
            # the singleton {e} already violates the graded inequality
            rank_sum = s[e] * matroid.rank((e,))
            return False, ViolationCertificate(frozenset((e,)), rank_sum, w[e])
    result = color_from_lists(matroid, canonical_lists(s), w)
    if isinstance(result, WColoring):
        return True, result
    return False, result


def condition3_bruteforce(
    matroid: Matroid,
    sizes: Sequence[int] | Mapping[int, int],
    weights: int | Sequence[int] | Mapping[int, int] = 1,
    cap: int = 12,
) -> tuple[bool, frozenset[int] | None]:
    """Enumerate every subset A and test the graded rank inequality."""
    n = matroid.n
    if n > cap:
        raise ValueError(f"ground set of size {n} exceeds the cap {cap}")
    s = normalize_weights(sizes, n)
    w = normalize_weights(weights, n)
    top = max(s, default=0)
    for mask in range(1 << n):
        subset = [e for e in range(n) if mask >> e & 1]
        rhs = sum(w[e] for e in subset)
        lhs = 0
        for i in range(1, top + 1):
            lhs += matroid.rank([e for e in subset if s[e] >= i])
            if lhs >= rhs:
                break
        if lhs < rhs:
            return False, frozenset(subset)
    return True, None


def _require_basis(matroid: Matroid, elems: frozenset[int], name: str) -> None:
    if not matroid.is_basis(elems):
        raise MatroidError(f"{name} is not a basis")


def multiple_basis_exchange(
    matroid: Matroid,
    basis1: Iterable[int],
    basis2: Iterable[int],
    part1: Iterable[int],
) -> frozenset[int]:
    """Find A2 inside basis2 so that swapping A1 and A2 keeps both bases.

    Returns A2 with (B1 \\ A1) + A2 and (B2 \\ A2) + A1 both bases.
    """
    b1 = frozenset(basis1)
    b2 = frozenset(basis2)
    a1 = frozenset(part1)
    _require_basis(matroid, b1, "basis1")
    _require_basis(matroid, b2, "basis2")
    if not a1 <= b1:
        raise MatroidError("the exchanged part must lie inside basis1")

    common = b1 & b2
    minor = _contract_restrict(matroid, common, (b1 | b2) - common)
    vb1 = minor.from_base(b1 - common)
    vb2 = minor.from_base(b2 - common)
    va1 = minor.from_base(a1 - common)

    lists = []
    for e in range(minor.n):
        if e in va1:
            lists.append(frozenset((1,)))
        elif e in vb1:
            lists.append(frozenset((2,)))
        else:
            lists.append(frozenset((1, 2)))
    coloring = color_from_lists(minor, lists, 1)
    if not isinstance(coloring, WColoring):
        raise AssertionError("basis exchange instance was infeasible")
    va2 = coloring.color_class(2) & vb2
    return minor.to_base(va2) | (a1 & b2)


def _contract_restrict(
    matroid: Matroid, away: frozenset[int], keep: Iterable[int]
):
    from .matroids import MinorView

    return MinorView(matroid, keep=keep, contracted=away)


def _check_parts(parts: Sequence[frozenset[int]], whole: frozenset[int]) -> None:
    seen: set[int] = set()
    for p in parts:
        if p & seen:
            raise MatroidError("parts overlap")
        seen |= p
    if seen != whole:
        raise MatroidError("parts do not cover the basis")


def partition_exchange_to_bases_of_b(
    matroid: Matroid,
    basis_a: Iterable[int],
    basis_b: Iterable[int],
    parts: Sequence[Iterable[int]],
) -> list[frozenset[int]]:
    """Split A as A_1..A_k so that every (B \\ B_i) + A_i is a basis."""
    a = frozenset(basis_a)
    b = frozenset(basis_b)
    ps = [frozenset(p) for p in parts]
    _require_basis(matroid, a, "basis_a")
    _require_basis(matroid, b, "basis_b")
    _check_parts(ps, b)
    k = len(ps)
    if k == 1:
        return [a]

    common = a & b
    minor = _contract_restrict(matroid, common, (a | b) - common)
    va = minor.from_base(a - common)
    vparts = [minor.from_base(p - common) for p in ps]

    full = frozenset(range(1, k + 1))
    lists: list[frozenset[int]] = [frozenset()] * minor.n
    weights = [0] * minor.n
    for e in va:
        lists[e] = full
        weights[e] = 1
    for i, vp in enumerate(vparts, start=1):
        for e in vp:
            lists[e] = full - {i}
            weights[e] = k - 1
    coloring = color_from_lists(minor, lists, weights)
    if not isinstance(coloring, WColoring):
        raise AssertionError("partition exchange instance was infeasible")
    out = []
    for i, p in enumerate(ps, start=1):
        vai = coloring.color_class(i) & va
        out.append(minor.to_base(vai) | (p & common))
    return out


def partition_exchange_to_bases_of_a(
    matroid: Matroid,
    basis_a: Iterable[int],
    basis_b: Iterable[int],
    parts: Sequence[Iterable[int]],
) -> list[frozenset[int]]:
    """Split A as A_1..A_k so that every (A \\ A_i) + B_i is a basis."""
    a = frozenset(basis_a)
    b = frozenset(basis_b)
    ps = [frozenset(p) for p in parts]
    _require_basis(matroid, a, "basis_a")
    _require_basis(matroid, b, "basis_b")
    _check_parts(ps, b)
    k = len(ps)
    if k == 1:
        return [a]

    common = a & b
    minor = _contract_restrict(matroid, common, (a | b) - common)
    va = minor.from_base(a - common)
    vparts = [minor.from_base(p - common) for p in ps]

    full = frozenset(range(1, k + 1))
    lists: list[frozenset[int]] = [frozenset()] * minor.n
    weights = [0] * minor.n
    for e in va:
        lists[e] = full
        weights[e] = k - 1
    for i, vp in enumerate(vparts, start=1):
        for e in vp:
            lists[e] = frozenset((i,))
            weights[e] = 1
    coloring = color_from_lists(minor, lists, weights)
    if not isinstance(coloring, WColoring):
        raise AssertionError("partition exchange instance was infeasible")
    out = []
    for i, p in enumerate(ps, start=1):
        vai = va - coloring.color_class(i)
        out.append(minor.to_base(vai) | (p & common))
    return out


def graph_degree_lists(graph: GraphicMatroid) -> list[int]:
    """Per-edge list sizes max(deg u, deg v) + 1."""
    deg = [0] * graph.num_vertices
    for u, v in graph.edges:
        deg[u] += 1
        deg[v] += 1
    return [max(deg[u], deg[v]) + 1 for u, v in graph.edges]
