"""Matroid union: partitioning, weighted coverings, chromatic numbers.

The single engine is an augmenting-path search over the exchange digraph:
insert elements one at a time; arcs go from an element e to each member of
the fundamental circuit of e in a class it could join, and a breadth-first
search looks for a chain of exchanges ending in a direct insertion. When no
chain exists, the set of elements reachable from the new element certifies
infeasibility (its ranks sum below its demand).

Weighted coverings reduce to plain partitioning by replicating each element
into W(e) parallel copies; certificates project back by support.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .matroids import (
    IncrementalIndependence,
    LoopError,
    Matroid,
    MatroidError,
)


class CoveringError(ValueError):
    """A covering family fails verification."""


@dataclass(frozen=True)
class ViolationCertificate:
    """A set whose summed ranks fall short of its demand.

    rank_sum is sum_i r_i(A ∩ Q_i) over the classes (Q_i = elements allowed
    in class i, the full ground set when unrestricted); demand is
    sum_{e in A} W(e). Always rank_sum < demand.
    """

    subset: frozenset[int]
    rank_sum: int
    demand: int


@dataclass(frozen=True)
class CoveringFamily:
    """Subsets V_1..V_d, one per class; repeats across classes allowed."""

    classes: tuple[frozenset[int], ...]

    def multiplicities(self, n: int) -> list[int]:
        w = [0] * n
        for cls in self.classes:
            for e in cls:
                w[e] += 1
        return w

    def verify(
        self,
        matroids: Sequence[Matroid],
        weights: int | Sequence[int] | Mapping[int, int] = 1,
        allowed: Sequence[frozenset[int]] | None = None,
    ) -> None:
        """Re-check the family against the oracles; raise CoveringError."""
        if len(self.classes) != len(matroids):
            raise CoveringError("class count does not match matroid count")
        n = matroids[0].n
        w = normalize_weights(weights, n)
        got = self.multiplicities(n)
        for e in range(n):
            if got[e] != w[e]:
                raise CoveringError(
                    f"element {e} covered {got[e]} times, expected {w[e]}"
                )
        for i, cls in enumerate(self.classes):
            if not matroids[i].is_independent(cls):
                raise CoveringError(f"class {i} is dependent")
            if allowed is not None:
                for e in cls:
                    if i not in allowed[e]:
                        raise CoveringError(f"element {e} not allowed in class {i}")


def normalize_weights(
    weights: int | Sequence[int] | Mapping[int, int], n: int
) -> tuple[int, ...]:
    if isinstance(weights, int):
        w = [weights] * n
    elif isinstance(weights, Mapping):
        w = [int(weights.get(e, 0)) for e in range(n)]
    else:
        w = [int(x) for x in weights]
        if len(w) != n:
            raise ValueError("weight vector length does not match ground size")
    for e, we in enumerate(w):
        if we < 0:
            raise ValueError(f"negative weight for element {e}")
    return tuple(w)


class _ReplicaMatroid(Matroid):
    """Parallel extension used by the replication reduction.

    Items are copies of ground elements; two copies of the same element are
    mutually dependent, otherwise independence is inherited from the base.
    """

    def __init__(self, base: Matroid, support: Sequence[int]):
        self.base = base
        self.support = tuple(support)
        from .matroids import GroundSet

        self.ground = GroundSet(len(self.support), None)

    def is_independent(self, elems: Iterable[int]) -> bool:
        items = frozenset(elems)
        supp = {self.support[it] for it in items}
        if len(supp) != len(items):
            return False
        return self.base.is_independent(supp)

    def _fresh_incremental(self) -> IncrementalIndependence:
        return _ReplicaIncremental(self)

    def _circuit_in(self, base: frozenset[int], x: int) -> frozenset[int]:
        sx = self.support[x]
        by_supp = {self.support[it]: it for it in base}
        if sx in by_supp:
            return frozenset((x, by_supp[sx]))
        circ = self.base.fundamental_circuit(by_supp.keys(), sx)
        return frozenset(by_supp[e] for e in circ if e != sx) | {x}


class _ReplicaIncremental(IncrementalIndependence):
    def __init__(self, matroid: _ReplicaMatroid):
        self._m = matroid
        self._members: set[int] = set()
        self._supports: set[int] = set()
        self._inner = matroid.base.incremental()

    def can_add(self, e: int) -> bool:
        s = self._m.support[e]
        if s in self._supports:
            return False
        return self._inner.can_add(s)

    def add(self, e: int) -> None:
        s = self._m.support[e]
        if s in self._supports:
            raise MatroidError(f"parallel copy of element {s} already present")
        self._inner.add(s)
        self._supports.add(s)
        self._members.add(e)

    def try_add(self, e: int) -> bool:
        s = self._m.support[e]
        if s in self._supports:
            return False
        if self._inner.try_add(s):
            self._supports.add(s)
            self._members.add(e)
            return True
        return False

    def clone(self) -> "_ReplicaIncremental":
        c = type(self).__new__(type(self))
        c._m = self._m
        c._members = set(self._members)
        c._supports = set(self._supports)
        c._inner = self._inner.clone()
        return c


def _run_partition(
    matroids: Sequence[Matroid],
    allowed: Sequence[frozenset[int]] | None,
) -> tuple[list[set[int]] | None, set[int] | None]:
    """Core exchange-digraph search.

    Returns (classes, None) on success or (None, reached) where reached is
    the certificate set of the element that could not be inserted.
    """
    d = len(matroids)
    n = matroids[0].n
    classes: list[set[int]] = [set() for _ in range(d)]
    incs = [m.incremental() for m in matroids]
    owner = [-1] * n

    for x in range(n):
        parent: dict[int, int | None] = {x: None}
        queue: deque[int] = deque((x,))
        found: tuple[int, int] | None = None
        while queue and found is None:
            e = queue.popleft()
            opts = allowed[e] if allowed is not None else None
            blocked: list[int] = []
            for i in range(d):
                if opts is not None and i not in opts:
                    continue
                if owner[e] == i:
                    continue
                if incs[i].can_add(e):
                    found = (e, i)
                    break
                blocked.append(i)
            if found is not None:
                break
            for i in blocked:
                circ = matroids[i].fundamental_circuit(classes[i], e)
                for f in sorted(circ):
                    if f != e and f not in parent:
                        parent[f] = e
                        queue.append(f)
        if found is None:
            return None, set(parent)
        e, i = found
        touched: set[int] = set()
        while True:
            prev = owner[e]
            classes[i].add(e)
            owner[e] = i
            touched.add(i)
            if prev >= 0:
                classes[prev].remove(e)
                touched.add(prev)
            p = parent[e]
            if p is None:
                break
            e, i = p, prev
        for i in touched:
            inc = matroids[i].incremental()
            for f in sorted(classes[i]):
                inc.add(f)
            incs[i] = inc
    return classes, None


def _common_ground(matroids: Sequence[Matroid]) -> int:
    if not matroids:
        raise ValueError("need at least one matroid")
    n = matroids[0].n
    for m in matroids[1:]:
        if m.n != n:
            raise MatroidError("matroids must share the ground set")
    return n


def w_covering(
    matroids: Sequence[Matroid],
    weights: int | Sequence[int] | Mapping[int, int] = 1,
    allowed: Sequence[frozenset[int]] | None = None,
) -> CoveringFamily | ViolationCertificate:
    """Cover each element e by exactly W(e) classes, class i independent in
    matroids[i]; or certify infeasibility.

    `allowed` optionally restricts which classes may contain each element
    (rank sums in certificates then use the restricted classes).
    """
    n = _common_ground(matroids)
    d = len(matroids)
    w = normalize_weights(weights, n)
    if allowed is not None and len(allowed) != n:
        raise ValueError("allowed-class vector length does not match ground size")

    support: list[int] = []
    for e in range(n):
        support.extend([e] * w[e])
    replicas = [_ReplicaMatroid(m, support) for m in matroids]
    item_allowed = None
    if allowed is not None:
        item_allowed = [allowed[s] for s in support]

    classes, reached = _run_partition(replicas, item_allowed)
    if classes is not None:
        fam = CoveringFamily(
            tuple(frozenset(support[it] for it in cls) for cls in classes)
        )
        fam.verify(matroids, w, allowed)
        return fam

    assert reached is not None
    subset = frozenset(support[it] for it in reached)
    rank_sum = 0
    for i, m in enumerate(matroids):
        if allowed is None:
            part = subset
        else:
            part = frozenset(e for e in subset if i in allowed[e])
        rank_sum += m.rank(part)
    demand = sum(w[e] for e in subset)
    if rank_sum >= demand:
        raise AssertionError("internal error: certificate fails its own inequality")
    return ViolationCertificate(subset, rank_sum, demand)


def matroid_partition(
    matroids: Sequence[Matroid],
    allowed: Sequence[frozenset[int]] | None = None,
) -> CoveringFamily | ViolationCertificate:
    """Partition the ground set into classes independent per matroid."""
    return w_covering(matroids, 1, allowed)


def brute_force_condition2(
    matroids: Sequence[Matroid],
    weights: int | Sequence[int] | Mapping[int, int] = 1,
    allowed: Sequence[frozenset[int]] | None = None,
    cap: int = 20,
) -> tuple[bool, frozenset[int], int, int]:
    """Check sum_i r_i(A) >= sum_{e in A} W(e) for every subset A.

    Independent oracle for w_covering feasibility; exponential, capped.
    Returns (ok, worst A, its rank sum, its demand).
    """
    n = _common_ground(matroids)
    if n > cap:
        raise ValueError(f"ground set of size {n} exceeds the cap {cap}")
    w = normalize_weights(weights, n)
    worst = frozenset()
    worst_lhs, worst_rhs = 0, 0
    worst_slack = 0
    for mask in range(1 << n):
        subset = frozenset(e for e in range(n) if mask >> e & 1)
        lhs = 0
        for i, m in enumerate(matroids):
            if allowed is None:
                part = subset
            else:
                part = frozenset(e for e in subset if i in allowed[e])
            lhs += m.rank(part)
        rhs = sum(w[e] for e in subset)
        if lhs - rhs < worst_slack:
            worst, worst_lhs, worst_rhs = subset, lhs, rhs
            worst_slack = lhs - rhs
    return worst_slack >= 0, worst, worst_lhs, worst_rhs


def _require_loopless(matroid: Matroid) -> None:
    loops = matroid.loops()
    if loops:
        raise LoopError(f"matroid has loops: {loops}")


def chromatic_number(matroid: Matroid) -> tuple[int, CoveringFamily]:
    """Least number of independent sets partitioning the ground set."""
    if matroid.n == 0:
        return 0, CoveringFamily(())
    _require_loopless(matroid)
    r = matroid.full_rank
    start = max(1, -(-matroid.n // r))
    for d in range(start, matroid.n + 1):
        result = matroid_partition([matroid] * d)
        if isinstance(result, CoveringFamily):
            return d, result
    raise AssertionError("unreachable: n singleton classes always partition")


@dataclass(frozen=True)
class FractionalResult:
    """Exact fractional chromatic number with witnesses."""

    value: Fraction
    cover_multiplicity: int
    cover_size: int
    covering: CoveringFamily
    witness_set: frozenset[int] | None = None


def _ceil_fraction(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def fractional_chromatic(
    matroid: Matroid, with_witness_set: bool = False, witness_cap: int = 15
) -> FractionalResult:
    """Exact max |A| / r(A), as the best ratio b/a of an a-covering by b
    independent sets, searching multiplicities a up to the full rank.

    Infeasible probes return certificate sets whose ratio tightens the lower
    bound, so the search exits as soon as the bound is attained.
    """
    if matroid.n == 0:
        return FractionalResult(Fraction(0), 1, 0, CoveringFamily(()))
    _require_loopless(matroid)
    n = matroid.n
    r = matroid.full_rank
    lower = Fraction(n, r)
    best: Fraction | None = None
    best_witness: tuple[int, int, CoveringFamily] | None = None
    for a in range(1, r + 1):
        b = _ceil_fraction(a * lower)
        while best is None or Fraction(b, a) < best:
            result = w_covering([matroid] * b, a)
            if isinstance(result, CoveringFamily):
                best = Fraction(b, a)
                best_witness = (a, b, result)
                break
            ratio = Fraction(len(result.subset), matroid.rank(result.subset) * 1)
            if ratio > lower:
                lower = ratio
            b = max(b + 1, _ceil_fraction(a * lower))
        if best is not None and best == lower:
            break
    assert best is not None and best_witness is not None
    witness_set = None
    if with_witness_set:
        if n > witness_cap:
            raise ValueError(f"witness enumeration capped at {witness_cap} elements")
        witness_set = max(
            (
                frozenset(e for e in range(n) if mask >> e & 1)
                for mask in range(1, 1 << n)
            ),
            key=lambda s: (Fraction(len(s), matroid.rank(s)), -len(s)),
        )
    a, b, covering = best_witness
    return FractionalResult(best, a, b, covering, witness_set)
