"""Ground sets and matroid independence oracles.

The independence predicate is the primitive. Rank is derived by greedy
growth (correct by the exchange property), fundamental circuits by element
probing, and minors by rank translation. Concrete families override the
generic paths where the structure allows something faster: union-find for
graphic matroids, augmenting-path matching for transversal ones.

Elements are dense integer indices 0..n-1. String labels exist only at the
ingestion/UI boundary.
"""
from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class MatroidError(ValueError):
    """Invalid matroid construction or operation."""


class LoopError(MatroidError):
    """A singleton ground element is dependent; loops are rejected."""


@dataclass(frozen=True)
class AxiomWitness:
    """Evidence that a set family is not the independent sets of a matroid.

    kind is one of "empty" (the empty set is missing), "downward"
    (first is in the family but its subset second is not) or
    "augmentation" (no element of second \\ first can extend first).
    """

    kind: str
    first: frozenset[int]
    second: frozenset[int] | None = None

    def __str__(self) -> str:
        a = set(self.first)
        b = set(self.second) if self.second is not None else None
        return f"{self.kind} violation: {a} / {b}"


@dataclass(frozen=True)
class GroundSet:
    """Indexed ground set with optional unique string labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise MatroidError("ground set size must be nonnegative")
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise MatroidError("label count does not match ground size")
            if len(set(self.labels)) != self.size:
                raise MatroidError("labels must be unique")

    def label(self, e: int) -> str:
        if self.labels is not None:
            return self.labels[e]
        return f"e{e}"

    def index_of(self, label: str) -> int:
        if self.labels is None:
            if label.startswith("e") and label[1:].isdigit():
                return int(label[1:])
            raise KeyError(label)
        return self.labels.index(label)


def _as_indices(elems: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(elems)
    for e in s:
        if not (0 <= e < n):
            raise IndexError(f"element {e} out of range for ground set of size {n}")
    return s


class IncrementalIndependence:
    """Grow an independent set one element at a time.

    Generic oracle-backed implementation; families override with cheaper
    structures. `can_add` never mutates the committed set, `add` commits and
    raises MatroidError if the element cannot be added.
    """

    def __init__(self, matroid: "Matroid"):
        self._m = matroid
        self._members: set[int] = set()

    def can_add(self, e: int) -> bool:
        if e in self._members:
            return False
        return self._m.is_independent(self._members | {e})

    def add(self, e: int) -> None:
        if not self.can_add(e):
            raise MatroidError(f"cannot extend independent set with element {e}")
        self._members.add(e)

    def try_add(self, e: int) -> bool:
        if self.can_add(e):
            self._members.add(e)
            return True
        return False

    def clone(self) -> "IncrementalIndependence":
        c = type(self).__new__(type(self))
        c._m = self._m
        c._members = set(self._members)
        return c

    def __len__(self) -> int:
        return len(self._members)


class Matroid(ABC):
    """Matroid given by an independence oracle over indices 0..n-1."""

    ground: GroundSet

    @property
    def n(self) -> int:
        return self.ground.size

    @abstractmethod
    def is_independent(self, elems: Iterable[int]) -> bool:
        """True iff the given element set is independent."""

    def incremental(self, members: Iterable[int] = ()) -> IncrementalIndependence:
        inc = self._fresh_incremental()
        for e in sorted(set(members)):
            inc.add(e)
        return inc

    def _fresh_incremental(self) -> IncrementalIndependence:
        return IncrementalIndependence(self)

    def rank(self, elems: Iterable[int] | None = None) -> int:
        """Size of a maximum independent subset, by greedy growth."""
        if elems is None:
            pool: Iterable[int] = range(self.n)
        else:
            pool = sorted(_as_indices(elems, self.n))
        inc = self._fresh_incremental()
        r = 0
        for e in pool:
            if inc.try_add(e):
                r += 1
        return r

    @cached_property
    def full_rank(self) -> int:
        return self.rank()

    def is_basis(self, elems: Iterable[int]) -> bool:
        s = _as_indices(elems, self.n)
        return len(s) == self.full_rank and self.is_independent(s)

    def loops(self) -> list[int]:
        return [e for e in range(self.n) if not self.is_independent((e,))]

    def fundamental_circuit(self, base: Iterable[int], x: int) -> frozenset[int]:
        """The unique circuit inside base + {x}, for independent base.

        Raises MatroidError with distinct messages when base is dependent or
        when base + {x} is still independent.
        """
        i = _as_indices(base, self.n)
        _as_indices((x,), self.n)
        if x in i or self.is_independent(i | {x}):
            raise MatroidError("set stays independent after adding the element")
        if not self.is_independent(i):
            raise MatroidError("base set is dependent")
        return self._circuit_in(i, x)

    def _circuit_in(self, base: frozenset[int], x: int) -> frozenset[int]:
        # Removing y restores independence exactly for members of the circuit.
        whole = base | {x}
        circ = {x}
        for y in base:
            if self.is_independent(whole - {y}):
                circ.add(y)
        return frozenset(circ)

    def restrict(self, keep: Iterable[int]) -> "MinorView":
        return MinorView(self, keep=keep, contracted=())

    def contract(self, away: Iterable[int]) -> "MinorView":
        gone = _as_indices(away, self.n)
        keep = [e for e in range(self.n) if e not in gone]
        return MinorView(self, keep=keep, contracted=gone)

    def delete(self, away: Iterable[int]) -> "MinorView":
        gone = _as_indices(away, self.n)
        return self.restrict(e for e in range(self.n) if e not in gone)


class UniformMatroid(Matroid):
    """U_{r,n}: a set is independent iff it has at most r elements."""

    def __init__(self, n: int, r: int, labels: Sequence[str] | None = None):
        if r < 0:
            raise MatroidError("rank parameter must be nonnegative")
        if n >= 1 and r == 0:
            raise LoopError("uniform matroid with r=0 has loops")
        self.ground = GroundSet(n, tuple(labels) if labels else None)
        self.r = r

    def __repr__(self) -> str:
        return f"UniformMatroid(n={self.n}, r={self.r})"

    def is_independent(self, elems: Iterable[int]) -> bool:
        return len(_as_indices(elems, self.n)) <= self.r

    def _fresh_incremental(self) -> IncrementalIndependence:
        return _UniformIncremental(self)

    def _circuit_in(self, base: frozenset[int], x: int) -> frozenset[int]:
        # |base| == r here, and every (r+1)-subset is a circuit.
        return base | {x}


class _UniformIncremental(IncrementalIndependence):
    def can_add(self, e: int) -> bool:
        return e not in self._members and len(self._members) < self._m.r


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph: independent = forest."""

    def __init__(
        self,
        num_vertices: int,
        edges: Sequence[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ):
        if num_vertices < 0:
            raise MatroidError("vertex count must be nonnegative")
        es = []
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise MatroidError(f"edge ({u},{v}) out of vertex range")
            if u == v:
                raise LoopError(f"self-loop edge ({u},{v}) not allowed")
            es.append((u, v))
        self.num_vertices = num_vertices
        self.edges = tuple(es)
        self.ground = GroundSet(len(es), tuple(labels) if labels else None)

    def __repr__(self) -> str:
        return f"GraphicMatroid(V={self.num_vertices}, E={list(self.edges)})"

    def is_independent(self, elems: Iterable[int]) -> bool:
        s = _as_indices(elems, self.n)
        parent = list(range(self.num_vertices))

        def root(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in s:
            u, v = self.edges[e]
            ru, rv = root(u), root(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def _fresh_incremental(self) -> IncrementalIndependence:
        return _GraphicIncremental(self)

    def _circuit_in(self, base: frozenset[int], x: int) -> frozenset[int]:
        # The circuit is x plus the forest path between its endpoints.
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in base:
            u, v = self.edges[e]
            adj.setdefault(u, []).append((v, e))
            adj.setdefault(v, []).append((u, e))
        src, dst = self.edges[x]
        prev: dict[int, tuple[int, int]] = {src: (-1, -1)}
        stack = [src]
        while stack:
            a = stack.pop()
            if a == dst:
                break
            for b, e in adj.get(a, ()):
                if b not in prev:
                    prev[b] = (a, e)
                    stack.append(b)
        circ = {x}
        a = dst
        while a != src:
            b, e = prev[a]
            circ.add(e)
            a = b
        return frozenset(circ)


class _GraphicIncremental(IncrementalIndependence):
    def __init__(self, matroid: GraphicMatroid):
        self._m = matroid
        self._members: set[int] = set()
        self._parent = list(range(matroid.num_vertices))

    def _root(self, a: int) -> int:
        p = self._parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def can_add(self, e: int) -> bool:
        if e in self._members:
            return False
        u, v = self._m.edges[e]
        return self._root(u) != self._root(v)

    def add(self, e: int) -> None:
        if not self.can_add(e):
            raise MatroidError(f"edge {e} closes a cycle")
        u, v = self._m.edges[e]
        self._parent[self._root(u)] = self._root(v)
        self._members.add(e)

    def try_add(self, e: int) -> bool:
        if not self.can_add(e):
            return False
        u, v = self._m.edges[e]
        self._parent[self._root(u)] = self._root(v)
        self._members.add(e)
        return True

    def clone(self) -> "_GraphicIncremental":
        c = type(self).__new__(type(self))
        c._m = self._m
        c._members = set(self._members)
        c._parent = list(self._parent)
        return c


class TransversalMatroid(Matroid):
    """Independent = matchable into distinct members of a set family."""

    def __init__(
        self,
        n: int,
        family: Sequence[Iterable[int]],
        labels: Sequence[str] | None = None,
    ):
        adj: list[list[int]] = [[] for _ in range(n)]
        for slot, members in enumerate(family):
            for e in members:
                if not (0 <= e < n):
                    raise MatroidError(f"family member {e} out of range")
                adj[e].append(slot)
        for e, slots in enumerate(adj):
            if not slots:
                raise LoopError(f"element {e} lies in no family set (loop)")
        self.family = tuple(frozenset(s) for s in family)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self.num_slots = len(family)
        self.ground = GroundSet(n, tuple(labels) if labels else None)

    def __repr__(self) -> str:
        return f"TransversalMatroid(n={self.n}, slots={self.num_slots})"

    def is_independent(self, elems: Iterable[int]) -> bool:
        s = _as_indices(elems, self.n)
        inc = _TransversalIncremental(self)
        for e in sorted(s):
            if not inc.try_add(e):
                return False
        return True

    def _fresh_incremental(self) -> IncrementalIndependence:
        return _TransversalIncremental(self)

    def _circuit_in(self, base: frozenset[int], x: int) -> frozenset[int]:
        inc = _TransversalIncremental(self)
        for e in sorted(base):
            inc.add(e)
        reachable = inc._reachable_slots(x)
        owners = {inc._slot_owner[s] for s in reachable}
        owners.add(x)
        return frozenset(owners)


class _TransversalIncremental(IncrementalIndependence):
    __slots__ = ("_m", "_members", "_slot_owner", "_visit", "_stamp")

    def __init__(self, matroid: TransversalMatroid):
        self._m = matroid
        self._members: set[int] = set()
        self._slot_owner = [-1] * matroid.num_slots
        self._visit = [0] * matroid.num_slots
        self._stamp = 0

    def _search(self, e: int) -> bool:
        # Alternating reachability; no writes to the matching.
        for s in self._m._adj[e]:
            if self._visit[s] != self._stamp:
                self._visit[s] = self._stamp
                o = self._slot_owner[s]
                if o < 0 or self._search(o):
                    return True
        return False

    def _augment(self, e: int) -> bool:
        for s in self._m._adj[e]:
            if self._visit[s] != self._stamp:
                self._visit[s] = self._stamp
                o = self._slot_owner[s]
                if o < 0 or self._augment(o):
                    self._slot_owner[s] = e
                    return True
        return False

    def _reachable_slots(self, e: int) -> list[int]:
        self._stamp += 1
        self._search(e)
        return [s for s in range(self._m.num_slots) if self._visit[s] == self._stamp]

    def can_add(self, e: int) -> bool:
        if e in self._members:
            return False
        self._stamp += 1
        return self._search(e)

    def add(self, e: int) -> None:
        if not self.try_add(e):
            raise MatroidError(f"element {e} has no augmenting path")

    def try_add(self, e: int) -> bool:
        if e in self._members:
            return False
        self._stamp += 1
        if self._augment(e):
            self._members.add(e)
            return True
        return False

    def clone(self) -> "_TransversalIncremental":
        c = type(self).__new__(type(self))
        c._m = self._m
        c._members = set(self._members)
        c._slot_owner = list(self._slot_owner)
        c._visit = [0] * self._m.num_slots
        c._stamp = 0
        return c


def validate_independence_family(
    n: int, sets: Iterable[Iterable[int]]
) -> AxiomWitness | None:
    """Check a family against the independence axioms.

    Returns None when the family is the collection of independent sets of a
    matroid, otherwise a witness of the violated axiom.
    """
    fam = {frozenset(_as_indices(s, n)) for s in sets}
    if frozenset() not in fam:
        return AxiomWitness("empty", frozenset())
    for s in fam:
        for y in s:
            if s - {y} not in fam:
                return AxiomWitness("downward", s, s - {y})
    by_size: dict[int, list[frozenset[int]]] = {}
    for s in fam:
        by_size.setdefault(len(s), []).append(s)
    sizes = sorted(by_size)
    for small in sizes:
        for big in sizes:
            if big <= small:
                continue
            for i in by_size[small]:
                for j in by_size[big]:
                    if not any(i | {e} in fam for e in j - i):
                        return AxiomWitness("augmentation", i, j)
    return None


class ExplicitMatroid(Matroid):
    """Matroid given by the complete list of its independent sets."""

    def __init__(
        self,
        n: int,
        independent_sets: Iterable[Iterable[int]],
        labels: Sequence[str] | None = None,
    ):
        fam = {frozenset(_as_indices(s, n)) for s in independent_sets}
        witness = validate_independence_family(n, fam)
        if witness is not None:
            raise MatroidError(f"not a matroid: {witness}")
        for e in range(n):
            if frozenset((e,)) not in fam:
                raise LoopError(f"element {e} is a loop")
        self._family = frozenset(fam)
        self.ground = GroundSet(n, tuple(labels) if labels else None)

    @classmethod
    def from_bases(
        cls, n: int, bases: Iterable[Iterable[int]], labels: Sequence[str] | None = None
    ) -> "ExplicitMatroid":
        closed: set[frozenset[int]] = set()
        stack = [frozenset(_as_indices(b, n)) for b in bases]
        while stack:
            s = stack.pop()
            if s in closed:
                continue
            closed.add(s)
            for y in s:
                stack.append(s - {y})
        return cls(n, closed, labels)

    def __repr__(self) -> str:
        return f"ExplicitMatroid(n={self.n}, sets={len(self._family)})"

    @property
    def independent_sets(self) -> frozenset[frozenset[int]]:
        return self._family

    def is_independent(self, elems: Iterable[int]) -> bool:
        return frozenset(_as_indices(elems, self.n)) in self._family


class MinorView(Matroid):
    """Restriction/contraction view of a base matroid.

    Elements are re-indexed densely over the kept set; rank in the view is
    r(X + C) - r(C) for the contracted set C. A contraction can create loops
    even when the base is loopless; callers that require looplessness check
    it themselves.
    """

    def __init__(self, base: Matroid, keep: Iterable[int], contracted: Iterable[int]):
        gone = _as_indices(contracted, base.n)
        kept = sorted(_as_indices(keep, base.n))
        if gone & set(kept):
            raise MatroidError("kept and contracted sets must be disjoint")
        self.base = base
        self.contracted = gone
        self._to_base = tuple(kept)
        cb = base.incremental()
        for e in sorted(gone):
            cb.try_add(e)
        self._cbasis = frozenset(cb._members)
        labels = None
        if base.ground.labels is not None:
            labels = tuple(base.ground.labels[e] for e in kept)
        self.ground = GroundSet(len(kept), labels)

    def __repr__(self) -> str:
        return (
            f"MinorView(base={self.base!r}, keep={len(self._to_base)},"
            f" contract={sorted(self.contracted)})"
        )

    def to_base(self, elems: Iterable[int]) -> frozenset[int]:
        return frozenset(self._to_base[e] for e in elems)

    def from_base(self, elems: Iterable[int]) -> frozenset[int]:
        rev = {b: v for v, b in enumerate(self._to_base)}
        return frozenset(rev[e] for e in elems)

    def is_independent(self, elems: Iterable[int]) -> bool:
        s = _as_indices(elems, self.n)
        mapped = {self._to_base[e] for e in s}
        return self.base.is_independent(mapped | self._cbasis)

    def _fresh_incremental(self) -> IncrementalIndependence:
        return _ViewIncremental(self)


class _ViewIncremental(IncrementalIndependence):
    def __init__(self, view: MinorView):
        self._m = view
        self._members: set[int] = set()
        self._inner = view.base.incremental(view._cbasis)

    def can_add(self, e: int) -> bool:
        if e in self._members:
            return False
        return self._inner.can_add(self._m._to_base[e])

    def add(self, e: int) -> None:
        if e in self._members:
            raise MatroidError(f"element {e} already present")
        self._inner.add(self._m._to_base[e])
        self._members.add(e)

    def try_add(self, e: int) -> bool:
        if e in self._members:
            return False
        if self._inner.try_add(self._m._to_base[e]):
            self._members.add(e)
            return True
        return False

    def clone(self) -> "_ViewIncremental":
        c = type(self).__new__(type(self))
        c._m = self._m
        c._members = set(self._members)
        c._inner = self._inner.clone()
        return c


def restrict(matroid: Matroid, keep: Iterable[int]) -> MinorView:
    return matroid.restrict(keep)


def contract(matroid: Matroid, away: Iterable[int]) -> MinorView:
    return matroid.contract(away)


def enumerate_independent_sets(matroid: Matroid) -> list[frozenset[int]]:
    """All independent sets, by brute force. Intended for small grounds."""
    out = []
    elems = range(matroid.n)
    for size in range(matroid.n + 1):
        found = False
        for combo in itertools.combinations(elems, size):
            if matroid.is_independent(combo):
                out.append(frozenset(combo))
                found = True
        if not found:
            break
    return out
