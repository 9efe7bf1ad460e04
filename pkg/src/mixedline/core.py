"""Exact scalars in Z[w] (w a primitive cube root of unity) and the mixed-graph model.

Every matrix entry in this package is an :class:`EisensteinScalar` ``a + b*w``
with ``w**2 == -1 - w``.  Nothing here touches floating point.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class EisensteinScalar:
    """The Eisenstein integer ``a + b*w``."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        object.__setattr__(self, "_a", int(a))
        object.__setattr__(self, "_b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("EisensteinScalar is immutable")

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @classmethod
    def coerce(cls, x: EisensteinScalar | UnitRoot | int) -> EisensteinScalar:
        if isinstance(x, EisensteinScalar):
            return x
        if isinstance(x, UnitRoot):
            return x.to_scalar()
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to EisensteinScalar")

    def __repr__(self) -> str:
        return f"EisensteinScalar({self._a}, {self._b})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisensteinScalar):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, UnitRoot)):
            return self == EisensteinScalar.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __add__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinScalar(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self) -> EisensteinScalar:
        return EisensteinScalar(-self._a, -self._b)

    def __sub__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinScalar(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = EisensteinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return scalar_mul(self, o)

    __rmul__ = __mul__

    def conj(self) -> EisensteinScalar:
        return scalar_conj(self)

    @property
    def norm(self) -> int:
        """``a^2 - ab + b^2``, which equals ``x * conj(x)``."""
        return self._a * self._a - self._a * self._b + self._b * self._b

    @property
    def is_real(self) -> bool:
        return self._b == 0

    def exact_div(self, k: int) -> EisensteinScalar:
        """Divide by a rational integer, raising if the quotient leaves Z[w]."""
        qa, ra = divmod(self._a, k)
        qb, rb = divmod(self._b, k)
        if ra or rb:
            raise ArithmeticError(f"{self!r} is not divisible by {k}")
        return EisensteinScalar(qa, qb)

    def as_unit(self) -> UnitRoot | None:
        """The cube root of unity equal to this value, or None."""
        return _SCALAR_TO_UNIT.get((self._a, self._b))


def scalar_mul(x: EisensteinScalar, y: EisensteinScalar) -> EisensteinScalar:
    a, b, c, d = x._a, x._b, y._a, y._b
    bd = b * d
    return EisensteinScalar(a * c - bd, a * d + b * c - bd)


def scalar_conj(x: EisensteinScalar) -> EisensteinScalar:
    # conj(w) = w^2 = -1 - w
    return EisensteinScalar(x._a - x._b, -x._b)


ZERO = EisensteinScalar(0, 0)


@dataclass(frozen=True, order=True)
class UnitRoot:
    """``w**exp`` for a cube root of unity ``w``; ``exp`` is kept in ``{0, 1, 2}``."""

    exp: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "exp", self.exp % 3)

    def __mul__(self, other):
        if isinstance(other, UnitRoot):
            return UnitRoot(self.exp + other.exp)
        if isinstance(other, (EisensteinScalar, int)):
            return self.to_scalar() * other
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (EisensteinScalar, int)):
            return other * self.to_scalar()
        return NotImplemented

    def __truediv__(self, other: UnitRoot) -> UnitRoot:
        return UnitRoot(self.exp - other.exp)

    def __pow__(self, k: int) -> UnitRoot:
        return UnitRoot(self.exp * k)

    def conj(self) -> UnitRoot:
        return UnitRoot(-self.exp)

    def to_scalar(self) -> EisensteinScalar:
        return _UNIT_SCALARS[self.exp]

    @property
    def symbol(self) -> str:
        return ("1", "w", "w2")[self.exp]

    def __str__(self) -> str:
        return self.symbol

    @classmethod
    def from_symbol(cls, s: str | int) -> UnitRoot:
        table = {"1": 0, "w": 1, "w2": 2, "gamma": 1, "gamma2": 2}
        key = str(s).strip().lower()
        if key not in table:
            raise ValueError(f"unknown unit root {s!r}")
        return cls(table[key])


ONE = UnitRoot(0)
GAMMA = UnitRoot(1)
GAMMA2 = UnitRoot(2)
UNITS = (ONE, GAMMA, GAMMA2)

_UNIT_SCALARS = (EisensteinScalar(1, 0), EisensteinScalar(0, 1), EisensteinScalar(-1, -1))
_SCALAR_TO_UNIT = {(1, 0): ONE, (0, 1): GAMMA, (-1, -1): GAMMA2}

_SYMBOLS = {
    (0, 0): "0",
    (1, 0): "1",
    (0, 1): "w",
    (-1, -1): "w2",
    (-1, 0): "-1",
    (0, -1): "-w",
    (1, 1): "-w2",
}


def format_scalar(x: EisensteinScalar) -> str:
    """Short symbol for units and zero, ``a+bw`` otherwise."""
    sym = _SYMBOLS.get((x.a, x.b))
    if sym is not None:
        return sym
    if x.b == 0:
        return str(x.a)
    if x.a == 0:
        return f"{x.b}w"
    return f"{x.a}{x.b:+d}w"


class Variant(enum.Enum):
    """Which cube root of unity plays the role of the arc weight."""

    GAMMA = "gamma"
    GAMMA2 = "gamma2"

    @property
    def alpha(self) -> UnitRoot:
        return GAMMA if self is Variant.GAMMA else GAMMA2

    @classmethod
    def parse(cls, v: Variant | str | None) -> Variant:
        if v is None:
            return cls.GAMMA
        if isinstance(v, Variant):
            return v
        key = str(v).lower()
        if key in ("gamma", "w"):
            return cls.GAMMA
        if key in ("gamma2", "w2"):
            return cls.GAMMA2
        raise ValueError(f"unknown variant {v!r}")


DIGON = "digon"
ARC = "arc"


@dataclass(frozen=True)
class Edge:
    """One edge of a mixed graph.

    ``ends`` is the unordered endpoint pair, stored in the order it was given.
    Arcs additionally carry ``tail`` and ``head``.
    """

    id: str
    ends: tuple[str, str]
    kind: str = DIGON
    tail: str | None = None
    head: str | None = None

    @property
    def is_arc(self) -> bool:
        return self.kind == ARC

    def other(self, v: str) -> str:
        a, b = self.ends
        if v == a:
            return b
        if v == b:
            return a
        raise KeyError(f"{v!r} is not an endpoint of edge {self.id!r}")

    def as_digon(self) -> Edge:
        return Edge(self.id, self.ends)

    def reversed(self) -> Edge:
        if not self.is_arc:
            return self
        return Edge(self.id, self.ends, ARC, self.head, self.tail)

    def h_value(self, u: str, v: str, alpha: UnitRoot = GAMMA) -> UnitRoot:
        """Hermitian adjacency entry at ``(u, v)`` contributed by this edge."""
        if not self.is_arc:
            return ONE
        if (u, v) == (self.tail, self.head):
            return alpha
        if (u, v) == (self.head, self.tail):
            return alpha.conj()
        raise KeyError(f"({u!r}, {v!r}) is not the endpoint pair of {self.id!r}")

    def role_at(self, v: str) -> str:
        """``"digon"``, ``"in"`` (v is the head) or ``"out"`` (v is the tail)."""
        if not self.is_arc:
            return DIGON
        if v == self.head:
            return "in"
        if v == self.tail:
            return "out"
        raise KeyError(f"{v!r} is not an endpoint of edge {self.id!r}")


def digon(u: str, v: str, id: str | None = None) -> tuple:
    return (u, v, DIGON, id)


def arc(tail: str, head: str, id: str | None = None) -> tuple:
    return (tail, head, ARC, id)


def default_edge_id(u: str, v: str) -> str:
    return f"{u}-{v}"


@dataclass(frozen=True)
class MixedGraph:
    """A simple graph whose edges are digons or arcs.

    Vertex order and edge order are part of the value; they fix the row and
    column order of every matrix built from the graph.
    """

    vertices: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable = ()) -> MixedGraph:
        """Build from ``(u, v[, kind[, id]])`` tuples.

        For arcs ``u`` is the tail.  Endpoints are stored in vertex order and
        missing ids default to ``"u-v"`` in that order.  Vertices mentioned only
        by edges are appended.
        """
        verts = [str(v) for v in vertices]
        seen = set(verts)
        specs = []
        for spec in edges:
            if isinstance(spec, Edge):
                specs.append(spec)
                for v in spec.ends:
                    if v not in seen:
                        seen.add(v)
                        verts.append(v)
                continue
            u, v, *rest = spec
            kind = rest[0] if rest else DIGON
            eid = rest[1] if len(rest) > 1 else None
            u, v = str(u), str(v)
            for x in (u, v):
                if x not in seen:
                    seen.add(x)
                    verts.append(x)
            specs.append((u, v, kind, eid))
        order = {v: i for i, v in enumerate(verts)}
        out = []
        for spec in specs:
            if isinstance(spec, Edge):
                out.append(spec)
                continue
            u, v, kind, eid = spec
            ends = (u, v) if order[u] <= order[v] else (v, u)
            if eid is None:
                eid = default_edge_id(*ends)
            if kind == ARC:
                out.append(Edge(str(eid), ends, ARC, u, v))
            elif kind == DIGON:
                out.append(Edge(str(eid), ends))
            else:
                raise ValueError(f"unknown edge kind {kind!r}")
        return cls(tuple(verts), tuple(out))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def incident(self) -> dict[str, list[Edge]]:
        """Incident edges per vertex, in edge order."""
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            for v in set(e.ends):
                inc.setdefault(v, []).append(e)
        return inc

    @cached_property
    def _pair_map(self) -> dict[frozenset, Edge]:
        return {frozenset(e.ends): e for e in self.edges}

    def edge_between(self, u: str, v: str) -> Edge | None:
        return self._pair_map.get(frozenset((u, v)))

    def neighbors(self, v: str) -> list[str]:
        return [e.other(v) for e in self.incident[v]]

    def h(self, u: str, v: str, alpha: UnitRoot = GAMMA) -> UnitRoot | None:
        """Hermitian adjacency entry as a unit root, None when non-adjacent."""
        e = self.edge_between(u, v)
        if e is None or u == v:
            return None
        return e.h_value(u, v, alpha)

    @property
    def is_undirected(self) -> bool:
        return not any(e.is_arc for e in self.edges)

    def arcs(self) -> list[Edge]:
        return [e for e in self.edges if e.is_arc]

    def induced(self, vs: Iterable[str]) -> MixedGraph:
        keep = set(vs)
        return MixedGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e.ends[0] in keep and e.ends[1] in keep),
        )

    def with_edges(self, edges: Iterable[Edge]) -> MixedGraph:
        return MixedGraph(self.vertices, tuple(edges))

    def reversed(self) -> MixedGraph:
        return self.with_edges(e.reversed() for e in self.edges)

    def labeled_key(self) -> tuple:
        """Order-free identity: vertex set plus per-pair orientation.

        Edge ids and the stored order of ``ends`` are ignored.
        """
        rel = []
        for e in self.edges:
            a, b = sorted(e.ends)
            if e.is_arc:
                rel.append((a, b, ARC, e.tail, e.head))
            else:
                rel.append((a, b, DIGON, "", ""))
        return (tuple(sorted(self.vertices)), tuple(sorted(rel)))

    def same_labeled(self, other: MixedGraph) -> bool:
        return self.labeled_key() == other.labeled_key()

    def connected_components(self) -> list[list[str]]:
        seen: set[str] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.neighbors(x):
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def is_bipartite(self) -> bool:
        return bipartition(self) is not None

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def bipartition(g: MixedGraph) -> dict[str, int] | None:
    """2-colouring of the underlying graph, or None if it has an odd cycle."""
    color: dict[str, int] = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def bfs_tree(g: MixedGraph, root: str | None = None) -> tuple[dict[str, str | None], list[str], list[Edge]]:
    """BFS from ``root`` (default: first vertex), neighbours taken in edge order.

    Returns ``(parent, visit_order, tree_edges)``; ``parent[root]`` is None.
    """
    if root is None:
        root = g.vertices[0]
    parent: dict[str, str | None] = {root: None}
    order = [root]
    tree: list[Edge] = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for e in g.incident[x]:
            y = e.other(x)
            if y not in parent:
                parent[y] = x
                order.append(y)
                tree.append(e)
                queue.append(y)
    return parent, order, tree


def underlying_graph(d: MixedGraph) -> MixedGraph:
    """Replace every arc by a digon; ids and orders are kept."""
    if d.is_undirected:
        return d
    return d.with_edges(e.as_digon() for e in d.edges)


def degree_map(d: MixedGraph) -> dict[str, int]:
    return {v: len(d.incident[v]) for v in d.vertices}


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}" if self.detail else self.kind


def validate(d: MixedGraph) -> list[Violation]:
    """Structural problems with ``d``; an empty list means the graph is valid."""
    problems: list[Violation] = []
    seen_v: set[str] = set()
    for v in d.vertices:
        if v in seen_v:
            problems.append(Violation("duplicate vertex id", v))
        seen_v.add(v)
    seen_e: set[str] = set()
    pairs: dict[frozenset, str] = {}
    for e in d.edges:
        if e.id in seen_e:
            problems.append(Violation("duplicate edge id", e.id))
        seen_e.add(e.id)
        if len(e.ends) != 2:
            problems.append(Violation("bad endpoints", e.id))
            continue
        u, v = e.ends
        for x in (u, v):
            if x not in seen_v:
                problems.append(Violation("unknown vertex", f"{e.id}: {x}"))
        if u == v:
            problems.append(Violation("loop", e.id))
            continue
        key = frozenset((u, v))
        if key in pairs:
            problems.append(Violation("parallel edges", f"{pairs[key]}, {e.id}"))
        else:
            pairs[key] = e.id
        if e.kind == ARC:
            if e.tail is None or e.head is None or {e.tail, e.head} != {u, v} or e.tail == e.head:
                problems.append(Violation("arc endpoints mismatch", e.id))
        elif e.kind == DIGON:
            if e.tail is not None or e.head is not None:
                problems.append(Violation("digon with orientation", e.id))
        else:
            problems.append(Violation("unknown edge kind", f"{e.id}: {e.kind}"))
    return problems


class InvalidGraphError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def ensure_valid(d: MixedGraph) -> MixedGraph:
    problems = validate(d)
    if problems:
        raise InvalidGraphError(problems)
    return d


class PreconditionError(ValueError):
    """An operation's documented precondition does not hold for its input."""


class NotMonographError(PreconditionError):
    pass


class SizeBoundError(ValueError):
    """Input exceeds a configured size limit."""


class UnitDiagonal:
    """Diagonal matrix with cube roots of unity on the diagonal, indexed by label."""

    __slots__ = ("labels", "_values")

    def __init__(self, values: Iterable[tuple[str, UnitRoot]] | dict[str, UnitRoot]) -> None:
        items = list(values.items()) if isinstance(values, dict) else list(values)
        self.labels = tuple(k for k, _ in items)
        self._values = {k: v for k, v in items}
        for k, v in self._values.items():
            if not isinstance(v, UnitRoot):
                raise TypeError(f"entry {k!r} is not a UnitRoot")

    def __getitem__(self, label: str) -> UnitRoot:
        return self._values[label]

    def __contains__(self, label: str) -> bool:
        return label in self._values

    def __len__(self) -> int:
        return len(self.labels)

    def items(self):
        return ((k, self._values[k]) for k in self.labels)

    def as_dict(self) -> dict[str, UnitRoot]:
        return dict(self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitDiagonal):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self) -> str:
        return "UnitDiagonal(" + ", ".join(f"{k}: {v}" for k, v in self.items()) + ")"

    def is_identity(self) -> bool:
        return all(v == ONE for v in self._values.values())

    def conj(self) -> UnitDiagonal:
        return UnitDiagonal((k, v.conj()) for k, v in self.items())

    def to_matrix(self):
        from .matrices import ExactMatrix

        return ExactMatrix.diagonal(self.labels, [self._values[k] for k in self.labels])


@dataclass(frozen=True)
class Walk:
    vertices: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def closed(self) -> bool:
        return len(self.vertices) >= 2 and self.vertices[0] == self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def reversed(self) -> Walk:
        return Walk(self.vertices[::-1])

    def then(self, other: Walk) -> Walk:
        """Concatenate; ``other`` must start where this walk ends."""
        if self.vertices and other.vertices and self.vertices[-1] != other.vertices[0]:
            raise ValueError("walks do not meet")
        return Walk(self.vertices + other.vertices[1:])

    def steps(self) -> Iterator[tuple[str, str]]:
        return zip(self.vertices, self.vertices[1:])

    def is_cycle(self) -> bool:
        """Closed, at least three distinct vertices, none repeated."""
        body = self.vertices[:-1]
        return self.closed and len(body) >= 3 and len(set(body)) == len(body)
