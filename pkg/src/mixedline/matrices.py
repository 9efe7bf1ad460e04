"""Dense exact matrices over Z[w] and the matrix identities of mixed graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .core import (
    ZERO,
    EisensteinScalar,
    MixedGraph,
    UnitRoot,
    Variant,
    degree_map,
    format_scalar,
)

Cell = tuple[str, str]


class DimensionError(ValueError):
    pass


class ExactMatrix:
    """Labelled dense matrix of :class:`EisensteinScalar` entries.

    Rows and columns are addressed either positionally or by label; label
    lookups go through ``m[row_label, col_label]``.
    """

    __slots__ = ("row_labels", "col_labels", "_rows", "_ri", "_ci")

    def __init__(
        self,
        row_labels: Sequence[str],
        col_labels: Sequence[str],
        rows: Sequence[Sequence[EisensteinScalar]],
    ) -> None:
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self._rows = tuple(tuple(EisensteinScalar.coerce(x) for x in r) for r in rows)
        if len(self._rows) != len(self.row_labels):
            raise DimensionError("row label count does not match the entries")
        for r in self._rows:
            if len(r) != len(self.col_labels):
                raise DimensionError("column label count does not match the entries")
        self._ri = {lab: i for i, lab in enumerate(self.row_labels)}
        self._ci = {lab: j for j, lab in enumerate(self.col_labels)}

    @classmethod
    def zeros(cls, row_labels: Sequence[str], col_labels: Sequence[str]) -> ExactMatrix:
        return cls(row_labels, col_labels, [[ZERO] * len(col_labels) for _ in row_labels])

    @classmethod
    def from_cells(
        cls,
        row_labels: Sequence[str],
        col_labels: Sequence[str],
        cells: Mapping[Cell, EisensteinScalar | UnitRoot | int],
    ) -> ExactMatrix:
        ri = {lab: i for i, lab in enumerate(row_labels)}
        ci = {lab: j for j, lab in enumerate(col_labels)}
        rows = [[ZERO] * len(col_labels) for _ in row_labels]
        for (r, c), x in cells.items():
            rows[ri[r]][ci[c]] = EisensteinScalar.coerce(x)
        return cls(row_labels, col_labels, rows)

    @classmethod
    def identity(cls, labels: Sequence[str], scale: int = 1) -> ExactMatrix:
        return cls.diagonal(labels, [scale] * len(labels))

    @classmethod
    def diagonal(cls, labels: Sequence[str], values: Iterable) -> ExactMatrix:
        labels = tuple(labels)
        vals = [EisensteinScalar.coerce(v) for v in values]
        rows = [[ZERO] * len(labels) for _ in labels]
        for i, v in enumerate(vals):
            rows[i][i] = v
        return cls(labels, labels, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return len(self.row_labels) == len(self.col_labels)

    @property
    def rows(self) -> tuple[tuple[EisensteinScalar, ...], ...]:
        return self._rows

    def __getitem__(self, key: Cell) -> EisensteinScalar:
        r, c = key
        return self._rows[self._ri[r]][self._ci[c]]

    def at(self, i: int, j: int) -> EisensteinScalar:
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.row_labels, self.col_labels, self._rows))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.shape[0]}x{self.shape[1]})\n{pretty(self)}"

    def _zip(self, other: ExactMatrix, op: Callable) -> ExactMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = [[op(x, y) for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        return ExactMatrix(self.row_labels, self.col_labels, rows)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self._zip(other, lambda x, y: x - y)

    def scaled(self, c: EisensteinScalar | UnitRoot | int) -> ExactMatrix:
        c = EisensteinScalar.coerce(c)
        return ExactMatrix(self.row_labels, self.col_labels, [[c * x for x in r] for r in self._rows])

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return mat_mul(self, other)

    def conj_transpose(self) -> ExactMatrix:
        return conj_transpose(self)

    @property
    def H(self) -> ExactMatrix:
        return conj_transpose(self)

    def is_hermitian(self) -> bool:
        return self.is_square and self.row_labels == self.col_labels and self == conj_transpose(self)

    def trace(self) -> EisensteinScalar:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        a = b = 0
        for i, r in enumerate(self._rows):
            a += r[i].a
            b += r[i].b
        return EisensteinScalar(a, b)

    def reindexed(self, row_labels: Sequence[str], col_labels: Sequence[str]) -> ExactMatrix:
        """Same matrix with rows and columns permuted to the given label orders."""
        if set(row_labels) != set(self.row_labels) or set(col_labels) != set(self.col_labels):
            raise DimensionError("relabelling must be a permutation of the labels")
        return ExactMatrix(
            row_labels,
            col_labels,
            [[self[r, c] for c in col_labels] for r in row_labels],
        )

    def relabeled(self, row_labels: Sequence[str], col_labels: Sequence[str]) -> ExactMatrix:
        return ExactMatrix(row_labels, col_labels, self._rows)

    def first_difference(self, other: ExactMatrix) -> tuple[str, str, EisensteinScalar, EisensteinScalar] | None:
        """First cell (row-major, by label) where the two matrices differ."""
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        if set(self.row_labels) != set(other.row_labels) or set(self.col_labels) != set(other.col_labels):
            raise DimensionError("label sets differ")
        for r in self.row_labels:
            for c in self.col_labels:
                x, y = self[r, c], other[r, c]
                if x != y:
                    return (r, c, x, y)
        return None

    def nonzero_pattern(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(x) for x in r) for r in self._rows)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.col_labels != b.row_labels:
        if len(a.col_labels) != len(b.row_labels):
            raise DimensionError(f"inner dimensions differ: {a.shape} @ {b.shape}")
        raise DimensionError("inner labels differ")
    # raw integer pairs; zero entries skipped
    bt = [[(x.a, x.b) for x in r] for r in b.rows]
    ncols = len(b.col_labels)
    out = []
    for r in a.rows:
        acc_a = [0] * ncols
        acc_b = [0] * ncols
        for k, x in enumerate(r):
            xa, xb = x.a, x.b
            if not xa and not xb:
                continue
            for j, (ya, yb) in enumerate(bt[k]):
                if not ya and not yb:
                    continue
                bd = xb * yb
                acc_a[j] += xa * ya - bd
                acc_b[j] += xa * yb + xb * ya - bd
        out.append([EisensteinScalar(p, q) for p, q in zip(acc_a, acc_b)])
    return ExactMatrix(a.row_labels, b.col_labels, out)


def conj_transpose(a: ExactMatrix) -> ExactMatrix:
    rows = [[a.at(i, j).conj() for i in range(a.shape[0])] for j in range(a.shape[1])]
    return ExactMatrix(a.col_labels, a.row_labels, rows)


def hermitian_adjacency(d: MixedGraph, variant: Variant | str = Variant.GAMMA) -> ExactMatrix:
    alpha = Variant.parse(variant).alpha
    cells = {}
    for e in d.edges:
        u, v = e.ends
        cells[(u, v)] = e.h_value(u, v, alpha)
        cells[(v, u)] = e.h_value(v, u, alpha)
    return ExactMatrix.from_cells(d.vertices, d.vertices, cells)


def incidence_unit(e, v: str, beta: UnitRoot) -> UnitRoot:
    """Incidence entry of vertex ``v`` on edge ``e``: 1, beta at the head, conj(beta) at the tail."""
    role = e.role_at(v)
    if role == "in":
        return beta
    if role == "out":
        return beta.conj()
    return UnitRoot(0)


def gamma_incidence(d: MixedGraph, variant: Variant | str = Variant.GAMMA) -> ExactMatrix:
    beta = Variant.parse(variant).alpha
    cells = {}
    for e in d.edges:
        for v in e.ends:
            cells[(v, e.id)] = incidence_unit(e, v, beta)
    return ExactMatrix.from_cells(d.vertices, [e.id for e in d.edges], cells)


def adjacency_01(g: MixedGraph) -> ExactMatrix:
    """Ordinary 0-1 adjacency matrix of the underlying graph."""
    cells = {}
    for e in g.edges:
        u, v = e.ends
        cells[(u, v)] = 1
        cells[(v, u)] = 1
    return ExactMatrix.from_cells(g.vertices, g.vertices, cells)


def incidence_01(g: MixedGraph) -> ExactMatrix:
    cells = {(v, e.id): 1 for e in g.edges for v in e.ends}
    return ExactMatrix.from_cells(g.vertices, [e.id for e in g.edges], cells)


def degree_matrix(d: MixedGraph) -> ExactMatrix:
    deg = degree_map(d)
    return ExactMatrix.diagonal(d.vertices, [deg[v] for v in d.vertices])


def line_graph_adjacency(lg: MixedGraph) -> ExactMatrix:
    """Hermitian adjacency of a (gamma or gamma^2) line graph, read with weight w.

    The gamma^2 line graph has every arc of the gamma line graph reversed, so
    ``H^w(gamma^2 line graph) == H^(w^2)(gamma line graph) == conj(H^w(gamma line graph))``,
    which is exactly ``B*B - 2I`` for the gamma^2 incidence matrix.
    """
    return hermitian_adjacency(lg, Variant.GAMMA)


@dataclass(frozen=True)
class FactorizationReport:
    bstarb_ok: bool
    bbstar_ok: bool
    bstarb_witness: tuple | None = None
    bbstar_witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.bstarb_ok and self.bbstar_ok


def check_factorizations(d: MixedGraph, variant: Variant | str = Variant.GAMMA) -> FactorizationReport:
    """Check ``B*B = H(line graph) + 2I`` and ``BB* = H + D`` cell by cell.

    ``B`` and ``H(d)`` use the variant's parameter.  The variant's line graph
    is compared through :func:`line_graph_adjacency`, see there.
    """
    from .linegraph import gamma_line_graph

    variant = Variant.parse(variant)
    b = gamma_incidence(d, variant)
    bs = conj_transpose(b)
    lg = gamma_line_graph(d, variant)
    lhs1 = mat_mul(bs, b)
    rhs1 = line_graph_adjacency(lg) + ExactMatrix.identity(lg.vertices, 2)
    w1 = lhs1.first_difference(rhs1)
    lhs2 = mat_mul(b, bs)
    rhs2 = hermitian_adjacency(d, variant) + degree_matrix(d)
    w2 = lhs2.first_difference(rhs2)
    return FactorizationReport(w1 is None, w2 is None, w1, w2)


# -- characteristic polynomials ---------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial in lambda; ``coefficients`` run from the leading term down."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        return poly_str(self.coefficients)

    def shifted(self, t: int) -> CharPoly:
        return CharPoly(poly_shift(self.coefficients, t))

    def __mul__(self, other: CharPoly) -> CharPoly:
        return CharPoly(poly_mul(self.coefficients, other.coefficients))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_shift(p: Sequence[int], t: int) -> tuple[int, ...]:
    """Coefficients of ``p(lambda + t)`` (Horner over the linear factor)."""
    out: tuple[int, ...] = ()
    for c in p:
        if not out:
            out = (c,)
            continue
        out = poly_mul(out, (1, t))
        out = out[:-1] + (out[-1] + c,)
    return out


def linear_power(a: int, k: int) -> tuple[int, ...]:
    """Coefficients of ``(lambda + a) ** k``."""
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = poly_mul(out, (1, a))
    return out


def poly_str(coeffs: Sequence[int], var: str = "λ") -> str:
    n = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        p = n - i
        mag = abs(c)
        if p == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + (f"^{p}" if p > 1 else "")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


def char_poly(m: ExactMatrix, require_hermitian: bool = True) -> CharPoly:
    """``det(lambda*I - m)`` by Faddeev-LeVerrier.

    All intermediates stay in Z[w]: the trace at step k is k times a
    coefficient, and the division is checked to be exact.
    """
    if not m.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    if require_hermitian and m != conj_transpose(m):
        raise ValueError("matrix is not Hermitian")
    n = m.shape[0]
    labels = m.row_labels
    coeffs = [EisensteinScalar(1, 0)]
    mk = ExactMatrix.zeros(labels, labels)
    ident = ExactMatrix.identity(labels)
    for k in range(1, n + 1):
        mk = mat_mul(m, mk) + ident.scaled(coeffs[-1])
        tr = mat_mul(m, mk).trace()
        coeffs.append((-tr).exact_div(k))
    out = []
    for c in coeffs:
        assert c.is_real, f"non-real characteristic coefficient {c!r}"
        out.append(c.a)
    return CharPoly(tuple(out))


def eval_poly_at_matrix(p: CharPoly, m: ExactMatrix) -> ExactMatrix:
    labels = m.row_labels
    acc = ExactMatrix.zeros(labels, labels)
    ident = ExactMatrix.identity(labels)
    for c in p.coefficients:
        acc = mat_mul(acc, m) + ident.scaled(c)
    return acc


@dataclass(frozen=True)
class LineCharpolyReport:
    ok: bool
    applicable: bool
    reason: str = ""
    lhs: CharPoly | None = None
    rhs: CharPoly | None = None


def check_line_charpoly(x: MixedGraph, k: int) -> LineCharpolyReport:
    """Compare chi(H(line graph)) with (lambda+2)^(m-n) * chi(H(x), lambda + 2 - k).

    ``k``, ``n`` and ``m`` refer to the root ``x``, which must be k-regular.
    """
    from .linegraph import gamma_line_graph

    deg = degree_map(x)
    if any(d != k for d in deg.values()):
        return LineCharpolyReport(False, False, f"root is not {k}-regular")
    n, m = x.n, x.m
    if m < n:
        return LineCharpolyReport(False, False, "identity not applicable (m < n)")
    lg = gamma_line_graph(x)
    lhs = char_poly(hermitian_adjacency(lg))
    base = char_poly(hermitian_adjacency(x)).shifted(2 - k)
    rhs = CharPoly(linear_power(2, m - n)) * base
    return LineCharpolyReport(lhs == rhs, True, "", lhs, rhs)


# -- text dumps ---------------------------------------------------------------


def pretty(m: ExactMatrix) -> str:
    """Aligned table using the symbols 0, 1, w, w2, -1, ... for entries."""
    cells = [[format_scalar(x) for x in r] for r in m.rows]
    head = [""] + list(m.col_labels)
    body = [[lab] + r for lab, r in zip(m.row_labels, cells)]
    widths = [max(len(row[j]) for row in [head] + body) for j in range(len(head))]
    lines = ["  ".join(s.rjust(w) for s, w in zip(row, widths)) for row in [head] + body]
    return "\n".join(lines)


def to_csv(m: ExactMatrix) -> str:
    """Exact dump: header of column labels, then one row per line with ``a:b`` cells."""
    lines = [",".join([""] + list(m.col_labels))]
    for lab, r in zip(m.row_labels, m.rows):
        lines.append(",".join([lab] + [f"{x.a}:{x.b}" for x in r]))
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> ExactMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    cols = lines[0].split(",")[1:]
    row_labels, rows = [], []
    for ln in lines[1:]:
        parts = ln.split(",")
        row_labels.append(parts[0])
        rows.append([EisensteinScalar(*map(int, p.split(":"))) for p in parts[1:]])
    return ExactMatrix(row_labels, cols, rows)
