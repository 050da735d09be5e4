"""Finitely presented abelian groups: Smith normal form, canonical invariants and homs."""

import logging

import numpy as np
import sympy

from config.settings import ENUMERATION_GUARD
from src.models.abelian import AbelianHom, FpAbelianGroup, IntMatrix, SmithForm
from src.models.gamma_set import PointedMonoid
from src.utils.errors import GammaForgeError, GuardExceededError, InternalConsistencyError
from src.utils.validators import ValidationResult

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: IntMatrix) -> SmithForm:
    """Diagonalize A as U·A·V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.

    Pivots are chosen by minimal absolute value; all arithmetic is on Python ints.
    """
    m, n = matrix.rows, matrix.cols
    D = matrix.to_lists()
    U = _identity(m)
    V = _identity(n)
    V_inv = _identity(n)
    steps = 0

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(src, dst, q):
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        V_inv[src] = [x - q * y for x, y in zip(V_inv[src], V_inv[dst])]

    t = 0
    while t < min(m, n):
        entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            steps += 1
            leftover = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // D[t][t]))
                    leftover = leftover or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // D[t][t]))
                    leftover = leftover or D[t][j] != 0
            if leftover:
                candidates = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                candidates += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(candidates)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad_row = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad_row is None:
                break
            add_row(bad_row, t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    logger.debug("SNF of a %dx%d matrix: %d reduction passes", m, n, steps)
    return SmithForm(
        d=IntMatrix.from_rows(D, cols=n),
        u=IntMatrix.from_rows(U, cols=m),
        v=IntMatrix.from_rows(V, cols=n),
        v_inv=IntMatrix.from_rows(V_inv, cols=n),
    )


def _object_array(matrix: IntMatrix) -> np.ndarray:
    array = np.empty((matrix.rows, matrix.cols), dtype=object)
    for i, row in enumerate(matrix.entries):
        for j, x in enumerate(row):
            array[i, j] = x
    return array


def _is_unimodular(matrix: IntMatrix) -> bool:
    if matrix.rows == 0:
        return True
    return sympy.Matrix(matrix.to_lists()).det() in (1, -1)


def verify_smith_form(matrix: IntMatrix, form: SmithForm) -> ValidationResult:
    """U·A·V = D, |det U| = |det V| = 1, V·V⁻¹ = I, D diagonal with a divisibility chain."""
    result = ValidationResult()
    a, d = _object_array(matrix), _object_array(form.d)
    u, v, v_inv = _object_array(form.u), _object_array(form.v), _object_array(form.v_inv)
    if not np.array_equal(u.dot(a).dot(v), d):
        result.add_error("U·A·V != D")
    if not _is_unimodular(form.u):
        result.add_error("U nao e unimodular")
    if not _is_unimodular(form.v):
        result.add_error("V nao e unimodular")
    if matrix.cols and not np.array_equal(v.dot(v_inv), np.identity(matrix.cols, dtype=int)):
        result.add_error("V·V_inv != I")
    for i, row in enumerate(form.d.entries):
        for j, x in enumerate(row):
            if i != j and x:
                result.add_error(f"D nao e diagonal em ({i}, {j})")
    diagonal = form.diagonal
    if any(x < 0 for x in diagonal):
        result.add_error("Diagonal com entrada negativa")
    for x, y in zip(diagonal, diagonal[1:]):
        if (x == 0 and y != 0) or (x != 0 and y % x):
            result.add_error(f"Cadeia de divisibilidade falha: {x} nao divide {y}")
    return result


# ---------------------------------------------------------------------------
# Presentations and canonical form
# ---------------------------------------------------------------------------

def presentation(generators, rows, name: str = "") -> FpAbelianGroup:
    """Group on `generators` modulo `rows`; zero and repeated rows are dropped."""
    generators = tuple(generators)
    seen = set()
    kept = []
    for row in rows:
        row = tuple(int(x) for x in row)
        if len(row) != len(generators):
            raise GammaForgeError("Relacao com numero de colunas diferente do numero de geradores")
        if any(row) and row not in seen:
            seen.add(row)
            kept.append(row)
    return FpAbelianGroup(
        name=name,
        generators=generators,
        relations=IntMatrix.from_rows(kept, cols=len(generators)),
    )


def cyclic(order: int, name: str | None = None) -> FpAbelianGroup:
    """Z/order, or Z when order is 0."""
    rows = [[order]] if order else []
    return presentation(("g",), rows, name or (f"Z/{order}" if order else "Z"))


def direct_sum(*groups: FpAbelianGroup) -> FpAbelianGroup:
    generators = []
    rows = []
    offset = 0
    total = sum(g.rank for g in groups)
    for k, group in enumerate(groups):
        generators.extend(f"{label}_{k}" for label in group.generators)
        for row in group.relations.entries:
            rows.append([0] * offset + list(row) + [0] * (total - offset - group.rank))
        offset += group.rank
    return presentation(generators, rows, "+".join(g.name for g in groups))


def smith_form(G: FpAbelianGroup) -> SmithForm:
    """Cached Smith form of G's relation matrix."""
    if G._smith is None:
        G._smith = smith_normal_form(G.relations)
    return G._smith


def _full_diagonal(G: FpAbelianGroup) -> list[int]:
    diagonal = list(smith_form(G).diagonal)
    return diagonal + [0] * (G.rank - len(diagonal))


def canonical_invariants(G: FpAbelianGroup) -> tuple[int, tuple[int, ...]]:
    """(free rank, invariant factors > 1)."""
    diagonal = _full_diagonal(G)
    return diagonal.count(0), tuple(d for d in diagonal if d > 1)


def canonical_orders(G: FpAbelianGroup) -> tuple[int, ...]:
    """Order of each canonical basis element; 0 marks a free coordinate."""
    return tuple(d for d in _full_diagonal(G) if d != 1)


def group_order(G: FpAbelianGroup) -> int | None:
    rank, factors = canonical_invariants(G)
    if rank:
        return None
    order = 1
    for d in factors:
        order *= d
    return order


def reduce(G: FpAbelianGroup, vector) -> tuple[int, ...]:
    """Canonical coordinates of an integer combination of generators.

    With w = v·V, torsion coordinates are taken mod d_i, coordinates with
    d_i = 1 are dropped and free coordinates are kept.
    """
    vector = [int(x) for x in vector]
    if len(vector) != G.rank:
        raise GammaForgeError(f"Vetor com {len(vector)} entradas para {G.rank} geradores")
    V = smith_form(G).v.entries
    coords = []
    for j, d in enumerate(_full_diagonal(G)):
        if d == 1:
            continue
        w = sum(vector[i] * V[i][j] for i in range(G.rank) if vector[i])
        coords.append(w % d if d else w)
    return tuple(coords)


def contains(G: FpAbelianGroup, vector) -> bool:
    """Whether the vector lies in the relation lattice."""
    return not any(reduce(G, vector))


def lift_basis(G: FpAbelianGroup) -> list[tuple[int, ...]]:
    """Generator vectors of the canonical basis elements (rows of V⁻¹)."""
    V_inv = smith_form(G).v_inv.entries
    return [tuple(V_inv[j]) for j, d in enumerate(_full_diagonal(G)) if d != 1]


def lattice_basis(G: FpAbelianGroup) -> list[tuple[int, ...]]:
    """A basis of the relation lattice: d_i times row i of V⁻¹ for each nonzero d_i."""
    V_inv = smith_form(G).v_inv.entries
    return [tuple(d * x for x in V_inv[j]) for j, d in enumerate(_full_diagonal(G)) if d]


def is_isomorphic(G1: FpAbelianGroup, G2: FpAbelianGroup) -> bool:
    return canonical_invariants(G1) == canonical_invariants(G2)


def elements(G: FpAbelianGroup) -> list[tuple[int, ...]]:
    """All canonical coordinate vectors of a finite group, lexicographic."""
    orders = canonical_orders(G)
    if 0 in orders:
        raise GammaForgeError(f"{G.name} e infinito")
    result = [()]
    for d in orders:
        result = [prefix + (x,) for prefix in result for x in range(d)]
    return result


def format_invariants(G: FpAbelianGroup) -> str:
    rank, factors = canonical_invariants(G)
    parts = ["Z"] * rank + [f"Z/{d}" for d in factors]
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------

def _check_finite_group(M: PointedMonoid):
    if not M.is_group():
        raise GammaForgeError(f"{M.name} nao e um grupo abeliano")


def evaluate(M: PointedMonoid, images, vector) -> int:
    """Σ v_i·images_i in the finite group M; c·x is computed as (c mod |M|)·x."""
    return M.total(M.multiple(c % M.size, images[i]) for i, c in enumerate(vector) if c)


def hom_to_finite(
    G: FpAbelianGroup, M: PointedMonoid, guard: int = ENUMERATION_GUARD
) -> list[tuple[int, ...]]:
    """Every generator-image assignment G -> M annihilating all relations, lexicographic."""
    _check_finite_group(M)
    k = G.rank
    candidates = M.size**k
    if candidates > guard:
        raise GuardExceededError(f"Hom({G.name}, {M.name})", candidates, guard)
    checks: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
    for row in G.relations.entries:
        support = [i for i, c in enumerate(row) if c]
        if support:
            checks[support[-1]].append(row)

    results = []
    assignment = [0] * k

    def search(i: int):
        if i == k:
            results.append(tuple(assignment))
            return
        for x in range(M.size):
            assignment[i] = x
            if all(evaluate(M, assignment, row) == M.unit for row in checks[i]):
                search(i + 1)
        assignment[i] = 0

    search(0)
    logger.debug("Hom(%s, %s): %d of %d candidates", G.name, M.name, len(results), candidates)
    return results


def group_completion(M: PointedMonoid) -> FpAbelianGroup:
    """M^gp = Z[M] / <[a] + [b] - [a+b], [0]>."""
    k = M.size
    rows = []
    zero = [0] * k
    zero[M.unit] = 1
    rows.append(zero)
    for a in range(k):
        for b in range(a, k):
            row = [0] * k
            row[a] += 1
            row[b] += 1
            row[M.op(a, b)] -= 1
            rows.append(row)
    return presentation(M.elements, rows, f"{M.name}^gp")


def identity_hom(G: FpAbelianGroup) -> AbelianHom:
    return AbelianHom(source=G, target=G, images=tuple(tuple(int(i == j) for j in range(G.rank)) for i in range(G.rank)))


def apply_hom(h: AbelianHom, vector) -> tuple[int, ...]:
    """Image of an integer vector over source generators, as a vector over target generators."""
    out = [0] * h.target.rank
    for i, c in enumerate(vector):
        if c:
            for j, x in enumerate(h.images[i]):
                out[j] += c * x
    return tuple(out)


def compose_homs(h: AbelianHom, k: AbelianHom) -> AbelianHom:
    """k∘h."""
    if h.target != k.source:
        raise GammaForgeError("Homomorfismos nao componiveis")
    return AbelianHom(source=h.source, target=k.target, images=tuple(apply_hom(k, img) for img in h.images))


def check_well_defined(h: AbelianHom) -> ValidationResult:
    """Every source relation must land in the target relation lattice."""
    result = ValidationResult()
    for row in h.source.relations.entries:
        if not contains(h.target, apply_hom(h, row)):
            result.add_error(f"Relacao {list(row)} nao vai a zero")
    return result


def canonical_matrix(h: AbelianHom) -> list[tuple[int, ...]]:
    """Images of the source's canonical basis in the target's canonical coordinates."""
    return [reduce(h.target, apply_hom(h, lift)) for lift in lift_basis(h.source)]


def homs_equal(h: AbelianHom, k: AbelianHom) -> bool:
    if h.source != k.source or h.target != k.target:
        return False
    return all(
        reduce(h.target, a) == reduce(k.target, b) for a, b in zip(h.images, k.images)
    )


def ensure_well_defined(h: AbelianHom) -> AbelianHom:
    result = check_well_defined(h)
    if not result.is_valid:
        raise InternalConsistencyError("; ".join(result.errors[:3]))
    return h
