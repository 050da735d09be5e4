"""Extension of scalars to Z for Γ-sets and 𝔽₁-algebras."""

import logging
from itertools import permutations, product

import sympy

from config.settings import (
    DEFAULT_MAX_LEVEL,
    ENUMERATION_GUARD,
    RING_ISO_MAX_ELEMENTS,
    RING_ISO_MAX_RANK,
)
from src.models.abelian import AbelianHom
from src.models.gamma_set import FiniteSemiring, GammaMap, PointedMonoid, TruncatedGammaSet
from src.models.ring import F1Algebra, FpRing, RelationRecord, TensorResult
from src.services import abgrp_service as abgrp
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.utils.errors import GammaForgeError, InternalConsistencyError, TruncationError, UnsupportedError
from src.utils.validators import ValidationResult

logger = logging.getLogger(__name__)


def _unit_vector(k: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(k))


# ---------------------------------------------------------------------------
# Modules
# ---------------------------------------------------------------------------

def _module_relations(X: TruncatedGammaSet) -> list[RelationRecord]:
    """[*] = 0 and [a] + [b] - [c] = 0 for every c ∈ a⊕b, in (a, b, c) order."""
    if X.max_level < 2:
        raise TruncationError("A extensao de escalares exige o nivel 2")
    k = X.size(1)
    records: dict[tuple[int, ...], list[tuple[str, str, str]]] = {}
    kinds: dict[tuple[int, ...], str] = {}
    basepoint = _unit_vector(k, 0)
    records[basepoint] = []
    kinds[basepoint] = "basepoint"
    for a, b, c in hyper.binary_triples(X):
        row = [0] * k
        row[a] += 1
        row[b] += 1
        row[c] -= 1
        row = tuple(row)
        if not any(row):
            continue
        records.setdefault(row, []).append((X.label(1, a), X.label(1, b), X.label(1, c)))
        kinds.setdefault(row, "additivity")
    return [
        RelationRecord(row=row, kind=kinds[row], sources=tuple(sources))
        for row, sources in records.items()
    ]


def extend_module(X: TruncatedGammaSet) -> TensorResult:
    """X ⊗ Z: generators X(1+), relations from the basepoint and every binary sum."""
    relations = _module_relations(X)
    group = abgrp.presentation(X.levels[1], [r.row for r in relations], name=f"{X.name}⊗Z")
    k = X.size(1)
    iota = tuple(abgrp.reduce(group, _unit_vector(k, a)) for a in range(k))
    logger.debug(
        "%s: %d generators, %d distinct relations, invariants %s",
        X.name, k, len(relations), abgrp.canonical_invariants(group),
    )
    return TensorResult(source=X.name, group=group, iota=iota, relations=tuple(relations))


def check_unit_map(result: TensorResult) -> ValidationResult:
    """ι is pointed and respects every recorded relation."""
    check = ValidationResult()
    if any(result.iota[0]):
        check.add_error("ι(*) != 0")
    for record in result.relations:
        if not abgrp.contains(result.group, record.row):
            check.add_error(f"Relacao {list(record.row)} nao se anula no grupo")
    return check


def extend_map(
    phi: GammaMap,
    source: TensorResult | None = None,
    target: TensorResult | None = None,
) -> AbelianHom:
    """φ ⊗ Z: the generator [a] goes to [φ(a)]; raises if a relation is not preserved."""
    source = source or extend_module(phi.source)
    target = target or extend_module(phi.target)
    k = phi.target.size(1)
    hom = AbelianHom(
        source=source.group,
        target=target.group,
        images=tuple(_unit_vector(k, y) for y in phi.level1()),
    )
    return abgrp.ensure_well_defined(hom)


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

def spherical_algebra(
    M: PointedMonoid, max_level: int = DEFAULT_MAX_LEVEL, guard: int = ENUMERATION_GUARD
) -> F1Algebra:
    if M.zero != 0:
        raise GammaForgeError("A algebra esferica exige um monoide pontuado com zero")
    carrier = gamma_sets.spherical(M.elements, max_level, guard, name=f"S[{M.name}]")
    return F1Algebra(name=f"S[{M.name}]", carrier=carrier, monoid=M)


def em_algebra(
    R: FiniteSemiring, max_level: int = DEFAULT_MAX_LEVEL, guard: int = ENUMERATION_GUARD
) -> F1Algebra:
    carrier = gamma_sets.eilenberg_maclane(R.additive_monoid(), max_level, guard, name=f"H({R.name})")
    return F1Algebra(name=f"H({R.name})", carrier=carrier, monoid=R.multiplicative_monoid())


def quotient_algebra(
    R: FiniteSemiring, ideal, max_level: int = DEFAULT_MAX_LEVEL, guard: int = ENUMERATION_GUARD
) -> F1Algebra:
    """H(R)/H(I) for an ideal I, with [a]·[b] = [ab] on level 1."""
    members = set(gamma_sets.element_indices(R.elements, ideal, R.name))
    members.add(0)
    for a, b in product(range(R.size), repeat=2):
        if a in members and b in members and R.add[a][b] not in members:
            raise GammaForgeError(f"{sorted(members)} nao e fechado sob a soma")
        if a in members and R.mul[a][b] not in members:
            raise GammaForgeError(f"{sorted(members)} nao e um ideal")
    if R.one in members:
        raise GammaForgeError("O ideal nao pode conter 1")
    M = R.additive_monoid()
    H = gamma_sets.eilenberg_maclane(M, max_level, guard, name=f"H({R.name})")
    name = f"H({R.name})/H(I)"
    carrier = gamma_sets.collapse_quotient(
        H, gamma_sets.em_subobject(M, members, max_level), name, guard
    )
    kept = [0] + [a for a in range(R.size) if a not in members]
    position = {a: i for i, a in enumerate(kept)}

    def mul(i: int, j: int) -> int:
        c = R.mul[kept[i]][kept[j]]
        return 0 if c in members else position[c]

    monoid = PointedMonoid(
        name=name,
        elements=carrier.levels[1],
        table=tuple(tuple(mul(i, j) for j in range(len(kept))) for i in range(len(kept))),
        unit=position[R.one],
        zero=0,
    )
    return F1Algebra(name=name, carrier=carrier, monoid=monoid)


def underlying_monoid(A: F1Algebra) -> PointedMonoid:
    return A.monoid


def _saturate(generators, rows, product_index, name: str):
    """Close the relation lattice under multiplication by generators.

    Returns the group and the rows added; product_index(a, b) is the generator
    index of a·b, or None when the product is zero.
    """
    k = len(generators)

    def times_generator(vector, g):
        out = [0] * k
        for a, c in enumerate(vector):
            if c:
                p = product_index(a, g)
                if p is not None:
                    out[p] += c
        return tuple(out)

    group = abgrp.presentation(generators, rows, name)
    added = []
    while True:
        new_rows = []
        for r in abgrp.lattice_basis(group):
            for g in range(k):
                candidate = times_generator(r, g)
                if not abgrp.contains(group, candidate) and candidate not in new_rows:
                    new_rows.append(candidate)
        if not new_rows:
            return group, added
        added.extend(new_rows)
        group = abgrp.presentation(generators, abgrp.lattice_basis(group) + new_rows, name)


def _ring(name: str, generators, rows, product_index, unit_index: int) -> tuple[FpRing, list]:
    group, added = _saturate(generators, rows, product_index, name)
    k = len(generators)
    zero = (0,) * k
    products = tuple(
        tuple(
            zero if product_index(a, b) is None else _unit_vector(k, product_index(a, b))
            for b in range(k)
        )
        for a in range(k)
    )
    ring = FpRing(name=name, additive=group, products=products, unit=_unit_vector(k, unit_index))
    return ring, added


def extend_algebra(A: F1Algebra) -> TensorResult:
    """A ⊗ Z: the monoid ring of A(1+) modulo the ideal generated by the module relations."""
    relations = _module_relations(A.carrier)
    name = f"{A.name}⊗Z"
    ring, added = _ring(
        name, A.carrier.levels[1], [r.row for r in relations], A.monoid.op, A.monoid.unit
    )
    if added:
        logger.warning("%s: ideal saturation added %d relations", name, len(added))
    check = ring_axioms(ring)
    if not check.is_valid:
        raise InternalConsistencyError(f"{name}: " + "; ".join(check.errors[:3]))
    k = A.carrier.size(1)
    records = list(relations) + [RelationRecord(row=row, kind="ideal") for row in added]
    return TensorResult(
        source=A.name,
        group=ring.additive,
        iota=tuple(abgrp.reduce(ring.additive, _unit_vector(k, a)) for a in range(k)),
        relations=tuple(records),
        ring=ring,
        saturation_added=bool(added),
    )


def monoid_ring(M: PointedMonoid) -> FpRing:
    """Z[M] with 0_M identified with 0: free on M minus its zero."""
    if M.zero != 0:
        raise GammaForgeError("O anel de monoide exige um monoide pontuado com zero")

    def product_index(a, b):
        c = M.op(a + 1, b + 1)
        return None if c == 0 else c - 1

    ring, _ = _ring(f"Z[{M.name}]", M.elements[1:], [], product_index, M.unit - 1)
    return ring


def ring_completion(R: FiniteSemiring) -> FpRing:
    """R^gp presented directly: Z[R] modulo [a]+[b]-[a+b] and [0], with [a]·[b] = [ab]."""
    completion = abgrp.group_completion(R.additive_monoid())
    ring, _ = _ring(
        f"{R.name}^gp",
        R.elements,
        completion.relations.entries,
        lambda a, b: R.mul[a][b],
        R.one,
    )
    return ring


def ring_axioms(S: FpRing) -> ValidationResult:
    """Well-definedness, commutativity, associativity and unit law on generators."""
    result = ValidationResult()
    G = S.additive
    k = len(S.generators)
    basis = [_unit_vector(k, a) for a in range(k)]
    for r in abgrp.lattice_basis(G):
        for e in basis:
            if not abgrp.contains(G, S.multiply(r, e)):
                result.add_error(f"Multiplicacao mal definida: relacao {list(r)} vezes gerador")
    for a, b in product(range(k), repeat=2):
        if abgrp.reduce(G, S.products[a][b]) != abgrp.reduce(G, S.products[b][a]):
            result.add_error(f"Nao comutativo em ({S.generators[a]}, {S.generators[b]})")
    for a, b, c in product(range(k), repeat=3):
        left = S.multiply(S.products[a][b], basis[c])
        right = S.multiply(basis[a], S.products[b][c])
        if abgrp.reduce(G, left) != abgrp.reduce(G, right):
            result.add_error(
                f"Nao associativo em ({S.generators[a]}, {S.generators[b]}, {S.generators[c]})"
            )
    for a in range(k):
        if abgrp.reduce(G, S.multiply(S.unit, basis[a])) != abgrp.reduce(G, basis[a]):
            result.add_error(f"Lei da unidade falha em {S.generators[a]}")
    return result


# ---------------------------------------------------------------------------
# Ring isomorphism
# ---------------------------------------------------------------------------

def canonical_structure(S: FpRing) -> dict:
    """Multiplication and unit in the canonical basis of the additive group."""
    G = S.additive
    lifts = abgrp.lift_basis(G)
    return {
        "orders": abgrp.canonical_orders(G),
        "table": [[abgrp.reduce(G, S.multiply(u, v)) for v in lifts] for u in lifts],
        "unit": abgrp.reduce(G, S.unit),
    }


def _reduce_coords(vector, orders) -> tuple[int, ...]:
    return tuple(x % d if d else x for x, d in zip(vector, orders))


def _combine(images, coords, orders) -> tuple[int, ...]:
    out = [0] * len(orders)
    for c, image in zip(coords, images):
        if c:
            for j, x in enumerate(image):
                out[j] += c * x
    return _reduce_coords(out, orders)


def _canonical_product(structure: dict, x, y) -> tuple[int, ...]:
    orders = structure["orders"]
    out = [0] * len(orders)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj:
                for c, z in enumerate(structure["table"][i][j]):
                    out[c] += xi * yj * z
    return _reduce_coords(out, orders)


def _respects_structure(images, source: dict, target: dict) -> bool:
    orders = target["orders"]
    if _combine(images, source["unit"], orders) != target["unit"]:
        return False
    for i, j in product(range(len(images)), repeat=2):
        lhs = _combine(images, source["table"][i][j], orders)
        if lhs != _canonical_product(target, images[i], images[j]):
            return False
    return True


def _finite_candidates(orders):
    """Per basis element of order d, every target element x with d·x = 0."""
    elements = [()]
    for d in orders:
        elements = [prefix + (x,) for prefix in elements for x in range(d)]
    return [
        [x for x in elements if not any((d * xi) % dj for xi, dj in zip(x, orders))]
        for d in orders
    ]


def _is_bijective_finite(images, orders) -> bool:
    seen = set()
    ranges = [range(d) for d in orders]
    for coords in product(*ranges):
        image = _combine(images, coords, orders)
        if image in seen:
            return False
        seen.add(image)
    return True


def _free_candidates(rank: int):
    if rank <= 3:
        rows = list(product((-1, 0, 1), repeat=rank))
        yield from product(rows, repeat=rank)
        return
    for perm in permutations(range(rank)):
        for signs in product((1, -1), repeat=rank):
            yield tuple(
                tuple(signs[i] if j == perm[i] else 0 for j in range(rank)) for i in range(rank)
            )


def trace_discriminant(structure: dict) -> int:
    """Determinant of the trace form Tr(e_i·e_j) on a torsion-free canonical basis."""
    table = structure["table"]
    rank = len(table)
    traces = [sum(table[k][j][j] for j in range(rank)) for k in range(rank)]
    gram = [
        [sum(table[i][j][k] * traces[k] for k in range(rank)) for j in range(rank)]
        for i in range(rank)
    ]
    return int(sympy.Matrix(gram).det()) if rank else 1


def rings_isomorphic(
    S: FpRing,
    T: FpRing,
    max_elements: int = RING_ISO_MAX_ELEMENTS,
    max_rank: int = RING_ISO_MAX_RANK,
) -> bool:
    """Decide whether S and T are isomorphic as unital rings.

    Finite rings up to max_elements are searched exhaustively. A torsion-free
    ring of rank 1 is Z and one of rank 2 is Z[x]/(x^2 + bx + c), so up to
    rank 2 the trace discriminant decides. At rank 3 and 4 a differing
    discriminant answers False; otherwise integer matrices with entries in
    {-1, 0, 1} (rank 3) or signed permutations (rank 4) are tried, and a
    search that finds nothing raises UnsupportedError. Mixed rings are not
    supported.
    """
    if abgrp.canonical_invariants(S.additive) != abgrp.canonical_invariants(T.additive):
        return False
    rank, factors = abgrp.canonical_invariants(S.additive)
    if rank and factors:
        raise UnsupportedError("Isomorfismo de aneis com parte livre e torcao nao suportado")
    source, target = canonical_structure(S), canonical_structure(T)
    if rank:
        if rank > max_rank:
            raise UnsupportedError(f"Posto {rank} acima do limite {max_rank}")
        same_discriminant = trace_discriminant(source) == trace_discriminant(target)
        if rank <= 2 or not same_discriminant:
            return same_discriminant
        for images in _free_candidates(rank):
            if _respects_structure(images, source, target):
                if sympy.Matrix(images).det() in (1, -1):
                    return True
        raise UnsupportedError(
            f"Busca limitada sem isomorfismo entre {S.name} e {T.name} (posto {rank}): inconclusivo"
        )
    order = abgrp.group_order(S.additive)
    if order > max_elements:
        raise UnsupportedError(f"{order} elementos acima do limite {max_elements}")
    orders = target["orders"]
    candidates = _finite_candidates(orders)
    for images in product(*candidates):
        if _respects_structure(images, source, target) and _is_bijective_finite(images, orders):
            return True
    return False
