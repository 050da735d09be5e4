"""Both sides of the module and algebra adjunctions, enumerated on finite instances.

The left side is always built from naturality alone (every pointed level-1
assignment is extended through the projections and kept when natural), so the
comparison with the additive characterization is an actual check.
"""

import logging
from itertools import product

from config.settings import ENUMERATION_GUARD
from src.models.adjunction import AdjunctionReport, AlgebraMapWitness, PointedAdditiveMap
from src.models.gamma_set import FiniteSemiring, GammaMap, PointedMonoid, TruncatedGammaSet
from src.models.ring import F1Algebra, FpRing, TensorResult
from src.services import abgrp_service as abgrp
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.services import scalars_service as scalars
from src.utils.errors import GammaForgeError, GuardExceededError

logger = logging.getLogger(__name__)


def _check_guard(what: str, size: int, guard: int):
    if size > guard:
        raise GuardExceededError(what, size, guard)
    if size * 2 > guard:
        logger.warning("%s: %d candidatos, perto do limite %d", what, size, guard)


def _pointed_assignments(k: int, M: PointedMonoid, basepoint: int):
    """Every g with g(0) = basepoint, lexicographic in g(1), ..., g(k-1)."""
    for rest in product(range(M.size), repeat=k - 1):
        yield (basepoint,) + rest


# ---------------------------------------------------------------------------
# Modules
# ---------------------------------------------------------------------------

def enumerate_pointed_additive_maps(
    X: TruncatedGammaSet, M: PointedMonoid, guard: int = ENUMERATION_GUARD
) -> list[PointedAdditiveMap]:
    """All g: X(1+) -> M with g(*) = 0 and g(c) = g(a) + g(b) for c ∈ a⊕b."""
    k = X.size(1)
    _check_guard(f"Mapas {X.name} -> {M.name}", M.size ** (k - 1), guard)
    # each triple is tested as soon as its largest index is assigned
    checks: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for a, b, c in hyper.binary_triples(X):
        checks[max(a, b, c)].append((a, b, c))
    results = []
    g = [M.unit] * k

    def search(i: int):
        if i == k:
            results.append(PointedAdditiveMap(source=X.name, target=M.name, assignment=tuple(g)))
            return
        for value in range(M.size):
            g[i] = value
            if all(g[c] == M.op(g[a], g[b]) for a, b, c in checks[i]):
                search(i + 1)
        g[i] = M.unit

    if all(g[c] == M.op(g[a], g[b]) for a, b, c in checks[0]):
        search(1)
    return results


def enumerate_gamma_maps_to_em(
    X: TruncatedGammaSet,
    M: PointedMonoid,
    target: TruncatedGammaSet | None = None,
    guard: int = ENUMERATION_GUARD,
) -> list[GammaMap]:
    """Hom(X, HM): natural maps, found by filtering every pointed level-1 candidate."""
    k = X.size(1)
    _check_guard(f"Hom({X.name}, H({M.name}))", M.size ** (k - 1), guard)
    target = target or gamma_sets.eilenberg_maclane(M, X.max_level)
    maps = []
    for g in _pointed_assignments(k, M, M.unit):
        candidate = gamma_sets.projection_extension(g, X, M, target)
        if gamma_sets.is_natural(candidate):
            maps.append(candidate)
    logger.debug("Hom(%s, H(%s)): %d natural maps", X.name, M.name, len(maps))
    return maps


def phi(f: GammaMap, M: PointedMonoid, tensor: TensorResult) -> tuple[int, ...]:
    """Φ(f): the homomorphism [a] ↦ f(a) on X ⊗ Z, as generator images in M."""
    images = f.level1()
    for record in tensor.relations:
        if abgrp.evaluate(M, images, record.row) != M.unit:
            raise GammaForgeError(f"f nao anula a relacao {list(record.row)}")
    return tuple(images)


def psi(
    h,
    X: TruncatedGammaSet,
    M: PointedMonoid,
    target: TruncatedGammaSet | None = None,
) -> GammaMap:
    """Ψ(h): extend g = h∘ι through the projections."""
    k = X.size(1)
    g = tuple(abgrp.evaluate(M, h, [int(i == a) for i in range(k)]) for a in range(k))
    return gamma_sets.gamma_map_from_level1(g, X, M, target)


def verify_module_adjunction(
    X: TruncatedGammaSet, M: PointedMonoid, guard: int = ENUMERATION_GUARD
) -> AdjunctionReport:
    """Compare Hom(X, HM) with Hom(X ⊗ Z, M) elementwise through Φ and Ψ."""
    target = gamma_sets.eilenberg_maclane(M, X.max_level)
    tensor = scalars.extend_module(X)
    left = enumerate_gamma_maps_to_em(X, M, target, guard)
    right = abgrp.hom_to_finite(tensor.group, M, guard)
    images = [phi(f, M, tensor) for f in left]
    right_set = set(right)
    bijection = len(set(images)) == len(images) and set(images) == right_set
    extensions = [psi(h, X, M, target) for h in right]
    additive = {m.assignment for m in enumerate_pointed_additive_maps(X, M, guard)}
    report = AdjunctionReport(
        source=X.name,
        target=M.name,
        kind="module",
        left_count=len(left),
        right_count=len(right),
        cardinality_match=len(left) == len(right),
        bijection=bijection,
        phi_psi_roundtrip=all(phi(e, M, tensor) == h for e, h in zip(extensions, right)),
        psi_phi_roundtrip=all(
            psi(h, X, M, target).same_components(f) for f, h in zip(left, images)
        ),
        extensions_natural=all(gamma_sets.is_natural(e) for e in extensions),
        characterization_match=additive == {f.level1() for f in left},
    )
    logger.info(
        "Adjuncao de modulos %s, %s: %d = %d (%s)",
        X.name, M.name, report.left_count, report.right_count,
        "ok" if report.passed else "falhou",
    )
    return report


def naturality_check(phi_map: GammaMap, M: PointedMonoid, guard: int = ENUMERATION_GUARD) -> bool:
    """Φ(f∘φ) = Φ(f)∘(φ ⊗ Z) for every f: Y -> HM."""
    X, Y = phi_map.source, phi_map.target
    source_tensor = scalars.extend_module(X)
    target_tensor = scalars.extend_module(Y)
    induced = scalars.extend_map(phi_map, source_tensor, target_tensor)
    em = gamma_sets.eilenberg_maclane(M, X.max_level)
    for f in enumerate_gamma_maps_to_em(Y, M, em, guard):
        h = phi(f, M, target_tensor)
        lhs = phi(gamma_sets.compose_maps(phi_map, f), M, source_tensor)
        rhs = tuple(abgrp.evaluate(M, h, image) for image in induced.images)
        if lhs != rhs:
            logger.warning("Naturalidade em X falha para %s: %s != %s", phi_map.source.name, lhs, rhs)
            return False
    return True


def naturality_in_target(
    X: TruncatedGammaSet,
    u,
    M: PointedMonoid,
    M2: PointedMonoid,
    guard: int = ENUMERATION_GUARD,
) -> bool:
    """Φ(H(u)∘f) = u∘Φ(f) for every f: X -> HM."""
    tensor = scalars.extend_module(X)
    em = gamma_sets.eilenberg_maclane(M, X.max_level)
    em2 = gamma_sets.eilenberg_maclane(M2, X.max_level)
    hu = gamma_sets.eilenberg_maclane_map(u, M, M2, X.max_level, source=em, target=em2)
    for f in enumerate_gamma_maps_to_em(X, M, em, guard):
        lhs = phi(gamma_sets.compose_maps(f, hu), M2, tensor)
        rhs = tuple(u[v] for v in phi(f, M, tensor))
        if lhs != rhs:
            return False
    return True


def verify_spherical_adjunction(pointed_set, F: TruncatedGammaSet, guard: int = ENUMERATION_GUARD) -> dict:
    """Every pointed Y -> F(1+) extends to a natural 𝕊Y -> F that restricts back to it."""
    labels = tuple(pointed_set)
    k = F.size(1)
    _check_guard(f"Mapas {labels} -> {F.name}", k ** (len(labels) - 1), guard)
    source = gamma_sets.spherical(labels, F.max_level)
    checked = 0
    failures = []
    for rest in product(range(k), repeat=len(labels) - 1):
        g = (0,) + rest
        extension = gamma_sets.spherical_map_from_level1(g, labels, F, source)
        checked += 1
        if not gamma_sets.is_natural(extension) or extension.level1() != g:
            failures.append([F.label(1, v) for v in g])
    return {"checked": checked, "failures": failures}


def check_additive_maps_on_higher_sums(
    X: TruncatedGammaSet, M: PointedMonoid, arity: int = 3, guard: int = ENUMERATION_GUARD
) -> dict:
    """Each pointed additive g sends every member of an n-ary sum to Σ g(a_i)."""
    arity = min(arity, X.max_level)
    checked = 0
    violations = []
    for m in enumerate_pointed_additive_maps(X, M, guard):
        outcome = hyper.check_higher_sums(X, M, m.assignment, arity)
        checked += outcome["checked"]
        violations.extend(outcome["violations"])
    return {"arity": arity, "checked": checked, "violations": violations}


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

def _require_ring(R: FiniteSemiring):
    if not R.is_ring():
        raise GammaForgeError(f"{R.name} nao e um anel")


def _algebra_witness(A: F1Algebra, R: FiniteSemiring, g) -> AlgebraMapWitness:
    X, mon = A.carrier, A.monoid
    add = R.additive_monoid()
    return AlgebraMapWitness(
        source=A.name,
        target=R.name,
        assignment=tuple(g),
        pointed=g[0] == 0,
        additive=all(g[c] == add.op(g[a], g[b]) for a, b, c in hyper.binary_triples(X)),
        unital=g[mon.unit] == R.one,
        multiplicative=all(
            g[mon.op(a, b)] == R.mul[g[a]][g[b]] for a, b in product(range(X.size(1)), repeat=2)
        ),
    )


def enumerate_algebra_maps(
    A: F1Algebra, R: FiniteSemiring, guard: int = ENUMERATION_GUARD
) -> list[AlgebraMapWitness]:
    """Pointed, additive, unital and multiplicative g: A(1+) -> R."""
    _require_ring(R)
    witnesses = []
    for m in enumerate_pointed_additive_maps(A.carrier, R.additive_monoid(), guard):
        witness = _algebra_witness(A, R, m.assignment)
        if witness.unital and witness.multiplicative:
            witnesses.append(witness)
    return witnesses


def enumerate_ring_homs(S: FpRing, R: FiniteSemiring, guard: int = ENUMERATION_GUARD) -> list[tuple[int, ...]]:
    """Unital ring homomorphisms S -> R as generator images."""
    _require_ring(R)
    add = R.additive_monoid()
    homs = []
    for h in abgrp.hom_to_finite(S.additive, add, guard):
        if abgrp.evaluate(add, h, S.unit) != R.one:
            continue
        k = len(h)
        if all(
            abgrp.evaluate(add, h, S.products[a][b]) == R.mul[h[a]][h[b]]
            for a, b in product(range(k), repeat=2)
        ):
            homs.append(h)
    return homs


def enumerate_algebra_gamma_maps(
    A: F1Algebra,
    R: FiniteSemiring,
    target: TruncatedGammaSet | None = None,
    guard: int = ENUMERATION_GUARD,
) -> list[GammaMap]:
    """Hom(A, HR) in 𝔽₁-algebras: natural maps whose level 1 is unital and multiplicative."""
    mon = A.monoid
    maps = []
    for f in enumerate_gamma_maps_to_em(A.carrier, R.additive_monoid(), target, guard):
        g = f.level1()
        if g[mon.unit] != R.one:
            continue
        if all(g[mon.op(a, b)] == R.mul[g[a]][g[b]] for a, b in product(range(len(g)), repeat=2)):
            maps.append(f)
    return maps


def verify_algebra_adjunction(
    A: F1Algebra, R: FiniteSemiring, guard: int = ENUMERATION_GUARD
) -> AdjunctionReport:
    """Compare Hom(A, HR) with Hom(A ⊗ Z, R) elementwise through Φ and Ψ."""
    _require_ring(R)
    X = A.carrier
    add = R.additive_monoid()
    target = gamma_sets.eilenberg_maclane(add, X.max_level)
    tensor = scalars.extend_algebra(A)
    left = enumerate_algebra_gamma_maps(A, R, target, guard)
    right = enumerate_ring_homs(tensor.ring, R, guard)
    images = [phi(f, add, tensor) for f in left]
    extensions = [psi(h, X, add, target) for h in right]
    characterized = {w.assignment for w in enumerate_algebra_maps(A, R, guard)}
    report = AdjunctionReport(
        source=A.name,
        target=R.name,
        kind="algebra",
        left_count=len(left),
        right_count=len(right),
        cardinality_match=len(left) == len(right),
        bijection=len(set(images)) == len(images) and set(images) == set(right),
        phi_psi_roundtrip=all(phi(e, add, tensor) == h for e, h in zip(extensions, right)),
        psi_phi_roundtrip=all(
            psi(h, X, add, target).same_components(f) for f, h in zip(left, images)
        ),
        extensions_natural=all(
            gamma_sets.is_natural(e) and _algebra_witness(A, R, e.level1()).multiplicative
            for e in extensions
        ),
        characterization_match=characterized == {f.level1() for f in left},
    )
    logger.info(
        "Adjuncao de algebras %s, %s: %d = %d (%s)",
        A.name, R.name, report.left_count, report.right_count,
        "ok" if report.passed else "falhou",
    )
    return report
