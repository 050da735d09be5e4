"""Truncated Γ-sets: the H and 𝕊 constructions, collapse quotients, maps and validation."""

import logging
from itertools import product

import numpy as np

from config.settings import DEFAULT_MAX_LEVEL, ENUMERATION_GUARD
from src.models.gamma import GammaMorphism
from src.models.gamma_set import GammaMap, PointedMonoid, TruncatedGammaSet
from src.services import gamma_cat_service as gamma_cat
from src.services import hyper_service
from src.utils.errors import (
    CompositionError,
    GammaForgeError,
    GammaSetValidationError,
    GuardExceededError,
    NonAdditiveMapError,
    UnknownNameError,
)
from src.utils.text_processing import format_tuple
from src.utils.validators import ValidationResult

logger = logging.getLogger(__name__)

Selection = tuple[frozenset[int], ...]


def _build(name: str, max_level: int, levels, table_for, guard: int) -> TruncatedGammaSet:
    action = {
        f: tuple(int(x) for x in table_for(f)) for f in gamma_cat.all_morphisms(max_level, guard)
    }
    gamma_set = TruncatedGammaSet(name=name, max_level=max_level, levels=levels, action=action)
    logger.debug(
        "Built %s: level sizes %s", name, [len(level) for level in gamma_set.levels]
    )
    return gamma_set


def _tuples(k: int, n: int) -> np.ndarray:
    """All n-tuples over range(k), lexicographic, as a (k**n, n) array."""
    return np.array(list(product(range(k), repeat=n)), dtype=np.int64).reshape(k**n, n)


def _encode(coords: np.ndarray, k: int) -> np.ndarray:
    """Mixed radix index of each row; the first coordinate is the most significant."""
    m = coords.shape[1]
    weights = k ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return (coords * weights).sum(axis=1)


def _em_labels(M: PointedMonoid, n: int) -> tuple[str, ...]:
    if n == 1:
        return M.elements
    return tuple(format_tuple(M.elements[i] for i in t) for t in product(range(M.size), repeat=n))


def eilenberg_maclane(
    M: PointedMonoid,
    max_level: int = DEFAULT_MAX_LEVEL,
    guard: int = ENUMERATION_GUARD,
    name: str | None = None,
) -> TruncatedGammaSet:
    """HM: level n is M^n, and f sends a tuple to its fiberwise sums."""
    if M.zero is not None:
        raise GammaForgeError("H exige um monoide aditivo (unidade no indice 0, sem zero absorvente)")
    k = M.size
    if k**max_level > guard:
        raise GuardExceededError(f"H({M.name}) no nivel {max_level}", k**max_level, guard)
    op = np.asarray(M.table, dtype=np.int64)
    coords = [_tuples(k, n) for n in range(max_level + 1)]

    def table_for(f: GammaMorphism) -> np.ndarray:
        x = coords[f.source.n]
        y = np.zeros((x.shape[0], f.target.n), dtype=np.int64)
        for i, j in enumerate(f.images):
            if j:
                y[:, j - 1] = op[y[:, j - 1], x[:, i]]
        return _encode(y, k)

    levels = tuple(_em_labels(M, n) for n in range(max_level + 1))
    return _build(name or f"H({M.name})", max_level, levels, table_for, guard)


def _spherical(base: str, rest: tuple[str, ...], max_level: int, name: str, label, guard: int):
    k = len(rest)

    def table_for(f: GammaMorphism) -> np.ndarray:
        n = f.source.n
        src = np.arange(n * k, dtype=np.int64)
        images = np.asarray((0,) + f.images, dtype=np.int64)
        target_i = images[src // k + 1]
        mapped = np.where(target_i == 0, 0, 1 + (target_i - 1) * k + src % k)
        return np.concatenate(([0], mapped))

    levels = tuple(
        (base,) + tuple(label(y, i, n) for i in range(1, n + 1) for y in rest)
        for n in range(max_level + 1)
    )
    return _build(name, max_level, levels, table_for, guard)


def spherical(
    pointed_set,
    max_level: int = DEFAULT_MAX_LEVEL,
    guard: int = ENUMERATION_GUARD,
    name: str | None = None,
) -> TruncatedGammaSet:
    """𝕊Y: level n is Y ∧ n+, the basepoint plus pairs (y, i) with y ≠ *.

    `pointed_set` lists labels with the basepoint first.
    """
    labels = tuple(pointed_set)
    if not labels:
        raise GammaForgeError("Conjunto pontuado vazio")
    if len(set(labels)) != len(labels):
        raise GammaForgeError("Rotulos repetidos no conjunto pontuado")

    def label(y: str, i: int, n: int) -> str:
        return y if n == 1 else f"({y},{i})"

    return _spherical(
        labels[0], labels[1:], max_level, name or f"S{{{','.join(labels)}}}", label, guard
    )


def f1(max_level: int = DEFAULT_MAX_LEVEL, guard: int = ENUMERATION_GUARD) -> TruncatedGammaSet:
    """𝔽₁ = 𝕊{0,1}, with level n labelled 0..n."""
    return _spherical("0", ("1",), max_level, "F1", lambda y, i, n: str(i), guard)


def terminal(max_level: int = DEFAULT_MAX_LEVEL, guard: int = ENUMERATION_GUARD) -> TruncatedGammaSet:
    levels = tuple(("*",) for _ in range(max_level + 1))
    return _build("terminal", max_level, levels, lambda f: (0,), guard)


def basepoint_selection(X: TruncatedGammaSet) -> Selection:
    return tuple(frozenset({0}) for _ in X.levels)


def full_selection(X: TruncatedGammaSet) -> Selection:
    return tuple(frozenset(range(X.size(n))) for n in range(X.max_level + 1))


def element_indices(elements, labels, owner: str) -> list[int]:
    """Positions of `labels` (names or integer indices) inside `elements`."""
    members = []
    for label in labels:
        if isinstance(label, str):
            if label not in elements:
                raise UnknownNameError(f"Elemento '{label}' nao existe em {owner}")
            members.append(elements.index(label))
        elif 0 <= int(label) < len(elements):
            members.append(int(label))
        else:
            raise UnknownNameError(f"Indice {label} fora de {owner}")
    return members


def em_subobject(M: PointedMonoid, subset, max_level: int = DEFAULT_MAX_LEVEL) -> Selection:
    """The selection H(S) ⊆ H(M): tuples all of whose coordinates lie in S."""
    members = element_indices(M.elements, subset, M.name)
    if 0 not in members:
        members.append(0)
    selection = []
    for n in range(max_level + 1):
        inside = np.isin(_tuples(M.size, n), members).all(axis=1)
        selection.append(frozenset(int(i) for i in np.nonzero(inside)[0]))
    return tuple(selection)


def _check_selection(X: TruncatedGammaSet, A: Selection):
    if len(A) != X.max_level + 1:
        raise GammaSetValidationError("Selecao com numero de niveis diferente do Γ-set")
    for n, chosen in enumerate(A):
        if 0 not in chosen:
            raise GammaSetValidationError(f"Selecao nao contem o ponto base do nivel {n}")
        if any(not 0 <= x < X.size(n) for x in chosen):
            raise GammaSetValidationError(f"Selecao fora do nivel {n}")
    for f in gamma_cat.all_morphisms(X.max_level):
        members = np.fromiter(sorted(A[f.source.n]), dtype=np.int64)
        images = X.table(f)[members]
        if not np.isin(images, list(A[f.target.n])).all():
            raise GammaSetValidationError(
                f"Selecao nao e fechada sob a acao de {f.key}", morphism=f.key
            )


def collapse_projection(
    X: TruncatedGammaSet, A: Selection, name: str | None = None, guard: int = ENUMERATION_GUARD
) -> tuple[TruncatedGammaSet, GammaMap]:
    """X/A collapsing each A(n) to the basepoint, with the canonical projection X -> X/A."""
    _check_selection(X, A)
    quotient_index = []
    kept = []
    for n in range(X.max_level + 1):
        keep = np.array([x for x in range(X.size(n)) if x not in A[n]], dtype=np.int64)
        q = np.zeros(X.size(n), dtype=np.int64)
        q[keep] = np.arange(1, len(keep) + 1)
        quotient_index.append(q)
        kept.append(np.concatenate(([0], keep)).astype(np.int64))

    def table_for(f: GammaMorphism) -> np.ndarray:
        return quotient_index[f.target.n][X.table(f)[kept[f.source.n]]]

    levels = tuple(
        tuple(f"[{X.label(n, int(x))}]" for x in kept[n]) for n in range(X.max_level + 1)
    )
    quotient = _build(name or f"{X.name}/A", X.max_level, levels, table_for, guard)
    projection = GammaMap(
        source=X,
        target=quotient,
        components=tuple(tuple(int(y) for y in q) for q in quotient_index),
    )
    return quotient, projection


def collapse_quotient(
    X: TruncatedGammaSet, A: Selection, name: str | None = None, guard: int = ENUMERATION_GUARD
) -> TruncatedGammaSet:
    return collapse_projection(X, A, name, guard)[0]


def _tables_by_key(X: TruncatedGammaSet) -> dict[tuple, np.ndarray]:
    return {(f.source.n, f.target.n, f.images): X.table(f) for f in X.action}


def validate_functoriality(X: TruncatedGammaSet) -> ValidationResult:
    """Basepoint, identity and composition laws over every morphism up to max_level."""
    result = ValidationResult()
    tables = _tables_by_key(X)
    N = X.max_level
    for f in X.action:
        if X.table(f)[0] != 0:
            result.add_error(f"Ponto base nao preservado por {f.key}")
    for n in range(N + 1):
        ident = gamma_cat.identity(n)
        if not np.array_equal(X.table(ident), np.arange(X.size(n))):
            result.add_error(f"X({ident.key}) nao e a identidade")
    for n in range(N + 1):
        for m in range(N + 1):
            for f in gamma_cat.enumerate_homs(n, m):
                tf = tables[(n, m, f.images)]
                for k in range(N + 1):
                    for g in gamma_cat.enumerate_homs(m, k):
                        g_full = (0,) + g.images
                        gf = tuple(g_full[i] for i in f.images)
                        if not np.array_equal(tables[(m, k, g.images)][tf], tables[(n, k, gf)]):
                            result.add_error(
                                f"Composicao falha: X({g.key}) o X({f.key}) != "
                                f"X({GammaMorphism.of(n, k, gf).key})"
                            )
    if not result.is_valid:
        logger.info("%s: %d violacoes de funtorialidade", X.name, len(result.errors))
    return result


def validate_naturality(phi: GammaMap) -> ValidationResult:
    result = ValidationResult()
    X, Y = phi.source, phi.target
    components = [np.asarray(c, dtype=np.int64) for c in phi.components]
    for n, component in enumerate(components):
        if component[0] != 0:
            result.add_error(f"Componente {n} nao preserva o ponto base")
    for f in gamma_cat.all_morphisms(phi.max_level):
        lhs = components[f.target.n][X.table(f)]
        rhs = Y.table(f)[components[f.source.n]]
        bad = int(np.count_nonzero(lhs != rhs))
        if bad:
            result.add_error(f"Quadrado de naturalidade falha em {f.key} ({bad} elementos)")
    return result


def is_natural(phi: GammaMap) -> bool:
    """Short-circuiting naturality test, for hom-set enumeration."""
    X, Y = phi.source, phi.target
    components = [np.asarray(c, dtype=np.int64) for c in phi.components]
    if any(component[0] != 0 for component in components):
        return False
    for f in gamma_cat.all_morphisms(phi.max_level):
        if not np.array_equal(components[f.target.n][X.table(f)], Y.table(f)[components[f.source.n]]):
            return False
    return True


def identity_map(X: TruncatedGammaSet) -> GammaMap:
    return GammaMap(
        source=X,
        target=X,
        components=tuple(tuple(range(X.size(n))) for n in range(X.max_level + 1)),
    )


def compose_maps(phi: GammaMap, psi: GammaMap) -> GammaMap:
    """psi∘phi."""
    if phi.target != psi.source:
        raise CompositionError("Destino do primeiro mapa difere da origem do segundo")
    components = tuple(
        tuple(psi.components[n][y] for y in phi.components[n]) for n in range(phi.max_level + 1)
    )
    return GammaMap(source=phi.source, target=psi.target, components=components)


def _check_em_target(target: TruncatedGammaSet, M: PointedMonoid):
    if any(target.size(n) != M.size**n for n in range(target.max_level + 1)):
        raise GammaForgeError(f"{target.name} nao e o objeto H({M.name})")


def gamma_map_from_level1(
    g,
    X: TruncatedGammaSet,
    M: PointedMonoid,
    target: TruncatedGammaSet | None = None,
) -> GammaMap:
    """The unique extension X -> HM of a pointed additive g: X(1+) -> M.

    Level n sends x to (g(X(p_1)x), ..., g(X(p_n)x)).
    """
    g = tuple(int(v) for v in g)
    if len(g) != X.size(1):
        raise GammaForgeError(f"g precisa de {X.size(1)} valores, recebeu {len(g)}")
    hyper_service.check_additive(X, M, g)
    return projection_extension(g, X, M, target)


def projection_extension(
    g,
    X: TruncatedGammaSet,
    M: PointedMonoid,
    target: TruncatedGammaSet | None = None,
) -> GammaMap:
    """The level-wise candidate x ↦ (g(X(p_1)x), ..., g(X(p_n)x)), natural or not."""
    if target is None:
        target = eilenberg_maclane(M, X.max_level)
    _check_em_target(target, M)
    values = np.asarray(g, dtype=np.int64)
    k = M.size
    components = [(0,)]
    for n in range(1, X.max_level + 1):
        index = np.zeros(X.size(n), dtype=np.int64)
        for i in range(1, n + 1):
            index += values[X.table(gamma_cat.projection(i, n))] * k ** (n - i)
        components.append(tuple(int(v) for v in index))
    return GammaMap(source=X, target=target, components=tuple(components))


def eilenberg_maclane_map(
    u,
    M: PointedMonoid,
    M2: PointedMonoid,
    max_level: int = DEFAULT_MAX_LEVEL,
    source: TruncatedGammaSet | None = None,
    target: TruncatedGammaSet | None = None,
) -> GammaMap:
    """H(u): HM -> HM' for a monoid homomorphism u, applied coordinatewise."""
    u = tuple(int(v) for v in u)
    if len(u) != M.size or u[0] != 0:
        raise NonAdditiveMapError("u deve ser pontuado e definido em todo M")
    for a, b in product(range(M.size), repeat=2):
        if u[M.op(a, b)] != M2.op(u[a], u[b]):
            raise NonAdditiveMapError(
                f"u nao e homomorfismo em ({M.elements[a]}, {M.elements[b]})",
                triple=(M.elements[a], M.elements[b], M.elements[M.op(a, b)]),
            )
    source = source or eilenberg_maclane(M, max_level)
    target = target or eilenberg_maclane(M2, max_level)
    _check_em_target(source, M)
    _check_em_target(target, M2)
    table = np.asarray(u, dtype=np.int64)
    components = tuple(
        tuple(int(v) for v in _encode(table[_tuples(M.size, n)], M2.size))
        for n in range(source.max_level + 1)
    )
    return GammaMap(source=source, target=target, components=components)


def spherical_map_from_level1(
    g,
    pointed_set,
    F: TruncatedGammaSet,
    source: TruncatedGammaSet | None = None,
) -> GammaMap:
    """The extension 𝕊Y -> F of a pointed map g: Y -> F(1+); (y, i) goes to F(1 ↦ i)(g(y))."""
    labels = tuple(pointed_set)
    g = tuple(int(v) for v in g)
    if len(g) != len(labels) or g[0] != 0:
        raise GammaForgeError("g deve ser pontuado e definido em todo Y")
    source = source or spherical(labels, F.max_level)
    rest = np.asarray(g[1:], dtype=np.int64)
    components = [(0,)]
    for n in range(1, F.max_level + 1):
        images = [0]
        for i in range(1, n + 1):
            images.extend(int(v) for v in F.table(gamma_cat.inclusion(i, n))[rest])
        components.append(tuple(images))
    return GammaMap(source=source, target=F, components=tuple(components))


def element_index(X: TruncatedGammaSet, level: int, label: str) -> int:
    """Index of `label` at `level`; quotient labels may be given without brackets."""
    for candidate in (label, f"[{label}]"):
        try:
            return X.index(level, candidate)
        except KeyError:
            continue
    raise UnknownNameError(f"Elemento '{label}' nao existe no nivel {level} de {X.name}")
