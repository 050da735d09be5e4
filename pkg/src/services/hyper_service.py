"""Multivalued sums in Γ-sets, generalized associativity, hyperfield tables and plasma embeddings."""

import logging
from itertools import combinations, product

import numpy as np

from config.settings import ENUMERATION_GUARD, PLASMA_MAX_LEVEL
from src.models.gamma import GammaMorphism
from src.models.gamma_set import GammaMap, PointedMonoid, TruncatedGammaSet
from src.models.hyper import AssociativityCheck, HyperOpTable, SumQuery, SumResult
from src.services import gamma_cat_service as gamma_cat
from src.utils.errors import (
    GammaForgeError,
    GuardExceededError,
    InternalConsistencyError,
    NonAdditiveMapError,
    PartitionError,
    TruncationError,
)
from src.utils.text_processing import format_tuple
from src.utils.validators import ValidationResult

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# n-ary sums
# ---------------------------------------------------------------------------

def _check_arity(X: TruncatedGammaSet, n: int):
    if n > X.max_level:
        raise TruncationError(f"Soma de aridade {n} exige o nivel {n}, mas {X.name} vai ate {X.max_level}")


def _exhibit_mask(X: TruncatedGammaSet, family) -> np.ndarray:
    """Level-n elements whose i-th projection lies in family[i] for every i."""
    n = len(family)
    _check_arity(X, n)
    mask = np.ones(X.size(n), dtype=bool)
    for i, allowed in enumerate(family, start=1):
        allowed = list(allowed)
        if any(not 0 <= a < X.size(1) for a in allowed):
            raise GammaForgeError(f"Elemento fora do nivel 1 de {X.name}")
        mask &= np.isin(X.table(gamma_cat.projection(i, n)), allowed)
    return mask


def subset_sum(X: TruncatedGammaSet, family) -> frozenset[int]:
    """⊕ A_i: the union of the n-ary sums over every choice a_i ∈ A_i."""
    family = [tuple(a) for a in family]
    mask = _exhibit_mask(X, family)
    values = X.table(gamma_cat.sum_morphism(len(family)))[mask]
    return frozenset(int(v) for v in values)


def sum_values(X: TruncatedGammaSet, arguments) -> frozenset[int]:
    return subset_sum(X, [(int(a),) for a in arguments])


def nary_sum(X: TruncatedGammaSet, arguments) -> SumResult:
    """{X(s_n)(z) : X(p_i)(z) = a_i for all i}, with the exhibiting elements z."""
    arguments = tuple(int(a) for a in arguments)
    mask = _exhibit_mask(X, [(a,) for a in arguments])
    exhibits = np.nonzero(mask)[0]
    values = sorted({int(v) for v in X.table(gamma_cat.sum_morphism(len(arguments)))[exhibits]})
    return SumResult(
        query=SumQuery(
            gamma_set=X.name,
            arity=len(arguments),
            arguments=tuple(X.label(1, a) for a in arguments),
        ),
        values=tuple(values),
        labels=tuple(X.label(1, v) for v in values),
        exhibits=tuple(int(z) for z in exhibits),
    )


def binary_shapes(n: int, first: int = 1) -> list:
    """Every full binary parenthesization of the leaves first..first+n-1, in order."""
    if n == 1:
        return [first]
    shapes = []
    for k in range(1, n):
        for left in binary_shapes(k, first):
            for right in binary_shapes(n - k, first + k):
                shapes.append((left, right))
    return shapes


def left_nested(n: int):
    shape = 1
    for leaf in range(2, n + 1):
        shape = (shape, leaf)
    return shape


def right_nested(n: int):
    shape = n
    for leaf in range(n - 1, 0, -1):
        shape = (leaf, shape)
    return shape


def _leaves(shape) -> list[int]:
    if isinstance(shape, int):
        return [shape]
    if not isinstance(shape, tuple) or len(shape) != 2:
        raise GammaForgeError(f"Forma de parentizacao invalida: {shape!r}")
    return _leaves(shape[0]) + _leaves(shape[1])


def iterated_binary(X: TruncatedGammaSet, arguments, shape) -> frozenset[int]:
    """Fold binary subset sums over a parenthesization tree of leaf positions (1-based)."""
    arguments = tuple(int(a) for a in arguments)
    if sorted(_leaves(shape)) != list(range(1, len(arguments) + 1)):
        raise GammaForgeError(f"A forma {shape!r} nao usa cada posicao 1..{len(arguments)} uma vez")
    if isinstance(shape, int):
        return frozenset({arguments[shape - 1]})
    _check_arity(X, 2)

    def fold(node) -> frozenset[int]:
        if isinstance(node, int):
            return frozenset({arguments[node - 1]})
        return subset_sum(X, [fold(node[0]), fold(node[1])])

    return fold(shape)


def check_generalized_associativity(X: TruncatedGammaSet, arguments, partition) -> AssociativityCheck:
    """Compare ⊕ a_i with ⊕_j (⊕_{i ∈ I_j} a_i) for a partition {I_j} of the positions."""
    arguments = tuple(int(a) for a in arguments)
    blocks = [tuple(block) for block in partition]
    f = gamma_cat.partition_morphism(blocks)
    if f.source.n != len(arguments):
        raise PartitionError(f"A particao cobre {f.source.n} posicoes, a tupla tem {len(arguments)}")
    lhs = sum_values(X, arguments)
    rhs = subset_sum(X, [sum_values(X, [arguments[i - 1] for i in block]) for block in blocks])
    return AssociativityCheck(
        arguments=tuple(X.label(1, a) for a in arguments),
        partition=tuple(blocks),
        lhs=tuple(X.label(1, v) for v in sorted(lhs)),
        rhs=tuple(X.label(1, v) for v in sorted(rhs)),
        inclusion=lhs <= rhs,
        equality=lhs == rhs,
    )


def binary_triples(X: TruncatedGammaSet) -> list[tuple[int, int, int]]:
    """All (a, b, c) with c ∈ a⊕b, lexicographic."""
    _check_arity(X, 2)
    stacked = np.stack(
        [
            X.table(gamma_cat.projection(1, 2)),
            X.table(gamma_cat.projection(2, 2)),
            X.table(gamma_cat.sum_morphism(2)),
        ],
        axis=1,
    )
    return [tuple(int(v) for v in row) for row in np.unique(stacked, axis=0)]


def binary_sum_table(X: TruncatedGammaSet) -> HyperOpTable:
    """The binary hyper-operation on X(1+) read off level 2."""
    size = X.size(1)
    cells = [[[] for _ in range(size)] for _ in range(size)]
    for a, b, c in binary_triples(X):
        cells[a][b].append(c)
    return HyperOpTable(
        name=X.name,
        elements=X.levels[1],
        table=tuple(tuple(tuple(cell) for cell in row) for row in cells),
        unital=False,
    )


def check_additive(X: TruncatedGammaSet, M: PointedMonoid, g) -> None:
    """Raise NonAdditiveMapError unless g(*) = 0 and g(c) = g(a) + g(b) for every c ∈ a⊕b."""
    if g[0] != M.unit:
        raise NonAdditiveMapError("g nao preserva o ponto base")
    for a, b, c in binary_triples(X):
        if g[c] != M.op(g[a], g[b]):
            triple = (X.label(1, a), X.label(1, b), X.label(1, c))
            raise NonAdditiveMapError(
                f"g nao e aditivo: {triple[2]} ∈ {triple[0]}⊕{triple[1]} mas "
                f"g({triple[2]}) != g({triple[0]}) + g({triple[1]})",
                triple=triple,
            )


def check_preserves_sums(phi: GammaMap, arity: int = 2) -> dict:
    """φ(⊕ a_i) ⊆ ⊕ φ(a_i) on every level-1 tuple; also lists the tuples where it is strict."""
    X, Y = phi.source, phi.target
    _check_arity(X, arity)
    level1 = phi.level1()
    checked = 0
    violations = []
    strict = []
    for arguments in product(range(X.size(1)), repeat=arity):
        image = frozenset(level1[c] for c in sum_values(X, arguments))
        target_sum = sum_values(Y, [level1[a] for a in arguments])
        checked += 1
        labels = tuple(X.label(1, a) for a in arguments)
        if not image <= target_sum:
            violations.append(labels)
        elif image != target_sum:
            strict.append(
                {
                    "arguments": labels,
                    "image": [Y.label(1, v) for v in sorted(image)],
                    "sum": [Y.label(1, v) for v in sorted(target_sum)],
                }
            )
    return {"checked": checked, "violations": violations, "strict": strict}


def check_higher_sums(X: TruncatedGammaSet, M: PointedMonoid, g, arity: int = 3) -> dict:
    """For c ∈ ⊕ a_i, a pointed additive g must give g(c) = Σ g(a_i) in M."""
    _check_arity(X, arity)
    checked = 0
    violations = []
    for arguments in product(range(X.size(1)), repeat=arity):
        expected = M.total(g[a] for a in arguments)
        for c in sum_values(X, arguments):
            checked += 1
            if g[c] != expected:
                violations.append((tuple(X.label(1, a) for a in arguments), X.label(1, c)))
    return {"checked": checked, "violations": violations}


# ---------------------------------------------------------------------------
# Hyperfield tables
# ---------------------------------------------------------------------------

def _table(name: str, elements, cells: dict) -> HyperOpTable:
    index = {label: i for i, label in enumerate(elements)}
    size = len(elements)
    rows = []
    for a in range(size):
        row = []
        for b in range(size):
            key = (elements[a], elements[b]) if (elements[a], elements[b]) in cells else (elements[b], elements[a])
            row.append(tuple(sorted(index[c] for c in cells[key])))
        rows.append(tuple(row))
    return HyperOpTable(name=name, elements=tuple(elements), table=tuple(rows))


def krasner() -> HyperOpTable:
    return _table(
        "krasner",
        ("0", "1"),
        {("0", "0"): {"0"}, ("0", "1"): {"1"}, ("1", "1"): {"0", "1"}},
    )


def sign_hyperfield() -> HyperOpTable:
    return _table(
        "sign",
        ("0", "1", "-1"),
        {
            ("0", "0"): {"0"},
            ("0", "1"): {"1"},
            ("0", "-1"): {"-1"},
            ("1", "1"): {"1"},
            ("1", "-1"): {"-1", "0", "1"},
            ("-1", "-1"): {"-1"},
        },
    )


def f_one_hyperfield() -> HyperOpTable:
    return _table(
        "F",
        ("0", "1"),
        {("0", "0"): {"0"}, ("0", "1"): {"1"}, ("1", "1"): set()},
    )


def table_nary(T: HyperOpTable, arguments) -> frozenset[int]:
    """n-ary operation of a binary table: the union over all parenthesizations."""
    arguments = tuple(int(a) for a in arguments)
    if not arguments:
        return frozenset({0})

    def fold(node) -> frozenset[int]:
        if isinstance(node, int):
            return frozenset({arguments[node - 1]})
        left, right = fold(node[0]), fold(node[1])
        return frozenset(c for a in left for b in right for c in T.table[a][b])

    result: set[int] = set()
    for shape in binary_shapes(len(arguments)):
        result |= fold(shape)
    return frozenset(result)


# ---------------------------------------------------------------------------
# Plasma embedding
# ---------------------------------------------------------------------------

def _subsets(n: int) -> list[frozenset[int]]:
    """Nonempty subsets of {1..n}, by size and then lexicographically."""
    return [frozenset(c) for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]


def _disjoint_pairs(subsets: list[frozenset[int]]) -> list[tuple[int, int, int]]:
    position = {s: i for i, s in enumerate(subsets)}
    pairs = []
    for i, s in enumerate(subsets):
        for j in range(i + 1, len(subsets)):
            t = subsets[j]
            if not s & t:
                pairs.append((i, j, position[s | t]))
    return pairs


def _plasma_level(T: HyperOpTable, n: int) -> list[tuple[int, ...]]:
    """Admissible families (x_S) over the nonempty S ⊆ [n], lexicographic."""
    subsets = _subsets(n)
    pairs = _disjoint_pairs(subsets)
    return [
        values
        for values in product(range(T.size), repeat=len(subsets))
        if all(values[u] in T.table[values[i]][values[j]] for i, j, u in pairs)
    ]


def plasma_embedding(
    T: HyperOpTable,
    max_level: int = 2,
    guard: int = ENUMERATION_GUARD,
    plasma_max_level: int = PLASMA_MAX_LEVEL,
) -> TruncatedGammaSet:
    """The Γ-set of compatible families (x_S)_{S ⊆ [n]} with x_∅ = 0.

    x_{S∪T} ∈ x_S ⊕ x_T is imposed for disjoint S, T; f acts by
    (x_S) ↦ (x_{f⁻¹(T)}).
    """
    if not T.unital:
        raise GammaForgeError("A imersao exige uma tabela fracamente unital")
    if max_level > plasma_max_level:
        raise GuardExceededError(
            f"imersao de {T.name} no nivel {max_level}", max_level, plasma_max_level
        )
    candidates = T.size ** (2**max_level - 1)
    if candidates > guard:
        raise GuardExceededError(f"imersao de {T.name}", candidates, guard)

    elements = [[()]] + [_plasma_level(T, n) for n in range(1, max_level + 1)]
    lookup = [{values: idx for idx, values in enumerate(level)} for level in elements]
    subsets = [[]] + [_subsets(n) for n in range(1, max_level + 1)]
    positions = [{s: i for i, s in enumerate(level)} for level in subsets]

    levels = [("()",)]
    for n in range(1, max_level + 1):
        if n == 1:
            levels.append(tuple(T.elements[v[0]] for v in elements[1]))
        else:
            levels.append(tuple(format_tuple(T.elements[x] for x in v) for v in elements[n]))

    def table_for(f: GammaMorphism) -> list[int]:
        n, m = f.source.n, f.target.n
        columns = [positions[n].get(f.preimage(t)) for t in subsets[m]]
        out = []
        for values in elements[n]:
            image = tuple(0 if c is None else values[c] for c in columns)
            try:
                out.append(lookup[m][image])
            except KeyError as exc:
                raise InternalConsistencyError(
                    f"Acao de {f.key} sai da imersao de {T.name}"
                ) from exc
        return out

    action = {
        f: tuple(table_for(f)) for f in gamma_cat.all_morphisms(max_level, guard)
    }
    logger.debug("Plasma embedding of %s: level sizes %s", T.name, [len(level) for level in elements])
    return TruncatedGammaSet(
        name=f"P({T.name})", max_level=max_level, levels=tuple(levels), action=action
    )


def check_plasma_families(T: HyperOpTable, P: TruncatedGammaSet) -> ValidationResult:
    """Every level element satisfies x_{∪S_i} ∈ ⊕ x_{S_i} for each pairwise-disjoint family."""
    result = ValidationResult()
    for n in range(2, P.max_level + 1):
        subsets = _subsets(n)
        position = {s: i for i, s in enumerate(subsets)}
        families = []
        for union in subsets:
            if len(union) < 2:
                continue
            members = sorted(union)
            for blocks in gamma_cat.set_partitions(len(members)):
                if len(blocks) < 2:
                    continue
                parts = [frozenset(members[i - 1] for i in block) for block in blocks]
                families.append((position[union], [position[p] for p in parts]))
        for values in _plasma_level(T, n):
            for union, parts in families:
                if values[union] not in table_nary(T, [values[p] for p in parts]):
                    result.add_error(
                        f"Familia incompativel no nivel {n}: {format_tuple(T.elements[v] for v in values)}"
                    )
        if len(_plasma_level(T, n)) != P.size(n):
            result.add_error(f"Nivel {n} de {P.name} difere das familias admissiveis")
    return result
