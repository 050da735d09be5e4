"""Named finite monoids, pointed monoids and semirings used by the CLI and the sweeps."""

import re
from itertools import product

from src.models.gamma_set import FiniteSemiring, PointedMonoid
from src.utils.errors import GammaForgeError, UnknownNameError
from src.utils.text_processing import normalize_name


def cyclic_group(n: int) -> PointedMonoid:
    if n < 1:
        raise GammaForgeError(f"Ordem invalida para grupo ciclico: {n}")
    return PointedMonoid(
        name=f"Z/{n}",
        elements=tuple(str(a) for a in range(n)),
        table=tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
        unit=0,
    )


def product_group(*orders: int) -> PointedMonoid:
    """Z/n1 ⊕ ... ⊕ Z/nk, labelled by concatenated digits with the first coordinate varying fastest."""
    tuples = [tuple(reversed(t)) for t in product(*(range(n) for n in reversed(orders)))]
    index = {t: i for i, t in enumerate(tuples)}

    def add(s, t):
        return tuple((x + y) % n for x, y, n in zip(s, t, orders))

    return PointedMonoid(
        name="+".join(f"Z/{n}" for n in orders),
        elements=tuple("".join(str(x) for x in t) for t in tuples),
        table=tuple(tuple(index[add(s, t)] for t in tuples) for s in tuples),
        unit=0,
    )


def saturating_monoid(k: int) -> PointedMonoid:
    """{0, ..., k-1} under a + b capped at k-1."""
    return PointedMonoid(
        name=f"sat{k}",
        elements=tuple(str(a) for a in range(k)),
        table=tuple(tuple(min(a + b, k - 1) for b in range(k)) for a in range(k)),
        unit=0,
    )


def boolean_monoid() -> PointedMonoid:
    return saturating_monoid(2).model_copy(update={"name": "bool"})


def pointed_f1() -> PointedMonoid:
    """{0, 1} under multiplication."""
    return PointedMonoid(name="{0,1}", elements=("0", "1"), table=((0, 0), (0, 1)), unit=1, zero=0)


def pointed_mu2() -> PointedMonoid:
    """μ₂ ∪ {0} = {0, 1, -1}."""
    return PointedMonoid(
        name="mu2+0",
        elements=("0", "1", "-1"),
        table=((0, 0, 0), (0, 1, 2), (0, 2, 1)),
        unit=1,
        zero=0,
    )


def pointed_cyclic(k: int) -> PointedMonoid:
    """{0, 1, t, ..., t^(k-1)} with t^k = 1."""
    labels = ["0", "1"] + ["t" if e == 1 else f"t{e}" for e in range(1, k)]

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        return 1 + ((a - 1) + (b - 1)) % k

    return PointedMonoid(
        name=f"C{k}+0",
        elements=tuple(labels),
        table=tuple(tuple(mul(a, b) for b in range(k + 1)) for a in range(k + 1)),
        unit=1,
        zero=0,
    )


def zn_ring(n: int) -> FiniteSemiring:
    if n < 2:
        raise GammaForgeError(f"Z/{n} nao tem 1 != 0")
    return FiniteSemiring(
        name=f"Z/{n}",
        elements=tuple(str(a) for a in range(n)),
        add=tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
        mul=tuple(tuple((a * b) % n for b in range(n)) for a in range(n)),
        one=1,
    )


def boolean_semiring() -> FiniteSemiring:
    return FiniteSemiring(
        name="B",
        elements=("0", "1"),
        add=((0, 1), (1, 1)),
        mul=((0, 0), (0, 1)),
        one=1,
    )


_CYCLIC = re.compile(r"^z(\d+)$")
_PRODUCT = re.compile(r"^z(\d+)(?:x|\+)z(\d+)$")
_SATURATING = re.compile(r"^sat(\d+)$")
_POINTED_CYCLIC = re.compile(r"^c(\d+)$")
_MULTIPLICATIVE = re.compile(r"^z(\d+)mul$")


def get_monoid(name: str) -> PointedMonoid:
    """Additive commutative monoid by name: z6, z2xz2, bool, sat3."""
    key = normalize_name(name)
    if match := _CYCLIC.match(key):
        return cyclic_group(int(match.group(1)))
    if match := _PRODUCT.match(key):
        return product_group(int(match.group(1)), int(match.group(2)))
    if match := _SATURATING.match(key):
        return saturating_monoid(int(match.group(1)))
    if key in ("bool", "boolean"):
        return boolean_monoid()
    raise UnknownNameError(f"Monoide desconhecido: '{name}'")


def get_pointed_monoid(name: str) -> PointedMonoid:
    """Pointed multiplicative monoid by name: f1, mu2, c3, z6mul."""
    key = normalize_name(name)
    if key in ("f1", "01"):
        return pointed_f1()
    if key in ("mu2", "mu20", "mu2+0"):
        return pointed_mu2()
    if match := _POINTED_CYCLIC.match(key):
        return pointed_cyclic(int(match.group(1)))
    if match := _MULTIPLICATIVE.match(key):
        return zn_ring(int(match.group(1))).multiplicative_monoid()
    raise UnknownNameError(f"Monoide pontuado desconhecido: '{name}'")


def get_semiring(name: str) -> FiniteSemiring:
    key = normalize_name(name)
    if match := _CYCLIC.match(key):
        return zn_ring(int(match.group(1)))
    if key in ("b", "bool", "boolean"):
        return boolean_semiring()
    raise UnknownNameError(f"Semianel desconhecido: '{name}'")


def catalog() -> dict[str, list[str]]:
    return {
        "monoids": ["z<n>", "z<n>xz<m>", "bool", "sat<k>"],
        "pointed_monoids": ["f1", "mu2", "c<k>", "z<n>mul"],
        "semirings": ["z<n>", "bool"],
    }
