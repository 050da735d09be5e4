"""Validation accumulators and table checks for finite algebraic structures."""

from itertools import product


class ValidationResult:
    def __init__(self):
        self.errors: list[str] = []
        self.warnings: list[str] = []

    @property
    def is_valid(self) -> bool:
        return len(self.errors) == 0

    def add_error(self, msg: str):
        self.errors.append(msg)

    def add_warning(self, msg: str):
        self.warnings.append(msg)

    def extend(self, other: "ValidationResult"):
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)

    def to_dict(self) -> dict:
        return {
            "valid": self.is_valid,
            "violations": len(self.errors),
            "errors": list(self.errors),
            "warnings": list(self.warnings),
        }


def validate_operation_table(
    labels: list[str] | tuple[str, ...],
    table: list[list[int]] | tuple[tuple[int, ...], ...],
    unit: int,
    zero: int | None = None,
) -> ValidationResult:
    """Check a commutative monoid table: shape, closure, unit, commutativity, associativity."""
    result = ValidationResult()
    size = len(labels)
    if len(table) != size or any(len(row) != size for row in table):
        result.add_error(f"Tabela de operacao deve ser {size}x{size}")
        return result
    for i, j in product(range(size), repeat=2):
        if not 0 <= table[i][j] < size:
            result.add_error(f"Entrada fora do conjunto: {labels[i]}*{labels[j]} -> {table[i][j]}")
    if not result.is_valid:
        return result
    if not 0 <= unit < size:
        result.add_error(f"Unidade fora do conjunto: {unit}")
        return result

    for x in range(size):
        if table[unit][x] != x:
            result.add_error(f"Lei da unidade falha em {labels[x]}")
    for i, j in product(range(size), repeat=2):
        if table[i][j] != table[j][i]:
            result.add_error(f"Nao comutativa: {labels[i]}, {labels[j]}")
    for i, j, k in product(range(size), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            result.add_error(f"Nao associativa: ({labels[i]}, {labels[j]}, {labels[k]})")
            break
    if zero is not None:
        if not 0 <= zero < size:
            result.add_error(f"Zero fora do conjunto: {zero}")
        else:
            for x in range(size):
                if table[zero][x] != zero:
                    result.add_error(f"Zero nao absorvente em {labels[x]}")
    return result


def validate_distributivity(
    add: tuple[tuple[int, ...], ...],
    mul: tuple[tuple[int, ...], ...],
    zero: int,
) -> ValidationResult:
    result = ValidationResult()
    size = len(add)
    for a, b, c in product(range(size), repeat=3):
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            result.add_error(f"Distributividade falha em ({a}, {b}, {c})")
            break
    for x in range(size):
        if mul[zero][x] != zero:
            result.add_error(f"Zero aditivo nao absorvente em {x}")
            break
    return result


def validate_hyperop_table(
    labels: list[str] | tuple[str, ...],
    table: tuple[tuple[tuple[int, ...], ...], ...],
    check_unit: bool = True,
) -> ValidationResult:
    """Check a binary hyper-operation table for commutativity and, optionally, weak unitality (zero first)."""
    result = ValidationResult()
    size = len(labels)
    if len(table) != size or any(len(row) != size for row in table):
        result.add_error(f"Tabela de hiperoperacao deve ser {size}x{size}")
        return result
    for i, j in product(range(size), repeat=2):
        cell = table[i][j]
        if any(not 0 <= c < size for c in cell):
            result.add_error(f"Entrada fora do conjunto em {labels[i]}+{labels[j]}")
        if sorted(set(cell)) != sorted(table[j][i]):
            result.add_error(f"Nao comutativa: {labels[i]}, {labels[j]}")
    for x in range(size if check_unit else 0):
        if tuple(table[0][x]) != (x,):
            result.add_error(f"Unidade fraca falha: 0+{labels[x]} != {{{labels[x]}}}")
    return result
