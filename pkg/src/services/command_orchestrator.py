"""Dispatch parsed CLI arguments to the compute services and collect a Report."""

import logging
import time

from pydantic import ValidationError

from config.constants import SWEEP_KINDS
from config.settings import DEFAULT_SEED, ENUMERATION_GUARD, SWEEP_TUPLE_CAP
from src.codec import json_codec
from src.models.abelian import IntMatrix
from src.models.report import CheckOutcome, ConstructionDescriptor, Report
from src.services import abgrp_service as abgrp
from src.services import adjunction_service as adjunction
from src.services import construction_service as constructions
from src.services import gamma_cat_service as gamma_cat
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.services import scalars_service as scalars
from src.services import sweep_service as sweeps
from src.utils.errors import CodecError, DescriptorError, GammaForgeError
from src.utils.text_processing import parse_int_list, parse_partition, parse_shape, split_list

logger = logging.getLogger(__name__)

# adjunction grids are enumerated at level 2
GRID_MAX_LEVEL = 2


def _check(name: str, result, checked: int = 0) -> CheckOutcome:
    """CheckOutcome from a ValidationResult."""
    return CheckOutcome(
        name=name,
        passed=result.is_valid,
        checked=checked,
        violations=len(result.errors),
        detail="; ".join(result.errors[:3]),
    )


def _flag(name: str, passed: bool, detail: str = "") -> CheckOutcome:
    return CheckOutcome(name=name, passed=passed, checked=1, violations=0 if passed else 1, detail=detail)


def _format_partition(blocks) -> str:
    return "|".join(",".join(str(i) for i in block) for block in blocks)


def _labels(X, values) -> list[str]:
    return [X.label(1, v) for v in sorted(values)]


def descriptor_from_args(args) -> ConstructionDescriptor:
    try:
        return ConstructionDescriptor(
            kind=args.construct,
            max_level=args.max_level,
            monoid=args.monoid,
            pointed_set=tuple(split_list(args.pointed_set)) if args.pointed_set else None,
            subobject=tuple(split_list(args.subobject)) if args.subobject else None,
            table=args.table,
            file=args.file,
            algebra=args.algebra,
            guard=args.guard,
        )
    except ValidationError as exc:
        raise DescriptorError(exc.errors()[0]["msg"]) from exc


class CommandOrchestrator:
    def __init__(self):
        self.handlers = {
            "tensor": self._handle_tensor,
            "assoc-check": self._handle_assoc_check,
            "adjunction": self._handle_adjunction,
            "hyperops": self._handle_hyperops,
            "embed-plasma": self._handle_embed_plasma,
            "snf": self._handle_snf,
            "validate": self._handle_validate,
            "sweep": self._handle_sweep,
        }

    def execute(self, args) -> Report:
        handler = self.handlers.get(args.command)
        if handler is None:
            raise GammaForgeError(f"Subcomando desconhecido: {args.command}")
        start = time.perf_counter()
        configuration, results, checks = handler(args)
        elapsed = time.perf_counter() - start
        logger.info("%s concluido em %.3f s", args.command, elapsed)
        return Report(
            command=args.command,
            configuration=configuration,
            results=results,
            checks=checks,
            duration_seconds=round(elapsed, 6) if getattr(args, "timing", False) else None,
        )

    # ------------------------------------------------------------------
    # Handlers return (configuration, results, checks)
    # ------------------------------------------------------------------

    def _handle_tensor(self, args):
        descriptor = descriptor_from_args(args)
        if descriptor.algebra:
            algebra = constructions.build_algebra(descriptor)
            X = algebra.carrier
            result = scalars.extend_algebra(algebra)
        else:
            X = constructions.build_gamma_set(descriptor)
            result = scalars.extend_module(X)
        rank, torsion = abgrp.canonical_invariants(result.group)
        results = {
            "object": X.name,
            "invariants": {"rank": rank, "torsion": list(torsion)},
            "group": abgrp.format_invariants(result.group),
            "relations": len(result.relations),
            "iota": [
                {"element": X.label(1, a), "class": list(coords)}
                for a, coords in enumerate(result.iota)
            ],
        }
        checks = [_check("iota", scalars.check_unit_map(result), len(result.relations))]
        if result.ring is not None:
            structure = scalars.canonical_structure(result.ring)
            size = len(structure["orders"])
            results["ring"] = {
                "orders": list(structure["orders"]),
                "unit": list(structure["unit"]),
                "saturation_added": result.saturation_added,
                "products": [
                    {"left": i, "right": j, "product": list(structure["table"][i][j])}
                    for i in range(size)
                    for j in range(i, size)
                ],
            }
            checks.append(_check("ring_axioms", scalars.ring_axioms(result.ring)))
        return {"construct": descriptor.summary()}, results, checks

    def _handle_assoc_check(self, args):
        descriptor = descriptor_from_args(args)
        X = constructions.build_gamma_set(descriptor)
        if not args.tuple:
            raise CodecError("assoc-check exige --tuple")
        arguments = [gamma_sets.element_index(X, 1, label) for label in split_list(args.tuple)]
        n = len(arguments)
        partitions = [parse_partition(args.partition)] if args.partition else gamma_cat.set_partitions(n)
        rows = []
        for blocks in partitions:
            check = hyper.check_generalized_associativity(X, arguments, blocks)
            rows.append(
                {
                    "partition": _format_partition(blocks),
                    "iterated": list(check.rhs),
                    "inclusion": check.inclusion,
                    "equality": check.equality,
                }
            )
        total = hyper.sum_values(X, arguments)
        results = {
            "object": X.name,
            "arguments": [X.label(1, a) for a in arguments],
            "sum": _labels(X, total),
            "partitions": rows,
        }
        checks = [
            CheckOutcome(
                name="generalized_associativity",
                passed=all(row["inclusion"] for row in rows),
                checked=len(rows),
                violations=sum(not row["inclusion"] for row in rows),
            )
        ]
        if args.shape:
            shape = parse_shape(args.shape)
            iterated = hyper.iterated_binary(X, arguments, shape)
            results["shape"] = {"shape": args.shape, "iterated": _labels(X, iterated)}
            checks.append(_flag("shape_inclusion", total <= iterated))
        configuration = {"construct": descriptor.summary(), "tuple": args.tuple}
        if args.partition:
            configuration["partition"] = args.partition
        return configuration, results, checks

    def _handle_adjunction(self, args):
        descriptor = descriptor_from_args(args)
        if not args.target:
            raise CodecError("adjunction exige --target")
        guard = args.guard or ENUMERATION_GUARD
        if descriptor.algebra:
            algebra = constructions.build_algebra(descriptor)
            report = adjunction.verify_algebra_adjunction(
                algebra, constructions.resolve_semiring(args.target), guard
            )
        else:
            X = constructions.build_gamma_set(descriptor)
            M = constructions.resolve_monoid(args.target)
            report = adjunction.verify_module_adjunction(X, M, guard)
        results = report.model_dump()
        checks = [
            _flag("cardinality", report.cardinality_match, f"{report.left_count} / {report.right_count}"),
            _flag("bijection", report.bijection),
            _flag("phi_psi", report.phi_psi_roundtrip),
            _flag("psi_phi", report.psi_phi_roundtrip),
            _flag("extensions_natural", report.extensions_natural),
            _flag("characterization", report.characterization_match),
        ]
        configuration = {"construct": descriptor.summary(), "target": args.target, "guard": guard}
        return configuration, results, checks

    def _handle_hyperops(self, args):
        if args.construct:
            descriptor = descriptor_from_args(args)
            X = constructions.build_gamma_set(descriptor)
            table = hyper.binary_sum_table(X)
            configuration = {"construct": descriptor.summary()}
        else:
            if not args.table:
                raise CodecError("hyperops exige --construct ou --table")
            X = None
            table = constructions.resolve_table(args.table)
            configuration = {"table": args.table}
        size = table.size
        results = {
            "name": table.name,
            "elements": list(table.elements),
            "table": [
                {"a": table.elements[a], "b": table.elements[b], "sum": table.cell_labels(a, b)}
                for a in range(size)
                for b in range(a, size)
            ],
        }
        asymmetric = [
            (a, b) for a in range(size) for b in range(size) if table.table[a][b] != table.table[b][a]
        ]
        checks = [
            CheckOutcome(
                name="commutativity",
                passed=not asymmetric,
                checked=size * size,
                violations=len(asymmetric),
            )
        ]
        if args.tuple:
            labels = split_list(args.tuple)
            if X is not None:
                arguments = [gamma_sets.element_index(X, 1, label) for label in labels]
                values = hyper.sum_values(X, arguments)
            else:
                arguments = [table.elements.index(label) for label in labels if label in table.elements]
                if len(arguments) != len(labels):
                    raise CodecError(f"Rotulos fora de {list(table.elements)}: {args.tuple}")
                values = hyper.table_nary(table, arguments)
            results["nary"] = {
                "arguments": labels,
                "sum": [table.elements[v] for v in sorted(values)],
            }
            configuration["tuple"] = args.tuple
        return configuration, results, checks

    def _handle_embed_plasma(self, args):
        if not args.table:
            raise CodecError("embed-plasma exige --table")
        table = constructions.resolve_table(args.table)
        P = hyper.plasma_embedding(table, args.max_level, args.guard or ENUMERATION_GUARD)
        roundtrip = hyper.binary_sum_table(P).table == table.table
        results = {
            "object": P.name,
            "level_sizes": [P.size(n) for n in range(P.max_level + 1)],
            "level1": list(P.levels[1]),
        }
        checks = [
            _flag("binary_roundtrip", roundtrip),
            _check("families", hyper.check_plasma_families(table, P)),
            _check("functoriality", gamma_sets.validate_functoriality(P)),
        ]
        configuration = {"table": args.table, "max_level": args.max_level}
        if args.guard:
            configuration["guard"] = args.guard
        return configuration, results, checks

    def _read_matrix(self, args) -> IntMatrix:
        if args.matrix:
            rows = [parse_int_list(row) for row in args.matrix.split(";")]
            if len({len(row) for row in rows}) != 1:
                raise CodecError(f"Linhas de tamanhos diferentes em '{args.matrix}'")
            return IntMatrix.from_rows(rows)
        if args.file:
            return json_codec.read_document(args.file, "matrix")
        raise CodecError("snf exige --matrix ou --file")

    def _handle_snf(self, args):
        matrix = self._read_matrix(args)
        form = abgrp.smith_normal_form(matrix)
        group = abgrp.presentation([f"g{i + 1}" for i in range(matrix.cols)], matrix.entries)
        rank, torsion = abgrp.canonical_invariants(group)
        results = {
            "input": matrix.to_lists(),
            "d": form.d.to_lists(),
            "u": form.u.to_lists(),
            "v": form.v.to_lists(),
            "diagonal": list(form.diagonal),
            "cokernel": {"rank": rank, "torsion": list(torsion)},
        }
        checks = [_check("smith_form", abgrp.verify_smith_form(matrix, form))]
        return {"matrix": matrix.to_lists()}, results, checks

    def _handle_validate(self, args):
        descriptor = descriptor_from_args(args)
        X = constructions.build_gamma_set(descriptor, check=False)
        checks = [_check("functoriality", gamma_sets.validate_functoriality(X), len(X.action))]
        if descriptor.kind == "plasma":
            table = constructions.resolve_table(descriptor.table)
            checks.append(_check("families", hyper.check_plasma_families(table, X)))
        if descriptor.algebra:
            algebra = constructions.build_algebra(descriptor)
            checks.append(_check("ring_axioms", scalars.ring_axioms(scalars.extend_algebra(algebra).ring)))
        results = {
            "object": X.name,
            "level_sizes": [X.size(n) for n in range(X.max_level + 1)],
            "morphisms": len(X.action),
        }
        return {"construct": descriptor.summary()}, results, checks

    def _handle_sweep(self, args):
        kind = args.kind
        if kind not in SWEEP_KINDS:
            raise CodecError(f"Tipo de varredura desconhecido: {kind}")
        seed = DEFAULT_SEED if args.seed is None else args.seed
        configuration = {"kind": kind, "seed": seed}
        if kind == "assoc":
            rows = sweeps.associativity_sweep(sweeps.default_corpus(args.max_level), seed, SWEEP_TUPLE_CAP)
            configuration["max_level"] = args.max_level
            checks = [
                CheckOutcome(
                    name=row["object"],
                    passed=not row["violations"],
                    checked=row["checked"],
                    violations=len(row["violations"]),
                )
                for row in rows
            ]
            return configuration, {"objects": rows}, checks
        if kind == "snf":
            outcome = sweeps.snf_sweep(seed=seed)
            check = CheckOutcome(
                name="smith_form",
                passed=not outcome["failures"],
                checked=outcome["checked"],
                violations=len(outcome["failures"]),
            )
            return configuration, outcome, [check]
        guard = args.guard or ENUMERATION_GUARD
        if kind == "adjunction":
            rows = sweeps.module_adjunction_sweep(GRID_MAX_LEVEL, guard)
            names = [f"{row['object']} -> {row['target']}" for row in rows]
        else:
            rows = sweeps.algebra_adjunction_sweep(GRID_MAX_LEVEL, guard)
            names = [f"{row['source']} -> {row['target']}" for row in rows]
        checks = [_flag(name, row["passed"]) for name, row in zip(names, rows)]
        return configuration, {"pairs": rows}, checks
