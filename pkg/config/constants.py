"""Constants and enums for the gammaforge engine."""

# Embedded in every JSON document and report
SCHEMA_VERSION = "gammaforge/1"

# CLI subcommands
SUBCOMMANDS = [
    "tensor",
    "assoc-check",
    "adjunction",
    "hyperops",
    "embed-plasma",
    "snf",
    "validate",
    "sweep",
]

# Construction descriptor kinds
CONSTRUCTION_KINDS = ["em", "spherical", "f1", "collapse", "plasma", "file"]

# Sweep kinds for the `sweep` subcommand
SWEEP_KINDS = ["assoc", "snf", "adjunction", "algebra"]

OUTPUT_FORMATS = ["text", "json"]

# Hyper-operation tables available by name
NAMED_TABLES = {
    "krasner": "krasner",
    "sign": "sign_hyperfield",
    "f1": "f_one_hyperfield",
}

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

