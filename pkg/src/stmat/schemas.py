"""Published JSON schemas for the CLI's --json output, one per subcommand."""

_TOKEN = {"type": "string", "pattern": r"^(-inf|[+-]?\d+(/\d+)?v?)$"}
_TOKEN_OR_NULL = {"anyOf": [_TOKEN, {"type": "null"}]}
_TOKEN_GRID = {"type": "array", "items": {"type": "array", "items": _TOKEN}}
_TOKEN_LIST = {"type": "array", "items": _TOKEN}
_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_RATIONAL = {"type": "string", "pattern": r"^[+-]?\d+(/\d+)?$"}

_MATRIX = {
    "type": "object",
    "required": ["n", "entries"],
    "properties": {"n": {"type": "integer", "minimum": 1}, "entries": _TOKEN_GRID},
}

_ROOTS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["value", "multiplicity"],
        "properties": {"value": _TOKEN, "multiplicity": {"type": "integer"}},
    },
}

_CHARPOLY = {
    "type": "object",
    "required": ["text", "coefficients", "essential_text", "classes", "roots"],
    "properties": {
        "text": {"type": "string"},
        "coefficients": _TOKEN_LIST,
        "essential_text": {"type": "string"},
        "essential_coefficients": _TOKEN_LIST,
        "classes": {"type": "array", "items": {"enum": ["essential", "quasi-essential", "inessential"]}},
        "roots": _ROOTS,
    },
}

_CYCLES = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["vertices", "weight", "length", "average", "leading",
                     "in_core", "in_tcore", "in_anti_tcore"],
        "properties": {
            "vertices": _INT_LIST,
            "weight": _TOKEN,
            "length": {"type": "integer"},
            "average": _RATIONAL,
            "leading": {"type": "boolean"},
            "in_core": {"type": "boolean"},
            "in_tcore": {"type": "boolean"},
            "in_anti_tcore": {"type": "boolean"},
        },
    },
}

_CORES = {
    "type": "object",
    "required": ["mu", "omega", "mu_tilde", "dominant_lengths", "cycles",
                 "core_vertices", "tcore_vertices", "anti_tcore_vertices"],
    "properties": {
        "mu": {"type": "integer"},
        "omega": _RATIONAL,
        "mu_tilde": {"type": "integer"},
        "dominant_lengths": _INT_LIST,
        "counts_by_length": {"type": "object"},
        "depths": {"type": "object"},
        "cycles": _CYCLES,
        "core_vertices": _INT_LIST,
        "tcore_vertices": _INT_LIST,
        "anti_tcore_vertices": _INT_LIST,
    },
}

_BLOCK_FORM = {
    "type": "object",
    "required": ["eta", "permutation", "blocks"],
    "properties": {
        "eta": {"type": "integer"},
        "permutation": _INT_LIST,
        "blocks": {"type": "array", "items": {
            "type": "object",
            "required": ["vertices"],
            "properties": {"vertices": _INT_LIST, "entries": _TOKEN_GRID},
        }},
    },
}

_STABILITY = {
    "type": "object",
    "required": ["index", "eta", "betas", "tangibly_stable"],
    "properties": {
        "index": {"type": "integer"},
        "eta": {"type": "integer"},
        "permutation": _INT_LIST,
        "betas": _TOKEN_LIST,
        "cross": {"type": "array", "items": {
            "type": "object",
            "required": ["i", "j", "beta"],
            "properties": {"i": {"type": "integer"}, "j": {"type": "integer"},
                           "beta": _TOKEN_OR_NULL},
        }},
        "tangibly_stable": {"type": "boolean"},
    },
}

_GHOST = {
    "type": "object",
    "required": ["ghostpotent", "ghost_index", "blocks"],
    "properties": {
        "ghostpotent": {"type": "boolean"},
        "ghost_index": {"anyOf": [{"type": "integer"}, {"type": "null"}]},
        "index_bound": {"anyOf": [{"type": "integer"}, {"type": "null"}]},
        "bound_respected": {"anyOf": [{"type": "boolean"}, {"type": "null"}]},
        "blocks": {"type": "array", "items": {
            "type": "object",
            "required": ["vertices", "has_cycles", "tcore_empty"],
            "properties": {
                "vertices": _INT_LIST,
                "has_cycles": {"type": "boolean"},
                "tcore_empty": {"type": "boolean"},
                "ghost_index": {"anyOf": [{"type": "integer"}, {"type": "null"}]},
            },
        }},
    },
}

_SEMISIMPLE = {
    "type": "object",
    "required": ["k", "diagonal"],
    "properties": {"k": {"type": "integer"}, "diagonal": _TOKEN_LIST},
}

_JORDAN = {
    "type": "object",
    "required": ["strategy", "S", "N", "semisimple", "ghost"],
    "properties": {
        "strategy": {"type": "string"},
        "S": _TOKEN_GRID,
        "N": _TOKEN_GRID,
        "semisimple": _SEMISIMPLE,
        "ghost": _GHOST,
    },
}

_EIGEN_PAIRS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["beta", "vector", "kind"],
        "properties": {
            "beta": _TOKEN,
            "vector": _TOKEN_LIST,
            "kind": {"enum": ["strict", "supertropical", None]},
        },
    },
}

_EIGEN = {
    "type": "object",
    "required": ["eigenvalues", "pairs"],
    "properties": {
        "eigenvalues": _ROOTS,
        "pairs": _EIGEN_PAIRS,
        "decomposition": {"anyOf": [{"type": "null"}, {
            "type": "object",
            "required": ["power", "block_eigenvalues", "pairs", "rank", "rank_target", "rank_ok"],
            "properties": {
                "power": {"type": "integer"},
                "block_eigenvalues": _TOKEN_LIST,
                "pairs": {"type": "array", "items": {
                    "type": "object",
                    "required": ["block", "beta", "vector", "kind", "verified"],
                    "properties": {
                        "block": {"type": "integer"},
                        "column": {"type": "integer"},
                        "beta": _TOKEN,
                        "beta_root": _TOKEN,
                        "vector": _TOKEN_LIST,
                        "kind": {"enum": ["strict", "supertropical", None]},
                        "verified": {"type": "boolean"},
                    },
                }},
                "annihilators": {"type": "array", "items": {
                    "type": "object",
                    "required": ["block", "vector"],
                    "properties": {"block": {"type": "integer"}, "vector": _TOKEN_LIST},
                }},
                "rank": {"type": "integer"},
                "rank_target": {"type": "integer"},
                "rank_ok": {"type": "boolean"},
                "all_verified": {"type": "boolean"},
                "diagnostics": {"type": "array"},
            },
        }]},
    },
}

SCHEMAS = {
    "matrix": _MATRIX,
    "power": {
        "type": "object",
        "required": ["command", "m", "matrix"],
        "properties": {"command": {"const": "power"}, "m": {"type": "integer"},
                       "matrix": _MATRIX},
    },
    "charpoly": {
        "type": "object",
        "required": ["command", "charpoly"],
        "properties": {"command": {"const": "charpoly"}, "charpoly": _CHARPOLY},
    },
    "eigen": {
        "type": "object",
        "required": ["command", "eigen"],
        "properties": {"command": {"const": "eigen"}, "eigen": _EIGEN},
    },
    "jordan": {
        "type": "object",
        "required": ["command", "jordan"],
        "properties": {"command": {"const": "jordan"}, "jordan": _JORDAN},
    },
    "stability": {
        "type": "object",
        "required": ["command", "stability"],
        "properties": {"command": {"const": "stability"}, "stability": _STABILITY},
    },
    "ghost": {
        "type": "object",
        "required": ["command", "ghost"],
        "properties": {"command": {"const": "ghost"}, "ghost": _GHOST},
    },
    "cores": {
        "type": "object",
        "required": ["command", "cores"],
        "properties": {"command": {"const": "cores"}, "cores": _CORES},
    },
    "analyze": {
        "type": "object",
        "required": ["command", "n", "determinant", "trace", "charpoly",
                     "block_form", "ghost", "warnings"],
        "properties": {
            "command": {"const": "analyze"},
            "n": {"type": "integer"},
            "determinant": _TOKEN,
            "trace": _TOKEN,
            "charpoly": _CHARPOLY,
            "cores": {"anyOf": [_CORES, {"type": "null"}]},
            "block_form": _BLOCK_FORM,
            "stability": {"anyOf": [_STABILITY, {"type": "null"}]},
            "ghost": {"anyOf": [_GHOST, {"type": "null"}]},
            "jordan": {"anyOf": [_JORDAN, {"type": "null"}]},
            "eigen": {"anyOf": [_EIGEN, {"type": "null"}]},
            "corepower": {},
            "warnings": {"type": "array", "items": {"type": "string"}},
        },
    },
}
