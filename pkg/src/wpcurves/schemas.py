"""JSON Schemas (draft 2020-12) for every versioned document the package emits.

The schemas are plain dicts so they need no package data; validate with any
JSON Schema implementation.
"""

_FRAC = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_INT_OR_NULL = {"type": ["integer", "null"]}
_WEIGHTS = {"type": "array", "items": {"type": "integer", "minimum": 2}}
_CYCLES = {"type": "string", "pattern": r"^(\(\)|(\([0-9]+(,[0-9]+)+\))+)$"}


def _envelope(fmt: str, body: dict, required: list[str]) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "properties": {
            "format": {"const": fmt},
            "version": {"const": 1},
            "tool_version": {"type": "string"},
            **body,
        },
        "required": ["format", "version", "tool_version", *required],
    }


CERTIFICATE = _envelope(
    "wpcurves.certificate",
    {
        "presentation": {
            "type": "object",
            "properties": {
                "genus": {"type": "integer", "minimum": 0},
                "weights": _WEIGHTS,
                "text": {"type": "string"},
            },
            "required": ["genus", "weights"],
        },
        "images": {
            "type": "object",
            "properties": {k: {"type": "array", "items": _CYCLES} for k in ("alpha", "beta", "sigma")},
            "required": ["alpha", "beta", "sigma"],
        },
        "degree": {"type": "integer", "minimum": 0},
        "sigma_orders": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "image_group_order": {"type": "integer", "minimum": 1},
        "torsionfree": {"type": "boolean"},
        "normal": {"type": "boolean"},
        "reduction": {"type": ["string", "null"]},
    },
    ["presentation", "images", "image_group_order", "torsionfree"],
)

_VALUES = {
    "type": "object",
    "properties": {
        "group": {"type": "string"},
        "group_order": {"type": "integer"},
        "neg_chi_quotient": _FRAC,
        "neg_chi_cover": {"type": ["integer", "string"]},
        "genus_cover": _INT_OR_NULL,
    },
    "required": ["group", "group_order", "neg_chi_quotient", "neg_chi_cover", "genus_cover"],
}

ARNOLD_TABLE = _envelope(
    "wpcurves.arnold_table",
    {
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "weights": _WEIGHTS,
                    "printed": _VALUES,
                    "recomputed": _VALUES,
                    "curve": {"type": "string"},
                    "consistent": {"type": "boolean"},
                    "mismatches": {"type": "array", "items": {"type": "string"}},
                    "flags": {"type": "array", "items": {"const": "INCONSISTENT_PAPER_ROW"}},
                    "note": {"type": ["string", "null"]},
                },
                "required": ["weights", "printed", "recomputed", "consistent", "flags"],
            },
        }
    },
    ["rows"],
)

DOMINANCE = _envelope(
    "wpcurves.dominance",
    {
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"weights": _WEIGHTS, "name": {"type": "string"}, "chi": _FRAC},
                "required": ["weights", "name", "chi"],
            },
        },
        "adjacency": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "target": {"type": "string"},
                        "group": {"type": "string"},
                        "order": {"type": "integer", "minimum": 2},
                    },
                    "required": ["target", "group", "order"],
                },
            },
        },
    },
    ["nodes", "adjacency"],
)

CLI = _envelope(
    "wpcurves.cli",
    {"command": {"type": "string"}, "result": {"type": "object"}},
    ["command", "result"],
)

# Schemas for the "result" member, by subcommand.
CLI_RESULTS = {
    "chi": {
        "type": "object",
        "properties": {"genus": {"type": "integer"}, "weights": _WEIGHTS, "chi": _FRAC},
        "required": ["genus", "weights", "chi"],
    },
    "classify": {
        "type": "object",
        "properties": {
            "trisection": {"enum": ["Spherical", "Parabolic", "Hyperbolic", "ExcludedPQ"]},
            "chi": _FRAC,
        },
        "required": ["trisection", "chi"],
    },
    "k0": {
        "type": "object",
        "properties": {"form": _FRAC, "abar": {"type": "integer"}},
        "required": ["form", "abar", "x", "y"],
    },
    "perm": {
        "type": "object",
        "properties": {"op": {"enum": ["order", "mul", "group-order", "simple"]}},
        "required": ["op"],
    },
    "presentation": {
        "type": "object",
        "properties": {
            "generators": {"type": "array", "items": {"type": "string"}},
            "relations": {"type": "array", "items": {"type": "string"}},
            "text": {"type": "string"},
        },
        "required": ["generators", "relations", "text"],
    },
    "witness": {
        "type": "object",
        "properties": {"degree": {"type": "integer"}, "c1": _CYCLES, "c2": _CYCLES, "c3": _CYCLES,
                       "certificate": CERTIFICATE},
        "required": ["orders", "degree", "c1", "c2", "c3", "certificate"],
    },
    "certify": CERTIFICATE,
    "companion": {
        "type": "object",
        "properties": {"chi": _FRAC, "smooth": {"type": "boolean"}, "genus": _INT_OR_NULL},
        "required": ["weights", "degrees", "group_order", "chi", "smooth", "genus"],
    },
    "realize": {
        "type": "object",
        "properties": {"chi_quotient": _FRAC, "chi_cover": _FRAC, "group_order": {"type": "integer"},
                       "problems": {"type": "array", "maxItems": 0}},
        "required": ["quotient_weights", "group", "group_order", "chi_quotient", "chi_cover"],
    },
    "arnold": ARNOLD_TABLE,
    "dominance": {
        **DOMINANCE,
        "properties": {**DOMINANCE["properties"], "violations": {"type": "array"},
                       "terminal": {"type": "array", "items": {"type": "string"}}},
    },
}
