"""Published JSON schemas for every machine-readable CLI output.

The ``laws`` command emits one JSON object per line, each matching
LAW_REPORT. Every other command emits a single JSON object matching the
entry of COMMAND_SCHEMAS named after the command. Schemas follow JSON
Schema draft 2020-12 and are deliberately strict (additionalProperties
false) so accidental payload drift fails validation in the test suite.
"""

from __future__ import annotations

__all__ = ["COMMAND_SCHEMAS", "LAW_REPORT", "schema_for"]

_DECOMPOSITION = {
    "type": "object",
    "properties": {
        "sign": {"enum": [1, -1]},
        "idempotent": {"type": "integer"},
        "unit": {"type": "integer"},
    },
    "required": ["sign", "idempotent", "unit"],
    "additionalProperties": False,
}

# one line of `laws --json` output
LAW_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "law": {"type": "string"},
        "inputs": {"type": "string"},
        "verdict": {"enum": ["pass", "fail", "skipped"]},
        "direction": {"enum": ["forward", "both", "equation"]},
        "instance_strength": {"enum": ["degenerate", "discriminating"]},
        "description": {"type": "string"},
        "reason": {"type": "string"},
        "witness": {"type": ["object", "null"]},
        "scanned": {"type": "integer", "minimum": 0},
    },
    "required": [
        "law",
        "inputs",
        "verdict",
        "direction",
        "instance_strength",
        "description",
        "reason",
        "witness",
        "scanned",
    ],
    "additionalProperties": False,
}

_ANALYZE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"const": "analyze"},
        "spec": {"type": "string"},
        "ring": {"type": "string"},
        "ok": {"type": "boolean"},
        "verdict": {
            "oneOf": [
                {  # finite ring: full decomposition census
                    "type": "object",
                    "properties": {
                        "element": {"type": "integer"},
                        "clean": {"type": "boolean"},
                        "weakly_clean": {"type": "boolean"},
                        "uniquely_weakly_clean": {"type": "boolean"},
                        "decompositions": {
                            "type": "array",
                            "items": _DECOMPOSITION,
                        },
                    },
                    "required": [
                        "element",
                        "clean",
                        "weakly_clean",
                        "uniquely_weakly_clean",
                        "decompositions",
                    ],
                    "additionalProperties": False,
                },
                {  # localization: sign classes
                    "type": "object",
                    "properties": {
                        "element": {"type": "string"},
                        "clean": {"type": "boolean"},
                        "weakly_clean": {"type": "boolean"},
                        "plus": {"type": "boolean"},
                        "minus": {"type": "boolean"},
                    },
                    "required": ["element", "clean", "weakly_clean", "plus", "minus"],
                    "additionalProperties": False,
                },
            ]
        },
    },
    "required": ["command", "spec", "ring", "ok", "verdict"],
    "additionalProperties": False,
}

_IDEAL = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"const": "ideal"},
        "spec": {"type": "string"},
        "ring": {"type": "string"},
        "check": {"enum": ["clean", "weakly-clean", "uniquely", "exchange"]},
        "ideal": {"type": "string"},
        "ok": {"type": "boolean"},
        "verdict": {
            "oneOf": [
                {  # finite ring: exhaustive scan
                    "type": "object",
                    "properties": {
                        "property": {"type": "string"},
                        "ideal": {"type": "string"},
                        "ok": {"type": "boolean"},
                        "checked": {"type": "integer", "minimum": 0},
                        "failing_element": {"type": "integer"},
                        "detail": {"type": "string"},
                        "trace": {"type": "array"},
                    },
                    "required": ["property", "ideal", "ok", "checked"],
                    "additionalProperties": False,
                },
                {  # localization: analytic criterion plus oracle cross-check
                    "type": "object",
                    "properties": {
                        "value": {"type": "boolean"},
                        "method": {"type": "string"},
                        "witness": {"type": ["string", "null"]},
                    },
                    "required": ["value", "method", "witness"],
                    "additionalProperties": False,
                },
            ]
        },
        "witnesses": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "properties": {
                    "element": {"type": "integer"},
                    "sign": {"enum": [1, -1]},
                    "idempotent": {"type": "integer"},
                    "unit": {"type": "integer"},
                },
                "required": ["element"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["command", "spec", "ring", "check", "ideal", "ok", "verdict", "witnesses"],
    "additionalProperties": False,
}

_RADICAL = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"const": "radical"},
        "spec": {"type": "string"},
        "ring": {"type": "string"},
        "kind": {"enum": ["finite", "localized"]},
        "members": {"type": ["array", "null"], "items": {"type": "integer"}},
        "size": {"type": ["integer", "null"]},
        "generator": {"type": ["string", "null"]},
        "description": {"type": "string"},
    },
    "required": [
        "command",
        "spec",
        "ring",
        "kind",
        "members",
        "size",
        "generator",
        "description",
    ],
    "additionalProperties": False,
}

_IDEMPOTENTS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"const": "idempotents"},
        "spec": {"type": "string"},
        "ring": {"type": "string"},
        "idempotents": {
            "type": "array",
            "items": {"type": ["integer", "string"]},
        },
        "count": {"type": "integer", "minimum": 1},
    },
    "required": ["command", "spec", "ring", "idempotents", "count"],
    "additionalProperties": False,
}

_UNITS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"const": "units"},
        "spec": {"type": "string"},
        "ring": {"type": "string"},
        "kind": {"enum": ["finite", "localized"]},
        "units": {"type": ["array", "null"], "items": {"type": "integer"}},
        "count": {"type": ["integer", "null"]},
        "criterion": {"type": ["string", "null"]},
    },
    "required": ["command", "spec", "ring", "kind", "units", "count", "criterion"],
    "additionalProperties": False,
}

_WITNESS_CHECKS = {
    "type": "object",
    "properties": {
        "x_is_unit": {"type": "boolean"},
        "x_minus_one_is_unit": {"type": "boolean"},
        "x_plus_one_is_unit": {"type": "boolean"},
    },
    "required": ["x_is_unit", "x_minus_one_is_unit", "x_plus_one_is_unit"],
    "additionalProperties": False,
}

_EXAMPLES = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "command": {"const": "examples"},
        "full_ring_weakly_clean_not_clean": {
            "type": "object",
            "properties": {
                "ring": {"type": "string"},
                "generator": {"type": "string"},
                "generator_is_unit": {"type": "boolean"},
                "ideal": {"type": "string"},
                "ideal_is_full_ring": {"type": "boolean"},
                "weakly_clean": {"type": "boolean"},
                "clean": {"type": "boolean"},
                "non_clean_witness": {"type": "string"},
                "witness_checks": _WITNESS_CHECKS,
            },
            "required": [
                "ring",
                "generator",
                "generator_is_unit",
                "ideal",
                "ideal_is_full_ring",
                "weakly_clean",
                "clean",
                "non_clean_witness",
                "witness_checks",
            ],
            "additionalProperties": False,
        },
        "product_not_weakly_clean": {
            "type": "object",
            "properties": {
                "ring": {"type": "string"},
                "generators": {"type": "array", "items": {"type": "string"}},
                "generators_are_units": {
                    "type": "array",
                    "items": {"type": "boolean"},
                },
                "component_ideals": {"type": "array", "items": {"type": "string"}},
                "product": {
                    "type": "object",
                    "properties": {
                        "ok": {"type": "boolean"},
                        "witness": {
                            "type": ["array", "null"],
                            "items": {"type": "string"},
                        },
                        "witness_sign_classes": {
                            "type": ["array", "null"],
                            "items": {"type": "string"},
                        },
                        "component_weakly_clean": {
                            "type": "array",
                            "items": {"type": "boolean"},
                        },
                        "component_clean": {
                            "type": "array",
                            "items": {"type": "boolean"},
                        },
                        "detail": {"type": "string"},
                    },
                    "required": [
                        "ok",
                        "witness",
                        "witness_sign_classes",
                        "component_weakly_clean",
                        "component_clean",
                        "detail",
                    ],
                    "additionalProperties": False,
                },
            },
            "required": [
                "ring",
                "generators",
                "generators_are_units",
                "component_ideals",
                "product",
            ],
            "additionalProperties": False,
        },
    },
    "required": [
        "command",
        "full_ring_weakly_clean_not_clean",
        "product_not_weakly_clean",
    ],
    "additionalProperties": False,
}

COMMAND_SCHEMAS = {
    "analyze": _ANALYZE,
    "ideal": _IDEAL,
    "radical": _RADICAL,
    "idempotents": _IDEMPOTENTS,
    "units": _UNITS,
    "laws": LAW_REPORT,
    "examples": _EXAMPLES,
}


def schema_for(command: str) -> dict:
    """The JSON schema governing a command's --json output."""
    return COMMAND_SCHEMAS[command]
