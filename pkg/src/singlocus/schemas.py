"""JSON schemas for the CLI output formats (stable keys, validated in tests)."""

U_OUTPUT = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "p": {"type": "integer"},
            "rank": {"type": "integer"},
            "u": {"type": "integer"},
            "conditional": {"type": "boolean"},
        },
        "required": ["p", "rank", "u", "conditional"],
        "additionalProperties": False,
    },
}

PI_CLASS = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"known": {"type": "integer", "minimum": 1}},
            "required": ["known"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "unknown": {"enum": ["ZeroDimensional", "CrossTermZero", "AllEigenOne"]}
            },
            "required": ["unknown"],
            "additionalProperties": False,
        },
    ]
}

COMPONENT_ROW = {
    "type": "object",
    "properties": {
        "p": {"type": "integer"},
        "n": {"type": ["array", "null"], "items": {"type": "integer", "minimum": 0}},
        "b": {"type": ["integer", "null"]},
        "c": {"type": ["integer", "null"]},
        "dim": {"type": ["integer", "null"]},
        "pi": PI_CLASS,
    },
    "required": ["p", "n", "b", "c", "dim", "pi"],
    "additionalProperties": False,
}

COMPONENTS_OUTPUT = {"type": "array", "items": COMPONENT_ROW}

CW_OUTPUT = {
    "type": "object",
    "properties": {
        # run-length pairs [value, count] over (n_0, ..., n_(p-1))
        "n": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "genus": {"type": "integer"},
        "component": COMPONENT_ROW,
    },
    "required": ["n", "genus", "component"],
    "additionalProperties": False,
}

VERIFY_OUTPUT = {
    "type": "object",
    "properties": {
        "symplectic": {"type": "boolean"},
        "order": {"type": "integer"},
        "convention": {"type": "string"},
        "seed": {"type": "integer"},
        "samples": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "a": {"type": "string"},
                    "b": {"type": "string"},
                    "c": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "singular"]},
                },
                "required": ["a", "b", "c", "status"],
                "additionalProperties": False,
            },
        },
        "passes": {"type": "integer"},
        "failures": {"type": "integer"},
        "singular": {"type": "integer"},
        "family_fixed": {"type": "boolean"},
        "dual_tau_samples": {"type": "integer"},
        "dual_tau_symmetric": {"type": "boolean"},
        "overall": {"enum": ["pass", "fail"]},
    },
    "required": [
        "symplectic", "order", "convention", "seed", "samples", "passes",
        "failures", "singular", "family_fixed", "dual_tau_samples",
        "dual_tau_symmetric", "overall",
    ],
    "additionalProperties": False,
}
