"""JSON Schemas of the documents printed by the command-line tool."""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[1-9][0-9]*)?$"}
RATIONAL_ROW = {"type": "array", "items": RATIONAL}

_LIMIT = {
    "type": "object",
    "required": ["L", "l", "witness", "active_regions"],
    "additionalProperties": False,
    "properties": {
        "L": RATIONAL,
        "l": RATIONAL,
        "witness": {
            "type": "object",
            "required": ["m", "n"],
            "additionalProperties": False,
            "properties": {"m": {"type": "integer", "minimum": 1}, "n": {"type": "integer", "minimum": 1}},
        },
        "active_regions": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
    },
}

VALUATION = {
    "type": "object",
    "required": ["weights", "e"],
    "additionalProperties": False,
    "properties": {
        "weights": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
        "e": {"type": "integer", "minimum": 1},
    },
}

OUTPUT_SCHEMAS = {
    "limits": _LIMIT,
    "valuations": {
        "type": "object",
        "required": ["valuations"],
        "additionalProperties": False,
        "properties": {"valuations": {"type": "array", "items": VALUATION, "minItems": 1}},
    },
    "cone": {
        "type": "object",
        "required": ["hyperplanes", "relevant"],
        "additionalProperties": False,
        "properties": {
            "hyperplanes": {"type": "array", "items": RATIONAL_ROW, "minItems": 1},
            "relevant": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        },
    },
    "classify": {
        "type": "object",
        "required": ["point", "classification"],
        "additionalProperties": False,
        "properties": {
            "point": RATIONAL_ROW,
            "classification": {"enum": ["interior", "boundary", "outside"]},
        },
    },
    "sequence": {
        "type": "object",
        "required": ["values", "period", "max_deviation"],
        "additionalProperties": False,
        "properties": {
            "values": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "period": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["t", "onset"],
                        "additionalProperties": False,
                        "properties": {"t": {"type": "integer", "minimum": 1}, "onset": {"type": "integer", "minimum": 1}},
                    },
                ]
            },
            "max_deviation": RATIONAL,
        },
    },
    "mesh": {
        "type": "object",
        "required": ["out", "vertices", "faces", "seams"],
        "additionalProperties": False,
        "properties": {
            "out": {"type": "string"},
            "vertices": {"type": "integer", "minimum": 0},
            "faces": {"type": "integer", "minimum": 0},
            "seams": {"type": "integer", "minimum": 0},
        },
    },
    "check": {
        "type": "object",
        "required": ["m", "n", "contained"],
        "additionalProperties": False,
        "properties": {
            "m": {"type": "integer", "minimum": 0},
            "n": {"type": "integer", "minimum": 0},
            "contained": {"type": "boolean"},
        },
    },
    "limit-exists": {
        "type": "object",
        "required": ["a", "limit"],
        "additionalProperties": False,
        "properties": {"a": RATIONAL_ROW, "limit": {"oneOf": [{"type": "null"}, RATIONAL]}},
    },
}

ERROR_SCHEMA = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}, "path": {"type": "string"}},
}
