#pragma once
// Versioned JSON schemas for the command-line reports and run configurations.
// The copies under schemas/ are generated from these strings; the round-trip
// test keeps binary and files in sync.

namespace shllab {

inline constexpr const char* kReportSchemaJson = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "shl-lab/report/v1",
  "title": "Identity verification report",
  "description": "Array of per-case verification records. Exact values are rationals serialized as 'p/q' strings; numerical values are complex numbers serialized as [re, im] pairs.",
  "type": "array",
  "items": {
    "type": "object",
    "required": ["id", "n", "seed", "point", "lhs", "rhs", "truncation", "abs_err", "rel_err", "verdict", "error"],
    "additionalProperties": false,
    "properties": {
      "id": {
        "type": "string",
        "enum": ["REFINED_CAUCHY_T11", "DET_IDENTITY_T12", "Z_EQUALS_DET_P36", "Z_EQUALS_S_P35", "CAUCHY_FG", "CAUCHY_STABLE", "CAUCHY_HL", "TORUS_ORTH", "SCHUR_EXPANSION_T62", "COR_63", "IHL_REFINED_CAUCHY", "WZJ_CUENCA", "CUENCA_UPGRADE_P51", "OLSHANSKI_CAUCHY", "U0_DET_L37", "TRIDIAG_L44", "DEGEN_P52", "DEGEN_L54"]
      },
      "n": {"type": "integer", "minimum": 1},
      "seed": {"type": "integer", "minimum": 0},
      "point": {"type": "integer", "minimum": 0},
      "lhs": {"$ref": "#/definitions/scalar"},
      "rhs": {"$ref": "#/definitions/scalar"},
      "truncation": {"type": "integer", "minimum": 0},
      "abs_err": {"type": "number"},
      "rel_err": {"type": "number"},
      "verdict": {"type": "string", "enum": ["exact-match", "within-tolerance", "fail"]},
      "error": {"type": "string"},
      "runtime_ms": {"type": "number"}
    }
  },
  "definitions": {
    "scalar": {
      "oneOf": [
        {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
      ]
    }
  }
}
)json";

inline constexpr const char* kConfigSchemaJson = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "shl-lab/config/v1",
  "title": "Verification run configuration",
  "description": "Configuration accepted by 'verify --config'. Command-line flags override file values.",
  "type": "object",
  "additionalProperties": false,
  "properties": {
    "suite": {
      "oneOf": [
        {"type": "string", "const": "all"},
        {"type": "array", "items": {"type": "string"}, "minItems": 1}
      ]
    },
    "n_min": {"type": "integer", "minimum": 1},
    "n_max": {"type": "integer", "minimum": 1},
    "points": {
      "type": "object",
      "required": ["strategy"],
      "additionalProperties": false,
      "properties": {
        "strategy": {"type": "string", "enum": ["fixed", "random"]},
        "count": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0}
      }
    },
    "tolerance": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "truncated": {"type": "number", "exclusiveMinimum": 0},
        "quadrature": {"type": "number", "exclusiveMinimum": 0}
      }
    },
    "out": {"type": "string"},
    "format": {"type": "string", "enum": ["json", "csv"]},
    "timings": {"type": "boolean"}
  }
}
)json";

}  // namespace shllab
