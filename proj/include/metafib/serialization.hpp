#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "metafib/construction.hpp"
#include "metafib/verify.hpp"

namespace metafib {

// Key order is part of the on-disk format, so everything serializes through
// ordered_json.
using json = nlohmann::ordered_json;

/// Values that fit a 64-bit signed integer serialize as JSON numbers, larger
/// ones as decimal strings. Inputs accept either form; floating-point numbers
/// are rejected (they silently lose precision on big integers).
json int_to_json(const Int& value);
Int int_from_json(const json& j, const std::string& context);

// {"k": <int>, "coeffs": [b1..bk], "initial": [a0..a_{k-1}]}
json to_json(const LinearRecurrence& rec);
LinearRecurrence linear_recurrence_from_json(const json& j);

/// A nested recurrence together with its initial condition:
/// {"n0": <int>, "coeffs": [c1..cK], "initial": [v0..]}.
struct NestedSpec {
  MetaFibRecurrence rec;
  InitialCondition init;
};

json to_json(const NestedSpec& spec);
NestedSpec nested_spec_from_json(const json& j);

// {"input": <LinearRecurrence>, "s": <int>, "h": <int>, "meta": <NestedSpec>}
json to_json(const Construction& c);
Construction construction_from_json(const json& j);

json to_json(const Death& death);
json to_json(const Mismatch& mismatch);
// {"pass": bool, "checked": N, "first_mismatch": null | {...}, "death": null | {...}}
json to_json(const TheoremReport& report);
json to_json(const CaseTrace& trace);

enum class SequenceFormat { BFile, Csv, Json };

/// Parses "bfile", "csv", or "json".
SequenceFormat sequence_format_from_name(const std::string& name);

struct Sequence {
  Index n0 = 0;
  std::vector<Int> values;
};

/// b-file: one "index value" line per term. CSV: header "n,value" then rows.
/// JSON: {"n0": <int>, "values": [...]}.
void write_sequence(std::ostream& out, SequenceFormat format, Index n0, std::span<const Int> values);

/// Reads any of the three formats; detects the format from the content when
/// none is given and reports which one it saw.
Sequence read_sequence(const std::string& text, std::optional<SequenceFormat> format,
                       SequenceFormat* detected = nullptr);

}  // namespace metafib
