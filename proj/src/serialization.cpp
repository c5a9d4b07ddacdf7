#include "metafib/serialization.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace metafib {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

const json& member(const json& j, const std::string& key, const std::string& context) {
  require(j.is_object(), context + " must be a JSON object");
  auto it = j.find(key);
  require(it != j.end(), context + " is missing the \"" + key + "\" field");
  return *it;
}

Index index_from_json(const json& j, const std::string& context) {
  Int value = int_from_json(j, context);
  require(value.fits_slong_p() != 0, context + " is out of range for an index");
  return value.get_si();
}

std::vector<Int> int_array_from_json(const json& j, const std::string& context) {
  require(j.is_array(), context + " must be an array");
  std::vector<Int> values;
  values.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    values.push_back(int_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  }
  return values;
}

json int_array_to_json(std::span<const Int> values) {
  json out = json::array();
  for (const Int& v : values) out.push_back(int_to_json(v));
  return out;
}

}  // namespace

json int_to_json(const Int& value) {
  if (value.fits_slong_p() != 0) return json(static_cast<std::int64_t>(value.get_si()));
  return json(value.get_str());
}

Int int_from_json(const json& j, const std::string& context) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(context + " is not a decimal integer string: \"" +
                                  j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_float()) {
    throw std::invalid_argument(context +
                                " is a floating-point number; integers too large for JSON must be "
                                "encoded as decimal strings");
  }
  throw std::invalid_argument(context + " must be an integer or a decimal integer string");
}

json to_json(const LinearRecurrence& rec) {
  json j = json::object();
  j["k"] = rec.k();
  j["coeffs"] = int_array_to_json(rec.coeffs());
  j["initial"] = int_array_to_json(rec.initial());
  return j;
}

LinearRecurrence linear_recurrence_from_json(const json& j) {
  const Index k = index_from_json(member(j, "k", "recurrence"), "\"k\"");
  std::vector<Int> coeffs = int_array_from_json(member(j, "coeffs", "recurrence"), "\"coeffs\"");
  std::vector<Int> initial = int_array_from_json(member(j, "initial", "recurrence"), "\"initial\"");
  require(static_cast<Index>(coeffs.size()) == k,
          "length(coeffs) = " + std::to_string(coeffs.size()) +
              " does not match k = " + std::to_string(k));
  return LinearRecurrence(std::move(coeffs), std::move(initial));
}

json to_json(const NestedSpec& spec) {
  json j = json::object();
  j["n0"] = spec.rec.n0();
  j["coeffs"] = int_array_to_json(spec.rec.coeffs());
  j["initial"] = int_array_to_json(spec.init.values());
  return j;
}

NestedSpec nested_spec_from_json(const json& j) {
  const Index n0 = index_from_json(member(j, "n0", "nested recurrence"), "\"n0\"");
  std::vector<Int> coeffs =
      int_array_from_json(member(j, "coeffs", "nested recurrence"), "\"coeffs\"");
  std::vector<Int> initial =
      int_array_from_json(member(j, "initial", "nested recurrence"), "\"initial\"");
  return NestedSpec{MetaFibRecurrence(n0, std::move(coeffs)),
                    InitialCondition(n0, std::move(initial))};
}

json to_json(const Construction& c) {
  json j = json::object();
  j["input"] = to_json(c.input);
  j["s"] = c.s;
  j["h"] = c.h;
  j["meta"] = to_json(NestedSpec{c.target, c.initial});
  return j;
}

Construction construction_from_json(const json& j) {
  LinearRecurrence input = linear_recurrence_from_json(member(j, "input", "bundle"));
  const Index s = index_from_json(member(j, "s", "bundle"), "\"s\"");
  const Index h = index_from_json(member(j, "h", "bundle"), "\"h\"");
  NestedSpec meta = nested_spec_from_json(member(j, "meta", "bundle"));
  return assemble(std::move(input), s, h, std::move(meta.rec), std::move(meta.init));
}

json to_json(const Death& death) {
  json j = json::object();
  j["n"] = death.n;
  j["offset"] = death.offset;
  j["inner_value"] = int_to_json(death.inner_value);
  j["argument"] = int_to_json(death.argument);
  return j;
}

json to_json(const Mismatch& mismatch) {
  json j = json::object();
  j["n"] = mismatch.n;
  j["parity"] = mismatch.slot.odd ? "odd" : "even";
  j["m"] = mismatch.slot.m;
  j["j"] = mismatch.slot.j;
  j["expected"] = int_to_json(mismatch.expected);
  j["got"] = int_to_json(mismatch.got);
  return j;
}

json to_json(const TheoremReport& report) {
  json j = json::object();
  j["pass"] = report.pass;
  j["checked"] = report.checked;
  j["first_mismatch"] = report.first_mismatch ? to_json(*report.first_mismatch) : json(nullptr);
  j["death"] = report.death ? to_json(*report.death) : json(nullptr);
  return j;
}

namespace {

std::string slot_class_name(SlotClass cls) {
  switch (cls) {
    case SlotClass::VanishesNegative: return "vanishes-negative";
    case SlotClass::LandsOddSlot: return "lands-odd-slot";
    case SlotClass::LandsEvenSlot: return "lands-even-slot";
  }
  return "unknown";
}

}  // namespace

json to_json(const CaseTrace& trace) {
  json j = json::object();
  j["n"] = trace.n;
  j["parity"] = trace.slot.odd ? "odd" : "even";
  j["m"] = trace.slot.m;
  j["j"] = trace.slot.j;
  j["value"] = int_to_json(trace.value);
  j["pattern_ok"] = trace.pattern_ok;
  j["violation"] = trace.pattern_ok ? json(nullptr) : json(trace.violation);
  j["death"] = trace.death ? to_json(*trace.death) : json(nullptr);
  json terms = json::array();
  for (const TraceTerm& term : trace.terms) {
    json t = json::object();
    t["offset"] = term.offset;
    t["coeff"] = int_to_json(term.coeff);
    t["inner_value"] = int_to_json(term.inner_value);
    t["argument"] = int_to_json(term.argument);
    t["class"] = slot_class_name(term.cls);
    t["contribution"] = int_to_json(term.contribution);
    if (term.cls == SlotClass::VanishesNegative) {
      t["landed"] = nullptr;
    } else {
      json landed = json::object();
      landed["m"] = term.landed.m;
      landed["j"] = term.landed.j;
      t["landed"] = landed;
    }
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SequenceFormat sequence_format_from_name(const std::string& name) {
  if (name == "bfile") return SequenceFormat::BFile;
  if (name == "csv") return SequenceFormat::Csv;
  if (name == "json") return SequenceFormat::Json;
  throw std::invalid_argument("unknown sequence format \"" + name +
                              "\" (expected bfile, csv, or json)");
}

void write_sequence(std::ostream& out, SequenceFormat format, Index n0,
                    std::span<const Int> values) {
  switch (format) {
    case SequenceFormat::BFile:
      for (std::size_t t = 0; t < values.size(); ++t) {
        out << (n0 + static_cast<Index>(t)) << ' ' << values[t] << '\n';
      }
      break;
    case SequenceFormat::Csv:
      out << "n,value\n";
      for (std::size_t t = 0; t < values.size(); ++t) {
        out << (n0 + static_cast<Index>(t)) << ',' << values[t] << '\n';
      }
      break;
    case SequenceFormat::Json: {
      json j = json::object();
      j["n0"] = n0;
      j["values"] = int_array_to_json(values);
      out << j.dump(2) << '\n';
      break;
    }
  }
}

namespace {

std::string trim(const std::string& s) {
  std::size_t first = 0;
  std::size_t last = s.size();
  while (first < last && std::isspace(static_cast<unsigned char>(s[first])) != 0) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1])) != 0) --last;
  return s.substr(first, last - first);
}

Index parse_index(const std::string& token, const std::string& context) {
  try {
    Int value(token, 10);
    require(value.fits_slong_p() != 0, context + " is out of range for an index");
    return value.get_si();
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(context + " is not an integer: \"" + token + "\"");
  }
}

Int parse_value(const std::string& token, const std::string& context) {
  try {
    return Int(token, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(context + " is not an integer: \"" + token + "\"");
  }
}

Sequence read_bfile(const std::string& text) {
  Sequence seq;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  Index expected = 0;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::istringstream fields(body);
    std::string index_token;
    std::string value_token;
    std::string extra;
    require(static_cast<bool>(fields >> index_token >> value_token),
            "b-file line " + std::to_string(line_no) + " is not \"index value\": \"" + body + "\"");
    require(!(fields >> extra),
            "b-file line " + std::to_string(line_no) + " has trailing content: \"" + body + "\"");
    const std::string context = "b-file line " + std::to_string(line_no);
    const Index n = parse_index(index_token, context + " index");
    if (first) {
      seq.n0 = n;
      expected = n;
      first = false;
    }
    require(n == expected, context + " has index " + std::to_string(n) + "; expected " +
                               std::to_string(expected) + " (indices must be consecutive)");
    seq.values.push_back(parse_value(value_token, context + " value"));
    ++expected;
  }
  return seq;
}

Sequence read_csv(const std::string& text) {
  Sequence seq;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  bool first = true;
  Index expected = 0;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty()) continue;
    if (!saw_header) {
      require(body == "n,value", "CSV must start with the header \"n,value\" (got \"" + body + "\")");
      saw_header = true;
      continue;
    }
    const std::size_t comma = body.find(',');
    require(comma != std::string::npos,
            "CSV line " + std::to_string(line_no) + " is not \"n,value\": \"" + body + "\"");
    const std::string context = "CSV line " + std::to_string(line_no);
    const Index n = parse_index(trim(body.substr(0, comma)), context + " index");
    if (first) {
      seq.n0 = n;
      expected = n;
      first = false;
    }
    require(n == expected, context + " has index " + std::to_string(n) + "; expected " +
                               std::to_string(expected) + " (indices must be consecutive)");
    seq.values.push_back(parse_value(trim(body.substr(comma + 1)), context + " value"));
    ++expected;
  }
  require(saw_header || first, "CSV input is missing the \"n,value\" header");
  return seq;
}

Sequence read_json_sequence(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sequence is not valid JSON: ") + e.what());
  }
  Sequence seq;
  if (j.is_array()) {
    seq.values = int_array_from_json(j, "sequence");
    return seq;
  }
  seq.n0 = index_from_json(member(j, "n0", "sequence"), "\"n0\"");
  seq.values = int_array_from_json(member(j, "values", "sequence"), "\"values\"");
  return seq;
}

SequenceFormat detect_sequence_format(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) continue;
    if (c == '{' || c == '[') return SequenceFormat::Json;
    break;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    if (body.find(',') != std::string::npos) return SequenceFormat::Csv;
    return SequenceFormat::BFile;
  }
  return SequenceFormat::BFile;  // empty input reads as an empty b-file
}

}  // namespace

Sequence read_sequence(const std::string& text, std::optional<SequenceFormat> format,
                       SequenceFormat* detected) {
  const SequenceFormat actual = format ? *format : detect_sequence_format(text);
  if (detected != nullptr) *detected = actual;
  switch (actual) {
    case SequenceFormat::BFile: return read_bfile(text);
    case SequenceFormat::Csv: return read_csv(text);
    case SequenceFormat::Json: return read_json_sequence(text);
  }
  throw std::logic_error("unreachable sequence format");
}

}  // namespace metafib
