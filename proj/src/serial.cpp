#include "permcode/serial.hpp"

#include <json.hpp>

#include <type_traits>
#include <utility>

namespace permcode {
namespace {

using nlohmann::json;

json parse_object(const std::string& line) {
  json o;
  try {
    o = json::parse(line);
  } catch (const json::exception& e) {
    throw malformed_error(std::string("invalid json: ") + e.what());
  }
  if (!o.is_object()) throw malformed_error("record is not a json object");
  return o;
}

int int_field(const json& o, const char* key) {
  if (!o.contains(key))
    throw malformed_error(std::string("missing field: ") + key);
  const json& v = o.at(key);
  if (!v.is_number_integer())
    throw malformed_error(std::string("field is not an integer: ") + key);
  return v.get<int>();
}

std::vector<int> int_array(const json& v, const char* what) {
  if (!v.is_array())
    throw malformed_error(std::string(what) + " is not an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw malformed_error(std::string(what) + " holds a non-integer");
    out.push_back(e.get<int>());
  }
  return out;
}

json pattern_obj(const ErrorPattern& pattern) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        json o;
        if constexpr (std::is_same_v<T, PatternA>) {
          o["model"] = "A";
          o["positions"] = p.positions;
          o["m"] = p.m;
        } else if constexpr (std::is_same_v<T, PatternB>) {
          o["model"] = "B";
          o["j"] = p.j;
          o["t1"] = p.t1;
        } else {
          o["model"] = "C";
          o["i1"] = p.i1;
          o["t1"] = p.t1;
        }
        return o;
      },
      pattern);
}

ErrorPattern pattern_from_obj(const json& o) {
  if (!o.contains("model") || !o.at("model").is_string())
    throw malformed_error("pattern has no model letter");
  const std::string model = o.at("model").get<std::string>();
  if (model == "A") {
    if (!o.contains("positions"))
      throw malformed_error("missing field: positions");
    PatternA p;
    p.positions = int_array(o.at("positions"), "positions");
    p.m = o.contains("m") ? int_field(o, "m") : 0;
    return p;
  }
  if (model == "B") return PatternB{int_field(o, "j"), int_field(o, "t1"), 0};
  if (model == "C") return PatternC{int_field(o, "i1"), int_field(o, "t1"), 0};
  throw malformed_error("unknown pattern model: " + model);
}

}  // namespace

std::string descriptor_to_json(const CodeParams& params) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        json o;
        o["n"] = p.n;
        o["t"] = p.t;
        o["t_prime"] = p.t_prime;
        if constexpr (std::is_same_v<T, CodeParamsA>) {
          o["model"] = "A";
          o["m"] = p.m;
          o["field_bits"] = p.field_bits;
        } else if constexpr (std::is_same_v<T, CodeParamsB>) {
          o["model"] = "B";
        } else {
          o["model"] = "C";
        }
        return o.dump();
      },
      params);
}

CodeParams descriptor_from_json(const std::string& line) {
  const json o = parse_object(line);
  if (!o.contains("model") || !o.at("model").is_string())
    throw malformed_error("descriptor has no model letter");
  const std::string model = o.at("model").get<std::string>();
  const int n = int_field(o, "n");
  const int t = int_field(o, "t");
  if (model == "A") return CodeParamsA::create(n, t, int_field(o, "m"));
  if (model == "B") return CodeParamsB::create(n, t);
  if (model == "C") return CodeParamsC::create(n, t);
  throw malformed_error("unknown model: " + model);
}

std::string pattern_to_json(const ErrorPattern& pattern) {
  return pattern_obj(pattern).dump();
}

ErrorPattern pattern_from_json(const std::string& json_text) {
  return pattern_from_obj(parse_object(json_text));
}

std::string perm_record(const Word& w) {
  json o;
  o["perm"] = w;
  return o.dump();
}

std::string word_record(const Word& w, const ErrorPattern& pattern) {
  json o;
  o["word"] = w;
  o["pattern"] = pattern_obj(pattern);
  return o.dump();
}

std::string error_record(const std::string& kind, const std::string& detail) {
  json o;
  o["error"] = kind;
  o["detail"] = detail;
  return o.dump();
}

ParsedRecord parse_record(const std::string& line) {
  const json o = parse_object(line);
  ParsedRecord rec;
  if (o.contains("error")) {
    rec.is_error = true;
    return rec;
  }
  if (o.contains("model")) {
    rec.descriptor = descriptor_from_json(line);
    return rec;
  }
  if (o.contains("perm")) {
    rec.word = int_array(o.at("perm"), "perm");
    return rec;
  }
  if (o.contains("word")) {
    rec.word = int_array(o.at("word"), "word");
    return rec;
  }
  throw malformed_error("unrecognized record shape");
}

std::string report_to_json(const VerificationReport& report) {
  json o;
  o["run"] = report.params;
  o["cases"] = report.cases_tested;
  o["failures"] = report.failure_count;
  o["verified"] = report.verified();
  json examples = json::array();
  for (const auto& f : report.failures) {
    json e;
    e["sigma"] = f.sigma;
    e["pattern"] = f.pattern ? pattern_obj(*f.pattern) : json(nullptr);
    e["decoded"] = f.decoded;
    e["note"] = f.note;
    examples.push_back(std::move(e));
  }
  o["failure_examples"] = std::move(examples);
  return o.dump();
}

}  // namespace permcode
