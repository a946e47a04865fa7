#include "trimode/cli/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trimode::cli {

namespace {

using nlohmann::json;

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

Vec3 triple(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const json& a = doc.at(key);
  if (!a.is_array() || a.size() != 3) throw ParseError(std::string("\"") + key + "\" must be an array of 3 numbers");
  return {number_at(a[0], key), number_at(a[1], key), number_at(a[2], key)};
}

ExpectedPurity parse_expected(const json& e) {
  if (!e.is_object()) throw ParseError("\"expected\" must be an object");
  ExpectedPurity out;
  for (const auto& [k, v] : e.items()) {
    if (k == "kept") {
      if (!v.is_number_integer()) throw ParseError("expected.kept must be an integer");
      out.kept = v.get<int>();
    } else if (k == "L") {
      out.L = number_at(v, "expected.L");
    } else if (k == "w") {
      out.w = number_at(v, "expected.w");
    } else if (k == "purity") {
      out.purity = number_at(v, "expected.purity");
    } else {
      throw ParseError("unknown key \"expected." + k + "\"");
    }
  }
  if (out.kept < 1 || out.kept > 3) throw ParseError("expected.kept must be 1, 2 or 3");
  return out;
}

}  // namespace

SystemInput parse_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");

  SystemInput in;
  for (const auto& [k, v] : doc.items()) {
    if (k != "masses" && k != "frequencies" && k != "couplings" && k != "hbar" && k != "expected" &&
        k != "description") {
      throw ParseError("unknown key \"" + k + "\"");
    }
  }
  in.system.mass = triple(doc, "masses");
  in.system.omega = triple(doc, "frequencies");
  if (doc.contains("couplings")) {
    const json& c = doc.at("couplings");
    if (!c.is_object()) throw ParseError("\"couplings\" must be an object");
    for (const auto& [k, v] : c.items()) {
      if (k == "d12") in.system.d12 = number_at(v, "couplings.d12");
      else if (k == "d13") in.system.d13 = number_at(v, "couplings.d13");
      else if (k == "d23") in.system.d23 = number_at(v, "couplings.d23");
      else throw ParseError("unknown key \"couplings." + k + "\"");
    }
  }
  if (doc.contains("hbar")) in.system.hbar = number_at(doc.at("hbar"), "hbar");
  if (doc.contains("expected")) in.expected = parse_expected(doc.at("expected"));
  in.system.validate();
  return in;
}

SystemInput read_system_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_system(ss.str());
}

}  // namespace trimode::cli
