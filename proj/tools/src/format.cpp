#include "trimode/cli/format.hpp"

#include <cmath>
#include <cstdio>

namespace trimode::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_quote(std::string_view s) {
  std::string q = "\"";
  for (char c : s) {
    switch (c) {
      case '"': q += "\\\""; break;
      case '\\': q += "\\\\"; break;
      case '\n': q += "\\n"; break;
      case '\t': q += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          q += buf;
        } else {
          q += c;
        }
    }
  }
  return q + "\"";
}

void JsonWriter::key(std::string_view k) {
  if (!first_.empty()) {
    if (!first_.back()) out_ += ",";
    first_.back() = false;
    out_ += "\n" + std::string(2 * first_.size(), ' ');
  }
  if (!k.empty()) out_ += json_quote(k) + ": ";
}

JsonWriter& JsonWriter::begin_object(std::string_view k) {
  key(k);
  out_ += "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool empty = first_.back();
  first_.pop_back();
  if (!empty) out_ += "\n" + std::string(2 * first_.size(), ' ');
  out_ += "}";
  return *this;
}

JsonWriter& JsonWriter::number(std::string_view k, double v) {
  key(k);
  // JSON has no literal for non-finite values.
  out_ += std::isfinite(v) ? format_double(v) : "null";
  return *this;
}

JsonWriter& JsonWriter::integer(std::string_view k, long long v) {
  key(k);
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::boolean(std::string_view k, bool v) {
  key(k);
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::string(std::string_view k, std::string_view v) {
  key(k);
  out_ += json_quote(v);
  return *this;
}

JsonWriter& JsonWriter::numbers(std::string_view k, const std::vector<double>& vs) {
  key(k);
  out_ += "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out_ += ", ";
    out_ += std::isfinite(vs[i]) ? format_double(vs[i]) : "null";
  }
  out_ += "]";
  return *this;
}

std::string JsonWriter::str() const { return out_ + "\n"; }

}  // namespace trimode::cli
