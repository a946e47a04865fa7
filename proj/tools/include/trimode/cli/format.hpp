#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trimode::cli {

/// 17 significant digits, lowercase exponent; identical bits give identical text.
std::string format_double(double v);

/// Appends JSON text in insertion order. Just enough for the command outputs.
class JsonWriter {
 public:
  JsonWriter& begin_object(std::string_view key = {});
  JsonWriter& end_object();
  JsonWriter& number(std::string_view key, double v);
  JsonWriter& integer(std::string_view key, long long v);
  JsonWriter& boolean(std::string_view key, bool v);
  JsonWriter& string(std::string_view key, std::string_view v);
  JsonWriter& numbers(std::string_view key, const std::vector<double>& vs);

  /// Pretty-printed with two-space indentation and a trailing newline.
  std::string str() const;

 private:
  void key(std::string_view k);

  std::string out_;
  std::vector<bool> first_;
};

std::string json_quote(std::string_view s);

}  // namespace trimode::cli
