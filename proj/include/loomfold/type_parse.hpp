#pragma once

// Type strings "<FAMILY><N>~<r>", e.g. "A5~2" for A_5^(2) or "E8~1".

#include "loomfold/cartan.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace loomfold {

inline AffineType parse_type(const std::string& str) {
  std::size_t pos = 0;
  if (str.empty()) throw ParseError("empty type string", 0);
  const char fc = static_cast<char>(std::toupper(static_cast<unsigned char>(str[0])));
  if (fc < 'A' || fc > 'G') throw ParseError("family letter must be one of A..G", 0);
  const Family f = static_cast<Family>(fc - 'A');
  pos = 1;
  auto read_int = [&](const char* what) {
    const std::size_t begin = pos;
    while (pos < str.size() && std::isdigit(static_cast<unsigned char>(str[pos]))) ++pos;
    if (pos == begin) throw ParseError(std::string("expected ") + what, begin);
    if (pos - begin > 4) throw ParseError(std::string(what) + " is too large", begin);
    return std::stoi(str.substr(begin, pos - begin));
  };
  const int N = read_int("rank");
  if (pos >= str.size() || str[pos] != '~') throw ParseError("expected '~' before the twist", pos);
  ++pos;
  const int r = read_int("twist");
  if (pos != str.size()) throw ParseError("unexpected trailing characters", pos);
  try {
    return make_type(f, N, r);
  } catch (const InvalidType& e) {
    throw UnknownType(str + " is not in the affine table");
  }
}

enum class OutputFormat { json, dot, text };

struct RunConfig {
  std::string type_string;
  std::optional<int> node;
  int degree = 12;
  OutputFormat format = OutputFormat::json;
  bool all_flag = false;
};

}  // namespace loomfold
