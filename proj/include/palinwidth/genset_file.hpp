#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace palinwidth {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Reads the generating-set text format:
///
///   # comment
///   degree 5
///   x = (1 2)(3 4)
///   y = (1 2 3 4 5)
///
/// Parse errors report the 1-based line and the column within it.
inline GeneratingSet parse_genset(std::string_view text) {
  GeneratingSet gens;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  auto error = [&](const std::string& what, std::size_t col) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + what, offset + col);
  };

  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(offset, end - offset);
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = detail::trim(line);
    if (!line.empty()) {
      if (!have_degree) {
        if (!line.starts_with("degree")) throw error("expected 'degree N'", 0);
        std::string_view num = detail::trim(line.substr(6));
        std::size_t n = 0;
        if (num.empty()) throw error("missing degree", 0);
        for (char ch : num) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) throw error("bad degree", 0);
          n = n * 10 + static_cast<std::size_t>(ch - '0');
          if (n > kMaxDegree) throw error("degree too large", 0);
        }
        if (n == 0) throw error("degree must be positive", 0);
        gens.degree = n;
        have_degree = true;
      } else {
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw error("expected 'label = cycles'", 0);
        std::string label(detail::trim(line.substr(0, eq)));
        if (label.empty()) throw error("empty label", 0);
        for (char ch : label) {
          if (std::isspace(static_cast<unsigned char>(ch)) || ch == '^') {
            throw error("invalid label '" + label + "'", 0);
          }
        }
        Permutation p;
        try {
          p = parse_cycles(line.substr(eq + 1), gens.degree);
        } catch (const ParseError& e) {
          throw error(e.what(), eq + 1);
        }
        if (gens.find_label(label) >= 0) throw error("duplicate label '" + label + "'", 0);
        gens.add(std::move(label), std::move(p));
      }
    }
    if (end == text.size()) break;
    offset = end + 1;
  }
  if (!have_degree) throw ParseError("missing 'degree N' line", 0);
  if (gens.size() == 0) throw ParseError("no generators", text.size());
  return gens;
}

inline GeneratingSet load_genset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open generating-set file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_genset(buf.str());
}

inline std::string format_genset(const GeneratingSet& gens) {
  std::string out = "degree " + std::to_string(gens.degree) + "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += gens.labels[i] + " = " + print_cycles(gens.perms[i]) + "\n";
  }
  return out;
}

}  // namespace palinwidth
