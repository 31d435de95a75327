#include "polytsg/cycle_notation.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "polytsg/error.hpp"

namespace polytsg {

std::string vertex_token(Point vertex, std::size_t n) {
  if (vertex >= 2 * n) throw Error(Errc::invalid_argument, "vertex out of range");
  return vertex < n ? "v" + std::to_string(vertex + 1) : "w" + std::to_string(vertex - n + 1);
}

std::optional<Point> parse_vertex_token(std::string_view token, std::size_t n) {
  if (token.size() < 2 || (token[0] != 'v' && token[0] != 'w') || token[1] == '0') return std::nullopt;
  std::size_t k = 0;
  auto digits = token.substr(1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || end != digits.data() + digits.size() || k < 1 || k > n) return std::nullopt;
  return static_cast<Point>(token[0] == 'v' ? k - 1 : n + k - 1);
}

Perm parse_cycles(std::string_view text, std::size_t n) {
  std::vector<std::vector<Point>> cycles;
  std::vector<char> used(2 * n, 0);
  std::optional<std::size_t> open;  // offset of the unclosed '('
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (open) throw Error(Errc::unbalanced_parenthesis, "nested '('", i);
      open = i++;
      cycles.emplace_back();
    } else if (c == ')') {
      if (!open) throw Error(Errc::unbalanced_parenthesis, "')' without '('", i);
      open.reset();
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && text[i] != '(' && text[i] != ')' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      auto token = text.substr(start, i - start);
      if (!open) throw Error(Errc::unbalanced_parenthesis, "token '" + std::string(token) + "' outside a cycle", start);
      auto x = parse_vertex_token(token, n);
      if (!x) throw Error(Errc::unknown_token, "unknown vertex '" + std::string(token) + "'", start);
      if (used[*x]++) throw Error(Errc::duplicate_token, "vertex '" + std::string(token) + "' repeated", start);
      cycles.back().push_back(*x);
    }
  }
  if (open) throw Error(Errc::unbalanced_parenthesis, "'(' never closed", *open);
  return Perm::from_cycles(2 * n, cycles);
}

std::string print_cycles(const Perm& p, std::size_t n) {
  if (p.degree() != 2 * n) throw Error(Errc::degree_mismatch, "permutation degree is not 2n");
  std::string out;
  for (const auto& cyc : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) out += (i ? " " : "") + vertex_token(cyc[i], n);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace polytsg
