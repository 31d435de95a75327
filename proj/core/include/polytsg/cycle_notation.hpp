#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "polytsg/perm.hpp"

namespace polytsg {

// Vertex tokens: v1..vn name V = 0..n-1, w1..wn name W = n..2n-1.

std::string vertex_token(Point vertex, std::size_t n);
std::optional<Point> parse_vertex_token(std::string_view token, std::size_t n);

/// Parses disjoint cycles such as "(v1 v2 v3)(w1 w2)" into a permutation of
/// the 2n vertices; unmentioned vertices are fixed and "" or "()" is the
/// identity. Errors carry the byte offset: Error(duplicate_token),
/// Error(unknown_token), Error(unbalanced_parenthesis).
Perm parse_cycles(std::string_view text, std::size_t n);

/// Normal form: nontrivial cycles starting at their least vertex, ordered by
/// it, no spaces between cycles; "()" for the identity.
std::string print_cycles(const Perm& p, std::size_t n);

}  // namespace polytsg
