#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polytsg {

enum class Errc {
  degree_mismatch,
  not_a_subgroup,
  not_in_group,
  invalid_permutation,
  invalid_argument,
  mixed_parts,
  part_size_too_small,
  not_realizable,
  hypothesis_violation,
  no_witness_found,
  no_such_edge,
  duplicate_token,
  unknown_token,
  unbalanced_parenthesis,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying one of the library's error kinds. For parse errors
/// `position()` is the byte offset into the input text, otherwise npos.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what,
        std::size_t position = std::string::npos)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

private:
  Errc code_;
  std::size_t position_;
};

}  // namespace polytsg
