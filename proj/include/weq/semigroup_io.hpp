// Text format for Cayley tables and the built-in semigroups.
//
//   semigroup <name>
//   elements <tok1> ... <tokn>
//   table
//   <n rows of n tokens>
//
// Lines starting with '#' are comments.

#ifndef WEQ_SEMIGROUP_IO_HPP_
#define WEQ_SEMIGROUP_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weq/semigroup.hpp"

namespace weq {

  //! Throws ParseError with line/column information, or NonAssociative.
  FiniteSemigroup parse_semigroup(std::string_view text, std::string const& source = "<input>");

  FiniteSemigroup load_semigroup(std::string const& path);

  //! trivial, b2, z2, z3, s3, lz2, rz2, n2, sl2.
  std::optional<FiniteSemigroup> builtin_semigroup(std::string_view name);
  std::vector<std::string>       builtin_semigroup_names();

  //! Accepts "builtin:<name>", "file:<path>", a bare builtin name or a path.
  FiniteSemigroup resolve_semigroup(std::string const& spec);

  //! Inverse of parse_semigroup.
  std::string format_semigroup(FiniteSemigroup const& s);

}  // namespace weq

#endif  // WEQ_SEMIGROUP_IO_HPP_
