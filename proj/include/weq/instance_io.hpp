// Instance text format.  ';' starts a comment ('#' is a legal constant).
//
//   constants a b
//   variables X Y
//   equation X a b Y = Y b a X
//   semigroup builtin:b2            (or file:<path>, relative to the instance)
//   map a -> a
//
// Without a semigroup line the constraints are trivial.  Map lines may be
// omitted only for builtin:trivial.

#ifndef WEQ_INSTANCE_IO_HPP_
#define WEQ_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "weq/equations.hpp"

namespace weq {

  struct ParsedInstance {
    SystemInstance system;
    std::string    semigroup_spec;  // as written, e.g. "builtin:trivial"

    //! The single equation, or the system folded by system_to_single.
    Instance single() const;
  };

  //! Throws ParseError with line and column.
  ParsedInstance parse_instance(std::string_view text, std::string const& source = "<input>",
                                std::string const& base_dir = ".");
  ParsedInstance load_instance(std::string const& path);

  //! Text that parse_instance reads back to the same instance.
  std::string format_instance(Instance const& instance, std::string const& semigroup_spec);

}  // namespace weq

#endif  // WEQ_INSTANCE_IO_HPP_
