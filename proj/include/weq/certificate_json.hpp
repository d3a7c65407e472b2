// JSON form of pumping certificates.  Words are written as space separated
// tokens, constraint images by element name.

#ifndef WEQ_CERTIFICATE_JSON_HPP_
#define WEQ_CERTIFICATE_JSON_HPP_

#include <json.hpp>

#include "weq/periodicity.hpp"

namespace weq {

  nlohmann::json to_json(SymbolTable const& symbols, FiniteSemigroup const& target,
                         PumpingCertificate const& cert);

  //! Throws ParseError naming the offending field.
  PumpingCertificate certificate_from_json(SymbolTable const& symbols, FiniteSemigroup const& target,
                                           nlohmann::json const& j);

  Label parse_label(SymbolTable const& symbols, std::string const& text);

  nlohmann::json solution_json(SymbolTable const& symbols, Solution const& sigma);

}  // namespace weq

#endif  // WEQ_CERTIFICATE_JSON_HPP_
