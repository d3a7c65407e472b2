// The languages L_s = mu^{-1}(s) over constant words, read off the
// deterministic automaton with states S^1.

#ifndef WEQ_PREIMAGE_HPP_
#define WEQ_PREIMAGE_HPP_

#include <optional>

#include "weq/equations.hpp"

namespace weq {

  //! u y^m w lies in L_s for every m >= 0; y is nonempty.
  struct Pump {
    Word u;
    Word y;
    Word w;

    Word instantiate(std::size_t m) const;
  };

  //! Some nonempty constant word maps to s.
  bool preimage_nonempty(ConstraintMorphism const& mu, element_type s);
  bool preimage_infinite(ConstraintMorphism const& mu, element_type s);
  std::optional<Pump> preimage_pump(ConstraintMorphism const& mu, element_type s);
  //! Shortest, then lexicographically least, constant word in L_s.
  std::optional<Word> shortest_preimage(ConstraintMorphism const& mu, element_type s);

  //! Number of words in L_s of length at most max_length.
  std::size_t count_preimage(ConstraintMorphism const& mu, element_type s, std::size_t max_length);

}  // namespace weq

#endif  // WEQ_PREIMAGE_HPP_
