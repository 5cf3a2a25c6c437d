#pragma once

// ASCII concrete syntax:
//   forall x. F   exists x. F   forall x < t. F   exists x < t. F
//   ~F   F & G   F | G   F -> G   (-> and the binary connectives associate right)
//   t = u   t < u   t in u   R(t, ...)   p
//   terms: 0  s(t)  t + u  t * u  f(t, ...)  x  and decimal literals as numerals

#include <stdexcept>
#include <string>

#include "tc/fol/formula.hpp"

namespace tc::fol {

class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);

std::string print(const Formula& f);
std::string print(const Term& t);

}  // namespace tc::fol
