#pragma once

#include <string>

#include "lring/poly.hpp"

namespace lring {

// {"vars":[names sorted by name],"terms":[{"c":"<int|a/b>","e":[...]}]}
// with terms in canonical (graded-lex descending) order.
std::string poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const std::string& text);

}  // namespace lring
