#include "lring/errors.hpp"

namespace lring {

const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::depth_exceeded: return "DepthExceeded";
    case errc::non_exact_division: return "NonExactDivision";
    case errc::non_integral_result: return "NonIntegralResult";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::insufficient_alphabet: return "InsufficientAlphabet";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::non_polynomial_h: return "NonPolynomialH";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::non_terminating: return "NonTerminating";
  }
  return "Error";
}

}  // namespace lring
