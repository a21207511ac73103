#pragma once

#include "tetra/scalar.hpp"

#include <string>

namespace tetra {

// Appends "coeff*symbol" to a sum under construction, folding the sign into
// the " + " / " - " separator and eliding unit coefficients. An empty symbol
// means a bare constant term.
void append_signed_term(std::string& out, const Scalar& coeff, const std::string& symbol);

}  // namespace tetra
