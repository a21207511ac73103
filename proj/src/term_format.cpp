#include "tetra/term_format.hpp"

namespace tetra {

void append_signed_term(std::string& out, const Scalar& coeff, const std::string& symbol) {
    if (coeff.is_zero())
        return;
    const bool negative = coeff.sign() < 0;
    const Scalar magnitude = negative ? -coeff : coeff;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (symbol.empty()) {
        out += magnitude.str();
        return;
    }
    if (magnitude == Scalar(1)) {
        out += symbol;
        return;
    }
    out += magnitude.str();
    out += "*";
    out += symbol;
}

}  // namespace tetra
