#include "jagpath/params.hpp"

#include <stdexcept>
#include <string>

namespace jagpath {

RestrictionParams::RestrictionParams(int K_, int i_) : K(K_), i(i_) {
    if (K < 2) throw std::invalid_argument("K must be at least 2");
    if (i < 1 || i > kappa())
        throw std::invalid_argument("i must satisfy 1 <= i <= kappa = " + std::to_string(kappa()));
}

}  // namespace jagpath
