// Lattice-path determinant for quartered hexagons: tilings biject with
// families of non-intersecting paths, and the count is a determinant of
// binomial coefficients indexed by the chosen boundary labels.

#include "tilecount/engines.hpp"

#include <stdexcept>

namespace tilecount {

IntMatrix lgv_matrix(const RegionSpec& spec) {
    if (spec.family != Family::QH)
        throw std::invalid_argument("lgv engine supports the QH family only");
    build_region(spec);  // validates the parameters
    const bool odd_rows = spec.m % 2 != 0;
    const std::size_t k = spec.a.size();
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            long jj = static_cast<long>(j) + 1;
            m.at(i, j) = odd_rows ? binomial(spec.a[i] + jj - 2, 2 * jj - 2)
                                  : binomial(spec.a[i] + jj - 1, 2 * jj - 1);
        }
    }
    return m;
}

Int count_lgv(const RegionSpec& spec) {
    Int d = det_exact(lgv_matrix(spec));
    if (d < 0) throw std::logic_error("lgv determinant came out negative");
    return d;
}

}  // namespace tilecount
