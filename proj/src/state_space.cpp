#include "icmn/state_space.hpp"

#include <stdexcept>

namespace icmn {

EpidemicStateSpace::EpidemicStateSpace(int n) : n_(n) {
    if (n < 2) {
        throw std::domain_error("state space: n must be >= 2");
    }
    row_offset_.resize(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= n - 1; ++i) {
        row_offset_[static_cast<std::size_t>(i)] = static_cast<int>(states_.size());
        const int j_lo = (i == 0) ? 1 : 0;  // i + j >= 1
        for (int j = j_lo; i + j <= n - 1; ++j) {
            states_.emplace_back(i, j);
        }
    }
}

int EpidemicStateSpace::index_of(int i, int j) const {
    if (i < 0 || j < 0 || i + j < 1 || i + j > n_ - 1) {
        throw std::out_of_range("state space: no state (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    }
    const int base = row_offset_[static_cast<std::size_t>(i)];
    return base + (i == 0 ? j - 1 : j);
}

}  // namespace icmn
