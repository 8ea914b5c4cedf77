#pragma once

#include <cstddef>

#include "purerank/errors.hpp"

namespace purerank {

/// Shared knobs for all power/fixed-point solves. The stopping rule is the
/// L1 norm of the difference between successive iterates.
struct SolverOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 50'000;
    /// Mixing weight of the identity in the lazy transform (1-c)*P + c*I
    /// used for recurrent classes; must lie in (0, 1/2].
    double lazy_factor = 0.5;

    void validate() const {
        if (!(tolerance > 0.0))
            throw ValidationError("tolerance must be > 0");
        if (max_iterations == 0)
            throw ValidationError("max_iterations must be >= 1");
        if (!(lazy_factor > 0.0) || lazy_factor > 0.5)
            throw ValidationError("lazy_factor must lie in (0, 1/2]");
    }

    bool operator==(const SolverOptions&) const = default;
};

} // namespace purerank
