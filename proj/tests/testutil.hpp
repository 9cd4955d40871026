#pragma once

#include <vector>

#include "kmx/exactlin.hpp"

namespace kmxtest {

inline kmx::IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    return kmx::IntMatrix::from_rows(rows);
}

inline kmx::IntMatrix a2() { return mat({{2, 1}, {1, 2}}); }

}  // namespace kmxtest
