#pragma once

#include "pdesign/errors.hpp"

namespace pdesign {

/// Design parameters. K = (k-t)*lambda + t is the largest neighborhood a
/// t-set can have: at most lambda blocks through it, each contributing k-t
/// vertices beyond the t-set itself.
struct Params {
    int k = 0;
    int t = 0;
    int lambda = 0;
    int K = 0;

    friend bool operator==(const Params&, const Params&) = default;
};

Params make_params(int k, int t, int lambda);

} // namespace pdesign
