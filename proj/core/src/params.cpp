#include "pdesign/params.hpp"

#include <string>

namespace pdesign {

Params make_params(int k, int t, int lambda) {
    if (t < 2) throw ParameterError("t must be at least 2, got " + std::to_string(t));
    if (k < t) throw ParameterError("k must be at least t, got k=" + std::to_string(k) +
                                    " t=" + std::to_string(t));
    if (lambda < 1) throw ParameterError("lambda must be positive, got " + std::to_string(lambda));
    Params p;
    p.k = k;
    p.t = t;
    p.lambda = lambda;
    p.K = (k - t) * lambda + t;
    return p;
}

} // namespace pdesign
