#include "qloop/error.hpp"
#include "qloop/fundrep.hpp"
#include "qloop/tensor.hpp"

namespace qloop {

namespace {

// 0, 1, -1, 2, -2, ...
std::vector<int> search_order(int bound) {
    std::vector<int> out{0};
    for (int j = 1; j <= bound; ++j) {
        out.push_back(j);
        out.push_back(-j);
    }
    return out;
}

}  // namespace

int calibrate_dual_shift(int n, int xi) {
    Field f = Field::generic();
    ModuleRep dual = dual_module(fundamental_module(n, xi, f.one()));
    for (int c : search_order(2 * (n + 1)))
        if (find_isomorphism(dual, fundamental_module(n, n + 1 - xi, f.qpow(c)))) return c;
    throw CalibrationFailure("no shift c with |c| <= " + std::to_string(2 * (n + 1)) + " matches the dual of V(Lambda_" +
                             std::to_string(xi) + ")");
}

Scalar calibrate_omega_scale(int n, int xi) {
    Field f = Field::generic();
    ModuleRep pulled = omega_module(fundamental_module(n, xi, f.one()));
    for (int j : search_order(2 * (n + 1)))
        for (long sign : {1L, -1L}) {
            Scalar kappa = f.qpow(j) * sign;
            if (find_isomorphism(pulled, fundamental_module(n, n + 1 - xi, f.qpow(2) * kappa))) return kappa;
        }
    throw CalibrationFailure("no kappa = +-q^j with |j| <= " + std::to_string(2 * (n + 1)) + " matches the pull-back of V(Lambda_" +
                             std::to_string(xi) + ")");
}

}  // namespace qloop
