#include "qloop/criterion.hpp"

#include "qloop/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace qloop {

Field CriterionMode::field() const { return kind == Generic ? Field::generic() : Field::cyclotomic(l); }

std::string CriterionMode::to_string() const {
    switch (kind) {
    case Generic: return "generic";
    case Epsilon: return "epsilon(" + std::to_string(l) + ")";
    case Small: return "small(" + std::to_string(l) + ")";
    }
    return "?";
}

namespace {

void check_inputs(int n, const std::vector<int>& xis, const std::vector<Scalar>& as, const CriterionMode& mode) {
    if (n < 1) throw InvalidRank("rank must be at least 1");
    if (xis.size() != as.size()) throw std::invalid_argument("criterion: one parameter per factor expected");
    Field f = mode.field();
    for (std::size_t k = 0; k < xis.size(); ++k) {
        if (xis[k] < 1 || xis[k] > n) throw std::out_of_range("factor " + std::to_string(k + 1) + ": xi outside 1..n");
        if (as[k].is_zero()) throw ZeroSpectralParameter("factor " + std::to_string(k + 1) + " has parameter 0");
        if (as[k].field() != f) throw ContextMismatch("factor " + std::to_string(k + 1) + " is not over " + f.name());
    }
}

}  // namespace

CriterionResult criterion(int n, const std::vector<int>& xis, const std::vector<Scalar>& as, CriterionMode mode) {
    check_inputs(n, xis, as, mode);
    Field f = mode.field();
    CriterionResult res;
    int m = static_cast<int>(xis.size());
    for (int k = 0; k < m; ++k)
        for (int k2 = 0; k2 < m; ++k2) {
            if (k == k2) continue;
            int x = xis[k], y = xis[k2];
            int top = std::min({x, y, n + 1 - x, n + 1 - y});
            Scalar ratio = as[k2] / as[k];
            for (int t = 1; t <= top; ++t)
                for (int sign : {1, -1})
                    if (ratio == f.qpow(sign * (2 * t + std::abs(x - y)))) res.violations.push_back({k + 1, k2 + 1, t, sign});
        }
    res.holds = res.violations.empty();
    return res;
}

bool sufficiency_condition(int n, const std::vector<int>& xis, const std::vector<Scalar>& as, CriterionMode mode) {
    check_inputs(n, xis, as, mode);
    Field f = mode.field();
    int m = static_cast<int>(xis.size());
    for (int k = 0; k < m; ++k)
        for (int k2 = 0; k2 < m; ++k2) {
            if (k == k2) continue;
            int x = xis[k], y = xis[k2];
            Scalar ratio = as[k2] / as[k];
            for (int t = std::max(x, y); t <= std::min(x + y - 1, n); ++t)
                for (int sign : {1, -1})
                    if (ratio == f.qpow(sign * (2 * t - x - y + 2))) return false;
        }
    return true;
}

}  // namespace qloop
