#include "qloop/criterion.hpp"
#include "qloop/dpoly.hpp"
#include "qloop/error.hpp"
#include "qloop/linalg.hpp"

namespace qloop {

namespace {

Field common_field(const std::vector<Scalar>& as) {
    if (as.empty()) throw std::invalid_argument("A-matrix of size 0");
    Field f = as[0].field();
    for (const auto& a : as) {
        if (a.is_zero()) throw ZeroSpectralParameter("A-matrix parameter is zero");
        if (a.field() != f) throw ContextMismatch("A-matrix parameters over different fields");
    }
    return f;
}

}  // namespace

Matrix amatrix(const std::vector<Scalar>& as) {
    Field f = common_field(as);
    int m = static_cast<int>(as.size());
    Matrix A(f, as.size(), as.size());
    for (int s = 1; s <= m; ++s) {
        // d-series of column s: q^{m-s} prod_{p>s} (1 - q^-2 a_p u) / (1 - a_p u)
        std::vector<std::vector<Scalar>> roots{std::vector<Scalar>(as.begin() + s, as.end())};
        auto d = psi_series(DrinfeldPoly::from_roots(1, f, roots), 1, SeriesSide::Zero, m);
        const Scalar& a = as[static_cast<std::size_t>(s - 1)];
        for (int r = 1; r <= m; ++r) {
            Scalar entry = f.zero();
            for (int k = 0; k < r; ++k) entry += a.pow(r - k) * d[static_cast<std::size_t>(k)];
            A.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(s - 1), entry);
        }
    }
    return A;
}

Scalar det_amatrix(const std::vector<Scalar>& as) { return determinant(amatrix(as)); }

Scalar det_amatrix_closed_form(const std::vector<Scalar>& as) {
    Field f = common_field(as);
    Scalar r = f.one();
    for (const auto& a : as) r *= a;
    for (std::size_t s = 0; s < as.size(); ++s)
        for (std::size_t t = s + 1; t < as.size(); ++t) r *= f.qpow(-1) * as[t] - f.qpow(1) * as[s];
    return r;
}

}  // namespace qloop
