// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "qloop/cli.hpp"
#include "qloop/criterion.hpp"
#include "qloop/fundrep.hpp"
#include "qloop/oracle.hpp"
#include "qloop/parse.hpp"
#include "qloop/rootform.hpp"
#include "qloop/suites.hpp"
#include "qloop/tensor.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qloop;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string summarize(const SuiteReport& r) {
    std::string s = r.name + " " + std::to_string(r.cases) + " cases";
    if (!r.passed()) s += ", first failure: " + r.failures.front();
    return s;
}

Outcome from_suites(const std::vector<SuiteReport>& reports) {
    Outcome o{true, ""};
    for (const auto& r : reports) {
        o.pass = o.pass && r.passed();
        o.detail += (o.detail.empty() ? "" : "; ") + summarize(r);
    }
    return o;
}

std::string grid_text(const GridReport& g) {
    std::ostringstream s;
    for (const auto& r : g.rows)
        s << r.xi << ' ' << r.zeta << ' ' << r.ratio.to_string() << ' ' << r.predicted << ' ' << r.verdict << ' ' << r.strategy
          << '\n';
    return s.str();
}

std::string report_text(const SuiteReport& r) {
    std::string s = r.name + " " + std::to_string(r.cases) + "\n";
    for (const auto& f : r.failures) s += f + "\n";
    return s;
}

Outcome relations() {
    Field G = Field::generic();
    return from_suites({relations_suite({1, 2, 3}, {G.one(), G.qpow(1), G.integer(2)})});
}

Outcome extremal() { return from_suites({extremal_suite({1, 2, 3})}); }

Outcome generic_grid() {
    std::size_t rows = 0, bad = 0;
    std::string first;
    for (int n = 1; n <= 3; ++n) {
        GridReport g = criterion_grid(n, CriterionMode::generic(), OracleOptions{.seed = kSeed});
        rows += g.rows.size();
        bad += g.disagreements();
        for (const auto& r : g.rows)
            if (!r.agrees() && first.empty())
                first = "n=" + std::to_string(n) + " (" + std::to_string(r.xi) + "," + std::to_string(r.zeta) + ") ratio " +
                        r.ratio.to_string();
    }
    std::string d = std::to_string(rows) + " configurations, " + std::to_string(bad) + " disagreements";
    if (!first.empty()) d += ", first at " + first;
    return {bad == 0, d};
}

Outcome three_factor() {
    Field G = Field::generic();
    auto q = [&](int e) { return G.qpow(e); };
    struct Config {
        int n;
        std::vector<int> xis;
        std::vector<Scalar> as;
    };
    std::vector<Config> configs = {
        {1, {1, 1, 1}, {G.one(), q(2), q(4)}},
        {1, {1, 1, 1}, {G.one(), G.integer(2), G.integer(3)}},
        {1, {1, 1, 1}, {q(4), q(2), G.one()}},
        {1, {1, 1, 1}, {G.one(), q(4), G.integer(5)}},
        {1, {1, 1, 1}, {G.one(), q(1) * 3, q(-2)}},
        {2, {1, 1, 1}, {G.one(), q(2), q(4)}},
        {2, {1, 2, 1}, {G.one(), G.integer(2), G.integer(3)}},
        {2, {1, 2, 2}, {G.one(), q(3), G.integer(7)}},
        {2, {2, 1, 2}, {G.one(), q(4), q(-4)}},
        {2, {2, 2, 1}, {G.one(), q(1) * 2, q(-3)}},
    };
    int reducible = 0, bad = 0;
    for (const auto& c : configs) {
        std::vector<ModuleRep> factors;
        for (std::size_t k = 0; k < c.xis.size(); ++k) factors.push_back(fundamental_module(c.n, c.xis[k], c.as[k]));
        auto v = irreducible_oracle(tensor_product(factors), OracleOptions{.seed = kSeed});
        bool predicted = criterion(c.n, c.xis, c.as, CriterionMode::generic()).holds;
        if (v.irreducible != predicted) ++bad;
        if (!v.irreducible) ++reducible;
    }
    return {bad == 0 && reducible > 0, std::to_string(configs.size()) + " configurations, " + std::to_string(reducible) +
                                            " reducible, " + std::to_string(bad) + " disagreements"};
}

Outcome deta() { return from_suites({deta_suite(kSeed, 20, 4)}); }

Outcome rmatrix() {
    std::vector<SuiteReport> reps;
    for (int n = 1; n <= 3; ++n) reps.push_back(intertwiner_suite(n, kSeed, 5));
    for (int n = 1; n <= 3; ++n) reps.push_back(resonance_suite(n));
    return from_suites(reps);
}

std::vector<GridReport> root_grids(CriterionMode (*make)(int)) {
    std::vector<GridReport> out;
    for (int l : {5, 7})
        for (int n = 1; n <= 2; ++n) out.push_back(criterion_grid(n, make(l), OracleOptions{.seed = kSeed}));
    return out;
}

Outcome epsilon_grid(const std::vector<GridReport>& grids) {
    std::size_t rows = 0, bad = 0;
    bool saw_eps3 = false;
    Field E5 = Field::cyclotomic(5);
    for (const auto& g : grids) {
        rows += g.rows.size();
        bad += g.disagreements();
        if (g.n == 1 && g.mode.l == 5)
            for (const auto& r : g.rows)
                if (r.ratio == E5.qpow(3) && !r.verdict) saw_eps3 = true;
    }
    return {bad == 0 && saw_eps3, std::to_string(rows) + " configurations, " + std::to_string(bad) +
                                      " disagreements, n=1 l=5 ratio e^3 " + (saw_eps3 ? "reducible" : "NOT reducible")};
}

Outcome small_grid(const std::vector<GridReport>& eps) {
    auto small = root_grids(&CriterionMode::small);
    std::size_t rows = 0, bad = 0, differ = 0;
    for (std::size_t g = 0; g < small.size(); ++g) {
        rows += small[g].rows.size();
        bad += small[g].disagreements();
        for (std::size_t k = 0; k < small[g].rows.size(); ++k)
            if (small[g].rows[k].verdict != eps[g].rows[k].verdict) ++differ;
    }
    Field T = Field::cyclotomic(3);
    RootVerdict cyc = restricted_tensor_and_oracle(1, {1, 1, 1}, {T.one(), T.qpow(1), T.qpow(2)}, OracleOptions{.seed = kSeed});
    bool cycle_reducible = !cyc.verdict.irreducible;
    return {bad == 0 && differ == 0 && cycle_reducible,
            std::to_string(rows) + " configurations, " + std::to_string(differ) + " verdicts differ from the restricted grid, " +
                std::to_string(bad) + " disagreements, l=3 full cycle " + (cycle_reducible ? "reducible" : "NOT reducible")};
}

Outcome specialization() {
    std::vector<SuiteReport> reps;
    for (int l : {5, 7})
        for (int n = 1; n <= 2; ++n) reps.push_back(specialization_suite(n, l));
    return from_suites(reps);
}

std::string cli_text(std::vector<std::string> args) {
    args.insert(args.begin(), "qloop");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

Outcome determinism() {
    std::vector<std::pair<std::string, std::function<std::string()>>> jobs = {
        {"relations", [] { return report_text(relations_suite({1, 2}, {Field::generic().one()})); }},
        {"extremal", [] { return report_text(extremal_suite({1, 2, 3})); }},
        {"intertwiner", [] { return report_text(intertwiner_suite(2, kSeed, 5)); }},
        {"resonance", [] { return report_text(resonance_suite(2)); }},
        {"detA", [] { return report_text(deta_suite(kSeed, 20, 4)); }},
        {"specialization", [] { return report_text(specialization_suite(1, 5)); }},
        {"grid", [] { return grid_text(criterion_grid(2, CriterionMode::generic(), OracleOptions{.seed = kSeed})); }},
        {"small grid", [] { return grid_text(criterion_grid(1, CriterionMode::small(5), OracleOptions{.seed = kSeed})); }},
        {"cli grid", [] { return cli_text({"grid", "--n", "2", "--seed", "7"}); }},
        {"cli rmatrix", [] { return cli_text({"rmatrix", "--n", "2", "--xi", "1", "--zeta", "2", "--a", "1", "--b", "q^3"}); }},
        {"cli irreducible", [] { return cli_text({"irreducible", "--n", "2", "--factors", "1:1", "1:q^2", "--seed", "3"}); }},
    };
    std::string mismatched;
    for (const auto& [name, job] : jobs)
        if (job() != job()) mismatched += (mismatched.empty() ? "" : ", ") + name;
    if (mismatched.empty()) return {true, std::to_string(jobs.size()) + " jobs rerun byte-identical"};
    return {false, "rerun differs: " + mismatched};
}

}  // namespace

int main() {
    std::vector<GridReport> eps;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"relation suite", relations},
        {"extremal vectors", extremal},
        {"generic two-factor grid", generic_grid},
        {"three-factor spot checks", three_factor},
        {"A-matrix determinant", deta},
        {"R-matrix intertwiners and resonance", rmatrix},
        {"root-of-unity grid", [&] {
             eps = root_grids(&CriterionMode::epsilon);
             return epsilon_grid(eps);
         }},
        {"small-algebra grid", [&] { return small_grid(eps); }},
        {"specialization functoriality", specialization},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::ostringstream t;
        t.precision(1);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail << " ["
                  << t.str() << "s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
