#include "qloop/cli.hpp"

#include "qloop/error.hpp"
#include "qloop/linalg.hpp"
#include "qloop/parse.hpp"
#include "qloop/serialize.hpp"
#include "qloop/suites.hpp"
#include "qloop/tensor.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace qloop {

namespace {

// Carries a diagnostic that already names the offending flag.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void usage(const std::string& flag, const std::string& msg) { throw UsageError(flag + ": " + msg); }

struct Options {
    int n = 0, l = 0, xi = 0, zeta = 0, budget = 64;
    std::string mode = "generic", format = "json", suite, norm = "polynomial", a, b, out;
    std::vector<std::string> factors;
    std::uint64_t seed = 20240917;
};

struct Factors {
    std::vector<int> xis;
    std::vector<Scalar> as;
};

CriterionMode parse_mode(const Options& o) {
    std::string text = o.mode;
    int l = o.l;
    auto open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')') usage("--mode", "expected generic, epsilon(l) or small(l), got '" + o.mode + "'");
        int inner = 0;
        try {
            inner = std::stoi(text.substr(open + 1, text.size() - open - 2));
        } catch (const std::exception&) {
            usage("--mode", "unreadable l in '" + o.mode + "'");
        }
        if (l != 0 && l != inner) usage("--mode", "l = " + std::to_string(inner) + " disagrees with --l " + std::to_string(l));
        l = inner;
        text = text.substr(0, open);
    }
    if (text == "generic") {
        if (open != std::string::npos) usage("--mode", "generic takes no l");
        return CriterionMode::generic();
    }
    if (text != "epsilon" && text != "small") usage("--mode", "expected generic, epsilon(l) or small(l), got '" + o.mode + "'");
    if (l == 0) usage("--l", "mode " + text + " needs an order l");
    if (l < 3 || l % 2 == 0) usage("--l", "order must be odd and at least 3, got " + std::to_string(l));
    return text == "epsilon" ? CriterionMode::epsilon(l) : CriterionMode::small(l);
}

void require_rank(const Options& o) {
    if (o.n < 1) usage("--n", "InvalidRank: rank must be at least 1, got " + std::to_string(o.n));
}

Scalar parse_param(const std::string& flag, const std::string& text, const Field& f) {
    Scalar s;
    try {
        s = parse_scalar(text, f);
    } catch (const Error& e) {
        usage(flag, e.what());
    }
    if (s.is_zero()) usage(flag, "ZeroSpectralParameter: '" + text + "' is zero");
    return s;
}

int node(const std::string& flag, int xi, int n) {
    if (xi < 1 || xi > n)
        usage(flag, "node " + std::to_string(xi) + " outside 1.." + std::to_string(n));
    return xi;
}

Factors parse_factors(const Options& o, const Field& f) {
    if (o.factors.empty()) usage("--factors", "at least one xi:expr factor is required");
    Factors out;
    for (const auto& spec : o.factors) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) usage("--factors", "expected xi:expr, got '" + spec + "'");
        int xi = 0;
        try {
            std::size_t used = 0;
            xi = std::stoi(spec.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            usage("--factors", "unreadable node in '" + spec + "'");
        }
        out.xis.push_back(node("--factors", xi, o.n));
        out.as.push_back(parse_param("--factors", spec.substr(colon + 1), f));
    }
    return out;
}

ModuleRep build_tensor(int n, const Factors& fs, const CriterionMode& mode) {
    std::vector<ModuleRep> parts;
    for (std::size_t k = 0; k < fs.xis.size(); ++k)
        parts.push_back(mode.kind == CriterionMode::Generic ? fundamental_module(n, fs.xis[k], fs.as[k])
                                                            : restricted_fundamental(n, fs.xis[k], fs.as[k]));
    ModuleRep t = tensor_product(parts);
    return mode.kind == CriterionMode::Small ? small_form(t) : t;
}

OracleOptions oracle_options(const Options& o) {
    if (o.budget < 1) usage("--budget", "must be positive, got " + std::to_string(o.budget));
    OracleOptions opts;
    opts.seed = o.seed;
    opts.budget = o.budget;
    return opts;
}

Json suite_json(const SuiteReport& r) {
    return {{"suite", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", r.failures}};
}

struct Outcome {
    Json result;
    int code = 0;
};

Outcome cmd_build(const Options& o) {
    require_rank(o);
    CriterionMode mode = parse_mode(o);
    Factors fs = parse_factors(o, mode.field());
    ModuleRep m = build_tensor(o.n, fs, mode);
    Json j = to_json(m);
    if (mode.kind == CriterionMode::Epsilon) j["restricted_weights"] = to_json(restricted_weight_table(m));
    return {j, 0};
}

Outcome cmd_criterion(const Options& o) {
    require_rank(o);
    CriterionMode mode = parse_mode(o);
    Factors fs = parse_factors(o, mode.field());
    Json j = to_json(criterion(o.n, fs.xis, fs.as, mode));
    j["sufficiency_holds"] = sufficiency_condition(o.n, fs.xis, fs.as, mode);
    return {j, 0};
}

Outcome cmd_irreducible(const Options& o) {
    require_rank(o);
    CriterionMode mode = parse_mode(o);
    Factors fs = parse_factors(o, mode.field());
    OracleOptions opts = oracle_options(o);
    if (mode.kind == CriterionMode::Epsilon) return {to_json(restricted_tensor_and_oracle(o.n, fs.xis, fs.as, opts)), 0};
    if (mode.kind == CriterionMode::Small) return {to_json(small_tensor_and_oracle(o.n, fs.xis, fs.as, opts)), 0};
    CriterionResult c = criterion(o.n, fs.xis, fs.as, mode);
    IrreducibilityVerdict v = irreducible_oracle(build_tensor(o.n, fs, mode), opts);
    Json j = to_json(v, c);
    j["agrees"] = v.irreducible == c.holds;
    return {j, 0};
}

RData rmatrix_data(const Options& o) {
    require_rank(o);
    if (parse_mode(o).kind != CriterionMode::Generic) usage("--mode", "R-matrices are built over Q(q) only");
    if (o.norm != "polynomial" && o.norm != "barred") usage("--norm", "expected polynomial or barred, got '" + o.norm + "'");
    Field f = Field::generic();
    int xi = node("--xi", o.xi, o.n), zeta = node("--zeta", o.zeta, o.n);
    if (o.a.empty()) usage("--a", "spectral parameter required");
    if (o.b.empty()) usage("--b", "spectral parameter required");
    Scalar a = parse_param("--a", o.a, f), b = parse_param("--b", o.b, f);
    try {
        return build_R(xi, zeta, a, b, o.n, o.norm == "barred" ? RNormalization::Barred : RNormalization::Polynomial);
    } catch (const ResonantDenominator& e) {
        usage("--norm", std::string(e.what()) + "; use --norm polynomial");
    }
}

Json rmatrix_json(const RData& r) {
    Json j = to_json(r);
    std::size_t rk = rank(r.assembled);
    j["rank"] = rk;
    j["kernel_dim"] = r.assembled.cols() - rk;
    return j;
}

Outcome cmd_rmatrix(const Options& o) { return {rmatrix_json(rmatrix_data(o)), 0}; }

Outcome cmd_verify(const Options& o) {
    const std::string& s = o.suite;
    if (s.empty()) usage("--suite", "required: relations, extremal, intertwiner, resonance, detA or specialization");
    if (s == "detA") {
        SuiteReport r = deta_suite(o.seed, 20, 4);
        return {suite_json(r), r.passed() ? 0 : 1};
    }
    require_rank(o);
    if (o.xi != 0) node("--xi", o.xi, o.n);
    SuiteReport r;
    if (s == "relations") {
        Field f = Field::generic();
        std::vector<Scalar> as;
        if (o.a.empty()) as = {f.one(), f.qpow(1), f.integer(2)};
        else as = {parse_param("--a", o.a, f)};
        r = relations_suite({o.n}, as, o.xi);
    } else if (s == "extremal") {
        r = extremal_suite({o.n}, o.xi);
    } else if (s == "intertwiner") {
        r = intertwiner_suite(o.n, o.seed, 5);
    } else if (s == "resonance") {
        r = resonance_suite(o.n);
    } else if (s == "specialization") {
        int l = o.l == 0 ? 5 : o.l;
        if (l < 3 || l % 2 == 0) usage("--l", "order must be odd and at least 3, got " + std::to_string(l));
        r = specialization_suite(o.n, l);
    } else {
        usage("--suite", "unknown suite '" + s + "'");
    }
    return {suite_json(r), r.passed() ? 0 : 1};
}

Outcome cmd_grid(const Options& o) {
    require_rank(o);
    CriterionMode mode = parse_mode(o);
    GridReport g = criterion_grid(o.n, mode, oracle_options(o));
    Json rows = Json::array();
    for (const auto& r : g.rows)
        rows.push_back({{"xi", r.xi},
                        {"zeta", r.zeta},
                        {"ratio", r.ratio.to_string()},
                        {"predicted", r.predicted ? "irreducible" : "reducible"},
                        {"verdict", r.verdict ? "irreducible" : "reducible"},
                        {"strategy", r.strategy},
                        {"agrees", r.agrees()}});
    Json j = {{"mode", mode.to_string()}, {"n", g.n}, {"cases", g.rows.size()}, {"disagreements", g.disagreements()}, {"rows", rows}};
    return {j, g.disagreements() == 0 ? 0 : 1};
}

// Options given on the command line, in a fixed order.
Json job_json(const std::string& command, const Options& o, const CLI::App& app) {
    Json j = {{"command", command}, {"seed", o.seed}};
    auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
    if (given("--n")) j["n"] = o.n;
    if (given("--l")) j["l"] = o.l;
    if (given("--mode")) j["mode"] = o.mode;
    if (given("--factors")) j["factors"] = o.factors;
    if (given("--suite")) j["suite"] = o.suite;
    if (given("--budget")) j["budget"] = o.budget;
    if (given("--xi")) j["xi"] = o.xi;
    if (given("--zeta")) j["zeta"] = o.zeta;
    if (given("--a")) j["a"] = o.a;
    if (given("--b")) j["b"] = o.b;
    if (given("--norm")) j["norm"] = o.norm;
    if (given("--format")) j["format"] = o.format;
    return j;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) usage("--out", "cannot open '" + o.out + "' for writing");
    file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum loop algebra of type A_n: fundamental modules, tensor products, R-matrices, irreducibility",
                 "qloop"};
    app.set_version_flag("--version", std::string(QLOOP_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--n", o.n, "rank n of sl_{n+1}");
    app.add_option("--l", o.l, "odd order of the root of unity");
    app.add_option("--mode", o.mode, "generic, epsilon(l) or small(l)")->capture_default_str();
    app.add_option("--factors", o.factors, "tensor factors as xi:expr, expr in q (generic) or e (root of unity)");
    app.add_option("--seed", o.seed, "seed for randomized steps")->capture_default_str();
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--format", o.format, "json, or csv for rmatrix")->capture_default_str();
    app.add_option("--suite", o.suite, "relations, extremal, intertwiner, resonance, detA, specialization");
    app.add_option("--budget", o.budget, "Norton sampling cap")->capture_default_str();
    app.add_option("--xi", o.xi, "first node");
    app.add_option("--zeta", o.zeta, "second node");
    app.add_option("--a", o.a, "first spectral parameter");
    app.add_option("--b", o.b, "second spectral parameter");
    app.add_option("--norm", o.norm, "R normalization: polynomial or barred")->capture_default_str();
    std::vector<std::pair<std::string, Outcome (*)(const Options&)>> commands = {
        {"build", cmd_build},
        {"criterion", cmd_criterion},
        {"irreducible", cmd_irreducible},
        {"rmatrix", cmd_rmatrix},
        {"verify", cmd_verify},
        {"grid", cmd_grid},
    };
    const char* blurbs[] = {"tensor product module as JSON",
                            "closed-form irreducibility prediction",
                            "oracle verdict with certificate and prediction",
                            "R-matrix between two fundamental modules",
                            "run a named verification suite",
                            "criterion against oracle over the ratio grid"};
    for (std::size_t i = 0; i < commands.size(); ++i) app.add_subcommand(commands[i].first, blurbs[i]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (o.format != "json" && o.format != "csv") usage("--format", "expected json or csv, got '" + o.format + "'");
        if (o.format == "csv" && command != "rmatrix") usage("--format", "csv is only available for rmatrix");
        Json job = job_json(command, o, app);
        if (o.format == "csv") {
            emit(o, "# qloop " + std::string(QLOOP_VERSION) + " " + job.dump() + "\n" + matrix_csv(rmatrix_data(o).assembled), out);
            return 0;
        }
        Outcome res;
        for (const auto& [name, fn] : commands)
            if (name == command) res = fn(o);
        Json doc = {{"job", job}, {"version", QLOOP_VERSION}, {"result", res.result}};
        emit(o, doc.dump(2) + "\n", out);
        return res.code;
    } catch (const UsageError& e) {
        err << "qloop: " << e.what() << "\n";
        return 2;
    } catch (const InconclusiveRandomized& e) {
        err << "qloop: --budget: " << e.what() << "\n";
        return 1;
    } catch (const UnsatisfiablePrecondition& e) {
        err << "qloop: --factors: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "qloop: " << command << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "qloop: " << command << ": " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qloop
