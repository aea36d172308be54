#include "qloop/oracle.hpp"

#include "qloop/error.hpp"
#include "qloop/linalg.hpp"
#include "qloop/tensor.hpp"

#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace qloop {

namespace {

mpq_class height(const Weight& w) {
    mpq_class h = 0;
    for (const auto& c : to_alpha_basis(w)) h += c;
    return h;
}

std::string describe(const Subspace& w) { return std::to_string(w.dim()) + "/" + std::to_string(w.ambient); }

Vector flatten(const Matrix& a) {
    std::size_t d = a.rows();
    Vector v = zero_vector(a.field(), d * a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& e : a.column(j)) v[j * d + e.row] = e.value;
    return v;
}

// Elements of the generated algebra that preserve every grading block.
std::vector<Matrix> block_preserving_words(const ModuleRep& m, Selector s) {
    std::vector<Matrix> out;
    auto keys = selected_generators(m, s);
    for (const auto& key : keys) {
        if (key.kind == GenKind::E && m.has({GenKind::F, key.index, key.power})) {
            const Matrix& e = m.gen(key);
            const Matrix& f = m.F(key.index, key.power);
            out.push_back(e * f);
            out.push_back(f * e);
        }
        if (key.kind == GenKind::K) out.push_back(m.gen(key));
    }
    if (m.affine) {
        Matrix up = Matrix::identity(m.field, m.dim()), down = up;
        for (int i = 0; i <= m.n; ++i) {
            up = up * m.E(i);
            down = m.F(i) * down;
        }
        out.push_back(up);
        out.push_back(down);
    }
    return out;
}

struct Reducible {
    Subspace certificate;
    std::string note;
};

// Closure of v in m, or of v as a functional in dual; a proper result yields a certificate.
std::optional<Reducible> probe(const ModuleRep& m, const ModuleRep& dual, const Vector& v, bool functional, Selector s,
                               std::vector<std::string>& log, const std::string& tag) {
    if (!functional) {
        Subspace w = submodule_closure(m, v, s);
        log.push_back(tag + " closure " + describe(w));
        if (w.dim() < m.dim()) return Reducible{w, tag + " closure is proper"};
    } else {
        Subspace w = submodule_closure(dual, v, s);
        log.push_back(tag + " dual closure " + describe(w));
        if (w.dim() < m.dim()) return Reducible{annihilator(w, m.field), tag + " dual closure is proper; certificate is its annihilator"};
    }
    return std::nullopt;
}

IrreducibilityVerdict reducible(IrreducibilityVerdict v, std::string strategy, Reducible r) {
    v.irreducible = false;
    v.strategy = std::move(strategy);
    v.transcript.push_back("verdict reducible: " + r.note + ", certificate dim " + std::to_string(r.certificate.dim()));
    v.certificate = std::move(r.certificate);
    return v;
}

}  // namespace

std::size_t top_index(const ModuleRep& m) {
    if (m.dim() == 0) throw std::invalid_argument("top_index of a zero module");
    std::size_t best = 0;
    mpq_class hb = height(m.weights[0]);
    for (std::size_t i = 1; i < m.dim(); ++i) {
        mpq_class h = height(m.weights[i]);
        if (h > hb) {
            hb = h;
            best = i;
        }
    }
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i == best) continue;
        if (m.weights[i] == m.weights[best] || !dominance_leq(m.weights[i], m.weights[best]))
            throw UnsatisfiablePrecondition("module has no unique dominating weight vector");
    }
    return best;
}

std::size_t top_block_size(const ModuleRep& m, Selector s) {
    auto key = grading_key(m, top_index(m), s);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (grading_key(m, i, s) == key) ++c;
    return c;
}

std::size_t burnside_dimension(const ModuleRep& m, Selector s, std::size_t cap) {
    std::size_t d = m.dim();
    std::size_t full = d * d;
    std::size_t limit = cap * cap < full ? cap * cap : full;
    std::vector<Matrix> gens;
    for (const auto& key : selected_generators(m, s)) gens.push_back(m.gen(key));
    Echelon span(m.field, full);
    std::deque<Matrix> work;
    Matrix id = Matrix::identity(m.field, d);
    span.insert(flatten(id));
    work.push_back(id);
    while (!work.empty() && span.rank() < limit) {
        Matrix x = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            Matrix y = g * x;
            if (span.insert(flatten(y))) work.push_back(std::move(y));
            if (span.rank() >= limit) break;
        }
    }
    return span.rank();
}

bool is_pseudo_highest_generated(const ModuleRep& m, Selector s) {
    return submodule_closure(m, unit_vector(m.field, m.dim(), top_index(m)), s).dim() == m.dim();
}

bool certificate_valid(const ModuleRep& m, const Subspace& w, Selector s) {
    if (w.ambient != m.dim() || !w.proper_nonzero()) return false;
    if (rank_of(w.basis, m.field, m.dim()) != w.dim()) return false;
    return is_invariant(m, w, s);
}

IrreducibilityVerdict irreducible_oracle(const ModuleRep& m, const OracleOptions& opts) {
    Selector s = opts.selector;
    IrreducibilityVerdict v;
    v.seed = opts.seed;
    v.dim = m.dim();
    auto& log = v.transcript;
    log.push_back("dim " + std::to_string(m.dim()) + ", field " + m.field.name() + ", selector " +
                  (s == Selector::Full ? "full" : "small"));
    std::size_t top = top_index(m);
    log.push_back("top word " + label_string(m.basis[top]) + " of weight " + m.weights[top].to_string());
    std::size_t block = top_block_size(m, s);
    v.weight_separated = block == 1;
    log.push_back("top grading block has dim " + std::to_string(block));

    ModuleRep dual = dual_module(m);
    Field f = m.field;
    if (auto r = probe(m, dual, unit_vector(f, m.dim(), top), false, s, log, "top word"))
        return reducible(std::move(v), "pair-cyclicity", std::move(*r));
    if (auto r = probe(m, dual, unit_vector(f, m.dim(), top), true, s, log, "top functional"))
        return reducible(std::move(v), "pair-cyclicity", std::move(*r));
    if (v.weight_separated && !opts.force_fallback) {
        v.irreducible = true;
        v.strategy = "pair-cyclicity";
        log.push_back("verdict irreducible: top word and its dual functional are both cyclic");
        return v;
    }

    // Norton: an algebra element with a one-dimensional kernel whose kernel vectors generate on both sides.
    std::size_t anchor = m.dim();
    {
        std::map<std::vector<int>, std::size_t> count;
        for (std::size_t i = 0; i < m.dim(); ++i) ++count[grading_key(m, i, s)];
        for (std::size_t i = 0; i < m.dim() && anchor == m.dim(); ++i)
            if (count[grading_key(m, i, s)] == 1) anchor = i;
    }
    if (anchor < m.dim()) {
        log.push_back("norton: seed " + std::to_string(opts.seed) + ", anchor " + label_string(m.basis[anchor]));
        auto words = block_preserving_words(m, s);
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<long> coef(-3, 3);
        auto combo = [&] {
            Matrix x(f, m.dim(), m.dim());
            for (const auto& w : words) x = x + w.scaled(f.integer(coef(rng)));
            return x;
        };
        Matrix id = Matrix::identity(f, m.dim());
        for (int sample = 0; sample < opts.budget; ++sample) {
            Matrix b = combo() * combo() + combo();
            Matrix a = b - id.scaled(b.at(anchor, anchor));
            auto ker = kernel(a);
            auto kerT = kernel(a.transpose());
            std::string tag = "sample " + std::to_string(sample);
            log.push_back(tag + ": nullity " + std::to_string(ker.size()));
            for (const auto& x : ker)
                if (auto r = probe(m, dual, x, false, s, log, tag + " kernel vector"))
                    return reducible(std::move(v), "norton", std::move(*r));
            for (const auto& x : kerT)
                if (auto r = probe(m, dual, x, true, s, log, tag + " cokernel vector"))
                    return reducible(std::move(v), "norton", std::move(*r));
            if (ker.size() == 1) {
                v.irreducible = true;
                v.strategy = "norton";
                log.push_back("verdict irreducible: one-dimensional kernel generating on both sides");
                return v;
            }
        }
    } else {
        log.push_back("norton: no one-dimensional grading block to anchor on");
    }

    if (m.dim() <= opts.burnside_cap) {
        std::size_t dimA = burnside_dimension(m, s, m.dim());
        log.push_back("burnside: algebra dimension " + std::to_string(dimA) + " of " + std::to_string(m.dim() * m.dim()));
        if (dimA == m.dim() * m.dim()) {
            v.irreducible = true;
            v.strategy = "burnside";
            log.push_back("verdict irreducible: generated algebra is the full matrix algebra");
            return v;
        }
    }
    throw InconclusiveRandomized("no verdict after " + std::to_string(opts.budget) + " Norton samples (seed " +
                                 std::to_string(opts.seed) + ")");
}

}  // namespace qloop
