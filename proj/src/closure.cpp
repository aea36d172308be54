#include "qloop/closure.hpp"

#include "qloop/linalg.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace qloop {

std::vector<GenKey> selected_generators(const ModuleRep& m, Selector s) {
    std::vector<GenKey> out;
    for (const auto& [key, mat] : m.gens) {
        if (s == Selector::Small) {
            if (key.kind == GenKind::KBinom) continue;
            if ((key.kind == GenKind::E || key.kind == GenKind::F) && key.power != 1) continue;
        }
        out.push_back(key);
    }
    return out;
}

namespace {

bool keys_by_full_weight(const ModuleRep& m, Selector s) {
    if (m.field.is_generic()) return true;
    if (s == Selector::Small) return false;
    for (const auto& [key, mat] : m.gens)
        if (key.kind == GenKind::KBinom) return true;
    return false;
}

struct Blocks {
    std::map<std::vector<int>, std::vector<std::size_t>> members;
    std::vector<std::vector<int>> key_of;
    std::vector<std::size_t> local_of;
};

Blocks make_blocks(const ModuleRep& m, Selector s) {
    Blocks b;
    b.key_of.resize(m.dim());
    b.local_of.resize(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        b.key_of[i] = grading_key(m, i, s);
        auto& mem = b.members[b.key_of[i]];
        b.local_of[i] = mem.size();
        mem.push_back(i);
    }
    return b;
}

// Diagonal generators must be scalar on each block for the grading to be sound.
void check_diagonal_constant(const ModuleRep& m, const Blocks& b, const std::vector<GenKey>& gens) {
    for (const auto& key : gens) {
        const Matrix& g = m.gen(key);
        if (!g.is_diagonal()) continue;
        for (const auto& [k, mem] : b.members) {
            Scalar first = g.at(mem[0], mem[0]);
            for (std::size_t i : mem)
                if (g.at(i, i) != first)
                    throw std::logic_error("generator " + key.to_string() + " is not constant on a grading block");
        }
    }
}

}  // namespace

std::vector<int> grading_key(const ModuleRep& m, std::size_t basis_index, Selector s) {
    std::vector<int> k = m.weights.at(basis_index).coeffs;
    if (!keys_by_full_weight(m, s)) {
        int l = m.field.l();
        for (auto& c : k) c = ((c % l) + l) % l;
    }
    return k;
}

Subspace submodule_closure(const ModuleRep& m, const std::vector<Vector>& seeds, Selector s) {
    const Field& f = m.field;
    std::size_t d = m.dim();
    Blocks blocks = make_blocks(m, s);
    std::vector<GenKey> gens = selected_generators(m, s);
    check_diagonal_constant(m, blocks, gens);
    std::vector<const Matrix*> moving;
    for (const auto& key : gens)
        if (!m.gen(key).is_diagonal()) moving.push_back(&m.gen(key));

    std::map<std::vector<int>, Echelon> ech;
    for (const auto& [k, mem] : blocks.members) ech.emplace(k, Echelon(f, mem.size()));
    std::deque<std::pair<std::vector<int>, Vector>> work;

    auto absorb = [&](const Vector& v) {
        std::map<std::vector<int>, Vector> parts;
        for (std::size_t i = 0; i < d; ++i) {
            if (v[i].is_zero()) continue;
            const auto& k = blocks.key_of[i];
            auto it = parts.find(k);
            if (it == parts.end()) it = parts.emplace(k, zero_vector(f, blocks.members[k].size())).first;
            it->second[blocks.local_of[i]] = v[i];
        }
        for (auto& [k, local] : parts)
            if (ech.at(k).insert(local)) work.emplace_back(k, std::move(local));
    };

    for (const auto& v : seeds) {
        if (v.size() != d) throw std::invalid_argument("closure seed has wrong length");
        absorb(v);
    }
    while (!work.empty()) {
        auto [k, local] = std::move(work.front());
        work.pop_front();
        Vector v = zero_vector(f, d);
        const auto& mem = blocks.members.at(k);
        for (std::size_t j = 0; j < mem.size(); ++j) v[mem[j]] = local[j];
        for (const Matrix* g : moving) {
            Vector w = g->apply(v);
            if (!is_zero(w)) absorb(w);
        }
    }

    Subspace out;
    out.ambient = d;
    for (const auto& [k, e] : ech) {
        const auto& mem = blocks.members.at(k);
        for (const auto& row : e.rows()) {
            Vector v = zero_vector(f, d);
            for (std::size_t j = 0; j < mem.size(); ++j) v[mem[j]] = row[j];
            out.basis.push_back(std::move(v));
        }
    }
    return out;
}

Subspace submodule_closure(const ModuleRep& m, const Vector& seed, Selector s) {
    return submodule_closure(m, std::vector<Vector>{seed}, s);
}

bool is_invariant(const ModuleRep& m, const Subspace& w, Selector s) {
    Echelon e(m.field, m.dim());
    for (const auto& v : w.basis) e.insert(v);
    for (const auto& key : selected_generators(m, s))
        for (const auto& v : w.basis)
            if (!e.contains(m.gen(key).apply(v))) return false;
    return true;
}

Subspace annihilator(const Subspace& w, const Field& f) {
    Matrix rows(f, w.basis.size(), w.ambient);
    for (std::size_t r = 0; r < w.basis.size(); ++r)
        for (std::size_t c = 0; c < w.ambient; ++c)
            if (!w.basis[r][c].is_zero()) rows.set(r, c, w.basis[r][c]);
    Subspace out;
    out.ambient = w.ambient;
    out.basis = kernel(rows);
    return out;
}

}  // namespace qloop
