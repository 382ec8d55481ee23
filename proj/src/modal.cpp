#include "modalkit/modal.hpp"

#include <algorithm>
#include <set>

#include "modalkit/errors.hpp"

namespace modalkit {

namespace {
FormulaPtr node(Formula::Kind kind, std::string name, FormulaPtr lhs, FormulaPtr rhs) {
    return std::make_shared<Formula>(Formula{kind, std::move(name), std::move(lhs), std::move(rhs)});
}
}  // namespace

FormulaPtr mk_atom(std::string name) {
    return node(Formula::Kind::atom, std::move(name), nullptr, nullptr);
}
FormulaPtr mk_not(FormulaPtr f) { return node(Formula::Kind::negation, {}, std::move(f), nullptr); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
    return node(Formula::Kind::conjunction, {}, std::move(a), std::move(b));
}
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
    return node(Formula::Kind::disjunction, {}, std::move(a), std::move(b));
}
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
    return node(Formula::Kind::implication, {}, std::move(a), std::move(b));
}
FormulaPtr mk_box(FormulaPtr f) { return node(Formula::Kind::box, {}, std::move(f), nullptr); }
FormulaPtr mk_diamond(FormulaPtr f) { return node(Formula::Kind::diamond, {}, std::move(f), nullptr); }

FormulaPtr box_pow(int m, FormulaPtr f) {
    if (m < 0) throw input_error("box power: negative repetition");
    for (int step = 0; step < m; ++step) f = mk_box(std::move(f));
    return f;
}

FormulaPtr diamond_pow(int m, FormulaPtr f) {
    if (m < 0) throw input_error("diamond power: negative repetition");
    for (int step = 0; step < m; ++step) f = mk_diamond(std::move(f));
    return f;
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind || a->name != b->name) return false;
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

namespace {
void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == Formula::Kind::atom) out.insert(f->name);
    collect_atoms(f->lhs, out);
    collect_atoms(f->rhs, out);
}
}  // namespace

std::vector<std::string> atom_names(const FormulaPtr& f) {
    std::set<std::string> atoms;
    collect_atoms(f, atoms);
    return {atoms.begin(), atoms.end()};
}

bool eval(const Model& m, int world, const FormulaPtr& f) {
    if (world < 0 || world >= m.frame.worlds())
        throw input_error("eval: world " + std::to_string(world) + " out of range");
    switch (f->kind) {
        case Formula::Kind::atom:
            return m.atom_true(f->name, world);
        case Formula::Kind::negation:
            return !eval(m, world, f->lhs);
        case Formula::Kind::conjunction:
            return eval(m, world, f->lhs) && eval(m, world, f->rhs);
        case Formula::Kind::disjunction:
            return eval(m, world, f->lhs) || eval(m, world, f->rhs);
        case Formula::Kind::implication:
            return !eval(m, world, f->lhs) || eval(m, world, f->rhs);
        case Formula::Kind::box:
            for (int v = 0; v < m.frame.worlds(); ++v)
                if (m.frame.get(world, v) && !eval(m, v, f->lhs)) return false;
            return true;  // vacuous at dead ends
        case Formula::Kind::diamond:
            for (int v = 0; v < m.frame.worlds(); ++v)
                if (m.frame.get(world, v) && eval(m, v, f->lhs)) return true;
            return false;
    }
    return false;
}

bool frame_validates(const Frame& f, const FormulaPtr& formula, std::uint64_t budget) {
    const int n = f.worlds();
    const auto atoms = atom_names(formula);
    const std::uint64_t bits = (std::uint64_t)atoms.size() * (std::uint64_t)n;
    if (bits >= 63 || (1ull << bits) > budget) {
        std::string need = bits >= 63 ? ("2^" + std::to_string(bits)) : std::to_string(1ull << bits);
        throw limit_error("frame_validates needs " + need + " valuations, budget is " +
                          std::to_string(budget));
    }
    Model m{f, {}};
    for (const auto& a : atoms) m.valuation[a].assign((std::size_t)n, false);
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        std::uint64_t bit = 0;
        for (const auto& a : atoms) {
            auto& val = m.valuation[a];
            for (int w = 0; w < n; ++w, ++bit) val[w] = (mask >> bit) & 1u;
        }
        for (int w = 0; w < n; ++w)
            if (!eval(m, w, formula)) return false;
    }
    return true;
}

FormulaPtr geach_formula(GeachIndex g) {
    FormulaPtr p = mk_atom("p");
    return mk_implies(diamond_pow(g.h, box_pow(g.i, p)), box_pow(g.j, diamond_pow(g.k, p)));
}

bool geach_property(const Frame& f, GeachIndex g) {
    const Frame rh = relation_power(f, g.h);
    const Frame ri = relation_power(f, g.i);
    const Frame rj = relation_power(f, g.j);
    const Frame rk = relation_power(f, g.k);
    const int n = f.worlds();
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            if (!rh.get(w, v)) continue;
            for (int u = 0; u < n; ++u) {
                if (!rj.get(w, u)) continue;
                bool witness = false;
                for (int x = 0; x < n && !witness; ++x)
                    witness = ri.get(v, x) && rk.get(u, x);
                if (!witness) return false;
            }
        }
    return true;
}

// Equivalent to frame_validates(T) ∧ frame_validates(5); the equivalence is
// exercised by tests rather than assumed here.
bool is_s5(const Frame& f) { return has_property(f, RelationClass::equivalence); }

FormulaPtr axiom_k() {
    FormulaPtr p = mk_atom("p"), q = mk_atom("q");
    return mk_implies(mk_box(mk_implies(p, q)), mk_implies(mk_box(p), mk_box(q)));
}
FormulaPtr axiom_t() { return geach_formula({0, 1, 0, 0}); }
FormulaPtr axiom_4() { return geach_formula({0, 1, 2, 0}); }
FormulaPtr axiom_5() { return geach_formula({1, 0, 1, 1}); }
FormulaPtr axiom_b() { return geach_formula({0, 0, 1, 1}); }

}  // namespace modalkit
