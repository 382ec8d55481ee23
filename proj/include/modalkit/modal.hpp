#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modalkit/relations.hpp"

namespace modalkit {

// Immutable modal formula tree. BoxPow/DiamondPow are construction helpers
// that expand to m-fold nesting; m = 0 is the formula itself.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { atom, negation, conjunction, disjunction, implication, box, diamond };
    Kind kind;
    std::string name;     // atom only
    FormulaPtr lhs, rhs;  // rhs for binary connectives only
};

FormulaPtr mk_atom(std::string name);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_box(FormulaPtr f);
FormulaPtr mk_diamond(FormulaPtr f);
FormulaPtr box_pow(int m, FormulaPtr f);
FormulaPtr diamond_pow(int m, FormulaPtr f);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);
std::vector<std::string> atom_names(const FormulaPtr& f);

// Text syntax: atoms are identifiers; `~ & | ->`; `[]` and `<>` with an
// optional repetition count (`<>^3 p`); parentheses group.
FormulaPtr parse_formula(std::string_view text);
std::string to_text(const FormulaPtr& f);

// Kripke model: frame plus valuation. Worlds missing from an atom's vector
// (or atoms missing entirely) are false.
struct Model {
    Frame frame;
    std::map<std::string, std::vector<bool>> valuation;

    bool atom_true(const std::string& name, int world) const {
        auto it = valuation.find(name);
        return it != valuation.end() && world < (int)it->second.size() && it->second[world];
    }
};

bool eval(const Model& m, int world, const FormulaPtr& f);

inline constexpr std::uint64_t default_valuation_budget = 1ull << 24;

// True iff the formula holds at every world under every valuation of its
// atoms. Exhaustive: requires 2^(atoms * worlds) <= budget.
bool frame_validates(const Frame& f, const FormulaPtr& formula,
                     std::uint64_t budget = default_valuation_budget);

struct GeachIndex {
    int h = 0, i = 0, j = 0, k = 0;
};

// ◇^h □^i p -> □^j ◇^k p
FormulaPtr geach_formula(GeachIndex g);
// (h,i,j,k)-confluence: ∀w,v,u: wR^h v ∧ wR^j u → ∃x (vR^i x ∧ uR^k x)
bool geach_property(const Frame& f, GeachIndex g);

bool is_s5(const Frame& f);

// named axiom schemes over atoms p, q
FormulaPtr axiom_k();  // [](p->q) -> ([]p -> []q)
FormulaPtr axiom_t();  // []p -> p
FormulaPtr axiom_4();  // []p -> [][]p
FormulaPtr axiom_5();  // <>p -> []<>p
FormulaPtr axiom_b();  // p -> []<>p

}  // namespace modalkit
