#pragma once

#include "pspc/decimal.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pspc {

// Relations of the constraint system: only < and = survive parsing; the
// surface forms <=, >=, >, != are desugared by the front end.
enum class Rel : std::uint8_t { Lt, Eq };

struct ConstraintAtom {
    std::string var;
    Rel rel = Rel::Lt;
    Decimal threshold;

    friend bool operator==(const ConstraintAtom&, const ConstraintAtom&) = default;
};

// An atom is either a Boolean signal name or an atomic numerical constraint.
using Atom = std::variant<std::string, ConstraintAtom>;

// Identifiers beginning with this prefix are reserved for generated region
// propositions and are rejected by the requirement parser.
inline constexpr const char* kReservedPrefix = "__psp_";

enum class Op : std::uint8_t {
    False,
    True,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Next,
    Until,
    WeakUntil,
    Release,
    Eventually,
    Always,
};

// Immutable temporal-formula tree with structural equality.  And/Or are
// binary; n-ary surface chains right-associate.  Hashes are computed at
// construction so equality checks are cheap.
class Formula {
public:
    Formula() = default;

    static Formula ff();
    static Formula tt();
    static Formula prop(std::string name);
    static Formula lt(std::string var, Decimal threshold);
    static Formula eq(std::string var, Decimal threshold);
    static Formula atom(Atom a);
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula next(Formula f);
    static Formula until(Formula a, Formula b);
    static Formula weak_until(Formula a, Formula b);
    static Formula release(Formula a, Formula b);
    static Formula eventually(Formula f);
    static Formula always(Formula f);

    // Right-associated chain over a nonempty list; empty lists give the
    // neutral element (true for conj, false for disj).
    static Formula conj_all(const std::vector<Formula>& fs);
    static Formula disj_all(const std::vector<Formula>& fs);

    bool valid() const { return node_ != nullptr; }
    Op op() const;
    const Atom& atom_ref() const;  // requires op() == Op::Atom
    const Formula& left() const;   // unary operand lives here
    const Formula& right() const;
    std::size_t hash() const;

    bool is_atom() const { return op() == Op::Atom; }
    bool is_prop() const;
    bool is_constraint() const;
    const std::string& prop_name() const;
    const ConstraintAtom& constraint() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Op op, Formula lhs, Formula rhs);

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Negation normal form: Not appears only directly above atoms, Implies is
// eliminated, and Eventually/Always/WeakUntil are rewritten into
// Until/Release.
Formula to_nnf(const Formula& f);

// True iff no constraint atom occurs anywhere in f.
bool is_pure_boolean(const Formula& f);

// All Boolean proposition names occurring in f, sorted.
std::vector<std::string> collect_props(const Formula& f);

// All constraint atoms occurring in f, in first-occurrence order.
std::vector<ConstraintAtom> collect_constraints(const Formula& f);

// Numeric variables occurring in constraint atoms of f, sorted.
std::set<std::string> collect_variables(const Formula& f);

// Flattens And/Or chains and rebuilds them right-associated, preserving
// operand order.  Used when comparing formulas up to associativity.
Formula normalize_assoc(const Formula& f);

// Replaces proposition atoms by formulas (used for catalog templates).
Formula substitute_props(const Formula& f, const std::map<std::string, Formula>& subst);

// Local simplification: constant folding, double-negation removal, And/Or
// flattening with duplicate and complementary-literal elimination.  The
// result is logically equivalent and in plain binary IR form.
Formula simplify(const Formula& f);

// Number of nodes in the tree.
std::size_t formula_size(const Formula& f);

}  // namespace pspc
