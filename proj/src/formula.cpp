#include "pspc/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace pspc {

struct Formula::Node {
    Op op;
    std::size_t hash;
    Atom atom;  // meaningful iff op == Op::Atom
    Formula lhs;
    Formula rhs;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t atom_hash(const Atom& a) {
    if (const auto* p = std::get_if<std::string>(&a)) return std::hash<std::string>{}(*p);
    const auto& c = std::get<ConstraintAtom>(a);
    std::size_t h = std::hash<std::string>{}(c.var);
    h = mix(h, static_cast<std::size_t>(c.rel));
    h = mix(h, hash_value(c.threshold));
    return h;
}

}  // namespace

Formula Formula::make(Op op, Formula lhs, Formula rhs) {
    std::size_t h = static_cast<std::size_t>(op) * 0x2545f4914f6cdd1dULL;
    if (lhs.valid()) h = mix(h, lhs.hash());
    if (rhs.valid()) h = mix(h, rhs.hash());
    auto n = std::make_shared<Node>(Node{op, h, Atom{}, std::move(lhs), std::move(rhs)});
    return Formula(std::move(n));
}

Formula Formula::ff() { return make(Op::False, {}, {}); }
Formula Formula::tt() { return make(Op::True, {}, {}); }

Formula Formula::atom(Atom a) {
    std::size_t h = mix(static_cast<std::size_t>(Op::Atom) * 0x2545f4914f6cdd1dULL, atom_hash(a));
    auto n = std::make_shared<Node>(Node{Op::Atom, h, std::move(a), {}, {}});
    return Formula(std::move(n));
}

Formula Formula::prop(std::string name) { return atom(Atom{std::move(name)}); }

Formula Formula::lt(std::string var, Decimal threshold) {
    return atom(Atom{ConstraintAtom{std::move(var), Rel::Lt, threshold}});
}

Formula Formula::eq(std::string var, Decimal threshold) {
    return atom(Atom{ConstraintAtom{std::move(var), Rel::Eq, threshold}});
}

Formula Formula::negate(Formula f) { return make(Op::Not, std::move(f), {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) { return make(Op::Implies, std::move(a), std::move(b)); }
Formula Formula::next(Formula f) { return make(Op::Next, std::move(f), {}); }
Formula Formula::until(Formula a, Formula b) { return make(Op::Until, std::move(a), std::move(b)); }
Formula Formula::weak_until(Formula a, Formula b) { return make(Op::WeakUntil, std::move(a), std::move(b)); }
Formula Formula::release(Formula a, Formula b) { return make(Op::Release, std::move(a), std::move(b)); }
Formula Formula::eventually(Formula f) { return make(Op::Eventually, std::move(f), {}); }
Formula Formula::always(Formula f) { return make(Op::Always, std::move(f), {}); }

Formula Formula::conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return tt();
    Formula acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = conj(*it, acc);
    return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return ff();
    Formula acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = disj(*it, acc);
    return acc;
}

Op Formula::op() const {
    assert(node_);
    return node_->op;
}

const Atom& Formula::atom_ref() const {
    assert(node_ && node_->op == Op::Atom);
    return node_->atom;
}

const Formula& Formula::left() const {
    assert(node_);
    return node_->lhs;
}

const Formula& Formula::right() const {
    assert(node_);
    return node_->rhs;
}

std::size_t Formula::hash() const {
    assert(node_);
    return node_->hash;
}

bool Formula::is_prop() const {
    return is_atom() && std::holds_alternative<std::string>(node_->atom);
}

bool Formula::is_constraint() const {
    return is_atom() && std::holds_alternative<ConstraintAtom>(node_->atom);
}

const std::string& Formula::prop_name() const { return std::get<std::string>(atom_ref()); }

const ConstraintAtom& Formula::constraint() const { return std::get<ConstraintAtom>(atom_ref()); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->hash != b.node_->hash || a.node_->op != b.node_->op) return false;
    if (a.node_->op == Op::Atom) return a.node_->atom == b.node_->atom;
    if (a.node_->lhs.valid() != b.node_->lhs.valid()) return false;
    if (a.node_->lhs.valid() && !(a.node_->lhs == b.node_->lhs)) return false;
    if (a.node_->rhs.valid() != b.node_->rhs.valid()) return false;
    if (a.node_->rhs.valid() && !(a.node_->rhs == b.node_->rhs)) return false;
    return true;
}

namespace {

bool is_unary(Op op) {
    return op == Op::Not || op == Op::Next || op == Op::Eventually || op == Op::Always;
}

Formula nnf_pos(const Formula& f);
Formula nnf_neg(const Formula& f);

Formula nnf_pos(const Formula& f) {
    switch (f.op()) {
        case Op::False:
        case Op::True:
        case Op::Atom:
            return f;
        case Op::Not:
            return nnf_neg(f.left());
        case Op::And:
            return Formula::conj(nnf_pos(f.left()), nnf_pos(f.right()));
        case Op::Or:
            return Formula::disj(nnf_pos(f.left()), nnf_pos(f.right()));
        case Op::Implies:
            return Formula::disj(nnf_neg(f.left()), nnf_pos(f.right()));
        case Op::Next:
            return Formula::next(nnf_pos(f.left()));
        case Op::Until:
            return Formula::until(nnf_pos(f.left()), nnf_pos(f.right()));
        case Op::Release:
            return Formula::release(nnf_pos(f.left()), nnf_pos(f.right()));
        case Op::WeakUntil:
            // p W q = q R (p | q)
            return Formula::release(nnf_pos(f.right()),
                                    Formula::disj(nnf_pos(f.left()), nnf_pos(f.right())));
        case Op::Eventually:
            return Formula::until(Formula::tt(), nnf_pos(f.left()));
        case Op::Always:
            return Formula::release(Formula::ff(), nnf_pos(f.left()));
    }
    throw std::logic_error("nnf: unhandled op");
}

Formula nnf_neg(const Formula& f) {
    switch (f.op()) {
        case Op::False:
            return Formula::tt();
        case Op::True:
            return Formula::ff();
        case Op::Atom:
            return Formula::negate(f);
        case Op::Not:
            return nnf_pos(f.left());
        case Op::And:
            return Formula::disj(nnf_neg(f.left()), nnf_neg(f.right()));
        case Op::Or:
            return Formula::conj(nnf_neg(f.left()), nnf_neg(f.right()));
        case Op::Implies:
            return Formula::conj(nnf_pos(f.left()), nnf_neg(f.right()));
        case Op::Next:
            return Formula::next(nnf_neg(f.left()));
        case Op::Until:
            return Formula::release(nnf_neg(f.left()), nnf_neg(f.right()));
        case Op::Release:
            return Formula::until(nnf_neg(f.left()), nnf_neg(f.right()));
        case Op::WeakUntil:
            // !(p W q) = !(q R (p | q)) = !q U (!p & !q)
            return Formula::until(nnf_neg(f.right()),
                                  Formula::conj(nnf_neg(f.left()), nnf_neg(f.right())));
        case Op::Eventually:
            return Formula::release(Formula::ff(), nnf_neg(f.left()));
        case Op::Always:
            return Formula::until(Formula::tt(), nnf_neg(f.left()));
    }
    throw std::logic_error("nnf: unhandled op");
}

void walk(const Formula& f, const std::function<void(const Formula&)>& fn) {
    fn(f);
    if (f.op() == Op::Atom || f.op() == Op::True || f.op() == Op::False) return;
    walk(f.left(), fn);
    if (!is_unary(f.op())) walk(f.right(), fn);
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf_pos(f); }

bool is_pure_boolean(const Formula& f) {
    bool pure = true;
    walk(f, [&](const Formula& g) {
        if (g.is_atom() && g.is_constraint()) pure = false;
    });
    return pure;
}

std::vector<std::string> collect_props(const Formula& f) {
    std::set<std::string> names;
    walk(f, [&](const Formula& g) {
        if (g.is_atom() && g.is_prop()) names.insert(g.prop_name());
    });
    return {names.begin(), names.end()};
}

std::vector<ConstraintAtom> collect_constraints(const Formula& f) {
    std::vector<ConstraintAtom> out;
    walk(f, [&](const Formula& g) {
        if (g.is_atom() && g.is_constraint()) out.push_back(g.constraint());
    });
    return out;
}

std::set<std::string> collect_variables(const Formula& f) {
    std::set<std::string> vars;
    walk(f, [&](const Formula& g) {
        if (g.is_atom() && g.is_constraint()) vars.insert(g.constraint().var);
    });
    return vars;
}

namespace {

void flatten(const Formula& f, Op op, std::vector<Formula>& out) {
    if (f.op() == op) {
        flatten(f.left(), op, out);
        flatten(f.right(), op, out);
    } else {
        out.push_back(normalize_assoc(f));
    }
}

}  // namespace

Formula normalize_assoc(const Formula& f) {
    switch (f.op()) {
        case Op::False:
        case Op::True:
        case Op::Atom:
            return f;
        case Op::And:
        case Op::Or: {
            std::vector<Formula> parts;
            flatten(f, f.op(), parts);
            return f.op() == Op::And ? Formula::conj_all(parts) : Formula::disj_all(parts);
        }
        case Op::Not:
            return Formula::negate(normalize_assoc(f.left()));
        case Op::Next:
            return Formula::next(normalize_assoc(f.left()));
        case Op::Eventually:
            return Formula::eventually(normalize_assoc(f.left()));
        case Op::Always:
            return Formula::always(normalize_assoc(f.left()));
        case Op::Implies:
            return Formula::implies(normalize_assoc(f.left()), normalize_assoc(f.right()));
        case Op::Until:
            return Formula::until(normalize_assoc(f.left()), normalize_assoc(f.right()));
        case Op::WeakUntil:
            return Formula::weak_until(normalize_assoc(f.left()), normalize_assoc(f.right()));
        case Op::Release:
            return Formula::release(normalize_assoc(f.left()), normalize_assoc(f.right()));
    }
    throw std::logic_error("normalize_assoc: unhandled op");
}

Formula substitute_props(const Formula& f, const std::map<std::string, Formula>& subst) {
    switch (f.op()) {
        case Op::False:
        case Op::True:
            return f;
        case Op::Atom: {
            if (f.is_prop()) {
                auto it = subst.find(f.prop_name());
                if (it != subst.end()) return it->second;
            }
            return f;
        }
        case Op::Not:
            return Formula::negate(substitute_props(f.left(), subst));
        case Op::Next:
            return Formula::next(substitute_props(f.left(), subst));
        case Op::Eventually:
            return Formula::eventually(substitute_props(f.left(), subst));
        case Op::Always:
            return Formula::always(substitute_props(f.left(), subst));
        case Op::And:
            return Formula::conj(substitute_props(f.left(), subst), substitute_props(f.right(), subst));
        case Op::Or:
            return Formula::disj(substitute_props(f.left(), subst), substitute_props(f.right(), subst));
        case Op::Implies:
            return Formula::implies(substitute_props(f.left(), subst), substitute_props(f.right(), subst));
        case Op::Until:
            return Formula::until(substitute_props(f.left(), subst), substitute_props(f.right(), subst));
        case Op::WeakUntil:
            return Formula::weak_until(substitute_props(f.left(), subst), substitute_props(f.right(), subst));
        case Op::Release:
            return Formula::release(substitute_props(f.left(), subst), substitute_props(f.right(), subst));
    }
    throw std::logic_error("substitute_props: unhandled op");
}

namespace {

// Complement of a literal, if f is one (atom or negated atom).
bool literal_complement(const Formula& a, const Formula& b) {
    if (a.op() == Op::Not && a.left().is_atom() && b.is_atom()) return a.left() == b;
    if (b.op() == Op::Not && b.left().is_atom() && a.is_atom()) return b.left() == a;
    return false;
}

Formula simplify_nary(Op op, const Formula& f) {
    const bool is_and = op == Op::And;
    const Formula absorbing = is_and ? Formula::ff() : Formula::tt();
    const Formula neutral = is_and ? Formula::tt() : Formula::ff();

    std::vector<Formula> flat;
    std::function<void(const Formula&)> gather = [&](const Formula& g) {
        Formula s = simplify(g);
        if (s.op() == op) {
            gather(s.left());
            gather(s.right());
            return;
        }
        flat.push_back(std::move(s));
    };
    gather(f.left());
    gather(f.right());

    std::vector<Formula> kept;
    std::unordered_set<std::size_t> seen_hashes;
    for (const auto& g : flat) {
        if (g == absorbing) return absorbing;
        if (g == neutral) continue;
        bool dup = false;
        if (seen_hashes.count(g.hash())) {
            for (const auto& k : kept)
                if (k == g) { dup = true; break; }
        }
        if (dup) continue;
        for (const auto& k : kept)
            if (literal_complement(k, g)) return absorbing;
        seen_hashes.insert(g.hash());
        kept.push_back(g);
    }
    if (kept.empty()) return neutral;
    return is_and ? Formula::conj_all(kept) : Formula::disj_all(kept);
}

}  // namespace

Formula simplify(const Formula& f) {
    switch (f.op()) {
        case Op::False:
        case Op::True:
        case Op::Atom:
            return f;
        case Op::Not: {
            Formula c = simplify(f.left());
            if (c.op() == Op::True) return Formula::ff();
            if (c.op() == Op::False) return Formula::tt();
            if (c.op() == Op::Not) return c.left();
            return Formula::negate(c);
        }
        case Op::And:
        case Op::Or:
            return simplify_nary(f.op(), f);
        case Op::Implies: {
            Formula a = simplify(f.left());
            Formula b = simplify(f.right());
            if (a.op() == Op::False || b.op() == Op::True) return Formula::tt();
            if (a.op() == Op::True) return b;
            if (b.op() == Op::False) return simplify(Formula::negate(a));
            return Formula::implies(a, b);
        }
        case Op::Next: {
            Formula c = simplify(f.left());
            if (c.op() == Op::True || c.op() == Op::False) return c;
            return Formula::next(c);
        }
        case Op::Until: {
            Formula a = simplify(f.left());
            Formula b = simplify(f.right());
            if (b.op() == Op::True || b.op() == Op::False) return b;
            if (a.op() == Op::False) return b;
            return Formula::until(a, b);
        }
        case Op::Release: {
            Formula a = simplify(f.left());
            Formula b = simplify(f.right());
            if (b.op() == Op::True || b.op() == Op::False) return b;
            if (a.op() == Op::True) return b;
            return Formula::release(a, b);
        }
        case Op::WeakUntil: {
            Formula a = simplify(f.left());
            Formula b = simplify(f.right());
            if (b.op() == Op::True) return Formula::tt();
            if (a.op() == Op::True) return Formula::tt();
            if (b.op() == Op::False) return simplify(Formula::always(a));
            if (a.op() == Op::False) return b;
            return Formula::weak_until(a, b);
        }
        case Op::Eventually: {
            Formula c = simplify(f.left());
            if (c.op() == Op::True || c.op() == Op::False) return c;
            return Formula::eventually(c);
        }
        case Op::Always: {
            Formula c = simplify(f.left());
            if (c.op() == Op::True || c.op() == Op::False) return c;
            return Formula::always(c);
        }
    }
    throw std::logic_error("simplify: unhandled op");
}

std::size_t formula_size(const Formula& f) {
    std::size_t n = 0;
    walk(f, [&](const Formula&) { ++n; });
    return n;
}

}  // namespace pspc
