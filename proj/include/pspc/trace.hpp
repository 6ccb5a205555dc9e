#pragma once

#include "pspc/formula.hpp"

#include <set>
#include <string>
#include <vector>

namespace pspc {

// Finite representation of an ultimately periodic computation: the infinite
// trace is prefix followed by loop repeated forever.  A state lists the
// propositions that are true; everything absent is false.
struct LassoTrace {
    using State = std::set<std::string>;

    std::vector<State> prefix;
    std::vector<State> loop;  // nonempty

    std::size_t positions() const { return prefix.size() + loop.size(); }

    friend bool operator==(const LassoTrace&, const LassoTrace&) = default;
};

// Ground-truth LTL semantics over a lasso.  Until/Release are evaluated by
// fixpoint over the finite lasso structure.  Throws std::invalid_argument
// when f contains constraint atoms.
bool eval_trace(const Formula& f, const LassoTrace& t);

// Moves one loop state into the prefix, rotating the loop.  The represented
// infinite word — and hence eval_trace — is invariant under this.
LassoTrace unroll_once(const LassoTrace& t);

}  // namespace pspc
