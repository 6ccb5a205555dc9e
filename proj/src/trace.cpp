#include "pspc/trace.hpp"

#include <stdexcept>
#include <unordered_map>

namespace pspc {

namespace {

// Evaluates every subformula at every lasso position, bottom-up.  succ of
// the last position wraps to the loop start.  Until-like operators are
// least fixpoints (start false), Release-like are greatest (start true);
// backward sweeps repeat until stable, which needs at most |loop|+1 rounds.
class Evaluator {
public:
    explicit Evaluator(const LassoTrace& t) : trace_(t), n_(t.positions()) {}

    const std::vector<char>& eval(const Formula& f) {
        auto key = f.hash();
        auto range = memo_.equal_range(key);
        for (auto it = range.first; it != range.second; ++it)
            if (it->second.first == f) return it->second.second;

        std::vector<char> v(n_, 0);
        switch (f.op()) {
            case Op::False:
                break;
            case Op::True:
                v.assign(n_, 1);
                break;
            case Op::Atom: {
                if (f.is_constraint())
                    throw std::invalid_argument("constraint atoms not evaluable on Boolean traces");
                const std::string& p = f.prop_name();
                for (std::size_t i = 0; i < n_; ++i) v[i] = state(i).count(p) ? 1 : 0;
                break;
            }
            case Op::Not: {
                const auto& c = eval(f.left());
                for (std::size_t i = 0; i < n_; ++i) v[i] = !c[i];
                break;
            }
            case Op::And: {
                const auto& a = eval(f.left());
                const auto& b = eval(f.right());
                for (std::size_t i = 0; i < n_; ++i) v[i] = a[i] && b[i];
                break;
            }
            case Op::Or: {
                const auto& a = eval(f.left());
                const auto& b = eval(f.right());
                for (std::size_t i = 0; i < n_; ++i) v[i] = a[i] || b[i];
                break;
            }
            case Op::Implies: {
                const auto& a = eval(f.left());
                const auto& b = eval(f.right());
                for (std::size_t i = 0; i < n_; ++i) v[i] = !a[i] || b[i];
                break;
            }
            case Op::Next: {
                const auto& c = eval(f.left());
                for (std::size_t i = 0; i < n_; ++i) v[i] = c[succ(i)];
                break;
            }
            case Op::Until: {
                const auto& a = eval(f.left());
                const auto& b = eval(f.right());
                lfp(v, [&](std::size_t i, char nxt) { return b[i] || (a[i] && nxt); });
                break;
            }
            case Op::Release: {
                const auto& a = eval(f.left());
                const auto& b = eval(f.right());
                gfp(v, [&](std::size_t i, char nxt) { return b[i] && (a[i] || nxt); });
                break;
            }
            case Op::WeakUntil: {
                // p W q = q R (p | q)
                const auto& a = eval(f.left());
                const auto& b = eval(f.right());
                gfp(v, [&](std::size_t i, char nxt) { return (a[i] || b[i]) && (b[i] || nxt); });
                break;
            }
            case Op::Eventually: {
                const auto& c = eval(f.left());
                lfp(v, [&](std::size_t i, char nxt) { return c[i] || nxt; });
                break;
            }
            case Op::Always: {
                const auto& c = eval(f.left());
                gfp(v, [&](std::size_t i, char nxt) { return c[i] && nxt; });
                break;
            }
        }
        auto it = memo_.emplace(key, std::make_pair(f, std::move(v)));
        return it->second.second;
    }

private:
    const LassoTrace::State& state(std::size_t i) const {
        return i < trace_.prefix.size() ? trace_.prefix[i] : trace_.loop[i - trace_.prefix.size()];
    }

    std::size_t succ(std::size_t i) const { return i + 1 < n_ ? i + 1 : trace_.prefix.size(); }

    template <typename Step>
    void sweep_to_fixpoint(std::vector<char>& v, const Step& step) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = n_; k-- > 0;) {
                char nv = step(k, v[succ(k)]);
                if (nv != v[k]) {
                    v[k] = nv;
                    changed = true;
                }
            }
        }
    }

    template <typename Step>
    void lfp(std::vector<char>& v, const Step& step) {
        v.assign(n_, 0);
        sweep_to_fixpoint(v, step);
    }

    template <typename Step>
    void gfp(std::vector<char>& v, const Step& step) {
        v.assign(n_, 1);
        sweep_to_fixpoint(v, step);
    }

    const LassoTrace& trace_;
    std::size_t n_;
    std::unordered_multimap<std::size_t, std::pair<Formula, std::vector<char>>> memo_;
};

}  // namespace

bool eval_trace(const Formula& f, const LassoTrace& t) {
    if (t.loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
    Evaluator ev(t);
    return ev.eval(f)[0] != 0;
}

LassoTrace unroll_once(const LassoTrace& t) {
    // Move the first loop state into the prefix and rotate the loop; the
    // represented infinite word is unchanged.
    LassoTrace out;
    out.prefix = t.prefix;
    out.prefix.push_back(t.loop.front());
    out.loop.assign(t.loop.begin() + 1, t.loop.end());
    out.loop.push_back(t.loop.front());
    return out;
}

}  // namespace pspc
