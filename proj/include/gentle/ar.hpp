#pragma once

#include <optional>
#include <vector>

#include "gentle/core.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Which letters still attach at an end of a string. A string starts (ends)
// on a peak when no direct (inverted) arrow can be glued there, and starts
// (ends) in a deep when no inverted (direct) arrow can. For trivial strings
// the sign convention decides which of 1_{v,+} and 1_{v,-} a letter meets.
struct EndInfo {
    bool on_peak = false;
    bool in_deep = false;
};

struct EndStatus {
    EndInfo start, end;
};

enum class WordEnd { Start, End };

namespace detail {

// Unique arrow whose letter {arrow, inverted} extends w at the front, if any.
inline std::optional<int> attach_at_start(const Presentation& p, const SignAssignment& s,
                                          const StringWord& w, bool inverted) {
    std::optional<int> found;
    for (int a = 0; a < p.n_arrows(); ++a) {
        Letter cand{a, inverted};
        bool ok;
        if (w.is_trivial())
            ok = p.letter_target(cand) == w.trivial_vertex() &&
                 s.epsilon_of(cand) == w.trivial_sign();
        else
            ok = p.letter_target(cand) == word_source(p, w) &&
                 detail::pair_ok(p, cand, w.letters().front());
        if (ok) {
            if (found) throw CheckError("end attachment not unique; algebra not gentle?");
            found = a;
        }
    }
    return found;
}

inline std::optional<int> attach_at_end(const Presentation& p, const SignAssignment& s,
                                        const StringWord& w, bool inverted) {
    std::optional<int> found;
    for (int a = 0; a < p.n_arrows(); ++a) {
        Letter cand{a, inverted};
        bool ok;
        if (w.is_trivial())
            ok = p.letter_source(cand) == w.trivial_vertex() &&
                 s.sigma_of(cand) == -w.trivial_sign();
        else
            ok = p.letter_source(cand) == word_target(p, w) &&
                 detail::pair_ok(p, w.letters().back(), cand);
        if (ok) {
            if (found) throw CheckError("end attachment not unique; algebra not gentle?");
            found = a;
        }
    }
    return found;
}

}  // namespace detail

inline EndStatus end_status(const Presentation& p, const SignAssignment& s, const StringWord& w) {
    EndStatus st;
    st.start.on_peak = !detail::attach_at_start(p, s, w, false).has_value();
    st.start.in_deep = !detail::attach_at_start(p, s, w, true).has_value();
    st.end.on_peak = !detail::attach_at_end(p, s, w, true).has_value();
    st.end.in_deep = !detail::attach_at_end(p, s, w, false).has_value();
    return st;
}

inline bool is_direct_string(const StringWord& w) {
    if (w.is_trivial()) return true;
    for (Letter l : w.letters())
        if (l.inverted) return false;
    return true;
}

inline bool is_inverse_string(const StringWord& w) {
    if (w.is_trivial()) return true;
    for (Letter l : w.letters())
        if (!l.inverted) return false;
    return true;
}

// For each arrow a, the companion N_a = V_a a U_a: the unique string with
// U_a, V_a inverse strings, starting in a deep and ending on a peak. Grown
// greedily; gentleness makes each growth step unique.
struct ArrowCompanions {
    int arrow = -1;
    StringWord U, V, N;
};

inline ArrowCompanions companions(const Presentation& p, const SignAssignment& s, int arrow) {
    if (!p.gentle()) throw PreconditionError("NotGentle: companions need a gentle algebra");
    std::vector<Letter> word{Letter{arrow, false}};
    int front = 0, back = 0;
    for (;;) {  // extend the front with inverted letters until in a deep
        auto a = detail::attach_at_start(p, s, StringWord::word(word), true);
        if (!a) break;
        word.insert(word.begin(), Letter{*a, true});
        ++front;
    }
    for (;;) {  // extend the back with inverted letters until on a peak
        auto a = detail::attach_at_end(p, s, StringWord::word(word), true);
        if (!a) break;
        word.push_back(Letter{*a, true});
        ++back;
    }
    ArrowCompanions c;
    c.arrow = arrow;
    c.N = StringWord::word(word);
    if (front > 0)
        c.V = StringWord::word({word.begin(), word.begin() + front});
    else  // trivial V must accept the arrow on its right: sigma(a) = -t
        c.V = StringWord::trivial(p.arrow(arrow).src, -s.sigma[static_cast<size_t>(arrow)]);
    if (back > 0)
        c.U = StringWord::word({word.end() - back, word.end()});
    else  // trivial U must accept the arrow on its left: eps(a) = t
        c.U = StringWord::trivial(p.arrow(arrow).tgt, s.epsilon[static_cast<size_t>(arrow)]);
    return c;
}

// _h w = V_a a w  (Start) and w_h = w b^{-1} V_b^{-1}  (End).
inline StringWord add_hook(const Presentation& p, const SignAssignment& s, const StringWord& w,
                           WordEnd end) {
    if (end == WordEnd::Start) {
        auto a = detail::attach_at_start(p, s, w, false);
        if (!a) throw PreconditionError("PreconditionViolated: string starts on a peak");
        ArrowCompanions c = companions(p, s, *a);
        std::vector<Letter> ls;
        if (!c.V.is_trivial()) ls.insert(ls.end(), c.V.letters().begin(), c.V.letters().end());
        ls.push_back(Letter{*a, false});
        ls.insert(ls.end(), w.letters().begin(), w.letters().end());
        return StringWord::word(std::move(ls));
    }
    auto b = detail::attach_at_end(p, s, w, true);
    if (!b) throw PreconditionError("PreconditionViolated: string ends on a peak");
    ArrowCompanions c = companions(p, s, *b);
    std::vector<Letter> ls(w.letters());
    ls.push_back(Letter{*b, true});
    if (!c.V.is_trivial())
        for (auto it = c.V.letters().rbegin(); it != c.V.letters().rend(); ++it)
            ls.push_back(it->flipped());
    return StringWord::word(std::move(ls));
}

// Deleting a cohook. Start case: w = U_a^{-1} a^{-1} (_c w); removing the
// maximal direct prefix and the first inverted letter. Returns nothing
// (the zero module) when w is a direct string. End case dual.
inline std::optional<StringWord> delete_cohook(const Presentation& p, const SignAssignment& s,
                                               const StringWord& w, WordEnd end) {
    EndStatus st = end_status(p, s, w);
    if (end == WordEnd::Start) {
        if (!st.start.on_peak)
            throw PreconditionError("PreconditionViolated: string does not start on a peak");
        if (is_direct_string(w)) return std::nullopt;
        const auto& ls = w.letters();
        size_t k = 0;
        while (!ls[k].inverted) ++k;
        int alpha = ls[k].arrow;
        {  // the removed prefix is exactly U_alpha^{-1}
            ArrowCompanions c = companions(p, s, alpha);
            StringWord prefix = k == 0 ? StringWord::trivial(p.arrow(alpha).tgt)
                                       : StringWord::word({ls.begin(), ls.begin() + static_cast<long>(k)});
            StringWord expect = canonical(c.U);
            if (canonical(prefix) != expect)
                throw CheckError("cohook prefix differs from companion U");
        }
        if (k + 1 < ls.size()) return StringWord::word({ls.begin() + static_cast<long>(k) + 1, ls.end()});
        return StringWord::trivial(p.arrow(alpha).src, s.sigma[static_cast<size_t>(alpha)]);
    }
    if (!st.end.on_peak)
        throw PreconditionError("PreconditionViolated: string does not end on a peak");
    if (is_inverse_string(w)) return std::nullopt;
    const auto& ls = w.letters();
    size_t m = ls.size() - 1;
    while (ls[m].inverted) --m;
    int beta = ls[m].arrow;
    {  // the removed suffix is exactly U_beta
        ArrowCompanions c = companions(p, s, beta);
        StringWord suffix = m + 1 == ls.size()
                                ? StringWord::trivial(p.arrow(beta).tgt)
                                : StringWord::word({ls.begin() + static_cast<long>(m) + 1, ls.end()});
        if (canonical(suffix) != canonical(c.U))
            throw CheckError("cohook suffix differs from companion U");
    }
    if (m > 0) return StringWord::word({ls.begin(), ls.begin() + static_cast<long>(m)});
    return StringWord::trivial(p.arrow(beta).src, -s.sigma[static_cast<size_t>(beta)]);
}

namespace detail {

enum class EndOp { Hook, Delete };

inline EndOp op_for(const EndInfo& info) { return info.on_peak ? EndOp::Delete : EndOp::Hook; }

}  // namespace detail

// tau^{-1} of a non-injective string: independently at each end, add a hook
// where possible, otherwise delete a cohook. Hooks are applied first; a
// deletion is then carried out on the extended word, which is where trivial
// strings pick up their hook before losing the other end.
inline std::optional<StringWord> tau_inverse(const Presentation& p, const SignAssignment& s,
                                             const StringWord& w) {
    if (!is_valid_string(p, w)) throw PreconditionError("tau_inverse needs a valid string");
    if (is_injective(p, w)) return std::nullopt;
    EndStatus st = end_status(p, s, w);
    detail::EndOp start_op = detail::op_for(st.start);
    detail::EndOp end_op = detail::op_for(st.end);

    if (start_op == detail::EndOp::Delete && end_op == detail::EndOp::Delete) {
        const auto& ls = w.letters();
        if (w.is_trivial() || is_direct_string(w) || is_inverse_string(w))
            throw CheckError("double cohook deletion on a degenerate string; expected injective");
        size_t k = 0;
        while (!ls[k].inverted) ++k;
        size_t m = ls.size() - 1;
        while (ls[m].inverted) --m;
        if (k > m) throw CheckError("cohook deletions overlap; expected injective");
        if (k + 1 < m)
            return StringWord::word({ls.begin() + static_cast<long>(k) + 1,
                                     ls.begin() + static_cast<long>(m)});
        // empty remainder: trivial at the junction vertex
        int alpha = ls[k].arrow;
        return StringWord::trivial(p.arrow(alpha).src, s.sigma[static_cast<size_t>(alpha)]);
    }

    StringWord cur = w;
    if (start_op == detail::EndOp::Hook) cur = add_hook(p, s, cur, WordEnd::Start);
    if (end_op == detail::EndOp::Hook) cur = add_hook(p, s, cur, WordEnd::End);
    if (start_op == detail::EndOp::Delete) {
        auto r = delete_cohook(p, s, cur, WordEnd::Start);
        if (!r) throw CheckError("unexpected zero in tau_inverse; expected injective");
        cur = *r;
    }
    if (end_op == detail::EndOp::Delete) {
        auto r = delete_cohook(p, s, cur, WordEnd::End);
        if (!r) throw CheckError("unexpected zero in tau_inverse; expected injective");
        cur = *r;
    }
    return cur;
}

// The AR-sequence starting in M(w): middle terms are the two single-end
// modifications (zero terms dropped), the right term is tau^{-1} w.
struct ArSequence {
    StringWord left;
    std::vector<StringWord> middle;
    StringWord right;
};

inline std::optional<ArSequence> ar_sequence(const Presentation& p, const SignAssignment& s,
                                             const StringWord& w) {
    auto tau = tau_inverse(p, s, w);
    if (!tau) return std::nullopt;
    EndStatus st = end_status(p, s, w);
    ArSequence seq;
    seq.left = w;
    seq.right = *tau;
    if (!st.start.on_peak)
        seq.middle.push_back(add_hook(p, s, w, WordEnd::Start));
    else if (auto r = delete_cohook(p, s, w, WordEnd::Start))
        seq.middle.push_back(*r);
    if (!st.end.on_peak)
        seq.middle.push_back(add_hook(p, s, w, WordEnd::End));
    else if (auto r = delete_cohook(p, s, w, WordEnd::End))
        seq.middle.push_back(*r);
    if (seq.middle.empty()) throw CheckError("AR sequence with empty middle; expected injective");
    return seq;
}

}  // namespace gentle
