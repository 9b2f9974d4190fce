#pragma once

// The five-symbol alphabet, the signed-lexicographic itinerary order, the
// tau/shift/parity operators, admissibility, and enumeration of admissible
// periodic words.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bimodal/errors.hpp"

namespace bimodal {

// Alphabet, ordered L < A < M < B < R. A and B are the addresses of the two
// discontinuities, M the middle lap, L/R the outer laps.
enum class Symbol : std::uint8_t { L = 0, A = 1, M = 2, B = 3, R = 4 };

inline int order_index(Symbol s) { return static_cast<int>(s); }

inline char symbol_char(Symbol s) {
    static constexpr char tab[] = {'L', 'A', 'M', 'B', 'R'};
    return tab[static_cast<int>(s)];
}

// tau swaps L<->R and A<->B, fixing M; it encodes the odd symmetry.
inline Symbol tau(Symbol s) {
    static constexpr Symbol tab[] = {Symbol::R, Symbol::B, Symbol::M, Symbol::A, Symbol::L};
    return tab[static_cast<int>(s)];
}

// Phi collapses the alphabet to {-1,0,+1}: L,A -> -1; M -> 0; R,B -> +1.
inline int phi(Symbol s) {
    static constexpr int tab[] = {-1, -1, 0, 1, 1};
    return tab[static_cast<int>(s)];
}

using Word = std::vector<Symbol>;

inline Word tau(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (Symbol s : w) r.push_back(tau(s));
    return r;
}

// cyclic left rotation by one
inline Word shift_word(const Word& w) {
    if (w.empty()) return w;
    Word r(w.begin() + 1, w.end());
    r.push_back(w.front());
    return r;
}

// parity rho(S) = (-1)^length
inline int parity(const Word& w) { return (w.size() % 2 == 0) ? 1 : -1; }

// Periodic sequence S = P^inf. The stated period is the length of the period
// word; it is not auto-reduced to the primitive period.
struct PeriodicSequence {
    Word period_word;

    PeriodicSequence() = default;
    explicit PeriodicSequence(Word w) : period_word(std::move(w)) {
        if (period_word.empty()) throw DomainError("periodic sequence needs period >= 1");
    }

    int period() const { return static_cast<int>(period_word.size()); }
    Symbol at(std::size_t k) const { return period_word[k % period_word.size()]; }

    friend bool operator==(const PeriodicSequence& a, const PeriodicSequence& b) {
        return a.period_word == b.period_word;
    }
};

inline PeriodicSequence tau(const PeriodicSequence& s) { return PeriodicSequence(tau(s.period_word)); }

// cyclic left rotation by k (mod p)
inline PeriodicSequence shift(const PeriodicSequence& s, int k) {
    const int p = s.period();
    k = ((k % p) + p) % p;
    Word r;
    r.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) r.push_back(s.period_word[static_cast<std::size_t>((i + k) % p)]);
    return PeriodicSequence(std::move(r));
}

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// Signed-lexicographic comparison at the first disagreement: the symbol order
// is reversed when the common prefix has odd length (every branch of the map
// is decreasing). Sequences agreeing through 2*lcm(p,q) symbols are equal.
inline Ordering compare(const PeriodicSequence& a, const PeriodicSequence& b) {
    const std::size_t pa = a.period_word.size(), pb = b.period_word.size();
    const std::size_t horizon = 2 * std::lcm(pa, pb);
    for (std::size_t k = 0; k < horizon; ++k) {
        Symbol x = a.at(k), y = b.at(k);
        if (x == y) continue;
        bool lt = order_index(x) < order_index(y);
        if (k % 2 != 0) lt = !lt; // prefix of odd length: rho = -1
        return lt ? Ordering::LT : Ordering::GT;
    }
    return Ordering::EQ;
}

// Same rule on finite words, compared over the shared length; EQ when the
// overlap agrees.
inline Ordering compare_words(const Word& a, const Word& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] == b[k]) continue;
        bool lt = order_index(a[k]) < order_index(b[k]);
        if (k % 2 != 0) lt = !lt;
        return lt ? Ordering::LT : Ordering::GT;
    }
    return Ordering::EQ;
}

// Admissibility: tau(S) <= sigma^k(S) <= S for every k.
inline bool is_admissible(const PeriodicSequence& s) {
    const PeriodicSequence ts = tau(s);
    for (int k = 0; k < s.period(); ++k) {
        PeriodicSequence sk = shift(s, k);
        if (compare(ts, sk) == Ordering::GT) return false;
        if (compare(sk, s) == Ordering::GT) return false;
    }
    return true;
}

// Bistable itineraries have the form (Q tau(Q))^inf: even period, second half
// equal to tau of the first half.
inline bool is_bistable(const PeriodicSequence& s) {
    const int p = s.period();
    if (p % 2 != 0) return false;
    const int q = p / 2;
    for (int i = 0; i < q; ++i)
        if (s.period_word[static_cast<std::size_t>(q + i)] !=
            tau(s.period_word[static_cast<std::size_t>(i)]))
            return false;
    return true;
}

// True iff the word starts with R, ends with B, and interior symbols avoid
// the discontinuity addresses (the shape of a periodic orbit of the right
// discontinuity that closes through it).
inline bool is_markov_form(const PeriodicSequence& s, bool allow_interior_breaks = false) {
    const Word& w = s.period_word;
    const std::size_t p = w.size();
    if (p < 2) return false;
    if (w.front() != Symbol::R || w.back() != Symbol::B) return false;
    if (!allow_interior_breaks) {
        for (std::size_t i = 1; i + 1 < p; ++i)
            if (w[i] == Symbol::A || w[i] == Symbol::B) return false;
    }
    return true;
}

// the 2p shifted sequences of S and tau(S) are pairwise distinct
inline bool has_distinct_shifts(const PeriodicSequence& s) {
    const int p = s.period();
    std::vector<PeriodicSequence> all;
    all.reserve(static_cast<std::size_t>(2 * p));
    for (int k = 0; k < p; ++k) all.push_back(shift(s, k));
    PeriodicSequence ts = tau(s);
    for (int k = 0; k < p; ++k) all.push_back(shift(ts, k));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (compare(all[i], all[j]) == Ordering::EQ) return false;
    return true;
}

struct EnumerateOptions {
    int max_period = 10;
    bool allow_interior_breaks = false; // markov-form words with interior A/B
};

// All period-p words W (canonical lexicographic output order) with W^inf
// admissible. With require_markov_form the word must additionally start with
// R, end with B, have interior symbols in {L,M,R} (unless allowed otherwise),
// not be bistable, and have 2p pairwise distinct shifts.
inline std::vector<PeriodicSequence> enumerate_admissible(int p, bool require_markov_form,
                                                          const EnumerateOptions& opts = {}) {
    if (p < 1 || p > opts.max_period)
        throw PeriodTooLarge("period " + std::to_string(p) + " outside 1.." +
                             std::to_string(opts.max_period));
    std::vector<PeriodicSequence> out;
    if (require_markov_form && p < 2) return out;

    const std::vector<Symbol> full = {Symbol::L, Symbol::A, Symbol::M, Symbol::B, Symbol::R};
    const std::vector<Symbol> interior_plain = {Symbol::L, Symbol::M, Symbol::R};
    const std::vector<Symbol>& interior = require_markov_form && !opts.allow_interior_breaks
                                              ? interior_plain
                                              : full;

    Word w(static_cast<std::size_t>(p), Symbol::L);
    const int lo = require_markov_form ? 1 : 0;
    const int hi = require_markov_form ? p - 1 : p;
    if (require_markov_form) {
        w.front() = Symbol::R;
        w.back() = Symbol::B;
    }
    std::vector<std::size_t> odo(static_cast<std::size_t>(std::max(0, hi - lo)), 0);
    bool done = false;
    while (!done) {
        const std::vector<Symbol>& alpha = require_markov_form ? interior : full;
        for (int i = lo; i < hi; ++i) w[static_cast<std::size_t>(i)] = alpha[odo[static_cast<std::size_t>(i - lo)]];
        PeriodicSequence s(w);
        if (is_admissible(s)) {
            bool keep = true;
            if (require_markov_form) {
                keep = is_markov_form(s, opts.allow_interior_breaks) && !is_bistable(s) &&
                       has_distinct_shifts(s);
            }
            if (keep) out.push_back(s);
        }
        // odometer over the interior positions (lexicographic output order)
        done = true;
        const std::size_t base = alpha.size();
        for (std::size_t i = odo.size(); i-- > 0;) {
            if (++odo[i] < base) {
                done = false;
                break;
            }
            odo[i] = 0;
        }
        if (odo.empty()) done = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format: plain symbol strings like "RMB", optional "^inf" suffix
// ---------------------------------------------------------------------------

inline std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol x : w) s.push_back(symbol_char(x));
    return s;
}

inline std::string to_string(const PeriodicSequence& s) { return to_string(s.period_word); }

inline Word parse_word(const std::string& text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'L': w.push_back(Symbol::L); break;
            case 'A': w.push_back(Symbol::A); break;
            case 'M': w.push_back(Symbol::M); break;
            case 'B': w.push_back(Symbol::B); break;
            case 'R': w.push_back(Symbol::R); break;
            default: throw ParseError(std::string("invalid symbol '") + text[i] + "'", i);
        }
    }
    return w;
}

inline PeriodicSequence parse_sequence(const std::string& text) {
    std::string body = text;
    bool parens = !body.empty() && body.front() == '(';
    if (parens) {
        auto close = body.find(')');
        if (close == std::string::npos) throw ParseError("missing ')'", body.size());
        std::string tail = body.substr(close + 1);
        if (!tail.empty() && tail != "^inf") throw ParseError("unexpected suffix", close + 1);
        body = body.substr(1, close - 1);
    } else if (body.size() > 4 && body.compare(body.size() - 4, 4, "^inf") == 0) {
        body = body.substr(0, body.size() - 4);
    }
    Word w = parse_word(body);
    if (w.empty()) throw ParseError("empty sequence", 0);
    return PeriodicSequence(std::move(w));
}

} // namespace bimodal
