#pragma once

// Kneading determinant (closed forms and the increment-based truncated-series
// route), lap-number series, and growth number.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bimodal/poly.hpp"
#include "bimodal/symbolic.hpp"

namespace bimodal {

// u_p(t) = sum_{k=1..p} (-1)^k Phi(S_k) t^k, with S_1 the first symbol of the
// itinerary of +a.
inline IntPolynomial u_poly(const PeriodicSequence& s) {
    const int p = s.period();
    std::vector<BigInt> c(static_cast<std::size_t>(p) + 1, BigInt(0));
    for (int k = 1; k <= p; ++k) {
        int v = phi(s.period_word[static_cast<std::size_t>(k - 1)]);
        c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
    }
    return IntPolynomial(std::move(c));
}

// Raw p-periodic closed form, no admissibility/bistability checks:
//   D(t) = (1 - (-1)^p t^p + 2 u_p(t)) / ((1+t) (1 - (-1)^p t^p))
inline RationalFunction periodic_kneading_formula(const PeriodicSequence& s) {
    const int p = s.period();
    const BigInt sign = (p % 2 == 0) ? BigInt(1) : BigInt(-1);
    IntPolynomial base = IntPolynomial::constant(1) - IntPolynomial::monomial(sign, p);
    IntPolynomial num = base + IntPolynomial::constant(2) * u_poly(s);
    IntPolynomial one_plus_t{1, 1};
    return RationalFunction(num, one_plus_t * base);
}

inline RationalFunction kneading_determinant(const PeriodicSequence& s) {
    if (!is_admissible(s)) throw NotAdmissible("sequence " + to_string(s) + " is not admissible");
    if (is_bistable(s))
        throw BistableInput("sequence " + to_string(s) +
                            " is bistable; use kneading_determinant_bistable");
    return periodic_kneading_formula(s);
}

// Bistable closed form for S = (Q tau(Q))^inf with |Q| = q:
//   D(t) = (1 + (-1)^q t^q + 2 u_q(t)) / ((1+t) (1 + (-1)^q t^q))
inline RationalFunction kneading_determinant_bistable(const PeriodicSequence& s) {
    if (!is_bistable(s)) throw NotBistable("sequence " + to_string(s) + " is not bistable");
    const int q = s.period() / 2;
    PeriodicSequence half(Word(s.period_word.begin(), s.period_word.begin() + q));
    const BigInt sign = (q % 2 == 0) ? BigInt(1) : BigInt(-1);
    IntPolynomial base = IntPolynomial::constant(1) + IntPolynomial::monomial(sign, q);
    IntPolynomial num = base + IntPolynomial::constant(2) * u_poly(half);
    IntPolynomial one_plus_t{1, 1};
    return RationalFunction(num, one_plus_t * base);
}

// ---------------------------------------------------------------------------
// Invariant coordinates and kneading increments (truncated-series oracle)
// ---------------------------------------------------------------------------

// theta decomposed on the collapsed symbols {L, M, R}: A contributes to the
// L component and B to the R component, matching Phi and the one-sided limit
// correspondences at the discontinuities.
struct SymbolSeries {
    TruncatedSeries l, m, r;

    explicit SymbolSeries(int order) : l(order), m(order), r(order) {}

    friend SymbolSeries operator-(const SymbolSeries& a, const SymbolSeries& b) {
        SymbolSeries res(std::min(a.l.order(), b.l.order()));
        res.l = a.l - b.l;
        res.m = a.m - b.m;
        res.r = a.r - b.r;
        return res;
    }
};

// theta_{x0}(t) = sum_k (-1)^k X_k t^k, truncated at t^order.
inline SymbolSeries invariant_coordinate(std::span<const Symbol> itinerary, int order) {
    if (static_cast<int>(itinerary.size()) <= order)
        throw InsufficientSymbols("need more than 'order' symbols");
    SymbolSeries res(order);
    for (int k = 0; k <= order; ++k) {
        BigRat v((k % 2 == 0) ? 1 : -1);
        switch (itinerary[static_cast<std::size_t>(k)]) {
            case Symbol::L:
            case Symbol::A: res.l.coeffs[static_cast<std::size_t>(k)] += v; break;
            case Symbol::M: res.m.coeffs[static_cast<std::size_t>(k)] += v; break;
            case Symbol::B:
            case Symbol::R: res.r.coeffs[static_cast<std::size_t>(k)] += v; break;
        }
    }
    return res;
}

struct KneadingPair {
    PeriodicSequence s;
    PeriodicSequence tau_s;

    explicit KneadingPair(const PeriodicSequence& seq) : s(seq), tau_s(tau(seq)) {
        if (!is_admissible(seq))
            throw NotAdmissible("sequence " + to_string(seq) + " is not admissible");
    }
};

// 2x3 kneading matrix N, entries truncated at a common order.
struct KneadingMatrixTrunc {
    std::vector<TruncatedSeries> entries; // row-major 2x3

    explicit KneadingMatrixTrunc(int order) : entries(6, TruncatedSeries(order)) {}

    TruncatedSeries& at(int i, int j) { return entries[static_cast<std::size_t>(i) * 3 + j]; }
    const TruncatedSeries& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * 3 + j];
    }
};

namespace detail {

// one-sided limit itinerary: leading symbol, then the orbit of +a or -a
inline Word one_sided_itinerary(Symbol first, const PeriodicSequence& tail, int length) {
    Word w;
    w.reserve(static_cast<std::size_t>(length));
    w.push_back(first);
    for (int k = 1; k < length; ++k) w.push_back(tail.at(static_cast<std::size_t>(k - 1)));
    return w;
}

} // namespace detail

// nu_i(t) = theta_{c_i^+} - theta_{c_i^-}. The one-sided limit itineraries
// are: c1^- = L followed by It(-a) = tau(S); c1^+ = M followed by S;
// c2^- = M followed by tau(S); c2^+ = R followed by S.
inline KneadingMatrixTrunc kneading_increments(const KneadingPair& pair, int order) {
    if (order < 0) throw DomainError("kneading_increments: order must be >= 0");
    const int len = order + 1;
    Word c1m = detail::one_sided_itinerary(Symbol::L, pair.tau_s, len);
    Word c1p = detail::one_sided_itinerary(Symbol::M, pair.s, len);
    Word c2m = detail::one_sided_itinerary(Symbol::M, pair.tau_s, len);
    Word c2p = detail::one_sided_itinerary(Symbol::R, pair.s, len);
    SymbolSeries nu1 = invariant_coordinate(c1p, order) - invariant_coordinate(c1m, order);
    SymbolSeries nu2 = invariant_coordinate(c2p, order) - invariant_coordinate(c2m, order);
    KneadingMatrixTrunc n(order);
    n.at(0, 0) = nu1.l;
    n.at(0, 1) = nu1.m;
    n.at(0, 2) = nu1.r;
    n.at(1, 0) = nu2.l;
    n.at(1, 1) = nu2.m;
    n.at(1, 2) = nu2.r;
    return n;
}

// D(t) = (-1)^{j+1} D_j / (1+t) where D_j is the 2x2 determinant after
// omitting column j (1-based). D_1 = -D_2 = D_3.
inline TruncatedSeries kneading_det_from_matrix(const KneadingMatrixTrunc& n, int j) {
    if (j < 1 || j > 3) throw DomainError("kneading_det_from_matrix: column must be 1..3");
    int cols[2], ci = 0;
    for (int c = 0; c < 3; ++c)
        if (c != j - 1) cols[ci++] = c;
    TruncatedSeries det = n.at(0, cols[0]) * n.at(1, cols[1]) - n.at(0, cols[1]) * n.at(1, cols[0]);
    if (j % 2 == 0) det = -det; // (-1)^{j+1}
    return det.divided_by_poly(IntPolynomial{1, 1});
}

// ---------------------------------------------------------------------------
// Lap series and growth number
// ---------------------------------------------------------------------------

// First n_terms coefficients of Lambda(t) = 1/(t (1-t^2) D(t)) - 1/t;
// coefficient k-1 is the lap number of the k-th iterate. All coefficients
// must come out as integers.
inline std::vector<BigInt> lap_series(const RationalFunction& d, int n_terms) {
    if (n_terms <= 0) throw DomainError("lap_series: n_terms must be positive");
    // Lambda = (den - (1-t^2) num) / (t (1-t^2) num)
    IntPolynomial one_minus_t2{1, 0, -1};
    IntPolynomial num_top = d.den - one_minus_t2 * d.num;
    if (num_top.coeff(0) != 0)
        throw NonIntegerLapCoefficient("1/t pole does not cancel; malformed kneading determinant");
    IntPolynomial shifted = num_top.is_zero() ? num_top : num_top.shifted_down(1);
    RationalFunction lam(shifted, one_minus_t2 * d.num);
    TruncatedSeries ser = series_of_rational(lam, n_terms - 1);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_terms));
    for (const auto& c : ser.coeffs) {
        if (c.get_den() != 1)
            throw NonIntegerLapCoefficient("non-integer lap coefficient " + c.get_str());
        out.push_back(c.get_num());
    }
    return out;
}

struct GrowthNumber {
    std::optional<double> t0; // least root of the reduced numerator in (0,1)
    double rho = 1.0;         // 1/t0, or 1 when there is no root
};

// t0 = least root of num(D) in (0,1) not cancelled by den(D); cancellation is
// removed by exact polynomial gcd before isolation.
inline GrowthNumber growth_number(const RationalFunction& d, double tol) {
    if (tol <= 0) throw DomainError("growth_number: tol must be positive");
    GrowthNumber g;
    RationalFunction red = d.reduced();
    if (red.num.is_zero() || red.num.degree() < 1) return g;
    auto root = least_root_in_unit_interval(red.num, tol);
    if (root) {
        g.t0 = *root;
        g.rho = 1.0 / *root;
    }
    return g;
}

} // namespace bimodal
