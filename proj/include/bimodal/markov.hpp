#pragma once

// Markov partition data built purely symbolically from a periodic kneading
// pair: the 2p itineraries, the sorting permutation, and the 0/1 transition
// matrix on the partition intervals.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "bimodal/kneading.hpp"
#include "bimodal/matrix.hpp"
#include "bimodal/symbolic.hpp"

namespace bimodal {

// Orbit itineraries of the two discontinuity points and their sorted order.
//
// v-indexing (1-based in the formulas, 0-based in storage):
//   v_j     = sigma^{(j-2) mod p}(S)       for j = 1..p   (v_1 = It(c2), v_2 = S = It(+a))
//   v_{p+j} = sigma^{(j-2) mod p}(tau S)   for j = 1..p   (v_{p+1} = It(c1), v_{p+2} = tau S)
// w = pi v is strictly increasing in the symbolic order; rank[j] is the sorted
// position of v_j.
struct OrbitTable {
    int p = 0;
    std::vector<PeriodicSequence> v; // size 2p
    IntMatrix pi;                    // 2p x 2p permutation, w_i = v_{perm[i]}
    std::vector<int> rank;           // v index -> sorted position (0-based)
    std::vector<int> sorted_to_v;    // sorted position -> v index (0-based)

    // orbit successor in v-index space: F(y_j) = y_{succ(j)}
    int succ(int j) const {
        if (j < p) return (j + 1) % p;
        return p + ((j - p + 1) % p);
    }

    int c2_index() const { return 0; }  // v_1 = It(c2)
    int c1_index() const { return p; }  // v_{p+1} = It(c1)
    int plus_a_index() const { return 1; }
    int minus_a_index() const { return p + 1; }
};

inline OrbitTable build_orbit_table(const PeriodicSequence& s) {
    if (!is_markov_form(s))
        throw NotMarkovForm("sequence " + to_string(s) +
                            " must start with R, end with B, interior in {L,M,R}");
    if (!is_admissible(s)) throw NotAdmissible("sequence " + to_string(s) + " is not admissible");
    if (is_bistable(s)) throw DuplicateItineraries("bistable sequence has coincident orbits");

    OrbitTable t;
    t.p = s.period();
    const int p = t.p;
    t.v.reserve(static_cast<std::size_t>(2 * p));
    for (int j = 1; j <= p; ++j) t.v.push_back(shift(s, ((j - 2) % p + p) % p));
    PeriodicSequence ts = tau(s);
    for (int j = 1; j <= p; ++j) t.v.push_back(shift(ts, ((j - 2) % p + p) % p));

    for (std::size_t i = 0; i < t.v.size(); ++i)
        for (std::size_t j = i + 1; j < t.v.size(); ++j)
            if (compare(t.v[i], t.v[j]) == Ordering::EQ)
                throw DuplicateItineraries("itineraries " + to_string(t.v[i]) + " coincide");

    t.sorted_to_v.resize(static_cast<std::size_t>(2 * p));
    std::iota(t.sorted_to_v.begin(), t.sorted_to_v.end(), 0);
    std::sort(t.sorted_to_v.begin(), t.sorted_to_v.end(), [&](int i, int j) {
        return compare(t.v[static_cast<std::size_t>(i)], t.v[static_cast<std::size_t>(j)]) ==
               Ordering::LT;
    });
    t.rank.assign(static_cast<std::size_t>(2 * p), 0);
    t.pi = IntMatrix(2 * p, 2 * p);
    for (int k = 0; k < 2 * p; ++k) {
        int j = t.sorted_to_v[static_cast<std::size_t>(k)];
        t.rank[static_cast<std::size_t>(j)] = k;
        t.pi.at(k, j) = 1;
    }
    return t;
}

struct TransitionMatrix {
    IntMatrix psi; // (2p-1) x (2p-1), entries in {0,1}
};

// psi_{ij} = 1 iff I_j is contained in F(I_i), computed with rank arithmetic
// only. Every branch is decreasing, so F(I_k) runs from the image of the
// right endpoint to the image of the left endpoint; at the discontinuities
// the one-sided images are -a (from below) and +a (from above).
inline TransitionMatrix transition_matrix(const OrbitTable& t) {
    const int p = t.p;
    const int n = 2 * p;
    const int rank_plus_a = t.rank[static_cast<std::size_t>(t.plus_a_index())];
    const int rank_minus_a = t.rank[static_cast<std::size_t>(t.minus_a_index())];
    // tau(S) is minimal and S maximal among the 2p itineraries
    if (rank_minus_a != 0 || rank_plus_a != n - 1)
        throw DomainError("orbit table endpoints are not extremal");

    auto is_discontinuity = [&](int j) { return j == t.c2_index() || j == t.c1_index(); };
    auto image_rank_above = [&](int j) {
        return is_discontinuity(j) ? n - 1 : t.rank[static_cast<std::size_t>(t.succ(j))];
    };
    auto image_rank_below = [&](int j) {
        return is_discontinuity(j) ? 0 : t.rank[static_cast<std::size_t>(t.succ(j))];
    };

    TransitionMatrix tm;
    tm.psi = IntMatrix(n - 1, n - 1);
    for (int k = 0; k < n - 1; ++k) { // interval I_{k+1} = (z_{k+1}, z_{k+2})
        int jl = t.sorted_to_v[static_cast<std::size_t>(k)];
        int jr = t.sorted_to_v[static_cast<std::size_t>(k + 1)];
        int hi = image_rank_above(jl);
        int lo = image_rank_below(jr);
        if (lo >= hi) throw DomainError("empty image interval in transition matrix");
        for (int j = lo; j < hi; ++j) tm.psi.at(k, j) = 1;
    }
    return tm;
}

// Largest lambda with det(I - t Psi) = 0 at t = 1/lambda, from the exact
// characteristic polynomial and Sturm isolation of its least positive root.
inline double spectral_radius(const TransitionMatrix& tm, double tol) {
    if (tol <= 0) throw DomainError("spectral_radius: tol must be positive");
    IntPolynomial q = char_poly_det_I_minus_tM(tm.psi);
    auto t_star = least_positive_root(q, tol);
    if (!t_star) return 0.0; // nilpotent; cannot happen for row-positive 0/1 matrices
    return 1.0 / *t_star;
}

} // namespace bimodal
