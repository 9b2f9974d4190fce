#pragma once

// Numeric map families and their symbolic readouts: one-sided discontinuity
// conventions, itineraries, kneading-sequence detection, and lap counting.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bimodal/symbolic.hpp"

namespace bimodal {

// An odd map on (-a, a) with two symmetric discontinuities c1 = -c2, every
// branch decreasing, one-sided limits +-a at the discontinuities and +-b at
// the interval ends. Conventions: F(c1) = F(c1^-) = -a, F(c2) = F(c2^+) = +a.
struct MapFamily {
    std::string name;
    std::vector<double> params;
    double a = 0;  // half-width of the domain (finite for bounded families)
    double b = 0;  // limit of F at +a
    double c1 = 0, c2 = 0;
    std::function<double(double)> eval; // branch evaluator, defined off {c1, c2}
    bool unbounded = false;             // a = +infinity (raw G family)
};

inline double eval_g_beta(double x, double beta) {
    return -beta * std::tanh(beta * std::tan(x));
}

// step function used by the rational family: -1 / 0 / +1 with jumps at +-1/2
inline double u_step(double x) {
    if (x <= -0.5) return -1.0;
    if (x >= 0.5) return 1.0;
    return 0.0;
}

inline double eval_G_alpha(double x, double alpha) {
    if (x == 0.5 || x == -0.5) throw AtDiscontinuity("G_alpha evaluated at a discontinuity");
    double den = 4.0 * x * x - 1.0;
    return x / den - alpha * u_step(x);
}

// g_beta(x) = -beta tanh(beta tan x) restricted to (-beta, beta); the two
// discontinuities sit at +-pi/2 for beta in (pi/2, 3pi/2).
inline MapFamily make_g_beta(double beta) {
    const double half_pi = std::asin(1.0);
    if (!(beta > half_pi && beta < 3 * half_pi))
        throw DomainError("g_beta needs beta in (pi/2, 3pi/2) for two discontinuities");
    MapFamily m;
    m.name = "g_beta";
    m.params = {beta};
    m.a = beta;
    m.c2 = half_pi;
    m.c1 = -half_pi;
    m.eval = [beta, half_pi](double x) {
        if (x == half_pi || x == -half_pi)
            throw AtDiscontinuity("g_beta evaluated at a discontinuity");
        return eval_g_beta(x, beta);
    };
    m.b = eval_g_beta(beta, beta);
    return m;
}

inline MapFamily make_G_alpha(double alpha) {
    MapFamily m;
    m.name = "G_alpha";
    m.params = {alpha};
    m.a = std::numeric_limits<double>::infinity();
    m.unbounded = true;
    m.b = -alpha;
    m.c1 = -0.5;
    m.c2 = 0.5;
    m.eval = [alpha](double x) { return eval_G_alpha(x, alpha); };
    return m;
}

// arctan-conjugated version of G_alpha on (-pi/2, pi/2), prolonged to the
// endpoints by -+ arctan(alpha); this is the bounded form used for lap
// counting and itineraries.
inline MapFamily make_G_alpha_conjugated(double alpha) {
    const double half_pi = std::asin(1.0);
    MapFamily m;
    m.name = "G_alpha~";
    m.params = {alpha};
    m.a = half_pi;
    m.b = -std::atan(alpha);
    m.c2 = std::atan(0.5);
    m.c1 = -m.c2;
    m.eval = [alpha, half_pi, b = m.b](double x) {
        if (x >= half_pi) return b;
        if (x <= -half_pi) return -b;
        double y = std::tan(x);
        if (y == 0.5 || y == -0.5)
            throw AtDiscontinuity("conjugated G_alpha evaluated at a discontinuity");
        return std::atan(eval_G_alpha(y, alpha));
    };
    return m;
}

namespace detail {

// One orbit step with the discontinuity / endpoint conventions:
// points within snap of c2 continue at +a, within snap of c1 at -a, and the
// interval endpoints map to their prolongation values +-b.
inline double step_with_conventions(const MapFamily& m, double x, double snap) {
    if (std::abs(x - m.c2) <= snap) return m.a;
    if (std::abs(x - m.c1) <= snap) return -m.a;
    const double end_snap = 1e-12 * std::max(1.0, m.a);
    if (std::abs(x - m.a) <= end_snap) return m.b;
    if (std::abs(x + m.a) <= end_snap) return -m.b;
    return m.eval(x);
}

inline Symbol address_snapped(const MapFamily& m, double x, double snap) {
    if (std::abs(x - m.c2) <= snap) return Symbol::B;
    if (std::abs(x - m.c1) <= snap) return Symbol::A;
    if (x < m.c1) return Symbol::L;
    if (x < m.c2) return Symbol::M;
    return Symbol::R;
}

} // namespace detail

// Addresses of the first n orbit points. A point within eps*|c2| of a
// discontinuity is assigned A/B and the orbit continues by the one-sided
// convention; +-a themselves read as R/L.
inline Word numeric_itinerary(const MapFamily& m, double x0, int n, double eps) {
    if (m.unbounded) throw DomainError("numeric_itinerary needs a bounded family");
    if (n < 1) throw DomainError("numeric_itinerary: n must be >= 1");
    if (eps <= 0) throw DomainError("numeric_itinerary: eps must be positive");
    const double snap = eps * std::abs(m.c2);
    const double escape = 1e-7;
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    double x = x0;
    for (int k = 0; k < n; ++k) {
        if (std::abs(x) > m.a + escape)
            throw OrbitEscapedDomain("orbit left the interval at step " + std::to_string(k));
        w.push_back(detail::address_snapped(m, x, snap));
        x = detail::step_with_conventions(m, x, snap);
    }
    return w;
}

struct DetectResult {
    Word word;            // periodic word, or the aperiodic prefix
    bool periodic = false;
    int period = 0;
};

// Itinerary of +a with cycle detection on (symbol, quantized state) pairs.
// A detected cycle must also be symbolically consistent: the word repeated
// has to match the raw itinerary over the inspected horizon.
inline DetectResult detect_kneading(const MapFamily& m, int n_max, double eps) {
    if (m.unbounded) throw DomainError("detect_kneading needs a bounded family");
    const double snap = eps * std::abs(m.c2);
    const double quantum = 1e-10;
    auto key = [&](double x) { return static_cast<std::int64_t>(std::llround(x / quantum)); };

    Word symbols;
    const double x0 = m.a;
    double x = x0;
    for (int k = 0; k < n_max; ++k) {
        symbols.push_back(detail::address_snapped(m, x, snap));
        x = detail::step_with_conventions(m, x, snap);
        // cycle through the start state (the orbit of +a is periodic iff it
        // returns to +a, either exactly or through a B address)
        if (key(x) == key(x0) && symbols[0] == detail::address_snapped(m, x, snap)) {
            int p = static_cast<int>(symbols.size());
            // symbolic consistency over up to two more periods
            double y = x;
            bool consistent = true;
            for (int j = 0; j < 2 * p && p + j < n_max; ++j) {
                if (detail::address_snapped(m, y, snap) != symbols[static_cast<std::size_t>(j % p)]) {
                    consistent = false;
                    break;
                }
                y = detail::step_with_conventions(m, y, snap);
            }
            if (consistent) {
                DetectResult r;
                r.word = symbols;
                r.periodic = true;
                r.period = p;
                return r;
            }
        }
    }
    DetectResult r;
    r.word = std::move(symbols);
    return r;
}

// ---------------------------------------------------------------------------
// Lap counting by breakpoint propagation
// ---------------------------------------------------------------------------

struct LapCountStats {
    int virtual_breakpoints = 0; // crossings resolved at existing breakpoints
};

namespace detail {

struct Lap {
    // (position, one-sided limit value of F^{n-1}) for the left and right
    // ends; xl == xr for a degenerate (convention) lap
    double xl, vl;
    double xr, vr;
};

// Side of a limit value relative to a discontinuity, with orbit values that
// hit a discontinuity resolved by the address convention: hits of c2 count as
// the upper (R) side and hits of c1 as the lower (L) side, matching
// F(c2) = F(c2^+) and F(c1) = F(c1^-).
inline int resolved_side(const MapFamily& m, double v, double c, double snap) {
    if (std::abs(v - c) <= snap) return (c == m.c2) ? 1 : -1;
    return v > c ? 1 : -1;
}

} // namespace detail

// Number of maximal continuity intervals of F^n, by recursive breakpoint
// propagation: the breakpoints of F^n are those of F^{n-1} plus all solutions
// of F^{n-1}(x) in {c1, c2}, located by monotone bisection on each lap.
// One-sided limit values at breakpoints are propagated through the
// discontinuity conventions, so orbit values landing exactly on c1/c2 split
// laps on the convention side (these show up as zero-width laps at the
// critical parameters and are tallied in stats).
inline int lap_count(const MapFamily& m, int n, double eps, LapCountStats* stats = nullptr) {
    if (m.unbounded) throw DomainError("lap_count needs a bounded family (conjugate first)");
    if (n < 1) throw DomainError("lap_count: n must be >= 1");
    const double snap = eps * std::abs(m.c2);

    auto step_limit = [&](double v) { return detail::step_with_conventions(m, v, snap); };
    auto iterate = [&](double x, int k) {
        for (int i = 0; i < k; ++i) x = m.eval(x);
        return x;
    };

    std::vector<detail::Lap> laps = {
        {-m.a, -m.b, m.c1, -m.a},
        {m.c1, m.a, m.c2, -m.a},
        {m.c2, m.a, m.a, m.b},
    };
    if (stats) stats->virtual_breakpoints = 0;

    for (int level = 2; level <= n; ++level) {
        const int orient = ((level - 1) % 2 == 0) ? 1 : -1; // orientation of F^{level-1}
        std::vector<detail::Lap> next;
        next.reserve(laps.size() * 2);
        for (const detail::Lap& lap : laps) {
            struct Cut {
                double c;
                double xi;
            };
            std::vector<Cut> cuts;
            for (double c : {m.c1, m.c2}) {
                int sl = detail::resolved_side(m, lap.vl, c, snap);
                int sr = detail::resolved_side(m, lap.vr, c, snap);
                if (sl * sr >= 0) continue;
                double xi;
                if (std::abs(lap.vl - c) <= snap) {
                    xi = lap.xl;
                    if (stats) ++stats->virtual_breakpoints;
                } else if (std::abs(lap.vr - c) <= snap) {
                    xi = lap.xr;
                    if (stats) ++stats->virtual_breakpoints;
                } else if (lap.xl == lap.xr) {
                    xi = lap.xl;
                    if (stats) ++stats->virtual_breakpoints;
                } else {
                    // transverse interior crossing: bisect F^{level-1} = c
                    double w = lap.xr - lap.xl;
                    double lo = lap.xl + 1e-11 * w, hi = lap.xr - 1e-11 * w;
                    double glo = iterate(lo, level - 1), ghi = iterate(hi, level - 1);
                    if ((glo - c) * (ghi - c) > 0) {
                        // the crossing sits within the offset of a lap end
                        xi = (std::abs(glo - c) < std::abs(ghi - c)) ? lap.xl : lap.xr;
                        if (stats) ++stats->virtual_breakpoints;
                    } else {
                        double ga = glo;
                        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                            double mid = 0.5 * (lo + hi);
                            double gm = iterate(mid, level - 1);
                            if ((ga - c) * (gm - c) <= 0)
                                hi = mid;
                            else
                                lo = mid, ga = gm;
                        }
                        if (hi - lo > 1e-9)
                            throw BisectionFailure("no convergence on lap [" +
                                                   std::to_string(lap.xl) + ", " +
                                                   std::to_string(lap.xr) + "]");
                        xi = 0.5 * (lo + hi);
                    }
                }
                cuts.push_back({c, xi});
            }
            // order the cuts along the monotone sweep of F^{level-1}
            if (cuts.size() == 2) {
                bool ascending = orient > 0;
                if ((cuts[0].c > cuts[1].c) == ascending) std::swap(cuts[0], cuts[1]);
            }
            // split, assigning the +-a one-sided limits created at each cut
            double x_prev = lap.xl;
            double v_prev = step_limit(lap.vl);
            for (const Cut& cut : cuts) {
                double left_val = (orient > 0) ? -m.a : m.a;
                double right_val = (orient > 0) ? m.a : -m.a;
                next.push_back({x_prev, v_prev, cut.xi, left_val});
                x_prev = cut.xi;
                v_prev = right_val;
            }
            next.push_back({x_prev, v_prev, lap.xr, step_limit(lap.vr)});
        }
        laps = std::move(next);
    }
    return static_cast<int>(laps.size());
}

} // namespace bimodal
