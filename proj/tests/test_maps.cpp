#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "bimodal/kneading.hpp"
#include "bimodal/maps.hpp"

using namespace bimodal;

namespace {

const double kAlphaPeriod3 = (std::sqrt(5.0) - 1.0) / 4.0;

// sample points strictly inside a lap, away from the discontinuities
std::vector<double> lap_samples(const MapFamily& m, int per_lap) {
    std::vector<double> xs;
    const double margin = 1e-4;
    auto push_range = [&](double lo, double hi) {
        for (int i = 1; i <= per_lap; ++i)
            xs.push_back(lo + (hi - lo) * i / (per_lap + 1));
    };
    push_range(-m.a + margin, m.c1 - margin);
    push_range(m.c1 + margin, m.c2 - margin);
    push_range(m.c2 + margin, m.a - margin);
    return xs;
}

} // namespace

TEST_CASE("g_beta family", "[maps]") {
    CHECK(eval_g_beta(0.0, 3.1588) == 0.0);
    MapFamily m = make_g_beta(3.1588);
    CHECK(m.a == Catch::Approx(3.1588));
    CHECK(m.c2 == Catch::Approx(std::asin(1.0)));
    CHECK_THROWS_AS(make_g_beta(1.0), DomainError);
    CHECK_THROWS_AS(make_g_beta(5.0), DomainError);
    CHECK_THROWS_AS(m.eval(m.c2), AtDiscontinuity);

    SECTION("oddness, monotone branches, one-sided limits") {
        for (double beta : {1.8, 2.5, 3.1588, 4.0, 4.6}) {
            MapFamily f = make_g_beta(beta);
            auto xs = lap_samples(f, 1000);
            for (double x : xs) CHECK(f.eval(-x) == Catch::Approx(-f.eval(x)).margin(1e-9));
            // non-strict pointwise (tanh saturates to identical doubles deep in
            // the tails), strict across each lap
            for (std::size_t i = 1; i < xs.size(); ++i) {
                if ((xs[i - 1] < f.c1) == (xs[i] < f.c1) && (xs[i - 1] < f.c2) == (xs[i] < f.c2))
                    CHECK(f.eval(xs[i - 1]) >= f.eval(xs[i]));
            }
            CHECK(f.eval(-f.a + 1e-4) > f.eval(f.c1 - 1e-4));
            CHECK(f.eval(f.c1 + 1e-4) > f.eval(f.c2 - 1e-4));
            CHECK(f.eval(f.c2 + 1e-4) > f.eval(f.a - 1e-4));
            CHECK(f.eval(f.c2 + 1e-9) > f.a - 1e-3);  // c2+ -> +a
            CHECK(f.eval(f.c2 - 1e-9) < -f.a + 1e-3); // c2- -> -a
            CHECK(f.eval(f.c1 + 1e-9) > f.a - 1e-3);
            CHECK(f.eval(f.c1 - 1e-9) < -f.a + 1e-3);
            CHECK(f.eval(f.a) == Catch::Approx(f.b));
        }
    }
}

TEST_CASE("G_alpha family", "[maps]") {
    CHECK(u_step(0.7) == 1.0);
    CHECK(u_step(-0.7) == -1.0);
    CHECK(u_step(0.0) == 0.0);

    // the algebraic closure making the period-3 orbit: G(-alpha) = 1/2 = c2
    CHECK(eval_G_alpha(-kAlphaPeriod3, kAlphaPeriod3) == Catch::Approx(0.5).margin(1e-14));
    // b = -alpha at infinity
    CHECK(eval_G_alpha(1e9, 0.3) == Catch::Approx(-0.3).margin(1e-8));
    CHECK_THROWS_AS(eval_G_alpha(0.5, 0.3), AtDiscontinuity);

    MapFamily raw = make_G_alpha(0.3);
    CHECK(raw.unbounded);

    SECTION("conjugated form: oddness, decreasing branches, limits") {
        for (double alpha : {0.2, kAlphaPeriod3, 0.35, 0.45}) {
            MapFamily f = make_G_alpha_conjugated(alpha);
            auto xs = lap_samples(f, 1000);
            for (double x : xs) CHECK(f.eval(-x) == Catch::Approx(-f.eval(x)).margin(1e-9));
            for (std::size_t i = 1; i < xs.size(); ++i) {
                if ((xs[i - 1] < f.c1) == (xs[i] < f.c1) && (xs[i - 1] < f.c2) == (xs[i] < f.c2))
                    CHECK(f.eval(xs[i - 1]) > f.eval(xs[i]));
            }
            CHECK(f.eval(f.c2 + 1e-9) > f.a - 1e-3);
            CHECK(f.eval(f.c2 - 1e-9) < -f.a + 1e-3);
            CHECK(f.eval(f.a) == Catch::Approx(-std::atan(alpha)));
            CHECK(f.eval(-f.a) == Catch::Approx(std::atan(alpha)));
        }
    }
}

TEST_CASE("numeric itineraries", "[maps]") {
    MapFamily m = make_G_alpha_conjugated(kAlphaPeriod3);

    SECTION("the period-3 orbit of +a reads RMB") {
        Word w = numeric_itinerary(m, m.a, 9, 1e-9);
        CHECK(to_string(w) == "RMBRMBRMB");
    }

    SECTION("the fixed point at the origin reads M forever") {
        Word w = numeric_itinerary(m, 0.0, 6, 1e-9);
        CHECK(to_string(w) == "MMMMMM");
    }

    SECTION("tau symmetry: It(x) = tau(It(-x))") {
        std::mt19937 rng(41);
        std::uniform_real_distribution<double> dist(-m.a + 1e-6, m.a - 1e-6);
        for (int i = 0; i < 200; ++i) {
            double x = dist(rng);
            Word a = numeric_itinerary(m, x, 20, 1e-9);
            Word b = numeric_itinerary(m, -x, 20, 1e-9);
            CHECK(a == tau(b));
        }
    }

    SECTION("itineraries respect the point order") {
        std::mt19937 rng(43);
        std::uniform_real_distribution<double> dist(-m.a + 1e-6, m.a - 1e-6);
        for (int i = 0; i < 200; ++i) {
            double x = dist(rng), y = dist(rng);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            Word wx = numeric_itinerary(m, x, 30, 1e-9);
            Word wy = numeric_itinerary(m, y, 30, 1e-9);
            CHECK(compare_words(wx, wy) != Ordering::GT);
        }
    }

    CHECK_THROWS_AS(numeric_itinerary(m, 2.0, 5, 1e-9), OrbitEscapedDomain);
    CHECK_THROWS_AS(numeric_itinerary(make_G_alpha(0.3), 0.1, 5, 1e-9), DomainError);
}

TEST_CASE("kneading detection", "[maps]") {
    SECTION("critical G_alpha closes through the discontinuity") {
        MapFamily m = make_G_alpha_conjugated(kAlphaPeriod3);
        DetectResult r = detect_kneading(m, 200, 1e-9);
        REQUIRE(r.periodic);
        CHECK(r.period == 3);
        CHECK(to_string(r.word) == "RMB");
    }

    SECTION("g_beta near the period-3 window detects RMR") {
        MapFamily m = make_g_beta(3.1588);
        DetectResult r = detect_kneading(m, 200, 1e-9);
        REQUIRE(r.periodic);
        CHECK(r.period == 3);
        CHECK(to_string(r.word) == "RMR");
    }

    SECTION("aperiodic prefix fallback when no cycle closes in time") {
        // the orbit of +a drifts into the middle lap and never returns
        MapFamily m = make_G_alpha_conjugated(0.2);
        DetectResult r = detect_kneading(m, 8, 1e-9);
        CHECK_FALSE(r.periodic);
        CHECK(r.word.size() == 8);
        CHECK(to_string(r.word) == "RMMMMLMM");
    }

    SECTION("detected words are admissible across a parameter grid") {
        for (double beta = 3.05; beta < 3.30; beta += 0.05) {
            DetectResult r = detect_kneading(make_g_beta(beta), 300, 1e-9);
            if (r.periodic) CHECK(is_admissible(PeriodicSequence(r.word)));
        }
        for (double alpha = 0.25; alpha < 0.45; alpha += 0.04) {
            DetectResult r = detect_kneading(make_G_alpha_conjugated(alpha), 300, 1e-9);
            if (r.periodic) CHECK(is_admissible(PeriodicSequence(r.word)));
        }
    }
}

TEST_CASE("lap counting", "[maps]") {
    SECTION("every family starts with three laps") {
        CHECK(lap_count(make_g_beta(3.3), 1, 1e-9) == 3);
        CHECK(lap_count(make_G_alpha_conjugated(0.3), 1, 1e-9) == 3);
    }

    SECTION("critical G_alpha matches the kneading lap series") {
        MapFamily m = make_G_alpha_conjugated(kAlphaPeriod3);
        std::vector<int> got;
        for (int n = 1; n <= 6; ++n) got.push_back(lap_count(m, n, 1e-9));
        CHECK(got == std::vector<int>{3, 7, 17, 39, 87, 193});
    }

    SECTION("g_beta at 3.1588 matches as well") {
        MapFamily m = make_g_beta(3.1588);
        std::vector<int> got;
        for (int n = 1; n <= 6; ++n) got.push_back(lap_count(m, n, 1e-9));
        CHECK(got == std::vector<int>{3, 7, 17, 39, 87, 193});
    }

    SECTION("at most trebling growth at generic parameters") {
        for (double beta : {3.3, 4.0}) {
            MapFamily m = make_g_beta(beta);
            int prev = lap_count(m, 1, 1e-9);
            for (int n = 2; n <= 5; ++n) {
                int cur = lap_count(m, n, 1e-9);
                CHECK(cur >= prev);
                CHECK(cur <= 3 * prev);
                prev = cur;
            }
        }
    }

    CHECK_THROWS_AS(lap_count(make_G_alpha(0.3), 2, 1e-9), DomainError);
}

TEST_CASE("numeric lap counts agree with the symbolic lap series", "[maps]") {
    // detected kneading word -> D(t) -> Lambda coefficients, against the
    // breakpoint-propagation count, for both realizations of the period-3 data
    for (int which = 0; which < 2; ++which) {
        MapFamily m = which == 0 ? make_G_alpha_conjugated(kAlphaPeriod3) : make_g_beta(3.1588);
        DetectResult det = detect_kneading(m, 200, 1e-9);
        REQUIRE(det.periodic);
        PeriodicSequence s{det.word};
        auto lam = lap_series(kneading_determinant(s), 6);
        for (int n = 1; n <= 6; ++n)
            CHECK(BigInt(lap_count(m, n, 1e-9)) == lam[static_cast<std::size_t>(n - 1)]);
    }
}
