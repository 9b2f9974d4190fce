#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "bimodal/matrix.hpp"
#include "bimodal/poly.hpp"

using namespace bimodal;

namespace {

// independent convolution, kept separate from IntPolynomial::operator*
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// independent series long division num/den through t^order
std::vector<BigRat> long_division(const IntPolynomial& num, const IntPolynomial& den, int order) {
    std::vector<BigRat> c(static_cast<std::size_t>(order) + 1, BigRat(0));
    for (int k = 0; k <= order; ++k) {
        BigRat acc{num.coeff(k)};
        for (int i = 1; i <= k; ++i) acc -= BigRat(den.coeff(i)) * c[static_cast<std::size_t>(k - i)];
        c[static_cast<std::size_t>(k)] = acc / BigRat(den.coeff(0));
    }
    return c;
}

// bisection-only root finder (no Sturm), assumes a sign change on [lo, hi]
double bisect_root(const IntPolynomial& p, double lo, double hi) {
    auto f = [&](double x) {
        double acc = 0;
        for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).get_d();
        return acc;
    };
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// plain rational Gaussian elimination, independent of the Bareiss path
int gauss_rank(const IntMatrix& m) {
    std::vector<std::vector<BigRat>> a(static_cast<std::size_t>(m.rows()),
                                       std::vector<BigRat>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = BigRat(m.at(i, j));
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
        for (int i = r + 1; i < m.rows(); ++i) {
            BigRat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] /
                       a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            for (int j = col; j < m.cols(); ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

IntPolynomial rand_poly(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-max_abs, max_abs);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("polynomial arithmetic", "[poly]") {
    IntPolynomial a = parse_polynomial("1 - 2*t");
    IntPolynomial b = parse_polynomial("1 + t");
    CHECK(a * b == parse_polynomial("1 - t - 2*t^2"));
    CHECK(a * IntPolynomial::zero() == IntPolynomial::zero());
    CHECK((parse_polynomial("1 + t^3") * parse_polynomial("1 - 2*t - t^3")) ==
          parse_polynomial("1 - 2*t - 2*t^4 - t^6"));

    SECTION("products agree with an independent convolution") {
        std::mt19937 rng(7);
        for (int i = 0; i < 200; ++i) {
            IntPolynomial p = rand_poly(rng, 8, 9), q = rand_poly(rng, 8, 9);
            CHECK((p * q) == IntPolynomial(convolve(p.coeffs(), q.coeffs())));
        }
    }

    SECTION("canonical form has no trailing zeros") {
        IntPolynomial p({BigInt(1), BigInt(0), BigInt(0)});
        CHECK(p.degree() == 0);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("polynomial text format round trip", "[poly]") {
    CHECK(to_string(parse_polynomial("1 - 2*t - t^3")) == "1 - 2*t - t^3");
    CHECK(to_string(parse_polynomial("  -3  +  2 * t^2 ")) == "-3 + 2*t^2");
    CHECK(to_string(IntPolynomial::zero()) == "0");
    CHECK(parse_polynomial("t") == IntPolynomial{0, 1});
    CHECK(parse_polynomial("t + t") == IntPolynomial{0, 2});
    CHECK_THROWS_AS(parse_polynomial("1 + x"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        IntPolynomial p = rand_poly(rng, 10, 50);
        CHECK(parse_polynomial(to_string(p)) == p);
    }
}

TEST_CASE("series expansion of rational functions", "[poly]") {
    RationalFunction geo(IntPolynomial{1}, IntPolynomial{1, -1});
    TruncatedSeries s = series_of_rational(geo, 3);
    CHECK(s.coeffs == std::vector<BigRat>{1, 1, 1, 1});

    // D(t) of the period-3 kneading example, through t^2
    RationalFunction d(parse_polynomial("1 - 2*t - t^3"),
                       parse_polynomial("1 + t") * parse_polynomial("1 + t^3"));
    TruncatedSeries ds = series_of_rational(d, 2);
    CHECK(ds.coeffs == std::vector<BigRat>{1, -3, 3});
    SECTION("matches independent long division") {
        auto ref = long_division(d.num, d.den, 8);
        auto got = series_of_rational(d, 8);
        CHECK(got.coeffs == ref);
    }

    SECTION("truncation consistency") {
        std::mt19937 rng(3);
        for (int i = 0; i < 100; ++i) {
            IntPolynomial num = rand_poly(rng, 6, 5);
            IntPolynomial den = rand_poly(rng, 6, 5);
            if (den.coeff(0) == 0) den = den + IntPolynomial{1};
            if (den.is_zero()) continue;
            RationalFunction r(num, den);
            auto longer = series_of_rational(r, 7);
            CHECK(series_of_rational(r, 6) == longer.truncated(6));
        }
    }

    SECTION("common powers of t cancel; a true pole at zero throws") {
        RationalFunction ok(IntPolynomial{0, 0, 1}, IntPolynomial{0, 1});
        CHECK(series_of_rational(ok, 2).coeffs == std::vector<BigRat>{0, 1, 0});
        CHECK_THROWS_AS(series_of_rational(RationalFunction(IntPolynomial{1}, IntPolynomial{0, 1}), 2),
                        DenominatorVanishesAtZero);
    }
}

TEST_CASE("least root in the unit interval", "[poly]") {
    IntPolynomial p = parse_polynomial("1 - 2*t - t^3");
    auto r = least_root_in_unit_interval(p, 1e-9);
    REQUIRE(r.has_value());
    CHECK(*r == Catch::Approx(0.453397651516404).margin(1e-8));

    CHECK_FALSE(least_root_in_unit_interval(parse_polynomial("1 + t^2"), 1e-9).has_value());

    SECTION("least root cross-checked by plain bisection") {
        IntPolynomial q = parse_polynomial("1 - 2*t - 2*t^2 + t^4");
        auto root = least_root_in_unit_interval(q, 1e-12);
        REQUIRE(root.has_value());
        CHECK(*root == Catch::Approx(bisect_root(q, 0.0, 0.5)).margin(1e-9));
        CHECK(1.0 / *root == Catch::Approx(2.69173950957862).margin(1e-9));
    }

    SECTION("sign change within tol around the reported root") {
        IntPolynomial q = parse_polynomial("1 - 2*t - t^3");
        double tol = 1e-9;
        double x = *least_root_in_unit_interval(q, tol);
        BigRat below = q.evaluate(BigRat(x - 2 * tol));
        BigRat above = q.evaluate(BigRat(x + 2 * tol));
        CHECK(detail::sign_of(below) * detail::sign_of(above) <= 0);
    }

    SECTION("returns the least root, not just any") {
        // roots at 1/4 and 1/2: (1-4t)(1-2t) = 1 - 6t + 8t^2
        auto x = least_root_in_unit_interval(parse_polynomial("1 - 6*t + 8*t^2"), 1e-12);
        REQUIRE(x.has_value());
        CHECK(*x == Catch::Approx(0.25).margin(1e-10));
    }

    SECTION("multiple roots are handled through the square-free part") {
        IntPolynomial sq = parse_polynomial("1 - 2*t") * parse_polynomial("1 - 2*t");
        auto x = least_root_in_unit_interval(sq, 1e-12);
        REQUIRE(x.has_value());
        CHECK(*x == Catch::Approx(0.5).margin(1e-10));
    }

    SECTION("roots at the interval ends are excluded") {
        CHECK_FALSE(least_root_in_unit_interval(parse_polynomial("t - t^2"), 1e-9).has_value());
    }
}

TEST_CASE("characteristic polynomial det(I - tM)", "[poly]") {
    SECTION("identity matrix gives (1-t)^n") {
        for (int n : {1, 2, 5, 8}) {
            IntPolynomial expected{1};
            for (int i = 0; i < n; ++i) expected = expected * IntPolynomial{1, -1};
            CHECK(char_poly_det_I_minus_tM(IntMatrix::identity(n)) == expected);
        }
    }

    SECTION("printed 5x5 transition matrix") {
        IntMatrix psi(5, 5,
                      {1, 1, 1, 0, 0,
                       0, 0, 0, 0, 1,
                       0, 1, 1, 1, 0,
                       1, 0, 0, 0, 0,
                       0, 0, 1, 1, 1});
        CHECK(char_poly_det_I_minus_tM(psi) ==
              parse_polynomial("1 - t + t^2") * parse_polynomial("1 - 2*t - t^3"));
    }

    SECTION("constant term is 1 for random matrices") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> e(-3, 3);
        for (int rep = 0; rep < 30; ++rep) {
            int n = 1 + rep % 6;
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = e(rng);
            CHECK(char_poly_det_I_minus_tM(m).coeff(0) == 1);
        }
    }

    SECTION("permutation matrices factor into cycle terms") {
        std::mt19937 rng(13);
        for (int rep = 0; rep < 20; ++rep) {
            int n = 2 + rep % 7;
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i) m.at(i, perm[static_cast<std::size_t>(i)]) = 1;
            // product of (1 - t^len) over the cycles of perm
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            IntPolynomial expected{1};
            for (int i = 0; i < n; ++i) {
                if (seen[static_cast<std::size_t>(i)]) continue;
                int len = 0, j = i;
                while (!seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = true;
                    j = perm[static_cast<std::size_t>(j)];
                    ++len;
                }
                expected = expected * (IntPolynomial{1} - IntPolynomial::monomial(1, len));
            }
            CHECK(char_poly_det_I_minus_tM(m) == expected);
        }
    }

    CHECK_THROWS_AS(char_poly_det_I_minus_tM(IntMatrix(2, 3)), NotSquare);
}

TEST_CASE("rational rank and column spaces", "[poly]") {
    CHECK(rational_rank(IntMatrix::identity(4)) == 4);

    SECTION("Bareiss agrees with plain Gaussian elimination") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> e(-4, 4);
        for (int rep = 0; rep < 60; ++rep) {
            int rows = 1 + rep % 6, cols = 1 + (rep / 2) % 7;
            IntMatrix m(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m.at(i, j) = e(rng);
            CHECK(rational_rank(m) == gauss_rank(m));
        }
    }

    SECTION("column space equality") {
        IntMatrix a(3, 2, {1, 0, 0, 1, 0, 0});
        IntMatrix b(3, 3, {1, 1, 2, 1, -1, 0, 0, 0, 0}); // same span
        CHECK(column_space_equal(a, b));
        IntMatrix c(3, 1, {0, 0, 1});
        CHECK_FALSE(column_space_equal(a, c));
        CHECK_THROWS_AS(column_space_equal(a, IntMatrix(2, 2)), DimensionMismatch);
    }
}

TEST_CASE("rational function equality and reduction", "[poly]") {
    RationalFunction a(parse_polynomial("1 - t"), parse_polynomial("1 + t"));
    RationalFunction b(parse_polynomial("1 - t") * parse_polynomial("2 + t"),
                       parse_polynomial("1 + t") * parse_polynomial("2 + t"));
    CHECK(a == b); // cross-multiplied equality ignores common factors
    RationalFunction red = b.reduced();
    CHECK(red.num == parse_polynomial("1 - t"));
    CHECK(red.den == parse_polynomial("1 + t"));

    // canonical form: combined content 1, first denominator term positive
    RationalFunction c(parse_polynomial("2 - 2*t"), parse_polynomial("-4 - 4*t"));
    CHECK(c.den.lowest() > 0);
    BigInt g = c.num.content();
    BigInt gd = c.den.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
    CHECK(g == 1);
}

TEST_CASE("polynomial gcd and exact division", "[poly]") {
    IntPolynomial p = parse_polynomial("1 - 2*t") * parse_polynomial("1 + t^2");
    IntPolynomial q = parse_polynomial("1 - 2*t") * parse_polynomial("3 + t");
    CHECK(poly_gcd(p, q) == parse_polynomial("-1 + 2*t")); // primitive, positive leading
    auto quot = poly_divide_exact(p, parse_polynomial("1 - 2*t"));
    REQUIRE(quot.has_value());
    CHECK(*quot == parse_polynomial("1 + t^2"));
    CHECK_FALSE(poly_divide_exact(p, parse_polynomial("1 + t")).has_value());
}
