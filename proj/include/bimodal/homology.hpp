#pragma once

// The endomorphism side of the pipeline: mu, omega, eta = mu pi, the sign
// vector s(S), Gamma, gamma = Gamma - I, Theta = gamma omega, the boundary
// operators, and the machine-checkable identities tying Theta, Psi and the
// kneading determinant together.

#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bimodal/markov.hpp"

namespace bimodal {

// mu_{ij} = delta_{i+1,j} - delta_{i,j} - delta_{2p+1-i,j} + delta_{2p-i,j},
// a (2p-1) x 2p matrix; row p is identically zero.
inline IntMatrix build_mu(int p) {
    if (p < 1) throw DomainError("build_mu: p must be >= 1");
    IntMatrix m(2 * p - 1, 2 * p);
    for (int i = 1; i <= 2 * p - 1; ++i) {
        for (int j = 1; j <= 2 * p; ++j) {
            int v = (j == i + 1) - (j == i) - (j == 2 * p + 1 - i) + (j == 2 * p - i);
            m.at(i - 1, j - 1) = v;
        }
    }
    return m;
}

// omega = blockdiag(sigma, sigma) with sigma the p x p cyclic shift
// (superdiagonal ones, bottom-left one); omega^p = I.
inline IntMatrix build_omega(int p) {
    if (p < 1) throw DomainError("build_omega: p must be >= 1");
    IntMatrix w(2 * p, 2 * p);
    for (int b : {0, p}) {
        for (int i = 0; i < p - 1; ++i) w.at(b + i, b + i + 1) = 1;
        w.at(b + p - 1, b) = 1;
    }
    return w;
}

inline IntMatrix build_eta(const IntMatrix& mu, const IntMatrix& pi) { return mu * pi; }

// s(S) = [Phi(S_0), Phi(S_1), ..., Phi(S_{p-1}), Phi(tau S_0), ...] where
// sigma^{p-1} S = S_0 S_1 S_2 ... = S_0 S (so S_0 = S_p = B in markov form).
inline std::vector<int> build_s_vector(const PeriodicSequence& s) {
    if (!is_markov_form(s))
        throw NotMarkovForm("s vector needs a markov-form sequence (starts R, ends B)");
    const int p = s.period();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(2 * p));
    for (int i = 0; i < p; ++i) {
        Symbol sym = (i == 0) ? s.period_word[static_cast<std::size_t>(p - 1)]
                              : s.period_word[static_cast<std::size_t>(i - 1)];
        out.push_back(phi(sym));
    }
    for (int i = 0; i < p; ++i) out.push_back(-out[static_cast<std::size_t>(i)]);
    return out;
}

struct HomologyData {
    int p = 0;
    IntMatrix mu;         // (2p-1) x 2p
    IntMatrix omega;      // 2p x 2p
    IntMatrix pi;         // 2p x 2p permutation
    IntMatrix eta;        // (2p-1) x 2p
    std::vector<int> s;   // length 2p
    IntMatrix Gamma;      // 2p x 2p; columns 1 and p+1 are s and sigma^p s
    IntMatrix gamma;      // Gamma - I
    IntMatrix Theta;      // gamma * omega
    IntMatrix boundary;   // 2p x (2p-1), in w-coordinates
    IntMatrix boundary_s; // 2p x (2p-1)
};

// boundary(I_k) = w_{k+1} - w_k (signed incidence in w-coordinates);
// boundary_s column k = boundary column k minus boundary column 2p-k.
inline std::pair<IntMatrix, IntMatrix> build_boundaries(const OrbitTable& t) {
    const int n = 2 * t.p;
    IntMatrix b(n, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        b.at(k, k) = -1;
        b.at(k + 1, k) = 1;
    }
    IntMatrix bs(n, n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        int paired = n - k; // column index of tau(I_k) = I_{2p-k}
        for (int i = 0; i < n; ++i)
            bs.at(i, k - 1) = b.at(i, k - 1) - b.at(i, paired - 1);
    }
    return {b, bs};
}

inline HomologyData build_theta(const PeriodicSequence& seq) {
    OrbitTable table = build_orbit_table(seq);
    HomologyData h;
    h.p = table.p;
    const int p = h.p;
    const int n = 2 * p;
    h.mu = build_mu(p);
    h.omega = build_omega(p);
    h.pi = table.pi;
    h.eta = build_eta(h.mu, h.pi);
    h.s = build_s_vector(seq);
    h.Gamma = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        h.Gamma.at(i, 0) = h.s[static_cast<std::size_t>(i)];
        h.Gamma.at(i, p) = h.s[static_cast<std::size_t>((i + p) % n)]; // sigma^p s
    }
    h.gamma = h.Gamma - IntMatrix::identity(n);
    h.Theta = h.gamma * h.omega;
    auto [b, bs] = build_boundaries(table);
    h.boundary = b;
    h.boundary_s = bs;
    return h;
}

// ---------------------------------------------------------------------------
// Identity verification (the machine-checkable content of the main theorem)
// ---------------------------------------------------------------------------

struct VerificationReport {
    std::string sequence;
    int p = 0;
    bool eta_gamma_zero = false;        // (a) eta Gamma = 0
    bool eta_omega_commutes = false;    // (b) eta omega = -Psi eta
    bool eta_gamma_minus = false;       // (c) eta gamma = -eta
    bool theta_charpoly_matches = false;// (d) det(I-tTheta) = (1-(-1)^p t^p)^2 (1+t) D(t)
    bool theta_psi_charpoly = false;    // (e) det(I-tTheta) = (1+t) det(I-tPsi)
    bool growth_matches = false;        // (f) spectral_radius(Psi) * t0 = 1 within tol
    bool growth_skipped = false;        //     set when D has no root in (0,1)
    bool psi_entries_01 = false;        // (g) every entry of Psi is 0 or 1

    IntPolynomial theta_charpoly;
    IntPolynomial psi_charpoly;
    RationalFunction kneading_det;
    double spectral_radius_value = 0.0;
    std::optional<double> t0;

    // construction data, serialized as a counterexample payload on failure
    IntMatrix pi, psi, eta, theta;

    bool all_passed() const {
        return eta_gamma_zero && eta_omega_commutes && eta_gamma_minus &&
               theta_charpoly_matches && theta_psi_charpoly && (growth_matches || growth_skipped) &&
               psi_entries_01;
    }
};

inline VerificationReport verify_identities(const PeriodicSequence& seq, double tol) {
    VerificationReport rep;
    rep.sequence = to_string(seq);
    OrbitTable table = build_orbit_table(seq);
    HomologyData h = build_theta(seq);
    TransitionMatrix tm = transition_matrix(table);
    rep.p = h.p;
    const int p = h.p;
    rep.pi = table.pi;
    rep.psi = tm.psi;
    rep.eta = h.eta;
    rep.theta = h.Theta;

    rep.eta_gamma_zero = (h.eta * h.Gamma).is_zero();
    rep.eta_omega_commutes = (h.eta * h.omega) == (-(tm.psi * h.eta));
    rep.eta_gamma_minus = (h.eta * h.gamma) == (-h.eta);

    rep.theta_charpoly = char_poly_det_I_minus_tM(h.Theta);
    rep.psi_charpoly = char_poly_det_I_minus_tM(tm.psi);
    rep.kneading_det = kneading_determinant(seq);

    // (d) as a cross-multiplied rational identity
    const BigInt sign = (p % 2 == 0) ? BigInt(1) : BigInt(-1);
    IntPolynomial base = IntPolynomial::constant(1) - IntPolynomial::monomial(sign, p);
    IntPolynomial factor = base * base * IntPolynomial{1, 1};
    rep.theta_charpoly_matches =
        RationalFunction::from_poly(rep.theta_charpoly) ==
        RationalFunction::from_poly(factor) * rep.kneading_det;

    rep.theta_psi_charpoly = rep.theta_charpoly == IntPolynomial{1, 1} * rep.psi_charpoly;

    bool entries_ok = true;
    for (int i = 0; i < tm.psi.rows() && entries_ok; ++i)
        for (int j = 0; j < tm.psi.cols(); ++j) {
            const BigInt& v = tm.psi.at(i, j);
            if (v != 0 && v != 1) {
                entries_ok = false;
                break;
            }
        }
    rep.psi_entries_01 = entries_ok;

    GrowthNumber g = growth_number(rep.kneading_det, tol);
    rep.t0 = g.t0;
    rep.spectral_radius_value = spectral_radius(tm, tol);
    if (!g.t0) {
        rep.growth_skipped = true;
    } else {
        double prod = rep.spectral_radius_value * *g.t0;
        rep.growth_matches = std::abs(prod - 1.0) <= 10 * tol;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive sweep over all admissible markov-form sequences with period <= p
// ---------------------------------------------------------------------------

struct SweepResult {
    int checked = 0;
    int failures = 0;
    int growth_skipped = 0;
    std::vector<VerificationReport> failed_reports;
};

inline SweepResult verify_all_upto(int p_max, double tol, int jobs = 1) {
    EnumerateOptions opts;
    opts.max_period = std::max(p_max, opts.max_period);
    std::vector<PeriodicSequence> all;
    for (int p = 2; p <= p_max; ++p) {
        auto seqs = enumerate_admissible(p, true, opts);
        all.insert(all.end(), seqs.begin(), seqs.end());
    }
    SweepResult res;
    res.checked = static_cast<int>(all.size());
    if (jobs < 1) jobs = 1;
    std::vector<std::vector<VerificationReport>> failed_per_job(static_cast<std::size_t>(jobs));
    std::vector<int> skipped_per_job(static_cast<std::size_t>(jobs), 0);
    std::atomic<int> next{0};
    auto worker = [&](int job) {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= static_cast<int>(all.size())) break;
            VerificationReport rep = verify_identities(all[static_cast<std::size_t>(i)], tol);
            if (rep.growth_skipped) ++skipped_per_job[static_cast<std::size_t>(job)];
            if (!rep.all_passed()) failed_per_job[static_cast<std::size_t>(job)].push_back(rep);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (auto& t : threads) t.join();
    }
    for (int j = 0; j < jobs; ++j) {
        res.growth_skipped += skipped_per_job[static_cast<std::size_t>(j)];
        for (auto& r : failed_per_job[static_cast<std::size_t>(j)])
            res.failed_reports.push_back(std::move(r));
    }
    // deterministic order regardless of job count
    std::sort(res.failed_reports.begin(), res.failed_reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.sequence < b.sequence;
              });
    res.failures = static_cast<int>(res.failed_reports.size());
    return res;
}

} // namespace bimodal
