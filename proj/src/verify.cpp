#include "amplikit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "amplikit/closed_form.hpp"
#include "amplikit/operator_builder.hpp"
#include "amplikit/parallel.hpp"
#include "amplikit/phase_condition.hpp"
#include "amplikit/recurrence.hpp"
#include "amplikit/statevector.hpp"

namespace amplikit::verify {

namespace {

std::string describe(double worst, const char* what) {
    std::ostringstream os;
    os << "worst " << what << " = " << worst;
    return os.str();
}

// Atomic max for doubles, used when sweeps fan out.
void update_max(std::atomic<double>& target, double value) {
    double cur = target.load();
    while (value > cur && !target.compare_exchange_weak(cur, value)) {
    }
}

struct GridPoint {
    double theta, phi, p;
};

// theta, phi stepped by pi/50 across [0, 2pi); p in {0.05, ..., 0.95}.
std::vector<GridPoint> standard_grid() {
    std::vector<GridPoint> pts;
    pts.reserve(100 * 100 * 10);
    for (int it = 0; it < 100; ++it) {
        for (int jf = 0; jf < 100; ++jf) {
            for (int kp = 0; kp < 10; ++kp) {
                pts.push_back({it * kPi / 50.0, jf * kPi / 50.0,
                               0.05 + 0.1 * kp});
            }
        }
    }
    return pts;
}

CheckResult grid_check(const std::string& section, const std::string& name,
                       double tol,
                       const std::function<double(const GridPoint&)>& deviation) {
    const std::vector<GridPoint> grid = standard_grid();
    std::atomic<double> worst{0.0};
    parallel_for_index(grid.size(), [&](std::size_t i) {
        update_max(worst, deviation(grid[i]));
    });
    CheckResult r{section, name, worst.load() <= tol,
                  describe(worst.load(), "deviation")};
    return r;
}

PhaseConfig config_at(const GridPoint& g) {
    return make_config(g.theta, g.phi, Complex{g.p, 0.0});
}

// ---- appendix3 ------------------------------------------------------------

CheckResult check_determinant() {
    return grid_check("appendix3", "determinant_identity", 1e-12,
                      [](const GridPoint& g) {
                          const PhaseConfig cfg = config_at(g);
                          const IterationMatrix m = build_iteration_matrix(cfg);
                          const Complex expect =
                              std::polar(1.0, 2.0 * (g.theta + g.phi));
                          const double d1 = std::abs(m.determinant() - expect);
                          const double d2 =
                              std::abs(std::abs(m.determinant()) - 1.0);
                          return std::max(d1, d2);
                      });
}

CheckResult check_trace_identity() {
    return grid_check("appendix3", "trace_identity", 1e-12,
                      [](const GridPoint& g) {
                          const PhaseConfig cfg = config_at(g);
                          const IterationMatrix m = build_iteration_matrix(cfg);
                          return std::abs(trace_closed_form(cfg) - m.trace());
                      });
}

CheckResult check_trace_bound() {
    return grid_check("appendix3", "trace_bound", 1e-12,
                      [](const GridPoint& g) {
                          const PhaseConfig cfg = config_at(g);
                          const IterationMatrix m = build_iteration_matrix(cfg);
                          return std::max(0.0, std::abs(m.trace()) - 2.0);
                      });
}

CheckResult check_trace_bound_strict() {
    const std::vector<GridPoint> grid = standard_grid();
    std::atomic<long> violations{0};
    std::atomic<double> closest{0.0};
    parallel_for_index(grid.size(), [&](std::size_t i) {
        const GridPoint& g = grid[i];
        const PhaseConfig cfg = config_at(g);
        if (!trace_magnitude_bound_check(cfg)) violations.fetch_add(1);
        const double cc = std::cos(g.theta) * std::cos(g.phi);
        if (std::abs(cc) > 1e-12) {
            const double value = std::abs(std::cos(g.theta - g.phi) -
                                          2.0 * g.p * g.p * cc);
            if (!(value < 1.0)) violations.fetch_add(1);
            update_max(closest, value);
        }
    });
    std::ostringstream os;
    os << violations.load() << " violations, closest approach "
       << closest.load();
    return {"appendix3", "trace_bound_strictness", violations.load() == 0,
            os.str()};
}

CheckResult check_root_separation() {
    const std::vector<GridPoint> grid = standard_grid();
    std::atomic<double> smallest{2.0};
    std::atomic<long> violations{0};
    parallel_for_index(grid.size(), [&](std::size_t i) {
        const GridPoint& g = grid[i];
        if (std::abs(std::cos(g.phi)) <= 1e-9) return;
        const PhaseConfig cfg = config_at(g);
        const auto [z1, z2] = characteristic_roots(build_iteration_matrix(cfg));
        const double gap = std::abs(z1 - z2);
        if (!(gap > 1e-9)) violations.fetch_add(1);
        double cur = smallest.load();
        while (gap < cur && !smallest.compare_exchange_weak(cur, gap)) {
        }
    });
    std::ostringstream os;
    os << violations.load() << " violations, smallest |z1-z2| = "
       << smallest.load();
    return {"appendix3", "root_separation", violations.load() == 0, os.str()};
}

// ---- induction ------------------------------------------------------------

CheckResult check_induction() {
    long failures = 0;
    for (int k = 2; k <= kMaxPolynomialStep; ++k) {
        if (!coefficient_induction_check(k)) ++failures;
    }
    std::ostringstream os;
    os << failures << " failing steps in 2..40";
    return {"induction", "weights_and_coefficients", failures == 0, os.str()};
}

CheckResult check_leading_coefficient() {
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const Complex alpha = std::polar(1.0, angle(rng));
        const Complex delta = std::polar(1.0, angle(rng));
        for (int k = 1; k <= 20; ++k) {
            const PolyCoefficients pc = compute_poly_coefficients(alpha, delta, k);
            Complex geometric{0.0, 0.0};
            Complex ap{1.0, 0.0};
            std::vector<Complex> dp(static_cast<std::size_t>(k));
            Complex d{1.0, 0.0};
            for (int e = 0; e < k; ++e, d *= delta) dp[e] = d;
            for (int n = 0; n < k; ++n, ap *= alpha) geometric += ap * dp[k - 1 - n];
            worst = std::max(worst, std::abs(pc.c[0] - geometric));
        }
    }
    return {"induction", "leading_coefficient_geometric", worst <= 1e-10,
            describe(worst, "deviation")};
}

// ---- agreement ------------------------------------------------------------

std::vector<PhaseConfig> random_configs(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    std::vector<PhaseConfig> out;
    out.reserve(count);
    while (out.size() < count) {
        const double theta = angle(rng);
        const double phi = angle(rng);
        if (std::abs(std::cos(phi)) < 1e-6) continue;
        out.push_back(make_config(theta, phi,
                                  std::polar(radius(rng), angle(rng))));
    }
    return out;
}

struct AgreementWorst {
    double pair_vs_three = 0.0;
    double three_vs_closed = 0.0;
    double pair_vs_closed = 0.0;
    double poly_vs_three = 0.0;
    double norm_identity = 0.0;
};

AgreementWorst agreement_sweep(const std::vector<PhaseConfig>& configs,
                               int k_max) {
    std::vector<AgreementWorst> per(configs.size());
    parallel_for_index(configs.size(), [&](std::size_t idx) {
        const PhaseConfig& cfg = configs[idx];
        const IterationMatrix m = build_iteration_matrix(cfg);
        AgreementWorst w;
        Complex a{1.0, 0.0};
        Complex b{0.0, 0.0};
        for (int k = 1; k <= k_max; ++k) {
            const Complex na = m.alpha * a + m.lambda * b;
            const Complex nb = m.beta * a + m.delta * b;
            a = na;
            b = nb;
            const double b_pair = std::abs(b);
            const double b_three = std::abs(iterate_b(m, k));
            const double b_closed =
                amplitude_closed(cfg, static_cast<double>(k)).b_norm;
            w.pair_vs_three = std::max(w.pair_vs_three,
                                       std::abs(b_pair - b_three));
            w.three_vs_closed = std::max(w.three_vs_closed,
                                         std::abs(b_three - b_closed));
            w.pair_vs_closed = std::max(w.pair_vs_closed,
                                        std::abs(b_pair - b_closed));
            if (k <= kMaxPolynomialStep) {
                const double b_poly = std::abs(polynomial_b(m, k));
                w.poly_vs_three = std::max(w.poly_vs_three,
                                           std::abs(b_poly - b_three));
            }
            const double norm_id =
                std::norm(a) + std::norm(b) +
                2.0 * std::real(std::conj(a) * b * std::conj(cfg.u_tau_gamma));
            w.norm_identity = std::max(w.norm_identity, std::abs(norm_id - 1.0));
        }
        per[idx] = w;
    });
    AgreementWorst total;
    for (const AgreementWorst& w : per) {
        total.pair_vs_three = std::max(total.pair_vs_three, w.pair_vs_three);
        total.three_vs_closed = std::max(total.three_vs_closed, w.three_vs_closed);
        total.pair_vs_closed = std::max(total.pair_vs_closed, w.pair_vs_closed);
        total.poly_vs_three = std::max(total.poly_vs_three, w.poly_vs_three);
        total.norm_identity = std::max(total.norm_identity, w.norm_identity);
    }
    return total;
}

CheckResult check_three_way_agreement() {
    const AgreementWorst w = agreement_sweep(random_configs(1000, 42u), 200);
    const bool ok = w.pair_vs_three <= 1e-10 && w.three_vs_closed <= 1e-10 &&
                    w.pair_vs_closed <= 1e-10 && w.poly_vs_three <= 1e-10;
    std::ostringstream os;
    os << "pair/three " << w.pair_vs_three << ", three/closed "
       << w.three_vs_closed << ", poly/three " << w.poly_vs_three;
    return {"agreement", "three_way_amplitudes", ok, os.str()};
}

CheckResult check_norm_identity() {
    const AgreementWorst w = agreement_sweep(random_configs(64, 2024u), 400);
    return {"agreement", "physical_norm_identity", w.norm_identity <= 1e-10,
            describe(w.norm_identity, "deviation")};
}

// ---- condition ------------------------------------------------------------

std::vector<PhaseConfig> condition_grid() {
    std::vector<PhaseConfig> out;
    for (int it = 0; it < 80; ++it) {
        for (int jf = 0; jf < 80; ++jf) {
            const double phi = jf * kPi / 40.0;
            if (std::abs(std::cos(phi)) < 1e-9) continue;
            for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                out.push_back(make_config(it * kPi / 40.0, phi, Complex{p, 0.0}));
            }
        }
    }
    return out;
}

CheckResult check_biconditional() {
    const std::vector<PhaseConfig> grid = condition_grid();
    std::atomic<long> violations{0};
    parallel_for_index(grid.size(), [&](std::size_t i) {
        const PhaseVerdict v = check_condition(grid[i]);
        const double sup = v.beta_norm / v.sin_delta;  // max of |b| over real k
        const bool reachable = sup >= 1.0 - 1e-10;
        if (v.satisfied && !reachable) violations.fetch_add(1);
        if (!v.satisfied && sup > 1.0 + 1e-10) violations.fetch_add(1);
    });
    std::ostringstream os;
    os << violations.load() << " violations over " << grid.size() << " configs";
    return {"condition", "biconditional", violations.load() == 0, os.str()};
}

CheckResult check_certainty_amplitude() {
    const std::vector<PhaseConfig> grid = condition_grid();
    std::atomic<double> worst{0.0};
    std::atomic<long> ramp_violations{0};
    parallel_for_index(grid.size(), [&](std::size_t i) {
        const PhaseVerdict v = check_condition(grid[i]);
        if (!v.satisfied) return;
        const double k_real = *v.k_opt_real;
        update_max(worst,
                   std::abs(amplitude_closed(grid[i], k_real).b_norm - 1.0));
        for (int step = 0; step < 64; ++step) {
            const double k = k_real * step / 64.0;
            if (!(amplitude_closed(grid[i], k).b_norm < 1.0)) {
                ramp_violations.fetch_add(1);
            }
        }
    });
    const bool ok = worst.load() <= 1e-10 && ramp_violations.load() == 0;
    std::ostringstream os;
    os << "worst |b(k_o)|-1 = " << worst.load() << ", " << ramp_violations.load()
       << " pre-optimal values not below 1";
    return {"condition", "certainty_amplitude", ok, os.str()};
}

CheckResult check_monotone_window() {
    std::mt19937_64 rng(99u);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    long failures = 0;
    int tested = 0;
    while (tested < 100) {
        const double phi = angle(rng);
        if (std::abs(std::cos(phi)) < 1e-3) continue;
        const double theta = angle(rng);
        const PhaseConfig cfg = make_config(theta, phi, Complex{radius(rng), 0.0});
        if (!check_condition(cfg).satisfied) continue;
        ++tested;
        if (!monotone_window_check(cfg)) ++failures;
    }
    std::ostringstream os;
    os << failures << " of " << tested << " satisfied configs not monotone";
    return {"condition", "monotone_window", failures == 0, os.str()};
}

// ---- corollaries ----------------------------------------------------------

CheckResult check_corollary1() {
    long mismatches = 0;
    long compared = 0;
    // Same-quadrant branch; p capped at 0.70 (the region where the
    // trace term stays positive under the hypotheses).
    for (int q = 0; q < 2; ++q) {
        const double base = q == 0 ? 0.0 : kPi;
        for (int it = 1; it < 40; ++it) {
            for (int jf = 1; jf < 40; ++jf) {
                const double theta = base + it * (kPi / 2.0) / 40.0;
                const double phi = base + jf * (kPi / 2.0) / 40.0;
                for (double p : {0.05, 0.2, 0.35, 0.5, 0.65, 0.70}) {
                    const PhaseConfig cfg =
                        make_config(theta, phi, Complex{p, 0.0});
                    if (4.0 * p * p * std::pow(std::cos(phi), 2) > 1.0) continue;
                    const double bound = corollary1_bound(cfg);
                    if (std::abs(std::abs(theta - phi) - bound) <= 1e-9) continue;
                    ++compared;
                    const bool by_corollary = std::abs(theta - phi) <= bound;
                    if (by_corollary != check_condition(cfg).satisfied) {
                        ++mismatches;
                    }
                }
            }
        }
    }
    // cos(theta)cos(phi) < 0 branch with |theta-phi| < pi/2; valid for all p.
    for (int it = 1; it < 30; ++it) {
        for (int jf = 1; jf < 30; ++jf) {
            const double theta = kPi / 2.0 - it * 0.023;
            const double phi = kPi / 2.0 + jf * 0.023;
            if (std::abs(theta - phi) >= kPi / 2.0) continue;
            for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const PhaseConfig cfg = make_config(theta, phi, Complex{p, 0.0});
                if (4.0 * p * p * std::pow(std::cos(phi), 2) > 1.0) continue;
                const double bound = corollary1_bound(cfg);
                if (std::abs(std::abs(theta - phi) - bound) <= 1e-9) continue;
                ++compared;
                const bool by_corollary = std::abs(theta - phi) <= bound;
                if (by_corollary != check_condition(cfg).satisfied) ++mismatches;
            }
        }
    }
    std::ostringstream os;
    os << mismatches << " mismatches over " << compared << " points";
    return {"corollaries", "corollary1_agreement", mismatches == 0, os.str()};
}

CheckResult check_corollary2() {
    std::mt19937_64 rng(5150u);
    std::uniform_real_distribution<double> quarter(1e-3, kPi / 2.0 - 1e-3);
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    long contradictions = 0;
    long excluded = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        double theta, phi;
        if (trial % 2 == 0) {  // same quadrant (one of the four)
            const double base = (trial / 2 % 4) * kPi / 2.0;
            theta = base + quarter(rng);
            phi = base + quarter(rng);
        } else {  // cos product and sin product both negative
            theta = quarter(rng);
            phi = kPi + quarter(rng);
        }
        const PhaseConfig cfg = make_config(theta, phi, Complex{radius(rng), 0.0});
        if (!corollary2_excludes(cfg)) continue;
        ++excluded;
        if (check_condition(cfg).satisfied) ++contradictions;
    }
    std::ostringstream os;
    os << contradictions << " contradictions over " << excluded
       << " excluded configs";
    return {"corollaries", "corollary2_no_contradiction", contradictions == 0,
            os.str()};
}

CheckResult check_special_cases() {
    long mismatches = 0;
    for (int i = 0; i <= 200; ++i) {
        const double theta = -kPi + i * kPi / 100.0;
        for (double p : {0.1, 0.3, 0.5, 0.707106781186547524, 0.9}) {
            const PhaseConfig cfg = make_config(theta, 0.0, Complex{p, 0.0});
            const PhaseVerdict v = check_condition(cfg);
            if (std::abs(v.ratio - 1.0) < 1e-9) continue;  // boundary tie
            if (special_phi_zero(theta, p) != v.satisfied) ++mismatches;
        }
    }
    for (int i = 0; i <= 200; ++i) {
        const double phi = -kPi + i * kPi / 100.0;
        if (std::abs(std::cos(phi)) < 1e-9) continue;
        for (double p : {0.1, 0.2, 0.5, 0.8}) {
            const PhaseConfig cfg = make_config(0.0, phi, Complex{p, 0.0});
            const PhaseVerdict v = check_condition(cfg);
            if (std::abs(v.ratio - 1.0) < 1e-9) continue;
            if (special_theta_zero(phi, p) != v.satisfied) ++mismatches;
        }
    }
    std::ostringstream os;
    os << mismatches << " sweep mismatches";
    return {"corollaries", "special_case_agreement", mismatches == 0, os.str()};
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CheckResult check_boundaries() {
    double worst = 0.0;
    // phi = 0: condition boundary in theta vs arcsin(2p^2/|1-2p^2|).
    for (double p : {0.3, 0.45}) {
        const double direct = bisect(
            [&](double theta) {
                return check_condition(make_config(theta, 0.0, Complex{p, 0.0}))
                           .ratio -
                       1.0;
            },
            1e-6, kPi / 2.0 - 1e-6);
        const double formula =
            std::asin(std::min(1.0, 2.0 * p * p / std::abs(1.0 - 2.0 * p * p)));
        worst = std::max(worst, std::abs(direct - formula));
        // The quadrant-bound fixed point lands on the same angle.
        const double fixed = bisect(
            [&](double theta) {
                return theta -
                       corollary1_bound(make_config(theta, 0.0, Complex{p, 0.0}));
            },
            1e-6, kPi / 2.0 - 1e-6);
        worst = std::max(worst, std::abs(fixed - formula));
    }
    // theta = 0: condition boundary in phi vs arccos(1/sqrt(1+4p^4)).
    for (double p : {0.2, 0.6}) {
        const double direct = bisect(
            [&](double phi) {
                return check_condition(make_config(0.0, phi, Complex{p, 0.0}))
                           .ratio -
                       1.0;
            },
            1e-6, kPi / 2.0 - 1e-6);
        const double formula =
            std::acos(1.0 / std::sqrt(1.0 + 4.0 * std::pow(p, 4)));
        worst = std::max(worst, std::abs(direct - formula));
    }
    return {"corollaries", "boundary_formulas", worst <= 1e-9,
            describe(worst, "boundary gap")};
}

// ---- table1 ---------------------------------------------------------------

CheckResult check_table1() {
    const double p = 0.1;
    const std::vector<double> angles = {0.0,          kPi / 6.0, kPi / 3.0,
                                        2.0 * kPi / 3.0, 5.0 * kPi / 6.0, kPi};
    const std::vector<long> expected = {7, 8, 15, 15, 8, 7};
    std::ostringstream os;
    bool ok = true;
    os << "floors:";
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const long floor_k = static_cast<long>(std::floor(identical_k(angles[i], p)));
        os << " " << floor_k;
        if (floor_k != expected[i]) ok = false;
    }
    return {"table1", "identical_angle_floors", ok, os.str()};
}

CheckResult check_grover_comparison() {
    const double p = 0.1;
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) grid.push_back(kPi * i / 49.0);
    const ComparisonReport report = compare_grover_identical(p, grid);
    const double kg001 = grover_k(0.01);
    const double gap = std::abs(kg001 - grover_k_approx(0.01)) / kg001;
    const bool ok = report.grover_never_slower &&
                    report.slope_positive_first_half && gap < 0.01;
    std::ostringstream os;
    os << "never slower: " << report.grover_never_slower << ", slope+: "
       << report.slope_positive_first_half << ", approx gap(p=0.01) = " << gap;
    return {"table1", "grover_vs_identical", ok, os.str()};
}

// ---- periods --------------------------------------------------------------

CheckResult check_period_values() {
    const double t1 = period(make_config(0.0, 0.0, Complex{0.1, 0.0}));
    const double t2 = period(make_config(0.0, 0.0, Complex{0.01, 0.0}));
    const double t3 = period(make_config(kPi / 4.0, kPi / 4.0, Complex{0.1, 0.0}));
    const bool ok = std::abs(t1 - 15.7) <= 0.05 && std::abs(t2 - 157.0) <= 0.5 &&
                    std::abs(t3 - 22.2) <= 0.05;
    std::ostringstream os;
    os << "T = " << t1 << ", " << t2 << ", " << t3;
    return {"periods", "reference_periods", ok, os.str()};
}

CheckResult check_period_shift() {
    double worst = 0.0;
    std::mt19937_64 rng(31u);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> radius(0.1, 0.9);
    std::uniform_real_distribution<double> step(0.0, 40.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double phi = angle(rng);
        if (std::abs(std::cos(phi)) < 1e-3) continue;
        const PhaseConfig cfg =
            make_config(angle(rng), phi, Complex{radius(rng), 0.0});
        const double T = period(cfg);
        for (int i = 0; i < 8; ++i) {
            const double k = step(rng);
            const double a = amplitude_closed(cfg, k).b_norm;
            const double b = amplitude_closed(cfg, k + T).b_norm;
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return {"periods", "shift_invariance", worst <= 1e-9,
            describe(worst, "|b(k+T)| - |b(k)|")};
}

// ---- simulation -----------------------------------------------------------

CheckResult check_invariant_plane() {
    std::mt19937_64 rng(777u);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst_residual = 0.0;
    double worst_model = 0.0;
    for (int qubits : {2, 4, 8}) {
        const std::size_t dim = std::size_t{1} << qubits;
        std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
        for (int draw = 0; draw < 3; ++draw) {
            double phi = angle(rng);
            while (std::abs(std::cos(phi)) < 0.05) phi = angle(rng);
            const SearchInstance inst =
                make_instance(qubits, pick(rng), pick(rng), angle(rng), phi,
                              WalshHadamard{qubits});
            const IterationMatrix m = build_iteration_matrix(inst.config());
            StateVector state = StateVector::basis(dim, inst.gamma_index);
            AmplitudePair model;
            for (int k = 0; k <= 100; ++k) {
                if (k > 0) {
                    apply_Q(state, inst);
                    const Complex na = m.alpha * model.a + m.lambda * model.b;
                    const Complex nb = m.beta * model.a + m.delta * model.b;
                    model = AmplitudePair{na, nb, k};
                }
                const ExtractedPair ext = extract_pair(state, inst);
                worst_residual = std::max(worst_residual, ext.residual);
                worst_model = std::max(worst_model, std::abs(ext.b - model.b));
            }
        }
    }
    const bool ok = worst_residual <= 1e-11 && worst_model <= 1e-11;
    std::ostringstream os;
    os << "worst residual " << worst_residual << ", worst model gap "
       << worst_model;
    return {"simulation", "invariant_plane", ok, os.str()};
}

CheckResult check_norm_drift() {
    const SearchInstance inst =
        make_instance(4, 0, 11, kPi / 6.0, kPi / 3.0, WalshHadamard{4});
    StateVector state = StateVector::basis(16, 0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        apply_Q(state, inst);
        worst = std::max(worst, std::abs(state.norm() - 1.0));
    }
    return {"simulation", "norm_drift", worst <= 1e-12,
            describe(worst, "norm drift over 1000 steps")};
}

CheckResult check_wh_self_inverse() {
    std::mt19937_64 rng(12u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector state;
    state.amps.resize(256);
    for (Complex& v : state.amps) v = Complex{gauss(rng), gauss(rng)};
    const double norm = state.norm();
    for (Complex& v : state.amps) v /= norm;
    const StateVector before = state;
    const WalshHadamard wh{8};
    wh.apply(state);
    wh.apply(state);
    double worst = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        worst = std::max(worst, std::abs(state.amps[i] - before.amps[i]));
    }
    return {"simulation", "walsh_hadamard_self_inverse", worst <= 1e-13,
            describe(worst, "amplitude deviation")};
}

using CheckFn = CheckResult (*)();

struct RegistryEntry {
    const char* section;
    CheckFn fn;
};

const RegistryEntry kRegistry[] = {
    {"appendix3", &check_determinant},
    {"appendix3", &check_trace_identity},
    {"appendix3", &check_trace_bound},
    {"appendix3", &check_trace_bound_strict},
    {"appendix3", &check_root_separation},
    {"induction", &check_induction},
    {"induction", &check_leading_coefficient},
    {"agreement", &check_three_way_agreement},
    {"agreement", &check_norm_identity},
    {"condition", &check_biconditional},
    {"condition", &check_certainty_amplitude},
    {"condition", &check_monotone_window},
    {"corollaries", &check_corollary1},
    {"corollaries", &check_corollary2},
    {"corollaries", &check_special_cases},
    {"corollaries", &check_boundaries},
    {"table1", &check_table1},
    {"table1", &check_grover_comparison},
    {"periods", &check_period_values},
    {"periods", &check_period_shift},
    {"simulation", &check_invariant_plane},
    {"simulation", &check_norm_drift},
    {"simulation", &check_wh_self_inverse},
};

}  // namespace

const std::vector<std::string>& sections() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const RegistryEntry& e : kRegistry) {
            if (out.empty() || out.back() != e.section) {
                out.emplace_back(e.section);
            }
        }
        return out;
    }();
    return names;
}

std::vector<CheckResult> run(const std::vector<std::string>& which) {
    for (const std::string& name : which) {
        const auto& known = sections();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            std::string valid;
            for (const std::string& s : known) {
                valid += valid.empty() ? s : ", " + s;
            }
            throw MalformedInput("unknown verification section '" + name +
                                 "' (valid: " + valid + ")");
        }
    }
    std::vector<CheckResult> results;
    for (const RegistryEntry& e : kRegistry) {
        if (!which.empty() &&
            std::find(which.begin(), which.end(), e.section) == which.end()) {
            continue;
        }
        results.push_back(e.fn());
    }
    return results;
}

bool determinant_identity_holds(const IterationMatrix& m,
                                const PhaseConfig& cfg, double tol) {
    const Complex expect = std::polar(1.0, 2.0 * (cfg.theta + cfg.phi));
    return std::abs(m.determinant() - expect) <= tol;
}

}  // namespace amplikit::verify
