// Acceptance criteria 1-12, each computed directly from the library and judged
// at its stated tolerance. Prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <qsbt/qsbt.hpp>
#include <qsbt/verify/suites.hpp>

using namespace qsbt;

namespace {

constexpr double pi = std::numbers::pi;
const double nus[] = {0.5, 1.0, 2.0};

struct Result {
    bool pass;
    std::string summary;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Result within(double residual, double tol, const std::string& extra = {}) {
    return {residual < tol, "residual " + sci(residual) + " < " + sci(tol) + (extra.empty() ? "" : "; " + extra)};
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double normal() { return std::normal_distribution<double>()(g_); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
    Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
    Quaternion point(double r_min, double r_max) {
        Quaternion q = quaternion();
        return q * (uniform(r_min, r_max) / modulus(q));
    }
    ImaginaryUnit unit() { return ImaginaryUnit::normalized({0.0, normal(), normal(), normal()}); }
    ImaginaryUnit perpendicular(const ImaginaryUnit& I) {
        Quaternion v{0.0, normal(), normal(), normal()};
        return ImaginaryUnit::normalized(v - I.axis() * dot(v, I.axis()));
    }
    std::vector<Quaternion> coeffs(std::size_t degree) {
        std::vector<Quaternion> c(degree + 1);
        for (auto& a : c) {
            a = quaternion();
        }
        return c;
    }
    HermiteExpansion unit_expansion(double nu, std::size_t degree) {
        HermiteExpansion psi(nu, coeffs(degree));
        return psi * Quaternion{1.0 / std::sqrt(psi.norm_sq())};
    }
    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

Result monomial_norms() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const double nu : nus) {
        const auto rule = SliceQuadrature::for_degree(nu, 20, 96, 256);
        for (std::size_t n = 0; n <= 20; ++n) {
            const double exact = monomial_inner(n, n, nu);
            const double quad = fock_norm_quadrature({PowerSeries::monomial(n), nu}, ImaginaryUnit::j(), rule);
            worst = std::max(worst, std::fabs(quad - exact) / exact);
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Result r = within(worst, 1e-9, "runtime " + sci(seconds) + " s < 5 s");
    r.pass = r.pass && seconds < 5.0;
    return r;
}

Result hermite_norms() {
    double worst = 0.0;
    for (const double nu : nus) {
        const RealLineRule rule(128, nu);
        for (std::size_t n = 0; n <= 20; ++n) {
            const double quad = rule.integrate([&](double x) { return std::pow(hermite_h(n, x, nu), 2); });
            worst = std::max(worst, std::fabs(quad - hermite_norm_sq(n, nu)) / hermite_norm_sq(n, nu));
        }
    }
    return within(worst, 1e-9);
}

Result lemma_action() {
    Rng rng(3);
    double worst = 0.0;
    for (const double nu : nus) {
        const RealLineRule rule = transform_rule(128, nu);
        for (unsigned n = 0; n <= 12; ++n) {
            const SampledFunction h{[n, nu](double x) { return Quaternion{hermite_h(n, x, nu)}; },
                                    std::sqrt((2.0 * n + 81.0) / nu)};
            const double c = std::pow(nu / pi, 0.25) * std::pow(2.0, n / 2.0) * std::pow(nu, n);
            for (int k = 0; k < 25; ++k) {
                const Quaternion q = rng.point(1.0, 1.5);
                const Quaternion expected = qpow(q, n) * c;
                worst = std::max(worst, modulus(bargmann_quadrature(h, q, nu, rule) - expected) / modulus(expected));
            }
        }
    }
    return within(worst, 1e-8, "25 points per n, n <= 12, nu in {0.5, 1, 2}");
}

Result isometry() {
    Rng rng(4);
    double coeff_worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const double nu = nus[k % 3];
        const HermiteExpansion psi(nu, rng.coeffs(32));
        const double a = std::sqrt(fock_norm_sq(bargmann_coeff(psi)));
        const double b = std::sqrt(psi.norm_sq());
        coeff_worst = std::max(coeff_worst, std::fabs(a - b) / b);
    }
    double quad_worst = 0.0;
    for (const double nu : nus) {
        const RealLineRule line = transform_rule(128, nu);
        const auto rule = SliceQuadrature::for_degree(nu, 12, 96, 256);
        const HermiteExpansion psi = rng.unit_expansion(nu, 12);
        const auto samples = detail::sample(SampledFunction::from(psi), line, "isometry");
        const ImaginaryUnit I = rng.unit();
        const double l2 = line.integrate([&](double x) { return norm_sq(psi(x)); });
        const double fock = rule.integrate(I, [&](std::complex<double> z, const Quaternion&) {
            return norm_sq(bargmann_quadrature(std::span<const Quaternion>(samples), I, z, nu, line));
        });
        quad_worst = std::max(quad_worst, std::fabs(std::sqrt(fock) - std::sqrt(l2)) / std::sqrt(l2));
    }
    return {coeff_worst < 1e-12 && quad_worst < 1e-7,
            "coefficient path " + sci(coeff_worst) + " < 1e-12; quadrature path " + sci(quad_worst) + " < 1e-7"};
}

Result slice_independence() {
    Rng rng(5);
    std::vector<SliceQuadrature> rules;
    for (const double nu : nus) {
        rules.push_back(SliceQuadrature::for_degree(nu, 16, 96, 256));
    }
    double worst = 0.0;
    std::size_t violations = 0;
    for (int k = 0; k < 200; ++k) {
        const double nu = nus[k % 3];
        const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, 16)(rng.engine());
        const FockElement f{PowerSeries(rng.coeffs(degree)), nu};
        const double exact = fock_norm_sq(f);
        for (int pair = 0; pair < 5; ++pair) {
            const double nI = fock_norm_quadrature(f, rng.unit(), rules[k % 3]);
            const double nJ = fock_norm_quadrature(f, rng.unit(), rules[k % 3]);
            const double ratio = std::sqrt(nJ / nI);
            violations += !(0.5 <= ratio && ratio <= 2.0);
            worst = std::max({worst, std::fabs(nI - nJ) / nI, std::fabs(nI - exact) / exact});
        }
    }
    return {violations == 0 && worst < 1e-8,
            std::to_string(violations) + " inequality violations; equality residual " + sci(worst) + " < 1e-8"};
}

Result reproducing() {
    Rng rng(6);
    double rep_worst = 0.0;
    double kernel_worst = 0.0;
    for (const double nu : nus) {
        const FockElement f{PowerSeries(rng.coeffs(16)), nu};
        const auto rule = reproducing_rule(nu, 16, 1.5, 96, 256);
        std::vector<Quaternion> grid;
        for (int s = 0; s < 2; ++s) {
            const ImaginaryUnit J = rng.unit();
            for (int a = 0; a < 5; ++a) {
                for (int b = 0; b < 5; ++b) {
                    const std::complex<double> z{-1.0 + 0.5 * a, -1.0 + 0.5 * b};
                    grid.push_back(J.embed(z));
                }
            }
        }
        const ImaginaryUnit I = rng.unit();
        for (const auto& q : grid) {
            const Quaternion direct = f(q);
            rep_worst = std::max(rep_worst, modulus(reproduce(f, q, I, rule) - direct) / (1.0 + modulus(direct)));
        }
        for (std::size_t a = 0; a < grid.size(); a += 7) {
            for (std::size_t b = 0; b < grid.size(); b += 11) {
                const auto Ka = kernel_section(grid[a], nu);
                const auto Kb = kernel_section(grid[b], nu);
                const std::size_t degree = std::max(Ka.degree(), Kb.degree());
                const auto krule = SliceQuadrature::for_degree(nu, degree, 96, 256);
                const Quaternion inner = fock_inner_quadrature(Ka, Kb, I, krule);
                const double scale = kernel_section_norm(grid[a], nu) * kernel_section_norm(grid[b], nu);
                kernel_worst = std::max(kernel_worst, modulus(inner - reproducing_kernel(grid[b], grid[a], nu)) / scale);
            }
        }
    }
    return {rep_worst < 1e-7 && kernel_worst < 1e-7,
            "reproducing " + sci(rep_worst) + " < 1e-7; <K_q, K_q'> " + sci(kernel_worst) + " < 1e-7"};
}

Result kernel_norms() {
    Rng rng(7);
    double worst = 0.0;
    for (const double nu : nus) {
        const RealLineRule line(128, nu);
        for (int k = 0; k < 10; ++k) {
            const Quaternion q = k == 0 ? Quaternion{} : rng.point(0.0, 1.5);
            const double closed = kernel_section_norm(q, nu);
            const double a = std::sqrt(kernel_A_norm_sq_quadrature(q, nu, line));
            const double kqq = std::sqrt(reproducing_kernel(q, q, nu).w);
            const auto K = kernel_section(q, nu);
            const auto rule = SliceQuadrature::for_degree(nu, K.degree(), 96, 256);
            const double kquad = std::sqrt(fock_norm_quadrature(K, rng.unit(), rule));
            for (const double v : {a, kqq, kquad}) {
                worst = std::max(worst, std::fabs(v - closed) / closed);
            }
        }
    }
    return within(worst, 1e-8, "||A_q|| by Gauss-Hermite, K(q,q)^{1/2}, slice quadrature of |K_q|^2");
}

Result bounds() {
    Rng rng(8);
    std::size_t point_violations = 0;
    std::size_t transform_violations = 0;
    for (int k = 0; k < 10000; ++k) {
        const double nu = nus[k % 3];
        const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, 16)(rng.engine());
        const FockElement f{PowerSeries(rng.coeffs(degree)), nu};
        const Quaternion q = rng.point(0.0, 2.5);
        point_violations += !(modulus(f(q)) <= point_eval_bound(q, nu, std::sqrt(fock_norm_sq(f))) * (1 + 1e-12));
    }
    std::vector<RealLineRule> lines;
    for (const double nu : nus) {
        lines.push_back(transform_rule(128, nu));
    }
    for (int k = 0; k < 10000; ++k) {
        const double nu = nus[k % 3];
        const HermiteExpansion psi(nu, rng.coeffs(std::uniform_int_distribution<std::size_t>(0, 12)(rng.engine())));
        const Quaternion q = rng.point(0.0, 2.5);
        const double bound = std::sqrt(nu / pi) * std::exp(nu * norm_sq(q) / 2) * std::sqrt(psi.norm_sq());
        const Quaternion value = k % 10 == 0 ? bargmann_quadrature(SampledFunction::from(psi), q, nu, lines[k % 3])
                                             : bargmann_coeff(psi)(q);
        transform_violations += !(modulus(value) <= bound * (1 + 1e-10));
    }
    return {point_violations == 0 && transform_violations == 0,
            std::to_string(point_violations) + " point-evaluation and " + std::to_string(transform_violations) +
                " transform-bound violations in 2 x 10^4 samples"};
}

Result inverse() {
    Rng rng(9);
    double path_worst = 0.0;
    for (const double nu : nus) {
        FockElement f{PowerSeries(rng.coeffs(12)), nu};
        const double norm = std::sqrt(fock_norm_sq(f));
        auto c = f.coeffs();
        for (auto& a : c) {
            a = a / norm;
        }
        f = FockElement{PowerSeries(c), nu};
        const HermiteExpansion psi = inverse_coeff(f);
        const auto rule = inverse_rule(nu, 12, 3.0, 96, 256);
        for (int s = 0; s < 3; ++s) {
            const ImaginaryUnit I = rng.unit();
            for (int k = 0; k <= 24; ++k) {
                const double x = -3.0 + 0.25 * k;
                path_worst = std::max(path_worst, modulus(inverse_quadrature(f, x, I, nu, rule) - psi(x)));
            }
        }
    }
    double roundtrip = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double nu = nus[k % 3];
        const HermiteExpansion psi(nu, rng.coeffs(32));
        const auto back = inverse_coeff(bargmann_coeff(psi));
        const FockElement f{PowerSeries(rng.coeffs(32)), nu};
        const auto forth = bargmann_coeff(inverse_coeff(f));
        for (std::size_t n = 0; n <= 32; ++n) {
            roundtrip = std::max(roundtrip, modulus(back[n] - psi[n]) / modulus(psi[n]));
            roundtrip = std::max(roundtrip, modulus(forth.coeffs()[n] - f.coeffs()[n]) / modulus(f.coeffs()[n]));
        }
    }
    return {path_worst < 1e-7 && roundtrip < 1e-12,
            "slice integral vs series " + sci(path_worst) + " < 1e-7; roundtrips " + sci(roundtrip) + " < 1e-12"};
}

Result fourier() {
    Rng rng(10);
    double intertwine = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double nu = nus[k % 3];
        const RealLineRule rule = transform_rule(128, nu);
        const HermiteExpansion psi = rng.unit_expansion(nu, 8);
        const ImaginaryUnit I = rng.unit();
        const double x = rng.uniform(-2.0, 2.0);
        intertwine = std::max(intertwine, check_intertwine(psi, I, x, rule).residual());
        intertwine = std::max(intertwine, check_intertwine(SampledFunction::from(psi), I, x, nu, rule).residual());
    }
    const RealLineRule rule(128, 1.0);
    const ImaginaryUnit slices[] = {rng.unit(), rng.unit(), rng.unit()};
    double diag = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t degree = std::uniform_int_distribution<std::size_t>(0, 8)(rng.engine());
        const FockElement f{PowerSeries(rng.coeffs(degree)), 1.0};
        diag = std::max(diag, check_diag(f, slices[k % 3], rng.uniform(-2.0, 2.0), rule).residual());
    }
    double exact_form = 0.0;
    for (const auto& I : slices) {
        for (unsigned n = 0; n <= 8; ++n) {
            for (const double x : {-2.0, -0.7, 0.0, 1.1, 2.0}) {
                const auto sides = check_diag({PowerSeries::monomial(n), 1.0}, I, x, rule);
                exact_form = std::max(exact_form, modulus(sides.lhs - qpow(I.axis() * x, n) * std::sqrt(2 * pi)));
            }
        }
    }
    return {intertwine < 1e-6 && diag < 1e-6 && exact_form < 1e-6,
            "intertwining " + sci(intertwine) + ", diagonalization " + sci(diag) + ", e_n exact form " +
                sci(exact_form) + " (all < 1e-6)"};
}

Result structural() {
    Rng rng(11);
    double split_worst = 0.0;
    double rep_worst = 0.0;
    double ext_worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const PowerSeries f(rng.coeffs(12));
        const ImaginaryUnit I = rng.unit();
        const ImaginaryUnit J = rng.perpendicular(I);
        const SplitPair sp = split(f, I, J);
        const auto back = sp.reassemble();
        for (std::size_t n = 0; n <= 12; ++n) {
            split_worst = std::max(split_worst, max_abs_diff(back[n], f[n]));
        }
        const ImaginaryUnit K = rng.unit();
        const auto h = [&](std::complex<double> z) { return f.on_slice(I, z); };
        for (int m = 0; m < 100; ++m) {
            const std::complex<double> z{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
            const Quaternion fz = f(I.embed(z));
            const double s = std::norm(sp.eval_F(z)) + std::norm(sp.eval_G(z));
            split_worst = std::max(split_worst, std::fabs(norm_sq(fz) - s) / std::max(1.0, norm_sq(fz)));
            const Quaternion direct = f(K.embed(z));
            const Quaternion formula = representation(f(I.embed(z)), f(I.embed(std::conj(z))), I, K);
            rep_worst = std::max(rep_worst, modulus(formula - direct) / std::max(1.0, modulus(direct)));
            const Quaternion target = rng.point(0.0, 1.5);
            const Quaternion ft = f(target);
            ext_worst = std::max(ext_worst, modulus(extend(h, I, target) - ft) / std::max(1.0, modulus(ft)));
        }
    }
    return {split_worst < 1e-10 && rep_worst < 1e-10 && ext_worst < 1e-10,
            "splitting " + sci(split_worst) + ", representation " + sci(rep_worst) + ", extension " + sci(ext_worst) +
                " (all < 1e-10)"};
}

Result full_verify() {
    verify::RunConfig config;
    config.timing = false;
    const auto start = std::chrono::steady_clock::now();
    const auto first = verify::run_verification(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto second = verify::run_verification(config);
    const bool same = verify::to_json(first) == verify::to_json(second);
    std::string failed;
    for (const auto& e : first.entries) {
        if (e.status == verify::Status::fail) {
            failed += " " + e.name;
        }
    }
    return {first.all_passed() && same && seconds < 60.0,
            std::to_string(first.passed()) + "/" + std::to_string(first.entries.size()) + " suites pass in " +
                sci(seconds) + " s; reports " + (same ? "byte-identical" : "DIFFER") +
                (failed.empty() ? "" : "; failed:" + failed)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"monomial norms", monomial_norms},
        {"Hermite norms", hermite_norms},
        {"action on Hermite functions", lemma_action},
        {"isometry", isometry},
        {"slice independence", slice_independence},
        {"reproducing property and kernel inner products", reproducing},
        {"kernel-section norms", kernel_norms},
        {"point-evaluation and transform bounds", bounds},
        {"inverse transform", inverse},
        {"Fourier intertwining and diagonalization", fourier},
        {"splitting, representation, extension", structural},
        {"full verify run", full_verify},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Result r{false, ""};
        try {
            r = criteria[k].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failures += !r.pass;
        std::printf("%s criterion %2zu: %s (%s)\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    r.summary.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
