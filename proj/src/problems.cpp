#include "mmo/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmo {

namespace {

using std::numbers::pi;

constexpr double kBranchNudge = 1e-12;

double sgn(double v) { return v < 0.0 ? -1.0 : (v > 0.0 ? 1.0 : 0.0); }

// Rastrigin-like ripple shared by MMF2/MMF3.
double mmf2_ripple(double y) {
    return 2.0 * (4.0 * y * y - 2.0 * std::cos(20.0 * y * pi / std::sqrt(2.0)) + 2.0);
}

ProblemSpec make_sym_part() {
    // Simple (unrotated) SYM-PART: 9 line segments on a 3x3 tile grid.
    constexpr double a = 1.0, b = 10.0, c = 8.0;
    ProblemSpec p;
    p.name = "sym_part";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {-20.0, -20.0};
    p.upper = {20.0, 20.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double t1 = std::clamp(
            sgn(x[0]) * std::ceil((std::abs(x[0]) - (a + c / 2.0)) / (2.0 * a + c)),
            -1.0, 1.0);
        const double t2 = std::clamp(
            sgn(x[1]) * std::ceil((std::abs(x[1]) - b / 2.0) / b), -1.0, 1.0);
        const double u = x[0] - t1 * (c + 2.0 * a);
        const double v = x[1] - t2 * b;
        return std::vector<double>{(u + a) * (u + a) + v * v,
                                   (u - a) * (u - a) + v * v};
    };
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            p.subsets.push_back({0.0, 1.0, [i, j](double t) {
                                     return std::vector<double>{
                                         (c + 2.0 * a) * i + a * (2.0 * t - 1.0),
                                         b * j};
                                 }});
        }
    }
    return p;
}

ProblemSpec make_omni_test() {
    ProblemSpec p;
    p.name = "omni_test";
    p.dim = 3;
    p.objectives = 2;
    p.lower = {0.0, 0.0, 0.0};
    p.upper = {6.0, 6.0, 6.0};
    p.evaluate = [](const std::vector<double>& x) {
        double f1 = 0.0, f2 = 0.0;
        for (double xi : x) {
            f1 += std::sin(pi * xi);
            f2 += std::cos(pi * xi);
        }
        return std::vector<double>{f1, f2};
    };
    // Pareto set: all variables share the same offset t/2 in [0, 0.5],
    // each shifted independently by an even integer.
    for (int m1 = 0; m1 < 3; ++m1)
        for (int m2 = 0; m2 < 3; ++m2)
            for (int m3 = 0; m3 < 3; ++m3)
                p.subsets.push_back({0.0, 1.0, [m1, m2, m3](double t) {
                                         const double u = 1.0 + 0.5 * t;
                                         return std::vector<double>{u + 2.0 * m1,
                                                                    u + 2.0 * m2,
                                                                    u + 2.0 * m3};
                                     }});
    return p;
}

ProblemSpec make_mmf1() {
    ProblemSpec p;
    p.name = "mmf1";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {1.0, -1.0};
    p.upper = {3.0, 1.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double t = std::abs(x[0] - 2.0);
        const double y = x[1] - std::sin(6.0 * pi * t + pi);
        return std::vector<double>{t, 1.0 - std::sqrt(t) + 2.0 * y * y};
    };
    for (double s : {-1.0, 1.0})
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 return std::vector<double>{
                                     2.0 + s * t, std::sin(6.0 * pi * t + pi)};
                             }});
    return p;
}

ProblemSpec make_mmf2() {
    ProblemSpec p;
    p.name = "mmf2";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {0.0, 0.0};
    p.upper = {1.0, 2.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double y = (x[1] < 1.0) ? x[1] - std::sqrt(x[0])
                                      : x[1] - 1.0 - std::sqrt(x[0]);
        return std::vector<double>{x[0], 1.0 - std::sqrt(x[0]) + mmf2_ripple(y)};
    };
    p.subsets.push_back({0.0, 1.0, [](double t) {
                             return std::vector<double>{
                                 t * t, std::min(t, 1.0 - kBranchNudge)};
                         }});
    p.subsets.push_back({0.0, 1.0, [](double t) {
                             return std::vector<double>{t * t, t + 1.0};
                         }});
    return p;
}

ProblemSpec make_mmf3() {
    ProblemSpec p;
    p.name = "mmf3";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {0.0, 0.0};
    p.upper = {1.0, 1.5};
    p.evaluate = [](const std::vector<double>& x) {
        const double y = (x[1] < 0.5) ? x[1] - std::sqrt(x[0])
                                      : x[1] - 0.5 - std::sqrt(x[0]);
        return std::vector<double>{x[0], 1.0 - std::sqrt(x[0]) + mmf2_ripple(y)};
    };
    // The first subset only spans the part of the front with x2 < 0.5.
    p.subsets.push_back({0.0, 0.5, [](double t) {
                             return std::vector<double>{
                                 t * t, std::min(t, 0.5 - kBranchNudge)};
                         }});
    p.subsets.push_back({0.0, 1.0, [](double t) {
                             return std::vector<double>{t * t, t + 0.5};
                         }});
    return p;
}

ProblemSpec make_mmf4() {
    ProblemSpec p;
    p.name = "mmf4";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {-1.0, 0.0};
    p.upper = {1.0, 2.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double s = std::sin(pi * std::abs(x[0]));
        const double y = (x[1] < 1.0) ? x[1] - s : x[1] - 1.0 - s;
        return std::vector<double>{std::abs(x[0]),
                                   1.0 - x[0] * x[0] + 2.0 * y * y};
    };
    for (double s : {-1.0, 1.0}) {
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 return std::vector<double>{
                                     s * t, std::min(std::sin(pi * t),
                                                     1.0 - kBranchNudge)};
                             }});
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 return std::vector<double>{
                                     s * t, 1.0 + std::sin(pi * t)};
                             }});
    }
    return p;
}

ProblemSpec make_mmf5() {
    ProblemSpec p;
    p.name = "mmf5";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {1.0, -1.0};
    p.upper = {3.0, 3.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double t = std::abs(x[0] - 2.0);
        const double s = std::sin(6.0 * pi * t + pi);
        const double y = (x[1] <= 1.0) ? x[1] - s : x[1] - 2.0 - s;
        return std::vector<double>{t, 1.0 - std::sqrt(t) + 2.0 * y * y};
    };
    for (double s : {-1.0, 1.0}) {
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 return std::vector<double>{
                                     2.0 + s * t, std::sin(6.0 * pi * t + pi)};
                             }});
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 return std::vector<double>{
                                     2.0 + s * t,
                                     std::max(2.0 + std::sin(6.0 * pi * t + pi),
                                              1.0 + kBranchNudge)};
                             }});
    }
    return p;
}

ProblemSpec make_mmf6() {
    ProblemSpec p;
    p.name = "mmf6";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {1.0, -1.0};
    p.upper = {3.0, 2.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double t = std::abs(x[0] - 2.0);
        const double s = std::sin(6.0 * pi * t + pi);
        const double y = (x[1] <= 1.0) ? x[1] - s : x[1] - 1.0 - s;
        return std::vector<double>{t, 1.0 - std::sqrt(t) + 2.0 * y * y};
    };
    for (double s : {-1.0, 1.0}) {
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 return std::vector<double>{
                                     2.0 + s * t, std::sin(6.0 * pi * t + pi)};
                             }});
        // Shifted copies exist only where sin(6*pi*t + pi) >= 0.
        for (auto [lo, hi] : {std::pair{1.0 / 6.0, 2.0 / 6.0},
                              std::pair{3.0 / 6.0, 4.0 / 6.0},
                              std::pair{5.0 / 6.0, 1.0}}) {
            p.subsets.push_back({lo, hi, [s](double t) {
                                     return std::vector<double>{
                                         2.0 + s * t,
                                         std::max(1.0 + std::sin(6.0 * pi * t + pi),
                                                  1.0 + kBranchNudge)};
                                 }});
        }
    }
    return p;
}

ProblemSpec make_mmf7() {
    ProblemSpec p;
    p.name = "mmf7";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {1.0, -1.0};
    p.upper = {3.0, 1.0};
    auto ps_curve = [](double t) {
        return (0.3 * t * t * std::cos(24.0 * pi * t + 4.0 * pi) + 0.6 * t) *
               std::sin(6.0 * pi * t + pi);
    };
    p.evaluate = [ps_curve](const std::vector<double>& x) {
        const double t = std::abs(x[0] - 2.0);
        const double y = x[1] - ps_curve(t);
        return std::vector<double>{t, 1.0 - std::sqrt(t) + y * y};
    };
    for (double s : {-1.0, 1.0})
        p.subsets.push_back({0.0, 1.0, [s, ps_curve](double t) {
                                 return std::vector<double>{2.0 + s * t,
                                                            ps_curve(t)};
                             }});
    return p;
}

ProblemSpec make_mmf8() {
    ProblemSpec p;
    p.name = "mmf8";
    p.dim = 2;
    p.objectives = 2;
    p.lower = {-pi, 0.0};
    p.upper = {pi, 9.0};
    p.evaluate = [](const std::vector<double>& x) {
        const double a = std::abs(x[0]);
        const double f1 = std::sin(a);
        const double y = (x[1] <= 4.0) ? x[1] - std::sin(a) - a
                                       : x[1] - 4.0 - std::sin(a) - a;
        return std::vector<double>{f1, std::sqrt(1.0 - f1 * f1) + 2.0 * y * y};
    };
    for (double s : {-1.0, 1.0}) {
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 const double a = pi * t;
                                 return std::vector<double>{s * a,
                                                            std::sin(a) + a};
                             }});
        p.subsets.push_back({0.0, 1.0, [s](double t) {
                                 const double a = pi * t;
                                 return std::vector<double>{
                                     s * a, std::max(4.0 + std::sin(a) + a,
                                                     4.0 + kBranchNudge)};
                             }});
    }
    return p;
}

const std::vector<ProblemSpec>& registry() {
    static const std::vector<ProblemSpec> problems = {
        make_omni_test(), make_sym_part(), make_mmf1(), make_mmf2(),
        make_mmf3(),      make_mmf4(),     make_mmf5(), make_mmf6(),
        make_mmf7(),      make_mmf8()};
    return problems;
}

}  // namespace

std::vector<std::vector<double>> ProblemSpec::subset_sample(std::size_t subset,
                                                            std::size_t n) const {
    if (subset >= subsets.size())
        throw std::out_of_range("subset_sample: subset index out of range");
    if (n == 0) throw std::domain_error("subset_sample: n must be positive");
    const auto& curve = subsets[subset];
    std::vector<std::vector<double>> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(curve.point(0.5 * (curve.t_lo + curve.t_hi)));
        return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double t = curve.t_lo + (curve.t_hi - curve.t_lo) *
                                          static_cast<double>(j) /
                                          static_cast<double>(n - 1);
        out.push_back(curve.point(t));
    }
    return out;
}

std::vector<std::vector<double>> ProblemSpec::pareto_set_sample(std::size_t n) const {
    const std::size_t s = subsets.size();
    if (n < s)
        throw std::domain_error("pareto_set_sample: n smaller than subset count");
    std::vector<std::vector<double>> out;
    out.reserve(n);
    const std::size_t base = n / s, extra = n % s;
    for (std::size_t i = 0; i < s; ++i) {
        auto pts = subset_sample(i, base + (i < extra ? 1 : 0));
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

std::vector<std::vector<double>> ProblemSpec::pareto_front_sample(std::size_t n) const {
    auto set = pareto_set_sample(n);
    std::vector<std::vector<double>> out;
    out.reserve(set.size());
    for (const auto& x : set) out.push_back(evaluate(x));
    return out;
}

const ProblemSpec& get_problem(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return p;
    throw std::out_of_range("get_problem: unknown problem '" + name + "'");
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& p : registry()) v.push_back(p.name);
        return v;
    }();
    return names;
}

}  // namespace mmo
