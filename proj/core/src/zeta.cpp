#include "graphzeta/zeta.hpp"

#include "graphzeta/errors.hpp"
#include "graphzeta/pool.hpp"
#include "graphzeta/walk_operators.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace graphzeta {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex determinant(const ComplexMatrix& m) { return Eigen::PartialPivLU<ComplexMatrix>(m).determinant(); }

Complex int_pow(Complex base, int exponent) {
    const bool invert = exponent < 0;
    unsigned e = static_cast<unsigned>(invert ? -exponent : exponent);
    Complex result(1.0, 0.0);
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return invert ? Complex(1.0, 0.0) / result : result;
}

void guard_pole(const Graph& g, Complex u, const char* what) {
    if (g.m() < g.n() && std::abs(u * u - 1.0) < 1e-12) {
        std::ostringstream os;
        os << what << " has a pole at u = " << u << " for m < n";
        throw PoleAtU(os.str());
    }
}

double relative_residual(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

using ZeroCounts = std::map<Ordinate, int>;

std::vector<ZeroEntry> to_entries(const ZeroCounts& counts) {
    std::vector<ZeroEntry> out;
    for (const auto& [gamma, mult] : counts)
        if (mult > 0) out.push_back({gamma, mult});
    return out;
}

template <typename Lhs, typename Rhs>
VerificationReport sample_disk(std::string name, const Graph& g, int num_samples, double radius, double tol,
                               std::uint64_t seed, Lhs lhs, Rhs rhs) {
    VerificationReport report;
    report.identity_name = std::move(name);
    report.tolerance = tol;
    SampleStream rng(seed);
    while (static_cast<int>(report.samples.size()) < num_samples) {
        const Complex u = rng.in_disk(radius);
        if (g.m() != g.n() && std::abs(u * u - 1.0) < 1e-6) continue;
        const Complex l = lhs(u);
        const Complex r = rhs(u);
        report.add({u, l, r, std::abs(l - r), relative_residual(l, r)});
    }
    report.finalize();
    return report;
}

}  // namespace

Complex ihara_reciprocal_bass(const Graph& g, Complex u) {
    guard_pole(g, u, "the Ihara-Bass formula");
    const auto n = static_cast<Eigen::Index>(g.n());
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix a = adjacency_matrix(g).cast<Complex>();
    const ComplexMatrix d = degree_matrix(g).cast<Complex>();
    const ComplexMatrix kernel = id - u * a + (u * u) * (d - id);
    return int_pow(1.0 - u * u, betti_number(g) - 1) * determinant(kernel);
}

Complex ihara_reciprocal_edge(const Graph& g, Complex u) {
    const RealMatrix edge = edge_matrix(g);
    const ComplexMatrix kernel = ComplexMatrix::Identity(edge.rows(), edge.cols()) - u * edge.cast<Complex>();
    return determinant(kernel);
}

Complex grover_zeta_reciprocal(const Graph& g, Complex u) {
    const RealMatrix grover = grover_matrix(g);
    const ComplexMatrix kernel = ComplexMatrix::Identity(grover.rows(), grover.cols()) - u * grover.cast<Complex>();
    return determinant(kernel);
}

Complex konno_sato_rhs(const Graph& g, Complex u) {
    guard_pole(g, u, "the Konno-Sato right-hand side");
    const auto n = static_cast<Eigen::Index>(g.n());
    const ComplexMatrix kernel =
        (1.0 + u * u) * ComplexMatrix::Identity(n, n) - (2.0 * u) * transition_matrix(g).cast<Complex>();
    return int_pow(1.0 - u * u, g.m() - g.n()) * determinant(kernel);
}

std::int64_t count_reduced_cycles_by_enumeration(const Graph& g, int r) {
    if (r < 1) throw ZetaError("cycle length must be >= 1, got " + std::to_string(r));
    const ArcIndex arcs(g);
    std::int64_t count = 0;
    std::vector<std::size_t> path(static_cast<std::size_t>(r));
    auto extend = [&](auto&& self, int depth) -> void {
        const std::size_t last = path[static_cast<std::size_t>(depth - 1)];
        if (depth == r) {
            if (arcs.terminus(last) == arcs.origin(path[0]) && path[0] != ArcIndex::inverse(last)) ++count;
            return;
        }
        for (std::size_t next : arcs.outgoing(arcs.terminus(last))) {
            if (next == ArcIndex::inverse(last)) continue;
            path[static_cast<std::size_t>(depth)] = next;
            self(self, depth + 1);
        }
    };
    for (std::size_t start = 0; start < arcs.size(); ++start) {
        path[0] = start;
        extend(extend, 1);
    }
    return count;
}

std::int64_t reduced_cycle_count(const Graph& g, int r) {
    if (r < 1) throw ZetaError("cycle length must be >= 1, got " + std::to_string(r));
    using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
    const IntMatrix support = edge_matrix(g).cast<std::int64_t>();
    IntMatrix power = support;
    for (int k = 1; k < r; ++k) power = power * support;
    const std::int64_t trace = power.trace();

    if (r <= 6 && 2 * g.m() <= 60) {
        const std::int64_t enumerated = count_reduced_cycles_by_enumeration(g, r);
        if (enumerated != trace)
            throw OracleMismatch("N_" + std::to_string(r) + ": trace gives " + std::to_string(trace) +
                                 ", enumeration gives " + std::to_string(enumerated));
    }
    return trace;
}

int MSpectrum::total_multiplicity() const {
    int total = infinite_multiplicity;
    for (const auto& e : finite) total += e.multiplicity;
    return total;
}

MSpectrum m_spectrum(const Spectrum& rw) {
    MSpectrum out;
    for (const auto& e : rw.entries()) {
        const double lambda_p = e.value.real();
        if (std::abs(lambda_p - 1.0) <= kClampTol)
            out.infinite_multiplicity += e.multiplicity;
        else
            out.finite.push_back({1.0 / (2.0 * (1.0 - lambda_p)), e.multiplicity});
    }
    std::sort(out.finite.begin(), out.finite.end(), [](const MEntry& a, const MEntry& b) { return a.value < b.value; });
    return out;
}

MSpectrum m_spectrum(const Graph& g, double tol) { return m_spectrum(rw_spectrum(g, tol)); }

double Ordinate::value() const {
    if (infinite_) throw ZetaError("the point at infinity has no finite ordinate");
    return gamma_;
}

Ordinate rho_of_theta(double theta) {
    if (!(theta >= 0.0 && theta < kTwoPi)) {
        std::ostringstream os;
        os.precision(17);
        os << "angle " << theta << " is outside [0, 2pi)";
        throw OutOfRangeError(os.str());
    }
    if (theta <= 1e-12) return Ordinate::infinity();
    if (std::abs(theta - std::numbers::pi) <= 1e-12) return Ordinate::finite(0.0);
    const double half = 0.5 * theta;
    return Ordinate::finite(0.5 * std::cos(half) / std::sin(half));
}

std::string case_tag(EdgeVertexCase c) {
    switch (c) {
        case EdgeVertexCase::MoreEdges: return "M_GT_N";
        case EdgeVertexCase::Equal: return "M_EQ_N";
        case EdgeVertexCase::FewerEdges: return "M_LT_N";
    }
    return "M_EQ_N";
}

int ZeroSet::total_multiplicity() const {
    int total = 0;
    for (const auto& z : zeros) total += z.multiplicity;
    return total;
}

int ZeroSet::multiplicity_of(Ordinate gamma, double radius) const {
    for (const auto& z : zeros) {
        if (z.gamma.is_infinite() != gamma.is_infinite()) continue;
        if (gamma.is_infinite() || std::abs(z.gamma.value() - gamma.value()) <= radius) return z.multiplicity;
    }
    return 0;
}

ZeroSet qw_zero_set(const Spectrum& rw, int n, int m) {
    ZeroCounts rw_counts;
    for (const auto& e : rw.entries()) {
        const double lambda_p = e.value.real();
        const int l = e.multiplicity;
        if (std::abs(lambda_p - 1.0) <= kClampTol) {
            rw_counts[Ordinate::infinity()] += 2 * l;
        } else if (std::abs(lambda_p + 1.0) <= kClampTol) {
            rw_counts[Ordinate::finite(0.0)] += 2 * l;
        } else {
            const double theta = joukowsky_angle(lambda_p);
            rw_counts[rho_of_theta(theta)] += l;
            rw_counts[rho_of_theta(kTwoPi - theta)] += l;
        }
    }

    ZeroSet out;
    out.rw_zeros = to_entries(rw_counts);
    const int excess = m - n;
    if (excess != 0) out.rwc_zeros = {{Ordinate::finite(0.0), std::abs(excess)}, {Ordinate::infinity(), std::abs(excess)}};

    ZeroCounts combined = rw_counts;
    if (excess > 0) {
        out.edge_case = EdgeVertexCase::MoreEdges;
        combined[Ordinate::infinity()] += excess;
        combined[Ordinate::finite(0.0)] += excess;
    } else if (excess < 0) {
        out.edge_case = EdgeVertexCase::FewerEdges;
        for (const auto& point : {Ordinate::infinity(), Ordinate::finite(0.0)}) {
            auto it = combined.find(point);
            if (it == combined.end() || it->second < -excess)
                throw RemovalUnderflow("cannot remove " + std::to_string(-excess) + " copies of " +
                                       (point.is_infinite() ? std::string("1/2 + i*inf") : std::string("1/2")) +
                                       " from the random-walk zeros");
            it->second += excess;
        }
    }
    out.zeros = to_entries(combined);
    return out;
}

ZeroSet qw_zero_set(const Graph& g, double tol) { return qw_zero_set(rw_spectrum(g, tol), g.n(), g.m()); }

LambdaValue lambda_qw_eval(const MSpectrum& spectrum, Complex s) {
    const Complex shift = s * (1.0 - s);
    Complex value(1.0, 0.0);
    for (const auto& e : spectrum.finite) value *= int_pow(e.value - shift, e.multiplicity);
    return {value, spectrum.infinite_multiplicity};
}

LambdaValue lambda_qw_eval(const Graph& g, Complex s) { return lambda_qw_eval(m_spectrum(g), s); }

void VerificationReport::add(VerificationSample s) {
    max_rel_residual = std::max(max_rel_residual, s.rel_residual);
    samples.push_back(s);
}

void VerificationReport::finalize() { passed = max_rel_residual <= tolerance; }

VerificationReport verify_konno_sato(const Graph& g, int num_samples, double radius, double tol, std::uint64_t seed) {
    return sample_disk("konno-sato", g, num_samples, radius, tol, seed,
                       [&](Complex u) { return grover_zeta_reciprocal(g, u); },
                       [&](Complex u) { return konno_sato_rhs(g, u); });
}

VerificationReport verify_ihara_bass(const Graph& g, int num_samples, double radius, double tol, std::uint64_t seed) {
    return sample_disk("ihara-bass", g, num_samples, radius, tol, seed,
                       [&](Complex u) { return ihara_reciprocal_edge(g, u); },
                       [&](Complex u) { return ihara_reciprocal_bass(g, u); });
}

VerificationReport verify_spectral_map(const Graph& g, double grouping_tol, double radius) {
    VerificationReport report;
    report.identity_name = "spectral-map";
    report.tolerance = radius;
    const Spectrum direct = grover_spectrum_direct(g, grouping_tol);
    const Spectrum mapped = grover_spectrum_via_mapping(g, grouping_tol);
    for (const auto& e : mapped.entries()) {
        const auto nearest = std::min_element(direct.entries().begin(), direct.entries().end(),
                                              [&](const SpectrumEntry& a, const SpectrumEntry& b) {
                                                  return std::abs(a.value - e.value) < std::abs(b.value - e.value);
                                              });
        const double d = nearest == direct.entries().end() ? INFINITY : std::abs(nearest->value - e.value);
        const Complex other = nearest == direct.entries().end() ? Complex(NAN, NAN) : nearest->value;
        report.add({e.value, other, e.value, d, d});
    }
    const auto match = match_spectra(direct, mapped, radius);
    report.note = match.matched ? "multisets agree" : match.detail;
    report.finalize();
    report.passed = report.passed && match.matched;
    return report;
}

VerificationReport verify_functional_equation(const Graph& g, int num_samples, std::uint64_t seed, double grouping_tol) {
    VerificationReport report;
    report.identity_name = "functional-eq";
    report.tolerance = 1e-10;
    const MSpectrum spectrum = m_spectrum(g, grouping_tol);
    SampleStream rng(seed);
    for (int i = 0; i < num_samples; ++i) {
        const double re = rng.uniform(-2.0, 3.0);
        const double im = rng.uniform(-3.0, 3.0);
        const Complex s(re, im);
        const Complex lhs = lambda_qw_eval(spectrum, s).value;
        const Complex rhs = lambda_qw_eval(spectrum, 1.0 - s).value;
        const double abs_res = std::abs(lhs - rhs);
        report.add({s, lhs, rhs, abs_res, abs_res / std::max(1.0, std::abs(lhs))});
    }
    report.finalize();
    return report;
}

VerificationReport verify_riemann_hypothesis(const Graph& g, double grouping_tol) {
    VerificationReport report;
    report.identity_name = "rh";
    report.tolerance = 1.0;
    const Spectrum rw = rw_spectrum(g, grouping_tol);
    const MSpectrum spectrum = m_spectrum(rw);
    const ZeroSet zeros = qw_zero_set(rw, g.n(), g.m());

    int unmatched_zeros = 0;
    // The |m - n| zeros added in case (i) lie on the line by construction and
    // have no eigenvalue of M; roots are matched against the RW part only.
    const auto& rw_part = zeros.rw_zeros;
    std::vector<char> covered(rw_part.size(), 0);
    for (const auto& e : spectrum.finite) {
        // (a) lambda_M >= 1/4 keeps the discriminant 1 - 4 lambda_M non-positive.
        const double below = std::max(0.0, 0.25 - e.value);
        report.add({Complex(e.value, 0.0), Complex(e.value, 0.0), Complex(0.25, 0.0), below, below / kCriticalBoundTol});

        // (b) roots of s^2 - s + lambda_M.
        const Complex disc = std::sqrt(Complex(1.0 - 4.0 * e.value, 0.0));
        for (const Complex root : {0.5 * (1.0 + disc), 0.5 * (1.0 - disc)}) {
            const double off_line = std::abs(root.real() - 0.5);
            report.add({root, Complex(root.real(), 0.0), Complex(0.5, 0.0), off_line, off_line / kZeroLocationTol});

            double best = INFINITY;
            std::size_t best_k = rw_part.size();
            for (std::size_t k = 0; k < rw_part.size(); ++k) {
                const auto& z = rw_part[k];
                if (z.gamma.is_infinite()) continue;
                const double d = std::abs(z.gamma.value() - root.imag());
                if (d < best) {
                    best = d;
                    best_k = k;
                }
            }
            const double scale = kZeroLocationTol * std::max(1.0, std::abs(root.imag()));
            if (best_k < rw_part.size() && best <= scale) covered[best_k] = 1;
            report.add({root, Complex(0.5, best_k < rw_part.size() ? rw_part[best_k].gamma.value() : NAN), root,
                        best, best / scale});
        }
    }
    for (std::size_t k = 0; k < rw_part.size(); ++k)
        if (!rw_part[k].gamma.is_infinite() && !covered[k]) ++unmatched_zeros;
    report.finalize();
    if (unmatched_zeros > 0) {
        report.passed = false;
        report.note = std::to_string(unmatched_zeros) + " finite zeros have no matching root of s^2 - s + lambda_M";
    } else {
        report.note = "residuals in units of the per-check tolerance";
    }
    return report;
}

}  // namespace graphzeta
