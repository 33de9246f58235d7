#include "graphzeta/spectral.hpp"

#include "graphzeta/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace graphzeta {

namespace {

auto sort_key(Complex z, double tol) {
    return std::make_tuple(std::round(z.real() / tol), std::round(z.imag() / tol), z.real(), z.imag());
}

std::string fmt(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

double clamp_unit(double lambda_p) {
    if (!std::isfinite(lambda_p) || std::abs(lambda_p) > 1.0 + kClampTol) {
        std::ostringstream os;
        os.precision(17);
        os << "random-walk eigenvalue " << lambda_p << " lies outside [-1, 1]";
        throw OutOfRangeError(os.str());
    }
    if (lambda_p >= 1.0 - kClampTol) return 1.0;
    if (lambda_p <= -1.0 + kClampTol) return -1.0;
    return lambda_p;
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

}  // namespace

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, double tol) : entries_(std::move(entries)), tol_(tol) {
    std::sort(entries_.begin(), entries_.end(),
              [tol](const SpectrumEntry& a, const SpectrumEntry& b) { return sort_key(a.value, tol) < sort_key(b.value, tol); });
}

int Spectrum::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
}

int Spectrum::multiplicity_near(Complex z, double radius) const {
    for (const auto& e : entries_)
        if (std::abs(e.value - z) <= radius) return e.multiplicity;
    return 0;
}

std::vector<Complex> Spectrum::expanded() const {
    std::vector<Complex> out;
    for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    return out;
}

Spectrum group_multiplicities(std::span<const Complex> raw, double tol) {
    if (!(tol > 0.0)) throw SpectralError("grouping tolerance must be positive");
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a].real() < raw[b].real(); });

    DisjointSets sets(raw.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (raw[order[j]].real() - raw[order[i]].real() > tol) break;
            if (std::abs(raw[order[j]] - raw[order[i]]) <= tol) sets.unite(order[i], order[j]);
        }
    }

    std::vector<std::size_t> root_slot(raw.size(), raw.size());
    std::vector<Complex> sums;
    std::vector<int> counts;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto r = sets.find(i);
        if (root_slot[r] == raw.size()) {
            root_slot[r] = sums.size();
            sums.emplace_back(0.0, 0.0);
            counts.push_back(0);
        }
        sums[root_slot[r]] += raw[i];
        ++counts[root_slot[r]];
    }

    std::vector<SpectrumEntry> entries;
    entries.reserve(sums.size());
    for (std::size_t k = 0; k < sums.size(); ++k)
        entries.push_back({sums[k] / static_cast<double>(counts[k]), counts[k]});

    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b)
            if (std::abs(entries[a].value - entries[b].value) <= tol)
                throw AmbiguousClustering("clusters at " + fmt(entries[a].value) + " and " + fmt(entries[b].value) +
                                          " are within the grouping tolerance");
    return Spectrum(std::move(entries), tol);
}

Spectrum symmetric_spectrum(const RealMatrix& m, double tol) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw EigensolveFailure("symmetric eigensolve did not converge");
    std::vector<Complex> raw;
    raw.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) raw.emplace_back(solver.eigenvalues()(i), 0.0);
    return group_multiplicities(raw, tol);
}

Spectrum general_spectrum(const RealMatrix& m, double tol) {
    Eigen::EigenSolver<RealMatrix> solver(m, false);
    if (solver.info() != Eigen::Success) throw EigensolveFailure("general eigensolve did not converge");
    const auto& values = solver.eigenvalues();
    std::vector<Complex> raw(values.data(), values.data() + values.size());
    return group_multiplicities(raw, tol);
}

Spectrum rw_spectrum(const Graph& g, double tol) {
    const auto n = static_cast<Eigen::Index>(g.n());
    RealMatrix normalized = RealMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
        normalized(u, v) = w;
        normalized(v, u) = w;
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(normalized, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw EigensolveFailure("transition-matrix eigensolve did not converge");
    std::vector<Complex> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) raw.emplace_back(clamp_unit(solver.eigenvalues()(i)), 0.0);
    return group_multiplicities(raw, tol);
}

Spectrum grover_spectrum_direct(const Graph& g, double tol) {
    const RealMatrix u = grover_matrix(g);
    std::vector<Complex> raw;
    Eigen::EigenSolver<RealMatrix> solver(u, false);
    if (solver.info() == Eigen::Success) {
        const auto& values = solver.eigenvalues();
        raw.assign(values.data(), values.data() + values.size());
    } else {
        // The real Schur iteration can stall on these near-permutation
        // matrices; the complex Schur form does not.
        Eigen::ComplexEigenSolver<ComplexMatrix> complex_solver(u.cast<Complex>(), false);
        if (complex_solver.info() != Eigen::Success) throw EigensolveFailure("Grover-matrix eigensolve did not converge");
        const auto& values = complex_solver.eigenvalues();
        raw.assign(values.data(), values.data() + values.size());
    }
    for (const auto& z : raw)
        if (std::abs(std::abs(z) - 1.0) > 1e-10)
            throw EigensolveFailure("Grover eigenvalue " + fmt(z) + " is off the unit circle");
    return group_multiplicities(raw, tol);
}

std::pair<Complex, Complex> spectral_map(double lambda_p) {
    const double c = clamp_unit(lambda_p);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    return {Complex(c, s), Complex(c, -s)};
}

double joukowsky_angle(double lambda_p) { return std::acos(clamp_unit(lambda_p)); }

Spectrum grover_rw_part(const Spectrum& rw) {
    std::vector<Complex> raw;
    for (const auto& e : rw.entries()) {
        const auto [plus, minus] = spectral_map(e.value.real());
        raw.insert(raw.end(), static_cast<std::size_t>(e.multiplicity), plus);
        raw.insert(raw.end(), static_cast<std::size_t>(e.multiplicity), minus);
    }
    return group_multiplicities(raw, rw.tol());
}

Spectrum grover_rwc_part(int n, int m, double tol) {
    const int k = std::abs(m - n);
    if (k == 0) return Spectrum({}, tol);
    return Spectrum({{Complex(-1.0, 0.0), k}, {Complex(1.0, 0.0), k}}, tol);
}

Spectrum grover_spectrum_from_rw(const Spectrum& rw, int n, int m) {
    const double tol = rw.tol();
    auto entries = grover_rw_part(rw).entries();
    const int excess = m - n;
    for (const double sign : {1.0, -1.0}) {
        const Complex target(sign, 0.0);
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const SpectrumEntry& e) { return std::abs(e.value - target) <= tol; });
        if (excess > 0) {
            if (it == entries.end())
                entries.push_back({target, excess});
            else
                it->multiplicity += excess;
        } else if (excess < 0) {
            if (it == entries.end() || it->multiplicity < -excess)
                throw RemovalUnderflow("cannot remove " + std::to_string(-excess) + " copies of " + fmt(target) +
                                       " from the random-walk part of Spec(U)");
            it->multiplicity += excess;
            if (it->multiplicity == 0) entries.erase(it);
        }
    }
    return Spectrum(std::move(entries), tol);
}

Spectrum grover_spectrum_via_mapping(const Graph& g, double tol) {
    return grover_spectrum_from_rw(rw_spectrum(g, tol), g.n(), g.m());
}

int AngleSpectrum::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

AngleSpectrum angle_spectrum(const Spectrum& rw) {
    AngleSpectrum out;
    for (const auto& e : rw.entries()) out.entries.push_back({joukowsky_angle(e.value.real()), e.multiplicity});
    std::sort(out.entries.begin(), out.entries.end(), [](const AngleEntry& a, const AngleEntry& b) { return a.theta < b.theta; });
    return out;
}

SpectrumMatch match_spectra(const Spectrum& a, const Spectrum& b, double radius) {
    SpectrumMatch result;
    const auto xs = a.expanded();
    const auto ys = b.expanded();
    if (xs.size() != ys.size()) {
        result.detail = "sizes differ: " + std::to_string(xs.size()) + " vs " + std::to_string(ys.size());
        return result;
    }

    struct Candidate {
        double distance;
        std::size_t i;
        std::size_t j;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
            if (const double d = std::abs(xs[i] - ys[j]); d <= radius) candidates.push_back({d, i, j});
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& p, const Candidate& q) {
        return std::tie(p.distance, p.i, p.j) < std::tie(q.distance, q.i, q.j);
    });

    std::vector<char> used_x(xs.size(), 0);
    std::vector<char> used_y(ys.size(), 0);
    std::size_t matched = 0;
    for (const auto& c : candidates) {
        if (used_x[c.i] || used_y[c.j]) continue;
        used_x[c.i] = used_y[c.j] = 1;
        result.max_distance = std::max(result.max_distance, c.distance);
        ++matched;
    }
    if (matched != xs.size()) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (!used_x[i]) {
                result.detail = "no partner within radius for " + fmt(xs[i]);
                break;
            }
        return result;
    }

    for (const auto& e : a.entries()) {
        const int other = b.multiplicity_near(e.value, radius);
        if (other != e.multiplicity) {
            result.detail = "multiplicity of " + fmt(e.value) + " is " + std::to_string(e.multiplicity) + " vs " +
                            std::to_string(other);
            return result;
        }
    }
    result.matched = true;
    return result;
}

}  // namespace graphzeta
