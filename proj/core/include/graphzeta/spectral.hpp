#pragma once

#include "graphzeta/graph.hpp"
#include "graphzeta/walk_operators.hpp"

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphzeta {

using Complex = std::complex<double>;

/// Default absolute tolerance for merging eigenvalues into one multiplicity.
inline constexpr double kGroupingTol = 1e-9;
/// Eigenvalues of P within this distance of +-1 are set to exactly +-1;
/// anything further outside [-1, 1] is rejected.
inline constexpr double kClampTol = 1e-9;

struct SpectrumEntry {
    Complex value;
    int multiplicity;
};

/// Eigenvalue multiset: distinct values (further apart than `tol`) with their
/// multiplicities, ordered by real part then imaginary part.
class Spectrum {
public:
    Spectrum() = default;
    Spectrum(std::vector<SpectrumEntry> entries, double tol);

    const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
    double tol() const noexcept { return tol_; }
    std::size_t distinct() const noexcept { return entries_.size(); }
    int total_multiplicity() const;

    /// Multiplicity of the entry within `radius` of z (0 when absent).
    int multiplicity_near(Complex z, double radius) const;

    /// Every value repeated by its multiplicity.
    std::vector<Complex> expanded() const;

private:
    std::vector<SpectrumEntry> entries_;
    double tol_ = kGroupingTol;
};

/// Single-linkage clustering of raw eigenvalues at distance `tol`. Each
/// cluster is represented by the mean of its members. Throws
/// AmbiguousClustering if two resulting representatives are within `tol`.
Spectrum group_multiplicities(std::span<const Complex> raw, double tol = kGroupingTol);

/// Spectrum of a real symmetric matrix.
Spectrum symmetric_spectrum(const RealMatrix& m, double tol = kGroupingTol);
/// Spectrum of a general real matrix, no structure assumed.
Spectrum general_spectrum(const RealMatrix& m, double tol = kGroupingTol);

/// Eigenvalues of the transition matrix P, computed through the symmetric
/// similarity D^{-1/2} A D^{-1/2}. Values are real and lie in [-1, 1].
Spectrum rw_spectrum(const Graph& g, double tol = kGroupingTol);

/// Eigenvalues of the Grover matrix from a general eigensolve.
Spectrum grover_spectrum_direct(const Graph& g, double tol = kGroupingTol);

/// lambda +- i sqrt(1 - lambda^2), first element with non-negative imaginary
/// part. Arguments within kClampTol outside [-1, 1] are clamped.
std::pair<Complex, Complex> spectral_map(double lambda_p);

/// arccos(lambda_p) in [0, pi], with the same clamping as spectral_map.
double joukowsky_angle(double lambda_p);

/// The 2n eigenvalues of U inherited from P: both images of every lambda_P.
Spectrum grover_rw_part(const Spectrum& rw);
/// [1]^{|m-n|} and [-1]^{|m-n|}; empty when m = n.
Spectrum grover_rwc_part(int n, int m, double tol = kGroupingTol);

/// Spec(U) assembled from Spec(P):
///   m > n: RW part plus [1]^{m-n}, [-1]^{m-n};
///   m = n: RW part;
///   m < n: RW part minus n-m copies each of 1 and -1.
Spectrum grover_spectrum_from_rw(const Spectrum& rw, int n, int m);
Spectrum grover_spectrum_via_mapping(const Graph& g, double tol = kGroupingTol);

struct AngleEntry {
    double theta;
    int multiplicity;
};

/// One angle in [0, pi] per conjugate pair e^{+-i theta}, ascending.
struct AngleSpectrum {
    std::vector<AngleEntry> entries;
    int total_multiplicity() const;
};

AngleSpectrum angle_spectrum(const Spectrum& rw);

struct SpectrumMatch {
    bool matched = false;
    double max_distance = 0.0;
    std::string detail;
};

/// Greedy nearest-pair matching of the expanded multisets, accepting pairs
/// within `radius`, followed by a check that matched distinct values carry
/// identical multiplicities.
SpectrumMatch match_spectra(const Spectrum& a, const Spectrum& b, double radius = 1e-8);

}  // namespace graphzeta
