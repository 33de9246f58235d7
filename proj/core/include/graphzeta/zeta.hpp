#pragma once

#include "graphzeta/graph.hpp"
#include "graphzeta/spectral.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace graphzeta {

// Zeta-type determinants. All evaluate at a single complex point and build
// the needed operators from scratch.

/// Ihara-Bass: (1 - u^2)^{m-n} det(I - uA + u^2 (D - I)).
/// Throws PoleAtU for trees at u^2 = 1.
Complex ihara_reciprocal_bass(const Graph& g, Complex u);
/// det(I - u B) with B = edge_matrix(g), the edge-matrix form of the
/// reciprocal Ihara zeta.
Complex ihara_reciprocal_edge(const Graph& g, Complex u);
/// det(I - u U), reciprocal of the Grover-walk zeta.
Complex grover_zeta_reciprocal(const Graph& g, Complex u);
/// (1 - u^2)^{m-n} det((1 + u^2) I - 2u P). Throws PoleAtU when m < n and
/// u^2 is within 1e-12 of 1.
Complex konno_sato_rhs(const Graph& g, Complex u);

/// Number of closed backtrack-free arc sequences of length r, from
/// tr(B^r) with B = edge_matrix(g). For r <= 6 and 2m <= 60 the trace is cross-checked against
/// count_reduced_cycles_by_enumeration and OracleMismatch is thrown on
/// disagreement.
std::int64_t reduced_cycle_count(const Graph& g, int r);
/// Exhaustive depth-first enumeration over the graph itself.
std::int64_t count_reduced_cycles_by_enumeration(const Graph& g, int r);

struct MEntry {
    double value;
    int multiplicity;
};

/// Eigenvalues 1 / (2 (1 - lambda_P)) of M = (1/2)(I - P)^{-1}, kept only in
/// the eigenvalue sense. lambda_P = 1 goes to infinite_multiplicity.
struct MSpectrum {
    std::vector<MEntry> finite;  // ascending
    int infinite_multiplicity = 0;
    int total_multiplicity() const;
};

MSpectrum m_spectrum(const Spectrum& rw);
MSpectrum m_spectrum(const Graph& g, double tol = kGroupingTol);

/// Imaginary part gamma of a critical-line point 1/2 + i gamma, or the point
/// at 1/2 + i(+inf).
class Ordinate {
public:
    static Ordinate finite(double gamma) { return Ordinate(gamma, false); }
    static Ordinate infinity() { return Ordinate(0.0, true); }

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws ZetaError for the infinite point.
    double value() const;

    friend bool operator==(const Ordinate&, const Ordinate&) = default;
    /// Finite values ascending, infinity last.
    friend bool operator<(const Ordinate& a, const Ordinate& b) {
        if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
        return a.gamma_ < b.gamma_;
    }

private:
    Ordinate(double gamma, bool infinite) : gamma_(gamma), infinite_(infinite) {}
    double gamma_;
    bool infinite_;
};

/// rho(theta) = 1/2 + (i/2) cot(theta/2) for theta in (0, 2 pi); the point at
/// infinity for theta = 0. Throws OutOfRangeError outside [0, 2 pi).
Ordinate rho_of_theta(double theta);

struct ZeroEntry {
    Ordinate gamma;
    int multiplicity;
};

enum class EdgeVertexCase { MoreEdges, Equal, FewerEdges };
std::string case_tag(EdgeVertexCase c);

/// Critical-line zeros of the quantum-walk completed zeta.
struct ZeroSet {
    std::vector<ZeroEntry> rw_zeros;   // from Spec(P): 2n in total
    std::vector<ZeroEntry> rwc_zeros;  // [inf]^{|m-n|}, [0]^{|m-n|}
    std::vector<ZeroEntry> zeros;      // combined per case: 2m in total
    EdgeVertexCase edge_case = EdgeVertexCase::Equal;

    int total_multiplicity() const;
    /// Multiplicity recorded for gamma in `zeros` (exact match on the
    /// infinite point, absolute `radius` otherwise).
    int multiplicity_of(Ordinate gamma, double radius = 1e-10) const;
};

ZeroSet qw_zero_set(const Spectrum& rw, int n, int m);
ZeroSet qw_zero_set(const Graph& g, double tol = kGroupingTol);

struct LambdaValue {
    Complex value;                   // product over finite eigenvalues of M
    int infinite_factor_multiplicity;  // divergent factors left out
};

/// det(M - s(1-s) I) evaluated as the product of (lambda_M - s(1-s))^l over
/// finite lambda_M.
LambdaValue lambda_qw_eval(const MSpectrum& spectrum, Complex s);
LambdaValue lambda_qw_eval(const Graph& g, Complex s);

struct VerificationSample {
    Complex point;
    Complex lhs;
    Complex rhs;
    double abs_residual;
    double rel_residual;
};

struct VerificationReport {
    std::string identity_name;
    std::vector<VerificationSample> samples;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;

    void add(VerificationSample s);
    /// passed = max_rel_residual <= tolerance.
    void finalize();
};

inline constexpr double kIdentityTol = 1e-8;
inline constexpr double kZeroLocationTol = 1e-10;
inline constexpr double kCriticalBoundTol = 1e-12;

/// det(I - uU) against the Konno-Sato right-hand side at seeded points of the
/// disk |u| <= radius. Relative residual |lhs - rhs| / max(1, |lhs|, |rhs|).
VerificationReport verify_konno_sato(const Graph& g, int num_samples = 20, double radius = 0.5,
                                     double tol = kIdentityTol, std::uint64_t seed = 42);
/// Ihara-Bass against the edge-matrix determinant, same sampling.
VerificationReport verify_ihara_bass(const Graph& g, int num_samples = 20, double radius = 0.5,
                                     double tol = kIdentityTol, std::uint64_t seed = 42);
/// Direct eigensolve of U against the spectrum assembled from Spec(P).
VerificationReport verify_spectral_map(const Graph& g, double grouping_tol = kGroupingTol,
                                       double radius = kIdentityTol);
/// Lambda(s) against Lambda(1 - s) on [-2, 3] x [-3i, 3i].
VerificationReport verify_functional_equation(const Graph& g, int num_samples = 100, std::uint64_t seed = 42,
                                              double grouping_tol = kGroupingTol);
/// Every finite lambda_M >= 1/4 - 1e-12, and every root of s^2 - s + lambda_M
/// has real part 1/2 within 1e-10 and appears in the zero set. Residuals are
/// reported in units of the tolerance of their own check, so the report
/// tolerance is 1.
VerificationReport verify_riemann_hypothesis(const Graph& g, double grouping_tol = kGroupingTol);

}  // namespace graphzeta
