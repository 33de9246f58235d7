#include "graphzeta/errors.hpp"
#include "graphzeta/pool.hpp"
#include "graphzeta/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace graphzeta {
namespace {

using Expected = std::vector<std::pair<Complex, int>>;

void expect_spectrum(const Spectrum& s, const Expected& expected, double tol = 1e-10) {
    int total = 0;
    for (const auto& [value, mult] : expected) {
        EXPECT_EQ(s.multiplicity_near(value, tol), mult) << "value " << value;
        total += mult;
    }
    EXPECT_EQ(s.total_multiplicity(), total);
    EXPECT_EQ(s.distinct(), expected.size());
}

const double kSqrt3 = std::sqrt(3.0);

TEST(GroupMultiplicities, Examples) {
    const std::vector<Complex> raw = {1.0, 1.0 + 1e-12, -0.5};
    const Spectrum s = group_multiplicities(raw, 1e-9);
    expect_spectrum(s, {{1.0, 2}, {-0.5, 1}});
    EXPECT_EQ(s.entries()[0].value, Complex(-0.5));

    const std::vector<Complex> apart = {0.1, 0.2};
    expect_spectrum(group_multiplicities(apart, 1e-9), {{0.1, 1}, {0.2, 1}});
}

TEST(GroupMultiplicities, RepresentativeIsMean) {
    const std::vector<Complex> raw = {2.0, 2.0 + 4e-10, 2.0 + 8e-10};
    const Spectrum s = group_multiplicities(raw, 5e-10);
    ASSERT_EQ(s.distinct(), 1U);
    EXPECT_NEAR(s.entries()[0].value.real(), 2.0 + 4e-10, 1e-15);
    EXPECT_EQ(s.entries()[0].multiplicity, 3);
}

TEST(GroupMultiplicities, ChainsMergeAndCoincidentClustersThrow) {
    // Single linkage merges a chain whose ends are further apart than tol.
    const std::vector<Complex> chain = {0.0, 0.9, 1.8};
    expect_spectrum(group_multiplicities(chain, 1.0), {{0.9, 3}});

    // A ring linked step by step, with its centre as a separate cluster: the
    // two representatives coincide.
    std::vector<Complex> ring;
    for (int k = 0; k < 8; ++k) ring.push_back(std::polar(1.2, 2.0 * std::numbers::pi * k / 8));
    ring.emplace_back(0.0, 0.0);
    EXPECT_THROW(group_multiplicities(ring, 1.0), AmbiguousClustering);
}

TEST(GroupMultiplicities, ComplexValuesGroupByDistance) {
    const std::vector<Complex> raw = {{0.0, 1.0}, {1e-13, 1.0}, {0.0, -1.0}};
    expect_spectrum(group_multiplicities(raw), {{{0.0, 1.0}, 2}, {{0.0, -1.0}, 1}});
}

TEST(GroupMultiplicities, RejectsNonPositiveTolerance) {
    const std::vector<Complex> raw = {1.0};
    EXPECT_THROW(group_multiplicities(raw, 0.0), SpectralError);
}

TEST(RwSpectrum, K4UsesGrouping) { expect_spectrum(rw_spectrum(complete_graph(4)), {{1.0, 1}, {-1.0 / 3.0, 3}}); }

TEST(RwSpectrum, CompleteGraphs) {
    for (int n = 2; n <= 9; ++n) {
        const Spectrum s = rw_spectrum(complete_graph(n));
        if (n == 2)
            expect_spectrum(s, {{1.0, 1}, {-1.0, 1}});
        else
            expect_spectrum(s, {{1.0, 1}, {-1.0 / (n - 1), n - 1}});
    }
}

TEST(RwSpectrum, Cycles) {
    for (int n = 3; n <= 12; ++n) {
        std::vector<Complex> raw;
        for (int k = 0; k < n; ++k) raw.emplace_back(std::cos(2.0 * std::numbers::pi * k / n), 0.0);
        const Spectrum expected = group_multiplicities(raw, 1e-9);
        const auto match = match_spectra(rw_spectrum(cycle_graph(n)), expected, 1e-10);
        EXPECT_TRUE(match.matched) << "C_" << n << ": " << match.detail;
    }
}

TEST(RwSpectrum, Stars) {
    for (int n = 3; n <= 10; ++n) expect_spectrum(rw_spectrum(star_graph(n)), {{1.0, 1}, {0.0, n - 2}, {-1.0, 1}});
}

TEST(RwSpectrum, RealValuesInUnitInterval) {
    for (const auto& [name, g] : standard_pool(40, 8)) {
        const Spectrum s = rw_spectrum(g);
        EXPECT_EQ(s.total_multiplicity(), g.n()) << name;
        for (const auto& e : s.entries()) {
            EXPECT_EQ(e.value.imag(), 0.0);
            EXPECT_GE(e.value.real(), -1.0);
            EXPECT_LE(e.value.real(), 1.0);
        }
        EXPECT_EQ(s.multiplicity_near(1.0, 1e-9), 1) << name;
        EXPECT_EQ(s.multiplicity_near(-1.0, 1e-9) > 0, g.is_bipartite()) << name;
    }
}

TEST(RwSpectrum, AgreesWithGeneralEigensolveOfP) {
    for (const auto& [name, g] : standard_pool(30, 13)) {
        const Spectrum via_similarity = rw_spectrum(g);
        const Spectrum direct = general_spectrum(transition_matrix(g), 1e-9);
        const auto match = match_spectra(via_similarity, direct, 1e-10);
        EXPECT_TRUE(match.matched) << name << ": " << match.detail;
    }
}

TEST(GroverSpectrumDirect, Examples) {
    expect_spectrum(grover_spectrum_direct(complete_graph(2)), {{1.0, 1}, {-1.0, 1}});
    expect_spectrum(grover_spectrum_direct(cycle_graph(3)),
                    {{1.0, 2}, {{-0.5, kSqrt3 / 2}, 2}, {{-0.5, -kSqrt3 / 2}, 2}});
    expect_spectrum(grover_spectrum_direct(cycle_graph(4)), {{1.0, 2}, {{0, 1}, 2}, {-1.0, 2}, {{0, -1}, 2}});
}

TEST(GroverSpectrumDirect, UnitModulus) {
    SampleStream rng(31);
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_connected_graph(rng.uniform_int(3, 14), 0.35, rng);
        const Spectrum s = grover_spectrum_direct(g);
        for (const auto& e : s.entries()) EXPECT_NEAR(std::abs(e.value), 1.0, 1e-10);
    }
}

TEST(SpectralMap, Examples) {
    auto [a, b] = spectral_map(1.0);
    EXPECT_EQ(a, Complex(1.0));
    EXPECT_EQ(b, Complex(1.0));

    std::tie(a, b) = spectral_map(-0.5);
    EXPECT_NEAR(std::abs(a - Complex(-0.5, kSqrt3 / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(b - Complex(-0.5, -kSqrt3 / 2)), 0.0, 1e-15);

    std::tie(a, b) = spectral_map(0.0);
    EXPECT_EQ(a, Complex(0.0, 1.0));
    EXPECT_EQ(b, Complex(0.0, -1.0));
}

TEST(SpectralMap, OnUnitCircleAndClamped) {
    for (double x = -1.0; x <= 1.0; x += 0.01) {
        const auto [a, b] = spectral_map(x);
        EXPECT_NEAR(std::abs(a), 1.0, 1e-14);
        EXPECT_NEAR(std::abs(b), 1.0, 1e-14);
        EXPECT_EQ(a, std::conj(b));
    }
    EXPECT_EQ(spectral_map(1.0 + 5e-10).first, Complex(1.0));
    EXPECT_EQ(spectral_map(-1.0 - 5e-10).first, Complex(-1.0));
    EXPECT_THROW(spectral_map(1.0 + 1e-8), OutOfRangeError);
    EXPECT_THROW(spectral_map(-1.1), OutOfRangeError);
    EXPECT_THROW(spectral_map(NAN), OutOfRangeError);
}

TEST(JoukowskyAngle, Examples) {
    EXPECT_EQ(joukowsky_angle(1.0), 0.0);
    EXPECT_DOUBLE_EQ(joukowsky_angle(-1.0), std::numbers::pi);
    EXPECT_DOUBLE_EQ(joukowsky_angle(0.0), std::numbers::pi / 2);
    for (double x = -0.99; x < 1.0; x += 0.03) EXPECT_NEAR(std::cos(joukowsky_angle(x)), x, 1e-12);
    EXPECT_THROW(joukowsky_angle(2.0), OutOfRangeError);
}

TEST(GroverSpectrumViaMapping, CaseExamples) {
    const double im5 = std::sqrt(15.0) / 4.0;
    expect_spectrum(grover_spectrum_via_mapping(complete_graph(5)),
                    {{1.0, 7}, {-1.0, 5}, {{-0.25, im5}, 4}, {{-0.25, -im5}, 4}});
    expect_spectrum(grover_spectrum_via_mapping(cycle_graph(4)), {{1.0, 2}, {{0, 1}, 2}, {-1.0, 2}, {{0, -1}, 2}});
    expect_spectrum(grover_spectrum_via_mapping(star_graph(5)), {{1.0, 1}, {{0, 1}, 3}, {{0, -1}, 3}, {-1.0, 1}});
}

TEST(GroverSpectrumViaMapping, RemovalUnderflowIsDetected) {
    const Spectrum rw({{Complex(0.0), 2}}, kGroupingTol);
    EXPECT_THROW(grover_spectrum_from_rw(rw, 3, 2), RemovalUnderflow);
}

TEST(GroverSpectrumParts, Sizes) {
    for (const auto& [name, g] : standard_pool(20, 3)) {
        const Spectrum rw = rw_spectrum(g);
        EXPECT_EQ(grover_rw_part(rw).total_multiplicity(), 2 * g.n()) << name;
        EXPECT_EQ(grover_rwc_part(g.n(), g.m()).total_multiplicity(), 2 * std::abs(g.m() - g.n())) << name;
        EXPECT_EQ(grover_spectrum_from_rw(rw, g.n(), g.m()).total_multiplicity(), 2 * g.m()) << name;
    }
}

TEST(GroverSpectrumViaMapping, MatchesDirectOverPool) {
    for (const auto& [name, g] : standard_pool(100, 42)) {
        const auto match = match_spectra(grover_spectrum_direct(g), grover_spectrum_via_mapping(g), 1e-8);
        EXPECT_TRUE(match.matched) << name << ": " << match.detail;
    }
}

TEST(AngleSpectrum, CycleAngles) {
    const AngleSpectrum a = angle_spectrum(rw_spectrum(cycle_graph(4)));
    ASSERT_EQ(a.entries.size(), 3U);
    EXPECT_EQ(a.entries[0].theta, 0.0);
    EXPECT_NEAR(a.entries[1].theta, std::numbers::pi / 2, 1e-12);
    EXPECT_EQ(a.entries[1].multiplicity, 2);
    EXPECT_NEAR(a.entries[2].theta, std::numbers::pi, 1e-12);
    EXPECT_EQ(a.total_multiplicity(), 4);
}

TEST(MatchSpectra, DetectsDifferences) {
    const Spectrum a({{Complex(1.0), 2}, {Complex(-1.0), 1}}, 1e-9);
    const Spectrum b({{Complex(1.0), 1}, {Complex(-1.0), 2}}, 1e-9);
    EXPECT_FALSE(match_spectra(a, b).matched);
    const Spectrum c({{Complex(1.0 + 1e-7), 2}, {Complex(-1.0), 1}}, 1e-9);
    EXPECT_FALSE(match_spectra(a, c).matched);
    const Spectrum d({{Complex(1.0 + 1e-9), 2}, {Complex(-1.0), 1}}, 1e-9);
    const auto ok = match_spectra(a, d);
    EXPECT_TRUE(ok.matched);
    EXPECT_NEAR(ok.max_distance, 1e-9, 1e-15);
    EXPECT_FALSE(match_spectra(a, Spectrum({{Complex(1.0), 2}}, 1e-9)).matched);
}

}  // namespace
}  // namespace graphzeta
