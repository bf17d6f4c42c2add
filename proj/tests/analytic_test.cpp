#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qbcap/analytic.hpp"
#include "qbcap/battery.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/published.hpp"
#include "qbcap/relativistic.hpp"
#include "support.hpp"

using namespace qbcap;
using namespace qbcap::analytic;
using channels::kAllNoise;

namespace {

constexpr double kPi = std::numbers::pi;

double pipeline_capacity(Region r, Noise n, double p, double ea, double eb, double k) {
    relativistic::Scenario s{.region = r,
                             .p = p,
                             .eta_a = relativistic::HawkingParam(ea),
                             .eta_b = relativistic::HawkingParam(eb),
                             .channel = channels::make_channel(n, k)};
    return battery::capacity_zz(
        linalg::hermitian_eigenvalues(relativistic::scenario_state(s, relativistic::Path::Pipeline)));
}

// Bloch coefficients written out per region, then the channel factors,
// fed to the X-state spectrum. Shares nothing with the library's templates.
std::array<double, 4> oracle_spectrum(Region r, Noise n, double p, double ea, double eb, double k) {
    const double sa = std::sin(ea), ca = std::cos(ea), sb = std::sin(eb), cb = std::cos(eb);
    double a3, b3, c1, c2, c3;
    switch (r) {
    case Region::AIBI:
        a3 = -sa * sa, b3 = -sb * sb, c1 = p * ca * cb, c2 = p * ca * cb;
        c3 = sa * sa * sb * sb - p * ca * ca * cb * cb;
        break;
    case Region::AIBII:
        a3 = -sa * sa, b3 = cb * cb, c1 = p * ca * sb, c2 = -p * ca * sb;
        c3 = p * ca * ca * sb * sb - sa * sa * cb * cb;
        break;
    case Region::AIIBI:
        a3 = ca * ca, b3 = -sb * sb, c1 = p * sa * cb, c2 = -p * sa * cb;
        c3 = p * sa * sa * cb * cb - ca * ca * sb * sb;
        break;
    default:
        a3 = ca * ca, b3 = cb * cb, c1 = p * sa * sb, c2 = p * sa * sb;
        c3 = ca * ca * cb * cb - p * sa * sa * sb * sb;
        break;
    }
    double fx = 1, fy = 1, fz = 1;
    if (n == Noise::PhaseFlip) fx = fy = 1 - 2 * k;
    if (n == Noise::BitFlip) fy = fz = 1 - 2 * k;
    if (n == Noise::Depolarizing) fx = fy = fz = 1 - 4 * k / 3;
    return oracle::x_state_spectrum(fz * a3, fz * b3, fx * fx * c1, fy * fy * c2, fz * fz * c3);
}

} // namespace

TEST(Analytic, SpecExampleEigenvalues) {
    const auto set = analytic_eigenvalues(Region::AIBI, Noise::None, 0.3, 0.0, kPi / 6);
    EXPECT_NEAR(set.sorted[0], 0.13125, 1e-12);
    EXPECT_NEAR(set.sorted[1], 0.25 * (1.225 - std::sqrt(0.3325)), 1e-12);
    EXPECT_NEAR(set.sorted[1], 0.16209297, 1e-8);
    EXPECT_NEAR(set.sorted[2], 0.25625, 1e-12);
    EXPECT_NEAR(set.sorted[3], 0.45040703, 1e-8);
    EXPECT_NEAR(analytic_capacity(Region::AIBI, Noise::None, 0.3, 0.0, kPi / 6), 0.25 + std::sqrt(0.3325), 1e-12);
    EXPECT_NEAR(analytic_capacity(Region::AIBI, Noise::None, 0.3, 0.0, kPi / 6), 0.826628, 5e-7);
}

TEST(Analytic, MaximalEntanglementPlateau) {
    for (double ea : {0.0, 0.7, 1.2, kPi / 2}) {
        EXPECT_NEAR(analytic_capacity(Region::AIBI, Noise::None, 1.0, ea, 0.5236), 2.0, 1e-12);
    }
}

TEST(Analytic, DepolarizingDeathAndRecharge) {
    for (Region r : relativistic::kAllRegions) {
        for (double ea : {0.0, 0.6, 1.5}) {
            EXPECT_NEAR(analytic_capacity(r, Noise::Depolarizing, 0.3, ea, kPi / 6, 0.75), 0.0, 1e-12);
        }
    }
    EXPECT_GT(analytic_capacity(Region::AIBI, Noise::Depolarizing, 0.3, 0.0, kPi / 6, 1.0), 0.05);
}

TEST(Analytic, BitFlipHalfDecayClosedForm) {
    for (double ea : {0.0, 0.3, 0.9, 1.4}) {
        EXPECT_NEAR(analytic_capacity(Region::AIBI, Noise::BitFlip, 0.3, ea, kPi / 6, 0.5),
                    3.0 * std::sqrt(3.0) / 10.0 * std::cos(ea), 1e-12);
    }
}

TEST(Analytic, MatchesIndependentXStateOracle) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 400; ++trial) {
        const double p = unit(rng), ea = unit(rng) * kPi / 2, eb = unit(rng) * kPi / 2, k = unit(rng);
        for (Region r : relativistic::kAllRegions) {
            for (Noise n : kAllNoise) {
                const auto set = analytic_eigenvalues(r, n, p, ea, eb, k);
                const auto oracle = oracle_spectrum(r, n, p, ea, eb, k);
                for (std::size_t i = 0; i < 4; ++i) {
                    EXPECT_NEAR(set.sorted[i], oracle[i], 1e-13);
                }
            }
        }
    }
}

TEST(Analytic, MatchesPipeline) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double p = unit(rng), ea = unit(rng) * kPi / 2, eb = unit(rng) * kPi / 2, k = unit(rng);
        for (Region r : relativistic::kAllRegions) {
            for (Noise n : kAllNoise) {
                EXPECT_NEAR(analytic_capacity(r, n, p, ea, eb, k), pipeline_capacity(r, n, p, ea, eb, k), 1e-12);
            }
        }
    }
}

TEST(Analytic, PairingFlagTracksLabelledCapacity) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double p = unit(rng), ea = unit(rng) * kPi / 2, k = unit(rng);
        for (Region r : relativistic::kAllRegions) {
            for (Noise n : kAllNoise) {
                const auto set = analytic_eigenvalues(r, n, p, ea, kPi / 6, k);
                const double sorted = battery::capacity_zz(set.sorted);
                if (set.pairing_holds) {
                    EXPECT_NEAR(set.labeled_capacity(), sorted, 1e-11);
                } else {
                    EXPECT_LT(set.labeled_capacity(), sorted);
                }
                if (set.ordering_holds) {
                    EXPECT_TRUE(set.pairing_holds);
                }
            }
        }
    }
}

TEST(Analytic, NoiselessLabelsNeedNotAscend) {
    // At p = 0, eta_a = pi/2 the labelled lam1 exceeds lam2, yet the top pair is still {lam2, lam3}.
    const auto set = analytic_eigenvalues(Region::AIBI, Noise::None, 0.0, kPi / 2, kPi / 6);
    EXPECT_FALSE(set.ordering_holds);
    EXPECT_TRUE(set.pairing_holds);
}

TEST(Analytic, DomainErrors) {
    EXPECT_THROW(analytic_eigenvalues(Region::AIBI, Noise::None, 1.2, 0.0, 0.0), DomainError);
    EXPECT_THROW(analytic_eigenvalues(Region::AIBI, Noise::BitFlip, 0.3, 0.0, 0.0, -0.5), DomainError);
    EXPECT_NO_THROW(analytic_eigenvalues(Region::AIBI, Noise::None, 0.3, 0.0, 0.0, -0.5));
}

TEST(Published, DepolarizingA2B2CoefficientIsAnErratum) {
    namespace pub = published;
    const auto& f = pub::kCapacityFormulas.back();
    ASSERT_EQ(f.label, "C_dep(A2B2)");
    EXPECT_EQ(f.coefficient_text, "27/100");
    const double derived = pub::derived_coefficient(f.noise, f.region, 0.3, kPi / 6);
    EXPECT_NEAR(derived, 9.0 / 100.0, 1e-15);
    double printed_worst = 0.0, derived_worst = 0.0;
    for (double ea : {0.0, 0.4, 0.8, 1.2, 1.5}) {
        for (double k : {0.0, 0.3, 0.6, 0.9}) {
            const double oracle = pipeline_capacity(f.region, f.noise, 0.3, ea, kPi / 6, k);
            printed_worst = std::max(printed_worst, std::abs(pub::printed_capacity(f, 0.3, ea, k) - oracle));
            derived_worst = std::max(derived_worst, std::abs(pub::capacity(f, ea, k, derived) - oracle));
        }
    }
    EXPECT_GT(printed_worst, 1e-3);
    EXPECT_LT(derived_worst, 1e-12);
}

TEST(Published, OtherCapacityFormulasMatchPipeline) {
    namespace pub = published;
    for (const auto& f : pub::kCapacityFormulas) {
        if (f.label == "C_dep(A2B2)") continue;
        for (double ea : {0.0, 0.5, 1.0, 1.5}) {
            for (double k : {0.0, 0.2, 0.5, 0.8, 1.0}) {
                const double kk = f.noise == Noise::None ? 0.0 : k;
                EXPECT_NEAR(pub::printed_capacity(f, 0.3, ea, kk), pipeline_capacity(f.region, f.noise, 0.3, ea, kPi / 6, kk),
                            1e-12)
                    << f.label << " eta=" << ea << " k=" << k;
            }
        }
    }
}

TEST(Published, BlochFormErrataAreDetectable) {
    namespace pub = published;
    const double ea = 0.4, eb = kPi / 6, k = 0.2, p = 0.3;
    auto deviation = [&](Region r, Noise n, std::size_t term) {
        relativistic::Scenario s{.region = r,
                                 .p = p,
                                 .eta_a = relativistic::HawkingParam(ea),
                                 .eta_b = relativistic::HawkingParam(eb),
                                 .channel = channels::make_channel(n, k)};
        const auto actual = pub::terms(BlochTwoQubit::from_matrix(relativistic::scenario_state(s, relativistic::Path::Pipeline)));
        return std::abs(pub::terms(pub::bloch_form(r, n, p, ea, eb, k))[term] - actual[term]);
    };
    EXPECT_GT(deviation(Region::AIBII, Noise::BitFlip, 4), 1e-3);
    EXPECT_GT(deviation(Region::AIBII, Noise::Depolarizing, 4), 1e-3);
    EXPECT_GT(deviation(Region::AIIBII, Noise::Depolarizing, 0), 1e-3);
    EXPECT_LT(deviation(Region::AIBI, Noise::BitFlip, 4), 1e-14);
    EXPECT_LT(deviation(Region::AIIBI, Noise::PhaseFlip, 2), 1e-14);
}
