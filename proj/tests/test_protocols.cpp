#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcap/capacities.hpp"
#include "qcap/channel.hpp"
#include "qcap/protocols.hpp"
#include "qcap/qmath.hpp"
#include "qcap/rng.hpp"
#include "qcap/shannon.hpp"
#include "test_support.hpp"

using namespace qcap;

namespace {

constexpr double kSdTwoThirds = 0.2075187496394219;  // 2 - H4(1/2)
constexpr double kCeD3FourTenths = 1.1643263241948508;  // 2 log2 3 - H9(1 - 0.4*8/9)

double entrywise_diff(const DiscreteChannel& a, const DiscreteChannel& b) {
    REQUIRE(a.inputs() == b.inputs());
    REQUIRE(a.outputs() == b.outputs());
    double dev = 0.0;
    for (std::size_t k = 0; k < a.matrix().size(); ++k)
        dev = std::max(dev, std::abs(a.matrix()[k] - b.matrix()[k]));
    return dev;
}

double choi_diff(const QuantumChannel& a, const QuantumChannel& b) {
    return max_abs_diff(choi(a).state().matrix(), choi(b).state().matrix());
}

QuantumChannel amplitude_damping(double gamma) {
    ComplexMatrix k0(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    ComplexMatrix k1(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return QuantumChannel(2, 2, {k0, k1});
}

}  // namespace

TEST_CASE("generalized paulis for the qubit") {
    // index order a*d+b: I, Z, X, XZ
    CHECK(max_abs_diff(generalized_pauli(2, 0, 0), ComplexMatrix::identity(2)) <= 1e-15);

    ComplexMatrix z(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    CHECK(max_abs_diff(generalized_pauli(2, 0, 1), z) <= 1e-12);

    ComplexMatrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    CHECK(max_abs_diff(generalized_pauli(2, 1, 0), x) <= 1e-12);
    CHECK(max_abs_diff(generalized_pauli(2, 1, 1), x * z) <= 1e-12);

    CHECK_THROWS_AS(generalized_pauli(2, 2, 0), std::invalid_argument);
}

TEST_CASE("generalized paulis are an orthogonal unitary basis") {
    for (std::size_t d : {2u, 3u, 5u}) {
        std::vector<ComplexMatrix> us;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) us.push_back(generalized_pauli(d, a, b));
        for (std::size_t i = 0; i < us.size(); ++i) {
            // unitarity
            CHECK(max_abs_diff(us[i].adjoint() * us[i], ComplexMatrix::identity(d)) <= 1e-12);
            for (std::size_t j = 0; j < us.size(); ++j) {
                const Complex overlap = (us[i].adjoint() * us[j]).trace();
                const double expected = i == j ? double(d) : 0.0;
                CHECK(std::abs(overlap - expected) <= 1e-12);
            }
        }
    }
}

TEST_CASE("pauli order divides d up to phase") {
    const ComplexMatrix u = generalized_pauli(3, 1, 2);
    const ComplexMatrix cube = u * u * u;
    // cube = phase * I
    const Complex phase = cube(0, 0);
    CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-12);
    ComplexMatrix expected = ComplexMatrix::identity(3);
    expected *= phase;
    CHECK(max_abs_diff(cube, expected) <= 1e-12);
}

TEST_CASE("bell basis is orthonormal") {
    for (std::size_t d : {2u, 3u, 4u, 5u}) {
        const BellBasis basis(d);
        const std::size_t n = d * d;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Complex gram = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    gram += std::conj(basis.states()[i].amplitudes()[k]) *
                            basis.states()[j].amplitudes()[k];
                CHECK(std::abs(gram - (i == j ? 1.0 : 0.0)) <= 1e-10);
            }
    }
}

TEST_CASE("superdense coding over the identity channel is noiseless") {
    const QuantumChannel id(2, 2, {ComplexMatrix::identity(2)});
    const DiscreteChannel induced = superdense_induced(id);
    CHECK(entrywise_diff(induced, dary_symmetric(4, 0.0)) <= 1e-12);
    CHECK(ba_capacity(induced, 1e-9) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("superdense coding maps depolarizing to the symmetric channel") {
    for (std::size_t d : {2u, 3u}) {
        for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            CHECK(entrywise_diff(superdense_induced(depolarizing(d, x)),
                                 dary_symmetric(d * d, x)) <= 1e-9);
        }
    }
}

TEST_CASE("superdense coding maps erasure to classical erasure") {
    for (double x : {0.0, 0.3, 0.5, 1.0}) {
        CHECK(entrywise_diff(superdense_induced(erasure(2, x)), classical_erasure(4, x)) <=
              1e-9);
    }
    CHECK(std::abs(c_sd(erasure(2, 0.5)) - 1.0) <= 1e-6);
}

TEST_CASE("superdense coding rejects other output shapes") {
    Rng rng(3);
    CHECK_THROWS_AS(superdense_induced(test::random_channel(2, 4, 2, rng)),
                    std::invalid_argument);
}

TEST_CASE("superdense capacity of the paper channels") {
    CHECK(std::abs(c_sd(depolarizing(2, 2.0 / 3.0)) - kSdTwoThirds) <= 1e-6);
    CHECK(std::abs(c_sd(depolarizing(2, 2.0 / 3.0)) - 0.2075) <= 5e-5);
    for (double x : {0.0, 0.4, 0.8}) {
        CHECK(std::abs(c_sd(dephasing(x)) - ce_dephasing(x)) <= 1e-6);
    }
}

TEST_CASE("teleportation over a noiseless arm is the identity") {
    const QuantumChannel rebuilt = teleport_induced(dary_symmetric(4, 0.0), 2);
    const QuantumChannel id(2, 2, {ComplexMatrix::identity(2)});
    CHECK(choi_diff(rebuilt, id) <= 1e-9);
}

TEST_CASE("teleportation over the symmetric channel is depolarizing") {
    for (std::size_t d : {2u, 3u}) {
        for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const QuantumChannel rebuilt = teleport_induced(dary_symmetric(d * d, x), d);
            CHECK(choi_diff(rebuilt, depolarizing(d, x)) <= 1e-9);
        }
    }
}

TEST_CASE("teleportation with an erasure-flagged arm is the quantum erasure channel") {
    for (double x : {0.0, 0.25, 0.5, 1.0}) {
        const QuantumChannel rebuilt = teleport_induced(classical_erasure(4, x), 2);
        CHECK(rebuilt.dout() == 3);
        CHECK(choi_diff(rebuilt, erasure(2, x)) <= 1e-9);
    }
}

TEST_CASE("teleportation rejects a mismatched alphabet") {
    CHECK_THROWS_AS(teleport_induced(dary_symmetric(4, 0.1), 3), std::invalid_argument);
    CHECK_THROWS_AS(teleport_induced(dary_symmetric(5, 0.1), 2), std::invalid_argument);
}

TEST_CASE("forward cost of the teleportation arm") {
    CHECK(fccc_tp(dary_symmetric(4, 0.0)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(fccc_tp(dary_symmetric(4, 2.0 / 3.0)) - kSdTwoThirds) <= 1e-6);
    CHECK(std::abs(fccc_tp(classical_erasure(4, 0.5)) - 1.0) <= 1e-6);
}

TEST_CASE("bell-diagonal verification passes on the named families") {
    const BellDiagonalReport dep = verify_bell_diagonal(depolarizing(3, 0.4), 1e-6);
    CHECK(dep.pass);
    CHECK(dep.choi_deviation <= 1e-9);
    CHECK(std::abs(dep.ce - kCeD3FourTenths) <= 1e-6);
    CHECK(std::abs(dep.ce - ce_depolarizing(3, 0.4)) <= 1e-6);

    const BellDiagonalReport deph = verify_bell_diagonal(dephasing(0.7), 1e-6);
    CHECK(deph.pass);
    CHECK(std::abs(deph.ce - ce_dephasing(0.7)) <= 1e-6);
}

TEST_CASE("bell-diagonal verification fails on a non-pauli channel") {
    const BellDiagonalReport report = verify_bell_diagonal(amplitude_damping(0.3), 1e-6);
    CHECK_FALSE(report.pass);
    CHECK(report.choi_deviation > 1e-3);
    CHECK_THROWS_AS(verify_bell_diagonal(erasure(2, 0.2), 1e-6), std::invalid_argument);
}

TEST_CASE("superdense bound never beats the teleportation cost on bell-diagonal channels") {
    const QuantumChannel channels[] = {depolarizing(2, 0.3), depolarizing(3, 0.8),
                                       dephasing(0.45),
                                       bell_diagonal(2, Distribution({0.7, 0.1, 0.15, 0.05}))};
    for (const QuantumChannel& ch : channels) {
        CHECK(c_sd(ch) <= fccc_tp(superdense_induced(ch)) + 1e-9);
    }
}

TEST_CASE("measure/re-prepare lands on the simulability threshold") {
    for (std::size_t d : {2u, 3u, 4u}) {
        const double threshold = double(d) / double(d + 1);
        CHECK(choi_diff(measure_reprepare(d, 0.0), depolarizing(d, threshold)) <= 1e-12);
    }
    CHECK(choi_diff(measure_reprepare(2, 0.5), depolarizing(2, 5.0 / 6.0)) <= 1e-12);
}

TEST_CASE("noisy-arm measure/re-prepare reproduces the closed-form cost") {
    for (std::size_t d : {2u, 3u}) {
        for (double x : {double(d) / double(d + 1), 0.9, 1.0}) {
            const double r = 1.0 - (1.0 - x) * double(d + 1);
            CHECK(choi_diff(measure_reprepare(d, r), depolarizing(d, x)) <= 1e-12);
            // capacity of the d-ary arm equals the closed-form cost
            CHECK(std::abs(dary_symmetric_capacity(d, r) - fccc_mr_depolarizing(d, x)) <= 1e-9);
        }
    }
}

TEST_CASE("monte carlo haar average approaches the exact channel") {
    const ChoiState mc = measure_reprepare_mc(2, 0.0, 100000, 99);
    CHECK(max_abs_diff(mc.state().matrix(), choi(measure_reprepare(2, 0.0)).state().matrix()) <=
          0.01);

    const ChoiState mc3 = measure_reprepare_mc(3, 0.2, 100000, 99);
    CHECK(max_abs_diff(mc3.state().matrix(), choi(measure_reprepare(3, 0.2)).state().matrix()) <=
          0.01);
}

TEST_CASE("monte carlo sampling is deterministic for a fixed seed") {
    const ChoiState a = measure_reprepare_mc(2, 0.3, 50, 1234);
    const ChoiState b = measure_reprepare_mc(2, 0.3, 50, 1234);
    CHECK(max_abs_diff(a.state().matrix(), b.state().matrix()) == 0.0);
    const ChoiState c = measure_reprepare_mc(2, 0.3, 50, 1235);
    CHECK(max_abs_diff(a.state().matrix(), c.state().matrix()) > 0.0);
}
