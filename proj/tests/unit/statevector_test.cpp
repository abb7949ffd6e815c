// Copyright 2026 The qreason Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qreason/errors.hpp"
#include "qreason/statevector.hpp"
#include "support/oracles.hpp"

using qreason::AnglePair;
using qreason::DomainError;
using qreason::ResourceError;
using qreason::Statevector;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("default construction yields the all-zeros basis state") {
    const Statevector s(3);
    CHECK(s.num_qubits() == 3);
    CHECK(s.size() == 8);
    CHECK(s[0] == std::complex<double>{1.0, 0.0});
    for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s[i] == std::complex<double>{0.0, 0.0});
    }
    CHECK(s.squared_norm() == 1.0);
}

TEST_CASE("construction rejects zero qubits and enforces the cap") {
    CHECK_THROWS_AS(Statevector(0), DomainError);
    CHECK_THROWS_AS(Statevector(5, 4), ResourceError);
    CHECK_NOTHROW(Statevector(4, 4));
    // The default cap admits 24 qubits and rejects 25.
    CHECK_THROWS_AS(Statevector(25), ResourceError);
}

TEST_CASE("from_amplitudes validates the vector length") {
    std::vector<std::complex<double>> two{{1.0, 0.0}, {0.0, 0.0}};
    const Statevector s = Statevector::from_amplitudes(1, two);
    CHECK(s.size() == 2);
    std::vector<std::complex<double>> three(3, {0.0, 0.0});
    CHECK_THROWS_AS(Statevector::from_amplitudes(2, three), DomainError);
}

TEST_CASE("qubit 0 is the most significant bit of a basis index") {
    const Statevector s(3);
    CHECK(s.qubit_mask(0) == 4);
    CHECK(s.qubit_mask(1) == 2);
    CHECK(s.qubit_mask(2) == 1);
    CHECK(s.bit(0b100, 0));
    CHECK_FALSE(s.bit(0b100, 2));
    CHECK(s.bits_string(0b101) == "101");
    CHECK(s.bits_string(0) == "000");
    CHECK_THROWS_AS(static_cast<void>(s.qubit_mask(3)), DomainError);
}

TEST_CASE("feature 0 and feature 1 prepare definite truth values") {
    const Statevector falsy = qreason::prepare_from_features({{0.0}});
    CHECK(falsy[0] == std::complex<double>{1.0, 0.0});
    CHECK(falsy[1] == std::complex<double>{0.0, 0.0});

    const Statevector truthy = qreason::prepare_from_features({{1.0}});
    CHECK(std::abs(truthy[0]) < 1e-15);
    CHECK(std::abs(truthy[1] - std::complex<double>{1.0, 0.0}) < 1e-15);
}

TEST_CASE("feature 0.5 prepares the uniform single-qubit superposition") {
    const Statevector s = qreason::prepare_from_features({{0.5}});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s[0].real() - r) < 1e-15);
    CHECK(std::abs(s[1].real() - r) < 1e-15);
    CHECK(s[0].imag() == 0.0);
    CHECK(s[1].imag() == 0.0);
}

TEST_CASE("feature preparation keeps every amplitude exactly real") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> features(6);
    for (auto &f : features) {
        f = unit(rng);
    }
    const Statevector s = qreason::prepare_from_features(features);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].imag() == 0.0);
        CHECK(s[i].real() >= 0.0);
    }
    CHECK(std::abs(s.squared_norm() - 1.0) < 1e-12);
}

TEST_CASE("feature errors name the offending index") {
    std::vector<double> features{0.2, 1.5, 0.3};
    try {
        (void)qreason::prepare_from_features(features);
        FAIL("expected DomainError");
    } catch (const DomainError &e) {
        const std::string what = e.what();
        CHECK(what.find("1") != std::string::npos);
    }
    CHECK_THROWS_AS(qreason::prepare_from_features({{-0.1}}), DomainError);
    CHECK_THROWS_AS(qreason::prepare_from_features(std::vector<double>{}),
                    DomainError);
}

TEST_CASE("feature preparation is the tensor product of its qubit states") {
    const std::vector<double> features{0.15, 0.8, 0.45};
    const Statevector s = qreason::prepare_from_features(features);

    oracle::CMat column = {{oracle::C{1.0, 0.0}}};
    for (double x : features) {
        const oracle::CMat q = {{oracle::C{std::cos(kPi * x / 2.0), 0.0}},
                                {oracle::C{std::sin(kPi * x / 2.0), 0.0}}};
        column = oracle::kron(column, q);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(std::abs(s[i] - column[i][0]) < 1e-14);
    }
}

TEST_CASE("angle preparation matches its closed per-qubit form") {
    const Statevector s =
        qreason::prepare_from_angles({{AnglePair{kPi / 2.0, kPi / 2.0}}});
    // e^{-i pi/4} / sqrt(2) evaluated independently.
    CHECK(s[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s[0].imag() ==
          doctest::Approx(-0.49999999999999994).epsilon(1e-14));
    CHECK(s[1].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s[1].imag() == doctest::Approx(0.49999999999999994).epsilon(1e-14));
}

TEST_CASE("angle preparation with theta_z = 0 reduces to the feature map") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> features(4);
        std::vector<AnglePair> pairs(4);
        for (std::size_t q = 0; q < 4; ++q) {
            features[q] = unit(rng);
            pairs[q] = AnglePair{kPi * features[q], 0.0};
        }
        const Statevector a = qreason::prepare_from_features(features);
        const Statevector b = qreason::prepare_from_angles(pairs);
        CHECK(oracle::max_diff(a, b) < 1e-14);
    }
}

TEST_CASE("angle preparation rejects an empty pair list") {
    CHECK_THROWS_AS(qreason::prepare_from_angles(std::vector<AnglePair>{}),
                    DomainError);
}

TEST_CASE("basis probabilities are the squared amplitude moduli") {
    std::mt19937_64 rng(37);
    const Statevector s = oracle::random_state(rng, 4);
    const std::vector<double> probs = qreason::basis_probabilities(s);
    REQUIRE(probs.size() == 16);
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double expect =
            s[i].real() * s[i].real() + s[i].imag() * s[i].imag();
        CHECK(probs[i] == doctest::Approx(expect).epsilon(1e-15));
        total += probs[i];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inner product is conjugate linear and detects mismatches") {
    std::mt19937_64 rng(41);
    const Statevector a = oracle::random_state(rng, 3);
    const Statevector b = oracle::random_state(rng, 3);

    const auto ab = qreason::inner_product(a, b);
    const auto ba = qreason::inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
    CHECK(std::abs(qreason::inner_product(a, a) -
                   std::complex<double>{1.0, 0.0}) < 1e-12);

    const Statevector zero(3);
    Statevector one(3);
    one[0] = {0.0, 0.0};
    one[1] = {1.0, 0.0};
    CHECK(qreason::inner_product(zero, one) == std::complex<double>{0.0, 0.0});

    const Statevector other(2);
    CHECK_THROWS_AS(qreason::inner_product(a, other), DomainError);
}
