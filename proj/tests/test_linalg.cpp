#include <catch2/catch.hpp>

#include <random>

#include "spaceform/bigint.hpp"
#include "spaceform/linalg.hpp"

using namespace spaceform;

TEST_CASE("matrix inverse round trip") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        Mat m(4, 4);
        for (double& v : m.a) v = dist(rng);
        if (std::fabs(determinant(m)) < 1e-3) continue;
        Mat inv = inverse(m);
        CHECK(norm_inf(m * inv - Mat::identity(4)) < 1e-10);
    }
}

TEST_CASE("solve matches inverse") {
    Mat m(3, 3);
    m.a = {4, 1, 0, 1, 3, -1, 0, -1, 2};
    Vec b = {1, 2, 3};
    Vec x = solve(m, b);
    Vec back = mul(m, x);
    for (int i = 0; i < 3; ++i) CHECK(back[i] == Approx(b[i]).margin(1e-12));
}

TEST_CASE("symmetric eigenvalues of a known matrix") {
    // diag(1,2,3) conjugated by a rotation keeps its spectrum
    Mat d(3, 3);
    d.a = {2, 1, 0, 1, 2, 0, 0, 0, 5};
    auto ev = symmetric_eigenvalues(d);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == Approx(1.0).margin(1e-12));
    CHECK(ev[1] == Approx(3.0).margin(1e-12));
    CHECK(ev[2] == Approx(5.0).margin(1e-12));
}

TEST_CASE("characteristic polynomial roots") {
    Mat m(4, 4);
    // companion-style matrix with known eigenvalues 2, -1, i, -i
    // use a block diagonal instead
    m.a = {2, 0, 0, 0,
           0, -1, 0, 0,
           0, 0, 0, -1,
           0, 0, 1, 0};
    auto ev = eigenvalues(m);
    REQUIRE(ev.size() == 4);
    double best_real = -10, best_imag = 0;
    for (auto z : ev) {
        best_real = std::max(best_real, z.real());
        best_imag = std::max(best_imag, z.imag());
    }
    CHECK(best_real == Approx(2.0).margin(1e-9));
    CHECK(best_imag == Approx(1.0).margin(1e-9));
}

TEST_CASE("bigint arithmetic agrees with long long on random values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int t = 0; t < 500; ++t) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_ll() == a / b);
            CHECK(r.to_ll() == a % b);
        }
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_ll() == std::gcd(a, b));
    }
}

TEST_CASE("bigint grows past 64 bits") {
    BigInt x(1);
    for (int i = 0; i < 40; ++i) x = x * BigInt(1000);
    CHECK(x.str() == "1" + std::string(120, '0'));
    BigInt q, r;
    BigInt::divmod(x, BigInt(7), q, r);
    CHECK((q * BigInt(7) + r) == x);
}
