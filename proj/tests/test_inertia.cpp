#include "helpers.hpp"

#include "hankel/generate.hpp"
#include "hankel/inertia.hpp"

#include <doctest.h>

#include <random>

using namespace hankel;
using testutil::cpx;
using testutil::ipoly;
using testutil::pair_kernel;
using testutil::rat;
using testutil::real_kernel;
using testutil::throws_code;

namespace {

CMat hermitian_random(std::mt19937_64& rng, unsigned n) {
    CMat A(n, n);
    for (unsigned i = 0; i < n; ++i) {
        A.at(i, i) = Complex(testutil::random_rational(rng));
        for (unsigned j = i + 1; j < n; ++j) {
            A.at(i, j) = testutil::random_complex(rng);
            A.at(j, i) = conj(A.at(i, j));
        }
    }
    return A;
}

}  // namespace

TEST_CASE("per-term count table") {
    // odd degree: balanced regardless of the leading sign
    CHECK(real_term_counts(1, 1) == std::pair<long, long>{1, 1});
    CHECK(real_term_counts(1, -1) == std::pair<long, long>{1, 1});
    CHECK(real_term_counts(3, 1) == std::pair<long, long>{2, 2});
    CHECK(real_term_counts(5, -1) == std::pair<long, long>{3, 3});
    // even degree: the leading sign tips the balance
    CHECK(real_term_counts(0, 1) == std::pair<long, long>{1, 0});
    CHECK(real_term_counts(0, -1) == std::pair<long, long>{0, 1});
    CHECK(real_term_counts(2, 1) == std::pair<long, long>{2, 1});
    CHECK(real_term_counts(2, -1) == std::pair<long, long>{1, 2});
    CHECK(real_term_counts(4, 1) == std::pair<long, long>{3, 2});
    CHECK(real_term_counts(4, -1) == std::pair<long, long>{2, 3});
    CHECK(throws_code(ErrorCode::DegenerateLeading, [] { real_term_counts(2, 0); }));
}

TEST_CASE("kernel counts for the basic fixtures") {
    auto expect = [](const HankelKernel& k, long plus, long minus) {
        const auto r = kernel_inertia(k);
        CHECK(r.n_plus == plus);
        CHECK(r.n_minus == minus);
        CHECK(r.method == "closed-form");
        CHECK(r.rank() == static_cast<long>(k.rank()));
    };
    expect(real_kernel(rat(1), ipoly({1})), 1, 0);
    expect(real_kernel(rat(1), ipoly({0, 1})), 1, 1);
    expect(real_kernel(rat(1), ipoly({0, 0, 1})), 2, 1);
    expect(real_kernel(rat(1), ipoly({0, 0, -1})), 1, 2);
    expect(pair_kernel(cpx(1, 1), ipoly({1})), 1, 1);

    // mixed kernel: per-term breakdown
    const auto mixed = HankelKernel::canonicalize({{cpx(2), ipoly({-3, 0, 1})},
                                                   {cpx(1, 1), ipoly({1, 2})},
                                                   {cpx(1, -1), ipoly({1, 2})}});
    const auto r = kernel_inertia(mixed);
    CHECK(r.n_plus == 4);
    CHECK(r.n_minus == 3);
    REQUIRE(r.breakdown.size() == 2);
    CHECK(r.breakdown[0].kind == TermInertia::Kind::Real);
    CHECK(r.breakdown[0].K == 2);
    CHECK(r.breakdown[0].n_plus == 2);
    CHECK(r.breakdown[0].n_minus == 1);
    CHECK(r.breakdown[1].kind == TermInertia::Kind::Pair);
    CHECK(r.breakdown[1].K == 1);
    CHECK(r.breakdown[1].n_plus == 2);
    CHECK(r.breakdown[1].n_minus == 2);

    // lower-order coefficients never matter
    const auto wiggled = real_kernel(rat(3), ipoly({9, -7, 5, 1}));
    const auto plain = real_kernel(rat(3), ipoly({0, 0, 0, 1}));
    CHECK(kernel_inertia(wiggled).n_plus == kernel_inertia(plain).n_plus);
    CHECK(kernel_inertia(wiggled).n_minus == kernel_inertia(plain).n_minus);
}

TEST_CASE("pure anti-diagonal inertia and eigenvalues") {
    CMat S(3, 3);
    S.at(0, 2) = cpx(1);
    S.at(2, 0) = cpx(1);
    S.at(1, 1) = cpx(2);
    const auto res = skew_diagonal_inertia(S);
    CHECK(res.report.n_plus == 2);
    CHECK(res.report.n_minus == 1);
    REQUIRE(res.eigenvalues.size() == 3);
    CHECK(res.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(res.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(res.eigenvalues[2] == doctest::Approx(2.0));

    CMat bad = S;
    bad.at(0, 0) = cpx(1);
    CHECK(throws_code(ErrorCode::ShapeViolation, [&] { skew_diagonal_inertia(bad); }));
}

TEST_CASE("skew-triangular closed form matches the eigensolver") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 60; ++it) {
        const unsigned order = 1 + rng() % 9;
        const auto S = testutil::random_skew_triangular(rng, order);
        const auto closed = skew_triangular_inertia(S);
        const auto numeric = numeric_inertia(S.to_eigen(), 1e-9);
        CHECK(closed.n_plus == numeric.n_plus);
        CHECK(closed.n_minus == numeric.n_minus);
        CHECK(closed.n_plus + closed.n_minus == static_cast<long>(order));
    }
}

TEST_CASE("shape violations of the skew-triangular contract") {
    // nonzero entry beyond the anti-diagonal
    CMat A(3, 3);
    A.at(0, 2) = cpx(1);
    A.at(2, 0) = cpx(1);
    A.at(1, 1) = cpx(1);
    A.at(2, 2) = cpx(1);
    CHECK(throws_code(ErrorCode::ShapeViolation, [&] { skew_triangular_inertia(A); }));

    // vanishing anti-diagonal entry
    CMat B(2, 2);
    B.at(0, 0) = cpx(1);
    CHECK(throws_code(ErrorCode::SingularSkewDiagonal, [&] { skew_triangular_inertia(B); }));

    // non-Hermitian data
    CMat C(2, 2);
    C.at(0, 1) = cpx(1);
    C.at(1, 0) = cpx(2);
    CHECK(throws_code(ErrorCode::NonHermitian, [&] { skew_triangular_inertia(C); }));
}

TEST_CASE("pair blocks contribute balanced counts") {
    const auto block = sign_matrix_pair(ipoly({0, 0, 1}), cpx(1, 2));
    const auto r = pair_block_inertia(block);
    CHECK(r.n_plus == 3);
    CHECK(r.n_minus == 3);

    SignMatrixBlock degenerate{SignMatrixBlock::Kind::Pair, CMat(2, 2)};
    CHECK(throws_code(ErrorCode::SingularBlock, [&] { pair_block_inertia(degenerate); }));
}

TEST_CASE("exact congruence inertia on known matrices") {
    auto expect = [](const CMat& A, long p, long m, long z) {
        const auto r = exact_hermitian_inertia(A);
        CHECK(r.n_plus == p);
        CHECK(r.n_minus == m);
        CHECK(r.n_zero == z);
    };

    CMat I2(2, 2);
    I2.at(0, 0) = cpx(1);
    I2.at(1, 1) = cpx(1);
    expect(I2, 2, 0, 0);

    CMat flip(2, 2);
    flip.at(0, 1) = cpx(1);
    flip.at(1, 0) = cpx(1);
    expect(flip, 1, 1, 0);

    CMat ones(2, 2);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) ones.at(i, j) = cpx(1);
    expect(ones, 1, 0, 1);

    expect(CMat(3, 3), 0, 0, 3);

    CMat im(2, 2);
    im.at(0, 1) = cpx(0, 1);
    im.at(1, 0) = cpx(0, -1);
    expect(im, 1, 1, 0);

    // zero diagonal forcing the two-pivot path, with a null direction
    CMat hollow(3, 3);
    hollow.at(0, 2) = cpx(1);
    hollow.at(2, 0) = cpx(1);
    expect(hollow, 1, 1, 1);

    // Cauchy-type positive matrix, exact
    CMat hil(4, 4);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) hil.at(i, j) = Complex(rat(1, i + j + 1));
    expect(hil, 4, 0, 0);
    CMat neg(4, 4);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) neg.at(i, j) = Complex(rat(-1, i + j + 1));
    expect(neg, 0, 4, 0);
}

TEST_CASE("exact congruence inertia agrees with the eigensolver on random input") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 40; ++it) {
        const unsigned n = 1 + rng() % 6;
        const auto A = hermitian_random(rng, n);
        const auto ex = exact_hermitian_inertia(A);
        const auto nu = numeric_inertia(A.to_eigen(), 1e-9);
        CHECK(ex.n_plus == nu.n_plus);
        CHECK(ex.n_minus == nu.n_minus);
        CHECK(ex.n_zero == nu.n_zero);
        CHECK(ex.n_plus + ex.n_minus + ex.n_zero == static_cast<long>(n));
    }
}

TEST_CASE("numeric inertia guards") {
    Eigen::MatrixXcd M(2, 2);
    M << 1.0, 2.0, 3.0, 1.0;
    CHECK(throws_code(ErrorCode::NonHermitian, [&] { numeric_inertia(M); }));

    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = 1e-15;
    const auto r = numeric_inertia(D, 1e-9);
    CHECK(r.n_plus == 1);
    CHECK(r.n_minus == 0);
    CHECK(r.n_zero == 1);
}

TEST_CASE("predicted negative counts of perturbations") {
    CHECK(perturbed_negative_count(scale_kernel(real_kernel(rat(1), ipoly({1})), rat(-1))) == 1);
    CHECK(perturbed_negative_count(scale_kernel(real_kernel(rat(1), ipoly({1})), rat(-10))) == 1);
    CHECK(perturbed_negative_count(HankelKernel::canonicalize(
              {{cpx(1), ipoly({-1})}, {cpx(2), ipoly({-1})}})) == 2);
    CHECK(perturbed_negative_count(real_kernel(rat(1), ipoly({1}))) == 0);
    CHECK(perturbed_negative_count(real_kernel(rat(1), ipoly({0, 1}))) == 1);
}
