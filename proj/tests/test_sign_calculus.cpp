#include "helpers.hpp"

#include "hankel/generate.hpp"
#include "hankel/sign_calculus.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace hankel;
using testutil::cpx;
using testutil::ipoly;
using testutil::qpoly;
using testutil::pair_kernel;
using testutil::rat;
using testutil::real_kernel;
using testutil::throws_code;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    return std::vector<Integer>(v.begin(), v.end());
}

JetSet random_jets(std::mt19937_64& rng, const std::vector<SignAtom>& atoms) {
    JetSet jets;
    for (const auto& atom : atoms) {
        std::vector<Complex> jet;
        for (std::size_t j = 0; j < atom.q.size(); ++j)
            jet.push_back(testutil::random_complex(rng));
        jets.push_back(std::move(jet));
    }
    return jets;
}

}  // namespace

TEST_CASE("factor-product coefficients") {
    CHECK(nu_coefficients(0) == ints({1}));
    CHECK(nu_coefficients(1) == ints({1, -1}));
    CHECK(nu_coefficients(2) == ints({2, -3, 1}));
    CHECK(nu_coefficients(3) == ints({6, -11, 6, -1}));
    // value identity: sum nu_l z^l == (1-z)(2-z)...(k-z) at sample points
    for (unsigned k = 1; k <= 6; ++k) {
        const auto nu = nu_coefficients(k);
        for (long z : {-2L, 0L, 3L}) {
            Rational lhs = 0, pw = 1;
            for (const auto& c : nu) {
                lhs += Rational(c) * pw;
                pw *= z;
            }
            Rational rhs = 1;
            for (unsigned i = 1; i <= k; ++i) rhs *= Rational(i) - Rational(z);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("atom weights of basic terms") {
    auto q1 = q_coefficients(ipoly({1}), cpx(1));
    REQUIRE(q1.size() == 1);
    CHECK(q1[0] == cpx(1));

    auto qt = q_coefficients(ipoly({0, 1}), cpx(1));
    REQUIRE(qt.size() == 2);
    CHECK(qt[0] == cpx(1));
    CHECK(qt[1] == cpx(-1));

    auto qt2 = q_coefficients(ipoly({0, 0, 1}), cpx(1));
    REQUIRE(qt2.size() == 3);
    CHECK(qt2[0] == cpx(2));
    CHECK(qt2[1] == cpx(-3));
    CHECK(qt2[2] == cpx(1));

    auto qa2 = q_coefficients(ipoly({0, 1}), cpx(2));
    REQUIRE(qa2.size() == 2);
    CHECK(qa2[0] == Complex(rat(1, 4)));
    CHECK(qa2[1] == Complex(rat(-1, 4)));

    CHECK(throws_code(ErrorCode::DegenerateLeading, [] { q_coefficients(Poly(), cpx(1)); }));
    CHECK(throws_code(ErrorCode::InvalidExponent,
                      [] { q_coefficients(ipoly({1}), cpx(-1)); }));
}

TEST_CASE("weight/polynomial maps invert each other") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        const unsigned deg = rng() % 5;
        std::vector<Complex> cs;
        for (unsigned j = 0; j < deg; ++j) cs.push_back(testutil::random_complex(rng));
        Complex lead = testutil::random_complex(rng);
        if (lead.is_zero()) lead = cpx(1);
        cs.push_back(lead);
        const Poly P{std::move(cs)};
        Complex alpha{rat(1 + long(rng() % 5), 1 + long(rng() % 3)),
                      testutil::random_rational(rng)};
        const auto q = q_coefficients(P, alpha);
        CHECK(q.size() == deg + 1);
        CHECK(!q.back().is_zero());
        CHECK(recover_polynomial(q, alpha) == P);
    }
    // conjugating the data conjugates the weights
    const Poly P(std::vector<Complex>{cpx(1, 2), cpx(0, 3)});
    const Complex a = cpx(2, 1);
    const auto q = q_coefficients(P, a);
    const auto qc = q_coefficients(P.conj_coeffs(), conj(a));
    REQUIRE(q.size() == qc.size());
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(qc[i] == conj(q[i]));
}

TEST_CASE("sign matrix of a degree-two real term") {
    const auto block = sign_matrix_real(ipoly({0, 0, 1}), cpx(1));
    CHECK(block.kind == SignMatrixBlock::Kind::Real);
    CHECK(block.degree() == 2);
    REQUIRE(block.entries.rows() == 3);
    const long expected[3][3] = {{2, 3, 1}, {3, 2, 0}, {1, 0, 0}};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) CHECK(block.entries.at(i, j) == cpx(expected[i][j]));
    CHECK(block.entries.is_hermitian());
    CHECK(throws_code(ErrorCode::NotReal, [] { sign_matrix_real(ipoly({1}), cpx(1, 1)); }));
}

TEST_CASE("pair blocks are anti-diagonal assemblies of the inner matrix") {
    const Complex a = cpx(1, 1);
    const Poly P(std::vector<Complex>{cpx(2, 1), cpx(0, 3)});
    const auto block = sign_matrix_pair(P, a);
    CHECK(block.kind == SignMatrixBlock::Kind::Pair);
    CHECK(block.degree() == 1);
    REQUIRE(block.entries.rows() == 4);
    CHECK(block.entries.is_hermitian());
    const unsigned n = 2;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            CHECK(block.entries.at(i, j) == cpx(0));          // upper-left corner
            CHECK(block.entries.at(n + i, n + j) == cpx(0));  // lower-right corner
            CHECK(block.entries.at(i, n + j) == conj(block.entries.at(n + j, i)));
        }
    CHECK(throws_code(ErrorCode::InvalidExponent, [] { sign_matrix_pair(ipoly({1}), cpx(1)); }));
}

TEST_CASE("block assembly and atom listing follow canonical term order") {
    const auto k = HankelKernel::canonicalize({{cpx(2), ipoly({-3, 0, 1})},
                                               {cpx(1, 1), ipoly({1, 2})},
                                               {cpx(1, -1), ipoly({1, 2})},
                                               {cpx(1), ipoly({5})}});
    const auto S = sign_matrix(k);
    REQUIRE(S.blocks.size() == 3);
    CHECK(S.blocks[0].kind == SignMatrixBlock::Kind::Real);
    CHECK(S.blocks[1].kind == SignMatrixBlock::Kind::Real);
    CHECK(S.blocks[2].kind == SignMatrixBlock::Kind::Pair);
    CHECK(S.total_order() == 1 + 3 + 4);
    const auto D = S.dense();
    CHECK(D.rows() == 8);
    CHECK(D.is_hermitian());

    const auto atoms = sign_distribution(k);
    REQUIRE(atoms.size() == 4);  // two real + adjacent conjugate pair
    CHECK(atoms[0].alpha == cpx(1));
    CHECK(atoms[1].alpha == cpx(2));
    CHECK(atoms[2].alpha == cpx(1, 1));
    CHECK(atoms[3].alpha == cpx(1, -1));
    REQUIRE(atoms[2].q.size() == atoms[3].q.size());
    for (std::size_t i = 0; i < atoms[2].q.size(); ++i)
        CHECK(atoms[3].q[i] == conj(atoms[2].q[i]));

    // centers: alpha = e^{-beta}
    CHECK(atoms[0].beta().real() == doctest::Approx(0.0));
    const auto half = sign_distribution(real_kernel(rat(1, 2), ipoly({1})))[0].beta();
    CHECK(half.real() == doctest::Approx(std::log(2.0)));
    CHECK(half.imag() == doctest::Approx(0.0));
}

TEST_CASE("jet pairing agrees with the block quadratic form exactly") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        const auto k = random_kernel(rng);
        const auto atoms = sign_distribution(k);
        const auto S = sign_matrix(k);
        const auto jets = random_jets(rng, atoms);
        CHECK(evaluate_sign_form(S, jets) == distribution_pairing(atoms, jets));
    }

    // mismatched jet sizes are rejected
    const auto k = real_kernel(rat(1), ipoly({0, 1}));
    const auto S = sign_matrix(k);
    CHECK(throws_code(ErrorCode::DimensionMismatch,
                      [&] { evaluate_sign_form(S, {{cpx(1)}}); }));
    CHECK(throws_code(ErrorCode::DimensionMismatch,
                      [&] { evaluate_sign_form(S, {{cpx(1)}, {cpx(1)}}); }));
}

TEST_CASE("blocks reconstruct their kernel terms") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        const auto k = random_kernel(rng);
        const auto S = sign_matrix(k);
        std::size_t b = 0;
        for (const auto& term : k.real_terms()) {
            const auto back = sign_matrix_to_kernel(S.blocks[b++], term.alpha);
            CHECK(back.alpha == term.alpha);
            CHECK(back.poly == term.poly);
        }
        for (const auto& term : k.pair_terms()) {
            const auto back = sign_matrix_to_kernel(S.blocks[b++], term.alpha);
            CHECK(back.alpha == term.alpha);
            CHECK(back.poly == term.poly);
        }
    }
}

TEST_CASE("malformed blocks are rejected") {
    auto block = sign_matrix_real(ipoly({0, 0, 1}), cpx(1));
    block.entries.at(1, 1) = cpx(5);  // breaks the binomial pattern
    CHECK(throws_code(ErrorCode::NotSignMatrix,
                      [&] { sign_matrix_to_kernel(block, cpx(1)); }));

    // consistent pattern with vanishing top weight
    CMat sing(3, 3);
    sing.at(0, 0) = cpx(1);
    sing.at(0, 1) = cpx(1);
    sing.at(1, 0) = cpx(1);
    SignMatrixBlock sblock{SignMatrixBlock::Kind::Real, sing};
    CHECK(throws_code(ErrorCode::SingularSkewDiagonal,
                      [&] { sign_matrix_to_kernel(sblock, cpx(1)); }));

    // pair block with a dirty corner
    auto pb = sign_matrix_pair(ipoly({1}), cpx(1, 1));
    pb.entries.at(0, 0) = cpx(1);
    CHECK(throws_code(ErrorCode::NotSignMatrix,
                      [&] { sign_matrix_to_kernel(pb, cpx(1, 1)); }));
}

TEST_CASE("atom families integrate back to their kernel") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        const auto k = random_kernel(rng);
        CHECK(reconstruct_kernel_from_sign(sign_distribution(k)) == k);
    }
    // and on the simplest handcrafted families
    const auto e = real_kernel(rat(1), ipoly({1}));
    CHECK(reconstruct_kernel_from_sign(sign_distribution(e)) == e);
    const auto p = pair_kernel(cpx(1, 1), ipoly({1}));
    CHECK(reconstruct_kernel_from_sign(sign_distribution(p)) == p);
}
