#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace modo;
using namespace modo::test;

namespace {

Mat<FieldElement> rand_mat(const SpecPtr& spec, std::mt19937_64& rng, std::size_t ell, bool constant = false) {
    Mat<FieldElement> m = Mat<FieldElement>::zero(ell, fc(spec, 0));
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            m.at(i, j) = constant ? FieldElement::constant(spec, random_gr(rng)) : random_poly_element(spec, rng, 2);
    return m;
}

// Full permutation expansion of the determinant, as an independent oracle.
FieldElement det_permutation_expansion(const Mat<FieldElement>& m) {
    std::vector<std::size_t> perm(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) perm[k] = k;
    FieldElement acc = m.sample().zero_like();
    do {
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        FieldElement term = m.sample().one_like();
        for (std::size_t k = 0; k < perm.size(); ++k) term = term * m.at(k, perm[k]);
        acc = (inv % 2 == 0) ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

TEST_CASE("determinant basics") {
    auto s = x_spec();
    CHECK(Mat<FieldElement>::identity(3, fc(s, 1)).det() == fc(s, 1));

    // the AKNS leading coefficient i*diag(1,-1)
    Mat<FieldElement> a1 = Mat<FieldElement>::zero(2, fc(s, 0));
    a1.at(0, 0) = fc(s, 0, 1);
    a1.at(1, 1) = fc(s, 0, -1);
    CHECK(a1.det() == fc(s, 1));
}

TEST_CASE("determinant against permutation expansion") {
    auto s = x_spec();
    std::mt19937_64 rng(61);
    for (int k = 0; k < 25; ++k) {
        Mat<FieldElement> m2 = rand_mat(s, rng, 2);
        CHECK(m2.det() == m2.at(0, 0) * m2.at(1, 1) - m2.at(0, 1) * m2.at(1, 0));
        Mat<FieldElement> m3 = rand_mat(s, rng, 3, true);
        CHECK(m3.det() == det_permutation_expansion(m3));
    }
}

TEST_CASE("bareiss path agrees with the permutation oracle") {
    auto s = x_spec();
    std::mt19937_64 rng(67);
    for (int k = 0; k < 5; ++k) {
        Mat<FieldElement> m = rand_mat(s, rng, 5, true);
        CHECK(m.det() == det_permutation_expansion(m));
        CHECK(det_bareiss(m) == det_permutation_expansion(m));
    }
}

TEST_CASE("inverse") {
    auto s = x_spec();
    Mat<FieldElement> a1 = Mat<FieldElement>::zero(2, fc(s, 0));
    a1.at(0, 0) = fc(s, 0, 1);
    a1.at(1, 1) = fc(s, 0, -1);
    Mat<FieldElement> inv = mat_inv(a1);
    CHECK(inv.at(0, 0) == fc(s, 0, -1));
    CHECK(inv.at(1, 1) == fc(s, 0, 1));

    Mat<FieldElement> id = Mat<FieldElement>::identity(3, fc(s, 1));
    CHECK(mat_inv(id) == id);

    std::mt19937_64 rng(71);
    for (int k = 0; k < 20; ++k) {
        Mat<FieldElement> m = rand_mat(s, rng, 2);
        if (m.det().is_zero()) continue;
        CHECK(m * mat_inv(m) == Mat<FieldElement>::identity(2, fc(s, 1)));
    }

    Mat<FieldElement> sing = Mat<FieldElement>::zero(2, fc(s, 0));
    sing.at(0, 0) = fe(s, "x");
    sing.at(1, 0) = fe(s, "x");
    CHECK_THROWS_AS(mat_inv(sing), ModoError);
}

TEST_CASE("entrywise derivation") {
    auto s = x_spec();
    Mat<FieldElement> c = Mat<FieldElement>::scalar(2, fc(s, 3, -2));
    CHECK(c.derive().is_zero());

    Mat<FieldElement> m = Mat<FieldElement>::zero(2, fc(s, 0));
    m.at(0, 0) = fe(s, "x");
    m.at(1, 1) = fe(s, "x^2");
    Mat<FieldElement> d = m.derive();
    CHECK(d.at(0, 0) == fc(s, 1));
    CHECK(d.at(1, 1) == fe(s, "2*x"));
    CHECK(d.at(0, 1).is_zero());

    // AKNS A0 over the jet backend: oracle is the entrywise rule
    auto snls = nls_spec();
    Mat<FieldElement> a0 = Mat<FieldElement>::zero(2, fc(snls, 0));
    a0.at(0, 1) = fe(snls, "i*u");
    a0.at(1, 0) = fe(snls, "i*v");
    Mat<FieldElement> a0d = a0.derive();
    CHECK(a0d.at(0, 1) == fe(snls, "i*u'"));
    CHECK(a0d.at(1, 0) == fe(snls, "i*v'"));
}

TEST_CASE("derivation is a derivation on the matrix ring") {
    auto s = x_spec();
    std::mt19937_64 rng(73);
    for (int k = 0; k < 20; ++k) {
        Mat<FieldElement> a = rand_mat(s, rng, 2), b = rand_mat(s, rng, 2);
        CHECK((a * b).derive() == a.derive() * b + a * b.derive());
    }
}
