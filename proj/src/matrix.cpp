#include "modo/matrix.hpp"

namespace modo {

FieldElement det_bareiss(Mat<FieldElement> m) {
    std::size_t n = m.size();
    FieldElement prev = m.sample().one_like();
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k).is_zero()) ++p;
            if (p == n) return m.sample().zero_like();
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    FieldElement d = m.at(n - 1, n - 1);
    return neg ? -d : d;
}

Mat<FieldElement> mat_inv(const Mat<FieldElement>& m) {
    FieldElement d = m.det();
    if (d.is_zero()) fail(Errc::singular_matrix, "matrix is not invertible");
    std::size_t n = m.size();
    if (n == 1) {
        Mat<FieldElement> r = m;
        r.at(0, 0) = d.inverse();
        return r;
    }
    Mat<FieldElement> adj = Mat<FieldElement>::zero(n, m.sample());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat<FieldElement> minor = Mat<FieldElement>::zero(n - 1, m.sample());
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            FieldElement cof = minor.det();
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = cof; // adjugate is the transposed cofactor matrix
        }
    return adj * d.inverse();
}

Mat<SpectralPoly> lift_spectral(const Mat<FieldElement>& m) {
    Mat<SpectralPoly> r = Mat<SpectralPoly>::zero(m.size(), SpectralPoly());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r.at(i, j) = SpectralPoly::constant(m.at(i, j));
    return r;
}

} // namespace modo
