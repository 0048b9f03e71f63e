// random.cpp: seeded splitmix64 stream and random test matrices

#include "mtk/random.hpp"

namespace mtk {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

Complex SplitMix64::unit_square() {
    const double re = uniform();
    const double im = uniform();
    return {re, im};
}

CMatrix random_matrix(SplitMix64& rng, Index rows, Index cols) {
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.unit_square();
    return m;
}

CMatrix random_square(SplitMix64& rng, Index n) {
    return random_matrix(rng, n, n);
}

CMatrix random_hermitian(SplitMix64& rng, Index n) {
    const CMatrix g = random_square(rng, n);
    return (g + g.adjoint()) / 2.0;
}

CMatrix random_hermitian_spectrum(SplitMix64& rng, Index n, double lo, double hi) {
    CMatrix g = random_square(rng, n);
    g.array() -= Complex(0.5, 0.5);
    Eigen::HouseholderQR<CMatrix> qr(g);
    const CMatrix q = qr.householderQ();
    RVector spectrum(n);
    for (Index i = 0; i < n; ++i) spectrum(i) = rng.uniform(lo, hi);
    return q * spectrum.cast<Complex>().asDiagonal() * q.adjoint();
}

} // namespace mtk
