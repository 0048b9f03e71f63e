// random.hpp: seeded splitmix64 stream and random test matrices

#pragma once

#include "mtk/linalg.hpp"

#include <cstdint>

namespace mtk {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Real and imaginary parts independent in [0, 1).
    Complex unit_square();

private:
    std::uint64_t state_;
};

/// Entries drawn from the complex unit square.
CMatrix random_matrix(SplitMix64& rng, Index rows, Index cols);
CMatrix random_square(SplitMix64& rng, Index n);
/// (G + G*) / 2 for G from random_square.
CMatrix random_hermitian(SplitMix64& rng, Index n);
/// Hermitian with eigenvalues uniform in [lo, hi] and a random unitary frame.
CMatrix random_hermitian_spectrum(SplitMix64& rng, Index n, double lo, double hi);

} // namespace mtk
