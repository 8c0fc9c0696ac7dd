#pragma once

#include <cstdint>
#include <random>

#include "qcap/matrix.hpp"

namespace qcap {

/// Library-wide default master seed, overridable via QCAP_SEED / --seed
/// at the CLI layer.
inline constexpr std::uint64_t kDefaultSeed = 0x51u;

/// Deterministic random source. Doubles are produced by an explicit
/// 53-bit mapping from the raw mt19937_64 stream, so a given seed yields
/// the same draw sequence regardless of standard-library distribution
/// internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform();

    /// Standard normal via Box-Muller.
    double gaussian();

    /// Child stream with a seed derived from (seed, stream); independent
    /// of draw order on the parent.
    Rng fork(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Matrix of iid standard complex Gaussian entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed d x d unitary (QR of a Ginibre matrix with the
/// R-diagonal phase fix).
ComplexMatrix haar_unitary(std::size_t d, Rng& rng);

}  // namespace qcap
