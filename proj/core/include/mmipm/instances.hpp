#pragma once

#include <cstdint>
#include <cstddef>
#include <string>

#include "mmipm/sparse.hpp"
#include "mmipm/vectors.hpp"

namespace mmipm {

// SplitMix64: 64-bit counter-based generator. Fixed algorithm so identical
// seeds give bit-identical instances on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in {0, ..., m-1}.
    std::uint64_t below(std::uint64_t m) { return next() % m; }

private:
    std::uint64_t state_;
};

enum class Family { GridLaplacian, ErGraphLaplacian, RandomDiagDominant, Diagonal };
enum class BMode { Zero, Ones, RandomPm, ScaledRandom };

struct InstanceSpec {
    Family family = Family::GridLaplacian;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double gamma = 0.0;    // identity shift; required > 0 for Laplacian families
    double density = 0.0;  // ER edge probability
    BMode b_mode = BMode::Zero;
    double b_scale = 1.0;  // target ||b||_2 for ScaledRandom
};

struct Instance {
    SparseSymMatrix a;
    DenseVector b;
};

// Deterministic: identical spec+seed gives bit-identical output. Every
// generated matrix is certified before being returned; a failure raises
// CertificationFailedError (a generator bug, not an input error).
// The ER family keeps the largest connected component, so the returned
// dimension can be below spec.n.
Instance generate(const InstanceSpec& spec);

const char* family_name(Family f);
bool parse_family(const std::string& name, Family& out);
bool parse_b_mode(const std::string& name, BMode& out);

}  // namespace mmipm
