#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qslkit {

/// xoshiro256** seeded through splitmix64. The standard library engines are
/// portable but its distributions are not, so uniforms and normals are
/// generated by hand. Identical seeds give identical streams on every
/// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) word = splitmix64(x);
        have_spare_ = false;
    }

    /// Independent stream for a worker: offsets the seed space so per-worker
    /// streams never collide with the master stream.
    Rng stream(std::uint64_t index) const {
        Rng r(*this);
        r.jump_scramble(index + 1);
        return r;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// standard normal via Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = mag * std::sin(two_pi * u2);
        have_spare_ = true;
        return mag * std::cos(two_pi * u2);
    }

    /// complex standard Gaussian: independent N(0,1) real and imaginary parts
    std::complex<double> cgaussian() { return {gaussian(), gaussian()}; }

  private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    void jump_scramble(std::uint64_t index) {
        for (auto& word : s_) {
            std::uint64_t x = word ^ (0x6a09e667f3bcc909ULL * index);
            word = splitmix64(x);
        }
        have_spare_ = false;
    }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_;
};

}  // namespace qslkit
