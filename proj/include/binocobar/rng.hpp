#pragma once
#include <cstdint>

namespace binocobar {

/* splitmix64; fixed algorithm so seeded runs produce identical streams on
 * every platform (std::uniform_int_distribution is not portable). */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + (long long)below((std::uint64_t)(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master ^ (0xa076'1d64'78bd'642full * (index + 1)));
    return r.next();
}

} // namespace binocobar
