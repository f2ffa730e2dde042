#include "bfaelm/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bfaelm {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    return splitmix64(x);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::uniform(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("RandomStream::uniform: lo must be < hi");
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0,1)
    return lo + u * (hi - lo);
}

double RandomStream::gaussian(double mean, double sd) {
    // u1 in (0,1] so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t RandomStream::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RandomStream::below: n must be >= 1");
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

RandomStream RandomStream::child(std::string_view label) const {
    return RandomStream(mix(seed_, fnv1a(label)));
}

RandomStream RandomStream::child(std::string_view label, std::uint64_t a) const {
    return RandomStream(mix(mix(seed_, fnv1a(label)), a));
}

RandomStream RandomStream::child(std::string_view label, std::uint64_t a, std::uint64_t b) const {
    return RandomStream(mix(mix(mix(seed_, fnv1a(label)), a), b));
}

RandomStream RandomStream::child(std::string_view label, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) const {
    return RandomStream(mix(mix(mix(mix(seed_, fnv1a(label)), a), b), c));
}

}  // namespace bfaelm
