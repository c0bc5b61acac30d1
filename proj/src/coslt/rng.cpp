#include "coslt/rng.hpp"

#include <cmath>

namespace coslt {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  // xoshiro256++ seeded through splitmix64 over (seed, stream)
  std::uint64_t x = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x3c6ef372fe94f82bULL);
  for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Cx RngStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Cx(re, im);
}

void MeanVar::add(Cx w) {
  ++n;
  const Cx delta = w - mean;
  mean += delta / static_cast<double>(n);
  m2 += (delta.real() * (w - mean).real() + delta.imag() * (w - mean).imag());
}

MeanVar MeanVar::combine(const MeanVar& a, const MeanVar& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  MeanVar out;
  out.n = a.n + b.n;
  const Cx delta = b.mean - a.mean;
  out.mean = a.mean + delta * (static_cast<double>(b.n) / static_cast<double>(out.n));
  out.m2 = a.m2 + b.m2 +
           std::norm(delta) * static_cast<double>(a.n) * static_cast<double>(b.n) /
               static_cast<double>(out.n);
  return out;
}

double MeanVar::variance() const {
  return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
}

double MeanVar::std_error() const {
  return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
}

MeanVar reduce_tree(std::vector<MeanVar> batches) {
  if (batches.empty()) return MeanVar{};
  while (batches.size() > 1) {
    std::vector<MeanVar> next;
    next.reserve((batches.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < batches.size(); i += 2) {
      next.push_back(MeanVar::combine(batches[i], batches[i + 1]));
    }
    if (batches.size() % 2 == 1) next.push_back(batches.back());
    batches = std::move(next);
  }
  return batches[0];
}

}  // namespace coslt
