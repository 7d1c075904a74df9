#ifndef SAFSIM_CORE_RANDOM_HPP
#define SAFSIM_CORE_RANDOM_HPP

#include <cstdint>
#include <random>

namespace safsim {

/// splitmix64 finaliser, used to derive independent stream seeds.
constexpr std::uint64_t
mixSeed(std::uint64_t seed, std::uint64_t stream) noexcept
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/** \brief Seeded random source.
 *
 *  Conversions to real and bounded integers are done here instead of through
 *  the <random> distributions, whose output is implementation-defined; this
 *  keeps simulation traces identical across standard libraries.
 */
class Rng
{
public:
  explicit
  Rng(std::uint64_t seed)
    : m_engine(seed)
  {
  }

  std::uint64_t
  next()
  {
    return m_engine();
  }

  /// uniform on [0, 1)
  double
  uniform01()
  {
    return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
  }

  /// uniform on [lo, hi)
  double
  uniformReal(double lo, double hi)
  {
    return lo + (hi - lo) * uniform01();
  }

  /// uniform on {0, ..., n-1}; n must be positive
  std::uint64_t
  uniformIndex(std::uint64_t n)
  {
    // Lemire's rejection keeps the result unbiased
    std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t x = m_engine();
      if (x >= threshold) {
        return x % n;
      }
    }
  }

private:
  std::mt19937_64 m_engine;
};

} // namespace safsim

#endif // SAFSIM_CORE_RANDOM_HPP
