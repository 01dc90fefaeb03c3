#ifndef CIQ_RANDOM_HPP
#define CIQ_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ciq {

// Reproducible random numbers for test fields and trial states.
//
// The generator is std::mt19937_64, whose output sequence is pinned by the
// C++ standard, and doubles are derived from the top 53 bits directly, so
// the same seed produces bit-identical streams on every platform.  The
// std::*_distribution adaptors have implementation-defined algorithms and
// must not be used here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ciq

#endif  // CIQ_RANDOM_HPP
