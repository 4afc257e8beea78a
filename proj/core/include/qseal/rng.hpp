#ifndef QSEAL_RNG_HPP
#define QSEAL_RNG_HPP

#include <cstdint>

namespace qseal {

// Seeded splitmix64 stream. Self-contained so results are reproducible across
// platforms and standard libraries. Never global: every sampling operation
// takes an Rng (or a seed) explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64();

  // uniform in [0, 1)
  double uniform();

  // uniform in [0, n)
  int uniform_int(int n);

  int bit();

  // standard normal, Box-Muller
  double gaussian();

  // Independent stream derived from (original seed, index); used to fan out
  // deterministic per-trial substreams.
  Rng substream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace qseal

#endif
