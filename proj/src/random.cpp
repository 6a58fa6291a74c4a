#include "idealforge/random.hpp"

#include "idealforge/error.hpp"

namespace idealforge {

Int uniform_below(Rng& gen, const Int& bound) {
  if (bound <= 0) throw Error(ErrorKind::InvalidArgument, "sampling bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = mpz_sizeinbase(Int(bound - 1).get_mpz_t(), 2);
  for (;;) {
    Int candidate = 0;
    std::size_t have = 0;
    while (have < bits) {
      std::uint64_t word = gen();
      const std::size_t take = std::min<std::size_t>(64, bits - have);
      if (take < 64) word &= (std::uint64_t{1} << take) - 1;
      Int w;
      mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate += w << static_cast<mp_bitcnt_t>(have);
      have += take;
    }
    if (candidate < bound) return candidate;
  }
}

}  // namespace idealforge
