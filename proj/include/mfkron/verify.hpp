#ifndef MFKRON_VERIFY_HPP_
#define MFKRON_VERIFY_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "mfkron/character_expansion.hpp"
#include "mfkron/kronecker.hpp"
#include "mfkron/partition.hpp"

namespace mfkron {

  enum class VerifyMode { pairs, triples, skew, engines };

  std::string_view to_string(VerifyMode mode);
  //! Accepts "pairs", "triples", "skew", "engines".
  VerifyMode parse_verify_mode(std::string_view text);

  //! Largest degree a sweep accepts without forcing. Defaults are pairs 9,
  //! triples 7, skew 7, engines 7; MFKRON_MAX_PAIRS, MFKRON_MAX_TRIPLES,
  //! MFKRON_MAX_SKEW and MFKRON_MAX_ENGINES override them.
  int verify_ceiling(VerifyMode mode);

  struct Mismatch {
    std::vector<std::string> operands;
    std::string              predicted;
    std::string              computed;

    auto operator<=>(Mismatch const&) const = default;
  };

  struct VerificationReport {
    int                       degree = 0;
    VerifyMode                mode   = VerifyMode::pairs;
    Engine                    engine = Engine::automatic;
    std::size_t               pairs_checked = 0;
    std::vector<Mismatch>     mismatches;  // sorted
    std::chrono::milliseconds wall_time{0};

    bool success() const noexcept {
      return mismatches.empty();
    }
    //! Deterministic renderings; the wall time is not included.
    std::string to_text() const;
    std::string to_json() const;
  };

  //! Products [lam].[mu] keyed by the unordered pair.
  //!
  //! On disk: a header line {"format":"mfkron-cache","version":1} followed
  //! by one JSON record per line,
  //!   {"n":N,"lambda":"...","mu":"...","terms":[["p",m],...]},
  //! with lambda the lexicographically larger operand. Later records for the
  //! same key replace earlier ones.
  class ProductCache {
   public:
    ProductCache() = default;

    //! Reads \p path if it exists. Throws ParseError on a malformed file.
    void load(std::filesystem::path const& path);
    //! Appends the records added since the last load or save, writing the
    //! header first if the file is new or empty.
    void save(std::filesystem::path const& path);

    std::optional<CharacterExpansion> find(Partition const& lam,
                                           Partition const& mu) const;
    void store(Partition const& lam, Partition const& mu, CharacterExpansion product);

    //! The product from the cache, computing and storing it on a miss.
    CharacterExpansion product(Partition const& lam, Partition const& mu, Engine engine);

    std::size_t size() const;

    //! One record per line, as written to disk.
    static std::string encode(Partition const& lam,
                              Partition const& mu,
                              CharacterExpansion const& product);
    //! Inverse of encode; returns (lambda, mu, product).
    static std::tuple<Partition, Partition, CharacterExpansion> decode(std::string_view line);

   private:
    using Key = std::pair<Partition, Partition>;
    static Key canonical(Partition const& lam, Partition const& mu);

    mutable std::mutex              _mutex;
    std::map<Key, CharacterExpansion> _entries;
    std::vector<Key>                _pending;
  };

  struct VerifyOptions {
    VerifyMode    mode   = VerifyMode::pairs;
    Engine        engine = Engine::automatic;
    unsigned      jobs   = 1;
    bool          force  = false;
    ProductCache* cache  = nullptr;
  };

  //! pairs: is_mf_pair against the computed product, over unordered pairs.
  //! triples: is_mf_triple against the computed triple product, over
  //! unordered triples. skew: over basic skew shapes of size n, is_mf_skew
  //! against the expansion, is_mf_skew_times_irr against the product for
  //! every partition, and is_mf_skew_times_skew over unordered pairs of
  //! proper shapes. engines: the recursive engine against the oracle on
  //! every triple.
  //!
  //! Throws ResourceError if n exceeds the mode's ceiling and force is off.
  VerificationReport run_verification(int n, VerifyOptions const& options);

}  // namespace mfkron

#endif  // MFKRON_VERIFY_HPP_
