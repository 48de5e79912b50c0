#ifndef MFKRON_CHARACTERS_HPP_
#define MFKRON_CHARACTERS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfkron/character_expansion.hpp"
#include "mfkron/partition.hpp"

namespace mfkron {

  //! Cycle type of a permutation; labels a conjugacy class of S_n.
  struct CycleType {
    Partition cycles;

    int size() const noexcept {
      return cycles.size();
    }
    bool operator==(CycleType const&) const = default;
  };

  //! Character value chi_lam(rho) by the Murnaghan-Nakayama rule.
  //! Throws DomainError unless |lam| = |rho|.
  BigInt character_value(Partition const& lam, CycleType const& rho);

  //! Number of permutations of cycle type rho, n! / z_rho.
  BigInt class_size(CycleType const& rho);

  //! The full character table of S_n with exact entries.
  //!
  //! Rows (characters) and columns (classes) are both indexed by the
  //! partitions of n in descending lexicographic order.
  class CharacterTable {
   public:
    explicit CharacterTable(int n, unsigned jobs = 1);

    int degree() const noexcept {
      return _degree;
    }
    std::vector<Partition> const& labels() const noexcept {
      return _labels;
    }
    std::size_t order() const noexcept {
      return _labels.size();
    }
    std::size_t index_of(Partition const& p) const;

    BigInt const& value(std::size_t row, std::size_t col) const {
      return _values[row * _labels.size() + col];
    }
    BigInt const& value(Partition const& lam, Partition const& rho) const {
      return value(index_of(lam), index_of(rho));
    }
    std::vector<BigInt> const& class_sizes() const noexcept {
      return _class_sizes;
    }

    //! First index of a violated row or column orthogonality relation.
    std::optional<std::string> orthogonality_failure() const;

    std::string to_csv() const;
    std::string to_json() const;
    std::string to_text() const;

   private:
    int                    _degree;
    std::vector<Partition> _labels;
    std::vector<BigInt>    _values;
    std::vector<BigInt>    _class_sizes;
  };

  //! Largest n accepted by character_table (default 14, overridable by the
  //! MFKRON_TABLE_CEILING environment variable or set_table_ceiling).
  int  table_ceiling();
  void set_table_ceiling(int n);

  //! Memoized shared table; throws ResourceError above the ceiling.
  std::shared_ptr<CharacterTable const> character_table(int n);

  //! g(lam, mu, nu) = (1/n!) sum over classes of class size times the three
  //! character values. Throws DomainError on a degree mismatch and
  //! InvariantViolation if the division is inexact.
  std::int64_t kron_oracle(Partition const& lam,
                           Partition const& mu,
                           Partition const& nu);

  //! The full expansion of [lam].[mu] from the character table.
  CharacterExpansion kron_product_oracle(Partition const& lam,
                                         Partition const& mu);

}  // namespace mfkron

#endif  // MFKRON_CHARACTERS_HPP_
