#ifndef MFKRON_CHARACTER_EXPANSION_HPP_
#define MFKRON_CHARACTER_EXPANSION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "mfkron/partition.hpp"

namespace mfkron {

  //! A (virtual) character written in the basis of irreducible characters.
  //!
  //! Only nonzero multiplicities are stored. Terms iterate in descending
  //! lexicographic order of their labels. Negative multiplicities are
  //! permitted; whether a value is a genuine character is a property of the
  //! context it comes from.
  class CharacterExpansion {
   public:
    using Terms = std::map<Partition, std::int64_t, std::greater<>>;

    explicit CharacterExpansion(int degree = 0) : _degree(degree) {}

    int degree() const noexcept {
      return _degree;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    std::size_t size() const noexcept {
      return _terms.size();
    }
    bool empty() const noexcept {
      return _terms.empty();
    }

    std::int64_t multiplicity(Partition const& p) const;
    std::int64_t operator[](Partition const& p) const {
      return multiplicity(p);
    }

    //! Adds m copies of [p]; throws DomainError on a degree mismatch.
    void add(Partition const& p, std::int64_t m = 1);

    CharacterExpansion& operator+=(CharacterExpansion const& that);
    CharacterExpansion& operator-=(CharacterExpansion const& that);
    CharacterExpansion& operator*=(std::int64_t scalar);

    friend CharacterExpansion operator+(CharacterExpansion a,
                                        CharacterExpansion const& b) {
      return a += b;
    }
    friend CharacterExpansion operator-(CharacterExpansion a,
                                        CharacterExpansion const& b) {
      return a -= b;
    }

    bool operator==(CharacterExpansion const&) const = default;

    //! All multiplicities positive.
    bool is_genuine() const;
    //! Genuine, nonempty, and every multiplicity is one.
    bool is_multiplicity_free() const;
    //! Zero for the zero character.
    std::int64_t max_multiplicity() const;
    std::int64_t min_multiplicity() const;

    //! Multiplication by the sign character: every label conjugated.
    CharacterExpansion conjugated() const;

    //! Degree of the character as a sum of constituent dimensions.
    BigInt dimension() const;

    //! `[4] + [2,2] + 2[1^4]`; the zero character renders as `0`.
    std::string to_string() const;

   private:
    int   _degree;
    Terms _terms;
  };

  CharacterExpansion irreducible(Partition const& p);

}  // namespace mfkron

#endif  // MFKRON_CHARACTER_EXPANSION_HPP_
