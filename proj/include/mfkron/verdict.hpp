#ifndef MFKRON_VERDICT_HPP_
#define MFKRON_VERDICT_HPP_

#include <optional>
#include <string>

namespace mfkron {

  //! Which symmetry was applied to the operands before a clause matched.
  //! Conjugating an operand of a Kronecker product permutes constituents by
  //! the sign twist, so none of these change multiplicity-freeness.
  struct Normalization {
    bool conjugate_first  = false;
    bool conjugate_second = false;
    bool swapped          = false;
    bool rotated          = false;

    bool        operator==(Normalization const&) const = default;
    std::string to_string() const;
  };

  //! Outcome of a multiplicity-free predicate.
  //!
  //! The clause tag is present exactly when the answer is positive.
  struct MfVerdict {
    bool                       multiplicity_free = false;
    std::optional<std::string> clause;
    Normalization              normalization;
    //! Free-form remark, e.g. a reduction applied before matching.
    std::string note;

    static MfVerdict yes(std::string clause, Normalization n = {}) {
      return MfVerdict{true, std::move(clause), n, {}};
    }
    static MfVerdict no() {
      return MfVerdict{};
    }

    explicit operator bool() const noexcept {
      return multiplicity_free;
    }
  };

}  // namespace mfkron

#endif  // MFKRON_VERDICT_HPP_
