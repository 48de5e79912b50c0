#ifndef MFKRON_CLASSIFICATION_HPP_
#define MFKRON_CLASSIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mfkron/character_expansion.hpp"
#include "mfkron/kronecker.hpp"
#include "mfkron/partition.hpp"
#include "mfkron/skew_shape.hpp"
#include "mfkron/verdict.hpp"

namespace mfkron {

  //! Decides whether [lam].[mu] is multiplicity-free.
  //!
  //! The clauses are tried in the order T1.1-case-1 .. T1.1-case-6; within a
  //! clause the four conjugation combinations are tried in the order
  //! none, first, second, both, each with the operands in both orders.
  //! The first match wins. Throws DomainError on a degree mismatch or for
  //! n = 0.
  MfVerdict is_mf_pair(Partition const& lam, Partition const& mu);

  //! [lam].[mu].[nu] is multiplicity-free only when some operand is linear;
  //! a linear operand is absorbed (as the identity or the sign twist) and
  //! the remaining pair is classified.
  MfVerdict is_mf_triple(Partition const& lam,
                         Partition const& mu,
                         Partition const& nu);

  //! [s].[alpha] for a skew shape s with |s| = |alpha|.
  //!
  //! Shapes that are partitions up to rotation are handed to is_mf_pair.
  //! For proper s the tags are T1.3-case-1 (s multiplicity-free, alpha
  //! linear), T1.3-case-2 (alpha a rectangle with both sides at least two,
  //! [s] = [n] + [n-1,1]) and T1.3-case-3 (alpha = (k,k), [s] = [k+1,k-1] +
  //! [k,k]). Cases 2 and 3 compare expansions, not shapes.
  MfVerdict is_mf_skew_times_irr(SkewShape const& s, Partition const& alpha);

  //! [s].[t]; never multiplicity-free when both shapes are proper.
  MfVerdict is_mf_skew_times_skew(SkewShape const& s, SkewShape const& t);

  //! [mu].[n-1,1] =
  //!   sum_{A in rem(mu)} sum_{B in add(mu_A)} [(mu_A)^B] - [mu].
  //! Throws DomainError for n < 3.
  CharacterExpansion product_with_natural(Partition const& mu);

  //! [k+1,k]^2: every partition of 2k+1 with at most four parts.
  CharacterExpansion staircase_square(int k);
  //! [k,k]^2: partitions of 2k into even parts with at most four parts, and
  //! partitions into odd parts with exactly four parts.
  CharacterExpansion kk_square(int k);
  //! [k,k].[k+1,k-1]: partitions of 2k with fewer than four parts that are
  //! not all even, and partitions with exactly four parts that are neither
  //! all even nor all odd.
  CharacterExpansion kk_times_near(int k);

  //! g((k,k), (2k-b, 1^b), nu).
  //!
  //! For a double hook nu = (a1, a2, 2^b2, 1^b1) that is not a hook, the
  //! indicator formula X1 + X2 + X3 - X4 is evaluated after conjugating nu
  //! (and replacing b by 2k-1-b) if a1 - a2 > b1. Hooks are evaluated by
  //! \p engine; partitions with Durfee length at least three give 0.
  //! Throws InvariantViolation for any value outside {0, 1}.
  int kk_times_hook_mult(int              k,
                         int              b,
                         Partition const& nu,
                         Engine           engine = Engine::automatic);

  enum class SmallDepthKind {
    //! [n-2,2].[a^b], n = ab >= 6, a, b > 1.
    rectangle_two_row,
    //! [n-2,1^2].[a^b], a >= b > 1.
    rectangle_hook,
    //! [n-3,3].[k,k], n = 2k >= 6.
    kk_three_row,
  };

  struct SmallDepthProduct {
    CharacterExpansion product{0};
    //! False when the product came from the engine rather than the listed
    //! terms (kk_three_row with n <= 16).
    bool closed_form = true;
    //! For kk_three_row: the partitions lam, besides (k,k), whose product
    //! with [n-3,3] is multiplicity-free for 6 <= n <= 16 (up to
    //! conjugation).
    std::vector<Partition> small_exceptions;
  };

  //! The listed decompositions of products with a partition of depth two or
  //! three. \p p and \p q are (a, b) for the rectangle kinds and (k, unused)
  //! for kk_three_row. Listed terms whose label is not a partition are
  //! dropped. Throws DomainError if the parameters are out of range.
  SmallDepthProduct small_depth_products(SmallDepthKind kind,
                                         int            p,
                                         int            q      = 0,
                                         Engine         engine = Engine::automatic);

  //! Multiplicities in [lam]^2 of the constituents of depth at most three,
  //! from the hook counts of lam:
  //!   a1 [n-1,1], a2 [n-2,2], b2 [n-2,1^2],
  //!   a3 [n-3,3], b3 [n-3,1^3], c3 [n-3,2,1].
  //! A coefficient outside the degree range where its polynomial holds is
  //! left empty.
  struct SquareLowDepth {
    std::optional<std::int64_t> a1;
    std::optional<std::int64_t> a2;
    std::optional<std::int64_t> b2;
    std::optional<std::int64_t> a3;
    std::optional<std::int64_t> b3;
    std::optional<std::int64_t> c3;
  };

  //! Throws DomainError for linear lam.
  SquareLowDepth square_low_depth(Partition const& lam);

}  // namespace mfkron

#endif  // MFKRON_CLASSIFICATION_HPP_
