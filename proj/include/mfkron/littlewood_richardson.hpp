#ifndef MFKRON_LITTLEWOOD_RICHARDSON_HPP_
#define MFKRON_LITTLEWOOD_RICHARDSON_HPP_

#include <cstdint>

#include "mfkron/character_expansion.hpp"
#include "mfkron/partition.hpp"
#include "mfkron/skew_shape.hpp"
#include "mfkron/verdict.hpp"

namespace mfkron {

  //! Decomposes the skew character [s] into irreducibles.
  //!
  //! Enumerates Littlewood-Richardson fillings of s: rows weakly increase,
  //! columns strictly increase, and the reverse reading word (right to left,
  //! top to bottom) is a lattice word. The content of each filling is the
  //! label of one constituent. Results are memoized and thread safe.
  CharacterExpansion skew_expand(SkewShape const& s);

  //! c^lam_{mu,nu}; throws DomainError unless |mu| + |nu| = |lam|.
  std::int64_t lr_coefficient(Partition const& lam,
                              Partition const& mu,
                              Partition const& nu);

  //! The outer (induction) product [a] x [b].
  CharacterExpansion outer_product(Partition const& a, Partition const& b);
  //! Bilinear extension to arbitrary (virtual) characters.
  CharacterExpansion outer_product(CharacterExpansion const& a,
                                   CharacterExpansion const& b);

  //! The skew shape whose character is [a] x [b]: a copy of a placed to the
  //! upper right of b, touching only at a corner.
  SkewShape disjoint_union(Partition const& a, Partition const& b);

  //! Classification of multiplicity-free outer products of two irreducible
  //! characters: rectangle x rectangle, rectangle x near-rectangle,
  //! two-line rectangle x fat hook, linear x anything.
  MfVerdict is_mf_outer(Partition const& a, Partition const& b);

  //! Segment data of the two rim paths of a basic skew diagram.
  //!
  //! The inner path runs from the lower left corner upward along the inner
  //! partition to the upper right corner; the outer path runs right then
  //! up along the outer partition. Lengths count unit edges.
  struct PathProfile {
    int  s_in                  = 0;
    int  s_out                 = 0;
    bool inner_is_rectangle    = false;
    int  outer_removable_count = 0;

    bool operator==(PathProfile const&) const = default;
  };

  //! Throws DomainError if \p basic has an empty row or column.
  PathProfile path_profile(SkewShape const& basic);

  //! Classification of multiplicity-free skew characters.
  //!
  //! Irreducible (non-proper) shapes are trivially multiplicity-free.
  //! Disconnected shapes are multiplicity-free iff they have exactly two
  //! components and the corresponding outer product is. A connected proper
  //! shape is multiplicity-free iff, up to rotation, its inner partition is
  //! a rectangle and one of s_in = 1; s_in = 2 with three removable outer
  //! nodes; s_out = 1 with three removable outer nodes; two removable outer
  //! nodes.
  MfVerdict is_mf_skew(SkewShape const& s);

  //! Drops the skew-expansion memo table (used by tests and benchmarks).
  void clear_skew_cache();

}  // namespace mfkron

#endif  // MFKRON_LITTLEWOOD_RICHARDSON_HPP_
