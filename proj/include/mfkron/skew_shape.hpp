#ifndef MFKRON_SKEW_SHAPE_HPP_
#define MFKRON_SKEW_SHAPE_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfkron/partition.hpp"

namespace mfkron {

  //! The diagram difference outer/inner of two nested partitions.
  class SkewShape {
   public:
    SkewShape() = default;
    //! Throws DomainError unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);
    //! A partition viewed as the skew shape p/().
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), {}) {}

    //! Parses `outer/inner` (or a bare partition) in the partition grammar.
    static SkewShape parse(std::string_view text);

    Partition const& outer() const noexcept {
      return _outer;
    }
    Partition const& inner() const noexcept {
      return _inner;
    }
    int size() const noexcept {
      return _outer.size() - _inner.size();
    }
    bool empty() const noexcept {
      return size() == 0;
    }

    //! Cells in reading order: rows top to bottom, columns left to right.
    std::vector<Node> cells() const;

    std::string to_string() const;

    bool                 operator==(SkewShape const&) const = default;
    std::strong_ordering operator<=>(SkewShape const&) const = default;

   private:
    Partition _outer;
    Partition _inner;
  };

  struct SkewShapeHash {
    std::size_t operator()(SkewShape const& s) const noexcept;
  };

  //! Result of stripping empty rows and columns and splitting into
  //! edge-connected pieces.
  struct SkewNormalForm {
    SkewShape basic;
    //! Each piece in its own basic form, ordered top to bottom.
    std::vector<SkewShape> components;
    //! Whether the 180 degree rotation of the basic shape is a partition.
    bool rotated_equal = false;
  };

  SkewNormalForm skew_normalize(SkewShape const& s);

  //! No empty rows or columns.
  bool is_basic(SkewShape const& s);

  //! The 180 degree rotation of a basic shape inside its bounding box.
  SkewShape rotate(SkewShape const& basic);

  //! The partition whose diagram equals s up to translation and 180 degree
  //! rotation, if any. Empty shapes give the empty partition.
  std::optional<Partition> as_partition(SkewShape const& s);

  //! True iff neither the basic shape nor its rotation is a partition.
  bool is_proper_skew(SkewShape const& s);

  //! All basic skew shapes with \p n cells, sorted.
  std::vector<SkewShape> enumerate_basic_skew_shapes(int n);

}  // namespace mfkron

template <>
struct std::hash<mfkron::SkewShape> : mfkron::SkewShapeHash {};

#endif  // MFKRON_SKEW_SHAPE_HPP_
