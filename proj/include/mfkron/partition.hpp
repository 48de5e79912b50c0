#ifndef MFKRON_PARTITION_HPP_
#define MFKRON_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mfkron {

  using BigInt = boost::multiprecision::cpp_int;

  BigInt factorial(int n);

  //! A weakly decreasing sequence of positive integers.
  //!
  //! Partitions label both the irreducible characters and the conjugacy
  //! classes of the symmetric group. They are stored densely; the exponent
  //! notation `a^b` is only used in the text grammar.
  class Partition {
   public:
    Partition() = default;

    //! Throws DomainError unless \p parts is weakly decreasing. Trailing
    //! zeros are dropped; any other non-positive entry is rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    //! Like the constructor but returns nullopt instead of throwing.
    static std::optional<Partition> from_sequence(std::vector<int> parts);

    //! Parses comma separated terms `a` or `a^b`; whitespace is ignored and
    //! the empty string is the empty partition. Throws ParseError.
    static Partition parse(std::string_view text);

    std::span<int const> parts() const noexcept {
      return _parts;
    }
    std::vector<int> const& vec() const noexcept {
      return _parts;
    }

    //! The sum of the parts.
    int size() const noexcept {
      return _size;
    }
    int length() const noexcept {
      return static_cast<int>(_parts.size());
    }
    int width() const noexcept {
      return _parts.empty() ? 0 : _parts.front();
    }
    int depth() const noexcept {
      return _size - width();
    }
    bool empty() const noexcept {
      return _parts.empty();
    }

    //! The part in 1-based row \p row, zero beyond the length.
    int row(int row) const noexcept {
      return row >= 1 && row <= length() ? _parts[row - 1] : 0;
    }

    //! Rendering in the text grammar; runs of three or more equal parts
    //! are written `a^b`.
    std::string to_string() const;

    bool operator==(Partition const&) const = default;
    // Plain lexicographic order on the parts.
    std::strong_ordering operator<=>(Partition const& that) const {
      return _parts <=> that._parts;
    }

   private:
    std::vector<int> _parts;
    int              _size = 0;
  };

  struct PartitionHash {
    std::size_t operator()(Partition const& p) const noexcept;
  };

  //! A cell of a Young diagram, 1-based (row, column).
  struct Node {
    int row;
    int col;

    bool operator==(Node const&) const = default;
  };

  Partition conjugate(Partition const& p);
  Partition intersect(Partition const& p, Partition const& q);
  //! Componentwise sum of parts.
  Partition add(Partition const& p, Partition const& q);
  //! Whether p is contained in q as a diagram.
  bool is_contained(Partition const& p, Partition const& q);

  //! Removable nodes, top to bottom.
  std::vector<Node> removable_nodes(Partition const& p);
  //! Addable nodes, top to bottom.
  std::vector<Node> addable_nodes(Partition const& p);
  Partition remove_node(Partition const& p, Node node);
  Partition add_node(Partition const& p, Node node);

  //! Side length of the largest square inside the diagram.
  int durfee_length(Partition const& p);
  int distinct_part_count(Partition const& p);

  int arm_length(Partition const& p, Node node);
  int leg_length(Partition const& p, Node node);
  int hook_length(Partition const& p, Node node);

  //! Number of nodes with hook length 1, 2, 3, and the number of 3-hooks of
  //! shape (2,1).
  struct HookCounts {
    int h1  = 0;
    int h2  = 0;
    int h3  = 0;
    int h21 = 0;

    bool operator==(HookCounts const&) const = default;
  };

  HookCounts hook_counts(Partition const& p);

  //! Number of standard Young tableaux, by the hook length formula.
  BigInt dimension(Partition const& p);

  enum class ShapeTag {
    empty,
    linear,
    natural,
    rectangle,
    hook,
    two_line,
    fat_hook,
    general
  };

  enum ShapeQualifier : unsigned {
    near_rectangle     = 1u << 0,
    two_line_rectangle = 1u << 1,
    fat_rectangle      = 1u << 2,
    proper_hook        = 1u << 3,
    proper_fat_hook    = 1u << 4,
  };

  //! One tag from the most specific applicable class plus every refined
  //! qualifier that applies. Tags are tried in the order empty, linear,
  //! natural, rectangle, hook, two_line, fat_hook, general.
  struct ShapeClass {
    ShapeTag tag        = ShapeTag::general;
    unsigned qualifiers = 0;

    bool has(ShapeQualifier q) const noexcept {
      return (qualifiers & q) != 0;
    }
  };

  ShapeClass       classify_shape(Partition const& p);
  std::string_view to_string(ShapeTag tag);

  bool is_linear(Partition const& p);
  //! (n-1,1) or its conjugate, n >= 3.
  bool is_natural(Partition const& p);
  bool is_rectangle(Partition const& p);
  //! Shapes (n-a, 1^a), including (n) and (1^n).
  bool is_hook(Partition const& p);
  bool is_two_line(Partition const& p);
  //! At most two distinct part values.
  bool is_fat_hook(Partition const& p);
  //! A fat hook from which one can delete the first or last row, or the
  //! first or last column, to leave a rectangle.
  bool is_near_rectangle(Partition const& p);

  struct PartitionConstraints {
    std::optional<int> max_length;
    std::optional<int> max_width;
  };

  //! All partitions of n meeting the constraints, in descending
  //! lexicographic order.
  std::vector<Partition> enumerate_partitions(int                  n,
                                              PartitionConstraints c = {});

  //! All partitions of n contained in \p bound, descending lexicographic.
  std::vector<Partition> partitions_inside(int n, Partition const& bound);

  //! Splits p into the rows with (1-based) index in \p rows and the rest.
  std::pair<Partition, Partition> split_rows(Partition const&   p,
                                             std::set<int> const& rows);

}  // namespace mfkron

template <>
struct std::hash<mfkron::Partition> : mfkron::PartitionHash {};

#endif  // MFKRON_PARTITION_HPP_
