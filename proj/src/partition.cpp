#include "mfkron/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "mfkron/error.hpp"

namespace mfkron {

  BigInt factorial(int n) {
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) {
      result *= i;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  std::optional<Partition> Partition::from_sequence(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) {
      parts.pop_back();
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
        return std::nullopt;
      }
    }
    Partition p;
    p._size  = std::accumulate(parts.begin(), parts.end(), 0);
    p._parts = std::move(parts);
    return p;
  }

  Partition::Partition(std::vector<int> parts) {
    auto p = from_sequence(std::move(parts));
    if (!p) {
      throw DomainError("parts must be positive and weakly decreasing");
    }
    *this = std::move(*p);
  }

  namespace {
    int parse_positive(std::string_view digits, std::string_view token) {
      int value = 0;
      if (digits.empty()) {
        throw ParseError("expected a positive integer", std::string(token));
      }
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || value <= 0) {
        throw ParseError("expected a positive integer", std::string(token));
      }
      return value;
    }
  }  // namespace

  Partition Partition::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact.push_back(c);
      }
    }
    std::vector<int> parts;
    if (compact.empty()) {
      return Partition();
    }
    std::string_view rest = compact;
    while (true) {
      auto             comma = rest.find(',');
      std::string_view term  = rest.substr(0, comma);
      auto             caret = term.find('^');
      int              value = 0;
      int              count = 1;
      if (caret == std::string_view::npos) {
        value = parse_positive(term, term);
      } else {
        value = parse_positive(term.substr(0, caret), term);
        count = parse_positive(term.substr(caret + 1), term);
      }
      if (!parts.empty() && value > parts.back()) {
        throw ParseError("parts must be weakly decreasing", std::string(term));
      }
      parts.insert(parts.end(), count, value);
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
  }

  std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _parts.size();) {
      std::size_t j = i;
      while (j < _parts.size() && _parts[j] == _parts[i]) {
        ++j;
      }
      std::size_t const run = j - i;
      if (!out.empty()) {
        out += ',';
      }
      if (run >= 3) {
        out += std::to_string(_parts[i]) + '^' + std::to_string(run);
      } else {
        for (std::size_t k = 0; k < run; ++k) {
          if (k > 0) {
            out += ',';
          }
          out += std::to_string(_parts[i]);
        }
      }
      i = j;
    }
    return out;
  }

  std::size_t PartitionHash::operator()(Partition const& p) const noexcept {
    std::size_t seed = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) {
      seed ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (seed << 6)
              + (seed >> 2);
    }
    return seed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagram operations
  ////////////////////////////////////////////////////////////////////////

  Partition conjugate(Partition const& p) {
    std::vector<int> parts(p.width(), 0);
    for (int row : p.parts()) {
      for (int j = 0; j < row; ++j) {
        ++parts[j];
      }
    }
    return Partition(std::move(parts));
  }

  Partition intersect(Partition const& p, Partition const& q) {
    std::vector<int> parts(std::min(p.length(), q.length()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = std::min(p.parts()[i], q.parts()[i]);
    }
    return Partition(std::move(parts));
  }

  Partition add(Partition const& p, Partition const& q) {
    std::vector<int> parts(std::max(p.length(), q.length()));
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      parts[i] = p.row(i + 1) + q.row(i + 1);
    }
    return Partition(std::move(parts));
  }

  bool is_contained(Partition const& p, Partition const& q) {
    if (p.length() > q.length()) {
      return false;
    }
    for (int i = 1; i <= p.length(); ++i) {
      if (p.row(i) > q.row(i)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Node> removable_nodes(Partition const& p) {
    std::vector<Node> nodes;
    for (int i = 1; i <= p.length(); ++i) {
      if (p.row(i) > p.row(i + 1)) {
        nodes.push_back({i, p.row(i)});
      }
    }
    return nodes;
  }

  std::vector<Node> addable_nodes(Partition const& p) {
    std::vector<Node> nodes;
    for (int i = 1; i <= p.length() + 1; ++i) {
      if (i == 1 || p.row(i - 1) > p.row(i)) {
        nodes.push_back({i, p.row(i) + 1});
      }
    }
    return nodes;
  }

  Partition remove_node(Partition const& p, Node node) {
    if (node.row < 1 || p.row(node.row) != node.col
        || p.row(node.row + 1) == node.col) {
      throw DomainError("node is not removable");
    }
    std::vector<int> parts = p.vec();
    --parts[node.row - 1];
    return Partition(std::move(parts));
  }

  Partition add_node(Partition const& p, Node node) {
    if (node.row < 1 || node.row > p.length() + 1
        || p.row(node.row) + 1 != node.col
        || (node.row > 1 && p.row(node.row - 1) < node.col)) {
      throw DomainError("node is not addable");
    }
    std::vector<int> parts = p.vec();
    if (node.row > p.length()) {
      parts.push_back(1);
    } else {
      ++parts[node.row - 1];
    }
    return Partition(std::move(parts));
  }

  int durfee_length(Partition const& p) {
    int d = 0;
    while (p.row(d + 1) >= d + 1) {
      ++d;
    }
    return d;
  }

  int distinct_part_count(Partition const& p) {
    return static_cast<int>(removable_nodes(p).size());
  }

  int arm_length(Partition const& p, Node node) {
    return p.row(node.row) - node.col;
  }

  int leg_length(Partition const& p, Node node) {
    int below = 0;
    while (p.row(node.row + below + 1) >= node.col) {
      ++below;
    }
    return below;
  }

  int hook_length(Partition const& p, Node node) {
    return arm_length(p, node) + leg_length(p, node) + 1;
  }

  HookCounts hook_counts(Partition const& p) {
    HookCounts     counts;
    Partition const t = conjugate(p);
    for (int i = 1; i <= p.length(); ++i) {
      for (int j = 1; j <= p.row(i); ++j) {
        int const arm = p.row(i) - j;
        int const leg = t.row(j) - i;
        switch (arm + leg + 1) {
          case 1: ++counts.h1; break;
          case 2: ++counts.h2; break;
          case 3:
            ++counts.h3;
            if (arm == 1 && leg == 1) {
              ++counts.h21;
            }
            break;
          default: break;
        }
      }
    }
    return counts;
  }

  BigInt dimension(Partition const& p) {
    Partition const t       = conjugate(p);
    BigInt          product = 1;
    for (int i = 1; i <= p.length(); ++i) {
      for (int j = 1; j <= p.row(i); ++j) {
        product *= (p.row(i) - j) + (t.row(j) - i) + 1;
      }
    }
    return factorial(p.size()) / product;
  }

  ////////////////////////////////////////////////////////////////////////
  // Shape classes
  ////////////////////////////////////////////////////////////////////////

  bool is_linear(Partition const& p) {
    return !p.empty() && (p.length() == 1 || p.width() == 1);
  }

  bool is_natural(Partition const& p) {
    int const n = p.size();
    if (n < 3) {
      return false;
    }
    return p == Partition{n - 1, 1} || conjugate(p) == Partition{n - 1, 1};
  }

  bool is_rectangle(Partition const& p) {
    return !p.empty() && p.parts().front() == p.parts().back();
  }

  bool is_hook(Partition const& p) {
    return !p.empty() && p.row(2) <= 1;
  }

  bool is_two_line(Partition const& p) {
    return p.length() == 2 || p.width() == 2;
  }

  bool is_fat_hook(Partition const& p) {
    return !p.empty() && distinct_part_count(p) <= 2;
  }

  bool is_near_rectangle(Partition const& p) {
    if (!is_fat_hook(p)) {
      return false;
    }
    if (is_rectangle(p)) {
      return true;
    }
    // p = (a^b, c^d) with a > c.
    int const a = p.parts().front();
    int const c = p.parts().back();
    int const b = static_cast<int>(
        std::count(p.parts().begin(), p.parts().end(), a));
    int const d = p.length() - b;
    return b == 1 || d == 1 || c == 1 || a - c == 1;
  }

  ShapeClass classify_shape(Partition const& p) {
    ShapeClass result;
    if (p.empty()) {
      result.tag = ShapeTag::empty;
      return result;
    }
    bool const linear = is_linear(p);
    bool const rect   = is_rectangle(p);
    bool const two    = is_two_line(p);
    bool const hook   = is_hook(p);
    bool const fat    = is_fat_hook(p);

    if (fat && is_near_rectangle(p)) {
      result.qualifiers |= near_rectangle;
    }
    if (rect && two) {
      result.qualifiers |= two_line_rectangle;
    }
    if (rect && !linear && !two) {
      result.qualifiers |= fat_rectangle;
    }
    // (n-a, 1^a) with 1 <= a < n-1
    if (hook && !linear) {
      result.qualifiers |= proper_hook;
    }
    if (fat && !rect && !hook && !two) {
      result.qualifiers |= proper_fat_hook;
    }

    if (linear) {
      result.tag = ShapeTag::linear;
    } else if (is_natural(p)) {
      result.tag = ShapeTag::natural;
    } else if (rect) {
      result.tag = ShapeTag::rectangle;
    } else if (hook) {
      result.tag = ShapeTag::hook;
    } else if (two) {
      result.tag = ShapeTag::two_line;
    } else if (fat) {
      result.tag = ShapeTag::fat_hook;
    } else {
      result.tag = ShapeTag::general;
    }
    return result;
  }

  std::string_view to_string(ShapeTag tag) {
    switch (tag) {
      case ShapeTag::empty: return "empty";
      case ShapeTag::linear: return "linear";
      case ShapeTag::natural: return "natural-label";
      case ShapeTag::rectangle: return "rectangle";
      case ShapeTag::hook: return "hook";
      case ShapeTag::two_line: return "two-line";
      case ShapeTag::fat_hook: return "fat-hook";
      case ShapeTag::general: return "general";
    }
    return "general";
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Appends all partitions of `remaining` with parts bounded row by row by
    // `cap(row)`, in descending lexicographic order.
    template <typename Cap>
    void enumerate_into(std::vector<Partition>& out,
                        std::vector<int>&       prefix,
                        int                     remaining,
                        int                     max_part,
                        int                     max_length,
                        Cap const&              cap) {
      if (remaining == 0) {
        out.emplace_back(prefix);
        return;
      }
      int const row = static_cast<int>(prefix.size()) + 1;
      if (row > max_length) {
        return;
      }
      int const hi = std::min({remaining, max_part, cap(row)});
      for (int part = hi; part >= 1; --part) {
        // The remaining rows can absorb at most part * rows_left cells.
        long const rows_left = max_length - row + 1;
        if (static_cast<long>(part) * rows_left < remaining) {
          break;
        }
        prefix.push_back(part);
        enumerate_into(out, prefix, remaining - part, part, max_length, cap);
        prefix.pop_back();
      }
    }
  }  // namespace

  std::vector<Partition> enumerate_partitions(int n, PartitionConstraints c) {
    if (n < 0) {
      throw DomainError("cannot enumerate partitions of a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int>       prefix;
    int const              max_length = c.max_length.value_or(n);
    int const              max_width  = c.max_width.value_or(n);
    enumerate_into(out, prefix, n, max_width, max_length, [](int) {
      return std::numeric_limits<int>::max();
    });
    return out;
  }

  std::vector<Partition> partitions_inside(int n, Partition const& bound) {
    std::vector<Partition> out;
    if (n < 0 || n > bound.size()) {
      return out;
    }
    std::vector<int> prefix;
    enumerate_into(out, prefix, n, bound.width(), bound.length(),
                   [&bound](int row) { return bound.row(row); });
    return out;
  }

  std::pair<Partition, Partition> split_rows(Partition const&     p,
                                             std::set<int> const& rows) {
    std::vector<int> selected;
    std::vector<int> rest;
    for (int r : rows) {
      if (r < 1 || r > p.length()) {
        throw DomainError("row index out of range: " + std::to_string(r));
      }
    }
    for (int i = 1; i <= p.length(); ++i) {
      (rows.contains(i) ? selected : rest).push_back(p.row(i));
    }
    return {Partition(std::move(selected)), Partition(std::move(rest))};
  }

}  // namespace mfkron
