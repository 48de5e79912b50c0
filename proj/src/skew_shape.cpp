#include "mfkron/skew_shape.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "mfkron/error.hpp"

namespace mfkron {

  SkewShape::SkewShape(Partition outer, Partition inner)
      : _outer(std::move(outer)), _inner(std::move(inner)) {
    if (!is_contained(_inner, _outer)) {
      throw DomainError("inner partition " + _inner.to_string()
                        + " is not contained in " + _outer.to_string());
    }
  }

  SkewShape SkewShape::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return SkewShape(Partition::parse(text));
    }
    if (text.find('/', slash + 1) != std::string_view::npos) {
      throw ParseError("more than one '/' in skew shape", std::string(text));
    }
    Partition outer = Partition::parse(text.substr(0, slash));
    Partition inner = Partition::parse(text.substr(slash + 1));
    if (!is_contained(inner, outer)) {
      throw ParseError("inner partition not contained in outer",
                       std::string(text));
    }
    return SkewShape(std::move(outer), std::move(inner));
  }

  std::vector<Node> SkewShape::cells() const {
    std::vector<Node> out;
    for (int i = 1; i <= _outer.length(); ++i) {
      for (int j = _inner.row(i) + 1; j <= _outer.row(i); ++j) {
        out.push_back({i, j});
      }
    }
    return out;
  }

  std::string SkewShape::to_string() const {
    return _outer.to_string() + "/" + _inner.to_string();
  }

  std::size_t SkewShapeHash::operator()(SkewShape const& s) const noexcept {
    PartitionHash h;
    return h(s.outer()) * 1000003u ^ h(s.inner());
  }

  namespace {
    // Re-indexes the rows and columns occupied by `cells` consecutively and
    // reads off the resulting basic skew shape.
    SkewShape compress(std::vector<Node> const& cells) {
      if (cells.empty()) {
        return SkewShape();
      }
      std::set<int> rows;
      std::set<int> cols;
      for (auto const& c : cells) {
        rows.insert(c.row);
        cols.insert(c.col);
      }
      std::map<int, int> row_index;
      std::map<int, int> col_index;
      int                k = 0;
      for (int r : rows) {
        row_index[r] = ++k;
      }
      k = 0;
      for (int c : cols) {
        col_index[c] = ++k;
      }
      std::vector<int> lo(rows.size(), std::numeric_limits<int>::max());
      std::vector<int> hi(rows.size(), 0);
      for (auto const& c : cells) {
        int const r = row_index[c.row] - 1;
        int const j = col_index[c.col];
        lo[r]       = std::min(lo[r], j);
        hi[r]       = std::max(hi[r], j);
      }
      std::vector<int> outer(hi.begin(), hi.end());
      std::vector<int> inner;
      for (int x : lo) {
        inner.push_back(x - 1);
      }
      return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
    }
  }  // namespace

  SkewNormalForm skew_normalize(SkewShape const& s) {
    SkewNormalForm result;
    auto const     cells = s.cells();
    result.basic         = compress(cells);
    if (cells.empty()) {
      return result;
    }
    auto const& outer    = result.basic.outer();
    result.rotated_equal = is_rectangle(outer);

    std::set<std::pair<int, int>> unseen;
    for (auto const& c : cells) {
      unseen.insert({c.row, c.col});
    }
    // Seeds are taken in reading order so components come out top to bottom.
    for (auto const& seed : cells) {
      if (!unseen.contains({seed.row, seed.col})) {
        continue;
      }
      std::vector<Node> piece;
      std::queue<Node>  frontier;
      frontier.push(seed);
      unseen.erase({seed.row, seed.col});
      while (!frontier.empty()) {
        Node const c = frontier.front();
        frontier.pop();
        piece.push_back(c);
        for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          auto it = unseen.find({c.row + dr, c.col + dc});
          if (it != unseen.end()) {
            frontier.push({it->first, it->second});
            unseen.erase(it);
          }
        }
      }
      result.components.push_back(compress(piece));
    }
    return result;
  }

  bool is_basic(SkewShape const& s) {
    auto const& outer = s.outer();
    auto const& inner = s.inner();
    for (int i = 1; i <= outer.length(); ++i) {
      if (inner.row(i) >= outer.row(i) || inner.row(i) > outer.row(i + 1)) {
        return false;
      }
    }
    return true;
  }

  SkewShape rotate(SkewShape const& basic) {
    int const        rows  = basic.outer().length();
    int const        width = basic.outer().width();
    std::vector<int> outer;
    std::vector<int> inner;
    for (int i = 1; i <= rows; ++i) {
      outer.push_back(width - basic.inner().row(rows + 1 - i));
      inner.push_back(width - basic.outer().row(rows + 1 - i));
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
  }

  std::optional<Partition> as_partition(SkewShape const& s) {
    auto const form = skew_normalize(s);
    if (form.basic.empty()) {
      return Partition();
    }
    if (form.basic.inner().empty()) {
      return form.basic.outer();
    }
    if (form.rotated_equal) {
      return rotate(form.basic).outer();
    }
    return std::nullopt;
  }

  bool is_proper_skew(SkewShape const& s) {
    return !as_partition(s).has_value();
  }

  namespace {
    void enumerate_basic_rows(std::vector<SkewShape>& out,
                              std::vector<int>&       outer,
                              std::vector<int>&       inner,
                              int                     remaining) {
      if (remaining == 0) {
        if (!inner.empty() && inner.back() == 0) {
          out.emplace_back(Partition(outer), Partition(inner));
        }
        return;
      }
      int const max_outer = outer.empty() ? remaining : outer.back();
      int const min_outer = inner.empty() ? 1 : std::max(1, inner.back());
      for (int o = min_outer; o <= max_outer; ++o) {
        int const max_inner = inner.empty() ? o - 1 : std::min(inner.back(), o - 1);
        for (int in = std::max(0, o - remaining); in <= max_inner; ++in) {
          outer.push_back(o);
          inner.push_back(in);
          enumerate_basic_rows(out, outer, inner, remaining - (o - in));
          outer.pop_back();
          inner.pop_back();
        }
      }
    }
  }  // namespace

  std::vector<SkewShape> enumerate_basic_skew_shapes(int n) {
    std::vector<SkewShape> out;
    if (n == 0) {
      out.emplace_back();
      return out;
    }
    std::vector<int> outer;
    std::vector<int> inner;
    enumerate_basic_rows(out, outer, inner, n);
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace mfkron
