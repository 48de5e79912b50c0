#include "mfkron/littlewood_richardson.hpp"

#include <algorithm>
#include <map>

#include "mfkron/concurrent_cache.hpp"
#include "mfkron/error.hpp"

namespace mfkron {

  namespace {

    ConcurrentCache<SkewShape, CharacterExpansion>& skew_cache() {
      static ConcurrentCache<SkewShape, CharacterExpansion> cache;
      return cache;
    }

    // Depth-first enumeration of Littlewood-Richardson fillings.
    class LrFiller {
     public:
      explicit LrFiller(SkewShape const& shape)
          : _shape(shape), _result(shape.size()) {
        for (int i = 1; i <= shape.outer().length(); ++i) {
          _grid.emplace_back(shape.outer().row(i) + 1, 0);
          for (int j = shape.outer().row(i); j > shape.inner().row(i); --j) {
            _order.push_back({i, j});
          }
        }
        _content.assign(shape.size() + 2, 0);
      }

      CharacterExpansion run() {
        fill(0, 0);
        return std::move(_result);
      }

     private:
      bool in_shape(int row, int col) const {
        return row >= 1 && row <= _shape.outer().length()
               && col > _shape.inner().row(row) && col <= _shape.outer().row(row);
      }

      void fill(std::size_t index, int max_value) {
        if (index == _order.size()) {
          std::vector<int> parts(_content.begin() + 1,
                                 _content.begin() + 1 + max_value);
          _result.add(Partition(std::move(parts)), 1);
          return;
        }
        auto const [row, col] = _order[index];
        // Row weakly increasing: bounded by the cell to the right.
        int hi = max_value + 1;
        if (in_shape(row, col + 1)) {
          hi = std::min(hi, _grid[row - 1][col + 1]);
        }
        // Column strictly increasing: above the cell overhead.
        int lo = 1;
        if (in_shape(row - 1, col)) {
          lo = _grid[row - 2][col] + 1;
        }
        for (int v = lo; v <= hi; ++v) {
          if (v > 1 && _content[v] + 1 > _content[v - 1]) {
            continue;
          }
          _grid[row - 1][col] = v;
          ++_content[v];
          fill(index + 1, std::max(max_value, v));
          --_content[v];
        }
        _grid[row - 1][col] = 0;
      }

      SkewShape const&              _shape;
      CharacterExpansion            _result;
      std::vector<std::vector<int>> _grid;
      std::vector<Node>             _order;
      std::vector<int>              _content;
    };

    // Vertical and horizontal run lengths of the boundary of p drawn in a
    // rows x width box, from the lower left corner to the upper right.
    // For the inner path the walk begins upward, for the outer path it
    // begins to the right; in both cases we list every segment.
    std::vector<int> inner_segments(Partition const& sigma, int rows, int width) {
      std::vector<int> segments;
      std::map<int, int> multiplicity;  // distinct nonzero value -> count
      for (int x : sigma.parts()) {
        ++multiplicity[x];
      }
      segments.push_back(rows - sigma.length());
      int previous = 0;
      for (auto [value, count] : multiplicity) {
        segments.push_back(value - previous);
        segments.push_back(count);
        previous = value;
      }
      segments.push_back(width - previous);
      return segments;
    }

    std::vector<int> outer_segments(Partition const& rho) {
      std::vector<int>   segments;
      std::map<int, int> multiplicity;
      for (int x : rho.parts()) {
        ++multiplicity[x];
      }
      int previous = 0;
      for (auto [value, count] : multiplicity) {
        segments.push_back(value - previous);
        segments.push_back(count);
        previous = value;
      }
      return segments;
    }

    bool connected_skew_criterion(SkewShape const& basic) {
      if (!is_rectangle(basic.inner())) {
        return false;
      }
      auto const p   = path_profile(basic);
      int const  rem = p.outer_removable_count;
      return p.s_in == 1 || (p.s_in == 2 && rem == 3)
             || (p.s_out == 1 && rem == 3) || rem == 2;
    }

    std::string connected_skew_clause(SkewShape const& basic) {
      auto const p   = path_profile(basic);
      int const  rem = p.outer_removable_count;
      if (p.s_in == 1) {
        return "skew-inner-segment-1";
      }
      if (p.s_in == 2 && rem == 3) {
        return "skew-inner-segment-2";
      }
      if (p.s_out == 1 && rem == 3) {
        return "skew-outer-segment-1";
      }
      return "skew-two-corners";
    }

  }  // namespace

  CharacterExpansion skew_expand(SkewShape const& s) {
    SkewShape const basic = skew_normalize(s).basic;
    return skew_cache().get_or_compute(
        basic, [&basic] { return LrFiller(basic).run(); });
  }

  void clear_skew_cache() {
    skew_cache().clear();
  }

  std::int64_t lr_coefficient(Partition const& lam,
                              Partition const& mu,
                              Partition const& nu) {
    if (mu.size() + nu.size() != lam.size()) {
      throw DomainError("Littlewood-Richardson coefficient needs |mu| + |nu| "
                        "= |lambda|");
    }
    if (!is_contained(mu, lam) || !is_contained(nu, lam)) {
      return 0;
    }
    return skew_expand(SkewShape(lam, mu)).multiplicity(nu);
  }

  SkewShape disjoint_union(Partition const& a, Partition const& b) {
    std::vector<int> outer;
    std::vector<int> inner;
    for (int x : a.parts()) {
      outer.push_back(x + b.width());
      inner.push_back(b.width());
    }
    for (int x : b.parts()) {
      outer.push_back(x);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
  }

  CharacterExpansion outer_product(Partition const& a, Partition const& b) {
    return skew_expand(disjoint_union(a, b));
  }

  CharacterExpansion outer_product(CharacterExpansion const& a,
                                   CharacterExpansion const& b) {
    CharacterExpansion out(a.degree() + b.degree());
    for (auto const& [p, m] : a.terms()) {
      for (auto const& [q, k] : b.terms()) {
        CharacterExpansion term = outer_product(p, q);
        term *= m * k;
        out += term;
      }
    }
    return out;
  }

  MfVerdict is_mf_outer(Partition const& a, Partition const& b) {
    Normalization swapped;
    swapped.swapped = true;
    if (a.empty() || b.empty()) {
      return MfVerdict::yes("outer-trivial");
    }
    if (is_linear(a)) {
      return MfVerdict::yes("outer-linear");
    }
    if (is_linear(b)) {
      return MfVerdict::yes("outer-linear", swapped);
    }
    if (is_rectangle(a) && is_rectangle(b)) {
      return MfVerdict::yes("outer-rectangle-rectangle");
    }
    if (is_rectangle(a) && is_near_rectangle(b)) {
      return MfVerdict::yes("outer-rectangle-near-rectangle");
    }
    if (is_rectangle(b) && is_near_rectangle(a)) {
      return MfVerdict::yes("outer-rectangle-near-rectangle", swapped);
    }
    auto two_line_rectangle = [](Partition const& p) {
      return is_rectangle(p) && is_two_line(p);
    };
    if (two_line_rectangle(a) && is_fat_hook(b)) {
      return MfVerdict::yes("outer-two-line-rectangle-fat-hook");
    }
    if (two_line_rectangle(b) && is_fat_hook(a)) {
      return MfVerdict::yes("outer-two-line-rectangle-fat-hook", swapped);
    }
    return MfVerdict::no();
  }

  PathProfile path_profile(SkewShape const& basic) {
    if (!is_basic(basic)) {
      throw DomainError("path profile needs a basic skew shape, got "
                        + basic.to_string());
    }
    int const rows  = basic.outer().length();
    int const width = basic.outer().width();
    auto      in    = inner_segments(basic.inner(), rows, width);
    auto      out   = outer_segments(basic.outer());
    PathProfile p;
    p.s_in                  = in.empty() ? 0 : *std::min_element(in.begin(), in.end());
    p.s_out                 = out.empty() ? 0 : *std::min_element(out.begin(), out.end());
    p.inner_is_rectangle    = basic.inner().empty() || is_rectangle(basic.inner());
    p.outer_removable_count = static_cast<int>(removable_nodes(basic.outer()).size());
    return p;
  }

  MfVerdict is_mf_skew(SkewShape const& s) {
    auto const form = skew_normalize(s);
    if (form.basic.empty()) {
      return MfVerdict::yes("skew-empty");
    }
    if (as_partition(form.basic)) {
      Normalization n;
      n.rotated = !form.basic.inner().empty();
      return MfVerdict::yes("skew-irreducible", n);
    }
    if (form.components.size() > 2) {
      return MfVerdict::no();
    }
    if (form.components.size() == 2) {
      auto first  = as_partition(form.components[0]);
      auto second = as_partition(form.components[1]);
      if (!first || !second) {
        return MfVerdict::no();
      }
      auto outer = is_mf_outer(*first, *second);
      if (!outer) {
        return MfVerdict::no();
      }
      auto verdict = MfVerdict::yes("skew-two-components", outer.normalization);
      verdict.note = *outer.clause;
      return verdict;
    }
    if (connected_skew_criterion(form.basic)) {
      return MfVerdict::yes(connected_skew_clause(form.basic));
    }
    SkewShape const turned = rotate(form.basic);
    if (connected_skew_criterion(turned)) {
      Normalization n;
      n.rotated = true;
      return MfVerdict::yes(connected_skew_clause(turned), n);
    }
    return MfVerdict::no();
  }

}  // namespace mfkron
