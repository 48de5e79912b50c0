#include "mfkron/classification.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>

#include "mfkron/error.hpp"
#include "mfkron/littlewood_richardson.hpp"

namespace mfkron {

  namespace {

    void require_same_degree(Partition const& a, Partition const& b) {
      if (a.size() != b.size()) {
        throw DomainError("degree mismatch: " + a.to_string() + " has degree "
                          + std::to_string(a.size()) + " but "
                          + b.to_string() + " has degree "
                          + std::to_string(b.size()));
      }
    }

    struct Candidate {
      Partition     first;
      Partition     second;
      Normalization normalization;
    };

    std::vector<Candidate> candidates(Partition const& lam, Partition const& mu) {
      std::vector<Candidate> out;
      for (auto [cf, cs] : {std::pair{false, false}, std::pair{true, false},
                            std::pair{false, true}, std::pair{true, true}}) {
        Partition const a = cf ? conjugate(lam) : lam;
        Partition const b = cs ? conjugate(mu) : mu;
        Normalization   n;
        n.conjugate_first  = cf;
        n.conjugate_second = cs;
        out.push_back({a, b, n});
        n.swapped = true;
        out.push_back({b, a, n});
      }
      return out;
    }

    using PairClause = std::function<bool(Partition const&, Partition const&, int)>;

    std::array<PairClause, 6> const& pair_clauses() {
      static std::array<PairClause, 6> const clauses{
          [](Partition const& a, Partition const&, int n) {
            return a == Partition{n};
          },
          [](Partition const& a, Partition const& b, int n) {
            return n >= 2 && a == Partition{n - 1, 1} && is_fat_hook(b);
          },
          [](Partition const& a, Partition const& b, int n) {
            int const k = n / 2;
            Partition const two_row
                = n % 2 == 1 ? Partition{k + 1, k} : Partition{k, k};
            return a == two_row && b == two_row;
          },
          [](Partition const& a, Partition const& b, int n) {
            if (n % 2 != 0) {
              return false;
            }
            int const k = n / 2;
            if (a != Partition{k, k}) {
              return false;
            }
            return b == Partition{k + 1, k - 1}
                   || (n >= 6 && b == Partition{n - 3, 3}) || is_hook(b);
          },
          [](Partition const& a, Partition const& b, int n) {
            return is_rectangle(a)
                   && ((n >= 4 && b == Partition{n - 2, 2})
                       || (n >= 3 && b == Partition{n - 2, 1, 1}));
          },
          [](Partition const& a, Partition const& b, int) {
            static std::array<std::pair<Partition, Partition>, 3> const pairs{
                std::pair{Partition{3, 3, 3}, Partition{6, 3}},
                std::pair{Partition{3, 3, 3}, Partition{5, 4}},
                std::pair{Partition{4, 4, 4}, Partition{6, 6}},
            };
            return std::any_of(pairs.begin(), pairs.end(), [&](auto const& p) {
              return p.first == a && p.second == b;
            });
          },
      };
      return clauses;
    }

    // Builds a label from (value, count) runs; std::nullopt if the runs do
    // not describe a partition.
    std::optional<Partition> label(std::initializer_list<std::pair<int, int>> runs) {
      std::vector<int> parts;
      for (auto [value, count] : runs) {
        if (count < 0) {
          return std::nullopt;
        }
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
      }
      return Partition::from_sequence(std::move(parts));
    }

    void add_term(CharacterExpansion& out, bool present, std::optional<Partition> p) {
      if (present && p && p->size() == out.degree()) {
        out.add(*p, 1);
      }
    }

    bool all_parts(Partition const& p, int parity) {
      return std::all_of(p.parts().begin(), p.parts().end(),
                         [parity](int x) { return x % 2 == parity; });
    }

    bool between(int lo, int x, int hi) {
      return lo <= x && x <= hi;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Classification predicates
  ////////////////////////////////////////////////////////////////////////

  MfVerdict is_mf_pair(Partition const& lam, Partition const& mu) {
    require_same_degree(lam, mu);
    int const n = lam.size();
    if (n == 0) {
      throw DomainError("classification needs degree at least one");
    }
    auto const  options = candidates(lam, mu);
    auto const& clauses = pair_clauses();
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      for (auto const& option : options) {
        if (clauses[c](option.first, option.second, n)) {
          return MfVerdict::yes("T1.1-case-" + std::to_string(c + 1),
                                option.normalization);
        }
      }
    }
    return MfVerdict::no();
  }

  MfVerdict is_mf_triple(Partition const& lam,
                         Partition const& mu,
                         Partition const& nu) {
    require_same_degree(lam, mu);
    require_same_degree(lam, nu);
    int const n = lam.size();
    if (n == 0) {
      throw DomainError("classification needs degree at least one");
    }
    std::array<Partition const*, 3> const ops{&lam, &mu, &nu};
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (!is_linear(*ops[i])) {
        continue;
      }
      Partition const& x = *ops[(i + 1) % 3];
      Partition const& y = *ops[(i + 2) % 3];
      bool const       sign = *ops[i] != Partition{n};
      MfVerdict        v    = is_mf_pair(sign ? conjugate(x) : x, y);
      v.note = std::string(sign ? "sign" : "trivial") + " operand "
               + ops[i]->to_string() + " absorbed at position "
               + std::to_string(i + 1);
      return v;
    }
    MfVerdict v = MfVerdict::no();
    v.note      = "no linear operand";
    return v;
  }

  MfVerdict is_mf_skew_times_irr(SkewShape const& s, Partition const& alpha) {
    if (s.size() != alpha.size()) {
      throw DomainError("skew shape " + s.to_string() + " has size "
                        + std::to_string(s.size()) + " but "
                        + alpha.to_string() + " has degree "
                        + std::to_string(alpha.size()));
    }
    if (s.size() == 0) {
      throw DomainError("classification needs degree at least one");
    }
    if (auto p = as_partition(s)) {
      MfVerdict v = is_mf_pair(*p, alpha);
      v.note      = "skew shape equals the partition " + p->to_string();
      return v;
    }
    int const          n   = s.size();
    CharacterExpansion chi = skew_expand(s);
    if (is_linear(alpha) && is_mf_skew(s)) {
      return MfVerdict::yes("T1.3-case-1");
    }

    CharacterExpansion natural_sum(n);
    natural_sum.add(Partition{n}, 1);
    natural_sum.add(Partition{n - 1, 1}, 1);
    CharacterExpansion two_row_sum(n);
    if (n % 2 == 0 && n >= 4) {
      int const k = n / 2;
      two_row_sum.add(Partition{k + 1, k - 1}, 1);
      two_row_sum.add(Partition{k, k}, 1);
    }

    auto const match = [&](auto&& clause) -> std::optional<Normalization> {
      for (auto [cf, cs] : {std::pair{false, false}, std::pair{true, false},
                            std::pair{false, true}, std::pair{true, true}}) {
        CharacterExpansion const c = cf ? chi.conjugated() : chi;
        Partition const          a = cs ? conjugate(alpha) : alpha;
        if (clause(c, a)) {
          Normalization norm;
          norm.conjugate_first  = cf;
          norm.conjugate_second = cs;
          return norm;
        }
      }
      return std::nullopt;
    };

    if (auto norm = match([&](CharacterExpansion const& c, Partition const& a) {
          return is_rectangle(a) && a.width() >= 2 && a.length() >= 2
                 && c == natural_sum;
        })) {
      return MfVerdict::yes("T1.3-case-2", *norm);
    }
    if (auto norm = match([&](CharacterExpansion const& c, Partition const& a) {
          return n % 2 == 0 && n >= 4 && a == Partition{n / 2, n / 2}
                 && c == two_row_sum;
        })) {
      return MfVerdict::yes("T1.3-case-3", *norm);
    }
    return MfVerdict::no();
  }

  MfVerdict is_mf_skew_times_skew(SkewShape const& s, SkewShape const& t) {
    if (s.size() != t.size()) {
      throw DomainError("skew shapes " + s.to_string() + " and "
                        + t.to_string() + " differ in size");
    }
    auto const ps = as_partition(s);
    auto const pt = as_partition(t);
    if (!ps && !pt) {
      MfVerdict v = MfVerdict::no();
      v.note      = "both skew characters are proper";
      return v;
    }
    if (ps && pt) {
      return is_mf_pair(*ps, *pt);
    }
    if (ps) {
      MfVerdict v = is_mf_skew_times_irr(t, *ps);
      v.normalization.swapped = true;
      return v;
    }
    return is_mf_skew_times_irr(s, *pt);
  }

  ////////////////////////////////////////////////////////////////////////
  // Closed-form products
  ////////////////////////////////////////////////////////////////////////

  CharacterExpansion product_with_natural(Partition const& mu) {
    int const n = mu.size();
    if (n < 3) {
      throw DomainError("product with [n-1,1] needs n >= 3");
    }
    CharacterExpansion out(n);
    for (Node const& a : removable_nodes(mu)) {
      Partition const smaller = remove_node(mu, a);
      for (Node const& b : addable_nodes(smaller)) {
        out.add(add_node(smaller, b), 1);
      }
    }
    out.add(mu, -1);
    return out;
  }

  CharacterExpansion staircase_square(int k) {
    if (k < 0) {
      throw DomainError("k must be nonnegative");
    }
    int const          n = 2 * k + 1;
    CharacterExpansion out(n);
    for (Partition const& p : enumerate_partitions(n, {.max_length = 4, .max_width = std::nullopt})) {
      out.add(p, 1);
    }
    return out;
  }

  CharacterExpansion kk_square(int k) {
    if (k < 1) {
      throw DomainError("k must be positive");
    }
    int const          n = 2 * k;
    CharacterExpansion out(n);
    for (Partition const& p : enumerate_partitions(n, {.max_length = 4, .max_width = std::nullopt})) {
      if (all_parts(p, 0) || (all_parts(p, 1) && p.length() == 4)) {
        out.add(p, 1);
      }
    }
    return out;
  }

  CharacterExpansion kk_times_near(int k) {
    if (k < 1) {
      throw DomainError("k must be positive");
    }
    int const          n = 2 * k;
    CharacterExpansion out(n);
    for (Partition const& p : enumerate_partitions(n, {.max_length = 4, .max_width = std::nullopt})) {
      bool const even = all_parts(p, 0);
      bool const odd  = all_parts(p, 1);
      if ((p.length() < 4 && !even) || (p.length() == 4 && !even && !odd)) {
        out.add(p, 1);
      }
    }
    return out;
  }

  int kk_times_hook_mult(int k, int b, Partition const& nu, Engine engine) {
    int const n = 2 * k;
    if (k < 1 || b < 0 || b > n - 1) {
      throw DomainError("kk_times_hook_mult needs k >= 1 and 0 <= b < 2k");
    }
    if (nu.size() != n) {
      throw DomainError(nu.to_string() + " is not a partition of "
                        + std::to_string(n));
    }
    if (durfee_length(nu) >= 3) {
      return 0;
    }
    if (is_hook(nu)) {
      std::vector<int> hook{n - b};
      hook.insert(hook.end(), static_cast<std::size_t>(b), 1);
      return static_cast<int>(
          kron_coefficient(Partition{k, k}, Partition(hook), nu, engine));
    }
    Partition shape = nu;
    auto split = [&shape](int& a1, int& a2, int& b2, int& b1) {
      a1 = shape.row(1);
      a2 = shape.row(2);
      b2 = 0;
      b1 = 0;
      for (int i = 3; i <= shape.length(); ++i) {
        (shape.row(i) == 2 ? b2 : b1) += 1;
      }
    };
    int a1, a2, b2, b1;
    split(a1, a2, b2, b1);
    if (a1 - a2 > b1) {
      shape = conjugate(shape);
      b     = n - 1 - b;
      split(a1, a2, b2, b1);
    }
    int const base = b1 + 2 * b2;
    int const x1   = between(a2, k - b2 - 1, a1) && base < b && b < base + 3;
    int const x2   = between(a2, k - b2, a1) && between(base, b, base + 3);
    int const x3   = between(a2, k - b2 + 1, a1) && base < b && b < base + 3;
    int const x4   = a2 + b2 + b1 == k && between(base + 1, b, base + 2);
    int const value = x1 + x2 + x3 - x4;
    if (value < 0 || value > 1) {
      throw InvariantViolation("hook product multiplicity "
                               + std::to_string(value) + " for "
                               + nu.to_string());
    }
    return value;
  }

  SmallDepthProduct small_depth_products(SmallDepthKind kind,
                                         int            p,
                                         int            q,
                                         Engine         engine) {
    SmallDepthProduct out;
    switch (kind) {
      case SmallDepthKind::rectangle_two_row: {
        int const a = p;
        int const b = q;
        if (a <= 1 || b <= 1 || a * b < 6) {
          throw DomainError("[n-2,2].[a^b] needs a, b > 1 and ab >= 6");
        }
        CharacterExpansion e(a * b);
        add_term(e, true, label({{a, b}}));
        add_term(e, (a > 2), label({{a, b - 1}, {a - 1, 1}, {1, 1}}));
        add_term(e, true, label({{a, b - 2}, {a - 1, 2}, {1, 2}}));
        add_term(e, (b > 3), label({{a + 1, 2}, {a, b - 4}, {a - 1, 2}}));
        add_term(e, (b > 2), label({{a + 1, 1}, {a, b - 2}, {a - 1, 1}}));
        add_term(e, (b > 2),
                 label({{a + 1, 1}, {a, b - 3}, {a - 1, 2}, {1, 1}}));
        add_term(e, true, label({{a + 2, 1}, {a, b - 2}, {a - 2, 1}}));
        add_term(e, (a > 2),
                 label({{a + 1, 1}, {a, b - 2}, {a - 2, 1}, {1, 1}}));
        add_term(e, (a > 3), label({{a, b - 1}, {a - 2, 1}, {2, 1}}));
        out.product = std::move(e);
        return out;
      }
      case SmallDepthKind::rectangle_hook: {
        int const a = p;
        int const b = q;
        if (!(a >= b && b > 1)) {
          throw DomainError("[n-2,1^2].[a^b] needs a >= b > 1");
        }
        CharacterExpansion e(a * b);
        add_term(e, (b > 2), label({{a + 2, 1}, {a, b - 3}, {a - 1, 2}}));
        add_term(e, true, label({{a + 1, 1}, {a, b - 2}, {a - 1, 1}}));
        add_term(e, true, label({{a + 1, 1}, {a, b - 2}, {a - 2, 1}, {1, 1}}));
        add_term(e, true, label({{a, b - 2}, {a - 1, 2}, {2, 1}}));
        add_term(e, (b > 2),
                 label({{a + 1, 1}, {a, b - 3}, {a - 1, 2}, {1, 1}}));
        add_term(e, (b > 2), label({{a + 1, 2}, {a, b - 3}, {a - 2, 1}}));
        add_term(e, true, label({{a, b - 1}, {a - 2, 1}, {1, 2}}));
        add_term(e, true, label({{a, b - 1}, {a - 1, 1}, {1, 1}}));
        out.product = std::move(e);
        return out;
      }
      case SmallDepthKind::kk_three_row: {
        int const k = p;
        int const n = 2 * k;
        if (n < 6) {
          throw DomainError("[n-3,3].[k,k] needs n = 2k >= 6");
        }
        out.small_exceptions = {Partition{4, 2}, Partition{4, 1, 1},
                                Partition{4, 3}, Partition{3, 3, 3}};
        if (n <= 16) {
          out.product     = kron_product(Partition{n - 3, 3}, Partition{k, k}, engine);
          out.closed_form = false;
          return out;
        }
        CharacterExpansion e(n);
        for (auto const& terms : std::vector<std::vector<int>>{
                 {k + 1, k - 1},
                 {k + 1, k - 2, 1},
                 {k, k - 1, 1},
                 {k, k - 2, 1, 1},
                 {k, k - 2, 2},
                 {k, k - 3, 3},
                 {k - 1, k - 1, 2},
                 {k - 1, k - 2, 2, 1},
                 {k + 3, k - 3},
                 {k + 2, k - 3, 1},
                 {k + 1, k - 3, 2},
             }) {
          add_term(e, true, Partition::from_sequence(terms));
        }
        out.product = std::move(e);
        return out;
      }
    }
    throw DomainError("unknown small-depth product kind");
  }

  SquareLowDepth square_low_depth(Partition const& lam) {
    if (lam.empty() || is_linear(lam)) {
      throw DomainError("square_low_depth needs a non-linear partition, got "
                        + lam.to_string());
    }
    int const          n = lam.size();
    auto const         h = hook_counts(lam);
    std::int64_t const h1 = h.h1, h2 = h.h2, h3 = h.h3, h21 = h.h21;
    SquareLowDepth     out;
    out.a1 = h1 - 1;
    out.b2 = (h1 - 1) * (h1 - 1);
    if (n >= 4) {
      out.a2 = h2 + h1 * (h1 - 2);
      out.b3 = h1 * (h1 - 1) * (h1 - 3) + (h1 - 1) * (h2 + 1) + h21;
    }
    if (n >= 5) {
      out.c3 = 2 * h1 * (h1 - 1) * (h1 - 3) + h2 * (3 * h1 - 4) + h1 + h21;
    }
    if (n >= 6) {
      out.a3 = h1 * (h1 - 1) * (h1 - 3) + h2 * (2 * h1 - 3) + h3;
    }
    return out;
  }

}  // namespace mfkron
