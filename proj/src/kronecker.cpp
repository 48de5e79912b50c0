#include "mfkron/kronecker.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "mfkron/characters.hpp"
#include "mfkron/concurrent_cache.hpp"
#include "mfkron/error.hpp"
#include "mfkron/littlewood_richardson.hpp"

namespace mfkron {

  namespace {

    using PartitionPair = std::pair<Partition, Partition>;

    struct PairHash {
      std::size_t operator()(PartitionPair const& p) const noexcept {
        PartitionHash h;
        return h(p.first) * 0x9e3779b97f4a7c15ull ^ h(p.second);
      }
    };

    ConcurrentCache<PartitionPair, CharacterExpansion, PairHash>& dvir_cache() {
      static ConcurrentCache<PartitionPair, CharacterExpansion, PairHash> c;
      return c;
    }

    int initial_crossover() {
      if (char const* env = std::getenv("MFKRON_ORACLE_CROSSOVER")) {
        return std::atoi(env);
      }
      return 10;
    }

    int& crossover_storage() {
      static int crossover = initial_crossover();
      return crossover;
    }

    void require_same_degree(Partition const& a, Partition const& b) {
      if (a.size() != b.size()) {
        throw DomainError("degree mismatch: " + a.to_string() + " has degree "
                          + std::to_string(a.size()) + " but "
                          + b.to_string() + " has degree "
                          + std::to_string(b.size()));
      }
    }

    Partition drop_first_row(Partition const& p) {
      if (p.empty()) {
        return p;
      }
      return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
    }

    CharacterExpansion dvir_sweep(Partition const& lam, Partition const& mu) {
      int const n = lam.size();
      if (n == 0) {
        return irreducible(Partition());
      }
      Partition const beta    = intersect(lam, mu);
      int const       widest  = beta.size();
      // [lam/alpha].[mu/alpha] for each alpha met so far.
      std::map<Partition, CharacterExpansion> skew_products;
      auto product_for = [&](Partition const& alpha) -> CharacterExpansion const& {
        auto it = skew_products.find(alpha);
        if (it == skew_products.end()) {
          it = skew_products
                   .emplace(alpha, kron_product(SkewShape(lam, alpha),
                                                SkewShape(mu, alpha),
                                                Engine::dvir))
                   .first;
        }
        return it->second;
      };

      CharacterExpansion result(n);
      // Descending lexicographic order lists nu by non-increasing nu_1.
      for (Partition const& nu : enumerate_partitions(n)) {
        int const first = nu.width();
        if (first > widest) {
          continue;
        }
        Partition const rest  = drop_first_row(nu);
        std::int64_t    value = 0;
        if (first == widest) {
          value = product_for(beta).multiplicity(rest);
        } else {
          for (Partition const& alpha : partitions_inside(first, beta)) {
            value += product_for(alpha).multiplicity(rest);
          }
          for (Partition const& eta : y_set(nu).members) {
            if (eta != nu && eta.width() <= widest) {
              value -= result.multiplicity(eta);
            }
          }
        }
        if (value < 0) {
          throw InvariantViolation("negative Kronecker coefficient g("
                                   + lam.to_string() + "; " + mu.to_string()
                                   + "; " + nu.to_string() + ") in recursion");
        }
        result.add(nu, value);
      }
      return result;
    }

  }  // namespace

  std::string_view to_string(Engine e) {
    switch (e) {
      case Engine::oracle: return "oracle";
      case Engine::dvir: return "dvir";
      case Engine::automatic: return "auto";
    }
    return "auto";
  }

  Engine parse_engine(std::string_view text) {
    if (text == "oracle") {
      return Engine::oracle;
    }
    if (text == "dvir") {
      return Engine::dvir;
    }
    if (text == "auto") {
      return Engine::automatic;
    }
    throw DomainError("unknown engine '" + std::string(text) + "'");
  }

  int engine_crossover() {
    return crossover_storage();
  }

  void set_engine_crossover(int n) {
    crossover_storage() = n;
  }

  int max_width(Partition const& lam, Partition const& mu) {
    require_same_degree(lam, mu);
    return intersect(lam, mu).size();
  }

  std::int64_t g_at_max_width(Partition const& lam,
                              Partition const& mu,
                              Partition const& nu) {
    require_same_degree(lam, mu);
    require_same_degree(lam, nu);
    Partition const beta = intersect(lam, mu);
    if (nu.width() != beta.size()) {
      throw DomainError("first part of " + nu.to_string()
                        + " is not |lambda intersect mu| = "
                        + std::to_string(beta.size()));
    }
    return kron_product(SkewShape(lam, beta), SkewShape(mu, beta))
        .multiplicity(drop_first_row(nu));
  }

  YNuSet y_set(Partition const& nu) {
    YNuSet    out{nu, {}};
    int const n    = nu.size();
    int const rows = nu.length();
    if (rows == 0) {
      out.members.push_back(nu);
      return out;
    }
    // eta_2 .. eta_rows; eta_i ranges over [nu_{i+1}, nu_i].
    std::vector<int> tail(std::max(rows - 1, 0));
    auto             recurse = [&](auto&& self, int index, int sum) -> void {
      if (index == rows - 1) {
        int const head = n - sum;
        if (head < nu.row(2)) {
          return;
        }
        std::vector<int> parts{head};
        parts.insert(parts.end(), tail.begin(), tail.end());
        out.members.emplace_back(std::move(parts));
        return;
      }
      int const row = index + 2;
      for (int v = nu.row(row); v >= nu.row(row + 1); --v) {
        tail[index] = v;
        self(self, index + 1, sum + v);
      }
    };
    recurse(recurse, 0, 0);
    std::sort(out.members.begin(), out.members.end(), std::greater<>());
    return out;
  }

  CharacterExpansion kron_product_dvir(Partition const& lam,
                                       Partition const& mu) {
    require_same_degree(lam, mu);
    PartitionPair key = lam < mu ? PartitionPair{mu, lam} : PartitionPair{lam, mu};
    if (auto hit = dvir_cache().find(key)) {
      return *std::move(hit);
    }
    return dvir_cache().insert(key, dvir_sweep(key.first, key.second));
  }

  std::int64_t g_dvir(Partition const& lam,
                      Partition const& mu,
                      Partition const& nu) {
    require_same_degree(lam, nu);
    return kron_product_dvir(lam, mu).multiplicity(nu);
  }

  void clear_dvir_cache() {
    dvir_cache().clear();
  }

  CharacterExpansion kron_product(Partition const& lam,
                                  Partition const& mu,
                                  Engine           engine) {
    require_same_degree(lam, mu);
    if (engine == Engine::automatic) {
      engine = lam.size() <= engine_crossover() ? Engine::oracle : Engine::dvir;
    }
    return engine == Engine::oracle ? kron_product_oracle(lam, mu)
                                    : kron_product_dvir(lam, mu);
  }

  CharacterExpansion kron_product(CharacterExpansion const& a,
                                  CharacterExpansion const& b,
                                  Engine                    engine) {
    if (a.degree() != b.degree()) {
      throw DomainError("Kronecker product of characters of different "
                        "degrees");
    }
    CharacterExpansion out(a.degree());
    for (auto const& [p, m] : a.terms()) {
      for (auto const& [q, k] : b.terms()) {
        CharacterExpansion term = kron_product(p, q, engine);
        term *= m * k;
        out += term;
      }
    }
    return out;
  }

  CharacterExpansion kron_product(SkewShape const& s,
                                  SkewShape const& t,
                                  Engine           engine) {
    if (s.size() != t.size()) {
      throw DomainError("skew shapes " + s.to_string() + " and "
                        + t.to_string() + " differ in size");
    }
    return kron_product(skew_expand(s), skew_expand(t), engine);
  }

  std::int64_t kron_coefficient(Partition const& lam,
                                Partition const& mu,
                                Partition const& nu,
                                Engine           engine) {
    require_same_degree(lam, mu);
    require_same_degree(lam, nu);
    if (engine == Engine::oracle
        || (engine == Engine::automatic && lam.size() <= engine_crossover())) {
      return kron_oracle(lam, mu, nu);
    }
    return g_dvir(lam, mu, nu);
  }

  std::int64_t g_max(Partition const& lam, Partition const& mu, Engine engine) {
    return kron_product(lam, mu, engine).max_multiplicity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup property
  ////////////////////////////////////////////////////////////////////////

  SemigroupWitness SemigroupWitness::sum_split(Partition lam_a,
                                               Partition lam_b,
                                               Partition mu_a,
                                               Partition mu_b) {
    SemigroupWitness w;
    w.kind        = Kind::sum_split;
    w.lambda      = add(lam_a, lam_b);
    w.mu          = add(mu_a, mu_b);
    w.left_parts  = {std::move(lam_a), std::move(lam_b)};
    w.right_parts = {std::move(mu_a), std::move(mu_b)};
    return w;
  }

  SemigroupWitness SemigroupWitness::row_split(Partition const&     lam,
                                               std::set<int> const& rows_lam,
                                               Partition const&     mu,
                                               std::set<int> const& rows_mu) {
    SemigroupWitness w;
    w.kind        = Kind::row_split;
    w.lambda      = lam;
    w.mu          = mu;
    w.rows_lambda = rows_lam;
    w.rows_mu     = rows_mu;
    w.left_parts  = split_rows(lam, rows_lam);
    w.right_parts = split_rows(mu, rows_mu);
    return w;
  }

  void SemigroupWitness::validate() const {
    require_same_degree(lambda, mu);
    if (left_parts.first.size() != right_parts.first.size()) {
      throw DomainError("paired parts " + left_parts.first.to_string()
                        + " and " + right_parts.first.to_string()
                        + " differ in size");
    }
    if (kind == Kind::sum_split) {
      if (add(left_parts.first, left_parts.second) != lambda
          || add(right_parts.first, right_parts.second) != mu) {
        throw DomainError("sum-split parts do not add up to the pair");
      }
      return;
    }
    if (split_rows(lambda, rows_lambda) != left_parts
        || split_rows(mu, rows_mu) != right_parts) {
      throw DomainError("row-split parts do not match the index sets");
    }
  }

  SemigroupBound semigroup_bound(SemigroupWitness const& witness,
                                 Engine                  engine,
                                 int                     max_degree) {
    witness.validate();
    auto evaluate = [&](Partition const& a, Partition const& b) -> std::int64_t {
      if (a.size() == 0) {
        return 1;
      }
      if (a.size() > max_degree) {
        return 0;
      }
      return g_max(a, b, engine);
    };
    SemigroupBound out;
    out.first_part  = evaluate(witness.left_parts.first, witness.right_parts.first);
    out.second_part = evaluate(witness.left_parts.second, witness.right_parts.second);
    if (out.first_part >= out.second_part) {
      out.bound       = std::max<std::int64_t>(out.first_part, 1);
      out.attained_by = {witness.left_parts.first, witness.right_parts.first};
    } else {
      out.bound       = out.second_part;
      out.attained_by = {witness.left_parts.second, witness.right_parts.second};
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Virtual extension character
  ////////////////////////////////////////////////////////////////////////

  CharacterExpansion virtual_extension_chi(Partition const& lam,
                                           Partition const& mu,
                                           Engine           engine) {
    require_same_degree(lam, mu);
    for (auto const* p : {&lam, &mu}) {
      if (is_linear(*p) || is_natural(*p)) {
        throw DomainError("hypothesis failed: " + p->to_string()
                          + " is (n) or (n-1,1) up to conjugation");
      }
    }
    Partition const beta = intersect(lam, mu);
    int const       m    = beta.size();
    auto const      row_cells = SkewShape(lam, beta).cells();
    if (row_cells.empty()
        || std::any_of(row_cells.begin(), row_cells.end(), [&](Node const& c) {
             return c.row != row_cells.front().row;
           })) {
      throw DomainError("hypothesis failed: lambda/beta is not a single row");
    }
    auto const alpha = as_partition(SkewShape(mu, beta));
    if (!alpha) {
      throw DomainError("hypothesis failed: [mu/beta] is not irreducible");
    }
    int const          degree = lam.size() - m + 1;
    CharacterExpansion chi(degree);
    for (Node const& a : removable_nodes(beta)) {
      Partition const smaller = remove_node(beta, a);
      chi += kron_product(SkewShape(lam, smaller), SkewShape(mu, smaller), engine);
    }
    for (Node const& b : addable_nodes(*alpha)) {
      chi.add(add_node(*alpha, b), -1);
    }
    return chi;
  }

}  // namespace mfkron
