#include "mfkron/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "mfkron/concurrent_cache.hpp"
#include "mfkron/error.hpp"
#include "mfkron/parallel.hpp"

namespace mfkron {

  namespace {

    struct MnKey {
      Partition shape;
      Partition cycles;

      bool operator==(MnKey const&) const = default;
    };

    struct MnKeyHash {
      std::size_t operator()(MnKey const& k) const noexcept {
        PartitionHash h;
        return h(k.shape) * 0x100000001b3ull ^ h(k.cycles);
      }
    };

    ConcurrentCache<MnKey, BigInt, MnKeyHash>& mn_cache() {
      static ConcurrentCache<MnKey, BigInt, MnKeyHash> cache;
      return cache;
    }

    // Removes the rim hook whose hook cell is (i, j), where the hook length
    // equals the strip size.
    Partition remove_rim_hook(Partition const&   p,
                              Partition const&   transposed,
                              int                i,
                              int                j) {
      std::vector<int> parts = p.vec();
      int const        last  = transposed.row(j);
      for (int k = i; k < last; ++k) {
        parts[k - 1] = p.row(k + 1) - 1;
      }
      parts[last - 1] = j - 1;
      return Partition(std::move(parts));
    }

    BigInt murnaghan_nakayama(Partition const& shape, Partition const& cycles) {
      if (cycles.empty()) {
        return shape.empty() ? 1 : 0;
      }
      MnKey key{shape, cycles};
      if (auto hit = mn_cache().find(key)) {
        return *hit;
      }
      int const        strip = cycles.parts().front();
      Partition const  rest(std::vector<int>(cycles.parts().begin() + 1,
                                             cycles.parts().end()));
      Partition const  transposed = conjugate(shape);
      BigInt           total      = 0;
      for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape.row(i); ++j) {
          int const leg = transposed.row(j) - i;
          if (shape.row(i) - j + leg + 1 != strip) {
            continue;
          }
          BigInt v = murnaghan_nakayama(
              remove_rim_hook(shape, transposed, i, j), rest);
          if (leg % 2 == 0) {
            total += v;
          } else {
            total -= v;
          }
        }
      }
      return mn_cache().insert(key, total);
    }

    int initial_ceiling() {
      if (char const* env = std::getenv("MFKRON_TABLE_CEILING")) {
        return std::atoi(env);
      }
      return 14;
    }

    int& ceiling_storage() {
      static int ceiling = initial_ceiling();
      return ceiling;
    }

    std::string csv_field(std::string const& s) {
      if (s.find(',') == std::string::npos) {
        return s;
      }
      return "\"" + s + "\"";
    }

    nlohmann::json json_integer(BigInt const& v) {
      if (v >= std::numeric_limits<std::int64_t>::min()
          && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
      }
      return v.str();
    }

  }  // namespace

  BigInt character_value(Partition const& lam, CycleType const& rho) {
    if (lam.size() != rho.size()) {
      throw DomainError("character value needs |lambda| = |rho|");
    }
    return murnaghan_nakayama(lam, rho.cycles);
  }

  BigInt class_size(CycleType const& rho) {
    std::map<int, int> multiplicity;
    for (int c : rho.cycles.parts()) {
      ++multiplicity[c];
    }
    BigInt z = 1;
    for (auto [length, count] : multiplicity) {
      for (int k = 0; k < count; ++k) {
        z *= length;
      }
      z *= factorial(count);
    }
    return factorial(rho.size()) / z;
  }

  ////////////////////////////////////////////////////////////////////////
  // CharacterTable
  ////////////////////////////////////////////////////////////////////////

  CharacterTable::CharacterTable(int n, unsigned jobs)
      : _degree(n), _labels(enumerate_partitions(n)) {
    std::size_t const k = _labels.size();
    _values.resize(k * k);
    parallel_for(k, jobs, [&](std::size_t row) {
      for (std::size_t col = 0; col < k; ++col) {
        _values[row * k + col]
            = murnaghan_nakayama(_labels[row], _labels[col]);
      }
    });
    for (auto const& rho : _labels) {
      _class_sizes.push_back(class_size(CycleType{rho}));
    }
  }

  std::size_t CharacterTable::index_of(Partition const& p) const {
    auto it = std::lower_bound(_labels.begin(), _labels.end(), p,
                               std::greater<>());
    if (it == _labels.end() || *it != p) {
      throw DomainError(p.to_string() + " is not a partition of "
                        + std::to_string(_degree));
    }
    return static_cast<std::size_t>(it - _labels.begin());
  }

  std::optional<std::string> CharacterTable::orthogonality_failure() const {
    std::size_t const k       = order();
    BigInt const      n_fact  = factorial(_degree);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < k; ++j) {
          sum += _class_sizes[j] * value(a, j) * value(b, j);
        }
        if (sum != (a == b ? n_fact : BigInt(0))) {
          return "row orthogonality fails for " + _labels[a].to_string()
                 + " and " + _labels[b].to_string();
        }
        BigInt col = 0;
        for (std::size_t i = 0; i < k; ++i) {
          col += value(i, a) * value(i, b);
        }
        if (col != (a == b ? n_fact / _class_sizes[a] : BigInt(0))) {
          return "column orthogonality fails for " + _labels[a].to_string()
                 + " and " + _labels[b].to_string();
        }
      }
    }
    return std::nullopt;
  }

  std::string CharacterTable::to_csv() const {
    std::ostringstream out;
    out << "character";
    for (auto const& rho : _labels) {
      out << ',' << csv_field(rho.to_string());
    }
    out << '\n';
    for (std::size_t i = 0; i < order(); ++i) {
      out << csv_field(_labels[i].to_string());
      for (std::size_t j = 0; j < order(); ++j) {
        out << ',' << value(i, j);
      }
      out << '\n';
    }
    return out.str();
  }

  std::string CharacterTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = _degree;
    std::vector<std::string> labels;
    for (auto const& p : _labels) {
      labels.push_back(p.to_string());
    }
    doc["classes"]    = labels;
    doc["characters"] = labels;
    nlohmann::json sizes = nlohmann::json::array();
    for (auto const& c : _class_sizes) {
      sizes.push_back(json_integer(c));
    }
    doc["class_sizes"]   = sizes;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < order(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < order(); ++j) {
        row.push_back(json_integer(value(i, j)));
      }
      rows.push_back(row);
    }
    doc["values"] = rows;
    return doc.dump() + "\n";
  }

  std::string CharacterTable::to_text() const {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string>              header{""};
    for (auto const& rho : _labels) {
      header.push_back("(" + rho.to_string() + ")");
    }
    cells.push_back(header);
    std::vector<std::string> sizes{"#"};
    for (auto const& c : _class_sizes) {
      sizes.push_back(c.str());
    }
    cells.push_back(sizes);
    for (std::size_t i = 0; i < order(); ++i) {
      std::vector<std::string> row{"[" + _labels[i].to_string() + "]"};
      for (std::size_t j = 0; j < order(); ++j) {
        row.push_back(value(i, j).str());
      }
      cells.push_back(row);
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (auto const& row : cells) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        widths[j] = std::max(widths[j], row[j].size());
      }
    }
    std::ostringstream out;
    for (auto const& row : cells) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) {
          out << ' ';
        }
        if (j == 0) {
          out << std::left;
        } else {
          out << std::right;
        }
        out << std::setw(static_cast<int>(widths[j])) << row[j];
      }
      out << '\n';
    }
    return out.str();
  }

  int table_ceiling() {
    return ceiling_storage();
  }

  void set_table_ceiling(int n) {
    ceiling_storage() = n;
  }

  std::shared_ptr<CharacterTable const> character_table(int n) {
    if (n < 0) {
      throw DomainError("negative degree");
    }
    if (n > table_ceiling()) {
      throw ResourceError("character table of degree " + std::to_string(n)
                          + " exceeds the configured ceiling "
                          + std::to_string(table_ceiling()));
    }
    static std::mutex                                                mutex;
    static std::map<int, std::shared_ptr<CharacterTable const>>    tables;
    {
      std::lock_guard lock(mutex);
      if (auto it = tables.find(n); it != tables.end()) {
        return it->second;
      }
    }
    auto table = std::make_shared<CharacterTable const>(n);
    std::lock_guard lock(mutex);
    return tables.try_emplace(n, std::move(table)).first->second;
  }

  std::int64_t kron_oracle(Partition const& lam,
                           Partition const& mu,
                           Partition const& nu) {
    if (lam.size() != mu.size() || mu.size() != nu.size()) {
      throw DomainError("Kronecker coefficient needs three partitions of the "
                        "same degree");
    }
    auto const        table = character_table(lam.size());
    std::size_t const a     = table->index_of(lam);
    std::size_t const b     = table->index_of(mu);
    std::size_t const c     = table->index_of(nu);
    BigInt            sum   = 0;
    for (std::size_t j = 0; j < table->order(); ++j) {
      sum += table->class_sizes()[j] * table->value(a, j) * table->value(b, j)
             * table->value(c, j);
    }
    BigInt const n_fact = factorial(lam.size());
    if (sum % n_fact != 0) {
      throw InvariantViolation("character inner product is not an integer");
    }
    return static_cast<std::int64_t>(sum / n_fact);
  }

  CharacterExpansion kron_product_oracle(Partition const& lam,
                                         Partition const& mu) {
    if (lam.size() != mu.size()) {
      throw DomainError("Kronecker product needs partitions of the same "
                        "degree");
    }
    int const          n     = lam.size();
    auto const         table = character_table(n);
    std::size_t const  k     = table->order();
    std::size_t const  a     = table->index_of(lam);
    std::size_t const  b     = table->index_of(mu);
    std::vector<BigInt> weight(k);
    for (std::size_t j = 0; j < k; ++j) {
      weight[j] = table->class_sizes()[j] * table->value(a, j)
                  * table->value(b, j);
    }
    BigInt const       n_fact = factorial(n);
    CharacterExpansion out(n);
    for (std::size_t c = 0; c < k; ++c) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        sum += weight[j] * table->value(c, j);
      }
      if (sum % n_fact != 0) {
        throw InvariantViolation("character inner product is not an integer");
      }
      sum /= n_fact;
      if (sum < 0) {
        throw InvariantViolation("negative Kronecker coefficient");
      }
      out.add(table->labels()[c], static_cast<std::int64_t>(sum));
    }
    return out;
  }

}  // namespace mfkron
