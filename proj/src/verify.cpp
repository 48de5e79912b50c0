#include "mfkron/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "mfkron/characters.hpp"
#include "mfkron/classification.hpp"
#include "mfkron/error.hpp"
#include "mfkron/littlewood_richardson.hpp"
#include "mfkron/parallel.hpp"
#include "mfkron/skew_shape.hpp"

namespace mfkron {

  namespace {

    using nlohmann::ordered_json;

    std::string describe(MfVerdict const& v) {
      if (!v) {
        return "not mf";
      }
      return "mf " + v.clause.value_or("");
    }

    std::string describe(CharacterExpansion const& product) {
      if (product.is_multiplicity_free()) {
        return "mf";
      }
      return "not mf (max multiplicity "
             + std::to_string(product.max_multiplicity()) + ")";
    }

    std::size_t combine(std::size_t seed, std::size_t h) {
      return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
    }

    template <typename Label>
    std::size_t key_hash(std::initializer_list<Label const*> labels) {
      std::size_t seed = 0;
      for (auto const* l : labels) {
        seed = combine(seed, std::hash<Label>{}(*l));
      }
      return seed;
    }

    // Every item i is owned by bucket hash(i) % jobs; results are merged
    // and sorted afterwards so the report does not depend on scheduling.
    void sweep(std::size_t                                     count,
               unsigned                                        jobs,
               std::function<std::size_t(std::size_t)> const&  hash,
               std::function<std::size_t(std::size_t, std::vector<Mismatch>&)> const& check,
               VerificationReport&                             report) {
      jobs = std::max(1u, jobs);
      std::vector<std::vector<Mismatch>> found(jobs);
      std::vector<std::size_t>           checked(jobs, 0);
      parallel_for(jobs, jobs, [&](std::size_t bucket) {
        for (std::size_t i = 0; i < count; ++i) {
          if (jobs == 1 || hash(i) % jobs == bucket) {
            checked[bucket] += check(i, found[bucket]);
          }
        }
      });
      for (std::size_t b = 0; b < jobs; ++b) {
        report.pairs_checked += checked[b];
        report.mismatches.insert(report.mismatches.end(), found[b].begin(),
                                 found[b].end());
      }
    }

    CharacterExpansion pair_product(Partition const& lam,
                                    Partition const& mu,
                                    VerifyOptions const& options) {
      if (options.cache) {
        return options.cache->product(lam, mu, options.engine);
      }
      return kron_product(lam, mu, options.engine);
    }

    std::vector<std::pair<std::size_t, std::size_t>> unordered_index_pairs(std::size_t k) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
          out.emplace_back(i, j);
        }
      }
      return out;
    }

    void verify_pairs(int n, VerifyOptions const& options, VerificationReport& report) {
      auto const partitions = enumerate_partitions(n);
      auto const pairs      = unordered_index_pairs(partitions.size());
      sweep(
          pairs.size(), options.jobs,
          [&](std::size_t i) {
            return key_hash({&partitions[pairs[i].first], &partitions[pairs[i].second]});
          },
          [&](std::size_t i, std::vector<Mismatch>& out) -> std::size_t {
            Partition const& lam       = partitions[pairs[i].first];
            Partition const& mu        = partitions[pairs[i].second];
            MfVerdict const  predicted = is_mf_pair(lam, mu);
            auto const       product   = pair_product(lam, mu, options);
            if (bool(predicted) != product.is_multiplicity_free()) {
              out.push_back({{lam.to_string(), mu.to_string()},
                             describe(predicted),
                             describe(product)});
            }
            return 1;
          },
          report);
    }

    void verify_triples(int n, VerifyOptions const& options, VerificationReport& report) {
      auto const partitions = enumerate_partitions(n);
      std::vector<std::array<std::size_t, 3>> triples;
      for (std::size_t i = 0; i < partitions.size(); ++i) {
        for (std::size_t j = i; j < partitions.size(); ++j) {
          for (std::size_t l = j; l < partitions.size(); ++l) {
            triples.push_back({i, j, l});
          }
        }
      }
      sweep(
          triples.size(), options.jobs,
          [&](std::size_t i) {
            auto const& t = triples[i];
            return key_hash({&partitions[t[0]], &partitions[t[1]], &partitions[t[2]]});
          },
          [&](std::size_t i, std::vector<Mismatch>& out) -> std::size_t {
            auto const&      t         = triples[i];
            Partition const& lam       = partitions[t[0]];
            Partition const& mu        = partitions[t[1]];
            Partition const& nu        = partitions[t[2]];
            MfVerdict const  predicted = is_mf_triple(lam, mu, nu);
            auto const product = kron_product(pair_product(lam, mu, options),
                                              irreducible(nu), options.engine);
            if (bool(predicted) != product.is_multiplicity_free()) {
              out.push_back({{lam.to_string(), mu.to_string(), nu.to_string()},
                             describe(predicted),
                             describe(product)});
            }
            return 1;
          },
          report);
    }

    // Dense form of a character of degree n, indexed like enumerate_partitions.
    std::vector<std::int64_t> dense(CharacterExpansion const& e,
                                    std::vector<Partition> const& labels) {
      std::vector<std::int64_t> out(labels.size(), 0);
      for (auto const& [p, m] : e.terms()) {
        auto it = std::lower_bound(labels.begin(), labels.end(), p, std::greater<>());
        out[static_cast<std::size_t>(it - labels.begin())] = m;
      }
      return out;
    }

    void verify_skew(int n, VerifyOptions const& options, VerificationReport& report) {
      auto const labels = enumerate_partitions(n);
      std::size_t const k = labels.size();
      std::vector<SkewShape> const shapes = enumerate_basic_skew_shapes(n);
      std::vector<std::size_t>     proper;
      for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (is_proper_skew(shapes[i])) {
          proper.push_back(i);
        }
      }
      // Products of irreducibles, dense: table[i * k + j] is [labels i].[labels j].
      std::vector<std::vector<std::int64_t>> table(k * k);
      parallel_for(k, options.jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < k; ++j) {
          table[i * k + j] = dense(kron_product(labels[i], labels[j], options.engine), labels);
        }
      });
      std::vector<std::vector<std::int64_t>> characters;
      for (auto const& s : shapes) {
        characters.push_back(dense(skew_expand(s), labels));
      }
      auto product_max = [&](std::vector<std::int64_t> const& x,
                             std::vector<std::int64_t> const& y) {
        std::vector<std::int64_t> sum(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
          if (x[i] == 0) {
            continue;
          }
          for (std::size_t j = 0; j < k; ++j) {
            if (y[j] == 0) {
              continue;
            }
            auto const& row = table[i * k + j];
            for (std::size_t c = 0; c < k; ++c) {
              sum[c] += x[i] * y[j] * row[c];
            }
          }
        }
        return *std::max_element(sum.begin(), sum.end());
      };
      auto describe_max = [](std::int64_t m) {
        return m == 1 ? std::string("mf")
                      : "not mf (max multiplicity " + std::to_string(m) + ")";
      };

      sweep(
          shapes.size(), options.jobs,
          [&](std::size_t i) { return key_hash({&shapes[i]}); },
          [&](std::size_t i, std::vector<Mismatch>& out) -> std::size_t {
            SkewShape const& s        = shapes[i];
            auto const       expanded = skew_expand(s);
            MfVerdict const  shape_mf = is_mf_skew(s);
            if (bool(shape_mf) != expanded.is_multiplicity_free()) {
              out.push_back({{s.to_string()}, describe(shape_mf), describe(expanded)});
            }
            for (std::size_t a = 0; a < k; ++a) {
              MfVerdict const    predicted = is_mf_skew_times_irr(s, labels[a]);
              std::int64_t const m
                  = product_max(characters[i], dense(irreducible(labels[a]), labels));
              if (bool(predicted) != (m == 1)) {
                out.push_back({{s.to_string(), labels[a].to_string()},
                               describe(predicted),
                               describe_max(m)});
              }
            }
            return 1 + k;
          },
          report);

      auto const pairs = unordered_index_pairs(proper.size());
      sweep(
          pairs.size(), options.jobs,
          [&](std::size_t i) {
            return key_hash({&shapes[proper[pairs[i].first]], &shapes[proper[pairs[i].second]]});
          },
          [&](std::size_t i, std::vector<Mismatch>& out) -> std::size_t {
            std::size_t const a     = proper[pairs[i].first];
            std::size_t const b     = proper[pairs[i].second];
            MfVerdict const predicted = is_mf_skew_times_skew(shapes[a], shapes[b]);
            std::int64_t const m    = product_max(characters[a], characters[b]);
            if (bool(predicted) != (m == 1)) {
              out.push_back({{shapes[a].to_string(), shapes[b].to_string()},
                             describe(predicted),
                             describe_max(m)});
            }
            return 1;
          },
          report);
    }

    void verify_engines(int n, VerifyOptions const& options, VerificationReport& report) {
      auto const partitions = enumerate_partitions(n);
      auto const pairs      = unordered_index_pairs(partitions.size());
      sweep(
          pairs.size(), options.jobs,
          [&](std::size_t i) {
            return key_hash({&partitions[pairs[i].first], &partitions[pairs[i].second]});
          },
          [&](std::size_t i, std::vector<Mismatch>& out) -> std::size_t {
            Partition const& lam    = partitions[pairs[i].first];
            Partition const& mu     = partitions[pairs[i].second];
            auto const       dvir   = kron_product_dvir(lam, mu);
            auto const       oracle = kron_product_oracle(lam, mu);
            for (Partition const& nu : partitions) {
              auto const d = dvir.multiplicity(nu);
              auto const o = oracle.multiplicity(nu);
              if (d != o) {
                out.push_back({{lam.to_string(), mu.to_string(), nu.to_string()},
                               "dvir " + std::to_string(d),
                               "oracle " + std::to_string(o)});
              }
            }
            return partitions.size();
          },
          report);
    }

    int ceiling_from_env(char const* name, int fallback) {
      if (char const* env = std::getenv(name)) {
        return std::atoi(env);
      }
      return fallback;
    }

  }  // namespace

  std::string_view to_string(VerifyMode mode) {
    switch (mode) {
      case VerifyMode::pairs: return "pairs";
      case VerifyMode::triples: return "triples";
      case VerifyMode::skew: return "skew";
      case VerifyMode::engines: return "engines";
    }
    return "pairs";
  }

  VerifyMode parse_verify_mode(std::string_view text) {
    for (auto mode : {VerifyMode::pairs, VerifyMode::triples, VerifyMode::skew,
                      VerifyMode::engines}) {
      if (text == to_string(mode)) {
        return mode;
      }
    }
    throw DomainError("unknown verification mode '" + std::string(text) + "'");
  }

  int verify_ceiling(VerifyMode mode) {
    switch (mode) {
      case VerifyMode::pairs: return ceiling_from_env("MFKRON_MAX_PAIRS", 9);
      case VerifyMode::triples: return ceiling_from_env("MFKRON_MAX_TRIPLES", 7);
      case VerifyMode::skew: return ceiling_from_env("MFKRON_MAX_SKEW", 7);
      case VerifyMode::engines: return ceiling_from_env("MFKRON_MAX_ENGINES", 7);
    }
    return 0;
  }

  std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "mode: " << to_string(mode) << '\n'
        << "degree: " << degree << '\n'
        << "engine: " << to_string(engine) << '\n'
        << "checked: " << pairs_checked << '\n'
        << "mismatches: " << mismatches.size() << '\n';
    for (auto const& m : mismatches) {
      out << "  ";
      for (std::size_t i = 0; i < m.operands.size(); ++i) {
        out << (i ? " x " : "") << '(' << m.operands[i] << ')';
      }
      out << ": predicted " << m.predicted << ", computed " << m.computed << '\n';
    }
    out << "result: " << (success() ? "ok" : "FAIL") << '\n';
    return out.str();
  }

  std::string VerificationReport::to_json() const {
    ordered_json doc;
    doc["mode"]          = to_string(mode);
    doc["n"]             = degree;
    doc["engine"]        = to_string(engine);
    doc["pairs_checked"] = pairs_checked;
    ordered_json list    = ordered_json::array();
    for (auto const& m : mismatches) {
      list.push_back({{"operands", m.operands},
                      {"predicted", m.predicted},
                      {"computed", m.computed}});
    }
    doc["mismatches"] = list;
    doc["success"]    = success();
    return doc.dump() + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // ProductCache
  ////////////////////////////////////////////////////////////////////////

  ProductCache::Key ProductCache::canonical(Partition const& lam, Partition const& mu) {
    return lam < mu ? Key{mu, lam} : Key{lam, mu};
  }

  std::string ProductCache::encode(Partition const&          lam,
                                   Partition const&          mu,
                                   CharacterExpansion const& product) {
    auto const   key = canonical(lam, mu);
    ordered_json doc;
    doc["n"]           = key.first.size();
    doc["lambda"]      = key.first.to_string();
    doc["mu"]          = key.second.to_string();
    ordered_json terms = ordered_json::array();
    for (auto const& [p, m] : product.terms()) {
      terms.push_back({p.to_string(), m});
    }
    doc["terms"] = terms;
    return doc.dump();
  }

  std::tuple<Partition, Partition, CharacterExpansion> ProductCache::decode(std::string_view line) {
    ordered_json doc;
    try {
      doc = ordered_json::parse(line);
      int const          n = doc.at("n").get<int>();
      Partition          lam = Partition::parse(doc.at("lambda").get<std::string>());
      Partition          mu  = Partition::parse(doc.at("mu").get<std::string>());
      CharacterExpansion product(n);
      for (auto const& term : doc.at("terms")) {
        product.add(Partition::parse(term.at(0).get<std::string>()),
                    term.at(1).get<std::int64_t>());
      }
      if (lam.size() != n || mu.size() != n) {
        throw ParseError("cache record degree does not match its operands",
                         std::string(line));
      }
      return {std::move(lam), std::move(mu), std::move(product)};
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed cache record: ") + e.what(),
                       std::string(line));
    } catch (DomainError const& e) {
      throw ParseError(std::string("malformed cache record: ") + e.what(),
                       std::string(line));
    }
  }

  void ProductCache::load(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      return;
    }
    std::string line;
    bool        header = false;
    std::lock_guard lock(_mutex);
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      if (!header) {
        auto doc = nlohmann::json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()
            || doc.value("format", "") != "mfkron-cache"
            || doc.value("version", 0) != 1) {
          throw ParseError("not an mfkron cache file (bad header)", line);
        }
        header = true;
        continue;
      }
      auto [lam, mu, product] = decode(line);
      _entries.insert_or_assign(canonical(lam, mu), std::move(product));
    }
    _pending.clear();
  }

  void ProductCache::save(std::filesystem::path const& path) {
    std::lock_guard lock(_mutex);
    bool const      fresh = !std::filesystem::exists(path)
                       || std::filesystem::file_size(path) == 0;
    std::ofstream   out(path, std::ios::app);
    if (!out) {
      throw ResourceError("cannot write cache file " + path.string());
    }
    if (fresh) {
      out << R"({"format":"mfkron-cache","version":1})" << '\n';
    }
    std::sort(_pending.begin(), _pending.end());
    for (auto const& key : _pending) {
      out << encode(key.first, key.second, _entries.at(key)) << '\n';
    }
    _pending.clear();
  }

  std::optional<CharacterExpansion> ProductCache::find(Partition const& lam,
                                                       Partition const& mu) const {
    std::lock_guard lock(_mutex);
    auto            it = _entries.find(canonical(lam, mu));
    if (it == _entries.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void ProductCache::store(Partition const& lam, Partition const& mu, CharacterExpansion product) {
    auto            key = canonical(lam, mu);
    std::lock_guard lock(_mutex);
    _entries.insert_or_assign(key, std::move(product));
    _pending.push_back(std::move(key));
  }

  CharacterExpansion ProductCache::product(Partition const& lam,
                                           Partition const& mu,
                                           Engine           engine) {
    if (auto hit = find(lam, mu)) {
      return *std::move(hit);
    }
    auto value = kron_product(lam, mu, engine);
    store(lam, mu, value);
    return value;
  }

  std::size_t ProductCache::size() const {
    std::lock_guard lock(_mutex);
    return _entries.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Sweeps
  ////////////////////////////////////////////////////////////////////////

  VerificationReport run_verification(int n, VerifyOptions const& options) {
    if (n < 1) {
      throw DomainError("verification needs degree at least one");
    }
    int const ceiling = verify_ceiling(options.mode);
    if (n > ceiling && !options.force) {
      throw ResourceError("degree " + std::to_string(n) + " exceeds the "
                          + std::string(to_string(options.mode))
                          + " ceiling " + std::to_string(ceiling)
                          + " (use --force)");
    }
    auto const         start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.degree = n;
    report.mode   = options.mode;
    report.engine = options.mode == VerifyMode::engines ? Engine::dvir : options.engine;
    switch (options.mode) {
      case VerifyMode::pairs: verify_pairs(n, options, report); break;
      case VerifyMode::triples: verify_triples(n, options, report); break;
      case VerifyMode::skew: verify_skew(n, options, report); break;
      case VerifyMode::engines: verify_engines(n, options, report); break;
    }
    std::sort(report.mismatches.begin(), report.mismatches.end());
    report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
  }

}  // namespace mfkron
