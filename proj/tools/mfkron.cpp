// mfkron: Kronecker products of symmetric group characters from the
// command line.
//
// Exit status: 0 on success (and "multiplicity-free" for the classify
// commands), 1 for "not multiplicity-free" or a verification mismatch,
// 2 for any error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfkron/characters.hpp"
#include "mfkron/classification.hpp"
#include "mfkron/error.hpp"
#include "mfkron/kronecker.hpp"
#include "mfkron/littlewood_richardson.hpp"
#include "mfkron/verify.hpp"

namespace {

  using namespace mfkron;
  using nlohmann::ordered_json;

  struct GlobalOptions {
    std::string format = "text";
    std::string engine = "auto";
    unsigned    jobs   = 1;
    std::string cache;
    bool        force = false;
  };

  void require_same_degree(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw DomainError("degree mismatch: " + a.to_string() + " has degree "
                        + std::to_string(a.size()) + " but " + b.to_string()
                        + " has degree " + std::to_string(b.size()));
    }
  }

  std::string render_expansion(std::string const&        left,
                               std::string const&        right,
                               CharacterExpansion const& e,
                               std::string const&        format) {
    if (format == "json") {
      ordered_json doc;
      doc["left"]        = left;
      doc["right"]       = right;
      doc["n"]           = e.degree();
      ordered_json terms = ordered_json::array();
      for (auto const& [p, m] : e.terms()) {
        terms.push_back({{"p", p.to_string()}, {"m", m}});
      }
      doc["terms"] = terms;
      return doc.dump() + "\n";
    }
    if (format == "csv") {
      std::ostringstream out;
      out << "partition,multiplicity\n";
      for (auto const& [p, m] : e.terms()) {
        out << '"' << p.to_string() << "\"," << m << '\n';
      }
      return out.str();
    }
    return e.to_string() + "\n";
  }

  int render_verdict(std::vector<std::string> const& operands,
                     MfVerdict const&                v,
                     std::string const&              format) {
    if (format == "json") {
      ordered_json doc;
      doc["operands"]          = operands;
      doc["multiplicity_free"] = v.multiplicity_free;
      doc["clause"]            = v.clause ? ordered_json(*v.clause) : ordered_json(nullptr);
      doc["normalization"]     = v.normalization.to_string();
      doc["note"]              = v.note;
      std::cout << doc.dump() << '\n';
    } else if (format == "csv") {
      std::cout << "multiplicity_free,clause,normalization\n"
                << (v ? "true" : "false") << ',' << v.clause.value_or("") << ','
                << '"' << v.normalization.to_string() << "\"\n";
    } else {
      std::cout << (v ? "mf" : "not mf") << '\n';
      if (v.clause) {
        std::cout << "clause: " << *v.clause << '\n'
                  << "normalization: " << v.normalization.to_string() << '\n';
      }
      if (!v.note.empty()) {
        std::cout << "note: " << v.note << '\n';
      }
    }
    return v ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker products of symmetric group characters"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--engine", g.engine, "Kronecker engine: oracle, dvir or auto")
      ->check(CLI::IsMember({"oracle", "dvir", "auto"}));
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache, "Product cache file (line-delimited JSON)");
  app.add_flag("--force", g.force, "Run sweeps above the configured ceiling");

  std::string a, b, c;
  int         degree = 0;
  std::string mode   = "pairs";

  auto* kron = app.add_subcommand("kron", "Expand [lam].[mu]");
  kron->add_option("lambda", a)->required();
  kron->add_option("mu", b)->required();

  auto* coeff = app.add_subcommand("coeff", "Kronecker coefficient g(lam, mu, nu)");
  coeff->add_option("lambda", a)->required();
  coeff->add_option("mu", b)->required();
  coeff->add_option("nu", c)->required();

  auto* classify = app.add_subcommand("classify", "Is [lam].[mu] multiplicity-free?");
  classify->add_option("lambda", a)->required();
  classify->add_option("mu", b)->required();

  auto* triple = app.add_subcommand("classify-triple",
                                    "Is [lam].[mu].[nu] multiplicity-free?");
  triple->add_option("lambda", a)->required();
  triple->add_option("mu", b)->required();
  triple->add_option("nu", c)->required();

  auto* skew = app.add_subcommand("classify-skew",
                                  "Is [s].[alpha] (or [s].[t]) multiplicity-free?");
  skew->add_option("shape", a, "Skew shape outer/inner")->required();
  skew->add_option("other", b, "Partition or skew shape")->required();

  auto* table = app.add_subcommand("table", "Character table of S_n");
  table->add_option("n", degree)->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweep");
  verify->add_option("n", degree)->required();
  verify->add_option("--mode", mode, "pairs, triples, skew or engines")
      ->check(CLI::IsMember({"pairs", "triples", "skew", "engines"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Engine const engine = parse_engine(g.engine);

    if (kron->parsed()) {
      Partition const lam = Partition::parse(a);
      Partition const mu  = Partition::parse(b);
      require_same_degree(lam, mu);
      std::cout << render_expansion(lam.to_string(), mu.to_string(),
                                    kron_product(lam, mu, engine), g.format);
      return 0;
    }
    if (coeff->parsed()) {
      Partition const lam = Partition::parse(a);
      Partition const mu  = Partition::parse(b);
      Partition const nu  = Partition::parse(c);
      require_same_degree(lam, mu);
      require_same_degree(lam, nu);
      std::cout << kron_coefficient(lam, mu, nu, engine) << '\n';
      return 0;
    }
    if (classify->parsed()) {
      Partition const lam = Partition::parse(a);
      Partition const mu  = Partition::parse(b);
      return render_verdict({lam.to_string(), mu.to_string()}, is_mf_pair(lam, mu),
                            g.format);
    }
    if (triple->parsed()) {
      Partition const lam = Partition::parse(a);
      Partition const mu  = Partition::parse(b);
      Partition const nu  = Partition::parse(c);
      return render_verdict({lam.to_string(), mu.to_string(), nu.to_string()},
                            is_mf_triple(lam, mu, nu), g.format);
    }
    if (skew->parsed()) {
      SkewShape const s = SkewShape::parse(a);
      if (b.find('/') != std::string::npos) {
        SkewShape const t = SkewShape::parse(b);
        return render_verdict({s.to_string(), t.to_string()},
                              is_mf_skew_times_skew(s, t), g.format);
      }
      Partition const alpha = Partition::parse(b);
      return render_verdict({s.to_string(), alpha.to_string()},
                            is_mf_skew_times_irr(s, alpha), g.format);
    }
    if (table->parsed()) {
      auto const t = character_table(degree);
      if (auto failure = t->orthogonality_failure()) {
        throw InvariantViolation(*failure);
      }
      if (g.format == "csv") {
        std::cout << t->to_csv();
      } else if (g.format == "json") {
        std::cout << t->to_json();
      } else {
        std::cout << t->to_text();
      }
      return 0;
    }
    if (verify->parsed()) {
      ProductCache  cache;
      VerifyOptions options;
      options.mode   = parse_verify_mode(mode);
      options.engine = engine;
      options.jobs   = g.jobs;
      options.force  = g.force;
      if (!g.cache.empty()) {
        cache.load(g.cache);
        options.cache = &cache;
      }
      auto const report = run_verification(degree, options);
      if (!g.cache.empty()) {
        cache.save(g.cache);
      }
      std::cout << (g.format == "json" ? report.to_json() : report.to_text());
      std::cerr << "wall time: " << report.wall_time.count() << " ms\n";
      return report.success() ? 0 : 1;
    }
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << " (token '" << e.token() << "')\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
