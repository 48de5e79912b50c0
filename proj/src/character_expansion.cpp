#include "mfkron/character_expansion.hpp"

#include <algorithm>

#include "mfkron/error.hpp"

namespace mfkron {

  std::int64_t CharacterExpansion::multiplicity(Partition const& p) const {
    auto it = _terms.find(p);
    return it == _terms.end() ? 0 : it->second;
  }

  void CharacterExpansion::add(Partition const& p, std::int64_t m) {
    if (p.size() != _degree) {
      throw DomainError("constituent " + p.to_string() + " has degree "
                        + std::to_string(p.size()) + ", expected "
                        + std::to_string(_degree));
    }
    if (m == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(p, 0);
    it->second += m;
    if (it->second == 0) {
      _terms.erase(it);
    }
  }

  CharacterExpansion&
  CharacterExpansion::operator+=(CharacterExpansion const& that) {
    if (that._degree != _degree && !that.empty()) {
      throw DomainError("cannot add characters of different degrees");
    }
    for (auto const& [p, m] : that._terms) {
      add(p, m);
    }
    return *this;
  }

  CharacterExpansion&
  CharacterExpansion::operator-=(CharacterExpansion const& that) {
    if (that._degree != _degree && !that.empty()) {
      throw DomainError("cannot subtract characters of different degrees");
    }
    for (auto const& [p, m] : that._terms) {
      add(p, -m);
    }
    return *this;
  }

  CharacterExpansion& CharacterExpansion::operator*=(std::int64_t scalar) {
    if (scalar == 0) {
      _terms.clear();
      return *this;
    }
    for (auto& [p, m] : _terms) {
      m *= scalar;
    }
    return *this;
  }

  bool CharacterExpansion::is_genuine() const {
    return std::all_of(_terms.begin(), _terms.end(),
                       [](auto const& t) { return t.second > 0; });
  }

  bool CharacterExpansion::is_multiplicity_free() const {
    return !_terms.empty()
           && std::all_of(_terms.begin(), _terms.end(),
                          [](auto const& t) { return t.second == 1; });
  }

  std::int64_t CharacterExpansion::max_multiplicity() const {
    std::int64_t best = 0;
    for (auto const& [p, m] : _terms) {
      best = std::max(best, m);
    }
    return best;
  }

  std::int64_t CharacterExpansion::min_multiplicity() const {
    std::int64_t best = 0;
    bool         first = true;
    for (auto const& [p, m] : _terms) {
      best  = first ? m : std::min(best, m);
      first = false;
    }
    return best;
  }

  CharacterExpansion CharacterExpansion::conjugated() const {
    CharacterExpansion out(_degree);
    for (auto const& [p, m] : _terms) {
      out.add(conjugate(p), m);
    }
    return out;
  }

  BigInt CharacterExpansion::dimension() const {
    BigInt total = 0;
    for (auto const& [p, m] : _terms) {
      total += mfkron::dimension(p) * m;
    }
    return total;
  }

  std::string CharacterExpansion::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [p, m] : _terms) {
      std::int64_t magnitude = m;
      if (out.empty()) {
        if (m < 0) {
          out += "-";
          magnitude = -m;
        }
      } else if (m < 0) {
        out += " - ";
        magnitude = -m;
      } else {
        out += " + ";
      }
      if (magnitude != 1) {
        out += std::to_string(magnitude);
      }
      out += "[" + p.to_string() + "]";
    }
    return out;
  }

  CharacterExpansion irreducible(Partition const& p) {
    CharacterExpansion out(p.size());
    out.add(p, 1);
    return out;
  }

}  // namespace mfkron
