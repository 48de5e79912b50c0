#ifndef MFKRON_KRONECKER_HPP_
#define MFKRON_KRONECKER_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfkron/character_expansion.hpp"
#include "mfkron/partition.hpp"
#include "mfkron/skew_shape.hpp"

namespace mfkron {

  //! How Kronecker coefficients are obtained.
  //!
  //! `oracle` sums over the character table, `dvir` runs the recursion on
  //! the first row, `automatic` uses the oracle up to the crossover degree.
  enum class Engine { oracle, dvir, automatic };

  std::string_view to_string(Engine e);
  //! Accepts "oracle", "dvir", "auto"; throws DomainError otherwise.
  Engine parse_engine(std::string_view text);

  //! Largest degree for which `automatic` uses the oracle (default 10,
  //! overridable with MFKRON_ORACLE_CROSSOVER).
  int  engine_crossover();
  void set_engine_crossover(int n);

  //! |lam intersect mu|, the largest first part of a constituent of
  //! [lam].[mu].
  int max_width(Partition const& lam, Partition const& mu);

  //! g(lam, mu, nu) for nu_1 = |lam intersect mu|, as the multiplicity of
  //! [nu without its first row] in [lam/beta].[mu/beta], beta = lam
  //! intersect mu. Throws DomainError if nu_1 is not maximal.
  std::int64_t g_at_max_width(Partition const& lam,
                              Partition const& mu,
                              Partition const& nu);

  //! Partitions eta of |nu| obtained from nu minus its first row by adding
  //! a horizontal strip of size nu_1, i.e. eta_i >= nu_{i+1} >= eta_{i+1}.
  struct YNuSet {
    Partition              base;
    std::vector<Partition> members;  // descending lexicographic
  };

  YNuSet y_set(Partition const& nu);

  //! Kronecker coefficient by the first-row recursion.
  //!
  //! For fixed (lam, mu) all coefficients are computed in one sweep over nu
  //! by decreasing first part, so every correction term is known when it is
  //! needed. Products of skew characters inside the recursion are expanded
  //! by the Littlewood-Richardson rule and multiplied with this same engine
  //! in strictly smaller degree. Never consults the character table.
  std::int64_t g_dvir(Partition const& lam,
                      Partition const& mu,
                      Partition const& nu);

  CharacterExpansion kron_product_dvir(Partition const& lam,
                                       Partition const& mu);

  CharacterExpansion kron_product(Partition const& lam,
                                  Partition const& mu,
                                  Engine           engine = Engine::automatic);

  //! Bilinear extension to (virtual) characters of equal degree.
  CharacterExpansion kron_product(CharacterExpansion const& a,
                                  CharacterExpansion const& b,
                                  Engine engine = Engine::automatic);

  //! [s].[t] for skew shapes of equal size.
  CharacterExpansion kron_product(SkewShape const& s,
                                  SkewShape const& t,
                                  Engine           engine = Engine::automatic);

  std::int64_t kron_coefficient(Partition const& lam,
                                Partition const& mu,
                                Partition const& nu,
                                Engine           engine = Engine::automatic);

  //! Largest multiplicity in [lam].[mu]; one iff multiplicity-free.
  std::int64_t g_max(Partition const& lam,
                     Partition const& mu,
                     Engine           engine = Engine::automatic);

  //! Drops the memo tables of the recursive engine.
  void clear_dvir_cache();

  //! A decomposition of (lam, mu) into two smaller pairs whose Kronecker
  //! maxima bound g(lam, mu) from below.
  //!
  //! sum_split: lam = lam_a + lam_b and mu = mu_a + mu_b (componentwise),
  //! with |lam_a| = |mu_a|. row_split: lam_a, lam_b are the rows of lam
  //! inside and outside an index set I; likewise mu with J.
  struct SemigroupWitness {
    enum class Kind { sum_split, row_split };

    Kind                            kind = Kind::sum_split;
    Partition                       lambda;
    Partition                       mu;
    std::pair<Partition, Partition> left_parts;
    std::pair<Partition, Partition> right_parts;
    std::set<int>                   rows_lambda;
    std::set<int>                   rows_mu;

    static SemigroupWitness sum_split(Partition lam_a,
                                      Partition lam_b,
                                      Partition mu_a,
                                      Partition mu_b);
    static SemigroupWitness row_split(Partition const&     lam,
                                      std::set<int> const& rows_lam,
                                      Partition const&     mu,
                                      std::set<int> const& rows_mu);

    //! Throws DomainError if the parts do not recombine to (lambda, mu) or
    //! the paired parts differ in size.
    void validate() const;
  };

  struct SemigroupBound {
    std::int64_t bound = 1;
    //! g of (lam_a, mu_a) and (lam_b, mu_b); zero when the part exceeded
    //! \p max_degree and was not evaluated (it still contributes >= 1).
    std::int64_t first_part  = 0;
    std::int64_t second_part = 0;
    //! The pair attaining the bound.
    std::pair<Partition, Partition> attained_by;
  };

  //! Evaluates the witness. Parts of degree above \p max_degree are not
  //! computed; any product of characters is nonzero, so they contribute at
  //! least one to the maximum.
  SemigroupBound semigroup_bound(SemigroupWitness const& witness,
                                 Engine engine     = Engine::automatic,
                                 int    max_degree = 12);

  //! The virtual character
  //!   sum_{A in rem(beta)} [lam/beta_A].[mu/beta_A] - sum_{B in add(alpha)}
  //!   [alpha^B]
  //! where beta = lam intersect mu, lam/beta is a single row and
  //! [mu/beta] = [alpha] is irreducible. Whenever <chi, [kappa]> > 0,
  //! g(lam, mu, (|beta|-1, kappa)) = <chi, [kappa]>.
  //!
  //! Throws DomainError naming the failed hypothesis.
  CharacterExpansion virtual_extension_chi(Partition const& lam,
                                           Partition const& mu,
                                           Engine engine = Engine::automatic);

}  // namespace mfkron

#endif  // MFKRON_KRONECKER_HPP_
