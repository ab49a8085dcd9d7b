#ifndef CFC_CONJECTURE_HPP_
#define CFC_CONJECTURE_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "permutation.hpp"
#include "word.hpp"

namespace cfc {

  // Values w(i) at which consecutive triples i, w(i), w^2(i) of the written
  // cycle (least entry first) turn from rising to falling or back. Triples are
  // read along the cycle as written and do not wrap past its last entry.
  std::set<int> direction_changes(Cycle const& c);
  bool          has_connected_support(Cycle const& c);

  // Every nontrivial cycle has connected support and at most one direction change.
  bool conjecture_predicate(Permutation const& p);

  struct Counterexample {
    Word        word;
    Permutation permutation;
    bool        predicate;
    bool        cfc;
  };

  struct ConjectureReport {
    int                         rank = 1;
    std::size_t                 elements_checked = 0;
    bool                        agree = true;
    std::vector<Counterexample> counterexamples;  // sorted by one-line notation
  };

  inline constexpr int default_conjecture_max_rank = 8;

  // Compares the predicate with the CFC classification over all of S_{rank+1}.
  // Throws RankTooLarge.
  ConjectureReport check_conjecture(int rank, int max_rank = default_conjecture_max_rank);

}  // namespace cfc

#endif  // CFC_CONJECTURE_HPP_
