#include "cfc/conjecture.hpp"

#include <algorithm>

#include "cfc/classify.hpp"
#include "detail.hpp"

namespace cfc {

  std::set<int> direction_changes(Cycle const& c) {
    std::set<int> out;
    for (std::size_t k = 0; k + 2 < c.size(); ++k) {
      int const i = c[k], wi = c[k + 1], wwi = c[k + 2];
      if ((i < wi && wi > wwi) || (i > wi && wi < wwi)) {
        out.insert(wi);
      }
    }
    return out;
  }

  bool has_connected_support(Cycle const& c) {
    if (c.empty()) {
      return true;
    }
    auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    return static_cast<std::size_t>(*hi - *lo) + 1 == c.size();
  }

  bool conjecture_predicate(Permutation const& p) {
    auto const cs = cycles(p);
    return std::all_of(cs.begin(), cs.end(), [](Cycle const& c) {
      return has_connected_support(c) && direction_changes(c).size() <= 1;
    });
  }

  ConjectureReport check_conjecture(int rank, int max_rank) {
    detail::require_rank(rank, max_rank);
    ConjectureReport report;
    report.rank = rank;
    // all_permutations yields one-line notation in lexicographic order, so the
    // counterexamples come out sorted.
    for (auto const& p : all_permutations(static_cast<std::size_t>(rank) + 1)) {
      ++report.elements_checked;
      Word const w         = word_from_permutation(p);
      bool const predicate = conjecture_predicate(p);
      bool const cfc       = is_cfc(w, CfcMethod::pattern_321_3412).is_cfc;
      if (predicate != cfc) {
        report.counterexamples.push_back({w, p, predicate, cfc});
      }
    }
    report.agree = report.counterexamples.empty();
    return report;
  }

}  // namespace cfc
