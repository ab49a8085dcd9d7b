#ifndef CFC_CLASS_TABLE_HPP_
#define CFC_CLASS_TABLE_HPP_

#include <vector>

#include "classify.hpp"
#include "word.hpp"

namespace cfc {

  struct CyclicClass {
    Word                           canonical_word;
    // One entry per element: all of its reduced expressions.
    std::vector<std::vector<Word>> commutation_classes;

    friend bool operator==(CyclicClass const&, CyclicClass const&) = default;
  };

  struct ConjugacyClass {
    std::vector<int>         ring_sizes;  // descending
    std::vector<CyclicClass> cyclic_classes;

    friend bool operator==(ConjugacyClass const&, ConjugacyClass const&) = default;
  };

  // CFC elements of W(A_rank) grouped by conjugacy, then cyclic class, then
  // commutation class. Classes at every level are ordered by (length, least word).
  struct ClassTable {
    int                         rank = 1;
    std::vector<ConjugacyClass> conjugacy_classes;

    std::size_t element_count() const;

    friend bool operator==(ClassTable const&, ClassTable const&) = default;
  };

  // Throws RankTooLarge.
  ClassTable class_table(int rank, int max_rank = default_max_rank);

}  // namespace cfc

#endif  // CFC_CLASS_TABLE_HPP_
