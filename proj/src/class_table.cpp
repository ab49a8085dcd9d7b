#include "cfc/class_table.hpp"

#include <algorithm>
#include <map>

#include "cfc/heap.hpp"
#include "cfc/rings.hpp"

namespace cfc {

  std::size_t ClassTable::element_count() const {
    std::size_t n = 0;
    for (auto const& conj : conjugacy_classes) {
      for (auto const& cyc : conj.cyclic_classes) {
        n += cyc.commutation_classes.size();
      }
    }
    return n;
  }

  namespace {
    bool shorter_then_lex(Word const& a, Word const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
  }  // namespace

  ClassTable class_table(int rank, int max_rank) {
    auto const elements = enumerate_cfc(rank, max_rank);

    // ring sizes -> canonical cylindrical word -> element ids
    std::map<std::vector<int>, std::map<Word, std::vector<ElementId>>> grouped;
    for (auto const& e : elements) {
      std::vector<int> sizes;
      for (auto const& r : rings_of(e)) {
        sizes.push_back(r.size);
      }
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      grouped[sizes][cylindrical_canonical(e).canonical_word].push_back(e);
    }

    ClassTable table;
    table.rank = rank;
    for (auto& [sizes, cyclic] : grouped) {
      ConjugacyClass conj{sizes, {}};
      for (auto& [canonical, members] : cyclic) {
        std::sort(members.begin(), members.end(), shorter_then_lex);
        CyclicClass cls{canonical, {}};
        for (auto const& e : members) {
          cls.commutation_classes.push_back(commutation_class(e));
        }
        conj.cyclic_classes.push_back(std::move(cls));
      }
      std::sort(conj.cyclic_classes.begin(), conj.cyclic_classes.end(),
                [](CyclicClass const& a, CyclicClass const& b) {
                  return shorter_then_lex(a.canonical_word, b.canonical_word);
                });
      table.conjugacy_classes.push_back(std::move(conj));
    }
    // Each conjugacy class is keyed by its least cyclic canonical word.
    std::sort(table.conjugacy_classes.begin(), table.conjugacy_classes.end(),
              [](ConjugacyClass const& a, ConjugacyClass const& b) {
                return shorter_then_lex(a.cyclic_classes.front().canonical_word,
                                        b.cyclic_classes.front().canonical_word);
              });
    return table;
  }

}  // namespace cfc
