#ifndef CFC_SRC_DETAIL_HPP_
#define CFC_SRC_DETAIL_HPP_

// Internal helpers shared by the library sources.

#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>

#include "cfc/error.hpp"
#include "cfc/word.hpp"

namespace cfc::detail {

  // Words as byte strings for hashing; ranks stay far below 256.
  inline std::string encode(Letters const& letters) {
    return std::string(letters.begin(), letters.end());
  }

  inline Letters decode(std::string const& s) {
    return Letters(s.begin(), s.end());
  }

  template <typename Visit>
  void for_each_neighbour(std::string const& s, bool braids, Visit&& visit) {
    std::string t = s;
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
      if (commute(s[p], s[p + 1])) {
        std::swap(t[p], t[p + 1]);
        visit(t);
        std::swap(t[p], t[p + 1]);
      } else if (braids && p + 2 < s.size() && s[p] == s[p + 2] && s[p] != s[p + 1]) {
        t[p] = t[p + 2] = s[p + 1];
        t[p + 1]        = s[p];
        visit(t);
        t[p] = t[p + 2] = s[p];
        t[p + 1]        = s[p + 1];
      }
    }
  }

  // Breadth-first closure of `start` under commutations (and braid moves when
  // `braids`). `stop(s)` is called on every new member; returning true ends the
  // search early. Returns the members found.
  template <typename Stop>
  std::unordered_set<std::string> closure(std::string const& start,
                                          bool               braids,
                                          std::size_t        cap,
                                          Stop&&             stop) {
    std::unordered_set<std::string> seen{start};
    std::deque<std::string const*>  queue{&*seen.begin()};
    if (stop(start)) {
      return seen;
    }
    bool done = false;
    while (!queue.empty() && !done) {
      std::string const& s = *queue.front();
      queue.pop_front();
      for_each_neighbour(s, braids, [&](std::string const& t) {
        if (done) {
          return;
        }
        auto [it, inserted] = seen.insert(t);
        if (!inserted) {
          return;
        }
        if (seen.size() > cap) {
          throw Error(ErrorCode::ClosureTooLarge,
                      "reduced-expression closure exceeds " + std::to_string(cap) + " words");
        }
        queue.push_back(&*it);
        done = stop(*it);
      });
    }
    return seen;
  }

  inline std::unordered_set<std::string> closure(std::string const& start,
                                                 bool               braids,
                                                 std::size_t        cap) {
    return closure(start, braids, cap, [](std::string const&) { return false; });
  }

  void require_reduced(Word const& w);
  void require_rank(int rank, int max_rank);

}  // namespace cfc::detail

#endif  // CFC_SRC_DETAIL_HPP_
