#include "cfc/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>

#include "cfc/error.hpp"
#include "cfc/permutation.hpp"
#include "detail.hpp"

namespace cfc {

  std::string_view to_string(FcMethod m) {
    switch (m) {
      case FcMethod::stembridge_scan: return "stembridge_scan";
      case FcMethod::single_commutation_class: return "single_commutation_class";
      case FcMethod::pattern_321: return "pattern_321";
    }
    return "";
  }

  std::string_view to_string(CfcMethod m) {
    switch (m) {
      case CfcMethod::definition: return "definition";
      case CfcMethod::pattern_321_3412: return "pattern_321_3412";
      case CfcMethod::support_once: return "support_once";
    }
    return "";
  }

  FcMethod parse_fc_method(std::string_view s) {
    for (auto m : {FcMethod::stembridge_scan, FcMethod::single_commutation_class,
                   FcMethod::pattern_321}) {
      if (to_string(m) == s) {
        return m;
      }
    }
    throw Error(ErrorCode::ParseError, "unknown FC method '" + std::string(s) + "'");
  }

  CfcMethod parse_cfc_method(std::string_view s) {
    for (auto m :
         {CfcMethod::definition, CfcMethod::pattern_321_3412, CfcMethod::support_once}) {
      if (to_string(m) == s) {
        return m;
      }
    }
    throw Error(ErrorCode::ParseError, "unknown CFC method '" + std::string(s) + "'");
  }

  namespace {

    // 0-based start of a factor i, i±1, i, or npos.
    std::size_t braid_factor(std::string const& s) {
      for (std::size_t p = 0; p + 2 < s.size(); ++p) {
        if (s[p] == s[p + 2] && s[p] != s[p + 1] && !commute(s[p], s[p + 1])) {
          return p;
        }
      }
      return std::string::npos;
    }

    // Searches the Matsumoto closure of w and stops at the first member with a
    // braid factor.
    std::optional<Witness> stembridge_witness(Word const& w) {
      std::optional<Witness> found;
      detail::closure(detail::encode(w.letters()), true, closure_cap(),
                      [&](std::string const& s) {
                        auto p = braid_factor(s);
                        if (p == std::string::npos) {
                          return false;
                        }
                        int q = static_cast<int>(p) + 1;
                        found = Witness{"braid", {q, q + 1, q + 2},
                                        Word(w.rank(), detail::decode(s))};
                        return true;
                      });
      return found;
    }

    // Number of reduced words of p: sum over right descents i of the count
    // for p s_i.
    std::uint64_t count_reduced_words(std::vector<int> const&                           p,
                                      std::map<std::vector<int>, std::uint64_t>& memo) {
      if (auto it = memo.find(p); it != memo.end()) {
        return it->second;
      }
      std::uint64_t total = 0;
      bool          any   = false;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] > p[i + 1]) {
          auto q = p;
          std::swap(q[i], q[i + 1]);
          total += count_reduced_words(q, memo);
          any = true;
        }
      }
      return memo[p] = any ? total : 1;
    }

    // w is FC iff its commutation class holds every reduced word of w. When
    // it does not, some member has a braid factor; the braided word lies in
    // another class.
    std::optional<Witness> second_class_witness(Word const& w) {
      auto const members = detail::closure(detail::encode(w.letters()), false, closure_cap());
      std::map<std::vector<int>, std::uint64_t> memo;
      if (members.size() == count_reduced_words(to_permutation(w).one_line(), memo)) {
        return std::nullopt;
      }
      std::vector<std::string> sorted(members.begin(), members.end());
      std::sort(sorted.begin(), sorted.end());
      for (auto s : sorted) {
        if (auto p = braid_factor(s); p != std::string::npos) {
          std::swap(s[p], s[p + 1]);
          s[p + 2] = s[p];
          return Witness{"commutation_class", {}, Word(w.rank(), detail::decode(s))};
        }
      }
      throw Error(ErrorCode::VerificationFailed,
                  "commutation class of " + to_string(w) + " is short but braid-free");
    }

  }  // namespace

  FcVerdict is_fc(Word const& w, FcMethod method) {
    detail::require_reduced(w);
    FcVerdict v;
    v.method = method;
    switch (method) {
      case FcMethod::stembridge_scan: {
        v.witness = stembridge_witness(w);
        break;
      }
      case FcMethod::single_commutation_class: {
        v.witness = second_class_witness(w);
        break;
      }
      case FcMethod::pattern_321: {
        if (auto t = find_321(to_permutation(w))) {
          v.witness = Witness{"321", {(*t)[0], (*t)[1], (*t)[2]}, std::nullopt};
        }
        break;
      }
    }
    v.is_fc = !v.witness.has_value();
    return v;
  }

  bool is_cyclically_reduced(Word const& w) {
    for (auto const& u : reduced_expressions(w)) {
      for (std::size_t k = 1; k < u.size(); ++k) {
        if (!is_reduced(cyclic_shift(u, k))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    std::optional<Witness> definition_witness(Word const& w) {
      // Shift 0 first: if w itself is not FC, its closure need not be listed.
      if (stembridge_witness(w)) {
        return Witness{"not_fc", {}, w};
      }
      std::map<Word, bool> fc_cache;
      for (auto const& u : reduced_expressions(w)) {
        for (std::size_t k = 1; k < u.size(); ++k) {
          Word v = cyclic_shift(u, k);
          if (!is_reduced(v)) {
            return Witness{"not_reduced", {static_cast<int>(k)}, v};
          }
          auto id = element_id(v);
          auto it = fc_cache.find(id);
          if (it == fc_cache.end()) {
            it = fc_cache.emplace(id, !stembridge_witness(v)).first;
          }
          if (!it->second) {
            return Witness{"not_fc", {static_cast<int>(k)}, v};
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  CfcVerdict is_cfc(Word const& w, CfcMethod method) {
    detail::require_reduced(w);
    CfcVerdict v;
    v.method = method;
    switch (method) {
      case CfcMethod::definition: {
        v.witness = definition_witness(w);
        break;
      }
      case CfcMethod::pattern_321_3412: {
        auto p = to_permutation(w);
        if (auto t = find_321(p)) {
          v.witness = Witness{"321", {(*t)[0], (*t)[1], (*t)[2]}, std::nullopt};
        } else if (auto q = find_3412(p)) {
          v.witness = Witness{"3412", {(*q)[0], (*q)[1], (*q)[2], (*q)[3]}, std::nullopt};
        }
        break;
      }
      case CfcMethod::support_once: {
        std::unordered_map<int, int> first;
        for (std::size_t i = 0; i < w.size() && !v.witness; ++i) {
          auto [it, inserted] = first.emplace(w[i], static_cast<int>(i) + 1);
          if (!inserted) {
            v.witness = Witness{"repeated_letter", {it->second, static_cast<int>(i) + 1}, w};
          }
        }
        break;
      }
    }
    v.is_cfc = !v.witness.has_value();
    return v;
  }

  namespace {

    // Lex-least linear extension of the orientation: bit e of `orientation`
    // set means generator edges[e]+1 precedes edges[e].
    Word orient(int rank, std::vector<int> const& gens, std::vector<int> const& edges,
                unsigned orientation) {
      std::map<int, int>              indegree;
      std::map<int, std::vector<int>> after;
      for (int g : gens) {
        indegree[g] = 0;
      }
      for (std::size_t e = 0; e < edges.size(); ++e) {
        int a = edges[e], b = edges[e] + 1;
        if (orientation >> e & 1U) {
          std::swap(a, b);
        }
        after[a].push_back(b);
        ++indegree[b];
      }
      std::priority_queue<int, std::vector<int>, std::greater<>> ready;
      for (auto [g, d] : indegree) {
        if (d == 0) {
          ready.push(g);
        }
      }
      Letters out;
      while (!ready.empty()) {
        int g = ready.top();
        ready.pop();
        out.push_back(g);
        for (int h : after[g]) {
          if (--indegree[h] == 0) {
            ready.push(h);
          }
        }
      }
      return Word(rank, std::move(out));
    }

    // Each subset of generators, each acyclic orientation of the induced path
    // graph: the CFC elements with that support.
    std::vector<ElementId> support_once_elements(int rank, bool full_support_only) {
      std::vector<ElementId> out;
      unsigned const         subsets = 1U << rank;
      for (unsigned mask = full_support_only ? subsets - 1 : 0; mask < subsets; ++mask) {
        std::vector<int> gens, edges;
        for (int g = 1; g <= rank; ++g) {
          if (mask >> (g - 1) & 1U) {
            gens.push_back(g);
            if (g < rank && (mask >> g & 1U)) {
              edges.push_back(g);
            }
          }
        }
        for (unsigned o = 0; o < (1U << edges.size()); ++o) {
          out.push_back(element_id(orient(rank, gens, edges, o)));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::vector<ElementId> enumerate_fc(int rank, int max_rank) {
    detail::require_rank(rank, max_rank);
    std::vector<ElementId> out;
    for (auto const& p : all_permutations(static_cast<std::size_t>(rank) + 1)) {
      if (!contains_321(p)) {
        out.push_back(word_from_permutation(p));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElementId> enumerate_cfc(int rank, int max_rank) {
    detail::require_rank(rank, max_rank);
    return support_once_elements(rank, false);
  }

  std::vector<ElementId> enumerate_coxeter(int rank, int max_rank) {
    detail::require_rank(rank, max_rank);
    return support_once_elements(rank, true);
  }

  std::size_t catalan(std::size_t n) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

}  // namespace cfc
