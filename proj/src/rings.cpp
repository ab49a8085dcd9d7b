#include "cfc/rings.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cfc/classify.hpp"
#include "cfc/error.hpp"
#include "cfc/heap.hpp"
#include "cfc/permutation.hpp"

namespace cfc {

  namespace {

    void require_cfc(Word const& w) {
      if (!is_reduced(w) || !is_cfc(w, CfcMethod::support_once).is_cfc) {
        throw Error(ErrorCode::NotCFC, to_string(w) + " is not CFC");
      }
    }

    void require_same_rank(Word const& w, Word const& y) {
      if (w.rank() != y.rank()) {
        throw Error(ErrorCode::RankMismatch, "ranks " + std::to_string(w.rank()) + " and "
                                                 + std::to_string(y.rank()) + " differ");
      }
    }

    std::vector<int> sorted_sizes(std::vector<Ring> const& rings) {
      std::vector<int> sizes;
      for (auto const& r : rings) {
        sizes.push_back(r.size);
      }
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    }

  }  // namespace

  std::vector<Ring> rings_of(Word const& w) {
    require_cfc(w);
    std::vector<Ring> out;
    for (auto const& c : chunks(build_heap(w))) {
      out.push_back({c.start, c.size});
    }
    return out;
  }

  bool slide_equivalent(Word const& w, Word const& y) {
    auto a = rings_of(w);
    auto b = rings_of(y);
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](Ring const& r, Ring const& s) { return r.size == s.size; });
  }

  bool ring_equivalent(Word const& w, Word const& y) {
    require_same_rank(w, y);
    return sorted_sizes(rings_of(w)) == sorted_sizes(rings_of(y));
  }

  bool is_conjugate_cfc(Word const& w, Word const& y) {
    return ring_equivalent(w, y);
  }

  Word slide_conjugator(int rank, int k, int k_prime) {
    if (k < 1 || k > k_prime) {
      throw Error(ErrorCode::OutOfRange, "slide needs 1 <= k <= k'");
    }
    if (k_prime >= rank) {
      throw Error(ErrorCode::ChunkAtBoundary,
                  "chunk ending at " + std::to_string(k_prime) + " cannot slide right in rank "
                      + std::to_string(rank));
    }
    Letters x;
    for (int g = k; g <= k_prime + 1; ++g) {
      x.push_back(g);
    }
    return Word(rank, std::move(x));
  }

  Word swap_conjugator(int rank, int k, int m) {
    if (k < 1 || m < 1 || k + m + 1 > rank) {
      throw Error(ErrorCode::OutOfRange, "chunks of sizes " + std::to_string(k) + " and "
                                             + std::to_string(m) + " do not fit in rank "
                                             + std::to_string(rank));
    }
    if (k == m) {
      return Word(rank, {});
    }
    if (k < m) {
      return swap_conjugator(rank, m, k).reversed();
    }
    // m+1 ascending runs of k+1 letters, first letters m+1, m, ..., 1.
    Letters x;
    for (int first = m + 1; first >= 1; --first) {
      for (int g = first; g <= first + k; ++g) {
        x.push_back(g);
      }
    }
    return Word(rank, std::move(x));
  }

  Word boomerang_rewrite(Word const& w, std::size_t pos) {
    auto mismatch = [&] {
      return Error(ErrorCode::PatternMismatch,
                   "no k..k'(k'+1)k'..k factor at position " + std::to_string(pos));
    };
    if (pos >= w.size()) {
      throw mismatch();
    }
    int const   k    = w[pos];
    std::size_t peak = pos;
    while (peak + 1 < w.size() && w[peak + 1] == w[peak] + 1) {
      ++peak;
    }
    int const top = w[peak];
    if (top == k) {
      throw mismatch();
    }
    std::size_t const length = 2 * static_cast<std::size_t>(top - k) + 1;
    if (pos + length > w.size()) {
      throw mismatch();
    }
    for (std::size_t j = 1; peak + j < pos + length; ++j) {
      if (w[peak + j] != top - static_cast<int>(j)) {
        throw mismatch();
      }
    }
    Letters out = w.letters();
    std::size_t i = pos;
    for (int g = top; g >= k; --g) {
      out[i++] = g;
    }
    for (int g = k + 1; g <= top; ++g) {
      out[i++] = g;
    }
    return Word(w.rank(), std::move(out));
  }

  Word stst_rewrite(Word const& w, std::size_t pos) {
    if (pos + 4 > w.size() || w[pos] != w[pos + 2] || w[pos + 1] != w[pos + 3]
        || std::abs(w[pos] - w[pos + 1]) != 1) {
      throw Error(ErrorCode::PatternMismatch,
                  "no i j i j factor at position " + std::to_string(pos));
    }
    Letters out = w.letters();
    out.erase(out.begin() + static_cast<long>(pos), out.begin() + static_cast<long>(pos) + 4);
    out.insert(out.begin() + static_cast<long>(pos), {w[pos + 1], w[pos]});
    return Word(w.rank(), std::move(out));
  }

  namespace {

    // A CFC element under successive conjugations, with the accumulated
    // conjugator: conjugator * start * conjugator^-1 = current.
    struct Conjugation {
      Word current;
      Word conjugator;

      void apply(Word const& x) {
        auto p     = conjugate(to_permutation(current), to_permutation(x));
        current    = word_from_permutation(p);
        conjugator = x * conjugator;
      }
    };

    bool ascending_on(Word const& u, int lo, int hi) {
      std::map<int, std::size_t> at;
      for (std::size_t i = 0; i < u.size(); ++i) {
        at[u[i]] = i;
      }
      for (int g = lo; g < hi; ++g) {
        if (at.at(g) > at.at(g + 1)) {
          return false;
        }
      }
      return true;
    }

    // Breadth-first over cyclic shifts by sources of the chunk lo..hi until
    // the chunk reads lo, lo+1, ..., hi. Returns the shift letters in order.
    std::vector<int> diagonalize(Word const& start, int lo, int hi) {
      std::map<Word, std::pair<Word, int>> parent;
      std::deque<Word>                     queue{start};
      parent.emplace(start, std::pair{start, 0});
      while (!queue.empty()) {
        Word u = queue.front();
        queue.pop_front();
        if (ascending_on(u, lo, hi)) {
          std::vector<int> path;
          for (Word v = u; v != start; v = parent.at(v).first) {
            path.push_back(parent.at(v).second);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        for (std::size_t p = 0; p < u.size(); ++p) {
          if (u[p] < lo || u[p] > hi) {
            continue;
          }
          bool source = true;
          for (std::size_t q = 0; q < p && source; ++q) {
            source = commute(u[p], u[q]);
          }
          if (!source) {
            continue;
          }
          Letters shifted = u.letters();
          shifted.erase(shifted.begin() + static_cast<long>(p));
          shifted.push_back(u[p]);
          Word v = element_id(Word(u.rank(), std::move(shifted)));
          if (parent.emplace(v, std::pair{u, u[p]}).second) {
            queue.push_back(v);
          }
        }
      }
      throw Error(ErrorCode::VerificationFailed, "chunk has no diagonal cyclic shift");
    }

    Word relabel(Word const& w, int offset, int rank) {
      Letters out = w.letters();
      for (int& g : out) {
        g += offset;
      }
      return Word(rank, std::move(out));
    }

    struct Interval {
      int start;
      int size;
      int end() const {
        return start + size - 1;
      }
    };

  }  // namespace

  Normalization normalize_to_simple(Word const& w) {
    require_cfc(w);
    int const   rank = w.rank();
    Conjugation state{element_id(w), Word(rank, {})};

    std::vector<Interval> intervals;
    for (auto const& r : rings_of(w)) {
      intervals.push_back({r.start, r.size});
    }

    // Cyclic shifts bring every chunk to ascending (diagonal) form.
    for (auto const& iv : intervals) {
      for (int g : diagonalize(state.current, iv.start, iv.end())) {
        state.apply(Word(rank, {g}));
      }
    }

    // Slide chunks left until they are packed against each other from 1.
    int next_start = 1;
    for (auto& iv : intervals) {
      while (iv.start > next_start) {
        state.apply(slide_conjugator(rank, iv.start - 1, iv.end() - 1).reversed());
        --iv.start;
      }
      next_start = iv.end() + 2;
    }

    // Bubble adjacent chunks into descending size order.
    for (std::size_t pass = 0; pass < intervals.size(); ++pass) {
      for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
        auto& a = intervals[i];
        auto& b = intervals[i + 1];
        if (a.size >= b.size) {
          continue;
        }
        int const offset = a.start - 1;
        state.apply(relabel(swap_conjugator(rank - offset, a.size, b.size), offset, rank));
        std::swap(a.size, b.size);
        b.start = a.end() + 2;
      }
    }

    Letters simple;
    for (auto const& iv : intervals) {
      for (int g = iv.start; g <= iv.end(); ++g) {
        simple.push_back(g);
      }
    }
    Word expected = element_id(Word(rank, std::move(simple)));
    if (state.current != expected) {
      throw Error(ErrorCode::VerificationFailed,
                  "normalization of " + to_string(w) + " reached " + to_string(state.current)
                      + " instead of " + to_string(expected));
    }
    return {state.conjugator, expected};
  }

  std::optional<ConjugacyCertificate> conjugacy_witness(Word const& w, Word const& y) {
    require_same_rank(w, y);
    if (!ring_equivalent(w, y)) {
      return std::nullopt;
    }
    auto nw = normalize_to_simple(w);
    auto ny = normalize_to_simple(y);
    if (nw.simple != ny.simple) {
      throw Error(ErrorCode::VerificationFailed, "ring-equivalent elements normalized apart");
    }
    ConjugacyCertificate cert;
    cert.conjugator = ny.conjugator.reversed() * nw.conjugator;
    cert.source     = element_id(w);
    cert.target     = element_id(y);
    cert.verified
        = conjugate(to_permutation(w), to_permutation(cert.conjugator)) == to_permutation(y);
    if (!cert.verified) {
      throw Error(ErrorCode::VerificationFailed,
                  "conjugator " + to_string(cert.conjugator) + " fails in S_n+1");
    }
    return cert;
  }

}  // namespace cfc
