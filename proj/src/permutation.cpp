#include "cfc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cfc/error.hpp"

namespace cfc {

  Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    std::vector<bool> seen(one_line_.size() + 1, false);
    for (int v : one_line_) {
      if (v < 1 || static_cast<std::size_t>(v) > one_line_.size() || seen[v]) {
        throw Error(ErrorCode::ParseError, "one-line notation is not a bijection");
      }
      seen[v] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  Permutation Permutation::operator*(Permutation const& other) const {
    if (degree() != other.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "permutations of different degree");
    }
    std::vector<int> out(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
      out[i] = one_line_[static_cast<std::size_t>(other.one_line_[i] - 1)];
    }
    Permutation p;
    p.one_line_ = std::move(out);
    return p;
  }

  Permutation Permutation::inverse() const {
    std::vector<int> out(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
      out[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
    }
    Permutation p;
    p.one_line_ = std::move(out);
    return p;
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i) {
      if (one_line_[i] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  Permutation to_permutation(Word const& w) {
    // Right multiplication by (i i+1) swaps positions i and i+1.
    std::vector<int> v(static_cast<std::size_t>(w.rank()) + 1);
    std::iota(v.begin(), v.end(), 1);
    for (int s : w.letters()) {
      std::swap(v[static_cast<std::size_t>(s - 1)], v[static_cast<std::size_t>(s)]);
    }
    return Permutation(std::move(v));
  }

  Word word_from_permutation(Permutation const& p) {
    if (p.degree() < 2) {
      throw Error(ErrorCode::InvalidRank, "permutation degree must be at least 2");
    }
    // Repeatedly strip the least left descent a (value a+1 placed before a),
    // which yields the lexicographically least reduced word.
    std::vector<int> v = p.one_line();
    std::vector<int> pos(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      pos[static_cast<std::size_t>(v[i])] = static_cast<int>(i);
    }
    Letters out;
    int     a = 1;
    int const n = static_cast<int>(v.size());
    while (a < n) {
      if (pos[static_cast<std::size_t>(a + 1)] < pos[static_cast<std::size_t>(a)]) {
        out.push_back(a);
        std::swap(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(a + 1)]);
        a = std::max(1, a - 1);
      } else {
        ++a;
      }
    }
    return Word(n - 1, std::move(out));
  }

  std::size_t inversions(Permutation const& p) {
    auto const& v = p.one_line();
    std::size_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        count += v[i] > v[j] ? 1 : 0;
      }
    }
    return count;
  }

  std::vector<Cycle> cycles(Permutation const& p) {
    std::vector<Cycle> out;
    std::vector<bool>  seen(p.degree() + 1, false);
    for (int start = 1; start <= static_cast<int>(p.degree()); ++start) {
      if (seen[start] || p(start) == start) {
        continue;
      }
      Cycle c;
      for (int i = start; !seen[i]; i = p(i)) {
        seen[i] = true;
        c.push_back(i);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  Permutation from_cycles(std::size_t degree, std::vector<Cycle> const& cs) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 1);
    std::vector<bool> used(degree + 1, false);
    for (auto const& c : cs) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        if (a < 1 || static_cast<std::size_t>(a) > degree || used[a]) {
          throw Error(ErrorCode::ParseError, "cycles are not disjoint within the degree");
        }
        used[a]                           = true;
        v[static_cast<std::size_t>(a - 1)] = c[(i + 1) % c.size()];
      }
    }
    return Permutation(std::move(v));
  }

  std::vector<int> cycle_type(Permutation const& p) {
    std::vector<int> type;
    std::size_t      moved = 0;
    for (auto const& c : cycles(p)) {
      type.push_back(static_cast<int>(c.size()));
      moved += c.size();
    }
    type.insert(type.end(), p.degree() - moved, 1);
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
  }

  std::optional<std::array<int, 3>> find_321(Permutation const& p) {
    auto const& v = p.one_line();
    int const   n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (v[i] > v[j] && v[j] > v[k]) {
            return std::array<int, 3>{i + 1, j + 1, k + 1};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::array<int, 4>> find_3412(Permutation const& p) {
    auto const& v = p.one_line();
    int const   n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          for (int l = k + 1; l < n; ++l) {
            if (v[k] < v[l] && v[l] < v[i] && v[i] < v[j]) {
              return std::array<int, 4>{i + 1, j + 1, k + 1, l + 1};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  Permutation conjugate(Permutation const& p, Permutation const& x) {
    return x * p * x.inverse();
  }

  bool same_cycle_type(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "permutations of different degree");
    }
    return cycle_type(p) == cycle_type(q);
  }

  std::vector<Permutation> all_permutations(std::size_t degree) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  Cycle parse_cycle(std::string const& text) {
    std::string t = text;
    auto        l = t.find('(');
    auto        r = t.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l) {
      throw Error(ErrorCode::ParseError, "cycle must be written as (a b c ...)");
    }
    std::istringstream in(t.substr(l + 1, r - l - 1));
    Cycle              c;
    int                a;
    while (in >> a) {
      c.push_back(a);
    }
    if (!in.eof() || c.empty()) {
      throw Error(ErrorCode::ParseError, "cannot parse cycle '" + text + "'");
    }
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1) {
      throw Error(ErrorCode::ParseError, "cycle entries must be distinct positive integers");
    }
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    return c;
  }

  std::string to_string(Cycle const& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += (i ? " " : "") + std::to_string(c[i]);
    }
    return out + ")";
  }

  std::string cycles_to_string(Permutation const& p) {
    auto cs = cycles(p);
    if (cs.empty()) {
      return "e";
    }
    std::string out;
    for (auto const& c : cs) {
      out += to_string(c);
    }
    return out;
  }

}  // namespace cfc
