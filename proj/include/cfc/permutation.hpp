#ifndef CFC_PERMUTATION_HPP_
#define CFC_PERMUTATION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "word.hpp"

namespace cfc {

  // A permutation of {1..degree} in one-line notation. Products compose right
  // to left: (p * q)(i) = p(q(i)).
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);  // throws ParseError if not a bijection
    static Permutation identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return one_line_.size();
    }
    std::vector<int> const& one_line() const noexcept {
      return one_line_;
    }
    int operator()(int i) const {
      return one_line_[static_cast<std::size_t>(i - 1)];
    }

    Permutation operator*(Permutation const& other) const;  // throws DegreeMismatch
    Permutation inverse() const;
    bool        is_identity() const;

    friend bool                 operator==(Permutation const&, Permutation const&) = default;
    friend std::strong_ordering operator<=>(Permutation const& a, Permutation const& b) {
      return a.one_line_ <=> b.one_line_;
    }

   private:
    std::vector<int> one_line_;
  };

  // A nontrivial cycle, rotated so its least entry comes first.
  using Cycle = std::vector<int>;

  // Image of w in S_{rank+1}, s_i -> (i i+1).
  Permutation to_permutation(Word const& w);
  // Lexicographically least reduced word for p, lifted to W(A_{degree-1}).
  Word word_from_permutation(Permutation const& p);

  std::size_t inversions(Permutation const& p);

  // Disjoint nontrivial cycles ordered by their least entries.
  std::vector<Cycle> cycles(Permutation const& p);
  Permutation        from_cycles(std::size_t degree, std::vector<Cycle> const& cs);
  // Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type(Permutation const& p);

  // 1-based positions of the first occurrence found by the naive scans.
  std::optional<std::array<int, 3>> find_321(Permutation const& p);
  std::optional<std::array<int, 4>> find_3412(Permutation const& p);
  inline bool contains_321(Permutation const& p) {
    return find_321(p).has_value();
  }
  inline bool contains_3412(Permutation const& p) {
    return find_3412(p).has_value();
  }

  // x * p * x^-1.
  Permutation conjugate(Permutation const& p, Permutation const& x);
  bool        same_cycle_type(Permutation const& p, Permutation const& q);

  std::vector<Permutation> all_permutations(std::size_t degree);

  // "(1 2 4 5)" text form, normalized so the least entry leads.
  Cycle       parse_cycle(std::string const& text);
  std::string to_string(Cycle const& c);
  std::string cycles_to_string(Permutation const& p);

}  // namespace cfc

#endif  // CFC_PERMUTATION_HPP_
