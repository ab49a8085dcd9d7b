#ifndef CFC_WORD_HPP_
#define CFC_WORD_HPP_

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace cfc {

  // Letters are 1-based generator indices, s_1..s_n of W(A_n).
  using Letters = std::vector<int>;

  // A word over the generators of W(A_n). The empty word is the identity.
  class Word {
   public:
    Word() = default;
    // Throws InvalidRank if rank < 1, InvalidGenerator on a letter outside 1..rank.
    Word(int rank, Letters letters);

    int rank() const noexcept {
      return rank_;
    }
    Letters const& letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    int operator[](std::size_t i) const {
      return letters_[i];
    }

    Word operator*(Word const& other) const;  // concatenation
    Word reversed() const;                     // the inverse element's word

    friend bool operator==(Word const&, Word const&) = default;
    // Lexicographic on letters (shorter prefix first), then rank.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    int     rank_ = 1;
    Letters letters_;
  };

  // Bond order of the type-A Coxeter graph: 1 if i = j, 3 if |i-j| = 1, else 2.
  int m_value(int rank, int i, int j);

  inline bool commute(int i, int j) {
    return i - j > 1 || j - i > 1;
  }

  Word          cyclic_shift(Word const& w);
  Word          cyclic_shift(Word const& w, std::size_t times);
  std::set<int> support(Word const& w);

  bool is_reduced(Word const& w);
  // A reduced word for the same group element: the lexicographically least one.
  Word reduce(Word const& w);
  // Lexicographically least reduced expression; the canonical key of an element.
  using ElementId = Word;
  ElementId element_id(Word const& w);

  // Upper bound on the number of words a Matsumoto closure may materialize.
  // Reads CFC_MAX_CLOSURE from the environment, default 1'000'000.
  std::size_t closure_cap();

  // All reduced expressions of the element of w, sorted. Throws NotReduced or
  // ClosureTooLarge.
  std::vector<Word> reduced_expressions(Word const& w);
  std::vector<Word> reduced_expressions(Word const& w, std::size_t cap);

  // The reduced expressions partitioned into commutation classes. Each class
  // is sorted and classes are ordered by their least member.
  std::vector<std::vector<Word>> commutation_classes(Word const& w);
  // Only the commutation class containing w.
  std::vector<Word> commutation_class(Word const& w);

  bool is_commutation_move(Word const& u, Word const& v);

  // Text forms: "12342" or "1,2,3,4,2"; "e" or "" is the identity.
  Word        parse_word(int rank, std::string const& text);
  std::string to_string(Word const& w);

}  // namespace cfc

#endif  // CFC_WORD_HPP_
