#include "cfc/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "cfc/error.hpp"
#include "cfc/permutation.hpp"
#include "detail.hpp"

namespace cfc {

  Word::Word(int rank, Letters letters) : rank_(rank), letters_(std::move(letters)) {
    if (rank < 1 || rank > 200) {
      throw Error(ErrorCode::InvalidRank, "rank must lie in 1..200, got " + std::to_string(rank));
    }
    for (int s : letters_) {
      if (s < 1 || s > rank) {
        throw Error(ErrorCode::InvalidGenerator,
                    "generator " + std::to_string(s) + " outside 1.." + std::to_string(rank));
      }
    }
  }

  Word Word::operator*(Word const& other) const {
    if (rank_ != other.rank_) {
      throw Error(ErrorCode::RankMismatch, "cannot concatenate words of different rank");
    }
    Letters out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    Word w;
    w.rank_    = rank_;
    w.letters_ = std::move(out);
    return w;
  }

  Word Word::reversed() const {
    Word w = *this;
    std::reverse(w.letters_.begin(), w.letters_.end());
    return w;
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a.letters_ <=> b.letters_; c != 0) {
      return c;
    }
    return a.rank_ <=> b.rank_;
  }

  int m_value(int rank, int i, int j) {
    for (int s : {i, j}) {
      if (s < 1 || s > rank) {
        throw Error(ErrorCode::InvalidGenerator,
                    "generator " + std::to_string(s) + " outside 1.." + std::to_string(rank));
      }
    }
    if (i == j) {
      return 1;
    }
    return commute(i, j) ? 2 : 3;
  }

  Word cyclic_shift(Word const& w) {
    return cyclic_shift(w, 1);
  }

  Word cyclic_shift(Word const& w, std::size_t times) {
    if (w.empty()) {
      return w;
    }
    Letters letters = w.letters();
    std::rotate(letters.begin(), letters.begin() + static_cast<long>(times % letters.size()),
                letters.end());
    return Word(w.rank(), std::move(letters));
  }

  std::set<int> support(Word const& w) {
    return {w.letters().begin(), w.letters().end()};
  }

  bool is_reduced(Word const& w) {
    return inversions(to_permutation(w)) == w.size();
  }

  Word reduce(Word const& w) {
    return word_from_permutation(to_permutation(w));
  }

  ElementId element_id(Word const& w) {
    return reduce(w);
  }

  std::size_t closure_cap() {
    if (char const* env = std::getenv("CFC_MAX_CLOSURE")) {
      char* end   = nullptr;
      auto  value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return static_cast<std::size_t>(value);
      }
    }
    return 1'000'000;
  }

  namespace detail {
    void require_reduced(Word const& w) {
      if (!is_reduced(w)) {
        throw Error(ErrorCode::NotReduced, "word " + to_string(w) + " is not reduced");
      }
    }

    void require_rank(int rank, int max_rank) {
      if (rank < 1) {
        throw Error(ErrorCode::InvalidRank, "rank must be positive");
      }
      if (rank > max_rank) {
        throw Error(ErrorCode::RankTooLarge, "rank " + std::to_string(rank)
                                                 + " exceeds the cap "
                                                 + std::to_string(max_rank));
      }
    }
  }  // namespace detail

  namespace {
    std::vector<Word> sorted_words(int rank, std::unordered_set<std::string> const& set) {
      std::vector<Word> out;
      out.reserve(set.size());
      for (auto const& s : set) {
        out.emplace_back(rank, detail::decode(s));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::vector<Word> reduced_expressions(Word const& w) {
    return reduced_expressions(w, closure_cap());
  }

  std::vector<Word> reduced_expressions(Word const& w, std::size_t cap) {
    detail::require_reduced(w);
    return sorted_words(w.rank(), detail::closure(detail::encode(w.letters()), true, cap));
  }

  std::vector<Word> commutation_class(Word const& w) {
    detail::require_reduced(w);
    return sorted_words(w.rank(),
                        detail::closure(detail::encode(w.letters()), false, closure_cap()));
  }

  std::vector<std::vector<Word>> commutation_classes(Word const& w) {
    detail::require_reduced(w);
    auto const cap = closure_cap();
    auto       all = detail::closure(detail::encode(w.letters()), true, cap);

    std::vector<std::vector<Word>> classes;
    std::unordered_set<std::string> assigned;
    // Visit in sorted order so each class is discovered from its least member.
    std::vector<std::string> order(all.begin(), all.end());
    std::sort(order.begin(), order.end());
    for (auto const& s : order) {
      if (assigned.contains(s)) {
        continue;
      }
      auto cls = detail::closure(s, false, cap);
      assigned.insert(cls.begin(), cls.end());
      classes.push_back(sorted_words(w.rank(), cls));
    }
    return classes;
  }

  bool is_commutation_move(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return false;
    }
    std::size_t p = 0;
    while (p < u.size() && u[p] == v[p]) {
      ++p;
    }
    if (p + 1 >= u.size()) {
      return false;
    }
    return u[p] == v[p + 1] && u[p + 1] == v[p] && commute(u[p], u[p + 1])
           && std::equal(u.letters().begin() + static_cast<long>(p) + 2, u.letters().end(),
                         v.letters().begin() + static_cast<long>(p) + 2);
  }

  Word parse_word(int rank, std::string const& text) {
    std::string t;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        t.push_back(c);
      }
    }
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
      t = t.substr(1, t.size() - 2);
    }
    Letters letters;
    if (t.empty() || t == "e") {
      return Word(rank, {});
    }
    auto bad = [&] {
      return Error(ErrorCode::ParseError, "cannot parse word '" + text + "'");
    };
    if (t.find(',') != std::string::npos || rank > 9) {
      std::size_t pos = 0;
      while (pos <= t.size()) {
        auto next  = t.find(',', pos);
        auto token = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (token.empty()
            || !std::all_of(token.begin(), token.end(),
                            [](unsigned char c) { return std::isdigit(c); })) {
          throw bad();
        }
        letters.push_back(std::stoi(token));
        if (next == std::string::npos) {
          break;
        }
        pos = next + 1;
      }
    } else {
      for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw bad();
        }
        letters.push_back(c - '0');
      }
    }
    return Word(rank, std::move(letters));
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    bool const  commas = w.rank() > 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (commas && i > 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

}  // namespace cfc
