#ifndef CFC_CLASSIFY_HPP_
#define CFC_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace cfc {

  enum class FcMethod { stembridge_scan, single_commutation_class, pattern_321 };
  enum class CfcMethod { definition, pattern_321_3412, support_once };

  std::string_view to_string(FcMethod m);
  std::string_view to_string(CfcMethod m);
  FcMethod         parse_fc_method(std::string_view s);
  CfcMethod        parse_cfc_method(std::string_view s);

  // Why a verdict is negative. `kind` is one of
  //   "braid"            word[positions] is a factor i,j,i with |i-j| = 1
  //   "commutation_class" word is a reduced expression outside w's class
  //   "321", "3412"      1-based positions in the one-line notation
  //   "not_reduced"      word is a cyclic shift that is not reduced
  //   "not_fc"           word is a cyclic shift of an expression, reduced but not FC
  //   "repeated_letter"  positions are two occurrences of one generator in word
  struct Witness {
    std::string      kind;
    std::vector<int> positions;
    std::optional<Word> word;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct FcVerdict {
    bool                   is_fc = true;
    FcMethod               method = FcMethod::pattern_321;
    std::optional<Witness> witness;
  };

  struct CfcVerdict {
    bool                   is_cfc = true;
    CfcMethod              method = CfcMethod::pattern_321_3412;
    std::optional<Witness> witness;
  };

  // All routes throw NotReduced unless w is reduced.
  FcVerdict  is_fc(Word const& w, FcMethod method = FcMethod::pattern_321);
  CfcVerdict is_cfc(Word const& w, CfcMethod method = CfcMethod::pattern_321_3412);
  bool       is_cyclically_reduced(Word const& w);

  // Rank cap shared by the enumerations; the CLI may raise it.
  inline constexpr int default_max_rank = 9;

  // Canonical (lex-least) words, sorted. Throw RankTooLarge if rank > max_rank.
  std::vector<ElementId> enumerate_fc(int rank, int max_rank = default_max_rank);
  std::vector<ElementId> enumerate_cfc(int rank, int max_rank = default_max_rank);
  std::vector<ElementId> enumerate_coxeter(int rank, int max_rank = default_max_rank);

  std::size_t catalan(std::size_t n);

}  // namespace cfc

#endif  // CFC_CLASSIFY_HPP_
