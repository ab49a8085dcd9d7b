#ifndef CFC_RINGS_HPP_
#define CFC_RINGS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "word.hpp"

namespace cfc {

  // A chunk of a CFC heap up to cyclic shift: generators start..start+size-1.
  struct Ring {
    int start;
    int size;

    friend bool operator==(Ring const&, Ring const&) = default;
    friend auto operator<=>(Ring const&, Ring const&) = default;
  };

  // Throw NotCFC (and RankMismatch where two words are compared).
  std::vector<Ring> rings_of(Word const& w);
  bool              slide_equivalent(Word const& w, Word const& y);
  bool              ring_equivalent(Word const& w, Word const& y);
  bool              is_conjugate_cfc(Word const& w, Word const& y);

  // k, k+1, ..., k'+1. Conjugating the diagonal chunk k..k' by it yields
  // (k+1)..(k'+1). Throws ChunkAtBoundary when k' >= rank, OutOfRange when k > k'.
  Word slide_conjugator(int rank, int k, int k_prime);

  // Conjugator taking the simple element with diagonal chunks of sizes k then
  // m (first starting at 1) to the one with sizes m then k. Empty when k = m.
  // Throws OutOfRange unless k + m + 1 <= rank.
  Word swap_conjugator(int rank, int k, int m);

  // k..k'(k'+1)k'..k at pos becomes (k'+1)k'..k..k'(k'+1). Throws PatternMismatch.
  Word boomerang_rewrite(Word const& w, std::size_t pos);
  // i j i j at pos becomes j i, |i-j| = 1. Throws PatternMismatch.
  Word stst_rewrite(Word const& w, std::size_t pos);

  // x with x * source * x^-1 = target in S_{rank+1}. The conjugator is not
  // necessarily reduced.
  struct ConjugacyCertificate {
    Word      conjugator;
    ElementId source;
    ElementId target;
    bool      verified = false;
  };

  // nullopt when w and y are not conjugate. Throws NotCFC, RankMismatch, and
  // VerificationFailed if the synthesized conjugator does not check out.
  std::optional<ConjugacyCertificate> conjugacy_witness(Word const& w, Word const& y);

  // The conjugator bringing a CFC element to the simple element with the same
  // ring sizes (diagonal chunks, sizes descending, packed from generator 1),
  // and that simple element.
  struct Normalization {
    Word      conjugator;
    ElementId simple;
  };
  Normalization normalize_to_simple(Word const& w);

}  // namespace cfc

#endif  // CFC_RINGS_HPP_
