#ifndef CFC_HEAP_HPP_
#define CFC_HEAP_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace cfc {

  // One letter of the source word placed at lattice point (gen, level).
  struct Block {
    int id;     // position in the source word
    int gen;    // column
    int level;  // 1 is the bottom row

    friend bool operator==(Block const&, Block const&) = default;
  };

  // Heap of an expression. Earlier letters sit above later ones; blocks keep
  // source-word order; covers are (upper, lower) pairs of block ids, sorted.
  struct Heap {
    int                              rank = 1;
    std::vector<Block>               blocks;
    std::vector<std::pair<int, int>> covers;

    int  height() const;
    bool covered(int id) const;  // some block sits directly above `id`

    friend bool operator==(Heap const&, Heap const&) = default;
  };

  // Throws NotReduced.
  Heap build_heap(Word const& w);
  // Same construction without the reducedness check. Equal labels count as
  // non-commuting, so a collapsible i-over-i pair stays visible.
  Heap heap_of_expression(Word const& w);

  // Reads blocks top row first, left to right within a row.
  Word heap_to_word(Heap const& h);

  enum class ScanMode { fc, cfc };

  // A convex chain top, middle, bottom (ids) in one column i with a single
  // neighbour between ("braid"), or an i-over-i pair with none ("collapse").
  // `wraps` marks cfc-mode findings that cross the seam of the cylinder.
  struct PatternViolation {
    std::string      kind;
    int              gen;
    std::vector<int> block_ids;
    bool             wraps = false;

    friend bool operator==(PatternViolation const&, PatternViolation const&) = default;
  };

  std::vector<PatternViolation> forbidden_pattern_scan(Heap const& h, ScanMode mode);

  struct Chunk {
    std::vector<int> block_ids;
    int              start;  // least generator
    int              size;   // column span

    friend bool operator==(Chunk const&, Chunk const&) = default;
  };

  // Connected components of the Hasse diagram ordered by least generator.
  std::vector<Chunk> chunks(Heap const& h);

  // Moves a maximal block labelled i from the top to the bottom. Throws
  // NotMaximalBlock. The result may be the heap of a non-reduced expression.
  Heap cyclic_shift_heap(Heap const& h, int gen);

  struct CylindricalHeap {
    Word                             canonical_word;
    std::vector<std::pair<int, int>> ring_profile;  // (start, size)
    std::vector<ElementId>           orbit;         // elements reached by cyclic shifts, sorted
  };

  // Throws NotCFC.
  CylindricalHeap cylindrical_canonical(Word const& w);

  enum class RenderFormat { ascii, svg };
  std::string render(Heap const& h, RenderFormat format);

}  // namespace cfc

#endif  // CFC_HEAP_HPP_
