#include "cfc/heap.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "cfc/classify.hpp"
#include "cfc/error.hpp"
#include "detail.hpp"

namespace cfc {

  int Heap::height() const {
    int h = 0;
    for (auto const& b : blocks) {
      h = std::max(h, b.level);
    }
    return h;
  }

  bool Heap::covered(int id) const {
    return std::any_of(covers.begin(), covers.end(),
                       [id](auto const& c) { return c.second == id; });
  }

  Heap heap_of_expression(Word const& w) {
    Heap h;
    h.rank         = w.rank();
    int const size = static_cast<int>(w.size());
    h.blocks.resize(w.size());
    // Bottom-up, each block as low as the blocks below it allow.
    for (int p = size - 1; p >= 0; --p) {
      int level = 1;
      for (int q = p + 1; q < size; ++q) {
        if (std::abs(w[p] - w[q]) <= 1) {
          level = std::max(level, h.blocks[q].level + 1);
        }
      }
      h.blocks[p] = Block{p, w[p], level};
    }
    // Column-adjacency rule: p covers q when no block strictly between them in
    // the word sits in either of their columns (or next to a shared column).
    for (int p = 0; p < size; ++p) {
      for (int q = p + 1; q < size; ++q) {
        int const d = std::abs(w[p] - w[q]);
        if (d > 1) {
          continue;
        }
        bool blocked = false;
        for (int r = p + 1; r < q && !blocked; ++r) {
          blocked = d == 1 ? (w[r] == w[p] || w[r] == w[q]) : std::abs(w[r] - w[p]) <= 1;
        }
        if (!blocked) {
          h.covers.emplace_back(p, q);
        }
      }
    }
    std::sort(h.covers.begin(), h.covers.end());
    return h;
  }

  Heap build_heap(Word const& w) {
    detail::require_reduced(w);
    return heap_of_expression(w);
  }

  namespace {
    // Block indices top row first, left to right.
    std::vector<std::size_t> reading_order(Heap const& h) {
      std::vector<std::size_t> order(h.blocks.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto const& x = h.blocks[a];
        auto const& y = h.blocks[b];
        return x.level != y.level ? x.level > y.level : x.gen < y.gen;
      });
      return order;
    }
  }  // namespace

  Word heap_to_word(Heap const& h) {
    Letters out;
    for (auto i : reading_order(h)) {
      out.push_back(h.blocks[i].gen);
    }
    return Word(h.rank, std::move(out));
  }

  std::vector<PatternViolation> forbidden_pattern_scan(Heap const& h, ScanMode mode) {
    // Positions in reading order form a linear extension; "between" below
    // means between in that order.
    auto const       order = reading_order(h);
    std::vector<int> gens;
    std::vector<int> ids;
    for (auto i : order) {
      gens.push_back(h.blocks[i].gen);
      ids.push_back(h.blocks[i].id);
    }
    int const n = static_cast<int>(gens.size());

    std::vector<PatternViolation> out;
    auto judge = [&](int gen, int top, int bottom, std::vector<int> const& between, bool wraps) {
      if (between.size() == 0) {
        out.push_back({"collapse", gen, {ids[top], ids[bottom]}, wraps});
      } else if (between.size() == 1) {
        out.push_back({"braid", gen, {ids[top], ids[between[0]], ids[bottom]}, wraps});
      }
    };

    for (int gen = 1; gen <= h.rank; ++gen) {
      std::vector<int> column;
      for (int p = 0; p < n; ++p) {
        if (gens[p] == gen) {
          column.push_back(p);
        }
      }
      for (std::size_t c = 0; c + 1 < column.size(); ++c) {
        std::vector<int> between;
        for (int r = column[c] + 1; r < column[c + 1]; ++r) {
          if (std::abs(gens[r] - gen) == 1) {
            between.push_back(r);
          }
        }
        judge(gen, column[c], column[c + 1], between, false);
      }
      if (mode == ScanMode::cfc && column.size() >= 2) {
        // Around the cylinder: from the lowest block back up to the highest.
        std::vector<int> between;
        for (int r = column.back() + 1; r < n; ++r) {
          if (std::abs(gens[r] - gen) == 1) {
            between.push_back(r);
          }
        }
        for (int r = 0; r < column.front(); ++r) {
          if (std::abs(gens[r] - gen) == 1) {
            between.push_back(r);
          }
        }
        judge(gen, column.back(), column.front(), between, true);
      }
    }
    return out;
  }

  std::vector<Chunk> chunks(Heap const& h) {
    std::vector<std::size_t> parent(h.blocks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::vector<std::size_t> index_of(h.blocks.size());
    for (std::size_t i = 0; i < h.blocks.size(); ++i) {
      index_of[static_cast<std::size_t>(h.blocks[i].id)] = i;
    }
    for (auto [a, b] : h.covers) {
      parent[find(index_of[static_cast<std::size_t>(a)])]
          = find(index_of[static_cast<std::size_t>(b)]);
    }
    std::vector<Chunk> out;
    std::vector<int>   slot(h.blocks.size(), -1);
    for (std::size_t i = 0; i < h.blocks.size(); ++i) {
      auto root = find(i);
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(out.size());
        out.push_back(Chunk{{}, h.blocks[i].gen, 0});
      }
      auto& c = out[static_cast<std::size_t>(slot[root])];
      c.block_ids.push_back(h.blocks[i].id);
      int hi  = std::max(c.start + c.size - 1, h.blocks[i].gen);
      c.start = std::min(c.start, h.blocks[i].gen);
      c.size  = hi - c.start + 1;
    }
    for (auto& c : out) {
      std::sort(c.block_ids.begin(), c.block_ids.end());
    }
    std::sort(out.begin(), out.end(),
              [](Chunk const& a, Chunk const& b) { return a.start < b.start; });
    return out;
  }

  Heap cyclic_shift_heap(Heap const& h, int gen) {
    std::optional<std::size_t> top;
    for (std::size_t i = 0; i < h.blocks.size(); ++i) {
      if (h.blocks[i].gen == gen && !h.covered(h.blocks[i].id)) {
        top = i;
      }
    }
    if (!top) {
      throw Error(ErrorCode::NotMaximalBlock,
                  "no maximal block labelled " + std::to_string(gen));
    }
    Letters letters;
    for (auto i : reading_order(h)) {
      if (i != *top) {
        letters.push_back(h.blocks[i].gen);
      }
    }
    letters.push_back(gen);
    return heap_of_expression(Word(h.rank, std::move(letters)));
  }

  CylindricalHeap cylindrical_canonical(Word const& w) {
    if (!is_reduced(w) || !is_cfc(w, CfcMethod::support_once).is_cfc) {
      throw Error(ErrorCode::NotCFC, to_string(w) + " is not CFC");
    }
    // Cyclic shifts of reduced expressions of a CFC element move one source
    // of its heap to the bottom; walk that orbit at the element level.
    std::set<ElementId>   seen{element_id(w)};
    std::deque<ElementId> queue{*seen.begin()};
    while (!queue.empty()) {
      ElementId u = queue.front();
      queue.pop_front();
      for (std::size_t p = 0; p < u.size(); ++p) {
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
        auto id = element_id(Word(u.rank(), std::move(shifted)));
        if (seen.insert(id).second) {
          queue.push_back(id);
        }
      }
    }
    CylindricalHeap c;
    c.orbit.assign(seen.begin(), seen.end());
    c.canonical_word = c.orbit.front();
    for (auto const& ch : chunks(heap_of_expression(w))) {
      c.ring_profile.emplace_back(ch.start, ch.size);
    }
    return c;
  }

  namespace {

    std::string render_ascii(Heap const& h) {
      int const digits = static_cast<int>(std::to_string(h.rank).size());
      int const width  = 2 * ((digits + 3) / 2);
      int const step   = width / 2;
      int const cols   = (h.rank - 1) * step + width;

      std::ostringstream out;
      for (int level = h.height(); level >= 1; --level) {
        std::string row(static_cast<std::size_t>(cols), ' ');
        for (auto const& b : h.blocks) {
          if (b.level != level) {
            continue;
          }
          std::string label = std::to_string(b.gen);
          std::string box   = "[" + std::string(static_cast<std::size_t>(width - 2) - label.size(), ' ')
                            + label + "]";
          row.replace(static_cast<std::size_t>((b.gen - 1) * step), box.size(), box);
        }
        while (!row.empty() && row.back() == ' ') {
          row.pop_back();
        }
        out << row << '\n';
      }
      if (h.blocks.empty()) {
        out << "(empty heap)\n";
      }
      std::string axis(static_cast<std::size_t>(cols), ' ');
      int         free_from = 0;
      for (int g = 1; g <= h.rank; ++g) {
        std::string label = "s" + std::to_string(g);
        int         at    = (g - 1) * step + width / 2 - 1;
        if (at >= free_from && at + static_cast<int>(label.size()) <= cols) {
          axis.replace(static_cast<std::size_t>(at), label.size(), label);
          free_from = at + static_cast<int>(label.size()) + 1;
        }
      }
      while (!axis.empty() && axis.back() == ' ') {
        axis.pop_back();
      }
      out << std::string(static_cast<std::size_t>(cols), '-') << '\n' << axis << '\n';
      return out.str();
    }

    std::string render_svg(Heap const& h) {
      constexpr int cell   = 40;
      constexpr int margin = 10;
      int const     width  = 2 * margin + (h.rank - 1) * cell / 2 + cell;
      int const     height = 2 * margin + h.height() * cell + 20;

      std::ostringstream out;
      out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
          << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
      out << "<g font-family=\"sans-serif\" text-anchor=\"middle\">\n";
      for (int g = 1; g <= h.rank; ++g) {
        int x = margin + (g - 1) * cell / 2 + cell / 2;
        out << "<line x1=\"" << x << "\" y1=\"" << margin << "\" x2=\"" << x << "\" y2=\""
            << margin + h.height() * cell << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2,3\"/>\n";
      }
      for (auto const& b : h.blocks) {
        int x = margin + (b.gen - 1) * cell / 2;
        int y = margin + (h.height() - b.level) * cell;
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
            << cell << "\" fill=\"white\" stroke=\"black\"/>\n";
        out << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5
            << "\" font-size=\"14\">" << b.gen << "</text>\n";
      }
      for (int g = 1; g <= h.rank; ++g) {
        int x = margin + (g - 1) * cell / 2 + cell / 2;
        out << "<text x=\"" << x << "\" y=\"" << height - margin << "\" font-size=\"10\">s"
            << g << "</text>\n";
      }
      out << "</g>\n</svg>\n";
      return out.str();
    }

  }  // namespace

  std::string render(Heap const& h, RenderFormat format) {
    return format == RenderFormat::ascii ? render_ascii(h) : render_svg(h);
  }

}  // namespace cfc
