#include "cfc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cfc/json_io.hpp"

namespace cfc {

  namespace {

    struct Options {
      std::string format = "json";
      int         max_rank = 0;  // 0 means the per-command default
      int         rank     = 0;
      std::string kind     = "fc";
      std::string word;
      std::string w;
      std::string y;
      std::string fc_method  = "pattern_321";
      std::string cfc_method = "pattern_321_3412";
      std::string render_format = "ascii";
      std::string out_path;
    };

    int effective_cap(Options const& o, int fallback, std::ostream& err) {
      if (o.max_rank == 0) {
        return fallback;
      }
      if (o.max_rank > fallback) {
        err << "warning: raising the rank cap from " << fallback << " to " << o.max_rank
            << "; running time grows factorially\n";
      }
      return o.max_rank;
    }

    std::vector<ElementId> enumerate_kind(Options const& o, std::ostream& err) {
      int const cap = effective_cap(o, default_max_rank, err);
      if (o.kind == "fc") {
        return enumerate_fc(o.rank, cap);
      }
      if (o.kind == "cfc") {
        return enumerate_cfc(o.rank, cap);
      }
      if (o.kind == "coxeter") {
        return enumerate_coxeter(o.rank, cap);
      }
      throw Error(ErrorCode::ParseError, "unknown kind '" + o.kind + "'");
    }

    json rings_json(std::vector<Ring> const& rings) {
      json j = json::array();
      for (auto const& r : rings) {
        j.push_back({{"start", r.start}, {"size", r.size}});
      }
      return j;
    }

    void emit(Options const& o, std::ostream& out, json const& j, std::string const& text) {
      if (o.format == "text") {
        out << text;
      } else {
        out << j.dump() << '\n';
      }
    }

    std::string words_text(std::vector<Word> const& words) {
      std::string s;
      for (auto const& w : words) {
        s += to_string(w) + '\n';
      }
      return s;
    }

    void cmd_enumerate(Options const& o, std::ostream& out, std::ostream& err) {
      auto   elements = enumerate_kind(o, err);
      json   list     = json::array();
      for (auto const& e : elements) {
        list.push_back(word_to_json(e));
      }
      emit(o, out,
           {{"kind", o.kind}, {"rank", o.rank}, {"count", elements.size()}, {"elements", list}},
           words_text(elements));
    }

    void cmd_counts(Options const& o, std::ostream& out, std::ostream& err) {
      auto n = enumerate_kind(o, err).size();
      emit(o, out, {{"kind", o.kind}, {"rank", o.rank}, {"count", n}}, std::to_string(n) + '\n');
    }

    void cmd_classify(Options const& o, std::ostream& out) {
      Word w   = parse_word(o.rank, o.word);
      auto fc  = is_fc(w, parse_fc_method(o.fc_method));
      auto cfc = is_cfc(w, parse_cfc_method(o.cfc_method));
      auto p   = to_permutation(w);
      json j   = {{"rank", w.rank()},
                  {"word", word_to_json(w)},
                  {"length", w.size()},
                  {"is_fc", fc.is_fc},
                  {"is_cfc", cfc.is_cfc},
                  {"cyclically_reduced", is_cyclically_reduced(w)},
                  {"fc", verdict_to_json(fc)},
                  {"cfc", verdict_to_json(cfc)},
                  {"permutation", permutation_to_json(p)},
                  {"cycles", cycles_to_string(p)}};
      std::ostringstream text;
      text << to_string(w) << ": " << (fc.is_fc ? "FC" : "not FC") << ", "
           << (cfc.is_cfc ? "CFC" : "not CFC") << ", permutation " << cycles_to_string(p)
           << '\n';
      emit(o, out, j, text.str());
    }

    void cmd_conj(Options const& o, std::ostream& out) {
      Word w = parse_word(o.rank, o.w);
      Word y = parse_word(o.rank, o.y);
      bool c = is_conjugate_cfc(w, y);
      emit(o, out,
           {{"conjugate", c},
            {"w", word_to_json(w)},
            {"y", word_to_json(y)},
            {"rings_w", rings_json(rings_of(w))},
            {"rings_y", rings_json(rings_of(y))}},
           std::string(c ? "conjugate" : "not conjugate") + '\n');
    }

    void cmd_witness(Options const& o, std::ostream& out) {
      Word w    = parse_word(o.rank, o.w);
      Word y    = parse_word(o.rank, o.y);
      auto cert = conjugacy_witness(w, y);
      if (!cert) {
        emit(o, out, {{"conjugate", false}}, "not conjugate\n");
        return;
      }
      emit(o, out, certificate_to_json(*cert),
           "x = " + to_string(cert->conjugator) + " conjugates " + to_string(cert->source)
               + " to " + to_string(cert->target) + '\n');
    }

    void cmd_render(Options const& o, std::ostream& out) {
      Heap        h = build_heap(parse_word(o.rank, o.word));
      std::string body;
      if (o.render_format == "ascii") {
        body = render(h, RenderFormat::ascii);
      } else if (o.render_format == "svg") {
        body = render(h, RenderFormat::svg);
      } else {
        body = heap_to_json(h).dump() + '\n';
      }
      if (o.out_path.empty()) {
        out << body;
        return;
      }
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file || !(file << body)) {
        throw std::runtime_error("cannot write " + o.out_path);
      }
    }

    void cmd_classtable(Options const& o, std::ostream& out, std::ostream& err) {
      auto table = class_table(o.rank, effective_cap(o, default_max_rank, err));
      std::ostringstream text;
      for (auto const& conj : table.conjugacy_classes) {
        text << "ring sizes {";
        for (std::size_t i = 0; i < conj.ring_sizes.size(); ++i) {
          text << (i ? "," : "") << conj.ring_sizes[i];
        }
        text << "}\n";
        for (auto const& cyc : conj.cyclic_classes) {
          text << "  cyclic class " << to_string(cyc.canonical_word) << ":";
          for (auto const& comm : cyc.commutation_classes) {
            text << " [";
            for (std::size_t i = 0; i < comm.size(); ++i) {
              text << (i ? " " : "") << to_string(comm[i]);
            }
            text << "]";
          }
          text << '\n';
        }
      }
      emit(o, out, class_table_to_json(table), text.str());
    }

    void cmd_conjecture(Options const& o, std::ostream& out, std::ostream& err) {
      auto report = check_conjecture(o.rank, effective_cap(o, default_conjecture_max_rank, err));
      std::ostringstream text;
      text << "rank " << report.rank << ": checked " << report.elements_checked << ", "
           << (report.agree ? "agree" : "DISAGREE") << '\n';
      for (auto const& c : report.counterexamples) {
        text << "  " << to_string(c.word) << ' ' << cycles_to_string(c.permutation)
             << " predicate=" << c.predicate << " cfc=" << c.cfc << '\n';
      }
      emit(o, out, report_to_json(report), text.str());
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclically fully commutative elements of W(A_n)", "cfc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-rank", o.max_rank, "Override the rank cap")->check(CLI::PositiveNumber);

    auto rank_option = [&](CLI::App* sub) {
      sub->add_option("--rank", o.rank, "Rank n of W(A_n)")->required()->check(CLI::PositiveNumber);
    };
    auto kinds = CLI::IsMember({"fc", "cfc", "coxeter"});

    auto* enumerate = app.add_subcommand("enumerate", "List FC, CFC or Coxeter elements");
    rank_option(enumerate);
    enumerate->add_option("--kind", o.kind)->check(kinds);

    auto* counts = app.add_subcommand("counts", "Count FC, CFC or Coxeter elements");
    rank_option(counts);
    counts->add_option("--kind", o.kind)->check(kinds);

    auto* classify = app.add_subcommand("classify", "FC/CFC verdicts for a reduced word");
    rank_option(classify);
    classify->add_option("--word", o.word)->required();
    classify->add_option("--fc-method", o.fc_method)
        ->check(CLI::IsMember({"stembridge_scan", "single_commutation_class", "pattern_321"}));
    classify->add_option("--cfc-method", o.cfc_method)
        ->check(CLI::IsMember({"definition", "pattern_321_3412", "support_once"}));

    auto* conj = app.add_subcommand("conj", "Decide conjugacy of two CFC elements");
    rank_option(conj);
    conj->add_option("--w", o.w)->required();
    conj->add_option("--y", o.y)->required();

    auto* witness = app.add_subcommand("witness", "Conjugator for two CFC elements");
    rank_option(witness);
    witness->add_option("--w", o.w)->required();
    witness->add_option("--y", o.y)->required();

    auto* render_cmd = app.add_subcommand("render", "Draw the heap of a reduced word");
    rank_option(render_cmd);
    render_cmd->add_option("--word", o.word)->required();
    render_cmd->add_option("--format", o.render_format)
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    render_cmd->add_option("--out", o.out_path, "Write to this file instead of stdout");

    auto* classtable = app.add_subcommand("classtable", "Conjugacy/cyclic/commutation classes");
    rank_option(classtable);

    auto* conjecture = app.add_subcommand("conjecture-check",
                                          "Compare the cycle predicate with CFC membership");
    rank_option(conjecture);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
      app.parse(argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << e.what() << '\n';
      return 2;
    }

    try {
      if (*enumerate) {
        cmd_enumerate(o, out, err);
      } else if (*counts) {
        cmd_counts(o, out, err);
      } else if (*classify) {
        cmd_classify(o, out);
      } else if (*conj) {
        cmd_conj(o, out);
      } else if (*witness) {
        cmd_witness(o, out);
      } else if (*render_cmd) {
        cmd_render(o, out);
      } else if (*classtable) {
        cmd_classtable(o, out, err);
      } else if (*conjecture) {
        cmd_conjecture(o, out, err);
      }
    } catch (Error const& e) {
      out << error_to_json(e).dump() << '\n';
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

}  // namespace cfc
