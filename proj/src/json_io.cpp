#include "cfc/json_io.hpp"

namespace cfc {

  json word_to_json(Word const& w) {
    return json(w.letters());
  }

  Word word_from_json(int rank, json const& j) {
    if (!j.is_array()) {
      throw Error(ErrorCode::ParseError, "a word must be a JSON array of integers");
    }
    Letters letters;
    for (auto const& x : j) {
      if (!x.is_number_integer()) {
        throw Error(ErrorCode::ParseError, "a word must be a JSON array of integers");
      }
      letters.push_back(x.get<int>());
    }
    return Word(rank, std::move(letters));
  }

  json permutation_to_json(Permutation const& p) {
    return {{"one_line", p.one_line()}};
  }

  Permutation permutation_from_json(json const& j) {
    try {
      return Permutation(j.at("one_line").get<std::vector<int>>());
    } catch (json::exception const& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }

  json heap_to_json(Heap const& h) {
    json blocks = json::array();
    for (auto const& b : h.blocks) {
      blocks.push_back({{"gen", b.gen}, {"level", b.level}});
    }
    json covers = json::array();
    for (auto const& [a, b] : h.covers) {
      covers.push_back({a, b});
    }
    return {{"rank", h.rank}, {"blocks", blocks}, {"covers", covers}};
  }

  Heap heap_from_json(json const& j) {
    try {
      Heap h;
      h.rank = j.at("rank").get<int>();
      int id = 0;
      for (auto const& b : j.at("blocks")) {
        h.blocks.push_back({id++, b.at("gen").get<int>(), b.at("level").get<int>()});
      }
      for (auto const& c : j.at("covers")) {
        h.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
      }
      return h;
    } catch (json::exception const& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }

  json witness_to_json(Witness const& w) {
    json j = {{"kind", w.kind}, {"positions", w.positions}};
    if (w.word) {
      j["word"] = word_to_json(*w.word);
    }
    return j;
  }

  json verdict_to_json(FcVerdict const& v) {
    json j = {{"is_fc", v.is_fc}, {"method", to_string(v.method)}};
    j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return j;
  }

  json verdict_to_json(CfcVerdict const& v) {
    json j = {{"is_cfc", v.is_cfc}, {"method", to_string(v.method)}};
    j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return j;
  }

  json certificate_to_json(ConjugacyCertificate const& c) {
    return {{"source", word_to_json(c.source)},
            {"target", word_to_json(c.target)},
            {"conjugator", word_to_json(c.conjugator)},
            {"verified", c.verified}};
  }

  json report_to_json(ConjectureReport const& r) {
    json cex = json::array();
    for (auto const& c : r.counterexamples) {
      cex.push_back({{"word", word_to_json(c.word)},
                     {"permutation", permutation_to_json(c.permutation)},
                     {"predicate", c.predicate},
                     {"cfc", c.cfc}});
    }
    return {{"rank", r.rank},
            {"elements_checked", r.elements_checked},
            {"agree", r.agree},
            {"counterexamples", cex}};
  }

  json class_table_to_json(ClassTable const& t) {
    json conj = json::array();
    for (auto const& c : t.conjugacy_classes) {
      json cyclic = json::array();
      for (auto const& cyc : c.cyclic_classes) {
        json comm = json::array();
        for (auto const& cls : cyc.commutation_classes) {
          json words = json::array();
          for (auto const& w : cls) {
            words.push_back(word_to_json(w));
          }
          comm.push_back(words);
        }
        cyclic.push_back(
            {{"canonical_word", word_to_json(cyc.canonical_word)}, {"commutation_classes", comm}});
      }
      conj.push_back({{"ring_size_multiset", c.ring_sizes}, {"cyclic_classes", cyclic}});
    }
    return {{"rank", t.rank}, {"conjugacy_classes", conj}};
  }

  ClassTable class_table_from_json(json const& j) {
    try {
      ClassTable t;
      t.rank = j.at("rank").get<int>();
      for (auto const& c : j.at("conjugacy_classes")) {
        ConjugacyClass conj;
        conj.ring_sizes = c.at("ring_size_multiset").get<std::vector<int>>();
        for (auto const& cyc : c.at("cyclic_classes")) {
          CyclicClass cls;
          cls.canonical_word = word_from_json(t.rank, cyc.at("canonical_word"));
          for (auto const& comm : cyc.at("commutation_classes")) {
            std::vector<Word> words;
            for (auto const& w : comm) {
              words.push_back(word_from_json(t.rank, w));
            }
            cls.commutation_classes.push_back(std::move(words));
          }
          conj.cyclic_classes.push_back(std::move(cls));
        }
        t.conjugacy_classes.push_back(std::move(conj));
      }
      return t;
    } catch (json::exception const& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }

  json error_to_json(Error const& e) {
    return {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
  }

}  // namespace cfc
