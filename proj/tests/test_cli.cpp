#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cfc/class_table.hpp"
#include "cfc/classify.hpp"
#include "cfc/cli.hpp"
#include "cfc/heap.hpp"
#include "cfc/json_io.hpp"
#include "cfc/permutation.hpp"

using namespace cfc;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  json call_json(std::vector<std::string> args) {
    auto r = call(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
  }
}  // namespace

TEST_CASE("classify") {
  auto j = call_json({"classify", "--rank", "4", "--word", "21324"});
  CHECK(j["is_fc"] == true);
  CHECK(j["is_cfc"] == false);
  CHECK(j["cfc"]["method"] == "pattern_321_3412");
  CHECK(j["cfc"]["witness"]["kind"] == "3412");
  CHECK(j["fc"]["witness"].is_null());

  auto d = call_json({"classify", "--rank", "3", "--word", "2132", "--cfc-method", "support_once"});
  CHECK(d["cfc"]["witness"]["kind"] == "repeated_letter");
  CHECK(d["cfc"]["witness"]["positions"] == json::array({1, 4}));
  CHECK(d["permutation"]["one_line"] == json::array({3, 4, 1, 2}));

  auto t = call({"--format", "text", "classify", "--rank", "3", "--word", "123"});
  CHECK(t.code == 0);
  CHECK(t.out == "123: FC, CFC, permutation (1 2 3 4)\n");
}

TEST_CASE("conj and witness") {
  auto r = call({"conj", "--rank", "7", "--w", "3456", "--y", "4567"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"conjugate\":true") != std::string::npos);

  auto w = call_json({"witness", "--rank", "6", "--w", "12356", "--y", "12456"});
  CHECK(w["verified"] == true);
  CHECK(w["source"] == json::array({1, 2, 3, 5, 6}));
  CHECK(w["target"] == json::array({1, 2, 4, 5, 6}));

  CHECK(call_json({"witness", "--rank", "3", "--w", "12", "--y", "13"})["conjugate"] == false);
  CHECK(call_json({"conj", "--rank", "3", "--w", "12", "--y", "13"})["conjugate"] == false);
}

TEST_CASE("enumerate and counts") {
  CHECK(call_json({"counts", "--kind", "fc", "--rank", "3"})["count"] == 14);
  CHECK(call_json({"counts", "--kind", "cfc", "--rank", "4"})["count"] == 34);
  CHECK(call_json({"counts", "--kind", "coxeter", "--rank", "4"})["count"] == 8);
  auto e = call_json({"enumerate", "--kind", "cfc", "--rank", "2"});
  CHECK(e["elements"] == json::parse("[[],[1],[1,2],[2],[2,1]]"));
  auto t = call({"--format", "text", "enumerate", "--kind", "coxeter", "--rank", "2"});
  CHECK(t.out == "12\n21\n");
}

TEST_CASE("render") {
  auto a = call({"render", "--rank", "1", "--word", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == render(build_heap(Word(1, {1})), RenderFormat::ascii));

  auto path = (std::filesystem::temp_directory_path() / "cfc_test_render.svg").string();
  std::filesystem::remove(path);
  auto s = call({"render", "--rank", "5", "--word", "2354", "--format", "svg", "--out", path});
  CHECK(s.code == 0);
  CHECK(s.out.empty());
  std::ifstream     file(path);
  std::stringstream body;
  body << file.rdbuf();
  CHECK(body.str() == render(build_heap(Word(5, {2, 3, 5, 4})), RenderFormat::svg));
  std::filesystem::remove(path);

  auto j = call_json({"render", "--rank", "5", "--word", "2354", "--format", "json"});
  CHECK(heap_from_json(j) == build_heap(Word(5, {2, 3, 5, 4})));
}

TEST_CASE("classtable and conjecture-check") {
  auto t = call_json({"classtable", "--rank", "4"});
  CHECK(class_table_from_json(t) == class_table(4));

  auto c = call_json({"conjecture-check", "--rank", "4"});
  CHECK(c["agree"] == true);
  CHECK(c["elements_checked"] == 120);
}

TEST_CASE("exit codes and error objects") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"classify", "--rank", "4"}).code == 2);
  CHECK(call({"counts", "--kind", "nope", "--rank", "3"}).code == 2);
  CHECK(call({"--help"}).code == 0);

  auto nr = call({"classify", "--rank", "3", "--word", "11"});
  CHECK(nr.code == 1);
  CHECK(json::parse(nr.out)["error"]["code"] == "NotReduced");
  CHECK_FALSE(nr.err.empty());

  auto nc = call({"conj", "--rank", "3", "--w", "2132", "--y", "2"});
  CHECK(nc.code == 1);
  CHECK(json::parse(nc.out)["error"]["code"] == "NotCFC");

  auto big = call({"counts", "--kind", "fc", "--rank", "10"});
  CHECK(big.code == 1);
  CHECK(json::parse(big.out)["error"]["code"] == "RankTooLarge");

  auto raised = call({"--max-rank", "10", "counts", "--kind", "coxeter", "--rank", "10"});
  CHECK(raised.code == 0);
  CHECK(json::parse(raised.out)["count"] == 512);
  CHECK(raised.err.find("warning") != std::string::npos);

  auto gen = call({"classify", "--rank", "3", "--word", "14"});
  CHECK(gen.code == 1);
  CHECK(json::parse(gen.out)["error"]["code"] == "InvalidGenerator");
}

TEST_CASE("serialization round trips") {
  Word w(12, {1, 12, 5, 3});
  CHECK(word_from_json(12, word_to_json(w)) == w);
  CHECK(word_from_json(3, word_to_json(Word(3, {}))) == Word(3, {}));

  auto p = to_permutation(Word(4, {1, 2, 3, 4, 2}));
  CHECK(permutation_from_json(permutation_to_json(p)) == p);
  CHECK(permutation_to_json(p) == json::parse(R"({"one_line":[2,4,3,5,1]})"));

  for (auto const& word : {Word(5, {2, 1, 3, 2, 4, 5}), Word(4, {}), Word(6, {1, 2, 3, 5, 6})}) {
    auto h = build_heap(word);
    CHECK(heap_from_json(json::parse(heap_to_json(h).dump())) == h);
  }
  auto hj = heap_to_json(build_heap(Word(2, {1, 2})));
  CHECK(hj == json::parse(R"({"rank":2,"blocks":[{"gen":1,"level":2},{"gen":2,"level":1}],"covers":[[0,1]]})"));

  for (int n = 1; n <= 5; ++n) {
    auto t = class_table(n);
    CHECK(class_table_from_json(json::parse(class_table_to_json(t).dump())) == t);
  }
  CHECK_THROWS_AS(word_from_json(3, json::parse("[1,4]")), Error);
}

TEST_CASE("class_table") {
  auto one = class_table(1);
  CHECK(one.element_count() == 2);
  REQUIRE(one.conjugacy_classes.size() == 2);
  for (auto const& c : one.conjugacy_classes) {
    REQUIRE(c.cyclic_classes.size() == 1);
    CHECK(c.cyclic_classes[0].commutation_classes.size() == 1);
  }

  auto four = class_table(4);
  CHECK(four.element_count() == 34);
  auto const cox = enumerate_coxeter(4);
  for (auto const& conj : four.conjugacy_classes) {
    for (auto const& cyc : conj.cyclic_classes) {
      for (auto const& comm : cyc.commutation_classes) {
        if (std::binary_search(cox.begin(), cox.end(), element_id(comm.front()))) {
          CHECK(conj.ring_sizes == std::vector<int>{4});
          CHECK(conj.cyclic_classes.size() == 1);
          CHECK(cyc.commutation_classes.size() == 8);
        }
        if (element_id(comm.front()) == Word(4, {1, 2, 3})) {
          REQUIRE(conj.cyclic_classes.size() == 2);
          CHECK(conj.cyclic_classes[0].canonical_word == Word(4, {1, 2, 3}));
          CHECK(conj.cyclic_classes[1].canonical_word == Word(4, {2, 3, 4}));
        }
      }
    }
  }
  CHECK_THROWS_AS(class_table(10), Error);
}

TEST_CASE("class table leaves partition the reduced expressions; grouping is cycle type") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Word> leaves;
    for (auto const& conj : class_table(n).conjugacy_classes) {
      std::vector<int> type;
      for (auto const& cyc : conj.cyclic_classes) {
        for (auto const& comm : cyc.commutation_classes) {
          auto t = cycle_type(to_permutation(comm.front()));
          if (type.empty()) {
            type = t;
          }
          CHECK(t == type);
          for (auto const& u : comm) {
            CHECK(element_id(u) == element_id(comm.front()));
            leaves.push_back(u);
          }
        }
      }
    }
    std::vector<Word> expected;
    for (auto const& e : enumerate_cfc(n)) {
      auto r = reduced_expressions(e);
      expected.insert(expected.end(), r.begin(), r.end());
    }
    std::sort(leaves.begin(), leaves.end());
    std::sort(expected.begin(), expected.end());
    CHECK(leaves == expected);

    // distinct conjugacy classes carry distinct cycle types
    std::set<std::vector<int>> types;
    auto const                 t = class_table(n);
    for (auto const& conj : t.conjugacy_classes) {
      types.insert(cycle_type(to_permutation(conj.cyclic_classes[0].commutation_classes[0][0])));
    }
    CHECK(types.size() == t.conjugacy_classes.size());
  }
}
