#ifndef CFC_JSON_IO_HPP_
#define CFC_JSON_IO_HPP_

#include <json.hpp>

#include "class_table.hpp"
#include "classify.hpp"
#include "conjecture.hpp"
#include "error.hpp"
#include "heap.hpp"
#include "permutation.hpp"
#include "rings.hpp"
#include "word.hpp"

namespace cfc {

  using json = nlohmann::json;

  // Words serialize as bare arrays; the rank travels alongside in the
  // enclosing object.
  json word_to_json(Word const& w);
  Word word_from_json(int rank, json const& j);

  json        permutation_to_json(Permutation const& p);
  Permutation permutation_from_json(json const& j);

  json heap_to_json(Heap const& h);
  Heap heap_from_json(json const& j);

  json witness_to_json(Witness const& w);
  json verdict_to_json(FcVerdict const& v);
  json verdict_to_json(CfcVerdict const& v);

  json certificate_to_json(ConjugacyCertificate const& c);
  json report_to_json(ConjectureReport const& r);

  json       class_table_to_json(ClassTable const& t);
  ClassTable class_table_from_json(json const& j);

  json error_to_json(Error const& e);

}  // namespace cfc

#endif  // CFC_JSON_IO_HPP_
