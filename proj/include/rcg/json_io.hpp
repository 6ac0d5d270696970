#pragma once

// JSON serialization for every value the command-line front end reads or
// writes.  Formats are canonical: crossings sorted row-ascending then
// column-descending, polynomial terms lex-descending, permutation images
// keyed by position.  Parsers reject malformed input with InputError.

#include <string>

#include "json.hpp"
#include "rcg/insertion.hpp"
#include "rcg/lr.hpp"
#include "rcg/perm.hpp"
#include "rcg/poly.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/tableau.hpp"

namespace rcg {

using Json = nlohmann::json;

Json to_json(const Permutation& w);
Json to_json(const RcGraph& r);
Json to_json(const Tableau& y);
Json to_json(const Partition& mu);
Json to_json(const SparsePolynomial& p);
Json to_json(const InsertionStep& s);
Json to_json(const InsertionTrace& t);
Json to_json(const InverseInsertion& inv);
Json to_json(const LrResult& res);
Json to_json(const JTExpansion& jt);
Json to_json(const VerifyReport& rep);

Permutation permutation_from_json(const Json& j);
RcGraph rcgraph_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SparsePolynomial polynomial_from_json(const Json& j, int n);

// Parses text as JSON, mapping syntax errors to InputError.
Json parse_json(const std::string& text);

}  // namespace rcg
