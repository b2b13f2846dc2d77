#ifndef QLENS_IO_HPP
#define QLENS_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qlens/classify.hpp"
#include "qlens/closedform.hpp"
#include "qlens/integer.hpp"
#include "qlens/verify.hpp"

namespace qlens {

using json = nlohmann::ordered_json;

Weights parse_weights(const std::string& text);
std::string weights_string(const Weights& w, char sep = ',');

// a JSON number when it fits in 64 bits, otherwise a decimal string
json integer_json(const Integer& x);
Integer integer_from_json(const json& j);

// {r, weights, size, order, entries, tags}
json matrix_json(const WeightSystem& ws, const IntMatrix& entries, const std::vector<EntryTag>& tags);
json matrix_json(const WeightSystem& ws, const FormulaMatrix& f);
IntMatrix matrix_from_json(const json& j);

std::string matrix_plain(const IntMatrix& m, const std::vector<EntryTag>* tags = nullptr);
std::string matrix_csv(const IntMatrix& m);

json invariant_json(const InvariantTerms& t);

std::string classes_csv(const ClassReport& rep, bool list_members);
json classes_json(const ClassReport& rep, bool list_members);

json suite_json(const SuiteResult& s);

} // namespace qlens

#endif
