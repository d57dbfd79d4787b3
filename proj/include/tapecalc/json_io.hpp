#pragma once

#include <string>

#include "json.hpp"
#include "tapecalc/fn_table.hpp"
#include "tapecalc/free_monoid.hpp"
#include "tapecalc/stoch_matrix.hpp"

namespace tapecalc {

nlohmann::json table_to_json(const FnTable& t);
FnTable        table_from_json(const nlohmann::json& j);

// Matrix format: {"dom":[obj...], "cod":[obj...], "entries":[[ cell... ]...]}
// row-major; a cell is a list of {"arrow": <encoding>, "prob": "num/den"}.
// Boolean objects encode as widths, free-monoid objects as "*"; free-monoid
// arrows are plain strings.
nlohmann::json matrix_to_json(const StochMatrix<Set2Base>& m);
nlohmann::json matrix_to_json(const StochMatrix<FreeMonoidBase>& m);

struct Signature;
std::shared_ptr<const Signature> signature_from_json(const std::string& text);

} // namespace tapecalc
