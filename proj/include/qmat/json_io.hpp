#pragma once

#include <json.hpp>

#include "qmat/centralizer.hpp"
#include "qmat/element.hpp"

namespace qmat {

/// Stable JSON schema for elements: a list of
/// {coeff: {num: [ints], den: [ints]}, mono: [[i,j,e], ...]} with terms in
/// canonical leading-first order; coefficient lists are ascending in degree.
/// Integers too large for int64 are emitted as decimal strings.
nlohmann::json element_to_json(const NormalElement& e);

nlohmann::json report_to_json(const CentralizerReport& r);

} // namespace qmat
