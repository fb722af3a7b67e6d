#pragma once

#include <vector>

#include "json.hpp"
#include "lieflag/cgmb.hpp"
#include "lieflag/jinv.hpp"
#include "lieflag/magictables.hpp"
#include "lieflag/polyring.hpp"
#include "lieflag/qform.hpp"
#include "lieflag/rootsys.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag {

/// {"coeffs": ["c0", "c1", ...]}, constant term first, decimal strings.
nlohmann::json poly_to_json(const IntPoly& p);
/// Accepts {"coeffs": [...]} or a bare array; entries may be integers or
/// decimal strings.
IntPoly poly_from_json(const nlohmann::json& j);

BigInt bigint_from_json(const nlohmann::json& j);
/// JSON integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& v);

nlohmann::json root_system_to_json(const RootSystem& rs);
nlohmann::json cells_to_json(const RootSystem& rs, const std::vector<DoubleCosetCell>& cells);
nlohmann::json coset_reps_to_json(const RootSystem& rs, const std::vector<CosetRep>& reps);
nlohmann::json profile_to_json(const JProfile& p);
nlohmann::json form_to_json(const DiagFormR& f);
nlohmann::json witness_to_json(const std::vector<WitnessTerm>& w, const std::vector<IntPoly>& blocks);

nlohmann::json to_json(const MagicCell& c);
nlohmann::json to_json(const GroupConditionRow& r);
nlohmann::json to_json(const TitsIndexCase& c);

/// Quotes a field for CSV output when it contains a separator or quote.
std::string csv_field(const std::string& s);

}  // namespace lieflag
