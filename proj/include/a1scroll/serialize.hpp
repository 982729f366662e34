#pragma once

#include <json.hpp>

#include "a1scroll/a1pi.hpp"
#include "a1scroll/chow.hpp"
#include "a1scroll/forms.hpp"
#include "a1scroll/lens.hpp"
#include "a1scroll/scrolls.hpp"

namespace a1scroll {

using Json = nlohmann::ordered_json;

/// Integers go out as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer& v);

Json to_json(const ChowRing& ring);
Json to_json(const BinaryCubicForm& f);
Json to_json(const UnimodularMatrix& m);
Json to_json(const InvariantProfile& p);
Json to_json(const EquivDecision& d);
Json to_json(const Verdict& v);
Json to_json(const CrosscheckReport& r);
Json to_json(const DiscriminantScan& s);
Json to_json(const std::vector<std::pair<int, GroupExpr>>& table);

}  // namespace a1scroll
