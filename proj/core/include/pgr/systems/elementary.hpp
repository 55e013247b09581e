#pragma once

#include <string>

#include "pgr/rule.hpp"

namespace pgr {

const std::string & elementary_rules_text();

/// merge, merge-restricted, copy, partial-copy, split. The merges join the
/// endpoints of an a-edge; split is the only quasi rule.
RuleSystem elementary_rules();

} // namespace pgr
