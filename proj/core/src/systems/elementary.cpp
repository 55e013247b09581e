#include "pgr/systems/elementary.hpp"

#include "pgr/io/text_format.hpp"

namespace pgr {

namespace {

const char * const kRules = R"(
rule merge {
  lhs {
    node 1, 2;
    1 -a-> 2;
    type 1: ctx -> 1;
    type 2: 1 -> ctx;
    type 3: 1 -> 1;
    type 4: 1 -> 2;
    type 5: 2 -> 1;
    type 6: ctx -> 2;
    type 7: 2 -> ctx;
    type 8: 2 -> 2;
  }
  rhs {
    node 1;
    type: ctx -> 1 from 1;
    type: 1 -> ctx from 2;
    type: ctx -> 1 from 6;
    type: 1 -> ctx from 7;
    type: 1 -> 1 from 3;
    type: 1 -> 1 from 4;
    type: 1 -> 1 from 8;
    type: 1 -> 1 from 5;
  }
}

rule "merge-restricted" {
  lhs {
    node 1, 2;
    1 -a-> 2;
    type 1: ctx -> 1;
    type 2: 1 -> ctx;
    type 3: ctx -> 2;
    type 4: 2 -> ctx;
  }
  rhs {
    node 1;
    type: ctx -> 1 from 1;
    type: 1 -> ctx from 2;
    type: ctx -> 1 from 3;
    type: 1 -> ctx from 4;
  }
}

rule copy {
  lhs {
    node 1;
    type 1: ctx -> 1;
    type 2: 1 -> 1;
    type 3: 1 -> ctx;
  }
  rhs {
    node 1, 2;
    type: ctx -> 1 from 1;
    type: 1 -> 1 from 2;
    type: 1 -> ctx from 3;
    type: ctx -> 2 from 1;
    type: 2 -> 2 from 2;
    type: 2 -> ctx from 3;
  }
}

rule "partial-copy" {
  lhs {
    node 1;
    type 1: ctx -> 1;
    type 2: 1 -> 1;
    type 3: 1 -> ctx;
  }
  rhs {
    node 1, 2;
    type: ctx -> 1 from 1;
    type: 1 -> 1 from 2;
    type: 2 -> 2 from 2;
    type: 2 -> ctx from 3;
  }
}

rule split {
  lhs {
    node 1;
    type 1: ctx -> 1;
    type 2: 1 -> 1;
    type 3: 1 -> ctx;
    type 4: ctx -> 1;
    type 5: 1 -> 1;
    type 6: 1 -> ctx;
  }
  rhs {
    node 1, 2;
    type: ctx -> 1 from 1;
    type: 1 -> 1 from 2;
    type: 1 -> ctx from 3;
    type: ctx -> 2 from 4;
    type: 2 -> 2 from 5;
    type: 2 -> ctx from 6;
  }
}

system elementary { merge, "merge-restricted", copy, "partial-copy", split }
)";

} // namespace

const std::string & elementary_rules_text()
{
    static const std::string text = kRules;
    return text;
}

RuleSystem elementary_rules()
{
    static const Document doc = parse_document(kRules);
    return doc.system("elementary");
}

} // namespace pgr
