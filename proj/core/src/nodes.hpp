#pragma once

// Native evaluation of composite codes. Each module that owns a node kind
// defines its evaluator; nodes.cpp only dispatches.

#include "tc/code.hpp"
#include "tc/universal.hpp"

namespace tc::detail {

Natural evaluate_node(const Node& node, const Natural& input, Fuel& fuel);

// Defined in stability.cpp.
Natural eval_totalize(const Node& node, const Natural& input, Fuel& fuel);
Natural eval_graph(const Node& node, const Natural& input, Fuel& fuel);
Natural eval_dec(const Node& node, const Natural& input, Fuel& fuel);
Natural eval_stream(const Node& node, const Natural& input, Fuel& fuel);

// Defined in category.cpp.
Natural eval_map_list(const Node& node, const Natural& input, Fuel& fuel);

// Defined in diophantine.cpp.
Natural eval_enumerator_a(const Node& node, const Natural& input, Fuel& fuel);

// Defined in goedel.cpp.
Natural eval_enumerator_j(const Node& node, const Natural& input, Fuel& fuel);
Natural eval_spec(const Node& node, const Natural& input, Fuel& fuel);
Natural eval_closure(const Node& node, const Natural& input, Fuel& fuel);
Natural eval_tur(const Node& node, const Natural& input, Fuel& fuel);

/// Evaluates a sub-code; an invalid one behaves as divergence.
Natural evaluate_sub(const Natural& code, const Natural& input, Fuel& fuel);

}  // namespace tc::detail
