#pragma once

// Stabilization of signed enumerations and the decision-map constructions
// built on it (K_B, Gr_B, f^T, G, Dec_B, Omega).

#include <optional>
#include <set>
#include <vector>

#include "tc/code.hpp"
#include "tc/natural.hpp"
#include "tc/universal.hpp"

namespace tc::stability {

/// One signed element: e(-) = 0, e(+) = 1.
struct Entry {
  Natural element;
  bool plus = false;
  friend bool operator==(const Entry&, const Entry&) = default;
};

inline Natural sign_code(bool plus) { return Natural(plus ? 1 : 0); }
/// pair(element, sign), the machine-level B x {+-} encoding.
inline Natural entry_code(const Entry& e) { return pair(e.element, sign_code(e.plus)); }
std::optional<Entry> decode_entry(const Natural& code);

/// Some index m has (b, +) and no later index has (b, -).
bool is_l_stable(const std::vector<Entry>& l, const Natural& b);

/// Finite prefix followed by a repeating tail. An empty tail leaves the
/// stream undefined past the prefix.
struct StreamSpec {
  std::vector<Entry> prefix;
  std::vector<Entry> tail;
};

/// Exact stabilization of an eventually periodic stream.
std::set<Natural> stabilization_oracle(const StreamSpec& spec);
/// Value at n, nullopt where undefined.
std::optional<Entry> stream_at(const StreamSpec& spec, const Natural& n);

Natural stream_spec_code(const StreamSpec& spec);
std::optional<StreamSpec> decode_stream_spec(const Natural& code);
MachineCode stream_code(const StreamSpec& spec);

/// K_B: restricts outputs to the image of the B x {+-} encoding.
MachineCode coerce_K(const MachineCode& code, const Natural& sort);
/// Gr_B: n -> pair(n, K_B(code)(n)).
MachineCode graph_stream(const MachineCode& code, const Natural& sort);
/// f^T = Tot(Gr_B(code)); kSentinel where nothing new was found.
MachineCode total_graph(const MachineCode& code, const Natural& sort);

/// One rank of f^T, decoded. nullopt means sentinel.
struct GraphPoint {
  Natural index;
  Entry entry;
};
std::optional<GraphPoint> total_graph_at(const MachineCode& graph_code, const Natural& rank, Fuel& fuel);

/// G(b, T, n): b is l_S-stable for S = f^T({0..n}) in first-coordinate order.
bool decision_G(const Natural& b, const MachineCode& code, const Natural& sort, const Natural& n, Fuel& fuel);
/// G(b, T, 0..horizon) computed in one sweep.
std::vector<bool> decision_trace(const Natural& b, const MachineCode& code, const Natural& sort,
                                 const Natural& horizon, Fuel& fuel);

/// Dec_B(T): pair(b, n) -> G(b, T, n).
MachineCode dec_B(const MachineCode& code, const Natural& sort);
/// Omega: outputs restricted to {-, +}.
MachineCode omega(const MachineCode& code);

struct Verdict {
  enum class Kind { PlusStableSoFar, RefutedAt, Unknown };
  Kind kind = Kind::Unknown;
  /// Rank of the + (plus-stable) or of the refuting - (refuted).
  Natural at = 0;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Verdict of a sign trace read as D(b, 0..horizon).
Verdict verdict_of(const std::vector<bool>& signs);
/// Evaluates D(b, m) = code(pair(b, m)) for m <= horizon.
Verdict is_decided_prefix(const MachineCode& decision, const Natural& b, const Natural& horizon, Fuel& fuel);

/// Elements that are Dec_B(stream)-decided, obtained from the machine's own
/// trace over one full tail period after the prefix has been discovered.
std::set<Natural> decided_by_tail_analysis(const StreamSpec& spec, const Natural& fuel);

}  // namespace tc::stability
