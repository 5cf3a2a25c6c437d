#pragma once

// Program codes. A code is either a counter-machine program or a composite
// node built by one of the library's code-producing maps (totalize, Dec_B,
// closure, ...). Both are serialized into a self-delimiting bit string read
// as a natural with a leading 1 bit, so the image is decidable by parsing.

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tc/machine.hpp"
#include "tc/natural.hpp"

namespace tc {

class InvalidCode : public std::invalid_argument {
 public:
  InvalidCode() : std::invalid_argument("invalid machine code") {}
  explicit InvalidCode(const std::string& what) : std::invalid_argument(what) {}
};

enum class NodeKind : std::uint32_t {
  Smn = 1,          // (code2, a): b -> code2(pair(a, b))
  Totalize = 2,     // (code)
  Filter = 3,       // (code, sort): code's output restricted to sort's image
  Graph = 4,        // (code, sort): n -> pair(n, K_sort(code)(n))
  Dec = 5,          // (code, sort): pair(b, n) -> G(b, code, n)
  Spec = 6,         // (code, translation)
  Closure = 7,      // (code, budget)
  Tur = 8,          // (f-code, translation, budget): pair(T, n) -> D^F(T, n)
  Compose = 9,      // (g, f): g after f
  PairMaps = 10,    // (f, g, scheme): a -> <f(a), g(a)>
  Parallel = 11,    // (f, g, scheme): <a, b> -> <f(a), g(b)>
  Project = 12,     // (i, scheme): <a0, a1> -> a_i
  MapList = 13,     // (f): prime-power list -> elementwise f
  EnumeratorA = 14, // (): the Diophantine enumerator
  EnumeratorJ = 15, // (): the Delta_0 speculative enumerator
  Stream = 16,      // (spec-code): eventually periodic signed stream
};

/// How a product is laid out in a natural: the shifted Cantor pairing or 2^a 3^b.
enum class ProductScheme : unsigned { Cantor = 0, PrimePower = 1 };

struct Node {
  NodeKind kind{};
  std::vector<Natural> args;

  friend bool operator==(const Node&, const Node&) = default;
};

using CodeBody = std::variant<Program, Node>;

/// Strongly typed program code.
struct MachineCode {
  Natural value;

  friend bool operator==(const MachineCode& a, const MachineCode& b) { return a.value == b.value; }
};

MachineCode encode_program(const Program& p);
MachineCode encode_node(const Node& n);
MachineCode encode(const CodeBody& body);

/// Inverse of encode; throws InvalidCode outside the image.
CodeBody decode(const MachineCode& code);
bool is_valid_code(const Natural& n);

/// Expected arity of each node kind; nullopt for unknown kinds.
std::size_t node_arity(NodeKind k);
bool known_node_kind(std::uint64_t k);

/// Bit-level serialization shared with other compact encodings.
class BitWriter {
 public:
  BitWriter() { bits_.push_back('1'); }
  void bit(bool b) { bits_.push_back(b ? '1' : '0'); }
  void natural(const Natural& x);
  Natural finish() const;

 private:
  std::string bits_;
};

class BitReader {
 public:
  /// Returns false in `ok()` if n has no leading marker bit.
  explicit BitReader(const Natural& n);
  bool ok() const { return ok_; }
  bool done() const { return pos_ == bits_.size(); }
  std::optional<bool> bit();
  std::optional<Natural> natural();

 private:
  std::string bits_;
  std::size_t pos_ = 1;
  bool ok_ = false;
};

}  // namespace tc
