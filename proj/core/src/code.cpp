#include "tc/code.hpp"

namespace tc {

// Naturals are written as gamma(len + 1) followed by the len bits of x,
// most significant first; len is the exact bit length, so the form is canonical.
void BitWriter::natural(const Natural& x) {
  std::size_t len = x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
  std::string header = Natural(static_cast<unsigned long>(len + 1)).get_str(2);
  bits_.append(header.size() - 1, '0');
  bits_ += header;
  if (len > 0) bits_ += x.get_str(2);
}

Natural BitWriter::finish() const { return Natural(bits_, 2); }

BitReader::BitReader(const Natural& n) {
  if (n <= 0) return;
  bits_ = n.get_str(2);
  ok_ = true;
}

std::optional<bool> BitReader::bit() {
  if (pos_ >= bits_.size()) return std::nullopt;
  return bits_[pos_++] == '1';
}

std::optional<Natural> BitReader::natural() {
  std::size_t zeros = 0;
  while (pos_ < bits_.size() && bits_[pos_] == '0') {
    ++zeros;
    ++pos_;
  }
  if (zeros > 40 || pos_ + zeros + 1 > bits_.size()) return std::nullopt;
  std::uint64_t header = std::stoull(bits_.substr(pos_, zeros + 1), nullptr, 2);
  pos_ += zeros + 1;
  std::uint64_t len = header - 1;
  if (len == 0) return Natural(0);
  if (pos_ + len > bits_.size() || bits_[pos_] != '1') return std::nullopt;
  Natural x(bits_.substr(pos_, len), 2);
  pos_ += len;
  return x;
}

std::size_t node_arity(NodeKind k) {
  switch (k) {
    case NodeKind::Smn: return 2;
    case NodeKind::Totalize: return 1;
    case NodeKind::Filter: return 2;
    case NodeKind::Graph: return 2;
    case NodeKind::Dec: return 2;
    case NodeKind::Spec: return 2;
    case NodeKind::Closure: return 2;
    case NodeKind::Tur: return 3;
    case NodeKind::Compose: return 2;
    case NodeKind::PairMaps: return 3;
    case NodeKind::Parallel: return 3;
    case NodeKind::Project: return 2;
    case NodeKind::MapList: return 1;
    case NodeKind::EnumeratorA: return 0;
    case NodeKind::EnumeratorJ: return 0;
    case NodeKind::Stream: return 1;
  }
  return 0;
}

bool known_node_kind(std::uint64_t k) { return k >= 1 && k <= 16; }

MachineCode encode_program(const Program& p) {
  BitWriter w;
  w.bit(false);
  w.natural(nat(p.size()));
  for (const auto& ins : p.instructions()) {
    w.natural(nat(static_cast<std::uint64_t>(ins.op)));
    w.natural(nat(ins.reg));
    w.natural(nat(ins.arg));
    w.natural(ins.constant);
  }
  return {w.finish()};
}

MachineCode encode_node(const Node& n) {
  BitWriter w;
  w.bit(true);
  w.natural(nat(static_cast<std::uint64_t>(n.kind)));
  for (const auto& a : n.args) w.natural(a);
  return {w.finish()};
}

MachineCode encode(const CodeBody& body) {
  return std::visit(
      [](const auto& b) -> MachineCode {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, Program>)
          return encode_program(b);
        else
          return encode_node(b);
      },
      body);
}

namespace {

std::optional<std::uint32_t> small(const std::optional<Natural>& n) {
  if (!n || *n > 0xffffffffUL) return std::nullopt;
  return static_cast<std::uint32_t>(n->get_ui());
}

}  // namespace

CodeBody decode(const MachineCode& code) {
  BitReader r(code.value);
  if (!r.ok()) throw InvalidCode("code has no marker bit");
  auto tag = r.bit();
  if (!tag) throw InvalidCode("truncated code");
  if (!*tag) {
    auto count = small(r.natural());
    if (!count) throw InvalidCode("bad instruction count");
    std::vector<Instruction> ins;
    for (std::uint32_t i = 0; i < *count; ++i) {
      auto op = small(r.natural());
      auto reg = small(r.natural());
      auto arg = small(r.natural());
      auto k = r.natural();
      if (!op || !reg || !arg || !k || *op > 5) throw InvalidCode("bad instruction");
      ins.push_back({static_cast<Op>(*op), *reg, *arg, *k});
      if (ins.size() > (1u << 24)) throw InvalidCode("program too long");
    }
    if (!r.done()) throw InvalidCode("trailing bits");
    Program p(std::move(ins));
    try {
      validate(p);
    } catch (const ProgramError& e) {
      throw InvalidCode(e.what());
    }
    return p;
  }
  auto kind = r.natural();
  if (!kind || *kind > 1000 || !known_node_kind(kind->get_ui())) throw InvalidCode("unknown node kind");
  Node n{static_cast<NodeKind>(kind->get_ui()), {}};
  for (std::size_t i = 0; i < node_arity(n.kind); ++i) {
    auto a = r.natural();
    if (!a) throw InvalidCode("truncated node");
    n.args.push_back(*a);
  }
  if (!r.done()) throw InvalidCode("trailing bits");
  return n;
}

bool is_valid_code(const Natural& n) {
  try {
    decode({n});
    return true;
  } catch (const InvalidCode&) {
    return false;
  }
}

}  // namespace tc
