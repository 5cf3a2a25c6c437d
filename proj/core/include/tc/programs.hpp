#pragma once

// Counter-machine assembler and the stock programs used throughout.

#include <cstdint>
#include <vector>

#include "tc/machine.hpp"

namespace tc {

class Assembler {
 public:
  using Label = std::uint32_t;

  Label label();
  void bind(Label l);

  void inc(std::uint32_t r);
  void decjz(std::uint32_t r, Label target);
  void load(std::uint32_t r, const Natural& k);
  void copy(std::uint32_t dst, std::uint32_t src);
  void jmp(Label target);
  void halt(std::uint32_t r);
  /// Appends raw instructions; jump targets are shifted by the current offset.
  void splice(const Program& p, Label exit);

  // Macros. `tmp` registers must be zero on entry and are zero on exit.
  void clear(std::uint32_t r);
  /// dst += src, src preserved.
  void add(std::uint32_t dst, std::uint32_t src, std::uint32_t tmp);
  /// dst := pair(a, b); a and b preserved. Needs three zeroed temporaries.
  void pair(std::uint32_t dst, std::uint32_t a, std::uint32_t b, std::uint32_t t1,
            std::uint32_t t2, std::uint32_t t3);
  /// (a, b) := unpair(z), consuming z. Diverges on z == 0.
  void unpair(std::uint32_t z, std::uint32_t a, std::uint32_t b);
  void diverge();

  Program build() const;

 private:
  struct Pending {
    Instruction ins;
    bool patch = false;
    Label target = 0;
  };
  std::vector<Pending> code_;
  std::vector<std::int64_t> labels_;
};

namespace programs {

Program identity();
Program successor();
Program diverge();
Program constant(const Natural& k);
/// Halts only on input `at`, with output `value`.
Program point(const Natural& at, const Natural& value);
/// Two-input programs read pair(a, b) from r0.
Program project_first();
Program project_second();
Program addition();

}  // namespace programs

}  // namespace tc
